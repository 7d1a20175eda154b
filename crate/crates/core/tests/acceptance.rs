//! The eight end-to-end acceptance criteria, checked exactly. Run with
//! `--nocapture` to see one PASS/FAIL line per criterion.

mod common;

use std::sync::Arc;

use common::{
    naive_relations, oracle_matrix_rank, oracle_rank, oracle_square_dim, r, sl2_constants,
};
use xmodlie::braid::{
    braided_center, braided_commutator, classify_braided_extension, is_perfect_braided,
    is_perfect_xmod, non_perfect_witness, verify_braiding,
};
use xmodlie::cli::{cmd_demo, FieldValue, Workspace};
use xmodlie::uce::{
    check_perfect_base_lemmas, compare_uce, compatible_uce, mediating_morphism, uniqueness_probe,
    universal_central_extension, ProbeOutcome, UceResult,
};
use xmodlie::{BraidedMorphism, BraidedXMod, LieAlgebra, RatMatrix, Rational, TensorPresentation};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn kernel_dim(m: &RatMatrix) -> usize {
    m.cols() - oracle_matrix_rank(m.rows(), m.cols(), m.entries())
}

fn matrices_equal(a: &RatMatrix, b: &RatMatrix) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries()
}

/// `f ∘ g` computed entrywise, independent of the morphism composition code.
fn composite_equals(
    f: &BraidedMorphism,
    g: &BraidedMorphism,
    target: &BraidedMorphism,
) -> Result<bool, String> {
    let c1 = ok(f.f1.matrix.mul(&g.f1.matrix))?;
    let c2 = ok(f.f2.matrix.mul(&g.f2.matrix))?;
    Ok(matrices_equal(&c1, &target.f1.matrix) && matrices_equal(&c2, &target.f2.matrix))
}

fn workspace() -> Result<Workspace, String> {
    ok(Workspace::builtin())
}

fn criterion_1() -> Outcome {
    let report = ok(cmd_demo("k2k3"))?;
    ensure!(report.ok, "demo report not ok: {:?}", report.warnings);
    let expect_bool = [
        ("extension", true),
        ("compatible_central", true),
        ("central", false),
    ];
    for (k, v) in expect_bool {
        ensure!(
            report.value("k2k3", k) == Some(&FieldValue::Bool(v)),
            "{k}: got {:?}, expected {v}",
            report.value("k2k3", k)
        );
    }
    let expect_count = [
        ("braided_center.dim", 0),
        ("base_center.dim", 3),
        ("stabilizer.dim", 3),
        ("fixed_points.dim", 9),
        ("ker_pi.dim", 1),
        ("ker_pi_tensor.dim", 5),
    ];
    for (k, v) in expect_count {
        ensure!(
            report.value("k2k3", k) == Some(&FieldValue::Count(v)),
            "{k}: got {:?}, expected {v}",
            report.value("k2k3", k)
        );
    }
    // Kernels recomputed by the oracle from the raw maps.
    let ws = workspace()?;
    let f = &ok(ws.morphism("pi.tensor"))?.morphism;
    ensure!(kernel_dim(&f.f1.matrix) == 5, "oracle ker π⊗π ≠ 5");
    ensure!(kernel_dim(&f.f2.matrix) == 1, "oracle ker π ≠ 1");
    Ok("K2/K3 counterexample: compatible central, not central".into())
}

fn criterion_2() -> Outcome {
    for n in 1..=4 {
        let k = Arc::new(LieAlgebra::abelian(n));
        let tp = ok(TensorPresentation::square(&k))?;
        ensure!(
            tp.dim() == n * n,
            "dim K{n}⊗K{n} = {}, expected {}",
            tp.dim(),
            n * n
        );
        ensure!(
            oracle_square_dim(n, &vec![r(0); n * n * n]) == n * n,
            "oracle disagrees for n = {n}"
        );
        ensure!(tp.algebra().is_abelian(), "K{n}⊗K{n} has a nonzero bracket");
        ensure!(
            tp.algebra()
                .structure_constants()
                .iter()
                .all(|c| *c == r(0)),
            "nonzero structure constant in K{n}⊗K{n}"
        );
    }
    Ok("K^n ⊗ K^n has dimension n² and zero bracket for n = 1..4".into())
}

fn criterion_3() -> Outcome {
    let ws = workspace()?;
    let rows = naive_relations(
        3,
        &sl2_constants(),
        3,
        &sl2_constants(),
        &sl2_constants(),
        &sl2_constants(),
    );
    ensure!(rows.len() == 54, "oracle relation count {}", rows.len());
    ensure!(
        oracle_rank(&rows) == 6,
        "oracle relation rank {}",
        oracle_rank(&rows)
    );

    let s = ok(ws.braided("sl2.id"))?;
    let u = match ok(universal_central_extension(s))? {
        UceResult::Uce(u) => u,
        UceResult::NotPerfect(c) => return Err(format!("sl2 reported not perfect: {c:?}")),
    };
    ensure!(
        u.phi.square.algebra().dim() == 3,
        "dim sl2⊗sl2 = {}",
        u.phi.square.algebra().dim()
    );
    ensure!(
        u.phi.square.presentation.relations().dim() == 6,
        "library relation rank differs"
    );
    let class = ok(classify_braided_extension(&u.phi.morphism))?.class;
    ensure!(class.is_central(), "Φ is not central on sl2");
    ensure!(
        u.ker_top.dim() == 0 && u.ker_base.dim() == 0,
        "nonzero kernels on sl2"
    );
    ensure!(
        kernel_dim(&u.phi.morphism.f1.matrix) == 0,
        "oracle ker Φ1 ≠ 0"
    );
    ensure!(
        kernel_dim(&u.phi.morphism.f2.matrix) == 0,
        "oracle ker Φ2 ≠ 0"
    );

    let h = ok(ws.braided("h3.id"))?;
    ensure!(
        matches!(
            ok(universal_central_extension(h))?,
            UceResult::NotPerfect(_)
        ),
        "h3 not reported as not perfect"
    );
    let w = ok(non_perfect_witness(&BraidedMorphism::identity(h)))?;
    ensure!(!w.h.same_maps(&w.g), "witness maps coincide");
    let psi = BraidedMorphism::identity(h);
    ensure!(composite_equals(&w.extension, &w.h, &psi)?, "π¹ ∘ h ≠ Ψ");
    ensure!(composite_equals(&w.extension, &w.g, &psi)?, "π¹ ∘ g ≠ Ψ");
    Ok("sl2 UCE central with zero kernels (relation rank 6 of 54); h3 witness h ≠ g".into())
}

fn criterion_4() -> Outcome {
    let ws = workspace()?;
    let mut checked = Vec::new();
    for name in ws.braided_names() {
        let bx = ok(ws.braided(name))?;
        if !is_perfect_xmod(bx) {
            continue;
        }
        let cu = ok(compatible_uce(bx))?;
        if let Err(v) = verify_braiding(&cu.source) {
            return Err(format!("{name}: braiding on N⊗M fails {v}"));
        }
        let class = ok(classify_braided_extension(&cu.c))?.class;
        ensure!(
            class.is_compatible_central(),
            "{name}: c not compatible central"
        );
        checked.push(name.to_string());
    }
    ensure!(
        checked.iter().any(|n| n == "sl2.id") && checked.iter().any(|n| n == "sl2.tensor"),
        "expected sl2.id and sl2.tensor among perfect inputs, got {checked:?}"
    );
    Ok(format!(
        "compatible central extension verified on {}",
        checked.join(", ")
    ))
}

/// Structure constants of `N ⊗ M` inputs for the compatible construction,
/// with `m ⋆ n = [∂m, n]` built here from the boundary matrix.
fn oracle_nm_dim(bx: &BraidedXMod) -> usize {
    let (m, n) = (bx.top(), bx.base());
    let (dm, dn) = (m.dim(), n.dim());
    let cn = n.structure_constants();
    let d = &bx.xmod.boundary.matrix;
    let mut star = vec![r(0); dm * dn * dn];
    for i in 0..dm {
        for j in 0..dn {
            for k in 0..dn {
                let mut acc = Rational::from_integer(0.into());
                for l in 0..dn {
                    acc += d.get(l, i) * &cn[(l * dn + j) * dn + k];
                }
                star[(i * dn + j) * dn + k] = acc;
            }
        }
    }
    let rows = naive_relations(
        dn,
        cn,
        dm,
        m.structure_constants(),
        bx.xmod.action.tensor(),
        &star,
    );
    dn * dm - oracle_rank(&rows)
}

fn criterion_5() -> Outcome {
    let ws = workspace()?;
    let t = ok(ws.braided("sl2.tensor"))?;
    let cmp = ok(compare_uce(t))?;
    let phi = &cmp.uce.phi.morphism;
    let id_phi = BraidedMorphism::identity(&phi.source);
    let id_c = BraidedMorphism::identity(&cmp.compatible.source);
    ensure!(
        composite_equals(&cmp.h_prime, &cmp.h, &id_phi)?,
        "h' ∘ h ≠ id"
    );
    ensure!(
        composite_equals(&cmp.h, &cmp.h_prime, &id_c)?,
        "h ∘ h' ≠ id"
    );
    ensure!(
        composite_equals(&cmp.compatible.c, &cmp.h, phi)?,
        "Φ ≠ c ∘ h"
    );
    ensure!(
        composite_equals(phi, &cmp.h_prime, &cmp.compatible.c)?,
        "c ≠ Φ ∘ h'"
    );
    let nm = cmp.compatible.nm.dim();
    let mm = t.top().dim();
    ensure!(nm == 3 && mm == 3, "dims {nm} and {mm}, expected 3 and 3");
    ensure!(
        oracle_nm_dim(t) == 3,
        "oracle dim of sl2⊗(sl2⊗sl2) = {}",
        oracle_nm_dim(t)
    );
    ensure!(
        oracle_square_dim(3, &sl2_constants()) == 3,
        "oracle dim sl2⊗sl2 ≠ 3"
    );
    Ok("sl2⊗(sl2⊗sl2) ≅ sl2⊗sl2, both of dimension 3, via mutually inverse h, h'".into())
}

/// Dimensions of `Z_B(N)`, `Z(N) ∩ st_N(M)`, `M^N`, `D_N(M)` and `B_N(M)`
/// from the raw tensors.
fn oracle_center_dims(bx: &BraidedXMod) -> [usize; 5] {
    let (dm, dn) = (bx.top().dim(), bx.base().dim());
    let b = bx.braiding.tensor();
    let a = bx.xmod.action.tensor();
    let cn = bx.base().structure_constants();
    let slice = |t: &[Rational], idx: usize, w: usize| t[idx * w..(idx + 1) * w].to_vec();
    // One row per basis element listing every constraint value; the kernel
    // dimension is the width minus the rank.
    let kernel = |width: usize, f: &dyn Fn(usize) -> Vec<Rational>| {
        let rows: Vec<Vec<Rational>> = (0..width).map(f).collect();
        width - oracle_rank(&rows)
    };
    let zb = kernel(dn, &|x| {
        (0..dn)
            .flat_map(|o| [slice(b, x * dn + o, dm), slice(b, o * dn + x, dm)].concat())
            .collect()
    });
    let zst = kernel(dn, &|x| {
        let mut v: Vec<Rational> = (0..dn).flat_map(|o| slice(cn, x * dn + o, dn)).collect();
        v.extend((0..dm).flat_map(|i| slice(a, x * dm + i, dm)));
        v
    });
    let fp = kernel(dm, &|x| {
        (0..dn).flat_map(|o| slice(a, o * dm + x, dm)).collect()
    });

    let values: Vec<Vec<Rational>> = (0..dn * dm).map(|i| slice(a, i, dm)).collect();
    let d_dim = oracle_rank(&values);

    let cm = bx.top().structure_constants();
    let mut span: Vec<Vec<Rational>> = (0..dn * dn).map(|i| slice(b, i, dm)).collect();
    loop {
        let before = oracle_rank(&span);
        let mut next = span.clone();
        for x in &span {
            for y in &span {
                let mut z = vec![r(0); dm];
                for (i, xi) in x.iter().enumerate() {
                    for (j, yj) in y.iter().enumerate() {
                        for (k, zk) in z.iter_mut().enumerate() {
                            *zk += xi * yj * &cm[(i * dm + j) * dm + k];
                        }
                    }
                }
                next.push(z);
            }
        }
        if oracle_rank(&next) == before {
            break;
        }
        span = next;
    }
    [zb, zst, fp, d_dim, oracle_rank(&span)]
}

fn criterion_6() -> Outcome {
    let ws = workspace()?;
    let mut perfect_base = 0;
    for name in ws.braided_names() {
        let bx = ok(ws.braided(name))?;
        let center = braided_center(bx);
        let comm = braided_commutator(bx);
        let [zb, zst, fp, d_dim, b_dim] = oracle_center_dims(bx);
        ensure!(
            center.submodule.base.dim() == zb,
            "{name}: Z_B(N) dim vs oracle {zb}"
        );
        ensure!(
            center.center_stabilizer.dim() == zst,
            "{name}: Z(N)∩st dim vs oracle {zst}"
        );
        ensure!(
            center.submodule.top.dim() == fp,
            "{name}: M^N dim vs oracle {fp}"
        );
        ensure!(
            comm.action_span.dim() == d_dim,
            "{name}: D_N(M) dim vs oracle {d_dim}"
        );
        ensure!(
            comm.submodule.top.dim() == b_dim,
            "{name}: B_N(M) dim vs oracle {b_dim}"
        );
        ensure!(center.characterization_holds, "{name}: M^N ≠ ∂⁻¹(Z_B(N))");
        ensure!(
            center.contained_in_center && zb <= zst,
            "{name}: Z_B(N) ⊄ Z(N)∩st"
        );
        ensure!(
            comm.inclusions_hold && d_dim <= b_dim,
            "{name}: [M,M] ⊆ D ⊆ B fails"
        );
        ensure!(
            center.submodule.is_crossed_submodule(),
            "{name}: braided center not a submodule"
        );
        ensure!(
            comm.submodule.is_crossed_submodule(),
            "{name}: braided commutator not a submodule"
        );
        match ok(check_perfect_base_lemmas(bx))? {
            Some(l) => {
                ensure!(
                    d_dim == b_dim && zb == zst,
                    "{name}: oracle equalities fail on perfect base"
                );
                ensure!(
                    l.commutator_dim == b_dim && l.braided_center_dim == zb,
                    "{name}: lemma dims"
                );
                perfect_base += 1;
            }
            None => ensure!(
                !bx.base().is_perfect(),
                "{name}: lemmas skipped on a perfect base"
            ),
        }
    }
    ensure!(perfect_base > 0, "no corpus instance with a perfect base");
    Ok(format!(
        "center and commutator identities hold on all {} corpus instances",
        ws.braided_names().len()
    ))
}

fn criterion_7_and_8() -> Result<(String, String), String> {
    let ws = workspace()?;
    let mut mediated = Vec::new();
    let mut perturbed_any = false;
    for name in ws.morphism_names() {
        let f = &ok(ws.morphism(name))?.morphism;
        if !ok(classify_braided_extension(f))?.class.is_central() || !is_perfect_braided(&f.target)
        {
            continue;
        }
        let u = match ok(universal_central_extension(&f.target))? {
            UceResult::Uce(u) => u,
            UceResult::NotPerfect(_) => {
                return Err(format!("{name}: perfect target reported not perfect"))
            }
        };
        let m = ok(mediating_morphism(f, &u))?;
        let phi = &u.phi.morphism;
        ensure!(m.h.check().is_ok(), "{name}: h is not a braided morphism");
        ensure!(composite_equals(f, &m.h, phi)?, "{name}: f ∘ h ≠ Φ");
        ensure!(composite_equals(f, &m.perturbed, phi)?, "{name}: f ∘ h̃ ≠ Φ");
        ensure!(
            m.h.same_maps(&m.perturbed),
            "{name}: perturbed section changes h"
        );
        perturbed_any |= m.perturbation_dim > 0;
        let probe = ok(uniqueness_probe(f, &m.h, &m.perturbed, phi))?;
        ensure!(
            probe == ProbeOutcome::Equal,
            "{name}: probe {probe:?} over a perfect source"
        );
        mediated.push(name.to_string());
    }
    ensure!(
        !mediated.is_empty(),
        "no corpus central extension over a perfect target"
    );
    ensure!(
        perturbed_any,
        "no case exercised a nonzero section perturbation"
    );

    let h = ok(ws.braided("h3.id"))?;
    let psi = BraidedMorphism::identity(h);
    let w = ok(non_perfect_witness(&psi))?;
    let probe = ok(uniqueness_probe(&w.extension, &w.h, &w.g, &psi))?;
    ensure!(
        matches!(probe, ProbeOutcome::Differ(..)),
        "probe on h3 witness: {probe:?}"
    );
    Ok((
        format!("f ∘ h = Φ, section independent, for {}", mediated.join(", ")),
        "probe Equal over perfect sources, Differ on the h3 witness; full universality is checked only on these instances".into(),
    ))
}

fn report(n: usize, outcome: &Outcome) -> bool {
    match outcome {
        Ok(msg) => println!("criterion {n}: PASS {msg}"),
        Err(msg) => println!("criterion {n}: FAIL {msg}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance_criteria() {
    let (c7, c8) = match criterion_7_and_8() {
        Ok((a, b)) => (Ok(a), Ok(b)),
        Err(e) => (Err(e.clone()), Err(e)),
    };
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        c7,
        c8,
    ];
    let passed = outcomes
        .iter()
        .enumerate()
        .filter(|(i, o)| report(i + 1, o))
        .count();
    assert_eq!(
        passed,
        outcomes.len(),
        "{} of {} criteria failed",
        outcomes.len() - passed,
        outcomes.len()
    );
}
