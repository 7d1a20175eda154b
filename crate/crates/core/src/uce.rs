//! Universal central extensions of braided crossed modules.
//!
//! For a braided crossed module `(M --∂--> N, {-,-})` the candidate is
//! `Φ: (N⊗N --id--> N⊗N) -> (M -> N)` with `Φ1(n⊗n') = {n, n'}` and
//! `Φ2(n⊗n') = [n, n']`. It is a central extension exactly when the base is
//! perfect. A second construction on `N⊗M -> N⊗N` gives a compatible
//! central extension `c`, and the two are compared explicitly.
//!
//! Every claimed property is re-checked at runtime and surfaces as
//! [`Error::Assertion`] if it fails.

use std::sync::Arc;

use crate::braid::{
    braided_center, braided_center_base, braided_commutator, braiding_span,
    classify_braided_extension, first_difference, is_perfect_braided, is_perfect_xmod,
    BraidedMorphism, BraidedXMod, Braiding,
};
use crate::error::{Error, Result};
use crate::exactla::{add_vectors, preimage, unit_vector, RatMatrix, Rational, Subspace, Vector};
use crate::liealg::{LieAlgebra, LieHom};
use crate::natensor::{
    diagonal_action, generator_map, generator_values, induced_hom, TensorPresentation,
};
use crate::xmod::{Action, CrossedModule};

fn assertion(msg: impl Into<String>) -> Error {
    Error::Assertion(msg.into())
}

/// `N⊗N` together with `(N⊗N --id--> N⊗N, ad, [-,-])`.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    pub presentation: TensorPresentation,
    pub braided: BraidedXMod,
}

impl TensorSquare {
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.presentation.algebra()
    }
}

pub fn tensor_square_braided(n: &Arc<LieAlgebra>) -> Result<TensorSquare> {
    let presentation = TensorPresentation::square(n)?;
    let l = presentation.algebra().clone();
    let braided = BraidedXMod::new(CrossedModule::identity(&l), Braiding::bracket(&l))?
        .with_name(format!("id({})", l.name()));
    Ok(TensorSquare {
        presentation,
        braided,
    })
}

/// `(L⊗L --∂--> L)` with `∂(m⊗m') = [m, m']`, the diagonal adjoint action
/// and braiding `{m, m'} = m⊗m'`.
pub fn tensor_braided_xmod(l: &Arc<LieAlgebra>) -> Result<(TensorPresentation, BraidedXMod)> {
    let tp = TensorPresentation::square(l)?;
    let d = l.dim();
    let brackets = generator_values(&tp, d, |i, j| Ok(l.basis_bracket(i, j).to_vec()))?;
    let boundary = generator_map(&tp, brackets, l)?.hom;
    let ads = (0..d)
        .map(|j| l.ad_matrix(&unit_vector(d, j)))
        .collect::<Result<Vec<_>>>()?;
    let action = diagonal_action(&tp, l, &ads, &ads)?;
    let name = format!("{}->{}", tp.algebra().name(), l.name());
    let x = CrossedModule::new(name, boundary, action)?;
    let braiding = Braiding::from_fn(d, tp.dim(), |i, j| Ok(tp.symbol(i, j)))?;
    let bx = BraidedXMod::new(x, braiding)?;
    Ok((tp, bx))
}

/// `Φ = (Φ1, Φ2)` with the tensor square it is defined on.
#[derive(Clone, Debug)]
pub struct Phi {
    pub square: TensorSquare,
    pub morphism: BraidedMorphism,
}

pub fn build_phi(bx: &BraidedXMod) -> Result<Phi> {
    let n = bx.base();
    let square = tensor_square_braided(n)?;
    let tp = &square.presentation;
    let v1 = generator_values(tp, bx.top().dim(), |j, j2| {
        Ok(bx.braiding.basis(j, j2).to_vec())
    })?;
    let v2 = generator_values(tp, n.dim(), |j, j2| Ok(n.basis_bracket(j, j2).to_vec()))?;
    let phi1 = generator_map(tp, v1, bx.top())?.hom;
    let phi2 = generator_map(tp, v2, n)?.hom;

    if phi1.image() != braiding_span(bx) {
        return Err(assertion(
            "image of the first component differs from B_N(M)",
        ));
    }
    if phi2.image() != n.derived_subalgebra() {
        return Err(assertion(
            "image of the second component differs from [N, N]",
        ));
    }
    let src = &square.braided;
    if !src.xmod.fixed_points().contains_subspace(&phi1.kernel())? {
        return Err(assertion(
            "kernel of the first component is not fixed by the action",
        ));
    }
    if !braided_center_base(src).contains_subspace(&phi2.kernel())? {
        return Err(assertion(
            "kernel of the second component is not in the braided center",
        ));
    }
    let morphism = BraidedMorphism {
        source: src.clone(),
        target: bx.clone(),
        f1: phi1,
        f2: phi2,
    };
    morphism
        .check()
        .map_err(|v| assertion(format!("Φ is not a braided morphism: {v}")))?;
    Ok(Phi { square, morphism })
}

#[derive(Clone, Debug)]
pub struct Uce {
    pub phi: Phi,
    pub ker_top: Subspace,
    pub ker_base: Subspace,
}

/// Which of `M = B_N(M)` and `N = [N, N]` fails, by codimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotPerfectCertificate {
    pub top_codim: usize,
    pub base_codim: usize,
}

#[derive(Clone, Debug)]
pub enum UceResult {
    Uce(Box<Uce>),
    NotPerfect(NotPerfectCertificate),
}

pub fn universal_central_extension(bx: &BraidedXMod) -> Result<UceResult> {
    if !is_perfect_braided(bx) {
        let comm = braided_commutator(bx);
        return Ok(UceResult::NotPerfect(NotPerfectCertificate {
            top_codim: comm.submodule.top.codim(),
            base_codim: comm.submodule.base.codim(),
        }));
    }
    let phi = build_phi(bx)?;
    let class = classify_braided_extension(&phi.morphism)?;
    if !class.class.is_central() {
        return Err(assertion(
            "Φ over a perfect braided crossed module is not central",
        ));
    }
    Ok(UceResult::Uce(Box::new(Uce {
        ker_top: class.ker_top,
        ker_base: class.ker_base,
        phi,
    })))
}

fn sections_of(f: &LieHom) -> Result<RatMatrix> {
    let d = f.target.dim();
    let cols = (0..d)
        .map(|j| {
            preimage(&f.matrix, &unit_vector(d, j)).ok_or_else(|| {
                Error::Precondition(format!("{} is not surjective", f.target.name()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_columns(f.source.dim(), &cols)
}

/// `h1(e_j⊗e_j2) = {s e_j, s e_j2}`, `h2(e_j⊗e_j2) = [s e_j, s e_j2]` from
/// a section `s` of `f2`.
fn mediate(phi: &Phi, x: &BraidedXMod, sections: &RatMatrix) -> Result<BraidedMorphism> {
    let tp = &phi.square.presentation;
    let s: Vec<Vector> = (0..sections.cols()).map(|j| sections.column(j)).collect();
    let v1 = generator_values(tp, x.top().dim(), |j, j2| x.braid(&s[j], &s[j2]))?;
    let v2 = generator_values(tp, x.base().dim(), |j, j2| x.base().bracket(&s[j], &s[j2]))?;
    let h = BraidedMorphism {
        source: phi.square.braided.clone(),
        target: x.clone(),
        f1: generator_map(tp, v1, x.top())?.hom,
        f2: generator_map(tp, v2, x.base())?.hom,
    };
    h.check()
        .map_err(|v| assertion(format!("mediating morphism: {v}")))?;
    Ok(h)
}

/// The mediating morphism and its recomputation from a perturbed section.
#[derive(Clone, Debug)]
pub struct Mediation {
    pub h: BraidedMorphism,
    pub perturbed: BraidedMorphism,
    /// `dim ker f2`; zero means the section was unique.
    pub perturbation_dim: usize,
}

/// `h^X` with `f ∘ h^X = Φ` for a central extension `f: X -> bx`.
pub fn mediating_morphism(f: &BraidedMorphism, uce: &Uce) -> Result<Mediation> {
    let phi = &uce.phi;
    let bx = &phi.morphism.target;
    if !f.target.top().same_structure(bx.top()) || !f.target.base().same_structure(bx.base()) {
        return Err(Error::Precondition(
            "extension and Φ have different targets".into(),
        ));
    }
    if !is_perfect_braided(bx) {
        return Err(Error::NotPerfect(format!("{} is not perfect", bx.name())));
    }
    if !classify_braided_extension(f)?.class.is_central() {
        return Err(Error::Precondition(format!(
            "{} -> {} is not a central extension",
            f.source.name(),
            f.target.name()
        )));
    }
    let s = sections_of(&f.f2)?;
    let h = mediate(phi, &f.source, &s)?;
    if !f.compose(&h)?.same_maps(&phi.morphism) {
        return Err(assertion("f ∘ h differs from Φ"));
    }

    let ker = f.f2.kernel();
    let kvecs = ker.basis_vectors();
    let mut shifted = Vec::with_capacity(s.cols());
    for j in 0..s.cols() {
        let col = s.column(j);
        shifted.push(match kvecs.get(j % kvecs.len().max(1)) {
            Some(k) => add_vectors(&col, k),
            None => col,
        });
    }
    let s2 = RatMatrix::from_columns(s.rows(), &shifted)?;
    let perturbed = mediate(phi, &f.source, &s2)?;
    if !perturbed.same_maps(&h) {
        return Err(assertion(
            "mediating morphism depends on the chosen section",
        ));
    }
    Ok(Mediation {
        h,
        perturbed,
        perturbation_dim: ker.dim(),
    })
}

/// The compatible central extension `c: (N⊗M -> N⊗N) -> (M -> N)`.
#[derive(Clone, Debug)]
pub struct CompatibleUce {
    /// `N⊗M` for `N` acting on `M` and `m⋆n = [∂m, n]`.
    pub nm: TensorPresentation,
    pub square: TensorSquare,
    pub source: BraidedXMod,
    pub c: BraidedMorphism,
    pub ker_top: Subspace,
    pub ker_base: Subspace,
}

pub fn compatible_uce(bx: &BraidedXMod) -> Result<CompatibleUce> {
    if !is_perfect_xmod(bx) {
        return Err(Error::NotPerfect(format!(
            "{} is not perfect as a crossed module",
            bx.name()
        )));
    }
    let (m, n) = (bx.top(), bx.base());
    let (dm, dn) = (m.dim(), n.dim());
    let x = &bx.xmod;
    let star_mats = (0..dm)
        .map(|i| n.ad_matrix(&x.boundary.matrix.column(i)))
        .collect::<Result<Vec<_>>>()?;
    let star = Action::from_matrices(m.clone(), n.clone(), &star_mats)?;
    let nm = TensorPresentation::build(&x.action, &star)?;
    let square = tensor_square_braided(n)?;
    let nn = &square.presentation;

    let brackets = generator_values(nn, dn, |j, j2| Ok(n.basis_bracket(j, j2).to_vec()))?;
    let c2 = generator_map(nn, brackets, n)?.hom;
    let braids = generator_values(nn, dm, |j, j2| Ok(bx.braiding.basis(j, j2).to_vec()))?;
    let phi1 = generator_map(nn, braids, m)?.hom;

    let boundary = induced_hom(&nm, nn, &LieHom::identity(n), &x.boundary)?;
    let nus: Vec<Vector> = (0..nn.dim()).map(|a| c2.matrix.column(a)).collect();
    let left = nus
        .iter()
        .map(|v| n.ad_matrix(v))
        .collect::<Result<Vec<_>>>()?;
    let right = nus
        .iter()
        .map(|v| x.action.matrix_of(v))
        .collect::<Result<Vec<_>>>()?;
    let action = diagonal_action(&nm, nn.algebra(), &left, &right)?;
    let xm = CrossedModule::new(
        format!("{}->{}", nm.algebra().name(), nn.algebra().name()),
        boundary,
        action,
    )?;
    let phi1_cols: Vec<Vector> = (0..nn.dim()).map(|b| phi1.matrix.column(b)).collect();
    let braiding = Braiding::from_fn(nn.dim(), nm.dim(), |a, b| {
        nm.pure_tensor(&nus[a], &phi1_cols[b])
    })?;
    let source = BraidedXMod::new(xm, braiding)?;

    let actions = generator_values(&nm, dm, |j, i| Ok(x.action.act_basis(j, i).to_vec()))?;
    let c1 = generator_map(&nm, actions, m)?.hom;
    let c = BraidedMorphism {
        source: source.clone(),
        target: bx.clone(),
        f1: c1,
        f2: c2,
    };
    let class = classify_braided_extension(&c)?;
    if !class.class.is_compatible_central() {
        return Err(assertion("c is not a compatible central extension"));
    }
    Ok(CompatibleUce {
        nm,
        square,
        source,
        c,
        ker_top: class.ker_top,
        ker_base: class.ker_base,
    })
}

/// `h: Φ -> c` and `h': c -> Φ` with all four identities checked.
#[derive(Clone, Debug)]
pub struct UceComparison {
    pub uce: Uce,
    pub compatible: CompatibleUce,
    pub h: BraidedMorphism,
    pub h_prime: BraidedMorphism,
}

pub fn compare_uce(bx: &BraidedXMod) -> Result<UceComparison> {
    if !is_perfect_braided(bx) {
        return Err(Error::NotPerfect(format!("{} is not perfect", bx.name())));
    }
    if !is_perfect_xmod(bx) {
        return Err(assertion(
            "perfect braided crossed module with perfect base is not perfect as a crossed module",
        ));
    }
    let uce = match universal_central_extension(bx)? {
        UceResult::Uce(u) => *u,
        UceResult::NotPerfect(_) => return Err(assertion("perfect input reported as not perfect")),
    };
    let compatible = compatible_uce(bx)?;
    let h = mediating_morphism(&compatible.c, &uce)?.h;

    // h'1(n⊗m) = [n̄, m̄] with Φ2(n̄) = n, Φ1(m̄) = m; h'2(n⊗n') = [n̄, n̄'].
    let phi = &uce.phi.morphism;
    let nbar = sections_of(&phi.f2)?;
    let mbar = sections_of(&phi.f1)?;
    let sq = uce.phi.square.algebra().clone();
    let bracket = |a: Vector, b: Vector| sq.bracket(&a, &b);
    let nm = &compatible.nm;
    let v1 = generator_values(nm, sq.dim(), |j, i| bracket(nbar.column(j), mbar.column(i)))?;
    let v2 = generator_values(&uce.phi.square.presentation, sq.dim(), |j, j2| {
        bracket(nbar.column(j), nbar.column(j2))
    })?;
    let h_prime = BraidedMorphism {
        source: compatible.source.clone(),
        target: phi.source.clone(),
        f1: generator_map(nm, v1, &sq)?.hom,
        f2: generator_map(&uce.phi.square.presentation, v2, &sq)?.hom,
    };
    h_prime
        .check()
        .map_err(|v| assertion(format!("inverse comparison map: {v}")))?;

    let checks = [
        (
            h_prime
                .compose(&h)?
                .same_maps(&BraidedMorphism::identity(&phi.source)),
            "h' ∘ h = id",
        ),
        (
            h.compose(&h_prime)?
                .same_maps(&BraidedMorphism::identity(&compatible.source)),
            "h ∘ h' = id",
        ),
        (compatible.c.compose(&h)?.same_maps(phi), "Φ = c ∘ h"),
        (
            phi.compose(&h_prime)?.same_maps(&compatible.c),
            "c = Φ ∘ h'",
        ),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(assertion(format!("comparison fails: {what}")));
    }
    Ok(UceComparison {
        uce,
        compatible,
        h,
        h_prime,
    })
}

/// Coefficients `c_ij` (over `i < j`) with `sum c_ij [e_i, e_j] = v`, free
/// coefficients set to zero.
pub fn bracket_decomposition(
    l: &LieAlgebra,
    v: &[Rational],
) -> Result<Vec<((usize, usize), Rational)>> {
    let d = l.dim();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    let cols: Vec<Vector> = pairs
        .iter()
        .map(|&(i, j)| l.basis_bracket(i, j).to_vec())
        .collect();
    let m = RatMatrix::from_columns(d, &cols)?;
    let x = preimage(&m, v)
        .ok_or_else(|| Error::NotPerfect(format!("vector is not in [{0}, {0}]", l.name())))?;
    Ok(pairs
        .into_iter()
        .zip(x)
        .filter(|(_, c)| !num::Zero::is_zero(c))
        .collect())
}

/// Subspace dimensions behind the two equalities for a perfect base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerfectBaseLemmas {
    pub commutator_dim: usize,
    pub braided_center_dim: usize,
}

/// With `N = [N, N]`: `B_N(M) = D_N(M)` and `Z_B(N) = Z(N) ∩ st_N(M)`.
/// `None` when the base is not perfect.
pub fn check_perfect_base_lemmas(bx: &BraidedXMod) -> Result<Option<PerfectBaseLemmas>> {
    if !bx.base().is_perfect() {
        return Ok(None);
    }
    let comm = braided_commutator(bx);
    if let Some(w) = comm.submodule.top.containment_witness(&comm.action_span) {
        return Err(assertion(format!("B_N(M) ≠ D_N(M), witness {w:?}")));
    }
    if let Some(w) = comm.action_span.containment_witness(&comm.submodule.top) {
        return Err(assertion(format!("B_N(M) ≠ D_N(M), witness {w:?}")));
    }
    let center = braided_center(bx);
    let zb = &center.submodule.base;
    for (a, b) in [
        (zb, &center.center_stabilizer),
        (&center.center_stabilizer, zb),
    ] {
        if let Some(w) = a.containment_witness(b) {
            return Err(assertion(format!("Z_B(N) ≠ Z(N) ∩ st_N(M), witness {w:?}")));
        }
    }
    Ok(Some(PerfectBaseLemmas {
        commutator_dim: comm.submodule.top.dim(),
        braided_center_dim: zb.dim(),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeOutcome {
    Equal,
    /// `(component, column)` of the first difference.
    Differ(usize, usize),
}

/// Compares two candidates `g, h` with `f ∘ g = f ∘ h = Φ`. Over a perfect
/// source a difference is an error.
pub fn uniqueness_probe(
    f: &BraidedMorphism,
    g: &BraidedMorphism,
    h: &BraidedMorphism,
    phi: &BraidedMorphism,
) -> Result<ProbeOutcome> {
    for (name, cand) in [("g", g), ("h", h)] {
        if !f.compose(cand)?.same_maps(phi) {
            return Err(Error::Precondition(format!(
                "f ∘ {name} differs from the given map"
            )));
        }
    }
    match first_difference(g, h) {
        None => Ok(ProbeOutcome::Equal),
        Some((c, col)) if is_perfect_braided(&g.source) => Err(assertion(format!(
            "two mediating morphisms over a perfect source differ in component {c}, column {}",
            col + 1
        ))),
        Some((c, col)) => Ok(ProbeOutcome::Differ(c, col)),
    }
}
