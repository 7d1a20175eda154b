//! Braidings `{-,-}: N x N -> M` on crossed modules `∂: M -> N`, braided
//! centers and commutators, braided morphisms, and the extension and product
//! constructions built on them.

use std::sync::Arc;

use num::Zero;

use crate::error::{Axiom, Error, Result, Verdict, Violation};
use crate::exactla::{
    add_scaled, kernel_basis, sub_vectors, unit_vector, zero_vector, RatMatrix, Rational, Subspace,
    Vector,
};
use crate::liealg::{LieAlgebra, LieHom};
use crate::xmod::{
    product_xmod, quotient_xmod, verify_xmod, CrossedModule, CrossedSubmodule, XModMorphism,
};

/// Bilinear map `N x N -> M` stored as `b[j][j2][i]`:
/// `{e_j, e_j2} = sum_i b[j][j2][i] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    base_dim: usize,
    top_dim: usize,
    b: Vec<Rational>,
}

impl Braiding {
    pub fn new(base_dim: usize, top_dim: usize, b: Vec<Rational>) -> Result<Self> {
        let expected = base_dim * base_dim * top_dim;
        if b.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "braiding tensor".into(),
                expected,
                found: b.len(),
            });
        }
        Ok(Self {
            base_dim,
            top_dim,
            b,
        })
    }

    pub fn zero(base_dim: usize, top_dim: usize) -> Self {
        Self {
            base_dim,
            top_dim,
            b: vec![Rational::zero(); base_dim * base_dim * top_dim],
        }
    }

    /// `{n, n'} = [n, n']` on `(L --id--> L)`.
    pub fn bracket(l: &LieAlgebra) -> Self {
        Self {
            base_dim: l.dim(),
            top_dim: l.dim(),
            b: l.structure_constants().to_vec(),
        }
    }

    /// Builds the tensor from the values on basis pairs.
    pub fn from_fn(
        base_dim: usize,
        top_dim: usize,
        mut value: impl FnMut(usize, usize) -> Result<Vector>,
    ) -> Result<Self> {
        let mut b = Vec::with_capacity(base_dim * base_dim * top_dim);
        for j in 0..base_dim {
            for j2 in 0..base_dim {
                let v = value(j, j2)?;
                if v.len() != top_dim {
                    return Err(Error::DimensionMismatch {
                        context: "braiding value".into(),
                        expected: top_dim,
                        found: v.len(),
                    });
                }
                b.extend(v);
            }
        }
        Self::new(base_dim, top_dim, b)
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn top_dim(&self) -> usize {
        self.top_dim
    }

    pub fn tensor(&self) -> &[Rational] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(Zero::is_zero)
    }

    pub fn negated(&self) -> Self {
        Self {
            b: self.b.iter().map(|x| -x.clone()).collect(),
            ..self.clone()
        }
    }

    /// `{e_j, e_j2}`.
    pub fn basis(&self, j: usize, j2: usize) -> &[Rational] {
        let s = (j * self.base_dim + j2) * self.top_dim;
        &self.b[s..s + self.top_dim]
    }

    pub fn apply(&self, n: &[Rational], n2: &[Rational]) -> Result<Vector> {
        if n.len() != self.base_dim || n2.len() != self.base_dim {
            return Err(Error::DimensionMismatch {
                context: "braiding argument".into(),
                expected: 2 * self.base_dim,
                found: n.len() + n2.len(),
            });
        }
        let mut out = zero_vector(self.top_dim);
        for (j, x) in n.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j2, y) in n2.iter().enumerate() {
                if !y.is_zero() {
                    add_scaled(&mut out, &(x * y), self.basis(j, j2));
                }
            }
        }
        Ok(out)
    }
}

/// A crossed module together with a braiding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedXMod {
    pub xmod: CrossedModule,
    pub braiding: Braiding,
}

impl BraidedXMod {
    /// Assembles and verifies both the crossed module and the braiding.
    pub fn new(xmod: CrossedModule, braiding: Braiding) -> Result<Self> {
        let bx = Self::from_parts(xmod, braiding)?;
        verify_xmod(&bx.xmod).map_err(|v| Error::axiom(&bx.xmod.name, v))?;
        verify_braiding(&bx)
            .map_err(|v| Error::axiom(format!("braiding on {}", bx.xmod.name), v))?;
        Ok(bx)
    }

    /// Checks shapes only.
    pub fn from_parts(xmod: CrossedModule, braiding: Braiding) -> Result<Self> {
        if braiding.base_dim != xmod.base().dim() || braiding.top_dim != xmod.top().dim() {
            return Err(Error::DimensionMismatch {
                context: format!("braiding on {}", xmod.name),
                expected: xmod.base().dim() * xmod.base().dim() * xmod.top().dim(),
                found: braiding.b.len(),
            });
        }
        Ok(Self { xmod, braiding })
    }

    /// `(L --id--> L, ad, [-,-])`.
    pub fn identity(l: &Arc<LieAlgebra>) -> Self {
        Self {
            xmod: CrossedModule::identity(l),
            braiding: Braiding::bracket(l),
        }
    }

    pub fn name(&self) -> &str {
        &self.xmod.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.xmod.name = name.into();
        self
    }

    pub fn top(&self) -> &Arc<LieAlgebra> {
        self.xmod.top()
    }

    pub fn base(&self) -> &Arc<LieAlgebra> {
        self.xmod.base()
    }

    pub fn braid(&self, n: &[Rational], n2: &[Rational]) -> Result<Vector> {
        self.braiding.apply(n, n2)
    }
}

/// Checks BLie1 to BLie4 on basis pairs and BLie5, BLie6 on basis triples,
/// axiom by axiom.
pub fn verify_braiding(bx: &BraidedXMod) -> Verdict {
    let x = &bx.xmod;
    let (m, n) = (x.top(), x.base());
    let (dm, dn) = (m.dim(), n.dim());
    let br = &bx.braiding;
    let d = |v: &[Rational]| x.d(v).expect("dims");
    let en = |j| unit_vector(dn, j);
    let dcols: Vec<Vector> = (0..dm).map(|i| x.boundary.matrix.column(i)).collect();
    let fail = |a, w: &[usize]| Err(Violation::new(a, w.to_vec()));

    // BLie1: ∂{n, n'} = [n, n']
    for j in 0..dn {
        for j2 in 0..dn {
            if d(br.basis(j, j2)) != n.basis_bracket(j, j2) {
                return fail(Axiom::BLie1, &[j, j2]);
            }
        }
    }
    // BLie2: {∂m, ∂m'} = [m, m']
    for i in 0..dm {
        for i2 in 0..dm {
            if br.apply(&dcols[i], &dcols[i2]).expect("dims") != m.basis_bracket(i, i2) {
                return fail(Axiom::BLie2, &[i, i2]);
            }
        }
    }
    // BLie3: {∂m, n} = -n·m
    for (i, di) in dcols.iter().enumerate() {
        for j in 0..dn {
            let lhs = br.apply(di, &en(j)).expect("dims");
            let rhs: Vector = x
                .action
                .act_basis(j, i)
                .iter()
                .map(|v| -v.clone())
                .collect();
            if lhs != rhs {
                return fail(Axiom::BLie3, &[i, j]);
            }
        }
    }
    // BLie4: {n, ∂m} = n·m
    for j in 0..dn {
        for (i, di) in dcols.iter().enumerate() {
            if br.apply(&en(j), di).expect("dims") != x.action.act_basis(j, i) {
                return fail(Axiom::BLie4, &[j, i]);
            }
        }
    }
    // BLie5: {n, [n', n'']} = {[n, n'], n''} - {[n, n''], n'}
    for j in 0..dn {
        for j2 in 0..dn {
            for j3 in 0..dn {
                let lhs = br.apply(&en(j), n.basis_bracket(j2, j3)).expect("dims");
                let a = br.apply(n.basis_bracket(j, j2), &en(j3)).expect("dims");
                let b = br.apply(n.basis_bracket(j, j3), &en(j2)).expect("dims");
                if lhs != sub_vectors(&a, &b) {
                    return fail(Axiom::BLie5, &[j, j2, j3]);
                }
            }
        }
    }
    // BLie6: {[n, n'], n''} = {n, [n', n'']} - {n', [n, n'']}
    for j in 0..dn {
        for j2 in 0..dn {
            for j3 in 0..dn {
                let lhs = br.apply(n.basis_bracket(j, j2), &en(j3)).expect("dims");
                let a = br.apply(&en(j), n.basis_bracket(j2, j3)).expect("dims");
                let b = br.apply(&en(j2), n.basis_bracket(j, j3)).expect("dims");
                if lhs != sub_vectors(&a, &b) {
                    return fail(Axiom::BLie6, &[j, j2, j3]);
                }
            }
        }
    }
    Ok(())
}

/// `Z_B(N)`: kernel of `n ↦ ({n, e_j}, {e_j, n})_j`.
pub fn braided_center_base(bx: &BraidedXMod) -> Subspace {
    let br = &bx.braiding;
    let (dn, dm) = (br.base_dim, br.top_dim);
    let mut stacked = RatMatrix::zeros(2 * dn * dm, dn);
    for j2 in 0..dn {
        for j in 0..dn {
            for k in 0..dm {
                stacked.set(2 * j2 * dm + k, j, br.basis(j, j2)[k].clone());
                stacked.set((2 * j2 + 1) * dm + k, j, br.basis(j2, j)[k].clone());
            }
        }
    }
    kernel_basis(&stacked)
}

/// The braided center `(M^N, Z_B(N))` with the supporting subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedCenter {
    pub submodule: CrossedSubmodule,
    /// `Z(N) ∩ st_N(M)`, the non-braided center base.
    pub center_stabilizer: Subspace,
    /// `{m : ∂m ∈ Z_B(N)}`.
    pub boundary_preimage: Subspace,
    /// `M^N = {m : ∂m ∈ Z_B(N)}`.
    pub characterization_holds: bool,
    /// `Z_B(N) ⊆ Z(N) ∩ st_N(M)`.
    pub contained_in_center: bool,
}

pub fn braided_center(bx: &BraidedXMod) -> BraidedCenter {
    let x = &bx.xmod;
    let zb = braided_center_base(bx);
    let fixed = x.fixed_points();
    let to_quotient = zb.quotient().proj;
    let boundary_preimage = kernel_basis(&to_quotient.mul(&x.boundary.matrix).expect("dims"));
    let center_stabilizer = x.center().base;
    let contained_in_center = center_stabilizer.contains_subspace(&zb).expect("ambient");
    BraidedCenter {
        characterization_holds: boundary_preimage == fixed,
        contained_in_center,
        boundary_preimage,
        center_stabilizer,
        submodule: CrossedSubmodule::analyze(x, fixed, zb),
    }
}

/// The braided commutator `(B_N(M), [N, N])` with the checks around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedCommutator {
    pub submodule: CrossedSubmodule,
    /// `D_N(M)`, generated by the action values.
    pub action_span: Subspace,
    /// `[M, M]`.
    pub top_derived: Subspace,
    /// `[M, M] ⊆ D_N(M) ⊆ B_N(M)`.
    pub inclusions_hold: bool,
    pub is_ideal: bool,
}

/// Subalgebra of `M` generated by all braiding values.
pub fn braiding_span(bx: &BraidedXMod) -> Subspace {
    let br = &bx.braiding;
    let rows: Vec<Vector> =
        br.b.chunks(br.top_dim.max(1))
            .map(<[Rational]>::to_vec)
            .collect();
    let rows = if br.top_dim == 0 { Vec::new() } else { rows };
    let span = Subspace::span(br.top_dim, &rows).expect("width");
    bx.top().subalgebra_closure(&span).expect("ambient")
}

pub fn braided_commutator(bx: &BraidedXMod) -> BraidedCommutator {
    let x = &bx.xmod;
    let b = braiding_span(bx);
    let d = x.action_span();
    let mm = x.top().derived_subalgebra();
    let inclusions_hold =
        d.contains_subspace(&mm).expect("ambient") && b.contains_subspace(&d).expect("ambient");
    BraidedCommutator {
        is_ideal: x.top().is_ideal(&b),
        inclusions_hold,
        action_span: d,
        top_derived: mm,
        submodule: CrossedSubmodule::analyze(x, b, x.base().derived_subalgebra()),
    }
}

/// `M = B_N(M)` and `N = [N, N]`.
pub fn is_perfect_braided(bx: &BraidedXMod) -> bool {
    bx.base().is_perfect() && braiding_span(bx).is_full()
}

/// `M = D_N(M)` and `N = [N, N]`.
pub fn is_perfect_xmod(bx: &BraidedXMod) -> bool {
    bx.xmod.is_perfect()
}

/// A morphism of braided crossed modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedMorphism {
    pub source: BraidedXMod,
    pub target: BraidedXMod,
    pub f1: LieHom,
    pub f2: LieHom,
}

impl BraidedMorphism {
    pub fn new(
        source: BraidedXMod,
        target: BraidedXMod,
        f1: RatMatrix,
        f2: RatMatrix,
    ) -> Result<Self> {
        let f1 = LieHom::new(source.top().clone(), target.top().clone(), f1)?;
        let f2 = LieHom::new(source.base().clone(), target.base().clone(), f2)?;
        Ok(Self {
            source,
            target,
            f1,
            f2,
        })
    }

    pub fn identity(bx: &BraidedXMod) -> Self {
        Self {
            source: bx.clone(),
            target: bx.clone(),
            f1: LieHom::identity(bx.top()),
            f2: LieHom::identity(bx.base()),
        }
    }

    pub fn underlying(&self) -> XModMorphism {
        XModMorphism {
            source: self.source.xmod.clone(),
            target: self.target.xmod.clone(),
            f1: self.f1.clone(),
            f2: self.f2.clone(),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &BraidedMorphism) -> Result<BraidedMorphism> {
        Ok(BraidedMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            f1: self.f1.compose(&first.f1)?,
            f2: self.f2.compose(&first.f2)?,
        })
    }

    /// Same component matrices.
    pub fn same_maps(&self, other: &BraidedMorphism) -> bool {
        self.f1.matrix == other.f1.matrix && self.f2.matrix == other.f2.matrix
    }

    /// The crossed module morphism axioms plus
    /// `f1{n, n'} = {f2 n, f2 n'}` on basis pairs.
    pub fn check(&self) -> Verdict {
        self.underlying().check()?;
        let dn = self.source.base().dim();
        let images: Vec<Vector> = (0..dn).map(|j| self.f2.matrix.column(j)).collect();
        for j in 0..dn {
            for j2 in 0..dn {
                let lhs = self
                    .f1
                    .apply(self.source.braiding.basis(j, j2))
                    .expect("dims");
                let rhs = self.target.braid(&images[j], &images[j2]).expect("dims");
                if lhs != rhs {
                    return Err(Violation::new(Axiom::BXLieH3, [j, j2]));
                }
            }
        }
        Ok(())
    }
}

pub fn braided_morphism_check(f: &BraidedMorphism) -> Verdict {
    f.check()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidedClass {
    NotExtension,
    Extension {
        central: bool,
        compatible_central: bool,
    },
}

impl BraidedClass {
    pub fn is_extension(&self) -> bool {
        matches!(self, BraidedClass::Extension { .. })
    }

    pub fn is_central(&self) -> bool {
        matches!(self, BraidedClass::Extension { central: true, .. })
    }

    pub fn is_compatible_central(&self) -> bool {
        matches!(
            self,
            BraidedClass::Extension {
                compatible_central: true,
                ..
            }
        )
    }
}

/// Classification together with the kernels and source centers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedExtension {
    pub class: BraidedClass,
    pub ker_top: Subspace,
    pub ker_base: Subspace,
    /// `M^N` of the source.
    pub fixed_points: Subspace,
    /// `Z_B(N)` of the source.
    pub braided_center: Subspace,
    /// `Z(N) ∩ st_N(M)` of the source.
    pub center_stabilizer: Subspace,
}

/// Extension iff both components are surjective. Central iff
/// `ker f1 ⊆ M^N` and `ker f2 ⊆ Z_B(N)`; compatible central iff
/// `ker f1 ⊆ M^N` and `ker f2 ⊆ Z(N) ∩ st_N(M)`.
pub fn classify_braided_extension(f: &BraidedMorphism) -> Result<BraidedExtension> {
    f.check().map_err(|v| Error::axiom("braided morphism", v))?;
    let ker_top = f.f1.kernel();
    let ker_base = f.f2.kernel();
    let fixed_points = f.source.xmod.fixed_points();
    let zb = braided_center_base(&f.source);
    let center_stabilizer = f.source.xmod.center().base;
    let class = if f.f1.is_surjective() && f.f2.is_surjective() {
        let top_ok = fixed_points.contains_subspace(&ker_top)?;
        let central = top_ok && zb.contains_subspace(&ker_base)?;
        let compatible_central = top_ok && center_stabilizer.contains_subspace(&ker_base)?;
        if central && !compatible_central {
            return Err(Error::Assertion(
                "central extension that is not compatible central".into(),
            ));
        }
        BraidedClass::Extension {
            central,
            compatible_central,
        }
    } else {
        BraidedClass::NotExtension
    };
    Ok(BraidedExtension {
        class,
        ker_top,
        ker_base,
        fixed_points,
        braided_center: zb,
        center_stabilizer,
    })
}

/// Direct product with its projections and inclusions.
#[derive(Clone, Debug)]
pub struct BraidedProduct {
    pub product: BraidedXMod,
    pub proj_left: BraidedMorphism,
    pub proj_right: BraidedMorphism,
    pub incl_left: BraidedMorphism,
    pub incl_right: BraidedMorphism,
}

/// `{(n, y), (n', y')} = ({n, n'}, {y, y'})`.
pub fn product_braided(bx: &BraidedXMod, by: &BraidedXMod) -> Result<BraidedProduct> {
    let p = product_xmod(&bx.xmod, &by.xmod)?;
    let (nx, mx) = (bx.base().dim(), bx.top().dim());
    let (ny, my) = (by.base().dim(), by.top().dim());
    let braiding = Braiding::from_fn(nx + ny, mx + my, |j, j2| {
        let mut v = zero_vector(mx + my);
        if j < nx && j2 < nx {
            v[..mx].clone_from_slice(bx.braiding.basis(j, j2));
        } else if j >= nx && j2 >= nx {
            v[mx..].clone_from_slice(by.braiding.basis(j - nx, j2 - nx));
        }
        Ok(v)
    })?;
    let product = BraidedXMod::new(p.product, braiding)?;
    let wrap = |m: XModMorphism, s: &BraidedXMod, t: &BraidedXMod| BraidedMorphism {
        source: s.clone(),
        target: t.clone(),
        f1: LieHom {
            source: s.top().clone(),
            target: t.top().clone(),
            matrix: m.f1.matrix,
        },
        f2: LieHom {
            source: s.base().clone(),
            target: t.base().clone(),
            matrix: m.f2.matrix,
        },
    };
    Ok(BraidedProduct {
        proj_left: wrap(p.proj_left, &product, bx),
        proj_right: wrap(p.proj_right, &product, by),
        incl_left: wrap(p.incl_left, bx, &product),
        incl_right: wrap(p.incl_right, by, &product),
        product,
    })
}

/// `(M / B_N(M) -> N / [N, N])` with the induced braiding and the
/// projection `i^c`.
pub fn cokernel_of_commutator(bx: &BraidedXMod) -> Result<(BraidedXMod, BraidedMorphism)> {
    let comm = braided_commutator(bx);
    let (top, base) = (&comm.submodule.top, &comm.submodule.base);
    let (q, proj) = quotient_xmod(&bx.xmod, top, base)?;
    let sn = base.quotient().section;
    let braiding = Braiding::from_fn(q.base().dim(), q.top().dim(), |j, j2| {
        let v = bx.braid(&sn.column(j), &sn.column(j2))?;
        proj.f1.apply(&v)
    })?;
    let mut q = q;
    q.name = format!("{}/comm", bx.name());
    let qb = BraidedXMod::new(q, braiding)?;
    let ic = BraidedMorphism::new(bx.clone(), qb.clone(), proj.f1.matrix, proj.f2.matrix)?;
    ic.check()
        .map_err(|v| Error::Assertion(format!("cokernel projection: {v}")))?;
    if !(ic.f1.is_surjective() && ic.f2.is_surjective()) {
        return Err(Error::Assertion(
            "cokernel projection is not surjective".into(),
        ));
    }
    Ok((qb, ic))
}

/// Two distinct morphisms `h, g` into a central extension `π¹` that agree
/// after composing with `π¹`.
#[derive(Clone, Debug)]
pub struct NonPerfectWitness {
    pub extension: BraidedMorphism,
    pub h: BraidedMorphism,
    pub g: BraidedMorphism,
    /// First column where `h` and `g` differ: `(component, column)`.
    pub difference: (usize, usize),
}

/// For a central extension `Ψ: Y -> X` with `Y` not perfect, builds
/// `π¹: X × coker(Y) -> X` with `h = (Ψ, 0)` and `g = (Ψ, i^c)`.
pub fn non_perfect_witness(psi: &BraidedMorphism) -> Result<NonPerfectWitness> {
    let class = classify_braided_extension(psi)?.class;
    if !class.is_central() {
        return Err(Error::Precondition(
            "non-perfect witness needs a central extension".into(),
        ));
    }
    if is_perfect_braided(&psi.source) {
        return Err(Error::SourcePerfect);
    }
    let (coker, ic) = cokernel_of_commutator(&psi.source)?;
    let prod = product_braided(&psi.target, &coker)?;
    let pi1 = prod.proj_left;

    let zero1 = RatMatrix::zeros(ic.f1.matrix.rows(), ic.f1.matrix.cols());
    let zero2 = RatMatrix::zeros(ic.f2.matrix.rows(), ic.f2.matrix.cols());
    let h = BraidedMorphism::new(
        psi.source.clone(),
        prod.product.clone(),
        psi.f1.matrix.vstack(&zero1)?,
        psi.f2.matrix.vstack(&zero2)?,
    )?;
    let g = BraidedMorphism::new(
        psi.source.clone(),
        prod.product.clone(),
        psi.f1.matrix.vstack(&ic.f1.matrix)?,
        psi.f2.matrix.vstack(&ic.f2.matrix)?,
    )?;
    for (name, m) in [("h", &h), ("g", &g)] {
        m.check()
            .map_err(|v| Error::Assertion(format!("witness map {name}: {v}")))?;
    }
    if !pi1.compose(&h)?.same_maps(psi) || !pi1.compose(&g)?.same_maps(psi) {
        return Err(Error::Assertion(
            "witness maps do not factor the extension".into(),
        ));
    }
    if !classify_braided_extension(&pi1)?.class.is_central() {
        return Err(Error::Assertion("witness projection is not central".into()));
    }
    let difference =
        first_difference(&h, &g).ok_or_else(|| Error::Assertion("witness maps coincide".into()))?;
    Ok(NonPerfectWitness {
        extension: pi1,
        h,
        g,
        difference,
    })
}

/// `(component, column)` of the first differing column, components 1 and 2.
pub fn first_difference(a: &BraidedMorphism, b: &BraidedMorphism) -> Option<(usize, usize)> {
    let cols = |x: &RatMatrix, y: &RatMatrix| (0..x.cols()).find(|&c| x.column(c) != y.column(c));
    cols(&a.f1.matrix, &b.f1.matrix)
        .map(|c| (1, c))
        .or_else(|| cols(&a.f2.matrix, &b.f2.matrix).map(|c| (2, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::xmod::Action;

    fn sl2() -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::sl2())
    }

    fn h3() -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::heisenberg())
    }

    /// `(K^n ⊗ K^n --0--> K^n)` with `{e_i, e_j} = e_i ⊗ e_j`.
    fn abelian_tensor(n: usize) -> BraidedXMod {
        let top = Arc::new(LieAlgebra::abelian(n * n));
        let base = Arc::new(LieAlgebra::abelian(n));
        let x = CrossedModule::new(
            format!("K{n}t"),
            LieHom::zero(&top, &base),
            Action::zero(&base, &top),
        )
        .unwrap();
        let b = Braiding::from_fn(n, n * n, |i, j| Ok(unit_vector(n * n, i * n + j))).unwrap();
        BraidedXMod::new(x, b).unwrap()
    }

    fn projection_pair() -> BraidedMorphism {
        let pi = RatMatrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]);
        BraidedMorphism::new(abelian_tensor(3), abelian_tensor(2), pi.kron(&pi), pi).unwrap()
    }

    #[test]
    fn verify_examples() {
        let s = BraidedXMod::identity(&sl2());
        assert_eq!(verify_braiding(&s), Ok(()));
        assert_eq!(verify_braiding(&abelian_tensor(3)), Ok(()));
        let flipped = BraidedXMod::from_parts(s.xmod.clone(), s.braiding.negated()).unwrap();
        assert_eq!(verify_braiding(&flipped).unwrap_err().axiom, Axiom::BLie1);
        let err = BraidedXMod::new(s.xmod.clone(), s.braiding.negated()).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
    }

    #[test]
    fn centers() {
        let c = braided_center(&abelian_tensor(3));
        assert!(c.submodule.base.is_zero());
        assert_eq!(c.center_stabilizer.dim(), 3);
        assert_eq!(c.submodule.top.dim(), 9);
        assert!(c.characterization_holds && c.contained_in_center);

        let k = Arc::new(LieAlgebra::abelian(2));
        let z = BraidedXMod::identity(&k);
        assert!(z.braiding.is_zero());
        assert!(braided_center(&z).submodule.base.is_full());

        let s = braided_center(&BraidedXMod::identity(&sl2()));
        assert!(s.submodule.base.is_zero() && s.characterization_holds);
    }

    #[test]
    fn commutators() {
        let k = BraidedXMod::identity(&Arc::new(LieAlgebra::abelian(2)));
        let c = braided_commutator(&k);
        assert!(c.submodule.top.is_zero() && c.submodule.base.is_zero());
        let t = braided_commutator(&abelian_tensor(2));
        assert!(t.submodule.top.is_full());
        assert!(t.inclusions_hold && t.is_ideal);
        let s = braided_commutator(&BraidedXMod::identity(&sl2()));
        assert!(s.submodule.top.is_full() && s.submodule.base.is_full());
        assert!(is_perfect_braided(&BraidedXMod::identity(&sl2())));
        assert!(!is_perfect_braided(&abelian_tensor(2)));
        assert!(!is_perfect_braided(&BraidedXMod::identity(&h3())));
    }

    #[test]
    fn morphisms_and_classification() {
        let s = BraidedXMod::identity(&sl2());
        let id = BraidedMorphism::identity(&s);
        assert_eq!(id.check(), Ok(()));
        let e = classify_braided_extension(&id).unwrap();
        assert_eq!(
            e.class,
            BraidedClass::Extension {
                central: true,
                compatible_central: true
            }
        );

        let f = projection_pair();
        assert_eq!(f.check(), Ok(()));
        let e = classify_braided_extension(&f).unwrap();
        assert_eq!(
            e.class,
            BraidedClass::Extension {
                central: false,
                compatible_central: true
            }
        );
        assert_eq!((e.ker_top.dim(), e.ker_base.dim()), (5, 1));
        assert!(e.braided_center.is_zero());

        let mut bad = f.clone();
        bad.target.braiding = bad.target.braiding.negated();
        assert_eq!(bad.check().unwrap_err().axiom, Axiom::BXLieH3);

        let (q, p) = {
            let (q, p) = quotient_xmod(&s.xmod, &Subspace::zero(3), &Subspace::zero(3)).unwrap();
            let qb = BraidedXMod::new(q, s.braiding.clone()).unwrap();
            (
                qb.clone(),
                BraidedMorphism::new(s.clone(), qb, p.f1.matrix, p.f2.matrix).unwrap(),
            )
        };
        assert_eq!(q.top().dim(), 3);
        assert!(classify_braided_extension(&p).unwrap().class.is_central());
    }

    #[test]
    fn products() {
        let p = product_braided(&abelian_tensor(2), &abelian_tensor(3)).unwrap();
        assert_eq!(p.product.top().dim(), 13);
        assert_eq!(p.product.base().dim(), 5);
        for m in [&p.proj_left, &p.proj_right, &p.incl_left, &p.incl_right] {
            assert_eq!(m.check(), Ok(()));
        }
        let z = Arc::new(LieAlgebra::abelian(0));
        let zero = BraidedXMod::identity(&z);
        let s = BraidedXMod::identity(&sl2());
        let p = product_braided(&s, &zero).unwrap();
        assert_eq!(p.product.braiding, s.braiding);
        assert!(p.proj_left.f1.matrix == RatMatrix::identity(3));
    }

    #[test]
    fn cokernels() {
        let (q, ic) = cokernel_of_commutator(&BraidedXMod::identity(&sl2())).unwrap();
        assert_eq!((q.top().dim(), q.base().dim()), (0, 0));
        assert_eq!(ic.check(), Ok(()));
        let (q, _) = cokernel_of_commutator(&BraidedXMod::identity(&h3())).unwrap();
        assert_eq!((q.top().dim(), q.base().dim()), (2, 2));
        let k = BraidedXMod::identity(&Arc::new(LieAlgebra::abelian(2)));
        let (q, ic) = cokernel_of_commutator(&k).unwrap();
        assert_eq!(q.top().dim(), 2);
        assert_eq!(ic.f1.matrix, RatMatrix::identity(2));
        assert_eq!(ic.f2.matrix, RatMatrix::identity(2));
    }

    #[test]
    fn non_perfect_witnesses() {
        let h = BraidedXMod::identity(&h3());
        let w = non_perfect_witness(&BraidedMorphism::identity(&h)).unwrap();
        assert!(!w.h.same_maps(&w.g));
        assert!(w
            .extension
            .compose(&w.h)
            .unwrap()
            .same_maps(&w.extension.compose(&w.g).unwrap()));

        let s = BraidedXMod::identity(&sl2());
        assert!(matches!(
            non_perfect_witness(&BraidedMorphism::identity(&s)),
            Err(Error::SourcePerfect)
        ));

        let k = BraidedXMod::identity(&Arc::new(LieAlgebra::abelian(2)));
        let w = non_perfect_witness(&BraidedMorphism::identity(&k)).unwrap();
        let g2 = w.g.f2.matrix;
        assert_eq!(g2.rows(), 4);
        let lower = RatMatrix::from_rows(2, &[g2.row(2).to_vec(), g2.row(3).to_vec()]).unwrap();
        assert_eq!(lower, RatMatrix::identity(2));
        assert_eq!(w.difference.0, 1);
    }

    /// Independent contraction over raw tensor indices.
    fn naive_blie56(bx: &BraidedXMod) -> bool {
        let n = bx.base();
        let (dn, dm) = (n.dim(), bx.top().dim());
        let c = n.structure_constants();
        let b = bx.braiding.tensor();
        let br = |j: usize, j2: usize, k: usize| b[(j * dn + j2) * dm + k].clone();
        let cc = |i: usize, j: usize, k: usize| c[(i * dn + j) * dn + k].clone();
        for x in 0..dn {
            for y in 0..dn {
                for z in 0..dn {
                    for k in 0..dm {
                        let mut five = rat(0);
                        let mut six = rat(0);
                        for l in 0..dn {
                            five += cc(y, z, l) * br(x, l, k) - cc(x, y, l) * br(l, z, k)
                                + cc(x, z, l) * br(l, y, k);
                            six += cc(x, y, l) * br(l, z, k) - cc(y, z, l) * br(x, l, k)
                                + cc(x, z, l) * br(y, l, k);
                        }
                        if !five.is_zero() || !six.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn blie56_oracle_agrees() {
        for bx in [
            BraidedXMod::identity(&sl2()),
            BraidedXMod::identity(&h3()),
            abelian_tensor(2),
        ] {
            assert!(naive_blie56(&bx));
            assert_eq!(verify_braiding(&bx), Ok(()));
        }
        let s = BraidedXMod::identity(&sl2());
        let mut t = s.braiding.tensor().to_vec();
        t[1] += rat(1);
        let broken =
            BraidedXMod::from_parts(s.xmod.clone(), Braiding::new(3, 3, t).unwrap()).unwrap();
        assert!(!naive_blie56(&broken));
        assert!(verify_braiding(&broken).is_err());
    }
}
