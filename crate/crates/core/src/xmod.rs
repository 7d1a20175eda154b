//! Lie actions, crossed modules, their centers and commutators, morphisms,
//! and classification of (non-braided) extensions.
//!
//! Every axiom is checked on basis tuples only; bilinearity makes that
//! complete.

use std::sync::Arc;

use num::Zero;

use crate::error::{Axiom, Error, Result, Verdict, Violation};
use crate::exactla::{
    add_scaled, is_zero_vector, kernel_basis, sub_vectors, unit_vector, zero_vector, RatMatrix,
    Rational, Subspace, Vector,
};
use crate::liealg::{LieAlgebra, LieHom};

/// A bilinear action `actor x module -> module`, stored as
/// `a[j][i][k]` with `e_j · e_i = sum_k a[j][i][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    actor: Arc<LieAlgebra>,
    module: Arc<LieAlgebra>,
    a: Vec<Rational>,
}

impl Action {
    pub fn new(actor: Arc<LieAlgebra>, module: Arc<LieAlgebra>, a: Vec<Rational>) -> Result<Self> {
        let expected = actor.dim() * module.dim() * module.dim();
        if a.len() != expected {
            return Err(Error::DimensionMismatch {
                context: format!("action of {} on {}", actor.name(), module.name()),
                expected,
                found: a.len(),
            });
        }
        Ok(Self { actor, module, a })
    }

    pub fn zero(actor: &Arc<LieAlgebra>, module: &Arc<LieAlgebra>) -> Self {
        let n = actor.dim() * module.dim() * module.dim();
        Self {
            actor: actor.clone(),
            module: module.clone(),
            a: vec![Rational::zero(); n],
        }
    }

    /// Builds an action from the matrices of `e_j · -`, one per actor basis
    /// vector.
    pub fn from_matrices(
        actor: Arc<LieAlgebra>,
        module: Arc<LieAlgebra>,
        matrices: &[RatMatrix],
    ) -> Result<Self> {
        let dm = module.dim();
        if matrices.len() != actor.dim() {
            return Err(Error::DimensionMismatch {
                context: "action matrices".into(),
                expected: actor.dim(),
                found: matrices.len(),
            });
        }
        let mut a = Vec::with_capacity(actor.dim() * dm * dm);
        for m in matrices {
            if m.rows() != dm || m.cols() != dm {
                return Err(Error::DimensionMismatch {
                    context: "action matrix".into(),
                    expected: dm * dm,
                    found: m.rows() * m.cols(),
                });
            }
            for i in 0..dm {
                a.extend(m.column(i));
            }
        }
        Self::new(actor, module, a)
    }

    pub fn actor(&self) -> &Arc<LieAlgebra> {
        &self.actor
    }

    pub fn module(&self) -> &Arc<LieAlgebra> {
        &self.module
    }

    pub fn tensor(&self) -> &[Rational] {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    /// `e_j · e_i`.
    pub fn act_basis(&self, j: usize, i: usize) -> &[Rational] {
        let dm = self.module.dim();
        let s = (j * dm + i) * dm;
        &self.a[s..s + dm]
    }

    pub fn act(&self, n: &[Rational], m: &[Rational]) -> Result<Vector> {
        let dm = self.module.dim();
        if n.len() != self.actor.dim() || m.len() != dm {
            return Err(Error::DimensionMismatch {
                context: format!("action of {} on {}", self.actor.name(), self.module.name()),
                expected: self.actor.dim() + dm,
                found: n.len() + m.len(),
            });
        }
        let mut out = zero_vector(dm);
        for (j, x) in n.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, y) in m.iter().enumerate() {
                if !y.is_zero() {
                    add_scaled(&mut out, &(x * y), self.act_basis(j, i));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `n · -` on the module.
    pub fn matrix_of(&self, n: &[Rational]) -> Result<RatMatrix> {
        let dm = self.module.dim();
        let cols = (0..dm)
            .map(|i| self.act(n, &unit_vector(dm, i)))
            .collect::<Result<Vec<_>>>()?;
        RatMatrix::from_columns(dm, &cols)
    }
}

/// Checks `[n,n']·m = n·(n'·m) - n'·(n·m)` and
/// `n·[m,m'] = [n·m, m'] + [m, n·m']` on all basis triples.
pub fn verify_action(act: &Action) -> Verdict {
    let (dn, dm) = (act.actor.dim(), act.module.dim());
    let actor = &act.actor;
    let module = &act.module;
    for j in 0..dn {
        for jj in j + 1..dn {
            for i in 0..dm {
                let lhs = act
                    .act(actor.basis_bracket(j, jj), &unit_vector(dm, i))
                    .expect("dims");
                let inner1 = act.act_basis(jj, i).to_vec();
                let inner2 = act.act_basis(j, i).to_vec();
                let t1 = act.act(&unit_vector(dn, j), &inner1).expect("dims");
                let t2 = act.act(&unit_vector(dn, jj), &inner2).expect("dims");
                if !is_zero_vector(&sub_vectors(&lhs, &sub_vectors(&t1, &t2))) {
                    return Err(Violation::new(Axiom::ActionBracket, [j, jj, i]));
                }
            }
        }
    }
    for j in 0..dn {
        let n = unit_vector(dn, j);
        for i in 0..dm {
            for ii in i + 1..dm {
                let lhs = act.act(&n, module.basis_bracket(i, ii)).expect("dims");
                let t1 = module
                    .bracket(act.act_basis(j, i), &unit_vector(dm, ii))
                    .expect("dims");
                let t2 = module
                    .bracket(&unit_vector(dm, i), act.act_basis(j, ii))
                    .expect("dims");
                let rhs: Vector = t1.iter().zip(&t2).map(|(a, b)| a + b).collect();
                if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                    return Err(Violation::new(Axiom::ActionDerivation, [j, i, ii]));
                }
            }
        }
    }
    Ok(())
}

/// A crossed module `(M --∂--> N, ·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub name: String,
    pub boundary: LieHom,
    pub action: Action,
}

impl CrossedModule {
    /// Assembles and verifies a crossed module.
    pub fn new(name: impl Into<String>, boundary: LieHom, action: Action) -> Result<Self> {
        let x = Self::from_parts(name, boundary, action)?;
        verify_xmod(&x).map_err(|v| Error::axiom(&x.name, v))?;
        Ok(x)
    }

    /// Assembles without checking axioms (shapes are still checked).
    pub fn from_parts(name: impl Into<String>, boundary: LieHom, action: Action) -> Result<Self> {
        let name = name.into();
        if !boundary.source.same_structure(&action.module) {
            return Err(Error::Precondition(format!(
                "{name}: boundary source differs from the acted-on algebra"
            )));
        }
        if !boundary.target.same_structure(&action.actor) {
            return Err(Error::Precondition(format!(
                "{name}: boundary target differs from the acting algebra"
            )));
        }
        Ok(Self {
            name,
            boundary,
            action,
        })
    }

    /// `(L --id--> L, ad)`.
    pub fn identity(l: &Arc<LieAlgebra>) -> Self {
        Self {
            name: format!("id({})", l.name()),
            boundary: LieHom::identity(l),
            action: l.adjoint_action(),
        }
    }

    pub fn top(&self) -> &Arc<LieAlgebra> {
        &self.boundary.source
    }

    pub fn base(&self) -> &Arc<LieAlgebra> {
        &self.boundary.target
    }

    pub fn act(&self, n: &[Rational], m: &[Rational]) -> Result<Vector> {
        self.action.act(n, m)
    }

    pub fn d(&self, m: &[Rational]) -> Result<Vector> {
        self.boundary.apply(m)
    }

    /// `M^N`: elements of M fixed by every element of N.
    pub fn fixed_points(&self) -> Subspace {
        let dn = self.base().dim();
        let mut stacked = RatMatrix::zeros(0, self.top().dim());
        for j in 0..dn {
            let m = self.action.matrix_of(&unit_vector(dn, j)).expect("dims");
            stacked = stacked.vstack(&m).expect("width");
        }
        kernel_basis(&stacked)
    }

    /// `st_N(M)`: elements of N acting trivially on all of M.
    pub fn stabilizer(&self) -> Subspace {
        let (dn, dm) = (self.base().dim(), self.top().dim());
        // Row block i holds the map n ↦ n·e_i.
        let mut stacked = RatMatrix::zeros(dm * dm, dn);
        for i in 0..dm {
            for j in 0..dn {
                for (k, v) in self.action.act_basis(j, i).iter().enumerate() {
                    stacked.set(i * dm + k, j, v.clone());
                }
            }
        }
        kernel_basis(&stacked)
    }

    /// `(M^N, st_N(M) ∩ Z(N))`.
    pub fn center(&self) -> CrossedSubmodule {
        let base = self
            .stabilizer()
            .intersect(&self.base().center())
            .expect("same ambient");
        CrossedSubmodule::analyze(self, self.fixed_points(), base)
    }

    /// Subalgebra generated by all `n · m`.
    pub fn action_span(&self) -> Subspace {
        let (dn, dm) = (self.base().dim(), self.top().dim());
        let rows: Vec<Vector> = (0..dn)
            .flat_map(|j| (0..dm).map(move |i| (j, i)))
            .map(|(j, i)| self.action.act_basis(j, i).to_vec())
            .collect();
        let span = Subspace::span(dm, &rows).expect("width");
        self.top().subalgebra_closure(&span).expect("ambient")
    }

    /// `(D_N(M), [N, N])`.
    pub fn commutator(&self) -> CrossedSubmodule {
        CrossedSubmodule::analyze(self, self.action_span(), self.base().derived_subalgebra())
    }

    pub fn is_perfect(&self) -> bool {
        let c = self.commutator();
        c.top.is_full() && c.base.is_full()
    }
}

pub fn verify_xmod(x: &CrossedModule) -> Verdict {
    verify_action(&x.action)?;
    x.boundary.check()?;
    let (dn, dm) = (x.base().dim(), x.top().dim());
    let n_alg = x.base();
    let m_alg = x.top();
    for i in 0..dm {
        let di = x.boundary.matrix.column(i);
        for ii in 0..dm {
            let lhs = x.act(&di, &unit_vector(dm, ii)).expect("dims");
            if lhs != m_alg.basis_bracket(i, ii) {
                return Err(Violation::new(Axiom::Peiffer, [i, ii]));
            }
        }
    }
    for j in 0..dn {
        for i in 0..dm {
            let lhs = x.d(x.action.act_basis(j, i)).expect("dims");
            let rhs = n_alg
                .bracket(&unit_vector(dn, j), &x.boundary.matrix.column(i))
                .expect("dims");
            if lhs != rhs {
                return Err(Violation::new(Axiom::Equivariance, [j, i]));
            }
        }
    }
    Ok(())
}

/// Structural flags of a pair of subspaces inside a crossed module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubmoduleFlags {
    pub top_subalgebra: bool,
    pub top_ideal: bool,
    pub base_subalgebra: bool,
    pub base_ideal: bool,
    /// `∂(top) ⊆ base`
    pub boundary_compatible: bool,
    /// `base · top ⊆ top`
    pub action_stable: bool,
    /// `N · top ⊆ top` and `base · M ⊆ top`
    pub normal: bool,
}

/// A pair of subspaces `(I ⊆ M, J ⊆ N)` in ambient coordinates, with flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSubmodule {
    pub top: Subspace,
    pub base: Subspace,
    pub flags: SubmoduleFlags,
}

impl CrossedSubmodule {
    pub fn analyze(x: &CrossedModule, top: Subspace, base: Subspace) -> Self {
        let m = x.top();
        let n = x.base();
        let tops = top.basis_vectors();
        let bases = base.basis_vectors();
        let (dn, dm) = (n.dim(), m.dim());
        let acts_into = |ns: &[Vector], ms: &[Vector]| {
            ns.iter().all(|a| {
                ms.iter()
                    .all(|b| top.contains(&x.act(a, b).expect("dims")).expect("dims"))
            })
        };
        let all_n: Vec<Vector> = (0..dn).map(|j| unit_vector(dn, j)).collect();
        let all_m: Vec<Vector> = (0..dm).map(|i| unit_vector(dm, i)).collect();
        let flags = SubmoduleFlags {
            top_subalgebra: m.is_subalgebra(&top),
            top_ideal: m.is_ideal(&top),
            base_subalgebra: n.is_subalgebra(&base),
            base_ideal: n.is_ideal(&base),
            boundary_compatible: base
                .contains_subspace(&top.map(&x.boundary.matrix).expect("dims"))
                .expect("dims"),
            action_stable: acts_into(&bases, &tops),
            normal: acts_into(&all_n, &tops) && acts_into(&bases, &all_m),
        };
        Self { top, base, flags }
    }

    pub fn is_crossed_submodule(&self) -> bool {
        let f = &self.flags;
        f.top_subalgebra && f.base_subalgebra && f.boundary_compatible && f.action_stable
    }

    /// Preconditions for forming the quotient crossed module.
    pub fn is_normal(&self) -> bool {
        let f = &self.flags;
        f.top_ideal && f.base_ideal && f.boundary_compatible && f.normal
    }
}

/// A pair `(f1: M -> L, f2: N -> H)` between crossed modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModMorphism {
    pub source: CrossedModule,
    pub target: CrossedModule,
    pub f1: LieHom,
    pub f2: LieHom,
}

impl XModMorphism {
    pub fn new(
        source: CrossedModule,
        target: CrossedModule,
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

    pub fn identity(x: &CrossedModule) -> Self {
        Self {
            source: x.clone(),
            target: x.clone(),
            f1: LieHom::identity(x.top()),
            f2: LieHom::identity(x.base()),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &XModMorphism) -> Result<XModMorphism> {
        Ok(XModMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            f1: self.f1.compose(&first.f1)?,
            f2: self.f2.compose(&first.f2)?,
        })
    }

    /// Both components are Lie homs, plus XLieH1 and XLieH2.
    pub fn check(&self) -> Verdict {
        self.f1.check()?;
        self.f2.check()?;
        let (dn, dm) = (self.source.base().dim(), self.source.top().dim());
        for j in 0..dn {
            let fn_ = self.f2.matrix.column(j);
            for i in 0..dm {
                let lhs = self
                    .f1
                    .apply(self.source.action.act_basis(j, i))
                    .expect("dims");
                let rhs = self
                    .target
                    .act(&fn_, &self.f1.matrix.column(i))
                    .expect("dims");
                if lhs != rhs {
                    return Err(Violation::new(Axiom::XLieH1, [j, i]));
                }
            }
        }
        let lhs = self
            .target
            .boundary
            .matrix
            .mul(&self.f1.matrix)
            .expect("dims");
        let rhs = self
            .f2
            .matrix
            .mul(&self.source.boundary.matrix)
            .expect("dims");
        if lhs != rhs {
            let col = (0..dm)
                .find(|&i| lhs.column(i) != rhs.column(i))
                .unwrap_or(0);
            return Err(Violation::new(Axiom::XLieH2, [col]));
        }
        Ok(())
    }
}

pub fn xmod_morphism_check(f: &XModMorphism) -> Verdict {
    f.check()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionClass {
    NotExtension,
    Extension { central: bool },
}

/// Classification of a crossed module morphism with the subspaces involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModExtension {
    pub class: ExtensionClass,
    pub ker_top: Subspace,
    pub ker_base: Subspace,
    pub fixed_points: Subspace,
    pub center_base: Subspace,
}

/// Extension iff both components are surjective; central iff
/// `ker f1 ⊆ M^N` and `ker f2 ⊆ st_N(M) ∩ Z(N)`.
pub fn classify_xmod_extension(f: &XModMorphism) -> Result<XModExtension> {
    f.check().map_err(|v| Error::axiom("morphism", v))?;
    let ker_top = f.f1.kernel();
    let ker_base = f.f2.kernel();
    let center = f.source.center();
    let class = if f.f1.is_surjective() && f.f2.is_surjective() {
        ExtensionClass::Extension {
            central: center.top.contains_subspace(&ker_top)?
                && center.base.contains_subspace(&ker_base)?,
        }
    } else {
        ExtensionClass::NotExtension
    };
    Ok(XModExtension {
        class,
        ker_top,
        ker_base,
        fixed_points: center.top,
        center_base: center.base,
    })
}

/// Direct product with its projections and inclusions.
#[derive(Clone, Debug)]
pub struct XModProduct {
    pub product: CrossedModule,
    pub proj_left: XModMorphism,
    pub proj_right: XModMorphism,
    pub incl_left: XModMorphism,
    pub incl_right: XModMorphism,
}

fn projection_matrices(a: usize, b: usize) -> (RatMatrix, RatMatrix) {
    let mut left = RatMatrix::zeros(a, a + b);
    let mut right = RatMatrix::zeros(b, a + b);
    for i in 0..a {
        left.set(i, i, num::One::one());
    }
    for i in 0..b {
        right.set(i, a + i, num::One::one());
    }
    (left, right)
}

pub(crate) fn product_action(
    x: &Action,
    y: &Action,
    actor: Arc<LieAlgebra>,
    module: Arc<LieAlgebra>,
) -> Action {
    let (nx, mx) = (x.actor.dim(), x.module.dim());
    let (ny, my) = (y.actor.dim(), y.module.dim());
    let (dn, dm) = (nx + ny, mx + my);
    let mut a = vec![Rational::zero(); dn * dm * dm];
    for j in 0..nx {
        for i in 0..mx {
            for (k, v) in x.act_basis(j, i).iter().enumerate() {
                a[(j * dm + i) * dm + k] = v.clone();
            }
        }
    }
    for j in 0..ny {
        for i in 0..my {
            for (k, v) in y.act_basis(j, i).iter().enumerate() {
                a[((nx + j) * dm + mx + i) * dm + mx + k] = v.clone();
            }
        }
    }
    Action::new(actor, module, a).expect("product shape")
}

pub fn product_xmod(x: &CrossedModule, y: &CrossedModule) -> Result<XModProduct> {
    let top = Arc::new(x.top().direct_sum(y.top()));
    let base = Arc::new(x.base().direct_sum(y.base()));
    let boundary = LieHom::new(
        top.clone(),
        base.clone(),
        x.boundary.matrix.block_diag(&y.boundary.matrix),
    )?;
    let action = product_action(&x.action, &y.action, base.clone(), top.clone());
    let product = CrossedModule::new(format!("{}x{}", x.name, y.name), boundary, action)?;
    let (pl1, pr1) = projection_matrices(x.top().dim(), y.top().dim());
    let (pl2, pr2) = projection_matrices(x.base().dim(), y.base().dim());
    Ok(XModProduct {
        proj_left: XModMorphism::new(product.clone(), x.clone(), pl1.clone(), pl2.clone())?,
        proj_right: XModMorphism::new(product.clone(), y.clone(), pr1.clone(), pr2.clone())?,
        incl_left: XModMorphism::new(x.clone(), product.clone(), pl1.transpose(), pl2.transpose())?,
        incl_right: XModMorphism::new(
            y.clone(),
            product.clone(),
            pr1.transpose(),
            pr2.transpose(),
        )?,
        product,
    })
}

/// Quotient by a normal pair `(I1 ⊆ M, I2 ⊆ N)` with the canonical
/// projection.
pub fn quotient_xmod(
    x: &CrossedModule,
    top: &Subspace,
    base: &Subspace,
) -> Result<(CrossedModule, XModMorphism)> {
    let sub = CrossedSubmodule::analyze(x, top.clone(), base.clone());
    let f = sub.flags;
    let failed = [
        (f.top_ideal, "top part is not an ideal"),
        (f.base_ideal, "base part is not an ideal"),
        (
            f.boundary_compatible,
            "boundary does not map top part into base part",
        ),
        (f.normal, "pair is not stable under the action"),
    ];
    if let Some((_, msg)) = failed.iter().find(|(ok, _)| !ok) {
        return Err(Error::Precondition(format!(
            "quotient of {}: {msg}",
            x.name
        )));
    }
    let (qm, pm) = x.top().quotient(top)?;
    let (qn, pn) = x.base().quotient(base)?;
    let sm = top.quotient().section;
    let sn = base.quotient().section;
    let boundary = LieHom::new(
        qm.clone(),
        qn.clone(),
        pn.matrix.mul(&x.boundary.matrix)?.mul(&sm)?,
    )?;
    let (dqn, dqm) = (qn.dim(), qm.dim());
    let mut a = Vec::with_capacity(dqn * dqm * dqm);
    for j in 0..dqn {
        let n = sn.column(j);
        for i in 0..dqm {
            let v = x.act(&n, &sm.column(i))?;
            a.extend(pm.apply(&v)?);
        }
    }
    let action = Action::new(qn.clone(), qm.clone(), a)?;
    let q = CrossedModule::new(format!("{}/I", x.name), boundary, action)?;
    let proj = XModMorphism::new(x.clone(), q.clone(), pm.matrix, pn.matrix)?;
    Ok((q, proj))
}
