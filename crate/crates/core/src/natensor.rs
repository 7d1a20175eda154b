//! Non-abelian tensor product `M ⊗ N` of two Lie algebras acting on each
//! other.
//!
//! The product is computed as the quotient of the vector-space tensor product
//! (basis symbols `e_i ⊗ e_j`, row-major with `i` major) by the span `W` of
//! the two bracket relations:
//!
//! ```text
//! [m, m'] ⊗ n = m ⊗ (m'·n) - m' ⊗ (m·n)
//! m ⊗ [n, n'] = (n'∗m) ⊗ n - (n∗m) ⊗ n'
//! ```
//!
//! and carries the bracket `[m ⊗ n, m' ⊗ n'] = -(n∗m) ⊗ (m'·n')`. Linearity
//! relations hold by construction. Well-definedness of the bracket and the
//! Lie axioms of the quotient are checked, never assumed.

use std::fmt;
use std::sync::Arc;

use num::Zero;

use crate::error::{Error, Result};
use crate::exactla::{
    add_scaled, is_zero_vector, kron_vectors, unit_vector, zero_vector, RatMatrix, Rational,
    Subspace, Vector,
};
use crate::liealg::{LieAlgebra, LieHom};
use crate::xmod::{verify_action, Action};

/// Label of a relation vector, 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `[e_i, e_i2] ⊗ e_j - e_i ⊗ (e_i2·e_j) + e_i2 ⊗ (e_i·e_j)`
    LeftBracket { i: usize, i2: usize, j: usize },
    /// `e_i ⊗ [e_j, e_j2] - (e_j2∗e_i) ⊗ e_j + (e_j∗e_i) ⊗ e_j2`
    RightBracket { i: usize, j: usize, j2: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Relation::LeftBracket { i, i2, j } => write!(f, "R1({}, {}, {})", i + 1, i2 + 1, j + 1),
            Relation::RightBracket { i, j, j2 } => {
                write!(f, "R2({}, {}, {})", i + 1, j + 1, j2 + 1)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct TensorPresentation {
    left: Arc<LieAlgebra>,
    right: Arc<LieAlgebra>,
    /// `M` acting on `N`, written `m·n`.
    left_on_right: Action,
    /// `N` acting on `M`, written `n∗m`.
    right_on_left: Action,
    relations: Subspace,
    quotient: Arc<LieAlgebra>,
    proj: RatMatrix,
    section: RatMatrix,
}

impl TensorPresentation {
    /// Builds `M ⊗ N` from the actions `M·N` and `N∗M`.
    pub fn build(left_on_right: &Action, right_on_left: &Action) -> Result<Self> {
        let left = left_on_right.actor().clone();
        let right = left_on_right.module().clone();
        if !right_on_left.actor().same_structure(&right)
            || !right_on_left.module().same_structure(&left)
        {
            return Err(Error::Precondition(
                "tensor product actions must go in opposite directions between the same algebras"
                    .into(),
            ));
        }
        verify_action(left_on_right).map_err(|v| {
            Error::axiom(format!("action of {} on {}", left.name(), right.name()), v)
        })?;
        verify_action(right_on_left).map_err(|v| {
            Error::axiom(format!("action of {} on {}", right.name(), left.name()), v)
        })?;

        let mut tp = TensorPresentation {
            left: left.clone(),
            right: right.clone(),
            left_on_right: left_on_right.clone(),
            right_on_left: right_on_left.clone(),
            relations: Subspace::zero(0),
            quotient: Arc::new(LieAlgebra::abelian(0)),
            proj: RatMatrix::zeros(0, 0),
            section: RatMatrix::zeros(0, 0),
        };
        let rows: Vec<Vector> = tp.relation_vectors().into_iter().map(|(_, v)| v).collect();
        let amb = tp.ambient_dim();
        let w = Subspace::span(amb, &rows)?;

        let table = tp.symbol_bracket_table();
        let bracket = |x: &[Rational], y: &[Rational]| bilinear(&table, amb, x, y);

        for (k, wv) in w.basis_vectors().iter().enumerate() {
            for s in 0..amb {
                let e = unit_vector(amb, s);
                for (side, v) in [("left", bracket(wv, &e)), ("right", bracket(&e, wv))] {
                    if !w.contains(&v)? {
                        let (i, j) = (s / right.dim(), s % right.dim());
                        return Err(Error::TensorDiagnostic(format!(
                            "bracket is not well defined: relation vector {} in the {side} slot \
                             against symbol e{}⊗e{} leaves the relation space",
                            k + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }

        let q = w.quotient();
        let sections: Vec<Vector> = (0..q.dim).map(|a| q.section.column(a)).collect();
        let mut consts = Vec::with_capacity(q.dim * q.dim * q.dim);
        for a in 0..q.dim {
            for b in 0..q.dim {
                consts.extend(q.proj.mul_vec(&bracket(&sections[a], &sections[b]))?);
            }
        }
        let name = format!("{}⊗{}", left.name(), right.name());
        let quotient = LieAlgebra::new(name, q.dim, consts).map_err(|e| match e {
            Error::Axiom { violation, .. } => {
                Error::TensorDiagnostic(format!("quotient bracket: {violation}"))
            }
            other => other,
        })?;
        tp.relations = w;
        tp.quotient = Arc::new(quotient);
        tp.proj = q.proj;
        tp.section = q.section;
        Ok(tp)
    }

    /// `L ⊗ L` with the adjoint action in both directions.
    pub fn square(l: &Arc<LieAlgebra>) -> Result<Self> {
        let ad = l.adjoint_action();
        Self::build(&ad, &ad)
    }

    pub fn left(&self) -> &Arc<LieAlgebra> {
        &self.left
    }

    pub fn right(&self) -> &Arc<LieAlgebra> {
        &self.right
    }

    pub fn left_on_right(&self) -> &Action {
        &self.left_on_right
    }

    pub fn right_on_left(&self) -> &Action {
        &self.right_on_left
    }

    /// Number of basis symbols, `dim M * dim N`.
    pub fn ambient_dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn symbol_index(&self, i: usize, j: usize) -> usize {
        i * self.right.dim() + j
    }

    /// The relation space `W`.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// The resulting Lie algebra `M ⊗ N`.
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn proj(&self) -> &RatMatrix {
        &self.proj
    }

    pub fn section(&self) -> &RatMatrix {
        &self.section
    }

    /// All labelled relation vectors over basis tuples, R1 first.
    pub fn relation_vectors(&self) -> Vec<(Relation, Vector)> {
        let (dm, dn) = (self.left.dim(), self.right.dim());
        let amb = dm * dn;
        let mut out = Vec::with_capacity(dm * dm * dn + dm * dn * dn);
        for i in 0..dm {
            for i2 in 0..dm {
                for j in 0..dn {
                    let mut r = kron_vectors(self.left.basis_bracket(i, i2), &unit_vector(dn, j));
                    let a = kron_vectors(&unit_vector(dm, i), self.left_on_right.act_basis(i2, j));
                    let b = kron_vectors(&unit_vector(dm, i2), self.left_on_right.act_basis(i, j));
                    add_scaled(&mut r, &-Rational::from_integer(1.into()), &a);
                    add_scaled(&mut r, &Rational::from_integer(1.into()), &b);
                    debug_assert_eq!(r.len(), amb);
                    out.push((Relation::LeftBracket { i, i2, j }, r));
                }
            }
        }
        for i in 0..dm {
            for j in 0..dn {
                for j2 in 0..dn {
                    let mut r = kron_vectors(&unit_vector(dm, i), self.right.basis_bracket(j, j2));
                    let a = kron_vectors(self.right_on_left.act_basis(j2, i), &unit_vector(dn, j));
                    let b = kron_vectors(self.right_on_left.act_basis(j, i), &unit_vector(dn, j2));
                    add_scaled(&mut r, &-Rational::from_integer(1.into()), &a);
                    add_scaled(&mut r, &Rational::from_integer(1.into()), &b);
                    out.push((Relation::RightBracket { i, j, j2 }, r));
                }
            }
        }
        out
    }

    /// The full relation matrix, one row per labelled relation.
    pub fn relation_matrix(&self) -> RatMatrix {
        let rows: Vec<Vector> = self
            .relation_vectors()
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        RatMatrix::from_rows(self.ambient_dim(), &rows).expect("width")
    }

    /// `[e_i ⊗ e_j, e_i2 ⊗ e_j2] = -(e_j∗e_i) ⊗ (e_i2·e_j2)` in symbol
    /// coordinates, indexed by `s * ambient + t`.
    fn symbol_bracket_table(&self) -> Vec<Vector> {
        let (dm, dn) = (self.left.dim(), self.right.dim());
        let mut table = Vec::with_capacity(dm * dn * dm * dn);
        for i in 0..dm {
            for j in 0..dn {
                let lhs: Vector = self
                    .right_on_left
                    .act_basis(j, i)
                    .iter()
                    .map(|x| -x.clone())
                    .collect();
                for i2 in 0..dm {
                    for j2 in 0..dn {
                        table.push(kron_vectors(&lhs, self.left_on_right.act_basis(i2, j2)));
                    }
                }
            }
        }
        table
    }

    /// Bracket on symbol coordinates (before passing to the quotient).
    pub fn symbol_bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        bilinear(&self.symbol_bracket_table(), self.ambient_dim(), x, y)
    }

    /// Coordinates of `m ⊗ n` in the quotient.
    pub fn pure_tensor(&self, m: &[Rational], n: &[Rational]) -> Result<Vector> {
        if m.len() != self.left.dim() || n.len() != self.right.dim() {
            return Err(Error::DimensionMismatch {
                context: format!("pure tensor in {}", self.quotient.name()),
                expected: self.left.dim() + self.right.dim(),
                found: m.len() + n.len(),
            });
        }
        self.proj.mul_vec(&kron_vectors(m, n))
    }

    /// Quotient coordinates of the symbol `e_i ⊗ e_j`.
    pub fn symbol(&self, i: usize, j: usize) -> Vector {
        self.proj.column(self.symbol_index(i, j))
    }

    /// Pushes a linear map on symbols down to the quotients: checks that
    /// `symbol_images` maps `W` of `self` into `W` of `target`, then returns
    /// `proj_target * symbol_images * section_self`.
    pub fn descend_linear(
        &self,
        target: &TensorPresentation,
        symbol_images: &RatMatrix,
    ) -> Result<RatMatrix> {
        if symbol_images.rows() != target.ambient_dim()
            || symbol_images.cols() != self.ambient_dim()
        {
            return Err(Error::DimensionMismatch {
                context: "symbol map".into(),
                expected: target.ambient_dim() * self.ambient_dim(),
                found: symbol_images.rows() * symbol_images.cols(),
            });
        }
        for (rel, v) in self.relation_vectors() {
            if !target.relations.contains(&symbol_images.mul_vec(&v)?)? {
                return Err(Error::NotWellDefined {
                    relation: rel.to_string(),
                });
            }
        }
        target.proj.mul(symbol_images)?.mul(&self.section)
    }
}

fn bilinear(table: &[Vector], amb: usize, x: &[Rational], y: &[Rational]) -> Vector {
    let out_dim = table.first().map_or(0, Vec::len);
    let mut out = zero_vector(out_dim);
    for (s, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (t, b) in y.iter().enumerate() {
            if !b.is_zero() {
                add_scaled(&mut out, &(a * b), &table[s * amb + t]);
            }
        }
    }
    out
}

/// Free function form of [`TensorPresentation::build`].
pub fn build_nonabelian_tensor(
    left_on_right: &Action,
    right_on_left: &Action,
) -> Result<TensorPresentation> {
    TensorPresentation::build(left_on_right, right_on_left)
}

pub fn pure_tensor(tp: &TensorPresentation, m: &[Rational], n: &[Rational]) -> Result<Vector> {
    tp.pure_tensor(m, n)
}

/// `f ⊗ g: M ⊗ N -> M' ⊗ N'` for equivariant `f: M -> M'`, `g: N -> N'`.
pub fn induced_hom(
    src: &TensorPresentation,
    tgt: &TensorPresentation,
    f: &LieHom,
    g: &LieHom,
) -> Result<LieHom> {
    if !f.source.same_structure(&src.left)
        || !f.target.same_structure(&tgt.left)
        || !g.source.same_structure(&src.right)
        || !g.target.same_structure(&tgt.right)
    {
        return Err(Error::Precondition(
            "induced map: factor maps do not match the tensor products".into(),
        ));
    }
    let (dm, dn) = (src.left.dim(), src.right.dim());
    for i in 0..dm {
        let fi = f.matrix.column(i);
        for j in 0..dn {
            let gj = g.matrix.column(j);
            // g(m·n) = f(m)·g(n)
            let lhs = g.apply(src.left_on_right.act_basis(i, j))?;
            let rhs = tgt.left_on_right.act(&fi, &gj)?;
            if lhs != rhs {
                return Err(Error::Precondition(format!(
                    "induced map: not equivariant for the left action at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            // f(n∗m) = g(n)∗f(m)
            let lhs = f.apply(src.right_on_left.act_basis(j, i))?;
            let rhs = tgt.right_on_left.act(&gj, &fi)?;
            if lhs != rhs {
                return Err(Error::Precondition(format!(
                    "induced map: not equivariant for the right action at ({}, {})",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let symbols = f.matrix.kron(&g.matrix);
    let m = src.descend_linear(tgt, &symbols)?;
    let h = LieHom::new(src.quotient.clone(), tgt.quotient.clone(), m)?;
    h.check()
        .map_err(|v| Error::Assertion(format!("induced map is not a Lie hom: {v}")))?;
    Ok(h)
}

/// A Lie hom out of `M ⊗ N` defined by its values on the symbols.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    pub hom: LieHom,
    /// `target_dim x (dim M * dim N)`, column `s` is the image of symbol `s`.
    pub on_generators: RatMatrix,
}

/// Checks that `values` annihilates every relation, then that the induced
/// map is a Lie hom.
pub fn generator_map(
    tp: &TensorPresentation,
    values: RatMatrix,
    target: &Arc<LieAlgebra>,
) -> Result<GeneratorMap> {
    if values.rows() != target.dim() || values.cols() != tp.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: format!("generator values into {}", target.name()),
            expected: target.dim() * tp.ambient_dim(),
            found: values.rows() * values.cols(),
        });
    }
    for (rel, v) in tp.relation_vectors() {
        if !is_zero_vector(&values.mul_vec(&v)?) {
            return Err(Error::NotWellDefined {
                relation: rel.to_string(),
            });
        }
    }
    let hom = LieHom::new(
        tp.quotient.clone(),
        target.clone(),
        values.mul(&tp.section)?,
    )?;
    hom.check().map_err(|v| {
        Error::axiom(
            format!("map {} -> {}", tp.quotient.name(), target.name()),
            v,
        )
    })?;
    Ok(GeneratorMap {
        hom,
        on_generators: values,
    })
}

/// Generator values given as a function of basis indices `(i, j)`.
pub fn generator_values(
    tp: &TensorPresentation,
    target_dim: usize,
    mut value: impl FnMut(usize, usize) -> Result<Vector>,
) -> Result<RatMatrix> {
    let mut cols = Vec::with_capacity(tp.ambient_dim());
    for i in 0..tp.left.dim() {
        for j in 0..tp.right.dim() {
            cols.push(value(i, j)?);
        }
    }
    RatMatrix::from_columns(target_dim, &cols)
}

/// Action of `actor` on `M ⊗ N` by `x·(m ⊗ n) = (x·m) ⊗ n + m ⊗ (x·n)`,
/// given the matrices of `e_a · -` on each factor. The symbol maps must
/// preserve `W`.
pub fn diagonal_action(
    tp: &TensorPresentation,
    actor: &Arc<LieAlgebra>,
    on_left: &[RatMatrix],
    on_right: &[RatMatrix],
) -> Result<Action> {
    let (dm, dn) = (tp.left.dim(), tp.right.dim());
    let mut mats = Vec::with_capacity(actor.dim());
    for (l, r) in on_left.iter().zip(on_right) {
        let symbols = l
            .kron(&RatMatrix::identity(dn))
            .add(&RatMatrix::identity(dm).kron(r))?;
        mats.push(tp.descend_linear(tp, &symbols)?);
    }
    Action::from_matrices(actor.clone(), tp.quotient.clone(), &mats)
}
