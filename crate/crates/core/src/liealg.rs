//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants `[e_i, e_j] = sum_k c[i][j][k] e_k`.
//!
//! Subalgebras and ideals are [`Subspace`] values in the ambient basis. Only
//! [`LieAlgebra::quotient`] produces a fresh basis.

use std::sync::Arc;

use num::Zero;

use crate::error::{Axiom, Error, Result, Verdict, Violation};
use crate::exactla::{
    add_scaled, is_zero_vector, rat, sub_vectors, unit_vector, zero_vector, RatMatrix, Rational,
    Subspace, Vector,
};
use crate::xmod::Action;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    consts: Vec<Rational>,
    basis_names: Vec<String>,
}

fn idx3(dim: usize, i: usize, j: usize, k: usize) -> usize {
    (i * dim + j) * dim + k
}

/// Checks antisymmetry and the Jacobi identity on all basis triples.
pub fn verify_lie(dim: usize, consts: &[Rational]) -> Verdict {
    assert_eq!(consts.len(), dim * dim * dim, "structure tensor shape");
    for i in 0..dim {
        for j in i..dim {
            for k in 0..dim {
                let a = &consts[idx3(dim, i, j, k)];
                let b = &consts[idx3(dim, j, i, k)];
                if (a + b) != Rational::zero() {
                    return Err(Violation::new(Axiom::Antisymmetry, [i, j]));
                }
            }
        }
    }
    // With antisymmetry in place the Jacobiator is alternating, so strictly
    // increasing triples cover everything.
    let bb = |x: usize, y: usize, z: usize, out: &mut Vector| {
        for l in 0..dim {
            let c = &consts[idx3(dim, y, z, l)];
            if !c.is_zero() {
                add_scaled(
                    out,
                    c,
                    &consts[idx3(dim, x, l, 0)..idx3(dim, x, l, 0) + dim],
                );
            }
        }
    };
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                let mut acc = zero_vector(dim);
                bb(i, j, k, &mut acc);
                bb(j, k, i, &mut acc);
                bb(k, i, j, &mut acc);
                if !is_zero_vector(&acc) {
                    return Err(Violation::new(Axiom::Jacobi, [i, j, k]));
                }
            }
        }
    }
    Ok(())
}

impl LieAlgebra {
    /// Validates the structure constants and wraps them.
    pub fn new(name: impl Into<String>, dim: usize, consts: Vec<Rational>) -> Result<Self> {
        let name = name.into();
        if consts.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: format!("structure constants of {name}"),
                expected: dim * dim * dim,
                found: consts.len(),
            });
        }
        verify_lie(dim, &consts).map_err(|v| Error::axiom(&name, v))?;
        let basis_names = (1..=dim).map(|i| format!("e{i}")).collect();
        Ok(Self {
            name,
            dim,
            consts,
            basis_names,
        })
    }

    /// Builds an algebra from sparse `(i, j, k, value)` entries (0-based),
    /// completing `[e_j, e_i] = -[e_i, e_j]`. Inconsistent pairs are rejected
    /// as antisymmetry violations.
    pub fn from_sparse(
        name: impl Into<String>,
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let name = name.into();
        let mut consts = vec![Rational::zero(); dim * dim * dim];
        let mut given = vec![false; dim * dim * dim];
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch {
                    context: format!("bracket entry of {name}"),
                    expected: dim,
                    found: i.max(j).max(k) + 1,
                });
            }
            let here = idx3(dim, i, j, k);
            let mirror = idx3(dim, j, i, k);
            if (i == j && !v.is_zero())
                || (given[here] && consts[here] != *v)
                || (given[mirror] && consts[mirror] != -v.clone())
            {
                return Err(Error::axiom(
                    &name,
                    Violation::new(Axiom::Antisymmetry, [i.min(j), i.max(j)]),
                ));
            }
            consts[here] = v.clone();
            consts[mirror] = -v.clone();
            given[here] = true;
            given[mirror] = true;
        }
        Self::new(name, dim, consts)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(
            format!("K{dim}"),
            dim,
            vec![Rational::zero(); dim * dim * dim],
        )
        .expect("abelian algebra")
    }

    /// `sl2` in the basis `(e, h, f)`.
    pub fn sl2() -> Self {
        let entries = [(1, 0, 0, rat(2)), (1, 2, 2, rat(-2)), (0, 2, 1, rat(1))];
        let mut l = Self::from_sparse("sl2", 3, &entries).expect("sl2");
        l.basis_names = vec!["e".into(), "h".into(), "f".into()];
        l
    }

    /// Heisenberg algebra `h3` in the basis `(x, y, z)` with `[x, y] = z`.
    pub fn heisenberg() -> Self {
        let mut l = Self::from_sparse("h3", 3, &[(0, 1, 2, rat(1))]).expect("h3");
        l.basis_names = vec!["x".into(), "y".into(), "z".into()];
        l
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: format!("basis names of {}", self.name),
                expected: self.dim,
                found: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Same dimension and structure constants, ignoring names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.consts == other.consts
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.consts
    }

    pub fn verify(&self) -> Verdict {
        verify_lie(self.dim, &self.consts)
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Zero::is_zero)
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let s = idx3(self.dim, i, j, 0);
        &self.consts[s..s + self.dim]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    context: format!("bracket in {}", self.name),
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = zero_vector(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.basis_bracket(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x) = [x, -]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<RatMatrix> {
        let cols = (0..self.dim)
            .map(|i| self.bracket(x, &unit_vector(self.dim, i)))
            .collect::<Result<Vec<_>>>()?;
        RatMatrix::from_columns(self.dim, &cols)
    }

    /// Span of all basis brackets. This span is already an ideal.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                rows.push(self.basis_bracket(i, j).to_vec());
            }
        }
        Subspace::span(self.dim, &rows).expect("bracket rows")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().is_full()
    }

    /// Kernel of the stacked maps `ad(e_i)`.
    pub fn center(&self) -> Subspace {
        let mut stacked = RatMatrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let ad = self.ad_matrix(&unit_vector(self.dim, i)).expect("ad");
            stacked = stacked.vstack(&ad).expect("same width");
        }
        crate::exactla::kernel_basis(&stacked)
    }

    /// Smallest bracket-closed subspace containing `seed`.
    pub fn subalgebra_closure(&self, seed: &Subspace) -> Result<Subspace> {
        if seed.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: format!("closure seed in {}", self.name),
                expected: self.dim,
                found: seed.ambient_dim(),
            });
        }
        let mut current = seed.clone();
        // The dimension strictly grows each round or the loop stops.
        for _ in 0..=self.dim {
            let basis = current.basis_vectors();
            let mut rows = basis.clone();
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    rows.push(self.bracket(&basis[a], &basis[b])?);
                }
            }
            let next = Subspace::span(self.dim, &rows)?;
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
        Ok(current)
    }

    /// First `(basis index, subspace basis index)` with `[e_i, w]` outside `s`.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<(usize, usize)> {
        let ws = s.basis_vectors();
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            for (k, w) in ws.iter().enumerate() {
                let v = self.bracket(&e, w).expect("dims");
                if !s.contains(&v).expect("dims") {
                    return Some((i, k));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.ideal_witness(s).is_none()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let ws = s.basis_vectors();
        ws.iter().enumerate().all(|(a, x)| {
            ws[a + 1..].iter().all(|y| {
                s.contains(&self.bracket(x, y).expect("dims"))
                    .expect("dims")
            })
        })
    }

    /// Quotient by an ideal, with the projection as a Lie homomorphism. The
    /// quotient basis is indexed by the non-pivot columns of the ideal.
    pub fn quotient(self: &Arc<Self>, ideal: &Subspace) -> Result<(Arc<LieAlgebra>, LieHom)> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: format!("ideal of {}", self.name),
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if let Some((basis, vector)) = self.ideal_witness(ideal) {
            return Err(Error::NotAnIdeal { basis, vector });
        }
        let q = ideal.quotient();
        let sections: Vec<Vector> = (0..q.dim).map(|a| q.section.column(a)).collect();
        let mut consts = Vec::with_capacity(q.dim * q.dim * q.dim);
        for a in 0..q.dim {
            for b in 0..q.dim {
                let br = self.bracket(&sections[a], &sections[b])?;
                consts.extend(q.proj.mul_vec(&br)?);
            }
        }
        let quotient = Arc::new(LieAlgebra::new(format!("{}/I", self.name), q.dim, consts)?);
        let proj = LieHom::new(self.clone(), quotient.clone(), q.proj)?;
        Ok((quotient, proj))
    }

    /// Adjoint action of the algebra on itself.
    pub fn adjoint_action(self: &Arc<Self>) -> Action {
        Action::new(self.clone(), self.clone(), self.consts.clone()).expect("adjoint shape")
    }

    /// Direct sum `self x other`, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut consts = vec![Rational::zero(); n * n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    consts[idx3(n, i, j, k)] = self.consts[idx3(self.dim, i, j, k)].clone();
                }
            }
        }
        let o = self.dim;
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    consts[idx3(n, o + i, o + j, o + k)] =
                        other.consts[idx3(other.dim, i, j, k)].clone();
                }
            }
        }
        let mut names = self.basis_names.clone();
        names.extend(other.basis_names.iter().cloned());
        LieAlgebra {
            name: format!("{}x{}", self.name, other.name),
            dim: n,
            consts,
            basis_names: names,
        }
    }
}

/// A linear map between Lie algebras, stored as a `target_dim x source_dim`
/// matrix. Construction only checks shapes; [`LieHom::check`] verifies the
/// bracket rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieHom {
    pub source: Arc<LieAlgebra>,
    pub target: Arc<LieAlgebra>,
    pub matrix: RatMatrix,
}

impl LieHom {
    pub fn new(
        source: Arc<LieAlgebra>,
        target: Arc<LieAlgebra>,
        matrix: RatMatrix,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                context: format!("map {} -> {}", source.name(), target.name()),
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(l: &Arc<LieAlgebra>) -> Self {
        Self {
            source: l.clone(),
            target: l.clone(),
            matrix: RatMatrix::identity(l.dim()),
        }
    }

    pub fn zero(source: &Arc<LieAlgebra>, target: &Arc<LieAlgebra>) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: RatMatrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &LieHom) -> Result<LieHom> {
        LieHom::new(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix)?,
        )
    }

    /// `f[e_i, e_j] = [f e_i, f e_j]` on all basis pairs.
    pub fn check(&self) -> Verdict {
        let n = self.source.dim();
        let images: Vec<Vector> = (0..n).map(|i| self.matrix.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply(self.source.basis_bracket(i, j)).expect("dims");
                let rhs = self.target.bracket(&images[i], &images[j]).expect("dims");
                if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                    return Err(Violation::new(Axiom::HomBracket, [i, j]));
                }
            }
        }
        Ok(())
    }

    pub fn kernel(&self) -> Subspace {
        crate::exactla::kernel_basis(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }
}

/// Free-function alias of [`LieHom::check`].
pub fn hom_check(f: &LieHom) -> Verdict {
    f.check()
}
