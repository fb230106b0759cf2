//! Metric Lie algebras given by structure constants and a Gram matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Deref, Index};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::matrix::Mat;

/// Coefficient vector of a Lie algebra element (equivalently, of a
/// left-invariant vector field) in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldVector<S>(Vec<S>);

impl<S: Scalar> FieldVector<S> {
    pub fn new(components: Vec<S>) -> Self {
        FieldVector(components)
    }

    pub fn zero(n: usize) -> Self {
        FieldVector(vec![S::zero(); n])
    }

    /// The basis vector v_{i+1}.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = S::one();
        v
    }

    pub fn components(&self) -> &[S] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<S> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        FieldVector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        FieldVector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b).collect())
    }

    pub fn scale(&self, k: &S) -> Self {
        FieldVector(self.0.iter().map(|a| a.clone() * k).collect())
    }
}

impl<S> Deref for FieldVector<S> {
    type Target = [S];
    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S> Index<usize> for FieldVector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S> From<Vec<S>> for FieldVector<S> {
    fn from(v: Vec<S>) -> Self {
        FieldVector(v)
    }
}

/// A basis triple (0-based) on which the Jacobi identity fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: [usize; 3],
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.triple;
        write!(f, "Jacobi identity fails on (v{}, v{}, v{})", i + 1, j + 1, k + 1)
    }
}

impl std::error::Error for JacobiViolation {}

/// A finite-dimensional real Lie algebra with a fixed basis v_1..v_n and an
/// inner product given by its Gram matrix.
///
/// Only brackets `[v_i, v_j]` with `i < j` are stored; the rest follow from
/// antisymmetry. Scalars are `Rational` for concrete algebras and
/// `PolyExpr` for parameter-symbolic ones; the Gram matrix is always rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricLieAlgebra<S> {
    dim: usize,
    structure: BTreeMap<(usize, usize), Vec<S>>,
    gram: Mat<Rational>,
    gram_inv: Mat<Rational>,
}

impl<S: Scalar> MetricLieAlgebra<S> {
    /// Abelian algebra of dimension `dim` with an orthonormal basis.
    pub fn abelian(dim: usize) -> Self {
        MetricLieAlgebra {
            dim,
            structure: BTreeMap::new(),
            gram: Mat::identity(dim),
            gram_inv: Mat::identity(dim),
        }
    }

    pub fn with_gram(dim: usize, gram: Mat<Rational>) -> Result<Self> {
        if gram.rows() != dim || gram.cols() != dim {
            return Err(Error::dimension(format!(
                "Gram matrix is {}x{}, algebra has dimension {dim}",
                gram.rows(),
                gram.cols()
            )));
        }
        gram.check_positive_definite()?;
        let gram_inv = gram.inverse()?;
        Ok(MetricLieAlgebra {
            dim,
            structure: BTreeMap::new(),
            gram,
            gram_inv,
        })
    }

    /// Sets `[v_i, v_j]` (0-based, `i < j`) to the given coefficient vector.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<S>) -> Result<()> {
        self.check_pair(i, j)?;
        if coeffs.len() != self.dim {
            return Err(Error::dimension(format!(
                "bracket vector has length {}, expected {}",
                coeffs.len(),
                self.dim
            )));
        }
        if coeffs.iter().all(S::is_zero) {
            self.structure.remove(&(i, j));
        } else {
            self.structure.insert((i, j), coeffs);
        }
        Ok(())
    }

    /// Adds `c·v_k` to `[v_i, v_j]` (0-based, `i < j`).
    pub fn add_structure_constant(&mut self, i: usize, j: usize, k: usize, c: S) -> Result<()> {
        self.check_pair(i, j)?;
        if k >= self.dim {
            return Err(Error::InvalidBracket(format!("target index {} out of range", k + 1)));
        }
        let mut coeffs = self
            .structure
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| vec![S::zero(); self.dim]);
        coeffs[k] += c;
        self.set_bracket(i, j, coeffs)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= j {
            return Err(Error::InvalidBracket(format!(
                "brackets are stored as [v_i, v_j] with i < j, got ({}, {})",
                i + 1,
                j + 1
            )));
        }
        if j >= self.dim {
            return Err(Error::InvalidBracket(format!(
                "index {} out of range for dimension {}",
                j + 1,
                self.dim
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Mat<Rational> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Mat<Rational> {
        &self.gram_inv
    }

    pub fn is_orthonormal(&self) -> bool {
        self.gram == Mat::identity(self.dim)
    }

    /// Stored brackets `((i, j), [v_i, v_j])` with `i < j`, in index order.
    pub fn structure(&self) -> impl Iterator<Item = ((usize, usize), &[S])> {
        self.structure.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// `[v_i, v_j]` for any pair of basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<S> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![S::zero(); self.dim],
            Less => self
                .structure
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![S::zero(); self.dim]),
            Greater => self
                .structure
                .get(&(j, i))
                .map(|v| v.iter().map(|c| -c.clone()).collect())
                .unwrap_or_else(|| vec![S::zero(); self.dim]),
        }
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::dimension(format!(
                "vector has length {}, algebra has dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &FieldVector<S>, y: &FieldVector<S>) -> Result<FieldVector<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![S::zero(); self.dim];
        for (&(i, j), coeffs) in &self.structure {
            // x_i y_j - x_j y_i
            let w = x[i].clone() * &y[j] - x[j].clone() * &y[i];
            if w.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(coeffs) {
                if !c.is_zero() {
                    *o += w.clone() * c;
                }
            }
        }
        Ok(FieldVector(out))
    }

    /// ⟨u, v⟩ through the Gram matrix.
    pub fn inner(&self, u: &FieldVector<S>, v: &FieldVector<S>) -> Result<S> {
        self.check_len(u)?;
        self.check_len(v)?;
        let mut acc = S::zero();
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let g = &self.gram[(i, j)];
                if g.is_zero() || v[j].is_zero() {
                    continue;
                }
                acc += u[i].clone() * &v[j] * &S::from_rational(g);
            }
        }
        Ok(acc)
    }

    /// Checks `[[v_i,v_j],v_k] + [[v_j,v_k],v_i] + [[v_k,v_i],v_j] = 0` for all
    /// `i < j < k`, reporting the first failing triple.
    pub fn jacobi_check(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        let e = |i| FieldVector::basis(n, i);
        let br = |a: &FieldVector<S>, b: &FieldVector<S>| {
            self.bracket(a, b).expect("basis vectors have the algebra dimension")
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (vi, vj, vk) = (e(i), e(j), e(k));
                    let sum = br(&br(&vi, &vj), &vk)
                        .add(&br(&br(&vj, &vk), &vi))
                        .add(&br(&br(&vk, &vi), &vj));
                    if !sum.is_zero() {
                        return Err(JacobiViolation { triple: [i, j, k] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Replaces every structure constant by `f(constant)`.
    pub fn map_scalars<T: Scalar>(
        &self,
        mut f: impl FnMut(&S) -> Result<T>,
    ) -> Result<MetricLieAlgebra<T>> {
        let mut structure = BTreeMap::new();
        for (&key, coeffs) in &self.structure {
            let mapped: Vec<T> = coeffs.iter().map(&mut f).collect::<Result<_>>()?;
            if !mapped.iter().all(T::is_zero) {
                structure.insert(key, mapped);
            }
        }
        Ok(MetricLieAlgebra {
            dim: self.dim,
            structure,
            gram: self.gram.clone(),
            gram_inv: self.gram_inv.clone(),
        })
    }
}

impl MetricLieAlgebra<Rational> {
    /// Dimensions of g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ … , stopping at 0 or when the
    /// series stabilises. Each value is strictly smaller than the previous.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let n = self.dim;
        let mut dims = vec![n];
        let mut current: Vec<FieldVector<Rational>> = (0..n).map(|i| FieldVector::basis(n, i)).collect();
        while !current.is_empty() {
            let mut spanning = Vec::new();
            for i in 0..n {
                let vi = FieldVector::basis(n, i);
                for w in &current {
                    let b = self.bracket(&vi, w).expect("dimensions agree");
                    if !b.is_zero() {
                        spanning.push(b.into_inner());
                    }
                }
            }
            let next = span_basis(n, spanning);
            if next.len() == current.len() {
                break;
            }
            dims.push(next.len());
            current = next;
        }
        dims
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Canonical basis of the center, the kernel of ξ ↦ ad_ξ.
    pub fn center_basis(&self) -> Vec<FieldVector<Rational>> {
        let n = self.dim;
        // row (r, k), column j: component r of [v_j, v_k]
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|j| (0..n).flat_map(|k| self.basis_bracket(j, k)).collect())
            .collect();
        let system = Mat::from_columns(n * n, &columns).expect("columns have n² entries");
        system.nullspace().into_iter().map(FieldVector).collect()
    }
}

/// Row-reduced basis of the span of `vectors` in Qⁿ.
fn span_basis(n: usize, vectors: Vec<Vec<Rational>>) -> Vec<FieldVector<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_rows(vectors).expect("uniform length");
    let r = m.rref();
    (0..r.rank)
        .map(|row| FieldVector(r.matrix.row(row).to_vec()))
        .filter(|v| v.len() == n)
        .collect()
}
