//! Exact solution spaces of the Killing, one-harmonic, conformal and
//! concurrent conditions for left-invariant fields.
//!
//! Every condition is linear (or affine) in ξ, so each solver assembles a
//! coefficient matrix whose j-th column is the condition evaluated at
//! ξ = v_j, then reads off the canonical nullspace.

use crate::connection::{ad_matrix, ad_star_matrix, divergence, j_matrix, levi_civita_r};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::liealg::{FieldVector, MetricLieAlgebra};
use crate::matrix::{AffineSolution, Mat};

fn basis_columns<S: Scalar>(
    alg: &MetricLieAlgebra<S>,
    rows: usize,
    mut column: impl FnMut(&FieldVector<S>) -> Result<Vec<S>>,
) -> Result<Mat<S>> {
    let n = alg.dim();
    let cols = (0..n)
        .map(|j| column(&FieldVector::basis(n, j)))
        .collect::<Result<Vec<_>>>()?;
    Mat::from_columns(rows, &cols)
}

fn upper_triangle<S: Scalar>(m: &Mat<S>) -> Vec<S> {
    let n = m.rows();
    (0..n)
        .flat_map(|r| (r..n).map(move |c| (r, c)))
        .map(|(r, c)| m[(r, c)].clone())
        .collect()
}

fn gram_of<S: Scalar>(alg: &MetricLieAlgebra<S>) -> Mat<S> {
    alg.gram().map(S::from_rational)
}

/// G·ad_ξ + ad_ξᵀ·G as a function of ξ, one row per upper-triangular entry.
pub fn killing_system<S: Scalar>(alg: &MetricLieAlgebra<S>) -> Result<Mat<S>> {
    let n = alg.dim();
    let g = gram_of(alg);
    basis_columns(alg, n * (n + 1) / 2, |xi| {
        let ad = ad_matrix(alg, xi)?.matrix;
        let sym = g.mul(&ad)?.add(&ad.transpose().mul(&g)?)?;
        Ok(upper_triangle(&sym))
    })
}

/// G·ad_ξ + ad_ξᵀ·G + (2·div(ξ)/n)·G as a function of ξ, stacked like
/// [`killing_system`]. This is −(L_ξ h) + (2 div ξ / n) h, whose vanishing is
/// the conformal condition.
pub fn conformal_system<S: Scalar>(alg: &MetricLieAlgebra<S>) -> Result<Mat<S>> {
    let n = alg.dim();
    let g = gram_of(alg);
    basis_columns(alg, n * (n + 1) / 2, |xi| {
        let ad = ad_matrix(alg, xi)?.matrix;
        let factor = S::from_rational(&Rational::new(2, n as i64)?) * divergence(alg, xi)?;
        let sym = g
            .mul(&ad)?
            .add(&ad.transpose().mul(&g)?)?
            .add(&g.scale(&factor))?;
        Ok(upper_triangle(&sym))
    })
}

/// T(ξ) = Σᵢ (ad*_{vᵢ} + J_{vᵢ})(ad_ξ vᵢ) − ½ ad_ξ(ad*_{vᵢ} vᵢ), summed over an
/// orthonormal basis. Column j is T(v_j).
pub fn one_harmonic_matrix<S: Scalar>(alg: &MetricLieAlgebra<S>) -> Result<Mat<S>> {
    if !alg.is_orthonormal() {
        return Err(Error::RequiresOrthonormalBasis);
    }
    let n = alg.dim();
    let half = S::from_rational(&Rational::new(1, 2)?);
    let basis: Vec<FieldVector<S>> = (0..n).map(|i| FieldVector::basis(n, i)).collect();
    // ad*_{vᵢ} + J_{vᵢ} and ad*_{vᵢ}(vᵢ) do not depend on ξ
    let mut star_plus_j = Vec::with_capacity(n);
    let mut star_self = Vec::with_capacity(n);
    for v in &basis {
        let star = ad_star_matrix(alg, v)?;
        star_self.push(star.apply(v)?);
        star_plus_j.push(star.matrix.add(&j_matrix(alg, v)?.matrix)?);
    }
    basis_columns(alg, n, |xi| {
        let ad = ad_matrix(alg, xi)?;
        let mut total = FieldVector::zero(n);
        for (i, v) in basis.iter().enumerate() {
            let first = star_plus_j[i].mul_vec(&ad.apply(v)?)?;
            let second = ad.apply(&star_self[i])?.scale(&half);
            total = total.add(&FieldVector::new(first)).sub(&second);
        }
        Ok(total.into_inner())
    })
}

/// R_ξ as a function of ξ, flattened row-major into n² rows.
pub fn concurrent_system<S: Scalar>(alg: &MetricLieAlgebra<S>) -> Result<Mat<S>> {
    let n = alg.dim();
    basis_columns(alg, n * n, |xi| Ok(levi_civita_r(alg, xi)?.matrix.entries().to_vec()))
}

fn to_fields(vs: Vec<Vec<Rational>>) -> Vec<FieldVector<Rational>> {
    vs.into_iter().map(FieldVector::new).collect()
}

/// Left-invariant Killing fields: ad_ξ skew-adjoint.
pub fn killing_basis(alg: &MetricLieAlgebra<Rational>) -> Result<Vec<FieldVector<Rational>>> {
    Ok(to_fields(killing_system(alg)?.nullspace()))
}

/// Left-invariant one-harmonic fields. Needs an orthonormal basis.
pub fn one_harmonic_basis(alg: &MetricLieAlgebra<Rational>) -> Result<Vec<FieldVector<Rational>>> {
    Ok(to_fields(one_harmonic_matrix(alg)?.nullspace()))
}

/// Left-invariant conformal fields.
pub fn conformal_basis(alg: &MetricLieAlgebra<Rational>) -> Result<Vec<FieldVector<Rational>>> {
    Ok(to_fields(conformal_system(alg)?.nullspace()))
}

/// Solves R_ξ = id for ξ.
pub fn concurrent_solve(alg: &MetricLieAlgebra<Rational>) -> Result<AffineSolution> {
    let identity: Mat<Rational> = Mat::identity(alg.dim());
    concurrent_system(alg)?.solve_affine(identity.entries())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneHarmonic {
    Basis(Vec<FieldVector<Rational>>),
    /// The Gram matrix is not the identity.
    Skipped,
}

impl OneHarmonic {
    pub fn basis(&self) -> Option<&[FieldVector<Rational>]> {
        match self {
            OneHarmonic::Basis(b) => Some(b),
            OneHarmonic::Skipped => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub killing_equals_center: bool,
    /// `None` when the one-harmonic space was skipped.
    pub one_harmonic_equals_killing: Option<bool>,
    pub conformal_equals_killing: bool,
    pub concurrent_empty: bool,
}

impl Flags {
    /// True when every computed comparison holds.
    pub fn all_hold(&self) -> bool {
        self.killing_equals_center
            && self.one_harmonic_equals_killing.unwrap_or(true)
            && self.conformal_equals_killing
            && self.concurrent_empty
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpaceReport {
    pub center: Vec<FieldVector<Rational>>,
    pub killing: Vec<FieldVector<Rational>>,
    pub one_harmonic: OneHarmonic,
    pub conformal: Vec<FieldVector<Rational>>,
    pub concurrent: AffineSolution,
    pub flags: Flags,
}

pub fn analyze(alg: &MetricLieAlgebra<Rational>) -> Result<FieldSpaceReport> {
    let center = alg.center_basis();
    let killing = killing_basis(alg)?;
    let one_harmonic = match one_harmonic_basis(alg) {
        Ok(b) => OneHarmonic::Basis(b),
        Err(Error::RequiresOrthonormalBasis) => OneHarmonic::Skipped,
        Err(e) => return Err(e),
    };
    let conformal = conformal_basis(alg)?;
    let concurrent = concurrent_solve(alg)?;
    let flags = Flags {
        killing_equals_center: killing == center,
        one_harmonic_equals_killing: one_harmonic.basis().map(|b| b == killing.as_slice()),
        conformal_equals_killing: conformal == killing,
        concurrent_empty: concurrent.is_empty(),
    };
    Ok(FieldSpaceReport {
        center,
        killing,
        one_harmonic,
        conformal,
        concurrent,
        flags,
    })
}
