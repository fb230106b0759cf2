//! Operator calculus of a metric Lie algebra: ad, its metric adjoint, J, and
//! the Levi-Civita operators L and R obtained from the Koszul formula.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::liealg::{FieldVector, MetricLieAlgebra};
use crate::matrix::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Ad,
    AdStar,
    J,
    L,
    R,
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::Ad => "ad",
            OperatorKind::AdStar => "adstar",
            OperatorKind::J => "J",
            OperatorKind::L => "L",
            OperatorKind::R => "R",
        })
    }
}

/// An endomorphism of the algebra built from a single argument ξ.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix<S> {
    pub kind: OperatorKind,
    pub matrix: Mat<S>,
    pub argument: FieldVector<S>,
}

impl<S: Scalar> fmt::Debug for OperatorMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({:?}) = {:?}", self.kind, self.argument, self.matrix)
    }
}

impl<S: Scalar> OperatorMatrix<S> {
    pub fn apply(&self, v: &FieldVector<S>) -> Result<FieldVector<S>> {
        self.matrix.mul_vec(v).map(FieldVector::new)
    }
}

fn check_arg<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<()> {
    if xi.len() != alg.dim() {
        return Err(Error::dimension(format!(
            "vector has length {}, algebra has dimension {}",
            xi.len(),
            alg.dim()
        )));
    }
    Ok(())
}

fn lift<S: Scalar>(m: &Mat<Rational>) -> Mat<S> {
    m.map(S::from_rational)
}

fn half<S: Scalar>() -> S {
    S::from_rational(&Rational::new(1, 2).expect("nonzero denominator"))
}

fn ad<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Mat<S> {
    let n = alg.dim();
    let columns: Vec<Vec<S>> = (0..n)
        .map(|k| {
            alg.bracket(xi, &FieldVector::basis(n, k))
                .expect("argument length checked")
                .into_inner()
        })
        .collect();
    Mat::from_columns(n, &columns).expect("n columns of length n")
}

fn ad_star<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Mat<S> {
    let adt = ad(alg, xi).transpose();
    if alg.is_orthonormal() {
        return adt;
    }
    let g: Mat<S> = lift(alg.gram());
    let g_inv: Mat<S> = lift(alg.gram_inverse());
    g_inv
        .mul(&adt)
        .and_then(|m| m.mul(&g))
        .expect("square matrices of equal size")
}

fn j<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Mat<S> {
    let n = alg.dim();
    let columns: Vec<Vec<S>> = (0..n)
        .map(|k| {
            ad_star(alg, &FieldVector::basis(n, k))
                .mul_vec(xi)
                .expect("argument length checked")
        })
        .collect();
    Mat::from_columns(n, &columns).expect("n columns of length n")
}

/// Matrix of ad_ξ = [ξ, ·]; column k holds [ξ, v_k].
pub fn ad_matrix<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<OperatorMatrix<S>> {
    check_arg(alg, xi)?;
    Ok(OperatorMatrix {
        kind: OperatorKind::Ad,
        matrix: ad(alg, xi),
        argument: xi.clone(),
    })
}

/// Metric adjoint of ad_ξ: G⁻¹ · ad_ξᵀ · G.
pub fn ad_star_matrix<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<OperatorMatrix<S>> {
    check_arg(alg, xi)?;
    Ok(OperatorMatrix {
        kind: OperatorKind::AdStar,
        matrix: ad_star(alg, xi),
        argument: xi.clone(),
    })
}

/// J_ξ v = ad*_v ξ.
pub fn j_matrix<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<OperatorMatrix<S>> {
    check_arg(alg, xi)?;
    Ok(OperatorMatrix {
        kind: OperatorKind::J,
        matrix: j(alg, xi),
        argument: xi.clone(),
    })
}

/// L_ξ = ½(ad_ξ − ad*_ξ) − ½J_ξ, so that L_u v = ∇_u v.
pub fn levi_civita_l<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<OperatorMatrix<S>> {
    check_arg(alg, xi)?;
    let h = half::<S>();
    let m = ad(alg, xi)
        .sub(&ad_star(alg, xi))
        .and_then(|m| m.sub(&j(alg, xi)))?
        .scale(&h);
    Ok(OperatorMatrix {
        kind: OperatorKind::L,
        matrix: m,
        argument: xi.clone(),
    })
}

/// R_ξ = −½(ad_ξ + ad*_ξ) − ½J_ξ, so that R_ξ v = L_v ξ.
pub fn levi_civita_r<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<OperatorMatrix<S>> {
    check_arg(alg, xi)?;
    let h = -half::<S>();
    let m = ad(alg, xi)
        .add(&ad_star(alg, xi))
        .and_then(|m| m.add(&j(alg, xi)))?
        .scale(&h);
    Ok(OperatorMatrix {
        kind: OperatorKind::R,
        matrix: m,
        argument: xi.clone(),
    })
}

/// div(ξ) = −Tr(ad_ξ).
pub fn divergence<S: Scalar>(alg: &MetricLieAlgebra<S>, xi: &FieldVector<S>) -> Result<S> {
    check_arg(alg, xi)?;
    Ok(-ad(alg, xi).trace()?)
}
