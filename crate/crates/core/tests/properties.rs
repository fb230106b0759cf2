//! Algebraic invariants checked on random inputs.

use std::collections::BTreeMap;

use liefields_core::catalog::{instantiate, sample_params, TypeId};
use liefields_core::connection::{ad_matrix, ad_star_matrix, divergence, j_matrix, levi_civita_l, levi_civita_r};
use liefields_core::exactnum::{PolyExpr, Rational, Scalar, Var};
use liefields_core::liealg::{FieldVector, MetricLieAlgebra};
use liefields_core::matrix::{AffineSolution, Mat};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = FieldVector<Rational>> {
    prop::collection::vec(rational(), n).prop_map(FieldVector::new)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Rational>> {
    // small entries with many zeros so rank deficiency actually happens
    prop::collection::vec(prop_oneof![Just(0i64), -3i64..=3], rows * cols).prop_map(move |e| {
        Mat::from_fn(rows, cols, |r, c| Rational::from_integer(e[r * cols + c]))
    })
}

fn catalog_algebra() -> impl Strategy<Value = (TypeId, MetricLieAlgebra<Rational>)> {
    (0..TypeId::ALL.len(), 0u64..1000).prop_map(|(t, i)| {
        let ty = TypeId::ALL[t];
        (ty, instantiate(ty, &sample_params(ty, 99, i, 10).unwrap()).unwrap())
    })
}

fn poly() -> impl Strategy<Value = PolyExpr> {
    let vars = [Var::Alpha, Var::Beta, Var::Gamma];
    prop::collection::vec((rational(), 0u32..3, 0usize..3, 0u32..2, 0usize..3), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(PolyExpr::zero(), |acc, (c, e1, v1, e2, v2)| {
            acc + PolyExpr::constant(c) * PolyExpr::var(vars[v1]).pow(e1) * PolyExpr::var(vars[v2]).pow(e2)
        })
    })
}

fn assignment() -> impl Strategy<Value = BTreeMap<Var, Rational>> {
    (rational(), rational(), rational())
        .prop_map(|(a, b, c)| [(Var::Alpha, a), (Var::Beta, b), (Var::Gamma, c)].into_iter().collect())
}

fn is_identity(m: &Mat<Rational>) -> bool {
    *m == Mat::identity(m.rows())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_eval_is_a_ring_homomorphism(p in poly(), q in poly(), at in assignment()) {
        let ev = |x: &PolyExpr| x.eval(&at).unwrap();
        prop_assert_eq!(ev(&(p.clone() + q.clone())), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&(p.clone() * q.clone())), ev(&p) * ev(&q));
        prop_assert!((p.clone() + (-p.clone())).is_zero());
        prop_assert_eq!(p.to_string().parse::<PolyExpr>().unwrap(), p);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4, 6)) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.rank, r.rank);
        prop_assert_eq!(r.pivots.len(), r.rank);
    }

    #[test]
    fn rank_of_product_is_bounded(a in matrix(4, 3), b in matrix(3, 5)) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn nullspace_is_a_kernel_basis(m in matrix(4, 6)) {
        let ns = m.nullspace();
        prop_assert_eq!(ns.len() + m.rank(), 6);
        for v in &ns {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
        if !ns.is_empty() {
            prop_assert_eq!(Mat::from_columns(6, &ns).unwrap().rank(), ns.len());
        }
    }

    #[test]
    fn affine_solutions_solve(m in matrix(5, 4), x in prop::collection::vec(rational(), 4), b in prop::collection::vec(rational(), 5)) {
        // a right-hand side in the image is always solvable
        let image = m.mul_vec(&x).unwrap();
        match m.solve_affine(&image).unwrap() {
            AffineSolution::NoSolution => prop_assert!(false, "image vector rejected"),
            AffineSolution::Solutions { particular, nullspace } => {
                prop_assert_eq!(m.mul_vec(&particular).unwrap(), image);
                prop_assert_eq!(nullspace, m.nullspace());
            }
        }
        // an arbitrary one is solvable exactly when appending it keeps the rank
        let augmented = Mat::from_fn(5, 5, |r, c| if c < 4 { m.row(r)[c].clone() } else { b[r].clone() });
        let solvable = augmented.rank() == m.rank();
        prop_assert_eq!(!m.solve_affine(&b).unwrap().is_empty(), solvable);
    }

    #[test]
    fn det_agrees_with_elimination(m in matrix(4, 4)) {
        prop_assert_eq!(m.det().unwrap(), m.det_by_elimination().unwrap());
        prop_assert_eq!(m.det().unwrap().is_zero(), m.rank() < 4);
        if let Ok(inv) = m.inverse() {
            prop_assert!(is_identity(&m.mul(&inv).unwrap()));
        }
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric((_, alg) in catalog_algebra(), x in vector(5), y in vector(5), z in vector(5), k in rational()) {
        let xy = alg.bracket(&x, &y).unwrap();
        prop_assert_eq!(alg.bracket(&y, &x).unwrap(), xy.scale(&-Rational::one()));
        prop_assert!(alg.bracket(&x, &x).unwrap().is_zero());
        prop_assert_eq!(
            alg.bracket(&x.scale(&k).add(&z), &y).unwrap(),
            xy.scale(&k).add(&alg.bracket(&z, &y).unwrap())
        );
        let jacobi = alg.bracket(&x, &alg.bracket(&y, &z).unwrap()).unwrap()
            .add(&alg.bracket(&y, &alg.bracket(&z, &x).unwrap()).unwrap())
            .add(&alg.bracket(&z, &alg.bracket(&x, &y).unwrap()).unwrap());
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn connection_identities((_, alg) in catalog_algebra(), xi in vector(5), u in vector(5), v in vector(5)) {
        let ip = |a: &FieldVector<Rational>, b: &FieldVector<Rational>| alg.inner(a, b).unwrap();
        let ad = ad_matrix(&alg, &xi).unwrap();
        let star = ad_star_matrix(&alg, &xi).unwrap();
        let j = j_matrix(&alg, &xi).unwrap();
        let l = levi_civita_l(&alg, &xi).unwrap();
        let r = levi_civita_r(&alg, &xi).unwrap();

        prop_assert_eq!(ad.apply(&u).unwrap(), alg.bracket(&xi, &u).unwrap());
        prop_assert_eq!(ip(&ad.apply(&u).unwrap(), &v), ip(&u, &star.apply(&v).unwrap()));
        // J_ξ u = ad*_u ξ
        prop_assert_eq!(j.apply(&u).unwrap(), ad_star_matrix(&alg, &u).unwrap().apply(&xi).unwrap());
        prop_assert!((ip(&j.apply(&u).unwrap(), &v) + ip(&u, &j.apply(&v).unwrap())).is_zero());
        // L and R are the two slots of one connection
        prop_assert_eq!(r.apply(&u).unwrap(), levi_civita_l(&alg, &u).unwrap().apply(&xi).unwrap());
        // torsion-free and metric
        prop_assert_eq!(l.apply(&u).unwrap().sub(&r.apply(&u).unwrap()), alg.bracket(&xi, &u).unwrap());
        prop_assert!((ip(&l.apply(&u).unwrap(), &v) + ip(&u, &l.apply(&v).unwrap())).is_zero());
        // Koszul formula, as an independent oracle
        let w = FieldVector::basis(5, 2);
        let koszul = ip(&alg.bracket(&xi, &u).unwrap(), &w)
            - ip(&alg.bracket(&u, &w).unwrap(), &xi)
            + ip(&alg.bracket(&w, &xi).unwrap(), &u);
        prop_assert_eq!(ip(&l.apply(&u).unwrap(), &w) * Rational::from_integer(2), koszul);
        prop_assert!(divergence(&alg, &xi).unwrap().is_zero());
    }

    #[test]
    fn symbolic_operators_specialize(t in 0..TypeId::ALL.len(), index in 0u64..1000, xi in vector(5)) {
        let ty = TypeId::ALL[t];
        let params = sample_params(ty, 99, index, 10).unwrap();
        let alg = instantiate(ty, &params).unwrap();
        let sym = liefields_core::catalog::symbolic_instantiate(ty);
        let at = params.as_map();
        let numeric = sym.map_scalars(|p| p.eval(at)).unwrap();
        prop_assert_eq!(&numeric, &alg);

        let xi_sym = FieldVector::new(xi.iter().map(PolyExpr::from_rational).collect());
        for (s, n) in [
            (ad_matrix(&sym, &xi_sym).unwrap().matrix, ad_matrix(&alg, &xi).unwrap().matrix),
            (j_matrix(&sym, &xi_sym).unwrap().matrix, j_matrix(&alg, &xi).unwrap().matrix),
            (levi_civita_r(&sym, &xi_sym).unwrap().matrix, levi_civita_r(&alg, &xi).unwrap().matrix),
        ] {
            prop_assert_eq!(s.map(|p| p.eval(at).unwrap()), n);
        }
    }
}
