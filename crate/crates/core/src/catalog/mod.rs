//! The ten canonical metric types of five-dimensional nilpotent Lie algebras,
//! their parameter constraints, samplers, and the symbolic cross-checks
//! against hand-transcribed operator tables.

mod determinants;
mod table1;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connection::{ad_matrix, ad_star_matrix, j_matrix};
use crate::error::{Error, Result};
use crate::exactnum::{PolyExpr, Rational, Scalar, Var};
use crate::liealg::{FieldVector, MetricLieAlgebra};
use crate::matrix::Mat;

pub use determinants::{determinant_checks, verify_determinants, DeterminantCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeId {
    FiveA1,
    A54,
    A31_2A1,
    A41A1I,
    A41A1II,
    A56,
    A55,
    A53,
    A51,
    A52,
}

impl TypeId {
    pub const ALL: [TypeId; 10] = [
        TypeId::FiveA1,
        TypeId::A54,
        TypeId::A31_2A1,
        TypeId::A41A1I,
        TypeId::A41A1II,
        TypeId::A56,
        TypeId::A55,
        TypeId::A53,
        TypeId::A51,
        TypeId::A52,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TypeId::FiveA1 => "5A1",
            TypeId::A54 => "A5_4",
            TypeId::A31_2A1 => "A3_1+2A1",
            TypeId::A41A1I => "A4_1+A1_I",
            TypeId::A41A1II => "A4_1+A1_II",
            TypeId::A56 => "A5_6",
            TypeId::A55 => "A5_5",
            TypeId::A53 => "A5_3",
            TypeId::A51 => "A5_1",
            TypeId::A52 => "A5_2",
        }
    }

    /// Position in catalog order.
    pub fn position(self) -> usize {
        self as usize
    }

    pub fn entry(self) -> &'static CatalogEntry {
        &ENTRIES[self.position()]
    }

    /// Dimension of the space of left-invariant Killing fields, which for
    /// every type coincides with the center.
    pub fn expected_killing_dim(self) -> usize {
        [5, 1, 3, 2, 2, 1, 1, 2, 2, 1][self.position()]
    }
}

impl fmt::Display for TypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TypeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TypeId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Free,
}

impl Sign {
    pub fn admits(self, x: &Rational) -> bool {
        match self {
            Sign::Positive => x.is_positive(),
            Sign::Negative => x.is_negative(),
            Sign::Free => true,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
            Sign::Free => "any real",
        }
    }
}

/// `[v_i, v_j] += param · v_k`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketTerm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub param: Var,
}

#[derive(Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: TypeId,
    pub params: &'static [(Var, Sign)],
    pub brackets: &'static [BracketTerm],
}

impl CatalogEntry {
    pub fn sign_of(&self, v: Var) -> Option<Sign> {
        self.params.iter().find(|(p, _)| *p == v).map(|&(_, s)| s)
    }
}

const fn b(i: usize, j: usize, k: usize, param: Var) -> BracketTerm {
    // 1-based in the source for readability
    BracketTerm {
        i: i - 1,
        j: j - 1,
        k: k - 1,
        param,
    }
}

use Sign::{Free, Negative, Positive};
use Var::{Alpha, Beta, Delta, Epsilon, Gamma, Sigma};

static ENTRIES: [CatalogEntry; 10] = [
    CatalogEntry {
        id: TypeId::FiveA1,
        params: &[],
        brackets: &[],
    },
    CatalogEntry {
        id: TypeId::A54,
        params: &[(Alpha, Free), (Beta, Positive), (Gamma, Positive)],
        brackets: &[b(1, 3, 5, Alpha), b(1, 4, 5, Beta), b(2, 3, 5, Gamma)],
    },
    CatalogEntry {
        id: TypeId::A31_2A1,
        params: &[(Alpha, Positive)],
        brackets: &[b(1, 2, 5, Alpha)],
    },
    CatalogEntry {
        id: TypeId::A41A1I,
        params: &[(Alpha, Positive), (Beta, Positive), (Gamma, Free)],
        brackets: &[b(1, 2, 3, Alpha), b(1, 2, 5, Gamma), b(1, 3, 5, Beta)],
    },
    CatalogEntry {
        id: TypeId::A41A1II,
        params: &[(Alpha, Positive), (Beta, Positive), (Gamma, Free)],
        brackets: &[b(1, 2, 3, Alpha), b(1, 2, 4, Gamma), b(1, 3, 5, Beta)],
    },
    CatalogEntry {
        id: TypeId::A56,
        params: &[
            (Alpha, Negative),
            (Beta, Free),
            (Gamma, Positive),
            (Delta, Free),
            (Epsilon, Positive),
            (Sigma, Positive),
        ],
        brackets: &[
            b(1, 2, 3, Alpha),
            b(1, 2, 4, Beta),
            b(1, 3, 4, Gamma),
            b(1, 3, 5, Delta),
            b(1, 4, 5, Epsilon),
            b(2, 3, 5, Sigma),
        ],
    },
    CatalogEntry {
        id: TypeId::A55,
        params: &[
            (Alpha, Positive),
            (Beta, Free),
            (Gamma, Positive),
            (Delta, Free),
            (Epsilon, Positive),
        ],
        brackets: &[
            b(1, 2, 4, Alpha),
            b(1, 2, 5, Beta),
            b(1, 3, 5, Gamma),
            b(2, 3, 5, Delta),
            b(2, 4, 5, Epsilon),
        ],
    },
    CatalogEntry {
        id: TypeId::A53,
        params: &[
            (Alpha, Positive),
            (Beta, Free),
            (Gamma, Positive),
            (Delta, Free),
            (Epsilon, Positive),
        ],
        brackets: &[
            b(1, 2, 3, Alpha),
            b(1, 2, 4, Beta),
            b(1, 3, 4, Gamma),
            b(1, 3, 5, Delta),
            b(2, 3, 5, Epsilon),
        ],
    },
    CatalogEntry {
        id: TypeId::A51,
        params: &[(Alpha, Positive), (Beta, Free), (Gamma, Positive)],
        brackets: &[b(1, 2, 4, Alpha), b(1, 2, 5, Beta), b(1, 3, 5, Gamma)],
    },
    CatalogEntry {
        id: TypeId::A52,
        params: &[(Alpha, Positive), (Beta, Free), (Gamma, Positive), (Delta, Positive)],
        brackets: &[
            b(1, 2, 3, Alpha),
            b(1, 2, 4, Beta),
            b(1, 3, 4, Gamma),
            b(1, 4, 5, Delta),
        ],
    },
];

/// Values for the structure parameters of one catalog type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamAssignment(BTreeMap<Var, Rational>);

impl ParamAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: impl Into<Rational>) -> Self {
        self.0.insert(v, value.into());
        self
    }

    pub fn insert(&mut self, v: Var, value: Rational) -> Option<Rational> {
        self.0.insert(v, value)
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.0.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &Rational)> {
        self.0.iter().map(|(&v, r)| (v, r))
    }

    pub fn as_map(&self) -> &BTreeMap<Var, Rational> {
        &self.0
    }
}

impl FromIterator<(Var, Rational)> for ParamAssignment {
    fn from_iter<I: IntoIterator<Item = (Var, Rational)>>(iter: I) -> Self {
        ParamAssignment(iter.into_iter().collect())
    }
}

impl fmt::Display for ParamAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, r)| format!("{}={r}", v.name())).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ParamAssignment {
    type Err = Error;

    /// `alpha=1,beta=-2/3` (Greek letters are accepted as names too). The
    /// empty string is the empty assignment.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = ParamAssignment::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(part, "expected name=value"))?;
            let var = Var::from_name(name.trim())
                .filter(|v| v.is_param())
                .ok_or_else(|| Error::parse(part, format!("unknown parameter {:?}", name.trim())))?;
            if out.insert(var, value.trim().parse()?).is_some() {
                return Err(Error::parse(part, "parameter given twice"));
            }
        }
        Ok(out)
    }
}

fn check_params(ty: TypeId, params: &ParamAssignment) -> Result<()> {
    let entry = ty.entry();
    for &(v, sign) in entry.params {
        let value = params.get(v).ok_or_else(|| Error::InvalidParameters {
            name: v.name().to_string(),
            required: format!("given ({}) for {ty}", sign.describe()),
        })?;
        if !sign.admits(value) {
            return Err(Error::InvalidParameters {
                name: v.name().to_string(),
                required: sign.describe().to_string(),
            });
        }
    }
    if let Some((v, _)) = params.iter().find(|(v, _)| entry.sign_of(*v).is_none()) {
        return Err(Error::InvalidParameters {
            name: v.name().to_string(),
            required: format!("absent for {ty}"),
        });
    }
    Ok(())
}

fn build<S: Scalar>(ty: TypeId, mut value: impl FnMut(Var) -> S) -> MetricLieAlgebra<S> {
    let mut alg = MetricLieAlgebra::abelian(5);
    for t in ty.entry().brackets {
        alg.add_structure_constant(t.i, t.j, t.k, value(t.param))
            .expect("catalog brackets are well-formed");
    }
    alg
}

/// The orthonormal algebra of type `ty` at the given parameter values.
pub fn instantiate(ty: TypeId, params: &ParamAssignment) -> Result<MetricLieAlgebra<Rational>> {
    check_params(ty, params)?;
    Ok(build(ty, |v| params.get(v).cloned().expect("checked above")))
}

/// The algebra of type `ty` with the parameters left as polynomial variables.
pub fn symbolic_instantiate(ty: TypeId) -> MetricLieAlgebra<PolyExpr> {
    build(ty, PolyExpr::var)
}

// Parameters and auxiliary vectors for the same (seed, index) come from
// separate streams, so asking for more vectors never shifts the parameters.
const PARAM_STREAM: u8 = 0;
const VECTOR_STREAM: u8 = 1;

fn sampler(ty: TypeId, seed: u64, index: u64, stream: u8) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&index.to_le_bytes());
    key[16..24].copy_from_slice(&(ty.position() as u64).to_le_bytes());
    key[24] = stream;
    ChaCha8Rng::from_seed(key)
}

fn signed_ratio(rng: &mut ChaCha8Rng, bound: u64) -> Rational {
    let p = rng.random_range(0..=bound) as i64;
    let q = rng.random_range(1..=bound) as i64;
    let r = Rational::new(p, q).expect("q >= 1");
    if rng.random_bool(0.5) {
        -r
    } else {
        r
    }
}

/// `count` deterministic random vectors in Q⁵ attached to sample `index`,
/// with components ±p/q, 0 ≤ p ≤ bound, 1 ≤ q ≤ bound.
pub fn sample_field_vectors(
    ty: TypeId,
    seed: u64,
    index: u64,
    count: usize,
    bound: u64,
) -> Result<Vec<FieldVector<Rational>>> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    let mut rng = sampler(ty, seed, index, VECTOR_STREAM);
    Ok((0..count)
        .map(|_| FieldVector::new((0..5).map(|_| signed_ratio(&mut rng, bound)).collect()))
        .collect())
}

/// Deterministic random parameters for sample `index` under `seed`.
///
/// Each value is ±p/q with p, q uniform in [1, bound]. Constrained parameters
/// get the required sign; free ones are zero, negative or positive with equal
/// probability.
pub fn sample_params(ty: TypeId, seed: u64, index: u64, bound: u64) -> Result<ParamAssignment> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    let mut rng = sampler(ty, seed, index, PARAM_STREAM);
    let mut out = ParamAssignment::new();
    for &(v, sign) in ty.entry().params {
        let p = rng.random_range(1..=bound);
        let q = rng.random_range(1..=bound);
        let magnitude = Rational::new(p, q)?;
        let value = match sign {
            Sign::Positive => magnitude,
            Sign::Negative => -magnitude,
            Sign::Free => match rng.random_range(0..3u8) {
                0 => Rational::zero(),
                1 => -magnitude,
                _ => magnitude,
            },
        };
        out.insert(v, value);
    }
    Ok(out)
}

/// One entry where a transcribed operator table disagrees with the computed
/// operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMismatch {
    pub ty: TypeId,
    /// `"ad"` or `"adstar+J v3"` style label.
    pub operator: String,
    pub row: usize,
    pub col: usize,
    pub expected: PolyExpr,
    pub computed: PolyExpr,
}

impl fmt::Display for TableMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} entry ({}, {}): table has {}, computed {}",
            self.ty,
            self.operator,
            self.row + 1,
            self.col + 1,
            self.expected,
            self.computed
        )
    }
}

fn compare(
    ty: TypeId,
    operator: String,
    expected: &Mat<PolyExpr>,
    computed: &Mat<PolyExpr>,
    out: &mut Vec<TableMismatch>,
) {
    for r in 0..5 {
        for c in 0..5 {
            if expected[(r, c)] != computed[(r, c)] {
                out.push(TableMismatch {
                    ty,
                    operator: operator.clone(),
                    row: r,
                    col: c,
                    expected: expected[(r, c)].clone(),
                    computed: computed[(r, c)].clone(),
                });
            }
        }
    }
}

/// Symbolic ξ = Σ ξ_i v_i.
pub fn symbolic_xi() -> FieldVector<PolyExpr> {
    FieldVector::new(
        (0..5)
            .map(|i| PolyExpr::var(Var::xi(i).expect("five components")))
            .collect(),
    )
}

/// Compares the symbolic ad_ξ and ad*_{vᵢ} + J_{vᵢ} of `ty` entrywise with
/// the transcribed tables.
pub fn verify_table1(ty: TypeId) -> Result<(), Vec<TableMismatch>> {
    let alg = symbolic_instantiate(ty);
    let table = table1::transcription(ty);
    let mut mismatches = Vec::new();
    let ad = ad_matrix(&alg, &symbolic_xi()).expect("dimension 5").matrix;
    compare(ty, "ad".into(), &table.ad, &ad, &mut mismatches);
    for (i, expected) in table.star_plus_j.iter().enumerate() {
        let v = FieldVector::basis(5, i);
        let computed = ad_star_matrix(&alg, &v)
            .expect("dimension 5")
            .matrix
            .add(&j_matrix(&alg, &v).expect("dimension 5").matrix)
            .expect("same shape");
        compare(ty, format!("adstar+J v{}", i + 1), expected, &computed, &mut mismatches);
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(mismatches)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> PolyExpr {
        s.parse().unwrap()
    }

    #[test]
    fn type_ids_round_trip() {
        for t in TypeId::ALL {
            assert_eq!(t.as_str().parse::<TypeId>().unwrap(), t);
            assert_eq!(t.entry().id, t);
        }
        assert!(matches!("A5_7".parse::<TypeId>(), Err(Error::UnknownType(_))));
    }

    #[test]
    fn instantiate_examples() {
        let a = instantiate(TypeId::A31_2A1, &ParamAssignment::new().with(Alpha, 2)).unwrap();
        let brackets: Vec<_> = a.structure().collect();
        assert_eq!(brackets.len(), 1);
        assert_eq!(brackets[0].0, (0, 1));
        assert_eq!(brackets[0].1[4], q("2"));

        let abelian = instantiate(TypeId::FiveA1, &ParamAssignment::new()).unwrap();
        assert_eq!(abelian.structure().count(), 0);

        let bad = ParamAssignment::new().with(Alpha, 1).with(Beta, -1).with(Gamma, 1);
        assert_eq!(
            instantiate(TypeId::A54, &bad),
            Err(Error::InvalidParameters {
                name: "beta".into(),
                required: "positive".into()
            })
        );
    }

    #[test]
    fn boundary_values_are_rejected() {
        let zero_beta = ParamAssignment::new().with(Alpha, 1).with(Beta, 0).with(Gamma, 1);
        assert!(instantiate(TypeId::A54, &zero_beta).is_err());
        let zero_alpha = ParamAssignment::new().with(Alpha, 0).with(Beta, 1).with(Gamma, 1);
        assert!(instantiate(TypeId::A54, &zero_alpha).is_ok());
    }

    #[test]
    fn missing_and_extra_parameters_are_rejected() {
        let missing = ParamAssignment::new().with(Alpha, 1);
        assert!(matches!(
            instantiate(TypeId::A54, &missing),
            Err(Error::InvalidParameters { name, .. }) if name == "beta"
        ));
        let extra = ParamAssignment::new().with(Alpha, 1).with(Sigma, 1);
        assert!(matches!(
            instantiate(TypeId::A31_2A1, &extra),
            Err(Error::InvalidParameters { name, .. }) if name == "sigma"
        ));
    }

    #[test]
    fn assignment_parsing() {
        let p: ParamAssignment = "alpha=1, β=-2/3".parse().unwrap();
        assert_eq!(p.get(Alpha), Some(&q("1")));
        assert_eq!(p.get(Beta), Some(&q("-2/3")));
        assert_eq!(p.to_string(), "alpha=1,beta=-2/3");
        assert_eq!("".parse::<ParamAssignment>().unwrap(), ParamAssignment::new());
        for bad in ["alpha", "x1=2", "alpha=1,alpha=2", "alpha=1/0", "omega=1"] {
            assert!(bad.parse::<ParamAssignment>().is_err(), "{bad}");
        }
    }

    #[test]
    fn sampler_is_deterministic_and_respects_signs() {
        for t in TypeId::ALL {
            for i in 0..20 {
                let p = sample_params(t, 7, i, 10).unwrap();
                assert_eq!(p, sample_params(t, 7, i, 10).unwrap());
                assert!(instantiate(t, &p).is_ok());
            }
        }
        assert!((0..100).all(|i| sample_params(TypeId::A56, 1, i, 10)
            .unwrap()
            .get(Alpha)
            .unwrap()
            .is_negative()));
        assert_eq!(sample_params(TypeId::A54, 1, 0, 0), Err(Error::InvalidBound(0)));
    }

    #[test]
    fn free_parameters_hit_zero_and_nonzero() {
        let alphas: Vec<Rational> = (0..100)
            .map(|i| sample_params(TypeId::A54, 42, i, 10).unwrap().get(Alpha).unwrap().clone())
            .collect();
        assert!(alphas.iter().any(Rational::is_zero));
        assert!(alphas.iter().any(|a| !a.is_zero()));
    }

    #[test]
    fn field_vectors_are_deterministic() {
        let a = sample_field_vectors(TypeId::A53, 9, 4, 10, 10).unwrap();
        assert_eq!(a, sample_field_vectors(TypeId::A53, 9, 4, 10, 10).unwrap());
        assert_eq!(a.len(), 10);
        assert_ne!(a, sample_field_vectors(TypeId::A53, 9, 5, 10, 10).unwrap());
        assert_eq!(a[..3], sample_field_vectors(TypeId::A53, 9, 4, 3, 10).unwrap()[..]);
        assert!(sample_field_vectors(TypeId::A53, 9, 4, 1, 0).is_err());
    }

    #[test]
    fn bound_one_gives_unit_magnitudes() {
        let p = sample_params(TypeId::A52, 3, 3, 1).unwrap();
        assert!(p.iter().all(|(_, r)| r.is_zero() || r.abs() == q("1")));
    }

    #[test]
    fn symbolic_examples() {
        let a = symbolic_instantiate(TypeId::A54);
        assert_eq!(a.basis_bracket(0, 2)[4], poly("alpha"));
        let s = symbolic_instantiate(TypeId::A31_2A1);
        let ad = ad_matrix(&s, &symbolic_xi()).unwrap().matrix;
        assert_eq!(ad[(4, 0)], poly("-alpha*x2"));
        let z = symbolic_instantiate(TypeId::FiveA1);
        assert!(ad_matrix(&z, &symbolic_xi()).unwrap().matrix.is_zero());
    }

    #[test]
    fn transcribed_tables_match_computed_operators() {
        for t in TypeId::ALL {
            if let Err(m) = verify_table1(t) {
                panic!("{}", m.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"));
            }
        }
    }

    #[test]
    fn a54_row_five_entries() {
        let t = table1::transcription(TypeId::A54);
        assert_eq!(t.ad[(4, 0)], poly("-alpha*x3 - beta*x4"));
        assert_eq!(t.ad[(4, 1)], poly("-gamma*x3"));
        assert_eq!(t.ad[(4, 2)], poly("alpha*x1 + gamma*x2"));
        assert_eq!(t.ad[(4, 3)], poly("beta*x1"));
    }

    #[test]
    fn tampered_table_is_reported() {
        let alg = symbolic_instantiate(TypeId::A54);
        let mut table = table1::transcription(TypeId::A54);
        table.ad[(4, 3)] = poly("-beta*x1");
        let computed = ad_matrix(&alg, &symbolic_xi()).unwrap().matrix;
        let mut out = Vec::new();
        compare(TypeId::A54, "ad".into(), &table.ad, &computed, &mut out);
        assert_eq!(out.len(), 1);
        assert_eq!((out[0].row, out[0].col), (4, 3));
        assert_eq!(out[0].to_string(), "A5_4 ad entry (5, 4): table has -beta*x1, computed beta*x1");
    }
}
