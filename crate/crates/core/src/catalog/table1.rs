//! Hand transcription of the operator tables for the ten catalog types.
//!
//! These are typed in from the printed tables and never generated from the
//! operator code, so comparing the two is a genuine cross-check. Rows are
//! comma-separated; `x1..x5` are the components of ξ. Blocks of
//! ad*_{vᵢ} + J_{vᵢ} that the table leaves out (or prints as "0") are zero.

use super::TypeId;
use crate::exactnum::PolyExpr;
use crate::matrix::Mat;

pub(crate) struct Transcription {
    pub ad: Mat<PolyExpr>,
    /// Indexed by i for ad*_{v_{i+1}} + J_{v_{i+1}}.
    pub star_plus_j: Vec<Mat<PolyExpr>>,
}

type Rows = [&'static str; 5];

const Z: &str = "0, 0, 0, 0, 0";
const ZERO: Rows = [Z; 5];

struct Raw {
    ad: Rows,
    blocks: &'static [(usize, Rows)],
}

fn parse(rows: &Rows) -> Mat<PolyExpr> {
    let rows = rows
        .iter()
        .map(|r| {
            r.split(',')
                .map(|e| e.trim().parse().unwrap_or_else(|err| panic!("bad table entry {e:?}: {err}")))
                .collect()
        })
        .collect();
    Mat::from_rows(rows).expect("5x5 table")
}

pub(crate) fn transcription(ty: TypeId) -> Transcription {
    let raw = raw(ty);
    let mut star_plus_j = vec![Mat::zeros(5, 5); 5];
    for (v, rows) in raw.blocks {
        star_plus_j[v - 1] = parse(rows);
    }
    Transcription {
        ad: parse(&raw.ad),
        star_plus_j,
    }
}

fn raw(ty: TypeId) -> Raw {
    match ty {
        TypeId::FiveA1 => Raw { ad: ZERO, blocks: &[] },
        TypeId::A54 => Raw {
            ad: [Z, Z, Z, Z, "-(alpha*x3 + beta*x4), -gamma*x3, alpha*x1 + gamma*x2, beta*x1, 0"],
            blocks: &[
                (1, [Z, Z, "0, 0, 0, 0, alpha", "0, 0, 0, 0, beta", Z]),
                (2, [Z, Z, "0, 0, 0, 0, gamma", Z, Z]),
                (3, ["0, 0, 0, 0, -alpha", "0, 0, 0, 0, -gamma", Z, Z, Z]),
                (4, ["0, 0, 0, 0, -beta", Z, Z, Z, Z]),
                (
                    5,
                    [
                        "0, 0, -alpha, -beta, 0",
                        "0, 0, -gamma, 0, 0",
                        "alpha, gamma, 0, 0, 0",
                        "beta, 0, 0, 0, 0",
                        Z,
                    ],
                ),
            ],
        },
        TypeId::A31_2A1 => Raw {
            ad: [Z, Z, Z, Z, "-alpha*x2, alpha*x1, 0, 0, 0"],
            blocks: &[
                (1, [Z, "0, 0, 0, 0, alpha", Z, Z, Z]),
                (2, ["0, 0, 0, 0, -alpha", Z, Z, Z, Z]),
                (5, ["0, -alpha, 0, 0, 0", "alpha, 0, 0, 0, 0", Z, Z, Z]),
            ],
        },
        TypeId::A41A1I => Raw {
            ad: [
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                Z,
                "-(gamma*x2 + beta*x3), gamma*x1, beta*x1, 0, 0",
            ],
            blocks: &[
                (1, [Z, "0, 0, alpha, 0, gamma", "0, 0, 0, 0, beta", Z, Z]),
                (2, ["0, 0, -alpha, 0, -gamma", Z, Z, Z, Z]),
                (3, ["0, -alpha, 0, 0, -beta", "alpha, 0, 0, 0, 0", Z, Z, Z]),
                (
                    5,
                    ["0, -gamma, -beta, 0, 0", "gamma, 0, 0, 0, 0", "beta, 0, 0, 0, 0", Z, Z],
                ),
            ],
        },
        TypeId::A41A1II => Raw {
            ad: [
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-gamma*x2, gamma*x1, 0, 0, 0",
                "-beta*x3, 0, beta*x1, 0, 0",
            ],
            blocks: &[
                (1, [Z, "0, 0, alpha, gamma, 0", "0, 0, 0, 0, beta", Z, Z]),
                (2, ["0, 0, -alpha, -gamma, 0", Z, Z, Z, Z]),
                (3, ["0, -alpha, 0, 0, -beta", "alpha, 0, 0, 0, 0", Z, Z, Z]),
                (4, ["0, -gamma, 0, 0, 0", "gamma, 0, 0, 0, 0", Z, Z, Z]),
                (5, ["0, 0, -beta, 0, 0", Z, "beta, 0, 0, 0, 0", Z, Z]),
            ],
        },
        TypeId::A56 => Raw {
            ad: [
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-beta*x2 - gamma*x3, beta*x1, gamma*x1, 0, 0",
                "-delta*x3 - epsilon*x4, -sigma*x3, delta*x1 + sigma*x2, epsilon*x1, 0",
            ],
            blocks: &[
                (
                    1,
                    [
                        Z,
                        "0, 0, alpha, beta, 0",
                        "0, 0, 0, gamma, delta",
                        "0, 0, 0, 0, epsilon",
                        Z,
                    ],
                ),
                (2, ["0, 0, -alpha, -beta, 0", Z, "0, 0, 0, 0, sigma", Z, Z]),
                (
                    3,
                    ["0, -alpha, 0, -gamma, -delta", "alpha, 0, 0, 0, -sigma", Z, Z, Z],
                ),
                (
                    4,
                    [
                        "0, -beta, -gamma, 0, -epsilon",
                        "beta, 0, 0, 0, 0",
                        "gamma, 0, 0, 0, 0",
                        Z,
                        Z,
                    ],
                ),
                (
                    5,
                    [
                        "0, 0, -delta, -epsilon, 0",
                        "0, 0, -sigma, 0, 0",
                        "delta, sigma, 0, 0, 0",
                        "epsilon, 0, 0, 0, 0",
                        Z,
                    ],
                ),
            ],
        },
        TypeId::A55 => Raw {
            ad: [
                Z,
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-(beta*x2 + gamma*x3), beta*x1 - delta*x3 - epsilon*x4, gamma*x1 + delta*x2, epsilon*x2, 0",
            ],
            blocks: &[
                (1, [Z, "0, 0, 0, alpha, beta", "0, 0, 0, 0, gamma", Z, Z]),
                (
                    2,
                    [
                        "0, 0, 0, -alpha, -beta",
                        Z,
                        "0, 0, 0, 0, delta",
                        "0, 0, 0, 0, epsilon",
                        Z,
                    ],
                ),
                (3, ["0, 0, 0, 0, -gamma", "0, 0, 0, 0, -delta", Z, Z, Z]),
                (4, ["0, -alpha, 0, 0, 0", "alpha, 0, 0, 0, -epsilon", Z, Z, Z]),
                (
                    5,
                    [
                        "0, -beta, -gamma, 0, 0",
                        "beta, 0, -delta, -epsilon, 0",
                        "gamma, delta, 0, 0, 0",
                        "0, epsilon, 0, 0, 0",
                        Z,
                    ],
                ),
            ],
        },
        TypeId::A53 => Raw {
            ad: [
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-(beta*x2 + gamma*x3), beta*x1, gamma*x1, 0, 0",
                "-delta*x3, -epsilon*x3, delta*x1 + epsilon*x2, 0, 0",
            ],
            blocks: &[
                (1, [Z, "0, 0, alpha, beta, 0", "0, 0, 0, gamma, delta", Z, Z]),
                (2, ["0, 0, -alpha, -beta, 0", Z, "0, 0, 0, 0, epsilon", Z, Z]),
                (
                    3,
                    ["0, -alpha, 0, -gamma, -delta", "alpha, 0, 0, 0, -epsilon", Z, Z, Z],
                ),
                (
                    4,
                    ["0, -beta, -gamma, 0, 0", "beta, 0, 0, 0, 0", "gamma, 0, 0, 0, 0", Z, Z],
                ),
                (
                    5,
                    [
                        "0, 0, -delta, 0, 0",
                        "0, 0, -epsilon, 0, 0",
                        "delta, epsilon, 0, 0, 0",
                        Z,
                        Z,
                    ],
                ),
            ],
        },
        TypeId::A51 => Raw {
            ad: [
                Z,
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-(beta*x2 + gamma*x3), beta*x1, gamma*x1, 0, 0",
            ],
            blocks: &[
                (1, [Z, "0, 0, 0, alpha, beta", "0, 0, 0, 0, gamma", Z, Z]),
                (2, ["0, 0, 0, -alpha, -beta", Z, Z, Z, Z]),
                (3, ["0, 0, 0, 0, -gamma", Z, Z, Z, Z]),
                (4, ["0, -alpha, 0, 0, 0", "alpha, 0, 0, 0, 0", Z, Z, Z]),
                (
                    5,
                    ["0, -beta, -gamma, 0, 0", "beta, 0, 0, 0, 0", "gamma, 0, 0, 0, 0", Z, Z],
                ),
            ],
        },
        TypeId::A52 => Raw {
            ad: [
                Z,
                Z,
                "-alpha*x2, alpha*x1, 0, 0, 0",
                "-(beta*x2 + gamma*x3), beta*x1, gamma*x1, 0, 0",
                "-delta*x4, 0, 0, delta*x1, 0",
            ],
            blocks: &[
                (
                    1,
                    [
                        Z,
                        "0, 0, alpha, beta, 0",
                        "0, 0, 0, gamma, 0",
                        "0, 0, 0, 0, delta",
                        Z,
                    ],
                ),
                (2, ["0, 0, -alpha, -beta, 0", Z, Z, Z, Z]),
                (3, ["0, -alpha, 0, -gamma, 0", "alpha, 0, 0, 0, 0", Z, Z, Z]),
                (
                    4,
                    [
                        "0, -beta, -gamma, 0, -delta",
                        "beta, 0, 0, 0, 0",
                        "gamma, 0, 0, 0, 0",
                        Z,
                        Z,
                    ],
                ),
                (5, ["0, 0, 0, -delta, 0", Z, Z, "delta, 0, 0, 0, 0", Z]),
            ],
        },
    }
}
