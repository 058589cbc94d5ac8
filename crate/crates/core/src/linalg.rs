//! Dense matrix/vector primitives and mixed `L_{q,p}` norms.
//!
//! The mixed norm takes the `L_q` norm of every row and then the `L_p` norm
//! of the resulting row-norm vector:
//!
//! ```text
//! ||W||_{q,p} = ( Σ_j ||w_j||_q^p )^{1/p},    ||W||_{q,∞} = max_j ||w_j||_q
//! ```
//!
//! Finite-order norms are computed in scaled form, `max · (Σ (|x|/max)^p)^{1/p}`,
//! so a single dominant entry (or row) reproduces the `∞`-order value exactly
//! and large orders cannot overflow.

use ndarray::{Array1, Array2};

use crate::exponent::Exponent;

/// Dense column vector.
pub type Vector = Array1<f64>;
/// Dense row-major matrix.
pub type Matrix = Array2<f64>;

/// `L_p` norm of a vector. The zero vector maps to 0 for every order.
pub fn vector_norm(x: &Vector, p: Exponent) -> f64 {
    norm_of_magnitudes(x.iter().copied(), p)
}

/// Mixed `L_{q,p}` norm: row-wise `L_q`, then `L_p` across rows.
pub fn matrix_norm_qp(w: &Matrix, q: Exponent, p: Exponent) -> f64 {
    norm_of_magnitudes(
        w.rows()
            .into_iter()
            .map(|row| norm_of_magnitudes(row.iter().copied(), q)),
        p,
    )
}

/// `L_q` norms of every row, in row order.
pub fn row_norms(w: &Matrix, q: Exponent) -> Vec<f64> {
    w.rows()
        .into_iter()
        .map(|row| norm_of_magnitudes(row.iter().copied(), q))
        .collect()
}

/// Index of the row with the largest `L_q` norm; ties break to the lowest
/// index so downstream constructions are deterministic.
pub fn max_row_index_lq(w: &Matrix, q: Exponent) -> usize {
    let mut best = 0usize;
    let mut best_norm = f64::NEG_INFINITY;
    for (j, row) in w.rows().into_iter().enumerate() {
        let n = norm_of_magnitudes(row.iter().copied(), q);
        if n > best_norm {
            best = j;
            best_norm = n;
        }
    }
    best
}

fn norm_of_magnitudes<I: Iterator<Item = f64> + Clone>(values: I, p: Exponent) -> f64 {
    match p {
        Exponent::One => values.map(f64::abs).sum(),
        Exponent::Infinity => values.map(f64::abs).fold(0.0, f64::max),
        Exponent::Finite(pv) => {
            let max = values.clone().map(f64::abs).fold(0.0, f64::max);
            if max == 0.0 {
                return 0.0;
            }
            if pv == 2.0 {
                let sum: f64 = values
                    .map(|v| {
                        let r = v / max;
                        r * r
                    })
                    .sum();
                max * sum.sqrt()
            } else {
                let sum: f64 = values.map(|v| (v.abs() / max).powf(pv)).sum();
                max * sum.powf(1.0 / pv)
            }
        }
    }
}
