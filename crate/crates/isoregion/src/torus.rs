//! Standard annular projections T(2,n) and their isolated-set counts.
//!
//! T(2,n) has n crossings in a cycle, n bigons, and two n-gons. Its
//! I-generating function has the closed form
//! `1 + (n+2)x + sum_{k=2}^{floor(n/2)} C(n-k,k) * n/(n-k) * x^k`
//! and satisfies `f_n - f_{n-1} - x*f_{n-2} = -2x^2` for n >= 4.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pdcode::LinkProjection;
use crate::regiongraph::IGenPolynomial;

/// The standard projection of the (2,n)-torus link, n >= 1. Crossing `i`
/// joins the band edges shared with crossings `i-1` and `i+1` (mod n);
/// T(2,1) is the one-crossing curl.
pub fn torus_projection(n: usize) -> Result<LinkProjection> {
    if n == 0 {
        return Err(Error::Range("torus parameter must be at least 1".to_string()));
    }
    // outer band edge between crossings i and i+1: 2i; inner: 2i+1.
    // counterclockwise at crossing i: outer-in, inner-in, inner-out, outer-out.
    let rows: Vec<[u64; 4]> = (0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            [
                (2 * prev) as u64 + 1,
                (2 * prev + 1) as u64 + 1,
                (2 * i + 1) as u64 + 1,
                (2 * i) as u64 + 1,
            ]
        })
        .collect();
    LinkProjection::from_crossings(rows)
}

/// Exact binomial coefficient, zero when `k > n`.
fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Closed-form I-generating function of T(2,n). For n in {1,2,3} the sum
/// is empty and the polynomial is `1 + (n+2)x`.
pub fn torus_igen_closed_form(n: usize) -> Result<IGenPolynomial> {
    if n == 0 {
        return Err(Error::Range("torus parameter must be at least 1".to_string()));
    }
    let mut coeffs = vec![1u64, (n + 2) as u64];
    for k in 2..=n / 2 {
        let num = binomial((n - k) as u64, k as u64) * n as u128;
        debug_assert_eq!(num % (n - k) as u128, 0);
        coeffs.push((num / (n - k) as u128) as u64);
    }
    Ok(IGenPolynomial::from_coeffs(coeffs))
}

/// Number of ways to paint `n` of `m` balls in a line so that no two
/// painted balls are adjacent: `C(m - n + 1, n)`.
pub fn nonadjacent_count(m: u64, n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    if n > m + 1 {
        return 0;
    }
    binomial(m + 1 - n, n) as u64
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RecurrenceCheck {
    pub n: usize,
    /// Coefficients of `f_n - f_{n-1} - x*f_{n-2}`, trailing zeros trimmed.
    pub residual: Vec<i64>,
    /// True when the residual is exactly `-2x^2`.
    pub ok: bool,
}

/// Check `f_n - f_{n-1} - x*f_{n-2} = -2x^2`, defined for n >= 4.
pub fn recurrence_check(n: usize) -> Result<RecurrenceCheck> {
    if n < 4 {
        return Err(Error::Range(format!("recurrence holds for n >= 4, got {n}")));
    }
    let f = |m: usize| -> Result<Vec<i64>> {
        Ok(torus_igen_closed_form(m)?
            .coeffs()
            .iter()
            .map(|&a| a as i64)
            .collect())
    };
    let fn_ = f(n)?;
    let fn1 = f(n - 1)?;
    let fn2 = f(n - 2)?;
    let len = fn_.len().max(fn1.len()).max(fn2.len() + 1);
    let mut residual = vec![0i64; len];
    for (k, &a) in fn_.iter().enumerate() {
        residual[k] += a;
    }
    for (k, &a) in fn1.iter().enumerate() {
        residual[k] -= a;
    }
    for (k, &a) in fn2.iter().enumerate() {
        residual[k + 1] -= a;
    }
    while residual.len() > 1 && *residual.last().unwrap() == 0 {
        residual.pop();
    }
    let ok = residual == vec![0, 0, -2];
    Ok(RecurrenceCheck { n, residual, ok })
}

/// Total number of isolated-region sets of T(2,n): `f_n(1)`.
pub fn fn_at_one(n: usize) -> Result<u64> {
    Ok(torus_igen_closed_form(n)?.eval_at_one())
}
