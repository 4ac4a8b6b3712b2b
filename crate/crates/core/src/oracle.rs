//! Brute-force ground truth: count distinguishing colorings by exhaustive
//! enumeration and recover the distinguishing polynomial by interpolation.
//!
//! Everything here is deliberately independent of the closed-form formulas;
//! the two routes are cross-checked in the verification suites.

use crate::coloring::{decode_coloring, next_coloring};
use crate::dihedral::{dihedral_labeled, DihedralElement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::ColorSearcher;
use crate::poly::{interpolate, IntPoly, RatPoly};
use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

/// Default ceiling on the number of coloring tests per enumeration call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `k^n` if it fits the budget, else a resource error. Never approximates.
pub(crate) fn enumeration_size(n: usize, k: u32, budget: u64) -> Result<u64> {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(k as u128);
        if total > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget,
            });
        }
    }
    Ok(total as u64)
}

/// One oracle measurement: the number of distinguishing `k`-colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistCount {
    pub k: u32,
    pub count: BigInt,
}

impl DistCount {
    /// Validates the count against its unconditional bounds: it lies in
    /// `0..=k^n` and is divisible by `|Aut(G)|` (every equivalence class
    /// of distinguishing colorings has exactly `|Aut(G)|` members).
    pub fn validate(&self, n: usize, aut_order: &BigInt) -> Result<()> {
        let max = num::pow::pow(BigInt::from(self.k), n);
        if self.count.is_negative() || self.count > max {
            return Err(Error::Internal(format!(
                "count {} outside 0..={max}",
                self.count
            )));
        }
        if !(&self.count % aut_order).is_zero() {
            return Err(Error::Internal(format!(
                "count {} not divisible by |Aut| = {aut_order}",
                self.count
            )));
        }
        Ok(())
    }
}

/// Counts colorings of `g` with colors `1..=k` that no non-identity
/// automorphism preserves, by exhaustive enumeration in odometer order.
///
/// The coloring space is split into index ranges tested concurrently;
/// the total is an exact deterministic sum.
pub fn count_distinguishing(g: &Graph, k: u32, budget: u64) -> Result<BigInt> {
    let n = g.n();
    if n == 0 {
        // The empty coloring is preserved only by the identity.
        return Ok(BigInt::one());
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let total = enumeration_size(n, k, budget)?;
    const CHUNK: u64 = 1 << 14;
    let chunks = total.div_ceil(CHUNK);
    let count: u64 = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut searcher = ColorSearcher::new(g);
            let mut colors = vec![0u32; n];
            decode_coloring(start, k, &mut colors);
            let mut found = 0u64;
            for _ in start..end {
                if !searcher.has_nonidentity_supported(&colors) {
                    found += 1;
                }
                next_coloring(&mut colors, k);
            }
            found
        })
        .sum();
    Ok(BigInt::from(count))
}

/// Recovers the distinguishing polynomial of `g` by interpolating the
/// enumeration counts at `k = 0, 1, ..., n`, then checks it is monic of
/// degree `n` with integer coefficients.
pub fn dist_poly_oracle(g: &Graph, budget: u64) -> Result<IntPoly> {
    let n = g.n();
    let points: Vec<(BigInt, BigInt)> = (0..=n)
        .map(|k| Ok((BigInt::from(k), count_distinguishing(g, k as u32, budget)?)))
        .collect::<Result<_>>()?;
    let poly = interpolate(&points, n)?;
    if poly.degree() != Some(n) || !poly.is_monic() {
        return Err(Error::Internal(format!(
            "oracle polynomial is not monic of degree {n}: {poly}"
        )));
    }
    Ok(poly)
}

/// `Φ_k(G) = 𝔇_k(G) / |Aut(G)|`, the number of non-equivalent
/// distinguishing colorings using at most `k` colors. Validates that the
/// quotient is a non-negative integer at `k = 0..n`.
pub fn phi_poly(dpoly: &IntPoly, aut_order: &BigInt) -> Result<RatPoly> {
    let phi = RatPoly::new(dpoly.clone(), aut_order.clone());
    let n = dpoly.degree().unwrap_or(0);
    for k in 0..=n {
        let v = phi.eval_int(&BigInt::from(k))?;
        if v.is_negative() {
            return Err(Error::Internal(format!("Φ({k}) = {v} is negative")));
        }
    }
    Ok(phi)
}

/// All `φ_i` for `i = 0..=n`: the numbers of non-equivalent distinguishing
/// colorings using exactly `i` colors, recovered from `Φ` by binomial
/// inversion `φ_i = Σ_j (-1)^(i-j) C(i,j) Φ(j)`. Validates non-negativity
/// and that substituting back through `Φ(k) = Σ_i C(k,i) φ_i` reproduces
/// every `Φ(k)` for `k = 0..=n`.
pub fn phi_exact_all(dpoly: &IntPoly, aut_order: &BigInt) -> Result<Vec<BigInt>> {
    let phi = phi_poly(dpoly, aut_order)?;
    let n = dpoly.degree().unwrap_or(0);
    let phi_at: Vec<BigInt> = (0..=n)
        .map(|k| phi.eval_int(&BigInt::from(k)))
        .collect::<Result<_>>()?;
    let mut exact = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = BigInt::zero();
        for (j, phi_j) in phi_at.iter().enumerate().take(i + 1) {
            let term = num::integer::binomial(BigInt::from(i), BigInt::from(j)) * phi_j;
            if (i - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(Error::Internal(format!("φ_{i} = {acc} is negative")));
        }
        exact.push(acc);
    }
    for (k, phi_k) in phi_at.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (i, phi_i) in exact.iter().enumerate() {
            acc += num::integer::binomial(BigInt::from(k), BigInt::from(i)) * phi_i;
        }
        if &acc != phi_k {
            return Err(Error::Internal(format!(
                "φ resubstitution mismatch at k = {k}: {acc} != {phi_k}"
            )));
        }
    }
    Ok(exact)
}

/// `φ_i(G)` for one `i <= n`.
pub fn phi_exact(dpoly: &IntPoly, aut_order: &BigInt, i: usize) -> Result<BigInt> {
    let n = dpoly.degree().unwrap_or(0);
    if i > n {
        return Err(Error::InvalidArg(format!("φ index {i} exceeds n = {n}")));
    }
    Ok(phi_exact_all(dpoly, aut_order)?.swap_remove(i))
}

/// The distinguishing number: least `k` admitting a distinguishing
/// `k`-coloring, found by direct search. Requires `n >= 1`.
pub fn distinguishing_number(g: &Graph, budget: u64) -> Result<u32> {
    if g.n() == 0 {
        return Err(Error::InvalidArg(
            "distinguishing number needs at least one vertex".into(),
        ));
    }
    for k in 1..=g.n() as u32 {
        if count_distinguishing(g, k, budget)?.is_positive() {
            return Ok(k);
        }
    }
    unreachable!("the all-distinct coloring at k = n is distinguishing")
}

/// The distinguishing number read off the polynomial: least `k >= 1` with
/// a positive evaluation.
pub fn distinguishing_number_from_poly(dpoly: &IntPoly) -> Result<u32> {
    let n = dpoly.degree().unwrap_or(0).max(1);
    for k in 1..=n as u32 {
        if dpoly.eval(&BigInt::from(k)).is_positive() {
            return Ok(k);
        }
    }
    Err(Error::Internal(format!(
        "no positive evaluation up to k = {n}; not a distinguishing polynomial: {dpoly}"
    )))
}

/// Splits the non-distinguishing `k`-colorings of `C_n` into the two classes
/// `(M, N)`: those supporting exactly one reflection, and those supporting
/// some non-identity rotation. Errors if a coloring supports two or more
/// reflections but no rotation, which the dihedral structure forbids.
pub fn classify_cycle_noncolorings(n: usize, k: u32, budget: u64) -> Result<(BigInt, BigInt)> {
    let elems = dihedral_labeled(n)?;
    let rotations: Vec<_> = elems
        .iter()
        .filter(|e| e.is_nonidentity_rotation())
        .collect();
    let reflections: Vec<_> = elems.iter().filter(|e| e.is_reflection()).collect();
    let total = enumeration_size(n, k, budget)?;
    let mut m_count = 0u64;
    let mut n_count = 0u64;
    let mut colors = vec![1u32; n];
    for _ in 0..total {
        if rotations.iter().any(|e| supports(&colors, e)) {
            n_count += 1;
        } else {
            let refl = reflections.iter().filter(|e| supports(&colors, e)).count();
            match refl {
                0 => {} // distinguishing
                1 => m_count += 1,
                _ => {
                    return Err(Error::Internal(format!(
                        "coloring {colors:?} of C_{n} supports {refl} reflections but no rotation"
                    )))
                }
            }
        }
        next_coloring(&mut colors, k);
    }
    Ok((BigInt::from(m_count), BigInt::from(n_count)))
}

fn supports(colors: &[u32], e: &DihedralElement) -> bool {
    colors
        .iter()
        .enumerate()
        .all(|(v, &c)| colors[e.perm.apply(v)] == c)
}

/// Counts `k`-colorings of `C_n` generated by a colored segment of length
/// `d` (equivalently: invariant under rotation by `d`) that support the
/// given reflection. `d` must divide `n`.
pub fn count_segment_supported(
    n: usize,
    d: usize,
    k: u32,
    reflection: &DihedralElement,
    budget: u64,
) -> Result<BigInt> {
    if d == 0 || n % d != 0 {
        return Err(Error::InvalidArg(format!("{d} does not divide {n}")));
    }
    if !reflection.is_reflection() {
        return Err(Error::InvalidArg("expected a reflection".into()));
    }
    if reflection.perm.len() != n {
        return Err(Error::InvalidArg(format!(
            "reflection acts on {} vertices, cycle has {n}",
            reflection.perm.len()
        )));
    }
    let total = enumeration_size(n, k, budget)?;
    let mut colors = vec![1u32; n];
    let mut count = 0u64;
    for _ in 0..total {
        let tiled = (0..n).all(|v| colors[v] == colors[(v + d) % n]);
        if tiled && supports(&colors, reflection) {
            count += 1;
        }
        next_coloring(&mut colors, k);
    }
    Ok(BigInt::from(count))
}
