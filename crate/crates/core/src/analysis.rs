//! Structural consequences of the orbit decomposition: similarity of
//! distinguishing colorings, similarity-class sizes, and the lower bound
//! on the multiplicity of zero as a polynomial root.

use crate::coloring::{next_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{has_color_preserving_automorphism, orbit_partition, ColorSearcher};
use crate::oracle::enumeration_size;
use crate::poly::{falling_factorial, IntPoly};
use num::{BigInt, One};
use std::collections::HashMap;

/// For each orbit, the set partition a coloring induces on it: which
/// vertices of the orbit share a color. Canonical form: orbits ordered by
/// least element, blocks within an orbit ordered by least vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitPartitionSignature {
    blocks_per_orbit: Vec<Vec<Vec<usize>>>,
}

impl OrbitPartitionSignature {
    /// Computes the signature of `colors` relative to the given orbit
    /// partition (orbits already in canonical order).
    pub fn of(orbits: &[Vec<usize>], colors: &[u32]) -> OrbitPartitionSignature {
        let blocks_per_orbit = orbits
            .iter()
            .map(|orbit| {
                let mut blocks: Vec<Vec<usize>> = Vec::new();
                for &v in orbit {
                    match blocks
                        .iter_mut()
                        .find(|b| colors[b[0]] == colors[v])
                    {
                        Some(b) => b.push(v),
                        None => blocks.push(vec![v]),
                    }
                }
                // orbit is sorted, so each block is sorted and blocks are
                // already ordered by least vertex
                blocks
            })
            .collect();
        OrbitPartitionSignature { blocks_per_orbit }
    }

    pub fn blocks_per_orbit(&self) -> &[Vec<Vec<usize>>] {
        &self.blocks_per_orbit
    }

    /// Number of color classes each orbit is split into.
    pub fn parts_per_orbit(&self) -> Vec<usize> {
        self.blocks_per_orbit.iter().map(|b| b.len()).collect()
    }

    /// Number of colorings (with colors from `1..=k`) inducing exactly this
    /// partition on every orbit: the product over orbits of `k_(t)` where
    /// `t` is the orbit's number of parts.
    pub fn class_size(&self, k: u32) -> BigInt {
        let k = BigInt::from(k);
        self.blocks_per_orbit
            .iter()
            .fold(BigInt::one(), |acc, blocks| {
                acc * falling_factorial(blocks.len()).eval(&k)
            })
    }
}

fn require_distinguishing(g: &Graph, c: &Coloring, which: &str) -> Result<()> {
    if has_color_preserving_automorphism(g, c) {
        return Err(Error::InvalidArg(format!(
            "{which} coloring is not distinguishing"
        )));
    }
    Ok(())
}

/// Whether two distinguishing colorings induce the same partition on every
/// orbit. Errors if either coloring is not distinguishing.
pub fn similar(g: &Graph, c1: &Coloring, c2: &Coloring) -> Result<bool> {
    require_distinguishing(g, c1, "first")?;
    require_distinguishing(g, c2, "second")?;
    let orbits = orbit_partition(g);
    Ok(OrbitPartitionSignature::of(&orbits, c1.colors())
        == OrbitPartitionSignature::of(&orbits, c2.colors()))
}

/// Number of colorings with colors `1..=k` inducing the same partition as
/// `c` on every orbit of `g` (the size of `c`'s similarity class).
pub fn similarity_class_size(g: &Graph, c: &Coloring, k: u32) -> BigInt {
    let orbits = orbit_partition(g);
    OrbitPartitionSignature::of(&orbits, c.colors()).class_size(k)
}

/// Result of checking the orbit-count lower bound on the multiplicity of
/// zero as a root of the distinguishing polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityCheck {
    pub orbit_count: usize,
    pub multiplicity: usize,
    pub ok: bool,
}

/// Computes the orbit count `q` of `g` and the multiplicity of zero in its
/// distinguishing polynomial, and checks `multiplicity >= q`.
pub fn verify_multiplicity_theorem(g: &Graph, dpoly: &IntPoly) -> Result<MultiplicityCheck> {
    let orbit_count = orbit_partition(g).len();
    let multiplicity = if g.n() == 0 {
        0
    } else {
        dpoly.zero_multiplicity()?
    };
    Ok(MultiplicityCheck {
        orbit_count,
        multiplicity,
        ok: multiplicity >= orbit_count,
    })
}

/// Exhaustive census of the distinguishing `k`-colorings of `g`, grouped
/// into similarity classes by signature.
#[derive(Clone, Debug)]
pub struct SimilarityCensus {
    /// Total number of distinguishing `k`-colorings found.
    pub distinguishing_total: BigInt,
    /// Each distinct signature with the number of distinguishing colorings
    /// observed carrying it, sorted by signature.
    pub classes: Vec<(OrbitPartitionSignature, BigInt)>,
}

pub fn similarity_census(g: &Graph, k: u32, budget: u64) -> Result<SimilarityCensus> {
    let n = g.n();
    let total = enumeration_size(n, k, budget)?;
    let orbits = orbit_partition(g);
    let mut searcher = ColorSearcher::new(g);
    let mut counts: HashMap<OrbitPartitionSignature, u64> = HashMap::new();
    let mut colors = vec![1u32; n];
    let mut found = 0u64;
    if n == 0 {
        return Ok(SimilarityCensus {
            distinguishing_total: BigInt::one(),
            classes: vec![(OrbitPartitionSignature::of(&orbits, &[]), BigInt::one())],
        });
    }
    for _ in 0..total {
        if !searcher.has_nonidentity_supported(&colors) {
            found += 1;
            *counts
                .entry(OrbitPartitionSignature::of(&orbits, &colors))
                .or_insert(0) += 1;
        }
        next_coloring(&mut colors, k);
    }
    let mut classes: Vec<(OrbitPartitionSignature, BigInt)> = counts
        .into_iter()
        .map(|(sig, cnt)| (sig, BigInt::from(cnt)))
        .collect();
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(SimilarityCensus {
        distinguishing_total: BigInt::from(found),
        classes,
    })
}
