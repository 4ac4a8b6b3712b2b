//! Cross-check suites: enumeration oracle against closed forms, the cycle
//! classification identities, complement invariance, Φ/φ consistency, the
//! zero-multiplicity bound, and distinguishing-number agreement.
//!
//! Each suite returns a [`SuiteReport`] naming every failing case; the CLI
//! `verify` subcommand prints one row per suite.

use crate::analysis::{similarity_census, verify_multiplicity_theorem};
use crate::closed_forms::{
    complete_multipartite_poly, complete_poly, compute_dist_poly, cycle_poly,
    cycle_reflection_count_poly, cycle_rotation_count_poly, path_poly, star_poly, FamilySpec,
};
use crate::corpus::connected_upto;
use crate::dihedral::{dihedral_labeled, DihedralKind};
use crate::error::Result;
use crate::graph::{complete_graph, cycle_graph, disjoint_union, Graph};
use crate::group::{automorphisms, orbit_partition, DEFAULT_AUT_CAP};
use crate::oracle::{
    classify_cycle_noncolorings, count_distinguishing, count_segment_supported,
    dist_poly_oracle, distinguishing_number, distinguishing_number_from_poly, phi_exact_all,
    phi_poly, DEFAULT_BUDGET,
};
use crate::poly::{IntPoly, RatPoly};
use num::{BigInt, One, Zero};

/// Bounds for a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest vertex count used by the enumeration-backed suites.
    pub max_n: usize,
    /// Largest color count used by the per-k identity checks.
    pub max_k: u32,
    pub budget: u64,
    pub aut_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            max_n: 7,
            max_k: 3,
            budget: DEFAULT_BUDGET,
            aut_cap: DEFAULT_AUT_CAP,
        }
    }
}

/// Outcome of one suite: how many cases ran and which failed.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, case: impl fmt::Display, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(case.to_string());
        }
    }

    fn check_eq<T: PartialEq + fmt::Debug>(&mut self, case: impl fmt::Display, got: T, want: T) {
        self.cases += 1;
        if got != want {
            self.failures
                .push(format!("{case}: got {got:?}, want {want:?}"));
        }
    }

    /// Runs a fallible check; an error counts as a failure.
    fn try_check(&mut self, case: impl fmt::Display, f: impl FnOnce() -> Result<bool>) {
        self.cases += 1;
        match f() {
            Ok(true) => {}
            Ok(false) => self.failures.push(case.to_string()),
            Err(e) => self.failures.push(format!("{case}: {e}")),
        }
    }
}

use std::fmt;

fn ip(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Published polynomial values: cycles at 4, 6, odd primes and 9, and the
/// three small complete multipartite graphs.
pub fn suite_closed_forms(_cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("closed-forms");
    s.check_eq("cycle(4)", cycle_poly(4), ip(&[0, 2, -1, -2, 1]));
    s.check_eq("cycle(6)", cycle_poly(6), ip(&[0, -2, 8, -4, -3, 0, 1]));
    for p in [3usize, 5, 7] {
        // k^p - p k^((p+1)/2) + (p-1) k
        let mut coeffs = vec![BigInt::zero(); p + 1];
        coeffs[p] = BigInt::one();
        coeffs[(p + 1) / 2] = BigInt::from(-(p as i64));
        coeffs[1] += BigInt::from(p as i64 - 1);
        s.check_eq(format!("cycle({p})"), cycle_poly(p), IntPoly::from_coeffs(coeffs));
    }
    // k^9 - 9 k^5 - k^3 + 9 k^2
    s.check_eq(
        "cycle(9)",
        cycle_poly(9),
        ip(&[0, 0, 9, -1, 0, -9, 0, 0, 0, 1]),
    );
    s.check_eq(
        "multipartite 2,3",
        complete_multipartite_poly(&[(2, 1), (3, 1)]).unwrap(),
        ip(&[0, 0, -2, 5, -4, 1]),
    );
    s.check_eq(
        "multipartite 3,3",
        complete_multipartite_poly(&[(3, 2)]).unwrap(),
        ip(&[0, -12, 22, -18, 13, -6, 1]),
    );
    s.check_eq(
        "multipartite 2,2,2",
        complete_multipartite_poly(&[(2, 3)]).unwrap(),
        ip(&[0, -8, 2, 11, -3, -3, 1]),
    );
    s
}

/// The enumeration oracle agrees with every family formula and with the
/// disjoint-union composition on spot cases.
pub fn suite_oracle_equivalence(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("oracle-equivalence");
    let b = cfg.budget;
    for n in 1..=cfg.max_n {
        s.try_check(format!("path({n})"), || {
            Ok(dist_poly_oracle(&crate::graph::path_graph(n), b)? == path_poly(n))
        });
    }
    for n in 3..=cfg.max_n {
        s.try_check(format!("cycle({n})"), || {
            Ok(dist_poly_oracle(&cycle_graph(n), b)? == cycle_poly(n))
        });
    }
    for n in 1..=cfg.max_n.min(6) {
        s.try_check(format!("complete({n})"), || {
            Ok(dist_poly_oracle(&complete_graph(n), b)? == complete_poly(n))
        });
    }
    for leaves in 1..=cfg.max_n.saturating_sub(1).min(6) {
        s.try_check(format!("star({leaves})"), || {
            Ok(dist_poly_oracle(&crate::graph::star_graph(leaves), b)? == star_poly(leaves))
        });
    }
    // union spot cases against the composition formulas
    let k2 = complete_graph(2);
    let k3 = complete_graph(3);
    let spot: Vec<(&str, Graph, IntPoly)> = vec![
        (
            "2K2",
            disjoint_union(&k2, &k2),
            ip(&[0, 2, -1, -2, 1]),
        ),
        (
            "3K2",
            disjoint_union(&disjoint_union(&k2, &k2), &k2),
            ip(&[0, -8, 2, 11, -3, -3, 1]),
        ),
        (
            "2K3",
            disjoint_union(&k3, &k3),
            ip(&[0, -12, 22, -18, 13, -6, 1]),
        ),
        (
            "K2 ∪ K3",
            disjoint_union(&k2, &k3),
            ip(&[0, 0, -2, 5, -4, 1]),
        ),
    ];
    for (name, g, want) in spot {
        if g.n() <= cfg.max_n {
            s.try_check(name, || Ok(dist_poly_oracle(&g, b)? == want));
        }
    }
    // adding an isolated vertex multiplies by k
    for (name, g) in [("C4", cycle_graph(4)), ("K3", k3.clone())] {
        let with_k1 = disjoint_union(&g, &Graph::empty(1));
        if with_k1.n() <= cfg.max_n {
            s.try_check(format!("{name} ∪ K1"), || {
                let whole = dist_poly_oracle(&with_k1, b)?;
                let part = dist_poly_oracle(&g, b)?;
                Ok(whole == &IntPoly::var() * &part)
            });
        }
    }
    // the multipartite product formula against enumeration of the graph
    for parts in [
        vec![(2usize, 1usize), (3, 1)],
        vec![(3, 2)],
        vec![(2, 3)],
        vec![(1, 2), (2, 1)],
        vec![(1, 1), (2, 1), (3, 1)],
        vec![(2, 2), (3, 1)],
    ] {
        let spec = FamilySpec::Multipartite(parts.clone());
        if spec.n() > cfg.max_n.min(7) {
            continue;
        }
        s.try_check(format!("oracle {}", spec.describe()), || {
            let g = spec.build_graph();
            Ok(dist_poly_oracle(&g, b)? == complete_multipartite_poly(&parts)?)
        });
    }
    s
}

/// Every computed polynomial is monic of degree n: enumeration oracle over
/// the bundled corpus, family formulas up to n = 12.
pub fn suite_monicity(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("monicity");
    let monic = |p: &IntPoly, n: usize| p.degree() == Some(n) && p.is_monic();
    for g in connected_upto(cfg.max_n.min(6)) {
        s.try_check(format!("oracle {}", g.to_graph6()), || {
            Ok(monic(&dist_poly_oracle(&g, cfg.budget)?, g.n()))
        });
    }
    for n in 1..=12usize {
        s.check(format!("path({n})"), monic(&path_poly(n), n));
        s.check(format!("cycle({n})"), monic(&cycle_poly(n), n));
        s.check(format!("complete({n})"), monic(&complete_poly(n), n));
        if n >= 2 {
            s.check(format!("star({})", n - 1), monic(&star_poly(n - 1), n));
        }
    }
    for (name, parts) in [
        ("K_{2,3}", vec![(2usize, 1usize), (3, 1)]),
        ("K_{3,3}", vec![(3, 2)]),
        ("K_{2,2,2}", vec![(2, 3)]),
        ("K_{1,2,3}", vec![(1, 1), (2, 1), (3, 1)]),
        ("K_{2,2,3,5}", vec![(2, 2), (3, 1), (5, 1)]),
    ] {
        let n: usize = parts.iter().map(|&(a, m)| a * m).sum();
        s.check(
            name,
            monic(&complete_multipartite_poly(&parts).unwrap(), n),
        );
    }
    s
}

/// A graph and its complement have the same distinguishing polynomial,
/// checked by pure enumeration on both sides.
pub fn suite_complement(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("complement");
    for g in connected_upto(cfg.max_n.min(6)) {
        s.try_check(format!("complement {}", g.to_graph6()), || {
            Ok(dist_poly_oracle(&g, cfg.budget)? == dist_poly_oracle(&g.complement(), cfg.budget)?)
        });
    }
    s
}

/// Brute-force classification of non-distinguishing cycle colorings matches
/// the reflection/rotation counting polynomials, and the three counts tile
/// the whole coloring space.
pub fn suite_cycles(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("cycles");
    for n in 3..=cfg.max_n.min(8) {
        let m_poly = cycle_reflection_count_poly(n).unwrap();
        let n_poly = cycle_rotation_count_poly(n).unwrap();
        let d_poly = cycle_poly(n);
        for k in 2..=cfg.max_k {
            s.try_check(format!("C_{n} classification at k = {k}"), || {
                let (m, rot) = classify_cycle_noncolorings(n, k, cfg.budget)?;
                let kb = BigInt::from(k);
                let total = num::pow::pow(kb.clone(), n);
                Ok(m == m_poly.eval(&kb)
                    && rot == n_poly.eval(&kb)
                    && total == d_poly.eval(&kb) + &m + &rot)
            });
        }
    }
    s
}

/// Counts of rotation-periodic colorings supporting one chosen reflection
/// match `k^ceil((d+1)/2)` (axis through a vertex) and `k^floor((d+1)/2)`
/// (axis through an edge), for every axis.
pub fn suite_segments(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("segments");
    for n in [4usize, 6, 8] {
        if n > cfg.max_n {
            continue;
        }
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let elems = dihedral_labeled(n).unwrap();
        for &d in &divisors {
            for k in 2..=cfg.max_k {
                for e in elems.iter().filter(|e| e.is_reflection()) {
                    let expected = match e.kind {
                        DihedralKind::VertexReflection(_) => (d + 1).div_ceil(2),
                        DihedralKind::EdgeReflection(_) => (d + 1) / 2,
                        DihedralKind::Rotation(_) => unreachable!(),
                    };
                    let expected = num::pow::pow(BigInt::from(k), expected);
                    s.try_check(
                        format!("n={n} d={d} k={k} {:?}", e.kind),
                        || Ok(count_segment_supported(n, d, k, e, cfg.budget)? == expected),
                    );
                }
            }
        }
    }
    s
}

/// Φ = 𝔇/|Aut| is integer-valued, φ from binomial inversion is non-negative
/// and resubstitutes, the composed |Aut| matches the backtracking group
/// order, and Φ of paths matches its closed form symbolically.
pub fn suite_phi(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("phi");
    for g in corpus_with_complements(cfg.max_n.min(6)) {
        s.try_check(format!("phi {}", g.to_graph6()), || {
            let r = compute_dist_poly(&g, cfg.budget, cfg.aut_cap)?;
            let direct = automorphisms(&g, cfg.aut_cap)?;
            if r.aut_order != BigInt::from(direct.order()) {
                return Ok(false);
            }
            phi_poly(&r.poly, &r.aut_order)?;
            phi_exact_all(&r.poly, &r.aut_order)?;
            Ok(true)
        });
    }
    for n in 1..=cfg.max_n.min(8) {
        s.try_check(format!("phi path({n}) symbolic"), || {
            let phi = phi_poly(&path_poly(n), &FamilySpec::Path(n).aut_order())?;
            let expected = if n == 1 {
                RatPoly::from_int(IntPoly::var())
            } else {
                let diff = &IntPoly::monomial(BigInt::one(), n)
                    - &IntPoly::monomial(BigInt::one(), n.div_ceil(2));
                RatPoly::new(diff, BigInt::from(2))
            };
            Ok(phi == expected)
        });
    }
    for spec in family_specs_upto(12) {
        s.try_check(format!("phi {}", spec.describe()), || {
            let poly = spec.poly()?;
            phi_exact_all(&poly, &spec.aut_order())?;
            Ok(true)
        });
    }
    s
}

/// The multiplicity of zero in 𝔇 is at least the orbit count, and
/// similarity classes tile the distinguishing colorings in sizes
/// divisible by k^q.
pub fn suite_multiplicity(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("multiplicity");
    for g in corpus_with_complements(cfg.max_n.min(6)) {
        s.try_check(format!("multiplicity {}", g.to_graph6()), || {
            let r = compute_dist_poly(&g, cfg.budget, cfg.aut_cap)?;
            Ok(verify_multiplicity_theorem(&g, &r.poly)?.ok)
        });
    }
    for spec in family_specs_upto(12) {
        s.try_check(format!("multiplicity {}", spec.describe()), || {
            let poly = spec.poly()?;
            let mult = if spec.n() == 0 { 0 } else { poly.zero_multiplicity()? };
            Ok(mult >= spec.orbit_count())
        });
    }
    // family orbit-count formulas agree with the group action at small n
    for spec in family_specs_upto(8) {
        s.try_check(format!("orbits {}", spec.describe()), || {
            Ok(orbit_partition(&spec.build_graph()).len() == spec.orbit_count())
        });
    }
    // the vertex-transitive cycle C_9 still has a double root at zero
    s.try_check("cycle(9) q=1 mult=2", || {
        let check = verify_multiplicity_theorem(&cycle_graph(9), &cycle_poly(9))?;
        Ok(check.orbit_count == 1 && check.multiplicity == 2 && check.ok)
    });
    // similarity classes partition the distinguishing colorings
    for g in corpus_with_complements(cfg.max_n.min(5)) {
        let q = orbit_partition(&g).len();
        for k in 1..=cfg.max_k {
            s.try_check(
                format!("similarity {} at k = {k}", g.to_graph6()),
                || {
                    let census = similarity_census(&g, k, cfg.budget)?;
                    let direct = count_distinguishing(&g, k, cfg.budget)?;
                    if census.distinguishing_total != direct {
                        return Ok(false);
                    }
                    let kq = num::pow::pow(BigInt::from(k), q);
                    let mut sum = BigInt::zero();
                    for (sig, observed) in &census.classes {
                        let size = sig.class_size(k);
                        if &size != observed || !(&size % &kq).is_zero() {
                            return Ok(false);
                        }
                        sum += size;
                    }
                    Ok(sum == direct)
                },
            );
        }
    }
    s
}

/// The distinguishing number read off the polynomial equals the one found
/// by direct search, and the published values hold.
pub fn suite_dist_number(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = SuiteReport::new("dist-number");
    for n in 1..=cfg.max_n.min(6) {
        s.try_check(format!("D(K_{n}) = {n}"), || {
            Ok(distinguishing_number(&complete_graph(n), cfg.budget)? == n as u32)
        });
    }
    if cfg.max_n >= 5 {
        s.try_check("D(C_5) = 3", || {
            Ok(distinguishing_number(&cycle_graph(5), cfg.budget)? == 3)
        });
    }
    s.try_check("D(P_3) = 2", || {
        Ok(distinguishing_number(&crate::graph::path_graph(3), cfg.budget)? == 2)
    });
    for g in corpus_with_complements(cfg.max_n.min(6)) {
        s.try_check(format!("D agreement {}", g.to_graph6()), || {
            let direct = distinguishing_number(&g, cfg.budget)?;
            let r = compute_dist_poly(&g, cfg.budget, cfg.aut_cap)?;
            Ok(distinguishing_number_from_poly(&r.poly)? == direct)
        });
    }
    s
}

/// Connected corpus graphs up to `max_n` along with their complements.
fn corpus_with_complements(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in connected_upto(max_n) {
        let c = g.complement();
        out.push(g);
        out.push(c);
    }
    out
}

/// Family instances used by the corpus-wide suites.
fn family_specs_upto(max_n: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=max_n {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Cycle(n));
        specs.push(FamilySpec::Complete(n));
        if n >= 2 {
            specs.push(FamilySpec::Star(n - 1));
        }
    }
    for parts in [
        vec![(2usize, 1usize), (3, 1)],
        vec![(3, 2)],
        vec![(2, 3)],
        vec![(1, 1), (2, 1), (3, 1)],
        vec![(2, 2), (3, 1)],
    ] {
        let spec = FamilySpec::Multipartite(parts);
        if spec.n() <= max_n {
            specs.push(spec);
        }
    }
    specs
}

/// All suite names, in the order they are run by default.
pub const SUITE_NAMES: &[&str] = &[
    "closed-forms",
    "oracle-equivalence",
    "monicity",
    "complement",
    "cycles",
    "segments",
    "phi",
    "multiplicity",
    "dist-number",
];

/// Runs the named suite.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    Ok(match name {
        "closed-forms" => suite_closed_forms(cfg),
        "oracle-equivalence" => suite_oracle_equivalence(cfg),
        "monicity" => suite_monicity(cfg),
        "complement" => suite_complement(cfg),
        "cycles" => suite_cycles(cfg),
        "segments" => suite_segments(cfg),
        "phi" => suite_phi(cfg),
        "multiplicity" => suite_multiplicity(cfg),
        "dist-number" => suite_dist_number(cfg),
        _ => {
            return Err(crate::error::Error::InvalidArg(format!(
                "unknown suite '{name}' (expected one of: {})",
                SUITE_NAMES.join(", ")
            )))
        }
    })
}

/// Runs the listed suites (all of them when `names` is empty).
pub fn run_suites(names: &[String], cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    let chosen: Vec<&str> = if names.is_empty() {
        SUITE_NAMES.to_vec()
    } else {
        names.iter().map(|s| s.as_str()).collect()
    };
    chosen.iter().map(|name| run_suite(name, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> VerifyConfig {
        VerifyConfig {
            max_n: 5,
            max_k: 2,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn closed_forms_suite_passes() {
        let s = suite_closed_forms(&tiny());
        assert!(s.passed(), "{:?}", s.failures);
        assert!(s.cases >= 8);
    }

    #[test]
    fn cycles_and_segments_pass_at_small_bounds() {
        let s = suite_cycles(&tiny());
        assert!(s.passed(), "{:?}", s.failures);
        let s = suite_segments(&tiny());
        assert!(s.passed(), "{:?}", s.failures);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &tiny()).is_err());
    }

    #[test]
    fn suite_runner_selects_by_name() {
        let out = run_suites(&["closed-forms".to_string()], &tiny()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].name, "closed-forms");
    }
}
