//! Closed-form distinguishing polynomials: family formulas for complete
//! graphs, stars, paths and cycles, and composition rules for disjoint
//! unions, complete multipartite graphs and joins (via complements).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{automorphisms, is_isomorphic};
use crate::oracle::dist_poly_oracle;
use crate::poly::{falling_factorial, IntPoly};
use num::{BigInt, Integer, One, Zero};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

// ---------------------------------------------------------------------------
// Prime factorization and the divisor family n_A
// ---------------------------------------------------------------------------

/// Canonical prime decomposition `n = p_1^{e_1} ... p_t^{e_t}`,
/// primes strictly increasing. `n = 1` has an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

/// Trial-division factorization of `n >= 1`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Factorization { pairs }
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Number of distinct prime factors.
    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
            .max(1)
    }

    /// The divisor `n_A`: lower by one the exponent of each prime whose
    /// (1-based) index appears in `a`. `n_∅ = n`.
    pub fn n_sub_a(&self, a: &[usize]) -> Result<u64> {
        let mut mask = 0u32;
        for &i in a {
            if i < 1 || i > self.t() {
                return Err(Error::InvalidArg(format!(
                    "subset index {i} outside 1..={}",
                    self.t()
                )));
            }
            mask |= 1 << (i - 1);
        }
        Ok(self.n_sub_mask(mask))
    }

    fn n_sub_mask(&self, mask: u32) -> u64 {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, &(p, e))| {
                let e = if mask >> i & 1 == 1 { e - 1 } else { e };
                p.pow(e)
            })
            .product::<u64>()
            .max(1)
    }

    /// Calls `body(|A|, n_A)` for every subset `A` of the prime indices.
    fn for_each_subset(&self, mut body: impl FnMut(u32, u64)) {
        let t = self.t();
        assert!(t <= 20, "too many distinct prime factors");
        for mask in 0u32..(1 << t) {
            body(mask.count_ones(), self.n_sub_mask(mask));
        }
    }
}

// ---------------------------------------------------------------------------
// Family polynomials
// ---------------------------------------------------------------------------

/// `K_n`: the falling factorial `k_(n)`.
pub fn complete_poly(n: usize) -> IntPoly {
    falling_factorial(n)
}

/// Star with `leaves + 1` vertices (`leaves >= 1`): `k * k_(leaves)` once
/// the center is forced, except that the 2-vertex star is `K_2`.
pub fn star_poly(leaves: usize) -> IntPoly {
    assert!(leaves >= 1, "a star needs at least one leaf");
    if leaves == 1 {
        // K_2: center and leaf are interchangeable.
        return complete_poly(2);
    }
    &IntPoly::var() * &falling_factorial(leaves)
}

/// Path on `n >= 1` vertices: `k^n - k^ceil(n/2)`; the one-vertex path is
/// asymmetric with polynomial `k`.
pub fn path_poly(n: usize) -> IntPoly {
    assert!(n >= 1, "a path needs at least one vertex");
    if n == 1 {
        return IntPoly::var();
    }
    &IntPoly::monomial(BigInt::one(), n) - &IntPoly::monomial(BigInt::one(), n.div_ceil(2))
}

/// Number of `k`-colorings of `C_n` (`n >= 3`) supporting some non-identity
/// rotation, as a polynomial: `k^n - Σ_A (-1)^|A| k^(n_A)` over all subsets
/// of the distinct primes of `n`.
pub fn cycle_rotation_count_poly(n: usize) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::InvalidArg(format!("cycle counting needs n >= 3, got {n}")));
    }
    let f = factorize(n as u64);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] += 1;
    f.for_each_subset(|size, n_a| {
        if size % 2 == 0 {
            coeffs[n_a as usize] -= 1;
        } else {
            coeffs[n_a as usize] += 1;
        }
    });
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Number of `k`-colorings of `C_n` (`n >= 3`) supporting exactly one
/// reflection: `(n/2) Σ_A (-1)^|A| (k^ceil((n_A+1)/2) + k^floor((n_A+1)/2))`.
/// Computed as twice the value in integers, then halved.
pub fn cycle_reflection_count_poly(n: usize) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::InvalidArg(format!("cycle counting needs n >= 3, got {n}")));
    }
    let f = factorize(n as u64);
    let mut doubled = vec![BigInt::zero(); n / 2 + 2];
    f.for_each_subset(|size, n_a| {
        let hi = (n_a as usize + 1).div_ceil(2);
        let lo = (n_a as usize + 1) / 2;
        let sign: i64 = if size % 2 == 0 { 1 } else { -1 };
        doubled[hi] += BigInt::from(sign * n as i64);
        doubled[lo] += BigInt::from(sign * n as i64);
    });
    let halved = doubled
        .into_iter()
        .map(|c| {
            let (q, r) = c.div_rem(&BigInt::from(2));
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::Internal(
                    "reflection count polynomial has an odd doubled coefficient".into(),
                ))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(halved))
}

/// The distinguishing polynomial of the cycle `C_n` by inclusion-exclusion
/// over the divisor family `n_A`. Degenerate cases: `C_1 = K_1` gives `k`
/// and `C_2 = K_2` gives `k^2 - k`.
pub fn cycle_poly(n: usize) -> IntPoly {
    match n {
        0 => IntPoly::one(),
        1 => IntPoly::var(),
        2 => complete_poly(2),
        _ => {
            let f = factorize(n as u64);
            let mut coeffs = vec![BigInt::zero(); n + 1];
            if n % 2 == 1 {
                f.for_each_subset(|size, n_a| {
                    let sign: i64 = if size % 2 == 0 { 1 } else { -1 };
                    coeffs[n_a as usize] += BigInt::from(sign);
                    coeffs[(n_a as usize + 1) / 2] -= BigInt::from(sign * n as i64);
                });
            } else {
                let half = (n / 2) as i64;
                f.for_each_subset(|size, n_a| {
                    let sign: i64 = if size % 2 == 0 { 1 } else { -1 };
                    coeffs[n_a as usize] += BigInt::from(sign);
                    coeffs[(n_a as usize + 1).div_ceil(2)] -= BigInt::from(sign * half);
                    coeffs[(n_a as usize + 1) / 2] -= BigInt::from(sign * half);
                });
            }
            IntPoly::from_coeffs(coeffs)
        }
    }
}

// ---------------------------------------------------------------------------
// Disjoint unions and complete multipartite graphs
// ---------------------------------------------------------------------------

/// One isomorphism class in a disjoint union: a connected representative
/// with its multiplicity, distinguishing polynomial and automorphism count.
#[derive(Clone, Debug)]
pub struct ComponentProfile {
    pub rep: Graph,
    pub multiplicity: usize,
    pub dpoly: IntPoly,
    pub aut_order: BigInt,
}

/// Distinguishing polynomial of `m` disjoint copies of one connected graph:
/// the product of `dpoly - i * aut_order` for `i = 0..m`.
pub fn union_same_poly(dpoly: &IntPoly, aut_order: &BigInt, m: usize) -> Result<IntPoly> {
    if m < 1 {
        return Err(Error::InvalidArg("union needs at least one copy".into()));
    }
    let mut acc = IntPoly::one();
    for i in 0..m {
        let shift = IntPoly::constant(BigInt::from(i) * aut_order);
        acc = &acc * &(dpoly - &shift);
    }
    Ok(acc)
}

/// Distinguishing polynomial of a disjoint union of mutually non-isomorphic
/// connected graphs with multiplicities: the double product over classes.
pub fn disjoint_union_poly(profiles: &[ComponentProfile]) -> Result<IntPoly> {
    let mut acc = IntPoly::one();
    for p in profiles {
        debug_assert!(p.dpoly.degree() == Some(p.rep.n()) && p.dpoly.is_monic());
        acc = &acc * &union_same_poly(&p.dpoly, &p.aut_order, p.multiplicity)?;
    }
    Ok(acc)
}

/// `|Aut|` of the disjoint union: the product of `m_i! * aut_i^(m_i)`
/// over isomorphism classes.
pub fn union_aut_order(profiles: &[ComponentProfile]) -> BigInt {
    profiles.iter().fold(BigInt::one(), |acc, p| {
        acc * factorial(p.multiplicity) * num::pow::pow(p.aut_order.clone(), p.multiplicity)
    })
}

/// Distinguishing polynomial of the complete multipartite graph with
/// `multiplicity` parts of each (distinct) `size`:
/// the product of `k_(size) - j * size!` over parts.
pub fn complete_multipartite_poly(parts: &[(usize, usize)]) -> Result<IntPoly> {
    for (i, &(size, mult)) in parts.iter().enumerate() {
        if size < 1 || mult < 1 {
            return Err(Error::InvalidArg(
                "part sizes and multiplicities must be positive".into(),
            ));
        }
        if parts[..i].iter().any(|&(s, _)| s == size) {
            return Err(Error::InvalidArg(format!("duplicate part size {size}")));
        }
    }
    let mut acc = IntPoly::one();
    for &(size, mult) in parts {
        let base = falling_factorial(size);
        let aut = factorial(size);
        acc = &acc * &union_same_poly(&base, &aut, mult)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Family recognition and the main computation path
// ---------------------------------------------------------------------------

/// A recognized graph family with enough data to bypass enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    /// Star by leaf count (so `leaves + 1` vertices).
    Star(usize),
    Path(usize),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete(_) => "closed-form:complete",
            Family::Cycle(_) => "closed-form:cycle",
            Family::Star(_) => "closed-form:star",
            Family::Path(_) => "closed-form:path",
        }
    }

    pub fn poly(&self) -> IntPoly {
        match *self {
            Family::Complete(n) => complete_poly(n),
            Family::Cycle(n) => cycle_poly(n),
            Family::Star(leaves) => star_poly(leaves),
            Family::Path(n) => path_poly(n),
        }
    }

    pub fn aut_order(&self) -> BigInt {
        match *self {
            Family::Complete(n) => factorial(n),
            Family::Cycle(n) if n >= 3 => BigInt::from(2 * n),
            Family::Cycle(n) => factorial(n),
            Family::Star(leaves) => factorial(leaves).max(BigInt::from(2)),
            Family::Path(n) if n >= 2 => BigInt::from(2),
            Family::Path(_) => BigInt::one(),
        }
    }
}

/// Degree-sequence recognizer for the closed-form families.
/// Checks complete, then cycle, then star, then path.
pub fn recognize_family(g: &Graph) -> Option<Family> {
    let n = g.n();
    let degs = g.degrees();
    if degs.iter().all(|&d| d + 1 == n.max(1)) {
        return Some(Family::Complete(n));
    }
    if n >= 3 && degs.iter().all(|&d| d == 2) && g.is_connected() {
        return Some(Family::Cycle(n));
    }
    if n >= 3 {
        let centers = degs.iter().filter(|&&d| d == n - 1).count();
        let leaves = degs.iter().filter(|&&d| d == 1).count();
        if centers == 1 && leaves == n - 1 {
            return Some(Family::Star(n - 1));
        }
    }
    if n >= 2 {
        let ends = degs.iter().filter(|&&d| d == 1).count();
        let inner = degs.iter().filter(|&&d| d == 2).count();
        if ends == 2 && inner == n - 2 && g.is_connected() {
            return Some(Family::Path(n));
        }
    }
    None
}

/// A parameterized graph family whose report can be produced from formulas
/// alone, without constructing the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Cycle on `n >= 1` vertices (degenerating to `K_1`, `K_2`).
    Cycle(usize),
    /// Complete graph on `n >= 0` vertices.
    Complete(usize),
    /// Star with `leaves >= 1` leaves (`leaves + 1` vertices).
    Star(usize),
    /// Complete multipartite graph: `(part size, multiplicity)` pairs with
    /// distinct sizes.
    Multipartite(Vec<(usize, usize)>),
}

/// Vertex-count guard for family parameters; keeps polynomial sizes sane.
pub const MAX_FAMILY_N: usize = 1024;

impl FamilySpec {
    /// Parses a family name plus its CLI parameters. Multipartite parts are
    /// written `size:multiplicity`, e.g. `2:3` for three parts of size two.
    pub fn parse(name: &str, params: &[String]) -> Result<FamilySpec> {
        let one_int = || -> Result<usize> {
            if params.len() != 1 {
                return Err(Error::InvalidArg(format!(
                    "family '{name}' takes exactly one integer parameter"
                )));
            }
            params[0]
                .parse::<usize>()
                .map_err(|_| Error::InvalidArg(format!("bad parameter '{}'", params[0])))
        };
        let spec = match name {
            "path" => FamilySpec::Path(one_int()?),
            "cycle" => FamilySpec::Cycle(one_int()?),
            "complete" => FamilySpec::Complete(one_int()?),
            "star" => FamilySpec::Star(one_int()?),
            "multipartite" => {
                if params.is_empty() {
                    return Err(Error::InvalidArg(
                        "multipartite needs at least one size:multiplicity pair".into(),
                    ));
                }
                let mut parts = Vec::new();
                for p in params {
                    let (size, mult) = p.split_once(':').ok_or_else(|| {
                        Error::InvalidArg(format!("expected size:multiplicity, got '{p}'"))
                    })?;
                    let size = size
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidArg(format!("bad part size '{size}'")))?;
                    let mult = mult
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidArg(format!("bad multiplicity '{mult}'")))?;
                    parts.push((size, mult));
                }
                FamilySpec::Multipartite(parts)
            }
            _ => {
                return Err(Error::InvalidArg(format!(
                    "unknown family '{name}' (expected path, cycle, complete, star or multipartite)"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) if *n < 1 => {
                return Err(Error::InvalidArg("need at least one vertex".into()))
            }
            FamilySpec::Star(leaves) if *leaves < 1 => {
                return Err(Error::InvalidArg("a star needs at least one leaf".into()))
            }
            FamilySpec::Multipartite(parts) => {
                for (i, &(size, mult)) in parts.iter().enumerate() {
                    if size < 1 || mult < 1 {
                        return Err(Error::InvalidArg(
                            "part sizes and multiplicities must be positive".into(),
                        ));
                    }
                    if parts[..i].iter().any(|&(s, _)| s == size) {
                        return Err(Error::InvalidArg(format!("duplicate part size {size}")));
                    }
                }
            }
            _ => {}
        }
        if self.n() > MAX_FAMILY_N {
            return Err(Error::InvalidArg(format!(
                "family too large: n = {} exceeds {MAX_FAMILY_N}",
                self.n()
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Star(leaves) => leaves + 1,
            FamilySpec::Multipartite(parts) => {
                parts.iter().map(|&(size, mult)| size * mult).sum()
            }
        }
    }

    pub fn poly(&self) -> Result<IntPoly> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Path(n) => path_poly(*n),
            FamilySpec::Cycle(n) => cycle_poly(*n),
            FamilySpec::Complete(n) => complete_poly(*n),
            FamilySpec::Star(leaves) => star_poly(*leaves),
            FamilySpec::Multipartite(parts) => complete_multipartite_poly(parts)?,
        })
    }

    pub fn aut_order(&self) -> BigInt {
        match self {
            FamilySpec::Path(n) => Family::Path(*n).aut_order(),
            FamilySpec::Cycle(n) => Family::Cycle(*n).aut_order(),
            FamilySpec::Complete(n) => factorial(*n),
            FamilySpec::Star(leaves) => Family::Star(*leaves).aut_order(),
            FamilySpec::Multipartite(parts) => parts.iter().fold(BigInt::one(), |acc, &(size, mult)| {
                acc * factorial(mult) * num::pow::pow(factorial(size), mult)
            }),
        }
    }

    /// Orbit count, read off the family structure.
    pub fn orbit_count(&self) -> usize {
        match self {
            FamilySpec::Path(n) => (n + 1) / 2,
            FamilySpec::Cycle(_) => 1,
            FamilySpec::Complete(0) => 0,
            FamilySpec::Complete(_) => 1,
            // center and leaves, except K_2 which is vertex-transitive
            FamilySpec::Star(1) => 1,
            FamilySpec::Star(_) => 2,
            // one orbit per distinct part size
            FamilySpec::Multipartite(parts) => parts.len(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FamilySpec::Path(n) => format!("path({n})"),
            FamilySpec::Cycle(n) => format!("cycle({n})"),
            FamilySpec::Complete(n) => format!("complete({n})"),
            FamilySpec::Star(leaves) => format!("star({leaves})"),
            FamilySpec::Multipartite(parts) => {
                let parts: Vec<String> = parts
                    .iter()
                    .map(|&(size, mult)| format!("{size}:{mult}"))
                    .collect();
                format!("multipartite({})", parts.join(","))
            }
        }
    }

    pub fn provenance_tag(&self) -> String {
        match self {
            FamilySpec::Path(_) => "closed-form:path".into(),
            FamilySpec::Cycle(_) => "closed-form:cycle".into(),
            FamilySpec::Complete(_) => "closed-form:complete".into(),
            FamilySpec::Star(_) => "closed-form:star".into(),
            FamilySpec::Multipartite(_) => "closed-form:multipartite".into(),
        }
    }

    /// Builds the actual graph (used by cross-checks, not by reports).
    pub fn build_graph(&self) -> Graph {
        match self {
            FamilySpec::Path(n) => crate::graph::path_graph(*n),
            FamilySpec::Cycle(n) => crate::graph::cycle_graph(*n),
            FamilySpec::Complete(n) => crate::graph::complete_graph(*n),
            FamilySpec::Star(leaves) => crate::graph::star_graph(*leaves),
            FamilySpec::Multipartite(parts) => {
                let mut sizes = Vec::new();
                for &(size, mult) in parts {
                    sizes.extend(std::iter::repeat(size).take(mult));
                }
                crate::graph::complete_multipartite_graph(&sizes)
            }
        }
    }
}

/// The distinguishing polynomial with its automorphism count and the tags
/// describing how each factor was obtained.
#[derive(Clone, Debug)]
pub struct DistPolyResult {
    pub poly: IntPoly,
    pub aut_order: BigInt,
    pub provenance: Vec<String>,
}

/// Computes the distinguishing polynomial of an arbitrary graph:
/// splits into connected components (switching to the complement when that
/// turns one component into several), groups components by isomorphism,
/// resolves each representative through a family formula or the
/// enumeration oracle, and composes with the disjoint-union product.
pub fn compute_dist_poly(g: &Graph, budget: u64, aut_cap: usize) -> Result<DistPolyResult> {
    if g.n() == 0 {
        return Ok(DistPolyResult {
            poly: IntPoly::one(),
            aut_order: BigInt::one(),
            provenance: vec!["closed-form:empty".into()],
        });
    }
    let mut provenance = Vec::new();
    let mut comps: Vec<Graph> = g
        .connected_components()
        .into_iter()
        .map(|(cg, _)| cg)
        .collect();
    if comps.len() == 1 {
        // a recognized connected family needs no reduction at all
        if let Some(family) = recognize_family(g) {
            let poly = family.poly();
            if poly.degree() != Some(g.n()) || !poly.is_monic() {
                return Err(Error::Internal(format!(
                    "family polynomial is not monic of degree {}: {poly}",
                    g.n()
                )));
            }
            return Ok(DistPolyResult {
                poly,
                aut_order: family.aut_order(),
                provenance: vec![family.tag().to_string()],
            });
        }
        let c = g.complement();
        let ccomps = c.connected_components();
        if ccomps.len() > 1 {
            provenance.push("complement-reduction".to_string());
            comps = ccomps.into_iter().map(|(cg, _)| cg).collect();
        }
    }
    if comps.len() > 1 {
        provenance.push("union-composition".to_string());
    }

    let mut classes: Vec<(Graph, usize)> = Vec::new();
    for comp in comps {
        match classes.iter_mut().find(|(rep, _)| is_isomorphic(rep, &comp)) {
            Some((_, mult)) => *mult += 1,
            None => classes.push((comp, 1)),
        }
    }

    let mut profiles = Vec::with_capacity(classes.len());
    for (rep, multiplicity) in classes {
        let (dpoly, aut_order, tag) = match recognize_family(&rep) {
            Some(family) => (family.poly(), family.aut_order(), family.tag().to_string()),
            None => {
                let dpoly = dist_poly_oracle(&rep, budget)?;
                let aut = automorphisms(&rep, aut_cap)?;
                (dpoly, BigInt::from(aut.order()), "oracle".to_string())
            }
        };
        if !provenance.contains(&tag) {
            provenance.push(tag);
        }
        profiles.push(ComponentProfile {
            rep,
            multiplicity,
            dpoly,
            aut_order,
        });
    }

    let poly = disjoint_union_poly(&profiles)?;
    let aut_order = union_aut_order(&profiles);
    if poly.degree() != Some(g.n()) || !poly.is_monic() {
        return Err(Error::Internal(format!(
            "composed polynomial is not monic of degree {}: {poly}",
            g.n()
        )));
    }
    Ok(DistPolyResult {
        poly,
        aut_order,
        provenance,
    })
}
