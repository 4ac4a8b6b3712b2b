//! Automorphism groups: backtracking search, orbits, stabilizers.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

/// Default cap on the number of stored group elements.
pub const DEFAULT_AUT_CAP: usize = 1_000_000;

/// An explicitly enumerated permutation group on `{0..n-1}`.
/// Elements are stored sorted lexicographically by image sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    /// Wraps an element list, sorting and deduplicating.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> AutGroup {
        elements.sort();
        elements.dedup();
        AutGroup { n, elements }
    }

    pub fn trivial(n: usize) -> AutGroup {
        AutGroup {
            n,
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Checks the subgroup axioms on the stored elements: identity present,
    /// closed under composition and inverses.
    pub fn is_closed_group(&self) -> bool {
        if !self.contains(&Permutation::identity(self.n)) {
            return false;
        }
        for f in &self.elements {
            if !self.contains(&f.inverse()) {
                return false;
            }
            for g in &self.elements {
                if !self.contains(&f.compose(g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Orbit partition of `{0..n-1}` under the stored elements.
    /// Blocks are sorted internally and ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen[v] {
                continue;
            }
            let mut block: Vec<usize> = self.elements.iter().map(|f| f.apply(v)).collect();
            block.sort_unstable();
            block.dedup();
            for &u in &block {
                seen[u] = true;
            }
            out.push(block);
        }
        out
    }

    /// The subgroup of elements supported by `c` (the stabilizer of `c`
    /// under the color-moving action).
    pub fn stabilizer(&self, c: &Coloring) -> AutGroup {
        assert_eq!(c.len(), self.n);
        AutGroup {
            n: self.n,
            elements: self
                .elements
                .iter()
                .filter(|f| c.supports(f))
                .cloned()
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Backtracking search
// ---------------------------------------------------------------------------

/// Per-vertex refinement invariant: (degree, sorted multiset of neighbor degrees).
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let degs = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| degs[u]).collect();
            nd.sort_unstable();
            (degs[v], nd)
        })
        .collect()
}

/// Backtracking enumerator of edge-preserving bijections `domain -> target`.
///
/// Vertices of the domain are assigned in index order; candidate images are
/// restricted to the matching invariant class (and optionally to matching
/// colors, or to a pinned image for one vertex). Candidates are tried in
/// ascending order, so complete maps are produced in lexicographic order
/// of their image sequences.
struct MappingSearch<'a> {
    domain: &'a Graph,
    target: &'a Graph,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl<'a> MappingSearch<'a> {
    fn new(domain: &'a Graph, target: &'a Graph) -> MappingSearch<'a> {
        let n = domain.n();
        let dom_inv = vertex_invariants(domain);
        let tgt_inv = if std::ptr::eq(domain, target) {
            dom_inv.clone()
        } else {
            vertex_invariants(target)
        };
        let candidates = dom_inv
            .iter()
            .map(|inv| {
                (0..target.n())
                    .filter(|&w| tgt_inv[w] == *inv)
                    .collect::<Vec<_>>()
            })
            .collect();
        MappingSearch {
            domain,
            target,
            candidates,
            image: vec![UNSET; n],
            used: vec![false; target.n()],
        }
    }

    #[inline]
    fn consistent(&self, v: usize, w: usize) -> bool {
        for u in 0..v {
            if self.domain.has_edge(u, v) != self.target.has_edge(self.image[u], w) {
                return false;
            }
        }
        true
    }

    /// Visits every complete mapping; `visit` returns false to stop early.
    /// Returns false if the search was stopped.
    fn search(&mut self, pin: Option<(usize, usize)>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        self.dfs(0, pin, visit)
    }

    fn dfs(&mut self, v: usize, pin: Option<(usize, usize)>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if v == self.domain.n() {
            return visit(&self.image);
        }
        let slot = match pin {
            Some((pv, pw)) if pv == v => Some(pw),
            _ => None,
        };
        for idx in 0..self.candidates[v].len() {
            let w = self.candidates[v][idx];
            if let Some(pw) = slot {
                if w != pw {
                    continue;
                }
            }
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let keep_going = self.dfs(v + 1, pin, visit);
            self.used[w] = false;
            self.image[v] = UNSET;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Enumerates the full automorphism group of `g`, in lexicographic order of
/// image sequences. Fails with [`Error::GroupTooLarge`] past `cap` elements.
pub fn automorphisms(g: &Graph, cap: usize) -> Result<AutGroup> {
    let mut elements = Vec::new();
    let mut overflow = false;
    let mut search = MappingSearch::new(g, g);
    search.search(None, &mut |image| {
        if elements.len() >= cap {
            overflow = true;
            return false;
        }
        elements.push(Permutation::from_images(image.to_vec()).expect("search yields bijections"));
        true
    });
    if overflow {
        return Err(Error::GroupTooLarge {
            cap,
            found: elements.len(),
        });
    }
    Ok(AutGroup { n: g.n(), elements })
}

/// Exact isomorphism test by backtracking with invariant pruning.
/// Intended for small graphs (n up to ~16).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut ginv = vertex_invariants(g);
    let mut hinv = vertex_invariants(h);
    ginv.sort();
    hinv.sort();
    if ginv != hinv {
        return false;
    }
    let mut found = false;
    let mut search = MappingSearch::new(g, h);
    search.search(None, &mut |_| {
        found = true;
        false
    });
    found
}

/// Whether some non-identity automorphism of `g` preserves the colors of `c`.
/// `c` is distinguishing exactly when this returns false.
///
/// This performs a direct backtracking search restricted to color-respecting
/// assignments; it never materializes the automorphism group.
pub fn has_color_preserving_automorphism(g: &Graph, c: &Coloring) -> bool {
    assert_eq!(c.len(), g.n());
    ColorSearcher::new(g).has_nonidentity_supported(c.colors())
}

/// Reusable search state for repeated color-preserving-automorphism tests
/// on one graph. Used by the enumeration oracle's inner loop.
pub(crate) struct ColorSearcher<'a> {
    g: &'a Graph,
    classes: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> ColorSearcher<'a> {
    pub(crate) fn new(g: &'a Graph) -> ColorSearcher<'a> {
        let inv = vertex_invariants(g);
        let classes = inv
            .iter()
            .map(|iv| (0..g.n()).filter(|&w| inv[w] == *iv).collect::<Vec<_>>())
            .collect();
        ColorSearcher {
            g,
            classes,
            image: vec![UNSET; g.n()],
            used: vec![false; g.n()],
        }
    }

    pub(crate) fn has_nonidentity_supported(&mut self, colors: &[u32]) -> bool {
        debug_assert_eq!(colors.len(), self.g.n());
        self.dfs(0, false, colors)
    }

    fn dfs(&mut self, v: usize, moved: bool, colors: &[u32]) -> bool {
        let n = self.g.n();
        if v == n {
            return moved;
        }
        for idx in 0..self.classes[v].len() {
            let w = self.classes[v][idx];
            if self.used[w] || colors[w] != colors[v] {
                continue;
            }
            let mut ok = true;
            for u in 0..v {
                if self.g.has_edge(u, v) != self.g.has_edge(self.image[u], w) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let hit = self.dfs(v + 1, moved || w != v, colors);
            self.used[w] = false;
            self.image[v] = UNSET;
            if hit {
                return true;
            }
        }
        false
    }
}

/// Orbit partition of the vertex set under `Aut(g)`, computed by pinned
/// existence searches instead of full group enumeration (no cap needed).
pub fn orbit_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut orbit_of = vec![UNSET; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if orbit_of[u] != UNSET {
            continue;
        }
        let id = blocks.len();
        orbit_of[u] = id;
        let mut block = vec![u];
        for v in (u + 1)..n {
            if orbit_of[v] != UNSET {
                continue;
            }
            let mut found = false;
            let mut search = MappingSearch::new(g, g);
            search.search(Some((u, v)), &mut |_| {
                found = true;
                false
            });
            if found {
                orbit_of[v] = id;
                block.push(v);
            }
        }
        blocks.push(block);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};

    #[test]
    fn known_group_orders() {
        assert_eq!(automorphisms(&complete_graph(4), 100).unwrap().order(), 24);
        assert_eq!(automorphisms(&cycle_graph(5), 100).unwrap().order(), 10);
        assert_eq!(automorphisms(&path_graph(4), 100).unwrap().order(), 2);
        assert_eq!(automorphisms(&Graph::empty(0), 100).unwrap().order(), 1);
        assert_eq!(automorphisms(&Graph::empty(1), 100).unwrap().order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let err = automorphisms(&complete_graph(5), 100).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { cap: 100, found: 100 }));
    }

    #[test]
    fn elements_are_lexicographic_and_form_a_group() {
        let group = automorphisms(&cycle_graph(4), 100).unwrap();
        assert_eq!(group.order(), 8);
        let mut sorted = group.elements().to_vec();
        sorted.sort();
        assert_eq!(sorted, group.elements());
        assert!(group.is_closed_group());
    }

    #[test]
    fn isomorphism_cases() {
        let p3 = path_graph(3);
        let p3_relabeled = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert!(is_isomorphic(&p3, &p3_relabeled));
        assert!(!is_isomorphic(&complete_graph(3), &p3));
        let two_k3 = crate::graph::disjoint_union(&complete_graph(3), &complete_graph(3));
        assert!(!is_isomorphic(&cycle_graph(6), &two_k3));
    }

    #[test]
    fn orbit_examples() {
        let c6 = automorphisms(&cycle_graph(6), 100).unwrap();
        assert_eq!(c6.orbits(), vec![vec![0, 1, 2, 3, 4, 5]]);
        let p4 = automorphisms(&path_graph(4), 100).unwrap();
        assert_eq!(p4.orbits(), vec![vec![0, 3], vec![1, 2]]);
        let star = automorphisms(&star_graph(3), 100).unwrap();
        assert_eq!(star.orbits(), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn orbit_partition_matches_group_orbits() {
        for g in [
            path_graph(4),
            cycle_graph(6),
            star_graph(3),
            complete_graph(4),
            crate::graph::disjoint_union(&complete_graph(2), &complete_graph(2)),
        ] {
            let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
            assert_eq!(orbit_partition(&g), group.orbits());
        }
    }

    #[test]
    fn orbit_blocks_are_group_invariant() {
        let g = star_graph(3);
        let group = automorphisms(&g, 100).unwrap();
        for block in group.orbits() {
            for f in group.elements() {
                let mut mapped: Vec<usize> = block.iter().map(|&v| f.apply(v)).collect();
                mapped.sort_unstable();
                assert_eq!(mapped, block);
            }
        }
    }

    #[test]
    fn stabilizer_cases() {
        let k3 = automorphisms(&complete_graph(3), 100).unwrap();
        let distinct = Coloring::new(vec![1, 2, 3], 3).unwrap();
        assert!(k3.stabilizer(&distinct).is_trivial());

        let c4 = automorphisms(&cycle_graph(4), 100).unwrap();
        let alt = Coloring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert_eq!(c4.stabilizer(&alt).order(), 4);

        let constant = Coloring::constant(3, 2);
        assert_eq!(k3.stabilizer(&constant), k3);
    }

    #[test]
    fn stabilizer_index_counts_equivalent_colorings() {
        // |orbit of c| = [Aut(G) : S_c]
        let g = cycle_graph(4);
        let group = automorphisms(&g, 100).unwrap();
        for colors in [vec![1, 2, 1, 2], vec![1, 1, 2, 2], vec![1, 2, 3, 1]] {
            let c = Coloring::new(colors, 3).unwrap();
            let stab = group.stabilizer(&c);
            let mut orbit: Vec<Coloring> =
                group.elements().iter().map(|f| c.permuted_by(f)).collect();
            orbit.sort_by(|a, b| a.colors().cmp(b.colors()));
            orbit.dedup();
            assert_eq!(orbit.len() * stab.order(), group.order());
        }
    }

    #[test]
    fn color_preserving_search_cases() {
        let p3 = path_graph(3);
        assert!(has_color_preserving_automorphism(
            &p3,
            &Coloring::constant(3, 1)
        ));
        let c = Coloring::new(vec![1, 2, 2], 2).unwrap();
        assert!(!has_color_preserving_automorphism(&p3, &c));
        let k3 = complete_graph(3);
        let c = Coloring::new(vec![1, 1, 2], 2).unwrap();
        assert!(has_color_preserving_automorphism(&k3, &c));
    }

    #[test]
    fn automorphisms_preserve_edges_and_match_complement() {
        for g in [path_graph(4), cycle_graph(5), star_graph(3)] {
            let group = automorphisms(&g, 1000).unwrap();
            for f in group.elements() {
                for u in 0..g.n() {
                    for v in 0..g.n() {
                        if u != v {
                            assert_eq!(g.has_edge(u, v), g.has_edge(f.apply(u), f.apply(v)));
                        }
                    }
                }
            }
            let cgroup = automorphisms(&g.complement(), 1000).unwrap();
            assert_eq!(group.elements(), cgroup.elements());
        }
    }
}
