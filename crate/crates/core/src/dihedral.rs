//! Rotations and reflections of the cycle `C_n`, with reflection labels.

use crate::error::{Error, Result};
use crate::group::AutGroup;
use crate::perm::Permutation;

/// One symmetry of the regular `n`-gon with vertices `0..n-1` in cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DihedralKind {
    /// `v -> v + r (mod n)`.
    Rotation(usize),
    /// Reflection through the diagonal passing through vertex `i`
    /// (`v -> 2i - v`). For even `n` it also passes through `i + n/2`.
    VertexReflection(usize),
    /// Reflection through the bisector of edge `{i, i+1}` (`v -> 2i + 1 - v`).
    /// Labeled only for even `n`; for odd `n` every such axis already
    /// passes through a vertex and carries the vertex label instead.
    EdgeReflection(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralElement {
    pub kind: DihedralKind,
    pub perm: Permutation,
}

impl DihedralElement {
    pub fn is_rotation(&self) -> bool {
        matches!(self.kind, DihedralKind::Rotation(_))
    }

    pub fn is_nonidentity_rotation(&self) -> bool {
        matches!(self.kind, DihedralKind::Rotation(r) if r != 0)
    }

    pub fn is_reflection(&self) -> bool {
        !self.is_rotation()
    }
}

fn rotation_perm(n: usize, r: usize) -> Permutation {
    Permutation::from_images((0..n).map(|v| (v + r) % n).collect()).unwrap()
}

/// Reflection `v -> a - v (mod n)`.
fn reflection_perm(n: usize, a: usize) -> Permutation {
    Permutation::from_images((0..n).map(|v| (a + n - v % n) % n).collect()).unwrap()
}

/// All `2n` symmetries of `C_n` (`n >= 3`), each labeled: `n` rotations,
/// then the reflections. For odd `n` all `n` reflections pass through a
/// vertex; for even `n` there are `n/2` vertex-type and `n/2` edge-type.
pub fn dihedral_labeled(n: usize) -> Result<Vec<DihedralElement>> {
    if n < 3 {
        return Err(Error::InvalidArg(format!(
            "dihedral symmetries need n >= 3, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(2 * n);
    for r in 0..n {
        out.push(DihedralElement {
            kind: DihedralKind::Rotation(r),
            perm: rotation_perm(n, r),
        });
    }
    if n % 2 == 1 {
        // v -> 2i - v fixes exactly the vertex i.
        for i in 0..n {
            out.push(DihedralElement {
                kind: DihedralKind::VertexReflection(i),
                perm: reflection_perm(n, (2 * i) % n),
            });
        }
    } else {
        // v -> 2i - v fixes i and i + n/2; i and i + n/2 give the same map.
        for i in 0..n / 2 {
            out.push(DihedralElement {
                kind: DihedralKind::VertexReflection(i),
                perm: reflection_perm(n, (2 * i) % n),
            });
        }
        // v -> 2i + 1 - v swaps i with i+1.
        for i in 0..n / 2 {
            out.push(DihedralElement {
                kind: DihedralKind::EdgeReflection(i),
                perm: reflection_perm(n, (2 * i + 1) % n),
            });
        }
    }
    Ok(out)
}

/// The dihedral group of `C_n` as a plain permutation group.
pub fn dihedral_elements(n: usize) -> Result<AutGroup> {
    let labeled = dihedral_labeled(n)?;
    Ok(AutGroup::from_elements(
        n,
        labeled.into_iter().map(|e| e.perm).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;
    use crate::group::automorphisms;

    fn count_kinds(elems: &[DihedralElement]) -> (usize, usize, usize) {
        let rot = elems.iter().filter(|e| e.is_rotation()).count();
        let vr = elems
            .iter()
            .filter(|e| matches!(e.kind, DihedralKind::VertexReflection(_)))
            .count();
        let er = elems
            .iter()
            .filter(|e| matches!(e.kind, DihedralKind::EdgeReflection(_)))
            .count();
        (rot, vr, er)
    }

    #[test]
    fn labeled_counts() {
        let d3 = dihedral_labeled(3).unwrap();
        assert_eq!(d3.len(), 6);
        assert_eq!(count_kinds(&d3), (3, 3, 0));

        let d4 = dihedral_labeled(4).unwrap();
        assert_eq!(d4.len(), 8);
        assert_eq!(count_kinds(&d4), (4, 2, 2));

        assert!(dihedral_labeled(2).is_err());
    }

    #[test]
    fn reflections_are_distinct_involutions() {
        for n in 3..=8 {
            let elems = dihedral_labeled(n).unwrap();
            let mut perms: Vec<_> = elems.iter().map(|e| e.perm.clone()).collect();
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), 2 * n, "n = {n}");
            for e in elems.iter().filter(|e| e.is_reflection()) {
                assert!(e.perm.compose(&e.perm).is_identity());
            }
        }
    }

    #[test]
    fn matches_cycle_automorphisms() {
        for n in 3..=8 {
            let dih = dihedral_elements(n).unwrap();
            let aut = automorphisms(&cycle_graph(n), 1000).unwrap();
            let mut a = aut.elements().to_vec();
            let mut d = dih.elements().to_vec();
            a.sort();
            d.sort();
            assert_eq!(a, d, "n = {n}");
        }
    }

    /// Closure of a generating set inside the symmetric group.
    fn closure(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(n)];
        loop {
            let mut grew = false;
            let snapshot = elems.clone();
            for f in &snapshot {
                for g in gens {
                    let h = f.compose(g);
                    if !elems.contains(&h) {
                        elems.push(h);
                        grew = true;
                    }
                }
            }
            if !grew {
                return elems;
            }
        }
    }

    /// Every subgroup of a dihedral group is generated by at most two
    /// elements, so closing all singletons and pairs enumerates them all.
    #[test]
    fn subgroups_couple_reflections_with_rotations() {
        for n in 3..=8 {
            let elems = dihedral_labeled(n).unwrap();
            let perms: Vec<_> = elems.iter().map(|e| e.perm.clone()).collect();
            let is_reflection = |p: &Permutation| {
                elems
                    .iter()
                    .find(|e| &e.perm == p)
                    .map(|e| e.is_reflection())
                    .unwrap_or(false)
            };
            let mut subgroups: Vec<Vec<Permutation>> = vec![closure(n, &[])];
            for i in 0..perms.len() {
                subgroups.push(closure(n, &perms[i..=i]));
                for j in (i + 1)..perms.len() {
                    subgroups.push(closure(n, &[perms[i].clone(), perms[j].clone()]));
                }
            }
            for sub in &subgroups {
                let reflections = sub.iter().filter(|p| is_reflection(p)).count();
                let nonid_rotations = sub
                    .iter()
                    .filter(|p| !is_reflection(p) && !p.is_identity())
                    .count();
                if reflections >= 2 {
                    assert!(nonid_rotations >= 1, "n = {n}");
                }
                if nonid_rotations >= 1 && reflections >= 1 {
                    assert!(reflections >= 2, "n = {n}");
                }
            }
        }
    }
}
