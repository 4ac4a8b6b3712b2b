//! Vertex colorings with colors `1..=k`.

use crate::perm::Permutation;

/// A total assignment of colors `1..=k` to vertices `0..n-1`.
/// Not every color has to be used.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Builds a coloring, checking every entry lies in `1..=k`.
    pub fn new(colors: Vec<u32>, k: u32) -> Option<Coloring> {
        if colors.iter().all(|&c| c >= 1 && c <= k) {
            Some(Coloring { colors, k })
        } else {
            None
        }
    }

    pub fn constant(n: usize, k: u32) -> Coloring {
        assert!(k >= 1);
        Coloring {
            colors: vec![1; n],
            k,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Whether this coloring supports `f`, i.e. `c(f(v)) = c(v)` for all `v`.
    pub fn supports(&self, f: &Permutation) -> bool {
        assert_eq!(self.colors.len(), f.len());
        supports_raw(&self.colors, f)
    }

    /// The equivalent coloring moved by `f`: `c'(f(v)) = c(v)`.
    pub fn permuted_by(&self, f: &Permutation) -> Coloring {
        let mut colors = vec![0; self.colors.len()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[f.apply(v)] = c;
        }
        Coloring { colors, k: self.k }
    }
}

#[inline]
pub(crate) fn supports_raw(colors: &[u32], f: &Permutation) -> bool {
    colors
        .iter()
        .enumerate()
        .all(|(v, &c)| colors[f.apply(v)] == c)
}

/// Iterates all `k^n` colorings of `n` vertices in odometer order
/// (vertex `n-1` runs fastest), calling `visit` on each.
#[cfg(test)]
pub(crate) fn for_each_coloring(n: usize, k: u32, mut visit: impl FnMut(&[u32])) {
    assert!(k >= 1);
    let mut colors = vec![1u32; n];
    loop {
        visit(&colors);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if colors[pos] < k {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
        }
        colors[pos + 1..].fill(1);
    }
}

/// Decodes coloring index `idx` (base-`k` odometer order) into `colors`.
pub(crate) fn decode_coloring(mut idx: u64, k: u32, colors: &mut [u32]) {
    for slot in colors.iter_mut().rev() {
        *slot = (idx % k as u64) as u32 + 1;
        idx /= k as u64;
    }
}

/// Advances `colors` to the next coloring in odometer order.
/// Returns false when the iteration wraps.
pub(crate) fn next_coloring(colors: &mut [u32], k: u32) -> bool {
    let n = colors.len();
    let mut pos = n;
    loop {
        if pos == 0 {
            return false;
        }
        pos -= 1;
        if colors[pos] < k {
            colors[pos] += 1;
            break;
        }
        colors[pos] = 1;
    }
    colors[pos + 1..].fill(1);
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_range() {
        assert!(Coloring::new(vec![1, 2, 3], 3).is_some());
        assert!(Coloring::new(vec![0, 1], 2).is_none());
        assert!(Coloring::new(vec![1, 4], 3).is_none());
    }

    #[test]
    fn supports_basic_cases() {
        let rot = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let rot2 = rot.compose(&rot);
        let c = Coloring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert!(c.supports(&rot2));
        assert!(!c.supports(&rot));
        // constant coloring supports everything
        let constant = Coloring::constant(4, 2);
        assert!(constant.supports(&rot));
        // all-distinct coloring supports only the identity
        let distinct = Coloring::new(vec![1, 2, 3, 4], 4).unwrap();
        assert!(!distinct.supports(&rot));
        assert!(distinct.supports(&Permutation::identity(4)));
    }

    #[test]
    fn odometer_enumerates_all() {
        let mut seen = Vec::new();
        for_each_coloring(2, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![1, 1]);
        assert_eq!(seen[1], vec![1, 2]);
        assert_eq!(seen[8], vec![3, 3]);
        // decode agrees with iteration order
        let mut buf = vec![0u32; 2];
        for (i, c) in seen.iter().enumerate() {
            decode_coloring(i as u64, 3, &mut buf);
            assert_eq!(&buf, c);
        }
    }
}
