//! Permutations of `{1..m}` and the rational group algebra `Q[S_m]`.
//!
//! Storage is zero-based one-line notation: `images[i]` is the image of `i`.
//! Everything user-facing (cycle strings, one-line lists, JSON) is one-based.
//! Composition follows `(p ∘ q)(i) = p(q(i))`.

mod algebra;
mod notation;
mod split;

pub use algebra::GroupAlgebraElement;
pub use notation::{parse_cycles, parse_index_list, parse_one_line};
pub use split::{in_u, split_cycle_left, split_cycles, CycleSplit, SplitSide};

use std::fmt;

use crate::error::{Result, TciError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    // ---- Constructors ----

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Builds from zero-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || seen[v] {
                return Err(TciError::InvalidPermutation(format!(
                    "zero-based images {images:?} are not a bijection of 0..{m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from one-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(TciError::InvalidPermutation(
                "one-line notation is one-based; found 0".into(),
            ));
        }
        Self::from_images(images.iter().map(|&v| v - 1).collect())
    }

    /// Product of (possibly overlapping) zero-based cycles, rightmost applied first.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Self::identity(m);
        for c in cycles {
            p = p.compose(&Self::cycle(m, c)?)?;
        }
        Ok(p)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` (zero-based, distinct entries).
    pub fn cycle(m: usize, c: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut seen = vec![false; m];
        for (t, &a) in c.iter().enumerate() {
            if a >= m {
                return Err(TciError::IndexOutOfRange {
                    index: a + 1,
                    max: m,
                });
            }
            if seen[a] {
                return Err(TciError::InvalidPermutation(format!(
                    "cycle repeats the point {}",
                    a + 1
                )));
            }
            seen[a] = true;
            images[a] = c[(t + 1) % c.len()];
        }
        Ok(Permutation { images })
    }

    pub fn transposition(m: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            Self::cycle(m, &[i])
        } else {
            Self::cycle(m, &[i, j])
        }
    }

    /// All of `S_m` in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// All permutations of `{0..m}` that move only points of `support`.
    pub fn all_on(m: usize, support: &[usize]) -> Vec<Permutation> {
        Self::all(support.len())
            .into_iter()
            .map(|q| {
                let mut images: Vec<usize> = (0..m).collect();
                for (t, &a) in support.iter().enumerate() {
                    images[a] = support[q.images[t]];
                }
                Permutation { images }
            })
            .collect()
    }

    // ---- Accessors ----

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of a zero-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Zero-based cycles including fixed points; each starts at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.images[i];
            }
            out.push(c);
        }
        out
    }

    pub fn nontrivial_cycles(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// `+1` or `-1`, computed as `(-1)^(m - #cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    // ---- Group operations ----

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(TciError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then_unchecked(other))
    }

    fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g * &(self * &g.inverse())
    }

    /// The same permutation acting on `{0..m}` with `m >= degree`.
    pub fn extend(&self, m: usize) -> Permutation {
        self.shifted(0, m)
    }

    /// Acts on `offset..offset+degree` inside `S_m`, fixing everything else.
    pub fn shifted(&self, offset: usize, m: usize) -> Permutation {
        assert!(offset + self.degree() <= m, "shifted permutation does not fit");
        let mut images: Vec<usize> = (0..m).collect();
        for (i, &v) in self.images.iter().enumerate() {
            images[offset + i] = offset + v;
        }
        Permutation { images }
    }

    /// Direct sum `self ⊕ other` acting on `0..deg(self)+deg(other)`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.degree() + other.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|v| v + self.degree()));
        debug_assert_eq!(images.len(), m);
        Permutation { images }
    }

    /// Restriction to `0..m`; every point of `m..degree` must be fixed.
    pub fn restrict(&self, m: usize) -> Result<Permutation> {
        if (m..self.degree()).any(|i| self.images[i] != i) || self.images[..m].iter().any(|&v| v >= m) {
            return Err(TciError::InvalidPermutation(format!(
                "{self} does not preserve 1..{m}"
            )));
        }
        Ok(Permutation {
            images: self.images[..m].to_vec(),
        })
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.then_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation, one-based, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.nontrivial_cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
