//! Permutations of `{1, …, r}`.
//!
//! Stored 0-based internally; the public constructors and `Display` speak
//! 1-based cycle notation. Composition follows function composition:
//! `(π·ρ)(t) = π(ρ(t))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self { images: (0..r).collect() }
    }

    /// From 1-based images `[π(1), …, π(r)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        let mut out = Vec::with_capacity(r);
        for &x in images {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Self { images: out })
    }

    /// From 1-based disjoint cycles, e.g. `&[&[1, 2, 3]]` for `(1 2 3)`.
    pub fn from_cycles(r: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..r).collect();
        let mut seen = vec![false; r];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > r || seen[a - 1] {
                    return Err(Error::InvalidArgument(format!("bad cycle {cycle:?} in degree {r}")));
                }
                seen[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                images[a - 1] = b - 1;
            }
        }
        Ok(Self { images })
    }

    /// Adjacent transposition `s_i = (i, i+1)`, 1-based `i < r`.
    pub fn adjacent(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} undefined in degree {r}");
        let mut images: Vec<usize> = (0..r).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point; points past the degree are fixed.
    #[inline]
    pub fn apply0(&self, t: usize) -> usize {
        self.images.get(t).copied().unwrap_or(t)
    }

    /// 1-based image.
    pub fn apply(&self, t: usize) -> usize {
        self.apply0(t - 1) + 1
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`; the degrees are aligned by fixing extra points.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let r = self.degree().max(other.degree());
        Self { images: (0..r).map(|t| self.apply0(other.apply0(t))).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (t, &x) in self.images.iter().enumerate() {
            images[x] = t;
        }
        Self { images }
    }

    /// Embeds into a larger degree.
    pub fn extend(&self, r: usize) -> Permutation {
        assert!(r >= self.degree());
        Self { images: (0..r).map(|t| self.apply0(t)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(t, &x)| t == x)
    }

    pub fn inversions(&self) -> usize {
        let r = self.degree();
        (0..r).map(|i| (i + 1..r).filter(|&j| self.images[i] > self.images[j]).count()).sum()
    }

    /// `+1` or `−1`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lehmer code: `c_i = #{j > i : π(j) < π(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let r = self.degree();
        (0..r).map(|i| (i + 1..r).filter(|&j| self.images[j] < self.images[i]).count()).collect()
    }

    /// Rank in lexicographic order of image sequences, via the Lehmer code.
    pub fn rank(&self) -> usize {
        let r = self.degree();
        self.lehmer_code().iter().enumerate().fold(0, |acc, (i, &c)| acc * (r - i) + c)
    }

    pub fn unrank(r: usize, mut rank: usize) -> Permutation {
        let mut code = vec![0; r];
        for i in (0..r).rev() {
            let base = r - i;
            code[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..r).collect();
        let images = code.iter().map(|&c| pool.remove(c)).collect();
        Self { images }
    }

    /// All of `G(r)` in rank order.
    pub fn all(r: usize) -> Vec<Permutation> {
        (0..factorial(r)).map(|k| Self::unrank(r, k)).collect()
    }
}

pub fn factorial(r: usize) -> usize {
    (1..=r).product()
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        let mut seen = vec![false; r];
        let mut any = false;
        for start in 0..r {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut t = start;
            let mut first = true;
            while !seen[t] {
                seen[t] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", t + 1)?;
                first = false;
                t = self.images[t];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}
