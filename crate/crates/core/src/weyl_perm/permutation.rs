use std::fmt;

use crate::error::{Error, Result};
use crate::N_LINES;

/// A bijection of `{0, ..., 26}`, stored as its image list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: [u8; N_LINES],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            images: std::array::from_fn(|i| i as u8),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.len() != N_LINES {
            return Err(Error::DimensionMismatch {
                expected: N_LINES,
                found: images.len(),
            });
        }
        let mut seen = [false; N_LINES];
        let mut out = [0u8; N_LINES];
        for (i, &x) in images.iter().enumerate() {
            if x >= N_LINES || seen[x] {
                return Err(Error::UnsupportedInput(format!("not a bijection of 0..27: {images:?}")));
            }
            seen[x] = true;
            out[i] = x as u8;
        }
        Ok(Permutation { images: out })
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity();
        for cycle in cycles {
            let mut images: Vec<usize> = (0..N_LINES).collect();
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= N_LINES || b >= N_LINES {
                    return Err(Error::UnsupportedInput(format!("cycle point out of range: {cycle:?}")));
                }
                images[a] = b;
            }
            p = p.then(&Permutation::from_images(&images)?);
        }
        Ok(p)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: std::array::from_fn(|i| other.images[self.images[i] as usize]),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; N_LINES];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `g^{-1} self g`, i.e. `x -> g(self(g^{-1}(x)))`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        (0..N_LINES).find(|&i| self.apply(i) != i)
    }

    pub fn fixed_points(&self) -> usize {
        (0..N_LINES).filter(|&i| self.apply(i) == i).count()
    }

    /// Cycle lengths (fixed points included) sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; N_LINES];
        let mut lens = Vec::new();
        for start in 0..N_LINES {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> usize {
        self.cycle_type()
            .into_iter()
            .fold(1, num_integer::lcm)
    }

    pub fn pow(&self, mut e: usize) -> Permutation {
        let mut base = *self;
        let mut acc = Permutation::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}
