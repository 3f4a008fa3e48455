use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::table::Element;

/// A bijection on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn new(image: Vec<Element>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            image: image.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n as u8).collect(),
        }
    }

    /// The transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: Element, b: Element) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a, b);
        p
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other
                .image
                .iter()
                .map(|&x| self.image[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { image: inv }
    }

    /// Order of this permutation as a group element.
    pub fn cycle_order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

const CACHED_ORDERS: usize = 8;

static ALL: [OnceLock<Vec<Permutation>>; CACHED_ORDERS + 1] =
    [const { OnceLock::new() }; CACHED_ORDERS + 1];

/// Every permutation of `0..n` in lexicographic order of images, generated
/// once per order and shared.
pub fn all_permutations(n: usize) -> &'static [Permutation] {
    assert!(
        (1..=CACHED_ORDERS).contains(&n),
        "permutation scans are limited to orders 1..={CACHED_ORDERS}"
    );
    ALL[n].get_or_init(|| lexicographic(n))
}

fn lexicographic(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Permutation {
        image: current.clone(),
    }];
    // Standard next-permutation step.
    while let Some(i) = (0..n.saturating_sub(1))
        .rev()
        .find(|&i| current[i] < current[i + 1])
    {
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(Permutation {
            image: current.clone(),
        });
    }
    out
}
