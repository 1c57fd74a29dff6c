//! Exact arithmetic on permutations of `{1..n}`.
//!
//! Points are 1-based in every textual format and 0-based in memory. The
//! composition convention is fixed once for the whole crate: `p.compose(&q)`
//! applies `q` first, so the result maps `x` to `p(q(x))`. Lehmer-code
//! ranking gives each permutation a dense index in `0..n!`, which is what
//! the Cayley-graph modules use as vertex ids.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest degree whose factorial fits in `usize` on 64-bit targets.
pub const MAX_RANK_DEGREE: usize = 20;

/// `n!` for `n <= MAX_RANK_DEGREE`.
///
/// Panics beyond that bound; ranks would overflow.
pub fn factorial(n: usize) -> usize {
    assert!(
        n <= MAX_RANK_DEGREE,
        "factorial({n}) does not fit in usize"
    );
    (1..=n).product()
}

/// Sign of a permutation under the parity homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a product: parities combine like xor.
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A permutation of `{1..n}` stored as a 0-based image table:
/// `images[i]` is the image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity of degree `n` (`n >= 1`).
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1, "permutations have degree at least 1");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, checking that it is
    /// a bijection on `0..n`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "empty image table; degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {n}",
                    x + 1
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from a 1-based image list, e.g. `[3, 1, 2]`
    /// meaning `1→3, 2→1, 3→2`.
    pub fn from_one_based(images: &[usize]) -> Result<Permutation> {
        let shifted: Result<Vec<usize>> = images
            .iter()
            .map(|&x| {
                x.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation("points are 1-based; found 0".into())
                })
            })
            .collect();
        Permutation::from_images(shifted?)
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// The 0-based image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Functional composition: the result maps `x` to `self(other(x))`
    /// (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Conjugation `self ∘ x ∘ self⁻¹`.
    ///
    /// If `x` is the transposition `(i, j)` the result is the transposition
    /// `(self(i), self(j))`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        if self.degree() != x.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: x.degree(),
            });
        }
        // (g x g⁻¹)(g(i)) = g(x(i)), so the table can be filled in one pass.
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[self.images[i]] = self.images[x.images[i]];
        }
        Ok(Permutation { images })
    }

    /// Lexicographic rank in `0..n!` via the Lehmer code.
    ///
    /// Panics if the degree exceeds [`MAX_RANK_DEGREE`].
    pub fn rank(&self) -> usize {
        let n = self.degree();
        assert!(
            n <= MAX_RANK_DEGREE,
            "rank overflows usize beyond degree {MAX_RANK_DEGREE}"
        );
        let mut r = 0;
        for i in 0..n {
            let smaller_after = (i + 1..n)
                .filter(|&j| self.images[j] < self.images[i])
                .count();
            r += smaller_after * factorial(n - 1 - i);
        }
        r
    }

    /// Inverse of [`Permutation::rank`]: the permutation of degree `n` with
    /// the given lexicographic rank.
    pub fn unrank(rank: usize, n: usize) -> Result<Permutation> {
        if n == 0 || n > MAX_RANK_DEGREE {
            return Err(Error::UnsupportedDegree {
                n,
                reason: format!("ranking supports degrees 1..={MAX_RANK_DEGREE}"),
            });
        }
        if rank >= factorial(n) {
            return Err(Error::RankOutOfRange { rank, degree: n });
        }
        let mut available: Vec<usize> = (0..n).collect();
        let mut r = rank;
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let f = factorial(n - 1 - i);
            images.push(available.remove(r / f));
            r %= f;
        }
        Ok(Permutation { images })
    }

    /// Parity of the permutation (even iff it is a product of an even
    /// number of transpositions), computed from the inversion count.
    pub fn parity(&self) -> Parity {
        let n = self.degree();
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[j] < self.images[i] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// All `n!` permutations of degree `n` in rank order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        assert!((1..=MAX_RANK_DEGREE).contains(&n));
        (0..factorial(n)).map(move |r| Permutation::unrank(r, n).expect("rank in range"))
    }

    /// Parses either a 1-based image list (`"3 1 2"`) or disjoint cycle
    /// notation (`"(1 3 2)"`, `"(1 2)(3 4)"`, `"()"` for the identity).
    /// The degree must be supplied because cycle notation omits fixed points.
    pub fn parse(text: &str, n: usize) -> Result<Permutation> {
        if n == 0 {
            return Err(Error::UnsupportedDegree {
                n,
                reason: "degree must be at least 1".into(),
            });
        }
        let trimmed = text.trim();
        if trimmed.starts_with('(') {
            Self::parse_cycles(trimmed, n)
        } else {
            let images: Vec<usize> = trimmed
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point {tok:?}"))
                    })
                })
                .collect::<Result<_>>()?;
            if images.len() != n {
                return Err(Error::InvalidPermutation(format!(
                    "expected {n} images, found {}",
                    images.len()
                )));
            }
            Permutation::from_one_based(&images)
        }
    }

    fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = text;
        while !rest.is_empty() {
            let rest_trimmed = rest.trim_start();
            if !rest_trimmed.starts_with('(') {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in cycle notation, found {rest_trimmed:?}"
                )));
            }
            let close = rest_trimmed.find(')').ok_or_else(|| {
                Error::InvalidPermutation("unclosed cycle".into())
            })?;
            let body = &rest_trimmed[1..close];
            rest = &rest_trimmed[close + 1..];
            let cycle: Vec<usize> = body
                .split_whitespace()
                .map(|tok| {
                    let p: usize = tok.parse().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point {tok:?}"))
                    })?;
                    if p == 0 || p > n {
                        return Err(Error::InvalidPermutation(format!(
                            "point {p} out of range 1..={n}"
                        )));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<_>>()?;
            for &p in &cycle {
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears in two cycles",
                        p + 1
                    )));
                }
                used[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = rest.trim_start();
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// One-line 1-based image list, e.g. `3 1 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

/// Product of permutations with the crate's convention: `a * b` applies `b`
/// first. Panics on degree mismatch; use [`Permutation::compose`] where the
/// degrees are not guaranteed equal.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

/// An unordered pair of distinct points, normalized to `a < b` (0-based).
/// As a permutation it is an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    /// Builds a transposition from 0-based points, normalizing the order.
    pub fn new(a: usize, b: usize) -> Result<Transposition> {
        if a == b {
            return Err(Error::InvalidPermutation(format!(
                "transposition needs two distinct points, got ({}, {})",
                a + 1,
                b + 1
            )));
        }
        Ok(Transposition {
            a: a.min(b),
            b: a.max(b),
        })
    }

    /// Builds a transposition from 1-based points.
    pub fn from_one_based(a: usize, b: usize) -> Result<Transposition> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidPermutation(
                "points are 1-based; found 0".into(),
            ));
        }
        Transposition::new(a - 1, b - 1)
    }

    /// Smaller 0-based point.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Larger 0-based point.
    pub fn b(&self) -> usize {
        self.b
    }

    /// The pair as 1-based points `(a, b)` with `a < b`.
    pub fn one_based(&self) -> (usize, usize) {
        (self.a + 1, self.b + 1)
    }

    /// Image of `x` under the swap.
    pub fn apply(&self, x: usize) -> usize {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    /// The transposition as a permutation of degree `n`.
    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if self.b >= n {
            return Err(Error::InvalidPermutation(format!(
                "transposition {self} does not fit degree {n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(self.a, self.b);
        Ok(Permutation { images })
    }

    /// The transposition `(g(a), g(b))` obtained by mapping both points.
    pub fn mapped(&self, g: &Permutation) -> Result<Transposition> {
        if self.b >= g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.b + 1,
                right: g.degree(),
            });
        }
        Transposition::new(g.apply(self.a), g.apply(self.b))
    }
}

impl fmt::Display for Transposition {
    /// Cycle notation with 1-based points, e.g. `(1 3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a + 1, self.b + 1)
    }
}
