//! Permutations on the points `1..=degree`.
//!
//! Products are read left to right: `a.compose(&b)` applies `a` first and
//! then `b`, so the point `x` goes to `b(a(x))`. Every product in the crate,
//! Tarski factorisations included, uses this one convention.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Images = SmallVec<[u8; 16]>;

/// A bijection of `{1, ..., degree}` stored as a zero-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= 255, "degree {degree} exceeds 255");
        Self {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its one-based image list, `images[i - 1] = i^p`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > 255 {
            return Err(Error::Degree(n));
        }
        let mut seen = vec![false; n];
        let mut table = Images::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Parse {
                    message: "image list is not a bijection".into(),
                    token: img.to_string(),
                });
            }
            seen[img - 1] = true;
            table.push((img - 1) as u8);
        }
        Ok(Self { images: table })
    }

    pub(crate) fn from_table(images: Images) -> Self {
        debug_assert!(is_bijection(&images));
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// Zero-based image table.
    pub fn table(&self) -> &[u8] {
        &self.images
    }

    #[inline]
    pub(crate) fn apply0(&self, point: u8) -> u8 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Product "apply `self`, then `other`".
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked product, same convention as [`Permutation::compose`].
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv: Images = SmallVec::from_elem(0, self.degree());
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `self^-1 * x * self`, the conjugate of `x` by `self`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        // x^g maps i^g to (i^x)^g
        let mut out: Images = SmallVec::from_elem(0, self.degree());
        for i in 0..self.degree() {
            out[self.images[i] as usize] = self.images[x.images[i] as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen: SmallVec<[bool; 64]> = SmallVec::from_elem(false, self.degree());
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Smallest zero-based point moved by the permutation.
    pub(crate) fn least_moved0(&self) -> Option<u8> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i != v as usize)
            .map(|(i, _)| i as u8)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, sorted by that point. Points are one-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses a product of disjoint cycles such as `(1,2,3)(4,5)` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 || degree > 255 {
            return Err(Error::Degree(degree));
        }
        let err = |message: &str, token: &str| Error::Parse {
            message: message.to_string(),
            token: token.to_string(),
        };
        if text == "()" {
            return Ok(Permutation::identity(degree));
        }
        if text.is_empty() {
            return Err(err("empty permutation", ""));
        }
        let mut images: Images = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        let mut rest = text;
        while !rest.is_empty() {
            let Some(body_start) = rest.strip_prefix('(') else {
                return Err(err("expected `(`", rest));
            };
            let Some(close) = body_start.find(')') else {
                return Err(err("unclosed cycle", rest));
            };
            let body = &body_start[..close];
            if body.contains('(') {
                return Err(err("nested parenthesis", &rest[..close + 2]));
            }
            let mut points = Vec::new();
            for tok in body.split(',') {
                let p: usize = tok
                    .parse()
                    .ok()
                    .filter(|_| tok.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| err("expected a positive integer", tok))?;
                if p == 0 || p > degree {
                    return Err(err("point out of range", tok));
                }
                if used[p - 1] {
                    return Err(err("repeated point", tok));
                }
                used[p - 1] = true;
                points.push(p - 1);
            }
            if points.len() < 2 {
                return Err(err("cycle needs at least two points", &rest[..close + 2]));
            }
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u8;
            }
            rest = &body_start[close + 1..];
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation: cycles sorted by least point, each rotated
    /// to start there; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
