//! Permutations on `{1..degree}` stored as 0-based image tables.
//!
//! Text notation is 1-based disjoint cycle notation, e.g. `"(1,2,3)(4,5)"`,
//! with `"()"` denoting the identity. Composition is "apply left, then
//! right" throughout the crate.

use crate::error::{Error, Result};
use std::fmt;

/// Points are stored 0-based in a `u16`, capping the degree at 65535.
pub type Point = u16;

/// Largest supported degree (image tables are `u16`-valued).
pub const MAX_DEGREE: usize = u16::MAX as usize;

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree });
    }
    Ok(())
}

/// A permutation of `{0..degree-1}` (displayed 1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[Point]>,
}

impl Permutation {
    /// The identity permutation.
    ///
    /// # Panics
    /// If `degree` is 0 or exceeds [`MAX_DEGREE`].
    pub fn identity(degree: usize) -> Self {
        check_degree(degree).expect("identity: degree out of range");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, validating that it
    /// is a bijection.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        check_degree(images.len())?;
        let mut seen = vec![false; images.len()];
        for &img in &images {
            let i = img as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::ParsePermutation {
                    msg: "image table is not a bijection".into(),
                });
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[Point] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    #[inline]
    pub(crate) fn img(&self, p: Point) -> Point {
        self.images[p as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &q)| i == q as usize)
    }

    /// Smallest 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &q)| i != q as usize)
            .map(|(i, _)| i)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_fast(other))
    }

    /// `self` then `other`; callers must guarantee equal degrees.
    #[inline]
    pub(crate) fn compose_fast(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&q| other.images[q as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &q) in self.images.iter().enumerate() {
            images[q as usize] = i as u16;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `other⁻¹ · self · other` — the conjugate of `self` under `other`
    /// ("apply other⁻¹, then self, then other").
    pub(crate) fn conjugate_by(&self, other: &Permutation, other_inv: &Permutation) -> Permutation {
        other_inv.compose_fast(self).compose_fast(other)
    }

    /// Least `k ≥ 1` with `self^k = identity`, the lcm of the cycle lengths.
    ///
    /// # Panics
    /// If the order exceeds `u128` — impossible for elements of groups this
    /// crate can otherwise handle, since element orders divide group orders.
    pub fn order(&self) -> u128 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u128 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = lcm_u128(ord, len).expect("element order exceeds u128");
        }
        ord
    }

    /// `self` raised to the `e`-th power by repeated squaring.
    pub fn pow(&self, mut e: u128) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_fast(&base);
            }
            base = base.compose_fast(&base);
            e >>= 1;
        }
        acc
    }

    /// Parses 1-based disjoint cycle notation over `{1..degree}`.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        check_degree(degree)?;
        let bad = |msg: &str| Error::ParsePermutation { msg: msg.into() };
        let mut images: Vec<Point> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        let mut any_cycle = false;
        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(bad(&format!("expected '(' but found {c:?}"))),
            }
            any_cycle = true;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                    chars.next();
                }
                match chars.peek() {
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let mut n: usize = 0;
                        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                            n = n * 10 + chars.next().unwrap() as usize - '0' as usize;
                            if n > MAX_DEGREE {
                                return Err(bad("point out of range"));
                            }
                        }
                        if n == 0 || n > degree {
                            return Err(bad(&format!("point {n} out of range 1..={degree}")));
                        }
                        if used[n - 1] {
                            return Err(bad(&format!("point {n} appears twice")));
                        }
                        used[n - 1] = true;
                        cycle.push(n - 1);
                        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                            chars.next();
                        }
                        if chars.peek() == Some(&',') {
                            chars.next();
                        }
                    }
                    Some(c) => return Err(bad(&format!("unexpected character {c:?}"))),
                    None => return Err(bad("unterminated cycle")),
                }
            }
            for w in cycle.windows(2) {
                images[w[0]] = w[1] as u16;
            }
            if cycle.len() > 1 {
                images[*cycle.last().unwrap()] = cycle[0] as u16;
            }
        }
        if !any_cycle {
            return Err(bad("empty input (use \"()\" for the identity)"));
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycles, 1-based, smallest point first in and across cycles;
    /// `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

fn lcm_u128(a: u128, b: u128) -> Option<u128> {
    (a / gcd_u128(a, b)).checked_mul(b)
}

/// Parses the generator file format: a `degree N` header line followed by
/// one permutation in cycle notation per non-empty line. A file with no
/// permutation lines describes the trivial group on `N` points.
pub fn parse_generator_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::GeneratorFile {
        msg: "empty file".into(),
    })?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| Error::GeneratorFile {
            msg: format!("first line must be \"degree N\", found {header:?}"),
        })?;
    check_degree(degree)?;
    let mut gens = Vec::new();
    for line in lines {
        gens.push(
            Permutation::parse(line, degree).map_err(|e| Error::GeneratorFile {
                msg: format!("bad generator line {line:?}: {e}"),
            })?,
        );
    }
    Ok((degree, gens))
}

/// Ascending list of primes dividing `n`; empty for `n = 1`.
pub fn prime_divisors(n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d: u128 = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d as u64);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(u64::try_from(m).expect("prime divisor exceeds u64"));
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut q: u128 = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        q *= p;
    }
    q
}
