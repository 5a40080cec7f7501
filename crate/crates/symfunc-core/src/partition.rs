//! Integer partitions and compositions.

use std::fmt;
use std::str::FromStr;

use exact_algebra::BigInt;

use crate::SymError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and wraps a sequence of parts; zeros are rejected.
    pub fn new(parts: Vec<usize>) -> Result<Partition, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Partition {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Partition {
        Partition(vec![1; n])
    }

    /// The hook `(a, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Partition {
        let mut v = vec![a];
        v.extend(std::iter::repeat_n(1, b));
        Partition(v)
    }

    /// `(2^m, 1^r)`.
    pub fn two_column(m: usize, r: usize) -> Partition {
        let mut v = vec![2; m];
        v.extend(std::iter::repeat_n(1, r));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        z
    }

    /// `(-1)^{n - ℓ(λ)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// True if `self` dominates `other` (equal sizes assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// Union of parts (the partition of the product `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>, SymError> {
    let bad = || SymError::Parse(s.to_string());
    let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect()
}

impl FromStr for Partition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s)?)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Partition {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition, SymError> {
        if parts.contains(&0) {
            return Err(SymError::Parse(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                go(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Partition(self.0.clone()))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let p4 = Partition::all(4);
        assert_eq!(p4.len(), 5);
        assert_eq!(p4[0], Partition::row(4));
        assert_eq!(p4[4], Partition::column(4));
        assert_eq!(Partition::all(8).len(), 22);
        assert_eq!(Composition::all(4).len(), 8);
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=8 {
            for p in Partition::all(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
        assert_eq!(Partition::hook(3, 2).conjugate(), Partition::new(vec![3, 1, 1]).unwrap());
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::column(2).z(), BigInt::from(2));
        assert_eq!(Partition::new(vec![2, 1]).unwrap().z(), BigInt::from(2));
        assert_eq!(Partition::column(3).z(), BigInt::from(6));
    }

    #[test]
    fn text_round_trip() {
        let p: Partition = "(3,1,1)".parse().unwrap();
        assert_eq!(p.to_string(), "(3,1,1)");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }
}
