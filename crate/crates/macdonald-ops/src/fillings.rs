//! The filling formula for `H̃_μ`: a sum over all fillings of the diagram with
//! entries in `1..=n`, weighted by `q^inv t^maj`, tallied by content.

use std::collections::HashMap;

use exact_algebra::{rat, Monomial, MultiPoly, RatFunc};
use symfunc_core::{Basis, Partition, SymFunc};

use crate::cells::cells;

/// Which adjacent-row pairs attack each other, besides pairs in the same row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attack {
    /// The upper cell is strictly left of the lower one.
    UpperLeft,
    /// The upper cell is strictly right of the lower one.
    UpperRight,
}

/// Convention that passes the validation battery.
pub const ATTACK: Attack = Attack::UpperRight;

struct Shape {
    size: usize,
    /// Attacking pairs `(i, j)` with `i` before `j` in reading order.
    attacks: Vec<(usize, usize)>,
    /// `(cell, cell below, leg + 1, arm)` for every cell not in the bottom row.
    verticals: Vec<(usize, usize, i64, i64)>,
    max_maj: usize,
}

impl Shape {
    fn new(mu: &Partition, attack: Attack) -> Shape {
        let mut cs = cells(mu);
        // Reading order: rows top to bottom, left to right.
        cs.sort_by_key(|c| (std::cmp::Reverse(c.row), c.col));
        let pos = |row: usize, col: usize| cs.iter().position(|c| c.row == row && c.col == col);
        let mut attacks = Vec::new();
        for (i, u) in cs.iter().enumerate() {
            for (j, v) in cs.iter().enumerate().skip(i + 1) {
                let hit = if u.row == v.row {
                    true
                } else if u.row == v.row + 1 {
                    match attack {
                        Attack::UpperLeft => u.col < v.col,
                        Attack::UpperRight => u.col > v.col,
                    }
                } else {
                    false
                };
                if hit {
                    attacks.push((i, j));
                }
            }
        }
        let verticals: Vec<_> = cs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.row > 0)
            .map(|(i, c)| {
                let below = pos(c.row - 1, c.col).expect("cell below exists");
                (i, below, c.leg as i64 + 1, c.arm as i64)
            })
            .collect();
        let max_maj = verticals.iter().map(|v| v.2 as usize).sum();
        Shape { size: cs.len(), attacks, verticals, max_maj }
    }
}

/// Tallies of `(inv, maj)` for each content vector.
pub struct FillingTable {
    n: usize,
    width: usize,
    /// Keyed by content packed four bits per value.
    counts: HashMap<u64, Vec<i64>>,
    /// Set if some filling produced a negative inversion count.
    pub negative_inv: bool,
}

fn pack(content: &[usize]) -> u64 {
    content.iter().enumerate().fold(0, |k, (i, &c)| k | ((c as u64) << (4 * i)))
}

fn unpack(key: u64, n: usize) -> Vec<usize> {
    (0..n).map(|i| ((key >> (4 * i)) & 0xf) as usize).collect()
}

impl FillingTable {
    pub fn build(mu: &Partition, attack: Attack) -> FillingTable {
        let shape = Shape::new(mu, attack);
        let n = shape.size;
        assert!(n <= 15, "content packing holds at most 15 cells");
        let width = shape.max_maj + 1;
        let height = shape.attacks.len() + 1;
        let mut counts: HashMap<u64, Vec<i64>> = HashMap::new();
        let mut negative_inv = false;
        let mut sigma = vec![0usize; n];
        let unit: Vec<u64> = (0..n).map(|v| 1u64 << (4 * v)).collect();
        loop {
            let mut inv: i64 = shape.attacks.iter().filter(|&&(i, j)| sigma[i] > sigma[j]).count() as i64;
            let mut maj = 0i64;
            for &(u, below, leg1, arm) in &shape.verticals {
                if sigma[u] > sigma[below] {
                    maj += leg1;
                    inv -= arm;
                }
            }
            if inv < 0 {
                negative_inv = true;
            } else {
                let key: u64 = sigma.iter().map(|&v| unit[v]).sum();
                let slot = counts.entry(key).or_insert_with(|| vec![0; width * height]);
                slot[inv as usize * width + maj as usize] += 1;
            }
            // Odometer step.
            let mut i = 0;
            while i < n && sigma[i] == n - 1 {
                sigma[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            sigma[i] += 1;
        }
        FillingTable { n, width, counts, negative_inv }
    }

    fn poly(&self, counts: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(counts.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| {
            let (inv, maj) = (i / self.width, i % self.width);
            (Monomial::qt(inv as u32, maj as u32), rat(c))
        }))
    }

    /// First content vector whose weight differs from that of its sorted
    /// rearrangement, or `None` if the `n`-variable expansion is symmetric.
    pub fn asymmetric_content(&self) -> Option<Vec<usize>> {
        let mut keys: Vec<&u64> = self.counts.keys().collect();
        keys.sort_unstable();
        for &key in keys {
            let mut content = unpack(key, self.n);
            let original = content.clone();
            content.sort_unstable_by(|a, b| b.cmp(a));
            if self.counts.get(&pack(&content)) != self.counts.get(&key) {
                return Some(original);
            }
        }
        None
    }

    /// The monomial-basis expansion read off the dominant contents.
    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero(Basis::M, self.n);
        for lambda in Partition::all(self.n) {
            if let Some(c) = self.counts.get(&pack(lambda.parts())) {
                out.add_term(lambda, &RatFunc::from_poly(self.poly(c)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::MultiPoly;

    #[test]
    fn degree_two_by_hand() {
        let q = RatFunc::from_poly(MultiPoly::q());
        let t = RatFunc::from_poly(MultiPoly::t());
        let row = FillingTable::build(&Partition::row(2), ATTACK).to_symfunc();
        let col = FillingTable::build(&Partition::column(2), ATTACK).to_symfunc();
        let s2 = Partition::row(2);
        let s11 = Partition::column(2);
        let row = row.convert(Basis::S).unwrap();
        let col = col.convert(Basis::S).unwrap();
        assert_eq!(row.coeff(&s2), RatFunc::one());
        assert_eq!(row.coeff(&s11), q);
        assert_eq!(col.coeff(&s2), RatFunc::one());
        assert_eq!(col.coeff(&s11), t);
    }
}
