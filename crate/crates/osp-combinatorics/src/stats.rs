//! inv, dinv, maj and minimaj, and the word τ behind minimaj.

use std::fmt;
use std::ops::Range;

use exact_algebra::{rat, Monomial, MultiPoly};
use symfunc_core::Composition;

use crate::osp::{enumerate_osp, OrderedMultisetPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Inv,
    Dinv,
    Maj,
    Minimaj,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [Statistic::Inv, Statistic::Dinv, Statistic::Maj, Statistic::Minimaj];

    pub fn of(self, pi: &OrderedMultisetPartition) -> usize {
        match self {
            Statistic::Inv => pi.inv(),
            Statistic::Dinv => pi.dinv(),
            Statistic::Maj => pi.maj(),
            Statistic::Minimaj => pi.minimaj(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistic::Inv => "inv",
            Statistic::Dinv => "dinv",
            Statistic::Maj => "maj",
            Statistic::Minimaj => "minimaj",
        })
    }
}

/// `Σ_{π ∈ OSP(α, k)} q^{stat(π)}`.
pub fn distribution(alpha: &Composition, k: usize, stat: Statistic) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for pi in enumerate_osp(alpha, k) {
        out.add_term(Monomial::qt(stat.of(&pi) as u32, 0), rat(1));
    }
    out
}

/// `Σ_{τ_i > τ_{i+1}} i`, positions 1-based.
pub fn major_index(word: &[usize]) -> usize {
    (1..word.len()).filter(|&i| word[i - 1] > word[i]).sum()
}

impl OrderedMultisetPartition {
    /// Pairs `a > b` with `a` in a block strictly left of `b`'s and `b` minimal in its block.
    pub fn inv(&self) -> usize {
        let blocks = self.blocks();
        (0..blocks.len())
            .map(|j| {
                let b = blocks[j][0];
                blocks[..j].iter().flatten().filter(|&&a| a > b).count()
            })
            .sum()
    }

    /// Primary triples `π^h_i > π^h_j` plus secondary triples `π^h_i < π^{h+1}_j`,
    /// `i < j`, with `π^h_i` the `h`-th smallest entry (from 0) of block `i`.
    pub fn dinv(&self) -> usize {
        let blocks = self.blocks();
        let mut count = 0;
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                for (h, &x) in blocks[i].iter().enumerate() {
                    count += usize::from(blocks[j].get(h).is_some_and(|&y| x > y));
                    count += usize::from(blocks[j].get(h + 1).is_some_and(|&y| x < y));
                }
            }
        }
        count
    }

    /// Blocks written decreasing; each descent contributes the number of block
    /// minima up to and including its left entry.
    pub fn maj(&self) -> usize {
        let sigma: Vec<(usize, bool)> = self
            .blocks()
            .iter()
            .flat_map(|b| b.iter().rev().enumerate().map(move |(i, &v)| (v, i + 1 == b.len())))
            .collect();
        let mut w = 0;
        let mut total = 0;
        for i in 0..sigma.len() {
            w += usize::from(sigma[i].1);
            if i + 1 < sigma.len() && sigma[i].0 > sigma[i + 1].0 {
                total += w;
            }
        }
        total
    }

    pub fn minimaj(&self) -> usize {
        self.minimaj_word().major_index()
    }

    pub fn minimaj_word(&self) -> MinimajWord {
        MinimajWord::new(self)
    }
}

/// The arrangement τ(π) that realizes minimaj, with its block spans and runs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimajWord {
    tau: Vec<usize>,
    /// Positions (0-based, half open) of each block of π in τ.
    spans: Vec<Range<usize>>,
    /// `r_0 = n > r_1 > ... > r_s = 0`.
    boundaries: Vec<usize>,
}

impl MinimajWord {
    /// The last block increasing; each earlier block cycled so that its largest
    /// entry not exceeding the first entry of the next (already arranged) block
    /// comes last, or increasing when there is no such entry.
    pub fn new(pi: &OrderedMultisetPartition) -> MinimajWord {
        let blocks = pi.blocks();
        let k = blocks.len();
        let mut arranged: Vec<Vec<usize>> = vec![Vec::new(); k];
        arranged[k - 1] = blocks[k - 1].clone();
        for i in (0..k - 1).rev() {
            let lead = arranged[i + 1][0];
            let b = &blocks[i];
            arranged[i] = match b.iter().rposition(|&v| v <= lead) {
                Some(p) => b[p + 1..].iter().chain(&b[..=p]).copied().collect(),
                None => b.clone(),
            };
        }
        let mut spans = Vec::with_capacity(k);
        let mut start = 0;
        for b in &arranged {
            spans.push(start..start + b.len());
            start += b.len();
        }
        let tau: Vec<usize> = arranged.concat();
        let n = tau.len();
        let mut boundaries = vec![n];
        boundaries.extend((1..n).rev().filter(|&i| tau[i - 1] > tau[i]));
        boundaries.push(0);
        MinimajWord { tau, spans, boundaries }
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn spans(&self) -> &[Range<usize>] {
        &self.spans
    }

    /// `r_0 > r_1 > ... > r_s`: run `i` occupies positions `r_{i+1}+1..=r_i` (1-based).
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Number of runs `s`.
    pub fn runs(&self) -> usize {
        self.boundaries.len() - 1
    }

    /// Descent positions, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.tau.len()).filter(|&i| self.tau[i - 1] > self.tau[i]).collect()
    }

    pub fn major_index(&self) -> usize {
        major_index(&self.tau)
    }

    /// Index of the block covering 0-based position `p`.
    pub fn block_at(&self, p: usize) -> usize {
        self.spans.iter().position(|s| s.contains(&p)).expect("position inside τ")
    }

    /// 1-based starting positions of the blocks lying inside run `i`,
    /// excluding the block ending at `r_i` when `i > 0` (it straddles into, or
    /// ends, the run to the left of run `i - 1`).
    pub fn full_blocks(&self, i: usize) -> Vec<usize> {
        let (lo, hi) = (self.boundaries[i + 1], self.boundaries[i]);
        (0..self.spans.len())
            .filter(|&b| {
                let s = &self.spans[b];
                s.start >= lo && s.end <= hi && !(i > 0 && s.end == hi)
            })
            .map(|b| self.spans[b].start + 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(s: &str) -> OrderedMultisetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(pi("15|23|4").inv(), 2);
        let w = pi("13|23|14|234").minimaj_word();
        assert_eq!(w.tau(), &[3, 1, 2, 3, 4, 1, 2, 3, 4]);
        assert_eq!(w.descents(), vec![1, 5]);
        assert_eq!(w.boundaries(), &[9, 5, 1, 0]);
        assert_eq!(pi("13|23|14|234").minimaj(), 6);
    }

    #[test]
    fn single_block_is_zero() {
        let p = pi("1234");
        assert_eq!(Statistic::ALL.map(|s| s.of(&p)), [0; 4]);
    }
}
