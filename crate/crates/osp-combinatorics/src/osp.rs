//! The partition type, enumeration and block notation.

use std::fmt;
use std::str::FromStr;

use symfunc_core::Composition;

use crate::OspError;

/// An ordered sequence of nonempty sets whose multiset union is `{i^{α_i}}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrderedMultisetPartition {
    /// Each block sorted increasing.
    blocks: Vec<Vec<usize>>,
}

impl OrderedMultisetPartition {
    /// Sorts each block; rejects empty blocks, zero and repeated entries, and
    /// contents that skip a value.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, OspError> {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() || b[0] == 0 || b.windows(2).any(|w| w[0] == w[1]) {
                return Err(OspError::Invalid(format!("block {b:?}")));
            }
        }
        let pi = OrderedMultisetPartition { blocks };
        if pi.content_counts().contains(&0) {
            return Err(OspError::Invalid(format!("{pi} skips a value")));
        }
        Ok(pi)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn content_counts(&self) -> Vec<usize> {
        let max = self.blocks.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &v in self.blocks.iter().flatten() {
            counts[v - 1] += 1;
        }
        counts
    }

    /// `α` with `α_i` the multiplicity of `i`.
    pub fn content(&self) -> Composition {
        Composition::new(self.content_counts()).expect("constructor rejects gaps")
    }

    /// Entries in block order, each block written increasing.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().flatten().copied()
    }
}

/// All of `OSP(α, k)` in lexicographic order of the block sequence.
pub fn enumerate_osp(alpha: &Composition, k: usize) -> Vec<OrderedMultisetPartition> {
    let parts = alpha.parts();
    let mut out = Vec::new();
    if k == 0 || parts.iter().any(|&a| a > k) {
        return out;
    }
    let mut blocks = vec![Vec::new(); k];
    place(parts, 0, 0, 0, &mut blocks, &mut out);
    out.sort();
    out
}

/// Puts the remaining copies of value `v + 1` into blocks `from..`, one per block.
fn place(
    parts: &[usize],
    v: usize,
    placed: usize,
    from: usize,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<OrderedMultisetPartition>,
) {
    if v == parts.len() {
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(OrderedMultisetPartition { blocks: blocks.clone() });
        }
        return;
    }
    if placed == parts[v] {
        place(parts, v + 1, 0, 0, blocks, out);
        return;
    }
    let k = blocks.len();
    let remaining = parts[v] - placed;
    for b in from..=k - remaining {
        blocks[b].push(v + 1);
        place(parts, v, placed + 1, b + 1, blocks, out);
        blocks[b].pop();
    }
}

impl fmt::Display for OrderedMultisetPartition {
    /// `13|23|14|234`; entries are comma separated once a value exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.entries().any(|v| v > 9) { "," } else { "" };
        let text: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)).collect();
        f.write_str(&text.join("|"))
    }
}

impl FromStr for OrderedMultisetPartition {
    type Err = OspError;

    fn from_str(s: &str) -> Result<Self, OspError> {
        let bad = || OspError::Parse(s.to_string());
        let blocks = s
            .trim()
            .split('|')
            .map(|block| {
                let block = block.trim();
                if block.contains(',') {
                    block.split(',').map(|v| v.trim().parse::<usize>().map_err(|_| bad())).collect()
                } else if !block.is_empty() && block.chars().all(|c| c.is_ascii_digit()) {
                    Ok(block.chars().map(|c| c as usize - '0' as usize).collect())
                } else {
                    Err(bad())
                }
            })
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        OrderedMultisetPartition::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notation_round_trip() {
        for s in ["13|23|14|234", "1", "2|1", "1,10|2,3,4,5,6,7,8,9"] {
            assert_eq!(s.parse::<OrderedMultisetPartition>().unwrap().to_string(), s);
        }
        assert!("11|2".parse::<OrderedMultisetPartition>().is_err());
        assert!("1||2".parse::<OrderedMultisetPartition>().is_err());
        assert!("2|3".parse::<OrderedMultisetPartition>().is_err());
    }
}
