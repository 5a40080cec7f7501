//! Label alphabets and the column-strict filling shared by every path family.

use symfunc_core::Composition;

/// Which labels an enumeration may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelSpec {
    /// Exactly `α_i` labels equal to `i`.
    Content(Composition),
    /// Any labels from `1..=N`.
    Alphabet(usize),
}

impl LabelSpec {
    /// Available count of each label value, index `v - 1` for value `v`.
    pub(crate) fn counts(&self, n: usize) -> Vec<usize> {
        match self {
            LabelSpec::Content(c) => c.parts().to_vec(),
            LabelSpec::Alphabet(max) => vec![n; *max],
        }
    }

    pub(crate) fn total(&self, n: usize) -> usize {
        match self {
            LabelSpec::Content(c) => c.size(),
            LabelSpec::Alphabet(_) => n,
        }
    }
}

/// Visits every label sequence of length `strict.len()` drawn from `counts`
/// such that `l[i] > l[i-1]` whenever `strict[i]`, in lexicographic order.
pub(crate) fn fill_labels(strict: &[bool], counts: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn go(i: usize, strict: &[bool], counts: &mut [usize], labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == strict.len() {
            visit(labels);
            return;
        }
        let low = if i > 0 && strict[i] { labels[i - 1] + 1 } else { 1 };
        for v in low..=counts.len() {
            if counts[v - 1] == 0 {
                continue;
            }
            counts[v - 1] -= 1;
            labels.push(v);
            go(i + 1, strict, counts, labels, visit);
            labels.pop();
            counts[v - 1] += 1;
        }
    }
    let mut labels = Vec::with_capacity(strict.len());
    go(0, strict, counts, &mut labels, visit);
}

/// Visits every `k`-subset of `items` in lexicographic order of positions.
pub(crate) fn for_each_subset(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            go(items, i + 1, k, cur, visit);
            cur.pop();
        }
    }
    go(items, 0, k, &mut Vec::with_capacity(k), visit);
}

/// Content of a label vector as a strong composition, after removing unused values.
pub(crate) fn packed_content(labels: &[usize]) -> Vec<usize> {
    let max = labels.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0; max];
    for &l in labels {
        counts[l - 1] += 1;
    }
    counts.retain(|&c| c > 0);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_runs_and_counts() {
        let mut seen = Vec::new();
        fill_labels(&[false, true], &mut [1, 1], &mut |l| seen.push(l.to_vec()));
        assert_eq!(seen, vec![vec![1, 2]]);
        seen.clear();
        fill_labels(&[false, false], &mut [1, 1], &mut |l| seen.push(l.to_vec()));
        assert_eq!(seen, vec![vec![1, 2], vec![2, 1]]);
        seen.clear();
        fill_labels(&[false, false], &mut [2, 2], &mut |l| seen.push(l.to_vec()));
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(&[2, 4, 5], 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![2, 4], vec![2, 5], vec![4, 5]]);
        let mut empty = 0;
        for_each_subset(&[1], 0, &mut |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
