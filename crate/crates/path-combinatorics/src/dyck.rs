//! Dyck paths, labeled Dyck paths and their statistics.
//!
//! Rows and columns are numbered from 1 in public interfaces, matching the usual
//! pictures; vectors are indexed from 0, so row `i` lives at index `i - 1`.

use std::fmt;
use std::str::FromStr;

use exact_algebra::{Monomial, Var};
use symfunc_core::Composition;

use crate::labels::{fill_labels, packed_content, LabelSpec};
use crate::PathError;

/// A Dyck path of order `n`, stored as its area vector: `a_i` is the number of
/// full squares in row `i` between the path and the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyckPath {
    a: Vec<usize>,
}

impl DyckPath {
    pub fn new(a: Vec<usize>) -> Result<DyckPath, PathError> {
        if a.first() != Some(&0) {
            return Err(PathError::InvalidPath(format!("area vector {a:?} must start with 0")));
        }
        if let Some(w) = a.windows(2).find(|w| w[1] > w[0] + 1) {
            return Err(PathError::InvalidPath(format!("area vector {a:?} jumps from {} to {}", w[0], w[1])));
        }
        Ok(DyckPath { a })
    }

    /// All Dyck paths of order `n` in lexicographic order of area vectors.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
            if cur.len() == n {
                out.push(DyckPath { a: cur.clone() });
                return;
            }
            let top = cur.last().map_or(0, |&v| v + 1);
            for v in 0..=top {
                cur.push(v);
                go(n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    /// The path whose north step in row `i` sits at x-coordinate `x[i-1]`.
    pub fn from_x_positions(x: &[usize]) -> Result<DyckPath, PathError> {
        if x.windows(2).any(|w| w[1] < w[0]) {
            return Err(PathError::InvalidPath(format!("x positions {x:?} decrease")));
        }
        if let Some(i) = (0..x.len()).find(|&i| x[i] > i) {
            return Err(PathError::InvalidPath(format!("row {} crosses the diagonal", i + 1)));
        }
        DyckPath::new(x.iter().enumerate().map(|(i, &xi)| i - xi).collect())
    }

    /// Parses a word in `N` and `E`.
    pub fn from_word(word: &str) -> Result<DyckPath, PathError> {
        let mut x = Vec::new();
        let mut east = 0;
        for ch in word.chars() {
            match ch {
                'N' => x.push(east),
                'E' => east += 1,
                _ => return Err(PathError::Parse(word.to_string())),
            }
        }
        if east != x.len() {
            return Err(PathError::InvalidPath(format!("{word} does not end on the diagonal")));
        }
        DyckPath::from_x_positions(&x)
    }

    /// The `N`/`E` word.
    pub fn word(&self) -> String {
        let mut w = String::new();
        let x = self.x_positions();
        let mut east = 0;
        for &xi in &x {
            while east < xi {
                w.push('E');
                east += 1;
            }
            w.push('N');
        }
        while east < self.order() {
            w.push('E');
            east += 1;
        }
        w
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    pub fn area_vector(&self) -> &[usize] {
        &self.a
    }

    pub fn area(&self) -> usize {
        self.a.iter().sum()
    }

    /// x-coordinate of the north step in each row.
    pub fn x_positions(&self) -> Vec<usize> {
        self.a.iter().enumerate().map(|(i, &ai)| i - ai).collect()
    }

    /// True at index `i` when row `i+1` continues the vertical run of row `i`.
    pub fn continues(&self) -> Vec<bool> {
        (0..self.order()).map(|i| i > 0 && self.a[i] == self.a[i - 1] + 1).collect()
    }

    /// Double rises: rows `i ≥ 2` with `a_i > a_{i-1}`.
    pub fn rises(&self) -> Vec<usize> {
        (2..=self.order()).filter(|&i| self.a[i - 1] > self.a[i - 2]).collect()
    }

    /// Height of the east step in each column.
    pub fn column_heights(&self) -> Vec<usize> {
        let x = self.x_positions();
        (1..=self.order()).map(|j| x.iter().filter(|&&xi| xi < j).count()).collect()
    }

    /// `c_j`: full squares between the path and the diagonal in column `j`.
    pub fn column_areas(&self) -> Vec<usize> {
        self.column_heights().iter().enumerate().map(|(j, &y)| y - (j + 1)).collect()
    }

    /// Double falls: columns `j` whose east step is followed by another east step.
    pub fn falls(&self) -> Vec<usize> {
        let y = self.column_heights();
        (1..self.order()).filter(|&j| y[j] == y[j - 1]).collect()
    }

    /// Rows whose north step is immediately followed by an east step.
    pub fn peaks(&self) -> Vec<usize> {
        let n = self.order();
        (1..=n).filter(|&i| i == n || self.a[i] <= self.a[i - 1]).collect()
    }

    /// Rows `i ≥ 2` whose north step follows an east step.
    pub fn valleys(&self) -> Vec<usize> {
        (2..=self.order()).filter(|&i| self.a[i - 1] <= self.a[i - 2]).collect()
    }

    /// Lengths of the maximal vertical runs, bottom to top.
    pub fn vertical_runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        for c in self.continues() {
            if c {
                *runs.last_mut().expect("row 1 starts a run") += 1;
            } else {
                runs.push(1);
            }
        }
        runs
    }

    /// Rows with `a_i = 0`.
    pub fn returns(&self) -> Vec<usize> {
        (1..=self.order()).filter(|&i| self.a[i - 1] == 0).collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// `d_i`: pairs `j > i` with `a_i = a_j, ℓ_i < ℓ_j` or `a_i = a_j + 1, ℓ_i > ℓ_j`.
pub(crate) fn d_vector(a: &[usize], l: &[usize]) -> Vec<usize> {
    (0..a.len())
        .map(|i| {
            (i + 1..a.len()).filter(|&j| (a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j])).count()
        })
        .collect()
}

/// Contractible valleys: rows `i ≥ 2` with `a_i < a_{i-1}`, or `a_i = a_{i-1}` and `ℓ_i > ℓ_{i-1}`.
pub(crate) fn val_rows(a: &[usize], l: &[usize]) -> Vec<usize> {
    (2..=a.len()).filter(|&i| a[i - 1] < a[i - 2] || (a[i - 1] == a[i - 2] && l[i - 1] > l[i - 2])).collect()
}

pub(crate) fn x_monomial(labels: &[usize]) -> Monomial {
    labels.iter().fold(Monomial::ONE, |m, &l| m.mul(&Monomial::var(Var::X(l))))
}

/// A Dyck path with positive labels increasing up each vertical run.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LabeledPath {
    path: DyckPath,
    labels: Vec<usize>,
}

/// The statistics of a labeled Dyck path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    pub area: usize,
    pub dinv: usize,
    pub d: Vec<usize>,
    pub val: Vec<usize>,
    pub rise: Vec<usize>,
    pub fall: Vec<usize>,
    pub column_areas: Vec<usize>,
}

impl LabeledPath {
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<LabeledPath, PathError> {
        if labels.len() != path.order() {
            return Err(PathError::InvalidLabels(format!(
                "{} labels for a path of order {}",
                labels.len(),
                path.order()
            )));
        }
        if labels.contains(&0) {
            return Err(PathError::InvalidLabels("labels must be positive".into()));
        }
        let cont = path.continues();
        if let Some(i) = (1..labels.len()).find(|&i| cont[i] && labels[i] <= labels[i - 1]) {
            return Err(PathError::InvalidLabels(format!(
                "labels {labels:?} do not increase up the column at row {}",
                i + 1
            )));
        }
        Ok(LabeledPath { path, labels })
    }

    /// All labeled paths of order `n` with the given labels, ordered by area
    /// vector and then by label vector.
    pub fn all(n: usize, spec: &LabelSpec) -> Vec<LabeledPath> {
        let mut out = Vec::new();
        if spec.total(n) != n {
            return out;
        }
        for path in DyckPath::all(n) {
            let strict = path.continues();
            let mut counts = spec.counts(n);
            fill_labels(&strict, &mut counts, &mut |l| {
                out.push(LabeledPath { path: path.clone(), labels: l.to_vec() });
            });
        }
        out
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.path.order()
    }

    pub fn area(&self) -> usize {
        self.path.area()
    }

    pub fn d_vector(&self) -> Vec<usize> {
        d_vector(self.path.area_vector(), &self.labels)
    }

    pub fn dinv(&self) -> usize {
        self.d_vector().iter().sum()
    }

    /// `Val(P)`, the contractible valleys.
    pub fn valleys(&self) -> Vec<usize> {
        val_rows(self.path.area_vector(), &self.labels)
    }

    /// `x^P`.
    pub fn x_monomial(&self) -> Monomial {
        x_monomial(&self.labels)
    }

    /// Content after dropping unused label values.
    pub fn content(&self) -> Composition {
        Composition::new(packed_content(&self.labels)).expect("positive parts")
    }

    pub fn stats(&self) -> PathStats {
        let d = self.d_vector();
        PathStats {
            area: self.area(),
            dinv: d.iter().sum(),
            d,
            val: self.valleys(),
            rise: self.path.rises(),
            fall: self.path.falls(),
            column_areas: self.path.column_areas(),
        }
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, name: &str, v: &[usize]) -> fmt::Result {
    write!(f, "{name}=[")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// The `a`, `l` and `dec` lists of a path record.
pub(crate) type Record = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Splits `a=[..];l=[..];dec=[..]` into its three lists.
pub(crate) fn parse_record(s: &str) -> Result<Record, PathError> {
    let bad = || PathError::Parse(s.to_string());
    let mut fields = [None, None, None];
    for part in s.trim().split(';') {
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let slot = match key.trim() {
            "a" => 0,
            "l" => 1,
            "dec" => 2,
            _ => return Err(bad()),
        };
        let inner = value.trim().strip_prefix('[').and_then(|v| v.strip_suffix(']')).ok_or_else(bad)?;
        let list = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?
        };
        fields[slot] = Some(list);
    }
    let [a, l, dec] = fields;
    Ok((a.ok_or_else(bad)?, l.ok_or_else(bad)?, dec.unwrap_or_default()))
}

impl fmt::Display for LabeledPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "a", self.path.area_vector())?;
        f.write_str(";")?;
        write_list(f, "l", &self.labels)?;
        f.write_str(";dec=[]")
    }
}

impl FromStr for LabeledPath {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, l, dec) = parse_record(s)?;
        if !dec.is_empty() {
            return Err(PathError::Parse(s.to_string()));
        }
        LabeledPath::new(DyckPath::new(a)?, l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| DyckPath::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn words_round_trip() {
        for p in DyckPath::all(5) {
            assert_eq!(DyckPath::from_word(&p.word()).unwrap(), p);
        }
        assert!(DyckPath::from_word("ENNE").is_err());
    }

    #[test]
    fn parking_functions() {
        for n in 1..=5 {
            let count = LabeledPath::all(n, &LabelSpec::Content(Composition::new(vec![1; n]).unwrap())).len();
            assert_eq!(count, (n + 1).pow(n as u32 - 1));
        }
    }

    #[test]
    fn column_areas_sum_to_area() {
        for p in DyckPath::all(6) {
            assert_eq!(p.column_areas().iter().sum::<usize>(), p.area());
            assert_eq!(p.falls().len(), p.rises().len());
        }
    }
}
