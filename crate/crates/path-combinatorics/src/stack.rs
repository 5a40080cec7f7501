//! Labeled paths under leaning stacks, and the bijections φ and ψ from decorated paths.
//!
//! A leaning stack of `n` boxes is recorded by the rows whose box sits
//! diagonally above the box below it (row 1 always counts). Box `r` lies in
//! column `(r - 1) - #{vertical rows ≤ r}`, numbering columns from 0.

use std::fmt;

use exact_algebra::Monomial;
use symfunc_core::Composition;

use crate::decorated::{DecoratedPath, Decoration};
use crate::dyck::{parse_record, write_list, x_monomial, DyckPath, LabeledPath};
use crate::labels::{fill_labels, for_each_subset, packed_content, LabelSpec};
use crate::PathError;

/// A leaning stack together with an unlabeled path weakly left of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StackShape {
    diag: Vec<bool>,
    x: Vec<usize>,
}

impl StackShape {
    /// `diag_rows` lists the diagonal rows (1-based, including row 1); `x[i]` is
    /// the column of the north step in row `i + 1`.
    pub fn new(diag_rows: &[usize], x: Vec<usize>) -> Result<StackShape, PathError> {
        let n = x.len();
        if n == 0 {
            return Err(PathError::InvalidPath("empty stack".into()));
        }
        if diag_rows.iter().any(|&r| r == 0 || r > n) || !diag_rows.contains(&1) {
            return Err(PathError::InvalidPath(format!(
                "diagonal rows {diag_rows:?} must contain 1 and lie in 1..={n}"
            )));
        }
        let diag = (1..=n).map(|r| diag_rows.contains(&r)).collect();
        StackShape::checked(diag, x)
    }

    fn checked(diag: Vec<bool>, x: Vec<usize>) -> Result<StackShape, PathError> {
        let shape = StackShape { diag, x };
        let cols = shape.box_columns();
        if shape.x[0] != 0 || shape.x.windows(2).any(|w| w[1] < w[0]) {
            return Err(PathError::InvalidPath(format!("x positions {:?} are not a path", shape.x)));
        }
        if let Some(i) = (0..shape.x.len()).find(|&i| shape.x[i] > cols[i]) {
            return Err(PathError::InvalidPath(format!("row {} passes right of the stack", i + 1)));
        }
        Ok(shape)
    }

    /// Every shape with `n` rows and `k` diagonal steps: stacks in lexicographic
    /// order of their diagonal rows, then paths by x positions.
    pub fn all(n: usize, k: usize) -> Vec<StackShape> {
        let mut out = Vec::new();
        if n == 0 || k >= n {
            return out;
        }
        let rows: Vec<usize> = (2..=n).collect();
        for_each_subset(&rows, k, &mut |chosen| {
            let diag: Vec<bool> = (1..=n).map(|r| r == 1 || chosen.contains(&r)).collect();
            let cols = box_columns(&diag);
            let mut x = vec![0; n];
            paths_under(&cols, 1, &mut x, &mut |x| {
                out.push(StackShape { diag: diag.clone(), x: x.to_vec() });
            });
        });
        out
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    /// Number of diagonal steps between boxes.
    pub fn k(&self) -> usize {
        self.diag.iter().filter(|&&d| d).count() - 1
    }

    pub fn x_positions(&self) -> &[usize] {
        &self.x
    }

    pub fn is_diag(&self, row: usize) -> bool {
        self.diag[row - 1]
    }

    pub fn diag_rows(&self) -> Vec<usize> {
        (1..=self.order()).filter(|&r| self.diag[r - 1]).collect()
    }

    pub fn vertical_rows(&self) -> Vec<usize> {
        (1..=self.order()).filter(|&r| !self.diag[r - 1]).collect()
    }

    /// Column of the stack box in each row.
    pub fn box_columns(&self) -> Vec<usize> {
        box_columns(&self.diag)
    }

    /// `a_i`: squares between the path and the stack in each row.
    pub fn a(&self) -> Vec<usize> {
        self.box_columns().iter().zip(&self.x).map(|(c, x)| c - x).collect()
    }

    /// `h_i`: squares strictly below the square right of row `i`'s north step and
    /// weakly above the bottom stack box of that column.
    pub fn h(&self) -> Vec<usize> {
        let cols = self.box_columns();
        (0..self.order())
            .map(|i| {
                let first = cols.iter().position(|&c| c == self.x[i]).expect("column under the stack");
                i - first
            })
            .collect()
    }

    pub fn area(&self) -> usize {
        self.a().iter().sum()
    }

    /// True at index `i` when rows `i` and `i+1` share a column of the path.
    pub fn continues(&self) -> Vec<bool> {
        (0..self.order()).map(|i| i > 0 && self.x[i] == self.x[i - 1]).collect()
    }
}

fn box_columns(diag: &[bool]) -> Vec<usize> {
    let mut vertical = 0;
    (0..diag.len())
        .map(|i| {
            if !diag[i] {
                vertical += 1;
            }
            i - vertical
        })
        .collect()
}

fn paths_under(cols: &[usize], i: usize, x: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == cols.len() {
        visit(x);
        return;
    }
    for v in x[i - 1]..=cols[i] {
        x[i] = v;
        paths_under(cols, i + 1, x, visit);
    }
    x[i] = 0;
}

/// A labeled path in `LD(S)` for a leaning stack `S`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StackPath {
    shape: StackShape,
    labels: Vec<usize>,
}

impl StackPath {
    pub fn new(shape: StackShape, labels: Vec<usize>) -> Result<StackPath, PathError> {
        if labels.len() != shape.order() || labels.contains(&0) {
            return Err(PathError::InvalidLabels(format!("{labels:?} for {} rows", shape.order())));
        }
        let cont = shape.continues();
        if let Some(i) = (1..labels.len()).find(|&i| cont[i] && labels[i] <= labels[i - 1]) {
            return Err(PathError::InvalidLabels(format!(
                "labels {labels:?} do not increase up the column at row {}",
                i + 1
            )));
        }
        Ok(StackPath { shape, labels })
    }

    /// All of `LD^Stack_{n,k}` with the given labels.
    pub fn all(n: usize, k: usize, spec: &LabelSpec) -> Vec<StackPath> {
        let mut out = Vec::new();
        if spec.total(n) != n {
            return out;
        }
        for shape in StackShape::all(n, k) {
            out.extend(StackPath::labelings(&shape, spec));
        }
        out
    }

    /// Every labeling of a fixed shape.
    pub fn labelings(shape: &StackShape, spec: &LabelSpec) -> Vec<StackPath> {
        let mut out = Vec::new();
        let n = shape.order();
        if spec.total(n) != n {
            return out;
        }
        let mut counts = spec.counts(n);
        fill_labels(&shape.continues(), &mut counts, &mut |l| {
            out.push(StackPath { shape: shape.clone(), labels: l.to_vec() });
        });
        out
    }

    pub fn shape(&self) -> &StackShape {
        &self.shape
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.shape.order()
    }

    pub fn k(&self) -> usize {
        self.shape.k()
    }

    pub fn a(&self) -> Vec<usize> {
        self.shape.a()
    }

    pub fn h(&self) -> Vec<usize> {
        self.shape.h()
    }

    pub fn area(&self) -> usize {
        self.shape.area()
    }

    /// Diagonal inversions counted from diagonal rows, minus the vertical rows.
    pub fn wdinv(&self) -> i64 {
        let a = self.a();
        let l = &self.labels;
        let n = self.order();
        let pairs = (0..n)
            .filter(|&i| self.shape.diag[i])
            .map(|i| (i + 1..n).filter(|&j| (a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j])).count())
            .sum::<usize>();
        pairs as i64 - (n - self.k() - 1) as i64
    }

    /// Diagonal inversions measured by heights.
    pub fn hdinv(&self) -> usize {
        let h = self.h();
        let l = &self.labels;
        let n = self.order();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| (h[i] == h[j] && l[i] < l[j]) || (h[i] == h[j] + 1 && l[i] > l[j])).count())
            .sum()
    }

    /// Labels read from the largest height down, right to left within a height.
    pub fn reading_word(&self) -> Vec<usize> {
        let h = self.h();
        let x = self.shape.x_positions();
        let mut rows: Vec<usize> = (0..self.order()).collect();
        rows.sort_by(|&i, &j| h[j].cmp(&h[i]).then(x[j].cmp(&x[i])));
        rows.into_iter().map(|i| self.labels[i]).collect()
    }

    pub fn x_monomial(&self) -> Monomial {
        x_monomial(&self.labels)
    }

    pub fn content(&self) -> Composition {
        Composition::new(packed_content(&self.labels)).expect("positive parts")
    }

    /// Parses `a=[..];l=[..];dec=[..]` where `a` is measured from the stack and
    /// `dec` lists the vertical rows.
    pub fn parse(s: &str) -> Result<StackPath, PathError> {
        let (a, l, vertical) = parse_record(s)?;
        let n = a.len();
        if vertical.contains(&1) {
            return Err(PathError::Parse(s.to_string()));
        }
        let diag: Vec<bool> = (1..=n).map(|r| !vertical.contains(&r)).collect();
        let cols = box_columns(&diag);
        let x = cols
            .iter()
            .zip(&a)
            .map(|(&c, &ai)| c.checked_sub(ai).ok_or_else(|| PathError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        StackPath::new(StackShape::checked(diag, x)?, l)
    }
}

impl fmt::Display for StackPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "a", &self.a())?;
        f.write_str(";")?;
        write_list(f, "l", &self.labels)?;
        f.write_str(";")?;
        write_list(f, "dec", &self.shape.vertical_rows())
    }
}

fn expect_kind(p: &DecoratedPath, kind: Decoration) -> Result<(), PathError> {
    if p.kind() == kind {
        Ok(())
    } else {
        Err(PathError::IllegalDecoration { kind: p.kind(), index: 0 })
    }
}

/// φ: for each decorated column `j`, delete the east step of column `j+1` and
/// make the stack box of row `j+1` vertical.
pub fn phi(p: &DecoratedPath) -> Result<StackPath, PathError> {
    expect_kind(p, Decoration::Fall)?;
    let falls = p.set();
    let n = p.path().order();
    let diag: Vec<bool> = (1..=n).map(|r| r == 1 || !falls.contains(&(r - 1))).collect();
    let x: Vec<usize> =
        p.path().path().x_positions().iter().map(|&xi| xi - falls.iter().filter(|&&j| j < xi).count()).collect();
    StackPath::new(StackShape::checked(diag, x)?, p.path().labels().to_vec())
}

/// Inverse of [`phi`]: every vertical box in row `r` restores the east step of
/// column `r` directly after the one of column `r - 1`.
pub fn phi_inverse(s: &StackPath) -> Result<DecoratedPath, PathError> {
    let falls: Vec<usize> = s.shape.vertical_rows().iter().map(|r| r - 1).collect();
    let kept = s.shape.diag_rows();
    let x: Vec<usize> = s
        .shape
        .x_positions()
        .iter()
        .map(|&xi| {
            if xi == 0 {
                return 0;
            }
            let mut c = kept[xi - 1];
            while falls.contains(&c) {
                c += 1;
            }
            c
        })
        .collect();
    let path = LabeledPath::new(DyckPath::from_x_positions(&x)?, s.labels.clone())?;
    DecoratedPath::new(path, Decoration::Fall, falls)
}

/// ψ: for each decorated valley, delete the east step before its north step and
/// make that row's stack box vertical.
pub fn psi(p: &DecoratedPath) -> Result<StackPath, PathError> {
    expect_kind(p, Decoration::Val)?;
    let vals = p.set();
    let n = p.path().order();
    let diag: Vec<bool> = (1..=n).map(|r| !vals.contains(&r)).collect();
    let x: Vec<usize> = p
        .path()
        .path()
        .x_positions()
        .iter()
        .enumerate()
        .map(|(i, &xi)| xi - vals.iter().filter(|&&v| v <= i + 1).count())
        .collect();
    StackPath::new(StackShape::checked(diag, x)?, p.path().labels().to_vec())
}

/// Inverse of [`psi`]: an east step goes back in front of every vertical row.
pub fn psi_inverse(s: &StackPath) -> Result<DecoratedPath, PathError> {
    let vals = s.shape.vertical_rows();
    let x: Vec<usize> = s
        .shape
        .x_positions()
        .iter()
        .enumerate()
        .map(|(i, &xi)| xi + vals.iter().filter(|&&v| v <= i + 1).count())
        .collect();
    let path = LabeledPath::new(DyckPath::from_x_positions(&x)?, s.labels.clone())?;
    DecoratedPath::new(path, Decoration::Val, vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box_stack() {
        let p = StackPath::new(StackShape::new(&[1], vec![0]).unwrap(), vec![1]).unwrap();
        assert_eq!((p.area(), p.hdinv(), p.wdinv()), (0, 0, 0));
        assert_eq!(p.reading_word(), vec![1]);
    }

    #[test]
    fn shapes_with_all_boxes_diagonal_are_dyck_paths() {
        for n in 1..=6 {
            assert_eq!(StackShape::all(n, n - 1).len(), DyckPath::all(n).len());
        }
    }
}
