//! Densely labeled Dyck paths and the bijection θ from stack paths.
//!
//! A square is addressed by the lattice point `(x, y)` at its northwest corner;
//! it lies weakly above the diagonal when `y - 1 ≥ x`. The squares whose corner
//! lies on the path are labeled by sets: north squares (reached by a north step)
//! and east squares (reached by an east step).

use std::fmt;

use exact_algebra::Monomial;
use symfunc_core::Composition;

use crate::dyck::{x_monomial, DyckPath};
use crate::labels::{packed_content, LabelSpec};
use crate::stack::{StackPath, StackShape};
use crate::PathError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DenseSquare {
    pub x: usize,
    pub y: usize,
    pub north: bool,
    pub labels: Vec<usize>,
}

impl DenseSquare {
    /// Full squares between this square and the diagonal.
    pub fn area(&self) -> usize {
        self.y - 1 - self.x
    }
}

/// A Dyck path of order `k + 1` with set labels on its corner squares.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePath {
    path: DyckPath,
    squares: Vec<DenseSquare>,
}

/// Labelable squares of `d` in path order, as `(x, y, north)`.
fn slots(d: &DyckPath) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    let (mut x, mut y) = (0, 0);
    for ch in d.word().chars() {
        if ch == 'N' {
            y += 1;
            out.push((x, y, true));
        } else {
            x += 1;
            if y > x {
                out.push((x, y, false));
            }
        }
    }
    out
}

impl DensePath {
    /// `labels[i]` labels the `i`-th labelable square in path order.
    pub fn new(path: DyckPath, labels: Vec<Vec<usize>>) -> Result<DensePath, PathError> {
        let sl = slots(&path);
        if sl.len() != labels.len() {
            return Err(PathError::InvalidLabels(format!("{} label sets for {} squares", labels.len(), sl.len())));
        }
        let squares: Vec<DenseSquare> =
            sl.into_iter().zip(labels).map(|((x, y, north), labels)| DenseSquare { x, y, north, labels }).collect();
        for (i, sq) in squares.iter().enumerate() {
            if sq.labels.contains(&0) || sq.labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(PathError::InvalidLabels(format!("{:?} is not a set of positive labels", sq.labels)));
            }
            if sq.north && sq.labels.is_empty() {
                return Err(PathError::InvalidLabels(format!("north square ({}, {}) is empty", sq.x, sq.y)));
            }
            if i > 0 && sq.north && squares[i - 1].x == sq.x {
                let below = squares[i - 1].labels.last().unwrap_or(&0);
                if sq.labels[0] <= *below {
                    return Err(PathError::InvalidLabels(format!("squares at x = {} are not increasing", sq.x)));
                }
            }
        }
        Ok(DensePath { path, squares })
    }

    /// All of `LD^Dense_{n,k}` with the given labels.
    pub fn all(n: usize, k: usize, spec: &LabelSpec) -> Vec<DensePath> {
        let mut out = Vec::new();
        if spec.total(n) != n || k >= n {
            return out;
        }
        for d in DyckPath::all(k + 1) {
            let sl = slots(&d);
            let mut counts = spec.counts(n);
            let mut sets: Vec<Vec<usize>> = Vec::with_capacity(sl.len());
            fill_sets(&sl, 0, n, &mut counts, &mut sets, &mut |sets| {
                out.push(DensePath {
                    path: d.clone(),
                    squares: sl
                        .iter()
                        .zip(sets)
                        .map(|(&(x, y, north), l)| DenseSquare { x, y, north, labels: l.clone() })
                        .collect(),
                });
            });
        }
        out
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn squares(&self) -> &[DenseSquare] {
        &self.squares
    }

    /// Number of label entries.
    pub fn size(&self) -> usize {
        self.squares.iter().map(|s| s.labels.len()).sum()
    }

    pub fn area(&self) -> usize {
        self.squares.iter().map(|s| s.area() * s.labels.len()).sum()
    }

    /// Pairs `(r, s)` with `r` the smallest entry of a north square lying
    /// strictly west of `s`'s square, with `r < s` at equal area or `r > s` one
    /// area higher; minus the number of entries in east squares.
    ///
    /// East squares never supply `r`: their entries come from vertical rows of
    /// the stack, which do not start diagonal inversions there.
    pub fn wdinv(&self) -> i64 {
        let mut pairs = 0i64;
        for sr in self.squares.iter().filter(|s| s.north) {
            let Some(&r) = sr.labels.first() else { continue };
            for ss in self.squares.iter().filter(|s| s.x > sr.x) {
                for &s in &ss.labels {
                    if (r < s && sr.area() == ss.area()) || (r > s && sr.area() == ss.area() + 1) {
                        pairs += 1;
                    }
                }
            }
        }
        let east: usize = self.squares.iter().filter(|s| !s.north).map(|s| s.labels.len()).sum();
        pairs - east as i64
    }

    pub fn x_monomial(&self) -> Monomial {
        x_monomial(&self.all_labels())
    }

    pub fn content(&self) -> Composition {
        Composition::new(packed_content(&self.all_labels())).expect("positive parts")
    }

    fn all_labels(&self) -> Vec<usize> {
        self.squares.iter().flat_map(|s| s.labels.iter().copied()).collect()
    }
}

fn fill_sets(
    sl: &[(usize, usize, bool)],
    i: usize,
    remaining: usize,
    counts: &mut [usize],
    sets: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if i == sl.len() {
        if remaining == 0 {
            visit(sets);
        }
        return;
    }
    let north_after = sl[i + 1..].iter().filter(|s| s.2).count();
    let (x, _, north) = sl[i];
    let low = match sets.last() {
        Some(prev) if north && i > 0 && sl[i - 1].0 == x => prev.last().map_or(1, |v| v + 1),
        _ => 1,
    };
    sets.push(Vec::new());
    grow_set(sl, i, low, remaining, north_after, counts, sets, visit);
    sets.pop();
}

#[allow(clippy::too_many_arguments)]
fn grow_set(
    sl: &[(usize, usize, bool)],
    i: usize,
    low: usize,
    remaining: usize,
    north_after: usize,
    counts: &mut [usize],
    sets: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let cur_len = sets.last().expect("open set").len();
    if !(sl[i].2 && cur_len == 0) && remaining >= north_after {
        fill_sets(sl, i + 1, remaining, counts, sets, visit);
    }
    if remaining == 0 {
        return;
    }
    for v in low..=counts.len() {
        if counts[v - 1] == 0 {
            continue;
        }
        counts[v - 1] -= 1;
        sets.last_mut().expect("open set").push(v);
        grow_set(sl, i, v + 1, remaining - 1, north_after, counts, sets, visit);
        sets.last_mut().expect("open set").pop();
        counts[v - 1] += 1;
    }
}

/// θ: contract the north steps in vertical rows of the stack, merging their
/// labels into the square at the lattice point where they now sit.
pub fn theta(p: &StackPath) -> Result<DensePath, PathError> {
    let shape = p.shape();
    let x = shape.x_positions();
    let kept: Vec<usize> = shape.diag_rows().iter().map(|&r| x[r - 1]).collect();
    let d = DyckPath::from_x_positions(&kept)?;
    let sl = slots(&d);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); sl.len()];
    let mut height = 0;
    for (i, &l) in p.labels().iter().enumerate() {
        if shape.is_diag(i + 1) {
            height += 1;
        }
        let slot = sl
            .iter()
            .position(|&(sx, sy, _)| sx == x[i] && sy == height)
            .ok_or_else(|| PathError::InvalidPath(format!("row {} has no square after contraction", i + 1)))?;
        sets[slot].push(l);
    }
    DensePath::new(d, sets)
}

/// Inverse of [`theta`]: each north square gives a diagonal row followed by
/// vertical rows; each east square gives vertical rows in its column.
pub fn theta_inverse(p: &DensePath) -> Result<StackPath, PathError> {
    let mut diag = Vec::new();
    let mut x = Vec::new();
    let mut labels = Vec::new();
    for sq in &p.squares {
        for (j, &l) in sq.labels.iter().enumerate() {
            diag.push(sq.north && j == 0);
            x.push(sq.x);
            labels.push(l);
        }
    }
    let diag_rows: Vec<usize> = (1..=diag.len()).filter(|&r| diag[r - 1]).collect();
    StackPath::new(StackShape::new(&diag_rows, x)?, labels)
}

impl fmt::Display for DensePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.word())?;
        for sq in &self.squares {
            write!(f, " {}({},{}){:?}", if sq.north { 'N' } else { 'E' }, sq.x, sq.y, sq.labels)?;
        }
        Ok(())
    }
}
