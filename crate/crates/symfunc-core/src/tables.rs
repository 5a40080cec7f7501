//! Transition matrices between the classical bases and the monomial basis.
//!
//! Every entry is a brute-force count: Kostka numbers by semistandard tableaux,
//! h and e by nonnegative and 0/1 integer matrices with prescribed margins, p by
//! assignments of parts to variables. Tables are built once per degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use exact_algebra::{BigInt, BigRational};
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Bases with integer expansions in the monomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classical {
    E,
    H,
    P,
    S,
}

impl Classical {
    fn slot(self) -> usize {
        self as usize
    }
}

/// Transition data for one degree.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `to_m[b][λ][μ]` is the coefficient of `m_μ` in `b_λ`.
    to_m: [Vec<Vec<i64>>; 4],
    /// `from_m[b][μ][λ]` is the coefficient of `b_λ` in `m_μ`.
    from_m: [Vec<Vec<BigRational>>; 4],
}

impl DegreeTables {
    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn to_m(&self, b: Classical) -> &[Vec<i64>] {
        &self.to_m[b.slot()]
    }

    pub fn from_m(&self, b: Classical) -> &[Vec<BigRational>] {
        &self.from_m[b.slot()]
    }

    /// Kostka number `K_{λμ}`.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.to_m[Classical::S.slot()][self.index(lambda)][self.index(mu)]
    }

    fn build(n: usize) -> DegreeTables {
        let parts = Partition::all(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let matrix = |f: fn(&Partition, &Partition) -> i64| -> Vec<Vec<i64>> {
            parts.iter().map(|l| parts.iter().map(|m| f(l, m)).collect()).collect()
        };
        let to_m = [
            matrix(count_01_matrices),
            matrix(count_nonneg_matrices),
            matrix(count_part_assignments),
            matrix(count_ssyt),
        ];
        let from_m = [invert(&to_m[0]), invert(&to_m[1]), invert(&to_m[2]), invert(&to_m[3])];
        DegreeTables { parts, index, to_m, from_m }
    }
}

/// Tables for degree `n`, built on first use and shared afterwards.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = memo.lock().expect("table memo poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(DegreeTables::build(n));
    let mut guard = memo.lock().expect("table memo poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// Semistandard tableaux of shape `shape` and content `content`, counted by
/// successive horizontal strips.
pub fn count_ssyt(shape: &Partition, content: &Partition) -> i64 {
    fn strips(shape: &[usize], cur: &mut Vec<usize>, content: &[usize], k: usize) -> i64 {
        if k == content.len() {
            return i64::from(cur.as_slice() == shape);
        }
        let mut total = 0;
        let rows = shape.len();
        let mut next = cur.clone();
        place(shape, cur, &mut next, 0, content[k], rows, &mut |nx| {
            let mut nx = nx.to_vec();
            total += strips(shape, &mut nx, content, k + 1);
        });
        total
    }
    // Adds a horizontal strip of `left` cells row by row, never exceeding the
    // previous row of the old shape or the target shape.
    fn place(
        shape: &[usize],
        old: &[usize],
        next: &mut Vec<usize>,
        row: usize,
        left: usize,
        rows: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if row == rows {
            if left == 0 {
                visit(next);
            }
            return;
        }
        let base = old[row];
        let cap = if row == 0 { shape[0] } else { old[row - 1].min(shape[row]) };
        let room = cap.saturating_sub(base);
        for add in 0..=room.min(left) {
            next[row] = base + add;
            place(shape, old, next, row + 1, left - add, rows, visit);
        }
        next[row] = base;
    }
    if shape.size() != content.size() {
        return 0;
    }
    let mut cur = vec![0; shape.len()];
    strips(shape.parts(), &mut cur, content.parts(), 0)
}

/// Nonnegative integer matrices with row sums `rows` and column sums `cols`.
pub fn count_nonneg_matrices(rows: &Partition, cols: &Partition) -> i64 {
    fn go(rows: &[usize], r: usize, cap: &mut [usize]) -> i64 {
        if r == rows.len() {
            return i64::from(cap.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        distribute(rows[r], 0, cap, &mut |cap| total += go(rows, r + 1, cap));
        total
    }
    fn distribute(left: usize, col: usize, cap: &mut [usize], visit: &mut dyn FnMut(&mut [usize])) {
        if col == cap.len() {
            if left == 0 {
                visit(cap);
            }
            return;
        }
        let top = cap[col].min(left);
        for v in 0..=top {
            cap[col] -= v;
            distribute(left - v, col + 1, cap, visit);
            cap[col] += v;
        }
    }
    let mut cap = cols.parts().to_vec();
    go(rows.parts(), 0, &mut cap)
}

/// 0/1 matrices with row sums `rows` and column sums `cols`.
pub fn count_01_matrices(rows: &Partition, cols: &Partition) -> i64 {
    fn go(rows: &[usize], r: usize, cap: &mut [usize]) -> i64 {
        if r == rows.len() {
            return i64::from(cap.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        choose(rows[r], 0, cap, &mut |cap| total += go(rows, r + 1, cap));
        total
    }
    fn choose(left: usize, col: usize, cap: &mut [usize], visit: &mut dyn FnMut(&mut [usize])) {
        if left == 0 {
            visit(cap);
            return;
        }
        if col == cap.len() || cap.len() - col < left {
            return;
        }
        if cap[col] > 0 {
            cap[col] -= 1;
            choose(left - 1, col + 1, cap, visit);
            cap[col] += 1;
        }
        choose(left, col + 1, cap, visit);
    }
    let mut cap = cols.parts().to_vec();
    go(rows.parts(), 0, &mut cap)
}

/// Maps from the parts of `parts` to the variables of `target` whose fibres sum to
/// the target exponents: the coefficient of `x^μ` in `p_λ`.
pub fn count_part_assignments(parts: &Partition, target: &Partition) -> i64 {
    fn go(parts: &[usize], i: usize, cap: &mut [usize]) -> i64 {
        if i == parts.len() {
            return i64::from(cap.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        for j in 0..cap.len() {
            if cap[j] >= parts[i] {
                cap[j] -= parts[i];
                total += go(parts, i + 1, cap);
                cap[j] += parts[i];
            }
        }
        total
    }
    let mut cap = target.parts().to_vec();
    go(parts.parts(), 0, &mut cap)
}

/// Inverse of an invertible integer matrix over ℚ.
fn invert(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(prow.iter()) {
                *v -= &f * pv;
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_small() {
        assert_eq!(count_ssyt(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(count_ssyt(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(count_ssyt(&p(&[2, 1]), &p(&[3])), 0);
        assert_eq!(count_ssyt(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
    }

    #[test]
    fn margins() {
        assert_eq!(count_nonneg_matrices(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(count_01_matrices(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(count_01_matrices(&p(&[2]), &p(&[2])), 0);
        assert_eq!(count_part_assignments(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(count_part_assignments(&p(&[2]), &p(&[1, 1])), 0);
    }

    #[test]
    fn inverse_tables_invert() {
        let t = tables(5);
        for b in [Classical::E, Classical::H, Classical::P, Classical::S] {
            let a = t.to_m(b);
            let inv = t.from_m(b);
            for i in 0..a.len() {
                for j in 0..a.len() {
                    let mut s = BigRational::zero();
                    for (k, row) in inv.iter().enumerate() {
                        s += BigRational::from_integer(a[i][k].into()) * &row[j];
                    }
                    let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
