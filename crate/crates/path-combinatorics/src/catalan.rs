//! Four-variable q,t-Catalan polynomials.
//!
//! Unlabeled paths use the label-free statistics: rows `i < j` form a diagonal
//! inversion when `a_i = a_j` or `a_i = a_j + 1`.

use exact_algebra::MultiPoly;
use symfunc_core::Composition;

use crate::dyck::DyckPath;
use crate::tally::Tally;
use crate::PathError;

fn inversion(a: &[usize], i: usize, j: usize) -> bool {
    let (lo, hi) = (i.min(j), i.max(j));
    a[lo] == a[hi] || a[lo] == a[hi] + 1
}

/// `d_i(D)` for each row.
pub fn catalan_dinv_vector(d: &DyckPath) -> Vec<usize> {
    let a = d.area_vector();
    (0..a.len()).map(|i| (i + 1..a.len()).filter(|&j| inversion(a, i, j)).count()).collect()
}

/// Rows (1-based) by area descending, then right to left.
pub fn reading_order(d: &DyckPath) -> Vec<usize> {
    let a = d.area_vector();
    let mut rows: Vec<usize> = (1..=d.order()).collect();
    rows.sort_by(|&i, &j| a[j - 1].cmp(&a[i - 1]).then(j.cmp(&i)));
    rows
}

/// `b_m`: diagonal inversions between the `m`-th row in reading order and the rows
/// read before it.
pub fn b_vector(d: &DyckPath) -> Vec<usize> {
    let a = d.area_vector();
    let order = reading_order(d);
    (0..order.len()).map(|m| order[..m].iter().filter(|&&r| inversion(a, r - 1, order[m] - 1)).count()).collect()
}

/// Rows where `b` increases in reading order, set against the peaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakReport {
    /// Rows `order[m]` with `b_m > b_{m-1}`, in reading order.
    pub increases: Vec<usize>,
    /// Peak rows other than the first one in reading order, in reading order.
    pub later_peaks: Vec<usize>,
    pub valleys: usize,
}

impl PeakReport {
    /// Increases sit exactly at the later peaks, and there are as many as valleys.
    pub fn holds(&self) -> bool {
        self.increases == self.later_peaks && self.increases.len() == self.valleys
    }
}

pub fn peak_report(d: &DyckPath) -> PeakReport {
    let order = reading_order(d);
    let b = b_vector(d);
    let increases = (1..order.len()).filter(|&m| b[m] > b[m - 1]).map(|m| order[m]).collect();
    let peaks = d.peaks();
    let later_peaks = order.iter().copied().filter(|r| peaks.contains(r)).skip(1).collect();
    PeakReport { increases, later_peaks, valleys: d.valleys().len() }
}

/// Exponent shifts `(Δq, count)` of a product `Π (1 + z / q^{e})`.
fn z_product(exponents: &[usize]) -> Vec<(i64, i64)> {
    (0u32..1 << exponents.len())
        .map(|mask| {
            let bits = (0..exponents.len()).filter(|&b| mask & (1 << b) != 0);
            (-(bits.map(|b| exponents[b] as i64).sum::<i64>()), i64::from(mask.count_ones()))
        })
        .collect()
}

/// Rises as `(row, a_row)`.
fn rise_weights(d: &DyckPath) -> Vec<(usize, usize)> {
    let a = d.area_vector();
    d.rises().into_iter().map(|r| (r, a[r - 1])).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ZStat {
    Valley,
    Reading,
}

fn z_exponents(d: &DyckPath, stat: ZStat) -> Vec<usize> {
    match stat {
        ZStat::Valley => {
            let dv = catalan_dinv_vector(d);
            d.valleys().iter().map(|&i| dv[i - 1] + 1).collect()
        }
        ZStat::Reading => {
            let b = b_vector(d);
            (1..b.len()).filter(|&m| b[m] > b[m - 1]).map(|m| b[m]).collect()
        }
    }
}

fn catalan_sum(n: usize, stat: ZStat, keep: impl Fn(&DyckPath) -> bool) -> Result<MultiPoly, PathError> {
    let mut tally = Tally::new();
    for d in DyckPath::all(n).iter().filter(|d| keep(d)) {
        let dinv = catalan_dinv_vector(d).iter().sum::<usize>() as i64;
        let area = d.area() as i64;
        let rises = rise_weights(d);
        let zs = z_product(&z_exponents(d, stat));
        for mask in 0u32..1 << rises.len() {
            let chosen = (0..rises.len()).filter(|&b| mask & (1 << b) != 0);
            let dt: i64 = chosen.map(|b| rises[b].1 as i64).sum();
            for &(dq, zc) in &zs {
                tally.add([dinv + dq, area - dt, zc, i64::from(mask.count_ones())], 1);
            }
        }
    }
    tally.to_poly()
}

/// `Cat_n(q,t,z,w)`: valley product in z, rise product in w.
pub fn cat4(n: usize) -> Result<MultiPoly, PathError> {
    catalan_sum(n, ZStat::Valley, |_| true)
}

/// `Cat'_n(q,t,z,w)`: the z product runs over increases of `b` in reading order.
pub fn catmod4(n: usize) -> Result<MultiPoly, PathError> {
    catalan_sum(n, ZStat::Reading, |_| true)
}

/// `Cat_{n,r}`: paths with exactly `r` rows of area 0.
pub fn cat4_touch(n: usize, r: usize) -> Result<MultiPoly, PathError> {
    catalan_sum(n, ZStat::Valley, |d| d.returns().len() == r)
}

/// `Cat'_{n,r}`.
pub fn catmod4_touch(n: usize, r: usize) -> Result<MultiPoly, PathError> {
    catalan_sum(n, ZStat::Reading, |d| d.returns().len() == r)
}

/// The touch composition of a path with starred rises: with area-0 rows
/// `i_1 < ... < i_r` and `i_{r+1} = n + 1`, part `j` is `i_{j+1} - i_j` less the
/// stars strictly between.
fn touch_composition(d: &DyckPath, stars: &[usize]) -> Vec<usize> {
    let mut touch = d.returns();
    touch.push(d.order() + 1);
    touch.windows(2).map(|w| w[1] - w[0] - stars.iter().filter(|&&s| w[0] < s && s < w[1]).count()).collect()
}

/// `Cat'_{n,α}(q,t,z)`: the sum of `Cat'_n` terms over paths with starred rises
/// (stars select the w factors) whose touch composition is `α`.
pub fn catmod4_comp(n: usize, alpha: &Composition) -> Result<MultiPoly, PathError> {
    let mut tally = Tally::new();
    for d in DyckPath::all(n) {
        if d.returns().len() != alpha.len() {
            continue;
        }
        let dinv = catalan_dinv_vector(&d).iter().sum::<usize>() as i64;
        let area = d.area() as i64;
        let rises = rise_weights(&d);
        let zs = z_product(&z_exponents(&d, ZStat::Reading));
        for mask in 0u32..1 << rises.len() {
            let stars: Vec<usize> = (0..rises.len()).filter(|&b| mask & (1 << b) != 0).map(|b| rises[b].0).collect();
            if touch_composition(&d, &stars) != alpha.parts() {
                continue;
            }
            let dt: i64 = (0..rises.len()).filter(|&b| mask & (1 << b) != 0).map(|b| rises[b].1 as i64).sum();
            for &(dq, zc) in &zs {
                tally.add([dinv + dq, area - dt, zc, 0], 1);
            }
        }
    }
    tally.to_poly()
}

/// The touch composition of a path with the given starred rows, for display and tests.
pub fn star_composition(d: &DyckPath, stars: &[usize]) -> Result<Composition, PathError> {
    let rises = d.rises();
    if let Some(&s) = stars.iter().find(|s| !rises.contains(s)) {
        return Err(PathError::InvalidPath(format!("row {s} is not a double rise")));
    }
    Composition::new(touch_composition(d, stars)).map_err(PathError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::Var;

    #[test]
    fn cat2() {
        let expected =
            [Var::Q, Var::T, Var::Z, Var::W].into_iter().fold(MultiPoly::zero(), |acc, v| &acc + &MultiPoly::var(v));
        assert_eq!(cat4(2).unwrap(), expected);
        assert_eq!(catmod4(2).unwrap(), expected);
    }

    #[test]
    fn starred_example_composition() {
        let d = DyckPath::from_word("NNENEENENE").unwrap();
        assert_eq!(star_composition(&d, &[2]).unwrap().parts(), &[2, 1, 1]);
    }
}
