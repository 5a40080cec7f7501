//! Partially labeled Dyck paths: `n` labeled rows and `ℓ` empty valleys.

use std::collections::BTreeMap;
use std::fmt;

use exact_algebra::{Monomial, MultiPoly};
use symfunc_core::Composition;

use crate::content::ContentGf;
use crate::dyck::{d_vector, parse_record, write_list, x_monomial, DyckPath};
use crate::labels::{fill_labels, for_each_subset, packed_content, LabelSpec};
use crate::parallel::par_map;
use crate::tally::Tally;
use crate::PathError;

/// Which diagonal inversion statistic to attach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DinvVariant {
    /// Empty rows labeled 0, then the usual count.
    Zero,
    /// Empty rows contribute `-1` and pair with any row at the right area.
    Prime,
}

impl fmt::Display for DinvVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DinvVariant::Zero => "dinv",
            DinvVariant::Prime => "dinv'",
        })
    }
}

/// A Dyck path of order `n + ℓ`; label 0 marks an empty row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialPath {
    path: DyckPath,
    labels: Vec<usize>,
}

/// `strict[i]` for labeled rows: the row below is labeled and in the same column.
fn strict_flags(cont: &[bool], empty: &[bool]) -> Vec<bool> {
    (0..cont.len()).map(|i| cont[i] && !empty[i] && i > 0 && !empty[i - 1]).collect()
}

impl PartialPath {
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<PartialPath, PathError> {
        if labels.len() != path.order() {
            return Err(PathError::InvalidLabels(format!(
                "{} labels for a path of order {}",
                labels.len(),
                path.order()
            )));
        }
        let valleys = path.valleys();
        if let Some(i) = (1..=labels.len()).find(|&i| labels[i - 1] == 0 && !valleys.contains(&i)) {
            return Err(PathError::InvalidLabels(format!("empty row {i} is not a valley")));
        }
        let cont = path.continues();
        if let Some(i) = (1..labels.len()).find(|&i| cont[i] && labels[i - 1] > 0 && labels[i] <= labels[i - 1]) {
            return Err(PathError::InvalidLabels(format!(
                "labels {labels:?} do not increase up the column at row {}",
                i + 1
            )));
        }
        Ok(PartialPath { path, labels })
    }

    /// All of `LD^Part_{n,ℓ}` with the given labels on the `n` labeled rows.
    pub fn all(n: usize, ell: usize, spec: &LabelSpec) -> Vec<PartialPath> {
        let mut out = Vec::new();
        for_each_partial(n, ell, spec, &mut |path, labels| {
            out.push(PartialPath { path: path.clone(), labels: labels.to_vec() });
        });
        out
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// Row labels, 0 for empty rows.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn labeled_rows(&self) -> usize {
        self.labels.iter().filter(|&&l| l > 0).count()
    }

    pub fn empty_rows(&self) -> usize {
        self.labels.len() - self.labeled_rows()
    }

    pub fn area(&self) -> usize {
        self.path.area()
    }

    pub fn dinv(&self) -> usize {
        d_vector(self.path.area_vector(), &self.labels).iter().sum()
    }

    pub fn dinv_prime(&self) -> i64 {
        dinv_prime(self.path.area_vector(), &self.labels)
    }

    pub fn statistic(&self, variant: DinvVariant) -> i64 {
        match variant {
            DinvVariant::Zero => self.dinv() as i64,
            DinvVariant::Prime => self.dinv_prime(),
        }
    }

    /// Rows of area 0 that are not empty.
    pub fn touch(&self) -> usize {
        touch(self.path.area_vector(), &self.labels)
    }

    pub fn x_monomial(&self) -> Monomial {
        x_monomial(&self.nonzero_labels())
    }

    pub fn content(&self) -> Composition {
        Composition::new(packed_content(&self.nonzero_labels())).expect("positive parts")
    }

    fn nonzero_labels(&self) -> Vec<usize> {
        self.labels.iter().copied().filter(|&l| l > 0).collect()
    }

    /// Parses `a=[..];l=[..]` with 0 for empty rows.
    pub fn parse(s: &str) -> Result<PartialPath, PathError> {
        let (a, l, dec) = parse_record(s)?;
        if !dec.is_empty() {
            return Err(PathError::Parse(s.to_string()));
        }
        PartialPath::new(DyckPath::new(a)?, l)
    }
}

impl fmt::Display for PartialPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "a", self.path.area_vector())?;
        f.write_str(";")?;
        write_list(f, "l", &self.labels)
    }
}

fn dinv_prime(a: &[usize], l: &[usize]) -> i64 {
    (0..a.len())
        .map(|i| {
            if l[i] == 0 {
                return -1;
            }
            (i + 1..a.len())
                .filter(|&j| {
                    if l[j] == 0 {
                        a[i] == a[j] || a[i] == a[j] + 1
                    } else {
                        (a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j])
                    }
                })
                .count() as i64
        })
        .sum()
}

fn touch(a: &[usize], l: &[usize]) -> usize {
    (0..a.len()).filter(|&i| a[i] == 0 && l[i] > 0).count()
}

/// Visits every partially labeled path as `(path, labels)`.
fn for_each_partial(n: usize, ell: usize, spec: &LabelSpec, visit: &mut dyn FnMut(&DyckPath, &[usize])) {
    if n == 0 || spec.total(n) != n {
        return;
    }
    for path in DyckPath::all(n + ell) {
        let cont = path.continues();
        for_each_subset(&path.valleys(), ell, &mut |chosen| {
            let empty: Vec<bool> = (1..=n + ell).map(|r| chosen.contains(&r)).collect();
            let strict = strict_flags(&cont, &empty);
            let rows: Vec<usize> = (0..n + ell).filter(|&i| !empty[i]).collect();
            let row_strict: Vec<bool> = rows.iter().map(|&i| strict[i]).collect();
            let mut counts = spec.counts(n);
            let mut labels = vec![0; n + ell];
            fill_labels(&row_strict, &mut counts, &mut |l| {
                for (&i, &v) in rows.iter().zip(l) {
                    labels[i] = v;
                }
                visit(&path, &labels);
            });
        });
    }
}

fn statistic(variant: DinvVariant, a: &[usize], l: &[usize]) -> i64 {
    match variant {
        DinvVariant::Zero => d_vector(a, l).iter().sum::<usize>() as i64,
        DinvVariant::Prime => dinv_prime(a, l),
    }
}

/// `[x^α]` of the rise-product sum, as a tally in q, t, z.
fn partial_coefficient(n: usize, ell: usize, variant: DinvVariant, alpha: &Composition) -> Tally {
    let mut tally = Tally::new();
    for_each_partial(n, ell, &LabelSpec::Content(alpha.clone()), &mut |path, labels| {
        let a = path.area_vector();
        let q = statistic(variant, a, labels);
        let area = path.area() as i64;
        let rises: Vec<i64> = path.rises().iter().map(|&r| a[r - 1] as i64).collect();
        for mask in 0u32..1 << rises.len() {
            let dt: i64 = (0..rises.len()).filter(|&b| mask & (1 << b) != 0).map(|b| rises[b]).sum();
            tally.add([q, area - dt, i64::from(mask.count_ones()), 0], 1);
        }
    });
    tally
}

/// `k ↦ [z^k] Σ_P q^{dinv} t^{area} x^P Π_{rises} (1 + z t^{-a_i})` by content.
pub fn partial_gf(n: usize, ell: usize, variant: DinvVariant) -> Result<BTreeMap<usize, ContentGf>, PathError> {
    let comps = Composition::all(n);
    let tallies = par_map(&comps, |alpha| partial_coefficient(n, ell, variant, alpha));
    let mut out: BTreeMap<usize, ContentGf> = (0..n).map(|k| (k, ContentGf::zero(n))).collect();
    for (alpha, tally) in comps.iter().zip(tallies) {
        let poly = tally.to_poly()?;
        for k in 0..n {
            let c = poly.coeff_extract(exact_algebra::Var::Z, k as u32);
            out.get_mut(&k).expect("every k").add(alpha, &c);
        }
    }
    Ok(out)
}

/// The `z^k` coefficient of [`partial_gf`] in `N` variables.
pub fn partial_gf_x(
    n: usize,
    ell: usize,
    k: usize,
    variant: DinvVariant,
    n_vars: usize,
) -> Result<MultiPoly, PathError> {
    if k >= n {
        return Err(PathError::BadParameters { n, k });
    }
    if n_vars < n || n_vars > exact_algebra::MAX_X_VARS {
        return Err(PathError::Variables(n_vars));
    }
    partial_gf(n, ell, variant)?[&k].to_x_poly(n_vars)
}

/// `r ↦ Σ_{touch(P) = r} q^{dinv} t^{area} x^P` by content.
pub fn partial_touch_gf(n: usize, ell: usize, variant: DinvVariant) -> Result<BTreeMap<usize, ContentGf>, PathError> {
    let comps = Composition::all(n);
    let tallies = par_map(&comps, |alpha| {
        let mut by_touch: BTreeMap<usize, Tally> = BTreeMap::new();
        for_each_partial(n, ell, &LabelSpec::Content(alpha.clone()), &mut |path, labels| {
            let a = path.area_vector();
            let q = statistic(variant, a, labels);
            by_touch.entry(touch(a, labels)).or_default().add([q, path.area() as i64, 0, 0], 1);
        });
        by_touch
    });
    let mut out: BTreeMap<usize, ContentGf> = BTreeMap::new();
    for (alpha, by_touch) in comps.iter().zip(tallies) {
        for (r, tally) in by_touch {
            out.entry(r).or_insert_with(|| ContentGf::zero(n)).add(alpha, &tally.to_poly()?);
        }
    }
    Ok(out)
}
