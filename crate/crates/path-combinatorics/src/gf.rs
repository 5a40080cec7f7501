//! The generating functions `Rise_{n,k}(x;q,t)` and `Val_{n,k}(x;q,t)`.
//!
//! Each can be computed along several routes: the z-coefficient of a product
//! over labeled Dyck paths, sums over decorated paths, over stack paths, and
//! (for `Val`) over densely labeled paths. [`rise_gf_content`] and
//! [`val_gf_content`] run every route and fail if any two disagree.

use std::fmt;

use exact_algebra::{rat, Monomial, MultiPoly};
use symfunc_core::Composition;

use crate::content::ContentGf;
use crate::decorated::{DecoratedPath, Decoration};
use crate::dense::DensePath;
use crate::dyck::{d_vector, val_rows, DyckPath};
use crate::labels::{fill_labels, LabelSpec};
use crate::parallel::par_map;
use crate::stack::StackPath;
use crate::tally::Tally;
use crate::PathError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Rise,
    Val,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Rise => "Rise",
            Family::Val => "Val",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// `[z^{n-k-1}]` of the product formula over labeled Dyck paths.
    ZForm,
    /// Double-rise decorations with `area⁻`.
    RiseDecorated,
    /// Double-fall decorations with `area⁻`.
    FallDecorated,
    /// Contractible-valley decorations with `dinv⁻`.
    ValDecorated,
    /// Paths under leaning stacks (`hdinv` for rise, `wdinv` for val).
    Stack,
    /// Densely labeled paths with `wdinv`.
    Dense,
}

impl Route {
    pub fn for_family(family: Family) -> &'static [Route] {
        match family {
            Family::Rise => &[Route::ZForm, Route::RiseDecorated, Route::FallDecorated, Route::Stack],
            Family::Val => &[Route::ZForm, Route::ValDecorated, Route::Stack, Route::Dense],
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ZForm => "z-form",
            Route::RiseDecorated => "rise-decorated",
            Route::FallDecorated => "fall-decorated",
            Route::ValDecorated => "val-decorated",
            Route::Stack => "stack",
            Route::Dense => "dense",
        })
    }
}

/// Per-path data reused across all labelings.
struct PathData {
    a: Vec<usize>,
    strict: Vec<bool>,
    area: usize,
    /// Terms `(t exponent, z exponent, coefficient)` of `t^area Π_{rises} (1 + z t^{-a_i})`.
    rise_terms: Vec<(usize, usize, i64)>,
}

impl PathData {
    fn new(d: &DyckPath) -> PathData {
        let a = d.area_vector().to_vec();
        let area = d.area();
        let mut terms = vec![(area, 0usize, 1i64)];
        for r in d.rises() {
            let ar = a[r - 1];
            let mut next = terms.clone();
            next.extend(terms.iter().map(|&(t, z, c)| (t - ar, z + 1, c)));
            terms = next;
        }
        terms.sort_unstable();
        let mut rise_terms: Vec<(usize, usize, i64)> = Vec::new();
        for (t, z, c) in terms {
            match rise_terms.last_mut() {
                Some(last) if last.0 == t && last.1 == z => last.2 += c,
                _ => rise_terms.push((t, z, c)),
            }
        }
        PathData { strict: d.continues(), a, area, rise_terms }
    }
}

/// Dense `[t][q][z]` accumulator.
struct Acc {
    side: usize,
    zdim: usize,
    data: Vec<i64>,
}

impl Acc {
    fn new(n: usize) -> Acc {
        let side = n * n.saturating_sub(1) / 2 + 1;
        Acc { side, zdim: n, data: vec![0; side * side * n] }
    }

    fn add(&mut self, t: usize, q: usize, z: usize, c: i64) {
        self.data[(t * self.side + q) * self.zdim + z] += c;
    }

    /// The coefficient of `z^j` as a polynomial in q and t.
    fn z_coefficient(&self, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for t in 0..self.side {
            for q in 0..self.side {
                let c = self.data[(t * self.side + q) * self.zdim + j];
                if c != 0 {
                    out.add_term(Monomial::qt(q as u32, t as u32), rat(c));
                }
            }
        }
        out
    }
}

/// `[x^α]` of the z-form for every k, indexed by k.
fn zform_by_k(family: Family, n: usize, alpha: &Composition, paths: &[PathData]) -> Result<Vec<MultiPoly>, PathError> {
    let mut acc = Acc::new(n);
    let mut negative = None;
    for pd in paths {
        let mut counts = alpha.parts().to_vec();
        match family {
            Family::Rise => {
                let mut hist = vec![0i64; acc.side];
                fill_labels(&pd.strict, &mut counts, &mut |l| {
                    hist[d_vector(&pd.a, l).iter().sum::<usize>()] += 1;
                });
                for (dinv, &c) in hist.iter().enumerate().filter(|(_, &c)| c != 0) {
                    for &(t, z, rc) in &pd.rise_terms {
                        acc.add(t, dinv, z, c * rc);
                    }
                }
            }
            Family::Val => {
                fill_labels(&pd.strict, &mut counts, &mut |l| {
                    let d = d_vector(&pd.a, l);
                    let dinv: usize = d.iter().sum();
                    let weights: Vec<usize> = val_rows(&pd.a, l).iter().map(|&i| d[i - 1] + 1).collect();
                    for mask in 0u32..(1 << weights.len()) {
                        let shift: usize =
                            (0..weights.len()).filter(|&b| mask & (1 << b) != 0).map(|b| weights[b]).sum();
                        match dinv.checked_sub(shift) {
                            Some(q) => acc.add(pd.area, q, mask.count_ones() as usize, 1),
                            None => negative = Some(dinv as i64 - shift as i64),
                        }
                    }
                });
            }
        }
    }
    if let Some(exponent) = negative {
        return Err(PathError::NegativeExponent { var: "q", exponent });
    }
    Ok((0..n).map(|k| acc.z_coefficient(n - 1 - k)).collect())
}

fn path_data(n: usize) -> Vec<PathData> {
    DyckPath::all(n).iter().map(PathData::new).collect()
}

fn by_k(family: Family, n: usize) -> Result<Vec<ContentGf>, PathError> {
    let paths = path_data(n);
    let comps = Composition::all(n);
    let per = par_map(&comps, |alpha| zform_by_k(family, n, alpha, &paths));
    let mut out = vec![ContentGf::zero(n); n];
    for (alpha, polys) in comps.iter().zip(per) {
        for (k, p) in polys?.iter().enumerate() {
            out[k].add(alpha, p);
        }
    }
    Ok(out)
}

/// `Rise_{n,k}` for every `0 ≤ k < n` from the z-form, indexed by k.
pub fn rise_by_k(n: usize) -> Result<Vec<ContentGf>, PathError> {
    by_k(Family::Rise, n)
}

/// `Val_{n,k}` for every `0 ≤ k < n` from the z-form, indexed by k.
pub fn val_by_k(n: usize) -> Result<Vec<ContentGf>, PathError> {
    by_k(Family::Val, n)
}

fn check_nk(n: usize, k: usize) -> Result<(), PathError> {
    if k >= n {
        return Err(PathError::BadParameters { n, k });
    }
    Ok(())
}

/// `[x^α]` along one route.
fn route_coefficient(
    family: Family,
    route: Route,
    n: usize,
    k: usize,
    alpha: &Composition,
) -> Result<MultiPoly, PathError> {
    let spec = LabelSpec::Content(alpha.clone());
    let size = n - k - 1;
    let mut tally = Tally::new();
    let mut put = |q: i64, t: usize| tally.add([q, t as i64, 0, 0], 1);
    match (family, route) {
        (_, Route::ZForm) => {
            let paths = path_data(n);
            return Ok(zform_by_k(family, n, alpha, &paths)?.swap_remove(k));
        }
        (Family::Rise, Route::RiseDecorated) | (Family::Rise, Route::FallDecorated) => {
            let kind = if route == Route::RiseDecorated { Decoration::Rise } else { Decoration::Fall };
            for p in DecoratedPath::all(kind, n, size, &spec) {
                put(p.path().dinv() as i64, p.area_minus());
            }
        }
        (Family::Val, Route::ValDecorated) => {
            for p in DecoratedPath::all(Decoration::Val, n, size, &spec) {
                put(p.dinv_minus(), p.path().area());
            }
        }
        (Family::Rise, Route::Stack) => {
            for p in StackPath::all(n, k, &spec) {
                put(p.hdinv() as i64, p.area());
            }
        }
        (Family::Val, Route::Stack) => {
            for p in StackPath::all(n, k, &spec) {
                put(p.wdinv(), p.area());
            }
        }
        (Family::Val, Route::Dense) => {
            for p in DensePath::all(n, k, &spec) {
                put(p.wdinv(), p.area());
            }
        }
        _ => return Err(PathError::RouteNotApplicable { family, route }),
    }
    tally.to_poly()
}

/// The generating function along a single route.
pub fn route_gf(family: Family, route: Route, n: usize, k: usize) -> Result<ContentGf, PathError> {
    check_nk(n, k)?;
    if !Route::for_family(family).contains(&route) {
        return Err(PathError::RouteNotApplicable { family, route });
    }
    let comps = Composition::all(n);
    let per = par_map(&comps, |alpha| route_coefficient(family, route, n, k, alpha));
    let mut out = ContentGf::zero(n);
    for (alpha, p) in comps.iter().zip(per) {
        out.add(alpha, &p?);
    }
    Ok(out)
}

fn all_routes(family: Family, n: usize, k: usize) -> Result<ContentGf, PathError> {
    let routes = Route::for_family(family);
    let reference = route_gf(family, routes[0], n, k)?;
    for &route in &routes[1..] {
        let other = route_gf(family, route, n, k)?;
        if let Some((alpha, left, right)) = reference.first_difference(&other) {
            return Err(PathError::RouteDisagreement {
                family,
                n,
                k,
                content: alpha.to_string(),
                left: routes[0],
                right: route,
                left_value: left.to_string(),
                right_value: right.to_string(),
            });
        }
    }
    Ok(reference)
}

/// `Rise_{n,k}` by content, with all routes required to agree.
pub fn rise_gf_content(n: usize, k: usize) -> Result<ContentGf, PathError> {
    all_routes(Family::Rise, n, k)
}

/// `Val_{n,k}` by content, with all routes required to agree.
pub fn val_gf_content(n: usize, k: usize) -> Result<ContentGf, PathError> {
    all_routes(Family::Val, n, k)
}

fn check_vars(n: usize, n_vars: usize) -> Result<(), PathError> {
    if n_vars < n || n_vars > exact_algebra::MAX_X_VARS {
        return Err(PathError::Variables(n_vars));
    }
    Ok(())
}

/// `Rise_{n,k}(x_1, ..., x_N; q, t)`.
pub fn rise_gf(n: usize, k: usize, n_vars: usize) -> Result<MultiPoly, PathError> {
    check_vars(n, n_vars)?;
    rise_gf_content(n, k)?.to_x_poly(n_vars)
}

/// `Val_{n,k}(x_1, ..., x_N; q, t)`.
pub fn val_gf(n: usize, k: usize, n_vars: usize) -> Result<MultiPoly, PathError> {
    check_vars(n, n_vars)?;
    val_gf_content(n, k)?.to_x_poly(n_vars)
}
