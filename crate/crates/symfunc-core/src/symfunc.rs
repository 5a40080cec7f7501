//! Homogeneous symmetric functions with rational-function coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use exact_algebra::{BigInt, BigRational, MultiPoly, RatFunc};
use num_traits::Zero;

use crate::partition::Partition;
use crate::tables::{tables, Classical};
use crate::SymError;

/// Basis tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
    Htilde,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::Htilde => "Htilde",
        }
    }

    fn classical(self) -> Option<Classical> {
        match self {
            Basis::E => Some(Classical::E),
            Basis::H => Some(Classical::H),
            Basis::P => Some(Classical::P),
            Basis::S => Some(Classical::S),
            Basis::M | Basis::Htilde => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            "Htilde" => Basis::Htilde,
            _ => return Err(SymError::Parse(s.to_string())),
        })
    }
}

/// Source of the modified Macdonald basis, supplied by a higher layer.
pub trait MacdonaldBasis {
    /// Monomial expansion of `H̃_μ`.
    fn htilde_monomial(&self, mu: &Partition) -> Result<SymFunc, SymError>;
    /// Coefficients of a monomial-basis function in the `H̃` basis.
    fn monomial_to_htilde(&self, f: &SymFunc) -> Result<SymFunc, SymError>;
}

/// A homogeneous symmetric function of degree `deg`, stored in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    deg: usize,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(basis: Basis, deg: usize) -> SymFunc {
        SymFunc { basis, deg, coeffs: BTreeMap::new() }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> SymFunc {
        let mut f = SymFunc::zero(basis, lambda.size());
        f.coeffs.insert(lambda, RatFunc::one());
        f
    }

    pub fn e(n: usize) -> SymFunc {
        SymFunc::basis_element(Basis::E, Partition::row(n))
    }

    pub fn h(n: usize) -> SymFunc {
        SymFunc::basis_element(Basis::H, Partition::row(n))
    }

    pub fn p(n: usize) -> SymFunc {
        SymFunc::basis_element(Basis::P, Partition::row(n))
    }

    pub fn s(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::S, lambda)
    }

    pub fn m(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::M, lambda)
    }

    /// Builds from `(partition, coefficient)` pairs, all of degree `deg`.
    pub fn from_terms<I>(basis: Basis, deg: usize, terms: I) -> Result<SymFunc, SymError>
    where
        I: IntoIterator<Item = (Partition, RatFunc)>,
    {
        let mut f = SymFunc::zero(basis, deg);
        for (p, c) in terms {
            if p.size() != deg {
                return Err(SymError::DegreeMismatch { left: deg, right: p.size() });
            }
            f.add_term(p, &c);
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in decreasing lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if every coefficient is a polynomial.
    pub fn has_polynomial_coefficients(&self) -> bool {
        self.coeffs.values().all(RatFunc::is_poly)
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.deg);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<F>(&self, f: F) -> Result<SymFunc, SymError>
    where
        F: Fn(&RatFunc) -> Result<RatFunc, SymError>,
    {
        let mut out = SymFunc::zero(self.basis, self.deg);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rational(&self, c: &BigRational) -> SymFunc {
        self.map_coeffs(|x| x.scale(c))
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<(), SymError> {
        if self.deg != other.deg && !self.is_zero() && !other.is_zero() {
            return Err(SymError::DegreeMismatch { left: self.deg, right: other.deg });
        }
        Ok(())
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let other = if other.basis == self.basis { other.clone() } else { other.convert(self.basis)? };
        let mut out = self.clone();
        for (p, c) in other.coeffs {
            out.add_term(p, &c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        self.add(&other.map_coeffs(|c| -c))
    }

    /// Converts between the bases m, e, h, p, s.
    pub fn convert(&self, target: Basis) -> Result<SymFunc, SymError> {
        if self.basis == target {
            return Ok(self.clone());
        }
        if self.basis == Basis::Htilde || target == Basis::Htilde {
            return Err(SymError::NeedsMacdonaldBasis);
        }
        let m = self.to_monomial();
        Ok(m.monomial_to(target))
    }

    /// Like [`SymFunc::convert`], with `H̃` available through `mac`.
    pub fn convert_with(&self, target: Basis, mac: &dyn MacdonaldBasis) -> Result<SymFunc, SymError> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let m = if self.basis == Basis::Htilde {
            let mut acc = SymFunc::zero(Basis::M, self.deg);
            for (mu, c) in &self.coeffs {
                let h = mac.htilde_monomial(mu)?;
                for (lambda, d) in &h.coeffs {
                    acc.add_term(lambda.clone(), &(c * d));
                }
            }
            acc
        } else {
            self.to_monomial()
        };
        if target == Basis::Htilde {
            mac.monomial_to_htilde(&m)
        } else {
            Ok(m.monomial_to(target))
        }
    }

    fn to_monomial(&self) -> SymFunc {
        let Some(b) = self.basis.classical() else {
            return self.clone();
        };
        let t = tables(self.deg);
        let a = t.to_m(b);
        let mut acc: Vec<RatFunc> = vec![RatFunc::zero(); t.parts.len()];
        for (lambda, c) in &self.coeffs {
            for (j, &v) in a[t.index(lambda)].iter().enumerate() {
                if v != 0 {
                    acc[j] += &c.scale(&BigRational::from_integer(BigInt::from(v)));
                }
            }
        }
        let mut out = SymFunc::zero(Basis::M, self.deg);
        for (p, c) in t.parts.iter().zip(acc) {
            out.add_term(p.clone(), &c);
        }
        out
    }

    fn monomial_to(&self, target: Basis) -> SymFunc {
        let Some(b) = target.classical() else {
            return self.clone();
        };
        let t = tables(self.deg);
        let inv = t.from_m(b);
        let mut acc: Vec<RatFunc> = vec![RatFunc::zero(); t.parts.len()];
        for (mu, c) in &self.coeffs {
            for (j, v) in inv[t.index(mu)].iter().enumerate() {
                if !v.is_zero() {
                    acc[j] += &c.scale(v);
                }
            }
        }
        let mut out = SymFunc::zero(target, self.deg);
        for (p, c) in t.parts.iter().zip(acc) {
            out.add_term(p.clone(), &c);
        }
        out
    }

    /// Hall inner product, with `⟨h_λ, m_μ⟩ = δ_{λμ}`.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<RatFunc, SymError> {
        if self.deg != other.deg || self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero());
        }
        let a = self.convert(Basis::H)?;
        let b = other.convert(Basis::M)?;
        let mut total = RatFunc::zero();
        for (lambda, c) in &a.coeffs {
            if let Some(d) = b.coeffs.get(lambda) {
                total += &(c * d);
            }
        }
        Ok(total)
    }

    /// The involution `ω`, returned in the basis of `self`.
    pub fn omega(&self) -> Result<SymFunc, SymError> {
        let mut out = match self.basis {
            Basis::S => SymFunc::zero(Basis::S, self.deg),
            Basis::P => SymFunc::zero(Basis::P, self.deg),
            _ => SymFunc::zero(Basis::H, self.deg),
        };
        match self.basis {
            Basis::S => {
                for (l, c) in &self.coeffs {
                    out.add_term(l.conjugate(), c);
                }
            }
            Basis::P => {
                for (l, c) in &self.coeffs {
                    out.add_term(l.clone(), &c.scale(&BigRational::from_integer(l.sign().into())));
                }
            }
            _ => {
                for (l, c) in &self.convert(Basis::E)?.coeffs {
                    out.add_term(l.clone(), c);
                }
            }
        }
        out.convert(self.basis)
    }

    /// Product of symmetric functions, computed through power sums.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        let a = self.convert(Basis::P)?;
        let b = other.convert(Basis::P)?;
        let mut out = SymFunc::zero(Basis::P, self.deg + other.deg);
        for (l, c) in &a.coeffs {
            for (m, d) in &b.coeffs {
                out.add_term(l.union(m), &(c * d));
            }
        }
        out.convert(self.basis)
    }

    /// Coefficients that are constants, as rationals; `None` otherwise.
    pub fn rational_coefficients(&self) -> Option<BTreeMap<Partition, BigRational>> {
        self.coeffs
            .iter()
            .map(|(p, c)| {
                let poly = c.as_poly()?;
                Some((p.clone(), poly.constant_value()?))
            })
            .collect()
    }

    /// Polynomial coefficients; `None` if some coefficient is not a polynomial.
    pub fn polynomial_coefficients(&self) -> Option<BTreeMap<Partition, MultiPoly>> {
        self.coeffs.iter().map(|(p, c)| Some((p.clone(), c.as_poly()?))).collect()
    }

    /// `basis=<tag>; deg=<n>; <partition>-><coefficient>; ...`
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<SymFunc, SymError> {
        s.parse()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basis={}; deg={}", self.basis, self.deg)?;
        for (p, c) in self.terms() {
            write!(f, "; {p}->{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SymFunc {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymError::Parse(s.to_string());
        let mut fields = s.trim().split("; ");
        let basis: Basis = fields.next().and_then(|f| f.strip_prefix("basis=")).ok_or_else(bad)?.parse()?;
        let deg: usize =
            fields.next().and_then(|f| f.strip_prefix("deg=")).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let mut out = SymFunc::zero(basis, deg);
        for field in fields {
            let (p, c) = field.split_once("->").ok_or_else(bad)?;
            let p: Partition = p.parse()?;
            let c = RatFunc::parse(c)?;
            if p.size() != deg || c.is_zero() || out.coeffs.contains_key(&p) {
                return Err(bad());
            }
            out.coeffs.insert(p, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn basic_conversions() {
        assert_eq!(SymFunc::e(2).convert(Basis::S).unwrap(), SymFunc::s(part(&[1, 1])));
        assert_eq!(SymFunc::p(2).convert(Basis::M).unwrap(), SymFunc::m(part(&[2])));
        assert_eq!(SymFunc::h(2).convert(Basis::S).unwrap(), SymFunc::s(part(&[2])));
    }

    #[test]
    fn inner_products() {
        let p11 = SymFunc::basis_element(Basis::P, part(&[1, 1]));
        assert_eq!(p11.hall_inner(&p11).unwrap(), RatFunc::int(2));
        let s21 = SymFunc::s(part(&[2, 1]));
        assert_eq!(s21.hall_inner(&s21).unwrap(), RatFunc::one());
        assert!(s21.hall_inner(&SymFunc::s(part(&[3]))).unwrap().is_zero());
        assert_eq!(SymFunc::e(4).hall_inner(&SymFunc::s(Partition::column(4))).unwrap(), RatFunc::one());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFunc::e(3).omega().unwrap().convert(Basis::H).unwrap(), SymFunc::h(3));
        let s21 = SymFunc::s(part(&[2, 1]));
        assert_eq!(s21.omega().unwrap(), s21);
    }

    #[test]
    fn text_round_trip() {
        let f = SymFunc::from_terms(
            Basis::S,
            2,
            [(part(&[2]), RatFunc::one()), (part(&[1, 1]), RatFunc::from_poly(MultiPoly::q() + MultiPoly::t()))],
        )
        .unwrap();
        let s = f.serialize();
        assert_eq!(s, "basis=s; deg=2; (2)->1; (1,1)->1*q^1 + 1*t^1");
        assert_eq!(SymFunc::parse(&s).unwrap(), f);
    }
}
