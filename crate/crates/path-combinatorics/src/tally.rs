//! Integer tallies of monomials in q, t, z, w.

use std::collections::BTreeMap;

use exact_algebra::{rat, Monomial, MultiPoly, Var};

use crate::PathError;

const VARS: [(Var, &str); 4] = [(Var::Q, "q"), (Var::T, "t"), (Var::Z, "z"), (Var::W, "w")];

/// A polynomial in q, t, z, w with integer coefficients and possibly negative
/// exponents while it is being accumulated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    terms: BTreeMap<[i64; 4], i64>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    /// Adds `c · q^e[0] t^e[1] z^e[2] w^e[3]`.
    pub fn add(&mut self, e: [i64; 4], c: i64) {
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        for (&e, &c) in &other.terms {
            self.add(e, c);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest exponent of each variable, if any term is present.
    pub fn min_exponents(&self) -> Option<[i64; 4]> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |mut acc, e| {
            for i in 0..4 {
                acc[i] = acc[i].min(e[i]);
            }
            acc
        }))
    }

    /// Converts to a polynomial, failing on a negative exponent.
    pub fn to_poly(&self) -> Result<MultiPoly, PathError> {
        let mut out = MultiPoly::zero();
        for (e, &c) in &self.terms {
            let mut m = Monomial::ONE;
            for (i, &(v, name)) in VARS.iter().enumerate() {
                let exp = u32::try_from(e[i]).map_err(|_| PathError::NegativeExponent { var: name, exponent: e[i] })?;
                m = m.with(v, exp);
            }
            out.add_term(m, rat(c));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_and_converts() {
        let mut t = Tally::new();
        t.add([1, 0, 0, 0], 2);
        t.add([0, 1, 0, 0], 1);
        t.add([0, 1, 0, 0], -1);
        assert_eq!(t.to_poly().unwrap(), MultiPoly::q().scale(&rat(2)));
        t.add([-1, 0, 0, 0], 1);
        assert!(matches!(t.to_poly(), Err(PathError::NegativeExponent { var: "q", exponent: -1 })));
        assert_eq!(t.min_exponents(), Some([-1, 0, 0, 0]));
    }
}
