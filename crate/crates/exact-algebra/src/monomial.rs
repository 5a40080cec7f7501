//! Exponent vectors over the fixed variable set q, t, z, w, u, x1, x2, ...

use std::cmp::Ordering;
use std::fmt;

/// Number of scalar variables (q, t, z, w, u) stored before the x-slots.
pub const SCALAR_VARS: usize = 5;
/// Largest supported number of x-variables.
pub const MAX_X_VARS: usize = 11;
const SLOTS: usize = SCALAR_VARS + MAX_X_VARS;

/// A polynomial variable.  `X(i)` is the x-variable with 1-based index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Z,
    W,
    U,
    X(usize),
}

impl Var {
    pub const SCALARS: [Var; SCALAR_VARS] = [Var::Q, Var::T, Var::Z, Var::W, Var::U];

    pub(crate) fn slot(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::Z => 2,
            Var::W => 3,
            Var::U => 4,
            Var::X(i) => {
                assert!((1..=MAX_X_VARS).contains(&i), "x-variable index {i} outside 1..={MAX_X_VARS}");
                SCALAR_VARS + i - 1
            }
        }
    }

    fn from_slot(slot: usize) -> Var {
        match slot {
            0 => Var::Q,
            1 => Var::T,
            2 => Var::Z,
            3 => Var::W,
            4 => Var::U,
            s => Var::X(s - SCALAR_VARS + 1),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::Q => "q".into(),
            Var::T => "t".into(),
            Var::Z => "z".into(),
            Var::W => "w".into(),
            Var::U => "u".into(),
            Var::X(i) => format!("x{i}"),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "q" => Some(Var::Q),
            "t" => Some(Var::T),
            "z" => Some(Var::Z),
            "w" => Some(Var::W),
            "u" => Some(Var::U),
            _ => {
                let idx: usize = name.strip_prefix('x')?.parse().ok()?;
                (1..=MAX_X_VARS).contains(&idx).then_some(Var::X(idx))
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector.  Ordered lexicographically with q > t > z > w > u > x1 > x2 > ...,
/// so `a > b` means `a` comes first in the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; SLOTS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; SLOTS] };

    pub fn var(v: Var) -> Monomial {
        Monomial::ONE.with(v, 1)
    }

    /// Builds `q^a t^b`.
    pub fn qt(a: u32, b: u32) -> Monomial {
        Monomial::ONE.with(Var::Q, a).with(Var::T, b)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            let cur = m.exp(v);
            m = m.with(v, cur + e);
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        u32::from(self.exps[v.slot()])
    }

    pub fn with(mut self, v: Var, e: u32) -> Monomial {
        self.exps[v.slot()] = narrow(e);
        self
    }

    pub fn without(self, v: Var) -> Monomial {
        self.with(v, 0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    /// True if only q and t occur.
    pub fn is_qt_only(&self) -> bool {
        self.exps[2..].iter().all(|&e| e == 0)
    }

    pub fn has_x(&self) -> bool {
        self.exps[SCALAR_VARS..].iter().any(|&e| e != 0)
    }

    /// x-exponents as a vector of length `n`.
    pub fn x_exponents(&self, n: usize) -> Vec<u32> {
        (1..=n).map(|i| self.exp(Var::X(i))).collect()
    }

    pub fn scalar_part(&self) -> Monomial {
        let mut m = *self;
        for e in &mut m.exps[SCALAR_VARS..] {
            *e = 0;
        }
        m
    }

    pub fn x_part(&self) -> Monomial {
        let mut m = *self;
        for e in &mut m.exps[..SCALAR_VARS] {
            *e = 0;
        }
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, &e) in out.exps.iter_mut().zip(other.exps.iter()) {
            *o = o.checked_add(e).expect("monomial exponent overflow");
        }
        out
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = *self;
        for e in out.exps.iter_mut() {
            *e = narrow(u32::from(*e) * k);
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *other;
        for (o, &e) in out.exps.iter_mut().zip(self.exps.iter()) {
            *o = o.checked_sub(e)?;
        }
        Some(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, &e) in out.exps.iter_mut().zip(other.exps.iter()) {
            *o = (*o).min(e);
        }
        out
    }

    /// Nonzero (variable, exponent) pairs in canonical variable order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(s, &e)| (Var::from_slot(s), u32::from(e)))
    }

    pub fn swap_x(&self, i: usize, j: usize) -> Monomial {
        let mut out = *self;
        out.exps.swap(Var::X(i).slot(), Var::X(j).slot());
        out
    }
}

fn narrow(e: u32) -> u16 {
    u16::try_from(e).unwrap_or_else(|_| panic!("monomial exponent {e} overflows the exponent word"))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{v}^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_puts_q_first() {
        let q = Monomial::var(Var::Q);
        let t2 = Monomial::qt(0, 2);
        assert!(q > t2);
        assert!(Monomial::var(Var::U) > Monomial::var(Var::X(1)));
        assert!(Monomial::var(Var::X(1)) > Monomial::var(Var::X(2)));
    }

    #[test]
    fn var_names_round_trip() {
        for v in [Var::Q, Var::T, Var::Z, Var::W, Var::U, Var::X(1), Var::X(11)] {
            assert_eq!(Var::parse(&v.name()), Some(v));
        }
        assert_eq!(Var::parse("x12"), None);
    }

    #[test]
    fn division_and_gcd() {
        let a = Monomial::qt(2, 1);
        let b = Monomial::qt(3, 4);
        assert!(a.divides(&b));
        assert_eq!(a.div(&b), Some(Monomial::qt(1, 3)));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.gcd(&Monomial::qt(0, 5)), Monomial::qt(0, 1));
    }
}
