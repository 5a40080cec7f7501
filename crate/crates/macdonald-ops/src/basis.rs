//! Per-degree data for solving in the `H̃` basis.
//!
//! The `H̃_μ` are orthogonal for the star scalar product
//! `⟨p_λ, p_ρ⟩_* ∝ δ_{λρ} ε_ρ z_ρ Π_i (1 - q^{ρ_i})(1 - t^{ρ_i})`, so the coefficient
//! of `H̃_μ` in `f` is `⟨f, H̃_μ⟩_* / ⟨H̃_μ, H̃_μ⟩_*`. Orthogonality is checked when
//! the data is built, and each norm is checked to be a constant multiple of
//! `Π_c (q^{a} - t^{l+1})(q^{a+1} - t^{l})`. That product is kept factored into
//! atoms `Φ_d(q^{a'}, t^{b'})` so that a common denominator for all `μ` is
//! cheap to form and to divide back out.

use std::collections::{BTreeMap, HashMap};

use exact_algebra::{cyclotomic, BigRational, Monomial, MultiPoly, RatFunc, ZPoly};
use num_traits::ToPrimitive;
use symfunc_core::{plethysm_poly, Basis, Partition, SymFunc};

use crate::cells::{bmu_minus_one, cells};
use crate::MacError;

/// `Φ_d(q^{a}, t^{b})` in homogenized form, keyed `(d, a, b)` with `gcd(a, b) = 1`.
type AtomKey = (u32, u32, u32);

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Atoms whose product is `q^a - t^b` (not both exponents zero).
fn atoms_of(a: u32, b: u32) -> Vec<AtomKey> {
    let g = gcd(a, b);
    (1..=g).filter(|d| g.is_multiple_of(*d)).map(|d| (d, a / g, b / g)).collect()
}

fn atom_poly(&(d, a, b): &AtomKey) -> ZPoly {
    let phi = cyclotomic(d);
    let deg = phi.degree_in(exact_algebra::Var::Q);
    ZPoly::from_terms((0..=deg).filter_map(|i| {
        let c = phi.coefficient(&Monomial::qt(i, 0));
        let c = c.to_integer().to_i128()?;
        Some(((i * a) as usize, ((deg - i) * b) as usize, c))
    }))
}

pub(crate) fn rational_to_i128(r: &BigRational) -> Option<i128> {
    if r.is_integer() {
        r.to_integer().to_i128()
    } else {
        None
    }
}

fn lcm_i128(a: i128, b: i128) -> i128 {
    let (mut x, mut y) = (a.abs(), b.abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    (a.abs() / x).checked_mul(b.abs()).expect("lcm overflow")
}

fn to_zpoly(c: &RatFunc, what: &str) -> Result<ZPoly, MacError> {
    c.as_poly()
        .as_ref()
        .and_then(ZPoly::from_poly)
        .ok_or_else(|| MacError::Singular(format!("{what} is not an integral polynomial: {c}")))
}

/// `f = Σ_ρ a_ρ p_ρ / (scale · den)` with integral `a_ρ`, paired against each `H̃_μ`.
#[derive(Debug, Clone)]
pub struct Numerators {
    /// `n! Σ_ρ ε_ρ Π_ρ a_ρ ⟨H̃_μ, p_ρ⟩`, indexed like the partitions of the degree.
    pub num: Vec<ZPoly>,
    pub scale: i128,
    pub den: MultiPoly,
}

/// Everything needed to move between the Schur and `H̃` bases in one degree.
pub struct DegreeBasis {
    pub n: usize,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `H̃_μ` in the monomial basis.
    pub htilde: Vec<SymFunc>,
    /// `schur[μ][λ]`: coefficient of `s_λ` in `H̃_μ`.
    schur: Vec<Vec<ZPoly>>,
    /// `pairing[μ][ρ] = ⟨H̃_μ, p_ρ⟩`.
    pairing: Vec<Vec<ZPoly>>,
    /// `ε_ρ n! Π_ρ`.
    weight: Vec<ZPoly>,
    /// `z_ρ`.
    z: Vec<i128>,
    /// Norm of `H̃_μ` divided by its atom product.
    kappa: Vec<i128>,
    atom_polys: BTreeMap<AtomKey, ZPoly>,
    /// Atom multiplicities of the common denominator.
    common: BTreeMap<AtomKey, u32>,
    common_poly: ZPoly,
    /// Common denominator over the atom product of `μ`.
    cofactor: Vec<ZPoly>,
    kappa_lcm: i128,
}

impl DegreeBasis {
    /// Builds the solve data from monomial expansions and checks the structural
    /// identities the solve relies on.
    pub fn new(n: usize, htilde: Vec<SymFunc>) -> Result<DegreeBasis, MacError> {
        let parts = Partition::all(n);
        assert_eq!(parts.len(), htilde.len(), "one expansion per partition");
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut schur = Vec::with_capacity(parts.len());
        let mut mono = Vec::with_capacity(parts.len());
        for h in &htilde {
            let s = h.convert(Basis::S)?;
            let m = h.convert(Basis::M)?;
            schur.push(
                parts.iter().map(|l| to_zpoly(&s.coeff(l), "a Schur coefficient")).collect::<Result<Vec<_>, _>>()?,
            );
            mono.push(
                parts.iter().map(|l| to_zpoly(&m.coeff(l), "a monomial coefficient")).collect::<Result<Vec<_>, _>>()?,
            );
        }

        // ⟨m_λ, p_ρ⟩ is the coefficient of h_λ in p_ρ.
        let mut h_in_p = Vec::with_capacity(parts.len());
        for rho in &parts {
            let ph = SymFunc::basis_element(Basis::P, rho.clone()).convert(Basis::H)?;
            let row: Vec<i128> = parts
                .iter()
                .map(|l| {
                    ph.coeff(l)
                        .as_poly()
                        .and_then(|p| p.constant_value())
                        .and_then(|c| rational_to_i128(&c))
                        .expect("power sums are integral in the h basis")
                })
                .collect();
            h_in_p.push(row);
        }
        let pairing: Vec<Vec<ZPoly>> = mono
            .iter()
            .map(|row| {
                h_in_p
                    .iter()
                    .map(|hp| {
                        let mut acc = ZPoly::zero();
                        for (c, &k) in row.iter().zip(hp) {
                            if k != 0 {
                                acc += &c.scale(k);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();

        let nfact: i128 = (1..=n as i128).product();
        let mut weight = Vec::new();
        let mut z = Vec::new();
        for rho in &parts {
            let mut pi = ZPoly::constant(rho.sign() as i128 * nfact);
            for &k in rho.parts() {
                let one_minus = |q: bool| {
                    let (a, b) = if q { (k, 0) } else { (0, k) };
                    &ZPoly::one() - &ZPoly::monomial(a, b, 1)
                };
                pi = &(&pi * &one_minus(true)) * &one_minus(false);
            }
            weight.push(pi);
            z.push(rho.z().to_i128().expect("small z"));
        }

        let mut atom_polys = BTreeMap::new();
        let mut mults: Vec<BTreeMap<AtomKey, u32>> = Vec::new();
        for mu in &parts {
            let mut m = BTreeMap::new();
            for c in cells(mu) {
                let (a, l) = (c.arm as u32, c.leg as u32);
                for key in atoms_of(a, l + 1).into_iter().chain(atoms_of(a + 1, l)) {
                    *m.entry(key).or_insert(0) += 1;
                    atom_polys.entry(key).or_insert_with(|| atom_poly(&key));
                }
            }
            mults.push(m);
        }
        let mut common: BTreeMap<AtomKey, u32> = BTreeMap::new();
        for m in &mults {
            for (&k, &e) in m {
                let slot = common.entry(k).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        let product = |exps: &mut dyn Iterator<Item = (AtomKey, u32)>| {
            exps.fold(ZPoly::one(), |acc, (k, e)| &acc * &atom_polys[&k].pow(e))
        };
        let common_poly = product(&mut common.iter().map(|(&k, &e)| (k, e)));
        let cofactor: Vec<ZPoly> = mults
            .iter()
            .map(|m| product(&mut common.iter().map(|(&k, &e)| (k, e - m.get(&k).copied().unwrap_or(0)))))
            .collect();

        let mut basis = DegreeBasis {
            n,
            parts,
            index,
            htilde,
            schur,
            pairing,
            weight,
            z,
            kappa: Vec::new(),
            atom_polys,
            common,
            common_poly,
            cofactor,
            kappa_lcm: 1,
        };

        // Norms and orthogonality.
        let count = basis.parts.len();
        #[allow(clippy::needless_range_loop)]
        for i in 0..count {
            let norm = basis.gram(i, i);
            let atoms: ZPoly = mults[i].iter().fold(ZPoly::one(), |acc, (k, &e)| &acc * &basis.atom_polys[k].pow(e));
            let kappa = norm
                .div_exact(&atoms)
                .filter(|k| k.degrees() == (0, 0) && !k.is_zero())
                .map(|k| k.coeff(0, 0))
                .ok_or_else(|| MacError::Validation {
                    mu: basis.parts[i].clone(),
                    identity: "star norm is a constant multiple of the arm-leg product".into(),
                })?;
            basis.kappa.push(kappa);
            basis.kappa_lcm = lcm_i128(basis.kappa_lcm, kappa);
            for j in 0..i {
                if !basis.gram(i, j).is_zero() {
                    return Err(MacError::Validation {
                        mu: basis.parts[i].clone(),
                        identity: format!("star orthogonality against H̃{}", basis.parts[j]),
                    });
                }
            }
        }
        Ok(basis)
    }

    /// `n! ⟨H̃_μ, H̃_ν⟩_*`.
    fn gram(&self, i: usize, j: usize) -> ZPoly {
        let mut acc = ZPoly::zero();
        for (r, w) in self.weight.iter().enumerate() {
            let term = &(&self.pairing[i][r] * &self.pairing[j][r]) * w;
            acc += &term.div_scalar(self.z[r]).expect("z divides n!");
        }
        acc
    }

    pub fn index(&self, mu: &Partition) -> usize {
        self.index[mu]
    }

    /// Coefficient of `s_λ` in `H̃_μ`.
    pub fn schur_coeff(&self, mu: &Partition, lambda: &Partition) -> MultiPoly {
        self.schur[self.index(mu)][self.index(lambda)].to_poly()
    }

    /// Pairs `f` (degree `n`) against every `H̃_μ`.
    pub fn numerators(&self, f: &SymFunc) -> Result<Numerators, MacError> {
        if f.degree() != self.n {
            return Err(symfunc_core::SymError::DegreeMismatch { left: f.degree(), right: self.n }.into());
        }
        let p = f.convert(Basis::P)?;
        // Common denominator: product of the distinct denominators.
        let mut den = MultiPoly::one();
        let mut seen: Vec<MultiPoly> = Vec::new();
        for (_, c) in p.terms() {
            let d = c.denominator();
            if !d.is_constant() && !seen.contains(d) {
                den = &den * d;
                seen.push(d.clone());
            }
        }
        let mut raw: Vec<(usize, MultiPoly)> = Vec::new();
        for (rho, c) in p.terms() {
            let cofactor =
                den.div_exact(c.denominator()).ok_or_else(|| MacError::Singular("denominator bookkeeping".into()))?;
            raw.push((self.index(rho), c.numerator() * &cofactor));
        }
        let mut scale: i128 = 1;
        for (_, a) in &raw {
            for (_, c) in a.terms() {
                let d = c.denom().to_i128().ok_or_else(|| MacError::Singular("huge denominator".into()))?;
                scale = lcm_i128(scale, d);
            }
        }
        let big_scale = BigRational::from_integer(scale.into());
        let mut num = vec![ZPoly::zero(); self.parts.len()];
        for (r, a) in raw {
            let a = ZPoly::from_poly(&a.scale(&big_scale))
                .ok_or_else(|| MacError::Singular("coefficients must be polynomials in q and t".into()))?;
            let wa = &self.weight[r] * &a;
            for (mu, slot) in num.iter_mut().enumerate() {
                *slot += &(&wa * &self.pairing[mu][r]);
            }
        }
        Ok(Numerators { num, scale, den })
    }

    fn atom_product(&self, exps: &BTreeMap<AtomKey, u32>) -> ZPoly {
        exps.iter().fold(ZPoly::one(), |acc, (k, &e)| &acc * &self.atom_polys[k].pow(e))
    }

    /// `num / (scale · den · common)` with atoms cancelled where they divide.
    fn settle(&self, num: ZPoly, scale: i128, den: &MultiPoly) -> Result<RatFunc, MacError> {
        let (num, rest) = match num.div_exact(&self.common_poly) {
            Some(q) => (q, MultiPoly::one()),
            None => {
                let mut num = num;
                let mut left = self.common.clone();
                for (key, e) in left.iter_mut() {
                    let atom = &self.atom_polys[key];
                    while *e > 0 {
                        match num.div_exact(atom) {
                            Some(q) => {
                                num = q;
                                *e -= 1;
                            }
                            None => break,
                        }
                    }
                }
                (num, self.atom_product(&left).to_poly())
            }
        };
        let d = (&rest * den).scale(&BigRational::from_integer(scale.into()));
        if d.is_one() {
            return Ok(RatFunc::from_poly(num.to_poly()));
        }
        Ok(RatFunc::new(num.to_poly(), d)?)
    }

    /// `H̃`-coefficients of the function paired in `nums`.
    pub fn coefficients(&self, nums: &Numerators) -> Result<BTreeMap<Partition, RatFunc>, MacError> {
        let mut out = BTreeMap::new();
        for (i, mu) in self.parts.iter().enumerate() {
            let scaled = &(&nums.num[i] * &self.cofactor[i]).scale(self.kappa_lcm / self.kappa[i]);
            let c = self.settle(scaled.clone(), nums.scale * self.kappa_lcm, &nums.den)?;
            if !c.is_zero() {
                out.insert(mu.clone(), c);
            }
        }
        Ok(out)
    }

    /// `Σ_μ c_μ E_μ H̃_μ` in the Schur basis, where `c_μ` come from `nums` and
    /// `E_μ` are polynomial eigenvalues.
    pub fn recombine(&self, nums: &Numerators, eigen: &[ZPoly]) -> Result<SymFunc, MacError> {
        let weighted: Vec<ZPoly> = (0..self.parts.len())
            .map(|i| {
                if nums.num[i].is_zero() || eigen[i].is_zero() {
                    return ZPoly::zero();
                }
                (&(&nums.num[i] * &eigen[i]) * &self.cofactor[i]).scale(self.kappa_lcm / self.kappa[i])
            })
            .collect();
        let mut out = SymFunc::zero(Basis::S, self.n);
        for (l, lambda) in self.parts.iter().enumerate() {
            let mut total = ZPoly::zero();
            for (i, w) in weighted.iter().enumerate() {
                if !w.is_zero() && !self.schur[i][l].is_zero() {
                    total += &(w * &self.schur[i][l]);
                }
            }
            if total.is_zero() {
                continue;
            }
            let c = self.settle(total, nums.scale * self.kappa_lcm, &nums.den)?;
            out.add_term(lambda.clone(), &c);
        }
        Ok(out)
    }

    /// The hook and row identities for one `μ`; returns the first failure.
    pub fn schur_battery(&self, mu: &Partition) -> Result<(), MacError> {
        let i = self.index(mu);
        let n = self.n;
        let fail = |identity: String| MacError::Validation { mu: mu.clone(), identity };
        if !self.schur[i][self.index(&Partition::row(n))].is_one() {
            return Err(fail(format!("<H̃, s_{n}> = 1")));
        }
        let b = bmu_minus_one(mu);
        for k in 0..n {
            let hook = Partition::hook(k + 1, n - k - 1);
            let expect = plethysm_poly(&SymFunc::e(n - k - 1), &b)?;
            if self.schur[i][self.index(&hook)].to_poly() != expect {
                return Err(fail(format!("<H̃, s{hook}> = e_{}[B_μ - 1]", n - k - 1)));
            }
        }
        Ok(())
    }
}
