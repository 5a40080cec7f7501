//! The memoizing front end: builds or loads each degree once and applies
//! products of eigenoperators.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use exact_algebra::{MultiPoly, RatFunc, ZPoly};
use symfunc_core::{plethysm_poly, Basis, MacdonaldBasis, Partition, SymError, SymFunc};

use crate::basis::{DegreeBasis, Numerators};
use crate::cells::{bmu, bmu_minus_one, tmu};
use crate::fillings::{FillingTable, ATTACK};
use crate::{cache, MacError};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "DELTA_VERIFIER_CACHE_DIR";

/// Largest degree handled unless configured otherwise.
pub const DEFAULT_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub cap: usize,
    /// Where `htilde_<n>.txt` files live; `None` keeps everything in memory.
    pub cache_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Config {
        Config { cap: DEFAULT_CAP, cache_dir: None }
    }
}

impl Config {
    /// Default cap, cache directory from the environment if set.
    pub fn from_env() -> Config {
        Config { cap: DEFAULT_CAP, cache_dir: std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from) }
    }
}

/// One factor of a product of eigenoperators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    /// `Δ_f`: eigenvalue `f[B_μ]`.
    Delta(SymFunc),
    /// `Δ′_f`: eigenvalue `f[B_μ - 1]`.
    DeltaPrime(SymFunc),
    /// `∇`: eigenvalue `T_μ`.
    Nabla,
}

impl Op {
    pub fn eigenvalue(&self, mu: &Partition) -> Result<MultiPoly, MacError> {
        Ok(match self {
            Op::Delta(f) => plethysm_poly(f, &bmu(mu))?,
            Op::DeltaPrime(f) => plethysm_poly(f, &bmu_minus_one(mu))?,
            Op::Nabla => MultiPoly::monomial(tmu(mu)),
        })
    }
}

/// Outcome of every battery identity for one degree, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryReport {
    pub degree: usize,
    pub checks: Vec<(String, bool)>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub struct Macdonald {
    config: Config,
    degrees: Mutex<HashMap<usize, Arc<DegreeBasis>>>,
    numerators: Mutex<HashMap<String, Arc<Numerators>>>,
}

impl Default for Macdonald {
    fn default() -> Macdonald {
        Macdonald::new(Config::default())
    }
}

fn filling_expansions(n: usize) -> Vec<(Partition, FillingTable)> {
    let parts = Partition::all(n);
    // Independent shapes; the tables are large enough to be worth a thread each.
    std::thread::scope(|s| {
        let handles: Vec<_> = parts.iter().map(|mu| s.spawn(move || FillingTable::build(mu, ATTACK))).collect();
        parts.iter().cloned().zip(handles.into_iter().map(|h| h.join().expect("filling worker panicked"))).collect()
    })
}

impl Macdonald {
    pub fn new(config: Config) -> Macdonald {
        Macdonald { config, degrees: Mutex::new(HashMap::new()), numerators: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    fn check_cap(&self, n: usize) -> Result<(), MacError> {
        if n > self.config.cap {
            return Err(MacError::DegreeCap { n, cap: self.config.cap });
        }
        Ok(())
    }

    /// Solve data for degree `n`, loaded from the cache, or computed, validated
    /// and then cached.
    pub fn degree(&self, n: usize) -> Result<Arc<DegreeBasis>, MacError> {
        self.check_cap(n)?;
        if let Some(d) = self.degrees.lock().expect("degree memo poisoned").get(&n) {
            return Ok(Arc::clone(d));
        }
        let loaded = match &self.config.cache_dir {
            Some(dir) => cache::load(dir, n)?,
            None => None,
        };
        let basis = match loaded {
            Some(entries) => {
                if entries.iter().map(|(p, _)| p).ne(Partition::all(n).iter()) {
                    return Err(MacError::Cache(format!("{} lists the wrong partitions", cache::file_name(n))));
                }
                let basis = DegreeBasis::new(n, entries.into_iter().map(|(_, f)| f).collect())?;
                validate(&basis)?;
                basis
            }
            None => {
                let tables = filling_expansions(n);
                for (mu, t) in &tables {
                    if t.negative_inv {
                        return Err(MacError::Validation {
                            mu: mu.clone(),
                            identity: "inversion counts are nonnegative".into(),
                        });
                    }
                    if let Some(content) = t.asymmetric_content() {
                        return Err(MacError::Validation {
                            mu: mu.clone(),
                            identity: format!("symmetry in x (content {content:?})"),
                        });
                    }
                }
                let basis = DegreeBasis::new(n, tables.iter().map(|(_, t)| t.to_symfunc()).collect())?;
                validate(&basis)?;
                if let Some(dir) = &self.config.cache_dir {
                    let entries: Vec<_> = basis.parts.iter().cloned().zip(basis.htilde.iter().cloned()).collect();
                    cache::store(dir, n, &entries)?;
                }
                basis
            }
        };
        let basis = Arc::new(basis);
        let mut memo = self.degrees.lock().expect("degree memo poisoned");
        Ok(Arc::clone(memo.entry(n).or_insert(basis)))
    }

    /// Recomputes degree `n` from scratch and reports each battery identity.
    pub fn battery_report(&self, n: usize) -> Result<BatteryReport, MacError> {
        self.check_cap(n)?;
        let tables = filling_expansions(n);
        let mut checks = Vec::new();
        for (mu, t) in &tables {
            checks
                .push((format!("{mu}: symmetric in x_1..x_{n}"), !t.negative_inv && t.asymmetric_content().is_none()));
        }
        let basis = DegreeBasis::new(n, tables.iter().map(|(_, t)| t.to_symfunc()).collect());
        let basis = match basis {
            Ok(b) => b,
            Err(e) => {
                checks.push((format!("star scalar product structure: {e}"), false));
                return Ok(BatteryReport { degree: n, checks });
            }
        };
        checks.push(("star orthogonality and norms".into(), true));
        for mu in &basis.parts {
            let ok = basis.schur_battery(mu);
            checks.push((format!("{mu}: <H̃, s_{n}> = 1 and hook products e_j[B_μ - 1]"), ok.is_ok()));
        }
        if n == 2 {
            checks.push(("e_2 = (H̃(1,1) - H̃(2))/(t - q)".into(), e2_identity(&basis)?));
        }
        Ok(BatteryReport { degree: n, checks })
    }

    /// `H̃_μ` in the monomial basis.
    pub fn htilde(&self, mu: &Partition) -> Result<SymFunc, MacError> {
        let d = self.degree(mu.size())?;
        Ok(d.htilde[d.index(mu)].clone())
    }

    fn numerators_of(&self, f: &SymFunc) -> Result<(Arc<DegreeBasis>, Arc<Numerators>), MacError> {
        let d = self.degree(f.degree())?;
        let key = f.serialize();
        if let Some(n) = self.numerators.lock().expect("numerator memo poisoned").get(&key) {
            return Ok((d, Arc::clone(n)));
        }
        let nums = Arc::new(d.numerators(f)?);
        self.numerators.lock().expect("numerator memo poisoned").insert(key, Arc::clone(&nums));
        Ok((d, nums))
    }

    /// Coefficients `c_μ` with `f = Σ c_μ H̃_μ`; zero coefficients are omitted.
    pub fn expand_in_htilde(&self, f: &SymFunc) -> Result<BTreeMap<Partition, RatFunc>, MacError> {
        let (d, nums) = self.numerators_of(f)?;
        d.coefficients(&nums)
    }

    /// Applies a product of eigenoperators to `g`; the result is in the Schur basis.
    pub fn apply(&self, ops: &[Op], g: &SymFunc) -> Result<SymFunc, MacError> {
        let (d, nums) = self.numerators_of(g)?;
        let mut eigen = Vec::with_capacity(d.parts.len());
        for (i, mu) in d.parts.iter().enumerate() {
            if nums.num[i].is_zero() {
                eigen.push(ZPoly::zero());
                continue;
            }
            let mut e = MultiPoly::one();
            for op in ops {
                e = &e * &op.eigenvalue(mu)?;
            }
            eigen.push(
                ZPoly::from_poly(&e)
                    .ok_or_else(|| MacError::Singular(format!("eigenvalue {e} is not an integral polynomial")))?,
            );
        }
        d.recombine(&nums, &eigen)
    }

    /// Extension point for functions known only through their `H̃` expansion:
    /// `Σ c_μ E_μ H̃_μ` in the Schur basis, with `E_μ` the product of the eigenvalues.
    pub fn apply_to_expansion(
        &self,
        n: usize,
        expansion: &BTreeMap<Partition, RatFunc>,
        ops: &[Op],
    ) -> Result<SymFunc, MacError> {
        let d = self.degree(n)?;
        let mut out = SymFunc::zero(Basis::S, n);
        for (mu, c) in expansion {
            if mu.size() != n {
                return Err(SymError::DegreeMismatch { left: mu.size(), right: n }.into());
            }
            let mut e = RatFunc::from_poly(MultiPoly::one());
            for op in ops {
                e = &e * &RatFunc::from_poly(op.eigenvalue(mu)?);
            }
            let w = c * &e;
            for lambda in &d.parts {
                let k = d.schur_coeff(mu, lambda);
                if !k.is_zero() {
                    out.add_term(lambda.clone(), &w.mul_poly(&k));
                }
            }
        }
        Ok(out)
    }

    pub fn delta(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc, MacError> {
        self.apply(&[Op::Delta(f.clone())], g)
    }

    pub fn delta_prime(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc, MacError> {
        self.apply(&[Op::DeltaPrime(f.clone())], g)
    }

    pub fn nabla(&self, g: &SymFunc) -> Result<SymFunc, MacError> {
        self.apply(&[Op::Nabla], g)
    }

    /// `Δ_{e_k} e_n = Δ′_{e_k} e_n + Δ′_{e_{k-1}} e_n`, and `Δ_{e_k} e_n = 0` when `k > n`.
    pub fn delta_identity_check(&self, n: usize, k: usize) -> Result<bool, MacError> {
        let en = SymFunc::e(n);
        let lhs = self.delta(&SymFunc::e(k), &en)?;
        let mut rhs = self.delta_prime(&SymFunc::e(k), &en)?;
        if k > 0 {
            rhs = rhs.add(&self.delta_prime(&SymFunc::e(k - 1), &en)?)?;
        }
        let vanishing = k <= n || lhs.is_zero();
        Ok(lhs == rhs && vanishing)
    }
}

fn validate(basis: &DegreeBasis) -> Result<(), MacError> {
    for mu in &basis.parts {
        basis.schur_battery(mu)?;
    }
    if basis.n == 2 && !e2_identity(basis)? {
        return Err(MacError::Validation {
            mu: Partition::row(2), identity: "e_2 = (H̃(1,1) - H̃(2))/(t - q)".into()
        });
    }
    Ok(())
}

fn e2_identity(basis: &DegreeBasis) -> Result<bool, MacError> {
    let got = basis.coefficients(&basis.numerators(&SymFunc::e(2))?)?;
    let t_minus_q = &MultiPoly::t() - &MultiPoly::q();
    let inv = RatFunc::new(MultiPoly::one(), t_minus_q)?;
    let mut expected = BTreeMap::new();
    expected.insert(Partition::column(2), inv.clone());
    expected.insert(Partition::row(2), -&inv);
    Ok(got == expected)
}

impl MacdonaldBasis for Macdonald {
    fn htilde_monomial(&self, mu: &Partition) -> Result<SymFunc, SymError> {
        self.htilde(mu).map_err(|e| SymError::Basis(e.to_string()))
    }

    fn monomial_to_htilde(&self, f: &SymFunc) -> Result<SymFunc, SymError> {
        let coeffs = self.expand_in_htilde(f).map_err(|e| SymError::Basis(e.to_string()))?;
        SymFunc::from_terms(Basis::Htilde, f.degree(), coeffs)
    }
}
