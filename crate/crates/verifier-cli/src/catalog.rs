//! The named checks, their status and parameter ranges per profile.

use std::fmt;
use std::str::FromStr;

use crate::checks::{catalan, combinatorial, operator};
use crate::context::Context;
use crate::report::{Outcome, Params};
use crate::VerifierError;

/// Proved statements must pass; conjectures are only reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Theorem,
    Conjecture,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Operator sides up to degree 4, enumerations up to about 6.
    Quick,
    /// Operator sides up to degree 6, enumerations up to about 8.
    Full,
    None,
}

impl FromStr for Profile {
    type Err = VerifierError;

    fn from_str(s: &str) -> Result<Profile, VerifierError> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            "none" => Ok(Profile::None),
            _ => Err(VerifierError::Config(format!("unknown profile {s:?}; expected quick, full or none"))),
        }
    }
}

/// Ranges in effect for one run: the profile, an optional ceiling on every
/// `n`, and an optional single `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub profile: Profile,
    pub n_max: Option<usize>,
    pub k: Option<usize>,
}

impl Scope {
    pub fn new(profile: Profile) -> Scope {
        Scope { profile, n_max: None, k: None }
    }

    /// The largest `n` for a range that stops at `quick` or `full`.
    pub fn cap(&self, quick: usize, full: usize) -> usize {
        let base = match self.profile {
            Profile::Quick => quick,
            Profile::Full => full,
            Profile::None => 0,
        };
        self.n_max.map_or(base, |m| base.min(m))
    }

    pub fn wants_k(&self, k: usize) -> bool {
        self.k.is_none_or(|want| want == k)
    }
}

pub type CaseFn = fn(&Scope) -> Vec<Params>;
pub type RunFn = fn(&Context, &Params) -> Result<Outcome, VerifierError>;

pub struct CheckSpec {
    pub name: &'static str,
    pub status: Status,
    /// The statement the check tests, in words.
    pub statement: &'static str,
    pub cases: CaseFn,
    pub run: RunFn,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("name", &self.name).field("status", &self.status).finish()
    }
}

/// Every check, sorted by name.
pub static CATALOG: &[CheckSpec] = &[
    CheckSpec {
        name: "battery",
        status: Status::Theorem,
        statement: "H̃_μ from the filling formula is symmetric, pairs to 1 with s_n, has hook products e_j[B_μ - 1], and gives the e_2 expansion",
        cases: operator::battery_cases,
        run: operator::battery,
    },
    CheckSpec {
        name: "bijections",
        status: Status::Theorem,
        statement: "phi, psi and theta are bijections transporting area and dinv statistics; gamma maps OSP(α, k+1) onto dense paths with wdinv 0 and takes minimaj to area",
        cases: combinatorial::bijection_cases,
        run: combinatorial::bijections,
    },
    CheckSpec {
        name: "cat-comp",
        status: Status::Theorem,
        statement: "the compositional refinements Cat'_{n,α} summed over α of n - l give the w^l part of Cat'_n",
        cases: catalan::comp_cases,
        run: catalan::comp,
    },
    CheckSpec {
        name: "cat-eval",
        status: Status::Theorem,
        statement: "Cat_n and Cat'_n at (1,1,0,0) and (1,1,1,1), and the (z,w) and (q,t) symmetries proved by the zeta map",
        cases: catalan::eval_cases,
        run: catalan::eval,
    },
    CheckSpec {
        name: "cat-sym",
        status: Status::Theorem,
        statement: "<Γ ∇ f, s_{k+1,1^{m-k-1}}> = <Γ Δ′_{e_{m-k-1}} f, e_m> for Γ in {1, Δ_{h_1}, Δ_{h_2}} and f = s_λ",
        cases: catalan::sym_cases,
        run: catalan::sym,
    },
    CheckSpec {
        name: "cat-touch",
        status: Status::Conjecture,
        statement: "Cat_{n,r} = Cat'_{n,r} for every number r of diagonal touches (their sum over r is Cat_n)",
        cases: catalan::touch_cases,
        run: catalan::touch,
    },
    CheckSpec {
        name: "cat4",
        status: Status::Conjecture,
        statement: "four-variable Catalan conjecture: Cat_n = Cat'_n, z^k w^l coefficients equal <Δ_{h_k} ∇ e_{n-k}, s_{l+1,1^{n-k-l-1}}> and <Δ_{h_k} Δ′_{e_{n-k-l-1}} e_{n-k}, e_{n-k}>, and are symmetric in k, l",
        cases: catalan::cat4_cases,
        run: catalan::cat4,
    },
    CheckSpec {
        name: "delta-rise",
        status: Status::Conjecture,
        statement: "rise version of the Delta Conjecture: Rise_{n,k} = Δ′_{e_k} e_n as polynomials in N x-variables",
        cases: operator::delta_cases,
        run: operator::delta_rise,
    },
    CheckSpec {
        name: "delta-valley",
        status: Status::Conjecture,
        statement: "valley version of the Delta Conjecture: Val_{n,k} = Δ′_{e_k} e_n as polynomials in N x-variables",
        cases: operator::delta_cases,
        run: operator::delta_valley,
    },
    CheckSpec {
        name: "eh",
        status: Status::Conjecture,
        statement: "partially labeled paths (dinv and dinv′) with the rise product give Δ_{h_l} Δ′_{e_{n-k-1}} e_n",
        cases: catalan::eh_cases,
        run: catalan::eh,
    },
    CheckSpec {
        name: "eh-touch",
        status: Status::Theorem,
        statement: "the touch-refined partially labeled sums add up to the unrefined sum",
        cases: catalan::eh_touch_cases,
        run: catalan::eh_touch,
    },
    CheckSpec {
        name: "eq3",
        status: Status::Theorem,
        statement: "Δ_{e_k} e_n = Δ′_{e_k} e_n + Δ′_{e_{k-1}} e_n, and Δ_{e_k} e_n = 0 for k > n",
        cases: operator::eq3_cases,
        run: operator::eq3,
    },
    CheckSpec {
        name: "k1",
        status: Status::Theorem,
        statement: "Δ_{e_1} e_n = Rise_{n,0} + Rise_{n,1} = Σ_m s_{2^m,1^{n-2m}} Σ_{p=m}^{n-m} [p]_{q,t}",
        cases: operator::k1_cases,
        run: operator::k1,
    },
    CheckSpec {
        name: "llt-sym",
        status: Status::Theorem,
        statement: "Rise_{n,k} is symmetric in x and equals the sum of t^{area} times the LLT polynomials of Stack_{n,k} shapes",
        cases: combinatorial::sym_cases,
        run: combinatorial::llt_sym,
    },
    CheckSpec {
        name: "minimaj-equi",
        status: Status::Theorem,
        statement: "inv, dinv, maj and minimaj are equidistributed on OSP(α, k+1)",
        cases: combinatorial::minimaj_cases,
        run: combinatorial::minimaj_equi,
    },
    CheckSpec {
        name: "omp",
        status: Status::Theorem,
        statement: "the x^α coefficients of Rise(q,0), Rise(0,q), Val(q,0), Val(0,q) are the dinv, maj, inv, minimaj distributions on OSP(α, k+1)",
        cases: combinatorial::omp_cases,
        run: combinatorial::omp,
    },
    CheckSpec {
        name: "q=t=1",
        status: Status::Theorem,
        statement: "Rise_{n,k}(x;1,1) + Rise_{n,k-1}(x;1,1) = binom(n,k)/(k+1) e_n[(k+1)X]",
        cases: combinatorial::q1_cases,
        run: combinatorial::q1,
    },
    CheckSpec {
        name: "schur-pos",
        status: Status::Theorem,
        statement: "q^{k(n-1)-binom(k,2)} Δ_{e_k} e_n at t = 1/q is Schur positive with coefficients in N[q]; [gcd(k+1,n)]_q divides [n choose k]_q",
        cases: operator::schur_pos_cases,
        run: operator::schur_pos,
    },
    CheckSpec {
        name: "t-recip",
        status: Status::Theorem,
        statement: "Δ_f e_n at t = 1/q equals f[[n]_q] e_n[X [k+1]_q] / (q^{k(n-1)} [k+1]_q) for f of degree k",
        cases: operator::t_recip_cases,
        run: operator::t_recip,
    },
    CheckSpec {
        name: "thm-zero",
        status: Status::Theorem,
        statement: "the x_1...x_n coefficients of Rise(q,0), Rise(0,q), Val(q,0), Δ′_{e_k} e_n at t = 0 and at (0,q) agree",
        cases: operator::zero_cases,
        run: operator::thm_zero,
    },
    CheckSpec {
        name: "val-sym",
        status: Status::Conjecture,
        statement: "Val_{n,k} is symmetric in x",
        cases: combinatorial::sym_cases,
        run: combinatorial::val_sym,
    },
    CheckSpec {
        name: "xy",
        status: Status::Theorem,
        statement: "every two-column Yamanouchi path has a Type I or II XY diagram that round-trips, and the t^j s_{2^m,1^{n-2m}} coefficients are Σ_i q^i",
        cases: combinatorial::xy_cases,
        run: combinatorial::xy,
    },
];

pub fn find(name: &str) -> Result<&'static CheckSpec, VerifierError> {
    CATALOG.iter().find(|c| c.name == name).ok_or_else(|| VerifierError::UnknownCheck(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_unique() {
        assert!(CATALOG.windows(2).all(|w| w[0].name < w[1].name));
    }

    #[test]
    fn empty_profile_has_no_cases() {
        let scope = Scope::new(Profile::None);
        assert!(CATALOG.iter().all(|c| (c.cases)(&scope).is_empty()));
    }
}
