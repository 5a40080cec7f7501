//! Shared state for one run: the Macdonald engine and memoized enumerations.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use exact_algebra::QtZero;
use macdonald_ops::{Config, Macdonald, Op};
use path_combinatorics::{cat4, catmod4, partial_gf, rise_by_k, val_by_k, ContentGf, DinvVariant};
use symfunc_core::SymFunc;

use crate::VerifierError;

/// Computes each value once even when several workers ask for it at the same time.
pub struct Memo<K, V> {
    slots: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Memo<K, V> {
        Memo { slots: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, key: &K, init: impl FnOnce() -> V) -> V {
        let slot = {
            let mut slots = self.slots.lock().expect("memo poisoned");
            Arc::clone(slots.entry(key.clone()).or_default())
        };
        slot.get_or_init(init).clone()
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}

type Shared<T> = Result<Arc<T>, VerifierError>;

pub struct Context {
    pub mac: Macdonald,
    /// Number of x-variables for polynomial comparisons; `None` means `n`.
    pub vars: Option<usize>,
    pub qtint_zero: QtZero,
    rise: Memo<usize, Shared<Vec<ContentGf>>>,
    val: Memo<usize, Shared<Vec<ContentGf>>>,
    cat: Memo<(usize, bool), Shared<exact_algebra::MultiPoly>>,
    partial: Memo<(usize, usize, DinvVariant), Shared<std::collections::BTreeMap<usize, ContentGf>>>,
    operators: Memo<String, Shared<SymFunc>>,
}

impl Context {
    pub fn new(config: Config, vars: Option<usize>, qtint_zero: QtZero) -> Context {
        Context {
            mac: Macdonald::new(config),
            vars,
            qtint_zero,
            rise: Memo::new(),
            val: Memo::new(),
            cat: Memo::new(),
            partial: Memo::new(),
            operators: Memo::new(),
        }
    }

    /// `Rise_{n,k}` for every `k < n`.
    pub fn rise(&self, n: usize) -> Shared<Vec<ContentGf>> {
        self.rise.get(&n, || Ok(Arc::new(rise_by_k(n)?)))
    }

    pub fn val(&self, n: usize) -> Shared<Vec<ContentGf>> {
        self.val.get(&n, || Ok(Arc::new(val_by_k(n)?)))
    }

    /// `Cat_n` (`reading = false`) or `Cat'_n`.
    pub fn catalan(&self, n: usize, reading: bool) -> Shared<exact_algebra::MultiPoly> {
        self.cat.get(&(n, reading), || Ok(Arc::new(if reading { catmod4(n)? } else { cat4(n)? })))
    }

    pub fn partial(
        &self,
        n: usize,
        ell: usize,
        variant: DinvVariant,
    ) -> Shared<std::collections::BTreeMap<usize, ContentGf>> {
        self.partial.get(&(n, ell, variant), || Ok(Arc::new(partial_gf(n, ell, variant)?)))
    }

    /// `ops` applied to `g`, memoized by a textual key.
    pub fn operator(&self, ops: &[Op], g: &SymFunc) -> Shared<SymFunc> {
        let key = format!("{ops:?}|{}", g.serialize());
        self.operators.get(&key, || Ok(Arc::new(self.mac.apply(ops, g)?)))
    }

    /// `Δ′_{e_k} e_n`.
    pub fn delta_prime_e(&self, k: usize, n: usize) -> Shared<SymFunc> {
        self.operator(&[Op::DeltaPrime(SymFunc::e(k))], &SymFunc::e(n))
    }
}
