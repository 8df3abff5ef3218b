//! Lazily built objects shared between checks.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use aydc::double::{ClassicalDouble, Flavor, TwistedDouble};
use aydc::hopf::{DualityFormula, HopfData};
use aydc::taft_double::{SweedlerBlock, TaftDouble};
use aydc::Cyclotomic;

use crate::config::Config;

type Cache<K, V> = Mutex<BTreeMap<K, Arc<V>>>;

/// A named Hopf algebra used across the structural checks.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub hopf: Arc<HopfData>,
}

pub struct Context {
    config: Config,
    taft_doubles: Cache<usize, TaftDouble>,
    twisted: Cache<String, TwistedDouble>,
    classical: Cache<(String, bool), ClassicalDouble>,
    blocks: Cache<i64, SweedlerBlock>,
}

fn cached<K: Ord + Clone, V>(
    cache: &Cache<K, V>,
    key: K,
    build: impl FnOnce() -> Result<V, String>,
) -> Result<Arc<V>, String> {
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(build()?);
    cache.lock().expect("cache lock").insert(key, v.clone());
    Ok(v)
}

impl Context {
    pub fn new(config: Config) -> Self {
        aydc::algebra::AssociativityPolicy::set_current(config.policy());
        Context {
            config,
            taft_doubles: Mutex::default(),
            twisted: Mutex::default(),
            classical: Mutex::default(),
            blocks: Mutex::default(),
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn ps(&self) -> &[usize] {
        &self.config.ps
    }

    /// `ζ_p^xi_exponent`, except that `p = 2` always gives `−1`.
    pub fn xi_exponent(&self, p: usize) -> i64 {
        if p == 2 {
            1
        } else {
            self.config.xi_exponent
        }
    }

    pub fn xi(&self, p: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(p as u32, self.xi_exponent(p))
    }

    pub fn taft(&self, p: usize) -> Result<HopfData, String> {
        HopfData::taft(p, &self.xi(p)).map_err(|e| e.to_string())
    }

    /// Group algebras of `Z/1`, `Z/2`, `Z/3` followed by the configured Taft
    /// algebras.
    pub fn fixtures(&self) -> Result<Vec<Fixture>, String> {
        let mut out = Vec::new();
        for n in 1..=3 {
            let hopf = HopfData::group_algebra(n).map_err(|e| e.to_string())?;
            out.push(Fixture {
                name: format!("kZ/{n}"),
                hopf: Arc::new(hopf),
            });
        }
        for &p in self.ps() {
            out.push(Fixture {
                name: format!("T_{p}"),
                hopf: Arc::new(self.taft(p)?),
            });
        }
        Ok(out)
    }

    pub fn fixture(&self, name: &str) -> Result<Fixture, String> {
        self.fixtures()?
            .into_iter()
            .find(|f| f.name == name)
            .ok_or_else(|| format!("no fixture named {name}"))
    }

    pub fn twisted_double(&self, fixture: &Fixture) -> Result<Arc<TwistedDouble>, String> {
        cached(&self.twisted, fixture.name.clone(), || {
            TwistedDouble::build(&fixture.hopf).map_err(|e| e.to_string())
        })
    }

    pub fn classical_double(&self, fixture: &Fixture, flavor: Flavor) -> Result<Arc<ClassicalDouble>, String> {
        cached(&self.classical, (fixture.name.clone(), flavor == Flavor::Anti), || {
            ClassicalDouble::build(&fixture.hopf, flavor).map_err(|e| e.to_string())
        })
    }

    pub fn taft_double(&self, p: usize) -> Result<Arc<TaftDouble>, String> {
        cached(&self.taft_doubles, p, || {
            TaftDouble::new(p, self.xi_exponent(p), DualityFormula::Displayed).map_err(|e| e.to_string())
        })
    }

    /// `D_s` for Sweedler's algebra, always with `ξ = −1`.
    pub fn sweedler_block(&self, s: i64) -> Result<Arc<SweedlerBlock>, String> {
        cached(&self.blocks, s, || {
            let d = self.taft_double(2)?;
            SweedlerBlock::new(&d, s).map_err(|e| e.to_string())
        })
    }
}
