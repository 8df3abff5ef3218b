use std::path::Path;

use aydc::algebra::AssociativityPolicy;
use serde::Deserialize;
use thiserror::Error;

pub const CONFIG_ENV: &str = "AYDC_VERIFY_CONFIG";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Value(String),
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Primes for the Taft families.
    pub ps: Vec<usize>,
    /// `ξ = ζ_p^xi_exponent`; ignored for `p = 2`, where `ξ = −1`.
    pub xi_exponent: i64,
    pub associativity: AssociativityConfig,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AssociativityConfig {
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ps: vec![2, 3],
            xi_exponent: 1,
            associativity: AssociativityConfig::default(),
        }
    }
}

impl Default for AssociativityConfig {
    fn default() -> Self {
        let p = AssociativityPolicy::default();
        AssociativityConfig {
            exhaustive_limit: p.exhaustive_limit,
            samples: p.samples,
            seed: p.seed,
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let config: Config = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.ps.is_empty() {
            return Err(ConfigError::Value("ps must list at least one prime".into()));
        }
        if let Some(p) = self.ps.iter().find(|p| !is_prime(**p)) {
            return Err(ConfigError::Value(format!("{p} is not a prime")));
        }
        for p in self.ps.iter().filter(|p| **p != 2) {
            if self.xi_exponent.rem_euclid(*p as i64) == 0 {
                return Err(ConfigError::Value(format!(
                    "xi_exponent {} gives ξ = 1 for p = {p}",
                    self.xi_exponent
                )));
            }
        }
        Ok(())
    }

    pub fn policy(&self) -> AssociativityPolicy {
        AssociativityPolicy {
            exhaustive_limit: self.associativity.exhaustive_limit,
            samples: self.associativity.samples,
            seed: self.associativity.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        assert_eq!(Config::parse("").unwrap(), Config::default());
        let c = Config::parse("ps = [3]\n[associativity]\nsamples = 5\n").unwrap();
        assert_eq!(c.ps, vec![3]);
        assert_eq!(c.associativity.samples, 5);
        assert_eq!(
            c.associativity.exhaustive_limit,
            AssociativityPolicy::default().exhaustive_limit
        );
    }

    #[test]
    fn rejects_bad_values() {
        assert!(matches!(Config::parse("ps = [4]"), Err(ConfigError::Value(_))));
        assert!(matches!(Config::parse("ps = []"), Err(ConfigError::Value(_))));
        assert!(matches!(
            Config::parse("xi_exponent = 3\nps = [3]"),
            Err(ConfigError::Value(_))
        ));
        assert!(Config::parse("xi_exponent = 2\nps = [2, 3]").is_ok());
        assert!(matches!(Config::parse("colour = 1"), Err(ConfigError::Parse(_))));
        assert!(matches!(Config::parse("ps = ["), Err(ConfigError::Parse(_))));
    }
}
