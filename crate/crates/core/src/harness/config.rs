use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::claims::CampaignParams;
use super::report::read_text;

/// Settings read from a plain `key = value` file. Blank lines and lines
/// starting with `#` are ignored.
///
/// Keys: `guard`, `budget`, `n_min`, `n_max`, `eq_n_max`, `seed`,
/// `samples`, `timing`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub guard: Option<usize>,
    pub budget: Option<u64>,
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    pub eq_n_max: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub timing: Option<bool>,
}

fn value<T: FromStr>(line: usize, key: &str, raw: &str) -> Result<Option<T>> {
    raw.parse().map(Some).map_err(|_| {
        Error::InvalidInput(format!("config line {line}: bad value `{raw}` for `{key}`"))
    })
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        read_text(path)?.parse()
    }

    /// Overwrites the fields of `params` that this config sets.
    pub fn apply(&self, params: &mut CampaignParams) {
        if let Some(x) = self.guard {
            params.guard = x;
        }
        if let Some(x) = self.budget {
            params.budget = x;
        }
        if let Some(x) = self.n_min {
            params.n_min = x;
        }
        if let Some(x) = self.n_max {
            params.n_max = x;
        }
        if let Some(x) = self.eq_n_max {
            params.eq_n_max = x;
        }
        if let Some(x) = self.seed {
            params.seed = x;
        }
        if let Some(x) = self.samples {
            params.samples = x;
        }
        if let Some(x) = self.timing {
            params.timing = x;
        }
    }
}

impl FromStr for Config {
    type Err = Error;

    fn from_str(text: &str) -> Result<Config> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, val) = line.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("config line {}: expected key = value", i + 1))
            })?;
            let (key, val) = (key.trim(), val.trim());
            let at = i + 1;
            match key {
                "guard" => c.guard = value(at, key, val)?,
                "budget" => c.budget = value(at, key, val)?,
                "n_min" => c.n_min = value(at, key, val)?,
                "n_max" => c.n_max = value(at, key, val)?,
                "eq_n_max" => c.eq_n_max = value(at, key, val)?,
                "seed" => c.seed = value(at, key, val)?,
                "samples" => c.samples = value(at, key, val)?,
                "timing" => c.timing = value(at, key, val)?,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "config line {at}: unknown key `{key}`"
                    )))
                }
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_applies() {
        let c: Config = "# campaign\nguard = 20\n\nbudget=1000\nn_max = 6\ntiming = true\n"
            .parse()
            .unwrap();
        assert_eq!(c.guard, Some(20));
        let mut p = CampaignParams::default();
        c.apply(&mut p);
        assert_eq!((p.guard, p.budget, p.n_max, p.timing), (20, 1000, 6, true));
        assert_eq!(p.n_min, 1);
    }

    #[test]
    fn rejects_garbage() {
        assert!("guard".parse::<Config>().is_err());
        assert!("colour = red".parse::<Config>().is_err());
        assert!("guard = many".parse::<Config>().is_err());
    }
}
