use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable holding cap overrides, in the same syntax as `--caps`.
pub const CAPS_ENV: &str = "QUBENCH_CAPS";

/// Size limits for the finite constructions.
///
/// Written as `ground=16,lift=10,families=12`; omitted keys keep their defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest ground set for which the stability space is built.
    pub ground: usize,
    /// Largest ground set whose Hausdorff lift is materialized.
    pub lift: usize,
    /// Largest Cauchy-filter list whose subfamilies are enumerated.
    pub families: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ground: 16,
            lift: 10,
            families: 12,
        }
    }
}

impl Caps {
    /// Defaults overridden by [`CAPS_ENV`] when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(s) => s.parse(),
            Err(std::env::VarError::NotPresent) => Ok(Caps::default()),
            Err(e) => Err(Error::MalformedCaps(e.to_string())),
        }
    }
}

impl FromStr for Caps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::MalformedCaps(format!("`{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::MalformedCaps(format!("`{value}` is not a count")))?;
            if value == 0 {
                return Err(Error::MalformedCaps(format!("{} must be positive", key.trim())));
            }
            match key.trim() {
                "ground" => caps.ground = value,
                "lift" => caps.lift = value,
                "families" => caps.families = value,
                other => return Err(Error::MalformedCaps(format!("unknown key `{other}`"))),
            }
        }
        Ok(caps)
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ground={},lift={},families={}", self.ground, self.lift, self.families)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_partial_overrides() {
        let c: Caps = "lift=6, families=4".parse().unwrap();
        assert_eq!(c, Caps { ground: 16, lift: 6, families: 4 });
        assert_eq!("".parse::<Caps>().unwrap(), Caps::default());
        assert_eq!(c.to_string().parse::<Caps>().unwrap(), c);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["lift", "lift=x", "depth=3", "ground=0", "ground=-1"] {
            assert!(matches!(bad.parse::<Caps>(), Err(Error::MalformedCaps(_))), "{bad}");
        }
    }
}
