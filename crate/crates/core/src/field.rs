//! Symbolic ground fields: only the characteristic and which `x^e - 1` split
//! into distinct linear factors matter to the decision procedures.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{is_prime, prime_power};

/// Exponents up to this bound are checked when validating a custom field.
pub const CUSTOM_CHECK_BOUND: u64 = 60;

type SplitFn = Arc<dyn Fn(u64) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum FieldSpec {
    Q,
    R,
    C,
    /// The field with `q` elements.
    Fq(u64),
    /// The algebraic closure of `F_p`.
    FbarP(u64),
    Custom {
        name: String,
        characteristic: u64,
        splits: SplitFn,
    },
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => f.write_str("Q"),
            FieldSpec::R => f.write_str("R"),
            FieldSpec::C => f.write_str("C"),
            FieldSpec::Fq(q) => write!(f, "F{q}"),
            FieldSpec::FbarP(p) => write!(f, "Fbar{p}"),
            FieldSpec::Custom { name, .. } => f.write_str(name),
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

impl FieldSpec {
    pub fn fq(q: u64) -> Result<Self> {
        prime_power(q)
            .map(|_| FieldSpec::Fq(q))
            .ok_or_else(|| Error::InvalidField(format!("F{q}")))
    }

    pub fn fbar(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::FbarP(p))
        } else {
            Err(Error::InvalidField(format!("Fbar{p}")))
        }
    }

    /// A user-described field. `splits` must hold at 1, be closed under
    /// divisors and lcm, and in characteristic `p` fail on multiples of `p`;
    /// these are checked for exponents up to [`CUSTOM_CHECK_BOUND`].
    pub fn custom(
        name: impl Into<String>,
        characteristic: u64,
        splits: impl Fn(u64) -> bool + Send + Sync + 'static,
    ) -> Result<Self> {
        let name = name.into();
        let bad = || Error::InvalidField(name.clone());
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(bad());
        }
        if !splits(1) {
            return Err(bad());
        }
        for e in 1..=CUSTOM_CHECK_BOUND {
            if !splits(e) {
                continue;
            }
            if characteristic != 0 && e % characteristic == 0 {
                return Err(bad());
            }
            for f in 1..=CUSTOM_CHECK_BOUND {
                if e % f == 0 && !splits(f) {
                    return Err(bad());
                }
                let l = e.lcm(&f);
                if splits(f) && l <= CUSTOM_CHECK_BOUND && !splits(l) {
                    return Err(bad());
                }
            }
        }
        Ok(FieldSpec::Custom {
            name,
            characteristic,
            splits: Arc::new(splits),
        })
    }

    /// `0` or a prime.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Q | FieldSpec::R | FieldSpec::C => 0,
            FieldSpec::Fq(q) => prime_power(*q).expect("validated").0,
            FieldSpec::FbarP(p) => *p,
            FieldSpec::Custom { characteristic, .. } => *characteristic,
        }
    }

    /// `x^e - 1` has `e` distinct roots in the field.
    pub fn splits(&self, e: u64) -> bool {
        if e == 0 {
            return false;
        }
        match self {
            FieldSpec::Q | FieldSpec::R => e <= 2,
            FieldSpec::C => true,
            FieldSpec::Fq(q) => (q - 1) % e == 0,
            FieldSpec::FbarP(p) => e.gcd(p) == 1,
            FieldSpec::Custom { splits, .. } => splits(e),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidField(t.to_string());
        match t {
            "Q" => Ok(FieldSpec::Q),
            "R" => Ok(FieldSpec::R),
            "C" => Ok(FieldSpec::C),
            _ => {
                if let Some(rest) = t.strip_prefix("Fbar") {
                    FieldSpec::fbar(rest.parse().map_err(|_| bad())?)
                } else if let Some(rest) = t.strip_prefix('F') {
                    FieldSpec::fq(rest.parse().map_err(|_| bad())?)
                } else {
                    Err(bad())
                }
            }
        }
    }
}
