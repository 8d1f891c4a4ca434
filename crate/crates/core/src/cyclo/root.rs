use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::number::CycNumber;

/// ζ_conductor^exponent, compared by value (after reduction to its exact order).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub conductor: u64,
    pub exponent: u64,
}

impl RootOfUnity {
    pub fn new(conductor: u64, exponent: i64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        RootOfUnity { conductor, exponent: exponent.rem_euclid(conductor as i64) as u64 }
    }

    pub fn one() -> Self {
        RootOfUnity { conductor: 1, exponent: 0 }
    }

    /// -1 as a root of unity.
    pub fn minus_one() -> Self {
        RootOfUnity { conductor: 2, exponent: 1 }
    }

    pub fn order(&self) -> u64 {
        self.conductor / self.exponent.gcd(&self.conductor)
    }

    /// The same root written at conductor equal to its order.
    pub fn reduced(&self) -> RootOfUnity {
        let g = self.exponent.gcd(&self.conductor);
        RootOfUnity { conductor: self.conductor / g, exponent: self.exponent / g }
    }

    /// Rewrite at a conductor that is a multiple of this root's order.
    pub fn at_conductor(&self, m: u64) -> Option<RootOfUnity> {
        let r = self.reduced();
        if !m.is_multiple_of(r.conductor) {
            return None;
        }
        Some(RootOfUnity { conductor: m, exponent: r.exponent * (m / r.conductor) })
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.exponent * (m / self.conductor);
        let b = other.exponent * (m / other.conductor);
        RootOfUnity::new(m, ((a + b) % m) as i64).reduced()
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let m = self.conductor as i128;
        let k = (self.exponent as i128 * e as i128).rem_euclid(m);
        RootOfUnity::new(self.conductor, k as i64).reduced()
    }

    pub fn inv(&self) -> RootOfUnity {
        self.pow(-1)
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// The exact field element, at this root's own conductor.
    pub fn to_cyc(&self) -> CycNumber {
        CycNumber::root(self.conductor, self.exponent as i64)
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        let a = self.reduced();
        let b = other.reduced();
        a.conductor == b.conductor && a.exponent == b.exponent
    }
}

impl Eq for RootOfUnity {}

impl Hash for RootOfUnity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.conductor.hash(state);
        r.exponent.hash(state);
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        match (r.conductor, r.exponent) {
            (1, _) => write!(f, "1"),
            (2, 1) => write!(f, "-1"),
            (m, k) => write!(f, "ζ{m}^{k}"),
        }
    }
}
