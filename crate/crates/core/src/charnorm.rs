//! Dominant normalisation of Weyl characters and the Weyl dimension formula.
//!
//! `chi(nu)` is extended to all weights by `chi(w . nu) = det(w) chi(nu)`; it
//! vanishes when `nu + rho` lies on a reflecting hyperplane.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NormalizedChar {
    Zero,
    Signed { sign: i8, mu: Weight },
}

impl NormalizedChar {
    pub fn sign(&self) -> i64 {
        match self {
            NormalizedChar::Zero => 0,
            NormalizedChar::Signed { sign, .. } => *sign as i64,
        }
    }

    pub fn target(&self) -> Option<&Weight> {
        match self {
            NormalizedChar::Zero => None,
            NormalizedChar::Signed { mu, .. } => Some(mu),
        }
    }
}

/// Write `chi(nu)` as `0` or `+-chi(mu)` with `mu` dominant.
///
/// Scans the simple roots from the lowest index. A zero coordinate of
/// `nu + rho` means `chi(nu) = 0`; a negative one is removed by the dot
/// action of that simple reflection, flipping the sign.
pub fn normalize_char(rs: &RootSystem, nu: &Weight) -> Result<NormalizedChar> {
    rs.check_rank(nu)?;
    let mut x = nu + rs.rho();
    let mut sign: i8 = 1;
    'scan: loop {
        for i in 0..rs.rank() {
            if x[i] == 0 {
                return Ok(NormalizedChar::Zero);
            }
            if x[i] < 0 {
                x = rs.simple_reflection(&x, i);
                sign = -sign;
                continue 'scan;
            }
        }
        break;
    }
    Ok(NormalizedChar::Signed { sign, mu: &x - rs.rho() })
}

/// `dim V(lam) = prod <lam + rho, alpha^vee> / prod <rho, alpha^vee>`, exact.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<BigUint> {
    rs.check_rank(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant { weight: lam.0.clone() });
    }
    let shifted = lam + rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for root in rs.positive_roots() {
        num *= root.pair(&shifted) as u64;
        den *= root.pair(rs.rho()) as u64;
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension formula produced a non-integer");
    Ok(q)
}
