//! The Jantzen sum formula and the Weyl module length bounds derived from it.
//!
//! For dominant `lambda` the sum formula gives a filtration of `V(lambda)`
//! with `V(lambda) / V(lambda)^1 = L(lambda)` and
//!
//! ```text
//! sum_{i>0} ch V(lambda)^i = sum_{alpha > 0} sum_{0 < mp < <lambda+rho, alpha^vee>} v_p(mp) chi(s_{alpha,mp} . lambda)
//! ```
//!
//! Each character on the right is normalised to `+-chi(mu)` with `mu`
//! dominant and like terms are collected into a [`CharCombo`]. Counting
//! composition factors through that identity gives the recursive bound
//! `Lb(lambda) = 1 + sum c_mu Lb(mu)` of [`length_bound_exact`], which
//! terminates because `d(mu) < d(lambda)` for every surviving `mu`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::{floor_log, floor_scaled_log, geometric_sum};
use crate::charnorm::{normalize_char, NormalizedChar};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootSystemSpec, Weight};
use crate::weights::{restricted_max_d, PrimeContext};

/// `v_p(x)` for `x >= 1`.
pub fn p_valuation(x: i64, p: u64) -> Result<u32> {
    if x <= 0 {
        return Err(Error::Domain(format!("p-valuation needs a positive argument, got {x}")));
    }
    let p = p as i64;
    let (mut x, mut e) = (x, 0);
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    Ok(e)
}

/// `b(lambda) = <lambda + rho, alpha_0^vee>`.
pub fn b_lambda(rs: &RootSystem, lam: &Weight) -> i64 {
    rs.positive_roots()[rs.alpha_zero()].pair(&(lam + rs.rho()))
}

/// One `(alpha, m)` summand of the sum formula before collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub root: usize,
    pub m: i64,
    /// `v_p(mp)`
    pub valuation: u32,
    /// `s_{alpha,mp} . lambda`
    pub reflected: Weight,
    pub target: NormalizedChar,
}

/// Every summand of the right-hand side, in (root index, m) order.
pub fn jantzen_terms(rs: &RootSystem, lam: &Weight, ctx: PrimeContext) -> Result<Vec<RawTerm>> {
    rs.check_rank(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant { weight: lam.0.clone() });
    }
    let p = ctx.p() as i64;
    let shifted = lam + rs.rho();
    let mut out = Vec::new();
    for (idx, root) in rs.positive_roots().iter().enumerate() {
        let top = root.pair(&shifted);
        let mut m = 1;
        while m * p < top {
            let shift = top - m * p;
            let reflected = lam - &(shift * &root.weight);
            let target = normalize_char(rs, &reflected)?;
            out.push(RawTerm { root: idx, m, valuation: p_valuation(m * p, ctx.p())?, reflected, target });
            m += 1;
        }
    }
    Ok(out)
}

/// A finite signed combination of Weyl characters `chi(mu)`, `mu` dominant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharCombo {
    terms: BTreeMap<Weight, i64>,
}

impl CharCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, mu: Weight, coeff: i64) {
        debug_assert!(mu.is_dominant());
        match self.terms.entry(mu) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coeff != 0 {
                    e.insert(coeff);
                }
            }
        }
    }

    pub fn get(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of the weight.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Weight, i64)> for CharCombo {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut c = CharCombo::new();
        for (w, k) in iter {
            c.add(w, k);
        }
        c
    }
}

/// `{"terms": [{"weight": [..], "coeff": n}, ..]}`, sorted by weight.
impl Serialize for CharCombo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<Weight, i64>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Term<'a> {
                    weight: &'a Weight,
                    coeff: i64,
                }
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (weight, &coeff) in self.0 {
                    seq.serialize_element(&Term { weight, coeff })?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("CharCombo", 1)?;
        st.serialize_field("terms", &Terms(&self.terms))?;
        st.end()
    }
}

/// Collect the raw summands into a combination of dominant characters.
pub fn collect_terms(terms: &[RawTerm]) -> CharCombo {
    terms
        .iter()
        .filter_map(|t| match &t.target {
            NormalizedChar::Zero => None,
            NormalizedChar::Signed { sign, mu } => Some((mu.clone(), *sign as i64 * t.valuation as i64)),
        })
        .collect()
}

/// The collected right-hand side of the sum formula at `lam`.
pub fn jantzen_sum(rs: &RootSystem, lam: &Weight, ctx: PrimeContext) -> Result<CharCombo> {
    Ok(collect_terms(&jantzen_terms(rs, lam, ctx)?))
}

/// Memo table for [`length_bound_exact`], keyed by (type, weight, p).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LengthCache {
    entries: HashMap<(RootSystemSpec, Weight, u64), BigUint>,
}

impl LengthCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, spec: RootSystemSpec, lam: &Weight, p: u64) -> Option<&BigUint> {
        self.entries.get(&(spec, lam.clone(), p))
    }

    pub fn insert(&mut self, spec: RootSystemSpec, lam: Weight, p: u64, value: BigUint) {
        self.entries.insert((spec, lam, p), value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by (type, p, weight).
    pub fn sorted_entries(&self) -> Vec<(RootSystemSpec, &Weight, u64, &BigUint)> {
        let mut v: Vec<_> = self.entries.iter().map(|((s, w, p), b)| (*s, w, *p, b)).collect();
        v.sort_by(|a, b| (a.0, a.2, a.1).cmp(&(b.0, b.2, b.1)));
        v
    }
}

/// Recursive upper bound on the composition length of `V(lam)`:
/// `Lb(lam) = 1 + sum_mu c_mu Lb(mu)` over the collected sum formula.
///
/// Negative coefficients do occur (for instance `A_3`, `p = 3`,
/// `lam = (1,2,1)` gives `chi(0,2,0) - chi(0)`). Only positive coefficients
/// are counted, which keeps the result an upper bound.
pub fn length_bound_exact(
    rs: &RootSystem,
    lam: &Weight,
    ctx: PrimeContext,
    cache: &mut LengthCache,
) -> Result<BigUint> {
    if let Some(v) = cache.get(rs.spec(), lam, ctx.p()) {
        return Ok(v.clone());
    }
    let combo = jantzen_sum(rs, lam, ctx)?;
    let mut total = BigUint::from(1u32);
    for (mu, c) in combo.iter() {
        if c > 0 {
            total += length_bound_exact(rs, mu, ctx, cache)? * c as u64;
        }
    }
    cache.insert(rs.spec(), lam.clone(), ctx.p(), total.clone());
    Ok(total)
}

/// `sum_{i=0}^{d} z^i` with `z = d * floor(log_p(b - 1))`.
pub fn length_bound_closed(d: u64, b: i64, p: u64) -> Result<BigUint> {
    if b < 2 {
        return Err(Error::Domain(format!("closed length bound needs b >= 2, got {b}")));
    }
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let z = d * floor_log(p, (b - 1) as u64) as u64;
    Ok(geometric_sum(&BigUint::from(z), d))
}

/// `z_p` for restricted weights: `floor(h^3/6 (1 + log_p(h - 1)))`, or
/// `floor(h^3/6)` when `p >= h`.
pub fn restricted_z(h: u64, p: u64) -> u64 {
    if p >= h {
        h * h * h / 6
    } else {
        floor_scaled_log(h * h * h, 6, p, h - 1)
    }
}

/// Coarse bound on `l(V(lambda))` for every `lambda` in `X_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedLengthBound {
    pub h: u64,
    pub p: u64,
    /// `floor(h^3/6)`, the number of factors in the geometric sum.
    pub exponent: u64,
    pub z: u64,
    #[serde(serialize_with = "crate::cli::ser_big")]
    pub bound: BigUint,
    /// The maximum of `d(lambda)` over `X_1`, available when `p >= h`.
    pub max_d: Option<u64>,
    /// The same sum truncated at `max_d` terms.
    #[serde(serialize_with = "crate::cli::ser_big_opt")]
    pub sharper: Option<BigUint>,
}

pub fn restricted_length_bound(rs: &RootSystem, ctx: PrimeContext) -> RestrictedLengthBound {
    let h = rs.coxeter_number();
    let p = ctx.p();
    let exponent = h * h * h / 6;
    let z = restricted_z(h, p);
    let zb = BigUint::from(z);
    let bound = geometric_sum(&zb, exponent);
    let max_d = restricted_max_d(rs, ctx).ok();
    let sharper = max_d.map(|d| geometric_sum(&zb, d));
    RestrictedLengthBound { h, p, exponent, z, bound, max_d, sharper }
}

/// Total dimension carried by a list of raw terms, `sum v_p(mp) sign dim`.
pub fn raw_dimension(rs: &RootSystem, terms: &[RawTerm]) -> Result<num_bigint::BigInt> {
    let mut total = num_bigint::BigInt::zero();
    for t in terms {
        if let NormalizedChar::Signed { sign, mu } = &t.target {
            let dim = crate::charnorm::weyl_dim(rs, mu)?;
            total += num_bigint::BigInt::from(dim) * (*sign as i64 * t.valuation as i64);
        }
    }
    Ok(total)
}

/// `sum c_mu dim V(mu)` over a collected combination.
pub fn combo_dimension(rs: &RootSystem, combo: &CharCombo) -> Result<num_bigint::BigInt> {
    let mut total = num_bigint::BigInt::zero();
    for (mu, c) in combo.iter() {
        total += num_bigint::BigInt::from(crate::charnorm::weyl_dim(rs, mu)?) * c;
    }
    Ok(total)
}
