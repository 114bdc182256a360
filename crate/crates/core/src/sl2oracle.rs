//! Brute-force composition factors of Weyl modules for `SL_2`.
//!
//! Simple modules come from Steinberg's tensor product theorem,
//! `L(lambda) = (x) L(a_i)^{[i]}` over the base-`p` digits `a_i` of
//! `lambda`. Weyl characters are peeled into simple characters by repeatedly
//! removing `ch L(mu)` for the highest remaining weight `mu`. Nothing here
//! touches the sum formula, so it serves as an independent check on it.

use std::collections::BTreeMap;

use crate::weights::PrimeContext;

fn digits(mut lambda: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while lambda > 0 {
        out.push(lambda % p);
        lambda /= p;
    }
    out
}

/// `dim L(lambda) = prod (a_i + 1)`.
pub fn sl2_simple_dim(lambda: u64, ctx: PrimeContext) -> u64 {
    digits(lambda, ctx.p()).iter().map(|a| a + 1).product()
}

/// Formal character as weight -> multiplicity.
type Character = BTreeMap<i64, i64>;

fn simple_character(lambda: u64, ctx: PrimeContext) -> Character {
    let p = ctx.p() as i64;
    let mut ch: Character = BTreeMap::from([(0, 1)]);
    let mut scale = 1i64;
    for a in digits(lambda, ctx.p()) {
        let a = a as i64;
        let mut next = Character::new();
        for (&w, &m) in &ch {
            for k in 0..=a {
                *next.entry(w + scale * (a - 2 * k)).or_default() += m;
            }
        }
        ch = next;
        scale *= p;
    }
    ch
}

fn weyl_character(lambda: u64) -> Character {
    let l = lambda as i64;
    (0..=l).map(|k| (l - 2 * k, 1)).collect()
}

/// Composition factors of `V(lambda)` for `SL_2` in characteristic `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Decomposition {
    pub lambda: u64,
    pub p: u64,
    /// highest weight -> multiplicity
    pub factors: BTreeMap<u64, u64>,
}

impl Sl2Decomposition {
    pub fn length(&self) -> u64 {
        self.factors.values().sum()
    }

    /// `sum multiplicity * dim L`, which must equal `lambda + 1`.
    pub fn total_dim(&self) -> u64 {
        let ctx = PrimeContext::new(self.p).unwrap();
        self.factors.iter().map(|(&mu, &m)| m * sl2_simple_dim(mu, ctx)).sum()
    }
}

pub fn sl2_weyl_factors(lambda: u64, ctx: PrimeContext) -> Sl2Decomposition {
    let mut rest = weyl_character(lambda);
    let mut factors = BTreeMap::new();
    while let Some((&top, &mult)) = rest.iter().next_back() {
        if mult == 0 {
            rest.remove(&top);
            continue;
        }
        assert!(top >= 0 && mult > 0, "character is not a sum of simple characters");
        for (w, m) in simple_character(top as u64, ctx) {
            *rest.entry(w).or_default() -= m * mult;
        }
        *factors.entry(top as u64).or_default() += mult as u64;
        rest.retain(|_, m| *m != 0);
    }
    Sl2Decomposition { lambda, p: ctx.p(), factors }
}

/// Number of composition factors of `V(lambda)`, with multiplicity.
pub fn sl2_exact_length(lambda: u64, ctx: PrimeContext) -> u64 {
    sl2_weyl_factors(lambda, ctx).length()
}
