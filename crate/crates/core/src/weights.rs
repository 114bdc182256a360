//! Weight combinatorics for the affine Weyl group `W_p`: restrictedness, the
//! dot action of affine reflections, alcove depth `d(lambda)` and linkage.

use crate::arith::{is_prime, next_prime_at_least};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// The characteristic `p` of the ground field.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeContext {
    p: u64,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeContext { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pi(&self) -> i64 {
        self.p as i64
    }
}

/// How `d(lambda)` treats weights on a wall `<lambda + rho, alpha^vee> = n p`.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq)]
pub enum WallConvention {
    /// `n_alpha` with `<lambda+rho, alpha^vee> = n_alpha p + d_alpha`, `0 < d_alpha <= p`:
    /// a wall point counts with the alcove below it.
    #[default]
    UpperClosure,
    /// `floor(<lambda+rho, alpha^vee> / p)`.
    Floor,
}

pub fn is_dominant(lam: &Weight) -> bool {
    lam.is_dominant()
}

/// `lam` lies in `X_1`: `0 <= lam[i] <= p - 1`.
pub fn is_restricted(lam: &Weight, ctx: PrimeContext) -> bool {
    is_restricted_r(lam, ctx, 1)
}

/// `lam` lies in `X_r`: `0 <= lam[i] <= p^r - 1`.
pub fn is_restricted_r(lam: &Weight, ctx: PrimeContext, r: u32) -> bool {
    let bound = (ctx.p as i128).pow(r);
    lam.coords().iter().all(|&c| c >= 0 && (c as i128) < bound)
}

/// All weights of the given rank with every coordinate in `0..bound`, in
/// lexicographic order.
pub fn box_weights(rank: usize, bound: i64) -> impl Iterator<Item = Weight> {
    let total = (bound.max(0) as u128).pow(rank as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0i64; rank];
        for slot in v.iter_mut().rev() {
            *slot = (idx % bound as u128) as i64;
            idx /= bound as u128;
        }
        Weight(v)
    })
}

/// `s_{alpha, mp} . lam = lam - (<lam + rho, alpha^vee> - m p) alpha`.
pub fn dot_reflect(
    rs: &RootSystem,
    lam: &Weight,
    root_idx: usize,
    m: i64,
    ctx: PrimeContext,
) -> Result<Weight> {
    rs.check_rank(lam)?;
    let root = rs.root(root_idx)?;
    let shift = root.pair(&(lam + rs.rho())) - m * ctx.pi();
    Ok(lam - &(shift * &root.weight))
}

/// Alcove depth `d(lambda)` under the upper-closure wall convention.
pub fn d_lambda(rs: &RootSystem, lam: &Weight, ctx: PrimeContext) -> Result<u64> {
    d_lambda_with(rs, lam, ctx, WallConvention::UpperClosure)
}

pub fn d_lambda_with(
    rs: &RootSystem,
    lam: &Weight,
    ctx: PrimeContext,
    conv: WallConvention,
) -> Result<u64> {
    rs.check_rank(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant { weight: lam.0.clone() });
    }
    let shifted = lam + rs.rho();
    let p = ctx.pi();
    let total: i64 = rs
        .positive_roots()
        .iter()
        .map(|root| {
            let x = root.pair(&shifted);
            match conv {
                WallConvention::UpperClosure => (x - 1).div_euclid(p),
                WallConvention::Floor => x.div_euclid(p),
            }
        })
        .sum();
    Ok(total as u64)
}

/// Maximum of `d(lambda)` over `X_1`, attained at `(p - 2) rho`. Requires `p >= h`.
pub fn restricted_max_d(rs: &RootSystem, ctx: PrimeContext) -> Result<u64> {
    let h = rs.coxeter_number();
    if ctx.p < h {
        return Err(Error::PrimeBelowCoxeter { p: ctx.p, h });
    }
    let lam = (ctx.pi() - 2) * rs.rho();
    d_lambda(rs, &lam, ctx)
}

/// [`restricted_max_d`] at the smallest prime `p >= h`.
pub fn restricted_max_d_default(rs: &RootSystem) -> u64 {
    let ctx = PrimeContext::new(next_prime_at_least(rs.coxeter_number())).unwrap();
    restricted_max_d(rs, ctx).expect("p >= h by construction")
}

/// One of the `rank + 1` walls of the fundamental alcove.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
enum Wall {
    Simple(usize),
    Affine,
}

/// The representative of `W_p . lam` in the closed fundamental alcove
/// `{mu : 0 <= <mu + rho, alpha^vee> <= p for all alpha > 0}`.
///
/// Each step reflects in the most violated wall of the fundamental alcove
/// (ties go to the lower root index, simple walls before the affine wall).
/// Reflecting in a wall `H` that strictly separates `lam + rho` from the
/// alcove removes exactly `H` from the set of affine hyperplanes separating
/// the point from the alcove, so [`separating_hyperplanes`] drops by one per
/// step.
pub fn linkage_rep(rs: &RootSystem, lam: &Weight, ctx: PrimeContext) -> Result<Weight> {
    rs.check_rank(lam)?;
    let p = ctx.pi();
    let a0 = rs.alpha_zero();
    let mut cur = lam.clone();
    loop {
        let x = &cur + rs.rho();
        let mut worst: Option<(i64, usize, Wall)> = None;
        let mut consider = |deficit: i64, idx: usize, wall: Wall| {
            if deficit <= 0 {
                return;
            }
            let better = match worst {
                None => true,
                Some((d, i, _)) => deficit > d || (deficit == d && idx < i),
            };
            if better {
                worst = Some((deficit, idx, wall));
            }
        };
        for i in 0..rs.rank() {
            consider(-x[i], i, Wall::Simple(i));
        }
        consider(rs.positive_roots()[a0].pair(&x) - p, a0, Wall::Affine);
        match worst {
            None => return Ok(cur),
            Some((_, _, Wall::Simple(i))) => cur = dot_reflect(rs, &cur, i, 0, ctx)?,
            Some((_, _, Wall::Affine)) => cur = dot_reflect(rs, &cur, a0, 1, ctx)?,
        }
    }
}

/// Number of affine hyperplanes `<x, alpha^vee> = m p` strictly separating
/// `x = lam + rho` from the open fundamental alcove. Zero exactly on the
/// closed fundamental alcove.
pub fn separating_hyperplanes(rs: &RootSystem, lam: &Weight, ctx: PrimeContext) -> u64 {
    let x = lam + rs.rho();
    let p = ctx.pi();
    rs.positive_roots()
        .iter()
        .map(|root| {
            let v = root.pair(&x);
            if v > p {
                // m = 1 .. with m p < v
                (v - 1).div_euclid(p) as u64
            } else if v < 0 {
                // m = 0, -1, .. with m p > v
                ((-v) + p - 1).div_euclid(p) as u64
            } else {
                0
            }
        })
        .sum()
}

/// `lam` and `mu` lie in the same `W_p` dot-orbit.
pub fn linked(rs: &RootSystem, lam: &Weight, mu: &Weight, ctx: PrimeContext) -> Result<bool> {
    Ok(linkage_rep(rs, lam, ctx)? == linkage_rep(rs, mu, ctx)?)
}
