//! Explicit upper bounds on `dim H^1(G, V)`.
//!
//! Exponents such as `h^3/6` and `h^2/2` need not be integers. The generic
//! (`h`-only) forms use `D = floor(h^3/6)` factors in the geometric sum and
//! the exponent `E = ceil(h^2/2)`; halves of odd numbers are rounded up. Every
//! value stays an integer upper bound.

use std::fmt;
use std::io::Write;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::{geometric_sum, half_ceil, log2_big};
use crate::error::{Error, Result};
use crate::jantzen::restricted_z;
use crate::rootsys::{Family, RootSystem, RootSystemSpec};
use crate::weights::PrimeContext;

fn check_h(h: u64) -> Result<()> {
    if h < 2 {
        return Err(Error::Domain(format!("Coxeter number must be at least 2, got {h}")));
    }
    Ok(())
}

/// `ceil(h^2 / 2)`.
pub fn generic_exponent(h: u64) -> u32 {
    (h * h).div_ceil(2) as u32
}

/// `ceil(1/2 (h^2 (3h - 3)^3)^e)`.
pub fn finite_group_term(h: u64, e: u32) -> BigUint {
    let base = BigUint::from(h * h) * BigUint::from(3 * h - 3).pow(3);
    half_ceil(&base.pow(e))
}

/// The two competing terms of the main bound: the restricted Weyl length
/// bound `sum_{i=0}^{D} z_p^i` and the finite-group term.
pub fn theorem_a_terms(h: u64, p: u64) -> Result<(BigUint, BigUint)> {
    check_h(h)?;
    PrimeContext::new(p)?;
    let d = h * h * h / 6;
    let z = restricted_z(h, p);
    Ok((geometric_sum(&BigUint::from(z), d), finite_group_term(h, generic_exponent(h))))
}

pub fn theorem_a_bound(h: u64, p: u64) -> Result<BigUint> {
    let (a, b) = theorem_a_terms(h, p)?;
    Ok(a.max(b))
}

/// `max{(2h)^E, ceil(1/2 (h^2 (3h-3)^3)^E)}` with `E = ceil(h^2/2)`.
pub fn theorem_c_bound(h: u64) -> Result<BigUint> {
    check_h(h)?;
    let e = generic_exponent(h);
    let lcf = BigUint::from(2 * h).pow(e);
    Ok(lcf.max(finite_group_term(h, e)))
}

/// `(2h)^{|Phi^+|}`: the Weyl module length bound available once the
/// Lusztig character formula holds for the smallest prime `p_0 >= h`.
pub fn lcf_length_bound(rs: &RootSystem) -> BigUint {
    BigUint::from(2 * rs.coxeter_number()).pow(rs.num_pos_roots() as u32)
}

/// `p^{r |Phi^+|}`, the dimension of the `r`-th Steinberg module.
pub fn steinberg_trivial_bound(rs: &RootSystem, ctx: PrimeContext, r: u32) -> BigUint {
    BigUint::from(ctx.p()).pow(r * rs.num_pos_roots() as u32)
}

/// `|W| + e`, the cross-characteristic bound.
pub fn cross_char_bound(rs: &RootSystem, e: usize) -> Result<BigUint> {
    if e < 1 || e > rs.rank() {
        return Err(Error::Domain(format!("twisted rank must lie in 1..={}, got {e}", rs.rank())));
    }
    Ok(rs.weyl_group_order() + BigUint::from(e))
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Twist {
    Untwisted,
    GraphTwisted,
    ReeSuzuki,
}

impl std::str::FromStr for Twist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "untwisted" => Ok(Twist::Untwisted),
            "graph-twisted" => Ok(Twist::GraphTwisted),
            "ree-suzuki" => Ok(Twist::ReeSuzuki),
            _ => Err(Error::Domain(format!("unknown twist {s:?}"))),
        }
    }
}

/// A finite group `G_sigma` with `sigma = tau . F^r`, `q = p^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroupQuery {
    #[serde(serialize_with = "ser_display")]
    pub spec: RootSystemSpec,
    pub p: u64,
    pub r: u32,
    pub twist: Twist,
    pub twisted_rank: usize,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl FiniteGroupQuery {
    pub fn new(spec: RootSystemSpec, p: u64, r: u32, twist: Twist, twisted_rank: usize) -> Result<Self> {
        PrimeContext::new(p)?;
        if r < 1 {
            return Err(Error::Domain("r must be at least 1".into()));
        }
        if twisted_rank < 1 || twisted_rank > spec.rank() {
            return Err(Error::Domain(format!(
                "twisted rank must lie in 1..={}, got {twisted_rank}",
                spec.rank()
            )));
        }
        if twist == Twist::ReeSuzuki {
            let ok = matches!(
                (spec.family(), spec.rank(), p),
                (Family::B, 2, 2) | (Family::G, 2, 3) | (Family::F, 4, 2)
            );
            if !ok {
                return Err(Error::Domain(format!(
                    "no Ree or Suzuki group of type {spec} in characteristic {p}"
                )));
            }
        }
        Ok(FiniteGroupQuery { spec, p, r, twist, twisted_rank })
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    ReeSuzuki,
    #[serde(rename = "BNP-i")]
    BnpI,
    #[serde(rename = "BNP-ii")]
    BnpII,
    #[serde(rename = "small-q-a")]
    SmallQA,
    #[serde(rename = "small-q-b")]
    SmallQB,
    #[serde(rename = "blanket")]
    Blanket,
}

/// Outcome of [`finite_group_bound`]. Big integers serialise as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub query: FiniteGroupQuery,
    pub case_tag: CaseTag,
    #[serde(serialize_with = "crate::cli::ser_big")]
    pub bound: BigUint,
    pub formula: String,
    /// `max{b_alg, ceil(1/2 (h^2 (3h-3)^3)^{|Phi^+|})}`
    #[serde(serialize_with = "crate::cli::ser_big")]
    pub blanket: BigUint,
    pub coxeter_number: u64,
    pub num_pos_roots: usize,
    /// `ceil(h^2/2)`, the exponent of the generic form.
    pub generic_exponent: u32,
    /// Set for type `A_1`, which the case analysis does not treat.
    pub a1_flag: bool,
}

/// Bound `dim H^1(G_sigma, L)` given an upper bound `b_alg` for the algebraic group.
///
/// Cases are tried in order: Ree/Suzuki groups, `p >= 3h - 3`,
/// `r >= 2` with `p^{s-1}(p-1) > h` (`s = floor(r/2)`), then the small-`q`
/// cases where `dim H^1 <= dim L / 2` and `dim L <= q^{|Phi^+|}`.
pub fn finite_group_bound(q: &FiniteGroupQuery, b_alg: &BigUint) -> Result<BoundReport> {
    if *b_alg < BigUint::from(1u32) {
        return Err(Error::Domain("algebraic-group bound must be at least 1".into()));
    }
    let rs = RootSystem::build(q.spec);
    let h = rs.coxeter_number();
    let n = rs.num_pos_roots() as u32;
    let p = q.p;
    let s = q.r / 2;
    let cap = finite_group_term(h, n);
    let blanket = b_alg.clone().max(cap.clone());

    let (case_tag, bound, formula) = if q.twist == Twist::ReeSuzuki {
        (CaseTag::ReeSuzuki, BigUint::from(2u32), "2 (Ree/Suzuki)".to_string())
    } else if q.spec.family() == Family::A && q.spec.rank() == 1 {
        (CaseTag::Blanket, blanket.clone(), "max{b, 1/2 (h^2 (3h-3)^3)^|Phi+|} (A1 not covered by the case analysis)".to_string())
    } else if p >= 3 * h - 3 {
        (CaseTag::BnpII, b_alg.clone(), format!("b (p = {p} >= 3h-3 = {})", 3 * h - 3))
    } else if q.r >= 2 && BigUint::from(p).pow(s - 1) * (p - 1) > BigUint::from(h) {
        (CaseTag::BnpI, b_alg.clone(), format!("b (r >= 2 and p^(s-1)(p-1) > h = {h}, s = {s})"))
    } else if q.r == 1 {
        let bound = half_ceil(&BigUint::from(p).pow(n));
        (CaseTag::SmallQA, bound, format!("1/2 q^|Phi+| = 1/2 {p}^{n}"))
    } else {
        let base = BigUint::from(h * h) * BigUint::from(p).pow(3);
        let bound = half_ceil(&base.pow(n)).min(cap.clone());
        (CaseTag::SmallQB, bound, format!("1/2 (h^2 p^3)^|Phi+| = 1/2 ({}*{p}^3)^{n}", h * h))
    };

    Ok(BoundReport {
        query: q.clone(),
        case_tag,
        bound,
        formula,
        blanket,
        coxeter_number: h,
        num_pos_roots: rs.num_pos_roots(),
        generic_exponent: generic_exponent(h),
        a1_flag: q.spec.family() == Family::A && q.spec.rank() == 1,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthRow {
    pub family: char,
    pub rank: usize,
    pub h: u64,
    pub log2_theorem_a: f64,
    pub log2_theorem_c: f64,
    /// `log2 theorem_a / (l^3 log2 l)`
    pub ratio_a: f64,
    /// `log2 theorem_c / (l^2 log2 l)`
    pub ratio_c: f64,
}

pub fn growth_row(spec: RootSystemSpec) -> Result<GrowthRow> {
    let rs = RootSystem::build(spec);
    let h = rs.coxeter_number();
    let l = spec.rank() as f64;
    let log2_theorem_a = log2_big(&theorem_a_bound(h, 2)?);
    let log2_theorem_c = log2_big(&theorem_c_bound(h)?);
    Ok(GrowthRow {
        family: spec.family().letter(),
        rank: spec.rank(),
        h,
        log2_theorem_a,
        log2_theorem_c,
        ratio_a: log2_theorem_a / (l.powi(3) * l.log2()),
        ratio_c: log2_theorem_c / (l.powi(2) * l.log2()),
    })
}

/// Rows for the classical families at ranks `2..=l_max` (from 4 for `D`),
/// followed by the exceptional types.
pub fn growth_specs(l_max: usize) -> Result<Vec<RootSystemSpec>> {
    if l_max < 2 {
        return Err(Error::Domain(format!("lmax must be at least 2, got {l_max}")));
    }
    let mut specs = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 2..=l_max {
            if let Ok(s) = RootSystemSpec::new(family, rank) {
                specs.push(s);
            }
        }
    }
    for (family, rank) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        specs.push(RootSystemSpec::new(family, rank)?);
    }
    Ok(specs)
}

pub fn growth_table(l_max: usize) -> Result<Vec<GrowthRow>> {
    growth_specs(l_max)?.into_iter().map(growth_row).collect()
}

pub const GROWTH_HEADER: [&str; 7] =
    ["family", "rank", "h", "log2_theorem_a", "log2_theorem_c", "ratio_a_l3logl", "ratio_c_l2logl"];

/// Six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_growth_csv<W: Write>(rows: &[GrowthRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(GROWTH_HEADER)?;
    for r in rows {
        w.write_record([
            r.family.to_string(),
            r.rank.to_string(),
            r.h.to_string(),
            sig6(r.log2_theorem_a),
            sig6(r.log2_theorem_c),
            sig6(r.ratio_a),
            sig6(r.ratio_c),
        ])?;
    }
    w.flush()
}
