//! Fast internal consistency checks behind `weylbound selftest`.

use crate::arith::next_prime_at_least;
use crate::jantzen::{self, LengthCache};
use crate::rootsys::{Family, RootSystem, RootSystemSpec, Weight};
use crate::sl2oracle::sl2_exact_length;
use crate::weights::{self, PrimeContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Closed form of the restricted maximum of `d` for the classical families.
pub fn classical_max_d(family: Family, n: i64) -> Option<i64> {
    match family {
        Family::A => Some((n - 1) * n * (n + 1) / 6),
        Family::B | Family::C => Some((n - 1) * n * (4 * n + 1) / 6),
        Family::D => Some(2 * (n - 2) * (n - 1) * n / 3),
        _ => None,
    }
}

fn max_d_table() -> SelfCheck {
    let mut bad = Vec::new();
    let mut count = 0;
    for spec in RootSystemSpec::all_up_to_rank(5) {
        let rs = RootSystem::build(spec);
        let expect = match classical_max_d(spec.family(), spec.rank() as i64) {
            Some(v) => v as u64,
            None => match spec.to_string().as_str() {
                "F4" => 86,
                "G2" => 10,
                _ => continue,
            },
        };
        let got = weights::restricted_max_d_default(&rs);
        count += 1;
        if got != expect {
            bad.push(format!("{spec}: {got} != {expect}"));
        }
    }
    SelfCheck {
        name: "restricted max d",
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{count} types") } else { bad.join("; ") },
    }
}

fn a1_sandwich() -> SelfCheck {
    let rs = RootSystem::build(RootSystemSpec::new(Family::A, 1).unwrap());
    let mut bad = Vec::new();
    for p in [2u64, 3, 5] {
        let ctx = PrimeContext::new(p).unwrap();
        let mut cache = LengthCache::new();
        for l in 0..=40i64 {
            let exact = sl2_exact_length(l as u64, ctx);
            let lb = jantzen::length_bound_exact(&rs, &Weight(vec![l]), ctx, &mut cache).unwrap();
            if lb < exact.into() {
                bad.push(format!("p={p} lambda={l}: {lb} < {exact}"));
            }
        }
    }
    SelfCheck {
        name: "A1 length sandwich",
        passed: bad.is_empty(),
        detail: if bad.is_empty() { "lambda <= 40, p in {2,3,5}".into() } else { bad.join("; ") },
    }
}

/// Collection preserves dimension, and the summed layers have non-negative dimension.
fn sum_formula_dimensions() -> SelfCheck {
    let mut bad = Vec::new();
    let mut count = 0;
    for ty in ["A1", "A2", "B2", "G2"] {
        let rs = RootSystem::from_str_spec(ty).unwrap();
        for p in [2u64, 3, 5] {
            let ctx = PrimeContext::new(p).unwrap();
            for lam in weights::box_weights(rs.rank(), p as i64) {
                count += 1;
                let terms = jantzen::jantzen_terms(&rs, &lam, ctx).unwrap();
                let raw = jantzen::raw_dimension(&rs, &terms).unwrap();
                let collected = jantzen::combo_dimension(&rs, &jantzen::collect_terms(&terms)).unwrap();
                if raw != collected || collected.sign() == num_bigint::Sign::Minus {
                    bad.push(format!("{ty} p={p} lambda={lam}: raw {raw}, collected {collected}"));
                }
            }
        }
    }
    SelfCheck {
        name: "sum formula dimensions",
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{count} restricted weights") } else { bad.join("; ") },
    }
}

fn smallest_prime_is_at_least_h() -> SelfCheck {
    let ok = RootSystemSpec::all_up_to_rank(8).into_iter().all(|s| {
        let h = RootSystem::build(s).coxeter_number();
        next_prime_at_least(h) >= h
    });
    SelfCheck { name: "prime selection", passed: ok, detail: "rank <= 8".into() }
}

pub fn run_selftest() -> Vec<SelfCheck> {
    vec![max_d_table(), a1_sandwich(), sum_formula_dimensions(), smallest_prime_is_at_least_h()]
}
