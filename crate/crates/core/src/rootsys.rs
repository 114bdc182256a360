//! Root data for the simple types `A_n` through `G_2`.
//!
//! Conventions:
//!
//! * Simple roots are numbered as in Bourbaki.
//! * The Cartan matrix is `C[i][j] = <alpha_j, alpha_i^vee>`. `B_n` has its
//!   short simple root last and `C_n` is the transpose.
//! * Weights are integer vectors in the basis of fundamental weights, so
//!   `lambda[i] = <lambda, alpha_i^vee>`. Each positive root carries its
//!   coordinates over the simple roots, over the simple coroots, and in the
//!   fundamental-weight basis. Pairings and reflections are then integer dot
//!   products.
//! * Positive roots are sorted by height, then by descending simple-root
//!   coordinates, so the simple roots occupy indices `0..rank` in order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple type together with its rank, e.g. `E8`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidRank { family: family.letter(), rank, reason });
        match family {
            Family::A if rank < 1 => bad("A_n needs n >= 1"),
            Family::B if rank < 2 => bad("B_n needs n >= 2"),
            Family::C if rank < 2 => bad("C_n needs n >= 2"),
            Family::D if rank < 4 => bad("D_n needs n >= 4"),
            Family::E if !(6..=8).contains(&rank) => bad("E_n needs n in {6, 7, 8}"),
            Family::F if rank != 4 => bad("F_n needs n = 4"),
            Family::G if rank != 2 => bad("G_n needs n = 2"),
            _ => Ok(RootSystemSpec { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every supported type with rank at most `max_rank`, in (family, rank) order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<RootSystemSpec> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(spec) = RootSystemSpec::new(family, rank) {
                    out.push(spec);
                }
            }
        }
        out
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::BadType(s.to_string()))?;
        RootSystemSpec::new(family, rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One positive root in three coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveRoot {
    /// Coordinates over the simple roots.
    pub root: Vec<i64>,
    /// Coordinates of the coroot over the simple coroots.
    pub coroot: Vec<i64>,
    /// The root as a weight.
    pub weight: Weight,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }

    /// `<lambda, alpha^vee>`.
    pub fn pair(&self, lam: &Weight) -> i64 {
        self.coroot.iter().zip(&lam.0).map(|(k, l)| k * l).sum()
    }
}

/// Immutable root datum of one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    roots: Vec<PositiveRoot>,
    rho: Weight,
    coxeter: u64,
    alpha_zero: usize,
    weyl_order: BigUint,
}

impl RootSystem {
    pub fn build(spec: RootSystemSpec) -> RootSystem {
        let n = spec.rank;
        let cartan = cartan_matrix(spec);
        let sym = symmetrizer(&cartan);

        let pair_simple = |beta: &[i64], i: usize| -> i64 {
            (0..n).map(|j| beta[j] * cartan[i][j]).sum()
        };

        // Closure over root strings, one height at a time.
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        while !layer.is_empty() {
            for beta in &layer {
                known.insert(beta.clone());
            }
            all.extend(layer.iter().cloned());
            let mut next: Vec<Vec<i64>> = Vec::new();
            let mut seen_next: HashSet<Vec<i64>> = HashSet::new();
            for beta in &layer {
                for i in 0..n {
                    // r = how far the alpha_i-string extends downward from beta
                    let mut r = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            r += 1;
                        } else {
                            break;
                        }
                    }
                    let q = r - pair_simple(beta, i);
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen_next.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }

        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let roots: Vec<PositiveRoot> = all
            .into_iter()
            .map(|beta| {
                let norm: i64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| beta[i] * beta[j] * sym[i] * cartan[i][j])
                    .sum();
                let coroot = (0..n)
                    .map(|j| {
                        let num = 2 * beta[j] * sym[j];
                        assert_eq!(num % norm, 0, "non-integral coroot coordinate");
                        num / norm
                    })
                    .collect();
                let weight = Weight((0..n).map(|i| pair_simple(&beta, i)).collect());
                PositiveRoot { root: beta, coroot, weight }
            })
            .collect();

        let rho = Weight(vec![1; n]);
        let mut alpha_zero = 0;
        let mut best = i64::MIN;
        for (idx, r) in roots.iter().enumerate() {
            let v = r.pair(&rho);
            if v > best {
                best = v;
                alpha_zero = idx;
            }
        }
        let coxeter = (best + 1) as u64;
        let weyl_order = weyl_order_from_heights(&roots);

        RootSystem { spec, cartan, roots, rho, coxeter, alpha_zero, weyl_order }
    }

    pub fn from_str_spec(s: &str) -> Result<RootSystem> {
        Ok(RootSystem::build(s.parse()?))
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> Result<&PositiveRoot> {
        self.roots.get(idx).ok_or(Error::RootIndex { index: idx, count: self.roots.len() })
    }

    pub fn num_pos_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn coxeter_number(&self) -> u64 {
        self.coxeter
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Index of the positive root whose coroot is highest, i.e. maximising `<rho, beta^vee>`.
    pub fn alpha_zero(&self) -> usize {
        self.alpha_zero
    }

    /// `|W|`, from the product formula over exponents.
    pub fn weyl_group_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// `<lam, alpha^vee>` for the positive root at `root_idx`.
    pub fn pairing(&self, lam: &Weight, root_idx: usize) -> Result<i64> {
        self.check_rank(lam)?;
        Ok(self.root(root_idx)?.pair(lam))
    }

    pub fn check_rank(&self, lam: &Weight) -> Result<()> {
        if lam.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: lam.rank() });
        }
        Ok(())
    }

    /// Simple reflection `s_i` acting linearly on a weight.
    pub fn simple_reflection(&self, lam: &Weight, i: usize) -> Weight {
        let c = lam[i];
        lam - &(c * &self.roots[i].weight)
    }

    /// `|W|` as the size of the `W`-orbit of `rho`, generated breadth-first by
    /// simple reflections. `rho` is regular, so the orbit is a `W`-torsor.
    /// Only practical for small ranks.
    pub fn weyl_group_order_bfs(&self) -> BigUint {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.rho.clone());
        queue.push_back(self.rho.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let next = self.simple_reflection(&w, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        BigUint::from(seen.len())
    }
}

fn cartan_matrix(spec: RootSystemSpec) -> Vec<Vec<i64>> {
    let n = spec.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match spec.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                if j < n {
                    link(i, j);
                }
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match spec.family {
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        Family::B => c[n - 1][n - 2] = -2,
        // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        Family::C => c[n - 2][n - 1] = -2,
        // alpha_2 long, alpha_3 short
        Family::F => c[2][1] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive integers `d_i` proportional to `(alpha_i, alpha_i)`, so that
/// `d_i C[i][j] = d_j C[j][i]`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // (num, den) pairs propagated along the Dynkin diagram
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (num, den) = d[i].unwrap();
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let (mut a, mut b) = (num * cartan[i][j], den * cartan[j][i]);
                let g = a.gcd(&b);
                a /= g;
                b /= g;
                if b < 0 {
                    a = -a;
                    b = -b;
                }
                d[j] = Some((a, b));
                stack.push(j);
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let l = d.iter().fold(1i64, |acc, &(_, b)| acc.lcm(&b));
    let out: Vec<i64> = d.iter().map(|&(a, b)| a * (l / b)).collect();
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(out[i] * cartan[i][j], out[j] * cartan[j][i]);
        }
    }
    out
}

/// `|W| = prod (e_i + 1)` over the exponents `e_i`. The number of exponents
/// equal to `k` is `N_k - N_{k+1}`, where `N_k` counts positive roots of
/// height `k`.
fn weyl_order_from_heights(roots: &[PositiveRoot]) -> BigUint {
    let mut by_height: HashMap<i64, i64> = HashMap::new();
    for r in roots {
        *by_height.entry(r.height()).or_default() += 1;
    }
    let max_h = by_height.keys().copied().max().unwrap_or(0);
    let mut order = BigUint::from(1u32);
    for k in 1..=max_h {
        let here = by_height.get(&k).copied().unwrap_or(0);
        let above = by_height.get(&(k + 1)).copied().unwrap_or(0);
        let mult = here - above;
        assert!(mult >= 0, "root heights do not form a partition");
        order *= BigUint::from((k + 1) as u64).pow(mult as u32);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_spec(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.num_pos_roots(), 1);
        assert_eq!(a1.coxeter_number(), 2);
        assert_eq!(*a1.weyl_group_order(), BigUint::from(2u32));
        assert_eq!(a1.positive_roots()[0].weight, Weight(vec![2]));

        let g2 = rs("G2");
        assert_eq!(g2.num_pos_roots(), 6);
        assert_eq!(g2.coxeter_number(), 6);

        let e8 = rs("E8");
        assert_eq!(e8.num_pos_roots(), 120);
        assert_eq!(e8.coxeter_number(), 30);
    }

    #[test]
    fn rank_validation() {
        assert!(RootSystemSpec::new(Family::A, 0).is_err());
        assert!(RootSystemSpec::new(Family::B, 1).is_err());
        assert!(RootSystemSpec::new(Family::C, 1).is_err());
        assert!(RootSystemSpec::new(Family::D, 3).is_err());
        assert!(RootSystemSpec::new(Family::E, 5).is_err());
        assert!(RootSystemSpec::new(Family::E, 9).is_err());
        assert!(RootSystemSpec::new(Family::F, 3).is_err());
        assert!(RootSystemSpec::new(Family::G, 3).is_err());
        assert!("X3".parse::<RootSystemSpec>().is_err());
        assert!("A".parse::<RootSystemSpec>().is_err());
        assert_eq!("e_8".parse::<RootSystemSpec>().unwrap().to_string(), "E8");
    }

    #[test]
    fn cartan_shape() {
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    if i == j {
                        assert_eq!(r.cartan()[i][j], 2);
                    } else {
                        assert!(r.cartan()[i][j] <= 0);
                        assert_eq!(r.cartan()[i][j] == 0, r.cartan()[j][i] == 0);
                    }
                }
            }
        }
        // B and C are transposes
        let b3 = rs("B3");
        let c3 = rs("C3");
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b3.cartan()[i][j], c3.cartan()[j][i]);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.pairing(&Weight(vec![3]), 0).unwrap(), 3);
        assert_eq!(a1.pairing(&(&Weight(vec![3]) + a1.rho()), 0).unwrap(), 4);

        let a2 = rs("A2");
        assert_eq!(a2.pairing(a2.rho(), a2.alpha_zero()).unwrap(), 2);
        assert_eq!(a2.positive_roots()[a2.alpha_zero()].coroot, vec![1, 1]);

        let g2 = rs("G2");
        assert_eq!(g2.pairing(g2.rho(), g2.alpha_zero()).unwrap(), 5);

        assert!(a2.pairing(a2.rho(), 3).is_err());
        assert!(a2.pairing(&Weight(vec![1]), 0).is_err());
    }

    #[test]
    fn simple_roots_first() {
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            for i in 0..r.rank() {
                let mut e = vec![0; r.rank()];
                e[i] = 1;
                assert_eq!(r.positive_roots()[i].root, e, "{spec}");
                // simple coroot of a simple root is itself
                assert_eq!(r.positive_roots()[i].coroot, e, "{spec}");
                // the weight of alpha_i is column i of the Cartan matrix
                let col: Vec<i64> = (0..r.rank()).map(|k| r.cartan()[k][i]).collect();
                assert_eq!(r.positive_roots()[i].weight.0, col);
            }
        }
    }

    #[test]
    fn root_counts_and_coxeter_numbers() {
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            let n = r.rank() as u64;
            let h = r.coxeter_number();
            let expected_h = match spec.family() {
                Family::A => n + 1,
                Family::B | Family::C => 2 * n,
                Family::D => 2 * n - 2,
                Family::E => [12, 18, 30][(n - 6) as usize],
                Family::F => 12,
                Family::G => 6,
            };
            assert_eq!(h, expected_h, "{spec}");
            assert_eq!(r.num_pos_roots() as u64 * 2, n * h, "{spec}");
            assert!(2 * r.num_pos_roots() as u64 <= h * h, "{spec}");
        }
    }

    #[test]
    fn weyl_orders_match_literature() {
        let fact = |n: u64| (1..=n).fold(BigUint::from(1u32), |a, k| a * k);
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            let n = r.rank() as u64;
            let expected = match spec.family() {
                Family::A => fact(n + 1),
                Family::B | Family::C => fact(n) << n,
                Family::D => fact(n) << (n - 1),
                Family::E => BigUint::from([51840u64, 2903040, 696729600][(n - 6) as usize]),
                Family::F => BigUint::from(1152u32),
                Family::G => BigUint::from(12u32),
            };
            assert_eq!(*r.weyl_group_order(), expected, "{spec}");
        }
    }

    #[test]
    fn weyl_order_bfs_agrees() {
        for spec in RootSystemSpec::all_up_to_rank(4) {
            let r = RootSystem::build(spec);
            assert_eq!(r.weyl_group_order_bfs(), *r.weyl_group_order(), "{spec}");
        }
        assert_eq!(rs("A2").weyl_group_order_bfs(), BigUint::from(6u32));
        assert_eq!(rs("B2").weyl_group_order_bfs(), BigUint::from(8u32));
    }

    #[test]
    fn roots_closed_under_strings() {
        // every root of height > 1 is a previous root plus a simple root
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            let set: HashSet<&Vec<i64>> = r.positive_roots().iter().map(|p| &p.root).collect();
            for p in r.positive_roots().iter().skip(r.rank()) {
                let ok = (0..r.rank()).any(|i| {
                    let mut v = p.root.clone();
                    v[i] -= 1;
                    set.contains(&v)
                });
                assert!(ok, "{spec}: {:?}", p.root);
            }
            // reflection s_i permutes the positive roots other than alpha_i
            for i in 0..r.rank() {
                for p in r.positive_roots() {
                    if p.root == r.positive_roots()[i].root {
                        continue;
                    }
                    let k = r.cartan()[i].iter().zip(&p.root).map(|(c, b)| c * b).sum::<i64>();
                    let mut v = p.root.clone();
                    v[i] -= k;
                    assert!(set.contains(&v), "{spec}: s_{i} {:?}", p.root);
                }
            }
        }
    }

    #[test]
    fn rho_pairs_maximally_with_alpha_zero_for_dominant() {
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let r = RootSystem::build(spec);
            let a0 = &r.positive_roots()[r.alpha_zero()];
            for lam in [Weight::zero(r.rank()), Weight(vec![3; r.rank()]), {
                let mut v = vec![0; r.rank()];
                v[r.rank() - 1] = 5;
                Weight(v)
            }] {
                let lr = &lam + r.rho();
                let top = a0.pair(&lr);
                for p in r.positive_roots() {
                    assert!(p.pair(&lr) <= top);
                }
            }
        }
    }
}
