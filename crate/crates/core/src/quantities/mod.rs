// SPDX-License-Identifier: Apache-2.0

//! Sumsets and the counting quantities built on them: translate
//! intersections, Fourier bias, higher energies, representation functions
//! and higher difference sets.
//!
//! All counts are exact integers; the Fourier bias is the only floating
//! quantity here.

mod levels;
mod report;
mod subset;
mod tuples;

use std::collections::HashMap;

pub use levels::{dyadic_level_sets, heavy_level, DyadicLevel};
pub use report::{QuantityOptions, QuantityReport};
pub use subset::GroupSubset;
pub use tuples::{tuple_diff, TupleSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::limits::Limits;
use crate::spectral::{self, conv_power, convolve_star, correlate_circ, star_power, DenseFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

/// What to append after `sA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tail {
    None,
    Plus,
    Minus,
}

/// Exact value of a moment, or a float when the input was not integer-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Moment {
    Exact(i128),
    Real(f64),
}

impl Moment {
    pub fn as_f64(self) -> f64 {
        match self {
            Moment::Exact(v) => v as f64,
            Moment::Real(v) => v,
        }
    }
}

fn require_nontrivial(group: &GroupSpec, what: &str) -> Result<()> {
    if group.size() < 2 {
        return Err(Error::validation(format!("{what} needs a group with at least two elements")));
    }
    Ok(())
}

fn to_u128(v: i128, what: &str) -> Result<u128> {
    u128::try_from(v).map_err(|_| Error::Exactness(format!("negative count in {what}")))
}

fn ints(f: &DenseFunction) -> &[i128] {
    f.ints().expect("indicator arithmetic stays exact")
}

/// `A + B` or `A - B`.
pub fn sumset(a: &GroupSubset, b: &GroupSubset, sign: Sign) -> Result<GroupSubset> {
    a.group().ensure_same(b.group())?;
    let group = a.group();
    if a.is_empty() || b.is_empty() {
        return Ok(GroupSubset::empty(group));
    }
    let n = group.size();
    let pairs = a.len() as u128 * b.len() as u128;
    if pairs <= (16 * n as u128).max(1 << 16) {
        let mut hit = vec![false; n];
        for &x in a.members() {
            for &y in b.members() {
                let z = match sign {
                    Sign::Plus => group.add_idx(x, y),
                    Sign::Minus => group.sub_idx(x, y),
                };
                hit[z] = true;
            }
        }
        return GroupSubset::new(group, (0..n).filter(|&i| hit[i]));
    }
    let rhs = match sign {
        Sign::Plus => b.indicator(),
        Sign::Minus => b.indicator().reflect(),
    };
    let counts = convolve_star(&a.indicator(), &rhs)?;
    let c = ints(&counts);
    GroupSubset::new(group, (0..n).filter(|&i| c[i] != 0))
}

/// `A - A`.
pub fn difference_set(a: &GroupSubset) -> GroupSubset {
    sumset(a, a, Sign::Minus).expect("same group")
}

/// `sA`, `sA + A` or `sA - A`.
pub fn iterated_sumset(a: &GroupSubset, s: usize, tail: Tail) -> Result<GroupSubset> {
    if s == 0 {
        return Err(Error::validation("iterated sumset needs s >= 1"));
    }
    let mut acc = a.clone();
    for _ in 1..s {
        acc = sumset(&acc, a, Sign::Plus)?;
    }
    match tail {
        Tail::None => Ok(acc),
        Tail::Plus => sumset(&acc, a, Sign::Plus),
        Tail::Minus => sumset(&acc, a, Sign::Minus),
    }
}

/// `(A ∘ A)(x) = |A ∩ (A + x)|` for every `x`.
pub fn self_correlation(a: &GroupSubset) -> Vec<u64> {
    let ind = a.indicator();
    let c = correlate_circ(&ind, &ind).expect("same group");
    ints(&c).iter().map(|&v| v as u64).collect()
}

/// `rho(A) = max_{x != 0} |A ∩ (A + x)|`.
pub fn rho(a: &GroupSubset) -> Result<u64> {
    require_nontrivial(a.group(), "rho")?;
    Ok(self_correlation(a).into_iter().skip(1).max().unwrap_or(0))
}

/// `M(A) = max_{xi != 0} |Â(xi)|`.
pub fn fourier_bias(a: &GroupSubset) -> Result<f64> {
    require_nontrivial(a.group(), "Fourier bias")?;
    Ok(spectral::dft(&a.indicator()).max_abs_off_zero())
}

/// `rho^(k)(A) = max_{x != 0} A^(k)(x)`.
pub fn rho_k(a: &GroupSubset, k: usize) -> Result<u128> {
    if k < 2 {
        return Err(Error::validation("rho_k needs k >= 2"));
    }
    require_nontrivial(a.group(), "rho_k")?;
    let p = conv_power(&a.indicator(), k)?;
    let best = ints(&p).iter().skip(1).copied().max().unwrap_or(0);
    to_u128(best, "rho_k")
}

/// Row `x` holds the members `a` of `A` (by position) with `a - x ∈ A`.
struct ShiftTable {
    words: usize,
    rows: Vec<u64>,
}

impl ShiftTable {
    fn new(a: &GroupSubset, shifts: &[usize]) -> Self {
        let group = a.group();
        let words = a.len().div_ceil(64).max(1);
        let mut rows = vec![0u64; words * shifts.len()];
        for (r, &x) in shifts.iter().enumerate() {
            let row = &mut rows[r * words..(r + 1) * words];
            for (p, &m) in a.members().iter().enumerate() {
                if a.contains(group.sub_idx(m, x)) {
                    row[p / 64] |= 1 << (p % 64);
                }
            }
        }
        ShiftTable { words, rows }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.rows[r * self.words..(r + 1) * self.words]
    }
}

fn full_mask(len: usize) -> Vec<u64> {
    let words = len.div_ceil(64).max(1);
    let mut mask = vec![u64::MAX; words];
    let rem = len % 64;
    if rem != 0 {
        mask[words - 1] = (1u64 << rem) - 1;
    }
    if len == 0 {
        mask[0] = 0;
    }
    mask
}

fn and_count(a: &[u64], b: &[u64], out: &mut [u64]) -> u32 {
    let mut c = 0;
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
        c += o.count_ones();
    }
    c
}

/// `rho_l(A) = max_{|X| = l} |∩_{x ∈ X} (A + x)|`.
///
/// The search is restricted to `X ∋ 0` with `X \ {0} ⊆ (A - A) \ {0}`; every
/// other `X` is a translate of one of these or has empty intersection.
pub fn rho_l(a: &GroupSubset, l: usize, limits: &Limits) -> Result<u64> {
    if l < 2 {
        return Err(Error::validation("rho_l needs l >= 2"));
    }
    let group = a.group();
    if l > group.size() {
        return Err(Error::validation(format!("no {l}-element subsets in a group of order {}", group.size())));
    }
    let shifts: Vec<usize> = difference_set(a).members().iter().copied().filter(|&x| x != 0).collect();
    if shifts.len() < l - 1 {
        return Ok(0);
    }
    let table = ShiftTable::new(a, &shifts);
    let mut search = RhoLSearch {
        table: &table,
        count: shifts.len(),
        best: 0,
        cap: a.len() as u32,
        nodes: 0,
        budget: limits.max_search_nodes,
    };
    let start = full_mask(a.len());
    search.descend(0, l - 1, &start)?;
    Ok(search.best as u64)
}

struct RhoLSearch<'a> {
    table: &'a ShiftTable,
    count: usize,
    best: u32,
    cap: u32,
    nodes: u128,
    budget: u128,
}

impl RhoLSearch<'_> {
    fn descend(&mut self, from: usize, remaining: usize, current: &[u64]) -> Result<()> {
        let mut next = vec![0u64; current.len()];
        for i in from..=self.count - remaining {
            if self.best == self.cap {
                return Ok(());
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Resource {
                    what: "rho_l search".into(),
                    limit: self.budget,
                    lower_bound: Some(self.best as u128),
                });
            }
            let c = and_count(current, self.table.row(i), &mut next);
            // Intersections only shrink further down the tree.
            if c <= self.best {
                continue;
            }
            if remaining == 1 {
                self.best = c;
            } else {
                let snapshot = next.clone();
                self.descend(i + 1, remaining - 1, &snapshot)?;
            }
        }
        Ok(())
    }
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// `R^(k)_A(x_1, ..., x_{k-1}) = |A ∩ (A + x_1) ∩ ... ∩ (A + x_{k-1})|` as a
/// function on `G^{k-1}`.
pub fn representation_fn(a: &GroupSubset, k: usize, limits: &Limits) -> Result<DenseFunction> {
    if k < 2 {
        return Err(Error::validation("representation function needs k >= 2"));
    }
    let group = a.group();
    let n = group.size() as u128;
    let cells = checked_pow(n, k - 1).filter(|&c| c <= limits.max_tuples);
    let work = checked_pow(a.len() as u128, k).filter(|&w| w <= limits.max_tuples);
    if cells.is_none() || work.is_none() {
        return Err(Error::resource("representation function", limits.max_tuples));
    }
    let domain = group.power(k - 1)?;
    let mut values = vec![0i128; domain.size()];
    for_each_representation(a, k, |code| values[code as usize] += 1);
    DenseFunction::from_ints(&domain, values)
}

/// Calls `visit` once per `(a, a_1, ..., a_{k-1}) ∈ A^k` with the packed
/// code of `(a - a_1, ..., a - a_{k-1})`.
fn for_each_representation(a: &GroupSubset, k: usize, mut visit: impl FnMut(u128)) {
    let group = a.group();
    let n = group.size() as u128;
    let m = a.members();
    if m.is_empty() {
        return;
    }
    let mut idx = vec![0usize; k - 1];
    for &base in m {
        idx.iter_mut().for_each(|i| *i = 0);
        'odometer: loop {
            let code = idx.iter().fold(0u128, |acc, &i| acc * n + group.sub_idx(base, m[i]) as u128);
            visit(code);
            for j in (0..k - 1).rev() {
                idx[j] += 1;
                if idx[j] < m.len() {
                    continue 'odometer;
                }
                idx[j] = 0;
            }
            break;
        }
    }
}

/// `E(A, B) = #{a_1 - b_1 = a_2 - b_2}`.
pub fn energy(a: &GroupSubset, b: &GroupSubset) -> Result<u128> {
    a.group().ensure_same(b.group())?;
    let ra = self_correlation(a);
    let rb = if a == b { ra.clone() } else { self_correlation(b) };
    Ok(ra.iter().zip(&rb).map(|(&x, &y)| x as u128 * y as u128).sum())
}

/// `E_k(A) = sum_x (A ∘ A)(x)^k` for real `k > 1`.
pub fn energy_k(a: &GroupSubset, k: f64) -> Result<f64> {
    if !(k > 1.0) {
        return Err(Error::validation(format!("energy_k needs k > 1, got {k}")));
    }
    Ok(self_correlation(a).iter().filter(|&&r| r > 0).map(|&r| (r as f64).powf(k)).sum())
}

/// Exact `E_k(A)` for integer `k >= 2`.
pub fn energy_k_exact(a: &GroupSubset, k: u32) -> Result<u128> {
    if k < 2 {
        return Err(Error::validation("energy_k needs k >= 2"));
    }
    self_correlation(a).iter().try_fold(0u128, |acc, &r| {
        (r as u128)
            .checked_pow(k)
            .and_then(|p| acc.checked_add(p))
            .ok_or_else(|| Error::Overflow("energy_k".into()))
    })
}

/// `E_{k,l}(A) = sum over G^{k-1} of R^(k)_A(x)^l`.
pub fn energy_kl(a: &GroupSubset, k: usize, l: u32, limits: &Limits) -> Result<u128> {
    if k < 2 || l < 2 {
        return Err(Error::validation("energy_kl needs k, l >= 2"));
    }
    let power_sum = |counts: &mut dyn Iterator<Item = u64>| -> Result<u128> {
        counts.filter(|&c| c > 0).try_fold(0u128, |acc, c| {
            (c as u128)
                .checked_pow(l)
                .and_then(|p| acc.checked_add(p))
                .ok_or_else(|| Error::Overflow("energy_kl".into()))
        })
    };
    if k == 2 {
        return power_sum(&mut self_correlation(a).into_iter());
    }
    let work = checked_pow(a.len() as u128, k).filter(|&w| w <= limits.max_tuples);
    if work.is_none() {
        return Err(Error::resource("energy_kl enumeration", limits.max_tuples));
    }
    let n = a.group().size() as u128;
    match checked_pow(n, k - 1).filter(|&c| c <= limits.max_tuples.min(1 << 22)) {
        Some(cells) => {
            let mut dense = vec![0u64; cells as usize];
            for_each_representation(a, k, |code| dense[code as usize] += 1);
            power_sum(&mut dense.into_iter())
        }
        None => {
            let mut sparse: HashMap<u128, u64> = HashMap::new();
            for_each_representation(a, k, |code| *sparse.entry(code).or_default() += 1);
            power_sum(&mut sparse.into_values())
        }
    }
}

/// `T_k(A) = #{a_1 + ... + a_k = a'_1 + ... + a'_k}`, via the `k`-fold
/// `*`-power of the indicator. `T_1(A) = |A|`.
pub fn t_k_count(a: &GroupSubset, k: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::validation("T_k needs k >= 1"));
    }
    let p = star_power(&a.indicator(), k)?;
    sum_of_squares(ints(&p))
}

fn sum_of_squares(v: &[i128]) -> Result<u128> {
    v.iter().try_fold(0u128, |acc, &x| {
        let s = x.unsigned_abs();
        s.checked_mul(s)
            .and_then(|p| acc.checked_add(p))
            .ok_or_else(|| Error::Overflow("sum of squares".into()))
    })
}

/// `T_k(f) = sum_x (f^(k)(x))^2` for real `f`, with `f^(1) = f`.
pub fn t_k_fn(f: &DenseFunction, k: usize) -> Result<Moment> {
    let p = conv_power(f, k)?;
    match p.ints() {
        Some(v) => {
            let s = sum_of_squares(v)?;
            i128::try_from(s)
                .map(Moment::Exact)
                .map_err(|_| Error::Overflow("T_k(f)".into()))
        }
        None => {
            if (0..f.len()).any(|i| f.value(i).im != 0.0) {
                return Err(Error::validation("T_k(f) is defined for real-valued f"));
            }
            Ok(Moment::Real((0..p.len()).map(|i| p.value(i).re.powi(2)).sum()))
        }
    }
}

/// `A^k - Δ_k(A) = {(a_1 - a, ..., a_k - a)}`, enumerated explicitly.
pub fn higher_diff(a: &GroupSubset, k: usize, limits: &Limits) -> Result<TupleSet> {
    if k == 0 {
        return Err(Error::validation("higher difference set needs k >= 1"));
    }
    let work = checked_pow(a.len() as u128, k + 1).filter(|&w| w <= limits.max_tuples);
    if work.is_none() {
        return Err(Error::resource("higher difference set", limits.max_tuples));
    }
    let mut power = TupleSet::from_subset(a);
    for _ in 1..k {
        power = power.product(&TupleSet::from_subset(a), limits)?;
    }
    tuple_diff(&power, a, limits)
}

/// `|A^k - Δ_k(A)|` without materializing the tuples.
///
/// Counts `(x_1, ..., x_k)` with `A ∩ (A + x_1) ∩ ... ∩ (A + x_k) ≠ ∅`, which
/// is the negation of the higher difference set and has the same size.
pub fn higher_diff_size(a: &GroupSubset, k: usize, limits: &Limits) -> Result<u128> {
    if k == 0 {
        return Err(Error::validation("higher difference set needs k >= 1"));
    }
    if a.is_empty() {
        return Ok(0);
    }
    let shifts = difference_set(a).members().to_vec();
    let tests = checked_pow(shifts.len() as u128, k);
    if tests.map_or(true, |t| t > 64 * limits.max_tuples) {
        return Err(Error::resource("higher difference set size", 64 * limits.max_tuples));
    }
    let table = ShiftTable::new(a, &shifts);
    Ok(count_nonempty(&table, shifts.len(), &full_mask(a.len()), k))
}

fn count_nonempty(table: &ShiftTable, rows: usize, current: &[u64], depth: usize) -> u128 {
    let mut next = vec![0u64; current.len()];
    let mut total = 0u128;
    for r in 0..rows {
        if and_count(current, table.row(r), &mut next) == 0 {
            continue;
        }
        total += if depth == 1 {
            1
        } else {
            count_nonempty(table, rows, &next.clone(), depth - 1)
        };
    }
    total
}

/// `eps_k = |A^k - Δ_k(A)| / |A - A|^k`.
pub fn eps(a: &GroupSubset, k: usize, limits: &Limits) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::validation("eps needs a nonempty set"));
    }
    let size = higher_diff_size(a, k, limits)?;
    let d = difference_set(a).len() as f64;
    Ok(size as f64 / d.powi(k as i32))
}

/// `sigma = sum_x |B_x| |S_x|` with `S = A + B`.
pub fn sigma_sum(a: &GroupSubset, b: &GroupSubset) -> Result<u128> {
    let s = sumset(a, b, Sign::Plus)?;
    energy(b, &s)
}

/// `N^{-1} sum_xi |B̂(xi)|^2 |Ŝ(xi)|^2`, the spectral form of [`sigma_sum`].
pub fn sigma_sum_spectral(a: &GroupSubset, b: &GroupSubset) -> Result<f64> {
    let s = sumset(a, b, Sign::Plus)?;
    let bh = spectral::dft(&b.indicator());
    let sh = spectral::dft(&s.indicator());
    let total: f64 = bh.values().iter().zip(sh.values()).map(|(x, y)| x.norm_sqr() * y.norm_sqr()).sum();
    Ok(total / a.group().size() as f64)
}

/// `sigma_* = sum_{x ∈ D} |D_x|` with `D = A - A`.
pub fn sigma_star(a: &GroupSubset) -> u128 {
    let d = difference_set(a);
    let r = self_correlation(&d);
    d.members().iter().map(|&x| r[x] as u128).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(orders: &[i64], members: &[usize]) -> GroupSubset {
        GroupSubset::new(&make_group(orders).unwrap(), members.iter().copied()).unwrap()
    }

    fn random_set(group: &GroupSpec, rng: &mut ChaCha8Rng, q: f64) -> GroupSubset {
        GroupSubset::from_predicate(group, |_| rng.gen_bool(q))
    }

    fn subgroup_f2(dim: usize, sub_dim: usize) -> GroupSubset {
        let g = GroupSpec::binary(dim).unwrap();
        GroupSubset::new(&g, 0..(1usize << sub_dim)).unwrap()
    }

    #[test]
    fn sumset_examples() {
        let a = set(&[5], &[0, 1]);
        let d = sumset(&a, &a, Sign::Minus).unwrap();
        assert_eq!(d.members(), &[0, 1, 4]);
        let h = subgroup_f2(4, 2);
        assert_eq!(sumset(&h, &h, Sign::Plus).unwrap(), h);
        assert_eq!(sumset(&h, &h, Sign::Minus).unwrap(), h);
        let single = set(&[9], &[4]);
        assert_eq!(difference_set(&single).members(), &[0]);
    }

    #[test]
    fn sumset_paths_agree() {
        let g = GroupSpec::cyclic(1500).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_set(&g, &mut rng, 0.3);
        let b = random_set(&g, &mut rng, 0.01);
        for sign in [Sign::Plus, Sign::Minus] {
            let big = sumset(&a, &b, sign).unwrap();
            let mut expect = vec![false; g.size()];
            for &x in a.members() {
                for &y in b.members() {
                    let z = if sign == Sign::Plus { g.add_idx(x, y) } else { g.sub_idx(x, y) };
                    expect[z] = true;
                }
            }
            assert!((0..g.size()).all(|i| expect[i] == big.contains(i)));
        }
    }

    #[test]
    fn iterated_sumset_examples() {
        let a = set(&[7], &[0, 1]);
        assert_eq!(iterated_sumset(&a, 2, Tail::None).unwrap().members(), &[0, 1, 2]);
        assert_eq!(iterated_sumset(&a, 1, Tail::Minus).unwrap(), difference_set(&a));
        let h = subgroup_f2(5, 3);
        for s in 1..4 {
            for tail in [Tail::None, Tail::Plus, Tail::Minus] {
                assert_eq!(iterated_sumset(&h, s, tail).unwrap(), h);
            }
        }
        assert!(iterated_sumset(&a, 0, Tail::None).is_err());
    }

    #[test]
    fn rho_and_bias_examples() {
        let a = set(&[5], &[0, 1]);
        assert_eq!(rho(&a).unwrap(), 1);
        assert!((fourier_bias(&a).unwrap() - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
        let h = subgroup_f2(4, 2);
        assert_eq!(rho(&h).unwrap(), 4);
        assert!((fourier_bias(&h).unwrap() - 4.0).abs() < 1e-12);
        let f4 = GroupSpec::binary(2).unwrap();
        let h2 = GroupSubset::new(&f4, [0, 1]).unwrap();
        assert!((fourier_bias(&h2).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(rho(&set(&[6], &[2])).unwrap(), 0);
        let full = GroupSubset::full(&make_group(&[3, 4]).unwrap());
        assert!(fourier_bias(&full).unwrap() < 1e-9);
        let trivial = GroupSubset::full(&make_group(&[1]).unwrap());
        assert!(rho(&trivial).is_err());
        assert!(fourier_bias(&trivial).is_err());
    }

    #[test]
    fn rho_k_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = make_group(&[3, 5]).unwrap();
        for _ in 0..50 {
            let a = random_set(&g, &mut rng, 0.4);
            assert_eq!(rho_k(&a, 2).unwrap(), rho(&a).unwrap() as u128);
        }
        let h = subgroup_f2(5, 3);
        assert_eq!(rho_k(&h, 4).unwrap(), 8 * 8 * 8);
        // A^(4) for {0,1} in Z/5 counts a4 - a1 + a2 - a3 = x: values 6,4,1,1,4.
        assert_eq!(rho_k(&set(&[5], &[0, 1]), 4).unwrap(), 4);
    }

    #[test]
    fn rho_l_matches_unnormalized_search() {
        let limits = Limits::default();
        let g = GroupSpec::cyclic(7).unwrap();
        let a = set(&[7], &[0, 1, 3]);
        let mut brute = 0;
        for x in 0..7 {
            for y in x + 1..7 {
                for z in y + 1..7 {
                    let c = a.members().iter().filter(|&&m| {
                        [x, y, z].iter().all(|&t| a.contains(g.sub_idx(m, t)))
                    });
                    brute = brute.max(c.count() as u64);
                }
            }
        }
        assert_eq!(rho_l(&a, 3, &limits).unwrap(), brute);

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let a = random_set(&g, &mut rng, 0.5);
            assert_eq!(rho_l(&a, 2, &limits).unwrap(), rho(&a).unwrap());
        }
        let h = subgroup_f2(6, 3);
        for l in 2..=8 {
            assert_eq!(rho_l(&h, l, &limits).unwrap(), 8);
        }
    }

    #[test]
    fn rho_l_budget_reports_lower_bound() {
        let g = GroupSpec::cyclic(64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_set(&g, &mut rng, 0.5);
        let tiny = Limits {
            max_search_nodes: 10,
            ..Limits::default()
        };
        match rho_l(&a, 4, &tiny) {
            Err(Error::Resource { lower_bound, .. }) => assert!(lower_bound.is_some()),
            other => panic!("expected a resource error, got {other:?}"),
        }
    }

    #[test]
    fn representation_examples() {
        let limits = Limits::default();
        let a = set(&[5], &[0, 1]);
        let r2 = representation_fn(&a, 2, &limits).unwrap();
        let c = correlate_circ(&a.indicator(), &a.indicator()).unwrap();
        assert_eq!(r2.ints(), c.ints());

        let r3 = representation_fn(&a, 3, &limits).unwrap();
        let at = |x1: usize, x2: usize| r3.ints().unwrap()[x1 * 5 + x2];
        assert_eq!(at(0, 0), 2);
        assert_eq!(at(1, 1), 1);
        let total: i128 = r3.ints().unwrap().iter().sum();
        assert_eq!(total, 8);

        let tiny = Limits {
            max_tuples: 10,
            ..Limits::default()
        };
        assert!(representation_fn(&a, 3, &tiny).unwrap_err().is_resource());
    }

    #[test]
    fn energy_examples() {
        let a = set(&[5], &[0, 1]);
        assert_eq!(energy(&a, &a).unwrap(), 6);
        let g = make_group(&[2, 3]).unwrap();
        let full = GroupSubset::full(&g);
        assert_eq!(energy(&full, &full).unwrap(), 216);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = GroupSpec::cyclic(11).unwrap();
        for _ in 0..50 {
            let x = random_set(&g, &mut rng, 0.5);
            let y = random_set(&g, &mut rng, 0.3);
            assert_eq!(energy(&x, &y).unwrap(), energy(&y, &x).unwrap());
            assert_eq!(energy_k_exact(&x, 2).unwrap(), energy(&x, &x).unwrap());
        }
        assert_eq!(energy_k_exact(&a, 3).unwrap(), 10);
        let e = energy_k(&a, 10.0 / 7.0).unwrap();
        assert!((e - (2f64.powf(10.0 / 7.0) + 2.0)).abs() < 1e-12);
        assert!((e - 4.6918).abs() < 1e-4);
        assert!(energy_k(&a, 1.0).is_err());
    }

    #[test]
    fn energy_kl_examples() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let g = GroupSpec::cyclic(9).unwrap();
        for _ in 0..20 {
            let a = random_set(&g, &mut rng, 0.5);
            for k in 2..=3 {
                assert_eq!(energy_kl(&a, k, 2, &limits).unwrap(), energy_k_exact(&a, k as u32).unwrap());
            }
        }
        let a = set(&[7], &[0, 1, 3]);
        assert_eq!(energy_kl(&a, 2, 3, &limits).unwrap(), energy_kl(&a, 3, 2, &limits).unwrap());
        let single = set(&[7], &[5]);
        for (k, l) in [(2, 2), (3, 4), (4, 3)] {
            assert_eq!(energy_kl(&single, k, l, &limits).unwrap(), 1);
        }
    }

    #[test]
    fn t_k_examples() {
        let a = set(&[5], &[0, 1]);
        assert_eq!(t_k_count(&a, 3).unwrap(), 20);
        assert_eq!(t_k_count(&a, 2).unwrap(), energy(&a, &a).unwrap());
        assert_eq!(t_k_count(&a, 1).unwrap(), 2);
        let g = make_group(&[2, 3]).unwrap();
        let full = GroupSubset::full(&g);
        assert_eq!(t_k_count(&full, 3).unwrap(), 6u128.pow(5));

        assert_eq!(t_k_fn(&a.indicator(), 3).unwrap(), Moment::Exact(20));
        let zero = DenseFunction::zeros(a.group());
        assert_eq!(t_k_fn(&zero, 3).unwrap().as_f64(), 0.0);
        let real = DenseFunction::from_real(a.group(), &[1.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!((t_k_fn(&real, 3).unwrap().as_f64() - 20.0).abs() < 1e-9);
    }

    #[test]
    fn higher_diff_examples() {
        let limits = Limits::default();
        let a = set(&[5], &[0, 1]);
        let hd = higher_diff(&a, 2, &limits).unwrap();
        assert_eq!(hd.len(), 7);
        assert_eq!(higher_diff_size(&a, 2, &limits).unwrap(), 7);
        assert!((eps(&a, 2, &limits).unwrap() - 7.0 / 9.0).abs() < 1e-15);
        assert_eq!(higher_diff(&a, 1, &limits).unwrap(), TupleSet::from_subset(&difference_set(&a)));

        let h = subgroup_f2(5, 2);
        for k in 1..=3 {
            assert_eq!(higher_diff_size(&h, k, &limits).unwrap(), 4u128.pow(k as u32));
            assert_eq!(eps(&h, k, &limits).unwrap(), 1.0);
        }
    }

    #[test]
    fn higher_diff_membership_is_reflected_support() {
        let limits = Limits::default();
        let g = GroupSpec::cyclic(7).unwrap();
        let a = set(&[7], &[0, 1, 3]);
        let hd = higher_diff(&a, 2, &limits).unwrap();
        let r3 = representation_fn(&a, 3, &limits).unwrap();
        for x1 in 0..7 {
            for x2 in 0..7 {
                let r = r3.ints().unwrap()[g.neg_idx(x1) * 7 + g.neg_idx(x2)];
                assert_eq!(hd.contains(&[x1, x2]), r > 0);
            }
        }
    }

    #[test]
    fn higher_diff_size_matches_enumeration() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for orders in [vec![12], vec![2, 2, 2, 2], vec![3, 5]] {
            let g = make_group(&orders).unwrap();
            for _ in 0..10 {
                let a = random_set(&g, &mut rng, 0.35);
                for k in 1..=3 {
                    let n = higher_diff(&a, k, &limits).unwrap().len() as u128;
                    assert_eq!(higher_diff_size(&a, k, &limits).unwrap(), n);
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let h = subgroup_f2(3, 2);
        assert_eq!(sigma_sum(&h, &h).unwrap(), 64);
        let g = GroupSpec::cyclic(16).unwrap();
        let a = GroupSubset::new(&g, [0, 3, 5, 9]).unwrap();
        let b = GroupSubset::singleton(&g, 7).unwrap();
        let s = sumset(&a, &b, Sign::Plus).unwrap();
        assert_eq!(sigma_sum(&a, &b).unwrap(), s.len() as u128);

        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..20 {
            let a = random_set(&g, &mut rng, 0.3);
            let b = random_set(&g, &mut rng, 0.3);
            let time = sigma_sum(&a, &b).unwrap() as f64;
            let freq = sigma_sum_spectral(&a, &b).unwrap();
            assert!((time - freq).abs() <= 1e-6 * time.max(1.0));
        }
        assert_eq!(sigma_star(&h), 16);
        for _ in 0..10 {
            let a = random_set(&g, &mut rng, 0.2);
            let dh = spectral::dft(&difference_set(&a).indicator());
            let freq: f64 = dh.values().iter().map(|v| v.re * v.norm_sqr()).sum::<f64>() / 16.0;
            let time = sigma_star(&a) as f64;
            assert!((time - freq).abs() <= 1e-6 * time);
        }
    }

    #[test]
    fn translation_invariance() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for orders in [vec![20], vec![2, 2, 2, 2], vec![3, 6]] {
            let g = make_group(&orders).unwrap();
            for _ in 0..5 {
                let a = random_set(&g, &mut rng, 0.4);
                let t = a.translate(rng.gen_range(0..g.size()));
                assert_eq!(rho(&a).unwrap(), rho(&t).unwrap());
                let (ma, mt) = (fourier_bias(&a).unwrap(), fourier_bias(&t).unwrap());
                assert!((ma - mt).abs() <= 1e-9 * ma.max(1.0));
                assert_eq!(energy(&a, &a).unwrap(), energy(&t, &t).unwrap());
                assert_eq!(t_k_count(&a, 3).unwrap(), t_k_count(&t, 3).unwrap());
                assert_eq!(higher_diff_size(&a, 2, &limits).unwrap(), higher_diff_size(&t, 2, &limits).unwrap());
            }
        }
    }
}
