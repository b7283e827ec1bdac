// SPDX-License-Identifier: Apache-2.0
//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's arithmetic: elements are decoded to
//! coordinates and added coordinate-wise.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Product of cyclic groups, first coordinate most significant.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub orders: Vec<usize>,
}

impl Oracle {
    pub fn new(orders: &[usize]) -> Self {
        Oracle { orders: orders.to_vec() }
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn coords(&self, mut i: usize) -> Vec<usize> {
        let mut c = vec![0; self.orders.len()];
        for (j, &n) in self.orders.iter().enumerate().rev() {
            c[j] = i % n;
            i /= n;
        }
        c
    }

    pub fn index(&self, c: &[usize]) -> usize {
        c.iter().zip(&self.orders).fold(0, |acc, (&x, &n)| acc * n + x % n)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let s: Vec<usize> = ca.iter().zip(&cb).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<usize> = self.coords(a).iter().zip(&self.orders).map(|(x, n)| (n - x) % n).collect();
        self.index(&c)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn dft(&self, f: &[Complex64]) -> Vec<Complex64> {
        let n = self.size();
        (0..n)
            .map(|xi| {
                let cx = self.coords(xi);
                (0..n)
                    .map(|g| {
                        let cg = self.coords(g);
                        let t: f64 = cx.iter().zip(&cg).zip(&self.orders).map(|((a, b), &m)| (a * b % m) as f64 / m as f64).sum();
                        f[g] * Complex64::from_polar(1.0, -2.0 * PI * t)
                    })
                    .sum()
            })
            .collect()
    }

    pub fn star(&self, f: &[i128], g: &[i128]) -> Vec<i128> {
        let n = self.size();
        let mut out = vec![0; n];
        for x in 0..n {
            for y in 0..n {
                out[self.add(x, y)] += f[x] * g[y];
            }
        }
        out
    }

    pub fn sumset(&self, a: &[usize], b: &[usize]) -> HashSet<usize> {
        a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn diffset(&self, a: &[usize], b: &[usize]) -> HashSet<usize> {
        a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.sub(x, y)).collect()
    }

    /// `#{(a1, a2, b1, b2) : a1 - b1 = a2 - b2}`.
    pub fn energy(&self, a: &[usize], b: &[usize]) -> u128 {
        let mut n = 0;
        for &a1 in a {
            for &a2 in a {
                for &b1 in b {
                    for &b2 in b {
                        if self.sub(a1, b1) == self.sub(a2, b2) {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    fn tuples(&self, a: &[usize], k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            out = out.into_iter().flat_map(|t| a.iter().map(move |&x| [t.clone(), vec![x]].concat())).collect();
        }
        out
    }

    /// Number of `2k`-tuples with equal `k`-fold sums.
    pub fn t_k(&self, a: &[usize], k: usize) -> u128 {
        let mut r: HashMap<usize, u128> = HashMap::new();
        for t in self.tuples(a, k) {
            *r.entry(t.iter().fold(0, |s, &x| self.add(s, x))).or_default() += 1;
        }
        r.values().map(|c| c * c).sum()
    }

    /// Counts of `a_k - a_{k-1} + a_{k-2} - ...` over `A^k`.
    pub fn alternating_power(&self, a: &[usize], k: usize) -> Vec<u128> {
        let mut out = vec![0; self.size()];
        for t in self.tuples(a, k) {
            let mut x = 0;
            for (i, &v) in t.iter().rev().enumerate() {
                x = if i % 2 == 0 { self.add(x, v) } else { self.sub(x, v) };
            }
            out[x] += 1;
        }
        out
    }

    pub fn intersection_count(&self, a: &[usize], x: usize) -> usize {
        let set: HashSet<usize> = a.iter().copied().collect();
        a.iter().filter(|&&y| set.contains(&self.sub(y, x))).count()
    }

    pub fn rho(&self, a: &[usize]) -> usize {
        (1..self.size()).map(|x| self.intersection_count(a, x)).max().unwrap_or(0)
    }

    /// `R^(k)(x_1, ..., x_{k-1})` keyed by the shift tuple.
    pub fn representation(&self, a: &[usize], k: usize) -> HashMap<Vec<usize>, u128> {
        let mut r = HashMap::new();
        for t in self.tuples(a, k) {
            let shifts: Vec<usize> = t[1..].iter().map(|&x| self.sub(t[0], x)).collect();
            *r.entry(shifts).or_default() += 1;
        }
        r
    }

    pub fn energy_kl(&self, a: &[usize], k: usize, l: u32) -> u128 {
        self.representation(a, k).values().map(|c| c.pow(l)).sum()
    }

    /// `{(a_1 - a, ..., a_k - a)}` over `a_i ∈ S`, `a ∈ A`, for a set of tuples `S`.
    pub fn tuple_diff(&self, s: &[Vec<usize>], a: &[usize]) -> HashSet<Vec<usize>> {
        s.iter().flat_map(|t| a.iter().map(move |&x| t.iter().map(|&y| self.sub(y, x)).collect())).collect()
    }

    pub fn product(s: &[Vec<usize>], t: &[Vec<usize>]) -> Vec<Vec<usize>> {
        s.iter().flat_map(|x| t.iter().map(move |y| [x.clone(), y.clone()].concat())).collect()
    }

    pub fn power_set_tuples(&self, a: &[usize], k: usize) -> Vec<Vec<usize>> {
        self.tuples(a, k)
    }

    pub fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.size()).filter(|&i| mask >> i & 1 == 1).collect()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each element independently with probability `q`.
pub fn random_set(rng: &mut ChaCha8Rng, n: usize, q: f64) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(q)).collect()
}

/// Uniform subset of exactly `size` elements.
pub fn random_sized(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, n, size).into_vec()
}

pub fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

pub fn random_ints(rng: &mut ChaCha8Rng, n: usize, bound: i128) -> Vec<i128> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn sup_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
