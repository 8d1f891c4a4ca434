//! Per-conductor tables: the cyclotomic polynomial and reduced powers of ζ.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

/// Everything needed to do arithmetic in Q(ζ_m) for one fixed `m`.
#[derive(Debug)]
pub struct CycloContext {
    pub(crate) m: u64,
    pub(crate) phi: usize,
    /// Φ_m, ascending, monic, length `phi + 1`.
    pub(crate) poly: Vec<i64>,
    /// Nonzero entries of Φ_m below the leading term.
    pub(crate) tail: Vec<(usize, i64)>,
    /// ζ^k reduced mod Φ_m for 0 <= k < m, as sparse integer vectors.
    pub(crate) powers: Vec<Vec<(usize, i64)>>,
}

static CONTEXTS: OnceLock<RwLock<HashMap<u64, Arc<CycloContext>>>> = OnceLock::new();
static POLYS: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Coefficients of Φ_h in ascending degree. Memoized per process.
pub fn cyclotomic_polynomial(h: u64) -> Arc<Vec<i64>> {
    assert!(h >= 1, "cyclotomic polynomial index must be positive");
    let table = POLYS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = table.read().expect("poly table poisoned").get(&h) {
        return p.clone();
    }
    // x^h - 1 divided by every Φ_d with d a proper divisor of h.
    let mut num = vec![0i64; h as usize + 1];
    num[0] = -1;
    num[h as usize] = 1;
    for d in divisors(h) {
        if d == h {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &den);
    }
    let p = Arc::new(num);
    table.write().expect("poly table poisoned").insert(h, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

impl CycloContext {
    fn build(m: u64) -> CycloContext {
        let poly = cyclotomic_polynomial(m).as_ref().clone();
        let phi = poly.len() - 1;
        let tail: Vec<(usize, i64)> = poly[..phi]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let mut powers = Vec::with_capacity(m as usize);
        // Dense running value of ζ^k, multiplied by ζ each step.
        let mut cur = vec![0i64; phi.max(1)];
        if phi > 0 {
            cur[0] = 1;
        }
        for _ in 0..m {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect(),
            );
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for &(e, c) in &tail {
                    cur[e] -= top * c;
                }
            }
        }
        CycloContext { m, phi, poly, tail, powers }
    }

    pub fn get(m: u64) -> Arc<CycloContext> {
        assert!(m >= 1, "conductor must be positive");
        let table = CONTEXTS.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(c) = table.read().expect("context table poisoned").get(&m) {
            return c.clone();
        }
        let ctx = Arc::new(CycloContext::build(m));
        table
            .write()
            .expect("context table poisoned")
            .entry(m)
            .or_insert(ctx)
            .clone()
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
    }

    #[test]
    fn divisor_product_is_x_m_minus_one() {
        for m in 1..=64u64 {
            let mut acc = vec![1i64];
            for d in divisors(m) {
                acc = mul(&acc, &cyclotomic_polynomial(d));
            }
            let mut want = vec![0i64; m as usize + 1];
            want[0] = -1;
            want[m as usize] = 1;
            assert_eq!(acc, want, "m = {m}");
        }
    }

    #[test]
    fn phi_matches_degree() {
        for m in 1..=100u64 {
            assert_eq!(cyclotomic_polynomial(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn power_table_wraps() {
        let ctx = CycloContext::get(12);
        assert_eq!(ctx.powers[0], vec![(0, 1)]);
        // ζ_12^6 = -1
        assert_eq!(ctx.powers[6], vec![(0, -1)]);
    }
}
