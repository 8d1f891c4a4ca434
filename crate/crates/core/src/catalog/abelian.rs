//! Group algebras of C_m and C_m × C_n.

use super::group::{group_hopf, idempotent_combination, idempotent_tensor, module_from_generators, FiniteGroup};
use super::{root, word_label, AlgebraBundle, BraidSide, BraidingParams, ClosedForm, Family};
use crate::cyclo::CycNumber;
use crate::hopf::RMatrix;
use crate::linalg::Matrix;

/// k[C_m] with R_d = Σ ω^{dij} E_i ⊗ E_j for d < m and characters χ_j(g^p) = ω^{jp}.
pub fn build_cyclic(m: u64) -> AlgebraBundle {
    assert!(m >= 1, "m must be positive");
    let size = m as usize;
    let g = FiniteGroup::from_law((0..m).map(|a| word_label(&[("g", a)])).collect(), |a, b| (a + b) % size);
    let algebra = group_hopf(&format!("k[C_{m}]"), &g, m);
    let all: Vec<usize> = (0..size).collect();
    let pair = |x: usize, a: usize| (x * a) as i64;

    let mut r_matrices = Vec::new();
    let mut params = Vec::new();
    let mut closed_drinfeld = Vec::new();
    let mut dims = Vec::new();
    for d in 0..m {
        let entries = idempotent_tensor(m, size, &all, pair, |x, y| (d as usize * x * y) as i64);
        r_matrices.push(RMatrix::new(format!("R_{d}"), size, entries));
        params.push(BraidingParams::CyclicR { d });
        let sq = |i: usize| -(d as i64) * (i * i) as i64;
        closed_drinfeld.push(Some(idempotent_combination(m, size, &all, pair, sq)));
        dims.push((0..m).map(|j| root(m, sq(j as usize))).collect());
    }
    let simples = (0..m)
        .map(|j| {
            let gen = Matrix::scalar(1, &CycNumber::root(m, j as i64), m);
            module_from_generators(&format!("chi_{j}"), &g, 1, m, &[(1 % size, gen)])
        })
        .collect::<Vec<_>>();
    AlgebraBundle {
        family: Family::Cyclic { m },
        algebra,
        side: BraidSide::Modules { r_matrices, simples: simples.clone() },
        params,
        modules: simples,
        closed_form: Some(ClosedForm::CyclicGroup),
        closed_drinfeld,
        closed_dimensions: Some(dims),
        suzuki: None,
    }
}

/// {d < a : d·b ≡ 0 mod a}.
pub(crate) fn x_set(a: u64, b: u64) -> Vec<u64> {
    (0..a).filter(|d| (d * b).is_multiple_of(a)).collect()
}

/// k[C_m × C_n] with every R_pqrs.
pub fn build_abelian_product(m: u64, n: u64) -> AlgebraBundle {
    assert!(m >= 1 && n >= 1, "orders must be positive");
    let (mu, nu) = (m as usize, n as usize);
    let size = mu * nu;
    let conductor = m * n;
    // g^j h^l has index j·n + l
    let labels = (0..size).map(|x| word_label(&[("g", (x / nu) as u64), ("h", (x % nu) as u64)])).collect();
    let grp = FiniteGroup::from_law(labels, |a, b| ((a / nu + b / nu) % mu) * nu + (a % nu + b % nu) % nu);
    let algebra = group_hopf(&format!("k[C_{m} x C_{n}]"), &grp, conductor);
    let all: Vec<usize> = (0..size).collect();
    let (mi, ni) = (m as i64, n as i64);
    // idempotent (i, k) has index i·n + k; pairing with g^j h^l is n·i·j + m·k·l
    let split = |x: usize| ((x / nu) as i64, (x % nu) as i64);
    let pair = |x: usize, a: usize| {
        let ((i, k), (j, l)) = (split(x), split(a));
        ni * i * j + mi * k * l
    };

    let mut r_matrices = Vec::new();
    let mut params = Vec::new();
    let mut dims = Vec::new();
    for p in x_set(m, m) {
        for q in x_set(n, m) {
            for r in x_set(m, n) {
                for s in x_set(n, n) {
                    let (pi, qi, ri, si) = (p as i64, q as i64, r as i64, s as i64);
                    let phase = |x: usize, y: usize| {
                        let ((i, k), (j, l)) = (split(x), split(y));
                        ni * (pi * i * j + ri * k * j) + mi * (si * k * l + qi * i * l)
                    };
                    let entries = idempotent_tensor(conductor, size, &all, pair, phase);
                    r_matrices.push(RMatrix::new(format!("R_{p}{q}{r}{s}"), size, entries));
                    params.push(BraidingParams::AbelianR { p, q, r, s });
                    dims.push(
                        (0..size)
                            .map(|x| {
                                let (a, b) = split(x);
                                root(conductor, -(ni * (pi * a * a + ri * b * a) + mi * (si * b * b + qi * a * b)))
                            })
                            .collect(),
                    );
                }
            }
        }
    }
    let simples = (0..size)
        .map(|x| {
            let (a, b) = split(x);
            let g_val = Matrix::scalar(1, &CycNumber::root(conductor, ni * a), conductor);
            let h_val = Matrix::scalar(1, &CycNumber::root(conductor, mi * b), conductor);
            let g_idx = if mu > 1 { nu } else { 0 };
            let h_idx = if nu > 1 { 1 } else { 0 };
            module_from_generators(&format!("chi_{a}_{b}"), &grp, 1, conductor, &[(g_idx, g_val), (h_idx, h_val)])
        })
        .collect::<Vec<_>>();
    let closed_drinfeld = vec![None; params.len()];
    AlgebraBundle {
        family: Family::AbelianProduct { m, n },
        algebra,
        side: BraidSide::Modules { r_matrices, simples: simples.clone() },
        params,
        modules: simples,
        closed_form: Some(ClosedForm::AbelianProduct),
        closed_drinfeld,
        closed_dimensions: Some(dims),
        suzuki: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_counts() {
        let b = build_cyclic(4);
        assert_eq!(b.braid_count(), 4);
        assert_eq!(b.modules.len(), 4);
    }

    #[test]
    fn x_sets() {
        assert_eq!(x_set(2, 2), vec![0, 1]);
        assert_eq!(x_set(4, 2), vec![0, 2]);
        assert_eq!(x_set(3, 2), vec![0]);
    }

    #[test]
    fn abelian_product_count() {
        assert_eq!(build_abelian_product(2, 2).braid_count(), 16);
        assert_eq!(build_abelian_product(1, 5).braid_count(), 5);
    }
}
