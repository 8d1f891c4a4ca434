//! Suzuki's algebras A_{Nn}^{+λ}, realized on the group basis h^i w^k t^p of
//! G = ⟨h, t, w | t² = h^{2N} = 1, w^n = h^c, tw = w⁻¹t, h central⟩ with the
//! twisted coproduct, and their braidings σ_αβ and τ_γξ.

use super::gnn::{hwt_simple_modules, HwtLayout};
use super::group::{twisted_group_hopf, FiniteGroup, GeneratorImage};
use super::{root, AlgebraBundle, BraidSide, BraidingParams, CatalogError, ClosedForm, Comodule, Family, SuzukiParams};
use crate::cyclo::{CycNumber, RootOfUnity};
use crate::hopf::{convolution_product, matrix_coalgebra_character, BraidingForm, Element, HopfAlgebraData};
use crate::linalg::Matrix;

/// Largest Suzuki algebra whose braidings are materialized as dense tables.
pub const SUZUKI_DENSE_LIMIT: usize = 120;

/// w^n = h^c with c = (n + (λ−1)/2)N mod 2N.
pub(crate) fn suzuki_layout(p: &SuzukiParams) -> HwtLayout {
    let (big_n, n) = (p.big_n as i64, p.n as i64);
    let c = ((n + (p.lambda as i64 - 1) / 2) * big_n).rem_euclid(2 * big_n);
    HwtLayout { big_n: p.big_n, n: p.n, c: c as u64 }
}

/// The group whose algebra carries A_{Nn}^{+λ}.
pub fn suzuki_group(p: SuzukiParams) -> FiniteGroup {
    suzuki_layout(&p).group()
}

/// A_{Nn}^{+λ} alone, without its braidings.
pub fn suzuki_algebra(p: SuzukiParams) -> HopfAlgebraData {
    let layout = suzuki_layout(&p);
    suzuki_hopf(&p, &layout, &layout.group())
}

impl SuzukiParams {
    /// Index of h^i w^k t^q in the group basis.
    pub fn basis_index(&self, i: i64, k: i64, q: i64) -> usize {
        suzuki_layout(self).index(i, k, q)
    }

    /// (i, k, q) with basis element x = h^i w^k t^q in normal form.
    pub fn basis_word(&self, x: usize) -> (i64, i64, i64) {
        suzuki_layout(self).split(x)
    }
}

fn suzuki_hopf(p: &SuzukiParams, layout: &HwtLayout, g: &FiniteGroup) -> HopfAlgebraData {
    let m = p.conductor();
    let bn = p.big_n as i64;
    let half = CycNumber::from_fraction(m, 1, 2);
    let neg_half = half.neg();
    let at = |i: i64, k: i64, q: i64| layout.index(i, k, q);
    let (h, w, t) = (at(1, 0, 0), at(0, 1, 0), at(0, 0, 1));
    let (hn_wt, hn_t, hn_w, w_inv) = (at(bn, 1, 1), at(bn, 0, 1), at(bn, 1, 0), g.inv(w));
    let hn_w_inv = g.mul(at(bn, 0, 0), w_inv);
    let gens = [
        GeneratorImage { element: h, coproduct: vec![(h, h, CycNumber::one(m))], antipode: vec![(g.inv(h), CycNumber::one(m))] },
        GeneratorImage {
            element: t,
            // h^N w t ⊗ e1 t + t ⊗ e0 t
            coproduct: vec![
                (hn_wt, t, half.clone()),
                (hn_wt, hn_t, neg_half.clone()),
                (t, t, half.clone()),
                (t, hn_t, half.clone()),
            ],
            // (e0 − e1 w) t
            antipode: vec![(t, half.clone()), (hn_t, half.clone()), (at(0, 1, 1), neg_half.clone()), (hn_wt, half.clone())],
        },
        GeneratorImage {
            element: w,
            // w ⊗ e0 w + w⁻¹ ⊗ e1 w
            coproduct: vec![
                (w, w, half.clone()),
                (w, hn_w, half.clone()),
                (w_inv, w, half.clone()),
                (w_inv, hn_w, neg_half.clone()),
            ],
            // e0 w⁻¹ + e1 w
            antipode: vec![(w_inv, half.clone()), (hn_w_inv, half.clone()), (w, half.clone()), (hn_w, neg_half)],
        },
    ];
    let name = Family::Suzuki(*p).to_string();
    twisted_group_hopf(&name, g, m, &gens)
}

/// The matrix-coalgebra generators x_ij of A_{Nn}^{+λ} written in the group basis,
/// with the group-likes and two-dimensional comodule coefficient matrices built from them.
#[derive(Clone, Debug)]
pub struct SuzukiElements {
    pub params: SuzukiParams,
    /// x[i][j] is x_{i+1, j+1}.
    pub x: [[Element; 2]; 2],
    pub h: Element,
    pub w: Element,
    pub t: Element,
    /// x₁₁^{2s} ± x₁₂^{2s} and x₁₁^{2s+1}χ₂₂^{n−1} ± √λ x₁₂^{2s+1}χ₂₁^{n−1}, s = 1..N.
    pub grouplikes: Vec<(String, Element)>,
    /// Coefficient matrices of V_st, 0 ≤ s < N, 1 ≤ t < n.
    pub two_dim: Vec<(String, [[Element; 2]; 2])>,
}

impl SuzukiElements {
    pub fn derive(alg: &HopfAlgebraData, p: SuzukiParams) -> Self {
        let layout = suzuki_layout(&p);
        let m = p.conductor();
        let bn = p.big_n as i64;
        let basis = |i: i64, k: i64, q: i64| alg.basis(layout.index(i, k, q));
        let (h, w, t) = (basis(1, 0, 0), basis(0, 1, 0), basis(0, 0, 1));
        let half = CycNumber::from_fraction(m, 1, 2);
        // N = 2r + 1, e = r(N + 1)
        let e = (bn - 1) / 2 * (bn + 1);
        let x22 = alg.mul(&alg.scale(&alg.add(&basis(-e, 0, 0), &basis(e + 1, 0, 0)), &half), &t);
        let x12 = alg.mul(&alg.scale(&alg.sub(&basis(-e, 0, 0), &basis(e + 1, 0, 0)), &half), &t);
        // x₁₁ (hw) = x₂₂³ and x₂₁ (hw) = x₁₂³
        let hw_inv = alg.basis(layout.index(-1, -1, 0));
        let x11 = alg.mul(&alg.pow(&x22, 3), &hw_inv);
        let x21 = alg.mul(&alg.pow(&x12, 3), &hw_inv);
        let mut out = SuzukiElements { params: p, x: [[x11, x12], [x21, x22]], h, w, t, grouplikes: Vec::new(), two_dim: Vec::new() };

        let sqrt_lambda = if p.lambda == 1 { CycNumber::one(m) } else { CycNumber::root(m, (p.n * p.big_n) as i64) };
        let n = p.n;
        for s in 1..=p.big_n {
            let a = out.xpow(alg, 0, 0, 2 * s);
            let b = out.xpow(alg, 0, 1, 2 * s);
            out.grouplikes.push((format!("g_{s}_+"), alg.add(&a, &b)));
            out.grouplikes.push((format!("g_{s}_-"), alg.sub(&a, &b)));
            let c = alg.mul(&out.xpow(alg, 0, 0, 2 * s + 1), &out.chi(alg, 1, 1, n - 1));
            let d = alg.scale(&alg.mul(&out.xpow(alg, 0, 1, 2 * s + 1), &out.chi(alg, 1, 0, n - 1)), &sqrt_lambda);
            out.grouplikes.push((format!("k_{s}_+"), alg.add(&c, &d)));
            out.grouplikes.push((format!("k_{s}_-"), alg.sub(&c, &d)));
        }
        for s in 0..p.big_n {
            for tt in 1..n {
                let coeff = |i: usize, j: usize| alg.mul(&out.xpow(alg, i, j, 2 * s), &out.chi(alg, 1 - i, 1 - j, tt));
                let mat = [[coeff(0, 0), coeff(0, 1)], [coeff(1, 0), coeff(1, 1)]];
                out.two_dim.push((format!("V_{s}_{tt}"), mat));
            }
        }
        out
    }

    /// x_{i+1, j+1}^e.
    pub fn xpow(&self, alg: &HopfAlgebraData, i: usize, j: usize, e: u64) -> Element {
        alg.pow(&self.x[i][j], e)
    }

    /// Alternating word of `len` letters starting at x_{i+1, j+1}: χ^{len}_{i+1, j+1}.
    pub fn chi(&self, alg: &HopfAlgebraData, i: usize, j: usize, len: u64) -> Element {
        let mut acc = alg.one();
        for step in 0..len as usize {
            let (a, b) = if step % 2 == 0 { (i, j) } else { (1 - i, 1 - j) };
            acc = alg.mul(&acc, &self.x[a][b]);
        }
        acc
    }

    /// Every defining relation, presentation identity and coalgebra identity that fails.
    pub fn relation_failures(&self, alg: &HopfAlgebraData) -> Vec<String> {
        let p = self.params;
        let m = p.conductor();
        let (bn, n) = (p.big_n, p.n);
        let lam = CycNumber::from_int(m, p.lambda as i64);
        let half = CycNumber::from_fraction(m, 1, 2);
        let fails = std::cell::RefCell::new(Vec::new());
        let expect = |name: &str, lhs: Element, rhs: Element| {
            if lhs != rhs {
                fails.borrow_mut().push(name.to_string());
            }
        };
        let x = |i: usize, j: usize| &self.x[i][j];
        let xp = |i: usize, j: usize, e: u64| self.xpow(alg, i, j, e);
        let hp = |e: i64| alg.pow(&self.h, e.rem_euclid(2 * bn as i64) as u64);
        let one = alg.one();
        let w_inv = alg.pow(&self.w, (n * 2 * bn) - 1);

        for i in 0..2 {
            for j in 0..2 {
                if alg.non_central_witness(&xp(i, j, 2)).is_some() {
                    fails.borrow_mut().push(format!("x{}{}^2 central", i + 1, j + 1));
                }
                for l in 0..2 {
                    for q in 0..2usize {
                        if (i + j + l + q) % 2 == 1 {
                            expect(&format!("x{}{} x{}{} = 0", i + 1, j + 1, l + 1, q + 1), alg.mul(x(i, j), x(l, q)), alg.zero());
                        }
                    }
                }
                expect(&format!("x{}{}^(2N+1) = x{}{}", i + 1, j + 1, i + 1, j + 1), xp(i, j, 2 * bn + 1), x(i, j).clone());
                expect(&format!("S(x{}{}) = x{}{}^(2N-1)", i + 1, j + 1, j + 1, i + 1), alg.apply_antipode(x(i, j)), xp(j, i, 2 * bn - 1));
            }
        }
        expect("x11^2 = x22^2", xp(0, 0, 2), xp(1, 1, 2));
        expect("x12^2 = x21^2", xp(0, 1, 2), xp(1, 0, 2));
        expect("x11^2N + x12^2N = 1", alg.add(&xp(0, 0, 2 * bn), &xp(0, 1, 2 * bn)), one.clone());
        expect("x11^4N + x12^4N = 1", alg.add(&xp(0, 0, 4 * bn), &xp(0, 1, 4 * bn)), one.clone());
        expect("chi22^n = chi11^n", self.chi(alg, 1, 1, n), self.chi(alg, 0, 0, n));
        expect("chi21^n = lambda chi12^n", self.chi(alg, 1, 0, n), alg.scale(&self.chi(alg, 0, 1, n), &lam));
        expect("(x11 x22)^n = x11^2n", alg.pow(&alg.mul(x(0, 0), x(1, 1)), n), xp(0, 0, 2 * n));
        expect("(x21 x12)^n = lambda x12^2n", alg.pow(&alg.mul(x(1, 0), x(0, 1)), n), alg.scale(&xp(0, 1, 2 * n), &lam));

        let x_rows: Vec<Vec<Element>> = self.x.iter().map(|r| r.to_vec()).collect();
        if matrix_coalgebra_character(alg, &x_rows).is_err() {
            fails.borrow_mut().push("x is a matrix coalgebra".into());
        }

        expect("h = x11^2 - x12^2", alg.sub(&xp(0, 0, 2), &xp(0, 1, 2)), self.h.clone());
        expect("t = x12^N + x22^N", alg.add(&xp(0, 1, bn), &xp(1, 1, bn)), self.t.clone());
        let w_from_x = alg.sub(&alg.mul(&xp(0, 0, 2 * bn - 1), x(1, 1)), &alg.mul(&xp(1, 0, 2 * bn - 1), x(0, 1)));
        expect("w = x11^(2N-1) x22 - x21^(2N-1) x12", w_from_x, self.w.clone());
        let e = ((bn - 1) / 2 * (bn + 1)) as i64;
        let wt = alg.mul(&self.w, &self.t);
        expect(
            "x11^(2N-1) + x21^(2N-1) = w t h^(-e-1)",
            alg.add(&xp(0, 0, 2 * bn - 1), &xp(1, 0, 2 * bn - 1)),
            alg.mul(&wt, &hp(-e - 1)),
        );
        let e0 = alg.scale(&alg.add(&one, &hp(bn as i64)), &half);
        let e1 = alg.scale(&alg.sub(&one, &hp(bn as i64)), &half);
        expect("x11^N = e0 w t", xp(0, 0, bn), alg.mul(&e0, &wt));
        expect("x21^N = -e1 w t", xp(1, 0, bn), alg.scale(&alg.mul(&e1, &wt), &CycNumber::from_int(m, -1)));
        expect("x12^N = e1 t", xp(0, 1, bn), alg.mul(&e1, &self.t));
        expect("x22^N = e0 t", xp(1, 1, bn), alg.mul(&e0, &self.t));
        expect("x11^(2N-1) x22 = e0 w", alg.mul(&xp(0, 0, 2 * bn - 1), x(1, 1)), alg.mul(&e0, &self.w));
        expect(
            "x21^(2N-1) x12 = -e1 w",
            alg.mul(&xp(1, 0, 2 * bn - 1), x(0, 1)),
            alg.scale(&alg.mul(&e1, &self.w), &CycNumber::from_int(m, -1)),
        );
        let minus_e1_winv = alg.scale(&alg.mul(&e1, &w_inv), &CycNumber::from_int(m, -1));
        expect("x12^(2N-1) x21 = -e1 w^-1", alg.mul(&xp(0, 1, 2 * bn - 1), x(1, 0)), minus_e1_winv.clone());
        expect("x12 x21^(2N-1) = -e1 w^-1", alg.mul(x(0, 1), &xp(1, 0, 2 * bn - 1)), minus_e1_winv);
        expect("x22^(2N-1) x11 = e0 w^-1", alg.mul(&xp(1, 1, 2 * bn - 1), x(0, 0)), alg.mul(&e0, &w_inv));
        expect("x22 x11^(2N-1) = e0 w^-1", alg.mul(x(1, 1), &xp(0, 0, 2 * bn - 1)), alg.mul(&e0, &w_inv));

        for (label, g) in &self.grouplikes {
            let gg = crate::catalog::tensor_from_terms(alg, &[(CycNumber::one(m), g.clone(), g.clone())]);
            if alg.apply_coproduct(g) != gg || !alg.eval_counit(g).is_one() {
                fails.borrow_mut().push(format!("{label} is group-like"));
            }
        }
        let mut distinct = self.grouplikes.iter().map(|(_, g)| g.clone()).collect::<Vec<_>>();
        distinct.sort_by_key(|g| format!("{g:?}"));
        distinct.dedup();
        if distinct.len() != 4 * bn as usize {
            fails.borrow_mut().push(format!("4N distinct group-likes (found {})", distinct.len()));
        }
        for (label, mat) in &self.two_dim {
            let rows: Vec<Vec<Element>> = mat.iter().map(|r| r.to_vec()).collect();
            match matrix_coalgebra_character(alg, &rows) {
                Ok(ch) => {
                    let (s, tt) = parse_two_dim(label);
                    let expected = alg.add(
                        &alg.mul(&xp(0, 0, 2 * s + 1), &self.chi(alg, 1, 1, tt - 1)),
                        &alg.mul(&xp(0, 0, 2 * s), &self.chi(alg, 1, 1, tt)),
                    );
                    if ch != expected {
                        fails.borrow_mut().push(format!("{label} character"));
                    }
                }
                Err(_) => fails.borrow_mut().push(format!("{label} is a matrix coalgebra")),
            }
        }
        fails.into_inner()
    }

    /// Simple comodules: the 4N group-likes, then the N(n−1) two-dimensional V_st.
    pub fn comodules(&self, alg: &HopfAlgebraData) -> Vec<Comodule> {
        let mut out: Vec<Comodule> =
            self.grouplikes.iter().map(|(l, g)| Comodule { label: l.clone(), dim: 1, character: g.clone() }).collect();
        for (label, mat) in &self.two_dim {
            out.push(Comodule { label: label.clone(), dim: 2, character: alg.add(&mat[0][0], &mat[1][1]) });
        }
        out
    }
}

fn parse_two_dim(label: &str) -> (u64, u64) {
    let mut it = label.split('_').skip(1).map(|s| s.parse::<u64>().expect("own label"));
    (it.next().expect("s"), it.next().expect("t"))
}

fn exponent_at(r: &RootOfUnity, m: u64, what: &str) -> Result<i64, CatalogError> {
    r.at_conductor(m)
        .map(|x| x.exponent as i64)
        .ok_or_else(|| CatalogError::InvalidParameters(format!("{what} = {r} is not a {m}-th root of unity")))
}

/// σ_αβ on the group basis from exponent arithmetic. Requires (αβ)^N = 1 and (αβ⁻¹)^n = λ.
pub fn sigma_group_values(p: SuzukiParams, alpha: &RootOfUnity, beta: &RootOfUnity) -> Result<BraidingForm, CatalogError> {
    let m = p.conductor();
    let mi = m as i64;
    let a = exponent_at(alpha, m, "alpha")?;
    let b = exponent_at(beta, m, "beta")?;
    let (bn, n) = (p.big_n as i64, p.n as i64);
    let lam = if p.lambda == 1 { 0 } else { mi / 2 };
    if ((a + b) * bn).rem_euclid(mi) != 0 || ((a - b) * n - lam).rem_euclid(mi) != 0 {
        return Err(CatalogError::InvalidParameters(format!("sigma({alpha}, {beta}) needs (ab)^N = 1 and (a/b)^n = lambda")));
    }
    let layout = suzuki_layout(&p);
    let dim = 2 * layout.abelian_order();
    let (xi, eta, half) = (a + b, a - b, mi / 2);
    let value = |x: usize, y: usize| {
        let (i, k, p1) = layout.split(x);
        let (j, l, q1) = layout.split(y);
        match (p1, q1) {
            (0, 0) => 2 * i * j * xi - 2 * k * l * eta,
            (0, _) => half * (i + k) + 2 * i * j * xi - k * (2 * l - 1) * eta,
            (_, 0) => half * (j + l) + 2 * i * j * xi + (2 * k - 1) * l * eta,
            _ => half * (i + j + k + l) + (2 * i * j + (bn * bn - 1) / 2) * xi + (2 * k * l - k - l) * eta + a,
        }
    };
    let sigma = (0..dim * dim).map(|c| CycNumber::root(m, value(c / dim, c % dim))).collect();
    Ok(BraidingForm::new(format!("sigma({alpha}, {beta})"), dim, sigma))
}

/// Values σ(x_ab, x_cd), indexed [a][b][c][d].
pub type XTable = [[[[CycNumber; 2]; 2]; 2]; 2];

pub fn sigma_x_table(m: u64, alpha: &CycNumber, beta: &CycNumber) -> XTable {
    let mut t: XTable = std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| CycNumber::zero(m)))));
    t[0][1][0][1] = alpha.clone();
    t[1][0][1][0] = alpha.clone();
    t[0][1][1][0] = beta.clone();
    t[1][0][0][1] = beta.clone();
    t
}

pub fn tau_x_table(m: u64, gamma: &CycNumber, xi: &CycNumber, lambda: i8) -> XTable {
    let mut t: XTable = std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| CycNumber::zero(m)))));
    t[0][0][0][0] = gamma.clone();
    t[0][0][1][1] = xi.clone();
    t[1][1][0][0] = xi.scale_int(lambda as i64);
    t[1][1][1][1] = gamma.clone();
    t
}

fn mat_pow(a: &Matrix, e: u64, m: u64) -> Matrix {
    (0..e).fold(Matrix::identity(a.rows(), m), |acc, _| acc.mul(a))
}

fn conv_pow(alg: &HopfAlgebraData, f: &[CycNumber], e: u64) -> Vec<CycNumber> {
    let unit: Vec<CycNumber> = (0..alg.dim()).map(|k| alg.counit(k).clone()).collect();
    (0..e).fold(unit, |acc, _| convolution_product(alg, &acc, f))
}

/// Extend a table of values on the x_ij to a bilinear form on the whole algebra,
/// using σ(x, yz) = Σ σ(x₁, z)σ(x₂, y) on the second slot and σ(xy, ·) = σ(x, ·) * σ(y, ·) on the first.
pub fn braiding_from_x_table(alg: &HopfAlgebraData, p: &SuzukiParams, table: &XTable) -> Vec<CycNumber> {
    let m = p.conductor();
    let layout = suzuki_layout(p);
    let bn = p.big_n;
    let dim = alg.dim();
    let neg = CycNumber::from_int(m, -1);
    // mx[c][d]_{ab} = σ(x_ab, x_cd); y ↦ (σ(x_ab, y))_{ab} is anti-multiplicative
    let mx = |c: usize, d: usize| {
        Matrix::from_rows(m, (0..2).map(|a| (0..2).map(|b| table[a][b][c][d].clone()).collect()).collect())
    };
    let (m11, m12, m21, m22) = (mx(0, 0), mx(0, 1), mx(1, 0), mx(1, 1));
    let mh = m11.mul(&m11).add(&m12.mul(&m12).scale(&neg));
    let mt = mat_pow(&m12, bn, m).add(&mat_pow(&m22, bn, m));
    // w = x11^{2N−1} x22 − x21^{2N−1} x12
    let mw = m22.mul(&mat_pow(&m11, 2 * bn - 1, m)).add(&m12.mul(&mat_pow(&m21, 2 * bn - 1, m)).scale(&neg));
    let mut f = vec![vec![CycNumber::zero(m); dim]; 4];
    for y in 0..dim {
        let (i, k, q) = layout.split(y);
        let my = mat_pow(&mt, q as u64, m).mul(&mat_pow(&mw, k as u64, m)).mul(&mat_pow(&mh, i as u64, m));
        for a in 0..2 {
            for b in 0..2 {
                f[2 * a + b][y] = my.get(a, b).clone();
            }
        }
    }
    let sub = |u: &[CycNumber], v: &[CycNumber]| u.iter().zip(v).map(|(s, t)| s.sub(t)).collect::<Vec<_>>();
    let add = |u: &[CycNumber], v: &[CycNumber]| u.iter().zip(v).map(|(s, t)| s.add(t)).collect::<Vec<_>>();
    let fh = sub(&conv_pow(alg, &f[0], 2), &conv_pow(alg, &f[1], 2));
    let ft = add(&conv_pow(alg, &f[1], bn), &conv_pow(alg, &f[3], bn));
    let fw = sub(
        &convolution_product(alg, &conv_pow(alg, &f[0], 2 * bn - 1), &f[3]),
        &convolution_product(alg, &conv_pow(alg, &f[2], 2 * bn - 1), &f[1]),
    );
    let mut h_pows = vec![conv_pow(alg, &fh, 0)];
    for i in 1..layout.h_order() {
        h_pows.push(convolution_product(alg, &h_pows[i - 1], &fh));
    }
    let mut w_pows = vec![conv_pow(alg, &fw, 0)];
    for k in 1..p.n as usize {
        w_pows.push(convolution_product(alg, &w_pows[k - 1], &fw));
    }
    let mut out = vec![CycNumber::zero(m); dim * dim];
    for x in 0..dim {
        let (i, k, q) = layout.split(x);
        let mut row = convolution_product(alg, &h_pows[i as usize], &w_pows[k as usize]);
        if q == 1 {
            row = convolution_product(alg, &row, &ft);
        }
        out[x * dim..(x + 1) * dim].clone_from_slice(&row);
    }
    out
}

/// The pairs (α, β) of I_{+λ}: ±(ω^{2ni + N(2j + (1−λ)/2)}, ω^{2ni − N(2j + (1−λ)/2)}).
pub fn sigma_parameters(p: &SuzukiParams) -> Vec<(RootOfUnity, RootOfUnity)> {
    let m = p.conductor();
    let (bn, n) = (p.big_n as i64, p.n as i64);
    let shift = (1 - p.lambda as i64) / 2;
    let mut out = Vec::new();
    for sign in [0, m as i64 / 2] {
        for i in 0..bn {
            for j in 0..n {
                let u = 2 * n * i;
                let v = bn * (2 * j + shift);
                out.push((root(m, u + v + sign), root(m, u - v + sign)));
            }
        }
    }
    out
}

/// The pairs (γ, ξ) of J for n = 2: (ω^{4i}, ±ω^{4i}), i < 2N.
pub fn tau_parameters(p: &SuzukiParams) -> Vec<(RootOfUnity, RootOfUnity)> {
    let m = p.conductor();
    let mut out = Vec::new();
    for i in 0..2 * p.big_n as i64 {
        for sign in [0, m as i64 / 2] {
            out.push((root(m, 4 * i), root(m, 4 * i + sign)));
        }
    }
    out
}

/// Normalized braided dimensions of the simple comodules in `SuzukiElements::comodules` order.
fn closed_sigma_dims(p: &SuzukiParams, alpha: &RootOfUnity, beta: &RootOfUnity) -> Vec<RootOfUnity> {
    let m = p.conductor();
    let (a, b) = (alpha.exponent as i64, beta.exponent as i64);
    let xi = a + b;
    let n = p.n as i64;
    let mut out = Vec::new();
    for s in 1..=p.big_n as i64 {
        let first = root(m, -2 * s * s * xi);
        let second = root(m, (-2 * s * s - 2 * s * n - n * n) * xi + n * n * a);
        out.extend([first, first, second, second]);
    }
    for s in 0..p.big_n as i64 {
        for t in 1..n {
            out.push(root(m, t * t * a + (-2 * s * s - 2 * s * t - t * t) * xi));
        }
    }
    out
}

fn closed_tau_dims(p: &SuzukiParams, gamma: &RootOfUnity) -> Vec<RootOfUnity> {
    let m = p.conductor();
    let g = gamma.exponent as i64;
    let lam = if p.lambda == 1 { 0 } else { m as i64 / 2 };
    let mut out = Vec::new();
    for s in 1..=p.big_n as i64 {
        let first = root(m, -4 * s * s * g);
        let second = root(m, -4 * (s + 1) * (s + 1) * g + lam);
        out.extend([first, first, second, second]);
    }
    for s in 0..p.big_n as i64 {
        out.push(root(m, -(2 * s + 1) * (2 * s + 1) * g));
    }
    out
}

pub fn build_suzuki(p: SuzukiParams) -> Result<AlgebraBundle, CatalogError> {
    let dim = 4 * (p.n * p.big_n) as usize;
    if dim > SUZUKI_DENSE_LIMIT {
        return Err(CatalogError::TooLarge { dim, limit: SUZUKI_DENSE_LIMIT });
    }
    let layout = suzuki_layout(&p);
    let g = layout.group();
    let algebra = suzuki_hopf(&p, &layout, &g);
    let elements = SuzukiElements::derive(&algebra, p);
    let simples = elements.comodules(&algebra);
    let m = p.conductor();

    let mut braidings: Vec<BraidingForm> = Vec::new();
    let mut params = Vec::new();
    let mut dims = Vec::new();
    let mut push = |form: BraidingForm, param: BraidingParams, closed: Vec<RootOfUnity>| {
        if braidings.iter().all(|b| b.sigma != form.sigma) {
            braidings.push(form);
            params.push(param);
            dims.push(closed);
        }
    };
    for (alpha, beta) in sigma_parameters(&p) {
        let form = sigma_group_values(p, &alpha, &beta)?;
        push(form, BraidingParams::Sigma { alpha, beta }, closed_sigma_dims(&p, &alpha, &beta));
    }
    if p.n == 2 {
        for (gamma, xi) in tau_parameters(&p) {
            let table = tau_x_table(m, &gamma.to_cyc(), &xi.to_cyc(), p.lambda);
            let sigma = braiding_from_x_table(&algebra, &p, &table);
            let form = BraidingForm::new(format!("tau({gamma}, {xi})"), dim, sigma);
            push(form, BraidingParams::Tau { gamma, xi }, closed_tau_dims(&p, &gamma));
        }
    }
    let modules = if layout.c == p.big_n { hwt_simple_modules(&layout, &g) } else { Vec::new() };
    let count = params.len();
    Ok(AlgebraBundle {
        family: Family::Suzuki(p),
        algebra,
        side: BraidSide::Comodules { braidings, simples },
        params,
        modules,
        closed_form: p.is_self_dual().then_some(ClosedForm::SelfDualSuzuki),
        closed_drinfeld: vec![None; count],
        closed_dimensions: Some(dims),
        suzuki: Some(elements),
    })
}
