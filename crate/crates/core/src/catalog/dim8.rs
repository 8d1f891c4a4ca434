//! The three eight-dimensional algebras k[D8], k[Q8] and K8.

use super::group::{group_hopf, module_from_generators, twisted_group_hopf, FiniteGroup, GeneratorImage};
use super::{tensor_from_terms, word_label, AlgebraBundle, BraidSide, BraidingParams, ClosedForm, Dim8Kind, Family};
use crate::cyclo::CycNumber;
use crate::hopf::{Element, HopfAlgebraData, RMatrix};
use crate::linalg::Matrix;

const M: u64 = 8;

/// ζ_8^e.
fn w(e: i64) -> CycNumber {
    CycNumber::root(M, e)
}

fn half() -> CycNumber {
    CycNumber::from_fraction(M, 1, 2)
}

/// D8 (t² = 1) or Q8 (t² = s²) on normal forms t^i s^k, index 4i + k.
fn dihedral_like(quaternion: bool) -> FiniteGroup {
    let labels = (0..8).map(|x| word_label(&[("t", x / 4), ("s", x % 4)])).collect();
    FiniteGroup::from_law(labels, move |a, b| {
        let (i, k) = (a / 4, a % 4);
        let (j, l) = (b / 4, b % 4);
        // s^k t^j = t^j s^{±k}
        let k = if j == 1 { (4 - k) % 4 } else { k };
        let mut s = (k + l) % 4;
        let mut t = i + j;
        if t == 2 {
            t = 0;
            if quaternion {
                s = (s + 2) % 4;
            }
        }
        t * 4 + s
    })
}

struct Gens {
    s: usize,
    t: usize,
}

fn gens(g: &FiniteGroup) -> Gens {
    Gens { s: (0..8).find(|&x| g.label(x) == "s").unwrap(), t: (0..8).find(|&x| g.label(x) == "t").unwrap() }
}

/// Σ_{i,k<4} ζ^{-ik}/4 · a^k ⊗ a^{mult·i}, ζ = ω².
fn cyclic4_r(h: &HopfAlgebraData, g: &FiniteGroup, a: usize, mult: i64) -> Vec<CycNumber> {
    let quarter = CycNumber::from_fraction(M, 1, 4);
    let mut terms = Vec::new();
    for i in 0..4i64 {
        for k in 0..4i64 {
            terms.push((quarter.mul(&w(-2 * i * k)), h.basis(g.pow(a, k)), h.basis(g.pow(a, mult * i))));
        }
    }
    tensor_from_terms(h, &terms)
}

/// Σ_{ijkl} (−1)^{ij+kl}/4 · a^i s^{2k} ⊗ a^l s^{2(j+dl)} for a ∈ {t, ts}.
fn klein_r(h: &HopfAlgebraData, g: &FiniteGroup, a: usize, s: usize, d: i64) -> Vec<CycNumber> {
    let quarter = CycNumber::from_fraction(M, 1, 4);
    let mut terms = Vec::new();
    for i in 0..2i64 {
        for j in 0..2i64 {
            for k in 0..2i64 {
                for l in 0..2i64 {
                    let left = g.mul(g.pow(a, i), g.pow(s, 2 * k));
                    let right = g.mul(g.pow(a, l), g.pow(s, 2 * (j + d * l)));
                    terms.push((quarter.mul(&w(4 * (i * j + k * l))), h.basis(left), h.basis(right)));
                }
            }
        }
    }
    tensor_from_terms(h, &terms)
}

fn one_dim_modules(g: &FiniteGroup, gs: &Gens) -> Vec<crate::hopf::ModuleRep> {
    let mut out = Vec::new();
    for i in 0..2i64 {
        for j in 0..2i64 {
            let s_val = Matrix::scalar(1, &w(4 * i), M);
            let t_val = Matrix::scalar(1, &w(4 * j), M);
            out.push(module_from_generators(&format!("V_{i}{j}"), g, 1, M, &[(gs.s, s_val), (gs.t, t_val)]));
        }
    }
    out
}

fn two_dim_module(g: &FiniteGroup, gs: &Gens, quaternion: bool) -> crate::hopf::ModuleRep {
    let (s_val, t_val) = if quaternion {
        (Matrix::from_rows(M, vec![vec![w(2), CycNumber::zero(M)], vec![CycNumber::zero(M), w(-2)]]), Matrix::from_ints(M, &[&[0, -1], &[1, 0]]))
    } else {
        (Matrix::from_ints(M, &[&[0, -1], &[1, 0]]), Matrix::from_ints(M, &[&[-1, 0], &[0, 1]]))
    };
    module_from_generators("V", g, 2, M, &[(gs.s, s_val), (gs.t, t_val)])
}

/// ½(1+ζ^{∓1}) + ½(1+ζ^{±1}) s², with `sign` picking ζ⁻¹ first (+1) or ζ first (−1).
fn mixed(h: &HopfAlgebraData, s2: usize, sign: i64) -> Element {
    let first = CycNumber::one(M).add(&w(-2 * sign)).mul(&half());
    let second = CycNumber::one(M).add(&w(2 * sign)).mul(&half());
    h.add(&h.scale(&h.one(), &first), &h.scale(&h.basis(s2), &second))
}

fn group_case(kind: Dim8Kind) -> AlgebraBundle {
    let quaternion = kind == Dim8Kind::Q8;
    let g = dihedral_like(quaternion);
    let gs = gens(&g);
    let h = group_hopf(if quaternion { "k[Q8]" } else { "k[D8]" }, &g, M);
    let ts = g.mul(gs.t, gs.s);
    let s2 = g.pow(gs.s, 2);

    let mut entries: Vec<Vec<CycNumber>> = (0..4).map(|d| cyclic4_r(&h, &g, gs.s, d)).collect();
    for a in [gs.t, ts] {
        for d in 0..2 {
            entries.push(if quaternion { cyclic4_r(&h, &g, a, 2 * d + 1) } else { klein_r(&h, &g, a, gs.s, d) });
        }
    }
    let x = mixed(&h, s2, 1);
    let y = mixed(&h, s2, -1);
    let closed: Vec<Element> = if quaternion {
        vec![h.one(), x.clone(), h.basis(s2), y.clone(), x.clone(), y.clone(), x, y]
    } else {
        vec![h.one(), x, h.basis(s2), y, h.one(), h.basis(s2), h.one(), h.basis(s2)]
    };
    let mut simples = one_dim_modules(&g, &gs);
    simples.push(two_dim_module(&g, &gs, quaternion));
    finish(kind, h, entries, closed, simples)
}

fn finish(kind: Dim8Kind, h: HopfAlgebraData, entries: Vec<Vec<CycNumber>>, closed: Vec<Element>, simples: Vec<crate::hopf::ModuleRep>) -> AlgebraBundle {
    let n = h.dim();
    let r_matrices = entries.into_iter().enumerate().map(|(i, e)| RMatrix::new(format!("R_{i}"), n, e)).collect::<Vec<_>>();
    let params = (0..r_matrices.len()).map(|index| BraidingParams::Dim8R { index }).collect();
    AlgebraBundle {
        family: Family::Dim8(kind),
        algebra: h,
        side: BraidSide::Modules { r_matrices, simples: simples.clone() },
        params,
        modules: simples,
        closed_form: Some(ClosedForm::Dim8),
        closed_drinfeld: closed.into_iter().map(Some).collect(),
        closed_dimensions: None,
        suzuki: None,
    }
}

/// Kac-Paljutkin: k[D8] as an algebra with the twisted coproduct on t and s.
fn kac_paljutkin() -> AlgebraBundle {
    let g = dihedral_like(false);
    let gs = gens(&g);
    let (s, t) = (gs.s, gs.t);
    let s2 = g.pow(s, 2);
    let s_inv = g.inv(s);
    let hf = half();
    let neg_hf = hf.neg();
    // e0·x = ½(x + s²x), e1·x = ½(x − s²x)
    let e0 = |x: usize| vec![(x, hf.clone()), (g.mul(s2, x), hf.clone())];
    let e1 = |x: usize| vec![(x, hf.clone()), (g.mul(s2, x), neg_hf.clone())];
    let tensor = |left: usize, right: Vec<(usize, CycNumber)>| right.into_iter().map(move |(r, c)| (left, r, c));
    let st = g.mul(s, t);
    let t_image = GeneratorImage {
        element: t,
        coproduct: tensor(t, e0(t)).chain(tensor(st, e1(t))).collect(),
        antipode: e0(t).into_iter().chain(e1(st)).collect(),
    };
    let s_image = GeneratorImage {
        element: s,
        coproduct: tensor(s, e0(s)).chain(tensor(s_inv, e1(s))).collect(),
        antipode: e0(s_inv).into_iter().chain(e1(s)).collect(),
    };
    let h = twisted_group_hopf("K8", &g, M, &[t_image, s_image]);

    // ζ = ω⁻²; the minimal R_l below are R-matrices only for this choice of ζ
    let one_plus = CycNumber::one(M).add(&w(-2)).mul(&hf);
    let one_minus = CycNumber::one(M).sub(&w(-2)).mul(&hf);
    let gl = h.add(&h.scale(&h.basis(s), &one_plus), &h.scale(&h.basis(s_inv), &one_minus));
    let hl = h.add(&h.scale(&h.basis(s), &one_minus), &h.scale(&h.basis(s_inv), &one_plus));
    let te = h.basis(t);
    let word = |i: i64, p: i64, q: i64| h.mul(&h.mul(&h.pow(&te, i as u64), &h.pow(&gl, p as u64)), &h.pow(&hl, q as u64));

    let mut entries = Vec::new();
    let quarter = CycNumber::from_fraction(M, 1, 4);
    for p in 0..2i64 {
        for q in 0..2i64 {
            let mut terms = Vec::new();
            for i in 0..2i64 {
                for j in 0..2i64 {
                    for k in 0..2i64 {
                        for l in 0..2i64 {
                            let right = word(0, (p * j + (q + 1) * l) % 2, (q * j + p * l) % 2);
                            terms.push((quarter.mul(&w(4 * (i * j + k * l))), word(0, i, k), right));
                        }
                    }
                }
            }
            entries.push(tensor_from_terms(&h, &terms));
        }
    }
    let eighth = CycNumber::from_fraction(M, 1, 8);
    for l in 0..4i64 {
        let mut terms = Vec::new();
        for bits in 0..64i64 {
            let [i, j, p, q, r, s] = [0, 1, 2, 3, 4, 5].map(|b| (bits >> b) & 1);
            let sign = j * p + i * r + (j * (i + 1) + l * j + r + s) * (l * i + p + q);
            let e = (2 * l + 1) * i * j + 4 * sign;
            terms.push((eighth.mul(&w(e)), word(i, p, q), word(j, r, s)));
        }
        entries.push(tensor_from_terms(&h, &terms));
    }

    let mut closed = Vec::new();
    for p in 0..2i64 {
        for _q in 0..2 {
            let mut u = h.zero();
            for i in 0..2i64 {
                for l in 0..2i64 {
                    u = h.add(&u, &h.scale(&word(0, i, l), &hf.mul(&w(4 * (i + p) * (l + p)))));
                }
            }
            closed.push(u);
        }
    }
    for l in 0..4i64 {
        let gh = word(0, 1, 1);
        let first = h.scale(&h.sub(&h.one(), &gh), &w(2 * l - 1).mul(&hf));
        closed.push(h.add(&first, &h.scale(&h.add(&gl, &hl), &hf)));
    }
    let mut simples = one_dim_modules(&g, &gs);
    simples.push(two_dim_module(&g, &gs, false));
    finish(Dim8Kind::K8, h, entries, closed, simples)
}

pub fn build_dim8(kind: Dim8Kind) -> AlgebraBundle {
    match kind {
        Dim8Kind::K8 => kac_paljutkin(),
        _ => group_case(kind),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_have_expected_shape() {
        let d8 = dihedral_like(false);
        let q8 = dihedral_like(true);
        let gd = gens(&d8);
        let gq = gens(&q8);
        assert_eq!(d8.element_order(gd.t), 2);
        assert_eq!(q8.element_order(gq.t), 4);
        assert!(!d8.is_abelian() && !q8.is_abelian());
        // elements of order 2
        assert_eq!((0..8).filter(|&x| d8.element_order(x) == 2).count(), 5);
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn eight_braidings_each() {
        for kind in [Dim8Kind::D8, Dim8Kind::Q8, Dim8Kind::K8] {
            let b = build_dim8(kind);
            assert_eq!(b.braid_count(), 8);
            assert_eq!(b.modules.len(), 5);
        }
    }
}
