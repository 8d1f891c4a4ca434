//! The group algebra k[G_Nn], G_Nn = ⟨h, t, w | t² = h^{2N} = 1, w^n = h^N, tw = w⁻¹t, h central⟩.

use super::suzuki::{suzuki_algebra, suzuki_layout};
use super::group::{group_hopf, idempotent_combination, idempotent_tensor, module_from_generators, FiniteGroup};
use super::{root, word_label, AlgebraBundle, BraidSide, BraidingParams, CatalogError, ClosedForm, Family, SuzukiParams};
use crate::cyclo::{CycNumber, RootOfUnity};
use crate::hopf::{HopfAlgebraData, ModuleRep, RMatrix};
use crate::linalg::Matrix;

/// Normal-form bookkeeping for groups h^i w^k t^p with w^n = h^c.
#[derive(Clone, Copy, Debug)]
pub(crate) struct HwtLayout {
    pub big_n: u64,
    pub n: u64,
    /// w^n = h^c
    pub c: u64,
}

impl HwtLayout {
    pub fn h_order(&self) -> usize {
        2 * self.big_n as usize
    }

    pub fn abelian_order(&self) -> usize {
        self.h_order() * self.n as usize
    }

    pub fn index(&self, i: i64, k: i64, p: i64) -> usize {
        let (ho, n) = (self.h_order() as i64, self.n as i64);
        let wraps = k.div_euclid(n);
        let k = k.rem_euclid(n);
        let i = (i + wraps * self.c as i64).rem_euclid(ho);
        (p.rem_euclid(2) as usize) * self.abelian_order() + k as usize * self.h_order() + i as usize
    }

    /// (h exponent, w exponent, t exponent) of a basis index.
    pub fn split(&self, x: usize) -> (i64, i64, i64) {
        let ab = self.abelian_order();
        let ho = self.h_order();
        (((x % ab) % ho) as i64, ((x % ab) / ho) as i64, (x / ab) as i64)
    }

    pub fn group(&self) -> FiniteGroup {
        let size = 2 * self.abelian_order();
        let labels = (0..size)
            .map(|x| {
                let (i, k, p) = self.split(x);
                word_label(&[("h", i as u64), ("w", k as u64), ("t", p as u64)])
            })
            .collect();
        let layout = *self;
        FiniteGroup::from_law(labels, move |a, b| {
            let (i, k, p) = layout.split(a);
            let (j, l, q) = layout.split(b);
            // t^p h^j w^l = h^j w^{±l} t^p
            let l = if p == 1 { -l } else { l };
            layout.index(i + j, k + l, p + q)
        })
    }
}

/// ζ_M^e as a field element.
fn cyc(m: u64, e: i64) -> CycNumber {
    CycNumber::root(m, e)
}

/// χ_ijk: t ↦ (−1)^i, w ↦ (−1)^j, h ↦ ω^{2(k + ε(n)j)n}, for any integers (k even).
pub(crate) fn hwt_chi(layout: &HwtLayout, g: &FiniteGroup, i: i64, j: i64, k: i64) -> ModuleRep {
    let (big_n, n) = (layout.big_n as i64, layout.n as i64);
    let m = (4 * big_n * n) as u64;
    let half = 2 * big_n * n;
    let h_exp = if n % 2 == 0 { 2 * k * n } else { 2 * (j + k) * n };
    let gens = [
        (layout.index(0, 0, 1), Matrix::scalar(1, &cyc(m, half * i), m)),
        (layout.index(0, 1, 0), Matrix::scalar(1, &cyc(m, half * j), m)),
        (layout.index(1, 0, 0), Matrix::scalar(1, &cyc(m, h_exp), m)),
    ];
    module_from_generators(&format!("chi_{i}_{j}_{k}"), g, 1, m, &gens)
}

/// ρ_jk: t ↦ swap, w ↦ diag(ω^{2jN}, ω^{−2jN}), h ↦ ω^{2kn}, for any integers j ≡ k mod 2.
pub(crate) fn hwt_rho(layout: &HwtLayout, g: &FiniteGroup, j: i64, k: i64) -> ModuleRep {
    let (big_n, n) = (layout.big_n as i64, layout.n as i64);
    let m = (4 * big_n * n) as u64;
    let zero = CycNumber::zero(m);
    let swap = Matrix::from_ints(m, &[&[0, 1], &[1, 0]]);
    let wm = Matrix::from_rows(m, vec![vec![cyc(m, 2 * j * big_n), zero.clone()], vec![zero, cyc(m, -2 * j * big_n)]]);
    let hm = Matrix::scalar(2, &cyc(m, 2 * k * n), m);
    let gens = [(layout.index(0, 0, 1), swap), (layout.index(0, 1, 0), wm), (layout.index(1, 0, 0), hm)];
    module_from_generators(&format!("rho_{j}_{k}"), g, 2, m, &gens)
}

/// χ_ijk for (i, j, k) with k even, then ρ_jk for j ∈ 1..n, j ≡ k mod 2.
pub(crate) fn hwt_simple_modules(layout: &HwtLayout, g: &FiniteGroup) -> Vec<ModuleRep> {
    let (big_n, n) = (layout.big_n as i64, layout.n as i64);
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in (0..2 * big_n).step_by(2) {
                out.push(hwt_chi(layout, g, i, j, k));
            }
        }
    }
    for j in 1..n {
        for k in (0..2 * big_n).filter(|k| (j - k).rem_euclid(2) == 0) {
            out.push(hwt_rho(layout, g, j, k));
        }
    }
    out
}

/// The algebra k[G_Nn] or the standard A_Nn (as algebras both are k[G_Nn]) with its
/// χ/ρ representations, for representation-ring work.
#[derive(Clone, Debug)]
pub struct HwtModules {
    pub family: Family,
    pub algebra: HopfAlgebraData,
    pub simples: Vec<ModuleRep>,
    layout: HwtLayout,
    group: FiniteGroup,
}

impl HwtModules {
    pub fn new(family: Family) -> Result<Self, CatalogError> {
        let (layout, algebra) = match family {
            Family::GroupGnn { big_n, n } => {
                let p = SuzukiParams::new(big_n, n, 1)?;
                let layout = HwtLayout { big_n: p.big_n, n: p.n, c: p.big_n };
                (layout, group_hopf(&family.to_string(), &layout.group(), p.conductor()))
            }
            Family::Suzuki(p) => {
                let layout = suzuki_layout(&p);
                if layout.c != p.big_n {
                    return Err(CatalogError::InvalidParameters(format!(
                        "{family} is not k[G_Nn] as an algebra; its simple modules are not catalogued"
                    )));
                }
                (layout, suzuki_algebra(p))
            }
            other => return Err(CatalogError::InvalidParameters(format!("{other} is not k[G_Nn] or A_Nn"))),
        };
        let group = layout.group();
        let simples = hwt_simple_modules(&layout, &group);
        Ok(HwtModules { family, algebra, simples, layout, group })
    }

    pub fn big_n(&self) -> u64 {
        self.layout.big_n
    }

    pub fn n(&self) -> u64 {
        self.layout.n
    }

    pub fn chi(&self, i: i64, j: i64, k: i64) -> ModuleRep {
        hwt_chi(&self.layout, &self.group, i, j, k)
    }

    pub fn rho(&self, j: i64, k: i64) -> ModuleRep {
        hwt_rho(&self.layout, &self.group, j, k)
    }
}

/// Labels of simples in `hwt_simple_modules` order, decoded.
pub(crate) enum HwtSimple {
    OneDim { j: i64, k: i64 },
    TwoDim { j: i64, k: i64 },
}

pub(crate) fn decode_simple(label: &str) -> Option<HwtSimple> {
    let parts: Vec<&str> = label.split('_').collect();
    let nums: Option<Vec<i64>> = parts[1..].iter().map(|s| s.parse().ok()).collect();
    match (parts[0], nums?.as_slice()) {
        ("chi", [_, j, k]) => Some(HwtSimple::OneDim { j: *j, k: *k }),
        ("rho", [j, k]) => Some(HwtSimple::TwoDim { j: *j, k: *k }),
        _ => None,
    }
}

pub fn build_group_gnn(big_n: u64, n: u64) -> Result<AlgebraBundle, CatalogError> {
    let p = SuzukiParams::new(big_n, n, 1)?;
    let layout = HwtLayout { big_n: p.big_n, n: p.n, c: p.big_n };
    let g = layout.group();
    let m = p.conductor();
    let algebra = group_hopf(&format!("k[G_{big_n}{n}]"), &g, m);
    let dim = g.order();
    let (bn, ni, mi) = (big_n as i64, n as i64, m as i64);
    let ho = layout.h_order();

    // idempotent x = (i', k') has index i'·2N + k'; pairing with w^j h^l
    let abelian: Vec<usize> = (0..layout.abelian_order()).collect();
    let ik = |x: usize| ((x / ho) as i64, (x % ho) as i64);
    let pair_h = |x: usize, a: usize| {
        let (i, k) = ik(x);
        let (l, j, _) = layout.split(abelian[a]);
        2 * bn * j * (k + 2 * i) + 2 * ni * k * l
    };

    let mut r_matrices = Vec::new();
    let mut params = Vec::new();
    let mut closed_drinfeld = Vec::new();
    let mut dims: Vec<Vec<RootOfUnity>> = Vec::new();
    let simples = hwt_simple_modules(&layout, &g);

    for a in 0..ni {
        for q in 0..bn {
            for nu in [1i8, -1] {
                let sign = if nu == -1 { mi / 2 } else { 0 };
                let phase = |x: usize, y: usize| {
                    let ((i, k), (j, l)) = (ik(x), ik(y));
                    sign * k * l + 2 * a * bn * (2 * i + k) * (2 * j + l) + 2 * q * k * l * ni
                };
                let entries = idempotent_tensor(m, dim, &abelian, pair_h, phase);
                r_matrices.push(RMatrix::new(format!("R_{a}{q}{}", if nu == 1 { "+" } else { "-" }), dim, entries));
                params.push(BraidingParams::GroupR { a: a as u64, q: q as u64, nu });
                let weight = |x: usize| {
                    let (i, k) = ik(x);
                    sign * k - 2 * a * bn * (2 * i + k).pow(2) - 2 * ni * q * k * k
                };
                closed_drinfeld.push(Some(idempotent_combination(m, dim, &abelian, pair_h, weight)));
                dims.push(
                    simples
                        .iter()
                        .map(|s| match decode_simple(&s.label).expect("own label") {
                            HwtSimple::OneDim { j, k, .. } => {
                                if ni % 2 == 0 {
                                    root(m, -2 * ni * q * k * k)
                                } else {
                                    root(m, sign * j + (mi / 2) * a * j - 2 * ni * q * (j + k).pow(2))
                                }
                            }
                            HwtSimple::TwoDim { j, k } => root(m, sign * k - 2 * ni * q * k * k - 2 * bn * a * j * j),
                        })
                        .collect(),
                );
            }
        }
    }

    if n == 2 {
        let h_list: Vec<usize> = (0..ho).collect();
        let t = layout.index(0, 0, 1);
        let tw = g.mul(t, layout.index(0, 1, 0));
        for (which, gen) in [(1u8, t), (2u8, tw)] {
            // j·2N + l ↦ gen^j h^l
            let sub: Vec<usize> = (0..2 * ho).map(|x| g.mul(g.pow(gen, (x / ho) as i64), x % ho)).collect();
            let split = |x: usize| ((x / ho) as i64, (x % ho) as i64);
            let pair = |x: usize, a: usize| {
                let ((i, k), (j, l)) = (split(x), split(a));
                (mi / 2) * i * j + 4 * k * l
            };
            for d in 0..2 * bn {
                let phase = |x: usize, y: usize| {
                    let ((i, k), (j, l)) = (split(x), split(y));
                    (mi / 2) * (j * k + i * l) + 4 * d * k * l
                };
                let entries = idempotent_tensor(m, dim, &sub, pair, phase);
                r_matrices.push(RMatrix::new(format!("R^({which})_{d}"), dim, entries));
                params.push(BraidingParams::GroupRExtra { subgroup: which, d: d as u64 });
                let pair_h = |x: usize, l: usize| 4 * (x * l) as i64;
                let weight = |x: usize| -4 * d * (x * x) as i64;
                closed_drinfeld.push(Some(idempotent_combination(m, dim, &h_list, pair_h, weight)));
                dims.push(
                    simples
                        .iter()
                        .map(|s| match decode_simple(&s.label).expect("own label") {
                            HwtSimple::OneDim { k, .. } | HwtSimple::TwoDim { k, .. } => root(m, -4 * d * k * k),
                        })
                        .collect(),
                );
            }
        }
    }

    Ok(AlgebraBundle {
        family: Family::GroupGnn { big_n, n },
        algebra,
        side: BraidSide::Modules { r_matrices, simples: simples.clone() },
        params,
        modules: simples,
        closed_form: Some(ClosedForm::GroupGnn),
        closed_drinfeld,
        closed_dimensions: Some(dims),
        suzuki: None,
    })
}
