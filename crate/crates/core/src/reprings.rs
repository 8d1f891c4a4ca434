//! Representation rings, their presentation for k[G_Nn] and A_Nn, group-likes of
//! A_Nn and of its dual, braiding non-degeneracy, and self-duality verdicts.

use std::fmt;

use serde_json::{json, Value};

use crate::catalog::{sigma_group_values, sigma_parameters, suzuki_algebra, CatalogError, FiniteGroup, HwtModules, SuzukiElements, SuzukiParams};
use crate::cyclo::{CycNumber, RootOfUnity};
use crate::exec::Execution;
use crate::hopf::{convolution_product, decompose_character, is_algebra_map, Character, DecomposeError, HopfAlgebraData, ModuleRep};
use crate::linalg::Matrix;

/// Largest Gram matrix side the reports will eliminate.
pub const GRAM_LIMIT: usize = 80;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReprError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{left} ⊗ {right} does not decompose into the simples: {source}")]
    Decompose { left: String, right: String, source: DecomposeError },
    #[error("{0} is not a simple module of the list")]
    NotSimple(String),
    #[error("candidate character {0} is not an algebra map")]
    NotAlgebraMap(String),
    #[error("{0} is not closed under multiplication")]
    NotClosed(String),
}

/// The Grothendieck ring of a semisimple module category, with duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub unit: usize,
    /// constants[i][j][k] = multiplicity of simple k in i ⊗ j.
    pub constants: Vec<Vec<Vec<u64>>>,
    /// Index of the dual of each simple.
    pub star: Vec<usize>,
}

/// A Z-combination of simples.
pub type RingElement = Vec<i64>;

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> RingElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn one(&self) -> RingElement {
        self.basis(self.unit)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> RingElement {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> RingElement {
        let r = self.rank();
        let mut out = vec![0; r];
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
                for (k, &c) in self.constants[i][j].iter().enumerate() {
                    out[k] += x * y * c as i64;
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[i64], e: u64) -> RingElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn apply_star(&self, a: &[i64]) -> RingElement {
        let mut out = vec![0; self.rank()];
        for (i, &x) in a.iter().enumerate() {
            out[self.star[i]] += x;
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| self.constants[i][j] == self.constants[j][i]))
    }

    /// Unit, star and Frobenius–Perron checks; returns the failures.
    pub fn axiom_failures(&self) -> Vec<String> {
        let r = self.rank();
        let mut out = Vec::new();
        for j in 0..r {
            if self.constants[self.unit][j] != self.basis(j).iter().map(|&x| x as u64).collect::<Vec<_>>() {
                out.push(format!("unit row at {}", self.labels[j]));
            }
            if self.constants[j][self.unit] != self.basis(j).iter().map(|&x| x as u64).collect::<Vec<_>>() {
                out.push(format!("unit column at {}", self.labels[j]));
            }
        }
        if self.star[self.unit] != self.unit {
            out.push("star moves the unit".into());
        }
        for i in 0..r {
            if self.star[self.star[i]] != i {
                out.push(format!("star is not involutive at {}", self.labels[i]));
            }
            for j in 0..r {
                let fp: u64 = self.constants[i][j].iter().zip(&self.dims).map(|(c, d)| c * *d as u64).sum();
                if fp != (self.dims[i] * self.dims[j]) as u64 {
                    out.push(format!("dimension identity fails for {} ⊗ {}", self.labels[i], self.labels[j]));
                }
                for k in 0..r {
                    if self.constants[i][j][k] != self.constants[self.star[j]][self.star[i]][self.star[k]] {
                        out.push(format!("star is not an anti-automorphism at ({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut triples = Vec::new();
        for (i, row) in self.constants.iter().enumerate() {
            for (j, col) in row.iter().enumerate() {
                for (k, &c) in col.iter().enumerate() {
                    if c != 0 {
                        triples.push(json!([i, j, k, c]));
                    }
                }
            }
        }
        json!({ "labels": self.labels, "N": triples, "star": self.star, "dims": self.dims })
    }
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |v: &[u64]| {
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, &c)| if c == 1 { self.labels[k].clone() } else { format!("{c} {}", self.labels[k]) })
                .collect();
            parts.join(" + ")
        };
        for i in 0..self.rank() {
            for j in i..self.rank() {
                writeln!(f, "{} * {} = {}", self.labels[i], self.labels[j], term(&self.constants[i][j]))?;
            }
        }
        for i in 0..self.rank() {
            writeln!(f, "{}^* = {}", self.labels[i], self.labels[self.star[i]])?;
        }
        Ok(())
    }
}

fn tensor_character(h: &HopfAlgebraData, a: &Character, b: &Character) -> Character {
    let values = (0..h.dim())
        .map(|k| {
            h.coproduct(k)
                .iter()
                .fold(CycNumber::zero(h.conductor), |acc, (l, r, c)| acc.add(&c.mul(&a.values[*l]).mul(&b.values[*r])))
        })
        .collect();
    Character::new(values)
}

fn dual_character(h: &HopfAlgebraData, a: &Character) -> Character {
    let values = (0..h.dim())
        .map(|k| h.antipode(k).iter().fold(CycNumber::zero(h.conductor), |acc, (j, c)| acc.add(&c.mul(&a.values[*j]))))
        .collect();
    Character::new(values)
}

fn counit_character(h: &HopfAlgebraData) -> Character {
    Character::new((0..h.dim()).map(|k| h.counit(k).clone()).collect())
}

/// Index of the simple whose character is `chi`.
fn find_simple(chi: &Character, simples: &[Character], what: &str) -> Result<usize, ReprError> {
    let coeffs = decompose_character(chi, simples).map_err(|_| ReprError::NotSimple(what.to_string()))?;
    match coeffs.iter().enumerate().filter(|(_, c)| **c != 0).collect::<Vec<_>>().as_slice() {
        [(i, 1)] => Ok(*i),
        _ => Err(ReprError::NotSimple(what.to_string())),
    }
}

/// Structure constants from decomposing every pairwise tensor character; duals from S.
pub fn fusion_ring(h: &HopfAlgebraData, simples: &[ModuleRep], exec: Execution) -> Result<FusionRing, ReprError> {
    let chars: Vec<Character> = simples.iter().map(|s| s.character()).collect();
    let r = simples.len();
    let unit = find_simple(&counit_character(h), &chars, "the trivial module")?;
    let rows = exec.map_range(r, |i| -> Result<Vec<Vec<u64>>, ReprError> {
        (0..r)
            .map(|j| {
                decompose_character(&tensor_character(h, &chars[i], &chars[j]), &chars).map_err(|source| ReprError::Decompose {
                    left: simples[i].label.clone(),
                    right: simples[j].label.clone(),
                    source,
                })
            })
            .collect()
    });
    let constants = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let star = chars
        .iter()
        .zip(simples)
        .map(|(c, s)| find_simple(&dual_character(h, c), &chars, &format!("{}^*", s.label)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FusionRing {
        labels: simples.iter().map(|s| s.label.clone()).collect(),
        dims: simples.iter().map(|s| s.dim).collect(),
        unit,
        constants,
        star,
    })
}

pub fn hwt_fusion_ring(modules: &HwtModules, exec: Execution) -> Result<FusionRing, ReprError> {
    fusion_ring(&modules.algebra, &modules.simples, exec)
}

fn eps(x: i64) -> i64 {
    x.rem_euclid(2)
}

/// Classes [χ_ijk] and [ρ_jk] for arbitrary integer labels, reduced to the catalogued simples
/// by periodicity, ρ_{−j,k} = ρ_jk, and the splitting of ρ_0k and ρ_nk.
pub struct HwtClasses<'a> {
    ring: &'a FusionRing,
    big_n: i64,
    n: i64,
}

impl<'a> HwtClasses<'a> {
    pub fn new(ring: &'a FusionRing, big_n: u64, n: u64) -> Self {
        HwtClasses { ring, big_n: big_n as i64, n: n as i64 }
    }

    fn lookup(&self, label: String) -> RingElement {
        let i = self.ring.index_of(&label).unwrap_or_else(|| panic!("no simple labelled {label}"));
        self.ring.basis(i)
    }

    pub fn chi(&self, i: i64, j: i64, k: i64) -> RingElement {
        assert!(k % 2 == 0, "χ_ijk needs k even");
        let jr = eps(j);
        // for odd n the h-eigenvalue depends on j + k
        let k = if self.n % 2 == 1 { k + j - jr } else { k };
        self.lookup(format!("chi_{}_{}_{}", eps(i), jr, k.rem_euclid(2 * self.big_n)))
    }

    pub fn rho(&self, j: i64, k: i64) -> RingElement {
        assert!(eps(j - k) == 0, "ρ_jk needs j ≡ k mod 2");
        let n = self.n;
        let mut jr = j.rem_euclid(2 * n);
        if jr > n {
            jr = 2 * n - jr;
        }
        let k = k.rem_euclid(2 * self.big_n);
        if jr == 0 {
            self.ring.add(&self.chi(0, 0, k), &self.chi(1, 0, k))
        } else if jr == n {
            let k = k - eps(n);
            self.ring.add(&self.chi(0, 1, k), &self.chi(1, 1, k))
        } else {
            self.lookup(format!("rho_{jr}_{k}"))
        }
    }

    /// Labels (i, j, k) of the catalogued one-dimensional simples.
    fn chi_labels(&self) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in (0..2 * self.big_n).step_by(2) {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    fn rho_labels(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for k in (0..2 * self.big_n).filter(|k| eps(j - k) == 0) {
                out.push((j, k));
            }
        }
        out
    }
}

/// Named identities checked on a ring, with the ones that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: Vec<String>,
    pub failed: Vec<String>,
}

impl RelationReport {
    fn check(&mut self, name: impl Into<String>, holds: bool) {
        let name = name.into();
        if !holds {
            self.failed.push(name.clone());
        }
        self.checked.push(name);
    }

    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({ "checked": self.checked.len(), "failed": self.failed, "holds": self.holds() })
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} relations checked, {} failed", self.checked.len(), self.failed.len())?;
        for name in &self.failed {
            write!(f, "\n  FAILED {name}")?;
        }
        Ok(())
    }
}

/// The tensor and duality rules for χ and ρ classes, over every pair of catalogued simples.
/// Periodicity and the splitting of ρ_0k, ρ_nk are checked against explicit modules.
pub fn check_tensor_rules(modules: &HwtModules, ring: &FusionRing) -> RelationReport {
    let cl = HwtClasses::new(ring, modules.big_n(), modules.n());
    let (big_n, n, e) = (cl.big_n, cl.n, eps(cl.n));
    let mut rep = RelationReport::default();
    let chars: Vec<Character> = modules.simples.iter().map(|s| s.character()).collect();
    let class_of = |m: &ModuleRep| -> Option<RingElement> {
        decompose_character(&m.character(), &chars).ok().map(|v| v.into_iter().map(|x| x as i64).collect())
    };

    for j in -n..=3 * n {
        for k in (0..2 * big_n).filter(|k| eps(j - k) == 0) {
            rep.check(format!("[rho_{j}_{k}] reduces as a module"), class_of(&modules.rho(j, k)) == Some(cl.rho(j, k)));
        }
    }
    for i in -1..3 {
        for j in -2..3 {
            for k in (-2 * big_n..4 * big_n).step_by(2) {
                rep.check(format!("[chi_{i}_{j}_{k}] reduces as a module"), class_of(&modules.chi(i, j, k)) == Some(cl.chi(i, j, k)));
            }
        }
    }

    let basis_of = |label: String| ring.basis(ring.index_of(&label).expect("catalogued simple"));
    for &(i, j, k) in &cl.chi_labels() {
        let x = basis_of(format!("chi_{i}_{j}_{k}"));
        for &(i2, j2, k2) in &cl.chi_labels() {
            let y = basis_of(format!("chi_{i2}_{j2}_{k2}"));
            rep.check(format!("chi_{i}{j}{k} chi_{i2}{j2}{k2}"), ring.mul(&x, &y) == cl.chi(i + i2, j + j2, k + k2));
        }
        for &(j2, k2) in &cl.rho_labels() {
            let y = basis_of(format!("rho_{j2}_{k2}"));
            let want = cl.rho(n * j + j2, k + k2 + e * j);
            rep.check(format!("chi_{i}{j}{k} rho_{j2}{k2}"), ring.mul(&x, &y) == want);
            rep.check(format!("rho_{j2}{k2} chi_{i}{j}{k}"), ring.mul(&y, &x) == want);
        }
        rep.check(format!("chi_{i}{j}{k}^*"), ring.apply_star(&x) == cl.chi(i, -j, -k));
    }
    for &(j, k) in &cl.rho_labels() {
        let x = basis_of(format!("rho_{j}_{k}"));
        for &(j2, k2) in &cl.rho_labels() {
            let y = basis_of(format!("rho_{j2}_{k2}"));
            let want = ring.add(&cl.rho(j + j2, k + k2), &cl.rho(j - j2, k + k2));
            rep.check(format!("rho_{j}{k} rho_{j2}{k2}"), ring.mul(&x, &y) == want);
        }
        rep.check(format!("rho_{j}{k}^*"), ring.apply_star(&x) == cl.rho(j, -k));
    }
    rep
}

/// The presentation by a, b, (c), x_1..x_{n−1}: every relation and star rule, and that
/// the monomials a^i b^j c^{k/2} and c^{(k−ε(j))/2} x_j hit every simple.
pub fn check_presentation(big_n: u64, n: u64, ring: &FusionRing) -> RelationReport {
    let cl = HwtClasses::new(ring, big_n, n);
    let (bn, ni) = (big_n as i64, n as i64);
    let mut rep = RelationReport::default();
    let one = ring.one();
    let a = cl.chi(1, 0, 0);
    let b = cl.chi(0, 1, 0);
    let c = cl.chi(0, 0, 2);
    let one_plus_a = ring.add(&one, &a);
    let x = |i: i64| -> RingElement {
        if i == 0 {
            one_plus_a.clone()
        } else if i == ni {
            ring.mul(&b, &one_plus_a)
        } else if i > ni {
            cl.rho(2 * ni - i, eps(2 * ni - i))
        } else {
            cl.rho(i, eps(i))
        }
    };

    rep.check("commutative", ring.is_commutative());
    rep.check("a^2 = 1", ring.pow(&a, 2) == one);
    for i in 1..ni {
        rep.check(format!("a x_{i} = x_{i}"), ring.mul(&a, &x(i)) == x(i));
    }
    if n.is_multiple_of(2) {
        rep.check("b^2 = 1", ring.pow(&b, 2) == one);
        rep.check(format!("c^{bn} = 1"), ring.pow(&c, big_n) == one);
        for i in 1..ni {
            rep.check(format!("b x_{i} = x_{}", ni - i), ring.mul(&b, &x(i)) == x(ni - i));
        }
        for i in 1..ni {
            for j in 1..ni {
                let coeff = ring.pow(&c, ((1 - (-1i64).pow((i * j) as u32)) / 2) as u64);
                let rhs = ring.mul(&coeff, &ring.add(&x((i - j).abs()), &x(i + j)));
                rep.check(format!("x_{i} x_{j}"), ring.mul(&x(i), &x(j)) == rhs);
            }
        }
        let c_inv = ring.pow(&c, big_n - 1);
        rep.check("a^* = a", ring.apply_star(&a) == a);
        rep.check("b^* = b", ring.apply_star(&b) == b);
        rep.check("c^* = c^-1", ring.apply_star(&c) == c_inv);
        for i in 1..ni {
            let want = if i % 2 == 0 { x(i) } else { ring.mul(&c_inv, &x(i)) };
            rep.check(format!("x_{i}^*"), ring.apply_star(&x(i)) == want);
        }
    } else {
        rep.check(format!("b^{} = 1", 2 * bn), ring.pow(&b, 2 * big_n) == one);
        for i in (2..ni).step_by(2) {
            rep.check(format!("b x_{i} = x_{}", ni - i), ring.mul(&b, &x(i)) == x(ni - i));
        }
        for i in 1..ni {
            for j in 1..ni {
                let coeff = ring.pow(&b, (1 - (-1i64).pow((i * j) as u32)) as u64);
                let rhs = ring.mul(&coeff, &ring.add(&x((i - j).abs()), &x(i + j)));
                rep.check(format!("x_{i} x_{j}"), ring.mul(&x(i), &x(j)) == rhs);
            }
        }
        let b_inv = ring.pow(&b, 2 * big_n - 1);
        rep.check("a^* = a", ring.apply_star(&a) == a);
        rep.check("b^* = b^-1", ring.apply_star(&b) == b_inv);
        for i in 1..ni {
            let want = if i % 2 == 0 { x(i) } else { ring.mul(&ring.pow(&b_inv, 2), &x(i)) };
            rep.check(format!("x_{i}^*"), ring.apply_star(&x(i)) == want);
        }
    }

    // the inverse map: every simple is a monomial in the generators
    for &(i, j, k) in &cl.chi_labels() {
        let mono = ring.mul(&ring.mul(&ring.pow(&a, i as u64), &ring.pow(&b, j as u64)), &ring.pow(&c, (k / 2) as u64));
        rep.check(format!("chi_{i}_{j}_{k} = a^{i} b^{j} c^{}", k / 2), mono == cl.chi(i, j, k));
    }
    for &(j, k) in &cl.rho_labels() {
        let e = (k - eps(j)) / 2;
        rep.check(format!("rho_{j}_{k} = c^{e} x_{j}"), ring.mul(&ring.pow(&c, e as u64), &x(j)) == cl.rho(j, k));
    }
    rep
}

/// Isomorphism types met among group-likes here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupType {
    /// C₂ × C_{2N}
    C2xC2N,
    /// C_{4N}
    C4N,
    /// C₂ × C₂ × C_N
    C2xC2xCN,
    /// ⟨b, c | b² = c^{4N} = 1, cb = bc^{2N+1}⟩
    SA8N,
}

impl GroupType {
    pub fn name(&self, big_n: u64) -> String {
        match self {
            GroupType::C2xC2N => format!("C2 x C{}", 2 * big_n),
            GroupType::C4N => format!("C{}", 4 * big_n),
            GroupType::C2xC2xCN => format!("C2 x C2 x C{big_n}"),
            GroupType::SA8N => format!("SA{}", 8 * big_n),
        }
    }
}

/// Which of the four presentations `g` satisfies with generators that generate it.
pub fn identify_group(g: &FiniteGroup, big_n: u64) -> Vec<GroupType> {
    let n = big_n as usize;
    let all: Vec<usize> = (0..g.order()).collect();
    let of_order = |k: usize| all.iter().copied().filter(move |&x| g.element_order(x) == k);
    let generates = |gens: &[usize]| g.generated_by(gens).len() == g.order();
    let mut out = Vec::new();
    if g.order() == 4 * n && g.is_abelian() {
        if of_order(2).any(|a| of_order(2 * n).any(|c| generates(&[a, c]) && !g.generated_by(&[c]).contains(&a))) {
            out.push(GroupType::C2xC2N);
        }
        if of_order(4 * n).next().is_some() {
            out.push(GroupType::C4N);
        }
        let c_candidates: Vec<usize> = of_order(n).collect();
        if of_order(2).any(|a| of_order(2).any(|b| c_candidates.iter().any(|&c| generates(&[a, b, c]) && a != b))) {
            out.push(GroupType::C2xC2xCN);
        }
    }
    if g.order() == 8 * n {
        let found = of_order(4 * n).any(|c| {
            of_order(2).any(|b| g.mul(c, b) == g.mul(b, g.pow(c, 2 * n as i64 + 1)) && generates(&[b, c]))
        });
        if found {
            out.push(GroupType::SA8N);
        }
    }
    out
}

/// A finite group of functionals (or elements) with its Cayley table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub big_n: u64,
    pub labels: Vec<String>,
    pub elements: Vec<Vec<CycNumber>>,
    pub group: FiniteGroup,
    pub types: Vec<GroupType>,
}

impl GroupTable {
    fn from_elements(
        what: &str,
        big_n: u64,
        labels: Vec<String>,
        elements: Vec<Vec<CycNumber>>,
        product: impl Fn(&[CycNumber], &[CycNumber]) -> Vec<CycNumber>,
    ) -> Result<Self, ReprError> {
        let r = elements.len();
        let mut table = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                let p = product(&elements[i], &elements[j]);
                table[i * r + j] = elements.iter().position(|e| *e == p).ok_or_else(|| ReprError::NotClosed(what.to_string()))?;
            }
        }
        let group = FiniteGroup::from_law(labels.clone(), |a, b| table[a * r + b]);
        let types = identify_group(&group, big_n);
        Ok(GroupTable { big_n, labels, elements, group, types })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_commutative(&self) -> bool {
        self.group.is_abelian()
    }

    pub fn type_names(&self) -> String {
        if self.types.is_empty() {
            return "unidentified".to_string();
        }
        self.types.iter().map(|t| t.name(self.big_n)).collect::<Vec<_>>().join(" = ")
    }

    pub fn to_json(&self) -> Value {
        let r = self.order();
        let table: Vec<Vec<usize>> = (0..r).map(|i| (0..r).map(|j| self.group.mul(i, j)).collect()).collect();
        json!({
            "labels": self.labels,
            "order": r,
            "commutative": self.is_commutative(),
            "types": self.types.iter().map(|t| t.name(self.big_n)).collect::<Vec<_>>(),
            "table": table,
        })
    }
}

/// The functional h^i w^k t^q ↦ H^i W^k T^q, given exponents of ω.
fn character_on_words(p: &SuzukiParams, dim: usize, t: i64, w: i64, h: i64) -> Vec<CycNumber> {
    let m = p.conductor();
    (0..dim)
        .map(|x| {
            let (i, k, q) = p.basis_word(x);
            CycNumber::root(m, i * h + k * w + q * t)
        })
        .collect()
}

/// Candidate algebra maps A → k listed as in the proof for each (λ, n parity):
/// t ↦ (−1)^i, w ↦ (−1)^j, h ↦ ω^{2nk}.
fn dual_grouplike_candidates(p: &SuzukiParams) -> Vec<(String, i64, i64, i64)> {
    let m = p.conductor() as i64;
    let (half, bn, n) = (m / 2, p.big_n as i64, p.n as i64);
    let mut out = Vec::new();
    let even_k_only = p.lambda == -1 && n % 2 == 0;
    for k in (0..2 * bn).filter(|k| !even_k_only || k % 2 == 0) {
        for i in 0..2 {
            match (p.lambda, n % 2) {
                (_, 0) => {
                    for j in 0..2 {
                        out.push((format!("chi_{i}{j}{k}"), half * i, half * j, 2 * n * k));
                    }
                }
                (1, _) => out.push((format!("chi_{i}{k}"), half * i, half * k, 2 * n * k)),
                _ => out.push((format!("chi_{i}{k}"), half * i, 0, 2 * n * k)),
            }
        }
    }
    out
}

/// Every sign/root assignment t, w ↦ ±1, h ↦ ω^{2nk} that is an algebra map.
pub fn all_one_dimensional_characters(h: &HopfAlgebraData, p: &SuzukiParams) -> usize {
    let m = p.conductor() as i64;
    let mut count = 0;
    for k in 0..2 * p.big_n as i64 {
        for t in [0, m / 2] {
            for w in [0, m / 2] {
                if is_algebra_map(h, &character_on_words(p, h.dim(), t, w, 2 * p.n as i64 * k)) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// G(A*): the algebra maps A → k under convolution.
pub fn dual_grouplikes(h: &HopfAlgebraData, p: &SuzukiParams) -> Result<GroupTable, ReprError> {
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    for (label, t, w, hh) in dual_grouplike_candidates(p) {
        let f = character_on_words(p, h.dim(), t, w, hh);
        if !is_algebra_map(h, &f) {
            return Err(ReprError::NotAlgebraMap(label));
        }
        labels.push(label);
        elements.push(f);
    }
    GroupTable::from_elements("G(A*)", p.big_n, labels, elements, |f, g| convolution_product(h, f, g))
}

/// G(A): the group-like elements of A under multiplication.
pub fn algebra_grouplikes(h: &HopfAlgebraData, elements: &SuzukiElements) -> Result<GroupTable, ReprError> {
    let mut labels = Vec::new();
    let mut els = Vec::new();
    for (label, g) in &elements.grouplikes {
        let dg = h.apply_coproduct(g);
        let n = h.dim();
        let tensor: Vec<CycNumber> = (0..n * n).map(|c| g[c / n].mul(&g[c % n])).collect();
        if dg != tensor || !h.eval_counit(g).is_one() {
            return Err(ReprError::NotAlgebraMap(format!("{label} (not group-like)")));
        }
        labels.push(label.clone());
        els.push(g.clone());
    }
    GroupTable::from_elements("G(A)", elements.params.big_n, labels, els, |a, b| h.mul(a, b))
}

/// (i) αβ is a primitive N-th root of unity and (ii) αβ⁻¹ a primitive n-th root of λ.
pub fn primitivity_criterion(p: &SuzukiParams, alpha: &RootOfUnity, beta: &RootOfUnity) -> bool {
    let prod = alpha.mul(beta);
    let ratio = alpha.mul(&beta.inv());
    let ratio_order = if p.lambda == 1 { p.n } else { 2 * p.n };
    let lambda = if p.lambda == 1 { RootOfUnity::one() } else { RootOfUnity::minus_one() };
    prod.order() == p.big_n && ratio.order() == ratio_order && ratio.pow(p.n as i64).reduced() == lambda.reduced()
}

/// Expected verdict: the primitivity criterion when λ = −1 or n is odd; otherwise
/// (λ = +1, n even) every braiding is degenerate.
pub fn predicted_nondegenerate(p: &SuzukiParams, alpha: &RootOfUnity, beta: &RootOfUnity) -> bool {
    p.is_self_dual() && primitivity_criterion(p, alpha, beta)
}

/// Invertibility of the Gram matrix σ_αβ(b_i, b_j) on the group basis.
pub fn gram_nondegenerate(p: SuzukiParams, alpha: &RootOfUnity, beta: &RootOfUnity) -> Result<bool, ReprError> {
    let form = sigma_group_values(p, alpha, beta)?;
    let n = form.dim;
    let rows = (0..n).map(|i| (0..n).map(|j| form.get(i, j).clone()).collect()).collect();
    Ok(Matrix::from_rows(p.conductor(), rows).is_invertible())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramRow {
    pub alpha: RootOfUnity,
    pub beta: RootOfUnity,
    pub nondegenerate: bool,
    /// `predicted_nondegenerate`
    pub criterion: bool,
}

/// Gram verdict next to the criterion for every σ_αβ of the algebra.
pub fn gram_report(p: SuzukiParams, exec: Execution) -> Result<Vec<GramRow>, ReprError> {
    let dim = 4 * (p.n * p.big_n) as usize;
    if dim > GRAM_LIMIT {
        return Err(CatalogError::TooLarge { dim, limit: GRAM_LIMIT }.into());
    }
    let params = sigma_parameters(&p);
    exec.map(&params, |(alpha, beta)| {
        Ok(GramRow { alpha: *alpha, beta: *beta, nondegenerate: gram_nondegenerate(p, alpha, beta)?, criterion: predicted_nondegenerate(&p, alpha, beta) })
    })
    .into_iter()
    .collect()
}

#[derive(Clone, Debug)]
pub enum SelfDuality {
    /// A braiding whose Gram matrix is invertible identifies A with A*.
    SelfDual { alpha: RootOfUnity, beta: RootOfUnity, gram_checked: Option<bool> },
    /// G(A) is commutative while G(A*) is not.
    NotSelfDual { algebra: GroupTable, dual: GroupTable },
}

impl SelfDuality {
    pub fn is_self_dual(&self) -> bool {
        matches!(self, SelfDuality::SelfDual { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            SelfDuality::SelfDual { alpha, beta, gram_checked } => json!({
                "self_dual": true,
                "witness": { "alpha": alpha.to_string(), "beta": beta.to_string() },
                "gram_nondegenerate": gram_checked,
            }),
            SelfDuality::NotSelfDual { algebra, dual } => json!({
                "self_dual": false,
                "grouplikes": algebra.to_json(),
                "dual_grouplikes": dual.to_json(),
            }),
        }
    }
}

impl fmt::Display for SelfDuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfDuality::SelfDual { alpha, beta, gram_checked } => {
                write!(f, "self-dual: braiding sigma(alpha={alpha}, beta={beta}) is non-degenerate")?;
                match gram_checked {
                    Some(true) => write!(f, " (Gram matrix invertible)"),
                    Some(false) => write!(f, " (Gram matrix SINGULAR: criterion and elimination disagree)"),
                    None => write!(f, " (by the criterion; Gram matrix above {GRAM_LIMIT} not eliminated)"),
                }
            }
            SelfDuality::NotSelfDual { algebra, dual } => write!(
                f,
                "not self-dual: G(A) = {} is commutative, G(A*) = {} is {}",
                algebra.type_names(),
                dual.type_names(),
                if dual.is_commutative() { "commutative" } else { "noncommutative" }
            ),
        }
    }
}

/// The explicit witness: α = ω^{N+2n}, β = ω^{2n−N} for λ = −1, α = ω^{2N+2n}, β = ω^{2n−2N} for λ = +1.
pub fn self_dual_witness(p: &SuzukiParams) -> (RootOfUnity, RootOfUnity) {
    let m = p.conductor();
    let (bn, n) = (p.big_n as i64, p.n as i64);
    if p.lambda == -1 {
        (RootOfUnity::new(m, bn + 2 * n), RootOfUnity::new(m, 2 * n - bn))
    } else {
        (RootOfUnity::new(m, 2 * bn + 2 * n), RootOfUnity::new(m, 2 * n - 2 * bn))
    }
}

pub fn self_duality_report(p: SuzukiParams) -> Result<SelfDuality, ReprError> {
    if p.is_self_dual() {
        let (alpha, beta) = self_dual_witness(&p);
        let dim = 4 * (p.n * p.big_n) as usize;
        let gram_checked = if dim <= GRAM_LIMIT { Some(gram_nondegenerate(p, &alpha, &beta)?) } else { None };
        return Ok(SelfDuality::SelfDual { alpha, beta, gram_checked });
    }
    let h = suzuki_algebra(p);
    let elements = SuzukiElements::derive(&h, p);
    Ok(SelfDuality::NotSelfDual { algebra: algebra_grouplikes(&h, &elements)?, dual: dual_grouplikes(&h, &p)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;

    fn params(big_n: u64, n: u64, lambda: i8) -> SuzukiParams {
        SuzukiParams::new(big_n, n, lambda).unwrap()
    }

    #[test]
    fn group_identification_on_known_groups() {
        // C2 × C6 and C12
        let c2c6 = FiniteGroup::from_law((0..12).map(|x| x.to_string()).collect(), |a, b| ((a / 6 + b / 6) % 2) * 6 + (a % 6 + b % 6) % 6);
        assert_eq!(identify_group(&c2c6, 3), vec![GroupType::C2xC2N, GroupType::C2xC2xCN]);
        let c12 = FiniteGroup::from_law((0..12).map(|x| x.to_string()).collect(), |a, b| (a + b) % 12);
        assert_eq!(identify_group(&c12, 3), vec![GroupType::C4N]);
    }

    #[test]
    fn dual_grouplikes_of_small_algebras() {
        for (p, want) in [
            (params(1, 2, 1), GroupType::SA8N),
            (params(1, 3, -1), GroupType::C4N),
            (params(1, 3, 1), GroupType::C2xC2N),
            (params(1, 2, -1), GroupType::C2xC2xCN),
        ] {
            let h = suzuki_algebra(p);
            let g = dual_grouplikes(&h, &p).unwrap();
            assert!(g.types.contains(&want), "{p:?}: {:?}", g.types);
            assert_eq!(all_one_dimensional_characters(&h, &p), g.order(), "{p:?}");
        }
    }

    #[test]
    fn kac_paljutkin_case_is_self_dual() {
        let r = self_duality_report(params(1, 2, -1)).unwrap();
        assert!(matches!(r, SelfDuality::SelfDual { gram_checked: Some(true), .. }), "{r}");
    }

    #[test]
    fn fusion_ring_of_g12_presentation() {
        let m = HwtModules::new(Family::GroupGnn { big_n: 1, n: 2 }).unwrap();
        let ring = hwt_fusion_ring(&m, Execution::Sequential).unwrap();
        assert!(ring.axiom_failures().is_empty());
        let rep = check_presentation(1, 2, &ring);
        assert!(rep.holds(), "{rep}");
    }
}
