use std::collections::HashMap;

use crate::cyclo::CycNumber;

/// A dense coefficient vector in the algebra's basis.
pub type Element = Vec<CycNumber>;

/// Sorted (index, nonzero coefficient) pairs.
pub type Sparse = Vec<(usize, CycNumber)>;

/// Raw structure tensors handed to [`HopfAlgebraData::from_tables`].
pub struct HopfTables {
    /// `mult[i * dim + j]` is the product b_i b_j.
    pub mult: Vec<Sparse>,
    pub unit: Sparse,
    /// `comult[i]` lists (left, right, coefficient) for Δ(b_i).
    pub comult: Vec<Vec<(usize, usize, CycNumber)>>,
    pub counit: Vec<CycNumber>,
    /// `antipode[i]` is S(b_i).
    pub antipode: Vec<Sparse>,
}

/// Structure tensors of a finite-dimensional Hopf algebra over Q(ζ_conductor).
#[derive(Clone, Debug)]
pub struct HopfAlgebraData {
    pub name: String,
    pub labels: Vec<String>,
    pub conductor: u64,
    dim: usize,
    mult: Vec<Sparse>,
    unit: Sparse,
    comult: Vec<Vec<(usize, usize, CycNumber)>>,
    counit: Vec<CycNumber>,
    antipode: Vec<Sparse>,
}

pub(crate) fn lift(x: &CycNumber, m: u64) -> CycNumber {
    if x.conductor() == m {
        x.clone()
    } else {
        x.embed(m).unwrap_or_else(|_| panic!("coefficient of conductor {} does not embed in {m}", x.conductor()))
    }
}

/// Merge duplicates, drop zeros, sort by index.
pub(crate) fn normalize_sparse(items: Sparse, m: u64) -> Sparse {
    let mut map: HashMap<usize, CycNumber> = HashMap::new();
    for (k, c) in items {
        let c = lift(&c, m);
        map.entry(k).and_modify(|v| *v = v.add(&c)).or_insert(c);
    }
    let mut out: Sparse = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(k, _)| *k);
    out
}

fn normalize_pairs(items: Vec<(usize, usize, CycNumber)>, m: u64) -> Vec<(usize, usize, CycNumber)> {
    let mut map: HashMap<(usize, usize), CycNumber> = HashMap::new();
    for (a, b, c) in items {
        let c = lift(&c, m);
        map.entry((a, b)).and_modify(|v| *v = v.add(&c)).or_insert(c);
    }
    let mut out: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect();
    out.sort_by_key(|(a, b, _)| (*a, *b));
    out
}

pub(crate) fn to_sparse(e: &[CycNumber]) -> Sparse {
    e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

impl HopfAlgebraData {
    pub fn from_tables(name: impl Into<String>, labels: Vec<String>, conductor: u64, t: HopfTables) -> Self {
        let dim = labels.len();
        assert_eq!(t.mult.len(), dim * dim, "mult table must have dim^2 entries");
        assert_eq!(t.comult.len(), dim, "comult table must have dim entries");
        assert_eq!(t.counit.len(), dim, "counit must have dim entries");
        assert_eq!(t.antipode.len(), dim, "antipode must have dim entries");
        let m = conductor;
        HopfAlgebraData {
            name: name.into(),
            labels,
            conductor,
            dim,
            mult: t.mult.into_iter().map(|s| normalize_sparse(s, m)).collect(),
            unit: normalize_sparse(t.unit, m),
            comult: t.comult.into_iter().map(|s| normalize_pairs(s, m)).collect(),
            counit: t.counit.iter().map(|c| lift(c, m)).collect(),
            antipode: t.antipode.into_iter().map(|s| normalize_sparse(s, m)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, CycNumber)] {
        &self.mult[i * self.dim + j]
    }

    pub fn unit(&self) -> &[(usize, CycNumber)] {
        &self.unit
    }

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, CycNumber)] {
        &self.comult[i]
    }

    pub fn counit(&self, i: usize) -> &CycNumber {
        &self.counit[i]
    }

    pub fn antipode(&self, i: usize) -> &[(usize, CycNumber)] {
        &self.antipode[i]
    }

    /// Replace one product; used to build corrupted copies for testing validators.
    pub fn set_product(&mut self, i: usize, j: usize, value: Sparse) {
        let m = self.conductor;
        self.mult[i * self.dim + j] = normalize_sparse(value, m);
    }

    pub fn set_coproduct(&mut self, i: usize, value: Vec<(usize, usize, CycNumber)>) {
        let m = self.conductor;
        self.comult[i] = normalize_pairs(value, m);
    }

    pub fn set_antipode(&mut self, i: usize, value: Sparse) {
        let m = self.conductor;
        self.antipode[i] = normalize_sparse(value, m);
    }

    pub fn label_of(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Element {
        vec![CycNumber::zero(self.conductor); self.dim]
    }

    pub fn scalar(&self, c: &CycNumber) -> Element {
        let mut e = self.zero();
        for (k, u) in &self.unit {
            e[*k] = u.mul(c);
        }
        e
    }

    pub fn one(&self) -> Element {
        self.scalar(&CycNumber::one(self.conductor))
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut e = self.zero();
        e[i] = CycNumber::one(self.conductor);
        e
    }

    pub fn from_sparse(&self, s: &[(usize, CycNumber)]) -> Element {
        let mut e = self.zero();
        for (k, c) in s {
            e[*k] = e[*k].add(c);
        }
        e
    }

    pub fn add(&self, a: &[CycNumber], b: &[CycNumber]) -> Element {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &[CycNumber], b: &[CycNumber]) -> Element {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn scale(&self, a: &[CycNumber], c: &CycNumber) -> Element {
        a.iter().map(|x| x.mul(c)).collect()
    }

    pub fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Element {
        self.mul_sparse(&to_sparse(a), &to_sparse(b))
    }

    pub(crate) fn mul_sparse(&self, a: &[(usize, CycNumber)], b: &[(usize, CycNumber)]) -> Element {
        let mut out = self.zero();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x.mul(y);
                for (k, c) in self.product(*i, *j) {
                    out[*k] = out[*k].add(&xy.mul(c));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[CycNumber], e: u64) -> Element {
        let mut acc = self.one();
        let mut base = a.to_vec();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn apply_antipode(&self, a: &[CycNumber]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.antipode(i) {
                out[*k] = out[*k].add(&x.mul(c));
            }
        }
        out
    }

    pub fn eval_counit(&self, a: &[CycNumber]) -> CycNumber {
        a.iter()
            .zip(&self.counit)
            .filter(|(x, e)| !x.is_zero() && !e.is_zero())
            .fold(CycNumber::zero(self.conductor), |acc, (x, e)| acc.add(&x.mul(e)))
    }

    /// Δ(a) as a dense dim × dim table, index left * dim + right.
    pub fn apply_coproduct(&self, a: &[CycNumber]) -> Vec<CycNumber> {
        let n = self.dim;
        let mut out = vec![CycNumber::zero(self.conductor); n * n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (l, r, c) in self.coproduct(i) {
                out[l * n + r] = out[l * n + r].add(&x.mul(c));
            }
        }
        out
    }

    /// A basis index that does not commute with `a`, if any.
    pub fn non_central_witness(&self, a: &[CycNumber]) -> Option<usize> {
        let sa = to_sparse(a);
        (0..self.dim).find(|&k| {
            let b = [(k, CycNumber::one(self.conductor))];
            self.mul_sparse(&sa, &b) != self.mul_sparse(&b, &sa)
        })
    }

    /// Product in A ⊗ A of two dense dim × dim tables.
    pub(crate) fn tensor_mul(&self, x: &[CycNumber], y: &[CycNumber]) -> Vec<CycNumber> {
        let n = self.dim;
        let rows_x: Vec<Sparse> = (0..n).map(|a| to_sparse(&x[a * n..(a + 1) * n])).collect();
        let rows_y: Vec<Sparse> = (0..n).map(|c| to_sparse(&y[c * n..(c + 1) * n])).collect();
        let mut out = vec![CycNumber::zero(self.conductor); n * n];
        for (a, rx) in rows_x.iter().enumerate() {
            if rx.is_empty() {
                continue;
            }
            for (c, ry) in rows_y.iter().enumerate() {
                if ry.is_empty() || self.product(a, c).is_empty() {
                    continue;
                }
                let second = self.mul_sparse(rx, ry);
                for (f, fc) in self.product(a, c) {
                    for (s, sv) in second.iter().enumerate() {
                        if !sv.is_zero() {
                            out[f * n + s] = out[f * n + s].add(&fc.mul(sv));
                        }
                    }
                }
            }
        }
        out
    }

    /// 1 ⊗ 1 as a dense table.
    pub(crate) fn tensor_one(&self) -> Vec<CycNumber> {
        let n = self.dim;
        let mut out = vec![CycNumber::zero(self.conductor); n * n];
        for (i, a) in &self.unit {
            for (j, b) in &self.unit {
                out[i * n + j] = a.mul(b);
            }
        }
        out
    }
}
