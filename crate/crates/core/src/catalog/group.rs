//! Finite groups given by a multiplication law on normal forms, and the Hopf
//! algebras built on their group algebras.

use std::collections::{HashMap, VecDeque};

use crate::cyclo::CycNumber;
use crate::hopf::{HopfAlgebraData, HopfTables, ModuleRep, Sparse};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Tabulate `law` on `0..labels.len()`. Panics if the law has no identity or inverses.
    pub fn from_law(labels: Vec<String>, law: impl Fn(usize, usize) -> usize) -> Self {
        let n = labels.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = law(a, b);
                assert!(c < n, "group law leaves the element range");
                table[a * n + b] = c;
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x)).expect("group law has an identity");
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == identity).expect("every element is invertible"))
            .collect();
        FiniteGroup { labels, table, identity, inverse }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements reachable from `gens` under multiplication.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn mul_table(g: &FiniteGroup, m: u64) -> Vec<Sparse> {
    let n = g.order();
    (0..n * n).map(|idx| vec![(g.mul(idx / n, idx % n), CycNumber::one(m))]).collect()
}

/// k[G] with Δg = g ⊗ g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_hopf(name: &str, g: &FiniteGroup, conductor: u64) -> HopfAlgebraData {
    let n = g.order();
    let one = CycNumber::one(conductor);
    let tables = HopfTables {
        mult: mul_table(g, conductor),
        unit: vec![(g.identity(), one.clone())],
        comult: (0..n).map(|i| vec![(i, i, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode: (0..n).map(|i| vec![(g.inv(i), one.clone())]).collect(),
    };
    HopfAlgebraData::from_tables(name, g.labels().to_vec(), conductor, tables)
}

/// Coproduct and antipode prescribed on one generator of the group.
pub struct GeneratorImage {
    pub element: usize,
    pub coproduct: Vec<(usize, usize, CycNumber)>,
    pub antipode: Sparse,
}

fn accumulate<K: std::hash::Hash + Eq + Ord + Copy>(map: &mut HashMap<K, CycNumber>, key: K, v: CycNumber) {
    map.entry(key).and_modify(|x| *x = x.add(&v)).or_insert(v);
}

/// k[G] as an algebra, with Δ extended multiplicatively and S anti-multiplicatively
/// from the generator data; ε(g) = 1 on every group element.
pub fn twisted_group_hopf(name: &str, g: &FiniteGroup, conductor: u64, gens: &[GeneratorImage]) -> HopfAlgebraData {
    let n = g.order();
    let one = CycNumber::one(conductor);
    let mut comult: Vec<Option<Vec<(usize, usize, CycNumber)>>> = vec![None; n];
    let mut antipode: Vec<Option<Sparse>> = vec![None; n];
    comult[g.identity()] = Some(vec![(g.identity(), g.identity(), one.clone())]);
    antipode[g.identity()] = Some(vec![(g.identity(), one.clone())]);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for gen in gens {
            let y = g.mul(x, gen.element);
            if comult[y].is_some() {
                continue;
            }
            let mut delta = HashMap::new();
            for (a, b, c) in comult[x].as_ref().expect("visited") {
                for (p, q, d) in &gen.coproduct {
                    accumulate(&mut delta, (g.mul(*a, *p), g.mul(*b, *q)), c.mul(d));
                }
            }
            let mut anti = HashMap::new();
            for (a, c) in &gen.antipode {
                for (b, d) in antipode[x].as_ref().expect("visited") {
                    accumulate(&mut anti, g.mul(*a, *b), c.mul(d));
                }
            }
            let mut delta: Vec<_> = delta.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect();
            delta.sort_by_key(|(a, b, _)| (*a, *b));
            let mut anti: Sparse = anti.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            anti.sort_by_key(|(k, _)| *k);
            comult[y] = Some(delta);
            antipode[y] = Some(anti);
            queue.push_back(y);
        }
    }
    let tables = HopfTables {
        mult: mul_table(g, conductor),
        unit: vec![(g.identity(), one.clone())],
        comult: comult.into_iter().map(|c| c.expect("generators generate the group")).collect(),
        counit: vec![one; n],
        antipode: antipode.into_iter().map(|s| s.expect("generators generate the group")).collect(),
    };
    HopfAlgebraData::from_tables(name, g.labels().to_vec(), conductor, tables)
}

/// A representation of k[G] from matrices on generators, extended along a BFS.
pub fn module_from_generators(label: &str, g: &FiniteGroup, dim: usize, conductor: u64, gens: &[(usize, Matrix)]) -> ModuleRep {
    let n = g.order();
    let mut action: Vec<Option<Matrix>> = vec![None; n];
    action[g.identity()] = Some(Matrix::identity(dim, conductor));
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (e, mat) in gens {
            let y = g.mul(x, *e);
            if action[y].is_none() {
                action[y] = Some(action[x].as_ref().expect("visited").mul(mat));
                queue.push_back(y);
            }
        }
    }
    ModuleRep::new(label, action.into_iter().map(|m| m.expect("generators generate the group")).collect())
}

/// Σ ζ^e over a sparse set of cells, kept as integer exponent counts until the end.
pub(crate) struct RootSum {
    conductor: u64,
    cells: HashMap<usize, Vec<i64>>,
}

impl RootSum {
    pub fn new(conductor: u64) -> Self {
        RootSum { conductor, cells: HashMap::new() }
    }

    pub fn add(&mut self, cell: usize, exponent: i64) {
        let m = self.conductor as i64;
        let slot = self.cells.entry(cell).or_insert_with(|| vec![0; m as usize]);
        slot[exponent.rem_euclid(m) as usize] += 1;
    }

    /// Dense vector of length `len`, every cell scaled by num/den.
    pub fn finish(self, len: usize, num: i64, den: i64) -> Vec<CycNumber> {
        let m = self.conductor;
        let scale = CycNumber::from_fraction(m, num, den);
        let mut out = vec![CycNumber::zero(m); len];
        for (cell, counts) in self.cells {
            out[cell] = CycNumber::from_int_coeffs(m, &counts).mul(&scale);
        }
        out
    }
}

/// Primitive idempotents E_x = (1/|H|) Σ_h ζ^{-pair(x, h)} h of an abelian subgroup
/// H (listed as group indices), and the tensor Σ_{x,y} ζ^{phase(x,y)} E_x ⊗ E_y.
pub(crate) fn idempotent_tensor(
    conductor: u64,
    dim: usize,
    subgroup: &[usize],
    pair: impl Fn(usize, usize) -> i64,
    phase: impl Fn(usize, usize) -> i64,
) -> Vec<CycNumber> {
    let order = subgroup.len();
    let m = conductor as i64;
    let mu = conductor as usize;
    let pairs: Vec<usize> = (0..order * order).map(|c| pair(c / order, c % order).rem_euclid(m) as usize).collect();
    // counts[(a * order + b) * m + e] is the number of terms ζ^e at cell (a, b)
    let mut counts = vec![0i64; order * order * mu];
    for x in 0..order {
        for y in 0..order {
            let p = phase(x, y).rem_euclid(m) as usize;
            for a in 0..order {
                let pa = (p + mu - pairs[x * order + a]) % mu;
                let row = &mut counts[a * order * mu..(a + 1) * order * mu];
                for b in 0..order {
                    let e = (pa + mu - pairs[y * order + b]) % mu;
                    row[b * mu + e] += 1;
                }
            }
        }
    }
    let scale = CycNumber::from_fraction(conductor, 1, (order * order) as i64);
    let mut out = vec![CycNumber::zero(conductor); dim * dim];
    for a in 0..order {
        for b in 0..order {
            let cell = &counts[(a * order + b) * mu..(a * order + b + 1) * mu];
            if cell.iter().any(|&c| c != 0) {
                out[subgroup[a] * dim + subgroup[b]] = CycNumber::from_int_coeffs(conductor, cell).mul(&scale);
            }
        }
    }
    out
}

/// Σ_x ζ^{weight(x)} E_x for the same idempotents.
pub(crate) fn idempotent_combination(
    conductor: u64,
    dim: usize,
    subgroup: &[usize],
    pair: impl Fn(usize, usize) -> i64,
    weight: impl Fn(usize) -> i64,
) -> Vec<CycNumber> {
    let mut sum = RootSum::new(conductor);
    for x in 0..subgroup.len() {
        let w = weight(x);
        for (a, &ga) in subgroup.iter().enumerate() {
            sum.add(ga, w - pair(x, a));
        }
    }
    sum.finish(dim, 1, subgroup.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::validate_hopf;

    fn cyclic(m: usize) -> FiniteGroup {
        FiniteGroup::from_law((0..m).map(|i| format!("g^{i}")).collect(), |a, b| (a + b) % m)
    }

    #[test]
    fn cyclic_group_basics() {
        let g = cyclic(6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(2), 4);
        assert_eq!(g.pow(1, -1), 5);
        assert_eq!(g.element_order(2), 3);
        assert!(g.is_abelian());
        assert_eq!(g.generated_by(&[2]), vec![0, 2, 4]);
    }

    #[test]
    fn group_algebra_is_hopf() {
        assert!(validate_hopf(&group_hopf("C5", &cyclic(5), 5)).is_ok());
    }

    #[test]
    fn idempotents_sum_to_one() {
        let g = cyclic(4);
        let ones = idempotent_combination(4, 4, &[0, 1, 2, 3], |x, a| (x * a) as i64, |_| 0);
        assert!(ones[0].is_one());
        assert!(ones[1..].iter().all(CycNumber::is_zero));
        let _ = g;
    }
}
