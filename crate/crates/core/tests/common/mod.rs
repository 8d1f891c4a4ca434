//! Single-entry mutations of catalog structures, shared by the mutation suite
//! and the acceptance harness. Each mutation adds 1 to one coefficient; a
//! validator that accepts the result is a survivor.
#![allow(dead_code)]

use hopfinv::catalog::{AlgebraBundle, BraidSide};
use hopfinv::cyclo::CycNumber;
use hopfinv::hopf::{validate_braiding, validate_hopf, validate_r_matrix, HopfAlgebraData, HopfTables};
use hopfinv::reprings::FusionRing;

#[derive(Debug, Default)]
pub struct Outcome {
    pub tried: usize,
    pub survivors: Vec<String>,
}

impl Outcome {
    fn record(&mut self, what: String, rejected: bool) {
        self.tried += 1;
        if !rejected {
            self.survivors.push(what);
        }
    }

    pub fn merge(&mut self, other: Outcome) {
        self.tried += other.tried;
        self.survivors.extend(other.survivors);
    }
}

fn bump(c: &CycNumber) -> CycNumber {
    c.add(&CycNumber::one(c.conductor()))
}

fn bump_sparse(s: &[(usize, CycNumber)], at: usize, m: u64) -> Vec<(usize, CycNumber)> {
    let mut out = s.to_vec();
    match out.iter_mut().find(|(k, _)| *k == at) {
        Some((_, c)) => *c = bump(c),
        None => out.push((at, CycNumber::one(m))),
    }
    out
}

fn tables(h: &HopfAlgebraData) -> HopfTables {
    let n = h.dim();
    HopfTables {
        mult: (0..n * n).map(|c| h.product(c / n, c % n).to_vec()).collect(),
        unit: h.unit().to_vec(),
        comult: (0..n).map(|i| h.coproduct(i).to_vec()).collect(),
        counit: (0..n).map(|i| h.counit(i).clone()).collect(),
        antipode: (0..n).map(|i| h.antipode(i).to_vec()).collect(),
    }
}

fn rebuild(h: &HopfAlgebraData, t: HopfTables) -> HopfAlgebraData {
    HopfAlgebraData::from_tables(h.name.clone(), h.labels.clone(), h.conductor, t)
}

/// Every product coefficient b_i b_j at b_{(i+j) mod n}, every counit value,
/// the leading coefficient of each coproduct and antipode, and the unit.
pub fn mutate_hopf(h: &HopfAlgebraData) -> Outcome {
    let n = h.dim();
    let m = h.conductor;
    let mut out = Outcome::default();
    for i in 0..n {
        for j in 0..n {
            let mut g = h.clone();
            g.set_product(i, j, bump_sparse(h.product(i, j), (i + j) % n, m));
            out.record(format!("{} product {i},{j}", h.name), validate_hopf(&g).is_err());
        }
    }
    for i in 0..n {
        let mut t = tables(h);
        t.counit[i] = bump(&t.counit[i]);
        out.record(format!("{} counit {i}", h.name), validate_hopf(&rebuild(h, t)).is_err());

        let mut g = h.clone();
        let mut cp = h.coproduct(i).to_vec();
        cp[0].2 = bump(&cp[0].2);
        g.set_coproduct(i, cp);
        out.record(format!("{} coproduct {i}", h.name), validate_hopf(&g).is_err());

        let mut g = h.clone();
        g.set_antipode(i, bump_sparse(h.antipode(i), h.antipode(i)[0].0, m));
        out.record(format!("{} antipode {i}", h.name), validate_hopf(&g).is_err());
    }
    let mut t = tables(h);
    t.unit = bump_sparse(&t.unit, t.unit[0].0, m);
    out.record(format!("{} unit", h.name), validate_hopf(&rebuild(h, t)).is_err());
    out
}

/// One entry of every R-matrix or braiding: each nonzero entry and each diagonal entry.
pub fn mutate_braidings(b: &AlgebraBundle) -> Outcome {
    let h = &b.algebra;
    let n = h.dim();
    let mut out = Outcome::default();
    match &b.side {
        BraidSide::Modules { r_matrices, .. } => {
            for r in r_matrices {
                for e in (0..n * n).filter(|&e| !r.entries[e].is_zero() || e / n == e % n) {
                    let mut bad = r.clone();
                    bad.entries[e] = bump(&bad.entries[e]);
                    out.record(format!("{} {} entry {e}", b.id(), r.label), validate_r_matrix(h, &bad).is_err());
                }
            }
        }
        BraidSide::Comodules { braidings, .. } => {
            for s in braidings {
                for e in (0..n * n).filter(|&e| !s.sigma[e].is_zero() || e / n == e % n) {
                    let mut bad = s.clone();
                    bad.sigma[e] = bump(&bad.sigma[e]);
                    out.record(format!("{} {} entry {e}", b.id(), s.label), validate_braiding(h, &bad).is_err());
                }
            }
        }
    }
    out
}

/// The (0, 0) entry of each basis element's action matrix, for every simple module.
pub fn mutate_modules(b: &AlgebraBundle) -> Outcome {
    let mut out = Outcome::default();
    for s in &b.modules {
        for i in 0..s.action.len() {
            let mut bad = s.clone();
            let v = bump(bad.action[i].get(0, 0));
            bad.action[i].set(0, 0, v);
            out.record(format!("{} module {} at b_{i}", b.id(), s.label), bad.validate(&b.algebra).is_err());
        }
    }
    out
}

/// Every structure constant of a fusion ring.
pub fn mutate_ring(ring: &FusionRing) -> Outcome {
    let r = ring.rank();
    let mut out = Outcome::default();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut bad = ring.clone();
                bad.constants[i][j][k] += 1;
                out.record(format!("N[{i}][{j}][{k}]"), !bad.axiom_failures().is_empty());
            }
        }
    }
    out
}
