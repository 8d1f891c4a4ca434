use std::collections::HashMap;

use super::data::{to_sparse, HopfAlgebraData};
use super::{Check, Report, Violation};
use crate::cyclo::CycNumber;
use crate::exec::Execution;

type PairMap = HashMap<(usize, usize), CycNumber>;
type TripleMap = HashMap<(usize, usize, usize), CycNumber>;

fn bump<K: std::hash::Hash + Eq>(map: &mut HashMap<K, CycNumber>, key: K, v: CycNumber) {
    map.entry(key).and_modify(|x| *x = x.add(&v)).or_insert(v);
}

fn clean<K: std::hash::Hash + Eq>(mut map: HashMap<K, CycNumber>) -> HashMap<K, CycNumber> {
    map.retain(|_, v| !v.is_zero());
    map
}

/// Checks every Hopf algebra axiom on all basis tuples, plus S² = id.
pub fn validate_hopf(h: &HopfAlgebraData) -> Report {
    validate_hopf_with(h, Execution::default())
}

pub fn validate_hopf_with(h: &HopfAlgebraData, exec: Execution) -> Report {
    let n = h.dim();
    let m = h.conductor;
    if h.unit().is_empty() {
        return Err(Violation::new(Check::Shape, vec![], "unit is zero"));
    }
    let one = h.one();

    exec.try_each(n, |i| {
        let b = h.basis(i);
        if h.mul(&one, &b) != b || h.mul(&b, &one) != b {
            return Err(Violation::new(Check::Unit, vec![i], ""));
        }
        Ok(())
    })?;

    exec.try_each(n, |i| {
        for j in 0..n {
            let left = h.product(i, j);
            for k in 0..n {
                let lhs = h.mul_sparse(left, &[(k, CycNumber::one(m))]);
                let rhs = h.mul_sparse(&[(i, CycNumber::one(m))], h.product(j, k));
                if lhs != rhs {
                    return Err(Violation::new(Check::Associativity, vec![i, j, k], ""));
                }
            }
        }
        Ok(())
    })?;

    exec.try_each(n, |i| {
        let mut left = h.zero();
        let mut right = h.zero();
        for (l, r, c) in h.coproduct(i) {
            left[*r] = left[*r].add(&c.mul(h.counit(*l)));
            right[*l] = right[*l].add(&c.mul(h.counit(*r)));
        }
        let b = h.basis(i);
        if left != b || right != b {
            return Err(Violation::new(Check::Counit, vec![i], ""));
        }
        Ok(())
    })?;

    exec.try_each(n, |i| {
        let mut lhs = TripleMap::new();
        let mut rhs = TripleMap::new();
        for (l, r, c) in h.coproduct(i) {
            for (a, b, d) in h.coproduct(*l) {
                bump(&mut lhs, (*a, *b, *r), c.mul(d));
            }
            for (a, b, d) in h.coproduct(*r) {
                bump(&mut rhs, (*l, *a, *b), c.mul(d));
            }
        }
        if clean(lhs) != clean(rhs) {
            return Err(Violation::new(Check::Coassociativity, vec![i], ""));
        }
        Ok(())
    })?;

    if h.eval_counit(&one) != CycNumber::one(m) {
        return Err(Violation::new(Check::CounitMultiplicative, vec![], "counit of the unit is not 1"));
    }
    let unit_sq = h.tensor_one();
    if h.apply_coproduct(&one) != unit_sq {
        return Err(Violation::new(Check::ComultMultiplicative, vec![], "coproduct of the unit is not 1 x 1"));
    }
    exec.try_each(n, |i| {
        for j in 0..n {
            let p = h.from_sparse(h.product(i, j));
            if h.eval_counit(&p) != h.counit(i).mul(h.counit(j)) {
                return Err(Violation::new(Check::CounitMultiplicative, vec![i, j], ""));
            }
            let mut lhs = PairMap::new();
            for (k, c) in h.product(i, j) {
                for (l, r, d) in h.coproduct(*k) {
                    bump(&mut lhs, (*l, *r), c.mul(d));
                }
            }
            let mut rhs = PairMap::new();
            for (l1, r1, c1) in h.coproduct(i) {
                for (l2, r2, c2) in h.coproduct(j) {
                    let c = c1.mul(c2);
                    for (a, ca) in h.product(*l1, *l2) {
                        for (b, cb) in h.product(*r1, *r2) {
                            bump(&mut rhs, (*a, *b), c.mul(ca).mul(cb));
                        }
                    }
                }
            }
            if clean(lhs) != clean(rhs) {
                return Err(Violation::new(Check::ComultMultiplicative, vec![i, j], ""));
            }
        }
        Ok(())
    })?;

    exec.try_each(n, |i| {
        let mut left = h.zero();
        let mut right = h.zero();
        for (l, r, c) in h.coproduct(i) {
            let sl = h.antipode(*l);
            let sr = h.antipode(*r);
            let bl = [(*l, c.clone())];
            let br = [(*r, c.clone())];
            left = h.add(&left, &h.mul_sparse(sl, &br));
            right = h.add(&right, &h.mul_sparse(&bl, sr));
        }
        let target = h.scalar(h.counit(i));
        if left != target || right != target {
            return Err(Violation::new(Check::Antipode, vec![i], ""));
        }
        Ok(())
    })?;

    exec.try_each(n, |i| {
        let s = h.from_sparse(h.antipode(i));
        let ss = h.apply_antipode(&s);
        if to_sparse(&ss) != vec![(i, CycNumber::one(m))] {
            return Err(Violation::new(Check::AntipodeSquare, vec![i], ""));
        }
        Ok(())
    })
}
