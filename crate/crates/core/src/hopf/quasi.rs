use super::data::{lift, to_sparse, Element, HopfAlgebraData, Sparse};
use super::module::{convolution_inverse, Character, ModuleRep};
use super::{Check, Report, Violation};
use crate::cyclo::CycNumber;
use crate::exec::Execution;

/// R = Σ entries[i * dim + j] b_i ⊗ b_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub label: String,
    pub dim: usize,
    pub entries: Vec<CycNumber>,
}

/// σ(b_i, b_j) = sigma[i * dim + j].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingForm {
    pub label: String,
    pub dim: usize,
    pub sigma: Vec<CycNumber>,
}

impl RMatrix {
    pub fn new(label: impl Into<String>, dim: usize, entries: Vec<CycNumber>) -> Self {
        assert_eq!(entries.len(), dim * dim, "R-matrix needs dim^2 entries");
        RMatrix { label: label.into(), dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.entries[i * self.dim + j]
    }
}

impl BraidingForm {
    pub fn new(label: impl Into<String>, dim: usize, sigma: Vec<CycNumber>) -> Self {
        assert_eq!(sigma.len(), dim * dim, "braiding needs dim^2 values");
        BraidingForm { label: label.into(), dim, sigma }
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.sigma[i * self.dim + j]
    }
}

fn lifted(h: &HopfAlgebraData, v: &[CycNumber]) -> Vec<CycNumber> {
    v.iter().map(|c| lift(c, h.conductor)).collect()
}

/// Quasitriangularity: counit normalization, invertibility, the intertwining
/// property, and both coproduct identities, all on basis elements.
pub fn validate_r_matrix(h: &HopfAlgebraData, r: &RMatrix) -> Report {
    validate_r_matrix_with(h, r, Execution::Sequential)
}

pub fn validate_r_matrix_with(h: &HopfAlgebraData, r: &RMatrix, exec: Execution) -> Report {
    let n = h.dim();
    if r.dim != n {
        return Err(Violation::new(Check::Shape, vec![], format!("R has dim {} but algebra has {n}", r.dim)));
    }
    let entries = lifted(h, &r.entries);
    let zero = CycNumber::zero(h.conductor);
    let one = h.one();

    // (ε ⊗ id)R = 1 and (id ⊗ ε)R = 1
    let mut first = h.zero();
    let mut second = h.zero();
    for i in 0..n {
        for j in 0..n {
            let e = &entries[i * n + j];
            if e.is_zero() {
                continue;
            }
            first[j] = first[j].add(&e.mul(h.counit(i)));
            second[i] = second[i].add(&e.mul(h.counit(j)));
        }
    }
    if first != one || second != one {
        return Err(Violation::new(Check::RCounit, vec![], "counit applied to one leg of R is not 1"));
    }

    // Inverse candidate (S ⊗ id)R, two-sided.
    let mut inverse = vec![zero.clone(); n * n];
    for i in 0..n {
        for j in 0..n {
            let e = &entries[i * n + j];
            if e.is_zero() {
                continue;
            }
            for (k, c) in h.antipode(i) {
                inverse[k * n + j] = inverse[k * n + j].add(&e.mul(c));
            }
        }
    }
    let unit2 = h.tensor_one();
    if h.tensor_mul(&entries, &inverse) != unit2 || h.tensor_mul(&inverse, &entries) != unit2 {
        return Err(Violation::new(Check::RInvertible, vec![], "(S x id)R is not a two-sided inverse"));
    }

    // Δ^cop(a) R = R Δ(a)
    exec.try_each(n, |a| {
        let mut delta = vec![zero.clone(); n * n];
        let mut cop = vec![zero.clone(); n * n];
        for (l, rr, c) in h.coproduct(a) {
            delta[l * n + rr] = c.clone();
            cop[rr * n + l] = c.clone();
        }
        if h.tensor_mul(&cop, &entries) != h.tensor_mul(&entries, &delta) {
            return Err(Violation::new(Check::RIntertwines, vec![a], ""));
        }
        Ok(())
    })?;

    let rows: Vec<Sparse> = (0..n).map(|i| to_sparse(&entries[i * n..(i + 1) * n])).collect();
    let cols: Vec<Sparse> =
        (0..n).map(|j| (0..n).filter_map(|i| nz(&entries[i * n + j]).map(|c| (i, c))).collect()).collect();

    // (Δ ⊗ id)R = R13 R23: for legs (a, b), third leg is Σ_i r_{i c} Δ(b_i)[a, b] vs row_a · row_b.
    exec.try_each(n, |a| {
        let mut lhs = vec![h.zero(); n];
        for i in 0..n {
            for (l, rr, c) in h.coproduct(i) {
                if *l != a {
                    continue;
                }
                for (k, e) in &rows[i] {
                    lhs[*rr][*k] = lhs[*rr][*k].add(&c.mul(e));
                }
            }
        }
        for b in 0..n {
            let rhs = if rows[a].is_empty() || rows[b].is_empty() { h.zero() } else { h.mul_sparse(&rows[a], &rows[b]) };
            if lhs[b] != rhs {
                return Err(Violation::new(Check::RCoproductFirst, vec![a, b], ""));
            }
        }
        Ok(())
    })?;

    // (id ⊗ Δ)R = R13 R12: for legs (b, c) in positions 2, 3, first leg is col_c · col_b.
    exec.try_each(n, |c| {
        let mut lhs = vec![h.zero(); n];
        for j in 0..n {
            for (l, rr, d) in h.coproduct(j) {
                if *rr != c {
                    continue;
                }
                for (i, e) in &cols[j] {
                    lhs[*l][*i] = lhs[*l][*i].add(&d.mul(e));
                }
            }
        }
        for b in 0..n {
            let rhs = if cols[c].is_empty() || cols[b].is_empty() { h.zero() } else { h.mul_sparse(&cols[c], &cols[b]) };
            if lhs[b] != rhs {
                return Err(Violation::new(Check::RCoproductSecond, vec![b, c], ""));
            }
        }
        Ok(())
    })
}

fn nz(c: &CycNumber) -> Option<CycNumber> {
    (!c.is_zero()).then(|| c.clone())
}

/// u = Σ r_ij S(b_j) b_i, checked central and invertible.
pub fn drinfeld_element(h: &HopfAlgebraData, r: &RMatrix) -> Result<Element, Violation> {
    let n = h.dim();
    let entries = lifted(h, &r.entries);
    let mut u = h.zero();
    for i in 0..n {
        for j in 0..n {
            let e = &entries[i * n + j];
            if e.is_zero() {
                continue;
            }
            let term = h.mul_sparse(h.antipode(j), &[(i, e.clone())]);
            u = h.add(&u, &term);
        }
    }
    if let Some(k) = h.non_central_witness(&u) {
        return Err(Violation::new(Check::DrinfeldCentral, vec![k], format!("R = {}", r.label)));
    }
    let inv = drinfeld_inverse(h, r);
    if h.mul(&u, &inv) != h.one() {
        return Err(Violation::new(Check::DrinfeldInvertible, vec![], format!("R = {}", r.label)));
    }
    Ok(u)
}

/// Σ r_ij b_j S²(b_i).
pub fn drinfeld_inverse(h: &HopfAlgebraData, r: &RMatrix) -> Element {
    let n = h.dim();
    let entries = lifted(h, &r.entries);
    let mut out = h.zero();
    for i in 0..n {
        let ss = h.apply_antipode(&h.from_sparse(h.antipode(i)));
        let ss = to_sparse(&ss);
        for j in 0..n {
            let e = &entries[i * n + j];
            if !e.is_zero() {
                out = h.add(&out, &h.mul_sparse(&[(j, e.clone())], &ss));
            }
        }
    }
    out
}

/// S(u) = Σ r_ij b_i S(b_j).
pub fn antipode_of_drinfeld_holds(h: &HopfAlgebraData, r: &RMatrix, u: &[CycNumber]) -> bool {
    let n = h.dim();
    let entries = lifted(h, &r.entries);
    let mut rhs = h.zero();
    for i in 0..n {
        for j in 0..n {
            let e = &entries[i * n + j];
            if !e.is_zero() {
                rhs = h.add(&rhs, &h.mul_sparse(&[(i, e.clone())], h.antipode(j)));
            }
        }
    }
    h.apply_antipode(u) == rhs
}

/// Tr ρ(u) for the Drinfeld element of `r`.
pub fn r_dimension(h: &HopfAlgebraData, r: &RMatrix, m: &ModuleRep) -> Result<CycNumber, Violation> {
    let u = drinfeld_element(h, r)?;
    Ok(r_dimension_with(&u, &m.character()))
}

/// Tr ρ(u) = Σ u_k χ(b_k).
pub fn r_dimension_with(u: &[CycNumber], chi: &Character) -> CycNumber {
    u.iter()
        .zip(&chi.values)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(CycNumber::zero(1), |acc, (a, b)| acc.add(&a.mul(b)))
}

/// The scalar by which a central element acts on a module, if it acts by a scalar.
pub fn normalized_scalar(m: &ModuleRep, central: &[CycNumber]) -> Option<CycNumber> {
    let mat = m.act(central);
    let c = mat.get(0, 0).clone();
    for i in 0..m.dim {
        for j in 0..m.dim {
            let want = if i == j { &c } else { &CycNumber::zero(1) };
            if mat.get(i, j) != want {
                return None;
            }
        }
    }
    Some(c)
}

/// (B1)–(B4) on all basis tuples, then convolution invertibility with inverse σ(S·, ·).
pub fn validate_braiding(h: &HopfAlgebraData, s: &BraidingForm) -> Report {
    validate_braiding_with(h, s, Execution::Sequential)
}

pub fn validate_braiding_with(h: &HopfAlgebraData, s: &BraidingForm, exec: Execution) -> Report {
    let n = h.dim();
    if s.dim != n {
        return Err(Violation::new(Check::Shape, vec![], format!("braiding has dim {} but algebra has {n}", s.dim)));
    }
    let sig = lifted(h, &s.sigma);
    let at = |i: usize, j: usize| &sig[i * n + j];
    let zero = CycNumber::zero(h.conductor);
    let unit = h.unit();

    for x in 0..n {
        let mut left = zero.clone();
        let mut right = zero.clone();
        for (k, c) in unit {
            left = left.add(&c.mul(at(*k, x)));
            right = right.add(&c.mul(at(x, *k)));
        }
        if &left != h.counit(x) || &right != h.counit(x) {
            return Err(Violation::new(Check::B4, vec![x], ""));
        }
    }

    // σ(xy, z) = Σ σ(x, z1) σ(y, z2)
    exec.try_each(n, |x| {
        for y in 0..n {
            let xy = h.product(x, y);
            for z in 0..n {
                let lhs = xy.iter().fold(zero.clone(), |acc, (p, c)| acc.add(&c.mul(at(*p, z))));
                let rhs = h
                    .coproduct(z)
                    .iter()
                    .fold(zero.clone(), |acc, (a, b, c)| acc.add(&c.mul(at(x, *a)).mul(at(y, *b))));
                if lhs != rhs {
                    return Err(Violation::new(Check::B2, vec![x, y, z], ""));
                }
            }
        }
        Ok(())
    })?;

    // σ(x, yz) = Σ σ(x1, z) σ(x2, y)
    exec.try_each(n, |y| {
        for z in 0..n {
            let yz = h.product(y, z);
            for x in 0..n {
                let lhs = yz.iter().fold(zero.clone(), |acc, (p, c)| acc.add(&c.mul(at(x, *p))));
                let rhs = h
                    .coproduct(x)
                    .iter()
                    .fold(zero.clone(), |acc, (a, b, c)| acc.add(&c.mul(at(*a, z)).mul(at(*b, y))));
                if lhs != rhs {
                    return Err(Violation::new(Check::B3, vec![x, y, z], ""));
                }
            }
        }
        Ok(())
    })?;

    // Σ σ(x1, y1) x2 y2 = Σ σ(x2, y2) y1 x1
    exec.try_each(n, |x| {
        for y in 0..n {
            let mut lhs = h.zero();
            let mut rhs = h.zero();
            for (x1, x2, cx) in h.coproduct(x) {
                for (y1, y2, cy) in h.coproduct(y) {
                    let c = cx.mul(cy);
                    let l = c.mul(at(*x1, *y1));
                    if !l.is_zero() {
                        for (k, p) in h.product(*x2, *y2) {
                            lhs[*k] = lhs[*k].add(&l.mul(p));
                        }
                    }
                    let r = c.mul(at(*x2, *y2));
                    if !r.is_zero() {
                        for (k, p) in h.product(*y1, *x1) {
                            rhs[*k] = rhs[*k].add(&r.mul(p));
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(Violation::new(Check::B1, vec![x, y], ""));
            }
        }
        Ok(())
    })?;

    // Candidate inverse σ⁻(x, y) = σ(S x, y); check both convolution orders.
    let inv: Vec<CycNumber> = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            h.antipode(x).iter().fold(zero.clone(), |acc, (k, c)| acc.add(&c.mul(at(*k, y))))
        })
        .collect();
    exec.try_each(n, |x| {
        for y in 0..n {
            let target = h.counit(x).mul(h.counit(y));
            let mut a = zero.clone();
            let mut b = zero.clone();
            for (x1, x2, cx) in h.coproduct(x) {
                for (y1, y2, cy) in h.coproduct(y) {
                    let c = cx.mul(cy);
                    a = a.add(&c.mul(at(*x1, *y1)).mul(&inv[x2 * n + y2]));
                    b = b.add(&c.mul(&inv[x1 * n + y1]).mul(at(*x2, *y2)));
                }
            }
            if a != target || b != target {
                return Err(Violation::new(Check::BraidingInvertible, vec![x, y], ""));
            }
        }
        Ok(())
    })
}

/// μ(a) = Σ σ(a₂, S a₁), as values on the basis.
pub fn dual_drinfeld(h: &HopfAlgebraData, s: &BraidingForm) -> Vec<CycNumber> {
    let n = h.dim();
    let sig = lifted(h, &s.sigma);
    (0..n)
        .map(|k| {
            let mut acc = CycNumber::zero(h.conductor);
            for (a1, a2, c) in h.coproduct(k) {
                for (l, sc) in h.antipode(*a1) {
                    acc = acc.add(&c.mul(sc).mul(&sig[a2 * n + l]));
                }
            }
            acc
        })
        .collect()
}

/// S²(a) = Σ μ(a₁) μ⁻¹(a₃) a₂ on every basis element.
pub fn dual_drinfeld_identity(h: &HopfAlgebraData, mu: &[CycNumber]) -> Report {
    let n = h.dim();
    let mu_inv = convolution_inverse(h, mu)
        .ok_or_else(|| Violation::new(Check::BraidingInvertible, vec![], "dual Drinfeld element is not invertible"))?;
    for k in 0..n {
        let mut rhs = h.zero();
        for (a1, rest, c) in h.coproduct(k) {
            let f = c.mul(&mu[*a1]);
            if f.is_zero() {
                continue;
            }
            for (a2, a3, d) in h.coproduct(*rest) {
                let g = f.mul(d).mul(&mu_inv[*a3]);
                rhs[*a2] = rhs[*a2].add(&g);
            }
        }
        let lhs = h.apply_antipode(&h.from_sparse(h.antipode(k)));
        if lhs != rhs {
            return Err(Violation::new(Check::AntipodeSquare, vec![k], "S^2 differs from conjugation by the dual Drinfeld element"));
        }
    }
    Ok(())
}

/// μ(χ) for a comodule character χ written as an element of the algebra.
pub fn braided_dimension(h: &HopfAlgebraData, s: &BraidingForm, chi: &[CycNumber]) -> CycNumber {
    braided_dimension_with(&dual_drinfeld(h, s), chi)
}

pub fn braided_dimension_with(mu: &[CycNumber], chi: &[CycNumber]) -> CycNumber {
    mu.iter()
        .zip(chi)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(CycNumber::zero(1), |acc, (a, b)| acc.add(&a.mul(b)))
}
