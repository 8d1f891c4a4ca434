use super::data::{HopfAlgebraData, HopfTables, Sparse};
use super::quasi::{BraidingForm, RMatrix};
use crate::cyclo::CycNumber;

/// The dual Hopf algebra on the dual basis b_k*.
pub fn dual_hopf(h: &HopfAlgebraData) -> HopfAlgebraData {
    let n = h.dim();
    let mut mult: Vec<Sparse> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (i, j, c) in h.coproduct(k) {
            mult[i * n + j].push((k, c.clone()));
        }
    }
    let mut comult: Vec<Vec<(usize, usize, CycNumber)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.product(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let unit: Sparse = (0..n).map(|k| (k, h.counit(k).clone())).collect();
    let mut counit = vec![CycNumber::zero(h.conductor); n];
    for (k, c) in h.unit() {
        counit[*k] = c.clone();
    }
    let mut antipode: Vec<Sparse> = vec![Vec::new(); n];
    for i in 0..n {
        for (k, c) in h.antipode(i) {
            antipode[*k].push((i, c.clone()));
        }
    }
    let labels = h.labels.iter().map(|l| format!("{l}*")).collect();
    HopfAlgebraData::from_tables(format!("({})*", h.name), labels, h.conductor, HopfTables { mult, unit, comult, counit, antipode })
}

/// Σ σ(b_i, b_j) b_i* ⊗ b_j*, an R-matrix of the dual exactly when σ is a braiding.
pub fn dual_r_matrix(s: &BraidingForm) -> RMatrix {
    RMatrix::new(s.label.clone(), s.dim, s.sigma.clone())
}
