use num_traits::Signed;

use super::data::{lift, HopfAlgebraData};
use super::{Check, Report, Violation};
use crate::cyclo::CycNumber;
use crate::linalg::Matrix;

/// A left module: one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub label: String,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

/// Values on the basis (module characters) or coefficients in the basis
/// (comodule characters, which are elements of the algebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<CycNumber>,
}

impl Character {
    pub fn new(values: Vec<CycNumber>) -> Self {
        Character { values }
    }

    pub fn add(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect() }
    }

    /// χ(1), i.e. the dimension for a module character.
    pub fn at_unit(&self, h: &HopfAlgebraData) -> CycNumber {
        h.unit().iter().fold(CycNumber::zero(h.conductor), |acc, (k, c)| acc.add(&c.mul(&self.values[*k])))
    }
}

impl ModuleRep {
    pub fn new(label: impl Into<String>, action: Vec<Matrix>) -> Self {
        let dim = action.first().map_or(0, |m| m.rows());
        ModuleRep { label: label.into(), dim, action }
    }

    /// ρ(a) for an element given by its coefficients.
    pub fn act(&self, a: &[CycNumber]) -> Matrix {
        let m = self.action.first().map_or(1, |x| x.conductor());
        let mut out = Matrix::zeros(self.dim, self.dim, m);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    pub fn character(&self) -> Character {
        Character { values: self.action.iter().map(|m| m.trace()).collect() }
    }

    /// ρ is an algebra map and sends 1 to the identity.
    pub fn validate(&self, h: &HopfAlgebraData) -> Report {
        let n = h.dim();
        if self.action.len() != n {
            return Err(Violation::new(Check::Shape, vec![], "action needs one matrix per basis element"));
        }
        if self.act(&h.one()) != Matrix::identity(self.dim, h.conductor) {
            return Err(Violation::new(Check::ModuleAction, vec![], format!("{}: unit does not act as identity", self.label)));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act(&h.from_sparse(h.product(i, j)));
                if lhs != rhs {
                    return Err(Violation::new(Check::ModuleAction, vec![i, j], self.label.clone()));
                }
            }
        }
        Ok(())
    }
}

pub fn trivial_module(h: &HopfAlgebraData) -> ModuleRep {
    let action = (0..h.dim()).map(|i| Matrix::scalar(1, h.counit(i), h.conductor)).collect();
    ModuleRep::new("trivial", action)
}

/// (ρ ⊗ ρ')∘Δ.
pub fn tensor_module(h: &HopfAlgebraData, a: &ModuleRep, b: &ModuleRep) -> ModuleRep {
    let d = a.dim * b.dim;
    let action = (0..h.dim())
        .map(|k| {
            let mut acc = Matrix::zeros(d, d, h.conductor);
            for (l, r, c) in h.coproduct(k) {
                acc = acc.add(&a.action[*l].kron(&b.action[*r]).scale(c));
            }
            acc
        })
        .collect();
    ModuleRep::new(format!("{}*{}", a.label, b.label), action)
}

/// a ↦ ρ(S a)ᵀ.
pub fn dual_module(h: &HopfAlgebraData, m: &ModuleRep) -> ModuleRep {
    let action = (0..h.dim()).map(|k| m.act(&h.from_sparse(h.antipode(k))).transpose()).collect();
    ModuleRep::new(format!("{}^*", m.label), action)
}

pub fn direct_sum(a: &ModuleRep, b: &ModuleRep) -> ModuleRep {
    let action = a.action.iter().zip(&b.action).map(|(x, y)| x.direct_sum(y)).collect();
    ModuleRep::new(format!("{}+{}", a.label, b.label), action)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("character is not a combination of the given simples")]
    NotInSpan,
    #[error("multiplicity of simple {index} is {value}, not a nonnegative integer")]
    NotNatural { index: usize, value: String },
}

/// Solve χ = Σ c_i χ_i exactly; every c_i must be a nonnegative integer.
pub fn decompose_character(chi: &Character, simples: &[Character]) -> Result<Vec<u64>, DecomposeError> {
    let n = chi.values.len();
    let m = chi
        .values
        .iter()
        .chain(simples.iter().flat_map(|s| s.values.iter()))
        .fold(1u64, |acc, c| num_integer::lcm(acc, c.conductor()));
    let rows = (0..n).map(|k| simples.iter().map(|s| lift(&s.values[k], m)).collect()).collect();
    let a = Matrix::from_rows(m, rows);
    let rhs: Vec<CycNumber> = chi.values.iter().map(|c| lift(c, m)).collect();
    let x = a.solve(&rhs).ok_or(DecomposeError::NotInSpan)?;
    x.iter()
        .enumerate()
        .map(|(index, c)| match c.to_integer() {
            Some(v) if !v.is_negative() => u64::try_from(v).map_err(|_| DecomposeError::NotNatural { index, value: c.to_string() }),
            _ => Err(DecomposeError::NotNatural { index, value: c.to_string() }),
        })
        .collect()
}

/// (f · g)(a) = Σ f(a₁) g(a₂).
pub fn convolution_product(h: &HopfAlgebraData, f: &[CycNumber], g: &[CycNumber]) -> Vec<CycNumber> {
    (0..h.dim())
        .map(|k| {
            h.coproduct(k)
                .iter()
                .fold(CycNumber::zero(h.conductor), |acc, (l, r, c)| acc.add(&c.mul(&f[*l]).mul(&g[*r])))
        })
        .collect()
}

/// Solve f · x = ε in the dual algebra.
pub fn convolution_inverse(h: &HopfAlgebraData, f: &[CycNumber]) -> Option<Vec<CycNumber>> {
    let n = h.dim();
    let mut a = Matrix::zeros(n, n, h.conductor);
    for k in 0..n {
        for (l, r, c) in h.coproduct(k) {
            let v = a.get(k, *r).add(&c.mul(&f[*l]));
            a.set(k, *r, v);
        }
    }
    let rhs: Vec<CycNumber> = (0..n).map(|k| h.counit(k).clone()).collect();
    let x = a.solve(&rhs)?;
    (convolution_product(h, &x, f) == rhs).then_some(x)
}

/// f(b_i b_j) = f(b_i) f(b_j) and f(1) = 1.
pub fn is_algebra_map(h: &HopfAlgebraData, f: &[CycNumber]) -> bool {
    let n = h.dim();
    let eval = |s: &[(usize, CycNumber)]| s.iter().fold(CycNumber::zero(h.conductor), |acc, (k, c)| acc.add(&c.mul(&f[*k])));
    if !eval(h.unit()).is_one() {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| eval(h.product(i, j)) == f[i].mul(&f[j])))
}

/// Given elements x[i][j] of a d × d matrix coalgebra (Δx_ij = Σ x_ik ⊗ x_kj,
/// ε(x_ij) = δ_ij), return the character Σ x_ii of the comodule it spans.
pub fn matrix_coalgebra_character(h: &HopfAlgebraData, x: &[Vec<Vec<CycNumber>>]) -> Result<Vec<CycNumber>, Violation> {
    let d = x.len();
    let n = h.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = h.apply_coproduct(&x[i][j]);
            let mut rhs = vec![CycNumber::zero(h.conductor); n * n];
            for k in 0..d {
                for (a, xa) in x[i][k].iter().enumerate() {
                    if xa.is_zero() {
                        continue;
                    }
                    for (b, xb) in x[k][j].iter().enumerate() {
                        if !xb.is_zero() {
                            rhs[a * n + b] = rhs[a * n + b].add(&xa.mul(xb));
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(Violation::new(Check::MatrixCoalgebra, vec![i, j], "coproduct"));
            }
            let want = if i == j { CycNumber::one(h.conductor) } else { CycNumber::zero(h.conductor) };
            if h.eval_counit(&x[i][j]) != want {
                return Err(Violation::new(Check::MatrixCoalgebra, vec![i, j], "counit"));
            }
        }
    }
    Ok((0..d).fold(h.zero(), |acc, i| h.add(&acc, &x[i][i])))
}
