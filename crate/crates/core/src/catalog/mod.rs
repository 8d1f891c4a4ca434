//! Constructors for the algebra families, with their R-matrices or braidings,
//! simple modules or comodules, and closed-form cross-check data.

mod abelian;
mod dim8;
mod gnn;
pub mod group;
mod suzuki;

use std::fmt;

pub use abelian::{build_abelian_product, build_cyclic};
pub use dim8::build_dim8;
pub use gnn::{build_group_gnn, HwtModules};
pub use group::{group_hopf, module_from_generators, twisted_group_hopf, FiniteGroup, GeneratorImage};
pub use suzuki::{
    braiding_from_x_table, build_suzuki, sigma_group_values, sigma_parameters, sigma_x_table, suzuki_algebra, suzuki_group, tau_parameters, tau_x_table,
    SuzukiElements, XTable, SUZUKI_DENSE_LIMIT,
};

use crate::cyclo::{CycNumber, RootOfUnity};
use crate::exec::Execution;
use crate::hopf::{
    validate_braiding_with, validate_hopf_with, validate_r_matrix_with, BraidingForm, Element, HopfAlgebraData,
    ModuleRep, RMatrix, Report,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown algebra name {0:?}; expected C_m, CxC_m_n, D8, Q8, K8, G_N_n or A_N_n_+/-")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("dimension {dim} exceeds the supported limit {limit}")]
    TooLarge { dim: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim8Kind {
    D8,
    Q8,
    K8,
}

/// Suzuki's A_{Nn}^{+λ}: `big_n` odd, `n` ≥ 2, `lambda` = ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuzukiParams {
    pub big_n: u64,
    pub n: u64,
    pub lambda: i8,
}

impl SuzukiParams {
    pub fn new(big_n: u64, n: u64, lambda: i8) -> Result<Self, CatalogError> {
        if big_n == 0 || big_n.is_multiple_of(2) {
            return Err(CatalogError::InvalidParameters(format!("N = {big_n} must be odd and positive")));
        }
        if n < 2 {
            return Err(CatalogError::InvalidParameters(format!("n = {n} must be at least 2")));
        }
        if lambda != 1 && lambda != -1 {
            return Err(CatalogError::InvalidParameters(format!("lambda = {lambda} must be +1 or -1")));
        }
        Ok(SuzukiParams { big_n, n, lambda })
    }

    /// The algebra written A_Nn in the tables: λ = + for odd n, − for even n.
    pub fn standard(big_n: u64, n: u64) -> Result<Self, CatalogError> {
        SuzukiParams::new(big_n, n, if n % 2 == 1 { 1 } else { -1 })
    }

    pub fn conductor(&self) -> u64 {
        4 * self.n * self.big_n
    }

    /// λ = −1, or λ = +1 with n odd.
    pub fn is_self_dual(&self) -> bool {
        self.lambda == -1 || self.n % 2 == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic { m: u64 },
    AbelianProduct { m: u64, n: u64 },
    Dim8(Dim8Kind),
    GroupGnn { big_n: u64, n: u64 },
    Suzuki(SuzukiParams),
}

impl Family {
    /// Parse the naming grammar: C_m, CxC_m_n, D8, Q8, K8, G_N_n, A_N_n_+ / A_N_n_-.
    pub fn parse(name: &str) -> Result<Family, CatalogError> {
        let unknown = || CatalogError::UnknownName(name.to_string());
        let parts: Vec<&str> = name.trim().split('_').collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| unknown());
        match parts.as_slice() {
            ["D8"] => Ok(Family::Dim8(Dim8Kind::D8)),
            ["Q8"] => Ok(Family::Dim8(Dim8Kind::Q8)),
            ["K8"] => Ok(Family::Dim8(Dim8Kind::K8)),
            ["C", m] => {
                let m = num(m)?;
                if m == 0 {
                    return Err(CatalogError::InvalidParameters("m must be positive".into()));
                }
                Ok(Family::Cyclic { m })
            }
            ["CxC", m, n] => {
                let (m, n) = (num(m)?, num(n)?);
                if m == 0 || n == 0 {
                    return Err(CatalogError::InvalidParameters("m and n must be positive".into()));
                }
                Ok(Family::AbelianProduct { m, n })
            }
            ["G", big_n, n] => {
                let p = SuzukiParams::new(num(big_n)?, num(n)?, 1)?;
                Ok(Family::GroupGnn { big_n: p.big_n, n: p.n })
            }
            ["A", big_n, n, sign] => {
                let lambda = match *sign {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(unknown()),
                };
                Ok(Family::Suzuki(SuzukiParams::new(num(big_n)?, num(n)?, lambda)?))
            }
            _ => Err(unknown()),
        }
    }

    pub fn dim(&self) -> usize {
        (match self {
            Family::Cyclic { m } => *m,
            Family::AbelianProduct { m, n } => m * n,
            Family::Dim8(_) => 8,
            Family::GroupGnn { big_n, n } => 4 * n * big_n,
            Family::Suzuki(p) => 4 * p.n * p.big_n,
        }) as usize
    }

    pub fn conductor(&self) -> u64 {
        match self {
            Family::Cyclic { m } => *m,
            Family::AbelianProduct { m, n } => m * n,
            Family::Dim8(_) => 8,
            Family::GroupGnn { big_n, n } => 4 * n * big_n,
            Family::Suzuki(p) => p.conductor(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic { m } => write!(f, "C_{m}"),
            Family::AbelianProduct { m, n } => write!(f, "CxC_{m}_{n}"),
            Family::Dim8(k) => write!(f, "{k:?}"),
            Family::GroupGnn { big_n, n } => write!(f, "G_{big_n}_{n}"),
            Family::Suzuki(p) => write!(f, "A_{}_{}_{}", p.big_n, p.n, if p.lambda == 1 { "+" } else { "-" }),
        }
    }
}

/// Which parametrized formula produced an R-matrix or braiding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidingParams {
    Sigma { alpha: RootOfUnity, beta: RootOfUnity },
    Tau { gamma: RootOfUnity, xi: RootOfUnity },
    GroupR { a: u64, q: u64, nu: i8 },
    /// The extra n = 2 families over ⟨h, t⟩ (`subgroup` 1) and ⟨h, tw⟩ (`subgroup` 2).
    GroupRExtra { subgroup: u8, d: u64 },
    AbelianR { p: u64, q: u64, r: u64, s: u64 },
    CyclicR { d: u64 },
    Dim8R { index: usize },
}

impl fmt::Display for BraidingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidingParams::Sigma { alpha, beta } => write!(f, "sigma({alpha}, {beta})"),
            BraidingParams::Tau { gamma, xi } => write!(f, "tau({gamma}, {xi})"),
            BraidingParams::GroupR { a, q, nu } => write!(f, "R_{a}{q}{}", if *nu == 1 { "+" } else { "-" }),
            BraidingParams::GroupRExtra { subgroup, d } => write!(f, "R^({subgroup})_{d}"),
            BraidingParams::AbelianR { p, q, r, s } => write!(f, "R_{p}{q}{r}{s}"),
            BraidingParams::CyclicR { d } => write!(f, "R_{d}"),
            BraidingParams::Dim8R { index } => write!(f, "R_{index}"),
        }
    }
}

/// A simple comodule, stored through its character (an element of the algebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub label: String,
    pub dim: usize,
    pub character: Element,
}

#[derive(Clone, Debug)]
pub enum BraidSide {
    /// Module side: universal R-matrices and simple modules.
    Modules { r_matrices: Vec<RMatrix>, simples: Vec<ModuleRep> },
    /// Comodule side: braidings and simple comodules.
    Comodules { braidings: Vec<BraidingForm>, simples: Vec<Comodule> },
}

/// Tag naming the printed closed form applicable to a bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    CyclicGroup,
    AbelianProduct,
    Dim8,
    GroupGnn,
    SelfDualSuzuki,
}

#[derive(Clone, Debug)]
pub struct AlgebraBundle {
    pub family: Family,
    pub algebra: HopfAlgebraData,
    pub side: BraidSide,
    /// Parallel to the R-matrix or braiding list.
    pub params: Vec<BraidingParams>,
    /// Simple modules of the underlying algebra, when known; equal to the
    /// invariant simples on the module side.
    pub modules: Vec<ModuleRep>,
    pub closed_form: Option<ClosedForm>,
    /// Closed-form Drinfeld elements, parallel to `params` (module side).
    pub closed_drinfeld: Vec<Option<Element>>,
    /// Closed-form normalized dimensions, indexed [braiding][simple].
    pub closed_dimensions: Option<Vec<Vec<RootOfUnity>>>,
    /// Derived Suzuki elements (x generators, group-likes).
    pub suzuki: Option<SuzukiElements>,
}

impl AlgebraBundle {
    pub fn id(&self) -> String {
        self.family.to_string()
    }

    pub fn conductor(&self) -> u64 {
        self.algebra.conductor
    }

    pub fn braid_count(&self) -> usize {
        self.params.len()
    }

    /// (label, dim) of every simple used for invariants, in order.
    pub fn simple_dims(&self) -> Vec<(String, usize)> {
        match &self.side {
            BraidSide::Modules { simples, .. } => simples.iter().map(|m| (m.label.clone(), m.dim)).collect(),
            BraidSide::Comodules { simples, .. } => simples.iter().map(|c| (c.label.clone(), c.dim)).collect(),
        }
    }
}

/// Build the bundle for a family. Rejects dimensions above `limit`.
pub fn build(family: Family, limit: usize) -> Result<AlgebraBundle, CatalogError> {
    let dim = family.dim();
    if dim > limit {
        return Err(CatalogError::TooLarge { dim, limit });
    }
    match family {
        Family::Cyclic { m } => Ok(build_cyclic(m)),
        Family::AbelianProduct { m, n } => Ok(build_abelian_product(m, n)),
        Family::Dim8(k) => Ok(build_dim8(k)),
        Family::GroupGnn { big_n, n } => build_group_gnn(big_n, n),
        Family::Suzuki(p) => build_suzuki(p),
    }
}

/// Every catalog family of dimension at most `max_dim`, smallest first.
pub fn enumerate(max_dim: usize) -> Vec<Family> {
    let max = max_dim as u64;
    let mut out: Vec<Family> = (1..=max).map(|m| Family::Cyclic { m }).collect();
    for m in 2..=max {
        for n in m..=max / m {
            out.push(Family::AbelianProduct { m, n });
        }
    }
    if max >= 8 {
        out.extend([Dim8Kind::D8, Dim8Kind::Q8, Dim8Kind::K8].map(Family::Dim8));
    }
    for big_n in (1..=max / 8).step_by(2) {
        for n in 2..=max / (4 * big_n) {
            out.push(Family::GroupGnn { big_n, n });
            for lambda in [1, -1] {
                out.push(Family::Suzuki(SuzukiParams { big_n, n, lambda }));
            }
        }
    }
    out.sort_by_key(|f| f.dim());
    out
}

/// Every structure check for a bundle, labelled: the Hopf axioms, each
/// R-matrix or braiding, and each simple module.
pub fn validate_bundle(b: &AlgebraBundle, exec: Execution) -> Vec<(String, Report)> {
    let mut out = vec![("Hopf axioms".to_string(), validate_hopf_with(&b.algebra, exec))];
    match &b.side {
        BraidSide::Modules { r_matrices, simples } => {
            let reports = exec.map(r_matrices, |r| validate_r_matrix_with(&b.algebra, r, Execution::Sequential));
            out.extend(r_matrices.iter().zip(reports).map(|(r, rep)| (format!("R-matrix {}", r.label), rep)));
            out.extend(simples.iter().map(|s| (format!("module {}", s.label), s.validate(&b.algebra))));
        }
        BraidSide::Comodules { braidings, .. } => {
            let reports = exec.map(braidings, |s| validate_braiding_with(&b.algebra, s, Execution::Sequential));
            out.extend(braidings.iter().zip(reports).map(|(s, rep)| (format!("braiding {}", s.label), rep)));
        }
    }
    out
}

/// Parse a name and build it with the default size limit of 200.
pub fn build_by_name(name: &str) -> Result<AlgebraBundle, CatalogError> {
    build(Family::parse(name)?, 200)
}

/// "h^2 w t" style label; "1" for the identity.
pub(crate) fn word_label(parts: &[(&str, u64)]) -> String {
    let items: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if items.is_empty() {
        "1".to_string()
    } else {
        items.join(" ")
    }
}

/// Σ c · a ⊗ b over dense elements, as an n² tensor.
pub(crate) fn tensor_from_terms(h: &HopfAlgebraData, terms: &[(CycNumber, Element, Element)]) -> Vec<CycNumber> {
    let n = h.dim();
    let mut out = vec![CycNumber::zero(h.conductor); n * n];
    for (c, a, b) in terms {
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = c.mul(x);
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i * n + j] = out[i * n + j].add(&cx.mul(y));
                }
            }
        }
    }
    out
}

/// ζ_m^e as a root of unity at conductor m.
pub(crate) fn root(m: u64, e: i64) -> RootOfUnity {
    RootOfUnity::new(m, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        assert_eq!(Family::parse("C_5").unwrap(), Family::Cyclic { m: 5 });
        assert_eq!(Family::parse("CxC_2_4").unwrap(), Family::AbelianProduct { m: 2, n: 4 });
        assert_eq!(Family::parse("K8").unwrap(), Family::Dim8(Dim8Kind::K8));
        assert_eq!(Family::parse("G_3_2").unwrap(), Family::GroupGnn { big_n: 3, n: 2 });
        assert_eq!(Family::parse("A_1_2_-").unwrap(), Family::Suzuki(SuzukiParams { big_n: 1, n: 2, lambda: -1 }));
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(Family::parse("E8"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(Family::parse("G_2_3"), Err(CatalogError::InvalidParameters(_))));
        assert!(matches!(Family::parse("A_1_1_+"), Err(CatalogError::InvalidParameters(_))));
        assert!(matches!(Family::parse("A_1_2_x"), Err(CatalogError::UnknownName(_))));
    }

    #[test]
    fn display_round_trips() {
        for name in ["C_7", "CxC_3_2", "D8", "Q8", "K8", "G_5_4", "A_3_3_+", "A_1_4_-"] {
            assert_eq!(Family::parse(name).unwrap().to_string(), name);
        }
    }

    #[test]
    fn size_limit_is_enforced() {
        let f = Family::parse("G_25_3").unwrap();
        assert_eq!(build(f, 200).unwrap_err(), CatalogError::TooLarge { dim: 300, limit: 200 });
    }

    #[test]
    fn word_labels() {
        assert_eq!(word_label(&[("h", 0), ("w", 0)]), "1");
        assert_eq!(word_label(&[("h", 2), ("w", 1), ("t", 1)]), "h^2 w t");
    }
}
