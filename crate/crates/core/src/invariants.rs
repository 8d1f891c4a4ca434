//! Polynomial invariants P_{A,M}(x) and P_A^(d)(x): the generic path through
//! Drinfeld elements (or dual Drinfeld functionals on comodule characters), the
//! closed-form exponent formulas, and comparison between algebras.

use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::catalog::{AlgebraBundle, BraidSide, CatalogError, Dim8Kind, Family, SuzukiParams};
use crate::cyclo::{CycNumber, RootOfUnity};
use crate::exec::Execution;
use crate::hopf::{braided_dimension_with, drinfeld_element, dual_drinfeld, r_dimension_with, Violation};
use crate::poly::{factor_cyclotomic, invariant_json, CycloFactorization, FactorFailure, RootMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Generic,
    ClosedForm,
    Both,
}

impl Path {
    pub fn name(&self) -> &'static str {
        match self {
            Path::Generic => "generic",
            Path::ClosedForm => "closed",
            Path::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("structure check failed: {0}")]
    Structure(Violation),
    #[error("{algebra}: normalized dimension of {simple} under {braiding} is {value}, not a root of unity")]
    NotRootOfUnity { algebra: String, braiding: String, simple: String, value: String },
    #[error("{algebra}: simple {simple} has dimension zero")]
    ZeroDimension { algebra: String, simple: String },
    #[error("{0}")]
    Unsupported(String),
    #[error("{algebra}, degree {degree}: generic and closed-form invariants differ ({generic} vs {closed})")]
    PathMismatch { algebra: String, degree: usize, generic: String, closed: String },
    #[error("{algebra}, degree {degree}: not a product of cyclotomic polynomials: {failure}")]
    Factorization { algebra: String, degree: usize, failure: FactorFailure },
}

/// P_A^(d) with its Φ factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub algebra: String,
    pub degree: usize,
    pub roots: RootMultiset,
    pub factorization: CycloFactorization,
    pub path: Path,
}

impl InvariantResult {
    fn new(algebra: String, degree: usize, roots: RootMultiset, path: Path) -> Result<Self, InvariantError> {
        let factorization = factor_cyclotomic(&roots)
            .map_err(|failure| InvariantError::Factorization { algebra: algebra.clone(), degree, failure })?;
        Ok(InvariantResult { algebra, degree, roots, factorization, path })
    }

    pub fn to_json(&self) -> Value {
        let mut v = invariant_json(&self.roots);
        v["algebra"] = json!(self.algebra);
        v["degree"] = json!(self.degree);
        v["path"] = json!(self.path.name());
        v
    }
}

/// Normalized dimensions dim_R(M)/dim M, indexed [braiding][simple], at the bundle conductor.
#[derive(Clone, Debug)]
pub struct DimensionTable {
    pub algebra: String,
    pub conductor: u64,
    pub braidings: Vec<String>,
    pub simples: Vec<(String, usize)>,
    pub values: Vec<Vec<RootOfUnity>>,
}

impl DimensionTable {
    pub fn for_module(&self, simple: usize) -> RootMultiset {
        let mut rs = RootMultiset::empty(self.conductor);
        for row in &self.values {
            rs.insert(row[simple], 1);
        }
        rs
    }

    pub fn for_degree(&self, d: usize) -> RootMultiset {
        let mut rs = RootMultiset::empty(self.conductor);
        for (k, (_, dim)) in self.simples.iter().enumerate() {
            if *dim == d {
                for row in &self.values {
                    rs.insert(row[k], 1);
                }
            }
        }
        rs
    }
}

/// A Suzuki bundle computes P of the dual on the comodule side; only self-dual cases give P_A.
fn check_supported(bundle: &AlgebraBundle) -> Result<(), InvariantError> {
    if let Family::Suzuki(p) = bundle.family {
        if !p.is_self_dual() {
            return Err(InvariantError::Unsupported(format!(
                "{} is not self-dual; its braidings only determine the invariants of the dual algebra",
                bundle.id()
            )));
        }
    }
    Ok(())
}

fn certify(
    bundle: &AlgebraBundle,
    value: &CycNumber,
    dim: usize,
    braiding: &str,
    simple: &str,
) -> Result<RootOfUnity, InvariantError> {
    let m = bundle.conductor();
    if dim == 0 {
        return Err(InvariantError::ZeroDimension { algebra: bundle.id(), simple: simple.to_string() });
    }
    let normalized = value.mul(&CycNumber::from_fraction(m, 1, dim as i64));
    normalized.as_root_of_unity().and_then(|r| r.at_conductor(m)).ok_or_else(|| InvariantError::NotRootOfUnity {
        algebra: bundle.id(),
        braiding: braiding.to_string(),
        simple: simple.to_string(),
        value: normalized.to_string(),
    })
}

/// Every normalized R-dimension (module side) or braided dimension (comodule side).
pub fn dimension_table(bundle: &AlgebraBundle, exec: Execution) -> Result<DimensionTable, InvariantError> {
    check_supported(bundle)?;
    let h = &bundle.algebra;
    let (braidings, simples, values) = match &bundle.side {
        BraidSide::Modules { r_matrices, simples } => {
            let chars: Vec<_> = simples.iter().map(|s| s.character()).collect();
            let rows = exec.map(r_matrices, |r| -> Result<Vec<RootOfUnity>, InvariantError> {
                let u = drinfeld_element(h, r).map_err(InvariantError::Structure)?;
                simples
                    .iter()
                    .zip(&chars)
                    .map(|(s, ch)| certify(bundle, &r_dimension_with(&u, ch), s.dim, &r.label, &s.label))
                    .collect()
            });
            let labels = r_matrices.iter().map(|r| r.label.clone()).collect();
            let dims = simples.iter().map(|s| (s.label.clone(), s.dim)).collect();
            (labels, dims, rows.into_iter().collect::<Result<Vec<_>, _>>()?)
        }
        BraidSide::Comodules { braidings, simples } => {
            let rows = exec.map(braidings, |s| -> Result<Vec<RootOfUnity>, InvariantError> {
                let mu = dual_drinfeld(h, s);
                simples
                    .iter()
                    .map(|c| certify(bundle, &braided_dimension_with(&mu, &c.character), c.dim, &s.label, &c.label))
                    .collect()
            });
            let labels = braidings.iter().map(|s| s.label.clone()).collect();
            let dims = simples.iter().map(|c| (c.label.clone(), c.dim)).collect();
            (labels, dims, rows.into_iter().collect::<Result<Vec<_>, _>>()?)
        }
    };
    Ok(DimensionTable { algebra: bundle.id(), conductor: bundle.conductor(), braidings, simples, values })
}

/// P_{A,M}(x) for the simple at `simple` in the bundle's list.
pub fn invariant_for_module(bundle: &AlgebraBundle, simple: usize, exec: Execution) -> Result<RootMultiset, InvariantError> {
    let table = dimension_table(bundle, exec)?;
    if simple >= table.simples.len() {
        return Err(InvariantError::Unsupported(format!("{} has no simple number {simple}", bundle.id())));
    }
    Ok(table.for_module(simple))
}

/// P_A^(d)(x) by the generic path.
pub fn invariant_for_degree(bundle: &AlgebraBundle, d: usize, exec: Execution) -> Result<InvariantResult, InvariantError> {
    let table = dimension_table(bundle, exec)?;
    InvariantResult::new(bundle.id(), d, table.for_degree(d), Path::Generic)
}

/// P_A^(d) for several degrees from one pass over the braidings.
pub fn invariants_for_degrees(
    bundle: &AlgebraBundle,
    degrees: &[usize],
    exec: Execution,
) -> Result<Vec<InvariantResult>, InvariantError> {
    let table = dimension_table(bundle, exec)?;
    degrees.iter().map(|&d| InvariantResult::new(bundle.id(), d, table.for_degree(d), Path::Generic)).collect()
}

/// Accumulates roots ζ_m^e with multiplicity.
struct Roots(RootMultiset, u64);

impl Roots {
    fn new(m: u64) -> Self {
        Roots(RootMultiset::empty(m), m)
    }

    /// (x − ζ^e)^mult
    fn linear(&mut self, e: i64, mult: u64) {
        self.0.insert(RootOfUnity::new(self.1, e), mult);
    }

    /// (x^k − ζ_m^e)^mult: the k roots ζ_{mk}^{e + jm}.
    fn power(&mut self, k: u64, e: i64, mult: u64) {
        for j in 0..k {
            self.0.insert(RootOfUnity::new(self.1 * k, e + (j * self.1) as i64), mult);
        }
    }

    fn finish(self) -> RootMultiset {
        self.0
    }
}

fn closed_cyclic(m: u64, d: usize) -> RootMultiset {
    let mut roots = RootMultiset::empty(m);
    if d == 1 {
        // ∏_j (x^{m/g} − 1)^g with g = gcd(j², m)
        for j in 0..m {
            let g = (j * j).gcd(&m);
            let order = m / g;
            for k in 0..order {
                roots.insert(RootOfUnity::new(order, k as i64), g);
            }
        }
    }
    roots.lift(m)
}

fn closed_abelian_product(m: u64, n: u64, d: usize) -> RootMultiset {
    let conductor = m * n;
    let mut roots = RootMultiset::empty(conductor);
    if d != 1 {
        return roots;
    }
    let xs = |a: u64, b: u64| (0..a).filter(move |x| (x * b).is_multiple_of(a));
    let (mi, ni) = (m as i64, n as i64);
    for p in xs(m, m) {
        for q in xs(n, m) {
            for r in xs(m, n) {
                for s in xs(n, n) {
                    let (p, q, r, s) = (p as i64, q as i64, r as i64, s as i64);
                    for a in 0..mi {
                        for b in 0..ni {
                            let e = -(ni * (p * a * a + r * b * a) + mi * (s * b * b + q * a * b));
                            roots.insert(RootOfUnity::new(conductor, e), 1);
                        }
                    }
                }
            }
        }
    }
    roots
}

fn closed_dim8(kind: Dim8Kind, d: usize) -> RootMultiset {
    let mut r = Roots::new(8);
    match (kind, d) {
        (Dim8Kind::D8 | Dim8Kind::Q8, 1) => r.linear(0, 32),
        (Dim8Kind::K8, 1) => {
            r.linear(0, 16);
            r.linear(4, 16);
        }
        // (x−1)³(x+1)³(x−ζ)(x+ζ), ζ = ω²
        (Dim8Kind::D8, 2) => {
            r.linear(0, 3);
            r.linear(4, 3);
            r.linear(2, 1);
            r.linear(6, 1);
        }
        // (x−1)(x+1)(x−ζ)³(x+ζ)³
        (Dim8Kind::Q8, 2) => {
            r.linear(0, 1);
            r.linear(4, 1);
            r.linear(2, 3);
            r.linear(6, 3);
        }
        // ∏_{p,q}(x − (−1)^p) ∏_l (x − ω^{2l−1})
        (Dim8Kind::K8, 2) => {
            r.linear(0, 2);
            r.linear(4, 2);
            for l in 0..4 {
                r.linear(2 * l - 1, 1);
            }
        }
        _ => {}
    }
    r.finish()
}

fn closed_group_gnn(big_n: u64, n: u64, d: usize) -> RootMultiset {
    let m = 4 * n * big_n;
    let (bn, ni) = (big_n as i64, n as i64);
    let eps = ni % 2;
    let mut r = Roots::new(m);
    match d {
        1 => {
            for s in 0..bn {
                for q in 0..bn {
                    if n == 2 {
                        r.linear(-16 * q * s * s, 32);
                    } else if n.is_multiple_of(2) {
                        r.linear(-8 * ni * q * s * s, 8 * n);
                    } else {
                        r.linear(-8 * ni * q * s * s, 4 * n);
                        r.power(2, -4 * ni * q * (2 * s + 1).pow(2), 2 * n);
                    }
                }
            }
        }
        2 if n == 2 => {
            for s in 0..bn {
                for q in 0..bn {
                    r.power(4, -16 * q * (2 * s + 1).pow(2), 1);
                    r.power(2, -8 * q * (2 * s + 1).pow(2), 2);
                }
            }
        }
        2 => {
            for s in 0..bn {
                for a in 0..ni {
                    for q in 0..bn {
                        for t in 1..=(ni - eps) / 2 {
                            r.power(2, -4 * (ni * q * (2 * s + 1).pow(2) + bn * a * (2 * t - 1).pow(2)), 1);
                        }
                        for t in 1..=(ni - 2 + eps) / 2 {
                            r.linear(-8 * (ni * q * s * s + bn * a * t * t), 2);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    r.finish()
}

fn closed_suzuki(p: &SuzukiParams, d: usize) -> Result<RootMultiset, InvariantError> {
    if !p.is_self_dual() {
        return Err(InvariantError::Unsupported(format!(
            "{} is not self-dual; no closed form for its invariants",
            Family::Suzuki(*p)
        )));
    }
    let m = p.conductor();
    let (bn, ni) = (p.big_n as i64, p.n as i64);
    let half = m as i64 / 2;
    let lam_sign = if p.lambda == 1 { 0 } else { half };
    let shift = (p.lambda as i64 - 1) / 2;
    let eps = ni % 2;
    let mut r = Roots::new(m);
    match d {
        1 => {
            for s in 0..bn {
                for i in 0..bn {
                    if ni == 2 {
                        r.linear(-16 * i * s * s, 16);
                        r.linear(-8 * i * s * s + half, 8);
                        r.linear(-16 * i * s * s + half, 8);
                    } else if ni % 2 == 0 {
                        r.linear(-8 * ni * i * s * s, 4 * p.n);
                        r.linear(-8 * i * ni * s * s + (ni / 2) * half, 4 * p.n);
                    } else {
                        r.linear(-8 * ni * i * s * s, 4 * p.n);
                        r.power(2, -4 * i * ni * (2 * s + 1).pow(2) + lam_sign, 2 * p.n);
                    }
                }
            }
        }
        2 if ni == 2 => {
            for s in 0..bn {
                for i in 0..bn {
                    r.power(4, -16 * i * (2 * s + 1).pow(2) + half, 1);
                    r.power(2, -8 * i * (2 * s + 1).pow(2), 2);
                }
            }
        }
        2 => {
            for s in 0..bn {
                for i in 0..bn {
                    for j in 0..ni {
                        for t in 1..=(ni - eps) / 2 {
                            r.power(2, -4 * i * ni * (2 * s + 1).pow(2) - 2 * bn * (2 * t - 1).pow(2) * (2 * j + shift), 1);
                        }
                        for t in 1..=(ni - 2 + eps) / 2 {
                            r.linear(-8 * i * ni * s * s - 4 * bn * t * t * (2 * j + shift), 2);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    Ok(r.finish())
}

/// P_A^(d) from the printed exponent formulas alone, without building the algebra.
pub fn closed_form(family: &Family, d: usize) -> Result<RootMultiset, InvariantError> {
    if d == 0 {
        return Err(InvariantError::Unsupported("degree must be positive".into()));
    }
    Ok(match family {
        Family::Cyclic { m } => closed_cyclic(*m, d),
        Family::AbelianProduct { m, n } => closed_abelian_product(*m, *n, d),
        Family::Dim8(kind) => closed_dim8(*kind, d),
        Family::GroupGnn { big_n, n } => closed_group_gnn(*big_n, *n, d),
        Family::Suzuki(p) => closed_suzuki(p, d)?,
    })
}

pub fn closed_invariant(family: &Family, d: usize) -> Result<InvariantResult, InvariantError> {
    InvariantResult::new(family.to_string(), d, closed_form(family, d)?, Path::ClosedForm)
}

/// P_A^(d) by the requested path; `Both` fails unless the two agree exactly.
pub fn invariant(bundle: &AlgebraBundle, d: usize, path: Path, exec: Execution) -> Result<InvariantResult, InvariantError> {
    Ok(invariants(bundle, &[d], path, exec)?.remove(0))
}

pub fn invariants(
    bundle: &AlgebraBundle,
    degrees: &[usize],
    path: Path,
    exec: Execution,
) -> Result<Vec<InvariantResult>, InvariantError> {
    match path {
        Path::ClosedForm => degrees.iter().map(|&d| closed_invariant(&bundle.family, d)).collect(),
        Path::Generic => invariants_for_degrees(bundle, degrees, exec),
        Path::Both => {
            let generic = invariants_for_degrees(bundle, degrees, exec)?;
            generic
                .into_iter()
                .map(|g| {
                    let closed = closed_invariant(&bundle.family, g.degree)?;
                    if closed.roots != g.roots {
                        return Err(InvariantError::PathMismatch {
                            algebra: g.algebra,
                            degree: g.degree,
                            generic: g.factorization.render(crate::poly::RenderStyle::Phi),
                            closed: closed.factorization.render(crate::poly::RenderStyle::Phi),
                        });
                    }
                    Ok(InvariantResult { path: Path::Both, ..g })
                })
                .collect()
        }
    }
}

/// The tabulated algebras in printed order: n = 2, 3, 4, then N = 1, 3, 5, group algebra first.
pub fn table_families() -> Vec<Family> {
    let mut out = Vec::new();
    for n in [2, 3, 4] {
        for big_n in [1, 3, 5] {
            out.push(Family::GroupGnn { big_n, n });
            out.push(Family::Suzuki(SuzukiParams::standard(big_n, n).expect("valid table parameters")));
        }
    }
    out
}

/// One table line: P^(1) and P^(2) from the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub p1: CycloFactorization,
    pub p2: CycloFactorization,
}

impl TableRow {
    pub fn render(&self) -> String {
        use crate::poly::RenderStyle::Phi;
        format!("{} | {} | {}", self.family, self.p1.render(Phi), self.p2.render(Phi))
    }
}

pub fn table_rows(exec: Execution) -> Result<Vec<TableRow>, InvariantError> {
    exec.map(&table_families(), |f| {
        Ok(TableRow { family: *f, p1: closed_invariant(f, 1)?.factorization, p2: closed_invariant(f, 2)?.factorization })
    })
    .into_iter()
    .collect()
}

/// Outcome of comparing one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeVerdict {
    Equal,
    /// A root whose multiplicity differs between the two invariants.
    Distinct { witness: RootOfUnity },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub left: String,
    pub right: String,
    pub degrees: Vec<(usize, DegreeVerdict)>,
}

impl Comparison {
    pub fn distinct(&self) -> bool {
        self.degrees.iter().any(|(_, v)| matches!(v, DegreeVerdict::Distinct { .. }))
    }

    pub fn witness(&self) -> Option<(usize, RootOfUnity)> {
        self.degrees.iter().find_map(|(d, v)| match v {
            DegreeVerdict::Distinct { witness } => Some((*d, *witness)),
            DegreeVerdict::Equal => None,
        })
    }

    /// One-line conclusion. Equal invariants never establish equivalence.
    pub fn verdict(&self) -> String {
        match self.witness() {
            Some((_, w)) => format!("DISTINCT (witness root: {w}); not monoidally Morita equivalent"),
            None => "EQUAL at every compared degree; inconclusive (equal invariants do not imply monoidal Morita equivalence)"
                .to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "left": self.left,
            "right": self.right,
            "degrees": self.degrees.iter().map(|(d, v)| match v {
                DegreeVerdict::Equal => json!({"degree": d, "equal": true}),
                DegreeVerdict::Distinct { witness } => json!({"degree": d, "equal": false, "witness": witness.to_string()}),
            }).collect::<Vec<_>>(),
            "distinct": self.distinct(),
            "verdict": self.verdict(),
        })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, v) in &self.degrees {
            match v {
                DegreeVerdict::Equal => writeln!(f, "d={d}: equal")?,
                DegreeVerdict::Distinct { witness } => writeln!(f, "d={d}: distinct (witness root: {witness})")?,
            }
        }
        write!(f, "{}", self.verdict())
    }
}

/// A root whose multiplicity differs, preferring one missing from one side, then lowest order.
fn witness(a: &RootMultiset, b: &RootMultiset) -> Option<RootOfUnity> {
    a.difference(b)
        .into_iter()
        .chain(b.difference(a))
        .map(|(r, _)| {
            let absent = a.multiplicity(&r) == 0 || b.multiplicity(&r) == 0;
            let r = r.reduced();
            ((!absent, r.conductor, r.exponent), r)
        })
        .min_by_key(|(key, _)| *key)
        .map(|(_, r)| r)
}

/// Compare invariants degree by degree; both slices must list the same degrees in order.
pub fn compare(left: &[InvariantResult], right: &[InvariantResult]) -> Comparison {
    assert_eq!(left.len(), right.len(), "compare needs matching degree lists");
    let degrees = left
        .iter()
        .zip(right)
        .map(|(a, b)| {
            assert_eq!(a.degree, b.degree, "compare needs matching degree lists");
            let v = match witness(&a.roots, &b.roots) {
                Some(w) => DegreeVerdict::Distinct { witness: w },
                None => DegreeVerdict::Equal,
            };
            (a.degree, v)
        })
        .collect();
    Comparison {
        left: left.first().map(|r| r.algebra.clone()).unwrap_or_default(),
        right: right.first().map(|r| r.algebra.clone()).unwrap_or_default(),
        degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_by_name;
    use crate::poly::{expand, RenderStyle};

    fn phi(name: &str, d: usize) -> String {
        closed_invariant(&Family::parse(name).unwrap(), d).unwrap().factorization.render(RenderStyle::Phi)
    }

    #[test]
    fn cyclic_closed_form_counts_roots() {
        let rs = closed_form(&Family::Cyclic { m: 3 }, 1).unwrap();
        assert_eq!(rs.degree(), 9);
        // j = 0 gives (x − 1)³; j = 1, 2 give (x³ − 1) each
        assert_eq!(factor_cyclotomic(&rs).unwrap().render(RenderStyle::Phi), "Phi3^2 Phi1^5");
    }

    #[test]
    fn dimension_eight_closed_polynomials() {
        let coeffs = |name: &str| expand(&closed_form(&Family::parse(name).unwrap(), 2).unwrap()).render();
        assert_eq!(coeffs("D8"), "x^8-2x^6+2x^2-1");
        assert_eq!(coeffs("Q8"), "x^8+2x^6-2x^2-1");
        assert_eq!(coeffs("K8"), "x^8-2x^6+2x^4-2x^2+1");
    }

    #[test]
    fn small_table_rows() {
        assert_eq!(phi("G_1_3", 1), "Phi2^6 Phi1^18");
        assert_eq!(phi("A_1_2_-", 2), "Phi8 Phi2^2 Phi1^2");
        assert_eq!(phi("A_3_2_-", 2), "Phi24^2 Phi8^5 Phi6^4 Phi3^4 Phi2^10 Phi1^10");
    }

    #[test]
    fn generic_matches_closed_on_kac_paljutkin() {
        let b = build_by_name("K8").unwrap();
        for d in 1..=3 {
            invariant(&b, d, Path::Both, Execution::Sequential).unwrap();
        }
    }

    #[test]
    fn non_self_dual_suzuki_is_rejected() {
        let b = build_by_name("A_1_2_+").unwrap();
        assert!(matches!(invariant(&b, 1, Path::Generic, Execution::Sequential), Err(InvariantError::Unsupported(_))));
        assert!(closed_form(&b.family, 1).is_err());
    }

    #[test]
    fn compare_reports_witness() {
        let a = closed_invariant(&Family::parse("A_1_2_-").unwrap(), 1).unwrap();
        let g = closed_invariant(&Family::parse("G_1_2").unwrap(), 1).unwrap();
        let c = compare(&[a.clone()], &[g]);
        assert_eq!(c.verdict(), "DISTINCT (witness root: -1); not monoidally Morita equivalent");
        assert!(!compare(&[a.clone()], &[a]).distinct());
    }
}
