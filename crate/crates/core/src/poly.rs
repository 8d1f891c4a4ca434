//! Polynomials whose roots are all roots of unity: root multisets, expansion,
//! and factorization into cyclotomic polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cyclo::{cyclotomic_polynomial, euler_phi, CycNumber, RootOfUnity};

/// A monic polynomial ∏ (x − ζ_m^k)^{mult}, stored as exponent counts at one conductor.
#[derive(Clone, Debug)]
pub struct RootMultiset {
    conductor: u64,
    counts: BTreeMap<u64, u64>,
}

impl RootMultiset {
    /// The constant polynomial 1.
    pub fn empty(conductor: u64) -> Self {
        RootMultiset { conductor, counts: BTreeMap::new() }
    }

    pub fn from_roots(roots: &[RootOfUnity]) -> Self {
        let m = roots.iter().fold(1u64, |acc, r| acc.lcm(&r.conductor));
        let mut rs = RootMultiset::empty(m);
        for r in roots {
            rs.insert(*r, 1);
        }
        rs
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn degree(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Add a root with multiplicity, lifting the conductor if needed.
    pub fn insert(&mut self, r: RootOfUnity, mult: u64) {
        if mult == 0 {
            return;
        }
        let r = match r.at_conductor(self.conductor) {
            Some(r) => r,
            None => {
                let m = self.conductor.lcm(&r.reduced().conductor);
                *self = self.lift(m);
                r.at_conductor(m).expect("lcm conductor")
            }
        };
        *self.counts.entry(r.exponent).or_insert(0) += mult;
    }

    /// Same multiset written at a multiple of the current conductor.
    pub fn lift(&self, m: u64) -> RootMultiset {
        assert!(m.is_multiple_of(self.conductor), "lift target must be a multiple");
        let step = m / self.conductor;
        RootMultiset { conductor: m, counts: self.counts.iter().map(|(&k, &c)| (k * step, c)).collect() }
    }

    /// Rewrite at conductor `m` if every root lives there.
    pub fn at_conductor(&self, m: u64) -> Option<RootMultiset> {
        let mut out = RootMultiset::empty(m);
        for r in self.roots() {
            let (root, c) = r;
            let x = root.at_conductor(m)?;
            *out.counts.entry(x.exponent).or_insert(0) += c;
        }
        Some(out)
    }

    /// Smallest conductor holding every root.
    pub fn minimal_conductor(&self) -> u64 {
        self.roots().fold(1u64, |acc, (r, _)| acc.lcm(&r.order()))
    }

    pub fn canonical(&self) -> RootMultiset {
        self.at_conductor(self.minimal_conductor()).expect("minimal conductor holds all roots")
    }

    pub fn roots(&self) -> impl Iterator<Item = (RootOfUnity, u64)> + '_ {
        self.counts.iter().map(move |(&k, &c)| (RootOfUnity::new(self.conductor, k as i64), c))
    }

    pub fn merge(&self, other: &RootMultiset) -> RootMultiset {
        let m = self.conductor.lcm(&other.conductor);
        let mut out = self.lift(m);
        for (k, c) in other.lift(m).counts {
            *out.counts.entry(k).or_insert(0) += c;
        }
        out
    }

    pub fn multiplicity(&self, r: &RootOfUnity) -> u64 {
        r.at_conductor(self.conductor).and_then(|x| self.counts.get(&x.exponent).copied()).unwrap_or(0)
    }

    /// Roots present here but not (with enough multiplicity) in `other`.
    pub fn difference(&self, other: &RootMultiset) -> Vec<(RootOfUnity, u64)> {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift(m);
        let b = other.lift(m);
        a.counts
            .iter()
            .filter_map(|(k, &c)| {
                let d = b.counts.get(k).copied().unwrap_or(0);
                (c > d).then(|| (RootOfUnity::new(m, *k as i64), c - d))
            })
            .collect()
    }

    /// Multiplicity of roots grouped by exact order.
    pub fn order_profile(&self) -> BTreeMap<u64, BTreeMap<u64, u64>> {
        let mut out: BTreeMap<u64, BTreeMap<u64, u64>> = BTreeMap::new();
        for (r, c) in self.roots() {
            let red = r.reduced();
            *out.entry(red.conductor).or_default().entry(red.exponent).or_insert(0) += c;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conductor": self.conductor,
            "roots": self.counts.iter().map(|(k, c)| json!({"exp": k, "mult": c})).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for RootMultiset {
    fn eq(&self, other: &Self) -> bool {
        let m = self.conductor.lcm(&other.conductor);
        self.lift(m).counts == other.lift(m).counts
    }
}

impl Eq for RootMultiset {}

/// ∏ Φ_h^{e_h}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycloFactorization {
    pub factors: BTreeMap<u64, u64>,
}

/// Why a multiset is not a product of whole cyclotomic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFailure {
    pub order: u64,
    /// Multiplicity of each primitive root ζ_order^k (k coprime to order), zeros included.
    pub profile: BTreeMap<u64, u64>,
}

impl fmt::Display for FactorFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "roots of order {} occur unevenly:", self.order)?;
        for (k, c) in &self.profile {
            write!(f, " ζ{}^{}×{}", self.order, k, c)?;
        }
        Ok(())
    }
}

impl std::error::Error for FactorFailure {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    Phi,
    Coeffs,
    Roots,
}

impl CycloFactorization {
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(&h, &e)| euler_phi(h) * e).sum()
    }

    /// Integer coefficients of ∏ Φ_h^{e_h}, ascending.
    pub fn reconstruct(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::one()];
        for (&h, &e) in &self.factors {
            let p: Vec<BigInt> = cyclotomic_polynomial(h).iter().map(|&c| BigInt::from(c)).collect();
            for _ in 0..e {
                acc = int_poly_mul(&acc, &p);
            }
        }
        acc
    }

    /// The roots, as a multiset at the lcm of the orders.
    pub fn roots(&self) -> RootMultiset {
        let m = self.factors.keys().fold(1u64, |a, h| a.lcm(h));
        let mut rs = RootMultiset::empty(m);
        for (&h, &e) in &self.factors {
            for k in 0..h {
                if k.gcd(&h) == 1 {
                    rs.insert(RootOfUnity::new(h, k as i64), e);
                }
            }
        }
        rs
    }

    pub fn render(&self, style: RenderStyle) -> String {
        match style {
            RenderStyle::Phi => {
                if self.factors.is_empty() {
                    return "1".to_string();
                }
                self.factors
                    .iter()
                    .rev()
                    .map(|(h, e)| if *e == 1 { format!("Phi{h}") } else { format!("Phi{h}^{e}") })
                    .collect::<Vec<_>>()
                    .join(" ")
            }
            RenderStyle::Coeffs => render_int_poly(&self.reconstruct()),
            RenderStyle::Roots => render_roots(&self.roots()),
        }
    }

    /// Parse "Phi8 Phi2^2 Phi1^2" or the superscript form "Φ8Φ2²Φ1²" (any order).
    pub fn parse(text: &str) -> Result<CycloFactorization, String> {
        let normalized: String = text
            .chars()
            .map(|c| match c {
                '⁰' => '0',
                '¹' => '1',
                '²' => '2',
                '³' => '3',
                '⁴' => '4',
                '⁵' => '5',
                '⁶' => '6',
                '⁷' => '7',
                '⁸' => '8',
                '⁹' => '9',
                _ => c,
            })
            .collect();
        let sup = |c: char| "⁰¹²³⁴⁵⁶⁷⁸⁹".contains(c);
        let mut factors = BTreeMap::new();
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(CycloFactorization::default());
        }
        // Walk the original text so superscripts can be told apart from indices.
        let orig: Vec<char> = trimmed.chars().collect();
        let norm: Vec<char> = normalized.trim().chars().collect();
        let mut i = 0;
        while i < orig.len() {
            if orig[i].is_whitespace() {
                i += 1;
                continue;
            }
            if orig[i] == 'Φ' {
                i += 1;
            } else if orig[i..].starts_with(&['P', 'h', 'i']) {
                i += 3;
            } else {
                return Err(format!("unexpected {:?} in {text:?}", orig[i]));
            }
            let start = i;
            while i < orig.len() && orig[i].is_ascii_digit() {
                i += 1;
            }
            let h: u64 = orig[start..i].iter().collect::<String>().parse().map_err(|_| format!("missing index in {text:?}"))?;
            let mut e = 1u64;
            if i < orig.len() && orig[i] == '^' {
                i += 1;
                let s = i;
                while i < orig.len() && orig[i].is_ascii_digit() {
                    i += 1;
                }
                e = orig[s..i].iter().collect::<String>().parse().map_err(|_| format!("bad exponent in {text:?}"))?;
            } else if i < orig.len() && sup(orig[i]) {
                let s = i;
                while i < orig.len() && sup(orig[i]) {
                    i += 1;
                }
                e = norm[s..i].iter().collect::<String>().parse().map_err(|_| format!("bad exponent in {text:?}"))?;
            }
            if h == 0 {
                return Err(format!("Phi0 in {text:?}"));
            }
            *factors.entry(h).or_insert(0) += e;
        }
        Ok(CycloFactorization { factors })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.factors.iter().rev().map(|(h, e)| json!({"h": h, "e": e})).collect())
    }
}

/// Group roots by order; succeed iff each order class is complete with one multiplicity.
pub fn factor_cyclotomic(rs: &RootMultiset) -> Result<CycloFactorization, FactorFailure> {
    let mut factors = BTreeMap::new();
    for (h, present) in rs.order_profile() {
        let mut profile = BTreeMap::new();
        for k in 0..h {
            if k.gcd(&h) == 1 {
                profile.insert(k, present.get(&k).copied().unwrap_or(0));
            }
        }
        let first = *profile.values().next().expect("every order has a primitive root");
        if profile.values().any(|&c| c != first) || first == 0 {
            return Err(FactorFailure { order: h, profile });
        }
        factors.insert(h, first);
    }
    Ok(CycloFactorization { factors })
}

/// A monic polynomial with cyclotomic-field coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedPoly {
    pub coeffs: Vec<CycNumber>,
    pub integral: bool,
}

impl ExpandedPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    pub fn render(&self) -> String {
        match self.integer_coeffs() {
            Some(c) => render_int_poly(&c),
            None => {
                let mut parts = Vec::new();
                for (i, c) in self.coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    parts.push(match i {
                        0 => format!("({c})"),
                        1 => format!("({c})*x"),
                        _ => format!("({c})*x^{i}"),
                    });
                }
                parts.join("+")
            }
        }
    }
}

/// Exact ∏ (x − root). Whole orbits go through integer Φ products; leftovers use field arithmetic.
pub fn expand(rs: &RootMultiset) -> ExpandedPoly {
    let mut whole = CycloFactorization::default();
    let mut leftovers: Vec<(RootOfUnity, u64)> = Vec::new();
    for (h, present) in rs.order_profile() {
        let prim: Vec<u64> = (0..h).filter(|k| k.gcd(&h) == 1).collect();
        let e = prim.iter().map(|k| present.get(k).copied().unwrap_or(0)).min().unwrap_or(0);
        if e > 0 {
            whole.factors.insert(h, e);
        }
        for (&k, &c) in &present {
            if c > e {
                leftovers.push((RootOfUnity::new(h, k as i64), c - e));
            }
        }
    }
    let base = whole.reconstruct();
    let m = rs.conductor();
    if leftovers.is_empty() {
        let coeffs = base.iter().map(|c| CycNumber::from_rational(m, &c.clone().into())).collect();
        return ExpandedPoly { coeffs, integral: true };
    }
    let mut acc: Vec<CycNumber> = base.iter().map(|c| CycNumber::from_rational(m, &c.clone().into())).collect();
    for (r, c) in leftovers {
        let root = r.at_conductor(m).expect("root lives at multiset conductor").to_cyc();
        for _ in 0..c {
            let mut next = vec![CycNumber::zero(m); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].add(a);
                next[i] = next[i].sub(&a.mul(&root));
            }
            acc = next;
        }
    }
    let integral = acc.iter().all(|c| c.to_integer().is_some());
    ExpandedPoly { coeffs: acc, integral }
}

pub fn render(f: &CycloFactorization, style: RenderStyle) -> String {
    f.render(style)
}

pub fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// "x^8-2x^6+2x^4-2x^2+1"
pub fn render_int_poly(c: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let mag = a.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let show_mag = !mag.is_one() || i == 0;
        if show_mag {
            s.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => s.push('x'),
            _ => s.push_str(&format!("x^{i}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn render_roots(rs: &RootMultiset) -> String {
    if rs.is_empty() {
        return "1".to_string();
    }
    rs.roots()
        .map(|(r, c)| if c == 1 { format!("{r}") } else { format!("{r}^{c}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The JSON shape shared by the CLI: conductor, roots, Φ factors (when complete), coefficients.
pub fn invariant_json(rs: &RootMultiset) -> Value {
    let mut v = rs.to_json();
    let exp = expand(rs);
    v["phi"] = match factor_cyclotomic(rs) {
        Ok(f) => f.to_json(),
        Err(_) => Value::Null,
    };
    v["coeffs"] = match exp.integer_coeffs() {
        Some(c) => Value::Array(
            c.iter()
                .map(|x| x.to_i64().map(Value::from).unwrap_or_else(|| Value::String(x.to_string())))
                .collect(),
        ),
        None => Value::Array(exp.coeffs.iter().map(|x| Value::String(x.to_string())).collect()),
    };
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> RootOfUnity {
        RootOfUnity::one()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent product of linear factors (x − r) with r = ±1, for the oracle.
    fn naive_pm_one(ones: usize, minus_ones: usize) -> Vec<BigInt> {
        let mut acc = big(&[1]);
        for _ in 0..ones {
            acc = int_poly_mul(&acc, &big(&[-1, 1]));
        }
        for _ in 0..minus_ones {
            acc = int_poly_mul(&acc, &big(&[1, 1]));
        }
        acc
    }

    #[test]
    fn empty_is_constant_one() {
        let rs = RootMultiset::from_roots(&[]);
        assert_eq!(rs.degree(), 0);
        assert_eq!(expand(&rs).integer_coeffs().unwrap(), big(&[1]));
        let f = factor_cyclotomic(&rs).unwrap();
        assert_eq!(f.render(RenderStyle::Phi), "1");
    }

    #[test]
    fn tally_repeats() {
        let rs = RootMultiset::from_roots(&[one(), one()]);
        assert_eq!(rs.counts().get(&0), Some(&2));
    }

    #[test]
    fn three_ones_and_minus_one() {
        let rs = RootMultiset::from_roots(&[one(), one(), one(), RootOfUnity::minus_one()]);
        let e = expand(&rs);
        assert!(e.integral);
        assert_eq!(e.integer_coeffs().unwrap(), naive_pm_one(3, 1));
        assert_eq!(e.integer_coeffs().unwrap(), big(&[-1, 2, 0, -2, 1]));
        let f = factor_cyclotomic(&rs).unwrap();
        assert_eq!(f.render(RenderStyle::Phi), "Phi2 Phi1^3");
        assert_eq!(f.reconstruct(), naive_pm_one(3, 1));
    }

    #[test]
    fn kac_paljutkin_shape() {
        let f = CycloFactorization::parse("Phi8 Phi2^2 Phi1^2").unwrap();
        assert_eq!(f.render(RenderStyle::Coeffs), "x^8-2x^6+2x^4-2x^2+1");
        let rs = f.roots();
        assert_eq!(factor_cyclotomic(&rs).unwrap(), f);
        assert_eq!(render_int_poly(&expand(&rs).integer_coeffs().unwrap()), "x^8-2x^6+2x^4-2x^2+1");
    }

    #[test]
    fn incomplete_class_reports() {
        let rs = RootMultiset::from_roots(&[RootOfUnity::new(3, 1)]);
        let err = factor_cyclotomic(&rs).unwrap_err();
        assert_eq!(err.order, 3);
        assert_eq!(err.profile.get(&2), Some(&0));
        let e = expand(&rs);
        assert!(!e.integral);
        assert_eq!(e.coeffs[0], CycNumber::root(3, 1).neg());
    }

    #[test]
    fn parse_superscripts_any_order() {
        let a = CycloFactorization::parse("Φ24⁴Φ12⁴Φ8^10Φ6^12Φ3^12Φ4^10Φ2^30Φ1^30").unwrap();
        let b = CycloFactorization::parse("Phi24^4 Phi12^4 Phi8^10 Phi6^12 Phi4^10 Phi3^12 Phi2^30 Phi1^30").unwrap();
        assert_eq!(a, b);
        assert_eq!(CycloFactorization::parse("Φ12²Φ4⁵").unwrap().factors.get(&12), Some(&2));
    }

    #[test]
    fn merge_and_equality_across_conductors() {
        let a = RootMultiset::from_roots(&[RootOfUnity::new(4, 2)]);
        let b = RootMultiset::from_roots(&[RootOfUnity::minus_one()]);
        assert_eq!(a, b);
        let c = a.merge(&RootMultiset::from_roots(&[RootOfUnity::new(3, 1)]));
        assert_eq!(c.conductor(), 12);
        assert_eq!(c.degree(), 2);
        assert_eq!(c.canonical().conductor(), 6);
    }

    #[test]
    fn render_edge_cases() {
        assert_eq!(render_int_poly(&big(&[-1, 1])), "x-1");
        assert_eq!(render_int_poly(&big(&[1])), "1");
        assert_eq!(render_int_poly(&big(&[0, -1, 0, 1])), "x^3-x");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rs() -> impl Strategy<Value = RootMultiset> {
            prop::sample::select(vec![1u64, 2, 4, 6, 8, 12])
                .prop_flat_map(|m| (Just(m), prop::collection::vec((0..m as i64, 1u64..3), 0..6)))
                .prop_map(|(m, v)| {
                    let mut rs = RootMultiset::empty(m);
                    for (k, c) in v {
                        rs.insert(RootOfUnity::new(m, k), c);
                    }
                    rs
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn merge_laws(a in arb_rs(), b in arb_rs(), c in arb_rs()) {
                prop_assert_eq!(a.merge(&b), b.merge(&a));
                prop_assert_eq!(a.merge(&b).merge(&c), a.merge(&b.merge(&c)));
                prop_assert_eq!(a.merge(&b).degree(), a.degree() + b.degree());
            }

            #[test]
            fn round_trip_through_factorization(a in arb_rs()) {
                if let Ok(f) = factor_cyclotomic(&a) {
                    prop_assert_eq!(expand(&a).integer_coeffs().unwrap(), f.reconstruct());
                    prop_assert_eq!(f.degree(), a.degree());
                }
                prop_assert_eq!(expand(&a).degree() as u64, a.degree());
            }
        }
    }
}
