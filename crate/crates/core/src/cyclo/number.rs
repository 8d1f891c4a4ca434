//! Elements of Q(ζ_m) stored as integer numerators over one common denominator.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::context::{lcm, CycloContext};
use super::root::RootOfUnity;
use super::CycloError;

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Canonical when every numerator and the denominator fit in i64.
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

/// An exact element of the cyclotomic field Q(ζ_m), reduced modulo Φ_m.
#[derive(Clone)]
pub struct CycNumber {
    ctx: Arc<CycloContext>,
    repr: Repr,
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

/// Reduce a dense i128 vector (any length) modulo Φ_m in place.
fn reduce_i128(ctx: &CycloContext, v: &mut Vec<i128>) -> Option<()> {
    let phi = ctx.phi;
    if v.len() > phi {
        for d in (phi..v.len()).rev() {
            let c = v[d];
            if c != 0 {
                v[d] = 0;
                let base = d - phi;
                for &(e, pe) in &ctx.tail {
                    let t = c.checked_mul(pe as i128)?;
                    v[base + e] = v[base + e].checked_sub(t)?;
                }
            }
        }
        v.truncate(phi);
    }
    Some(())
}

fn reduce_big(ctx: &CycloContext, v: &mut Vec<BigInt>) {
    let phi = ctx.phi;
    if v.len() > phi {
        for d in (phi..v.len()).rev() {
            if !v[d].is_zero() {
                let c = std::mem::take(&mut v[d]);
                let base = d - phi;
                for &(e, pe) in &ctx.tail {
                    v[base + e] -= &c * pe;
                }
            }
        }
        v.truncate(phi);
    }
}

fn normalize_i128(mut num: Vec<i128>, mut den: i128) -> Option<Repr> {
    while num.last() == Some(&0) {
        num.pop();
    }
    if num.is_empty() {
        return Some(Repr::Small { num: Vec::new(), den: 1 });
    }
    if den < 0 {
        den = den.checked_neg()?;
        for x in num.iter_mut() {
            *x = x.checked_neg()?;
        }
    }
    if den != 1 {
        let mut g = den;
        for &x in &num {
            if g == 1 {
                break;
            }
            g = gcd_i128(g, x);
        }
        if g > 1 {
            den /= g;
            for x in num.iter_mut() {
                *x /= g;
            }
        }
    }
    let den = i64::try_from(den).ok()?;
    let mut out = Vec::with_capacity(num.len());
    for x in num {
        out.push(i64::try_from(x).ok()?);
    }
    Some(Repr::Small { num: out, den })
}

fn normalize_big(mut num: Vec<BigInt>, mut den: BigInt) -> Repr {
    while num.last().is_some_and(|x| x.is_zero()) {
        num.pop();
    }
    if num.is_empty() {
        return Repr::Small { num: Vec::new(), den: 1 };
    }
    if den.is_negative() {
        den = -den;
        for x in num.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    if !den.is_one() {
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if !g.is_one() {
            den /= &g;
            for x in num.iter_mut() {
                *x /= &g;
            }
        }
    }
    // Demote when everything fits, so the representation stays canonical.
    if let Some(d) = den.to_i64() {
        let small: Option<Vec<i64>> = num.iter().map(|x| x.to_i64()).collect();
        if let Some(n) = small {
            return Repr::Small { num: n, den: d };
        }
    }
    Repr::Big { num, den }
}

impl Repr {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { num, den } => (num.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(*den)),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Repr::Small { num, .. } => num.is_empty(),
            Repr::Big { num, .. } => num.is_empty(),
        }
    }

    fn len(&self) -> usize {
        match self {
            Repr::Small { num, .. } => num.len(),
            Repr::Big { num, .. } => num.len(),
        }
    }
}

fn add_small(a: (&[i64], i64), b: (&[i64], i64), sign: i128) -> Option<Repr> {
    let (an, ad) = a;
    let (bn, bd) = b;
    let (ad, bd) = (ad as i128, bd as i128);
    let g = gcd_i128(ad, bd);
    let fa = bd / g;
    let fb = ad / g;
    let den = ad.checked_mul(fa)?;
    let len = an.len().max(bn.len());
    let mut num = vec![0i128; len];
    for (i, &x) in an.iter().enumerate() {
        num[i] = (x as i128).checked_mul(fa)?;
    }
    for (i, &y) in bn.iter().enumerate() {
        num[i] = num[i].checked_add(sign * (y as i128).checked_mul(fb)?)?;
    }
    normalize_i128(num, den)
}

fn add_big(a: &Repr, b: &Repr, sign: i64) -> Repr {
    let (an, ad) = a.to_big();
    let (bn, bd) = b.to_big();
    let g = ad.gcd(&bd);
    let fa = &bd / &g;
    let fb = &ad / &g;
    let den = &ad * &fa;
    let len = an.len().max(bn.len());
    let mut num = vec![BigInt::zero(); len];
    for (i, x) in an.iter().enumerate() {
        num[i] = x * &fa;
    }
    for (i, y) in bn.iter().enumerate() {
        num[i] += y * &fb * sign;
    }
    normalize_big(num, den)
}

fn mul_small(ctx: &CycloContext, a: (&[i64], i64), b: (&[i64], i64)) -> Option<Repr> {
    let (an, ad) = a;
    let (bn, bd) = b;
    let mut out = vec![0i128; an.len() + bn.len() - 1];
    // Iterate over the sparser operand's nonzeros.
    let (sparse, dense) = if an.iter().filter(|&&x| x != 0).count() <= bn.iter().filter(|&&x| x != 0).count() {
        (an, bn)
    } else {
        (bn, an)
    };
    for (i, &x) in sparse.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (j, &y) in dense.iter().enumerate() {
            if y != 0 {
                out[i + j] = out[i + j].checked_add(x * y as i128)?;
            }
        }
    }
    reduce_i128(ctx, &mut out)?;
    let den = (ad as i128).checked_mul(bd as i128)?;
    normalize_i128(out, den)
}

fn mul_big(ctx: &CycloContext, a: &Repr, b: &Repr) -> Repr {
    let (an, ad) = a.to_big();
    let (bn, bd) = b.to_big();
    let mut out = vec![BigInt::zero(); an.len() + bn.len() - 1];
    for (i, x) in an.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bn.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    reduce_big(ctx, &mut out);
    normalize_big(out, ad * bd)
}

impl CycNumber {
    fn from_repr(ctx: Arc<CycloContext>, repr: Repr) -> Self {
        CycNumber { ctx, repr }
    }

    pub fn zero(m: u64) -> Self {
        Self::from_repr(CycloContext::get(m), Repr::Small { num: Vec::new(), den: 1 })
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// Zero in the same field, without a context lookup.
    pub fn zero_like(&self) -> Self {
        Self::from_repr(self.ctx.clone(), Repr::Small { num: Vec::new(), den: 1 })
    }

    pub fn one_like(&self) -> Self {
        Self::from_repr(self.ctx.clone(), Repr::Small { num: vec![1], den: 1 })
    }

    pub fn from_int(m: u64, v: i64) -> Self {
        Self::from_fraction(m, v, 1)
    }

    /// `num / den` as an element of Q(ζ_m).
    pub fn from_fraction(m: u64, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let repr = normalize_i128(vec![num as i128], den as i128).expect("small fraction fits");
        Self::from_repr(CycloContext::get(m), repr)
    }

    pub fn from_rational(m: u64, r: &Rational) -> Self {
        let repr = normalize_big(vec![r.numer().clone()], r.denom().clone());
        Self::from_repr(CycloContext::get(m), repr)
    }

    /// ζ_m^k for any integer k.
    pub fn root(m: u64, k: i64) -> Self {
        let ctx = CycloContext::get(m);
        let k = k.rem_euclid(m as i64) as usize;
        let mut num = vec![0i64; ctx.phi];
        for &(i, c) in &ctx.powers[k] {
            num[i] = c;
        }
        while num.last() == Some(&0) {
            num.pop();
        }
        Self::from_repr(ctx, Repr::Small { num, den: 1 })
    }

    /// c · ζ_m^k with a small rational coefficient.
    pub fn scaled_root(m: u64, num: i64, den: i64, k: i64) -> Self {
        let ctx = CycloContext::get(m);
        let k = k.rem_euclid(m as i64) as usize;
        let mut v = vec![0i128; ctx.phi];
        for &(i, c) in &ctx.powers[k] {
            v[i] = c as i128 * num as i128;
        }
        let repr = normalize_i128(v, den as i128).expect("small scaled root fits");
        Self::from_repr(ctx, repr)
    }

    /// Build from power-basis coefficients of any length; reduces mod Φ_m.
    pub fn from_coeffs(m: u64, coeffs: &[Rational]) -> Self {
        let ctx = CycloContext::get(m);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        reduce_big(&ctx, &mut num);
        let repr = normalize_big(num, den);
        Self::from_repr(ctx, repr)
    }

    pub fn from_int_coeffs(m: u64, coeffs: &[i64]) -> Self {
        let ctx = CycloContext::get(m);
        let mut v: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
        match reduce_i128(&ctx, &mut v).and_then(|_| normalize_i128(v, 1)) {
            Some(repr) => Self::from_repr(ctx, repr),
            None => {
                let r: Vec<Rational> = coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect();
                Self::from_coeffs(m, &r)
            }
        }
    }

    pub fn conductor(&self) -> u64 {
        self.ctx.m
    }

    pub fn degree(&self) -> usize {
        self.ctx.phi
    }

    /// Power-basis coefficients, padded to length φ(m).
    pub fn coeffs(&self) -> Vec<Rational> {
        let (num, den) = self.repr.to_big();
        let mut out: Vec<Rational> = num.into_iter().map(|n| Rational::new(n, den.clone())).collect();
        out.resize(self.ctx.phi, Rational::zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Small { num, den } if num.len() == 1 && num[0] == 1 && *den == 1)
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.repr.len() > 1 {
            return None;
        }
        let (num, den) = self.repr.to_big();
        Some(match num.first() {
            None => Rational::zero(),
            Some(n) => Rational::new(n.clone(), den),
        })
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Number of nonzero power-basis coefficients.
    pub fn support(&self) -> usize {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().filter(|&&x| x != 0).count(),
            Repr::Big { num, .. } => num.iter().filter(|x| !x.is_zero()).count(),
        }
    }

    /// Lift to conductor `big`, which must be a multiple of the current conductor.
    pub fn embed(&self, big: u64) -> Result<CycNumber, CycloError> {
        let m = self.ctx.m;
        if !big.is_multiple_of(m) {
            return Err(CycloError::IncompatibleConductor { from: m, to: big });
        }
        if big == m {
            return Ok(self.clone());
        }
        let step = (big / m) as usize;
        let ctx = CycloContext::get(big);
        let repr = match &self.repr {
            Repr::Small { num, den } => {
                let mut acc = vec![0i128; ctx.phi.max(1)];
                let mut ok = true;
                for (i, &c) in num.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for &(j, p) in &ctx.powers[i * step] {
                        match (c as i128).checked_mul(p as i128).and_then(|t| acc[j].checked_add(t)) {
                            Some(v) => acc[j] = v,
                            None => ok = false,
                        }
                    }
                }
                if ok {
                    normalize_i128(acc, *den as i128)
                } else {
                    None
                }
            }
            Repr::Big { .. } => None,
        };
        let repr = match repr {
            Some(r) => r,
            None => {
                let (num, den) = self.repr.to_big();
                let mut acc = vec![BigInt::zero(); ctx.phi.max(1)];
                for (i, c) in num.iter().enumerate() {
                    for &(j, p) in &ctx.powers[i * step] {
                        acc[j] += c * p;
                    }
                }
                normalize_big(acc, den)
            }
        };
        Ok(CycNumber::from_repr(ctx, repr))
    }

    fn align(a: &CycNumber, b: &CycNumber) -> (CycNumber, CycNumber) {
        let m = lcm(a.ctx.m, b.ctx.m);
        (a.embed(m).expect("lcm multiple"), b.embed(m).expect("lcm multiple"))
    }

    fn add_signed(&self, other: &CycNumber, sign: i64) -> CycNumber {
        if self.ctx.m != other.ctx.m {
            let (a, b) = Self::align(self, other);
            return a.add_signed(&b, sign);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() && sign == 1 {
            return other.clone();
        }
        let repr = match (&self.repr, &other.repr) {
            (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
                add_small((an, *ad), (bn, *bd), sign as i128)
            }
            _ => None,
        }
        .unwrap_or_else(|| add_big(&self.repr, &other.repr, sign));
        CycNumber::from_repr(self.ctx.clone(), repr)
    }

    pub fn add(&self, other: &CycNumber) -> CycNumber {
        self.add_signed(other, 1)
    }

    pub fn sub(&self, other: &CycNumber) -> CycNumber {
        self.add_signed(other, -1)
    }

    pub fn neg(&self) -> CycNumber {
        self.zero_like().sub(self)
    }

    pub fn mul(&self, other: &CycNumber) -> CycNumber {
        if self.ctx.m != other.ctx.m {
            let (a, b) = Self::align(self, other);
            return a.mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let repr = match (&self.repr, &other.repr) {
            (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
                mul_small(&self.ctx, (an, *ad), (bn, *bd))
            }
            _ => None,
        }
        .unwrap_or_else(|| mul_big(&self.ctx, &self.repr, &other.repr));
        CycNumber::from_repr(self.ctx.clone(), repr)
    }

    /// Multiply by a small integer.
    pub fn scale_int(&self, k: i64) -> CycNumber {
        self.mul(&CycNumber::from_int(self.ctx.m, k))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_m.
    pub fn inv(&self) -> Result<CycNumber, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycNumber::from_rational(self.ctx.m, &r.recip()));
        }
        let a: Vec<Rational> = self.coeffs();
        let phi: Vec<Rational> = self.ctx.poly.iter().map(|&c| Rational::from_integer(c.into())).collect();
        let s = qpoly::inverse_mod(&a, &phi).ok_or(CycloError::DivisionByZero)?;
        Ok(CycNumber::from_coeffs(self.ctx.m, &s))
    }

    pub fn div(&self, other: &CycNumber) -> Result<CycNumber, CycloError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<CycNumber, CycloError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Complex conjugate, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> CycNumber {
        let m = self.ctx.m as i64;
        let (num, den) = self.repr.to_big();
        let mut acc = CycNumber::zero(self.ctx.m);
        let d = CycNumber::from_rational(self.ctx.m, &Rational::new(BigInt::one(), den));
        for (i, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = CycNumber::root(self.ctx.m, m - i as i64)
                .mul(&CycNumber::from_rational(self.ctx.m, &Rational::from_integer(c.clone())));
            acc = acc.add(&term);
        }
        acc.mul(&d)
    }

    /// If this value equals ζ_L^k exactly (L = m, or 2m for odd m), return it.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let m = self.ctx.m;
        let (num, den) = match &self.repr {
            Repr::Small { num, den } => (num, *den),
            Repr::Big { .. } => return None,
        };
        if den != 1 {
            return None;
        }
        let dense = |k: usize| -> bool {
            let p = &self.ctx.powers[k];
            let nnz = num.iter().filter(|&&x| x != 0).count();
            nnz == p.len() && p.iter().all(|&(i, c)| num.get(i) == Some(&c))
        };
        let negated = |k: usize| -> bool {
            let p = &self.ctx.powers[k];
            let nnz = num.iter().filter(|&&x| x != 0).count();
            nnz == p.len() && p.iter().all(|&(i, c)| num.get(i) == Some(&-c))
        };
        for k in 0..m as usize {
            if dense(k) {
                return Some(RootOfUnity::new(m, k as i64));
            }
        }
        if m % 2 == 1 {
            for k in 0..m as usize {
                if negated(k) {
                    // -ζ_m^k = ζ_{2m}^{2k + m}
                    return Some(RootOfUnity::new(2 * m, 2 * k as i64 + m as i64));
                }
            }
        }
        None
    }

    /// Floating-point evaluation at ζ = exp(2πi/m), for debugging only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.ctx.m as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs().iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / m;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Parse "a/b*z^k+c*z-d" style text over ζ_m.
    pub fn parse(m: u64, text: &str) -> Result<CycNumber, CycloError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(CycloError::Parse(text.to_string()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = CycNumber::zero(m);
        for t in terms {
            acc = acc.add(&parse_term(m, t).ok_or_else(|| CycloError::Parse(text.to_string()))?);
        }
        Ok(acc)
    }
}

fn parse_term(m: u64, t: &str) -> Option<CycNumber> {
    let (sign, body) = match t.as_bytes().first()? {
        b'+' => (1i64, &t[1..]),
        b'-' => (-1i64, &t[1..]),
        _ => (1, t),
    };
    let (coef_txt, exp) = if let Some(pos) = body.find('z') {
        let coef = body[..pos].trim_end_matches('*');
        let rest = &body[pos + 1..];
        let exp: i64 = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse().ok()?
        };
        (coef, exp)
    } else {
        (body, 0)
    };
    let coef: Rational = if coef_txt.is_empty() {
        Rational::one()
    } else if let Some((a, b)) = coef_txt.split_once('/') {
        let b: BigInt = b.parse().ok()?;
        if b.is_zero() {
            return None;
        }
        Rational::new(a.parse().ok()?, b)
    } else {
        Rational::from_integer(coef_txt.parse().ok()?)
    };
    let c = CycNumber::from_rational(m, &(coef * Rational::from_integer(sign.into())));
    Some(c.mul(&CycNumber::root(m, exp)))
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx.m == other.ctx.m {
            self.repr == other.repr
        } else {
            let (a, b) = Self::align(self, other);
            a.repr == b.repr
        }
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.m.hash(state);
        self.repr.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (z = ζ_{})", self, self.ctx.m)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            match i {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                CycNumber::$inner(self, rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber::neg(self)
    }
}


/// Dense polynomials over Q, only what inversion needs.
mod qpoly {
    use super::Rational;
    use num_traits::Zero;

    fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    fn sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = a.to_vec();
        let need = if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 };
        if out.len() < need {
            out.resize(need, Rational::zero());
        }
        for (i, x) in q.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] -= x * y;
            }
        }
        trim(out)
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().expect("nonempty").clone() / &lead;
            for (j, y) in b.iter().enumerate() {
                r[shift + j] -= &c * y;
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    /// s with s·a ≡ 1 (mod modulus), if gcd(a, modulus) = 1.
    pub fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
        let mut r0 = trim(modulus.to_vec());
        let mut r1 = trim(a.to_vec());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::from_integer(1.into())];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        Some(s0.into_iter().map(|x| x / &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64, k: i64) -> CycNumber {
        CycNumber::root(m, k)
    }

    #[test]
    fn conjugate_pair_cancels() {
        assert!((&z(4, 1) + &z(4, 3)).is_zero());
    }

    #[test]
    fn inverse_of_root() {
        for m in [3u64, 5, 8, 12, 15] {
            for k in 0..m as i64 {
                assert_eq!(z(m, k).inv().unwrap(), z(m, m as i64 - k));
            }
        }
    }

    #[test]
    fn half_plus_half_zeta2_times_two() {
        let x = CycNumber::from_fraction(2, 1, 2).add(&CycNumber::scaled_root(2, 1, 2, 1));
        assert!(x.scale_int(2).is_zero());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycNumber::zero(5).inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(z(2, 1).embed(4).unwrap(), z(4, 2));
        assert!(CycNumber::one(3).embed(12).unwrap().is_one());
        let s = z(3, 1).add(&z(3, 2)).embed(6).unwrap();
        assert_eq!(s, CycNumber::from_int(6, -1));
        let (re, im) = z(3, 1).add(&z(3, 2)).to_complex();
        assert!((re + 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        assert!(z(3, 1).embed(4).is_err());
    }

    #[test]
    fn root_detection() {
        assert_eq!(CycNumber::from_int(8, -1).as_root_of_unity(), Some(RootOfUnity::new(8, 4)));
        assert_eq!(CycNumber::from_fraction(8, 1, 2).as_root_of_unity(), None);
        for m in [4u64, 6, 9] {
            for d in 0..m as i64 {
                for j in 0..m as i64 {
                    let r = z(m, -d * j * j).as_root_of_unity().unwrap();
                    assert_eq!(r, RootOfUnity::new(m, -d * j * j));
                }
            }
        }
        let neg = CycNumber::root(3, 1).neg().as_root_of_unity().unwrap();
        assert_eq!(neg, RootOfUnity::new(6, 5));
    }

    #[test]
    fn cross_conductor_equality() {
        assert_eq!(z(4, 2), CycNumber::from_int(2, -1));
        assert_eq!(z(12, 3), z(4, 1));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let x = CycNumber::parse(8, "1/2*z^3-2*z+5/3").unwrap();
        assert_eq!(x.to_string(), "5/3-2*z+1/2*z^3");
        assert_eq!(CycNumber::parse(8, &x.to_string()).unwrap(), x);
        assert_eq!(CycNumber::parse(4, "z^2").unwrap(), CycNumber::from_int(4, -1));
        assert!(CycNumber::parse(4, "1/0").is_err());
    }

    #[test]
    fn big_fallback_is_exact() {
        let big = CycNumber::from_int(5, i64::MAX);
        let sq = big.mul(&big);
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        let d = sq.sub(&sq);
        assert!(d.is_zero());
    }

    #[test]
    fn powers() {
        let a = z(7, 3);
        assert!(a.pow(0).unwrap().is_one());
        assert_eq!(a.pow(7).unwrap(), CycNumber::one(7));
        assert_eq!(a.pow(-1).unwrap(), z(7, 4));
        let b = CycNumber::from_int(7, 1).add(&z(7, 1));
        assert_eq!(b.pow(-2).unwrap().mul(&b.pow(2).unwrap()), CycNumber::one(7));
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(8, 3).conj(), z(8, 5));
        let x = CycNumber::parse(12, "1/2+z-3*z^2").unwrap();
        assert_eq!(x.conj().conj(), x);
    }
}
