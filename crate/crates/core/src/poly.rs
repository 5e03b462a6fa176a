//! Exact univariate polynomials over the integers.
//!
//! [`IntPoly`] is a sparse polynomial with arbitrary-precision coefficients.
//! [`FactoredPoly`] keeps a product of (base, exponent) pairs whose exponents
//! may be far too large to ever expand, which is the normal situation for
//! characteristic polynomials of hypertrees.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("expanded degree {degree} exceeds the guard {guard}")]
    DegreeGuard { degree: BigUint, guard: BigUint },
    #[error("integer content {content} raised to {exp} is too large to represent")]
    ContentOverflow { content: BigInt, exp: BigUint },
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// Sparse polynomial in one variable with `BigInt` coefficients.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, deg: u64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(deg, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    /// Coefficients listed from degree 0 upwards.
    pub fn from_ascending<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(d, c)| (d as u64, c)))
    }

    fn add_term(&mut self, deg: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(deg).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplicity of the root 0, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<u64> {
        self.terms.keys().next().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn coeff(&self, deg: u64) -> BigInt {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense coefficient vector, lowest degree first.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut v = vec![BigInt::zero(); deg as usize + 1];
        for (d, c) in &self.terms {
            v[*d as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(v: Vec<BigInt>) -> Self {
        let terms = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u64, c))
            .collect();
        Self { terms }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse exponents.
        let mut acc = BigInt::zero();
        let mut prev: Option<u64> = None;
        for (d, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= Pow::pow(x, (p - d) as u32);
            }
            acc += c;
            prev = Some(*d);
        }
        if let Some(p) = prev {
            acc *= Pow::pow(x, p as u32);
        }
        acc
    }

    /// Substitutes `x -> x^k`.
    pub fn compose_power(&self, k: u64) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d * k, c.clone())).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u64) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Divides by `x^k`; the caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: u64) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d - k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, c * s)).collect(),
        }
    }

    /// Exact division of every coefficient by `s`.
    fn div_scalar_exact(&self, s: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, c / s)).collect(),
        }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Quotient `self / divisor` when it is exact over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_integral(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division that only succeeds while every leading-coefficient
    /// quotient is integral.
    fn div_rem_integral(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (q, r) = rem.leading_coeff().div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            for (d, c) in &divisor.terms {
                rem.add_term(d + shift, -(c * &q));
            }
            quot.add_term(shift, q);
        }
        Some((quot, rem))
    }

    /// Pseudo-remainder `prem(self, divisor)` with `lc(divisor)^(deg a - deg b + 1)` scaling.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let (Some(da), Some(db)) = (self.degree(), divisor.degree()) else {
            return self.clone();
        };
        if da < db {
            return self.clone();
        }
        let lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut steps = da - db + 1;
        while let Some(rd) = rem.degree() {
            if rd < db {
                break;
            }
            let lr = rem.leading_coeff();
            rem = rem.scale(&lc);
            let shift = rd - db;
            for (d, c) in &divisor.terms {
                rem.add_term(d + shift, -(c * &lr));
            }
            steps -= 1;
        }
        if steps > 0 {
            rem = rem.scale(&Pow::pow(&lc, steps as u32));
        }
        rem
    }

    /// Greatest common divisor via the subresultant remainder sequence.
    ///
    /// The result is primitive with a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        if self.is_zero() {
            return Ok(other.primitive_part());
        }
        if other.is_zero() {
            return Ok(self.primitive_part());
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return Ok(b.primitive_part());
            }
            if r.degree() == Some(0) {
                return Ok(IntPoly::one());
            }
            let divisor = &g * Pow::pow(&h, delta as u32);
            a = b;
            b = r.div_scalar_exact(&divisor);
            g = a.leading_coeff();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                let num = Pow::pow(&g, delta as u32);
                let den = Pow::pow(&h, (delta - 1) as u32);
                num / den
            };
        }
    }

    /// Dense coefficients from the leading term downwards; used for canonical ordering.
    fn descending_coeffs(&self) -> Vec<BigInt> {
        let mut v = self.to_dense();
        v.reverse();
        v
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, -c);
        }
        out
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut acc: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                *acc.entry(da + db).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        IntPoly { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    /// Prints with the variable `l`, e.g. `l^11 - 5*l^8 + 5*l^5 - 2*l^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms.iter().rev() {
            let neg = c.sign() == Sign::Minus;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "l".to_string(),
                _ => format!("l^{d}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Nonnegative exponent of arbitrary size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigExponent(pub BigUint);

impl BigExponent {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for BigExponent {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigExponent {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for BigExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for BigExponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for BigExponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<BigUint>()
            .map(BigExponent)
            .map_err(|e| serde::de::Error::custom(format!("bad exponent {s:?}: {e}")))
    }
}

/// Canonical order of factor bases: the bare variable first, then by
/// descending degree, then by descending dense coefficient sequence.
pub fn base_order(a: &IntPoly, b: &IntPoly) -> Ordering {
    let is_var = |p: &IntPoly| p.num_terms() == 1 && p.degree() == Some(1);
    match (is_var(a), is_var(b)) {
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    b.degree()
        .cmp(&a.degree())
        .then_with(|| b.descending_coeffs().cmp(&a.descending_coeffs()))
}

/// A product `content * prod base_i^exp_i` kept in canonical form.
///
/// Bases are primitive, non-constant, pairwise distinct, have positive leading
/// coefficients and appear in [`base_order`]; no exponent is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredPoly {
    content: BigInt,
    factors: Vec<(IntPoly, BigExponent)>,
}

impl Default for FactoredPoly {
    fn default() -> Self {
        Self::one()
    }
}

impl FactoredPoly {
    pub fn one() -> Self {
        Self {
            content: BigInt::one(),
            factors: Vec::new(),
        }
    }

    /// A single factor `base^exp`.
    pub fn power(base: IntPoly, exp: impl Into<BigExponent>) -> Result<Self, PolyError> {
        Self::from_factors(vec![(base, exp.into())])
    }

    /// Canonicalizes an arbitrary list of factors. Zero bases are rejected.
    pub fn from_factors(
        factors: impl IntoIterator<Item = (IntPoly, BigExponent)>,
    ) -> Result<Self, PolyError> {
        let mut content = BigInt::one();
        let mut merged: Vec<(IntPoly, BigExponent)> = Vec::new();
        for (base, exp) in factors {
            if exp.is_zero() {
                continue;
            }
            if base.is_zero() {
                return Err(PolyError::Malformed(
                    "zero base in a factored product".into(),
                ));
            }
            let prim = base.primitive_part();
            let unit = if base.leading_coeff().is_negative() {
                -base.content()
            } else {
                base.content()
            };
            if !unit.is_one() {
                content *= pow_big(&unit, &exp.0)?;
            }
            if prim.is_one() {
                continue;
            }
            match merged.iter_mut().find(|(b, _)| *b == prim) {
                Some((_, e)) => e.0 += &exp.0,
                None => merged.push((prim, exp)),
            }
        }
        merged.sort_by(|a, b| base_order(&a.0, &b.0));
        Ok(Self {
            content,
            factors: merged,
        })
    }

    pub fn content(&self) -> &BigInt {
        &self.content
    }

    pub fn factors(&self) -> &[(IntPoly, BigExponent)] {
        &self.factors
    }

    pub fn with_content(mut self, c: BigInt) -> Result<Self, PolyError> {
        if c.is_zero() {
            return Err(PolyError::Malformed("zero content".into()));
        }
        self.content *= c;
        Ok(self)
    }

    /// Exponent of `base` (after normalization) in this product.
    pub fn exponent_of(&self, base: &IntPoly) -> BigUint {
        let prim = base.primitive_part();
        self.factors
            .iter()
            .find(|(b, _)| *b == prim)
            .map(|(_, e)| e.0.clone())
            .unwrap_or_default()
    }

    pub fn degree(&self) -> BigUint {
        self.factors
            .iter()
            .map(|(b, e)| BigUint::from(b.degree().unwrap_or(0)) * &e.0)
            .sum()
    }

    /// Multiplicity of the root 0 across all factors.
    pub fn valuation(&self) -> BigUint {
        self.factors
            .iter()
            .map(|(b, e)| BigUint::from(b.valuation().unwrap_or(0)) * &e.0)
            .sum()
    }

    /// Every exponent multiplied by `k` (the product raised to the power `k`).
    pub fn pow(&self, k: &BigUint) -> Result<Self, PolyError> {
        if k.is_zero() {
            return Ok(Self::one());
        }
        Ok(Self {
            content: pow_big(&self.content, k)?,
            factors: self
                .factors
                .iter()
                .map(|(b, e)| (b.clone(), BigExponent(&e.0 * k)))
                .collect(),
        })
    }

    /// Canonical merged product.
    pub fn mul(&self, other: &FactoredPoly) -> FactoredPoly {
        let mut out = Self::from_factors(self.factors.iter().chain(other.factors.iter()).cloned())
            .expect("canonical factors are nonzero with unit content");
        out.content = &self.content * &other.content;
        out
    }

    /// Fully expanded product, refused when the degree exceeds `degree_guard`.
    pub fn expand(&self, degree_guard: &BigUint) -> Result<IntPoly, PolyError> {
        let degree = self.degree();
        if &degree > degree_guard {
            return Err(PolyError::DegreeGuard {
                degree,
                guard: degree_guard.clone(),
            });
        }
        let mut acc = IntPoly::constant(self.content.clone());
        for (b, e) in &self.factors {
            // The guard bounds deg(b) * e, so e fits comfortably.
            let e = e.0.to_u64().expect("exponent bounded by degree guard");
            acc = &acc * &b.pow(e);
        }
        Ok(acc)
    }

    /// `true` iff `self` divides `other` as polynomials over the integers.
    ///
    /// Both sides are rewritten over a pairwise coprime refinement of their
    /// bases and compared exponent by exponent.
    pub fn divides(&self, other: &FactoredPoly) -> bool {
        if !(&other.content % &self.content).is_zero() {
            return false;
        }
        let bases: Vec<IntPoly> = self
            .factors
            .iter()
            .chain(other.factors.iter())
            .map(|(b, _)| b.clone())
            .collect();
        let basis = coprime_basis(&bases);
        let lhs = exponent_vector(&self.factors, &basis);
        let rhs = exponent_vector(&other.factors, &basis);
        lhs.iter().zip(&rhs).all(|(a, b)| a <= b)
    }
}

fn pow_big(base: &BigInt, exp: &BigUint) -> Result<BigInt, PolyError> {
    if base.is_one() || exp.is_zero() {
        return Ok(BigInt::one());
    }
    if base == &BigInt::from(-1) {
        return Ok(if exp.is_even() {
            BigInt::one()
        } else {
            base.clone()
        });
    }
    match exp.to_u32() {
        Some(e) => Ok(Pow::pow(base, e)),
        None => Err(PolyError::ContentOverflow {
            content: base.clone(),
            exp: exp.clone(),
        }),
    }
}

/// Refines a list of primitive polynomials into a pairwise coprime set whose
/// products recover every input (a gcd-free basis).
pub fn coprime_basis(polys: &[IntPoly]) -> Vec<IntPoly> {
    let mut basis: Vec<IntPoly> = Vec::new();
    for p in polys {
        let p = p.primitive_part();
        if p.is_constant() {
            continue;
        }
        let mut pending = vec![p];
        while let Some(mut q) = pending.pop() {
            if q.is_constant() {
                continue;
            }
            let mut i = 0;
            let mut absorbed = false;
            while i < basis.len() {
                let g = basis[i].gcd(&q).expect("nonzero inputs");
                if g.is_constant() {
                    i += 1;
                    continue;
                }
                if g == basis[i] && g == q {
                    absorbed = true;
                    break;
                }
                let b = basis.swap_remove(i);
                let b_rest = b.div_exact(&g).expect("gcd divides").primitive_part();
                let q_rest = q.div_exact(&g).expect("gcd divides").primitive_part();
                pending.push(g);
                pending.push(b_rest);
                q = q_rest;
                if q.is_constant() {
                    absorbed = true;
                    break;
                }
                i = 0;
            }
            if !absorbed {
                basis.push(q);
            }
        }
    }
    basis.sort_by(base_order);
    basis
}

fn exponent_vector(factors: &[(IntPoly, BigExponent)], basis: &[IntPoly]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); basis.len()];
    for (base, exp) in factors {
        let mut rest = base.clone();
        for (slot, p) in out.iter_mut().zip(basis) {
            while let Some(q) = rest.div_exact(p) {
                *slot += &exp.0;
                rest = q;
            }
        }
        debug_assert!(rest.is_constant(), "basis must cover every factor");
    }
    out
}

impl fmt::Display for FactoredPoly {
    /// `l^2192 * (l^11 - 5*l^8 + 5*l^5 - 2*l^2)^243 * ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.content.is_one() || self.factors.is_empty() {
            parts.push(self.content.to_string());
        }
        for (b, e) in &self.factors {
            let body = if b.num_terms() == 1 && b.leading_coeff().is_one() {
                b.to_string()
            } else {
                format!("({b})")
            };
            if e.0.is_one() {
                parts.push(body);
            } else if b.num_terms() == 1 && b.degree() != Some(1) {
                parts.push(format!("({b})^{e}"));
            } else {
                parts.push(format!("{body}^{e}"));
            }
        }
        write!(f, "{}", parts.join(" * "))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<(u64, String)>,
}

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(d, c)| (*d, c.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (deg, c) in raw.terms {
            let c: BigInt = c
                .parse()
                .map_err(|e| serde::de::Error::custom(format!("bad coefficient {c:?}: {e}")))?;
            terms.push((deg, c));
        }
        Ok(IntPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    base: IntPoly,
    exp: BigExponent,
}

#[derive(Serialize, Deserialize)]
struct FactoredJson {
    factors: Vec<FactorJson>,
}

impl Serialize for FactoredPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut factors = Vec::with_capacity(self.factors.len() + 1);
        if !self.content.is_one() {
            factors.push(FactorJson {
                base: IntPoly::constant(self.content.clone()),
                exp: BigExponent::from(1),
            });
        }
        factors.extend(self.factors.iter().map(|(b, e)| FactorJson {
            base: b.clone(),
            exp: e.clone(),
        }));
        FactoredJson { factors }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FactoredJson::deserialize(d)?;
        FactoredPoly::from_factors(raw.factors.into_iter().map(|f| (f.base, f.exp)))
            .map_err(serde::de::Error::custom)
    }
}
