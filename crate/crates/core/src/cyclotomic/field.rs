use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{cyclotomic_polynomial, IntPoly};
use crate::error::{Error, Result};

/// Reduction data for Q(ζ_M): the modulus Φ_M and ζ^e in the power basis for small e.
pub struct CyclotomicField {
    m: u32,
    phi: usize,
    modulus: IntPoly,
    powers: Vec<Vec<(usize, i64)>>,
}

impl CyclotomicField {
    /// Shared field for conductor `m`; built once per process.
    pub fn get(m: u32) -> &'static CyclotomicField {
        static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
        let mut map = FIELDS
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        map.entry(m)
            .or_insert_with(|| Box::leak(Box::new(CyclotomicField::build(m))))
    }

    fn build(m: u32) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(m);
        let phi = modulus.len() - 1;
        let len = (m as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(len);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..len {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i, *c))
                    .collect(),
            );
            // multiply by x and fold the degree-phi term back in
            let top = cur[phi - 1];
            for t in (1..phi).rev() {
                cur[t] = cur[t - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for t in 0..phi {
                    cur[t] -= top * modulus[t];
                }
            }
        }
        CyclotomicField {
            m,
            phi,
            modulus,
            powers,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Power-basis coordinates of ζ^e, 0 ≤ e < max(M, 2φ).
    pub(crate) fn power_row(&self, e: usize) -> &[(usize, i64)] {
        &self.powers[e]
    }
}

/// An element of Q(ζ_M) stored as an integer vector over a positive common denominator.
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CyclotomicField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        let field = CyclotomicField::get(m);
        Cyclotomic {
            field,
            num: vec![BigInt::zero(); field.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(m: u32) -> Self {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: u32, v: i64) -> Self {
        let mut out = Self::zero(m);
        out.num[0] = BigInt::from(v);
        out.normalize();
        out
    }

    pub fn from_rational(m: u32, v: &BigRational) -> Self {
        let mut out = Self::zero(m);
        out.num[0] = v.numer().clone();
        out.den = v.denom().clone();
        out.normalize();
        out
    }

    /// ζ_M^e for any integer e.
    pub fn zeta_pow(m: u32, e: i64) -> Self {
        let mut out = Self::zero(m);
        let idx = e.rem_euclid(m as i64) as usize;
        for &(t, c) in out.field.power_row(idx) {
            out.num[t] = BigInt::from(c);
        }
        out
    }

    /// Builds an element from power-basis coordinates; `coeffs.len()` must equal φ(M).
    pub fn from_coeffs(m: u32, coeffs: &[BigRational]) -> Result<Self> {
        let field = CyclotomicField::get(m);
        if coeffs.len() != field.phi {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for conductor {m}, got {}",
                field.phi,
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut out = Cyclotomic { field, num, den };
        out.normalize();
        Ok(out)
    }

    pub fn conductor(&self) -> u32 {
        self.field.m
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    /// Power-basis coordinates in lowest terms.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Integer numerators over the common denominator.
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    /// Positive common denominator, coprime to the numerators as a whole.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> Self {
        Self::zero(self.field.m)
    }

    pub fn one_like(&self) -> Self {
        Self::one(self.field.m)
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.field.m, other.field.m))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let combine = |x: &BigInt, y: &BigInt| if negate { x - y } else { x + y };
        let mut out = if self.den == other.den {
            Cyclotomic {
                field: self.field,
                num: self.num.iter().zip(&other.num).map(|(x, y)| combine(x, y)).collect(),
                den: self.den.clone(),
            }
        } else {
            Cyclotomic {
                field: self.field,
                num: self
                    .num
                    .iter()
                    .zip(&other.num)
                    .map(|(x, y)| combine(&(x * &other.den), &(y * &self.den)))
                    .collect(),
                den: &self.den * &other.den,
            }
        };
        out.normalize();
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let phi = self.field.phi;
        let mut raw = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let mut num: Vec<BigInt> = raw.drain(..phi).collect();
        for (off, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, r) in self.field.power_row(phi + off) {
                num[t] += &c * r;
            }
        }
        let mut out = Cyclotomic {
            field: self.field,
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    /// self · ζ^e, computed by rotating through the power table.
    pub fn mul_zeta_pow(&self, e: i64) -> Self {
        let m = self.field.m as i64;
        let mut num = vec![BigInt::zero(); self.field.phi];
        for (t, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (t as i64 + e).rem_euclid(m) as usize;
            for &(s, r) in self.field.power_row(idx) {
                num[s] += c * r;
            }
        }
        let mut out = Cyclotomic {
            field: self.field,
            num,
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, v: &BigRational) -> Self {
        let mut out = Cyclotomic {
            field: self.field,
            num: self.num.iter().map(|c| c * v.numer()).collect(),
            den: &self.den * v.denom(),
        };
        out.normalize();
        out
    }

    pub fn scale_int(&self, v: i64) -> Self {
        let mut out = Cyclotomic {
            field: self.field,
            num: self.num.iter().map(|c| c * v).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_M.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let to_q = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
        };
        let mut r0 = trim(to_q(
            &self.field.modulus.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
        ));
        let mut r1 = trim(to_q(&self.num));
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_M is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let g = &r0[0];
        // s0·num ≡ g (mod Φ), so self⁻¹ = den·s0/g
        let scale = BigRational::from_integer(self.den.clone()) / g;
        let mut coeffs = vec![BigRational::zero(); self.field.phi];
        for (i, c) in s0.into_iter().enumerate() {
            coeffs[i] = c * &scale;
        }
        Self::from_coeffs(self.field.m, &coeffs)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b.last().expect("nonzero divisor");
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for top in (b.len() - 1..rem.len()).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let c = &rem[top] / lead;
        let shift = top + 1 - b.len();
        for (t, bc) in b.iter().enumerate() {
            rem[shift + t] -= &c * bc;
        }
        quot[shift] = c;
    }
    (trim(quot), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.m.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                if let Err(e) = self.same_field(rhs) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, false));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, true));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_unchecked(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}*z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[{}]", self.field.m, self)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => JsonInt::Small(s),
            None => JsonInt::Big(v.to_string()),
        }
    }
}

impl JsonInt {
    fn to_bigint(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    conductor: u32,
    coeffs: Vec<(JsonInt, JsonInt)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson {
            conductor: self.field.m,
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| (c.numer().into(), c.denom().into()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CyclotomicJson::deserialize(d)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for (n, m) in &raw.coeffs {
            let den = m.to_bigint().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n.to_bigint().map_err(D::Error::custom)?, den));
        }
        Cyclotomic::from_coeffs(raw.conductor, &coeffs).map_err(D::Error::custom)
    }
}
