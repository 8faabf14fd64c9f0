//! Prime fields F_p with p ≡ 1 (mod M), used to certify ranks of large cyclotomic matrices.
//!
//! Sending ζ_M to a primitive M-th root ω ∈ F_p is a ring map on the elements whose
//! denominators are prime to p, so ranks can only drop under reduction. A reduced
//! matrix of full row rank therefore certifies full row rank over Q(ζ_M).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::scalar::Scalar;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for w in WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut f = 2;
    while f * f <= m {
        if m.is_multiple_of(f) {
            out.push(f);
            while m.is_multiple_of(f) {
                m /= f;
            }
        }
        f += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn from_bigint(x: &BigInt, p: u64) -> Self {
        let r = x % BigInt::from(p);
        let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
        Fp::new(r.to_u64().expect("residue fits in u64"), p)
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mul_mod(self.v, o.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Fp { v: pow_mod(self.v, self.p - 2, self.p), p: self.p })
    }
}

/// A ring map Z[ζ_M][1/D] → F_p given by ζ_M ↦ ω.
#[derive(Clone, Debug)]
pub struct Reduction {
    m: u32,
    p: u64,
    omega_pows: Vec<Fp>,
}

impl Reduction {
    /// Uses the smallest prime p ≡ 1 (mod M) above `floor`.
    pub fn new(m: u32, floor: u64) -> Self {
        let step = m as u64;
        let mut p = floor - floor % step + 1;
        while p <= floor || !is_prime(p) {
            p += step;
        }
        let factors = prime_factors(step);
        let omega = (2..p)
            .map(|x| pow_mod(x, (p - 1) / step, p))
            .find(|&w| factors.iter().all(|f| pow_mod(w, step / f, p) != 1))
            .expect("F_p* is cyclic");
        let omega_pows = (0..m).map(|e| Fp::new(pow_mod(omega, e as u64, p), p)).collect();
        Reduction { m, p, omega_pows }
    }

    /// A 62-bit prime ≡ 1 (mod M).
    pub fn standard(m: u32) -> Self {
        Self::new(m, 1 << 61)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Image of x, or `None` when p divides the denominator of x.
    pub fn reduce(&self, x: &Cyclotomic) -> Option<Fp> {
        debug_assert_eq!(x.conductor(), self.m);
        let mut acc = Fp::new(0, self.p);
        for (t, c) in x.numerators().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Fp::from_bigint(c, self.p).mul(&self.omega_pows[t]));
            }
        }
        let den = Fp::from_bigint(x.denominator(), self.p).inv().ok()?;
        Some(acc.mul(&den))
    }
}
