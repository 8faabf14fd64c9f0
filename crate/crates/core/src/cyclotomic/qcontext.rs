use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::field::Cyclotomic;
use crate::error::{invalid, Error, Result};

/// The ambient field Q(ζ_{4n}) with q = ζ^4, q^{1/2} = ζ^2, q^{1/4} = ζ.
#[derive(Clone, Debug)]
pub struct QContext {
    n: u32,
    m: u32,
    q: Cyclotomic,
    q_half: Cyclotomic,
    q_quarter: Cyclotomic,
    xi: Cyclotomic,
    inv_factorials: Vec<Cyclotomic>,
}

impl QContext {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("n must be at least 2, got {n}")));
        }
        let m = 4 * n;
        let q_quarter = Cyclotomic::zeta_pow(m, 1);
        let q_half = Cyclotomic::zeta_pow(m, 2);
        let q = Cyclotomic::zeta_pow(m, 4);
        let xi = -(&q_half + &Cyclotomic::zeta_pow(m, -2));
        let mut ctx = QContext {
            n,
            m,
            q,
            q_half,
            q_quarter,
            xi,
            inv_factorials: vec![],
        };
        ctx.inv_factorials = (0..n)
            .map(|s| ctx.quantum_factorial(s).inv().expect("[s]! is nonzero for s < n"))
            .collect();
        Ok(ctx)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    pub fn q_half(&self) -> &Cyclotomic {
        &self.q_half
    }

    pub fn q_quarter(&self) -> &Cyclotomic {
        &self.q_quarter
    }

    pub fn xi(&self) -> &Cyclotomic {
        &self.xi
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.m)
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.m)
    }

    pub fn integer(&self, v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(self.m, v)
    }

    pub fn rational(&self, num: i64, den: i64) -> Cyclotomic {
        Cyclotomic::from_rational(self.m, &BigRational::new(num.into(), den.into()))
    }

    pub fn zeta_pow(&self, e: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.m, e)
    }

    /// q^e for integer e.
    pub fn q_pow(&self, e: i64) -> Cyclotomic {
        self.zeta_pow(4 * e.rem_euclid(self.n as i64))
    }

    /// q^e for e with 4e an integer.
    pub fn q_power(&self, e: &BigRational) -> Result<Cyclotomic> {
        let four_e = e * BigRational::from_integer(BigInt::from(4));
        if !four_e.is_integer() {
            return Err(invalid(format!("exponent {e} is not a quarter-integer")));
        }
        let k = four_e
            .to_integer()
            .mod_floor_i64(self.m as i64);
        Ok(self.zeta_pow(k))
    }

    /// q^{num/den}; 4·num/den must be an integer.
    pub fn q_pow_frac(&self, num: i64, den: i64) -> Result<Cyclotomic> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.q_power(&BigRational::new(num.into(), den.into()))
    }

    /// [m] = 1 + q + … + q^{m−1}.
    pub fn quantum_int(&self, m: u32) -> Cyclotomic {
        (0..m as i64).fold(self.zero(), |acc, e| acc + self.q_pow(e))
    }

    /// [m]! = [1][2]…[m]; vanishes once m ≥ n.
    pub fn quantum_factorial(&self, m: u32) -> Cyclotomic {
        (1..=m).fold(self.one(), |acc, j| acc * self.quantum_int(j))
    }

    /// 1/[s]! for s < n.
    pub fn inv_quantum_factorial(&self, s: u32) -> Result<Cyclotomic> {
        self.inv_factorials.get(s as usize).cloned().ok_or_else(|| {
            Error::Degenerate(format!("[{s}]! vanishes at n = {}", self.n))
        })
    }

    /// Gaussian binomial [m]!/([i]![m−i]!).
    pub fn q_binomial(&self, m: u32, i: u32) -> Result<Cyclotomic> {
        if i > m {
            return Err(invalid(format!("binomial needs i <= m, got ({m}, {i})")));
        }
        let a = self.inv_quantum_factorial(i)?;
        let b = self.inv_quantum_factorial(m - i)?;
        Ok(self.quantum_factorial(m) * a * b)
    }
}

trait ModFloor {
    fn mod_floor_i64(&self, m: i64) -> i64;
}

impl ModFloor for BigInt {
    fn mod_floor_i64(&self, m: i64) -> i64 {
        let r = num_integer::Integer::mod_floor(self, &BigInt::from(m));
        r.to_i64().expect("residue fits")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_have_the_right_orders() {
        for n in 2..=9u32 {
            let ctx = QContext::new(n).unwrap();
            assert!(ctx.q().pow(n as i64).unwrap().is_one());
            for m in 1..n as i64 {
                assert!(!ctx.q().pow(m).unwrap().is_one(), "n={n} m={m}");
            }
            assert_eq!(&(ctx.q_half() * ctx.q_half()), ctx.q());
            assert_eq!(&(ctx.q_quarter() * ctx.q_quarter()), ctx.q_half());
            let half_order = (1..=4 * n as i64)
                .find(|&e| ctx.q_half().pow(e).unwrap().is_one())
                .unwrap();
            assert_eq!(half_order, 2 * n as i64);
            let xi = -(ctx.q_half() + &ctx.q_half().inv().unwrap());
            assert_eq!(&xi, ctx.xi());
        }
    }

    #[test]
    fn q_power_examples() {
        let ctx = QContext::new(5).unwrap();
        assert!(ctx.q_pow_frac(0, 1).unwrap().is_one());
        assert_eq!(ctx.q_pow_frac(1, 2).unwrap(), Cyclotomic::zeta_pow(20, 2));
        assert!(ctx.q_pow_frac(5, 1).unwrap().is_one());
        assert_eq!(ctx.q_pow_frac(-3, 4).unwrap(), Cyclotomic::zeta_pow(20, -3));
        assert!(matches!(ctx.q_pow_frac(1, 3), Err(Error::InvalidArgument(_))));
        assert!((ctx.q() * ctx.q_pow(4)).is_one());
    }

    #[test]
    fn quantum_integers() {
        let ctx = QContext::new(5).unwrap();
        assert_eq!(ctx.quantum_int(2), ctx.one() + ctx.q().clone());
        assert!(ctx.quantum_factorial(0).is_one());
        assert!(ctx.quantum_int(0).is_zero());
        assert_eq!(ctx.q_binomial(2, 1).unwrap(), ctx.one() + ctx.q().clone());
        for m in 0..=20 {
            assert_eq!(ctx.quantum_int(m).is_zero(), m % 5 == 0, "m={m}");
        }
    }

    #[test]
    fn degenerate_binomials() {
        let ctx = QContext::new(3).unwrap();
        assert!(matches!(ctx.q_binomial(4, 3), Err(Error::Degenerate(_))));
        assert!(matches!(ctx.q_binomial(5, 1), Err(Error::Degenerate(_))));
        assert!(matches!(ctx.q_binomial(1, 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn binomial_matches_product_formula() {
        for n in 2..=7u32 {
            let ctx = QContext::new(n).unwrap();
            for m in 0..=2 * n {
                for i in 0..=m {
                    let got = ctx.q_binomial(m, i);
                    if i >= n || m - i >= n {
                        assert!(got.is_err());
                        continue;
                    }
                    // Π_{j=1}^{i} (1 − q^{m−j+1}) / (1 − q^j)
                    let mut expect = ctx.one();
                    for j in 1..=i as i64 {
                        let top = ctx.one() - ctx.q_pow(m as i64 - j + 1);
                        let bot = ctx.one() - ctx.q_pow(j);
                        expect = expect * top * bot.inv().unwrap();
                    }
                    assert_eq!(got.unwrap(), expect, "n={n} m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn xi_vanishes_at_n_two() {
        assert!(QContext::new(2).unwrap().xi().is_zero());
    }

    #[test]
    fn rejects_small_n() {
        assert!(QContext::new(1).is_err());
    }
}
