//! Integer cyclotomic polynomials Φ_M.

/// Coefficients of an integer polynomial, lowest degree first.
pub type IntPoly = Vec<i64>;

pub fn divisors(m: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count()
}

/// Exact quotient of `num` by a monic `den`. Panics if the division leaves a remainder.
fn exact_div_monic(num: &[i64], den: &[i64]) -> IntPoly {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for top in (dd..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        quot[top - dd] = c;
        for (t, &dc) in den.iter().enumerate() {
            rem[top - dd + t] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    quot
}

/// Φ_M, obtained from x^M − 1 by dividing out Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: u32) -> IntPoly {
    assert!(m >= 1, "conductor must be positive");
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in divisors(m) {
        if d < m {
            p = exact_div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn twelve_by_hand() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12; multiply the known factors back together.
        let mul = |a: &[i64], b: &[i64]| {
            let mut out = vec![0i64; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        let factors: [&[i64]; 6] = [
            &[-1, 1],
            &[1, 1],
            &[1, 1, 1],
            &[1, 0, 1],
            &[1, -1, 1],
            &[1, 0, -1, 0, 1],
        ];
        let prod = factors.iter().fold(vec![1i64], |acc, f| mul(&acc, f));
        let mut expected = vec![0i64; 13];
        expected[0] = -1;
        expected[12] = 1;
        assert_eq!(prod, expected);
        assert_eq!(cyclotomic_polynomial(12), factors[5].to_vec());
    }

    #[test]
    fn degree_is_totient() {
        for m in 1..=60 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m), "M={m}");
        }
    }

    #[test]
    fn prime_cyclotomic_is_all_ones() {
        for p in [3u32, 5, 7, 11, 13] {
            assert_eq!(cyclotomic_polynomial(p), vec![1; p as usize]);
        }
    }
}
