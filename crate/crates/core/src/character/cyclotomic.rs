//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! A value is stored by its conductor m and rational coefficients on the
//! power basis `1, zeta, ..., zeta^(phi(m)-1)` after reduction modulo the
//! m-th cyclotomic polynomial, so representations are unique per conductor
//! and equality is coefficient equality (after lifting to a common
//! conductor). No floating point anywhere.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The m-th cyclotomic polynomial with integer coefficients (low to high),
/// by exact division of x^m - 1 by the cyclotomic polynomials of the proper
/// divisors. Results are cached.
fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    static CACHE: Mutex<BTreeMap<u64, Vec<BigInt>>> = Mutex::new(BTreeMap::new());
    if let Some(found) = CACHE.lock().unwrap().get(&m) {
        return found.clone();
    }
    let result = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        for d in 1..m {
            if m.is_multiple_of(d) {
                num = divide_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    CACHE.lock().unwrap().insert(m, result.clone());
    result
}

/// Exact division of integer polynomials (the divisor is monic).
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let idx = i - dd + j;
            rem[idx] = &rem[idx] - &c * dc;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An element of Q(zeta_m).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    /// length phi(conductor)
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Cyclotomic {
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Cyclotomic {
        Cyclotomic::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u64, r: Rational) -> Cyclotomic {
        let mut c = Cyclotomic::zero(conductor);
        if euler_phi(conductor) > 0 {
            c.coeffs[0] = r;
        }
        c
    }

    pub fn from_integer(conductor: u64, n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(conductor, Rational::from_integer(BigInt::from(n)))
    }

    /// zeta_m^k.
    pub fn root_of_unity(conductor: u64, k: u64) -> Cyclotomic {
        let k = (k % conductor) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Cyclotomic::reduce(conductor, poly)
    }

    fn reduce(conductor: u64, mut poly: Vec<Rational>) -> Cyclotomic {
        let phi = euler_phi(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        debug_assert_eq!(modulus.len(), phi + 1);
        // long division by the monic modulus
        let mut i = poly.len();
        while i > phi {
            i -= 1;
            let c = poly[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, mc) in modulus.iter().enumerate() {
                let idx = i + j - phi;
                let sub = &c * Rational::from_integer(mc.clone());
                poly[idx] -= sub;
            }
            debug_assert!(poly[i].is_zero());
        }
        poly.truncate(phi);
        poly.resize(phi, Rational::zero());
        Cyclotomic {
            conductor,
            coeffs: poly,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Rewrites the value in Q(zeta_target); the current conductor must
    /// divide the target.
    pub fn lift(&self, target: u64) -> Cyclotomic {
        if target == self.conductor {
            return self.clone();
        }
        debug_assert_eq!(target % self.conductor, 0);
        let scale = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); self.coeffs.len() * scale + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * scale] += c;
        }
        Cyclotomic::reduce(target, poly)
    }

    fn matched(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = num::integer::lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.matched(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.matched(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.matched(other);
        let mut poly = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                poly[i + j] += x * y;
            }
        }
        Cyclotomic::reduce(a.conductor, poly)
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Galois conjugation by zeta -> zeta^a, for a coprime to the conductor.
    pub fn galois(&self, a: u64) -> Cyclotomic {
        let m = self.conductor;
        let a = a % m;
        debug_assert_eq!(num::integer::gcd(a, m), 1);
        let mut poly = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i as u64 * a % m) as usize] += c;
            }
        }
        Cyclotomic::reduce(m, poly)
    }

    /// Complex conjugation: zeta -> zeta^-1.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn expect_rational(&self) -> Result<Rational> {
        self.as_rational()
            .ok_or_else(|| Error::Internal("expected a rational value".into()))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.matched(other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyclotomic {}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(m: u64, k: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
        assert_eq!(cyclotomic_polynomial(2), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(
            cyclotomic_polynomial(4),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(
            cyclotomic_polynomial(6),
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        // Phi_p = 1 + x + ... + x^(p-1)
        assert_eq!(cyclotomic_polynomial(5).len(), 5);
        assert!(cyclotomic_polynomial(5).iter().all(|c| c.is_one()));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for p in [2u64, 3, 5, 7] {
            let mut sum = Cyclotomic::zero(p);
            for k in 0..p {
                sum = sum.add(&zeta(p, k));
            }
            assert!(sum.is_zero(), "sum of {p}-th roots");
        }
    }

    #[test]
    fn ring_laws_on_samples() {
        let a = zeta(12, 1).add(&Cyclotomic::from_integer(12, 2));
        let b = zeta(12, 5).scale(&Rational::new(BigInt::from(1), BigInt::from(3)));
        let c = zeta(12, 7);
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn conjugation_and_norm() {
        let a = zeta(5, 1).add(&zeta(5, 4));
        assert_eq!(a.conj(), a); // invariant under zeta -> zeta^-1
        let z = zeta(7, 3);
        let norm = z.mul(&z.conj());
        assert_eq!(norm, Cyclotomic::one(7));
        // a * conj(a) of a random-ish value is rational here
        let v = zeta(3, 1).add(&Cyclotomic::from_integer(3, 1));
        let n = v.mul(&v.conj());
        assert!(n.is_rational());
        assert_eq!(n.as_rational().unwrap(), Rational::from_integer(BigInt::from(1)));
    }

    #[test]
    fn lifting_preserves_values() {
        let half_turn = zeta(2, 1); // -1
        let lifted = half_turn.lift(6);
        assert_eq!(lifted, zeta(6, 3));
        assert_eq!(zeta(3, 1).lift(6), zeta(6, 2));
        // mixed-conductor arithmetic
        let sum = zeta(2, 1).add(&zeta(3, 1));
        assert_eq!(sum, zeta(6, 3).add(&zeta(6, 2)));
    }

    #[test]
    fn order_of_roots() {
        let z = zeta(9, 1);
        let mut pow = Cyclotomic::one(9);
        for _ in 0..9 {
            pow = pow.mul(&z);
        }
        assert_eq!(pow, Cyclotomic::one(9));
    }
}
