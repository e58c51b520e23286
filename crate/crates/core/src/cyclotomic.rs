//! Exact arithmetic in `Z[ω_N]`, `ω_N = exp(2πi/N)`.
//!
//! Values are kept reduced modulo the cyclotomic polynomial `Φ_N`, so the
//! coefficient vector over `1, ω, …, ω^{φ(N)−1}` is canonical and equality is
//! plain vector equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials (low degree first); the divisor is monic.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    // Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

/// Coefficients of `Φ_n`, lowest degree first. Cached per `n`.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic_poly(n));
    cache.lock().unwrap().insert(n, p.clone());
    p
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicValue {
    conductor: u32,
    coefficients: Vec<i64>,
}

impl CyclotomicValue {
    /// Reduces an arbitrary polynomial in `ω_N` to canonical form.
    pub fn from_poly(conductor: u32, poly: &[i64]) -> Self {
        assert!(conductor >= 1);
        let phi = cyclotomic_poly(conductor);
        let deg = phi.len() - 1;
        // fold exponents modulo N first: ω^N = 1
        let n = conductor as usize;
        let mut c = vec![0i64; n.max(deg)];
        for (k, &a) in poly.iter().enumerate() {
            c[k % n] += a;
        }
        for k in (deg..c.len()).rev() {
            let lead = c[k];
            if lead != 0 {
                for (i, &p) in phi.iter().enumerate() {
                    c[k - deg + i] -= lead * p;
                }
            }
        }
        c.truncate(deg);
        CyclotomicValue {
            conductor,
            coefficients: c,
        }
    }

    pub fn from_integer(conductor: u32, value: i64) -> Self {
        Self::from_poly(conductor, &[value])
    }

    pub fn zero(conductor: u32) -> Self {
        Self::from_integer(conductor, 0)
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(conductor, 1)
    }

    /// `ω_N^k` for any integer `k`.
    pub fn root_power(conductor: u32, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        Self::from_poly(conductor, &poly)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// `Some(n)` iff the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        let (first, rest) = self.coefficients.split_first()?;
        rest.iter().all(|&c| c == 0).then_some(*first)
    }

    /// Complex conjugate: `ω^k ↦ ω^{−k}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut poly = vec![0i64; n];
        for (k, &a) in self.coefficients.iter().enumerate() {
            poly[(n - k) % n] += a;
        }
        Self::from_poly(self.conductor, &poly)
    }

    /// Re-expresses the value over a multiple of its conductor.
    pub fn lift(&self, conductor: u32) -> Self {
        assert_eq!(conductor % self.conductor, 0, "conductor must be a multiple");
        let step = (conductor / self.conductor) as usize;
        let mut poly = vec![0i64; self.coefficients.len() * step + 1];
        for (k, &a) in self.coefficients.iter().enumerate() {
            poly[k * step] += a;
        }
        Self::from_poly(conductor, &poly)
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicValue {
            conductor: self.conductor,
            coefficients: self.coefficients.iter().map(|&c| c * k).collect(),
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.conductor, other.conductor, "mixed conductors");
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coefficients.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &a)| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + a as f64 * t.cos(), im + a as f64 * t.sin())
        })
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self.check_same(rhs);
        CyclotomicValue {
            conductor: self.conductor,
            coefficients: self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        self.scale(-1)
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn mul(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self.check_same(rhs);
        let mut poly = vec![0i64; self.coefficients.len() + rhs.coefficients.len()];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        CyclotomicValue::from_poly(self.conductor, &poly)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 && k > 0 { String::new() } else { mag.to_string() };
            let term = match k {
                0 => String::new(),
                1 => format!("w{}", self.conductor),
                _ => format!("w{}^{k}", self.conductor),
            };
            write!(f, "{sign}{coef}{term}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(13).len(), 13);
        assert_eq!(cyclotomic_poly(52).len(), 25);
    }

    #[test]
    fn roots_of_unity() {
        let n = 22;
        let w = CyclotomicValue::root_power(n, 1);
        let mut acc = CyclotomicValue::one(n);
        for _ in 0..n {
            acc = &acc * &w;
        }
        assert_eq!(acc, CyclotomicValue::one(n));
        assert_eq!(CyclotomicValue::root_power(n, 11).as_integer(), Some(-1));
        // the sum of all N-th roots vanishes
        let total = (0..n as i64).fold(CyclotomicValue::zero(n), |s, k| &s + &CyclotomicValue::root_power(n, k));
        assert!(total.is_zero());
        // sum of primitive 13th roots is −1
        let s = (1..13).fold(CyclotomicValue::zero(13), |s, k| &s + &CyclotomicValue::root_power(13, k));
        assert_eq!(s.as_integer(), Some(-1));
    }

    #[test]
    fn conjugation_and_norm() {
        let n = 20;
        for k in 0..n as i64 {
            let w = CyclotomicValue::root_power(n, k);
            assert_eq!(w.conj(), CyclotomicValue::root_power(n, -k));
            assert_eq!((&w * &w.conj()).as_integer(), Some(1));
        }
        let x = &CyclotomicValue::root_power(n, 3) + &CyclotomicValue::root_power(n, -3);
        assert_eq!(x.conj(), x);
    }

    #[test]
    fn lift_preserves_value() {
        let w = &CyclotomicValue::root_power(4, 1) + &CyclotomicValue::from_integer(4, 2);
        let lifted = w.lift(52);
        let expected = &CyclotomicValue::root_power(52, 13) + &CyclotomicValue::from_integer(52, 2);
        assert_eq!(lifted, expected);
        let (re, im) = lifted.to_complex();
        assert!((re - 2.0).abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
