//! Exact elements of the cyclotomic fields `Q(z_n)`.
//!
//! A scalar is stored in the power basis `1, z, .., z^(phi(n)-1)` reduced
//! modulo the n-th cyclotomic polynomial. Conductors congruent to 2 mod 4 are
//! folded onto `n / 2` (the fields coincide), and any element whose non-constant
//! coefficients vanish is stored with conductor 1, so the rational case never
//! pays for cyclotomic bookkeeping.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarParseError;

#[derive(Clone, Debug)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

/// Euler's totient.
pub fn phi(n: u32) -> usize {
    let mut n = n;
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
    result as usize
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_int_division(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn exact_int_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduce a polynomial in z modulo Phi_n, returning exactly phi(n) coefficients.
fn reduce_mod_cyclotomic(mut poly: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let modulus = cyclotomic_polynomial(n);
    let d = modulus.len() - 1;
    for i in (d..poly.len()).rev() {
        if poly[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[i], BigRational::zero());
        for (j, mj) in modulus.iter().enumerate().take(d) {
            if !mj.is_zero() {
                poly[i - d + j] -= &c * BigRational::from_integer(mj.clone());
            }
        }
    }
    poly.resize(d, BigRational::zero());
    poly
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `p / q`; panics when `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// Build `sum_k coeffs[k] z_n^k` for arbitrary powers, reducing canonically.
    pub fn from_power_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        if conductor % 4 == 2 {
            // z_{2m} = -z_m^((m+1)/2) for odd m
            let m = conductor / 2;
            let step = m.div_ceil(2) as usize;
            let mut poly = vec![BigRational::zero(); coeffs.len() * step.max(1) + 1];
            for (k, c) in coeffs.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if k % 2 == 0 {
                    poly[k * step] += c;
                } else {
                    poly[k * step] -= c;
                }
            }
            return Self::from_power_coeffs(m, poly);
        }
        if conductor == 1 {
            let sum = coeffs.into_iter().fold(BigRational::zero(), |acc, c| acc + c);
            return Self::from_rational(sum);
        }
        // fold powers mod n first so the polynomial stays short
        let n = conductor as usize;
        let mut folded = vec![BigRational::zero(); n.min(coeffs.len().max(1))];
        for (k, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                folded[k % n] += c;
            }
        }
        Self::normalized(conductor, reduce_mod_cyclotomic(folded, conductor))
    }

    /// The root of unity `z_n^k`.
    pub fn root_of_unity(conductor: u32, k: u32) -> Self {
        let n = conductor.max(1);
        let k = (k % n) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::from_power_coeffs(n, coeffs)
    }

    fn normalized(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        if conductor == 1 || coeffs.iter().skip(1).all(Zero::is_zero) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            return Self::from_rational(c0);
        }
        Scalar { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients in this scalar's own conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// Coefficients of `self` in the power basis of `Q(z_m)`. `m` must be a
    /// multiple of the conductor (after folding).
    pub fn coeffs_in(&self, m: u32) -> Vec<BigRational> {
        let target = canonical_conductor(m);
        if target == self.conductor {
            return self.coeffs.clone();
        }
        assert!(
            target.is_multiple_of(self.conductor),
            "conductor {} does not embed into {}",
            self.conductor,
            m
        );
        let step = (target / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        if target == 1 {
            return poly;
        }
        reduce_mod_cyclotomic(poly, target)
    }

    fn lift_pair(a: &Scalar, b: &Scalar) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let n = lcm_conductor(a.conductor, b.conductor);
        (n, a.coeffs_in(n), b.coeffs_in(n))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let n = self.conductor;
        let modulus: Vec<BigRational> = cyclotomic_polynomial(n)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // extended Euclid: s * a == gcd (mod Phi_n)
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial is irreducible");
        let g = r0[0].clone();
        let inv: Vec<BigRational> = s0.into_iter().map(|c| c / &g).collect();
        Some(Self::from_power_coeffs(n, inv))
    }

    /// Complex conjugation `z -> z^-1`.
    pub fn conj(&self) -> Scalar {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n] += c;
        }
        Self::from_power_coeffs(self.conductor, poly)
    }

    /// Render in the power basis of `z_m`, so that `parse(format_in(m), m)`
    /// returns `self`. `m` must be a multiple of the own conductor.
    pub fn format_in(&self, m: u32) -> String {
        let coeffs = if m % 4 == 2 && m > 2 {
            // z_{m/2} = z_m^2
            let half = self.coeffs_in(m / 2);
            let mut poly = vec![BigRational::zero(); 2 * half.len()];
            for (k, c) in half.into_iter().enumerate() {
                poly[2 * k] = c;
            }
            reduce_mod_cyclotomic(poly, m)
        } else {
            self.coeffs_in(m)
        };
        let mut out = String::new();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = if k == 0 {
                format_rational(&magnitude)
            } else if magnitude.is_one() {
                format!("z^{k}")
            } else {
                format!("{}*z^{k}", format_rational(&magnitude))
            };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parse `"p/q"` or `"p/q*z^k + ..."`, with `z` a primitive root of unity of
    /// order `conductor`.
    pub fn parse(text: &str, conductor: u32) -> Result<Scalar, ScalarParseError> {
        let err = |msg: &str| ScalarParseError {
            input: text.to_string(),
            message: msg.to_string(),
        };
        if conductor == 0 {
            return Err(err("conductor must be positive"));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty scalar"));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        while i <= bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                terms.push((negative, &compact[start..i]));
                if i < bytes.len() {
                    negative = bytes[i] == b'-';
                }
                start = i + 1;
            }
            i += 1;
        }
        let mut poly: Vec<BigRational> = Vec::new();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff, power) = parse_term(term).map_err(|m| err(&m))?;
            if power > 0 && conductor == 1 {
                return Err(err("z used with conductor 1"));
            }
            if poly.len() <= power {
                poly.resize(power + 1, BigRational::zero());
            }
            if neg {
                poly[power] -= coeff;
            } else {
                poly[power] += coeff;
            }
        }
        Ok(Self::from_power_coeffs(conductor, poly))
    }
}

fn parse_term(term: &str) -> Result<(BigRational, usize), String> {
    let (coeff_part, power_part) = match term.find('z') {
        Some(pos) => {
            let coeff = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            if !term[..pos].is_empty() && !term[..pos].ends_with('*') {
                return Err(format!("expected '*' before z in {term:?}"));
            }
            (coeff, Some(&term[pos + 1..]))
        }
        None => (term, None),
    };
    let coeff = if coeff_part.is_empty() {
        if power_part.is_none() {
            return Err("missing coefficient".into());
        }
        BigRational::one()
    } else {
        parse_rational(coeff_part)?
    };
    let power = match power_part {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let digits = p
                .strip_prefix('^')
                .ok_or_else(|| format!("expected '^' after z in {term:?}"))?;
            digits
                .parse::<usize>()
                .map_err(|_| format!("bad exponent in {term:?}"))?
        }
    };
    Ok((coeff, power))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Conductor after folding `n = 2 mod 4` onto `n / 2`.
pub fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

pub fn lcm_conductor(a: u32, b: u32) -> u32 {
    canonical_conductor(a.lcm(&b))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // canonical forms only differ when one field embeds in a larger one
        let (_, a, b) = Scalar::lift_pair(self, other);
        a == b
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in(self.conductor))
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Parses rationals only; use [`Scalar::parse`] for cyclotomic input.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s, 1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.conductor == 1 && rhs.conductor == 1 {
            return Scalar::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        let (n, mut a, b) = Scalar::lift_pair(self, rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Scalar::normalized(n, a)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if self.conductor == 1 && rhs.conductor == 1 {
            return Scalar::from_rational(&self.coeffs[0] - &rhs.coeffs[0]);
        }
        let (n, mut a, b) = Scalar::lift_pair(self, rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x -= y;
        }
        Scalar::normalized(n, a)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self.as_rational(), rhs.as_rational()) {
            (Some(a), Some(b)) => Scalar::from_rational(a * b),
            (Some(a), None) => scale(rhs, a),
            (None, Some(b)) => scale(self, b),
            (None, None) => {
                let (n, a, b) = Scalar::lift_pair(self, rhs);
                Scalar::normalized(n, reduce_mod_cyclotomic(poly_mul(&a, &b), n))
            }
        }
    }
}

fn scale(x: &Scalar, r: &BigRational) -> Scalar {
    if r.is_zero() {
        return Scalar::zero();
    }
    Scalar {
        conductor: x.conductor,
        coeffs: x.coeffs.iter().map(|c| c * r).collect(),
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.conductor == 1 && rhs.conductor == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.conductor == 1 && rhs.conductor == 1 {
            self.coeffs[0] -= &rhs.coeffs[0];
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: u32) -> Scalar {
        Scalar::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> { cyclotomic_polynomial(n).iter().map(|c| c.try_into().unwrap()).collect() };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(7), 6);
    }

    #[test]
    fn conductor_two_is_rational() {
        assert_eq!(z(2, 1), Scalar::from_int(-1));
        assert_eq!(z(2, 1).conductor(), 1);
        assert_eq!(z(6, 1), z(3, 2) * Scalar::from_int(-1));
    }

    #[test]
    fn roots_of_unity_relations() {
        let w = z(3, 1);
        assert_eq!(&(&w * &w) * &w, Scalar::one());
        assert_eq!(&(&Scalar::one() + &w) + &(&w * &w), Scalar::zero());
        assert_eq!(w.conj(), z(3, 2));
        let i = z(4, 1);
        assert_eq!(&i * &i, Scalar::from_int(-1));
        // mixed conductors meet in Q(z_12)
        let prod = &w * &i;
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, z(12, 7));
    }

    #[test]
    fn inverse_round_trip() {
        let a = &Scalar::from_int(2) + &z(5, 1);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn rationals_collapse_to_conductor_one() {
        let w = z(3, 1);
        let s = &w + &w.conj();
        assert_eq!(s, Scalar::from_int(-1));
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(Scalar::parse("3/6", 1).unwrap(), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(-7, 3).to_string(), "-7/3");
        let w = Scalar::parse("-1 - z^1", 3).unwrap();
        assert_eq!(w, z(3, 2));
        assert_eq!(w.to_string(), "-1 - z^1");
        assert_eq!(Scalar::parse("1/2*z^3", 4).unwrap(), &Scalar::ratio(-1, 2) * &z(4, 1));
        assert_eq!(Scalar::parse("z", 3).unwrap(), z(3, 1));
        // z_3 = z_6^2 = z_6 - 1
        assert_eq!(z(3, 1).format_in(6), "-1 + z^1");
        assert_eq!(Scalar::parse(&z(3, 1).format_in(6), 6).unwrap(), z(3, 1));
        assert_eq!(Scalar::parse(&z(5, 2).format_in(10), 10).unwrap(), z(5, 2));
        assert!(Scalar::parse("1/0", 1).is_err());
        assert!(Scalar::parse("z", 1).is_err());
        assert!(Scalar::parse("1 +", 3).is_err());
        assert!(Scalar::parse("2z", 3).is_err());
        assert!(Scalar::parse("", 1).is_err());
    }
}
