//! Exact scalars.
//!
//! [`ExactScalar`] holds values of the form `ω^m · 2^(-k/2)` with
//! `ω = e^(iπ/4)`, which covers every stabilizer inner product and global
//! phase. [`Cyclo`] is the full field `Q(ω)` and is used for amplitudes of
//! superpositions, Gram matrices and dense vectors.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    zero: bool,
    omega_exp: u8,
    half_exp: u32,
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar { zero: true, omega_exp: 0, half_exp: 0 };
    pub const ONE: ExactScalar = ExactScalar { zero: false, omega_exp: 0, half_exp: 0 };

    /// `ω^m · 2^(-k/2)`.
    pub fn new(omega_exp: u32, half_exp: u32) -> Self {
        ExactScalar { zero: false, omega_exp: (omega_exp % 8) as u8, half_exp }
    }

    pub fn omega(m: u32) -> Self {
        ExactScalar::new(m, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn omega_exp(&self) -> u8 {
        self.omega_exp
    }

    pub fn half_exp(&self) -> u32 {
        self.half_exp
    }

    pub fn conj(&self) -> Self {
        if self.zero {
            return *self;
        }
        ExactScalar::new(8 - self.omega_exp as u32, self.half_exp)
    }

    /// `|z|^2 = 2^-k` as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        if self.zero {
            return BigRational::zero();
        }
        BigRational::new(BigInt::one(), BigInt::one() << self.half_exp)
    }

    pub fn to_cyclo(&self) -> Cyclo {
        if self.zero {
            return Cyclo::zero();
        }
        Cyclo::omega_pow(self.omega_exp as i64) * Cyclo::inv_sqrt2_pow(self.half_exp)
    }

    pub fn to_f64_parts(&self) -> (f64, f64) {
        if self.zero {
            return (0.0, 0.0);
        }
        let r = 2f64.powf(-(self.half_exp as f64) / 2.0);
        let t = std::f64::consts::FRAC_PI_4 * self.omega_exp as f64;
        (r * t.cos(), r * t.sin())
    }

    pub fn abs(&self) -> f64 {
        if self.zero { 0.0 } else { 2f64.powf(-(self.half_exp as f64) / 2.0) }
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        if self.zero || o.zero {
            return ExactScalar::ZERO;
        }
        ExactScalar::new(self.omega_exp as u32 + o.omega_exp as u32, self.half_exp + o.half_exp)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.zero, self.omega_exp, self.half_exp) {
            (true, ..) => f.write_str("0"),
            (_, 0, 0) => f.write_str("1"),
            (_, m, 0) => write!(f, "w^{m}"),
            (_, 0, k) => write!(f, "2^(-{k}/2)"),
            (_, m, k) => write!(f, "w^{m} * 2^(-{k}/2)"),
        }
    }
}

/// Element `a0 + a1 ω + a2 ω² + a3 ω³` of `Q(ω)`, with `ω⁴ = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclo([BigRational; 4]);

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo([rat(0), rat(0), rat(0), rat(0)])
    }

    pub fn one() -> Self {
        Cyclo::from_rational(rat(1))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo([r, rat(0), rat(0), rat(0)])
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo::from_rational(rat(n))
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.0
    }

    pub fn omega_pow(m: i64) -> Self {
        let m = m.rem_euclid(8) as usize;
        let mut c = Cyclo::zero();
        c.0[m % 4] = if m < 4 { rat(1) } else { rat(-1) };
        c
    }

    /// `i^m`.
    pub fn i_pow(m: u8) -> Self {
        Cyclo::omega_pow(2 * m as i64)
    }

    pub fn sqrt2() -> Self {
        Cyclo([rat(0), rat(1), rat(0), rat(-1)])
    }

    pub fn inv_sqrt2() -> Self {
        let h = BigRational::new(BigInt::from(1), BigInt::from(2));
        Cyclo([rat(0), h.clone(), rat(0), -h])
    }

    /// `2^(-k/2)`.
    pub fn inv_sqrt2_pow(k: u32) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::one() << (k / 2));
        let c = Cyclo::from_rational(half);
        if k % 2 == 1 { c * Cyclo::inv_sqrt2() } else { c }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Self {
        let [a0, a1, a2, a3] = &self.0;
        Cyclo([a0.clone(), -a3.clone(), -a2.clone(), -a1.clone()])
    }

    /// Field automorphism `ω -> ω^k` for odd `k`.
    fn galois(&self, k: usize) -> Self {
        let mut out = Cyclo::zero();
        for (j, c) in self.0.iter().enumerate() {
            let e = (j * k) % 8;
            if e < 4 {
                out.0[e] += c;
            } else {
                out.0[e - 4] -= c;
            }
        }
        out
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = self.galois(3) * self.galois(5) * self.galois(7);
        let norm = (self.clone() * others.clone()).0[0].clone();
        Some(others.scale(&norm.recip()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo(self.0.clone().map(|c| c * r))
    }

    /// `|z|²` written as `p + q√2`.
    pub fn norm_sqr(&self) -> (BigRational, BigRational) {
        let z = self.clone() * self.conj();
        debug_assert!(z.0[2].is_zero() && z.0[3] == -z.0[1].clone());
        (z.0[0].clone(), z.0[1].clone())
    }

    /// Write the value as `ω^m 2^(-k/2)` if it has that form.
    pub fn to_exact_scalar(&self) -> Option<ExactScalar> {
        if self.is_zero() {
            return Some(ExactScalar::ZERO);
        }
        let (p, q) = self.norm_sqr();
        if !q.is_zero() || !p.numer().is_one() {
            return None;
        }
        let d = p.denom();
        let k = d.bits() - 1;
        if *d != BigInt::one() << k {
            return None;
        }
        let k = k as u32;
        let unit = self.clone() * Cyclo::sqrt2_pow(k);
        (0..8).find(|&m| unit == Cyclo::omega_pow(m)).map(|m| ExactScalar::new(m as u32, k))
    }

    fn sqrt2_pow(k: u32) -> Self {
        let c = Cyclo::from_rational(BigRational::from_integer(BigInt::one() << (k / 2)));
        if k % 2 == 1 { c * Cyclo::sqrt2() } else { c }
    }

    pub fn to_f64_parts(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let a: Vec<f64> = self.0.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        (a[0] + s * (a[1] - a[3]), a[2] + s * (a[1] + a[3]))
    }
}

/// Compare `p1 + q1√2` with `p2 + q2√2`.
pub fn cmp_sqrt2(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> Ordering {
    let p = &a.0 - &b.0;
    let q = &a.1 - &b.1;
    // sign of p + q√2
    let sp = p.signum();
    let sq = q.signum();
    if sq.is_zero() || sp == sq {
        return if sp.is_zero() { sgn(&sq) } else { sgn(&sp) };
    }
    if sp.is_zero() {
        return sgn(&sq);
    }
    let p2 = &p * &p;
    let q2 = &q * &q * rat(2);
    match p2.cmp(&q2) {
        Ordering::Greater => sgn(&sp),
        Ordering::Less => sgn(&sq),
        Ordering::Equal => Ordering::Equal,
    }
}

fn sgn(r: &BigRational) -> Ordering {
    r.cmp(&BigRational::zero())
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, o: Cyclo) -> Cyclo {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = o.0;
        Cyclo([a0 + b0, a1 + b1, a2 + b2, a3 + b3])
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: Cyclo) -> Cyclo {
        self + (-o)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo(self.0.map(|c| -c))
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: Cyclo) -> Cyclo {
        &self * &o
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        let mut out = Cyclo::zero();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = i + j;
                if e < 4 {
                    out.0[e] += a * b;
                } else {
                    out.0[e - 4] -= a * b;
                }
            }
        }
        out
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = ["", "w", "w^2", "w^3"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            if name.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(name)?;
            } else {
                write!(f, "{a}*{name}")?;
            }
        }
        Ok(())
    }
}
