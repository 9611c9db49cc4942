use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::{ExactError, Rat};

/// `rat + pi * π` with rational parts. Equality is componentwise, which is
/// sound because π is transcendental.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PiLinear {
    pub rat: Rat,
    pub pi: Rat,
}

impl PiLinear {
    pub fn new(rat: Rat, pi: Rat) -> PiLinear {
        PiLinear { rat, pi }
    }

    pub fn rational(rat: Rat) -> PiLinear {
        PiLinear { rat, pi: Rat::zero() }
    }

    pub fn int(n: i64) -> PiLinear {
        PiLinear::rational(Rat::int(n))
    }

    pub fn zero() -> PiLinear {
        PiLinear::default()
    }

    pub fn one() -> PiLinear {
        PiLinear::int(1)
    }

    /// `q * π`.
    pub fn pi_times(q: Rat) -> PiLinear {
        PiLinear { rat: Rat::zero(), pi: q }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.pi.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> PiLinear {
        PiLinear { rat: &self.rat * c, pi: &self.pi * c }
    }

    /// Product staying inside Q + Qπ; fails when the π² coefficient is nonzero.
    pub fn checked_mul(&self, rhs: &PiLinear) -> Result<PiLinear, ExactError> {
        if !(&self.pi * &rhs.pi).is_zero() {
            return Err(ExactError::NotLinearInPi);
        }
        Ok(PiLinear {
            rat: &self.rat * &rhs.rat,
            pi: &self.rat * &rhs.pi + &self.pi * &rhs.rat,
        })
    }

    pub fn to_poly(&self) -> PiPoly {
        PiPoly::new(vec![self.rat.clone(), self.pi.clone()])
    }

    pub fn to_f64(&self) -> f64 {
        pi_linear_eval(self, std::f64::consts::PI)
    }

    pub fn signum(&self) -> Result<Ordering, ExactError> {
        self.to_poly().signum()
    }
}

/// Numeric projection `rat + pi * pi_approx`.
pub fn pi_linear_eval(x: &PiLinear, pi_approx: f64) -> f64 {
    x.rat.to_f64() + x.pi.to_f64() * pi_approx
}

impl fmt::Display for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.pi.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}π", fmt_coeff(&self.pi)),
            (false, false) => {
                if self.pi.is_negative() {
                    write!(f, "{} - {}π", self.rat, fmt_coeff(&-&self.pi))
                } else {
                    write!(f, "{} + {}π", self.rat, fmt_coeff(&self.pi))
                }
            }
        }
    }
}

impl fmt::Debug for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_coeff(c: &Rat) -> String {
    if *c == Rat::one() {
        String::new()
    } else if *c == Rat::int(-1) {
        "-".to_string()
    } else if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl Add for &PiLinear {
    type Output = PiLinear;
    fn add(self, rhs: &PiLinear) -> PiLinear {
        PiLinear { rat: &self.rat + &rhs.rat, pi: &self.pi + &rhs.pi }
    }
}

impl Add for PiLinear {
    type Output = PiLinear;
    fn add(self, rhs: PiLinear) -> PiLinear {
        &self + &rhs
    }
}

impl Sub for &PiLinear {
    type Output = PiLinear;
    fn sub(self, rhs: &PiLinear) -> PiLinear {
        PiLinear { rat: &self.rat - &rhs.rat, pi: &self.pi - &rhs.pi }
    }
}

impl Sub for PiLinear {
    type Output = PiLinear;
    fn sub(self, rhs: PiLinear) -> PiLinear {
        &self - &rhs
    }
}

impl Neg for &PiLinear {
    type Output = PiLinear;
    fn neg(self) -> PiLinear {
        PiLinear { rat: -&self.rat, pi: -&self.pi }
    }
}

impl Neg for PiLinear {
    type Output = PiLinear;
    fn neg(self) -> PiLinear {
        -&self
    }
}

impl Mul<&Rat> for &PiLinear {
    type Output = PiLinear;
    fn mul(self, rhs: &Rat) -> PiLinear {
        self.scale(rhs)
    }
}

impl From<Rat> for PiLinear {
    fn from(r: Rat) -> PiLinear {
        PiLinear::rational(r)
    }
}

/// Polynomial in π with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiPoly {
    coeffs: Vec<Rat>,
}

// Decimal expansion used for rational enclosures of π.
const PI_DIGITS: &str =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899";

fn pi_bounds(digits: usize) -> (Rat, Rat) {
    let frac = &PI_DIGITS[2..2 + digits];
    let scale = num_bigint::BigInt::from(10u32).pow(digits as u32);
    let lo_num: num_bigint::BigInt = format!("3{frac}").parse().expect("digit string");
    let lo = Rat::from_big(lo_num.clone(), scale.clone()).expect("nonzero scale");
    let hi = Rat::from_big(lo_num + 1, scale).expect("nonzero scale");
    (lo, hi)
}

impl PiPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> PiPoly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PiPoly { coeffs }
    }

    pub fn constant(c: Rat) -> PiPoly {
        PiPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rat) -> PiPoly {
        PiPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Rational `c` with `self = c * other`, if one exists.
    pub fn ratio_to(&self, other: &PiPoly) -> Option<Rat> {
        let lead = other.coeffs.iter().position(|c| !c.is_zero())?;
        let c = self.coeffs.get(lead).cloned().unwrap_or_default() / &other.coeffs[lead];
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn to_f64(&self) -> f64 {
        self.eval(std::f64::consts::PI)
    }

    fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        // Horner over an interval with positive endpoints.
        let mut acc = (Rat::zero(), Rat::zero());
        for c in self.coeffs.iter().rev() {
            let cands = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let min = cands.iter().min().expect("four candidates").clone();
            let max = cands.iter().max().expect("four candidates").clone();
            acc = (min + c, max + c);
        }
        acc
    }

    /// Exact sign of the value at π.
    pub fn signum(&self) -> Result<Ordering, ExactError> {
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.coeffs[0].cmp(&Rat::zero()));
        }
        let mut stages = vec![(Rat::int(3), Rat::int(4))];
        stages.extend([2usize, 6, 14, 30, 60].into_iter().map(pi_bounds));
        for (lo, hi) in stages {
            let (a, b) = self.eval_interval(&lo, &hi);
            if a.is_positive() {
                return Ok(Ordering::Greater);
            }
            if b.is_negative() {
                return Ok(Ordering::Less);
            }
        }
        Err(ExactError::SignUndecided)
    }
}

impl From<&PiLinear> for PiPoly {
    fn from(x: &PiLinear) -> PiPoly {
        x.to_poly()
    }
}

impl Add for &PiPoly {
    type Output = PiPoly;
    fn add(self, rhs: &PiPoly) -> PiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        PiPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &PiPoly {
    type Output = PiPoly;
    fn neg(self) -> PiPoly {
        PiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &PiPoly {
    type Output = PiPoly;
    fn sub(self, rhs: &PiPoly) -> PiPoly {
        self + &(-rhs)
    }
}

impl Mul for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &PiPoly) -> PiPoly {
        if self.is_zero() || rhs.is_zero() {
            return PiPoly::default();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        PiPoly::new(out)
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if first { c.clone() } else { c.abs() };
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{}π", fmt_coeff(&mag))?,
                _ => write!(f, "{}π^{k}", fmt_coeff(&mag))?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Quotient of two π-polynomials, kept unevaluated.
#[derive(Clone)]
pub struct PiRatio {
    pub num: PiPoly,
    pub den: PiPoly,
}

impl PiRatio {
    pub fn new(num: PiPoly, den: PiPoly) -> Result<PiRatio, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(PiRatio { num, den })
    }

    pub fn from_rat(r: Rat) -> PiRatio {
        PiRatio { num: PiPoly::constant(r), den: PiPoly::constant(Rat::one()) }
    }

    pub fn mul(&self, rhs: &PiRatio) -> PiRatio {
        PiRatio { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }

    pub fn div(&self, rhs: &PiRatio) -> Result<PiRatio, ExactError> {
        PiRatio::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> PiRatio {
        PiRatio { num: -&self.num, den: self.den.clone() }
    }

    /// The value as a rational number when the π-dependence cancels.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        self.num.ratio_to(&self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / self.den.to_f64()
    }

    pub fn signum(&self) -> Result<Ordering, ExactError> {
        let a = self.num.signum()?;
        let b = self.den.signum()?;
        Ok(if b == Ordering::Less { a.reverse() } else { a })
    }

    /// Exact comparison by cross-multiplication.
    pub fn cmp_exact(&self, rhs: &PiRatio) -> Result<Ordering, ExactError> {
        let lhs = &self.num * &rhs.den;
        let rhs_n = &rhs.num * &self.den;
        let sign_dens = (&self.den * &rhs.den).signum()?;
        let diff = (&lhs - &rhs_n).signum()?;
        Ok(if sign_dens == Ordering::Less { diff.reverse() } else { diff })
    }

    pub fn eq_exact(&self, rhs: &PiRatio) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

impl fmt::Display for PiRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for PiRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PiRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PiRatio", 3)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}
