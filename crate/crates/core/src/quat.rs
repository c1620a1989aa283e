//! Real quaternions `a0 + a1 i + a2 j + a3 k` with `i^2 = j^2 = k^2 = ijk = -1`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real quaternion. Serialized as the 4-array `[a0, a1, a2, a3]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        [q.a0, q.a1, q.a2, q.a3]
    }
}

impl From<f64> for Quaternion {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<Complex64> for Quaternion {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// Builds `z1 + z2 j` from its two complex parts.
    pub fn from_parts(z1: Complex64, z2: Complex64) -> Self {
        Self::new(z1.re, z1.im, z2.re, z2.im)
    }

    /// Splits `q = z1 + z2 j` into `(z1, z2)`. Exact.
    pub fn parts(self) -> (Complex64, Complex64) {
        (Complex64::new(self.a0, self.a1), Complex64::new(self.a2, self.a3))
    }

    pub fn conj(self) -> Self {
        Self::new(self.a0, -self.a1, -self.a2, -self.a3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
    }

    /// The modulus `|q|`.
    pub fn norm(self) -> f64 {
        // hypot chain avoids overflow for huge components
        self.a0.hypot(self.a1).hypot(self.a2.hypot(self.a3))
    }

    /// `Re(q)`.
    pub fn re(self) -> f64 {
        self.a0
    }

    /// `Co(q) = a0 + a1 i`, the complex part.
    pub fn co(self) -> Complex64 {
        Complex64::new(self.a0, self.a1)
    }

    /// `Im(q) = a1 i + a2 j + a3 k`.
    pub fn im(self) -> Self {
        Self::new(0.0, self.a1, self.a2, self.a3)
    }

    pub fn is_finite(self) -> bool {
        self.a0.is_finite() && self.a1.is_finite() && self.a2.is_finite() && self.a3.is_finite()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.a0 * s, self.a1 * s, self.a2 * s, self.a3 * s)
    }

    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// Componentwise closeness in the max norm.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        let d = self - other;
        d.a0.abs() <= tol && d.a1.abs() <= tol && d.a2.abs() <= tol && d.a3.abs() <= tol
    }

    /// The unique element `Re(q) + |Im(q)| i` of the similarity class of `q`
    /// lying in the closed upper half plane.
    pub fn standard_representative(self) -> Complex64 {
        Complex64::new(self.a0, self.im().norm())
    }

    /// A unit quaternion `r` with `r^-1 q r = standard_representative(q)`.
    pub fn similarity_witness(self) -> Self {
        let b = self.im().norm();
        if b == 0.0 {
            return Self::ONE;
        }
        let w = self.im().scale(1.0 / b);
        // Rotor taking i to w under x -> r x r^-1 is normalize(1 - w i).
        let r = Self::ONE - w * Self::I;
        let n = r.norm();
        if n < 1e-8 {
            // w is (numerically) -i; j rotates i onto -i.
            return Self::J;
        }
        r.scale(1.0 / n)
    }
}

/// `p ~ q`: both have the same real part and the same imaginary modulus.
pub fn similar(p: Quaternion, q: Quaternion, tol: f64) -> bool {
    (p.re() - q.re()).abs() <= tol && (p.im().norm() - q.im().norm()).abs() <= tol
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a0 - o.a0, self.a1 - o.a1, self.a2 - o.a2, self.a3 - o.a3)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::new(
            a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
            a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
            a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
            a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        self.scale(1.0 / s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a0)?;
        for (c, unit) in [(self.a1, 'i'), (self.a2, 'j'), (self.a3, 'k')] {
            if c < 0.0 || (c == 0.0 && c.is_sign_negative()) {
                write!(f, "-{}{unit}", -c)?;
            } else {
                write!(f, "+{c}{unit}")?;
            }
        }
        Ok(())
    }
}
