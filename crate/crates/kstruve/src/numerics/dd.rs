//! Double-double arithmetic: unevaluated sums of two f64 giving ~31
//! significant digits. Used by the extended-precision series oracle and by
//! the series evaluator when cancellation exceeds what binary64 can carry.
//!
//! The error-free transformations (two_sum, two_prod) and the algorithms for
//! exp/ln/sqrt follow the classic QD library of Hida, Li and Bailey.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Relative rounding unit of a double-double, 2^-104.
pub const DD_EPSILON: f64 = 4.93038065763132e-32;

/// A double-double number `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    /// pi to double-double precision.
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    /// pi/2 to double-double precision.
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// The double-double closest to the exact quotient `a / b`.
    #[inline]
    pub fn from_div(a: f64, b: f64) -> Self {
        Dd::from_f64(a) / Dd::from_f64(b)
    }

    /// Exact product of two f64.
    #[inline]
    pub fn from_mul(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    /// Multiply by a power of two (exact).
    #[inline]
    pub fn mul_pwr2(self, p: f64) -> Self {
        Dd {
            hi: self.hi * p,
            lo: self.lo * p,
        }
    }

    #[inline]
    fn add_f64(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        let (r1, r2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: r1, lo: r2 }
    }

    #[inline]
    fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let (r1, r2) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi: r1, lo: r2 }
    }

    pub fn sqr(self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, self.hi);
        p2 += 2.0 * self.hi * self.lo;
        p2 += self.lo * self.lo;
        let (r1, r2) = quick_two_sum(p1, p2);
        Dd { hi: r1, lo: r2 }
    }

    /// Square root, valid for non-negative values (Karp's method).
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "dd sqrt of negative value");
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let d = (self - Dd::from_mul(ax, ax)).hi * (x * 0.5);
        let (s, e) = two_sum(ax, d);
        Dd { hi: s, lo: e }
    }

    /// exp(self). Underflows to zero below -709, overflows to +inf above 709.
    pub fn exp(self) -> Self {
        const INV_K: f64 = 1.0 / 512.0;
        if self.hi <= -709.0 {
            return Dd::ZERO;
        }
        if self.hi >= 709.0 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.is_zero() {
            return Dd::ONE;
        }

        let m = (self.hi / Dd::LN2.hi + 0.5).floor();
        let r = (self - Dd::LN2 * m).mul_pwr2(INV_K);

        // Taylor for exp(r) - 1 on |r| <= ln2/1024.
        let mut p = r.sqr();
        let mut s = r + p.mul_pwr2(0.5);
        p = p * r;
        let mut fact = 6.0; // 3!
        let mut n = 3.0;
        let mut t = p / Dd::from_f64(fact);
        loop {
            s = s + t;
            p = p * r;
            n += 1.0;
            fact *= n;
            t = p / Dd::from_f64(fact);
            if t.hi.abs() <= INV_K * DD_EPSILON || n > 18.0 {
                break;
            }
        }
        s = s + t;

        // Undo the 2^9 reduction: repeatedly (1+s)^2 - 1 = 2s + s^2.
        for _ in 0..9 {
            s = s.mul_pwr2(2.0) + s.sqr();
        }
        s = s + 1.0;

        let scale = libm_ldexp(1.0, m as i32);
        Dd {
            hi: s.hi * scale,
            lo: s.lo * scale,
        }
    }

    /// Natural logarithm, valid for positive values. Newton refinement of the
    /// f64 seed: x <- x + a*exp(-x) - 1, applied twice.
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0, "dd ln of non-positive value");
        if self == Dd::ONE {
            return Dd::ZERO;
        }
        let mut x = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp() - 1.0;
        }
        x
    }

    /// self^e for positive self.
    pub fn powf(self, e: Dd) -> Self {
        (self.ln() * e).exp()
    }

    /// Integer power by repeated squaring (any sign of base).
    pub fn powi(self, mut n: i32) -> Self {
        if n == 0 {
            return Dd::ONE;
        }
        let recip = n < 0;
        n = n.abs();
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            n >>= 1;
        }
        if recip {
            Dd::ONE / acc
        } else {
            acc
        }
    }

    /// Sine for |self| up to a few hundred: quadrant reduction by pi/2 then
    /// a Taylor series on |r| <= pi/4.
    pub fn sin(self) -> Self {
        let (s, _) = self.sin_cos();
        s
    }

    /// Cosine, same range as [`Dd::sin`].
    pub fn cos(self) -> Self {
        let (_, c) = self.sin_cos();
        c
    }

    pub fn sin_cos(self) -> (Self, Self) {
        let n = (self.to_f64() / Dd::FRAC_PI_2.hi).round();
        let r = self - Dd::FRAC_PI_2 * n;
        let (sr, cr) = (taylor_sin(r), taylor_cos(r));
        match (n as i64).rem_euclid(4) {
            0 => (sr, cr),
            1 => (cr, -sr),
            2 => (-sr, -cr),
            _ => (-cr, sr),
        }
    }
}

fn taylor_sin(r: Dd) -> Dd {
    let neg_r2 = -r.sqr();
    let mut term = r;
    let mut sum = r;
    let mut n = 1.0;
    loop {
        term = term * neg_r2 / Dd::from_f64((n + 1.0) * (n + 2.0));
        sum = sum + term;
        n += 2.0;
        if term.hi.abs() < DD_EPSILON || n > 60.0 {
            break;
        }
    }
    sum
}

fn taylor_cos(r: Dd) -> Dd {
    let neg_r2 = -r.sqr();
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut n = 0.0;
    loop {
        term = term * neg_r2 / Dd::from_f64((n + 1.0) * (n + 2.0));
        sum = sum + term;
        n += 2.0;
        if term.hi.abs() < DD_EPSILON || n > 60.0 {
            break;
        }
    }
    sum
}

#[inline]
fn libm_ldexp(x: f64, n: i32) -> f64 {
    // 2^n is exact; split in two steps to stay in range for |n| close to 1024.
    if n.abs() <= 1000 {
        x * f64::powi(2.0, n)
    } else {
        let h = n / 2;
        x * f64::powi(2.0, h) * f64::powi(2.0, n - h)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (r1, r2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: r1, lo: r2 }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: f64) -> Dd {
        self.add_f64(b)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: f64) -> Dd {
        self.add_f64(-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (r1, r2) = quick_two_sum(p1, p2);
        Dd { hi: r1, lo: r2 }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        self.mul_f64(b)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let mut r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: f64) -> Dd {
        self / Dd::from_f64(b)
    }
}

// ---------------------------------------------------------------------------
// Gamma at double-double precision: argument shift into the Stirling regime,
// then the asymptotic series with exact Bernoulli-number coefficients.
// ---------------------------------------------------------------------------

/// Coefficients B_{2j} / (2j (2j-1)) of the Stirling series, j = 1..=13.
fn stirling_coeffs() -> &'static [Dd; 13] {
    static COEFFS: OnceLock<[Dd; 13]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        // (numerator of B_{2j}, denominator of B_{2j})
        let bernoulli: [(f64, f64); 13] = [
            (1.0, 6.0),
            (-1.0, 30.0),
            (1.0, 42.0),
            (-1.0, 30.0),
            (5.0, 66.0),
            (-691.0, 2730.0),
            (7.0, 6.0),
            (-3617.0, 510.0),
            (43867.0, 798.0),
            (-174611.0, 330.0),
            (854513.0, 138.0),
            (-236364091.0, 2730.0),
            (8553103.0, 6.0),
        ];
        let mut out = [Dd::ZERO; 13];
        for (j, (num, den)) in bernoulli.iter().enumerate() {
            let two_j = 2.0 * (j as f64 + 1.0);
            out[j] = Dd::from_div(*num, den * two_j * (two_j - 1.0));
        }
        out
    })
}

fn half_ln_two_pi() -> Dd {
    static VALUE: OnceLock<Dd> = OnceLock::new();
    *VALUE.get_or_init(|| (Dd::PI.mul_pwr2(2.0)).ln().mul_pwr2(0.5))
}

/// ln Gamma(y) for y > 0 at double-double precision.
pub fn ln_gamma_dd(y: Dd) -> Dd {
    debug_assert!(y.hi > 0.0, "ln_gamma_dd requires a positive argument");
    let mut shift = Dd::ONE;
    let mut z = y;
    while z.hi < 32.0 {
        shift = shift * z;
        z = z + 1.0;
    }
    let inv = Dd::ONE / z;
    let inv2 = inv.sqr();
    let mut series = Dd::ZERO;
    for c in stirling_coeffs().iter().rev() {
        series = series * inv2 + *c;
    }
    series = series * inv;
    let stirling = (z - 0.5) * z.ln() - z + half_ln_two_pi() + series;
    stirling - shift.ln()
}

/// Gamma(y) for y > 0 at double-double precision.
pub fn gamma_dd(y: Dd) -> Dd {
    ln_gamma_dd(y).exp()
}
