//! Floating-point values with an extended binary exponent.

use std::f64::consts::LN_2;

const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-1;
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;

/// A real number stored as `mant * 2^exp2`, with `mant` in `[0.5, 1)` in
/// magnitude (or zero). Products of Bessel values whose factors would
/// overflow or underflow individually stay representable this way.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mant: f64,
    pub exp2: i32,
}

impl Scaled {
    pub const ZERO: Scaled = Scaled { mant: 0.0, exp2: 0 };

    pub fn new(x: f64) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Scaled { mant: x, exp2: 0 };
        }
        let (m, e) = libm::frexp(x);
        Scaled { mant: m, exp2: e }
    }

    /// `sign * exp(ln_abs)` without overflow.
    pub fn from_ln(ln_abs: f64, sign: f64) -> Self {
        let e = (ln_abs / LN_2).floor();
        let rem = (ln_abs - e * LN2_HI) - e * LN2_LO;
        let s = Scaled::new(sign.signum() * rem.exp());
        s.shift(e as i32)
    }

    pub fn shift(self, by: i32) -> Self {
        if self.mant == 0.0 {
            return self;
        }
        Scaled { mant: self.mant, exp2: self.exp2 + by }
    }

    pub fn mul(self, o: Scaled) -> Self {
        Scaled::new(self.mant * o.mant).shift(self.exp2 + o.exp2)
    }

    pub fn div(self, o: Scaled) -> Self {
        Scaled::new(self.mant / o.mant).shift(self.exp2 - o.exp2)
    }

    pub fn scale(self, f: f64) -> Self {
        Scaled::new(self.mant * f).shift(self.exp2)
    }

    pub fn add(self, o: Scaled) -> Self {
        if self.mant == 0.0 {
            return o;
        }
        if o.mant == 0.0 {
            return self;
        }
        let (big, small) = if self.exp2 >= o.exp2 { (self, o) } else { (o, self) };
        let gap = big.exp2 - small.exp2;
        if gap > 1100 {
            return big;
        }
        Scaled::new(big.mant + libm::ldexp(small.mant, -gap)).shift(big.exp2)
    }

    pub fn neg(self) -> Self {
        Scaled { mant: -self.mant, exp2: self.exp2 }
    }

    /// Plain double value; may be `inf` or `0` outside the double range.
    pub fn to_f64(self) -> f64 {
        libm::ldexp(self.mant, self.exp2)
    }

    pub fn ln_abs(self) -> f64 {
        self.mant.abs().ln() + self.exp2 as f64 * LN_2
    }

    pub fn signum(self) -> f64 {
        self.mant.signum()
    }

    pub fn is_zero(self) -> bool {
        self.mant == 0.0
    }
}
