//! Fixed-point ball arithmetic on big integers.
//!
//! A [`Ball`] at precision `p` stands for every real in
//! `[(mid - rad) / 2^p, (mid + rad) / 2^p]`. Every operation widens `rad` to
//! cover its own truncation, so results are rigorous enclosures.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct Ball {
    pub mid: BigInt,
    pub rad: BigInt,
    pub prec: u32,
}

impl Ball {
    pub fn exact_int(n: i64, prec: u32) -> Ball {
        Ball { mid: BigInt::from(n) << prec, rad: BigInt::zero(), prec }
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball { mid: &self.mid + &o.mid, rad: &self.rad + &o.rad, prec: self.prec }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball { mid: &self.mid - &o.mid, rad: &self.rad + &o.rad, prec: self.prec }
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: -&self.mid, rad: self.rad.clone(), prec: self.prec }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let p = self.prec;
        // floor shift: error below one unit, absorbed by the +1.
        let mid = (&self.mid * &o.mid) >> p;
        let spread = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        let rad = (spread >> p) + BigInt::one() + BigInt::one();
        Ball { mid, rad, prec: p }
    }

    pub fn mul_int(&self, n: i64) -> Ball {
        Ball { mid: &self.mid * n, rad: &self.rad * n.unsigned_abs(), prec: self.prec }
    }

    pub fn div_int(&self, n: u64) -> Ball {
        assert!(n > 0);
        Ball { mid: &self.mid / n, rad: &self.rad / n + BigInt::one(), prec: self.prec }
    }

    /// Largest magnitude in the ball, in units of `2^-prec`.
    pub fn mag_upper(&self) -> BigInt {
        self.mid.abs() + &self.rad
    }

    /// Whether the ball excludes zero.
    pub fn sign_known(&self) -> bool {
        self.mid.abs() > self.rad
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.mid, self.prec)
    }

    pub fn rad_f64(&self) -> f64 {
        to_f64(&self.rad, self.prec)
    }
}

fn to_f64(x: &BigInt, prec: u32) -> f64 {
    // Keep 64 significant bits, then scale.
    let bits = x.bits() as i64;
    let drop = (bits - 64).max(0);
    let top: BigInt = x >> drop as u32;
    let v = top.to_f64().expect("64-bit integer converts to f64");
    v * 2f64.powi((drop - prec as i64) as i32)
}

/// `atan(1/x)` by its alternating series.
fn atan_inv(x: u64, prec: u32) -> Ball {
    let x2 = BigInt::from(x) * x;
    let mut power: BigInt = (BigInt::one() << prec) / x;
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    let mut truncations = BigInt::zero();
    while !power.is_zero() {
        let term = &power / (2 * n + 1);
        if n.is_multiple_of(2) {
            sum += &term;
        } else {
            sum -= &term;
        }
        truncations += 2;
        power /= &x2;
        n += 1;
    }
    // Tail after the last term is below one unit; each division lost at most one.
    Ball { mid: sum, rad: truncations + 2, prec }
}

/// `pi` by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> Ball {
    atan_inv(5, prec).mul_int(16).sub(&atan_inv(239, prec).mul_int(4))
}

/// `cos(theta)` for `|theta| <= 4` by Taylor series with a remainder bound.
pub fn cos(theta: &Ball) -> Ball {
    let p = theta.prec;
    let t2 = theta.mul(theta);
    let one = Ball::exact_int(1, p);
    let mut term = one.clone();
    let mut sum = one;
    let mut n: u64 = 1;
    loop {
        term = term.mul(&t2).div_int((2 * n - 1) * (2 * n)).neg();
        sum = sum.add(&term);
        n += 1;
        // Once terms are tiny, the next one bounds the remainder (Lagrange).
        if term.mag_upper() <= BigInt::from(4) && n > 4 {
            let next = term.mul(&t2).div_int((2 * n - 1) * (2 * n));
            sum.rad += next.mag_upper();
            return sum;
        }
    }
}

/// `cos(j pi / s)`.
pub fn cos_pi_ratio(j: u64, s: u64, pi: &Ball) -> Ball {
    let j = j % (2 * s);
    // Reduce to [0, pi] using cos(x) = cos(2 pi - x).
    let j = if j > s { 2 * s - j } else { j };
    cos(&pi.mul_int(j as i64).div_int(s))
}
