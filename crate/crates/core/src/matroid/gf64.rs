//! Arithmetic in GF(2^64) modulo `x^64 + x^4 + x^3 + x + 1`.

use std::ops::{Add, AddAssign, Mul, MulAssign};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Gf64(pub u64);

const REDUCTION: u64 = 0b1_1011; // x^4 + x^3 + x + 1

impl Gf64 {
    pub const ZERO: Gf64 = Gf64(0);
    pub const ONE: Gf64 = Gf64(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse via `a^(2^64 - 2)`; the inverse of zero is zero.
    pub fn inv(self) -> Gf64 {
        let mut result = Gf64::ONE;
        let mut base = self;
        let mut e = u64::MAX - 1;
        while e != 0 {
            if e & 1 == 1 {
                result *= base;
            }
            base *= base;
            e >>= 1;
        }
        result
    }
}

fn clmul(a: u64, b: u64) -> (u64, u64) {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the required CPU feature was detected at runtime
            return unsafe { clmul_hw(a, b) };
        }
    }
    clmul_soft(a, b)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq,sse2")]
unsafe fn clmul_hw(a: u64, b: u64) -> (u64, u64) {
    use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_cvtsi128_si64, _mm_cvtsi64_si128, _mm_srli_si128};
    let prod = _mm_clmulepi64_si128(_mm_cvtsi64_si128(a as i64), _mm_cvtsi64_si128(b as i64), 0);
    let lo = _mm_cvtsi128_si64(prod) as u64;
    let hi = _mm_cvtsi128_si64(_mm_srli_si128(prod, 8)) as u64;
    (lo, hi)
}

fn clmul_soft(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            lo ^= a << i;
            if i > 0 {
                hi ^= a >> (64 - i);
            }
        }
        b >>= 1;
        i += 1;
    }
    (lo, hi)
}

fn reduce(lo: u64, hi: u64) -> u64 {
    // x^64 ≡ REDUCTION; fold the high word twice, the second fold has at
    // most 4 bits and no longer overflows
    let (l1, h1) = clmul(hi, REDUCTION);
    let (l2, _) = clmul(h1, REDUCTION);
    lo ^ l1 ^ l2
}

// addition in characteristic 2 is xor
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf64 {
    type Output = Gf64;
    fn add(self, rhs: Gf64) -> Gf64 {
        Gf64(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf64 {
    fn add_assign(&mut self, rhs: Gf64) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf64 {
    type Output = Gf64;
    fn mul(self, rhs: Gf64) -> Gf64 {
        let (lo, hi) = clmul(self.0, rhs.0);
        Gf64(reduce(lo, hi))
    }
}

impl MulAssign for Gf64 {
    fn mul_assign(&mut self, rhs: Gf64) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_products() {
        assert_eq!(Gf64(2) * Gf64(3), Gf64(6));
        assert_eq!(Gf64(1 << 63) * Gf64(2), Gf64(REDUCTION));
        assert_eq!(Gf64(7) * Gf64::ZERO, Gf64::ZERO);
        assert_eq!(Gf64::ZERO.inv(), Gf64::ZERO);
    }

    proptest! {
        #[test]
        fn hardware_and_software_products_agree(a in any::<u64>(), b in any::<u64>()) {
            prop_assert_eq!(clmul(a, b), clmul_soft(a, b));
        }


        #[test]
        fn field_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let (a, b, c) = (Gf64(a), Gf64(b), Gf64(c));
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv(), Gf64::ONE);
            }
        }
    }
}
