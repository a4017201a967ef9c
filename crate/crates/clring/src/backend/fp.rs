//! Prime-field arithmetic for the pairing engine.
//!
//! `Fp` wraps a Montgomery-form residue from `crypto-bigint`; `Fp2` is the
//! quadratic extension F_p[i] with i^2 = -1, which exists because every
//! supported modulus satisfies p ≡ 3 (mod 4). The target group of the
//! pairing lives inside `Fp2`.

use crypto_bigint::modular::{FixedMontyForm, FixedMontyParams};
use crypto_bigint::{NonZero, Uint};

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fp<const L: usize>(FixedMontyForm<L>);

impl<const L: usize> Fp<L> {
    pub fn new(value: &Uint<L>, params: &FixedMontyParams<L>) -> Self {
        Self(FixedMontyForm::new(value, params))
    }

    pub fn zero(params: &FixedMontyParams<L>) -> Self {
        Self(FixedMontyForm::zero(params))
    }

    pub fn one(params: &FixedMontyParams<L>) -> Self {
        Self(FixedMontyForm::one(params))
    }

    pub fn retrieve(&self) -> Uint<L> {
        self.0.retrieve()
    }

    pub fn is_zero(&self) -> bool {
        self.0.as_montgomery() == &Uint::ZERO
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(self.0.add(&rhs.0))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self(self.0.sub(&rhs.0))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.mul(&rhs.0))
    }

    pub fn square(&self) -> Self {
        Self(self.0.square())
    }

    pub fn double(&self) -> Self {
        self.add(self)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    pub fn invert(&self) -> Option<Self> {
        self.0.invert_vartime().into_option().map(Self)
    }

    pub fn pow_vartime<const R: usize>(&self, exponent: &Uint<R>) -> Self {
        Self(self.0.pow_vartime(exponent))
    }

    /// Square root for p ≡ 3 (mod 4): candidate = self^((p+1)/4), valid only
    /// if the result squares back to `self`.
    pub fn sqrt(&self, sqrt_exp: &Uint<L>) -> Option<Self> {
        let candidate = self.pow_vartime(sqrt_exp);
        if candidate.square() == *self {
            Some(candidate)
        } else {
            None
        }
    }

    /// Parity of the canonical representative, used for point compression.
    pub fn is_odd(&self) -> bool {
        self.retrieve().bit_vartime(0)
    }
}

/// Reduces a big-endian byte string of at most `2 * L * 8` bytes modulo p.
pub(crate) fn reduce_wide<const L: usize>(
    bytes: &[u8],
    params: &FixedMontyParams<L>,
) -> Fp<L> {
    let width = L * 8;
    assert!(bytes.len() <= 2 * width, "reduce_wide input too long");
    let mut buf = vec![0u8; 2 * width];
    buf[2 * width - bytes.len()..].copy_from_slice(bytes);
    let hi = Uint::<L>::from_be_slice(&buf[..width]);
    let lo = Uint::<L>::from_be_slice(&buf[width..]);
    let modulus = NonZero::new(*params.modulus().as_ref()).expect("modulus is nonzero");
    let reduced = Uint::rem_wide_vartime((lo, hi), &modulus);
    Fp::new(&reduced, params)
}

/// Element of F_p[i] with i^2 = -1, written c0 + c1*i.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fp2<const L: usize> {
    pub c0: Fp<L>,
    pub c1: Fp<L>,
}

impl<const L: usize> Fp2<L> {
    pub fn new(c0: Fp<L>, c1: Fp<L>) -> Self {
        Self { c0, c1 }
    }

    pub fn one(params: &FixedMontyParams<L>) -> Self {
        Self {
            c0: Fp::one(params),
            c1: Fp::zero(params),
        }
    }

    pub fn is_one(&self, params: &FixedMontyParams<L>) -> bool {
        *self == Self::one(params)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let ac = self.c0.mul(&rhs.c0);
        let bd = self.c1.mul(&rhs.c1);
        let ad = self.c0.mul(&rhs.c1);
        let bc = self.c1.mul(&rhs.c0);
        Self {
            c0: ac.sub(&bd),
            c1: ad.add(&bc),
        }
    }

    pub fn square(&self) -> Self {
        let sum = self.c0.add(&self.c1);
        let diff = self.c0.sub(&self.c1);
        Self {
            c0: sum.mul(&diff),
            c1: self.c0.mul(&self.c1).double(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            c0: self.c0,
            c1: self.c1.neg(),
        }
    }

    pub fn invert(&self) -> Option<Self> {
        let norm = self.c0.square().add(&self.c1.square());
        let inv = norm.invert()?;
        Some(Self {
            c0: self.c0.mul(&inv),
            c1: self.c1.neg().mul(&inv),
        })
    }

    pub fn pow_vartime<const R: usize>(&self, exponent: &Uint<R>) -> Self {
        let params = self.c0.0.params();
        let mut acc = Self::one(params);
        let bits = exponent.bits_vartime();
        if bits == 0 {
            return acc;
        }
        for i in (0..bits).rev() {
            acc = acc.square();
            if exponent.bit_vartime(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }
}
