//! Supersingular curve arithmetic and the symmetric Tate pairing.
//!
//! Both supported parameter sets use the curve E: y^2 = x^3 + x over F_p with
//! p ≡ 3 (mod 4). Such curves are supersingular with #E(F_p) = p + 1 and
//! embedding degree 2, and carry the distortion map phi(x, y) = (-x, i*y)
//! into E(F_{p^2}). The pairing implemented here is the modified Tate
//! pairing e(A, B) = f_{q,A}(phi(B))^((p^2-1)/q), which is bilinear,
//! non-degenerate and symmetric on the order-q subgroup. Symmetry is what
//! lets every scheme element live in a single group and appear on either
//! side of a pairing.

use crypto_bigint::modular::FixedMontyParams;
use crypto_bigint::{Odd, Uint, U256};

use super::fp::{reduce_wide, Fp, Fp2};
use super::hashing::expand_message;

/// Shared prime order of the pairing subgroup on every supported curve.
/// q = 2^253 + 42249; both moduli below satisfy q | p + 1.
pub(crate) const SUBGROUP_ORDER: U256 =
    U256::from_be_hex("200000000000000000000000000000000000000000000000000000000000a509");

#[derive(Clone)]
pub(crate) struct CurveSpec<const L: usize> {
    pub fp: FixedMontyParams<L>,
    /// (p + 1) / 4, the square-root exponent for p ≡ 3 (mod 4).
    pub sqrt_exp: Uint<L>,
    /// (p + 1) / q. Clears the subgroup cofactor and drives the cheap part
    /// of the final exponentiation.
    pub cofactor: Uint<L>,
    /// Fixed base point of order q (already cofactor-cleared).
    pub generator: AffinePoint<L>,
    /// Wire identifier mixed into hash-to-group inputs.
    pub code: u16,
}

impl<const L: usize> CurveSpec<L> {
    fn build(p_hex: &str, sqrt_hex: &str, cof_hex: &str, gx_hex: &str, gy_hex: &str, code: u16) -> Self {
        let p = Uint::<L>::from_be_hex(p_hex);
        let fp = FixedMontyParams::new_vartime(Odd::new(p).expect("modulus must be odd"));
        let generator = AffinePoint {
            x: Fp::new(&Uint::from_be_hex(gx_hex), &fp),
            y: Fp::new(&Uint::from_be_hex(gy_hex), &fp),
            infinity: false,
        };
        Self {
            fp,
            sqrt_exp: Uint::from_be_hex(sqrt_hex),
            cofactor: Uint::from_be_hex(cof_hex),
            generator,
            code,
        }
    }

    pub fn modulus(&self) -> &Uint<L> {
        self.fp.modulus().as_ref()
    }

    /// Byte length of one field element on the wire.
    pub fn field_len(&self) -> usize {
        L * 8
    }
}

/// 256-bit parameter set: p = 4q - 1. Cofactor 4, so the discrete log in
/// F_{p^2} offers only demonstration-grade security. Fast; used by tests.
pub(crate) fn demo_spec() -> &'static CurveSpec<4> {
    use std::sync::OnceLock;
    static SPEC: OnceLock<CurveSpec<4>> = OnceLock::new();
    SPEC.get_or_init(|| {
        CurveSpec::build(
            "8000000000000000000000000000000000000000000000000000000000029423",
            "200000000000000000000000000000000000000000000000000000000000a509",
            "0000000000000000000000000000000000000000000000000000000000000004",
            "3866a682c5fbf218fb7d237d8b74344b08fdeceb72947065a29a1fe2de5ae48d",
            "2d372350b3b14915fe29156e9916046f4baa6aeef82ac08f5d1749e5ae1af6e0",
            1,
        )
    })
}

/// 1536-bit parameter set: p = (2^1280 + 404)q - 1, putting the F_{p^2}
/// discrete log at roughly the 128-bit level. This is the default for key
/// material meant to be used outside demos.
pub(crate) fn standard_spec() -> &'static CurveSpec<24> {
    use std::sync::OnceLock;
    static SPEC: OnceLock<CurveSpec<24>> = OnceLock::new();
    SPEC.get_or_init(|| {
        CurveSpec::build(
            "200000000000000000000000000000000000000000000000000000000000a50900000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000328000000000000000000000000000000000000000000000000000000001047233",
            "0800000000000000000000000000000000000000000000000000000000002942400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000ca000000000000000000000000000000000000000000000000000000000411c8d",
            "000000000000000000000000000000000000000000000000000000000000000100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000194",
            "1972ee95f244d1b96f1e93f4a1c7fa5cfe7c82c7608c914682cfbfa84f968903ec67dd97a362269c894f21e0f6705531ec011a5efb615f0d341b82d9701b88b9c724091f95a35ab183f634885ffba69814773acd68474855607249368286f75dba3e6ad9b8a1759ef1b8737c6c3d6d020f0e0a25e65f6f1c2eafd5010e9538db91fda12bd4429a4c16906501048e998324929e3e81d9783e21a4f930dd868bcb5c9d7b228ff76d4f3baec6e17e6215d96fa9459dcece8eeab654439a5cb49d26",
            "182696889f4f69e65fa3a379c9444a37f807d310de857d2232fe58866ac7e559cd4a505174cb21ba3dc84880c48990f6db1107d9e3222a9ccf6f31c53358a0d903e2912eb99289ad9cc04059c8c5d03470b969be5f6aa141790da369717ccde846c97b79e04f151e566f10cd0f8487e7c13d3ae48e4a801ed0f8370e3ee91795e68c0b39612a9259f8a1383fce74b68fc5c735ac3c53f329463e6122223f663f04e481d2a4664b046e0caf168198ef274a7e930cf248e0ce75156bf27994e999",
            2,
        )
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) struct AffinePoint<const L: usize> {
    pub x: Fp<L>,
    pub y: Fp<L>,
    pub infinity: bool,
}

impl<const L: usize> AffinePoint<L> {
    pub fn identity(spec: &CurveSpec<L>) -> Self {
        Self {
            x: Fp::zero(&spec.fp),
            y: Fp::zero(&spec.fp),
            infinity: true,
        }
    }

    pub fn neg(&self) -> Self {
        if self.infinity {
            *self
        } else {
            Self {
                x: self.x,
                y: self.y.neg(),
                infinity: false,
            }
        }
    }

}

/// Jacobian coordinates: (X, Y, Z) with x = X/Z^2, y = Y/Z^3; Z = 0 encodes
/// the point at infinity.
#[derive(Clone, Copy)]
pub(crate) struct Jacobian<const L: usize> {
    x: Fp<L>,
    y: Fp<L>,
    z: Fp<L>,
}

impl<const L: usize> Jacobian<L> {
    pub fn identity(spec: &CurveSpec<L>) -> Self {
        Self {
            x: Fp::one(&spec.fp),
            y: Fp::one(&spec.fp),
            z: Fp::zero(&spec.fp),
        }
    }

    pub fn from_affine(a: &AffinePoint<L>, spec: &CurveSpec<L>) -> Self {
        if a.infinity {
            Self::identity(spec)
        } else {
            Self {
                x: a.x,
                y: a.y,
                z: Fp::one(&spec.fp),
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero()
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn to_affine(&self, spec: &CurveSpec<L>) -> AffinePoint<L> {
        if self.is_identity() {
            return AffinePoint::identity(spec);
        }
        let zinv = self.z.invert().expect("nonzero z");
        let zinv2 = zinv.square();
        let zinv3 = zinv2.mul(&zinv);
        AffinePoint {
            x: self.x.mul(&zinv2),
            y: self.y.mul(&zinv3),
            infinity: false,
        }
    }

    /// Point doubling for y^2 = x^3 + x (curve coefficient a = 1).
    pub fn double_in_place(&mut self) {
        if self.is_identity() {
            return;
        }
        let xx = self.x.square();
        let yy = self.y.square();
        let yyyy = yy.square();
        let zz = self.z.square();
        let s = self.x.add(&yy).square().sub(&xx).sub(&yyyy).double();
        let m = xx.double().add(&xx).add(&zz.square());
        let x3 = m.square().sub(&s.double());
        let y3 = m.mul(&s.sub(&x3)).sub(&yyyy.double().double().double());
        let z3 = self.y.add(&self.z).square().sub(&yy).sub(&zz);
        self.x = x3;
        self.y = y3;
        self.z = z3;
    }

    /// Mixed addition with an affine point, handling all degenerate cases.
    pub fn add_mixed_in_place(&mut self, a: &AffinePoint<L>, spec: &CurveSpec<L>) {
        if a.infinity {
            return;
        }
        if self.is_identity() {
            *self = Self::from_affine(a, spec);
            return;
        }
        let zz = self.z.square();
        let u2 = a.x.mul(&zz);
        let s2 = a.y.mul(&zz).mul(&self.z);
        let h = u2.sub(&self.x);
        let r = s2.sub(&self.y);
        if h.is_zero() {
            if r.is_zero() {
                self.double_in_place();
            } else {
                *self = Self::identity(spec);
            }
            return;
        }
        let hh = h.square();
        let hhh = hh.mul(&h);
        let xhh = self.x.mul(&hh);
        let x3 = r.square().sub(&hhh).sub(&xhh.double());
        let y3 = r.mul(&xhh.sub(&x3)).sub(&self.y.mul(&hhh));
        let z3 = self.z.mul(&h);
        self.x = x3;
        self.y = y3;
        self.z = z3;
    }
}

/// Variable-time scalar multiplication; `k` is public in every use.
pub(crate) fn scalar_mul<const L: usize, const R: usize>(
    k: &Uint<R>,
    a: &AffinePoint<L>,
    spec: &CurveSpec<L>,
) -> AffinePoint<L> {
    if a.infinity {
        return *a;
    }
    let bits = k.bits_vartime();
    if bits == 0 {
        return AffinePoint::identity(spec);
    }
    let mut acc = Jacobian::from_affine(a, spec);
    for i in (0..bits - 1).rev() {
        acc.double_in_place();
        if k.bit_vartime(i) {
            acc.add_mixed_in_place(a, spec);
        }
    }
    acc.to_affine(spec)
}

pub(crate) fn affine_add<const L: usize>(
    a: &AffinePoint<L>,
    b: &AffinePoint<L>,
    spec: &CurveSpec<L>,
) -> AffinePoint<L> {
    let mut acc = Jacobian::from_affine(a, spec);
    acc.add_mixed_in_place(b, spec);
    acc.to_affine(spec)
}

pub(crate) fn in_subgroup<const L: usize>(a: &AffinePoint<L>, spec: &CurveSpec<L>) -> bool {
    scalar_mul(&SUBGROUP_ORDER, a, spec).infinity
}

/// Modified Tate pairing e(A, B) = f_{q,A}(phi(B))^((p^2-1)/q).
///
/// The Miller loop runs over the bits of q with denominator elimination:
/// phi(B) has x-coordinate in F_p, so every vertical-line value lies in
/// F_p and dies in the final exponentiation, as does the F_p scaling used
/// to keep the line evaluations division-free.
pub(crate) fn tate_pairing<const L: usize>(
    a: &AffinePoint<L>,
    b: &AffinePoint<L>,
    spec: &CurveSpec<L>,
) -> Fp2<L> {
    if a.infinity || b.infinity {
        return Fp2::one(&spec.fp);
    }
    // phi(B) = (-xB, i*yB)
    let xq = b.x.neg();
    let yq = b.y;

    let mut f = Fp2::one(&spec.fp);
    let mut t = Jacobian::from_affine(a, spec);
    let bits = SUBGROUP_ORDER.bits_vartime();
    for i in (0..bits - 1).rev() {
        f = f.square();
        f = f.mul(&doubling_step(&mut t, &xq, &yq));
        if SUBGROUP_ORDER.bit_vartime(i) {
            if let Some(line) = addition_step(&mut t, a, &xq, &yq, spec) {
                f = f.mul(&line);
            }
        }
    }
    debug_assert!(t.is_identity(), "Miller loop must end at infinity");

    // f^((p^2-1)/q) = (conj(f)/f)^((p+1)/q); conj(f) = f^p since i^p = -i.
    let z = f
        .conjugate()
        .mul(&f.invert().expect("Miller value is nonzero"));
    z.pow_vartime(&spec.cofactor)
}

/// Doubles T and evaluates the tangent line at phi(B), scaled by 2YZ^3.
fn doubling_step<const L: usize>(t: &mut Jacobian<L>, xq: &Fp<L>, yq: &Fp<L>) -> Fp2<L> {
    debug_assert!(!t.is_identity());
    let xx = t.x.square();
    let yy = t.y.square();
    let yyyy = yy.square();
    let zz = t.z.square();
    let s = t.x.add(&yy).square().sub(&xx).sub(&yyyy).double();
    let m = xx.double().add(&xx).add(&zz.square());
    let x3 = m.square().sub(&s.double());
    let y3 = m.mul(&s.sub(&x3)).sub(&yyyy.double().double().double());
    let z3 = t.y.add(&t.z).square().sub(&yy).sub(&zz);

    // l = M*(Z^2*xB + X) - 2Y^2 + i*(Z3*Z^2*yB), with Z^2*xB = -Z^2*xq.
    let re = m.mul(&t.x.sub(&zz.mul(xq))).sub(&yy.double());
    let im = z3.mul(&zz).mul(yq);

    t.x = x3;
    t.y = y3;
    t.z = z3;
    Fp2::new(re, im)
}

/// Adds the affine base point A to T and evaluates the chord line at phi(B).
/// Returns `None` when the line is vertical (its value lies in F_p and is
/// erased by the final exponentiation), which happens exactly once: the last
/// loop iteration, where T = -A and the sum reaches infinity.
fn addition_step<const L: usize>(
    t: &mut Jacobian<L>,
    a: &AffinePoint<L>,
    xq: &Fp<L>,
    yq: &Fp<L>,
    spec: &CurveSpec<L>,
) -> Option<Fp2<L>> {
    debug_assert!(!t.is_identity() && !a.infinity);
    let zz = t.z.square();
    let u2 = a.x.mul(&zz);
    let s2 = a.y.mul(&zz).mul(&t.z);
    let h = u2.sub(&t.x);
    let r = s2.sub(&t.y);
    if h.is_zero() {
        debug_assert!(!r.is_zero(), "tangent case cannot occur for odd prime order");
        *t = Jacobian::identity(spec);
        return None;
    }
    let hh = h.square();
    let hhh = hh.mul(&h);
    let xhh = t.x.mul(&hh);
    let x3 = r.square().sub(&hhh).sub(&xhh.double());
    let z3 = t.z.mul(&h);

    // l = R*(xB + xA) - Z3*yA + i*(Z3*yB), with xB = -xq.
    let re = r.mul(&a.x.sub(xq)).sub(&z3.mul(&a.y));
    let im = z3.mul(yq);

    let y3 = r.mul(&xhh.sub(&x3)).sub(&t.y.mul(&hhh));
    t.x = x3;
    t.y = y3;
    t.z = z3;
    Some(Fp2::new(re, im))
}

/// Deterministic hash onto the order-q subgroup (a MapToPoint hash).
///
/// Try-and-increment: expand the tagged input to an unbiased field element,
/// test it as an x-coordinate, recover y by square root, fix the sign from
/// one extra hash byte, then clear the cofactor. Retries bump the appended
/// counter byte; outputs that collapse to the identity are retried too.
pub(crate) fn map_to_point<const L: usize>(
    spec: &CurveSpec<L>,
    domain_tag: u8,
    msg: &[u8],
) -> AffinePoint<L> {
    let width = spec.field_len();
    for counter in 0u8..=255 {
        let expanded = expand_message(
            width + 17,
            &[
                b"clring-map-to-point-v1",
                &spec.code.to_be_bytes(),
                &[domain_tag],
                msg,
                &[counter],
            ],
        );
        let x = reduce_wide(&expanded[..width + 16], &spec.fp);
        let rhs = x.square().mul(&x).add(&x);
        let y = match rhs.sqrt(&spec.sqrt_exp) {
            Some(y) => y,
            None => continue,
        };
        let y = if expanded[width + 16] & 1 == 1 { y.neg() } else { y };
        let candidate = AffinePoint {
            x,
            y,
            infinity: false,
        };
        let cleared = scalar_mul(&spec.cofactor, &candidate, spec);
        if !cleared.infinity {
            return cleared;
        }
    }
    unreachable!("map-to-point failed for 256 consecutive counters")
}

/// Membership test for the order-q subgroup of F_{p^2}^*.
pub(crate) fn gt_in_subgroup<const L: usize>(v: &Fp2<L>, spec: &CurveSpec<L>) -> bool {
    v.pow_vartime(&SUBGROUP_ORDER).is_one(&spec.fp)
}
