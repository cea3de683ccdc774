//! Numerical model on the complex unit disk: Möbius addition
//! `a ⊕ b = (a + b) / (1 + ā·b)`, its gyrations, and tolerance-based
//! verification of the gyrogroup and gyrocommutative laws on sampled
//! points.
//!
//! The gyration is computed definitionally as `⊖(a⊕b) ⊕ (a ⊕ (b⊕c))` and
//! cross-checked against the closed rotation form
//! `(1 + a·b̄) / (1 + ā·b) · c`; agreement of the two is part of every
//! report. The checker is generic over the addition so a deliberately
//! corrupted operation can serve as a negative control. Plain complex
//! addition satisfies every group-shaped residual exactly (it is a group),
//! so the residual set also anchors on closure (results must stay inside
//! the disk) and on the closed-form agreement, both of which blow up for
//! corrupted operations.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Default sampling radius; points are kept away from the disk boundary,
/// where denominators approach zero and cancellation dominates.
pub const SAMPLE_RADIUS: f64 = 0.95;

/// A point strictly inside the complex unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum DiskPointError {
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("point lies outside the open unit disk: |z| = {modulus}")]
    OutsideDisk { modulus: f64 },
}

impl DiskPoint {
    pub fn new(re: f64, im: f64) -> Result<DiskPoint, DiskPointError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(DiskPointError::NonFinite);
        }
        let modulus = re.hypot(im);
        if modulus >= 1.0 {
            return Err(DiskPointError::OutsideDisk { modulus });
        }
        Ok(DiskPoint { re, im })
    }

    pub fn origin() -> DiskPoint {
        DiskPoint { re: 0.0, im: 0.0 }
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    fn c(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn from_c(z: Complex64) -> DiskPoint {
        DiskPoint { re: z.re, im: z.im }
    }
}

/// Möbius addition on raw complex values.
fn add_c(a: Complex64, b: Complex64) -> Complex64 {
    (a + b) / (Complex64::new(1.0, 0.0) + a.conj() * b)
}

/// Definitional gyration `⊖(a⊕b) ⊕ (a ⊕ (b⊕c))` for an arbitrary
/// operation with negation `z ↦ -z`.
fn gyr_c(op: &impl Fn(Complex64, Complex64) -> Complex64, a: Complex64, b: Complex64, c: Complex64) -> Complex64 {
    op(-op(a, b), op(a, op(b, c)))
}

/// Closed rotation form of the Möbius gyration multiplier.
fn gyr_multiplier(a: Complex64, b: Complex64) -> Complex64 {
    (Complex64::new(1.0, 0.0) + a * b.conj()) / (Complex64::new(1.0, 0.0) + a.conj() * b)
}

/// `a ⊕ b = (a + b) / (1 + ā·b)`.
///
/// # Panics
/// On a non-finite result or a result outside the closed disk beyond
/// rounding slack, which indicates inputs violating the disk invariant.
pub fn m_add(a: DiskPoint, b: DiskPoint) -> DiskPoint {
    let z = add_c(a.c(), b.c());
    assert!(z.re.is_finite() && z.im.is_finite(), "non-finite sum");
    assert!(
        z.norm() < 1.0 + 1e-12,
        "sum escaped the disk: |z| = {}",
        z.norm()
    );
    DiskPoint::from_c(z)
}

/// `⊖a = -a`, the Möbius inverse.
pub fn m_neg(a: DiskPoint) -> DiskPoint {
    DiskPoint { re: -a.re, im: -a.im }
}

/// The gyration `gyr[a, b](c)`, computed definitionally.
pub fn m_gyr(a: DiskPoint, b: DiskPoint, c: DiskPoint) -> DiskPoint {
    DiskPoint::from_c(gyr_c(&add_c, a.c(), b.c(), c.c()))
}

/// The gyration via the closed rotation form; agrees with [`m_gyr`] to
/// rounding error and serves as its independent oracle.
pub fn m_gyr_closed(a: DiskPoint, b: DiskPoint, c: DiskPoint) -> DiskPoint {
    DiskPoint::from_c(gyr_multiplier(a.c(), b.c()) * c.c())
}

/// The cooperation `a ⊞ b = a ⊕ gyr[a, ⊖b](b)`.
pub fn m_coadd(a: DiskPoint, b: DiskPoint) -> DiskPoint {
    let g = gyr_c(&add_c, a.c(), -b.c(), b.c());
    DiskPoint::from_c(add_c(a.c(), g))
}

/// Largest residual observed per verified law. All distances are complex
/// moduli of the difference between the two sides of an exact identity.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct ResidualSet {
    /// `max(0, |a⊕b| - 1)`: operation results must stay inside the disk.
    pub closure: f64,
    /// `0⊕a = a` and `a⊕0 = a`.
    pub identity: f64,
    /// `⊖a⊕a = 0` and `a⊕⊖a = 0`.
    pub inverse: f64,
    /// Definitional gyration vs the closed Möbius rotation form.
    pub gyrator_agreement: f64,
    /// `gyr[a,b](x⊕y) = gyr[a,b]x ⊕ gyr[a,b]y`.
    pub gyration_automorphism: f64,
    /// `a⊕(b⊕c) = (a⊕b)⊕gyr[a,b]c`.
    pub left_gyroassociativity: f64,
    /// `(a⊕b)⊕c = a⊕(b⊕gyr[b,a]c)`.
    pub right_gyroassociativity: f64,
    /// `gyr[a,b] = gyr[a⊕b, b]`.
    pub left_loop: f64,
    /// `gyr[a,b] = gyr[a, b⊕a]`.
    pub right_loop: f64,
    /// `⊖a⊕(a⊕c) = c`.
    pub left_cancellation: f64,
    /// `(b⊕⊖a)⊞a = b` and `(b⊞⊖a)⊕a = b`.
    pub cooperation_cancellation: f64,
    /// `a⊕b = gyr[a,b](b⊕a)`.
    pub gyrocommutative: f64,
    /// `|gyr[a,b]c| = |c|`: gyrations are disk rotations.
    pub modulus_preservation: f64,
}

impl ResidualSet {
    pub fn max(&self) -> f64 {
        [
            self.closure,
            self.identity,
            self.inverse,
            self.gyrator_agreement,
            self.gyration_automorphism,
            self.left_gyroassociativity,
            self.right_gyroassociativity,
            self.left_loop,
            self.right_loop,
            self.left_cancellation,
            self.cooperation_cancellation,
            self.gyrocommutative,
            self.modulus_preservation,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    fn merge(&mut self, other: &ResidualSet) {
        self.closure = self.closure.max(other.closure);
        self.identity = self.identity.max(other.identity);
        self.inverse = self.inverse.max(other.inverse);
        self.gyrator_agreement = self.gyrator_agreement.max(other.gyrator_agreement);
        self.gyration_automorphism = self
            .gyration_automorphism
            .max(other.gyration_automorphism);
        self.left_gyroassociativity = self
            .left_gyroassociativity
            .max(other.left_gyroassociativity);
        self.right_gyroassociativity = self
            .right_gyroassociativity
            .max(other.right_gyroassociativity);
        self.left_loop = self.left_loop.max(other.left_loop);
        self.right_loop = self.right_loop.max(other.right_loop);
        self.left_cancellation = self.left_cancellation.max(other.left_cancellation);
        self.cooperation_cancellation = self
            .cooperation_cancellation
            .max(other.cooperation_cancellation);
        self.gyrocommutative = self.gyrocommutative.max(other.gyrocommutative);
        self.modulus_preservation = self.modulus_preservation.max(other.modulus_preservation);
    }
}

/// Verdict of a sampled verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleReport {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub radius: f64,
    pub max_residuals: ResidualSet,
    pub pass: bool,
}

fn residuals_for(
    op: &impl Fn(Complex64, Complex64) -> Complex64,
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
) -> ResidualSet {
    let dist = |x: Complex64, y: Complex64| (x - y).norm();
    let gyr = |p, q, r| gyr_c(op, p, q, r);
    let zero = Complex64::new(0.0, 0.0);

    let ab = op(a, b);
    let ba = op(b, a);

    let mut r = ResidualSet::default();
    for z in [ab, ba, op(a, c), op(b, c)] {
        r.closure = r.closure.max((z.norm() - 1.0).max(0.0));
    }
    r.identity = dist(op(zero, a), a).max(dist(op(a, zero), a));
    r.inverse = dist(op(-a, a), zero).max(dist(op(a, -a), zero));
    r.gyrator_agreement = dist(gyr(a, b, c), gyr_multiplier(a, b) * c);
    r.gyration_automorphism = dist(gyr(a, b, op(c, d)), op(gyr(a, b, c), gyr(a, b, d)));
    r.left_gyroassociativity = dist(op(a, op(b, c)), op(ab, gyr(a, b, c)));
    r.right_gyroassociativity = dist(op(ab, c), op(a, op(b, gyr(b, a, c))));
    r.left_loop = dist(gyr(a, b, c), gyr(ab, b, c));
    r.right_loop = dist(gyr(a, b, c), gyr(a, ba, c));
    r.left_cancellation = dist(op(-a, op(a, c)), c);
    let coadd = |p: Complex64, q: Complex64| op(p, gyr(p, -q, q));
    r.cooperation_cancellation = dist(coadd(op(b, -a), a), b).max(dist(op(coadd(b, -a), a), b));
    r.gyrocommutative = dist(ab, gyr(a, b, ba));
    r.modulus_preservation = (gyr(a, b, c).norm() - c.norm()).abs();
    r
}

/// Verifies the gyrogroup laws and the gyrocommutative law on
/// pseudo-random sampled tuples of disk points, generically over the
/// addition operation. Deterministic for a fixed seed.
pub fn check_axioms_with_op(
    samples: usize,
    seed: u64,
    tolerance: f64,
    radius: f64,
    op: impl Fn(Complex64, Complex64) -> Complex64,
) -> SampleReport {
    assert!(samples >= 1, "at least one sample");
    assert!(tolerance > 0.0, "tolerance must be positive");
    assert!((0.0..1.0).contains(&radius), "radius must be in [0, 1)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let r = radius * rng.gen::<f64>().sqrt();
        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
        Complex64::new(r * theta.cos(), r * theta.sin())
    };
    let mut max = ResidualSet::default();
    for _ in 0..samples {
        let (a, b, c, d) = (
            draw(&mut rng),
            draw(&mut rng),
            draw(&mut rng),
            draw(&mut rng),
        );
        max.merge(&residuals_for(&op, a, b, c, d));
    }
    SampleReport {
        samples,
        seed,
        tolerance,
        radius,
        pass: max.max() <= tolerance,
        max_residuals: max,
    }
}

/// [`check_axioms_with_op`] for the genuine Möbius addition at the default
/// sampling radius.
pub fn check_axioms(samples: usize, seed: u64, tolerance: f64) -> SampleReport {
    check_axioms_with_op(samples, seed, tolerance, SAMPLE_RADIUS, add_c)
}

/// The deliberately broken operation for negative-control runs: plain
/// complex addition, the Möbius formula with its denominator dropped.
pub fn corrupted_add(a: Complex64, b: Complex64) -> Complex64 {
    a + b
}
