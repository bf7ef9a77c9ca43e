//! Duistermaat–Heckman bookkeeping for semifree circle actions whose reduced
//! spaces are ruled surfaces.
//!
//! Between critical levels the reduced symplectic class moves along
//! [ω_t] = [ω_r] − e·(t − r), where e is the Euler class of the level's
//! S¹-bundle.  Crossing a wall adds the duals of the fixed surfaces in that
//! level to e; isolated fixed points leave e untouched in (u, v) coordinates,
//! but a point with weights (p, q, −r) lowers ∫e² by 1/(pqr).  The associated
//! volume f(t) = ∫ω_t² is continuous, piecewise quadratic, log-concave, and
//! vanishes exactly at extremal levels — all checkable in exact rational
//! arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::homology::{intersection, Bundle, Class, RuledSurface, ZClass};
use crate::poly::Poly;
use crate::{rat, BigInt, Rat};

/// Affine path of reduced classes t ↦ c(t)·u + d(t)·v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPath {
    pub u: Poly,
    pub v: Poly,
}

impl ClassPath {
    /// Path with c(t) = c0 + c1·t and d(t) = d0 + d1·t.
    pub fn new(c0: Rat, c1: Rat, d0: Rat, d1: Rat) -> Self {
        ClassPath { u: Poly::affine(c0, c1), v: Poly::affine(d0, d1) }
    }

    pub fn eval(&self, t: &Rat) -> Class {
        Class { u: self.u.eval(t), v: self.v.eval(t) }
    }

    /// (c₁, d₁): the time derivative, which the slope law forces to be −e.
    pub fn slope(&self) -> (Rat, Rat) {
        (self.u.c1.clone(), self.v.c1.clone())
    }
}

/// One interval of regular levels: the affine class path on (lo, hi) together
/// with the Euler class of the S¹-bundle over those levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearClassPath {
    pub lo: Rat,
    pub hi: Rat,
    pub path: ClassPath,
    pub euler: ZClass,
}

impl LinearClassPath {
    /// The slope law: d/dt [ω_t] = −e, i.e. (c₁, d₁) = (−e_u, −e_v).
    pub fn slope_law_holds(&self) -> bool {
        self.path.slope() == (rat(-self.euler.u), rat(-self.euler.v))
    }
}

/// The reduced class at time t given its value at a reference time r:
/// [ω_t] = [ω_r] − e·(t − r).
pub fn evolve_omega(w_r: &Class, e: ZClass, r: &Rat, t: &Rat) -> Class {
    let dt = t - r;
    Class {
        u: &w_r.u - rat(e.u) * &dt,
        v: &w_r.v - rat(e.v) * &dt,
    }
}

/// Same evolution packaged as an affine path.
pub fn path_from_reference(w_r: &Class, e: ZClass, r: &Rat) -> ClassPath {
    ClassPath {
        u: Poly::affine(&w_r.u + rat(e.u) * r, rat(-e.u)),
        v: Poly::affine(&w_r.v + rat(e.v) * r, rat(-e.v)),
    }
}

/// Euler class on the far side of a wall: e₊ = e₋ + Σ D(X_i), summing the
/// duals of the fixed surfaces in the wall.  Isolated fixed points do not
/// appear: they leave the (u, v) part of the Euler class unchanged.
pub fn cross_wall_euler(e_minus: ZClass, surface_duals: &[ZClass]) -> ZClass {
    surface_duals.iter().fold(e_minus, |e, &d| e.add(d))
}

/// Isolated fixed points are recorded with their index-2 normal form
/// (p, q, −r); all three recorded magnitudes must be ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonPositiveWeight {
    pub weights: (i64, i64, i64),
}

impl fmt::Display for NonPositiveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r) = self.weights;
        write!(f, "isolated fixed-point weights ({p}, {q}, {r}) must all be ≥ 1")
    }
}

/// ∫e² after crossing one isolated fixed point with weights (p, q, −r):
/// the integral drops by exactly 1/(p·q·r).
pub fn isolated_euler_square_drop(
    e_sq: &Rat,
    weights: (i64, i64, i64),
) -> Result<Rat, NonPositiveWeight> {
    let (p, q, r) = weights;
    if p < 1 || q < 1 || r < 1 {
        return Err(NonPositiveWeight { weights });
    }
    let den = BigInt::from(p) * BigInt::from(q) * BigInt::from(r);
    Ok(e_sq - Rat::new(BigInt::one(), den))
}

/// Total drop of ∫e² over a list of isolated points: Σ 1/(p·q·r).
pub fn isolated_drop(points: &[(i64, i64, i64)]) -> Result<Rat, NonPositiveWeight> {
    let mut total = Rat::zero();
    for &w in points {
        total -= isolated_euler_square_drop(&Rat::zero(), w)?;
    }
    Ok(total)
}

/// Jump of f′ across a wall at level s: f′(s⁺) − f′(s⁻) = −2 ⟨ω_s, Σ D(X_i)⟩.
pub fn wall_slope_jump(surface: RuledSurface, w_s: &Class, total_dual: ZClass) -> Rat {
    rat(-2) * intersection(surface, w_s, &Class::from(total_dual))
}

/// ∫ω_t² of an affine class path, before isolated-point corrections:
/// 2·c·d on the trivial bundle, (2c − d)·d on the nontrivial one.
pub fn volume_poly(surface: RuledSurface, path: &ClassPath) -> Poly {
    let twice_mixed = path.u.mul(&path.v).scale(&rat(2));
    match surface.bundle {
        Bundle::Trivial => twice_mixed,
        Bundle::Nontrivial => twice_mixed.sub(&path.v.mul(&path.v)),
    }
}

/// Continuous piecewise polynomial on a chain of intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyPiece {
    pub lo: Rat,
    pub hi: Rat,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    pieces: Vec<PolyPiece>,
}

impl PiecewisePoly {
    /// Panics unless the pieces are nonempty, ordered, and contiguous; the
    /// caller is expected to have validated the level structure already.
    pub fn new(pieces: Vec<PolyPiece>) -> Self {
        assert!(!pieces.is_empty(), "piecewise polynomial with no pieces");
        for p in &pieces {
            assert!(p.lo < p.hi, "empty or reversed piece");
        }
        for w in pieces.windows(2) {
            assert!(w[0].hi == w[1].lo, "pieces are not contiguous");
        }
        PiecewisePoly { pieces }
    }

    pub fn pieces(&self) -> &[PolyPiece] {
        &self.pieces
    }

    pub fn domain(&self) -> (Rat, Rat) {
        (
            self.pieces.first().unwrap().lo.clone(),
            self.pieces.last().unwrap().hi.clone(),
        )
    }

    /// Breakpoints strictly inside the domain.
    pub fn internal_breaks(&self) -> Vec<Rat> {
        self.pieces.iter().skip(1).map(|p| p.lo.clone()).collect()
    }

    /// None outside the domain; on a breakpoint both adjacent pieces agree
    /// whenever the function is continuous, and the left piece is used.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        self.pieces
            .iter()
            .find(|p| p.lo <= *t && *t <= p.hi)
            .map(|p| p.poly.eval(t))
    }

    /// Derivative evaluated just left / just right of t (None outside, or on
    /// the far side of an endpoint).
    pub fn slope_left_of(&self, t: &Rat) -> Option<Rat> {
        self.pieces
            .iter()
            .find(|p| p.lo < *t && *t <= p.hi)
            .map(|p| p.poly.derivative().eval(t))
    }

    pub fn slope_right_of(&self, t: &Rat) -> Option<Rat> {
        self.pieces
            .iter()
            .find(|p| p.lo <= *t && *t < p.hi)
            .map(|p| p.poly.derivative().eval(t))
    }
}

/// Duistermaat–Heckman volume f(t) = ∫ω_t² over the given level intervals.
pub fn dh_volume(surface: RuledSurface, pieces: &[LinearClassPath]) -> PiecewisePoly {
    dh_volume_corrected(surface, pieces, &[])
}

/// DH volume including isolated-point corrections.  `isolated_walls` lists
/// (level, drop) pairs for walls containing isolated fixed points: past such a
/// wall at s the honest reduced class carries an extra component of square
/// −drop, so every later piece loses drop·(t − s)² of volume.
pub fn dh_volume_corrected(
    surface: RuledSurface,
    pieces: &[LinearClassPath],
    isolated_walls: &[(Rat, Rat)],
) -> PiecewisePoly {
    let out = pieces
        .iter()
        .map(|piece| {
            let mut poly = volume_poly(surface, &piece.path);
            for (s, drop) in isolated_walls {
                if *s <= piece.lo {
                    // drop·(t − s)² expanded.
                    let correction = Poly::new(drop * s * s, rat(-2) * drop * s, drop.clone());
                    poly = poly.sub(&correction);
                }
            }
            PolyPiece { lo: piece.lo.clone(), hi: piece.hi.clone(), poly }
        })
        .collect();
    PiecewisePoly::new(out)
}

/// Why a piecewise quadratic fails to be a positive log-concave density.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogConcavityViolation {
    /// f ≤ 0 somewhere strictly inside the domain.
    NonPositive { lo: Rat, hi: Rat },
    /// f″f − (f′)² > 0 somewhere on the piece.
    NotLogConcave { lo: Rat, hi: Rat },
    Discontinuity { at: Rat, left: Rat, right: Rat },
    /// f′ jumps upward at a breakpoint; concavity of log f forbids that.
    SlopeIncrease { at: Rat, left_slope: Rat, right_slope: Rat },
}

impl fmt::Display for LogConcavityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogConcavityViolation::NonPositive { lo, hi } => {
                write!(f, "volume is not strictly positive on ({lo}, {hi})")
            }
            LogConcavityViolation::NotLogConcave { lo, hi } => {
                write!(f, "f\u{2033}f - (f\u{2032})\u{00b2} is positive somewhere on ({lo}, {hi})")
            }
            LogConcavityViolation::Discontinuity { at, left, right } => {
                write!(f, "volume jumps from {left} to {right} at t = {at}")
            }
            LogConcavityViolation::SlopeIncrease { at, left_slope, right_slope } => {
                write!(
                    f,
                    "volume slope increases from {left_slope} to {right_slope} at t = {at}"
                )
            }
        }
    }
}

/// Checks that f is a valid Duistermaat–Heckman profile: continuous, strictly
/// positive strictly inside its domain (it may vanish at the ends), with
/// f″f − (f′)² ≤ 0 on every piece and no upward kink of f′ at a breakpoint.
pub fn check_log_concave(f: &PiecewisePoly) -> Result<(), LogConcavityViolation> {
    for w in f.pieces().windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let at = b.lo.clone();
        let left = a.poly.eval(&at);
        let right = b.poly.eval(&at);
        if left != right {
            return Err(LogConcavityViolation::Discontinuity { at, left, right });
        }
    }
    for p in f.pieces() {
        if !p.poly.positive_on_open(&p.lo, &p.hi) {
            return Err(LogConcavityViolation::NonPositive { lo: p.lo.clone(), hi: p.hi.clone() });
        }
    }
    for b in f.internal_breaks() {
        if !f.eval(&b).unwrap().is_positive() {
            return Err(LogConcavityViolation::NonPositive { lo: b.clone(), hi: b });
        }
    }
    for p in f.pieces() {
        let d1 = p.poly.derivative();
        let d2 = d1.derivative();
        let concavity = d2.mul(&p.poly).sub(&d1.mul(&d1));
        if !concavity.nonpositive_on_open(&p.lo, &p.hi) {
            return Err(LogConcavityViolation::NotLogConcave {
                lo: p.lo.clone(),
                hi: p.hi.clone(),
            });
        }
    }
    for w in f.pieces().windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let at = b.lo.clone();
        let left_slope = a.poly.derivative().eval(&at);
        let right_slope = b.poly.derivative().eval(&at);
        if right_slope > left_slope {
            return Err(LogConcavityViolation::SlopeIncrease { at, left_slope, right_slope });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Min-slope step function.
// ---------------------------------------------------------------------------

/// One interval on which d/dt min(c(t), d(t)) is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeStep {
    pub lo: Rat,
    pub hi: Rat,
    pub slope: Rat,
}

/// The step function d/dt min(c(t), d(t)), with pieces split where the two
/// coefficients cross.  Walls and crossings themselves are isolated points
/// outside the domain of the derivative; the steps record its value between
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSlopeProfile {
    steps: Vec<SlopeStep>,
}

pub fn min_slope(pieces: &[LinearClassPath]) -> MinSlopeProfile {
    let mut steps = Vec::new();
    for piece in pieces {
        let diff = piece.path.u.sub(&piece.path.v); // c − d
        let mut cuts = vec![piece.lo.clone(), piece.hi.clone()];
        if !diff.c1.is_zero() {
            let root = -&diff.c0 / &diff.c1;
            if piece.lo < root && root < piece.hi {
                cuts.insert(1, root);
            }
        }
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0].clone(), w[1].clone());
            let mid = (&lo + &hi) / rat(2);
            let slope = if diff.eval(&mid).is_negative() {
                piece.path.u.c1.clone() // c < d: min is c
            } else {
                piece.path.v.c1.clone() // d ≤ c: min is d (equal slopes if c ≡ d)
            };
            steps.push(SlopeStep { lo, hi, slope });
        }
    }
    MinSlopeProfile { steps }
}

impl MinSlopeProfile {
    pub fn steps(&self) -> &[SlopeStep] {
        &self.steps
    }

    /// Slope immediately to the left of t.
    pub fn slope_left_of(&self, t: &Rat) -> Option<Rat> {
        self.steps
            .iter()
            .find(|s| s.lo < *t && *t <= s.hi)
            .map(|s| s.slope.clone())
    }

    /// Slope immediately to the right of t.
    pub fn slope_right_of(&self, t: &Rat) -> Option<Rat> {
        self.steps
            .iter()
            .find(|s| s.lo <= *t && *t < s.hi)
            .map(|s| s.slope.clone())
    }
}

/// How a min-slope profile fails the monotone-step requirements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinSlopeViolation {
    /// The step function increases across a breakpoint.
    Increase { at: Rat, left: Rat, right: Rat },
    /// A wall carrying a positive-genus surface dropped the slope by < 2.
    SmallDropAtWall { at: Rat, left: Rat, right: Rat },
}

impl fmt::Display for MinSlopeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinSlopeViolation::Increase { at, left, right } => write!(
                f,
                "slope of min(c, d) increases from {left} to {right} at t = {at}"
            ),
            MinSlopeViolation::SmallDropAtWall { at, left, right } => write!(
                f,
                "slope of min(c, d) drops only from {left} to {right} at the \
                 positive-genus wall t = {at} (a drop of at least 2 is required)"
            ),
        }
    }
}

/// Verifies the min-slope step function is non-increasing across every
/// breakpoint, and drops by at least 2 at each listed positive-genus wall.
pub fn check_min_slope_monotone(
    profile: &MinSlopeProfile,
    positive_genus_walls: &[Rat],
) -> Result<(), MinSlopeViolation> {
    for w in profile.steps.windows(2) {
        if w[1].slope > w[0].slope {
            return Err(MinSlopeViolation::Increase {
                at: w[1].lo.clone(),
                left: w[0].slope.clone(),
                right: w[1].slope.clone(),
            });
        }
    }
    for s in positive_genus_walls {
        if let (Some(left), Some(right)) =
            (profile.slope_left_of(s), profile.slope_right_of(s))
        {
            if &left - &right < rat(2) {
                return Err(MinSlopeViolation::SmallDropAtWall {
                    at: s.clone(),
                    left,
                    right,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{zc, Bundle, RuledSurface};
    use crate::ratio;
    use alloc::vec;

    fn s2xs2() -> RuledSurface {
        RuledSurface::new(Bundle::Trivial, 0)
    }

    fn piece(lo: i64, hi: i64, c0: i64, c1: i64, d0: i64, d1: i64, e: ZClass) -> LinearClassPath {
        LinearClassPath {
            lo: rat(lo),
            hi: rat(hi),
            path: ClassPath::new(rat(c0), rat(c1), rat(d0), rat(d1)),
            euler: e,
        }
    }

    /// Level data of a two-wall action on S²×S²: two sections in the first
    /// wall, five fiber spheres in the second, final Euler class 5u + v.
    fn two_wall_pieces() -> Vec<LinearClassPath> {
        vec![
            piece(0, 2, 6, 0, 0, 1, zc(0, -1)),
            piece(2, 3, 6, 0, 4, -1, zc(0, 1)),
            piece(3, 4, 21, -5, 4, -1, zc(5, 1)),
        ]
    }

    #[test]
    fn evolution_matches_path() {
        let w = Class::from_int(6, 2);
        let e = zc(3, -1);
        let r = rat(2);
        let p = path_from_reference(&w, e, &r);
        for t in [rat(0), ratio(5, 2), rat(4)] {
            assert_eq!(p.eval(&t), evolve_omega(&w, e, &r, &t));
        }
        assert_eq!(p.eval(&r), w);
        assert_eq!(p.slope(), (rat(-3), rat(1)));
    }

    #[test]
    fn slope_law_detects_mismatch() {
        assert!(piece(0, 1, 6, 0, 0, 1, zc(0, -1)).slope_law_holds());
        assert!(!piece(0, 1, 6, 0, 0, 1, zc(0, 1)).slope_law_holds());
    }

    #[test]
    fn euler_crossing_and_isolated_drop() {
        let e = cross_wall_euler(zc(0, -1), &[zc(0, 1), zc(0, 1)]);
        assert_eq!(e, zc(0, 1));
        assert_eq!(isolated_euler_square_drop(&rat(0), (1, 1, 1)), Ok(rat(-1)));
        assert_eq!(isolated_euler_square_drop(&ratio(1, 2), (1, 2, 3)), Ok(ratio(1, 3)));
        assert_eq!(
            isolated_euler_square_drop(&rat(0), (1, 0, 1)),
            Err(NonPositiveWeight { weights: (1, 0, 1) })
        );
        assert_eq!(isolated_drop(&[(1, 2, 3), (1, 1, 2)]), Ok(ratio(2, 3)));
    }

    #[test]
    fn volume_of_the_two_wall_action() {
        let f = dh_volume(s2xs2(), &two_wall_pieces());
        assert_eq!(f.pieces()[0].poly, Poly::affine(rat(0), rat(12)));
        assert_eq!(f.pieces()[1].poly, Poly::affine(rat(48), rat(-12)));
        assert_eq!(f.pieces()[2].poly, Poly::new(rat(168), rat(-82), rat(10)));
        assert_eq!(f.eval(&rat(2)), Some(rat(24)));
        assert_eq!(f.eval(&rat(3)), Some(rat(12)));
        assert_eq!(f.eval(&rat(4)), Some(rat(0)));
        assert_eq!(f.eval(&rat(5)), None);
        assert_eq!(check_log_concave(&f), Ok(()));
    }

    #[test]
    fn nontrivial_bundle_volume() {
        let s = RuledSurface::new(Bundle::Nontrivial, 1);
        let f = volume_poly(s, &ClassPath::new(rat(3), rat(0), rat(2), rat(0)));
        assert_eq!(f, Poly::constant(rat(8))); // 2·3·2 − 2²
    }

    #[test]
    fn isolated_wall_correction() {
        // Constant class (3, 1) on both sides of an isolated wall at t = 1
        // with a single (1, 1, 1) point: past the wall the volume bends down
        // by (t − 1)².
        let pieces = vec![
            piece(0, 1, 3, 0, 1, 0, zc(0, 0)),
            piece(1, 2, 3, 0, 1, 0, zc(0, 0)),
        ];
        let f = dh_volume_corrected(s2xs2(), &pieces, &[(rat(1), rat(1))]);
        assert_eq!(f.pieces()[0].poly, Poly::constant(rat(6)));
        assert_eq!(f.pieces()[1].poly, Poly::new(rat(5), rat(2), rat(-1)));
        assert_eq!(f.eval(&rat(2)), Some(rat(5)));
        assert_eq!(check_log_concave(&f), Ok(()));
    }

    #[test]
    fn log_concavity_violations_are_reported() {
        let jump = PiecewisePoly::new(vec![
            PolyPiece { lo: rat(0), hi: rat(1), poly: Poly::constant(rat(2)) },
            PolyPiece { lo: rat(1), hi: rat(2), poly: Poly::constant(rat(3)) },
        ]);
        assert!(matches!(
            check_log_concave(&jump),
            Err(LogConcavityViolation::Discontinuity { .. })
        ));

        let dips = PiecewisePoly::new(vec![PolyPiece {
            lo: rat(0),
            hi: rat(4),
            poly: Poly::new(rat(3), rat(-4), rat(1)), // (t−1)(t−3)
        }]);
        assert!(matches!(
            check_log_concave(&dips),
            Err(LogConcavityViolation::NonPositive { .. })
        ));

        let kink_up = PiecewisePoly::new(vec![
            PolyPiece { lo: rat(0), hi: rat(1), poly: Poly::affine(rat(0), rat(1)) },
            PolyPiece { lo: rat(1), hi: rat(2), poly: Poly::affine(rat(-2), rat(3)) },
        ]);
        assert!(matches!(
            check_log_concave(&kink_up),
            Err(LogConcavityViolation::SlopeIncrease { .. })
        ));

        // Convex pieces are fine only while f″f − (f′)² stays nonpositive:
        // t² + 1 on (0, 1) has f″f − (f′)² = 2 − 2t² > 0 near 0.
        let convex = PiecewisePoly::new(vec![PolyPiece {
            lo: rat(0),
            hi: rat(1),
            poly: Poly::new(rat(1), rat(0), rat(1)),
        }]);
        assert!(matches!(
            check_log_concave(&convex),
            Err(LogConcavityViolation::NotLogConcave { .. })
        ));
    }

    #[test]
    fn min_slope_steps_and_wall_drops() {
        let profile = min_slope(&two_wall_pieces());
        let slopes: Vec<Rat> = profile.steps().iter().map(|s| s.slope.clone()).collect();
        assert_eq!(slopes, vec![rat(1), rat(-1), rat(-1)]);
        assert_eq!(profile.slope_left_of(&rat(2)), Some(rat(1)));
        assert_eq!(profile.slope_right_of(&rat(2)), Some(rat(-1)));
        // All walls are genus 0 here; drops are (2, 0).
        assert_eq!(check_min_slope_monotone(&profile, &[]), Ok(()));
        // Were the first wall to carry a positive-genus surface, its drop of 2
        // would pass, while the second wall's drop of 0 would not.
        assert_eq!(check_min_slope_monotone(&profile, &[rat(2)]), Ok(()));
        assert!(matches!(
            check_min_slope_monotone(&profile, &[rat(3)]),
            Err(MinSlopeViolation::SmallDropAtWall { .. })
        ));
    }

    #[test]
    fn min_slope_splits_inside_a_piece() {
        // c = t, d = 2 − t cross at t = 1; min goes up then down.
        let pieces = vec![piece(0, 2, 0, 1, 2, -1, zc(-1, 1))];
        let profile = min_slope(&pieces);
        assert_eq!(profile.steps().len(), 2);
        assert_eq!(profile.steps()[0].slope, rat(1));
        assert_eq!(profile.steps()[1].slope, rat(-1));
        assert_eq!(profile.steps()[0].hi, rat(1));
        assert_eq!(check_min_slope_monotone(&profile, &[]), Ok(()));
    }

    #[test]
    fn min_slope_increase_is_flagged() {
        let pieces = vec![
            piece(0, 1, 3, 0, 1, 0, zc(0, 0)),
            piece(1, 2, 3, 1, 5, 0, zc(-1, 0)),
        ];
        let profile = min_slope(&pieces);
        assert!(matches!(
            check_min_slope_monotone(&profile, &[]),
            Err(MinSlopeViolation::Increase { .. })
        ));
    }

    #[test]
    fn wall_slope_jump_matches_kink() {
        // At t = 2 the two-wall action has ω = (6, 2) and total dual (0, 2):
        // f′ kinks from 12 to −12.
        let jump = wall_slope_jump(s2xs2(), &Class::from_int(6, 2), zc(0, 2));
        assert_eq!(jump, rat(-24));
    }
}
