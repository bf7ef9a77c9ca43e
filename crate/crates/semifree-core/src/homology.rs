//! The rank-2 degree-2 cohomology lattice of a ruled surface and its
//! symplectic structure: intersection pairing, first Chern class, adjunction
//! genus, the symplectic cone, and the H² isometries that symplectomorphisms
//! between reduced spaces can induce.
//!
//! Basis convention: `u` is Poincaré dual to a fiber sphere, `v` to a section.
//! For the trivial bundle Σ_g × S² the pairing is u² = 0, v² = 0, u·v = 1;
//! for the unique nontrivial bundle it is u² = 0, v² = −1, u·v = 1.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::{rat, Rat};

/// Which S²-bundle over Σ_g the reduced space is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bundle {
    /// The product Σ_g × S².
    Trivial,
    /// The unique nontrivial S²-bundle over Σ_g.
    Nontrivial,
}

/// A ruled surface: an S²-bundle over a closed surface of genus `genus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RuledSurface {
    pub bundle: Bundle,
    pub genus: u32,
}

impl RuledSurface {
    pub fn new(bundle: Bundle, genus: u32) -> Self {
        RuledSurface { bundle, genus }
    }
}

impl fmt::Display for RuledSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bundle {
            Bundle::Trivial => write!(f, "trivial bundle over genus {}", self.genus),
            Bundle::Nontrivial => write!(f, "nontrivial bundle over genus {}", self.genus),
        }
    }
}

/// An integral class x_u·u + x_v·v (duals of fixed surfaces, Euler classes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZClass {
    pub u: i64,
    pub v: i64,
}

/// Shorthand constructor for an integral class.
pub const fn zc(u: i64, v: i64) -> ZClass {
    ZClass { u, v }
}

impl ZClass {
    pub const ZERO: ZClass = zc(0, 0);

    pub fn add(self, other: ZClass) -> ZClass {
        zc(self.u + other.u, self.v + other.v)
    }

    pub fn neg(self) -> ZClass {
        zc(-self.u, -self.v)
    }

    pub fn is_zero(self) -> bool {
        self.u == 0 && self.v == 0
    }
}

impl fmt::Display for ZClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // e.g. "2u + v", "-v", "0"
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, name) in [(self.u, "u"), (self.v, "v")] {
            if coef == 0 {
                continue;
            }
            if first {
                match coef {
                    1 => write!(f, "{name}")?,
                    -1 => write!(f, "-{name}")?,
                    c => write!(f, "{c}{name}")?,
                }
                first = false;
            } else {
                let sign = if coef > 0 { "+" } else { "-" };
                match coef.abs() {
                    1 => write!(f, " {sign} {name}")?,
                    c => write!(f, " {sign} {c}{name}")?,
                }
            }
        }
        Ok(())
    }
}

/// A rational class c·u + d·v (reduced symplectic classes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub u: Rat,
    pub v: Rat,
}

impl Class {
    pub fn new(u: Rat, v: Rat) -> Self {
        Class { u, v }
    }

    pub fn from_int(u: i64, v: i64) -> Self {
        Class { u: rat(u), v: rat(v) }
    }

    pub fn sub(&self, other: &Class) -> Class {
        Class { u: &self.u - &other.u, v: &self.v - &other.v }
    }

    pub fn add(&self, other: &Class) -> Class {
        Class { u: &self.u + &other.u, v: &self.v + &other.v }
    }

    pub fn scale(&self, k: &Rat) -> Class {
        Class { u: &self.u * k, v: &self.v * k }
    }
}

impl From<ZClass> for Class {
    fn from(z: ZClass) -> Class {
        Class::from_int(z.u, z.v)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})u + ({})v", self.u, self.v)
    }
}

/// Intersection pairing of two integral classes.
///
/// Products are taken in i128: inputs are i64, so nothing can overflow.
pub fn intersection_z(surface: RuledSurface, x: ZClass, y: ZClass) -> i128 {
    let (xu, xv) = (x.u as i128, x.v as i128);
    let (yu, yv) = (y.u as i128, y.v as i128);
    let mixed = xu * yv + xv * yu;
    match surface.bundle {
        Bundle::Trivial => mixed,
        Bundle::Nontrivial => mixed - xv * yv,
    }
}

/// Intersection pairing of two rational classes.
pub fn intersection(surface: RuledSurface, x: &Class, y: &Class) -> Rat {
    let mixed = &x.u * &y.v + &x.v * &y.u;
    match surface.bundle {
        Bundle::Trivial => mixed,
        Bundle::Nontrivial => mixed - &x.v * &y.v,
    }
}

/// First Chern class of the ruled surface.
pub fn chern_class(surface: RuledSurface) -> ZClass {
    let g = surface.genus as i64;
    match surface.bundle {
        Bundle::Trivial => zc(2 - 2 * g, 2),
        Bundle::Nontrivial => zc(3 - 2 * g, 2),
    }
}

/// A class whose adjunction genus is negative cannot be the dual of an
/// embedded symplectic surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonRepresentable {
    /// The (negative) genus the adjunction formula produces.
    pub formal_genus: i64,
}

impl fmt::Display for NonRepresentable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "adjunction genus {} is negative; no embedded symplectic surface has this dual class",
            self.formal_genus
        )
    }
}

/// Genus of an embedded symplectic surface dual to `d`, from the adjunction
/// formula D·D − c₁·D = 2g' − 2.
pub fn adjunction_genus(surface: RuledSurface, d: ZClass) -> Result<i64, NonRepresentable> {
    let dd = intersection_z(surface, d, d);
    let cd = intersection_z(surface, chern_class(surface), d);
    let twice_gp_minus_2 = dd - cd;
    // c₁ is characteristic, so D·D − c₁·D is always even.
    debug_assert!((twice_gp_minus_2 + 2) % 2 == 0);
    let gp = ((twice_gp_minus_2 + 2) / 2) as i64;
    if gp < 0 {
        Err(NonRepresentable { formal_genus: gp })
    } else {
        Ok(gp)
    }
}

/// Outcome of the symplectic cone membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeVerdict {
    /// The class satisfies the cone inequalities.  `sufficient` is false for
    /// the nontrivial bundle over a positive-genus base, where the inequalities
    /// are known necessary but not known sufficient.
    Inside { sufficient: bool },
    Outside { reason: String },
}

impl ConeVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, ConeVerdict::Inside { .. })
    }
}

/// Linear inequalities (as integer normals n with n·(c,d) > 0) cutting out the
/// symplectic cone in the (c, d) coordinates of c·u + d·v.
pub fn cone_normals(surface: RuledSurface) -> [(i64, i64); 2] {
    match (surface.bundle, surface.genus) {
        // c > 0 and d > 0
        (Bundle::Trivial, _) => [(1, 0), (0, 1)],
        // c > d > 0
        (Bundle::Nontrivial, 0) => [(1, -1), (0, 1)],
        // 2c > d > 0 (necessary only)
        (Bundle::Nontrivial, _) => [(2, -1), (0, 1)],
    }
}

/// Does c·u + d·v admit a compatible symplectic form on the ruled surface?
///
/// Trivial bundle: c > 0 and d > 0.  Nontrivial over S²: c > d > 0 (an exact
/// characterisation).  Nontrivial over positive genus: 2c > d > 0, which is
/// necessary but not known to be sufficient — the verdict says so.
pub fn symplectic_cone_test(surface: RuledSurface, w: &Class) -> ConeVerdict {
    let zero = Rat::zero();
    let fail = |reason: String| ConeVerdict::Outside { reason };
    match (surface.bundle, surface.genus) {
        (Bundle::Trivial, _) => {
            if w.u <= zero {
                fail(String::from("section coefficient c must be positive"))
            } else if w.v <= zero {
                fail(String::from("fiber coefficient d must be positive"))
            } else {
                ConeVerdict::Inside { sufficient: true }
            }
        }
        (Bundle::Nontrivial, 0) => {
            if w.v <= zero {
                fail(String::from("fiber coefficient d must be positive"))
            } else if w.u <= w.v {
                fail(String::from("requires c > d on the nontrivial bundle over the sphere"))
            } else {
                ConeVerdict::Inside { sufficient: true }
            }
        }
        (Bundle::Nontrivial, _) => {
            if w.v <= zero {
                fail(String::from("fiber coefficient d must be positive"))
            } else if rat(2) * &w.u <= w.v {
                fail(String::from("requires 2c > d (positive total volume)"))
            } else {
                ConeVerdict::Inside { sufficient: false }
            }
        }
    }
}

/// Total volume ∫ω² of a class on the ruled surface.
pub fn volume(surface: RuledSurface, w: &Class) -> Rat {
    intersection(surface, w, w)
}

// ---------------------------------------------------------------------------
// Strict feasibility of finitely many homogeneous inequalities in the plane.
// ---------------------------------------------------------------------------

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = gcd64(v.0, v.1);
    if g == 0 {
        (0, 0)
    } else {
        (v.0 / g, v.1 / g)
    }
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

/// Angular half-plane index used to sort directions counterclockwise starting
/// from the positive x-axis.
fn half(v: (i64, i64)) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn angle_less(a: (i64, i64), b: (i64, i64)) -> bool {
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha < hb;
    }
    cross(a, b) > 0
}

/// Finds an integer vector x with n·x > 0 for every normal n, if one exists.
///
/// The open cone cut out by strict half-planes is nonempty exactly when some
/// cyclic angular gap between consecutive normal directions exceeds π; the
/// witness is then read off from the two normals bounding the gap.
pub fn feasible_direction(normals: &[(i64, i64)]) -> Option<(i64, i64)> {
    if normals.iter().any(|&n| n == (0, 0)) {
        return None; // a zero normal demands 0 > 0
    }
    if normals.is_empty() {
        return Some((1, 1));
    }
    let mut dirs: Vec<(i64, i64)> = normals.iter().map(|&n| primitive(n)).collect();
    dirs.sort_by(|&a, &b| {
        if a == b {
            core::cmp::Ordering::Equal
        } else if angle_less(a, b) {
            core::cmp::Ordering::Less
        } else {
            core::cmp::Ordering::Greater
        }
    });
    dirs.dedup();
    if dirs.len() == 1 {
        return Some(dirs[0]);
    }
    let m = dirs.len();
    for i in 0..m {
        let a = dirs[i];
        let b = dirs[(i + 1) % m];
        // Counterclockwise gap from a to b exceeds π iff b sits strictly
        // clockwise of a.
        if cross(a, b) < 0 {
            let witness = (a.1 - b.1, b.0 - a.0); // r90(b) − r90(a)
            if normals.iter().all(|&n| dot(n, witness) > 0) {
                return Some(witness);
            }
            debug_assert!(false, "gap witness failed verification");
        }
    }
    None
}

// ---------------------------------------------------------------------------
// H² isometries induced by symplectomorphisms of the reduced spaces.
// ---------------------------------------------------------------------------

/// Action of a diffeomorphism on H²: ψ*u = a·u + b·v, ψ*v = c·u + d·v.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };
    /// Exchanges u and v (only ever an isometry on the trivial bundle).
    pub const SWAP: Mat2 = Mat2 { a: 0, b: 1, c: 1, d: 0 };

    pub fn apply_z(&self, x: ZClass) -> ZClass {
        zc(self.a * x.u + self.c * x.v, self.b * x.u + self.d * x.v)
    }

    pub fn apply(&self, x: &Class) -> Class {
        Class {
            u: rat(self.a) * &x.u + rat(self.c) * &x.v,
            v: rat(self.b) * &x.u + rat(self.d) * &x.v,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::IDENTITY
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// The Stage-1 (pairing-preserving) matrices and the final filtered set of
/// H² actions a symplectomorphism between reduced spaces can induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryActions {
    /// All integer matrices preserving the three pairing values u², v², u·v.
    pub stage1: Vec<Mat2>,
    /// Stage-1 matrices surviving the geometric filters (some symplectic class
    /// and its image both lie in the cone; adjunction genus of the basis
    /// images is preserved).
    pub finals: Vec<Mat2>,
}

/// Brute-force search bound for Stage 1.  Every solution in fact has entries
/// in [−2, 2]; searching one notch wider and asserting nothing appears at the
/// edge is the completeness check.
const STAGE1_BOUND: i64 = 3;

/// Enumerates the H² actions of candidate symplectomorphisms of the reduced
/// space: a brute-force pass over small integer matrices preserving the
/// intersection pairing, then the geometric filters used to cut the set down
/// to the identity (and the factor swap on S²×S²).
pub fn h2_symplectomorphism_actions(surface: RuledSurface) -> IsometryActions {
    let uu = intersection_z(surface, zc(1, 0), zc(1, 0));
    let uv = intersection_z(surface, zc(1, 0), zc(0, 1));
    let vv = intersection_z(surface, zc(0, 1), zc(0, 1));

    let mut stage1 = Vec::new();
    let r = -STAGE1_BOUND..=STAGE1_BOUND;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let m = Mat2 { a, b, c, d };
                    let pu = m.apply_z(zc(1, 0));
                    let pv = m.apply_z(zc(0, 1));
                    if intersection_z(surface, pu, pu) == uu
                        && intersection_z(surface, pu, pv) == uv
                        && intersection_z(surface, pv, pv) == vv
                    {
                        assert!(
                            a.abs() < STAGE1_BOUND
                                && b.abs() < STAGE1_BOUND
                                && c.abs() < STAGE1_BOUND
                                && d.abs() < STAGE1_BOUND,
                            "pairing-preserving matrix at the search boundary; bound too small"
                        );
                        stage1.push(m);
                    }
                }
            }
        }
    }
    stage1.sort();

    let finals = stage1
        .iter()
        .copied()
        .filter(|m| survives_geometric_filters(surface, *m))
        .collect();

    IsometryActions { stage1, finals }
}

/// A symplectomorphism carries some reduced symplectic class to another, and
/// carries the fiber sphere to a symplectic sphere and a section to a surface
/// of the base genus.  In H² terms: the matrix must map some cone class into
/// the cone, and must preserve the adjunction genus of u (namely 0) and of v
/// (namely g).
fn survives_geometric_filters(surface: RuledSurface, m: Mat2) -> bool {
    // Some w with w and ψ*w both in the open cone.
    let mut normals: Vec<(i64, i64)> = Vec::new();
    for n in cone_normals(surface) {
        normals.push(n);
        // n·(ψ*w) > 0 expressed as a constraint on w = (x, y):
        // image coefficients are (a·x + c·y, b·x + d·y).
        normals.push((n.0 * m.a + n.1 * m.b, n.0 * m.c + n.1 * m.d));
    }
    if feasible_direction(&normals).is_none() {
        return false;
    }
    // Genus preservation for the basis classes.
    if adjunction_genus(surface, m.apply_z(zc(1, 0))) != Ok(0) {
        return false;
    }
    adjunction_genus(surface, m.apply_z(zc(0, 1))) == Ok(surface.genus as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn trivial(g: u32) -> RuledSurface {
        RuledSurface::new(Bundle::Trivial, g)
    }

    fn nontrivial(g: u32) -> RuledSurface {
        RuledSurface::new(Bundle::Nontrivial, g)
    }

    #[test]
    fn pairing_table() {
        for g in 0..4 {
            let s = trivial(g);
            assert_eq!(intersection_z(s, zc(1, 0), zc(1, 0)), 0);
            assert_eq!(intersection_z(s, zc(0, 1), zc(0, 1)), 0);
            assert_eq!(intersection_z(s, zc(1, 0), zc(0, 1)), 1);
            let s = nontrivial(g);
            assert_eq!(intersection_z(s, zc(1, 0), zc(1, 0)), 0);
            assert_eq!(intersection_z(s, zc(0, 1), zc(0, 1)), -1);
            assert_eq!(intersection_z(s, zc(1, 0), zc(0, 1)), 1);
        }
    }

    #[test]
    fn chern_values() {
        assert_eq!(chern_class(trivial(0)), zc(2, 2));
        assert_eq!(chern_class(trivial(2)), zc(-2, 2));
        assert_eq!(chern_class(nontrivial(0)), zc(3, 2));
        assert_eq!(chern_class(nontrivial(1)), zc(1, 2));
    }

    #[test]
    fn adjunction_basis_classes() {
        for g in 0..5 {
            // Fiber sphere and section of the base genus, on both bundles.
            assert_eq!(adjunction_genus(trivial(g), zc(1, 0)), Ok(0));
            assert_eq!(adjunction_genus(trivial(g), zc(0, 1)), Ok(g as i64));
            assert_eq!(adjunction_genus(nontrivial(g), zc(1, 0)), Ok(0));
            assert_eq!(adjunction_genus(nontrivial(g), zc(0, 1)), Ok(g as i64));
        }
    }

    #[test]
    fn adjunction_negative_genus_is_rejected() {
        // On S²×S², 2u + 2v has genus 1; 2u alone would need genus −1.
        assert_eq!(adjunction_genus(trivial(0), zc(2, 2)), Ok(1));
        assert_eq!(
            adjunction_genus(trivial(0), zc(2, 0)),
            Err(NonRepresentable { formal_genus: -1 })
        );
    }

    #[test]
    fn cone_membership() {
        let w = Class::from_int(3, 2);
        assert!(symplectic_cone_test(trivial(1), &w).is_inside());
        assert!(symplectic_cone_test(nontrivial(0), &w).is_inside());
        assert!(!symplectic_cone_test(nontrivial(0), &Class::from_int(2, 3)).is_inside());
        match symplectic_cone_test(nontrivial(2), &w) {
            ConeVerdict::Inside { sufficient } => assert!(!sufficient),
            other => panic!("expected necessary-only pass, got {other:?}"),
        }
        assert!(!symplectic_cone_test(trivial(0), &Class::from_int(0, 1)).is_inside());
    }

    #[test]
    fn feasibility_witnesses() {
        assert_eq!(feasible_direction(&[(1, 0), (0, 1)]), Some((1, 1)));
        assert!(feasible_direction(&[(1, 0), (-1, 0)]).is_none());
        assert!(feasible_direction(&[(1, 0), (0, 1), (-1, -1)]).is_none());
        let w = feasible_direction(&[(1, 0), (0, 1), (5, -1)]).expect("feasible");
        assert!(dot(w, (5, -1)) > 0 && dot(w, (1, 0)) > 0 && dot(w, (0, 1)) > 0);
    }

    #[test]
    fn stage1_nontrivial_is_the_four_known_matrices() {
        let acts = h2_symplectomorphism_actions(nontrivial(1));
        let expect = vec![
            Mat2 { a: -1, b: -2, c: 0, d: 1 },
            Mat2 { a: -1, b: 0, c: 0, d: -1 },
            Mat2 { a: 1, b: 0, c: 0, d: 1 },
            Mat2 { a: 1, b: 2, c: 0, d: -1 },
        ];
        assert_eq!(acts.stage1, expect);
    }

    #[test]
    fn stage1_trivial_is_signed_identity_and_swap() {
        let acts = h2_symplectomorphism_actions(trivial(0));
        let expect = vec![
            Mat2 { a: -1, b: 0, c: 0, d: -1 },
            Mat2 { a: 0, b: -1, c: -1, d: 0 },
            Mat2 { a: 0, b: 1, c: 1, d: 0 },
            Mat2 { a: 1, b: 0, c: 0, d: 1 },
        ];
        assert_eq!(acts.stage1, expect);
    }

    #[test]
    fn final_actions_collapse_to_identity_and_sphere_swap() {
        assert_eq!(h2_symplectomorphism_actions(trivial(0)).finals, vec![Mat2::SWAP, Mat2::IDENTITY]);
        for g in 1..4 {
            assert_eq!(h2_symplectomorphism_actions(trivial(g)).finals, vec![Mat2::IDENTITY]);
        }
        for g in 0..4 {
            assert_eq!(h2_symplectomorphism_actions(nontrivial(g)).finals, vec![Mat2::IDENTITY]);
        }
    }
}
