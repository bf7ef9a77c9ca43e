//! Admissibility of individual fixed components.
//!
//! A fixed surface of genus g_i inside a wall is recorded by its Poincaré
//! dual a·u + b·v.  Adjunction pins the genus: on the trivial bundle
//! (a − (1 − g))(b − 1) = g_i − g, and on the nontrivial bundle the same
//! equation holds in the substituted coordinates α = a − b/2, β = b.  An
//! embedded surface also has positive symplectic area, a sphere in a minimal
//! ruled surface cannot be an exceptional divisor, and an interior sphere over
//! a positive-genus base must have degree zero.  Isolated fixed points carry
//! the index-2 normal form (p, q, −r) with p, q, r ≥ 1 and can never be
//! extremal here, since semifree extrema with ruled reduced spaces are
//! surfaces.
//!
//! The Diophantine solver `solve_duals` enumerates dual classes exactly by
//! factoring g_i − g over ℤ, rather than scanning; a brute-force scan is kept
//! as a test oracle.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::homology::{
    adjunction_genus, cone_normals, feasible_direction, intersection, intersection_z, zc, Bundle,
    Class, RuledSurface, ZClass,
};
use crate::Rat;

/// One connected component of the fixed-point set inside a wall.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixedComponent {
    /// An embedded fixed surface of the given genus, recorded by the Poincaré
    /// dual of its image in the reduced space.
    Surface { genus: u32, dual: ZClass },
    /// An isolated fixed point in index-2 normal form: weights (p, q, −r)
    /// with p, q, r ≥ 1.  (An index-4 point is an index-2 point of the
    /// reversed action, so one normal form covers both.)
    Isolated { weights: (i64, i64, i64) },
}

/// Which end of the moment interval an extremal surface sits at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremeSide {
    Min,
    Max,
}

/// The extremal fixed surfaces are described by their genus and the first
/// Chern number of their normal bundle, not by a dual class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtremalAnnotation {
    pub end: ExtremeSide,
    pub genus: u32,
    pub normal_chern: i64,
    /// Selects the second Euler-class branch available only at the maximum
    /// over S² × S².
    pub twisted_branch: bool,
}

/// Where a component sits relative to the moment map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    Interior,
    Min,
    Max,
}

/// Symplectic-area positivity of an embedded fixed surface: ⟨w, D⟩ > 0.
pub fn positivity(dual: ZClass, w: &Class, surface: RuledSurface) -> bool {
    intersection(surface, w, &Class::from(dual)).is_positive()
}

/// All nonzero m with m | n, for small n.
fn divisors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for d in 1..=n.abs() {
        if n % d == 0 {
            out.push(d);
            out.push(-d);
        }
    }
    out
}

/// All integral duals a·u + b·v with |a|, |b| ≤ bound whose adjunction genus
/// is g_i and whose area against w_s is positive.
///
/// The hyperbola (a − (1 − g))(b − 1) = g_i − g (doubled, in the substituted
/// coordinate 2α = 2a − b, for the nontrivial bundle) is solved by divisor
/// enumeration of the right-hand side; when g_i = g it degenerates into two
/// lines which are walked directly.
pub fn solve_duals(surface: RuledSurface, g_i: u32, w_s: &Class, bound: i64) -> Vec<ZClass> {
    assert!(bound >= 1, "search bound must be at least 1");
    let g = i64::from(surface.genus);
    let n = i64::from(g_i) - g;
    let mut found = BTreeSet::new();
    let mut admit = |a: i64, b: i64| {
        if a.abs() <= bound && b.abs() <= bound {
            let d = zc(a, b);
            if adjunction_genus(surface, d) == Ok(i64::from(g_i)) && positivity(d, w_s, surface) {
                found.insert(d);
            }
        }
    };
    match surface.bundle {
        Bundle::Trivial => {
            if n == 0 {
                // Either factor vanishes: a = 1 − g or b = 1.
                for t in -bound..=bound {
                    admit(1 - g, t);
                    admit(t, 1);
                }
            } else {
                for m in divisors(n) {
                    admit(n / m + 1 - g, m + 1);
                }
            }
        }
        Bundle::Nontrivial => {
            if n == 0 {
                // Either 2a − b − 2(1 − g) = 0 or b = 1.
                for a in -bound..=bound {
                    admit(a, 2 * (a - 1 + g));
                    admit(a, 1);
                }
            } else {
                // (2a − b − 2(1 − g))(b − 1) = 2n with the two factors of
                // opposite parity, since their sum 2a + 2g − 3 is odd.
                for m in divisors(2 * n) {
                    let k = 2 * n / m;
                    if (k + m).rem_euclid(2) == 1 {
                        // k + m + 3 is even, so the division is exact.
                        admit((k + m + 3) / 2 - g, m + 1);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Why an extremal annotation fails to determine an Euler class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalEulerError {
    /// The normal Chern number must be even over the trivial bundle and odd
    /// over the nontrivial one.
    ParityMismatch { bundle: Bundle, normal_chern: i64 },
    /// The twisted branch exists only at the maximum over S² × S².
    TwistedBranchContext,
}

impl fmt::Display for ExtremalEulerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalEulerError::ParityMismatch { bundle, normal_chern } => {
                let want = match bundle {
                    Bundle::Trivial => "even",
                    Bundle::Nontrivial => "odd",
                };
                write!(
                    f,
                    "normal Chern number {normal_chern} has the wrong parity: \
                     the {bundle:?} bundle requires it to be {want}"
                )
            }
            ExtremalEulerError::TwistedBranchContext => write!(
                f,
                "the twisted Euler-class branch exists only at the maximum over S\u{b2}\u{d7}S\u{b2}"
            ),
        }
    }
}

/// Euler class of the level bundle adjacent to an extremal surface whose
/// normal bundle has first Chern number 2k (trivial) or 2k + 1 (nontrivial):
/// k·u − v just above the minimum, −k·u + v just below the maximum, or
/// u − k·v on the twisted maximal branch over S² × S².
pub fn extremal_euler(
    surface: RuledSurface,
    ann: &ExtremalAnnotation,
) -> Result<ZClass, ExtremalEulerError> {
    let n = ann.normal_chern;
    let even = n.rem_euclid(2) == 0;
    let parity_ok = match surface.bundle {
        Bundle::Trivial => even,
        Bundle::Nontrivial => !even,
    };
    if !parity_ok {
        return Err(ExtremalEulerError::ParityMismatch {
            bundle: surface.bundle,
            normal_chern: n,
        });
    }
    if ann.twisted_branch
        && !(surface.bundle == Bundle::Trivial
            && surface.genus == 0
            && ann.end == ExtremeSide::Max)
    {
        return Err(ExtremalEulerError::TwistedBranchContext);
    }
    let k = n.div_euclid(2);
    Ok(match (ann.end, ann.twisted_branch) {
        (ExtremeSide::Min, _) => zc(k, -1),
        (ExtremeSide::Max, false) => zc(-k, 1),
        (ExtremeSide::Max, true) => zc(1, -k),
    })
}

/// A sphere strictly between the extrema maps to the base with some degree;
/// over a positive-genus base that degree must be zero, i.e. the dual has no
/// v-component.  Over a rational base there is no constraint.
pub fn interior_sphere_rule(dual: ZClass, surface: RuledSurface) -> bool {
    surface.genus == 0 || dual.v == 0
}

/// The first rule a component violates, with a human-readable reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleViolation {
    pub rule: &'static str,
    pub detail: String,
}

impl fmt::Display for RuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

/// Outcome of classifying one fixed component: either a list of established
/// facts, or the first rule it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactRecord {
    pub facts: Vec<String>,
    pub violation: Option<RuleViolation>,
}

impl FactRecord {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    fn fail(rule: &'static str, detail: String) -> Self {
        FactRecord { facts: Vec::new(), violation: Some(RuleViolation { rule, detail }) }
    }
}

/// Runs every per-component rule in a fixed order — adjunction, positivity,
/// minimality, interior sphere degree, sign — and reports the first failure,
/// or the facts the component establishes.
pub fn classify_component(
    comp: &FixedComponent,
    surface: RuledSurface,
    w_s: &Class,
    position: Position,
) -> FactRecord {
    match comp {
        FixedComponent::Surface { genus, dual } => {
            classify_surface(*genus, *dual, surface, w_s, position)
        }
        FixedComponent::Isolated { weights } => classify_isolated(*weights, position),
    }
}

fn classify_surface(
    genus: u32,
    dual: ZClass,
    surface: RuledSurface,
    w_s: &Class,
    position: Position,
) -> FactRecord {
    let g = surface.genus;
    match adjunction_genus(surface, dual) {
        Err(e) => {
            return FactRecord::fail("adjunction", format!("dual {dual} is not representable: {e}"))
        }
        Ok(actual) if actual != i64::from(genus) => {
            return FactRecord::fail(
                "adjunction",
                format!("dual {dual} has adjunction genus {actual}, component claims {genus}"),
            )
        }
        Ok(_) => {}
    }
    let area = intersection(surface, w_s, &Class::from(dual));
    if !area.is_positive() {
        return FactRecord::fail(
            "positivity",
            format!("symplectic area {area} of dual {dual} is not positive"),
        );
    }
    if surface.bundle == Bundle::Nontrivial
        && g >= 1
        && genus == 0
        && intersection_z(surface, dual, dual) == -1
    {
        return FactRecord::fail(
            "minimality",
            format!("dual {dual} is an exceptional sphere in a minimal ruled surface"),
        );
    }
    if position == Position::Interior
        && genus == 0
        && !interior_sphere_rule(dual, surface)
    {
        return FactRecord::fail(
            "interior sphere degree",
            format!(
                "a fixed sphere maps to the genus-{g} base with degree {}; \
                 only degree zero is possible",
                dual.v
            ),
        );
    }
    let sign_constrained = match surface.bundle {
        Bundle::Trivial => g >= 1,
        Bundle::Nontrivial => true,
    };
    if sign_constrained && dual.v < 0 {
        return FactRecord::fail(
            "sign",
            format!("dual {dual} has negative degree {} over the base", dual.v),
        );
    }
    FactRecord {
        facts: vec![
            format!("genus {genus} surface with dual {dual}"),
            format!("symplectic area {area}"),
        ],
        violation: None,
    }
}

fn classify_isolated(weights: (i64, i64, i64), position: Position) -> FactRecord {
    let (p, q, r) = weights;
    if p < 1 || q < 1 || r < 1 {
        return FactRecord::fail(
            "isolated weights",
            format!("weights ({p}, {q}, {r}) must all be \u{2265} 1 in the (p, q, \u{2212}r) normal form"),
        );
    }
    if position != Position::Interior {
        return FactRecord::fail(
            "extremal isolated point",
            String::from("isolated fixed points cannot be extremal; the extrema are surfaces"),
        );
    }
    let drop = -crate::dh::isolated_euler_square_drop(&Rat::zero(), weights)
        .expect("weights already checked");
    FactRecord {
        facts: vec![
            format!("index-2 isolated point with weights ({p}, {q}, \u{2212}{r})"),
            format!("\u{222b}e\u{b2} drops by {drop}"),
        ],
        violation: None,
    }
}

/// A rational class with positive area on every given dual and lying in the
/// (necessary) symplectic cone, when one exists.  Feasibility is decided over
/// the cone inequalities together with one strict area form per dual.
pub fn cone_witness(surface: RuledSurface, duals: &[ZClass]) -> Option<Class> {
    let mut normals: Vec<(i64, i64)> = cone_normals(surface).to_vec();
    for d in duals {
        // ⟨cu + dv, D⟩ as a linear form in (c, d).
        normals.push(match surface.bundle {
            Bundle::Trivial => (d.v, d.u),
            Bundle::Nontrivial => (d.v, d.u - d.v),
        });
    }
    feasible_direction(&normals).map(|(c, d)| Class::from_int(c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::symplectic_cone_test;
    use crate::homology::ConeVerdict;
    use alloc::vec;

    fn trivial(g: u32) -> RuledSurface {
        RuledSurface::new(Bundle::Trivial, g)
    }

    fn nontrivial(g: u32) -> RuledSurface {
        RuledSurface::new(Bundle::Nontrivial, g)
    }

    /// Brute-force oracle for solve_duals: scan the whole square.
    fn brute_duals(surface: RuledSurface, g_i: u32, w_s: &Class, bound: i64) -> Vec<ZClass> {
        let mut out = Vec::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                let d = zc(a, b);
                if adjunction_genus(surface, d) == Ok(i64::from(g_i))
                    && positivity(d, w_s, surface)
                {
                    out.push(d);
                }
            }
        }
        out
    }

    #[test]
    fn positivity_examples() {
        let w = Class::from_int(3, 1);
        assert!(positivity(zc(0, 2), &w, trivial(2))); // area 2·3
        assert!(!positivity(zc(0, -1), &w, trivial(2))); // area −3
        let w = Class::from_int(5, 2);
        assert!(positivity(zc(1, 0), &w, nontrivial(1))); // fiber area d = 2
    }

    #[test]
    fn solver_matches_brute_force_on_sample_inputs() {
        let cases: &[(RuledSurface, u32, Class, i64)] = &[
            (trivial(1), 1, Class::from_int(2, 1), 3),
            (trivial(0), 1, Class::from_int(2, 3), 3),
            (trivial(0), 0, Class::from_int(2, 3), 4),
            (trivial(2), 2, Class::from_int(1, 1), 5),
            (trivial(3), 0, Class::from_int(1, 1), 6),
            (nontrivial(0), 0, Class::from_int(3, 1), 4),
            (nontrivial(1), 1, Class::from_int(3, 2), 5),
            (nontrivial(2), 5, Class::from_int(3, 2), 6),
            (nontrivial(1), 0, Class::from_int(3, 2), 6),
        ];
        for (s, g_i, w, bound) in cases {
            assert_eq!(
                solve_duals(*s, *g_i, w, *bound),
                brute_duals(*s, *g_i, w, *bound),
                "bundle {:?} genus {} g_i {}",
                s.bundle,
                s.genus,
                g_i
            );
        }
    }

    #[test]
    fn torus_duals_on_the_product_of_a_torus_and_a_sphere() {
        // g = g_i = 1: the degenerate case of two lines a = 0, b = 1.
        let sols = solve_duals(trivial(1), 1, &Class::from_int(2, 1), 3);
        assert!(sols.contains(&zc(0, 1)));
        // (1, 0) has adjunction genus 0, not 1, so it is not a solution.
        assert!(!sols.contains(&zc(1, 0)));
        for d in &sols {
            assert!(d.u == 0 || d.v == 1);
            assert!(d.u + 2 * d.v > 0); // positivity against 2u + v
        }
    }

    #[test]
    fn genus_one_duals_on_the_product_of_spheres_need_big_coefficients() {
        // (a − 1)(b − 1) = 1 with positive area forces a, b ≥ 2.
        for d in solve_duals(trivial(0), 1, &Class::from_int(2, 3), 3) {
            assert!(d.u >= 2 && d.v >= 2);
        }
        assert!(solve_duals(trivial(0), 1, &Class::from_int(2, 3), 3).contains(&zc(2, 2)));
    }

    #[test]
    fn genus_zero_duals_lie_on_the_two_lines() {
        for d in solve_duals(trivial(0), 0, &Class::from_int(2, 3), 4) {
            assert!(d.u == 1 || d.v == 1);
        }
    }

    #[test]
    fn extremal_euler_cases() {
        let min0 = ExtremalAnnotation {
            end: ExtremeSide::Min,
            genus: 2,
            normal_chern: 0,
            twisted_branch: false,
        };
        assert_eq!(extremal_euler(trivial(2), &min0), Ok(zc(0, -1)));

        let min_odd = ExtremalAnnotation {
            end: ExtremeSide::Min,
            genus: 1,
            normal_chern: 1,
            twisted_branch: false,
        };
        assert_eq!(extremal_euler(nontrivial(1), &min_odd), Ok(zc(0, -1)));

        let max_neg = ExtremalAnnotation {
            end: ExtremeSide::Max,
            genus: 0,
            normal_chern: -10,
            twisted_branch: false,
        };
        assert_eq!(extremal_euler(trivial(0), &max_neg), Ok(zc(5, 1)));

        let twisted = ExtremalAnnotation {
            end: ExtremeSide::Max,
            genus: 0,
            normal_chern: -2,
            twisted_branch: true,
        };
        assert_eq!(extremal_euler(trivial(0), &twisted), Ok(zc(1, 1)));

        assert!(matches!(
            extremal_euler(trivial(0), &min_odd),
            Err(ExtremalEulerError::ParityMismatch { .. })
        ));
        let twisted_min = ExtremalAnnotation {
            end: ExtremeSide::Min,
            genus: 0,
            normal_chern: 0,
            twisted_branch: true,
        };
        assert_eq!(
            extremal_euler(trivial(0), &twisted_min),
            Err(ExtremalEulerError::TwistedBranchContext)
        );
        let twisted_torus = ExtremalAnnotation {
            end: ExtremeSide::Max,
            genus: 1,
            normal_chern: 0,
            twisted_branch: true,
        };
        assert_eq!(
            extremal_euler(trivial(1), &twisted_torus),
            Err(ExtremalEulerError::TwistedBranchContext)
        );
    }

    #[test]
    fn sphere_degree_over_the_base() {
        assert!(interior_sphere_rule(zc(1, 0), trivial(1)));
        assert!(!interior_sphere_rule(zc(1, 1), trivial(1)));
        assert!(interior_sphere_rule(zc(7, -3), trivial(0)));
    }

    #[test]
    fn classification_passes_the_double_section_wall() {
        // The genus-1 component dual 2v over a torus base, as in a one-wall
        // action on T² × S²: (0 − 0)(2 − 1) = 0 = g_i − g.
        let comp = FixedComponent::Surface { genus: 1, dual: zc(0, 2) };
        let w = Class::from_int(3, 1);
        let rec = classify_component(&comp, trivial(1), &w, Position::Interior);
        assert!(rec.passed(), "{:?}", rec.violation);
        assert!(rec.facts.iter().any(|f| f.contains("genus 1")));
        assert!(rec.facts.iter().any(|f| f.contains("area 6")));
    }

    #[test]
    fn classification_rejects_in_rule_order() {
        let w = Class::from_int(2, 3);
        assert_eq!(symplectic_cone_test(nontrivial(1), &w), ConeVerdict::Inside { sufficient: false });

        // Claimed genus contradicts adjunction.
        let bad_genus = FixedComponent::Surface { genus: 1, dual: zc(1, 0) };
        let rec = classify_component(&bad_genus, trivial(1), &w, Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "adjunction");

        // Formal genus negative.
        let unrep = FixedComponent::Surface { genus: 0, dual: zc(1, -1) };
        let rec = classify_component(&unrep, nontrivial(1), &w, Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "adjunction");

        // Negative area.
        let backwards = FixedComponent::Surface { genus: 1, dual: zc(0, -2) };
        let rec = classify_component(&backwards, trivial(1), &Class::from_int(3, 1), Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "positivity");

        // The exceptional sphere −v in the nontrivial bundle over the torus:
        // genus 0, square −1, positive area against 2u + 3v — minimality is
        // the first rule it breaks, before the degree rule sees b = −1.
        let exceptional = FixedComponent::Surface { genus: 0, dual: zc(0, -1) };
        let rec = classify_component(&exceptional, nontrivial(1), &w, Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "minimality");

        // A genus-0 dual with nonzero degree over a positive-genus base.
        let wrapped = FixedComponent::Surface { genus: 0, dual: zc(-1, 2) };
        let rec = classify_component(&wrapped, trivial(1), &Class::from_int(2, 1), Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "interior sphere degree");

        // Same dual at an extremum skips the interior-only degree rule and
        // passes outright (genus 0 = adjunction genus, area 3 > 0, b ≥ 0).
        let rec = classify_component(&wrapped, trivial(1), &Class::from_int(2, 1), Position::Min);
        assert!(rec.passed(), "{:?}", rec.violation);

        // A negative-degree dual reaching the sign rule: with a class outside
        // the cone the area of (0, −2) is positive, so positivity passes and
        // sign fires.  (Inside the cone, positivity already fails.)
        let negative_degree = FixedComponent::Surface { genus: 1, dual: zc(0, -2) };
        let outside = Class::from_int(-1, 3);
        let rec = classify_component(&negative_degree, trivial(1), &outside, Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "sign");
    }

    #[test]
    fn isolated_points_classify_by_position_and_weights() {
        let w = Class::from_int(3, 1);
        let plain = FixedComponent::Isolated { weights: (1, 1, 1) };
        let rec = classify_component(&plain, trivial(0), &w, Position::Interior);
        assert!(rec.passed());
        assert!(rec.facts.iter().any(|f| f == "\u{222b}e\u{b2} drops by 1"));

        let heavier = FixedComponent::Isolated { weights: (1, 2, 3) };
        let rec = classify_component(&heavier, trivial(0), &w, Position::Interior);
        assert!(rec.facts.iter().any(|f| f == "\u{222b}e\u{b2} drops by 1/6"));

        let rec = classify_component(&plain, trivial(0), &w, Position::Max);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "extremal isolated point");

        let degenerate = FixedComponent::Isolated { weights: (1, 0, 2) };
        let rec = classify_component(&degenerate, trivial(0), &w, Position::Interior);
        assert_eq!(rec.violation.as_ref().unwrap().rule, "isolated weights");
    }

    #[test]
    fn witnesses_have_positive_area_on_their_duals() {
        let duals = vec![zc(0, 2), zc(1, 0)];
        let w = cone_witness(trivial(2), &duals).unwrap();
        assert!(matches!(
            symplectic_cone_test(trivial(2), &w),
            ConeVerdict::Inside { .. }
        ));
        for d in &duals {
            assert!(positivity(*d, &w, trivial(2)));
        }

        // A dual whose area form is the negative of the fiber's: infeasible.
        assert_eq!(cone_witness(trivial(0), &[zc(0, 1), zc(0, -1)]), None);

        // Sections of very negative self-intersection stay feasible on the
        // nontrivial bundle: area of (−2, 1) against (c, d) is d + (−2 − 1)d…
        let w = cone_witness(nontrivial(0), &[zc(-2, 1)]).unwrap();
        assert!(positivity(zc(-2, 1), &w, nontrivial(0)));
    }
}
