//! Whole-document validation, Hamiltonicity verdicts, and bounded exhaustive
//! enumeration.
//!
//! A document records the regular-level data of a semifree circle action on a
//! 6-manifold whose reduced spaces are a fixed ruled surface: affine class
//! paths on the intervals of regular values, walls carrying the fixed
//! components crossed there, and (for interval domains) the two extremal
//! surfaces.  The validator replays every local law — cone membership, the
//! slope law ω̇ = −e, continuity and the Euler jump at walls, per-component
//! admissibility, extremal Euler classes and collapse, seam gluing for
//! circle-valued data — and then the two global ones: log-concavity of the
//! volume f(t) = ∫ω_t², and over S²×S² the monotone step function
//! d/dt min(c, d), which must drop by at least 2 at every positive-genus wall.
//! The min-slope law is enforced only over S²×S²: over a positive-genus base
//! there are valid documents whose min-slope increases at a wall, so it is no
//! theorem there.
//!
//! For circle domains (no extrema), `decide_hamiltonian` hunts for the
//! inconsistency that forces such an action to be Hamiltonian after all: the
//! zero-sum conditions on wall duals (the Euler class must return to itself
//! around the circle, possibly after the swap at a twisted seam), constancy
//! of the volume (a periodic positive log-concave piecewise polynomial is
//! constant), and the min-slope step function (periodic and non-increasing
//! means constant).  Only an empty fixed-point set survives.
//!
//! `enumerate_configurations` reproduces the counting theorem at desk scale:
//! multisets of admissible interior components with Σb = 2, each witnessed by
//! a cone class, reported with their positive-genus totals.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::constraints::{
    classify_component, cone_witness, extremal_euler, ExtremalAnnotation, ExtremeSide,
    FixedComponent, Position,
};
use crate::dh::{
    check_log_concave, check_min_slope_monotone, dh_volume_corrected, isolated_drop, min_slope,
    LinearClassPath, MinSlopeViolation,
};
use crate::homology::{
    adjunction_genus, symplectic_cone_test, zc, Bundle, Class, RuledSurface, ZClass,
};
use crate::{rat, Rat};

/// A critical level strictly inside the domain and the fixed components in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub s: Rat,
    pub components: Vec<FixedComponent>,
}

/// The parameter space of regular values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Interval { lo: Rat, hi: Rat },
    /// `hi` is identified with `lo`.
    Circle { lo: Rat, hi: Rat },
}

impl Domain {
    pub fn bounds(&self) -> (&Rat, &Rat) {
        match self {
            Domain::Interval { lo, hi } | Domain::Circle { lo, hi } => (lo, hi),
        }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self, Domain::Circle { .. })
    }
}

/// A complete fixed-point datum: the reduced surface, the level structure,
/// and the fixed components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    pub surface: RuledSurface,
    /// Circle-domain gluing by the factor swap instead of the identity.
    /// Legal only over S²×S², and requires `seam`.
    pub twisted: bool,
    pub domain: Domain,
    /// The marked regular value where a twisted gluing is applied.
    pub seam: Option<Rat>,
    pub pieces: Vec<LinearClassPath>,
    pub walls: Vec<Wall>,
    /// Exactly one Min and one Max for interval domains, empty for circles.
    pub extrema: Vec<ExtremalAnnotation>,
}

impl ActionData {
    pub fn fixed_component_count(&self) -> usize {
        self.walls.iter().map(|w| w.components.len()).sum::<usize>() + self.extrema.len()
    }

    fn surface_duals(&self) -> Vec<ZClass> {
        self.walls
            .iter()
            .flat_map(|w| w.components.iter())
            .filter_map(|c| match c {
                FixedComponent::Surface { dual, .. } => Some(*dual),
                FixedComponent::Isolated { .. } => None,
            })
            .collect()
    }

    /// (level, total ∫e² drop) for every wall containing isolated points with
    /// legal weights.  This is the correction list the volume computation
    /// needs alongside the pieces.
    pub fn isolated_corrections(&self) -> Vec<(Rat, Rat)> {
        let mut out = Vec::new();
        for w in &self.walls {
            let triples: Vec<(i64, i64, i64)> = w
                .components
                .iter()
                .filter_map(|c| match c {
                    FixedComponent::Isolated { weights } => Some(*weights),
                    FixedComponent::Surface { .. } => None,
                })
                .filter(|&(p, q, r)| p >= 1 && q >= 1 && r >= 1)
                .collect();
            if !triples.is_empty() {
                out.push((w.s.clone(), isolated_drop(&triples).expect("weights checked")));
            }
        }
        out
    }
}

/// A tiling or ordering defect: the document does not describe a level
/// structure at all, so no rule checking is attempted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalformedDocument {
    pub detail: String,
}

impl fmt::Display for MalformedDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed document: {}", self.detail)
    }
}

/// One broken rule, located.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.location, self.rule, self.detail)
    }
}

/// The validator's output: all violations, in check order (empty = pass).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, rule: &str, location: String, detail: String) {
        self.violations.push(Violation { rule: rule.to_string(), location, detail });
    }
}

fn swap_class(w: &Class) -> Class {
    Class { u: w.v.clone(), v: w.u.clone() }
}

fn swap_z(e: ZClass) -> ZClass {
    zc(e.v, e.u)
}

/// Structural checks whose failure makes rule checking meaningless: pieces
/// tile the domain, walls sit at interior piece boundaries, extrema and seam
/// lines match the domain kind.  Rule violations (broken laws, inadmissible
/// components) are *not* checked here; a document can be well-formed and
/// still fail validation.
pub fn check_structure(data: &ActionData) -> Result<(), MalformedDocument> {
    let fail = |detail: String| Err(MalformedDocument { detail });
    let (lo, hi) = data.domain.bounds();
    if lo >= hi {
        return fail(format!("domain ({lo}, {hi}) is empty"));
    }
    if data.pieces.is_empty() {
        return fail(String::from("no pieces"));
    }
    for p in &data.pieces {
        if p.lo >= p.hi {
            return fail(format!("piece ({}, {}) is empty or reversed", p.lo, p.hi));
        }
    }
    if data.pieces.first().unwrap().lo != *lo || data.pieces.last().unwrap().hi != *hi {
        return fail(String::from("pieces do not span the domain"));
    }
    for w in data.pieces.windows(2) {
        if w[0].hi != w[1].lo {
            return fail(format!(
                "gap or overlap between pieces at ({}, {})",
                w[0].hi, w[1].lo
            ));
        }
    }
    for w in data.walls.windows(2) {
        if w[0].s >= w[1].s {
            return fail(String::from("walls are not strictly increasing"));
        }
    }
    for w in &data.walls {
        if w.s <= *lo || w.s >= *hi {
            return fail(format!("wall t = {} is not strictly inside the domain", w.s));
        }
        if w.components.is_empty() {
            return fail(format!("wall t = {} has no components", w.s));
        }
        if !data.pieces.iter().any(|p| p.hi == w.s) {
            return fail(format!("wall t = {} is not a piece boundary", w.s));
        }
    }
    if data.twisted {
        if data.surface != RuledSurface::new(Bundle::Trivial, 0) {
            return fail(String::from("twisted gluing is legal only over S\u{b2}\u{d7}S\u{b2}"));
        }
        if !data.domain.is_circle() {
            return fail(String::from(
                "twisted gluing needs a circle domain; interval data records the twisted branch \
                 on its maximum instead",
            ));
        }
        match &data.seam {
            None => return fail(String::from("twisted data requires a seam line")),
            Some(s) => {
                let boundary = *s == *lo
                    || *s == *hi
                    || data.pieces.iter().any(|p| p.hi == *s && p.hi != *hi);
                if !boundary {
                    return fail(format!("seam t = {s} is not a piece boundary"));
                }
                if data.walls.iter().any(|w| w.s == *s) {
                    return fail(format!("seam t = {s} must be a regular value, not a wall"));
                }
            }
        }
    } else if data.seam.is_some() {
        return fail(String::from("seam is only meaningful for twisted data"));
    }
    // Every interior piece boundary must carry a wall, except a twisted seam.
    for w in data.pieces.windows(2) {
        let b = &w[0].hi;
        let excused = data.seam.as_ref() == Some(b);
        if !excused && !data.walls.iter().any(|wall| wall.s == *b) {
            return fail(format!("piece boundary t = {b} carries neither a wall nor a seam"));
        }
    }
    match data.domain {
        Domain::Interval { .. } => {
            let mins = data.extrema.iter().filter(|e| e.end == ExtremeSide::Min).count();
            let maxs = data.extrema.iter().filter(|e| e.end == ExtremeSide::Max).count();
            if mins != 1 || maxs != 1 {
                return fail(format!(
                    "interval data needs exactly one minimum and one maximum \
                     (found {mins} and {maxs})"
                ));
            }
        }
        Domain::Circle { .. } => {
            if !data.extrema.is_empty() {
                return fail(String::from("circle data cannot have extrema"));
            }
        }
    }
    Ok(())
}

/// The reduced class at a wall, read from the piece just below it.
fn omega_at_wall(data: &ActionData, s: &Rat) -> Class {
    let piece = data
        .pieces
        .iter()
        .find(|p| p.hi == *s)
        .expect("wall positions are piece boundaries");
    piece.path.eval(s)
}

/// Positions of walls containing a positive-genus surface component.
fn positive_genus_walls(data: &ActionData) -> Vec<Rat> {
    data.walls
        .iter()
        .filter(|w| {
            w.components.iter().any(|c| {
                matches!(c, FixedComponent::Surface { genus, .. } if *genus >= 1)
            })
        })
        .map(|w| w.s.clone())
        .collect()
}

/// Replays every law of the level structure, in order, collecting violations.
pub fn validate_action_data(data: &ActionData) -> Result<ValidationReport, MalformedDocument> {
    check_structure(data)?;
    let mut report = ValidationReport::default();
    let surface = data.surface;

    // Per-piece: cone membership on the open interval, then the slope law.
    for piece in &data.pieces {
        let loc = format!("piece ({}, {})", piece.lo, piece.hi);
        for (n0, n1) in crate::homology::cone_normals(surface) {
            let form = piece.path.u.scale(&rat(n0)).add(&piece.path.v.scale(&rat(n1)));
            if !form.positive_on_open(&piece.lo, &piece.hi) {
                report.push(
                    "cone membership",
                    loc.clone(),
                    format!(
                        "the reduced class leaves the symplectic cone: \
                         {n0}c + {n1}d is not positive on the open interval"
                    ),
                );
            }
        }
        if !piece.slope_law_holds() {
            let (cu, cv) = piece.path.slope();
            report.push(
                "slope law",
                loc,
                format!(
                    "d/dt[\u{3c9}_t] = ({cu}, {cv}) but \u{2212}e = ({}, {})",
                    -piece.euler.u, -piece.euler.v
                ),
            );
        }
    }

    // Per-wall: continuity, the Euler jump, strict cone membership at the
    // wall itself, then each component.
    for wall in &data.walls {
        let loc = format!("wall t = {}", wall.s);
        let left = data.pieces.iter().find(|p| p.hi == wall.s).unwrap();
        let right = data.pieces.iter().find(|p| p.lo == wall.s);
        let w_s = left.path.eval(&wall.s);
        if let Some(right) = right {
            let from_right = right.path.eval(&wall.s);
            if from_right != w_s {
                report.push(
                    "class continuity",
                    loc.clone(),
                    format!("\u{3c9} jumps from {w_s} to {from_right}"),
                );
            }
            let duals: Vec<ZClass> = wall
                .components
                .iter()
                .filter_map(|c| match c {
                    FixedComponent::Surface { dual, .. } => Some(*dual),
                    FixedComponent::Isolated { .. } => None,
                })
                .collect();
            let expected = crate::dh::cross_wall_euler(left.euler, &duals);
            if right.euler != expected {
                report.push(
                    "Euler jump",
                    loc.clone(),
                    format!(
                        "e above the wall is {} but e below plus the wall duals gives {expected}",
                        right.euler
                    ),
                );
            }
        }
        if !symplectic_cone_test(surface, &w_s).is_inside() {
            report.push(
                "cone membership",
                loc.clone(),
                format!("the reduced class {w_s} at the wall is outside the symplectic cone"),
            );
        }
        for comp in &wall.components {
            let record = classify_component(comp, surface, &w_s, Position::Interior);
            if let Some(v) = record.violation {
                report.push(&v.rule, loc.clone(), v.detail);
            }
        }
    }

    // Extremal surfaces: genus, Euler class, and the collapse of the reduced
    // class at each end of the interval.
    if let Domain::Interval { lo, hi } = &data.domain {
        for ann in &data.extrema {
            let (loc, t, piece) = match ann.end {
                ExtremeSide::Min => ("extremum min", lo, data.pieces.first().unwrap()),
                ExtremeSide::Max => ("extremum max", hi, data.pieces.last().unwrap()),
            };
            if ann.genus != surface.genus {
                report.push(
                    "extremal genus",
                    loc.to_string(),
                    format!(
                        "the reduced space is ruled over the extremal surface, so its genus \
                         must be {}; the annotation claims {}",
                        surface.genus, ann.genus
                    ),
                );
            }
            match extremal_euler(surface, ann) {
                Err(e) => report.push("extremal Euler class", loc.to_string(), format!("{e}")),
                Ok(e) => {
                    if piece.euler != e {
                        report.push(
                            "extremal Euler class",
                            loc.to_string(),
                            format!(
                                "the adjacent piece records e = {} but the normal Chern \
                                 number forces {e}",
                                piece.euler
                            ),
                        );
                    }
                }
            }
            let w_end = piece.path.eval(t);
            let twisted_max = ann.end == ExtremeSide::Max && ann.twisted_branch;
            let (collapsing, surviving, names) = if twisted_max {
                (&w_end.u, &w_end.v, ("c", "d"))
            } else {
                (&w_end.v, &w_end.u, ("d", "c"))
            };
            if !collapsing.is_zero() || !surviving.is_positive() {
                report.push(
                    "extremal collapse",
                    loc.to_string(),
                    format!(
                        "at t = {t} the reduced class is {w_end}; the {} coefficient must \
                         vanish there while {} stays positive",
                        names.0, names.1
                    ),
                );
            }
        }
    }

    // Seam: the circle must close up, exactly for untwisted data and up to
    // the factor swap at the seam for twisted data.
    if let Domain::Circle { lo, hi } = &data.domain {
        let first = data.pieces.first().unwrap();
        let last = data.pieces.last().unwrap();
        let w_start = first.path.eval(lo);
        let w_end = last.path.eval(hi);
        let seam_at_join = match &data.seam {
            Some(s) => *s == *lo || *s == *hi,
            None => false,
        };
        let (expect_w, expect_e) = if seam_at_join {
            (swap_class(&w_end), swap_z(last.euler))
        } else {
            (w_end.clone(), last.euler)
        };
        if expect_w != w_start || expect_e != first.euler {
            report.push(
                "seam closure",
                String::from("seam"),
                format!(
                    "going around the circle, \u{3c9} returns as {expect_w} with e = {expect_e}, \
                     but the data restarts at {w_start} with e = {}",
                    first.euler
                ),
            );
        }
        if let Some(s) = &data.seam {
            if !seam_at_join {
                let left = data.pieces.iter().find(|p| p.hi == *s).unwrap();
                let right = data.pieces.iter().find(|p| p.lo == *s).unwrap();
                let w_left = left.path.eval(s);
                let w_right = right.path.eval(s);
                if swap_class(&w_left) != w_right || swap_z(left.euler) != right.euler {
                    report.push(
                        "seam closure",
                        format!("seam t = {s}"),
                        format!(
                            "across the seam the data must match up to the factor swap; \
                             \u{3c9} goes from {w_left} to {w_right}"
                        ),
                    );
                }
            }
        }
        let w_join = first.path.eval(lo);
        if !symplectic_cone_test(surface, &w_join).is_inside() {
            report.push(
                "cone membership",
                String::from("seam"),
                format!("the reduced class {w_join} at the circle join is outside the cone"),
            );
        }
    }

    // Global law one: the volume is continuous, positive inside, log-concave.
    let f = dh_volume_corrected(surface, &data.pieces, &data.isolated_corrections());
    if let Err(v) = check_log_concave(&f) {
        report.push("log-concavity", String::from("volume"), format!("{v}"));
    }

    // Global law two, over S²×S² only: the min-slope step function.
    if surface == RuledSurface::new(Bundle::Trivial, 0) {
        let profile = min_slope(&data.pieces);
        let pg_walls = positive_genus_walls(data);
        if let Err(v) = check_min_slope_monotone(&profile, &pg_walls) {
            report.push("min-slope monotonicity", String::from("volume"), format!("{v}"));
        }
        if data.domain.is_circle() {
            if let (Some(first), Some(last)) = (profile.steps().first(), profile.steps().last()) {
                if first.slope > last.slope {
                    report.push(
                        "min-slope monotonicity",
                        String::from("volume"),
                        format!(
                            "around the circle the slope of min(c, d) returns as {} but \
                             restarts at {}",
                            last.slope, first.slope
                        ),
                    );
                }
            }
        }
    }

    Ok(report)
}

/// The named inconsistency certifying that circle-valued data cannot avoid
/// being Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    ZeroSum,
    ZeroSum2,
    DhLogConcavity,
    MinSlopeMonotonicity,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Certificate::ZeroSum => "zerosum",
            Certificate::ZeroSum2 => "zerosum2",
            Certificate::DhLogConcavity => "DH log-concavity",
            Certificate::MinSlopeMonotonicity => "min-slope monotonicity",
        };
        write!(f, "{name}")
    }
}

/// Verdict for circle-domain data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The recorded fixed set contradicts a non-Hamiltonian circle-valued
    /// moment map; any action with this fixed set is Hamiltonian.
    Inconsistent { certificate: Certificate, detail: String },
    /// Empty fixed set, all checks pass.
    NonHamiltonianCandidate,
    /// Nonempty fixed set, but none of the implemented obstructions fired;
    /// only reachable for data violating per-component constraints.
    Undetermined { detail: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Inconsistent { certificate, detail } => write!(
                f,
                "inconsistent \u{2014} action must be Hamiltonian (certificate: {certificate}: \
                 {detail})"
            ),
            Verdict::NonHamiltonianCandidate => {
                write!(f, "consistent non-Hamiltonian candidate")
            }
            Verdict::Undetermined { detail } => write!(f, "undetermined: {detail}"),
        }
    }
}

/// Sample points deciding whether a piecewise quadratic is constant: three
/// per piece pin each quadratic down.
fn volume_samples(f: &crate::dh::PiecewisePoly) -> Vec<(Rat, Rat)> {
    let mut out = Vec::new();
    for p in f.pieces() {
        let mid = (&p.lo + &p.hi) / rat(2);
        for t in [p.lo.clone(), mid, p.hi.clone()] {
            let v = p.poly.eval(&t);
            out.push((t, v));
        }
    }
    out
}

/// Searches circle-domain data for the first inconsistency forcing the action
/// to be Hamiltonian.  Pre: structurally well-formed (tiling, continuity,
/// slope and jump laws); constraint violations are allowed and hunted.
pub fn decide_hamiltonian(data: &ActionData) -> Result<Verdict, MalformedDocument> {
    assert!(data.domain.is_circle(), "decide_hamiltonian takes circle-domain data");
    check_structure(data)?;
    let surface = data.surface;

    if data.fixed_component_count() == 0 {
        return Ok(Verdict::NonHamiltonianCandidate);
    }

    // Zero-sum: around the circle the Euler class must return to itself
    // (untwisted), or to its factor swap (twisted), so the wall duals must
    // cancel accordingly.
    let duals = data.surface_duals();
    let sum_a: i64 = duals.iter().map(|d| d.u).sum();
    let sum_b: i64 = duals.iter().map(|d| d.v).sum();
    if data.twisted {
        if sum_a + sum_b != 0 {
            return Ok(Verdict::Inconsistent {
                certificate: Certificate::ZeroSum2,
                detail: format!(
                    "\u{3a3}(a_i + b_i) = {} must vanish for a twisted gluing",
                    sum_a + sum_b
                ),
            });
        }
    } else if sum_a != 0 || sum_b != 0 {
        let all_degree_zero = !duals.is_empty() && duals.iter().all(|d| d.v == 0);
        let all_positive_area = data.walls.iter().all(|w| {
            let w_s = omega_at_wall(data, &w.s);
            w.components.iter().all(|c| match c {
                FixedComponent::Surface { dual, .. } => {
                    crate::constraints::positivity(*dual, &w_s, surface)
                }
                FixedComponent::Isolated { .. } => true,
            })
        });
        let detail = if all_degree_zero && all_positive_area {
            String::from(
                "every dual has degree zero over the base and positive area, so all a_i are \
                 positive \u{2014} all a_i positive contradicts \u{3a3}a_i = 0",
            )
        } else {
            format!("\u{3a3}a_i = {sum_a} and \u{3a3}b_i = {sum_b} must both vanish")
        };
        return Ok(Verdict::Inconsistent { certificate: Certificate::ZeroSum, detail });
    }

    // Volume constancy: periodic + positive + log-concave forces f constant,
    // and isolated points make honest constancy impossible via their ∫e² drop.
    let f = dh_volume_corrected(surface, &data.pieces, &data.isolated_corrections());
    let samples = volume_samples(&f);
    let (t0, v0) = samples.first().cloned().unwrap();
    if let Some((t1, v1)) = samples.iter().find(|(_, v)| *v != v0) {
        return Ok(Verdict::Inconsistent {
            certificate: Certificate::DhLogConcavity,
            detail: format!(
                "a periodic log-concave volume is constant, but f({t0}) = {v0} while \
                 f({t1}) = {v1}"
            ),
        });
    }

    // Min-slope over S²×S²: periodic and non-increasing forces a constant
    // step function.
    if surface == RuledSurface::new(Bundle::Trivial, 0) {
        let profile = min_slope(&data.pieces);
        let pg_walls = positive_genus_walls(data);
        match check_min_slope_monotone(&profile, &pg_walls) {
            Err(MinSlopeViolation::Increase { at, left, right }) => {
                return Ok(Verdict::Inconsistent {
                    certificate: Certificate::MinSlopeMonotonicity,
                    detail: format!(
                        "the slope of min(c, d) increases from {left} to {right} at t = {at}"
                    ),
                })
            }
            Err(MinSlopeViolation::SmallDropAtWall { at, .. }) => {
                return Ok(Verdict::Inconsistent {
                    certificate: Certificate::MinSlopeMonotonicity,
                    detail: format!(
                        "a positive-genus wall at t = {at} must drop the slope of min(c, d) \
                         by at least 2, which a periodic step function cannot absorb"
                    ),
                })
            }
            Ok(()) => {}
        }
        if let (Some(first), Some(last)) = (profile.steps().first(), profile.steps().last()) {
            if first.slope > last.slope {
                return Ok(Verdict::Inconsistent {
                    certificate: Certificate::MinSlopeMonotonicity,
                    detail: format!(
                        "around the circle the slope of min(c, d) drops from {} to {} and \
                         cannot climb back",
                        first.slope, last.slope
                    ),
                });
            }
        }
    }

    Ok(Verdict::Undetermined {
        detail: String::from(
            "no inconsistency found among zero-sum, volume constancy, and min-slope; \
             the fixed components likely violate per-component constraints",
        ),
    })
}

// ---------------------------------------------------------------------------
// Bounded exhaustive enumeration.
// ---------------------------------------------------------------------------

/// One admissible abstract configuration of interior fixed surfaces: a
/// multiset of components with Σb = 2, each on its own wall with a witness
/// cone class of positive area on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub components: Vec<FixedComponent>,
    pub witnesses: Vec<Class>,
    pub positive_genus_interior: usize,
    /// Interior count plus the two extremal surfaces when the base has
    /// positive genus.
    pub positive_genus_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub configurations: Vec<Configuration>,
    pub achievable_totals: BTreeSet<usize>,
    pub max_total: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    /// Not a single configuration fits within the bound: the search is
    /// degenerate, not empty by theorem.
    SearchBoundTooSmall,
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::SearchBoundTooSmall => {
                write!(f, "no configuration fits: the search bound is too small")
            }
        }
    }
}

#[derive(Clone, Debug)]
struct PoolEntry {
    genus: u32,
    dual: ZClass,
    witness: Class,
    /// Least possible drop of the min-slope step function at this component's
    /// wall over S²×S² (0 elsewhere): the minimum of b over realizable
    /// regimes with c > d and a over those with d > c.
    min_drop: i64,
}

/// Least min-slope drop a component can cause at its wall over S²×S², taken
/// over the regimes (c > d, drop b) and (d > c, drop a) that are feasible
/// together with the cone and the component's positivity.
fn least_min_slope_drop(surface: RuledSurface, dual: ZClass) -> i64 {
    let base: Vec<(i64, i64)> = {
        let mut v = crate::homology::cone_normals(surface).to_vec();
        v.push((dual.v, dual.u)); // positivity of the dual, trivial pairing
        v
    };
    let mut drops = Vec::new();
    let mut with = base.clone();
    with.push((1, -1)); // c − d > 0: min is d, the wall drops its slope by b
    if crate::homology::feasible_direction(&with).is_some() {
        drops.push(dual.v);
    }
    let mut with = base;
    with.push((-1, 1)); // d − c > 0: min is c, drop a
    if crate::homology::feasible_direction(&with).is_some() {
        drops.push(dual.u);
    }
    drops.into_iter().min().expect("a witnessed component has a feasible regime")
}

/// All interior components admissible at this bound, each with a witness.
fn interior_pool(surface: RuledSurface, bound: i64) -> Vec<PoolEntry> {
    let budgeted = surface == RuledSurface::new(Bundle::Trivial, 0);
    let mut pool = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let dual = zc(a, b);
            let genus = match adjunction_genus(surface, dual) {
                Ok(g) if g >= 0 => g as u32,
                _ => continue,
            };
            let witness = match cone_witness(surface, &[dual]) {
                Some(w) => w,
                None => continue,
            };
            let comp = FixedComponent::Surface { genus, dual };
            if !classify_component(&comp, surface, &witness, Position::Interior).passed() {
                continue;
            }
            let min_drop = if budgeted { least_min_slope_drop(surface, dual) } else { 0 };
            pool.push(PoolEntry { genus, dual, witness, min_drop });
        }
    }
    pool
}

/// Exhaustively enumerates admissible interior configurations: multisets of
/// at most `max_walls` components with duals bounded by `bound` and Σb = 2,
/// each witnessed individually.  Over S²×S² the min-slope budget prunes
/// multisets whose guaranteed slope drops exceed the total of 2 available
/// between the extrema.
pub fn enumerate_configurations(
    surface: RuledSurface,
    bound: i64,
    max_walls: usize,
) -> Result<Enumeration, EnumerateError> {
    assert!(bound >= 1 && max_walls >= 1);
    let budgeted = surface == RuledSurface::new(Bundle::Trivial, 0);
    let pool = interior_pool(surface, bound);
    let min_b = pool.iter().map(|e| e.dual.v).min().unwrap_or(0).min(0);
    let max_b = pool.iter().map(|e| e.dual.v).max().unwrap_or(0).max(0);
    let extremal_bonus = if surface.genus >= 1 { 2 } else { 0 };

    let mut configurations = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    fn search(
        pool: &[PoolEntry],
        budgeted: bool,
        max_walls: usize,
        min_b: i64,
        max_b: i64,
        extremal_bonus: usize,
        start: usize,
        b_sum: i64,
        drop_sum: i64,
        stack: &mut Vec<usize>,
        out: &mut Vec<Configuration>,
    ) {
        if b_sum == 2 && !stack.is_empty() {
            let mut pairs: Vec<(FixedComponent, Class)> = stack
                .iter()
                .map(|&i| {
                    (
                        FixedComponent::Surface { genus: pool[i].genus, dual: pool[i].dual },
                        pool[i].witness.clone(),
                    )
                })
                .collect();
            pairs.sort_by(|x, y| x.0.cmp(&y.0));
            let interior = stack.iter().filter(|&&i| pool[i].genus >= 1).count();
            let (components, witnesses) = pairs.into_iter().unzip();
            out.push(Configuration {
                components,
                witnesses,
                positive_genus_interior: interior,
                positive_genus_total: interior + extremal_bonus,
            });
        }
        let remaining = max_walls - stack.len();
        if remaining == 0 {
            return;
        }
        for j in start..pool.len() {
            let e = &pool[j];
            let b = b_sum + e.dual.v;
            let rem = remaining - 1;
            if b + (rem as i64) * min_b > 2 || b + (rem as i64) * max_b < 2 {
                continue;
            }
            let drops = drop_sum + e.min_drop;
            if budgeted && drops > 2 {
                continue;
            }
            stack.push(j);
            search(
                pool, budgeted, max_walls, min_b, max_b, extremal_bonus, j, b, drops, stack, out,
            );
            stack.pop();
        }
    }

    search(
        &pool,
        budgeted,
        max_walls,
        min_b,
        max_b,
        extremal_bonus,
        0,
        0,
        0,
        &mut stack,
        &mut configurations,
    );

    if configurations.is_empty() {
        return Err(EnumerateError::SearchBoundTooSmall);
    }
    let achievable_totals: BTreeSet<usize> =
        configurations.iter().map(|c| c.positive_genus_total).collect();
    let max_total = *achievable_totals.iter().max().unwrap();
    Ok(Enumeration { configurations, achievable_totals, max_total })
}

// ---------------------------------------------------------------------------
// Positive-genus counting.
// ---------------------------------------------------------------------------

/// The count together with the cross-check that a count of four forces all
/// genera equal to the base genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveGenusCount {
    pub count: usize,
    pub genera: Vec<u32>,
    pub all_equal_base: bool,
}

/// Raised when the count contradicts the counting theorem: the input data is
/// invalid, not a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremViolation {
    pub detail: String,
}

impl fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theorem violation: {}", self.detail)
    }
}

/// Counts fixed surfaces of positive genus, extrema included, and checks the
/// count against the only possible values 0, 1, 3, 4.
pub fn count_positive_genus(data: &ActionData) -> Result<PositiveGenusCount, TheoremViolation> {
    let g = data.surface.genus;
    let mut genera: Vec<u32> = data.extrema.iter().map(|e| e.genus).collect();
    for w in &data.walls {
        for c in &w.components {
            if let FixedComponent::Surface { genus, .. } = c {
                genera.push(*genus);
            }
        }
    }
    let positive: Vec<u32> = genera.iter().copied().filter(|&gi| gi >= 1).collect();
    let count = positive.len();
    if count == 2 {
        return Err(TheoremViolation {
            detail: String::from(
                "exactly two positive-genus fixed surfaces are impossible: the interior \
                 spheres forced alongside them would need nonzero degree over the base, \
                 which the degree-zero rule forbids \u{2014} the input data is invalid, \
                 not a counterexample",
            ),
        });
    }
    if count > 4 {
        return Err(TheoremViolation {
            detail: format!(
                "{count} positive-genus fixed surfaces exceed the maximum of four \u{2014} \
                 the input data is invalid, not a counterexample"
            ),
        });
    }
    let all_equal_base = positive.iter().all(|&gi| gi == g);
    if count == 4 && !all_equal_base {
        return Err(TheoremViolation {
            detail: format!(
                "four positive-genus fixed surfaces must all have the base genus {g}; found \
                 {positive:?} \u{2014} the input data is invalid, not a counterexample"
            ),
        });
    }
    Ok(PositiveGenusCount { count, genera: positive, all_equal_base })
}

// ---------------------------------------------------------------------------
// Circle-domain candidate generator.
// ---------------------------------------------------------------------------

/// Builds structurally coherent circle-domain documents from the enumerator's
/// configurations (walls at 1, 2, …, continuity and both evolution laws hold
/// by construction), together with twisted variants where the Euler classes
/// close up under the swap, and isolated-point documents.  Every one has a
/// nonempty fixed set, so each is a Hamiltonicity test case.
pub fn circle_candidates(surface: RuledSurface, bound: i64, max_walls: usize) -> Vec<ActionData> {
    let mut out = Vec::new();
    let configs = match enumerate_configurations(surface, bound, max_walls) {
        Ok(e) => e.configurations,
        Err(EnumerateError::SearchBoundTooSmall) => Vec::new(),
    };
    for config in &configs {
        out.push(circle_from_components(surface, config, false));
        let sum_a: i64 = config
            .components
            .iter()
            .filter_map(|c| match c {
                FixedComponent::Surface { dual, .. } => Some(dual.u),
                FixedComponent::Isolated { .. } => None,
            })
            .sum();
        if surface == RuledSurface::new(Bundle::Trivial, 0) && sum_a == -2 {
            out.push(circle_from_components(surface, config, true));
        }
    }
    for weights in [(1, 1, 1), (1, 1, 2), (1, 2, 3)] {
        if weights.2 <= bound {
            out.push(isolated_circle(surface, weights));
        }
    }
    out
}

/// One wall per component at t = 1, 2, …; ω anchored at the first witness and
/// evolved by the slope law; Euler classes accumulate the duals.
fn circle_from_components(
    surface: RuledSurface,
    config: &Configuration,
    twisted: bool,
) -> ActionData {
    let k = config.components.len();
    // Twisted closure: e_last = swap(e_first) with Σb = 2 forces
    // e_first = (m, m − 2); m = 0 keeps entries small.
    let e0 = if twisted { zc(0, -2) } else { zc(0, 0) };
    let mut eulers = vec![e0];
    for c in &config.components {
        let d = match c {
            FixedComponent::Surface { dual, .. } => *dual,
            FixedComponent::Isolated { .. } => zc(0, 0),
        };
        eulers.push(eulers.last().unwrap().add(d));
    }
    // ω at each integer level, anchored so that the first wall sees its
    // witness: ω(1) = witness[0].
    let mut omegas = vec![Class { u: Rat::zero(), v: Rat::zero() }; k + 2];
    omegas[1] = config.witnesses[0].clone();
    for i in 1..=k {
        let e = eulers[i];
        omegas[i + 1] = Class {
            u: &omegas[i].u - rat(e.u),
            v: &omegas[i].v - rat(e.v),
        };
    }
    let e = eulers[0];
    omegas[0] = Class {
        u: &omegas[1].u + rat(e.u),
        v: &omegas[1].v + rat(e.v),
    };
    let pieces = (0..=k)
        .map(|i| {
            let e = eulers[i];
            LinearClassPath {
                lo: rat(i as i64),
                hi: rat(i as i64 + 1),
                path: crate::dh::path_from_reference(&omegas[i], e, &rat(i as i64)),
                euler: e,
            }
        })
        .collect();
    let walls = config
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| Wall { s: rat(i as i64 + 1), components: vec![c.clone()] })
        .collect();
    ActionData {
        surface,
        twisted,
        domain: Domain::Circle { lo: rat(0), hi: rat(k as i64 + 1) },
        seam: if twisted { Some(rat(0)) } else { None },
        pieces,
        walls,
        extrema: Vec::new(),
    }
}

/// A flat circle with one isolated fixed point: every dual-sum law holds, but
/// the ∫e² drop bends the volume.
fn isolated_circle(surface: RuledSurface, weights: (i64, i64, i64)) -> ActionData {
    let w = Class::from_int(5, 2);
    let constant = |lo: i64, hi: i64| LinearClassPath {
        lo: rat(lo),
        hi: rat(hi),
        path: crate::dh::ClassPath::new(w.u.clone(), Rat::zero(), w.v.clone(), Rat::zero()),
        euler: zc(0, 0),
    };
    ActionData {
        surface,
        twisted: false,
        domain: Domain::Circle { lo: rat(0), hi: rat(2) },
        seam: None,
        pieces: vec![constant(0, 1), constant(1, 2)],
        walls: vec![Wall {
            s: rat(1),
            components: vec![FixedComponent::Isolated { weights }],
        }],
        extrema: Vec::new(),
    }
}
