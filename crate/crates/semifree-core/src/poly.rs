//! Quadratic polynomials with exact rational coefficients, and sign decisions
//! on open intervals.
//!
//! Everything the Duistermaat–Heckman machinery integrates is piecewise
//! polynomial of degree at most two, so sign questions (is the volume
//! positive? is the concavity expression nonpositive?) reduce to evaluating at
//! interval endpoints and at the rational vertex of a genuine quadratic.  No
//! root extraction, no floating point.

use core::fmt;

use num_traits::{Signed, Zero};

use crate::{rat, Rat};

/// c0 + c1·t + c2·t², exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub c0: Rat,
    pub c1: Rat,
    pub c2: Rat,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c0: Rat::zero(), c1: Rat::zero(), c2: Rat::zero() }
    }

    pub fn constant(c0: Rat) -> Self {
        Poly { c0, c1: Rat::zero(), c2: Rat::zero() }
    }

    pub fn affine(c0: Rat, c1: Rat) -> Self {
        Poly { c0, c1, c2: Rat::zero() }
    }

    pub fn new(c0: Rat, c1: Rat, c2: Rat) -> Self {
        Poly { c0, c1, c2 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn degree(&self) -> usize {
        if !self.c2.is_zero() {
            2
        } else if !self.c1.is_zero() {
            1
        } else {
            0
        }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        (&self.c2 * t + &self.c1) * t + &self.c0
    }

    pub fn derivative(&self) -> Poly {
        Poly::affine(self.c1.clone(), rat(2) * &self.c2)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly {
            c0: &self.c0 + &other.c0,
            c1: &self.c1 + &other.c1,
            c2: &self.c2 + &other.c2,
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly {
            c0: &self.c0 - &other.c0,
            c1: &self.c1 - &other.c1,
            c2: &self.c2 - &other.c2,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { c0: -self.c0.clone(), c1: -self.c1.clone(), c2: -self.c2.clone() }
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly { c0: &self.c0 * k, c1: &self.c1 * k, c2: &self.c2 * k }
    }

    /// Product, asserting the result still has degree at most two (all uses
    /// multiply an affine by an affine, or a constant by a quadratic).
    pub fn mul(&self, other: &Poly) -> Poly {
        let d3 = &self.c1 * &other.c2 + &self.c2 * &other.c1;
        let d4 = &self.c2 * &other.c2;
        assert!(d3.is_zero() && d4.is_zero(), "polynomial product exceeds degree 2");
        Poly {
            c0: &self.c0 * &other.c0,
            c1: &self.c0 * &other.c1 + &self.c1 * &other.c0,
            c2: &self.c0 * &other.c2 + &self.c1 * &other.c1 + &self.c2 * &other.c0,
        }
    }

    /// Vertex of a genuine quadratic, where the derivative vanishes.
    fn vertex(&self) -> Option<Rat> {
        if self.c2.is_zero() {
            None
        } else {
            Some(-&self.c1 / (rat(2) * &self.c2))
        }
    }

    /// Is p(t) > 0 for every t in the open interval (lo, hi)?
    ///
    /// Endpoint values may vanish: the interval is open.  For a convex
    /// quadratic the interior minimum at the vertex is checked exactly.
    pub fn positive_on_open(&self, lo: &Rat, hi: &Rat) -> bool {
        assert!(lo < hi, "empty interval");
        if self.is_zero() {
            return false;
        }
        let at_lo = self.eval(lo);
        let at_hi = self.eval(hi);
        if at_lo.is_negative() || at_hi.is_negative() {
            return false;
        }
        if self.c2.is_positive() {
            // Convex: the minimum over [lo, hi] sits at the vertex when the
            // vertex is interior, otherwise at an endpoint.
            if let Some(t) = self.vertex() {
                if *lo < t && t < *hi {
                    return self.eval(&t).is_positive();
                }
            }
            return true;
        }
        // Concave or affine with nonnegative endpoint values: the graph lies
        // on or above the chord, and a nonzero polynomial of degree ≤ 2
        // cannot vanish on a whole subinterval.
        true
    }

    /// Is p(t) ≤ 0 for every t in the open interval (lo, hi)?
    ///
    /// By continuity this is the same as p ≤ 0 on the closed interval, so the
    /// endpoints are checked too, plus the vertex of a concave quadratic.
    pub fn nonpositive_on_open(&self, lo: &Rat, hi: &Rat) -> bool {
        assert!(lo < hi, "empty interval");
        if self.eval(lo).is_positive() || self.eval(hi).is_positive() {
            return false;
        }
        if self.c2.is_negative() {
            if let Some(t) = self.vertex() {
                if *lo < t && t < *hi {
                    return !self.eval(&t).is_positive();
                }
            }
        }
        true
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}t + {}t^2", self.c0, self.c1, self.c2)
    }
}
