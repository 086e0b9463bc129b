//! Points of the Poincare ball model, finite or ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;

/// Guard band keeping finite points strictly inside the unit ball.
pub const BALL_GUARD: f64 = 1e-12;
/// Tolerance on `| |x| - 1 |` for ideal (boundary) points.
pub const IDEAL_TOL: f64 = 1e-9;

/// A point of the open unit ball, or an ideal point of its boundary sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelPoint {
    coords: Vec<f64>,
    ideal: bool,
}

impl ModelPoint {
    /// Finite point; requires `|coords| < 1 - 1e-12`.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let n = linalg::norm(&coords);
        if !n.is_finite() || n >= 1.0 - BALL_GUARD {
            return Err(Error::InvariantViolation(format!(
                "finite model point must satisfy |coords| < 1 - 1e-12 (got |coords| = {n})"
            )));
        }
        Ok(Self { coords, ideal: false })
    }

    /// Ideal boundary point; requires `| |coords| - 1 | <= 1e-9`.
    /// Coordinates are renormalized onto the unit sphere.
    pub fn ideal(coords: Vec<f64>) -> Result<Self> {
        let n = linalg::norm(&coords);
        if !n.is_finite() || (n - 1.0).abs() > IDEAL_TOL {
            return Err(Error::InvariantViolation(format!(
                "ideal point must have | |coords| - 1 | <= 1e-9 (got |coords| = {n})"
            )));
        }
        Ok(Self {
            coords: linalg::scale(&coords, 1.0 / n),
            ideal: true,
        })
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
            ideal: false,
        }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_ideal(&self) -> bool {
        self.ideal
    }

    pub fn norm(&self) -> f64 {
        linalg::norm(&self.coords)
    }

    pub(crate) fn finite_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!(linalg::norm(&coords) < 1.0 - BALL_GUARD / 2.0);
        Self { coords, ideal: false }
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        if self.ideal {
            Err(Error::IdealPointArgument)
        } else {
            Ok(())
        }
    }
}

/// Hyperbolic distance between two finite model points.
///
/// `d(x, y) = 2 artanh( |x - y| / sqrt((1-|x|^2)(1-|y|^2) + |x-y|^2) )`,
/// the stable form of the translate-to-origin value `2 artanh |y'|`.
pub fn hyperbolic_distance(p: &ModelPoint, q: &ModelPoint) -> Result<f64> {
    p.require_finite()?;
    q.require_finite()?;
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    let d2 = linalg::dist_sq(p.coords(), q.coords());
    if d2 == 0.0 {
        return Ok(0.0);
    }
    let den = (1.0 - linalg::norm_sq(p.coords())) * (1.0 - linalg::norm_sq(q.coords())) + d2;
    Ok(2.0 * (d2 / den).sqrt().atanh())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_coincident_points_is_zero() {
        let p = ModelPoint::new(vec![0.1, -0.3]).unwrap();
        assert_eq!(hyperbolic_distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn distance_from_origin_is_two_artanh_r() {
        let o = ModelPoint::origin(2);
        let p = ModelPoint::new(vec![0.5, 0.0]).unwrap();
        let d = hyperbolic_distance(&o, &p).unwrap();
        assert!((d - 3.0f64.ln()).abs() < 1e-15, "d = {d}");
    }

    #[test]
    fn distance_is_additive_along_a_diameter() {
        // 2(artanh 0.6 - artanh 0.3) = ln(28/13)
        let p = ModelPoint::new(vec![0.3, 0.0]).unwrap();
        let q = ModelPoint::new(vec![0.6, 0.0]).unwrap();
        let d = hyperbolic_distance(&p, &q).unwrap();
        let expect = (28.0f64 / 13.0).ln();
        assert!((d - expect).abs() < 1e-14, "d = {d}, expect = {expect}");
    }

    #[test]
    fn distance_rejects_ideal_arguments() {
        let u = ModelPoint::ideal(vec![1.0, 0.0]).unwrap();
        let p = ModelPoint::new(vec![0.2, 0.0]).unwrap();
        assert_eq!(hyperbolic_distance(&u, &p), Err(Error::IdealPointArgument));
    }

    #[test]
    fn finite_point_rejects_boundary_coords() {
        assert!(ModelPoint::new(vec![1.0, 0.0]).is_err());
        assert!(ModelPoint::new(vec![0.999999999999, 0.0]).is_err());
    }

    #[test]
    fn ideal_point_requires_unit_norm() {
        assert!(ModelPoint::ideal(vec![0.5, 0.0]).is_err());
        assert!(ModelPoint::ideal(vec![1.0 + 5e-10, 0.0]).is_ok());
    }
}
