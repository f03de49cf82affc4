//! Normalized rational self-maps of Pⁿ.
//!
//! A [`ProjMap`] is given by `n + 1` homogeneous forms of equal degree with
//! constant GCD. The last coordinate slot is the distinguished hyperplane
//! `H = {Z = 0}`; an affine polynomial map `(f_1, ..., f_n)` homogenizes to
//! `[F_1, ..., F_n, Z^d]`, so its indeterminacy locus lies on `H`.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

use crate::gcd::{gcd_fold, gcd_poly};
use crate::point::ProjPoint;
use crate::poly::MultiPoly;
use crate::roots::binary_form_roots;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("affine map must have at least one nonconstant coordinate")]
    AllConstant,
    #[error("projective map needs at least two coordinates")]
    TooFewCoordinates,
    #[error("coordinate {index} is not homogeneous of the common degree")]
    NotHomogeneous { index: usize },
    #[error("map normalizes to degree zero")]
    DegenerateDegree,
    #[error("all coordinates vanish identically")]
    ZeroMap,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// Polynomial self-map of Aⁿ.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineMap {
    vars: Vec<String>,
    coords: Vec<MultiPoly>,
}

impl AffineMap {
    pub fn new(vars: Vec<String>, coords: Vec<MultiPoly>) -> Result<Self, MapError> {
        assert_eq!(vars.len(), coords.len(), "one coordinate per variable");
        for c in &coords {
            assert_eq!(c.vars(), &vars[..], "coordinate in the wrong variables");
        }
        if coords.iter().all(|c| c.is_constant()) {
            return Err(MapError::AllConstant);
        }
        Ok(AffineMap { vars, coords })
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.coords
            .iter()
            .filter_map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.coords.iter().map(|c| c.eval(point)).collect()
    }

    /// `self ∘ other` as a polynomial map.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap, MapError> {
        if self.dim() != other.dim() {
            return Err(MapError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.substitute(&other.coords))
            .collect();
        AffineMap::new(other.vars.clone(), coords)
    }

    /// Homogenize to a normalized self-map of Pⁿ of degree
    /// `d = max deg f_i`, with the homogenizing coordinate `Z^d` last.
    pub fn homogenize(&self) -> ProjMap {
        let d = self.degree();
        let proj_vars = projective_var_names(&self.vars);
        let z = self.vars.len();
        let mut coords: Vec<MultiPoly> = self
            .coords
            .iter()
            .map(|c| {
                MultiPoly::from_terms(
                    &proj_vars,
                    c.terms().map(|(m, coeff)| {
                        let mut exps = m.0.clone();
                        let total: u32 = exps.iter().sum();
                        exps.push(d - total);
                        (exps, coeff.clone())
                    }),
                )
            })
            .collect();
        let mut z_exps = vec![0u32; proj_vars.len()];
        z_exps[z] = d;
        coords.push(MultiPoly::monomial(&proj_vars, z_exps, Rational::one()));
        ProjMap::new(coords).expect("homogenization of an affine map is valid")
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineMap{self}")
    }
}

/// Variable names for the projective closure: uppercase the affine names
/// when that stays unambiguous, and append a fresh homogenizing name.
pub fn projective_var_names(affine: &[String]) -> Vec<String> {
    let upper: Vec<String> = affine.iter().map(|v| v.to_uppercase()).collect();
    let mut candidate = upper.clone();
    candidate.push("Z".to_string());
    let distinct = candidate
        .iter()
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        == candidate.len();
    if distinct {
        return candidate;
    }
    let mut fallback = affine.to_vec();
    for name in ["Z", "W", "T", "U", "V"] {
        if !affine.iter().any(|v| v.eq_ignore_ascii_case(name)) {
            fallback.push(name.to_string());
            return fallback;
        }
    }
    fallback.push("Z_h".to_string());
    fallback
}

/// Normalized rational self-map of Pⁿ.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjMap {
    coords: Vec<MultiPoly>,
    degree: u32,
}

impl ProjMap {
    /// Build and normalize: divide out the coordinate GCD and scale to
    /// coprime integer coefficients with a canonical sign.
    pub fn new(coords: Vec<MultiPoly>) -> Result<Self, MapError> {
        if coords.len() < 2 {
            return Err(MapError::TooFewCoordinates);
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(MapError::ZeroMap);
        }
        let mut raw_degree = None;
        for (index, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (c.is_homogeneous(), raw_degree) {
                (Some(d), None) => raw_degree = Some(d),
                (Some(d), Some(d0)) if d == d0 => {}
                _ => return Err(MapError::NotHomogeneous { index }),
            }
        }
        let g = gcd_fold(coords.iter());
        let mut coords: Vec<MultiPoly> = coords
            .iter()
            .map(|c| c.divide_exact(&g).expect("gcd divides coordinates"))
            .collect();

        // Canonical scalar: primitive integer coefficients over the whole
        // coordinate list, first nonzero leading coefficient positive.
        let joint_content = {
            let mut acc: Option<Rational> = None;
            for c in &coords {
                if c.is_zero() {
                    continue;
                }
                let ct = c.content();
                acc = Some(match acc {
                    None => ct,
                    Some(prev) => {
                        // gcd of two positive rationals.
                        let num = prev.numer().gcd(ct.numer());
                        let den = prev.denom().lcm(ct.denom());
                        Rational::new(num, den)
                    }
                });
            }
            acc.expect("nonzero map")
        };
        let mut scale = joint_content.recip();
        if let Some(first) = coords.iter().find(|c| !c.is_zero()) {
            if first.leading_term().map(|(_, a)| a.is_negative()) == Some(true) {
                scale = -scale;
            }
        }
        for c in &mut coords {
            *c = c.mul_scalar(&scale);
        }

        let degree = coords
            .iter()
            .filter(|c| !c.is_zero())
            .filter_map(|c| c.is_homogeneous())
            .next();
        let degree = match degree {
            Some(d) if d >= 1 => d,
            _ => return Err(MapError::DegenerateDegree),
        };
        Ok(ProjMap { coords, degree })
    }

    pub fn identity(n: usize, vars: &[String]) -> Self {
        assert_eq!(vars.len(), n + 1);
        let coords = (0..=n).map(|i| MultiPoly::variable(vars, i)).collect();
        ProjMap::new(coords).expect("identity map is valid")
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    pub fn vars(&self) -> &[String] {
        self.coords[0].vars()
    }

    /// `self ∘ other`: substitute the coordinates of `other` into `self`,
    /// then renormalize. Degree can drop when the raw coordinates share a
    /// factor.
    pub fn compose(&self, other: &ProjMap) -> Result<ProjMap, MapError> {
        if self.dim() != other.dim() {
            return Err(MapError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let raw: Vec<MultiPoly> = self
            .coords
            .iter()
            .map(|c| c.substitute(&other.coords))
            .collect();
        if raw.iter().all(|c| c.is_zero()) {
            return Err(MapError::ZeroMap);
        }
        ProjMap::new(raw)
    }

    /// Evaluate at integer projective coordinates, reducing to a canonical
    /// point. `None` if the point is a base point (all coordinates vanish).
    pub fn eval_point(&self, p: &ProjPoint) -> Option<ProjPoint> {
        let values: Vec<Rational> = p
            .coords()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let image: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| {
                let v = c.eval(&values);
                debug_assert!(v.is_integer(), "integer coefficients on integer input");
                v.to_integer()
            })
            .collect();
        ProjPoint::new(image).ok()
    }

    /// Restriction of each coordinate to `Z = 0`, as forms in the first
    /// `n` variables.
    fn restrictions_at_infinity(&self) -> Vec<MultiPoly> {
        let z = self.dim();
        let reduced_vars: Vec<String> = self.vars()[..z].to_vec();
        self.coords
            .iter()
            .map(|c| {
                let r = c.set_var_zero(z);
                MultiPoly::from_terms(
                    &reduced_vars,
                    r.terms().map(|(m, coeff)| {
                        (m.0[..z].to_vec(), coeff.clone())
                    }),
                )
            })
            .collect()
    }

    /// Local affine chart of P² centered at a point of `H`, with the chart
    /// coordinates renamed `(u, v)` where `v` is the hyperplane coordinate.
    /// Returns the three dehomogenized coordinates, translated so the point
    /// sits at the origin.
    pub fn local_system_at_h_point(&self, p: &ProjPoint) -> [MultiPoly; 3] {
        assert_eq!(self.dim(), 2, "local charts are for plane maps");
        assert!(p.is_at_infinity(), "point must lie on the hyperplane");
        let chart_vars: Vec<String> = vec!["u".to_string(), "v".to_string()];
        let (x, y) = (p.coords()[0].clone(), p.coords()[1].clone());
        let u = MultiPoly::variable(&chart_vars, 0);
        let v = MultiPoly::variable(&chart_vars, 1);
        // Using the chart where the larger coordinate is 1, the point is at
        // u = x/y (or y/x), and v = 0 on the hyperplane.
        let (images, offset) = if !y.is_zero() {
            // X = u, Y = 1, Z = v
            (
                vec![u.clone(), MultiPoly::one(&chart_vars), v.clone()],
                Rational::new(x, y),
            )
        } else {
            // X = 1, Y = u, Z = v
            (
                vec![MultiPoly::one(&chart_vars), u.clone(), v.clone()],
                Rational::new(y, x),
            )
        };
        let mut out: Vec<MultiPoly> = self
            .coords
            .iter()
            .map(|c| c.substitute(&images).shift(&[offset.clone(), Rational::zero()]))
            .collect();
        let c2 = out.pop().unwrap();
        let c1 = out.pop().unwrap();
        let c0 = out.pop().unwrap();
        [c0, c1, c2]
    }
}

impl fmt::Display for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMap{self} (degree {})", self.degree)
    }
}

/// Rational base points of a plane map on `H`, with the local multiplicity
/// of the coordinate system, plus the root-free factor of the restricted
/// system if the base locus has non-rational points.
#[derive(Clone, Debug)]
pub struct BasePointReport {
    pub rational_points: Vec<(ProjPoint, u32)>,
    pub irrational_factor: Option<MultiPoly>,
}

impl BasePointReport {
    pub fn is_morphism(&self) -> bool {
        self.rational_points.is_empty() && self.irrational_factor.is_none()
    }
}

/// Base points of a normalized plane map. All of them lie on `Z = 0`; the
/// multiplicity is the minimum order of vanishing of the three local chart
/// coordinates at the point.
pub fn base_points_p2(map: &ProjMap) -> BasePointReport {
    assert_eq!(map.dim(), 2, "base-point search is for plane maps");
    let restrictions = map.restrictions_at_infinity();
    let nonzero: Vec<&MultiPoly> = restrictions.iter().filter(|r| !r.is_zero()).collect();
    assert!(
        !nonzero.is_empty(),
        "normalized map cannot vanish identically on the hyperplane"
    );
    let common = gcd_fold(nonzero.iter().copied());
    if common.is_constant() {
        return BasePointReport {
            rational_points: Vec::new(),
            irrational_factor: None,
        };
    }
    let roots = binary_form_roots(&common);
    let mut rational_points = Vec::new();
    for (pt, _) in &roots.roots {
        let proj = ProjPoint::new(vec![
            pt.coords()[0].clone(),
            pt.coords()[1].clone(),
            BigInt::zero(),
        ])
        .unwrap();
        let local = map.local_system_at_h_point(&proj);
        let mult = local
            .iter()
            .filter_map(|p| p.order_at_origin())
            .min()
            .expect("system does not vanish identically");
        rational_points.push((proj, mult));
    }
    rational_points.sort_by(|a, b| a.0.cmp(&b.0));
    let irrational_factor = if roots.remainder.is_constant() {
        None
    } else {
        Some(roots.remainder)
    };
    BasePointReport {
        rational_points,
        irrational_factor,
    }
}

/// Two plane maps are jointly regular when their base loci are disjoint: no
/// common rational base point, and the non-rational factors share no root.
pub fn is_jointly_regular(f1: &ProjMap, f2: &ProjMap) -> bool {
    let r1 = base_points_p2(f1);
    let r2 = base_points_p2(f2);
    for (p, _) in &r1.rational_points {
        if r2.rational_points.iter().any(|(q, _)| q == p) {
            return false;
        }
    }
    match (&r1.irrational_factor, &r2.irrational_factor) {
        (Some(a), Some(b)) => {
            let b = b.with_vars(a.vars());
            gcd_poly(a, &b).is_constant()
        }
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    pub fn affine(coords: &[&str], names: &[&str]) -> AffineMap {
        let vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let polys = coords
            .iter()
            .map(|c| parse_poly(c, &vars).unwrap())
            .collect();
        AffineMap::new(vars, polys).unwrap()
    }

    fn proj_poly(text: &str) -> MultiPoly {
        let vars: Vec<String> = ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect();
        parse_poly(text, &vars).unwrap()
    }

    fn pt(coords: &[i64]) -> ProjPoint {
        ProjPoint::new(coords.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn homogenization_examples() {
        let f = affine(&["x^3 + y", "x + y^2"], &["x", "y"]);
        let hf = f.homogenize();
        assert_eq!(hf.degree(), 3);
        assert_eq!(hf.coords()[0], proj_poly("X^3 + Y*Z^2"));
        assert_eq!(hf.coords()[1], proj_poly("X*Z^2 + Y^2*Z"));
        assert_eq!(hf.coords()[2], proj_poly("Z^3"));

        let f0 = affine(&["x", "y^2"], &["x", "y"]);
        let hf0 = f0.homogenize();
        assert_eq!(hf0.degree(), 2);
        assert_eq!(hf0.coords()[0], proj_poly("X*Z"));
        assert_eq!(hf0.coords()[1], proj_poly("Y^2"));
        assert_eq!(hf0.coords()[2], proj_poly("Z^2"));

        let g = affine(&["y", "x^2 + y"], &["x", "y"]);
        let hg = g.homogenize();
        assert_eq!(hg.degree(), 2);
        assert_eq!(hg.coords()[0], proj_poly("Y*Z"));
        assert_eq!(hg.coords()[1], proj_poly("X^2 + Y*Z"));
        assert_eq!(hg.coords()[2], proj_poly("Z^2"));
    }

    #[test]
    fn all_constant_affine_map_is_rejected() {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let polys = vec![
            parse_poly("1", &vars).unwrap(),
            parse_poly("2", &vars).unwrap(),
        ];
        assert!(matches!(
            AffineMap::new(vars, polys),
            Err(MapError::AllConstant)
        ));
    }

    #[test]
    fn composition_divides_out_common_factor() {
        let g = affine(&["y", "x^2 + y"], &["x", "y"]).homogenize();
        let gg = g.compose(&g).unwrap();
        assert_eq!(gg.degree(), 2);
        assert_eq!(gg.coords()[0], proj_poly("X^2 + Y*Z"));
        assert_eq!(gg.coords()[1], proj_poly("X^2 + Y^2 + Y*Z"));
        assert_eq!(gg.coords()[2], proj_poly("Z^2"));
        assert!(base_points_p2(&gg).is_morphism());
    }

    #[test]
    fn nagata_map_self_composition_keeps_degree_five() {
        let q = "x^2 - y*z";
        let f = affine(
            &[
                &format!("x + ({q})*z"),
                &format!("y + 2*({q})*x + ({q})^2*z"),
                "z",
            ],
            &["x", "y", "z"],
        );
        let hf = f.homogenize();
        assert_eq!(hf.degree(), 5);
        let ff = hf.compose(&hf).unwrap();
        assert_eq!(ff.degree(), 5);
        // The squared map agrees with the closed form with doubled shear.
        let f2 = affine(
            &[
                &format!("x + 2*({q})*z"),
                &format!("y + 4*({q})*x + 4*({q})^2*z"),
                "z",
            ],
            &["x", "y", "z"],
        )
        .homogenize();
        assert_eq!(ff, f2);
    }

    #[test]
    fn composing_with_identity_is_identity_operation() {
        let f = affine(&["x^3 + y", "x + y^2"], &["x", "y"]).homogenize();
        let id = ProjMap::identity(2, &f.vars().to_vec());
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
    }

    #[test]
    fn base_points_of_named_maps() {
        let f = affine(&["x^3 + y", "x + y^2"], &["x", "y"]).homogenize();
        let rep = base_points_p2(&f);
        assert_eq!(rep.rational_points, vec![(pt(&[0, 1, 0]), 1)]);
        assert!(rep.irrational_factor.is_none());

        let f0 = affine(&["x", "y^2"], &["x", "y"]).homogenize();
        let rep0 = base_points_p2(&f0);
        assert_eq!(rep0.rational_points, vec![(pt(&[1, 0, 0]), 1)]);

        let gg = affine(&["x^2 + y", "x^2 + y^2 + y"], &["x", "y"]).homogenize();
        assert!(base_points_p2(&gg).is_morphism());
    }

    #[test]
    fn base_points_vanish_on_all_coordinates() {
        let f = affine(&["x^3 + y", "x + y^2"], &["x", "y"]).homogenize();
        for (p, _) in base_points_p2(&f).rational_points {
            let vals: Vec<Rational> = p
                .coords()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            for c in f.coords() {
                assert!(c.eval(&vals).is_zero());
            }
            assert!(p.is_at_infinity());
        }
    }

    #[test]
    fn joint_regularity_of_invertible_pair() {
        let f = affine(&["y", "x + y^2"], &["x", "y"]).homogenize();
        let finv = affine(&["y - x^2", "x"], &["x", "y"]).homogenize();
        assert!(is_jointly_regular(&f, &finv));

        let shear = affine(&["x - y^3", "y"], &["x", "y"]).homogenize();
        assert!(!is_jointly_regular(&shear, &shear));

        let morph = affine(&["x^2", "y^2"], &["x", "y"]).homogenize();
        assert!(is_jointly_regular(&morph, &shear));
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = affine(&["x^3 + y", "x + y^2"], &["x", "y"]).homogenize();
        let renorm = ProjMap::new(f.coords().to_vec()).unwrap();
        assert_eq!(f, renorm);
    }

    #[test]
    fn irrational_base_points_are_surfaced_not_dropped() {
        // Restrictions to Z = 0 share the factor X^2 - 2*Y^2, which has no
        // rational roots.
        let f = affine(
            &["x^3 - 2*x*y^2", "x^3 - 2*x*y^2 + y"],
            &["x", "y"],
        )
        .homogenize();
        let rep = base_points_p2(&f);
        assert_eq!(rep.rational_points.len(), 1); // [0 : 1 : 0]
        let factor = rep.irrational_factor.expect("irrational factor");
        assert_eq!(factor.total_degree(), Some(2));
    }
}
