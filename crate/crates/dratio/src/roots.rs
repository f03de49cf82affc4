//! Rational root extraction for univariate polynomials and homogeneous
//! binary forms.
//!
//! Roots are found exactly from integer divisor bounds on primitive integer
//! coefficient lists: a rational root `a/b` in lowest terms must have
//! `a | trailing` and `b | leading`. Divisor enumeration uses trial
//! division; inputs whose coefficients defeat the factoring bound are
//! reported through a nonconstant remainder, never silently misfactored.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::point::ProjPoint;
use crate::poly::MultiPoly;
use crate::Rational;

/// Dense univariate polynomial; `coeffs[i]` multiplies `t^i`, and the last
/// entry is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Divide by `(t - root)`; `None` if `root` is not a root.
    pub fn deflate(&self, root: &Rational) -> Option<UniPoly> {
        if self.is_zero() {
            return None;
        }
        let mut quot = vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                carry = &v * root;
                quot[i - 1] = v;
            }
        }
        Some(UniPoly::new(quot))
    }
}

/// All rational roots of a univariate polynomial with multiplicities, plus
/// the root-free remaining factor. The product of `(t - r_i)^{m_i}` and the
/// remainder equals the input up to a nonzero rational scalar.
pub fn rational_roots(p: &UniPoly) -> (Vec<(Rational, u32)>, UniPoly) {
    assert!(!p.is_zero(), "root extraction needs a nonzero polynomial");
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let mut rest = p.clone();

    // Root at zero: strip the power of t.
    let zeros = rest
        .coeffs
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros as u32));
        rest = UniPoly::new(rest.coeffs[zeros..].to_vec());
    }
    if rest.is_constant() {
        return (roots, rest);
    }

    // Primitive integer coefficients for the divisor bound.
    let mut den_lcm = BigInt::one();
    for c in &rest.coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = rest
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let trailing = ints.first().unwrap().clone();
    let leading = ints.last().unwrap().clone();

    let (nums, dens) = match (divisors(&trailing.abs()), divisors(&leading.abs())) {
        (Some(n), Some(d)) => (n, d),
        // Coefficients beyond the factoring bound: report everything left
        // as the remainder rather than guessing.
        _ => return (roots, rest),
    };

    let mut candidates: Vec<Rational> = Vec::new();
    for a in &nums {
        for b in &dens {
            if a.gcd(b).is_one() {
                candidates.push(Rational::new(a.clone(), b.clone()));
                candidates.push(Rational::new(-a.clone(), b.clone()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    for cand in candidates {
        if rest.is_constant() {
            break;
        }
        let mut mult = 0u32;
        while let Some(q) = rest.deflate(&cand) {
            mult += 1;
            rest = q;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, rest)
}

/// Divisors of `n > 0` by trial division. `None` when `n` has a composite
/// cofactor beyond the trial bound, in which case the divisor list would be
/// incomplete.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const TRIAL_BOUND: u64 = 1_000_000;
    assert!(n.is_positive() || n.is_zero());
    if n.is_zero() {
        return Some(vec![]);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        if e > 0 {
            factors.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        // No factor up to the bound: prime iff below its square.
        let bound_sq = BigInt::from(TRIAL_BOUND) * BigInt::from(TRIAL_BOUND);
        if m <= bound_sq {
            factors.push((m, 1));
        } else {
            return None;
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Rational roots (with multiplicities) of a nonzero homogeneous form in two
/// variables, as projective points, plus the root-free remainder form. The
/// product of the linear factors and the remainder is the input up to a
/// nonzero scalar.
pub struct BinaryRoots {
    pub roots: Vec<(ProjPoint, u32)>,
    pub remainder: MultiPoly,
}

pub fn binary_form_roots(form: &MultiPoly) -> BinaryRoots {
    assert_eq!(form.arity(), 2, "binary form expected");
    assert!(!form.is_zero(), "binary form must be nonzero");
    let deg = form
        .is_homogeneous()
        .expect("binary form must be homogeneous");
    let vars = form.vars().to_vec();

    let mut roots: Vec<(ProjPoint, u32)> = Vec::new();

    // Root [1 : 0] is the power of the second variable dividing the form.
    let y_order = form.monomial_content()[1];
    let mut reduced = form.clone();
    if y_order > 0 {
        reduced = reduced.divide_by_var_power(1, y_order).unwrap();
        roots.push((
            ProjPoint::new(vec![BigInt::one(), BigInt::zero()]).unwrap(),
            y_order,
        ));
    }

    if deg == y_order {
        // Nothing left but a constant.
        return BinaryRoots {
            roots,
            remainder: MultiPoly::constant(&vars, num::One::one()),
        };
    }

    // Dehomogenize at the second variable and pull univariate roots.
    let dehom = reduced.set_var_one(1);
    let uni = UniPoly::new(
        dehom
            .to_univariate(0)
            .expect("dehomogenized binary form is univariate"),
    );
    let (uroots, rem) = rational_roots(&uni);
    for (r, m) in uroots {
        let pt = ProjPoint::new(vec![r.numer().clone(), r.denom().clone()]).unwrap();
        roots.push((pt, m));
    }

    // Rehomogenize the remainder to a form of matching degree.
    let rem_deg = rem.degree().unwrap_or(0) as u32;
    let remainder = MultiPoly::from_terms(
        &vars,
        rem.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as u32, rem_deg - i as u32], c.clone())),
    );

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    BinaryRoots { roots, remainder }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn form(text: &str) -> MultiPoly {
        parse_poly(text, &vars(&["X", "Y"])).unwrap()
    }

    fn pt(a: i64, b: i64) -> ProjPoint {
        ProjPoint::new(vec![BigInt::from(a), BigInt::from(b)]).unwrap()
    }

    #[test]
    fn pure_power_of_second_variable() {
        let r = binary_form_roots(&form("Y^2"));
        assert_eq!(r.roots, vec![(pt(1, 0), 2)]);
        assert!(r.remainder.is_constant());
    }

    #[test]
    fn pure_power_of_first_variable() {
        let r = binary_form_roots(&form("X^3"));
        assert_eq!(r.roots, vec![(pt(0, 1), 3)]);
        assert!(r.remainder.is_constant());
    }

    #[test]
    fn irreducible_form_has_no_roots() {
        let r = binary_form_roots(&form("X^2 + Y^2"));
        assert!(r.roots.is_empty());
        assert_eq!(r.remainder, form("X^2 + Y^2"));
    }

    #[test]
    fn mixed_form_with_fractional_root() {
        // (2X - 3Y)^2 (X + Y) Y
        let f = form("(2*X - 3*Y)^2 * (X + Y) * Y");
        let r = binary_form_roots(&f);
        assert_eq!(
            r.roots,
            vec![(pt(-1, 1), 1), (pt(1, 0), 1), (pt(3, 2), 2)]
        );
        assert!(r.remainder.is_constant());
    }

    #[test]
    fn factor_product_matches_input_up_to_scalar() {
        let f = form("(X - 5*Y) * (X^2 + 2*Y^2) * X");
        let r = binary_form_roots(&f);
        let vs = vars(&["X", "Y"]);
        let mut product = r.remainder.clone();
        for (p, m) in &r.roots {
            let a = Rational::from_integer(p.coords()[0].clone());
            let b = Rational::from_integer(p.coords()[1].clone());
            // Linear form b*X - a*Y vanishing at [a : b].
            let lin = &MultiPoly::variable(&vs, 0).mul_scalar(&b)
                - &MultiPoly::variable(&vs, 1).mul_scalar(&a);
            for _ in 0..*m {
                product = &product * &lin;
            }
        }
        let ratio = gcd_check_scalar(&f, &product);
        assert!(ratio.is_some());
    }

    fn gcd_check_scalar(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
        // a == c * b for a nonzero rational c?
        if a.num_terms() != b.num_terms() {
            return None;
        }
        let mut scale: Option<Rational> = None;
        for ((ma, ca), (mb, cb)) in a.terms().zip(b.terms()) {
            if ma != mb {
                return None;
            }
            let r = ca / cb;
            match &scale {
                None => scale = Some(r),
                Some(s) if *s == r => {}
                _ => return None,
            }
        }
        scale
    }

    #[test]
    fn univariate_roots_with_multiplicity() {
        // (t - 1)^2 (2t + 3)
        let p = UniPoly::new(
            [3, -4, -1, 2]
                .iter()
                .map(|&n| Rational::from_integer(BigInt::from(n)))
                .collect(),
        );
        let (roots, rem) = rational_roots(&p);
        assert_eq!(
            roots,
            vec![
                (Rational::new((-3).into(), 2.into()), 1),
                (Rational::from_integer(1.into()), 2),
            ]
        );
        assert!(rem.is_constant());
    }
}
