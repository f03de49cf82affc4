//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`MultiPoly`] is a map from exponent vectors to nonzero rational
//! coefficients, together with an ordered list of variable names. The zero
//! polynomial has an empty term map, so structural equality of term maps is
//! equality of polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::Rational;

/// Exponent vector, ordered graded-lexicographically: first by total degree,
/// then lexicographically on the exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial `vars[idx]`.
    pub fn variable(vars: &[String], idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    /// Monomial `∏ vars[i]^exps[i]` with coefficient `c`.
    pub fn monomial(vars: &[String], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms<I>(vars: &[String], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent arity mismatch");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// The value of a constant polynomial; `None` if a variable occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Minimum total degree among terms; `None` (= +∞) for the zero
    /// polynomial. This is the order of vanishing at the origin.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[idx]).max()
    }

    /// Whether every term has the same total degree; returns it if so.
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Leading term under the graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomial arithmetic requires a common variable list"
        );
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a * c))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Substitute `images[i]` for variable `i`. All images must share one
    /// variable list; the result lives in that list.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.arity(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for img in images {
            assert_eq!(img.vars, target, "images must share a variable list");
        }
        // Power cache per variable, built lazily up to the largest exponent.
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(&target), img.clone()])
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Translate the origin: substitute `vars[i] + offsets[i]` for each
    /// variable.
    pub fn shift(&self, offsets: &[Rational]) -> MultiPoly {
        assert_eq!(offsets.len(), self.arity());
        let images: Vec<MultiPoly> = (0..self.arity())
            .map(|i| {
                &MultiPoly::variable(&self.vars, i)
                    + &MultiPoly::constant(&self.vars, offsets[i].clone())
            })
            .collect();
        self.substitute(&images)
    }

    /// Set variable `idx` to zero: drop every term where it occurs.
    pub fn set_var_zero(&self, idx: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[idx] == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Set variable `idx` to one: erase its exponent, merging terms.
    pub fn set_var_one(&self, idx: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps[idx] = 0;
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Exact division by `vars[idx]^k`; `None` if some term has a smaller
    /// exponent there.
    pub fn divide_by_var_power(&self, idx: usize, k: u32) -> Option<MultiPoly> {
        if k == 0 {
            return Some(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[idx] < k {
                return None;
            }
            let mut exps = m.0.clone();
            exps[idx] -= k;
            terms.insert(Monomial(exps), c.clone());
        }
        Some(MultiPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Per-variable minimum exponent over all terms (the monomial content).
    pub fn monomial_content(&self) -> Vec<u32> {
        let mut mins = vec![0u32; self.arity()];
        let mut first = true;
        for m in self.terms.keys() {
            if first {
                mins.copy_from_slice(&m.0);
                first = false;
            } else {
                for (a, b) in mins.iter_mut().zip(&m.0) {
                    *a = (*a).min(*b);
                }
            }
        }
        if self.is_zero() {
            mins.fill(0);
        }
        mins
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Scale to coprime integer coefficients with positive leading
    /// (graded-lex) coefficient.
    pub fn normalize_primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().map(|(_, a)| a.is_negative()) == Some(true) {
            c = -c;
        }
        self.mul_scalar(&c.recip())
    }

    /// Exact polynomial division; `None` if `divisor` does not divide
    /// `self`. Division is by leading-term reduction in the graded-lex
    /// order, which succeeds at every step exactly when the quotient exists.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.assert_compatible(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        let (dm, dc) = {
            let (m, c) = divisor.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term().unwrap();
                (m.clone(), c.clone())
            };
            let mut exps = Vec::with_capacity(rm.0.len());
            for (a, b) in rm.0.iter().zip(&dm.0) {
                if a < b {
                    return None;
                }
                exps.push(a - b);
            }
            let coef = &rc / &dc;
            let t = MultiPoly::monomial(&self.vars, exps, coef);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Coefficient of `vars[idx]^k`, as a polynomial with that variable
    /// erased (exponent zero).
    pub fn coeff_of_var_power(&self, idx: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[idx] == k {
                let mut exps = m.0.clone();
                exps[idx] = 0;
                out.add_term(Monomial(exps), c.clone());
            }
        }
        out
    }

    /// If only variable `idx` occurs, the dense coefficient list
    /// `[c_0, ..., c_d]`; otherwise `None`.
    pub fn to_univariate(&self, idx: usize) -> Option<Vec<Rational>> {
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if i != idx && e != 0 {
                    return None;
                }
            }
        }
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[idx] as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// Integer coefficient view: `None` unless every coefficient is an
    /// integer.
    pub fn integer_terms(&self) -> Option<Vec<(Vec<u32>, BigInt)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.push((m.0.clone(), c.to_integer()));
        }
        Some(out)
    }

    /// Rename variables without touching the terms; arities must match.
    pub fn with_vars(&self, vars: &[String]) -> MultiPoly {
        assert_eq!(vars.len(), self.arity());
        MultiPoly {
            vars: vars.to_vec(),
            terms: self.terms.clone(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_compatible(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical rendering: terms in descending graded-lex order, explicit
    /// `*` between factors, `^` for powers. Parses back to the same
    /// polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_constant() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str, names: &[&str]) -> MultiPoly {
        parse_poly(text, &vars(names)).unwrap()
    }

    #[test]
    fn order_at_origin_examples() {
        let q = p("x^2*y + x^4", &["x", "y"]);
        assert_eq!(q.order_at_origin(), Some(3));
        let c = p("7", &["x", "y"]);
        assert_eq!(c.order_at_origin(), Some(0));
        let z = MultiPoly::zero(&vars(&["x", "y"]));
        assert_eq!(z.order_at_origin(), None);
    }

    #[test]
    fn exact_division_round_trip() {
        let a = p("x^2 - y^2", &["x", "y"]);
        let b = p("x + y", &["x", "y"]);
        let q = a.divide_exact(&b).unwrap();
        assert_eq!(q, p("x - y", &["x", "y"]));
        assert!(p("x^2 + y", &["x", "y"]).divide_exact(&b).is_none());
    }

    #[test]
    fn shift_moves_origin() {
        let a = p("x^2 + y", &["x", "y"]);
        let shifted = a.shift(&[Rational::from_integer(1.into()), Rational::zero()]);
        assert_eq!(shifted, p("x^2 + 2*x + y + 1", &["x", "y"]));
    }

    #[test]
    fn substitution_composes() {
        let f = p("x^2 + y", &["x", "y"]);
        let gx = p("y", &["x", "y"]);
        let gy = p("x^2 + y", &["x", "y"]);
        let comp = f.substitute(&[gx, gy]);
        assert_eq!(comp, p("x^2 + y^2 + y", &["x", "y"]));
    }

    #[test]
    fn normalize_primitive_clears_content_and_sign() {
        let a = p("-2*x - 4*y", &["x", "y"]);
        let n = a.normalize_primitive();
        assert_eq!(n, p("x + 2*y", &["x", "y"]));
    }

    #[test]
    fn homogeneity_detection() {
        assert_eq!(p("x^2 + x*y", &["x", "y"]).is_homogeneous(), Some(2));
        assert_eq!(p("x^2 + y", &["x", "y"]).is_homogeneous(), None);
    }
}
