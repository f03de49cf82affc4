//! Multivariate polynomial GCD.
//!
//! Content/primitive-part recursion on the last active variable, with a
//! primitive pseudo-remainder sequence for the univariate step. Inputs in
//! this crate are small, so the classical algorithm is used for its
//! transparency rather than anything subquadratic.
//!
//! Results are normalized: coprime integer coefficients, positive leading
//! graded-lex coefficient. `gcd_poly(p, 0)` is the normalization of `p`.

use crate::poly::MultiPoly;

/// Normalized GCD of two polynomials over the same variable list.
pub fn gcd_poly(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.vars(), q.vars(), "gcd requires a common variable list");
    if p.is_zero() {
        return q.normalize_primitive();
    }
    if q.is_zero() {
        return p.normalize_primitive();
    }
    // Split off monomial content first. Besides being cheap, this alone
    // resolves the common case where one argument is a pure monomial (for
    // example the hyperplane coordinate of a homogenized map).
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let common: Vec<u32> = mp.iter().zip(&mq).map(|(a, b)| *a.min(b)).collect();
    let p1 = strip_monomial(p, &mp);
    let q1 = strip_monomial(q, &mq);
    let mono = MultiPoly::monomial(p.vars(), common, num::One::one());
    if p1.is_constant() || q1.is_constant() {
        return mono.normalize_primitive();
    }
    let core = gcd_inner(&p1, &q1);
    (&mono * &core).normalize_primitive()
}

/// GCD of a list, folded smallest-first so monomial coordinates collapse the
/// work early.
pub fn gcd_fold<'a, I>(polys: I) -> MultiPoly
where
    I: IntoIterator<Item = &'a MultiPoly>,
{
    let mut nonzero: Vec<&MultiPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    assert!(!nonzero.is_empty(), "gcd of an empty or all-zero list");
    nonzero.sort_by_key(|p| p.num_terms());
    let mut acc = nonzero[0].normalize_primitive();
    for p in &nonzero[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_poly(&acc, p);
    }
    acc
}

fn strip_monomial(p: &MultiPoly, mins: &[u32]) -> MultiPoly {
    let mut out = p.clone();
    for (i, &k) in mins.iter().enumerate() {
        if k > 0 {
            out = out.divide_by_var_power(i, k).expect("monomial content");
        }
    }
    out
}

fn gcd_inner(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    // Main variable: the last one occurring in either argument.
    let main = (0..p.arity())
        .rev()
        .find(|&i| p.degree_in(i).unwrap_or(0) > 0 || q.degree_in(i).unwrap_or(0) > 0);
    let main = match main {
        Some(i) => i,
        None => return MultiPoly::one(p.vars()), // both constants
    };
    let dp = p.degree_in(main).unwrap_or(0);
    let dq = q.degree_in(main).unwrap_or(0);
    if dp == 0 {
        // gcd divides p, so it cannot involve the main variable; recurse
        // against the coefficient content of q.
        return gcd_poly(p, &var_content(q, main));
    }
    if dq == 0 {
        return gcd_poly(q, &var_content(p, main));
    }

    let cp = var_content(p, main);
    let cq = var_content(q, main);
    let cont = gcd_poly(&cp, &cq);
    let pp = p.divide_exact(&cp).expect("content divides");
    let qq = q.divide_exact(&cq).expect("content divides");

    let (mut a, mut b) = if dp >= dq { (pp, qq) } else { (qq, pp) };
    loop {
        let r = pseudo_rem(&a, &b, main);
        if r.is_zero() {
            break;
        }
        a = b;
        let rc = var_content(&r, main);
        b = r.divide_exact(&rc).expect("content divides");
    }
    &cont * &b.normalize_primitive()
}

/// GCD of the coefficients of `p` viewed as univariate in `main`.
fn var_content(p: &MultiPoly, main: usize) -> MultiPoly {
    let deg = p.degree_in(main).unwrap_or(0);
    let coeffs: Vec<MultiPoly> = (0..=deg)
        .map(|k| p.coeff_of_var_power(main, k))
        .filter(|c| !c.is_zero())
        .collect();
    gcd_fold(coeffs.iter())
}

/// Pseudo-remainder of `a` by `b` in the variable `main`:
/// `lc(b)^k · a mod b` for the smallest `k` that keeps division in the ring.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, main: usize) -> MultiPoly {
    let db = b.degree_in(main).unwrap_or(0);
    let lcb = b.coeff_of_var_power(main, db);
    let mut r = a.clone();
    loop {
        let dr = match r.degree_in(main) {
            Some(d) if !r.is_zero() => d,
            _ => return r,
        };
        if r.is_zero() || dr < db {
            return r;
        }
        let lcr = r.coeff_of_var_power(main, dr);
        let shift = MultiPoly::monomial(
            a.vars(),
            {
                let mut e = vec![0; a.arity()];
                e[main] = dr - db;
                e
            },
            num::One::one(),
        );
        r = &(&r * &lcb) - &(&(&lcr * &shift) * b);
    }
}
