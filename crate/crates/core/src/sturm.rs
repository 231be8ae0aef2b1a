//! Exact real-root counting via Sturm chains.
//!
//! Used to certify nodelessness of the Wronskian denominators: the count is
//! exact rational arithmetic, no floating point anywhere.

use crate::poly::{poly_gcd, Polynomial, Rat};
use num_traits::{Signed, Zero};

/// Canonical Sturm chain p, p', then negated remainders down to the gcd.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let rem = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero divisor").1;
        chain.push(-&rem);
    }
}

fn sign_at_infinity(p: &Polynomial, plus: bool) -> i8 {
    let deg = p.degree().expect("chain entries are nonzero");
    let lc = p.leading().unwrap();
    let mut s: i8 = if lc.is_positive() { 1 } else { -1 };
    if !plus && deg % 2 == 1 {
        s = -s;
    }
    s
}

fn variations(signs: &[i8]) -> usize {
    signs
        .windows(2)
        .filter(|w| w[0] != 0 && w[1] != 0 && w[0] != w[1])
        .count()
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &Polynomial) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial is undefined");
    if p.degree() == Some(0) {
        return 0;
    }
    // Divide out repeated factors so the chain endpoints never vanish at a
    // root of p itself; the distinct-root count is unchanged.
    let square_free = p
        .divrem(&poly_gcd(p, &p.derivative()))
        .expect("gcd is nonzero")
        .0;
    let chain = sturm_chain(&square_free);
    let at_minus: Vec<i8> = chain.iter().map(|q| sign_at_infinity(q, false)).collect();
    let at_plus: Vec<i8> = chain.iter().map(|q| sign_at_infinity(q, true)).collect();
    variations(&at_minus) - variations(&at_plus)
}

/// True when p(x) != 0 for every real x.
pub fn is_nodeless(p: &Polynomial) -> bool {
    count_real_roots(p) == 0
}

/// Sign changes of p over the closed interval [a, b] (simple exact filter
/// used in tests; a and b must not be roots).
pub fn count_real_roots_in(p: &Polynomial, a: &Rat, b: &Rat) -> usize {
    assert!(!p.is_zero());
    let square_free = p
        .divrem(&poly_gcd(p, &p.derivative()))
        .expect("gcd is nonzero")
        .0;
    let chain = sturm_chain(&square_free);
    let sgn = |v: Rat| -> i8 {
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    };
    let at_a: Vec<i8> = chain.iter().map(|q| sgn(q.eval(a))).collect();
    let at_b: Vec<i8> = chain.iter().map(|q| sgn(q.eval(b))).collect();
    variations(&at_a) - variations(&at_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rint;

    #[test]
    fn quadratic_with_no_real_roots() {
        assert_eq!(count_real_roots(&Polynomial::from_ints(&[1, 0, 1])), 0);
        assert!(is_nodeless(&Polynomial::from_ints(&[2, 0, 0, 0, 4])));
    }

    #[test]
    fn quadratic_with_two_roots() {
        assert_eq!(count_real_roots(&Polynomial::from_ints(&[-1, 0, 1])), 2);
    }

    #[test]
    fn odd_degree_always_has_a_root() {
        assert_eq!(count_real_roots(&Polynomial::from_ints(&[12, 0, 8]).derivative()), 1);
        assert_eq!(count_real_roots(&Polynomial::from_ints(&[0, 12, 0, 8])), 1);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x - 1)^2 (x + 2)
        let p = &Polynomial::from_ints(&[1, -2, 1]) * &Polynomial::from_ints(&[2, 1]);
        assert_eq!(count_real_roots(&p), 2);
    }

    #[test]
    fn constant_has_no_roots() {
        assert_eq!(count_real_roots(&Polynomial::from_ints(&[7])), 0);
    }

    #[test]
    fn interval_count() {
        // roots at -1, 0, 3
        let p = &(&Polynomial::from_ints(&[1, 1]) * &Polynomial::from_ints(&[0, 1]))
            * &Polynomial::from_ints(&[-3, 1]);
        assert_eq!(count_real_roots_in(&p, &rint(-2), &rint(1)), 2);
        assert_eq!(count_real_roots_in(&p, &rint(1), &rint(4)), 1);
        assert_eq!(count_real_roots(&p), 3);
    }
}
