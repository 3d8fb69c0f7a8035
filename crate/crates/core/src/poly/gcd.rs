//! Multivariate gcd over the rationals by recursive primitive remainder
//! sequences.
//!
//! A polynomial is viewed as univariate in a main variable with coefficients
//! in the remaining variables. The gcd splits into the gcd of contents
//! (recursively, with one variable fewer) times the gcd of primitive parts,
//! computed by a pseudo-remainder sequence that is made primitive at every
//! step.

use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

type Univariate = Vec<Polynomial>;

fn to_univariate(p: &Polynomial, x: usize) -> Univariate {
    let n = p.nvars();
    let deg = p.degree_in(x) as usize;
    let mut out = vec![Polynomial::zero(n); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponent(x) as usize;
        out[e].add_term(m.with_exponent(x, 0), c.clone());
    }
    out
}

fn from_univariate(u: &[Polynomial], x: usize, n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for (k, c) in u.iter().enumerate() {
        for (m, a) in c.terms() {
            out.add_term(m.with_exponent(x, k as u16), a.clone());
        }
    }
    out
}

fn trim(u: &mut Univariate) {
    while u.len() > 1 && u.last().map(|c| c.is_zero()).unwrap_or(false) {
        u.pop();
    }
}

fn is_zero_u(u: &Univariate) -> bool {
    u.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b, b nonzero).
fn prem(a: &Univariate, b: &Univariate) -> Univariate {
    let n = b[0].nvars();
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    while !is_zero_u(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next = vec![Polynomial::zero(n); dr + 1];
        for (k, c) in r.iter().enumerate() {
            next[k] = c * &lcb;
        }
        for (k, c) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(c * &lcr);
        }
        debug_assert!(next[dr].is_zero());
        next.pop();
        r = next;
        trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}

fn content(u: &Univariate) -> Polynomial {
    let mut g: Option<Polynomial> = None;
    for c in u.iter().filter(|c| !c.is_zero()) {
        g = Some(match g {
            None => c.clone(),
            Some(g) => gcd_nonzero(&g, c),
        });
        if g.as_ref().map(|g| g.is_constant()).unwrap_or(false) {
            break;
        }
    }
    g.unwrap_or_else(|| Polynomial::zero(u[0].nvars()))
}

fn primitive_part(u: &Univariate) -> Univariate {
    let c = content(u);
    u.iter()
        .map(|p| p.div_exact(&c).expect("content divides every coefficient"))
        .collect()
}

fn gcd_nonzero(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    let order = MonomialOrder::DegRevLex;
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(n);
    }
    // main variable: the one of lowest degree among those present
    let x = (0..n)
        .filter(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .min_by_key(|&i| (a.degree_in(i).max(b.degree_in(i)), i))
        .expect("non-constant polynomial has a variable");
    let ua = to_univariate(a, x);
    let ub = to_univariate(b, x);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd_nonzero(&ca, &cb);
    let mut pa: Univariate = ua.iter().map(|p| p.div_exact(&ca).expect("content")).collect();
    let mut pb: Univariate = ub.iter().map(|p| p.div_exact(&cb).expect("content")).collect();
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = if pb.len() == 1 {
        // b is free of x: its primitive part is a unit
        vec![Polynomial::one(n)]
    } else {
        loop {
            let r = prem(&pa, &pb);
            if is_zero_u(&r) {
                break pb;
            }
            if r.len() == 1 {
                break vec![Polynomial::one(n)];
            }
            pa = pb;
            pb = primitive_part(&r);
        }
    };
    let g = from_univariate(&primitive_part(&g), x, n);
    (&c * &g).monic(order)
}

/// Greatest common divisor, normalized monic under degrevlex.
/// `gcd(a, 0)` is the normalized `a`; both zero is an error.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch(a.nvars(), b.nvars()));
    }
    let order = MonomialOrder::DegRevLex;
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::GcdOfZeros),
        (true, false) => Ok(b.monic(order)),
        (false, true) => Ok(a.monic(order)),
        (false, false) => Ok(gcd_nonzero(a, b)),
    }
}

/// Gcd of a list; zero entries are ignored. Errors if every entry is zero.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> Result<Polynomial> {
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(MonomialOrder::DegRevLex),
            Some(g) => {
                if g.is_one() {
                    return Ok(g);
                }
                poly_gcd(&g, p)?
            }
        });
    }
    acc.ok_or(Error::GcdOfZeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn p(s: &str) -> Polynomial {
        parse_default(s, 5).unwrap()
    }

    #[test]
    fn monomial_gcd() {
        assert_eq!(poly_gcd(&p("v3^2"), &p("v3*v4")).unwrap(), p("v3"));
    }

    #[test]
    fn coprime_variables() {
        assert_eq!(poly_gcd(&p("v3"), &p("v4")).unwrap(), p("1"));
    }

    #[test]
    fn shared_binomial_factor() {
        let a = p("v3^2") * p("v2 + v3");
        let b = p("v3") * p("v2 + v3").pow(2);
        let g = poly_gcd(&a, &b).unwrap();
        // oracle: exact division of both inputs, and no larger common factor
        assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        for extra in [p("v3"), p("v2 + v3"), p("v2")] {
            let bigger = &g * &extra;
            assert!(a.div_exact(&bigger).is_none() || b.div_exact(&bigger).is_none());
        }
        assert_eq!(g, p("v2*v3 + v3^2"));
    }

    #[test]
    fn zero_handling() {
        assert_eq!(poly_gcd(&p("2*v1 + 4"), &Polynomial::zero(5)).unwrap(), p("v1 + 2"));
        assert_eq!(
            poly_gcd(&Polynomial::zero(5), &Polynomial::zero(5)),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn nontrivial_multivariate() {
        let f = p("v1*v2 - v3^2 + 1");
        let a = &f * &p("v1 + v2 + v4");
        let b = &f * &p("v1 - v5^2");
        assert_eq!(poly_gcd(&a, &b).unwrap(), f.monic(MonomialOrder::DegRevLex));
    }
}
