//! Expansion of a polynomial in a triangular polynomial basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::{Degree, Poly};
use super::rational::Rational;
use crate::error::Error;

/// Expand `p` as `Σ_m coef[m]·basis[m] + remainder`, where `basis[m]` has
/// degree exactly `offset + m`. Coefficients are found by descending
/// leading-coefficient elimination; the remainder has degree `< offset`.
///
/// Fails if `p` has degree beyond the supplied basis or a basis element has
/// the wrong degree.
pub fn expand_in_basis(
    p: &Poly,
    basis: &[Poly],
    offset: usize,
) -> Result<(Vec<Rational>, Poly), Error> {
    let mut rem = p.clone();
    let top = match p.degree() {
        Degree::NegInfinity => return Ok((Vec::new(), Poly::zero())),
        Degree::Finite(d) => d,
    };
    if top < offset {
        return Ok((Vec::new(), rem));
    }
    let len = top - offset + 1;
    if len > basis.len() {
        return Err(Error::SafeWindowExhausted(format!(
            "degree {top} needs {len} basis elements, have {}",
            basis.len()
        )));
    }
    let mut coef = vec![Rational::zero(); len];
    for m in (0..len).rev() {
        let b = &basis[m];
        if b.degree() != Degree::Finite(offset + m) {
            return Err(Error::DegenerateLeading(format!(
                "basis element {m} has degree {}, expected {}",
                b.degree(),
                offset + m
            )));
        }
        let c = rem.coeff(offset + m);
        if c.is_zero() {
            continue;
        }
        let t = c / b.lead();
        rem = &rem - &b.scale(&t);
        coef[m] = t;
    }
    Ok((coef, rem))
}

/// Whether `p` lies in the span of `basis`, whose elements may have
/// repeated or deficient degrees. Builds an echelon form keyed by degree.
pub fn in_span(p: &Poly, basis: &[Poly]) -> bool {
    let mut pivots: BTreeMap<usize, Poly> = BTreeMap::new();
    let reduce = |mut q: Poly, pivots: &BTreeMap<usize, Poly>| -> Poly {
        while let Degree::Finite(d) = q.degree() {
            match pivots.get(&d) {
                Some(b) => q = &q - &b.scale(&(q.lead() / b.lead())),
                None => break,
            }
        }
        q
    };
    for b in basis {
        let r = reduce(b.clone(), &pivots);
        if let Degree::Finite(d) = r.degree() {
            pivots.insert(d, r);
        }
    }
    reduce(p.clone(), &pivots).is_zero()
}
