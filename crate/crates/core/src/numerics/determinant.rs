//! Division-free determinants over commutative rings (Berkowitz).
//!
//! The algebras here have zero divisors, so elimination with pivots is not
//! available; Berkowitz's recursion only adds, negates and multiplies.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};

/// The ring operations the determinant needs. Multiplication may fail for
/// models that are not closed under products.
pub trait CommutativeRing {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexField;

impl CommutativeRing for ComplexField {
    type Elem = C64;
    fn zero(&self) -> C64 {
        C64::new(0.0, 0.0)
    }
    fn one(&self) -> C64 {
        C64::new(1.0, 0.0)
    }
    fn add(&self, a: &C64, b: &C64) -> Result<C64> {
        Ok(a + b)
    }
    fn neg(&self, a: &C64) -> C64 {
        -a
    }
    fn mul(&self, a: &C64, b: &C64) -> Result<C64> {
        Ok(a * b)
    }
}

impl CommutativeRing for Algebra {
    type Elem = Element;
    fn zero(&self) -> Element {
        self.zero()
    }
    fn one(&self) -> Element {
        self.one()
    }
    fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        a.checked_add(b)
    }
    fn neg(&self, a: &Element) -> Element {
        -a
    }
    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        a.checked_mul(b)
    }
}

/// Coefficients of `det(λI - M)`, highest power first (`[1, c_1, ..., c_n]`).
pub fn characteristic_polynomial<R: CommutativeRing>(
    ring: &R,
    m: &[Vec<R::Elem>],
) -> Result<Vec<R::Elem>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    let mut poly = vec![ring.one()];
    for k in 0..n {
        // Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(&m[k][k]));
        let mut v: Vec<R::Elem> = (0..k).map(|i| m[i][k].clone()).collect();
        for _ in 0..k {
            let mut dot = ring.zero();
            for (j, vj) in v.iter().enumerate() {
                dot = ring.add(&dot, &ring.mul(&m[k][j], vj)?)?;
            }
            toeplitz.push(ring.neg(&dot));
            let mut next = Vec::with_capacity(k);
            for i in 0..k {
                let mut acc = ring.zero();
                for (j, vj) in v.iter().enumerate() {
                    acc = ring.add(&acc, &ring.mul(&m[i][j], vj)?)?;
                }
                next.push(acc);
            }
            v = next;
        }
        let mut next_poly = Vec::with_capacity(k + 2);
        for i in 0..(k + 2) {
            let mut acc = ring.zero();
            for (j, pj) in poly.iter().enumerate().take(i.min(k) + 1) {
                acc = ring.add(&acc, &ring.mul(&toeplitz[i - j], pj)?)?;
            }
            next_poly.push(acc);
        }
        poly = next_poly;
    }
    Ok(poly)
}

/// Determinant over any [`CommutativeRing`]; the empty matrix has determinant 1.
pub fn determinant<R: CommutativeRing>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem> {
    let n = m.len();
    let poly = characteristic_polynomial(ring, m)?;
    let last = poly[n].clone();
    Ok(if n % 2 == 0 { last } else { ring.neg(&last) })
}

/// Determinant of a square matrix of elements sharing one owner algebra.
pub fn ring_determinant(m: &[Vec<Element>]) -> Result<Element> {
    let owner = m
        .first()
        .and_then(|row| row.first())
        .map(|e| e.owner().clone())
        .ok_or_else(|| Error::Invalid("empty matrix has no owner algebra".into()))?;
    if m.iter().flatten().any(|e| !e.owner().same(&owner)) {
        return Err(Error::OwnerMismatch);
    }
    determinant(&owner, m)
}

pub fn scalar_determinant(m: &DMatrix<C64>) -> C64 {
    let rows: Vec<Vec<C64>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect();
    determinant(&ComplexField, &rows).expect("complex arithmetic is total")
}
