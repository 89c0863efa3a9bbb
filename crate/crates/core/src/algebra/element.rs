use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::{Algebra, Backend};
use crate::error::{Error, Result};
use crate::numerics::linalg::numerical_rank;
use crate::poly::{divmod, RingPoly};
use crate::tolerance::ELEMENT_EQ_TOL;

/// Relative size below which a coefficient past the degree bound is noise.
const OVERFLOW_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct Element {
    owner: Algebra,
    data: Vec<C64>,
}

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

impl Element {
    pub(crate) fn from_parts(owner: Algebra, data: Vec<C64>) -> Self {
        Element { owner, data }
    }

    pub fn owner(&self) -> &Algebra {
        &self.owner
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<C64> {
        self.data
    }

    fn check_owner(&self, other: &Element) -> Result<()> {
        if self.owner.same(&other.owner) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check_owner(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Element::from_parts(self.owner.clone(), data))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.check_owner(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Element::from_parts(self.owner.clone(), data))
    }

    pub fn scale(&self, lambda: C64) -> Element {
        Element::from_parts(self.owner.clone(), self.data.iter().map(|a| a * lambda).collect())
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check_owner(other)?;
        let data = match self.owner.backend() {
            Backend::Pointwise(_) => self.data.iter().zip(&other.data).map(|(a, b)| a * b).collect(),
            Backend::PolyModel { degree, .. } => poly_model_product(&self.data, &other.data, *degree)?,
            Backend::Extension(ext) => {
                let a = RingPoly::new(ext.base.clone(), self.coefficients()?)?;
                let b = RingPoly::new(ext.base.clone(), other.coefficients()?)?;
                let (_, r) = divmod(&a.checked_mul(&b)?, &ext.alpha)?;
                let n = ext.degree();
                let bd = ext.base.dim();
                let mut data = vec![zero(); n * bd];
                for (k, c) in r.coeffs().iter().enumerate() {
                    data[k * bd..(k + 1) * bd].copy_from_slice(c.data());
                }
                data
            }
        };
        Ok(Element::from_parts(self.owner.clone(), data))
    }

    pub fn pow(&self, k: u32) -> Result<Element> {
        let mut acc = self.owner.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Base-algebra coefficients `b_0, ..., b_{n-1}` of an extension element.
    pub fn coefficients(&self) -> Result<Vec<Element>> {
        let ext = self
            .owner
            .extension()
            .ok_or_else(|| Error::Invalid("coefficients exist only in extensions".into()))?;
        let bd = ext.base.dim();
        Ok(self
            .data
            .chunks(bd)
            .map(|chunk| Element::from_parts(ext.base.clone(), chunk.to_vec()))
            .collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Zero within the componentwise element tolerance.
    pub fn is_zero(&self) -> bool {
        self.max_abs() <= ELEMENT_EQ_TOL
    }

    pub fn approx_eq(&self, other: &Element) -> bool {
        self.approx_eq_tol(other, ELEMENT_EQ_TOL)
    }

    pub fn approx_eq_tol(&self, other: &Element, tol: f64) -> bool {
        self.owner.same(&other.owner)
            && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn norm(&self) -> f64 {
        self.norm_with_functional().0
    }

    /// The norm together with a norming functional `w`: `Re Σ w_i x_i = ‖x‖`
    /// and `|Σ w_i y_i| ≤ ‖y‖` for every `y`. The functional is a subgradient
    /// of the norm at `x`.
    pub fn norm_with_functional(&self) -> (f64, Vec<C64>) {
        match self.owner.backend() {
            Backend::Pointwise(_) => {
                let (idx, val) = argmax_abs(&self.data);
                let mut w = vec![zero(); self.data.len()];
                w[idx] = phase_conj(self.data[idx]);
                (val, w)
            }
            Backend::PolyModel { points, .. } => {
                let coords = points.coords().expect("validated at construction");
                let values: Vec<C64> = coords.iter().map(|z| eval_poly(&self.data, *z)).collect();
                let (idx, val) = argmax_abs(&values);
                let ph = phase_conj(values[idx]);
                let w = (0..self.data.len())
                    .map(|j| ph * coords[idx].powu(j as u32))
                    .collect();
                (val, w)
            }
            Backend::Extension(ext) => {
                let t = ext.t.t;
                let bd = ext.base.dim();
                let mut total = 0.0;
                let mut w = Vec::with_capacity(self.data.len());
                for (k, chunk) in self.data.chunks(bd).enumerate() {
                    let coeff = Element::from_parts(ext.base.clone(), chunk.to_vec());
                    let (nk, wk) = coeff.norm_with_functional();
                    let tk = t.powi(k as i32);
                    total += nk * tk;
                    w.extend(wk.into_iter().map(|x| x * tk));
                }
                (total, w)
            }
        }
    }

    /// Matrix of `b ↦ a·b` in the canonical basis.
    ///
    /// For the polynomial model the codomain is polynomials of degree ≤ 2D,
    /// so the matrix is `(2D+1) × (D+1)`. Extensions of a polynomial model
    /// can overflow the degree bound and report `DegreeOverflow`.
    pub fn mult_operator(&self) -> Result<DMatrix<C64>> {
        let dim = self.owner.dim();
        match self.owner.backend() {
            Backend::PolyModel { degree, .. } => {
                let d = *degree;
                Ok(DMatrix::from_fn(2 * d + 1, d + 1, |i, j| {
                    if i >= j && i - j <= d {
                        self.data[i - j]
                    } else {
                        zero()
                    }
                }))
            }
            _ => {
                let mut m = DMatrix::<C64>::zeros(dim, dim);
                for j in 0..dim {
                    let col = self.checked_mul(&self.owner.basis_element(j))?;
                    for (i, v) in col.data.iter().enumerate() {
                        m[(i, j)] = *v;
                    }
                }
                Ok(m)
            }
        }
    }

    /// Whether `a ≠ 0` and `a·b = 0` for some `b ≠ 0`.
    ///
    /// Pointwise: some coordinate vanishes. Polynomial model: never, since a
    /// nonzero polynomial multiplies injectively. Extensions: the
    /// multiplication operator is numerically singular.
    pub fn is_zero_divisor(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        match self.owner.backend() {
            Backend::Pointwise(_) => Ok(self.data.iter().any(|z| z.norm() <= ELEMENT_EQ_TOL)),
            Backend::PolyModel { .. } => Ok(false),
            Backend::Extension(_) => {
                let m = self.mult_operator()?;
                Ok(numerical_rank(&m, crate::tolerance::ToleranceProfile::default().rank_rel_tol)
                    < self.owner.dim())
            }
        }
    }
}

fn argmax_abs(values: &[C64]) -> (usize, f64) {
    values
        .iter()
        .enumerate()
        .map(|(i, z)| (i, z.norm()))
        .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
}

fn phase_conj(z: C64) -> C64 {
    let r = z.norm();
    if r == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        z.conj() / r
    }
}

pub(crate) fn eval_poly(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(zero(), |acc, c| acc * z + c)
}

fn poly_model_product(a: &[C64], b: &[C64], degree: usize) -> Result<Vec<C64>> {
    let mut out = vec![zero(); 2 * degree + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    let amax = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let bmax = b.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let noise = OVERFLOW_REL_TOL * amax * bmax * (degree + 1) as f64;
    if let Some(top) = (degree + 1..out.len()).rev().find(|&k| out[k].norm() > noise) {
        return Err(Error::DegreeOverflow { degree: top, bound: degree });
    }
    out.truncate(degree + 1);
    Ok(out)
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.owner.same(&other.owner) && self.data == other.data
    }
}

// Operator forms panic on mismatched owners or overflow; use the `checked_*`
// methods where those are expected.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("element addition")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("element subtraction")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("element multiplication")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        (&self).neg()
    }
}
