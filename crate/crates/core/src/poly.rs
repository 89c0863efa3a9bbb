//! Polynomials with coefficients in an algebra.

use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Element, Homomorphism};
use crate::error::{Error, Result};
use crate::numerics::determinant::ring_determinant;

/// A polynomial `c_0 + c_1 x + ... + c_d x^d` over an algebra, with exactly
/// zero leading coefficients trimmed. The zero polynomial has no coefficients.
#[derive(Debug, Clone)]
pub struct RingPoly {
    owner: Algebra,
    coeffs: Vec<Element>,
}

impl RingPoly {
    pub fn new(owner: Algebra, coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.owner().same(&owner)) {
            return Err(Error::OwnerMismatch);
        }
        let mut p = RingPoly { owner, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn zero(owner: Algebra) -> Self {
        RingPoly { owner, coeffs: Vec::new() }
    }

    pub fn constant(c: Element) -> Self {
        RingPoly::new(c.owner().clone(), vec![c]).expect("single owner")
    }

    /// `x^k` over `owner`.
    pub fn monomial(owner: &Algebra, k: usize) -> Self {
        let mut coeffs = vec![owner.zero(); k];
        coeffs.push(owner.one());
        RingPoly { owner: owner.clone(), coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.max_abs() == 0.0) {
            self.coeffs.pop();
        }
    }

    pub fn owner(&self) -> &Algebra {
        &self.owner
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.owner.zero())
    }

    pub fn checked_add(&self, other: &RingPoly) -> Result<RingPoly> {
        if !self.owner.same(&other.owner) {
            return Err(Error::OwnerMismatch);
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff(k).checked_add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        RingPoly::new(self.owner.clone(), coeffs)
    }

    pub fn checked_mul(&self, other: &RingPoly) -> Result<RingPoly> {
        if !self.owner.same(&other.owner) {
            return Err(Error::OwnerMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(RingPoly::zero(self.owner.clone()));
        }
        let mut coeffs = vec![self.owner.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        RingPoly::new(self.owner.clone(), coeffs)
    }

    /// Evaluate at `y`, lifting the coefficients into `y`'s algebra when it
    /// lies above the owner in an extension tower.
    pub fn eval(&self, y: &Element) -> Result<Element> {
        let target = y.owner();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(y)?.checked_add(&target.lift(c)?)?;
        }
        Ok(acc)
    }

    /// Image under a homomorphism applied coefficientwise.
    pub fn map_coeffs(&self, phi: &Homomorphism) -> Result<RingPoly> {
        if !phi.domain().same(&self.owner) {
            return Err(Error::DomainMismatch);
        }
        let coeffs = self.coeffs.iter().map(|c| phi.apply(c)).collect::<Result<Vec<_>>>()?;
        RingPoly::new(phi.codomain().clone(), coeffs)
    }

    pub fn approx_eq(&self, other: &RingPoly) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        self.owner.same(&other.owner) && (0..len).all(|k| self.coeff(k).approx_eq(&other.coeff(k)))
    }
}

/// A monic polynomial `a_0 + a_1 x + ... + a_{n-1} x^{n-1} + x^n`, `n ≥ 1`.
/// The leading 1 is implicit.
#[derive(Debug, Clone)]
pub struct MonicPoly {
    owner: Algebra,
    coeffs: Vec<Element>,
}

impl MonicPoly {
    pub fn new(owner: Algebra, lower: Vec<Element>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::DegenerateDegree(0));
        }
        if lower.iter().any(|c| !c.owner().same(&owner)) {
            return Err(Error::OwnerMismatch);
        }
        Ok(MonicPoly { owner, coeffs: lower })
    }

    /// `x^n + a_0`.
    pub fn binomial(n: usize, a0: Element) -> Result<Self> {
        let owner = a0.owner().clone();
        let mut lower = vec![owner.zero(); n];
        if n == 0 {
            return Err(Error::DegenerateDegree(0));
        }
        lower[0] = a0;
        MonicPoly::new(owner, lower)
    }

    pub fn owner(&self) -> &Algebra {
        &self.owner
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0, ..., a_{n-1}`.
    pub fn lower_coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Element {
        if k < self.coeffs.len() {
            self.coeffs[k].clone()
        } else if k == self.coeffs.len() {
            self.owner.one()
        } else {
            self.owner.zero()
        }
    }

    pub fn to_ring_poly(&self) -> RingPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(self.owner.one());
        RingPoly { owner: self.owner.clone(), coeffs }
    }

    /// Formal derivative `Σ k a_k x^{k-1}` with integer multiples computed in the algebra.
    pub fn derivative(&self) -> RingPoly {
        let n = self.degree();
        let coeffs = (1..=n)
            .map(|k| self.coeff(k).scale(C64::new(k as f64, 0.0)))
            .collect();
        RingPoly::new(self.owner.clone(), coeffs).expect("single owner")
    }

    pub fn map_coeffs(&self, phi: &Homomorphism) -> Result<MonicPoly> {
        if !phi.domain().same(&self.owner) {
            return Err(Error::DomainMismatch);
        }
        let lower = self.coeffs.iter().map(|c| phi.apply(c)).collect::<Result<Vec<_>>>()?;
        MonicPoly::new(phi.codomain().clone(), lower)
    }

    /// The same polynomial with coefficients lifted into an algebra above the owner.
    pub fn lift_to(&self, target: &Algebra) -> Result<MonicPoly> {
        let lower = self.coeffs.iter().map(|c| target.lift(c)).collect::<Result<Vec<_>>>()?;
        MonicPoly::new(target.clone(), lower)
    }

    /// Whether this is `x^n + a_0` (all middle coefficients exactly zero).
    pub fn is_binomial(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.max_abs() == 0.0)
    }

    pub fn eval(&self, y: &Element) -> Result<Element> {
        self.to_ring_poly().eval(y)
    }
}

/// Division by a monic divisor: `f = q·g + r` with `deg r < deg g`.
pub fn divmod(f: &RingPoly, g: &MonicPoly) -> Result<(RingPoly, RingPoly)> {
    if !f.owner.same(&g.owner) {
        return Err(Error::OwnerMismatch);
    }
    let n = g.degree();
    let owner = f.owner.clone();
    if f.coeffs.len() <= n {
        return Ok((RingPoly::zero(owner), f.clone()));
    }
    let mut rem: Vec<Element> = f.coeffs.clone();
    let mut quot = vec![owner.zero(); f.coeffs.len() - n];
    for i in (n..rem.len()).rev() {
        let lead = rem[i].clone();
        if lead.max_abs() == 0.0 {
            continue;
        }
        for (j, a) in g.coeffs.iter().enumerate() {
            rem[i - n + j] = rem[i - n + j].checked_sub(&lead.checked_mul(a)?)?;
        }
        rem[i] = owner.zero();
        quot[i - n] = lead;
    }
    rem.truncate(n);
    Ok((RingPoly::new(owner.clone(), quot)?, RingPoly::new(owner, rem)?))
}

/// Resultant as the determinant of the Sylvester layout: the first `m` rows
/// carry `f`'s coefficients (leading first, shifted one column per row), the
/// next `n` rows carry `g`'s.
pub fn resultant(f: &RingPoly, g: &RingPoly) -> Result<Element> {
    if !f.owner.same(&g.owner) {
        return Err(Error::OwnerMismatch);
    }
    let (n, m) = (f.degree(), g.degree());
    if f.is_zero() || n == 0 {
        return Err(Error::DegenerateDegree(n));
    }
    if g.is_zero() || m == 0 {
        return Err(Error::DegenerateDegree(m));
    }
    let size = n + m;
    let owner = &f.owner;
    let mut mat = vec![vec![owner.zero(); size]; size];
    for i in 0..m {
        for k in 0..=n {
            mat[i][i + n - k] = f.coeff(k);
        }
    }
    for i in 0..n {
        for k in 0..=m {
            mat[m + i][i + m - k] = g.coeff(k);
        }
    }
    ring_determinant(&mat)
}

/// Discriminant of a monic polynomial: the resultant of `f` and `f'` in the
/// Sylvester layout, with the monic leading 1 in the top-left corner.
///
/// Sign convention: this gives `4c - b²` for `x² + bx + c` (the negative of
/// the classical `b² - 4c`), and `nⁿ a_0^{n-1}` for `xⁿ + a_0`.
pub fn discriminant(f: &MonicPoly) -> Result<Element> {
    if f.degree() < 2 {
        return Err(Error::DegenerateDegree(f.degree()));
    }
    resultant(&f.to_ring_poly(), &f.derivative())
}

/// Power sums `q_0, ..., q_{n-1}` of the roots via Newton's identities,
/// evaluated in the owner algebra (`q_0 = n·1`).
pub fn power_sums(f: &MonicPoly) -> Result<Vec<Element>> {
    power_sums_upto(f, f.degree())
}

/// The first `count` power sums `q_0, ..., q_{count-1}`.
pub fn power_sums_upto(f: &MonicPoly, count: usize) -> Result<Vec<Element>> {
    let n = f.degree();
    let owner = &f.owner;
    let mut q: Vec<Element> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            q.push(owner.constant(C64::new(n as f64, 0.0)));
            continue;
        }
        // q_k + a_{n-1} q_{k-1} + ... + a_{n-k+1} q_1 + k a_{n-k} = 0   (k ≤ n)
        // q_k + a_{n-1} q_{k-1} + ... + a_0 q_{k-n} = 0                 (k > n)
        let mut acc = owner.zero();
        for i in 1..k.min(n + 1) {
            acc = acc.checked_add(&f.coeff(n - i).checked_mul(&q[k - i])?)?;
        }
        if k <= n {
            acc = acc.checked_add(&f.coeff(n - k).scale(C64::new(k as f64, 0.0)))?;
        }
        q.push(-acc);
    }
    Ok(q)
}
