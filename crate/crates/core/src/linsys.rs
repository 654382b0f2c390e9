//! Interpolation linear systems for fat points on P1 x P1.
//!
//! A bi-degree (d1,d2) form is a dense coefficient grid; entry (i,j) is the
//! coefficient of x0^(d1-i) x1^i y0^(d2-j) y1^j. Vanishing to order m at a
//! point is imposed by moving the point to ([1:0],[1:0]) with a coordinate
//! change and killing all transformed coefficients (u,v) with u+v < m. No
//! derivatives appear anywhere, so everything works over any field.

use crate::geometry::{
    factor_transform_inverse, FatPointConfig, Fiber, FiberDirection, ProductPoint,
};
use crate::matrix::{Matrix, MatrixError};
use crate::scalar::{Mode, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinsysError {
    #[error("the zero form cannot be represented")]
    ZeroForm,
    #[error("coefficient grid has {got} entries, expected {expected}")]
    CoeffCount { expected: usize, got: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Bi-degree (d1, d2) of a bi-homogeneous form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub d1: usize,
    pub d2: usize,
}

impl BiDegree {
    pub fn new(d1: usize, d2: usize) -> Self {
        BiDegree { d1, d2 }
    }

    /// Dimension (d1+1)(d2+1) of the space of forms of this bi-degree.
    pub fn monomials(&self) -> usize {
        (self.d1 + 1) * (self.d2 + 1)
    }

    pub fn total(&self) -> usize {
        self.d1 + self.d2
    }
}

/// A nonzero bi-homogeneous form as a dense coefficient grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiForm {
    deg: BiDegree,
    coeffs: Vec<Scalar>,
}

impl BiForm {
    pub fn new(deg: BiDegree, coeffs: Vec<Scalar>) -> Result<Self, LinsysError> {
        if coeffs.len() != deg.monomials() {
            return Err(LinsysError::CoeffCount {
                expected: deg.monomials(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(LinsysError::ZeroForm);
        }
        Ok(BiForm { deg, coeffs })
    }

    /// The constant form 1.
    pub fn one() -> Self {
        BiForm {
            deg: BiDegree::new(0, 0),
            coeffs: vec![Scalar::from_integer(1)],
        }
    }

    /// The linear form vanishing on a fiber, normalized so its first
    /// nonzero coefficient is 1: proportional to v x0 - u x1 for a vertical
    /// fiber with base [u:v], and likewise in y for a horizontal one.
    pub fn fiber_form(f: &Fiber) -> Self {
        let (a, b) = fiber_linear(&f.base);
        match f.direction {
            FiberDirection::Vertical => BiForm {
                deg: BiDegree::new(1, 0),
                coeffs: vec![a, b],
            },
            FiberDirection::Horizontal => BiForm {
                deg: BiDegree::new(0, 1),
                coeffs: vec![a, b],
            },
        }
    }

    pub fn deg(&self) -> BiDegree {
        self.deg
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * (self.deg.d2 + 1) + j]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn mode(&self) -> Mode {
        self.coeffs[0].mode()
    }

    /// Exact product of two forms; bi-degrees add.
    pub fn mul(&self, other: &BiForm) -> BiForm {
        let deg = BiDegree::new(self.deg.d1 + other.deg.d1, self.deg.d2 + other.deg.d2);
        let mode = self.mode();
        let mut coeffs = vec![Scalar::zero(mode); deg.monomials()];
        for i1 in 0..=self.deg.d1 {
            for j1 in 0..=self.deg.d2 {
                let c1 = self.coeff(i1, j1);
                if c1.is_zero() {
                    continue;
                }
                for i2 in 0..=other.deg.d1 {
                    for j2 in 0..=other.deg.d2 {
                        let idx = (i1 + i2) * (deg.d2 + 1) + (j1 + j2);
                        coeffs[idx] = coeffs[idx].add(&c1.mul(other.coeff(i2, j2)));
                    }
                }
            }
        }
        BiForm { deg, coeffs }
    }
}

/// The conditions matrix: one row per vanishing condition, one column per
/// monomial of the ambient bi-degree.
#[derive(Debug, Clone)]
pub struct ConditionsMatrix {
    pub matrix: Matrix,
    /// (point index, transformed-coefficient position (u,v)) per row.
    pub row_labels: Vec<(usize, (usize, usize))>,
    /// Monomial index (i,j) per column, row-major.
    pub col_labels: Vec<(usize, usize)>,
}

/// Build the interpolation matrix for the configuration in bi-degree d.
///
/// The kernel of the matrix is the space of bi-degree-d forms lying in
/// the ideal of the fat point scheme.
pub fn conditions_matrix(z: &FatPointConfig, d: BiDegree) -> ConditionsMatrix {
    let cols = d.monomials();
    let col_labels: Vec<(usize, usize)> = (0..=d.d1)
        .flat_map(|i| (0..=d.d2).map(move |j| (i, j)))
        .collect();
    let mut rows = Vec::with_capacity(z.condition_count());
    let mut row_labels = Vec::with_capacity(z.condition_count());
    for (pi, (p, m)) in z.iter().enumerate() {
        let sx = substitution_matrix(&factor_transform_inverse(&p.x), d.d1);
        let sy = substitution_matrix(&factor_transform_inverse(&p.y), d.d2);
        for u in 0..m as usize {
            for v in 0..(m as usize - u) {
                let mut row = Vec::with_capacity(cols);
                for &(i, j) in &col_labels {
                    if u > d.d1 || v > d.d2 {
                        row.push(Scalar::from_integer(0));
                    } else {
                        row.push(sx[i][u].mul(&sy[j][v]));
                    }
                }
                rows.push(row);
                row_labels.push((pi, (u, v)));
            }
        }
    }
    let matrix = if rows.is_empty() {
        Matrix::zero(0, cols, Mode::Rational)
    } else {
        Matrix::from_rows(rows).expect("uniform mode rows")
    };
    ConditionsMatrix {
        matrix,
        row_labels,
        col_labels,
    }
}

/// Dimension of the space of bi-degree-d forms vanishing as prescribed,
/// computed over the rationals.
pub fn h0(z: &FatPointConfig, d: BiDegree) -> usize {
    let cm = conditions_matrix(z, d);
    d.monomials() - cm.matrix.rank()
}

/// h0 after reduction mod p. Never smaller than the rational h0; used only
/// as a pre-filter, never as a reported value.
pub fn h0_modp(z: &FatPointConfig, d: BiDegree, p: u64) -> Result<usize, MatrixError> {
    let cm = conditions_matrix(z, d);
    Ok(d.monomials() - cm.matrix.rank_modp(p)?)
}

/// A deterministic nonzero form of bi-degree d through the fat point scheme,
/// when one exists: the first kernel basis vector under the fixed monomial
/// order, normalized so its first nonzero coefficient is 1.
pub fn witness_form(z: &FatPointConfig, d: BiDegree) -> Option<BiForm> {
    let cm = conditions_matrix(z, d);
    let basis = cm.matrix.kernel_basis();
    basis
        .into_iter()
        .next()
        .map(|v| BiForm::new(d, v).expect("kernel vectors are nonzero"))
}

/// Multiplicity of the divisor of f at P: the least u+v with a nonzero
/// transformed coefficient after moving P to ([1:0],[1:0]).
pub fn mult_at(f: &BiForm, p: &ProductPoint) -> usize {
    let d = f.deg();
    let sx = substitution_matrix(&factor_transform_inverse(&p.x), d.d1);
    let sy = substitution_matrix(&factor_transform_inverse(&p.y), d.d2);
    let mode = f.mode();
    let mut best = d.d1 + d.d2 + 1;
    for u in 0..=d.d1 {
        for v in 0..=d.d2 {
            if u + v >= best {
                continue;
            }
            let mut g = Scalar::zero(mode);
            for i in 0..=d.d1 {
                if sx[i][u].is_zero() {
                    continue;
                }
                for j in 0..=d.d2 {
                    g = g.add(&sx[i][u].mul(&sy[j][v]).mul(f.coeff(i, j)));
                }
            }
            if !g.is_zero() {
                best = u + v;
            }
        }
    }
    debug_assert!(best <= d.d1 + d.d2, "nonzero form has finite multiplicity");
    best
}

/// Exact division of f by the linear form of a fiber; None when the fiber
/// is not a component of the divisor of f.
pub fn divide_by_fiber(f: &BiForm, fiber: &Fiber) -> Option<BiForm> {
    let d = f.deg();
    let mode = f.mode();
    // normalized linear form alpha t0 + beta t1 in the relevant factor
    let (alpha, beta) = fiber_linear(&fiber.base);
    match fiber.direction {
        FiberDirection::Vertical => {
            if d.d1 == 0 {
                return None;
            }
            let qdeg = BiDegree::new(d.d1 - 1, d.d2);
            let mut q = vec![Scalar::zero(mode); qdeg.monomials()];
            for j in 0..=d.d2 {
                let col: Vec<Scalar> = (0..=d.d1).map(|i| f.coeff(i, j).clone()).collect();
                let quo = divide_linear(&col, &alpha, &beta)?;
                for (i, c) in quo.into_iter().enumerate() {
                    q[i * (qdeg.d2 + 1) + j] = c;
                }
            }
            Some(BiForm::new(qdeg, q).expect("quotient of nonzero form is nonzero"))
        }
        FiberDirection::Horizontal => {
            if d.d2 == 0 {
                return None;
            }
            let qdeg = BiDegree::new(d.d1, d.d2 - 1);
            let mut q = vec![Scalar::zero(mode); qdeg.monomials()];
            for i in 0..=d.d1 {
                let row: Vec<Scalar> = (0..=d.d2).map(|j| f.coeff(i, j).clone()).collect();
                let quo = divide_linear(&row, &alpha, &beta)?;
                for (j, c) in quo.into_iter().enumerate() {
                    q[i * (qdeg.d2 + 1) + j] = c;
                }
            }
            Some(BiForm::new(qdeg, q).expect("quotient of nonzero form is nonzero"))
        }
    }
}

// Coefficients (alpha, beta) of the linear form alpha t0 + beta t1 vanishing
// at [u:v], scaled so the first nonzero coefficient is 1.
fn fiber_linear(base: &crate::geometry::ProjCoord) -> (Scalar, Scalar) {
    let a = base.v().clone();
    let b = base.u().neg();
    let lead = if a.is_zero() { b.clone() } else { a.clone() };
    let inv = lead.inv().expect("projective point has a nonzero coordinate");
    (a.mul(&inv), b.mul(&inv))
}

// Divide a homogeneous univariate coefficient sequence (coeff of
// t0^(n-k) t1^k) by alpha t0 + beta t1. Returns None unless exact.
fn divide_linear(coeffs: &[Scalar], alpha: &Scalar, beta: &Scalar) -> Option<Vec<Scalar>> {
    let n = coeffs.len() - 1;
    if alpha.is_zero() {
        // dividing by beta * t1
        if !coeffs[0].is_zero() {
            return None;
        }
        return Some(
            coeffs[1..]
                .iter()
                .map(|c| c.div(beta).expect("beta nonzero"))
                .collect(),
        );
    }
    let mut q = Vec::with_capacity(n);
    let mut prev = Scalar::zero(alpha.mode());
    for k in 0..n {
        let num = coeffs[k].sub(&beta.mul(&prev));
        let qk = num.div(alpha).expect("alpha nonzero");
        q.push(qk.clone());
        prev = qk;
    }
    let rem = coeffs[n].sub(&beta.mul(&prev));
    if rem.is_zero() {
        Some(q)
    } else {
        None
    }
}

// Coefficient action of a coordinate substitution on degree-d monomials:
// result[i][u] is the coefficient of t0'^(d-u) t1'^u in the image of
// t0^(d-i) t1^i under t0 = m00 t0' + m01 t1', t1 = m10 t0' + m11 t1'.
fn substitution_matrix(m: &Matrix, d: usize) -> Vec<Vec<Scalar>> {
    let row0 = [m.at(0, 0).clone(), m.at(0, 1).clone()];
    let row1 = [m.at(1, 0).clone(), m.at(1, 1).clone()];
    let pow0 = linear_powers(&row0, d);
    let pow1 = linear_powers(&row1, d);
    (0..=d)
        .map(|i| poly_mul(&pow0[d - i], &pow1[i]))
        .collect()
}

// All powers 0..=d of a linear form, as coefficient sequences.
fn linear_powers(lin: &[Scalar; 2], d: usize) -> Vec<Vec<Scalar>> {
    let mode = lin[0].mode();
    let mut out = vec![vec![Scalar::one(mode)]];
    for k in 1..=d {
        let next = poly_mul(&out[k - 1], &[lin[0].clone(), lin[1].clone()]);
        out.push(next);
    }
    out
}

fn poly_mul(p: &[Scalar], q: &[Scalar]) -> Vec<Scalar> {
    let mode = p
        .first()
        .or_else(|| q.first())
        .map(Scalar::mode)
        .unwrap_or(Mode::Rational);
    let mut out = vec![Scalar::zero(mode); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    out
}
