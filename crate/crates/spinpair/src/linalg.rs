//! Dense complex linear algebra over fixed-size 4x4 matrices.
//!
//! Everything here is hand-rolled for the 4x4 case: the rest of the crate
//! needs exactly one eigensolver (cyclic complex Jacobi for Hermitian input,
//! which is deterministic and accurate at this size) plus a handful of
//! products. Spectral quantities of non-Hermitian products are never taken
//! from the product directly: they are read off Hermitian problems, either a
//! similarity transform or the doubled Hermitian embedding
//! `[[0, M], [M^H, 0]]` whose eigenvalues are the singular values of `M` in
//! plus/minus pairs. The embedding route matters numerically: it delivers
//! small singular values with absolute error near machine epsilon, where
//! squaring into `M^H M` would floor them at the square root of epsilon.

use crate::tol;
use thiserror::Error;

pub use num_complex::Complex64;

/// Shorthand constructor for a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: max |A - A^H| entry = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi iteration did not converge: off-diagonal norm {off_diagonal:e} after {sweeps} sweeps")]
    NoConvergence { off_diagonal: f64, sweeps: usize },
    #[error("eigenvalue {value:e} of a nominally positive semidefinite matrix is below the clamp window")]
    NegativeEigenvalue { value: f64 },
}

/// Column vector with four complex components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector4(pub [Complex64; 4]);

impl Vector4 {
    pub fn zero() -> Self {
        Vector4([Complex64::ZERO; 4])
    }

    /// Inner product `<self|other>`, conjugating `self`.
    pub fn dot(&self, other: &Vector4) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for k in 0..4 {
            acc += self.0[k].conj() * other.0[k];
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).re.sqrt()
    }

    /// Rank-one projector `|self><self|`.
    pub fn projector(&self) -> Matrix4 {
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[i] * self.0[j].conj();
            }
        }
        m
    }
}

/// Dense 4x4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex64; 4]; 4]);

impl Matrix4 {
    pub fn zero() -> Self {
        Matrix4([[Complex64::ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[i][i] = Complex64::ONE;
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.0[i][j]
    }

    pub fn mul(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Complex64::ZERO;
                for k in 0..4 {
                    acc += self.0[i][k] * rhs.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn matvec(&self, v: &Vector4) -> Vector4 {
        let mut out = Vector4::zero();
        for i in 0..4 {
            let mut acc = Complex64::ZERO;
            for k in 0..4 {
                acc += self.0[i][k] * v.0[k];
            }
            out.0[i] = acc;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Matrix4 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    /// Elementwise complex conjugate (not the adjoint).
    pub fn conj(&self) -> Matrix4 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e = e.conj();
            }
        }
        out
    }

    pub fn adjoint(&self) -> Matrix4 {
        let mut out = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2] + self.0[3][3]
    }

    /// Largest entrywise |self - rhs|.
    pub fn max_abs_diff(&self, rhs: &Matrix4) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - rhs.0[i][j]).norm());
            }
        }
        m
    }

    /// Largest entrywise |A - A^H|.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vector4 {
        Vector4([self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]])
    }
}

/// Eigendecomposition of a Hermitian matrix: `values` ascending, `vectors`
/// holding the matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: [f64; 4],
    pub vectors: Matrix4,
}

fn identity_n<const N: usize>() -> [[Complex64; N]; N] {
    let mut m = [[Complex64::ZERO; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex64::ONE;
    }
    m
}

fn off_diagonal_frobenius<const N: usize>(m: &[[Complex64; N]; N]) -> f64 {
    let mut acc = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                acc += m[i][j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One complex Jacobi rotation zeroing the (p, q) entry of the Hermitian
/// working matrix `m`, accumulated into `v`.
fn jacobi_rotate<const N: usize>(
    m: &mut [[Complex64; N]; N],
    v: &mut [[Complex64; N]; N],
    p: usize,
    q: usize,
) {
    let apq = m[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    if r < 1e-300 {
        // Negligible against every tolerance in the crate; dropping it avoids
        // phase division by a subnormal norm.
        m[p][q] = Complex64::ZERO;
        m[q][p] = Complex64::ZERO;
        return;
    }
    let app = m[p][p].re;
    let aqq = m[q][q].re;
    let phase = apq / r;

    // tan(theta) for the inner real rotation: the root of t^2 - 2*zeta*t - 1
    // with the smaller magnitude, which keeps |theta| <= pi/4 and guarantees
    // convergence of the cyclic sweep.
    let zeta = (app - aqq) / (2.0 * r);
    let t = if zeta >= 0.0 {
        -1.0 / (zeta + (zeta * zeta + 1.0).sqrt())
    } else {
        1.0 / (-zeta + (zeta * zeta + 1.0).sqrt())
    };
    let cos = 1.0 / (t * t + 1.0).sqrt();
    let sin = t * cos;

    // Unitary U differing from identity in the (p, q) block:
    //   U[p][p] = cos            U[p][q] = sin * phase
    //   U[q][p] = -sin * conj(phase)   U[q][q] = cos
    let u_pq = phase * sin;
    let u_qp = -phase.conj() * sin;

    // Columns: A <- A U.
    for k in 0..N {
        let akp = m[k][p];
        let akq = m[k][q];
        m[k][p] = akp * cos + akq * u_qp;
        m[k][q] = akp * u_pq + akq * cos;
    }
    // Rows: A <- U^H A.
    for k in 0..N {
        let apk = m[p][k];
        let aqk = m[q][k];
        m[p][k] = apk * cos + aqk * u_qp.conj();
        m[q][k] = apk * u_pq.conj() + aqk * cos;
    }
    // The rotation zeroes (p, q) exactly in exact arithmetic; enforce it.
    m[p][q] = Complex64::ZERO;
    m[q][p] = Complex64::ZERO;
    m[p][p].im = 0.0;
    m[q][q].im = 0.0;

    // Accumulate V <- V U.
    for k in 0..N {
        let vkp = v[k][p];
        let vkq = v[k][q];
        v[k][p] = vkp * cos + vkq * u_qp;
        v[k][q] = vkp * u_pq + vkq * cos;
    }
}

/// Cyclic Jacobi sweeps with a fixed lexicographic pivot order, so results
/// are bitwise deterministic for identical input. On success the diagonal of
/// `m` holds the eigenvalues and the columns of `v` the eigenvectors,
/// unsorted.
fn jacobi_sweeps<const N: usize>(
    m: &mut [[Complex64; N]; N],
    v: &mut [[Complex64; N]; N],
) -> Result<(), LinalgError> {
    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diagonal_frobenius(m) <= tol::JACOBI_OFF_DIAGONAL {
            return Ok(());
        }
        for p in 0..N - 1 {
            for q in p + 1..N {
                jacobi_rotate(m, v, p, q);
            }
        }
    }
    let off_diagonal = off_diagonal_frobenius(m);
    if off_diagonal <= tol::JACOBI_OFF_DIAGONAL {
        Ok(())
    } else {
        Err(LinalgError::NoConvergence {
            off_diagonal,
            sweeps: tol::JACOBI_MAX_SWEEPS,
        })
    }
}

/// Eigendecomposition of a Hermitian 4x4 matrix by cyclic complex Jacobi
/// rotations.
pub fn hermitian_eig(a: &Matrix4) -> Result<EigenDecomposition, LinalgError> {
    let deviation = a.hermiticity_deviation();
    if !(deviation <= tol::HERMITICITY) {
        return Err(LinalgError::NotHermitian { deviation });
    }

    // Work on the exact Hermitian average so roundoff in the input cannot
    // leak into the iteration.
    let mut m = [[Complex64::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = (a.0[i][j] + a.0[j][i].conj()) * 0.5;
        }
    }
    for i in 0..4 {
        m[i][i].im = 0.0;
    }

    let mut v = identity_n::<4>();
    jacobi_sweeps(&mut m, &mut v)?;

    // Stable ascending sort by eigenvalue; ties keep pivot order so repeated
    // runs agree bit for bit.
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| m[i][i].re.partial_cmp(&m[j][j].re).expect("finite eigenvalues"));

    let mut values = [0.0; 4];
    let mut vectors = Matrix4::zero();
    for (slot, &idx) in order.iter().enumerate() {
        values[slot] = m[idx][idx].re;
        for row in 0..4 {
            vectors.0[row][slot] = v[row][idx];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// Singular values of an arbitrary 4x4 complex matrix, descending.
///
/// Computed from the doubled Hermitian embedding `[[0, M], [M^H, 0]]`, whose
/// spectrum is the singular values in plus/minus pairs. Each value carries
/// absolute error on the order of machine epsilon times the matrix norm;
/// crucially there is no squaring step, so values far below 1e-8 survive.
pub fn singular_values(m: &Matrix4) -> Result<[f64; 4], LinalgError> {
    let mut e = [[Complex64::ZERO; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            e[i][4 + j] = m.0[i][j];
            e[4 + j][i] = m.0[i][j].conj();
        }
    }
    let mut v = identity_n::<8>();
    jacobi_sweeps(&mut e, &mut v)?;

    let mut vals = [0.0_f64; 8];
    for k in 0..8 {
        vals[k] = e[k][k].re;
    }
    vals.sort_by(|x, y| x.partial_cmp(y).expect("finite singular values"));
    // The top half of the plus/minus pairs; exact zeros may land a hair
    // below zero, which the magnitude clamp absorbs.
    Ok([
        vals[7].max(0.0),
        vals[6].max(0.0),
        vals[5].max(0.0),
        vals[4].max(0.0),
    ])
}

/// Square root of a Hermitian positive semidefinite matrix via its
/// eigendecomposition. Eigenvalues in `[-NEGATIVE_CLAMP, 0)` clamp to zero;
/// anything more negative reports the matrix as not PSD.
fn sqrt_psd(a: &Matrix4) -> Result<Matrix4, LinalgError> {
    let ea = hermitian_eig(a)?;
    let mut root = Matrix4::zero();
    for k in 0..4 {
        let lam = ea.values[k];
        if lam < -tol::NEGATIVE_CLAMP {
            return Err(LinalgError::NegativeEigenvalue { value: lam });
        }
        let r = lam.max(0.0).sqrt();
        let col = ea.vectors.column(k);
        for i in 0..4 {
            for j in 0..4 {
                root.0[i][j] += col.0[i] * col.0[j].conj() * r;
            }
        }
    }
    Ok(root)
}

/// Square roots of the eigenvalues of the product `a * b` of two Hermitian
/// positive semidefinite matrices, sorted descending.
///
/// The product itself is not Hermitian, but its spectrum equals the squared
/// singular values of `sqrt(a) * sqrt(b)` (conjugate the product by
/// `sqrt(a)` to see it), so the roots come straight from `singular_values`
/// with no lossy squaring.
pub fn sqrt_eigvals_of_hermitian_product(
    a: &Matrix4,
    b: &Matrix4,
) -> Result<[f64; 4], LinalgError> {
    let sa = sqrt_psd(a)?;
    let sb = sqrt_psd(b)?;
    singular_values(&sa.mul(&sb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(e: &EigenDecomposition) -> Matrix4 {
        let mut m = Matrix4::zero();
        for k in 0..4 {
            let col = e.vectors.column(k);
            let p = col.projector();
            for i in 0..4 {
                for j in 0..4 {
                    m.0[i][j] += p.0[i][j] * e.values[k];
                }
            }
        }
        m
    }

    #[test]
    fn identity_eigendecomposition() {
        let e = hermitian_eig(&Matrix4::identity()).unwrap();
        for v in e.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
        assert!(e.vectors.adjoint().mul(&e.vectors).max_abs_diff(&Matrix4::identity()) < 1e-14);
    }

    #[test]
    fn block_matrix_eigenvalues() {
        // [[1, i], [-i, 1]] has eigenvalues {0, 2}; the rest is diagonal.
        let mut a = Matrix4::zero();
        a.0[0][0] = c64(1.0, 0.0);
        a.0[0][1] = c64(0.0, 1.0);
        a.0[1][0] = c64(0.0, -1.0);
        a.0[1][1] = c64(1.0, 0.0);
        a.0[2][2] = c64(2.0, 0.0);
        a.0[3][3] = c64(3.0, 0.0);
        let e = hermitian_eig(&a).unwrap();
        let expect = [0.0, 2.0, 2.0, 3.0];
        for (got, want) in e.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
        assert!(reconstruct(&e).max_abs_diff(&a) < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let mut a = Matrix4::identity();
        a.0[0][1] = c64(1.0, 0.0); // missing conjugate partner
        match hermitian_eig(&a) {
            Err(LinalgError::NotHermitian { deviation }) => assert!(deviation > 0.5),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_and_reconstruct() {
        // A fixed dense Hermitian matrix with no special structure.
        let a = Matrix4([
            [c64(2.0, 0.0), c64(0.3, 0.7), c64(-0.2, 0.1), c64(0.5, -0.4)],
            [c64(0.3, -0.7), c64(-1.0, 0.0), c64(0.9, 0.2), c64(0.0, 0.6)],
            [c64(-0.2, -0.1), c64(0.9, -0.2), c64(0.5, 0.0), c64(-0.3, 0.3)],
            [c64(0.5, 0.4), c64(0.0, -0.6), c64(-0.3, -0.3), c64(1.5, 0.0)],
        ]);
        let e = hermitian_eig(&a).unwrap();
        let gram = e.vectors.adjoint().mul(&e.vectors);
        assert!(gram.max_abs_diff(&Matrix4::identity()) < 1e-13);
        assert!(reconstruct(&e).max_abs_diff(&a) < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let trace_sum: f64 = e.values.iter().sum();
        assert!((trace_sum - a.trace().re).abs() < 1e-12);
    }

    #[test]
    fn singular_values_of_signed_diagonal() {
        let mut m = Matrix4::zero();
        m.0[0][0] = c64(-3.0, 0.0);
        m.0[1][1] = c64(2.0, 0.0);
        m.0[2][2] = c64(0.0, -1.0);
        let s = singular_values(&m).unwrap();
        let expect = [3.0, 2.0, 1.0, 0.0];
        for (got, want) in s.iter().zip(expect) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn singular_values_of_nilpotent_shift() {
        // Superdiagonal of ones: not diagonalizable, singular values (1,1,1,0).
        let mut m = Matrix4::zero();
        m.0[0][1] = Complex64::ONE;
        m.0[1][2] = Complex64::ONE;
        m.0[2][3] = Complex64::ONE;
        let s = singular_values(&m).unwrap();
        let expect = [1.0, 1.0, 1.0, 0.0];
        for (got, want) in s.iter().zip(expect) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn tiny_singular_values_survive() {
        // The embedding must resolve values far below sqrt(machine epsilon),
        // which a squared formulation would floor at about 1e-8.
        let mut m = Matrix4::identity();
        m.0[1][1] = c64(1e-12, 0.0);
        m.0[2][2] = c64(1e-20, 0.0);
        m.0[3][3] = c64(0.0, 0.0);
        let s = singular_values(&m).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-14);
        assert!((s[1] - 1e-12).abs() < 1e-15, "s1 = {:e}", s[1]);
        assert!((s[2] - 1e-20).abs() < 1e-16, "s2 = {:e}", s[2]);
        assert!(s[3].abs() < 1e-16);
    }

    #[test]
    fn product_roots_of_maximally_mixed_state() {
        let quarter = Matrix4::identity().scale(0.25);
        let roots = sqrt_eigvals_of_hermitian_product(&quarter, &quarter).unwrap();
        for r in roots {
            assert!((r - 0.25).abs() < 1e-13);
        }
    }

    #[test]
    fn product_roots_match_brute_force_on_a_generic_pair() {
        // Two fixed PSD matrices; compare against eigenvalues of the plain
        // product computed through the similarity form sqrt(a) b sqrt(a).
        let g = Matrix4([
            [c64(1.0, 0.0), c64(0.2, 0.1), c64(0.0, -0.3), c64(0.1, 0.0)],
            [c64(0.2, -0.1), c64(0.8, 0.0), c64(0.05, 0.0), c64(0.0, 0.2)],
            [c64(0.0, 0.3), c64(0.05, 0.0), c64(1.2, 0.0), c64(-0.1, 0.1)],
            [c64(0.1, 0.0), c64(0.0, -0.2), c64(-0.1, -0.1), c64(0.6, 0.0)],
        ]);
        let a = g.mul(&g.adjoint()).scale(0.2); // PSD by construction
        let b = g.adjoint().mul(&g).scale(0.3);
        let roots = sqrt_eigvals_of_hermitian_product(&a, &b).unwrap();
        let sa = {
            let ea = hermitian_eig(&a).unwrap();
            let mut r = Matrix4::zero();
            for k in 0..4 {
                let col = ea.vectors.column(k);
                for i in 0..4 {
                    for j in 0..4 {
                        r.0[i][j] += col.0[i] * col.0[j].conj() * ea.values[k].max(0.0).sqrt();
                    }
                }
            }
            r
        };
        let sim = sa.mul(&b).mul(&sa);
        let ev = hermitian_eig(&sim).unwrap();
        let mut brute: Vec<f64> = ev.values.iter().map(|x| x.max(0.0).sqrt()).collect();
        brute.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for k in 0..4 {
            assert!((roots[k] - brute[k]).abs() < 1e-10, "{} vs {}", roots[k], brute[k]);
        }
    }

    #[test]
    fn product_roots_reject_indefinite_factor() {
        let a = Matrix4::identity();
        let b = Matrix4::identity().scale(-1.0);
        match sqrt_eigvals_of_hermitian_product(&a, &b) {
            Err(LinalgError::NegativeEigenvalue { value }) => assert!(value < -0.5),
            other => panic!("expected NegativeEigenvalue, got {other:?}"),
        }
    }
}
