//! The Iwasawa factorization g = k(g)·a(g)·n(g) on SL(n,ℂ).
//!
//! With K = SU(n), A the positive diagonal, and N the unit upper triangular
//! subgroup, every g ∈ SL(n,ℂ) factors uniquely as g = k·a·n. Writing
//! D = AN, this is the decomposition g = k(g)·d(g) with d(g) = a·n ∈ D,
//! which for matrices coincides with QR factorization normalized so that
//! the triangular factor has positive real diagonal.
//!
//! We compute it by Householder reflections followed by a diagonal unitary
//! phase correction; the correction makes every diagonal entry of the
//! triangular factor real and positive, which is exactly the A-positivity
//! the decomposition requires. Since det g = 1, the factors automatically
//! satisfy det k = det a = 1.
//!
//! The map k: G → K is invariant under right multiplication by D and
//! equivariant under right multiplication by T (k(g·t) = k(g)·t), while
//! d(g·d') = d(g)·d' and d(g·t) = t⁻¹·d(g)·t. These identities drive the
//! tuple calculus in [`crate::resolution`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{SquareMatrix, Tolerances};

/// Largest Frobenius condition number accepted by [`iwasawa_factor`].
/// Beyond this the factors would carry fewer than ~4 correct digits, so the
/// input is rejected instead.
pub const COND_LIMIT: f64 = 1e12;

/// The triple (k, a, n) with k unitary, a positive diagonal, and n unit
/// upper triangular.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IwasawaFactors {
    pub k: SquareMatrix,
    pub a: SquareMatrix,
    pub n: SquareMatrix,
}

impl IwasawaFactors {
    /// d(g) = a·n, the solvable factor.
    pub fn d(&self) -> SquareMatrix {
        &self.a * &self.n
    }

    /// k·a·n, for reconstruction checks.
    pub fn reconstruct(&self) -> SquareMatrix {
        &(&self.k * &self.a) * &self.n
    }
}

/// Householder QR: returns (q, r) with q unitary, r upper triangular
/// (below-diagonal entries zeroed exactly), and q·r equal to the input.
fn householder_qr(g: &SquareMatrix) -> (SquareMatrix, SquareMatrix) {
    let n = g.dim();
    let mut r = g.clone();
    let mut q = SquareMatrix::identity(n);
    let mut w = vec![Complex64::new(0.0, 0.0); n];

    for col in 0..n {
        let mut nx = 0.0;
        for row in col..n {
            nx += r[(row, col)].norm_sqr();
        }
        let nx = nx.sqrt();
        if nx == 0.0 {
            continue; // rank-deficient column; caught by the phase fix
        }
        let x0 = r[(col, col)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * nx;

        w[col] = x0 - alpha;
        for row in col + 1..n {
            w[row] = r[(row, col)];
        }
        let vn = w[col..n].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if vn <= f64::MIN_POSITIVE {
            continue;
        }
        for x in &mut w[col..n] {
            *x /= vn;
        }

        // R[col.., col..] -= 2 w (w* R)
        for c2 in col..n {
            let mut s = Complex64::new(0.0, 0.0);
            for row in col..n {
                s += w[row].conj() * r[(row, c2)];
            }
            s *= 2.0;
            for row in col..n {
                let t = s * w[row];
                r[(row, c2)] -= t;
            }
        }
        // Q[.., col..] -= 2 (Q w) w*
        for row in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for c2 in col..n {
                s += q[(row, c2)] * w[c2];
            }
            s *= 2.0;
            for c2 in col..n {
                let t = s * w[c2].conj();
                q[(row, c2)] -= t;
            }
        }
    }
    for r2 in 1..n {
        for c2 in 0..r2 {
            r[(r2, c2)] = Complex64::new(0.0, 0.0);
        }
    }
    (q, r)
}

/// Frobenius norm of the inverse of an upper triangular matrix, by back
/// substitution. Used for the conditioning guard.
fn tri_inverse_norm(r: &SquareMatrix) -> f64 {
    let n = r.dim();
    let mut x = SquareMatrix::zeros(n);
    for j in (0..n).rev() {
        x[(j, j)] = Complex64::new(1.0, 0.0) / r[(j, j)];
        for i in (0..j).rev() {
            let mut s = Complex64::new(0.0, 0.0);
            for k in i + 1..=j {
                s += r[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = -s / r[(i, i)];
        }
    }
    x.norm_fro()
}

/// Computes the unique factorization g = k·a·n.
///
/// Preconditions: g finite with |det g − 1| ≤ `tol.det`. Inputs whose
/// Frobenius condition number exceeds [`COND_LIMIT`] are rejected rather
/// than factored into garbage.
pub fn iwasawa_factor(g: &SquareMatrix, tol: &Tolerances) -> Result<IwasawaFactors> {
    if !g.is_finite() {
        return Err(Error::NotFinite);
    }
    let det_defect = (g.det() - Complex64::new(1.0, 0.0)).norm();
    if det_defect > tol.det {
        return Err(Error::NotSpecial(det_defect));
    }
    let n_dim = g.dim();
    let (mut q, mut r) = householder_qr(g);

    // Phase correction: make the diagonal of R real and positive by a
    // diagonal unitary, absorbed into Q.
    for j in 0..n_dim {
        let m = r[(j, j)].norm();
        if m <= f64::MIN_POSITIVE {
            return Err(Error::Singular);
        }
        let u = r[(j, j)] / m;
        let uc = u.conj();
        for c in j..n_dim {
            r[(j, c)] *= uc;
        }
        for row in 0..n_dim {
            q[(row, j)] *= u;
        }
    }

    // ‖g‖_F = ‖R‖_F and ‖g⁻¹‖_F = ‖R⁻¹‖_F, so this is κ_F(g).
    let cond = r.norm_fro() * tri_inverse_norm(&r);
    if !cond.is_finite() || cond > COND_LIMIT {
        return Err(Error::IllConditioned(cond));
    }

    let mut a = SquareMatrix::zeros(n_dim);
    let mut n = SquareMatrix::identity(n_dim);
    for j in 0..n_dim {
        let ajj = r[(j, j)].re;
        debug_assert!(ajj > 0.0);
        a[(j, j)] = Complex64::new(ajj, 0.0);
        for c in j + 1..n_dim {
            n[(j, c)] = r[(j, c)] / ajj;
        }
    }
    debug_assert!((a.det() - Complex64::new(1.0, 0.0)).norm() < 1e-6);
    Ok(IwasawaFactors { k: q, a, n })
}

/// The unitary factor k(g). Restricted to K this is the identity map.
pub fn k_map(g: &SquareMatrix, tol: &Tolerances) -> Result<SquareMatrix> {
    iwasawa_factor(g, tol).map(|f| f.k)
}

/// The solvable factor d(g) = a(g)·n(g) ∈ D.
pub fn d_map(g: &SquareMatrix, tol: &Tolerances) -> Result<SquareMatrix> {
    iwasawa_factor(g, tol).map(|f| f.d())
}
