//! Dense complex square matrices with the subgroup and coset predicates
//! used throughout the crate.
//!
//! `SquareMatrix` is the universal carrier for elements of G = SL(n,ℂ) and
//! all of its subgroups of interest here: K = SU(n), the Borel subgroup B of
//! upper triangular matrices, its nilradical N, the positive diagonal A, the
//! compact torus T, D = AN, and the minimal parabolics P_s(i) together with
//! their compact forms K_s(i) = K ∩ P_s(i). Membership is decided
//! structurally, by entry-magnitude tests relative to the Frobenius norm,
//! and coset equality in G/B and K/T by solving for the connecting group
//! element and testing its membership.
//!
//! Storage is row-major; indices are 0-based. Simple-root indices elsewhere
//! in the crate are 1-based, so the root γ_i pairs matrix rows/columns
//! (i-1, i).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};

/// Tolerance configuration shared by factorization, membership, and coset
/// tests.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Allowed determinant defect |det g − 1| for group elements.
    pub det: f64,
    /// Allowed Frobenius defect ‖k*k − I‖_F for unitary factors.
    pub unitary: f64,
    /// Allowed relative reconstruction defect ‖k·a·n − g‖_F / ‖g‖_F.
    pub recon: f64,
    /// Relative magnitude under which an entry counts as zero in membership
    /// and coset tests.
    pub coset: f64,
    /// Entrywise deviation allowed when comparing two computed values.
    pub value: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            det: 1e-9,
            unitary: 1e-10,
            recon: 1e-10,
            coset: 1e-8,
            value: 1e-9,
        }
    }
}

/// The subgroups of SL(n,ℂ) recognized by [`SquareMatrix::is_member`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    /// K = SU(n).
    K,
    /// T = K ∩ H: diagonal with unit-modulus entries.
    T,
    /// A: diagonal with positive real entries.
    A,
    /// N: unit upper triangular.
    N,
    /// B: upper triangular (the Borel subgroup).
    B,
    /// D = AN: upper triangular with positive real diagonal.
    D,
    /// P_s(i): the minimal parabolic along the i-th simple root — zero
    /// below the diagonal except possibly at entry (i+1, i), 1-based.
    Ps(usize),
    /// K_s(i) = K ∩ P_s(i).
    Ks(usize),
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subgroup::K => write!(f, "K"),
            Subgroup::T => write!(f, "T"),
            Subgroup::A => write!(f, "A"),
            Subgroup::N => write!(f, "N"),
            Subgroup::B => write!(f, "B"),
            Subgroup::D => write!(f, "D"),
            Subgroup::Ps(i) => write!(f, "P_s({i})"),
            Subgroup::Ks(i) => write!(f, "K_s({i})"),
        }
    }
}

/// JSON schema for matrices: real and imaginary parts as row-major nested
/// arrays of IEEE-754 doubles.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// An n×n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            m[(j, j)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from rows of complex entries; all rows must have the
    /// same length as the row count.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "expected {dim} entries per row, found {}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        let m = SquareMatrix { dim, data };
        if !m.is_finite() {
            return Err(Error::NotFinite);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// ‖g*·g − I‖_F, zero exactly when the matrix is unitary.
    pub fn unitary_defect(&self) -> f64 {
        let p = &self.adjoint() * self;
        let mut s = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let target = if r == c {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                s += (p[(r, c)] - target).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// Determinant via LU decomposition with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.dim;
        let mut lu = self.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let mut piv = col;
            let mut best = lu[(col, col)].norm();
            for r in col + 1..n {
                let m = lu[(r, col)].norm();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if best == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if piv != col {
                for c in 0..n {
                    let tmp = lu[(col, c)];
                    lu[(col, c)] = lu[(piv, c)];
                    lu[(piv, c)] = tmp;
                }
                det = -det;
            }
            let p = lu[(col, col)];
            det *= p;
            for r in col + 1..n {
                let factor = lu[(r, col)] / p;
                for c in col..n {
                    let t = factor * lu[(col, c)];
                    lu[(r, c)] -= t;
                }
            }
        }
        det
    }

    /// Matrix inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_finite() {
            return Err(Error::NotFinite);
        }
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let mut piv = col;
            let mut best = a[(col, col)].norm();
            for r in col + 1..n {
                let m = a[(r, col)].norm();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if best <= f64::MIN_POSITIVE {
                return Err(Error::Singular);
            }
            if piv != col {
                for c in 0..n {
                    let t = a[(col, c)];
                    a[(col, c)] = a[(piv, c)];
                    a[(piv, c)] = t;
                    let t = inv[(col, c)];
                    inv[(col, c)] = inv[(piv, c)];
                    inv[(piv, c)] = t;
                }
            }
            let p = a[(col, col)];
            for c in 0..n {
                a[(col, c)] /= p;
                inv[(col, c)] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor.norm() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    let t = factor * a[(col, c)];
                    a[(r, c)] -= t;
                    let t = factor * inv[(col, c)];
                    inv[(r, c)] -= t;
                }
            }
        }
        if !inv.is_finite() {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    /// Structural membership test for the standard subgroups. Entries that
    /// must vanish are compared against `tol.coset` relative to the
    /// Frobenius norm; unitarity is tested against `tol.unitary`. Returns
    /// false on non-finite input.
    pub fn is_member(&self, sub: Subgroup, tol: &Tolerances) -> bool {
        if !self.is_finite() {
            return false;
        }
        let n = self.dim;
        let thr = tol.coset * self.norm_fro().max(1.0);
        let below_zero_except = |skip: Option<(usize, usize)>| -> bool {
            for r in 0..n {
                for c in 0..r {
                    if Some((r, c)) == skip {
                        continue;
                    }
                    if self[(r, c)].norm() > thr {
                        return false;
                    }
                }
            }
            true
        };
        let diagonal = |m: &SquareMatrix| -> bool {
            for r in 0..n {
                for c in 0..n {
                    if r != c && m[(r, c)].norm() > thr {
                        return false;
                    }
                }
            }
            true
        };
        let diag_positive =
            || -> bool { (0..n).all(|j| self[(j, j)].re > 0.0 && self[(j, j)].im.abs() <= thr) };
        match sub {
            Subgroup::K => self.unitary_defect() <= tol.unitary,
            Subgroup::T => {
                diagonal(self) && (0..n).all(|j| (self[(j, j)].norm() - 1.0).abs() <= thr)
            }
            Subgroup::A => diagonal(self) && diag_positive(),
            Subgroup::N => {
                below_zero_except(None)
                    && (0..n).all(|j| (self[(j, j)] - Complex64::new(1.0, 0.0)).norm() <= thr)
            }
            Subgroup::B => below_zero_except(None),
            Subgroup::D => below_zero_except(None) && diag_positive(),
            Subgroup::Ps(i) => {
                assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
                below_zero_except(Some((i, i - 1)))
            }
            Subgroup::Ks(i) => {
                assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
                self.unitary_defect() <= tol.unitary && below_zero_except(Some((i, i - 1)))
            }
        }
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = SquareMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let x = self[(r, k)];
                if x.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += x * rhs[(k, c)];
                }
            }
        }
        out
    }
}

impl Mul for SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: SquareMatrix) -> SquareMatrix {
        &self * &rhs
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= y;
        }
        out
    }
}

impl Mul<Complex64> for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: Complex64) -> SquareMatrix {
        let mut out = self.clone();
        for z in &mut out.data {
            *z *= rhs;
        }
        out
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            write!(f, "[")?;
            for c in 0..self.dim {
                let z = self[(r, c)];
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl From<SquareMatrix> for MatrixRepr {
    fn from(m: SquareMatrix) -> Self {
        let re = (0..m.dim)
            .map(|r| (0..m.dim).map(|c| m[(r, c)].re).collect())
            .collect();
        let im = (0..m.dim)
            .map(|r| (0..m.dim).map(|c| m[(r, c)].im).collect())
            .collect();
        MatrixRepr { dim: m.dim, re, im }
    }
}

impl TryFrom<MatrixRepr> for SquareMatrix {
    type Error = String;
    fn try_from(repr: MatrixRepr) -> std::result::Result<Self, String> {
        let MatrixRepr { dim, re, im } = repr;
        if re.len() != dim || im.len() != dim {
            return Err(format!("expected {dim} rows in re and im"));
        }
        let mut m = SquareMatrix::zeros(dim);
        for r in 0..dim {
            if re[r].len() != dim || im[r].len() != dim {
                return Err(format!("expected {dim} entries in row {r}"));
            }
            for c in 0..dim {
                m[(r, c)] = Complex64::new(re[r][c], im[r][c]);
            }
        }
        if !m.is_finite() {
            return Err("matrix entries must be finite".into());
        }
        Ok(m)
    }
}

/// Relative magnitude of the worst below-diagonal entry of g1⁻¹·g2; the
/// residual of the G/B coset-equality test.
pub fn gb_coset_defect(g1: &SquareMatrix, g2: &SquareMatrix) -> Result<f64> {
    let x = &g1.inverse()? * g2;
    let scale = x.norm_fro();
    let mut worst: f64 = 0.0;
    for r in 0..x.dim() {
        for c in 0..r {
            worst = worst.max(x[(r, c)].norm());
        }
    }
    Ok(worst / scale)
}

/// Equality of B-cosets: true iff g1⁻¹·g2 is upper triangular within
/// `tol.coset` relative to its Frobenius norm.
pub fn coset_equal_gb(g1: &SquareMatrix, g2: &SquareMatrix, tol: &Tolerances) -> Result<bool> {
    Ok(gb_coset_defect(g1, g2)? <= tol.coset)
}

/// Relative magnitude of the worst off-diagonal entry of k1*·k2; the
/// residual of the K/T coset-equality test. Errors unless both inputs are
/// unitary within `tol.unitary`.
pub fn kt_coset_defect(k1: &SquareMatrix, k2: &SquareMatrix, tol: &Tolerances) -> Result<f64> {
    for k in [k1, k2] {
        let defect = k.unitary_defect();
        if defect > tol.unitary {
            return Err(Error::NotUnitary(defect));
        }
    }
    let x = &k1.adjoint() * k2;
    let scale = x.norm_fro();
    let mut worst: f64 = 0.0;
    for r in 0..x.dim() {
        for c in 0..x.dim() {
            if r != c {
                worst = worst.max(x[(r, c)].norm());
            }
        }
    }
    Ok(worst / scale)
}

/// Equality of T-cosets inside K: true iff k1*·k2 is diagonal within
/// `tol.coset`.
pub fn coset_equal_kt(k1: &SquareMatrix, k2: &SquareMatrix, tol: &Tolerances) -> Result<bool> {
    Ok(kt_coset_defect(k1, k2, tol)? <= tol.coset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_special(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
        loop {
            let g = SquareMatrix::from_fn(n, |_, _| {
                c(
                    rng.random::<f64>() * 2.0 - 1.0,
                    rng.random::<f64>() * 2.0 - 1.0,
                )
            });
            let det = g.det();
            if det.norm() < 0.3 {
                continue;
            }
            let scale = det.powf(-1.0 / n as f64);
            return &g * scale;
        }
    }

    #[test]
    fn mul_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_special(&mut rng, 3);
        let prod = &SquareMatrix::identity(3) * &g;
        assert!(prod.max_abs_diff(&g) == 0.0);
    }

    #[test]
    fn mul_unipotent_times_sigma() {
        // n_1 · σ in SL(2): [[1,1],[0,1]]·[[0,i],[i,0]] = [[i,i],[i,0]]
        let n1 = SquareMatrix::from_rows(&[vec![c(1., 0.), c(1., 0.)], vec![c(0., 0.), c(1., 0.)]])
            .unwrap();
        let sigma =
            SquareMatrix::from_rows(&[vec![c(0., 0.), c(0., 1.)], vec![c(0., 1.), c(0., 0.)]])
                .unwrap();
        let expect =
            SquareMatrix::from_rows(&[vec![c(0., 1.), c(0., 1.)], vec![c(0., 1.), c(0., 0.)]])
                .unwrap();
        assert!((&n1 * &sigma).max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn mul_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let x = random_special(&mut rng, 3);
            let y = random_special(&mut rng, 3);
            let got = &x * &y;
            // independent triple loop, no skip shortcuts
            let mut want = SquareMatrix::zeros(3);
            for r in 0..3 {
                for cc in 0..3 {
                    let mut s = c(0., 0.);
                    for k in 0..3 {
                        s += x[(r, k)] * y[(k, cc)];
                    }
                    want[(r, cc)] = s;
                }
            }
            assert!(got.max_abs_diff(&want) < 1e-14);
        }
    }

    #[test]
    fn inverse_identity_and_diag() {
        let i2 = SquareMatrix::identity(2);
        assert!(i2.inverse().unwrap().max_abs_diff(&i2) < 1e-15);
        let d = SquareMatrix::from_rows(&[vec![c(2., 0.), c(0., 0.)], vec![c(0., 0.), c(0.5, 0.)]])
            .unwrap();
        let want =
            SquareMatrix::from_rows(&[vec![c(0.5, 0.), c(0., 0.)], vec![c(0., 0.), c(2., 0.)]])
                .unwrap();
        assert!(d.inverse().unwrap().max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn inverse_random_product_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_special(&mut rng, 3);
            let prod = &g * &g.inverse().unwrap();
            assert!(prod.max_abs_diff(&SquareMatrix::identity(3)) < 1e-12);
        }
    }

    #[test]
    fn inverse_rejects_singular() {
        let s = SquareMatrix::zeros(3);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn det_of_special_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 2..=5 {
            let g = random_special(&mut rng, n);
            assert!((g.det() - c(1., 0.)).norm() < 1e-12);
        }
    }

    #[test]
    fn membership_patterns() {
        let tol = Tolerances::default();
        // strictly upper triangular + I: in N, B, D but not A
        let u = SquareMatrix::from_rows(&[
            vec![c(1., 0.), c(2., 1.), c(-0.5, 0.)],
            vec![c(0., 0.), c(1., 0.), c(3., 0.)],
            vec![c(0., 0.), c(0., 0.), c(1., 0.)],
        ])
        .unwrap();
        assert!(u.is_member(Subgroup::N, &tol));
        assert!(u.is_member(Subgroup::B, &tol));
        assert!(u.is_member(Subgroup::D, &tol));
        assert!(!u.is_member(Subgroup::A, &tol));

        // σ embedded at root 1 of SL(3): in K_s(1) and P_s(1)
        let s1 = SquareMatrix::from_rows(&[
            vec![c(0., 0.), c(0., 1.), c(0., 0.)],
            vec![c(0., 1.), c(0., 0.), c(0., 0.)],
            vec![c(0., 0.), c(0., 0.), c(1., 0.)],
        ])
        .unwrap();
        assert!(s1.is_member(Subgroup::Ks(1), &tol));
        assert!(s1.is_member(Subgroup::Ps(1), &tol));
        assert!(!s1.is_member(Subgroup::Ps(2), &tol));
        assert!(!s1.is_member(Subgroup::B, &tol));
    }

    #[test]
    fn membership_false_on_nan() {
        let tol = Tolerances::default();
        let mut m = SquareMatrix::identity(2);
        m[(0, 0)] = c(f64::NAN, 0.);
        assert!(!m.is_member(Subgroup::B, &tol));
    }

    #[test]
    fn gb_coset_basic() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_special(&mut rng, 2);
        // right multiplication by upper triangular det-1 stays in the coset
        let b = SquareMatrix::from_rows(&[vec![c(2., 0.), c(1., 1.)], vec![c(0., 0.), c(0.5, 0.)]])
            .unwrap();
        assert!(coset_equal_gb(&g, &(&g * &b), &tol).unwrap());
        // I and ṡ1 are in different Bruhat cells
        let sigma =
            SquareMatrix::from_rows(&[vec![c(0., 0.), c(0., 1.)], vec![c(0., 1.), c(0., 0.)]])
                .unwrap();
        assert!(!coset_equal_gb(&SquareMatrix::identity(2), &sigma, &tol).unwrap());
    }

    #[test]
    fn kt_coset_basic() {
        let tol = Tolerances::default();
        let k = SquareMatrix::from_rows(&[
            vec![
                c(0., 1.) / c(2f64.sqrt(), 0.),
                c(0., 1.) / c(2f64.sqrt(), 0.),
            ],
            vec![
                c(0., 1.) / c(2f64.sqrt(), 0.),
                c(0., -1.) / c(2f64.sqrt(), 0.),
            ],
        ])
        .unwrap();
        let t = SquareMatrix::from_rows(&[
            vec![Complex64::from_polar(1.0, 0.7), c(0., 0.)],
            vec![c(0., 0.), Complex64::from_polar(1.0, -0.7)],
        ])
        .unwrap();
        assert!(coset_equal_kt(&k, &(&k * &t), &tol).unwrap());
        let sigma =
            SquareMatrix::from_rows(&[vec![c(0., 0.), c(0., 1.)], vec![c(0., 1.), c(0., 0.)]])
                .unwrap();
        assert!(!coset_equal_kt(&SquareMatrix::identity(2), &sigma, &tol).unwrap());
        // non-unitary input is an error
        let b = SquareMatrix::from_rows(&[vec![c(2., 0.), c(0., 0.)], vec![c(0., 0.), c(0.5, 0.)]])
            .unwrap();
        assert!(matches!(
            coset_equal_kt(&b, &k, &tol),
            Err(Error::NotUnitary(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = random_special(&mut rng, 3);
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("\"dim\":3"));
        let back: SquareMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn json_rejects_ragged_rows() {
        let s = r#"{"dim":2,"re":[[1.0,0.0],[0.0]],"im":[[0.0,0.0],[0.0,0.0]]}"#;
        assert!(serde_json::from_str::<SquareMatrix>(s).is_err());
    }
}
