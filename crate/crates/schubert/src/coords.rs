//! Coordinate charts on Schubert cells and the change of variables between
//! holomorphic and Lu coordinates.
//!
//! For a reduced word 𝐰 = (s_1, …, s_ℓ) the chart
//! h(ζ_1, …, ζ_ℓ) = [n_{ζ_1}ṡ_1, …, n_{ζ_ℓ}ṡ_ℓ] parameterizes the generic
//! locus of the Demazure model holomorphically, while
//! j(z_1, …, z_ℓ) = [k(n_{z_1}ṡ_1), …, k(n_{z_ℓ}ṡ_ℓ)] parameterizes the
//! corresponding locus of the Bott-Samelson model by Lu's coordinates.
//! The factors k(n_zṡ) and d(n_zṡ) have closed forms in terms of
//! a(z) = (1+|z|²)^{-1/2} ([`lu_k_closed`], [`lu_d_closed`]), which makes
//! both charts and the comparison between them explicitly computable.
//!
//! [`zeta_to_z`] composes h with the factorization map φ and reads Lu
//! coordinates off the compact factors: the q-recursion q_k = d(q_{k−1})·p_k
//! keeps each k(q_k) of the exact form k(n_{z_k}ṡ_k), so z_k is the ratio
//! of two block entries whose denominator i·a(z_k) never vanishes. The
//! forward direction is therefore defined on all of ℂ^ℓ. The inverse
//! [`z_to_zeta`] reduces the included compact tuple back to h-form by a
//! slot-by-slot Bruhat factorization inside each minimal parabolic
//! ([`bruhat_factor_ps`]); this direction has a genuine genericity
//! boundary — leaving the big cell surfaces as a distinct error.
//!
//! For words of length 2 and for the longest word of SL(3,ℂ) the change of
//! variables has closed forms ([`closed_form_len2`], [`closed_form_sl3`]);
//! the generic numeric path is checked against them in the verification
//! suites. Lu's coordinates are real-algebraic but not holomorphic: z_2
//! depends on the conjugate of ζ_1 whenever the two simple roots pair
//! non-trivially.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iwasawa::iwasawa_factor;
use crate::matrix::{SquareMatrix, Subgroup, Tolerances};
use crate::resolution::{Flavor, GroupTuple};
use crate::weyl::{pairing_ratio, simple_refl_rep, torus_param, unipotent_param, Word};

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ChartPointRepr {
    n: usize,
    word: Vec<usize>,
    coords: Vec<CoordRepr>,
}

/// A point of ℂ^ℓ attached to a reduced word: either holomorphic
/// coordinates (ζ_1, …, ζ_ℓ) or Lu coordinates (z_1, …, z_ℓ), depending on
/// which chart it is fed to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ChartPointRepr", into = "ChartPointRepr")]
pub struct ChartPoint {
    word: Word,
    coords: Vec<Complex64>,
}

impl ChartPoint {
    /// Requires a reduced word and one finite coordinate per letter.
    pub fn new(word: Word, coords: Vec<Complex64>) -> Result<Self> {
        if !word.is_reduced() {
            return Err(Error::NonReducedWord);
        }
        if coords.len() != word.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, found {}",
                word.len(),
                coords.len()
            )));
        }
        if !coords.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NotFinite);
        }
        Ok(ChartPoint { word, coords })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    /// Largest coordinate-wise absolute difference.
    pub fn max_abs_diff(&self, other: &ChartPoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

impl From<ChartPoint> for ChartPointRepr {
    fn from(p: ChartPoint) -> Self {
        ChartPointRepr {
            n: p.word.n(),
            word: p.word.letters().to_vec(),
            coords: p
                .coords
                .iter()
                .map(|z| CoordRepr { re: z.re, im: z.im })
                .collect(),
        }
    }
}

impl TryFrom<ChartPointRepr> for ChartPoint {
    type Error = String;
    fn try_from(repr: ChartPointRepr) -> std::result::Result<Self, String> {
        let word = Word::new(repr.n, repr.word).map_err(|e| e.to_string())?;
        let coords = repr
            .coords
            .iter()
            .map(|c| Complex64::new(c.re, c.im))
            .collect();
        ChartPoint::new(word, coords).map_err(|e| e.to_string())
    }
}

/// a(z) = (1 + |z|²)^{-1/2}, in (0, 1].
pub fn a_of(z: Complex64) -> f64 {
    1.0 / (1.0 + z.norm_sqr()).sqrt()
}

/// Closed form of the compact factor: k(n_zṡ_i) is the embedding at root i
/// of [[i·z·a, i·a], [i·a, −i·z̄·a]] with a = a(z).
pub fn lu_k_closed(i: usize, z: Complex64, n: usize) -> SquareMatrix {
    let a = a_of(z);
    let iu = Complex64::new(0.0, 1.0);
    let mut m = SquareMatrix::identity(n);
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    m[(i - 1, i - 1)] = iu * z * a;
    m[(i - 1, i)] = iu * a;
    m[(i, i - 1)] = iu * a;
    m[(i, i)] = -iu * z.conj() * a;
    m
}

/// Closed form of the solvable factor: d(n_zṡ_i) = n_{z̄} · a(z)^{−Ȟ_i},
/// i.e. exp(z̄·E_{i,i+1}) times the torus element with 1/a(z) at slot i.
pub fn lu_d_closed(i: usize, z: Complex64, n: usize) -> SquareMatrix {
    &unipotent_param(i, z.conj(), n) * &torus_param(i, 1.0 / a_of(z), n)
}

/// The holomorphic chart: the parabolic tuple with slot j = n_{ζ_j}·ṡ_j.
pub fn chart_h(pt: &ChartPoint) -> GroupTuple {
    let n = pt.word.n();
    let slots = pt
        .word
        .letters()
        .iter()
        .zip(&pt.coords)
        .map(|(&i, &zeta)| &unipotent_param(i, zeta, n) * &simple_refl_rep(i, n))
        .collect();
    GroupTuple::new_unchecked(pt.word.clone(), Flavor::Parabolic, slots)
}

/// The Lu chart: the compact tuple with slot j = k(n_{z_j}·ṡ_j), via the
/// closed form.
pub fn chart_j(pt: &ChartPoint) -> GroupTuple {
    let n = pt.word.n();
    let slots = pt
        .word
        .letters()
        .iter()
        .zip(&pt.coords)
        .map(|(&i, &z)| lu_k_closed(i, z, n))
        .collect();
    GroupTuple::new_unchecked(pt.word.clone(), Flavor::Compact, slots)
}

/// The unipotent matrix M with M·ẇ = n_{ζ_1}ṡ_1 · n_{ζ_2}ṡ_2 ⋯ n_{ζ_ℓ}ṡ_ℓ.
///
/// For a reduced word the product lies in N_w·ẇ, so M is unit upper
/// triangular; a membership failure signals a non-reduced word or a bug and
/// is reported as an error.
pub fn big_product_m(pt: &ChartPoint, tol: &Tolerances) -> Result<SquareMatrix> {
    let n = pt.word.n();
    let mut prod = SquareMatrix::identity(n);
    for slot in chart_h(pt).slots() {
        prod = &prod * slot;
    }
    // ẇ is unitary, so its inverse is the adjoint
    let m = &prod * &pt.word.rep().adjoint();
    if !m.is_member(Subgroup::N, tol) {
        return Err(Error::Membership {
            slot: 0,
            subgroup: Subgroup::N.to_string(),
        });
    }
    Ok(m)
}

/// Holomorphic coordinates to Lu coordinates.
///
/// Runs the q-recursion q_k = d(q_{k−1})·n_{ζ_k}ṡ_k and extracts
/// z_k = k(q_k)_{(i,i)} / k(q_k)_{(i,i+1)} (1-based block entries): the
/// closed form of k(n_zṡ) makes that ratio exactly z_k, with denominator
/// i·a(z_k) ≠ 0. Total on ℂ^ℓ — no genericity condition.
pub fn zeta_to_z(pt: &ChartPoint, tol: &Tolerances) -> Result<ChartPoint> {
    let h = chart_h(pt);
    let mut z = Vec::with_capacity(pt.word.len());
    let mut prev_d: Option<SquareMatrix> = None;
    for (slot, &i) in h.slots().iter().zip(pt.word.letters()) {
        let q = match &prev_d {
            None => slot.clone(),
            Some(d) => d * slot,
        };
        let f = iwasawa_factor(&q, tol)?;
        z.push(f.k[(i - 1, i - 1)] / f.k[(i - 1, i)]);
        prev_d = Some(f.d());
    }
    ChartPoint::new(pt.word.clone(), z)
}

/// Factors m ∈ P_s(i) in the big cell as m = n_ζ·ṡ_i·b with b upper
/// triangular: ζ is the entry ratio m_{(i,i)} / m_{(i+1,i)} (1-based), and
/// b = (n_ζṡ_i)⁻¹·m. Inputs with |m_{(i+1,i)}| ≤ tol.coset·‖m‖ lie outside
/// the big cell and are rejected.
pub fn bruhat_factor_ps(
    m: &SquareMatrix,
    i: usize,
    tol: &Tolerances,
) -> Result<(Complex64, SquareMatrix)> {
    let n = m.dim();
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    debug_assert!(m.is_member(Subgroup::Ps(i), tol));
    let pivot = m[(i, i - 1)];
    if pivot.norm() <= tol.coset * m.norm_fro() {
        return Err(Error::OutsideBigCell { index: i });
    }
    let zeta = m[(i - 1, i - 1)] / pivot;
    // (n_ζ·ṡ)⁻¹ embeds the exact block [[0, −i], [−i, i·ζ]]
    let iu = Complex64::new(0.0, 1.0);
    let mut inv = SquareMatrix::identity(n);
    inv[(i - 1, i - 1)] = Complex64::new(0.0, 0.0);
    inv[(i - 1, i)] = -iu;
    inv[(i, i - 1)] = -iu;
    inv[(i, i)] = iu * zeta;
    let b = &inv * m;
    Ok((zeta, b))
}

/// Lu coordinates to holomorphic coordinates.
///
/// Sweeps b_0 = I, m_k = b_{k−1}·k(n_{z_k}ṡ_k), (ζ_k, b_k) =
/// Bruhat-factorization of m_k in P_s(i_k). Points outside the big cell
/// fail at the offending slot.
pub fn z_to_zeta(pt: &ChartPoint, tol: &Tolerances) -> Result<ChartPoint> {
    let n = pt.word.n();
    let mut zeta = Vec::with_capacity(pt.word.len());
    let mut b = SquareMatrix::identity(n);
    for (slot, (&i, &z)) in pt.word.letters().iter().zip(&pt.coords).enumerate() {
        let m = &b * &lu_k_closed(i, z, n);
        let (z_out, b_next) = bruhat_factor_ps(&m, i, tol).map_err(|e| match e {
            Error::OutsideBigCell { .. } => Error::NonGenericSlot { slot },
            other => other,
        })?;
        zeta.push(z_out);
        b = b_next;
    }
    ChartPoint::new(pt.word.clone(), zeta)
}

/// Closed form of the change of variables for reduced words of length 2:
/// z_1 = ζ_1 and z_2 = (1+|ζ_1|²)^{⟨⟨γ_1,γ_2⟩⟩/⟨⟨γ_1,γ_1⟩⟩}·ζ_2.
pub fn closed_form_len2(pt: &ChartPoint) -> Result<ChartPoint> {
    if pt.word.len() != 2 {
        return Err(Error::WordShape(format!(
            "length-2 word required, got length {}",
            pt.word.len()
        )));
    }
    let letters = pt.word.letters();
    let ratio = pairing_ratio(letters[0], letters[1], pt.word.n());
    let exponent = *ratio.numer() as f64 / *ratio.denom() as f64;
    let zeta1 = pt.coords[0];
    let zeta2 = pt.coords[1];
    let z2 = zeta2 * (1.0 + zeta1.norm_sqr()).powf(exponent);
    ChartPoint::new(pt.word.clone(), vec![zeta1, z2])
}

/// Closed form of the change of variables for SL(3,ℂ) on the word (1,2,1):
///
/// ```text
/// z_1 = ζ_1
/// z_2 = ζ_2 / √(1+|ζ_1|²)
/// z_3 = (i·ζ̄_1·ζ_2 + ζ_3·(1+|ζ_1|²)) / √(1+|ζ_1|²+|ζ_2|²)
/// ```
pub fn closed_form_sl3(pt: &ChartPoint) -> Result<ChartPoint> {
    require_sl3_word(pt)?;
    let (zeta1, zeta2, zeta3) = (pt.coords[0], pt.coords[1], pt.coords[2]);
    let r1 = 1.0 + zeta1.norm_sqr();
    let z2 = zeta2 / r1.sqrt();
    let iu = Complex64::new(0.0, 1.0);
    let z3 = (iu * zeta1.conj() * zeta2 + zeta3 * r1) / (r1 + zeta2.norm_sqr()).sqrt();
    ChartPoint::new(pt.word.clone(), vec![zeta1, z2, z3])
}

/// Lu's map on the unipotent model: F with k(F·ẇ) = k(n_{z_1}ṡ_1)⋯k(n_{z_ℓ}ṡ_ℓ),
/// realized as the unipotent representative of the inverted coordinates.
/// The input is a point in Lu coordinates; non-generic points propagate
/// from the inversion.
pub fn lu_f_map(pt: &ChartPoint, tol: &Tolerances) -> Result<SquareMatrix> {
    big_product_m(&z_to_zeta(pt, tol)?, tol)
}

/// The coordinates (u_1, u_2, u_3) = (ζ_1, ζ_3, i·ζ_2 + ζ_1·ζ_3) of the
/// unipotent matrix M(ζ) for SL(3,ℂ) on the word (1,2,1): u_1, u_2, u_3
/// are its (1,2), (2,3) and (1,3) entries.
pub fn u_from_zeta(pt: &ChartPoint) -> Result<Vec<Complex64>> {
    require_sl3_word(pt)?;
    let (zeta1, zeta2, zeta3) = (pt.coords[0], pt.coords[1], pt.coords[2]);
    let iu = Complex64::new(0.0, 1.0);
    Ok(vec![zeta1, zeta3, iu * zeta2 + zeta1 * zeta3])
}

/// Worst coordinate-wise deviation of `a` from the reference `b`, relative
/// with a floor of 1 on the denominator so near-zero coordinates compare
/// absolutely.
pub fn chart_point_rel_dev(a: &ChartPoint, b: &ChartPoint) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y).norm() / y.norm().max(1.0))
        .fold(0.0, f64::max)
}

fn require_sl3_word(pt: &ChartPoint) -> Result<()> {
    if pt.word.n() != 3 || pt.word.letters() != [1, 2, 1] {
        return Err(Error::WordShape(format!(
            "SL(3) word (1,2,1) required, got n = {}, word {:?}",
            pt.word.n(),
            pt.word.letters()
        )));
    }
    Ok(())
}
