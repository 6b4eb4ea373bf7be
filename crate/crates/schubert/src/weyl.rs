//! Type-A root data: Weyl words, permutations, the rank-one embeddings
//! Ψ_i: SL(2,ℂ) → SL(n,ℂ), and the standard representatives built from them.
//!
//! The simple roots of SL(n,ℂ) are γ_i = λ_i − λ_{i+1} for i = 1..n−1; the
//! root γ_i acts on rows/columns (i, i+1) (1-based). The Weyl group is the
//! symmetric group S_n, generated by the adjacent transpositions s_i.
//!
//! A [`Word`] is a finite sequence of simple-root indices; the index in the
//! sequence records position, not which simple root it is, so repeated
//! letters are allowed and reducedness is a queryable property rather than
//! an invariant. The representative of the non-trivial Weyl element of
//! SL(2,ℂ) is σ = [[0, i], [i, 0]], and ṡ_i = Ψ_i(σ), ẇ = ṡ_1·ṡ_2⋯ṡ_ℓ.

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{SquareMatrix, Tolerances};

/// A sequence of simple-reflection indices (s_1, …, s_ℓ) for SL(n,ℂ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    n: usize,
    word: Vec<usize>,
}

impl From<Word> for WordRepr {
    fn from(w: Word) -> Self {
        WordRepr {
            n: w.n,
            word: w.letters,
        }
    }
}

impl TryFrom<WordRepr> for Word {
    type Error = String;
    fn try_from(repr: WordRepr) -> std::result::Result<Self, String> {
        Word::new(repr.n, repr.word).map_err(|e| e.to_string())
    }
}

impl Word {
    /// Validates that every letter lies in 1..n-1.
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        for &letter in &letters {
            if letter == 0 || letter >= n {
                return Err(Error::LetterOutOfRange { letter, n });
            }
        }
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product s_1·s_2⋯s_ℓ of adjacent transpositions, in letter order.
    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &letter in &self.letters {
            p = p.compose(&Permutation::transposition(self.n, letter, letter + 1));
        }
        p
    }

    /// True iff the letter count equals the length of the permutation the
    /// word multiplies out to.
    pub fn is_reduced(&self) -> bool {
        self.letters.len() == self.to_permutation().length()
    }

    /// The matrix representative ẇ = ṡ_1·ṡ_2⋯ṡ_ℓ.
    pub fn rep(&self) -> SquareMatrix {
        let mut m = SquareMatrix::identity(self.n);
        for &letter in &self.letters {
            m = &m * &simple_refl_rep(letter, self.n);
        }
        m
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::WordMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(self.n, letters)
    }

    /// The staircase reduced word (1)(2,1)(3,2,1)… for the longest element
    /// of S_n.
    pub fn longest_staircase(n: usize) -> Word {
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for top in 1..n {
            for letter in (1..=top).rev() {
                letters.push(letter);
            }
        }
        Word { n, letters }
    }
}

/// A permutation of {1, …, n}, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Validates bijectivity of the 1-based image sequence.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of x (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "rank mismatch");
        Permutation {
            images: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (j, &img) in self.images.iter().enumerate() {
            images[img - 1] = j + 1;
        }
        Permutation { images }
    }

    /// Coxeter length: the number of inversions, which equals the minimal
    /// length of a word multiplying out to this permutation.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The 0/1 permutation matrix P with P·e_j = e_{w(j)}.
    pub fn matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for j in 1..=self.n() {
            m[(self.apply(j) - 1, j - 1)] = Complex64::new(1.0, 0.0);
        }
        m
    }
}

/// Places a 2×2 determinant-1 block into rows/columns (i, i+1) of the
/// identity: the group homomorphism Ψ_i evaluated at the block.
pub fn psi_embed(
    i: usize,
    block: &SquareMatrix,
    n: usize,
    tol: &Tolerances,
) -> Result<SquareMatrix> {
    assert!(block.dim() == 2, "psi_embed takes a 2x2 block");
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    let defect = (block.det() - Complex64::new(1.0, 0.0)).norm();
    if defect > tol.det {
        return Err(Error::NotSpecial(defect));
    }
    Ok(embed_unchecked(i, block, n))
}

fn embed_unchecked(i: usize, block: &SquareMatrix, n: usize) -> SquareMatrix {
    let mut m = SquareMatrix::identity(n);
    m[(i - 1, i - 1)] = block[(0, 0)];
    m[(i - 1, i)] = block[(0, 1)];
    m[(i, i - 1)] = block[(1, 0)];
    m[(i, i)] = block[(1, 1)];
    m
}

/// The representative ṡ_i = Ψ_i(σ) with σ = [[0, i], [i, 0]].
pub fn simple_refl_rep(i: usize, n: usize) -> SquareMatrix {
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    let im = Complex64::new(0.0, 1.0);
    let mut m = SquareMatrix::identity(n);
    m[(i - 1, i - 1)] = Complex64::new(0.0, 0.0);
    m[(i, i)] = Complex64::new(0.0, 0.0);
    m[(i - 1, i)] = im;
    m[(i, i - 1)] = im;
    m
}

/// n_z = exp(z·E_{i,i+1}): the identity plus z at entry (i, i+1), 1-based.
/// Exact, since the exponential of a single-entry nilpotent truncates.
pub fn unipotent_param(i: usize, z: Complex64, n: usize) -> SquareMatrix {
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    assert!(
        z.re.is_finite() && z.im.is_finite(),
        "parameter must be finite"
    );
    let mut m = SquareMatrix::identity(n);
    m[(i - 1, i)] = z;
    m
}

/// a^{Ȟ_i} = Ψ_i(diag(a, 1/a)) ∈ A for a > 0: the diagonal matrix with a at
/// position i and 1/a at position i+1, 1-based.
pub fn torus_param(i: usize, a: f64, n: usize) -> SquareMatrix {
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    assert!(a > 0.0 && a.is_finite(), "torus parameter must be positive");
    let mut m = SquareMatrix::identity(n);
    m[(i - 1, i - 1)] = Complex64::new(a, 0.0);
    m[(i, i)] = Complex64::new(1.0 / a, 0.0);
    m
}

/// The normalized dual pairing ⟨⟨γ_i, γ_j⟩⟩ / ⟨⟨γ_i, γ_i⟩⟩ of simple roots
/// in type A: 1 on the diagonal, −1/2 for adjacent roots, 0 otherwise.
/// Only these ratios enter any formula here, so the overall normalization
/// of the invariant form never matters.
pub fn pairing_ratio(i: usize, j: usize, n: usize) -> Ratio<i64> {
    assert!(i >= 1 && i < n, "root index {i} out of range for n = {n}");
    assert!(j >= 1 && j < n, "root index {j} out of range for n = {n}");
    if i == j {
        Ratio::new(1, 1)
    } else if i.abs_diff(j) == 1 {
        Ratio::new(-1, 2)
    } else {
        Ratio::new(0, 1)
    }
}
