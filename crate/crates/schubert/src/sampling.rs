//! Deterministic seeded sampling of group elements, tuples, and chart
//! points.
//!
//! All randomness in the crate flows through [`Sampler`], which wraps a
//! ChaCha8 stream cipher RNG. ChaCha8 is fully specified, so a fixed seed
//! reproduces the same sample sequence on every platform and every run —
//! the verification suites and the CLI rely on this for replayable
//! failures and byte-identical reports.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::SquareMatrix;
use crate::resolution::{ActionKind, ActionTuple, Flavor, GroupTuple};
use crate::weyl::{psi_embed, Word};
use crate::{coords::ChartPoint, matrix::Tolerances};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform on [0, 1).
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Uniform over the square [-half, half]².
    pub fn complex_box(&mut self, half: f64) -> Complex64 {
        Complex64::new(
            (self.uniform() * 2.0 - 1.0) * half,
            (self.uniform() * 2.0 - 1.0) * half,
        )
    }

    /// Uniform over the closed disk |z| ≤ radius.
    pub fn complex_disk(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.uniform().sqrt();
        let theta = 2.0 * std::f64::consts::PI * self.uniform();
        Complex64::from_polar(r, theta)
    }

    /// A determinant-1 matrix with entries of moderate size: box-sampled
    /// entries rescaled by the principal n-th root of the determinant.
    /// Draws with |det| < 0.3 are rejected to keep the conditioning mild.
    pub fn special(&mut self, n: usize) -> SquareMatrix {
        loop {
            let g = SquareMatrix::from_fn(n, |_, _| self.complex_box(1.0));
            let det = g.det();
            if det.norm() < 0.3 {
                continue;
            }
            let scale = det.powf(-1.0 / n as f64);
            return &g * scale;
        }
    }

    /// A unitary determinant-1 matrix: the k-factor of a random special
    /// matrix.
    pub fn unitary(&mut self, n: usize) -> SquareMatrix {
        let g = self.special(n);
        crate::iwasawa::iwasawa_factor(&g, &Tolerances::default())
            .expect("sampled matrices are factorable")
            .k
    }

    /// A random element of SU(2).
    pub fn su2(&mut self) -> SquareMatrix {
        loop {
            let alpha = self.complex_box(1.0);
            let beta = self.complex_box(1.0);
            let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
            if norm < 0.1 {
                continue;
            }
            let alpha = alpha / norm;
            let beta = beta / norm;
            let mut m = SquareMatrix::zeros(2);
            m[(0, 0)] = alpha;
            m[(0, 1)] = beta;
            m[(1, 0)] = -beta.conj();
            m[(1, 1)] = alpha.conj();
            return m;
        }
    }

    /// A diagonal unitary with determinant 1 (an element of T).
    pub fn torus(&mut self, n: usize) -> SquareMatrix {
        let mut m = SquareMatrix::identity(n);
        let mut total = 0.0;
        for j in 0..n - 1 {
            let theta = 2.0 * std::f64::consts::PI * self.uniform();
            total += theta;
            m[(j, j)] = Complex64::from_polar(1.0, theta);
        }
        m[(n - 1, n - 1)] = Complex64::from_polar(1.0, -total);
        m
    }

    /// A positive diagonal matrix with determinant 1 (an element of A).
    pub fn positive_diag(&mut self, n: usize) -> SquareMatrix {
        let mut logs: Vec<f64> = (0..n).map(|_| self.uniform() * 1.4 - 0.7).collect();
        let mean = logs.iter().sum::<f64>() / n as f64;
        for l in &mut logs {
            *l -= mean;
        }
        let mut m = SquareMatrix::identity(n);
        for (j, l) in logs.iter().enumerate() {
            m[(j, j)] = Complex64::new(l.exp(), 0.0);
        }
        m
    }

    /// A unit upper triangular matrix (an element of N).
    pub fn upper_unipotent(&mut self, n: usize) -> SquareMatrix {
        let mut m = SquareMatrix::identity(n);
        for r in 0..n {
            for c in r + 1..n {
                m[(r, c)] = self.complex_box(1.0);
            }
        }
        m
    }

    /// An element of D = AN.
    pub fn solvable(&mut self, n: usize) -> SquareMatrix {
        &self.positive_diag(n) * &self.upper_unipotent(n)
    }

    /// An upper triangular determinant-1 matrix (an element of B).
    pub fn borel(&mut self, n: usize) -> SquareMatrix {
        &(&self.torus(n) * &self.positive_diag(n)) * &self.upper_unipotent(n)
    }

    /// An element of the minimal parabolic P_s(i): an embedded random
    /// SL(2,ℂ) block times a Borel element.
    pub fn min_parabolic(&mut self, i: usize, n: usize) -> SquareMatrix {
        let block = self.special(2);
        let embedded = psi_embed(i, &block, n, &Tolerances::default())
            .expect("sampled blocks have determinant 1");
        &embedded * &self.borel(n)
    }

    /// An element of K_s(i) = K ∩ P_s(i): an embedded SU(2) block times a
    /// torus element.
    pub fn min_compact(&mut self, i: usize, n: usize) -> SquareMatrix {
        let block = self.su2();
        let embedded = psi_embed(i, &block, n, &Tolerances::default())
            .expect("SU(2) blocks have determinant 1");
        &embedded * &self.torus(n)
    }

    /// A word of the given length with uniformly chosen letters.
    pub fn word(&mut self, n: usize, len: usize) -> Word {
        let letters = (0..len)
            .map(|_| 1 + (self.uniform() * (n - 1) as f64) as usize)
            .map(|l| l.min(n - 1))
            .collect();
        Word::new(n, letters).expect("letters sampled in range")
    }

    /// A parabolic tuple on the given word.
    pub fn parabolic_tuple(&mut self, word: &Word) -> GroupTuple {
        let slots = word
            .letters()
            .iter()
            .map(|&i| self.min_parabolic(i, word.n()))
            .collect();
        GroupTuple::new_unchecked(word.clone(), Flavor::Parabolic, slots)
    }

    /// A compact tuple on the given word.
    pub fn compact_tuple(&mut self, word: &Word) -> GroupTuple {
        let slots = word
            .letters()
            .iter()
            .map(|&i| self.min_compact(i, word.n()))
            .collect();
        GroupTuple::new_unchecked(word.clone(), Flavor::Compact, slots)
    }

    /// A B^ℓ action tuple for the given word.
    pub fn borel_action(&mut self, word: &Word) -> ActionTuple {
        let slots = (0..word.len()).map(|_| self.borel(word.n())).collect();
        ActionTuple::new_unchecked(word.clone(), ActionKind::Borel, slots)
    }

    /// A T^ℓ action tuple for the given word.
    pub fn torus_action(&mut self, word: &Word) -> ActionTuple {
        let slots = (0..word.len()).map(|_| self.torus(word.n())).collect();
        ActionTuple::new_unchecked(word.clone(), ActionKind::Torus, slots)
    }

    /// A chart point with coordinates drawn from the disk |z| ≤ radius.
    pub fn chart_point(&mut self, word: &Word, radius: f64) -> ChartPoint {
        let coords = (0..word.len()).map(|_| self.complex_disk(radius)).collect();
        ChartPoint::new(word.clone(), coords).expect("sampled coordinates are finite")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Subgroup;

    #[test]
    fn samplers_land_in_their_subgroups() {
        let tol = Tolerances::default();
        let mut s = Sampler::new(123);
        for n in 2..=4 {
            for _ in 0..10 {
                let g = s.special(n);
                assert!((g.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
                assert!(s.unitary(n).is_member(Subgroup::K, &tol));
                assert!(s.torus(n).is_member(Subgroup::T, &tol));
                assert!(s.positive_diag(n).is_member(Subgroup::A, &tol));
                assert!(s.solvable(n).is_member(Subgroup::D, &tol));
                assert!(s.borel(n).is_member(Subgroup::B, &tol));
                for i in 1..n {
                    assert!(s.min_parabolic(i, n).is_member(Subgroup::Ps(i), &tol));
                    assert!(s.min_compact(i, n).is_member(Subgroup::Ks(i), &tol));
                }
            }
        }
    }

    #[test]
    fn identical_seeds_reproduce_samples() {
        let mut s1 = Sampler::new(99);
        let mut s2 = Sampler::new(99);
        for _ in 0..5 {
            assert_eq!(s1.special(3), s2.special(3));
            assert_eq!(s1.complex_disk(2.0), s2.complex_disk(2.0));
        }
    }

    #[test]
    fn disk_samples_stay_in_disk() {
        let mut s = Sampler::new(7);
        for _ in 0..200 {
            assert!(s.complex_disk(2.0).norm() <= 2.0 + 1e-12);
        }
    }
}
