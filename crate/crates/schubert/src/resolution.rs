//! The tuple calculus behind the Demazure and Bott-Samelson constructions.
//!
//! For a word 𝐰 = (s_1, …, s_ℓ) the product group P_𝐰 = P_{s_1}×⋯×P_{s_ℓ}
//! carries a free right action of B^ℓ,
//!
//! ```text
//! (p_1, …, p_ℓ).(b_1, …, b_ℓ) = (p_1 b_1, b_1⁻¹ p_2 b_2, …, b_{ℓ−1}⁻¹ p_ℓ b_ℓ),
//! ```
//!
//! whose quotient is the Demazure space 𝒟_𝐰; restricting from P to K and
//! from B to T gives the Bott-Samelson space ℬ𝒮_𝐰 = K_𝐰/T^ℓ. Quotients are
//! never materialized here: points are tuples of matrix representatives
//! ([`GroupTuple`]) and equality of cosets is decided by
//! [`tuple_coset_equal_d`] / [`tuple_coset_equal_bs`], which solve for the
//! unique connecting action tuple slot by slot (the action is free, so the
//! candidate witness is forced).
//!
//! The maps between the two models are built from the Iwasawa factorization:
//! β sends (p_1, …, p_ℓ) to the recursively defined q-tuple with q_1 = p_1
//! and q_k = d(q_{k−1})·p_k, and φ = k∘β sends a parabolic tuple to a
//! compact one. φ descends to the quotients and inverts the canonical
//! inclusion ℬ𝒮_𝐰 → 𝒟_𝐰; the multiplication maps ρ and ρ^K intertwine the
//! two sides through k, which is the telescoping identity
//! ρ(p) = ρ^K(φ(p))·d(β(p)_ℓ).
//!
//! Words need not be reduced for anything in this module; reducedness only
//! matters for the chart-level interpretation in [`crate::coords`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iwasawa::{d_map, iwasawa_factor};
use crate::matrix::{SquareMatrix, Subgroup, Tolerances};
use crate::weyl::Word;

/// Whether a tuple lives in P_𝐰 (slots in minimal parabolics) or K_𝐰
/// (slots in their compact forms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Parabolic,
    Compact,
}

impl Flavor {
    fn name(self) -> &'static str {
        match self {
            Flavor::Parabolic => "parabolic",
            Flavor::Compact => "compact",
        }
    }

    fn slot_subgroup(self, letter: usize) -> Subgroup {
        match self {
            Flavor::Parabolic => Subgroup::Ps(letter),
            Flavor::Compact => Subgroup::Ks(letter),
        }
    }
}

/// Whether an action tuple lives in B^ℓ or T^ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Borel,
    Torus,
}

impl ActionKind {
    fn subgroup(self) -> Subgroup {
        match self {
            ActionKind::Borel => Subgroup::B,
            ActionKind::Torus => Subgroup::T,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupTupleRepr {
    n: usize,
    word: Vec<usize>,
    flavor: Flavor,
    slots: Vec<SquareMatrix>,
}

/// A point of P_𝐰 or K_𝐰: one matrix per letter of the word, with slot j
/// in the minimal parabolic (or its compact form) of letter j.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GroupTupleRepr", into = "GroupTupleRepr")]
pub struct GroupTuple {
    word: Word,
    flavor: Flavor,
    slots: Vec<SquareMatrix>,
}

impl GroupTuple {
    /// Validates slot count, dimensions, and per-slot membership under the
    /// given tolerances.
    pub fn new(
        word: Word,
        flavor: Flavor,
        slots: Vec<SquareMatrix>,
        tol: &Tolerances,
    ) -> Result<Self> {
        let t = Self::new_unchecked(word, flavor, slots);
        t.check_membership(tol)?;
        Ok(t)
    }

    /// Builds a tuple without membership checks; for slots already known to
    /// lie in their subgroups by construction.
    pub fn new_unchecked(word: Word, flavor: Flavor, slots: Vec<SquareMatrix>) -> Self {
        assert_eq!(word.len(), slots.len(), "one slot per letter");
        for m in &slots {
            assert_eq!(m.dim(), word.n(), "slot dimension must match rank");
        }
        GroupTuple {
            word,
            flavor,
            slots,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn slots(&self) -> &[SquareMatrix] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    fn check_membership(&self, tol: &Tolerances) -> Result<()> {
        for (j, (slot, &letter)) in self.slots.iter().zip(self.word.letters()).enumerate() {
            let subgroup = self.flavor.slot_subgroup(letter);
            if !slot.is_member(subgroup, tol) {
                return Err(Error::Membership {
                    slot: j,
                    subgroup: subgroup.to_string(),
                });
            }
        }
        Ok(())
    }

    fn require(&self, flavor: Flavor) -> Result<()> {
        if self.flavor != flavor {
            return Err(Error::FlavorMismatch {
                expected: flavor.name(),
                found: self.flavor.name(),
            });
        }
        Ok(())
    }
}

impl From<GroupTuple> for GroupTupleRepr {
    fn from(t: GroupTuple) -> Self {
        GroupTupleRepr {
            n: t.word.n(),
            word: t.word.letters().to_vec(),
            flavor: t.flavor,
            slots: t.slots,
        }
    }
}

impl TryFrom<GroupTupleRepr> for GroupTuple {
    type Error = String;
    fn try_from(repr: GroupTupleRepr) -> std::result::Result<Self, String> {
        let word = Word::new(repr.n, repr.word).map_err(|e| e.to_string())?;
        if repr.slots.len() != word.len() {
            return Err("slot count must equal word length".into());
        }
        for m in &repr.slots {
            if m.dim() != word.n() {
                return Err("slot dimension must match rank".into());
            }
        }
        GroupTuple::new(word, repr.flavor, repr.slots, &Tolerances::default())
            .map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct ActionTupleRepr {
    n: usize,
    word: Vec<usize>,
    kind: ActionKind,
    slots: Vec<SquareMatrix>,
}

/// An element of B^ℓ (or T^ℓ) acting on tuples over the same word.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ActionTupleRepr", into = "ActionTupleRepr")]
pub struct ActionTuple {
    word: Word,
    kind: ActionKind,
    slots: Vec<SquareMatrix>,
}

impl ActionTuple {
    pub fn new(
        word: Word,
        kind: ActionKind,
        slots: Vec<SquareMatrix>,
        tol: &Tolerances,
    ) -> Result<Self> {
        let t = Self::new_unchecked(word, kind, slots);
        for (j, slot) in t.slots.iter().enumerate() {
            if !slot.is_member(t.kind.subgroup(), tol) {
                return Err(Error::Membership {
                    slot: j,
                    subgroup: t.kind.subgroup().to_string(),
                });
            }
        }
        Ok(t)
    }

    pub fn new_unchecked(word: Word, kind: ActionKind, slots: Vec<SquareMatrix>) -> Self {
        assert_eq!(word.len(), slots.len(), "one slot per letter");
        for m in &slots {
            assert_eq!(m.dim(), word.n(), "slot dimension must match rank");
        }
        ActionTuple { word, kind, slots }
    }

    /// The identity of B^ℓ (or T^ℓ) over the word.
    pub fn identity(word: Word, kind: ActionKind) -> Self {
        let slots = (0..word.len())
            .map(|_| SquareMatrix::identity(word.n()))
            .collect();
        ActionTuple { word, kind, slots }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    pub fn slots(&self) -> &[SquareMatrix] {
        &self.slots
    }

    /// Slotwise product; composing two actions equals acting by the
    /// composition.
    pub fn compose(&self, other: &ActionTuple) -> Result<ActionTuple> {
        if self.word != other.word {
            return Err(Error::WordMismatch);
        }
        if self.kind != other.kind {
            return Err(Error::FlavorMismatch {
                expected: "matching action kinds",
                found: "mixed",
            });
        }
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(x, y)| x * y)
            .collect();
        Ok(ActionTuple {
            word: self.word.clone(),
            kind: self.kind,
            slots,
        })
    }
}

impl From<ActionTuple> for ActionTupleRepr {
    fn from(t: ActionTuple) -> Self {
        ActionTupleRepr {
            n: t.word.n(),
            word: t.word.letters().to_vec(),
            kind: t.kind,
            slots: t.slots,
        }
    }
}

impl TryFrom<ActionTupleRepr> for ActionTuple {
    type Error = String;
    fn try_from(repr: ActionTupleRepr) -> std::result::Result<Self, String> {
        let word = Word::new(repr.n, repr.word).map_err(|e| e.to_string())?;
        ActionTuple::new(word, repr.kind, repr.slots, &Tolerances::default())
            .map_err(|e| e.to_string())
    }
}

/// The twisted right action (p_1b_1, b_1⁻¹p_2b_2, …, b_{ℓ−1}⁻¹p_ℓb_ℓ).
///
/// Parabolic tuples take B-actions, compact tuples take T-actions. The
/// output is membership-checked; a violation signals a tolerance breach.
pub fn act(p: &GroupTuple, b: &ActionTuple, tol: &Tolerances) -> Result<GroupTuple> {
    if p.word != b.word {
        return Err(Error::WordMismatch);
    }
    let compatible = matches!(
        (p.flavor, b.kind),
        (Flavor::Parabolic, ActionKind::Borel) | (Flavor::Compact, ActionKind::Torus)
    );
    if !compatible {
        return Err(Error::FlavorMismatch {
            expected: match p.flavor {
                Flavor::Parabolic => "Borel action",
                Flavor::Compact => "torus action",
            },
            found: match b.kind {
                ActionKind::Borel => "Borel action",
                ActionKind::Torus => "torus action",
            },
        });
    }
    let mut slots = Vec::with_capacity(p.len());
    let mut prev_inv = SquareMatrix::identity(p.word.n());
    for (slot, bj) in p.slots.iter().zip(&b.slots) {
        slots.push(&(&prev_inv * slot) * bj);
        prev_inv = match b.kind {
            // torus slots are unitary, so the adjoint is the inverse
            ActionKind::Torus => bj.adjoint(),
            ActionKind::Borel => bj.inverse()?,
        };
    }
    GroupTuple::new(p.word.clone(), p.flavor, slots, tol)
}

/// The recursion q_1 = p_1, q_k = d(q_{k−1})·p_k. A real-algebraic
/// bijection of P_𝐰 onto itself.
pub fn beta(p: &GroupTuple, tol: &Tolerances) -> Result<GroupTuple> {
    p.require(Flavor::Parabolic)?;
    let mut slots: Vec<SquareMatrix> = Vec::with_capacity(p.len());
    for (k, slot) in p.slots.iter().enumerate() {
        let q = if k == 0 {
            slot.clone()
        } else {
            &d_map(&slots[k - 1], tol)? * slot
        };
        slots.push(q);
    }
    Ok(GroupTuple::new_unchecked(
        p.word.clone(),
        Flavor::Parabolic,
        slots,
    ))
}

/// Inverse of [`beta`]: p_1 = q_1, p_k = d(q_{k−1})⁻¹·q_k.
pub fn beta_inv(q: &GroupTuple, tol: &Tolerances) -> Result<GroupTuple> {
    q.require(Flavor::Parabolic)?;
    let mut slots: Vec<SquareMatrix> = Vec::with_capacity(q.len());
    for (k, slot) in q.slots.iter().enumerate() {
        let p = if k == 0 {
            slot.clone()
        } else {
            &d_map(&q.slots[k - 1], tol)?.inverse()? * slot
        };
        slots.push(p);
    }
    Ok(GroupTuple::new_unchecked(
        q.word.clone(),
        Flavor::Parabolic,
        slots,
    ))
}

/// φ(p) = (k(q_1), …, k(q_ℓ)) where q = β(p). Sends P_𝐰 to K_𝐰 and
/// descends to the inverse of the canonical inclusion ℬ𝒮_𝐰 → 𝒟_𝐰.
pub fn phi(p: &GroupTuple, tol: &Tolerances) -> Result<GroupTuple> {
    p.require(Flavor::Parabolic)?;
    let mut slots: Vec<SquareMatrix> = Vec::with_capacity(p.len());
    let mut prev_d: Option<SquareMatrix> = None;
    for slot in &p.slots {
        let q = match &prev_d {
            None => slot.clone(),
            Some(d) => d * slot,
        };
        let f = iwasawa_factor(&q, tol)?;
        prev_d = Some(f.d());
        slots.push(f.k);
    }
    Ok(GroupTuple::new_unchecked(
        p.word.clone(),
        Flavor::Compact,
        slots,
    ))
}

/// The canonical inclusion K_𝐰 → P_𝐰: the same matrices, re-flagged.
///
/// Panics if the input is not compact.
pub fn include(k: &GroupTuple) -> GroupTuple {
    assert_eq!(k.flavor, Flavor::Compact, "include takes a compact tuple");
    GroupTuple::new_unchecked(k.word.clone(), Flavor::Parabolic, k.slots.clone())
}

/// The multiplication map P_𝐰 → G, inducing ρ: 𝒟_𝐰 → G/B.
pub fn rho(p: &GroupTuple) -> SquareMatrix {
    assert_eq!(p.flavor, Flavor::Parabolic, "rho takes a parabolic tuple");
    product(&p.slots, p.word.n())
}

/// The multiplication map K_𝐰 → K, inducing ρ^K: ℬ𝒮_𝐰 → K/T.
pub fn rho_k(k: &GroupTuple) -> SquareMatrix {
    assert_eq!(k.flavor, Flavor::Compact, "rho_k takes a compact tuple");
    product(&k.slots, k.word.n())
}

fn product(slots: &[SquareMatrix], n: usize) -> SquareMatrix {
    let mut out = SquareMatrix::identity(n);
    for slot in slots {
        out = &out * slot;
    }
    out
}

/// Largest membership defect of the forced B^ℓ witness connecting two
/// parabolic tuples: b_1 = p1_1⁻¹·p2_1, b_k = p1_k⁻¹·b_{k−1}·p2_k. The
/// tuples lie in the same B^ℓ-orbit iff every b_k is upper triangular, so
/// the defect is the worst relative below-diagonal magnitude.
pub fn tuple_coset_defect_d(p1: &GroupTuple, p2: &GroupTuple) -> Result<f64> {
    p1.require(Flavor::Parabolic)?;
    p2.require(Flavor::Parabolic)?;
    if p1.word != p2.word {
        return Err(Error::WordMismatch);
    }
    let mut worst: f64 = 0.0;
    let mut prev = SquareMatrix::identity(p1.word.n());
    for (x, y) in p1.slots.iter().zip(&p2.slots) {
        let b = &(&x.inverse()? * &prev) * y;
        let scale = b.norm_fro();
        for r in 0..b.dim() {
            for c in 0..r {
                worst = worst.max(b[(r, c)].norm() / scale);
            }
        }
        prev = b;
    }
    Ok(worst)
}

/// Equality in 𝒟_𝐰 = P_𝐰/B^ℓ of the cosets represented by two tuples.
pub fn tuple_coset_equal_d(p1: &GroupTuple, p2: &GroupTuple, tol: &Tolerances) -> Result<bool> {
    Ok(tuple_coset_defect_d(p1, p2)? <= tol.coset)
}

/// Largest membership defect of the forced T^ℓ witness connecting two
/// compact tuples; the defect is the worst relative off-diagonal magnitude.
/// Errors if a slot is not unitary.
pub fn tuple_coset_defect_bs(k1: &GroupTuple, k2: &GroupTuple, tol: &Tolerances) -> Result<f64> {
    k1.require(Flavor::Compact)?;
    k2.require(Flavor::Compact)?;
    if k1.word != k2.word {
        return Err(Error::WordMismatch);
    }
    for slot in k1.slots.iter().chain(&k2.slots) {
        let defect = slot.unitary_defect();
        if defect > tol.unitary {
            return Err(Error::NotUnitary(defect));
        }
    }
    let mut worst: f64 = 0.0;
    let mut prev = SquareMatrix::identity(k1.word.n());
    for (x, y) in k1.slots.iter().zip(&k2.slots) {
        let t = &(&x.adjoint() * &prev) * y;
        let scale = t.norm_fro();
        for r in 0..t.dim() {
            for c in 0..t.dim() {
                if r != c {
                    worst = worst.max(t[(r, c)].norm() / scale);
                }
            }
        }
        prev = t;
    }
    Ok(worst)
}

/// Equality in ℬ𝒮_𝐰 = K_𝐰/T^ℓ of the cosets represented by two tuples.
pub fn tuple_coset_equal_bs(k1: &GroupTuple, k2: &GroupTuple, tol: &Tolerances) -> Result<bool> {
    Ok(tuple_coset_defect_bs(k1, k2, tol)? <= tol.coset)
}
