//! The abstract crystal interface and the tensor product rule.
//!
//! A model supplies weights, string lengths ε/φ and the partial operators
//! ẽᵢ/f̃ᵢ. All bundled models are seminormal: ε and φ are genuine string
//! lengths and the value −∞ never arises.

use crate::cartan::{AffineWeight, Coroot, Index};

/// Contract for a crystal realization.
///
/// Implementations must satisfy, for every element x and index i:
/// φᵢ(x) − εᵢ(x) = ⟨wt(x), hᵢ⟩, wt(ẽᵢx) = wt(x) + αᵢ, wt(f̃ᵢx) = wt(x) − αᵢ,
/// and f̃ᵢx = y ⟺ ẽᵢy = x. [`crate::graph::check_axioms`] verifies these
/// on generated graphs.
pub trait CrystalModel {
    type Elem: Clone + Eq + std::hash::Hash;

    /// Short model name used in serialized graphs.
    fn name(&self) -> &'static str;

    /// Whether weights carry a δ-grading. Classical-only models return false
    /// and produce weights with δ-coefficient 0.
    fn affine(&self) -> bool;

    fn weight(&self, x: &Self::Elem) -> AffineWeight;
    fn eps(&self, i: Index, x: &Self::Elem) -> i64;
    fn phi(&self, i: Index, x: &Self::Elem) -> i64;

    /// The raising operator ẽᵢ; `None` encodes the zero element.
    fn e(&self, i: Index, x: &Self::Elem) -> Option<Self::Elem>;

    /// The lowering operator f̃ᵢ; `None` encodes the zero element.
    fn f(&self, i: Index, x: &Self::Elem) -> Option<Self::Elem>;

    /// Canonical key, unique per element, stable across runs.
    fn key(&self, x: &Self::Elem) -> String;

    /// Ground index for models rooted at a ground state, used as metadata.
    fn ground_of(&self, _x: &Self::Elem) -> Option<Index> {
        None
    }
}

/// The tensor product B₁ ⊗ B₂ of two crystals.
///
/// Elements are pairs; the structure maps follow the signature rule
///
/// ```text
/// f̃ᵢ(b₁⊗b₂) = f̃ᵢb₁ ⊗ b₂   if φᵢ(b₁) >  εᵢ(b₂), else b₁ ⊗ f̃ᵢb₂
/// ẽᵢ(b₁⊗b₂) = ẽᵢb₁ ⊗ b₂   if φᵢ(b₁) ≥  εᵢ(b₂), else b₁ ⊗ ẽᵢb₂
/// ```
///
/// with εᵢ = max(εᵢ(b₁), εᵢ(b₂) − ⟨wt(b₁),hᵢ⟩) and
/// φᵢ = max(φᵢ(b₂), φᵢ(b₁) + ⟨wt(b₂),hᵢ⟩).
#[derive(Clone, Copy, Debug)]
pub struct TensorModel<'a, A, B> {
    left: &'a A,
    right: &'a B,
    name: &'static str,
}

impl<'a, A: CrystalModel, B: CrystalModel> TensorModel<'a, A, B> {
    pub fn new(left: &'a A, right: &'a B) -> Self {
        TensorModel {
            left,
            right,
            name: "tensor",
        }
    }

    pub fn named(left: &'a A, right: &'a B, name: &'static str) -> Self {
        TensorModel { left, right, name }
    }

    /// True when f̃ᵢ acts on the left component.
    pub fn lowers_left(&self, i: Index, (a, b): &(A::Elem, B::Elem)) -> bool {
        self.left.phi(i, a) > self.right.eps(i, b)
    }

    /// True when ẽᵢ acts on the left component.
    pub fn raises_left(&self, i: Index, (a, b): &(A::Elem, B::Elem)) -> bool {
        self.left.phi(i, a) >= self.right.eps(i, b)
    }
}

impl<'a, A: CrystalModel, B: CrystalModel> CrystalModel for TensorModel<'a, A, B> {
    type Elem = (A::Elem, B::Elem);

    fn name(&self) -> &'static str {
        self.name
    }

    fn affine(&self) -> bool {
        self.left.affine() && self.right.affine()
    }

    fn weight(&self, (a, b): &Self::Elem) -> AffineWeight {
        self.left.weight(a) + self.right.weight(b)
    }

    fn eps(&self, i: Index, (a, b): &Self::Elem) -> i64 {
        let adjust = self.left.weight(a).pair(&Coroot::simple(i));
        self.left.eps(i, a).max(self.right.eps(i, b) - adjust)
    }

    fn phi(&self, i: Index, (a, b): &Self::Elem) -> i64 {
        let adjust = self.right.weight(b).pair(&Coroot::simple(i));
        self.right.phi(i, b).max(self.left.phi(i, a) + adjust)
    }

    fn e(&self, i: Index, t: &Self::Elem) -> Option<Self::Elem> {
        let (a, b) = t;
        if self.raises_left(i, t) {
            self.left.e(i, a).map(|a2| (a2, b.clone()))
        } else {
            self.right.e(i, b).map(|b2| (a.clone(), b2))
        }
    }

    fn f(&self, i: Index, t: &Self::Elem) -> Option<Self::Elem> {
        let (a, b) = t;
        if self.lowers_left(i, t) {
            self.left.f(i, a).map(|a2| (a2, b.clone()))
        } else {
            self.right.f(i, b).map(|b2| (a.clone(), b2))
        }
    }

    fn key(&self, (a, b): &Self::Elem) -> String {
        format!("{}(x){}", self.left.key(a), self.right.key(b))
    }
}
