//! The five-element perfect crystal of level 1.
//!
//! The crystal graph is a hard-wired edge table: a four-step chain
//!
//! ```text
//! (1,2) ─2→ (1,-2) ─1→ (2,-2) ─1→ (2,-1) ─2→ (-2,-1)
//! ```
//!
//! closed up by the two 0-arrows (2,-1) ─0→ (1,2) and (-2,-1) ─0→ (1,-2).
//! ε and φ are derived by walking strings in this table rather than stored,
//! so a transcription slip cannot hide in two places at once.

use crate::cartan::{AffineWeight, Index};
use crate::crystal::CrystalModel;
use std::fmt;

/// A vertex of the five-element crystal. Overbars render as minus signs, so
/// the canonical names are "1,2", "1,-2", "2,-2", "2,-1", "-2,-1".
///
/// The declaration order is the canonical total order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BElem {
    OneTwo,
    OneTwoBar,
    TwoTwoBar,
    TwoOneBar,
    TwoBarOneBar,
}

pub use BElem::{OneTwo, OneTwoBar, TwoBarOneBar, TwoOneBar, TwoTwoBar};

impl BElem {
    pub const ALL: [BElem; 5] = [OneTwo, OneTwoBar, TwoTwoBar, TwoOneBar, TwoBarOneBar];

    pub fn as_str(self) -> &'static str {
        match self {
            OneTwo => "1,2",
            OneTwoBar => "1,-2",
            TwoTwoBar => "2,-2",
            TwoOneBar => "2,-1",
            TwoBarOneBar => "-2,-1",
        }
    }

    pub fn parse(s: &str) -> Option<BElem> {
        BElem::ALL.into_iter().find(|b| b.as_str() == s)
    }
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The lowering operator f̃ᵢ on the crystal: the transcribed edge table.
pub fn f_b(i: Index, b: BElem) -> Option<BElem> {
    match (i.value(), b) {
        (2, OneTwo) => Some(OneTwoBar),
        (2, TwoOneBar) => Some(TwoBarOneBar),
        (1, OneTwoBar) => Some(TwoTwoBar),
        (1, TwoTwoBar) => Some(TwoOneBar),
        (0, TwoOneBar) => Some(OneTwo),
        (0, TwoBarOneBar) => Some(OneTwoBar),
        _ => None,
    }
}

/// The raising operator ẽᵢ, the exact inverse relation of [`f_b`] per color.
pub fn e_b(i: Index, b: BElem) -> Option<BElem> {
    BElem::ALL.into_iter().find(|&a| f_b(i, a) == Some(b))
}

/// String lengths (εᵢ, φᵢ): how many times ẽᵢ resp. f̃ᵢ apply before null.
pub fn eps_phi_b(i: Index, b: BElem) -> (i64, i64) {
    let mut eps = 0;
    let mut cur = b;
    while let Some(up) = e_b(i, cur) {
        eps += 1;
        cur = up;
    }
    let mut phi = 0;
    cur = b;
    while let Some(down) = f_b(i, cur) {
        phi += 1;
        cur = down;
    }
    (eps, phi)
}

/// ε(b) = Σᵢ εᵢ(b)Λᵢ as a classical weight.
pub fn eps_weight(b: BElem) -> AffineWeight {
    Index::ALL
        .into_iter()
        .fold(AffineWeight::ZERO, |acc, i| {
            acc + AffineWeight::fundamental(i) * eps_phi_b(i, b).0
        })
}

/// φ(b) = Σᵢ φᵢ(b)Λᵢ as a classical weight.
pub fn phi_weight(b: BElem) -> AffineWeight {
    Index::ALL
        .into_iter()
        .fold(AffineWeight::ZERO, |acc, i| {
            acc + AffineWeight::fundamental(i) * eps_phi_b(i, b).1
        })
}

/// wt(b) = φ(b) − ε(b), a classical weight (δ-coefficient 0).
pub fn wt_b(b: BElem) -> AffineWeight {
    phi_weight(b) - eps_weight(b)
}

/// The crystal as a [`CrystalModel`], with ε/φ memoized at construction.
#[derive(Clone, Debug)]
pub struct BCrystal {
    eps: [[i64; 5]; 3],
    phi: [[i64; 5]; 3],
}

impl BCrystal {
    pub fn new() -> BCrystal {
        let mut eps = [[0; 5]; 3];
        let mut phi = [[0; 5]; 3];
        for i in Index::ALL {
            for (k, b) in BElem::ALL.into_iter().enumerate() {
                let (e, p) = eps_phi_b(i, b);
                eps[i.as_usize()][k] = e;
                phi[i.as_usize()][k] = p;
            }
        }
        BCrystal { eps, phi }
    }
}

impl Default for BCrystal {
    fn default() -> Self {
        BCrystal::new()
    }
}

impl CrystalModel for BCrystal {
    type Elem = BElem;

    fn name(&self) -> &'static str {
        "b"
    }

    fn affine(&self) -> bool {
        false
    }

    fn weight(&self, x: &BElem) -> AffineWeight {
        wt_b(*x)
    }

    fn eps(&self, i: Index, x: &BElem) -> i64 {
        self.eps[i.as_usize()][*x as usize]
    }

    fn phi(&self, i: Index, x: &BElem) -> i64 {
        self.phi[i.as_usize()][*x as usize]
    }

    fn e(&self, i: Index, x: &BElem) -> Option<BElem> {
        e_b(i, *x)
    }

    fn f(&self, i: Index, x: &BElem) -> Option<BElem> {
        f_b(i, *x)
    }

    fn key(&self, x: &BElem) -> String {
        x.as_str().to_string()
    }
}

/// Outcome of the level-1 perfectness validation.
#[derive(Clone, Debug)]
pub struct PerfectReport {
    /// Failed conditions, as human-readable descriptions. Empty means pass.
    pub failures: Vec<String>,
    /// The weight λ₀ found for the containment condition, when one exists.
    pub lambda0: Option<AffineWeight>,
    /// Elements with ⟨ε(b), c⟩ equal to the level.
    pub minimal: Vec<BElem>,
}

impl PerfectReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the four conditions for the crystal to be perfect of level `level`.
///
/// (i) the tensor square is connected under raising and lowering operators;
/// (ii) some λ₀ has wt(B) ⊆ λ₀ + ℤ≤0·α₁ + ℤ≤0·α₂ with a unique element at λ₀;
/// (iii) ⟨ε(b), c⟩ ≥ level for all b; (iv) ε and φ restrict to bijections
/// from the minimal elements onto the level-`level` dominant weights.
pub fn check_perfect(level: i64) -> PerfectReport {
    use crate::cartan::{idx, simple_root, Coroot};
    let mut failures = Vec::new();

    // (i) Connectivity of B ⊗ B under both operator families.
    let b = BCrystal::new();
    let tensor = crate::crystal::TensorModel::new(&b, &b);
    let mut pairs: Vec<(BElem, BElem)> = Vec::new();
    for x in BElem::ALL {
        for y in BElem::ALL {
            pairs.push((x, y));
        }
    }
    let mut reached = vec![false; pairs.len()];
    let index_of = |p: &(BElem, BElem)| pairs.iter().position(|q| q == p).unwrap();
    let mut stack = vec![pairs[0]];
    reached[0] = true;
    while let Some(t) = stack.pop() {
        for i in Index::ALL {
            for next in [
                crate::crystal::CrystalModel::f(&tensor, i, &t),
                crate::crystal::CrystalModel::e(&tensor, i, &t),
            ]
            .into_iter()
            .flatten()
            {
                let k = index_of(&next);
                if !reached[k] {
                    reached[k] = true;
                    stack.push(next);
                }
            }
        }
    }
    let reached_count = reached.iter().filter(|r| **r).count();
    if reached_count != pairs.len() {
        failures.push(format!(
            "tensor square not connected: reached {reached_count} of {} elements",
            pairs.len()
        ));
    }

    // (ii) Search for λ₀ among the weights of B.
    let contains = |lam0: AffineWeight| {
        BElem::ALL.into_iter().all(|x| {
            let v = lam0 - wt_b(x);
            // v = c1·α₁ + c2·α₂ with c1, c2 ≥ 0, read off the classical basis.
            let c1 = -v.lambda0;
            if (v.lambda2 + c1) % 2 != 0 {
                return false;
            }
            let c2 = (v.lambda2 + c1) / 2;
            c1 >= 0
                && c2 >= 0
                && simple_root(idx(1)) * c1 + simple_root(idx(2)) * c2 == v
        })
    };
    let lambda0 = BElem::ALL.into_iter().map(wt_b).find(|w| {
        contains(*w) && BElem::ALL.into_iter().filter(|x| wt_b(*x) == *w).count() == 1
    });
    if lambda0.is_none() {
        failures.push("no weight λ0 dominates wt(B) with multiplicity one".to_string());
    }

    // (iii) and (iv).
    let c = Coroot::canonical_central();
    let mut minimal = Vec::new();
    for x in BElem::ALL {
        let lv = eps_weight(x).pair(&c);
        if lv < level {
            failures.push(format!("⟨ε({x}), c⟩ = {lv} < level {level}"));
        }
        if lv == level {
            minimal.push(x);
        }
    }
    let dominant: Vec<AffineWeight> = Index::ALL
        .into_iter()
        .map(AffineWeight::fundamental)
        .collect();
    for (label, map) in [
        ("ε", eps_weight as fn(BElem) -> AffineWeight),
        ("φ", phi_weight),
    ] {
        let mut images: Vec<AffineWeight> = minimal.iter().map(|x| map(*x)).collect();
        images.sort();
        images.dedup();
        let mut expected = dominant.clone();
        expected.sort();
        if images != expected {
            failures.push(format!(
                "{label} does not restrict to a bijection from minimal elements onto the level-{level} dominant weights"
            ));
        }
    }

    PerfectReport {
        failures,
        lambda0,
        minimal,
    }
}
