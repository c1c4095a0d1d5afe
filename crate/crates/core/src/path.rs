//! The path realization of the level-1 highest weight crystals.
//!
//! A state is an infinite sequence (…, p(1), p(0)) of elements of the
//! five-element crystal agreeing with a periodic ground-state sequence for
//! all large indices, stored as the ground index plus the finite list of
//! entries that may differ from it. The Kashiwara operators are the
//! signature rule of [`crate::signature`] applied over a finite window of
//! factors together with the exactly-computed residue of the infinite tail.

use crate::bcrystal::{e_b, f_b, wt_b, BElem};
use crate::cartan::{AffineWeight, Index};
use crate::crystal::{CrystalModel, TensorModel};
use crate::signature::{leftmost_zero, rightmost_one, Symbol};
use crate::Error;
use std::fmt;

/// Entry k of the ground-state sequence for ground Λᵢ. Index 0 is the
/// right-most displayed factor.
pub fn ground_elem(ground: Index, k: usize) -> BElem {
    use BElem::*;
    match (ground.value(), k % 2) {
        (0, 0) => TwoBarOneBar,
        (0, _) => OneTwo,
        (1, _) => TwoTwoBar,
        (_, 0) => OneTwo,
        (_, _) => TwoBarOneBar,
    }
}

/// The 0/1 replacement table: the symbols contributed by one factor for one
/// color, read left to right. Blank entries contribute nothing.
pub fn symbols(i: Index, b: BElem) -> &'static str {
    use BElem::*;
    match (i.value(), b) {
        (0, OneTwo) | (0, OneTwoBar) => "1",
        (0, TwoOneBar) | (0, TwoBarOneBar) => "0",
        (1, OneTwoBar) => "00",
        (1, TwoTwoBar) => "10",
        (1, TwoOneBar) => "11",
        (2, OneTwo) | (2, TwoOneBar) => "0",
        (2, OneTwoBar) | (2, TwoBarOneBar) => "1",
        _ => "",
    }
}

/// Reduced residue of the infinite ground tail consisting of the factors at
/// indices ≥ `cut`.
///
/// In the limit matching over the whole tail, every 1 is cancelled by the 0
/// of the factor above it; what can survive is at most a single unmatched 0
/// owned by the factor at the cut. Which case applies depends only on the
/// ground, the color, and the parity of the cut.
fn tail_leaves_zero(ground: Index, i: Index, cut: usize) -> bool {
    let even = cut % 2 == 0;
    match (ground.value(), i.value()) {
        (0, 0) => even,
        (0, 2) => !even,
        (1, 1) => true,
        (2, 0) => !even,
        (2, 2) => even,
        _ => false,
    }
}

/// A Λᵢ-path: a ground index plus the finite list of overriding entries
/// p(0), …, p(L−1). Normalized so the last stored entry differs from the
/// ground-state value at its index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathState {
    ground: Index,
    overrides: Vec<BElem>,
}

impl PathState {
    /// The ground-state path itself.
    pub fn ground_state(ground: Index) -> PathState {
        PathState {
            ground,
            overrides: Vec::new(),
        }
    }

    pub fn new(ground: Index, overrides: Vec<BElem>) -> PathState {
        let mut p = PathState { ground, overrides };
        p.normalize();
        p
    }

    pub fn ground(&self) -> Index {
        self.ground
    }

    pub fn overrides(&self) -> &[BElem] {
        &self.overrides
    }

    /// The entry p(k).
    pub fn entry(&self, k: usize) -> BElem {
        self.overrides
            .get(k)
            .copied()
            .unwrap_or_else(|| ground_elem(self.ground, k))
    }

    fn normalize(&mut self) {
        while let Some(&last) = self.overrides.last() {
            if last == ground_elem(self.ground, self.overrides.len() - 1) {
                self.overrides.pop();
            } else {
                break;
            }
        }
    }

    fn with_entry(&self, k: usize, b: BElem) -> PathState {
        let mut overrides = self.overrides.clone();
        while overrides.len() <= k {
            overrides.push(ground_elem(self.ground, overrides.len()));
        }
        overrides[k] = b;
        PathState::new(self.ground, overrides)
    }

    /// Drops p(0): the sequence k ↦ p(k+1), a path over the companion ground.
    pub fn shifted(&self) -> PathState {
        let overrides = self.overrides.get(1..).unwrap_or_default().to_vec();
        PathState::new(companion_ground(self.ground), overrides)
    }

    /// Literal of the form "P<g>:<b0>|<b1>|…", e.g. "P0:1,-2|2,-2".
    pub fn literal(&self) -> String {
        let body: Vec<&str> = self.overrides.iter().map(|b| b.as_str()).collect();
        format!("P{}:{}", self.ground, body.join("|"))
    }

    /// Parses a path literal; errors carry the byte position of the first
    /// offending token.
    pub fn parse(s: &str) -> Result<PathState, Error> {
        let rest = s.strip_prefix('P').ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected literal starting with 'P'".into(),
        })?;
        let (g, body) = rest.split_once(':').ok_or_else(|| Error::Parse {
            position: s.len(),
            message: "expected ':' after ground index".into(),
        })?;
        let ground = g
            .parse::<u8>()
            .ok()
            .and_then(Index::new)
            .ok_or_else(|| Error::Parse {
                position: 1,
                message: format!("invalid ground index {g:?}"),
            })?;
        let mut overrides = Vec::new();
        if !body.is_empty() {
            let mut offset = s.len() - body.len();
            for tok in body.split('|') {
                let b = BElem::parse(tok).ok_or_else(|| Error::Parse {
                    position: offset,
                    message: format!("invalid crystal element {tok:?}"),
                })?;
                overrides.push(b);
                offset += tok.len() + 1;
            }
        }
        Ok(PathState::new(ground, overrides))
    }
}

impl fmt::Display for PathState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Ground index of the shifted sequence: shifting a Λᵢ-path by one factor
/// yields a path over Λ_{σ(i)} with σ = (0 2).
pub fn companion_ground(ground: Index) -> Index {
    crate::cartan::idx(match ground.value() {
        0 => 2,
        1 => 1,
        _ => 0,
    })
}

/// Default signature window: all overrides plus four ground factors.
fn default_window(p: &PathState) -> usize {
    p.overrides.len() + 4
}

/// Signature symbols of the factors below `window`, preceded by the tail
/// residue. Left-most symbol first, owners are factor indices.
fn signature_symbols(i: Index, p: &PathState, window: usize) -> Vec<Symbol> {
    let mut syms = Vec::new();
    if tail_leaves_zero(p.ground, i, window) {
        syms.push(Symbol::zero(window));
    }
    for k in (0..window).rev() {
        for ch in symbols(i, p.entry(k)).chars() {
            syms.push(if ch == '1' {
                Symbol::one(k)
            } else {
                Symbol::zero(k)
            });
        }
    }
    syms
}

/// Window-parameterized lowering, exposed so window stability is testable.
/// `window` must cover all overrides.
pub fn f_path_with_window(i: Index, p: &PathState, window: usize) -> Option<PathState> {
    assert!(window > p.overrides.len());
    let k = leftmost_zero(&signature_symbols(i, p, window))?;
    let b = f_b(i, p.entry(k)).expect("a surviving 0 marks an applicable factor");
    Some(p.with_entry(k, b))
}

/// Window-parameterized raising.
pub fn e_path_with_window(i: Index, p: &PathState, window: usize) -> Option<PathState> {
    assert!(window > p.overrides.len());
    let k = rightmost_one(&signature_symbols(i, p, window))?;
    let b = e_b(i, p.entry(k)).expect("a surviving 1 marks an applicable factor");
    Some(p.with_entry(k, b))
}

/// Window-parameterized string lengths (εᵢ, φᵢ): surviving 1 and 0 counts.
pub fn eps_phi_path_with_window(i: Index, p: &PathState, window: usize) -> (i64, i64) {
    assert!(window > p.overrides.len());
    crate::signature::eps_phi(&signature_symbols(i, p, window))
}

/// The lowering operator f̃ᵢ on paths.
pub fn f_path(i: Index, p: &PathState) -> Option<PathState> {
    f_path_with_window(i, p, default_window(p))
}

/// The raising operator ẽᵢ on paths.
pub fn e_path(i: Index, p: &PathState) -> Option<PathState> {
    e_path_with_window(i, p, default_window(p))
}

/// String lengths of a path.
pub fn eps_phi_path(i: Index, p: &PathState) -> (i64, i64) {
    eps_phi_path_with_window(i, p, default_window(p))
}

/// Classical weight: cl(Λ_g) plus the finite weight difference against the
/// ground-state path.
pub fn wt_path(p: &PathState) -> AffineWeight {
    let mut w = AffineWeight::fundamental(p.ground);
    for (k, &b) in p.overrides.iter().enumerate() {
        w = w + wt_b(b) - wt_b(ground_elem(p.ground, k));
    }
    w
}

/// The path realization as a [`CrystalModel`]. States carry their ground.
#[derive(Clone, Copy, Debug, Default)]
pub struct PathModel;

impl CrystalModel for PathModel {
    type Elem = PathState;

    fn name(&self) -> &'static str {
        "path"
    }

    fn affine(&self) -> bool {
        false
    }

    fn weight(&self, x: &PathState) -> AffineWeight {
        wt_path(x)
    }

    fn eps(&self, i: Index, x: &PathState) -> i64 {
        eps_phi_path(i, x).0
    }

    fn phi(&self, i: Index, x: &PathState) -> i64 {
        eps_phi_path(i, x).1
    }

    fn e(&self, i: Index, x: &PathState) -> Option<PathState> {
        e_path(i, x)
    }

    fn f(&self, i: Index, x: &PathState) -> Option<PathState> {
        f_path(i, x)
    }

    fn key(&self, x: &PathState) -> String {
        x.literal()
    }

    fn ground_of(&self, x: &PathState) -> Option<Index> {
        Some(x.ground)
    }
}

/// One mismatch found by [`check_tensor_factorization`].
#[derive(Clone, Debug)]
pub struct FactorizationMismatch {
    pub path: String,
    pub color: Index,
    pub detail: String,
}

/// Verifies that splitting off p(0) identifies the Λᵢ-paths with
/// (Λ_{σ(i)}-paths) ⊗ B as crystals, on the whole depth-closure of the
/// ground-state path.
///
/// For every generated p and color j the operators computed directly on p
/// must agree with the tensor rule applied to shift(p) ⊗ p(0), and the
/// weight must be additive across the split.
pub fn check_tensor_factorization(
    ground: Index,
    depth: u32,
) -> Result<Vec<FactorizationMismatch>, Error> {
    let model = PathModel;
    let generated = crate::graph::build_graph(
        &model,
        PathState::ground_state(ground),
        depth,
        crate::graph::DEFAULT_NODE_CAP,
    )?;
    let bmodel = crate::bcrystal::BCrystal::new();
    let tensor = TensorModel::new(&model, &bmodel);
    let mut mismatches = Vec::new();
    let mut record = |p: &PathState, color: Index, detail: String| {
        mismatches.push(FactorizationMismatch {
            path: p.literal(),
            color,
            detail,
        });
    };
    for p in &generated.elems {
        let split = (p.shifted(), p.entry(0));
        let rejoin = |(left, b0): &(PathState, BElem)| {
            let mut overrides = vec![*b0];
            overrides.extend_from_slice(left.overrides());
            PathState::new(ground, overrides)
        };
        if rejoin(&split) != *p {
            record(p, crate::cartan::idx(0), "shift/rejoin is not inverse".into());
            continue;
        }
        let wt_split = wt_path(&split.0) + wt_b(split.1);
        if wt_split != wt_path(p) {
            record(
                p,
                crate::cartan::idx(0),
                format!("weight not additive: {} vs {}", wt_split, wt_path(p)),
            );
        }
        for j in Index::ALL {
            let direct_f = f_path(j, p);
            let tensor_f = tensor.f(j, &split).map(|t| rejoin(&t));
            if direct_f != tensor_f {
                record(
                    p,
                    j,
                    format!(
                        "lowering disagrees: direct {:?} vs tensor {:?}",
                        direct_f.as_ref().map(PathState::literal),
                        tensor_f.as_ref().map(PathState::literal)
                    ),
                );
            }
            let direct_e = e_path(j, p);
            let tensor_e = tensor.e(j, &split).map(|t| rejoin(&t));
            if direct_e != tensor_e {
                record(
                    p,
                    j,
                    format!(
                        "raising disagrees: direct {:?} vs tensor {:?}",
                        direct_e.as_ref().map(PathState::literal),
                        tensor_e.as_ref().map(PathState::literal)
                    ),
                );
            }
        }
    }
    Ok(mismatches)
}
