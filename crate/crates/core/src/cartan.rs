//! Exact integer arithmetic for the affine Cartan datum of type C₂⁽¹⁾.
//!
//! Weights live in the lattice P = ℤΛ₀ ⊕ ℤΛ₁ ⊕ ℤΛ₂ ⊕ ℤδ and are stored as
//! coefficient vectors in that basis. Coroots live in the dual lattice
//! ℤh₀ ⊕ ℤh₁ ⊕ ℤh₂ ⊕ ℤd, so the pairing ⟨·,·⟩ is a plain dot product.
//! Everything here is a pure function on small integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An index from the set {0, 1, 2} labelling simple roots, coroots,
/// fundamental weights and edge colors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Index(u8);

impl Index {
    /// All three indices, in order.
    pub const ALL: [Index; 3] = [Index(0), Index(1), Index(2)];

    /// Builds an index, rejecting values outside {0, 1, 2}.
    pub fn new(value: u8) -> Option<Index> {
        (value <= 2).then_some(Index(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand constructor used pervasively in tests and literals.
pub const fn idx(value: u8) -> Index {
    assert!(value <= 2);
    Index(value)
}

/// The generalized Cartan matrix of type C₂⁽¹⁾.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    a: [[i64; 3]; 3],
}

impl CartanMatrix {
    pub const fn new() -> CartanMatrix {
        CartanMatrix {
            a: [[2, -1, 0], [-2, 2, -2], [0, -1, 2]],
        }
    }

    /// Entry a_{ij}.
    pub fn entry(&self, i: Index, j: Index) -> i64 {
        self.a[i.as_usize()][j.as_usize()]
    }
}

impl Default for CartanMatrix {
    fn default() -> Self {
        CartanMatrix::new()
    }
}

/// An affine weight, written in the basis {Λ₀, Λ₁, Λ₂, δ} of P.
///
/// Classical weights (elements of P̄) are represented with `delta == 0`;
/// [`AffineWeight::classical`] projects onto that convention.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineWeight {
    pub lambda0: i64,
    pub lambda1: i64,
    pub lambda2: i64,
    pub delta: i64,
}

/// An element of the dual weight lattice, in the basis {h₀, h₁, h₂, d}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Coroot {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
    pub d: i64,
}

impl AffineWeight {
    pub const ZERO: AffineWeight = AffineWeight::new(0, 0, 0, 0);

    pub const fn new(lambda0: i64, lambda1: i64, lambda2: i64, delta: i64) -> AffineWeight {
        AffineWeight {
            lambda0,
            lambda1,
            lambda2,
            delta,
        }
    }

    /// The fundamental weight Λᵢ.
    pub fn fundamental(i: Index) -> AffineWeight {
        match i.value() {
            0 => AffineWeight::new(1, 0, 0, 0),
            1 => AffineWeight::new(0, 1, 0, 0),
            _ => AffineWeight::new(0, 0, 1, 0),
        }
    }

    /// The null root δ.
    pub const fn null_root() -> AffineWeight {
        AffineWeight::new(0, 0, 0, 1)
    }

    /// The bilinear pairing ⟨w, h⟩, a dot product in the chosen bases.
    pub fn pair(&self, h: &Coroot) -> i64 {
        self.lambda0 * h.h0 + self.lambda1 * h.h1 + self.lambda2 * h.h2 + self.delta * h.d
    }

    /// Level of the weight: its pairing with the canonical central element.
    pub fn level(&self) -> i64 {
        self.pair(&Coroot::canonical_central())
    }

    /// Classical projection P → P̄, dropping the δ coefficient.
    pub fn classical(&self) -> AffineWeight {
        AffineWeight {
            delta: 0,
            ..*self
        }
    }

    /// Coefficient vector [λ₀, λ₁, λ₂, δ], the serialization order.
    pub fn coefficients(&self) -> [i64; 4] {
        [self.lambda0, self.lambda1, self.lambda2, self.delta]
    }
}

impl Coroot {
    pub const fn new(h0: i64, h1: i64, h2: i64, d: i64) -> Coroot {
        Coroot { h0, h1, h2, d }
    }

    /// The simple coroot hᵢ.
    pub fn simple(i: Index) -> Coroot {
        match i.value() {
            0 => Coroot::new(1, 0, 0, 0),
            1 => Coroot::new(0, 1, 0, 0),
            _ => Coroot::new(0, 0, 1, 0),
        }
    }

    /// The canonical central element c = h₀ + h₁ + h₂.
    pub const fn canonical_central() -> Coroot {
        Coroot::new(1, 1, 1, 0)
    }

    /// The scaling element d.
    pub const fn scaling() -> Coroot {
        Coroot::new(0, 0, 0, 1)
    }
}

/// The simple root αᵢ expanded in the weight basis.
///
/// The expansion is αᵢ = Σⱼ aⱼᵢ Λⱼ + δ₀ᵢ δ, the unique weight pairing to the
/// i-th Cartan column against coroots and to δ₀ᵢ against d.
pub fn simple_root(i: Index) -> AffineWeight {
    let a = CartanMatrix::new();
    AffineWeight::new(
        a.entry(idx(0), i),
        a.entry(idx(1), i),
        a.entry(idx(2), i),
        i64::from(i.value() == 0),
    )
}

/// Solves Λ_g − m₀α₀ − m₁α₁ − m₂α₂ = w for nonnegative-free integers mₐ.
///
/// Returns `None` when `w` is not of that form. Only meaningful for affine
/// weights (a classical weight determines the mₐ only up to multiples of δ).
pub fn root_coordinates(ground: Index, w: &AffineWeight) -> Option<[i64; 3]> {
    let lam = AffineWeight::fundamental(ground);
    let m0 = -w.delta;
    let m1 = w.lambda0 - lam.lambda0 + 2 * m0;
    let twice_m2 = lam.lambda2 + m1 - w.lambda2;
    if twice_m2 % 2 != 0 {
        return None;
    }
    let m2 = twice_m2 / 2;
    let candidate =
        lam - simple_root(idx(0)) * m0 - simple_root(idx(1)) * m1 - simple_root(idx(2)) * m2;
    (candidate == *w).then_some([m0, m1, m2])
}

impl Add for AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: AffineWeight) -> AffineWeight {
        AffineWeight::new(
            self.lambda0 + rhs.lambda0,
            self.lambda1 + rhs.lambda1,
            self.lambda2 + rhs.lambda2,
            self.delta + rhs.delta,
        )
    }
}

impl Sub for AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        self + (-rhs)
    }
}

impl Neg for AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        AffineWeight::new(-self.lambda0, -self.lambda1, -self.lambda2, -self.delta)
    }
}

impl Mul<i64> for AffineWeight {
    type Output = AffineWeight;
    fn mul(self, rhs: i64) -> AffineWeight {
        AffineWeight::new(
            self.lambda0 * rhs,
            self.lambda1 * rhs,
            self.lambda2 * rhs,
            self.delta * rhs,
        )
    }
}

impl fmt::Display for AffineWeight {
    /// ASCII form with basis symbols L0, L1, L2, d: e.g. "L0-2L1+d", "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coeff, sym) in [
            (self.lambda0, "L0"),
            (self.lambda1, "L1"),
            (self.lambda2, "L2"),
            (self.delta, "d"),
        ] {
            if coeff == 0 {
                continue;
            }
            if coeff > 0 && !out.is_empty() {
                out.push('+');
            }
            match coeff {
                1 => {}
                -1 => out.push('-'),
                c => out.push_str(&c.to_string()),
            }
            out.push_str(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
