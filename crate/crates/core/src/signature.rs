//! The 0/1 signature strings behind the Kashiwara operator rule.
//!
//! Both realizations turn a state into a string of 0s and 1s read over the
//! factors/columns from far left to position 0, cancel every adjacent "01"
//! pair, and act at the left-most surviving 0 (lowering) or the right-most
//! surviving 1 (raising). Each symbol remembers which factor produced it.

/// One signature symbol together with the index of its owner.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Symbol {
    /// `false` is a 0 (room to lower), `true` is a 1 (room to raise).
    pub is_one: bool,
    /// Index of the owning factor or column.
    pub owner: usize,
}

impl Symbol {
    pub fn zero(owner: usize) -> Symbol {
        Symbol {
            is_one: false,
            owner,
        }
    }

    pub fn one(owner: usize) -> Symbol {
        Symbol {
            is_one: true,
            owner,
        }
    }
}

/// Cancels adjacent "01" pairs until none remain.
///
/// The result is necessarily of the form 1…10…0. A single left-to-right scan
/// with a stack computes the unique normal form: a 1 annihilates the nearest
/// surviving 0 to its left.
pub fn reduce(symbols: &[Symbol]) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = Vec::with_capacity(symbols.len());
    for &s in symbols {
        if s.is_one && out.last().is_some_and(|t| !t.is_one) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

/// Counts of surviving 1s and 0s after reduction.
pub fn eps_phi(symbols: &[Symbol]) -> (i64, i64) {
    let reduced = reduce(symbols);
    let ones = reduced.iter().filter(|s| s.is_one).count() as i64;
    (ones, reduced.len() as i64 - ones)
}

/// Owner of the left-most surviving 0, the lowering target.
pub fn leftmost_zero(symbols: &[Symbol]) -> Option<usize> {
    reduce(symbols).iter().find(|s| !s.is_one).map(|s| s.owner)
}

/// Owner of the right-most surviving 1, the raising target.
pub fn rightmost_one(symbols: &[Symbol]) -> Option<usize> {
    reduce(symbols)
        .iter()
        .rev()
        .find(|s| s.is_one)
        .map(|s| s.owner)
}

/// String-level entry point: reduces a string over {0,1} and reports the
/// surviving counts plus the input positions of the survivors.
///
/// Positions index the characters of `s` from the left.
pub fn reduce_signature(s: &str) -> Result<(usize, usize, Vec<usize>), crate::Error> {
    let mut symbols = Vec::with_capacity(s.len());
    for (pos, ch) in s.chars().enumerate() {
        match ch {
            '0' => symbols.push(Symbol::zero(pos)),
            '1' => symbols.push(Symbol::one(pos)),
            _ => {
                return Err(crate::Error::Parse {
                    position: pos,
                    message: format!("expected '0' or '1', found {ch:?}"),
                })
            }
        }
    }
    let reduced = reduce(&symbols);
    let ones = reduced.iter().filter(|s| s.is_one).count();
    let zeros = reduced.len() - ones;
    Ok((ones, zeros, reduced.iter().map(|s| s.owner).collect()))
}
