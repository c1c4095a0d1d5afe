//! Young walls: the block-stacking realization of the level-1 crystals.
//!
//! A wall is a row of columns built on one of three ground-state walls. The
//! stacking rules force each column through a fixed cycle — complete a unit
//! layer from its half-thickness blocks, then stack exactly two 1-blocks,
//! then start the next layer — so a column is faithfully encoded by the
//! count `n` of added blocks plus, when the top layer is half-filled, a tag
//! naming which half-block is present. Walls must be weakly decreasing in
//! `n` towards the left ("no free space to the right of any block").
//!
//! The Kashiwara operators write a 0 under each column that admits an
//! i-block and a 1 under each column whose top i-block is removable (two
//! symbols where two removals/additions are possible, which only happens
//! for i = 1), cancel "01" pairs and act at the surviving boundary, exactly
//! as in the path model.

use crate::bcrystal::BElem;
use crate::cartan::{idx, simple_root, AffineWeight, Index};
use crate::crystal::CrystalModel;
use crate::path::PathState;
use crate::signature::{leftmost_zero, rightmost_one, Symbol};
use crate::Error;
use std::fmt;

/// State of one column: number of added blocks and, when the top unit layer
/// holds exactly one of its two half-blocks, which color that is.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColumnState {
    pub n: u32,
    pub tag: Option<Index>,
}

impl ColumnState {
    pub const BARE: ColumnState = ColumnState { n: 0, tag: None };

    pub fn new(n: u32, tag: Option<Index>) -> ColumnState {
        ColumnState { n, tag }
    }

    pub fn is_bare(&self) -> bool {
        self.n == 0
    }
}

/// How a column is seated on the ground: on a half-thickness block of a
/// fixed color (the Λ₀/Λ₂ grounds) or on a ground 1-block (the Λ₁ ground).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ColumnBase {
    Layered { ground_half: Index },
    Ones,
}

/// What the top of a column looks like.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Top {
    /// A lone half-block of the given color (possibly the ground block).
    Half(Index),
    /// A complete unit layer.
    Full,
    /// A single 1-block (possibly the Λ₁ ground block).
    One,
    /// Two stacked 1-blocks.
    TwoOnes,
}

fn complement(c: Index) -> Index {
    idx(2 - c.value())
}

fn base_of(ground: Index, j: usize) -> ColumnBase {
    match ground.value() {
        1 => ColumnBase::Ones,
        0 => ColumnBase::Layered {
            ground_half: if j % 2 == 0 { idx(2) } else { idx(0) },
        },
        _ => ColumnBase::Layered {
            ground_half: if j % 2 == 0 { idx(0) } else { idx(2) },
        },
    }
}

/// Top of a valid column. The caller guarantees the tag invariant.
fn top_of(base: ColumnBase, col: ColumnState) -> Top {
    match base {
        ColumnBase::Layered { ground_half } => match col.n % 4 {
            0 if col.n == 0 => Top::Half(ground_half),
            0 => Top::Half(col.tag.expect("tagged state")),
            1 => Top::Full,
            2 => Top::One,
            _ => Top::TwoOnes,
        },
        ColumnBase::Ones => match col.n % 4 {
            0 => Top::One,
            1 => Top::TwoOnes,
            2 => Top::Half(col.tag.expect("tagged state")),
            _ => Top::Full,
        },
    }
}

/// Automaton transition: add one block of the given color, if the rules
/// allow it on this column in isolation.
fn add_block(base: ColumnBase, col: ColumnState, color: Index) -> Option<ColumnState> {
    match top_of(base, col) {
        Top::Half(c) if color == complement(c) => Some(ColumnState::new(col.n + 1, None)),
        Top::Full | Top::One if color.value() == 1 => Some(ColumnState::new(col.n + 1, None)),
        Top::TwoOnes if color.value() != 1 => Some(ColumnState::new(col.n + 1, Some(color))),
        _ => None,
    }
}

/// Automaton transition: remove one block of the given color from the top.
/// Ground blocks are never removable.
fn remove_block(base: ColumnBase, col: ColumnState, color: Index) -> Option<ColumnState> {
    match top_of(base, col) {
        Top::Half(c) if color == c && col.n > 0 => Some(ColumnState::new(col.n - 1, None)),
        Top::Full if color.value() != 1 => {
            let layer0 = matches!(base, ColumnBase::Layered { .. }) && col.n == 1;
            if layer0 {
                let ColumnBase::Layered { ground_half } = base else {
                    unreachable!()
                };
                // Only the added half of the bottom layer may come off.
                (color == complement(ground_half)).then_some(ColumnState::BARE)
            } else {
                Some(ColumnState::new(col.n - 1, Some(complement(color))))
            }
        }
        Top::One if color.value() == 1 && col.n > 0 => Some(ColumnState::new(col.n - 1, None)),
        Top::TwoOnes if color.value() == 1 => Some(ColumnState::new(col.n - 1, None)),
        _ => None,
    }
}

/// A column is full when its height is a whole number of units and its top
/// is of unit thickness, which in the encoding is n ≡ 1 or 3 (mod 4).
pub fn is_full(col: &ColumnState) -> bool {
    col.n % 4 == 1 || col.n % 4 == 3
}

/// Interpretation of "remove a 0-block, a 2-block and two 1-blocks from the
/// column in some order".
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DeltaSemantics {
    /// Only the final configuration must be a proper Young wall.
    #[default]
    FinalState,
    /// Every intermediate configuration must be a proper Young wall too.
    Successive,
}

/// A wall: ground index plus column states, column 0 right-most. Columns
/// beyond the stored list are bare ground. Normalized so the last stored
/// column is not bare.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Wall {
    ground: Index,
    cols: Vec<ColumnState>,
}

impl Wall {
    /// The ground-state wall itself.
    pub fn ground_state(ground: Index) -> Wall {
        Wall {
            ground,
            cols: Vec::new(),
        }
    }

    pub fn new(ground: Index, cols: Vec<ColumnState>) -> Wall {
        let mut w = Wall { ground, cols };
        w.normalize();
        w
    }

    fn normalize(&mut self) {
        while self.cols.last().is_some_and(ColumnState::is_bare) {
            self.cols.pop();
        }
    }

    pub fn ground(&self) -> Index {
        self.ground
    }

    pub fn columns(&self) -> &[ColumnState] {
        &self.cols
    }

    /// Column state at index j, bare ground beyond the stored columns.
    pub fn column(&self, j: usize) -> ColumnState {
        self.cols.get(j).copied().unwrap_or(ColumnState::BARE)
    }

    fn base(&self, j: usize) -> ColumnBase {
        base_of(self.ground, j)
    }

    fn with_column(&self, j: usize, col: ColumnState) -> Wall {
        let mut cols = self.cols.clone();
        while cols.len() <= j {
            cols.push(ColumnState::BARE);
        }
        cols[j] = col;
        Wall::new(self.ground, cols)
    }

    /// The canonical bottom-to-top list of added block colors of column j.
    ///
    /// Complete upper layers print as "0,2"; the actual insertion order of
    /// the two halves is not part of the state and carries no information.
    pub fn column_blocks(&self, j: usize) -> Vec<Index> {
        let col = self.column(j);
        let mut blocks = Vec::with_capacity(col.n as usize);
        for k in 1..=col.n {
            // Shift the Λ₁ cycle so both bases share phase meanings:
            // 0 opens a layer, 1 completes it, 2/3 are 1-blocks.
            let phase = match self.base(j) {
                ColumnBase::Layered { .. } => k % 4,
                ColumnBase::Ones => (k + 2) % 4,
            };
            let block = match phase {
                0 => {
                    if k == col.n {
                        col.tag.expect("tagged state")
                    } else {
                        idx(0)
                    }
                }
                1 => match self.base(j) {
                    ColumnBase::Layered { ground_half } if k == 1 => complement(ground_half),
                    _ => idx(2),
                },
                _ => idx(1),
            };
            blocks.push(block);
        }
        blocks
    }
}

/// Checks normalization, the per-column tag invariant, block-count
/// monotonicity, and the half-layer matching rule. An empty report means a
/// valid Young wall.
///
/// The matching rule is "no free space to the right" applied to a lone
/// half-block: two adjacent columns of equal block count with half-filled
/// tops must hold half-blocks of opposite colors, because the front/back
/// orientation alternates between columns and equal colors would sit at
/// opposite depths, leaving the right-hand slot empty.
pub fn validate_wall(w: &Wall) -> Vec<String> {
    let mut report = Vec::new();
    if w.cols.last().is_some_and(ColumnState::is_bare) {
        report.push("not normalized: trailing bare column stored".to_string());
    }
    let state_ok = |j: usize, col: &ColumnState| {
        let tagged = match w.base(j) {
            ColumnBase::Layered { .. } => col.n >= 4 && col.n % 4 == 0,
            ColumnBase::Ones => col.n % 4 == 2,
        };
        tagged == col.tag.is_some() && !col.tag.is_some_and(|t| t.value() == 1)
    };
    for (j, col) in w.cols.iter().enumerate() {
        if !state_ok(j, col) {
            report.push(format!(
                "column {j}: tag {:?} inconsistent with block count {}",
                col.tag, col.n
            ));
            continue;
        }
        let left = w.column(j + 1);
        if !state_ok(j + 1, &left) {
            continue; // reported at its own index
        }
        if left.n > col.n {
            report.push(format!(
                "columns {}..{j}: block counts increase to the left ({} > {})",
                j + 1,
                left.n,
                col.n
            ));
        } else if left.n == col.n && j + 1 < w.cols.len() {
            let tops = (top_of(w.base(j + 1), left), top_of(w.base(j), *col));
            if let (Top::Half(cl), Top::Half(cr)) = tops {
                if cl != complement(cr) {
                    report.push(format!(
                        "columns {}..{j}: equal half-filled tops of color {cl} leave \
                         free space to the right",
                        j + 1
                    ));
                }
            }
        }
    }
    report
}

/// No two full columns of equal height; with one wall's columns all sharing
/// the same height profile in `n`, this is "no adjacent equal full counts".
pub fn is_proper(w: &Wall) -> bool {
    !w.cols.windows(2).any(|pair| {
        pair[0].n == pair[1].n && is_full(&pair[0])
    })
}

/// Whether column j contains a removable δ: one 0-block, one 2-block and
/// two 1-blocks can come off it leaving a proper Young wall.
///
/// Under the default final-state semantics this means the column drops by
/// four blocks with its tag preserved — feasible unless the four top blocks
/// fail to contain both half colors, which happens exactly when a bottom
/// layer's ground block would be needed.
pub fn has_removable_delta(
    w: &Wall,
    j: usize,
    semantics: DeltaSemantics,
) -> Result<bool, Error> {
    if j >= w.cols.len() {
        return Err(Error::ColumnIndex {
            index: j,
            columns: w.cols.len(),
        });
    }
    let col = w.column(j);
    if col.n < 4 {
        return Ok(false);
    }
    match semantics {
        DeltaSemantics::FinalState => {
            if let ColumnBase::Layered { ground_half } = w.base(j) {
                // At n = 4 the lower layer's other half is the ground block,
                // so the removable multiset is {tag, 1, 1, complement(ground)}.
                if col.n == 4 && col.tag != Some(ground_half) {
                    return Ok(false);
                }
            }
            let keeps_tag = match w.base(j) {
                ColumnBase::Layered { .. } => col.n - 4 >= 4,
                ColumnBase::Ones => true,
            };
            let shrunk = ColumnState::new(col.n - 4, if keeps_tag { col.tag } else { None });
            let candidate = w.with_column(j, shrunk);
            Ok(validate_wall(&candidate).is_empty() && is_proper(&candidate))
        }
        DeltaSemantics::Successive => {
            fn search(w: &Wall, j: usize, budget: [u8; 3]) -> bool {
                if budget == [0, 0, 0] {
                    return true;
                }
                for color in Index::ALL {
                    if budget[color.as_usize()] == 0 {
                        continue;
                    }
                    let Some(col) = remove_block(w.base(j), w.column(j), color) else {
                        continue;
                    };
                    let next = w.with_column(j, col);
                    if validate_wall(&next).is_empty() && is_proper(&next) {
                        let mut rest = budget;
                        rest[color.as_usize()] -= 1;
                        if search(&next, j, rest) {
                            return true;
                        }
                    }
                }
                false
            }
            Ok(search(w, j, [1, 2, 1]))
        }
    }
}

/// A proper Young wall is reduced when no column contains a removable δ.
pub fn is_reduced(w: &Wall) -> bool {
    is_reduced_with(w, DeltaSemantics::FinalState)
}

pub fn is_reduced_with(w: &Wall, semantics: DeltaSemantics) -> bool {
    (0..w.cols.len()).all(|j| !has_removable_delta(w, j, semantics).unwrap())
}

fn candidate_add(w: &Wall, j: usize, i: Index) -> Option<Wall> {
    let col = add_block(w.base(j), w.column(j), i)?;
    let next = w.with_column(j, col);
    (validate_wall(&next).is_empty() && is_proper(&next)).then_some(next)
}

fn candidate_remove(w: &Wall, j: usize, i: Index) -> Option<Wall> {
    let col = remove_block(w.base(j), w.column(j), i)?;
    let next = w.with_column(j, col);
    (validate_wall(&next).is_empty() && is_proper(&next)).then_some(next)
}

/// The 0/1 word under column j for color i: "1" per successive removable
/// top i-block, then "0" per successive admissible i-slot. At most one of
/// each for i ∈ {0,2}, at most two in total for i = 1.
pub fn column_signature(i: Index, w: &Wall, j: usize) -> String {
    let max_steps = if i.value() == 1 { 2 } else { 1 };
    let mut out = String::new();
    let mut cur = w.clone();
    for _ in 0..max_steps {
        match candidate_remove(&cur, j, i) {
            Some(next) => {
                out.push('1');
                cur = next;
            }
            None => break,
        }
    }
    let mut cur = w.clone();
    for _ in 0..max_steps {
        match candidate_add(&cur, j, i) {
            Some(next) => {
                out.push('0');
                cur = next;
            }
            None => break,
        }
    }
    out
}

/// Number of columns that can possibly contribute symbols: every column
/// past the first bare one is vetoed by monotonicity against its bare
/// right-hand neighbour.
fn default_window(w: &Wall) -> usize {
    w.cols.len() + 2
}

fn signature_symbols(i: Index, w: &Wall, window: usize) -> Vec<Symbol> {
    let mut syms = Vec::new();
    for j in (0..window).rev() {
        for ch in column_signature(i, w, j).chars() {
            syms.push(if ch == '1' {
                Symbol::one(j)
            } else {
                Symbol::zero(j)
            });
        }
    }
    syms
}

/// Window-parameterized lowering, exposed for the window-doubling check.
pub fn f_wall_with_window(i: Index, w: &Wall, window: usize) -> Option<Wall> {
    assert!(window > w.cols.len());
    let j = leftmost_zero(&signature_symbols(i, w, window))?;
    Some(candidate_add(w, j, i).expect("a surviving 0 marks an admissible column"))
}

/// Window-parameterized raising.
pub fn e_wall_with_window(i: Index, w: &Wall, window: usize) -> Option<Wall> {
    assert!(window > w.cols.len());
    let j = rightmost_one(&signature_symbols(i, w, window))?;
    Some(candidate_remove(w, j, i).expect("a surviving 1 marks a removable column"))
}

/// Window-parameterized string lengths.
pub fn eps_phi_wall_with_window(i: Index, w: &Wall, window: usize) -> (i64, i64) {
    assert!(window > w.cols.len());
    crate::signature::eps_phi(&signature_symbols(i, w, window))
}

/// The lowering operator f̃ᵢ: add an i-block at the left-most surviving 0.
pub fn f_wall(i: Index, w: &Wall) -> Option<Wall> {
    f_wall_with_window(i, w, default_window(w))
}

/// The raising operator ẽᵢ: remove the i-block at the right-most surviving 1.
pub fn e_wall(i: Index, w: &Wall) -> Option<Wall> {
    e_wall_with_window(i, w, default_window(w))
}

/// String lengths (εᵢ, φᵢ) of a wall.
pub fn eps_phi_wall(i: Index, w: &Wall) -> (i64, i64) {
    eps_phi_wall_with_window(i, w, default_window(w))
}

/// Affine weight by block census: Λ_ground − Σ mₐ αₐ with mₐ the number of
/// added a-blocks across all columns.
pub fn wt_wall(w: &Wall) -> AffineWeight {
    let mut census = [0i64; 3];
    for j in 0..w.cols.len() {
        for block in w.column_blocks(j) {
            census[block.as_usize()] += 1;
        }
    }
    let mut wt = AffineWeight::fundamental(w.ground);
    for i in Index::ALL {
        wt = wt - simple_root(i) * census[i.as_usize()];
    }
    wt
}

/// The reading map onto paths: the top unit cube of each column determines
/// one factor.
pub fn read_wall(w: &Wall) -> PathState {
    use BElem::*;
    let overrides = (0..w.cols.len())
        .map(|j| match top_of(w.base(j), w.column(j)) {
            Top::Half(c) if c.value() == 0 => OneTwo,
            Top::Half(_) => TwoBarOneBar,
            Top::Full => OneTwoBar,
            Top::One => TwoTwoBar,
            Top::TwoOnes => TwoOneBar,
        })
        .collect();
    PathState::new(w.ground, overrides)
}

impl Wall {
    /// Literal of the form "L<g>;c0=<colors>;c1=<colors>;…" with colors
    /// listed bottom-to-top, e.g. "L0;c0=0,1,1,2;c1=2". "L1;" is the bare
    /// Λ₁ ground wall.
    pub fn literal(&self) -> String {
        let entries: Vec<String> = (0..self.cols.len())
            .map(|j| {
                let colors: Vec<String> = self
                    .column_blocks(j)
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                format!("c{j}={}", colors.join(","))
            })
            .collect();
        format!("L{};{}", self.ground, entries.join(";"))
    }

    /// Parses a wall literal, validating each column against the stacking
    /// automaton. Errors carry the byte position of the offending token.
    pub fn parse(s: &str) -> Result<Wall, Error> {
        let parse_err = |position: usize, message: String| Error::Parse { position, message };
        let rest = s
            .strip_prefix('L')
            .ok_or_else(|| parse_err(0, "expected literal starting with 'L'".into()))?;
        let (g, body) = rest
            .split_once(';')
            .ok_or_else(|| parse_err(s.len(), "expected ';' after ground index".into()))?;
        let ground = g
            .parse::<u8>()
            .ok()
            .and_then(Index::new)
            .ok_or_else(|| parse_err(1, format!("invalid ground index {g:?}")))?;
        let mut cols: Vec<ColumnState> = Vec::new();
        let mut offset = s.len() - body.len();
        if !body.is_empty() {
            for entry in body.split(';') {
                let (name, colors) = entry
                    .split_once('=')
                    .ok_or_else(|| parse_err(offset, format!("expected c<j>=…, found {entry:?}")))?;
                let j: usize = name
                    .strip_prefix('c')
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(offset, format!("invalid column name {name:?}")))?;
                while cols.len() <= j {
                    cols.push(ColumnState::BARE);
                }
                if cols[j] != ColumnState::BARE {
                    return Err(parse_err(offset, format!("column {j} listed twice")));
                }
                let base = base_of(ground, j);
                let mut col = ColumnState::BARE;
                let mut color_offset = offset + name.len() + 1;
                for tok in colors.split(',') {
                    let color = tok
                        .parse::<u8>()
                        .ok()
                        .and_then(Index::new)
                        .ok_or_else(|| {
                            parse_err(color_offset, format!("invalid block color {tok:?}"))
                        })?;
                    col = add_block(base, col, color).ok_or_else(|| {
                        parse_err(
                            color_offset,
                            format!("a {color}-block cannot be stacked here"),
                        )
                    })?;
                    color_offset += tok.len() + 1;
                }
                if col.is_bare() {
                    return Err(parse_err(offset, format!("column {j} lists no blocks")));
                }
                cols[j] = col;
                offset += entry.len() + 1;
            }
        }
        Ok(Wall::new(ground, cols))
    }

    /// ASCII rendering, one 4-character cell per column, rows top-down:
    /// "[02]" a complete unit layer, "[0.]"/"[.2]" a lone half-block,
    /// "[11]" a 1-block, with the right-most column on the right. Display
    /// only; not a stability contract.
    pub fn render(&self) -> String {
        if self.cols.is_empty() {
            return format!("(bare ground wall L{};)\n", self.ground);
        }
        let cell_rows = |j: usize| -> Vec<&'static str> {
            let mut rows = Vec::new();
            match self.base(j) {
                ColumnBase::Layered { ground_half } => {
                    let col = self.column(j);
                    if col.n >= 1 {
                        rows.push("[02]");
                    } else {
                        rows.push(if ground_half.value() == 0 { "[0.]" } else { "[.2]" });
                    }
                    let mut k = 2;
                    while k <= col.n {
                        match k % 4 {
                            2 | 3 => rows.push("[11]"),
                            0 => {
                                if k == col.n {
                                    let t = col.tag.expect("tagged state");
                                    rows.push(if t.value() == 0 { "[0.]" } else { "[.2]" });
                                } else {
                                    // completed on the next step
                                }
                            }
                            _ => rows.push("[02]"),
                        }
                        k += 1;
                    }
                }
                ColumnBase::Ones => {
                    rows.push("[11]"); // ground 1-block
                    let col = self.column(j);
                    let mut k = 1;
                    while k <= col.n {
                        match (k + 2) % 4 {
                            2 | 3 => rows.push("[11]"),
                            0 => {
                                if k == col.n {
                                    let t = col.tag.expect("tagged state");
                                    rows.push(if t.value() == 0 { "[0.]" } else { "[.2]" });
                                }
                            }
                            _ => rows.push("[02]"),
                        }
                        k += 1;
                    }
                }
            }
            rows
        };
        let stacks: Vec<Vec<&'static str>> = (0..self.cols.len()).map(cell_rows).collect();
        let height = stacks.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = String::new();
        for row in (0..height).rev() {
            for stack in stacks.iter().rev() {
                out.push_str(stack.get(row).copied().unwrap_or("    "));
            }
            out.push('\n');
        }
        for _ in 0..self.cols.len() {
            out.push_str("====");
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// The Young-wall realization as a [`CrystalModel`].
#[derive(Clone, Copy, Debug, Default)]
pub struct WallModel;

impl CrystalModel for WallModel {
    type Elem = Wall;

    fn name(&self) -> &'static str {
        "wall"
    }

    fn affine(&self) -> bool {
        true
    }

    fn weight(&self, x: &Wall) -> AffineWeight {
        wt_wall(x)
    }

    fn eps(&self, i: Index, x: &Wall) -> i64 {
        eps_phi_wall(i, x).0
    }

    fn phi(&self, i: Index, x: &Wall) -> i64 {
        eps_phi_wall(i, x).1
    }

    fn e(&self, i: Index, x: &Wall) -> Option<Wall> {
        e_wall(i, x)
    }

    fn f(&self, i: Index, x: &Wall) -> Option<Wall> {
        f_wall(i, x)
    }

    fn key(&self, x: &Wall) -> String {
        x.literal()
    }

    fn ground_of(&self, x: &Wall) -> Option<Index> {
        Some(x.ground)
    }
}
