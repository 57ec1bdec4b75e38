//! Brute-force enumeration oracles.
//!
//! Everything here recomputes a polynomial or a count by exhaustively
//! enumerating concrete combinatorial objects — monomino/domino tilings,
//! box partitions with complementary tilings, Delannoy lattice paths —
//! independently of every recurrence in the crate. Enumerations charge a
//! budget and fail loudly instead of hanging; there is no sampling.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Monomino,
    Domino,
}

impl Piece {
    pub fn cells(&self) -> usize {
        match self {
            Piece::Monomino => 1,
            Piece::Domino => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingKind {
    Linear,
    /// Tiling of a cycle; when `straddling_domino` is set, the final domino
    /// wraps from the last cell back to the first.
    Circular { straddling_domino: bool },
}

/// A concrete tiling witness. Piece lengths sum to the tiled length; a
/// straddling domino is listed like any other piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub pieces: Vec<Piece>,
    pub kind: TilingKind,
}

impl Tiling {
    pub fn length(&self) -> usize {
        self.pieces.iter().map(Piece::cells).sum()
    }

    /// `(monominoes, dominoes)` — the exponents of the weight `s^m t^d`.
    pub fn weight_exponents(&self) -> (u32, u32) {
        piece_tally(&self.pieces)
    }
}

/// A partition fitting inside a `rows x cols` box: weakly decreasing parts,
/// each at most `cols`, at most `rows` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxPartition {
    parts: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl BoxPartition {
    pub fn new(parts: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        if parts.len() > rows
            || parts.iter().any(|&p| p > cols)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::input(format!(
                "{parts:?} does not fit in a {rows}x{cols} box"
            )));
        }
        Ok(BoxPartition { parts, rows, cols })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row lengths padded with zeros to the full box height.
    pub fn padded_rows(&self) -> Vec<usize> {
        let mut rows = self.parts.clone();
        rows.resize(self.rows, 0);
        rows
    }

    /// The complementary diagram in the same box: row `i` of the complement
    /// has length `cols - parts[rows - 1 - i]`.
    pub fn complement(&self) -> BoxPartition {
        let padded = self.padded_rows();
        let parts: Vec<usize> = padded.iter().rev().map(|&p| self.cols - p).collect();
        BoxPartition {
            parts,
            rows: self.rows,
            cols: self.cols,
        }
    }

    /// The conjugate diagram, living in the transposed box: part `j` is the
    /// height of column `j`.
    pub fn conjugate(&self) -> BoxPartition {
        let parts: Vec<usize> = (1..=self.parts.first().copied().unwrap_or(0))
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        BoxPartition {
            parts,
            rows: self.cols,
            cols: self.rows,
        }
    }

    /// All partitions fitting in a `rows x cols` box.
    pub fn enumerate(rows: usize, cols: usize) -> Vec<BoxPartition> {
        fn recurse(
            out: &mut Vec<BoxPartition>,
            parts: &mut Vec<usize>,
            rows: usize,
            cols: usize,
            max_part: usize,
        ) {
            out.push(BoxPartition {
                parts: parts.clone(),
                rows,
                cols,
            });
            if parts.len() == rows {
                return;
            }
            for next in (1..=max_part).rev() {
                parts.push(next);
                recurse(out, parts, rows, cols, next);
                parts.pop();
            }
        }
        let mut out = Vec::new();
        let mut parts = Vec::new();
        recurse(&mut out, &mut parts, rows, cols, cols);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    East,
    North,
    Diagonal,
}

/// A lattice path from the origin over east/north/diagonal unit steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn endpoint(&self) -> (usize, usize) {
        let mut x = 0;
        let mut y = 0;
        for step in &self.steps {
            match step {
                Step::East => x += 1,
                Step::North => y += 1,
                Step::Diagonal => {
                    x += 1;
                    y += 1;
                }
            }
        }
        (x, y)
    }
}

/// Cap on the total number of enumerated objects. Oracles must fail loudly,
/// not hang.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn charge(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}

/// Accumulates `s^m t^d` monomials by count.
#[derive(Default)]
struct WeightSum {
    counts: BTreeMap<(u32, u32), u64>,
}

impl WeightSum {
    fn add(&mut self, monominoes: u32, dominoes: u32) {
        *self.counts.entry((monominoes, dominoes)).or_insert(0) += 1;
    }

    fn into_poly(self) -> BiPoly {
        let mut acc = BiPoly::zero();
        for ((m, d), count) in self.counts {
            acc = &acc + &BiPoly::monomial(m, d, Integer::from(count));
        }
        acc
    }
}

fn piece_tally(pieces: &[Piece]) -> (u32, u32) {
    let mut m = 0;
    let mut d = 0;
    for p in pieces {
        match p {
            Piece::Monomino => m += 1,
            Piece::Domino => d += 1,
        }
    }
    (m, d)
}

/// Visits every linear monomino/domino tiling of `length` cells. When
/// `must_start_with_domino` is set, a nonempty row must lead with a domino
/// (the empty row passes vacuously).
fn visit_linear<F: FnMut(&[Piece]) -> Result<()>>(
    length: usize,
    must_start_with_domino: bool,
    f: &mut F,
) -> Result<()> {
    fn recurse<F: FnMut(&[Piece]) -> Result<()>>(
        remaining: usize,
        stack: &mut Vec<Piece>,
        domino_led: bool,
        f: &mut F,
    ) -> Result<()> {
        if remaining == 0 {
            return f(stack);
        }
        if !(domino_led && stack.is_empty()) {
            stack.push(Piece::Monomino);
            recurse(remaining - 1, stack, domino_led, f)?;
            stack.pop();
        }
        if remaining >= 2 {
            stack.push(Piece::Domino);
            recurse(remaining - 2, stack, domino_led, f)?;
            stack.pop();
        }
        Ok(())
    }
    let mut stack = Vec::new();
    recurse(length, &mut stack, must_start_with_domino, f)
}

/// All linear tilings of a `1 x length` strip.
pub fn linear_tilings(length: usize, budget: &mut Budget) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    visit_linear(length, false, &mut |pieces| {
        budget.charge()?;
        out.push(Tiling {
            pieces: pieces.to_vec(),
            kind: TilingKind::Linear,
        });
        Ok(())
    })?;
    Ok(out)
}

/// All circular tilings of an `n`-cycle: the linear tilings laid on the
/// cycle, plus (for n >= 2) a straddling domino around the wrap position
/// combined with every linear tiling of the remaining `n - 2` cells.
pub fn circular_tilings(n: usize, budget: &mut Budget) -> Result<Vec<Tiling>> {
    if n == 0 {
        return Err(Error::input("circular tilings require n >= 1"));
    }
    let mut out = Vec::new();
    visit_linear(n, false, &mut |pieces| {
        budget.charge()?;
        out.push(Tiling {
            pieces: pieces.to_vec(),
            kind: TilingKind::Circular {
                straddling_domino: false,
            },
        });
        Ok(())
    })?;
    if n >= 2 {
        visit_linear(n - 2, false, &mut |pieces| {
            budget.charge()?;
            let mut pieces = pieces.to_vec();
            pieces.push(Piece::Domino);
            out.push(Tiling {
                pieces,
                kind: TilingKind::Circular {
                    straddling_domino: true,
                },
            });
            Ok(())
        })?;
    }
    Ok(out)
}

/// Total weight `sum s^m t^d` over linear tilings of `length` cells; equals
/// the Lucas polynomial of index `length + 1`.
pub fn linear_tilings_weight(length: usize, budget: &mut Budget) -> Result<BiPoly> {
    let mut sum = WeightSum::default();
    visit_linear(length, false, &mut |pieces| {
        budget.charge()?;
        let (m, d) = piece_tally(pieces);
        sum.add(m, d);
        Ok(())
    })?;
    Ok(sum.into_poly())
}

/// Total weight over circular tilings of an `n`-cycle; equals the circular
/// Lucas polynomial of index `n`.
pub fn circular_tilings_weight(n: usize, budget: &mut Budget) -> Result<BiPoly> {
    if n == 0 {
        return Err(Error::input("circular tilings require n >= 1"));
    }
    let mut sum = WeightSum::default();
    visit_linear(n, false, &mut |pieces| {
        budget.charge()?;
        let (m, d) = piece_tally(pieces);
        sum.add(m, d);
        Ok(())
    })?;
    if n >= 2 {
        visit_linear(n - 2, false, &mut |pieces| {
            budget.charge()?;
            let (m, d) = piece_tally(pieces);
            sum.add(m, d + 1); // plus the straddling domino
            Ok(())
        })?;
    }
    Ok(sum.into_poly())
}

/// The double sum over partitions in an `m x n` box: rows of the partition
/// get arbitrary linear tilings, while the complementary diagram is tiled
/// along its columns with tilings that do not start with a monomino. Every
/// pair contributes the product of its strip weights. Equals the lucanomial
/// `{L_{m+n} choose L_n}`.
///
/// Reading the complement by rows instead of columns fails already at
/// `{L_3 choose L_1}` (it drops the `t` term), so the column reading is the
/// one the identity pins down.
pub fn lucanomial_tiling_sum(m: usize, n: usize, budget: &mut Budget) -> Result<BiPoly> {
    // per-length tiling exponent lists, enumerated once
    let max_len = m.max(n);
    let mut free_rows: Vec<Vec<(u32, u32)>> = Vec::with_capacity(max_len + 1);
    let mut domino_led_rows: Vec<Vec<(u32, u32)>> = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        let mut free = Vec::new();
        visit_linear(len, false, &mut |pieces| {
            free.push(piece_tally(pieces));
            Ok(())
        })?;
        free_rows.push(free);
        let mut led = Vec::new();
        visit_linear(len, true, &mut |pieces| {
            led.push(piece_tally(pieces));
            Ok(())
        })?;
        domino_led_rows.push(led);
    }

    fn product_walk(
        rows: &[&[(u32, u32)]],
        acc: (u32, u32),
        sum: &mut WeightSum,
        budget: &mut Budget,
    ) -> Result<()> {
        match rows.split_first() {
            None => {
                budget.charge()?;
                sum.add(acc.0, acc.1);
                Ok(())
            }
            Some((first, rest)) => {
                for &(pm, pd) in *first {
                    product_walk(rest, (acc.0 + pm, acc.1 + pd), sum, budget)?;
                }
                Ok(())
            }
        }
    }

    let mut sum = WeightSum::default();
    for partition in BoxPartition::enumerate(m, n) {
        let complement_columns = partition.complement().conjugate();
        let mut row_choices: Vec<&[(u32, u32)]> = Vec::new();
        for &len in partition.parts() {
            if len > 0 {
                row_choices.push(&free_rows[len]);
            }
        }
        for &len in complement_columns.parts() {
            if len > 0 {
                row_choices.push(&domino_led_rows[len]);
            }
        }
        product_walk(&row_choices, (0, 0), &mut sum, budget)?;
    }
    Ok(sum.into_poly())
}

/// Number of lattice paths from the origin to `(b, a)` using east, north and
/// diagonal unit steps, by exhaustive walk.
pub fn delannoy_paths_count(a: usize, b: usize, budget: &mut Budget) -> Result<Integer> {
    fn walk(x: usize, y: usize, bx: usize, by: usize, budget: &mut Budget) -> Result<Integer> {
        if x == bx && y == by {
            budget.charge()?;
            return Ok(Integer::one());
        }
        let mut total = Integer::zero();
        if x < bx {
            total += walk(x + 1, y, bx, by, budget)?;
        }
        if y < by {
            total += walk(x, y + 1, bx, by, budget)?;
        }
        if x < bx && y < by {
            total += walk(x + 1, y + 1, bx, by, budget)?;
        }
        Ok(total)
    }
    walk(0, 0, b, a, budget)
}

/// All lattice paths to `(b, a)`; the witness form of
/// [`delannoy_paths_count`].
pub fn delannoy_paths(a: usize, b: usize, budget: &mut Budget) -> Result<Vec<LatticePath>> {
    fn walk(
        x: usize,
        y: usize,
        bx: usize,
        by: usize,
        stack: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
        budget: &mut Budget,
    ) -> Result<()> {
        if x == bx && y == by {
            budget.charge()?;
            out.push(LatticePath {
                steps: stack.clone(),
            });
            return Ok(());
        }
        if x < bx {
            stack.push(Step::East);
            walk(x + 1, y, bx, by, stack, out, budget)?;
            stack.pop();
        }
        if y < by {
            stack.push(Step::North);
            walk(x, y + 1, bx, by, stack, out, budget)?;
            stack.pop();
        }
        if x < bx && y < by {
            stack.push(Step::Diagonal);
            walk(x + 1, y + 1, bx, by, stack, out, budget)?;
            stack.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    walk(0, 0, b, a, &mut stack, &mut out, budget)?;
    Ok(out)
}
