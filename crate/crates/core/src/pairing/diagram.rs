//! Cell diagrams of composition types, the bijections that respect their
//! two natural orders, and per-row cuts.
//!
//! The type of a phrase is the composition recording its word lengths. Its
//! diagram is the left-justified array of cells with one row per word.
//! Cells carry two partial orders: the total lexicographic order `<` on
//! (row, column), and the *horizontal* order `≺` relating cells of one row
//! by column. The bijections compatible with the pair of orders — see
//! [`good_bijections`] — are exactly the terms of the duality pairing.

use num_bigint::BigInt;

use crate::error::Error;
use crate::freelin::{factorial, Phrase, Word};

/// A composition: an ordered list of positive parts. Records the word
/// lengths of a phrase; the empty phrase has no type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionType {
    parts: Vec<usize>,
}

impl CompositionType {
    /// Panics on an empty list or a zero part.
    pub fn new(parts: Vec<usize>) -> CompositionType {
        assert!(!parts.is_empty(), "a composition has at least one part");
        assert!(parts.iter().all(|&p| p >= 1), "parts are positive");
        CompositionType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows in the diagram.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of cells (the weight of the composition).
    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All cells in lexicographic (row-major) order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (q, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                out.push(Cell { row: q + 1, col: j });
            }
        }
        out
    }
}

/// The composition type of a phrase; the unit has none.
pub fn type_of(p: &Phrase) -> Result<CompositionType, Error> {
    if p.is_unit() {
        return Err(Error::EmptyPhrase);
    }
    Ok(CompositionType::new(p.word_lengths()))
}

/// One cell of a diagram, addressed by 1-based row and column. The derived
/// order is the lexicographic order `<`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// The horizontal strict order `≺`: same row, strictly smaller column.
    pub fn precedes(self, other: Cell) -> bool {
        self.row == other.row && self.col < other.col
    }
}

/// A bijection between the cells of two equal-weight diagrams satisfying
/// both compatibility conditions:
///
/// * images of horizontally ordered cells are lexicographically ordered:
///   `a ≺ b` implies `φ(a) < φ(b)`;
/// * horizontally ordered images come from lexicographically ordered cells:
///   `φ(a) ≺ φ(b)` implies `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodBijection {
    domain: CompositionType,
    codomain: CompositionType,
    /// Image cell index (into `codomain.cells()`) for each domain cell in
    /// row-major order.
    map: Vec<usize>,
}

impl GoodBijection {
    pub fn domain(&self) -> &CompositionType {
        &self.domain
    }

    pub fn codomain(&self) -> &CompositionType {
        &self.codomain
    }

    /// Image cells listed for the domain cells in row-major order.
    pub fn images(&self) -> Vec<Cell> {
        let cells = self.codomain.cells();
        self.map.iter().map(|&i| cells[i]).collect()
    }

    pub fn apply(&self, cell: Cell) -> Cell {
        let pos = self
            .domain
            .cells()
            .iter()
            .position(|&c| c == cell)
            .expect("cell belongs to the domain diagram");
        self.codomain.cells()[self.map[pos]]
    }

    /// The inverse bijection; always good again with domain and codomain
    /// swapped.
    pub fn inverse(&self) -> GoodBijection {
        let mut inv = vec![0usize; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        GoodBijection {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            map: inv,
        }
    }
}

/// Enumerates every good bijection between the diagrams of `j` and `k`, in
/// lexicographic order of the image sequence. Errors when the cell counts
/// differ — no bijection can exist.
pub fn good_bijections(
    j: &CompositionType,
    k: &CompositionType,
) -> Result<Vec<GoodBijection>, Error> {
    let n = j.cell_count();
    if n != k.cell_count() {
        return Err(Error::CardinalMismatch { left: n, right: k.cell_count() });
    }
    let j_cells = j.cells();
    let k_cells = k.cells();

    // Backtracking over domain cells in row-major order. Two prunes make
    // the search exact:
    // * within a domain row, images must increase lexicographically
    //   (first condition, given row-major assignment order);
    // * a new image may not sit strictly left of an already-used cell in
    //   its codomain row, else the second condition fails for the earlier
    //   assignment.
    let mut result = Vec::new();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn recurse(
        pos: usize,
        j_cells: &[Cell],
        k_cells: &[Cell],
        used: &mut [bool],
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == j_cells.len() {
            out.push(map.clone());
            return;
        }
        let same_row_bound = if pos > 0 && j_cells[pos - 1].row == j_cells[pos].row {
            // Previous cell of this domain row: image must come later.
            Some(map[pos - 1])
        } else {
            None
        };
        for cand in 0..k_cells.len() {
            if used[cand] {
                continue;
            }
            if let Some(prev) = same_row_bound {
                if cand <= prev {
                    continue;
                }
            }
            let cell = k_cells[cand];
            let blocked = map
                .iter()
                .any(|&assigned| cell.precedes(k_cells[assigned]));
            if blocked {
                continue;
            }
            used[cand] = true;
            map.push(cand);
            recurse(pos + 1, j_cells, k_cells, used, map, out);
            map.pop();
            used[cand] = false;
        }
    }
    let mut raw = Vec::new();
    recurse(0, &j_cells, &k_cells, &mut used, &mut map, &mut raw);
    for map in raw {
        result.push(GoodBijection { domain: j.clone(), codomain: k.clone(), map });
    }
    Ok(result)
}

/// The horizontality index `h(φ) = Π_{p,q} card(φ(J_p) ∩ K_q)!` — the
/// product over row pairs of the factorial of how many cells of domain row
/// `p` land in codomain row `q`. Always a positive integer; invariant
/// under inversion.
pub fn horizontality(j: &CompositionType, k: &CompositionType, phi: &GoodBijection) -> BigInt {
    assert_eq!(phi.domain(), j, "bijection domain mismatch");
    assert_eq!(phi.codomain(), k, "bijection codomain mismatch");
    let mut counts = vec![vec![0usize; k.rows()]; j.rows()];
    let j_cells = j.cells();
    let k_cells = k.cells();
    for (pos, &img) in phi.map.iter().enumerate() {
        counts[j_cells[pos].row - 1][k_cells[img].row - 1] += 1;
    }
    let mut h = BigInt::from(1);
    for row in counts {
        for c in row {
            h *= factorial(c);
        }
    }
    h
}

/// All ways to cut a diagram into a left and a right part by choosing a
/// prefix of every row: `Π (k_q + 1)` cuts, enumerated with the first
/// row's prefix length varying slowest. Each cut is returned as the two
/// complementary cell sets in row-major order.
pub fn good_cuts(k: &CompositionType) -> Vec<(Vec<Cell>, Vec<Cell>)> {
    let rows = k.rows();
    let mut prefix = vec![0usize; rows];
    let mut out = Vec::new();
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (q, &len) in k.parts().iter().enumerate() {
            for j in 1..=len {
                let cell = Cell { row: q + 1, col: j };
                if j <= prefix[q] {
                    left.push(cell);
                } else {
                    right.push(cell);
                }
            }
        }
        out.push((left, right));
        // Advance the mixed-radix counter, last row fastest.
        let mut q = rows;
        while q > 0 {
            if prefix[q - 1] < k.parts()[q - 1] {
                prefix[q - 1] += 1;
                break;
            }
            prefix[q - 1] = 0;
            q -= 1;
        }
        if q == 0 {
            return out;
        }
    }
}

/// The subphrase of `p` spanned by the given cells: each row keeps its
/// selected letters in column order, empty rows disappear, remaining words
/// stay in row order. Cells must belong to the diagram of `p`.
pub fn select_cells(p: &Phrase, cells: &[Cell]) -> Phrase {
    let words = p.words();
    let mut picked: Vec<Vec<crate::freelin::Letter>> = vec![Vec::new(); words.len()];
    for cell in cells {
        let word = &words[cell.row - 1];
        picked[cell.row - 1].push(word.letters()[cell.col - 1]);
    }
    Phrase::new(
        picked
            .into_iter()
            .filter(|ls| !ls.is_empty())
            .map(Word::new)
            .collect(),
    )
}
