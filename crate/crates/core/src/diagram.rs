//! Cauchon diagrams: `m x n` grids of black and white squares in which every
//! black square has only black squares above it, or only black squares to its
//! left.
//!
//! Text format: an optional header line `m n`, then one line per row using
//! `.` for white and `X` for black. Blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::qtorus::GenIndex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram dimensions must be positive, got {m}x{n}")]
    EmptyShape { m: usize, n: usize },
    #[error("square {index} lies outside the {m}x{n} grid")]
    OutOfRange { index: GenIndex, m: usize, n: usize },
    #[error("black square {0} has a white square above it and a white square to its left")]
    Violation(GenIndex),
    #[error("no diagram rows found")]
    NoRows,
    #[error("line {line}: expected {expected} cells, found {found}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: illegal character {ch:?} (expected '.' or 'X')")]
    IllegalChar {
        line: usize,
        column: usize,
        ch: char,
    },
    #[error("header declares {m}x{n} but the body is {rows}x{cols}")]
    HeaderMismatch {
        m: usize,
        n: usize,
        rows: usize,
        cols: usize,
    },
}

impl DiagramError {
    /// True for errors that concern the Cauchon condition itself rather than
    /// the input's syntax.
    pub fn is_violation(&self) -> bool {
        matches!(self, DiagramError::Violation(_))
    }
}

/// Whether validation of the Cauchon condition is applied when constructing
/// or parsing a diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    #[default]
    Strict,
    /// Accept any coloring. Only meant for exercising the validator.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CauchonDiagram {
    m: usize,
    n: usize,
    // row-major, true = black
    black: Vec<bool>,
}

/// First black square (row-major) that breaks the Cauchon condition.
fn first_violation(m: usize, n: usize, black: &[bool]) -> Option<GenIndex> {
    (0..m * n)
        .find(|&p| black[p] && !black_allowed(n, black, p))
        .map(|p| GenIndex::new(p / n + 1, p % n + 1))
}

/// Whether a black square at row-major position `p` satisfies the condition,
/// looking only at squares above and to the left of it.
fn black_allowed(n: usize, black: &[bool], p: usize) -> bool {
    let (i, j) = (p / n, p % n);
    (0..i).all(|r| black[r * n + j]) || (0..j).all(|c| black[i * n + c])
}

fn check_shape(m: usize, n: usize) -> Result<(), DiagramError> {
    if m == 0 || n == 0 {
        Err(DiagramError::EmptyShape { m, n })
    } else {
        Ok(())
    }
}

fn grid_from_indices<I>(m: usize, n: usize, black: I) -> Result<Vec<bool>, DiagramError>
where
    I: IntoIterator<Item = GenIndex>,
{
    check_shape(m, n)?;
    let mut grid = vec![false; m * n];
    for g in black {
        if g.row == 0 || g.col == 0 || g.row > m || g.col > n {
            return Err(DiagramError::OutOfRange { index: g, m, n });
        }
        grid[(g.row - 1) * n + g.col - 1] = true;
    }
    Ok(grid)
}

/// Whether the coloring with the given black squares is a Cauchon diagram.
pub fn is_valid(m: usize, n: usize, black: &[GenIndex]) -> Result<bool, DiagramError> {
    let grid = grid_from_indices(m, n, black.iter().copied())?;
    Ok(first_violation(m, n, &grid).is_none())
}

impl CauchonDiagram {
    pub fn new<I>(m: usize, n: usize, black: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = GenIndex>,
    {
        Self::with_validation(m, n, black, Validation::Strict)
    }

    pub fn with_validation<I>(
        m: usize,
        n: usize,
        black: I,
        validation: Validation,
    ) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = GenIndex>,
    {
        let black = grid_from_indices(m, n, black)?;
        Self::from_grid(m, n, black, validation)
    }

    fn from_grid(
        m: usize,
        n: usize,
        black: Vec<bool>,
        validation: Validation,
    ) -> Result<Self, DiagramError> {
        if validation == Validation::Strict {
            if let Some(g) = first_violation(m, n, &black) {
                return Err(DiagramError::Violation(g));
            }
        }
        Ok(Self { m, n, black })
    }

    pub fn all_white(m: usize, n: usize) -> Self {
        assert!(m > 0 && n > 0, "empty diagram");
        Self {
            m,
            n,
            black: vec![false; m * n],
        }
    }

    pub fn all_black(m: usize, n: usize) -> Self {
        assert!(m > 0 && n > 0, "empty diagram");
        Self {
            m,
            n,
            black: vec![true; m * n],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based lookup; panics outside the grid.
    pub fn is_black(&self, row: usize, col: usize) -> bool {
        assert!(
            (1..=self.m).contains(&row) && (1..=self.n).contains(&col),
            "({row},{col}) outside {}x{}",
            self.m,
            self.n
        );
        self.black[(row - 1) * self.n + col - 1]
    }

    pub fn is_white(&self, row: usize, col: usize) -> bool {
        !self.is_black(row, col)
    }

    /// Black squares in row-major order.
    pub fn black_squares(&self) -> impl Iterator<Item = GenIndex> + '_ {
        self.squares().filter(|g| self.is_black(g.row, g.col))
    }

    /// White squares in row-major order.
    pub fn white_squares(&self) -> impl Iterator<Item = GenIndex> + '_ {
        self.squares().filter(|g| self.is_white(g.row, g.col))
    }

    fn squares(&self) -> impl Iterator<Item = GenIndex> {
        let n = self.n;
        (0..self.m * n).map(move |p| GenIndex::new(p / n + 1, p % n + 1))
    }

    /// Re-checks the Cauchon condition; always `Ok` for diagrams built with
    /// strict validation.
    pub fn validate(&self) -> Result<(), DiagramError> {
        match first_violation(self.m, self.n, &self.black) {
            Some(g) => Err(DiagramError::Violation(g)),
            None => Ok(()),
        }
    }

    /// The diagram with its bottom row removed, or `None` for a single row.
    pub fn without_last_row(&self) -> Option<Self> {
        (self.m > 1).then(|| Self {
            m: self.m - 1,
            n: self.n,
            black: self.black[..(self.m - 1) * self.n].to_vec(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        Self::parse_with(text, Validation::Strict)
    }

    pub fn parse_with(text: &str, validation: Validation) -> Result<Self, DiagramError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .peekable();

        let header = lines.peek().and_then(|(_, l)| parse_header(l));
        if header.is_some() {
            lines.next();
        }

        let mut black = Vec::new();
        let mut rows = 0;
        let mut width = None;
        for (line_no, line) in lines {
            let mut count = 0;
            for (k, ch) in line.chars().enumerate() {
                match ch {
                    '.' => black.push(false),
                    'X' => black.push(true),
                    _ => {
                        return Err(DiagramError::IllegalChar {
                            line: line_no,
                            column: k + 1,
                            ch,
                        })
                    }
                }
                count += 1;
            }
            match width {
                None => width = Some(count),
                Some(w) if w != count => {
                    return Err(DiagramError::Ragged {
                        line: line_no,
                        expected: w,
                        found: count,
                    })
                }
                _ => {}
            }
            rows += 1;
        }
        let cols = width.ok_or(DiagramError::NoRows)?;
        if let Some((m, n)) = header {
            if (m, n) != (rows, cols) {
                return Err(DiagramError::HeaderMismatch { m, n, rows, cols });
            }
        }
        check_shape(rows, cols)?;
        Self::from_grid(rows, cols, black, validation)
    }

    /// File form: header line `m n` followed by the rows.
    pub fn serialize(&self) -> String {
        format!("{} {}\n{self}", self.m, self.n)
    }
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let m = parts.next()?.parse().ok()?;
    let n = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((m, n))
}

impl FromStr for CauchonDiagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for CauchonDiagram {
    /// Rows only, each terminated by a newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.black.chunks(self.n) {
            for &b in row {
                f.write_str(if b { "X" } else { "." })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Every `m x n` Cauchon diagram exactly once.
///
/// Order: read a coloring as a bitstring over the squares in row-major order,
/// `(1,1)` most significant, black = 1; diagrams come out in increasing
/// order, starting from the all-white one. A black square is only placed
/// when its prefix allows it, so no invalid coloring is ever visited.
pub fn enumerate(m: usize, n: usize) -> Enumerate {
    assert!(m > 0 && n > 0, "empty diagram");
    Enumerate {
        m,
        n,
        cells: vec![false; m * n],
        state: EnumState::Fresh,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum EnumState {
    Fresh,
    Running,
    Done,
}

#[derive(Clone, Debug)]
pub struct Enumerate {
    m: usize,
    n: usize,
    cells: Vec<bool>,
    state: EnumState,
}

impl Iterator for Enumerate {
    type Item = CauchonDiagram;

    fn next(&mut self) -> Option<CauchonDiagram> {
        match self.state {
            EnumState::Done => return None,
            EnumState::Fresh => self.state = EnumState::Running,
            EnumState::Running => {
                // Smallest successor: flip the last white square that may turn
                // black, then whiten everything after it.
                let pos = (0..self.cells.len())
                    .rev()
                    .find(|&p| !self.cells[p] && black_allowed(self.n, &self.cells, p));
                match pos {
                    Some(p) => {
                        self.cells[p] = true;
                        self.cells[p + 1..].iter_mut().for_each(|c| *c = false);
                    }
                    None => {
                        self.state = EnumState::Done;
                        return None;
                    }
                }
            }
        }
        Some(CauchonDiagram {
            m: self.m,
            n: self.n,
            black: self.cells.clone(),
        })
    }
}
