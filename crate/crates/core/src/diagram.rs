//! The symbol diagram of a quotient algebra.
//!
//! Killed roots are marked with a bullet up front. Each subsequent step
//! puts a cross on the dominant empty cell `(k, t)` and then, for every
//! `a` strictly between `t` and `k`, fills the pair `(k, a)` with a minus
//! and `(a, t)` with a plus, but only when both cells are still empty.
//! The cross count is the index of the quotient, the plus/minus count its
//! maximal coadjoint orbit dimension.

use std::cmp::Ordering;

use thiserror::Error;

use crate::roots::{positive_roots_desc, positive_roots_rowmajor, precedence, RegularIdeal, Root};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Symbol {
    Cross,
    Plus,
    Minus,
    Bullet,
    Empty,
}

impl Symbol {
    pub fn unicode_char(self) -> char {
        match self {
            Symbol::Cross => '⊗',
            Symbol::Plus => '+',
            Symbol::Minus => '-',
            Symbol::Bullet => '•',
            Symbol::Empty => '.',
        }
    }

    pub fn ascii_char(self) -> char {
        match self {
            Symbol::Cross => 'x',
            Symbol::Plus => '+',
            Symbol::Minus => '-',
            Symbol::Bullet => '*',
            Symbol::Empty => '.',
        }
    }
}

/// What one construction step did: its cross, the pairs it placed, and the
/// cells still empty afterwards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepRecord {
    pub index: usize,
    pub cross: Root,
    pub plus_set: Vec<Root>,
    pub minus_set: Vec<Root>,
    pub remaining: Vec<Root>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramStats {
    /// Number of crosses; the index of the quotient algebra.
    pub index: usize,
    /// Number of surviving roots.
    pub dim: usize,
    /// Number of plus and minus cells; the maximal orbit dimension.
    pub max_orbit_dim: usize,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("step {step} out of range, the diagram has {steps} steps")]
    StepOutOfRange { step: usize, steps: usize },
}

/// A completed diagram: the symbol grid together with the full step log.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    n: usize,
    ideal: RegularIdeal,
    grid: Vec<Symbol>,
    steps: Vec<StepRecord>,
}

impl Diagram {
    /// Runs the filling procedure to completion. Deterministic in the ideal.
    pub fn build(ideal: &RegularIdeal) -> Diagram {
        let n = ideal.n();
        let mut grid = vec![Symbol::Empty; n * n];
        let at = |row: usize, col: usize| (row - 1) * n + (col - 1);
        for r in ideal.dead_roots() {
            grid[at(r.row(), r.col())] = Symbol::Bullet;
        }
        let mut steps = Vec::new();
        let mut index = 0;
        while let Some(cross) = positive_roots_desc(n)
            .find(|r| grid[at(r.row(), r.col())] == Symbol::Empty)
        {
            index += 1;
            let (k, t) = (cross.row(), cross.col());
            grid[at(k, t)] = Symbol::Cross;
            let mut plus_set = Vec::new();
            let mut minus_set = Vec::new();
            for a in t + 1..k {
                if grid[at(k, a)] == Symbol::Empty && grid[at(a, t)] == Symbol::Empty {
                    grid[at(k, a)] = Symbol::Minus;
                    grid[at(a, t)] = Symbol::Plus;
                    minus_set.push(Root::new(k, a));
                    plus_set.push(Root::new(a, t));
                }
            }
            let remaining = positive_roots_rowmajor(n)
                .filter(|r| grid[at(r.row(), r.col())] == Symbol::Empty)
                .collect();
            steps.push(StepRecord { index, cross, plus_set, minus_set, remaining });
        }
        Diagram { n, ideal: ideal.clone(), grid, steps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideal(&self) -> &RegularIdeal {
        &self.ideal
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    pub fn symbol(&self, r: Root) -> Symbol {
        assert!(r.is_positive() && r.in_range(self.n), "no diagram cell at {r}");
        self.grid[(r.row() - 1) * self.n + (r.col() - 1)]
    }

    /// The crosses in placement order, which is descending precedence order.
    pub fn crosses(&self) -> Vec<Root> {
        self.steps.iter().map(|s| s.cross).collect()
    }

    /// All cells carrying `sym`, sorted by `(row, col)`.
    pub fn cells_with(&self, sym: Symbol) -> Vec<Root> {
        positive_roots_rowmajor(self.n).filter(|&r| self.symbol(r) == sym).collect()
    }

    pub fn stats(&self) -> DiagramStats {
        let mut index = 0;
        let mut pairs = 0;
        for r in positive_roots_rowmajor(self.n) {
            match self.symbol(r) {
                Symbol::Cross => index += 1,
                Symbol::Plus | Symbol::Minus => pairs += 1,
                _ => {}
            }
        }
        DiagramStats { index, dim: self.ideal.dim(), max_orbit_dim: pairs }
    }

    /// Minus cells placed up to step `i` that the step-`i` cross dominates.
    pub fn accumulated_minus(&self, i: usize) -> Result<Vec<Root>, DiagramError> {
        self.accumulated(i, |s| &s.minus_set)
    }

    /// Plus cells placed up to step `i` that the step-`i` cross dominates.
    pub fn accumulated_plus(&self, i: usize) -> Result<Vec<Root>, DiagramError> {
        self.accumulated(i, |s| &s.plus_set)
    }

    fn accumulated(
        &self,
        i: usize,
        pick: impl Fn(&StepRecord) -> &Vec<Root>,
    ) -> Result<Vec<Root>, DiagramError> {
        if i == 0 || i > self.steps.len() {
            return Err(DiagramError::StepOutOfRange { step: i, steps: self.steps.len() });
        }
        let cross = self.steps[i - 1].cross;
        let mut out: Vec<Root> = self.steps[..i]
            .iter()
            .flat_map(|s| pick(s).iter().copied())
            .filter(|&r| precedence(cross, r) == Ordering::Greater)
            .collect();
        out.sort();
        Ok(out)
    }

    /// Renders the grid, row 1 on top; cells on or above the diagonal are
    /// blank, all others show their symbol.
    pub fn render(&self, ascii: bool) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            let mut line = String::new();
            for j in 1..=self.n {
                if j > 1 {
                    line.push(' ');
                }
                if i <= j {
                    line.push(' ');
                } else {
                    let sym = self.grid[(i - 1) * self.n + (j - 1)];
                    line.push(if ascii { sym.ascii_char() } else { sym.unicode_char() });
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
