//! The Poisson structure of the quotient algebra and the numeric oracles
//! built on it.
//!
//! On basis coordinates the bracket is the matrix-unit commutator followed
//! by projection: anything landing in the ideal is zero. Extended as a
//! biderivation this gives the Poisson bracket on polynomials, entirely in
//! exact integer arithmetic, so an "invariant" verdict is a proof rather
//! than evidence. The rank oracles instead evaluate at random points of a
//! large prime field and take the maximum over seeded trials.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::modp::{rank, FieldError, PrimeField, DEFAULT_PRIME};
use crate::poly::{SparsePoly, Var};
use crate::roots::{RegularIdeal, Root};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PoissonError {
    #[error("root {0} is not a live generator of this quotient")]
    DeadRoot(Root),
    #[error("polynomial must not involve the variable λ")]
    LambdaPresent,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("prime {0} is too small for generic-point sampling, need more than 2^40")]
    PrimeTooSmall(u64),
}

/// Bracket of two basis coordinates: a signed coordinate or zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisBracket {
    Zero,
    Plus(Root),
    Minus(Root),
}

/// `{y_a, y_b}` for live positive roots, with the quotient projection
/// applied: `(i,j)` and `(j,l)` bracket to `+(i,l)`, `(i,j)` and `(k,i)`
/// to `-(k,j)`, anything else — or any result inside the ideal — to zero.
pub fn basis_bracket(
    a: Root,
    b: Root,
    ideal: &RegularIdeal,
) -> Result<BasisBracket, PoissonError> {
    for r in [a, b] {
        if !r.is_positive() || !r.in_range(ideal.n()) || ideal.contains(r) {
            return Err(PoissonError::DeadRoot(r));
        }
    }
    let raw = if a.col() == b.row() {
        BasisBracket::Plus(Root::new(a.row(), b.col()))
    } else if b.col() == a.row() {
        BasisBracket::Minus(Root::new(b.row(), a.col()))
    } else {
        BasisBracket::Zero
    };
    Ok(match raw {
        BasisBracket::Plus(r) | BasisBracket::Minus(r) if ideal.contains(r) => BasisBracket::Zero,
        other => other,
    })
}

/// Precomputed structure constants over the live roots of one quotient.
pub struct BracketTable {
    live: Vec<Root>,
    position: HashMap<Root, usize>,
    entries: Vec<BasisBracket>,
}

impl BracketTable {
    pub fn new(ideal: &RegularIdeal) -> BracketTable {
        let live = ideal.live_roots();
        let position = live.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let m = live.len();
        let mut entries = vec![BasisBracket::Zero; m * m];
        for (i, &a) in live.iter().enumerate() {
            for (j, &b) in live.iter().enumerate() {
                entries[i * m + j] = basis_bracket(a, b, ideal).expect("live inputs");
            }
        }
        BracketTable { live, position, entries }
    }

    /// Live roots sorted by `(row, col)`; the table axes.
    pub fn live(&self) -> &[Root] {
        &self.live
    }

    pub fn position_of(&self, r: Root) -> Option<usize> {
        self.position.get(&r).copied()
    }

    pub fn entry(&self, i: usize, j: usize) -> BasisBracket {
        self.entries[i * self.live.len() + j]
    }
}

fn require_live_support(p: &SparsePoly, ideal: &RegularIdeal) -> Result<Vec<Root>, PoissonError> {
    let mut roots = Vec::new();
    for v in p.vars() {
        match v {
            Var::Lambda => return Err(PoissonError::LambdaPresent),
            Var::Coord(r) => {
                if !r.is_positive() || !r.in_range(ideal.n()) || ideal.contains(r) {
                    return Err(PoissonError::DeadRoot(r));
                }
                roots.push(r);
            }
        }
    }
    Ok(roots)
}

/// The Poisson bracket `{p, q}`, extended from the basis brackets by the
/// derivation rule in both arguments. Exact integer arithmetic throughout.
pub fn poisson_bracket(
    p: &SparsePoly,
    q: &SparsePoly,
    ideal: &RegularIdeal,
) -> Result<SparsePoly, PoissonError> {
    let p_roots = require_live_support(p, ideal)?;
    let q_roots = require_live_support(q, ideal)?;
    let mut acc = SparsePoly::zero();
    for &a in &p_roots {
        let dp = p.partial_derivative(Var::Coord(a));
        if dp.is_zero() {
            continue;
        }
        for &b in &q_roots {
            let factor = match basis_bracket(a, b, ideal)? {
                BasisBracket::Zero => continue,
                BasisBracket::Plus(r) => SparsePoly::var(Var::Coord(r)),
                BasisBracket::Minus(r) => SparsePoly::var(Var::Coord(r)).neg(),
            };
            let dq = q.partial_derivative(Var::Coord(b));
            if dq.is_zero() {
                continue;
            }
            acc = acc.add(&dp.mul(&dq).mul(&factor));
        }
    }
    Ok(acc)
}

/// Outcome of a symbolic invariance check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Invariance {
    Invariant,
    Counterexample { witness: Root, bracket: SparsePoly },
}

impl Invariance {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Invariance::Invariant)
    }
}

/// Checks `{p, y_η} = 0` for every live generator η, walking generators in
/// descending precedence order and stopping at the first failure.
pub fn check_invariant(
    p: &SparsePoly,
    ideal: &RegularIdeal,
) -> Result<Invariance, PoissonError> {
    require_live_support(p, ideal)?;
    for witness in ideal.live_roots_desc() {
        let bracket = poisson_bracket(p, &SparsePoly::var(Var::Coord(witness)), ideal)?;
        if !bracket.is_zero() {
            return Ok(Invariance::Counterexample { witness, bracket });
        }
    }
    Ok(Invariance::Invariant)
}

/// Parameters of the random-point oracles. The seed is part of every
/// report so runs are reproducible; each trial draws from its own stream.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleConfig {
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> OracleConfig {
        OracleConfig { trials: 5, prime: DEFAULT_PRIME, seed: 0 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleReport {
    /// Maximal rank of the structure matrix over all trials; always even.
    pub generic_rank: usize,
    /// `dim - generic_rank`; an upper bound that generically attains the
    /// index.
    pub index_estimate: usize,
    pub dim: usize,
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
}

fn trial_rng(cfg: &OracleConfig, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(u64::from(trial) + 1);
    rng
}

fn check_prime(cfg: &OracleConfig) -> Result<PrimeField, PoissonError> {
    if cfg.prime <= 1 << 40 {
        return Err(PoissonError::PrimeTooSmall(cfg.prime));
    }
    Ok(PrimeField::new(cfg.prime)?)
}

/// Evaluates the antisymmetric structure matrix at random points of the
/// prime field and reports the maximal rank seen. The rank equals the
/// maximal coadjoint orbit dimension at generic points, so the derived
/// index estimate is exact with overwhelming probability.
pub fn generic_rank_oracle(
    ideal: &RegularIdeal,
    cfg: &OracleConfig,
) -> Result<OracleReport, PoissonError> {
    let field = check_prime(cfg)?;
    let table = BracketTable::new(ideal);
    let m = table.live().len();
    let mut best = 0;
    for trial in 0..cfg.trials {
        let mut rng = trial_rng(cfg, trial);
        let point: Vec<u64> = (0..m).map(|_| rng.random_range(0..cfg.prime)).collect();
        let matrix: Vec<Vec<u64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| match table.entry(i, j) {
                        BasisBracket::Zero => 0,
                        BasisBracket::Plus(r) => point[table.position_of(r).unwrap()],
                        BasisBracket::Minus(r) => {
                            field.neg(point[table.position_of(r).unwrap()])
                        }
                    })
                    .collect()
            })
            .collect();
        best = best.max(rank(matrix, &field));
    }
    Ok(OracleReport {
        generic_rank: best,
        index_estimate: ideal.dim() - best,
        dim: ideal.dim(),
        trials: cfg.trials,
        prime: cfg.prime,
        seed: cfg.seed,
    })
}

/// Maximal rank over trials of the Jacobian of `polys` with respect to the
/// live coordinates, evaluated at random points. Full rank certifies
/// algebraic independence.
pub fn jacobian_rank(
    ideal: &RegularIdeal,
    polys: &[SparsePoly],
    cfg: &OracleConfig,
) -> Result<usize, PoissonError> {
    let field = check_prime(cfg)?;
    let live = ideal.live_roots();
    let derivatives: Vec<Vec<SparsePoly>> = polys
        .iter()
        .map(|p| {
            require_live_support(p, ideal)?;
            Ok(live.iter().map(|&r| p.partial_derivative(Var::Coord(r))).collect())
        })
        .collect::<Result<_, PoissonError>>()?;
    if derivatives.is_empty() {
        return Ok(0);
    }
    let mut best = 0;
    for trial in 0..cfg.trials {
        let mut rng = trial_rng(cfg, trial);
        let point: BTreeMap<Var, u64> = live
            .iter()
            .map(|&r| (Var::Coord(r), rng.random_range(0..cfg.prime)))
            .collect();
        let matrix: Vec<Vec<u64>> = derivatives
            .iter()
            .map(|row| {
                row.iter()
                    .map(|d| d.eval_mod(&point, &field).expect("point covers live vars"))
                    .collect()
            })
            .collect();
        best = best.max(rank(matrix, &field));
    }
    Ok(best)
}
