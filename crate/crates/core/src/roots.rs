//! Positive roots of the strictly lower-triangular matrix algebra, the
//! column-major precedence order on them, and regular ideals.
//!
//! A regular ideal is a set `M` of positive roots closed under root
//! addition whenever one summand already lies in `M`. Such sets are
//! exactly the "staircases": per-column row thresholds that never
//! decrease from left to right. The threshold form gives O(n) storage,
//! O(1) membership and a direct exhaustive enumeration (the ideals for
//! size `n` are counted by the n-th Catalan number).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// An ordered pair of distinct 1-based indices; positive when `row > col`,
/// i.e. a strictly lower-triangular matrix position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root {
    row: usize,
    col: usize,
}

impl Root {
    /// Panics if `row == col`; a root always has distinct indices.
    pub fn new(row: usize, col: usize) -> Root {
        assert!(row != col, "a root needs distinct indices, got ({row}, {row})");
        Root { row, col }
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }

    pub fn is_positive(&self) -> bool {
        self.row > self.col
    }

    pub fn negated(&self) -> Root {
        Root { row: self.col, col: self.row }
    }

    pub fn in_range(&self, n: usize) -> bool {
        (1..=n).contains(&self.row) && (1..=n).contains(&self.col)
    }

    /// Partial sum `(i, j) + (j, m) = (i, m)`, defined when the inner
    /// indices agree; `None` otherwise.
    pub fn checked_sum(self, rhs: Root) -> Option<Root> {
        (self.col == rhs.row && self.row != rhs.col)
            .then_some(Root { row: self.row, col: rhs.col })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// The precedence order on positive roots: smaller column first, and within
/// a column the larger row dominates. `(n, 1)` is the greatest positive
/// root, `(n, n-1)` the least. Returns `Greater` when `a` dominates `b`.
pub fn precedence(a: Root, b: Root) -> Ordering {
    b.col.cmp(&a.col).then(a.row.cmp(&b.row))
}

/// All positive roots for matrix size `n`, in descending precedence order.
pub fn positive_roots_desc(n: usize) -> impl Iterator<Item = Root> {
    (1..n).flat_map(move |t| (t + 1..=n).rev().map(move |b| Root::new(b, t)))
}

/// All positive roots for matrix size `n`, sorted by `(row, col)`.
pub fn positive_roots_rowmajor(n: usize) -> impl Iterator<Item = Root> {
    (2..=n).flat_map(move |i| (1..i).map(move |j| Root::new(i, j)))
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("matrix size must be at least 1")]
    ZeroSize,
    #[error("{root} is not a positive root")]
    NotPositive { root: Root },
    #[error("root {root} is out of range for n = {n}")]
    OutOfRange { root: Root, n: usize },
    #[error("not closed under root addition: {left} + {right} = {sum} is missing")]
    NotClosed { left: Root, right: Root, sum: Root },
    #[error("invalid threshold sequence {thresholds:?} for n = {n}")]
    BadThresholds { thresholds: Vec<usize>, n: usize },
}

/// A set of positive roots closed under root addition with one summand in
/// the set, stored as non-decreasing per-column row thresholds.
///
/// `thresholds[j-1]` is the least dead row of column `j`, with `n + 1`
/// encoding an empty column; membership is `(i, j) ∈ M ⟺ i ≥ c_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RegularIdeal {
    n: usize,
    thresholds: Vec<usize>,
}

impl RegularIdeal {
    /// The empty ideal (nothing is killed).
    pub fn empty(n: usize) -> RegularIdeal {
        assert!(n >= 1);
        RegularIdeal { n, thresholds: vec![n + 1; n - 1] }
    }

    /// The full ideal (every positive root is killed).
    pub fn full(n: usize) -> RegularIdeal {
        assert!(n >= 1);
        RegularIdeal { n, thresholds: (1..n).map(|j| j + 1).collect() }
    }

    /// Strict constructor: the given roots must already form a closed set.
    /// The first missing sum is reported, never silently added.
    pub fn from_roots(n: usize, roots: &[Root]) -> Result<RegularIdeal, IdealError> {
        let set = check_roots(n, roots)?;
        if let Some((left, right, sum)) = find_closure_violation(n, &set) {
            return Err(IdealError::NotClosed { left, right, sum });
        }
        Ok(Self::from_root_set(n, &set))
    }

    /// The smallest regular ideal containing `seed`.
    pub fn closure_of(n: usize, seed: &[Root]) -> Result<RegularIdeal, IdealError> {
        let set = check_roots(n, seed)?;
        let mut thresholds = Vec::with_capacity(n.saturating_sub(1));
        for col in 1..n {
            let min_row = set
                .iter()
                .filter(|r| r.col >= col)
                .map(|r| r.row)
                .min();
            thresholds.push(match min_row {
                Some(m) => m.max(col + 1),
                None => n + 1,
            });
        }
        Ok(RegularIdeal { n, thresholds })
    }

    pub fn from_thresholds(n: usize, thresholds: Vec<usize>) -> Result<RegularIdeal, IdealError> {
        if n == 0 {
            return Err(IdealError::ZeroSize);
        }
        let ok = thresholds.len() == n - 1
            && thresholds
                .iter()
                .enumerate()
                .all(|(idx, &c)| (idx + 2..=n + 1).contains(&c))
            && thresholds.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return Err(IdealError::BadThresholds { thresholds, n });
        }
        Ok(RegularIdeal { n, thresholds })
    }

    fn from_root_set(n: usize, set: &BTreeSet<Root>) -> RegularIdeal {
        let thresholds = (1..n)
            .map(|col| {
                set.iter()
                    .filter(|r| r.col == col)
                    .map(|r| r.row)
                    .min()
                    .unwrap_or(n + 1)
            })
            .collect::<Vec<_>>();
        let ideal = RegularIdeal { n, thresholds };
        debug_assert_eq!(ideal.dead_count(), set.len());
        ideal
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn thresholds(&self) -> &[usize] {
        &self.thresholds
    }

    pub fn contains(&self, r: Root) -> bool {
        r.is_positive() && r.in_range(self.n) && r.row >= self.thresholds[r.col - 1]
    }

    /// The killed roots, sorted by `(row, col)`.
    pub fn dead_roots(&self) -> Vec<Root> {
        positive_roots_rowmajor(self.n).filter(|&r| self.contains(r)).collect()
    }

    /// The surviving roots, sorted by `(row, col)`.
    pub fn live_roots(&self) -> Vec<Root> {
        positive_roots_rowmajor(self.n).filter(|&r| !self.contains(r)).collect()
    }

    /// The surviving roots in descending precedence order.
    pub fn live_roots_desc(&self) -> Vec<Root> {
        positive_roots_desc(self.n).filter(|&r| !self.contains(r)).collect()
    }

    pub fn dead_count(&self) -> usize {
        self.thresholds.iter().map(|&c| self.n + 1 - c).sum()
    }

    /// Dimension of the quotient algebra: the number of surviving roots.
    pub fn dim(&self) -> usize {
        self.n * (self.n - 1) / 2 - self.dead_count()
    }

    /// The largest row `c` with `(c, t)` alive, or `t` itself when the whole
    /// column is killed (also for `t = n`, which has no roots below it).
    pub fn last_live_row(&self, t: usize) -> usize {
        assert!((1..=self.n).contains(&t));
        if t == self.n {
            t
        } else {
            self.thresholds[t - 1] - 1
        }
    }
}

fn check_roots(n: usize, roots: &[Root]) -> Result<BTreeSet<Root>, IdealError> {
    if n == 0 {
        return Err(IdealError::ZeroSize);
    }
    for &r in roots {
        if !r.is_positive() {
            return Err(IdealError::NotPositive { root: r });
        }
        if !r.in_range(n) {
            return Err(IdealError::OutOfRange { root: r, n });
        }
    }
    Ok(roots.iter().copied().collect())
}

/// First sum `(left, right)` with one summand in `set` whose result is
/// missing, scanning members by `(row, col)` and extensions below before
/// extensions to the left.
fn find_closure_violation(n: usize, set: &BTreeSet<Root>) -> Option<(Root, Root, Root)> {
    for &m in set {
        for k in m.row + 1..=n {
            let sum = Root::new(k, m.col);
            if !set.contains(&sum) {
                return Some((Root::new(k, m.row), m, sum));
            }
        }
        for l in 1..m.col {
            let sum = Root::new(m.row, l);
            if !set.contains(&sum) {
                return Some((m, Root::new(m.col, l), sum));
            }
        }
    }
    None
}

/// Whether `roots` is closed under root addition with one summand inside.
pub fn is_regular(n: usize, roots: &[Root]) -> Result<bool, IdealError> {
    let set = check_roots(n, roots)?;
    Ok(find_closure_violation(n, &set).is_none())
}

/// Every regular ideal for size `n`, exactly once, in ascending
/// lexicographic order of the threshold sequences.
pub fn enumerate_regular_ideals(n: usize) -> RegularIdeals {
    assert!(n >= 1);
    RegularIdeals { n, next: Some((0..n.saturating_sub(1)).map(|idx| idx + 2).collect()) }
}

pub struct RegularIdeals {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for RegularIdeals {
    type Item = RegularIdeal;

    fn next(&mut self) -> Option<RegularIdeal> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if advance(self.n, &mut succ) {
            self.next = Some(succ);
        }
        Some(RegularIdeal { n: self.n, thresholds: cur })
    }
}

fn advance(n: usize, v: &mut [usize]) -> bool {
    for idx in (0..v.len()).rev() {
        if v[idx] < n + 1 {
            v[idx] += 1;
            for k in idx + 1..v.len() {
                v[k] = (k + 2).max(v[k - 1]);
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(row: usize, col: usize) -> Root {
        Root::new(row, col)
    }

    #[test]
    fn root_sum_follows_inner_index() {
        assert_eq!(r(7, 4).checked_sum(r(4, 1)), Some(r(7, 1)));
        assert_eq!(r(3, 2).checked_sum(r(2, 1)), Some(r(3, 1)));
        assert_eq!(r(5, 2).checked_sum(r(4, 1)), None);
    }

    #[test]
    fn precedence_sorts_column_major_with_rows_descending() {
        let sorted: Vec<Root> = positive_roots_desc(4).collect();
        assert_eq!(
            sorted,
            vec![r(4, 1), r(3, 1), r(2, 1), r(4, 2), r(3, 2), r(4, 3)]
        );
        assert_eq!(precedence(r(4, 1), r(4, 3)), Ordering::Greater);
        assert_eq!(precedence(r(2, 1), r(4, 2)), Ordering::Greater);
        assert_eq!(precedence(r(3, 2), r(3, 2)), Ordering::Equal);
    }

    #[test]
    fn sample7_ideal_is_regular() {
        let roots = [r(5, 1), r(6, 1), r(7, 1), r(7, 2)];
        assert_eq!(is_regular(7, &roots), Ok(true));
        let ideal = RegularIdeal::from_roots(7, &roots).unwrap();
        assert_eq!(ideal.thresholds(), &[5, 7, 8, 8, 8, 8]);
        assert_eq!(ideal.dim(), 17);
        assert_eq!(ideal.dead_roots(), roots);
    }

    #[test]
    fn lone_inner_root_is_not_regular() {
        assert_eq!(is_regular(7, &[r(6, 2)]), Ok(false));
        let err = RegularIdeal::from_roots(7, &[r(6, 2)]).unwrap_err();
        assert_eq!(
            err,
            IdealError::NotClosed { left: r(7, 6), right: r(6, 2), sum: r(7, 2) }
        );
        assert!(err.to_string().contains("(7, 2)"));
    }

    #[test]
    fn empty_set_is_regular() {
        assert_eq!(is_regular(5, &[]), Ok(true));
        assert_eq!(RegularIdeal::empty(5).dead_count(), 0);
    }

    #[test]
    fn input_validation_rejects_bad_roots() {
        assert_eq!(
            is_regular(4, &[r(2, 3)]),
            Err(IdealError::NotPositive { root: r(2, 3) })
        );
        assert_eq!(
            is_regular(4, &[r(5, 1)]),
            Err(IdealError::OutOfRange { root: r(5, 1), n: 4 })
        );
    }

    #[test]
    fn closure_fills_the_column_below() {
        let ideal = RegularIdeal::closure_of(7, &[r(5, 1)]).unwrap();
        assert_eq!(ideal.dead_roots(), vec![r(5, 1), r(6, 1), r(7, 1)]);
    }

    #[test]
    fn closure_of_empty_is_empty() {
        let ideal = RegularIdeal::closure_of(6, &[]).unwrap();
        assert_eq!(ideal.dead_count(), 0);
    }

    #[test]
    fn closure_fills_the_rectangle() {
        let ideal = RegularIdeal::closure_of(5, &[r(4, 3)]).unwrap();
        assert_eq!(
            ideal.dead_roots(),
            vec![r(4, 1), r(4, 2), r(4, 3), r(5, 1), r(5, 2), r(5, 3)]
        );
    }

    /// Independent oracle: check the closure condition by enumerating every
    /// decomposition directly.
    fn brute_force_is_regular(n: usize, set: &BTreeSet<Root>) -> bool {
        let all: Vec<Root> = positive_roots_rowmajor(n).collect();
        for &a in &all {
            for &b in &all {
                if let Some(sum) = a.checked_sum(b) {
                    if (set.contains(&a) || set.contains(&b)) && !set.contains(&sum) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn brute_force_regular_subsets(n: usize) -> Vec<BTreeSet<Root>> {
        let all: Vec<Root> = positive_roots_rowmajor(n).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << all.len()) {
            let set: BTreeSet<Root> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &r)| r)
                .collect();
            if brute_force_is_regular(n, &set) {
                out.push(set);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force_for_small_sizes() {
        for n in 1..=5 {
            let brute = brute_force_regular_subsets(n);
            let enumerated: Vec<BTreeSet<Root>> = enumerate_regular_ideals(n)
                .map(|ideal| ideal.dead_roots().into_iter().collect())
                .collect();
            assert_eq!(enumerated.len(), brute.len(), "n = {n}");
            let as_set: BTreeSet<_> = enumerated.iter().cloned().collect();
            assert_eq!(as_set.len(), enumerated.len(), "duplicate ideal at n = {n}");
            for set in &brute {
                assert!(as_set.contains(set), "missing {set:?} at n = {n}");
            }
        }
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        let expected = [1usize, 2, 5, 14, 42, 132, 429];
        for (n, &count) in (1..=7).zip(expected.iter()) {
            assert_eq!(enumerate_regular_ideals(n).count(), count, "n = {n}");
        }
    }

    #[test]
    fn n3_regular_ideals_are_the_known_five() {
        let sets: Vec<Vec<Root>> =
            enumerate_regular_ideals(3).map(|i| i.dead_roots()).collect();
        let expected: Vec<Vec<Root>> = vec![
            vec![r(2, 1), r(3, 1), r(3, 2)],
            vec![r(2, 1), r(3, 1)],
            vec![r(3, 1), r(3, 2)],
            vec![r(3, 1)],
            vec![],
        ];
        for e in &expected {
            assert!(sets.contains(e), "missing {e:?}");
        }
        assert_eq!(sets.len(), 5);
    }

    #[test]
    fn thresholds_validation() {
        assert!(RegularIdeal::from_thresholds(7, vec![5, 7, 8, 8, 8, 8]).is_ok());
        assert!(RegularIdeal::from_thresholds(7, vec![7, 5, 8, 8, 8, 8]).is_err());
        assert!(RegularIdeal::from_thresholds(7, vec![1, 7, 8, 8, 8, 8]).is_err());
        assert!(RegularIdeal::from_thresholds(7, vec![5, 7, 8, 8, 8]).is_err());
        assert!(RegularIdeal::from_thresholds(1, vec![]).is_ok());
    }

    #[test]
    fn last_live_row_handles_dead_columns() {
        let ideal = RegularIdeal::full(4);
        for t in 1..=4 {
            assert_eq!(ideal.last_live_row(t), t);
        }
        let open = RegularIdeal::empty(4);
        assert_eq!(open.last_live_row(1), 4);
        assert_eq!(open.last_live_row(4), 4);
    }

    fn subset_strategy(n: usize) -> impl Strategy<Value = Vec<Root>> {
        let all: Vec<Root> = positive_roots_rowmajor(n).collect();
        let len = all.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            all.iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(&r, _)| r)
                .collect()
        })
    }

    proptest! {
        /// A subset is regular exactly when it equals the staircase rebuilt
        /// from its per-column minima and those minima never decrease.
        #[test]
        fn regular_iff_staircase(roots in subset_strategy(6)) {
            let n = 6;
            let set: BTreeSet<Root> = roots.iter().copied().collect();
            let minima: Vec<usize> = (1..n)
                .map(|col| {
                    set.iter().filter(|r| r.col() == col).map(|r| r.row()).min().unwrap_or(n + 1)
                })
                .collect();
            let monotone = minima.windows(2).all(|w| w[0] <= w[1]);
            let staircase: BTreeSet<Root> = positive_roots_rowmajor(n)
                .filter(|r| r.row() >= minima[r.col() - 1])
                .collect();
            let regular = is_regular(n, &roots).unwrap();
            prop_assert_eq!(regular, monotone && staircase == set);
        }

        /// Closure is extensive, idempotent, and fixes exactly the regular sets.
        #[test]
        fn closure_is_a_closure_operator(roots in subset_strategy(6)) {
            let n = 6;
            let closed = RegularIdeal::closure_of(n, &roots).unwrap();
            for &r in &roots {
                prop_assert!(closed.contains(r));
            }
            let again = RegularIdeal::closure_of(n, &closed.dead_roots()).unwrap();
            prop_assert_eq!(&again, &closed);
            let set: BTreeSet<Root> = roots.iter().copied().collect();
            let fixed = closed.dead_roots().into_iter().collect::<BTreeSet<_>>() == set;
            prop_assert_eq!(fixed, is_regular(n, &roots).unwrap());
        }

        /// Closure is monotone with respect to inclusion.
        #[test]
        fn closure_is_monotone(roots in subset_strategy(6), drop_mask in proptest::collection::vec(any::<bool>(), 15)) {
            let n = 6;
            let smaller: Vec<Root> = roots
                .iter()
                .zip(drop_mask)
                .filter(|(_, keep)| *keep)
                .map(|(&r, _)| r)
                .collect();
            let big = RegularIdeal::closure_of(n, &roots).unwrap();
            let small = RegularIdeal::closure_of(n, &smaller).unwrap();
            for r in small.dead_roots() {
                prop_assert!(big.contains(r));
            }
        }
    }
}
