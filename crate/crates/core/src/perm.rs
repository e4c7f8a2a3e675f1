//! The permutation attached to a quotient algebra, its reflection
//! factorisation, and the sign classification of diagram cells.
//!
//! Composition convention: in any product of permutations the rightmost
//! factor acts first, `(u v)(x) = u(v(x))`. This is the convention under
//! which the diagram crosses, multiplied in placement order, recover the
//! greedy column-maximum permutation.

use thiserror::Error;

use crate::diagram::Diagram;
use crate::roots::{RegularIdeal, Root};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("{0:?} is not a one-line permutation of 1..=n")]
    NotABijection(Vec<usize>),
}

/// A permutation of `1..=n` in one-line form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Permutation, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(PermError::NotABijection(images));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        assert!(a != b && (1..=n).contains(&a) && (1..=n).contains(&b));
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, t: usize) -> usize {
        self.images[t - 1]
    }

    /// `self ∘ rhs`: `rhs` acts first.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n());
        Permutation { images: (1..=self.n()).map(|x| self.apply(rhs.apply(x))).collect() }
    }

    /// Number of pairs `t < k` with `w(t) > w(k)`.
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for t in 0..v.len() {
            for k in t + 1..v.len() {
                if v[t] > v[k] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Coordinatewise image of a root: `w(i, j) = (w(i), w(j))`.
    pub fn apply_root(&self, r: Root) -> Root {
        Root::new(self.apply(r.row()), self.apply(r.col()))
    }

    /// Whether the image root is positive.
    pub fn maps_positive(&self, r: Root) -> bool {
        self.apply_root(r).is_positive()
    }
}

/// For a root `(k, t)`, the transposition of `k` and `t`. Acting on roots
/// it negates exactly its own root.
pub fn reflection(n: usize, r: Root) -> Permutation {
    Permutation::transposition(n, r.row(), r.col())
}

/// Greedy column-by-column maximum selection: `w(t)` is the largest index
/// `i` not used before with `(i, t)` alive. Always a bijection, because at
/// column `t` some unused `i ≤ t` remains and `(i, t)` with `i ≤ t` is
/// never in the ideal.
pub fn associated_permutation(ideal: &RegularIdeal) -> Permutation {
    let n = ideal.n();
    let mut used = vec![false; n + 1];
    let mut images = Vec::with_capacity(n);
    for t in 1..=n {
        let pick = (1..=n)
            .rev()
            .find(|&i| !used[i] && !(i > t && ideal.contains(Root::new(i, t))))
            .expect("column selection cannot run out of candidates");
        used[pick] = true;
        images.push(pick);
    }
    Permutation { images }
}

/// Product of the reflections of `word`, rightmost factor acting first.
pub fn reflection_product(n: usize, word: &[Root]) -> Permutation {
    partial_products(n, word).pop().expect("never empty")
}

/// All prefix products of the reflections of `word`, starting with the
/// identity; entry `i` is the product of the first `i` reflections.
pub fn partial_products(n: usize, word: &[Root]) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(Permutation::identity(n));
    for &r in word {
        let last = out.last().unwrap();
        out.push(last.compose(&reflection(n, r)));
    }
    out
}

/// Product of the cross reflections of the first `t` columns, in placement
/// order; `t = 0` gives the identity. Because crosses are placed in
/// descending precedence order this is a prefix product of the full word.
pub fn column_prefix_product(diagram: &Diagram, t: usize) -> Permutation {
    assert!(t <= diagram.n());
    let word: Vec<Root> =
        diagram.crosses().into_iter().take_while(|c| c.col() <= t).collect();
    reflection_product(diagram.n(), &word)
}

/// The three sign classes a diagram cell can fall into; plus and cross
/// cells share a class, the diagram itself is the only thing separating
/// them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymbolClass {
    Minus,
    Bullet,
    PlusOrCross,
}

/// Classifies cells by the signs of their images under the column prefix
/// products, without looking at the grid.
pub struct SignClassifier {
    prefixes: Vec<Permutation>,
}

impl SignClassifier {
    pub fn new(diagram: &Diagram) -> SignClassifier {
        let n = diagram.n();
        let crosses = diagram.crosses();
        let mut prefixes = Vec::with_capacity(n + 1);
        prefixes.push(Permutation::identity(n));
        let mut next = 0;
        for t in 1..=n {
            let mut cur = prefixes[t - 1].clone();
            while next < crosses.len() && crosses[next].col() == t {
                cur = cur.compose(&reflection(n, crosses[next]));
                next += 1;
            }
            prefixes.push(cur);
        }
        SignClassifier { prefixes }
    }

    /// The prefix product over the first `t` columns.
    pub fn prefix(&self, t: usize) -> &Permutation {
        &self.prefixes[t]
    }

    /// A cell `(b, t)` is a minus iff the prefix over `t - 1` columns sends
    /// it negative, a bullet iff the prefix over `t` columns keeps it
    /// positive, and a plus or cross otherwise.
    pub fn classify(&self, r: Root) -> SymbolClass {
        let t = r.col();
        let before = self.prefixes[t - 1].maps_positive(r);
        let after = self.prefixes[t].maps_positive(r);
        debug_assert!(
            before || !after,
            "sign trichotomy violated at {r}: negative before column {t}, positive after"
        );
        if !before {
            SymbolClass::Minus
        } else if after {
            SymbolClass::Bullet
        } else {
            SymbolClass::PlusOrCross
        }
    }
}

/// One-off convenience wrapper around [`SignClassifier`].
pub fn classify_by_signs(diagram: &Diagram, r: Root) -> SymbolClass {
    SignClassifier::new(diagram).classify(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RegularIdeal;

    fn r(row: usize, col: usize) -> Root {
        Root::new(row, col)
    }

    fn sample7() -> RegularIdeal {
        RegularIdeal::from_roots(7, &[r(5, 1), r(6, 1), r(7, 1), r(7, 2)]).unwrap()
    }

    #[test]
    fn greedy_permutation_for_sample7() {
        let w = associated_permutation(&sample7());
        assert_eq!(w.one_line(), &[4, 6, 7, 5, 3, 2, 1]);
        assert_eq!(w.inversions(), 17);
    }

    #[test]
    fn greedy_permutation_degenerate_cases() {
        assert_eq!(associated_permutation(&RegularIdeal::full(5)).one_line(), &[1, 2, 3, 4, 5]);
        assert_eq!(associated_permutation(&RegularIdeal::empty(3)).one_line(), &[3, 2, 1]);
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(6).inversions(), 0);
        assert_eq!(Permutation::from_one_line(vec![3, 2, 1]).unwrap().inversions(), 3);
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(vec![2, 2, 1]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![]).is_ok());
    }

    #[test]
    fn reflection_product_recovers_the_sample7_permutation() {
        let word = [r(4, 1), r(6, 2), r(7, 3), r(7, 4), r(5, 4)];
        let w = reflection_product(7, &word);
        assert_eq!(w.one_line(), &[4, 6, 7, 5, 3, 2, 1]);
    }

    #[test]
    fn reflection_product_edges() {
        assert_eq!(reflection_product(4, &[]), Permutation::identity(4));
        assert_eq!(reflection_product(4, &[r(2, 1)]).one_line(), &[2, 1, 3, 4]);
    }

    #[test]
    fn partial_products_for_sample7() {
        let word = [r(4, 1), r(6, 2), r(7, 3), r(7, 4), r(5, 4)];
        let ws = partial_products(7, &word);
        assert_eq!(ws.len(), 6);
        assert_eq!(ws[0], Permutation::identity(7));
        assert_eq!(ws[1].one_line(), &[4, 2, 3, 1, 5, 6, 7]);
        assert_eq!(ws[4].one_line(), &[4, 6, 7, 3, 5, 2, 1]);
        assert_eq!(ws[5], associated_permutation(&sample7()));
    }

    #[test]
    fn column_prefix_products_for_sample7() {
        let d = Diagram::build(&sample7());
        assert_eq!(column_prefix_product(&d, 0), Permutation::identity(7));
        assert_eq!(column_prefix_product(&d, 1).one_line(), &[4, 2, 3, 1, 5, 6, 7]);
        let full = associated_permutation(&sample7());
        assert_eq!(column_prefix_product(&d, 4), full);
        assert_eq!(column_prefix_product(&d, 7), full);
    }

    #[test]
    fn signs_of_root_images() {
        let id = Permutation::identity(7);
        assert!(id.maps_positive(r(5, 2)));
        let t14 = Permutation::transposition(7, 1, 4);
        assert!(!t14.maps_positive(r(4, 1)));
        // product of the first two sample7 reflections sends (4,2) to (1,6)
        let w2 = reflection_product(7, &[r(4, 1), r(6, 2)]);
        assert_eq!(w2.apply_root(r(4, 2)), r(1, 6));
        assert!(!w2.maps_positive(r(4, 2)));
    }

    #[test]
    fn sign_classification_on_sample7_cells() {
        let d = Diagram::build(&sample7());
        let cls = SignClassifier::new(&d);
        assert_eq!(cls.classify(r(4, 2)), SymbolClass::Minus);
        assert_eq!(cls.classify(r(7, 2)), SymbolClass::Bullet);
        assert_eq!(cls.classify(r(3, 2)), SymbolClass::PlusOrCross);
        assert_eq!(classify_by_signs(&d, r(4, 1)), SymbolClass::PlusOrCross);
    }
}
