//! Exact sparse multivariate polynomials over the coordinate variables
//! `y_(i,j)` and the distinguished variable `λ`, with symbolic matrices
//! and determinants.
//!
//! Coefficients are arbitrary-precision integers; every object built in
//! this crate stays integral. Monomials carry their factors sorted by
//! descending variable, and polynomials are kept in a canonical form with
//! no zero coefficients, so equality is structural and printing is
//! deterministic: terms in descending pure-lexicographic order with `λ`
//! above every coordinate variable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::modp::PrimeField;
use crate::roots::Root;

/// A polynomial variable: a coordinate `y_(i,j)` or `λ`. The variant order
/// puts `λ` above every coordinate; coordinates compare by `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    Coord(Root),
    Lambda,
}

impl Var {
    pub fn coord(row: usize, col: usize) -> Var {
        Var::Coord(Root::new(row, col))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Lambda => write!(f, "λ"),
            Var::Coord(r) if r.row() < 10 && r.col() < 10 => {
                write!(f, "y{}{}", r.row(), r.col())
            }
            Var::Coord(r) => write!(f, "y{}_{}", r.row(), r.col()),
        }
    }
}

/// A power product with factors sorted by descending variable, exponents
/// always positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut merged: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *merged.entry(v).or_insert(0) += e;
            }
        }
        Monomial { factors: merged.into_iter().rev().collect() }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn degree_of(&self, v: Var) -> u32 {
        self.factors.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial::from_powers(self.factors.iter().chain(rhs.factors.iter()).copied())
    }

    /// Componentwise division; `None` when some exponent would go negative.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = self.factors.clone();
        for &(v, e) in &rhs.factors {
            let slot = out.iter_mut().find(|(w, _)| *w == v)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|(_, e)| *e > 0);
        Some(Monomial { factors: out })
    }

    /// Splits off the power of `v`: returns its exponent and the rest.
    pub fn split_var(&self, v: Var) -> (u32, Monomial) {
        let e = self.degree_of(v);
        let rest = self.factors.iter().copied().filter(|(w, _)| *w != v).collect();
        (e, Monomial { factors: rest })
    }
}

impl Ord for Monomial {
    /// Pure lexicographic order: decided at the greatest variable where the
    /// exponents differ.
    fn cmp(&self, other: &Monomial) -> Ordering {
        let mut a = self.factors.iter();
        let mut b = other.factors.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    match va.cmp(&vb) {
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Less => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),
}

/// A sparse polynomial with exact integer coefficients. The zero polynomial
/// is the empty term map; no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> SparsePoly {
        SparsePoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> SparsePoly {
        let mut p = SparsePoly::zero();
        p.add_term(Monomial::unit(), c.into());
        p
    }

    pub fn var(v: Var) -> SparsePoly {
        SparsePoly::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> SparsePoly {
        let mut p = SparsePoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The greatest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: impl Into<BigInt>) -> SparsePoly {
        let c = c.into();
        let mut out = SparsePoly::zero();
        for (m, k) in self.terms() {
            out.add_term(m.clone(), k * &c);
        }
        out
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: Var) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in self.terms() {
            let (e, rest) = m.split_var(v);
            if e > 0 {
                let lowered = if e > 1 {
                    rest.mul(&Monomial::from_powers([(v, e - 1)]))
                } else {
                    rest
                };
                out.add_term(lowered, c * BigInt::from(e));
            }
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(v, _)| *v)).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.degree_of(v) > 0)
    }

    pub fn has_lambda(&self) -> bool {
        self.contains_var(Var::Lambda)
    }

    /// Coefficients of `λ^0, λ^1, …` as λ-free polynomials, trailing zero
    /// coefficients trimmed; the zero polynomial yields an empty list.
    pub fn lambda_coefficients(&self) -> Vec<SparsePoly> {
        let mut by_degree: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, c) in self.terms() {
            let (e, rest) = m.split_var(Var::Lambda);
            by_degree.entry(e).or_default().add_term(rest, c.clone());
        }
        let top = match by_degree.keys().next_back() {
            Some(&d) => d,
            None => return Vec::new(),
        };
        (0..=top).map(|d| by_degree.remove(&d).unwrap_or_default()).collect()
    }

    /// The nonzero λ-coefficient of maximal degree, with that degree.
    /// Returns degree 0 and the zero polynomial for the zero input.
    pub fn highest_lambda_coefficient(&self) -> (usize, SparsePoly) {
        let coeffs = self.lambda_coefficients();
        match coeffs.len() {
            0 => (0, SparsePoly::zero()),
            k => (k - 1, coeffs[k - 1].clone()),
        }
    }

    /// Value at a point of the prime field; every variable of the
    /// polynomial must be assigned.
    pub fn eval_mod(
        &self,
        assignment: &BTreeMap<Var, u64>,
        field: &PrimeField,
    ) -> Result<u64, EvalError> {
        let modulus = BigInt::from(field.modulus());
        let mut total = 0u64;
        for (m, c) in self.terms() {
            let reduced = ((c % &modulus) + &modulus) % &modulus;
            let mut acc = u64::try_from(reduced).expect("residue fits in u64");
            for &(v, e) in m.factors() {
                let x = *assignment.get(&v).ok_or(EvalError::MissingVariable(v))?;
                acc = field.mul(acc, field.pow(x, u64::from(e)));
            }
            total = field.add(total, acc);
        }
        Ok(total)
    }

    /// Exact division: `Some(q)` with `self == q * divisor`, or `None` when
    /// no such polynomial with integer coefficients exists.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quotient = SparsePoly::zero();
        let mut rest = self.clone();
        while let Some((rm, rc)) = rest.leading_term() {
            let m = rm.checked_div(&dm)?;
            if (rc % &dc) != BigInt::zero() {
                return None;
            }
            let c = rc / &dc;
            let t = SparsePoly::term(m, c);
            rest = rest.sub(&t.mul(divisor));
            quotient = quotient.add(&t);
        }
        Some(quotient)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// A dense matrix of polynomials; entries never set stay zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SparsePoly>,
}

impl SymbolicMatrix {
    pub fn zero(rows: usize, cols: usize) -> SymbolicMatrix {
        SymbolicMatrix { rows, cols, entries: vec![SparsePoly::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<SparsePoly>>) -> SymbolicMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        SymbolicMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn get(&self, r: usize, c: usize) -> &SparsePoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: SparsePoly) {
        self.entries[r * self.cols + c] = p;
    }

    /// Selects the given rows and columns, in the order given (zero-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SymbolicMatrix {
        let mut out = SymbolicMatrix::zero(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                out.set(ri, ci, self.get(r, c).clone());
            }
        }
        out
    }

    /// Exact determinant by expansion along rows, memoized on the set of
    /// remaining columns; zero entries are skipped so sparse minors stay
    /// cheap.
    pub fn determinant(&self) -> Result<SparsePoly, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let k = self.rows;
        assert!(k <= 63, "determinant limited to 63x63 column masks");
        if k == 0 {
            return Ok(SparsePoly::constant(1));
        }
        let mut memo: HashMap<u64, SparsePoly> = HashMap::new();
        Ok(self.det_rec(0, (1u64 << k) - 1, &mut memo))
    }

    fn det_rec(&self, row: usize, mask: u64, memo: &mut HashMap<u64, SparsePoly>) -> SparsePoly {
        if mask == 0 {
            return SparsePoly::constant(1);
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = SparsePoly::zero();
        let mut positive = true;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.det_rec(row + 1, mask & !(1 << c), memo);
                let contribution = entry.mul(&sub);
                acc = if positive { acc.add(&contribution) } else { acc.sub(&contribution) };
            }
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::DEFAULT_PRIME;
    use proptest::prelude::*;

    fn y(row: usize, col: usize) -> SparsePoly {
        SparsePoly::var(Var::coord(row, col))
    }

    fn lam() -> SparsePoly {
        SparsePoly::var(Var::Lambda)
    }

    #[test]
    fn addition_cancels_to_zero() {
        let p = y(2, 1).add(&y(2, 1).neg());
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn product_of_variables() {
        let p = y(2, 1).mul(&y(3, 2));
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.to_string(), "y32*y21");
    }

    #[test]
    fn binomial_square() {
        let s = y(3, 1).add(&y(4, 2));
        let sq = s.mul(&s);
        let expected = y(3, 1)
            .mul(&y(3, 1))
            .add(&y(3, 1).mul(&y(4, 2)).mul_scalar(2))
            .add(&y(4, 2).mul(&y(4, 2)));
        assert_eq!(sq, expected);
        assert_eq!(sq.to_string(), "y42^2 + 2*y42*y31 + y31^2");
    }

    #[test]
    fn partial_derivatives() {
        let p = y(4, 1).mul(&y(7, 4)).add(&y(3, 1).mul(&y(7, 3)));
        assert_eq!(p.partial_derivative(Var::coord(7, 4)), y(4, 1));
        let cube = y(2, 1).mul(&y(2, 1)).mul(&y(2, 1));
        assert_eq!(cube.partial_derivative(Var::coord(2, 1)), y(2, 1).mul(&y(2, 1)).mul_scalar(3));
        assert!(y(2, 1).partial_derivative(Var::coord(3, 1)).is_zero());
    }

    #[test]
    fn lambda_coefficient_extraction() {
        let sq = lam().mul(&lam());
        let coeffs = sq.lambda_coefficients();
        assert_eq!(coeffs.len(), 3);
        assert!(coeffs[0].is_zero() && coeffs[1].is_zero());
        assert_eq!(coeffs[2], SparsePoly::constant(1));

        assert_eq!(y(2, 1).lambda_coefficients(), vec![y(2, 1)]);
        assert!(SparsePoly::zero().lambda_coefficients().is_empty());

        let mixed = y(2, 1).add(&lam().mul(&y(3, 1)));
        assert_eq!(mixed.highest_lambda_coefficient(), (1, y(3, 1)));
    }

    #[test]
    fn evaluation_mod_small_primes() {
        let f = PrimeField::new(101).unwrap();
        let mut point = BTreeMap::new();
        point.insert(Var::coord(2, 1), 5u64);
        assert_eq!(y(2, 1).eval_mod(&point, &f), Ok(5));

        let f7 = PrimeField::new(7).unwrap();
        let mut point = BTreeMap::new();
        point.insert(Var::coord(2, 1), 3u64);
        point.insert(Var::coord(3, 2), 4u64);
        let p = y(2, 1).mul(&y(3, 2)).add(&SparsePoly::constant(1));
        assert_eq!(p.eval_mod(&point, &f7), Ok(6));

        assert_eq!(SparsePoly::zero().eval_mod(&BTreeMap::new(), &f7), Ok(0));
        assert_eq!(
            y(2, 1).eval_mod(&BTreeMap::new(), &f7),
            Err(EvalError::MissingVariable(Var::coord(2, 1)))
        );
    }

    #[test]
    fn negative_coefficients_reduce_correctly() {
        let f = PrimeField::new(7).unwrap();
        let p = SparsePoly::constant(-1);
        assert_eq!(p.eval_mod(&BTreeMap::new(), &f), Ok(6));
    }

    #[test]
    fn single_entry_determinants() {
        let m = SymbolicMatrix::from_rows(vec![vec![y(2, 1)]]);
        assert_eq!(m.determinant().unwrap(), y(2, 1));

        let m = SymbolicMatrix::from_rows(vec![
            vec![lam().neg(), SparsePoly::zero()],
            vec![y(2, 1), lam().neg()],
        ]);
        assert_eq!(m.determinant().unwrap(), lam().mul(&lam()));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = SymbolicMatrix::zero(2, 3);
        assert_eq!(m.determinant(), Err(MatrixError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn exact_division() {
        let p = y(6, 2).mul(&y(7, 4).mul(&y(4, 1)).add(&y(7, 3).mul(&y(3, 1)))).neg();
        let q = p.div_exact(&y(6, 2)).unwrap();
        assert_eq!(q, y(7, 4).mul(&y(4, 1)).add(&y(7, 3).mul(&y(3, 1))).neg());
        assert!(p.div_exact(&y(4, 1)).is_none());
        assert!(y(2, 1).div_exact(&SparsePoly::constant(2)).is_none());
        assert_eq!(
            y(2, 1).mul_scalar(4).div_exact(&SparsePoly::constant(2)),
            Some(y(2, 1).mul_scalar(2))
        );
        assert_eq!(SparsePoly::zero().div_exact(&y(2, 1)), Some(SparsePoly::zero()));
        assert!(y(2, 1).div_exact(&SparsePoly::zero()).is_none());
    }

    #[test]
    fn canonical_display() {
        assert_eq!(y(4, 1).to_string(), "y41");
        assert_eq!(y(4, 1).neg().to_string(), "-y41");
        let p = y(7, 4).mul(&y(4, 1)).add(&y(7, 3).mul(&y(3, 1)));
        assert_eq!(p.to_string(), "y74*y41 + y73*y31");
        assert_eq!(lam().to_string(), "λ");
        assert_eq!(SparsePoly::constant(-7).to_string(), "-7");
    }

    /// Independent determinant oracle: the full signed sum over all
    /// permutations.
    fn leibniz_determinant(m: &SymbolicMatrix) -> SparsePoly {
        fn go(
            m: &SymbolicMatrix,
            row: usize,
            used: &mut Vec<bool>,
            parity_even: bool,
            acc: &SparsePoly,
            total: &mut SparsePoly,
        ) {
            let k = m.rows();
            if row == k {
                *total = if parity_even { total.add(acc) } else { total.sub(acc) };
                return;
            }
            for c in 0..k {
                if used[c] {
                    continue;
                }
                used[c] = true;
                // parity flips by the number of unused columns skipped
                let skipped = (0..c).filter(|&d| !used[d]).count();
                let next_parity = parity_even == (skipped % 2 == 0);
                let next_acc = acc.mul(m.get(row, c));
                go(m, row + 1, used, next_parity, &next_acc, total);
                used[c] = false;
            }
        }
        let mut total = SparsePoly::zero();
        let mut used = vec![false; m.rows()];
        go(m, 0, &mut used, true, &SparsePoly::constant(1), &mut total);
        total
    }

    fn small_poly() -> impl Strategy<Value = SparsePoly> {
        let var = prop_oneof![
            Just(Var::coord(2, 1)),
            Just(Var::coord(3, 1)),
            Just(Var::coord(3, 2)),
            Just(Var::Lambda),
        ];
        let term = (var, 1u32..3, -4i64..5).prop_map(|(v, e, c)| {
            SparsePoly::term(Monomial::from_powers([(v, e)]), c)
        });
        proptest::collection::vec(term, 0..4)
            .prop_map(|ts| ts.iter().fold(SparsePoly::zero(), |acc, t| acc.add(t)))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn determinant_matches_leibniz(entries in proptest::collection::vec(small_poly(), 9)) {
            let m = SymbolicMatrix::from_rows(vec![
                entries[0..3].to_vec(),
                entries[3..6].to_vec(),
                entries[6..9].to_vec(),
            ]);
            prop_assert_eq!(m.determinant().unwrap(), leibniz_determinant(&m));
        }

        #[test]
        fn determinant_is_alternating(entries in proptest::collection::vec(small_poly(), 9)) {
            let m = SymbolicMatrix::from_rows(vec![
                entries[0..3].to_vec(),
                entries[3..6].to_vec(),
                entries[6..9].to_vec(),
            ]);
            let swapped = SymbolicMatrix::from_rows(vec![
                entries[3..6].to_vec(),
                entries[0..3].to_vec(),
                entries[6..9].to_vec(),
            ]);
            prop_assert_eq!(swapped.determinant().unwrap(), m.determinant().unwrap().neg());
        }

        #[test]
        fn determinant_commutes_with_evaluation(
            entries in proptest::collection::vec(small_poly(), 9),
            vals in proptest::collection::vec(0u64..DEFAULT_PRIME, 4),
        ) {
            let f = PrimeField::new(DEFAULT_PRIME).unwrap();
            let m = SymbolicMatrix::from_rows(vec![
                entries[0..3].to_vec(),
                entries[3..6].to_vec(),
                entries[6..9].to_vec(),
            ]);
            let mut point = BTreeMap::new();
            point.insert(Var::coord(2, 1), vals[0]);
            point.insert(Var::coord(3, 1), vals[1]);
            point.insert(Var::coord(3, 2), vals[2]);
            point.insert(Var::Lambda, vals[3]);

            let symbolic = m.determinant().unwrap().eval_mod(&point, &f).unwrap();

            // numeric modular determinant by elimination, written separately
            let mut num = [[0u64; 3]; 3];
            for r in 0..3 {
                for c in 0..3 {
                    num[r][c] = m.get(r, c).eval_mod(&point, &f).unwrap();
                }
            }
            let numeric = numeric_det_3x3(&num, &f);
            prop_assert_eq!(symbolic, numeric);
        }
    }

    fn numeric_det_3x3(a: &[[u64; 3]; 3], f: &PrimeField) -> u64 {
        let m = |x: u64, y: u64| f.mul(x, y);
        let term = |i: usize, j: usize, k: usize| m(a[0][i], m(a[1][j], a[2][k]));
        let pos = f.add(f.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
        let neg = f.add(f.add(term(2, 1, 0), term(1, 0, 2)), term(0, 2, 1));
        f.sub(pos, neg)
    }
}
