//! Latin squares as finite quasigroups and loops.
//!
//! A latin square of order `d` is a `d×d` array over symbols `0..d` in which
//! every row and every column is a permutation. Read as a multiplication table
//! `table[a][b] = a*b` it is the Cayley table of a quasigroup: left and right
//! division are total and unique. A loop is a quasigroup with a two-sided unit;
//! every latin square is isotopic to one.

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Scalar};

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::BadPermutation);
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }
}

/// An isotopy: independent row, column and symbol permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopy {
    pub row_perm: Permutation,
    pub col_perm: Permutation,
    pub sym_perm: Permutation,
}

impl Isotopy {
    pub fn identity(d: usize) -> Self {
        Isotopy {
            row_perm: Permutation::identity(d),
            col_perm: Permutation::identity(d),
            sym_perm: Permutation::identity(d),
        }
    }

    pub fn inverse(&self) -> Isotopy {
        Isotopy {
            row_perm: self.row_perm.inverse(),
            col_perm: self.col_perm.inverse(),
            sym_perm: self.sym_perm.inverse(),
        }
    }
}

/// A finite abelian group `Z_{n₁} × … × Z_{n_k}`.
///
/// Elements are encoded in mixed radix: `(x₁,…,x_k) ↦ Σ xᵢ·Π_{l>i} n_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<usize>,
}

impl GroupSpec {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::BadGroupSpec);
        }
        Ok(GroupSpec { factors })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    /// Mixed-radix decomposition of an element index.
    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut digits = vec![0; self.factors.len()];
        for (i, &n) in self.factors.iter().enumerate().rev() {
            digits[i] = x % n;
            x /= n;
        }
        digits
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        let mut x = 0;
        for (&digit, &n) in digits.iter().zip(self.factors.iter()) {
            x = x * n + digit;
        }
        x
    }

    /// Componentwise addition modulo the factors.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = da
            .iter()
            .zip(db.iter())
            .zip(self.factors.iter())
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        self.encode(&sum)
    }

    /// Group inverse of an element index.
    pub fn negate(&self, a: usize) -> usize {
        let neg: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(self.factors.iter())
            .map(|(&x, &n)| (n - x) % n)
            .collect();
        self.encode(&neg)
    }

    /// The inversion map `g ↦ g⁻¹` as a permutation of element indices.
    pub fn inversion_permutation(&self) -> Permutation {
        Permutation((0..self.order()).map(|x| self.negate(x)).collect())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses specs like `Z6`, `Z2xZ3`, `Z2xZ2xZ2` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| Error::ParseGroupSpec(s.into()))?;
            let n: usize = digits
                .parse()
                .map_err(|_| Error::ParseGroupSpec(s.into()))?;
            factors.push(n);
        }
        GroupSpec::new(factors).map_err(|_| Error::ParseGroupSpec(s.into()))
    }
}

/// A validated latin square; `table[a][b] = a*b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl LatinSquare {
    /// Validates a candidate table: square, symbols in range, and no duplicate
    /// in any row or column. The error names the offending line.
    pub fn validate(table: Vec<Vec<usize>>) -> Result<Self> {
        let d = table.len();
        if d == 0 || table.iter().any(|row| row.len() != d) {
            return Err(Error::BadTable);
        }
        for (r, row) in table.iter().enumerate() {
            for (c, &s) in row.iter().enumerate() {
                if s >= d {
                    return Err(Error::SymbolOutOfRange {
                        row: r,
                        col: c,
                        symbol: s,
                    });
                }
            }
        }
        for (r, row) in table.iter().enumerate() {
            let mut seen = vec![false; d];
            for &s in row {
                if seen[s] {
                    return Err(Error::DuplicateInRow { row: r, symbol: s });
                }
                seen[s] = true;
            }
        }
        for c in 0..d {
            let mut seen = vec![false; d];
            for row in &table {
                let s = row[c];
                if seen[s] {
                    return Err(Error::DuplicateInColumn { col: c, symbol: s });
                }
                seen[s] = true;
            }
        }
        Ok(LatinSquare { order: d, table })
    }

    /// Cayley table of a finite abelian group under the mixed-radix encoding.
    /// Always associative and unital at 0.
    pub fn cayley_table(g: &GroupSpec) -> LatinSquare {
        let d = g.order();
        let table = (0..d)
            .map(|a| (0..d).map(|b| g.add(a, b)).collect())
            .collect();
        LatinSquare { order: d, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// The product `a*b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Left division: the unique `b` with `a*b = c`.
    pub fn left_divide(&self, a: usize, c: usize) -> usize {
        self.table[a]
            .iter()
            .position(|&s| s == c)
            .expect("latin row")
    }

    /// Right division: the unique `a` with `a*b = c`.
    pub fn right_divide(&self, c: usize, b: usize) -> usize {
        (0..self.order)
            .find(|&a| self.table[a][b] == c)
            .expect("latin column")
    }

    /// Brute-force associativity over all `d³` triples.
    pub fn is_associative(&self) -> bool {
        let d = self.order;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff row 0 and column 0 are both the identity, i.e. 0 is a
    /// two-sided unit.
    pub fn is_loop_at_zero(&self) -> bool {
        (0..self.order).all(|j| self.table[0][j] == j && self.table[j][0] == j)
    }

    /// Applies an isotopy: `L'[r][c] = sym(L[row⁻¹(r)][col⁻¹(c)])`.
    ///
    /// The latin property is preserved for every isotopy.
    pub fn isotope(&self, iso: &Isotopy) -> Result<LatinSquare> {
        let d = self.order;
        if iso.row_perm.len() != d || iso.col_perm.len() != d || iso.sym_perm.len() != d {
            return Err(Error::OrderMismatch {
                left: d,
                right: iso.row_perm.len(),
            });
        }
        let row_inv = iso.row_perm.inverse();
        let col_inv = iso.col_perm.inverse();
        let table = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        iso.sym_perm
                            .apply(self.table[row_inv.apply(r)][col_inv.apply(c)])
                    })
                    .collect()
            })
            .collect();
        // Isotopies preserve the latin property, so this cannot fail.
        LatinSquare::validate(table)
    }

    /// Canonical loop isotope: permute columns so row 0 becomes the identity,
    /// then permute rows so column 0 becomes the identity. No symbol
    /// permutation is needed, and row 0 stays fixed by the second step.
    ///
    /// Returns the loop together with the isotopy that maps `self` onto it.
    pub fn normalize_to_loop(&self) -> (LatinSquare, Isotopy) {
        let d = self.order;
        let col_perm = Permutation::new(self.table[0].clone()).expect("latin row");
        let col_inv = col_perm.inverse();
        let after_cols: Vec<Vec<usize>> = (0..d)
            .map(|r| (0..d).map(|c| self.table[r][col_inv.apply(c)]).collect())
            .collect();
        let row_perm =
            Permutation::new(after_cols.iter().map(|row| row[0]).collect()).expect("latin column");
        let row_inv = row_perm.inverse();
        let table: Vec<Vec<usize>> = (0..d)
            .map(|r| after_cols[row_inv.apply(r)].clone())
            .collect();
        let iso = Isotopy {
            row_perm,
            col_perm,
            sym_perm: Permutation::identity(d),
        };
        let looped = LatinSquare::validate(table).expect("isotope of latin square");
        (looped, iso)
    }

    /// Permutation matrix for shift index `j`, acting on basis columns by
    /// `e_i ↦ e_{table[i][j]}`. Always unitary: column `j` of the table is a
    /// permutation.
    pub fn row_permutation_matrix(&self, j: usize) -> ComplexMatrix {
        let d = self.order;
        ComplexMatrix::from_fn(d, d, |r, c| {
            if r == self.table[c][j] {
                Complex::new(1.0, 0.0)
            } else {
                Scalar::zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6;
    use crate::linalg::Tolerance;

    fn z2() -> LatinSquare {
        LatinSquare::cayley_table(&GroupSpec::cyclic(2).unwrap())
    }

    #[test]
    fn validate_accepts_the_order6_loop() {
        assert_eq!(d6::latin_square().order(), 6);
    }

    #[test]
    fn validate_accepts_z2() {
        let ls = LatinSquare::validate(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(ls, z2());
    }

    #[test]
    fn validate_rejects_constant_column() {
        assert_eq!(
            LatinSquare::validate(vec![vec![0, 1], vec![0, 1]]),
            Err(Error::DuplicateInColumn { col: 0, symbol: 0 })
        );
    }

    #[test]
    fn validate_rejects_row_duplicate() {
        assert_eq!(
            LatinSquare::validate(vec![vec![0, 0], vec![1, 1]]),
            Err(Error::DuplicateInRow { row: 0, symbol: 0 })
        );
    }

    #[test]
    fn division_round_trips() {
        let ls = z2();
        assert_eq!(ls.left_divide(1, 0), 1);
        assert_eq!(ls.right_divide(0, 1), 1);
        let d6 = d6::latin_square();
        // Row b holds symbol e in column c.
        assert_eq!(d6.left_divide(1, 4), 2);
        // Column c holds symbol e in row b.
        assert_eq!(d6.right_divide(4, 2), 1);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(d6.left_divide(a, d6.mul(a, b)), b);
                assert_eq!(d6.right_divide(d6.mul(a, b), b), a);
            }
        }
    }

    #[test]
    fn associativity() {
        assert!(LatinSquare::cayley_table(&GroupSpec::cyclic(6).unwrap()).is_associative());
        assert!(z2().is_associative());
        assert!(!d6::latin_square().is_associative());
    }

    #[test]
    fn cayley_tables() {
        assert_eq!(z2().table(), &[vec![0, 1], vec![1, 0]]);
        let z3 = LatinSquare::cayley_table(&GroupSpec::cyclic(3).unwrap());
        assert_eq!(z3.table(), &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        let klein = LatinSquare::cayley_table(&GroupSpec::new(vec![2, 2]).unwrap());
        for a in 0..4 {
            assert_eq!(klein.mul(a, a), 0);
        }
        assert!(klein.is_associative());
    }

    #[test]
    fn isotope_identity_and_row_swap() {
        let ls = z2();
        let id = Isotopy::identity(2);
        assert_eq!(ls.isotope(&id).unwrap(), ls);
        let swap_rows = Isotopy {
            row_perm: Permutation::new(vec![1, 0]).unwrap(),
            col_perm: Permutation::identity(2),
            sym_perm: Permutation::identity(2),
        };
        assert_eq!(
            ls.isotope(&swap_rows).unwrap().table(),
            &[vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn symbol_inversion_isotopy_on_abelian_table() {
        let g = GroupSpec::cyclic(3).unwrap();
        let ls = LatinSquare::cayley_table(&g);
        let iso = Isotopy {
            row_perm: Permutation::identity(3),
            col_perm: Permutation::identity(3),
            sym_perm: g.inversion_permutation(),
        };
        let inv = ls.isotope(&iso).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(inv.mul(a, b), g.negate(g.add(a, b)));
            }
        }
    }

    #[test]
    fn normalize_to_loop_fixes_unit_row_and_column() {
        let d6 = d6::latin_square();
        let (looped, iso) = d6.normalize_to_loop();
        assert_eq!(looped, d6, "already a loop with unit 0");
        assert_eq!(iso, Isotopy::identity(6));

        // Scramble with an isotopy, then normalize back to a loop.
        let scramble = Isotopy {
            row_perm: Permutation::new(vec![2, 0, 5, 1, 4, 3]).unwrap(),
            col_perm: Permutation::new(vec![1, 3, 0, 2, 5, 4]).unwrap(),
            sym_perm: Permutation::new(vec![4, 2, 0, 5, 3, 1]).unwrap(),
        };
        let scrambled = d6.isotope(&scramble).unwrap();
        let (looped, iso) = scrambled.normalize_to_loop();
        assert!(looped.is_loop_at_zero());
        // Composing with the returned isotopy reproduces the input.
        assert_eq!(looped.isotope(&iso.inverse()).unwrap(), scrambled);
        assert_eq!(scrambled.isotope(&iso).unwrap(), looped);
    }

    #[test]
    fn row_permutation_matrix_convention() {
        let tol = Tolerance::default();
        let d6 = d6::latin_square();
        // j = 0 on a loop is the identity.
        assert_eq!(d6.row_permutation_matrix(0), ComplexMatrix::identity(6));
        let z2 = z2();
        let expect = ComplexMatrix::from_rows(&[
            &[Scalar::zero(), Complex::new(1.0, 0.0)],
            &[Complex::new(1.0, 0.0), Scalar::zero()],
        ])
        .unwrap();
        assert_eq!(z2.row_permutation_matrix(1), expect);
        // Column j = 1 of the order-6 table is the product of transpositions
        // (0 1)(2 5)(3 4).
        let p1 = d6.row_permutation_matrix(1);
        for (from, to) in [(0, 1), (1, 0), (2, 5), (5, 2), (3, 4), (4, 3)] {
            let e = ComplexMatrix::basis_column(6, from);
            assert_eq!(p1.matmul(&e).unwrap(), ComplexMatrix::basis_column(6, to));
        }
        assert!(p1.is_unitary(tol).unwrap());
    }

    #[test]
    fn cayley_tables_are_associative_up_to_order_twelve() {
        let specs: [&[usize]; 6] = [&[7], &[8], &[2, 4], &[9], &[12], &[2, 2, 3]];
        for factors in specs {
            let g = GroupSpec::new(factors.to_vec()).unwrap();
            let table = LatinSquare::cayley_table(&g);
            assert!(table.is_associative(), "{factors:?}");
            assert!(table.is_loop_at_zero(), "{factors:?}");
        }
    }

    #[test]
    fn group_spec_parse_and_encoding() {
        let g: GroupSpec = "Z2xZ3".parse().unwrap();
        assert_eq!(g.factors(), &[2, 3]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.decode(5), vec![1, 2]);
        assert_eq!(g.encode(&[1, 2]), 5);
        assert_eq!(g.add(5, 4), g.encode(&[0, 0]));
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("Z0".parse::<GroupSpec>().is_err());
    }
}
