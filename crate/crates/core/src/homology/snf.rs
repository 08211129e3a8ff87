//! Smith normal form over the integers.
//!
//! Elimination runs first in checked `i64`; on any overflow it restarts from
//! the original matrix in arbitrary precision, so the result is always exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, data: vec![0; nrows * ncols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        IntMatrix { nrows, ncols, data: rows.concat() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product, `None` on shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.ncols != other.nrows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let small: Vec<Vec<i64>> = m.rows();
    let diagonal = match reduce(small) {
        Ok(d) => d.into_iter().map(BigInt::from).collect(),
        Err(Overflow) => {
            let big = m.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            reduce(big).expect("arbitrary precision cannot overflow")
        }
    };
    SmithForm { rank: diagonal.len(), diagonal }
}

#[derive(Debug)]
struct Overflow;

trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    /// Truncated quotient.
    fn quot(&self, by: &Self) -> Self;
    /// `self − q·x`
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self, Overflow>;
    fn add(&self, x: &Self) -> Result<Self, Overflow>;
    fn divides(&self, x: &Self) -> bool;
    fn abs(&self) -> Self;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn quot(&self, by: &Self) -> Self {
        self / by
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*x).and_then(|p| self.checked_sub(p)).ok_or(Overflow)
    }
    fn add(&self, x: &Self) -> Result<Self, Overflow> {
        self.checked_add(*x).ok_or(Overflow)
    }
    fn divides(&self, x: &Self) -> bool {
        x % self == 0
    }
    fn abs(&self) -> Self {
        i64::abs(*self)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn quot(&self, by: &Self) -> Self {
        self / by
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self, Overflow> {
        Ok(self - q * x)
    }
    fn add(&self, x: &Self) -> Result<Self, Overflow> {
        Ok(self + x)
    }
    fn divides(&self, x: &Self) -> bool {
        Integer::is_multiple_of(x, self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// Diagonalizes in place and returns the nonzero diagonal.
///
/// Pivot: smallest nonzero magnitude in the remaining block, ties broken by
/// row-major position.
fn reduce<T: Entry>(mut a: Vec<Vec<T>>) -> Result<Vec<T>, Overflow> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_in_block(&a, t) else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut dirty = false;
            let row_support: Vec<usize> = (t..n).filter(|&j| !a[t][j].is_zero()).collect();
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quot(&a[t][t]);
                for &j in &row_support {
                    a[i][j] = a[i][j].sub_mul(&q, &a[t][j])?;
                }
                dirty |= !a[i][t].is_zero();
            }
            let col_support: Vec<usize> = (t..m).filter(|&i| !a[i][t].is_zero()).collect();
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&a[t][t]);
                for &i in &col_support {
                    a[i][j] = a[i][j].sub_mul(&q, &a[i][t])?;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot survived; promote it
                let mut best = (t, t);
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs_lt(&a[best.0][best.1]) {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs_lt(&a[best.0][best.1]) {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, t, best.1);
                continue;
            }
            if !a[t][t].is_unit() {
                if let Some(i) = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[t][t].divides(&a[i][j]))) {
                    let source = a[i].clone();
                    for (x, y) in a[t][t + 1..n].iter_mut().zip(&source[t + 1..n]) {
                        *x = x.add(y)?;
                    }
                    continue;
                }
            }
            break;
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

fn smallest_in_block<T: Entry>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if !x.abs_lt(&a[bi][bj]) => {}
                _ => {
                    if x.is_unit() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}
