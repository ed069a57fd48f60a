//! Exact integer matrices: rank by fraction-free elimination and invariant
//! factors by Smith normal form reduction.
//!
//! Both routines first run on `i64` with checked arithmetic and restart on
//! `BigInt` the moment an intermediate value leaves the `i64` range, so the
//! result is exact for any input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

pub(crate) trait Entry:
    Clone + Integer + Signed + CheckedMul + CheckedSub + CheckedAdd
{
    /// `false` for values whose negation or absolute value would overflow.
    fn representable(&self) -> bool {
        true
    }
}

impl Entry for i64 {
    fn representable(&self) -> bool {
        *self != i64::MIN
    }
}

impl Entry for BigInt {}

fn checked<T: Entry>(v: Option<T>) -> Option<T> {
    v.filter(Entry::representable)
}

/// `a*x - b*y`
fn mul_sub<T: Entry>(a: &T, x: &T, b: &T, y: &T) -> Option<T> {
    let ax = checked(a.checked_mul(x))?;
    let by = checked(b.checked_mul(y))?;
    checked(ax.checked_sub(&by))
}

/// Row-major dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, columns.len());
        for r in 0..self.rows {
            for (t, &c) in columns.iter().enumerate() {
                out.set(r, t, self.get(r, c));
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        if let Some(r) = rank_in_place(&mut work, self.rows, self.cols) {
            return r;
        }
        let mut big: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        rank_in_place(&mut big, self.rows, self.cols).expect("BigInt elimination cannot overflow")
    }

    /// Nonzero diagonal entries of the Smith normal form, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut work = self.data.clone();
        if let Some(f) = smith_in_place(&mut work, self.rows, self.cols) {
            return f.into_iter().map(BigInt::from).collect();
        }
        let mut big: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        smith_in_place(&mut big, self.rows, self.cols).expect("BigInt reduction cannot overflow")
    }
}

/// Fraction-free Gaussian elimination: a pivot row `r` clears row `i` via
/// `row_i <- (piv/g) row_i - (a_ic/g) row_r` with `g = gcd(piv, a_ic)`.
/// Returns `None` on overflow.
pub(crate) fn rank_in_place<T: Entry>(a: &mut [T], rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let mut best: Option<usize> = None;
        for i in rank..rows {
            let v = &a[i * cols + c];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|b| v.abs() < a[b * cols + c].abs()) {
                best = Some(i);
                if v.abs().is_one() {
                    break;
                }
            }
        }
        let Some(best) = best else { continue };
        swap_rows(a, cols, rank, best);
        let piv = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let v = a[i * cols + c].clone();
            if v.is_zero() {
                continue;
            }
            let g = piv.gcd(&v);
            let m_row = piv.clone() / g.clone();
            let m_piv = v / g;
            for j in c..cols {
                let x = mul_sub(&m_row, &a[i * cols + j], &m_piv, &a[rank * cols + j])?;
                a[i * cols + j] = x;
            }
            if !m_row.abs().is_one() {
                reduce_content(&mut a[i * cols + c + 1..(i + 1) * cols]);
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Largest entry magnitude [`unit_echelon_ranks`] tolerates; keeps every
/// `row - q * pivot` update inside `i32`.
const UNIT_BOUND: i32 = 1 << 15;

/// Row echelon form using only `+-1` pivots and unimodular row operations,
/// processing columns left to right.
///
/// Returns `(r, rank)` where `r` counts the pivots found in the first
/// `prefix` columns. Row operations never look ahead, so `r` is the rank of
/// the submatrix formed by those columns and `rank` that of the whole matrix.
/// Because every pivot is a unit, the Smith normal form of the prefix
/// submatrix is `diag(1, ..., 1)` of length `r`.
///
/// Returns `None` when some column offers only non-unit pivots or an entry
/// leaves `[-2^15, 2^15]`; callers then fall back to exact elimination.
pub(crate) fn unit_echelon_ranks(
    a: &mut [i32],
    rows: usize,
    cols: usize,
    prefix: usize,
) -> Option<(usize, usize)> {
    let mut rank = 0;
    let mut prefix_rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let mut unit = None;
        let mut nonzero = false;
        for i in rank..rows {
            match a[i * cols + c] {
                0 => {}
                1 | -1 => {
                    unit = Some(i);
                    break;
                }
                _ => nonzero = true,
            }
        }
        let Some(u) = unit else {
            if nonzero {
                return None;
            }
            continue;
        };
        if u != rank {
            let (head, tail) = a.split_at_mut(u * cols);
            head[rank * cols..(rank + 1) * cols].swap_with_slice(&mut tail[..cols]);
        }
        let sign = a[rank * cols + c];
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols + c..(rank + 1) * cols];
        for row in tail.chunks_exact_mut(cols) {
            let row = &mut row[c..];
            let q = row[0] * sign;
            if q == 0 {
                continue;
            }
            let mut out_of_range = false;
            for (x, &y) in row.iter_mut().zip(pivot_row) {
                *x = x.wrapping_sub(q.wrapping_mul(y));
                out_of_range |= x.unsigned_abs() > UNIT_BOUND as u32;
            }
            if out_of_range {
                return None;
            }
        }
        rank += 1;
        if c < prefix {
            prefix_rank += 1;
        }
    }
    Some((prefix_rank, rank))
}

/// Row width of [`unit_echelon_ranks_narrow`].
pub(crate) const NARROW: usize = 32;

/// Same contract as [`unit_echelon_ranks`] for at most [`NARROW`] columns
/// stored as fixed `i16` rows with entries bounded by `2^7`.
///
/// Rows are taken one at a time and reduced against the pivot rows found so
/// far, in the order those were created. A reduced row that is nonzero on the
/// first `prefix` columns must take its pivot there. Pivot rows therefore form
/// a unit triangular block on their pivot columns, both for the whole matrix
/// and for its first `prefix` columns.
pub(crate) fn unit_echelon_ranks_narrow(
    a: &mut [[i16; NARROW]],
    cols: usize,
    prefix: usize,
) -> Option<(usize, usize)> {
    const BOUND: u16 = 1 << 7;
    debug_assert!(cols <= NARROW);
    let prefix = prefix.min(cols);
    let mut pivot_col = [0u8; NARROW];
    let mut rank = 0;
    let mut prefix_rank = 0;
    for i in 0..a.len() {
        let mut x = a[i];
        for k in 0..rank {
            let pivot = &a[k];
            let c = pivot_col[k] as usize;
            let q = x[c].wrapping_mul(pivot[c]);
            if q == 0 {
                continue;
            }
            let mut out_of_range = false;
            // bounded entries: no wrap can occur
            for (v, &y) in x.iter_mut().zip(pivot) {
                *v = v.wrapping_sub(q.wrapping_mul(y));
                out_of_range |= v.unsigned_abs() > BOUND;
            }
            if out_of_range {
                return None;
            }
        }
        if x.iter().fold(0, |acc, &v| acc | v) == 0 {
            continue;
        }
        let pick = |range: std::ops::Range<usize>| -> Option<Option<usize>> {
            let mut nonzero = false;
            for c in range {
                match x[c] {
                    0 => {}
                    1 | -1 => return Some(Some(c)),
                    _ => nonzero = true,
                }
            }
            if nonzero {
                None
            } else {
                Some(None)
            }
        };
        let c = match pick(0..prefix)? {
            Some(c) => {
                prefix_rank += 1;
                c
            }
            None => pick(prefix..cols)?.expect("nonzero row has a nonzero entry"),
        };
        a[rank] = x;
        pivot_col[rank] = c as u8;
        rank += 1;
    }
    Some((prefix_rank, rank))
}

fn reduce_content<T: Entry>(row: &mut [T]) {
    let g = row.iter().fold(T::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

fn swap_rows<T>(a: &mut [T], cols: usize, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    let (lo, hi) = (r1.min(r2), r1.max(r2));
    let (head, tail) = a.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

fn swap_cols<T>(a: &mut [T], rows: usize, cols: usize, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..rows {
        a.swap(r * cols + c1, r * cols + c2);
    }
}

/// Diagonalizes `a` by unimodular row and column operations. Returns the
/// absolute values of the nonzero diagonal, or `None` on overflow.
pub(crate) fn smith_in_place<T: Entry>(a: &mut [T], rows: usize, cols: usize) -> Option<Vec<T>> {
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..rows {
            for j in t..cols {
                let v = &a[i * cols + j];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < a[bi * cols + bj].abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(a, cols, t, bi);
        swap_cols(a, rows, cols, t, bj);

        loop {
            let mut moved = false;
            for i in t + 1..rows {
                if a[i * cols + t].is_zero() {
                    continue;
                }
                let q = a[i * cols + t].clone() / a[t * cols + t].clone();
                for j in t..cols {
                    let x = mul_sub(&T::one(), &a[i * cols + j], &q, &a[t * cols + j])?;
                    a[i * cols + j] = x;
                }
                if !a[i * cols + t].is_zero() {
                    swap_rows(a, cols, t, i);
                    moved = true;
                }
            }
            for j in t + 1..cols {
                if a[t * cols + j].is_zero() {
                    continue;
                }
                let q = a[t * cols + j].clone() / a[t * cols + t].clone();
                for i in t..rows {
                    let x = mul_sub(&T::one(), &a[i * cols + j], &q, &a[i * cols + t])?;
                    a[i * cols + j] = x;
                }
                if !a[t * cols + j].is_zero() {
                    swap_cols(a, rows, cols, t, j);
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            let piv = a[t * cols + t].clone();
            let stray = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(a[i * cols + j].clone() % piv.clone()).is_zero())
            });
            match stray {
                Some(i) => {
                    for j in t..cols {
                        let x = checked(a[t * cols + j].checked_add(&a[i * cols + j]))?;
                        a[t * cols + j] = x;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t * cols + t].abs());
        t += 1;
    }
    Some(factors)
}
