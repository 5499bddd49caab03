//! Exact rank computation and small solves over the rationals.
//!
//! Ranks come from fraction-free Bareiss elimination over big integers
//! after clearing denominators row by row, so every reported dimension is
//! a certificate rather than a floating-point estimate.

use num::{BigInt, BigRational, Integer, One, Zero};

/// Exact rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    rank_bareiss(&mut m)
}

/// Fraction-free elimination; `m` is consumed as workspace.
fn rank_bareiss(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for i in (row + 1)..rows {
            for j in (col + 1)..cols {
                let num = &m[i][j] * &m[row][col] - &m[i][col] * &m[row][j];
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = quot;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
    }
    row
}

/// Solve `sum_i c_i * columns[i] = target` exactly; `None` if the target is
/// not in the column span.
pub fn solve_in_span(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let dim = target.len();
    let k = columns.len();
    // Augmented matrix [columns | target], Gauss-Jordan over Q.
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..dim).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v = &*v / &inv;
        }
        let pivot_row = m[row].clone();
        for (i, current) in m.iter_mut().enumerate() {
            if i != row && !current[col].is_zero() {
                let f = current[col].clone();
                for (entry, p) in current.iter_mut().zip(&pivot_row) {
                    let sub = &f * p;
                    *entry = &*entry - &sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero target.
    for r in m.iter().skip(row) {
        if !r[k].is_zero() {
            return None;
        }
    }
    let mut sol = vec![BigRational::zero(); k];
    for (r, &col) in pivot_cols.iter().enumerate() {
        sol[col] = m[r][k].clone();
    }
    Some(sol)
}

/// Dimension of the intersection of two spans inside a common space.
pub fn intersection_dim(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> usize {
    let ra = rank(a);
    let rb = rank(b);
    let mut both: Vec<Vec<BigRational>> = a.to_vec();
    both.extend_from_slice(b);
    let sum = rank(&both);
    ra + rb - sum
}
