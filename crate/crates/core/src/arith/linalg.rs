//! Dense Gaussian elimination over an arbitrary exact field.

use super::field::Field;

/// Row-reduced echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); cols];
            v[fc] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = work[row][fc].neg();
            }
            v
        })
        .collect()
}

/// One solution of `M v = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F], cols: usize) -> Option<Vec<F>> {
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut v = vec![F::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = aug[row][cols].clone();
    }
    Some(v)
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&a[c][j]);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    det
}
