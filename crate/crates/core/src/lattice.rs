//! Integer lattices given by generating rows: Hermite and Smith normal forms,
//! membership, saturation and indices.

pub type IVec = Vec<i64>;

fn identity(n: usize) -> Vec<IVec> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn axpy(dst: &mut [i64], src: &[i64], q: i64) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= q * s;
    }
}

/// Row-style Hermite normal form `H = U M`.
///
/// `rows` holds the nonzero rows of `H`: pivots strictly increase, each pivot
/// is positive, and entries above a pivot lie in `[0, pivot)`. Row `i` of
/// `transform` expresses the `i`-th row of the full `H` (zero rows included,
/// after the nonzero ones) in terms of the input rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Hnf {
    pub rows: Vec<IVec>,
    pub pivots: Vec<usize>,
    pub transform: Vec<IVec>,
    pub ncols: usize,
}

pub fn hnf(m: &[IVec], ncols: usize) -> Hnf {
    let k = m.len();
    let mut a: Vec<IVec> = m.to_vec();
    let mut u = identity(k);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == k {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..k).filter(|&i| a[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(r, p);
            u.swap(r, p);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..k {
                if a[i][c] != 0 {
                    let q = a[i][c] / a[r][c];
                    let (top, bottom) = a.split_at_mut(i);
                    axpy(&mut bottom[0], &top[r], q);
                    let (ut, ub) = u.split_at_mut(i);
                    axpy(&mut ub[0], &ut[r], q);
                }
            }
        }
        if a.get(r).map_or(true, |row| row[c] == 0) {
            continue;
        }
        if a[r][c] < 0 {
            a[r].iter_mut().for_each(|v| *v = -*v);
            u[r].iter_mut().for_each(|v| *v = -*v);
        }
        for i in 0..r {
            let q = a[i][c].div_euclid(a[r][c]);
            if q != 0 {
                let (top, bottom) = a.split_at_mut(r);
                axpy(&mut top[i], &bottom[0], q);
                let (ut, ub) = u.split_at_mut(r);
                axpy(&mut ut[i], &ub[0], q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Hnf { rows: a, pivots, transform: u, ncols }
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the lattice; returns the canonical representative and
    /// the multiple of each row that was subtracted.
    pub fn reduce(&self, v: &[i64]) -> (IVec, IVec) {
        let mut w = v.to_vec();
        let mut t = vec![0; self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let q = w[p].div_euclid(row[p]);
            if q != 0 {
                axpy(&mut w, row, q);
                t[i] = q;
            }
        }
        (w, t)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).0.iter().all(|&c| c == 0)
    }

    /// Smallest `o` in `1..=max` with `o v` in the lattice.
    pub fn order_of(&self, v: &[i64], max: i64) -> Option<i64> {
        (1..=max).find(|&o| self.contains(&v.iter().map(|c| c * o).collect::<Vec<_>>()))
    }
}

/// `U M V = D` with `D` diagonal, `d_1 | d_2 | ...`, all `d_i > 0` for
/// `i < rank`. `v_inv` is the inverse of `V`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub diag: Vec<i64>,
    pub u: Vec<IVec>,
    pub v: Vec<IVec>,
    pub v_inv: Vec<IVec>,
}

pub fn snf(m: &[IVec], ncols: usize) -> Snf {
    let k = m.len();
    let mut a: Vec<IVec> = m.to_vec();
    let mut u = identity(k);
    let mut v = identity(ncols);
    let mut vi = identity(ncols);
    let mut diag = Vec::new();

    let col_op = |a: &mut Vec<IVec>, v: &mut Vec<IVec>, vi: &mut Vec<IVec>, j: usize, t: usize, q: i64| {
        // column j -= q column t
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= q * row[t];
        }
        // inverse: row t of V^{-1} += q row j
        let src = vi[j].clone();
        for (d, s) in vi[t].iter_mut().zip(&src) {
            *d += q * s;
        }
    };
    let col_swap = |a: &mut Vec<IVec>, v: &mut Vec<IVec>, vi: &mut Vec<IVec>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        vi.swap(i, j);
    };

    for t in 0..k.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..k {
            for j in t..ncols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        u.swap(t, bi);
        col_swap(&mut a, &mut v, &mut vi, t, bj);
        loop {
            let mut changed = false;
            for i in t + 1..k {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let (top, bottom) = a.split_at_mut(i);
                    axpy(&mut bottom[0], &top[t], q);
                    let (ut, ub) = u.split_at_mut(i);
                    axpy(&mut ub[0], &ut[t], q);
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        u.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_op(&mut a, &mut v, &mut vi, j, t, q);
                    if a[t][j] != 0 {
                        col_swap(&mut a, &mut v, &mut vi, t, j);
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..k).find(|&i| (t + 1..ncols).any(|j| a[i][j] % a[t][t] != 0));
            match bad {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (d, s) in top[t].iter_mut().zip(&bottom[0]) {
                        *d += s;
                    }
                    let (ut, ub) = u.split_at_mut(i);
                    for (d, s) in ut[t].iter_mut().zip(&ub[0]) {
                        *d += s;
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            a[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
        diag.push(a[t][t]);
    }
    Snf { diag, u, v, v_inv: vi }
}

/// Nonzero invariant factors of the lattice spanned by `m`.
pub fn invariant_factors(m: &[IVec], ncols: usize) -> Vec<i64> {
    snf(m, ncols).diag
}

/// The finite group `Lambda_sat / Lambda`: generators with their orders, plus
/// a basis of the saturation.
#[derive(Clone, Debug)]
pub struct SaturationQuotient {
    pub generators: Vec<(IVec, i64)>,
    pub saturation: Vec<IVec>,
    pub order: i64,
}

pub fn saturation_quotient(m: &[IVec], ncols: usize) -> SaturationQuotient {
    let s = snf(m, ncols);
    let rank = s.diag.len();
    let saturation: Vec<IVec> = s.v_inv[..rank].to_vec();
    let generators: Vec<(IVec, i64)> =
        s.diag.iter().enumerate().filter(|(_, &d)| d > 1).map(|(i, &d)| (s.v_inv[i].clone(), d)).collect();
    let order = s.diag.iter().product();
    SaturationQuotient { generators, saturation, order }
}

impl SaturationQuotient {
    /// Every element of the quotient, as integer combinations of generators.
    pub fn elements(&self, ncols: usize) -> Vec<IVec> {
        let mut out = vec![vec![0; ncols]];
        for (g, d) in &self.generators {
            let mut next = Vec::with_capacity(out.len() * *d as usize);
            for base in &out {
                for k in 0..*d {
                    next.push(base.iter().zip(g).map(|(b, x)| b + k * x).collect());
                }
            }
            out = next;
        }
        out
    }

    pub fn is_cyclic(&self) -> bool {
        self.generators.len() <= 1
    }
}

/// `[sup : sub]` for lattices of equal rank with `sub` inside `sup`.
pub fn index(sub: &[IVec], sup: &[IVec], ncols: usize) -> i64 {
    let a: i64 = invariant_factors(sub, ncols).iter().product();
    let b: i64 = invariant_factors(sup, ncols).iter().product();
    debug_assert_eq!(a % b, 0);
    a / b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_mul(a: &[IVec], b: &[IVec]) -> Vec<IVec> {
        let n = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
            .collect()
    }

    #[test]
    fn hnf_of_example_relations() {
        let h = hnf(&[vec![1, -1], vec![2, 0]], 2);
        assert_eq!(h.rows, vec![vec![1, 1], vec![0, 2]]);
        assert!(h.contains(&[1, -1]));
        assert!(h.contains(&[2, 0]));
        assert!(!h.contains(&[1, 0]));
        assert_eq!(h.order_of(&[1, 0], 10), Some(2));
    }

    #[test]
    fn snf_example() {
        assert_eq!(invariant_factors(&[vec![1, -1], vec![2, 0]], 2), vec![1, 2]);
        assert_eq!(invariant_factors(&[vec![2]], 1), vec![2]);
        assert_eq!(invariant_factors(&[vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
        assert!(invariant_factors(&[], 3).is_empty());
    }

    #[test]
    fn saturation_of_2z() {
        let s = saturation_quotient(&[vec![2]], 1);
        assert_eq!(s.order, 2);
        assert_eq!(s.elements(1).len(), 2);
        assert!(s.is_cyclic());
    }

    proptest! {
        #[test]
        fn snf_factorization_holds(m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=3)) {
            let s = snf(&m, 3);
            let d = mat_mul(&mat_mul(&s.u, &m), &s.v);
            for (i, row) in d.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    let expect = if i == j && i < s.diag.len() { s.diag[i] } else { 0 };
                    prop_assert_eq!(x, expect);
                }
            }
            prop_assert_eq!(mat_mul(&s.v, &s.v_inv), identity(3));
            for w in s.diag.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }

        #[test]
        fn hnf_spans_same_lattice(m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=3)) {
            let h = hnf(&m, 3);
            for row in &m {
                prop_assert!(h.contains(row));
            }
            let full = mat_mul(&h.transform, &m);
            for (i, row) in full.iter().enumerate() {
                if i < h.rank() {
                    prop_assert_eq!(row, &h.rows[i]);
                } else {
                    prop_assert!(row.iter().all(|&x| x == 0));
                }
            }
            for (i, (row, &p)) in h.rows.iter().zip(&h.pivots).enumerate() {
                prop_assert!(row[p] > 0);
                for above in &h.rows[..i] {
                    prop_assert!(above[p] >= 0 && above[p] < row[p]);
                }
            }
        }
    }
}
