//! Row Hermite normal form over Z with a unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Row = Vec<BigInt>;

/// `h = u * a` with `h` in row echelon form: positive pivots, entries above
/// each pivot reduced into `[0, pivot)`. Only the nonzero rows of `h` (and
/// the matching rows of `u`) are kept.
#[derive(Clone, Debug)]
pub(crate) struct RowHnf {
    pub h: Vec<Row>,
    pub u: Vec<Row>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

fn sub_scaled(target: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&src[from..]) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -std::mem::take(x);
    }
}

fn identity(n: usize) -> Vec<Row> {
    (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect()
}

impl RowHnf {
    pub fn new(a: &[Row], ncols: usize) -> Self {
        let m = a.len();
        let mut rows: Vec<Row> = a.to_vec();
        let mut u = identity(m);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == m {
                break;
            }
            loop {
                let best = (r..m)
                    .filter(|&i| !rows[i][c].is_zero())
                    .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
                let Some(p) = best else { break };
                rows.swap(r, p);
                u.swap(r, p);
                let mut clean = true;
                for i in r + 1..m {
                    if rows[i][c].is_zero() {
                        continue;
                    }
                    let q = rows[i][c].div_floor(&rows[r][c]);
                    let (top, bottom) = rows.split_at_mut(i);
                    sub_scaled(&mut bottom[0], &top[r], &q, c);
                    let (top, bottom) = u.split_at_mut(i);
                    sub_scaled(&mut bottom[0], &top[r], &q, 0);
                    clean &= rows[i][c].is_zero();
                }
                if clean {
                    break;
                }
            }
            if r < m && !rows[r][c].is_zero() {
                if rows[r][c].is_negative() {
                    negate(&mut rows[r]);
                    negate(&mut u[r]);
                }
                for i in 0..r {
                    if rows[i][c].is_zero() {
                        continue;
                    }
                    let q = rows[i][c].div_floor(&rows[r][c]);
                    let (top, bottom) = rows.split_at_mut(r);
                    sub_scaled(&mut top[i], &bottom[0], &q, c);
                    let (top, bottom) = u.split_at_mut(r);
                    sub_scaled(&mut top[i], &bottom[0], &q, 0);
                }
                pivots.push(c);
                r += 1;
            }
        }
        rows.truncate(r);
        u.truncate(r);
        let out = RowHnf {
            h: rows,
            u,
            pivots,
            ncols,
        };
        if cfg!(debug_assertions) {
            out.freivalds_check(a);
        }
        out
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.h.len()
    }

    /// Checks `u * a = h` against a pseudo-random vector.
    fn freivalds_check(&self, a: &[Row]) {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let x: Vec<BigInt> = (0..self.ncols)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                BigInt::from(state % 1009) - 504
            })
            .collect();
        let dot = |row: &Row, v: &[BigInt]| -> BigInt { row.iter().zip(v).map(|(p, q)| p * q).sum() };
        let ax: Vec<BigInt> = a.iter().map(|row| dot(row, &x)).collect();
        for (hrow, urow) in self.h.iter().zip(&self.u) {
            assert_eq!(dot(hrow, &x), dot(urow, &ax), "HNF transform check failed");
        }
    }

    /// Reduces `b` modulo the row lattice. Returns the multipliers on the
    /// rows of `h` and the canonical residual, which is zero iff `b` lies
    /// in the lattice.
    pub fn reduce(&self, b: &[BigInt]) -> (Vec<BigInt>, Row) {
        let mut res = b.to_vec();
        let mut y = vec![BigInt::zero(); self.h.len()];
        for (i, &c) in self.pivots.iter().enumerate() {
            if res[c].is_zero() {
                continue;
            }
            let q = res[c].div_floor(&self.h[i][c]);
            sub_scaled(&mut res, &self.h[i], &q, c);
            y[i] = q;
        }
        (y, res)
    }

    /// Integer `x` with `x * a = b`, if one exists, else the residual.
    pub fn solve(&self, b: &[BigInt], nrows: usize) -> Result<Row, Row> {
        let (y, res) = self.reduce(b);
        if res.iter().any(|v| !v.is_zero()) {
            return Err(res);
        }
        let mut x = vec![BigInt::zero(); nrows];
        for (yi, urow) in y.iter().zip(&self.u) {
            if yi.is_zero() {
                continue;
            }
            for (xj, uij) in x.iter_mut().zip(urow) {
                if !uij.is_zero() {
                    *xj += yi * uij;
                }
            }
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn small_example() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let hnf = RowHnf::new(&a, 3);
        assert_eq!(hnf.h, mat(&[&[2, 4, 4], &[0, 6, 0], &[0, 0, 12]]));
        assert_eq!(hnf.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn one_by_one() {
        let hnf = RowHnf::new(&mat(&[&[2]]), 1);
        assert!(hnf.solve(&[BigInt::from(1)], 1).is_err());
        assert_eq!(hnf.solve(&[BigInt::from(6)], 1).unwrap(), vec![BigInt::from(3)]);
    }

    #[test]
    fn dependent_rows() {
        let a = mat(&[&[1, 2], &[2, 4], &[0, 3]]);
        let hnf = RowHnf::new(&a, 2);
        assert_eq!(hnf.rank(), 2);
        let x = hnf.solve(&[BigInt::from(3), BigInt::from(9)], 3).unwrap();
        let recon: Vec<BigInt> = (0..2).map(|j| (0..3).map(|i| &x[i] * &a[i][j]).sum()).collect();
        assert_eq!(recon, vec![BigInt::from(3), BigInt::from(9)]);
    }

    proptest! {
        #[test]
        fn solves_exactly_the_lattice(
            entries in prop::collection::vec(-12i64..12, 12),
            comb in prop::collection::vec(-5i64..5, 4),
            noise in prop::collection::vec(-3i64..3, 3),
        ) {
            let a: Vec<Row> = entries.chunks(3).map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            let hnf = RowHnf::new(&a, 3);
            let b: Vec<BigInt> = (0..3).map(|j| (0..4).map(|i| BigInt::from(comb[i]) * &a[i][j]).sum()).collect();
            let x = hnf.solve(&b, 4).unwrap();
            let recon: Vec<BigInt> = (0..3).map(|j| (0..4).map(|i| &x[i] * &a[i][j]).sum()).collect();
            prop_assert_eq!(&recon, &b);
            // a perturbed target is solvable iff its residual vanishes
            let b2: Vec<BigInt> = b.iter().zip(&noise).map(|(v, n)| v + n).collect();
            if let Ok(x2) = hnf.solve(&b2, 4) {
                let recon: Vec<BigInt> = (0..3).map(|j| (0..4).map(|i| &x2[i] * &a[i][j]).sum()).collect();
                prop_assert_eq!(recon, b2);
            }
        }
    }
}
