//! Smith normal form over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hnf::Row;

/// `d = u * a * v` with `u`, `v` unimodular and `d` diagonal; the nonzero
/// diagonal entries are positive and divide one another in order.
#[derive(Clone, Debug)]
pub(crate) struct Smith {
    pub diagonal: Vec<BigInt>,
    pub u: Vec<Row>,
    pub v: Vec<Row>,
}

fn identity(n: usize) -> Vec<Row> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_sub(m: &mut [Row], dst: usize, src: usize, q: &BigInt) {
    let (s, d) = if src < dst {
        let (a, b) = m.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = m.split_at_mut(src);
        (&b[0], &mut a[dst])
    };
    for (x, y) in d.iter_mut().zip(s) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_sub(m: &mut [Row], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = q * &row[src];
            row[dst] -= t;
        }
    }
}

fn col_swap(m: &mut [Row], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

pub(crate) fn smith(a: &[Row], ncols: usize) -> Smith {
    let m = a.len();
    let n = ncols;
    let mut d: Vec<Row> = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let best = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| d[i][j].abs().cmp(&d[k][l].abs()));
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut d, t, pj);
            col_swap(&mut v, t, pj);
            let mut clean = true;
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_sub(&mut d, i, t, &q);
                row_sub(&mut u, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_sub(&mut d, j, t, &q);
                col_sub(&mut v, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole remaining block
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match offender {
                Some(i) => {
                    let one = -BigInt::one();
                    row_sub(&mut d, t, i, &one);
                    row_sub(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[t][t].is_zero() {
            break;
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -std::mem::take(x);
            }
        }
        diagonal.push(d[t][t].clone());
    }
    let out = Smith { diagonal, u, v };
    if cfg!(debug_assertions) {
        out.check(a, &d, ncols);
    }
    out
}

impl Smith {
    fn check(&self, a: &[Row], d: &[Row], ncols: usize) {
        let mul = |x: &[Row], y: &[Row], inner: usize, cols: usize| -> Vec<Row> {
            x.iter()
                .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &y[k][j]).sum()).collect())
                .collect()
        };
        let ua = mul(&self.u, a, a.len(), ncols);
        let uav = mul(&ua, &self.v, ncols, ncols);
        assert_eq!(uav, d, "Smith transform check failed");
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expect = if i == j { self.diagonal.get(i) } else { None };
                match expect {
                    Some(dv) => assert_eq!(x, dv),
                    None => assert!(x.is_zero(), "Smith form not diagonal"),
                }
            }
        }
        for w in self.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "invariant factors do not divide");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn diag(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(smith(&mat(&[&[2, 0], &[0, 3]]), 2).diagonal, diag(&[1, 6]));
        assert_eq!(smith(&mat(&[&[10, 0], &[2, -24]]), 2).diagonal, diag(&[2, 120]));
        assert_eq!(smith(&mat(&[&[4, 6]]), 2).diagonal, diag(&[2]));
        assert!(smith(&mat(&[&[0, 0]]), 2).diagonal.is_empty());
        assert!(smith(&[], 3).diagonal.is_empty());
    }

    /// gcd of all k x k minors, by brute force over 3 x 3 matrices.
    fn determinantal_divisors(a: &[Vec<i64>]) -> Vec<i64> {
        let det2 = |r: [usize; 2], c: [usize; 2]| a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]];
        let g1 = a.iter().flatten().fold(0i64, |g, &x| g.gcd(&x));
        let pairs = [[0, 1], [0, 2], [1, 2]];
        let g2 = pairs.iter().flat_map(|&r| pairs.iter().map(move |&c| (r, c))).fold(0i64, |g, (r, c)| g.gcd(&det2(r, c)));
        let g3 = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
            .abs();
        vec![g1, g2, g3]
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(entries in prop::collection::vec(-9i64..9, 9)) {
            let a: Vec<Vec<i64>> = entries.chunks(3).map(|r| r.to_vec()).collect();
            let rows: Vec<Row> = a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            let s = smith(&rows, 3);
            let dd = determinantal_divisors(&a);
            let mut prod = BigInt::one();
            for (k, expect) in dd.iter().enumerate() {
                match s.diagonal.get(k) {
                    Some(x) => {
                        prod *= x;
                        prop_assert_eq!(&prod, &BigInt::from(*expect));
                    }
                    None => prop_assert_eq!(*expect, 0),
                }
            }
        }
    }
}
