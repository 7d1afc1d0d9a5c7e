//! Smith-form diagonalization of integer matrices over `Z/mZ`, used to solve
//! `A x ≡ b (mod m)` and to describe `ker(A) mod m` as a product of cyclic groups.
//!
//! Only unimodular integer row and column operations are applied, and all
//! entries are kept reduced into `[0, m)`, so `U A V ≡ D (mod m)` with `U` and
//! `V` invertible mod `m`. Row operations are replayed on the right-hand sides
//! instead of storing `U`.

use num_integer::Integer;

#[derive(Clone, Debug)]
pub struct Diagonalized {
    pub modulus: i64,
    pub rows: usize,
    pub cols: usize,
    /// `diag[i]` is the `(i, i)` entry of `D`, for `i < min(rows, cols)`.
    pub diag: Vec<i64>,
    /// Column transform `V` (cols × cols), row-major.
    pub right: Vec<Vec<i64>>,
    /// `U b` for each right-hand side `b` passed in.
    pub rhs: Vec<Vec<i64>>,
}

#[inline]
fn md(a: i128, m: i64) -> i64 {
    a.rem_euclid(m as i128) as i64
}

/// Diagonalizes `a` modulo `modulus`, carrying the row operations along
/// every vector in `rhs`.
pub fn diagonalize_mod(a: &[Vec<i64>], rhs: &[Vec<i64>], modulus: i64) -> Diagonalized {
    assert!(modulus >= 1);
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|&x| md(x as i128, modulus)).collect()).collect();
    let mut rhs: Vec<Vec<i64>> = rhs.iter().map(|b| b.iter().map(|&x| md(x as i128, modulus)).collect()).collect();
    let mut right: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();

    let row_axpy = |m: &mut Vec<Vec<i64>>, rhs: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        // R_dst -= q R_src
        let (s, d) = if src < dst {
            let (lo, hi) = m.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = m.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        for (x, &y) in d.iter_mut().zip(s.iter()) {
            *x = md(*x as i128 - q as i128 * y as i128, modulus);
        }
        for b in rhs.iter_mut() {
            b[dst] = md(b[dst] as i128 - q as i128 * b[src] as i128, modulus);
        }
    };
    let col_axpy = |m: &mut Vec<Vec<i64>>, right: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        // C_dst -= q C_src
        for row in m.iter_mut().chain(right.iter_mut()) {
            row[dst] = md(row[dst] as i128 - q as i128 * row[src] as i128, modulus);
        }
    };

    let steps = rows.min(cols);
    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        loop {
            // smallest nonzero entry of the remaining block
            let mut best: Option<(i64, usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                        best = Some((x, i, j));
                        if x == 1 {
                            break;
                        }
                    }
                }
                if best.is_some_and(|(b, _, _)| b == 1) {
                    break;
                }
            }
            let Some((_, pi, pj)) = best else { break };
            if pi != t {
                m.swap(pi, t);
                for b in rhs.iter_mut() {
                    b.swap(pi, t);
                }
            }
            if pj != t {
                for row in m.iter_mut().chain(right.iter_mut()) {
                    row.swap(pj, t);
                }
            }
            let pivot = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / pivot;
                    row_axpy(&mut m, &mut rhs, i, t, q);
                    clean &= m[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / pivot;
                    col_axpy(&mut m, &mut right, j, t, q);
                    clean &= m[t][j] == 0;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[t][t]);
    }
    Diagonalized { modulus, rows, cols, diag, right, rhs }
}

fn inv_mod(a: i64, m: i64) -> i64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    md(e.x, m)
}

impl Diagonalized {
    fn apply_right(&self, y: &[i64]) -> Vec<i64> {
        (0..self.cols)
            .map(|i| {
                let s: i128 = self.right[i].iter().zip(y).map(|(&v, &w)| v as i128 * w as i128).sum();
                md(s, self.modulus)
            })
            .collect()
    }

    /// Some solution of `A x ≡ b` for the `k`-th right-hand side.
    pub fn solve(&self, k: usize) -> Option<Vec<i64>> {
        let m = self.modulus;
        let c = &self.rhs[k];
        let mut y = vec![0i64; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            let d = self.diag.get(i).copied().unwrap_or(0);
            let g = d.gcd(&m);
            if ci % g != 0 {
                return None;
            }
            if d != 0 {
                let mg = m / g;
                y[i] = md((ci / g) as i128 * inv_mod((d / g).rem_euclid(mg.max(1)), mg.max(1)) as i128, mg.max(1));
            }
        }
        Some(self.apply_right(&y))
    }

    /// Generators of `{x : A x ≡ 0 (mod m)}` with their orders; trivial
    /// factors are omitted.
    pub fn kernel(&self) -> Vec<(Vec<i64>, i64)> {
        let m = self.modulus;
        (0..self.cols)
            .filter_map(|i| {
                let d = self.diag.get(i).copied().unwrap_or(0);
                let order = d.gcd(&m);
                if order == 1 {
                    return None;
                }
                let mut y = vec![0i64; self.cols];
                y[i] = m / order;
                Some((self.apply_right(&y), order))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_vec(a: &[Vec<i64>], x: &[i64], m: i64) -> Vec<i64> {
        a.iter().map(|r| md(r.iter().zip(x).map(|(&p, &q)| p as i128 * q as i128).sum(), m)).collect()
    }

    #[test]
    fn solvable_and_unsolvable() {
        // 2x ≡ 1 (mod 4) has no solution; 2x ≡ 2 does
        let a = vec![vec![2]];
        let d = diagonalize_mod(&a, &[vec![1], vec![2]], 4);
        assert!(d.solve(0).is_none());
        let x = d.solve(1).unwrap();
        assert_eq!(mat_vec(&a, &x, 4), vec![2]);
    }

    #[test]
    fn kernel_orders() {
        // kernel of [2 0; 0 3] mod 6 ≅ Z2 × Z3
        let a = vec![vec![2, 0], vec![0, 3]];
        let d = diagonalize_mod(&a, &[], 6);
        let mut orders: Vec<i64> = d.kernel().iter().map(|k| k.1).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
        for (v, _) in d.kernel() {
            assert!(mat_vec(&a, &v, 6).iter().all(|&x| x == 0));
        }
    }

    fn brute_solvable(a: &[Vec<i64>], b: &[i64], m: i64) -> bool {
        let cols = a[0].len();
        let total = (m as usize).pow(cols as u32);
        (0..total).any(|mut code| {
            let x: Vec<i64> = (0..cols)
                .map(|_| {
                    let v = (code % m as usize) as i64;
                    code /= m as usize;
                    v
                })
                .collect();
            mat_vec(a, &x, m) == b.iter().map(|&v| md(v as i128, m)).collect::<Vec<_>>()
        })
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(
            a in proptest::collection::vec(proptest::collection::vec(-4i64..5, 3), 1..4),
            b in proptest::collection::vec(-6i64..7, 3),
            m in 2i64..9,
        ) {
            let b: Vec<i64> = b[..a.len()].to_vec();
            let d = diagonalize_mod(&a, std::slice::from_ref(&b), m);
            let expected = brute_solvable(&a, &b, m);
            match d.solve(0) {
                Some(x) => {
                    prop_assert!(expected);
                    prop_assert_eq!(mat_vec(&a, &x, m), b.iter().map(|&v| md(v as i128, m)).collect::<Vec<_>>());
                }
                None => prop_assert!(!expected),
            }
            // kernel size matches a brute-force count
            let kernel_size: i64 = d.kernel().iter().map(|k| k.1).product();
            let zero = vec![0i64; a.len()];
            let cols = 3u32;
            let count = (0..(m as usize).pow(cols)).filter(|&code| {
                let mut c = code;
                let x: Vec<i64> = (0..cols).map(|_| { let v = (c % m as usize) as i64; c /= m as usize; v }).collect();
                mat_vec(&a, &x, m) == zero
            }).count();
            prop_assert_eq!(kernel_size as usize, count);
        }
    }
}
