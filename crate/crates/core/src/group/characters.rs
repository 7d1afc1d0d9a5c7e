//! Irreducible character degrees from class sums over a prime field.
//!
//! Work in `F_p` with `p ≡ 1 (mod exponent)` and `p > 2|G|`. The class
//! multiplication matrices commute and are simultaneously diagonalizable;
//! their joint eigenvectors, normalized at the identity class, are the central
//! characters `ω_χ(C) = |C| χ(g_C) / χ(1)`. The degree is recovered from
//! `|G| / χ(1)² = Σ_C ω_χ(C) ω_χ(C⁻¹) / |C|`.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Central characters and degrees of all ordinary irreducibles.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub prime: u64,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `central[χ][c]` is `ω_χ(C_c)` in `F_p`.
    pub central: Vec<Vec<u64>>,
    pub degrees: Vec<usize>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > bound`.
pub(crate) fn splitting_prime(e: u64, bound: u64) -> u64 {
    let mut p = e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
    }
    p
}

/// Reduced row echelon basis of a subspace of `F_p^r`, rows are basis vectors.
#[derive(Clone, Debug)]
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn from_vectors(mut rows: Vec<Vec<u64>>, p: u64) -> Subspace {
        let r = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..r {
            let Some(i) = (top..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(top, i);
            let s = inv_mod(rows[top][col], p);
            for x in rows[top].iter_mut() {
                *x = mul_mod(*x, s, p);
            }
            for i in 0..rows.len() {
                if i != top && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..r {
                        let t = mul_mod(f, rows[top][j], p);
                        rows[i][j] = (rows[i][j] + p - t) % p;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        Subspace { rows, pivots }
    }

    /// Coordinates of `v ∈ W` in the echelon basis.
    fn coords(&self, v: &[u64]) -> Vec<u64> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }
}

/// Characteristic polynomial (monic, low degree first) via Hessenberg reduction.
fn char_poly(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    let sub = |x: u64, y: u64| (x + p - y) % p;
    // reduce to upper Hessenberg form by similarity
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| a[i][m - 1] != 0) else { continue };
        if i != m {
            a.swap(i, m);
            for row in a.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(a[m][m - 1], p);
        for i in m + 1..n {
            let u = mul_mod(a[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul_mod(u, a[m][j], p);
                a[i][j] = sub(a[i][j], t);
            }
            for row in a.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // polys[k] = char poly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // p_k = (x - a[k-1][k-1]) p_{k-1} - Σ_{i<k-1} a[i][k-1] Π_{j=i+1}^{k-1} a[j][j-1] p_i
        let mut next = vec![0u64; k + 1];
        for (d, &c) in polys[k - 1].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], mul_mod(a[k - 1][k - 1], c, p));
        }
        let mut prod = 1u64;
        for i in (0..k - 1).rev() {
            prod = mul_mod(prod, a[i + 1][i], p);
            let f = mul_mod(prod, a[i][k - 1], p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul_mod(f, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Null space of a square matrix over `F_p`, as column vectors.
fn null_space(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(i) = (top..n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(top, i);
        let s = inv_mod(a[top][col], p);
        for x in a[top].iter_mut() {
            *x = mul_mod(*x, s, p);
        }
        for i in 0..n {
            if i != top && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..cols {
                    let t = mul_mod(f, a[top][j], p);
                    a[i][j] = (a[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

impl CharacterData {
    pub fn compute(g: &FiniteGroup, cap: usize) -> Result<CharacterData> {
        let n = g.order();
        if n > cap {
            return Err(Error::CapExceeded { cap, got: n });
        }
        let classes = g.conjugacy_classes();
        let r = classes.len();
        let mut class_of = vec![0usize; n];
        for (c, cl) in classes.iter().enumerate() {
            for &x in cl {
                class_of[x] = c;
            }
        }
        let prime = splitting_prime(g.exponent() as u64, 2 * n as u64);
        if r == n {
            return Ok(Self::abelian(g, classes, class_of, prime));
        }
        let p = prime;
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        // (M_i)_{jk} = #{(x, y) ∈ C_i × C_j : xy = z_k}
        let class_matrix = |i: usize| -> Vec<Vec<u64>> {
            let mut m = vec![vec![0u64; r]; r];
            for &x in &classes[i] {
                let xi = g.inv(x);
                for (k, &z) in reps.iter().enumerate() {
                    m[class_of[g.mul(xi, z)]][k] += 1;
                }
            }
            m
        };
        let mut spaces = vec![Subspace::from_vectors(
            (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect(),
            p,
        )];
        let mut finished = Vec::new();
        for i in 1..r {
            if spaces.is_empty() {
                break;
            }
            let m = class_matrix(i);
            let mut next = Vec::new();
            for w in spaces {
                let k = w.dim();
                // restriction of M_i to W, columns are coordinates of M_i b_j
                let images: Vec<Vec<u64>> = w
                    .rows
                    .iter()
                    .map(|b| {
                        let mb: Vec<u64> = (0..r)
                            .map(|row| m[row].iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + mul_mod(x % p, y, p)) % p))
                            .collect();
                        w.coords(&mb)
                    })
                    .collect();
                let restricted: Vec<Vec<u64>> = (0..k).map(|a| (0..k).map(|b| images[b][a]).collect()).collect();
                let poly = char_poly(restricted.clone(), p);
                let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&poly, x, p) == 0).collect();
                for lambda in roots {
                    let mut shifted = restricted.clone();
                    for (d, row) in shifted.iter_mut().enumerate() {
                        row[d] = (row[d] + p - lambda) % p;
                    }
                    let vecs: Vec<Vec<u64>> = null_space(shifted, p)
                        .into_iter()
                        .map(|c| {
                            (0..r).map(|t| c.iter().zip(&w.rows).fold(0u64, |acc, (&ci, b)| (acc + mul_mod(ci, b[t], p)) % p)).collect()
                        })
                        .collect();
                    let sub = Subspace::from_vectors(vecs, p);
                    if sub.dim() == 1 {
                        finished.push(sub);
                    } else {
                        next.push(sub);
                    }
                }
            }
            spaces = next;
        }
        if !spaces.is_empty() {
            return Err(Error::InvalidGroup("class algebra did not split".into()));
        }
        let class_sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
        let inverse_class: Vec<usize> = reps.iter().map(|&x| class_of[g.inv(x)]).collect();
        let mut central = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        for w in finished {
            let v = &w.rows[0];
            let s = inv_mod(v[0], p);
            let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, s, p)).collect();
            let total = (0..r).fold(0u64, |acc, c| {
                let t = mul_mod(mul_mod(omega[c], omega[inverse_class[c]], p), inv_mod(class_sizes[c] % p, p), p);
                (acc + t) % p
            });
            let d2 = mul_mod(n as u64 % p, inv_mod(total, p), p);
            let d = (d2 as f64).sqrt().round() as u64;
            if d * d != d2 || d == 0 {
                return Err(Error::InvalidGroup(format!("degree recovery failed (d² = {d2} mod {p})")));
            }
            central.push(omega);
            degrees.push(d as usize);
        }
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by_key(|&i| (degrees[i], central[i].clone()));
        let central = order.iter().map(|&i| central[i].clone()).collect();
        let degrees = order.iter().map(|&i| degrees[i]).collect();
        Ok(CharacterData { prime, classes, class_of, central, degrees })
    }

    fn abelian(g: &FiniteGroup, classes: Vec<Vec<usize>>, class_of: Vec<usize>, p: u64) -> CharacterData {
        // Characters are homomorphisms into the e-th roots of unity of F_p.
        let n = g.order();
        let e = g.exponent() as u64;
        let zeta = primitive_root_of_unity(e, p);
        // Decompose along a generating set: a character is fixed by the images
        // of the generators, subject to relations; enumerate by extension.
        let mut chars: Vec<Vec<u64>> = vec![vec![1; n]];
        let mut span = g.trivial_subgroup();
        for &x in g.generators() {
            if span.contains(x) {
                continue;
            }
            // smallest k with x^k ∈ span
            let mut k = 1;
            let mut xk = x;
            while !span.contains(xk) {
                xk = g.mul(xk, x);
                k += 1;
            }
            let old = span.members().to_vec();
            let mut next = Vec::new();
            for chi in &chars {
                // chi(x)^k must equal chi(x^k)
                let target = chi[xk];
                let step = pow_mod(zeta, e / (g.element_order(x) as u64), p);
                let ord = g.element_order(x) as u64;
                for t in 0..ord {
                    let c = pow_mod(step, t, p);
                    if pow_mod(c, k as u64, p) != target {
                        continue;
                    }
                    let mut ext = chi.clone();
                    let mut power = 1u64;
                    let mut xj = 0usize;
                    for _ in 0..k {
                        for &y in &old {
                            ext[g.mul(xj, y)] = mul_mod(power, chi[y], p);
                        }
                        xj = g.mul(xj, x);
                        power = mul_mod(power, c, p);
                    }
                    next.push(ext);
                }
            }
            chars = next;
            span.add_generator(g, x);
        }
        let mut central: Vec<Vec<u64>> = chars.into_iter().map(|chi| classes.iter().map(|c| chi[c[0]]).collect()).collect();
        central.sort();
        let degrees = vec![1; central.len()];
        CharacterData { prime: p, classes, class_of, central, degrees }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// An element of multiplicative order exactly `m` in `F_p` (`m | p - 1`).
pub(crate) fn primitive_root_of_unity(m: u64, p: u64) -> u64 {
    let factors: Vec<u64> = (2..=m).filter(|&q| m.is_multiple_of(q) && is_prime(q)).collect();
    (2..p)
        .map(|a| pow_mod(a, (p - 1) / m, p))
        .find(|&z| factors.iter().all(|&q| pow_mod(z, m / q, p) != 1))
        .unwrap_or(1)
}

/// Degrees of the ordinary irreducible representations, ascending.
pub fn irreducible_degrees(g: &FiniteGroup, cap: usize) -> Result<Vec<usize>> {
    Ok(CharacterData::compute(g, cap)?.degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, DEFAULT_ORDER_CAP};

    fn degrees(name: &str) -> Vec<usize> {
        irreducible_degrees(&builtin_group(name).unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn classical_degrees() {
        assert_eq!(degrees("S3"), vec![1, 1, 2]);
        assert_eq!(degrees("D8"), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees("Q8"), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees("A4"), vec![1, 1, 1, 3]);
        assert_eq!(degrees("S4"), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees("Z6"), vec![1; 6]);
    }

    #[test]
    fn product_groups() {
        let s3 = builtin_group("S3").unwrap();
        let d = irreducible_degrees(&s3.direct_product(&s3), 100).unwrap();
        assert_eq!(d, vec![1, 1, 1, 1, 2, 2, 2, 2, 4]);
    }

    #[test]
    fn sum_of_squares_and_divisibility() {
        for name in ["S3", "D8", "Q8", "A4", "S4", "Z2xZ2", "Z2xZ4"] {
            let g = builtin_group(name).unwrap();
            let data = CharacterData::compute(&g, DEFAULT_ORDER_CAP).unwrap();
            assert_eq!(data.degrees.len(), g.class_count());
            assert_eq!(data.degrees.iter().map(|d| d * d).sum::<usize>(), g.order());
            assert!(data.degrees.iter().all(|d| g.order().is_multiple_of(*d)));
        }
    }

    #[test]
    fn abelian_characters_are_homomorphisms() {
        let g = builtin_group("Z2xZ4").unwrap();
        let data = CharacterData::compute(&g, 100).unwrap();
        let p = data.prime;
        assert_eq!(data.central.len(), 8);
        for chi in &data.central {
            for a in 0..8 {
                for b in 0..8 {
                    let lhs = chi[data.class_of[g.mul(a, b)]];
                    let rhs = mul_mod(chi[data.class_of[a]], chi[data.class_of[b]], p);
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let mut sorted = data.central.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
    }

    #[test]
    fn cap_enforced() {
        let g = builtin_group("S4").unwrap();
        assert!(matches!(irreducible_degrees(&g, 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn prime_choice() {
        let p = splitting_prime(12, 48);
        assert!(p > 48 && (p - 1).is_multiple_of(12) && is_prime(p));
        let z = primitive_root_of_unity(12, p);
        assert_eq!(pow_mod(z, 12, p), 1);
        assert!(pow_mod(z, 6, p) != 1 && pow_mod(z, 4, p) != 1);
    }
}
