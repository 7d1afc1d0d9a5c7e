use serde::Serialize;

use super::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct BuiltinGroupInfo {
    pub name: String,
    pub order: usize,
    pub generators: Vec<String>,
}

/// Named groups offered by `builtin:<name>`.
pub fn catalog() -> Vec<BuiltinGroupInfo> {
    ["Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "S3", "D8", "Q8", "A4", "S4", "S3xS3", "D8xD8"]
        .iter()
        .map(|&name| {
            let g = builtin_group(name).expect("catalog entries build");
            BuiltinGroupInfo {
                name: name.to_string(),
                order: g.order(),
                generators: g.generator_names().iter().map(|(n, _)| n.clone()).collect(),
            }
        })
        .collect()
}

/// Builds `Z<n>`, `S<n>`, `A<n>`, `D<2n>`, `Q8` and `x`-separated direct
/// products of these (e.g. `Z2xZ4`, `S3xS3`).
pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut g = atomic(parts[0])?;
        for (i, p) in parts.iter().enumerate().skip(1) {
            let h = atomic(p)?;
            let suffix = "'".repeat(i);
            let names = g
                .generator_names()
                .iter()
                .map(|(n, x)| (n.clone(), x * h.order()))
                .chain(h.generator_names().iter().map(|(n, y)| (format!("{n}{suffix}"), *y)))
                .collect();
            g = g.direct_product(&h).with_generator_names(names);
        }
        return Ok(g.with_name(name));
    }
    atomic(name)
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(a, b);
    p
}

fn with_names(g: FiniteGroup, named: &[(&str, Vec<usize>)]) -> FiniteGroup {
    let names = named
        .iter()
        .map(|(n, p)| (n.to_string(), g.find_permutation(p).expect("generator is an element")))
        .collect();
    g.with_generator_names(names)
}

fn atomic(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let (kind, num) = name.split_at(1.min(name.len()));
    let n: usize = num.parse().map_err(|_| unknown())?;
    let cap = DEFAULT_ORDER_CAP;
    match (kind, n) {
        ("Z", n) if n >= 1 => {
            let a = cycle(n);
            let g = FiniteGroup::from_permutations(name, n, std::slice::from_ref(&a), cap)?;
            Ok(with_names(g, &[("a", a)]))
        }
        ("S", n) if (2..=7).contains(&n) => {
            let (t, c) = (transposition(n, 0, 1), cycle(n));
            let g = FiniteGroup::from_permutations(name, n, &[t.clone(), c.clone()], cap)?;
            Ok(with_names(g, &[("t", t), ("c", c)]))
        }
        ("A", n) if (3..=7).contains(&n) => {
            let gens: Vec<Vec<usize>> = (2..n)
                .map(|k| {
                    let mut p: Vec<usize> = (0..n).collect();
                    p[0] = 1;
                    p[1] = k;
                    p[k] = 0;
                    p
                })
                .collect();
            let g = FiniteGroup::from_permutations(name, n, &gens, cap)?;
            let named: Vec<(String, Vec<usize>)> =
                gens.iter().enumerate().map(|(i, p)| (format!("c{}", i + 1), p.clone())).collect();
            let refs: Vec<(&str, Vec<usize>)> = named.iter().map(|(s, p)| (s.as_str(), p.clone())).collect();
            Ok(with_names(g, &refs))
        }
        ("D", m) if m >= 4 && m % 2 == 0 => {
            let k = m / 2;
            let r = cycle(k);
            // reflection fixing point 0
            let s: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
            let g = FiniteGroup::from_permutations(name, k, &[r.clone(), s.clone()], cap)?;
            Ok(with_names(g, &[("r", r), ("s", s)]))
        }
        ("Q", 8) => {
            // right regular representation on ±1, ±i, ±j, ±k (index 4·sign + unit)
            const UNIT: [[(usize, usize); 4]; 4] = [
                [(0, 0), (0, 1), (0, 2), (0, 3)],
                [(0, 1), (1, 0), (0, 3), (1, 2)],
                [(0, 2), (1, 3), (1, 0), (0, 1)],
                [(0, 3), (0, 2), (1, 1), (1, 0)],
            ];
            let mul = |x: usize, y: usize| {
                let (s, u) = UNIT[x % 4][y % 4];
                4 * ((x / 4 + y / 4 + s) % 2) + u
            };
            let i: Vec<usize> = (0..8).map(|x| mul(x, 1)).collect();
            let j: Vec<usize> = (0..8).map(|x| mul(x, 2)).collect();
            let g = FiniteGroup::from_permutations(name, 8, &[i.clone(), j.clone()], cap)?;
            Ok(with_names(g, &[("i", i), ("j", j)]))
        }
        _ => Err(unknown()),
    }
}
