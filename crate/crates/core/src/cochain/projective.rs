//! Projective representations with a given 2-cocycle, counted and measured
//! through a central extension.

use serde::Serialize;

use super::Cochain;
use crate::error::{Error, Result};
use crate::group::{CharacterData, FiniteGroup};

/// `E = Z_m ×_ψ H` on pairs `(j, h)` (index `j·|H| + pos(h)`) with
/// `(j₁,h₁)(j₂,h₂) = (j₁ + j₂ + m·ψ(h₁,h₂), h₁h₂)`, where `m` is the modulus
/// of `ψ`. The element `(1, e)` has index `|H|` when `m > 1`.
pub fn central_extension(grp: &FiniteGroup, psi: &Cochain, cap: usize) -> Result<FiniteGroup> {
    if let Some((args, value)) = psi.cocycle_violation(grp) {
        return Err(Error::NotCocycle { args, value: value.to_string() });
    }
    let h = psi.domain();
    let k = h.order();
    let m = psi.modulus();
    let n = k * m as usize;
    if n > cap {
        return Err(Error::CapExceeded { cap, got: n });
    }
    let mem = h.members();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (j1, p1) = (x / k, x % k);
        for y in 0..n {
            let (j2, p2) = (y / k, y % k);
            let c = psi.scaled(&[mem[p1], mem[p2]], m);
            let j = (j1 as i64 + j2 as i64 + c).rem_euclid(m) as usize;
            let p = h.position(grp.mul(mem[p1], mem[p2])).expect("subgroup closed");
            table[x * n + y] = (j * k + p) as u32;
        }
    }
    FiniteGroup::from_trusted_table(format!("Z{m}.H{k}"), n, table)
}

/// Number of `ψ`-regular conjugacy classes of `H`: classes of `h` with
/// `ψ(h,x) = ψ(x,h)` for every `x` centralizing `h`. Equals the number of
/// irreducible `ψ`-projective representations.
pub fn regular_class_count(grp: &FiniteGroup, psi: &Cochain) -> usize {
    let h = psi.domain();
    let sub = grp.restrict_to(h);
    let mem = h.members();
    let m = psi.modulus();
    sub.conjugacy_classes()
        .iter()
        .filter(|class| {
            let x = mem[class[0]];
            h.members()
                .iter()
                .filter(|&&y| grp.mul(x, y) == grp.mul(y, x))
                .all(|&y| psi.scaled(&[x, y], m) == psi.scaled(&[y, x], m))
        })
        .count()
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectiveDegrees {
    pub modulus: i64,
    pub extension_order: usize,
    /// Degrees of the irreducible `ψ`-projective representations, ascending.
    pub degrees: Vec<usize>,
}

/// Degrees of irreducible `ψ`-projective representations: the irreducibles of
/// the central extension on which `(1, e)` acts by a fixed primitive `m`-th
/// root of unity. Galois conjugation permutes the primitive roots without
/// changing degrees, so the choice of root does not matter.
pub fn projective_degrees(grp: &FiniteGroup, psi: &Cochain, cap: usize) -> Result<ProjectiveDegrees> {
    let ext = central_extension(grp, psi, cap)?;
    let data = CharacterData::compute(&ext, cap)?;
    let m = psi.modulus();
    let degrees = if m == 1 {
        data.degrees.clone()
    } else {
        let z = psi.domain().order();
        let zeta = crate::group::primitive_root_of_unity_mod(m as u64, data.prime);
        let cz = data.class_of[z];
        let mut d: Vec<usize> = data
            .central
            .iter()
            .zip(&data.degrees)
            .filter(|(omega, _)| omega[cz] == zeta)
            .map(|(_, &d)| d)
            .collect();
        d.sort_unstable();
        d
    };
    Ok(ProjectiveDegrees { modulus: m, extension_order: ext.order(), degrees })
}
