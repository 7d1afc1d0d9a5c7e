//! The twisted cochains attached to `C(G, ω, H, ψ)`: `ψ^g` on `H^g`, and
//! `β(g₁, g₂)`, `ν(g₁, g₂)` on `H` for `g₁, g₂ ∈ N_G(H)`.
//!
//! Everything is written additively: a product of `ω`/`ψ` factors becomes a
//! signed sum of phases.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::Cochain;
use crate::error::{Error, Result};
use crate::group::{DoubleCosetDecomposition, FiniteGroup};
use crate::phase::Phase;

/// Checks `dψ = ω|_{H×H×H}` exhaustively.
pub fn check_restriction(grp: &FiniteGroup, omega: &Cochain, psi: &Cochain) -> Result<()> {
    let h = psi.domain();
    let m = psi.modulus().lcm(&omega.modulus());
    let mem = h.members();
    for &a in mem {
        for &b in mem {
            let ab = grp.mul(a, b);
            for &c in mem {
                let dpsi = psi.scaled(&[b, c], m) - psi.scaled(&[ab, c], m) + psi.scaled(&[a, grp.mul(b, c)], m)
                    - psi.scaled(&[a, b], m);
                let w = omega.scaled(&[a, b, c], m);
                if (dpsi - w).rem_euclid(m) != 0 {
                    return Err(Error::CoboundaryMismatch {
                        args: vec![a, b, c],
                        dpsi: Phase::new(dpsi, m).to_string(),
                        omega: Phase::new(w, m).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// `ψ^g` on `H^g = H ∩ gHg⁻¹`:
///
/// `ψ^g(h₁,h₂) = ψ(h₁,h₂) ψ(g⁻¹h₂⁻¹g, g⁻¹h₁⁻¹g) ω(h₁,h₂,g) ω(h₁,h₂g,g⁻¹h₂⁻¹g) / ω(h₁h₂g, g⁻¹h₂⁻¹g, g⁻¹h₁⁻¹g)`.
///
/// Requires `dψ = ω|_H` (see [`check_restriction`]).
pub fn psi_g(grp: &FiniteGroup, omega: &Cochain, psi: &Cochain, g: usize) -> Cochain {
    let h = psi.domain();
    let hg = grp.intersection_with_conjugate(h, g);
    let m = psi.modulus().lcm(&omega.modulus());
    let c = |x: usize| grp.conjugate_inv(g, x);
    Cochain::from_fn(2, &hg, |args| {
        let (h1, h2) = (args[0], args[1]);
        let c1 = c(grp.inv(h1));
        let c2 = c(grp.inv(h2));
        let v = psi.scaled(&[h1, h2], m)
            + psi.scaled(&[c2, c1], m)
            + omega.scaled(&[h1, h2, g], m)
            + omega.scaled(&[h1, grp.mul(h2, g), c2], m)
            - omega.scaled(&[grp.mul_all(&[h1, h2, g]), c2, c1], m);
        Phase::new(v, m)
    })
    .expect("degree 2 table")
}

fn require_normalizer(grp: &FiniteGroup, psi: &Cochain, gs: &[usize]) -> Result<()> {
    for &g in gs {
        if !grp.normalizes(g, psi.domain()) {
            return Err(Error::NotNormalizing(g));
        }
    }
    Ok(())
}

fn beta_impl(
    grp: &FiniteGroup,
    cosets: &DoubleCosetDecomposition,
    omega: &Cochain,
    psi: &Cochain,
    g1: usize,
    g2: usize,
    associator_terms: bool,
) -> Result<Cochain> {
    require_normalizer(grp, psi, &[g1, g2])?;
    let h = psi.domain();
    let g12 = grp.mul(g1, g2);
    let g3 = cosets.rep_of(g12);
    let k = grp.mul(grp.inv(g12), g3);
    debug_assert!(h.contains(k));
    let m = psi.modulus().lcm(&omega.modulus());
    let w = |a: usize, b: usize, c: usize| omega.scaled(&[a, b, c], m);
    let p = |a: usize, b: usize| psi.scaled(&[a, b], m);
    let g2k = grp.mul(g2, k);
    Cochain::from_fn(1, h, |args| {
        let x = args[0];
        let a = grp.conjugate_inv(g1, x); // g₁⁻¹hg₁
        let b = grp.conjugate_inv(g2, a); // g₂⁻¹g₁⁻¹hg₁g₂
        let (ai, bi) = (grp.inv(a), grp.inv(b));
        let bk = grp.mul(b, k);
        let c3 = grp.conjugate_inv(g3, grp.inv(x)); // g₃⁻¹h⁻¹g₃
        let mut v = p(bk, c3) - p(ai, a) - p(bi, bk)
            + w(a, ai, a)
            + w(g1, a, ai)
            + w(a, g2, k)
            - w(g2, b, k)
            + w(b, bi, bk)
            + w(g2, b, bi)
            - w(g2, bk, c3);
        if associator_terms {
            // associator factors from contracting B ⊗_A B′ over A = k^ψ[H]
            v += w(x, g1, g2k) - w(g1, a, g2k) - w(g1, grp.mul(g2, bk), c3);
        }
        Phase::new(v, m)
    })
}

/// `β(g₁, g₂) : H → k^×` for `g₁, g₂ ∈ N_G(H)`, with `g₃ = u(g₁g₂) = g₁g₂k`
/// taken from the stored double-coset representatives.
///
/// Satisfies `ψ^{g₃} = dβ(g₁,g₂) + ψ^{g₁} + ᵍ¹(ψ^{g₂})` and equals the phase
/// produced by the tensor product of the corresponding invertible bimodules.
pub fn beta(
    grp: &FiniteGroup,
    cosets: &DoubleCosetDecomposition,
    omega: &Cochain,
    psi: &Cochain,
    g1: usize,
    g2: usize,
) -> Result<Cochain> {
    beta_impl(grp, cosets, omega, psi, g1, g2, true)
}

/// The ten-factor expression without the three associator factors of
/// [`beta`]. Kept for comparison: it violates the β-relation once `ω` is
/// nontrivial on the relevant triples.
pub fn beta_as_printed(
    grp: &FiniteGroup,
    cosets: &DoubleCosetDecomposition,
    omega: &Cochain,
    psi: &Cochain,
    g1: usize,
    g2: usize,
) -> Result<Cochain> {
    beta_impl(grp, cosets, omega, psi, g1, g2, false)
}

/// `ν(g₁, g₂) = η_{g₁} + ᵍ¹η_{g₂} − η_{g₁·g₂} + β(g₁, g₂)` where
/// `g₁·g₂ = u(g₁g₂)`.
pub fn nu(
    grp: &FiniteGroup,
    cosets: &DoubleCosetDecomposition,
    omega: &Cochain,
    psi: &Cochain,
    eta: &BTreeMap<usize, Cochain>,
    g1: usize,
    g2: usize,
) -> Result<Cochain> {
    let g3 = cosets.rep_of(grp.mul(g1, g2));
    let get = |g: usize| eta.get(&g).ok_or_else(|| Error::Unsupported(format!("no η chosen for {g}")));
    let b = beta(grp, cosets, omega, psi, g1, g2)?;
    Ok(get(g1)?.add(&get(g2)?.conjugate(grp, g1)?).sub(get(g3)?).add(&b))
}
