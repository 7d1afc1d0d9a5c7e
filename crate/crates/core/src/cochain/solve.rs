//! Solving `dη = ψ` over `Q/Z`, and the character group `Ĥ = Hom(H, Q/Z)`.

use super::Cochain;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::smith::diagonalize_mod;

/// Result of [`trivialize`].
#[derive(Clone, Debug)]
pub struct Trivialization {
    pub trivial: bool,
    /// Some `η` with `dη = ψ`, when one exists.
    pub witness: Option<Cochain>,
    /// Modulus the system was solved over.
    pub modulus: i64,
}

/// Coboundary matrix of degree-1 cochains on `h`: one row per pair of
/// non-identity elements, one column per non-identity element.
fn coboundary_matrix(grp: &FiniteGroup, h: &Subgroup) -> Vec<Vec<i64>> {
    let mem = &h.members()[1..];
    let cols = mem.len();
    let mut rows = Vec::with_capacity(cols * cols);
    for &a in mem {
        for &b in mem {
            let mut row = vec![0i64; cols];
            row[h.position(a).unwrap() - 1] += 1;
            row[h.position(b).unwrap() - 1] += 1;
            let ab = grp.mul(a, b);
            if ab != 0 {
                row[h.position(ab).unwrap() - 1] -= 1;
            }
            rows.push(row);
        }
    }
    rows
}

/// Decides whether the normalized 2-cocycle `psi` is a coboundary.
///
/// If `ψ = dη` then `m·η` is a homomorphism for `m` the modulus of `ψ`, so
/// `η` takes values in `(1/(m·|H|))Z/Z`; the linear system is solved exactly
/// over that modulus.
pub fn trivialize(grp: &FiniteGroup, psi: &Cochain) -> Result<Trivialization> {
    if psi.degree() != 2 {
        return Err(Error::BadDegree(psi.degree()));
    }
    if let Some((args, value)) = psi.cocycle_violation(grp) {
        return Err(Error::NotCocycle { args, value: value.to_string() });
    }
    let h = psi.domain();
    let modulus = psi.modulus() * h.order() as i64;
    if psi.is_zero() {
        return Ok(Trivialization { trivial: true, witness: Some(Cochain::zero(1, h)), modulus });
    }
    let a = coboundary_matrix(grp, h);
    let mem = &h.members()[1..];
    let b: Vec<i64> = mem.iter().flat_map(|&x| mem.iter().map(move |&y| (x, y))).map(|(x, y)| psi.scaled(&[x, y], modulus)).collect();
    let d = diagonalize_mod(&a, &[b], modulus);
    Ok(match d.solve(0) {
        Some(x) => {
            let mut values = Vec::with_capacity(h.order());
            values.push(0);
            values.extend(x);
            let eta = Cochain::from_numerators(1, h, modulus, values);
            debug_assert_eq!(eta.coboundary(grp).unwrap(), *psi);
            Trivialization { trivial: true, witness: Some(eta), modulus }
        }
        None => Trivialization { trivial: false, witness: None, modulus },
    })
}

/// `Ĥ` as an explicit finite abelian group of 1-cochains.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub generators: Vec<Cochain>,
    pub orders: Vec<i64>,
    /// All characters; index 0 is the trivial one.
    pub elements: Vec<Cochain>,
}

impl CharacterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, chi: &Cochain) -> Option<usize> {
        self.elements.iter().position(|c| c == chi)
    }
}

/// Homomorphisms `H → Q/Z`: the kernel of the degree-1 coboundary modulo the
/// exponent of `H`, i.e. the dual of the abelianization.
pub fn character_group(grp: &FiniteGroup, h: &Subgroup) -> CharacterGroup {
    let exponent = h.members().iter().fold(1usize, |acc, &x| num_integer::lcm(acc, grp.element_order(x))) as i64;
    if h.order() == 1 {
        let z = Cochain::zero(1, h);
        return CharacterGroup { generators: Vec::new(), orders: Vec::new(), elements: vec![z] };
    }
    let a = coboundary_matrix(grp, h);
    let d = diagonalize_mod(&a, &[], exponent);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (v, order) in d.kernel() {
        let mut values = vec![0];
        values.extend(v);
        generators.push(Cochain::from_numerators(1, h, exponent, values));
        orders.push(order);
    }
    let mut elements = vec![Cochain::zero(1, h)];
    for (g, &o) in generators.iter().zip(&orders) {
        let mut next = Vec::with_capacity(elements.len() * o as usize);
        let mut power = Cochain::zero(1, h);
        for _ in 0..o {
            next.extend(elements.iter().map(|e| e.add(&power)));
            power = power.add(g);
        }
        elements = next;
    }
    CharacterGroup { generators, orders, elements }
}
