//! The category `C(G, ω, H, ψ)` of `k^ψ[H]`-bimodules in `Vec_G^ω`: simple
//! objects, grading, nilpotency, invertible objects and universal grading.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::based_ring::double_coset_ring;
use crate::cochain::{
    beta, character_group, check_restriction, nu, projective_degrees, psi_g, regular_class_count, trivialize,
    CharacterGroup, Cochain,
};
use crate::error::{Error, Result};
use crate::group::{DoubleCosetDecomposition, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};

/// Validated input `(G, ω, H, ψ)` with its double cosets; the representative
/// of each double coset is its minimal element, so `u(H1H) = 1`.
#[derive(Clone, Debug)]
pub struct GTCategoryData {
    g: FiniteGroup,
    omega: Cochain,
    h: Subgroup,
    psi: Cochain,
    cosets: DoubleCosetDecomposition,
    cap: usize,
}

impl GTCategoryData {
    pub fn new(g: FiniteGroup, omega: Cochain, h: Subgroup, psi: Cochain) -> Result<GTCategoryData> {
        Self::validate(&g, &omega, &h, &psi)?;
        let cosets = g.double_cosets(&h);
        Ok(GTCategoryData { g, omega, h, psi, cosets, cap: DEFAULT_ORDER_CAP })
    }

    /// `C(G, 0, H, 0)`.
    pub fn untwisted(g: FiniteGroup, h: Subgroup) -> GTCategoryData {
        let omega = Cochain::zero(3, &g.whole());
        let psi = Cochain::zero(2, &h);
        let cosets = g.double_cosets(&h);
        GTCategoryData { g, omega, h, psi, cosets, cap: DEFAULT_ORDER_CAP }
    }

    /// Size cap for the central extensions built by [`Self::enumerate_simples`].
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// `ω` a normalized 3-cocycle on `G`, `ψ` a normalized 2-cochain on `H`
    /// with `dψ = ω|_H`. Reports the first failing tuple.
    pub fn validate(g: &FiniteGroup, omega: &Cochain, h: &Subgroup, psi: &Cochain) -> Result<()> {
        if omega.degree() != 3 {
            return Err(Error::BadDegree(omega.degree()));
        }
        if psi.degree() != 2 {
            return Err(Error::BadDegree(psi.degree()));
        }
        if omega.domain().order() != g.order() {
            return Err(Error::NotSubgroup("omega must be defined on all of G".into()));
        }
        if psi.domain() != h {
            return Err(Error::NotSubgroup("psi must be defined on H".into()));
        }
        if let Some(args) = omega.normalization_violation() {
            return Err(Error::NotNormalized(args));
        }
        if let Some(args) = psi.normalization_violation() {
            return Err(Error::NotNormalized(args));
        }
        if let Some((args, value)) = omega.cocycle_violation(g) {
            return Err(Error::NotCocycle { args, value: value.to_string() });
        }
        check_restriction(g, omega, psi)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.h
    }

    pub fn psi(&self) -> &Cochain {
        &self.psi
    }

    pub fn cosets(&self) -> &DoubleCosetDecomposition {
        &self.cosets
    }

    pub fn representatives(&self) -> &[usize] {
        self.cosets.representatives()
    }

    pub fn is_untwisted(&self) -> bool {
        self.omega.is_zero() && self.psi.is_zero()
    }

    /// `H^g = H ∩ gHg⁻¹`.
    pub fn h_g(&self, g: usize) -> Subgroup {
        self.g.intersection_with_conjugate(&self.h, g)
    }

    pub fn psi_g(&self, g: usize) -> Cochain {
        psi_g(&self.g, &self.omega, &self.psi, g)
    }

    pub fn beta(&self, g1: usize, g2: usize) -> Result<Cochain> {
        beta(&self.g, &self.cosets, &self.omega, &self.psi, g1, g2)
    }

    /// Simple objects: pairs `(g, ρ)` with `g` a representative and `ρ` an
    /// irreducible `ψ^g`-projective representation of `H^g`.
    pub fn enumerate_simples(&self) -> Result<Vec<SimpleObject>> {
        let mut out = Vec::new();
        for (coset, &g) in self.representatives().iter().enumerate() {
            let hg = self.h_g(g);
            let pg = self.psi_g(g);
            let count = regular_class_count(&self.g, &pg);
            let degrees = projective_degrees(&self.g, &pg, self.cap)?.degrees;
            if degrees.len() != count {
                return Err(Error::InvalidRep(format!(
                    "coset {coset}: {} projective irreducibles found but {count} regular classes",
                    degrees.len()
                )));
            }
            let index = self.h.order() / hg.order();
            for (rep_label, &d) in degrees.iter().enumerate() {
                out.push(SimpleObject { g, coset, hg_order: hg.order(), rep_label, dim_rho: d, fpdim: index * d });
            }
        }
        Ok(out)
    }

    /// Double-coset grading of the simples.
    pub fn grading(&self, simples: &[SimpleObject]) -> Result<Grading> {
        let reps = self.representatives();
        let components: Vec<GradingComponent> = reps
            .iter()
            .enumerate()
            .map(|(i, &g)| {
                let fpdims: Vec<usize> = simples.iter().filter(|s| s.coset == i).map(|s| s.fpdim).collect();
                GradingComponent {
                    coset: i,
                    representative: g,
                    size: self.cosets.sizes()[i],
                    dim_sum: fpdims.iter().map(|d| d * d).sum(),
                    fpdims,
                }
            })
            .collect();
        let psi1_trivial = trivialize(&self.g, &self.psi_g(0))?.trivial;
        let h_class_count = self.g.restrict_to(&self.h).class_count();
        Ok(Grading {
            trivial_component_simples: components[0].fpdims.len(),
            h_class_count,
            psi1_trivial,
            faithful: components.iter().all(|c| !c.fpdims.is_empty()),
            dimensions_match: components.iter().all(|c| c.dim_sum == c.size),
            components,
        })
    }

    /// Nilpotency by the normal closure of `H`, cross-checked against the
    /// based-ring route (adjoint series of `R(G,H)` plus nilpotency of `H`).
    pub fn nilpotency(&self) -> Result<NilpotencyReport> {
        let closure = self.g.normal_closure(&self.h);
        let closure_info = self.g.restrict_to(&closure).nilpotency();
        let h_info = self.g.restrict_to(&self.h).nilpotency();
        let series = self.g.successive_normal_closures(&self.h);
        let ring = double_coset_ring(&self.g, &self.h)?;
        let adjoint = ring.ring.adjoint_series();
        let ring_route = adjoint.nilpotent && h_info.nilpotent;
        let nilpotent = closure_info.nilpotent;
        let (lower, upper) = match (nilpotent, h_info.class, series.defect) {
            (true, Some(c), Some(d)) => (Some(c), Some(c + d)),
            _ => (None, None),
        };
        Ok(NilpotencyReport {
            nilpotent,
            normal_closure_order: closure.order(),
            normal_closure_class: closure_info.class,
            h_class: h_info.class,
            defect: series.defect,
            ring_class: adjoint.class,
            lower,
            upper,
            ring_route,
            routes_agree: ring_route == nilpotent,
        })
    }

    /// The group `K ⋉_ν Ĥ` of invertible objects, with its multiplication
    /// table checked to be a group.
    pub fn invertible_group(&self) -> Result<InvertibleGroup> {
        let grp = &self.g;
        let normalizer = grp.normalizer(&self.h);
        let mut k = Vec::new();
        let mut eta = BTreeMap::new();
        for &g in self.representatives() {
            if !normalizer.contains(g) {
                continue;
            }
            let t = trivialize(grp, &self.psi_g(g))?;
            if let Some(w) = t.witness {
                k.push(g);
                eta.insert(g, w);
            }
        }
        debug_assert_eq!(k.first(), Some(&0));
        eta.insert(0, self.beta(0, 0)?.neg());
        for &g1 in eta.keys() {
            for &g2 in &k {
                let g3 = self.cosets.rep_of(grp.mul(g1, g2));
                if !eta.contains_key(&g3) {
                    return Err(Error::Unsupported(format!("K is not closed: u({g1}·{g2}) = {g3}")));
                }
            }
        }
        let characters = character_group(grp, &self.h);
        let mut nu_table = BTreeMap::new();
        for &g1 in &k {
            for &g2 in &k {
                let v = nu(grp, &self.cosets, &self.omega, &self.psi, &eta, g1, g2)?;
                if let Some((args, value)) = v.cocycle_violation(grp) {
                    return Err(Error::NotCocycle { args, value: value.to_string() });
                }
                nu_table.insert((g1, g2), v);
            }
        }
        let nh = characters.order();
        let k_index: BTreeMap<usize, usize> = k.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let conj: Vec<Vec<usize>> = k
            .iter()
            .map(|&g| {
                characters
                    .elements
                    .iter()
                    .map(|chi| characters.index_of(&chi.conjugate(grp, g).expect("g normalizes H")).expect("character"))
                    .collect()
            })
            .collect();
        let n = k.len() * nh;
        let mut table = vec![vec![0usize; n]; n];
        for (i1, &g1) in k.iter().enumerate() {
            for (i2, &g2) in k.iter().enumerate() {
                let g3 = self.cosets.rep_of(grp.mul(g1, g2));
                let shift = &nu_table[&(g1, g2)];
                for c1 in 0..nh {
                    for c2 in 0..nh {
                        let chi =
                            shift.add(&characters.elements[c1]).add(&characters.elements[conj[i1][c2]]);
                        let c3 = characters.index_of(&chi).expect("product of characters");
                        table[i1 * nh + c1][i2 * nh + c2] = k_index[&g3] * nh + c3;
                    }
                }
            }
        }
        check_group_table(&table)?;
        Ok(InvertibleGroup { k, eta, nu: nu_table, characters, table })
    }

    /// `U(C) ≅ G/H ⋉ Z(H)` for `C(G, 1, H, 1)` with `H` normal.
    pub fn universal_grading(&self) -> Result<UniversalGrading> {
        if !self.is_untwisted() {
            return Err(Error::Unsupported("universal grading is only available for ω = 0, ψ = 0".into()));
        }
        if !self.g.is_normal(&self.h) {
            return Err(Error::Unsupported("universal grading is only available for normal H".into()));
        }
        let grp = &self.g;
        let (quotient, proj) = grp.quotient(&self.h)?;
        let center = grp.center_of(&self.h);
        let nz = center.order();
        let nq = quotient.order();
        // Conjugation action of each coset on Z(H), checked against every
        // coset member.
        let mut action = vec![Vec::new(); nq];
        let mut well_defined = true;
        for x in 0..grp.order() {
            let images: Vec<usize> =
                center.members().iter().map(|&z| center.position(grp.conjugate(x, z)).expect("Z(H) is characteristic")).collect();
            let q = proj[x];
            if action[q].is_empty() {
                action[q] = images;
            } else if action[q] != images {
                well_defined = false;
            }
        }
        let zm = center.members();
        let rows: Vec<Vec<usize>> = (0..nq * nz)
            .map(|a| {
                let (q1, z1) = (a / nz, a % nz);
                (0..nq * nz)
                    .map(|b| {
                        let (q2, z2) = (b / nz, b % nz);
                        let z = grp.mul(zm[z1], zm[action[q1][z2]]);
                        quotient.mul(q1, q2) * nz + center.position(z).unwrap()
                    })
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_table("U", &rows)?;
        let h_group = grp.restrict_to(&self.h);
        let h_center = h_group.center();
        let (h_mod_center, _) = h_group.quotient(&h_center)?;
        Ok(UniversalGrading {
            quotient,
            center: grp.restrict_to(&center),
            action,
            well_defined,
            predicted_order: nz * grp.order() / self.h.order(),
            adjoint_component_simples: h_mod_center.class_count(),
            group,
        })
    }
}

/// `C(G×G, 0, Δ(G), 0) ≃ Z(Vec_G)`. Fails if the double cosets of the
/// diagonal do not match the conjugacy classes of `G`.
pub fn drinfeld_double_data(g: &FiniteGroup) -> Result<GTCategoryData> {
    let n = g.order();
    if n * n > DEFAULT_ORDER_CAP {
        return Err(Error::CapExceeded { cap: DEFAULT_ORDER_CAP, got: n * n });
    }
    let square = g.direct_product(g);
    let diag = g.diagonal_in_square(&square);
    let data = GTCategoryData::untwisted(square, diag);
    if data.cosets.len() != g.class_count() {
        return Err(Error::InvalidGroup("double cosets of the diagonal differ from conjugacy classes".into()));
    }
    Ok(data)
}

fn check_group_table(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::InvalidGroup("invertible objects: no unit".into()))?;
    for x in 0..n {
        if !(0..n).any(|y| table[x][y] == unit && table[y][x] == unit) {
            return Err(Error::InvalidGroup(format!("invertible objects: element {x} has no inverse")));
        }
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::NotAssociative(x, y, z));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleObject {
    /// Double-coset representative.
    pub g: usize,
    pub coset: usize,
    pub hg_order: usize,
    /// Index among the irreducible `ψ^g`-projective representations of `H^g`.
    pub rep_label: usize,
    pub dim_rho: usize,
    pub fpdim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradingComponent {
    pub coset: usize,
    pub representative: usize,
    pub size: usize,
    pub fpdims: Vec<usize>,
    pub dim_sum: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Grading {
    pub components: Vec<GradingComponent>,
    pub trivial_component_simples: usize,
    pub h_class_count: usize,
    /// `ψ^1` is a coboundary, so the trivial component is `Rep(H)`.
    pub psi1_trivial: bool,
    /// Every double coset supports a simple.
    pub faithful: bool,
    /// `Σ fpdim² = |X|` on every component.
    pub dimensions_match: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyReport {
    pub nilpotent: bool,
    pub normal_closure_order: usize,
    pub normal_closure_class: Option<usize>,
    pub h_class: Option<usize>,
    pub defect: Option<usize>,
    pub ring_class: Option<usize>,
    /// `cl(H) ≤ cl(C) ≤ cl(H) + defect` when nilpotent.
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub ring_route: bool,
    pub routes_agree: bool,
}

/// `K ⋉_ν Ĥ`: element `(K[i], Ĥ[c])` has index `i·|Ĥ| + c` and stands for
/// the invertible simple `(K[i], η_{K[i]} + Ĥ[c])`.
#[derive(Clone, Debug)]
pub struct InvertibleGroup {
    pub k: Vec<usize>,
    pub eta: BTreeMap<usize, Cochain>,
    pub nu: BTreeMap<(usize, usize), Cochain>,
    pub characters: CharacterGroup,
    pub table: Vec<Vec<usize>>,
}

impl InvertibleGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// `(g, ρ)` for an element index.
    pub fn element(&self, x: usize) -> (usize, Cochain) {
        let nh = self.characters.order();
        let g = self.k[x / nh];
        (g, self.eta[&g].add(&self.characters.elements[x % nh]))
    }

    pub fn as_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_table("K⋉Ĥ", &self.table)
    }
}

#[derive(Clone, Debug)]
pub struct UniversalGrading {
    pub quotient: FiniteGroup,
    pub center: FiniteGroup,
    /// `action[q][i]`: position in `Z(H)` of the conjugate of the `i`-th
    /// central element by any member of coset `q`.
    pub action: Vec<Vec<usize>>,
    pub well_defined: bool,
    pub predicted_order: usize,
    /// Number of simples in `C_ad ≅ Rep(H/Z(H))`.
    pub adjoint_component_simples: usize,
    pub group: FiniteGroup,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::zn_omega;
    use crate::group::builtin_group;
    use crate::phase::Phase;

    fn named(g: &FiniteGroup, n: &str) -> usize {
        g.generator_names().iter().find(|(m, _)| m == n).unwrap().1
    }

    fn fpdims(data: &GTCategoryData) -> Vec<usize> {
        let mut v: Vec<usize> = data.enumerate_simples().unwrap().iter().map(|s| s.fpdim).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn s3_with_transposition() {
        let g = builtin_group("S3").unwrap();
        let h = g.subgroup_generated(&[named(&g, "t")]).unwrap();
        let data = GTCategoryData::untwisted(g, h);
        let simples = data.enumerate_simples().unwrap();
        assert_eq!(fpdims(&data), vec![1, 1, 2]);
        let grading = data.grading(&simples).unwrap();
        assert_eq!(grading.components[0].fpdims, vec![1, 1]);
        assert_eq!(grading.components[1].fpdims, vec![2]);
        assert!(grading.psi1_trivial && grading.faithful && grading.dimensions_match);
        let nil = data.nilpotency().unwrap();
        assert!(!nil.nilpotent && nil.routes_agree);
        let inv = data.invertible_group().unwrap();
        assert_eq!(inv.k, vec![0]);
        assert_eq!(inv.order(), 2);
        assert!(data.universal_grading().is_err());
    }

    #[test]
    fn s3_with_a3() {
        let g = builtin_group("S3").unwrap();
        let h = g.derived_subgroup();
        let data = GTCategoryData::untwisted(g, h);
        let inv = data.invertible_group().unwrap();
        assert_eq!(inv.order(), 6);
        assert!(!inv.as_group().unwrap().is_abelian());
        let u = data.universal_grading().unwrap();
        assert_eq!(u.group.order(), 6);
        assert!(!u.group.is_abelian());
        assert!(u.well_defined);
        assert_eq!(u.adjoint_component_simples, 1);
    }

    #[test]
    fn vec_g_and_rep_g() {
        let g = builtin_group("D8").unwrap();
        let vec_g = GTCategoryData::untwisted(g.clone(), g.trivial_subgroup());
        assert_eq!(fpdims(&vec_g), vec![1; 8]);
        let inv = vec_g.invertible_group().unwrap();
        assert_eq!(inv.order(), 8);
        assert!(!inv.as_group().unwrap().is_abelian());
        assert_eq!(vec_g.universal_grading().unwrap().group.order(), 8);

        let rep_g = GTCategoryData::untwisted(g.clone(), g.whole());
        assert_eq!(fpdims(&rep_g), vec![1, 1, 1, 1, 2]);
        let u = rep_g.universal_grading().unwrap();
        assert_eq!(u.group.order(), 2);
        let nil = rep_g.nilpotency().unwrap();
        assert_eq!((nil.lower, nil.upper), (Some(2), Some(2)));
    }

    #[test]
    fn drinfeld_double_of_s3() {
        let data = drinfeld_double_data(&builtin_group("S3").unwrap()).unwrap();
        assert_eq!(data.cosets().len(), 3);
        assert_eq!(fpdims(&data), vec![1, 1, 2, 2, 2, 2, 3, 3]);
        let grading = data.grading(&data.enumerate_simples().unwrap()).unwrap();
        let mut counts: Vec<usize> = grading.components.iter().map(|c| c.fpdims.len()).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![2, 3, 3]);
        assert!(!data.nilpotency().unwrap().nilpotent);
        let z2 = drinfeld_double_data(&builtin_group("Z2").unwrap()).unwrap();
        assert_eq!(fpdims(&z2), vec![1; 4]);
    }

    #[test]
    fn validation_diagnostics() {
        let g = builtin_group("Z2").unwrap();
        let w = zn_omega(&g, 1).unwrap();
        let psi = Cochain::zero(2, &g.whole());
        assert!(matches!(
            GTCategoryData::new(g.clone(), w.clone(), g.whole(), psi.clone()),
            Err(Error::CoboundaryMismatch { .. })
        ));
        assert!(GTCategoryData::new(g.clone(), w.clone(), g.trivial_subgroup(), Cochain::zero(2, &g.trivial_subgroup())).is_ok());
        let bent = Cochain::from_fn(3, &g.whole(), |a| if a == [1, 1, 1] { Phase::new(1, 3) } else { Phase::ZERO }).unwrap();
        assert!(matches!(
            GTCategoryData::new(g.clone(), bent, g.trivial_subgroup(), Cochain::zero(2, &g.trivial_subgroup())),
            Err(Error::NotCocycle { .. })
        ));
    }

    #[test]
    fn twisted_vec_z2_is_pointed() {
        let g = builtin_group("Z2").unwrap();
        let w = zn_omega(&g, 1).unwrap();
        let t = g.trivial_subgroup();
        let data = GTCategoryData::new(g, w, t.clone(), Cochain::zero(2, &t)).unwrap();
        assert_eq!(fpdims(&data), vec![1, 1]);
        assert_eq!(data.invertible_group().unwrap().order(), 2);
    }
}
