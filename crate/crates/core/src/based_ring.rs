//! Z₊-based rings with involution and the double coset ring `R(G, H)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{DoubleCosetDecomposition, FiniteGroup, Subgroup};

/// A based ring with basis `0..r`, unit `0` and involution `star`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRing {
    labels: Vec<String>,
    rank: usize,
    n: Vec<u32>,
    star: Vec<usize>,
    associative: bool,
}

/// First failing triple or quadruple found by [`BasedRing::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasedRingDefect {
    Star(usize),
    Unit(usize, usize),
    Frobenius(usize, usize, usize),
    Associativity(usize, usize, usize, usize),
}

impl std::fmt::Display for BasedRingDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasedRingDefect::Star(x) => write!(f, "star is not an involution fixing 1 at basis element {x}"),
            BasedRingDefect::Unit(x, z) => write!(f, "basis element 0 is not a unit (x = {x}, z = {z})"),
            BasedRingDefect::Frobenius(x, y, z) => write!(f, "Frobenius reciprocity fails at ({x}, {y}, {z})"),
            BasedRingDefect::Associativity(x, y, z, v) => {
                write!(f, "associativity fails at ({x}, {y}, {z}) in coefficient {v}")
            }
        }
    }
}

impl BasedRing {
    /// Validates every axiom, associativity included.
    pub fn new(labels: Vec<String>, n: Vec<Vec<Vec<u32>>>, star: Vec<usize>) -> Result<BasedRing> {
        let ring = Self::unchecked(labels, n, star)?;
        if let Some(d) = ring.structural_defect() {
            return Err(Error::NotBasedRing(d.to_string()));
        }
        if let Some(d) = ring.associativity_defect() {
            return Err(Error::NotBasedRing(d.to_string()));
        }
        Ok(BasedRing { associative: true, ..ring })
    }

    fn unchecked(labels: Vec<String>, n: Vec<Vec<Vec<u32>>>, star: Vec<usize>) -> Result<BasedRing> {
        let r = labels.len();
        if r == 0 || star.len() != r || n.len() != r || n.iter().any(|m| m.len() != r || m.iter().any(|v| v.len() != r)) {
            return Err(Error::NotBasedRing("inconsistent dimensions".into()));
        }
        if star.iter().any(|&s| s >= r) {
            return Err(Error::NotBasedRing("star maps outside the basis".into()));
        }
        let flat = n.into_iter().flatten().flatten().collect();
        Ok(BasedRing { labels, rank: r, n: flat, star, associative: false })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    pub fn star_permutation(&self) -> &[usize] {
        &self.star
    }

    /// `N_{xy}^z`, the coefficient of `z` in `x·y`.
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        self.n[(x * self.rank + y) * self.rank + z]
    }

    pub fn is_associative(&self) -> bool {
        self.associative
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<u32>>> {
        let r = self.rank;
        (0..r).map(|x| (0..r).map(|y| (0..r).map(|z| self.n(x, y, z)).collect()).collect()).collect()
    }

    /// Basis elements occurring in `x·y`.
    pub fn product_support(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&z| self.n(x, y, z) > 0)
    }

    /// Product of two integer combinations of basis elements.
    pub fn multiply(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.rank];
        for (x, &ax) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (y, &by) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                for (z, o) in out.iter_mut().enumerate() {
                    *o += ax * by * self.n(x, y, z) as i64;
                }
            }
        }
        out
    }

    /// `X ↦ X*`, extended linearly.
    pub fn star_of(&self, a: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for (x, &c) in a.iter().enumerate() {
            out[self.star[x]] += c;
        }
        out
    }

    pub fn basis_vector(&self, x: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[x] = 1;
        v
    }

    /// Unit, involution and Frobenius reciprocity, checked exhaustively.
    pub fn structural_defect(&self) -> Option<BasedRingDefect> {
        let r = self.rank;
        if self.star[0] != 0 {
            return Some(BasedRingDefect::Star(0));
        }
        if let Some(x) = (0..r).find(|&x| self.star[self.star[x]] != x) {
            return Some(BasedRingDefect::Star(x));
        }
        for x in 0..r {
            for z in 0..r {
                let want = u32::from(x == z);
                if self.n(0, x, z) != want || self.n(x, 0, z) != want {
                    return Some(BasedRingDefect::Unit(x, z));
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let v = self.n(x, y, z);
                    if v != self.n(z, self.star[y], x) || v != self.n(self.star[x], z, y) {
                        return Some(BasedRingDefect::Frobenius(x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn associativity_defect(&self) -> Option<BasedRingDefect> {
        let r = self.rank;
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    for v in 0..r {
                        let lhs: u64 = (0..r).map(|w| self.n(x, y, w) as u64 * self.n(w, z, v) as u64).sum();
                        let rhs: u64 = (0..r).map(|w| self.n(y, z, w) as u64 * self.n(x, w, v) as u64).sum();
                        if lhs != rhs {
                            return Some(BasedRingDefect::Associativity(x, y, z, v));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn whole(&self) -> BasedSubring {
        BasedSubring { basis: (0..self.rank).collect() }
    }

    pub fn unit_subring(&self) -> BasedSubring {
        BasedSubring { basis: vec![0] }
    }

    /// Smallest based subring containing `seeds`: closes under star and
    /// product support.
    pub fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> BasedSubring {
        let mut set: BTreeSet<usize> = seeds.into_iter().collect();
        set.insert(0);
        let mut pending: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = pending.pop() {
            let mut fresh = vec![self.star[x]];
            let members: Vec<usize> = set.iter().copied().collect();
            for &y in &members {
                fresh.extend(self.product_support(x, y));
                fresh.extend(self.product_support(y, x));
            }
            for z in fresh {
                if set.insert(z) {
                    pending.push(z);
                }
            }
        }
        BasedSubring { basis: set.into_iter().collect() }
    }

    /// `true` when `subset` contains 1 and is closed under star and products.
    pub fn is_subring(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.contains(&0)
            && set.iter().all(|&x| {
                set.contains(&self.star[x]) && set.iter().all(|&y| self.product_support(x, y).all(|z| set.contains(&z)))
            })
    }

    /// Subring generated by the basic elements occurring in some `XX*`
    /// with `X` in `s`.
    pub fn adjoint_subring(&self, s: &BasedSubring) -> BasedSubring {
        let seeds: Vec<usize> = s.basis.iter().flat_map(|&x| self.product_support(x, self.star[x])).collect();
        self.closure(seeds)
    }

    /// `R ⊇ R^(1) ⊇ …` until it stabilizes.
    pub fn adjoint_series(&self) -> AdjointSeries {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            if last.rank() == 1 {
                let class = terms.len() - 1;
                return AdjointSeries { terms, nilpotent: true, class: Some(class) };
            }
            let next = self.adjoint_subring(last);
            if next == *last {
                return AdjointSeries { terms, nilpotent: false, class: None };
            }
            terms.push(next);
        }
    }
}

/// `(X, Y) = Σ a_Z b_Z` for integer combinations in basis coordinates.
pub fn inner_product(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A based subring, given by the basis elements it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasedSubring {
    basis: Vec<usize>,
}

impl BasedSubring {
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.basis.binary_search(&x).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct AdjointSeries {
    pub terms: Vec<BasedSubring>,
    pub nilpotent: bool,
    pub class: Option<usize>,
}

impl AdjointSeries {
    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(BasedSubring::rank).collect()
    }
}

/// `R(G, H)` together with the double coset data it was built from.
#[derive(Clone, Debug)]
pub struct DoubleCosetRing {
    pub ring: BasedRing,
    pub cosets: DoubleCosetDecomposition,
    pub h: Subgroup,
}

/// The ring of double cosets `HxH` with `N = 1` iff `HzH ⊆ HxHyH`.
///
/// Unit, involution and Frobenius reciprocity are checked exhaustively.
/// Associativity is computed and reported via [`BasedRing::is_associative`]
/// because 0/1 constants are not associative for every pair `(G, H)`.
pub fn double_coset_ring(g: &FiniteGroup, h: &Subgroup) -> Result<DoubleCosetRing> {
    let cosets = g.double_cosets(h);
    let r = cosets.len();
    let reps = cosets.representatives();
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for (x, &gx) in reps.iter().enumerate() {
        for (y, &gy) in reps.iter().enumerate() {
            // HxHyH is the union of H(x·k·y)H over k ∈ H.
            for &k in h.members() {
                n[x][y][cosets.coset_of(g.mul_all(&[gx, k, gy]))] = 1;
            }
        }
    }
    let star = reps.iter().map(|&x| cosets.coset_of(g.inv(x))).collect();
    let labels = reps.iter().map(|&x| format!("H{x}H")).collect();
    let mut ring = BasedRing::unchecked(labels, n, star)?;
    if let Some(d) = ring.structural_defect() {
        return Err(Error::NotBasedRing(d.to_string()));
    }
    ring.associative = ring.associativity_defect().is_none();
    Ok(DoubleCosetRing { ring, cosets, h: h.clone() })
}

impl DoubleCosetRing {
    /// `Γ_S`, the union of the double cosets in `s`.
    pub fn gamma_of_subring(&self, g: &FiniteGroup, s: &BasedSubring) -> Result<Subgroup> {
        let mut elems: Vec<usize> = s.basis().iter().flat_map(|&c| self.cosets.members(c)).collect();
        elems.sort_unstable();
        g.subgroup_from_elements(&elems)
    }

    /// The based subring spanned by the double cosets inside `k ⊇ H`.
    pub fn subring_of_subgroup(&self, k: &Subgroup) -> Result<BasedSubring> {
        if !self.h.is_subgroup_of(k) {
            return Err(Error::NotSubgroup("subgroup does not contain H".into()));
        }
        let basis: BTreeSet<usize> = k.members().iter().map(|&x| self.cosets.coset_of(x)).collect();
        Ok(BasedSubring { basis: basis.into_iter().collect() })
    }

    /// Image of the ring in `Z[G/N]`, `N` the normal closure of `H`.
    pub fn quotient_to_group_ring(&self, g: &FiniteGroup) -> GroupRingQuotient {
        let normal = g.normal_closure(&self.h);
        let (quotient, proj) = g.quotient(&normal).expect("normal closure is normal");
        let map: Vec<usize> = self.cosets.representatives().iter().map(|&x| proj[x]).collect();
        let r = self.ring.rank();
        let homomorphism = (0..r).all(|x| {
            (0..r).all(|y| self.ring.product_support(x, y).all(|z| quotient.mul(map[x], map[y]) == map[z]))
        });
        GroupRingQuotient { normal, quotient, map, homomorphism }
    }

    /// `Γ` of each adjoint-series term against the successive normal
    /// closures of `H`.
    pub fn adjoint_series_agrees_with_closures(&self, g: &FiniteGroup) -> bool {
        let series = self.ring.adjoint_series();
        let closures = g.successive_normal_closures(&self.h);
        series.terms.len() == closures.terms.len()
            && series.nilpotent == closures.is_subnormal()
            && series.terms.iter().zip(&closures.terms).all(|(s, k)| match self.gamma_of_subring(g, s) {
                Ok(gamma) => gamma == *k,
                Err(_) => false,
            })
    }

    pub fn report(&self, g: &FiniteGroup) -> RingReport {
        let series = self.ring.adjoint_series();
        let gamma_chain = series
            .terms
            .iter()
            .map(|s| self.gamma_of_subring(g, s).map(|k| k.members().to_vec()).unwrap_or_default())
            .collect();
        RingReport {
            group: g.name().to_string(),
            subgroup: self.h.members().to_vec(),
            labels: self.ring.labels().to_vec(),
            representatives: self.cosets.representatives().to_vec(),
            star: self.ring.star_permutation().to_vec(),
            structure_constants: self.ring.structure_constants(),
            associative: self.ring.is_associative(),
            adjoint_series_ranks: series.ranks(),
            gamma_chain,
            nilpotent: series.nilpotent,
            class: series.class,
            agrees_with_closures: self.adjoint_series_agrees_with_closures(g),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupRingQuotient {
    pub normal: Subgroup,
    pub quotient: FiniteGroup,
    /// Basis index to quotient element.
    pub map: Vec<usize>,
    /// `N_{xy}^z > 0 ⇒ map(x)·map(y) = map(z)` on every triple.
    pub homomorphism: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub group: String,
    pub subgroup: Vec<usize>,
    pub labels: Vec<String>,
    pub representatives: Vec<usize>,
    pub star: Vec<usize>,
    pub structure_constants: Vec<Vec<Vec<u32>>>,
    pub associative: bool,
    pub adjoint_series_ranks: Vec<usize>,
    pub gamma_chain: Vec<Vec<usize>>,
    pub nilpotent: bool,
    pub class: Option<usize>,
    pub agrees_with_closures: bool,
}
