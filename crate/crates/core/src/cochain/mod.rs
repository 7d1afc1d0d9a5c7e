//! Normalized `Q/Z`-valued cochains on a finite group or subgroup.
//!
//! A cochain stores numerators over a single modulus `m`, so a value is
//! `values[i] / m` in `Q/Z`. Modulus 1 means identically zero, with no table.

mod builtins;
mod io;
mod projective;
mod solve;
mod twist;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::phase::Phase;

pub use builtins::{builtin_cochain, cochain_catalog, symplectic_z2z2, zn_omega};
pub use io::{CochainEntry, CochainFile, DomainTag};
pub use projective::{central_extension, projective_degrees, regular_class_count, ProjectiveDegrees};
pub use solve::{character_group, trivialize, CharacterGroup, Trivialization};
pub use twist::{beta, beta_as_printed, check_restriction, nu, psi_g};

/// Largest domain order for which dense degree-3 tables are allowed.
pub const DENSE_DEGREE3_CAP: usize = 128;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    domain: Subgroup,
    modulus: i64,
    values: Vec<i64>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("degree", &self.degree)
            .field("domain_order", &self.domain.order())
            .field("modulus", &self.modulus)
            .finish()
    }
}

#[inline]
fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

impl Cochain {
    pub fn zero(degree: usize, domain: &Subgroup) -> Cochain {
        Cochain { degree, domain: domain.clone(), modulus: 1, values: Vec::new() }
    }

    fn table_len(degree: usize, k: usize) -> usize {
        k.pow(degree as u32)
    }

    fn check_size(degree: usize, domain: &Subgroup) -> Result<()> {
        if degree == 0 || degree > 3 {
            return Err(Error::BadDegree(degree));
        }
        if degree == 3 && domain.order() > DENSE_DEGREE3_CAP {
            return Err(Error::CapExceeded { cap: DENSE_DEGREE3_CAP, got: domain.order() });
        }
        Ok(())
    }

    /// Tabulates `f` over `domain^degree` (arguments are parent-group indices).
    pub fn from_fn(degree: usize, domain: &Subgroup, mut f: impl FnMut(&[usize]) -> Phase) -> Result<Cochain> {
        Self::check_size(degree, domain)?;
        let k = domain.order();
        let len = Self::table_len(degree, k);
        let mut phases = Vec::with_capacity(len);
        let mut args = vec![0usize; degree];
        for idx in 0..len {
            let mut r = idx;
            for slot in args.iter_mut().rev() {
                *slot = domain.members()[r % k];
                r /= k;
            }
            phases.push(f(&args));
        }
        Ok(Self::from_phases(degree, domain, phases))
    }

    fn from_phases(degree: usize, domain: &Subgroup, phases: Vec<Phase>) -> Cochain {
        let modulus = phases.iter().fold(1i64, |m, p| lcm(m, p.denom()));
        if modulus == 1 {
            return Cochain::zero(degree, domain);
        }
        let values = phases.iter().map(|p| p.scaled_to(modulus).expect("denominator divides lcm")).collect();
        Cochain { degree, domain: domain.clone(), modulus, values }
    }

    /// Builds from numerators over `modulus`, indexed by member positions.
    pub(crate) fn from_numerators(degree: usize, domain: &Subgroup, modulus: i64, values: Vec<i64>) -> Cochain {
        let mut c = Cochain { degree, domain: domain.clone(), modulus, values };
        for v in c.values.iter_mut() {
            *v = v.rem_euclid(modulus);
        }
        c.reduce_modulus();
        c
    }

    fn reduce_modulus(&mut self) {
        let g = self.values.iter().fold(self.modulus, |g, &v| g.gcd(&v));
        if g > 1 {
            self.modulus /= g;
            for v in self.values.iter_mut() {
                *v /= g;
            }
        }
        if self.modulus == 1 {
            self.values.clear();
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// Common denominator of all values.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.modulus == 1
    }

    #[inline]
    fn index(&self, args: &[usize]) -> usize {
        let k = self.domain.order();
        args.iter().fold(0, |acc, &a| acc * k + self.domain.position(a).expect("argument outside cochain domain"))
    }

    /// Numerator of the value at `args` over `m`; `self.modulus()` must divide `m`.
    #[inline]
    pub fn scaled(&self, args: &[usize], m: i64) -> i64 {
        if self.modulus == 1 {
            0
        } else {
            self.values[self.index(args)] * (m / self.modulus)
        }
    }

    pub fn value(&self, args: &[usize]) -> Phase {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        if self.modulus == 1 {
            Phase::ZERO
        } else {
            Phase::new(self.values[self.index(args)], self.modulus)
        }
    }

    /// All `(args, value)` pairs with nonzero value.
    pub fn support(&self) -> Vec<(Vec<usize>, Phase)> {
        if self.is_zero() {
            return Vec::new();
        }
        let k = self.domain.order();
        let m = self.domain.members();
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(idx, &v)| {
                let mut args = vec![0; self.degree];
                let mut r = idx;
                for slot in args.iter_mut().rev() {
                    *slot = m[r % k];
                    r /= k;
                }
                (args, Phase::new(v, self.modulus))
            })
            .collect()
    }

    /// First argument tuple containing the identity with a nonzero value.
    pub fn normalization_violation(&self) -> Option<Vec<usize>> {
        self.support().into_iter().map(|(a, _)| a).find(|a| a.contains(&0))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_violation().is_none()
    }

    fn same_domain(&self, other: &Cochain) -> bool {
        self.degree == other.degree && self.domain == other.domain
    }

    fn combine(&self, other: &Cochain, sign: i64) -> Cochain {
        assert!(self.same_domain(other), "cochains on different domains");
        let m = lcm(self.modulus, other.modulus);
        if m == 1 {
            return Cochain::zero(self.degree, &self.domain);
        }
        let len = Self::table_len(self.degree, self.domain.order());
        let get = |c: &Cochain, i: usize| if c.modulus == 1 { 0 } else { c.values[i] * (m / c.modulus) };
        let values = (0..len).map(|i| get(self, i) + sign * get(other, i)).collect();
        Cochain::from_numerators(self.degree, &self.domain, m, values)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> Cochain {
        Cochain::zero(self.degree, &self.domain).sub(self)
    }

    /// Coboundary with the convention
    /// `dη(a,b) = η(a) − η(ab) + η(b)` and
    /// `dψ(a,b,c) = ψ(b,c) − ψ(ab,c) + ψ(a,bc) − ψ(a,b)`.
    pub fn coboundary(&self, g: &FiniteGroup) -> Result<Cochain> {
        let m = self.modulus;
        let d = self.degree + 1;
        if self.degree > 2 {
            return Err(Error::BadDegree(self.degree));
        }
        Self::check_size(d, &self.domain)?;
        if self.is_zero() {
            return Ok(Cochain::zero(d, &self.domain));
        }
        let k = self.domain.order();
        let mem = self.domain.members();
        let mut values = Vec::with_capacity(Self::table_len(d, k));
        match self.degree {
            1 => {
                for &a in mem {
                    for &b in mem {
                        values.push(self.scaled(&[a], m) - self.scaled(&[g.mul(a, b)], m) + self.scaled(&[b], m));
                    }
                }
            }
            _ => {
                for &a in mem {
                    for &b in mem {
                        let ab = g.mul(a, b);
                        for &c in mem {
                            values.push(
                                self.scaled(&[b, c], m) - self.scaled(&[ab, c], m) + self.scaled(&[a, g.mul(b, c)], m)
                                    - self.scaled(&[a, b], m),
                            );
                        }
                    }
                }
            }
        }
        Ok(Cochain::from_numerators(d, &self.domain, m, values))
    }

    /// First tuple where the coboundary is nonzero, with its value.
    pub fn cocycle_violation(&self, g: &FiniteGroup) -> Option<(Vec<usize>, Phase)> {
        if self.is_zero() {
            return None;
        }
        let m = self.modulus;
        let mem = self.domain.members();
        let s = |args: &[usize]| self.scaled(args, m);
        match self.degree {
            1 | 2 => {
                let d = self.coboundary(g).expect("degree checked");
                d.support().into_iter().next()
            }
            _ => {
                for &a in mem {
                    for &b in mem {
                        let ab = g.mul(a, b);
                        for &c in mem {
                            let bc = g.mul(b, c);
                            let abc_ = s(&[a, b, c]);
                            for &e in mem {
                                let v = s(&[b, c, e]) - s(&[ab, c, e]) + s(&[a, bc, e]) - s(&[a, b, g.mul(c, e)]) + abc_;
                                if v.rem_euclid(m) != 0 {
                                    return Some((vec![a, b, c, e], Phase::new(v, m)));
                                }
                            }
                        }
                    }
                }
                None
            }
        }
    }

    pub fn is_cocycle(&self, g: &FiniteGroup) -> bool {
        self.cocycle_violation(g).is_none()
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, k: &Subgroup) -> Result<Cochain> {
        if !k.is_subgroup_of(&self.domain) {
            return Err(Error::NotSubgroup("restriction target is not inside the cochain domain".into()));
        }
        if self.is_zero() {
            return Ok(Cochain::zero(self.degree, k));
        }
        let m = self.modulus;
        Cochain::from_fn(self.degree, k, |args| Phase::new(self.scaled(args, m), m))
    }

    /// `(ᵍf)(h₁,…,h_n) = f(g⁻¹h₁g, …, g⁻¹h_ng)` for `g` normalizing the domain.
    pub fn conjugate(&self, grp: &FiniteGroup, g: usize) -> Result<Cochain> {
        if !grp.normalizes(g, &self.domain) {
            return Err(Error::NotNormalizing(g));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let m = self.modulus;
        let mut buf = vec![0usize; self.degree];
        Cochain::from_fn(self.degree, &self.domain, |args| {
            for (slot, &a) in buf.iter_mut().zip(args) {
                *slot = grp.conjugate_inv(g, a);
            }
            Phase::new(self.scaled(&buf, m), m)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_normalized(degree: usize, dom: &Subgroup, den: i64, seed: u64) -> Cochain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Cochain::from_fn(degree, dom, |args| {
            if args.contains(&0) {
                Phase::ZERO
            } else {
                Phase::new(rng.gen_range(0..den), den)
            }
        })
        .unwrap()
    }

    #[test]
    fn zero_cochain_coboundary() {
        let g = builtin_group("S3").unwrap();
        let z = Cochain::zero(1, &g.whole());
        assert!(z.coboundary(&g).unwrap().is_zero());
        assert!(z.is_cocycle(&g));
    }

    #[test]
    fn homomorphism_has_zero_coboundary() {
        let g = builtin_group("Z2").unwrap();
        let eta = Cochain::from_fn(1, &g.whole(), |a| if a[0] == 1 { Phase::new(1, 2) } else { Phase::ZERO }).unwrap();
        assert!(eta.coboundary(&g).unwrap().is_zero());
    }

    #[test]
    fn degree_three_input_rejected() {
        let g = builtin_group("Z2").unwrap();
        let w = Cochain::zero(3, &g.whole());
        assert!(matches!(w.coboundary(&g), Err(Error::BadDegree(3))));
    }

    #[test]
    fn restriction_examples() {
        let g = builtin_group("Z4").unwrap();
        let w = zn_omega(&g, 1).unwrap();
        assert!(w.restrict(&g.trivial_subgroup()).unwrap().is_zero());
        assert_eq!(w.restrict(&g.whole()).unwrap(), w);
        // ω₁ on Z4 restricted to {0, 2}: ω(2,2,2) = 2·⌊4/4⌋/4 = 1/2
        let two = g.pow(g.generator_names()[0].1, 2);
        let sub = g.subgroup_generated(&[two]).unwrap();
        let r = w.restrict(&sub).unwrap();
        assert_eq!(r.value(&[two, two, two]), Phase::new(1, 2));
    }

    #[test]
    fn conjugation_examples() {
        let d8 = builtin_group("D8").unwrap();
        let f = random_normalized(2, &d8.whole(), 6, 3);
        assert_eq!(f.conjugate(&d8, 0).unwrap(), f);
        let z = d8.center();
        let fz = random_normalized(2, &z, 6, 4);
        // Z(D8) is abelian and central, so any g acts trivially
        for g in 0..8 {
            assert_eq!(fz.conjugate(&d8, g).unwrap(), fz);
        }
        for g in 0..8 {
            let back = f.conjugate(&d8, g).unwrap().conjugate(&d8, d8.inv(g)).unwrap();
            assert_eq!(back, f);
        }
        let s = d8.generator_names()[1].1;
        let hs = d8.subgroup_generated(&[s]).unwrap();
        let r = d8.generator_names()[0].1;
        assert!(matches!(Cochain::zero(1, &hs).conjugate(&d8, r), Err(Error::NotNormalizing(_))));
    }

    #[test]
    fn perturbed_cocycle_detected() {
        let g = builtin_group("Z2").unwrap();
        let w = zn_omega(&g, 1).unwrap();
        assert!(w.is_cocycle(&g));
        assert_eq!(w.value(&[1, 1, 1]), Phase::new(1, 2));
        let bad = Cochain::from_fn(3, &g.whole(), |a| if a == [1, 1, 1] { Phase::new(1, 4) } else { Phase::ZERO }).unwrap();
        assert!(!bad.is_cocycle(&g));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn d_squared_vanishes(seed in any::<u64>(), den in 2i64..13, which in 0usize..4) {
            let name = ["S3", "D8", "Q8", "Z2xZ4"][which];
            let g = builtin_group(name).unwrap();
            let dom = g.whole();
            let eta = random_normalized(1, &dom, den, seed);
            prop_assert!(eta.coboundary(&g).unwrap().coboundary(&g).unwrap().is_zero());
            let psi = random_normalized(2, &dom, den, seed ^ 1);
            prop_assert!(psi.coboundary(&g).unwrap().is_cocycle(&g));
        }
    }
}
