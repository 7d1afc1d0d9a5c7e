use serde::Serialize;

use super::{FiniteGroup, Subgroup};

/// Successive normal closures `G = H^(G,0) ⊵ H^(G,1) ⊵ …`, where each term
/// is the normal closure of `H` in the previous one.
#[derive(Clone, Debug)]
pub struct SubnormalSeries {
    pub terms: Vec<Subgroup>,
    /// `true` when the series reached `H`.
    pub stabilized: bool,
    pub defect: Option<usize>,
}

impl SubnormalSeries {
    pub fn is_subnormal(&self) -> bool {
        self.defect.is_some()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyInfo {
    pub nilpotent: bool,
    pub class: Option<usize>,
}

impl FiniteGroup {
    /// Normal closure of `h` inside `k` (`h ≤ k`).
    pub fn normal_closure_in(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut closure = h.clone();
        let mut pending: Vec<usize> = h.generators().to_vec();
        while let Some(x) = pending.pop() {
            for &g in k.generators() {
                let y = self.conjugate(g, x);
                if !closure.contains(y) {
                    closure.add_generator(self, y);
                    pending.push(y);
                }
            }
        }
        closure.generators = self.generating_set(closure.members());
        closure
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_in(h, &self.whole())
    }

    pub fn successive_normal_closures(&self, h: &Subgroup) -> SubnormalSeries {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            if last.order() == h.order() {
                let defect = terms.len() - 1;
                return SubnormalSeries { terms, stabilized: true, defect: Some(defect) };
            }
            let next = self.normal_closure_in(h, last);
            if next.order() == last.order() {
                return SubnormalSeries { terms, stabilized: false, defect: None };
            }
            terms.push(next);
        }
    }

    /// `[A, B]` for subgroups `A`, `B`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &x in a.generators() {
            for &y in b.generators() {
                gens.push(self.commutator(x, y));
            }
        }
        let c = self.subgroup_generated(&gens).expect("indices in range");
        // [A, B] is the normal closure in <A, B> of the generator commutators
        let mut both = a.generators().to_vec();
        both.extend_from_slice(b.generators());
        let ab = self.subgroup_generated(&both).expect("indices in range");
        self.normal_closure_in(&c, &ab)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let w = self.whole();
        self.commutator_subgroup(&w, &w)
    }

    /// Lower central series `γ₁ = G, γ_{i+1} = [γ_i, G]` until it stalls.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let w = self.whole();
        let mut series = vec![w.clone()];
        loop {
            let last = series.last().unwrap();
            if last.order() == 1 {
                return series;
            }
            let next = self.commutator_subgroup(last, &w);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn nilpotency(&self) -> NilpotencyInfo {
        let series = self.lower_central_series();
        if series.last().unwrap().order() == 1 {
            NilpotencyInfo { nilpotent: true, class: Some(series.len() - 1) }
        } else {
            NilpotencyInfo { nilpotent: false, class: None }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::group::builtin_group;

    #[test]
    fn normal_closure_examples() {
        let s3 = builtin_group("S3").unwrap();
        let t = s3.find_permutation(&[1, 0, 2]).unwrap();
        let h = s3.subgroup_generated(&[t]).unwrap();
        assert_eq!(s3.normal_closure(&h).order(), 6);
        let a3 = s3.derived_subgroup();
        assert_eq!(a3.order(), 3);
        assert_eq!(s3.normal_closure(&a3), a3);

        let d8 = builtin_group("D8").unwrap();
        let s = d8.generator_names().iter().find(|(n, _)| n == "s").unwrap().1;
        let r = d8.generator_names().iter().find(|(n, _)| n == "r").unwrap().1;
        let hs = d8.subgroup_generated(&[s]).unwrap();
        let klein = d8.subgroup_generated(&[s, d8.pow(r, 2)]).unwrap();
        assert_eq!(d8.normal_closure(&hs), klein);
    }

    #[test]
    fn subnormal_series() {
        let s3 = builtin_group("S3").unwrap();
        let t = s3.find_permutation(&[1, 0, 2]).unwrap();
        let h = s3.subgroup_generated(&[t]).unwrap();
        let ser = s3.successive_normal_closures(&h);
        assert!(!ser.is_subnormal());
        assert_eq!(ser.orders(), vec![6]);

        let d8 = builtin_group("D8").unwrap();
        let s = d8.generator_names().iter().find(|(n, _)| n == "s").unwrap().1;
        let ser = d8.successive_normal_closures(&d8.subgroup_generated(&[s]).unwrap());
        assert_eq!(ser.defect, Some(2));
        assert_eq!(ser.orders(), vec![8, 4, 2]);
        for w in ser.terms.windows(2) {
            assert!(d8.is_normal_in(&w[1], &w[0]));
        }
        assert_eq!(d8.successive_normal_closures(&d8.whole()).defect, Some(0));
        assert_eq!(d8.successive_normal_closures(&d8.center()).defect, Some(1));
    }

    #[test]
    fn lower_central_series() {
        let s3 = builtin_group("S3").unwrap();
        assert!(!s3.nilpotency().nilpotent);
        let d8 = builtin_group("D8").unwrap();
        assert_eq!(d8.nilpotency().class, Some(2));
        assert_eq!(builtin_group("Q8").unwrap().nilpotency().class, Some(2));
        assert_eq!(builtin_group("Z6").unwrap().nilpotency().class, Some(1));
        assert_eq!(builtin_group("Z1").unwrap().nilpotency().class, Some(0));
        assert!(!builtin_group("A4").unwrap().nilpotency().nilpotent);
    }
}
