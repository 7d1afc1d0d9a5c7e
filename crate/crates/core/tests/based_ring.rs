mod common;

use std::collections::{BTreeSet, HashMap, VecDeque};

use common::{gen, sub};
use gtcat::based_ring::{double_coset_ring, inner_product, BasedRing};
use gtcat::group::builtin_group;
use gtcat::{FiniteGroup, Subgroup};
use proptest::prelude::*;

/// Every subgroup generated by at most two elements. All subgroups of the
/// groups used here are 2-generated.
fn small_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..g.order() {
        for b in a..g.order() {
            let k = g.subgroup_generated(&[a, b]).unwrap();
            if seen.insert(k.members().to_vec()) {
                out.push(k);
            }
        }
    }
    out
}

fn normal_in(g: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> bool {
    l.members().iter().all(|&x| k.members().iter().all(|&y| k.contains(g.mul_all(&[x, y, g.inv(x)]))))
}

/// Shortest chain `H = H_0 ⊴ H_1 ⊴ … ⊴ H_d = G` by breadth-first search.
fn defect_oracle(g: &FiniteGroup, h: &Subgroup, all: &[Subgroup]) -> Option<usize> {
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut queue = VecDeque::from([h.clone()]);
    dist.insert(h.members().to_vec(), 0);
    while let Some(k) = queue.pop_front() {
        let d = dist[k.members()];
        if k.order() == g.order() {
            return Some(d);
        }
        for l in all {
            if k.is_subgroup_of(l) && !dist.contains_key(l.members()) && normal_in(g, &k, l) {
                dist.insert(l.members().to_vec(), d + 1);
                queue.push_back(l.clone());
            }
        }
    }
    None
}

#[test]
fn s3_over_a_transposition() {
    let s3 = builtin_group("S3").unwrap();
    let r = double_coset_ring(&s3, &sub(&s3, &["t"])).unwrap();
    assert_eq!(r.ring.rank(), 2);
    let d1 = 1 - r.cosets.coset_of(s3.identity());
    let d0 = 1 - d1;
    let sq = r.ring.multiply(&r.ring.basis_vector(d1), &r.ring.basis_vector(d1));
    let mut expect = vec![0; 2];
    expect[d0] = 1;
    expect[d1] = 1;
    assert_eq!(sq, expect);
    assert_eq!(r.ring.star(d1), d1);
    assert!(r.ring.is_associative());
    assert_eq!(inner_product(&sq, &r.ring.basis_vector(d1)), 1);
    assert_eq!(inner_product(&[2, -3], &[5, 7]), -11);
}

#[test]
fn trivial_subgroup_gives_the_group_ring() {
    for name in ["S3", "D8", "Q8", "A4"] {
        let g = builtin_group(name).unwrap();
        let r = double_coset_ring(&g, &g.trivial_subgroup()).unwrap();
        assert_eq!(r.ring.rank(), g.order());
        let reps = r.cosets.representatives();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let support: Vec<usize> = r.ring.product_support(x, y).collect();
                assert_eq!(support, vec![r.cosets.coset_of(g.mul(reps[x], reps[y]))]);
            }
            assert_eq!(reps[r.ring.star(x)], g.inv(reps[x]));
        }
    }
}

#[test]
fn whole_group_gives_rank_one() {
    let g = builtin_group("S4").unwrap();
    let r = double_coset_ring(&g, &g.whole()).unwrap();
    assert_eq!(r.ring.rank(), 1);
    assert_eq!(r.ring.n(0, 0, 0), 1);
    let series = r.ring.adjoint_series();
    assert_eq!((series.nilpotent, series.class), (true, Some(0)));
}

type SubgroupOf = fn(&FiniteGroup) -> Subgroup;

#[test]
fn normal_subgroups_give_the_quotient_group_ring() {
    let cases: [(&str, SubgroupOf); 4] = [
        ("S3", |g| g.derived_subgroup()),
        ("D8", |g| g.center()),
        ("A4", |g| g.derived_subgroup()),
        ("S4", |g| g.derived_subgroup()),
    ];
    for (name, h) in cases {
        let g = builtin_group(name).unwrap();
        let r = double_coset_ring(&g, &h(&g)).unwrap();
        let q = r.quotient_to_group_ring(&g);
        assert!(q.homomorphism);
        assert_eq!(q.quotient.order(), r.ring.rank(), "{name}");
        let image: BTreeSet<usize> = q.map.iter().copied().collect();
        assert_eq!(image.len(), r.ring.rank());
        assert!(r.ring.is_associative());
    }
}

#[test]
fn non_normal_quotient() {
    let d8 = builtin_group("D8").unwrap();
    let r = double_coset_ring(&d8, &sub(&d8, &["s"])).unwrap();
    let q = r.quotient_to_group_ring(&d8);
    assert!(q.homomorphism);
    assert_eq!(q.normal.order(), 4);
    assert_eq!(q.quotient.order(), 2);
    assert_eq!(r.ring.rank(), 3);
}

#[test]
fn some_subgroup_of_s4_gives_a_non_associative_ring() {
    let s4 = builtin_group("S4").unwrap();
    let mut non_associative = 0;
    for h in small_subgroups(&s4) {
        let r = double_coset_ring(&s4, &h).unwrap();
        assert_eq!(r.ring.is_associative(), r.ring.associativity_defect().is_none());
        if s4.is_normal(&h) {
            assert!(r.ring.is_associative());
        }
        if !r.ring.is_associative() {
            non_associative += 1;
        }
    }
    assert!(non_associative > 0);
}

#[test]
fn nilpotent_iff_subnormal_with_class_equal_to_defect() {
    let mut pairs = 0;
    for name in ["S3", "D8", "Q8", "A4", "S4", "Z2xZ4"] {
        let g = builtin_group(name).unwrap();
        let all = small_subgroups(&g);
        for h in &all {
            let r = double_coset_ring(&g, h).unwrap();
            let series = r.ring.adjoint_series();
            let oracle = defect_oracle(&g, h, &all);
            assert_eq!(series.nilpotent, oracle.is_some(), "{name} {:?}", h.members());
            assert_eq!(series.class, oracle, "{name} {:?}", h.members());
            assert!(r.adjoint_series_agrees_with_closures(&g));
            pairs += 1;
        }
    }
    assert!(pairs >= 10);
}

#[test]
fn subrings_correspond_to_overgroups() {
    let s4 = builtin_group("S4").unwrap();
    let h = s4.subgroup_generated(&[gen(&s4, s4.generator_names()[0].0.as_str())]).unwrap();
    let r = double_coset_ring(&s4, &h).unwrap();
    for k in small_subgroups(&s4) {
        if h.is_subgroup_of(&k) {
            let s = r.subring_of_subgroup(&k).unwrap();
            assert!(r.ring.is_subring(s.basis()));
            assert_eq!(r.gamma_of_subring(&s4, &s).unwrap(), k);
        } else {
            assert!(r.subring_of_subgroup(&k).is_err());
        }
    }
}

#[test]
fn new_rejects_bad_data() {
    let labels = vec!["1".to_string(), "x".to_string()];
    // x·x = 1 + x
    let good = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
    assert!(BasedRing::new(labels.clone(), good.clone(), vec![0, 1]).is_ok());
    assert!(BasedRing::new(labels.clone(), good.clone(), vec![1, 0]).is_err());
    // x·x = x breaks the unit count
    let no_unit = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
    assert!(BasedRing::new(labels.clone(), no_unit, vec![0, 1]).is_err());
    let not_left_unit = vec![vec![vec![1, 0], vec![1, 1]], vec![vec![0, 1], vec![1, 1]]];
    assert!(BasedRing::new(labels, not_left_unit, vec![0, 1]).is_err());
}

#[test]
fn report_serializes() {
    let d8 = builtin_group("D8").unwrap();
    let r = double_coset_ring(&d8, &sub(&d8, &["s"])).unwrap();
    let v = serde_json::to_value(r.report(&d8)).unwrap();
    assert_eq!(v["class"], 2);
    assert_eq!(v["nilpotent"], true);
    assert_eq!(v["adjoint_series_ranks"].as_array().unwrap().len(), 3);
    assert_eq!(v["labels"].as_array().unwrap().len(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn frobenius_reciprocity(which in 0usize..5, hseed in any::<u64>(), x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let name = ["S3", "D8", "A4", "S4", "S3xS3"][which];
        let g = builtin_group(name).unwrap();
        let h = g.subgroup_generated(&[(hseed as usize) % g.order()]).unwrap();
        let r = double_coset_ring(&g, &h).unwrap();
        let n = r.ring.rank();
        let (x, y, z) = (x % n, y % n, z % n);
        let ring = &r.ring;
        let xy = ring.multiply(&ring.basis_vector(x), &ring.basis_vector(y));
        let zy = ring.multiply(&ring.basis_vector(z), &ring.basis_vector(ring.star(y)));
        prop_assert_eq!(inner_product(&xy, &ring.basis_vector(z)), inner_product(&ring.basis_vector(x), &zy));
        prop_assert_eq!(ring.n(x, y, z), ring.n(ring.star(y), ring.star(x), ring.star(z)));
    }
}
