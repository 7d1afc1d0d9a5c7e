//! The identity suite run by `gtcat verify`: cocycle laws, the β-relation,
//! bimodule axioms, dimension counts and the invertible-object group law.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::based_ring::double_coset_ring;
use crate::bimodule::{build_bimodule, check_bimodule_axioms, extract_rep, tensor_invertibles, ScalarRep};
use crate::cochain::{check_restriction, trivialize};
use crate::gt_category::GTCategoryData;

/// Above this many 4-tuples the 3-cocycle law is checked on samples.
pub const EXHAUSTIVE_COCYCLE_LIMIT: usize = 20_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: false, detail: detail.into() }
    }

    fn from(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
        Check { name, passed: ok, detail: detail.into() }
    }
}

/// Runs every check; `samples` bounds the randomized ones.
pub fn verify_instance(data: &GTCategoryData, seed: u64, samples: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grp = data.group();
    let n = grp.order();
    let mut out = Vec::new();

    out.push(match (data.omega().normalization_violation(), data.psi().normalization_violation()) {
        (None, None) => Check::pass("normalized", "ω and ψ vanish when an argument is 1"),
        (Some(a), _) | (_, Some(a)) => Check::fail("normalized", format!("nonzero at {a:?}")),
    });

    out.push(if n.pow(4) <= EXHAUSTIVE_COCYCLE_LIMIT {
        match data.omega().cocycle_violation(grp) {
            None => Check::pass("omega_cocycle", format!("exhaustive over {} tuples", n.pow(4))),
            Some((a, v)) => Check::fail("omega_cocycle", format!("dω = {v} at {a:?}")),
        }
    } else {
        let w = data.omega();
        let mut bad = None;
        for _ in 0..samples * 64 {
            let [a, b, c, e]: [usize; 4] = std::array::from_fn(|_| rng.gen_range(0..n));
            let d = w.value(&[b, c, e]) - w.value(&[grp.mul(a, b), c, e]) + w.value(&[a, grp.mul(b, c), e])
                - w.value(&[a, b, grp.mul(c, e)])
                + w.value(&[a, b, c]);
            if !d.is_zero() {
                bad = Some([a, b, c, e]);
                break;
            }
        }
        match bad {
            None => Check::pass("omega_cocycle", format!("{} sampled tuples", samples * 64)),
            Some(a) => Check::fail("omega_cocycle", format!("dω ≠ 0 at {a:?}")),
        }
    });

    out.push(match check_restriction(grp, data.omega(), data.psi()) {
        Ok(()) => Check::pass("restriction", "dψ = ω on H×H×H"),
        Err(e) => Check::fail("restriction", e.to_string()),
    });

    let reps = data.representatives().to_vec();
    let bad_twist = reps.iter().find_map(|&g| data.psi_g(g).cocycle_violation(grp).map(|v| (g, v)));
    out.push(match bad_twist {
        None => Check::pass("psi_g_cocycles", format!("{} representatives", reps.len())),
        Some((g, (a, v))) => Check::fail("psi_g_cocycles", format!("g = {g}: dψ^g = {v} at {a:?}")),
    });

    let normalizer = grp.normalizer(data.subgroup());
    let mut pairs: Vec<(usize, usize)> =
        normalizer.members().iter().flat_map(|&a| normalizer.members().iter().map(move |&b| (a, b))).collect();
    if pairs.len() > samples {
        pairs.shuffle(&mut rng);
        pairs.truncate(samples);
    }
    let mut beta_fail = None;
    for &(g1, g2) in &pairs {
        let g3 = data.cosets().rep_of(grp.mul(g1, g2));
        let ok = data.beta(g1, g2).and_then(|b| {
            let rhs = b.coboundary(grp)?.add(&data.psi_g(g1)).add(&data.psi_g(g2).conjugate(grp, g1)?);
            Ok(rhs == data.psi_g(g3))
        });
        if !matches!(ok, Ok(true)) {
            beta_fail = Some((g1, g2));
            break;
        }
    }
    out.push(match beta_fail {
        None => Check::pass("beta_relation", format!("{} pairs in N_G(H)", pairs.len())),
        Some(p) => Check::fail("beta_relation", format!("fails at {p:?}")),
    });

    let mut built = 0;
    let mut skipped = 0;
    let mut bim_fail = None;
    for &g in &reps {
        let witness = match trivialize(grp, &data.psi_g(g)) {
            Ok(t) => t.witness,
            Err(e) => {
                bim_fail = Some(format!("g = {g}: {e}"));
                break;
            }
        };
        let Some(eta) = witness else {
            skipped += 1;
            continue;
        };
        let rho = ScalarRep::one_dimensional(&eta);
        let result = build_bimodule(data, g, &rho).map_err(|e| e.to_string()).and_then(|b| {
            check_bimodule_axioms(&b, data).map_err(|f| f.to_string())?;
            let back = extract_rep(&b, data).map_err(|e| e.to_string())?;
            if back.approx_eq(&rho) {
                Ok(())
            } else {
                Err("extracted representation differs".into())
            }
        });
        if let Err(e) = result {
            bim_fail = Some(format!("g = {g}: {e}"));
            break;
        }
        built += 1;
    }
    out.push(match bim_fail {
        None => Check::pass(
            "bimodule_axioms",
            format!("{built} bimodules with one-dimensional ρ; {skipped} cosets with nontrivial ψ^g skipped"),
        ),
        Some(e) => Check::fail("bimodule_axioms", e),
    });

    let simples = match data.enumerate_simples() {
        Ok(s) => s,
        Err(e) => {
            out.push(Check::fail("global_dimension", e.to_string()));
            return out;
        }
    };
    let total: usize = simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    match data.grading(&simples) {
        Ok(gr) => {
            out.push(Check::from(
                "global_dimension",
                total == n && gr.dimensions_match,
                format!("Σ fpdim² = {total}, |G| = {n}; per-coset sums match: {}", gr.dimensions_match),
            ));
            out.push(Check::from(
                "trivial_component",
                gr.psi1_trivial && gr.trivial_component_simples == gr.h_class_count && gr.faithful,
                format!(
                    "{} simples over H, {} classes of H, ψ^1 trivial: {}, faithful: {}",
                    gr.trivial_component_simples, gr.h_class_count, gr.psi1_trivial, gr.faithful
                ),
            ));
        }
        Err(e) => out.push(Check::fail("global_dimension", e.to_string())),
    }

    match data.invertible_group() {
        Ok(inv) => {
            let pointed = simples.iter().filter(|s| s.fpdim == 1).count();
            out.push(Check::from(
                "invertible_count",
                inv.order() == pointed,
                format!("|K ⋉_ν Ĥ| = {}, fpdim-1 simples = {pointed}", inv.order()),
            ));
            let m = inv.order();
            let mut xs: Vec<(usize, usize)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).collect();
            if xs.len() > samples {
                xs.shuffle(&mut rng);
                xs.truncate(samples);
            }
            let mut tensor_fail = None;
            for &(x, y) in &xs {
                let (g1, r1) = inv.element(x);
                let (g2, r2) = inv.element(y);
                let expected = inv.element(inv.table[x][y]);
                match tensor_invertibles(data, (g1, &r1), (g2, &r2)) {
                    Ok(got) if got == expected => {}
                    Ok(_) => {
                        tensor_fail = Some(format!("({x}, {y}): tensor product differs from the group law"));
                        break;
                    }
                    Err(e) => {
                        tensor_fail = Some(format!("({x}, {y}): {e}"));
                        break;
                    }
                }
            }
            out.push(match tensor_fail {
                None => Check::pass("tensor_law", format!("{} pairs", xs.len())),
                Some(e) => Check::fail("tensor_law", e),
            });
        }
        Err(e) => out.push(Check::fail("invertible_count", e.to_string())),
    }

    out.push(match data.nilpotency() {
        Ok(nil) => Check::from(
            "nilpotency_routes",
            nil.routes_agree,
            format!("normal-closure route: {}, ring route: {}", nil.nilpotent, nil.ring_route),
        ),
        Err(e) => Check::fail("nilpotency_routes", e.to_string()),
    });

    out.push(match double_coset_ring(grp, data.subgroup()) {
        Ok(r) => {
            let agrees = r.adjoint_series_agrees_with_closures(grp);
            let hom = r.quotient_to_group_ring(grp).homomorphism;
            Check::from(
                "double_coset_ring",
                agrees && hom,
                format!("adjoint series matches normal closures: {agrees}; Z[G/N] map respects products: {hom}"),
            )
        }
        Err(e) => Check::fail("double_coset_ring", e.to_string()),
    });
    out
}
