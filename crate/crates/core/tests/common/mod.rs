#![allow(dead_code)]

use gtcat::cochain::{symplectic_z2z2, zn_omega, Cochain};
use gtcat::group::builtin_group;
use gtcat::gt_category::{drinfeld_double_data, GTCategoryData};
use gtcat::{FiniteGroup, Phase, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: &'static str,
    pub data: GTCategoryData,
}

pub fn gen(g: &FiniteGroup, name: &str) -> usize {
    g.generator_names().iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no generator {name}")).1
}

pub fn sub(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
    let xs: Vec<usize> = gens.iter().map(|n| gen(g, n)).collect();
    g.subgroup_generated(&xs).unwrap()
}

/// Normalized cochain with values in `(1/den)Z/Z`, seeded.
pub fn random_cochain(degree: usize, dom: &Subgroup, den: i64, seed: u64) -> Cochain {
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

/// Pullback of a 3-cochain along `f : G → K`.
pub fn pullback3(g: &FiniteGroup, w: &Cochain, f: impl Fn(usize) -> usize) -> Cochain {
    Cochain::from_fn(3, &g.whole(), |a| w.value(&[f(a[0]), f(a[1]), f(a[2])])).unwrap()
}

/// Twists `(ω, ψ)` by a random 2-cochain `φ`: `(ω + dφ, ψ + φ|_H)`.
pub fn twist_by_coboundary(g: &FiniteGroup, omega: &Cochain, psi: &Cochain, seed: u64) -> (Cochain, Cochain) {
    let phi = random_cochain(2, &g.whole(), 4, seed);
    (omega.add(&phi.coboundary(g).unwrap()), psi.add(&phi.restrict(psi.domain()).unwrap()))
}

/// `ω(x,y,z) = x₁y₂z₃/2` on `Z2³` (element `((x₁·2 + x₂)·2 + x₃)`).
pub fn trilinear_z2_cubed(g: &FiniteGroup) -> Cochain {
    Cochain::from_fn(3, &g.whole(), |a| {
        let bit = |x: usize, i: usize| ((x >> (2 - i)) & 1) as i64;
        Phase::new(bit(a[0], 0) * bit(a[1], 1) * bit(a[2], 2), 2)
    })
    .unwrap()
}

/// `Z2³` with the trilinear `ω`, `H = Z2×Z2×0`, `ψ = 0`; `ψ^g` for
/// `g = (0,0,1)` is the symplectic cocycle.
pub fn trilinear_instance() -> GTCategoryData {
    let g = builtin_group("Z2xZ2xZ2").unwrap();
    let w = trilinear_z2_cubed(&g);
    let h = sub(&g, &["a", "a'"]);
    let psi = Cochain::zero(2, &h);
    GTCategoryData::new(g, w, h, psi).unwrap()
}

fn untwisted(name: &'static str, group: &str, gens: &[&str]) -> Instance {
    let g = builtin_group(group).unwrap();
    let h = sub(&g, gens);
    Instance { name, data: GTCategoryData::untwisted(g, h) }
}

/// The instance corpus shared by the integration tests.
pub fn corpus() -> Vec<Instance> {
    let mut out = vec![
        untwisted("S3 ⊇ <(12)>", "S3", &["t"]),
        Instance { name: "S3 ⊇ A3", data: { let g = builtin_group("S3").unwrap(); let h = g.derived_subgroup(); GTCategoryData::untwisted(g, h) } },
        untwisted("D8 ⊇ <s>", "D8", &["s"]),
        untwisted("A4 ⊇ <c1>", "A4", &["c1"]),
        Instance { name: "A4 ⊇ V4", data: { let g = builtin_group("A4").unwrap(); let h = g.derived_subgroup(); GTCategoryData::untwisted(g, h) } },
        Instance { name: "Rep(Q8)", data: { let g = builtin_group("Q8").unwrap(); let h = g.whole(); GTCategoryData::untwisted(g, h) } },
        Instance { name: "Vec(S3)", data: { let g = builtin_group("S3").unwrap(); let h = g.trivial_subgroup(); GTCategoryData::untwisted(g, h) } },
        Instance { name: "Rep(D(S3))", data: drinfeld_double_data(&builtin_group("S3").unwrap()).unwrap() },
        Instance { name: "Rep(D(D8))", data: drinfeld_double_data(&builtin_group("D8").unwrap()).unwrap() },
    ];

    // D8 ⊇ Z(D8) with ω = (pullback of ω₁ along D8 → D8/<r>) + dφ
    let d8 = builtin_group("D8").unwrap();
    let z2 = builtin_group("Z2").unwrap();
    let s = gen(&d8, "s");
    let rot = sub(&d8, &["r"]);
    let w0 = pullback3(&d8, &zn_omega(&z2, 1).unwrap(), |x| usize::from(!rot.contains(x)));
    let center = d8.center();
    for seed in [11, 12] {
        let (w, p) = twist_by_coboundary(&d8, &w0, &Cochain::zero(2, &center), seed);
        assert!(!p.is_zero());
        let name = if seed == 11 { "D8 ⊇ Z(D8), twisted #1" } else { "D8 ⊇ Z(D8), twisted #2" };
        out.push(Instance { name, data: GTCategoryData::new(d8.clone(), w, center.clone(), p).unwrap() });
    }
    assert!(!rot.contains(s));

    // D8 ⊇ <s> twisted by a coboundary
    let hs = sub(&d8, &["s"]);
    let (w, p) = twist_by_coboundary(&d8, &Cochain::zero(3, &d8.whole()), &Cochain::zero(2, &hs), 22);
    assert!(!w.is_zero() && !p.is_zero());
    out.push(Instance { name: "D8 ⊇ <s>, twisted", data: GTCategoryData::new(d8.clone(), w, hs, p).unwrap() });

    // Z2×Z4 ⊇ {(a, 2b)} ≅ Z2×Z2 with symplectic ψ
    let g = builtin_group("Z2xZ4").unwrap();
    let a2 = gen(&g, "a'");
    let h = g.subgroup_generated(&[gen(&g, "a"), g.pow(a2, 2)]).unwrap();
    let sym = symplectic_z2z2(&g, &h).unwrap();
    out.push(Instance {
        name: "Z2xZ4 ⊇ Z2xZ2, symplectic ψ",
        data: GTCategoryData::new(g.clone(), Cochain::zero(3, &g.whole()), h.clone(), sym.clone()).unwrap(),
    });
    let (w, p) = twist_by_coboundary(&g, &Cochain::zero(3, &g.whole()), &sym, 31);
    out.push(Instance { name: "Z2xZ4 ⊇ Z2xZ2, symplectic ψ, twisted", data: GTCategoryData::new(g, w, h, p).unwrap() });

    // Z4 ⊇ <2> with ω₂, which vanishes on <2>
    let z4 = builtin_group("Z4").unwrap();
    let h = z4.subgroup_generated(&[z4.pow(gen(&z4, "a"), 2)]).unwrap();
    let (w, p) = twist_by_coboundary(&z4, &zn_omega(&z4, 2).unwrap(), &Cochain::zero(2, &h), 41);
    assert!(!p.is_zero());
    out.push(Instance { name: "Z4 ⊇ Z2, ω₂ twisted", data: GTCategoryData::new(z4, w, h, p).unwrap() });

    out.push(Instance { name: "Z2^3 trilinear ω", data: trilinear_instance() });
    out
}
