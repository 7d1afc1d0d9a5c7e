use super::Cochain;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::phase::Phase;

/// `(name, description)` of each builtin cochain.
pub fn cochain_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("zero", "identically zero cochain of any degree"),
        ("zn_omega", "3-cocycle on a cyclic group Z_n: (a,b,c) -> k*a*floor((b+c)/n)/n, parameter k"),
        ("z2z2_symplectic", "2-cocycle on a Klein four-group <x,y>: (x^a1 y^b1, x^a2 y^b2) -> a1*b2/2"),
    ]
}

/// Exponent map `x ↦ i` with `x = gⁱ` for a generator `g` of a cyclic group.
fn cyclic_coordinates(grp: &FiniteGroup, dom: &Subgroup) -> Result<Vec<(usize, usize)>> {
    let n = dom.order();
    let named = grp.generator_names().iter().map(|(_, x)| *x).find(|&x| dom.contains(x) && grp.element_order(x) == n);
    let gen = named
        .or_else(|| dom.members().iter().copied().find(|&x| grp.element_order(x) == n))
        .ok_or_else(|| Error::Unsupported("zn_omega needs a cyclic domain".into()))?;
    let mut x = 0;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push((x, i));
        x = grp.mul(x, gen);
    }
    Ok(out)
}

/// `ω_k(a, b, c) = k·a·⌊(b + c)/n⌋ / n` on the whole of a cyclic group.
pub fn zn_omega(grp: &FiniteGroup, k: i64) -> Result<Cochain> {
    let dom = grp.whole();
    let n = dom.order();
    let mut exp = vec![0usize; grp.order()];
    for (x, i) in cyclic_coordinates(grp, &dom)? {
        exp[x] = i;
    }
    let w = Cochain::from_fn(3, &dom, |args| {
        let (a, b, c) = (exp[args[0]] as i64, exp[args[1]] as i64, exp[args[2]] as i64);
        Phase::new(k * a * ((b + c) / n as i64), n as i64)
    })?;
    debug_assert!(w.is_cocycle(grp));
    Ok(w)
}

/// `ψ(x^{a₁}y^{b₁}, x^{a₂}y^{b₂}) = a₁b₂/2` for `dom = ⟨x, y⟩ ≅ Z2 × Z2`.
pub fn symplectic_z2z2(grp: &FiniteGroup, dom: &Subgroup) -> Result<Cochain> {
    let klein = dom.order() == 4 && dom.members().iter().all(|&x| grp.mul(x, x) == 0);
    if !klein {
        return Err(Error::Unsupported("z2z2_symplectic needs a Klein four-group domain".into()));
    }
    let (x, y) = (dom.generators()[0], dom.generators()[1]);
    let coords = |z: usize| -> (i64, i64) {
        if z == 0 {
            (0, 0)
        } else if z == x {
            (1, 0)
        } else if z == y {
            (0, 1)
        } else {
            (1, 1)
        }
    };
    Cochain::from_fn(2, dom, |args| {
        let ((a1, _), (_, b2)) = (coords(args[0]), coords(args[1]));
        Phase::new(a1 * b2, 2)
    })
}

/// Dispatches a builtin by name onto `dom` (a subgroup of `grp`).
pub fn builtin_cochain(name: &str, k: Option<i64>, degree: usize, grp: &FiniteGroup, dom: &Subgroup) -> Result<Cochain> {
    match name {
        "zero" => Ok(Cochain::zero(degree, dom)),
        "zn_omega" => {
            if dom.order() != grp.order() {
                let sub = grp.restrict_to(dom);
                let w = zn_omega(&sub, k.unwrap_or(1))?;
                return Cochain::from_fn(3, dom, |a| {
                    w.value(&[dom.position(a[0]).unwrap(), dom.position(a[1]).unwrap(), dom.position(a[2]).unwrap()])
                });
            }
            zn_omega(grp, k.unwrap_or(1))
        }
        "z2z2_symplectic" => symplectic_z2z2(grp, dom),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn zn_omega_on_z2() {
        let g = builtin_group("Z2").unwrap();
        let w = zn_omega(&g, 1).unwrap();
        assert_eq!(w.value(&[1, 1, 1]), Phase::new(1, 2));
        assert!(w.is_normalized());
        assert!(w.is_cocycle(&g));
    }

    #[test]
    fn zn_omega_cocycles() {
        for n in [3, 4, 6] {
            let g = builtin_group(&format!("Z{n}")).unwrap();
            for k in 0..n as i64 {
                assert!(zn_omega(&g, k).unwrap().is_cocycle(&g));
            }
        }
        assert!(zn_omega(&builtin_group("Z2xZ2").unwrap(), 1).is_err());
    }

    #[test]
    fn symplectic_is_a_cocycle() {
        let g = builtin_group("Z2xZ2").unwrap();
        let psi = symplectic_z2z2(&g, &g.whole()).unwrap();
        assert!(psi.is_cocycle(&g));
        assert!(psi.is_normalized());
        assert!(!psi.is_zero());
    }

    #[test]
    fn unknown_name() {
        let g = builtin_group("Z2").unwrap();
        assert!(matches!(builtin_cochain("nope", None, 2, &g, &g.whole()), Err(Error::UnknownBuiltin(_))));
        assert!(builtin_cochain("zero", None, 2, &g, &g.whole()).unwrap().is_zero());
    }
}
