//! Explicit simple bimodules `B(g, ρ)` over `A = k^ψ[H]` in `Vec_G^ω`, the
//! projective representation recovered from them, and the concrete tensor
//! product of invertible ones.

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::gt_category::GTCategoryData;
use crate::phase::Phase;

/// Tolerance for comparisons involving dense complex matrices.
pub const DENSE_TOLERANCE: f64 = 1e-9;

/// A `d×d` matrix: exact when monomial with root-of-unity entries, dense
/// complex otherwise.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Matrix {
    /// Column `j` is `e^{2πi phases[j]}` times basis vector `perm[j]`.
    Monomial { perm: Vec<usize>, phases: Vec<Phase> },
    /// Row-major entries.
    Dense { dim: usize, entries: Vec<(f64, f64)> },
}

impl Matrix {
    pub fn identity(d: usize) -> Matrix {
        Matrix::Monomial { perm: (0..d).collect(), phases: vec![Phase::ZERO; d] }
    }

    pub fn scalar(d: usize, p: Phase) -> Matrix {
        Matrix::Monomial { perm: (0..d).collect(), phases: vec![p; d] }
    }

    pub fn dense(dim: usize, entries: Vec<Complex64>) -> Result<Matrix> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidRep(format!("expected {} entries, got {}", dim * dim, entries.len())));
        }
        Ok(Matrix::Dense { dim, entries: entries.into_iter().map(|z| (z.re, z.im)).collect() })
    }

    pub fn dim(&self) -> usize {
        match self {
            Matrix::Monomial { perm, .. } => perm.len(),
            Matrix::Dense { dim, .. } => *dim,
        }
    }

    pub fn to_dense(&self) -> Vec<Complex64> {
        match self {
            Matrix::Monomial { perm, phases } => {
                let d = perm.len();
                let mut out = vec![Complex64::new(0.0, 0.0); d * d];
                for (j, (&i, &p)) in perm.iter().zip(phases).enumerate() {
                    out[i * d + j] = p.to_complex();
                }
                out
            }
            Matrix::Dense { entries, .. } => entries.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        match (self, other) {
            (Matrix::Monomial { perm: p1, phases: f1 }, Matrix::Monomial { perm: p2, phases: f2 }) => {
                let perm = p2.iter().map(|&i| p1[i]).collect();
                let phases = p2.iter().zip(f2).map(|(&i, &f)| f + f1[i]).collect();
                Matrix::Monomial { perm, phases }
            }
            _ => {
                let d = self.dim();
                let (a, b) = (self.to_dense(), other.to_dense());
                let mut out = vec![Complex64::new(0.0, 0.0); d * d];
                for i in 0..d {
                    for k in 0..d {
                        let x = a[i * d + k];
                        for j in 0..d {
                            out[i * d + j] += x * b[k * d + j];
                        }
                    }
                }
                Matrix::dense(d, out).expect("square")
            }
        }
    }

    pub fn scaled(&self, p: Phase) -> Matrix {
        match self {
            Matrix::Monomial { perm, phases } => {
                Matrix::Monomial { perm: perm.clone(), phases: phases.iter().map(|&f| f + p).collect() }
            }
            Matrix::Dense { dim, .. } => {
                let z = p.to_complex();
                Matrix::dense(*dim, self.to_dense().into_iter().map(|x| x * z).collect()).expect("square")
            }
        }
    }

    /// Exact for two monomial matrices, within [`DENSE_TOLERANCE`] otherwise.
    pub fn approx_eq(&self, other: &Matrix) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        match (self, other) {
            (Matrix::Monomial { perm: p1, phases: f1 }, Matrix::Monomial { perm: p2, phases: f2 }) => {
                p1 == p2 && f1 == f2
            }
            _ => self.to_dense().iter().zip(other.to_dense()).all(|(a, b)| (a - b).norm() < DENSE_TOLERANCE),
        }
    }

    /// The phase of a `1×1` matrix.
    pub fn as_phase(&self) -> Option<Phase> {
        match self {
            Matrix::Monomial { phases, .. } if phases.len() == 1 => Some(phases[0]),
            _ => None,
        }
    }
}

/// A projective representation `ρ : K → GL_d` of a subgroup `K`, one matrix
/// per member (indexed by position in `K`).
#[derive(Clone, Debug)]
pub struct ScalarRep {
    domain: Subgroup,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl ScalarRep {
    pub fn from_fn(domain: &Subgroup, dim: usize, mut f: impl FnMut(usize) -> Matrix) -> Result<ScalarRep> {
        let matrices: Vec<Matrix> = domain.members().iter().map(|&x| f(x)).collect();
        if let Some(i) = matrices.iter().position(|m| m.dim() != dim) {
            return Err(Error::InvalidRep(format!("matrix of element {} has the wrong size", domain.members()[i])));
        }
        Ok(ScalarRep { domain: domain.clone(), dim, matrices })
    }

    /// The one-dimensional representation `h ↦ e^{2πi η(h)}`.
    pub fn one_dimensional(eta: &Cochain) -> ScalarRep {
        let dom = eta.domain().clone();
        let matrices = dom.members().iter().map(|&x| Matrix::scalar(1, eta.value(&[x]))).collect();
        ScalarRep { domain: dom, dim: 1, matrices }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, x: usize) -> &Matrix {
        &self.matrices[self.domain.position(x).expect("element of the domain")]
    }

    /// `η` with `ρ = e^{2πi η}` when `ρ` is one-dimensional.
    pub fn as_cochain(&self) -> Option<Cochain> {
        if self.dim != 1 {
            return None;
        }
        let phases: Option<Vec<Phase>> = self.matrices.iter().map(Matrix::as_phase).collect();
        let phases = phases?;
        Cochain::from_fn(1, &self.domain, |a| phases[self.domain.position(a[0]).unwrap()]).ok()
    }

    /// Checks `ρ(e) = 1` and `ρ(h₁)ρ(h₂) = e^{2πi ψ(h₁,h₂)} ρ(h₁h₂)` on every pair.
    pub fn check(&self, grp: &FiniteGroup, psi: &Cochain) -> Result<()> {
        if psi.domain() != &self.domain {
            return Err(Error::InvalidRep("representation and cocycle live on different subgroups".into()));
        }
        if !self.matrix(0).approx_eq(&Matrix::identity(self.dim)) {
            return Err(Error::InvalidRep("ρ(e) is not the identity".into()));
        }
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                let lhs = self.matrix(a).mul(self.matrix(b));
                let rhs = self.matrix(grp.mul(a, b)).scaled(psi.value(&[a, b]));
                if !lhs.approx_eq(&rhs) {
                    return Err(Error::InvalidRep(format!("twisted homomorphism law fails at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    /// Same phase tables (exact for monomial matrices).
    pub fn approx_eq(&self, other: &ScalarRep) -> bool {
        self.domain == other.domain
            && self.dim == other.dim
            && self.matrices.iter().zip(&other.matrices).all(|(a, b)| a.approx_eq(b))
    }
}

/// A component isomorphism `B_x → B_target`.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentMap {
    pub target: usize,
    pub matrix: Matrix,
}

/// `B = ⊕_{t∈T, k∈H} B_{tgk}` with every component a copy of `V`.
#[derive(Clone, Debug)]
pub struct GradedBimodule {
    g: usize,
    dim: usize,
    h: Subgroup,
    transversal: Vec<usize>,
    support: Vec<usize>,
    support_index: Vec<Option<usize>>,
    /// `left[pos(h) · |support| + i]` is `l_{h, support[i]}`.
    left: Vec<ComponentMap>,
    right: Vec<ComponentMap>,
}

impl GradedBimodule {
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `dim_k B`.
    pub fn total_dim(&self) -> usize {
        self.support.len() * self.dim
    }

    /// `dim_k B / |H|`.
    pub fn fpdim(&self) -> usize {
        self.total_dim() / self.h.order()
    }

    fn slot(&self, h: usize, x: usize) -> usize {
        self.h.position(h).expect("h in H") * self.support.len() + self.support_index[x].expect("x in the support")
    }

    /// `l_{h,x} : B_x → B_{hx}`.
    pub fn left(&self, h: usize, x: usize) -> &ComponentMap {
        &self.left[self.slot(h, x)]
    }

    /// `r_{x,h} : B_x → B_{xh}`.
    pub fn right(&self, x: usize, h: usize) -> &ComponentMap {
        &self.right[self.slot(h, x)]
    }

    /// Overwrites one left-action map, for fault injection in tests.
    pub fn set_left(&mut self, h: usize, x: usize, map: ComponentMap) {
        let s = self.slot(h, x);
        self.left[s] = map;
    }

    pub fn dump(&self) -> BimoduleDump {
        let entries = |maps: &[ComponentMap], left: bool| {
            let n = self.support.len();
            maps.iter()
                .enumerate()
                .map(|(s, m)| {
                    let (h, x) = (self.h.members()[s / n], self.support[s % n]);
                    ActionEntry { h, x, left, target: m.target, matrix: m.matrix.clone() }
                })
                .collect::<Vec<_>>()
        };
        let mut actions = entries(&self.left, true);
        actions.extend(entries(&self.right, false));
        BimoduleDump {
            g: self.g,
            dim: self.dim,
            transversal: self.transversal.clone(),
            support: self.support.clone(),
            actions,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionEntry {
    pub h: usize,
    pub x: usize,
    /// `true` for `l_{h,x}`, `false` for `r_{x,h}`.
    pub left: bool,
    pub target: usize,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct BimoduleDump {
    pub g: usize,
    pub dim: usize,
    pub transversal: Vec<usize>,
    pub support: Vec<usize>,
    pub actions: Vec<ActionEntry>,
}

/// Builds `B(g, ρ)` for a double-coset representative `g` and a
/// `ψ^g`-projective representation `ρ` of `H^g`.
///
/// Right action: `r_{tgk,h} = ψ(k,h) ω(tg,k,h)⁻¹`. Left action: writing
/// `ht = sp` with `s ∈ T`, `p ∈ H^g` and `p' = g⁻¹pg`,
/// `l_{h,tgk} : B_{tgk} → B_{sgp'k}` is the phase
/// `ψ(h,t) ψ(s,p)⁻¹ ψ(p'⁻¹, p'k)⁻¹ ω(h,tg,k) ω(s,g,p') ω(h,t,g) ω(s,p,g)⁻¹
/// ω(g,p',p'⁻¹) ω(p',p'⁻¹,p'k) ω(sg,p',k)⁻¹` times `ρ(p)`.
pub fn build_bimodule(data: &GTCategoryData, g: usize, rho: &ScalarRep) -> Result<GradedBimodule> {
    let grp = data.group();
    let h = data.subgroup();
    if data.cosets().rep_of(g) != g {
        return Err(Error::InvalidRep(format!("{g} is not the stored representative of its double coset")));
    }
    let hg = data.h_g(g);
    if rho.domain() != &hg {
        return Err(Error::InvalidRep("ρ must be defined on H^g".into()));
    }
    rho.check(grp, &data.psi_g(g))?;
    let (omega, psi) = (data.omega(), data.psi());
    let m = psi.modulus().lcm(&omega.modulus());
    let w = |a: usize, b: usize, c: usize| omega.scaled(&[a, b, c], m);
    let p = |a: usize, b: usize| psi.scaled(&[a, b], m);

    let transversal = grp.left_transversal(h, &hg);
    let mut t_of = vec![usize::MAX; grp.order()];
    for &t in &transversal {
        for &q in hg.members() {
            t_of[grp.mul(t, q)] = t;
        }
    }
    let mut support = Vec::with_capacity(transversal.len() * h.order());
    let mut parts = Vec::with_capacity(support.capacity());
    let mut support_index = vec![None; grp.order()];
    for &t in &transversal {
        for &k in h.members() {
            let x = grp.mul_all(&[t, g, k]);
            if support_index[x].is_some() {
                return Err(Error::InvalidRep("support elements tgk are not distinct".into()));
            }
            support_index[x] = Some(support.len());
            support.push(x);
            parts.push((t, k));
        }
    }

    let d = rho.dim();
    let n = support.len();
    let mut left = Vec::with_capacity(h.order() * n);
    let mut right = Vec::with_capacity(h.order() * n);
    for &a in h.members() {
        for (&x, &(t, k)) in support.iter().zip(&parts) {
            let tg = grp.mul(t, g);
            right.push(ComponentMap { target: grp.mul(x, a), matrix: Matrix::scalar(d, Phase::new(p(k, a) - w(tg, k, a), m)) });

            let at = grp.mul(a, t);
            let s = t_of[at];
            let q = grp.mul(grp.inv(s), at);
            let cp = grp.conjugate_inv(g, q);
            let cpi = grp.inv(cp);
            let cpk = grp.mul(cp, k);
            let v = p(a, t) - p(s, q) - p(cpi, cpk)
                + w(a, tg, k)
                + w(s, g, cp)
                + w(a, t, g)
                - w(s, q, g)
                + w(g, cp, cpi)
                + w(cp, cpi, cpk)
                - w(grp.mul(s, g), cp, k);
            let target = grp.mul_all(&[s, g, cpk]);
            debug_assert_eq!(target, grp.mul(a, x));
            left.push(ComponentMap { target, matrix: rho.matrix(q).scaled(Phase::new(v, m)) });
        }
    }
    Ok(GradedBimodule { g, dim: d, h: h.clone(), transversal, support, support_index, left, right })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BimoduleLaw {
    Left,
    Right,
    Commute,
}

/// First violated identity, as `(law, h₁, h₂, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub law: BimoduleLaw,
    pub h1: usize,
    pub h2: usize,
    pub x: usize,
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} law fails at (h1, h2, x) = ({}, {}, {})", self.law, self.h1, self.h2, self.x)
    }
}

/// Exhaustively checks, for all `h₁, h₂ ∈ H` and `x` in the support,
/// - `l_{h₁,h₂x} l_{h₂,x} = ω(h₁,h₂,x) ψ(h₁,h₂) l_{h₁h₂,x}`,
/// - `ω(x,h₁,h₂) r_{xh₁,h₂} r_{x,h₁} = ψ(h₁,h₂) r_{x,h₁h₂}`,
/// - `l_{h₁,xh₂} r_{x,h₂} = ω(h₁,x,h₂) r_{h₁x,h₂} l_{h₁,x}`.
pub fn check_bimodule_axioms(b: &GradedBimodule, data: &GTCategoryData) -> std::result::Result<(), AxiomFailure> {
    let grp = data.group();
    let (omega, psi) = (data.omega(), data.psi());
    let compose = |second: &ComponentMap, first: &ComponentMap| ComponentMap {
        target: second.target,
        matrix: second.matrix.mul(&first.matrix),
    };
    let same = |a: &ComponentMap, b: &ComponentMap| a.target == b.target && a.matrix.approx_eq(&b.matrix);
    for &x in &b.support {
        for &h1 in b.h.members() {
            for &h2 in b.h.members() {
                let fail = |law| AxiomFailure { law, h1, h2, x };
                let h12 = grp.mul(h1, h2);

                let inner = b.left(h2, x);
                let lhs = compose(b.left(h1, inner.target), inner);
                let one = b.left(h12, x);
                let rhs = ComponentMap {
                    target: one.target,
                    matrix: one.matrix.scaled(omega.value(&[h1, h2, x]) + psi.value(&[h1, h2])),
                };
                if !same(&lhs, &rhs) {
                    return Err(fail(BimoduleLaw::Left));
                }

                let inner = b.right(x, h1);
                let two = compose(b.right(inner.target, h2), inner);
                let lhs = ComponentMap { target: two.target, matrix: two.matrix.scaled(omega.value(&[x, h1, h2])) };
                let one = b.right(x, h12);
                let rhs = ComponentMap { target: one.target, matrix: one.matrix.scaled(psi.value(&[h1, h2])) };
                if !same(&lhs, &rhs) {
                    return Err(fail(BimoduleLaw::Right));
                }

                let r = b.right(x, h2);
                let lhs = compose(b.left(h1, r.target), r);
                let l = b.left(h1, x);
                let two = compose(b.right(l.target, h2), l);
                let rhs = ComponentMap { target: two.target, matrix: two.matrix.scaled(omega.value(&[h1, x, h2])) };
                if !same(&lhs, &rhs) {
                    return Err(fail(BimoduleLaw::Commute));
                }
            }
        }
    }
    Ok(())
}

/// `ρ(h) = r_{hg, g⁻¹h⁻¹g} ∘ l_{h,g}` on `B_g`, for `h ∈ H^g`.
pub fn extract_rep(b: &GradedBimodule, data: &GTCategoryData) -> Result<ScalarRep> {
    let grp = data.group();
    let g = b.g;
    if b.support_index[g].is_none() {
        return Err(Error::InvalidRep(format!("{g} is not in the support")));
    }
    let hg = data.h_g(g);
    let mut err = None;
    let rep = ScalarRep::from_fn(&hg, b.dim, |x| {
        let l = b.left(x, g);
        let r = b.right(l.target, grp.conjugate_inv(g, grp.inv(x)));
        if r.target != g {
            err = Some(Error::InvalidRep(format!("r ∘ l does not return to B_g for {x}")));
        }
        r.matrix.mul(&l.matrix)
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(rep),
    }
}

/// `B(g₁,ρ₁) ⊗_A B(g₂,ρ₂) ≅ B(g₃,ρ₃)` for invertible simples, computed by
/// moving `h ∈ H` through `v_{g₁} ⊗ w_{g₂k}` where `g₃ = u(g₁g₂) = g₁g₂k`.
/// Does not use the closed formula for `β`.
pub fn tensor_invertibles(
    data: &GTCategoryData,
    (g1, rho1): (usize, &Cochain),
    (g2, rho2): (usize, &Cochain),
) -> Result<(usize, Cochain)> {
    let grp = data.group();
    let h = data.subgroup();
    for g in [g1, g2] {
        if !grp.normalizes(g, h) {
            return Err(Error::NotNormalizing(g));
        }
    }
    let b1 = build_bimodule(data, g1, &ScalarRep::one_dimensional(rho1))?;
    let b2 = build_bimodule(data, g2, &ScalarRep::one_dimensional(rho2))?;
    let omega = data.omega();
    let g12 = grp.mul(g1, g2);
    let g3 = data.cosets().rep_of(g12);
    let k3 = grp.mul(grp.inv(g12), g3);
    let y0 = grp.mul(g2, k3);
    let phase = |m: &ComponentMap| m.matrix.as_phase().expect("one-dimensional");
    let mut bad = None;
    let rho3 = Cochain::from_fn(1, h, |args| {
        let x = args[0];
        // h·(v_{g₁} ⊗ w_{y₀}), reassociated
        let mut ph = omega.value(&[x, g1, y0]);
        let l1 = b1.left(x, g1);
        ph += phase(l1);
        let a = grp.mul(grp.inv(g1), l1.target);
        // v_{g₁a} = r_{g₁,a} v_{g₁}; move a across ⊗_A
        ph -= phase(b1.right(g1, a));
        ph -= omega.value(&[g1, a, y0]);
        let l2 = b2.left(a, y0);
        ph += phase(l2);
        // right action by g₃⁻¹h⁻¹g₃ brings B_{hg₃} back to B_{g₃}
        let hp = grp.conjugate_inv(g3, grp.inv(x));
        ph -= omega.value(&[g1, l2.target, hp]);
        let r2 = b2.right(l2.target, hp);
        ph += phase(r2);
        if r2.target != y0 {
            bad = Some(x);
        }
        ph
    })?;
    match bad {
        Some(x) => Err(Error::InvalidRep(format!("tensor product does not close up at {x}"))),
        None => Ok((g3, rho3)),
    }
}
