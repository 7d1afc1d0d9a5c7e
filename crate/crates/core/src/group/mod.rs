//! Finite groups as dense Cayley tables, subgroups, and the group-theoretic
//! queries used by the category layer.

mod builtins;
mod characters;
mod cosets;
mod io;
mod series;

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use builtins::{builtin_group, catalog, BuiltinGroupInfo};
pub use characters::{irreducible_degrees, CharacterData};
pub(crate) use characters::primitive_root_of_unity as primitive_root_of_unity_mod;
pub use cosets::DoubleCosetDecomposition;
pub use io::GroupFile;
pub use series::{NilpotencyInfo, SubnormalSeries};

/// Default cap on group orders (Cayley tables are dense).
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Largest order for which associativity is checked on every triple.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const SAMPLED_ASSOC_TRIPLES: usize = 200_000;

/// A finite group with elements `0..n`, identity `0` and a dense table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    /// Permutation images (0-based) when the group came from permutations.
    perms: Option<Vec<Vec<u32>>>,
    gen_names: Vec<(String, usize)>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("name", &self.name).field("order", &self.n).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table. The identity is
    /// located and relabelled to index 0 if necessary.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotLatin(format!("row {a} has length {} (expected {n})", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange(x));
            }
        }
        check_latin(rows)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        // relabel so the identity is 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        let g = Self::assemble(name.into(), n, table, None)?;
        g.check_associative()?;
        Ok(g)
    }

    /// Closes a set of permutations of `0..degree` under composition.
    /// The product `a * b` applies `a` first, then `b`.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<FiniteGroup> {
        let mut gens = Vec::with_capacity(generators.len());
        for p in generators {
            if p.len() != degree {
                return Err(Error::InvalidGroup(format!("permutation {p:?} is not on {degree} points")));
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidGroup(format!("{p:?} is not a permutation")));
                }
                seen[x] = true;
            }
            gens.push(p.iter().map(|&x| x as u32).collect::<Vec<u32>>());
        }
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in &gens {
                let p: Vec<u32> = elems[i].iter().map(|&x| g[x as usize]).collect();
                if !index.contains_key(&p) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded { cap, got: elems.len() + 1 });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        let mut buf = vec![0u32; degree];
        for a in 0..n {
            for b in 0..n {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = elems[b][elems[a][k] as usize];
                }
                table[a * n + b] = index[&buf] as u32;
            }
        }
        Self::assemble(name.into(), n, table, Some(elems))
    }

    /// Table known to come from a group law (no associativity scan).
    pub(crate) fn from_trusted_table(name: String, n: usize, table: Vec<u32>) -> Result<FiniteGroup> {
        Self::assemble(name, n, table, None)
    }

    fn assemble(name: String, n: usize, table: Vec<u32>, perms: Option<Vec<Vec<u32>>>) -> Result<FiniteGroup> {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse[a] = b as u32;
        }
        let mut g = FiniteGroup { name, n, table, inverse, generators: Vec::new(), perms, gen_names: Vec::new() };
        let all: Vec<usize> = (0..n).collect();
        g.generators = g.generating_set(&all);
        Ok(g)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_generator_names(mut self, names: Vec<(String, usize)>) -> Self {
        self.gen_names = names;
        self
    }

    /// Named generators (e.g. `r`, `s` for the dihedral group).
    pub fn generator_names(&self) -> &[(String, usize)] {
        &self.gen_names
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// Left-to-right product of a word.
    pub fn mul_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g h g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `g⁻¹ h g`
    #[inline]
    pub fn conjugate_inv(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn permutation(&self, a: usize) -> Option<&[u32]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].len())
    }

    /// Looks up the element acting as the given permutation.
    pub fn find_permutation(&self, images: &[usize]) -> Option<usize> {
        let perms = self.perms.as_ref()?;
        perms.iter().position(|p| p.len() == images.len() && p.iter().zip(images).all(|(&a, &b)| a as usize == b))
    }

    /// Dense table as nested rows (for serialization).
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Greedy generating set for the subgroup with the given elements.
    fn generating_set(&self, members: &[usize]) -> Vec<usize> {
        let mut sub = Subgroup::trivial(self.n);
        let mut gens = Vec::new();
        for &x in members {
            if !sub.contains(x) {
                sub.add_generator(self, x);
                gens.push(x);
            }
        }
        gens
    }

    pub fn whole(&self) -> Subgroup {
        let mut s = Subgroup::from_sorted(self.n, (0..self.n).collect());
        s.generators = self.generators.clone();
        s
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self.n)
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup> {
        if let Some(&x) = gens.iter().find(|&&x| x >= self.n) {
            return Err(Error::IndexOutOfRange(x));
        }
        let mut s = Subgroup::trivial(self.n);
        for &g in gens {
            s.add_generator(self, g);
        }
        Ok(s)
    }

    /// Validates an explicit element list as a subgroup.
    pub fn subgroup_from_elements(&self, elems: &[usize]) -> Result<Subgroup> {
        let mut m: Vec<usize> = elems.to_vec();
        m.sort_unstable();
        m.dedup();
        if let Some(&x) = m.iter().find(|&&x| x >= self.n) {
            return Err(Error::IndexOutOfRange(x));
        }
        let s = self.subgroup_generated(&m)?;
        if s.order() != m.len() {
            return Err(Error::NotSubgroup(format!("{elems:?} is not closed under products")));
        }
        Ok(s)
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.n)
            .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        self.finish_subgroup(members)
    }

    pub fn centralizer(&self, h: usize) -> Subgroup {
        let members = (0..self.n).filter(|&x| self.mul(x, h) == self.mul(h, x)).collect();
        self.finish_subgroup(members)
    }

    /// Center of a subgroup `h`, as a subgroup of `self`.
    pub fn center_of(&self, h: &Subgroup) -> Subgroup {
        let members = h
            .members()
            .iter()
            .copied()
            .filter(|&z| h.generators().iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        self.finish_subgroup(members)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = (0..self.n).filter(|&g| h.generators().iter().all(|&x| h.contains(self.conjugate(g, x)))).collect();
        self.finish_subgroup(members)
    }

    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| h.contains(self.conjugate(g, x)))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&g| self.normalizes(g, h))
    }

    /// `K` normal in `L`, both subgroups of `self`.
    pub fn is_normal_in(&self, k: &Subgroup, l: &Subgroup) -> bool {
        l.generators().iter().all(|&g| self.normalizes(g, k))
    }

    pub(crate) fn finish_subgroup(&self, members: Vec<usize>) -> Subgroup {
        let mut s = Subgroup::from_sorted(self.n, members);
        s.generators = self.generating_set(s.members());
        s
    }

    /// Conjugacy classes, in order of their smallest element; class 0 is `{e}`.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut orbit = vec![x];
            class_of[x] = c;
            let mut i = 0;
            while i < orbit.len() {
                for &g in &self.generators {
                    let y = self.conjugate(g, orbit[i]);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// The subgroup as a group in its own right, elements relabelled by
    /// their position in `h.members()`.
    pub fn restrict_to(&self, h: &Subgroup) -> FiniteGroup {
        let m = h.members();
        let k = m.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in m.iter().enumerate() {
            for (j, &b) in m.iter().enumerate() {
                table[i * k + j] = h.position(self.mul(a, b)).expect("subgroup closed") as u32;
            }
        }
        let perms = self.perms.as_ref().map(|p| m.iter().map(|&x| p[x].clone()).collect());
        Self::assemble(format!("{}<{}>", self.name, k), k, table, perms).expect("subgroup is a group")
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / n2, y / n2);
                let b = other.mul(x % n2, y % n2);
                table[x * n + y] = (a * n2 + b) as u32;
            }
        }
        let perms = match (&self.perms, &other.perms) {
            (Some(p), Some(q)) => {
                let d1 = p[0].len() as u32;
                Some(
                    (0..n)
                        .map(|x| {
                            let mut v = p[x / n2].clone();
                            v.extend(q[x % n2].iter().map(|&i| i + d1));
                            v
                        })
                        .collect(),
                )
            }
            _ => None,
        };
        Self::assemble(format!("{}x{}", self.name, other.name), n, table, perms).expect("product of groups")
    }

    /// `(a, b) ↦ a·n2 + b` embedding of the diagonal `{(g, g)}` of `G × G`.
    pub fn diagonal_in_square(&self, square: &FiniteGroup) -> Subgroup {
        let members: Vec<usize> = (0..self.n).map(|g| g * self.n + g).collect();
        let mut m = members.clone();
        m.sort_unstable();
        square.finish_subgroup(m)
    }

    /// Quotient by a normal subgroup. Returns the quotient and the map
    /// sending each element to its coset's index; coset of `e` is 0.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::NotSubgroup("quotient by a non-normal subgroup".into()));
        }
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset[x] == usize::MAX {
                for &h in normal.members() {
                    coset[self.mul(x, h)] = reps.len();
                }
                reps.push(x);
            }
        }
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = coset[self.mul(reps[i], reps[j])] as u32;
            }
        }
        let q = Self::assemble(format!("{}/{}", self.name, normal.order()), k, table, None)?;
        Ok((q, coset))
    }
}

fn check_latin(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (a, row) in rows.iter().enumerate() {
        for &x in row {
            if seen[x] == a {
                return Err(Error::NotLatin(format!("row {a} repeats {x}")));
            }
            seen[x] = a;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for b in 0..n {
        for (a, row) in rows.iter().enumerate() {
            let x = row[b];
            if seen[x] == b {
                return Err(Error::NotLatin(format!("column {b} repeats {x} (row {a})")));
            }
            seen[x] = b;
        }
    }
    Ok(())
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted member list with
/// O(1) membership and position lookup.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    position: Vec<u32>,
    generators: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

const ABSENT: u32 = u32::MAX;

// Equality is by member set; the generating set is incidental.
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Subgroup {
    fn trivial(parent_order: usize) -> Subgroup {
        let mut position = vec![ABSENT; parent_order];
        position[0] = 0;
        Subgroup { members: vec![0], position, generators: Vec::new() }
    }

    fn from_sorted(parent_order: usize, members: Vec<usize>) -> Subgroup {
        let mut position = vec![ABSENT; parent_order];
        for (i, &x) in members.iter().enumerate() {
            position[x] = i as u32;
        }
        Subgroup { members, position, generators: Vec::new() }
    }

    fn add_generator(&mut self, g: &FiniteGroup, x: usize) {
        if self.contains(x) {
            return;
        }
        self.generators.push(x);
        let mut queue = self.members.clone();
        let mut added = Vec::new();
        while let Some(y) = queue.pop() {
            for &s in &self.generators {
                let z = g.mul(y, s);
                if self.position[z] == ABSENT {
                    self.position[z] = 0;
                    added.push(z);
                    queue.push(z);
                }
            }
        }
        self.members.extend(added);
        self.members.sort_unstable();
        for (i, &m) in self.members.iter().enumerate() {
            self.position[m] = i as u32;
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.position[x] != ABSENT
    }

    /// Index of `x` within `members()`.
    #[inline]
    pub fn position(&self, x: usize) -> Option<usize> {
        match self.position[x] {
            ABSENT => None,
            p => Some(p as usize),
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn parent_order(&self) -> usize {
        self.position.len()
    }
}
