use super::{FiniteGroup, Subgroup};

/// Partition of `G` into double cosets `HxH`.
///
/// Representatives are the minimal element index of each coset, so the
/// identity coset `H·1·H` is coset 0 with representative 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    representatives: Vec<usize>,
    membership: Vec<usize>,
    sizes: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn new(g: &FiniteGroup, h: &Subgroup) -> DoubleCosetDecomposition {
        let n = g.order();
        let mut membership = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..n {
            if membership[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            let mut size = 0;
            for &a in h.members() {
                let ax = g.mul(a, x);
                for &b in h.members() {
                    let y = g.mul(ax, b);
                    if membership[y] == usize::MAX {
                        membership[y] = c;
                        size += 1;
                    }
                }
            }
            representatives.push(x);
            sizes.push(size);
        }
        DoubleCosetDecomposition { representatives, membership, sizes }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }

    /// Coset index of `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.membership[x]
    }

    /// `u(HxH)`: the stored representative of the coset containing `x`.
    pub fn rep_of(&self, x: usize) -> usize {
        self.representatives[self.membership[x]]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn members(&self, coset: usize) -> Vec<usize> {
        (0..self.membership.len()).filter(|&x| self.membership[x] == coset).collect()
    }

    pub fn is_representative(&self, x: usize) -> bool {
        self.rep_of(x) == x
    }
}

impl FiniteGroup {
    pub fn double_cosets(&self, h: &Subgroup) -> DoubleCosetDecomposition {
        DoubleCosetDecomposition::new(self, h)
    }

    /// `H ∩ gHg⁻¹`
    pub fn intersection_with_conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let members = h.members().iter().copied().filter(|&x| h.contains(self.conjugate_inv(g, x))).collect();
        self.finish_subgroup(members)
    }

    /// Left transversal of `small` in `big` (`small ≤ big`): minimal element
    /// of each coset `t·small`, so the identity comes first.
    pub fn left_transversal(&self, big: &Subgroup, small: &Subgroup) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut out = Vec::new();
        for &x in big.members() {
            if covered[x] {
                continue;
            }
            for &s in small.members() {
                covered[self.mul(x, s)] = true;
            }
            out.push(x);
        }
        out
    }
}
