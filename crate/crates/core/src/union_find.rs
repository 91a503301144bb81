//! Disjoint-set forests used by the graph-based families.

/// Union-find with path halving and union by size. Each root also tracks
/// how many edges have been added inside its component.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    edges: Vec<u32>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            edges: vec![0; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Adds edge `(u, v)`. Returns `false` when it closes a cycle.
    pub fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            self.edges[a] += 1;
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        self.edges[a] += self.edges[b] + 1;
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// `(vertices, edges)` of the component rooted at `root`.
    pub fn component_counts(&self, root: usize) -> (usize, usize) {
        (self.size[root] as usize, self.edges[root] as usize)
    }

    /// Iterator over component roots.
    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parent.len()).filter(move |&x| self.parent[x] as usize == x)
    }
}

/// Union-find over a signed graph. Every node stores the sign of its path to
/// the root, so the sign of the cycle closed by an edge inside a component is
/// known in near-constant time. Roots carry a flag for "component already
/// contains a negative cycle".
#[derive(Clone, Debug)]
pub struct SignedUnionFind {
    parent: Vec<u32>,
    /// `true` when the path to the parent has negative sign.
    odd: Vec<bool>,
    size: Vec<u32>,
    unbalanced: Vec<bool>,
    cyclic: Vec<bool>,
}

/// What happened when an edge was added to a [`SignedUnionFind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedUnion {
    /// Joined two components.
    Merged { both_cyclic: bool },
    /// Closed a cycle; `negative` is its sign and `already_cyclic` says
    /// whether the component had a cycle before.
    Cycle { negative: bool, already_cyclic: bool },
}

impl SignedUnionFind {
    pub fn new(n: usize) -> Self {
        SignedUnionFind {
            parent: (0..n as u32).collect(),
            odd: vec![false; n],
            size: vec![1; n],
            unbalanced: vec![false; n],
            cyclic: vec![false; n],
        }
    }

    /// Root of `x` and the parity of the path from `x` to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x] as usize;
        if p == x {
            return (x, false);
        }
        let (root, parity) = self.find(p);
        let total = parity ^ self.odd[x];
        self.parent[x] = root as u32;
        self.odd[x] = total;
        (root, total)
    }

    /// Adds the edge `(u, v)` with sign `negative`.
    pub fn union(&mut self, u: usize, v: usize, negative: bool) -> SignedUnion {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            let negative_cycle = pu ^ pv ^ negative;
            let already_cyclic = self.cyclic[ru];
            self.cyclic[ru] = true;
            self.unbalanced[ru] |= negative_cycle;
            return SignedUnion::Cycle {
                negative: negative_cycle,
                already_cyclic,
            };
        }
        let both_cyclic = self.cyclic[ru] && self.cyclic[rv];
        let (big, small) = if self.size[ru] >= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[small] = big as u32;
        // parity(u) ^ parity(v) ^ sign must be the parity of the new link.
        self.odd[small] = pu ^ pv ^ negative;
        self.size[big] += self.size[small];
        self.unbalanced[big] |= self.unbalanced[small];
        self.cyclic[big] |= self.cyclic[small];
        SignedUnion::Merged { both_cyclic }
    }

    /// Number of components without a negative cycle.
    pub fn balanced_components(&self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.parent[x] as usize == x && !self.unbalanced[x])
            .count()
    }
}
