//! Graph-based families: graphic, bicircular, cographic and signed-graphic
//! matroids of a multigraph. Edge `i` of the graph is element `i`.

use crate::error::{MatroidError, Result};
use crate::matroid::{Family, IndependenceOracle, Matroid};
use crate::subset::{Subset, MAX_GROUND_SIZE};
use crate::union_find::{SignedUnion, SignedUnionFind, UnionFind};

/// A loopless multigraph; parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(MatroidError::FamilyPrecondition(
                "a graph needs at least one vertex".into(),
            ));
        }
        if edges.len() > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(edges.len()));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(MatroidError::FamilyPrecondition(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{num_vertices}"
                )));
            }
            if u == v {
                return Err(MatroidError::FamilyPrecondition(format!(
                    "edge {i} is a loop at vertex {u}"
                )));
            }
        }
        Ok(Multigraph {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Union-find over the edges in `set`.
    pub fn components_of(&self, set: Subset) -> UnionFind {
        let mut uf = UnionFind::new(self.num_vertices);
        for e in set {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        uf
    }

    fn is_connected(&self) -> bool {
        self.components_of(Subset::full(self.edges.len())).components() == 1
    }
}

/// `K_n` with edges `(i, j)`, `i < j`, in lexicographic order.
pub fn complete_graph(n: usize) -> Multigraph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Multigraph::new(n.max(1), edges).expect("complete graph is well formed")
}

/// A multigraph whose edges carry a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMultigraph {
    graph: Multigraph,
    negative: Vec<bool>,
}

impl SignedMultigraph {
    /// `edges` are `(u, v, sign)` with sign `+1` or `-1`.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize, i8)>) -> Result<Self> {
        let mut negative = Vec::with_capacity(edges.len());
        for (i, &(_, _, s)) in edges.iter().enumerate() {
            match s {
                1 => negative.push(false),
                -1 => negative.push(true),
                _ => {
                    return Err(MatroidError::FamilyPrecondition(format!(
                        "edge {i} has sign {s}; expected +1 or -1"
                    )))
                }
            }
        }
        let graph = Multigraph::new(num_vertices, edges.iter().map(|&(u, v, _)| (u, v)).collect())?;
        Ok(SignedMultigraph { graph, negative })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn sign(&self, edge: usize) -> i8 {
        if self.negative[edge] {
            -1
        } else {
            1
        }
    }

    fn signed_components(&self, set: Subset) -> SignedUnionFind {
        let mut uf = SignedUnionFind::new(self.graph.num_vertices);
        for e in set {
            let (u, v) = self.graph.edges[e];
            uf.union(u, v, self.negative[e]);
        }
        uf
    }
}

/// `±K_n`: for each pair `i < j` a positive edge followed by a negative one.
pub fn signed_complete_graph(n: usize) -> SignedMultigraph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| [(i, j, 1), (i, j, -1)]))
        .collect();
    SignedMultigraph::new(n.max(1), edges).expect("signed complete graph is well formed")
}

#[derive(Debug)]
struct GraphicOracle(Multigraph);

impl IndependenceOracle for GraphicOracle {
    fn ground_size(&self) -> usize {
        self.0.num_edges()
    }

    fn is_independent(&self, set: Subset) -> bool {
        let mut uf = UnionFind::new(self.0.num_vertices);
        set.iter().all(|e| {
            let (u, v) = self.0.edges[e];
            uf.union(u, v)
        })
    }

    fn rank(&self, set: Subset) -> usize {
        self.0.num_vertices - self.0.components_of(set).components()
    }

    fn closure(&self, set: Subset) -> Subset {
        let mut uf = self.0.components_of(set);
        let mut closed = set;
        for x in set.complement(self.0.num_edges()) {
            let (u, v) = self.0.edges[x];
            if uf.find(u) == uf.find(v) {
                closed.insert(x);
            }
        }
        closed
    }
}

/// Forests of `graph` are independent; `r(S) = |V| − components(V, S)`.
pub fn graphic_matroid(graph: &Multigraph) -> Result<Matroid> {
    Matroid::from_oracle(GraphicOracle(graph.clone()), Family::Graphic)
}

#[derive(Debug)]
struct BicircularOracle(Multigraph);

impl IndependenceOracle for BicircularOracle {
    fn ground_size(&self) -> usize {
        self.0.num_edges()
    }

    fn is_independent(&self, set: Subset) -> bool {
        let mut uf = UnionFind::new(self.0.num_vertices);
        for e in set {
            let (u, v) = self.0.edges[e];
            uf.union(u, v);
            let root = uf.find(u);
            let (vertices, edges) = uf.component_counts(root);
            if edges > vertices {
                return false;
            }
        }
        true
    }

    fn rank(&self, set: Subset) -> usize {
        let uf = self.0.components_of(set);
        let trees = uf
            .roots()
            .filter(|&r| {
                let (vertices, edges) = uf.component_counts(r);
                edges + 1 == vertices
            })
            .count();
        self.0.num_vertices - trees
    }

    fn closure(&self, set: Subset) -> Subset {
        let mut uf = self.0.components_of(set);
        let mut closed = set;
        for x in set.complement(self.0.num_edges()) {
            let (u, v) = self.0.edges[x];
            let (ru, rv) = (uf.find(u), uf.find(v));
            let cyclic = |r: usize| {
                let (vertices, edges) = uf.component_counts(r);
                edges >= vertices
            };
            // The rank only stays put when no tree component is touched.
            if cyclic(ru) && cyclic(rv) {
                closed.insert(x);
            }
        }
        closed
    }
}

/// Pseudoforests of `graph` are independent; `r(S) = |V| − τ(S)` with
/// `τ` the number of tree components. `graph` must be connected and contain
/// a cycle.
pub fn bicircular_matroid(graph: &Multigraph) -> Result<Matroid> {
    if !graph.is_connected() {
        return Err(MatroidError::FamilyPrecondition(
            "bicircular matroid needs a connected graph".into(),
        ));
    }
    if graph.num_edges() < graph.num_vertices() {
        return Err(MatroidError::FamilyPrecondition(
            "bicircular matroid needs a graph with a cycle".into(),
        ));
    }
    Matroid::from_oracle(BicircularOracle(graph.clone()), Family::Bicircular)
}

#[derive(Debug)]
struct CographicOracle(Multigraph);

impl CographicOracle {
    fn complement_components(&self, set: Subset) -> usize {
        self.0
            .components_of(set.complement(self.0.num_edges()))
            .components()
    }
}

impl IndependenceOracle for CographicOracle {
    fn ground_size(&self) -> usize {
        self.0.num_edges()
    }

    fn is_independent(&self, set: Subset) -> bool {
        self.complement_components(set) == 1
    }

    fn rank(&self, set: Subset) -> usize {
        set.len() + 1 - self.complement_components(set)
    }
}

/// Sets whose removal leaves `graph` connected are independent;
/// `r(S) = |S| − q(E∖S) + 1`. `graph` must be connected.
pub fn cographic_matroid(graph: &Multigraph) -> Result<Matroid> {
    if !graph.is_connected() {
        return Err(MatroidError::FamilyPrecondition(
            "cographic matroid needs a connected graph".into(),
        ));
    }
    Matroid::from_oracle(CographicOracle(graph.clone()), Family::Cographic)
}

#[derive(Debug)]
struct SignedOracle(SignedMultigraph);

impl IndependenceOracle for SignedOracle {
    fn ground_size(&self) -> usize {
        self.0.graph.num_edges()
    }

    fn is_independent(&self, set: Subset) -> bool {
        let mut uf = SignedUnionFind::new(self.0.graph.num_vertices);
        set.iter().all(|e| {
            let (u, v) = self.0.graph.edges[e];
            match uf.union(u, v, self.0.negative[e]) {
                SignedUnion::Merged { both_cyclic } => !both_cyclic,
                SignedUnion::Cycle {
                    negative,
                    already_cyclic,
                } => negative && !already_cyclic,
            }
        })
    }

    fn rank(&self, set: Subset) -> usize {
        self.0.graph.num_vertices - self.0.signed_components(set).balanced_components()
    }
}

/// Edge sets whose components are trees or contain exactly one cycle, that
/// cycle negative, are independent; `r(S) = |V| − b(S)` with `b` the number
/// of balanced components. `graph` must be connected and contain a negative
/// cycle.
pub fn signed_matroid(graph: &SignedMultigraph) -> Result<Matroid> {
    if !graph.graph.is_connected() {
        return Err(MatroidError::FamilyPrecondition(
            "signed-graphic matroid needs a connected graph".into(),
        ));
    }
    let all = Subset::full(graph.graph.num_edges());
    if graph.signed_components(all).balanced_components() != 0 {
        return Err(MatroidError::FamilyPrecondition(
            "signed-graphic matroid needs a negative cycle".into(),
        ));
    }
    Matroid::from_oracle(SignedOracle(graph.clone()), Family::Signed)
}
