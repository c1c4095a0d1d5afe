//! Crystal graph generation, axiom checking, rooted isomorphism and weight
//! multiplicities, plus the JSON and DOT serializations.

use crate::cartan::{simple_root, AffineWeight, Coroot, Index};
use crate::crystal::CrystalModel;
use crate::Error;
use serde::Serialize;
use std::collections::HashMap;

/// Default node cap for graph generation; exceeding it is a loud error
/// rather than silent truncation.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// One node of a generated crystal graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphNode {
    pub id: u32,
    pub key: String,
    #[serde(serialize_with = "serialize_weight")]
    pub wt: AffineWeight,
    /// Nodes at exactly the generation depth: their outgoing edges were not
    /// explored, so forward-looking checks skip them.
    pub frontier: bool,
}

fn serialize_weight<S: serde::Serializer>(w: &AffineWeight, s: S) -> Result<S::Ok, S::Error> {
    w.coefficients().serialize(s)
}

/// One lowering edge of a generated crystal graph.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GraphEdge {
    pub from: u32,
    pub to: u32,
    #[serde(serialize_with = "serialize_color")]
    pub i: Index,
}

fn serialize_color<S: serde::Serializer>(i: &Index, s: S) -> Result<S::Ok, S::Error> {
    i.value().serialize(s)
}

/// An edge-colored rooted crystal graph, generated breadth-first to a fixed
/// edge distance from the root (node 0). Node ids are dense in BFS order,
/// so two runs with the same inputs produce identical serializations.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub model: String,
    pub ground: u8,
    pub depth: u32,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    #[serde(skip)]
    pub affine: bool,
}

/// A generated graph together with the model elements behind its nodes.
#[derive(Clone, Debug)]
pub struct Generated<E> {
    pub graph: CrystalGraph,
    pub elems: Vec<E>,
}

/// Breadth-first closure of `root` under all lowering operators to edge
/// distance `depth`, deduplicating elements and caching weights.
pub fn build_graph<M: CrystalModel>(
    model: &M,
    root: M::Elem,
    depth: u32,
    node_cap: usize,
) -> Result<Generated<M::Elem>, Error> {
    let mut elems: Vec<M::Elem> = Vec::new();
    let mut level: Vec<u32> = Vec::new();
    let mut ids: HashMap<M::Elem, u32> = HashMap::new();
    let mut edges: Vec<GraphEdge> = Vec::new();

    elems.push(root.clone());
    level.push(0);
    ids.insert(root, 0);

    let mut cursor = 0usize;
    while cursor < elems.len() {
        let from = cursor as u32;
        let dist = level[cursor];
        cursor += 1;
        if dist == depth {
            continue;
        }
        let elem = elems[from as usize].clone();
        for i in Index::ALL {
            let Some(child) = model.f(i, &elem) else {
                continue;
            };
            let to = match ids.get(&child) {
                Some(&id) => id,
                None => {
                    let id = elems.len() as u32;
                    if elems.len() >= node_cap {
                        return Err(Error::Capacity { cap: node_cap });
                    }
                    elems.push(child.clone());
                    level.push(dist + 1);
                    ids.insert(child, id);
                    id
                }
            };
            edges.push(GraphEdge { from, to, i });
        }
    }

    let nodes = elems
        .iter()
        .zip(&level)
        .enumerate()
        .map(|(id, (e, &dist))| GraphNode {
            id: id as u32,
            key: model.key(e),
            wt: model.weight(e),
            frontier: dist == depth,
        })
        .collect();
    let graph = CrystalGraph {
        model: model.name().to_string(),
        ground: model
            .ground_of(&elems[0])
            .map(|g| g.value())
            .unwrap_or(0),
        depth,
        nodes,
        edges,
        affine: model.affine(),
    };
    Ok(Generated { graph, elems })
}

/// A violated crystal axiom, reported by node key and color.
#[derive(Clone, Debug)]
pub struct Violation {
    /// Which condition of the crystal definition failed: 1 through 4.
    pub condition: u8,
    pub node: String,
    pub color: Index,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "condition ({}) at {} color {}: {}",
            ["i", "ii", "iii", "iv"][(self.condition - 1) as usize],
            self.node,
            self.color,
            self.detail
        )
    }
}

/// Verifies the crystal axioms on every node of a generated graph.
///
/// Checked per node and color: (i) φ − ε equals the pairing of the weight
/// with the coroot; (ii) raising shifts the weight by +αᵢ; (iii) every edge
/// shifts it by −αᵢ; (iv) the recorded edges match the model's lowering
/// operator exactly and raising inverts them. Forward conditions are skipped
/// on frontier nodes, whose edges were never generated.
pub fn check_axioms<M: CrystalModel>(gen: &Generated<M::Elem>, model: &M) -> Vec<Violation> {
    let mut violations = Vec::new();
    let g = &gen.graph;
    let step = |i: Index| {
        if g.affine {
            simple_root(i)
        } else {
            simple_root(i).classical()
        }
    };

    let mut edge_map: HashMap<(u32, u8), u32> = HashMap::new();
    let mut indegree: HashMap<(u32, u8), u32> = HashMap::new();
    for e in &g.edges {
        edge_map.insert((e.from, e.i.value()), e.to);
        *indegree.entry((e.to, e.i.value())).or_insert(0) += 1;
    }

    for (id, elem) in gen.elems.iter().enumerate() {
        let node = &g.nodes[id];
        for i in Index::ALL {
            let eps = model.eps(i, elem);
            let phi = model.phi(i, elem);
            let paired = node.wt.pair(&Coroot::simple(i));
            if phi - eps != paired {
                violations.push(Violation {
                    condition: 1,
                    node: node.key.clone(),
                    color: i,
                    detail: format!("φ−ε = {} but ⟨wt,h⟩ = {paired}", phi - eps),
                });
            }
            if let Some(up) = model.e(i, elem) {
                let expected = node.wt + step(i);
                if model.weight(&up) != expected {
                    violations.push(Violation {
                        condition: 2,
                        node: node.key.clone(),
                        color: i,
                        detail: format!(
                            "wt(ẽ) = {} but expected {expected}",
                            model.weight(&up)
                        ),
                    });
                }
            }
            if !node.frontier {
                let down = model.f(i, elem);
                let recorded = edge_map.get(&(node.id, i.value())).copied();
                match (down, recorded) {
                    (None, None) => {}
                    (Some(child), Some(to)) => {
                        let target = &g.nodes[to as usize];
                        if model.key(&child) != target.key {
                            violations.push(Violation {
                                condition: 4,
                                node: node.key.clone(),
                                color: i,
                                detail: format!(
                                    "edge points at {} but f̃ gives {}",
                                    target.key,
                                    model.key(&child)
                                ),
                            });
                        }
                        if model.weight(&child) != node.wt - step(i) {
                            violations.push(Violation {
                                condition: 3,
                                node: node.key.clone(),
                                color: i,
                                detail: format!(
                                    "wt(f̃) = {} but expected {}",
                                    model.weight(&child),
                                    node.wt - step(i)
                                ),
                            });
                        }
                        if model.e(i, &child).as_ref().map(|x| model.key(x))
                            != Some(node.key.clone())
                        {
                            violations.push(Violation {
                                condition: 4,
                                node: node.key.clone(),
                                color: i,
                                detail: "raising does not invert the recorded edge".into(),
                            });
                        }
                    }
                    (Some(_), None) => violations.push(Violation {
                        condition: 4,
                        node: node.key.clone(),
                        color: i,
                        detail: "f̃ is defined but no edge was recorded".into(),
                    }),
                    (None, Some(_)) => violations.push(Violation {
                        condition: 4,
                        node: node.key.clone(),
                        color: i,
                        detail: "edge recorded but f̃ is null".into(),
                    }),
                }
            }
        }
    }

    // Lowering must be injective per color within the generated graph.
    for ((to, color), count) in indegree {
        if count > 1 {
            violations.push(Violation {
                condition: 4,
                node: g.nodes[to as usize].key.clone(),
                color: Index::new(color).unwrap(),
                detail: format!("{count} lowering edges of one color converge here"),
            });
        }
    }
    violations
}

/// Outcome of the rooted isomorphism check.
#[derive(Clone, Debug)]
pub enum IsoResult {
    /// Node bijection, indexed by the left graph's node ids.
    Isomorphic(Vec<u32>),
    /// First structural disagreement found.
    Mismatch(String),
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

/// Attempts the unique root-fixing isomorphism between two generated graphs.
///
/// Because lowering is deterministic, a root-fixing morphism is unique when
/// it exists: synchronized traversal from the roots either matches every
/// edge, color and weight, or pins down the first offence. Graphs must be
/// generated to equal depth; weights are compared classically unless both
/// sides carry a δ-grading.
pub fn check_root_isomorphism(ga: &CrystalGraph, gb: &CrystalGraph) -> IsoResult {
    if ga.depth != gb.depth {
        return IsoResult::Mismatch(format!(
            "depth mismatch: {} vs {}",
            ga.depth, gb.depth
        ));
    }
    if ga.nodes.len() != gb.nodes.len() {
        return IsoResult::Mismatch(format!(
            "node count mismatch: {} vs {}",
            ga.nodes.len(),
            gb.nodes.len()
        ));
    }
    let both_affine = ga.affine && gb.affine;
    let wt_of = |n: &GraphNode| {
        if both_affine {
            n.wt
        } else {
            n.wt.classical()
        }
    };

    let edges_of = |g: &CrystalGraph| {
        let mut map: HashMap<(u32, u8), u32> = HashMap::new();
        for e in &g.edges {
            map.insert((e.from, e.i.value()), e.to);
        }
        map
    };
    let ea = edges_of(ga);
    let eb = edges_of(gb);

    let unmapped = u32::MAX;
    let mut image = vec![unmapped; ga.nodes.len()];
    let mut preimage = vec![unmapped; gb.nodes.len()];
    image[0] = 0;
    preimage[0] = 0;
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(a) = queue.pop_front() {
        let b = image[a as usize];
        let na = &ga.nodes[a as usize];
        let nb = &gb.nodes[b as usize];
        if wt_of(na) != wt_of(nb) {
            return IsoResult::Mismatch(format!(
                "weight mismatch at {} ↔ {}: {} vs {}",
                na.key,
                nb.key,
                wt_of(na),
                wt_of(nb)
            ));
        }
        if na.frontier != nb.frontier {
            return IsoResult::Mismatch(format!(
                "frontier mismatch at {} ↔ {}",
                na.key, nb.key
            ));
        }
        if na.frontier {
            continue;
        }
        for i in Index::ALL {
            let ta = ea.get(&(a, i.value()));
            let tb = eb.get(&(b, i.value()));
            match (ta, tb) {
                (None, None) => {}
                (Some(&ta), Some(&tb)) => {
                    let known = image[ta as usize];
                    if known == unmapped {
                        if preimage[tb as usize] != unmapped {
                            return IsoResult::Mismatch(format!(
                                "two nodes map onto {}",
                                gb.nodes[tb as usize].key
                            ));
                        }
                        image[ta as usize] = tb;
                        preimage[tb as usize] = ta;
                        queue.push_back(ta);
                    } else if known != tb {
                        return IsoResult::Mismatch(format!(
                            "color-{i} edges out of {} disagree on the image of {}",
                            na.key, ga.nodes[ta as usize].key
                        ));
                    }
                }
                (Some(_), None) => {
                    return IsoResult::Mismatch(format!(
                        "{} has a color-{i} edge but its image {} has none",
                        na.key, nb.key
                    ))
                }
                (None, Some(_)) => {
                    return IsoResult::Mismatch(format!(
                        "{} lacks a color-{i} edge present at its image {}",
                        na.key, nb.key
                    ))
                }
            }
        }
    }
    if image.iter().any(|&x| x == unmapped) {
        return IsoResult::Mismatch("left graph is not connected to its root".into());
    }
    IsoResult::Isomorphic(image)
}

/// Node count per weight.
pub fn weight_multiplicities(g: &CrystalGraph) -> std::collections::BTreeMap<AffineWeight, usize> {
    let mut counts = std::collections::BTreeMap::new();
    for n in &g.nodes {
        *counts.entry(n.wt).or_insert(0) += 1;
    }
    counts
}

impl CrystalGraph {
    /// Serializes to the stable JSON schema.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    /// DOT rendering with the fixed color assignment 0 → red, 1 → blue,
    /// 2 → darkgreen.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        out.push_str("  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n");
        for n in &self.nodes {
            out.push_str(&format!(
                "  n{} [label=\"{}\"{}];\n",
                n.id,
                n.key,
                if n.frontier { " style=dashed" } else { "" }
            ));
        }
        for e in &self.edges {
            let color = match e.i.value() {
                0 => "red",
                1 => "blue",
                _ => "darkgreen",
            };
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\" color=\"{}\"];\n",
                e.from,
                e.to,
                e.i,
                color
            ));
        }
        out.push_str("}\n");
        out
    }
}
