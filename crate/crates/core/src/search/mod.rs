//! Exhaustive branch-and-prune search for connected cubic graphs with
//! λ_min in `[β, −2)`.
//!
//! Every connected cubic graph with λ_min < −2 is not a line graph, so it
//! contains an induced claw or an induced diamond. Phase 1 grows from the
//! diamond; phase 2 grows from the claw and discards any node with an
//! induced diamond (those graphs were covered by phase 1).
//!
//! Growth keeps every node an induced subgraph of each of its completions:
//! a child adds one fresh vertex adjacent to the lowest deficient vertex `v`
//! and to at most two other deficient vertices, and the new vertex's
//! adjacencies are final. By interlacing a node with λ_min < β − tol has no
//! completion in range and is pruned. The completions reachable from a node
//! depend only on its isomorphism class, so each level is deduplicated by
//! canonical form.

mod certify;
mod enumerate;
mod tree;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, find_induced, graph6, standard_graph, CanonicalForm, PatternKind, SimpleGraph, StandardFamily, CANON_LIMIT};
use crate::spectra::{beta, graph_lambda_min};

pub use certify::{certify_beta, prune_test, BetaCertificate, BetaVerdict, PruneDecision};
pub use enumerate::connected_cubic_graphs;
pub use tree::{NodeStatus, PruneReason, SearchTree, TreeNode};

use certify::EIGEN_TOL;

/// Identifies checkpoint documents.
pub const CHECKPOINT_FORMAT: &str = "hoffgraph-eta3-checkpoint/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Phase {
    DiamondSeed,
    ClawSeedDiamondFree,
    Both,
}

impl Phase {
    fn runs(self) -> Vec<Phase> {
        match self {
            Phase::Both => vec![Phase::DiamondSeed, Phase::ClawSeedDiamondFree],
            p => vec![p],
        }
    }

    fn seed(self) -> SimpleGraph {
        let family = match self {
            Phase::DiamondSeed => StandardFamily::Diamond,
            _ => StandardFamily::Claw,
        };
        standard_graph(family, &[]).expect("seed graphs")
    }
}

impl FromStr for Phase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "diamond" | "diamond_seed" => Ok(Phase::DiamondSeed),
            "2" | "claw" | "claw_seed_diamond_free" => Ok(Phase::ClawSeedDiamondFree),
            "both" => Ok(Phase::Both),
            _ => Err(Error::input(format!("unknown phase `{s}` (expected 1, 2 or both)"))),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::DiamondSeed => "1",
            Phase::ClawSeedDiamondFree => "2",
            Phase::Both => "both",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_vertices: usize,
    pub tol: f64,
    pub phase: Phase,
    pub emit_tree: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Maximum number of node expansions before the search stops with a
    /// checkpoint. Checked between levels.
    pub node_budget: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: 20,
            tol: 1e-9,
            phase: Phase::Both,
            emit_tree: false,
            workers: None,
            node_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_vertices < 4 || self.max_vertices > CANON_LIMIT {
            return Err(Error::input(format!(
                "max_vertices must be in 4..={CANON_LIMIT}, got {}",
                self.max_vertices
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::input(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.workers == Some(0) {
            return Err(Error::input("workers must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseStats {
    pub phase: Option<Phase>,
    pub expanded: usize,
    pub pruned_lambda: usize,
    pub pruned_diamond: usize,
    pub completed: usize,
    pub truncated: usize,
    /// Isomorphic children of one parent merged together.
    pub sibling_merges: usize,
    /// Isomorphic nodes with different parents merged together.
    pub cross_merges: usize,
    pub max_order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalGraph {
    /// graph6 of the canonical form.
    pub graph6: String,
    pub order: usize,
    pub lambda_min: f64,
    pub phase: Phase,
    pub certificate: BetaCertificate,
    #[serde(skip)]
    pub graph: SimpleGraph,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchResult {
    pub max_vertices: usize,
    pub tol: f64,
    /// Sorted by canonical graph6.
    pub extremal_graphs: Vec<ExtremalGraph>,
    pub stats: Vec<PhaseStats>,
    /// Every qualifying graph with at most this many vertices is listed.
    pub complete_up_to: usize,
    /// No node was cut off by the vertex bound, so the list is complete for
    /// every order.
    pub exhausted: bool,
    #[serde(skip)]
    pub tree: Option<SearchTree>,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serialization")
    }
}

/// Resumable search state: the unexpanded frontier of the phase in progress
/// as graph6 strings at a common depth, plus everything found so far.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: String,
    pub max_vertices: usize,
    pub tol: f64,
    /// The first entry is the phase in progress.
    pub phases: Vec<Phase>,
    /// Vertices added to the seed so far.
    pub depth: usize,
    pub frontier: Vec<String>,
    pub found: Vec<String>,
    pub stats: Vec<PhaseStats>,
    pub expanded: usize,
    pub truncated: bool,
}

impl Checkpoint {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("checkpoint serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Checkpoint = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: crate::graph::json_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })?;
        if c.format != CHECKPOINT_FORMAT {
            return Err(Error::input(format!("unsupported checkpoint format `{}`", c.format)));
        }
        Ok(c)
    }
}

pub fn search_eta3(config: &SearchConfig) -> Result<SearchResult> {
    run(config, None)
}

/// Continues from a checkpoint. The vertex bound and tolerance come from
/// the checkpoint; the rest of `config` applies.
pub fn resume_eta3(config: &SearchConfig, checkpoint: &Checkpoint) -> Result<SearchResult> {
    let config = SearchConfig { max_vertices: checkpoint.max_vertices, tol: checkpoint.tol, ..config.clone() };
    run(&config, Some(checkpoint))
}

#[derive(Clone)]
struct Node {
    graph: SimpleGraph,
    tree_id: Option<usize>,
}

enum ChildKind {
    Pruned(PruneReason),
    Kept(CanonicalForm),
}

struct Child {
    graph: SimpleGraph,
    lambda: f64,
    kind: ChildKind,
}

struct State {
    found: BTreeMap<String, ExtremalGraph>,
    stats: Vec<PhaseStats>,
    tree: Option<SearchTree>,
    expanded: usize,
    truncated: bool,
}

fn run(config: &SearchConfig, start: Option<&Checkpoint>) -> Result<SearchResult> {
    config.validate()?;
    let pool = match config.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::input(format!("cannot start {w} workers: {e}")))?,
        ),
        None => None,
    };
    let mut state = State {
        found: BTreeMap::new(),
        stats: Vec::new(),
        tree: config.emit_tree.then(SearchTree::default),
        expanded: 0,
        truncated: false,
    };
    let phases = match start {
        Some(c) => {
            state.stats = c.stats.clone();
            state.expanded = c.expanded;
            state.truncated = c.truncated;
            let first = *c.phases.first().ok_or_else(|| Error::input("checkpoint has no phase in progress"))?;
            for g6 in &c.found {
                record_completion(&mut state, graph6::decode(g6)?, first, config.tol)?;
            }
            c.phases.clone()
        }
        None => config.phase.runs(),
    };

    for (pi, &phase) in phases.iter().enumerate() {
        let resumed = start.filter(|_| pi == 0);
        let (mut frontier, mut depth) = match resumed {
            Some(c) => {
                let nodes = c
                    .frontier
                    .iter()
                    .map(|s| Ok(Node { graph: graph6::decode(s)?, tree_id: None }))
                    .collect::<Result<Vec<_>>>()?;
                (nodes, c.depth)
            }
            None => {
                state.stats.push(PhaseStats { phase: Some(phase), ..PhaseStats::default() });
                let seed = phase.seed();
                let lambda = graph_lambda_min(&seed, EIGEN_TOL)?;
                let tree_id = state.tree.as_mut().map(|t| {
                    t.push(tree_node(phase, None, &seed, lambda, NodeStatus::Expanded))
                });
                (vec![Node { graph: seed, tree_id }], 0)
            }
        };
        while !frontier.is_empty() {
            if let Some(budget) = config.node_budget {
                if state.expanded + frontier.len() > budget {
                    let checkpoint = Checkpoint {
                        format: CHECKPOINT_FORMAT.to_string(),
                        max_vertices: config.max_vertices,
                        tol: config.tol,
                        phases: phases[pi..].to_vec(),
                        depth,
                        frontier: frontier.iter().map(|n| graph6::encode(&n.graph)).collect(),
                        found: state.found.keys().cloned().collect(),
                        stats: state.stats.clone(),
                        expanded: state.expanded,
                        truncated: state.truncated,
                    };
                    return Err(Error::Budget { budget, expanded: state.expanded, checkpoint: checkpoint.to_json() });
                }
            }
            let expand_all = || -> Result<Vec<Vec<Child>>> {
                frontier.par_iter().map(|n| expand(&n.graph, phase, config.tol)).collect()
            };
            let children = match &pool {
                Some(p) => p.install(expand_all)?,
                None => expand_all()?,
            };
            state.expanded += frontier.len();
            state.stats.last_mut().expect("phase stats").expanded += frontier.len();
            frontier = merge_level(&mut state, config, phase, &frontier, children)?;
            depth += 1;
        }
    }

    let extremal_graphs: Vec<ExtremalGraph> = state.found.into_values().collect();
    Ok(SearchResult {
        max_vertices: config.max_vertices,
        tol: config.tol,
        extremal_graphs,
        stats: state.stats,
        complete_up_to: config.max_vertices,
        exhausted: !state.truncated,
        tree: state.tree,
    })
}

/// All children of a node, classified but not yet deduplicated.
fn expand(g: &SimpleGraph, phase: Phase, tol: f64) -> Result<Vec<Child>> {
    let deficient: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) < 3).collect();
    let Some((&v, others)) = deficient.split_first() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for r in 0..=others.len().min(2) {
        for extra in enumerate::subsets(others, r) {
            let mut h = g.clone();
            let w = h.add_vertex();
            h.add_edge(v, w)?;
            for &u in &extra {
                h.add_edge(u, w)?;
            }
            let lambda = graph_lambda_min(&h, EIGEN_TOL)?;
            let kind = if phase == Phase::ClawSeedDiamondFree && find_induced(&h, PatternKind::Diamond).is_some() {
                ChildKind::Pruned(PruneReason::Diamond)
            } else if lambda < beta() - tol {
                ChildKind::Pruned(PruneReason::Lambda)
            } else {
                ChildKind::Kept(canonical_form(&h)?)
            };
            out.push(Child { graph: h, lambda, kind });
        }
    }
    Ok(out)
}

/// Sequential, order-preserving merge of one level: dedup, completion and
/// truncation. Returns the next frontier.
fn merge_level(
    state: &mut State,
    config: &SearchConfig,
    phase: Phase,
    parents: &[Node],
    children: Vec<Vec<Child>>,
) -> Result<Vec<Node>> {
    let mut next = Vec::new();
    let mut seen: HashMap<CanonicalForm, (usize, Option<usize>)> = HashMap::new();
    for (pi, (parent, kids)) in parents.iter().zip(children).enumerate() {
        for child in kids {
            let stats = state.stats.last_mut().expect("phase stats");
            stats.max_order = stats.max_order.max(child.graph.order());
            let canon = match child.kind {
                ChildKind::Pruned(reason) => {
                    match reason {
                        PruneReason::Lambda => stats.pruned_lambda += 1,
                        PruneReason::Diamond => stats.pruned_diamond += 1,
                    }
                    if let Some(t) = state.tree.as_mut() {
                        let mut node = tree_node(phase, parent.tree_id, &child.graph, child.lambda, NodeStatus::Pruned);
                        node.prune_reason = Some(reason);
                        t.push(node);
                    }
                    continue;
                }
                ChildKind::Kept(c) => c,
            };
            if let Some(&(first_parent, first_id)) = seen.get(&canon) {
                if first_parent == pi {
                    stats.sibling_merges += 1;
                } else {
                    stats.cross_merges += 1;
                }
                if let Some(t) = state.tree.as_mut() {
                    let mut node = tree_node(phase, parent.tree_id, &child.graph, child.lambda, NodeStatus::Merged);
                    node.merged_into = first_id;
                    t.push(node);
                }
                continue;
            }
            let complete = child.graph.degrees().iter().all(|&d| d == 3);
            let status = if complete {
                stats.completed += 1;
                NodeStatus::Completed
            } else if child.graph.order() >= config.max_vertices {
                stats.truncated += 1;
                state.truncated = true;
                NodeStatus::Truncated
            } else {
                NodeStatus::Expanded
            };
            let mut in_interval = None;
            if complete {
                in_interval = Some(record_completion(state, child.graph.clone(), phase, config.tol)?);
            }
            let tree_id = state.tree.as_mut().map(|t| {
                let mut node = tree_node(phase, parent.tree_id, &child.graph, child.lambda, status);
                node.in_interval = in_interval;
                t.push(node)
            });
            seen.insert(canon, (pi, tree_id));
            if status == NodeStatus::Expanded {
                next.push(Node { graph: child.graph, tree_id });
            }
        }
    }
    Ok(next)
}

/// Certifies a completed cubic graph and keeps it if λ_min is in range.
fn record_completion(state: &mut State, g: SimpleGraph, phase: Phase, tol: f64) -> Result<bool> {
    let lambda = graph_lambda_min(&g, EIGEN_TOL)?;
    // Comfortably at or above −2: no certificate needed.
    if lambda > -2.0 + 1e-6 {
        return Ok(false);
    }
    let certificate = certify_beta(&g, tol)?;
    if certificate.verdict == BetaVerdict::Out {
        return Ok(false);
    }
    let canon = canonical_form(&g)?.graph();
    let key = graph6::encode(&canon);
    state.found.entry(key.clone()).or_insert(ExtremalGraph {
        graph6: key,
        order: canon.order(),
        lambda_min: certificate.lambda_min,
        phase,
        certificate,
        graph: canon,
    });
    Ok(true)
}

fn tree_node(phase: Phase, parent: Option<usize>, g: &SimpleGraph, lambda: f64, status: NodeStatus) -> TreeNode {
    TreeNode {
        id: 0,
        parent,
        phase,
        order: g.order(),
        graph6: graph6::encode(g),
        lambda_min: lambda,
        status,
        prune_reason: None,
        merged_into: None,
        in_interval: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, is_line_graph};
    use crate::spectra::{graph_char_poly, IntPolynomial};

    const EXTREMAL: &str = "O}GWWC@?W@?A?A?A_?o?J";

    fn config(max_vertices: usize) -> SearchConfig {
        SearchConfig { max_vertices, ..SearchConfig::default() }
    }

    fn keys(r: &SearchResult) -> Vec<String> {
        r.extremal_graphs.iter().map(|g| g.graph6.clone()).collect()
    }

    #[test]
    fn unique_extremal_graph() {
        let r = search_eta3(&SearchConfig::default()).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.extremal_graphs.len(), 1);
        let g = &r.extremal_graphs[0];
        assert_eq!(g.order, 16);
        assert_eq!(g.certificate.verdict, BetaVerdict::EqualsBeta);
        assert!((g.lambda_min - beta()).abs() < 1e-9);
        assert!(g.graph.is_regular() == Some(3) && g.graph.is_connected());
        assert!(is_isomorphic(&g.graph, &graph6::decode(EXTREMAL).unwrap()).unwrap());
    }

    #[test]
    fn extremal_char_poly_factorisation() {
        // x (x−3) (x+1)² (x+2)² (x²−x−1) (x²+x−1) · sextic
        let f = |c: &[i64]| IntPolynomial::from_i64(c);
        let mut expected = f(&[0, 1]);
        for factor in [
            f(&[-3, 1]),
            f(&[1, 1]),
            f(&[1, 1]),
            f(&[2, 1]),
            f(&[2, 1]),
            f(&[-1, -1, 1]),
            f(&[-1, 1, 1]),
            crate::spectra::ConstantName::Beta.minimal_poly(),
        ] {
            expected = &expected * &factor;
        }
        assert_eq!(graph_char_poly(&graph6::decode(EXTREMAL).unwrap()), expected);
    }

    #[test]
    fn bounds_and_stability() {
        for n in [12, 13, 14] {
            let r = search_eta3(&config(n)).unwrap();
            assert!(r.extremal_graphs.is_empty(), "{n}");
            assert!(!r.exhausted);
        }
        let reference = keys(&search_eta3(&config(16)).unwrap());
        assert_eq!(reference.len(), 1);
        for n in [17, 18] {
            assert_eq!(keys(&search_eta3(&config(n)).unwrap()), reference);
        }
    }

    #[test]
    fn worker_count_does_not_matter() {
        let one = search_eta3(&SearchConfig { workers: Some(1), ..SearchConfig::default() }).unwrap();
        let four = search_eta3(&SearchConfig { workers: Some(4), ..SearchConfig::default() }).unwrap();
        assert_eq!(keys(&one), keys(&four));
        assert_eq!(one.stats, four.stats);
    }

    #[test]
    fn tree_shape() {
        let r = search_eta3(&SearchConfig { emit_tree: true, ..SearchConfig::default() }).unwrap();
        let t = r.tree.unwrap();
        let roots: Vec<&TreeNode> = t.roots().collect();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].graph6, graph6::encode(&standard_graph(StandardFamily::Diamond, &[]).unwrap()));
        assert_eq!(roots[0].status, NodeStatus::Expanded);
        assert!((roots[0].lambda_min - (1.0 - 17f64.sqrt()) / 2.0).abs() < 1e-9);
        for n in &t.nodes {
            let leaf = t.children(n.id).next().is_none();
            if leaf {
                assert_ne!(n.status, NodeStatus::Expanded, "{}", n.id);
            } else {
                assert_eq!(n.status, NodeStatus::Expanded);
            }
        }
        assert!(t.nodes.iter().any(|n| n.status == NodeStatus::Pruned));
        assert!(t.nodes.iter().any(|n| n.status == NodeStatus::Merged));
        let dot = t.to_dot();
        assert!(dot.starts_with("digraph") && dot.contains("<u>"));
        let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), t.nodes.len());
    }

    #[test]
    fn pruning_is_sound_along_tree_paths() {
        let r = search_eta3(&SearchConfig { emit_tree: true, ..SearchConfig::default() }).unwrap();
        let t = r.tree.unwrap();
        let mut pairs = 0;
        for leaf in t.nodes.iter().filter(|n| n.status == NodeStatus::Completed) {
            let full = graph6::decode(&leaf.graph6).unwrap();
            let lf = graph_lambda_min(&full, 1e-12).unwrap();
            for id in t.ancestors(leaf.id) {
                let node = &t.nodes[id];
                let g = graph6::decode(&node.graph6).unwrap();
                let prefix: Vec<usize> = (0..g.order()).collect();
                assert_eq!(full.induced_subgraph(&prefix).unwrap(), g);
                assert!(lf <= node.lambda_min + 1e-9);
                pairs += 1;
            }
        }
        assert!(pairs > 20);
    }

    #[test]
    fn phase_two_merges_isomorphic_siblings() {
        let r = search_eta3(&SearchConfig { phase: Phase::ClawSeedDiamondFree, ..SearchConfig::default() }).unwrap();
        assert!(r.stats[0].sibling_merges > 0);
        assert!(r.stats[0].pruned_diamond > 0);
        assert!(r.extremal_graphs.is_empty());
    }

    #[test]
    fn checkpoint_and_resume() {
        let full = search_eta3(&SearchConfig::default()).unwrap();
        let cfg = SearchConfig { node_budget: Some(10), ..SearchConfig::default() };
        let mut err = search_eta3(&cfg).unwrap_err();
        let mut resumes = 0;
        let result = loop {
            let Error::Budget { checkpoint, expanded, .. } = err else { panic!("{err}") };
            let c = Checkpoint::from_json(&checkpoint).unwrap();
            assert_eq!(c.expanded, expanded);
            resumes += 1;
            let more = SearchConfig { node_budget: Some(expanded + 10), ..SearchConfig::default() };
            match resume_eta3(&more, &c) {
                Ok(r) => break r,
                Err(e) => err = e,
            }
        };
        assert!(resumes > 1);
        assert_eq!(keys(&result), keys(&full));
        assert_eq!(result.stats, full.stats);
        assert!(Checkpoint::from_json("{}").is_err());
    }

    #[test]
    fn invalid_configs() {
        assert!(search_eta3(&config(3)).is_err());
        assert!(search_eta3(&SearchConfig { tol: 0.0, ..SearchConfig::default() }).is_err());
        assert!(search_eta3(&SearchConfig { workers: Some(0), ..SearchConfig::default() }).is_err());
        assert_eq!("2".parse::<Phase>().unwrap(), Phase::ClawSeedDiamondFree);
        assert!("3".parse::<Phase>().is_err());
    }

    #[test]
    fn agrees_with_brute_force_up_to_twelve_vertices() {
        let r = search_eta3(&SearchConfig::default()).unwrap();
        for n in (4..=12).step_by(2) {
            let brute: Vec<SimpleGraph> = connected_cubic_graphs(n)
                .unwrap()
                .into_iter()
                .filter(|g| {
                    let l = graph_lambda_min(g, 1e-12).unwrap();
                    l >= beta() - 1e-9 && certify_beta(g, 1e-9).unwrap().below_minus_two
                })
                .collect();
            let searched: Vec<&ExtremalGraph> = r.extremal_graphs.iter().filter(|g| g.order == n).collect();
            assert_eq!(brute.len(), searched.len(), "{n}");
        }
    }

    #[test]
    fn non_line_cubic_graphs_contain_a_seed() {
        for n in (4..=10).step_by(2) {
            for g in connected_cubic_graphs(n).unwrap() {
                if !is_line_graph(&g).unwrap().is_line {
                    assert!(
                        find_induced(&g, PatternKind::ThreeClaw).is_some()
                            || find_induced(&g, PatternKind::Diamond).is_some()
                    );
                }
            }
        }
    }
}
