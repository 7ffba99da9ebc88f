//! The explored search tree and its DOT / JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Phase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeStatus {
    Expanded,
    /// λ_min below β − tol, or an induced diamond in the diamond-free phase.
    Pruned,
    /// Every vertex has degree 3.
    Completed,
    /// Still deficient at the vertex bound.
    Truncated,
    /// Isomorphic to an earlier node of the same level.
    Merged,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PruneReason {
    Lambda,
    Diamond,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub phase: Phase,
    pub order: usize,
    pub graph6: String,
    pub lambda_min: f64,
    pub status: NodeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prune_reason: Option<PruneReason>,
    /// For merged nodes: the node they were merged into.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub merged_into: Option<usize>,
    /// For completed nodes: λ_min lies in `[β − tol, −2)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_interval: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchTree {
    pub nodes: Vec<TreeNode>,
}

impl SearchTree {
    pub(crate) fn push(&mut self, mut node: TreeNode) -> usize {
        node.id = self.nodes.len();
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn roots(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.parent.is_none())
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(move |n| n.parent == Some(id))
    }

    /// Path from `id` up to its root, `id` first.
    pub fn ancestors(&self, id: usize) -> Vec<usize> {
        let mut out = vec![id];
        while let Some(p) = self.nodes[*out.last().unwrap()].parent {
            out.push(p);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization")
    }

    /// Pruned nodes are drawn underlined, merged ones dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph eta3 {\n  node [shape=box, fontname=monospace];\n");
        for n in &self.nodes {
            let (style, colour) = match n.status {
                NodeStatus::Expanded => ("solid", "black"),
                NodeStatus::Pruned => ("solid", "red"),
                NodeStatus::Completed => ("bold", "blue"),
                NodeStatus::Truncated => ("dotted", "grey"),
                NodeStatus::Merged => ("dashed", "grey"),
            };
            let label = if n.status == NodeStatus::Pruned {
                format!("<<u>{}</u><br/>{:.6}>", escape(&n.graph6), n.lambda_min)
            } else {
                format!("<{}<br/>{:.6}>", escape(&n.graph6), n.lambda_min)
            };
            let _ = writeln!(s, "  n{} [label={label}, style={style}, color={colour}];", n.id);
            if let Some(p) = n.parent {
                let _ = writeln!(s, "  n{p} -> n{};", n.id);
            }
            if let Some(m) = n.merged_into {
                let _ = writeln!(s, "  n{} -> n{m} [style=dashed, constraint=false];", n.id);
            }
        }
        s.push_str("}\n");
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
