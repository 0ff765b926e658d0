//! The level-graded, simple-root-labeled Hasse diagram of a weight set.
//!
//! Vertices are the weights of the irreducible representation with the given
//! highest weight; there is a directed edge (u, v, j) exactly when
//! weight(u) − weight(v) = α_j. The level of a vertex is 1 + its total depth,
//! so the highest weight sits alone at level 1 and the lowest weight alone at
//! the maximal level. Edges are drawn downward; the undirected drawings seen
//! elsewhere are rendering style.
//!
//! Vertices with multiplicity greater than one in the representation appear
//! once: the diagram depends only on the weight set.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::rootsys::{RootSystem, SystemType};
use crate::weights::{weight_set, Weight, WeightSet};
use crate::Error;

/// A directed, labeled edge between vertex indices: `upper − lower = α_label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub upper: usize,
    pub lower: usize,
    /// 1-based simple-root index.
    pub label: usize,
}

/// Level-graded Hasse diagram over a weight set. Immutable after
/// construction; vertex indexing follows the weight-set ordering
/// (total depth, then lexicographic depth), so it is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    set: WeightSet,
    edges: Vec<Edge>,
    /// Per vertex, downward edges as (label, child index), sorted by label.
    children: Vec<Vec<(usize, usize)>>,
    /// Per vertex, upward edges as (label, parent index), sorted by label.
    parents: Vec<Vec<(usize, usize)>>,
}

impl HasseDiagram {
    pub fn system(&self) -> &RootSystem {
        self.set.system()
    }

    pub fn system_type(&self) -> SystemType {
        self.set.system().system_type()
    }

    pub fn weight_set(&self) -> &WeightSet {
        &self.set
    }

    pub fn vertex_count(&self) -> usize {
        self.set.len()
    }

    pub fn vertices(&self) -> &[Weight] {
        self.set.members()
    }

    pub fn vertex(&self, index: usize) -> &Weight {
        &self.set.members()[index]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// 1-based level of a vertex: 1 + total depth.
    pub fn level_of(&self, index: usize) -> usize {
        1 + self.vertex(index).depth_height().unwrap() as usize
    }

    /// The maximal level.
    pub fn level_count(&self) -> usize {
        self.level_of(self.bottom())
    }

    /// Index of the highest-weight vertex (always 0).
    pub fn top(&self) -> usize {
        0
    }

    /// Index of the lowest-weight vertex (always the last).
    pub fn bottom(&self) -> usize {
        self.set.len() - 1
    }

    pub fn index_of_depth(&self, depth: &[i64]) -> Option<usize> {
        self.set.index_of_depth(depth)
    }

    /// The unique child of `vertex` along the edge labeled `label`, if any.
    pub fn child_along(&self, vertex: usize, label: usize) -> Option<usize> {
        self.children[vertex]
            .iter()
            .find(|&&(l, _)| l == label)
            .map(|&(_, c)| c)
    }

    pub fn children_of(&self, vertex: usize) -> &[(usize, usize)] {
        &self.children[vertex]
    }

    pub fn parents_of(&self, vertex: usize) -> &[(usize, usize)] {
        &self.parents[vertex]
    }

    /// Per level, the sorted multiset of downward degrees of its vertices.
    pub fn out_degree_profile(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut profile: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count() {
            profile
                .entry(self.level_of(v))
                .or_default()
                .push(self.children[v].len());
        }
        for degrees in profile.values_mut() {
            degrees.sort_unstable();
        }
        profile
    }

    /// Deterministic DOT rendering: vertices named by depth vector, ranked by
    /// level, edges annotated with the simple-root index. Byte-identical
    /// across runs for the same diagram.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph hasse {{");
        let _ = writeln!(
            out,
            "  graph [label=\"{}({:?})\", rankdir=TB];",
            self.system_type(),
            self.set.highest().labels()
        );
        let _ = writeln!(out, "  node [shape=circle];");
        for v in 0..self.vertex_count() {
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"{:?}\"];",
                vertex_name(self.vertex(v)),
                self.vertex(v).labels()
            );
        }
        let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count() {
            by_level.entry(self.level_of(v)).or_default().push(v);
        }
        for (_, vs) in by_level {
            let names: Vec<String> = vs
                .iter()
                .map(|&v| format!("\"{}\"", vertex_name(self.vertex(v))))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", names.join("; "));
        }
        for edge in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                vertex_name(self.vertex(edge.upper)),
                vertex_name(self.vertex(edge.lower)),
                edge.label
            );
        }
        let _ = writeln!(out, "}}");
        out
    }
}

fn vertex_name(w: &Weight) -> String {
    let coords: Vec<String> = w
        .depth()
        .unwrap()
        .iter()
        .map(|k| k.to_string())
        .collect();
    format!("k=[{}]", coords.join(","))
}

/// Builds the Hasse diagram of the weight set of `highest`. Edges are found
/// by depth-vector difference equal to one standard basis vector.
pub fn build_hasse(rs: &RootSystem, highest: &Weight) -> Result<HasseDiagram, Error> {
    let set = weight_set(rs, highest)?;
    Ok(hasse_from_weight_set(set))
}

pub(crate) fn hasse_from_weight_set(set: WeightSet) -> HasseDiagram {
    let rank = set.system().rank();
    let mut edges = Vec::new();
    let mut children = vec![Vec::new(); set.len()];
    let mut parents = vec![Vec::new(); set.len()];
    for (upper, w) in set.members().iter().enumerate() {
        let depth = w.depth().unwrap();
        for j in 0..rank {
            let mut down = depth.to_vec();
            down[j] += 1;
            if let Some(lower) = set.index_of_depth(&down) {
                edges.push(Edge {
                    upper,
                    lower,
                    label: j + 1,
                });
                children[upper].push((j + 1, lower));
                parents[lower].push((j + 1, upper));
            }
        }
    }
    for list in children.iter_mut().chain(parents.iter_mut()) {
        list.sort_unstable();
    }
    HasseDiagram {
        set,
        edges,
        children,
        parents,
    }
}

/// Maximal level of a diagram; named query kept for symmetry with the
/// other top-level operations.
pub fn level_count(d: &HasseDiagram) -> usize {
    d.level_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SystemType;
    use crate::weights::fundamental_weight;

    fn diagram(token: &str, node: usize) -> HasseDiagram {
        let rs = RootSystem::build(SystemType::parse(token).unwrap());
        let w = fundamental_weight(&rs, node).unwrap();
        build_hasse(&rs, &w).unwrap()
    }

    fn chain_labels(d: &HasseDiagram) -> Option<Vec<usize>> {
        let mut labels = Vec::new();
        let mut v = d.top();
        while !d.children_of(v).is_empty() {
            if d.children_of(v).len() > 1 {
                return None;
            }
            let (label, child) = d.children_of(v)[0];
            labels.push(label);
            v = child;
        }
        (labels.len() + 1 == d.vertex_count()).then_some(labels)
    }

    #[test]
    fn g2_short_is_the_seven_chain() {
        let d = diagram("G2", 2);
        assert_eq!(d.vertex_count(), 7);
        assert_eq!(d.level_count(), 7);
        // short = 2, long = 1: the chain reads α β α α β α from the top
        assert_eq!(chain_labels(&d).unwrap(), vec![2, 1, 2, 2, 1, 2]);
    }

    #[test]
    fn g2_long_level_count() {
        let d = diagram("G2", 1);
        assert_eq!(d.vertex_count(), 13);
        assert_eq!(d.level_count(), 11);
    }

    #[test]
    fn a_n_first_fundamental_is_a_chain() {
        for n in 1..=8 {
            let d = diagram(&format!("A{n}"), 1);
            assert_eq!(d.vertex_count(), n + 1);
            assert_eq!(d.level_count(), n + 1);
            let labels = chain_labels(&d).unwrap();
            assert_eq!(labels, (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn d4_extremal_diamond() {
        let d = diagram("D4", 1);
        assert_eq!(d.vertex_count(), 8);
        assert_eq!(d.level_count(), 7);
        let profile = d.out_degree_profile();
        assert_eq!(profile[&3], vec![2]); // the diamond opens at level 3
        assert_eq!(profile[&4], vec![1, 1]);
        assert_eq!(profile[&7], vec![0]);
        // the fork labels 3, 4 sit on the diamond
        let top_of_diamond = (0..d.vertex_count())
            .find(|&v| d.level_of(v) == 3)
            .unwrap();
        let labels: Vec<usize> = d
            .children_of(top_of_diamond)
            .iter()
            .map(|&(l, _)| l)
            .collect();
        assert_eq!(labels, vec![3, 4]);
    }

    #[test]
    fn f4_short_end_has_17_levels() {
        let d = diagram("F4", 4);
        assert_eq!(d.level_count(), 17);
        assert_eq!(d.vertex_count(), 25);
    }

    #[test]
    fn b_n_short_end_first_branch_at_level_3() {
        // the spin-side diagram branches at level 3; the other end is a chain
        for n in 3..=6 {
            let d = diagram(&format!("B{n}"), n);
            let profile = d.out_degree_profile();
            assert_eq!(profile[&1], vec![1]);
            assert_eq!(profile[&2], vec![1]);
            assert_eq!(profile[&3], vec![2], "B{n} spin-side branch");
        }
    }

    #[test]
    fn chain_profiles_are_all_ones() {
        let d = diagram("A5", 1);
        let profile = d.out_degree_profile();
        for (level, degrees) in &profile {
            if *level == d.level_count() {
                assert_eq!(degrees, &vec![0]);
            } else {
                assert_eq!(degrees, &vec![1]);
            }
        }
    }

    #[test]
    fn unique_top_and_bottom() {
        for (token, node) in [("G2", 1), ("F4", 4), ("D5", 5), ("E6", 2)] {
            let d = diagram(token, node);
            assert_eq!(d.level_of(d.top()), 1);
            let top_count = (0..d.vertex_count())
                .filter(|&v| d.level_of(v) == 1)
                .count();
            let bottom_count = (0..d.vertex_count())
                .filter(|&v| d.level_of(v) == d.level_count())
                .count();
            assert_eq!((top_count, bottom_count), (1, 1), "{token}");
        }
    }

    #[test]
    fn dot_export_is_deterministic_and_shaped() {
        let d = diagram("A1", 1);
        let dot = d.export_dot();
        assert!(dot.starts_with("digraph hasse {"));
        assert_eq!(dot.matches("->").count(), 1);
        assert_eq!(d.export_dot(), dot);

        let d = diagram("G2", 2);
        let dot = d.export_dot();
        assert_eq!(dot.matches("->").count(), 6);
        // one declaration, one rank entry and two edge endpoints per vertex
        assert_eq!(dot.matches("\"k=[0,0]\"").count(), 3);
    }

    #[test]
    fn edges_drop_exactly_one_level() {
        let d = diagram("E6", 1);
        for edge in d.edges() {
            assert_eq!(d.level_of(edge.lower), d.level_of(edge.upper) + 1);
        }
    }
}
