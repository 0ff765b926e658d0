//! Labelings between simple-root sets, induced maps between Hasse diagrams,
//! the pruned search for surjective labelings, and folding labelings built
//! from Dynkin-diagram automorphisms.
//!
//! A labeling is an arbitrary set-wise function between the simple roots of
//! two systems; it carries no structural constraint. A diagram map with
//! labeling f sends every σ-labeled edge to an f(σ)-labeled edge. Writing a
//! source vertex as λ − Σ k_σ α_σ, the only candidate image anchored at the
//! target top is μ − Σ k_σ f(σ): the map exists iff that candidate is a
//! target vertex for every source vertex, independent of traversal order.
//! Surjectivity forces the top-to-top anchor, because level counts must agree
//! and the map preserves levels.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::exec::{self, ExecMode};
use crate::hasse::{build_hasse, HasseDiagram};
use crate::rootsys::{Family, RootSystem, SystemType};
use crate::weights::fundamental_weight;
use crate::Error;

/// A total set-wise function from the simple roots of `source` to those of
/// `target`, stored as 1-based target nodes indexed by source node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    source: SystemType,
    target: SystemType,
    map: Vec<usize>,
}

impl Labeling {
    pub fn new(source: SystemType, target: SystemType, map: Vec<usize>) -> Result<Labeling, Error> {
        if map.len() != source.rank() {
            return Err(Error::RankMismatch {
                expected: source.rank(),
                got: map.len(),
            });
        }
        for &t in &map {
            if t < 1 || t > target.rank() {
                return Err(Error::NodeOutOfRange {
                    node: t,
                    rank: target.rank(),
                });
            }
        }
        Ok(Labeling {
            source,
            target,
            map,
        })
    }

    pub fn identity(t: SystemType) -> Labeling {
        Labeling {
            source: t,
            target: t,
            map: (1..=t.rank()).collect(),
        }
    }

    pub fn source(&self) -> SystemType {
        self.source
    }

    pub fn target(&self) -> SystemType {
        self.target
    }

    /// Image of a 1-based source node.
    pub fn apply(&self, node: usize) -> usize {
        self.map[node - 1]
    }

    /// The underlying vector of 1-based target nodes.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.target.rank()];
        for &t in &self.map {
            hit[t - 1] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &t)| t == i + 1)
    }

    /// Folds a source depth vector: k'[t] = Σ over source nodes j with
    /// f(j) = t of k[j].
    pub fn fold_depth(&self, depth: &[i64]) -> Vec<i64> {
        let mut folded = vec![0i64; self.target.rank()];
        for (j, &k) in depth.iter().enumerate() {
            folded[self.map[j] - 1] += k;
        }
        folded
    }
}

/// A verified vertex map between two Hasse diagrams with a fixed labeling.
#[derive(Debug, Clone)]
pub struct DiagramMap {
    labeling: Labeling,
    source: Arc<HasseDiagram>,
    target: Arc<HasseDiagram>,
    vertex_map: Vec<usize>,
    surjective: bool,
}

impl DiagramMap {
    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn source(&self) -> &Arc<HasseDiagram> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HasseDiagram> {
        &self.target
    }

    /// Image vertex indices, parallel to the source vertex list.
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn surjective(&self) -> bool {
        self.surjective
    }

    /// Revalidates the map from scratch: systems, top anchor, levels, the
    /// edge condition on every source edge, and the surjectivity flag.
    pub fn validate(&self) -> Result<(), String> {
        if self.labeling.source() != self.source.system_type() {
            return Err("labeling source system differs from source diagram".into());
        }
        if self.labeling.target() != self.target.system_type() {
            return Err("labeling target system differs from target diagram".into());
        }
        if self.vertex_map.len() != self.source.vertex_count() {
            return Err("vertex map length differs from source vertex count".into());
        }
        if self.vertex_map[self.source.top()] != self.target.top() {
            return Err("top vertex is not anchored at the target top".into());
        }
        for (v, &image) in self.vertex_map.iter().enumerate() {
            if image >= self.target.vertex_count() {
                return Err(format!("image of vertex {v} out of range"));
            }
            if self.source.level_of(v) != self.target.level_of(image) {
                return Err(format!("vertex {v} changes level"));
            }
        }
        for edge in self.source.edges() {
            let expect = self.labeling.apply(edge.label);
            match self.target.child_along(self.vertex_map[edge.upper], expect) {
                Some(child) if child == self.vertex_map[edge.lower] => {}
                _ => {
                    return Err(format!(
                        "edge ({}, {}, {}) has no matching image edge labeled {}",
                        edge.upper, edge.lower, edge.label, expect
                    ))
                }
            }
        }
        let mut covered = vec![false; self.target.vertex_count()];
        for &image in &self.vertex_map {
            covered[image] = true;
        }
        if covered.into_iter().all(|c| c) != self.surjective {
            return Err("surjectivity flag does not match the image".into());
        }
        Ok(())
    }
}

/// Outcome of an induced-map attempt, with the obstruction when it fails.
pub enum InduceOutcome {
    Map(DiagramMap),
    /// Depth vector of the first source vertex whose candidate image is not
    /// a target vertex.
    MissingImage(Vec<i64>),
}

/// Attempts the diagram map with labeling `f` anchored top-to-top, via the
/// closed depth-folding formula. Returns `None` when some candidate image is
/// not a target vertex.
pub fn induce_map(
    f: &Labeling,
    src: &Arc<HasseDiagram>,
    tgt: &Arc<HasseDiagram>,
) -> Result<Option<DiagramMap>, Error> {
    match induce_map_detail(f, src, tgt)? {
        InduceOutcome::Map(map) => Ok(Some(map)),
        InduceOutcome::MissingImage(_) => Ok(None),
    }
}

/// As [`induce_map`], surfacing the first missing candidate image.
pub fn induce_map_detail(
    f: &Labeling,
    src: &Arc<HasseDiagram>,
    tgt: &Arc<HasseDiagram>,
) -> Result<InduceOutcome, Error> {
    if f.source() != src.system_type() {
        return Err(Error::SystemMismatch {
            expected: f.source(),
            got: src.system_type(),
        });
    }
    if f.target() != tgt.system_type() {
        return Err(Error::SystemMismatch {
            expected: f.target(),
            got: tgt.system_type(),
        });
    }
    let mut vertex_map = Vec::with_capacity(src.vertex_count());
    for v in 0..src.vertex_count() {
        let depth = src.vertex(v).depth().unwrap();
        let folded = f.fold_depth(depth);
        match tgt.index_of_depth(&folded) {
            Some(image) => vertex_map.push(image),
            None => return Ok(InduceOutcome::MissingImage(depth.to_vec())),
        }
    }
    let mut covered = vec![false; tgt.vertex_count()];
    for &image in &vertex_map {
        covered[image] = true;
    }
    let surjective = covered.into_iter().all(|c| c);
    Ok(InduceOutcome::Map(DiagramMap {
        labeling: f.clone(),
        source: Arc::clone(src),
        target: Arc::clone(tgt),
        vertex_map,
        surjective,
    }))
}

/// Memoized fundamental-weight diagrams per (system, node). Interior locking
/// gives a once-per-key initialization contract; for parallel searches the
/// relevant keys are prewarmed before fan-out so readers never contend.
#[derive(Debug, Default)]
pub struct DiagramCache {
    inner: Mutex<HashMap<(SystemType, usize), Arc<HasseDiagram>>>,
}

impl DiagramCache {
    pub fn new() -> DiagramCache {
        DiagramCache::default()
    }

    /// The diagram of the fundamental weight at `node` (1-based).
    pub fn diagram(&self, t: SystemType, node: usize) -> Arc<HasseDiagram> {
        if let Some(found) = self.inner.lock().unwrap().get(&(t, node)) {
            return Arc::clone(found);
        }
        let rs = RootSystem::build(t);
        let w = fundamental_weight(&rs, node).expect("node validated by caller");
        let diagram = Arc::new(build_hasse(&rs, &w).expect("fundamental weights are dominant"));
        let mut guard = self.inner.lock().unwrap();
        Arc::clone(guard.entry((t, node)).or_insert(diagram))
    }

    /// Builds every extremal diagram of `t` up front.
    pub fn prewarm(&self, t: SystemType) {
        let rs = RootSystem::build(t);
        for node in rs.extremal_roots() {
            self.diagram(t, node);
        }
    }
}

/// Why a candidate labeling was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RejectionKind {
    /// Not onto the target nodes, so no surjective map can exist.
    NotOnto,
    /// Some candidate image vertex is missing from the target diagram.
    MissingImage,
    /// The induced map exists but is not set-wise onto.
    NotSurjective,
}

/// One class of rejected candidates: same kind, same failing source extremal.
#[derive(Debug, Clone)]
pub struct RejectionClass {
    pub kind: RejectionKind,
    /// Source extremal node where the failure happened, when applicable.
    pub extremal: Option<usize>,
    pub count: u64,
    /// Lexicographically first rejected candidate of this class.
    pub representative: Vec<usize>,
    /// Depth of the first missing image vertex for the representative.
    pub missing_vertex: Option<Vec<i64>>,
}

/// Level-count screen for one source extremal: the admissible target nodes
/// and their level counts. An empty `admissible` list rules out the whole
/// pair before any enumeration.
#[derive(Debug, Clone)]
pub struct LevelScreen {
    pub source_node: usize,
    pub source_levels: usize,
    /// (target node, level count) pairs that match `source_levels`.
    pub admissible: Vec<(usize, usize)>,
}

/// Audit record for a search: the raw candidate space, how much of it was
/// never enumerated thanks to structural pruning, the per-extremal level
/// screen, and the grouped rejections of enumerated candidates.
#[derive(Debug, Clone, Default)]
pub struct SearchCertificate {
    pub candidate_space: u128,
    pub enumerated: u64,
    pub structurally_pruned: u128,
    pub level_screen: Vec<LevelScreen>,
    pub rejections: Vec<RejectionClass>,
}

/// Result of the exhaustive labeling search between two systems.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub source: SystemType,
    pub target: SystemType,
    pub extremal_constraint: bool,
    /// Qualifying labelings in lexicographic order.
    pub labelings: Vec<Labeling>,
    /// Parallel to `labelings`: one verified surjective map per source
    /// extremal node, ascending.
    pub witnesses: Vec<Vec<DiagramMap>>,
    pub certificate: SearchCertificate,
}

/// Exhaustively enumerates labelings f from `source` to `target` and keeps
/// those for which the induced map on the diagram of every source extremal
/// fundamental weight exists and is surjective.
///
/// With `extremal_constraint` on, f must map extremal nodes to extremal
/// nodes. Pruning never loses a qualifying labeling: a surjective map forces
/// f onto and equal level counts, so candidates violating either are
/// rejected before any diagram work. Enumeration is mixed-radix
/// lexicographic over the source nodes, making results reproducible.
pub fn find_surjective_labelings(
    source: SystemType,
    target: SystemType,
    extremal_constraint: bool,
    cache: &DiagramCache,
    mode: ExecMode,
) -> SearchOutcome {
    let src_rank = source.rank();
    let tgt_rank = target.rank();
    let candidate_space = (tgt_rank as u128).pow(src_rank as u32);

    let src_sys = RootSystem::build(source);
    let tgt_sys = RootSystem::build(target);
    let src_extremal: Vec<usize> = src_sys.extremal_roots().into_iter().collect();
    let tgt_extremal: Vec<usize> = tgt_sys.extremal_roots().into_iter().collect();

    for &a in &src_extremal {
        cache.diagram(source, a);
    }
    let image_pool: Vec<usize> = if extremal_constraint {
        tgt_extremal.clone()
    } else {
        (1..=tgt_rank).collect()
    };
    for &t in &image_pool {
        cache.diagram(target, t);
    }

    // Per-extremal level screen.
    let mut level_screen = Vec::new();
    let mut screened_domains: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &a in &src_extremal {
        let source_levels = cache.diagram(source, a).level_count();
        let admissible: Vec<(usize, usize)> = image_pool
            .iter()
            .map(|&t| (t, cache.diagram(target, t).level_count()))
            .filter(|&(_, levels)| levels == source_levels)
            .collect();
        screened_domains.insert(a, admissible.iter().map(|&(t, _)| t).collect());
        level_screen.push(LevelScreen {
            source_node: a,
            source_levels,
            admissible,
        });
    }

    // Mixed-radix lexicographic backtracking with onto pruning.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    if tgt_rank <= src_rank && level_screen.iter().all(|s| !s.admissible.is_empty()) {
        let domains: Vec<&[usize]> = (1..=src_rank)
            .map(|node| {
                screened_domains
                    .get(&node)
                    .map(|d| d.as_slice())
                    .unwrap_or_else(|| all_nodes(tgt_rank))
            })
            .collect();
        let mut partial = Vec::with_capacity(src_rank);
        enumerate(&domains, tgt_rank, &mut partial, &mut 0u64, &mut candidates);
    }
    let enumerated = candidates.len() as u64;
    let structurally_pruned = candidate_space - enumerated as u128;

    // Verify candidates against every source extremal diagram.
    let verdicts = exec::map(mode, candidates, |map| {
        let f = Labeling::new(source, target, map).expect("enumerated in range");
        let mut witnesses = Vec::with_capacity(src_extremal.len());
        for &a in &src_extremal {
            let src_diagram = cache.diagram(source, a);
            let tgt_diagram = cache.diagram(target, f.apply(a));
            match induce_map_detail(&f, &src_diagram, &tgt_diagram).expect("systems match") {
                InduceOutcome::Map(map) if map.surjective() => witnesses.push(map),
                InduceOutcome::Map(_) => {
                    return Err((f, RejectionKind::NotSurjective, Some(a), None))
                }
                InduceOutcome::MissingImage(depth) => {
                    return Err((f, RejectionKind::MissingImage, Some(a), Some(depth)))
                }
            }
        }
        // postconditions of a surjective map
        assert!(f.is_onto());
        for witness in &witnesses {
            assert_eq!(
                witness.source().level_count(),
                witness.target().level_count()
            );
        }
        Ok((f, witnesses))
    });

    let mut labelings = Vec::new();
    let mut witnesses = Vec::new();
    let mut rejections: BTreeMap<(RejectionKind, Option<usize>), RejectionClass> = BTreeMap::new();
    for verdict in verdicts {
        match verdict {
            Ok((f, maps)) => {
                labelings.push(f);
                witnesses.push(maps);
            }
            Err((f, kind, extremal, missing)) => {
                rejections
                    .entry((kind, extremal))
                    .and_modify(|class| class.count += 1)
                    .or_insert_with(|| RejectionClass {
                        kind,
                        extremal,
                        count: 1,
                        representative: f.map().to_vec(),
                        missing_vertex: missing,
                    });
            }
        }
    }

    SearchOutcome {
        source,
        target,
        extremal_constraint,
        labelings,
        witnesses,
        certificate: SearchCertificate {
            candidate_space,
            enumerated,
            structurally_pruned,
            level_screen,
            rejections: rejections.into_values().collect(),
        },
    }
}

fn all_nodes(rank: usize) -> &'static [usize] {
    const NODES: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
    &NODES[..rank]
}

fn enumerate(
    domains: &[&[usize]],
    tgt_rank: usize,
    partial: &mut Vec<usize>,
    covered: &mut u64,
    out: &mut Vec<Vec<usize>>,
) {
    if partial.len() == domains.len() {
        out.push(partial.clone());
        return;
    }
    let remaining = domains.len() - partial.len();
    let uncovered = tgt_rank - covered.count_ones() as usize;
    if uncovered > remaining {
        return; // cannot become onto
    }
    for &t in domains[partial.len()] {
        let bit = 1u64 << (t - 1);
        let was = *covered;
        *covered |= bit;
        partial.push(t);
        enumerate(domains, tgt_rank, partial, covered, out);
        partial.pop();
        *covered = was;
    }
}

/// All Dynkin-diagram automorphisms of a system, as 1-based permutation
/// vectors in lexicographic order. A permutation qualifies iff it preserves
/// the Cartan matrix exactly, so arrows are respected.
pub fn dynkin_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank();
    let a = rs.cartan();
    let mut perms = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn backtrack(
        n: usize,
        a: &[Vec<i64>],
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == n {
            out.push(current.iter().map(|&i| i + 1).collect());
            return;
        }
        let i = current.len();
        for img in 0..n {
            if used[img] || a[img][img] != a[i][i] {
                continue;
            }
            // consistency with the already-placed prefix
            let ok = (0..i).all(|j| {
                a[current[j]][img] == a[j][i] && a[img][current[j]] == a[i][j]
            });
            if ok {
                used[img] = true;
                current.push(img);
                backtrack(n, a, current, used, out);
                current.pop();
                used[img] = false;
            }
        }
    }
    backtrack(n, a, &mut current, &mut used, &mut perms);
    perms.sort_unstable();
    perms
}

/// Builds the canonical folding labeling from an automorphism-orbit
/// partition of the source Dynkin diagram.
///
/// Valid quotients and their canonical targets: the flip of A_{2n−1} onto
/// C_n, the flip of A_{2n} onto B_n, the fork pair of D_n onto B_{n−1}, the
/// triality orbit of D_4 onto G_2, and the flip of E_6 onto F_4. Orbits of
/// size > 1 land on short roots. The all-singleton partition yields the
/// identity labeling. Partitions whose quotient falls outside the canonical
/// admissible list (such as the A_3 flip, whose quotient has rank 2 in the
/// C family) are rejected.
pub fn folding_labeling(source: SystemType, partition: &[Vec<usize>]) -> Result<Labeling, Error> {
    let rank = source.rank();
    let rs = RootSystem::build(source);

    // Well-formed partition of 1..=rank.
    let mut seen = vec![false; rank];
    for block in partition {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &node in block {
            if node < 1 || node > rank {
                return Err(Error::NodeOutOfRange { node, rank });
            }
            if seen[node - 1] {
                return Err(Error::InvalidPartition(format!(
                    "node {node} appears in two blocks"
                )));
            }
            seen[node - 1] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidPartition("partition does not cover all nodes".into()));
    }

    // The partition must be the orbit partition of its setwise stabilizer
    // inside the Dynkin automorphism group.
    let mut block_of = vec![0usize; rank];
    for (b, block) in partition.iter().enumerate() {
        for &node in block {
            block_of[node - 1] = b;
        }
    }
    let stabilizer: Vec<Vec<usize>> = dynkin_automorphisms(&rs)
        .into_iter()
        .filter(|perm| (0..rank).all(|i| block_of[perm[i] - 1] == block_of[i]))
        .collect();
    let mut orbit_id = (0..rank).collect::<Vec<usize>>();
    // union-find over stabilizer orbits
    fn find(ids: &mut Vec<usize>, i: usize) -> usize {
        if ids[i] != i {
            let root = find(ids, ids[i]);
            ids[i] = root;
        }
        ids[i]
    }
    for perm in &stabilizer {
        for (i, &image) in perm.iter().enumerate() {
            let (a, b) = (find(&mut orbit_id, i), find(&mut orbit_id, image - 1));
            if a != b {
                orbit_id[a] = b;
            }
        }
    }
    let roots: Vec<usize> = (0..rank).map(|i| find(&mut orbit_id, i)).collect();
    let orbits_match = (0..rank)
        .all(|i| (0..rank).all(|j| (roots[i] == roots[j]) == (block_of[i] == block_of[j])));
    if !orbits_match {
        return Err(Error::InvalidPartition(
            "partition is not the orbit partition of a Dynkin automorphism group".into(),
        ));
    }

    // Identity quotient.
    if partition.iter().all(|b| b.len() == 1) {
        return Ok(Labeling::identity(source));
    }

    let sorted_blocks: Vec<Vec<usize>> = {
        let mut blocks: Vec<Vec<usize>> = partition
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        blocks
    };
    let quotient_rank = sorted_blocks.len();

    let assign = |pairs: Vec<(Vec<usize>, usize)>, family: Family| -> Result<Labeling, Error> {
        let target = SystemType::new(family, quotient_rank)?;
        let mut map = vec![0usize; rank];
        for (block, image) in pairs {
            for node in block {
                map[node - 1] = image;
            }
        }
        Labeling::new(source, target, map)
    };

    match source.family() {
        Family::A => {
            // flip orbits {i, rank+1−i}; pairs land on node i, the fixed
            // middle (odd rank) on node n
            let n = quotient_rank;
            let expected: Vec<Vec<usize>> = (1..=n)
                .map(|i| {
                    let j = rank + 1 - i;
                    if i == j {
                        vec![i]
                    } else {
                        vec![i, j]
                    }
                })
                .collect();
            let mut sorted_expected = expected.clone();
            sorted_expected.sort();
            if sorted_blocks != sorted_expected {
                return Err(Error::NotFoldable {
                    system: source,
                    reason: "only the flip quotient folds type A".into(),
                });
            }
            let family = if rank % 2 == 1 { Family::C } else { Family::B };
            let pairs: Vec<(Vec<usize>, usize)> =
                expected.into_iter().enumerate().map(|(i, b)| (b, i + 1)).collect();
            assign(pairs, family)
        }
        Family::D => {
            let pair_blocks: Vec<&Vec<usize>> =
                sorted_blocks.iter().filter(|b| b.len() >= 2).collect();
            match pair_blocks.as_slice() {
                [pair] if pair.len() == 2 => {
                    // fork-pair quotient onto B_{rank−1}; for D_4 triality
                    // makes any two of the three extremal nodes a fork pair
                    let merged: Vec<usize> = (*pair).clone();
                    let valid = if rank == 4 {
                        merged.iter().all(|&x| [1, 3, 4].contains(&x))
                    } else {
                        merged == vec![rank - 1, rank]
                    };
                    if !valid {
                        return Err(Error::NotFoldable {
                            system: source,
                            reason: "the merged pair is not a fork pair".into(),
                        });
                    }
                    let mut pairs: Vec<(Vec<usize>, usize)> = Vec::new();
                    if rank == 4 {
                        // remaining extremal — center — merged pair
                        let other = [1, 3, 4]
                            .into_iter()
                            .find(|node| !merged.contains(node))
                            .unwrap();
                        pairs.push((vec![other], 1));
                        pairs.push((vec![2], 2));
                    } else {
                        // chain nodes keep their positions
                        for node in 1..=rank - 2 {
                            pairs.push((vec![node], node));
                        }
                    }
                    // the merged pair becomes the short end
                    pairs.push((merged, quotient_rank));
                    assign(pairs, Family::B)
                }
                [triple] if triple.len() == 3 && rank == 4 => {
                    // triality orbit onto G_2: triple short, center long
                    if **triple != vec![1, 3, 4] {
                        return Err(Error::NotFoldable {
                            system: source,
                            reason: "the 3-block is not the extremal orbit".into(),
                        });
                    }
                    assign(vec![(vec![2], 1), (vec![1, 3, 4], 2)], Family::G)
                }
                _ => Err(Error::NotFoldable {
                    system: source,
                    reason: "unsupported block structure for type D".into(),
                }),
            }
        }
        Family::E if rank == 6 => {
            let expected = vec![vec![1, 6], vec![2], vec![3, 5], vec![4]];
            if sorted_blocks != expected {
                return Err(Error::NotFoldable {
                    system: source,
                    reason: "only the flip quotient folds E6".into(),
                });
            }
            assign(
                vec![
                    (vec![2], 1),
                    (vec![4], 2),
                    (vec![3, 5], 3),
                    (vec![1, 6], 4),
                ],
                Family::F,
            )
        }
        _ => Err(Error::NotFoldable {
            system: source,
            reason: "no non-trivial Dynkin automorphism quotient".into(),
        }),
    }
}
