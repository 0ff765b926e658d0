//! Weight-lattice arithmetic, the dominance order, and the full weight set
//! of an irreducible representation computed from its highest weight.
//!
//! Weights are identified by their Dynkin labels ⟨χ, α_i⟩; inside a weight
//! set every member also carries its depth vector k with χ = λ − Σ k_σ α_σ
//! relative to the ambient highest weight λ. The depth vector is the
//! collision-free key; labels are derived data.
//!
//! The set is generated breadth-first by total depth. A member χ at the
//! current frontier spawns χ − α_j iff p + ⟨χ, α_j⟩ ≥ 1, where p is how far
//! the α_j-string extends above χ. Every weight χ + kα_j with k ≥ 1 has
//! strictly smaller total depth than χ, so p only consults levels that are
//! already complete; this is what makes the single pass sound. Multiplicities
//! are deliberately not computed: the diagrams built on top depend only on
//! the weight set.
//!
//! Rational arithmetic appears in exactly one place, the Cartan-matrix solve
//! inside [`dominance_leq`]; everything else is pure integer.
//!
//! Only reduced systems are in scope, so the pairing normalizer of a
//! fundamental weight is identically 1 and carries no branch anywhere.

use std::collections::HashMap;

use crate::rootsys::RootSystem;
use crate::Error;

/// A weight in Dynkin-label coordinates, optionally with its depth vector
/// relative to an ambient highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    labels: Vec<i64>,
    depth: Option<Vec<i64>>,
}

impl Weight {
    pub fn new(labels: Vec<i64>) -> Weight {
        Weight {
            labels,
            depth: None,
        }
    }

    pub(crate) fn with_depth(labels: Vec<i64>, depth: Vec<i64>) -> Weight {
        debug_assert!(depth.iter().all(|&k| k >= 0));
        Weight {
            labels,
            depth: Some(depth),
        }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Depth vector k with χ = λ − Σ k_σ α_σ, when the weight came out of a
    /// [`WeightSet`].
    pub fn depth(&self) -> Option<&[i64]> {
        self.depth.as_deref()
    }

    /// Total depth Σ k_σ.
    pub fn depth_height(&self) -> Option<i64> {
        self.depth.as_ref().map(|k| k.iter().sum())
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }
}

/// ϖ_node: labels are the node-th standard basis vector.
pub fn fundamental_weight(rs: &RootSystem, node: usize) -> Result<Weight, Error> {
    rs.check_node(node)?;
    let mut labels = vec![0i64; rs.rank()];
    labels[node - 1] = 1;
    Ok(Weight::new(labels))
}

/// True iff every Dynkin label is ≥ 0.
pub fn is_dominant(rs: &RootSystem, chi: &Weight) -> bool {
    chi.labels.len() == rs.rank() && chi.labels.iter().all(|&l| l >= 0)
}

/// True iff χ − ψ has non-negative integer simple-root coordinates, i.e.
/// ψ ≼ χ in the dominance order. Incomparable pairs are false both ways.
pub fn dominance_leq(rs: &RootSystem, psi: &Weight, chi: &Weight) -> bool {
    if psi.labels.len() != rs.rank() || chi.labels.len() != rs.rank() {
        return false;
    }
    let diff: Vec<i64> = chi
        .labels
        .iter()
        .zip(&psi.labels)
        .map(|(a, b)| a - b)
        .collect();
    match solve_root_coords(rs.cartan(), &diff) {
        Some(coords) => coords.iter().all(|r| r.is_non_negative_integer()),
        None => false,
    }
}

/// Simple-root coordinates of a weight given by labels `d`, i.e. the exact
/// rational solution of A·c = d. `None` only if the matrix were singular,
/// which does not happen for admissible systems.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_root_coords(cartan: &[Vec<i64>], d: &[i64]) -> Option<Vec<Rational>> {
    let n = cartan.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if j < n {
                        Rational::from(cartan[i][j])
                    } else {
                        Rational::from(d[i])
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col];
        for j in col..=n {
            m[col][j] = m[col][j].div(inv);
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                for j in col..=n {
                    let sub = factor.mul(m[col][j]);
                    m[r][j] = m[r][j].sub(sub);
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n]).collect())
}

/// Reduced fraction over i128. Ranks are ≤ 8 and labels are small, so this
/// never gets near overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Rational {
    num: i128,
    den: i128, // > 0
}

impl Rational {
    fn reduce(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    fn is_zero(self) -> bool {
        self.num == 0
    }

    fn mul(self, other: Rational) -> Rational {
        Rational::reduce(self.num * other.num, self.den * other.den)
    }

    fn div(self, other: Rational) -> Rational {
        Rational::reduce(self.num * other.den, self.den * other.num)
    }

    fn sub(self, other: Rational) -> Rational {
        Rational::reduce(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )
    }

    pub(crate) fn is_non_negative_integer(self) -> bool {
        self.den == 1 && self.num >= 0
    }

    pub(crate) fn as_integer(self) -> Option<i64> {
        (self.den == 1).then_some(self.num as i64)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Rational {
        Rational {
            num: v as i128,
            den: 1,
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The finite, saturated, W-invariant weight set of the irreducible
/// representation with a given dominant highest weight. Members are keyed by
/// depth vector and ordered by (total depth, lexicographic depth).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    system: RootSystem,
    highest: Weight,
    members: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeightSet {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn highest(&self) -> &Weight {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Weight] {
        &self.members
    }

    pub fn contains_depth(&self, depth: &[i64]) -> bool {
        self.index.contains_key(depth)
    }

    pub fn index_of_depth(&self, depth: &[i64]) -> Option<usize> {
        self.index.get(depth).copied()
    }

    /// Membership by Dynkin labels: resolves the depth via the Cartan solve.
    pub fn contains_labels(&self, labels: &[i64]) -> bool {
        if labels.len() != self.system.rank() {
            return false;
        }
        let diff: Vec<i64> = self
            .highest
            .labels()
            .iter()
            .zip(labels)
            .map(|(a, b)| a - b)
            .collect();
        match solve_root_coords(self.system.cartan(), &diff) {
            Some(coords) => {
                let mut depth = Vec::with_capacity(coords.len());
                for c in coords {
                    match c.as_integer() {
                        Some(k) if k >= 0 => depth.push(k),
                        _ => return false,
                    }
                }
                self.contains_depth(&depth)
            }
            None => false,
        }
    }
}

/// Generates the weight set of the irreducible representation with highest
/// weight `highest` by the level-by-level string rule.
pub fn weight_set(rs: &RootSystem, highest: &Weight) -> Result<WeightSet, Error> {
    rs.check_weight(highest)?;
    if !is_dominant(rs, highest) {
        return Err(Error::NonDominant {
            labels: highest.labels().to_vec(),
        });
    }
    if highest.is_zero() {
        return Err(Error::ZeroWeight);
    }

    let rank = rs.rank();
    let cartan = rs.cartan();
    let top_labels = highest.labels().to_vec();
    let labels_of = |depth: &[i64]| -> Vec<i64> {
        (0..rank)
            .map(|i| top_labels[i] - (0..rank).map(|j| cartan[i][j] * depth[j]).sum::<i64>())
            .collect()
    };

    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut members: Vec<Weight> = Vec::new();
    let top_depth = vec![0i64; rank];
    index.insert(top_depth.clone(), 0);
    members.push(Weight::with_depth(top_labels.clone(), top_depth.clone()));

    let mut frontier = vec![top_depth];
    while !frontier.is_empty() {
        let mut seen = std::collections::HashSet::new();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for depth in &frontier {
            let labels = labels_of(depth);
            for j in 0..rank {
                // p = reach of the α_j-string above χ, all at smaller depth
                let mut p = 0i64;
                let mut up = depth.clone();
                loop {
                    up[j] -= 1;
                    if up[j] >= 0 && index.contains_key(&up) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p + labels[j] >= 1 {
                    let mut down = depth.clone();
                    down[j] += 1;
                    if seen.insert(down.clone()) {
                        next.push(down);
                    }
                }
            }
        }
        next.sort_unstable();
        for depth in &next {
            let pos = members.len();
            index.insert(depth.clone(), pos);
            members.push(Weight::with_depth(labels_of(depth), depth.clone()));
        }
        frontier = next;
    }

    Ok(WeightSet {
        system: rs.clone(),
        highest: highest.clone(),
        members,
        index,
    })
}
