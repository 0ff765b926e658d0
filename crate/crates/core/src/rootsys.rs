//! Irreducible reduced root systems of types A–G with exact integer Cartan
//! data, positive-root enumeration, and Dynkin-diagram queries.
//!
//! Node numbering is Bourbaki throughout:
//!
//! - A_n: the chain 1 — 2 — … — n;
//! - B_n: 1 — … — (n−1) ⇒ n, node n short;
//! - C_n: 1 — … — (n−1) ⇐ n, node n long;
//! - D_n: chain 1 — … — (n−1) with node n attached to n−2 (fork pair n−1, n);
//! - E_n: chain 1 — 3 — 4 — … — n with node 2 attached to 4;
//! - F_4: 1 — 2 ⇒ 3 — 4, nodes 1, 2 long, nodes 3, 4 short;
//! - G_2: node 1 long, node 2 short.
//!
//! The Cartan matrix is stored with `A[i][j] = ⟨α_j, α_i⟩`, so subtracting
//! the simple root α_j from a weight subtracts column j of A from its label
//! vector. Under this orientation the G_2 matrix is [[2, −1], [−3, 2]].

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::weights::Weight;
use crate::Error;

/// The seven families of irreducible reduced root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A (family, rank) pair from the canonical non-redundant list.
///
/// Admissible ranks are A n≥1, B n≥2, C n≥3, D n≥4, E n∈{6,7,8}, F_4, G_2.
/// Low-rank coincidences (B₂≅C₂, D₃≅A₃, …) are represented only by the
/// canonical family, so every abstract system appears exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemType {
    family: Family,
    rank: usize,
}

impl SystemType {
    pub fn new(family: Family, rank: usize) -> Result<SystemType, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SystemType { family, rank })
        } else {
            Err(Error::InadmissibleSystem {
                family,
                rank,
                reason: "outside the canonical admissible list".to_string(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Parses a token like "G2", "A6" or "e8".
    pub fn parse(token: &str) -> Result<SystemType, Error> {
        let mut chars = token.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| bad_token(token))?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad_token(token))?;
        SystemType::new(family, rank)
    }

    /// Every admissible system with rank ≤ `max_rank`, in (family, rank) order.
    pub fn all_admissible(max_rank: usize) -> Vec<SystemType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = SystemType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

fn bad_token(token: &str) -> Error {
    Error::InadmissibleSystem {
        family: Family::A,
        rank: 0,
        reason: format!("cannot parse system token {token:?}"),
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// An irreducible reduced root system with its Cartan matrix, positive roots
/// and Dynkin graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    system_type: SystemType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<RootVector>,
    adjacency: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds the root system for an admissible type. Positive roots are
    /// enumerated by upward string closure from the simple roots and sorted
    /// by (height, lexicographic coordinates).
    pub fn build(system_type: SystemType) -> RootSystem {
        let cartan = cartan_matrix(system_type);
        let rank = system_type.rank();

        let mut adjacency = vec![Vec::new(); rank];
        for (i, row) in cartan.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if i != j && entry != 0 {
                    adjacency[i].push(j + 1);
                }
            }
        }

        let positive_roots = positive_root_closure(&cartan);

        RootSystem {
            system_type,
            cartan,
            positive_roots,
            adjacency,
        }
    }

    pub fn system_type(&self) -> SystemType {
        self.system_type
    }

    pub fn rank(&self) -> usize {
        self.system_type.rank()
    }

    /// The Cartan matrix with `A[i][j] = ⟨α_j, α_i⟩` (0-based storage).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Column `node` of the Cartan matrix: the Dynkin labels of α_node.
    pub fn simple_root_labels(&self, node: usize) -> Result<Vec<i64>, Error> {
        self.check_node(node)?;
        Ok((0..self.rank()).map(|i| self.cartan[i][node - 1]).collect())
    }

    /// Positive roots sorted by (height, lexicographic coordinates).
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Dynkin neighbors of `node` (1-based, ascending).
    pub fn neighbors(&self, node: usize) -> Result<&[usize], Error> {
        self.check_node(node)?;
        Ok(&self.adjacency[node - 1])
    }

    /// ⟨χ, α_node⟩, read off the Dynkin labels of χ.
    pub fn pairing(&self, chi: &Weight, node: usize) -> Result<i64, Error> {
        self.check_node(node)?;
        self.check_weight(chi)?;
        Ok(chi.labels()[node - 1])
    }

    /// Nodes of Dynkin-degree exactly one. For rank 1 the single node is
    /// returned so that downstream quantifiers over extremal roots stay
    /// well-posed.
    pub fn extremal_roots(&self) -> BTreeSet<usize> {
        if self.rank() == 1 {
            return BTreeSet::from([1]);
        }
        (1..=self.rank())
            .filter(|&n| self.adjacency[n - 1].len() == 1)
            .collect()
    }

    /// The simple reflection r_{α_node}(χ) = χ − ⟨χ, α_node⟩ α_node.
    pub fn simple_reflection(&self, node: usize, chi: &Weight) -> Result<Weight, Error> {
        let pairing = self.pairing(chi, node)?;
        let mut labels = chi.labels().to_vec();
        for (label, row) in labels.iter_mut().zip(&self.cartan) {
            *label -= pairing * row[node - 1];
        }
        Ok(Weight::new(labels))
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<(), Error> {
        if node >= 1 && node <= self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                rank: self.rank(),
            })
        }
    }

    pub(crate) fn check_weight(&self, chi: &Weight) -> Result<(), Error> {
        if chi.labels().len() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: chi.labels().len(),
            })
        }
    }
}

/// Convenience wrapper used throughout the tests and the CLI.
pub fn build_root_system(t: SystemType) -> RootSystem {
    RootSystem::build(t)
}

fn cartan_matrix(t: SystemType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |edges: &[(usize, usize)], a: &mut Vec<Vec<i64>>| {
        for &(i, j) in edges {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        }
    };
    match t.family() {
        Family::A => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
        }
        Family::B => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
            a[n - 1][n - 2] = -2; // node n short
        }
        Family::C => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
            a[n - 2][n - 1] = -2; // node n long
        }
        Family::D => {
            let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            edges.pop(); // no edge (n−1, n)
            edges.push((n - 2, n));
            link(&edges, &mut a);
        }
        Family::E => {
            let mut edges = vec![(1, 3), (2, 4)];
            for i in 3..n {
                edges.push((i, i + 1));
            }
            link(&edges, &mut a);
        }
        Family::F => {
            link(&[(1, 2), (2, 3), (3, 4)], &mut a);
            a[2][1] = -2; // nodes 3, 4 short
        }
        Family::G => {
            a[0][1] = -1;
            a[1][0] = -3; // node 1 long, node 2 short
        }
    }
    a
}

/// Upward string closure: a candidate α + α_j is a root iff the α_j-string
/// through α reaches past it, i.e. r − ⟨α, α_j⟩ ≥ 1 where r is the number of
/// steps the string extends below α. Lower heights are complete when a
/// height level is processed, so r is read off the partial closure.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let rank = cartan.len();
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for j in 0..rank {
        let mut coords = vec![0i64; rank];
        coords[j] = 1;
        found.insert(coords.clone());
        frontier.push(coords);
    }

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for coords in &frontier {
            for j in 0..rank {
                let pairing: i64 = (0..rank).map(|i| cartan[j][i] * coords[i]).sum();
                let mut down = coords.clone();
                let mut r = 0i64;
                loop {
                    down[j] -= 1;
                    if down[j] >= 0 && found.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                if r - pairing >= 1 {
                    let mut up = coords.clone();
                    up[j] += 1;
                    if found.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut roots: Vec<RootVector> = found
        .into_iter()
        .map(|coords| RootVector { coords })
        .collect();
    roots.sort_by(|a, b| (a.height(), &a.coords).cmp(&(b.height(), &b.coords)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::fundamental_weight;

    fn rs(token: &str) -> RootSystem {
        RootSystem::build(SystemType::parse(token).unwrap())
    }

    #[test]
    fn admissibility() {
        assert!(SystemType::new(Family::A, 1).is_ok());
        assert!(SystemType::new(Family::B, 1).is_err());
        assert!(SystemType::new(Family::B, 2).is_ok());
        assert!(SystemType::new(Family::C, 2).is_err());
        assert!(SystemType::new(Family::D, 3).is_err());
        assert!(SystemType::new(Family::E, 5).is_err());
        assert!(SystemType::new(Family::E, 9).is_err());
        assert!(SystemType::new(Family::F, 4).is_ok());
        assert!(SystemType::new(Family::G, 3).is_err());
        assert!(SystemType::parse("bogus").is_err());
        assert!(SystemType::parse("A0").is_err());
        assert_eq!(SystemType::parse("e8").unwrap().to_string(), "E8");
    }

    #[test]
    fn g2_cartan_matrix() {
        let g2 = rs("G2");
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.positive_roots().len(), 6);
    }

    #[test]
    fn a1_trivial() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan(), &[vec![2]]);
        let roots: Vec<_> = a1.positive_roots().iter().map(|r| r.coords()).collect();
        assert_eq!(roots, vec![&[1][..]]);
    }

    #[test]
    fn a2_positive_roots_sorted() {
        let a2 = rs("A2");
        let coords: Vec<_> = a2
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn b2_has_four_positive_roots() {
        assert_eq!(rs("B2").positive_roots().len(), 4);
    }

    #[test]
    fn g2_heights_and_highest_root() {
        let g2 = rs("G2");
        let mut heights: Vec<i64> = g2.positive_roots().iter().map(|r| r.height()).collect();
        heights.sort_unstable();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        let highest = g2.positive_roots().last().unwrap();
        // 2·(long) + 3·(short) in node order (long, short)
        assert_eq!(highest.coords(), &[2, 3]);
    }

    /// Classical positive-root counts, cross-checked against the closure.
    #[test]
    fn positive_root_counts() {
        let cases = [
            ("A1", 1),
            ("A4", 10),
            ("A8", 36),
            ("B2", 4),
            ("B5", 25),
            ("B8", 64),
            ("C3", 9),
            ("C8", 64),
            ("D4", 12),
            ("D8", 56),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (token, count) in cases {
            let sys = rs(token);
            assert_eq!(sys.positive_roots().len(), count, "{token}");
            // simple roots are exactly the height-1 positive roots
            let simple = sys
                .positive_roots()
                .iter()
                .filter(|r| r.height() == 1)
                .count();
            assert_eq!(simple, sys.rank(), "{token}");
            for root in sys.positive_roots() {
                assert!(root.coords().iter().all(|&c| c >= 0));
                assert!(root.height() >= 1);
            }
        }
    }

    /// Height of the highest root is h − 1 where h = 2|Σ⁺|/rank is the
    /// Coxeter number; independent of the closure walk itself.
    #[test]
    fn highest_root_height_matches_coxeter_number() {
        for token in ["A3", "B4", "C5", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let sys = rs(token);
            let max_height = sys
                .positive_roots()
                .iter()
                .map(|r| r.height())
                .max()
                .unwrap();
            let coxeter = 2 * sys.positive_roots().len() as i64 / sys.rank() as i64;
            assert_eq!(max_height, coxeter - 1, "{token}");
        }
        // E8 headline value
        let e8 = rs("E8");
        assert_eq!(e8.positive_roots().len(), 120);
        assert_eq!(
            e8.positive_roots().iter().map(|r| r.height()).max(),
            Some(29)
        );
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn cartan_matrix_shape() {
        for t in SystemType::all_admissible(8) {
            let sys = RootSystem::build(t);
            let a = sys.cartan();
            let n = sys.rank();
            for i in 0..n {
                assert_eq!(a[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
            assert_ne!(int_determinant(a), 0, "{t}");
        }
    }

    fn int_determinant(a: &[Vec<i64>]) -> i64 {
        // small ranks; cofactor expansion is fine
        let n = a.len();
        if n == 1 {
            return a[0][0];
        }
        let mut det = 0i64;
        for j in 0..n {
            if a[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[i][c])
                        .collect::<Vec<_>>()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * a[0][j] * int_determinant(&minor);
        }
        det
    }

    #[test]
    fn extremal_nodes() {
        assert_eq!(rs("E8").extremal_roots().len(), 3);
        assert_eq!(rs("A5").extremal_roots(), BTreeSet::from([1, 5]));
        assert_eq!(rs("D4").extremal_roots(), BTreeSet::from([1, 3, 4]));
        assert_eq!(rs("A1").extremal_roots(), BTreeSet::from([1]));
        assert_eq!(rs("E6").extremal_roots(), BTreeSet::from([1, 2, 6]));
        assert_eq!(rs("G2").extremal_roots(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn pairing_examples() {
        let g2 = rs("G2");
        // α_j pairs to 2 with itself
        for j in 1..=2 {
            let alpha = Weight::new(g2.simple_root_labels(j).unwrap());
            assert_eq!(g2.pairing(&alpha, j).unwrap(), 2);
        }
        // long simple root against the short node, fixed by the matrix convention
        let long = Weight::new(g2.simple_root_labels(1).unwrap());
        assert_eq!(g2.pairing(&long, 2).unwrap(), -3);

        let a2 = rs("A2");
        let w1 = fundamental_weight(&a2, 1).unwrap();
        assert_eq!(a2.pairing(&w1, 2).unwrap(), 0);
        assert!(a2.pairing(&w1, 3).is_err());
    }

    #[test]
    fn reflection_examples() {
        let f4 = rs("F4");
        for j in 1..=4 {
            let w = fundamental_weight(&f4, j).unwrap();
            let r = f4.simple_reflection(j, &w).unwrap();
            // r_j(ϖ_j) = ϖ_j − α_j
            let alpha = f4.simple_root_labels(j).unwrap();
            let expect: Vec<i64> = w
                .labels()
                .iter()
                .zip(&alpha)
                .map(|(a, b)| a - b)
                .collect();
            assert_eq!(r.labels(), &expect[..]);
            // fixed when the pairing vanishes
            for k in 1..=4 {
                if k != j {
                    assert_eq!(f4.simple_reflection(k, &w).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn extremal_set_invariant_under_diagram_automorphisms() {
        // spot checks with the involutions that exist in types A, D, E6
        let a5 = rs("A5");
        let ext = a5.extremal_roots();
        let flipped: BTreeSet<usize> = ext.iter().map(|&n| 6 - n).collect();
        assert_eq!(ext, flipped);

        let d4 = rs("D4");
        let ext = d4.extremal_roots();
        let rotated: BTreeSet<usize> = ext
            .iter()
            .map(|&n| match n {
                1 => 3,
                3 => 4,
                4 => 1,
                other => other,
            })
            .collect();
        assert_eq!(ext, rotated);

        let e6 = rs("E6");
        let ext = e6.extremal_roots();
        let flipped: BTreeSet<usize> = ext
            .iter()
            .map(|&n| match n {
                1 => 6,
                6 => 1,
                3 => 5,
                5 => 3,
                other => other,
            })
            .collect();
        assert_eq!(ext, flipped);
    }
}
