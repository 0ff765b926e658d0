//! Independent oracles shared by the property and acceptance suites.
//!
//! Everything here recomputes results along routes the library does not use:
//! reflection-orbit closures instead of the string rule, anti-dominant
//! descent instead of the generation depth, anchored propagation over all
//! target vertices instead of the closed folding formula, and a standalone
//! rational solver. The oracles only consume public query surfaces.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use lie_hasse::dmap::Labeling;
use lie_hasse::{HasseDiagram, RootSystem, Weight};

/// Applies the simple reflection r_j to a label vector.
pub fn reflect_labels(rs: &RootSystem, j: usize, labels: &[i64]) -> Vec<i64> {
    let pairing = labels[j - 1];
    (0..rs.rank())
        .map(|i| labels[i] - pairing * rs.cartan()[i][j - 1])
        .collect()
}

/// The full reflection orbit of a weight, by closure under every simple
/// reflection.
pub fn reflection_orbit(rs: &RootSystem, labels: &[i64]) -> HashSet<Vec<i64>> {
    let mut orbit = HashSet::new();
    let mut queue = VecDeque::from([labels.to_vec()]);
    orbit.insert(labels.to_vec());
    while let Some(current) = queue.pop_front() {
        for j in 1..=rs.rank() {
            let image = reflect_labels(rs, j, &current);
            if orbit.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    orbit
}

/// Greedy descent to the unique anti-dominant element of the orbit: while
/// some label is positive, reflect at the smallest such node.
pub fn anti_dominant(rs: &RootSystem, labels: &[i64]) -> Vec<i64> {
    let mut current = labels.to_vec();
    loop {
        match (0..rs.rank()).find(|&i| current[i] > 0) {
            Some(i) => current = reflect_labels(rs, i + 1, &current),
            None => return current,
        }
    }
}

/// Test-side exact solver: simple-root coordinates of the weight with label
/// vector `d`, as (num, den) pairs in lowest terms with positive den.
#[allow(clippy::needless_range_loop)]
pub fn root_coords(rs: &RootSystem, d: &[i64]) -> Vec<(i128, i128)> {
    let n = rs.rank();
    let mut m: Vec<Vec<(i128, i128)>> = (0..n)
        .map(|i| {
            let mut row: Vec<(i128, i128)> = (0..n)
                .map(|j| (rs.cartan()[i][j] as i128, 1))
                .collect();
            row.push((d[i] as i128, 1));
            row
        })
        .collect();

    fn norm(v: (i128, i128)) -> (i128, i128) {
        let (mut a, mut b) = (v.0.unsigned_abs(), v.1.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        let g = (a.max(1)) as i128;
        let sign = if v.1 < 0 { -1 } else { 1 };
        (sign * v.0 / g, sign * v.1 / g)
    }
    let sub = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1 - y.0 * x.1, x.1 * y.1));
    let mul = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.0, x.1 * y.1));
    let div = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1, x.1 * y.0));

    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col].0 != 0).expect("nonsingular");
        m.swap(col, pivot);
        let inv = m[col][col];
        for j in col..=n {
            m[col][j] = div(m[col][j], inv);
        }
        for r in 0..n {
            if r != col && m[r][col].0 != 0 {
                let factor = m[r][col];
                for j in col..=n {
                    let t = mul(factor, m[col][j]);
                    m[r][j] = sub(m[r][j], t);
                }
            }
        }
    }
    (0..n).map(|i| m[i][n]).collect()
}

/// Level count predicted independently of the generation pass:
/// 1 + Σ simple-root coordinates of λ − w0 λ, with w0 λ from anti-dominant
/// descent and the coordinates from the test-side solver.
pub fn predicted_level_count(rs: &RootSystem, highest: &[i64]) -> usize {
    let lowest = anti_dominant(rs, highest);
    let diff: Vec<i64> = highest.iter().zip(&lowest).map(|(a, b)| a - b).collect();
    let coords = root_coords(rs, &diff);
    let total: i128 = coords
        .iter()
        .map(|&(num, den)| {
            assert_eq!(den, 1, "λ − w0λ must be integral over the simple roots");
            num
        })
        .sum();
    1 + total as usize
}

/// Saturation-closure oracle: the union of the reflection orbits of every
/// dominant weight below `highest` in the dominance order (within the same
/// root-lattice coset), as label vectors.
pub fn saturation_closure(rs: &RootSystem, highest: &[i64]) -> HashSet<Vec<i64>> {
    let n = rs.rank();
    let lowest = anti_dominant(rs, highest);
    let diff: Vec<i64> = highest.iter().zip(&lowest).map(|(a, b)| a - b).collect();
    let bounds: Vec<i64> = root_coords(rs, &diff)
        .iter()
        .map(|&(num, den)| {
            assert_eq!(den, 1);
            num as i64
        })
        .collect();

    let mut out = HashSet::new();
    let mut k = vec![0i64; n];
    loop {
        // μ = λ − A·k
        let mu: Vec<i64> = (0..n)
            .map(|i| highest[i] - (0..n).map(|j| rs.cartan()[i][j] * k[j]).sum::<i64>())
            .collect();
        if mu.iter().all(|&l| l >= 0) {
            out.extend(reflection_orbit(rs, &mu));
        }
        // odometer over the box [0, bounds]
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            k[pos] += 1;
            if k[pos] <= bounds[pos] {
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

/// All vertex maps src → tgt satisfying the edge condition for `f`, found by
/// trying every target vertex as the image of the source top and propagating
/// along edges. Any map satisfying the condition on all edges is in
/// particular consistent along a spanning set of in-edges, so this
/// enumeration is exhaustive; no closed formula is consulted.
pub fn edge_compatible_maps(
    f: &Labeling,
    src: &HasseDiagram,
    tgt: &HasseDiagram,
) -> Vec<Vec<usize>> {
    let mut maps = Vec::new();
    'anchor: for anchor in 0..tgt.vertex_count() {
        let mut image = vec![usize::MAX; src.vertex_count()];
        image[src.top()] = anchor;
        // vertices are level-sorted, so parents precede children
        for v in 1..src.vertex_count() {
            let mut candidate = usize::MAX;
            for &(label, parent) in src.parents_of(v) {
                match tgt.child_along(image[parent], f.apply(label)) {
                    Some(c) if candidate == usize::MAX || candidate == c => candidate = c,
                    _ => continue 'anchor,
                }
            }
            assert_ne!(candidate, usize::MAX, "non-top vertex without parents");
            image[v] = candidate;
        }
        maps.push(image);
    }
    maps
}

/// Literal enumeration of every function V(src) → V(tgt), kept for
/// cross-validating the propagation enumerator on tiny diagrams.
pub fn edge_compatible_maps_literal(
    f: &Labeling,
    src: &HasseDiagram,
    tgt: &HasseDiagram,
) -> Vec<Vec<usize>> {
    let s = src.vertex_count();
    let t = tgt.vertex_count();
    assert!(
        (t as f64).powi(s as i32) <= 2e7,
        "literal enumeration only for tiny diagrams"
    );
    let mut maps = Vec::new();
    let mut image = vec![0usize; s];
    loop {
        let ok = src.edges().iter().all(|e| {
            tgt.child_along(image[e.upper], f.apply(e.label)) == Some(image[e.lower])
        });
        if ok {
            maps.push(image.clone());
        }
        let mut pos = 0;
        loop {
            if pos == s {
                return maps;
            }
            image[pos] += 1;
            if image[pos] < t {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

pub fn is_surjective_map(image: &[usize], tgt: &HasseDiagram) -> bool {
    let mut covered = vec![false; tgt.vertex_count()];
    for &v in image {
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Undirected connectivity over the diagram's edges.
pub fn is_connected(d: &HasseDiagram) -> bool {
    if d.vertex_count() == 0 {
        return false;
    }
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in d.edges() {
        adj.entry(e.upper).or_default().push(e.lower);
        adj.entry(e.lower).or_default().push(e.upper);
    }
    let mut seen = vec![false; d.vertex_count()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).map(|v| v.as_slice()).unwrap_or(&[]) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == d.vertex_count()
}

/// Canonical text rendering of a weight for orbit set comparisons.
pub fn labels_of_set(set: &lie_hasse::WeightSet) -> HashSet<Vec<i64>> {
    set.members()
        .iter()
        .map(|w: &Weight| w.labels().to_vec())
        .collect()
}

// ---------------------------------------------------------------------------
// A strict checker for the DOT subset the exporter emits, following the
// published grammar: graph, stmt_list, node/edge/attr statements, subgraphs,
// attribute lists, quoted and alphanumeric IDs.
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Clone)]
enum Tok {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Eq,
    Arrow,
}

fn dot_tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '{' => {
                toks.push(Tok::LBrace);
                i += 1;
            }
            '}' => {
                toks.push(Tok::RBrace);
                i += 1;
            }
            '[' => {
                toks.push(Tok::LBracket);
                i += 1;
            }
            ']' => {
                toks.push(Tok::RBracket);
                i += 1;
            }
            ';' => {
                toks.push(Tok::Semi);
                i += 1;
            }
            ',' => {
                toks.push(Tok::Comma);
                i += 1;
            }
            '=' => {
                toks.push(Tok::Eq);
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&'>') {
                    toks.push(Tok::Arrow);
                    i += 2;
                } else {
                    return Err(format!("stray '-' at {i}"));
                }
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match bytes.get(i) {
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') => {
                            s.push(*bytes.get(i + 1).ok_or("dangling escape")?);
                            i += 2;
                        }
                        Some(&c) => {
                            s.push(c);
                            i += 1;
                        }
                        None => return Err("unterminated string".into()),
                    }
                }
                toks.push(Tok::Id(s));
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::new();
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_' || bytes[i] == '.')
                {
                    s.push(bytes[i]);
                    i += 1;
                }
                toks.push(Tok::Id(s));
            }
            other => return Err(format!("unexpected character {other:?} at {i}")),
        }
    }
    Ok(toks)
}

struct DotParser {
    toks: Vec<Tok>,
    pos: usize,
}

impl DotParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, want: &Tok) -> Result<(), String> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!("expected {want:?}, got {:?}", self.peek()))
        }
    }

    fn eat_id(&mut self) -> Result<String, String> {
        match self.peek().cloned() {
            Some(Tok::Id(s)) => {
                self.pos += 1;
                Ok(s)
            }
            other => Err(format!("expected identifier, got {other:?}")),
        }
    }

    fn graph(&mut self) -> Result<(), String> {
        let kw = self.eat_id()?;
        if kw != "digraph" {
            return Err(format!("expected 'digraph', got {kw:?}"));
        }
        if matches!(self.peek(), Some(Tok::Id(_))) {
            self.eat_id()?;
        }
        self.block()?;
        if self.pos != self.toks.len() {
            return Err("trailing tokens after graph body".into());
        }
        Ok(())
    }

    fn block(&mut self) -> Result<(), String> {
        self.eat(&Tok::LBrace)?;
        while self.peek() != Some(&Tok::RBrace) {
            self.statement()?;
            if self.peek() == Some(&Tok::Semi) {
                self.pos += 1;
            }
        }
        self.eat(&Tok::RBrace)
    }

    fn statement(&mut self) -> Result<(), String> {
        if self.peek() == Some(&Tok::LBrace) {
            return self.block();
        }
        let id = self.eat_id()?;
        match self.peek() {
            Some(Tok::Eq) => {
                self.pos += 1;
                self.eat_id()?;
                Ok(())
            }
            Some(Tok::LBracket) if id == "graph" || id == "node" || id == "edge" => {
                self.attr_list()
            }
            Some(Tok::Arrow) => {
                while self.peek() == Some(&Tok::Arrow) {
                    self.pos += 1;
                    self.eat_id()?;
                }
                if self.peek() == Some(&Tok::LBracket) {
                    self.attr_list()?;
                }
                Ok(())
            }
            Some(Tok::LBracket) => self.attr_list(),
            _ => Ok(()), // bare node statement
        }
    }

    fn attr_list(&mut self) -> Result<(), String> {
        self.eat(&Tok::LBracket)?;
        while self.peek() != Some(&Tok::RBracket) {
            self.eat_id()?;
            self.eat(&Tok::Eq)?;
            self.eat_id()?;
            if matches!(self.peek(), Some(Tok::Comma) | Some(Tok::Semi)) {
                self.pos += 1;
            }
        }
        self.eat(&Tok::RBracket)
    }
}

/// Validates a DOT document against the digraph grammar subset.
pub fn check_dot(text: &str) -> Result<(), String> {
    let toks = dot_tokenize(text)?;
    DotParser { toks, pos: 0 }.graph()
}
