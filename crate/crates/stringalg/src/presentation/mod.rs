//! Quiver presentations of string algebras and the path combinatorics on top
//! of them.
//!
//! A presentation is a quiver together with a set of forbidden paths (the
//! monomial generators of the relation ideal). Validation turns it into a
//! [`StringAlgebra`]: the special biserial degree bounds and the unique
//! continuation conditions are checked, and the finite set of nonzero paths
//! is enumerated with exact cycle detection (no length cutoff).
//!
//! Path composition follows the "p after q" convention: the algebraic
//! product `pq` traverses `q` first. Textual path literals `a.b.c` are in
//! traversal order, i.e. they denote the algebraic product `cba`.

mod parse;

pub use parse::{format_presentation, parse_presentation, ParseError};

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

/// Index of a vertex in its quiver. Ids follow the deterministic label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of an arrow in its quiver. Ids follow the deterministic name order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with named vertices and arrows.
///
/// Vertices are sorted by label and arrows by name (natural order: numeric
/// labels compare as numbers), so ids are stable across reparses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    vertex_by_label: HashMap<String, VertexId>,
    arrow_by_name: HashMap<String, ArrowId>,
}

/// Natural comparison: all-digit names compare numerically, otherwise as
/// strings; digits sort before non-digit names.
pub(crate) fn natural_key(s: &str) -> (u8, u64, String) {
    if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && s.len() <= 18 {
        (0, s.parse().unwrap(), String::new())
    } else {
        (1, 0, s.to_string())
    }
}

impl Quiver {
    pub fn new(vertex_labels: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, ValidateError> {
        let mut labels = vertex_labels;
        labels.sort_by_key(|l| natural_key(l));
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(ValidateError::DuplicateVertex(w[0].clone()));
            }
        }
        let vertices: Vec<Vertex> = labels.into_iter().map(|label| Vertex { label }).collect();
        let vertex_by_label: HashMap<String, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.label.clone(), VertexId(i as u32)))
            .collect();

        let mut named = arrows;
        named.sort_by_key(|(name, _, _)| natural_key(name));
        for w in named.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ValidateError::DuplicateArrow(w[0].0.clone()));
            }
        }
        let mut arrs = Vec::with_capacity(named.len());
        for (name, src, tgt) in named {
            let source = *vertex_by_label
                .get(&src)
                .ok_or_else(|| ValidateError::UnknownVertex(src.clone()))?;
            let target = *vertex_by_label
                .get(&tgt)
                .ok_or_else(|| ValidateError::UnknownVertex(tgt.clone()))?;
            arrs.push(Arrow { name, source, target });
        }
        let arrow_by_name = arrs
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), ArrowId(i as u32)))
            .collect();
        Ok(Quiver { vertices, arrows: arrs, vertex_by_label, arrow_by_name })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.index()]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.index()]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.index()].label
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.index()].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.index()].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.index()].target
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.vertex_by_label.get(label).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_by_name.get(name).copied()
    }

    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrows().filter(|&a| self.source(a) == v).collect()
    }

    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrows().filter(|&a| self.target(a) == v).collect()
    }
}

/// A path of the quiver, stored in traversal order (`arrows[0]` first).
/// The empty arrow list is the trivial path at `start`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    /// Builds a path from arrows in traversal order, checking composability.
    pub fn new(quiver: &Quiver, start: VertexId, arrows: Vec<ArrowId>) -> Option<Self> {
        let mut at = start;
        for &a in &arrows {
            if quiver.source(a) != at {
                return None;
            }
            at = quiver.target(a);
        }
        Some(Path { start, arrows })
    }

    pub fn of_arrow(quiver: &Quiver, a: ArrowId) -> Self {
        Path { start: quiver.source(a), arrows: vec![a] }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, quiver: &Quiver) -> VertexId {
        match self.arrows.last() {
            Some(&a) => quiver.target(a),
            None => self.start,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// First arrow in traversal order (the "first arrow" of the paper).
    pub fn first_arrow(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    /// Last arrow in traversal order (the "last arrow" of the paper).
    pub fn last_arrow(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    /// True if `other` is a right subpath, i.e. an initial segment in
    /// traversal order.
    pub fn has_right_subpath(&self, other: &Path) -> bool {
        other.start == self.start && self.arrows.starts_with(&other.arrows)
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            write!(f, "e{}", self.quiver.label(self.path.start))
        } else {
            let names: Vec<&str> =
                self.path.arrows.iter().map(|&a| self.quiver.arrow_name(a)).collect();
            write!(f, "{}", names.join("."))
        }
    }
}

/// A quiver together with the monomial generators of the relation ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub quiver: Quiver,
    /// Forbidden paths of length >= 2, in traversal order.
    pub relations: Vec<Path>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidateError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` has {1} {2} arrows; a string algebra allows at most two")]
    DegreeViolation(String, usize, &'static str),
    #[error("arrow `{0}` admits more than one {1}; violates the string condition")]
    StringConditionViolation(String, &'static str),
    #[error("presentation is not admissible: nonzero paths cycle through `{0}`")]
    NotAdmissible(String),
    #[error("forbidden path `{0}` has length < 2")]
    RelationTooShort(String),
}

/// A validated string algebra: the presentation plus the cached table of
/// nonzero paths and the unique-continuation maps.
#[derive(Debug, Clone)]
pub struct StringAlgebra {
    pres: QuiverPresentation,
    nonzero: Vec<Path>,
    nonzero_set: HashSet<Path>,
    /// next[a] = unique arrow b with `ba` nonzero of length 2, if any.
    next: Vec<Option<ArrowId>>,
    /// prev[a] = unique arrow b with `ab` nonzero of length 2, if any.
    prev: Vec<Option<ArrowId>>,
    by_start: Vec<Vec<usize>>,
    by_end: Vec<Vec<usize>>,
    max_rel_len: usize,
}

impl QuiverPresentation {
    pub fn validate(self) -> Result<StringAlgebra, ValidateError> {
        StringAlgebra::validate(self)
    }
}

impl StringAlgebra {
    pub fn validate(pres: QuiverPresentation) -> Result<Self, ValidateError> {
        let quiver = &pres.quiver;
        for r in &pres.relations {
            if r.len() < 2 {
                return Err(ValidateError::RelationTooShort(r.display(quiver).to_string()));
            }
        }
        for v in quiver.vertices() {
            let out = quiver.arrows_from(v).len();
            if out > 2 {
                return Err(ValidateError::DegreeViolation(
                    quiver.label(v).to_string(),
                    out,
                    "outgoing",
                ));
            }
            let inc = quiver.arrows_into(v).len();
            if inc > 2 {
                return Err(ValidateError::DegreeViolation(
                    quiver.label(v).to_string(),
                    inc,
                    "incoming",
                ));
            }
        }

        // Length-2 zero relations determine the unique-continuation maps.
        let len2: HashSet<(ArrowId, ArrowId)> = pres
            .relations
            .iter()
            .filter(|r| r.len() == 2)
            .map(|r| (r.arrows[0], r.arrows[1]))
            .collect();
        let mut next: Vec<Option<ArrowId>> = vec![None; quiver.arrow_count()];
        let mut prev: Vec<Option<ArrowId>> = vec![None; quiver.arrow_count()];
        for a in quiver.arrows() {
            for b in quiver.arrows_from(quiver.target(a)) {
                if len2.contains(&(a, b)) {
                    continue;
                }
                // `b after a` is nonzero.
                if next[a.index()].replace(b).is_some() {
                    return Err(ValidateError::StringConditionViolation(
                        quiver.arrow_name(a).to_string(),
                        "successor",
                    ));
                }
                if prev[b.index()].replace(a).is_some() {
                    return Err(ValidateError::StringConditionViolation(
                        quiver.arrow_name(b).to_string(),
                        "predecessor",
                    ));
                }
            }
        }

        let max_rel_len = pres.relations.iter().map(|r| r.len()).max().unwrap_or(2);
        let rels: HashSet<&[ArrowId]> = pres.relations.iter().map(|r| r.arrows()).collect();

        // Enumerate the nonzero paths: the paths starting with a fixed arrow
        // follow the unique successor chain until a forbidden factor
        // completes. A repeated (arrow, window) state certifies infinitely
        // many nonzero paths.
        let mut nonzero: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
        for a in quiver.arrows() {
            let mut arrows = vec![a];
            let mut seen: HashSet<(ArrowId, Vec<ArrowId>)> = HashSet::new();
            loop {
                let last = *arrows.last().unwrap();
                let window_start = arrows.len().saturating_sub(max_rel_len - 1);
                let window = arrows[window_start..].to_vec();
                if !seen.insert((last, window)) {
                    return Err(ValidateError::NotAdmissible(
                        quiver.arrow_name(a).to_string(),
                    ));
                }
                nonzero.push(Path { start: quiver.source(a), arrows: arrows.clone() });
                let Some(b) = next[last.index()] else { break };
                arrows.push(b);
                // Does a forbidden factor end at the new arrow?
                let died = (2..=max_rel_len.min(arrows.len()))
                    .any(|l| rels.contains(&arrows[arrows.len() - l..]));
                if died {
                    break;
                }
            }
        }
        nonzero.sort();
        let nonzero_set: HashSet<Path> = nonzero.iter().cloned().collect();
        let mut by_start = vec![Vec::new(); quiver.vertex_count()];
        let mut by_end = vec![Vec::new(); quiver.vertex_count()];
        for (i, p) in nonzero.iter().enumerate() {
            by_start[p.start().index()].push(i);
            by_end[p.end(quiver).index()].push(i);
        }

        let alg = StringAlgebra {
            pres,
            nonzero,
            nonzero_set,
            next,
            prev,
            by_start,
            by_end,
            max_rel_len,
        };
        debug_assert!(alg.check_factor_closure());
        Ok(alg)
    }

    fn check_factor_closure(&self) -> bool {
        self.nonzero.iter().all(|p| {
            (0..p.len()).all(|i| {
                (i + 1..=p.len()).all(|j| {
                    let sub = &p.arrows()[i..j];
                    let start = if sub.is_empty() {
                        p.start()
                    } else {
                        self.quiver().source(sub[0])
                    };
                    self.is_nonzero_arrows(start, sub)
                })
            })
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.pres.quiver
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.pres
    }

    /// K-dimension of the algebra: the number of nonzero paths.
    pub fn dimension(&self) -> usize {
        self.nonzero.len()
    }

    pub fn nonzero_paths(&self) -> &[Path] {
        &self.nonzero
    }

    pub fn paths_from(&self, v: VertexId) -> impl Iterator<Item = &Path> {
        self.by_start[v.index()].iter().map(|&i| &self.nonzero[i])
    }

    pub fn paths_into(&self, v: VertexId) -> impl Iterator<Item = &Path> {
        self.by_end[v.index()].iter().map(|&i| &self.nonzero[i])
    }

    pub fn is_nonzero(&self, p: &Path) -> bool {
        self.nonzero_set.contains(p)
    }

    fn is_nonzero_arrows(&self, start: VertexId, arrows: &[ArrowId]) -> bool {
        self.nonzero_set.contains(&Path { start, arrows: arrows.to_vec() })
    }

    /// Unique arrow `b` such that `b` after `a` is nonzero.
    pub fn next_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        self.next[a.index()]
    }

    /// Unique arrow `b` such that `a` after `b` is nonzero.
    pub fn prev_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        self.prev[a.index()]
    }

    /// Algebraic product `p` after `q`; `None` encodes zero.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.start() != q.end(self.quiver()) {
            return None;
        }
        let mut arrows = q.arrows().to_vec();
        arrows.extend_from_slice(p.arrows());
        let candidate = Path { start: q.start(), arrows };
        self.is_nonzero(&candidate).then_some(candidate)
    }

    /// The longest path `x` with `xp` nonzero, for nontrivial `p`; for a
    /// trivial `p` the longest path from `p.start()` that does not start
    /// with `avoid`. The result starts at the end of `p`.
    pub fn max_extension(&self, p: &Path, avoid: Option<ArrowId>) -> Path {
        if p.is_trivial() {
            return self.max_avoiding(p.start(), avoid);
        }
        let mut whole = p.clone();
        loop {
            let Some(b) = self.next[whole.last_arrow().unwrap().index()] else {
                break;
            };
            whole.arrows.push(b);
            let died = (2..=self.max_rel_len.min(whole.len())).any(|l| {
                let tail = &whole.arrows[whole.len() - l..];
                self.pres.relations.iter().any(|r| r.arrows() == tail)
            });
            if died {
                whole.arrows.pop();
                break;
            }
        }
        let ext = whole.arrows[p.len()..].to_vec();
        let start = p.end(self.quiver());
        Path { start, arrows: ext }
    }

    /// Longest nonzero path from `v` whose first arrow is not `avoid`.
    pub fn max_avoiding(&self, v: VertexId, avoid: Option<ArrowId>) -> Path {
        self.paths_from(v)
            .filter(|p| match (p.first_arrow(), avoid) {
                (Some(f), Some(a)) => f != a,
                _ => true,
            })
            .max_by_key(|p| (p.len(), (*p).clone()))
            .cloned()
            .unwrap_or_else(|| Path::trivial(v))
    }

    /// Deletes the first (earliest-traversed) arrow; `None` encodes the zero
    /// element assigned to trivial input.
    pub fn chop_first(&self, p: &Path) -> Option<Path> {
        let first = p.first_arrow()?;
        Some(Path {
            start: self.quiver().target(first),
            arrows: p.arrows()[1..].to_vec(),
        })
    }

    /// The two maximal nonzero paths leaving `v` (branch paths of the
    /// indecomposable projective at `v`), sorted for determinism.
    pub fn branches(&self, v: VertexId) -> Vec<Path> {
        let mut out: Vec<Path> = self
            .quiver()
            .arrows_from(v)
            .into_iter()
            .map(|a| {
                let one = Path::of_arrow(self.quiver(), a);
                let ext = self.max_extension(&one, None);
                let mut arrows = one.arrows;
                arrows.extend_from_slice(ext.arrows());
                Path { start: v, arrows }
            })
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn e23_dimension_and_paths() {
        let alg = fixtures::e23();
        assert_eq!(alg.dimension(), 6);
        let q = alg.quiver();
        let v1 = q.vertex_id("1").unwrap();
        let v2 = q.vertex_id("2").unwrap();
        assert_eq!(alg.paths_from(v1).count(), 4); // e1, a, b, a.g
        assert_eq!(alg.paths_from(v2).count(), 2); // e2, g
    }

    #[test]
    fn e4_dimension() {
        let alg = fixtures::e4();
        assert_eq!(alg.dimension(), 8);
    }

    #[test]
    fn e23_compose() {
        let alg = fixtures::e23();
        let q = alg.quiver();
        let a = Path::of_arrow(q, q.arrow_id("a").unwrap());
        let g = Path::of_arrow(q, q.arrow_id("g").unwrap());
        // g after a: the path 1 -> 2 -> 1.
        let ga = alg.compose(&g, &a).unwrap();
        assert_eq!(ga.len(), 2);
        assert_eq!(ga.display(q).to_string(), "a.g");
        // a after g is a forbidden factor.
        assert!(alg.compose(&a, &g).is_none());
        // Composition with the trivial path at the end of p is the identity.
        let e2 = Path::trivial(q.vertex_id("2").unwrap());
        assert_eq!(alg.compose(&e2, &a).unwrap(), a);
    }

    #[test]
    fn e23_max_extension() {
        let alg = fixtures::e23();
        let q = alg.quiver();
        let a = Path::of_arrow(q, q.arrow_id("a").unwrap());
        let b = Path::of_arrow(q, q.arrow_id("b").unwrap());
        let ext_a = alg.max_extension(&a, None);
        assert_eq!(ext_a.display(q).to_string(), "g");
        let ext_b = alg.max_extension(&b, None);
        assert!(ext_b.is_trivial());
        // Trivial path with an avoided first arrow: the other branch.
        let v1 = q.vertex_id("1").unwrap();
        let avoid_a = alg.max_avoiding(v1, q.arrow_id("a"));
        assert_eq!(avoid_a.display(q).to_string(), "b");
        let avoid_b = alg.max_avoiding(v1, q.arrow_id("b"));
        assert_eq!(avoid_b.display(q).to_string(), "a.g");
    }

    #[test]
    fn e23_chop_first() {
        let alg = fixtures::e23();
        let q = alg.quiver();
        let v1 = q.vertex_id("1").unwrap();
        let ga = Path::new(q, v1, vec![q.arrow_id("a").unwrap(), q.arrow_id("g").unwrap()]).unwrap();
        let chopped = alg.chop_first(&ga).unwrap();
        assert_eq!(chopped.display(q).to_string(), "g");
        assert_eq!(chopped.start(), q.vertex_id("2").unwrap());
        let g = Path::of_arrow(q, q.arrow_id("g").unwrap());
        let chopped = alg.chop_first(&g).unwrap();
        assert!(chopped.is_trivial());
        assert_eq!(chopped.start(), v1);
        assert!(alg.chop_first(&Path::trivial(v1)).is_none());
    }

    #[test]
    fn degree_violation_detected() {
        let text = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 1 -> 2\n";
        let pres = parse_presentation(text).unwrap();
        match pres.validate() {
            Err(ValidateError::DegreeViolation(v, 3, "outgoing")) => assert_eq!(v, "1"),
            other => panic!("expected degree violation, got {other:?}"),
        }
    }

    #[test]
    fn string_condition_violation_detected() {
        // Both b and c compose after a.
        let text = "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 1\n";
        let pres = parse_presentation(text).unwrap();
        match pres.validate() {
            Err(ValidateError::StringConditionViolation(a, _)) => assert_eq!(a, "a"),
            other => panic!("expected string condition violation, got {other:?}"),
        }
    }

    #[test]
    fn inadmissible_loop_detected() {
        let text = "vertices: 1\narrow l: 1 -> 1\n";
        let pres = parse_presentation(text).unwrap();
        assert!(matches!(pres.validate(), Err(ValidateError::NotAdmissible(_))));
        // With l.l forbidden the loop algebra is fine.
        let text = "vertices: 1\narrow l: 1 -> 1\nzero: l.l\n";
        let alg = parse_presentation(text).unwrap().validate().unwrap();
        assert_eq!(alg.dimension(), 2);
    }

    #[test]
    fn degenerate_one_vertex_algebra() {
        let alg = parse_presentation("vertices: 1\n").unwrap().validate().unwrap();
        assert_eq!(alg.dimension(), 1);
    }
}
