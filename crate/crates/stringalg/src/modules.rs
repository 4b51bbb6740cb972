//! String and pseudo-band module descriptors: composition-factor counts,
//! tops and socles, projectivity, and DOT rendering of the layered graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::presentation::{Path, StringAlgebra, VertexId};
use crate::words::{is_primitive, EventuallyPeriodicWord, FiniteWord, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("the module is infinite dimensional")]
    InfiniteModule,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("the leading companion-matrix scalar must be nonzero")]
    SingularCompanion,
}

/// Per-vertex composition-factor counts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DimVector {
    counts: BTreeMap<VertexId, usize>,
}

impl DimVector {
    pub fn add(&mut self, v: VertexId, n: usize) {
        if n > 0 {
            *self.counts.entry(v).or_insert(0) += n;
        }
    }

    pub fn get(&self, v: VertexId) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.counts.iter().map(|(&v, &n)| (v, n))
    }

    pub fn scaled(&self, k: usize) -> DimVector {
        DimVector { counts: self.counts.iter().map(|(&v, &n)| (v, n * k)).collect() }
    }

    pub fn merged(&self, other: &DimVector) -> DimVector {
        let mut out = self.clone();
        for (v, n) in other.iter() {
            out.add(v, n);
        }
        out
    }

    /// Renders as `{label: count, ...}` with labels in id order.
    pub fn display(&self, alg: &StringAlgebra) -> String {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(&v, &n)| format!("{}: {}", alg.quiver().label(v), n))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<(VertexId, usize)> for DimVector {
    fn from_iter<T: IntoIterator<Item = (VertexId, usize)>>(iter: T) -> Self {
        let mut out = DimVector::default();
        for (v, n) in iter {
            out.add(v, n);
        }
        out
    }
}

/// A string module described by its word.
#[derive(Debug, Clone)]
pub struct StringModuleDescr {
    pub word: EventuallyPeriodicWord,
}

impl StringModuleDescr {
    pub fn finite(word: FiniteWord) -> Self {
        StringModuleDescr { word: EventuallyPeriodicWord::finite(word) }
    }
}

/// A pseudo-band module `Bd(v^r, phi)`: a primitive word, a power, and the
/// scalars of the Frobenius companion matrix of `phi` (`c_1 != 0`).
#[derive(Debug, Clone)]
pub struct PseudoBandDescr {
    pub word: FiniteWord,
    pub power: usize,
    pub scalars: Vec<i64>,
}

impl PseudoBandDescr {
    pub fn new(
        alg: &StringAlgebra,
        word: FiniteWord,
        power: usize,
        scalars: Vec<i64>,
    ) -> Result<Self, ModuleError> {
        if !is_primitive(alg, &word)? {
            return Err(ModuleError::Word(WordError::MalformedBandWord));
        }
        assert!(power >= 1, "band power must be positive");
        assert_eq!(scalars.len(), power, "one scalar per companion row");
        if scalars[0] == 0 {
            return Err(ModuleError::SingularCompanion);
        }
        Ok(PseudoBandDescr { word, power, scalars })
    }
}

/// Nodes of the graph of a finite word, as (vertex, depth) in stable order.
/// Shared valleys are counted once; `depth` is the radical layer.
pub(crate) fn word_nodes(alg: &StringAlgebra, w: &FiniteWord) -> Vec<(VertexId, usize)> {
    let quiver = alg.quiver();
    let mut nodes = Vec::new();
    for (i, pair) in w.pairs().iter().enumerate() {
        nodes.push((pair.vertex(), 0));
        // p descends from the top; its valley end is shared with the
        // previous pair's q, so skip it except on the leftmost pair.
        let p_nodes = pair.p.len();
        let skip_last_p = i > 0;
        for (d, &a) in pair.p.arrows().iter().enumerate() {
            if d + 1 == p_nodes && skip_last_p {
                continue;
            }
            nodes.push((quiver.target(a), d + 1));
        }
        for (d, &a) in pair.q.arrows().iter().enumerate() {
            nodes.push((quiver.target(a), d + 1));
        }
    }
    nodes
}

/// Composition-factor counts of `St(w)` for finite `w`.
pub fn dim_vector(alg: &StringAlgebra, m: &StringModuleDescr) -> Result<DimVector, ModuleError> {
    if !m.word.is_finite() {
        return Err(ModuleError::InfiniteModule);
    }
    Ok(word_nodes(alg, &m.word.core).into_iter().map(|(v, _)| (v, 1)).collect())
}

/// Top of `St(w)`: one simple per support pair.
pub fn top(alg: &StringAlgebra, m: &StringModuleDescr) -> Result<DimVector, ModuleError> {
    if !m.word.is_finite() {
        return Err(ModuleError::InfiniteModule);
    }
    let _ = alg;
    Ok(m.word.core.pairs().iter().map(|pr| (pr.vertex(), 1)).collect())
}

/// Socle of `St(w)`: the sink nodes of the word graph.
pub fn socle(alg: &StringAlgebra, m: &StringModuleDescr) -> Result<DimVector, ModuleError> {
    if !m.word.is_finite() {
        return Err(ModuleError::InfiniteModule);
    }
    let w = &m.word.core;
    if let Some(v) = w.trivial_vertex() {
        return Ok(std::iter::once((v, 1)).collect());
    }
    let quiver = alg.quiver();
    let mut out = DimVector::default();
    let first = &w.pairs()[0].p;
    if !first.is_trivial() {
        out.add(first.end(quiver), 1);
    }
    for pair in w.pairs() {
        if !pair.q.is_trivial() {
            out.add(pair.q.end(quiver), 1);
        }
    }
    Ok(out)
}

/// Top of a pseudo-band: `r` copies of the per-period tops.
pub fn top_band(b: &PseudoBandDescr) -> DimVector {
    b.word
        .pairs()
        .iter()
        .map(|pr| (pr.vertex(), 1))
        .collect::<DimVector>()
        .scaled(b.power)
}

/// Socle of a pseudo-band: `r` copies of the per-period valley vertices
/// (the identified block has rank `r`).
pub fn socle_band(alg: &StringAlgebra, b: &PseudoBandDescr) -> DimVector {
    let quiver = alg.quiver();
    b.word
        .pairs()
        .iter()
        .map(|pr| (pr.q.end(quiver), 1))
        .collect::<DimVector>()
        .scaled(b.power)
}

/// Composition-factor counts of `Bd(v^r, phi)`; independent of the scalars.
pub fn dim_vector_band(alg: &StringAlgebra, b: &PseudoBandDescr) -> DimVector {
    // Per period: one top per pair plus the nodes below; the wrap valley is
    // counted once per repetition, and the band identification removes the
    // extra copy that the string `St(v^r)` would have.
    let quiver = alg.quiver();
    let mut per_period = DimVector::default();
    for pair in b.word.pairs() {
        per_period.add(pair.vertex(), 1);
        for &a in pair.q.arrows() {
            per_period.add(quiver.target(a), 1);
        }
        // p contributes its interior nodes only; its valley end is shared
        // with the previous q (cyclically).
        for (d, &a) in pair.p.arrows().iter().enumerate() {
            if d + 1 < pair.p.len() {
                per_period.add(quiver.target(a), 1);
            }
        }
    }
    per_period.scaled(b.power)
}

/// True iff the word is that of an indecomposable projective.
pub fn is_projective(alg: &StringAlgebra, m: &StringModuleDescr) -> bool {
    if !m.word.is_finite() {
        return false;
    }
    let key = m.word.core.canonical_key();
    alg.quiver()
        .vertices()
        .any(|v| projective_word(alg, v).canonical_key() == key)
}

/// The word `(pp)^{-1}(qq)` of the indecomposable projective at `e`: the two
/// maximal branches leaving `e`.
pub fn projective_word(alg: &StringAlgebra, e: VertexId) -> FiniteWord {
    let branches = alg.branches(e);
    let (p, q) = match branches.as_slice() {
        [] => (Path::trivial(e), Path::trivial(e)),
        [one] => (one.clone(), Path::trivial(e)),
        [one, two] => (one.clone(), two.clone()),
        _ => unreachable!("validated string algebras have at most two branches"),
    };
    FiniteWord::from_pairs(alg, vec![crate::words::Pair::new(p, q)])
        .expect("projective branches form a word")
        .canonical()
}

fn dot_node(out: &mut String, id: &str, label: &str, depth: usize, order: usize) {
    let _ = writeln!(
        out,
        "  {id} [label=\"{label}\", depth={depth}, order={order}];"
    );
}

/// Deterministic DOT rendering of the layered graph of a word, truncating
/// periodic sides to `window` periods with ellipsis nodes.
pub fn render_dot(alg: &StringAlgebra, m: &StringModuleDescr, window: usize) -> String {
    let quiver = alg.quiver();
    let (word, left_cut, right_cut) = if m.word.is_finite() {
        (m.word.core.clone(), false, false)
    } else {
        let k = {
            let per = m
                .word
                .left
                .as_ref()
                .map(|b| b.len())
                .max(m.word.right.as_ref().map(|b| b.len()))
                .unwrap_or(1);
            (window.max(1)) * per + m.word.core.len()
        };
        (m.word.window(0, k), m.word.left.is_some(), m.word.right.is_some())
    };

    let mut out = String::from("digraph string_module {\n  rankdir=TB;\n  node [shape=plaintext];\n");
    let mut order = 0usize;
    let mut last_valley: Option<String> = None;
    let mut max_depth_by_rank: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    if left_cut {
        dot_node(&mut out, "ell_left", "…", 0, order);
        order += 1;
    }
    for (i, pair) in word.pairs().iter().enumerate() {
        let top_id = format!("t{i}");
        dot_node(&mut out, &top_id, quiver.label(pair.vertex()), 0, order);
        max_depth_by_rank.entry(0).or_default().push(top_id.clone());
        order += 1;
        // p edges go up-left: draw them from the top downwards to the
        // shared valley of the previous pair.
        let mut prev = top_id.clone();
        let p_len = pair.p.len();
        for (d, &a) in pair.p.arrows().iter().enumerate() {
            let target_is_shared = d + 1 == p_len && i > 0;
            let node_id = if target_is_shared {
                last_valley.clone().expect("interior valley exists")
            } else {
                let id = format!("p{i}_{d}");
                dot_node(&mut out, &id, quiver.label(quiver.target(a)), d + 1, order);
                max_depth_by_rank.entry(d + 1).or_default().push(id.clone());
                order += 1;
                id
            };
            let _ = writeln!(out, "  {prev} -> {node_id} [label=\"{}\"];", quiver.arrow_name(a));
            prev = node_id;
        }
        let mut prev = top_id.clone();
        for (d, &a) in pair.q.arrows().iter().enumerate() {
            let id = format!("q{i}_{d}");
            dot_node(&mut out, &id, quiver.label(quiver.target(a)), d + 1, order);
            max_depth_by_rank.entry(d + 1).or_default().push(id.clone());
            order += 1;
            let _ = writeln!(out, "  {prev} -> {id} [label=\"{}\"];", quiver.arrow_name(a));
            prev = id;
        }
        last_valley = if pair.q.is_trivial() { Some(top_id) } else { Some(prev) };
    }
    if right_cut {
        dot_node(&mut out, "ell_right", "…", 0, order);
    }
    for (depth, ids) in max_depth_by_rank {
        let _ = writeln!(out, "  {{ rank=same; /* depth {depth} */ {}; }}", ids.join("; "));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a pseudo-band: the unrolled word plus a dashed
/// constraint edge identifying the terminal valley with the initial ones.
pub fn render_dot_band(alg: &StringAlgebra, b: &PseudoBandDescr) -> String {
    let mut pairs = Vec::new();
    for _ in 0..b.power {
        pairs.extend(b.word.pairs().iter().cloned());
    }
    let unrolled = FiniteWord::from_pairs(alg, pairs).expect("band powers are words");
    let descr = StringModuleDescr::finite(unrolled);
    let mut dot = render_dot(alg, &descr, 1);
    let n = b.word.len() * b.power;
    let last_q = &b.word.pairs().last().unwrap().q;
    let terminal = if last_q.is_trivial() {
        format!("t{}", n - 1)
    } else {
        format!("q{}_{}", n - 1, last_q.len() - 1)
    };
    let first_p = &b.word.pairs()[0].p;
    let initial = format!("p0_{}", first_p.len() - 1);
    let constraint = format!(
        "  {terminal} -> {initial} [style=dashed, constraint=false, label=\"≡\"];\n}}\n"
    );
    dot.truncate(dot.len() - 2);
    dot.push_str(&constraint);
    dot
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::{parse_word_literal, WordLiteral};

    fn finite(alg: &StringAlgebra, lit: &str) -> StringModuleDescr {
        match parse_word_literal(alg, lit).unwrap() {
            WordLiteral::Finite(w) => StringModuleDescr::finite(w),
            WordLiteral::Periodic(w) => StringModuleDescr { word: w },
        }
    }

    #[test]
    fn e23_dim_vectors() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let v2 = alg.quiver().vertex_id("2").unwrap();

        let m = finite(&alg, "a^ b");
        let d = dim_vector(&alg, &m).unwrap();
        assert_eq!(d.get(v1), 1);
        assert_eq!(d.get(v2), 2);
        assert_eq!(d.total(), 3);

        let simple = finite(&alg, "e1");
        let d = dim_vector(&alg, &simple).unwrap();
        assert_eq!((d.get(v1), d.total()), (1, 1));

        let proj = StringModuleDescr::finite(projective_word(&alg, v1));
        let d = dim_vector(&alg, &proj).unwrap();
        assert_eq!((d.get(v1), d.get(v2), d.total()), (2, 2, 4));
    }

    #[test]
    fn dim_vector_is_inversion_invariant() {
        let alg = fixtures::e17();
        for lit in ["a4_2 a1_2^", "a4_6^ a4_2", "a5_8^ a5_3"] {
            let m = finite(&alg, lit);
            let w = m.word.core.clone();
            let inv = StringModuleDescr::finite(w.invert());
            assert_eq!(dim_vector(&alg, &m).unwrap(), dim_vector(&alg, &inv).unwrap());
        }
    }

    #[test]
    fn projective_dim_total_counts_paths() {
        for alg in [fixtures::e4(), fixtures::e23(), fixtures::e17(), fixtures::e18(), fixtures::e24()] {
            for v in alg.quiver().vertices() {
                let m = StringModuleDescr::finite(projective_word(&alg, v));
                let total = dim_vector(&alg, &m).unwrap().total();
                assert_eq!(total, alg.paths_from(v).count());
            }
        }
    }

    #[test]
    fn e23_top_of_truncated_phantom() {
        let alg = fixtures::e23();
        let m = finite(&alg, "b a^ b");
        let t = top(&alg, &m).unwrap();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        assert_eq!(t.get(v1), 2);
        assert_eq!(t.total(), 2);
        // The top of a simple is itself.
        let s = finite(&alg, "e2");
        assert_eq!(top(&alg, &s).unwrap(), dim_vector(&alg, &s).unwrap());
    }

    #[test]
    fn e23_projectivity() {
        let alg = fixtures::e23();
        assert!(is_projective(&alg, &finite(&alg, "g"))); // ≅ Λe2
        assert!(!is_projective(&alg, &finite(&alg, "a^ b")));
        assert!(is_projective(&alg, &finite(&alg, "g^ a^ b"))); // Λe1
    }

    #[test]
    fn band_dims_scale_linearly() {
        let alg = fixtures::e23();
        let WordLiteral::Finite(v) = parse_word_literal(&alg, "a^ b").unwrap() else {
            panic!()
        };
        let b1 = PseudoBandDescr::new(&alg, v.clone(), 1, vec![1]).unwrap();
        let b3 = PseudoBandDescr::new(&alg, v.clone(), 3, vec![1, 0, 5]).unwrap();
        let d1 = dim_vector_band(&alg, &b1);
        let d3 = dim_vector_band(&alg, &b3);
        assert_eq!(d3, d1.scaled(3));
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let v2 = alg.quiver().vertex_id("2").unwrap();
        assert_eq!((d1.get(v1), d1.get(v2)), (1, 1));
        assert!(PseudoBandDescr::new(&alg, v, 1, vec![0]).is_err());
    }

    #[test]
    fn dot_is_deterministic() {
        let alg = fixtures::e23();
        let m = finite(&alg, "b a^ b *[a^ b]");
        let one = render_dot(&alg, &m, 2);
        let two = render_dot(&alg, &m, 2);
        assert_eq!(one, two);
        assert!(one.contains("ell_right"));
        let simple = finite(&alg, "e1");
        let dot = render_dot(&alg, &simple, 1);
        assert_eq!(dot.matches("label=\"1\"").count(), 1);
    }
}
