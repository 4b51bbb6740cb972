//! Explicit quiver representations of string and pseudo-band modules.

use crate::modules::{DimVector, PseudoBandDescr};
use crate::presentation::{Path, StringAlgebra, VertexId};
use crate::words::FiniteWord;

use super::field::{Matrix, PrimeField};

/// A finite dimensional representation: one vector space per vertex and one
/// matrix (target-dim x source-dim) per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
}

impl QuiverRep {
    pub fn zero(alg: &StringAlgebra) -> Self {
        let dims = vec![0; alg.quiver().vertex_count()];
        let mats = alg
            .quiver()
            .arrows()
            .map(|a| {
                Matrix::zeros(
                    dims[alg.quiver().target(a).index()],
                    dims[alg.quiver().source(a).index()],
                )
            })
            .collect();
        QuiverRep { dims, mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dim_vector(&self) -> DimVector {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| (VertexId(i as u32), d))
            .collect()
    }

    /// The matrix of the action of a path (identity for trivial paths).
    pub fn path_action(&self, _alg: &StringAlgebra, path: &Path, f: PrimeField) -> Matrix {
        let mut acc = Matrix::identity(self.dims[path.start().index()]);
        for &a in path.arrows() {
            acc = self.mats[a.index()].mul(&acc, f);
        }
        acc
    }

    /// Every forbidden path must act as zero.
    pub fn relations_hold(&self, alg: &StringAlgebra, f: PrimeField) -> bool {
        alg.presentation()
            .relations
            .iter()
            .all(|r| self.path_action(alg, r, f).is_zero())
    }
}

/// Node bookkeeping for the basis of a string module representation.
pub(crate) struct StringBasis {
    /// (vertex, index within that vertex component), per graph node.
    pub nodes: Vec<(VertexId, usize)>,
    /// Basis index of the valley end of `p_i` / start flank per pair.
    pub p_end: Vec<usize>,
    /// Basis index of the valley end of `q_i` per pair.
    pub q_end: Vec<usize>,
    pub top: Vec<usize>,
}

/// Representation of a finite string module: 0/1 incidence matrices along
/// the word graph.
pub fn rep_of_string(alg: &StringAlgebra, w: &FiniteWord) -> QuiverRep {
    rep_of_string_with_basis(alg, w).0
}

pub(crate) fn rep_of_string_with_basis(
    alg: &StringAlgebra,
    w: &FiniteWord,
) -> (QuiverRep, StringBasis) {
    let quiver = alg.quiver();
    let mut dims = vec![0usize; quiver.vertex_count()];
    let mut nodes: Vec<(VertexId, usize)> = Vec::new();
    let mut edges: Vec<(crate::presentation::ArrowId, usize, usize)> = Vec::new(); // (arrow, from, to)
    let mut basis = StringBasis { nodes: Vec::new(), p_end: Vec::new(), q_end: Vec::new(), top: Vec::new() };

    let fresh = |v: VertexId, dims: &mut Vec<usize>, nodes: &mut Vec<(VertexId, usize)>| -> usize {
        let idx = dims[v.index()];
        dims[v.index()] += 1;
        nodes.push((v, idx));
        nodes.len() - 1
    };

    let mut prev_q_end: Option<usize> = None;
    for (i, pair) in w.pairs().iter().enumerate() {
        let top = fresh(pair.vertex(), &mut dims, &mut nodes);
        basis.top.push(top);
        // p descends from the top to the valley shared with the previous q.
        let mut cur = top;
        let mut p_end = top;
        for (d, &a) in pair.p.arrows().iter().enumerate() {
            let is_last = d + 1 == pair.p.len();
            let node = if is_last && i > 0 {
                prev_q_end.expect("interior valley")
            } else {
                fresh(quiver.target(a), &mut dims, &mut nodes)
            };
            edges.push((a, cur, node));
            cur = node;
            p_end = node;
        }
        basis.p_end.push(p_end);
        let mut cur = top;
        let mut q_end = top;
        for &a in pair.q.arrows() {
            let node = fresh(quiver.target(a), &mut dims, &mut nodes);
            edges.push((a, cur, node));
            cur = node;
            q_end = node;
        }
        basis.q_end.push(q_end);
        prev_q_end = Some(q_end);
    }

    let mut mats: Vec<Matrix> = quiver
        .arrows()
        .map(|a| Matrix::zeros(dims[quiver.target(a).index()], dims[quiver.source(a).index()]))
        .collect();
    for (a, from, to) in edges {
        let (_, from_local) = nodes[from];
        let (_, to_local) = nodes[to];
        mats[a.index()].set(to_local, from_local, 1);
    }
    basis.nodes = nodes;
    (QuiverRep { dims, mats }, basis)
}

/// Representation of a pseudo-band module: the string `St(v^r)` with the
/// terminal socle vector identified with the companion-matrix combination
/// of the initial ones.
pub fn rep_of_band(alg: &StringAlgebra, b: &PseudoBandDescr, f: PrimeField) -> QuiverRep {
    let mut pairs = Vec::new();
    for _ in 0..b.power {
        pairs.extend(b.word.pairs().iter().cloned());
    }
    let unrolled = FiniteWord::from_pairs(alg, pairs).expect("band powers are words");
    let (string, basis) = rep_of_string_with_basis(alg, &unrolled);

    let period = b.word.pairs().len();
    let terminal = basis.q_end[b.power * period - 1];
    let initials: Vec<usize> = (0..b.power).map(|i| basis.p_end[i * period]).collect();
    let (t_vertex, t_local) = basis.nodes[terminal];

    // New local indices at the glued vertex: drop the terminal coordinate.
    let quiver = alg.quiver();
    let vtx = t_vertex.index();
    let mut dims = string.dims.clone();
    dims[vtx] -= 1;
    let renumber = |local: usize| -> Option<usize> {
        match local.cmp(&t_local) {
            std::cmp::Ordering::Less => Some(local),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(local - 1),
        }
    };
    // Replacement coordinates for the terminal basis vector.
    let replacement: Vec<(usize, u64)> = initials
        .iter()
        .enumerate()
        .map(|(i, &node)| {
            let (v, local) = basis.nodes[node];
            assert_eq!(v, t_vertex, "band socle vectors share a vertex");
            let c = f.from_i64(b.scalars[i]);
            (renumber(local).expect("initial vectors survive"), c)
        })
        .collect();

    let mut mats = Vec::with_capacity(string.mats.len());
    for a in quiver.arrows() {
        let src = quiver.source(a).index();
        let tgt = quiver.target(a).index();
        let old = &string.mats[a.index()];
        let mut m = Matrix::zeros(dims[tgt], dims[src]);
        for r in 0..old.rows {
            for c in 0..old.cols {
                let val = old.get(r, c);
                if val == 0 {
                    continue;
                }
                let new_c = if src == vtx {
                    match renumber(c) {
                        Some(nc) => nc,
                        // The terminal vector is in the socle: no action.
                        None => {
                            assert_eq!(val, 0, "terminal socle vector must be inert");
                            continue;
                        }
                    }
                } else {
                    c
                };
                if tgt == vtx {
                    match renumber(r) {
                        Some(nr) => {
                            m.set(nr, new_c, f.add(m.get(nr, new_c), val));
                        }
                        None => {
                            // Redistribute the terminal row over the
                            // identified combination.
                            for &(nr, scalar) in &replacement {
                                m.set(nr, new_c, f.add(m.get(nr, new_c), f.mul(val, scalar)));
                            }
                        }
                    }
                } else {
                    m.set(r, new_c, f.add(m.get(r, new_c), val));
                }
            }
        }
        mats.push(m);
    }
    let rep = QuiverRep { dims, mats };
    debug_assert!(rep.relations_hold(alg, f));
    rep
}

/// Representation of the simple module at a vertex.
pub fn rep_of_simple(alg: &StringAlgebra, v: VertexId) -> QuiverRep {
    rep_of_string(alg, &FiniteWord::trivial(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::field::DEFAULT_CHARACTERISTIC;
    use crate::words::{parse_word_literal, WordLiteral};

    fn word(alg: &StringAlgebra, lit: &str) -> FiniteWord {
        match parse_word_literal(alg, lit).unwrap() {
            WordLiteral::Finite(w) => w,
            _ => panic!(),
        }
    }

    #[test]
    fn e23_string_rep_dims() {
        let alg = fixtures::e23();
        let f = PrimeField::new(DEFAULT_CHARACTERISTIC);
        let rep = rep_of_string(&alg, &word(&alg, "a^ b"));
        assert_eq!(rep.dims, vec![1, 2]);
        assert!(rep.relations_hold(&alg, f));
        let simple = rep_of_simple(&alg, VertexId(0));
        assert_eq!(simple.total_dim(), 1);
    }

    #[test]
    fn projective_rep_matches_path_count() {
        let f = PrimeField::new(DEFAULT_CHARACTERISTIC);
        for alg in [fixtures::e4(), fixtures::e23(), fixtures::e17(), fixtures::e18(), fixtures::e24()] {
            for v in alg.quiver().vertices() {
                let w = crate::modules::projective_word(&alg, v);
                let rep = rep_of_string(&alg, &w);
                assert_eq!(rep.total_dim(), alg.paths_from(v).count());
                assert!(rep.relations_hold(&alg, f));
            }
        }
    }

    #[test]
    fn e23_band_rep() {
        let alg = fixtures::e23();
        let f = PrimeField::new(DEFAULT_CHARACTERISTIC);
        let v = word(&alg, "a^ b");
        let b = PseudoBandDescr::new(&alg, v.clone(), 1, vec![1]).unwrap();
        let rep = rep_of_band(&alg, &b, f);
        assert_eq!(rep.dims, vec![1, 1]);
        assert!(rep.relations_hold(&alg, f));
        // r = 2 doubles the dimensions.
        let b2 = PseudoBandDescr::new(&alg, v, 2, vec![1, 1]).unwrap();
        let rep2 = rep_of_band(&alg, &b2, f);
        assert_eq!(rep2.dims, vec![2, 2]);
        assert!(rep2.relations_hold(&alg, f));
    }

    #[test]
    fn inverse_word_has_equal_dims() {
        let alg = fixtures::e17();
        for lit in ["a4_2 a1_2^", "a4_6^ a4_2", "a7_5^ a7_11"] {
            let w = word(&alg, lit);
            let a = rep_of_string(&alg, &w).dim_vector();
            let b = rep_of_string(&alg, &w.invert()).dim_vector();
            assert_eq!(a, b);
        }
    }
}
