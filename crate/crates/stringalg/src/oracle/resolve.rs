//! Minimal projective covers, kernels, and resolutions.
//!
//! Long resolutions are driven by a component pool: each kernel splits into
//! connected components (direct summands), identical components are merged,
//! and multiplicities are tracked as exact big integers. This keeps the
//! matrices small even when summand multiplicities grow along an infinite
//! resolution, while staying independent of the word combinatorics.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::modules::projective_word;
use crate::presentation::{Path, StringAlgebra, VertexId};

use super::field::{Matrix, PrimeField};
use super::rep::{rep_of_string, QuiverRep};

/// Projective cover data: the multiplicity of each `Λe_v`, the covering map
/// per vertex (module coordinates x cover coordinates), and the kernel.
pub struct Cover {
    pub mults: BTreeMap<VertexId, usize>,
    pub cover: QuiverRep,
    pub map: Vec<Matrix>,
    pub kernel: QuiverRep,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("the zero module has no projective cover")]
pub struct ZeroModule;

/// Basis data of the cover: per copy, the generating vertex and the paths
/// enumerating the basis of `Λe_v`.
struct CoverBasis {
    copies: Vec<(VertexId, Matrix)>, // (vertex, lift column in K^{dim_v})
}

fn top_lifts(alg: &StringAlgebra, m: &QuiverRep, f: PrimeField) -> CoverBasis {
    let quiver = alg.quiver();
    let mut copies = Vec::new();
    for v in quiver.vertices() {
        let d = m.dims[v.index()];
        if d == 0 {
            continue;
        }
        // Radical component at v: the sum of the incoming arrow images.
        let incoming: Vec<&Matrix> = quiver
            .arrows_into(v)
            .into_iter()
            .map(|a| &m.mats[a.index()])
            .collect();
        let total_cols: usize = incoming.iter().map(|mm| mm.cols).sum();
        let stacked = if total_cols == 0 {
            Matrix::zeros(d, 0)
        } else {
            Matrix::hstack(&incoming, d)
        };
        // Greedily extend a basis of the image by standard vectors, in
        // index order; the chosen unit vectors are the top lifts.
        let mut span = stacked.clone();
        let mut rank = span.rank(f);
        for j in 0..d {
            let mut unit = Matrix::zeros(d, 1);
            unit.set(j, 0, 1);
            let bigger = Matrix::hstack(&[&span, &unit], d);
            let r = bigger.rank(f);
            if r > rank {
                rank = r;
                span = bigger;
                copies.push((v, unit));
            }
        }
    }
    CoverBasis { copies }
}

/// Minimal projective cover of a nonzero representation, its covering map,
/// and the kernel as a representation.
pub fn projective_cover(
    alg: &StringAlgebra,
    m: &QuiverRep,
    f: PrimeField,
) -> Result<Cover, ZeroModule> {
    if m.total_dim() == 0 {
        return Err(ZeroModule);
    }
    let quiver = alg.quiver();
    let basis = top_lifts(alg, m, f);

    // Cover basis: per copy, the nonzero paths from the generating vertex.
    let mut dims = vec![0usize; quiver.vertex_count()];
    let mut coords: Vec<Vec<(usize, Path)>> = Vec::new(); // per copy: (local index at end(u), path u)
    for (v, _) in &basis.copies {
        let mut entry = Vec::new();
        for u in alg.paths_from(*v) {
            let w = u.end(quiver).index();
            entry.push((dims[w], u.clone()));
            dims[w] += 1;
        }
        coords.push(entry);
    }

    let mut mats: Vec<Matrix> = quiver
        .arrows()
        .map(|a| Matrix::zeros(dims[quiver.target(a).index()], dims[quiver.source(a).index()]))
        .collect();
    for (copy, entry) in coords.iter().enumerate() {
        let (v, _) = &basis.copies[copy];
        for (local, u) in entry {
            for a in quiver.arrows_from(u.end(quiver)) {
                let mut arrows = u.arrows().to_vec();
                arrows.push(a);
                let extended = Path::new(quiver, *v, arrows).unwrap();
                if !alg.is_nonzero(&extended) {
                    continue;
                }
                let (tgt_local, _) = entry
                    .iter()
                    .find(|(_, cand)| *cand == extended)
                    .expect("extended path enumerated");
                mats[a.index()].set(*tgt_local, *local, 1);
            }
        }
    }
    let cover = QuiverRep { dims, mats };

    // Covering map: path u in copy (v, lift) goes to (action of u)(lift).
    let mut map: Vec<Matrix> = (0..quiver.vertex_count())
        .map(|w| Matrix::zeros(m.dims[w], cover.dims[w]))
        .collect();
    for (copy, entry) in coords.iter().enumerate() {
        let (_, lift) = &basis.copies[copy];
        for (local, u) in entry {
            let image = m.path_action(alg, u, f).mul(lift, f);
            let w = u.end(quiver).index();
            for r in 0..m.dims[w] {
                map[w].set(r, *local, image.get(r, 0));
            }
        }
    }

    // Kernel: per-vertex null spaces, with the arrow action restricted.
    let kernels: Vec<Matrix> = (0..quiver.vertex_count())
        .map(|w| map[w].kernel_basis(f))
        .collect();
    let kdims: Vec<usize> = kernels.iter().map(|k| k.cols).collect();
    let kmats: Vec<Matrix> = quiver
        .arrows()
        .map(|a| {
            let s = quiver.source(a).index();
            let t = quiver.target(a).index();
            if kdims[s] == 0 || kdims[t] == 0 {
                return Matrix::zeros(kdims[t], kdims[s]);
            }
            let image = cover.mats[a.index()].mul(&kernels[s], f);
            kernels[t].solve(&image, f)
        })
        .collect();
    let kernel = QuiverRep { dims: kdims, mats: kmats };

    let mut mults: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (v, _) in &basis.copies {
        *mults.entry(*v).or_insert(0) += 1;
    }
    Ok(Cover { mults, cover, map, kernel })
}

/// One resolution step: projective multiplicities and syzygy dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub cover_mults: BTreeMap<VertexId, BigUint>,
    pub syzygy_dims: BTreeMap<VertexId, BigUint>,
}

impl TraceStep {
    pub fn syzygy_total(&self) -> BigUint {
        self.syzygy_dims.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionTrace {
    pub steps: Vec<TraceStep>,
    pub terminated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OraclePdim {
    Exact(u32),
    Unknown(u32),
}

/// Splits a representation into the direct summands given by the connected
/// components of its coordinate graph, in a deterministic order.
fn split_components(alg: &StringAlgebra, m: &QuiverRep) -> Vec<QuiverRep> {
    let quiver = alg.quiver();
    let offsets: Vec<usize> = {
        let mut off = Vec::with_capacity(m.dims.len() + 1);
        let mut acc = 0;
        for &d in &m.dims {
            off.push(acc);
            acc += d;
        }
        off.push(acc);
        off
    };
    let total = m.total_dim();
    let mut dsu: Vec<usize> = (0..total).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while dsu[r] != r {
            r = dsu[r];
        }
        let mut c = x;
        while dsu[c] != r {
            let next = dsu[c];
            dsu[c] = r;
            c = next;
        }
        r
    }
    for a in quiver.arrows() {
        let s = quiver.source(a).index();
        let t = quiver.target(a).index();
        let mat = &m.mats[a.index()];
        for r in 0..mat.rows {
            for c in 0..mat.cols {
                if mat.get(r, c) != 0 {
                    let x = find(&mut dsu, offsets[s] + c);
                    let y = find(&mut dsu, offsets[t] + r);
                    dsu[x] = y;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..total {
        let root = find(&mut dsu, i);
        groups.entry(root).or_default().push(i);
    }
    let mut out = Vec::new();
    for coords in groups.values() {
        let mut dims = vec![0usize; m.dims.len()];
        let mut local: HashMap<usize, usize> = HashMap::new();
        for &g in coords {
            let v = offsets.partition_point(|&o| o <= g) - 1;
            local.insert(g, dims[v]);
            dims[v] += 1;
        }
        let mats: Vec<Matrix> = quiver
            .arrows()
            .map(|a| {
                let s = quiver.source(a).index();
                let t = quiver.target(a).index();
                let mut sub = Matrix::zeros(dims[t], dims[s]);
                let mat = &m.mats[a.index()];
                for r in 0..mat.rows {
                    for c in 0..mat.cols {
                        let val = mat.get(r, c);
                        if val == 0 {
                            continue;
                        }
                        if let (Some(&lc), Some(&lr)) =
                            (local.get(&(offsets[s] + c)), local.get(&(offsets[t] + r)))
                        {
                            sub.set(lr, lc, val);
                        }
                    }
                }
                sub
            })
            .collect();
        out.push(QuiverRep { dims, mats });
    }
    out
}

#[derive(PartialEq, Eq, Hash, Clone)]
struct RepKey(Vec<usize>, Vec<Matrix>);

fn rep_key(m: &QuiverRep) -> RepKey {
    RepKey(m.dims.clone(), m.mats.clone())
}

/// Iterates minimal covers and kernels up to `bound` steps, reporting the
/// exact projective dimension if the resolution terminates. Never decides
/// infinite dimension; `Unknown(bound)` only corroborates it.
pub fn pdim_oracle(
    alg: &StringAlgebra,
    m: &QuiverRep,
    f: PrimeField,
    bound: usize,
) -> (OraclePdim, ResolutionTrace) {
    assert!(bound >= 1);
    assert!(m.total_dim() > 0, "resolve a nonzero module");

    struct PoolEntry {
        rep: QuiverRep,
        cover_mults: BTreeMap<VertexId, usize>,
        children: Vec<(usize, usize)>, // (pool id, multiplicity)
    }
    let mut pool: Vec<PoolEntry> = Vec::new();
    let mut ids: HashMap<RepKey, usize> = HashMap::new();

    let intern = |rep: QuiverRep, pool: &mut Vec<PoolEntry>, ids: &mut HashMap<RepKey, usize>| -> usize {
        let key = rep_key(&rep);
        if let Some(&id) = ids.get(&key) {
            return id;
        }
        let id = pool.len();
        ids.insert(key, id);
        pool.push(PoolEntry { rep, cover_mults: BTreeMap::new(), children: Vec::new() });
        id
    };

    let mut current: BTreeMap<usize, BigUint> = BTreeMap::new();
    for comp in split_components(alg, m) {
        let id = intern(comp, &mut pool, &mut ids);
        *current.entry(id).or_insert_with(BigUint::default) += 1u32;
    }

    let mut steps = Vec::new();
    for step in 1..=bound {
        // Expand any un-resolved pool entries in play.
        let active: Vec<usize> = current.keys().copied().collect();
        for id in active {
            if !pool[id].children.is_empty() || !pool[id].cover_mults.is_empty() {
                continue;
            }
            let cover = projective_cover(alg, &pool[id].rep, f).expect("components are nonzero");
            let mut children: BTreeMap<usize, usize> = BTreeMap::new();
            for comp in split_components(alg, &cover.kernel) {
                let child = intern(comp, &mut pool, &mut ids);
                *children.entry(child).or_insert(0) += 1;
            }
            pool[id].cover_mults = cover.mults;
            pool[id].children = children.into_iter().collect();
        }

        let mut cover_mults: BTreeMap<VertexId, BigUint> = BTreeMap::new();
        let mut next: BTreeMap<usize, BigUint> = BTreeMap::new();
        let mut syz_dims: BTreeMap<VertexId, BigUint> = BTreeMap::new();
        for (&id, count) in &current {
            for (&v, &mult) in &pool[id].cover_mults {
                *cover_mults.entry(v).or_default() += count * mult;
            }
            for &(child, mult) in &pool[id].children {
                *next.entry(child).or_default() += count * mult;
                for (i, &d) in pool[child].rep.dims.iter().enumerate() {
                    if d > 0 {
                        *syz_dims.entry(VertexId(i as u32)).or_default() +=
                            count * mult * d;
                    }
                }
            }
        }
        steps.push(TraceStep { cover_mults, syzygy_dims: syz_dims });
        current = next;
        if current.is_empty() {
            return (
                OraclePdim::Exact((step - 1) as u32),
                ResolutionTrace { steps, terminated: true },
            );
        }
    }
    (
        OraclePdim::Unknown(bound as u32),
        ResolutionTrace { steps, terminated: false },
    )
}

/// Kernel dimensions of one minimal cover: the oracle's first syzygy.
pub fn oracle_syzygy_dims(
    alg: &StringAlgebra,
    m: &QuiverRep,
    f: PrimeField,
) -> crate::modules::DimVector {
    if m.total_dim() == 0 {
        return crate::modules::DimVector::default();
    }
    projective_cover(alg, m, f).expect("nonzero").kernel.dim_vector()
}

/// Representation of the indecomposable projective at a vertex.
pub fn rep_of_projective(alg: &StringAlgebra, v: VertexId) -> QuiverRep {
    rep_of_string(alg, &projective_word(alg, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::modules::PseudoBandDescr;
    use crate::oracle::field::DEFAULT_CHARACTERISTIC;
    use crate::oracle::rep::rep_of_simple;
    use crate::words::{parse_word_literal, WordLiteral};

    fn f() -> PrimeField {
        PrimeField::new(DEFAULT_CHARACTERISTIC)
    }

    fn word(alg: &crate::StringAlgebra, lit: &str) -> crate::FiniteWord {
        match parse_word_literal(alg, lit).unwrap() {
            WordLiteral::Finite(w) => w,
            _ => panic!(),
        }
    }

    #[test]
    fn cover_of_simple_is_projective() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let simple = rep_of_simple(&alg, v1);
        let cover = projective_cover(&alg, &simple, f()).unwrap();
        assert_eq!(cover.mults.get(&v1), Some(&1));
        assert_eq!(cover.cover.total_dim(), 4);
        assert_eq!(cover.kernel.total_dim(), 3);
    }

    #[test]
    fn cover_of_projective_has_zero_kernel() {
        let alg = fixtures::e23();
        for v in alg.quiver().vertices() {
            let p = rep_of_projective(&alg, v);
            let cover = projective_cover(&alg, &p, f()).unwrap();
            assert_eq!(cover.kernel.total_dim(), 0, "Λe_{}", alg.quiver().label(v));
            let (pd, trace) = pdim_oracle(&alg, &p, f(), 1);
            assert_eq!(pd, OraclePdim::Exact(0));
            assert!(trace.terminated);
        }
    }

    #[test]
    fn e23_cover_of_cyclic_string() {
        let alg = fixtures::e23();
        let rep = rep_of_string(&alg, &word(&alg, "a^ b"));
        let cover = projective_cover(&alg, &rep, f()).unwrap();
        assert_eq!(cover.cover.total_dim(), 4);
        assert_eq!(cover.kernel.total_dim(), 1);
    }

    #[test]
    fn e23_band_has_pdim_one() {
        let alg = fixtures::e23();
        let v = word(&alg, "a^ b");
        let b = PseudoBandDescr::new(&alg, v, 1, vec![1]).unwrap();
        let rep = crate::oracle::rep_of_band(&alg, &b, f());
        let (pd, trace) = pdim_oracle(&alg, &rep, f(), 10);
        assert_eq!(pd, OraclePdim::Exact(1));
        assert_eq!(trace.steps.len(), 2);
    }

    #[test]
    fn e23_simple_resolution_never_dies() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let simple = rep_of_simple(&alg, v1);
        let (pd, trace) = pdim_oracle(&alg, &simple, f(), 25);
        assert_eq!(pd, OraclePdim::Unknown(25));
        assert!(!trace.terminated);
        for step in &trace.steps {
            assert!(step.syzygy_total() > BigUint::default());
        }
    }

    #[test]
    fn component_split_preserves_dims() {
        let alg = fixtures::e23();
        let rep = rep_of_string(&alg, &word(&alg, "a^ b a^ b"));
        let cover = projective_cover(&alg, &rep, f()).unwrap();
        let comps = split_components(&alg, &cover.kernel);
        let total: usize = comps.iter().map(|c| c.total_dim()).sum();
        assert_eq!(total, cover.kernel.total_dim());
        assert_eq!(comps.len(), 2); // S1 ⊕ St(g)
    }
}
