//! Characteristic words of the simple modules, minimal approximations by
//! modules of finite projective dimension, and the contravariant-finiteness
//! report.
//!
//! The construction grows a centered word outward from a vertex. On each
//! side it first extends by the longest inverse syllable whose valley
//! module has finite projective dimension, then by the shortest direct
//! syllable that keeps the segment completable; a side terminates when the
//! flank check passes and no valley extension exists, and it closes
//! periodically once a syllable-pair state repeats.

use std::collections::HashMap;

use thiserror::Error;

use crate::presentation::{ArrowId, Path, StringAlgebra, VertexId};
use crate::syzygy::Homology;
use crate::words::{CenteredWord, EventuallyPeriodicWord, FiniteWord, Pair, PeriodBlock};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("construction invariant violated: {0}")]
    InvariantViolation(String),
}

/// How one side of a characteristic word closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideStatus {
    Terminated,
    Periodic {
        /// Pair index (distance from the center) where the period starts.
        onset: usize,
        period_pairs: usize,
    },
}

#[derive(Debug, Clone)]
pub struct CharacteristicWord {
    pub centered: CenteredWord,
    pub left: SideStatus,
    pub right: SideStatus,
}

impl CharacteristicWord {
    pub fn is_finite(&self) -> bool {
        self.centered.word.is_finite()
    }

    pub fn center_vertex(&self) -> VertexId {
        self.centered.center_vertex()
    }

    fn inverted(self) -> CharacteristicWord {
        let center = self.centered.word.core.len() - 1 - self.centered.center;
        CharacteristicWord {
            centered: CenteredWord { word: self.centered.word.invert(), center },
            left: self.right,
            right: self.left,
        }
    }

    /// Characteristic words are unique up to inversion; fix the orientation
    /// deterministically (an infinite side goes right, ties by letters).
    fn normalize_orientation(self) -> CharacteristicWord {
        let left_inf = matches!(self.left, SideStatus::Periodic { .. });
        let right_inf = matches!(self.right, SideStatus::Periodic { .. });
        match (left_inf, right_inf) {
            (true, false) => self.inverted(),
            (false, true) => self,
            _ => {
                let key = |cw: &CharacteristicWord| {
                    (cw.centered.word.canonical_key(), cw.centered.center)
                };
                let flipped = self.clone().inverted();
                let this_key = key(&self);
                let that_key = key(&flipped);
                // canonical_key is inversion invariant; break the tie on
                // the raw serialization of the window around the center.
                if this_key != that_key {
                    if that_key < this_key {
                        return flipped;
                    }
                    return self;
                }
                let width = self.centered.word.core.len() + 4;
                let a = self.centered.window(width);
                let b = flipped.centered.window(width);
                if b < a {
                    flipped
                } else {
                    self
                }
            }
        }
    }
}

/// Outcome of approximating a simple module.
#[derive(Debug, Clone)]
pub enum ApproxResult {
    /// Finite characteristic word: the module together with the canonical
    /// map sending the center top element to `e + Je`.
    Approximated { word: CenteredWord },
    /// Infinite characteristic word: no approximation exists.
    Phantom(CharacteristicWord),
}

impl ApproxResult {
    pub fn is_approximated(&self) -> bool {
        matches!(self, ApproxResult::Approximated { .. })
    }
}

#[derive(Debug, Clone)]
pub struct CfReport {
    pub per_simple: Vec<(VertexId, ApproxResult)>,
    pub contravariantly_finite: bool,
}

/// Checks used by the construction; all reduce to projective dimensions of
/// cyclic words and share the memo in [`Homology`].
pub struct CharwordCtx<'a, 'h> {
    h: &'h Homology<'a>,
    /// Obs-11 consistency: the inward choice keyed by the last arrow of the
    /// state syllable.
    inward_by_arrow: HashMap<ArrowId, Option<Path>>,
    /// The outward choice keyed by the first arrow of the inward syllable.
    outward_by_arrow: HashMap<ArrowId, Option<Path>>,
}

impl<'a, 'h> CharwordCtx<'a, 'h> {
    pub fn new(h: &'h Homology<'a>) -> Self {
        CharwordCtx { h, inward_by_arrow: HashMap::new(), outward_by_arrow: HashMap::new() }
    }

    fn alg(&self) -> &'a StringAlgebra {
        self.h.algebra()
    }

    /// pdim of `St(u^{(0)})`; trivial `u` contributes nothing.
    fn flank_fin(&self, u: &Path) -> bool {
        match self.alg().chop_first(u) {
            None => true,
            Some(chopped) => {
                let w = FiniteWord::from_pairs(
                    self.alg(),
                    vec![Pair::new(Path::trivial(chopped.start()), chopped)],
                )
                .expect("a path is a word");
                self.h.pdim_cyclic(&w).is_finite()
            }
        }
    }

    /// Flank check for a side that terminates right after syllable `s`.
    fn stop_ok(&self, s: &Path) -> bool {
        self.flank_fin(&self.alg().max_extension(s, None))
    }

    /// Flank check for terminating with a trivial outward syllable at `v`
    /// whose companion starts with `avoid`.
    fn stop_trivial_ok(&self, v: VertexId, avoid: Option<ArrowId>) -> bool {
        self.flank_fin(&self.alg().max_avoiding(v, avoid))
    }

    /// pdim of the valley module between adjacent syllables `x` and `y`
    /// (both nontrivial, meeting end-to-end).
    fn valley_fin(&self, x: &Path, y: &Path) -> bool {
        self.h.pdim_cyclic(&self.h.valley_summand(x, y)).is_finite()
    }

    /// Nontrivial paths ending where `s` ends, with a different last arrow:
    /// the backward chain of the other in-arrow, shortest first.
    fn valley_candidates(&self, s: &Path) -> Vec<Path> {
        let alg = self.alg();
        let quiver = alg.quiver();
        let u = s.end(quiver);
        let last = s.last_arrow();
        let mut out = Vec::new();
        for x in quiver.arrows_into(u) {
            if Some(x) == last {
                continue;
            }
            let mut chain = vec![Path::of_arrow(quiver, x)];
            loop {
                let cur = chain.last().unwrap();
                let Some(y) = alg.prev_arrow(cur.first_arrow().unwrap()) else { break };
                let mut arrows = vec![y];
                arrows.extend_from_slice(cur.arrows());
                let longer = Path::new(quiver, quiver.source(y), arrows).unwrap();
                if !alg.is_nonzero(&longer) {
                    break;
                }
                chain.push(longer);
            }
            out.extend(chain);
        }
        out
    }

    /// Nontrivial prefixes of the branch at `v` avoiding `avoid`, shortest
    /// first.
    fn outward_candidates(&self, v: VertexId, avoid: Option<ArrowId>) -> Vec<Path> {
        let branch = self.alg().max_avoiding(v, avoid);
        (1..=branch.len())
            .map(|l| {
                Path::new(self.alg().quiver(), v, branch.arrows()[..l].to_vec()).unwrap()
            })
            .collect()
    }

    /// True iff the side whose outermost nontrivial syllable is `s` can be
    /// completed to a finite word of finite projective dimension.
    fn completable(&self, s: &Path) -> bool {
        self.stop_ok(s)
            || self
                .valley_candidates(s)
                .iter()
                .any(|r| self.valley_fin(s, r))
    }

    /// The spec's two-syllable segment test: can `p^{-1} q` be the center
    /// pair of a word of finite projective dimension?
    pub fn fpd_segment_test(&self, p: &Path, q: &Path) -> bool {
        if p.is_trivial() && q.is_trivial() {
            return self.h.pdim_simple(p.start()).is_finite();
        }
        let side_ok = |s: &Path, companion: &Path| -> bool {
            if s.is_trivial() {
                self.stop_trivial_ok(s.start(), companion.first_arrow())
            } else {
                self.completable(s)
            }
        };
        side_ok(p, q) && side_ok(q, p)
    }

    /// Longest inward syllable continuing past `state` with a finite-pdim
    /// valley; `None` when the side must terminate.
    fn choose_inward(&mut self, state: &Path) -> Result<Option<Path>, ConstructionError> {
        let candidates = self.valley_candidates(state);
        let choice = candidates
            .iter()
            .rev()
            .find(|r| self.valley_fin(state, r))
            .cloned();
        let key = state.last_arrow().expect("state syllables are nontrivial");
        if let Some(prev) = self.inward_by_arrow.get(&key) {
            if *prev != choice {
                return Err(ConstructionError::InvariantViolation(format!(
                    "inward choice after arrow #{key:?} is not a function of that arrow"
                )));
            }
        } else {
            self.inward_by_arrow.insert(key, choice.clone());
        }
        Ok(choice)
    }

    /// Shortest outward syllable after the inward syllable `inward`
    /// (trivial = terminate the side).
    fn choose_outward(&mut self, inward: &Path) -> Result<Option<Path>, ConstructionError> {
        let v = inward.start();
        let avoid = inward.first_arrow();
        let choice = if self.stop_trivial_ok(v, avoid) {
            None
        } else {
            let found = self
                .outward_candidates(v, avoid)
                .into_iter()
                .find(|q| self.completable(q));
            match found {
                Some(q) => Some(q),
                None => {
                    return Err(ConstructionError::InvariantViolation(
                        "no outward syllable completes the segment".into(),
                    ))
                }
            }
        };
        let key = avoid.expect("inward syllables are nontrivial");
        if let Some(prev) = self.outward_by_arrow.get(&key) {
            if *prev != choice {
                return Err(ConstructionError::InvariantViolation(format!(
                    "outward choice after arrow #{key:?} is not a function of that arrow"
                )));
            }
        } else {
            self.outward_by_arrow.insert(key, choice.clone());
        }
        Ok(choice)
    }
}

/// Minimal-length center pair for the characteristic word of the simple at
/// `e`. Returns `(e, e)` exactly when the simple has finite projective
/// dimension.
pub fn step0(ctx: &CharwordCtx, e: VertexId) -> (Path, Path) {
    let alg = ctx.alg();
    let mut paths: Vec<&Path> = alg.paths_from(e).collect();
    paths.sort_by_key(|p| (p.len(), (*p).clone()));
    let mut best: Option<(usize, Path, Path)> = None;
    for (i, p) in paths.iter().enumerate() {
        for q in paths.iter().skip(i) {
            if let (Some(a), Some(b)) = (p.first_arrow(), q.first_arrow()) {
                if a == b {
                    continue;
                }
            }
            let total = p.len() + q.len();
            if let Some((t, _, _)) = &best {
                if total >= *t {
                    continue;
                }
            }
            if ctx.fpd_segment_test(p, q) {
                best = Some((total, (*p).clone(), (*q).clone()));
            }
        }
    }
    let (total, p, q) =
        best.expect("the projective word always passes the segment test");
    // Uniqueness up to swap among minimal-length candidates.
    for (i, p2) in paths.iter().enumerate() {
        for q2 in paths.iter().skip(i) {
            if p2.len() + q2.len() != total || (**p2 == p && **q2 == q) {
                continue;
            }
            if let (Some(a), Some(b)) = (p2.first_arrow(), q2.first_arrow()) {
                if a == b {
                    continue;
                }
            }
            assert!(
                !ctx.fpd_segment_test(p2, q2),
                "minimal center pair is not unique at vertex {}",
                alg.quiver().label(e)
            );
        }
    }
    // Deterministic orientation: the single-pair word in canonical form.
    let word = FiniteWord::from_pairs(alg, vec![Pair::new(p.clone(), q.clone())])
        .expect("center candidates form a word");
    if word.canonical() == word {
        (p, q)
    } else {
        (q, p)
    }
}

/// One side of the growing word.
struct Side {
    /// Pairs at distance 1, 2, ... from the center, in outward order; the
    /// right side stores `(p, q)` pairs verbatim, the left side mirrored.
    pairs: Vec<Pair>,
    status: Option<SideStatus>,
    /// Last outward syllable (the state driving the next step).
    state: Option<Path>,
    seen: HashMap<(Path, Path), usize>,
}

impl Side {
    fn new(initial: &Path) -> Side {
        Side {
            pairs: Vec::new(),
            status: initial.is_trivial().then_some(SideStatus::Terminated),
            state: (!initial.is_trivial()).then(|| initial.clone()),
            seen: HashMap::new(),
        }
    }

    fn open(&self) -> bool {
        self.status.is_none()
    }
}

/// Builder exposing the per-step extension operations.
pub struct CharwordBuilder<'a, 'h> {
    ctx: CharwordCtx<'a, 'h>,
    center: Pair,
    left: Side,
    right: Side,
}

impl<'a, 'h> CharwordBuilder<'a, 'h> {
    pub fn new(h: &'h Homology<'a>, e: VertexId) -> Self {
        let mut ctx = CharwordCtx::new(h);
        let (p, q) = step0(&mut ctx, e);
        let center = Pair::new(p, q);
        let left = Side::new(&center.p);
        let right = Side::new(&center.q);
        CharwordBuilder { ctx, center, left, right }
    }

    /// Performs one extension step on the right side; returns the appended
    /// `(p_t, q_t)` (trivial paths encode termination).
    pub fn extend_right(&mut self) -> Result<(Path, Path), ConstructionError> {
        Self::extend_side(&mut self.ctx, &mut self.right, false)
    }

    /// Mirror step on the left side; returns `(p_{-t}, q_{-t})`.
    pub fn extend_left(&mut self) -> Result<(Path, Path), ConstructionError> {
        Self::extend_side(&mut self.ctx, &mut self.left, true)
            .map(|(inward, outward)| (outward, inward))
    }

    /// Returns (inward, outward) syllables appended to the side.
    fn extend_side(
        ctx: &mut CharwordCtx,
        side: &mut Side,
        mirrored: bool,
    ) -> Result<(Path, Path), ConstructionError> {
        assert!(side.open(), "side already closed");
        let state = side.state.clone().expect("open side has a state");
        let Some(inward) = ctx.choose_inward(&state)? else {
            if !ctx.stop_ok(&state) {
                return Err(ConstructionError::InvariantViolation(
                    "no valley continues the side, yet stopping fails".into(),
                ));
            }
            side.status = Some(SideStatus::Terminated);
            let v = state.end(ctx.alg().quiver());
            return Ok((Path::trivial(v), Path::trivial(v)));
        };

        // Periodicity: the state pair (previous outward, inward) determines
        // the entire continuation.
        let key = (state.clone(), inward.clone());
        let here = side.pairs.len();
        if let Some(&onset) = side.seen.get(&key) {
            side.status = Some(SideStatus::Periodic {
                onset,
                period_pairs: here - onset,
            });
            let v = inward.start();
            return Ok((Path::trivial(v), Path::trivial(v)));
        }
        side.seen.insert(key, here);

        let outward = ctx.choose_outward(&inward)?;
        match outward {
            None => {
                let v = inward.start();
                let pair = if mirrored {
                    Pair::new(Path::trivial(v), inward.clone())
                } else {
                    Pair::new(inward.clone(), Path::trivial(v))
                };
                side.pairs.push(pair);
                side.status = Some(SideStatus::Terminated);
                Ok((inward, Path::trivial(v)))
            }
            Some(out_syll) => {
                let pair = if mirrored {
                    Pair::new(out_syll.clone(), inward.clone())
                } else {
                    Pair::new(inward.clone(), out_syll.clone())
                };
                side.pairs.push(pair);
                side.state = Some(out_syll.clone());
                Ok((inward, out_syll))
            }
        }
    }

    /// Runs both sides to closure and assembles the word.
    pub fn build(mut self) -> Result<CharacteristicWord, ConstructionError> {
        let n = self.ctx.alg().quiver().vertex_count();
        let bound = 2 * n + 1;
        while self.right.open() {
            self.extend_right()?;
            if self.right.pairs.len() > bound {
                return Err(ConstructionError::InvariantViolation(format!(
                    "right side exceeded {bound} pair extensions"
                )));
            }
        }
        while self.left.open() {
            self.extend_left()?;
            if self.left.pairs.len() > bound {
                return Err(ConstructionError::InvariantViolation(format!(
                    "left side exceeded {bound} pair extensions"
                )));
            }
        }

        let alg = self.ctx.alg();
        let mut core: Vec<Pair> = self.left.pairs.iter().rev().cloned().collect();
        let center_index = core.len();
        core.push(self.center.clone());
        core.extend(self.right.pairs.iter().cloned());

        let (left_status, left_block, strip_left) = Self::close_side(alg, &self.left, true)?;
        let (right_status, right_block, strip_right) = Self::close_side(alg, &self.right, false)?;
        // Periodic sides keep only the pairs before the onset in the core.
        let keep_from = strip_left;
        let keep_to = core.len() - strip_right;
        let core: Vec<Pair> = core[keep_from..keep_to].to_vec();
        let center = center_index - keep_from;

        let core_word = FiniteWord::from_pairs(alg, core)
            .map_err(|e| ConstructionError::InvariantViolation(e.to_string()))?;
        let word = EventuallyPeriodicWord::new(alg, left_block, core_word, right_block)
            .map_err(|e| ConstructionError::InvariantViolation(e.to_string()))?;
        Ok(CharacteristicWord {
            centered: CenteredWord { word, center },
            left: left_status,
            right: right_status,
        }
        .normalize_orientation())
    }

    fn close_side(
        alg: &StringAlgebra,
        side: &Side,
        mirrored: bool,
    ) -> Result<(SideStatus, Option<PeriodBlock>, usize), ConstructionError> {
        match side.status.clone().expect("side closed") {
            SideStatus::Terminated => Ok((SideStatus::Terminated, None, 0)),
            SideStatus::Periodic { onset, period_pairs } => {
                // Side pairs are stored outward from the center; a left
                // period block must read left-to-right.
                let mut period: Vec<Pair> = side.pairs[onset..onset + period_pairs].to_vec();
                if mirrored {
                    period.reverse();
                }
                let strip = side.pairs.len() - onset;
                let block = PeriodBlock::new(alg, period)
                    .map_err(|e| ConstructionError::InvariantViolation(e.to_string()))?;
                Ok((SideStatus::Periodic { onset, period_pairs }, Some(block), strip))
            }
        }
    }
}

/// Construction of the characteristic word of the simple at `e`.
pub fn build_characteristic_word(h: &Homology, e: VertexId) -> CharacteristicWord {
    CharwordBuilder::new(h, e)
        .build()
        .expect("characteristic word construction is total")
}

/// Minimal approximation of the simple at `e`, or its phantom.
pub fn minimal_approximation(h: &Homology, e: VertexId) -> ApproxResult {
    let cw = build_characteristic_word(h, e);
    if cw.is_finite() {
        ApproxResult::Approximated { word: cw.centered }
    } else {
        ApproxResult::Phantom(cw)
    }
}

/// Approximations of all simples and the contravariant-finiteness verdict.
pub fn cf_report(h: &Homology) -> CfReport {
    let per_simple: Vec<(VertexId, ApproxResult)> = h
        .algebra()
        .quiver()
        .vertices()
        .map(|v| (v, minimal_approximation(h, v)))
        .collect();
    let contravariantly_finite = per_simple.iter().all(|(_, r)| r.is_approximated());
    CfReport { per_simple, contravariantly_finite }
}

/// Convenience wrapper for the spec-level segment test.
pub fn fpd_segment_test(h: &Homology, p: &Path, q: &Path) -> bool {
    CharwordCtx::new(h).fpd_segment_test(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::{parse_word_literal, print_centered_literal, WordLiteral};

    fn vertex(alg: &StringAlgebra, label: &str) -> VertexId {
        alg.quiver().vertex_id(label).unwrap()
    }

    #[test]
    fn e23_segment_tests() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let v1 = vertex(&alg, "1");
        let a = Path::of_arrow(alg.quiver(), alg.quiver().arrow_id("a").unwrap());
        let b = Path::of_arrow(alg.quiver(), alg.quiver().arrow_id("b").unwrap());
        assert!(fpd_segment_test(&h, &a, &b));
        assert!(!fpd_segment_test(&h, &Path::trivial(v1), &Path::trivial(v1)));
        // The projective word pair always passes.
        let branches = alg.branches(v1);
        assert!(fpd_segment_test(&h, &branches[0], &branches[1]));
    }

    #[test]
    fn e23_step0() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let ctx = CharwordCtx::new(&h);
        let (p, q) = step0(&ctx, vertex(&alg, "1"));
        // (e1, b) up to the canonical orientation.
        let total = p.len() + q.len();
        assert_eq!(total, 1);
        let b = alg.quiver().arrow_id("b").unwrap();
        assert!(p.first_arrow() == Some(b) || q.first_arrow() == Some(b));
    }

    #[test]
    fn e23_characteristic_words() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let w1 = build_characteristic_word(&h, vertex(&alg, "1"));
        assert!(!w1.is_finite());
        // One side terminated, the other periodic with period a^{-1} b.
        let lit = print_centered_literal(&alg, &w1.centered);
        let expected: Vec<&str> = vec!["e1^ b *[a^ b]", "[b^ a]* b e1"];
        assert!(expected.contains(&lit.as_str()), "got literal {lit}");

        let w2 = build_characteristic_word(&h, vertex(&alg, "2"));
        assert!(!w2.is_finite());
    }

    #[test]
    fn finite_pdim_simples_have_trivial_words() {
        // Over the hereditary A2 quiver both simples have finite pdim.
        let alg = crate::parse_presentation("vertices: 1 2\narrow a: 1 -> 2\n")
            .unwrap()
            .validate()
            .unwrap();
        let h = Homology::new(&alg);
        for v in alg.quiver().vertices() {
            let cw = build_characteristic_word(&h, v);
            assert!(cw.is_finite());
            assert!(cw.centered.word.core.is_trivial());
            assert!(matches!(
                minimal_approximation(&h, v),
                ApproxResult::Approximated { .. }
            ));
        }
    }

    #[test]
    fn e23_phantom_pdim_is_finite() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let w1 = build_characteristic_word(&h, vertex(&alg, "1"));
        assert_eq!(h.pdim_periodic(&w1.centered.word), crate::syzygy::PDim::Finite(1));
    }

    #[test]
    fn e23_cf_report_is_negative() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let report = cf_report(&h);
        assert!(!report.contravariantly_finite);
        assert_eq!(report.per_simple.len(), 2);
    }

    #[test]
    fn e23_expand_matches_phantom_graph() {
        let alg = fixtures::e23();
        let h = Homology::new(&alg);
        let w1 = build_characteristic_word(&h, vertex(&alg, "1"));
        let window = w1.centered.window(2);
        // Tops are all at vertex 1; three pairs fit in the window.
        assert_eq!(window.len(), 3);
        let WordLiteral::Periodic(expected) =
            parse_word_literal(&alg, "e1^ b *[a^ b]").unwrap()
        else {
            panic!()
        };
        assert_eq!(
            w1.centered.word.canonical_key(),
            expected.canonical_key()
        );
    }
}
