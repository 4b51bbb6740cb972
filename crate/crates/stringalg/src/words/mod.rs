//! Words over a string algebra: finite words, eventually periodic words,
//! centered words, inversion, canonical forms, primitivity.
//!
//! A word is a sequence of syllable pairs `(p_i, q_i)`; both paths of a pair
//! start at the same vertex, consecutive pairs share the end points of `q_i`
//! and `p_{i+1}`, and first/last arrows are distinct where both sides are
//! nontrivial. Trivial syllables occur only at the two ends (and mark
//! termination of the word on that side).

mod literal;

pub use literal::{parse_word_literal, print_centered_literal, print_word_literal, WordLiteral};

use std::collections::VecDeque;

use thiserror::Error;

use crate::presentation::{ArrowId, Path, StringAlgebra, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("not a word at pair {position}: {constraint}")]
    NotAWord { position: usize, constraint: String },
    #[error("syllable `{0}` is zero in the algebra")]
    ZeroSyllable(String),
    #[error("band words need nontrivial flanking syllables")]
    MalformedBandWord,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("malformed word literal: {0}")]
    Literal(String),
    #[error("period block is not a valid repeating segment: {0}")]
    BadPeriod(String),
}

/// One pair of syllables `p^{-1} q`, both starting at the same vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub p: Path,
    pub q: Path,
}

impl Pair {
    pub fn new(p: Path, q: Path) -> Self {
        Pair { p, q }
    }

    pub fn vertex(&self) -> VertexId {
        self.p.start()
    }

    pub fn is_trivial(&self) -> bool {
        self.p.is_trivial() && self.q.is_trivial()
    }

    fn swapped(self) -> Pair {
        Pair { p: self.q, q: self.p }
    }
}

/// A finite word in normalized form: a single pair, or a list of pairs in
/// which only the first `p` and the last `q` may be trivial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWord {
    pairs: Vec<Pair>,
}

fn check_pair(alg: &StringAlgebra, i: usize, pair: &Pair) -> Result<(), WordError> {
    let q = alg.quiver();
    for path in [&pair.p, &pair.q] {
        if !alg.is_nonzero(path) {
            return Err(WordError::ZeroSyllable(path.display(q).to_string()));
        }
    }
    if pair.p.start() != pair.q.start() {
        return Err(WordError::NotAWord {
            position: i,
            constraint: "p and q must share their start vertex (W1)".into(),
        });
    }
    if let (Some(a), Some(b)) = (pair.p.first_arrow(), pair.q.first_arrow()) {
        if a == b {
            return Err(WordError::NotAWord {
                position: i,
                constraint: "p and q must have distinct first arrows (W1)".into(),
            });
        }
    }
    Ok(())
}

fn check_junction(alg: &StringAlgebra, i: usize, left_q: &Path, right_p: &Path) -> Result<(), WordError> {
    if left_q.end(alg.quiver()) != right_p.end(alg.quiver()) {
        return Err(WordError::NotAWord {
            position: i,
            constraint: "q_i and p_{i+1} must share their end vertex (W2)".into(),
        });
    }
    match (left_q.last_arrow(), right_p.last_arrow()) {
        (Some(a), Some(b)) if a == b => Err(WordError::NotAWord {
            position: i,
            constraint: "q_i and p_{i+1} must have distinct last arrows (W2)".into(),
        }),
        (None, _) | (_, None) => Err(WordError::NotAWord {
            position: i,
            constraint: "trivial syllable between nontrivial ones (W3)".into(),
        }),
        _ => Ok(()),
    }
}

impl FiniteWord {
    /// The trivial word at a vertex.
    pub fn trivial(v: VertexId) -> Self {
        FiniteWord { pairs: vec![Pair::new(Path::trivial(v), Path::trivial(v))] }
    }

    /// Validates W1-W3 and normalizes (strips fully trivial flanking pairs).
    pub fn from_pairs(alg: &StringAlgebra, pairs: Vec<Pair>) -> Result<Self, WordError> {
        let mut pairs: VecDeque<Pair> = pairs.into();
        if pairs.is_empty() {
            return Err(WordError::NotAWord {
                position: 0,
                constraint: "a word needs at least one pair".into(),
            });
        }
        // Trivial tail pairs sit at the valley vertex of their nontrivial
        // neighbor; strip them after checking the junction.
        while pairs.len() > 1 && pairs.front().unwrap().is_trivial() {
            let v = pairs.front().unwrap().vertex();
            if pairs[1].p.end(alg.quiver()) != v {
                return Err(WordError::NotAWord {
                    position: 0,
                    constraint: "trivial tail pair detached from the word (W2)".into(),
                });
            }
            pairs.pop_front();
        }
        while pairs.len() > 1 && pairs.back().unwrap().is_trivial() {
            let v = pairs.back().unwrap().vertex();
            let n = pairs.len();
            if pairs[n - 2].q.end(alg.quiver()) != v {
                return Err(WordError::NotAWord {
                    position: n - 1,
                    constraint: "trivial tail pair detached from the word (W2)".into(),
                });
            }
            pairs.pop_back();
        }
        let pairs: Vec<Pair> = pairs.into();
        for (i, pair) in pairs.iter().enumerate() {
            check_pair(alg, i, pair)?;
            let interior_p = i > 0;
            let interior_q = i + 1 < pairs.len();
            if interior_p && pair.p.is_trivial() {
                return Err(WordError::NotAWord {
                    position: i,
                    constraint: "interior trivial syllable (W3)".into(),
                });
            }
            if interior_q && pair.q.is_trivial() {
                return Err(WordError::NotAWord {
                    position: i,
                    constraint: "interior trivial syllable (W3)".into(),
                });
            }
        }
        for i in 0..pairs.len().saturating_sub(1) {
            check_junction(alg, i, &pairs[i].q, &pairs[i + 1].p)?;
        }
        Ok(FiniteWord { pairs })
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].is_trivial()
    }

    /// Vertex of the trivial word, if trivial.
    pub fn trivial_vertex(&self) -> Option<VertexId> {
        self.is_trivial().then(|| self.pairs[0].vertex())
    }

    /// Number of arrows used (counted with multiplicity).
    pub fn syllable_length(&self) -> usize {
        self.pairs.iter().map(|pr| pr.p.len() + pr.q.len()).sum()
    }

    /// The formal inverse: pairs reversed, `p` and `q` swapped.
    pub fn invert(&self) -> FiniteWord {
        let pairs = self.pairs.iter().rev().cloned().map(Pair::swapped).collect();
        FiniteWord { pairs }
    }

    /// Serialized letters: per pair, `p` read valley-to-top (inverse
    /// letters), then `q` top-to-valley (direct letters).
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for pair in &self.pairs {
            for &a in pair.p.arrows().iter().rev() {
                out.push(Letter { arrow: a, inverse: true });
            }
            for &a in pair.q.arrows() {
                out.push(Letter { arrow: a, inverse: false });
            }
        }
        out
    }

    fn sort_key(&self) -> Vec<(u32, u8)> {
        self.letters().iter().map(Letter::rank).collect()
    }

    /// The lexicographically smaller of `w` and `w^{-1}` under the letter
    /// order; idempotent, and invariant under inversion.
    pub fn canonical(&self) -> FiniteWord {
        if self.is_trivial() {
            return self.clone();
        }
        let inv = self.invert();
        if inv.sort_key() < self.sort_key() {
            inv
        } else {
            self.clone()
        }
    }

    pub fn canonical_key(&self) -> WordKey {
        if let Some(v) = self.trivial_vertex() {
            return WordKey::Trivial(v);
        }
        WordKey::Finite(self.canonical().sort_key())
    }

    /// Cyclic rotation by `k` pairs (meaningful for all-nontrivial words).
    pub fn rotate(&self, k: usize) -> FiniteWord {
        let n = self.pairs.len();
        let pairs = (0..n).map(|i| self.pairs[(i + k) % n].clone()).collect();
        FiniteWord { pairs }
    }
}

/// A single serialized letter of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    /// Comparison rank: by arrow (name order), inverse before direct.
    fn rank(&self) -> (u32, u8) {
        (self.arrow.0, if self.inverse { 0 } else { 1 })
    }
}

/// Canonical identity of a word, usable as a hash/ordering key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordKey {
    Trivial(VertexId),
    Finite(Vec<(u32, u8)>),
    /// Two-sided periodic word: minimal rotation of the primitive period.
    Pure(Vec<(u32, u8)>),
    /// Eventually periodic, anchored at the intrinsic periodicity onsets.
    Mixed {
        left: Vec<(u32, u8)>,
        core: Vec<(u32, u8)>,
        core_trivial: Option<VertexId>,
        right: Vec<(u32, u8)>,
    },
}

/// True if `v`, all of whose syllables must be nontrivial, is primitive:
/// `vv` is again a word and `v` is not a proper power.
pub fn is_primitive(alg: &StringAlgebra, v: &FiniteWord) -> Result<bool, WordError> {
    if v.pairs().iter().any(|pr| pr.p.is_trivial() || pr.q.is_trivial()) {
        return Err(WordError::MalformedBandWord);
    }
    let n = v.pairs().len();
    let last_q = &v.pairs()[n - 1].q;
    let first_p = &v.pairs()[0].p;
    if check_junction(alg, n - 1, last_q, first_p).is_err() {
        return Ok(false);
    }
    // Proper power check: pairs repeat with period d | n, d < n.
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| v.pairs()[i] == v.pairs()[i - d]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A block of pairs that repeats to one side; all syllables nontrivial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodBlock {
    pairs: Vec<Pair>,
}

impl PeriodBlock {
    pub fn new(alg: &StringAlgebra, pairs: Vec<Pair>) -> Result<Self, WordError> {
        if pairs.is_empty() {
            return Err(WordError::BadPeriod("empty period".into()));
        }
        for (i, pair) in pairs.iter().enumerate() {
            check_pair(alg, i, pair)?;
            if pair.p.is_trivial() || pair.q.is_trivial() {
                return Err(WordError::BadPeriod("trivial syllable in a period".into()));
            }
        }
        for i in 0..pairs.len() {
            let j = (i + 1) % pairs.len();
            check_junction(alg, i, &pairs[i].q, &pairs[j].p)
                .map_err(|e| WordError::BadPeriod(e.to_string()))?;
        }
        Ok(PeriodBlock { pairs })
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn invert(&self) -> PeriodBlock {
        PeriodBlock { pairs: self.pairs.iter().rev().cloned().map(Pair::swapped).collect() }
    }

    /// Shrinks the block to its primitive root.
    fn primitive_root(&self) -> PeriodBlock {
        let n = self.pairs.len();
        for d in 1..n {
            if n % d == 0 && (d..n).all(|i| self.pairs[i] == self.pairs[i - d]) {
                return PeriodBlock { pairs: self.pairs[..d].to_vec() };
            }
        }
        self.clone()
    }
}

/// A word of the form `... u u · core · v v ...`; finite iff both periods
/// are absent. The core always holds at least one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventuallyPeriodicWord {
    pub left: Option<PeriodBlock>,
    pub core: FiniteWord,
    pub right: Option<PeriodBlock>,
}

impl EventuallyPeriodicWord {
    pub fn finite(core: FiniteWord) -> Self {
        EventuallyPeriodicWord { left: None, core, right: None }
    }

    pub fn new(
        alg: &StringAlgebra,
        left: Option<PeriodBlock>,
        core: FiniteWord,
        right: Option<PeriodBlock>,
    ) -> Result<Self, WordError> {
        if let Some(block) = &left {
            let last_q = &block.pairs().last().unwrap().q;
            check_junction(alg, 0, last_q, &core.pairs()[0].p)
                .map_err(|e| WordError::BadPeriod(format!("left period junction: {e}")))?;
        }
        if let Some(block) = &right {
            let core_q = &core.pairs().last().unwrap().q;
            check_junction(alg, core.len() - 1, core_q, &block.pairs()[0].p)
                .map_err(|e| WordError::BadPeriod(format!("right period junction: {e}")))?;
        }
        Ok(EventuallyPeriodicWord { left, core, right })
    }

    pub fn is_finite(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }

    pub fn invert(&self) -> EventuallyPeriodicWord {
        EventuallyPeriodicWord {
            left: self.right.as_ref().map(PeriodBlock::invert),
            core: self.core.invert(),
            right: self.left.as_ref().map(PeriodBlock::invert),
        }
    }

    /// Pairs with index in `[-k, k]` relative to `center` (an index into the
    /// core), clipped at finite ends.
    pub fn window(&self, center: usize, k: usize) -> FiniteWord {
        let center = center as isize;
        let lo = center - k as isize;
        let hi = center + k as isize;
        let mut pairs = Vec::new();
        for idx in lo..=hi {
            if let Some(pair) = self.pair_at(idx) {
                pairs.push(pair);
            }
        }
        FiniteWord { pairs }
    }

    /// Pair at a core-relative index; periods unrolled, `None` past a finite
    /// end.
    pub fn pair_at(&self, idx: isize) -> Option<Pair> {
        let n = self.core.len() as isize;
        if idx < 0 {
            let block = self.left.as_ref()?;
            let m = block.len() as isize;
            let off = (idx % m + m) % m;
            Some(block.pairs()[off as usize].clone())
        } else if idx < n {
            Some(self.core.pairs()[idx as usize].clone())
        } else {
            let block = self.right.as_ref()?;
            let m = block.len() as isize;
            let off = (idx - n) % m;
            Some(block.pairs()[off as usize].clone())
        }
    }

    /// Finite segment per the spec's `expand`: window around core index 0.
    pub fn expand(&self, k: usize) -> FiniteWord {
        self.window(0, k)
    }

    /// Canonical key, invariant under inversion and under re-indexing
    /// (shifts of the two-sided sequence).
    pub fn canonical_key(&self) -> WordKey {
        if self.is_finite() {
            return self.core.canonical_key();
        }
        let a = self.directed_key();
        let b = self.invert().directed_key();
        a.min(b)
    }

    fn directed_key(&self) -> WordKey {
        let mut left: VecDeque<Pair> =
            self.left.as_ref().map(|b| b.primitive_root().pairs.clone()).unwrap_or_default().into();
        let mut right: VecDeque<Pair> =
            self.right.as_ref().map(|b| b.primitive_root().pairs.clone()).unwrap_or_default().into();
        let mut core: VecDeque<Pair> = self.core.pairs.clone().into();

        // Absorb periodic repetitions out of the core so the periodicity
        // onsets become intrinsic.
        loop {
            let mut changed = false;
            if !left.is_empty() && !core.is_empty() && core.front() == left.front() {
                core.pop_front();
                let f = left.pop_front().unwrap();
                left.push_back(f);
                changed = true;
            }
            if !right.is_empty() && !core.is_empty() && core.back() == right.back() {
                core.pop_back();
                let b = right.pop_back().unwrap();
                right.push_front(b);
                changed = true;
            }
            if !changed {
                break;
            }
        }

        if core.is_empty() && !left.is_empty() && !right.is_empty() {
            // Joined periods: slide the junction left as far as possible.
            let bound = left.len() * right.len() + 1;
            let mut slides = 0;
            while left.back() == right.back() {
                slides += 1;
                if slides > bound {
                    // The word is purely periodic.
                    return WordKey::Pure(min_rotation_key(&Vec::from(left)));
                }
                let l = left.pop_back().unwrap();
                left.push_front(l);
                let r = right.pop_back().unwrap();
                right.push_front(r);
            }
        } else if core.is_empty() {
            // One period absent: the word starts (or ends) exactly in phase.
            // Anchoring at the finite end keeps the key intrinsic.
        }

        let core_word = FiniteWord { pairs: core.iter().cloned().collect::<Vec<_>>() };
        let core_trivial = if core.is_empty() { None } else { core_word.trivial_vertex() };
        WordKey::Mixed {
            left: FiniteWord { pairs: left.into() }.sort_key(),
            core: if core.is_empty() { Vec::new() } else { core_word.sort_key() },
            core_trivial,
            right: FiniteWord { pairs: right.into() }.sort_key(),
        }
    }
}

fn min_rotation_key(pairs: &[Pair]) -> Vec<(u32, u8)> {
    let block = PeriodBlock { pairs: pairs.to_vec() };
    let root = block.primitive_root();
    let n = root.pairs.len();
    let mut best: Option<Vec<(u32, u8)>> = None;
    for variant in [root.clone(), root.invert()] {
        for k in 0..n {
            let rotated = FiniteWord { pairs: variant.pairs.clone() }.rotate(k).sort_key();
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// A word with a distinguished center pair (an index into the core).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredWord {
    pub word: EventuallyPeriodicWord,
    pub center: usize,
}

impl CenteredWord {
    pub fn center_vertex(&self) -> VertexId {
        self.word.core.pairs()[self.center].vertex()
    }

    pub fn center_pair(&self) -> &Pair {
        &self.word.core.pairs()[self.center]
    }

    pub fn window(&self, k: usize) -> FiniteWord {
        self.word.window(self.center, k)
    }
}

/// Drops the first `count` nontrivial syllables from the left-finite end of
/// a word (half-pairs allowed: dropping an odd count leaves a trivial `p`).
/// Periodic right tails are unrolled as far as the cut requires.
pub fn drop_leading_syllables(
    alg: &StringAlgebra,
    w: &EventuallyPeriodicWord,
    count: usize,
) -> Result<EventuallyPeriodicWord, WordError> {
    assert!(w.left.is_none(), "word must be left finite");
    let mut core_pairs = w.core.pairs().to_vec();
    if let Some(block) = &w.right {
        while 2 * core_pairs.len() < count + 2 {
            core_pairs.extend(block.pairs().iter().cloned());
        }
    }
    let mut syllables: Vec<(bool, Path)> = Vec::new(); // (is_p, path)
    for pair in &core_pairs {
        if !pair.p.is_trivial() {
            syllables.push((true, pair.p.clone()));
        }
        if !pair.q.is_trivial() {
            syllables.push((false, pair.q.clone()));
        }
    }
    if count >= syllables.len() {
        return Err(WordError::Literal("not enough syllables to drop".into()));
    }
    let rest = &syllables[count..];
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending_p: Option<Path> = None;
    for (is_p, path) in rest {
        if *is_p {
            debug_assert!(pending_p.is_none());
            pending_p = Some(path.clone());
        } else {
            let p = pending_p.take().unwrap_or_else(|| Path::trivial(path.start()));
            pairs.push(Pair::new(p, path.clone()));
        }
    }
    if let Some(p) = pending_p {
        let v = p.start();
        pairs.push(Pair::new(p, Path::trivial(v)));
    }
    let core = FiniteWord::from_pairs(alg, pairs)?;
    EventuallyPeriodicWord::new(alg, None, core, w.right.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::Path;

    fn arrow_path(alg: &StringAlgebra, name: &str) -> Path {
        Path::of_arrow(alg.quiver(), alg.quiver().arrow_id(name).unwrap())
    }

    #[test]
    fn e23_two_pair_word_validates() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let b = arrow_path(&alg, "b");
        let a = arrow_path(&alg, "a");
        // (e)^{-1} b . a^{-1} b
        let w = FiniteWord::from_pairs(
            &alg,
            vec![Pair::new(Path::trivial(v1), b.clone()), Pair::new(a, b)],
        )
        .unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.pairs()[0].p.is_trivial());
    }

    #[test]
    fn same_arrow_back_and_forth_is_not_a_word() {
        let alg = fixtures::e23();
        let a = arrow_path(&alg, "a");
        let v1 = alg.quiver().vertex_id("1").unwrap();
        // a then a^: two pairs (e, a), (a, e) whose junction repeats the arrow.
        let res = FiniteWord::from_pairs(
            &alg,
            vec![
                Pair::new(Path::trivial(v1), a.clone()),
                Pair::new(a, Path::trivial(v1)),
            ],
        );
        assert!(matches!(res, Err(WordError::NotAWord { .. })));
    }

    #[test]
    fn invert_is_involutive() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let b = arrow_path(&alg, "b");
        let a = arrow_path(&alg, "a");
        let w = FiniteWord::from_pairs(
            &alg,
            vec![Pair::new(Path::trivial(v1), b.clone()), Pair::new(a, b)],
        )
        .unwrap();
        assert_eq!(w.invert().invert(), w);
        let e = FiniteWord::trivial(v1);
        assert_eq!(e.invert(), e);
    }

    #[test]
    fn canonical_is_inversion_invariant_and_idempotent() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let b = arrow_path(&alg, "b");
        let a = arrow_path(&alg, "a");
        let w = FiniteWord::from_pairs(
            &alg,
            vec![Pair::new(Path::trivial(v1), b.clone()), Pair::new(a, b)],
        )
        .unwrap();
        assert_eq!(w.canonical(), w.invert().canonical());
        assert_eq!(w.canonical().canonical(), w.canonical());
    }

    #[test]
    fn primitivity_examples() {
        let alg = fixtures::e23();
        let a = arrow_path(&alg, "a");
        let b = arrow_path(&alg, "b");
        let v = FiniteWord::from_pairs(&alg, vec![Pair::new(a.clone(), b.clone())]).unwrap();
        assert!(is_primitive(&alg, &v).unwrap());
        let vv = FiniteWord::from_pairs(
            &alg,
            vec![Pair::new(a.clone(), b.clone()), Pair::new(a.clone(), b.clone())],
        )
        .unwrap();
        assert!(!is_primitive(&alg, &vv).unwrap());

        // E4: g^{-1} d squares to a word (ends meet at vertex 1, last
        // arrows g and d distinct), so it is primitive.
        let alg4 = fixtures::e4();
        let g = arrow_path(&alg4, "g");
        let d = arrow_path(&alg4, "d");
        let w = FiniteWord::from_pairs(&alg4, vec![Pair::new(g, d)]).unwrap();
        assert!(is_primitive(&alg4, &w).unwrap());

        // A flanking trivial syllable is rejected for band words.
        let alg23 = fixtures::e23();
        let v1 = alg23.quiver().vertex_id("1").unwrap();
        let b = arrow_path(&alg23, "b");
        let half = FiniteWord::from_pairs(&alg23, vec![Pair::new(Path::trivial(v1), b)]).unwrap();
        assert!(matches!(is_primitive(&alg23, &half), Err(WordError::MalformedBandWord)));
    }

    #[test]
    fn primitive_rotation_invariance() {
        let alg = fixtures::e17();
        // The period of w(S7): (a12_5^{-1} a12_11)(a7_11^{-1} a7_5).
        let p1 = Pair::new(arrow_path(&alg, "a12_5"), arrow_path(&alg, "a12_11"));
        let p2 = Pair::new(arrow_path(&alg, "a7_11"), arrow_path(&alg, "a7_5"));
        let v = FiniteWord::from_pairs(&alg, vec![p1, p2]).unwrap();
        assert!(is_primitive(&alg, &v).unwrap());
        for k in 0..v.len() {
            let r = v.rotate(k);
            assert!(is_primitive(&alg, &r).unwrap());
        }
    }

    #[test]
    fn periodic_window_expansion() {
        let alg = fixtures::e23();
        let v1 = alg.quiver().vertex_id("1").unwrap();
        let a = arrow_path(&alg, "a");
        let b = arrow_path(&alg, "b");
        let core = FiniteWord::from_pairs(
            &alg,
            vec![Pair::new(Path::trivial(v1), b.clone())],
        )
        .unwrap();
        let period = PeriodBlock::new(&alg, vec![Pair::new(a.clone(), b.clone())]).unwrap();
        let w = EventuallyPeriodicWord::new(&alg, None, core, Some(period)).unwrap();
        let seg = w.expand(2);
        assert_eq!(seg.len(), 3);
        assert!(seg.pairs()[0].p.is_trivial());
        assert_eq!(seg.pairs()[1], Pair::new(a.clone(), b.clone()));
        assert_eq!(seg.pairs()[2], Pair::new(a, b));
        // Window 0 is the single central pair.
        assert_eq!(w.expand(0).len(), 1);
    }

    #[test]
    fn pure_periodic_keys_match_under_shift_and_inversion() {
        let alg = fixtures::e17();
        let p1 = Pair::new(arrow_path(&alg, "a12_5"), arrow_path(&alg, "a12_11"));
        let p2 = Pair::new(arrow_path(&alg, "a7_11"), arrow_path(&alg, "a7_5"));
        // ... p1 p2 p1 p2 ... written with two different centers.
        let block_12 = PeriodBlock::new(&alg, vec![p1.clone(), p2.clone()]).unwrap();
        let block_21 = PeriodBlock::new(&alg, vec![p2.clone(), p1.clone()]).unwrap();
        let core_a = FiniteWord::from_pairs(&alg, vec![p1.clone()]).unwrap();
        let core_b = FiniteWord::from_pairs(&alg, vec![p2.clone()]).unwrap();
        let wa = EventuallyPeriodicWord::new(
            &alg,
            Some(block_12.clone()),
            core_a,
            Some(block_21.clone()),
        )
        .unwrap();
        let wb = EventuallyPeriodicWord::new(
            &alg,
            Some(block_21.clone()),
            core_b,
            Some(block_12.clone()),
        )
        .unwrap();
        assert_eq!(wa.canonical_key(), wb.canonical_key());
        assert_eq!(wa.canonical_key(), wa.invert().canonical_key());
        assert!(matches!(wa.canonical_key(), WordKey::Pure(_)));
    }
}
