//! Textual word literals.
//!
//! Letters are whitespace separated: `a` is the arrow `a` traversed forward
//! (part of some `q`), `a^` its formal inverse (part of some `p`). A trivial
//! syllable at a flank may be written `e<vertex>` (direct) or `e<vertex>^`
//! (inverse); the trivial word is just `e<vertex>`. Eventually periodic
//! words are written `[u]* core *[v]`, either period block optional.

use crate::presentation::{Path, StringAlgebra, VertexId};

use super::{
    CenteredWord, EventuallyPeriodicWord, FiniteWord, Pair, PeriodBlock, WordError,
};

/// Result of parsing a word literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordLiteral {
    Finite(FiniteWord),
    Periodic(EventuallyPeriodicWord),
}

impl WordLiteral {
    pub fn into_periodic(self) -> EventuallyPeriodicWord {
        match self {
            WordLiteral::Finite(w) => EventuallyPeriodicWord::finite(w),
            WordLiteral::Periodic(w) => w,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Letter { name: String, inverse: bool },
    Open,
    Close,
    Star,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, WordError> {
    let mut toks = Vec::new();
    let spaced = text.replace('[', " [ ").replace(']', " ] ").replace('*', " * ");
    for raw in spaced.split_whitespace() {
        match raw {
            "[" => toks.push(Tok::Open),
            "]" => toks.push(Tok::Close),
            "*" => toks.push(Tok::Star),
            _ => {
                let (name, inverse) = match raw.strip_suffix('^') {
                    Some(base) => (base, true),
                    None => (raw, false),
                };
                if name.is_empty() || name.contains('^') {
                    return Err(WordError::UnknownLetter(raw.to_string()));
                }
                toks.push(Tok::Letter { name: name.to_string(), inverse });
            }
        }
    }
    Ok(toks)
}

#[derive(Debug, Clone)]
enum Syl {
    Arrow { id: crate::presentation::ArrowId, inverse: bool },
    Trivial { vertex: VertexId, inverse: bool },
}

fn resolve(alg: &StringAlgebra, name: &str, inverse: bool) -> Result<Syl, WordError> {
    if let Some(id) = alg.quiver().arrow_id(name) {
        return Ok(Syl::Arrow { id, inverse });
    }
    if let Some(label) = name.strip_prefix('e') {
        if let Some(vertex) = alg.quiver().vertex_id(label) {
            return Ok(Syl::Trivial { vertex, inverse });
        }
    }
    Err(WordError::UnknownLetter(name.to_string()))
}

/// Groups a letter block into syllable pairs. Trivial markers are only
/// accepted where a trivial syllable can occur.
fn letters_to_pairs(alg: &StringAlgebra, letters: &[Syl]) -> Result<Vec<Pair>, WordError> {
    let quiver = alg.quiver();
    if letters.is_empty() {
        return Err(WordError::Literal("empty letter block".into()));
    }
    if letters.len() == 1 {
        if let Syl::Trivial { vertex, .. } = letters[0] {
            return Ok(vec![Pair::new(Path::trivial(vertex), Path::trivial(vertex))]);
        }
    }
    // Strip flank trivial markers, remembering the claimed vertices.
    let mut rest = letters;
    let mut lead_trivial: Option<VertexId> = None;
    let mut tail_trivial: Option<VertexId> = None;
    if let Some(Syl::Trivial { vertex, inverse }) = rest.first() {
        if !inverse {
            return Err(WordError::Literal(
                "a leading trivial marker must be inverse (`eV^`)".into(),
            ));
        }
        lead_trivial = Some(*vertex);
        rest = &rest[1..];
    }
    if let Some(Syl::Trivial { vertex, inverse }) = rest.last() {
        if *inverse {
            return Err(WordError::Literal(
                "a trailing trivial marker must be direct (`eV`)".into(),
            ));
        }
        tail_trivial = Some(*vertex);
        rest = &rest[..rest.len() - 1];
    }
    if rest.is_empty() {
        return Err(WordError::Literal("no letters between trivial markers".into()));
    }

    // Maximal runs: an inverse run is one `p` syllable (letters are read
    // valley-to-top, so traversal order is reversed), a direct run one `q`.
    let mut runs: Vec<(bool, Vec<crate::presentation::ArrowId>)> = Vec::new();
    for syl in rest {
        let (id, inverse) = match syl {
            Syl::Arrow { id, inverse } => (*id, *inverse),
            Syl::Trivial { .. } => {
                return Err(WordError::Literal("trivial marker inside a word".into()))
            }
        };
        match runs.last_mut() {
            Some((inv, arrows)) if *inv == inverse => arrows.push(id),
            _ => runs.push((inverse, vec![id])),
        }
    }

    let path_of_run = |inverse: bool, arrows: &[crate::presentation::ArrowId]| -> Result<Path, WordError> {
        let traversal: Vec<_> = if inverse {
            arrows.iter().rev().copied().collect()
        } else {
            arrows.to_vec()
        };
        let start = quiver.source(traversal[0]);
        let path = Path::new(quiver, start, traversal.clone()).ok_or_else(|| {
            WordError::Literal("letters do not compose into a path".into())
        })?;
        if !alg.is_nonzero(&path) {
            return Err(WordError::ZeroSyllable(path.display(quiver).to_string()));
        }
        Ok(path)
    };

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending_p: Option<Path> = None;
    for (inverse, arrows) in &runs {
        let path = path_of_run(*inverse, arrows)?;
        if *inverse {
            if let Some(prev) = pending_p.take() {
                // Two adjacent inverse runs cannot occur in a valid word.
                let _ = prev;
                return Err(WordError::Literal("two adjacent inverse syllables".into()));
            }
            pending_p = Some(path);
        } else {
            let p = pending_p
                .take()
                .unwrap_or_else(|| Path::trivial(path.start()));
            pairs.push(Pair::new(p, path));
        }
    }
    if let Some(p) = pending_p {
        let v = p.start();
        pairs.push(Pair::new(p, Path::trivial(v)));
    }

    if let Some(v) = lead_trivial {
        let first = &pairs[0];
        let claimed_ok = if first.p.is_trivial() {
            first.vertex() == v
        } else {
            false
        };
        if !claimed_ok {
            return Err(WordError::Literal(format!(
                "leading trivial marker e{} does not match the word",
                quiver.label(v)
            )));
        }
    }
    if let Some(v) = tail_trivial {
        let last = pairs.last().unwrap();
        let claimed_ok = last.q.is_trivial() && last.vertex() == v;
        if !claimed_ok {
            return Err(WordError::Literal(format!(
                "trailing trivial marker e{} does not match the word",
                quiver.label(v)
            )));
        }
    }
    Ok(pairs)
}

/// Parses `[u]* core *[v]` (either period optional) into a word.
pub fn parse_word_literal(alg: &StringAlgebra, text: &str) -> Result<WordLiteral, WordError> {
    let toks = tokenize(text)?;
    let mut i = 0;

    let parse_block = |toks: &[Tok], i: &mut usize| -> Result<Vec<Syl>, WordError> {
        let mut out = Vec::new();
        while let Some(Tok::Letter { name, inverse }) = toks.get(*i) {
            out.push(resolve(alg, name, *inverse)?);
            *i += 1;
        }
        Ok(out)
    };

    let mut left: Option<Vec<Syl>> = None;
    if toks.get(i) == Some(&Tok::Open) {
        i += 1;
        let block = parse_block(&toks, &mut i)?;
        if toks.get(i) != Some(&Tok::Close) {
            return Err(WordError::Literal("expected `]`".into()));
        }
        i += 1;
        if toks.get(i) != Some(&Tok::Star) {
            return Err(WordError::Literal("expected `*` after a left period".into()));
        }
        i += 1;
        left = Some(block);
    }
    let core = parse_block(&toks, &mut i)?;
    let mut right: Option<Vec<Syl>> = None;
    if toks.get(i) == Some(&Tok::Star) {
        i += 1;
        if toks.get(i) != Some(&Tok::Open) {
            return Err(WordError::Literal("expected `[` after `*`".into()));
        }
        i += 1;
        let block = parse_block(&toks, &mut i)?;
        if toks.get(i) != Some(&Tok::Close) {
            return Err(WordError::Literal("expected `]`".into()));
        }
        i += 1;
        right = Some(block);
    }
    if i != toks.len() {
        return Err(WordError::Literal("trailing tokens after the word".into()));
    }

    let core_word = FiniteWord::from_pairs(alg, letters_to_pairs(alg, &core)?)?;
    if left.is_none() && right.is_none() {
        return Ok(WordLiteral::Finite(core_word));
    }
    let left_block = left
        .map(|syls| PeriodBlock::new(alg, letters_to_pairs(alg, &syls)?))
        .transpose()?;
    let right_block = right
        .map(|syls| PeriodBlock::new(alg, letters_to_pairs(alg, &syls)?))
        .transpose()?;
    Ok(WordLiteral::Periodic(EventuallyPeriodicWord::new(
        alg, left_block, core_word, right_block,
    )?))
}

fn push_pair_letters(alg: &StringAlgebra, pair: &Pair, out: &mut Vec<String>, mark_trivial: bool) {
    let quiver = alg.quiver();
    if pair.p.is_trivial() && pair.q.is_trivial() {
        out.push(format!("e{}", quiver.label(pair.vertex())));
        return;
    }
    if pair.p.is_trivial() {
        if mark_trivial {
            out.push(format!("e{}^", quiver.label(pair.vertex())));
        }
    } else {
        for &a in pair.p.arrows().iter().rev() {
            out.push(format!("{}^", quiver.arrow_name(a)));
        }
    }
    if pair.q.is_trivial() {
        if mark_trivial {
            out.push(format!("e{}", quiver.label(pair.vertex())));
        }
    } else {
        for &a in pair.q.arrows() {
            out.push(quiver.arrow_name(a).to_string());
        }
    }
}

fn finite_letters(alg: &StringAlgebra, w: &FiniteWord, mark_flanks: bool) -> Vec<String> {
    let mut out = Vec::new();
    for (i, pair) in w.pairs().iter().enumerate() {
        let mark = mark_flanks && (i == 0 || i + 1 == w.pairs().len());
        push_pair_letters(alg, pair, &mut out, mark);
    }
    out
}

/// Compact literal of a word (no trivial flank markers except for the
/// trivial word itself).
pub fn print_word_literal(alg: &StringAlgebra, w: &EventuallyPeriodicWord) -> String {
    print_literal(alg, w, false)
}

fn print_literal(alg: &StringAlgebra, w: &EventuallyPeriodicWord, mark_flanks: bool) -> String {
    let mut parts: Vec<String> = Vec::new();
    if let Some(block) = &w.left {
        let letters = finite_letters(
            alg,
            &FiniteWord::from_pairs(alg, block.pairs().to_vec()).expect("period is a word"),
            false,
        );
        parts.push(format!("[{}]*", letters.join(" ")));
    }
    parts.extend(finite_letters(alg, &w.core, mark_flanks));
    if let Some(block) = &w.right {
        let letters = finite_letters(
            alg,
            &FiniteWord::from_pairs(alg, block.pairs().to_vec()).expect("period is a word"),
            false,
        );
        parts.push(format!("*[{}]", letters.join(" ")));
    }
    parts.join(" ")
}

/// Literal of a centered word with the trivial flank syllables of the core
/// made explicit (so the termination sides are visible).
pub fn print_centered_literal(alg: &StringAlgebra, w: &CenteredWord) -> String {
    print_literal(alg, &w.word, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_finite_word() {
        let alg = fixtures::e23();
        let lit = parse_word_literal(&alg, "b a^ b").unwrap();
        let WordLiteral::Finite(w) = lit else { panic!("expected finite") };
        assert_eq!(w.len(), 2);
        assert!(w.pairs()[0].p.is_trivial());
        assert_eq!(print_word_literal(&alg, &EventuallyPeriodicWord::finite(w)), "b a^ b");
    }

    #[test]
    fn parse_multi_arrow_syllable() {
        let alg = fixtures::e23();
        // (g a)^{-1} b: the projective word at vertex 1.
        let lit = parse_word_literal(&alg, "g^ a^ b").unwrap();
        let WordLiteral::Finite(w) = lit else { panic!("expected finite") };
        assert_eq!(w.len(), 1);
        assert_eq!(w.pairs()[0].p.len(), 2);
        assert_eq!(w.pairs()[0].q.len(), 1);
    }

    #[test]
    fn parse_trivial_word() {
        let alg = fixtures::e23();
        let lit = parse_word_literal(&alg, "e1").unwrap();
        let WordLiteral::Finite(w) = lit else { panic!("expected finite") };
        assert!(w.is_trivial());
    }

    #[test]
    fn parse_periodic_word() {
        let alg = fixtures::e23();
        let lit = parse_word_literal(&alg, "e1^ b *[a^ b]").unwrap();
        let WordLiteral::Periodic(w) = lit else { panic!("expected periodic") };
        assert!(w.left.is_none());
        assert_eq!(w.core.len(), 1);
        assert_eq!(w.right.as_ref().unwrap().len(), 1);
    }

    #[test]
    fn unknown_letter_is_reported() {
        let alg = fixtures::e23();
        assert!(matches!(
            parse_word_literal(&alg, "a z"),
            Err(WordError::UnknownLetter(z)) if z == "z"
        ));
    }

    #[test]
    fn zero_syllable_rejected() {
        let alg = fixtures::e23();
        // b then g composes in the quiver but is a relation.
        assert!(matches!(
            parse_word_literal(&alg, "b g"),
            Err(WordError::ZeroSyllable(_))
        ));
    }

    #[test]
    fn roundtrip_through_literals() {
        let alg = fixtures::e17();
        for text in ["a9_4", "a4_6^ a4_2", "a4_2 a1_2^", "[a12_5^ a12_11 a7_11^ a7_5]* a12_5^ a12_11 *[a7_11^ a7_5 a12_5^ a12_11]"] {
            let lit = parse_word_literal(&alg, text).unwrap();
            let w = lit.into_periodic();
            assert_eq!(print_word_literal(&alg, &w), text);
        }
    }
}
