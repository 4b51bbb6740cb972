//! Example presentations used across the test suites, the benchmarks, and
//! the documentation.
//!
//! `e4`/`e23` are the two-vertex algebras with arrows `a`, `b` (and `g`,
//! `d`); `e17`/`e18` are the twelve-vertex pair differing in two arrows;
//! `e24` is the eight-vertex algebra whose simple at vertex 1 has a
//! four-fold simple multiplicity in the top of its minimal approximation.

use crate::presentation::{parse_presentation, StringAlgebra};

/// Two vertices, arrows `a,b: 1 -> 2`, `g: 2 -> 1`; relations `ga`, `gb`,
/// `bg` (traversal order). Dimension 6.
pub const E23_TEXT: &str = "\
vertices: 1 2
arrow a: 1 -> 2
arrow b: 1 -> 2
arrow g: 2 -> 1
zero: g.a
zero: g.b
zero: b.g
";

/// Two vertices, arrows `a,b: 1 -> 2`, `g,d: 2 -> 1`; dimension 8. The
/// nonzero length-2 paths are `a.g` and `b.d`.
pub const E4_TEXT: &str = "\
vertices: 1 2
arrow a: 1 -> 2
arrow b: 1 -> 2
arrow g: 2 -> 1
arrow d: 2 -> 1
zero: a.d
zero: b.g
zero: g.a
zero: g.b
zero: d.a
zero: d.b
";

/// Twelve vertices, 21 arrows (`aI_J: I -> J`), dimension 49. One relation
/// has length 4.
pub const E17_TEXT: &str = "\
vertices: 1 2 3 4 5 6 7 8 9 10 11 12
arrow a1_2: 1 -> 2
arrow a1_3: 1 -> 3
arrow a2_1: 2 -> 1
arrow a3_7: 3 -> 7
arrow a3_9: 3 -> 9
arrow a4_2: 4 -> 2
arrow a4_6: 4 -> 6
arrow a5_3: 5 -> 3
arrow a5_8: 5 -> 8
arrow a6_9: 6 -> 9
arrow a7_5: 7 -> 5
arrow a7_11: 7 -> 11
arrow a8_1: 8 -> 1
arrow a8_6: 8 -> 6
arrow a9_4: 9 -> 4
arrow a9_10: 9 -> 10
arrow a10_10: 10 -> 10
arrow a11_7: 11 -> 7
arrow a11_12: 11 -> 12
arrow a12_5: 12 -> 5
arrow a12_11: 12 -> 11
zero: a1_2.a2_1
zero: a1_3.a3_9
zero: a2_1.a1_2
zero: a2_1.a1_3
zero: a3_7.a7_5
zero: a3_7.a7_11
zero: a3_9.a9_4
zero: a3_9.a9_10
zero: a4_6.a6_9
zero: a5_3.a3_7
zero: a5_8.a8_1
zero: a6_9.a9_4
zero: a7_5.a5_3
zero: a7_11.a11_12
zero: a8_1.a1_3
zero: a9_4.a4_2
zero: a9_4.a4_6
zero: a9_10.a10_10
zero: a10_10.a10_10
zero: a11_7.a7_5
zero: a11_7.a7_11
zero: a11_12.a12_5
zero: a11_12.a12_11
zero: a12_5.a5_8
zero: a12_11.a11_7
zero: a5_8.a8_6.a6_9.a9_10
";

/// The twelve-vertex algebra obtained from `E17_TEXT` by deleting the
/// arrows `8 -> 1` and `12 -> 11`. Dimension 45.
pub const E18_TEXT: &str = "\
vertices: 1 2 3 4 5 6 7 8 9 10 11 12
arrow a1_2: 1 -> 2
arrow a1_3: 1 -> 3
arrow a2_1: 2 -> 1
arrow a3_7: 3 -> 7
arrow a3_9: 3 -> 9
arrow a4_2: 4 -> 2
arrow a4_6: 4 -> 6
arrow a5_3: 5 -> 3
arrow a5_8: 5 -> 8
arrow a6_9: 6 -> 9
arrow a7_5: 7 -> 5
arrow a7_11: 7 -> 11
arrow a8_6: 8 -> 6
arrow a9_4: 9 -> 4
arrow a9_10: 9 -> 10
arrow a10_10: 10 -> 10
arrow a11_7: 11 -> 7
arrow a11_12: 11 -> 12
arrow a12_5: 12 -> 5
zero: a1_2.a2_1
zero: a1_3.a3_9
zero: a2_1.a1_2
zero: a2_1.a1_3
zero: a3_7.a7_5
zero: a3_7.a7_11
zero: a3_9.a9_4
zero: a3_9.a9_10
zero: a4_6.a6_9
zero: a5_3.a3_7
zero: a6_9.a9_4
zero: a7_5.a5_3
zero: a7_11.a11_12
zero: a9_4.a4_2
zero: a9_4.a4_6
zero: a9_10.a10_10
zero: a10_10.a10_10
zero: a11_7.a7_5
zero: a11_7.a7_11
zero: a11_12.a12_5
zero: a12_5.a5_8
zero: a5_8.a8_6.a6_9.a9_10
";

/// Eight vertices, 13 arrows, dimension 29.
pub const E24_TEXT: &str = "\
vertices: 1 2 3 4 5 6 7 8
arrow a1_3: 1 -> 3
arrow a1_5: 1 -> 5
arrow a2_3: 2 -> 3
arrow a2_4: 2 -> 4
arrow a3_1: 3 -> 1
arrow a3_7: 3 -> 7
arrow a4_4: 4 -> 4
arrow a4_8: 4 -> 8
arrow a5_2: 5 -> 2
arrow a6_1: 6 -> 1
arrow a6_5: 6 -> 5
arrow a7_7: 7 -> 7
arrow a8_8: 8 -> 8
zero: a6_1.a1_5
zero: a3_1.a1_5
zero: a3_1.a1_3
zero: a5_2.a2_3
zero: a5_2.a2_4
zero: a1_3.a3_1
zero: a2_3.a3_7
zero: a2_4.a4_8
zero: a4_4.a4_4
zero: a1_5.a5_2
zero: a3_7.a7_7
zero: a7_7.a7_7
zero: a4_8.a8_8
zero: a8_8.a8_8
";

fn build(text: &str) -> StringAlgebra {
    parse_presentation(text)
        .expect("fixture parses")
        .validate()
        .expect("fixture is a string algebra")
}

pub fn e4() -> StringAlgebra {
    build(E4_TEXT)
}

pub fn e17() -> StringAlgebra {
    build(E17_TEXT)
}

pub fn e18() -> StringAlgebra {
    build(E18_TEXT)
}

pub fn e23() -> StringAlgebra {
    build(E23_TEXT)
}

pub fn e24() -> StringAlgebra {
    build(E24_TEXT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions() {
        assert_eq!(e4().dimension(), 8);
        assert_eq!(e23().dimension(), 6);
        assert_eq!(e17().dimension(), 49);
        assert_eq!(e18().dimension(), 45);
        assert_eq!(e24().dimension(), 29);
    }

    #[test]
    fn dimension_equals_projective_dimensions_summed() {
        // dim of the algebra = total vertex count over the projective graphs.
        for alg in [e4(), e23(), e17(), e18(), e24()] {
            let total: usize = alg
                .quiver()
                .vertices()
                .map(|v| alg.paths_from(v).count())
                .sum();
            assert_eq!(total, alg.dimension());
        }
    }
}
