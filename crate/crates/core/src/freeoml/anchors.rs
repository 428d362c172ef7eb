//! Reference Beran numbers for named two-variable expressions, and the
//! places where published values disagree with direct evaluation.

use super::{apply_binary, beran_of, BoolPart, FreeElem};
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorGroup {
    /// A single expression in `a, b` (bound by name).
    Term(&'static str),
    /// Every element with the given Boolean part except the classical one.
    Quantum { bits: u8, classical: u8 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    pub label: &'static str,
    pub group: AnchorGroup,
    pub expected: &'static [u8],
}

impl Anchor {
    pub fn computed(&self) -> Vec<u8> {
        match self.group {
            AnchorGroup::Term(text) => {
                let t = Term::parse(text).expect("anchor terms parse");
                vec![apply_binary(&t, FreeElem::A, FreeElem::B)
                    .expect("anchor terms use a, b")
                    .beran()]
            }
            AnchorGroup::Quantum { bits, classical } => FreeElem::all()
                .filter(|e| e.boolean == BoolPart::new(bits).unwrap() && e.beran() != classical)
                .map(FreeElem::beran)
                .collect(),
        }
    }

    pub fn holds(&self) -> bool {
        self.computed() == self.expected
    }
}

const fn term(label: &'static str, text: &'static str, expected: &'static [u8]) -> Anchor {
    Anchor {
        label,
        group: AnchorGroup::Term(text),
        expected,
    }
}

const fn quantum(label: &'static str, bits: u8, classical: u8, expected: &'static [u8]) -> Anchor {
    Anchor {
        label,
        group: AnchorGroup::Quantum { bits, classical },
        expected,
    }
}

const ANCHORS: &[Anchor] = &[
    term("classical 0", "0", &[1]),
    term("classical 1", "1", &[96]),
    term("variable a", "a", &[22]),
    term("variable b", "b", &[39]),
    term("complement a'", "a'", &[75]),
    term("complement b'", "b'", &[58]),
    quantum("quantum 0", 0b0000, 1, &[17, 33, 49, 65, 81]),
    quantum("quantum 1", 0b1111, 96, &[16, 32, 48, 64, 80]),
    quantum("quantum a", 0b1100, 22, &[6, 38, 54, 70, 86]),
    quantum("quantum b", 0b1010, 39, &[7, 23, 55, 71, 87]),
    quantum("quantum a'", 0b0011, 75, &[11, 27, 43, 59, 91]),
    quantum("quantum b'", 0b0101, 58, &[10, 26, 42, 74, 90]),
    term("equivalence 0", "a ==0 b", &[88]),
    term("equivalence 1", "a ==1 b", &[72]),
    term("equivalence 2", "a ==2 b", &[40]),
    term("equivalence 3", "a ==3 b", &[24]),
    term("equivalence 4", "a ==4 b", &[56]),
    term("equivalence 5", "a ==5 b", &[8]),
    term("implication 0", "a ->0 b", &[94]),
    term("implication 1", "a ->1 b", &[78]),
    term("implication 2", "a ->2 b", &[46]),
    term("implication 3", "a ->3 b", &[30]),
    term("implication 4", "a ->4 b", &[62]),
    term("implication 5", "a ->5 b", &[14]),
    term("nabla", "a nabla b", &[9]),
    term("plus l", "a +l b", &[25]),
    term("plus r", "a +r b", &[41]),
    term("plus l'", "a +lp b", &[73]),
    term("plus r'", "a +rp b", &[57]),
    term("delta", "a delta b", &[89]),
];

pub fn anchor_suite() -> &'static [Anchor] {
    ANCHORS
}

/// A published value that direct evaluation contradicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub published: String,
    pub computed: String,
    pub resolution: &'static str,
}

fn named(text: &str) -> u8 {
    let t = Term::parse(text).expect("erratum terms parse");
    apply_binary(&t, FreeElem::A, FreeElem::B)
        .expect("erratum terms use a, b")
        .beran()
}

/// Known discrepancies, each recomputed on every call.
pub fn errata() -> Vec<Erratum> {
    let printed_eq5 = named("(a v b) ^ (b' v a')");
    let eq5 = named("a ==5 b");
    let delta = named("a delta b");
    let sample = beran_of(&Term::parse("-(-(x ==1 y) ==1 y)").unwrap()).unwrap();
    vec![
        Erratum {
            id: "equivalence-5-formula",
            published: "(a v b) ^ (b' v a') = B8".into(),
            computed: format!("(a v b) ^ (b' v a') = B{printed_eq5}; (a ^ b) v (a' ^ b') = B{eq5}"),
            resolution: "==5 is defined as (a ^ b) v (a' ^ b')",
        },
        Erratum {
            id: "delta-value",
            published: "a delta b = B84".into(),
            computed: format!("a delta b = (a ==5 b)' = B{delta}"),
            resolution: "delta canonicalizes to 97 - 8",
        },
        Erratum {
            id: "complement-order",
            published: "a', b' = (58, 75)".into(),
            computed: format!("a' = B{}, b' = B{}", named("a'"), named("b'")),
            resolution: "complement symmetry 97 - n fixes a' = 75 and b' = 58",
        },
        Erratum {
            id: "beran-sample-output",
            published: "-(-(x ==1 y) ==1 y) -> 75 x".into(),
            computed: format!("-(-(x ==1 y) ==1 y) -> B{sample} with x bound to a"),
            resolution: "the first variable is bound to generator a",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_anchor_holds() {
        for a in anchor_suite() {
            assert!(a.holds(), "{}: {:?} != {:?}", a.label, a.computed(), a.expected);
        }
    }

    #[test]
    fn errata_values() {
        let e = errata();
        assert_eq!(e.len(), 4);
        assert!(e[0].computed.contains("B89") && e[0].computed.contains("B8"));
        assert!(e[1].computed.ends_with("B89"));
        assert!(e[3].computed.contains("B22"));
    }
}
