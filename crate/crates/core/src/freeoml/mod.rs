//! The free orthomodular lattice on two generators, realized as the direct
//! product `MO2 × 2⁴` (96 elements), with its Beran numbering.
//!
//! Element `(m, v)` has Beran number `16·(m−1) + v`, where `m` indexes the
//! MO2 part in the order `0, x, y, y', x', 1` and `v` indexes the Boolean part
//! in the order of [`BoolPart::ORDER`]. The generators are `a = (x, 1100)` and
//! `b = (y, 1010)`; the Boolean coordinates stand for `(a∩b, a∩b', a'∩b, a'∩b')`.

mod anchors;
mod canonical;
mod closure;
mod table;

pub use anchors::{anchor_suite, errata, Anchor, AnchorGroup, Erratum};
pub use canonical::canonical_term;
pub use closure::closure;
pub use table::{diff_table, product_table, TableMismatch, TABLE_1};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::lattice::{evaluate, Ortholattice};
use crate::model::Model;
use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeOmlError {
    #[error("term has {0} distinct variables; at most 2 are allowed")]
    TooManyVariables(usize),
    #[error("Beran number {0} is outside 1..96")]
    Range(usize),
    #[error("operation `{term}` may only use the variables a and b")]
    BadOperation { term: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mo2Part {
    Zero,
    X,
    Y,
    YComp,
    XComp,
    One,
}

impl Mo2Part {
    pub const ALL: [Mo2Part; 6] = [
        Mo2Part::Zero,
        Mo2Part::X,
        Mo2Part::Y,
        Mo2Part::YComp,
        Mo2Part::XComp,
        Mo2Part::One,
    ];

    /// Canonical index 1..=6.
    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_index(m: u8) -> Option<Mo2Part> {
        Self::ALL.get(usize::from(m).checked_sub(1)?).copied()
    }

    pub fn complement(self) -> Mo2Part {
        Self::ALL[5 - self as usize]
    }

    pub fn meet(self, other: Mo2Part) -> Mo2Part {
        match (self, other) {
            (p, q) if p == q => p,
            (Mo2Part::One, q) => q,
            (p, Mo2Part::One) => p,
            _ => Mo2Part::Zero,
        }
    }

    pub fn join(self, other: Mo2Part) -> Mo2Part {
        match (self, other) {
            (p, q) if p == q => p,
            (Mo2Part::Zero, q) => q,
            (p, Mo2Part::Zero) => p,
            _ => Mo2Part::One,
        }
    }

    pub fn le(self, other: Mo2Part) -> bool {
        self.meet(other) == self
    }

    fn label(self) -> &'static str {
        match self {
            Mo2Part::Zero => "0",
            Mo2Part::X => "x",
            Mo2Part::Y => "y",
            Mo2Part::YComp => "y'",
            Mo2Part::XComp => "x'",
            Mo2Part::One => "1",
        }
    }
}

/// Four Boolean coordinates packed as bits `(a∩b, a∩b', a'∩b, a'∩b')`, most
/// significant first, so `0b1100` is the Boolean part of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoolPart(u8);

impl BoolPart {
    /// Canonical order; position + 1 is the index `v`.
    pub const ORDER: [u8; 16] = [
        0b0000, 0b1000, 0b0100, 0b0010, 0b0001, 0b1100, 0b1010, 0b1001, 0b0110, 0b0101, 0b0011,
        0b1110, 0b1101, 0b1011, 0b0111, 0b1111,
    ];

    pub fn new(bits: u8) -> Option<BoolPart> {
        (bits < 16).then_some(BoolPart(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Canonical index 1..=16.
    pub fn index(self) -> u8 {
        Self::ORDER.iter().position(|&b| b == self.0).unwrap() as u8 + 1
    }

    pub fn from_index(v: u8) -> Option<BoolPart> {
        Self::ORDER
            .get(usize::from(v).checked_sub(1)?)
            .map(|&b| BoolPart(b))
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.weight().is_multiple_of(2)
    }

    pub fn complement(self) -> BoolPart {
        BoolPart(!self.0 & 0xf)
    }

    pub fn meet(self, other: BoolPart) -> BoolPart {
        BoolPart(self.0 & other.0)
    }

    pub fn join(self, other: BoolPart) -> BoolPart {
        BoolPart(self.0 | other.0)
    }
}

impl fmt::Display for BoolPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04b}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeElem {
    pub mo2: Mo2Part,
    pub boolean: BoolPart,
}

impl FreeElem {
    pub const ZERO: FreeElem = FreeElem {
        mo2: Mo2Part::Zero,
        boolean: BoolPart(0b0000),
    };
    pub const ONE: FreeElem = FreeElem {
        mo2: Mo2Part::One,
        boolean: BoolPart(0b1111),
    };
    /// The first generator.
    pub const A: FreeElem = FreeElem {
        mo2: Mo2Part::X,
        boolean: BoolPart(0b1100),
    };
    /// The second generator.
    pub const B: FreeElem = FreeElem {
        mo2: Mo2Part::Y,
        boolean: BoolPart(0b1010),
    };

    pub fn new(mo2: Mo2Part, boolean: BoolPart) -> FreeElem {
        FreeElem { mo2, boolean }
    }

    pub fn beran(self) -> u8 {
        16 * (self.mo2.index() - 1) + self.boolean.index()
    }

    pub fn from_beran(n: usize) -> Result<FreeElem, FreeOmlError> {
        if !(1..=96).contains(&n) {
            return Err(FreeOmlError::Range(n));
        }
        let n = (n - 1) as u8;
        Ok(FreeElem {
            mo2: Mo2Part::from_index(n / 16 + 1).unwrap(),
            boolean: BoolPart::from_index(n % 16 + 1).unwrap(),
        })
    }

    /// All 96 elements in Beran order.
    pub fn all() -> impl Iterator<Item = FreeElem> {
        (1..=96).map(|n| FreeElem::from_beran(n).unwrap())
    }

    pub fn complement(self) -> FreeElem {
        FreeElem::new(self.mo2.complement(), self.boolean.complement())
    }

    pub fn meet(self, other: FreeElem) -> FreeElem {
        FreeElem::new(self.mo2.meet(other.mo2), self.boolean.meet(other.boolean))
    }

    pub fn join(self, other: FreeElem) -> FreeElem {
        FreeElem::new(self.mo2.join(other.mo2), self.boolean.join(other.boolean))
    }

    /// Lattice order (the `Ord` impl orders by Beran number instead).
    pub fn is_below(self, other: FreeElem) -> bool {
        self.mo2.le(other.mo2) && self.boolean.meet(other.boolean) == self.boolean
    }
}

impl Ord for FreeElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.beran().cmp(&other.beran())
    }
}

impl PartialOrd for FreeElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mo2.label(), self.boolean)
    }
}

/// `MO2 × 2⁴` as an ortholattice value.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeOml;

impl Ortholattice for FreeOml {
    type Elem = FreeElem;

    fn zero(&self) -> FreeElem {
        FreeElem::ZERO
    }
    fn one(&self) -> FreeElem {
        FreeElem::ONE
    }
    fn meet(&self, a: &FreeElem, b: &FreeElem) -> FreeElem {
        a.meet(*b)
    }
    fn join(&self, a: &FreeElem, b: &FreeElem) -> FreeElem {
        a.join(*b)
    }
    fn ortho(&self, a: &FreeElem) -> FreeElem {
        a.complement()
    }
    fn le(&self, a: &FreeElem, b: &FreeElem) -> bool {
        a.is_below(*b)
    }
}

/// Evaluates a term of at most two variables; the first variable to occur
/// is bound to generator `a`, the second to `b`.
pub fn eval2(t: &Term) -> Result<FreeElem, FreeOmlError> {
    let vars = t.variables();
    if vars.len() > 2 {
        return Err(FreeOmlError::TooManyVariables(vars.len()));
    }
    let env = |name: &str| match vars.iter().position(|v| v == name) {
        Some(0) => Some(FreeElem::A),
        Some(_) => Some(FreeElem::B),
        None => None,
    };
    Ok(evaluate(&FreeOml, t, &env).expect("all variables bound"))
}

/// Beran number of a term of at most two variables.
pub fn beran_of(t: &Term) -> Result<u8, FreeOmlError> {
    eval2(t).map(FreeElem::beran)
}

/// Applies a two-variable operation term, binding `a` and `b` by name.
pub fn apply_binary(op: &Term, a: FreeElem, b: FreeElem) -> Result<FreeElem, FreeOmlError> {
    let env = |name: &str| match name {
        "a" => Some(a),
        "b" => Some(b),
        _ => None,
    };
    evaluate(&FreeOml, op, &env).map_err(|_| FreeOmlError::BadOperation {
        term: op.to_string(),
    })
}

/// The 96-element lattice as a finite [`Model`] named `free2`; element `i`
/// (zero-based) is Beran number `i + 1`, named `B<n>`.
pub fn as_model() -> Model {
    let elems: Vec<FreeElem> = FreeElem::all().collect();
    let names = elems.iter().map(|e| format!("B{}", e.beran())).collect();
    let n = elems.len();
    let mut le = vec![false; n * n];
    for (i, p) in elems.iter().enumerate() {
        for (j, q) in elems.iter().enumerate() {
            le[i * n + j] = p.is_below(*q);
        }
    }
    let ortho = elems.iter().map(|e| e.complement().beran() as usize - 1).collect();
    Model::from_order("free2", names, le, ortho).expect("MO2 x 2^4 is an ortholattice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn beran(text: &str) -> u8 {
        beran_of(&Term::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn numbering_examples() {
        assert_eq!(FreeElem::ZERO.beran(), 1);
        assert_eq!(FreeElem::ONE.beran(), 96);
        assert_eq!(FreeElem::B.beran(), 39);
        let a_comp = FreeElem::new(Mo2Part::XComp, BoolPart::new(0b0011).unwrap());
        let b_comp = FreeElem::new(Mo2Part::YComp, BoolPart::new(0b0101).unwrap());
        assert_eq!(a_comp.beran(), 75);
        assert_eq!(b_comp.beran(), 58);
    }

    #[test]
    fn from_beran_rejects_out_of_range() {
        assert_eq!(FreeElem::from_beran(0), Err(FreeOmlError::Range(0)));
        assert_eq!(FreeElem::from_beran(97), Err(FreeOmlError::Range(97)));
    }

    #[test]
    fn eval2_examples() {
        assert_eq!(beran("a"), 22);
        assert_eq!(beran("a ==0 b"), 88);
        assert_eq!(beran("(a ->1 b) ^ (b ->0 a)"), 72);
        assert_eq!(beran("a ==5 0"), 75);
        assert_eq!(
            eval2(&Term::parse("a ==5 0").unwrap()).unwrap(),
            FreeElem::A.complement()
        );
    }

    #[test]
    fn first_variable_binds_to_a() {
        assert_eq!(beran("-(-(x ==1 y) ==1 y)"), 22);
        assert_eq!(beran("y ^ x"), beran("a ^ b"));
    }

    #[test]
    fn three_variables_rejected() {
        assert_eq!(
            eval2(&Term::parse("a ^ b ^ c").unwrap()),
            Err(FreeOmlError::TooManyVariables(3))
        );
    }

    #[test]
    fn bool_order_is_a_permutation() {
        let mut seen = [false; 16];
        for b in BoolPart::ORDER {
            seen[b as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        for v in 1..=16 {
            let b = BoolPart::from_index(v).unwrap();
            assert_eq!(b.index(), v);
            assert_eq!(b.complement().index(), 17 - v);
        }
    }

    #[test]
    fn mo2_complement_reverses_index() {
        for m in Mo2Part::ALL {
            assert_eq!(m.complement().index(), 7 - m.index());
        }
    }

    #[test]
    fn exported_model() {
        let m = as_model();
        assert_eq!(m.len(), 96);
        let e88 = m.index_of("B88").unwrap();
        assert_eq!(m.name_of(m.ortho(e88)), "B9");
    }

    proptest! {
        #[test]
        fn beran_round_trip(n in 1usize..=96) {
            let e = FreeElem::from_beran(n).unwrap();
            prop_assert_eq!(usize::from(e.beran()), n);
            prop_assert_eq!(usize::from(e.complement().beran()), 97 - n);
        }

        #[test]
        fn homomorphism(p in 1usize..=96, q in 1usize..=96) {
            let (p, q) = (FreeElem::from_beran(p).unwrap(), FreeElem::from_beran(q).unwrap());
            let env = |n: &str| match n { "s" => Some(p), "t" => Some(q), _ => None };
            let ev = |text: &str| evaluate(&FreeOml, &Term::parse(text).unwrap(), &env).unwrap();
            prop_assert_eq!(ev("s'"), p.complement());
            prop_assert_eq!(ev("s ^ t"), p.meet(q));
            prop_assert_eq!(ev("s v t"), p.join(q));
            prop_assert_eq!(ev("(s ^ t)'"), p.complement().join(q.complement()));
        }
    }
}
