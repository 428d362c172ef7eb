//! Products `(a →ᵢ b) ∩ (b →ⱼ a)` reduced to Beran numbers.

use super::beran_of;
use crate::term::{ConnIndex, Term};

/// Reference values, row `i` for `a →ᵢ b`, column `j` for `b →ⱼ a`.
pub const TABLE_1: [[u8; 6]; 6] = [
    [88, 56, 24, 40, 72, 8],
    [72, 8, 8, 8, 72, 8],
    [40, 8, 8, 40, 8, 8],
    [24, 8, 24, 8, 8, 8],
    [56, 56, 8, 8, 8, 8],
    [8, 8, 8, 8, 8, 8],
];

pub fn product_term(i: ConnIndex, j: ConnIndex) -> Term {
    let (a, b) = (Term::var("a"), Term::var("b"));
    Term::meet(
        Term::implies(i, a.clone(), b.clone()),
        Term::implies(j, b, a),
    )
}

pub fn product_table() -> [[u8; 6]; 6] {
    let mut out = [[0; 6]; 6];
    for i in ConnIndex::ALL {
        for j in ConnIndex::ALL {
            out[usize::from(i.get())][usize::from(j.get())] =
                beran_of(&product_term(i, j)).expect("two variables");
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: usize,
    pub col: usize,
    pub computed: u8,
    pub expected: u8,
}

pub fn diff_table(computed: &[[u8; 6]; 6], expected: &[[u8; 6]; 6]) -> Vec<TableMismatch> {
    let mut out = Vec::new();
    for row in 0..6 {
        for col in 0..6 {
            if computed[row][col] != expected[row][col] {
                out.push(TableMismatch {
                    row,
                    col,
                    computed: computed[row][col],
                    expected: expected[row][col],
                });
            }
        }
    }
    out
}
