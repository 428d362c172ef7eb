//! Least fixpoints of element sets under binary term operations.

use std::collections::BTreeSet;

use super::{FreeElem, FreeOml, FreeOmlError};
use crate::lattice::Program;
use crate::term::Term;

/// Closes `seeds` under every operation in `ops`.
///
/// Each operation is a term in the variables `a` and `b` (either may be
/// absent) applied to all ordered pairs of the current set. Complements are
/// only reachable through the supplied operations.
pub fn closure(seeds: &[FreeElem], ops: &[Term]) -> Result<BTreeSet<FreeElem>, FreeOmlError> {
    let vars = ["a".to_string(), "b".to_string()];
    let tables = ops
        .iter()
        .map(|op| {
            let prog = Program::compile(&[op], &vars).map_err(|_| FreeOmlError::BadOperation {
                term: op.to_string(),
            })?;
            let mut table = vec![FreeElem::ZERO; 96 * 96];
            for p in FreeElem::all() {
                for q in FreeElem::all() {
                    table[slot(p) * 96 + slot(q)] = prog.eval(&FreeOml, &[p, q])[0];
                }
            }
            Ok(table)
        })
        .collect::<Result<Vec<_>, FreeOmlError>>()?;

    let mut member = [false; 96];
    let mut reached = Vec::new();
    for &s in seeds {
        if !member[slot(s)] {
            member[slot(s)] = true;
            reached.push(s);
        }
    }
    loop {
        let snapshot = reached.clone();
        for table in &tables {
            for &p in &snapshot {
                for &q in &snapshot {
                    let r = table[slot(p) * 96 + slot(q)];
                    if !member[slot(r)] {
                        member[slot(r)] = true;
                        reached.push(r);
                    }
                }
            }
        }
        if reached.len() == snapshot.len() {
            break;
        }
    }
    Ok(reached.into_iter().collect())
}

fn slot(e: FreeElem) -> usize {
    usize::from(e.beran()) - 1
}
