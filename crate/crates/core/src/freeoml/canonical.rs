//! Smallest representative terms for each Beran number.
//!
//! Terms over `a, b, 0, 1` are enumerated by connective count. A term wins if
//! it has the fewest connectives; ties go to the top connective in the order
//! complement < meet < join, then to the lexicographically smallest printed
//! form. Within one size class printed terms are prefix-free, so the best term
//! of a given value and size is always assembled from best subterms, and only
//! one candidate per (value, size) needs to be kept.

use std::sync::OnceLock;

use super::{FreeElem, FreeOmlError};
use crate::term::Term;

struct Cand {
    term: Term,
    text: String,
}

fn rank(t: &Term) -> usize {
    match t {
        Term::Complement(_) => 0,
        Term::Meet(..) => 1,
        _ => 2,
    }
}

fn offer(slot: &mut Option<Cand>, term: &Term, text: &str) {
    if slot.as_ref().is_none_or(|c| text < c.text.as_str()) {
        *slot = Some(Cand {
            term: term.clone(),
            text: text.to_owned(),
        });
    }
}

fn build() -> Vec<Term> {
    let slot = |e: FreeElem| usize::from(e.beran()) - 1;
    // by_size[k][v]: lexicographically least term of size k with value v
    let mut by_size: Vec<Vec<Option<Cand>>> = Vec::new();
    let mut found: Vec<Option<Term>> = vec![None; 96];

    let mut level: Vec<Option<Cand>> = (0..96).map(|_| None).collect();
    for (e, t) in [
        (FreeElem::ZERO, Term::Zero),
        (FreeElem::ONE, Term::One),
        (FreeElem::A, Term::var("a")),
        (FreeElem::B, Term::var("b")),
    ] {
        let text = t.to_string();
        offer(&mut level[slot(e)], &t, &text);
        found[slot(e)] = Some(t);
    }
    by_size.push(level);

    let value = |n: usize| FreeElem::from_beran(n + 1).unwrap();
    while found.iter().any(Option::is_none) {
        let k = by_size.len();
        let mut level: Vec<Option<Cand>> = (0..96).map(|_| None).collect();
        let mut ranked: Vec<[Option<Cand>; 3]> = (0..96).map(|_| [None, None, None]).collect();
        let mut consider = |v: FreeElem, t: Term| {
            let text = t.to_string();
            let s = slot(v);
            offer(&mut ranked[s][rank(&t)], &t, &text);
            offer(&mut level[s], &t, &text);
        };

        for (v, c) in by_size[k - 1].iter().enumerate() {
            if let Some(c) = c {
                consider(value(v).complement(), Term::complement(c.term.clone()));
            }
        }
        for i in 0..k {
            for (v1, c1) in by_size[i].iter().enumerate() {
                let Some(c1) = c1 else { continue };
                for (v2, c2) in by_size[k - 1 - i].iter().enumerate() {
                    let Some(c2) = c2 else { continue };
                    let (p, q) = (value(v1), value(v2));
                    consider(p.meet(q), Term::meet(c1.term.clone(), c2.term.clone()));
                    consider(p.join(q), Term::join(c1.term.clone(), c2.term.clone()));
                }
            }
        }

        for (s, ranks) in ranked.into_iter().enumerate() {
            if found[s].is_none() {
                found[s] = ranks.into_iter().flatten().next().map(|c| c.term);
            }
        }
        by_size.push(level);
    }
    found.into_iter().map(Option::unwrap).collect()
}

fn table() -> &'static [Term] {
    static CACHE: OnceLock<Vec<Term>> = OnceLock::new();
    CACHE.get_or_init(build)
}

/// Smallest term over `a, b` whose value is Beran number `n`, with `a` and
/// `b` bound to the generators by name.
pub fn canonical_term(n: usize) -> Result<Term, FreeOmlError> {
    if !(1..=96).contains(&n) {
        return Err(FreeOmlError::Range(n));
    }
    Ok(table()[n - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeoml::apply_binary;

    #[test]
    fn small_indices() {
        assert_eq!(canonical_term(22).unwrap(), Term::var("a"));
        assert_eq!(canonical_term(1).unwrap(), Term::Zero);
        assert_eq!(canonical_term(96).unwrap(), Term::One);
        assert_eq!(canonical_term(75).unwrap().to_string(), "a'");
        assert!(canonical_term(0).is_err());
    }

    #[test]
    fn every_canonical_term_evaluates_back() {
        for n in 1..=96 {
            let t = canonical_term(n).unwrap();
            let v = apply_binary(&t, FreeElem::A, FreeElem::B).unwrap();
            assert_eq!(usize::from(v.beran()), n, "{t}");
        }
    }
}
