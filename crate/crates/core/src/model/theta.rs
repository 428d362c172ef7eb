//! The relations `θᵢ = {(p, q) : p ≡ᵢ q = 1}`.

use super::{ElemId, Model};
use crate::lattice::Program;
use crate::term::{ConnIndex, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceFailure {
    /// `"meet"`, `"join"` or `"ortho"`.
    pub op: &'static str,
    pub left: (ElemId, ElemId),
    /// Second related pair; `None` for the unary case.
    pub right: Option<(ElemId, ElemId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    pub index: ConnIndex,
    pub pairs: Vec<(ElemId, ElemId)>,
    pub reflexive_failure: Option<ElemId>,
    pub symmetric_failure: Option<(ElemId, ElemId)>,
    pub transitive_failure: Option<(ElemId, ElemId, ElemId)>,
    pub congruence_failure: Option<CongruenceFailure>,
}

impl ThetaReport {
    pub fn is_equivalence(&self) -> bool {
        self.reflexive_failure.is_none()
            && self.symmetric_failure.is_none()
            && self.transitive_failure.is_none()
    }

    pub fn is_congruence(&self) -> bool {
        self.is_equivalence() && self.congruence_failure.is_none()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(p, q)| p == q) && self.reflexive_failure.is_none()
    }
}

pub fn theta_relation(m: &Model, i: ConnIndex) -> ThetaReport {
    let n = m.len();
    let vars = ["a".to_string(), "b".to_string()];
    let t = Term::equiv(i, Term::var("a"), Term::var("b"));
    let prog = Program::compile(&[&t], &vars).expect("a, b bound");
    let mut rel = vec![false; n * n];
    let mut pairs = Vec::new();
    for p in m.elements() {
        for q in m.elements() {
            if prog.eval(m, &[p, q])[0] == m.top() {
                rel[usize::from(p) * n + usize::from(q)] = true;
                pairs.push((p, q));
            }
        }
    }
    let related = |p: ElemId, q: ElemId| rel[usize::from(p) * n + usize::from(q)];

    let reflexive_failure = m.elements().find(|&p| !related(p, p));
    let symmetric_failure = pairs.iter().copied().find(|&(p, q)| !related(q, p));
    let transitive_failure = pairs.iter().find_map(|&(p, q)| {
        m.elements()
            .find(|&r| related(q, r) && !related(p, r))
            .map(|r| (p, q, r))
    });

    let mut congruence_failure = pairs
        .iter()
        .copied()
        .find(|&(p, q)| !related(m.ortho(p), m.ortho(q)))
        .map(|left| CongruenceFailure {
            op: "ortho",
            left,
            right: None,
        });
    if congruence_failure.is_none() {
        'outer: for &(p, q) in &pairs {
            for &(r, s) in &pairs {
                let failed = if !related(m.meet(p, r), m.meet(q, s)) {
                    "meet"
                } else if !related(m.join(p, r), m.join(q, s)) {
                    "join"
                } else {
                    continue;
                };
                congruence_failure = Some(CongruenceFailure {
                    op: failed,
                    left: (p, q),
                    right: Some((r, s)),
                });
                break 'outer;
            }
        }
    }

    ThetaReport {
        index: i,
        pairs,
        reflexive_failure,
        symmetric_failure,
        transitive_failure,
        congruence_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::builtin;

    fn ix(i: u8) -> ConnIndex {
        ConnIndex::new(i).unwrap()
    }

    #[test]
    fn o6_theta5_is_a_nontrivial_congruence() {
        let r = theta_relation(&builtin("o6").unwrap(), ix(5));
        assert!(r.is_congruence(), "{r:?}");
        assert!(!r.is_identity());
    }

    #[test]
    fn identity_in_oml_and_boolean() {
        let free2 = builtin("free2").unwrap();
        assert!(theta_relation(&free2, ix(5)).is_identity());
        assert!(theta_relation(&builtin("boolean_4").unwrap(), ix(0)).is_identity());
    }

    #[test]
    fn theta0_in_mo2_is_not_identity() {
        let r = theta_relation(&builtin("mo2").unwrap(), ix(0));
        assert!(!r.is_identity());
    }
}
