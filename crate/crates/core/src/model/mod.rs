//! Finite ortholattice models.
//!
//! A [`Model`] is built from a partial order and an orthocomplementation;
//! meets and joins are derived and cached, and construction fails unless the
//! result is a lattice with a valid orthocomplementation.

mod builtin;
mod check;
mod format;
mod theta;

pub use builtin::{builtin, woml20_profile, Gate, BUILTIN_NAMES};
pub use check::{
    assignment_count, check_equation, check_law, commutes, foulis_holland_check,
    iff_characterization, Law,
};
pub use format::load;
pub use theta::{theta_relation, CongruenceFailure, ThetaReport};

use std::fmt::Write as _;

use thiserror::Error;

use crate::lattice::Ortholattice;

pub type ElemId = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: {a} and {b} have no {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },
    #[error("not an ortholattice: {law} fails at {witness}")]
    NotOrtholattice { law: &'static str, witness: String },
    #[error("unknown model `{0}`")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    name: String,
    names: Vec<String>,
    le: Vec<bool>,
    ortho: Vec<ElemId>,
    meet: Vec<ElemId>,
    join: Vec<ElemId>,
    bottom: ElemId,
    top: ElemId,
}

impl Model {
    /// Builds and validates a model from a full order relation (`le[i * n + j]`
    /// is `i ≤ j`) and an orthocomplement map.
    pub fn from_order(
        name: impl Into<String>,
        names: Vec<String>,
        mut le: Vec<bool>,
        ortho: Vec<usize>,
    ) -> Result<Model, ModelError> {
        let n = names.len();
        if n == 0 || n > usize::from(ElemId::MAX) {
            return Err(ModelError::NotAPartialOrder(format!(
                "{n} elements (need 1..{})",
                ElemId::MAX
            )));
        }
        assert_eq!(le.len(), n * n, "order relation size");
        assert_eq!(ortho.len(), n, "orthocomplement size");
        let leq = |le: &[bool], i: usize, j: usize| le[i * n + j];

        for i in 0..n {
            le[i * n + i] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(&le, i, j) && leq(&le, j, i) {
                    return Err(ModelError::NotAPartialOrder(format!(
                        "{} and {} are mutually below each other",
                        names[i], names[j]
                    )));
                }
                for k in 0..n {
                    if leq(&le, i, j) && leq(&le, j, k) && !leq(&le, i, k) {
                        return Err(ModelError::NotAPartialOrder(format!(
                            "{} <= {} <= {} but not {} <= {}",
                            names[i], names[j], names[k], names[i], names[k]
                        )));
                    }
                }
            }
        }

        let bottom = (0..n).find(|&b| (0..n).all(|x| leq(&le, b, x)));
        let top = (0..n).find(|&t| (0..n).all(|x| leq(&le, x, t)));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(ModelError::NotAPartialOrder(
                "no global bottom or top".into(),
            ));
        };

        // glb(i, j): the lower bound every other lower bound sits below.
        let bound = |i: usize, j: usize, below: bool| -> Option<usize> {
            let is_bound = |x: usize| {
                if below {
                    leq(&le, x, i) && leq(&le, x, j)
                } else {
                    leq(&le, i, x) && leq(&le, j, x)
                }
            };
            let better = |x: usize, y: usize| if below { leq(&le, y, x) } else { leq(&le, x, y) };
            let mut best: Option<usize> = None;
            for x in (0..n).filter(|&x| is_bound(x)) {
                if best.is_none_or(|b| better(x, b)) {
                    best = Some(x);
                }
            }
            let best = best?;
            (0..n)
                .filter(|&x| is_bound(x))
                .all(|x| better(best, x))
                .then_some(best)
        };
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let pair_err = |missing| ModelError::NotALattice {
                    a: names[i].clone(),
                    b: names[j].clone(),
                    missing,
                };
                let g = bound(i, j, true).ok_or_else(|| pair_err("greatest lower bound"))?;
                let l = bound(i, j, false).ok_or_else(|| pair_err("least upper bound"))?;
                meet[i * n + j] = g as ElemId;
                meet[j * n + i] = g as ElemId;
                join[i * n + j] = l as ElemId;
                join[j * n + i] = l as ElemId;
            }
        }

        let model = Model {
            name: name.into(),
            le,
            ortho: ortho.iter().map(|&o| o as ElemId).collect(),
            meet,
            join,
            bottom: bottom as ElemId,
            top: top as ElemId,
            names,
        };
        if let Some(&bad) = ortho.iter().find(|&&o| o >= n) {
            return Err(ModelError::NotOrtholattice {
                law: "orthocomplement in range",
                witness: format!("index {bad}"),
            });
        }
        model.validate_ortho()?;
        Ok(model)
    }

    fn validate_ortho(&self) -> Result<(), ModelError> {
        let fail = |law, witness: String| Err(ModelError::NotOrtholattice { law, witness });
        for p in self.elements() {
            let pc = self.ortho(p);
            if self.ortho(pc) != p {
                return fail(
                    "involution p'' = p",
                    format!("p={} p''={}", self.name_of(p), self.name_of(self.ortho(pc))),
                );
            }
            if self.meet(p, pc) != self.bottom {
                return fail("p ^ p' = 0", format!("p={}", self.name_of(p)));
            }
            if self.join(p, pc) != self.top {
                return fail("p v p' = 1", format!("p={}", self.name_of(p)));
            }
            for q in self.elements() {
                if self.le(p, q) && !self.le(self.ortho(q), pc) {
                    return fail(
                        "p <= q implies q' <= p'",
                        format!("p={} q={}", self.name_of(p), self.name_of(q)),
                    );
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + Clone {
        0..self.names.len() as ElemId
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, e: ElemId) -> &str {
        &self.names[usize::from(e)]
    }

    pub fn index_of(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(|i| i as ElemId)
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    #[inline]
    pub fn le(&self, a: ElemId, b: ElemId) -> bool {
        self.le[usize::from(a) * self.len() + usize::from(b)]
    }

    #[inline]
    pub fn meet(&self, a: ElemId, b: ElemId) -> ElemId {
        self.meet[usize::from(a) * self.len() + usize::from(b)]
    }

    #[inline]
    pub fn join(&self, a: ElemId, b: ElemId) -> ElemId {
        self.join[usize::from(a) * self.len() + usize::from(b)]
    }

    #[inline]
    pub fn ortho(&self, a: ElemId) -> ElemId {
        self.ortho[usize::from(a)]
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> Vec<ElemId> {
        self.elements()
            .filter(|&a| a != self.bottom && self.covers(self.bottom, a))
            .collect()
    }

    /// Whether `q` covers `p`.
    pub fn covers(&self, p: ElemId, q: ElemId) -> bool {
        p != q
            && self.le(p, q)
            && !self
                .elements()
                .any(|r| r != p && r != q && self.le(p, r) && self.le(r, q))
    }

    /// Renders the model in the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("model {}\nelements", self.name);
        for n in &self.names {
            let _ = write!(out, " {n}");
        }
        let _ = writeln!(out, "\nbottom {}", self.name_of(self.bottom));
        let _ = writeln!(out, "top {}", self.name_of(self.top));
        for p in self.elements() {
            for q in self.elements() {
                if self.covers(p, q) {
                    let _ = writeln!(out, "cover {} {}", self.name_of(p), self.name_of(q));
                }
            }
        }
        for p in self.elements() {
            let q = self.ortho(p);
            if p <= q {
                let _ = writeln!(out, "ortho {} {}", self.name_of(p), self.name_of(q));
            }
        }
        out.push_str("end\n");
        out
    }
}

impl Ortholattice for Model {
    type Elem = ElemId;

    fn zero(&self) -> ElemId {
        self.bottom
    }
    fn one(&self) -> ElemId {
        self.top
    }
    #[inline]
    fn meet(&self, a: &ElemId, b: &ElemId) -> ElemId {
        Model::meet(self, *a, *b)
    }
    #[inline]
    fn join(&self, a: &ElemId, b: &ElemId) -> ElemId {
        Model::join(self, *a, *b)
    }
    #[inline]
    fn ortho(&self, a: &ElemId) -> ElemId {
        Model::ortho(self, *a)
    }
    #[inline]
    fn le(&self, a: &ElemId, b: &ElemId) -> bool {
        Model::le(self, *a, *b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> (Vec<String>, Vec<bool>) {
        let names = vec!["0".into(), "m".into(), "1".into()];
        let mut le = vec![false; 9];
        for i in 0..3 {
            for j in i..3 {
                le[i * 3 + j] = true;
            }
        }
        (names, le)
    }

    #[test]
    fn three_chain_has_no_orthocomplement() {
        let (names, le) = chain3();
        let err = Model::from_order("c3", names, le, vec![2, 1, 0]).unwrap_err();
        assert!(matches!(err, ModelError::NotOrtholattice { law: "p ^ p' = 0", .. }));
    }

    #[test]
    fn missing_meet_is_reported() {
        // 0 < p, q < r, s < 1 with both p and q below both r and s
        let names: Vec<String> = ["0", "p", "q", "r", "s", "1"].map(String::from).into();
        let n = names.len();
        let mut le = vec![false; n * n];
        let mut set = |i: usize, j: usize| le[i * n + j] = true;
        for j in 0..n {
            set(0, j);
            set(j, 5);
        }
        for (i, j) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            set(i, j);
        }
        let err = Model::from_order("bad", names, le, vec![5, 4, 3, 2, 1, 0]).unwrap_err();
        assert!(matches!(err, ModelError::NotALattice { .. }), "{err}");
    }

    #[test]
    fn cycle_is_not_a_partial_order() {
        let (names, mut le) = chain3();
        le[2 * 3] = true;
        assert!(matches!(
            Model::from_order("cyc", names, le, vec![2, 1, 0]),
            Err(ModelError::NotAPartialOrder(_))
        ));
    }
}
