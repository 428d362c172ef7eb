//! Equation, law and characterization checks over finite models.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ElemId, Model};
use crate::check::{Assignment, CheckResult, Mode};
use crate::lattice::{Ortholattice, Program};
use crate::term::{ConnIndex, Equation, Term};

/// `|m|^k`, or `None` on overflow.
pub fn assignment_count(m: &Model, vars: usize) -> Option<u64> {
    (m.len() as u64).checked_pow(u32::try_from(vars).ok()?)
}

fn bind(vars: &[String], values: &[ElemId]) -> Assignment<ElemId> {
    Assignment(vars.iter().cloned().zip(values.iter().copied()).collect())
}

/// Checks `eq` in `m`.
///
/// Exhaustive mode walks all `|m|^k` assignments in lexicographic order of
/// element indices and reports the least violation; `assignments_checked`
/// is then the witness's rank plus one. Random mode draws from a ChaCha8
/// stream seeded with `seed`, so equal seeds give equal verdicts.
pub fn check_equation(m: &Model, eq: &Equation, mode: Mode) -> CheckResult<ElemId> {
    let vars = eq.variables();
    let prog = Program::compile(&[&eq.lhs, &eq.rhs], &vars).expect("variables come from the equation");
    let rel = eq.rel;
    match mode {
        Mode::Exhaustive => {
            let domain: Vec<ElemId> = m.elements().collect();
            let hit = prog.find_first(m, &domain, |lat, out| !lat.related(rel, &out[0], &out[1]));
            match hit {
                Some(idx) => {
                    let rank = idx
                        .iter()
                        .fold(0u64, |acc, &i| acc * m.len() as u64 + i as u64);
                    let values: Vec<ElemId> = idx.iter().map(|&i| domain[i]).collect();
                    CheckResult::fails(bind(&vars, &values), rank + 1)
                }
                None => CheckResult::holds(assignment_count(m, vars.len()).unwrap_or(u64::MAX)),
            }
        }
        Mode::Random { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut values = vec![0; vars.len()];
            for t in 0..trials {
                for v in values.iter_mut() {
                    *v = rng.gen_range(0..m.len()) as ElemId;
                }
                let out = prog.eval(m, &values);
                if !m.related(rel, &out[0], &out[1]) {
                    return CheckResult::fails(bind(&vars, &values), t + 1);
                }
            }
            CheckResult::holds(trials)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// Involution, antitone complement, `p ^ p' = 0`, `p v p' = 1`, De Morgan.
    Ortholattice,
    /// `a <= b` implies `b = a v (a' ^ b)`.
    Oml,
    /// `(a' ^ (a v b)) v b' v (a ^ b) = 1`.
    Woml,
}

impl Law {
    pub fn parse(s: &str) -> Option<Law> {
        match s.to_ascii_lowercase().as_str() {
            "ortholattice" | "ol" => Some(Law::Ortholattice),
            "oml" => Some(Law::Oml),
            "woml" => Some(Law::Woml),
            _ => None,
        }
    }

    fn holds_at(self, m: &Model, a: ElemId, b: ElemId) -> bool {
        let (ac, bc) = (m.ortho(a), m.ortho(b));
        match self {
            Law::Ortholattice => {
                m.ortho(ac) == a
                    && (!m.le(a, b) || m.le(bc, ac))
                    && m.meet(a, ac) == m.bottom()
                    && m.join(a, ac) == m.top()
                    && m.ortho(m.meet(a, b)) == m.join(ac, bc)
                    && m.ortho(m.join(a, b)) == m.meet(ac, bc)
            }
            Law::Oml => !m.le(a, b) || b == m.join(a, m.meet(ac, b)),
            Law::Woml => {
                m.join(m.join(m.meet(ac, m.join(a, b)), bc), m.meet(a, b)) == m.top()
            }
        }
    }
}

/// Exhaustive pair check of `law`; the witness binds `a` and `b`.
pub fn check_law(m: &Model, law: Law) -> CheckResult<ElemId> {
    check_pairs(m, |a, b| law.holds_at(m, a, b))
}

fn check_pairs(m: &Model, ok: impl Fn(ElemId, ElemId) -> bool) -> CheckResult<ElemId> {
    let vars = ["a".to_string(), "b".to_string()];
    let mut checked = 0;
    for a in m.elements() {
        for b in m.elements() {
            checked += 1;
            if !ok(a, b) {
                return CheckResult::fails(bind(&vars, &[a, b]), checked);
            }
        }
    }
    CheckResult::holds(checked)
}

/// Checks `p ≡ᵢ q = 1 ⟺ p = q` over all pairs.
pub fn iff_characterization(m: &Model, i: ConnIndex) -> CheckResult<ElemId> {
    let vars = ["a".to_string(), "b".to_string()];
    let t = Term::equiv(i, Term::var("a"), Term::var("b"));
    let prog = Program::compile(&[&t], &vars).expect("a, b bound");
    check_pairs(m, |p, q| (prog.eval(m, &[p, q])[0] == m.top()) == (p == q))
}

/// `p` commutes with `q`: `p = (p ^ q) v (p ^ q')`.
pub fn commutes(m: &Model, p: ElemId, q: ElemId) -> bool {
    p == m.join(m.meet(p, q), m.meet(p, m.ortho(q)))
}

/// Distributivity `p ^ (q v r) = (p ^ q) v (p ^ r)` on every triple whose
/// members commute pairwise (in both directions).
pub fn foulis_holland_check(m: &Model) -> CheckResult<ElemId> {
    let vars = ["a".to_string(), "b".to_string(), "c".to_string()];
    let mutual = |p, q| commutes(m, p, q) && commutes(m, q, p);
    let mut checked = 0;
    for p in m.elements() {
        for q in m.elements().filter(|&q| mutual(p, q)) {
            for r in m.elements().filter(|&r| mutual(p, r) && mutual(q, r)) {
                checked += 1;
                if m.meet(p, m.join(q, r)) != m.join(m.meet(p, q), m.meet(p, r)) {
                    return CheckResult::fails(bind(&vars, &[p, q, r]), checked);
                }
            }
        }
    }
    CheckResult::holds(checked)
}
