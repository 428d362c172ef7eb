//! The ortholattice interface shared by the free lattice, finite models and
//! subspace lattices, plus a compiled evaluator for terms.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::term::{Relation, Term};

pub trait Ortholattice {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn ortho(&self, a: &Self::Elem) -> Self::Elem;

    fn le(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.meet(a, b) == *a
    }

    /// Whether `lhs rel rhs` holds for two evaluated sides.
    fn related(&self, rel: Relation, lhs: &Self::Elem, rhs: &Self::Elem) -> bool {
        match rel {
            Relation::Eq => lhs == rhs,
            Relation::Le => self.le(lhs, rhs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("variable `{0}` is not bound")]
pub struct UnboundVariable(pub String);

/// Evaluates `term` (derived connectives included) with `env` supplying variables.
pub fn evaluate<L, F>(lat: &L, term: &Term, env: &F) -> Result<L::Elem, UnboundVariable>
where
    L: Ortholattice,
    F: Fn(&str) -> Option<L::Elem>,
{
    eval_primitive(lat, &term.expand(), env)
}

fn eval_primitive<L, F>(lat: &L, t: &Term, env: &F) -> Result<L::Elem, UnboundVariable>
where
    L: Ortholattice,
    F: Fn(&str) -> Option<L::Elem>,
{
    Ok(match t {
        Term::Var(name) => env(name).ok_or_else(|| UnboundVariable(name.clone()))?,
        Term::Zero => lat.zero(),
        Term::One => lat.one(),
        Term::Complement(x) => lat.ortho(&eval_primitive(lat, x, env)?),
        Term::Meet(l, r) => lat.meet(&eval_primitive(lat, l, env)?, &eval_primitive(lat, r, env)?),
        Term::Join(l, r) => lat.join(&eval_primitive(lat, l, env)?, &eval_primitive(lat, r, env)?),
        _ => unreachable!("expanded terms are primitive"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Var(usize),
    Zero,
    One,
    Ortho(usize),
    Meet(usize, usize),
    Join(usize, usize),
}

/// Straight-line register program for one or more terms over a fixed
/// variable list.
///
/// Common subterms are shared, and instructions are grouped by the highest
/// variable they depend on so that nested enumeration only recomputes what
/// changed.
#[derive(Debug, Clone)]
pub struct Program {
    ops: Vec<Op>,
    /// `levels[l]..levels[l + 1]` are the instructions whose deepest variable is `l - 1`.
    levels: Vec<usize>,
    outputs: Vec<usize>,
    vars: Vec<String>,
}

impl Program {
    pub fn compile(terms: &[&Term], vars: &[String]) -> Result<Program, UnboundVariable> {
        let mut b = Builder {
            ops: Vec::new(),
            level: Vec::new(),
            memo: HashMap::new(),
            vars,
        };
        let mut outputs = Vec::with_capacity(terms.len());
        for t in terms {
            outputs.push(b.emit(&t.expand())?);
        }

        // Stable sort by level keeps every operand ahead of its user.
        let mut order: Vec<usize> = (0..b.ops.len()).collect();
        order.sort_by_key(|&i| b.level[i]);
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let r = |i: usize| remap[i];
        let ops = order
            .iter()
            .map(|&old| match b.ops[old] {
                Op::Ortho(x) => Op::Ortho(r(x)),
                Op::Meet(x, y) => Op::Meet(r(x), r(y)),
                Op::Join(x, y) => Op::Join(r(x), r(y)),
                op => op,
            })
            .collect();
        let mut levels = vec![0; vars.len() + 2];
        for &old in &order {
            levels[b.level[old] + 1] += 1;
        }
        for l in 1..levels.len() {
            levels[l] += levels[l - 1];
        }
        Ok(Program {
            ops,
            levels,
            outputs: outputs.into_iter().map(r).collect(),
            vars: vars.to_vec(),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    fn run_level<L: Ortholattice>(
        &self,
        lat: &L,
        level: usize,
        assign: &[L::Elem],
        regs: &mut [L::Elem],
    ) {
        for i in self.levels[level]..self.levels[level + 1] {
            regs[i] = match self.ops[i] {
                Op::Var(v) => assign[v].clone(),
                Op::Zero => lat.zero(),
                Op::One => lat.one(),
                Op::Ortho(x) => lat.ortho(&regs[x]),
                Op::Meet(x, y) => lat.meet(&regs[x], &regs[y]),
                Op::Join(x, y) => lat.join(&regs[x], &regs[y]),
            };
        }
    }

    /// Evaluates all outputs under one assignment (indexed like `vars`).
    pub fn eval<L: Ortholattice>(&self, lat: &L, assign: &[L::Elem]) -> Vec<L::Elem> {
        assert_eq!(assign.len(), self.vars.len(), "assignment arity");
        let mut regs = vec![lat.zero(); self.ops.len()];
        for level in 0..self.levels.len() - 1 {
            self.run_level(lat, level, assign, &mut regs);
        }
        self.outputs.iter().map(|&o| regs[o].clone()).collect()
    }

    /// Enumerates every assignment from `domain` in lexicographic order of
    /// domain indices (first variable outermost) and returns the index tuple
    /// of the first one whose outputs satisfy `violates`.
    ///
    /// The outermost variable is split across rayon workers; the result is
    /// the lexicographically least violation whatever the worker count.
    pub fn find_first<L, F>(&self, lat: &L, domain: &[L::Elem], violates: F) -> Option<Vec<usize>>
    where
        L: Ortholattice + Sync,
        L::Elem: Send + Sync,
        F: Fn(&L, &[L::Elem]) -> bool + Sync,
    {
        let k = self.vars.len();
        let fresh = || {
            let mut regs = vec![lat.zero(); self.ops.len()];
            let assign = vec![lat.zero(); k];
            self.run_level(lat, 0, &assign, &mut regs);
            (regs, assign)
        };
        if k == 0 {
            let (regs, _) = fresh();
            let outs: Vec<_> = self.outputs.iter().map(|&o| regs[o].clone()).collect();
            return violates(lat, &outs).then(Vec::new);
        }
        (0..domain.len()).into_par_iter().find_map_first(|first| {
            let (mut regs, mut assign) = fresh();
            let mut idx = vec![0; k];
            let mut outs = Vec::with_capacity(self.outputs.len());
            idx[0] = first;
            assign[0] = domain[first].clone();
            self.run_level(lat, 1, &assign, &mut regs);
            self.descend(lat, domain, 1, &mut idx, &mut assign, &mut regs, &mut outs, &violates)
                .then_some(idx)
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn descend<L, F>(
        &self,
        lat: &L,
        domain: &[L::Elem],
        depth: usize,
        idx: &mut [usize],
        assign: &mut [L::Elem],
        regs: &mut [L::Elem],
        outs: &mut Vec<L::Elem>,
        violates: &F,
    ) -> bool
    where
        L: Ortholattice,
        F: Fn(&L, &[L::Elem]) -> bool,
    {
        if depth == idx.len() {
            outs.clear();
            outs.extend(self.outputs.iter().map(|&o| regs[o].clone()));
            return violates(lat, outs);
        }
        for (i, e) in domain.iter().enumerate() {
            idx[depth] = i;
            assign[depth] = e.clone();
            self.run_level(lat, depth + 1, assign, regs);
            if self.descend(lat, domain, depth + 1, idx, assign, regs, outs, violates) {
                return true;
            }
        }
        false
    }
}

struct Builder<'a> {
    ops: Vec<Op>,
    level: Vec<usize>,
    memo: HashMap<Op, usize>,
    vars: &'a [String],
}

impl Builder<'_> {
    fn push(&mut self, op: Op) -> usize {
        if let Some(&i) = self.memo.get(&op) {
            return i;
        }
        let level = match op {
            Op::Var(v) => v + 1,
            Op::Zero | Op::One => 0,
            Op::Ortho(x) => self.level[x],
            Op::Meet(x, y) | Op::Join(x, y) => self.level[x].max(self.level[y]),
        };
        let i = self.ops.len();
        self.ops.push(op);
        self.level.push(level);
        self.memo.insert(op, i);
        i
    }

    fn emit(&mut self, t: &Term) -> Result<usize, UnboundVariable> {
        let op = match t {
            Term::Var(name) => Op::Var(
                self.vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| UnboundVariable(name.clone()))?,
            ),
            Term::Zero => Op::Zero,
            Term::One => Op::One,
            Term::Complement(x) => Op::Ortho(self.emit(x)?),
            Term::Meet(l, r) => {
                let (x, y) = (self.emit(l)?, self.emit(r)?);
                Op::Meet(x.min(y), x.max(y))
            }
            Term::Join(l, r) => {
                let (x, y) = (self.emit(l)?, self.emit(r)?);
                Op::Join(x.min(y), x.max(y))
            }
            _ => unreachable!("expanded terms are primitive"),
        };
        Ok(self.push(op))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The two-element Boolean algebra.
    struct Two;

    impl Ortholattice for Two {
        type Elem = bool;
        fn zero(&self) -> bool {
            false
        }
        fn one(&self) -> bool {
            true
        }
        fn meet(&self, a: &bool, b: &bool) -> bool {
            *a && *b
        }
        fn join(&self, a: &bool, b: &bool) -> bool {
            *a || *b
        }
        fn ortho(&self, a: &bool) -> bool {
            !*a
        }
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn shares_common_subterms() {
        let t = Term::parse("(a ^ b) v (b ^ a)'").unwrap();
        let p = Program::compile(&[&t], &vars(&["a", "b"])).unwrap();
        // a, b, a^b, (a^b)', join
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn compiled_matches_tree_evaluation() {
        let t = Term::parse("(a ->3 b) ^ (c ==2 a)' v (b +rp c)").unwrap();
        let vs = vars(&["a", "b", "c"]);
        let p = Program::compile(&[&t], &vs).unwrap();
        for bits in 0..8u8 {
            let assign: Vec<bool> = (0..3).map(|i| bits >> i & 1 == 1).collect();
            let env = |n: &str| vs.iter().position(|v| v == n).map(|i| assign[i]);
            assert_eq!(p.eval(&Two, &assign)[0], evaluate(&Two, &t, &env).unwrap());
        }
    }

    #[test]
    fn unbound_variable_is_reported() {
        let t = Term::parse("a ^ z").unwrap();
        assert_eq!(
            Program::compile(&[&t], &vars(&["a"])).unwrap_err(),
            UnboundVariable("z".into())
        );
    }

    #[test]
    fn first_violation_is_lexicographically_least() {
        // a ^ b = a fails first at a = true, b = false: indices (1, 0)
        let lhs = Term::parse("a ^ b").unwrap();
        let rhs = Term::parse("a").unwrap();
        let p = Program::compile(&[&lhs, &rhs], &vars(&["a", "b"])).unwrap();
        let hit = p.find_first(&Two, &[false, true], |_, o| o[0] != o[1]);
        assert_eq!(hit, Some(vec![1, 0]));
    }

    #[test]
    fn closed_terms_evaluate_once() {
        let t = Term::parse("0 v 1'").unwrap();
        let p = Program::compile(&[&t, &Term::Zero], &[]).unwrap();
        assert_eq!(p.find_first(&Two, &[false, true], |_, o| o[0] != o[1]), None);
    }
}
