//! The lattice of subspaces of ℚⁿ with exact rational arithmetic.
//!
//! Subspaces are stored as a basis in reduced row-echelon form, which is
//! canonical: two subspaces are equal exactly when their stored bases are.
//! The orthocomplement is taken with respect to the standard dot product.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::check::{Assignment, CheckResult};
use crate::lattice::{Ortholattice, Program};
use crate::term::Equation;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

/// Reduces `rows` (each of length `cols`) to RREF, dropping zero rows.
/// Returns the rows and their pivot columns.
fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : A x = 0}` for `A` with `cols` columns.
fn null_space(rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[free].clone();
            }
            x
        })
        .collect()
}

impl Subspace {
    /// The span of `vectors` in ℚⁿ. Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Subspace {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length");
        Subspace {
            ambient,
            basis: rref(vectors, ambient).0,
        }
    }

    pub fn from_integers(ambient: usize, vectors: &[Vec<i64>]) -> Subspace {
        let rows = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        Subspace::span(ambient, rows)
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Subspace {
            ambient,
            basis: rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    fn same_ambient(&self, other: &Subspace) -> Result<(), HilbertError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(HilbertError::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    /// Sum of subspaces: row space of the stacked bases.
    pub fn join(&self, other: &Subspace) -> Result<Subspace, HilbertError> {
        self.same_ambient(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.ambient, rows))
    }

    /// Intersection: every `(c, d)` with `c·U = d·V` gives the vector `c·U`.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace, HilbertError> {
        self.same_ambient(other)?;
        let (r1, r2) = (self.dim(), other.dim());
        if r1 == 0 || r2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Columns of the transposed stack [U; -V]; its null space holds (c, d).
        let transposed: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|col| {
                self.basis
                    .iter()
                    .map(|row| row[col].clone())
                    .chain(other.basis.iter().map(|row| -row[col].clone()))
                    .collect()
            })
            .collect();
        let vectors = null_space(transposed, r1 + r2)
            .into_iter()
            .map(|z| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (c, row) in z[..r1].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn ortho(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        Subspace::span(self.ambient, null_space(self.basis.clone(), self.ambient))
    }

    pub fn le(&self, other: &Subspace) -> Result<bool, HilbertError> {
        Ok(self.join(other)?.dim() == other.dim())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "}}<=Q^{}", self.ambient)
    }
}

/// All subspaces of ℚⁿ for a fixed `n`.
#[derive(Debug, Clone, Copy)]
pub struct SubspaceLattice {
    pub ambient: usize,
}

impl Ortholattice for SubspaceLattice {
    type Elem = Subspace;

    fn zero(&self) -> Subspace {
        Subspace::zero(self.ambient)
    }
    fn one(&self) -> Subspace {
        Subspace::full(self.ambient)
    }
    fn meet(&self, a: &Subspace, b: &Subspace) -> Subspace {
        a.meet(b).expect("subspaces share the ambient space")
    }
    fn join(&self, a: &Subspace, b: &Subspace) -> Subspace {
        a.join(b).expect("subspaces share the ambient space")
    }
    fn ortho(&self, a: &Subspace) -> Subspace {
        a.ortho()
    }
    fn le(&self, a: &Subspace, b: &Subspace) -> bool {
        a.le(b).expect("subspaces share the ambient space")
    }
}

/// Row space of a random integer matrix with entries in `[-3, 3]` and a
/// uniformly chosen row count in `[0, n]`.
pub fn random_subspace(ambient: usize, seed: u64) -> Subspace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rng.gen_range(0..=ambient);
    let vectors: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..ambient).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    Subspace::from_integers(ambient, &vectors)
}

/// Seed for variable `var` in trial `trial` (splitmix64 finalizer).
pub fn trial_seed(seed: u64, trial: u64, var: usize) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(trial.wrapping_mul(64) + var as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Checks `eq` on `trials` random assignments of subspaces of ℚⁿ. The
/// reported witness is the one from the lowest-numbered failing trial.
pub fn check_equation_random(
    ambient: usize,
    eq: &Equation,
    trials: u64,
    seed: u64,
) -> CheckResult<Subspace> {
    let vars = eq.variables();
    let prog = Program::compile(&[&eq.lhs, &eq.rhs], &vars).expect("variables come from the equation");
    let lat = SubspaceLattice { ambient };
    let hit = (0..trials).into_par_iter().find_map_first(|t| {
        let values: Vec<Subspace> = (0..vars.len())
            .map(|v| random_subspace(ambient, trial_seed(seed, t, v)))
            .collect();
        let out = prog.eval(&lat, &values);
        (!lat.related(eq.rel, &out[0], &out[1])).then_some((t, values))
    });
    match hit {
        Some((t, values)) => CheckResult::fails(Assignment(vars.into_iter().zip(values).collect()), t + 1),
        None => CheckResult::holds(trials),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;
    use crate::equations::alias;
    use crate::lattice::evaluate;
    use crate::term::{ConnIndex, Term};
    use proptest::prelude::*;

    fn q(v: &[&[i64]]) -> Subspace {
        Subspace::from_integers(v.first().map_or(3, |r| r.len()), &v.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_is_canonical() {
        let a = q(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = q(&[&[1, 2, 1], &[2, 2, 0], &[3, 4, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn lines_in_the_plane() {
        let x = q(&[&[1, 0, 0]]);
        let y = q(&[&[0, 1, 0]]);
        let d = q(&[&[1, 1, 0]]);
        assert_eq!(x.meet(&y).unwrap(), Subspace::zero(3));
        assert_eq!(x.join(&y).unwrap(), q(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(x.ortho(), q(&[&[0, 1, 0], &[0, 0, 1]]));
        // distributivity fails on three lines of one plane
        let lhs = d.meet(&x.join(&y).unwrap()).unwrap();
        let rhs = d.meet(&x).unwrap().join(&d.meet(&y).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch() {
        let err = Subspace::zero(2).join(&Subspace::zero(3)).unwrap_err();
        assert_eq!(err, HilbertError::DimensionMismatch { left: 2, right: 3 });
        assert!(Subspace::full(2).meet(&Subspace::full(4)).is_err());
    }

    #[test]
    fn random_subspace_is_deterministic() {
        assert_eq!(random_subspace(3, 42), random_subspace(3, 42));
        let dims: Vec<usize> = (0..200).map(|s| random_subspace(3, s).dim()).collect();
        assert!(dims.contains(&0) && dims.contains(&3));
    }

    #[test]
    fn eq1_holds_in_dim3() {
        let r = check_equation_random(3, &alias("EQ1").unwrap(), 300, 5);
        assert_eq!(r.status, Status::Holds);
    }

    #[test]
    fn distributivity_fails_with_witness() {
        let eq = Equation::parse("p ^ (q v r) = (p ^ q) v (p ^ r)").unwrap();
        let r = check_equation_random(3, &eq, 1000, 1);
        assert_eq!(r.status, Status::Fails);
        let w = r.witness.unwrap();
        let lat = SubspaceLattice { ambient: 3 };
        let env = |n: &str| w.get(n).cloned();
        assert_ne!(
            evaluate(&lat, &eq.lhs, &env).unwrap(),
            evaluate(&lat, &eq.rhs, &env).unwrap()
        );
    }

    #[test]
    fn equivalence_with_itself_is_full() {
        let lat = SubspaceLattice { ambient: 4 };
        for s in 0..20 {
            let u = random_subspace(4, s);
            for i in ConnIndex::ALL {
                let t = Term::equiv(i, Term::var("u"), Term::var("u"));
                let env = |_: &str| Some(u.clone());
                assert_eq!(evaluate(&lat, &t, &env).unwrap(), Subspace::full(4));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ortholattice_laws(s1 in any::<u64>(), s2 in any::<u64>()) {
            let (u, v) = (random_subspace(4, s1), random_subspace(4, s2));
            prop_assert_eq!(u.ortho().ortho(), u.clone());
            prop_assert_eq!(u.meet(&u.ortho()).unwrap(), Subspace::zero(4));
            prop_assert_eq!(u.join(&u.ortho()).unwrap(), Subspace::full(4));
            prop_assert_eq!(u.meet(&v).unwrap().ortho(), u.ortho().join(&v.ortho()).unwrap());
            if u.le(&v).unwrap() {
                prop_assert!(v.ortho().le(&u.ortho()).unwrap());
                // orthomodular law
                prop_assert_eq!(u.join(&u.ortho().meet(&v).unwrap()).unwrap(), v.clone());
            }
        }

        #[test]
        fn dimension_formula(s1 in any::<u64>(), s2 in any::<u64>()) {
            let (u, v) = (random_subspace(4, s1), random_subspace(4, s2));
            let m = u.meet(&v).unwrap();
            let j = u.join(&v).unwrap();
            prop_assert_eq!(m.dim() + j.dim(), u.dim() + v.dim());
            prop_assert!(m.le(&u).unwrap() && m.le(&v).unwrap());
        }

        #[test]
        fn orthomodular_on_nested_pairs(s1 in any::<u64>(), s2 in any::<u64>()) {
            let u = random_subspace(4, s1);
            let v = u.join(&random_subspace(4, s2)).unwrap();
            prop_assert_eq!(u.join(&u.ortho().meet(&v).unwrap()).unwrap(), v);
        }
    }
}
