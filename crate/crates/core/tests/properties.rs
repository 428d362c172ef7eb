use omlkit_core::freeoml::{apply_binary, FreeOml};
use omlkit_core::lattice::{evaluate, Program};
use omlkit_core::model::builtin;
use omlkit_core::{ConnIndex, FreeElem, Ortholattice, SymDiffKind, Term};
use proptest::prelude::*;

fn leaf(vars: &'static [&'static str]) -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => prop::sample::select(vars).prop_map(Term::var),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ]
}

fn term(vars: &'static [&'static str]) -> impl Strategy<Value = Term> {
    leaf(vars).prop_recursive(5, 32, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        let idx = (0u8..=5).prop_map(|i| ConnIndex::new(i).unwrap());
        prop_oneof![
            inner.clone().prop_map(Term::complement),
            pair.clone().prop_map(|(l, r)| Term::meet(l, r)),
            pair.clone().prop_map(|(l, r)| Term::join(l, r)),
            (idx.clone(), pair.clone()).prop_map(|(i, (l, r))| Term::implies(i, l, r)),
            (idx, pair.clone()).prop_map(|(i, (l, r))| Term::equiv(i, l, r)),
            (prop::sample::select(SymDiffKind::ALL.to_vec()), pair)
                .prop_map(|(k, (l, r))| Term::symdiff(k, l, r)),
        ]
    })
}

fn free_elem() -> impl Strategy<Value = FreeElem> {
    (1usize..=96).prop_map(|n| FreeElem::from_beran(n).unwrap())
}

proptest! {
    #[test]
    fn print_parse_round_trip(t in term(&["a", "b", "c", "x1"])) {
        prop_assert_eq!(Term::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn expansion_is_idempotent_and_primitive(t in term(&["a", "b", "c"])) {
        let e = t.expand();
        prop_assert!(e.is_primitive());
        prop_assert_eq!(e.expand(), e);
    }

    #[test]
    fn expansion_is_homomorphic(l in term(&["a", "b"]), r in term(&["a", "b"])) {
        prop_assert_eq!(Term::complement(l.clone()).expand(), Term::complement(l.expand()));
        prop_assert_eq!(Term::meet(l.clone(), r.clone()).expand(), Term::meet(l.expand(), r.expand()));
        prop_assert_eq!(Term::join(l.clone(), r.clone()).expand(), Term::join(l.expand(), r.expand()));
    }

    #[test]
    fn variables_in_first_occurrence_order(t in term(&["x", "y", "z"])) {
        let vars = t.variables();
        let text = t.to_string();
        let first = |v: &str| {
            text.char_indices()
                .find(|&(_, c)| c.to_string() == v)
                .map(|(i, _)| i)
                .unwrap()
        };
        for w in vars.windows(2) {
            prop_assert!(first(&w[0]) < first(&w[1]));
        }
    }

    #[test]
    fn complement_is_a_homomorphism(t in term(&["a", "b"])) {
        let v = apply_binary(&t, FreeElem::A, FreeElem::B).unwrap();
        let c = apply_binary(&Term::complement(t), FreeElem::A, FreeElem::B).unwrap();
        prop_assert_eq!(usize::from(c.beran()), 97 - usize::from(v.beran()));
    }

    #[test]
    fn compiled_program_matches_tree(
        t in term(&["a", "b", "c"]),
        p in free_elem(), q in free_elem(), r in free_elem(),
    ) {
        let vars = ["a".to_string(), "b".to_string(), "c".to_string()];
        let prog = Program::compile(&[&t], &vars).unwrap();
        let vals = [p, q, r];
        let env = |n: &str| vars.iter().position(|v| v == n).map(|i| vals[i]);
        prop_assert_eq!(prog.eval(&FreeOml, &vals)[0], evaluate(&FreeOml, &t, &env).unwrap());
    }

    #[test]
    fn free_model_matches_free_lattice(
        t in term(&["a", "b"]),
        p in free_elem(), q in free_elem(),
    ) {
        let m = builtin("free2").unwrap();
        let id = |e: FreeElem| (e.beran() - 1) as u16;
        let in_model = evaluate(&m, &t, &|n: &str| match n {
            "a" => Some(id(p)),
            "b" => Some(id(q)),
            _ => None,
        })
        .unwrap();
        let direct = apply_binary(&t, p, q).unwrap();
        prop_assert_eq!(in_model, id(direct));
    }

    #[test]
    fn equivalence_with_zero_is_complement(i in 0u8..=5, p in free_elem()) {
        let t = Term::equiv(ConnIndex::new(i).unwrap(), Term::var("a"), Term::Zero);
        prop_assert_eq!(apply_binary(&t, p, FreeElem::ONE).unwrap(), FreeOml.ortho(&p));
    }
}
