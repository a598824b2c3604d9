//! Terms, unification, the reader and the canonicalizer under random input.

use proptest::prelude::*;

use fourport_core::canon::{alpha_equivalent, canonicalize, dump_canonical};
use fourport_core::engine::{apply_bets, current_subst, BStack, Bet};
use fourport_core::oracle::{answers_equivalent, generate_program, sld_solve, GenConfig};
use fourport_core::reader::{format_goal, format_program, parse_program, parse_query};
use fourport_core::stack::Stack;
use fourport_core::term::{mgu, Goal, Substitution, Term, Var, VarId, VariantMatcher};

const NAMES: [&str; 4] = ["X", "Y", "Z", "W"];

fn var_term() -> impl Strategy<Value = Term> {
    (0..NAMES.len()).prop_map(|i| Term::Var(Var::new(i as VarId, NAMES[i])))
}

fn leaf() -> impl Strategy<Value = Term> {
    prop_oneof![
        3 => var_term(),
        1 => prop::sample::select(vec!["a", "b", "[]"]).prop_map(Term::constant),
        1 => (0i64..3).prop_map(Term::int),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    leaf().prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::compound("f", vec![t])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::compound("g", vec![a, b])),
            (prop::collection::vec(inner.clone(), 0..3), inner)
                .prop_map(|(items, tail)| Term::list(items, tail)),
        ]
    })
}

fn goal() -> impl Strategy<Value = Goal> {
    let leaf = prop_oneof![
        Just(Goal::True),
        Just(Goal::Fail),
        (term(), term()).prop_map(|(a, b)| Goal::unify(a, b)),
        prop::collection::vec(term(), 0..3).prop_map(|args| Goal::Atom(Term::compound("p", args))),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Goal::conj(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Goal::disj(a, b)),
        ]
    })
}

/// Unification by equation solving with eager substitution; slow and
/// obviously correct.
fn reference_unifier(t1: &Term, t2: &Term) -> Option<Vec<(VarId, Term)>> {
    fn subst(t: &Term, x: VarId, by: &Term) -> Term {
        t.map_vars(&mut |v| {
            if v.id == x {
                by.clone()
            } else {
                Term::Var(v.clone())
            }
        })
    }
    let mut eqs = vec![(t1.clone(), t2.clone())];
    let mut solved: Vec<(VarId, Term)> = Vec::new();
    while let Some((a, b)) = eqs.pop() {
        if a == b {
            continue;
        }
        match (&a, &b) {
            (Term::Var(x), t) | (t, Term::Var(x)) => {
                if t.occurs(x.id) {
                    return None;
                }
                for (l, r) in eqs.iter_mut() {
                    *l = subst(l, x.id, t);
                    *r = subst(r, x.id, t);
                }
                for (_, r) in solved.iter_mut() {
                    *r = subst(r, x.id, t);
                }
                solved.push((x.id, t.clone()));
            }
            (Term::Compound(f, xs), Term::Compound(g, ys)) if f == g && xs.len() == ys.len() => {
                eqs.extend(xs.iter().cloned().zip(ys.iter().cloned()));
            }
            _ => return None,
        }
    }
    Some(solved)
}

fn apply_solved(solved: &[(VarId, Term)], t: &Term) -> Term {
    t.map_vars(&mut |v| {
        solved
            .iter()
            .find(|(x, _)| *x == v.id)
            .map_or_else(|| Term::Var(v.clone()), |(_, r)| r.clone())
    })
}

/// The literal recursion: Subst(nil)T = T, Subst(b·Σ)T = b(Subst(Σ)T).
fn subst_of(bets: &BStack, g: &Goal) -> Goal {
    match bets.pop() {
        None => g.clone(),
        Some((Bet::Mgu(s), below)) => s.apply_goal(&subst_of(below, g)),
        Some((_, below)) => subst_of(below, g),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mgu_agrees_with_reference(t1 in term(), t2 in term()) {
        let ours = mgu(&t1, &t2, true);
        let reference = reference_unifier(&t1, &t2);
        prop_assert_eq!(ours.is_some(), reference.is_some());
        if let (Some(s), Some(r)) = (ours, reference) {
            let u = s.apply(&t1);
            prop_assert_eq!(&u, &s.apply(&t2));
            prop_assert!(s.is_idempotent());
            prop_assert_eq!(s.apply(&u), u.clone());
            prop_assert!(s.iter().all(|(v, t)| t.as_var() != Some(v)));
            // Most general unifiers coincide up to renaming.
            let mut m = VariantMatcher::new();
            prop_assert!(m.terms(&u, &apply_solved(&r, &t1)));
        }
    }

    #[test]
    fn goals_roundtrip_through_terms(g in goal()) {
        prop_assert_eq!(Goal::from_term(&g.to_term()).unwrap(), g);
    }

    #[test]
    fn goals_roundtrip_through_text(g in goal()) {
        let text = format_goal(&g);
        let back = parse_query(&text).map_err(|e| TestCaseError::fail(format!("{e}: {text}")))?;
        let mut m = VariantMatcher::new();
        prop_assert!(m.goals(&g, &back), "{} reparsed as {}", text, format_goal(&back));
        prop_assert_eq!(format_goal(&back), text);
    }

    #[test]
    fn composed_substitution_equals_fold(
        pairs in prop::collection::vec((term(), term()), 0..6),
        memo_at in prop::collection::vec(any::<bool>(), 6),
        g in goal(),
    ) {
        let mut bets: BStack = Stack::nil();
        for (i, (a, b)) in pairs.iter().enumerate() {
            let Some(s) = mgu(a, b, true) else { continue };
            bets = bets.push(Bet::Mgu(s));
            if memo_at[i] {
                bets = bets.push(Bet::DefMemo { body: Goal::True, atom: Term::constant("m") });
            }
        }
        let folded = subst_of(&bets, &g);
        prop_assert_eq!(&current_subst(&bets).apply_goal(&g), &folded);
        prop_assert_eq!(&apply_bets(&bets, &g), &folded);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_form_is_a_fixpoint(seed in any::<u64>()) {
        let g = generate_program(&GenConfig::with_seed(seed));
        let once = canonicalize(&g.program);
        prop_assert!(once.check_head_freshness().is_ok());
        let text = dump_canonical(&once);
        let reparsed = parse_program(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let twice = canonicalize(&reparsed);
        prop_assert!(alpha_equivalent(&once, &twice), "{}\nvs\n{}", text, dump_canonical(&twice));
        prop_assert_eq!(dump_canonical(&twice), text);
    }
}

#[test]
fn programs_roundtrip_through_text() {
    for seed in 0..1000 {
        let g = generate_program(&GenConfig::with_seed(seed));
        let text = format_program(&g.program);
        let back = parse_program(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(back.clauses.len(), g.program.clauses.len());
        for (a, b) in g.program.clauses.iter().zip(&back.clauses) {
            let mut m = VariantMatcher::new();
            assert!(m.terms(&a.head, &b.head), "seed {seed}\n{text}");
            match (&a.body, &b.body) {
                (Some(x), Some(y)) => assert!(m.goals(x, y), "seed {seed}\n{text}"),
                (None, None) => {}
                _ => panic!("seed {seed}: body presence differs\n{text}"),
            }
        }
        assert_eq!(format_program(&back), text);
    }
}

#[test]
fn canonicalization_preserves_answers() {
    let mut compared = 0;
    for seed in 3000..3250 {
        let g = generate_program(&GenConfig::with_seed(seed));
        let canonical = canonicalize(&g.program).to_source();
        for q in &g.queries {
            let Ok(source_answers) = sld_solve(q, &g.program, 10_000, true) else {
                continue;
            };
            let canonical_answers = sld_solve(q, &canonical, 100_000, true)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert!(
                answers_equivalent(&q.vars(), &source_answers, &canonical_answers),
                "seed {seed}\n{}",
                format_program(&g.program)
            );
            compared += 1;
        }
    }
    assert!(compared >= 500, "only {compared} comparisons");
}

#[test]
fn basic_unifier_examples() {
    let x = Var::new(0, "X");
    let one = Term::int(1);
    assert_eq!(
        mgu(&Term::Var(x.clone()), &one, true),
        Some(Substitution::from_pairs([(x.clone(), one.clone())]))
    );
    let pa = Term::compound("p", vec![Term::constant("a")]);
    assert_eq!(mgu(&pa, &pa, true), Some(Substitution::new()));
    let fxx = Term::compound("f", vec![Term::Var(x.clone()), Term::Var(x.clone())]);
    let fab = Term::compound("f", vec![Term::constant("a"), Term::constant("b")]);
    assert_eq!(mgu(&fxx, &fab, true), None);
    let fx = Term::compound("f", vec![Term::Var(x.clone())]);
    assert_eq!(mgu(&Term::Var(x), &fx, true), None);
}

#[test]
fn fold_example_applies_oldest_first() {
    let (x, y) = (Var::new(0, "X"), Var::new(1, "Y"));
    // {Y/f(X)} is the older bet, so X is bound after Y is replaced.
    let bets: BStack = Stack::nil()
        .push(Bet::Mgu(Substitution::from_pairs([(
            y.clone(),
            Term::compound("f", vec![Term::Var(x.clone())]),
        )])))
        .push(Bet::Mgu(Substitution::from_pairs([(
            x.clone(),
            Term::int(1),
        )])));
    let g = Goal::Atom(Term::compound("g", vec![Term::Var(x), Term::Var(y)]));
    let expected = "g(1,f(1))";
    assert_eq!(format_goal(&apply_bets(&bets, &g)), expected);
    assert_eq!(format_goal(&current_subst(&bets).apply_goal(&g)), expected);
}
