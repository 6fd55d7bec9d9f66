use knotgroup::algebra::{
    cyclotomic_table, divisors, minors, smith_normal_form, IntMatrix, LaurentMatrix,
};
use knotgroup::fox::{
    alexander_polynomial, alexander_polynomial_deleting, elementary_ideal, fox_derivative,
    DegreeMap, GroupRingElement,
};
use knotgroup::knots::torus_wirtinger;
use knotgroup::{
    laurent_gcd, Generator, LaurentPoly, Presentation, TorusConvention, TorusGroup,
    TorusKnotParams, Word,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const GENS: [&str; 4] = ["a", "b", "c", "d"];

fn raw_word(ngens: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec(
        (0..ngens, prop_oneof![Just(1i64), Just(-1), -3i64..=3]),
        0..=max_len,
    )
}

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    raw_word(ngens, max_len)
        .prop_map(|raw| Word::reduce(raw.into_iter().map(|(i, e)| (GENS[i], e))))
}

fn xy_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((prop::bool::ANY, -4i64..=4), 0..=max_len)
        .prop_map(|raw| Word::reduce(raw.into_iter().map(|(x, e)| (if x { "x" } else { "y" }, e))))
}

fn laurent(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-6i64..=6, 0..=max_terms))
        .prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, c))
}

fn nonzero_laurent(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    laurent(max_terms).prop_filter("nonzero", |f| !f.is_zero())
}

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(move |rows| {
            if rows.is_empty() {
                IntMatrix::zeros(0, c)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

fn torus_group(pq: (i64, i64)) -> TorusGroup {
    TorusGroup::new(
        TorusKnotParams::new(pq.0, pq.1).unwrap(),
        TorusConvention::PowersEqual,
    )
    .unwrap()
}

fn torus_params() -> impl Strategy<Value = (i64, i64)> {
    prop_oneof![
        Just((2, 3)),
        Just((3, 4)),
        Just((4, 5)),
        Just((2, 5)),
        Just((3, 5))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonicalize_is_multiplicative(f in laurent(6), g in laurent(6)) {
        let lhs = (&f * &g).canonicalize();
        let rhs = (&f.canonicalize() * &g.canonicalize()).canonicalize();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonicalize_is_idempotent(f in laurent(6)) {
        let c = f.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert!(c.associated(&f));
    }

    #[test]
    fn divide_exact_inverts_multiplication(f in laurent(6), g in nonzero_laurent(5)) {
        prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn gcd_divides_inputs(fs in prop::collection::vec(laurent(5), 1..4), common in nonzero_laurent(3)) {
        let fs: Vec<LaurentPoly> = fs.iter().map(|f| f * &common).collect();
        prop_assume!(fs.iter().any(|f| !f.is_zero()));
        let g = laurent_gcd(&fs).unwrap();
        prop_assert!(g.is_canonical());
        for f in &fs {
            prop_assert!(f.divide_exact(&g).is_ok());
        }
        prop_assert!(common.divides(&g));
    }

    #[test]
    fn snf_invariants(a in int_matrix()) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.d.is_diagonal());
        prop_assert!(snf.u.determinant().abs().is_one());
        prop_assert!(snf.v.determinant().abs().is_one());
        let diag = snf.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_inverse_cancels(raw in raw_word(4, 60)) {
        let w = Word::reduce(raw.iter().map(|&(i, e)| (GENS[i], e)));
        let again = Word::reduce(w.syllables().iter().map(|s| (s.generator.clone(), s.exponent)));
        prop_assert_eq!(&again, &w);
        prop_assert!((&w * &w.inverse()).is_identity());
        prop_assert!((&w.inverse() * &w).is_identity());
    }

    #[test]
    fn fox_fundamental_formula(w in word(4, 40)) {
        let one = GroupRingElement::one();
        let lhs = &GroupRingElement::from_word(w.clone()) - &one;
        let mut rhs = GroupRingElement::zero();
        for g in GENS {
            let d = fox_derivative(&w, &Generator::from(g));
            rhs = &rhs + &(&d * &(&GroupRingElement::from_word(Word::generator(g)) - &one));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fox_product_rule(u in word(3, 20), v in word(3, 20), i in 0usize..3) {
        let g = Generator::from(GENS[i]);
        let lhs = fox_derivative(&(&u * &v), &g);
        let rhs = &fox_derivative(&u, &g) + &fox_derivative(&v, &g).left_mul_word(&u);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn elimination_preserves_abelianization(
        rels in prop::collection::vec(word(3, 8), 0..4),
        def in word(2, 6),
    ) {
        // c = def is eliminable; other relators may mention c.
        let mut all = rels;
        all.push(&Word::generator("c") * &def.inverse());
        let p = Presentation::from_names(&["a", "b", "c"], all).unwrap();
        let q = p.eliminate_generator(&Generator::from("c"), &def).unwrap();
        let (ab_p, ab_q) = (p.abelianization(), q.abelianization());
        prop_assert_eq!(ab_p.free_rank, ab_q.free_rank);
        prop_assert_eq!(ab_p.torsion, ab_q.torsion);
    }

    #[test]
    fn degree_map_kills_relators(rels in prop::collection::vec(word(3, 10), 0..4)) {
        let p = Presentation::from_names(&["a", "b", "c"], rels).unwrap();
        if let Some(dm) = p.abelianization().degree_map {
            for r in p.relators() {
                prop_assert_eq!(r.weighted_sum(|g| dm.get(g).copied()), Some(0));
            }
        }
    }

    #[test]
    fn add_relator_keeps_generators(rels in prop::collection::vec(word(3, 8), 0..3), extra in word(3, 8)) {
        let p = Presentation::from_names(&["a", "b", "c"], rels).unwrap();
        let q = p.add_relator(&extra).unwrap();
        prop_assert_eq!(p.generators(), q.generators());
        prop_assert!(q.abelianization().free_rank <= p.abelianization().free_rank);
    }

    #[test]
    fn elementary_ideal_gcd_chain(entries in prop::collection::vec(laurent(3), 9)) {
        let rows: Vec<Vec<LaurentPoly>> = entries.chunks(3).map(<[LaurentPoly]>::to_vec).collect();
        let m = LaurentMatrix::from_rows(rows);
        for k in 0..3 {
            let ek = elementary_ideal(&m, k).gcd();
            let ek1 = elementary_ideal(&m, k + 1).gcd();
            match (ek, ek1) {
                (Some(gk), Some(gk1)) => prop_assert!(gk1.divides(&gk), "E_{} gcd {} vs E_{} gcd {}", k, gk, k + 1, gk1),
                (Some(_), None) => prop_assert!(false, "E_{} nonzero but E_{} zero", k, k + 1),
                _ => {}
            }
        }
        prop_assert!(minors(&m, 4).is_err());
    }

    #[test]
    fn word_problem_soundness(pq in torus_params(), w in xy_word(30), inv in prop::bool::ANY, rot in 0usize..4, cut in 0usize..64) {
        let g = torus_group(pq);
        let r = if inv { g.relator().inverse() } else { g.relator() };
        let perms = r.cyclic_permutations();
        let r = &perms[rot % perms.len()];
        let letters: Vec<(Generator, i64)> = w.letters().map(|(g, e)| (g.clone(), e)).collect();
        let cut = cut % (letters.len() + 1);
        let inserted = &(&Word::reduce(letters[..cut].iter().cloned()) * r) * &Word::reduce(letters[cut..].iter().cloned());
        prop_assert_eq!(g.normal_form(&inserted).unwrap(), g.normal_form(&w).unwrap());
    }

    #[test]
    fn central_element_commutes(pq in torus_params(), w in xy_word(20)) {
        let g = torus_group(pq);
        let c = Word::power("x", pq.0);
        prop_assert_eq!(g.normal_form(&(&c * &w)).unwrap(), g.normal_form(&(&w * &c)).unwrap());
        let c = Word::power("y", pq.1);
        prop_assert_eq!(g.normal_form(&(&c * &w)).unwrap(), g.normal_form(&(&w * &c)).unwrap());
    }

    #[test]
    fn normal_form_round_trip(pq in torus_params(), w in xy_word(30)) {
        let g = torus_group(pq);
        let nf = g.normal_form(&w).unwrap();
        prop_assert_eq!(g.normal_form(&g.nf_to_word(&nf)).unwrap(), nf.clone());
        let (p, q) = pq;
        let mut prev = None;
        for &(l, e) in &nf.syllables {
            let ord = if l.name() == "x" { p } else { q };
            prop_assert!(e >= 1 && e < ord);
            prop_assert_ne!(Some(l), prev);
            prev = Some(l);
        }
    }
}

#[test]
fn cyclotomic_product_identity_up_to_200() {
    for n in 1..=200u64 {
        let table = cyclotomic_table(n).unwrap();
        let product = divisors(n)
            .iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * &table[d]);
        assert_eq!(product, LaurentPoly::t_pow_minus_one(n as i64), "n = {n}");
    }
}

#[test]
fn commutator_is_nontrivial_in_torus_groups() {
    for pq in [(2, 3), (3, 4), (4, 5), (2, 5), (3, 5), (5, 6)] {
        let g = torus_group(pq);
        let c = Word::commutator(&Word::generator("x"), &Word::generator("y"));
        assert!(!g.normal_form(&c).unwrap().is_trivial(), "{pq:?}");
    }
}

fn rebuild(p: &Presentation, relators: Vec<Word>) -> Presentation {
    let out = Presentation::new(p.generators().to_vec(), relators).unwrap();
    if p.is_wirtinger() {
        out.flagged_wirtinger()
    } else {
        out
    }
}

#[test]
fn alexander_polynomial_invariance() {
    for p in 2..=5 {
        let w = torus_wirtinger(p).unwrap();
        let delta = alexander_polynomial(&w).unwrap().canonicalize();
        assert_eq!(delta.eval_at_one().abs(), BigInt::one(), "p = {p}");

        for i in 0..w.relators().len() {
            for rot in w.relators()[i].cyclic_permutations() {
                let mut rels = w.relators().to_vec();
                rels[i] = rot;
                assert_eq!(
                    alexander_polynomial(&rebuild(&w, rels))
                        .unwrap()
                        .canonicalize(),
                    delta
                );
            }
            let mut rels = w.relators().to_vec();
            rels[i] = rels[i].inverse();
            assert_eq!(
                alexander_polynomial(&rebuild(&w, rels))
                    .unwrap()
                    .canonicalize(),
                delta
            );
        }

        let def: Word = (1..=p)
            .map(|k| Word::generator(format!("a{k}").as_str()))
            .chain([Word::generator("a1")])
            .collect();
        let eliminated = w.eliminate_generator(&Generator::from("z"), &def).unwrap();
        assert_eq!(eliminated.generators().len() as i64, p);
        assert_eq!(
            alexander_polynomial(&eliminated).unwrap().canonicalize(),
            delta,
            "p = {p}"
        );

        let d = DegreeMap::for_presentation(&w).unwrap();
        for col in 0..w.generators().len() {
            let by_col = alexander_polynomial_deleting(&w, &d, col)
                .unwrap()
                .canonicalize();
            assert_eq!(by_col, delta, "p = {p}, column {col}");
        }
    }
}

#[test]
fn alexander_polynomial_at_one_is_unit() {
    for p in 2..=6 {
        let delta = alexander_polynomial(&torus_wirtinger(p).unwrap()).unwrap();
        assert_eq!(delta.eval_at_one().abs(), BigInt::one(), "p = {p}");
    }
}
