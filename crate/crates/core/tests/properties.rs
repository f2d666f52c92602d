use num_bigint::BigInt;
use proptest::prelude::*;

use symrank::cli::{parse_construction, write_construction};
use symrank::construction::{
    check_proper, language_profile, spacer_stats, subword_sets, Building, LevelStep, RankConstruction,
};
use symrank::parsing::WindowContext;
use symrank::transforms::{apply_code, mef_digits, MefParams, SlidingBlockCode};
use symrank::words::{d_l, subwords, Word};

/// Explicit constructions with 1 to 3 steps over small arities; the first
/// block of the first building is forced to word 1.
fn construction() -> impl Strategy<Value = RankConstruction> {
    (1usize..=2, prop::collection::vec((1usize..=3, any::<u64>()), 1..=3)).prop_map(|(arity0, shape)| {
        let mut prev = arity0;
        let mut steps = Vec::new();
        for (count, seed) in shape {
            let mut s = seed;
            let mut draw = |m: u64| {
                let r = s % m;
                s = (s / m) ^ s.rotate_left(17);
                r
            };
            let buildings = (0..count)
                .map(|q| {
                    let blocks_n = 2 + draw(2) as usize;
                    let mut blocks: Vec<usize> = (0..blocks_n).map(|_| 1 + draw(prev as u64) as usize).collect();
                    if q == 0 {
                        blocks[0] = 1;
                    }
                    let spacers: Vec<u64> = (1..blocks_n).map(|_| draw(4)).collect();
                    Building::new(&blocks, &spacers).unwrap()
                })
                .collect();
            steps.push(LevelStep { buildings });
            prev = count;
        }
        let mut c = RankConstruction::explicit(steps);
        c.arity0 = arity0;
        c
    })
}

fn bits(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 1..=max).prop_map(|b| Word::from_bits(b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_constructions_are_valid(c in construction()) {
        prop_assert!(c.validate().is_empty(), "{:?}", c.validate());
    }

    #[test]
    fn telescoping_keeps_every_word(c in construction()) {
        let top = c.steps.len();
        let cuts: Vec<usize> = if top >= 2 { vec![0, 1, top] } else { vec![0, 1] };
        let t = c.telescope(&cuts).unwrap();
        for (k, &level) in cuts.iter().enumerate() {
            for j in 1..=c.arity(level) {
                prop_assert_eq!(t.expand(k, j).unwrap(), c.expand(level, j).unwrap());
            }
        }
    }

    #[test]
    fn lengths_match_materialized_words(c in construction()) {
        let top = c.steps.len();
        for j in 1..=c.arity(top) {
            let w = c.expand(top, j).unwrap();
            prop_assert_eq!(c.length(top, j).unwrap(), w.len().into());
        }
    }

    #[test]
    fn level_summaries_match_materialized_subwords(c in construction(), n in 1usize..=9) {
        let top = c.steps.len();
        let levels = subword_sets(&c, n, top).unwrap();
        for (i, lvl) in levels.iter().enumerate() {
            for (j, s) in lvl.iter().enumerate() {
                let w = c.expand(i, j + 1).unwrap();
                prop_assert_eq!(s.members(), subwords(&w, n).unwrap().members);
                for m in 1..=n {
                    prop_assert_eq!(s.members_of_len(m), subwords(&w, m).unwrap().members);
                }
            }
        }
    }

    #[test]
    fn construction_json_round_trips(c in construction()) {
        let text = write_construction(&c);
        let back = parse_construction(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_construction(&back), text);
    }

    #[test]
    fn telescoping_never_raises_the_spacer_bound(c in construction()) {
        // buildings unused by the top step drop out, so the bound may shrink
        let top = c.steps.len();
        let before = spacer_stats(&c, top).unwrap().bound;
        let t = c.telescope(&[0, top]).unwrap();
        prop_assert!(spacer_stats(&t, 1).unwrap().bound <= before);
    }

    #[test]
    fn properness_survives_telescoping(c in construction()) {
        let top = c.steps.len();
        if check_proper(&c, top).unwrap().proper {
            let t = c.telescope(&[0, top]).unwrap();
            prop_assert!(check_proper(&t, 1).unwrap().proper);
        }
    }

    #[test]
    fn identity_code_fixes_windows(w in bits(40), origin in -20i64..20) {
        let ctx = WindowContext::new(w, origin).unwrap();
        prop_assert_eq!(apply_code(&ctx, &SlidingBlockCode::identity()).unwrap(), ctx);
    }

    #[test]
    fn bit_flip_is_an_involution(w in bits(40)) {
        let ctx = WindowContext::new(w, 0).unwrap();
        let f = SlidingBlockCode::bit_flip();
        let twice = apply_code(&apply_code(&ctx, &f).unwrap(), &f).unwrap();
        prop_assert_eq!(twice, ctx);
    }

    #[test]
    fn mef_digit_is_periodic_in_the_next_product(
        a in prop::collection::vec(2u64..=40, 3),
        k in -100_000i64..100_000,
        t in -5i64..5,
        i in 0usize..=2,
    ) {
        let p = MefParams::new(a.clone());
        let d = mef_digits(&p, &BigInt::from(k), i).unwrap();
        prop_assert!((1..=a[i]).contains(&d));
        let period = BigInt::from(p.big_a(i + 1).unwrap());
        let shifted = BigInt::from(k) + period * t;
        prop_assert_eq!(mef_digits(&p, &shifted, i).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn language_distance_is_symmetric(a in construction(), b in construction()) {
        let pa = language_profile(&a.telescope(&[0, a.steps.len()]).unwrap(), 6, 1).unwrap();
        let pb = language_profile(&b.telescope(&[0, b.steps.len()]).unwrap(), 6, 1).unwrap();
        match (d_l(&pa, &pb, 6), d_l(&pb, &pa, 6)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
        if let Ok(self_d) = d_l(&pa, &pa, 6) {
            prop_assert!(!self_d.is_exact());
        }
    }
}
