use std::collections::HashSet;

use gauss_epple::artin::{
    artin_cocycle_fbar, artin_membership, artin_sge_image, ArtinElement, RootSystem, RootType, RootVector,
};
use gauss_epple::sge::sge_image;
use gauss_epple::{BraidWord, Int};
use proptest::prelude::*;

fn system(kind: RootType) -> RootSystem {
    RootSystem::build(kind).unwrap()
}

fn kinds() -> impl Strategy<Value = RootType> {
    prop_oneof![
        Just(RootType::A(3)),
        Just(RootType::B(3)),
        Just(RootType::D(4)),
        Just(RootType::G2),
        Just(RootType::I2(5)),
        Just(RootType::I2(8)),
    ]
}

fn word_for(rank: usize, raw: &[(usize, bool)]) -> Vec<i32> {
    raw.iter()
        .map(|&(a, pos)| {
            let a = (a % rank + 1) as i32;
            if pos {
                a
            } else {
                -a
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn conjugated_squares_have_symmetric_images(
        kind in kinds(),
        raw in prop::collection::vec((0usize..8, any::<bool>()), 0..10),
        a in 0usize..8,
    ) {
        let rs = system(kind);
        let a = a % rs.rank() + 1;
        let c = word_for(rs.rank(), &raw);
        let mut w = c.clone();
        w.extend([a as i32, a as i32]);
        w.extend(c.iter().rev().map(|&x| -x));
        let img = artin_sge_image::<Int>(&w, &rs).unwrap();
        let cc = artin_sge_image::<Int>(&c, &rs).unwrap();
        let root = cc.c().apply(rs.simple_root(a));
        let expect = RootVector::indicator(rs.len(), root).add(&RootVector::indicator(rs.len(), rs.negate(root)));
        prop_assert_eq!(img.v(), &expect);
        prop_assert!(img.c().is_identity());
        prop_assert!(img.cocycle_part(&rs).is_zero());
    }

    #[test]
    fn images_satisfy_the_membership_test(
        kind in kinds(),
        raw in prop::collection::vec((0usize..8, any::<bool>()), 0..30),
    ) {
        let rs = system(kind);
        let img = artin_sge_image::<Int>(&word_for(rs.rank(), &raw), &rs).unwrap();
        prop_assert!(artin_membership(img.v(), img.c(), &rs).unwrap());
    }
}

#[test]
fn type_a_matches_the_matrix_homomorphism() {
    let mut checked = 0;
    for n in [3usize, 4] {
        let rs = system(RootType::A(n - 1));
        let label = |i: usize, j: usize| (0..rs.len()).find(|&l| rs.type_a_entry(l) == Some((i, j))).unwrap();
        for seed in 0..100u64 {
            let w = BraidWord::random(n, (seed % 25) as usize, seed);
            let m = sge_image::<Int>(&w);
            let g = artin_sge_image::<Int>(w.letters(), &rs).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let l = label(i, j);
                        assert_eq!(g.v().get(l), m.m().get(i, j), "{w} at ({i}, {j})");
                        let moved = label(m.pi().apply(i), m.pi().apply(j));
                        assert_eq!(g.c().apply(l), moved);
                    }
                }
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 200);
}

#[test]
fn fbar_is_a_cocycle_on_whole_groups() {
    for kind in [RootType::B(3), RootType::G2, RootType::I2(7)] {
        let rs = system(kind);
        let group = rs.coxeter_group();
        let f: Vec<RootVector<Int>> = group.iter().map(|c| artin_cocycle_fbar(c, &rs)).collect();
        for (x, fx) in group.iter().zip(&f) {
            for (y, fy) in group.iter().zip(&f) {
                let lhs = artin_cocycle_fbar::<Int>(&x.compose(y), &rs);
                assert_eq!(lhs, fx.add(&fy.acted(x)), "{kind}");
            }
        }
    }
}

#[test]
fn coxeter_element_orders_divide_group_order() {
    for kind in [RootType::A(3), RootType::B(3), RootType::D(4), RootType::G2, RootType::I2(8)] {
        let rs = system(kind);
        let group = rs.coxeter_group();
        for c in &group {
            assert_eq!(group.len() % c.order(), 0, "{kind}");
        }
    }
}

fn artin_ball(rs: &RootSystem, radius: usize) -> HashSet<ArtinElement<Int>> {
    let gens: Vec<ArtinElement<Int>> = (1..=rs.rank())
        .flat_map(|a| {
            let g = ArtinElement::generator(rs, a);
            let gi = g.inverse();
            [g, gi]
        })
        .collect();
    let mut seen = HashSet::from([ArtinElement::identity(rs)]);
    let mut frontier: Vec<_> = seen.iter().cloned().collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

#[test]
fn membership_is_sound_on_balls() {
    for kind in [RootType::A(2), RootType::B(2), RootType::G2, RootType::I2(5)] {
        let rs = system(kind);
        for g in artin_ball(&rs, 6) {
            assert!(artin_membership(g.v(), g.c(), &rs).unwrap(), "{kind}: {g:?}");
        }
    }
}

#[test]
fn membership_is_complete_on_a_small_window() {
    // A2: every member with entries in {-1, 0, 1} is reached by length 8
    let rs = system(RootType::A(2));
    let reached = artin_ball(&rs, 8);
    let group = rs.coxeter_group();
    let mut members = 0;
    for code in 0..3usize.pow(rs.len() as u32) {
        let values: Vec<Int> = (0..rs.len()).map(|i| (code / 3usize.pow(i as u32) % 3) as Int - 1).collect();
        let v = RootVector::from_values(values);
        for c in &group {
            if artin_membership(&v, c, &rs).unwrap() {
                members += 1;
                assert!(reached.contains(&ArtinElement::new(v.clone(), c.clone())), "{v:?} {c:?}");
            }
        }
    }
    assert!(members > 0);
}
