mod common;

use common::{cg_tensor, jt};
use jstrata::{Dominance, JordanType};
use proptest::prelude::*;

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn partial_sums_dominate(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

#[test]
fn dominance_matches_rank_chains_exhaustively() {
    for p in [3u32, 5, 7] {
        for n in 1..=9 {
            let types: Vec<JordanType> =
                partitions(n, p as usize).iter().map(|q| JordanType::from_parts(p, q).unwrap()).collect();
            for a in &types {
                for b in &types {
                    let (pa, pb) = (a.parts(), b.parts());
                    let expect = match (partial_sums_dominate(&pa, &pb), partial_sums_dominate(&pb, &pa)) {
                        (true, true) => Dominance::Equal,
                        (true, false) => Dominance::Greater,
                        (false, true) => Dominance::Less,
                        (false, false) => Dominance::Incomparable,
                    };
                    assert_eq!(a.compare_dominance(b).unwrap(), expect, "{a} vs {b}");
                    let ranks_ge = a.rank_chain().iter().zip(b.rank_chain()).all(|(x, y)| *x >= y);
                    assert_eq!(ranks_ge, matches!(expect, Dominance::Greater | Dominance::Equal), "{a} vs {b}");
                }
            }
        }
    }
}

#[test]
fn single_block_tensor_matches_clebsch_gordan() {
    for p in [3usize, 5, 7] {
        for a in 1..=p {
            for b in 1..=p {
                let got =
                    JordanType::blocks(p as u32, 1, a).unwrap().tensor(&JordanType::blocks(p as u32, 1, b).unwrap());
                let expect = JordanType::from_parts(p as u32, &cg_tensor(p, a, b)).unwrap();
                assert_eq!(got.unwrap(), expect, "[{a}] (x) [{b}] in characteristic {p}");
            }
        }
    }
}

#[test]
fn tensor_rank_is_not_monotone() {
    let (a, b, c) = (jt(5, "3[2]"), jt(5, "[3]+3[1]"), jt(5, "[2]"));
    assert!(a.rank_of_power(1).unwrap() > b.rank_of_power(1).unwrap());
    assert!(a.tensor(&c).unwrap().rank_of_power(1).unwrap() < b.tensor(&c).unwrap().rank_of_power(1).unwrap());
}

fn jordan_type(p: u32, max_blocks: usize) -> impl Strategy<Value = JordanType> {
    prop::collection::vec(0..=max_blocks, p as usize).prop_map(move |counts| JordanType::new(p, counts).unwrap())
}

fn small_type() -> impl Strategy<Value = JordanType> {
    prop_oneof![jordan_type(3, 3), jordan_type(5, 2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_chain_round_trip(a in small_type()) {
        let back = JordanType::from_rank_chain(a.characteristic(), a.dim(), &a.rank_chain()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn text_round_trip(a in small_type()) {
        prop_assert_eq!(JordanType::parse(a.characteristic(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn flip_is_an_involution_on_stable_types(a in small_type()) {
        let s = a.stable_part();
        prop_assert_eq!(s.flip().unwrap().flip().unwrap(), s.clone());
        prop_assert_eq!(s.flip().unwrap().num_blocks(), s.num_blocks());
    }

    #[test]
    fn tensor_commutes(a in jordan_type(5, 2), b in jordan_type(5, 2)) {
        prop_assert_eq!(a.tensor(&b).unwrap(), b.tensor(&a).unwrap());
    }

    #[test]
    fn tensor_associates(a in jordan_type(3, 2), b in jordan_type(3, 2), c in jordan_type(3, 1)) {
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_distributes_over_blocks(a in jordan_type(5, 2), b in jordan_type(5, 2)) {
        let mut expect = JordanType::zero(5);
        for x in a.parts() {
            for y in b.parts() {
                expect = expect.add(&JordanType::from_parts(5, &cg_tensor(5, x, y)).unwrap()).unwrap();
            }
        }
        prop_assert_eq!(a.tensor(&b).unwrap(), expect);
    }

    #[test]
    fn tensor_preserves_dominance(a in jordan_type(5, 2), b in jordan_type(5, 2), c in jordan_type(5, 1)) {
        if a.dim() == b.dim() && a.compare_dominance(&b).unwrap() == Dominance::Greater {
            let d = a.tensor(&c).unwrap().compare_dominance(&b.tensor(&c).unwrap()).unwrap();
            prop_assert!(matches!(d, Dominance::Greater | Dominance::Equal));
        }
    }
}
