use std::collections::BTreeSet;

use altperm::exact::{euler_rational, int, Rational};
use altperm::formulas::{alt_shape, b_cycle_type, fixed_point_series, multiset_count};
use altperm::perms::{enumerate_syt, partitions, Composition, Partition, SkewShape};
use proptest::prelude::*;

fn sum(values: impl IntoIterator<Item = Rational>) -> Rational {
    values.into_iter().fold(int(0), |a, b| a + b)
}

fn composition_with_odd_size() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..4, 1..=4).prop_filter("odd size", |v| v.iter().sum::<usize>() % 2 == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conservation(n in 1usize..=8, reverse: bool) {
        let e = euler_rational(n);
        let by_cycle = sum(partitions(n).iter().map(|rho| b_cycle_type(rho, reverse).unwrap().value));
        prop_assert_eq!(&by_cycle, &e);
        let by_fixed = sum(fixed_point_series(n, reverse).unwrap()[n].iter().cloned());
        prop_assert_eq!(&by_fixed, &e);
        let by_shape = sum(partitions(n).into_iter().map(|lam| {
            let shape = SkewShape::straight(lam);
            let syt = enumerate_syt(&shape, 14).unwrap().len();
            alt_shape(&shape, reverse).unwrap().value * int(syt as i64)
        }));
        prop_assert_eq!(&by_shape, &e);
    }

    #[test]
    fn multiset_order_invariance(parts in composition_with_odd_size(), perm_seed: u64, mask_a: u8, mask_b: u8) {
        let k = parts.len();
        let mut shuffled = parts.clone();
        let mut s = perm_seed;
        for i in (1..k).rev() {
            shuffled.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let set = |mask: u8| -> BTreeSet<usize> { (0..k).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect() };
        let a = multiset_count(&Composition::new(parts).unwrap(), &set(mask_a), false).unwrap();
        let b = multiset_count(&Composition::new(shuffled).unwrap(), &set(mask_b), false).unwrap();
        prop_assert!(a.consistent() && b.consistent());
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn multiset_parts_commute_with_membership(parts in prop::collection::vec(1usize..4, 1..=4), perm_seed: u64, mask: u8, reverse: bool) {
        let k = parts.len();
        let mut order: Vec<usize> = (0..k).collect();
        let mut s = perm_seed;
        for i in (1..k).rev() {
            order.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let row_set: BTreeSet<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let moved: BTreeSet<usize> = (0..k).filter(|&j| row_set.contains(&(order[j] + 1))).map(|j| j + 1).collect();
        let shuffled: Vec<usize> = order.iter().map(|&i| parts[i]).collect();
        let a = multiset_count(&Composition::new(parts).unwrap(), &row_set, reverse).unwrap().value;
        let b = multiset_count(&Composition::new(shuffled).unwrap(), &moved, reverse).unwrap().value;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reverse_multiset_matches_forward_for_odd_sizes(parts in composition_with_odd_size(), mask: u8) {
        let alpha = Composition::new(parts).unwrap();
        let row_set: BTreeSet<usize> = (0..alpha.len()).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let fwd = multiset_count(&alpha, &row_set, false).unwrap().value;
        let rev = multiset_count(&alpha, &row_set, true).unwrap().value;
        prop_assert_eq!(fwd, rev);
    }

    #[test]
    fn cycle_type_routes_agree(n in 1usize..=10, pick: prop::sample::Index, reverse: bool) {
        let all = partitions(n);
        let rho = &all[pick.index(all.len())];
        let r = b_cycle_type(rho, reverse).unwrap();
        prop_assert!(r.consistent(), "{:?}", r);
        prop_assert!(r.integer().is_some());
    }
}

#[test]
fn ncycle_symmetry() {
    for n in 2..=10 {
        let rho = Partition::rectangle(n, 1);
        let b = b_cycle_type(&rho, false).unwrap().value;
        let bs = b_cycle_type(&rho, true).unwrap().value;
        if n == 2 {
            assert_ne!(b, bs);
        } else {
            assert_eq!(b, bs, "n = {n}");
        }
    }
}

#[test]
fn even_multisets_depend_on_row_set() {
    let alpha = Composition::new(vec![2, 2]).unwrap();
    let none = multiset_count(&alpha, &BTreeSet::new(), false).unwrap().value;
    let both = multiset_count(&alpha, &BTreeSet::from([1, 2]), false).unwrap().value;
    assert_eq!((none, both), (int(1), int(2)));
}
