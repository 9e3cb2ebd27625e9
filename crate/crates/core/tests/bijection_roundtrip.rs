use rrg_core::bijection::{from_triple, to_triple, triples_up_to, MoveKind};
use rrg_core::enumeration::partitions_of;
use rrg_core::partition::{check_difference, decompose};

const MAX_WEIGHT: u32 = 24;

#[test]
fn backward_then_forward_is_identity() {
    for a in 1..=3 {
        for n in 0..=MAX_WEIGHT {
            for lam in partitions_of(n).filter(|p| check_difference(p, 3, a)) {
                let (t, trace) = to_triple(a, &lam).unwrap_or_else(|e| panic!("a={a} {lam}: {e}"));
                assert!(t.mu.windows(2).all(|w| w[0] >= w[1]) && t.mu.iter().all(|x| x % 2 == 0), "{lam} {t:?}");
                assert!(t.nu.windows(2).all(|w| w[0] >= w[1]), "{lam} {t:?}");
                assert_eq!(t.weight(), lam.weight());
                let mut prev = lam.weight();
                for step in &trace.steps {
                    assert!(check_difference(&step.partition, 3, a));
                    let delta = match step.kind {
                        MoveKind::Pair => 2,
                        MoveKind::Singleton => 1,
                    };
                    assert_eq!(prev - step.partition.weight(), delta);
                    prev = step.partition.weight();
                    let f = decompose(&step.partition).unwrap();
                    assert_eq!((f.pair_count() as u32, f.singleton_count() as u32), (t.pairs, t.singletons));
                }
                let (back, _) = from_triple(&t).unwrap_or_else(|e| panic!("a={a} {lam} {t:?}: {e}"));
                assert_eq!(back, lam);
            }
        }
    }
}

#[test]
fn forward_then_backward_is_identity() {
    for a in 1..=3 {
        for t in triples_up_to(a, MAX_WEIGHT) {
            let (lam, trace) = from_triple(&t).unwrap_or_else(|e| panic!("{t:?}: {e}"));
            assert!(check_difference(&lam, 3, a));
            assert_eq!(lam.weight(), t.weight());
            assert!(trace.steps.iter().all(|s| check_difference(&s.partition, 3, a)));
            let (again, _) = to_triple(a, &lam).unwrap();
            assert_eq!(again, t);
        }
    }
}

#[test]
fn triples_and_partitions_agree_in_number() {
    for a in 1..=3 {
        let mut by_weight = vec![0usize; MAX_WEIGHT as usize + 1];
        for t in triples_up_to(a, MAX_WEIGHT) {
            by_weight[t.weight() as usize] += 1;
        }
        for n in 0..=MAX_WEIGHT {
            let valid = partitions_of(n).filter(|p| check_difference(p, 3, a)).count();
            assert_eq!(by_weight[n as usize], valid, "a={a} n={n}");
        }
    }
}
