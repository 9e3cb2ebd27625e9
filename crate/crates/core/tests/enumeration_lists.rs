use rrg_core::enumeration::{count_table, partitions_of, Side};
use rrg_core::partition::Partition;

fn listed(side: Side, k: u32, a: u32, n: u32) -> Vec<String> {
    let mut out: Vec<String> = partitions_of(n).filter(|p| side.accepts(p, k, a)).map(|p| p.to_string()).collect();
    out.sort();
    out
}

fn expect(list: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = list.iter().map(|s| s.parse::<Partition>().unwrap().to_string()).collect();
    out.sort();
    out
}

#[test]
fn rr1_at_nine() {
    assert_eq!(listed(Side::Modulus, 2, 2, 9), expect(&["9", "6,1,1,1", "4,4,1", "4,1,1,1,1,1", "1,1,1,1,1,1,1,1,1"]));
    assert_eq!(listed(Side::Difference, 2, 2, 9), expect(&["9", "8,1", "7,2", "6,3", "5,3,1"]));
}

#[test]
fn rr2_at_nine() {
    assert_eq!(listed(Side::Modulus, 2, 1, 9), expect(&["7,2", "3,3,3", "3,2,2,2"]));
    assert_eq!(listed(Side::Difference, 2, 1, 9), expect(&["9", "7,2", "6,3"]));
}

#[test]
fn rrg_k3_a2_at_nine() {
    let modulus = [
        "8,1",
        "6,3",
        "6,1,1,1",
        "4,4,1",
        "4,3,1,1",
        "4,1,1,1,1,1",
        "3,3,3",
        "3,3,1,1,1",
        "3,1,1,1,1,1,1",
        "1,1,1,1,1,1,1,1,1",
    ];
    let difference = ["9", "8,1", "7,2", "6,3", "6,2,1", "5,4", "5,3,1", "5,2,2", "4,4,1", "4,3,2"];
    assert_eq!(listed(Side::Modulus, 3, 2, 9), expect(&modulus));
    assert_eq!(listed(Side::Difference, 3, 2, 9), expect(&difference));
}

#[test]
fn both_sides_agree_for_every_residue() {
    for (k, max) in [(2, 30), (3, 30), (4, 26)] {
        for a in 1..=k {
            let d = count_table(k, a, Side::Difference, max).unwrap().totals();
            let m = count_table(k, a, Side::Modulus, max).unwrap().totals();
            assert_eq!(d, m, "k={k} a={a}");
        }
    }
}

#[test]
fn larger_a_admits_more() {
    let totals: Vec<Vec<u64>> = (1..=3).map(|a| count_table(3, a, Side::Difference, 25).unwrap().totals()).collect();
    for (n, ((t1, t2), t3)) in totals[0].iter().zip(&totals[1]).zip(&totals[2]).enumerate() {
        assert!(t1 <= t2 && t2 <= t3, "n={n}");
    }
    // a=1 forbids 1 as a part, so the residues really differ
    assert!(totals[0][1] == 0 && totals[1][1] == 1);
}
