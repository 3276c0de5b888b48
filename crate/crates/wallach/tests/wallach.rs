use stanley_core::ClassicalPoset;
use stanley_series::{IntPolynomial, RationalSeries};
use stanley_wallach::*;

fn ser(c: &[i64], d: u32) -> RationalSeries {
    RationalSeries::new(IntPolynomial::from_coeffs(c), [(1, d)]).unwrap()
}

#[test]
fn golden_series() {
    for n in 4..=8 {
        assert_eq!(wallach_series(WallachPair::D { n }, 1).unwrap(), ser(&[1, 1], 2 * n as u32 - 3), "n={n}");
    }
    assert_eq!(wallach_series(WallachPair::E6, 1).unwrap(), ser(&[1, 5, 5, 1], 11));
    assert_eq!(wallach_series(WallachPair::E7, 1).unwrap(), ser(&[1, 10, 28, 28, 10, 1], 17));
    assert_eq!(wallach_series(WallachPair::E7, 2).unwrap(), ser(&[1, 1, 1], 26));
    assert!(wallach_series(WallachPair::E6, 2).is_err());
    assert!(wallach_series(WallachPair::D { n: 5 }, 2).is_err());
}

#[test]
fn facet_counts_and_sizes() {
    let e7 = RootPoset::new(WallachPair::E7).unwrap();
    let one = shelled_facets(&e7, 1);
    assert_eq!(one.len(), 78);
    assert!(one.iter().all(|f| f.cells.len() == 17));
    let two = shelled_facets(&e7, 2);
    assert_eq!(two.len(), 3);
    assert!(two.iter().all(|f| f.cells.len() == 26));
    let e6 = RootPoset::new(WallachPair::E6).unwrap();
    assert!(shelled_facets(&e6, 1).iter().all(|f| f.cells.len() == 11));
}

#[test]
fn exceptional_corner_posets() {
    for n in 4..=8 {
        let c = wallach_corner_poset(WallachPair::D { n }, 1).unwrap();
        assert_eq!(c.elements, vec![(n as i64 - 2, 1)]);
    }
    let e6 = wallach_corner_poset(WallachPair::E6, 1).unwrap();
    assert_eq!(e6.len(), 5);
    for (pair, k) in [(WallachPair::E6, 1), (WallachPair::E7, 1), (WallachPair::E7, 2), (WallachPair::D { n: 6 }, 1)] {
        let got = wallach_corner_poset(pair, k).unwrap();
        let want = wallach_reduced(pair, k).unwrap();
        assert!(got.same_covering_graph(&want), "{pair} k={k}");
    }
    assert_eq!(wallach_corner_poset(WallachPair::E7, 1).unwrap().len(), 10);
    assert_eq!(wallach_corner_poset(WallachPair::E7, 2).unwrap().len(), 1);
}

#[test]
fn classical_corner_posets() {
    let mut checked = 0;
    for k in 1..=3 {
        let mut posets = Vec::new();
        for p in 1..=7 {
            for q in 1..=7 {
                if k <= p.min(q) {
                    posets.push(ClassicalPoset::Gl { p, q });
                }
            }
        }
        for n in 1..=7 {
            if k <= n {
                posets.push(ClassicalPoset::O { n });
            }
            if 2 * k <= n {
                posets.push(ClassicalPoset::Sp { n });
            }
        }
        for poset in posets {
            let got = classical_corner_poset(poset, k).unwrap();
            let want = reduced_classical(poset, k).map_or_else(FinitePoset::empty, FinitePoset::from_classical);
            assert!(got.isomorphism(&want).is_some(), "{poset} k={k}: {:?}", got.elements);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn isomorphism_rejects_different_orders() {
    let chain = FinitePoset::from_classical(ClassicalPoset::Gl { p: 3, q: 1 });
    let anti = FinitePoset::new(vec![(1, 3), (2, 2), (3, 1)], |a, b| a == b);
    assert!(chain.isomorphism(&anti).is_none());
    assert!(!chain.same_covering_graph(&anti));
    let o = FinitePoset::from_classical(ClassicalPoset::O { n: 6 });
    let region = classical_corner_poset(ClassicalPoset::O { n: 6 }, 2).unwrap();
    assert!(region.isomorphism(&FinitePoset::from_classical(ClassicalPoset::Sp { n: 5 })).is_some());
    assert!(o.isomorphism(&region).is_none());
}

#[test]
fn exceptional_regions_exact() {
    let e7 = wallach_corner_poset(WallachPair::E7, 1).unwrap();
    let mut want = vec![(4, 8), (5, 8), (5, 5), (5, 6), (5, 7), (6, 5), (6, 6), (7, 5), (8, 5), (8, 4)];
    want.sort();
    assert_eq!(e7.elements, want);
    let e6 = wallach_corner_poset(WallachPair::E6, 1).unwrap();
    assert_eq!(e6.elements, vec![(3, 3), (4, 1), (4, 2), (4, 3), (5, 1)]);
}
