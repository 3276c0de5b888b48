use stanley_core::{ClassicalPoset, MatrixKind, Multiset, NatMatrix, SemistandardTableau};
use stanley_rsk::{peel, rsk_gl, rsk_gl_inverse, TableauPair};

fn fixture_pair() -> TableauPair {
    let t = SemistandardTableau::new(vec![vec![1, 1, 1, 2, 3], vec![2, 3, 3], vec![4, 4]], 4).unwrap();
    let u = SemistandardTableau::new(vec![vec![1, 1, 2, 2, 3], vec![3, 3, 5], vec![5, 5]], 5).unwrap();
    TableauPair::new(t, u).unwrap()
}

fn fixture_matrix() -> NatMatrix {
    NatMatrix::from_rows(
        vec![
            vec![1, 0, 0, 0, 2],
            vec![1, 0, 0, 0, 1],
            vec![0, 0, 3, 0, 0],
            vec![0, 2, 0, 0, 0],
        ],
        MatrixKind::Generic,
    )
    .unwrap()
}

fn ms(cells: &[((usize, usize), u64)]) -> Multiset {
    cells.iter().copied().collect()
}

#[test]
fn pair_maps_to_matrix() {
    assert_eq!(rsk_gl(&fixture_pair()).unwrap(), fixture_matrix());
    assert_eq!(rsk_gl_inverse(&fixture_matrix()), fixture_pair());
}

#[test]
fn width_and_height() {
    let poset = ClassicalPoset::Gl { p: 4, q: 5 };
    assert_eq!(poset.width_height(&fixture_matrix().multiset()).unwrap(), (3, 5));
}

#[test]
fn peel_matches_fixture() {
    let d = peel(&fixture_matrix(), ClassicalPoset::Gl { p: 4, q: 5 }).unwrap();
    assert_eq!(
        d.chains_star,
        vec![
            ms(&[((1, 1), 1), ((1, 5), 2), ((2, 5), 1)]),
            ms(&[((2, 1), 1), ((3, 3), 3)]),
            ms(&[((4, 2), 2)]),
        ]
    );
    assert_eq!(
        d.chains,
        vec![
            ms(&[((1, 1), 1), ((2, 1), 1), ((4, 2), 2)]),
            ms(&[((3, 3), 3)]),
            ms(&[((1, 5), 2), ((2, 5), 1)]),
        ]
    );
    assert_eq!(
        d.antichains,
        vec![
            ms(&[((1, 1), 1)]),
            ms(&[((1, 5), 1), ((2, 1), 1)]),
            ms(&[((1, 5), 1), ((3, 3), 1), ((4, 2), 1)]),
            ms(&[((2, 5), 1), ((3, 3), 1), ((4, 2), 1)]),
            ms(&[((3, 3), 1)]),
        ]
    );
    stanley_rsk::verify::check_peel(&fixture_matrix().multiset(), &d).unwrap();
}

#[test]
fn first_columns_read_off_the_chains() {
    let pair = fixture_pair();
    assert_eq!(pair.recording.first_column(), vec![1, 2, 4]);
    assert_eq!(pair.insertion.first_column(), vec![1, 3, 5]);
    stanley_rsk::verify::check_gl_full(&fixture_matrix()).unwrap();
}
