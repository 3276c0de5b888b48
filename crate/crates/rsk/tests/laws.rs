use proptest::prelude::*;
use stanley_core::{for_each_matrix, ssyt_enumerate, MatrixKind, NatMatrix, Partition};
use stanley_rsk::verify::{check_gl, check_gl_full, check_o, check_sp};
use stanley_rsk::{rsk_gl, rsk_gl_inverse, rsk_o, rsk_o_inverse, rsk_sp, rsk_sp_inverse, twin_rsk, TableauPair};

#[test]
fn generic_matrices_small_exhaustive() {
    for (p, q, s) in [(3, 3, 6), (2, 4, 6), (4, 2, 6), (1, 5, 8), (5, 1, 8)] {
        for_each_matrix(p, q, MatrixKind::Generic, s, |m| check_gl_full(m).unwrap());
    }
}

#[test]
fn upper_triangular_exhaustive() {
    for n in 1..=4 {
        for_each_matrix(n, n, MatrixKind::UpperTriangular, 4, |m| check_o(m).unwrap());
    }
}

#[test]
fn strictly_upper_triangular_exhaustive() {
    for n in 2..=5 {
        for_each_matrix(n, n, MatrixKind::StrictlyUpperTriangular, 4, |m| check_sp(m).unwrap());
    }
}

#[test]
fn tableau_side_round_trips() {
    for size in 0..=8 {
        for shape in Partition::of_size(size) {
            if shape.all_rows_even() {
                for t in ssyt_enumerate(&shape, 3) {
                    assert_eq!(rsk_o_inverse(&rsk_o(&t).unwrap()).unwrap(), t);
                }
            }
            if shape.all_columns_even() {
                for t in ssyt_enumerate(&shape, 4) {
                    assert_eq!(rsk_sp_inverse(&rsk_sp(&t).unwrap()).unwrap(), t);
                }
            }
        }
    }
}

#[test]
fn twin_trace_counts_odd_columns() {
    let shape = Partition::new(vec![2, 1]).unwrap();
    for t in ssyt_enumerate(&shape, 3) {
        assert_eq!(twin_rsk(&t).trace(), 1);
    }
    for size in 0..=6 {
        for shape in Partition::of_size(size) {
            let odd = shape.column_lengths().iter().filter(|c| *c % 2 == 1).count() as u64;
            for t in ssyt_enumerate(&shape, 3) {
                let pair = TableauPair::new(t.clone(), t.clone()).unwrap();
                let full = rsk_gl(&pair).unwrap();
                assert_eq!(full, full.transpose());
                assert_eq!(twin_rsk(&t).trace(), odd);
            }
        }
    }
}

fn arb_matrix(rows: usize, cols: usize, max_entry: u64) -> impl Strategy<Value = NatMatrix> {
    proptest::collection::vec(0..=max_entry, rows * cols).prop_map(move |v| {
        NatMatrix::from_rows(v.chunks(cols).map(<[u64]>::to_vec).collect(), MatrixKind::Generic).unwrap()
    })
}

proptest! {
    #[test]
    fn random_generic_round_trip(m in arb_matrix(4, 4, 2).prop_filter("sum at most 10", |m| m.sum() <= 10)) {
        prop_assert_eq!(rsk_gl(&rsk_gl_inverse(&m)).unwrap(), m.clone());
        prop_assert!(check_gl(&m).is_ok());
    }

    #[test]
    fn random_rectangular_laws(m in arb_matrix(3, 6, 3)) {
        prop_assert!(check_gl(&m).is_ok());
    }
}
