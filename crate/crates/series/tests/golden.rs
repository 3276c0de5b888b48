use num_bigint::BigInt;
use stanley_core::{Column, Partition};
use stanley_lattice::Orientation;
use stanley_series::*;

fn ser(c: &[i64], den: &[(usize, u32)]) -> RationalSeries {
    RationalSeries::new(IntPolynomial::from_coeffs(c), den.iter().copied()).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn col(v: &[usize]) -> Column {
    Column::new(v.to_vec()).unwrap()
}

fn inv(g: Group, k: usize) -> RationalSeries {
    hilbert_invariants(g, k).unwrap().series()
}

#[test]
fn gl_invariants() {
    assert_eq!(inv(Group::Gl { p: 4, q: 4 }, 3), ser(&[1, 0, 1, 0, 1, 0, 1], &[(2, 15)]));
    assert_eq!(inv(Group::Gl { p: 3, q: 5 }, 4), ser(&[1], &[(2, 15)]));
}

#[test]
fn sl2_three_four() {
    let s = inv(Group::Sl { p: 3, q: 4 }, 2);
    assert_eq!(s, ser(&[1, 0, 10, 0, 20, 0, 10, 0, 1], &[(2, 11)]));
    // SL_2 is Sp_2 acting on 3 + 4 copies
    assert_eq!(s, inv(Group::Sp { n: 7 }, 1));
}

#[test]
fn sl3_square() {
    let s = inv(Group::Sl { p: 4, q: 4 }, 3);
    let expected = ser(&[1, 0, 4, 4, 10, 8, 14, 8, 10, 4, 4, 0, 1], &[(2, 12), (3, 4)]);
    assert_eq!(s, expected);
}

#[test]
fn sl3_three_four() {
    let s = inv(Group::Sl { p: 3, q: 4 }, 3);
    let expected = ser(&[1, 0, 3, 2, 6, 3, 8, 3, 6, 2, 3, 0, 1], &[(2, 9), (3, 3), (6, 1)]);
    assert_eq!(s, expected);
}

#[test]
fn orthogonal_family() {
    assert_eq!(inv(Group::O { n: 4 }, 2), ser(&[1, 0, 3, 0, 6], &[(2, 7)]));
    let semi = ser(&[0, 0, 6, 0, 3, 0, 1], &[(2, 7)]);
    assert_eq!(hilbert_o_semiinvariants(2, 4, SemiForm::Nonpure).unwrap(), semi);
    assert_eq!(hilbert_o_semiinvariants(2, 4, SemiForm::Pure).unwrap(), semi);
    let so = inv(Group::So { n: 4 }, 2);
    assert_eq!(so, ser(&[1, 0, 9, 0, 9, 0, 1], &[(2, 7)]));
    assert_eq!(so.reduce().to_string(), "(1+9t^2+9t^4+t^6)/(1-t^2)^7");
}

#[test]
fn gl_covariants_example() {
    let c = hilbert_gl_covariants(3, 4, 4, &part(&[2, 1]), &Partition::empty()).unwrap();
    assert_eq!(c.bin_sizes(), vec![8, 8, 4, 0]);
    assert_eq!(c.series, ser(&[0, 0, 0, 20, 0, 20, 0, -4, 0, -4], &[(2, 15)]));
    let first = series_from_start_column(&col(&[1, 2, 3]), 4, 4, Orientation::Columns).unwrap();
    assert_eq!(first, ser(&[1, 0, 1, 0, 1, 0, 1], &[(2, 15)]));
    // dual side gives the same series by symmetry of the square
    let d = hilbert_gl_covariants(3, 4, 4, &Partition::empty(), &part(&[2, 1])).unwrap();
    assert_eq!(d.series, c.series);
    assert!(hilbert_gl_covariants(3, 4, 4, &part(&[1]), &part(&[1])).is_err());
}

#[test]
fn o_covariants_example() {
    let bins = hilbert_o_covariants_wedge(3, 4, 2).unwrap();
    let painted = hilbert_o_covariants_wedge_painted(3, 4, 2).unwrap();
    let expected = ser(&[0, 0, 6, 0, 6], &[(2, 9)]);
    assert_eq!(bins.series, expected);
    assert_eq!(painted, expected);
    assert_eq!(series_from_start_column_o(&col(&[2, 3, 4]), 4).unwrap(), ser(&[1], &[(2, 6)]));
    assert_eq!(series_from_start_column_o(&col(&[1, 2, 3]), 4).unwrap(), ser(&[1, 0, 1, 0, 1, 0, 1], &[(2, 9)]));
}

#[test]
fn sp_covariants_example() {
    let c = hilbert_sp_covariants(2, 6, &part(&[1, 1])).unwrap();
    assert_eq!(c.series, ser(&[0, 0, 15], &[(2, 14)]));
    let total = c.series.add(&inv(Group::Sp { n: 6 }, 2));
    assert_eq!(total, ser(&[1, 0, 16, 0, 1], &[(2, 14)]));
    let expect = [
        (vec![2, 4], ser(&[1, 0, 1, 0, 1], &[(2, 14)])),
        (vec![2, 5], ser(&[1, 0, 2, 0, 2, 0, 1], &[(2, 13)])),
        (vec![2, 6], ser(&[1, 0, 3, 0, 1], &[(2, 12)])),
        (vec![3, 4], ser(&[1, 0, 1, 0, 1], &[(2, 13)])),
        (vec![3, 5], ser(&[1, 0, 2, 0, 2, 0, 1], &[(2, 12)])),
        (vec![3, 6], ser(&[1, 0, 3, 0, 1], &[(2, 11)])),
        (vec![4, 5], ser(&[1, 0, 1, 0, 1], &[(2, 11)])),
        (vec![4, 6], ser(&[1, 0, 2], &[(2, 10)])),
        (vec![5, 6], ser(&[1], &[(2, 9)])),
    ];
    for (i, s) in expect {
        assert_eq!(series_from_start_column_sp(&col(&i), 6).unwrap(), s, "start column {i:?}");
    }
}

#[test]
fn degrees_and_gorenstein() {
    assert_eq!(bernstein_degree(&inv(Group::O { n: 4 }, 2)).unwrap(), BigInt::from(10));
    assert!(gorenstein_check(&inv(Group::Gl { p: 2, q: 2 }, 1)));
    assert!(!gorenstein_check(&inv(Group::Gl { p: 2, q: 3 }, 1)));
    assert!(gorenstein_check(&inv(Group::O { n: 2 }, 1)));
}
