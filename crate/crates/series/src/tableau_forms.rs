//! Second derivations of the invariant series, as sums over partitions
//! weighted by dimensions of polynomial GL-modules.

use num_bigint::BigInt;
use stanley_core::{gl_module_dim, Partition};

use crate::poly::IntPolynomial;
use crate::rational::RationalSeries;

fn over(num: IntPolynomial, e: usize) -> RationalSeries {
    RationalSeries::new(num, [(2, e as u32)]).expect("positive degree")
}

/// GL: Σ dim F^ν_{p-k} · dim F^ν_{q-k} · t^{2|ν|} over ν in a min(p,q)-k by k box.
pub fn gl_invariants(p: usize, q: usize, k: usize) -> RationalSeries {
    let k = k.min(p.min(q));
    let mut num = IntPolynomial::zero();
    for nu in Partition::in_box(p.min(q) - k, k) {
        let c: BigInt = (gl_module_dim(&nu, p - k) * gl_module_dim(&nu, q - k)).into();
        num.add_term(2 * nu.size(), c);
    }
    over(num, k * (p + q - k))
}

fn o_box_sum(n: usize, k: usize, keep: impl Fn(&Partition) -> bool) -> RationalSeries {
    let rows = n - k + 1;
    let mut num = IntPolynomial::zero();
    for nu in Partition::in_box(rows, k).into_iter().filter(|nu| keep(nu)) {
        num.add_term(nu.size(), gl_module_dim(&nu, rows).into());
    }
    over(num, k * (2 * n - k + 1) / 2)
}

/// O: columns of even length in an (n-k+1) by k box.
pub fn o_invariants(n: usize, k: usize) -> RationalSeries {
    o_box_sum(n, k.min(n), |nu| nu.all_columns_even())
}

/// O semiinvariants: exactly k columns, all of odd length.
pub fn o_semiinvariants(n: usize, k: usize) -> RationalSeries {
    assert!(k >= 1 && k <= n, "semiinvariants need 1 <= k <= n");
    o_box_sum(n, k, |nu| nu.part(0) == k && nu.column_lengths().iter().all(|c| c % 2 == 1))
}

/// SO: all columns even, or exactly k columns all odd.
pub fn so_invariants(n: usize, k: usize) -> RationalSeries {
    if k == 0 || k > n {
        return o_invariants(n, k);
    }
    o_box_sum(n, k, |nu| {
        nu.all_columns_even() || (nu.part(0) == k && nu.column_lengths().iter().all(|c| c % 2 == 1))
    })
}

/// Sp: rows of even length in an (n-2k-1) by 2k box.
pub fn sp_invariants(n: usize, k: usize) -> RationalSeries {
    let k = k.min(n / 2);
    let rows = (n + 1).saturating_sub(2 * k + 2);
    let mut num = IntPolynomial::zero();
    for nu in Partition::in_box(rows, 2 * k).into_iter().filter(Partition::all_rows_even) {
        num.add_term(nu.size(), gl_module_dim(&nu, rows).into());
    }
    over(num, k * (2 * n - 2 * k - 1))
}
