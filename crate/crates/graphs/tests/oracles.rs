//! Graph counts against the standard-tableau sums and against the series.

use num_bigint::BigUint;
use num_traits::Zero;
use stanley_core::{syt_count, Partition};
use stanley_graphs::*;
use stanley_series::{hilbert_invariants, Group};

fn tensor(g: GraphGroup, k: usize) -> BigUint {
    count_tensor_invariants(g, k, &Limits::default()).unwrap()
}

fn syt_sum(n: usize, keep: impl Fn(&Partition) -> bool, weight: impl Fn(&Partition) -> BigUint) -> BigUint {
    Partition::of_size(n).into_iter().filter(|mu| keep(mu)).map(|mu| weight(&mu)).sum()
}

#[test]
fn gl_and_sl_tensor_counts() {
    for p in 0..=6 {
        for k in 1..=3 {
            let want = syt_sum(p, |mu| mu.length() <= k, |mu| syt_count(mu) * syt_count(mu));
            assert_eq!(tensor(GraphGroup::Gl { p, q: p }, k), want, "p={p} k={k}");
        }
    }
    for p in 0..=8 {
        for q in 0..=(9 - p) {
            for k in 1..=3 {
                let got = tensor(GraphGroup::Sl { p, q }, k);
                let diff = p.abs_diff(q);
                let want = if diff % k != 0 {
                    BigUint::zero()
                } else {
                    let m = diff / k;
                    syt_sum(p.min(q), |mu| mu.length() <= k, |mu| syt_count(&mu.add_rectangle(k, m)) * syt_count(mu))
                };
                assert_eq!(got, want, "p={p} q={q} k={k}");
            }
        }
    }
}

#[test]
fn orthogonal_and_symplectic_tensor_counts() {
    for n in 0..=8 {
        for k in 1..=4 {
            let o = if n % 2 == 1 {
                BigUint::zero()
            } else {
                syt_sum(n, |mu| mu.length() <= k && mu.all_rows_even(), syt_count)
            };
            assert_eq!(tensor(GraphGroup::O { n }, k), o, "O n={n} k={k}");
            let so = syt_sum(
                n,
                |mu| mu.length() <= k && (mu.all_rows_even() || (mu.length() == k && mu.parts().iter().all(|r| r % 2 == 1))),
                syt_count,
            );
            assert_eq!(tensor(GraphGroup::So { n }, k), so, "SO n={n} k={k}");
            let sp = if n % 2 == 1 {
                BigUint::zero()
            } else {
                syt_sum(n, |mu| mu.length() <= 2 * k && mu.all_columns_even(), syt_count)
            };
            assert_eq!(tensor(GraphGroup::Sp { n }, k), sp, "Sp n={n} k={k}");
        }
    }
}

fn series_group(g: GraphGroup) -> Group {
    match g {
        GraphGroup::Gl { p, q } => Group::Gl { p, q },
        GraphGroup::Sl { p, q } => Group::Sl { p, q },
        GraphGroup::O { n } => Group::O { n },
        GraphGroup::So { n } => Group::So { n },
        GraphGroup::Sp { n } => Group::Sp { n },
    }
}

#[test]
fn graded_counts_match_series() {
    let mut groups = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            groups.push(GraphGroup::Gl { p, q });
            groups.push(GraphGroup::Sl { p, q });
        }
    }
    for n in 1..=4 {
        groups.extend([GraphGroup::O { n }, GraphGroup::So { n }, GraphGroup::Sp { n }]);
    }
    let limits = Limits::default();
    for g in groups {
        for k in 0..=2 {
            if let GraphGroup::Sl { p, q } = g {
                if k == 0 || k > p.min(q) {
                    continue;
                }
            }
            let graphs = graded_dimensions_by_graphs(g, k, 8, &limits).unwrap();
            let series = hilbert_invariants(series_group(g), k).unwrap().series().expand(8);
            let series: Vec<BigUint> = series.into_iter().map(|c| c.to_biguint().expect("nonnegative")).collect();
            assert_eq!(graphs, series, "{g:?} k={k}");
        }
    }
}

#[test]
fn degree_zero_is_one() {
    let d = graded_dimension_by_graphs(GraphGroup::So { n: 3 }, 2, 0, &Limits::default()).unwrap();
    assert_eq!(d, BigUint::from(1u8));
    let o = graded_dimension_by_graphs(GraphGroup::O { n: 4 }, 2, 2, &Limits::default()).unwrap();
    assert_eq!(o, BigUint::from(10u8));
}
