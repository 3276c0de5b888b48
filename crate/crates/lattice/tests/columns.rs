use std::collections::BTreeMap;

use stanley_core::{gl_module_dim, ssyt_enumerate, Column, Partition};
use stanley_lattice::columns::{column_leq, minimal_arrow_target};
use stanley_lattice::{bin_of_chain, column_arrow, column_preceq, sigma_chains, BinContext};

fn col(v: &[usize]) -> Column {
    Column::new(v.to_vec()).unwrap()
}

#[test]
fn preceq_is_reflexive_and_matches_order_on_full_columns() {
    for n in 1..=6 {
        for k in 0..=n.min(3) {
            let full = Column::all(n, k);
            for a in &full {
                assert!(column_preceq(a, a, n).unwrap());
                for b in &full {
                    assert_eq!(column_preceq(a, b, n).unwrap(), a.leq(b), "n={n} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn arrow_is_self_dual_under_tilde() {
    for n in 1..=6 {
        for k in 1..=3 {
            let cols = Column::all_up_to(n, k);
            for a in &cols {
                for b in &cols {
                    let forward = column_arrow(a, b, k).unwrap();
                    let backward = column_arrow(&b.tilde(n), &a.tilde(n), k).unwrap();
                    assert_eq!(forward, backward, "n={n} k={k} {a} {b}");
                    if a.len() + b.len() <= k {
                        assert!(forward);
                    }
                }
            }
        }
    }
}

#[test]
fn chains_are_ordered_and_counted() {
    for n in 1..=5 {
        for k in 1..=3 {
            for size in 0..=4 {
                for sigma in Partition::of_size(size).into_iter().filter(|s| s.length() <= k) {
                    let chains = sigma_chains(&sigma, n, k).unwrap();
                    assert_eq!(chains.len() as u64, u64::try_from(gl_module_dim(&sigma, n)).unwrap());
                    for ch in &chains {
                        for w in ch.columns.windows(2) {
                            assert!(column_preceq(&w[0], &w[1], n).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn insertion_bin_is_the_minimal_arrow_target() {
    for n in 1..=7 {
        for k in 1..=n.min(4) {
            for x in Column::all_up_to(n, k) {
                let chain = stanley_lattice::SigmaChain { columns: vec![x.clone()], shape: Partition::empty(), alphabet: n };
                let bin = bin_of_chain(&chain, BinContext::Gl { n, k }).unwrap();
                assert_eq!(Some(bin.clone()), minimal_arrow_target(&x, n, k, |_| 1), "x={x}");
                assert!(column_arrow(&x, &bin, k).unwrap());
                assert!(x.entries().iter().all(|e| bin.entries().contains(e)));
                // any full column receiving x dominates the bin
                for other in Column::all(n, k) {
                    if column_arrow(&x, &other, k).unwrap() {
                        assert!(bin.leq(&other));
                    }
                }
            }
        }
    }
}

fn bin_sizes(sigma: &Partition, ctx: BinContext) -> BTreeMap<Column, usize> {
    let (n, k) = match ctx {
        BinContext::Gl { n, k } | BinContext::Sp { n, k } => (n, k),
    };
    let mut out = BTreeMap::new();
    for ch in sigma_chains(sigma, n, k).unwrap() {
        *out.entry(bin_of_chain(&ch, ctx).unwrap()).or_insert(0) += 1;
    }
    out
}

#[test]
fn worked_bins() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let gl = bin_sizes(&p(&[2, 1]), BinContext::Gl { n: 4, k: 3 });
    assert_eq!(gl.values().copied().collect::<Vec<_>>(), vec![8, 8, 4]);
    assert_eq!(gl.get(&col(&[2, 3, 4])), None);
    let wedge = bin_sizes(&p(&[1, 1]), BinContext::Gl { n: 4, k: 3 });
    assert_eq!(wedge.values().copied().collect::<Vec<_>>(), vec![3, 2, 1]);
    let sp = bin_sizes(&p(&[1, 1]), BinContext::Sp { n: 6, k: 2 });
    let expected: BTreeMap<Column, usize> = [
        (col(&[2, 4]), 5),
        (col(&[2, 5]), 2),
        (col(&[2, 6]), 2),
        (col(&[3, 4]), 1),
        (col(&[3, 5]), 1),
        (col(&[3, 6]), 1),
        (col(&[4, 5]), 1),
        (col(&[4, 6]), 1),
        (col(&[5, 6]), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(sp, expected);
}

#[test]
fn base_bins_count_small_tableaux() {
    for n in 1..=6 {
        for k in 1..=n.min(3) {
            for size in 0..=4 {
                for sigma in Partition::of_size(size).into_iter().filter(|s| s.length() <= k) {
                    let bins = bin_sizes(&sigma, BinContext::Gl { n, k });
                    let total: usize = bins.values().sum();
                    assert_eq!(total as u64, u64::try_from(gl_module_dim(&sigma, n)).unwrap());
                    let base = bins.get(&Column::initial(k)).copied().unwrap_or(0);
                    assert_eq!(base as u64, u64::try_from(gl_module_dim(&sigma, k)).unwrap(), "n={n} k={k} sigma={sigma}");
                }
            }
        }
    }
}

/// Tableaux over 1..=2k whose i-th first-column entry is at least 2i-1.
fn king_count(sigma: &Partition, k: usize) -> usize {
    ssyt_enumerate(sigma, 2 * k)
        .into_iter()
        .filter(|t| t.first_column().iter().enumerate().all(|(i, &x)| x > 2 * i))
        .count()
}

#[test]
fn symplectic_base_bin_counts_king_tableaux() {
    for k in 1..=3 {
        for n in 2 * k..=7 {
            let base = Column::new((1..=k).map(|i| 2 * i).collect()).unwrap();
            for size in 0..=4 {
                for sigma in Partition::of_size(size).into_iter().filter(|s| s.length() <= k) {
                    let bins = bin_sizes(&sigma, BinContext::Sp { n, k });
                    assert!(bins.keys().all(|i| i.entries().iter().enumerate().all(|(j, &x)| x >= 2 * j + 2)));
                    let at_base = bins.get(&base).copied().unwrap_or(0);
                    assert_eq!(at_base, king_count(&sigma, k), "n={n} k={k} sigma={sigma}");
                }
            }
        }
    }
}

#[test]
fn mixed_length_order() {
    assert!(column_leq(&col(&[1, 2, 3]), &col(&[1, 3])));
    assert!(!column_leq(&col(&[1, 3]), &col(&[1, 2, 3])));
}
