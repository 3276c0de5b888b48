//! The reference fixture suite, shared by `check-all` and the acceptance tests.
//!
//! Each criterion returns `Err` with the first failing instance.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use stanley_core::{
    binomial, for_each_matrix, gl_module_dim, syt_count, ClassicalPoset, Column, MatrixKind, Multiset, NatMatrix,
    Partition, SemistandardTableau,
};
use stanley_graphs::{count_tensor_invariants, graded_dimensions_by_graphs, GraphGroup, Limits};
use stanley_lattice::Orientation;
use stanley_rsk::verify::{check_gl, check_gl_full, check_o, check_peel, check_sp};
use stanley_rsk::{peel, rsk_gl, rsk_gl_inverse, TableauPair};
use stanley_series::tableau_forms;
use stanley_series::*;
use stanley_wallach::{
    classical_corner_poset, reduced_classical, wallach_corner_poset, wallach_reduced, wallach_series, FinitePoset,
    WallachPair,
};

pub type Outcome = std::result::Result<(), String>;

#[derive(Debug, Clone)]
pub struct Report {
    pub id: usize,
    pub name: &'static str,
    pub outcome: Outcome,
    pub seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    /// One line: `[PASS] 1 golden series (0.4s)` or the failure reason.
    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(()) => format!("[PASS] {} {} ({:.1}s)", self.id, self.name, self.seconds),
            Err(e) => format!("[FAIL] {} {} ({:.1}s): {e}", self.id, self.name, self.seconds),
        }
    }
}

pub type Criterion = (&'static str, fn() -> Outcome);

pub const CRITERIA: [Criterion; 6] = [
    ("golden series", golden_series),
    ("tensor invariant dimensions", tensor_dimensions),
    ("dual forms", dual_forms),
    ("oracle equivalence", oracle_equivalence),
    ("rsk suite", rsk_suite),
    ("structural", structural),
];

pub fn run_one(id: usize) -> Report {
    let (name, f) = CRITERIA[id - 1];
    let start = Instant::now();
    let outcome = f();
    Report { id, name, outcome, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_all() -> Vec<Report> {
    (1..=CRITERIA.len()).map(run_one).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn same(label: &str, got: &RationalSeries, want: &RationalSeries) -> Outcome {
    ensure(got == want, || format!("{label}: got {got}, expected {want}"))
}

fn ser(c: &[i64], den: &[(usize, u32)]) -> RationalSeries {
    RationalSeries::new(IntPolynomial::from_coeffs(c), den.iter().copied()).expect("valid denominator")
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn col(v: &[usize]) -> Column {
    Column::new(v.to_vec()).expect("valid column")
}

fn inv(g: Group, k: usize) -> std::result::Result<RationalSeries, String> {
    Ok(hilbert_invariants(g, k).map_err(err)?.series())
}

pub fn golden_series() -> Outcome {
    same("GL k=3 p=q=4", &inv(Group::Gl { p: 4, q: 4 }, 3)?, &ser(&[1, 0, 1, 0, 1, 0, 1], &[(2, 15)]))?;
    same("SL k=2 p=3 q=4", &inv(Group::Sl { p: 3, q: 4 }, 2)?, &ser(&[1, 0, 10, 0, 20, 0, 10, 0, 1], &[(2, 11)]))?;
    same(
        "SL k=3 p=q=4",
        &inv(Group::Sl { p: 4, q: 4 }, 3)?,
        &ser(&[1, 0, 4, 4, 10, 8, 14, 8, 10, 4, 4, 0, 1], &[(2, 12), (3, 4)]),
    )?;
    same(
        "SL k=3 p=3 q=4",
        &inv(Group::Sl { p: 3, q: 4 }, 3)?,
        &ser(&[1, 0, 3, 2, 6, 3, 8, 3, 6, 2, 3, 0, 1], &[(2, 9), (3, 3), (6, 1)]),
    )?;
    same("O k=2 n=4", &inv(Group::O { n: 4 }, 2)?, &ser(&[1, 0, 3, 0, 6], &[(2, 7)]))?;
    let semi = ser(&[0, 0, 6, 0, 3, 0, 1], &[(2, 7)]);
    for form in [SemiForm::Nonpure, SemiForm::Pure] {
        same("O semiinvariants k=2 n=4", &hilbert_o_semiinvariants(2, 4, form).map_err(err)?, &semi)?;
    }
    same("SO k=2 n=4", &inv(Group::So { n: 4 }, 2)?, &ser(&[1, 0, 9, 0, 9, 0, 1], &[(2, 7)]))?;

    let gl = hilbert_gl_covariants(3, 4, 4, &part(&[2, 1]), &Partition::empty()).map_err(err)?;
    same("GL covariants (2,1,0)", &gl.series, &ser(&[0, 0, 0, 20, 0, 20, 0, -4, 0, -4], &[(2, 15)]))?;
    ensure(gl.bin_sizes() == [8, 8, 4, 0], || format!("GL covariant bins {:?}", gl.bin_sizes()))?;

    let o_expected = ser(&[0, 0, 6, 0, 6], &[(2, 9)]);
    same("O covariants via bins", &hilbert_o_covariants_wedge(3, 4, 2).map_err(err)?.series, &o_expected)?;
    same("O covariants via painting", &hilbert_o_covariants_wedge_painted(3, 4, 2).map_err(err)?, &o_expected)?;

    let sp = hilbert_sp_covariants(2, 6, &part(&[1, 1])).map_err(err)?;
    same("Sp covariants (1,1)", &sp.series, &ser(&[0, 0, 15], &[(2, 14)]))?;
    let total = sp.series.add(&inv(Group::Sp { n: 6 }, 2)?);
    same("Sp wedge^2 total", &total, &ser(&[1, 0, 16, 0, 1], &[(2, 14)]))?;
    let sp_bins: [(&[usize], &[i64], u32); 9] = [
        (&[2, 4], &[1, 0, 1, 0, 1], 14),
        (&[2, 5], &[1, 0, 2, 0, 2, 0, 1], 13),
        (&[2, 6], &[1, 0, 3, 0, 1], 12),
        (&[3, 4], &[1, 0, 1, 0, 1], 13),
        (&[3, 5], &[1, 0, 2, 0, 2, 0, 1], 12),
        (&[3, 6], &[1, 0, 3, 0, 1], 11),
        (&[4, 5], &[1, 0, 1, 0, 1], 11),
        (&[4, 6], &[1, 0, 2], 10),
        (&[5, 6], &[1], 9),
    ];
    for (i, num, d) in sp_bins {
        let got = series_from_start_column_sp(&col(i), 6).map_err(err)?;
        same(&format!("Sp start column {i:?}"), &got, &ser(num, &[(2, d)]))?;
    }

    for n in 4..=8 {
        let got = wallach_series(WallachPair::D { n }, 1).map_err(err)?;
        same(&format!("Wallach D{n}"), &got, &ser(&[1, 1], &[(1, 2 * n as u32 - 3)]))?;
    }
    same("Wallach E6", &wallach_series(WallachPair::E6, 1).map_err(err)?, &ser(&[1, 5, 5, 1], &[(1, 11)]))?;
    same(
        "Wallach E7 k=1",
        &wallach_series(WallachPair::E7, 1).map_err(err)?,
        &ser(&[1, 10, 28, 28, 10, 1], &[(1, 17)]),
    )?;
    same("Wallach E7 k=2", &wallach_series(WallachPair::E7, 2).map_err(err)?, &ser(&[1, 1, 1], &[(1, 26)]))
}

fn tensor(g: GraphGroup, k: usize) -> std::result::Result<BigUint, String> {
    count_tensor_invariants(g, k, &Limits::default()).map_err(err)
}

fn syt_sum(n: usize, keep: impl Fn(&Partition) -> bool, weight: impl Fn(&Partition) -> BigUint) -> BigUint {
    Partition::of_size(n).into_iter().filter(|mu| keep(mu)).map(|mu| weight(&mu)).sum()
}

/// Tensor invariants of SL_k on p dual and q vector copies, as a tableau sum.
fn sl_tensor_formula(p: usize, q: usize, k: usize) -> BigUint {
    let diff = p.abs_diff(q);
    if !diff.is_multiple_of(k) {
        return BigUint::zero();
    }
    let m = diff / k;
    syt_sum(p.min(q), |mu| mu.length() <= k, |mu| syt_count(&mu.add_rectangle(k, m)) * syt_count(mu))
}

fn both_ways(g: GraphGroup, k: usize, formula: BigUint, expected: Option<u64>) -> Outcome {
    let graphs = tensor(g, k)?;
    ensure(graphs == formula, || format!("{g:?} k={k}: graphs give {graphs}, tableau sum gives {formula}"))?;
    if let Some(e) = expected {
        ensure(graphs == BigUint::from(e), || format!("{g:?} k={k}: got {graphs}, expected {e}"))?;
    }
    Ok(())
}

pub fn tensor_dimensions() -> Outcome {
    let gl = syt_sum(4, |mu| mu.length() <= 2, |mu| syt_count(mu) * syt_count(mu));
    both_ways(GraphGroup::Gl { p: 4, q: 4 }, 2, gl, Some(14))?;
    for (p, q) in [(8, 0), (7, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (1, 7), (0, 8)] {
        both_ways(GraphGroup::Sl { p, q }, 2, sl_tensor_formula(p, q, 2), Some(14))?;
    }
    both_ways(GraphGroup::Sl { p: 11, q: 3 }, 4, sl_tensor_formula(11, 3, 4), Some(3927))?;
    for n in 0..=8 {
        for k in 1..=3 {
            let o = if n % 2 == 1 {
                BigUint::zero()
            } else {
                syt_sum(n, |mu| mu.length() <= k && mu.all_rows_even(), syt_count)
            };
            both_ways(GraphGroup::O { n }, k, o, (n % 2 == 1).then_some(0))?;
            let sp = if n % 2 == 1 {
                BigUint::zero()
            } else {
                syt_sum(n, |mu| mu.length() <= 2 * k && mu.all_columns_even(), syt_count)
            };
            both_ways(GraphGroup::Sp { n }, k, sp, (n % 2 == 1).then_some(0))?;
        }
    }
    Ok(())
}

fn partitions_up_to(size: usize, rows: usize) -> Vec<Partition> {
    (0..=size).flat_map(Partition::of_size).filter(|s| s.length() <= rows).collect()
}

pub fn dual_forms() -> Outcome {
    for p in 1..=6 {
        for q in 1..=6 {
            for k in 0..=3 {
                let label = format!("GL p={p} q={q} k={k}");
                same(&label, &inv(Group::Gl { p, q }, k)?, &tableau_forms::gl_invariants(p, q, k))?;
            }
        }
    }
    for n in 1..=6 {
        for k in 0..=3 {
            same(&format!("O n={n} k={k}"), &inv(Group::O { n }, k)?, &tableau_forms::o_invariants(n, k))?;
            same(&format!("SO n={n} k={k}"), &inv(Group::So { n }, k)?, &tableau_forms::so_invariants(n, k))?;
            same(&format!("Sp n={n} k={k}"), &inv(Group::Sp { n }, k)?, &tableau_forms::sp_invariants(n, k))?;
            if (1..=n).contains(&k) {
                let want = tableau_forms::o_semiinvariants(n, k);
                for form in [SemiForm::Nonpure, SemiForm::Pure] {
                    let got = hilbert_o_semiinvariants(k, n, form).map_err(err)?;
                    same(&format!("O semiinvariants {form:?} n={n} k={k}"), &got, &want)?;
                }
                for m in 0..=k {
                    let bins = hilbert_o_covariants_wedge(k, n, m).map_err(err)?;
                    let painted = hilbert_o_covariants_wedge_painted(k, n, m).map_err(err)?;
                    same(&format!("O wedge n={n} k={k} m={m}"), &bins.series, &painted)?;
                }
            }
        }
    }
    // covariant chain counts are the dimensions of the polynomial representation
    for p in 1..=6 {
        for q in 1..=6 {
            for k in 1..=3.min(p).min(q) {
                for sigma in partitions_up_to(4, k) {
                    let plus = hilbert_gl_covariants(k, p, q, &sigma, &Partition::empty()).map_err(err)?;
                    let minus = hilbert_gl_covariants(k, p, q, &Partition::empty(), &sigma).map_err(err)?;
                    ensure(BigUint::from(plus.chain_count()) == gl_module_dim(&sigma, q), || {
                        format!("GL covariant chains p={p} q={q} k={k} {sigma}")
                    })?;
                    ensure(BigUint::from(minus.chain_count()) == gl_module_dim(&sigma, p), || {
                        format!("GL dual covariant chains p={p} q={q} k={k} {sigma}")
                    })?;
                }
            }
        }
    }
    for n in 2..=6 {
        for k in 1..=(n / 2).min(3) {
            for sigma in partitions_up_to(4, k) {
                let c = hilbert_sp_covariants(k, n, &sigma).map_err(err)?;
                ensure(BigUint::from(c.chain_count()) == gl_module_dim(&sigma, n), || {
                    format!("Sp covariant chains n={n} k={k} {sigma}")
                })?;
            }
        }
    }
    Ok(())
}

fn graph_group(g: Group) -> GraphGroup {
    match g {
        Group::Gl { p, q } => GraphGroup::Gl { p, q },
        Group::Sl { p, q } => GraphGroup::Sl { p, q },
        Group::O { n } => GraphGroup::O { n },
        Group::So { n } => GraphGroup::So { n },
        Group::Sp { n } => GraphGroup::Sp { n },
    }
}

/// Compares series coefficients with basis-graph counts up to `degree`.
pub fn compare_with_graphs(group: Group, k: usize, degree: usize, limits: &Limits) -> Outcome {
    let graphs = graded_dimensions_by_graphs(graph_group(group), k, degree, limits).map_err(err)?;
    let series = inv(group, k)?.expand(degree);
    let graphs: Vec<BigInt> = graphs.into_iter().map(BigInt::from).collect();
    ensure(graphs == series, || format!("{group} k={k}: graphs {graphs:?}, series {series:?}"))
}

pub fn oracle_equivalence() -> Outcome {
    let limits = Limits::default();
    let mut groups = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            groups.push(Group::Gl { p, q });
            groups.push(Group::Sl { p, q });
        }
    }
    for n in 1..=4 {
        groups.extend([Group::O { n }, Group::So { n }, Group::Sp { n }]);
    }
    for g in groups {
        for k in 0..=2 {
            if let Group::Sl { p, q } = g {
                if k == 0 || k > p.min(q) {
                    continue;
                }
            }
            compare_with_graphs(g, k, 8, &limits)?;
        }
    }
    Ok(())
}

fn reference_fixture() -> Outcome {
    let t = SemistandardTableau::new(vec![vec![1, 1, 1, 2, 3], vec![2, 3, 3], vec![4, 4]], 4).map_err(err)?;
    let u = SemistandardTableau::new(vec![vec![1, 1, 2, 2, 3], vec![3, 3, 5], vec![5, 5]], 5).map_err(err)?;
    let pair = TableauPair::new(t, u).map_err(err)?;
    let rows = vec![vec![1, 0, 0, 0, 2], vec![1, 0, 0, 0, 1], vec![0, 0, 3, 0, 0], vec![0, 2, 0, 0, 0]];
    let m = NatMatrix::from_rows(rows, MatrixKind::Generic).map_err(err)?;
    ensure(rsk_gl(&pair).map_err(err)? == m, || "fixture pair does not map to the fixture matrix".into())?;
    ensure(rsk_gl_inverse(&m) == pair, || "fixture matrix does not map back to the pair".into())?;
    let poset = ClassicalPoset::Gl { p: 4, q: 5 };
    ensure(poset.width_height(&m.multiset()).map_err(err)? == (3, 5), || "fixture width/height".into())?;
    let d = peel(&m, poset).map_err(err)?;
    let ms = |cells: &[((usize, usize), u64)]| -> Multiset { cells.iter().copied().collect() };
    let chains_star = vec![
        ms(&[((1, 1), 1), ((1, 5), 2), ((2, 5), 1)]),
        ms(&[((2, 1), 1), ((3, 3), 3)]),
        ms(&[((4, 2), 2)]),
    ];
    let chains = vec![ms(&[((1, 1), 1), ((2, 1), 1), ((4, 2), 2)]), ms(&[((3, 3), 3)]), ms(&[((1, 5), 2), ((2, 5), 1)])];
    let antichains = vec![
        ms(&[((1, 1), 1)]),
        ms(&[((1, 5), 1), ((2, 1), 1)]),
        ms(&[((1, 5), 1), ((3, 3), 1), ((4, 2), 1)]),
        ms(&[((2, 5), 1), ((3, 3), 1), ((4, 2), 1)]),
        ms(&[((3, 3), 1)]),
    ];
    ensure(d.chains_star == chains_star, || "fixture starred chains".into())?;
    ensure(d.chains == chains, || "fixture chains".into())?;
    ensure(d.antichains == antichains, || "fixture antichains".into())?;
    check_peel(&m.multiset(), &d)?;
    ensure(pair.recording.first_column() == [1, 2, 4] && pair.insertion.first_column() == [1, 3, 5], || {
        "fixture first columns".into()
    })
}

/// Generic matrices up to 5 x 5 and of total at most 8 (tableaux on at most
/// five letters with at most eight boxes), plus the symmetric variants whose
/// tableaux have at most eight boxes.
pub fn rsk_suite() -> Outcome {
    reference_fixture()?;
    let mut first: Outcome = Ok(());
    let mut record = |r: Outcome| {
        if first.is_ok() {
            first = r;
        }
    };
    for_each_matrix(5, 5, MatrixKind::Generic, 8, |m| record(check_gl(m)));
    for (p, q) in [(5, 5), (3, 5), (5, 2)] {
        for_each_matrix(p, q, MatrixKind::Generic, 5, |m| record(check_gl_full(m)));
    }
    for n in 1..=5 {
        for_each_matrix(n, n, MatrixKind::UpperTriangular, 4, |m| record(check_o(m)));
        for_each_matrix(n, n, MatrixKind::StrictlyUpperTriangular, 4, |m| record(check_sp(m)));
    }
    first
}

/// Weyl dimension of the Sp(2k) irreducible with highest weight σ.
fn sp_dim(sigma: &Partition, k: usize) -> BigInt {
    let rho: Vec<i64> = (1..=k as i64).rev().collect();
    let l: Vec<i64> = (0..k).map(|i| sigma.part(i) as i64 + rho[i]).collect();
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for i in 0..k {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..k {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    num / den
}

fn gorenstein_criteria() -> Outcome {
    for p in 1..=6 {
        for q in 1..=6 {
            for k in 1..p.min(q) {
                let g = gorenstein_check(&inv(Group::Gl { p, q }, k)?);
                ensure(g == (p == q), || format!("GL Gorenstein p={p} q={q} k={k}: {g}"))?;
            }
        }
    }
    for n in 1..=6 {
        for k in 1..n {
            let g = gorenstein_check(&inv(Group::O { n }, k)?);
            ensure(g == ((n - k) % 2 == 1), || format!("O Gorenstein n={n} k={k}: {g}"))?;
        }
    }
    Ok(())
}

fn degree(s: &RationalSeries) -> std::result::Result<BigInt, String> {
    bernstein_degree(s).map_err(err)
}

fn bernstein_factorizations() -> Outcome {
    for p in 1..=6 {
        for q in 1..=6 {
            for k in 1..=3.min(p).min(q) {
                let base = degree(&inv(Group::Gl { p, q }, k)?)?;
                for sigma in partitions_up_to(4, k) {
                    let dim_u: BigInt = gl_module_dim(&sigma, k).into();
                    for (plus, minus) in [(&sigma, &Partition::empty()), (&Partition::empty(), &sigma)] {
                        let c = hilbert_gl_covariants(k, p, q, plus, minus).map_err(err)?;
                        let got = degree(&c.series)?;
                        ensure(got == &dim_u * &base, || format!("GL degree p={p} q={q} k={k} {sigma}: {got}"))?;
                    }
                }
            }
        }
    }
    for n in 1..=6 {
        for k in 1..=3.min(n) {
            let base = degree(&inv(Group::O { n }, k)?)?;
            for m in 0..=k {
                let got = degree(&hilbert_o_covariants_wedge_painted(k, n, m).map_err(err)?)?;
                let want = BigInt::from(binomial(k, m)) * &base;
                ensure(got == want, || format!("O wedge degree n={n} k={k} m={m}: {got}"))?;
            }
        }
    }
    for n in 2..=6 {
        for k in 1..=(n / 2).min(3) {
            let base = degree(&inv(Group::Sp { n }, k)?)?;
            for sigma in partitions_up_to(4, k) {
                let got = degree(&hilbert_sp_covariants(k, n, &sigma).map_err(err)?.series)?;
                ensure(got == sp_dim(&sigma, k) * &base, || format!("Sp degree n={n} k={k} {sigma}: {got}"))?;
            }
        }
    }
    // the shifted top-bin form used in the worked example
    let first = series_from_start_column(&col(&[1, 2, 3]), 4, 4, Orientation::Columns).map_err(err)?;
    same("GL start column (1,2,3)", &first, &inv(Group::Gl { p: 4, q: 4 }, 3)?)
}

fn corner_isomorphisms() -> Outcome {
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
            let region = classical_corner_poset(poset, k).map_err(err)?;
            let want = reduced_classical(poset, k).map_or_else(FinitePoset::empty, FinitePoset::from_classical);
            ensure(region.isomorphism(&want).is_some(), || format!("corner poset of {poset} k={k}"))?;
        }
    }
    for (pair, k) in [(WallachPair::E6, 1), (WallachPair::E7, 1), (WallachPair::E7, 2)] {
        let got = wallach_corner_poset(pair, k).map_err(err)?;
        let want = wallach_reduced(pair, k).map_err(err)?;
        ensure(got.same_covering_graph(&want), || format!("corner poset of {pair} k={k}: {:?}", got.elements))?;
    }
    for n in 4..=8 {
        let got = wallach_corner_poset(WallachPair::D { n }, 1).map_err(err)?;
        ensure(got.len() == 1, || format!("corner poset of D{n}: {:?}", got.elements))?;
    }
    Ok(())
}

pub fn structural() -> Outcome {
    gorenstein_criteria()?;
    bernstein_factorizations()?;
    corner_isomorphisms()
}
