//! Law checks shared by the test suites and the `check-all` command.

use stanley_core::{Cell, ClassicalPoset, Multiset, NatMatrix};

use crate::insertion::{rsk_gl, rsk_gl_inverse, rsk_o, rsk_o_inverse, rsk_sp, rsk_sp_inverse};
use crate::peel::{peel, PeelDecomposition};

pub type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn union(parts: &[Multiset]) -> Multiset {
    let mut out = Multiset::new();
    for part in parts {
        for (&c, &m) in part {
            *out.entry(c).or_insert(0) += m;
        }
    }
    out
}

fn is_chain(poset: &ClassicalPoset, cells: &[Cell]) -> bool {
    cells.iter().all(|&a| cells.iter().all(|&b| poset.comparable(a, b)))
}

fn is_antichain(poset: &ClassicalPoset, cells: &[Cell]) -> bool {
    cells.iter().all(|&a| cells.iter().all(|&b| a == b || !poset.comparable(a, b)))
}

fn subtract(rest: &mut Multiset, part: &Multiset) {
    for (c, m) in part {
        let e = rest.get_mut(c).expect("peeled cell present");
        *e -= m;
        if *e == 0 {
            rest.remove(c);
        }
    }
}

fn check_chain_family(poset: &ClassicalPoset, ms: &Multiset, chains: &[Multiset], what: &str) -> Check {
    ensure(union(chains) == *ms, || format!("{what}: union differs from the multisupport"))?;
    let mut rest = ms.clone();
    for (idx, chain) in chains.iter().enumerate() {
        let cells: Vec<Cell> = chain.keys().copied().collect();
        ensure(is_chain(poset, &cells), || format!("{what}_{} is not a chain", idx + 1))?;
        ensure(chain.iter().all(|(c, m)| rest.get(c) == Some(m)), || {
            format!("{what}_{} does not take every copy of its cells", idx + 1)
        })?;
        let extendable = rest
            .keys()
            .filter(|c| !chain.contains_key(c))
            .any(|&c| cells.iter().all(|&d| poset.comparable(c, d)));
        ensure(!extendable, || format!("{what}_{} is not a maximal chain", idx + 1))?;
        subtract(&mut rest, chain);
    }
    Ok(())
}

/// Structural laws of a peel decomposition.
pub fn check_peel(ms: &Multiset, d: &PeelDecomposition) -> Check {
    let poset = &d.poset;
    let support: Vec<Cell> = ms.keys().copied().collect();
    let (width, height) = (poset.width(&support), poset.height(ms));
    if !matches!(poset, ClassicalPoset::O { .. }) {
        check_chain_family(poset, ms, &d.chains_star, "C*")?;
        ensure(d.chains_star.len() == width, || "number of C* chains differs from the width".into())?;
    }
    check_chain_family(poset, ms, &d.chains, "C")?;
    ensure(d.chains.len() == width, || "number of C chains differs from the width".into())?;
    ensure(union(&d.antichains) == *ms, || "antichains do not cover the multisupport".into())?;
    ensure(d.antichains.len() as u64 == height, || "number of antichains differs from the height".into())?;
    let mut rest = ms.clone();
    for (idx, anti) in d.antichains.iter().enumerate() {
        let cells: Vec<Cell> = anti.keys().copied().collect();
        ensure(is_antichain(poset, &cells), || format!("D_{} is not an antichain", idx + 1))?;
        let extendable = rest
            .keys()
            .filter(|c| !anti.contains_key(c))
            .any(|&c| cells.iter().all(|&a| !poset.comparable(a, c)));
        ensure(!extendable, || format!("D_{} is not a maximal antichain", idx + 1))?;
        if let Some(next) = d.antichains.get(idx + 1) {
            let nested = next.keys().all(|&b| cells.iter().any(|&a| poset.leq_unchecked(a, b)));
            ensure(nested, || format!("upper ideal of D_{} is not inside that of D_{}", idx + 2, idx + 1))?;
        }
        subtract(&mut rest, anti);
    }
    Ok(())
}

fn min_rows(chains: &[Multiset]) -> Vec<usize> {
    chains.iter().map(|c| c.keys().map(|k| k.0).min().unwrap_or(0)).collect()
}

fn min_cols(chains: &[Multiset]) -> Vec<usize> {
    chains.iter().map(|c| c.keys().map(|k| k.1).min().unwrap_or(0)).collect()
}

/// Round trip, degree, width/height and first-column laws for a generic matrix.
pub fn check_gl(m: &NatMatrix) -> Check {
    check_gl_inner(m, false)
}

/// As [`check_gl`], adding the transpose law and the peel structure laws.
pub fn check_gl_full(m: &NatMatrix) -> Check {
    check_gl_inner(m, true)
}

fn check_gl_inner(m: &NatMatrix, full: bool) -> Check {
    let pair = rsk_gl_inverse(m);
    let back = rsk_gl(&pair).map_err(|e| e.to_string())?;
    ensure(back == *m, || format!("round trip failed for\n{m}"))?;
    let shape = pair.recording.shape();
    ensure(shape.size() as u64 == m.sum(), || "degree law".into())?;
    let poset = ClassicalPoset::Gl { p: m.rows(), q: m.cols() };
    let ms = m.multiset();
    let (w, h) = poset.width_height(&ms).map_err(|e| e.to_string())?;
    ensure(w == shape.length() && h as usize == shape.part(0), || format!("width/height law for\n{m}"))?;
    let d = peel(m, poset).map_err(|e| e.to_string())?;
    ensure(pair.recording.first_column() == min_rows(&d.chains_star), || format!("first column of T for\n{m}"))?;
    ensure(pair.insertion.first_column() == min_cols(&d.chains), || format!("first column of U for\n{m}"))?;
    if !full {
        return Ok(());
    }
    let swapped = crate::TableauPair { recording: pair.insertion.clone(), insertion: pair.recording.clone() };
    ensure(rsk_gl(&swapped).map_err(|e| e.to_string())? == m.transpose(), || "transpose law".into())?;
    check_peel(&ms, &d)
}

/// Laws for an upper triangular matrix under the orthogonal correspondence.
pub fn check_o(m: &NatMatrix) -> Check {
    let t = rsk_o_inverse(m).map_err(|e| e.to_string())?;
    let shape = t.shape();
    ensure(shape.all_rows_even(), || format!("odd row in image of\n{m}"))?;
    ensure(rsk_o(&t).map_err(|e| e.to_string())? == *m, || format!("round trip failed for\n{m}"))?;
    ensure(2 * m.sum() == shape.size() as u64, || "degree law".into())?;
    let poset = ClassicalPoset::O { n: m.rows() };
    let ms = m.multiset();
    let (w, h) = poset.width_height(&ms).map_err(|e| e.to_string())?;
    ensure(w == shape.length() && 2 * h as usize == shape.part(0), || format!("width/height law for\n{m}"))?;
    let d = peel(m, poset).map_err(|e| e.to_string())?;
    ensure(t.first_column() == min_rows(&d.chains), || format!("first column law for\n{m}"))?;
    check_peel(&ms, &d)
}

/// Laws for a strictly upper triangular matrix under the symplectic correspondence.
pub fn check_sp(m: &NatMatrix) -> Check {
    let t = rsk_sp_inverse(m).map_err(|e| e.to_string())?;
    let shape = t.shape();
    ensure(shape.all_columns_even(), || format!("odd column in image of\n{m}"))?;
    ensure(rsk_sp(&t).map_err(|e| e.to_string())? == *m, || format!("round trip failed for\n{m}"))?;
    ensure(2 * m.sum() == shape.size() as u64, || "degree law".into())?;
    let poset = ClassicalPoset::Sp { n: m.rows() };
    let ms = m.multiset();
    let (w, h) = poset.width_height(&ms).map_err(|e| e.to_string())?;
    ensure(2 * w == shape.length() && h as usize == shape.part(0), || format!("width/height law for\n{m}"))?;
    let d = peel(m, poset).map_err(|e| e.to_string())?;
    check_peel(&ms, &d)
}
