//! Relations between columns and chains of columns.

use serde::{Deserialize, Serialize};
use stanley_core::{ssyt_enumerate, Column, Error, Partition, Result};

/// Order on columns of mixed length: longer-or-equal and componentwise
/// smaller on the common prefix.
pub fn column_leq(a: &Column, b: &Column) -> bool {
    a.len() >= b.len() && a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
}

fn check_alphabet(c: &Column, n: usize) -> Result<()> {
    if c.max_entry() > n {
        return Err(Error::domain(format!("column {c} has entries beyond {n}")));
    }
    Ok(())
}

/// A ⪯ B iff tilde(B) <= tilde(A), tilde being i -> n-i+1.
pub fn column_preceq(a: &Column, b: &Column, n: usize) -> Result<bool> {
    check_alphabet(a, n)?;
    check_alphabet(b, n)?;
    Ok(column_leq(&b.tilde(n), &a.tilde(n)))
}

/// The slide-down test a_i <= b_{k-r+i} for i = 1..r+s-k.
pub fn column_arrow(a: &Column, b: &Column, k: usize) -> Result<bool> {
    let (r, s) = (a.len(), b.len());
    if r > k || s > k {
        return Err(Error::domain(format!("columns longer than k={k}")));
    }
    if r + s <= k {
        return Ok(true);
    }
    Ok((1..=r + s - k).all(|i| a.entries()[i - 1] <= b.entries()[k - r + i - 1]))
}

/// A chain X_1 ⪯ ... ⪯ X_m of columns whose tilde images, read right to
/// left, form an SSYT of shape σ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaChain {
    pub columns: Vec<Column>,
    pub shape: Partition,
    pub alphabet: usize,
}

impl SigmaChain {
    /// The maximal element X_m (empty column for σ = 0).
    pub fn top(&self) -> Column {
        self.columns.last().cloned().unwrap_or_else(|| Column::initial(0))
    }
}

/// Every σ-chain in the columns of length at most k over 1..=n.
pub fn sigma_chains(sigma: &Partition, n: usize, k: usize) -> Result<Vec<SigmaChain>> {
    if sigma.length() > k {
        return Err(Error::domain(format!("shape {sigma} has more than k={k} rows")));
    }
    Ok(ssyt_enumerate(sigma, n)
        .into_iter()
        .map(|t| {
            let columns = t
                .columns()
                .into_iter()
                .rev()
                .map(|c| Column::new(c).expect("tableau columns increase").tilde(n))
                .collect();
            SigmaChain { columns, shape: sigma.clone(), alphabet: n }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BinContext {
    /// Full columns of length k over 1..=n.
    Gl { n: usize, k: usize },
    /// Full columns that also dominate (2, 4, ..., 2k).
    Sp { n: usize, k: usize },
}

/// Componentwise smallest full column I of length k with `x` -> I and
/// i_j >= floor(j).
pub fn minimal_arrow_target(x: &Column, n: usize, k: usize, floor: impl Fn(usize) -> usize) -> Option<Column> {
    let r = x.len();
    if r > k {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    for j in 1..=k {
        let mut lo = floor(j).max(1);
        if j > k - r {
            lo = lo.max(x.entries()[j - (k - r) - 1]);
        }
        if let Some(&prev) = out.last() {
            lo = lo.max(prev + 1);
        }
        if lo > n {
            return None;
        }
        out.push(lo);
    }
    Some(Column::new(out).expect("built strictly increasing"))
}

/// The full column that a chain's maximal element completes to.
pub fn bin_of_chain(chain: &SigmaChain, ctx: BinContext) -> Result<Column> {
    let top = chain.top();
    match ctx {
        BinContext::Gl { n, k } => {
            if top.len() > k || top.max_entry() > n || k > n {
                return Err(Error::domain(format!("chain top {top} does not fit C^{n}_{k}")));
            }
            let mut entries = top.entries().to_vec();
            let mut next = 1;
            while entries.len() < k {
                if !top.entries().contains(&next) {
                    entries.push(next);
                }
                next += 1;
            }
            entries.sort_unstable();
            Column::new(entries)
        }
        BinContext::Sp { n, k } => minimal_arrow_target(&top, n, k, |j| 2 * j)
            .ok_or_else(|| Error::domain(format!("no column of C^{n}_{k} above (2,4,..) receives {top}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[usize]) -> Column {
        Column::new(v.to_vec()).unwrap()
    }

    #[test]
    fn arrow_examples() {
        assert!(column_arrow(&col(&[3, 4, 5]), &col(&[1, 2, 4, 5]), 5).unwrap());
        assert!(column_arrow(&col(&[4]), &col(&[1, 2]), 3).unwrap());
        assert!(!column_arrow(&col(&[4, 5]), &col(&[1, 2]), 3).unwrap());
    }

    #[test]
    fn insertion_bin() {
        let chain = SigmaChain { columns: vec![col(&[2, 6, 9])], shape: Partition::new(vec![1, 1, 1]).unwrap(), alphabet: 9 };
        assert_eq!(bin_of_chain(&chain, BinContext::Gl { n: 9, k: 5 }).unwrap(), col(&[1, 2, 3, 6, 9]));
        assert_eq!(bin_of_chain(&chain, BinContext::Sp { n: 10, k: 5 }).unwrap(), col(&[2, 4, 6, 8, 10]));
        assert!(bin_of_chain(&chain, BinContext::Sp { n: 9, k: 5 }).is_err());
    }

    #[test]
    fn chain_counts() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(sigma_chains(&p(&[1]), 4, 1).unwrap().len(), 4);
        assert_eq!(sigma_chains(&p(&[2, 1]), 4, 3).unwrap().len(), 20);
        assert_eq!(sigma_chains(&p(&[1, 1]), 6, 2).unwrap().len(), 15);
        assert!(sigma_chains(&p(&[1, 1, 1]), 6, 2).is_err());
    }
}
