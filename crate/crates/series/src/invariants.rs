use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use stanley_core::{ClassicalPoset, Column, Error, Result};
use stanley_lattice::{
    enumerate_column_chains, enumerate_facets, enumerate_facets_from_starts, enumerate_facets_varied_endpoints,
    enumerate_gl_facets_from_columns, Facet, Orientation,
};

use crate::poly::IntPolynomial;
use crate::rational::RationalSeries;

/// Classical group acting on k-dimensional space, with the number of copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum Group {
    /// p dual copies and q vector copies.
    Gl { p: usize, q: usize },
    Sl { p: usize, q: usize },
    O { n: usize },
    So { n: usize },
    /// Symplectic group of rank k on 2k-space.
    Sp { n: usize },
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Gl { p, q } => write!(f, "GL(p={p},q={q})"),
            Group::Sl { p, q } => write!(f, "SL(p={p},q={q})"),
            Group::O { n } => write!(f, "O(n={n})"),
            Group::So { n } => write!(f, "SO(n={n})"),
            Group::Sp { n } => write!(f, "Sp(n={n})"),
        }
    }
}

/// One summand c · t^shift · Π_g 1/(1 - t^deg_g)^count_g of a Stanley decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyTerm {
    pub shift: usize,
    /// (generator degree, number of free generators of that degree)
    pub generators: Vec<(usize, u32)>,
    pub multiplicity: u64,
}

impl StanleyTerm {
    pub fn series(&self) -> RationalSeries {
        RationalSeries::new(IntPolynomial::monomial(self.multiplicity, self.shift), self.generators.iter().copied())
            .expect("generator degrees are positive")
    }
}

/// Stanley decomposition with identical summands merged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyDecomposition {
    pub terms: Vec<StanleyTerm>,
}

impl StanleyDecomposition {
    fn from_map(map: BTreeMap<(usize, Vec<(usize, u32)>), u64>) -> Self {
        let terms = map
            .into_iter()
            .map(|((shift, generators), multiplicity)| StanleyTerm { shift, generators, multiplicity })
            .collect();
        StanleyDecomposition { terms }
    }

    /// Number of summands counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.terms.iter().map(|t| t.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn series(&self) -> RationalSeries {
        // group by generator signature so each group is a single polynomial
        let mut grouped: BTreeMap<&[(usize, u32)], IntPolynomial> = BTreeMap::new();
        for t in &self.terms {
            grouped.entry(&t.generators).or_default().add_term(t.shift, BigInt::from(t.multiplicity));
        }
        let parts: Vec<RationalSeries> = grouped
            .into_iter()
            .map(|(g, num)| RationalSeries::new(num, g.iter().copied()).expect("positive degrees"))
            .collect();
        RationalSeries::sum(&parts)
    }

    fn extend(&mut self, other: StanleyDecomposition) {
        let mut map = self.to_map();
        for t in other.terms {
            *map.entry((t.shift, t.generators)).or_insert(0) += t.multiplicity;
        }
        *self = Self::from_map(map);
    }

    fn to_map(&self) -> BTreeMap<(usize, Vec<(usize, u32)>), u64> {
        self.terms.iter().map(|t| ((t.shift, t.generators.clone()), t.multiplicity)).collect()
    }
}

fn generators(list: &[(usize, usize)]) -> Vec<(usize, u32)> {
    list.iter().filter(|(_, c)| *c > 0).map(|&(d, c)| (d, c as u32)).collect()
}

/// Each facet f contributes t^{shift + 2 cor(f)} / (1 - t^2)^{|f|}.
pub(crate) fn path_decomposition(facets: &[Facet], shift: usize) -> StanleyDecomposition {
    let mut map = BTreeMap::new();
    for f in facets {
        *map.entry((shift + 2 * f.corner_count(), generators(&[(2, f.size())]))).or_insert(0u64) += 1;
    }
    StanleyDecomposition::from_map(map)
}

pub(crate) fn path_series(facets: &[Facet]) -> RationalSeries {
    path_decomposition(facets, 0).series()
}

fn sl_side(p: usize, q: usize, k: usize, orientation: Orientation) -> Result<StanleyDecomposition> {
    let n = match orientation {
        Orientation::Rows => p,
        Orientation::Columns => q,
    };
    let mut map = BTreeMap::new();
    for col in Column::all(n, k) {
        let chains = enumerate_column_chains(&col);
        let facets = enumerate_gl_facets_from_columns(p, q, &col, orientation)?;
        for chain in &chains {
            for f in &facets {
                let shift = k + k * chain.corner_count() + 2 * f.corner_count();
                let gens = if k == 2 {
                    generators(&[(2, chain.len() + f.size())])
                } else {
                    generators(&[(2, f.size()), (k, chain.len())])
                };
                *map.entry((shift, gens)).or_insert(0u64) += 1;
            }
        }
    }
    Ok(StanleyDecomposition::from_map(map))
}

/// Stanley decomposition of the invariant ring; the series is its sum.
pub fn hilbert_invariants(group: Group, k: usize) -> Result<StanleyDecomposition> {
    match group {
        Group::Gl { p, q } => {
            let k = k.min(p.min(q));
            Ok(path_decomposition(&enumerate_facets(ClassicalPoset::Gl { p, q }, k)?, 0))
        }
        Group::Sl { p, q } => {
            if k == 0 || k > p.min(q) {
                return Err(Error::domain(format!("SL needs 1 <= k <= min(p,q), got k={k}, p={p}, q={q}")));
            }
            let mut out = path_decomposition(&enumerate_facets(ClassicalPoset::Gl { p, q }, k)?, 0);
            out.extend(sl_side(p, q, k, Orientation::Rows)?);
            out.extend(sl_side(p, q, k, Orientation::Columns)?);
            Ok(out)
        }
        Group::O { n } => Ok(path_decomposition(&enumerate_facets(ClassicalPoset::O { n }, k.min(n))?, 0)),
        Group::So { n } => {
            let mut out = hilbert_invariants(Group::O { n }, k)?;
            if (1..=n).contains(&k) {
                out.extend(o_semi_decomposition(k, n, SemiForm::Nonpure)?);
            }
            Ok(out)
        }
        Group::Sp { n } => Ok(path_decomposition(&enumerate_facets(ClassicalPoset::Sp { n }, k.min(n / 2))?, 0)),
    }
}

/// How the semiinvariant series is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiForm {
    /// Sum over all start columns I of the families starting at I.
    Nonpure,
    /// Facets of the full poset with diagonal corners ignored.
    Pure,
}

fn o_semi_decomposition(k: usize, n: usize, form: SemiForm) -> Result<StanleyDecomposition> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("semiinvariants need 1 <= k <= n, got k={k}, n={n}")));
    }
    match form {
        SemiForm::Nonpure => {
            let mut out = StanleyDecomposition::default();
            for col in Column::all(n, k) {
                out.extend(path_decomposition(&enumerate_facets_from_starts(n, &col)?, k));
            }
            Ok(out)
        }
        SemiForm::Pure => Ok(path_decomposition(&enumerate_facets_varied_endpoints(n, k)?, k)),
    }
}

/// Series of the determinant-twisted orthogonal semiinvariants.
pub fn hilbert_o_semiinvariants(k: usize, n: usize, form: SemiForm) -> Result<RationalSeries> {
    Ok(o_semi_decomposition(k, n, form)?.series())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(c: &[i64], den: &[(usize, u32)]) -> RationalSeries {
        RationalSeries::new(IntPolynomial::from_coeffs(c), den.iter().copied()).unwrap()
    }

    #[test]
    fn small_cases() {
        let gl = hilbert_invariants(Group::Gl { p: 4, q: 4 }, 3).unwrap().series();
        assert_eq!(gl, ser(&[1, 0, 1, 0, 1, 0, 1], &[(2, 15)]));
        let o = hilbert_invariants(Group::O { n: 4 }, 2).unwrap().series();
        assert_eq!(o, ser(&[1, 0, 3, 0, 6], &[(2, 7)]));
        assert_eq!(hilbert_invariants(Group::Gl { p: 2, q: 2 }, 0).unwrap().series(), RationalSeries::one());
    }
}
