use stanley_core::{Error, Result};

/// Caps on brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_degree: usize,
    /// Upper bound on the number of candidate diagrams examined.
    pub max_candidates: u128,
}

pub const ENV_VAR: &str = "SERIES_MAX_ENUM";

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 16, max_degree: 12, max_candidates: 20_000_000 }
    }
}

impl Limits {
    /// Defaults, with the candidate cap taken from SERIES_MAX_ENUM when set.
    pub fn from_env() -> Self {
        let mut out = Limits::default();
        if let Some(v) = std::env::var(ENV_VAR).ok().and_then(|s| s.trim().parse().ok()) {
            out.max_candidates = v;
        }
        out
    }

    pub(crate) fn vertices(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::SizeLimit { what: format!("{n} vertices"), limit: self.max_vertices });
        }
        Ok(())
    }

    pub(crate) fn degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::SizeLimit { what: format!("degree {d}"), limit: self.max_degree });
        }
        Ok(())
    }

    pub(crate) fn candidates(&self, estimate: u128) -> Result<()> {
        if estimate > self.max_candidates {
            return Err(Error::SizeLimit {
                what: format!("about {estimate} candidate diagrams (raise {ENV_VAR} to allow)"),
                limit: usize::try_from(self.max_candidates).unwrap_or(usize::MAX),
            });
        }
        Ok(())
    }
}

/// Multisets of size `s` from `cells` kinds, saturating.
pub(crate) fn multisets(cells: usize, s: usize) -> u128 {
    if cells == 0 {
        return u128::from(s == 0);
    }
    // C(cells + s - 1, s)
    let mut acc: u128 = 1;
    for i in 0..s as u128 {
        acc = acc.saturating_mul(cells as u128 + i) / (i + 1);
    }
    acc
}
