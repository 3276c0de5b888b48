use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use stanley_core::{Error, Partition, Result};

use crate::invariants::Group;

/// Highest weight on the dual side of Howe duality, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoweWeight {
    pub lambda: Vec<Ratio<i64>>,
    /// For GL, the length of the leading p-block.
    pub split: Option<usize>,
}

impl Serialize for HoweWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            lambda: Vec<String>,
            split: Option<usize>,
        }
        Repr { lambda: self.lambda.iter().map(|r| r.to_string()).collect(), split: self.split }.serialize(s)
    }
}

impl fmt::Display for HoweWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if self.split == Some(i) { "; " } else { "," })?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// σ padded with zeros to `len` and read backwards.
fn reversed(sigma: &Partition, len: usize) -> Vec<i64> {
    (0..len).rev().map(|i| sigma.part(i) as i64).collect()
}

fn too_long(sigma: &Partition, limit: usize) -> Result<()> {
    if sigma.length() > limit {
        return Err(Error::domain(format!("type {sigma} has more than {limit} rows")));
    }
    Ok(())
}

/// Highest weight attached to covariants of type σ (for GL, σ⁺ and σ⁻).
pub fn howe_weight(group: Group, k: usize, sigma_plus: &Partition, sigma_minus: &Partition) -> Result<HoweWeight> {
    let k_int = k as i64;
    let single = |name: &str| -> Result<()> {
        if sigma_minus.is_empty() {
            Ok(())
        } else {
            Err(Error::domain(format!("{name} covariant types have a single partition")))
        }
    };
    match group {
        Group::Gl { p, q } => {
            too_long(sigma_minus, p.min(k))?;
            too_long(sigma_plus, q.min(k))?;
            if sigma_plus.length() + sigma_minus.length() > k {
                return Err(Error::domain("rows of σ⁺ and σ⁻ together exceed k"));
            }
            let mut lambda: Vec<Ratio<i64>> =
                reversed(sigma_minus, p).into_iter().map(|x| Ratio::from_integer(-k_int - x)).collect();
            lambda.extend((0..q).map(|i| Ratio::from_integer(sigma_plus.part(i) as i64)));
            Ok(HoweWeight { lambda, split: Some(p) })
        }
        Group::O { n } => {
            single("O")?;
            too_long(sigma_plus, n)?;
            let cols = sigma_plus.column_lengths();
            if cols.first().copied().unwrap_or(0) + cols.get(1).copied().unwrap_or(0) > k {
                return Err(Error::domain(format!("first two columns of {sigma_plus} exceed k={k}")));
            }
            let half = Ratio::new(-k_int, 2);
            let lambda = reversed(sigma_plus, n).into_iter().map(|x| half - x).collect();
            Ok(HoweWeight { lambda, split: None })
        }
        Group::Sp { n } => {
            single("Sp")?;
            too_long(sigma_plus, k.min(n))?;
            let lambda = reversed(sigma_plus, n).into_iter().map(|x| Ratio::from_integer(-k_int - x)).collect();
            Ok(HoweWeight { lambda, split: None })
        }
        Group::Sl { .. } | Group::So { .. } => {
            Err(Error::Unsupported(format!("no Howe dual weight tabulated for {group}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gl_example() {
        let w = howe_weight(Group::Gl { p: 4, q: 4 }, 3, &part(&[2, 1]), &Partition::empty()).unwrap();
        assert_eq!(w.to_string(), "(-3,-3,-3,-3; 2,1,0,0)");
    }

    #[test]
    fn o_wedge() {
        let w = howe_weight(Group::O { n: 4 }, 3, &part(&[1, 1]), &Partition::empty()).unwrap();
        assert_eq!(w.to_string(), "(-3/2,-3/2,-5/2,-5/2)");
        assert!(howe_weight(Group::O { n: 4 }, 2, &part(&[2, 2]), &Partition::empty()).is_err());
    }

    #[test]
    fn trivial_type_is_constant() {
        let w = howe_weight(Group::Sp { n: 5 }, 2, &Partition::empty(), &Partition::empty()).unwrap();
        assert!(w.lambda.iter().all(|x| *x == Ratio::from_integer(-2)));
    }
}
