use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Binomial coefficient C(n, r).
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn hooks(shape: &Partition) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    let conj = shape.conjugate();
    shape.parts().iter().enumerate().flat_map(move |(r, &len)| {
        let conj = conj.clone();
        (0..len).map(move |c| {
            let arm = len - c - 1;
            let leg = conj.part(c) - r - 1;
            (r, c, arm + leg + 1)
        })
    })
}

/// Dimension of the irreducible polynomial gl_n-module of highest weight `nu`,
/// by the hook-content formula. Zero when `nu` has more than `n` rows.
pub fn gl_module_dim(nu: &Partition, n: usize) -> BigUint {
    if nu.length() > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c, h) in hooks(nu) {
        num *= BigUint::from(n + c - r);
        den *= BigUint::from(h);
    }
    num / den
}

/// Number of standard Young tableaux, by the hook-length formula.
pub fn syt_count(shape: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for i in 2..=shape.size() {
        num *= BigUint::from(i);
    }
    let den = hooks(shape).fold(BigUint::one(), |acc, (_, _, h)| acc * BigUint::from(h));
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(gl_module_dim(&part(&[1]), 3), BigUint::from(3u32));
        assert_eq!(gl_module_dim(&part(&[2, 2]), 2), BigUint::from(1u32));
        assert_eq!(gl_module_dim(&part(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(gl_module_dim(&Partition::empty(), 0), BigUint::one());
    }

    #[test]
    fn syt() {
        assert_eq!(syt_count(&part(&[4, 4])), BigUint::from(14u32));
        assert_eq!(syt_count(&part(&[5, 2, 2, 2])), BigUint::from(825u32));
        assert_eq!(syt_count(&part(&[7])), BigUint::one());
        assert_eq!(syt_count(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(33, 8), BigUint::from(13884156u32));
    }
}
