//! Exact counting helpers.

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// `e_k(values)`: sum over all `k`-subsets of the product of their entries.
/// This counts transversals picking one element from each of `k` distinct
/// blocks when `values` are block sizes.
pub fn elementary_symmetric(values: &[u64], k: usize) -> u64 {
    // e[j] after processing a prefix of values.
    let mut e = vec![0u64; k + 1];
    e[0] = 1;
    for &x in values {
        for j in (1..=k).rev() {
            e[j] += e[j - 1] * x;
        }
    }
    e[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(9, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 3), 34220);
    }

    #[test]
    fn symmetric_sums() {
        assert_eq!(elementary_symmetric(&[2, 2, 2], 3), 8);
        assert_eq!(elementary_symmetric(&[3, 2, 2], 2), 6 + 6 + 4);
        assert_eq!(elementary_symmetric(&[1, 1, 1, 1], 3), 4);
        assert_eq!(elementary_symmetric(&[5, 7], 0), 1);
        assert_eq!(elementary_symmetric(&[5, 7], 3), 0);
    }
}
