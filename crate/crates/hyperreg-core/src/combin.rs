//! Small combinatorial helpers shared across modules.

use alloc::vec::Vec;

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Calls `f` with every k-subset of `0..n`, in lexicographic order.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 {
        f(&idx);
        return;
    }
    loop {
        f(&idx);
        // advance rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All k-subsets of `items`, in lexicographic index order.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for_each_combination(items.len(), k, |idx| {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
    });
    out
}

/// Lexicographic rank of a sorted k-subset of `0..n`.
pub fn subset_rank(n: usize, subset: &[u32]) -> usize {
    let k = subset.len();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (pos, &v) in subset.iter().enumerate() {
        for x in prev..v as usize {
            rank += binomial(n - x - 1, k - pos - 1) as usize;
        }
        prev = v as usize + 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 3), 9880);
    }

    #[test]
    fn combination_count_and_order() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], alloc::vec![0, 1, 2]);
        assert_eq!(seen[9], alloc::vec![2, 3, 4]);
        for w in seen.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn zero_sized_combination() {
        let mut calls = 0;
        for_each_combination(4, 0, |c| {
            assert!(c.is_empty());
            calls += 1;
        });
        assert_eq!(calls, 1);
    }

    #[test]
    fn subset_rank_is_lexicographic_index() {
        let mut expect = 0usize;
        for_each_combination(7, 3, |c| {
            let as_u32: Vec<u32> = c.iter().map(|&x| x as u32).collect();
            assert_eq!(subset_rank(7, &as_u32), expect);
            expect += 1;
        });
    }
}
