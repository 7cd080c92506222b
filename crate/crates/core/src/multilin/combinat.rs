pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All `p`-element subsets of `0..n` in lexicographic order.
pub fn wedge_basis(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, p));
    if p > n {
        return out;
    }
    let mut c: Vec<usize> = (0..p).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..p).rev().find(|&i| c[i] < n - p + i) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..p {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Position of a strictly increasing combination in the lexicographic order.
pub fn comb_rank(n: usize, c: &[usize]) -> usize {
    let p = c.len();
    let mut r = 0;
    let mut start = 0;
    for (i, &ci) in c.iter().enumerate() {
        for j in start..ci {
            r += binomial(n - j - 1, p - i - 1);
        }
        start = ci + 1;
    }
    r
}

/// Sorts `idx` in place. Returns `None` on a repeated index, otherwise the parity
/// of the sorting permutation (`true` for odd).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// Rank and parity of an unsorted index tuple, or `None` on repeats.
pub fn signed_rank(n: usize, idx: &[usize]) -> Option<(bool, usize)> {
    let mut v = idx.to_vec();
    let odd = sort_with_sign(&mut v)?;
    Some((odd, comb_rank(n, &v)))
}

/// Parity of a permutation given as the list of images (`true` for odd).
pub fn perm_parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Koszul sign ε with `x_1⋯x_n = ε x_{σ(1)}⋯x_{σ(n)}`; `perm[k] = σ(k+1)-1`.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> i64 {
    assert_eq!(perm.len(), degrees.len(), "permutation and degree list lengths");
    let mut sign = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && (degrees[perm[a]] * degrees[perm[b]]).rem_euclid(2) == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// All `(i, j)`-unshuffles: permutations of `0..i+j` increasing on the first `i`
/// and on the last `j` positions.
pub fn unshuffles(i: usize, j: usize) -> Vec<Vec<usize>> {
    wedge_basis(i + j, i)
        .into_iter()
        .map(|head| {
            let mut p = head.clone();
            p.extend((0..i + j).filter(|x| !head.contains(x)));
            p
        })
        .collect()
}

/// Splits of a position list into a chosen head of size `i` and the rest, with the
/// parity of the unshuffle.
pub fn splits(len: usize, i: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    wedge_basis(len, i)
        .into_iter()
        .map(|head| {
            let rest: Vec<usize> = (0..len).filter(|x| !head.contains(x)).collect();
            let inv: usize = head.iter().enumerate().map(|(k, &h)| h - k).sum();
            (head, rest, inv % 2 == 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_basis_examples() {
        assert_eq!(wedge_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(wedge_basis(5, 0), vec![Vec::<usize>::new()]);
        assert_eq!(wedge_basis(4, 4), vec![vec![0, 1, 2, 3]]);
        assert!(wedge_basis(2, 3).is_empty());
        assert_eq!(wedge_basis(0, 0).len(), 1);
    }

    #[test]
    fn ranks_match_enumeration() {
        for n in 0..7 {
            for p in 0..=n {
                for (r, c) in wedge_basis(n, p).iter().enumerate() {
                    assert_eq!(comb_rank(n, c), r);
                }
                assert_eq!(wedge_basis(n, p).len(), binomial(n, p));
            }
        }
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[0, 1], &[1, 1]), 1);
        assert_eq!(koszul_sign(&[1, 0], &[1, 1]), -1);
        assert_eq!(koszul_sign(&[1, 0], &[0, 1]), 1);
    }

    #[test]
    fn unshuffle_examples() {
        assert_eq!(unshuffles(1, 1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(unshuffles(2, 0), vec![vec![0, 1]]);
        assert_eq!(unshuffles(2, 1).len(), 3);
        for (h, r, odd) in splits(4, 2) {
            let mut p = h.clone();
            p.extend(r);
            assert_eq!(perm_parity(&p), odd);
        }
    }

    #[test]
    fn sorting_sign() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), Some(false));
        let mut v = vec![1, 0];
        assert_eq!(sort_with_sign(&mut v), Some(true));
        let mut v = vec![1, 2, 1];
        assert_eq!(sort_with_sign(&mut v), None);
    }
}
