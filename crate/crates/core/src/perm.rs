//! Small helpers for permutations stored as image slices `perm[k] = image of k`.

/// Inverse of a permutation.
pub fn inverse(perm: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; perm.len()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v as usize] = k as u32;
    }
    inv
}

/// `true` when `perm` is a bijection on `0..perm.len()`.
pub fn is_bijection(perm: &[u32]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &v in perm {
        match seen.get_mut(v as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

/// Number of cycles (fixed points included).
pub fn cycle_count(perm: &[u32]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k] as usize;
        }
    }
    cycles
}

/// Cycles in order of their least element, each starting at that element.
pub fn cycles(perm: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push(k as u32);
            k = perm[k] as usize;
        }
        out.push(cycle);
    }
    out
}

/// Sign of a permutation: `+1` for even, `-1` for odd.
pub fn sign(perm: &[u32]) -> i8 {
    let even = cycles(perm)
        .iter()
        .map(|c| c.len() - 1)
        .sum::<usize>()
        % 2
        == 0;
    if even {
        1
    } else {
        -1
    }
}

/// Rearranges `perm` into the lexicographically next permutation.
/// Returns `false` (leaving `perm` sorted ascending) after the last one.
pub fn next_permutation(perm: &mut [u32]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// `p!` as `u128`, `None` on overflow.
pub fn factorial(p: usize) -> Option<u128> {
    (1..=p as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Every permutation of `0..p` in lexicographic order, with inverses.
#[derive(Debug, Clone)]
pub struct PermutationTable {
    p: usize,
    images: Vec<u32>,
    inverses: Vec<u32>,
}

impl PermutationTable {
    pub fn new(p: usize) -> Self {
        let mut perm: Vec<u32> = (0..p as u32).collect();
        let mut images = Vec::new();
        let mut inverses = Vec::new();
        loop {
            images.extend_from_slice(&perm);
            inverses.extend(inverse(&perm));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        PermutationTable {
            p,
            images,
            inverses,
        }
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.images.len().checked_div(self.p).unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: usize) -> &[u32] {
        &self.images[index * self.p..(index + 1) * self.p]
    }

    pub fn inverse_of(&self, index: usize) -> &[u32] {
        &self.inverses[index * self.p..(index + 1) * self.p]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_lexicographic_and_complete() {
        let t = PermutationTable::new(4);
        assert_eq!(t.len(), 24);
        for i in 1..t.len() {
            assert!(t.get(i - 1) < t.get(i));
        }
        assert_eq!(t.get(0), &[0, 1, 2, 3]);
        assert_eq!(t.get(23), &[3, 2, 1, 0]);
        for i in 0..t.len() {
            assert_eq!(inverse(t.get(i)), t.inverse_of(i));
        }
    }

    #[test]
    fn cycle_helpers() {
        let perm = [1, 0, 2, 4, 5, 3];
        assert_eq!(cycle_count(&perm), 3);
        assert_eq!(cycles(&perm), vec![vec![0, 1], vec![2], vec![3, 4, 5]]);
        assert_eq!(sign(&perm), -1);
        assert_eq!(sign(&[0, 1, 2]), 1);
        assert!(is_bijection(&perm));
        assert!(!is_bijection(&[0, 0]));
        assert!(!is_bijection(&[0, 2]));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), Some(1));
        assert_eq!(factorial(6), Some(720));
        assert_eq!(factorial(40), None);
    }
}
