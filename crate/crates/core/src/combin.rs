//! Combinatorial generators: revolving-door combinations and binomials.

use num_bigint::BigUint;
use num_traits::One;

/// Binomial coefficient with saturation at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Revolving-door enumeration of the `t`-subsets of `{0, .., n-1}`.
///
/// Successive subsets differ by exactly one element swapped out and one
/// swapped in, so callers update a running XOR with two operations per step.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    n: usize,
    t: usize,
    // c[1..=t] ascending, c[t+1] = n sentinel
    c: Vec<usize>,
    done: bool,
}

impl RevolvingDoor {
    pub fn new(n: usize, t: usize) -> Self {
        let mut c = vec![0; t + 2];
        for (j, cj) in c.iter_mut().enumerate().take(t + 1).skip(1) {
            *cj = j - 1;
        }
        c[t + 1] = n;
        Self {
            n,
            t,
            c,
            done: t > n,
        }
    }

    /// The current subset, ascending.
    pub fn current(&self) -> &[usize] {
        &self.c[1..=self.t]
    }

    /// Advances to the next subset and returns `(removed, added)`, or `None`
    /// once every subset has been produced.
    pub fn advance(&mut self) -> Option<(usize, usize)> {
        if self.done {
            return None;
        }
        let t = self.t;
        let n = self.n;
        if t == 0 || t == n {
            self.done = true;
            return None;
        }
        let c = &mut self.c;
        if t == 1 {
            if c[1] + 1 < n {
                c[1] += 1;
                return Some((c[1] - 1, c[1]));
            }
            self.done = true;
            return None;
        }
        let mut j;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return Some((c[1] - 1, c[1]));
            }
            j = 2;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return Some((c[1] + 1, c[1]));
            }
            j = 2;
            // jump straight to the "increase" step
            if let Some(step) = Self::try_increase(c, j) {
                return Some(step);
            }
            j += 1;
        }
        loop {
            if j > t {
                self.done = true;
                return None;
            }
            // try to decrease c[j]; here c[j] = c[j-1] + 1
            if c[j] >= j {
                let removed = c[j];
                c[j] = c[j - 1];
                c[j - 1] = j - 2;
                return Some((removed, j - 2));
            }
            j += 1;
            if j > t {
                self.done = true;
                return None;
            }
            if let Some(step) = Self::try_increase(c, j) {
                return Some(step);
            }
            j += 1;
        }
    }

    // here c[j-1] = j - 2
    fn try_increase(c: &mut [usize], j: usize) -> Option<(usize, usize)> {
        if c[j] + 1 < c[j + 1] {
            let removed = c[j - 1];
            c[j - 1] = c[j];
            c[j] += 1;
            Some((removed, c[j]))
        } else {
            None
        }
    }
}

/// Calls `visit(acc)` once for every `t`-subset of `items`, where `acc` is
/// `start` XOR the selected items. Uses revolving-door order.
#[inline]
pub(crate) fn for_each_subset_xor<L, F>(items: &[L], t: usize, start: L, mut visit: F)
where
    L: crate::lanes::Lane,
    F: FnMut(L),
{
    let n = items.len();
    if t > n {
        return;
    }
    let mut rd = RevolvingDoor::new(n, t);
    let mut acc = start;
    for &i in rd.current() {
        acc = acc.xor(items[i]);
    }
    visit(acc);
    while let Some((out, inn)) = rd.advance() {
        acc = acc.xor(items[out]).xor(items[inn]);
        visit(acc);
    }
}

/// Rank of an ascending `t`-subset in colexicographic order.
pub(crate) fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1) as usize)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(40, 6), 3_838_380);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial_big(80, 40).to_string(), "107507208733336176461620");
    }

    #[test]
    fn revolving_door_visits_every_subset_once() {
        for n in 0..=10 {
            for t in 0..=n {
                let mut rd = RevolvingDoor::new(n, t);
                let mut seen = HashSet::new();
                let mut cur: Vec<usize> = rd.current().to_vec();
                seen.insert(cur.clone());
                while let Some((out, inn)) = rd.advance() {
                    let next = rd.current().to_vec();
                    let mut expect: Vec<usize> =
                        cur.iter().copied().filter(|&x| x != out).collect();
                    assert!(cur.contains(&out) && !cur.contains(&inn));
                    expect.push(inn);
                    expect.sort_unstable();
                    assert_eq!(expect, next, "n={n} t={t}");
                    assert!(next.windows(2).all(|w| w[0] < w[1]));
                    assert!(next.iter().all(|&x| x < n));
                    assert!(seen.insert(next.clone()), "repeat n={n} t={t}");
                    cur = next;
                }
                assert_eq!(seen.len() as u128, binomial(n, t), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn colex_rank_is_a_bijection() {
        let n = 9;
        let t = 4;
        let mut rd = RevolvingDoor::new(n, t);
        let mut ranks = HashSet::new();
        ranks.insert(colex_rank(rd.current()));
        while rd.advance().is_some() {
            let r = colex_rank(rd.current());
            assert!(r < binomial(n, t) as usize);
            ranks.insert(r);
        }
        assert_eq!(ranks.len(), binomial(n, t) as usize);
    }

    #[test]
    fn subset_xor_matches_direct() {
        let items: Vec<u64> = (0..12).map(|i| 1u64 << (i * 3 % 17) | (i as u64)).collect();
        let mut got = Vec::new();
        for_each_subset_xor(&items, 3, 0u64, |x| got.push(x));
        let mut want = Vec::new();
        for a in 0..12 {
            for b in a + 1..12 {
                for c in b + 1..12 {
                    want.push(items[a] ^ items[b] ^ items[c]);
                }
            }
        }
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
    }
}
