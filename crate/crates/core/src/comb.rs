//! Combinations and counting helpers for the exhaustive oracles.

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u64) -> Option<u128> {
    let exp = u32::try_from(exp).ok()?;
    (base as u128).checked_pow(exp)
}

/// All `k`-subsets of `0..n` as increasing index vectors, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Splits `0..total` into at most `jobs` contiguous ranges and runs `work`
/// on each, returning results in range order.
pub(crate) fn partitioned<T, F>(total: u64, jobs: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<u64>) -> T + Sync,
{
    let jobs = (jobs.max(1) as u64).min(total.max(1));
    if jobs == 1 {
        return vec![work(0..total)];
    }
    let chunk = total.div_ceil(jobs);
    let ranges: Vec<_> = (0..jobs).map(|j| (j * chunk).min(total)..((j + 1) * chunk).min(total)).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| {
                let work = &work;
                s.spawn(move || work(r))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}
