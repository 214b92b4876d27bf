//! Brute-force references for every algorithm in the crate.
//!
//! Everything here is written for clarity, not speed: two-pointer scans,
//! quadratic interval DPs and explicit piece enumeration. Property and
//! acceptance tests trust these implementations and nothing else; they are
//! shipped in the library so users can re-verify results on small inputs.

use crate::alphabet::{Involution, Sequence};
use crate::maxpal::{MaxPalTable, Metric, PalExtent};

/// Which pieces a decomposition may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PieceSet {
    /// Every factor within distance δ of a generalized palindrome.
    All,
    /// Only maximal generalized δ-palindromes.
    Maximal,
}

/// Two-pointer check of `x = f(x^R)`; the empty string qualifies.
pub fn naive_is_gpal(x: &[u8], f: &Involution) -> bool {
    (0..x.len() / 2 + x.len() % 2).all(|t| f.matches(x[t], x[x.len() - 1 - t]))
}

/// Hamming distance from `x` to the nearest generalized palindrome of the
/// same length, or `None` when no such palindrome exists (odd length under a
/// fixed-point-free involution).
pub fn naive_hamming_dist_to_gpal(x: &[u8], f: &Involution) -> Option<usize> {
    let mut dist = (0..x.len() / 2)
        .filter(|&t| !f.matches(x[t], x[x.len() - 1 - t]))
        .count();
    if x.len() % 2 == 1 && !f.is_fixed(x[x.len() / 2]) {
        if !f.has_fixed_point() {
            return None;
        }
        dist += 1;
    }
    Some(dist)
}

/// Restricted edit distance (deletions and substitutions only) from `x` to
/// the nearest generalized palindrome, by the quadratic interval DP.
pub fn naive_edit_dist_to_gpal(x: &[u8], f: &Involution) -> usize {
    let len = x.len();
    if len <= 1 {
        return if len == 1 && !f.is_fixed(x[0]) { 1 } else { 0 };
    }
    // d[i][j] = distance of x[i..=j]; intervals by increasing width
    let mut d = vec![vec![0usize; len]; len];
    for i in 0..len {
        if !f.is_fixed(x[i]) {
            d[i][i] = 1;
        }
    }
    for width in 2..=len {
        for i in 0..=len - width {
            let j = i + width - 1;
            d[i][j] = if f.matches(x[i], x[j]) {
                if i + 1 <= j - 1 {
                    d[i + 1][j - 1]
                } else {
                    0
                }
            } else {
                let inner = if i + 1 <= j - 1 { d[i + 1][j - 1] } else { 0 };
                1 + inner.min(d[i + 1][j]).min(d[i][j - 1])
            };
        }
    }
    d[0][len - 1]
}

/// Start positions of all generalized palindromic suffixes of `S[1..j]`,
/// ascending.
pub fn brute_p_j(seq: &Sequence, f: &Involution, j: usize) -> Vec<usize> {
    assert!((1..=seq.n()).contains(&j));
    (1..=j).filter(|&p| naive_is_gpal(seq.factor(p, j), f)).collect()
}

/// For each center and each budget `d <= delta`, the longest same-center
/// factor within distance `d`, by direct enumeration.
pub fn brute_maximal(seq: &Sequence, f: &Involution, delta: usize, metric: Metric) -> MaxPalTable {
    let n = seq.n();
    let delta = if metric == Metric::Exact { 0 } else { delta };
    let dist_of = |a: usize, b: usize| -> Option<usize> {
        let x = seq.factor(a, b);
        match metric {
            Metric::Exact => naive_is_gpal(x, f).then_some(0),
            Metric::Hamming => naive_hamming_dist_to_gpal(x, f),
            Metric::Edit => Some(naive_edit_dist_to_gpal(x, f)),
        }
    };
    let mut rows = vec![vec![None; 2 * n - 1]; delta + 1];
    for twice in 2..=2 * n {
        for (d, row) in rows.iter_mut().enumerate() {
            let max_len = (twice - 1).min(2 * n + 1 - twice);
            let mut len = max_len;
            loop {
                let start = (twice + 1 - len) / 2;
                let end = (twice - 1 + len) / 2;
                if let Some(c) = dist_of(start, end).filter(|&c| c <= d) {
                    row[twice - 2] = Some(PalExtent::new(start, end, c));
                    break;
                }
                if len < 2 {
                    break;
                }
                len -= 2;
            }
        }
    }
    MaxPalTable::from_rows(metric, delta, n, rows)
}

/// Minimum total gap length of a decomposition of `S` into pieces of length
/// at least `m` (drawn from `pieces`) with at most `g` gaps, or `None` when
/// no decomposition exists. Plain position x gaps-used DP with an explicit
/// piece scan, independent of the production recurrences.
pub fn brute_min_gaps(
    seq: &Sequence,
    f: &Involution,
    g: usize,
    m: usize,
    delta: usize,
    metric: Metric,
    pieces: PieceSet,
) -> Option<usize> {
    let n = seq.n();
    if n == 0 {
        return Some(0);
    }
    let admissible: Vec<(usize, usize)> = {
        let maximal: Option<std::collections::HashSet<(usize, usize)>> = match pieces {
            PieceSet::All => None,
            PieceSet::Maximal => Some(
                brute_maximal(seq, f, delta, metric)
                    .row(delta)
                    .map(|(_, e)| (e.start(), e.end()))
                    .collect(),
            ),
        };
        let fits = |a: usize, b: usize| -> bool {
            let x = seq.factor(a, b);
            match metric {
                Metric::Exact => naive_is_gpal(x, f),
                Metric::Hamming => {
                    naive_hamming_dist_to_gpal(x, f).is_some_and(|c| c <= delta)
                }
                Metric::Edit => naive_edit_dist_to_gpal(x, f) <= delta,
            }
        };
        (1..=n)
            .flat_map(|a| (a..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| b - a + 1 >= m)
            .filter(|&(a, b)| maximal.as_ref().map_or(true, |set| set.contains(&(a, b))))
            .filter(|&(a, b)| fits(a, b))
            .collect()
    };

    const INF: usize = usize::MAX / 2;
    let mut best = vec![vec![INF; g + 1]; n + 1];
    for q in 0..=g {
        best[0][q] = 0;
    }
    for j in 1..=n {
        for q in 0..=g {
            let mut v = INF;
            for &(a, b) in &admissible {
                if b == j {
                    v = v.min(best[a - 1][q]);
                }
            }
            if q >= 1 {
                for s in 1..=j {
                    v = v.min(best[s - 1][q - 1] + (j - s + 1));
                }
            }
            best[j][q] = v;
        }
    }
    (best[n][g] < INF).then_some(best[n][g])
}
