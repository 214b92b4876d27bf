//! Constant-time longest-common-extension queries over `T = S · # · f(S^R)`
//! and the longest-gapped-palindrome queries derived from them.
//!
//! `lgpal(i, j)` is the maximum `k` with `f(S[i-k+1..i]^R) = S[j..j+k-1]`:
//! the longest stretch that matches leftwards from `i` against rightwards
//! from `j` under the involution. One such query is a single LCE query in
//! `T`, because the block `f(S^R)` stores the left context of `i` already
//! reversed and mapped: the suffix of `T` at position `2n+2-i` spells
//! `f(S[i]) f(S[i-1]) ...`.

use crate::alphabet::{Involution, Sequence};
use crate::Error;

/// Preprocessed index answering `lce` and `lgpal` queries in O(1).
///
/// Construction is O(n log n): suffix array by radix-sort doubling, LCP by
/// Kasai's algorithm, then a sparse table for range minima. The sentinel
/// between the two halves of `T` is a reserved rank smaller than every
/// letter rank, so no query ever crosses it.
pub struct LceEngine {
    n: usize,
    tlen: usize,
    pos_in_sa: Vec<u32>,
    sparse: SparseTable,
}

impl LceEngine {
    /// Builds the engine for `seq` under involution `f`.
    pub fn build(seq: &Sequence, f: &Involution) -> Result<Self, Error> {
        let n = seq.n();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        f.ensure_total_for(seq.letters())?;

        // Rank-reduce S, sentinel, f(S^R) together; sentinel keeps rank 0.
        let tlen = 2 * n + 1;
        let mut assigned = [0u32; 256];
        let mut next = 0u32;
        let mut text = Vec::with_capacity(tlen);
        let mut push = |b: u8, text: &mut Vec<u32>| {
            if assigned[b as usize] == 0 {
                next += 1;
                assigned[b as usize] = next;
            }
            text.push(assigned[b as usize]);
        };
        for &b in seq.letters() {
            push(b, &mut text);
        }
        text.push(0);
        for &b in seq.letters().iter().rev() {
            push(f.apply(b).expect("totality checked above"), &mut text);
        }

        let sa = suffix_array(&text);
        let (lcp, pos_in_sa) = lcp_kasai(&text, &sa);
        let sparse = SparseTable::new(&lcp);
        Ok(LceEngine { n, tlen, pos_in_sa, sparse })
    }

    /// Length of `S` the engine was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of the concatenation `T`, i.e. `2n + 1`.
    pub fn text_len(&self) -> usize {
        self.tlen
    }

    /// Longest common prefix length of the suffixes of `T` starting at the
    /// 1-based positions `i` and `j`.
    ///
    /// Panics when a position is outside `1..=2n+1`.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.tlen).contains(&i) && (1..=self.tlen).contains(&j),
            "lce position out of range: ({i}, {j}) with |T| = {}",
            self.tlen
        );
        if i == j {
            return self.tlen - i + 1;
        }
        let a = self.pos_in_sa[i - 1];
        let b = self.pos_in_sa[j - 1];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.sparse.min(lo as usize + 1, hi as usize) as usize
    }

    /// Maximum `k` such that `f(S[i-k+1..i]^R) = S[j..j+k-1]`.
    ///
    /// `i = 0` and `j = n+1` are accepted and yield 0 (empty extension at a
    /// text border). Panics when `i > n` or `j` is outside `1..=n+1`.
    pub fn lgpal(&self, i: usize, j: usize) -> usize {
        assert!(i <= self.n, "lgpal left anchor {i} exceeds n = {}", self.n);
        assert!(
            (1..=self.n + 1).contains(&j),
            "lgpal right anchor {j} outside 1..={}",
            self.n + 1
        );
        if i == 0 || j == self.n + 1 {
            return 0;
        }
        self.lce(j, 2 * self.n + 2 - i)
    }
}

/// Suffix array by radix-sort doubling, O(n log n).
///
/// Works for arbitrary `u32` texts whose values are bounded by `len + 1`
/// (true for rank-reduced input). A unique minimal terminator is appended
/// internally so that all suffix comparisons are decided by content.
fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len() + 1;
    let mut key: Vec<u32> = text.iter().map(|&v| v + 1).collect();
    key.push(0);

    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut cls: Vec<u32> = vec![0; n];
    let mut buckets = vec![0u32; n.max(key.iter().map(|&v| v as usize + 1).max().unwrap())];

    // initial sort by single character
    counting_sort_by(&mut sa, |p| key[p as usize], &mut buckets);
    let mut classes = 1u32;
    cls[sa[0] as usize] = 0;
    for w in 1..n {
        if key[sa[w] as usize] != key[sa[w - 1] as usize] {
            classes += 1;
        }
        cls[sa[w] as usize] = classes - 1;
    }

    let mut cls_next = vec![0u32; n];
    let mut order2 = vec![0u32; n];
    let mut half = 1usize;
    while (classes as usize) < n {
        // stable sort by second key: positions with empty second half first
        let mut w = 0;
        for p in n - half..n {
            order2[w] = p as u32;
            w += 1;
        }
        for &p in sa.iter() {
            if p as usize >= half {
                order2[w] = p - half as u32;
                w += 1;
            }
        }
        // stable counting sort by first key
        sa.copy_from_slice(&order2);
        counting_sort_by(&mut sa, |p| cls[p as usize], &mut buckets);

        classes = 1;
        cls_next[sa[0] as usize] = 0;
        for w in 1..n {
            let (a, b) = (sa[w] as usize, sa[w - 1] as usize);
            let ka = (cls[a], cls.get(a + half).copied());
            let kb = (cls[b], cls.get(b + half).copied());
            if ka != kb {
                classes += 1;
            }
            cls_next[a] = classes - 1;
        }
        std::mem::swap(&mut cls, &mut cls_next);
        half *= 2;
    }

    // drop the appended terminator (it sorts first)
    debug_assert_eq!(sa[0] as usize, n - 1);
    sa.remove(0);
    sa
}

fn counting_sort_by(items: &mut [u32], key: impl Fn(u32) -> u32, buckets: &mut [u32]) {
    buckets.fill(0);
    for &it in items.iter() {
        buckets[key(it) as usize] += 1;
    }
    let mut sum = 0u32;
    for b in buckets.iter_mut() {
        let c = *b;
        *b = sum;
        sum += c;
    }
    let mut out = vec![0u32; items.len()];
    for &it in items.iter() {
        let k = key(it) as usize;
        out[buckets[k] as usize] = it;
        buckets[k] += 1;
    }
    items.copy_from_slice(&out);
}

/// Kasai's O(n) LCP construction; returns `(lcp, pos_in_sa)` where
/// `lcp[r] = lcp(T[sa[r-1]..], T[sa[r]..])` and `lcp[0] = 0`.
fn lcp_kasai(text: &[u32], sa: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m = sa.len();
    let mut pos_in_sa = vec![0u32; m];
    for (r, &p) in sa.iter().enumerate() {
        pos_in_sa[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; m];
    let mut h = 0usize;
    for p in 0..m {
        let r = pos_in_sa[p] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + h < m && q + h < m && text[p + h] == text[q + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    (lcp, pos_in_sa)
}

struct SparseTable {
    levels: Vec<Vec<u32>>,
    log2: Vec<u32>,
}

impl SparseTable {
    fn new(values: &[u32]) -> Self {
        let n = values.len();
        let mut log2 = vec![0u32; n + 1];
        for i in 2..=n {
            log2[i] = log2[i / 2] + 1;
        }
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels, log2 }
    }

    /// Minimum over the inclusive range `[lo, hi]`.
    fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi);
        let k = self.log2[hi - lo + 1] as usize;
        self.levels[k][lo].min(self.levels[k][hi + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn naive_lce(text: &[u32], i: usize, j: usize) -> usize {
        text[i - 1..]
            .iter()
            .zip(text[j - 1..].iter())
            .take_while(|(a, b)| a == b)
            .count()
    }

    fn naive_lgpal(seq: &Sequence, f: &Involution, i: usize, j: usize) -> usize {
        let n = seq.n();
        let mut k = 0;
        while i >= k + 1 && j + k <= n && f.matches(seq.letter(i - k), seq.letter(j + k)) {
            k += 1;
        }
        k
    }

    fn ranks_of_t(seq: &Sequence, f: &Involution) -> Vec<u32> {
        // mirror of the build-side construction, for the naive comparison
        let mut assigned = std::collections::HashMap::new();
        let mut next = 0u32;
        let mut out = Vec::new();
        let mut push = |b: Option<u8>, out: &mut Vec<u32>| match b {
            None => out.push(0),
            Some(b) => {
                let r = *assigned.entry(b).or_insert_with(|| {
                    next += 1;
                    next
                });
                out.push(r);
            }
        };
        for &b in seq.letters() {
            push(Some(b), &mut out);
        }
        push(None, &mut out);
        for &b in seq.letters().iter().rev() {
            push(Some(f.apply(b).unwrap()), &mut out);
        }
        out
    }

    #[test]
    fn builds_expected_concatenation() {
        let seq = Sequence::rank_reduce(b"AB");
        let f = Involution::identity();
        let eng = LceEngine::build(&seq, &f).unwrap();
        assert_eq!(eng.text_len(), 5); // A B # B A
        assert_eq!(eng.lce(1, 5), 1);
        assert_eq!(eng.lce(1, 3), 0);
        assert_eq!(eng.lce(2, 4), 2);
        for i in 1..=5 {
            assert_eq!(eng.lce(i, i), 5 - i + 1);
        }
    }

    #[test]
    fn fig_string_has_text_of_length_27() {
        let seq = Sequence::rank_reduce(b"GACATTCGAACGT");
        let eng = LceEngine::build(&seq, &Involution::dna_complement()).unwrap();
        assert_eq!(eng.text_len(), 27);
    }

    #[test]
    fn single_letter_text() {
        let seq = Sequence::rank_reduce(b"A");
        let eng = LceEngine::build(&seq, &Involution::identity()).unwrap();
        assert_eq!(eng.text_len(), 3);
        assert_eq!(eng.lce(1, 3), 1);
        assert_eq!(eng.lgpal(1, 1), 1);
    }

    #[test]
    fn build_rejects_partial_involution() {
        let seq = Sequence::rank_reduce(b"ACGTN");
        let err = LceEngine::build(&seq, &Involution::dna_complement()).unwrap_err();
        assert_eq!(err, Error::LetterOutsideAlphabet(b'N'));
    }

    #[test]
    fn build_rejects_empty_sequence() {
        let seq = Sequence::rank_reduce(b"");
        let err = LceEngine::build(&seq, &Involution::identity()).unwrap_err();
        assert_eq!(err, Error::EmptySequence);
    }

    #[test]
    fn lgpal_fig_queries() {
        let seq = Sequence::rank_reduce(b"GACATTCGAACGT");
        let f = Involution::dna_complement();
        let eng = LceEngine::build(&seq, &f).unwrap();
        assert_eq!(eng.lgpal(7, 8), 3);
        assert_eq!(eng.lgpal(3, 12), 2);
        assert_eq!(naive_lgpal(&seq, &f, 3, 12), 2);
        for j in 1..=14 {
            assert_eq!(eng.lgpal(0, j), 0);
        }
        for i in 0..=13 {
            assert_eq!(eng.lgpal(i, 14), 0);
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn lce_rejects_out_of_range() {
        let seq = Sequence::rank_reduce(b"AB");
        let eng = LceEngine::build(&seq, &Involution::identity()).unwrap();
        eng.lce(0, 1);
    }

    #[test]
    #[should_panic(expected = "right anchor")]
    fn lgpal_rejects_out_of_range() {
        let seq = Sequence::rank_reduce(b"AB");
        let eng = LceEngine::build(&seq, &Involution::identity()).unwrap();
        eng.lgpal(1, 4);
    }

    #[test]
    fn lce_matches_naive_scan_exhaustively() {
        let mut rng = StdRng::seed_from_u64(7);
        for f in [Involution::identity(), Involution::dna_complement()] {
            for _ in 0..40 {
                let n = rng.gen_range(1..=24);
                let s: Vec<u8> = (0..n).map(|_| b"ACGT"[rng.gen_range(0..4)]).collect();
                let seq = Sequence::rank_reduce(&s);
                let eng = LceEngine::build(&seq, &f).unwrap();
                let t = ranks_of_t(&seq, &f);
                for i in 1..=t.len() {
                    for j in 1..=t.len() {
                        assert_eq!(eng.lce(i, j), naive_lce(&t, i, j), "lce({i},{j}) on {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn lgpal_matches_naive_scan_exhaustively() {
        // every binary string up to n = 8, all argument pairs, both involutions
        for f in [Involution::identity(), Involution::dna_complement()] {
            for n in 1..=8usize {
                for bits in 0..1u32 << n {
                    let s: Vec<u8> = (0..n)
                        .map(|p| if bits >> p & 1 == 0 { b'A' } else { b'T' })
                        .collect();
                    let seq = Sequence::rank_reduce(&s);
                    let eng = LceEngine::build(&seq, &f).unwrap();
                    for i in 0..=n {
                        for j in 1..=n + 1 {
                            let got = eng.lgpal(i, j);
                            assert_eq!(got, naive_lgpal(&seq, &f, i, j), "lgpal({i},{j}) on {s:?}");
                            assert!(got <= i.min(n + 1 - j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lgpal_matches_naive_on_random_quaternary() {
        let mut rng = StdRng::seed_from_u64(11);
        for f in [Involution::identity(), Involution::dna_complement()] {
            for _ in 0..30 {
                let n = rng.gen_range(1..=40);
                let s: Vec<u8> = (0..n).map(|_| b"ACGT"[rng.gen_range(0..4)]).collect();
                let seq = Sequence::rank_reduce(&s);
                let eng = LceEngine::build(&seq, &f).unwrap();
                for i in 0..=n {
                    for j in 1..=n + 1 {
                        assert_eq!(eng.lgpal(i, j), naive_lgpal(&seq, &f, i, j));
                    }
                }
            }
        }
    }
}
