//! Maximal generalized palindromes and maximal generalized δ-palindromes
//! under the Hamming and the edit distance.
//!
//! Every factor `S[i..j]` has center `(i+j)/2`; the 2n-1 centers are the
//! integers `1..=n` and the half-integers between adjacent positions. Tables
//! store, per error budget `d` and per center, the longest factor within
//! distance `d` of a generalized palindrome.
//!
//! The Hamming computation chains `lgpal` queries outwards from each center,
//! spending one error per mismatched symmetric pair. The edit computation
//! lifts row `d` to row `d+1` through the three one-sided extensions and the
//! two border reductions, then keeps the longest candidate per center.

use std::fmt;

use crate::alphabet::{Involution, Sequence};
use crate::lce::LceEngine;

/// Distance measure for approximate palindromes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Metric {
    /// No errors at all (δ is forced to 0).
    Exact,
    /// Mismatched symmetric letter pairs, length preserved.
    Hamming,
    /// Restricted edit operations: deletions and substitutions.
    Edit,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Exact => "exact",
            Metric::Hamming => "hamming",
            Metric::Edit => "edit",
        })
    }
}

/// A palindrome center, stored as twice its value so that half-integer
/// centers stay integral: factor `S[i..j]` has `twice = i + j`, valid
/// centers are `2..=2n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Center(u32);

impl Center {
    pub fn from_twice(twice: usize) -> Self {
        assert!(twice >= 2, "centers start at position 1 (twice = 2)");
        Center(twice as u32)
    }

    /// The integer center at position `pos`.
    pub fn at(pos: usize) -> Self {
        Self::from_twice(2 * pos)
    }

    /// The half-integer center between positions `k` and `k+1`.
    pub fn between(k: usize) -> Self {
        Self::from_twice(2 * k + 1)
    }

    pub fn twice(self) -> usize {
        self.0 as usize
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

impl fmt::Debug for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Center({self})")
    }
}

/// A (possibly empty) factor `S[start..end]` together with the number of
/// errors its palindromic reading consumes. The empty factor at a
/// half-integer center is encoded as `start = end + 1`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PalExtent {
    start: u32,
    end: u32,
    errors: u32,
}

impl PalExtent {
    pub fn new(start: usize, end: usize, errors_used: usize) -> Self {
        assert!(start >= 1 && start <= end + 1, "bad extent [{start}..{end}]");
        PalExtent { start: start as u32, end: end as u32, errors: errors_used as u32 }
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn end(&self) -> usize {
        self.end as usize
    }

    pub fn errors_used(&self) -> usize {
        self.errors as usize
    }

    pub fn len(&self) -> usize {
        (self.end + 1 - self.start) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end + 1
    }

    pub fn center(&self) -> Center {
        Center::from_twice(self.twice())
    }

    fn twice(&self) -> usize {
        (self.start + self.end) as usize
    }

    /// Letters of the extent within `seq`.
    pub fn slice<'a>(&self, seq: &'a Sequence) -> &'a [u8] {
        seq.factor(self.start(), self.end())
    }
}

impl fmt::Debug for PalExtent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]@{}", self.start, self.end, self.errors)
    }
}

/// Per-budget, per-center maximal extents for one metric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxPalTable {
    metric: Metric,
    delta: usize,
    n: usize,
    /// `rows[d][twice - 2]`, absent where no d-palindrome exists.
    rows: Vec<Vec<Option<PalExtent>>>,
}

impl MaxPalTable {
    pub(crate) fn from_rows(
        metric: Metric,
        delta: usize,
        n: usize,
        rows: Vec<Vec<Option<PalExtent>>>,
    ) -> Self {
        debug_assert_eq!(rows.len(), delta + 1);
        MaxPalTable { metric, delta, n, rows }
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The maximal d-palindrome at `center`, if any.
    pub fn entry(&self, d: usize, center: Center) -> Option<PalExtent> {
        self.rows[d][center.twice() - 2]
    }

    /// All centers of the table, leftmost first.
    pub fn centers(&self) -> impl Iterator<Item = Center> {
        (2..=2 * self.n).map(Center::from_twice)
    }

    /// Present entries of row `d`.
    pub fn row(&self, d: usize) -> impl Iterator<Item = (Center, PalExtent)> + '_ {
        self.rows[d]
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| (Center::from_twice(i + 2), e)))
    }
}

/// All maximal generalized palindromes: one `lgpal` query per center.
///
/// At an integer center `c` with `f(S[c]) != S[c]` no generalized palindrome
/// exists (the middle letter would have to be a fixed point), so the slot
/// stays empty. Half-integer centers always hold at least the empty extent.
pub fn maximal_exact(seq: &Sequence, f: &Involution, engine: &LceEngine) -> MaxPalTable {
    let row = exact_row(seq, f, engine);
    MaxPalTable::from_rows(Metric::Exact, 0, seq.n(), vec![row])
}

fn exact_row(seq: &Sequence, f: &Involution, engine: &LceEngine) -> Vec<Option<PalExtent>> {
    let n = seq.n();
    debug_assert_eq!(engine.n(), n);
    let mut row = vec![None; 2 * n - 1];
    for twice in 2..=2 * n {
        row[twice - 2] = if twice % 2 == 0 {
            let c = twice / 2;
            if f.is_fixed(seq.letter(c)) {
                let r = engine.lgpal(c - 1, c + 1);
                Some(PalExtent::new(c - r, c + r, 0))
            } else {
                None
            }
        } else {
            let k = (twice - 1) / 2;
            let r = engine.lgpal(k, k + 1);
            Some(PalExtent::new(k + 1 - r, k + r, 0))
        };
    }
    row
}

/// All maximal generalized δ-palindromes under the Hamming distance, at most
/// δ `lgpal` queries per center.
///
/// An integer center whose middle letter is not fixed costs one error up
/// front when `f` has a fixed point to substitute in, and admits no entry at
/// all when `f` is fixed-point-free (no odd-length string is then within
/// finite Hamming distance of a generalized palindrome).
pub fn maximal_hamming(
    seq: &Sequence,
    f: &Involution,
    engine: &LceEngine,
    delta: usize,
) -> MaxPalTable {
    let n = seq.n();
    debug_assert_eq!(engine.n(), n);
    let has_fixed = f.has_fixed_point();
    let mut rows = vec![vec![None; 2 * n - 1]; delta + 1];
    for twice in 2..=2 * n {
        // current extent is [lo..hi] with cost `cost`; grow by one pair per
        // budget step while the next symmetric pair stays inside the text
        let (first_d, mut cost, mut lo, mut hi);
        if twice % 2 == 0 {
            let c = twice / 2;
            if f.is_fixed(seq.letter(c)) {
                (first_d, cost) = (0, 0);
            } else if has_fixed {
                (first_d, cost) = (1, 1);
            } else {
                continue;
            }
            let r = engine.lgpal(c - 1, c + 1);
            (lo, hi) = (c - r, c + r);
        } else {
            let k = (twice - 1) / 2;
            let r = engine.lgpal(k, k + 1);
            (first_d, cost) = (0, 0);
            (lo, hi) = (k + 1 - r, k + r);
        }
        for d in first_d..=delta {
            rows[d][twice - 2] = Some(PalExtent::new(lo, hi, cost));
            if d < delta && lo >= 2 && hi + 1 <= n {
                let r = engine.lgpal(lo - 2, hi + 2);
                (lo, hi, cost) = (lo - 1 - r, hi + 1 + r, cost + 1);
            }
        }
    }
    MaxPalTable::from_rows(Metric::Hamming, delta, n, rows)
}

/// The up-to-three extensions of a d-palindrome `S[i..j]`, each a
/// (d+1)-palindrome: ignore `S[i-1]`, ignore `S[j+1]`, or ignore both, then
/// match further outwards with one `lgpal` query. An extension whose ignored
/// position falls outside the text is omitted.
pub fn extend(pal: &PalExtent, engine: &LceEngine) -> Vec<PalExtent> {
    let mut out = Vec::with_capacity(3);
    for_each_extension(pal, engine, &mut |e| out.push(e));
    out
}

fn for_each_extension(pal: &PalExtent, engine: &LceEngine, emit: &mut dyn FnMut(PalExtent)) {
    let n = engine.n();
    let (i, j, e) = (pal.start(), pal.end(), pal.errors_used());
    if i >= 2 {
        let d = engine.lgpal(i - 2, j + 1);
        emit(PalExtent::new(i - 1 - d, j + d, e + 1));
    }
    if j + 1 <= n {
        let d = engine.lgpal(i - 1, j + 2);
        emit(PalExtent::new(i - d, j + 1 + d, e + 1));
    }
    if i >= 2 && j + 1 <= n {
        let d = engine.lgpal(i - 2, j + 2);
        emit(PalExtent::new(i - 1 - d, j + 1 + d, e + 1));
    }
}

/// The up-to-two border reductions of a d-palindrome touching a text border:
/// `S[1..j]` reduces to `S[1..j-1]` and `S[i..n]` to `S[i+1..n]`, both
/// (d+1)-palindromes. Nothing is returned when no border is touched or the
/// reduction would be empty.
pub fn border_reduce(pal: &PalExtent, n: usize) -> Vec<PalExtent> {
    let mut out = Vec::with_capacity(2);
    for_each_border_reduction(pal, n, &mut |e| out.push(e));
    out
}

fn for_each_border_reduction(pal: &PalExtent, n: usize, emit: &mut dyn FnMut(PalExtent)) {
    let (i, j, e) = (pal.start(), pal.end(), pal.errors_used());
    if i == 1 && j >= 2 {
        emit(PalExtent::new(1, j - 1, e + 1));
    }
    if j == n && i + 1 <= n {
        emit(PalExtent::new(i + 1, n, e + 1));
    }
}

/// All maximal generalized δ-palindromes under the edit distance in
/// O(n·δ) after preprocessing.
///
/// Row 0 is the exact table. Row `d+1` collects, per center, the longest of:
/// the row-`d` entry itself (budget left unused), and every extension and
/// border reduction of a row-`d` entry. The empty extents just outside the
/// text (`S[1..0]` and `S[n+1..n]`) are also offered as extension seeds each
/// round; they are 0-palindromes whose centers fall outside the table but
/// whose extensions land on centers 1 and n, which would otherwise stay
/// unreachable under a fixed-point-free involution.
pub fn maximal_edit(
    seq: &Sequence,
    f: &Involution,
    engine: &LceEngine,
    delta: usize,
) -> MaxPalTable {
    let n = seq.n();
    debug_assert_eq!(engine.n(), n);
    let mut rows = vec![exact_row(seq, f, engine)];
    for _ in 0..delta {
        rows.push(next_edit_row(n, engine, rows.last().unwrap()));
    }
    MaxPalTable::from_rows(Metric::Edit, delta, n, rows)
}

fn next_edit_row(
    n: usize,
    engine: &LceEngine,
    prev: &[Option<PalExtent>],
) -> Vec<Option<PalExtent>> {
    let mut next = prev.to_vec();
    let mut offer = |cand: PalExtent, next: &mut Vec<Option<PalExtent>>| {
        let slot = &mut next[cand.twice() - 2];
        let better = match slot {
            None => true,
            Some(old) => {
                cand.len() > old.len() || (cand.len() == old.len() && cand.errors < old.errors)
            }
        };
        if better {
            *slot = Some(cand);
        }
    };
    let outside = [
        PalExtent { start: 1, end: 0, errors: 0 },
        PalExtent { start: n as u32 + 1, end: n as u32, errors: 0 },
    ];
    for pal in prev.iter().flatten().chain(outside.iter()) {
        for_each_extension(pal, engine, &mut |c| offer(c, &mut next));
        for_each_border_reduction(pal, n, &mut |c| offer(c, &mut next));
    }
    next
}
