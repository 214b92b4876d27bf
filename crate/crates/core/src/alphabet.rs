//! Alphabet handling: rank reduction of input text and involutions on letters.

use std::fmt;

use crate::Error;

/// A byte sequence together with its rank-reduced form.
///
/// Ranks are assigned by first occurrence, so `ranks[p] == ranks[q]` exactly
/// when `letters[p] == letters[q]`, and every rank lies in `1..=n`. The rank
/// array is what index structures sort; palindrome checks always compare
/// original letters through the involution.
#[derive(Clone, PartialEq, Eq)]
pub struct Sequence {
    letters: Vec<u8>,
    ranks: Vec<u32>,
}

impl Sequence {
    /// Replaces every letter by its first-occurrence rank.
    pub fn rank_reduce(raw_text: &[u8]) -> Self {
        let mut assigned = [0u32; 256];
        let mut next = 0u32;
        let mut ranks = Vec::with_capacity(raw_text.len());
        for &b in raw_text {
            if assigned[b as usize] == 0 {
                next += 1;
                assigned[b as usize] = next;
            }
            ranks.push(assigned[b as usize]);
        }
        Sequence { letters: raw_text.to_vec(), ranks }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u8 {
        self.letters[i - 1]
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Letters of the factor `S[i..j]`; `j < i` yields the empty slice.
    pub fn factor(&self, i: usize, j: usize) -> &[u8] {
        if j < i {
            &[]
        } else {
            &self.letters[i - 1..j]
        }
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({:?})", String::from_utf8_lossy(&self.letters))
    }
}

/// A self-inverse letter mapping `f` with `f(f(a)) = a`, total on its
/// declared alphabet.
#[derive(Clone)]
pub struct Involution {
    map: [u8; 256],
    in_domain: [bool; 256],
}

impl Involution {
    /// The identity on every byte; all letters are fixed points.
    pub fn identity() -> Self {
        let mut map = [0u8; 256];
        for (b, slot) in map.iter_mut().enumerate() {
            *slot = b as u8;
        }
        Involution { map, in_domain: [true; 256] }
    }

    /// The DNA complement `A<->T`, `C<->G` on the alphabet `{A,C,G,T}`;
    /// it has no fixed point.
    pub fn dna_complement() -> Self {
        Self::custom(&[(b'A', b'T'), (b'C', b'G')]).expect("complement pairs are involutive")
    }

    /// Builds an involution from explicit pairs `(x, y)` meaning `f(x) = y`
    /// (and therefore `f(y) = x`). A letter paired inconsistently with two
    /// different partners is rejected.
    pub fn custom(pairs: &[(u8, u8)]) -> Result<Self, Error> {
        let mut map = [0u8; 256];
        let mut in_domain = [false; 256];
        for &(x, y) in pairs {
            for (a, b) in [(x, y), (y, x)] {
                if in_domain[a as usize] && map[a as usize] != b {
                    return Err(Error::NotInvolutive(a));
                }
                map[a as usize] = b;
                in_domain[a as usize] = true;
            }
        }
        Ok(Involution { map, in_domain })
    }

    /// Image of `a`, or `None` when `a` is outside the declared alphabet.
    pub fn apply(&self, a: u8) -> Option<u8> {
        if self.in_domain[a as usize] {
            Some(self.map[a as usize])
        } else {
            None
        }
    }

    /// Whether `f(a) = b`. Letters outside the alphabet match nothing.
    pub fn matches(&self, a: u8, b: u8) -> bool {
        self.apply(a) == Some(b)
    }

    pub fn is_fixed(&self, a: u8) -> bool {
        self.matches(a, a)
    }

    /// Whether some letter of the declared alphabet satisfies `f(a) = a`.
    pub fn has_fixed_point(&self) -> bool {
        (0..=255u8).any(|a| self.is_fixed(a))
    }

    pub fn fixed_points(&self) -> Vec<u8> {
        (0..=255u8).filter(|&a| self.is_fixed(a)).collect()
    }

    /// Checks that every listed letter has an image.
    pub fn ensure_total_for(&self, letters: &[u8]) -> Result<(), Error> {
        match letters.iter().find(|&&b| !self.in_domain[b as usize]) {
            None => Ok(()),
            Some(&b) => Err(Error::LetterOutsideAlphabet(b)),
        }
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (0..=255u8)
            .filter(|&a| self.in_domain[a as usize] && a <= self.map[a as usize])
            .map(|a| format!("{}<->{}", a as char, self.map[a as usize] as char))
            .collect();
        if pairs.len() > 8 {
            write!(f, "Involution({} letters)", pairs.len())
        } else {
            write!(f, "Involution({})", pairs.join(", "))
        }
    }
}
