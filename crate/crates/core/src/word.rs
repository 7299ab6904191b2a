//! Words in the free monoid on `d` letters.

use std::cmp::Ordering;
use std::fmt;

/// A product of variables. Letters are stored zero-based (`0` is `x1`); the
/// empty word is the unit.
///
/// Words are ordered degree-lexicographically: shorter words first, then
/// lexicographically with `x1 < x2 < ... < xd`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u16])
    }

    pub fn from_letters<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        Word(letters.into_iter().map(|i| i as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().max().map(|&i| i as usize)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn suffix_from(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    /// Strips `prefix` from the front, if it is one.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0.strip_suffix(suffix.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    /// Rotation moving the first `k` letters to the back.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let len = v.len();
            v.rotate_left(k % len);
        }
        Word(v)
    }

    /// Least rotation in deglex order, with the shift that produces it.
    pub fn min_rotation(&self) -> (Word, usize) {
        let mut best = (self.clone(), 0);
        for k in 1..self.len() {
            let r = self.rotate(k);
            if r < best.0 {
                best = (r, k);
            }
        }
        best
    }

    /// Number of occurrences of letter `i`.
    pub fn count(&self, i: usize) -> usize {
        self.0.iter().filter(|&&l| l as usize == i).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Renders as `x1^2*x2`; the empty word renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", l + 1)?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// All words of length exactly `k` over `nvars` letters, in deglex order.
pub fn words_of_length(nvars: usize, k: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * nvars);
        for w in &out {
            for i in 0..nvars {
                let mut v = w.0.clone();
                v.push(i as u16);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `k`, in deglex order.
pub fn words_up_to(nvars: usize, k: usize) -> Vec<Word> {
    (0..=k).flat_map(|j| words_of_length(nvars, j)).collect()
}

/// Number of words of length at most `k` over `nvars` letters.
pub fn count_up_to(nvars: usize, k: usize) -> usize {
    (0..=k).map(|j| nvars.pow(j as u32)).sum()
}
