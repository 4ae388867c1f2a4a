//! Exhaustive word enumeration, used as the test corpus generator.

use crate::alphabet::{Alphabet, Word};

/// All words of length 0..=max_len in length-then-lexicographic order
/// (lexicographic by symbol index), each exactly once.
pub fn enumerate_words(alphabet: &Alphabet, max_len: usize) -> WordIter {
    WordIter {
        k: alphabet.len(),
        max_len,
        next: Some(Vec::new()),
    }
}

pub struct WordIter {
    k: usize,
    max_len: usize,
    next: Option<Word>,
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Odometer increment; on overflow move to the next length.
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                if current.len() == self.max_len {
                    self.next = None;
                } else {
                    self.next = Some(vec![0; current.len() + 1]);
                }
                break;
            }
            pos -= 1;
            if succ[pos] + 1 < self.k {
                succ[pos] += 1;
                for slot in &mut succ[pos + 1..] {
                    *slot = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(current)
    }
}
