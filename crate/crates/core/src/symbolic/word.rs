use std::cmp::Ordering;
use std::fmt;

use super::SymbolicError;

/// Maximum number of generators a presentation may declare.
pub const MAX_GENERATORS: usize = 255;

/// Ordered, named generators with positive degrees.
///
/// Generator `i` is the `i`-th declared name; a larger index is a larger letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, SymbolicError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let degrees = vec![1; names.len()];
        Self::with_degrees(names, degrees)
    }

    pub fn with_degrees(names: Vec<String>, degrees: Vec<u32>) -> Result<Self, SymbolicError> {
        if names.is_empty() {
            return Err(SymbolicError::NoGenerators);
        }
        if names.len() > MAX_GENERATORS {
            return Err(SymbolicError::TooManyGenerators(names.len()));
        }
        if degrees.len() != names.len() {
            return Err(SymbolicError::DegreeCount {
                names: names.len(),
                degrees: degrees.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(SymbolicError::BadName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(SymbolicError::DuplicateName(n.clone()));
            }
        }
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(SymbolicError::ZeroDegree(names[pos].clone()));
        }
        Ok(GeneratorSet { names, degrees })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all_unit_degree(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// Builds a word, validating every letter against this set.
    pub fn word(&self, letters: &[usize]) -> Result<Word, SymbolicError> {
        let mut out = Vec::with_capacity(letters.len());
        let mut degree = 0;
        for &l in letters {
            if l >= self.len() {
                return Err(SymbolicError::LetterOutOfRange(l));
            }
            out.push(l as u8);
            degree += self.degrees[l];
        }
        Ok(Word { letters: out, degree })
    }

    pub fn generator(&self, i: usize) -> Word {
        Word {
            letters: vec![i as u8],
            degree: self.degrees[i],
        }
    }

    /// All words of total degree `degree`, in deglex order.
    pub fn words_of_degree(&self, degree: u32) -> Vec<Word> {
        let mut out = Vec::new();
        let mut buf = Vec::new();
        self.extend_words(degree, &mut buf, &mut out);
        out.sort();
        out
    }

    fn extend_words(&self, remaining: u32, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_raw(buf.clone(), self));
            return;
        }
        for g in 0..self.len() {
            let d = self.degrees[g];
            if d <= remaining {
                buf.push(g as u8);
                self.extend_words(remaining - d, buf, out);
                buf.pop();
            }
        }
    }

    /// Number of words of each total degree `0..=max_degree`.
    pub fn free_dimensions(&self, max_degree: u32) -> Vec<u128> {
        let mut counts = vec![0u128; max_degree as usize + 1];
        counts[0] = 1;
        for d in 1..=max_degree as usize {
            counts[d] = self
                .degrees
                .iter()
                .filter(|&&g| g as usize <= d)
                .map(|&g| counts[d - g as usize])
                .fold(0u128, |a, b| a.saturating_add(b));
        }
        counts
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial of the free algebra: a sequence of generator indices.
///
/// Ordered degree-lexicographically: total degree first, then letters left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
    degree: u32,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            degree: 0,
        }
    }

    pub(crate) fn from_raw(letters: Vec<u8>, gens: &GeneratorSet) -> Self {
        let degree = letters.iter().map(|&l| gens.degree(l as usize)).sum();
        Word { letters, degree }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            degree: self.degree + other.degree,
        }
    }

    /// Letters `start..end` as a new word.
    pub fn slice(&self, start: usize, end: usize, gens: &GeneratorSet) -> Word {
        Word::from_raw(self.letters[start..end].to_vec(), gens)
    }

    /// Replaces letters `start..end` with `middle`.
    pub fn splice(&self, start: usize, end: usize, middle: &Word, gens: &GeneratorSet) -> Word {
        let mut letters = Vec::with_capacity(self.len() - (end - start) + middle.len());
        letters.extend_from_slice(&self.letters[..start]);
        letters.extend_from_slice(&middle.letters);
        letters.extend_from_slice(&self.letters[end..]);
        let removed: u32 = self.letters[start..end]
            .iter()
            .map(|&l| gens.degree(l as usize))
            .sum();
        Word {
            letters,
            degree: self.degree - removed + middle.degree,
        }
    }

    pub fn contains_at(&self, pos: usize, needle: &Word) -> bool {
        self.letters[pos..].starts_with(&needle.letters)
    }

    /// Number of position pairs `i < j` with `letter[i] > letter[j]`.
    pub fn inversions(&self) -> usize {
        let l = &self.letters;
        let mut n = 0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if l[i] > l[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Renders with `*` between factors and `^` for runs, e.g. `x1*x2^2`.
    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    gens: &'a GeneratorSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.word.letters;
        if l.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < l.len() {
            let mut j = i + 1;
            while j < l.len() && l[j] == l[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.gens.name(l[i] as usize))?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}
