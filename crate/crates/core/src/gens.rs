//! Pancake generators, adjacent transpositions, and generator words.
//!
//! Subscripts are the usual ones: `f_1 … f_{n-1}` for S_n and
//! `f^B_0 … f^B_{n-1}` for B_n. (Some literature writes `r_j` for the
//! reversal of the first `j` entries, which is `f_{j-1}` here.)

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Element, Family, Permutation, SignedPermutation};

fn check_subscript(i: usize, min: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Degree { n, min: 1 });
    }
    let max = n - 1;
    if i < min || i > max {
        Err(Error::Subscript { index: i, min, max })
    } else {
        Ok(())
    }
}

/// Smallest legal subscript for the family.
pub fn min_subscript(family: Family) -> usize {
    match family {
        Family::Unsigned => 1,
        Family::Signed => 0,
    }
}

/// `f_i` in S_n: one-line `(i+1) i … 1 (i+2) … n`.
pub fn pancake_flip(i: usize, n: usize) -> Result<Permutation> {
    check_subscript(i, 1, n)?;
    let image = (1..=i as u32 + 1)
        .rev()
        .chain(i as u32 + 2..=n as u32)
        .collect();
    Ok(Permutation::from_vec_unchecked(image))
}

/// `f^B_i` in B_n: window `[-(i+1) -i … -1 (i+2) … n]`.
pub fn burnt_flip(i: usize, n: usize) -> Result<SignedPermutation> {
    check_subscript(i, 0, n)?;
    let window = (1..=i as i32 + 1)
        .rev()
        .map(|x| -x)
        .chain(i as i32 + 2..=n as i32)
        .collect();
    Ok(SignedPermutation::from_vec_unchecked(window))
}

/// The Coxeter generator `s_i` of S_n (`1 <= i <= n-1`) or `s^B_i` of B_n
/// (`0 <= i <= n-1`, with `s^B_0 = [-1 2 … n]`).
pub fn adjacent_transposition(i: usize, n: usize, family: Family) -> Result<Element> {
    check_subscript(i, min_subscript(family), n)?;
    Ok(match family {
        Family::Unsigned => {
            let mut image: Vec<u32> = (1..=n as u32).collect();
            image.swap(i - 1, i);
            Element::Unsigned(Permutation::from_vec_unchecked(image))
        }
        Family::Signed => {
            let mut window: Vec<i32> = (1..=n as i32).collect();
            if i == 0 {
                window[0] = -1;
            } else {
                window.swap(i - 1, i);
            }
            Element::Signed(SignedPermutation::from_vec_unchecked(window))
        }
    })
}

/// The generator with subscript `i` from either alphabet.
pub fn generator(alphabet: Alphabet, family: Family, i: usize, n: usize) -> Result<Element> {
    match (alphabet, family) {
        (Alphabet::Pancake, Family::Unsigned) => pancake_flip(i, n).map(Element::Unsigned),
        (Alphabet::Pancake, Family::Signed) => burnt_flip(i, n).map(Element::Signed),
        (Alphabet::Adjacent, _) => adjacent_transposition(i, n, family),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// Prefix reversals `f_i` / `f^B_i`.
    Pancake,
    /// Adjacent transpositions `s_i` / `s^B_i`.
    Adjacent,
}

/// A sequence of generator subscripts for one family and degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    family: Family,
    n: usize,
    letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(family: Family, n: usize, letters: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Degree { n, min: 1 });
        }
        for &l in &letters {
            check_subscript(l, min_subscript(family), n)?;
        }
        Ok(GeneratorWord { family, n, letters })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

/// Multiplies the named generators left to right, so the word `a b c`
/// evaluates to `compose(compose(g_a, g_b), g_c)`. The empty word is the
/// identity.
pub fn expand_word(word: &GeneratorWord, alphabet: Alphabet) -> Result<Element> {
    let mut acc = Element::identity(word.n, word.family)?;
    for &letter in &word.letters {
        let g = generator(alphabet, word.family, letter, word.n)?;
        acc = acc.compose(&g)?;
    }
    Ok(acc)
}

/// Text form of a word: `P:3,1,3` (pancake, S_n), `PB:2,0,1` (burnt, B_n),
/// `S:…` and `SB:…` for adjacent transpositions. The degree is not part of
/// the text and is supplied by [`ParsedWord::into_word`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedWord {
    pub alphabet: Alphabet,
    pub family: Family,
    pub letters: Vec<usize>,
}

impl ParsedWord {
    /// Smallest degree in which every letter is legal.
    pub fn min_degree(&self) -> usize {
        self.letters
            .iter()
            .map(|&l| l + 1)
            .max()
            .unwrap_or(1)
            .max(1)
    }

    pub fn into_word(self, n: usize) -> Result<GeneratorWord> {
        GeneratorWord::new(self.family, n, self.letters)
    }
}

impl FromStr for ParsedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (prefix, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("word `{s}` lacks a `P:`/`PB:` prefix")))?;
        let (alphabet, family) = match prefix {
            "P" => (Alphabet::Pancake, Family::Unsigned),
            "PB" => (Alphabet::Pancake, Family::Signed),
            "S" => (Alphabet::Adjacent, Family::Unsigned),
            "SB" => (Alphabet::Adjacent, Family::Signed),
            other => return Err(Error::Parse(format!("unknown word prefix `{other}`"))),
        };
        let letters = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter `{tok}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(ParsedWord {
            alphabet,
            family,
            letters,
        })
    }
}

impl fmt::Display for ParsedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match (self.alphabet, self.family) {
            (Alphabet::Pancake, Family::Unsigned) => "P",
            (Alphabet::Pancake, Family::Signed) => "PB",
            (Alphabet::Adjacent, Family::Unsigned) => "S",
            (Alphabet::Adjacent, Family::Signed) => "SB",
        };
        write!(f, "{prefix}:")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Adjacent-transposition word for `f_i` (or `f^B_i` when signed):
/// `f_1 = s_1`, `f_i = f_{i-1} s_i s_{i-1} … s_1`, and
/// `f^B_0 = s^B_0`, `f^B_i = f^B_{i-1} s^B_i … s^B_1 s^B_0`.
pub fn flip_as_adjacent_word(i: usize, family: Family) -> Vec<usize> {
    let low = min_subscript(family);
    let mut letters = Vec::new();
    for k in low..=i {
        letters.extend((low..=k).rev());
    }
    letters
}
