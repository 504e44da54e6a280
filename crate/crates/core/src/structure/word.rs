use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// One run `e_color^exp` of a word; `exp` is never zero inside a [`Word`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub color: u64,
    pub exp: i64,
}

impl Letter {
    pub fn new(color: u64, exp: i64) -> Self {
        Letter { color, exp }
    }
}

/// A product `e_{a_1}^{k_1} ... e_{a_r}^{k_r}` of generators of the
/// structure group. The empty word is the identity.
///
/// Words are not tied to a modulus: colors are read modulo `n` by whatever
/// evaluates them. Adjacent letters of equal color are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    /// Zero exponents are dropped.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word {
            letters: letters.into_iter().filter(|l| l.exp != 0).collect(),
        }
    }

    /// `e_x`.
    pub fn generator(color: u64) -> Self {
        Self::power(color, 1)
    }

    /// `e_x^k`.
    pub fn power(color: u64, exp: i64) -> Self {
        Self::from_letters([Letter::new(color, exp)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, color: u64, exp: i64) {
        if exp != 0 {
            self.letters.push(Letter::new(color, exp));
        }
    }

    /// The concatenation `self ++ other`, i.e. the product.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.color, -l.exp))
                .collect(),
        }
    }

    /// Total exponent, the degree of the element.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|l| l.exp).sum()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self::from_letters(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "e{}", l.color)?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordParseError {
    pub token: String,
    pub reason: &'static str,
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad word token `{}`: {}", self.token, self.reason)
    }
}

impl core::error::Error for WordParseError {}

/// Whitespace separated tokens `e<color>` or `e<color>^<exp>`.
impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let err = |reason| WordParseError {
                token: token.into(),
                reason,
            };
            let body = token.strip_prefix('e').ok_or_else(|| err("expected `e`"))?;
            let (color, exp) = match body.split_once('^') {
                Some((c, e)) => (c, Some(e)),
                None => (body, None),
            };
            if color.is_empty() || !color.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("color must be a nonnegative integer"));
            }
            let color = color.parse().map_err(|_| err("color too large"))?;
            let exp = match exp {
                None => 1,
                Some(e) => e
                    .parse::<i64>()
                    .map_err(|_| err("exponent must be an integer"))?,
            };
            if exp == 0 {
                return Err(err("exponent must be nonzero"));
            }
            letters.push(Letter::new(color, exp));
        }
        Ok(Word { letters })
    }
}
