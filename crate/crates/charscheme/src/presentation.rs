//! Group presentations and free-group words.
//!
//! Words are always stored freely reduced; every constructor and operation
//! restores the invariant, so downstream code never sees `a a^-1`. A relator
//! is an equation `lhs = rhs` between words; the classic single-word relator
//! `r` is stored as `(e, r)`.

use std::fmt;
use thiserror::Error;

/// One letter of a word: a generator index plus an inversion flag.
///
/// The derived order (index first, plain before inverse) is the letter order
/// used by canonical word forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inverted(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word (identity).
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// The single generator `gen` as a word.
    pub fn generator(gen: usize) -> Self {
        Word { letters: vec![Letter::new(gen, false)] }
    }

    /// Builds a word from letters, freely reducing adjacent cancellations.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
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

    /// Number of inverse letters; zero means the word is positive.
    pub fn inverse_count(&self) -> usize {
        self.letters.iter().filter(|l| l.inverse).count()
    }

    /// Largest generator index used, or `None` for the empty word.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Group product; the concatenation is freely reduced.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    /// Raises the word to an integer power (negative powers invert).
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Strips matching first/last letters until the word is cyclically
    /// reduced. Preserves the conjugacy class.
    pub fn cyclically_reduce(&self) -> Word {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 && letters[0].cancels(*letters.last().unwrap()) {
            letters.pop();
            letters.remove(0);
        }
        Word { letters }
    }

    /// Left rotation by `k` positions followed by free reduction.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let k = k % self.letters.len();
        Word::from_letters(
            self.letters[k..].iter().chain(self.letters[..k].iter()).copied(),
        )
    }

    /// Renders the word using the given generator names, merging runs of a
    /// repeated letter into powers. The empty word prints as `e`.
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = names
                .get(l.gen)
                .cloned()
                .unwrap_or_else(|| format!("g{}", l.gen));
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            if exp == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, exp));
            }
            i += run;
        }
        parts.join(" ")
    }
}

/// Freely reduced random word of length at most `max_len`: a backtrack-free
/// random walk on the free group's Cayley graph.
pub fn random_word<R: rand::Rng>(rng: &mut R, num_gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        loop {
            let l = Letter::new(rng.gen_range(0..num_gens), rng.gen_bool(0.5));
            if letters.last().map_or(true, |last| !last.cancels(l)) {
                letters.push(l);
                break;
            }
        }
    }
    Word { letters }
}

/// A relation `lhs = rhs` between two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relator {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relator { lhs, rhs }
    }

    /// Wraps a classic single-word relator `r = e` as `(e, r)`.
    pub fn classic(r: Word) -> Self {
        Relator { lhs: Word::empty(), rhs: r }
    }

    /// The classic relator word `lhs^-1 rhs`.
    pub fn word(&self) -> Word {
        self.lhs.inverse().concat(&self.rhs)
    }
}

/// A finite group presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Relator>) -> Self {
        Presentation { generators, relators }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Adds one commutator relator `[g_j, g_k] = e` per generator pair,
    /// presenting the abelianization.
    pub fn abelianize(&self) -> Presentation {
        let mut relators = self.relators.clone();
        for j in 0..self.generators.len() {
            for k in (j + 1)..self.generators.len() {
                let gj = Word::generator(j);
                let gk = Word::generator(k);
                let comm = gj
                    .concat(&gk)
                    .concat(&gj.inverse())
                    .concat(&gk.inverse());
                relators.push(Relator::classic(comm));
            }
        }
        Presentation { generators: self.generators.clone(), relators }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse_word(text, &self.generators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            if r.lhs.is_empty() {
                writeln!(f, "rel: {}", r.rhs.display(&self.generators))?;
            } else {
                writeln!(
                    f,
                    "rel: {} = {}",
                    r.lhs.display(&self.generators),
                    r.rhs.display(&self.generators)
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in `{0}`")]
    MalformedExponent(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("empty word; use the literal `e` for the identity")]
    EmptyWord,
    #[error("the identity literal `e` may only appear alone")]
    MisplacedIdentity,
    #[error("missing `gens:` line before `{0}`")]
    MissingGenerators(String),
    #[error("unrecognized line `{0}`")]
    UnrecognizedLine(String),
    #[error("relation `{0}` has more than one `=`")]
    MalformedRelation(String),
}

fn valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    name != "e" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a word over named generators.
///
/// Tokens are whitespace-separated `name` or `name^k` with integer `k`
/// (expanded into `|k|` letters); the literal `e` denotes the identity and
/// must stand alone.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(ParseError::EmptyWord);
    }
    if tokens.iter().any(|t| *t == "e") {
        if tokens.len() == 1 {
            return Ok(Word::empty());
        }
        return Err(ParseError::MisplacedIdentity);
    }
    let mut letters = Vec::new();
    for token in tokens {
        let (name, exp) = match token.split_once('^') {
            None => (token, 1i64),
            Some((name, exp_text)) => {
                let exp = exp_text
                    .parse::<i64>()
                    .map_err(|_| ParseError::MalformedExponent(token.to_string()))?;
                (name, exp)
            }
        };
        let gen = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| ParseError::UnknownGenerator(name.to_string()))?;
        for _ in 0..exp.unsigned_abs() {
            letters.push(Letter::new(gen, exp < 0));
        }
    }
    Ok(Word::from_letters(letters))
}

/// Parses the presentation text format: one `gens: a b c` line followed by
/// `rel:` lines holding either a single relator word or `u = v`. Blank lines
/// and `#` comments are ignored.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for raw in text.lines() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gens:") {
            let mut names = Vec::new();
            for name in rest.split_whitespace() {
                if !valid_generator_name(name) {
                    return Err(ParseError::InvalidGeneratorName(name.to_string()));
                }
                if names.iter().any(|n| n == name) {
                    return Err(ParseError::DuplicateGenerator(name.to_string()));
                }
                names.push(name.to_string());
            }
            generators = Some(names);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let gens = generators
                .as_ref()
                .ok_or_else(|| ParseError::MissingGenerators(line.to_string()))?;
            let sides: Vec<&str> = rest.split('=').collect();
            match sides.as_slice() {
                [r] => relators.push(Relator::classic(parse_word(r, gens)?)),
                [u, v] => relators
                    .push(Relator::new(parse_word(u, gens)?, parse_word(v, gens)?)),
                _ => return Err(ParseError::MalformedRelation(line.to_string())),
            }
        } else {
            return Err(ParseError::UnrecognizedLine(line.to_string()));
        }
    }
    let generators = generators.unwrap_or_default();
    Ok(Presentation { generators, relators })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_trefoil_presentation() {
        let p = parse_presentation("gens: a b\nrel: b a b a^-1 b^-1 a^-1\n").unwrap();
        assert_eq!(p.generators, gens(&["a", "b"]));
        assert_eq!(p.relators.len(), 1);
        assert!(p.relators[0].lhs.is_empty());
        assert_eq!(p.relators[0].rhs.len(), 6);
        assert_eq!(p.relators[0].rhs.display(&p.generators), "b a b a^-1 b^-1 a^-1");
    }

    #[test]
    fn parse_two_sided_relation() {
        let p = parse_presentation("gens: a b\nrel: b a b = a b a\n").unwrap();
        let r = &p.relators[0];
        assert_eq!(r.lhs.display(&p.generators), "b a b");
        assert_eq!(r.rhs.display(&p.generators), "a b a");
        assert_eq!(r.word().len(), 6);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# torus knot\n\ngens: x y  # two generators\nrel: x^2 = y^3\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.generators, gens(&["x", "y"]));
        assert_eq!(p.relators[0].lhs.display(&p.generators), "x^2");
        assert_eq!(p.relators[0].rhs.display(&p.generators), "y^3");
    }

    #[test]
    fn free_reduction_on_parse() {
        let w = parse_word("a a^-1", &gens(&["a", "b"])).unwrap();
        assert!(w.is_empty());
        let w = parse_word("a b b^-1 a", &gens(&["a", "b"])).unwrap();
        assert_eq!(w.display(&gens(&["a", "b"])), "a^2");
    }

    #[test]
    fn identity_literal() {
        let g = gens(&["a"]);
        assert!(parse_word("e", &g).unwrap().is_empty());
        assert_eq!(parse_word("a e", &g), Err(ParseError::MisplacedIdentity));
        assert_eq!(parse_word("  ", &g), Err(ParseError::EmptyWord));
    }

    #[test]
    fn parse_errors() {
        let g = gens(&["a", "b"]);
        assert_eq!(
            parse_word("a c", &g),
            Err(ParseError::UnknownGenerator("c".to_string()))
        );
        assert_eq!(
            parse_word("a^x", &g),
            Err(ParseError::MalformedExponent("a^x".to_string()))
        );
        assert!(matches!(
            parse_presentation("gens: a a\n"),
            Err(ParseError::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a 1b\n"),
            Err(ParseError::InvalidGeneratorName(_))
        ));
        assert!(matches!(
            parse_presentation("rel: a\n"),
            Err(ParseError::MissingGenerators(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a\nrel: a = a = a\n"),
            Err(ParseError::MalformedRelation(_))
        ));
    }

    #[test]
    fn exponent_expansion() {
        let g = gens(&["a"]);
        let w = parse_word("a^3", &g).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.letters().iter().all(|l| !l.inverse));
        let w = parse_word("a^-2", &g).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.letters().iter().all(|l| l.inverse));
        assert!(parse_word("a^0", &g).unwrap().is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        let g = gens(&["a", "b"]);
        let w = parse_word("a b a b a^-1 b^-1 a^-1", &g).unwrap();
        assert_eq!(w.cyclically_reduce().display(&g), "b");
    }

    #[test]
    fn rotation_stays_reduced() {
        let g = gens(&["a", "b"]);
        let w = parse_word("a b a^-1", &g).unwrap();
        assert_eq!(w.rotate(1).len(), 1);
        assert_eq!(w.rotate(0), w);
    }

    #[test]
    fn abelianize_adds_commutators() {
        let p = parse_presentation("gens: a b\nrel: b a b = a b a\n").unwrap();
        let ab = p.abelianize();
        assert_eq!(ab.relators.len(), 2);
        let comm = &ab.relators[1];
        assert!(comm.lhs.is_empty());
        assert_eq!(comm.rhs.display(&ab.generators), "a b a^-1 b^-1");
        let free3 = Presentation::new(gens(&["a", "b", "c"]), vec![]);
        assert_eq!(free3.abelianize().relators.len(), 3);
    }

    #[test]
    fn word_algebra() {
        let g = gens(&["a", "b"]);
        let w = parse_word("a b^-1 a", &g).unwrap();
        assert_eq!(w.inverse().display(&g), "a^-1 b a^-1");
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.inverse().inverse(), w);
        let a = parse_word("a", &g).unwrap();
        assert_eq!(a.pow(-3).display(&g), "a^-3");
        assert!(a.pow(0).is_empty());
    }

    #[test]
    fn display_parse_roundtrip() {
        let g = gens(&["a", "b", "c"]);
        for text in ["a b c^-2 a", "a^3", "e", "b^-1 a b"] {
            let w = parse_word(text, &g).unwrap();
            assert_eq!(parse_word(&w.display(&g), &g).unwrap(), w);
        }
    }
}
