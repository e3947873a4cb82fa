use std::fmt::Write as _;

use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// Finite group presentation with a designated meridian generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
    meridian: usize,
    longitude: Option<Word>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>, meridian: usize) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::MalformedPresentation("no generators".into()));
        }
        if meridian >= n {
            return Err(Error::MalformedPresentation(format!("meridian x{} out of range", meridian + 1)));
        }
        for r in &relators {
            if let Some(g) = r.max_gen().filter(|&g| g >= n) {
                return Err(Error::MalformedPresentation(format!(
                    "relator uses x{} but there are {n} generators",
                    g + 1
                )));
            }
        }
        Ok(GroupPresentation { names, relators, meridian, longitude: None })
    }

    /// Generators named `x1, .., xn`.
    pub fn with_default_names(n: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), relators, 0)
    }

    pub fn with_longitude(mut self, w: Word) -> Result<Self> {
        if w.max_gen().is_some_and(|g| g >= self.n_gens()) {
            return Err(Error::MalformedPresentation("longitude uses unknown generator".into()));
        }
        self.longitude = Some(w);
        Ok(self)
    }

    pub fn n_gens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridian(&self) -> usize {
        self.meridian
    }

    pub fn longitude(&self) -> Option<&Word> {
        self.longitude.as_ref()
    }

    pub fn deficiency(&self) -> i64 {
        self.names.len() as i64 - self.relators.len() as i64
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Drop the last relator when there are as many relators as
    /// generators, as for a Wirtinger presentation.
    pub fn deficiency_one(&self) -> Result<Self> {
        match self.deficiency() {
            1 => Ok(self.clone()),
            0 => {
                let mut out = self.clone();
                out.relators.pop();
                Ok(out)
            }
            d => Err(Error::MalformedPresentation(format!("deficiency {d}, expected 0 or 1"))),
        }
    }

    /// Text form: a `gens: n` line, an optional `meridian: xk` line, then one
    /// relator per line as a word in `x1..xn`.
    pub fn to_text(&self) -> String {
        let n = self.n_gens();
        let default: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut s = format!("gens: {n}\n");
        if self.meridian != 0 {
            writeln!(s, "meridian: x{}", self.meridian + 1).unwrap();
        }
        for r in &self.relators {
            writeln!(s, "{}", r.display(&default)).unwrap();
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("empty presentation".into()))?;
        let n: usize = head
            .strip_prefix("gens:")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected 'gens: n', got '{head}'")))?;
        let mut relators = Vec::new();
        let mut meridian = 0;
        for line in lines {
            if let Some(m) = line.strip_prefix("meridian:") {
                meridian = parse_word(m, n)?
                    .letters()
                    .first()
                    .map(|l| l.gen)
                    .ok_or_else(|| Error::Parse("empty meridian".into()))?;
                continue;
            }
            relators.push(parse_word(line, n)?);
        }
        let mut p = Self::with_default_names(n, relators)?;
        if meridian >= n {
            return Err(Error::MalformedPresentation("meridian out of range".into()));
        }
        p.meridian = meridian;
        Ok(p)
    }
}

/// Parse a word such as `x1 x3^-1 x2` over `n` generators; `1` is the
/// empty word.
pub fn parse_word(s: &str, n: usize) -> Result<Word> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok(Word::identity());
    }
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let bad = || Error::Parse(format!("bad letter '{tok}'"));
        let (base, pow) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
            None => (tok, 1),
        };
        let g: usize = base.strip_prefix('x').and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        if g == 0 || g > n {
            return Err(Error::MalformedPresentation(format!("generator {base} out of range 1..{n}")));
        }
        if pow == 0 {
            return Err(bad());
        }
        for _ in 0..pow.unsigned_abs() {
            letters.push(Letter::new(g - 1, if pow > 0 { 1 } else { -1 }));
        }
    }
    Ok(Word::new(letters))
}

/// Homomorphism of free groups given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub images: Vec<Word>,
}

impl GeneratorMap {
    /// Check that every relator of `source` maps to the identity or to a
    /// relator of `target` (up to cyclic permutation and inversion).
    pub fn check(&self, source: &GroupPresentation, target: &GroupPresentation) -> Result<()> {
        if self.images.len() != source.n_gens() {
            return Err(Error::MalformedPresentation("map does not cover every generator".into()));
        }
        if self.images.iter().any(|w| w.max_gen().is_some_and(|g| g >= target.n_gens())) {
            return Err(Error::MalformedPresentation("image uses unknown generator".into()));
        }
        for (i, r) in source.relators().iter().enumerate() {
            let img = r.substitute(&self.images);
            if img.cyclically_reduced().is_empty() {
                continue;
            }
            if !target.relators().iter().any(|t| img.conjugate_or_inverse_of(t)) {
                return Err(Error::MalformedPresentation(format!(
                    "image of relator {} is not a relator of the target",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let n = self.images.iter().filter_map(|w| w.max_gen()).max().map_or(0, |g| g + 1);
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut s = String::new();
        for (i, w) in self.images.iter().enumerate() {
            writeln!(s, "x{} -> {}", i + 1, w.display(&names)).unwrap();
        }
        s
    }

    pub fn parse_text(text: &str, target_gens: usize) -> Result<Self> {
        let mut images = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected 'xi -> word', got '{line}'")))?;
            let i: usize = lhs
                .trim()
                .strip_prefix('x')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad source generator '{lhs}'")))?;
            if i != images.len() + 1 {
                return Err(Error::Parse(format!("generator x{i} out of order")));
            }
            images.push(parse_word(rhs, target_gens)?);
        }
        Ok(GeneratorMap { images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let text = "gens: 3\nmeridian: x2\nx1 x2 x3^-1 x2^-1\nx2 x3^-1\n";
        let p = GroupPresentation::parse_text(text).unwrap();
        assert_eq!(p.n_gens(), 3);
        assert_eq!(p.meridian(), 1);
        assert_eq!(p.to_text(), text);
        assert_eq!(p.deficiency(), 1);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(GroupPresentation::parse_text("gens: 2\nx1 x3\n").is_err());
        assert!(GroupPresentation::parse_text("x1 x2\n").is_err());
        assert!(parse_word("x1 y2", 3).is_err());
    }

    #[test]
    fn map_roundtrip() {
        let m = GeneratorMap { images: vec![Word::gen(0), Word::gen(1), Word::gen(0)] };
        let text = m.to_text();
        assert_eq!(GeneratorMap::parse_text(&text, 2).unwrap(), m);
    }
}
