use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, pow: i32) -> Self {
        debug_assert!(pow == 1 || pow == -1);
        Letter { gen, inv: pow < 0 }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn pow(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Word from `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i32)]) -> Self {
        Word::new(pairs.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![Letter::new(g, 1)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Word) -> Word {
        Word::new(self.0.iter().chain(o.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Prefix of the first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.pow()).sum()
    }

    /// Image in `Z = <t>` when generator `g` maps to `t^weights[g]`.
    pub fn weighted_exponent(&self, weights: &[i64]) -> i64 {
        self.0.iter().map(|l| l.pow() * weights[l.gen]).sum()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Replace each generator by a word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.0 {
            let w = &images[l.gen];
            out = out.mul(&if l.inv { w.inverse() } else { w.clone() });
        }
        out
    }

    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v = &v[1..v.len() - 1];
        }
        Word(v.to_vec())
    }

    /// Equal up to cyclic permutation and inversion.
    pub fn conjugate_or_inverse_of(&self, o: &Word) -> bool {
        let a = self.cyclically_reduced();
        let b = o.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let bi = b.inverse();
        (0..a.len()).any(|r| {
            let rot: Vec<Letter> = a.0[r..].iter().chain(a.0[..r].iter()).copied().collect();
            rot == b.0 || rot == bi.0
        })
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.names[l.gen])?;
            if l.inv {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Element of the integral group ring of a free group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElt(BTreeMap<Word, i64>);

impl GroupRingElt {
    pub fn zero() -> Self {
        GroupRingElt(BTreeMap::new())
    }

    pub fn from_word(w: Word) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, 1);
        GroupRingElt(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        let e = self.0.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = GroupRingElt::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

/// Fox derivative `∂w/∂x_j`.
pub fn fox_derivative(w: &Word, j: usize) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    for (i, l) in w.letters().iter().enumerate() {
        if l.gen != j {
            continue;
        }
        if l.inv {
            out.add_term(w.prefix(i + 1), -1);
        } else {
            out.add_term(w.prefix(i), 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_pairs(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w, Word::gen(2));
        assert!(Word::gen(3).mul(&Word::gen(3).inverse()).is_empty());
    }

    #[test]
    fn fox_of_relator() {
        // r = x y x^-1 y^-1
        let r = Word::from_pairs(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let d0 = fox_derivative(&r, 0);
        let mut want = GroupRingElt::from_word(Word::identity());
        want.add_term(Word::from_pairs(&[(0, 1), (1, 1), (0, -1)]), -1);
        assert_eq!(d0, want);
    }

    #[test]
    fn cyclic_equivalence() {
        let a = Word::from_pairs(&[(0, 1), (1, 1), (2, -1), (1, -1)]);
        let b = Word::from_pairs(&[(2, -1), (1, -1), (0, 1), (1, 1)]);
        assert!(a.conjugate_or_inverse_of(&b));
        assert!(a.conjugate_or_inverse_of(&b.inverse()));
        assert!(!a.conjugate_or_inverse_of(&Word::gen(0)));
    }
}
