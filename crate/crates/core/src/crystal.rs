//! Symmetric-tensor crystals `B_k` of type `A^{(1)}_M`.
//!
//! An element of `B_k` is a single-row semistandard tableau of length `k` over
//! the letters `1..=M+1`. It is stored as the multiplicity vector
//! `(x_1, ..., x_{M+1})`; the tableau word is only a printing/parsing view.

use std::fmt;

use crate::error::{arg, Error, Result};

/// Shared interface of crystal elements and tensor words.
///
/// `raise`/`lower` are the Kashiwara operators `e_i`/`f_i`; `None` is the zero
/// element of the crystal, a legal outcome and not an error.
pub trait Crystal: Sized {
    fn rank(&self) -> usize;
    fn raise(&self, i: usize) -> Result<Option<Self>>;
    fn lower(&self, i: usize) -> Result<Option<Self>>;
    fn epsilon(&self, i: usize) -> Result<u32>;
    fn phi(&self, i: usize) -> Result<u32>;
}

fn check_index(i: usize, rank: usize) -> Result<()> {
    if rank == 0 {
        return arg("rank-0 crystals carry no Kashiwara operators");
    }
    if i > rank {
        return arg(format!("Kashiwara index {i} outside 0..={rank}"));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    mult: Vec<u32>,
}

impl Element {
    /// Builds an element from its multiplicities `(x_1, ..., x_{M+1})`.
    pub fn new(mult: Vec<u32>) -> Result<Self> {
        if mult.is_empty() {
            return arg("multiplicity vector must have at least one entry");
        }
        if mult.iter().sum::<u32>() == 0 {
            return arg("crystal element must have capacity >= 1");
        }
        Ok(Element { mult })
    }

    pub(crate) fn from_mult_unchecked(mult: Vec<u32>) -> Self {
        debug_assert!(!mult.is_empty());
        Element { mult }
    }

    /// The highest element `u_k = (k, 0, ..., 0)`.
    pub fn vacuum(rank: usize, capacity: u32) -> Self {
        let mut mult = vec![0; rank + 1];
        mult[0] = capacity;
        Element { mult }
    }

    /// Parses a tableau word such as `"1123"`. Letters above 9 are written `(10)`.
    pub fn from_word(word: &str, rank: usize) -> Result<Self> {
        let mut mult = vec![0u32; rank + 1];
        for letter in parse_letters(word)? {
            if letter == 0 || letter > rank + 1 {
                return Err(Error::Parse(format!(
                    "letter {letter} in {word:?} outside 1..={}",
                    rank + 1
                )));
            }
            mult[letter - 1] += 1;
        }
        Element::new(mult)
    }

    /// Builds the element whose tableau contains exactly the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let mut mult = vec![0u32; rank + 1];
        for letter in letters {
            if letter == 0 || letter > rank + 1 {
                return arg(format!("letter {letter} outside 1..={}", rank + 1));
            }
            mult[letter - 1] += 1;
        }
        Element::new(mult)
    }

    pub fn rank(&self) -> usize {
        self.mult.len() - 1
    }

    pub fn capacity(&self) -> u32 {
        self.mult.iter().sum()
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Multiplicity of a (1-based) letter.
    pub fn count(&self, letter: usize) -> u32 {
        self.mult[letter - 1]
    }

    pub fn is_vacuum(&self) -> bool {
        self.mult[1..].iter().all(|&x| x == 0)
    }

    /// Number of letters different from 1 (balls, in box-ball language).
    pub fn ball_count(&self) -> u32 {
        self.mult[1..].iter().sum()
    }

    /// The weakly increasing tableau word as a letter sequence.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| std::iter::repeat_n(i + 1, x as usize))
    }

    pub fn word(&self) -> String {
        self.to_string()
    }

    /// All elements of `B_capacity` of the given rank, in lexicographic word order.
    pub fn enumerate(rank: usize, capacity: u32) -> Vec<Element> {
        let mut out = Vec::new();
        let mut mult = vec![0u32; rank + 1];
        fill(&mut out, &mut mult, 0, capacity);
        out.sort_by(|a, b| a.letters().cmp(b.letters()));
        out
    }

    /// `|B_k| = binom(k + M, M)`.
    pub fn crystal_size(rank: usize, capacity: u32) -> u128 {
        binomial(capacity as u128 + rank as u128, rank as u128)
    }

    pub(crate) fn e_unchecked(&self, i: usize) -> Option<Element> {
        let m = self.rank();
        let mut mult = self.mult.clone();
        if i == 0 {
            if mult[0] == 0 {
                return None;
            }
            mult[0] -= 1;
            mult[m] += 1;
        } else {
            if mult[i] == 0 {
                return None;
            }
            mult[i - 1] += 1;
            mult[i] -= 1;
        }
        Some(Element { mult })
    }

    pub(crate) fn f_unchecked(&self, i: usize) -> Option<Element> {
        let m = self.rank();
        let mut mult = self.mult.clone();
        if i == 0 {
            if mult[m] == 0 {
                return None;
            }
            mult[0] += 1;
            mult[m] -= 1;
        } else {
            if mult[i - 1] == 0 {
                return None;
            }
            mult[i - 1] -= 1;
            mult[i] += 1;
        }
        Some(Element { mult })
    }

    pub(crate) fn eps_unchecked(&self, i: usize) -> u32 {
        if i == 0 {
            self.mult[0]
        } else {
            self.mult[i]
        }
    }

    pub(crate) fn phi_unchecked(&self, i: usize) -> u32 {
        if i == 0 {
            self.mult[self.rank()]
        } else {
            self.mult[i - 1]
        }
    }
}

fn fill(out: &mut Vec<Element>, mult: &mut Vec<u32>, pos: usize, left: u32) {
    if pos + 1 == mult.len() {
        mult[pos] = left;
        out.push(Element { mult: mult.clone() });
        return;
    }
    for x in 0..=left {
        mult[pos] = x;
        fill(out, mult, pos + 1, left - x);
    }
    mult[pos] = 0;
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn parse_letters(word: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut chars = word.chars();
    while let Some(c) = chars.next() {
        match c {
            '0'..='9' => out.push(c as usize - '0' as usize),
            '(' => {
                let digits: String = chars.by_ref().take_while(|&c| c != ')').collect();
                let letter = digits
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter ({digits}) in {word:?}")))?;
                out.push(letter);
            }
            c if c.is_whitespace() => {}
            _ => return Err(Error::Parse(format!("unexpected {c:?} in tableau word {word:?}"))),
        }
    }
    Ok(out)
}

pub(crate) fn write_letter(f: &mut impl fmt::Write, letter: usize) -> fmt::Result {
    if letter < 10 {
        write!(f, "{letter}")
    } else {
        write!(f, "({letter})")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in self.letters() {
            write_letter(f, letter)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self}; M={})", self.rank())
    }
}

impl Crystal for Element {
    fn rank(&self) -> usize {
        Element::rank(self)
    }

    fn raise(&self, i: usize) -> Result<Option<Self>> {
        check_index(i, self.rank())?;
        Ok(self.e_unchecked(i))
    }

    fn lower(&self, i: usize) -> Result<Option<Self>> {
        check_index(i, self.rank())?;
        Ok(self.f_unchecked(i))
    }

    fn epsilon(&self, i: usize) -> Result<u32> {
        check_index(i, self.rank())?;
        Ok(self.eps_unchecked(i))
    }

    fn phi(&self, i: usize) -> Result<u32> {
        check_index(i, self.rank())?;
        Ok(self.phi_unchecked(i))
    }
}

pub fn kashiwara_e(i: usize, b: &Element) -> Result<Option<Element>> {
    b.raise(i)
}

pub fn kashiwara_f(i: usize, b: &Element) -> Result<Option<Element>> {
    b.lower(i)
}

pub fn eps(i: usize, b: &Element) -> Result<u32> {
    b.epsilon(i)
}

pub fn phi(i: usize, b: &Element) -> Result<u32> {
    b.phi(i)
}

/// `b_1 ⊗ b_2 ⊗ ... ⊗ b_n`, all factors of one rank.
///
/// Longer words act by folding the two-factor rule from the left:
/// `((b_1 ⊗ b_2) ⊗ b_3) ⊗ ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorWord {
    factors: Vec<Element>,
}

impl TensorWord {
    pub fn new(factors: Vec<Element>) -> Result<Self> {
        let Some(first) = factors.first() else {
            return arg("tensor word needs at least one factor");
        };
        let rank = first.rank();
        if let Some(bad) = factors.iter().find(|b| b.rank() != rank) {
            return Err(Error::RankMismatch { left: rank, right: bad.rank() });
        }
        Ok(TensorWord { factors })
    }

    pub fn pair(left: Element, right: Element) -> Result<Self> {
        TensorWord::new(vec![left, right])
    }

    pub fn factors(&self) -> &[Element] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Element> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(epsilon, phi)` of every prefix `b_1 ⊗ ... ⊗ b_k`.
    fn prefix_data(&self, i: usize) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc: Option<(u32, u32)> = None;
        for b in &self.factors {
            let (e2, p2) = (b.eps_unchecked(i), b.phi_unchecked(i));
            let next = match acc {
                None => (e2, p2),
                Some((e1, p1)) => (e1 + e2.saturating_sub(p1), p2 + p1.saturating_sub(e2)),
            };
            out.push(next);
            acc = Some(next);
        }
        out
    }

    /// Position of the factor the operator acts on.
    fn acting_factor(&self, i: usize, raising: bool) -> usize {
        let prefix = self.prefix_data(i);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let left_phi = prefix[k - 1].1;
            let right_eps = self.factors[k].eps_unchecked(i);
            let on_left = if raising { left_phi >= right_eps } else { left_phi > right_eps };
            if !on_left {
                break;
            }
            k -= 1;
        }
        k
    }

    fn act(&self, i: usize, raising: bool) -> Option<TensorWord> {
        let k = self.acting_factor(i, raising);
        let b = &self.factors[k];
        let image = if raising { b.e_unchecked(i) } else { b.f_unchecked(i) }?;
        let mut factors = self.factors.clone();
        factors[k] = image;
        Some(TensorWord { factors })
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, b) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Crystal for TensorWord {
    fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn raise(&self, i: usize) -> Result<Option<Self>> {
        check_index(i, self.rank())?;
        Ok(self.act(i, true))
    }

    fn lower(&self, i: usize) -> Result<Option<Self>> {
        check_index(i, self.rank())?;
        Ok(self.act(i, false))
    }

    fn epsilon(&self, i: usize) -> Result<u32> {
        check_index(i, self.rank())?;
        Ok(self.prefix_data(i).last().map_or(0, |d| d.0))
    }

    fn phi(&self, i: usize) -> Result<u32> {
        check_index(i, self.rank())?;
        Ok(self.prefix_data(i).last().map_or(0, |d| d.1))
    }
}

pub fn tensor_e(i: usize, w: &TensorWord) -> Result<Option<TensorWord>> {
    w.raise(i)
}

pub fn tensor_f(i: usize, w: &TensorWord) -> Result<Option<TensorWord>> {
    w.lower(i)
}

impl TensorWord {
    /// Parses factors separated by `⊗`, `*` or `,`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let factors = text
            .split(['⊗', '*', ','])
            .map(|w| Element::from_word(w.trim(), rank))
            .collect::<Result<Vec<_>>>()?;
        TensorWord::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(w: &str, m: usize) -> Element {
        Element::from_word(w, m).unwrap()
    }

    #[test]
    fn operator_examples() {
        assert_eq!(kashiwara_e(1, &el("2", 2)).unwrap(), Some(el("1", 2)));
        assert_eq!(kashiwara_e(1, &Element::vacuum(2, 3)).unwrap(), None);
        assert_eq!(kashiwara_e(0, &el("11", 2)).unwrap(), Some(el("13", 2)));
        assert_eq!(kashiwara_f(1, &el("11", 2)).unwrap(), Some(el("12", 2)));
        assert_eq!(kashiwara_f(0, &el("11", 2)).unwrap(), None);
        assert_eq!(kashiwara_f(2, &el("2", 2)).unwrap(), Some(el("3", 2)));
        // the 0-arrow of B_1 closes the cycle M+1 -> 1
        assert_eq!(kashiwara_f(0, &el("3", 2)).unwrap(), Some(el("1", 2)));
    }

    #[test]
    fn eps_phi_examples() {
        let u = Element::vacuum(3, 4);
        assert_eq!(eps(1, &u).unwrap(), 0);
        assert_eq!(phi(1, &u).unwrap(), 4);
        let b = el("13", 2);
        assert_eq!(phi(0, &b).unwrap(), 1);
        assert_eq!(eps(0, &b).unwrap(), 1);
    }

    #[test]
    fn index_out_of_range() {
        let b = el("12", 2);
        assert!(matches!(kashiwara_e(3, &b), Err(Error::Argument(_))));
        assert!(matches!(phi(7, &b), Err(Error::Argument(_))));
        let w = TensorWord::pair(b.clone(), b).unwrap();
        assert!(tensor_f(3, &w).is_err());
    }

    #[test]
    fn word_round_trip() {
        let b = Element::new(vec![0, 1, 1]).unwrap();
        assert_eq!(b.to_string(), "23");
        assert_eq!(el("23", 2), b);
        let big = Element::from_letters([1, 10, 12], 11).unwrap();
        assert_eq!(Element::from_word(&big.word(), 11).unwrap(), big);
        assert!(Element::from_word("14", 2).is_err());
        assert!(Element::new(vec![0, 0]).is_err());
    }

    #[test]
    fn enumerate_sizes() {
        assert_eq!(Element::enumerate(2, 2).len(), 6);
        assert_eq!(Element::enumerate(3, 4).len(), 35);
        assert_eq!(Element::crystal_size(3, 4), 35);
        assert_eq!(Element::crystal_size(0, 5), 1);
        let words: Vec<String> = Element::enumerate(2, 1).iter().map(|b| b.word()).collect();
        assert_eq!(words, ["1", "2", "3"]);
    }

    #[test]
    fn tensor_examples() {
        let w = TensorWord::pair(Element::vacuum(2, 2), Element::vacuum(2, 1)).unwrap();
        let fw = tensor_f(1, &w).unwrap().unwrap();
        assert_eq!(fw.to_string(), "12⊗1");
        assert_eq!(tensor_e(1, &w).unwrap(), None);
        assert!(TensorWord::new(vec![el("1", 2), el("1", 3)]).is_err());
        assert!(TensorWord::new(vec![]).is_err());
    }

    #[test]
    fn single_factor_word_matches_element() {
        for b in Element::enumerate(2, 3) {
            let w = TensorWord::new(vec![b.clone()]).unwrap();
            for i in 0..=2 {
                let via_word = tensor_f(i, &w).unwrap().map(|w| w.into_factors().remove(0));
                assert_eq!(via_word, kashiwara_f(i, &b).unwrap());
            }
        }
    }

    fn iterate(b: &Element, i: usize, raising: bool) -> u32 {
        let mut cur = b.clone();
        let mut n = 0;
        while let Some(next) = if raising { kashiwara_e(i, &cur) } else { kashiwara_f(i, &cur) }.unwrap() {
            cur = next;
            n += 1;
        }
        n
    }

    #[test]
    fn eps_phi_are_string_lengths() {
        for m in 1..=3 {
            for k in 1..=4 {
                for b in Element::enumerate(m, k) {
                    for i in 0..=m {
                        assert_eq!(eps(i, &b).unwrap(), iterate(&b, i, true));
                        assert_eq!(phi(i, &b).unwrap(), iterate(&b, i, false));
                        if let Some(fb) = kashiwara_f(i, &b).unwrap() {
                            assert_eq!(kashiwara_e(i, &fb).unwrap(), Some(b.clone()));
                            assert_eq!(fb.capacity(), b.capacity());
                        }
                        if let Some(eb) = kashiwara_e(i, &b).unwrap() {
                            assert_eq!(kashiwara_f(i, &eb).unwrap(), Some(b.clone()));
                        }
                    }
                }
            }
        }
    }

    /// Signature rule: each factor contributes `-^eps +^phi`; adjacent `+-`
    /// pairs cancel; f acts at the leftmost surviving `+`, e at the rightmost `-`.
    fn signature_act(w: &[Element], i: usize, raising: bool) -> Option<Vec<Element>> {
        let mut signs: Vec<(usize, char)> = Vec::new();
        for (pos, b) in w.iter().enumerate() {
            for _ in 0..b.eps_unchecked(i) {
                signs.push((pos, '-'));
            }
            for _ in 0..b.phi_unchecked(i) {
                signs.push((pos, '+'));
            }
        }
        let mut stack: Vec<(usize, char)> = Vec::new();
        for s in signs {
            if s.1 == '-' && stack.last().is_some_and(|t| t.1 == '+') {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        let pos = if raising {
            stack.iter().rev().find(|s| s.1 == '-')?.0
        } else {
            stack.iter().find(|s| s.1 == '+')?.0
        };
        let mut out = w.to_vec();
        out[pos] = if raising { w[pos].e_unchecked(i)? } else { w[pos].f_unchecked(i)? };
        Some(out)
    }

    fn word_strategy() -> impl Strategy<Value = Vec<Element>> {
        (1usize..=4).prop_flat_map(|m| {
            proptest::collection::vec(
                (1u32..=5).prop_flat_map(move |k| {
                    let all = Element::enumerate(m, k);
                    (0..all.len()).prop_map(move |i| all[i].clone())
                }),
                1..=5,
            )
        })
    }

    proptest! {
        #[test]
        fn tensor_rule_matches_signature_rule(w in word_strategy(), i_seed in 0usize..8) {
            let m = w[0].rank();
            let i = i_seed % (m + 1);
            let word = TensorWord::new(w.clone()).unwrap();
            for raising in [false, true] {
                let got = if raising { tensor_e(i, &word) } else { tensor_f(i, &word) }.unwrap();
                let want = signature_act(&w, i, raising);
                prop_assert_eq!(got.map(TensorWord::into_factors), want);
            }
        }

        #[test]
        fn tensor_operators_are_inverse(w in word_strategy(), i_seed in 0usize..8) {
            let i = i_seed % (w[0].rank() + 1);
            let word = TensorWord::new(w).unwrap();
            if let Some(fw) = tensor_f(i, &word).unwrap() {
                prop_assert_eq!(tensor_e(i, &fw).unwrap(), Some(word.clone()));
            }
            if let Some(ew) = tensor_e(i, &word).unwrap() {
                prop_assert_eq!(tensor_f(i, &ew).unwrap(), Some(word.clone()));
            }
        }
    }
}
