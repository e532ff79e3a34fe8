//! Permutations of the letters `1..=n` in one-line form.
//!
//! Composition is right-to-left everywhere: `u.compose(&w)` applies `w`
//! first and then `u`, so in a word `v = v_1 v_2 ... v_k` the rightmost
//! factor `v_k` acts first. Fixed points count as singleton cycles, so
//! `cyc(e) = n`.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

/// Hard cap on the degree of a single permutation.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch")]
    DegreeMismatch,
    #[error("degree must be between 1 and {MAX_DEGREE}, got {0}")]
    BadDegree(usize),
    #[error("letter {letter} out of range 1..={degree}")]
    LetterOutOfRange { letter: usize, degree: usize },
    #[error("repeated letter {0}")]
    RepeatedLetter(usize),
    #[error("images are not a rearrangement of 1..={0}")]
    NotBijective(usize),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("permutation does not fix every letter above {0}")]
    NotRestrictable(usize),
}

/// Output styles understood by [`Permutation::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermStyle {
    /// Product of the nontrivial cycles, e.g. `(1 3)(2 4)`; identity is `e`.
    Cycles,
    /// Space-separated images, e.g. `3 4 1 2`.
    OneLine,
}

/// A bijection of `{1, ..., n}` stored in one-line form:
/// `images[i-1]` is the image of the letter `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` letters. Panics if `n` is 0 or above [`MAX_DEGREE`].
    pub fn identity(n: usize) -> Permutation {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img < 1 || img > n {
                return Err(PermError::LetterOutOfRange {
                    letter: img,
                    degree: n,
                });
            }
            if seen[img - 1] {
                return Err(PermError::NotBijective(n));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` on `n` letters.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Permutation, PermError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        for &letter in &[a, b] {
            if letter < 1 || letter > n {
                return Err(PermError::LetterOutOfRange { letter, degree: n });
            }
        }
        if a == b {
            return Err(PermError::RepeatedLetter(a));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a letter (1-based). Panics on an out-of-range letter.
    pub fn apply(&self, letter: usize) -> usize {
        self.images[letter - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self · other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|&mid| self.images[mid - 1])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.degree();
        let mut images = vec![0; n];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] - 1;
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones; equals
    /// `(-1)^(n - cyc)`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Canonical cycle decomposition: every cycle starts at its minimum
    /// letter, cycles sorted by that minimum, singletons included.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] - 1;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    /// True iff `a` and `b` lie in one cycle of the permutation.
    pub fn same_cycle(&self, a: usize, b: usize) -> Result<bool, PermError> {
        let n = self.degree();
        for &letter in &[a, b] {
            if letter < 1 || letter > n {
                return Err(PermError::LetterOutOfRange { letter, degree: n });
            }
        }
        if a == b {
            return Ok(true);
        }
        let mut cur = self.apply(a);
        while cur != a {
            if cur == b {
                return Ok(true);
            }
            cur = self.apply(cur);
        }
        Ok(false)
    }

    /// Embeds into degree `m >= n`, fixing the new letters.
    pub fn extend_to(&self, m: usize) -> Result<Permutation, PermError> {
        let n = self.degree();
        if m < n || m > MAX_DEGREE {
            return Err(PermError::BadDegree(m));
        }
        let mut images = self.images.clone();
        images.extend(n + 1..=m);
        Ok(Permutation { images })
    }

    /// Restriction to `{1, ..., m}`; every letter above `m` must be fixed.
    pub fn restrict_to(&self, m: usize) -> Result<Permutation, PermError> {
        let n = self.degree();
        if m < 1 || m > n {
            return Err(PermError::BadDegree(m));
        }
        if self.images[m..]
            .iter()
            .enumerate()
            .any(|(i, &v)| v != m + i + 1)
        {
            return Err(PermError::NotRestrictable(m));
        }
        Ok(Permutation {
            images: self.images[..m].to_vec(),
        })
    }

    /// Parses either notation. Cycle form needs a degree: pass one or it is
    /// inferred from the largest letter mentioned. An explicit degree must
    /// cover (cycle form) or match (one-line form) the text.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PermError::Parse("empty input".into()));
        }
        if trimmed == "e" || trimmed.starts_with('(') {
            let n = match degree {
                Some(n) => n,
                None => infer_cycle_degree(trimmed)?,
            };
            Self::parse_cycles(trimmed, n)
        } else {
            let p = Self::parse_one_line(trimmed)?;
            if let Some(n) = degree {
                if n != p.degree() {
                    return Err(PermError::DegreeMismatch);
                }
            }
            Ok(p)
        }
    }

    /// Parses one-line form, e.g. `"3 4 1 2"` (commas also accepted).
    pub fn parse_one_line(text: &str) -> Result<Permutation, PermError> {
        let mut images = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let v: usize = token
                .parse()
                .map_err(|_| PermError::Parse(format!("bad number {token:?}")))?;
            images.push(v);
        }
        if images.is_empty() {
            return Err(PermError::Parse("no images given".into()));
        }
        Permutation::from_images(images)
    }

    /// Parses cycle form with an explicit degree, e.g. `"(1 3)(2 4)"`.
    ///
    /// Cycles are multiplied right-to-left, so overlapping cycles such as
    /// `"(1 2)(2 3)"` denote the composition, not a partition. Letters may
    /// not repeat inside a single cycle. `"e"` and `"()"` denote the
    /// identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::BadDegree(degree));
        }
        let trimmed = text.trim();
        if trimmed == "e" {
            return Ok(Permutation::identity(degree));
        }
        let cycles = parse_cycle_lists(trimmed)?;
        let mut acc = Permutation::identity(degree);
        for cycle in &cycles {
            let mut seen_in_cycle = vec![false; degree];
            let mut p = Permutation::identity(degree);
            for &letter in cycle {
                if letter < 1 || letter > degree {
                    return Err(PermError::LetterOutOfRange { letter, degree });
                }
                if seen_in_cycle[letter - 1] {
                    return Err(PermError::RepeatedLetter(letter));
                }
                seen_in_cycle[letter - 1] = true;
            }
            for w in cycle.windows(2) {
                p.images[w[0] - 1] = w[1];
            }
            if cycle.len() > 1 {
                p.images[cycle[cycle.len() - 1] - 1] = cycle[0];
            }
            acc = acc.compose(&p).expect("equal degrees");
        }
        Ok(acc)
    }

    pub fn format(&self, style: PermStyle) -> String {
        match style {
            PermStyle::Cycles => self.format_cycles(),
            PermStyle::OneLine => self.format_one_line(),
        }
    }

    /// Nontrivial cycles in canonical order; `"e"` for the identity.
    pub fn format_cycles(&self) -> String {
        let decomp = self.cycle_decomposition();
        let mut out = String::new();
        for cycle in decomp.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            out.push('(');
            for (i, letter) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&letter.to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    pub fn format_one_line(&self) -> String {
        self.images
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// JSON rendering `{"n": .., "images": [..]}`.
    pub fn to_json(&self) -> Value {
        json!({ "n": self.degree(), "images": self.images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Permutation[{}]({})",
            self.degree(),
            self.format_one_line()
        )
    }
}

fn infer_cycle_degree(text: &str) -> Result<usize, PermError> {
    if text == "e" {
        return Err(PermError::Parse(
            "degree required to parse the identity".into(),
        ));
    }
    let max = parse_cycle_lists(text)?
        .iter()
        .flatten()
        .copied()
        .max()
        .ok_or_else(|| PermError::Parse("degree required for an empty cycle list".into()))?;
    Ok(max)
}

fn parse_cycle_lists(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::Parse(format!("expected '(' at {rest:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| PermError::Parse("unmatched '('".into()))?;
        let body = &rest[1..close];
        if body.contains('(') {
            return Err(PermError::Parse("nested '('".into()));
        }
        let mut cycle = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let letter: usize = token
                .parse()
                .map_err(|_| PermError::Parse(format!("bad letter {token:?}")))?;
            cycle.push(letter);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Cycles of a permutation in canonical form: each cycle begins with its
/// minimum letter, cycles are sorted by that minimum, and fixed points
/// appear as singletons, so the letters partition `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `cyc(v)`, fixed points included.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycles(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_identity_laws() {
        let e = Permutation::identity(4);
        let v = cycles("(1 3)(2 4)", 4);
        assert_eq!(e.compose(&v).unwrap(), v);
        assert_eq!(v.compose(&e).unwrap(), v);
        assert_eq!(v.compose(&v.inverse()).unwrap(), e);
    }

    #[test]
    fn compose_is_right_to_left() {
        // (1 2) . (2 3) applies (2 3) first: 1->2, 2->3, 3->1.
        let s1 = Permutation::transposition(3, 1, 2).unwrap();
        let s2 = Permutation::transposition(3, 2, 3).unwrap();
        let prod = s1.compose(&s2).unwrap();
        assert_eq!(prod.images(), &[2, 3, 1]);
        assert_eq!(prod, cycles("(1 2 3)", 3));
    }

    #[test]
    fn compose_degree_mismatch() {
        let u = Permutation::identity(3);
        let w = Permutation::identity(4);
        assert_eq!(u.compose(&w), Err(PermError::DegreeMismatch));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(cycles("(1 2 3)", 3).inverse(), cycles("(1 3 2)", 3));
    }

    #[test]
    fn inverse_of_a_transposition_stays_in_form() {
        // (1 2)(1 j) inverts to (1 2)(2 j): the generator set is inverse-closed.
        for n in 3..=8 {
            for j in 3..=n {
                let s1 = Permutation::transposition(n, 1, 2).unwrap();
                let t1j = Permutation::transposition(n, 1, j).unwrap();
                let t2j = Permutation::transposition(n, 2, j).unwrap();
                let a = s1.compose(&t1j).unwrap();
                let b = s1.compose(&t2j).unwrap();
                assert_eq!(a.inverse(), b);
            }
        }
    }

    #[test]
    fn sign_values() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::transposition(4, 1, 2).unwrap().sign(), -1);
        assert_eq!(cycles("(1 2)(3 4)", 4).sign(), 1);
    }

    #[test]
    fn cycle_decomposition_canonical() {
        let e = Permutation::identity(4);
        let d = e.cycle_decomposition();
        assert_eq!(d.cycles(), &[vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(d.count(), 4);

        let v = cycles("(1 2)(3 4)", 4);
        assert_eq!(v.cycle_count(), 2);

        // Generators of A_n have n-2 cycles.
        for n in 3..=8 {
            for j in 1..n {
                let g = Permutation::parse_cycles(&format!("(1 2)({j} {n})"), n).unwrap();
                assert_eq!(g.cycle_count(), n - 2);
            }
        }
    }

    #[test]
    fn cycle_lengths_partition_the_letters() {
        let v = cycles("(1 5 2)(3 4)", 6);
        let d = v.cycle_decomposition();
        let total: usize = d.cycles().iter().map(|c| c.len()).sum();
        assert_eq!(total, 6);
        let mut letters: Vec<usize> = d.cycles().iter().flatten().copied().collect();
        letters.sort_unstable();
        assert_eq!(letters, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn same_cycle_examples() {
        assert!(!Permutation::identity(3).same_cycle(1, 2).unwrap());
        assert!(cycles("(1 2 3)", 3).same_cycle(1, 2).unwrap());
        assert!(!cycles("(1 3)(2 4)", 4).same_cycle(1, 2).unwrap());
        assert_eq!(
            Permutation::identity(3).same_cycle(1, 4),
            Err(PermError::LetterOutOfRange {
                letter: 4,
                degree: 3
            })
        );
    }

    #[test]
    fn parse_examples() {
        assert_eq!(cycles("(1 2)(3 4)", 4).images(), &[2, 1, 4, 3]);
        assert_eq!(
            Permutation::parse_one_line("3 4 1 2").unwrap().images(),
            &[3, 4, 1, 2]
        );
        assert_eq!(
            Permutation::parse_cycles("(1 1)", 2),
            Err(PermError::RepeatedLetter(1))
        );
        assert_eq!(
            Permutation::parse_cycles("(1 5)", 3),
            Err(PermError::LetterOutOfRange {
                letter: 5,
                degree: 3
            })
        );
        assert!(Permutation::parse_one_line("1 1 3").is_err());
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        // Degree inference from the largest letter.
        assert_eq!(Permutation::parse("(2 5)", None).unwrap().degree(), 5);
    }

    #[test]
    fn format_round_trip() {
        let v = cycles("(1 3)(2 4)", 5);
        assert_eq!(
            Permutation::parse_cycles(&v.format(PermStyle::Cycles), 5).unwrap(),
            v
        );
        assert_eq!(
            Permutation::parse_one_line(&v.format(PermStyle::OneLine)).unwrap(),
            v
        );
        assert_eq!(Permutation::identity(3).format_cycles(), "e");
    }

    #[test]
    fn json_shape() {
        let v = cycles("(1 2)", 2);
        assert_eq!(v.to_json().to_string(), r#"{"images":[2,1],"n":2}"#);
    }

    #[test]
    fn restrict_and_extend() {
        let v = cycles("(1 2 3)", 5);
        let r = v.restrict_to(3).unwrap();
        assert_eq!(r.degree(), 3);
        assert_eq!(r.extend_to(5).unwrap(), v);
        assert_eq!(
            cycles("(4 5)", 5).restrict_to(3),
            Err(PermError::NotRestrictable(3))
        );
    }
}
