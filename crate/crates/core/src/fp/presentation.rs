use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::word::Word;

/// Generators and relators of a finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: usize,
    relators: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        if let Some(bad) = relators.iter().find(|r| r.max_generator() > generator_count) {
            return Err(Error::Parse(format!("relator {bad} uses a generator beyond {generator_count}")));
        }
        Ok(Presentation { generator_count, relators, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generator_count {
            return Err(Error::Parse("label count differs from generator count".into()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if !is_identifier(l) || seen.insert(l.clone(), i).is_some() {
                return Err(Error::Parse(format!("bad or repeated label {l:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of the 0-based generator `g`: the stored one, else `a`..`z`
    /// for small presentations and `x1`, `x2`, … otherwise.
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None if self.generator_count <= 26 => ((b'a' + g as u8) as char).to_string(),
            None => format!("x{}", g + 1),
        }
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PresentationJson {
            generators: self.generator_count,
            relators: self.relators.iter().map(|w| w.letters().to_vec()).collect(),
            labels: self.labels.clone(),
        })
        .expect("presentation serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: PresentationJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.relators.iter().flatten().any(|&l| l == 0) {
            return Err(Error::Parse("letter 0 in relator".into()));
        }
        let p = Presentation::new(j.generators, j.relators.into_iter().map(Word::new).collect())?;
        match j.labels {
            Some(l) => p.with_labels(l),
            None => Ok(p),
        }
    }

    /// Renders a word with this presentation's labels, collapsing runs into powers.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * l.signum() as i64;
            let name = self.label(l.unsigned_abs() as usize - 1);
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i = j;
        }
        parts.join("*")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generator_count).map(|g| self.label(g)).collect();
        let rels: Vec<String> = self.relators.iter().map(|w| self.format_word(w)).collect();
        write!(f, "<{} | {}>", gens.join(","), rels.join(", "))
    }
}

impl FromStr for Presentation {
    type Err = Error;

    /// Parses `<a,b | a^2, b^2, (a*b)^3>`. Relators may also be written as
    /// equations `u = v`, and `[u,v]` denotes `u⁻¹v⁻¹uv`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| Error::Parse("presentation must be enclosed in < >".into()))?;
        let (gens, rels) = inner.split_once('|').unwrap_or((inner, ""));
        let labels: Vec<String> = gens.split(',').map(|g| g.trim().to_string()).filter(|g| !g.is_empty()).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        if index.len() != labels.len() {
            return Err(Error::Parse("repeated generator name".into()));
        }
        let mut relators = Vec::new();
        for rel in split_top_level(rels) {
            let rel = rel.trim();
            if rel.is_empty() {
                continue;
            }
            let mut sides = rel.split('=');
            let lhs = WordParser::new(sides.next().unwrap_or(""), &index).parse_all()?;
            let w = match sides.next() {
                Some(rhs) => lhs.mul(&WordParser::new(rhs, &index).parse_all()?.inverse()),
                None => lhs,
            };
            if sides.next().is_some() {
                return Err(Error::Parse(format!("too many '=' in {rel:?}")));
            }
            relators.push(w);
        }
        Presentation::new(labels.len(), relators)?.with_labels(labels)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    index: &'a HashMap<&'a str, usize>,
}

impl<'a> WordParser<'a> {
    fn new(s: &str, index: &'a HashMap<&'a str, usize>) -> Self {
        WordParser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, index }
    }

    fn err(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in {text:?}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Word> {
        let w = self.product()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(w)
    }

    fn product(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            w = w.mul(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.product()?;
                self.expect(')')?;
                w
            }
            Some('[') => {
                self.pos += 1;
                let a = self.product()?;
                self.expect(',')?;
                let b = self.product()?;
                self.expect(']')?;
                a.inverse().mul(&b.inverse()).mul(&a).mul(&b)
            }
            Some('1') => {
                self.pos += 1;
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let g = *self.index.get(name.as_str()).ok_or_else(|| self.err(&format!("unknown generator {name}")))?;
                Word::generator(g)
            }
            _ => return Err(self.err("expected a generator")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: String = self.chars[start..self.pos].iter().collect();
            let e: i64 = e.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let p: Presentation = "<a,b | a^2, b^2, (a*b)^3>".parse().unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators()[2], Word::new(vec![1, 2, 1, 2, 1, 2]));
        assert_eq!(p.to_string(), "<a,b | a^2, b^2, a*b*a*b*a*b>");
    }

    #[test]
    fn equations_and_commutators() {
        let p: Presentation = "<x,y | x^3 = y^-1, [x,y]>".parse().unwrap();
        assert_eq!(p.relators()[0], Word::new(vec![1, 1, 1, 2]));
        assert_eq!(p.relators()[1], Word::new(vec![-1, -2, 1, 2]));
    }

    #[test]
    fn parse_errors() {
        assert!("a,b | a".parse::<Presentation>().is_err());
        assert!("<a | b>".parse::<Presentation>().is_err());
        assert!("<a | a^>".parse::<Presentation>().is_err());
        assert!("<a,a | a>".parse::<Presentation>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let p: Presentation = "<a,b | a^4, a^2*b^-2, b^-1*a*b*a>".parse().unwrap();
        let q = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_json()["generators"], 2);
    }

    #[test]
    fn default_labels() {
        let p = Presentation::new(30, vec![Word::new(vec![30, -1])]).unwrap();
        assert_eq!(p.label(29), "x30");
        let q: Presentation = p.to_string().parse().unwrap();
        assert_eq!(q.relators(), p.relators());
    }
}
