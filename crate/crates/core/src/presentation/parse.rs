//! Line-oriented presentation format.
//!
//! ```text
//! # torus knot T(2,3)
//! gens: x, y
//! rel: x^2*y^-3
//! meridian: x*y^-1
//! longitude: x^2*(x*y^-1)^-6
//! peripheral: +0 @ x ; -0 @ x*y^-1
//! ```
//!
//! Generator names are case-insensitive. In a word, a reference spelled
//! entirely in uppercase (`B`, `XY`) stands for the inverse of the generator
//! with that name, so `a*b*A*B` is the commutator of `a` and `b`.

use crate::error::{Error, Result};

use super::{GroupPresentation, PeripheralTerm, PresentationJson, Word};

/// Parses the text format, or JSON when the input starts with `{`.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    if text.trim_start().starts_with('{') {
        return parse_presentation_json(text);
    }

    let mut gens: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    let mut meridian = None;
    let mut longitude = None;
    let mut peripheral = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(syntax(line_no, first_non_space(content), "expected `key: value`"));
        };
        let key = content[..colon].trim().to_ascii_lowercase();
        let value = &content[colon + 1..];
        let offset = colon + 1;

        if key == "gens" || key == "generators" {
            if gens.is_some() {
                return Err(syntax(line_no, 1, "generators declared twice"));
            }
            gens = Some(parse_generator_list(value, line_no, offset)?);
            continue;
        }
        let names = gens
            .as_deref()
            .ok_or_else(|| syntax(line_no, 1, "`gens:` must come first"))?;
        match key.as_str() {
            "rel" | "relator" => rels.push(WordParser::new(value, names, line_no, offset).parse_all()?),
            "meridian" => meridian = Some(WordParser::new(value, names, line_no, offset).parse_all()?),
            "longitude" => longitude = Some(WordParser::new(value, names, line_no, offset).parse_all()?),
            "peripheral" => peripheral = Some(parse_peripheral(value, names, line_no, offset)?),
            other => {
                return Err(syntax(line_no, first_non_space(content), &format!("unknown key `{other}`")))
            }
        }
    }

    let names = gens.ok_or_else(|| syntax(1, 1, "missing `gens:` line"))?;
    assemble(names, rels, meridian, longitude, peripheral)
}

/// Parses the JSON form (`generators`, `relators`, `meridian`, `longitude`, `peripheral`).
pub fn parse_presentation_json(text: &str) -> Result<GroupPresentation> {
    let json: PresentationJson = serde_json::from_str(text)?;
    let names: Vec<String> = json.generators.iter().map(|n| n.to_lowercase()).collect();
    for n in &names {
        if !is_identifier(n) {
            return Err(Error::InvalidParameter(format!("`{n}` is not a valid generator name")));
        }
    }
    let word = |s: &str| parse_word(s, &names);
    let rels = json.relators.iter().map(|s| word(s)).collect::<Result<Vec<_>>>()?;
    let meridian = json.meridian.as_deref().map(word).transpose()?;
    let longitude = json.longitude.as_deref().map(word).transpose()?;
    let peripheral = json
        .peripheral
        .map(|seq| {
            seq.iter()
                .map(|t| {
                    let sign = match t.sign {
                        1 => 1,
                        -1 => -1,
                        s => return Err(Error::InvalidParameter(format!("peripheral sign must be ±1, got {s}"))),
                    };
                    Ok(PeripheralTerm::new(word(&t.conjugator)?, sign, t.relator))
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    assemble(names, rels, meridian, longitude, peripheral)
}

/// Parses a single word against a list of (lowercase) generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    WordParser::new(text, names, 1, 0).parse_all()
}

fn assemble(
    names: Vec<String>,
    rels: Vec<Word>,
    meridian: Option<Word>,
    longitude: Option<Word>,
    peripheral: Option<Vec<PeripheralTerm>>,
) -> Result<GroupPresentation> {
    let mut p = GroupPresentation::new(names, rels)?;
    if let Some(m) = meridian {
        p = p.with_meridian(m)?;
    }
    if let Some(l) = longitude {
        p = p.with_longitude(l)?;
    }
    if let Some(seq) = peripheral {
        p = p.with_peripheral_identity(seq)?;
    }
    Ok(p)
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn first_non_space(s: &str) -> usize {
    s.find(|c: char| !c.is_whitespace()).map_or(1, |i| i + 1)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_generator_list(value: &str, line: usize, offset: usize) -> Result<Vec<String>> {
    let mut names = Vec::new();
    let mut pos = 0;
    for part in value.split(',') {
        let name = part.trim();
        let col = offset + pos + first_non_space(part);
        if !is_identifier(name) {
            return Err(syntax(line, col, &format!("`{name}` is not a valid generator name")));
        }
        let lower = name.to_lowercase();
        if names.contains(&lower) {
            return Err(syntax(line, col, &format!("generator `{name}` declared twice")));
        }
        names.push(lower);
        pos += part.len() + 1;
    }
    Ok(names)
}

fn parse_peripheral(value: &str, names: &[String], line: usize, offset: usize) -> Result<Vec<PeripheralTerm>> {
    let mut terms = Vec::new();
    let mut pos = 0;
    for item in value.split(';') {
        let start = offset + pos;
        pos += item.len() + 1;
        let (head, conj) = match item.find('@') {
            Some(at) => (&item[..at], Some((&item[at + 1..], start + at + 1))),
            None => (item, None),
        };
        let head_trim = head.trim();
        let col = start + first_non_space(head);
        let (sign, digits) = match head_trim.chars().next() {
            Some('+') => (1, &head_trim[1..]),
            Some('-') => (-1, &head_trim[1..]),
            _ => return Err(syntax(line, col, "peripheral term must start with `+` or `-`")),
        };
        let relator: usize = digits
            .trim()
            .parse()
            .map_err(|_| syntax(line, col + 1, "expected a relator index"))?;
        let conjugator = match conj {
            Some((text, at)) => WordParser::new(text, names, line, at).parse_all()?,
            None => Word::identity(),
        };
        terms.push(PeripheralTerm::new(conjugator, sign, relator));
    }
    Ok(terms)
}

/// Recursive-descent parser for `factor ('*' factor)*`,
/// `factor = atom ('^' int)?`, `atom = name | '1' | '(' word ')'`.
struct WordParser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    names: &'a [String],
    line: usize,
    offset: usize,
}

impl<'a> WordParser<'a> {
    fn new(text: &'a str, names: &'a [String], line: usize, offset: usize) -> Self {
        Self {
            src: text.as_bytes(),
            text,
            pos: 0,
            names,
            line,
            offset,
        }
    }

    fn error(&self, message: &str) -> Error {
        syntax(self.line, self.offset + self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Word> {
        if self.peek().is_none() {
            return Err(self.error("empty word (write `1` for the identity)"));
        }
        let w = self.word()?;
        match self.peek() {
            None => Ok(w),
            Some(c) => Err(self.error(&format!("unexpected `{}`", c as char))),
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            w = &w * &self.factor()?;
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = &self.text[start..self.pos];
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let ident = &self.text[start..self.pos];
                self.resolve(ident).ok_or_else(|| Error::UnknownGenerator(ident.to_string()))
            }
            Some(c) => Err(self.error(&format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of word")),
        }
    }

    fn resolve(&self, ident: &str) -> Option<Word> {
        let index = |n: &str| self.names.iter().position(|g| g == n);
        let lower = ident.to_lowercase();
        let has_alpha = ident.chars().any(|c| c.is_ascii_alphabetic());
        let all_upper = has_alpha && !ident.chars().any(|c| c.is_ascii_lowercase());
        let g = index(&lower)?;
        Some(Word::power(g, if all_upper { -1 } else { 1 }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn simple_relator() {
        let p = parse_presentation("gens: x, y\nrel: x^2*y^-3").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators()[0], Word::from_pairs(&[(0, 2), (1, -3)]));
    }

    #[test]
    fn uppercase_means_inverse() {
        let p = parse_presentation("gens: a, b\nrel: a*b*a*B*A*B").unwrap();
        assert_eq!(
            p.relators()[0],
            Word::from_pairs(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])
        );
    }

    #[test]
    fn unknown_generator() {
        let err = parse_presentation("gens: x\nrel: y");
        // one generator needs zero relators, but the name check comes first
        assert!(matches!(err, Err(Error::UnknownGenerator(ref g)) if g == "y"));
    }

    #[test]
    fn deficiency_mismatch() {
        assert!(matches!(
            parse_presentation("gens: x, y, z\nrel: x*y"),
            Err(Error::DeficiencyMismatch { generators: 3, relators: 1 })
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_presentation("gens: x, y\nrel: x^^2") {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 8);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_presentation("gens: x, y\nrel: (x*y"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_presentation("rel: x"), Err(Error::Syntax { line: 1, .. })));
    }

    #[test]
    fn parentheses_and_powers() {
        let n = names(&["x", "y"]);
        let w = parse_word("x^2*(x*y^-1)^-2", &n).unwrap();
        assert_eq!(w, Word::from_pairs(&[(0, 2), (1, 1), (0, -1), (1, 1), (0, -1)]));
        assert!(parse_word("1", &n).unwrap().is_identity());
        assert!(parse_word("x*X", &n).unwrap().is_identity());
    }

    #[test]
    fn mixed_case_is_a_lookup() {
        let n = names(&["ab"]);
        assert_eq!(parse_word("Ab", &n).unwrap(), Word::generator(0));
        assert_eq!(parse_word("AB", &n).unwrap(), Word::power(0, -1));
    }

    #[test]
    fn peripheral_line() {
        let text = "gens: x, y\nrel: x^2*y^-3\nmeridian: x*y^-1\nlongitude: x^2*(x*y^-1)^-6\nperipheral: +0 @ x ; -0 @ x*y^-1\n";
        let p = parse_presentation(text).unwrap();
        let seq = p.peripheral_identity().unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!(seq[1].sign, -1);
        assert_eq!(seq[1].conjugator, Word::from_pairs(&[(0, 1), (1, -1)]));
        assert!(super::super::verify_peripheral_identity(&p).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_presentation("# unknot\n\ngens: x   # one meridian\n").unwrap();
        assert_eq!(p.generator_count(), 1);
    }

    #[test]
    fn json_form() {
        let p = parse_presentation(
            r#"{"generators": ["x", "y"], "relators": ["x^2*y^-3"], "meridian": "x*y^-1",
                "longitude": "x^2*(x*y^-1)^-6",
                "peripheral": [{"conjugator": "x", "sign": 1, "relator": 0},
                               {"conjugator": "x*y^-1", "sign": -1, "relator": 0}]}"#,
        )
        .unwrap();
        assert!(super::super::verify_peripheral_identity(&p).unwrap());
        let back = parse_presentation(&serde_json::to_string(&p.to_json()).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn print_then_parse_round_trips() {
        for q in [3, 5] {
            let p = super::super::torus_knot_presentation(q).unwrap();
            assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        }
        let p = super::super::figure_eight();
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }
}
