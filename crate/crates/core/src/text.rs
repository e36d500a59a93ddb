//! Text formats for monomials, ideals and codes.
//!
//! A monomial is `1` or a product of factors `xK`, `yK`, `(1-xK)` (a synonym
//! for `yK`) and, in extended monomials only, `zK`. Factors are separated by
//! `*`, by whitespace, or simply juxtaposed (`x1x2y3`). Repeated factors
//! collapse, since every stored monomial is squarefree.
//!
//! Ideal files hold one generator per line. Blank lines and `#` comments are
//! ignored, and header lines `n = <int>` (and `k = <int>` for extended
//! files) may precede the first generator. Code files hold one binary word
//! per line; character `i` is the state of neuron `i + 1`.

use crate::error::{Error, ParseError, Result};
use crate::families::{ExtIdeal, ExtMonomial};
use crate::monomial::{IndexSet, MonomialIdeal, SfMonomial, MAX_N};
use crate::oracle::NeuralCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    X,
    Y,
    Z,
}

#[derive(Clone, Copy, Debug)]
struct Factor {
    kind: Kind,
    index: usize,
    /// 1-based column of the factor's first character.
    column: usize,
}

struct Lexer {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer {
            chars: src.chars().enumerate().map(|(i, c)| (i + 1, c)).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(col, _)| col)
            .unwrap_or_else(|| self.chars.len() + 1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        let col = self.column();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(ParseError::new(
                1,
                col,
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(ParseError::new(
                1,
                col,
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let col = self.column();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(1, col, "expected a variable index"));
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        match digits.parse::<usize>() {
            Ok(0) => Err(ParseError::new(1, col, "variable indices start at 1")),
            Ok(i) if i <= MAX_N => Ok(i),
            _ => Err(ParseError::new(
                1,
                col,
                format!("index {digits} exceeds {MAX_N}"),
            )),
        }
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let column = self.column();
        match self.bump() {
            Some('x') => Ok(Factor {
                kind: Kind::X,
                index: self.index()?,
                column,
            }),
            Some('y') => Ok(Factor {
                kind: Kind::Y,
                index: self.index()?,
                column,
            }),
            Some('z') => Ok(Factor {
                kind: Kind::Z,
                index: self.index()?,
                column,
            }),
            Some('(') => {
                self.skip_ws();
                self.expect('1')?;
                self.skip_ws();
                self.expect('-')?;
                self.skip_ws();
                self.expect('x')?;
                let index = self.index()?;
                self.skip_ws();
                self.expect(')')?;
                Ok(Factor {
                    kind: Kind::Y,
                    index,
                    column,
                })
            }
            Some(c) => Err(ParseError::new(
                1,
                column,
                format!("unexpected character '{c}'"),
            )),
            None => Err(ParseError::new(
                1,
                column,
                "expected a factor, found end of input",
            )),
        }
    }
}

/// Lexes a product of factors. `Ok(vec![])` is the constant 1.
fn factors(text: &str) -> Result<Vec<Factor>, ParseError> {
    let mut lx = Lexer::new(text);
    lx.skip_ws();
    if lx.peek().is_none() {
        return Err(ParseError::new(1, lx.column(), "empty monomial"));
    }
    if lx.peek() == Some('1') {
        let col = lx.column();
        lx.bump();
        lx.skip_ws();
        return match lx.peek() {
            None => Ok(Vec::new()),
            Some(c) => Err(ParseError::new(
                1,
                lx.column().max(col + 1),
                format!("unexpected '{c}' after constant 1"),
            )),
        };
    }
    let mut out = vec![lx.factor()?];
    loop {
        lx.skip_ws();
        match lx.peek() {
            None => return Ok(out),
            Some('*') => {
                lx.bump();
                lx.skip_ws();
                out.push(lx.factor()?);
            }
            Some(_) => out.push(lx.factor()?),
        }
    }
}

fn max_index(fs: &[Factor], kinds: &[Kind]) -> usize {
    fs.iter()
        .filter(|f| kinds.contains(&f.kind))
        .map(|f| f.index)
        .max()
        .unwrap_or(0)
}

/// Assembles supports, checking x/y indices against `n` and z indices
/// against `k` (when `k` is `None`, z factors are rejected).
fn assemble(fs: &[Factor], n: usize, k: Option<usize>) -> Result<(IndexSet, IndexSet, IndexSet)> {
    let (mut x, mut y, mut z) = (IndexSet::EMPTY, IndexSet::EMPTY, IndexSet::EMPTY);
    for f in fs {
        match f.kind {
            Kind::X | Kind::Y if f.index > n => {
                return Err(Error::IndexOutOfRange { index: f.index, n });
            }
            Kind::X => x.insert(f.index),
            Kind::Y => y.insert(f.index),
            Kind::Z => match k {
                None => {
                    return Err(ParseError::new(
                        1,
                        f.column,
                        "placeholder variables are only allowed in extended monomials",
                    )
                    .into())
                }
                Some(k) if f.index > k => {
                    return Err(Error::PlaceholderOutOfRange { z: f.index, k });
                }
                Some(_) => z.insert(f.index),
            },
        }
    }
    Ok((x, y, z))
}

/// Parses a monomial over `x_1..x_n, y_1..y_n`.
///
/// ```
/// use neuralcanon::text::parse_monomial;
/// let m = parse_monomial("x3 y1 x2", 4).unwrap();
/// assert_eq!(m.to_string(), "x2*x3*y1");
/// ```
pub fn parse_monomial(text: &str, n: usize) -> Result<SfMonomial> {
    let fs = factors(text)?;
    let (x, y, _) = assemble(&fs, n, None)?;
    SfMonomial::new(n, x, y)
}

/// Parses a monomial over `x, y` and the placeholders `z_1..z_k`.
pub fn parse_ext_monomial(text: &str, n: usize, k: usize) -> Result<ExtMonomial> {
    let fs = factors(text)?;
    let (x, y, z) = assemble(&fs, n, Some(k))?;
    ExtMonomial::new(SfMonomial::new(n, x, y)?, z, k)
}

/// Splits an inline list `a, b, c`, optionally wrapped as `(a, b, c)`.
fn split_list(text: &str) -> Vec<(usize, &str)> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut offset = trimmed_start;
    if outer_parens(body) {
        body = &body[1..body.len() - 1];
        offset += 1;
    }
    if body.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in body.char_indices() {
        if c == ',' {
            out.push((offset + start, &body[start..i]));
            start = i + 1;
        }
    }
    out.push((offset + start, &body[start..]));
    out
}

/// True when `s` is `( ... )` with the first parenthesis closing at the end
/// and the content not of the form `1-x..`.
fn outer_parens(s: &str) -> bool {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return false;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    let inner: String = s[1..s.len() - 1]
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    !inner.starts_with("1-")
}

fn relocate(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::Parse(p) => Error::Parse(p.at_line(line, offset)),
        other => other,
    }
}

/// Parses a comma-separated generator list such as `x1*y2, x3*y1`.
///
/// With `n = None` the width is the largest index that occurs.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut lexed = Vec::new();
    for (offset, item) in split_list(text) {
        lexed.push(factors(item).map_err(|e| e.at_line(1, offset))?);
    }
    let seen = lexed
        .iter()
        .map(|f| max_index(f, &[Kind::X, Kind::Y]))
        .max()
        .unwrap_or(0);
    let n = resolve_width(n, None, seen, 1)?;
    let gens = lexed
        .iter()
        .map(|fs| {
            let (x, y, _) = assemble(fs, n, None)?;
            SfMonomial::new(n, x, y)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

struct FileHeader {
    n: Option<(usize, usize)>,
    k: Option<(usize, usize)>,
}

/// One significant line: its 1-based number, the column of its first
/// character in the original line, and its content with comments removed.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let lead = content.len() - content.trim_start().len();
        let body = content.trim();
        (!body.is_empty()).then_some((i + 1, lead, body))
    })
}

/// Recognizes `name = <int>`.
fn header_value(body: &str, name: &str, line: usize, lead: usize) -> Result<Option<usize>> {
    let Some((lhs, rhs)) = body.split_once('=') else {
        return Ok(None);
    };
    if lhs.trim() != name {
        return Ok(None);
    }
    let col = lead + body.find('=').unwrap_or(0) + 2;
    rhs.trim().parse::<usize>().map(Some).map_err(|_| {
        ParseError::new(line, col, format!("expected an integer after '{name} ='")).into()
    })
}

fn resolve_width(
    over: Option<usize>,
    header: Option<(usize, usize)>,
    seen: usize,
    fallback: usize,
) -> Result<usize> {
    let n = over
        .or(header.map(|(v, _)| v))
        .unwrap_or(seen.max(fallback));
    if n == 0 || n > MAX_N {
        if let (None, Some((v, line))) = (over, header) {
            return Err(
                ParseError::new(line, 1, format!("width {v} is outside 1..={MAX_N}")).into(),
            );
        }
        return Err(Error::WidthOutOfRange(n));
    }
    Ok(n)
}

type Lines<'a> = Vec<(usize, usize, &'a str, Vec<Factor>)>;

fn lex_file<'a>(text: &'a str, allow_k: bool) -> Result<(FileHeader, Lines<'a>)> {
    let mut header = FileHeader { n: None, k: None };
    let mut lines: Lines<'a> = Vec::new();
    for (line, lead, body) in significant_lines(text) {
        if let Some(v) = header_value(body, "n", line, lead)? {
            if !lines.is_empty() || header.n.is_some() {
                return Err(ParseError::new(
                    line,
                    lead + 1,
                    "'n =' must precede all generators and appear once",
                )
                .into());
            }
            header.n = Some((v, line));
            continue;
        }
        if allow_k {
            if let Some(v) = header_value(body, "k", line, lead)? {
                if !lines.is_empty() || header.k.is_some() {
                    return Err(ParseError::new(
                        line,
                        lead + 1,
                        "'k =' must precede all generators and appear once",
                    )
                    .into());
                }
                header.k = Some((v, line));
                continue;
            }
        }
        let fs = factors(body).map_err(|e| e.at_line(line, lead))?;
        lines.push((line, lead, body, fs));
    }
    Ok((header, lines))
}

fn located_range_error(e: Error, fs: &[Factor], line: usize, lead: usize) -> Error {
    let locate = |pred: &dyn Fn(&Factor) -> bool| {
        fs.iter()
            .find(|f| pred(f))
            .map(|f| f.column + lead)
            .unwrap_or(lead + 1)
    };
    match e {
        Error::IndexOutOfRange { index, n } => {
            let col = locate(&|f| f.kind != Kind::Z && f.index == index);
            ParseError::new(line, col, format!("index {index} is outside 1..={n}")).into()
        }
        Error::PlaceholderOutOfRange { z, k } => {
            let col = locate(&|f| f.kind == Kind::Z && f.index == z);
            ParseError::new(line, col, format!("placeholder z{z} is outside z1..z{k}")).into()
        }
        other => relocate(other, line, lead),
    }
}

/// Parses an ideal file. `n_override` takes precedence over an `n =` header,
/// which takes precedence over the largest index seen.
pub fn parse_ideal_file(text: &str, n_override: Option<usize>) -> Result<MonomialIdeal> {
    let (header, lines) = lex_file(text, false)?;
    let seen = lines
        .iter()
        .map(|l| max_index(&l.3, &[Kind::X, Kind::Y]))
        .max()
        .unwrap_or(0);
    if lines.is_empty() && n_override.is_none() && header.n.is_none() {
        return Err(
            ParseError::new(1, 1, "an ideal with no generators needs an explicit 'n ='").into(),
        );
    }
    let n = resolve_width(n_override, header.n, seen, 1)?;
    let mut gens = Vec::with_capacity(lines.len());
    for (line, lead, _, fs) in &lines {
        let (x, y, _) =
            assemble(fs, n, None).map_err(|e| located_range_error(e, fs, *line, *lead))?;
        gens.push(SfMonomial::new(n, x, y)?);
    }
    MonomialIdeal::new(n, gens)
}

/// Parses an extended-ideal file with optional `n =` and `k =` headers.
pub fn parse_ext_file(
    text: &str,
    n_override: Option<usize>,
    k_override: Option<usize>,
) -> Result<ExtIdeal> {
    let (header, lines) = lex_file(text, true)?;
    let seen_n = lines
        .iter()
        .map(|l| max_index(&l.3, &[Kind::X, Kind::Y]))
        .max()
        .unwrap_or(0);
    let seen_k = lines
        .iter()
        .map(|l| max_index(&l.3, &[Kind::Z]))
        .max()
        .unwrap_or(0);
    let n = resolve_width(n_override, header.n, seen_n, 1)?;
    let k = k_override.or(header.k.map(|(v, _)| v)).unwrap_or(seen_k);
    if k > MAX_N {
        return Err(Error::PlaceholderOutOfRange { z: k, k: MAX_N });
    }
    let mut gens = Vec::with_capacity(lines.len());
    for (line, lead, _, fs) in &lines {
        let (x, y, z) =
            assemble(fs, n, Some(k)).map_err(|e| located_range_error(e, fs, *line, *lead))?;
        gens.push(ExtMonomial::new(SfMonomial::new(n, x, y)?, z, k)?);
    }
    ExtIdeal::new(n, k, gens)
}

/// Parses one binary word, e.g. `101`; surrounding whitespace and single
/// spaces between bits are ignored.
fn parse_word(body: &str, line: usize, lead: usize) -> Result<(usize, u64)> {
    let mut bits = 0u64;
    let mut len = 0usize;
    for (i, c) in body.chars().enumerate() {
        match c {
            '0' | '1' => {
                if len == MAX_N {
                    return Err(ParseError::new(
                        line,
                        lead + i + 1,
                        format!("word longer than {MAX_N}"),
                    )
                    .into());
                }
                if c == '1' {
                    bits |= 1 << len;
                }
                len += 1;
            }
            c if c.is_whitespace() => {}
            c => {
                return Err(ParseError::new(
                    line,
                    lead + i + 1,
                    format!("expected '0' or '1', found '{c}'"),
                )
                .into())
            }
        }
    }
    Ok((len, bits))
}

/// Parses a code file.
pub fn parse_code_file(text: &str, n_override: Option<usize>) -> Result<NeuralCode> {
    let mut header_n = None;
    let mut words: Vec<(usize, usize, usize, u64)> = Vec::new();
    for (line, lead, body) in significant_lines(text) {
        if let Some(v) = header_value(body, "n", line, lead)? {
            if !words.is_empty() || header_n.is_some() {
                return Err(ParseError::new(
                    line,
                    lead + 1,
                    "'n =' must precede all codewords and appear once",
                )
                .into());
            }
            header_n = Some((v, line));
            continue;
        }
        let (len, bits) = parse_word(body, line, lead)?;
        words.push((line, lead, len, bits));
    }
    let seen = words.first().map(|w| w.2).unwrap_or(0);
    if words.is_empty() && n_override.is_none() && header_n.is_none() {
        return Err(ParseError::new(1, 1, "a code with no words needs an explicit 'n ='").into());
    }
    let n = resolve_width(n_override, header_n, seen, 1)?;
    for &(line, lead, len, _) in &words {
        if len != n {
            return Err(ParseError::new(
                line,
                lead + 1,
                format!("word has {len} bits, expected {n}"),
            )
            .into());
        }
    }
    NeuralCode::new(n, words.into_iter().map(|w| w.3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_forms() {
        let m = parse_monomial("x1*y2", 3).unwrap();
        assert_eq!(m, SfMonomial::from_indices(3, &[1], &[2]).unwrap());
        assert!(parse_monomial("1", 3).unwrap().is_one());
        let m = parse_monomial("x3 y1 x2", 4).unwrap();
        assert_eq!(m, SfMonomial::from_indices(4, &[2, 3], &[1]).unwrap());
        assert_eq!(parse_monomial("x2(1-x1)", 2).unwrap().to_string(), "x2*y1");
        assert_eq!(parse_monomial("x1x2y3", 3).unwrap().to_string(), "x1*x2*y3");
        assert_eq!(
            parse_monomial(" x2 * ( 1 - x1 ) ", 2).unwrap().to_string(),
            "x2*y1"
        );
    }

    #[test]
    fn monomial_errors_carry_position() {
        let Err(Error::Parse(e)) = parse_monomial("x1*q2", 3) else {
            panic!()
        };
        assert_eq!((e.line, e.column), (1, 4));
        let Err(Error::Parse(e)) = parse_monomial("x1**x2", 3) else {
            panic!()
        };
        assert_eq!(e.column, 4);
        let Err(Error::Parse(e)) = parse_monomial("x0", 3) else {
            panic!()
        };
        assert_eq!(e.column, 2);
        assert!(matches!(parse_monomial("", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_monomial("x1*", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_monomial("1*x1", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_monomial("z1", 3), Err(Error::Parse(_))));
        assert_eq!(
            parse_monomial("x4", 3).unwrap_err(),
            Error::IndexOutOfRange { index: 4, n: 3 }
        );
    }

    #[test]
    fn inline_ideals() {
        let a = parse_ideal("x1*y2, x3*y1", None).unwrap();
        assert_eq!(a.n(), 3);
        assert_eq!(a.to_string(), "(x1*y2, x3*y1)");
        let b = parse_ideal(&a.to_string(), None).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_ideal("(1-x1)", None).unwrap().to_string(), "(y1)");
        assert_eq!(
            parse_ideal("(1-x1)*x2, x1", None).unwrap().to_string(),
            "(x2*y1, x1)"
        );
        assert!(parse_ideal("()", Some(2)).unwrap().is_empty());
        assert_eq!(parse_ideal("x1", Some(5)).unwrap().n(), 5);
        let Err(Error::Parse(e)) = parse_ideal("x1, x2*q", None) else {
            panic!()
        };
        assert_eq!(e.column, 8);
    }

    #[test]
    fn ideal_files() {
        let src = "# worked example\nn = 6\n\nx1*x4*x5\nx2 x3 y1  # trailing\ny2*y6\n";
        let a = parse_ideal_file(src, None).unwrap();
        assert_eq!(a.n(), 6);
        assert_eq!(a.len(), 3);
        assert_eq!(parse_ideal_file("x1\nx3*y2\n", None).unwrap().n(), 3);
        assert_eq!(parse_ideal_file("n = 2\nx1\n", Some(7)).unwrap().n(), 7);

        let Err(Error::Parse(e)) = parse_ideal_file("n = 2\nx1\n  x3\n", None) else {
            panic!()
        };
        assert_eq!((e.line, e.column), (3, 3));
        let Err(Error::Parse(e)) = parse_ideal_file("x1\nn = 3\n", None) else {
            panic!()
        };
        assert_eq!(e.line, 2);
        let Err(Error::Parse(e)) = parse_ideal_file("x1\n x2*y%\n", None) else {
            panic!()
        };
        assert_eq!((e.line, e.column), (2, 6));
        assert!(parse_ideal_file("# nothing\n", None).is_err());
        assert!(parse_ideal_file("n = 3\n", None).unwrap().is_empty());
    }

    #[test]
    fn ext_files() {
        let g = parse_ext_file("x1*z1\ny1 z2\n", None, None).unwrap();
        assert_eq!((g.n(), g.k()), (1, 2));
        assert_eq!(g.to_string(), "(x1*z1, y1*z2)");
        let Err(Error::Parse(e)) = parse_ext_file("k = 1\nx1*z1\ny1*z2\n", None, None) else {
            panic!()
        };
        assert_eq!((e.line, e.column), (3, 4));
        let g = parse_ext_file("z1\n", None, None).unwrap();
        assert_eq!((g.n(), g.k()), (1, 1));
    }

    #[test]
    fn code_files() {
        let c = parse_code_file("# two neurons\n00\n10\n", None).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.len(), 2);
        assert!(c.contains_bits(0b01));
        let Err(Error::Parse(e)) = parse_code_file("00\n101\n", None) else {
            panic!()
        };
        assert_eq!(e.line, 2);
        let Err(Error::Parse(e)) = parse_code_file("0a\n", None) else {
            panic!()
        };
        assert_eq!(e.column, 2);
        assert!(parse_code_file("n = 3\n", None).unwrap().is_empty());
        assert_eq!(parse_code_file("1 0 1\n", None).unwrap().n(), 3);
    }

    #[test]
    fn repeated_factors_collapse() {
        assert_eq!(parse_monomial("x1*x1*y2", 2).unwrap().to_string(), "x1*y2");
    }
}
