//! Line-oriented section syntax and its canonical form.
//!
//! A file is a sequence of sections. A header line starts with a section
//! kind, optionally followed by a name and then `key value` pairs; every
//! following non-header line belongs to that section. `#` starts a comment.

use super::ParseError;

pub const KINDS: &[&str] = &[
    "category",
    "chainmap",
    "complex",
    "datum",
    "decomp",
    "functor",
    "k0",
    "module",
    "morphism",
    "presentation",
    "profile",
    "snake",
    "ts",
];

/// Data-line keywords whose lines are tables (sorted in canonical form);
/// all others keep their relative order.
const TABLE_KEYWORDS: &[&str] = &["mu", "hom", "map", "object", "act", "space", "phi", "end", "triangle"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Word(String),
    Open,
    Close,
    Arrow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    /// 1-based column in characters.
    pub col: usize,
}

impl Token {
    pub fn word(&self) -> Option<&str> {
        match &self.tok {
            Tok::Word(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    /// 1-based line number.
    pub no: usize,
    pub tokens: Vec<Token>,
}

impl Line {
    pub fn keyword(&self) -> &str {
        self.tokens.first().and_then(Token::word).unwrap_or("")
    }

    pub fn err(&self, idx: usize, msg: impl Into<String>) -> ParseError {
        let col = self.tokens.get(idx).or(self.tokens.last()).map_or(1, |t| t.col);
        ParseError::Syntax { line: self.no, column: col, message: msg.into() }
    }

    pub fn is_table(&self) -> bool {
        TABLE_KEYWORDS.contains(&self.keyword())
    }

    /// Single-spaced text, with no space inside parentheses.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let mut prev_open = true;
        for t in &self.tokens {
            let piece = match &t.tok {
                Tok::Word(w) => w.as_str(),
                Tok::Open => "(",
                Tok::Close => ")",
                Tok::Arrow => "->",
            };
            if !prev_open && t.tok != Tok::Close {
                s.push(' ');
            }
            s.push_str(piece);
            prev_open = t.tok == Tok::Open;
        }
        s
    }

    pub fn from_words(no: usize, words: &[&str]) -> Line {
        let mut text = words.join(" ");
        text.push('\n');
        lex_line(no, &text).expect("generated line lexes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub kind: String,
    pub name: Option<String>,
    pub keys: Vec<(String, String)>,
    pub header: Line,
    pub lines: Vec<Line>,
}

impl Section {
    pub fn key(&self, k: &str) -> Option<&str> {
        self.keys.iter().find(|(a, _)| a == k).map(|(_, v)| v.as_str())
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => format!("{}:{n}", self.kind),
            None => self.kind.clone(),
        }
    }

    /// Header, ordered lines in input order, then table lines sorted; table
    /// lines whose output (after `->`) is all zeros are dropped.
    pub fn render(&self) -> String {
        let mut out = self.header.render();
        out.push('\n');
        let mut table = Vec::new();
        for l in &self.lines {
            if l.is_table() {
                if !zero_output(l) {
                    table.push(l.render());
                }
            } else {
                out.push_str(&l.render());
                out.push('\n');
            }
        }
        table.sort();
        for t in table {
            out.push_str(&t);
            out.push('\n');
        }
        out
    }
}

fn zero_output(l: &Line) -> bool {
    match l.tokens.iter().position(|t| t.tok == Tok::Arrow) {
        Some(i) => l.tokens[i + 1..].iter().all(|t| t.word().is_some_and(|w| w.chars().all(|c| c == '0'))),
        None => false,
    }
}

fn lex_line(no: usize, text: &str) -> Result<Line, ParseError> {
    let body = match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    };
    let mut tokens = Vec::new();
    let mut word = String::new();
    let mut start = 0;
    let flush = |word: &mut String, start: usize, tokens: &mut Vec<Token>| {
        if !word.is_empty() {
            let tok = if word == "->" { Tok::Arrow } else { Tok::Word(std::mem::take(word)) };
            word.clear();
            tokens.push(Token { tok, col: start });
        }
    };
    for (i, c) in body.chars().enumerate() {
        let col = i + 1;
        match c {
            '(' | ')' => {
                flush(&mut word, start, &mut tokens);
                tokens.push(Token { tok: if c == '(' { Tok::Open } else { Tok::Close }, col });
            }
            c if c.is_whitespace() => flush(&mut word, start, &mut tokens),
            c if c.is_control() => {
                return Err(ParseError::Syntax { line: no, column: col, message: "control character".into() })
            }
            c => {
                if word.is_empty() {
                    start = col;
                }
                word.push(c);
            }
        }
    }
    flush(&mut word, start, &mut tokens);
    Ok(Line { no, tokens })
}

pub fn parse_sections(text: &str) -> Result<Vec<Section>, ParseError> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let line = lex_line(i + 1, raw)?;
        if line.tokens.is_empty() {
            continue;
        }
        let first = line.tokens[0].word().unwrap_or("");
        if KINDS.contains(&first) {
            sections.push(header(line)?);
        } else {
            match sections.last_mut() {
                Some(s) => s.lines.push(line),
                None => return Err(line.err(0, "data line before any section header")),
            }
        }
    }
    Ok(sections)
}

fn header(line: Line) -> Result<Section, ParseError> {
    let mut words = Vec::with_capacity(line.tokens.len());
    for (i, t) in line.tokens.iter().enumerate() {
        match t.word() {
            Some(w) => words.push(w.to_string()),
            None => return Err(line.err(i, "unexpected symbol in section header")),
        }
    }
    let kind = words[0].clone();
    let rest = &words[1..];
    let (name, pairs) = if rest.len() % 2 == 1 { (Some(rest[0].clone()), &rest[1..]) } else { (None, rest) };
    let mut keys: Vec<(String, String)> = Vec::new();
    for (j, p) in pairs.chunks(2).enumerate() {
        if keys.iter().any(|(k, _)| *k == p[0]) {
            let idx = 1 + usize::from(name.is_some()) + 2 * j;
            return Err(line.err(idx, format!("duplicate key {}", p[0])));
        }
        keys.push((p[0].clone(), p[1].clone()));
    }
    Ok(Section { kind, name, keys, header: line, lines: Vec::new() })
}

/// Sections sorted by `(kind, name)`, each rendered canonically.
pub fn render_sections(sections: &[Section]) -> String {
    let mut order: Vec<&Section> = sections.iter().collect();
    order.sort_by(|a, b| (&a.kind, &a.name).cmp(&(&b.kind, &b.name)));
    order.iter().map(|s| s.render()).collect()
}
