//! Building domain objects from parsed sections.
//!
//! Parsing checks shapes and references only. Algebraic laws (`d² = 0`, the
//! A∞ relation, chain-map conditions) are left to the checks.

use std::collections::HashMap;
use std::sync::Arc;

use super::syntax::{parse_sections, render_sections, Line, Section, Tok};
use super::ParseError;
use crate::ainf::{arity_cap_from_env, AInfCategory, ExtendedMap, HomCollection, MixedExtendedMap};
use crate::cobordism::CobordismDatum;
use crate::cone_calc::MorseIndexProfile;
use crate::f2::{BitMatrix, BitVec, ChainComplex};
use crate::k_theory::{k0_from_triangles, GroupPresentation, K0Presentation};
use crate::modules::{yoneda_module, AInfModule, ModuleMorphism};

pub const MAX_DIM: usize = 512;
pub const MAX_HOM_DIM: usize = 64;
pub const MAX_OBJECTS: usize = 16;
pub const MAX_ARITY_CAP: usize = 8;
pub const MAX_TABLE: usize = 1 << 16;
pub const MAX_SNAKE_L: usize = 15;

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Item {
    /// Raw differential; may fail `d² = 0`.
    Complex(BitMatrix),
    Snake { base: String, l: usize, d: BitMatrix },
    ChainMap { from: String, to: String, f: BitMatrix },
    Category(Arc<AInfCategory>),
    Functor { from: String, to: String, map: ExtendedMap },
    Module { over: String, module: AInfModule },
    Morphism { from: String, to: String, morphism: ModuleMorphism },
    /// Strict pieces `(X_i, u_i : X_i → Y_i)`.
    Decomp(Vec<(String, BitMatrix)>),
    /// Summands `(decomposition, source complex, φ)`.
    Ts(Vec<(String, String, BitMatrix)>),
    Datum(CobordismDatum),
    Presentation(GroupPresentation),
    K0(K0Presentation),
    Profile(MorseIndexProfile),
}

/// A parsed file: sections in input order and the object each defines.
#[derive(Clone, Debug)]
pub struct Document {
    pub sections: Vec<Section>,
    pub names: Vec<String>,
    items: HashMap<String, Item>,
}

impl Document {
    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.get(name)
    }

    /// `(name, item)` in input order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &Item)> {
        self.names.iter().map(move |n| (n.as_str(), &self.items[n]))
    }

    pub fn complex_matrix(&self, name: &str) -> Option<&BitMatrix> {
        match self.items.get(name)? {
            Item::Complex(d) | Item::Snake { d, .. } => Some(d),
            _ => None,
        }
    }

    /// The named complex, or `None` if missing or `d² ≠ 0`.
    pub fn complex(&self, name: &str) -> Option<ChainComplex> {
        ChainComplex::new(self.complex_matrix(name)?.clone()).ok()
    }

    /// Canonical text.
    pub fn canonical(&self) -> String {
        render_sections(&self.sections)
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    parse_with_cap(text, arity_cap_from_env())
}

/// Accepts arbitrary bytes; invalid UTF-8 is a located error.
pub fn parse_bytes(bytes: &[u8], cap: usize) -> Result<Document, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(t) => parse_with_cap(t, cap),
        Err(e) => {
            let before = &bytes[..e.valid_up_to()];
            let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
            let last = before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
            let column = String::from_utf8_lossy(&before[last..]).chars().count() + 1;
            Err(ParseError::Syntax { line, column, message: "invalid UTF-8".into() })
        }
    }
}

pub fn parse_with_cap(text: &str, default_cap: usize) -> Result<Document, ParseError> {
    let sections = parse_sections(text)?;
    let mut b = Builder { items: HashMap::new(), default_cap: default_cap.clamp(1, MAX_ARITY_CAP) };
    let mut names = Vec::with_capacity(sections.len());
    for s in &sections {
        let name = match (&s.name, s.kind.as_str()) {
            (Some(n), _) => n.clone(),
            (None, "snake") => format!("snake_{}_{}", s.key("base").unwrap_or("?"), s.key("l").unwrap_or("?")),
            (None, _) => return Err(s.header.err(0, format!("{} section needs a name", s.kind))),
        };
        if names.contains(&name) {
            return Err(s.header.err(1, format!("duplicate name {name}")));
        }
        names.push(name);
    }
    // referenced kinds are built before the kinds that use them
    const LEVELS: &[&[&str]] = &[
        &["complex", "presentation", "profile", "k0"],
        &["snake"],
        &["chainmap", "decomp", "category"],
        &["ts", "functor", "module", "datum"],
        &["morphism"],
    ];
    for level in LEVELS {
        for (s, name) in sections.iter().zip(&names) {
            if level.contains(&s.kind.as_str()) {
                let item = b.build(s)?;
                b.items.insert(name.clone(), item);
            }
        }
    }
    Ok(Document { sections, names, items: b.items })
}

struct Builder {
    items: HashMap<String, Item>,
    default_cap: usize,
}

fn dim_err(line: &Line, msg: impl Into<String>) -> ParseError {
    ParseError::Dimension { line: line.no, message: msg.into() }
}

fn number(line: &Line, idx: usize, max: usize) -> Result<usize, ParseError> {
    let w = line.tokens.get(idx).and_then(|t| t.word()).ok_or_else(|| line.err(idx, "expected a number"))?;
    let n: usize = w.parse().map_err(|_| line.err(idx, format!("expected a number, found {w:?}")))?;
    if n > max {
        return Err(dim_err(line, format!("{n} exceeds the limit {max}")));
    }
    Ok(n)
}

fn key_number(s: &Section, key: &str, max: usize) -> Result<usize, ParseError> {
    let v = s.key(key).ok_or_else(|| s.header.err(0, format!("missing key {key}")))?;
    let n: usize = v.parse().map_err(|_| s.header.err(0, format!("key {key} expects a number, found {v:?}")))?;
    if n > max {
        return Err(dim_err(&s.header, format!("{key} {n} exceeds the limit {max}")));
    }
    Ok(n)
}

fn bits(line: &Line, idx: usize, len: usize) -> Result<BitVec, ParseError> {
    let w = line.tokens.get(idx).and_then(|t| t.word()).ok_or_else(|| line.err(idx, "expected a bit string"))?;
    let v = BitVec::parse(w).ok_or_else(|| line.err(idx, format!("{w:?} is not a bit string")))?;
    if v.len() != len {
        return Err(line.err(idx, format!("bit string has length {}, expected {len}", v.len())));
    }
    Ok(v)
}

fn expect_len(line: &Line, n: usize) -> Result<(), ParseError> {
    if line.tokens.len() != n {
        return Err(line.err(n.min(line.tokens.len()), format!("expected {n} tokens, found {}", line.tokens.len())));
    }
    Ok(())
}

fn words(line: &Line, from: usize) -> Result<Vec<String>, ParseError> {
    line.tokens[from..]
        .iter()
        .enumerate()
        .map(|(i, t)| t.word().map(str::to_string).ok_or_else(|| line.err(from + i, "expected a word")))
        .collect()
}

fn list(s: &Section, key: &str) -> Vec<String> {
    s.key(key).map(|v| v.split(',').filter(|x| !x.is_empty()).map(str::to_string).collect()).unwrap_or_default()
}

/// `kw n_1 … n_p (objects) (basis) -> bits`, the output length decided by
/// the caller from the parsed prefix and objects.
struct TableLine {
    prefix: Vec<usize>,
    objects: Vec<String>,
    basis: Vec<usize>,
    out_idx: usize,
}

fn table_line(line: &Line, prefix: usize) -> Result<TableLine, ParseError> {
    let mut i = 1;
    let mut ints = Vec::new();
    for _ in 0..prefix {
        ints.push(number(line, i, MAX_DIM)?);
        i += 1;
    }
    let group = |i: &mut usize| -> Result<Vec<String>, ParseError> {
        if line.tokens.get(*i).map(|t| &t.tok) != Some(&Tok::Open) {
            return Err(line.err(*i, "expected '('"));
        }
        *i += 1;
        let mut out = Vec::new();
        loop {
            match line.tokens.get(*i).map(|t| &t.tok) {
                Some(Tok::Close) => {
                    *i += 1;
                    return Ok(out);
                }
                Some(Tok::Word(w)) => {
                    if out.len() > MAX_ARITY_CAP + 1 {
                        return Err(line.err(*i, "tuple too long"));
                    }
                    out.push(w.clone());
                    *i += 1;
                }
                _ => return Err(line.err(*i, "expected ')'")),
            }
        }
    };
    let objects = group(&mut i)?;
    let basis_words = group(&mut i)?;
    let mut basis = Vec::with_capacity(basis_words.len());
    for w in &basis_words {
        basis.push(w.parse().map_err(|_| line.err(i - 1, format!("basis index {w:?} is not a number")))?);
    }
    if line.tokens.get(i).map(|t| &t.tok) != Some(&Tok::Arrow) {
        return Err(line.err(i, "expected '->'"));
    }
    expect_len(line, i + 2)?;
    Ok(TableLine { prefix: ints, objects, basis, out_idx: i + 1 })
}

fn object_indices(line: &Line, names: &[String], objs: &[String]) -> Result<Vec<usize>, ParseError> {
    objs.iter()
        .map(|o| names.iter().position(|n| n == o).ok_or_else(|| line.err(0, format!("unknown object {o}"))))
        .collect()
}

fn check_table_size(line: &Line, in_dims: &[usize]) -> Result<(), ParseError> {
    let mut size: usize = 1;
    for &d in in_dims {
        size = size.saturating_mul(d);
    }
    if size > MAX_TABLE {
        return Err(dim_err(line, format!("table with {size} entries exceeds the limit {MAX_TABLE}")));
    }
    Ok(())
}

fn no_lines(s: &Section) -> Result<(), ParseError> {
    match s.lines.first() {
        Some(l) => Err(l.err(0, format!("{} section takes no data lines here", s.kind))),
        None => Ok(()),
    }
}

fn unknown_keys(s: &Section, allowed: &[&str]) -> Result<(), ParseError> {
    match s.keys.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => Err(s.header.err(0, format!("unknown key {k} for {}", s.kind))),
        None => Ok(()),
    }
}

/// `count` lines `kw <bits of len>`, or none for the zero matrix. Each line
/// is the image of one source basis vector.
fn image_lines<'a>(
    lines: impl Iterator<Item = &'a Line>,
    kw: &str,
    count: usize,
    len: usize,
    at: &Line,
) -> Result<BitMatrix, ParseError> {
    let mut cols = Vec::new();
    for l in lines {
        if l.keyword() != kw {
            return Err(l.err(0, format!("expected `{kw}`")));
        }
        expect_len(l, 2)?;
        cols.push(bits(l, 1, len)?);
    }
    if cols.is_empty() {
        return Ok(BitMatrix::zeros(len, count));
    }
    if cols.len() != count {
        return Err(dim_err(at, format!("{} `{kw}` lines, expected {count}", cols.len())));
    }
    Ok(BitMatrix::from_columns(&cols, len))
}

impl Builder {
    fn complex_dim(&self, s: &Section, name: &str) -> Result<usize, ParseError> {
        match self.items.get(name) {
            Some(Item::Complex(d)) | Some(Item::Snake { d, .. }) => Ok(d.rows()),
            _ => Err(s.header.err(0, format!("unknown complex {name}"))),
        }
    }

    fn category(&self, s: &Section, name: &str) -> Result<Arc<AInfCategory>, ParseError> {
        match self.items.get(name) {
            Some(Item::Category(a)) => Ok(a.clone()),
            _ => Err(s.header.err(0, format!("unknown category {name}"))),
        }
    }

    fn key<'a>(&self, s: &'a Section, k: &str) -> Result<&'a str, ParseError> {
        s.key(k).ok_or_else(|| s.header.err(0, format!("missing key {k}")))
    }

    fn build(&self, s: &Section) -> Result<Item, ParseError> {
        match s.kind.as_str() {
            "complex" => {
                unknown_keys(s, &["dim"])?;
                let n = key_number(s, "dim", MAX_DIM)?;
                Ok(Item::Complex(image_lines(s.lines.iter(), "d", n, n, &s.header)?))
            }
            "snake" => {
                unknown_keys(s, &["base", "l"])?;
                no_lines(s)?;
                let base = self.key(s, "base")?.to_string();
                let l = key_number(s, "l", MAX_SNAKE_L)?;
                if l < 3 || l % 2 == 0 {
                    return Err(dim_err(&s.header, format!("snake length {l} must be odd and at least 3")));
                }
                let n = self.complex_dim(s, &base)?;
                if n * l > MAX_DIM {
                    return Err(dim_err(&s.header, "snake complex too large"));
                }
                let (Some(Item::Complex(d)) | Some(Item::Snake { d, .. })) = self.items.get(&base) else { unreachable!() };
                let d = crate::cobordism::snake_matrix(d, l);
                Ok(Item::Snake { base, l, d })
            }
            "chainmap" => {
                unknown_keys(s, &["from", "to"])?;
                let (from, to) = (self.key(s, "from")?.to_string(), self.key(s, "to")?.to_string());
                let (m, n) = (self.complex_dim(s, &from)?, self.complex_dim(s, &to)?);
                let f = image_lines(s.lines.iter(), "f", m, n, &s.header)?;
                Ok(Item::ChainMap { from, to, f })
            }
            "decomp" => self.decomp(s),
            "ts" => self.ts(s),
            "category" => self.category_section(s),
            "functor" => self.functor(s),
            "module" => self.module(s),
            "morphism" => self.morphism(s),
            "datum" => self.datum(s),
            "presentation" => {
                unknown_keys(s, &["generators"])?;
                let gens = list(s, "generators");
                if gens.len() > MAX_DIM {
                    return Err(dim_err(&s.header, "too many generators"));
                }
                let mut rels = Vec::new();
                for l in &s.lines {
                    if l.keyword() != "rel" {
                        return Err(l.err(0, "expected `rel`"));
                    }
                    expect_len(l, 2)?;
                    rels.push(bits(l, 1, gens.len())?);
                }
                GroupPresentation::new(gens, rels).map(Item::Presentation).map_err(|e| dim_err(&s.header, e.to_string()))
            }
            "k0" => {
                unknown_keys(s, &["objects"])?;
                let objs = list(s, "objects");
                if objs.len() > MAX_DIM {
                    return Err(dim_err(&s.header, "too many objects"));
                }
                let mut tris = Vec::new();
                for l in &s.lines {
                    if l.keyword() != "triangle" {
                        return Err(l.err(0, "expected `triangle`"));
                    }
                    expect_len(l, 4)?;
                    let w = words(l, 1)?;
                    tris.push([w[0].clone(), w[1].clone(), w[2].clone()]);
                }
                k0_from_triangles(&objs, &tris).map(Item::K0).map_err(|e| dim_err(&s.header, e.to_string()))
            }
            "profile" => {
                unknown_keys(s, &["entries", "exit"])?;
                no_lines(s)?;
                let entries = self.key(s, "entries")?;
                if entries.len() > 64 || !entries.chars().all(|c| c == '0' || c == '1') {
                    return Err(s.header.err(0, "entries must be a string of at most 64 bits"));
                }
                let exit = key_number(s, "exit", 1)? as u8;
                let e = entries.bytes().map(|b| b - b'0').collect();
                MorseIndexProfile::new(e, exit)
                    .map(Item::Profile)
                    .ok_or_else(|| dim_err(&s.header, "a profile needs at least one entry"))
            }
            k => Err(s.header.err(0, format!("unknown section kind {k}"))),
        }
    }

    fn decomp(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &[])?;
        let mut pieces: Vec<(String, BitMatrix)> = Vec::new();
        let mut total = 0;
        let mut i = 0;
        while i < s.lines.len() {
            let l = &s.lines[i];
            if l.keyword() != "piece" {
                return Err(l.err(0, "expected `piece`"));
            }
            expect_len(l, 2)?;
            let x = l.tokens[1].word().ok_or_else(|| l.err(1, "expected a name"))?.to_string();
            let n = self.complex_dim(s, &x).map_err(|_| l.err(1, format!("unknown complex {x}")))?;
            let mut j = i + 1;
            while j < s.lines.len() && s.lines[j].keyword() == "u" {
                j += 1;
            }
            let u = image_lines(s.lines[i + 1..j].iter(), "u", n, total, l)?;
            total += n;
            if total > MAX_DIM || pieces.len() >= 64 {
                return Err(dim_err(l, "decomposition too large"));
            }
            pieces.push((x, u));
            i = j;
        }
        if pieces.is_empty() {
            return Err(dim_err(&s.header, "a decomposition needs at least one piece"));
        }
        Ok(Item::Decomp(pieces))
    }

    fn ts(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &[])?;
        let mut out = Vec::new();
        let mut i = 0;
        while i < s.lines.len() {
            let l = &s.lines[i];
            if l.keyword() != "summand" {
                return Err(l.err(0, "expected `summand`"));
            }
            expect_len(l, 4)?;
            let w = words(l, 1)?;
            if w[1] != "from" {
                return Err(l.err(2, "expected `from`"));
            }
            let top = match self.items.get(&w[0]) {
                Some(Item::Decomp(p)) => p.iter().map(|(x, _)| self.complex_dim(s, x)).sum::<Result<usize, _>>()?,
                _ => return Err(l.err(1, format!("unknown decomposition {}", w[0]))),
            };
            let n = self.complex_dim(s, &w[2]).map_err(|_| l.err(3, format!("unknown complex {}", w[2])))?;
            let mut j = i + 1;
            while j < s.lines.len() && s.lines[j].keyword() == "f" {
                j += 1;
            }
            let f = image_lines(s.lines[i + 1..j].iter(), "f", n, top, l)?;
            out.push((w[0].clone(), w[2].clone(), f));
            i = j;
        }
        Ok(Item::Ts(out))
    }

    fn cap(&self, s: &Section) -> Result<usize, ParseError> {
        match s.key("cap") {
            Some(_) => {
                let c = key_number(s, "cap", MAX_ARITY_CAP)?;
                if c == 0 {
                    return Err(dim_err(&s.header, "arity cap must be positive"));
                }
                Ok(c)
            }
            None => Ok(self.default_cap),
        }
    }

    fn category_section(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &["cap", "dg"])?;
        let cap = self.cap(s)?;
        if s.key("dg").is_some() {
            no_lines(s)?;
            let names = list(s, "dg");
            if names.is_empty() || names.len() > MAX_OBJECTS {
                return Err(dim_err(&s.header, "dg category needs 1 to 16 complexes"));
            }
            let mut cs = Vec::new();
            for n in &names {
                self.complex_dim(s, n)?;
                let c = self
                    .items
                    .get(n)
                    .and_then(|i| match i {
                        Item::Complex(d) | Item::Snake { d, .. } => ChainComplex::new(d.clone()).ok(),
                        _ => None,
                    })
                    .ok_or_else(|| dim_err(&s.header, format!("complex {n} has d² ≠ 0")))?;
                if c.dim() * c.dim() > MAX_HOM_DIM {
                    return Err(dim_err(&s.header, format!("complex {n} too large for hom spaces")));
                }
                cs.push(c);
            }
            let a = AInfCategory::dg_of_complexes(names, &cs, cap).map_err(|e| dim_err(&s.header, e.to_string()))?;
            return Ok(Item::Category(Arc::new(a)));
        }
        let first = s.lines.first().ok_or_else(|| dim_err(&s.header, "category needs an `objects` line"))?;
        if first.keyword() != "objects" {
            return Err(first.err(0, "the first line of a category is `objects`"));
        }
        let names = words(first, 1)?;
        if names.is_empty() || names.len() > MAX_OBJECTS {
            return Err(dim_err(first, "a category needs 1 to 16 objects"));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(first.err(i + 1, format!("duplicate object {n}")));
            }
        }
        let k = names.len();
        let mut dims = vec![vec![0; k]; k];
        let mut seen = vec![vec![false; k]; k];
        for l in &s.lines[1..] {
            if l.keyword() == "hom" {
                expect_len(l, 4)?;
                let ij = object_indices(l, &names, &words(l, 1)?[..2])?;
                if seen[ij[0]][ij[1]] {
                    return Err(l.err(1, "duplicate hom line"));
                }
                seen[ij[0]][ij[1]] = true;
                dims[ij[0]][ij[1]] = number(l, 3, MAX_HOM_DIM)?;
            }
        }
        let hom = HomCollection::new(names.clone(), dims).map_err(|e| dim_err(&s.header, e.to_string()))?;
        let mut mu = ExtendedMap::zero_endo(&hom, cap);
        let mut entries = std::collections::HashSet::new();
        for l in &s.lines[1..] {
            match l.keyword() {
                "hom" => {}
                "mu" => {
                    let t = table_line(l, 1)?;
                    let k = t.prefix[0];
                    if k == 0 || k > cap || t.objects.len() != k + 1 || t.basis.len() != k {
                        return Err(dim_err(l, format!("mu {k} needs {} objects and {k} basis indices within cap {cap}", k + 1)));
                    }
                    let tuple = object_indices(l, &names, &t.objects)?;
                    let (in_dims, out) = mu.component_dims(&tuple);
                    check_table_size(l, &in_dims)?;
                    let v = bits(l, t.out_idx, out)?;
                    if !entries.insert((tuple.clone(), t.basis.clone())) {
                        return Err(l.err(0, "duplicate table entry"));
                    }
                    mu.set_entry(&tuple, &t.basis, v).map_err(|e| dim_err(l, e.to_string()))?;
                }
                _ => return Err(l.err(0, "expected `hom` or `mu`")),
            }
        }
        let a = AInfCategory::new(mu).map_err(|e| dim_err(&s.header, e.to_string()))?;
        Ok(Item::Category(Arc::new(a)))
    }

    fn functor(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &["from", "to"])?;
        let (from, to) = (self.key(s, "from")?.to_string(), self.key(s, "to")?.to_string());
        let (a, b) = (self.category(s, &from)?, self.category(s, &to)?);
        let mut index = vec![None; a.objects()];
        for l in &s.lines {
            if l.keyword() == "object" {
                expect_len(l, 4)?;
                if l.tokens[2].tok != Tok::Arrow {
                    return Err(l.err(2, "expected '->'"));
                }
                let x = l.tokens[1].word().and_then(|w| a.hom().index_of(w)).ok_or_else(|| l.err(1, "unknown source object"))?;
                let y = l.tokens[3].word().and_then(|w| b.hom().index_of(w)).ok_or_else(|| l.err(3, "unknown target object"))?;
                if index[x].replace(y).is_some() {
                    return Err(l.err(1, "object mapped twice"));
                }
            }
        }
        let index: Vec<usize> = index
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| dim_err(&s.header, format!("object {} is not mapped", a.name(i)))))
            .collect::<Result<_, _>>()?;
        let cap = a.arity_cap();
        let mut map = ExtendedMap::new(a.hom().clone(), b.hom().clone(), index, cap).map_err(|e| dim_err(&s.header, e.to_string()))?;
        let mut entries = std::collections::HashSet::new();
        for l in &s.lines {
            match l.keyword() {
                "object" => {}
                "map" => {
                    let t = table_line(l, 1)?;
                    let k = t.prefix[0];
                    if k == 0 || k > cap || t.objects.len() != k + 1 || t.basis.len() != k {
                        return Err(dim_err(l, format!("map {k} needs {} objects and {k} basis indices within cap {cap}", k + 1)));
                    }
                    let tuple = object_indices(l, a.hom().names(), &t.objects)?;
                    let (in_dims, out) = map.component_dims(&tuple);
                    check_table_size(l, &in_dims)?;
                    let v = bits(l, t.out_idx, out)?;
                    if !entries.insert((tuple.clone(), t.basis.clone())) {
                        return Err(l.err(0, "duplicate table entry"));
                    }
                    map.set_entry(&tuple, &t.basis, v).map_err(|e| dim_err(l, e.to_string()))?;
                }
                _ => return Err(l.err(0, "expected `object` or `map`")),
            }
        }
        Ok(Item::Functor { from, to, map })
    }

    /// Fills mixed tables from `kw p_1 … p_r k (objects) (basis) -> bits`
    /// lines; `select` maps the `r` leading numbers to an index into `maps`.
    fn mixed_entries<'l>(
        &self,
        lines: impl Iterator<Item = &'l Line>,
        kw: &str,
        prefix: usize,
        names: &[String],
        maps: &mut [MixedExtendedMap],
        select: impl Fn(&Line, &[usize]) -> Result<usize, ParseError>,
    ) -> Result<(), ParseError> {
        let mut entries = std::collections::HashSet::new();
        for l in lines {
            if l.keyword() != kw {
                return Err(l.err(0, format!("expected `{kw}`")));
            }
            let t = table_line(l, prefix + 1)?;
            let k = t.prefix[prefix];
            let map = &mut maps[select(l, &t.prefix[..prefix])?];
            let cap = map.arity_cap();
            if k == 0 || k > cap || t.objects.len() != k || t.basis.len() != k {
                return Err(dim_err(l, format!("{kw} of arity {k} needs {k} objects and {k} basis indices within cap {cap}")));
            }
            let tuple = object_indices(l, names, &t.objects)?;
            let (in_dims, out) = map.component_dims(&tuple);
            check_table_size(l, &in_dims)?;
            let v = bits(l, t.out_idx, out)?;
            if !entries.insert((t.prefix.clone(), tuple.clone(), t.basis.clone())) {
                return Err(l.err(0, "duplicate table entry"));
            }
            map.set_entry(&tuple, &t.basis, v).map_err(|e| dim_err(l, e.to_string()))?;
        }
        Ok(())
    }

    fn module(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &["over", "yoneda"])?;
        let over = self.key(s, "over")?.to_string();
        let a = self.category(s, &over)?;
        if let Some(y) = s.key("yoneda") {
            no_lines(s)?;
            let l = a.hom().index_of(y).ok_or_else(|| s.header.err(0, format!("unknown object {y}")))?;
            return Ok(Item::Module { over, module: yoneda_module(&a, l) });
        }
        let names = a.hom().names().to_vec();
        let mut dims = vec![0; a.objects()];
        let mut seen = vec![false; a.objects()];
        for l in s.lines.iter().filter(|l| l.keyword() == "space") {
            expect_len(l, 3)?;
            let x = object_indices(l, &names, &words(l, 1)?[..1])?[0];
            if std::mem::replace(&mut seen[x], true) {
                return Err(l.err(1, "duplicate space line"));
            }
            dims[x] = number(l, 2, MAX_HOM_DIM)?;
        }
        let action = MixedExtendedMap::zero(a.hom().clone(), dims.clone(), dims, a.arity_cap())
            .map_err(|e| dim_err(&s.header, e.to_string()))?;
        let mut maps = [action];
        let act = s.lines.iter().filter(|l| l.keyword() != "space");
        self.mixed_entries(act, "act", 0, &names, &mut maps, |_, _| Ok(0))?;
        let [action] = maps;
        let module = AInfModule::new(a, action).map_err(|e| dim_err(&s.header, e.to_string()))?;
        Ok(Item::Module { over, module })
    }

    fn morphism(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &["from", "to"])?;
        let (from, to) = (self.key(s, "from")?.to_string(), self.key(s, "to")?.to_string());
        let get = |n: &str| match self.items.get(n) {
            Some(Item::Module { module, .. }) => Ok(module.clone()),
            _ => Err(s.header.err(0, format!("unknown module {n}"))),
        };
        let (m, n) = (get(&from)?, get(&to)?);
        if m.base() != n.base() {
            return Err(dim_err(&s.header, "modules over different categories"));
        }
        let a = m.base().clone();
        let nu = MixedExtendedMap::zero(a.hom().clone(), m.dims().to_vec(), n.dims().to_vec(), a.arity_cap())
            .map_err(|e| dim_err(&s.header, e.to_string()))?;
        let mut maps = [nu];
        self.mixed_entries(s.lines.iter(), "map", 0, a.hom().names(), &mut maps, |_, _| Ok(0))?;
        let [nu] = maps;
        let morphism = ModuleMorphism::new(m, n, nu).map_err(|e| dim_err(&s.header, e.to_string()))?;
        Ok(Item::Morphism { from, to, morphism })
    }

    fn datum(&self, s: &Section) -> Result<Item, ParseError> {
        unknown_keys(s, &["over", "positive", "ends", "tests", "end"])?;
        let a = self.category(s, self.key(s, "over")?)?;
        let names = a.hom().names().to_vec();
        let obj = |n: &str| a.hom().index_of(n).ok_or_else(|| s.header.err(0, format!("unknown object {n}")));
        let positive = obj(self.key(s, "positive")?)?;
        let ends: Vec<usize> = list(s, "ends").iter().map(|n| obj(n)).collect::<Result<_, _>>()?;
        if ends.is_empty() || ends.len() > 32 {
            return Err(dim_err(&s.header, "a datum needs 1 to 32 negative ends"));
        }
        let tests: Vec<usize> = match s.key("tests") {
            Some(_) => list(s, "tests").iter().map(|n| obj(n)).collect::<Result<_, _>>()?,
            None => (0..a.objects()).collect(),
        };
        let with_end = match s.key("end") {
            None | Some("yes") => true,
            Some("no") => false,
            Some(v) => return Err(s.header.err(0, format!("key end expects yes or no, found {v:?}"))),
        };
        let n = a.objects();
        let partial = |j: usize| (0..n).map(|x| ends[..j].iter().map(|&e| a.dim(x, e)).sum::<usize>()).collect::<Vec<_>>();
        if partial(ends.len()).iter().any(|&d| d > MAX_DIM) {
            return Err(dim_err(&s.header, "iterated cone too large"));
        }
        let hom_dims = |l: usize| (0..n).map(|x| a.dim(x, l)).collect::<Vec<_>>();
        let mk = |input, output| MixedExtendedMap::zero(a.hom().clone(), input, output, a.arity_cap()).expect("sizes fit");
        let m = ends.len();
        // connecting maps φ_2..φ_m, then φ_V last
        let mut maps: Vec<MixedExtendedMap> = (1..m).map(|j| mk(hom_dims(ends[j]), partial(j))).collect();
        maps.push(mk(hom_dims(positive), partial(m)));
        let phi_lines = s.lines.iter().filter(|l| l.keyword() == "phi");
        self.mixed_entries(phi_lines, "phi", 1, &names, &mut maps, |l, p| {
            let j = p[0];
            if j < 2 || j > m {
                return Err(dim_err(l, format!("phi index {j} outside 2..={m}")));
            }
            Ok(j - 2)
        })?;
        let end_lines: Vec<&Line> = s.lines.iter().filter(|l| l.keyword() != "phi").collect();
        if !with_end && !end_lines.is_empty() {
            return Err(end_lines[0].err(0, "datum declared with `end no` has end lines"));
        }
        self.mixed_entries(end_lines.into_iter(), "end", 0, &names, &mut maps, |_, _| Ok(m - 1))?;
        let end = maps.pop().expect("φ_V slot");
        let connecting = maps;
        let datum = CobordismDatum::new(a.clone(), positive, ends, connecting, with_end.then_some(end), tests)
            .map_err(|e| dim_err(&s.header, e.to_string()))?;
        Ok(Item::Datum(datum))
    }
}
