//! Writing domain objects back as sections.

use super::syntax::{Line, Section};
use crate::ainf::{AInfCategory, ExtendedMap, MixedExtendedMap};
use crate::cobordism::CobordismDatum;
use crate::cone_calc::{ConeDecomposition, TSMorphism};
use crate::f2::{BitMatrix, ChainComplex};

fn section(words: &[&str], lines: Vec<Line>) -> Section {
    let header = Line::from_words(0, words);
    let rest = &words[1..];
    let (name, pairs) = if rest.len() % 2 == 1 { (Some(rest[0].to_string()), &rest[1..]) } else { (None, rest) };
    let keys = pairs.chunks(2).map(|p| (p[0].to_string(), p[1].to_string())).collect();
    Section { kind: words[0].to_string(), name, keys, header, lines }
}

fn image_lines(kw: &str, m: &BitMatrix) -> Vec<Line> {
    if m.rows() == 0 || m.is_zero() {
        return Vec::new();
    }
    m.columns().iter().map(|c| Line::from_words(0, &[kw, &c.to_bit_string()])).collect()
}

pub fn complex_section(name: &str, c: &ChainComplex) -> Section {
    let dim = c.dim().to_string();
    section(&["complex", name, "dim", &dim], image_lines("d", c.d()))
}

fn table_lines<'a>(
    kw: &str,
    prefix: &[String],
    names: &[String],
    components: impl Iterator<Item = (&'a Vec<usize>, &'a crate::ainf::Multilinear)>,
    arity_of: impl Fn(&[usize]) -> usize,
) -> Vec<Line> {
    let mut out = Vec::new();
    for (t, m) in components {
        let objs: Vec<&str> = t.iter().map(|&i| names[i].as_str()).collect();
        for (idx, v) in m.table().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let basis: Vec<String> = m.basis_of(idx).iter().map(|b| b.to_string()).collect();
            let text = format!(
                "{kw} {}{} ({}) ({}) -> {}",
                prefix.iter().map(|p| format!("{p} ")).collect::<String>(),
                arity_of(t),
                objs.join(" "),
                basis.join(" "),
                v.to_bit_string()
            );
            out.push(Line::from_words(0, &text.split(' ').collect::<Vec<_>>()));
        }
    }
    out
}

fn extended_lines(kw: &str, names: &[String], f: &ExtendedMap) -> Vec<Line> {
    table_lines(kw, &[], names, f.components(), |t| t.len() - 1)
}

fn mixed_lines(kw: &str, prefix: &[String], names: &[String], f: &MixedExtendedMap) -> Vec<Line> {
    table_lines(kw, prefix, names, f.components(), |t| t.len())
}

pub fn category_section(name: &str, a: &AInfCategory) -> Section {
    let names = a.hom().names().to_vec();
    let mut objects = vec!["objects"];
    objects.extend(names.iter().map(String::as_str));
    let mut lines = vec![Line::from_words(0, &objects)];
    for i in 0..a.objects() {
        for j in 0..a.objects() {
            if a.dim(i, j) > 0 {
                lines.push(Line::from_words(0, &["hom", &names[i], &names[j], &a.dim(i, j).to_string()]));
            }
        }
    }
    lines.extend(extended_lines("mu", &names, a.mu()));
    let cap = a.arity_cap().to_string();
    section(&["category", name, "cap", &cap], lines)
}

/// Sections for a datum over the category named `category`.
pub fn datum_section(name: &str, category: &str, v: &CobordismDatum) -> Section {
    let a = &v.category;
    let names = a.hom().names().to_vec();
    let ends: Vec<&str> = v.negative_ends.iter().map(|&e| a.name(e)).collect();
    let tests: Vec<&str> = v.test_objects.iter().map(|&e| a.name(e)).collect();
    let mut lines = Vec::new();
    for (j, phi) in v.connecting.iter().enumerate() {
        lines.extend(mixed_lines("phi", &[(j + 2).to_string()], &names, phi));
    }
    if let Some(e) = &v.end_comparison {
        lines.extend(mixed_lines("end", &[], &names, e));
    }
    let (ends, tests) = (ends.join(","), tests.join(","));
    let mut header = vec!["datum", name, "over", category, "positive", a.name(v.positive_end), "ends", &ends];
    if !tests.is_empty() {
        header.extend(["tests", &tests]);
    }
    if v.end_comparison.is_none() {
        header.extend(["end", "no"]);
    }
    section(&header, lines)
}

/// Names complexes, reusing a name for equal complexes.
#[derive(Default)]
pub struct ComplexNames {
    prefix: String,
    known: Vec<(ChainComplex, String)>,
}

impl ComplexNames {
    pub fn new(prefix: &str) -> Self {
        ComplexNames { prefix: prefix.to_string(), known: Vec::new() }
    }

    pub fn name(&mut self, c: &ChainComplex) -> String {
        if let Some((_, n)) = self.known.iter().find(|(k, _)| k == c) {
            return n.clone();
        }
        let n = format!("{}{}", self.prefix, self.known.len());
        self.known.push((c.clone(), n.clone()));
        n
    }

    pub fn sections(&self) -> Vec<Section> {
        self.known.iter().map(|(c, n)| complex_section(n, c)).collect()
    }
}

/// A strict decomposition as a `decomp` section. Non-strict input is
/// strictified first.
pub fn decomp_section(name: &str, eta: &ConeDecomposition, names: &mut ComplexNames) -> Section {
    let strict = if eta.is_strict() { eta.clone() } else { eta.strictify().expect("valid decomposition").0 };
    let mut lines = Vec::new();
    for t in strict.triangles() {
        lines.push(Line::from_words(0, &["piece", &names.name(t.x())]));
        lines.extend(image_lines("u", &t.u.f));
    }
    section(&["decomp", name], lines)
}

/// The TS morphism, its decompositions and all complexes it mentions.
pub fn ts_sections(name: &str, phi: &TSMorphism) -> Vec<Section> {
    let mut names = ComplexNames::new(&format!("{name}_c"));
    let mut decomps = Vec::new();
    let mut lines = Vec::new();
    for (i, s) in phi.summands().iter().enumerate() {
        let dname = format!("{name}_d{i}");
        let d = decomp_section(&dname, &s.decomposition, &mut names);
        decomps.push(d);
        let src = names.name(&s.phi.source);
        lines.push(Line::from_words(0, &["summand", &dname, "from", &src]));
        let f = if s.decomposition.is_strict() {
            s.phi.f.clone()
        } else {
            s.decomposition.strictify().expect("valid decomposition").1.f.mul(&s.phi.f)
        };
        lines.extend(image_lines("f", &f));
    }
    let mut out = names.sections();
    out.extend(decomps);
    out.push(section(&["ts", name], lines));
    out
}

pub fn render(sections: &[Section]) -> String {
    super::syntax::render_sections(sections)
}
