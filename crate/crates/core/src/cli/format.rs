//! The versioned text format for Hopf algebras, bundles and corepresentation lists.
//!
//! ```text
//! format hopf-galois 1
//! conductor 3
//! hopf k^Z/3
//!   labels dg0 dg1 dg2
//!   mult 0 0 0 "1"          # e_i e_j has coefficient s at e_k
//!   unit 0 "1"
//!   comult 0 0 0 "1"        # Δe_i has coefficient s at e_j ⊗ e_k
//!   counit 0 "1"
//!   antipode 0 0 "1"        # S(e_i) has coefficient s at e_j
//!   involution 0 0 "1"      # optional
//! end
//! bundle z3-regular over k^Z/3
//!   labels p0 p1 p2
//!   mult 0 0 0 "1"
//!   unit 0 "1"
//!   coaction 0 0 0 "1"      # F(b_i) has coefficient s at b_j ⊗ h_a
//! end
//! coreps irreps over k^Z/3
//!   corep chi1 1
//!     coeff 0 0 1 "z^1"     # u_ij has coefficient s at h_a
//!   end
//! end
//! ```
//!
//! Scalars are quoted and read in `Q(z_n)` for the declared conductor `n`
//! (default 1). `dim N` may replace `labels`. `#` starts a comment.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{Entry1, Entry2, Entry3};
use crate::bundle::{Bundle, BundleData};
use crate::error::{Error, Result};
use crate::exactlin::scalar::lcm_conductor;
use crate::exactlin::Scalar;
use crate::hopf::{Corep, HopfAlgebra, HopfData};

pub const FORMAT_HEADER: &str = "format hopf-galois 1";

/// A named list of corepresentations over one Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorepList {
    pub name: String,
    pub coreps: Vec<Corep>,
}

impl CorepList {
    pub fn hopf_name(&self) -> Option<&str> {
        self.coreps.first().map(|u| u.hopf().name())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Document {
    pub conductor: u32,
    pub hopfs: Vec<Arc<HopfAlgebra>>,
    pub bundles: Vec<Bundle>,
    pub coreps: Vec<(String, CorepList)>,
}

impl Document {
    pub fn hopf(&self, name: &str) -> Option<&Arc<HopfAlgebra>> {
        self.hopfs.iter().find(|h| h.name() == name)
    }

    /// The named bundle, or the only bundle when `name` is `None`.
    pub fn bundle(&self, name: Option<&str>) -> Result<&Bundle> {
        match name {
            Some(n) => self
                .bundles
                .iter()
                .find(|b| b.name() == n)
                .ok_or_else(|| Error::Malformed(format!("no bundle named {n:?}"))),
            None => match self.bundles.as_slice() {
                [b] => Ok(b),
                [] => Err(Error::Malformed("the file defines no bundle".into())),
                _ => Err(Error::Malformed(
                    "several bundles defined; pick one with --bundle".into(),
                )),
            },
        }
    }

    /// The first corepresentation list over the Hopf algebra named `hopf`.
    pub fn coreps_over(&self, hopf: &str) -> Option<&CorepList> {
        self.coreps.iter().find(|(over, _)| over == hopf).map(|(_, list)| list)
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
    quoted: bool,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(line_no: usize, line: &str) -> Result<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let bytes = line.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c == b'#' {
            break;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'"' {
            let start = i + 1;
            let end = line[start..]
                .find('"')
                .map(|k| start + k)
                .ok_or_else(|| perr(line_no, i + 1, "unterminated quoted scalar"))?;
            out.push(Token {
                text: &line[start..end],
                column: i + 1,
                quoted: true,
            });
            i = end + 1;
        } else {
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'#' && bytes[i] != b'"' {
                i += 1;
            }
            out.push(Token {
                text: &line[start..i],
                column: start + 1,
                quoted: false,
            });
        }
    }
    Ok(out)
}

struct Line<'a> {
    no: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn keyword(&self) -> &str {
        self.tokens[0].text
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.column + t.text.len())
    }

    fn expect_len(&self, n: usize, usage: &str) -> Result<()> {
        if self.tokens.len() != n {
            return Err(perr(self.no, self.tokens[0].column, format!("expected `{usage}`")));
        }
        Ok(())
    }

    fn index(&self, k: usize) -> Result<usize> {
        let t = &self.tokens[k];
        if t.quoted {
            return Err(perr(self.no, t.column, "index must not be quoted"));
        }
        t.text
            .parse()
            .map_err(|_| perr(self.no, t.column, format!("expected an index, found {:?}", t.text)))
    }

    fn scalar(&self, k: usize, conductor: u32) -> Result<Scalar> {
        let t = &self.tokens[k];
        if !t.quoted {
            return Err(perr(self.no, t.column, "scalars must be quoted"));
        }
        Scalar::parse(t.text, conductor).map_err(|e| perr(self.no, t.column, e.to_string()))
    }

    fn word(&self, k: usize) -> Result<&str> {
        let t = &self.tokens[k];
        if t.quoted {
            return Err(perr(self.no, t.column, "names must not be quoted"));
        }
        Ok(t.text)
    }
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    conductor: u32,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Option<&Line<'a>> {
        let l = self.lines.get(self.pos);
        self.pos += 1;
        l
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.no)
    }
}

/// Entry lines collected for one block, with shapes checked against the labels.
struct Block {
    labels: Option<Vec<String>>,
    e1: Vec<(String, Entry1)>,
    e2: Vec<(String, Entry2)>,
    e3: Vec<(String, Entry3)>,
}

impl Block {
    fn take1(&mut self, kw: &str) -> Vec<Entry1> {
        take(&mut self.e1, kw)
    }
    fn take2(&mut self, kw: &str) -> Vec<Entry2> {
        take(&mut self.e2, kw)
    }
    fn take3(&mut self, kw: &str) -> Vec<Entry3> {
        take(&mut self.e3, kw)
    }
}

fn take<T>(v: &mut Vec<(String, T)>, kw: &str) -> Vec<T> {
    let (hit, rest): (Vec<_>, Vec<_>) = std::mem::take(v).into_iter().partition(|(k, _)| k == kw);
    *v = rest;
    hit.into_iter().map(|(_, e)| e).collect()
}

fn index_error(l: &Line<'_>, kw: &str, idx: &[usize], dims: &[usize]) -> Result<()> {
    if idx.iter().zip(dims).any(|(i, d)| i >= d) {
        let list: Vec<String> = idx.iter().map(usize::to_string).collect();
        let dims: Vec<String> = dims.iter().map(usize::to_string).collect();
        return Err(perr(
            l.no,
            l.tokens[1].column,
            format!(
                "{kw} entry ({}) out of range for dims ({})",
                list.join(", "),
                dims.join(", ")
            ),
        ));
    }
    Ok(())
}

/// Reads a block body up to `end`; `arity` maps an entry keyword to its
/// index dimensions, or `None` if the keyword is not allowed here.
fn read_block(
    p: &mut Parser<'_>,
    header_line: usize,
    what: &str,
    arity: impl Fn(&str, usize) -> Option<Vec<usize>>,
) -> Result<Block> {
    let conductor = p.conductor;
    let mut block = Block {
        labels: None,
        e1: Vec::new(),
        e2: Vec::new(),
        e3: Vec::new(),
    };
    loop {
        let eof = p.last_line();
        let l = p
            .next()
            .ok_or_else(|| perr(eof, 1, format!("{what} opened on line {header_line} has no `end`")))?;
        match l.keyword() {
            "end" => {
                l.expect_len(1, "end")?;
                break;
            }
            "labels" => {
                if block.labels.is_some() {
                    return Err(perr(l.no, 1, "labels given twice"));
                }
                let labels = (1..l.tokens.len())
                    .map(|k| l.word(k).map(String::from))
                    .collect::<Result<Vec<_>>>()?;
                if labels.is_empty() {
                    return Err(perr(l.no, l.end_column(), "labels list is empty"));
                }
                block.labels = Some(labels);
            }
            "dim" => {
                l.expect_len(2, "dim N")?;
                if block.labels.is_some() {
                    return Err(perr(l.no, 1, "labels given twice"));
                }
                let n = l.index(1)?;
                block.labels = Some((0..n).map(|i| format!("e{i}")).collect());
            }
            kw => {
                let col = l.tokens[0].column;
                let n = block
                    .labels
                    .as_ref()
                    .ok_or_else(|| perr(l.no, col, "labels or dim must precede entries"))?
                    .len();
                let dims = arity(kw, n).ok_or_else(|| perr(l.no, col, format!("unknown keyword {kw:?} in {what}")))?;
                let k = dims.len();
                l.expect_len(k + 2, &format!("{kw}{} \"scalar\"", " i".repeat(k)))?;
                let idx = (1..=k).map(|t| l.index(t)).collect::<Result<Vec<_>>>()?;
                index_error(l, kw, &idx, &dims)?;
                let s = l.scalar(k + 1, conductor)?;
                match k {
                    1 => block.e1.push((kw.into(), (idx[0], s))),
                    2 => block.e2.push((kw.into(), (idx[0], idx[1], s))),
                    _ => block.e3.push((kw.into(), (idx[0], idx[1], idx[2], s))),
                }
            }
        }
    }
    if block.labels.is_none() {
        return Err(perr(header_line, 1, format!("{what} has no labels")));
    }
    Ok(block)
}

fn parse_hopf(p: &mut Parser<'_>, header: usize, name: String) -> Result<HopfAlgebra> {
    let mut b = read_block(p, header, &format!("hopf {name}"), |kw, n| match kw {
        "mult" | "comult" => Some(vec![n, n, n]),
        "unit" | "counit" => Some(vec![n]),
        "antipode" | "involution" => Some(vec![n, n]),
        _ => None,
    })?;
    let involution = b.take2("involution");
    let data = HopfData {
        name,
        labels: b.labels.take().unwrap(),
        mult: b.take3("mult"),
        unit: b.take1("unit"),
        comult: b.take3("comult"),
        counit: b.take1("counit"),
        antipode: b.take2("antipode"),
        involution: (!involution.is_empty()).then_some(involution),
    };
    HopfAlgebra::from_data(data).map_err(|e| perr(header, 1, e.to_string()))
}

fn parse_bundle(p: &mut Parser<'_>, header: usize, name: String, hopf: Arc<HopfAlgebra>) -> Result<Bundle> {
    let da = hopf.dim();
    let mut b = read_block(p, header, &format!("bundle {name}"), |kw, n| match kw {
        "mult" => Some(vec![n, n, n]),
        "unit" => Some(vec![n]),
        "coaction" => Some(vec![n, n, da]),
        _ => None,
    })?;
    let data = BundleData {
        name,
        labels: b.labels.take().unwrap(),
        mult: b.take3("mult"),
        unit: b.take1("unit"),
        coaction: b.take3("coaction"),
    };
    Bundle::from_data(hopf, data).map_err(|e| perr(header, 1, e.to_string()))
}

fn parse_coreps(p: &mut Parser<'_>, header: usize, name: String, hopf: Arc<HopfAlgebra>) -> Result<CorepList> {
    let conductor = p.conductor;
    let da = hopf.dim();
    let mut coreps = Vec::new();
    loop {
        let eof = p.last_line();
        let l = p
            .next()
            .ok_or_else(|| perr(eof, 1, format!("coreps {name} opened on line {header} has no `end`")))?;
        match l.keyword() {
            "end" => {
                l.expect_len(1, "end")?;
                break;
            }
            "corep" => {
                l.expect_len(3, "corep NAME DIM")?;
                let (cname, dim, at) = (l.word(1)?.to_string(), l.index(2)?, l.no);
                let mut coeffs = vec![vec![Scalar::zero(); da]; dim * dim];
                loop {
                    let eof = p.last_line();
                    let l = p
                        .next()
                        .ok_or_else(|| perr(eof, 1, format!("corep {cname} opened on line {at} has no `end`")))?;
                    match l.keyword() {
                        "end" => {
                            l.expect_len(1, "end")?;
                            break;
                        }
                        "coeff" => {
                            l.expect_len(5, "coeff i j a \"scalar\"")?;
                            let idx = [l.index(1)?, l.index(2)?, l.index(3)?];
                            index_error(l, "coeff", &idx, &[dim, dim, da])?;
                            let s = l.scalar(4, conductor)?;
                            coeffs[idx[0] * dim + idx[1]][idx[2]] += &s;
                        }
                        kw => return Err(perr(l.no, 1, format!("unknown keyword {kw:?} in corep {cname}"))),
                    }
                }
                coreps.push(Corep::new(hopf.clone(), cname, dim, coeffs).map_err(|e| perr(at, 1, e.to_string()))?);
            }
            kw => return Err(perr(l.no, 1, format!("unknown keyword {kw:?} in coreps {name}"))),
        }
    }
    Ok(CorepList { name, coreps })
}

/// Parses a document; Hopf algebras of `context` may be referenced by name.
pub fn parse_with(text: &str, context: Option<&Document>) -> Result<Document> {
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let tokens = tokenize(k + 1, raw)?;
        if !tokens.is_empty() {
            lines.push(Line { no: k + 1, tokens });
        }
    }
    let mut p = Parser {
        lines,
        pos: 0,
        conductor: 1,
    };
    let header = p.next().ok_or_else(|| perr(1, 1, "empty file"))?;
    let words: Vec<&str> = header.tokens.iter().map(|t| t.text).collect();
    if words != ["format", "hopf-galois", "1"] {
        return Err(perr(
            header.no,
            1,
            format!("expected `{FORMAT_HEADER}` as the first line"),
        ));
    }
    let mut doc = Document {
        conductor: 1,
        ..Document::default()
    };
    let resolve = |doc: &Document, l: &Line<'_>, k: usize| -> Result<Arc<HopfAlgebra>> {
        let name = l.word(k)?;
        doc.hopf(name)
            .or_else(|| context.and_then(|c| c.hopf(name)))
            .cloned()
            .ok_or_else(|| perr(l.no, l.tokens[k].column, format!("unresolved Hopf algebra {name:?}")))
    };
    let mut seen_object = false;
    while let Some(l) = p.next() {
        let no = l.no;
        match l.keyword() {
            "conductor" => {
                l.expect_len(2, "conductor N")?;
                if seen_object {
                    return Err(perr(no, 1, "conductor must precede every object"));
                }
                let n = l.index(1)?;
                if n == 0 || n > u32::MAX as usize {
                    return Err(perr(no, l.tokens[1].column, "conductor must be a positive integer"));
                }
                p.conductor = n as u32;
                doc.conductor = n as u32;
            }
            "hopf" => {
                l.expect_len(2, "hopf NAME")?;
                let name = l.word(1)?.to_string();
                if doc.hopf(&name).is_some() {
                    return Err(perr(
                        no,
                        l.tokens[1].column,
                        format!("Hopf algebra {name:?} defined twice"),
                    ));
                }
                seen_object = true;
                let h = parse_hopf(&mut p, no, name)?;
                doc.hopfs.push(Arc::new(h));
            }
            "bundle" | "coreps" => {
                let kw = l.keyword().to_string();
                l.expect_len(4, &format!("{kw} NAME over HOPF"))?;
                if l.word(2)? != "over" {
                    return Err(perr(no, l.tokens[2].column, "expected `over`"));
                }
                let name = l.word(1)?.to_string();
                let hopf = resolve(&doc, l, 3)?;
                seen_object = true;
                if kw == "bundle" {
                    if doc.bundles.iter().any(|b| b.name() == name) {
                        return Err(perr(no, 1, format!("bundle {name:?} defined twice")));
                    }
                    let b = parse_bundle(&mut p, no, name, hopf)?;
                    doc.bundles.push(b);
                } else {
                    let over = hopf.name().to_string();
                    let list = parse_coreps(&mut p, no, name, hopf)?;
                    doc.coreps.push((over, list));
                }
            }
            kw => return Err(perr(no, 1, format!("unknown top-level keyword {kw:?}"))),
        }
    }
    Ok(doc)
}

pub fn parse(text: &str) -> Result<Document> {
    parse_with(text, None)
}

fn scalars_conductor<'a>(scalars: impl Iterator<Item = &'a Scalar>) -> u32 {
    scalars.fold(1, |acc, s| lcm_conductor(acc, s.conductor()))
}

fn quote(s: &Scalar, conductor: u32) -> String {
    format!("\"{}\"", s.format_in(conductor))
}

/// Renders `doc`. The conductor line is the declared conductor widened to
/// cover every scalar present.
pub fn emit(doc: &Document) -> String {
    let hopf_data: Vec<HopfData> = doc.hopfs.iter().map(|h| h.to_data()).collect();
    let bundle_data: Vec<BundleData> = doc.bundles.iter().map(Bundle::to_data).collect();
    let mut all: Vec<&Scalar> = Vec::new();
    for d in &hopf_data {
        all.extend(d.mult.iter().map(|e| &e.3));
        all.extend(d.unit.iter().map(|e| &e.1));
        all.extend(d.comult.iter().map(|e| &e.3));
        all.extend(d.counit.iter().map(|e| &e.1));
        all.extend(d.antipode.iter().map(|e| &e.2));
        all.extend(d.involution.iter().flatten().map(|e| &e.2));
    }
    for d in &bundle_data {
        all.extend(d.mult.iter().map(|e| &e.3));
        all.extend(d.unit.iter().map(|e| &e.1));
        all.extend(d.coaction.iter().map(|e| &e.3));
    }
    for (_, list) in &doc.coreps {
        for u in &list.coreps {
            all.extend(u.coeffs().iter().flatten());
        }
    }
    let n = lcm_conductor(doc.conductor.max(1), scalars_conductor(all.into_iter()));

    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_HEADER}");
    if n != 1 {
        let _ = writeln!(out, "conductor {n}");
    }
    for d in &hopf_data {
        let _ = writeln!(out, "hopf {}", d.name);
        let _ = writeln!(out, "  labels {}", d.labels.join(" "));
        for (i, j, k, s) in &d.mult {
            let _ = writeln!(out, "  mult {i} {j} {k} {}", quote(s, n));
        }
        for (i, s) in &d.unit {
            let _ = writeln!(out, "  unit {i} {}", quote(s, n));
        }
        for (i, j, k, s) in &d.comult {
            let _ = writeln!(out, "  comult {i} {j} {k} {}", quote(s, n));
        }
        for (i, s) in &d.counit {
            let _ = writeln!(out, "  counit {i} {}", quote(s, n));
        }
        for (i, j, s) in &d.antipode {
            let _ = writeln!(out, "  antipode {i} {j} {}", quote(s, n));
        }
        for (i, j, s) in d.involution.iter().flatten() {
            let _ = writeln!(out, "  involution {i} {j} {}", quote(s, n));
        }
        out.push_str("end\n");
    }
    for (b, d) in doc.bundles.iter().zip(&bundle_data) {
        let _ = writeln!(out, "bundle {} over {}", d.name, b.hopf().name());
        let _ = writeln!(out, "  labels {}", d.labels.join(" "));
        for (i, j, k, s) in &d.mult {
            let _ = writeln!(out, "  mult {i} {j} {k} {}", quote(s, n));
        }
        for (i, s) in &d.unit {
            let _ = writeln!(out, "  unit {i} {}", quote(s, n));
        }
        for (i, j, a, s) in &d.coaction {
            let _ = writeln!(out, "  coaction {i} {j} {a} {}", quote(s, n));
        }
        out.push_str("end\n");
    }
    for (over, list) in &doc.coreps {
        let _ = writeln!(out, "coreps {} over {over}", list.name);
        for u in &list.coreps {
            let _ = writeln!(out, "  corep {} {}", u.name(), u.dim());
            for i in 0..u.dim() {
                for j in 0..u.dim() {
                    for (a, s) in u.coeff(i, j).iter().enumerate() {
                        if !s.is_zero() {
                            let _ = writeln!(out, "    coeff {i} {j} {a} {}", quote(s, n));
                        }
                    }
                }
            }
            out.push_str("  end\n");
        }
        out.push_str("end\n");
    }
    out
}
