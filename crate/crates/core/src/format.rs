//! The line-oriented algebra file format. Two flavors share a header:
//! quiver presentations ([quiver]/[relations]) and raw structure constants
//! ([dim]/[unit]/[table]). `#` starts a comment; unknown sections and keys
//! are rejected.

use crate::algebra::{algebra_from_quiver, Algebra, Arrow, Elem, QuiverPresentation, Relation};
use crate::error::AlgError;
use crate::scalar::FieldSpec;
use crate::structure::idempotent_from_vertices;
use std::sync::Arc;

/// A parsed algebra file, not yet built into an algebra.
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub content: FileContent,
    /// quiver files name vertices; table files give coordinates
    pub idempotent: Option<IdemSpec>,
}

pub enum FileContent {
    Quiver(QuiverPresentation),
    Table { dim: usize, unit: Elem, sc: Vec<crate::scalar::Scalar> },
}

pub enum IdemSpec {
    Vertices(Vec<String>),
    Coords(Elem),
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Section {
    None,
    Quiver,
    Relations,
    Idempotent,
    Options,
    Dim,
    Unit,
    Table,
}

pub fn parse(text: &str) -> Result<AlgebraFile, AlgError> {
    let mut field: Option<FieldSpec> = None;
    let mut section = Section::None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<String> = Vec::new();
    let mut idem_line: Option<String> = None;
    let mut composition_rtl = false;
    let mut length_cap: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut unit_line: Option<String> = None;
    let mut table_lines: Vec<String> = Vec::new();
    let mut saw_quiver = false;
    let mut saw_table = false;

    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| AlgError::Parse(format!("line {}: {msg}", ln + 1));
        if let Some(rest) = line.strip_prefix('[') {
            let (name, tail) = rest
                .split_once(']')
                .ok_or_else(|| err("unterminated section header".into()))?;
            let tail = tail.trim();
            section = match name.trim() {
                "field" => {
                    let spec = match tail {
                        "rational" => FieldSpec::Rational,
                        other => match other.strip_prefix("prime=") {
                            Some(p) => {
                                let p: u64 = p
                                    .trim()
                                    .parse()
                                    .map_err(|_| err(format!("bad prime `{p}`")))?;
                                FieldSpec::prime(p)?
                            }
                            None => return Err(err(format!("unknown field `{other}`"))),
                        },
                    };
                    if field.replace(spec).is_some() {
                        return Err(err("duplicate [field]".into()));
                    }
                    Section::None
                }
                "quiver" => {
                    saw_quiver = true;
                    Section::Quiver
                }
                "relations" => Section::Relations,
                "idempotent" => {
                    if !tail.is_empty() {
                        idem_line = Some(tail.to_string());
                        Section::None
                    } else {
                        Section::Idempotent
                    }
                }
                "options" => {
                    if !tail.is_empty() {
                        parse_options(tail, &mut composition_rtl, &mut length_cap)
                            .map_err(err)?;
                        Section::None
                    } else {
                        Section::Options
                    }
                }
                "dim" => {
                    saw_table = true;
                    if !tail.is_empty() {
                        dim = Some(tail.parse().map_err(|_| err(format!("bad dim `{tail}`")))?);
                        Section::None
                    } else {
                        Section::Dim
                    }
                }
                "unit" => {
                    saw_table = true;
                    if !tail.is_empty() {
                        unit_line = Some(tail.to_string());
                        Section::None
                    } else {
                        Section::Unit
                    }
                }
                "table" => {
                    saw_table = true;
                    Section::Table
                }
                other => return Err(err(format!("unknown section `[{other}]`"))),
            };
            if section == Section::None || tail.is_empty() || name.trim() == "field" {
                continue;
            }
            // headers with trailing content only allowed where handled above
            return Err(err("unexpected content after section header".into()));
        }
        match section {
            Section::None => return Err(err(format!("content outside any section: `{line}`"))),
            Section::Quiver => {
                let mut it = line.split_whitespace();
                match it.next() {
                    Some("vertex") => {
                        let name = it
                            .next()
                            .ok_or_else(|| err("vertex needs a name".into()))?
                            .to_string();
                        if it.next().is_some() {
                            return Err(err("trailing tokens after vertex name".into()));
                        }
                        if vertices.contains(&name) {
                            return Err(err(format!("duplicate vertex `{name}`")));
                        }
                        vertices.push(name);
                    }
                    Some("arrow") => {
                        // arrow <name> : <src> -> <dst>
                        let rest: Vec<&str> = it.collect();
                        let joined = rest.join(" ");
                        let (name, ends) = joined
                            .split_once(':')
                            .ok_or_else(|| err("arrow needs `name : src -> dst`".into()))?;
                        let (src, dst) = ends
                            .split_once("->")
                            .ok_or_else(|| err("arrow needs `src -> dst`".into()))?;
                        let name = name.trim().to_string();
                        if name.is_empty() {
                            return Err(err("arrow needs a name".into()));
                        }
                        if arrows.iter().any(|a| a.name == name) {
                            return Err(err(format!("duplicate arrow `{name}`")));
                        }
                        let src = src.trim();
                        let dst = dst.trim();
                        let si = vertices
                            .iter()
                            .position(|v| v == src)
                            .ok_or_else(|| err(format!("unknown vertex `{src}`")))?;
                        let ti = vertices
                            .iter()
                            .position(|v| v == dst)
                            .ok_or_else(|| err(format!("unknown vertex `{dst}`")))?;
                        arrows.push(Arrow { name, source: si, target: ti });
                    }
                    Some(other) => return Err(err(format!("unknown quiver key `{other}`"))),
                    None => unreachable!(),
                }
            }
            Section::Relations => relation_lines.push(line.to_string()),
            Section::Idempotent => {
                if idem_line.replace(line.to_string()).is_some() {
                    return Err(err("duplicate idempotent line".into()));
                }
            }
            Section::Options => {
                parse_options(line, &mut composition_rtl, &mut length_cap).map_err(err)?
            }
            Section::Dim => {
                if dim
                    .replace(line.parse().map_err(|_| err(format!("bad dim `{line}`")))?)
                    .is_some()
                {
                    return Err(err("duplicate dim".into()));
                }
            }
            Section::Unit => {
                if unit_line.replace(line.to_string()).is_some() {
                    return Err(err("duplicate unit line".into()));
                }
            }
            Section::Table => table_lines.push(line.to_string()),
        }
    }

    let field = field.ok_or_else(|| AlgError::Parse("missing [field] section".into()))?;
    if saw_quiver && saw_table {
        return Err(AlgError::Parse("file mixes quiver and table sections".into()));
    }
    if saw_quiver {
        let mut q = QuiverPresentation::new(vertices, arrows);
        q.right_to_left = composition_rtl;
        if let Some(cap) = length_cap {
            q.length_cap = cap;
        }
        for line in &relation_lines {
            q.relations.push(parse_relation(line, field, &q)?);
        }
        let idempotent = match idem_line {
            Some(l) => Some(IdemSpec::Vertices(
                l.split_whitespace().map(|s| s.to_string()).collect(),
            )),
            None => None,
        };
        Ok(AlgebraFile { field, content: FileContent::Quiver(q), idempotent })
    } else if saw_table {
        let dim = dim.ok_or_else(|| AlgError::Parse("missing [dim]".into()))?;
        let unit_line = unit_line.ok_or_else(|| AlgError::Parse("missing [unit]".into()))?;
        let unit = parse_coords(&unit_line, field, dim)?;
        let mut sc = vec![field.zero(); dim * dim * dim];
        for line in &table_lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 {
                return Err(AlgError::Parse(format!("table line needs `i j k value`: `{line}`")));
            }
            let idx = |s: &str| -> Result<usize, AlgError> {
                let v: usize =
                    s.parse().map_err(|_| AlgError::Parse(format!("bad index `{s}`")))?;
                if v == 0 || v > dim {
                    return Err(AlgError::Parse(format!("index `{s}` out of range 1..{dim}")));
                }
                Ok(v - 1)
            };
            let (i, j, k) = (idx(toks[0])?, idx(toks[1])?, idx(toks[2])?);
            sc[(i * dim + j) * dim + k] = field.parse(toks[3])?;
        }
        let idempotent = match idem_line {
            Some(l) => Some(IdemSpec::Coords(parse_coords(&l, field, dim)?)),
            None => None,
        };
        Ok(AlgebraFile { field, content: FileContent::Table { dim, unit, sc }, idempotent })
    } else {
        Err(AlgError::Parse("file has neither quiver nor table sections".into()))
    }
}

fn parse_options(
    line: &str,
    composition_rtl: &mut bool,
    length_cap: &mut Option<usize>,
) -> Result<(), String> {
    for item in line.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("option needs `key=value`: `{item}`"))?;
        match (k.trim(), v.trim()) {
            ("composition", "left-to-right") => *composition_rtl = false,
            ("composition", "right-to-left") => *composition_rtl = true,
            ("composition", other) => return Err(format!("unknown composition `{other}`")),
            ("length_cap", n) => {
                *length_cap =
                    Some(n.parse().map_err(|_| format!("bad length_cap `{n}`"))?)
            }
            (other, _) => return Err(format!("unknown option `{other}`")),
        }
    }
    Ok(())
}

fn parse_coords(line: &str, field: FieldSpec, dim: usize) -> Result<Elem, AlgError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != dim {
        return Err(AlgError::Parse(format!(
            "expected {dim} coordinates, found {}",
            toks.len()
        )));
    }
    toks.iter().map(|t| field.parse(t)).collect()
}

/// One relation line: terms joined by + / -, each `<coef>*<arrow>*<arrow>...`
/// with the coefficient optional.
fn parse_relation(
    line: &str,
    field: FieldSpec,
    q: &QuiverPresentation,
) -> Result<Relation, AlgError> {
    let bad = |msg: String| AlgError::Parse(format!("relation `{line}`: {msg}"));
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty relation".into()));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut chars = compact.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            neg = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    for c in chars {
        if c == '+' || c == '-' {
            if cur.is_empty() {
                return Err(bad("empty term".into()));
            }
            terms.push((neg, std::mem::take(&mut cur)));
            neg = c == '-';
        } else {
            cur.push(c);
        }
    }
    if cur.is_empty() {
        return Err(bad("empty term".into()));
    }
    terms.push((neg, cur));

    let mut rel: Relation = Vec::new();
    for (neg, term) in terms {
        let mut coef = field.one();
        let mut word: Vec<usize> = Vec::new();
        for factor in term.split('*') {
            if let Some(i) = q.arrows.iter().position(|a| a.name == factor) {
                word.push(i);
            } else {
                let c = field
                    .parse(factor)
                    .map_err(|_| bad(format!("unknown arrow or coefficient `{factor}`")))?;
                if !word.is_empty() {
                    return Err(bad(format!("coefficient `{factor}` after arrows")));
                }
                coef = coef.mul(&c);
            }
        }
        if word.is_empty() {
            return Err(bad(format!("term `{term}` has no arrows")));
        }
        if neg {
            coef = field.zero().sub(&coef);
        }
        rel.push((coef, word));
    }
    Ok(rel)
}

/// Build the algebra (and the declared idempotent, if any) from a parsed file.
pub fn build(file: &AlgebraFile) -> Result<(Arc<Algebra>, Option<Elem>), AlgError> {
    match &file.content {
        FileContent::Quiver(q) => {
            let alg = Arc::new(algebra_from_quiver(q, file.field)?);
            let idem = match &file.idempotent {
                Some(IdemSpec::Vertices(names)) => {
                    let mut verts = Vec::new();
                    for name in names {
                        let v = q
                            .vertices
                            .iter()
                            .position(|x| x == name)
                            .ok_or_else(|| {
                                AlgError::Parse(format!("unknown idempotent vertex `{name}`"))
                            })?;
                        verts.push(v);
                    }
                    Some(idempotent_from_vertices(&alg, &verts)?)
                }
                Some(IdemSpec::Coords(_)) => {
                    return Err(AlgError::Parse(
                        "quiver files declare idempotents by vertex name".into(),
                    ))
                }
                None => None,
            };
            Ok((alg, idem))
        }
        FileContent::Table { dim, unit, sc } => {
            let alg = Arc::new(Algebra::from_sc(
                file.field,
                *dim,
                sc.clone(),
                unit.clone(),
                None,
            )?);
            let idem = match &file.idempotent {
                Some(IdemSpec::Coords(c)) => Some(c.clone()),
                Some(IdemSpec::Vertices(_)) => {
                    return Err(AlgError::Parse(
                        "table files declare idempotents by coordinates".into(),
                    ))
                }
                None => None,
            };
            Ok((alg, idem))
        }
    }
}

/// Parse and build in one step.
pub fn load(text: &str) -> Result<(Arc<Algebra>, Option<Elem>), AlgError> {
    build(&parse(text)?)
}
