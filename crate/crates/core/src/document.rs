//! Plain-text matroid and coloring documents.
//!
//! A matroid document has one declaration per line; `#` starts a comment.
//!
//! ```text
//! format 1
//! matroid graphic
//! vertices 4
//! edge 0 1
//! edge 0 2
//! ```
//!
//! | family        | declarations                                   |
//! |---------------|------------------------------------------------|
//! | `graphic`, `bicircular`, `cographic` | `vertices n`, `edge u v` |
//! | `signed`      | `vertices n`, `edge u v +` or `edge u v -`     |
//! | `transversal` | `elements n`, `set i j ...`                    |
//! | `linear`      | `field gf p` or `field rational`, `vector a b ...` |
//! | `cube`        | `field ...`, `values a b ...`, `dimension d`   |
//! | `uniform`     | `uniform n k`                                  |
//! | `explicit`    | `elements n`, `basis i j ...`                  |
//!
//! Element ids follow the order of `edge`, `vector` lines (or the lex order
//! of the cube). A coloring document has one `element color` line per
//! element; color names are arbitrary tokens.

use std::fmt::Write as _;

use num_rational::BigRational;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::error::MatroidError;
use crate::families::{
    bicircular_matroid, cographic_matroid, cube_matroid, explicit_matroid, graphic_matroid,
    linear_matroid, signed_matroid, transversal_matroid, uniform_matroid, ExplicitBases, Field,
    Multigraph, SetFamily, SignedMultigraph, VectorList,
};
use crate::matroid::Matroid;
use crate::subset::{Subset, MAX_GROUND_SIZE};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Family {
        line: usize,
        #[source]
        source: MatroidError,
    },
}

pub type DocResult<T> = std::result::Result<T, DocumentError>;

#[derive(Clone, Copy)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl<'a> Token<'a> {
    fn error(&self, message: impl Into<String>) -> DocumentError {
        DocumentError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn parse<T: std::str::FromStr>(&self, what: &str) -> DocResult<T> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }
}

/// Non-empty lines split into tokens, comments stripped.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        line: i + 1,
                        column: content[..s].chars().count() + 1,
                        text: &content[s..pos],
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn expect_arity(line: &[Token<'_>], n: usize) -> DocResult<()> {
    if line.len() - 1 != n {
        let at = line.get(n + 1).unwrap_or(&line[0]);
        return Err(at.error(format!(
            "`{}` takes {n} argument{}, found {}",
            line[0].text,
            if n == 1 { "" } else { "s" },
            line.len() - 1
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tag {
    Graphic,
    Bicircular,
    Cographic,
    Signed,
    Transversal,
    Linear,
    Cube,
    Uniform,
    Explicit,
}

impl Tag {
    fn parse(token: &Token<'_>) -> DocResult<Tag> {
        Ok(match token.text {
            "graphic" => Tag::Graphic,
            "bicircular" => Tag::Bicircular,
            "cographic" => Tag::Cographic,
            "signed" => Tag::Signed,
            "transversal" => Tag::Transversal,
            "linear" => Tag::Linear,
            "cube" => Tag::Cube,
            "uniform" => Tag::Uniform,
            "explicit" => Tag::Explicit,
            other => return Err(token.error(format!("unknown matroid family `{other}`"))),
        })
    }

    /// Declarations allowed besides `format` and `matroid`.
    fn allows(self, keyword: &str) -> bool {
        match self {
            Tag::Graphic | Tag::Bicircular | Tag::Cographic | Tag::Signed => {
                matches!(keyword, "vertices" | "edge")
            }
            Tag::Transversal => matches!(keyword, "elements" | "set"),
            Tag::Linear => matches!(keyword, "field" | "vector"),
            Tag::Cube => matches!(keyword, "field" | "values" | "dimension"),
            Tag::Uniform => keyword == "uniform",
            Tag::Explicit => matches!(keyword, "elements" | "basis"),
        }
    }
}

/// A single-valued declaration and the line it came from.
type Single<T> = Option<(T, usize)>;

#[derive(Default)]
struct Declarations {
    vertices: Single<usize>,
    elements: Single<usize>,
    field: Single<Field>,
    dimension: Single<usize>,
    uniform: Single<(usize, usize)>,
    values: Single<Vec<i64>>,
    edges: Vec<(usize, usize, i8)>,
    sets: Vec<Vec<usize>>,
    vectors: Vec<(Vec<BigRational>, usize)>,
    bases: Vec<Vec<usize>>,
}

fn set_once<T>(slot: &mut Single<T>, value: T, head: &Token<'_>) -> DocResult<()> {
    if let Some((_, first)) = slot {
        return Err(head.error(format!("`{}` already declared on line {first}", head.text)));
    }
    *slot = Some((value, head.line));
    Ok(())
}

fn indices(tokens: &[Token<'_>]) -> DocResult<Vec<usize>> {
    tokens.iter().map(|t| t.parse("an element index")).collect()
}

/// Parses a matroid document and builds the matroid it describes.
pub fn parse_spec(text: &str) -> DocResult<Matroid> {
    let lines = tokenize(text);
    let mut tag: Option<(Tag, usize)> = None;
    let mut format_seen = false;
    for line in &lines {
        let head = &line[0];
        match head.text {
            "format" => {
                expect_arity(line, 1)?;
                let v: u32 = line[1].parse("a format version")?;
                if v != FORMAT_VERSION {
                    return Err(line[1].error(format!("unsupported format version {v}")));
                }
                if format_seen {
                    return Err(head.error("`format` declared twice"));
                }
                format_seen = true;
            }
            "matroid" => {
                expect_arity(line, 1)?;
                if let Some((_, first)) = tag {
                    return Err(head.error(format!("`matroid` already declared on line {first}")));
                }
                tag = Some((Tag::parse(&line[1])?, head.line));
            }
            _ => {}
        }
    }
    let Some((tag, tag_line)) = tag else {
        return Err(DocumentError::Syntax {
            line: lines.first().map_or(1, |l| l[0].line),
            column: 1,
            message: "missing `matroid <family>` declaration".into(),
        });
    };

    let mut d = Declarations::default();
    for line in &lines {
        let head = &line[0];
        let args = &line[1..];
        if matches!(head.text, "format" | "matroid") {
            continue;
        }
        if !tag.allows(head.text) {
            let known = [
                "vertices", "edge", "elements", "set", "field", "vector", "values", "dimension",
                "uniform", "basis",
            ];
            return Err(if known.contains(&head.text) {
                head.error(format!("`{}` does not apply to this matroid family", head.text))
            } else {
                head.error(format!("unknown declaration `{}`", head.text))
            });
        }
        match head.text {
            "vertices" => {
                expect_arity(line, 1)?;
                set_once(&mut d.vertices, args[0].parse("a vertex count")?, head)?;
            }
            "elements" => {
                expect_arity(line, 1)?;
                set_once(&mut d.elements, args[0].parse("an element count")?, head)?;
            }
            "dimension" => {
                expect_arity(line, 1)?;
                set_once(&mut d.dimension, args[0].parse("a dimension")?, head)?;
            }
            "uniform" => {
                expect_arity(line, 2)?;
                let n = args[0].parse("n")?;
                let k = args[1].parse("k")?;
                set_once(&mut d.uniform, (n, k), head)?;
            }
            "field" => {
                let field = match args.first().map(|t| t.text) {
                    Some("rational") => {
                        expect_arity(line, 1)?;
                        Field::Rational
                    }
                    Some("gf") => {
                        expect_arity(line, 2)?;
                        Field::Prime(args[1].parse("a prime")?)
                    }
                    _ => return Err(args.first().unwrap_or(head).error("expected `gf p` or `rational`")),
                };
                let field = field
                    .validate()
                    .map_err(|source| DocumentError::Family {
                        line: head.line,
                        source,
                    })?;
                set_once(&mut d.field, field, head)?;
            }
            "values" => {
                let vals = args
                    .iter()
                    .map(|t| t.parse("an integer"))
                    .collect::<DocResult<Vec<i64>>>()?;
                set_once(&mut d.values, vals, head)?;
            }
            "edge" => {
                let sign = if tag == Tag::Signed {
                    expect_arity(line, 3)?;
                    match args[2].text {
                        "+" | "+1" | "1" => 1,
                        "-" | "-1" => -1,
                        other => return Err(args[2].error(format!("expected a sign, found `{other}`"))),
                    }
                } else {
                    expect_arity(line, 2)?;
                    1
                };
                d.edges.push((args[0].parse("a vertex")?, args[1].parse("a vertex")?, sign));
            }
            "set" => d.sets.push(indices(args)?),
            "basis" => d.bases.push(indices(args)?),
            "vector" => {
                if args.is_empty() {
                    return Err(head.error("a vector needs at least one coordinate"));
                }
                let v = args
                    .iter()
                    .map(|t| {
                        if t.text.ends_with("/0") {
                            return Err(t.error("zero denominator"));
                        }
                        t.parse("a rational number")
                    })
                    .collect::<DocResult<Vec<BigRational>>>()?;
                d.vectors.push((v, head.line));
            }
            _ => unreachable!("filtered by Tag::allows"),
        }
    }
    build(tag, tag_line, d)
}

fn build(tag: Tag, tag_line: usize, d: Declarations) -> DocResult<Matroid> {
    let missing = |what: &str| DocumentError::Syntax {
        line: tag_line,
        column: 1,
        message: format!("missing `{what}` declaration"),
    };
    let family = |line: usize| move |source: MatroidError| DocumentError::Family { line, source };
    let check_cap = |n: usize, line: usize| {
        if n > MAX_GROUND_SIZE {
            Err(family(line)(MatroidError::GroundSetTooLarge(n)))
        } else {
            Ok(())
        }
    };
    let subsets = |lists: Vec<Vec<usize>>, n: usize| -> DocResult<Vec<Subset>> {
        lists
            .into_iter()
            .map(|l| {
                if let Some(&e) = l.iter().find(|&&e| e >= n) {
                    return Err(family(tag_line)(MatroidError::ElementOutOfRange {
                        element: e,
                        ground_size: n,
                    }));
                }
                Ok(Subset::from_indices(l))
            })
            .collect()
    };

    match tag {
        Tag::Graphic | Tag::Bicircular | Tag::Cographic | Tag::Signed => {
            let (n, _) = d.vertices.ok_or_else(|| missing("vertices"))?;
            check_cap(d.edges.len(), tag_line)?;
            let on_tag = family(tag_line);
            if tag == Tag::Signed {
                let g = SignedMultigraph::new(n, d.edges).map_err(&on_tag)?;
                signed_matroid(&g).map_err(on_tag)
            } else {
                let g = Multigraph::new(n, d.edges.iter().map(|&(u, v, _)| (u, v)).collect()).map_err(&on_tag)?;
                match tag {
                    Tag::Graphic => graphic_matroid(&g),
                    Tag::Bicircular => bicircular_matroid(&g),
                    _ => cographic_matroid(&g),
                }
                .map_err(on_tag)
            }
        }
        Tag::Transversal => {
            let (n, line) = d.elements.ok_or_else(|| missing("elements"))?;
            check_cap(n, line)?;
            let sets = subsets(d.sets, n)?;
            let fam = SetFamily::new(n, sets).map_err(family(tag_line))?;
            transversal_matroid(&fam).map_err(family(tag_line))
        }
        Tag::Explicit => {
            let (n, line) = d.elements.ok_or_else(|| missing("elements"))?;
            check_cap(n, line)?;
            let bases = subsets(d.bases, n)?;
            let b = ExplicitBases::new(n, bases).map_err(family(tag_line))?;
            explicit_matroid(&b).map_err(family(tag_line))
        }
        Tag::Uniform => {
            let ((n, k), line) = d.uniform.ok_or_else(|| missing("uniform"))?;
            uniform_matroid(k, n).map_err(family(line))
        }
        Tag::Linear => {
            let (field, _) = d.field.ok_or_else(|| missing("field"))?;
            let Some((first, _)) = d.vectors.first() else {
                return Err(missing("vector"));
            };
            let dim = first.len();
            if let Some((v, line)) = d.vectors.iter().find(|(v, _)| v.len() != dim) {
                return Err(DocumentError::Syntax {
                    line: *line,
                    column: 1,
                    message: format!("vector has {} coordinates, expected {dim}", v.len()),
                });
            }
            check_cap(d.vectors.len(), tag_line)?;
            let vectors = VectorList::new(field, dim, d.vectors.into_iter().map(|(v, _)| v).collect())
                .map_err(family(tag_line))?;
            linear_matroid(&vectors).map_err(family(tag_line))
        }
        Tag::Cube => {
            let (field, _) = d.field.ok_or_else(|| missing("field"))?;
            let (values, line) = d.values.ok_or_else(|| missing("values"))?;
            let (dim, _) = d.dimension.ok_or_else(|| missing("dimension"))?;
            cube_matroid(&values, dim, field).map_err(family(line))
        }
    }
}

/// Parses `element color` lines. Every element `0..n` must appear exactly
/// once; with `ground_size` given, `n` must equal it.
pub fn parse_coloring(text: &str, ground_size: Option<usize>) -> DocResult<Coloring> {
    let lines = tokenize(text);
    let mut labels: Vec<Option<(&str, usize)>> = Vec::new();
    for line in &lines {
        expect_arity(line, 1).map_err(|_| line[0].error("expected `element color`"))?;
        let e: usize = line[0].parse("an element index")?;
        if e >= MAX_GROUND_SIZE {
            return Err(line[0].error(format!("element {e} exceeds the 64-element cap")));
        }
        if labels.len() <= e {
            labels.resize(e + 1, None);
        }
        if let Some((_, first)) = labels[e] {
            return Err(line[0].error(format!("element {e} already colored on line {first}")));
        }
        labels[e] = Some((line[1].text, line[0].line));
    }
    let n = ground_size.unwrap_or(labels.len());
    let end = lines.last().map_or(1, |l| l[0].line);
    if labels.len() > n {
        let line = labels[n..].iter().flatten().map(|&(_, l)| l).min().unwrap_or(end);
        return Err(DocumentError::Syntax {
            line,
            column: 1,
            message: format!("element index outside a ground set of size {n}"),
        });
    }
    labels.resize(n, None);
    if let Some(e) = labels.iter().position(Option::is_none) {
        return Err(DocumentError::Syntax {
            line: end,
            column: 1,
            message: format!("element {e} has no color"),
        });
    }
    let names: Vec<&str> = labels.into_iter().map(|l| l.expect("checked above").0).collect();
    Coloring::from_labels(&names).map_err(|source| DocumentError::Family { line: 1, source })
}

/// Writes `element color` lines using canonical color ids.
pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (e, c) in coloring.labels().into_iter().enumerate() {
        writeln!(out, "{e} {c}").expect("writing to a String cannot fail");
    }
    out
}
