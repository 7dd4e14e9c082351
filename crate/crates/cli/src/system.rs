//! System files.
//!
//! ```text
//! file    := { blank | comment } header { blank | comment | poly_line }
//! header  := field { ws field }
//! field   := "p=" integer | "n=" integer | "homogeneous"
//! comment := "#" { any }
//! ```
//!
//! Polynomial lines use the polynomial grammar of the core library. A
//! trailing `# ...` on a polynomial line is ignored. `y` is accepted only
//! with the `homogeneous` flag.

use semireg::polyring::parse_polynomial;
use semireg::{Error, FieldSpec, PolySequence, RingCtx};

#[derive(Debug)]
pub struct SystemFile {
    pub p: u32,
    pub n: usize,
    pub homogeneous: bool,
    pub system: PolySequence,
}

/// A failure tied to a position in the file.
#[derive(Debug, PartialEq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub error: Error,
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.error {
            Error::Parse { message, .. } => {
                write!(f, "line {}, column {}: {message}", self.line, self.column)
            }
            e => write!(f, "line {}, column {}: {e}", self.line, self.column),
        }
    }
}

fn at(line: usize, column: usize, error: Error) -> FileError {
    FileError {
        line,
        column,
        error,
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<(u32, usize, bool), FileError> {
    let (mut p, mut n, mut homogeneous) = (None, None, false);
    let mut offset = 0;
    for word in line.split_whitespace() {
        let column = line[offset..].find(word).unwrap() + offset + 1;
        offset = column - 1 + word.len();
        let bad = |m: String| at(line_no, column, Error::Parse { column, message: m });
        match word.split_once('=') {
            Some(("p", v)) => {
                p = Some(
                    v.parse::<u64>()
                        .map_err(|_| bad(format!("invalid modulus '{v}'")))?,
                )
            }
            Some(("n", v)) => {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| bad(format!("invalid variable count '{v}'")))?,
                )
            }
            None if word == "homogeneous" => homogeneous = true,
            _ => return Err(bad(format!("unknown header field '{word}'"))),
        }
    }
    let missing = |what: &str| {
        at(
            line_no,
            1,
            Error::Parse {
                column: 1,
                message: format!("header lacks {what}"),
            },
        )
    };
    let p = p.ok_or_else(|| missing("p="))?;
    let n = n.ok_or_else(|| missing("n="))?;
    if n == 0 {
        return Err(at(
            line_no,
            1,
            Error::Parse {
                column: 1,
                message: "n must be positive".into(),
            },
        ));
    }
    // validated here so the error carries a position
    let field = FieldSpec::new(p).map_err(|e| at(line_no, 1, e))?;
    Ok((field.p(), n, homogeneous))
}

pub fn parse_system(text: &str) -> Result<SystemFile, FileError> {
    let mut header = None;
    let mut polys = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let Some((p, n, homogeneous)) = header else {
            header = Some(parse_header(line_no, content)?);
            continue;
        };
        let field = FieldSpec::new(p as u64).unwrap();
        let ring = if homogeneous {
            RingCtx::homogenized(field, n)
        } else {
            RingCtx::affine(field, n)
        };
        match parse_polynomial(&ring, content) {
            Ok(f) => polys.push(f),
            Err(Error::Parse { column, message }) => {
                return Err(at(line_no, column, Error::Parse { column, message }))
            }
            Err(e) => return Err(at(line_no, 1, e)),
        }
    }
    let Some((p, n, homogeneous)) = header else {
        return Err(at(
            1,
            1,
            Error::Parse {
                column: 1,
                message: "missing header 'p=<prime> n=<vars>'".into(),
            },
        ));
    };
    let no_polys = || {
        at(
            last_line + 1,
            1,
            Error::Parse {
                column: 1,
                message: "no polynomials".into(),
            },
        )
    };
    if polys.is_empty() {
        return Err(no_polys());
    }
    let system = PolySequence::new(polys).map_err(|e| at(last_line, 1, e))?;
    Ok(SystemFile {
        p,
        n,
        homogeneous,
        system,
    })
}
