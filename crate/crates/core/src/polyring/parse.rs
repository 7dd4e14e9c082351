//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ws [sign] term (sign term)* ws
//! sign   := '+' | '-'
//! term   := factor ('*'? factor)*
//! factor := integer | var ['^' integer]
//! var    := 'x' integer | 'y'
//! ```
//!
//! Variables are `x1..xn`; `y` is accepted only in a homogenized ring.
//! Coefficients are read modulo `p`.

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer too large")
            }
        }
    }
}

/// Parses a polynomial in the ring's variables.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let normalized = text.replace('\u{2212}', "-");
    let mut cur = Cursor {
        src: normalized.as_bytes(),
        pos: 0,
    };
    let field = ring.field;
    let p = field.p() as u64;
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            None if first => return cur.err("empty polynomial"),
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(b'-') => {
                negative = true;
                cur.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return cur.err(format!("expected '+' or '-', found '{}'", c as char)),
        }
        first = false;

        let mut coeff: u32 = 1;
        let mut exps = vec![0u32; ring.arity()];
        let mut factors = 0;
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = (cur.integer()? % p) as u32;
                    coeff = field.mul(coeff, v);
                }
                Some(b'x') => {
                    let at = cur.pos;
                    cur.pos += 1;
                    if !cur.src.get(cur.pos).is_some_and(u8::is_ascii_digit) {
                        return cur.err("expected a variable index after 'x'");
                    }
                    let idx = cur.integer()? as usize;
                    if idx == 0 || idx > ring.nvars {
                        cur.pos = at;
                        return cur.err(format!("variable x{idx} outside x1..x{}", ring.nvars));
                    }
                    let e = exponent(&mut cur)?;
                    exps[idx - 1] = exps[idx - 1]
                        .checked_add(e)
                        .ok_or(Error::ExponentOverflow)?;
                }
                Some(b'y') => {
                    if !ring.has_hom_var {
                        return cur.err("variable y is only allowed in a homogenized ring");
                    }
                    cur.pos += 1;
                    let e = exponent(&mut cur)?;
                    let last = ring.nvars;
                    exps[last] = exps[last].checked_add(e).ok_or(Error::ExponentOverflow)?;
                }
                Some(b'*') if factors > 0 => {
                    cur.pos += 1;
                    if !matches!(cur.peek(), Some(c) if c.is_ascii_digit() || c == b'x' || c == b'y')
                    {
                        return cur.err("expected a factor after '*'");
                    }
                    continue;
                }
                Some(b'+') | Some(b'-') | None if factors > 0 => break,
                Some(c) => return cur.err(format!("unexpected character '{}'", c as char)),
                None => return cur.err("expected a term"),
            }
            factors += 1;
        }
        if negative {
            coeff = field.neg(coeff);
        }
        terms.push((coeff, Monomial::new(&exps)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn exponent(cur: &mut Cursor<'_>) -> Result<u32> {
    if cur.peek() == Some(b'^') {
        cur.pos += 1;
        let e = cur.integer()?;
        u32::try_from(e).map_err(|_| Error::ExponentOverflow)
    } else {
        Ok(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::polyring::RingCtx;

    fn ring(n: usize) -> Ring {
        RingCtx::affine(FieldSpec::new(73).unwrap(), n)
    }

    #[test]
    fn parses_the_documented_example() {
        let r = ring(3);
        let f = parse_polynomial(
            &r,
            "x1^2 + 3*x2*x1 - 2*x3*x1 - x1 + x2^2 - 2*x3*x2 - 2*x2 + x3^2 + x3",
        )
        .unwrap();
        let g = Polynomial::from_signed(
            &r,
            &[
                (1, &[2, 0, 0]),
                (3, &[1, 1, 0]),
                (-2, &[1, 0, 1]),
                (-1, &[1, 0, 0]),
                (1, &[0, 2, 0]),
                (-2, &[0, 1, 1]),
                (-2, &[0, 1, 0]),
                (1, &[0, 0, 2]),
                (1, &[0, 0, 1]),
            ],
        );
        assert_eq!(f, g);
    }

    #[test]
    fn implicit_multiplication_and_constants() {
        let r = ring(2);
        let f = parse_polynomial(&r, "-3x1x2 + 5 - x2^3").unwrap();
        let g = Polynomial::from_signed(&r, &[(-3, &[1, 1]), (5, &[0, 0]), (-1, &[0, 3])]);
        assert_eq!(f, g);
        assert_eq!(
            parse_polynomial(&r, "x1 - x1").unwrap(),
            Polynomial::zero(&r)
        );
        assert_eq!(
            parse_polynomial(&r, "74").unwrap(),
            Polynomial::constant(&r, 1)
        );
    }

    #[test]
    fn display_round_trips() {
        let r = RingCtx::homogenized(FieldSpec::new(73).unwrap(), 3);
        let f = parse_polynomial(
            &r,
            "x1^2 + 72*y*x1 + 68*x3*x2 + 40*y*x2 + 55*x3^2 + 14*y*x3",
        )
        .unwrap();
        let back = parse_polynomial(&r, &f.to_string()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn reports_columns() {
        let r = ring(3);
        assert!(matches!(
            parse_polynomial(&r, "x1 + x4"),
            Err(Error::Parse { column: 6, .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, "x1 + y"),
            Err(Error::Parse { column: 6, .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, "x1 ++ x2"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, "x1 x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, ""),
            Err(Error::Parse { column: 1, .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, "x1 *"),
            Err(Error::Parse { .. })
        ));
    }
}
