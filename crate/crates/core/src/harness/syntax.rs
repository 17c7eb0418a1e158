use crate::error::{Error, Result};

/// A piece of source text with the position of its first byte (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub quotient: Vec<Spanned>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub rows: Vec<Vec<Spanned>>,
    pub target_twists: Option<Vec<i64>>,
    pub source_twists: Option<Vec<i64>>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexSource {
    Koszul(Vec<Spanned>),
    Resolve(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: String,
    pub source: ComplexSource,
    pub line: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Beh,
    Binomial,
    Psi2,
    Equality,
    Dutta,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Beh => "beh",
            CheckKind::Binomial => "binomial",
            CheckKind::Psi2 => "psi2",
            CheckKind::Equality => "equality",
            CheckKind::Dutta => "dutta",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "beh" => CheckKind::Beh,
            "binomial" => CheckKind::Binomial,
            "psi2" => CheckKind::Psi2,
            "equality" => CheckKind::Equality,
            "dutta" => CheckKind::Dutta,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckDecl {
    pub kind: CheckKind,
    pub target: String,
    pub emax: Option<u32>,
    pub cap: Option<usize>,
    pub line: usize,
}

/// The declarations of one instance file, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ring: RingDecl,
    pub modules: Vec<ModuleDecl>,
    pub complexes: Vec<ComplexDecl>,
    pub checks: Vec<CheckDecl>,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { line: self.line, col: self.pos + 1, msg: msg.into() })
    }

    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected '{}', found '{}'", c as char, d as char)),
            None => self.err(format!("expected '{}'", c as char)),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        let b = self.bytes();
        if start >= b.len() || !(b[start].is_ascii_alphabetic() || b[start] == b'_') {
            return self.err("expected a name");
        }
        let mut end = start;
        while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'_') {
            end += 1;
        }
        self.pos = end;
        Ok(self.src[start..end].to_string())
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let save = self.pos;
        match self.ident() {
            Ok(w) if w == kw => Ok(()),
            _ => {
                self.pos = save;
                self.skip_ws();
                self.err(format!("expected '{kw}'"))
            }
        }
    }

    fn try_keyword(&mut self, kw: &str) -> bool {
        let save = self.pos;
        match self.ident() {
            Ok(w) if w == kw => true,
            _ => {
                self.pos = save;
                false
            }
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let b = self.bytes();
        let mut end = start;
        if end < b.len() && b[end] == b'-' {
            end += 1;
        }
        while end < b.len() && b[end].is_ascii_digit() {
            end += 1;
        }
        match self.src[start..end].parse::<i64>() {
            Ok(n) => {
                self.pos = end;
                Ok(n)
            }
            Err(_) => self.err("expected an integer"),
        }
    }

    /// Raw text up to the next top-level `,` or an unmatched closing bracket.
    fn item(&mut self) -> Result<Spanned> {
        self.skip_ws();
        let start = self.pos;
        let b = self.bytes();
        let mut depth = 0i32;
        let mut end = start;
        while end < b.len() {
            match b[end] {
                b'(' | b'[' => depth += 1,
                b')' | b']' if depth == 0 => break,
                b')' | b']' => depth -= 1,
                b',' if depth == 0 => break,
                _ => {}
            }
            end += 1;
        }
        let text = self.src[start..end].trim_end();
        if text.is_empty() {
            return self.err("expected a polynomial");
        }
        self.pos = end;
        Ok(Spanned { text: text.to_string(), line: self.line, col: start + 1 })
    }

    /// `open item, item, ... close`
    fn list<T>(&mut self, open: u8, close: u8, mut each: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(each(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

/// Parses an instance file.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut ring: Option<RingDecl> = None;
    let mut modules = Vec::new();
    let mut complexes = Vec::new();
    let mut checks = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let mut c = Cursor { src: strip_comment(raw), pos: 0, line: k + 1 };
        if c.at_end() {
            continue;
        }
        let kw_pos = c.pos;
        let kw = c.ident()?;
        match kw.as_str() {
            "ring" => {
                if ring.is_some() {
                    c.pos = kw_pos;
                    return c.err("only one ring per file");
                }
                let name = c.ident()?;
                c.expect(b'=')?;
                let field_pos = c.pos;
                let f = c.ident()?;
                let field = match f.as_str() {
                    "F" => {
                        c.expect(b'(')?;
                        let p = c.integer()?;
                        c.expect(b')')?;
                        if p < 2 {
                            c.pos = field_pos;
                            return c.err("characteristic must be a prime");
                        }
                        FieldSpec::Prime(p as u64)
                    }
                    "Q" | "QQ" => FieldSpec::Rationals,
                    _ => {
                        c.pos = field_pos;
                        c.skip_ws();
                        return c.err(format!("unknown coefficient field '{f}'"));
                    }
                };
                let vars = c.list(b'[', b']', |c| c.ident())?;
                if vars.is_empty() {
                    return c.err("a ring needs at least one variable");
                }
                let mut quotient = Vec::new();
                if c.try_keyword("quotient") {
                    quotient = c.list(b'(', b')', |c| c.item())?;
                }
                c.finish()?;
                ring = Some(RingDecl { name, field, vars, quotient, line: k + 1 });
            }
            "quotient" => {
                let Some(r) = ring.as_mut() else {
                    c.pos = kw_pos;
                    return c.err("quotient before ring");
                };
                if !r.quotient.is_empty() {
                    c.pos = kw_pos;
                    return c.err("quotient given twice");
                }
                r.quotient = c.list(b'(', b')', |c| c.item())?;
                c.finish()?;
            }
            "module" => {
                if ring.is_none() {
                    c.pos = kw_pos;
                    return c.err("module before ring");
                }
                let name = c.ident()?;
                c.expect(b'=')?;
                c.keyword("coker")?;
                let rows = c.list(b'[', b']', |c| c.list(b'[', b']', |c| c.item()))?;
                let (mut target_twists, mut source_twists) = (None, None);
                if c.try_keyword("twists") {
                    loop {
                        if target_twists.is_none() && c.try_keyword("target") {
                            target_twists = Some(c.list(b'[', b']', |c| c.integer())?);
                        } else if source_twists.is_none() && c.try_keyword("source") {
                            source_twists = Some(c.list(b'[', b']', |c| c.integer())?);
                        } else {
                            break;
                        }
                    }
                    if target_twists.is_none() && source_twists.is_none() {
                        return c.err("expected 'target' or 'source'");
                    }
                }
                c.finish()?;
                modules.push(ModuleDecl { name, rows, target_twists, source_twists, line: k + 1 });
            }
            "complex" => {
                if ring.is_none() {
                    c.pos = kw_pos;
                    return c.err("complex before ring");
                }
                let name = c.ident()?;
                c.expect(b'=')?;
                let how_pos = c.pos;
                let how = c.ident()?;
                let source = match how.as_str() {
                    "koszul" => ComplexSource::Koszul(c.list(b'(', b')', |c| c.item())?),
                    "resolve" => {
                        c.expect(b'(')?;
                        let m = c.ident()?;
                        c.expect(b')')?;
                        ComplexSource::Resolve(m)
                    }
                    _ => {
                        c.pos = how_pos;
                        c.skip_ws();
                        return c.err(format!("unknown complex constructor '{how}'"));
                    }
                };
                c.finish()?;
                complexes.push(ComplexDecl { name, source, line: k + 1 });
            }
            "check" => {
                let kind_pos = c.pos;
                let kind_name = c.ident()?;
                let Some(kind) = CheckKind::parse(&kind_name) else {
                    c.pos = kind_pos;
                    c.skip_ws();
                    return c.err(format!("unknown check '{kind_name}'"));
                };
                c.keyword("on")?;
                let target = c.ident()?;
                let (mut emax, mut cap) = (None, None);
                while !c.at_end() {
                    let opt_pos = c.pos;
                    let key = c.ident()?;
                    c.expect(b'=')?;
                    let v = c.integer()?;
                    if v < 0 {
                        c.pos = opt_pos;
                        c.skip_ws();
                        return c.err(format!("option '{key}' must be non-negative"));
                    }
                    match key.as_str() {
                        "emax" if emax.is_none() => emax = Some(v as u32),
                        "cap" if cap.is_none() => cap = Some(v as usize),
                        _ => {
                            c.pos = opt_pos;
                            c.skip_ws();
                            return c.err(format!("unknown or repeated option '{key}'"));
                        }
                    }
                }
                checks.push(CheckDecl { kind, target, emax, cap, line: k + 1 });
            }
            other => {
                c.pos = kw_pos;
                c.skip_ws();
                return c.err(format!("unknown statement '{other}'"));
            }
        }
    }
    let ring = ring.ok_or(Error::Syntax { line: 1, col: 1, msg: "missing ring declaration".into() })?;
    Ok(Document { ring, modules, complexes, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
ring R = F(101)[x,y]
quotient (x*y)
module M = coker [[x - y]]
complex F = resolve(M)
check beh on M cap=4
";

    #[test]
    fn parses_example() {
        let d = parse_document(EXAMPLE).unwrap();
        assert_eq!(d.ring.field, FieldSpec::Prime(101));
        assert_eq!(d.ring.vars, vec!["x", "y"]);
        assert_eq!(d.ring.quotient[0].text, "x*y");
        assert_eq!(d.modules[0].rows[0][0].text, "x - y");
        assert_eq!(d.modules[0].rows[0][0].col, 20);
        assert_eq!(d.complexes[0].source, ComplexSource::Resolve("M".into()));
        assert_eq!(d.checks[0].cap, Some(4));
    }

    #[test]
    fn inline_quotient_twists_and_comments() {
        let d = parse_document(
            "# header\nring S = Q[a,b,c] quotient (a^2 - b*c, (a+b)*c)  # cone\n\
             module N = coker [[a, b], [0, c]] twists target [0, 1] source [1, 2]\n",
        )
        .unwrap();
        assert_eq!(d.ring.field, FieldSpec::Rationals);
        assert_eq!(d.ring.quotient.len(), 2);
        assert_eq!(d.ring.quotient[1].text, "(a+b)*c");
        assert_eq!(d.modules[0].target_twists, Some(vec![0, 1]));
        assert_eq!(d.modules[0].source_twists, Some(vec![1, 2]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_document("ring R = F(7)[x]\nfoo bar\n").unwrap_err();
        assert_eq!(e, Error::Syntax { line: 2, col: 1, msg: "unknown statement 'foo'".into() });
        let e = parse_document("ring R = F(7)[x]\ncheck beh on M speed=3\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, col: 16, .. }), "{e:?}");
        let e = parse_document("ring R = G(7)[x]\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, col: 10, .. }), "{e:?}");
        let e = parse_document("check beh on M\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, col: 1, .. }), "{e:?}");
    }

    #[test]
    fn unknown_check_is_rejected() {
        let e = parse_document("ring R = F(7)[x]\ncheck gauss on M\n").unwrap_err();
        assert_eq!(e.to_string(), "2:7: syntax error: unknown check 'gauss'");
    }
}
