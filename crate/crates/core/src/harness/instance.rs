//! Line-oriented instance files.
//!
//! ```text
//! p=2 m=1 dim=2 kind=hopf label=I1
//! unit -> 1,0
//! mul 2 2 -> 0,1
//! delta 2 -> (1,2):1 (2,1):1
//! eps 1 -> 1
//! S 2 2 -> 1
//! ```
//!
//! Indices are 1-based, field elements are integers below p^m, and any
//! entry not listed is zero.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::AlgebraSC;
use crate::error::{Error, Result};
use crate::ff::{gf, vector, Fe, FieldCtx, MatF, Subspace};
use crate::grp::FiniteGroup;
use crate::hopf::HopfSC;
use crate::rlie::RestrictedLie;

/// Largest dimension accepted by the parser; structure constants grow as dim³.
pub const MAX_DIM: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Rlie(RestrictedLie),
    Hopf(HopfSC),
    Group(FiniteGroup),
    /// A subspace given by spanning vectors, e.g. a Hopf subalgebra or a
    /// single element.
    Subspace(Vec<Vec<Fe>>),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Rlie(_) => "rlie",
            Body::Hopf(_) => "hopf",
            Body::Group(_) => "group",
            Body::Subspace(_) => "subspace",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub ctx: Arc<FieldCtx>,
    pub body: Body,
}

impl Instance {
    pub fn new(label: impl Into<String>, ctx: &Arc<FieldCtx>, body: Body) -> Self {
        Instance {
            label: label.into(),
            ctx: ctx.clone(),
            body,
        }
    }

    pub fn dim(&self) -> usize {
        match &self.body {
            Body::Rlie(l) => l.dim(),
            Body::Hopf(h) => h.dim(),
            Body::Group(g) => g.order(),
            Body::Subspace(v) => v.first().map_or(0, |x| x.len()),
        }
    }

    pub fn subspace(&self, ambient: usize) -> Result<Subspace> {
        match &self.body {
            Body::Subspace(v) => {
                if let Some(x) = v.iter().find(|x| x.len() != ambient) {
                    return Err(Error::DimensionMismatch {
                        expected: ambient,
                        got: x.len(),
                    });
                }
                Ok(Subspace::span(&self.ctx, ambient, v.clone()))
            }
            _ => Err(Error::WrongAlgebraKind("expected a subspace instance")),
        }
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "p={} m={} dim={} kind={}",
            self.ctx.p(),
            self.ctx.degree(),
            self.dim(),
            self.body.kind()
        );
        if !self.label.is_empty() {
            let _ = write!(s, " label={}", self.label);
        }
        s.push('\n');
        match &self.body {
            Body::Rlie(l) => {
                let n = l.dim();
                for i in 0..n {
                    for j in 0..n {
                        let v = &l.bracket_table()[i * n + j];
                        if !vector::is_zero(v) {
                            let _ = writeln!(s, "bracket {} {} -> {}", i + 1, j + 1, list(v));
                        }
                    }
                }
                for (i, v) in l.pmap_table().iter().enumerate() {
                    if !vector::is_zero(v) {
                        let _ = writeln!(s, "pmap {} -> {}", i + 1, list(v));
                    }
                }
            }
            Body::Hopf(h) => {
                let n = h.dim();
                let _ = writeln!(s, "unit -> {}", list(h.unit()));
                for i in 0..n {
                    for j in 0..n {
                        let v = h.alg().basis_product(i, j);
                        if !vector::is_zero(v) {
                            let _ = writeln!(s, "mul {} {} -> {}", i + 1, j + 1, list(v));
                        }
                    }
                }
                for i in 0..n {
                    let terms = h.delta_terms(i);
                    if terms.is_empty() {
                        continue;
                    }
                    let _ = write!(s, "delta {} ->", i + 1);
                    for &(a, b, c) in terms {
                        let _ = write!(s, " ({},{}):{}", a + 1, b + 1, c.0);
                    }
                    s.push('\n');
                }
                for (i, c) in h.eps().iter().enumerate() {
                    if !c.is_zero() {
                        let _ = writeln!(s, "eps {} -> {}", i + 1, c.0);
                    }
                }
                let sm = h.antipode_matrix();
                for i in 0..n {
                    for j in 0..n {
                        let c = sm.get(i, j);
                        if !c.is_zero() {
                            let _ = writeln!(s, "S {} {} -> {}", i + 1, j + 1, c.0);
                        }
                    }
                }
            }
            Body::Group(g) => {
                let n = g.order();
                for i in 0..n {
                    for j in 0..n {
                        let _ = writeln!(s, "table {} {} -> {}", i + 1, j + 1, g.mul(i, j) + 1);
                    }
                }
            }
            Body::Subspace(vs) => {
                for v in vs {
                    let _ = writeln!(s, "vec -> {}", list(v));
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Instance> {
        Parser::default().run(text)
    }
}

fn list(v: &[Fe]) -> String {
    v.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Default)]
struct Parser {
    line: usize,
}

/// A token with its 1-based column.
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok {
                    text: &line[s..i],
                    col: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            text: &line[s..],
            col: line[..s].chars().count() + 1,
        });
    }
    out
}

struct Header {
    p: u64,
    m: u32,
    dim: usize,
    kind: String,
    label: String,
}

impl Parser {
    fn run(&mut self, text: &str) -> Result<Instance> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| perr(1, 1, "empty instance"))?;
        self.line = hl;
        let h = self.header(header)?;
        let ctx = gf(h.p, h.m).map_err(|e| perr(hl, 1, e.to_string()))?;
        let n = h.dim;

        let mut unit = vector::zeros(n);
        let mut mul = vec![Fe::ZERO; n * n * n];
        let mut delta = MatF::zeros(&ctx, n * n, n);
        let mut eps = vector::zeros(n);
        let mut antipode = MatF::zeros(&ctx, n, n);
        let mut bracket = vec![vector::zeros(n); n * n];
        let mut pmap = vec![vector::zeros(n); n];
        let mut table: Vec<Option<u32>> = vec![None; n * n];
        let mut vecs = Vec::new();

        for (ln, line) in lines {
            self.line = ln;
            let toks = tokens(line);
            let arrow = toks
                .iter()
                .position(|t| t.text == "->")
                .ok_or_else(|| perr(ln, toks[0].col, "expected `->`"))?;
            let (lhs, rhs) = (&toks[..arrow], &toks[arrow + 1..]);
            if lhs.is_empty() {
                return Err(perr(ln, toks[0].col, "expected a key before `->`"));
            }
            let key = lhs[0].text;
            let allowed: &[&str] = match h.kind.as_str() {
                "hopf" => &["unit", "mul", "delta", "eps", "S"],
                "rlie" => &["bracket", "pmap"],
                "group" => &["table"],
                _ => &["vec"],
            };
            if !allowed.contains(&key) {
                return Err(perr(ln, lhs[0].col, format!("`{key}` is not allowed in a {} instance", h.kind)));
            }
            let want = match key {
                "unit" | "vec" => 0,
                "mul" | "S" | "bracket" | "table" => 2,
                _ => 1,
            };
            if lhs.len() != want + 1 {
                return Err(perr(ln, lhs[0].col, format!("`{key}` takes {want} indices")));
            }
            let idx: Vec<usize> = lhs[1..]
                .iter()
                .map(|t| self.index(t, n))
                .collect::<Result<_>>()?;
            match key {
                "unit" => unit = self.vector(rhs, &ctx, n, arrow_col(&toks, arrow))?,
                "vec" => vecs.push(self.vector(rhs, &ctx, n, arrow_col(&toks, arrow))?),
                "mul" => {
                    let v = self.vector(rhs, &ctx, n, arrow_col(&toks, arrow))?;
                    let base = (idx[0] * n + idx[1]) * n;
                    mul[base..base + n].copy_from_slice(&v);
                }
                "bracket" => bracket[idx[0] * n + idx[1]] = self.vector(rhs, &ctx, n, arrow_col(&toks, arrow))?,
                "pmap" => pmap[idx[0]] = self.vector(rhs, &ctx, n, arrow_col(&toks, arrow))?,
                "eps" => eps[idx[0]] = self.scalar(rhs, &ctx, arrow_col(&toks, arrow))?,
                "S" => antipode.set(idx[0], idx[1], self.scalar(rhs, &ctx, arrow_col(&toks, arrow))?),
                "table" => {
                    if rhs.len() != 1 {
                        return Err(perr(ln, arrow_col(&toks, arrow), "expected one index"));
                    }
                    table[idx[0] * n + idx[1]] = Some(self.index(&rhs[0], n)? as u32);
                }
                "delta" => {
                    for t in rhs {
                        let (a, b, c) = self.delta_term(t, &ctx, n)?;
                        let old = delta.get(a * n + b, idx[0]);
                        delta.set(a * n + b, idx[0], ctx.add(old, c));
                    }
                }
                _ => unreachable!("filtered by `allowed`"),
            }
        }

        let at = |e: Error| perr(hl, 1, e.to_string());
        let body = match h.kind.as_str() {
            "hopf" => {
                let alg = AlgebraSC::new(&ctx, n, mul, unit).map_err(at)?;
                Body::Hopf(HopfSC::new(alg, delta, eps, antipode).map_err(at)?)
            }
            "rlie" => Body::Rlie(RestrictedLie::new(&ctx, n, bracket, pmap).map_err(at)?),
            "group" => {
                if let Some(k) = table.iter().position(|t| t.is_none()) {
                    return Err(perr(
                        hl,
                        1,
                        format!("table entry {} {} missing", k / n + 1, k % n + 1),
                    ));
                }
                let t = table.into_iter().map(|x| x.expect("checked")).collect();
                Body::Group(FiniteGroup::from_table(n, t).map_err(at)?)
            }
            _ => Body::Subspace(vecs),
        };
        Ok(Instance {
            label: h.label,
            ctx,
            body,
        })
    }

    fn header(&self, line: &str) -> Result<Header> {
        let mut p = None;
        let mut m = 1;
        let mut dim = None;
        let mut kind = None;
        let mut label = String::new();
        for t in tokens(line) {
            let (k, v) = t
                .text
                .split_once('=')
                .ok_or_else(|| perr(self.line, t.col, "expected key=value"))?;
            let vcol = t.col + k.chars().count() + 1;
            let num = |v: &str| -> Result<u64> {
                v.parse().map_err(|_| perr(self.line, vcol, format!("bad number `{v}`")))
            };
            match k {
                "p" => p = Some(num(v)?),
                "m" => m = num(v)? as u32,
                "dim" => dim = Some(num(v)? as usize),
                "kind" => {
                    if !["rlie", "hopf", "group", "subspace"].contains(&v) {
                        return Err(perr(self.line, vcol, format!("unknown kind `{v}`")));
                    }
                    kind = Some(v.to_string());
                }
                "label" => label = v.to_string(),
                _ => return Err(perr(self.line, t.col, format!("unknown key `{k}`"))),
            }
        }
        if dim.is_some_and(|d| d > MAX_DIM) {
            return Err(perr(self.line, 1, format!("dim is limited to {MAX_DIM}")));
        }
        Ok(Header {
            p: p.ok_or_else(|| perr(self.line, 1, "missing p="))?,
            m,
            dim: dim.ok_or_else(|| perr(self.line, 1, "missing dim="))?,
            kind: kind.ok_or_else(|| perr(self.line, 1, "missing kind="))?,
            label,
        })
    }

    fn index(&self, t: &Tok<'_>, n: usize) -> Result<usize> {
        match t.text.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
            _ => Err(perr(self.line, t.col, format!("index `{}` not in 1..={n}", t.text))),
        }
    }

    fn element(&self, s: &str, col: usize, ctx: &FieldCtx) -> Result<Fe> {
        match s.parse::<u64>() {
            Ok(x) if x < ctx.order() => Ok(Fe(x as u32)),
            _ => Err(perr(self.line, col, format!("`{s}` is not an element of GF({})", ctx.order()))),
        }
    }

    fn vector(&self, rhs: &[Tok<'_>], ctx: &FieldCtx, n: usize, col: usize) -> Result<Vec<Fe>> {
        if rhs.len() != 1 {
            return Err(perr(self.line, col, "expected one comma-separated list"));
        }
        let t = &rhs[0];
        let mut out = Vec::with_capacity(n);
        let mut c = t.col;
        for part in t.text.split(',') {
            out.push(self.element(part, c, ctx)?);
            c += part.chars().count() + 1;
        }
        if out.len() != n {
            return Err(perr(self.line, t.col, format!("expected {n} entries, found {}", out.len())));
        }
        Ok(out)
    }

    fn scalar(&self, rhs: &[Tok<'_>], ctx: &FieldCtx, col: usize) -> Result<Fe> {
        match rhs {
            [t] => self.element(t.text, t.col, ctx),
            _ => Err(perr(self.line, col, "expected one element")),
        }
    }

    /// `(a,b):c`
    fn delta_term(&self, t: &Tok<'_>, ctx: &FieldCtx, n: usize) -> Result<(usize, usize, Fe)> {
        let bad = || perr(self.line, t.col, format!("expected (a,b):c, found `{}`", t.text));
        let rest = t.text.strip_prefix('(').ok_or_else(bad)?;
        let (pair, c) = rest.split_once("):").ok_or_else(bad)?;
        let (a, b) = pair.split_once(',').ok_or_else(bad)?;
        let ia = Tok { text: a, col: t.col + 1 };
        let ib = Tok {
            text: b,
            col: t.col + 2 + a.chars().count(),
        };
        let cc = t.col + 3 + pair.chars().count();
        Ok((self.index(&ia, n)?, self.index(&ib, n)?, self.element(c, cc, ctx)?))
    }
}

fn arrow_col(toks: &[Tok<'_>], arrow: usize) -> usize {
    toks[arrow].col
}
