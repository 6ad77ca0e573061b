use super::lexer::{lex, Tok, Token};
use super::{poly_add, tensor_add, Generator, Poly, Presentation, Rule, TensorPoly, Word};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Val {
    P(Poly),
    T(TensorPoly),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Element,
    Scalar,
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    p: &'a mut Presentation,
}

fn constant(c: Cyclo) -> Poly {
    let mut p = Poly::new();
    poly_add(&mut p, Vec::new(), c);
    p
}

fn as_constant(p: &Poly) -> Option<Cyclo> {
    match p.len() {
        0 => Some(Cyclo::zero()),
        1 => p.get(&Vec::new()).cloned(),
        _ => None,
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            poly_add(&mut out, w, x * y);
        }
    }
    out
}

fn tensor_scale(a: &TensorPoly, s: &Cyclo) -> TensorPoly {
    let mut out = TensorPoly::new();
    for (k, x) in a {
        tensor_add(&mut out, k.clone(), x * s);
    }
    out
}

/// Parses presentation source text.
pub fn parse(src: &str) -> Result<Presentation> {
    let toks = lex(src)?;
    let mut p = Presentation { conductor: 1, ..Default::default() };
    let mut parser = Parser { toks, pos: 0, p: &mut p };
    parser.file()?;
    Ok(p)
}

/// Parses a single element expression against an existing presentation.
pub(crate) fn parse_element(p: &Presentation, expr: &str) -> Result<Poly> {
    let toks = lex(expr)?;
    let mut q = p.clone();
    let mut parser = Parser { toks, pos: 0, p: &mut q };
    let v = parser.poly(Ctx::Element)?;
    parser.skip_seps();
    if *parser.peek() != Tok::Eof {
        return parser.syntax("trailing input");
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.syntax(format!("expected {}", what))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.syntax(format!("expected {}", what)),
        }
    }

    fn skip_seps(&mut self) {
        while *self.peek() == Tok::Sep {
            self.bump();
        }
    }

    fn end_stmt(&mut self) -> Result<()> {
        match self.peek() {
            Tok::Sep => {
                self.bump();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => self.syntax("expected end of statement"),
        }
    }

    fn file(&mut self) -> Result<()> {
        self.skip_seps();
        if *self.peek() != Tok::Ident("hopf".into()) {
            return self.syntax("expected `hopf NAME over FIELD`");
        }
        self.bump();
        self.p.name = match self.bump() {
            Tok::Ident(s) | Tok::Str(s) => s,
            _ => {
                self.pos -= 1;
                return self.syntax("expected a name");
            }
        };
        if self.ident("`over`")? != "over" {
            self.pos -= 1;
            return self.syntax("expected `over`");
        }
        if self.ident("`Q`")? != "Q" {
            self.pos -= 1;
            return self.syntax("expected `Q`");
        }
        if *self.peek() == Tok::LParen {
            self.bump();
            let z = self.ident("`zetaN`")?;
            match z.strip_prefix("zeta").and_then(|n| n.parse::<u32>().ok()) {
                Some(n) if n > 0 => self.p.conductor = n,
                _ => {
                    self.pos -= 1;
                    return self.syntax("expected `zetaN`");
                }
            }
            self.expect(Tok::RParen, "`)`")?;
        }
        self.end_stmt()?;
        loop {
            self.skip_seps();
            if *self.peek() == Tok::Eof {
                return Ok(());
            }
            self.statement()?;
            self.end_stmt()?;
        }
    }

    fn statement(&mut self) -> Result<()> {
        let kw = self.ident("a statement keyword")?;
        match kw.as_str() {
            "gen" => {
                let mut names = vec![self.ident("a generator name")?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    names.push(self.ident("a generator name")?);
                }
                let parity = match self.ident("`even` or `odd`")?.as_str() {
                    "even" => 0,
                    "odd" => 1,
                    _ => {
                        self.pos -= 1;
                        return self.syntax("expected `even` or `odd`");
                    }
                };
                for name in names {
                    if self.p.generator(&name).is_some() || self.p.scalars.contains_key(&name) {
                        return self.syntax(format!("`{}` already declared", name));
                    }
                    self.p.generators.push(Generator { name, parity });
                }
            }
            "rel" => {
                let lhs = self.word()?;
                if lhs.is_empty() {
                    return self.syntax("relation left side must be a nonempty word");
                }
                self.expect(Tok::Eq, "`=`")?;
                let rhs = self.poly(Ctx::Element)?;
                let par = self.p.word_parity(&lhs);
                for w in rhs.keys() {
                    if self.p.word_parity(w) != par {
                        return Err(Error::ParityMismatch(format!(
                            "relation {} = … has a term {} of the other parity",
                            self.p.word_label(&lhs),
                            self.p.word_label(w)
                        )));
                    }
                }
                self.p.rules.push(Rule { lhs, rhs });
            }
            "basis" => {
                let mut ws = vec![self.word()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    ws.push(self.word()?);
                }
                for w in ws {
                    if self.p.basis.contains(&w) {
                        return self.syntax(format!("basis word {} repeated", self.p.word_label(&w)));
                    }
                    self.p.basis.push(w);
                }
            }
            "delta" => {
                let g = self.generator_name()?;
                self.expect(Tok::Eq, "`=`")?;
                let t = match self.sum(Ctx::Element)? {
                    Val::T(t) => t,
                    Val::P(p) if p.is_empty() => TensorPoly::new(),
                    Val::P(_) => return self.syntax("comultiplication must be a tensor"),
                };
                let par = self.p.generators[g].parity;
                for (u, v) in t.keys() {
                    if self.p.word_parity(u) ^ self.p.word_parity(v) != par {
                        return Err(Error::ParityMismatch(format!(
                            "Δ({}) has a term {}⊗{}",
                            self.p.generators[g].name,
                            self.p.word_label(u),
                            self.p.word_label(v)
                        )));
                    }
                }
                self.p.delta.insert(g, t);
            }
            "counit" => {
                let g = self.generator_name()?;
                self.expect(Tok::Eq, "`=`")?;
                let c = self.scalar()?;
                if self.p.generators[g].parity == 1 && !c.is_zero() {
                    return Err(Error::ParityMismatch(format!(
                        "counit of odd generator {} is nonzero",
                        self.p.generators[g].name
                    )));
                }
                self.p.counit.insert(g, c);
            }
            "antipode" => {
                let g = self.generator_name()?;
                self.expect(Tok::Eq, "`=`")?;
                let s = self.poly(Ctx::Element)?;
                let par = self.p.generators[g].parity;
                for w in s.keys() {
                    if self.p.word_parity(w) != par {
                        return Err(Error::ParityMismatch(format!(
                            "S({}) has a term {}",
                            self.p.generators[g].name,
                            self.p.word_label(w)
                        )));
                    }
                }
                self.p.antipode.insert(g, s);
            }
            "scalar" => {
                let name = self.ident("a scalar name")?;
                if self.p.generator(&name).is_some() {
                    return self.syntax(format!("`{}` is a generator", name));
                }
                self.expect(Tok::Eq, "`=`")?;
                let c = self.scalar()?;
                self.p.scalars.insert(name, c);
            }
            "let" => {
                let name = self.ident("a name")?;
                if self.p.generator(&name).is_some() {
                    return self.syntax(format!("`{}` is a generator", name));
                }
                self.expect(Tok::Eq, "`=`")?;
                let v = self.poly(Ctx::Element)?;
                self.p.lets.insert(name, v);
            }
            "unit" => {
                self.expect(Tok::Eq, "`=`")?;
                let u = self.poly(Ctx::Element)?;
                if u.keys().any(|w| self.p.word_parity(w) != 0) {
                    return Err(Error::ParityMismatch("unit has an odd term".into()));
                }
                if u.contains_key(&Vec::new()) {
                    return self.syntax("unit must be written in nonempty basis words");
                }
                self.p.unit = Some(u);
            }
            "label" => {
                let w = self.word()?;
                match self.bump() {
                    Tok::Str(s) => {
                        self.p.labels.insert(w, s);
                    }
                    _ => {
                        self.pos -= 1;
                        return self.syntax("expected a quoted label");
                    }
                }
            }
            other => {
                self.pos -= 1;
                return self.syntax(format!("unknown statement `{}`", other));
            }
        }
        Ok(())
    }

    fn generator_name(&mut self) -> Result<usize> {
        let name = self.ident("a generator name")?;
        self.p.generator(&name).ok_or(Error::UnknownGenerator(name))
    }

    fn word(&mut self) -> Result<Word> {
        let v = self.poly(Ctx::Element)?;
        if v.len() == 1 {
            let (w, c) = v.iter().next().unwrap();
            if c.is_one() {
                return Ok(w.clone());
            }
        }
        self.syntax("expected a word in the generators")
    }

    fn scalar(&mut self) -> Result<Cyclo> {
        match self.sum(Ctx::Scalar)? {
            Val::P(p) => match as_constant(&p) {
                Some(c) => Ok(c),
                None => self.syntax("expected a scalar"),
            },
            Val::T(_) => self.syntax("expected a scalar"),
        }
    }

    fn poly(&mut self, ctx: Ctx) -> Result<Poly> {
        match self.sum(ctx)? {
            Val::P(p) => Ok(p),
            Val::T(_) => self.syntax("unexpected tensor"),
        }
    }

    fn sum(&mut self, ctx: Ctx) -> Result<Val> {
        let mut acc = self.tensor(ctx)?;
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.tensor(ctx)?;
            acc = self.add(acc, rhs, neg)?;
        }
    }

    fn add(&self, a: Val, b: Val, neg: bool) -> Result<Val> {
        let s = if neg { Cyclo::from_int(-1) } else { Cyclo::one() };
        Ok(match (a, b) {
            (Val::P(mut x), Val::P(y)) => {
                for (w, c) in y {
                    poly_add(&mut x, w, &c * &s);
                }
                Val::P(x)
            }
            (Val::T(mut x), Val::T(y)) => {
                for (k, c) in y {
                    tensor_add(&mut x, k, &c * &s);
                }
                Val::T(x)
            }
            (Val::T(x), Val::P(y)) | (Val::P(y), Val::T(x)) if y.is_empty() => Val::T(x),
            _ => return self.syntax("cannot add an element to a tensor"),
        })
    }

    fn tensor(&mut self, ctx: Ctx) -> Result<Val> {
        let a = self.product(ctx)?;
        if *self.peek() != Tok::Tensor {
            return Ok(a);
        }
        if ctx == Ctx::Scalar {
            return self.syntax("tensor in scalar context");
        }
        self.bump();
        let b = self.product(ctx)?;
        match (a, b) {
            (Val::P(x), Val::P(y)) => {
                let mut t = TensorPoly::new();
                for (u, c) in &x {
                    for (v, d) in &y {
                        tensor_add(&mut t, (u.clone(), v.clone()), c * d);
                    }
                }
                Ok(Val::T(t))
            }
            _ => self.syntax("nested tensor"),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn product(&mut self, ctx: Ctx) -> Result<Val> {
        let mut acc = self.unary(ctx)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let r = self.unary(ctx)?;
                    acc = self.mul(acc, r)?;
                }
                Tok::Slash => {
                    self.bump();
                    let r = self.unary(ctx)?;
                    let c = match &r {
                        Val::P(p) => as_constant(p),
                        Val::T(_) => None,
                    };
                    let Some(c) = c else {
                        return self.syntax("division by a non-scalar");
                    };
                    let inv = c.inv()?;
                    acc = self.mul(acc, Val::P(constant(inv)))?;
                }
                _ if self.starts_atom() => {
                    let r = self.unary(ctx)?;
                    acc = self.mul(acc, r)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn mul(&self, a: Val, b: Val) -> Result<Val> {
        Ok(match (a, b) {
            (Val::P(x), Val::P(y)) => Val::P(poly_mul(&x, &y)),
            (Val::P(x), Val::T(t)) | (Val::T(t), Val::P(x)) => match as_constant(&x) {
                Some(c) => Val::T(tensor_scale(&t, &c)),
                None => return self.syntax("cannot multiply a tensor by a non-scalar"),
            },
            (Val::T(_), Val::T(_)) => return self.syntax("cannot multiply two tensors"),
        })
    }

    fn unary(&mut self, ctx: Ctx) -> Result<Val> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let v = self.unary(ctx)?;
            return self.mul(Val::P(constant(Cyclo::from_int(-1))), v);
        }
        let base = self.atom(ctx)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = match self.bump() {
            Tok::Int(s) => s.parse::<u32>().map_err(|_| ()).ok(),
            _ => None,
        };
        let Some(e) = e else {
            self.pos -= 1;
            return self.syntax("expected a nonnegative exponent");
        };
        let mut acc = Val::P(constant(Cyclo::one()));
        for _ in 0..e {
            acc = self.mul(acc, base.clone())?;
        }
        Ok(acc)
    }

    fn atom(&mut self, ctx: Ctx) -> Result<Val> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                let v: i64 = match s.parse() {
                    Ok(v) => v,
                    Err(_) => {
                        self.pos -= 1;
                        return self.syntax("integer too large");
                    }
                };
                Ok(Val::P(constant(Cyclo::from_int(v))))
            }
            Tok::LParen => {
                self.bump();
                let v = self.sum(ctx)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Tok::Ident(name) => {
                self.bump();
                self.resolve(&name, ctx).map(Val::P)
            }
            _ => self.syntax("expected an expression"),
        }
    }

    fn resolve(&self, name: &str, ctx: Ctx) -> Result<Poly> {
        if let Some(n) = name.strip_prefix("zeta").and_then(|n| n.parse::<u32>().ok()) {
            if n > 0 {
                return Ok(constant(Cyclo::zeta(n, 1)));
            }
        }
        if let Some(c) = self.p.scalars.get(name) {
            return Ok(constant(c.clone()));
        }
        if ctx == Ctx::Scalar {
            return Err(Error::UnknownScalar(name.to_string()));
        }
        if let Some(g) = self.p.generator(name) {
            let mut p = Poly::new();
            p.insert(vec![g], Cyclo::one());
            return Ok(p);
        }
        if let Some(v) = self.p.lets.get(name) {
            return Ok(v.clone());
        }
        Err(Error::UnknownGenerator(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_algebra() {
        let p = parse(
            "hopf L over Q(zeta8); gen z odd; rel z*z = 0; basis 1, z\n\
             delta z = z (x) 1 + 1 (x) z; counit z = 0; antipode z = -z",
        )
        .unwrap();
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.basis, vec![vec![], vec![0]]);
        assert_eq!(p.delta[&0].len(), 2);
        assert_eq!(p.conductor, 8);
    }

    #[test]
    fn unknown_generator() {
        let e = parse("hopf L over Q(zeta8); gen z odd; rel z*z = z*w").unwrap_err();
        assert!(matches!(e, Error::UnknownGenerator(ref w) if w == "w"));
    }

    #[test]
    fn unknown_scalar_and_parity() {
        let e = parse("hopf L over Q; gen z odd; counit z = q").unwrap_err();
        assert!(matches!(e, Error::UnknownScalar(_)));
        let e = parse("hopf L over Q; gen z odd; gen g even; rel z*g = g").unwrap_err();
        assert!(matches!(e, Error::ParityMismatch(_)));
    }

    #[test]
    fn arithmetic() {
        let p = parse("hopf T over Q(zeta8)\nscalar w = zeta8^3\nscalar h = 1/2 * (1 + w^2)\n").unwrap();
        let w = Cyclo::zeta(8, 3);
        assert_eq!(p.scalars["h"], &(&Cyclo::one() + &(&w * &w)) * &Cyclo::from_ratio(1, 2));
    }

    #[test]
    fn syntax_position() {
        let e = parse("hopf T over Q\ngen x even\nrel x*x = = 1").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 3, col: 11, .. }), "{e:?}");
    }
}
