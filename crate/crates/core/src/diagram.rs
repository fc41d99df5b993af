//! A small text language for string diagrams, read top to bottom.
//!
//! ```text
//! expr   := term (';' term)*
//! term   := factor ('|' factor)*
//! factor := NAME (('[' | '(') args (']' | ')'))? | '(' expr ')'
//! args   := obj (',' obj)*
//! obj    := '1' | NAME '^'? ('*' NAME '^'?)*
//! ```
//!
//! `a ; b` applies `a` first; `a | b` is the tensor product. The built-in
//! names are `id`, `Psi`, `PsiInv`, `ev` and `coev`; every other name is
//! looked up among the generators of the [`Context`]. `X^` is the dual of X
//! and `X*Y` the tensor product.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::category::{coev, ev, Braider, GradedObject, Morphism};
use crate::hopf::HopfData;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagramError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("type error in `{node}`: {msg}")]
    Type { node: String, msg: String },
    #[error("invalid diagram json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, DiagramError>;

/// A tensor product of named objects and their duals; empty means the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjRef(pub Vec<(String, bool)>);

impl fmt::Display for ObjRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(n, d)| if *d { format!("{n}^") } else { n.clone() })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramExpr {
    Gen(String, Vec<ObjRef>),
    Id(Option<ObjRef>),
    Psi(Option<(ObjRef, ObjRef)>, bool),
    Ev(ObjRef),
    Coev(ObjRef),
    Seq(Vec<DiagramExpr>),
    Par(Vec<DiagramExpr>),
}

use DiagramExpr::*;

fn args_text(args: &[ObjRef]) -> String {
    args.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for DiagramExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen(n, a) if a.is_empty() => write!(f, "{n}"),
            Gen(n, a) => write!(f, "{n}[{}]", args_text(a)),
            Id(None) => write!(f, "id"),
            Id(Some(x)) => write!(f, "id[{x}]"),
            Psi(xy, inv) => {
                write!(f, "{}", if *inv { "PsiInv" } else { "Psi" })?;
                match xy {
                    Some((x, y)) => write!(f, "({x},{y})"),
                    None => Ok(()),
                }
            }
            Ev(x) => write!(f, "ev[{x}]"),
            Coev(x) => write!(f, "coev[{x}]"),
            Seq(v) => {
                let p: Vec<String> = v
                    .iter()
                    .map(|e| {
                        if matches!(e, Seq(_)) {
                            format!("({e})")
                        } else {
                            e.to_string()
                        }
                    })
                    .collect();
                write!(f, "{}", p.join(" ; "))
            }
            Par(v) => {
                let p: Vec<String> = v
                    .iter()
                    .map(|e| {
                        if matches!(e, Seq(_) | Par(_)) {
                            format!("({e})")
                        } else {
                            e.to_string()
                        }
                    })
                    .collect();
                write!(f, "{}", p.join(" | "))
            }
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(DiagramError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn name(&mut self) -> Result<String> {
        self.skip();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.s[start].is_ascii_digit() {
            self.pos = start;
            return self.err("expected a name");
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<DiagramExpr> {
        let mut v = vec![self.term()?];
        while self.eat(b';') {
            v.push(self.term()?);
        }
        Ok(if v.len() == 1 {
            v.pop().unwrap()
        } else {
            Seq(v)
        })
    }

    fn term(&mut self) -> Result<DiagramExpr> {
        let mut v = vec![self.factor()?];
        while self.eat(b'|') {
            v.push(self.factor()?);
        }
        Ok(if v.len() == 1 {
            v.pop().unwrap()
        } else {
            Par(v)
        })
    }

    fn factor(&mut self) -> Result<DiagramExpr> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let at = self.pos;
        let n = self.name()?;
        let args = match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.args()?;
                self.expect(b']')?;
                Some(a)
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.args()?;
                self.expect(b')')?;
                Some(a)
            }
            _ => None,
        };
        let arity = |k: usize, p: &Self| -> Result<()> {
            match &args {
                Some(a) if a.len() != k => Err(DiagramError::Syntax {
                    pos: at,
                    msg: format!("`{n}` takes {k} object argument(s)"),
                }),
                None if k > 0 && n != "id" && !n.starts_with("Psi") => {
                    p.err(format!("`{n}` needs arguments"))
                }
                _ => Ok(()),
            }
        };
        Ok(match n.as_str() {
            "id" => {
                arity(1, self)?;
                Id(args.map(|mut a| a.remove(0)))
            }
            "Psi" | "PsiInv" => {
                arity(2, self)?;
                let xy = args.map(|mut a| {
                    let y = a.pop().unwrap();
                    (a.pop().unwrap(), y)
                });
                Psi(xy, n == "PsiInv")
            }
            "ev" | "coev" => {
                arity(1, self)?;
                let x = args.unwrap().remove(0);
                if n == "ev" {
                    Ev(x)
                } else {
                    Coev(x)
                }
            }
            _ => Gen(n, args.unwrap_or_default()),
        })
    }

    fn args(&mut self) -> Result<Vec<ObjRef>> {
        let mut v = vec![self.obj()?];
        while self.eat(b',') {
            v.push(self.obj()?);
        }
        Ok(v)
    }

    fn obj(&mut self) -> Result<ObjRef> {
        if self.eat(b'1') {
            return Ok(ObjRef(vec![]));
        }
        let mut v = vec![];
        loop {
            let n = self.name()?;
            let d = self.eat(b'^');
            v.push((n, d));
            if !self.eat(b'*') {
                return Ok(ObjRef(v));
            }
        }
    }
}

pub fn parse(text: &str) -> Result<DiagramExpr> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected input");
    }
    Ok(e)
}

fn obj_json(o: &ObjRef) -> Value {
    Value::Array(o.0.iter().map(|(n, d)| json!([n, d])).collect())
}

fn obj_from_json(v: &Value) -> Result<ObjRef> {
    let bad = || DiagramError::Json(format!("bad object {v}"));
    let mut out = vec![];
    for f in v.as_array().ok_or_else(bad)? {
        let f = f.as_array().filter(|f| f.len() == 2).ok_or_else(bad)?;
        out.push((
            f[0].as_str().ok_or_else(bad)?.to_string(),
            f[1].as_bool().ok_or_else(bad)?,
        ));
    }
    Ok(ObjRef(out))
}

impl DiagramExpr {
    /// Nested arrays: ["seq", ...], ["par", ...], ["gen", name, [objs]],
    /// ["id", obj|null], ["psi", x|null, y|null, inverse], ["ev", x], ["coev", x].
    pub fn to_json(&self) -> Value {
        match self {
            Gen(n, a) => json!(["gen", n, a.iter().map(obj_json).collect::<Vec<_>>()]),
            Id(x) => json!(["id", x.as_ref().map(obj_json)]),
            Psi(xy, inv) => match xy {
                Some((x, y)) => json!(["psi", obj_json(x), obj_json(y), inv]),
                None => json!(["psi", null, null, inv]),
            },
            Ev(x) => json!(["ev", obj_json(x)]),
            Coev(x) => json!(["coev", obj_json(x)]),
            Seq(v) | Par(v) => {
                let mut out = vec![json!(if matches!(self, Seq(_)) { "seq" } else { "par" })];
                out.extend(v.iter().map(|e| e.to_json()));
                Value::Array(out)
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || DiagramError::Json(format!("bad node {v}"));
        let a = v.as_array().filter(|a| !a.is_empty()).ok_or_else(bad)?;
        let tag = a[0].as_str().ok_or_else(bad)?;
        let arg = |i: usize| a.get(i).ok_or_else(bad);
        Ok(match tag {
            "gen" => {
                let n = arg(1)?.as_str().ok_or_else(bad)?.to_string();
                let objs = arg(2)?
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(obj_from_json)
                    .collect::<Result<_>>()?;
                Gen(n, objs)
            }
            "id" => Id(if arg(1)?.is_null() {
                None
            } else {
                Some(obj_from_json(arg(1)?)?)
            }),
            "psi" => {
                let inv = arg(3)?.as_bool().ok_or_else(bad)?;
                if arg(1)?.is_null() {
                    Psi(None, inv)
                } else {
                    Psi(
                        Some((obj_from_json(arg(1)?)?, obj_from_json(arg(2)?)?)),
                        inv,
                    )
                }
            }
            "ev" => Ev(obj_from_json(arg(1)?)?),
            "coev" => Coev(obj_from_json(arg(1)?)?),
            "seq" | "par" => {
                let v = a[1..]
                    .iter()
                    .map(DiagramExpr::from_json)
                    .collect::<Result<Vec<_>>>()?;
                if v.is_empty() {
                    return Err(bad());
                }
                if tag == "seq" {
                    Seq(v)
                } else {
                    Par(v)
                }
            }
            _ => return Err(bad()),
        })
    }
}

/// Named objects and generators. Bare `id` and `Psi` refer to the default
/// object; `Psi` uses the context's braider.
#[derive(Clone, Debug)]
pub struct Context {
    pub objects: BTreeMap<String, GradedObject>,
    pub gens: BTreeMap<String, Morphism>,
    pub default: String,
    pub braider: Braider,
}

impl Context {
    pub fn new(default: &str, obj: GradedObject, braider: Braider) -> Self {
        let mut objects = BTreeMap::new();
        objects.insert(default.to_string(), obj);
        Context {
            objects,
            gens: BTreeMap::new(),
            default: default.into(),
            braider,
        }
    }

    pub fn add_object(&mut self, name: &str, obj: GradedObject) -> Result<()> {
        if self.objects.contains_key(name) {
            return Err(DiagramError::Type {
                node: name.into(),
                msg: "object already defined".into(),
            });
        }
        self.objects.insert(name.into(), obj);
        Ok(())
    }

    /// The generator's domain and codomain must be built from registered objects.
    pub fn add_gen(&mut self, name: &str, m: Morphism) -> Result<()> {
        let known = |o: &GradedObject| {
            o.factors().iter().all(|f| {
                self.objects
                    .values()
                    .any(|x| x.factors().len() == 1 && x.factors()[0].atom == f.atom)
            })
        };
        if self.gens.contains_key(name) {
            return Err(DiagramError::Type {
                node: name.into(),
                msg: "generator already defined".into(),
            });
        }
        if !known(m.dom()) || !known(m.cod()) {
            return Err(DiagramError::Type {
                node: name.into(),
                msg: "type uses an unregistered object".into(),
            });
        }
        self.gens.insert(name.into(), m);
        Ok(())
    }

    /// mu, eta, Delta, eps, S, Sinv of `h` (those present) with suffix, e.g.
    /// `mu_A` for suffix "_A".
    pub fn add_hopf(&mut self, h: &HopfData, suffix: &str) -> Result<()> {
        let maps = [
            ("mu", &h.mu),
            ("eta", &h.eta),
            ("Delta", &h.delta),
            ("eps", &h.eps),
            ("S", &h.antipode),
            ("Sinv", &h.skew),
        ];
        for (n, m) in maps {
            if let Some(m) = m {
                self.add_gen(&format!("{n}{suffix}"), m.clone())?;
            }
        }
        Ok(())
    }

    /// A context with the object `A` and the structure maps of `h`. When `A` is
    /// a tensor product its factors are registered too, under their own names.
    pub fn for_hopf(h: &HopfData) -> Self {
        let mut c = Context::new("A", h.obj.clone(), h.braider.clone());
        if h.obj.factors().len() > 1 {
            for (k, o) in h.obj.atoms().into_iter().enumerate() {
                let name = o.factors()[0].atom.name.clone();
                let name = if c.objects.contains_key(&name) {
                    format!("A{k}")
                } else {
                    name
                };
                if !c.objects.values().any(|x| *x == o) {
                    c.objects.insert(name, o);
                }
            }
        }
        c.add_hopf(h, "").expect("fresh context");
        c
    }

    pub fn object(&self, r: &ObjRef) -> Result<GradedObject> {
        let d = &self.objects[&self.default];
        let mut out = GradedObject::unit(d.cat());
        for (n, dual) in &r.0 {
            let o = self.objects.get(n).ok_or_else(|| DiagramError::Type {
                node: r.to_string(),
                msg: format!("unknown object `{n}`"),
            })?;
            out = out.tensor(&if *dual { o.dual() } else { o.clone() });
        }
        Ok(out)
    }

    fn default_obj(&self) -> GradedObject {
        self.objects[&self.default].clone()
    }
}

/// Domain and codomain of an expression without evaluating it.
pub fn typecheck(e: &DiagramExpr, ctx: &Context) -> Result<(GradedObject, GradedObject)> {
    let ty = |msg: String| DiagramError::Type {
        node: e.to_string(),
        msg,
    };
    match e {
        Gen(n, a) => {
            if !a.is_empty() {
                return Err(ty("generators take no object arguments".into()));
            }
            let m = ctx
                .gens
                .get(n)
                .ok_or_else(|| ty(format!("unknown generator `{n}`")))?;
            Ok((m.dom().clone(), m.cod().clone()))
        }
        Id(x) => {
            let o = x
                .as_ref()
                .map_or_else(|| Ok(ctx.default_obj()), |x| ctx.object(x))?;
            Ok((o.clone(), o))
        }
        Psi(xy, _) => {
            let (x, y) = match xy {
                Some((x, y)) => (ctx.object(x)?, ctx.object(y)?),
                None => (ctx.default_obj(), ctx.default_obj()),
            };
            Ok((x.tensor(&y), y.tensor(&x)))
        }
        Ev(x) => {
            let o = ctx.object(x)?;
            Ok((o.tensor(&o.dual()), GradedObject::unit(o.cat())))
        }
        Coev(x) => {
            let o = ctx.object(x)?;
            Ok((GradedObject::unit(o.cat()), o.dual().tensor(&o)))
        }
        Seq(v) => {
            let (dom, mut cod) = typecheck(&v[0], ctx)?;
            for n in &v[1..] {
                let (d, c) = typecheck(n, ctx)?;
                if d != cod {
                    return Err(DiagramError::Type {
                        node: n.to_string(),
                        msg: format!("expects {} but receives {}", d.name(), cod.name()),
                    });
                }
                cod = c;
            }
            Ok((dom, cod))
        }
        Par(v) => {
            let mut dom = GradedObject::unit(ctx.default_obj().cat());
            let mut cod = dom.clone();
            for n in v {
                let (d, c) = typecheck(n, ctx)?;
                dom = dom.tensor(&d);
                cod = cod.tensor(&c);
            }
            Ok((dom, cod))
        }
    }
}

pub fn evaluate(e: &DiagramExpr, ctx: &Context) -> Result<Morphism> {
    typecheck(e, ctx)?;
    Ok(eval_checked(e, ctx))
}

fn eval_checked(e: &DiagramExpr, ctx: &Context) -> Morphism {
    match e {
        Gen(n, _) => ctx.gens[n].clone(),
        Id(_) => Morphism::identity(&typecheck(e, ctx).unwrap().0),
        Psi(xy, inv) => {
            let (x, y) = match xy {
                Some((x, y)) => (ctx.object(x).unwrap(), ctx.object(y).unwrap()),
                None => (ctx.default_obj(), ctx.default_obj()),
            };
            if *inv {
                ctx.braider.psi_inv(&x, &y)
            } else {
                ctx.braider.psi(&x, &y)
            }
        }
        Ev(x) => ev(&ctx.object(x).unwrap()),
        Coev(x) => coev(&ctx.object(x).unwrap()),
        Seq(v) => v[1..].iter().fold(eval_checked(&v[0], ctx), |acc, n| {
            acc.then(&eval_checked(n, ctx))
        }),
        Par(v) => v[1..].iter().fold(eval_checked(&v[0], ctx), |acc, n| {
            acc.tensor(&eval_checked(n, ctx))
        }),
    }
}

/// Parses and evaluates in one step.
pub fn eval_text(text: &str, ctx: &Context) -> Result<Morphism> {
    evaluate(&parse(text)?, ctx)
}

/// Diagram texts for the structure maps of A ⋉ B, in a context with objects
/// A, B, the maps of A and B suffixed `_A`, `_B`, and `action`, `coaction`.
pub mod cross {
    pub const MU: &str = "id[A] | id[B] | Delta_A | id[B] ; id[A] | Psi(B,A) | id[A] | id[B] ; \
                          id[A] | id[A] | action | id[B] ; mu_A | mu_B";
    pub const DELTA: &str = "Delta_A | Delta_B ; id[A] | id[A] | coaction | id[B] ; \
                             id[A] | Psi(A,B) | id[A] | id[B] ; id[A] | id[B] | mu_A | id[B]";
    pub const S: &str = "id[A] | coaction ; Psi(A,B) | id[A] ; id[B] | mu_A ; S_B | S_A ; \
                         id[B] | Delta_A ; Psi(B,A) | id[A] ; id[A] | action";
}

/// The context used by [`cross`]; Psi is the braiding of the base category.
pub fn cross_context(a: &HopfData, b: &crate::products::DyHopf) -> Result<Context> {
    let mut c = Context::new("A", a.obj.clone(), a.braider.clone());
    c.add_object("B", b.hopf.obj.clone())?;
    c.add_hopf(a, "_A")?;
    c.add_hopf(&b.hopf, "_B")?;
    c.add_gen("action", b.module.action.clone())?;
    c.add_gen("coaction", b.module.coaction.clone())?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::lines::{anyonic_line, group_algebra_zn};
    use crate::examples::quantum::fermionic_line;
    use crate::products::cross_product;

    #[test]
    fn parse_shapes() {
        assert_eq!(
            parse("id[A]").unwrap(),
            Id(Some(ObjRef(vec![("A".into(), false)])))
        );
        let e = parse("Delta ; (S | id[A]) ; mu").unwrap();
        let Seq(v) = &e else { panic!() };
        assert_eq!(v.len(), 3);
        assert!(matches!(&v[1], Par(p) if p.len() == 2 && p[0] == Gen("S".into(), vec![])));
        assert!(
            matches!(parse("Psi(A,A) ; mu").unwrap(), Seq(v) if matches!(v[0], Psi(Some(_), false)))
        );
        for t in [
            "Delta ; (S | id[A]) ; mu",
            "coev[A] ; id[A^] | id[A]",
            "(a ; b) | c ; PsiInv(A*B,1)",
            "((a | b) | c) ; (d ; e)",
        ] {
            let e = parse(t).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e);
            assert_eq!(DiagramExpr::from_json(&e.to_json()).unwrap(), e);
        }
        assert_eq!(
            parse("mu ; ").unwrap_err(),
            DiagramError::Syntax {
                pos: 5,
                msg: "expected a name".into()
            }
        );
        assert!(matches!(
            parse("id[A] )"),
            Err(DiagramError::Syntax { pos: 6, .. })
        ));
        assert!(matches!(parse("ev"), Err(DiagramError::Syntax { .. })));
    }

    #[test]
    fn antipode_axiom_and_opposite() {
        let h = anyonic_line(2);
        let ctx = Context::for_hopf(&h);
        let m = eval_text("Delta ; (S | id) ; mu", &ctx).unwrap();
        assert_eq!(m, h.eps().unwrap().then(h.eta().unwrap()));
        assert_eq!(m.rank(), 1);
        let op = eval_text("Psi(A,A) ; mu", &ctx).unwrap();
        let mu = h.mu().unwrap();
        assert_eq!(op, h.psi().then(mu));
        // on the superline x·x = 0 and the braiding only signs x⊗x
        assert_eq!(op, *mu);
        let snake = eval_text("id[A] | coev[A] ; ev[A] | id[A]", &ctx).unwrap();
        assert_eq!(snake, h.id());
        let snake = eval_text("coev[A] | id[A^] ; id[A^] | ev[A]", &ctx).unwrap();
        assert_eq!(snake, Morphism::identity(&h.obj.dual()));
        let e = eval_text("Delta ; mu ; mu", &ctx).unwrap_err();
        assert!(matches!(e, DiagramError::Type { node, .. } if node == "mu"));
    }

    #[test]
    fn cross_product_encodings() {
        let a = group_algebra_zn(2);
        let b = fermionic_line(&a);
        let h = cross_product(&a, &b).unwrap();
        let ctx = cross_context(&a, &b).unwrap();
        assert_eq!(eval_text(cross::MU, &ctx).unwrap(), *h.mu().unwrap());
        assert_eq!(eval_text(cross::DELTA, &ctx).unwrap(), *h.delta().unwrap());
        assert_eq!(eval_text(cross::S, &ctx).unwrap(), *h.s().unwrap());
    }
}
