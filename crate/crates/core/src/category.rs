//! Γ-graded vector spaces with a bicharacter braiding, as a strict monoidal
//! category.
//!
//! Objects are lists of atomic factors (each possibly dualized); tensor
//! product concatenates the lists and the unit is the empty list. A basis
//! vector of a tensor object is a multi-index over the factors, first factor
//! most significant. Morphisms are sparse column-major matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalars::{Field, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CategoryError {
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("morphism is not grade preserving at entry ({row}, {col})")]
    NotGradePreserving { row: usize, col: usize },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("morphism is not invertible")]
    NotInvertible,
    #[error("no solution of linear system")]
    NoSolution,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, CategoryError>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Grade(pub Vec<i64>);

impl Grade {
    pub fn first(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Finitely generated abelian group Z^a × Z_{n1} × …; `None` marks a Z factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradingGroup {
    components: Vec<Option<u32>>,
}

impl GradingGroup {
    pub fn new(components: Vec<Option<u32>>) -> Self {
        GradingGroup { components }
    }

    pub fn trivial() -> Self {
        GradingGroup { components: vec![] }
    }

    pub fn integers() -> Self {
        GradingGroup {
            components: vec![None],
        }
    }

    pub fn cyclic(n: u32) -> Self {
        GradingGroup {
            components: vec![Some(n)],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Option<u32>] {
        &self.components
    }

    pub fn zero(&self) -> Grade {
        Grade(vec![0; self.rank()])
    }

    pub fn reduce(&self, v: &[i64]) -> Grade {
        Grade(
            self.components
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let x = v.get(i).copied().unwrap_or(0);
                    match c {
                        None => x,
                        Some(n) => x.rem_euclid(*n as i64),
                    }
                })
                .collect(),
        )
    }

    pub fn add(&self, a: &Grade, b: &Grade) -> Grade {
        let v: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.reduce(&v)
    }

    pub fn neg(&self, a: &Grade) -> Grade {
        let v: Vec<i64> = a.0.iter().map(|x| -x).collect();
        self.reduce(&v)
    }
}

/// A braided category of Γ-graded spaces over a field, χ given on generators.
pub struct Category {
    field: Field,
    group: GradingGroup,
    gens: Vec<Vec<Scalar>>,
    cache: Mutex<HashMap<(Grade, Grade), Scalar>>,
}

impl fmt::Debug for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Category({}, {:?})", self.field, self.group.components)
    }
}

impl PartialEq for Category {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.group == o.group && self.gens == o.gens
    }
}

impl Category {
    /// `gens[i][j]` is χ(e_i, e_j) on the standard generators.
    pub fn new(field: Field, group: GradingGroup, gens: Vec<Vec<Scalar>>) -> Result<Arc<Self>> {
        let r = group.rank();
        if gens.len() != r || gens.iter().any(|row| row.len() != r) {
            return Err(CategoryError::InvalidBicharacter(format!(
                "expected {r}x{r} generator table"
            )));
        }
        for (i, row) in gens.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.field() != field {
                    return Err(CategoryError::InvalidBicharacter(format!(
                        "entry ({i},{j}) lies in {}",
                        c.field()
                    )));
                }
                if c.is_zero() {
                    return Err(CategoryError::InvalidBicharacter(format!(
                        "entry ({i},{j}) is zero"
                    )));
                }
                for k in [i, j] {
                    if let Some(n) = group.components[k] {
                        if !c.pow(n as i64).is_one() {
                            return Err(CategoryError::InvalidBicharacter(format!(
                                "entry ({i},{j}) is not an {n}-th root of unity"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Arc::new(Category {
            field,
            group,
            gens,
            cache: Mutex::new(HashMap::new()),
        }))
    }

    /// Trivially graded vector spaces with the flip.
    pub fn trivial(field: Field) -> Arc<Self> {
        Category::new(field, GradingGroup::trivial(), vec![]).unwrap()
    }

    /// Z-graded (or Z_n-graded) spaces with χ(a, b) = c^{ab}.
    pub fn single(field: Field, group: GradingGroup, c: Scalar) -> Result<Arc<Self>> {
        Category::new(field, group, vec![vec![c]])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn chi(&self, a: &Grade, b: &Grade) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return self.field.one();
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = self.field.one();
        for (i, &x) in a.0.iter().enumerate() {
            for (j, &y) in b.0.iter().enumerate() {
                if x != 0 && y != 0 {
                    acc = acc * self.gens[i][j].pow(x * y);
                }
            }
        }
        self.cache.lock().unwrap().insert(key, acc.clone());
        acc
    }

    pub fn to_json(&self) -> Value {
        let field = match self.field {
            Field::RationalFunctions => json!({"kind": "rational_functions"}),
            Field::Cyclotomic(n) => json!({"kind": "cyclotomic", "n": n}),
        };
        let grading: Vec<Value> = self
            .group
            .components
            .iter()
            .map(|c| match c {
                None => json!({"kind": "Z"}),
                Some(n) => json!({"kind": "Zn", "n": n}),
            })
            .collect();
        let gens: Vec<Value> = self
            .gens
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect()))
            .collect();
        json!({"field": field, "grading": grading, "bichar": gens})
    }

    pub fn from_json(v: &Value) -> Result<Arc<Self>> {
        let bad = |m: &str| CategoryError::Json(m.to_string());
        let f = v.get("field").ok_or_else(|| bad("missing field"))?;
        let field = match f.get("kind").and_then(Value::as_str) {
            Some("rational_functions") => Field::RationalFunctions,
            Some("cyclotomic") => {
                let n = f
                    .get("n")
                    .and_then(Value::as_u64)
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| bad("bad n"))?;
                Field::Cyclotomic(n as u32)
            }
            _ => return Err(bad("unknown field kind")),
        };
        let mut comps = vec![];
        for c in v
            .get("grading")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing grading"))?
        {
            match c.get("kind").and_then(Value::as_str) {
                Some("Z") => comps.push(None),
                Some("Zn") => {
                    let n = c
                        .get("n")
                        .and_then(Value::as_u64)
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| bad("bad n"))?;
                    comps.push(Some(n as u32));
                }
                _ => return Err(bad("unknown grading component")),
            }
        }
        let mut gens = vec![];
        for row in v
            .get("bichar")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing bichar"))?
        {
            let row = row.as_array().ok_or_else(|| bad("bichar row"))?;
            gens.push(
                row.iter()
                    .map(Scalar::from_json)
                    .collect::<std::result::Result<Vec<_>, _>>()?,
            );
        }
        Category::new(field, GradingGroup::new(comps), gens)
    }
}

/// A named space with a homogeneous basis.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub name: String,
    pub labels: Vec<String>,
    pub grades: Vec<Grade>,
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub atom: Arc<Atom>,
    pub dual: bool,
}

impl PartialEq for Factor {
    fn eq(&self, o: &Self) -> bool {
        self.dual == o.dual && (Arc::ptr_eq(&self.atom, &o.atom) || *self.atom == *o.atom)
    }
}

impl Factor {
    fn dim(&self) -> usize {
        self.atom.labels.len()
    }
}

#[derive(Clone)]
pub struct GradedObject {
    cat: Arc<Category>,
    factors: Arc<Vec<Factor>>,
    dims: Arc<Vec<usize>>,
    grades: Arc<Vec<Grade>>,
}

impl fmt::Debug for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for GradedObject {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.factors, &o.factors) || self.factors == o.factors)
            && (Arc::ptr_eq(&self.cat, &o.cat) || *self.cat == *o.cat)
    }
}

impl GradedObject {
    fn from_factors(cat: Arc<Category>, factors: Vec<Factor>) -> Self {
        let dims: Vec<usize> = factors.iter().map(Factor::dim).collect();
        let total: usize = dims.iter().product();
        let mut grades = Vec::with_capacity(total);
        let zero = cat.group.zero();
        for i in 0..total {
            let mut g = zero.clone();
            let mut rem = i;
            for k in (0..factors.len()).rev() {
                let j = rem % dims[k];
                rem /= dims[k];
                let fg = &factors[k].atom.grades[j];
                g = if factors[k].dual {
                    cat.group.add(&g, &cat.group.neg(fg))
                } else {
                    cat.group.add(&g, fg)
                };
            }
            grades.push(g);
        }
        GradedObject {
            cat,
            factors: Arc::new(factors),
            dims: Arc::new(dims),
            grades: Arc::new(grades),
        }
    }

    /// A new atomic object; grades are reduced into the grading group.
    pub fn atom(cat: &Arc<Category>, name: &str, basis: Vec<(String, Vec<i64>)>) -> Self {
        let (labels, grades): (Vec<_>, Vec<_>) = basis
            .into_iter()
            .map(|(l, g)| (l, cat.group.reduce(&g)))
            .unzip();
        let atom = Atom {
            name: name.to_string(),
            labels,
            grades,
        };
        GradedObject::from_factors(
            cat.clone(),
            vec![Factor {
                atom: Arc::new(atom),
                dual: false,
            }],
        )
    }

    /// Each factor as an object of its own, without the dual flag.
    pub fn atoms(&self) -> Vec<GradedObject> {
        self.factors
            .iter()
            .map(|f| {
                GradedObject::from_factors(
                    self.cat.clone(),
                    vec![Factor {
                        atom: f.atom.clone(),
                        dual: false,
                    }],
                )
            })
            .collect()
    }

    pub fn unit(cat: &Arc<Category>) -> Self {
        GradedObject::from_factors(cat.clone(), vec![])
    }

    pub fn cat(&self) -> &Arc<Category> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    pub fn grade(&self, i: usize) -> &Grade {
        &self.grades[i]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|f| {
                if f.dual {
                    format!("{}^", f.atom.name)
                } else {
                    f.atom.name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn multi_index(&self, mut i: usize) -> Vec<usize> {
        let mut v = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            v[k] = i % self.dims[k];
            i /= self.dims[k];
        }
        v
    }

    pub fn label(&self, i: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.multi_index(i)
            .iter()
            .zip(self.factors.iter())
            .map(|(&j, f)| {
                if f.dual {
                    format!("{}^", f.atom.labels[j])
                } else {
                    f.atom.labels[j].clone()
                }
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// Position of a label in an atomic object.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.label(i) == label)
    }

    pub fn tensor(&self, o: &GradedObject) -> GradedObject {
        if o.is_unit() {
            return self.clone();
        }
        if self.is_unit() {
            return o.clone();
        }
        let mut f = (*self.factors).clone();
        f.extend(o.factors.iter().cloned());
        GradedObject::from_factors(self.cat.clone(), f)
    }

    pub fn tensor_all(cat: &Arc<Category>, objs: &[&GradedObject]) -> GradedObject {
        let mut acc = GradedObject::unit(cat);
        for o in objs {
            acc = acc.tensor(o);
        }
        acc
    }

    /// Right dual: reversed factors, each dualized.
    pub fn dual(&self) -> GradedObject {
        let f: Vec<Factor> = self
            .factors
            .iter()
            .rev()
            .map(|f| Factor {
                atom: f.atom.clone(),
                dual: !f.dual,
            })
            .collect();
        GradedObject::from_factors(self.cat.clone(), f)
    }

    /// The same object viewed in another category with the same grading data.
    pub fn with_category(&self, cat: &Arc<Category>) -> GradedObject {
        GradedObject::from_factors(cat.clone(), (*self.factors).clone())
    }

    /// Total positive and negative parts of the first grade component over
    /// the tensor factors of a basis vector.
    pub fn degree_spread(&self, i: usize) -> (i64, i64) {
        let (mut pos, mut neg) = (0, 0);
        for (k, &j) in self.multi_index(i).iter().enumerate() {
            let f = &self.factors[k];
            let mut d = f.atom.grades[j].first();
            if f.dual {
                d = -d;
            }
            if d > 0 {
                pos += d;
            } else {
                neg += d;
            }
        }
        (pos, neg)
    }

    pub fn to_json(&self) -> Value {
        let f: Vec<Value> = self
            .factors
            .iter()
            .map(|f| {
                let basis: Vec<Value> = f
                    .atom
                    .labels
                    .iter()
                    .zip(&f.atom.grades)
                    .map(|(l, g)| json!({"label": l, "grade": g.0}))
                    .collect();
                json!({"name": f.atom.name, "dual": f.dual, "basis": basis})
            })
            .collect();
        Value::Array(f)
    }

    pub fn from_json(cat: &Arc<Category>, v: &Value) -> Result<Self> {
        let bad = |m: &str| CategoryError::Json(m.to_string());
        let mut factors = vec![];
        for f in v
            .as_array()
            .ok_or_else(|| bad("object must be a factor list"))?
        {
            let name = f
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("factor name"))?;
            let dual = f.get("dual").and_then(Value::as_bool).unwrap_or(false);
            let mut basis = vec![];
            for b in f
                .get("basis")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("factor basis"))?
            {
                let l = b
                    .get("label")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("basis label"))?;
                let g: Vec<i64> = b
                    .get("grade")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("basis grade"))?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| bad("grade entry")))
                    .collect::<Result<_>>()?;
                if g.len() != cat.group.rank() {
                    return Err(bad("grade has wrong rank"));
                }
                basis.push((l.to_string(), g));
            }
            let a = GradedObject::atom(cat, name, basis);
            factors.push(Factor {
                atom: a.factors[0].atom.clone(),
                dual,
            });
        }
        Ok(GradedObject::from_factors(cat.clone(), factors))
    }
}

impl GradedObject {
    /// The object made of factors `range` of this one.
    pub fn slice(&self, range: std::ops::Range<usize>) -> GradedObject {
        GradedObject::from_factors(self.cat.clone(), self.factors[range].to_vec())
    }
}

#[derive(Clone)]
struct BraidEntry {
    x: GradedObject,
    y: GradedObject,
    psi: Morphism,
    psi_inv: Morphism,
}

/// An ambient braiding: the category braiding (or its inverse) with explicit
/// overrides for chosen pairs of objects. Braidings between tensor products
/// are assembled factorwise by the hexagon identities.
#[derive(Clone, Default)]
pub struct Braider {
    inverted: bool,
    entries: Arc<Vec<BraidEntry>>,
}

impl fmt::Debug for Braider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Braider(inverted={}, overrides={})",
            self.inverted,
            self.entries.len()
        )
    }
}

impl Braider {
    pub fn plain() -> Self {
        Braider::default()
    }

    pub fn is_plain(&self) -> bool {
        !self.inverted && self.entries.is_empty()
    }

    /// Adds (or replaces) the braiding of the pair (x, y). `psi_inv` is the
    /// inverse of the braiding of (y, x), typed x ⊗ y → y ⊗ x.
    pub fn with(&self, psi: Morphism, psi_inv: Morphism) -> Self {
        if psi.dom().is_unit() {
            return self.clone();
        }
        let x = psi.dom().slice(0..psi.dom().factors().len());
        let (x, y) = split_pair(&x, psi.cod());
        let mut e: Vec<BraidEntry> = self
            .entries
            .iter()
            .filter(|b| !(b.x == x && b.y == y))
            .cloned()
            .collect();
        e.push(BraidEntry { x, y, psi, psi_inv });
        Braider {
            inverted: self.inverted,
            entries: Arc::new(e),
        }
    }

    /// Braiding of the reverse category: Ψ̄_{X,Y} is the inverse of Ψ_{Y,X}.
    pub fn inverse(&self) -> Self {
        let e = self
            .entries
            .iter()
            .map(|b| BraidEntry {
                x: b.x.clone(),
                y: b.y.clone(),
                psi: b.psi_inv.clone(),
                psi_inv: b.psi.clone(),
            })
            .collect();
        Braider {
            inverted: !self.inverted,
            entries: Arc::new(e),
        }
    }

    pub fn psi(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        self.get(x, y, false)
    }

    pub fn psi_inv(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        self.get(x, y, true)
    }

    fn get(&self, x: &GradedObject, y: &GradedObject, inv: bool) -> Morphism {
        if x.is_unit() || y.is_unit() {
            return Morphism::identity(&x.tensor(y));
        }
        if let Some(b) = self.entries.iter().find(|b| &b.x == x && &b.y == y) {
            return if inv {
                b.psi_inv.clone()
            } else {
                b.psi.clone()
            };
        }
        let nx = x.factors().len();
        let ny = y.factors().len();
        if !self.entries.is_empty() && nx > 1 {
            let (x1, xr) = (x.slice(0..1), x.slice(1..nx));
            return Morphism::identity(&x1)
                .tensor(&self.get(&xr, y, inv))
                .then(&self.get(&x1, y, inv).tensor(&Morphism::identity(&xr)));
        }
        if !self.entries.is_empty() && ny > 1 {
            let (y1, yr) = (y.slice(0..1), y.slice(1..ny));
            return self
                .get(x, &y1, inv)
                .tensor(&Morphism::identity(&yr))
                .then(&Morphism::identity(&y1).tensor(&self.get(x, &yr, inv)));
        }
        if self.inverted != inv {
            braiding_inv(x, y)
        } else {
            braiding(x, y)
        }
    }
}

/// Recovers (x, y) from dom = x ⊗ y and cod = y ⊗ x.
fn split_pair(dom: &GradedObject, cod: &GradedObject) -> (GradedObject, GradedObject) {
    let n = dom.factors().len();
    for k in 1..n {
        let (x, y) = (dom.slice(0..k), dom.slice(k..n));
        if y.tensor(&x) == *cod {
            return (x, y);
        }
    }
    panic!("braiding override must have type X⊗Y → Y⊗X");
}

/// Restriction of identity checks to inputs whose total degree stays inside a
/// truncation window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub max_degree: i64,
}

impl Window {
    pub fn admits(&self, obj: &GradedObject, col: usize) -> bool {
        let (p, n) = obj.degree_spread(col);
        p <= self.max_degree && -n <= self.max_degree
    }
}

type Column = Vec<(usize, Scalar)>;

/// Sparse matrix between graded objects; `cols[j]` lists the nonzero
/// entries (row, value) of column j in increasing row order.
#[derive(Clone)]
pub struct Morphism {
    dom: GradedObject,
    cod: GradedObject,
    cols: Vec<Column>,
}

impl PartialEq for Morphism {
    fn eq(&self, o: &Self) -> bool {
        self.dom == o.dom && self.cod == o.cod && self.cols == o.cols
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom.name(), self.cod.name())?;
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                writeln!(
                    f,
                    "  {} -> {} : {}",
                    self.dom.label(j),
                    self.cod.label(*i),
                    v
                )?;
            }
        }
        Ok(())
    }
}

fn normalize(mut c: Column) -> Column {
    c.sort_by_key(|e| e.0);
    let mut out: Column = Vec::with_capacity(c.len());
    for (i, v) in c {
        match out.last_mut() {
            Some((k, acc)) if *k == i => *acc += &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn accumulate(acc: &mut BTreeMap<usize, Scalar>, i: usize, v: Scalar) {
    match acc.get_mut(&i) {
        Some(x) => *x += &v,
        None => {
            acc.insert(i, v);
        }
    }
}

fn finish(acc: BTreeMap<usize, Scalar>) -> Column {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl Morphism {
    pub(crate) fn raw(dom: GradedObject, cod: GradedObject, cols: Vec<Column>) -> Self {
        debug_assert_eq!(cols.len(), dom.dim());
        Morphism { dom, cod, cols }
    }

    pub fn zero(dom: &GradedObject, cod: &GradedObject) -> Self {
        Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            cols: vec![vec![]; dom.dim()],
        }
    }

    pub fn identity(x: &GradedObject) -> Self {
        let one = x.field().one();
        Morphism {
            dom: x.clone(),
            cod: x.clone(),
            cols: (0..x.dim()).map(|j| vec![(j, one.clone())]).collect(),
        }
    }

    /// Builds a morphism from (row, col, value) triples, checking ranges,
    /// fields and grades. Repeated positions are summed.
    pub fn from_triples(
        dom: &GradedObject,
        cod: &GradedObject,
        triples: Vec<(usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut cols: Vec<Column> = vec![vec![]; dom.dim()];
        for (i, j, v) in triples {
            if i >= cod.dim() || j >= dom.dim() {
                return Err(CategoryError::OutOfRange(format!(
                    "({i}, {j}) in {}x{}",
                    cod.dim(),
                    dom.dim()
                )));
            }
            if v.field() != dom.field() {
                return Err(ScalarError::FieldMismatch(v.field(), dom.field()).into());
            }
            cols[j].push((i, v));
        }
        let cols: Vec<Column> = cols.into_iter().map(normalize).collect();
        let m = Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            cols,
        };
        m.check_grades()?;
        Ok(m)
    }

    /// Builds a morphism column by column; each column is given as (row, value) pairs.
    pub fn from_fn(
        dom: &GradedObject,
        cod: &GradedObject,
        f: impl Fn(usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let cols: Vec<Column> = (0..dom.dim()).map(|j| normalize(f(j))).collect();
        for c in &cols {
            if c.iter().any(|(i, _)| *i >= cod.dim()) {
                return Err(CategoryError::OutOfRange("row index".into()));
            }
        }
        let m = Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            cols,
        };
        m.check_grades()?;
        Ok(m)
    }

    pub fn check_grades(&self) -> Result<()> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, _) in c {
                if self.cod.grade(*i) != self.dom.grade(j) {
                    return Err(CategoryError::NotGradePreserving { row: *i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn dom(&self) -> &GradedObject {
        &self.dom
    }

    pub fn cod(&self) -> &GradedObject {
        &self.cod
    }

    pub fn field(&self) -> Field {
        self.dom.field()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j]
            .iter()
            .find(|(k, _)| *k == i)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut t = vec![];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                t.push((*i, j, v.clone()));
            }
        }
        t
    }

    /// Same matrix with new (equal-dimensional, equally graded) domain and codomain.
    pub fn retype(&self, dom: &GradedObject, cod: &GradedObject) -> Result<Self> {
        if dom.grades() != self.dom.grades() || cod.grades() != self.cod.grades() {
            return Err(CategoryError::TypeMismatch(format!(
                "cannot retype {} -> {} as {} -> {}",
                self.dom.name(),
                self.cod.name(),
                dom.name(),
                cod.name()
            )));
        }
        Ok(Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            cols: self.cols.clone(),
        })
    }

    /// g ∘ self, i.e. first self then g.
    pub fn try_then(&self, g: &Morphism) -> Result<Self> {
        if self.cod != g.dom {
            return Err(CategoryError::TypeMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.dom.name(),
                self.cod.name(),
                g.dom.name(),
                g.cod.name()
            )));
        }
        let cols = self
            .cols
            .iter()
            .map(|c| {
                if c.len() == 1 && g.cols[c[0].0].len() == 1 {
                    let (k, a) = &c[0];
                    let (i, b) = &g.cols[*k][0];
                    let v = a * b;
                    return if v.is_zero() { vec![] } else { vec![(*i, v)] };
                }
                let mut acc = BTreeMap::new();
                for (k, a) in c {
                    for (i, b) in &g.cols[*k] {
                        accumulate(&mut acc, *i, a * b);
                    }
                }
                finish(acc)
            })
            .collect();
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            cols,
        })
    }

    /// g ∘ self; panics on a type mismatch.
    pub fn then(&self, g: &Morphism) -> Self {
        self.try_then(g).unwrap_or_else(|e| panic!("{e}"))
    }

    /// self ∘ f.
    pub fn after(&self, f: &Morphism) -> Self {
        f.then(self)
    }

    pub fn tensor(&self, o: &Morphism) -> Self {
        let dom = self.dom.tensor(&o.dom);
        let cod = self.cod.tensor(&o.cod);
        let (dd, cd) = (o.dom.dim(), o.cod.dim());
        let mut cols = Vec::with_capacity(dom.dim());
        for c1 in &self.cols {
            for c2 in &o.cols {
                let mut col = Vec::with_capacity(c1.len() * c2.len());
                for (i1, a) in c1 {
                    for (i2, b) in c2 {
                        col.push((i1 * cd + i2, a * b));
                    }
                }
                col.retain(|(_, v): &(usize, Scalar)| !v.is_zero());
                cols.push(col);
            }
        }
        debug_assert_eq!(cols.len(), self.dom.dim() * dd);
        Morphism { dom, cod, cols }
    }

    pub fn try_add(&self, o: &Morphism) -> Result<Self> {
        if self.dom != o.dom || self.cod != o.cod {
            return Err(CategoryError::TypeMismatch(
                "sum of morphisms with different types".into(),
            ));
        }
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().cloned());
                normalize(c)
            })
            .collect();
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols,
        })
    }

    pub fn plus(&self, o: &Morphism) -> Self {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, v * s))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols,
        }
    }

    pub fn minus(&self, o: &Morphism) -> Self {
        self.plus(&o.scaled(&-self.field().one()))
    }

    /// First entry where two morphisms of equal type differ, restricted to
    /// admitted columns.
    pub fn first_difference(
        &self,
        o: &Morphism,
        window: Option<Window>,
    ) -> Option<(usize, usize, Scalar, Scalar)> {
        for j in 0..self.dom.dim() {
            if let Some(w) = window {
                if !w.admits(&self.dom, j) {
                    continue;
                }
            }
            if self.cols[j] != o.cols[j] {
                let rows: std::collections::BTreeSet<usize> =
                    self.cols[j].iter().chain(&o.cols[j]).map(|e| e.0).collect();
                for i in rows {
                    let (a, b) = (self.entry(i, j), o.entry(i, j));
                    if a != b {
                        return Some((i, j, a, b));
                    }
                }
            }
        }
        None
    }

    /// Transpose through ev/coev: f^∨ : Y^∨ → X^∨ for f : X → Y.
    pub fn dual(&self) -> Self {
        let dom = self.cod.dual();
        let cod = self.dom.dual();
        let rx = reversal(&self.dom);
        let ry = reversal(&self.cod);
        let mut cols: Vec<Column> = vec![vec![]; dom.dim()];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                cols[ry[*i]].push((rx[j], v.clone()));
            }
        }
        Morphism {
            dom,
            cod,
            cols: cols.into_iter().map(normalize).collect(),
        }
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dom.dim();
        if self.cod.dim() != n {
            return Err(CategoryError::NotInvertible);
        }
        let dense = self.dense();
        let inv = linalg::invert(&dense, self.field()).ok_or(CategoryError::NotInvertible)?;
        let triples = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !inv[i][j].is_zero())
            .map(|(i, j)| (i, j, inv[i][j].clone()))
            .collect();
        let mut m = Morphism::from_triples(&self.cod, &self.dom, triples)?;
        m.cols = m.cols.into_iter().map(normalize).collect();
        Ok(m)
    }

    /// Dense row-major copy.
    pub fn dense(&self) -> Vec<Vec<Scalar>> {
        let z = self.field().zero();
        let mut d = vec![vec![z; self.dom.dim()]; self.cod.dim()];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                d[*i][j] = v.clone();
            }
        }
        d
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.dense(), self.field())
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field().zero();
        for j in 0..self.dom.dim().min(self.cod.dim()) {
            t += &self.entry(j, j);
        }
        t
    }

    /// The scalar of an endomorphism of the unit object.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.dom.is_unit() && self.cod.is_unit() {
            Some(self.entry(0, 0))
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Value {
        let e: Vec<Value> = self
            .triples()
            .into_iter()
            .map(|(i, j, v)| json!([i, j, v.to_json()]))
            .collect();
        Value::Array(e)
    }

    pub fn from_json(dom: &GradedObject, cod: &GradedObject, v: &Value) -> Result<Self> {
        let bad = |m: &str| CategoryError::Json(m.to_string());
        let mut t = vec![];
        for e in v
            .as_array()
            .ok_or_else(|| bad("entries must be an array"))?
        {
            let e = e
                .as_array()
                .filter(|e| e.len() == 3)
                .ok_or_else(|| bad("entry must be [i, j, scalar]"))?;
            let i = e[0].as_u64().ok_or_else(|| bad("row index"))? as usize;
            let j = e[1].as_u64().ok_or_else(|| bad("column index"))? as usize;
            t.push((i, j, Scalar::from_json(&e[2])?));
        }
        Morphism::from_triples(dom, cod, t)
    }
}

/// For each basis index of X, the index of its dual vector in X^∨.
fn reversal(x: &GradedObject) -> Vec<usize> {
    let d = x.dual();
    let rev_dims: Vec<usize> = x.dims.iter().rev().copied().collect();
    (0..x.dim())
        .map(|i| {
            let mi = x.multi_index(i);
            let mut k = 0;
            for (p, &j) in mi.iter().rev().enumerate() {
                k = k * rev_dims[p] + j;
            }
            debug_assert!(k < d.dim());
            k
        })
        .collect()
}

/// Ψ_{X,Y}: x ⊗ y ↦ χ(|x|, |y|) y ⊗ x.
pub fn braiding(x: &GradedObject, y: &GradedObject) -> Morphism {
    let cat = x.cat();
    let (dx, dy) = (x.dim(), y.dim());
    let dom = x.tensor(y);
    let cod = y.tensor(x);
    let mut cols = Vec::with_capacity(dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            cols.push(vec![(j * dx + i, cat.chi(x.grade(i), y.grade(j)))]);
        }
    }
    Morphism::raw(dom, cod, cols)
}

/// The inverse of Ψ_{Y,X}, as a map X ⊗ Y → Y ⊗ X.
pub fn braiding_inv(x: &GradedObject, y: &GradedObject) -> Morphism {
    let cat = x.cat();
    let (dx, dy) = (x.dim(), y.dim());
    let dom = x.tensor(y);
    let cod = y.tensor(x);
    let mut cols = Vec::with_capacity(dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            cols.push(vec![(j * dx + i, cat.chi(y.grade(j), x.grade(i)).inv())]);
        }
    }
    Morphism::raw(dom, cod, cols)
}

/// ev_X : X ⊗ X^∨ → 1.
pub fn ev(x: &GradedObject) -> Morphism {
    let d = x.dual();
    let dom = x.tensor(&d);
    let one = GradedObject::unit(x.cat());
    let r = reversal(x);
    let mut cols: Vec<Column> = vec![vec![]; dom.dim()];
    for (i, &k) in r.iter().enumerate() {
        cols[i * d.dim() + k] = vec![(0, x.field().one())];
    }
    Morphism::raw(dom, one, cols)
}

/// coev_X : 1 → X^∨ ⊗ X.
pub fn coev(x: &GradedObject) -> Morphism {
    let d = x.dual();
    let cod = d.tensor(x);
    let one = GradedObject::unit(x.cat());
    let r = reversal(x);
    let col: Column = r
        .iter()
        .enumerate()
        .map(|(i, &k)| (k * x.dim() + i, x.field().one()))
        .collect();
    Morphism::raw(one, cod, vec![normalize(col)])
}

/// Splits an idempotent e : X → X as e = i ∘ p with p ∘ i = id. The image
/// basis consists of the columns of e chosen by greedy pivoting in basis
/// order; its labels are those of the pivot columns.
pub fn split_idempotent(e: &Morphism, name: &str) -> Result<(GradedObject, Morphism, Morphism)> {
    let x = e.dom().clone();
    if e.cod() != &x || e.then(e) != *e {
        return Err(CategoryError::NotIdempotent);
    }
    let field = x.field();
    let dense = e.dense();
    let n = x.dim();
    // greedy choice of independent columns
    let mut basis_cols: Vec<usize> = vec![];
    let mut echelon: Vec<(usize, Vec<Scalar>)> = vec![]; // (pivot row, reduced vector)
    for j in 0..n {
        let mut v: Vec<Scalar> = (0..n).map(|i| dense[i][j].clone()).collect();
        for (p, r) in &echelon {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for k in 0..n {
                    if !r[k].is_zero() {
                        v[k] = &v[k] - &(&f * &r[k]);
                    }
                }
            }
        }
        if let Some(p) = (0..n).find(|&k| !v[k].is_zero()) {
            let inv = v[p].inv();
            let v: Vec<Scalar> = v.iter().map(|a| a * &inv).collect();
            echelon.push((p, v));
            basis_cols.push(j);
        }
    }
    let basis: Vec<(String, Vec<i64>)> = basis_cols
        .iter()
        .map(|&j| (x.label(j), x.grade(j).0.clone()))
        .collect();
    let img = GradedObject::atom(x.cat(), name, basis);
    let i_map = Morphism::from_fn(&img, &x, |k| e.column(basis_cols[k]).to_vec())?;
    // coordinates: solve i * c = e(v) using pivot rows
    let r = basis_cols.len();
    let pivots: Vec<usize> = echelon.iter().map(|(p, _)| *p).collect();
    let sub: Vec<Vec<Scalar>> = pivots
        .iter()
        .map(|&p| basis_cols.iter().map(|&j| dense[p][j].clone()).collect())
        .collect();
    let sub_inv = linalg::invert(&sub, field).ok_or(CategoryError::NotInvertible)?;
    let mut triples = vec![];
    for j in 0..n {
        for a in 0..r {
            let mut s = field.zero();
            for (b, &p) in pivots.iter().enumerate() {
                if !sub_inv[a][b].is_zero() && !dense[p][j].is_zero() {
                    s += &(&sub_inv[a][b] * &dense[p][j]);
                }
            }
            if !s.is_zero() {
                triples.push((a, j, s));
            }
        }
    }
    let p_map = Morphism::from_triples(&x, &img, triples)?;
    debug_assert!(p_map.then(&i_map) == *e);
    Ok((img, i_map, p_map))
}

/// Exact dense linear algebra over a [`Field`].
pub mod linalg {
    use crate::scalars::{Field, Scalar};

    /// Row reduction in place; returns pivot columns.
    pub fn row_reduce(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
        let rows = m.len();
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..ncols {
            if r >= rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv();
            for k in c..m[r].len() {
                if !m[r][k].is_zero() {
                    m[r][k] = &m[r][k] * &inv;
                }
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in c..m[i].len() {
                        if !m[r][k].is_zero() {
                            let t = &f * &m[r][k];
                            m[i][k] = &m[i][k] - &t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(m: &[Vec<Scalar>], _field: Field) -> usize {
        let mut a = m.to_vec();
        let nc = a.first().map_or(0, Vec::len);
        row_reduce(&mut a, nc).len()
    }

    pub fn invert(m: &[Vec<Scalar>], field: Field) -> Option<Vec<Vec<Scalar>>> {
        let n = m.len();
        let mut a: Vec<Vec<Scalar>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
                r
            })
            .collect();
        let piv = row_reduce(&mut a, n);
        if piv.len() != n {
            return None;
        }
        Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Solves A x = b, returning one solution (free variables set to zero).
    pub fn solve(a: &[Vec<Scalar>], b: &[Scalar], field: Field) -> Option<Vec<Scalar>> {
        let n = a.first().map_or(0, Vec::len);
        let mut m: Vec<Vec<Scalar>> = a
            .iter()
            .zip(b)
            .map(|(r, x)| {
                let mut r = r.clone();
                r.push(x.clone());
                r
            })
            .collect();
        let piv = row_reduce(&mut m, n + 1);
        if piv.contains(&n) {
            return None;
        }
        let mut x = vec![field.zero(); n];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = m[r][n].clone();
        }
        Some(x)
    }

    pub fn determinant(m: &[Vec<Scalar>], field: Field) -> Scalar {
        let n = m.len();
        let mut a = m.to_vec();
        let mut det = field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return field.zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv();
            for i in c + 1..n {
                if !a[i][c].is_zero() {
                    let f = &a[i][c] * &inv;
                    for k in c..n {
                        if !a[c][k].is_zero() {
                            let t = &f * &a[c][k];
                            a[i][k] = &a[i][k] - &t;
                        }
                    }
                }
            }
        }
        det
    }
}

/// Solves F(M) = target for M : dom → cod grade preserving, where F is
/// linear. Returns one solution.
pub fn solve_linear(
    dom: &GradedObject,
    cod: &GradedObject,
    target: &Morphism,
    f: impl Fn(&Morphism) -> Morphism,
) -> Result<Morphism> {
    let field = dom.field();
    let mut unknowns = vec![];
    for j in 0..dom.dim() {
        for i in 0..cod.dim() {
            if dom.grade(j) == cod.grade(i) {
                unknowns.push((i, j));
            }
        }
    }
    let images: Vec<Morphism> = unknowns
        .iter()
        .map(|&(i, j)| f(&Morphism::from_triples(dom, cod, vec![(i, j, field.one())]).unwrap()))
        .collect();
    let mut positions: Vec<(usize, usize)> = vec![];
    let mut index = HashMap::new();
    let mut note = |i: usize, j: usize, positions: &mut Vec<(usize, usize)>| {
        *index.entry((i, j)).or_insert_with(|| {
            positions.push((i, j));
            positions.len() - 1
        })
    };
    let mut entries: Vec<Vec<(usize, Scalar)>> = vec![];
    for img in &images {
        let mut e = vec![];
        for (i, j, v) in img.triples() {
            e.push((note(i, j, &mut positions), v));
        }
        entries.push(e);
    }
    let mut rhs_entries = vec![];
    for (i, j, v) in target.triples() {
        rhs_entries.push((note(i, j, &mut positions), v));
    }
    let rows = positions.len();
    let mut a = vec![vec![field.zero(); unknowns.len()]; rows];
    for (u, e) in entries.iter().enumerate() {
        for (r, v) in e {
            a[*r][u] = v.clone();
        }
    }
    let mut b = vec![field.zero(); rows];
    for (r, v) in rhs_entries {
        b[r] = v;
    }
    let x = linalg::solve(&a, &b, field).ok_or(CategoryError::NoSolution)?;
    let triples = unknowns
        .iter()
        .zip(x)
        .filter(|(_, v)| !v.is_zero())
        .map(|(&(i, j), v)| (i, j, v))
        .collect();
    Morphism::from_triples(dom, cod, triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_cat() -> Arc<Category> {
        let f = Field::RationalFunctions;
        Category::single(f, GradingGroup::integers(), f.q()).unwrap()
    }

    fn obj(cat: &Arc<Category>, name: &str, grades: &[i64]) -> GradedObject {
        GradedObject::atom(
            cat,
            name,
            grades
                .iter()
                .enumerate()
                .map(|(k, g)| (format!("{name}{k}"), vec![*g]))
                .collect(),
        )
    }

    #[test]
    fn braiding_inverse_and_hexagon() {
        let c = line_cat();
        let x = obj(&c, "x", &[0, 1, 2]);
        let y = obj(&c, "y", &[1, -1]);
        let z = obj(&c, "z", &[3]);
        let p = braiding(&x, &y);
        let pi = braiding_inv(&y, &x);
        assert_eq!(p.then(&pi), Morphism::identity(&x.tensor(&y)));
        // Ψ_{X⊗Y,Z} = (Ψ_{X,Z} ⊗ Y)(X ⊗ Ψ_{Y,Z})
        let lhs = braiding(&x.tensor(&y), &z);
        let rhs = Morphism::identity(&x)
            .tensor(&braiding(&y, &z))
            .then(&braiding(&x, &z).tensor(&Morphism::identity(&y)));
        assert_eq!(lhs, rhs);
        // Yang–Baxter
        let ix = Morphism::identity(&x);
        let iy = Morphism::identity(&y);
        let iz = Morphism::identity(&z);
        let l = braiding(&x, &y)
            .tensor(&iz)
            .then(&iy.tensor(&braiding(&x, &z)))
            .then(&braiding(&y, &z).tensor(&ix));
        let r = ix
            .tensor(&braiding(&y, &z))
            .then(&braiding(&x, &z).tensor(&iy))
            .then(&iz.tensor(&braiding(&x, &y)));
        assert_eq!(l, r);
    }

    #[test]
    fn zigzag() {
        let c = line_cat();
        let a = obj(&c, "a", &[0, 1]);
        let b = obj(&c, "b", &[2, 1, 5]);
        let x = a.tensor(&b);
        let d = x.dual();
        let ix = Morphism::identity(&x);
        let id_d = Morphism::identity(&d);
        let z1 = ix.tensor(&coev(&x)).then(&ev(&x).tensor(&ix));
        assert_eq!(z1.retype(&x, &x).unwrap(), ix);
        let z2 = coev(&x).tensor(&id_d).then(&id_d.tensor(&ev(&x)));
        assert_eq!(z2.retype(&d, &d).unwrap(), id_d);
    }

    #[test]
    fn dual_is_transpose_formula() {
        let c = line_cat();
        let x = obj(&c, "x", &[0, 1, 1]);
        let f = c.field();
        let m = Morphism::from_triples(
            &x,
            &x,
            vec![(1, 2, f.q()), (2, 1, f.int(3)), (0, 0, f.one())],
        )
        .unwrap();
        let d = x.dual();
        let via = coev(&x)
            .tensor(&Morphism::identity(&d))
            .then(
                &Morphism::identity(&d)
                    .tensor(&m)
                    .tensor(&Morphism::identity(&d)),
            )
            .then(&Morphism::identity(&d).tensor(&ev(&x)));
        assert_eq!(via.retype(&d, &d).unwrap(), m.dual());
    }

    #[test]
    fn grade_check() {
        let c = line_cat();
        let x = obj(&c, "x", &[0, 1]);
        let r = Morphism::from_triples(&x, &x, vec![(0, 1, c.field().one())]);
        assert!(matches!(r, Err(CategoryError::NotGradePreserving { .. })));
    }

    #[test]
    fn split() {
        let c = Category::trivial(Field::RationalFunctions);
        let f = c.field();
        let x = GradedObject::atom(&c, "x", vec![("a".into(), vec![]), ("b".into(), vec![])]);
        // projection onto span(a + b) along span(a - b)
        let h = f.ratio(1, 2);
        let e = Morphism::from_triples(
            &x,
            &x,
            vec![
                (0, 0, h.clone()),
                (0, 1, h.clone()),
                (1, 0, h.clone()),
                (1, 1, h),
            ],
        )
        .unwrap();
        let (img, i, p) = split_idempotent(&e, "im").unwrap();
        assert_eq!(img.dim(), 1);
        assert_eq!(i.then(&p), Morphism::identity(&img));
        assert_eq!(p.then(&i), e);
    }

    #[test]
    fn solve_linear_finds_inverse() {
        let c = line_cat();
        let f = c.field();
        let x = obj(&c, "x", &[0, 0, 1]);
        let m = Morphism::from_triples(
            &x,
            &x,
            vec![
                (0, 0, f.q()),
                (1, 0, f.one()),
                (1, 1, f.int(2)),
                (2, 2, f.q_pow(3)),
            ],
        )
        .unwrap();
        let s = solve_linear(&x, &x, &Morphism::identity(&x), |t| t.then(&m)).unwrap();
        assert_eq!(s, m.inverse().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let c = line_cat();
        let c2 = Category::from_json(&c.to_json()).unwrap();
        assert_eq!(*c, *c2);
        let x = obj(&c, "x", &[0, 1]).tensor(&obj(&c, "y", &[2]).dual());
        assert_eq!(GradedObject::from_json(&c, &x.to_json()).unwrap(), x);
    }
}
