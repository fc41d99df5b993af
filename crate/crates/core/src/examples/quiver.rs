//! Representations of the Z-quiver with arrows x_n : π(n) → π(n+1) and
//! y_n : π(n) → π(n-1), and their conversion into crossed modules over the
//! braided line.

use crate::category::{GradedObject, Morphism};
use crate::crossed::CrossedModule;
use crate::hopf::{HopfData, HopfError, Result};
use crate::report::Report;
use crate::scalars::{Field, Scalar};

pub type Mat = Vec<Vec<Scalar>>;

/// Spaces π(lo), ..., π(lo + dims.len() - 1). `x[k]` maps node lo+k to lo+k+1
/// and `y[k]` maps node lo+k+1 to lo+k. With `vacuum` set, π(n) = 0 for
/// n < lo, so the relation is also required at lo.
#[derive(Clone, Debug)]
pub struct QuiverRep {
    pub field: Field,
    pub lo: i64,
    pub dims: Vec<usize>,
    pub x: Vec<Mat>,
    pub y: Vec<Mat>,
    pub vacuum: bool,
}

fn zeros(f: Field, r: usize, c: usize) -> Mat {
    vec![vec![f.zero(); c]; r]
}

fn mat_mul(f: Field, a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(f.zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

impl QuiverRep {
    pub fn zero(field: Field, lo: i64, nodes: usize) -> Self {
        QuiverRep {
            field,
            lo,
            dims: vec![0; nodes],
            x: vec![vec![]; nodes.saturating_sub(1)],
            y: vec![vec![]; nodes.saturating_sub(1)],
            vacuum: true,
        }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    /// x_n as a matrix π(n) → π(n+1), or None outside the window.
    fn x_at(&self, n: i64) -> Option<Mat> {
        let k = n - self.lo;
        if k < 0 || n >= self.hi() {
            return None;
        }
        let k = k as usize;
        if self.x[k].is_empty() {
            return Some(zeros(self.field, self.dims[k + 1], self.dims[k]));
        }
        Some(self.x[k].clone())
    }

    fn y_at(&self, n: i64) -> Option<Mat> {
        let k = n - self.lo;
        if k < 1 || n > self.hi() {
            return None;
        }
        let k = k as usize;
        if self.y[k - 1].is_empty() {
            return Some(zeros(self.field, self.dims[k - 1], self.dims[k]));
        }
        Some(self.y[k - 1].clone())
    }

    fn dim(&self, n: i64) -> usize {
        let k = n - self.lo;
        if k < 0 || n > self.hi() {
            0
        } else {
            self.dims[k as usize]
        }
    }
}

/// Checks y_{n+1} x_n = q x_{n-1} y_n + q(q^{2n} - 1) at every node where both
/// sides are defined.
pub fn quiver_rep_check(rep: &QuiverRep) -> Report {
    let f = rep.field;
    let mut r = Report::new("quiver representation");
    for (k, &d) in rep.dims.iter().enumerate() {
        let n = rep.lo + k as i64;
        if n == rep.hi() {
            continue;
        }
        let lhs = mat_mul(
            f,
            &rep.y_at(n + 1).unwrap(),
            &rep.x_at(n).unwrap(),
            rep.dim(n + 1),
        );
        let below = match (rep.x_at(n - 1), rep.y_at(n)) {
            (Some(x), Some(y)) => mat_mul(f, &x, &y, rep.dim(n - 1)),
            _ if rep.vacuum => zeros(f, d, d),
            _ => continue,
        };
        let c = f.q() * &(f.q_pow(2 * n) - f.one());
        let ok = (0..d).all(|i| {
            (0..d).all(|j| {
                let id = if i == j { c.clone() } else { f.zero() };
                lhs[i][j] == f.q() * &below[i][j] + id
            })
        });
        r.condition(&format!("quiver.relation[{n}]"), ok, None);
    }
    r
}

/// One-dimensional spaces at nodes 0..nodes with x_n = 1 and y_n solved from
/// the relation starting from y_0 = 0.
pub fn solved_rep(field: Field, nodes: usize) -> QuiverRep {
    let mut y = vec![];
    let mut prev = field.zero();
    for n in 0..nodes.saturating_sub(1) as i64 {
        let next = field.q() * &prev + field.q() * &(field.q_pow(2 * n) - field.one());
        y.push(vec![vec![next.clone()]]);
        prev = next;
    }
    QuiverRep {
        field,
        lo: 0,
        dims: vec![1; nodes],
        x: vec![vec![vec![field.one()]]; nodes.saturating_sub(1)],
        y,
        vacuum: true,
    }
}

/// The right-right crossed module over the truncated line `a` with
/// v ◁ x = x_n v and v ↦ Σ_m Y^m v / [m]! ⊗ x^m, where Y = -q^{-1} y.
pub fn rep_to_crossed(rep: &QuiverRep, a: &HopfData) -> Result<CrossedModule> {
    if !rep.vacuum {
        return Err(HopfError::Invalid(
            "rep_to_crossed needs a vacuum representation".into(),
        ));
    }
    let f = rep.field;
    if a.obj.field() != f {
        return Err(HopfError::Invalid("field mismatch".into()));
    }
    let mut basis = vec![];
    let mut offset = vec![];
    for (k, &d) in rep.dims.iter().enumerate() {
        let n = rep.lo + k as i64;
        offset.push(basis.len());
        for i in 0..d {
            basis.push((format!("v{n}.{i}"), vec![n]));
        }
    }
    let v = GradedObject::atom(a.obj.cat(), "V", basis);
    let da = a.obj.dim();
    let nodes: Vec<(usize, usize)> = rep
        .dims
        .iter()
        .enumerate()
        .flat_map(|(k, &d)| (0..d).map(move |i| (k, i)))
        .collect();
    let node_of = |j: usize| nodes[j];
    // images of a basis vector under repeated application of a family of maps
    let iterate = |k: usize,
                   i: usize,
                   step: &dyn Fn(i64) -> Option<Mat>,
                   dir: i64,
                   times: usize|
     -> Option<(usize, Vec<Scalar>)> {
        let mut node = k as i64;
        let mut vec: Vec<Scalar> = (0..rep.dims[k])
            .map(|r| if r == i { f.one() } else { f.zero() })
            .collect();
        for _ in 0..times {
            let m = step(rep.lo + node)?;
            vec = m
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&vec)
                        .fold(f.zero(), |acc, (a, b)| acc + a * b)
                })
                .collect();
            node += dir;
            if node < 0 || node as usize >= rep.dims.len() {
                return None;
            }
        }
        Some((node as usize, vec))
    };
    let xs = |n: i64| rep.x_at(n);
    let ys = |n: i64| rep.y_at(n);
    let va = v.tensor(&a.obj);
    let action = Morphism::from_fn(&va, &v, |col| {
        let (j, p) = (col / da, col % da);
        let (k, i) = node_of(j);
        match iterate(k, i, &xs, 1, p) {
            Some((node, vec)) => vec
                .into_iter()
                .enumerate()
                .map(|(r, s)| (offset[node] + r, s))
                .collect(),
            None => vec![],
        }
    })?;
    let big_y = -f.q_pow(-1);
    let coaction = Morphism::from_fn(&v, &va, |j| {
        let (k, i) = node_of(j);
        let mut out = vec![];
        for m in 0..da {
            if let Some((node, vec)) = iterate(k, i, &ys, -1, m) {
                let c = big_y.pow(m as i64) * f.q_factorial(m as u32).inv();
                for (r, s) in vec.into_iter().enumerate() {
                    out.push(((offset[node] + r) * da + m, &s * &c));
                }
            }
        }
        out
    })?;
    Ok(CrossedModule::right("quiver", action, coaction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::check_crossed;
    use crate::examples::lines::braided_line;

    #[test]
    fn zero_and_solved_reps() {
        let f = Field::RationalFunctions;
        assert!(quiver_rep_check(&QuiverRep::zero(f, 0, 4)).passed());
        let r = solved_rep(f, 4);
        let rep = quiver_rep_check(&r);
        assert!(rep.passed() && rep.outcomes.len() == 3);
        assert_eq!(r.y[1][0][0], f.q_pow(3) - f.q());
        let mut bad = r.clone();
        bad.y[2][0][0] = &bad.y[2][0][0] + &f.one();
        let fails: Vec<_> = quiver_rep_check(&bad)
            .failures()
            .iter()
            .map(|o| o.name.clone())
            .collect();
        assert_eq!(fails, vec!["quiver.relation[2]".to_string()]);
    }

    #[test]
    fn vacuum_reps_are_crossed_modules() {
        let f = Field::RationalFunctions;
        let a = braided_line(3);
        let x = rep_to_crossed(&solved_rep(f, 4), &a).unwrap();
        let r = check_crossed(&a, &x).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        let mut bad = solved_rep(f, 4);
        bad.y[1][0][0] = f.one();
        let r = check_crossed(&a, &rep_to_crossed(&bad, &a).unwrap()).unwrap();
        assert!(!r.passed());
    }
}
