//! Braided lines, anyonic lines, the dual line with its pairing, and group
//! algebras of cyclic groups.

use std::sync::Arc;

use crate::category::{Category, GradedObject, GradingGroup, Morphism, Window};
use crate::hopf::HopfData;
use crate::scalars::{Field, Scalar};

/// Category of Γ-graded spaces with bicharacter given on generators.
pub fn bichar_category(field: Field, group: GradingGroup, gens: Vec<Vec<Scalar>>) -> Arc<Category> {
    Category::new(field, group, gens).expect("valid bicharacter")
}

/// Z-graded spaces over Q(q) with χ(a, b) = q^{ab}.
pub fn line_category() -> Arc<Category> {
    let f = Field::RationalFunctions;
    Category::single(f, GradingGroup::integers(), f.q()).unwrap()
}

/// Z_n-graded spaces over Q[q]/Φ_n with χ(a, b) = q^{ab}.
pub fn anyonic_category(n: u32) -> Arc<Category> {
    let f = Field::Cyclotomic(n);
    Category::single(f, GradingGroup::cyclic(n), f.q()).unwrap()
}

/// k[x]/(x^{top+1}) with x of grade `sign`, Δx = x⊗1 + 1⊗x. Products leaving
/// the window vanish, so the axioms hold exactly on window-valid inputs.
fn line_on(cat: &Arc<Category>, name: &str, var: &str, sign: i64, top: usize) -> HopfData {
    let f = cat.field();
    let basis: Vec<(String, Vec<i64>)> = (0..=top)
        .map(|m| {
            let l = match m {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{m}"),
            };
            (l, vec![sign * m as i64])
        })
        .collect();
    let a = GradedObject::atom(cat, name, basis);
    let d = top + 1;
    let one = GradedObject::unit(cat);
    let aa = a.tensor(&a);
    let mu = Morphism::from_fn(&aa, &a, |j| {
        let (p, r) = (j / d, j % d);
        if p + r <= top {
            vec![(p + r, f.one())]
        } else {
            vec![]
        }
    })
    .unwrap();
    let eta = Morphism::from_triples(&one, &a, vec![(0, 0, f.one())]).unwrap();
    let delta = Morphism::from_fn(&a, &aa, |m| {
        (0..=m)
            .map(|k| (k * d + (m - k), f.q_binomial(m as i64, k as i64).unwrap()))
            .collect()
    })
    .unwrap();
    let eps = Morphism::from_triples(&a, &one, vec![(0, 0, f.one())]).unwrap();
    let s = Morphism::from_fn(&a, &a, |m| {
        let m = m as i64;
        let sign = if m % 2 == 0 { f.one() } else { -f.one() };
        vec![(m as usize, sign * f.q_pow(m * (m - 1) / 2))]
    })
    .unwrap();
    let sinv = s.inverse().unwrap();
    let mut h = HopfData::hopf(name, a, mu, eta, delta, eps, s);
    h.skew = Some(sinv);
    h
}

/// The braided line k[x] over Q(q), truncated to degrees ≤ window.
pub fn braided_line(window: usize) -> HopfData {
    let cat = line_category();
    let mut h = line_on(&cat, "A", "x", 1, window);
    h.window = Some(Window {
        max_degree: window as i64,
    });
    h
}

/// The dual line k[y] (y of grade -1) in the same category, truncated.
pub fn dual_line(window: usize) -> HopfData {
    let cat = line_category();
    let mut h = line_on(&cat, "H", "y", -1, window);
    h.window = Some(Window {
        max_degree: window as i64,
    });
    h
}

/// Both lines on a common category so that they can be paired.
pub fn line_pair(window: usize) -> (HopfData, HopfData) {
    let cat = line_category();
    let w = Some(Window {
        max_degree: window as i64,
    });
    let mut a = line_on(&cat, "A", "x", 1, window);
    let mut h = line_on(&cat, "H", "y", -1, window);
    a.window = w;
    h.window = w;
    (a, h)
}

/// ρ(x^m ⊗ y^n) = δ_{mn} [n]!.
pub fn line_pairing(a: &HopfData, h: &HopfData) -> Morphism {
    let f = a.obj.field();
    let (da, dh) = (a.obj.dim(), h.obj.dim());
    let one = GradedObject::unit(a.obj.cat());
    let t = (0..da.min(dh))
        .map(|m| (0, m * dh + m, f.q_factorial(m as u32)))
        .collect();
    Morphism::from_triples(&a.obj.tensor(&h.obj), &one, t).unwrap()
}

/// The anyonic line k[x]/x^n over Q[q]/Φ_n, an honest Hopf algebra.
pub fn anyonic_line(n: u32) -> HopfData {
    let cat = anyonic_category(n);
    line_on(&cat, "A", "x", 1, n as usize - 1)
}

/// Group algebra of Z_n over Q[q]/Φ_n in trivially graded spaces.
pub fn group_algebra_zn(n: u32) -> HopfData {
    let f = Field::Cyclotomic(n);
    group_algebra_zn_over(&Category::trivial(f), n, "kZ")
}

pub fn group_algebra_zn_over(cat: &Arc<Category>, n: u32, name: &str) -> HopfData {
    let f = cat.field();
    let zero = cat.group().zero().0;
    let nn = n as usize;
    let basis = (0..nn)
        .map(|k| {
            let l = match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            };
            (l, zero.clone())
        })
        .collect();
    let a = GradedObject::atom(cat, name, basis);
    let one = GradedObject::unit(cat);
    let aa = a.tensor(&a);
    let mu = Morphism::from_fn(&aa, &a, |j| vec![((j / nn + j % nn) % nn, f.one())]).unwrap();
    let eta = Morphism::from_triples(&one, &a, vec![(0, 0, f.one())]).unwrap();
    let delta = Morphism::from_fn(&a, &aa, |k| vec![(k * nn + k, f.one())]).unwrap();
    let eps = Morphism::from_fn(&a, &one, |_| vec![(0, f.one())]).unwrap();
    let s = Morphism::from_fn(&a, &a, |k| vec![((nn - k) % nn, f.one())]).unwrap();
    let mut h = HopfData::hopf(name, a, mu, eta, delta, eps, s.clone());
    h.skew = Some(s);
    h
}
