//! The anyonic and fermionic lines as Hopf algebras in crossed modules over
//! kZ_n, and the quasitriangular group algebras kZ_n.

use crate::category::{GradedObject, Morphism};
use crate::crossed::CrossedModule;
use crate::examples::{anyonic_line, group_algebra_zn};
use crate::hopf::HopfData;
use crate::products::quantum::{braider_o, Quasitriangular};
use crate::products::DyHopf;
use crate::scalars::Scalar;

/// The anyonic line k[x]/x^n moved onto trivially graded spaces, with
/// x^i ◁ g = q^i x^i and x^i ↦ x^i ⊗ g^i. The crossed-module braiding
/// reproduces the anyonic one.
pub fn anyonic_dy(a: &HopfData, n: u32) -> DyHopf {
    let line = anyonic_line(n);
    let cat = a.obj.cat();
    let f = cat.field();
    let zero = cat.group().zero().0;
    let nn = n as usize;
    let basis = (0..nn).map(|i| (line.obj.label(i), zero.clone())).collect();
    let b = GradedObject::atom(cat, "B", basis);
    let one = GradedObject::unit(cat);
    let bb = b.tensor(&b);
    let mv = |m: &Morphism, d: &GradedObject, c: &GradedObject| {
        Morphism::from_triples(d, c, m.triples()).unwrap()
    };
    let mut h = HopfData::hopf(
        "B",
        b.clone(),
        mv(line.mu().unwrap(), &bb, &b),
        mv(line.eta().unwrap(), &one, &b),
        mv(line.delta().unwrap(), &b, &bb),
        mv(line.eps().unwrap(), &b, &one),
        mv(line.s().unwrap(), &b, &b),
    );
    h.skew = Some(mv(line.s_inv().unwrap(), &b, &b));
    let na = a.obj.dim();
    let action = Morphism::from_fn(&b.tensor(&a.obj), &b, |j| {
        let (i, k) = (j / na, j % na);
        vec![(i, f.q_pow((i * k) as i64))]
    })
    .unwrap();
    let coaction =
        Morphism::from_fn(&b, &b.tensor(&a.obj), |i| vec![(i * na + i % na, f.one())]).unwrap();
    DyHopf::new(a, h, CrossedModule::right("B", action, coaction)).expect("crossed braider")
}

/// The fermionic line {1, x} over kZ_2: x ◁ g = -x, x ↦ x ⊗ g, x primitive,
/// x² = 0.
pub fn fermionic_line(a: &HopfData) -> DyHopf {
    anyonic_dy(a, 2)
}

/// kZ_n with Δ̄ = Δ and R = (1/n) Σ q^{ab} g^a ⊗ g^b.
pub fn kzn_quantum_group(n: u32) -> Quasitriangular {
    let mut h = group_algebra_zn(n);
    h.name = format!("kZ{n}");
    let f = h.obj.field();
    let one = h.unit_obj();
    let nn = n as usize;
    let inv_n = f.ratio(1, n as i64);
    let r = Morphism::from_fn(&one, &h.obj.tensor(&h.obj), |_| {
        (0..nn * nn)
            .map(|j| (j, f.q_pow(((j / nn) * (j % nn)) as i64) * inv_n.clone()))
            .collect()
    })
    .unwrap();
    let db = h.delta().unwrap().clone();
    Quasitriangular::new(h, db, r).expect("invertible R")
}

/// The fermionic line as a quasitriangular Hopf algebra in C_O(kZ_2), with
/// R = 1 ⊗ 1 + α x ⊗ x and Δ̄ = Ψ^{-1} ∘ Δ. Returns it with its kZ_2-action.
pub fn fermion_quantum(qa: &Quasitriangular, alpha: Scalar) -> (Quasitriangular, Morphism) {
    let b = fermionic_line(&qa.h);
    let action = b.module.action.clone();
    let mut h = b.hopf;
    h.braider = braider_o(qa, &[&action]).expect("module in C_O");
    let one = h.unit_obj();
    let f = one.field();
    let r = Morphism::from_triples(
        &one,
        &h.obj.tensor(&h.obj),
        vec![(0, 0, f.one()), (3, 0, alpha)],
    )
    .unwrap();
    let db = h.delta().unwrap().then(&h.psi_inv());
    (
        Quasitriangular::new(h, db, r).expect("invertible R"),
        action,
    )
}
