//! Algebras, coalgebras, bialgebras and Hopf algebras in a braided category,
//! with their axioms, opposites, duals, pairings, modules and comodules.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::category::{
    coev, ev, solve_linear, Braider, Category, CategoryError, GradedObject, Morphism, Window,
};
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("structure map `{0}` is missing")]
    Missing(&'static str),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Variant {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "algebra" => Some(Variant::Algebra),
            "coalgebra" => Some(Variant::Coalgebra),
            "bialgebra" => Some(Variant::Bialgebra),
            "hopf" => Some(Variant::Hopf),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Algebra => "algebra",
            Variant::Coalgebra => "coalgebra",
            Variant::Bialgebra => "bialgebra",
            Variant::Hopf => "hopf",
        }
    }
}

/// Structure maps on an object, living in the braided category described by
/// `braider`. `window`, when set, restricts axiom checks to inputs of total
/// degree inside the window (for truncations of infinite-dimensional
/// algebras).
#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: String,
    pub obj: GradedObject,
    pub mu: Option<Morphism>,
    pub eta: Option<Morphism>,
    pub delta: Option<Morphism>,
    pub eps: Option<Morphism>,
    pub antipode: Option<Morphism>,
    pub skew: Option<Morphism>,
    pub braider: Braider,
    pub window: Option<Window>,
}

fn id(x: &GradedObject) -> Morphism {
    Morphism::identity(x)
}

impl HopfData {
    pub fn hopf(
        name: &str,
        obj: GradedObject,
        mu: Morphism,
        eta: Morphism,
        delta: Morphism,
        eps: Morphism,
        antipode: Morphism,
    ) -> Self {
        HopfData {
            name: name.into(),
            obj,
            mu: Some(mu),
            eta: Some(eta),
            delta: Some(delta),
            eps: Some(eps),
            antipode: Some(antipode),
            skew: None,
            braider: Braider::plain(),
            window: None,
        }
    }

    pub fn mu(&self) -> Result<&Morphism> {
        self.mu.as_ref().ok_or(HopfError::Missing("mu"))
    }

    pub fn eta(&self) -> Result<&Morphism> {
        self.eta.as_ref().ok_or(HopfError::Missing("eta"))
    }

    pub fn delta(&self) -> Result<&Morphism> {
        self.delta.as_ref().ok_or(HopfError::Missing("Delta"))
    }

    pub fn eps(&self) -> Result<&Morphism> {
        self.eps.as_ref().ok_or(HopfError::Missing("eps"))
    }

    pub fn s(&self) -> Result<&Morphism> {
        self.antipode.as_ref().ok_or(HopfError::Missing("S"))
    }

    pub fn s_inv(&self) -> Result<&Morphism> {
        self.skew.as_ref().ok_or(HopfError::Missing("Sinv"))
    }

    pub fn id(&self) -> Morphism {
        id(&self.obj)
    }

    pub fn unit_obj(&self) -> GradedObject {
        GradedObject::unit(self.obj.cat())
    }

    pub fn psi(&self) -> Morphism {
        self.braider.psi(&self.obj, &self.obj)
    }

    pub fn psi_inv(&self) -> Morphism {
        self.braider.psi_inv(&self.obj, &self.obj)
    }

    /// The richest variant whose structure maps are all present.
    pub fn variant(&self) -> Variant {
        let alg = self.mu.is_some() && self.eta.is_some();
        let coalg = self.delta.is_some() && self.eps.is_some();
        match (alg, coalg) {
            (true, true) if self.antipode.is_some() => Variant::Hopf,
            (true, true) => Variant::Bialgebra,
            (false, true) => Variant::Coalgebra,
            _ => Variant::Algebra,
        }
    }

    /// Checks every axiom of the requested variant.
    pub fn check(&self, variant: Variant) -> Result<Report> {
        let mut r = Report::new(format!("{} as {}", self.name, variant.as_str()));
        let w = self.window;
        let a = self.id();
        if matches!(
            variant,
            Variant::Algebra | Variant::Bialgebra | Variant::Hopf
        ) {
            let (mu, eta) = (self.mu()?, self.eta()?);
            r.identity("algebra.unit-left", &eta.tensor(&a).then(mu), &a, w);
            r.identity("algebra.unit-right", &a.tensor(eta).then(mu), &a, w);
            r.identity(
                "algebra.associativity",
                &mu.tensor(&a).then(mu),
                &a.tensor(mu).then(mu),
                w,
            );
        }
        if matches!(
            variant,
            Variant::Coalgebra | Variant::Bialgebra | Variant::Hopf
        ) {
            let (de, ep) = (self.delta()?, self.eps()?);
            r.identity("coalgebra.counit-left", &de.then(&ep.tensor(&a)), &a, w);
            r.identity("coalgebra.counit-right", &de.then(&a.tensor(ep)), &a, w);
            r.identity(
                "coalgebra.coassociativity",
                &de.then(&de.tensor(&a)),
                &de.then(&a.tensor(de)),
                w,
            );
        }
        if matches!(variant, Variant::Bialgebra | Variant::Hopf) {
            let (mu, eta, de, ep) = (self.mu()?, self.eta()?, self.delta()?, self.eps()?);
            let lhs = mu.then(de);
            let rhs = de
                .tensor(de)
                .then(&a.tensor(&self.psi()).tensor(&a))
                .then(&mu.tensor(mu));
            r.identity("bialgebra.comultiplicative", &lhs, &rhs, w);
            r.identity("bialgebra.unit", &eta.then(de), &eta.tensor(eta), w);
            r.identity("bialgebra.counit", &mu.then(ep), &ep.tensor(ep), w);
            r.identity(
                "bialgebra.counit-unit",
                &eta.then(ep),
                &id(&self.unit_obj()),
                w,
            );
        }
        if variant == Variant::Hopf {
            let (mu, de, s) = (self.mu()?, self.delta()?, self.s()?);
            let ee = self.eps()?.then(self.eta()?);
            r.identity(
                "antipode.convolution-inverse-left",
                &de.then(&s.tensor(&a)).then(mu),
                &ee,
                w,
            );
            r.identity(
                "antipode.convolution-inverse-right",
                &de.then(&a.tensor(s)).then(mu),
                &ee,
                w,
            );
            r.identity(
                "antipode.anti-multiplicative",
                &mu.then(s),
                &s.tensor(s).then(&self.psi()).then(mu),
                w,
            );
            r.identity(
                "antipode.anti-comultiplicative",
                &s.then(de),
                &de.then(&self.psi()).then(&s.tensor(s)),
                w,
            );
            if let Some(si) = &self.skew {
                let lhs = de.then(&si.tensor(&a)).then(&self.psi_inv()).then(mu);
                r.identity("skew-antipode.convolution-inverse", &lhs, &ee, w);
                r.identity("skew-antipode.inverse", &si.then(s), &a, w);
            }
        }
        Ok(r)
    }

    /// The same structure with the skew antipode filled in by solving its
    /// defining linear system.
    pub fn with_skew(mut self) -> Result<Self> {
        self.skew = Some(skew_antipode(&self)?);
        Ok(self)
    }
}

/// Solves μ ∘ Ψ^{-1} ∘ (T ⊗ id) ∘ Δ = η ∘ ε for T (the antipode of the
/// multiplication-opposite).
pub fn skew_antipode(h: &HopfData) -> Result<Morphism> {
    let (mu, de) = (h.mu()?.clone(), h.delta()?.clone());
    let target = h.eps()?.then(h.eta()?);
    let a = h.id();
    let pi = h.psi_inv();
    let t = solve_linear(&h.obj, &h.obj, &target, |x| {
        de.then(&x.tensor(&a)).then(&pi).then(&mu)
    })?;
    Ok(t)
}

/// Convolution f * g = μ_A ∘ (f ⊗ g) ∘ Δ_C for f, g : C → A.
pub fn convolution(delta_c: &Morphism, mu_a: &Morphism, f: &Morphism, g: &Morphism) -> Morphism {
    delta_c.then(&f.tensor(g)).then(mu_a)
}

/// The convolution inverse of f : C → A, if it exists.
pub fn convolution_inverse(c: &HopfData, a: &HopfData, f: &Morphism) -> Result<Morphism> {
    let (dc, ma) = (c.delta()?.clone(), a.mu()?.clone());
    let target = c.eps()?.then(a.eta()?);
    let g = solve_linear(&c.obj, &a.obj, &target, |x| convolution(&dc, &ma, f, x))?;
    if convolution(&dc, &ma, &g, f) != target {
        return Err(HopfError::Invalid(
            "only one-sided convolution inverse".into(),
        ));
    }
    Ok(g)
}

/// Braided tensor product algebra: μ = (μ_A ⊗ μ_B)(A ⊗ Ψ_{B,A} ⊗ B).
pub fn tensor_algebra(a: &HopfData, b: &HopfData) -> Result<HopfData> {
    let obj = a.obj.tensor(&b.obj);
    let psi_ba = a.braider.psi(&b.obj, &a.obj);
    let mu = a
        .id()
        .tensor(&psi_ba)
        .tensor(&b.id())
        .then(&a.mu()?.tensor(b.mu()?));
    let eta = a.eta()?.tensor(b.eta()?);
    Ok(HopfData {
        name: format!("{}⊗{}", a.name, b.name),
        obj,
        mu: Some(mu),
        eta: Some(eta),
        delta: None,
        eps: None,
        antipode: None,
        skew: None,
        braider: a.braider.clone(),
        window: a.window,
    })
}

/// A^op: μ ∘ Ψ^{-1}, living in the reverse category; antipode and skew
/// antipode trade places.
pub fn op_mult(h: &HopfData) -> Result<HopfData> {
    let mu = h.psi_inv().then(h.mu()?);
    Ok(HopfData {
        name: format!("{}^op", h.name),
        mu: Some(mu),
        antipode: h.skew.clone(),
        skew: h.antipode.clone(),
        braider: h.braider.inverse(),
        ..h.clone()
    })
}

/// A_op: Ψ^{-1} ∘ Δ, living in the reverse category.
pub fn op_comult(h: &HopfData) -> Result<HopfData> {
    let delta = h.delta()?.then(&h.psi_inv());
    Ok(HopfData {
        name: format!("{}_op", h.name),
        delta: Some(delta),
        antipode: h.skew.clone(),
        skew: h.antipode.clone(),
        braider: h.braider.inverse(),
        ..h.clone()
    })
}

/// The dual Hopf algebra on A^∨: multiplication Δ^∨, comultiplication μ^∨.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData> {
    let obj = h.obj.dual();
    let mut braider = h.braider.clone();
    if !h.braider.is_plain() {
        braider = braider.with(h.psi().dual(), h.psi_inv().dual());
    }
    Ok(HopfData {
        name: format!("{}^", h.name),
        obj,
        mu: h.delta.as_ref().map(Morphism::dual),
        eta: h.eps.as_ref().map(Morphism::dual),
        delta: h.mu.as_ref().map(Morphism::dual),
        eps: h.eta.as_ref().map(Morphism::dual),
        antipode: h.antipode.as_ref().map(Morphism::dual),
        skew: h.skew.as_ref().map(Morphism::dual),
        braider,
        window: h.window,
    })
}

/// Pairings ρ : A ⊗ H → 1 and copairings R : 1 → A ⊗ H.
pub mod pairing {
    use super::*;

    /// ρ·ρ' = (ρ ⊗ ρ')(A ⊗ Ψ_{A,H} ⊗ H)(Δ_A ⊗ Δ_H).
    pub fn product(a: &HopfData, h: &HopfData, r1: &Morphism, r2: &Morphism) -> Result<Morphism> {
        let psi = a.braider.psi(&a.obj, &h.obj);
        Ok(a.delta()?
            .tensor(h.delta()?)
            .then(&a.id().tensor(&psi).tensor(&h.id()))
            .then(&r1.tensor(r2)))
    }

    /// ρ ~· ρ' = ρ(A ⊗ ρ' ⊗ H)(Δ_A ⊗ Δ_H): ρ' pairs the inner legs.
    pub fn nested_product(
        a: &HopfData,
        h: &HopfData,
        r1: &Morphism,
        r2: &Morphism,
    ) -> Result<Morphism> {
        Ok(a.delta()?
            .tensor(h.delta()?)
            .then(&a.id().tensor(r2).tensor(&h.id()))
            .then(r1))
    }

    pub fn unit(a: &HopfData, h: &HopfData) -> Result<Morphism> {
        Ok(a.eps()?.tensor(h.eps()?))
    }

    /// ρ^-: the inverse for the product `·`.
    pub fn inverse(a: &HopfData, h: &HopfData, rho: &Morphism) -> Result<Morphism> {
        let dom = a.obj.tensor(&h.obj);
        let target = unit(a, h)?;
        let x = solve_linear(&dom, rho.cod(), &target, |x| product(a, h, rho, x).unwrap())?;
        if product(a, h, &x, rho)? != target {
            return Err(HopfError::Invalid(
                "pairing has only a one-sided inverse".into(),
            ));
        }
        Ok(x)
    }

    /// ρ~: the inverse for the nested product `~·`.
    pub fn nested_inverse(a: &HopfData, h: &HopfData, rho: &Morphism) -> Result<Morphism> {
        let dom = a.obj.tensor(&h.obj);
        let target = unit(a, h)?;
        let x = solve_linear(&dom, rho.cod(), &target, |x| {
            nested_product(a, h, rho, x).unwrap()
        })?;
        if nested_product(a, h, &x, rho)? != target {
            return Err(HopfError::Invalid(
                "pairing has only a one-sided inverse".into(),
            ));
        }
        Ok(x)
    }

    /// ρ̄ = ρ^- ∘ Ψ^{-1} : H ⊗ A → 1.
    pub fn bar(a: &HopfData, h: &HopfData, rho: &Morphism) -> Result<Morphism> {
        let rm = inverse(a, h, rho)?;
        Ok(a.braider.psi_inv(&h.obj, &a.obj).then(&rm))
    }

    /// ρ^{*2}(a ⊗ a' ⊗ h ⊗ h') = ρ(a ⊗ h') ρ(a' ⊗ h).
    pub fn nested_square(a: &HopfData, h: &HopfData, rho: &Morphism) -> Morphism {
        a.id().tensor(rho).tensor(&h.id()).then(rho)
    }

    /// Bialgebra pairing axioms: μ_A dual to Δ_H, Δ_A dual to μ_H, units to counits.
    pub fn check(a: &HopfData, h: &HopfData, rho: &Morphism) -> Result<Report> {
        let mut r = Report::new(format!("pairing {}⊗{}", a.name, h.name));
        let w = a.window.or(h.window);
        let sq = nested_square(a, h, rho);
        let (ia, ih) = (a.id(), h.id());
        r.identity(
            "pairing.product-coproduct",
            &a.mu()?.tensor(&ih).then(rho),
            &ia.tensor(&ia).tensor(h.delta()?).then(&sq),
            w,
        );
        r.identity(
            "pairing.coproduct-product",
            &a.delta()?.tensor(&ih).tensor(&ih).then(&sq),
            &ia.tensor(h.mu()?).then(rho),
            w,
        );
        r.identity(
            "pairing.unit-left",
            &a.eta()?.tensor(&ih).then(rho),
            h.eps()?,
            w,
        );
        r.identity(
            "pairing.unit-right",
            &ia.tensor(h.eta()?).then(rho),
            a.eps()?,
            w,
        );
        Ok(r)
    }

    /// R·R' = (μ ⊗ μ)(A ⊗ Ψ_{H,A} ⊗ H)(R ⊗ R').
    pub fn co_product(
        a: &HopfData,
        h: &HopfData,
        r1: &Morphism,
        r2: &Morphism,
    ) -> Result<Morphism> {
        let psi = a.braider.psi(&h.obj, &a.obj);
        Ok(r1
            .tensor(r2)
            .then(&a.id().tensor(&psi).tensor(&h.id()))
            .then(&a.mu()?.tensor(h.mu()?)))
    }

    /// R ~· R' = (μ_A ⊗ μ_H)(A ⊗ R' ⊗ H) R.
    pub fn co_nested_product(
        a: &HopfData,
        h: &HopfData,
        r1: &Morphism,
        r2: &Morphism,
    ) -> Result<Morphism> {
        Ok(r1
            .then(&a.id().tensor(r2).tensor(&h.id()))
            .then(&a.mu()?.tensor(h.mu()?)))
    }

    pub fn co_unit(a: &HopfData, h: &HopfData) -> Result<Morphism> {
        Ok(a.eta()?.tensor(h.eta()?))
    }

    /// R^-: inverse of a copairing for the product `·`.
    pub fn co_inverse(a: &HopfData, h: &HopfData, r: &Morphism) -> Result<Morphism> {
        let cod = a.obj.tensor(&h.obj);
        let target = co_unit(a, h)?;
        let x = solve_linear(r.dom(), &cod, &target, |x| co_product(a, h, r, x).unwrap())?;
        if co_product(a, h, &x, r)? != target {
            return Err(HopfError::Invalid(
                "copairing has only a one-sided inverse".into(),
            ));
        }
        Ok(x)
    }

    /// R^{*2} = (A ⊗ R ⊗ H) R.
    pub fn co_nested_square(a: &HopfData, h: &HopfData, r: &Morphism) -> Morphism {
        r.then(&a.id().tensor(r).tensor(&h.id()))
    }

    /// Copairing axioms (pairing axioms with inputs and outputs exchanged).
    pub fn check_copairing(a: &HopfData, h: &HopfData, r: &Morphism) -> Result<Report> {
        let mut rep = Report::new(format!("copairing {}⊗{}", a.name, h.name));
        let w = a.window.or(h.window);
        let sq = co_nested_square(a, h, r);
        let (ia, ih) = (a.id(), h.id());
        rep.identity(
            "copairing.coproduct-product",
            &r.then(&a.delta()?.tensor(&ih)),
            &sq.then(&ia.tensor(&ia).tensor(h.mu()?)),
            w,
        );
        rep.identity(
            "copairing.product-coproduct",
            &sq.then(&a.mu()?.tensor(&ih).tensor(&ih)),
            &r.then(&ia.tensor(h.delta()?)),
            w,
        );
        rep.identity(
            "copairing.counit-left",
            &r.then(&a.eps()?.tensor(&ih)),
            h.eta()?,
            w,
        );
        rep.identity(
            "copairing.counit-right",
            &r.then(&ia.tensor(h.eps()?)),
            a.eta()?,
            w,
        );
        Ok(rep)
    }

    /// Non-degeneracy data of a pairing restricted to one grade: the Gram
    /// matrix determinant between the degree-d parts.
    pub fn gram_determinant(
        rho: &Morphism,
        a_idx: &[usize],
        h_idx: &[usize],
        h_dim: usize,
    ) -> Scalar {
        let f = rho.field();
        let m: Vec<Vec<Scalar>> = a_idx
            .iter()
            .map(|&i| h_idx.iter().map(|&j| rho.entry(0, i * h_dim + j)).collect())
            .collect();
        crate::category::linalg::determinant(&m, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Module and comodule axioms and the standard derived (co)actions.
pub mod modules {
    use super::*;

    pub fn check_module(alg: &HopfData, action: &Morphism, side: Side) -> Result<Report> {
        let x = carrier_of_action(alg, action, side)?;
        let mut r = Report::new(format!("{:?} module {} over {}", side, x.name(), alg.name));
        let w = alg.window;
        let (mu, eta, ix, ia) = (alg.mu()?, alg.eta()?, id(&x), alg.id());
        match side {
            Side::Right => {
                r.identity("module.unit", &ix.tensor(eta).then(action), &ix, w);
                r.identity(
                    "module.associativity",
                    &action.tensor(&ia).then(action),
                    &ix.tensor(mu).then(action),
                    w,
                );
            }
            Side::Left => {
                r.identity("module.unit", &eta.tensor(&ix).then(action), &ix, w);
                r.identity(
                    "module.associativity",
                    &ia.tensor(action).then(action),
                    &mu.tensor(&ix).then(action),
                    w,
                );
            }
        }
        Ok(r)
    }

    pub fn check_comodule(co: &HopfData, coaction: &Morphism, side: Side) -> Result<Report> {
        let x = coaction.dom().clone();
        let mut r = Report::new(format!("{:?} comodule {} over {}", side, x.name(), co.name));
        let w = co.window;
        let (de, ep, ix, ia) = (co.delta()?, co.eps()?, id(&x), co.id());
        match side {
            Side::Right => {
                r.identity("comodule.counit", &coaction.then(&ix.tensor(ep)), &ix, w);
                r.identity(
                    "comodule.coassociativity",
                    &coaction.then(&coaction.tensor(&ia)),
                    &coaction.then(&ix.tensor(de)),
                    w,
                );
            }
            Side::Left => {
                r.identity("comodule.counit", &coaction.then(&ep.tensor(&ix)), &ix, w);
                r.identity(
                    "comodule.coassociativity",
                    &coaction.then(&ia.tensor(coaction)),
                    &coaction.then(&de.tensor(&ix)),
                    w,
                );
            }
        }
        Ok(r)
    }

    pub fn carrier_of_action(
        alg: &HopfData,
        action: &Morphism,
        side: Side,
    ) -> Result<GradedObject> {
        let d = action.dom();
        let n = d.factors().len();
        let na = alg.obj.factors().len();
        if n < na {
            return Err(HopfError::Invalid("action domain too small".into()));
        }
        Ok(match side {
            Side::Right => d.slice(0..n - na),
            Side::Left => d.slice(na..n),
        })
    }

    /// Tensor product of right modules: (μ_X ⊗ μ_Y)(X ⊗ Ψ_{Y,A} ⊗ A)(X ⊗ Y ⊗ Δ).
    pub fn tensor_module(h: &HopfData, mx: &Morphism, my: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, mx, Side::Right)?;
        let y = carrier_of_action(h, my, Side::Right)?;
        let psi = h.braider.psi(&y, &h.obj);
        Ok(id(&x)
            .tensor(&id(&y))
            .tensor(h.delta()?)
            .then(&id(&x).tensor(&psi).tensor(&h.id()))
            .then(&mx.tensor(my)))
    }

    /// Tensor product of right comodules: (X ⊗ Y ⊗ μ)(X ⊗ Ψ_{A,Y} ⊗ A)(Δ_X ⊗ Δ_Y).
    pub fn tensor_comodule(h: &HopfData, dx: &Morphism, dy: &Morphism) -> Result<Morphism> {
        let (x, y) = (dx.dom().clone(), dy.dom().clone());
        let psi = h.braider.psi(&h.obj, &y);
        Ok(dx
            .tensor(dy)
            .then(&id(&x).tensor(&psi).tensor(&h.id()))
            .then(&id(&x).tensor(&id(&y)).tensor(h.mu()?)))
    }

    /// Left A^op action μ_r ∘ Ψ^{-1}_{A,X} from a right A action.
    pub fn opposite_action(h: &HopfData, action: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, action, Side::Right)?;
        Ok(h.braider.psi_inv(&h.obj, &x).then(action))
    }

    /// Right action μ ∘ (X ⊗ S), an action of A^op.
    pub fn inverse_action(h: &HopfData, action: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, action, Side::Right)?;
        Ok(id(&x).tensor(h.s()?).then(action))
    }

    /// Right H coaction (μ_r ⊗ H)(X ⊗ R) induced by a copairing R : 1 → A ⊗ H.
    pub fn coaction_from_copairing(
        a: &HopfData,
        action: &Morphism,
        r: &Morphism,
    ) -> Result<Morphism> {
        let x = carrier_of_action(a, action, Side::Right)?;
        let hobj = r
            .cod()
            .slice(a.obj.factors().len()..r.cod().factors().len());
        Ok(id(&x).tensor(r).then(&action.tensor(&id(&hobj))))
    }

    /// Right H action (X ⊗ ρ)(Δ_r ⊗ H) induced by a pairing ρ : A ⊗ H → 1.
    pub fn action_from_pairing(
        a: &HopfData,
        coaction: &Morphism,
        rho: &Morphism,
    ) -> Result<Morphism> {
        let x = coaction.dom().clone();
        let hobj = rho
            .dom()
            .slice(a.obj.factors().len()..rho.dom().factors().len());
        Ok(coaction.tensor(&id(&hobj)).then(&id(&x).tensor(rho)))
    }

    /// Left action on X^∨ transposed from a right action on X:
    /// ev((x ◁ a) ⊗ f) = ev(x ⊗ (a ▷ f)).
    pub fn dual_left_action(h: &HopfData, action: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, action, Side::Right)?;
        let xd = x.dual();
        let pairing = action.tensor(&id(&xd)).then(&ev(&x));
        Ok(coev(&x)
            .tensor(&h.id())
            .tensor(&id(&xd))
            .then(&id(&xd).tensor(&pairing)))
    }

    /// Right action on X^∨: (X^∨ ⊗ ev)(X^∨ ⊗ μ_r ⊗ X^∨)(X^∨ ⊗ X ⊗ Ψ_{X^∨,A})(coev ⊗ X^∨ ⊗ S).
    pub fn dual_right_action(h: &HopfData, action: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, action, Side::Right)?;
        let xd = x.dual();
        let psi = h.braider.psi(&xd, &h.obj);
        Ok(coev(&x)
            .tensor(&id(&xd))
            .tensor(h.s()?)
            .then(&id(&xd).tensor(&id(&x)).tensor(&psi))
            .then(&id(&xd).tensor(action).tensor(&id(&xd)))
            .then(&id(&xd).tensor(&ev(&x))))
    }

    /// Right coaction on X^∨: (X^∨ ⊗ S^- ⊗ ev)(X^∨ ⊗ Ψ^{-1}_{A,X} ⊗ X^∨)(X^∨ ⊗ Δ_r ⊗ X^∨)(coev ⊗ X^∨).
    pub fn dual_right_coaction(h: &HopfData, coaction: &Morphism) -> Result<Morphism> {
        let x = coaction.dom().clone();
        let xd = x.dual();
        let psi = h.braider.psi_inv(&x, &h.obj);
        Ok(coev(&x)
            .tensor(&id(&xd))
            .then(&id(&xd).tensor(coaction).tensor(&id(&xd)))
            .then(&id(&xd).tensor(&psi).tensor(&id(&xd)))
            .then(&id(&xd).tensor(h.s_inv()?).tensor(&ev(&x))))
    }

    /// Right coaction on X^∨ transposed from a left coaction on X:
    /// (ev ⊗ A)(X ⊗ δ(f)) = (A ⊗ ev)(Δ_ℓ(x) ⊗ f).
    pub fn dual_transpose_coaction(h: &HopfData, left_coaction: &Morphism) -> Result<Morphism> {
        let x = left_coaction.dom().clone();
        let xd = x.dual();
        let pairing = left_coaction.tensor(&id(&xd)).then(&h.id().tensor(&ev(&x)));
        Ok(coev(&x).tensor(&id(&xd)).then(&id(&xd).tensor(&pairing)))
    }

    /// Right adjoint action μ_ℓ ∘ (S ⊗ μ_r) ∘ (Ψ_{X,A} ⊗ A) ∘ (X ⊗ Δ) on a bimodule.
    pub fn adjoint_action(h: &HopfData, left: &Morphism, right: &Morphism) -> Result<Morphism> {
        let x = carrier_of_action(h, right, Side::Right)?;
        let psi = h.braider.psi(&x, &h.obj);
        Ok(id(&x)
            .tensor(h.delta()?)
            .then(&psi.tensor(&h.id()))
            .then(&h.s()?.tensor(right))
            .then(left))
    }

    /// Right adjoint coaction (X ⊗ μ) ∘ (Ψ_{A,X} ⊗ A) ∘ (S ⊗ Δ_r) ∘ Δ_ℓ on a bicomodule.
    pub fn adjoint_coaction(h: &HopfData, left: &Morphism, right: &Morphism) -> Result<Morphism> {
        let x = right.dom().clone();
        let psi = h.braider.psi(&h.obj, &x);
        Ok(left
            .then(&h.s()?.tensor(right))
            .then(&psi.tensor(&h.id()))
            .then(&id(&x).tensor(h.mu()?)))
    }
}

/// Serialization of structure maps. Only the symmetric-category braiding
/// given by the bicharacter is representable; overrides are rejected.
impl HopfData {
    pub fn to_json(&self) -> Result<Value> {
        if !self.braider.is_plain() {
            return Err(HopfError::Invalid(format!(
                "{} carries a braiding override",
                self.name
            )));
        }
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("category".into(), self.obj.cat().to_json());
        m.insert("object".into(), self.obj.to_json());
        m.insert("variant".into(), json!(self.variant().as_str()));
        m.insert("window".into(), json!(self.window.map(|w| w.max_degree)));
        let maps = [
            ("mu", &self.mu),
            ("eta", &self.eta),
            ("Delta", &self.delta),
            ("eps", &self.eps),
            ("S", &self.antipode),
            ("Sinv", &self.skew),
        ];
        for (k, v) in maps {
            if let Some(v) = v {
                m.insert(k.into(), v.to_json());
            }
        }
        Ok(Value::Object(m))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| HopfError::Category(CategoryError::Json(m.to_string()));
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing name"))?;
        let cat = Category::from_json(v.get("category").ok_or_else(|| bad("missing category"))?)?;
        let obj =
            GradedObject::from_json(&cat, v.get("object").ok_or_else(|| bad("missing object"))?)?;
        let one = GradedObject::unit(&cat);
        let oo = obj.tensor(&obj);
        let load = |k: &str, d: &GradedObject, c: &GradedObject| -> Result<Option<Morphism>> {
            match v.get(k) {
                None => Ok(None),
                Some(e) => Ok(Some(Morphism::from_json(d, c, e)?)),
            }
        };
        let window = match v.get("window") {
            None | Some(Value::Null) => None,
            Some(w) => Some(Window {
                max_degree: w.as_i64().ok_or_else(|| bad("window"))?,
            }),
        };
        let h = HopfData {
            name: name.into(),
            mu: load("mu", &oo, &obj)?,
            eta: load("eta", &one, &obj)?,
            delta: load("Delta", &obj, &oo)?,
            eps: load("eps", &obj, &one)?,
            antipode: load("S", &obj, &obj)?,
            skew: load("Sinv", &obj, &obj)?,
            obj,
            braider: Braider::plain(),
            window,
        };
        if let Some(s) = v.get("variant").and_then(Value::as_str) {
            if Variant::parse(s) != Some(h.variant()) {
                return Err(bad("variant does not match the maps present"));
            }
        }
        Ok(h)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::category::{Category, GradingGroup};
    use crate::scalars::Field;

    /// Sweedler's four-dimensional algebra, trivially graded.
    pub(crate) fn sweedler() -> HopfData {
        let f = Field::RationalFunctions;
        let c = Category::trivial(f);
        // basis 1, g, x, gx with g² = 1, x² = 0, xg = -gx
        let a = GradedObject::atom(
            &c,
            "H",
            ["1", "g", "x", "gx"]
                .iter()
                .map(|s| (s.to_string(), vec![]))
                .collect(),
        );
        let one = GradedObject::unit(&c);
        // elements as (g power, x power)
        let idx = |gp: usize, xp: usize| gp + 2 * xp;
        let mut t = vec![];
        for i in 0..4 {
            for j in 0..4 {
                let (g1, x1) = (i % 2, i / 2);
                let (g2, x2) = (j % 2, j / 2);
                if x1 + x2 > 1 {
                    continue;
                }
                // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
                let sign = if x1 == 1 && g2 == 1 { -1 } else { 1 };
                t.push((idx((g1 + g2) % 2, x1 + x2), i * 4 + j, f.int(sign)));
            }
        }
        let aa = a.tensor(&a);
        let mu = Morphism::from_triples(&aa, &a, t).unwrap();
        let eta = Morphism::from_triples(&one, &a, vec![(0, 0, f.one())]).unwrap();
        // Δg = g⊗g, Δx = x⊗1 + g⊗x
        let pair = |i: usize, j: usize| i * 4 + j;
        let delta = Morphism::from_triples(
            &a,
            &aa,
            vec![
                (pair(0, 0), 0, f.one()),
                (pair(1, 1), 1, f.one()),
                (pair(2, 0), 2, f.one()),
                (pair(1, 2), 2, f.one()),
                // Δ(gx) = gx⊗g + 1⊗gx
                (pair(3, 1), 3, f.one()),
                (pair(0, 3), 3, f.one()),
            ],
        )
        .unwrap();
        let eps = Morphism::from_triples(&a, &one, vec![(0, 0, f.one()), (0, 1, f.one())]).unwrap();
        // S(g) = g, S(x) = -gx, S(gx) = x
        let s = Morphism::from_triples(
            &a,
            &a,
            vec![
                (0, 0, f.one()),
                (1, 1, f.one()),
                (3, 2, f.int(-1)),
                (2, 3, f.one()),
            ],
        )
        .unwrap();
        HopfData::hopf("Sweedler", a, mu, eta, delta, eps, s)
    }

    #[test]
    fn sweedler_is_hopf() {
        let h = sweedler().with_skew().unwrap();
        let r = h.check(Variant::Hopf).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(h.s_inv().unwrap(), &h.s().unwrap().inverse().unwrap());
    }

    #[test]
    fn broken_antipode_detected() {
        let mut h = sweedler();
        h.antipode = Some(h.id());
        let r = h.check(Variant::Hopf).unwrap();
        assert!(!r.passed());
        assert_eq!(
            r.first_failure().unwrap().name,
            "antipode.convolution-inverse-left"
        );
        assert!(h.check(Variant::Bialgebra).unwrap().passed());
    }

    #[test]
    fn opposites_and_dual() {
        let h = sweedler().with_skew().unwrap();
        for d in [
            op_mult(&h).unwrap(),
            op_comult(&h).unwrap(),
            dual_hopf(&h).unwrap(),
        ] {
            let r = d.check(Variant::Hopf).unwrap();
            assert!(r.passed(), "{}: {:?}", d.name, r.failures());
        }
    }

    #[test]
    fn superline_in_graded_category() {
        // k[x]/x² in Z_2-graded spaces with χ = -1 on odd ⊗ odd
        let f = Field::RationalFunctions;
        let c = Category::single(f, GradingGroup::cyclic(2), f.int(-1)).unwrap();
        let a = GradedObject::atom(&c, "A", vec![("1".into(), vec![0]), ("x".into(), vec![1])]);
        let one = GradedObject::unit(&c);
        let aa = a.tensor(&a);
        let mu = Morphism::from_triples(
            &aa,
            &a,
            vec![(0, 0, f.one()), (1, 1, f.one()), (1, 2, f.one())],
        )
        .unwrap();
        let eta = Morphism::from_triples(&one, &a, vec![(0, 0, f.one())]).unwrap();
        let delta = Morphism::from_triples(
            &a,
            &aa,
            vec![(0, 0, f.one()), (2, 1, f.one()), (1, 1, f.one())],
        )
        .unwrap();
        let eps = Morphism::from_triples(&a, &one, vec![(0, 0, f.one())]).unwrap();
        let s = Morphism::from_triples(&a, &a, vec![(0, 0, f.one()), (1, 1, f.int(-1))]).unwrap();
        let h = HopfData::hopf("superline", a, mu, eta, delta, eps, s)
            .with_skew()
            .unwrap();
        assert!(h.check(Variant::Hopf).unwrap().passed());
        for d in [
            op_mult(&h).unwrap(),
            op_comult(&h).unwrap(),
            dual_hopf(&h).unwrap(),
        ] {
            let r = d.check(Variant::Hopf).unwrap();
            assert!(r.passed(), "{}: {:?}", d.name, r.failures());
        }
        let ta = tensor_algebra(&h, &h).unwrap();
        assert!(ta.check(Variant::Algebra).unwrap().passed());
    }
}
