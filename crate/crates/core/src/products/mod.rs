//! Cross products A ⋉ B of a Hopf algebra with a Hopf algebra living in its
//! crossed modules, the Radford splitting of a projection, and lifts of
//! crossed modules to the cross product.

pub mod quantum;

use crate::category::{split_idempotent, GradedObject, Morphism};
use crate::crossed::{
    check_crossed, crossed_tensor, dy_braider, is_crossed_map, square_antipode, trivial_module,
    CrossedModule,
};
use crate::hopf::{convolution_inverse, HopfData, HopfError, Result, Variant};
use crate::report::Report;

fn id(x: &GradedObject) -> Morphism {
    Morphism::identity(x)
}

/// A Hopf algebra in the category of right-right crossed modules over a base
/// Hopf algebra. `hopf.braider` carries the crossed-module braiding.
#[derive(Clone, Debug)]
pub struct DyHopf {
    pub hopf: HopfData,
    pub module: CrossedModule,
}

impl DyHopf {
    /// Installs the crossed-module braiding of `module` with itself.
    pub fn new(base: &HopfData, mut hopf: HopfData, module: CrossedModule) -> Result<Self> {
        hopf.braider = dy_braider(base, &[&module])?;
        Ok(DyHopf { hopf, module })
    }

    /// Keeps the braider already set on `hopf`.
    pub fn with_braider(hopf: HopfData, module: CrossedModule) -> Self {
        DyHopf { hopf, module }
    }
}

/// A Hopf algebra with trivial action and coaction over `base`.
pub fn trivial_dy(base: &HopfData, hopf: HopfData) -> Result<DyHopf> {
    let ic = hopf.id();
    let m = CrossedModule::right(&hopf.name, ic.tensor(base.eps()?), ic.tensor(base.eta()?));
    DyHopf::new(base, hopf, m)
}

/// The crossed structure is valid, the Hopf axioms hold with the
/// crossed-module braiding, and every structure map is a crossed-module map.
pub fn check_dy_hopf(base: &HopfData, b: &DyHopf) -> Result<Report> {
    let mut r = Report::new(format!(
        "{} in crossed modules over {}",
        b.hopf.name, base.name
    ));
    r.absorb("", check_crossed(base, &b.module)?);
    r.absorb("", b.hopf.check(b.hopf.variant())?);
    let x = &b.module;
    let xx = crossed_tensor(base, x, x)?;
    let one = trivial_module(base);
    let h = &b.hopf;
    r.condition(
        "dy-hopf.mu-crossed",
        is_crossed_map(base, h.mu()?, &xx, x),
        None,
    );
    r.condition(
        "dy-hopf.eta-crossed",
        is_crossed_map(base, h.eta()?, &one, x),
        None,
    );
    r.condition(
        "dy-hopf.delta-crossed",
        is_crossed_map(base, h.delta()?, x, &xx),
        None,
    );
    r.condition(
        "dy-hopf.eps-crossed",
        is_crossed_map(base, h.eps()?, x, &one),
        None,
    );
    if let Some(s) = &h.antipode {
        r.condition(
            "dy-hopf.antipode-crossed",
            is_crossed_map(base, s, x, x),
            None,
        );
    }
    Ok(r)
}

/// A ⋉ B on A ⊗ B:
/// μ = (μ_A ⊗ μ_B)(A ⊗ A ⊗ μ_r ⊗ B)(A ⊗ Ψ_{B,A} ⊗ A ⊗ B)(A ⊗ B ⊗ Δ_A ⊗ B),
/// Δ = (A ⊗ B ⊗ μ_A ⊗ B)(A ⊗ Ψ_{A,B} ⊗ A ⊗ B)(A ⊗ A ⊗ Δ_r ⊗ B)(Δ_A ⊗ Δ_B).
pub fn cross_product(a: &HopfData, b: &DyHopf) -> Result<HopfData> {
    let bh = &b.hopf;
    let (ao, bo) = (&a.obj, &bh.obj);
    let (ia, ib) = (a.id(), bh.id());
    let br = &a.braider;
    let (act, co) = (&b.module.action, &b.module.coaction);
    if act.dom() != &bo.tensor(ao) || co.cod() != &bo.tensor(ao) {
        return Err(HopfError::Invalid(format!(
            "{} is not a crossed module over {}",
            bh.name, a.name
        )));
    }
    let mu = ia
        .tensor(&ib)
        .tensor(a.delta()?)
        .tensor(&ib)
        .then(&ia.tensor(&br.psi(bo, ao)).tensor(&ia).tensor(&ib))
        .then(&ia.tensor(&ia).tensor(act).tensor(&ib))
        .then(&a.mu()?.tensor(bh.mu()?));
    let delta = a
        .delta()?
        .tensor(bh.delta()?)
        .then(&ia.tensor(&ia).tensor(co).tensor(&ib))
        .then(&ia.tensor(&br.psi(ao, bo)).tensor(&ia).tensor(&ib))
        .then(&ia.tensor(&ib).tensor(a.mu()?).tensor(&ib));
    let mut h = HopfData {
        name: format!("{}⋉{}", a.name, bh.name),
        obj: ao.tensor(bo),
        mu: Some(mu),
        eta: Some(a.eta()?.tensor(bh.eta()?)),
        delta: Some(delta),
        eps: Some(a.eps()?.tensor(bh.eps()?)),
        antipode: None,
        skew: None,
        braider: a.braider.clone(),
        window: a.window.or(bh.window),
    };
    if let (Ok(sa), Ok(sb)) = (a.s(), bh.s()) {
        let s = ia
            .tensor(co)
            .then(&br.psi(ao, bo).tensor(&ia))
            .then(&ib.tensor(a.mu()?))
            .then(&sb.tensor(sa))
            .then(&ib.tensor(a.delta()?))
            .then(&br.psi(bo, ao).tensor(&ia))
            .then(&ia.tensor(act));
        h.skew = s
            .inverse()
            .ok()
            .filter(|_| a.skew.is_some() && bh.skew.is_some());
        h.antipode = Some(s);
    }
    Ok(h)
}

/// The canonical maps i_A, p_A, i_B, p_B of A ⋉ B.
pub struct CrossMaps {
    pub i_a: Morphism,
    pub p_a: Morphism,
    pub i_b: Morphism,
    pub p_b: Morphism,
}

pub fn cross_maps(a: &HopfData, b: &HopfData) -> Result<CrossMaps> {
    Ok(CrossMaps {
        i_a: a.id().tensor(b.eta()?),
        p_a: a.id().tensor(b.eps()?),
        i_b: a.eta()?.tensor(&b.id()),
        p_b: a.eps()?.tensor(&b.id()),
    })
}

/// A pair A ⇄ H with p ∘ i = id.
#[derive(Clone, Debug)]
pub struct Projection {
    pub i: Morphism,
    pub p: Morphism,
}

/// p ∘ i = id and both maps preserve every structure map that both sides have.
pub fn check_projection(a: &HopfData, h: &HopfData, proj: &Projection) -> Result<Report> {
    let mut r = Report::new(format!("projection {} ⇄ {}", a.name, h.name));
    let w = h.window;
    r.identity(
        "projection.retract",
        &proj.i.then(&proj.p),
        &a.id(),
        a.window,
    );
    for (tag, f, src, dst) in [("i", &proj.i, a, h), ("p", &proj.p, h, a)] {
        r.identity(
            &format!("projection.{tag}-multiplicative"),
            &src.mu()?.then(f),
            &f.tensor(f).then(dst.mu()?),
            w,
        );
        r.identity(
            &format!("projection.{tag}-unit"),
            &src.eta()?.then(f),
            dst.eta()?,
            w,
        );
        r.identity(
            &format!("projection.{tag}-comultiplicative"),
            &src.delta()?.then(&f.tensor(f)),
            &f.then(dst.delta()?),
            w,
        );
        r.identity(
            &format!("projection.{tag}-counit"),
            &f.then(dst.eps()?),
            src.eps()?,
            w,
        );
    }
    Ok(r)
}

/// ₕΠ = μ_H ∘ (i ∘ S_A ∘ p ⊗ H) ∘ Δ_H.
pub fn radford_idempotent(a: &HopfData, h: &HopfData, proj: &Projection) -> Result<Morphism> {
    let isp = proj.p.then(a.s()?).then(&proj.i);
    Ok(h.delta()?.then(&isp.tensor(&h.id())).then(h.mu()?))
}

/// Output of [`radford_split`]: B with its crossed structure over A, the
/// splitting maps, the idempotent, and the isomorphism A ⋉ B → H with its
/// inverse.
#[derive(Clone, Debug)]
pub struct RadfordSplit {
    pub b: DyHopf,
    pub i_b: Morphism,
    pub p_b: Morphism,
    pub pi: Morphism,
    pub iso: Morphism,
    pub iso_inv: Morphism,
    pub report: Report,
}

pub fn radford_split(
    a: &HopfData,
    h: &HopfData,
    proj: &Projection,
    name: &str,
) -> Result<RadfordSplit> {
    let mut report = check_projection(a, h, proj)?;
    if !report.passed() {
        return Err(HopfError::Invalid(format!(
            "not a projection: {:?}",
            report.first_failure().map(|o| &o.name)
        )));
    }
    let pi = radford_idempotent(a, h, proj)?;
    let (obj, i_b, p_b) = split_idempotent(&pi, name)?;
    let ia = a.id();
    let mu_h = h.mu()?;
    let mut bh = HopfData {
        name: name.into(),
        obj: obj.clone(),
        mu: Some(i_b.tensor(&i_b).then(mu_h).then(&p_b)),
        eta: Some(h.eta()?.then(&p_b)),
        delta: Some(i_b.then(h.delta()?).then(&p_b.tensor(&p_b))),
        eps: Some(i_b.then(h.eps()?)),
        antipode: None,
        skew: None,
        braider: h.braider.clone(),
        window: h.window,
    };
    bh.antipode = Some(convolution_inverse(&bh, &bh, &bh.id())?);
    let action = i_b.tensor(&proj.i).then(mu_h).then(&p_b);
    let coaction = i_b.then(h.delta()?).then(&p_b.tensor(&proj.p));
    let module = CrossedModule::right(name, action, coaction);
    if let Ok(sinv) = bh.s()?.inverse() {
        bh.skew = Some(sinv);
    }
    let b = DyHopf::new(a, bh, module)?;
    let iso = proj.i.tensor(&i_b).then(mu_h);
    let iso_inv = h.delta()?.then(&proj.p.tensor(&p_b));
    report.identity(
        "radford.iso-left",
        &iso.then(&iso_inv),
        &ia.tensor(&id(&obj)),
        h.window,
    );
    report.identity("radford.iso-right", &iso_inv.then(&iso), &h.id(), h.window);
    let cross = cross_product(a, &b)?;
    report.absorb("B", check_dy_hopf(a, &b)?);
    report.identity(
        "radford.iso-multiplicative",
        &cross.mu()?.then(&iso),
        &iso.tensor(&iso).then(mu_h),
        h.window,
    );
    report.identity(
        "radford.iso-comultiplicative",
        &cross.delta()?.then(&iso.tensor(&iso)),
        &iso.then(h.delta()?),
        h.window,
    );
    Ok(RadfordSplit {
        b,
        i_b,
        p_b,
        pi,
        iso,
        iso_inv,
        report,
    })
}

/// A crossed module over B inside crossed modules over A, lifted to A ⋉ B:
/// action μ_r^B ∘ (μ_r^A ⊗ B), coaction (Δ_r^A ⊗ B) ∘ Δ_r^B.
pub fn crossed_lift(x_a: &CrossedModule, x_b: &CrossedModule, b: &HopfData) -> CrossedModule {
    let ib = b.id();
    let action = x_a.action.tensor(&ib).then(&x_b.action);
    let coaction = x_b.coaction.then(&x_a.coaction.tensor(&ib));
    CrossedModule::right(&format!("{}^lift", x_b.name), action, coaction)
}

/// Recovers the structures over A and over B from a crossed module over A ⋉ B.
pub fn crossed_unlift(
    a: &HopfData,
    b: &HopfData,
    x: &CrossedModule,
) -> Result<(CrossedModule, CrossedModule)> {
    let m = cross_maps(a, b)?;
    let ix = x.id();
    let xa = CrossedModule::right(
        &x.name,
        ix.tensor(&m.i_a).then(&x.action),
        x.coaction.then(&ix.tensor(&m.p_a)),
    );
    let xb = CrossedModule::right(
        &x.name,
        ix.tensor(&m.i_b).then(&x.action),
        x.coaction.then(&ix.tensor(&m.p_b)),
    );
    Ok((xa, xb))
}

/// Right-hand side of the cross-square lemma:
/// (S_A² ⊗ S_B²) ∘ Ψ_{B,A} Ψ_{A,B} ∘ (A ⊗ σ_{B/A}).
pub fn cross_square(a: &HopfData, b: &DyHopf) -> Result<Morphism> {
    let (ao, bo) = (&a.obj, &b.hopf.obj);
    let sa = a.s()?.then(a.s()?);
    let sb = b.hopf.s()?.then(b.hopf.s()?);
    Ok(a.id()
        .tensor(&square_antipode(a, &b.module)?)
        .then(&a.braider.psi(ao, bo))
        .then(&a.braider.psi(bo, ao))
        .then(&sa.tensor(&sb)))
}

/// Structure constants agree (objects may carry different labels).
pub fn same_constants(f: &Morphism, g: &Morphism) -> bool {
    f.dom().dim() == g.dom().dim() && f.cod().dim() == g.cod().dim() && f.triples() == g.triples()
}

/// Compares every structure map of two Hopf algebras by structure constants.
pub fn compare_hopf(r: &mut Report, tag: &str, x: &HopfData, y: &HopfData) {
    let pairs = [
        ("mu", &x.mu, &y.mu),
        ("eta", &x.eta, &y.eta),
        ("delta", &x.delta, &y.delta),
        ("eps", &x.eps, &y.eps),
        ("antipode", &x.antipode, &y.antipode),
    ];
    for (n, f, g) in pairs {
        let ok = match (f, g) {
            (Some(f), Some(g)) => same_constants(f, g),
            (None, None) => true,
            _ => false,
        };
        r.condition(&format!("{tag}.{n}"), ok, None);
    }
}

/// Nested cross products (A ⋉ B) ⋉ C and A ⋉ (B ⋉ C) for a Hopf algebra C
/// carried with trivial crossed structures throughout.
pub fn nested_cross_products(
    a: &HopfData,
    b: &DyHopf,
    c: &HopfData,
) -> Result<(HopfData, HopfData)> {
    let h = cross_product(a, b)?;
    let left = cross_product(&h, &trivial_dy(&h, c.clone())?)?;
    let ic = c.id();
    let c_over_a = CrossedModule::right(&c.name, ic.tensor(a.eps()?), ic.tensor(a.eta()?));
    let mut bh = b.hopf.clone();
    bh.braider = dy_braider(a, &[&b.module, &c_over_a])?;
    let mut cc = c.clone();
    cc.braider = bh.braider.clone();
    let c_over_b = trivial_dy(&bh, cc)?;
    let d = cross_product(&bh, &c_over_b)?;
    let d_mod = crossed_tensor(a, &b.module, &c_over_a)?;
    let right = cross_product(a, &DyHopf::new(a, d, d_mod)?)?;
    Ok((left, right))
}

/// Checks both nested cross products are Hopf algebras with equal structure
/// constants.
pub fn check_transitivity(a: &HopfData, b: &DyHopf, c: &HopfData) -> Result<Report> {
    let (l, r) = nested_cross_products(a, b, c)?;
    let mut rep = Report::new(format!(
        "({0}⋉{1})⋉{2} vs {0}⋉({1}⋉{2})",
        a.name, b.hopf.name, c.name
    ));
    rep.absorb("left", l.check(Variant::Hopf)?);
    rep.absorb("right", r.check(Variant::Hopf)?);
    compare_hopf(&mut rep, "transitivity", &l, &r);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{crossed_tensor, dy_braiding, regular_bimodule, x_ad, x_coad};
    use crate::examples::{anyonic_line, fermionic_line, group_algebra_zn, group_algebra_zn_over};
    use crate::hopf::modules;

    fn setup() -> (HopfData, DyHopf, HopfData) {
        let a = group_algebra_zn(2);
        let b = fermionic_line(&a);
        let h = cross_product(&a, &b).unwrap();
        (a, b, h)
    }

    #[test]
    fn fermionic_line_lives_in_crossed_modules() {
        let (a, b, _) = setup();
        let r = check_dy_hopf(&a, &b).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        let x = b.hopf.obj.index_of("x").unwrap();
        let psi = b.hopf.psi();
        assert_eq!(psi.entry(x * 2 + x, x * 2 + x), a.obj.field().int(-1));
    }

    #[test]
    fn bosonized_fermion_is_hopf() {
        let (a, _, h) = setup();
        let r = h.check(Variant::Hopf).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(h.obj.dim(), 4);
        let f = a.obj.field();
        let mu = h.mu().unwrap();
        // basis (a, b) ↦ 2a + b: 0 = 1, 1 = x, 2 = g, 3 = gx
        let e = |i: usize| {
            Morphism::from_triples(&h.unit_obj(), &h.obj, vec![(i, 0, f.one())]).unwrap()
        };
        let prod = |u: &Morphism, v: &Morphism| u.tensor(v).then(mu);
        let (g, x) = (e(2), e(1));
        assert_eq!(prod(&g, &x), prod(&x, &g).scaled(&f.int(-1)));
        let gx = prod(&g, &x);
        let de = h.delta().unwrap();
        let one = e(0);
        assert_eq!(gx.then(de), gx.tensor(&one).plus(&g.tensor(&gx)));
        assert_eq!(x.then(de), x.tensor(&g).plus(&one.tensor(&x)));
        assert!(h.skew.is_some());
    }

    #[test]
    fn trivial_cross_product_is_a() {
        let a = anyonic_line(3);
        let one = HopfData::hopf(
            "1",
            a.unit_obj(),
            id(&a.unit_obj()),
            id(&a.unit_obj()),
            id(&a.unit_obj()),
            id(&a.unit_obj()),
            id(&a.unit_obj()),
        );
        let h = cross_product(&a, &trivial_dy(&a, one).unwrap()).unwrap();
        let mut r = Report::new("A⋉1");
        compare_hopf(&mut r, "trivial", &h, &a);
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn radford_round_trip() {
        let (a, b, h) = setup();
        let m = cross_maps(&a, &b.hopf).unwrap();
        let proj = Projection {
            i: m.i_a.clone(),
            p: m.p_a.clone(),
        };
        let s = radford_split(&a, &h, &proj, "B").unwrap();
        assert!(s.report.passed(), "{:?}", s.report.failures());
        assert_eq!(s.pi.rank(), 2);
        let mut r = Report::new("round trip");
        compare_hopf(&mut r, "B", &s.b.hopf, &b.hopf);
        r.condition(
            "action",
            same_constants(&s.b.module.action, &b.module.action),
            None,
        );
        r.condition(
            "coaction",
            same_constants(&s.b.module.coaction, &b.module.coaction),
            None,
        );
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn radford_of_identity_projection_is_trivial() {
        let a = anyonic_line(3).with_skew().unwrap();
        let proj = Projection {
            i: a.id(),
            p: a.id(),
        };
        let s = radford_split(&a, &a, &proj, "B").unwrap();
        assert!(s.report.passed(), "{:?}", s.report.failures());
        assert_eq!(s.b.hopf.obj.dim(), 1);
    }

    #[test]
    fn broken_projection_is_rejected() {
        let (a, b, h) = setup();
        let m = cross_maps(&a, &b.hopf).unwrap();
        let bad = m.p_a.plus(
            &m.p_b.then(
                &Morphism::from_fn(&b.hopf.obj, &a.obj, |j| {
                    if j == 1 {
                        vec![(1, a.obj.field().one())]
                    } else {
                        vec![]
                    }
                })
                .unwrap(),
            ),
        );
        let proj = Projection { i: m.i_a, p: bad };
        assert!(radford_split(&a, &h, &proj, "B").is_err());
    }

    #[test]
    fn anyonic_radford() {
        // A = kZ_3 acting on the anyonic line through its grading.
        let a = group_algebra_zn(3);
        let b = crate::examples::anyonic_dy(&a, 3);
        let r = check_dy_hopf(&a, &b).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        let h = cross_product(&a, &b).unwrap();
        let rep = h.check(Variant::Hopf).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        let m = cross_maps(&a, &b.hopf).unwrap();
        let s = radford_split(&a, &h, &Projection { i: m.i_a, p: m.p_a }, "B").unwrap();
        assert!(s.report.passed(), "{:?}", s.report.failures());
        let mut c = Report::new("B");
        compare_hopf(&mut c, "B", &s.b.hopf, &b.hopf);
        assert!(c.passed(), "{:?}", c.failures());
        // cross-square lemma
        let s_h = h.s().unwrap();
        assert_eq!(s_h.then(s_h), cross_square(&a, &b).unwrap());
    }

    fn b_ad_pair(
        a: &HopfData,
        b: &DyHopf,
    ) -> (CrossedModule, CrossedModule, CrossedModule, CrossedModule) {
        // B_ad: adjoint action and regular coaction over B, inside crossed modules over A.
        let reg = regular_bimodule(&b.hopf).unwrap();
        let ad = x_ad(&b.hopf, &reg).unwrap();
        let coad = x_coad(&b.hopf, &reg).unwrap();
        let _ = a;
        (b.module.clone(), ad, b.module.clone(), coad)
    }

    #[test]
    fn lifts_of_adjoint_modules() {
        let (a, b, h) = setup();
        let (xa, ad, xa2, coad) = b_ad_pair(&a, &b);
        for (x_a, x_b) in [(&xa, &ad), (&xa2, &coad)] {
            let rb = check_crossed(&b.hopf, x_b).unwrap();
            assert!(rb.passed(), "{:?}", rb.failures());
            let lifted = crossed_lift(x_a, x_b, &b.hopf);
            let r = check_crossed(&h, &lifted).unwrap();
            assert!(r.passed(), "{}: {:?}", x_b.name, r.failures());
            let (ya, yb) = crossed_unlift(&a, &b.hopf, &lifted).unwrap();
            assert_eq!(ya.action, x_a.action);
            assert_eq!(ya.coaction, x_a.coaction);
            assert_eq!(yb.action, x_b.action);
            assert_eq!(yb.coaction, x_b.coaction);
            // cross-sigma lemma
            let sh = square_antipode(&h, &lifted).unwrap();
            let sa = square_antipode(&a, x_a).unwrap();
            let sb = square_antipode(&b.hopf, x_b).unwrap();
            assert_eq!(sh, sa.then(&sb));
            assert_eq!(sh, sb.then(&sa));
        }
        let t = crossed_lift(&trivial_module(&a), &trivial_module(&b.hopf), &b.hopf);
        assert_eq!(t.action, h.eps().unwrap().clone());
        assert_eq!(t.coaction, h.eta().unwrap().clone());
    }

    #[test]
    fn cross_square_lemma() {
        let (a, b, h) = setup();
        let s = h.s().unwrap();
        assert_eq!(s.then(s), cross_square(&a, &b).unwrap());
    }

    #[test]
    fn transitivity_with_trivial_third_factor() {
        let (a, b, _) = setup();
        let c = group_algebra_zn_over(a.obj.cat(), 2, "C");
        let r = check_transitivity(&a, &b, &c).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn adjoint_is_braided_commutative() {
        for n in 2..=3 {
            let a = anyonic_line(n);
            let reg = regular_bimodule(&a).unwrap();
            let ad = x_ad(&a, &reg).unwrap();
            let coad = x_coad(&a, &reg).unwrap();
            let mu = a.mu().unwrap();
            assert_eq!(dy_braiding(&a, &ad, &ad, false).unwrap().then(mu), *mu);
            let de = a.delta().unwrap();
            assert_eq!(de.then(&dy_braiding(&a, &coad, &coad, false).unwrap()), *de);
            assert!(is_crossed_map(
                &a,
                mu,
                &crossed_tensor(&a, &ad, &ad).unwrap(),
                &ad
            ));
            let _ = modules::check_module;
        }
    }
}
