//! Named examples and their canonical JSON dumps.

use serde_json::Value;
use thiserror::Error;

use crate::hopf::{HopfData, HopfError};
use crate::products::quantum::{
    balancing_element, balancing_o, bosonize, category_balancing, ribbon_to_json, Quasitriangular,
    Ribbon,
};

use super::lines::{anyonic_line, braided_line};
use super::quantum::{fermion_quantum, kzn_quantum_group};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown example `{0}` (known: {known})", known = NAMES.join(", "))]
    Unknown(String),
    #[error("example `{0}`: {1}")]
    Parameter(String, String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("invalid example json: {0}")]
    Json(String),
}

pub const NAMES: &[&str] = &[
    "braided-line:N",
    "anyonic-line:n",
    "kZn:n",
    "bosonization:kZ2-fermion",
    "broken-antipode",
];

#[derive(Clone, Debug)]
pub enum Example {
    Hopf(HopfData),
    Quasitriangular(Quasitriangular),
    Ribbon(Quasitriangular, Ribbon),
}

impl Example {
    pub fn hopf(&self) -> &HopfData {
        match self {
            Example::Hopf(h) => h,
            Example::Quasitriangular(q) | Example::Ribbon(q, _) => &q.h,
        }
    }

    pub fn quasitriangular(&self) -> Option<&Quasitriangular> {
        match self {
            Example::Hopf(_) => None,
            Example::Quasitriangular(q) | Example::Ribbon(q, _) => Some(q),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Example::Hopf(_) => "hopf",
            Example::Quasitriangular(_) => "quasitriangular",
            Example::Ribbon(..) => "ribbon",
        }
    }

    pub fn to_json(&self) -> Result<Value, RegistryError> {
        let mut v = match self {
            Example::Hopf(h) => h.to_json()?,
            Example::Quasitriangular(q) => q.to_json()?,
            Example::Ribbon(q, rb) => {
                let v = balancing_element(q, &rb.gamma)?;
                let theta = balancing_o(q, &v, q.h.mu()?)?;
                ribbon_to_json(q, rb, &[("regular", &theta)])?
            }
        };
        v.as_object_mut()
            .expect("object")
            .insert("kind".into(), Value::from(self.kind()));
        Ok(v)
    }

    pub fn from_json(v: &Value) -> Result<Self, RegistryError> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| RegistryError::Json("missing kind".into()))?;
        match kind {
            "hopf" => Ok(Example::Hopf(HopfData::from_json(v)?)),
            "quasitriangular" => Ok(Example::Quasitriangular(Quasitriangular::from_json(v)?)),
            "ribbon" => {
                let q = Quasitriangular::from_json(v)?;
                let field = |k: &str| {
                    v.get(k)
                        .ok_or_else(|| RegistryError::Json(format!("missing {k}")))
                };
                let one = q.h.unit_obj();
                let gamma = crate::category::Morphism::from_json(&one, &q.h.obj, field("gamma")?)
                    .map_err(HopfError::from)?;
                let theta_h = field("theta")?
                    .get(&q.h.name)
                    .ok_or_else(|| RegistryError::Json("theta table lacks H".into()))?;
                let theta = crate::category::Morphism::from_json(&q.h.obj, &q.h.obj, theta_h)
                    .map_err(HopfError::from)?;
                Ok(Example::Ribbon(q, Ribbon { gamma, theta }))
            }
            other => Err(RegistryError::Json(format!("unknown kind `{other}`"))),
        }
    }

    /// Pretty-printed canonical JSON (keys sorted) with a trailing newline.
    pub fn dump(&self) -> Result<String, RegistryError> {
        let mut s = serde_json::to_string_pretty(&self.to_json()?)
            .map_err(|e| RegistryError::Json(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn load(text: &str) -> Result<Self, RegistryError> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| RegistryError::Json(e.to_string()))?;
        Example::from_json(&v)
    }
}

fn parameter(name: &str, arg: &str, lo: u32, hi: u32) -> Result<u32, RegistryError> {
    match arg.parse::<u32>() {
        Ok(n) if (lo..=hi).contains(&n) => Ok(n),
        _ => Err(RegistryError::Parameter(
            name.into(),
            format!("expected an integer in {lo}..={hi}, got `{arg}`"),
        )),
    }
}

/// The fermionic line bosonized over kZ_2 with R_B = 1⊗1 + x⊗x.
pub fn kz2_fermion_bosonization() -> Result<Quasitriangular, HopfError> {
    let qa = kzn_quantum_group(2);
    let f = qa.h.obj.field();
    let (qb, action) = fermion_quantum(&qa, f.one());
    Ok(bosonize(&qa, &qb, &action)?.qt)
}

/// The anyonic line with n = 3 and S replaced by the identity.
pub fn broken_antipode() -> HopfData {
    let mut h = anyonic_line(3);
    h.name = "broken-antipode".into();
    h.antipode = Some(h.id());
    h
}

pub fn example(name: &str) -> Result<Example, RegistryError> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    match (head, arg) {
        ("braided-line", Some(a)) => Ok(Example::Hopf(braided_line(
            parameter(name, a, 1, 12)? as usize
        ))),
        ("anyonic-line", Some(a)) => Ok(Example::Hopf(anyonic_line(parameter(name, a, 2, 12)?))),
        ("kZn", Some(a)) => {
            let q = kzn_quantum_group(parameter(name, a, 2, 12)?);
            let rb = Ribbon {
                gamma: q.h.eta()?.clone(),
                theta: category_balancing(&q.h.obj),
            };
            Ok(Example::Ribbon(q, rb))
        }
        ("bosonization", Some("kZ2-fermion")) => {
            Ok(Example::Quasitriangular(kz2_fermion_bosonization()?))
        }
        ("broken-antipode", None) => Ok(Example::Hopf(broken_antipode())),
        _ => Err(RegistryError::Unknown(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Variant;
    use crate::products::quantum::{check_quasitriangular, check_ribbon};

    #[test]
    fn dumps_round_trip() {
        for name in [
            "braided-line:3",
            "anyonic-line:2",
            "anyonic-line:4",
            "kZn:2",
            "kZn:3",
            "bosonization:kZ2-fermion",
            "broken-antipode",
        ] {
            let e = example(name).unwrap();
            let text = e.dump().unwrap();
            assert_eq!(example(name).unwrap().dump().unwrap(), text, "{name}");
            let back = Example::load(&text).unwrap();
            assert_eq!(back.dump().unwrap(), text, "{name}");
            assert_eq!(back.hopf().mu, e.hopf().mu);
        }
    }

    #[test]
    fn registry_contents() {
        assert!(matches!(example("nope:3"), Err(RegistryError::Unknown(_))));
        assert!(matches!(
            example("anyonic-line:1"),
            Err(RegistryError::Parameter(..))
        ));
        assert_eq!(example("anyonic-line:2").unwrap().hopf().obj.dim(), 2);
        let Example::Ribbon(q, rb) = example("kZn:2").unwrap() else {
            panic!()
        };
        assert!(check_quasitriangular(&q).unwrap().passed());
        assert!(check_ribbon(&q, &rb).unwrap().passed());
        let b = example("bosonization:kZ2-fermion").unwrap();
        assert_eq!(b.hopf().obj.dim(), 4);
        assert!(check_quasitriangular(b.quasitriangular().unwrap())
            .unwrap()
            .passed());
        let r = example("broken-antipode")
            .unwrap()
            .hopf()
            .check(Variant::Hopf)
            .unwrap();
        assert_eq!(r.failures()[0].name, "antipode.convolution-inverse-left");
    }
}
