//! JSON formats.
//!
//! Rationals are strings `"n/d"` (`"n"` when integral); integer literals are
//! accepted on input. A univariate polynomial is its ascending coefficient
//! array. Parameter polynomials are arrays of `{"monomial", "coeff"}` terms.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, Rational, UniPoly};
use crate::oracle::{OracleCase, RootSpec};
use crate::parametric::{ParamPoly, ParamUniPoly};
use crate::queries::LedgerStats;
use crate::realnonreal::RealNonrealResult;
use crate::znz::ConditionList;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_rational(&t)
                .map(JsonRational)
                .map_err(de::Error::custom),
            Raw::Int(n) => Ok(JsonRational(Rational::from_integer(n.into()))),
        }
    }
}

fn poly_from_json(c: &[JsonRational]) -> UniPoly {
    UniPoly::new(c.iter().map(|x| x.0.clone()).collect())
}

fn poly_to_json(p: &UniPoly) -> Vec<JsonRational> {
    p.coeffs().iter().cloned().map(JsonRational).collect()
}

/// `{"P": [...], "system": [[...], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    #[serde(rename = "P")]
    pub p: Vec<JsonRational>,
    #[serde(default)]
    pub system: Vec<Vec<JsonRational>>,
}

impl InstanceJson {
    pub fn new(p: &UniPoly, system: &[UniPoly]) -> Self {
        InstanceJson {
            p: poly_to_json(p),
            system: system.iter().map(poly_to_json).collect(),
        }
    }

    pub fn polynomial(&self) -> UniPoly {
        poly_from_json(&self.p)
    }

    pub fn system(&self) -> Vec<UniPoly> {
        self.system.iter().map(|c| poly_from_json(c)).collect()
    }
}

/// `{"conditions": [...], "cardinals": [...]}` with an optional ledger dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsJson {
    pub conditions: Vec<String>,
    pub cardinals: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<LedgerStats>,
}

impl ConditionsJson {
    /// Zero-nonzero conditions as bit strings.
    pub fn bits(feas: &ConditionList, counts: &[usize]) -> Self {
        ConditionsJson {
            conditions: feas.to_bit_strings(),
            cardinals: counts.to_vec(),
            stats: None,
        }
    }

    /// Sign conditions as strings over `0`, `+`, `-`.
    pub fn signs(feas: &ConditionList, counts: &[usize]) -> Self {
        ConditionsJson {
            conditions: feas.to_sign_strings(),
            cardinals: counts.to_vec(),
            stats: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealNonrealJson {
    pub real: ConditionsJson,
    pub nonreal: ConditionsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<LedgerStats>,
}

impl RealNonrealJson {
    pub fn new(r: &RealNonrealResult) -> Self {
        RealNonrealJson {
            real: ConditionsJson::signs(&r.feas_real, &r.c_real),
            nonreal: ConditionsJson::bits(&r.feas_nonreal, &r.c_nonreal),
            stats: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub monomial: Vec<u32>,
    pub coeff: JsonRational,
}

pub fn param_poly_to_json(p: &ParamPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            monomial: m.clone(),
            coeff: JsonRational(c.clone()),
        })
        .collect()
}

pub fn param_poly_from_json(nvars: usize, terms: &[TermJson]) -> Result<ParamPoly> {
    if let Some(t) = terms.iter().find(|t| t.monomial.len() != nvars) {
        return Err(Error::DimensionMismatch(format!(
            "monomial {:?} has {} exponents, expected {nvars}",
            t.monomial,
            t.monomial.len()
        )));
    }
    Ok(ParamPoly::from_terms(
        nvars,
        terms
            .iter()
            .map(|t| (t.monomial.clone(), t.coeff.0.clone())),
    ))
}

/// `{"params": m, "P": [coeff, ...], "system": [[coeff, ...], ...], "bound": n}`
/// where every coefficient in `X` is a parameter polynomial; `bound`
/// overrides `deg_X P` in the product family size.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamInstanceJson {
    pub params: usize,
    #[serde(rename = "P")]
    pub p: Vec<Vec<TermJson>>,
    #[serde(default)]
    pub system: Vec<Vec<Vec<TermJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl ParamInstanceJson {
    pub fn new(p: &ParamUniPoly, system: &[ParamUniPoly]) -> Self {
        let enc = |q: &ParamUniPoly| q.coeffs().iter().map(param_poly_to_json).collect();
        ParamInstanceJson {
            params: p.nvars(),
            p: enc(p),
            system: system.iter().map(enc).collect(),
            bound: None,
        }
    }

    fn decode(&self, coeffs: &[Vec<TermJson>]) -> Result<ParamUniPoly> {
        let c = coeffs
            .iter()
            .map(|t| param_poly_from_json(self.params, t))
            .collect::<Result<_>>()?;
        Ok(ParamUniPoly::new(self.params, c))
    }

    pub fn polynomial(&self) -> Result<ParamUniPoly> {
        self.decode(&self.p)
    }

    pub fn system(&self) -> Result<Vec<ParamUniPoly>> {
        self.system.iter().map(|q| self.decode(q)).collect()
    }
}

/// `{"real": [["1/2", 2], ...], "complex": [["0", "1", 1], ...]}`
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSpecJson {
    #[serde(default)]
    pub real: Vec<(JsonRational, u32)>,
    #[serde(default)]
    pub complex: Vec<(JsonRational, JsonRational, u32)>,
}

impl RootSpecJson {
    pub fn new(spec: &RootSpec) -> Self {
        RootSpecJson {
            real: spec
                .real_roots
                .iter()
                .map(|(a, m)| (JsonRational(a.clone()), *m))
                .collect(),
            complex: spec
                .complex_pairs
                .iter()
                .map(|(re, im, m)| (JsonRational(re.clone()), JsonRational(im.clone()), *m))
                .collect(),
        }
    }

    pub fn spec(&self) -> RootSpec {
        RootSpec {
            real_roots: self.real.iter().map(|(a, m)| (a.0.clone(), *m)).collect(),
            complex_pairs: self
                .complex
                .iter()
                .map(|(re, im, m)| (re.0.clone(), im.0.clone(), *m))
                .collect(),
        }
    }
}

/// `{"roots": RootSpec, "system": [[...], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleCaseJson {
    pub roots: RootSpecJson,
    #[serde(default)]
    pub system: Vec<Vec<JsonRational>>,
}

impl OracleCaseJson {
    pub fn new(case: &OracleCase) -> Self {
        OracleCaseJson {
            roots: RootSpecJson::new(&case.spec),
            system: case.system.iter().map(poly_to_json).collect(),
        }
    }

    pub fn case(&self) -> OracleCase {
        OracleCase {
            spec: self.roots.spec(),
            system: self.system.iter().map(|c| poly_from_json(c)).collect(),
        }
    }
}

/// Parses JSON, mapping syntax and shape errors to [`Error::Parse`].
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    #[test]
    fn rationals_round_trip() {
        let v: Vec<JsonRational> = from_json(r#"["1/2", 3, "-4/6", "0"]"#).unwrap();
        assert_eq!(v[2].0, ratio(-2, 3));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"["1/2","3","-2/3","0"]"#
        );
        assert!(from_json::<JsonRational>(r#""1/0""#).is_err());
        assert!(from_json::<JsonRational>(r#"1.5"#).is_err());
    }

    #[test]
    fn instance_parse() {
        let inst: InstanceJson =
            from_json(r#"{"P": [0, 2, -3, 1], "system": [[0, 1], ["-1", "1"]]}"#).unwrap();
        assert_eq!(inst.polynomial(), UniPoly::from_i64(&[0, 2, -3, 1]));
        assert_eq!(inst.system().len(), 2);
        assert!(from_json::<InstanceJson>(r#"{"P": [1], "extra": 1}"#).is_err());
    }

    #[test]
    fn conditions_output_order() {
        let feas = ConditionList::from_bit_strings(&["01", "10", "11"]).unwrap();
        let out = serde_json::to_string(&ConditionsJson::bits(&feas, &[1, 1, 1])).unwrap();
        assert_eq!(
            out,
            r#"{"conditions":["01","10","11"],"cardinals":[1,1,1]}"#
        );
    }

    #[test]
    fn param_poly_round_trip() {
        let y = ParamPoly::var(2, 1);
        let p = &(&y * &y).scale(&rat(-4)) + &ParamPoly::constant(2, ratio(1, 3));
        let text = serde_json::to_string(&param_poly_to_json(&p)).unwrap();
        assert_eq!(
            text,
            r#"[{"monomial":[0,0],"coeff":"1/3"},{"monomial":[0,2],"coeff":"-4"}]"#
        );
        let back: Vec<TermJson> = from_json(&text).unwrap();
        assert_eq!(param_poly_from_json(2, &back).unwrap(), p);
        assert!(param_poly_from_json(1, &back).is_err());
    }

    #[test]
    fn root_spec_round_trip() {
        let text = r#"{"real": [["1/2", 2]], "complex": [["0", "1", 1]]}"#;
        let spec = from_json::<RootSpecJson>(text).unwrap().spec();
        assert_eq!(spec.real_roots, vec![(ratio(1, 2), 2)]);
        assert_eq!(spec.complex_pairs, vec![(rat(0), rat(1), 1)]);
        let again = serde_json::to_string(&RootSpecJson::new(&spec)).unwrap();
        assert_eq!(again, r#"{"real":[["1/2",2]],"complex":[["0","1",1]]}"#);
    }
}
