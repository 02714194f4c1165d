//! Reading ideals from JSON files and rendering reduced bases back out.
//!
//! File layout:
//!
//! ```json
//! {
//!   "variables": ["x", "y"],
//!   "field": { "mode": "q-rational", "q": "-1" },
//!   "polynomials": [
//!     [["1", [2, 0]], ["-2", [0, 1]]],
//!     [["1", [0, 2]], ["1", [1, 0]]]
//!   ]
//! }
//! ```
//!
//! Each polynomial is a list of terms; each term is a rational coefficient
//! (as a `p` or `p/q` string) followed by one exponent per variable. With
//! `"mode": "q-generic"` the same rational coefficients are read as constants
//! of the rational-function field in `q`.

use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::json;

use qcohom::algebra::{Exponent, Field, MonomialOrder, MultiPoly, PolyRing, RatFn, Rational};
use qcohom::groebner::Ideal;

#[derive(Deserialize)]
struct IdealFile {
    variables: Vec<String>,
    field: FieldSpec,
    polynomials: Vec<Vec<(String, Vec<u32>)>>,
}

#[derive(Deserialize)]
#[serde(tag = "mode")]
enum FieldSpec {
    #[serde(rename = "q-rational")]
    QRational { q: String },
    #[serde(rename = "q-generic")]
    QGeneric,
}

/// An ideal parsed from a file, in whichever coefficient field it declared.
pub enum LoadedIdeal {
    Specialized(Ideal<Rational>),
    Generic(Ideal<RatFn>),
}

fn build_polys<F: Field>(
    ring: &Arc<PolyRing>,
    raw: &[Vec<(String, Vec<u32>)>],
) -> Result<Vec<MultiPoly<F>>, String> {
    let nvars = ring.nvars();
    let mut polys = Vec::with_capacity(raw.len());
    for (pi, poly) in raw.iter().enumerate() {
        let mut terms = Vec::with_capacity(poly.len());
        for (coeff_str, exps) in poly {
            if exps.len() != nvars {
                return Err(format!(
                    "polynomial {pi}: exponent vector {exps:?} has {} entries, expected {nvars}",
                    exps.len()
                ));
            }
            let c = Rational::from_str(coeff_str)
                .map_err(|e| format!("polynomial {pi}: bad coefficient {coeff_str:?}: {e}"))?;
            terms.push((Exponent::from_vec(exps.clone()), F::from_rational(&c)));
        }
        polys.push(MultiPoly::from_terms(ring, terms));
    }
    Ok(polys)
}

/// Parses the ideal-file JSON into an ideal over the declared field.
pub fn parse_ideal(text: &str) -> Result<LoadedIdeal, String> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| format!("bad ideal file: {e}"))?;
    if file.variables.is_empty() {
        return Err("ideal file declares no variables".to_string());
    }
    let ring = PolyRing::new(file.variables.clone());
    match &file.field {
        FieldSpec::QRational { q } => {
            let q_val = Rational::from_str(q).map_err(|e| format!("bad q value {q:?}: {e}"))?;
            if q_val.is_zero() {
                return Err("q must be nonzero".to_string());
            }
            let polys = build_polys::<Rational>(&ring, &file.polynomials)?;
            let ideal = Ideal::new(ring, polys).map_err(|e| e.to_string())?;
            Ok(LoadedIdeal::Specialized(ideal))
        }
        FieldSpec::QGeneric => {
            let polys = build_polys::<RatFn>(&ring, &file.polynomials)?;
            let ideal = Ideal::new(ring, polys).map_err(|e| e.to_string())?;
            Ok(LoadedIdeal::Generic(ideal))
        }
    }
}

fn render_basis<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<String, String> {
    let gb = ideal.groebner_basis(order).map_err(|e| e.to_string())?;
    let dim = ideal.quotient_dimension(order).map_err(|e| e.to_string())?;
    let vars: Vec<&str> = (0..ideal.ring().nvars())
        .map(|i| ideal.ring().var_name(i))
        .collect();
    let basis: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
    let out = json!({
        "variables": vars,
        "order": order.name(),
        "basis": basis,
        "quotient_dimension": dim,
    });
    let mut s = serde_json::to_string_pretty(&out).expect("basis serialization cannot fail");
    s.push('\n');
    Ok(s)
}

/// Computes the reduced basis of a loaded ideal and renders the result JSON.
pub fn basis_report(loaded: &LoadedIdeal, order: &MonomialOrder) -> Result<String, String> {
    match loaded {
        LoadedIdeal::Specialized(ideal) => render_basis(ideal, order),
        LoadedIdeal::Generic(ideal) => render_basis(ideal, order),
    }
}

/// Parses `lex` or `grevlex` for the basis subcommand.
pub fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "lex" => Ok(MonomialOrder::Lex),
        "grevlex" => Ok(MonomialOrder::Grevlex),
        other => Err(format!("unknown order {other:?}; use lex or grevlex")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "variables": ["x", "y"],
        "field": { "mode": "q-rational", "q": "-1" },
        "polynomials": [
            [["1", [2, 0]], ["-2", [0, 1]]],
            [["1", [0, 2]], ["1", [1, 0]]]
        ]
    }"#;

    #[test]
    fn parses_and_reduces_sample() {
        let loaded = parse_ideal(SAMPLE).unwrap();
        let out = basis_report(&loaded, &MonomialOrder::Grevlex).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["order"], "grevlex");
        assert_eq!(v["quotient_dimension"], 4);
        assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn generic_mode_reads_constants_into_the_function_field() {
        let text = SAMPLE.replace(
            r#""field": { "mode": "q-rational", "q": "-1" }"#,
            r#""field": { "mode": "q-generic" }"#,
        );
        let loaded = parse_ideal(&text).unwrap();
        assert!(matches!(loaded, LoadedIdeal::Generic(_)));
        let out = basis_report(&loaded, &MonomialOrder::Lex).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["quotient_dimension"], 4);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_ideal("not json").is_err());
        let wrong_arity = SAMPLE.replace("[2, 0]", "[2]");
        assert!(parse_ideal(&wrong_arity).is_err());
        let zero_q = SAMPLE.replace(r#""q": "-1""#, r#""q": "0""#);
        assert!(parse_ideal(&zero_q).is_err());
        let bad_coeff = SAMPLE.replace(r#"["1", [2, 0]]"#, r#"["one", [2, 0]]"#);
        assert!(parse_ideal(&bad_coeff).is_err());
    }

    #[test]
    fn order_names_parse() {
        assert!(matches!(parse_order("lex"), Ok(MonomialOrder::Lex)));
        assert!(matches!(parse_order("GREVLEX"), Ok(MonomialOrder::Grevlex)));
        assert!(parse_order("weighted").is_err());
    }
}
