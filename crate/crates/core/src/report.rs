//! Per-graph reports: the polynomial together with the derived invariants,
//! renderable as text or JSON (big integers as decimal strings).

use crate::analysis::verify_multiplicity_theorem;
use crate::closed_forms::{compute_dist_poly, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::automorphisms;
use crate::oracle::{dist_poly_oracle, distinguishing_number_from_poly, phi_poly};
use crate::poly::IntPoly;
use num::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Everything the CLI prints for one graph.
#[derive(Clone, Debug)]
pub struct Report {
    pub descriptor: String,
    pub n: usize,
    pub poly: IntPoly,
    pub aut_order: BigInt,
    pub dist_number: u32,
    pub orbit_count: usize,
    pub zero_multiplicity: usize,
    pub provenance: Vec<String>,
}

impl Report {
    fn validated(self) -> Result<Report> {
        if self.poly.degree() != Some(self.n) || !self.poly.is_monic() {
            return Err(Error::Internal(format!(
                "report polynomial is not monic of degree {}: {}",
                self.n, self.poly
            )));
        }
        if self.zero_multiplicity < self.orbit_count {
            return Err(Error::Internal(format!(
                "zero multiplicity {} below orbit count {}",
                self.zero_multiplicity, self.orbit_count
            )));
        }
        Ok(self)
    }

    /// Report for a concrete graph. `force_oracle` bypasses the family
    /// recognizers and union composition.
    pub fn for_graph(
        g: &Graph,
        descriptor: String,
        force_oracle: bool,
        budget: u64,
        aut_cap: usize,
    ) -> Result<Report> {
        let (poly, aut_order, provenance) = if force_oracle {
            let poly = dist_poly_oracle(g, budget)?;
            let aut = automorphisms(g, aut_cap)?;
            (poly, BigInt::from(aut.order()), vec!["oracle".to_string()])
        } else {
            let r = compute_dist_poly(g, budget, aut_cap)?;
            (r.poly, r.aut_order, r.provenance)
        };
        // the quotient must be integer-valued; failure means a counting bug
        phi_poly(&poly, &aut_order)?;
        let dist_number = distinguishing_number_from_poly(&poly)?;
        let mult = verify_multiplicity_theorem(g, &poly)?;
        if !mult.ok {
            return Err(Error::Internal(format!(
                "multiplicity {} below orbit count {} for {descriptor}",
                mult.multiplicity, mult.orbit_count
            )));
        }
        Report {
            descriptor,
            n: g.n(),
            poly,
            aut_order,
            dist_number,
            orbit_count: mult.orbit_count,
            zero_multiplicity: mult.multiplicity,
            provenance,
        }
        .validated()
    }

    /// Report for a named family, from formulas alone.
    pub fn for_family(spec: &FamilySpec) -> Result<Report> {
        let poly = spec.poly()?;
        let dist_number = distinguishing_number_from_poly(&poly)?;
        let zero_multiplicity = if spec.n() == 0 {
            0
        } else {
            poly.zero_multiplicity()?
        };
        Report {
            descriptor: spec.describe(),
            n: spec.n(),
            poly,
            aut_order: spec.aut_order(),
            dist_number,
            orbit_count: spec.orbit_count(),
            zero_multiplicity,
            provenance: vec![spec.provenance_tag()],
        }
        .validated()
    }

    pub fn to_json(&self) -> JsonReport {
        JsonReport {
            n: self.n.to_string(),
            poly: JsonPoly {
                coeffs: self.poly.coeffs_decimal(),
            },
            aut_order: self.aut_order.to_string(),
            dist_number: self.dist_number.to_string(),
            orbits: self.orbit_count.to_string(),
            zero_multiplicity: self.zero_multiplicity.to_string(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }

    /// Compact single-line JSON, for one-report-per-line output.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph: {}", self.descriptor)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "dist_poly: {}", self.poly)?;
        writeln!(f, "aut_order: {}", self.aut_order)?;
        writeln!(f, "dist_number: {}", self.dist_number)?;
        writeln!(f, "orbits: {}", self.orbit_count)?;
        writeln!(f, "zero_multiplicity: {}", self.zero_multiplicity)?;
        write!(f, "provenance: {}", self.provenance.join(", "))
    }
}

/// JSON wire form: every integer is a decimal string, since coefficient
/// and group sizes overflow any fixed-width JSON number.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonReport {
    pub n: String,
    pub poly: JsonPoly,
    pub aut_order: String,
    pub dist_number: String,
    pub orbits: String,
    pub zero_multiplicity: String,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonPoly {
    pub coeffs: Vec<String>,
}

impl JsonReport {
    pub fn parse(text: &str) -> Result<JsonReport> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArg(format!("bad report JSON: {e}")))
    }

    pub fn poly(&self) -> Result<IntPoly> {
        IntPoly::from_decimal_coeffs(&self.poly.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::cycle_poly;
    use crate::graph::cycle_graph;
    use crate::group::DEFAULT_AUT_CAP;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn c4_report_known_values() {
        let g = cycle_graph(4);
        let r = Report::for_graph(&g, "C4".into(), false, DEFAULT_BUDGET, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(r.poly.to_string(), "k^4 - 2k^3 - k^2 + 2k");
        assert_eq!(r.dist_number, 3);
        assert_eq!(r.orbit_count, 1);
        assert_eq!(r.zero_multiplicity, 1);
        assert_eq!(r.aut_order, BigInt::from(8));
        let text = r.to_string();
        assert!(text.contains("k^4 - 2k^3 - k^2 + 2k"));
    }

    #[test]
    fn forced_oracle_matches_closed_form() {
        let g = cycle_graph(5);
        let forced =
            Report::for_graph(&g, "C5".into(), true, DEFAULT_BUDGET, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(forced.poly, cycle_poly(5));
        assert_eq!(forced.provenance, vec!["oracle"]);
        assert_eq!(forced.dist_number, 3);
    }

    #[test]
    fn family_reports() {
        let r = Report::for_family(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(r.poly, cycle_poly(6));
        assert_eq!(r.aut_order, BigInt::from(12));
        assert_eq!(r.orbit_count, 1);

        let r = Report::for_family(&FamilySpec::Multipartite(vec![(2, 3)])).unwrap();
        assert_eq!(r.poly.to_string(), "k^6 - 3k^5 - 3k^4 + 11k^3 + 2k^2 - 8k");
        assert_eq!(r.aut_order, BigInt::from(48));

        let r = Report::for_family(&FamilySpec::Path(1)).unwrap();
        assert_eq!(r.poly.to_string(), "k");
        assert_eq!(r.dist_number, 1);
    }

    #[test]
    fn json_roundtrip_reconstructs_poly() {
        let r = Report::for_family(&FamilySpec::Cycle(9)).unwrap();
        let json = r.to_json_string();
        let parsed = JsonReport::parse(&json).unwrap();
        assert_eq!(parsed.poly().unwrap(), r.poly);
        assert_eq!(parsed, r.to_json());
        assert_eq!(parsed.zero_multiplicity, "2");
        assert_eq!(parsed.orbits, "1");
    }

    #[test]
    fn identical_inputs_give_identical_reports() {
        let g = cycle_graph(6);
        let a = Report::for_graph(&g, "g".into(), false, DEFAULT_BUDGET, DEFAULT_AUT_CAP).unwrap();
        let b = Report::for_graph(&g, "g".into(), false, DEFAULT_BUDGET, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(a.to_json_string(), b.to_json_string());
        assert_eq!(a.to_string(), b.to_string());
    }
}
