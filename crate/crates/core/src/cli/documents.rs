//! JSON documents read and written by the command-line tool. Every field
//! element is an exact string, never a JSON number.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leonard::{LeonardParameterReport, LeonardVerdict, ParameterArray};
use crate::linalg::{Field, FieldElement, SquareMatrix, Vector};
use crate::split::Orderings;

/// `"rational"` or `{"gf": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Gf(u64),
}

impl FieldSpec {
    pub fn field(self) -> Result<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::Rationals),
            FieldSpec::Gf(p) => Field::prime(p),
        }
    }

    pub fn of(field: Field) -> Self {
        match field.modulus() {
            Some(p) => FieldSpec::Gf(p as u64),
            None => FieldSpec::Rational,
        }
    }
}

pub type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatricesDoc {
    #[serde(rename = "A")]
    pub a: Rows,
    #[serde(rename = "A_star")]
    pub a_star: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterArrayDoc {
    pub d: usize,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub varphi: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderingsDoc {
    pub theta_order: Vec<String>,
    pub theta_star_order: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<MatricesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter_array: Option<ParameterArrayDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orderings: Option<OrderingsDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionsDoc {
    pub a_lower: bool,
    pub a_upper: bool,
    pub a_star_lower: bool,
    pub a_star_upper: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub i: usize,
    pub j: usize,
    pub condition: String,
    pub product: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDoc {
    pub is_leonard_system: bool,
    pub conditions: ConditionsDoc,
    pub failure_witness: Option<WitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDoc {
    /// `u₀..u_d`, one vector per row.
    pub basis: Rows,
    pub split_sequence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntiautomorphismDoc {
    #[serde(rename = "H")]
    pub h: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub field: FieldSpec,
    pub orderings: OrderingsDoc,
    pub verdict: VerdictDoc,
    pub split: Option<SplitDoc>,
    pub companion_phi: Option<Vec<String>>,
    pub antiautomorphism: Option<AntiautomorphismDoc>,
    #[serde(rename = "G")]
    pub g: Option<Rows>,
    pub orderings_found: Vec<OrderingsDoc>,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub valid: bool,
    pub phi: Option<Vec<String>>,
    pub failed_condition: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructDocument {
    pub field: FieldSpec,
    pub matrices: MatricesDoc,
    pub report: ReportDoc,
}

pub fn strings(xs: &[FieldElement]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn matrix_rows(m: &SquareMatrix) -> Rows {
    m.rows().iter().map(|r| strings(r)).collect()
}

pub fn vector_rows(vs: &[Vector]) -> Rows {
    vs.iter().map(|v| strings(v.entries())).collect()
}

fn parse_list(field: Field, xs: &[String], name: &str) -> Result<Vec<FieldElement>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| field.parse_element(s).map_err(|e| Error::Parse(format!("{name}[{i}]: {}", inner(e)))))
        .collect()
}

fn inner(e: Error) -> String {
    match e {
        Error::Parse(m) => m,
        other => other.to_string(),
    }
}

pub fn parse_matrix(field: Field, rows: &Rows, name: &str) -> Result<SquareMatrix> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Parse(format!("{name} has no rows")));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != n {
                return Err(Error::Parse(format!("{name}[{i}] has {} entries, expected {n}", row.len())));
            }
            parse_list(field, row, &format!("{name}[{i}]"))
        })
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(field, parsed)
}

impl OrderingsDoc {
    pub fn of(o: &Orderings) -> Self {
        OrderingsDoc { theta_order: strings(&o.theta), theta_star_order: strings(&o.theta_star) }
    }

    pub fn parse(&self, field: Field) -> Result<Orderings> {
        Ok(Orderings::new(
            parse_list(field, &self.theta_order, "theta_order")?,
            parse_list(field, &self.theta_star_order, "theta_star_order")?,
        ))
    }
}

impl ParameterArrayDoc {
    pub fn of(pa: &ParameterArray) -> Self {
        ParameterArrayDoc {
            d: pa.diameter(),
            theta: strings(&pa.theta),
            theta_star: strings(&pa.theta_star),
            varphi: strings(&pa.varphi),
        }
    }

    pub fn parse(&self, field: Field) -> Result<ParameterArray> {
        let n = self.d + 1;
        for (name, len, want) in [
            ("theta", self.theta.len(), n),
            ("theta_star", self.theta_star.len(), n),
            ("varphi", self.varphi.len(), self.d),
        ] {
            if len != want {
                return Err(Error::Parse(format!("{name} has {len} entries, expected {want} for d = {}", self.d)));
            }
        }
        ParameterArray::new(
            field,
            parse_list(field, &self.theta, "theta")?,
            parse_list(field, &self.theta_star, "theta_star")?,
            parse_list(field, &self.varphi, "varphi")?,
        )
    }
}

impl VerdictDoc {
    pub fn of(v: &LeonardVerdict) -> Self {
        let [a_lower, a_upper, a_star_lower, a_star_upper] = v.condition_flags;
        VerdictDoc {
            is_leonard_system: v.is_leonard_system,
            conditions: ConditionsDoc { a_lower, a_upper, a_star_lower, a_star_upper },
            failure_witness: v.failure_witness.as_ref().map(|w| WitnessDoc {
                i: w.i,
                j: w.j,
                condition: w.condition.name().to_string(),
                product: matrix_rows(&w.product),
            }),
        }
    }
}

impl ReportDoc {
    pub fn of(r: &LeonardParameterReport) -> Self {
        ReportDoc {
            valid: r.valid,
            phi: r.phi.as_deref().map(strings),
            failed_condition: r.failed_condition.map(|c| c.name().to_string()),
        }
    }
}
