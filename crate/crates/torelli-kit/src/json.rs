//! Versioned JSON schemas for every external interface.
//!
//! All top-level documents carry `"schema": "torelli-kit/1"` and are parsed
//! strictly (unknown fields rejected, schema tag required). Entries are
//! plain 64-bit integers on the wire; conversion to and from the exact
//! internal representation is fallible in both directions and never silently
//! truncates. Serialization is deterministic: struct fields keep declaration
//! order and term maps iterate in sorted order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, CertificateInput, CertificateSource};
use crate::groupring::GroupRingElement;
use crate::legendrian::{FrontDiagram, FrontEvent, Orientation};
use crate::linalg::{IntMatrix, IntVector, SmithDecomposition};
use crate::presentation::{BettiReport, BoundaryData, CapData, LinkTrace};
use crate::variation::{SkewForm, Variation};

pub const SCHEMA: &str = "torelli-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("unsupported schema {got:?}, expected {SCHEMA:?}")]
    Schema { got: String },
    #[error("integer entry out of the 64-bit wire range")]
    Overflow,
    #[error("invalid document: {0}")]
    Invalid(String),
}

fn check_schema(got: &str) -> Result<(), JsonError> {
    if got == SCHEMA {
        Ok(())
    } else {
        Err(JsonError::Schema {
            got: got.to_string(),
        })
    }
}

fn matrix_to_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, JsonError> {
    m.to_i64_rows().map_err(|_| JsonError::Overflow)
}

fn rows_to_matrix(rows: &[Vec<i64>]) -> Result<IntMatrix, JsonError> {
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(JsonError::Invalid("ragged matrix rows".into()));
        }
    }
    Ok(IntMatrix::from_i64_rows(rows))
}

fn vector_to_wire(v: &[BigInt]) -> Result<Vec<i64>, JsonError> {
    v.iter()
        .map(|e| i64::try_from(e).map_err(|_| JsonError::Overflow))
        .collect()
}

fn wire_to_vector(v: &[i64]) -> IntVector {
    v.iter().map(|&e| BigInt::from(e)).collect()
}

/// `LinkTrace` wire form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDto {
    pub schema: String,
    pub components: usize,
    pub framings: Vec<i64>,
    pub linking: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TryFrom<&LinkTrace> for TraceDto {
    type Error = JsonError;
    fn try_from(t: &LinkTrace) -> Result<Self, JsonError> {
        Ok(TraceDto {
            schema: SCHEMA.to_string(),
            components: t.components(),
            framings: vector_to_wire(t.framings())?,
            linking: matrix_to_rows(t.intersection_form())?,
            labels: t.labels().map(|l| l.to_vec()),
        })
    }
}

impl TryFrom<TraceDto> for LinkTrace {
    type Error = JsonError;
    fn try_from(dto: TraceDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        if dto.linking.len() != dto.components {
            return Err(JsonError::Invalid(format!(
                "components = {} but linking has {} rows",
                dto.components,
                dto.linking.len()
            )));
        }
        let linking = rows_to_matrix(&dto.linking)?;
        let linking = if dto.components == 0 {
            IntMatrix::zero(0, 0)
        } else {
            linking
        };
        LinkTrace::new(wire_to_vector(&dto.framings), linking, dto.labels)
            .map_err(|e| JsonError::Invalid(e.to_string()))
    }
}

/// `CapData` wire form (always nested, so no schema tag).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapDto {
    pub cap_h1_vanishes: bool,
    pub basic_class_restriction: Vec<i64>,
}

impl TryFrom<&CapData> for CapDto {
    type Error = JsonError;
    fn try_from(c: &CapData) -> Result<Self, JsonError> {
        Ok(CapDto {
            cap_h1_vanishes: c.cap_h1_vanishes,
            basic_class_restriction: vector_to_wire(&c.basic_class_restriction)?,
        })
    }
}

impl From<CapDto> for CapData {
    fn from(dto: CapDto) -> CapData {
        CapData {
            cap_h1_vanishes: dto.cap_h1_vanishes,
            basic_class_restriction: wire_to_vector(&dto.basic_class_restriction),
        }
    }
}

/// `Variation` wire form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariationDto {
    pub schema: String,
    pub trace: TraceDto,
    pub matrix: Vec<Vec<i64>>,
}

impl TryFrom<&Variation> for VariationDto {
    type Error = JsonError;
    fn try_from(v: &Variation) -> Result<Self, JsonError> {
        Ok(VariationDto {
            schema: SCHEMA.to_string(),
            trace: TraceDto::try_from(v.trace())?,
            matrix: matrix_to_rows(v.matrix())?,
        })
    }
}

impl TryFrom<VariationDto> for Variation {
    type Error = JsonError;
    fn try_from(dto: VariationDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        let trace = LinkTrace::try_from(dto.trace)?;
        let matrix = rows_to_matrix(&dto.matrix)?;
        Variation::new(trace, matrix).map_err(|e| JsonError::Invalid(e.to_string()))
    }
}

/// `SkewForm` wire form, in canonical free coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewFormDto {
    pub schema: String,
    pub matrix: Vec<Vec<i64>>,
}

impl TryFrom<&SkewForm> for SkewFormDto {
    type Error = JsonError;
    fn try_from(s: &SkewForm) -> Result<Self, JsonError> {
        Ok(SkewFormDto {
            schema: SCHEMA.to_string(),
            matrix: matrix_to_rows(&s.canonical_matrix())?,
        })
    }
}

impl TryFrom<SkewFormDto> for SkewForm {
    type Error = JsonError;
    fn try_from(dto: SkewFormDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        let matrix = rows_to_matrix(&dto.matrix)?;
        SkewForm::canonical(matrix).map_err(|e| JsonError::Invalid(e.to_string()))
    }
}

/// `FrontDiagram` wire form: the JSON twin of the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrontDto {
    pub schema: String,
    pub orientations: Vec<String>,
    pub words: Vec<Vec<String>>,
}

impl TryFrom<&FrontDiagram> for FrontDto {
    type Error = JsonError;
    fn try_from(f: &FrontDiagram) -> Result<Self, JsonError> {
        Ok(FrontDto {
            schema: SCHEMA.to_string(),
            orientations: f
                .orientations()
                .iter()
                .map(|o| {
                    match o {
                        Orientation::Plus => "+",
                        Orientation::Minus => "-",
                    }
                    .to_string()
                })
                .collect(),
            words: f
                .words()
                .iter()
                .map(|w| w.iter().map(|e| e.to_string()).collect())
                .collect(),
        })
    }
}

impl TryFrom<FrontDto> for FrontDiagram {
    type Error = JsonError;
    fn try_from(dto: FrontDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        let mut orientations = Vec::new();
        for s in &dto.orientations {
            orientations.push(match s.as_str() {
                "+" => Orientation::Plus,
                "-" => Orientation::Minus,
                other => {
                    return Err(JsonError::Invalid(format!(
                        "unknown orientation sign {other:?}"
                    )))
                }
            });
        }
        let mut words = Vec::new();
        for word in &dto.words {
            let mut events = Vec::new();
            for tok in word {
                if tok.len() < 2 {
                    return Err(JsonError::Invalid(format!("bad event token {tok:?}")));
                }
                let (kind, idx) = tok.split_at(1);
                let position: usize = idx
                    .parse()
                    .map_err(|_| JsonError::Invalid(format!("bad event index in {tok:?}")))?;
                events.push(match kind {
                    "L" => FrontEvent::Left(position),
                    "R" => FrontEvent::Right(position),
                    "X" => FrontEvent::Cross(position),
                    other => {
                        return Err(JsonError::Invalid(format!("unknown event kind {other:?}")))
                    }
                });
            }
            words.push(events);
        }
        FrontDiagram::new(words, orientations).map_err(|e| JsonError::Invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto {
    pub exp: Vec<i64>,
    pub coeff: i64,
}

/// `GroupRingElement` wire form; terms sorted lexicographically by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRingDto {
    pub schema: String,
    pub generators: Vec<String>,
    pub terms: Vec<TermDto>,
}

impl TryFrom<&GroupRingElement> for GroupRingDto {
    type Error = JsonError;
    fn try_from(g: &GroupRingElement) -> Result<Self, JsonError> {
        let mut terms = Vec::new();
        for (exp, coeff) in g.terms() {
            terms.push(TermDto {
                exp: exp.clone(),
                coeff: i64::try_from(coeff).map_err(|_| JsonError::Overflow)?,
            });
        }
        Ok(GroupRingDto {
            schema: SCHEMA.to_string(),
            generators: g.generators().to_vec(),
            terms,
        })
    }
}

impl TryFrom<GroupRingDto> for GroupRingElement {
    type Error = JsonError;
    fn try_from(dto: GroupRingDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        let mut acc = GroupRingElement::zero(dto.generators.clone());
        for term in dto.terms {
            let mono = GroupRingElement::monomial(
                dto.generators.clone(),
                term.exp,
                BigInt::from(term.coeff),
            )
            .map_err(|e| JsonError::Invalid(e.to_string()))?;
            acc = acc
                .add(&mono)
                .map_err(|e| JsonError::Invalid(e.to_string()))?;
        }
        Ok(acc)
    }
}

/// `CertificateInput` wire form: Stein sources carry their front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateInputDto {
    pub schema: String,
    pub trace: TraceDto,
    pub c1_restriction: Vec<i64>,
    pub invariant_nonzero: bool,
    pub cap: CapDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub front: Option<FrontDto>,
}

impl TryFrom<&CertificateInput> for CertificateInputDto {
    type Error = JsonError;
    fn try_from(input: &CertificateInput) -> Result<Self, JsonError> {
        Ok(CertificateInputDto {
            schema: SCHEMA.to_string(),
            trace: TraceDto::try_from(&input.trace)?,
            c1_restriction: vector_to_wire(&input.c1_restriction)?,
            invariant_nonzero: input.invariant_nonzero,
            cap: CapDto::try_from(&input.cap)?,
            front: match &input.source {
                CertificateSource::Stein(front) => Some(FrontDto::try_from(front)?),
                CertificateSource::Explicit => None,
            },
        })
    }
}

impl TryFrom<CertificateInputDto> for CertificateInput {
    type Error = JsonError;
    fn try_from(dto: CertificateInputDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        let source = match dto.front {
            Some(front) => CertificateSource::Stein(FrontDiagram::try_from(front)?),
            None => CertificateSource::Explicit,
        };
        Ok(CertificateInput {
            trace: LinkTrace::try_from(dto.trace)?,
            c1_restriction: wire_to_vector(&dto.c1_restriction),
            invariant_nonzero: dto.invariant_nonzero,
            cap: CapData::from(dto.cap),
            source,
        })
    }
}

/// `BoundaryProfile` wire form for the realizability classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDto {
    pub schema: String,
    pub b1: i64,
    pub is_prime: bool,
    pub is_t3: bool,
    pub seifert_over_t2: bool,
}

impl From<&crate::certificate::BoundaryProfile> for ProfileDto {
    fn from(p: &crate::certificate::BoundaryProfile) -> ProfileDto {
        ProfileDto {
            schema: SCHEMA.to_string(),
            b1: p.b1,
            is_prime: p.is_prime,
            is_t3: p.is_t3,
            seifert_over_t2: p.seifert_over_t2,
        }
    }
}

impl TryFrom<ProfileDto> for crate::certificate::BoundaryProfile {
    type Error = JsonError;
    fn try_from(dto: ProfileDto) -> Result<Self, JsonError> {
        check_schema(&dto.schema)?;
        Ok(crate::certificate::BoundaryProfile {
            b1: dto.b1,
            is_prime: dto.is_prime,
            is_t3: dto.is_t3,
            seifert_over_t2: dto.seifert_over_t2,
        })
    }
}

/// Matrix document: the input of the `snf` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDto {
    pub schema: String,
    pub matrix: Vec<Vec<i64>>,
}

impl MatrixDto {
    pub fn new(m: &IntMatrix) -> Result<Self, JsonError> {
        Ok(MatrixDto {
            schema: SCHEMA.to_string(),
            matrix: matrix_to_rows(m)?,
        })
    }

    pub fn into_matrix(self) -> Result<IntMatrix, JsonError> {
        check_schema(&self.schema)?;
        rows_to_matrix(&self.matrix)
    }
}

/// Report of the `snf` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfReportDto {
    pub schema: String,
    pub source: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub s: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub diagonal: Vec<i64>,
    pub rank: usize,
}

impl SnfReportDto {
    pub fn new(d: &SmithDecomposition) -> Result<Self, JsonError> {
        Ok(SnfReportDto {
            schema: SCHEMA.to_string(),
            source: matrix_to_rows(&d.source)?,
            u: matrix_to_rows(&d.u)?,
            s: matrix_to_rows(&d.s)?,
            v: matrix_to_rows(&d.v)?,
            diagonal: vector_to_wire(&d.diagonal())?,
            rank: d.rank(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDto {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    pub display: String,
}

/// Report of the `homology` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReportDto {
    pub schema: String,
    pub b2: usize,
    pub b1_boundary: usize,
    pub form_rank: usize,
    pub h1: GroupDto,
    pub h2_boundary: Vec<Vec<i64>>,
    pub duality: Vec<Vec<i64>>,
    pub consistent: bool,
    pub observations: Vec<String>,
}

impl HomologyReportDto {
    pub fn new(boundary: &BoundaryData, report: &BettiReport) -> Result<Self, JsonError> {
        Ok(HomologyReportDto {
            schema: SCHEMA.to_string(),
            b2: report.b2,
            b1_boundary: report.b1_boundary,
            form_rank: report.form_rank,
            h1: GroupDto {
                free_rank: boundary.h1.free_rank,
                torsion: vector_to_wire(&boundary.h1.torsion)?,
                display: boundary.h1.to_string(),
            },
            h2_boundary: matrix_to_rows(&boundary.h2_boundary)?,
            duality: matrix_to_rows(&boundary.duality)?,
            consistent: report.consistent,
            observations: report.observations.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    pub k: i64,
    pub class: Vec<i64>,
}

/// `Certificate` wire form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub schema: String,
    pub b1_boundary: usize,
    pub torelli_rank: usize,
    pub d: Option<i64>,
    pub v1: Option<Vec<i64>>,
    pub v2: Option<Vec<i64>>,
    pub displacement_witness: Vec<WitnessDto>,
    pub infinitely_many_nonsmoothable: bool,
    pub all_nontrivial_nonsmoothable: bool,
    pub failure_reason: Option<String>,
    pub assumed: Vec<String>,
}

impl CertificateDto {
    pub fn new(c: &Certificate) -> Result<Self, JsonError> {
        Ok(CertificateDto {
            schema: SCHEMA.to_string(),
            b1_boundary: c.b1_boundary,
            torelli_rank: c.torelli_rank,
            d: match &c.d {
                Some(d) => Some(i64::try_from(d).map_err(|_| JsonError::Overflow)?),
                None => None,
            },
            v1: c.v1.as_ref().map(|v| vector_to_wire(v)).transpose()?,
            v2: c.v2.as_ref().map(|v| vector_to_wire(v)).transpose()?,
            displacement_witness: c
                .displacement_witness
                .iter()
                .map(|(k, class)| {
                    Ok(WitnessDto {
                        k: *k,
                        class: vector_to_wire(class)?,
                    })
                })
                .collect::<Result<_, JsonError>>()?,
            infinitely_many_nonsmoothable: c.infinitely_many_nonsmoothable,
            all_nontrivial_nonsmoothable: c.all_nontrivial_nonsmoothable,
            failure_reason: c.failure_reason.map(|f| f.describe().to_string()),
            assumed: c.assumed.clone(),
        })
    }
}

/// Report of the `variation` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariationReportDto {
    pub schema: String,
    pub poincare: bool,
    /// `None` when the variation is not Poincaré (the notion does not apply).
    pub torelli: Option<bool>,
    pub induced_automorphism: Option<Vec<Vec<i64>>>,
    /// Canonical skew form, present exactly when the variation is Torelli.
    pub skew_form: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorelliGeneratorDto {
    /// Indices `(i, j)` of the wedge `e_i ^ e_j` in the canonical free basis.
    pub wedge: [usize; 2],
    pub matrix: Vec<Vec<i64>>,
}

/// Report of the `torelli` subcommand: the group structure over a given trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorelliReportDto {
    pub schema: String,
    pub b1_boundary: usize,
    pub torelli_rank: usize,
    pub h1: GroupDto,
    pub generators: Vec<TorelliGeneratorDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReportDto {
    pub label: String,
    pub tb: i64,
    pub rot: i64,
    pub writhe: i64,
    pub crossings: usize,
    pub left_cusps: usize,
    pub right_cusps: usize,
    pub up_cusps: usize,
    pub down_cusps: usize,
}

/// Report of the `legendrian` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianReportDto {
    pub schema: String,
    pub components: Vec<ComponentReportDto>,
    pub trace: TraceDto,
    pub chern_class: Vec<i64>,
}

/// Report of the `distinguish` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishDto {
    pub schema: String,
    pub r: i64,
    pub m: i64,
    pub n_r: i64,
    pub n_m: i64,
    pub genus_upper: i64,
    pub genus_lower: i64,
    pub verdict: String,
}

/// Report of the `dehn-twist` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DehnTwistDto {
    pub schema: String,
    pub b1: i64,
    pub is_prime: bool,
    pub is_t3: bool,
    pub seifert_over_t2: bool,
    pub verdict: String,
}

/// Report of `sw --check-distinct`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctDto {
    pub schema: String,
    pub range: [i64; 2],
    pub all_distinct: bool,
    pub equal_pairs: Vec<[i64; 2]>,
}

/// Report of `sw` over a range of parameters without `--check-distinct`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwListDto {
    pub schema: String,
    pub range: [i64; 2],
    pub elements: Vec<GroupRingDto>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::stein_certify;
    use crate::families::{xn_family, z_fixture};
    use crate::groupring::sw_family;
    use crate::legendrian::xn_front;
    use crate::linalg::smith_normal_form;

    #[test]
    fn trace_roundtrip_is_identity() {
        let (trace, _) = xn_family(2);
        let dto = TraceDto::try_from(&trace).unwrap();
        let text = serde_json::to_string_pretty(&dto).unwrap();
        let parsed: TraceDto = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, dto);
        let back = LinkTrace::try_from(parsed).unwrap();
        assert_eq!(back, trace);
        // Parse -> serialize -> parse is byte-identical.
        let again = serde_json::to_string_pretty(&TraceDto::try_from(&back).unwrap()).unwrap();
        assert_eq!(again, text);
    }

    #[test]
    fn schema_tag_is_required() {
        let (trace, _) = xn_family(1);
        let mut dto = TraceDto::try_from(&trace).unwrap();
        dto.schema = "torelli-kit/99".into();
        assert_eq!(
            LinkTrace::try_from(dto),
            Err(JsonError::Schema {
                got: "torelli-kit/99".into()
            })
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"schema":"torelli-kit/1","components":0,"framings":[],"linking":[],"surprise":1}"#;
        assert!(serde_json::from_str::<TraceDto>(text).is_err());
    }

    #[test]
    fn ragged_matrices_are_rejected() {
        let dto = MatrixDto {
            schema: SCHEMA.into(),
            matrix: vec![vec![1, 2], vec![3]],
        };
        assert!(matches!(dto.into_matrix(), Err(JsonError::Invalid(_))));
    }

    #[test]
    fn front_roundtrip() {
        let f = xn_front(3);
        let dto = FrontDto::try_from(&f).unwrap();
        let back = FrontDiagram::try_from(dto.clone()).unwrap();
        assert_eq!(back, f);
        let text = serde_json::to_string(&dto).unwrap();
        let parsed: FrontDto = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, dto);
    }

    #[test]
    fn groupring_roundtrip_sorted() {
        let sw = sw_family(2);
        let dto = GroupRingDto::try_from(&sw).unwrap();
        assert_eq!(dto.terms.len(), 12);
        let mut sorted = dto.terms.clone();
        sorted.sort_by(|a, b| a.exp.cmp(&b.exp));
        assert_eq!(sorted, dto.terms, "terms come out lexicographically");
        let back = GroupRingElement::try_from(dto).unwrap();
        assert_eq!(back, sw);
    }

    #[test]
    fn certificate_input_roundtrip_both_sources() {
        let (trace, cap) = z_fixture();
        let explicit = CertificateInput {
            c1_restriction: cap.basic_class_restriction.clone(),
            invariant_nonzero: true,
            cap,
            source: CertificateSource::Explicit,
            trace,
        };
        let dto = CertificateInputDto::try_from(&explicit).unwrap();
        assert!(dto.front.is_none());
        let back = CertificateInput::try_from(dto).unwrap();
        assert_eq!(back, explicit);

        let (trace, front) = xn_family(1);
        let stein = CertificateInput {
            c1_restriction: crate::legendrian::chern_class(&front).unwrap(),
            invariant_nonzero: true,
            cap: CapData {
                cap_h1_vanishes: true,
                basic_class_restriction: crate::legendrian::chern_class(&front).unwrap(),
            },
            source: CertificateSource::Stein(front),
            trace,
        };
        let dto = CertificateInputDto::try_from(&stein).unwrap();
        assert!(dto.front.is_some());
        let back = CertificateInput::try_from(dto).unwrap();
        assert_eq!(back, stein);
    }

    #[test]
    fn certificate_report_shape() {
        let (_, front) = xn_family(2);
        let cert = stein_certify(&front).unwrap();
        let dto = CertificateDto::new(&cert).unwrap();
        assert_eq!(dto.d, Some(4));
        assert_eq!(dto.failure_reason, None);
        assert_eq!(dto.displacement_witness.len(), 7);
        let text = serde_json::to_string_pretty(&dto).unwrap();
        let parsed: CertificateDto = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, dto);
    }

    #[test]
    fn snf_report_shape() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4], vec![4, 8]]);
        let d = smith_normal_form(&m);
        let dto = SnfReportDto::new(&d).unwrap();
        assert_eq!(dto.diagonal, vec![2, 0]);
        assert_eq!(dto.rank, 1);
    }
}
