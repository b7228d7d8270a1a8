//! Job-document schema: JSON in, JSON out, rationals as strings.
//!
//! Every rational literal is either a string `"p"`/`"p/q"` or a plain JSON
//! integer; floats are rejected. Unknown fields are rejected everywhere so
//! a typo never silently changes a run.

use oplattice::detector::{CoefficientKind, Verdict};
use oplattice::lattice::Lattice;
use oplattice::pearson::{FailureReason, PearsonData, RegularityReport};
use oplattice::recurrence::RecurrenceTable;
use oplattice::scalar::{format_scalar, int, parse_scalar, Scalar};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A scalar carried through JSON as an exact string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Scalar);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                parse_scalar(v)
                    .map(Rat)
                    .ok_or_else(|| E::custom(format!("invalid rational literal {v:?}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat(int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                i64::try_from(v)
                    .map(|v| Rat(int(v)))
                    .map_err(|_| E::custom("integer literal out of range"))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rat, E> {
                Err(E::custom(format!(
                    "floating-point literal {v} not accepted; use a rational string"
                )))
            }
        }
        deserializer.deserialize_any(RatVisitor)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c3: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c4: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c5: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c6: Option<Rat>,
}

impl LatticeDoc {
    pub fn to_lattice(&self) -> Result<Lattice, String> {
        let need = |v: &Option<Rat>, name: &str| -> Result<Scalar, String> {
            v.as_ref()
                .map(|r| r.0.clone())
                .ok_or_else(|| format!("lattice kind {:?} requires field {name}", self.kind))
        };
        let absent = |v: &Option<Rat>, name: &str| -> Result<(), String> {
            if v.is_some() {
                Err(format!(
                    "field {name} is not valid for kind {:?}",
                    self.kind
                ))
            } else {
                Ok(())
            }
        };
        match self.kind.as_str() {
            "qlinear" => {
                absent(&self.c4, "c4")?;
                absent(&self.c5, "c5")?;
                absent(&self.c6, "c6")?;
                Lattice::q_linear(
                    need(&self.r, "r")?,
                    need(&self.c1, "c1")?,
                    need(&self.c2, "c2")?,
                    need(&self.c3, "c3")?,
                )
                .map_err(|e| e.to_string())
            }
            "quadratic" => {
                absent(&self.r, "r")?;
                absent(&self.c1, "c1")?;
                absent(&self.c2, "c2")?;
                absent(&self.c3, "c3")?;
                Lattice::quadratic(
                    need(&self.c4, "c4")?,
                    need(&self.c5, "c5")?,
                    need(&self.c6, "c6")?,
                )
                .map_err(|e| e.to_string())
            }
            other => Err(format!(
                "unknown lattice kind {other:?} (expected \"qlinear\" or \"quadratic\")"
            )),
        }
    }

    pub fn from_lattice(l: &Lattice) -> Self {
        match l {
            Lattice::QLinear { r, c1, c2, c3 } => LatticeDoc {
                kind: "qlinear".into(),
                r: Some(Rat(r.clone())),
                c1: Some(Rat(c1.clone())),
                c2: Some(Rat(c2.clone())),
                c3: Some(Rat(c3.clone())),
                c4: None,
                c5: None,
                c6: None,
            },
            Lattice::Quadratic { c4, c5, c6 } => LatticeDoc {
                kind: "quadratic".into(),
                r: None,
                c1: None,
                c2: None,
                c3: None,
                c4: Some(Rat(c4.clone())),
                c5: Some(Rat(c5.clone())),
                c6: Some(Rat(c6.clone())),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PearsonDoc {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
}

impl PearsonDoc {
    pub fn to_pearson(&self) -> Result<PearsonData, String> {
        PearsonData::new(
            self.a.0.clone(),
            self.b.0.clone(),
            self.c.0.clone(),
            self.d.0.clone(),
            self.e.0.clone(),
        )
        .map_err(|e| e.to_string())
    }

    pub fn from_pearson(pd: &PearsonData) -> Self {
        PearsonDoc {
            a: Rat(pd.a.clone()),
            b: Rat(pd.b.clone()),
            c: Rat(pd.c.clone()),
            d: Rat(pd.d.clone()),
            e: Rat(pd.e.clone()),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    #[serde(rename = "B")]
    pub b: Vec<Rat>,
    #[serde(rename = "C")]
    pub c: Vec<Rat>,
}

impl TableDoc {
    pub fn to_table(&self) -> Result<RecurrenceTable, String> {
        RecurrenceTable::new(
            self.b.iter().map(|r| r.0.clone()).collect(),
            self.c.iter().map(|r| r.0.clone()).collect(),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PkDoc {
    #[serde(rename = "N")]
    pub n: u32,
    pub gamma: Rat,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridDoc {
    #[serde(rename = "N")]
    pub n: Vec<u32>,
    pub gamma: Vec<Rat>,
    pub lattices: Vec<LatticeDoc>,
}

/// The one input schema shared by all commands; each command checks that
/// the sections it needs are present.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    pub lattice: Option<LatticeDoc>,
    pub pearson: Option<PearsonDoc>,
    pub table: Option<TableDoc>,
    pub pk: Option<PkDoc>,
    pub n_max: Option<usize>,
    pub verify_to: Option<usize>,
    pub grid: Option<GridDoc>,
}

// ---------------------------------------------------------------------------
// output documents
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct FailureOut {
    pub n: usize,
    pub reason: &'static str,
}

#[derive(Serialize)]
pub struct RegularityOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureOut>,
}

impl RegularityOut {
    pub fn from_report(report: &RegularityReport) -> Self {
        match &report.first_failure {
            None => RegularityOut {
                regular_to: Some(report.limit),
                first_failure: None,
            },
            Some(f) => RegularityOut {
                regular_to: report.regular_to(),
                first_failure: Some(FailureOut {
                    n: f.n,
                    reason: match f.reason {
                        FailureReason::DnZero => "dn_zero",
                        FailureReason::PhinZero => "phin_zero",
                    },
                }),
            },
        }
    }
}

#[derive(Serialize)]
pub struct RecurrenceOut {
    pub command: &'static str,
    pub table: TableDoc,
    pub regularity: RegularityOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated_at: Option<usize>,
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub n: usize,
    pub which: &'static str,
}

#[derive(Serialize)]
pub struct VerdictOut {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pearson: Option<PearsonDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerdictOut {
    pub fn from_verdict(v: &Verdict) -> Self {
        match v {
            Verdict::Classical { pd, verified_to } => VerdictOut {
                verdict: "classical",
                pearson: Some(PearsonDoc::from_pearson(pd)),
                verified_to: Some(*verified_to),
                witness: None,
                reason: None,
            },
            Verdict::NotClassical { witness } => VerdictOut {
                verdict: "not_classical",
                pearson: None,
                verified_to: None,
                witness: witness.as_ref().map(|w| WitnessOut {
                    n: w.index,
                    which: match w.kind {
                        CoefficientKind::B => "B",
                        CoefficientKind::C => "C",
                    },
                }),
                reason: None,
            },
            Verdict::Degenerate { reason } => VerdictOut {
                verdict: "degenerate",
                pearson: None,
                verified_to: None,
                witness: None,
                reason: Some(reason.clone()),
            },
        }
    }

    pub fn not_evaluated(reason: &str) -> Self {
        VerdictOut {
            verdict: "not_evaluated",
            pearson: None,
            verified_to: None,
            witness: None,
            reason: Some(reason.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub command: &'static str,
    #[serde(flatten)]
    pub verdict: VerdictOut,
}

#[derive(Serialize)]
pub struct PkRunOut {
    pub lattice: LatticeDoc,
    #[serde(flatten)]
    pub verdict: VerdictOut,
}

#[derive(Serialize)]
pub struct GramOut {
    pub orthogonal: bool,
    pub norm_ratios_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_off_diagonal: Option<OffDiagonalOut>,
}

#[derive(Serialize)]
pub struct OffDiagonalOut {
    pub n: usize,
    pub m: usize,
    pub value: Rat,
}

#[derive(Serialize)]
pub struct ParaKrawtchoukOut {
    pub command: &'static str,
    #[serde(rename = "N")]
    pub n: u32,
    pub gamma: Rat,
    pub nodes: Vec<Rat>,
    pub weights: Vec<Rat>,
    pub weight_sum: Rat,
    pub table: TableDoc,
    pub runs: Vec<PkRunOut>,
    pub gram: GramOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_pearson_max_k: Option<usize>,
}

#[derive(Serialize)]
pub struct SweepRecordOut {
    #[serde(rename = "N")]
    pub n: u32,
    pub gamma: Rat,
    pub lattice: LatticeDoc,
    #[serde(flatten)]
    pub verdict: VerdictOut,
}

#[derive(Serialize)]
pub struct SweepOut {
    pub command: &'static str,
    pub records: Vec<SweepRecordOut>,
}

/// Paper-style rendering of the lattice map, e.g. `2s + 1` or
/// `(1/2)q^-s + (1/2)q^s` with `q = r^2`.
pub fn format_lattice_map(l: &Lattice) -> String {
    fn term(coeff: &Scalar, sym: &str, first: bool) -> Option<String> {
        if oplattice::scalar::is_zero(coeff) {
            return None;
        }
        let c = format_scalar(coeff);
        let body = if sym.is_empty() {
            c
        } else if c == "1" {
            sym.to_string()
        } else if c == "-1" {
            format!("-{sym}")
        } else if c.contains('/') || c.starts_with('-') {
            format!("({c}){sym}")
        } else {
            format!("{c}{sym}")
        };
        Some(if first {
            body
        } else if let Some(stripped) = body.strip_prefix('-') {
            format!(" - {stripped}")
        } else {
            format!(" + {body}")
        })
    }
    let mut out = String::new();
    let parts: Vec<(Scalar, &str)> = match l {
        Lattice::Quadratic { c4, c5, c6 } => {
            vec![(c4.clone(), "s^2"), (c5.clone(), "s"), (c6.clone(), "")]
        }
        Lattice::QLinear { c1, c2, c3, .. } => {
            vec![(c1.clone(), "q^-s"), (c2.clone(), "q^s"), (c3.clone(), "")]
        }
    };
    for (coeff, sym) in &parts {
        if let Some(t) = term(coeff, sym, out.is_empty()) {
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    if let Lattice::QLinear { r, .. } = l {
        out.push_str(&format!(" (q = {})", format_scalar(&(r * r))));
    }
    out
}
