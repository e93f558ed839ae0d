//! JSON-facing report types and the per-graph analysis that fills them.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use idealconn::cliquetree::{kj_profile, maximal_cliques_chordal};
use idealconn::connectivity::{is_ideally_connected, IdealityReport};
use idealconn::decomposition::{find_kappa_clique_cut, verify_structure_theorem};
use idealconn::recognizers::{
    is_2k2_free, is_trivially_perfect, recognize_chordal, recognize_cograph, recognize_split,
    recognize_threshold,
};
use idealconn::theorems::{fast_ideal, AppliedTheorem, FastCertificate};
use idealconn::Graph;

#[derive(Serialize)]
pub struct WitnessJson {
    pub u: usize,
    pub v: usize,
    pub local: usize,
    pub bound: usize,
}

#[derive(Serialize)]
pub struct IdealJson {
    pub ideal: bool,
    pub kappa: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_table: Option<Vec<Vec<usize>>>,
}

impl IdealJson {
    pub fn from_report(report: &IdealityReport) -> IdealJson {
        IdealJson {
            ideal: report.ideally_connected,
            kappa: report.kappa,
            witness: report.witness.as_ref().map(|w| WitnessJson {
                u: w.u,
                v: w.v,
                local: w.local,
                bound: w.bound,
            }),
            local_table: report.local_table.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct FastJson {
    /// Which characterization applied: "cograph" or "chordal".
    pub theorem: &'static str,
    pub ideal: bool,
    /// The kind of certificate backing the verdict.
    pub certificate: &'static str,
}

#[derive(Serialize)]
pub struct ConditionsJson {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub overall: bool,
}

#[derive(Serialize)]
pub struct DecompositionJson {
    pub cut: Vec<usize>,
    pub subgraph_count: usize,
    pub conditions: ConditionsJson,
}

#[derive(Serialize)]
pub struct CliqueTreeSummaryJson {
    pub clique_count: usize,
    pub omega: usize,
    pub profile: Vec<usize>,
}

/// One analysis record; `batch` emits one per input line.
#[derive(Serialize)]
pub struct Report {
    pub input_id: String,
    pub classes: BTreeMap<&'static str, bool>,
    pub ideal: IdealJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fast: Option<FastJson>,
    /// False exactly when a fast verdict exists and contradicts the oracle.
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cliquetree: Option<CliqueTreeSummaryJson>,
    pub timing_ms: f64,
}

/// Extra, optional analysis sections.
#[derive(Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub with_decomposition: bool,
    pub with_cliquetree: bool,
    pub with_table: bool,
}

pub fn analyze(g: &Graph, input_id: String, options: AnalyzeOptions) -> Report {
    let start = Instant::now();
    let mut classes = BTreeMap::new();
    classes.insert("cograph", recognize_cograph(g).is_ok());
    classes.insert("chordal", recognize_chordal(g).is_ok());
    classes.insert("split", recognize_split(g).is_ok());
    classes.insert("threshold", recognize_threshold(g).is_ok());
    classes.insert("trivially_perfect", is_trivially_perfect(g));
    classes.insert("two_k2_free", is_2k2_free(g));

    // The zero-vertex graph is outside the oracle's domain; report it as
    // vacuously ideal.
    let oracle = if g.n() == 0 {
        IdealityReport { ideally_connected: true, witness: None, kappa: 0, local_table: None }
    } else {
        is_ideally_connected(g, options.with_table).expect("nonempty graph")
    };
    let fast = match fast_ideal(g) {
        v if v.theorem == AppliedTheorem::NotApplicable => None,
        v => Some(FastJson {
            theorem: match v.theorem {
                AppliedTheorem::Cograph => "cograph",
                AppliedTheorem::Chordal => "chordal",
                AppliedTheorem::NotApplicable => unreachable!(),
            },
            ideal: v.ideally_connected.expect("applicable verdict carries a boolean"),
            certificate: match v.certificate.expect("applicable verdict carries a certificate") {
                FastCertificate::Cotree(_) => "cotree",
                FastCertificate::TwoK2(_) => "2k2-witness",
                FastCertificate::CreationSequence(_) => "creation-sequence",
                FastCertificate::Forbidden(_) => "forbidden-subgraph",
            },
        }),
    };
    let agreement = fast.as_ref().is_none_or(|f| f.ideal == oracle.ideally_connected);

    let decomposition = if options.with_decomposition
        && g.n() >= 2
        && g.is_connected()
        && !g.is_complete()
    {
        find_kappa_clique_cut(g).ok().flatten().map(|cut| {
            let report = verify_structure_theorem(g, &cut).expect("cut just validated");
            DecompositionJson {
                cut: cut.members.iter().copied().collect(),
                subgraph_count: idealconn::decomposition::cut_subgraphs(g, &cut)
                    .expect("cut just validated")
                    .subgraphs
                    .len(),
                conditions: ConditionsJson {
                    cond1: report.cond1(),
                    cond2: report.cond2(),
                    cond3: report.cond3(),
                    overall: report.overall(),
                },
            }
        })
    } else {
        None
    };

    let cliquetree = if options.with_cliquetree {
        maximal_cliques_chordal(g).ok().map(|m| CliqueTreeSummaryJson {
            clique_count: m.len(),
            omega: m.omega(),
            profile: kj_profile(g).expect("chordal").counts,
        })
    } else {
        None
    };

    Report {
        input_id,
        classes,
        ideal: IdealJson::from_report(&oracle),
        fast,
        agreement,
        decomposition,
        cliquetree,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// An unparsable batch line, still one record in the output stream.
#[derive(Serialize)]
pub struct ErrorRecord {
    pub input_id: String,
    pub error: String,
}

/// End-of-run totals; written to stderr so stdout stays one record per
/// input line.
#[derive(Serialize, Default)]
pub struct BatchSummary {
    pub inputs: usize,
    pub parse_errors: usize,
    pub class_counts: BTreeMap<&'static str, usize>,
    pub ideal_count: usize,
    pub disagreements: usize,
}
