use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::detectors::FamilySpec;
use crate::error::{Error, Result};
use crate::generators::enumerate_connected;
use crate::solver::{iota_exact, SolverOptions};

fn ratio_text<S: Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render_ratio(r))
}

fn opt_ratio_text<S: Serializer>(
    r: &Option<Ratio<usize>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&render_ratio(r)),
        None => s.serialize_none(),
    }
}

/// Always `p/q`, also for integers (`0/1`, `1/1`).
pub fn render_ratio(r: &Ratio<usize>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Largest ι(G, F)/n over the connected graphs of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub family: String,
    pub n: usize,
    /// Number of connected graphs examined.
    pub graphs: usize,
    pub max_iota: usize,
    #[serde(serialize_with = "ratio_text")]
    pub ratio: Ratio<usize>,
    /// graph6 strings of the graphs attaining `max_iota`, in enumeration
    /// order.
    pub argmax: Vec<String>,
    #[serde(serialize_with = "opt_ratio_text")]
    pub reference: Option<Ratio<usize>>,
    pub exceeds_reference: Option<bool>,
    /// Graphs whose value could not be computed within the budget.
    pub errors: usize,
}

/// The lower-bound constant known for a family: 2/(2k+3) for K_{1,k} with
/// k >= 2, and 2/(2k+1) for C_k with k >= 5.
pub fn reference_constant(spec: &FamilySpec) -> Option<Ratio<usize>> {
    match spec.normalize().ok()? {
        FamilySpec::Star(k) if k >= 2 => Some(Ratio::new(2, 2 * k + 3)),
        FamilySpec::CycleLen(k) if k >= 5 => Some(Ratio::new(2, 2 * k + 1)),
        _ => None,
    }
}

/// c(F, n) computed exhaustively for each requested order.
pub fn survey(
    spec: &FamilySpec,
    orders: impl IntoIterator<Item = usize>,
    opts: &SolverOptions,
) -> Result<Vec<SurveyRecord>> {
    let spec = spec.normalize()?;
    let reference = reference_constant(&spec);
    let mut out = Vec::new();
    for n in orders {
        if n == 0 {
            return Err(Error::InvalidParameter("survey orders must be >= 1".into()));
        }
        let graphs = enumerate_connected(n)?;
        let values: Vec<Option<usize>> = graphs
            .par_iter()
            .map(|g| iota_exact(g, &spec, opts).ok().map(|c| c.size))
            .collect();
        let max_iota = values.iter().flatten().copied().max().unwrap_or(0);
        let argmax = graphs
            .iter()
            .zip(&values)
            .filter(|(_, v)| **v == Some(max_iota))
            .map(|(g, _)| g.to_graph6())
            .collect();
        let ratio = Ratio::new(max_iota, n);
        out.push(SurveyRecord {
            family: spec.to_string(),
            n,
            graphs: graphs.len(),
            max_iota,
            ratio,
            argmax,
            reference,
            exceeds_reference: reference.map(|c| ratio > c),
            errors: values.iter().filter(|v| v.is_none()).count(),
        });
    }
    Ok(out)
}
