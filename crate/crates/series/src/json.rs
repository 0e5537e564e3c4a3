use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SeriesError};
use crate::rat::{format_rat, parse_rat};
use crate::series::TruncatedSeries;
use crate::trunc::{Bound, Truncation};
use crate::vars::VarSet;

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    vars: Vec<String>,
    caps: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    bounds: Vec<BoundJson>,
    coeffs: Vec<(Vec<u32>, String)>,
}

#[derive(Serialize, Deserialize)]
struct BoundJson {
    weights: BTreeMap<String, u32>,
    max: i64,
}

impl TruncatedSeries {
    pub fn to_json(&self) -> String {
        let names = self.vars.names();
        let caps = names.iter().cloned().zip(self.trunc.cap_list().iter().copied()).collect();
        let bounds = self
            .trunc
            .bounds()
            .iter()
            .map(|b| BoundJson {
                weights: names.iter().cloned().zip(b.weights.iter().copied()).filter(|(_, w)| *w > 0).collect(),
                max: b.max,
            })
            .collect();
        let coeffs = self.coeffs.iter().map(|(e, c)| (e.clone(), format_rat(c))).collect();
        let j = SeriesJson { vars: names.to_vec(), caps, bounds, coeffs };
        serde_json::to_string(&j).expect("series serialization")
    }

    pub fn from_json(text: &str) -> Result<TruncatedSeries> {
        let j: SeriesJson = serde_json::from_str(text).map_err(|e| SeriesError::Parse(e.to_string()))?;
        let vars = VarSet::new(&j.vars)?;
        let mut caps = Vec::with_capacity(vars.len());
        for n in vars.names() {
            caps.push(*j.caps.get(n).ok_or_else(|| SeriesError::Parse(format!("missing cap for `{n}`")))?);
        }
        let mut bounds = Vec::new();
        for b in j.bounds {
            let mut w = vec![0u32; vars.len()];
            for (n, x) in b.weights {
                w[vars.require(&n)?] = x;
            }
            bounds.push(Bound { weights: w, max: b.max });
        }
        let trunc = Truncation::from_parts(caps, bounds);
        let mut terms = Vec::with_capacity(j.coeffs.len());
        for (e, c) in j.coeffs {
            if !trunc.contains(&e) {
                return Err(SeriesError::OutOfTruncation(e));
            }
            terms.push((e, parse_rat(&c)?));
        }
        TruncatedSeries::from_terms(&vars, &trunc, terms)
    }
}
