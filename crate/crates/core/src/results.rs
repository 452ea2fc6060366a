//! Per-graph result rows and their CSV / JSON rendering.

use std::time::Instant;

use serde::Serialize;

use crate::error::RecordError;
use crate::game::{Game, SearchMode};
use crate::graph::Graph;

pub const CSV_HEADER: &str = "id,n,m,rad,diam,girth,rc,lb,ub,ms";

/// One row of a results table. Distance fields are `None` for disconnected
/// graphs; `ms` is `None` unless timing was requested.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRecord {
    id: String,
    n: usize,
    m: usize,
    rad: Option<u32>,
    diam: Option<u32>,
    girth: u32,
    rc: Option<u32>,
    lb: Option<u32>,
    ub: Option<u32>,
    ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown output format {other:?}")),
        }
    }
}

impl ResultRecord {
    /// Builds a record, rejecting ids with commas and any rc outside
    /// `[lb, ub]`.
    #[allow(clippy::too_many_arguments)]
    pub fn try_new(
        id: impl Into<String>,
        n: usize,
        m: usize,
        rad: Option<u32>,
        diam: Option<u32>,
        girth: u32,
        rc: Option<u32>,
        bounds: Option<(u32, u32)>,
        ms: Option<f64>,
    ) -> Result<ResultRecord, RecordError> {
        let id = id.into();
        if id.contains(',') || id.contains('\n') {
            return Err(RecordError::BadId(id));
        }
        if let (Some(rc), Some((lb, ub))) = (rc, bounds) {
            if rc < lb || rc > ub {
                return Err(RecordError::BoundViolation { id, rc, lb, ub });
            }
        }
        Ok(ResultRecord {
            id,
            n,
            m,
            rad,
            diam,
            girth,
            rc,
            lb: bounds.map(|b| b.0),
            ub: bounds.map(|b| b.1),
            ms,
        })
    }

    /// Computes every field for `g`. Wall time is recorded only when
    /// `timing` is set, so untimed output is reproducible byte for byte.
    pub fn measure(
        id: impl Into<String>,
        g: &Graph,
        mode: SearchMode,
        timing: bool,
    ) -> Result<ResultRecord, RecordError> {
        let start = Instant::now();
        let girth = g.girth();
        let (rad, diam, rc, bounds) = match Game::new(g) {
            Ok(game) => {
                let rc = game.radius_capture_number(mode);
                (
                    Some(game.radius()),
                    Some(game.diameter()),
                    Some(rc),
                    Some(game.rc_bounds()),
                )
            }
            Err(_) => (None, None, None, None),
        };
        let ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        ResultRecord::try_new(id, g.n(), g.m(), rad, diam, girth, rc, bounds, ms)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rad(&self) -> Option<u32> {
        self.rad
    }

    pub fn diam(&self) -> Option<u32> {
        self.diam
    }

    pub fn girth(&self) -> u32 {
        self.girth
    }

    pub fn rc(&self) -> Option<u32> {
        self.rc
    }

    pub fn bounds(&self) -> Option<(u32, u32)> {
        self.lb.zip(self.ub)
    }

    pub fn ms(&self) -> Option<f64> {
        self.ms
    }

    pub fn csv_row(&self) -> String {
        fn cell<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.id,
            self.n,
            self.m,
            cell(self.rad),
            cell(self.diam),
            self.girth,
            cell(self.rc),
            cell(self.lb),
            cell(self.ub),
            cell(self.ms.map(|t| format!("{t:.3}")))
        )
    }
}

/// Renders records in the given order. CSV always starts with the header;
/// JSON is an array (`[]` when empty).
pub fn emit_results(records: &[ResultRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(records).expect("records serialize");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, named_instance, CUBIC_VT_24_6};

    #[test]
    fn c6_row() {
        let r = ResultRecord::measure("C6", &cycle(6).unwrap(), SearchMode::Binary, false).unwrap();
        assert_eq!(r.csv_row(), "C6,6,6,3,3,6,2,2,2,");
        let csv = emit_results(&[r], OutputFormat::Csv);
        assert_eq!(csv, format!("{CSV_HEADER}\nC6,6,6,3,3,6,2,2,2,\n"));
    }

    #[test]
    fn empty_outputs() {
        assert_eq!(
            emit_results(&[], OutputFormat::Csv),
            format!("{CSV_HEADER}\n")
        );
        assert_eq!(emit_results(&[], OutputFormat::Json), "[]\n");
    }

    #[test]
    fn cubic_vt_record() {
        let g = named_instance(CUBIC_VT_24_6).unwrap();
        let r = ResultRecord::measure(CUBIC_VT_24_6, &g, SearchMode::Binary, true).unwrap();
        assert_eq!((r.rad(), r.rc()), (Some(5), Some(3)));
        assert!(r.ms().is_some());
    }

    #[test]
    fn disconnected_renders_empty_cells() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let r = ResultRecord::measure("2K2", &g, SearchMode::Binary, false).unwrap();
        assert_eq!(r.csv_row(), "2K2,4,2,,,0,,,,");
        let json: serde_json::Value =
            serde_json::from_str(&emit_results(&[r], OutputFormat::Json)).unwrap();
        assert!(json[0]["rc"].is_null());
        assert_eq!(json[0]["girth"], 0);
    }

    #[test]
    fn construction_is_checked() {
        assert_eq!(
            ResultRecord::try_new(
                "a,b",
                1,
                0,
                Some(0),
                Some(0),
                0,
                Some(0),
                Some((0, 0)),
                None
            )
            .unwrap_err(),
            RecordError::BadId("a,b".into())
        );
        assert_eq!(
            ResultRecord::try_new("x", 6, 6, Some(3), Some(3), 6, Some(1), Some((2, 2)), None)
                .unwrap_err(),
            RecordError::BoundViolation {
                id: "x".into(),
                rc: 1,
                lb: 2,
                ub: 2
            }
        );
    }
}
