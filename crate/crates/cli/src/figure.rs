//! Data behind the three figures, as exact rows with a rounded float column.

use clap::ValueEnum;
use num_bigint::BigUint;
use reflect_endo::counting::{hom_count_i2p, is_odd_prime};
use reflect_endo::stats::{image_order_distribution, prob_centre_in_kernel, to_decimal};
use reflect_endo::{GroupId, Ratio};
use serde::Serialize;

/// Largest rank any sweep accepts.
pub const MAX_SWEEP_N: u32 = 200;
/// Largest prime fig3 accepts.
pub const MAX_SWEEP_P: u32 = 997;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    /// Image-order distribution of End(C_n).
    Fig1,
    /// Probability that the centre of C_n lies in the kernel.
    Fig2,
    /// log10 |Hom(I2(p), C_n)|.
    Fig3,
}

impl FigureId {
    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            FigureId::Fig1 => &["n", "image_order", "count", "proportion_num", "proportion_den", "proportion_float"],
            FigureId::Fig2 => &["n", "num", "den", "prob_float"],
            FigureId::Fig3 => &["p", "n", "count", "log10_count"],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureParams {
    pub figure: FigureId,
    pub n_min: u32,
    pub n_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_max: Option<u32>,
    pub digits: u32,
}

impl FigureParams {
    /// Fills in the defaults for `figure` and checks the sweep limits.
    pub fn for_figure(
        figure: FigureId,
        n: Option<(u32, u32)>,
        p_max: Option<u32>,
        digits: Option<u32>,
    ) -> Result<Self, String> {
        let (default_n, default_digits, min_n) = match figure {
            FigureId::Fig1 => ((3, 25), 12, 2),
            FigureId::Fig2 => ((4, 25), 5, 2),
            FigureId::Fig3 => ((3, 50), 6, 2),
        };
        let (n_min, n_max) = n.unwrap_or(default_n);
        if n_min < min_n {
            return Err(format!("{}: n must be at least {min_n}", figure.name()));
        }
        if n_max > MAX_SWEEP_N {
            return Err(format!("{}: n = {n_max} exceeds the sweep limit {MAX_SWEEP_N}", figure.name()));
        }
        let p_max = match figure {
            FigureId::Fig3 => {
                let p = p_max.unwrap_or(61);
                if !(3..=MAX_SWEEP_P).contains(&p) {
                    return Err(format!("fig3: --p-max must lie in 3..={MAX_SWEEP_P}"));
                }
                Some(p)
            }
            _ if p_max.is_some() => return Err(format!("{}: --p-max only applies to fig3", figure.name())),
            _ => None,
        };
        let digits = digits.unwrap_or(default_digits);
        if digits > 40 {
            return Err("--digits must be at most 40".into());
        }
        Ok(FigureParams { figure, n_min, n_max, p_max, digits })
    }
}

/// One cell: exact values and big integers are strings, ranks are numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u32),
    Text(String),
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub version: &'static str,
    pub params: FigureParams,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureDataset {
    pub figure: FigureId,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Metadata,
}

fn text(v: impl ToString) -> Cell {
    Cell::Text(v.to_string())
}

fn c(n: u32) -> GroupId {
    GroupId::c(n).expect("sweep ranks are at least 2")
}

/// `log10(v)` for `v >= 1`, from the leading digits.
pub fn log10_big(v: &BigUint) -> f64 {
    let s = v.to_string();
    let lead = &s[..s.len().min(17)];
    lead.parse::<f64>().expect("digits").log10() + (s.len() - lead.len()) as f64
}

pub fn generate(params: &FigureParams) -> FigureDataset {
    let ns = params.n_min..=params.n_max;
    let d = params.digits;
    let rows = match params.figure {
        FigureId::Fig1 => ns
            .flat_map(|n| {
                let dist = image_order_distribution(c(n));
                dist.support
                    .iter()
                    .map(|(k, count)| {
                        let r = Ratio::new(count.clone().into(), dist.total.clone().into());
                        vec![Cell::Int(n), text(k), text(count), text(r.numer()), text(r.denom()), text(to_decimal(&r, d))]
                    })
                    .collect::<Vec<_>>()
            })
            .collect(),
        FigureId::Fig2 => ns
            .map(|n| {
                let r = prob_centre_in_kernel(c(n)).expect("C_n has a centre");
                vec![Cell::Int(n), text(r.numer()), text(r.denom()), text(to_decimal(&r, d))]
            })
            .collect(),
        FigureId::Fig3 => {
            let p_max = params.p_max.expect("fig3 has p_max");
            (3..=p_max)
                .filter(|&p| is_odd_prime(p))
                .flat_map(|p| {
                    ns.clone().map(move |n| {
                        let count = hom_count_i2p(p, c(n)).expect("odd prime, C_n target");
                        let log = format!("{:.*}", d as usize, log10_big(&count));
                        vec![Cell::Int(p), Cell::Int(n), text(count), text(log)]
                    })
                })
                .collect()
        }
    };
    FigureDataset {
        figure: params.figure,
        columns: params.figure.columns(),
        rows,
        metadata: Metadata { version: reflect_endo::VERSION, params: params.clone() },
    }
}

impl FigureDataset {
    /// Metadata as `#` comment lines, then the header and rows.
    pub fn to_csv(&self) -> String {
        let p = &self.metadata.params;
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut meta = vec![
            vec!["# figure".to_string(), self.figure.name().to_string()],
            vec!["# version".to_string(), self.metadata.version.to_string()],
            vec!["# n".to_string(), format!("{}..{}", p.n_min, p.n_max)],
        ];
        if let Some(pm) = p.p_max {
            meta.push(vec!["# p_max".to_string(), pm.to_string()]);
        }
        meta.push(vec!["# digits".to_string(), p.digits.to_string()]);
        // Comment lines have fewer fields than the header.
        let mut w_meta = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        for m in meta {
            w_meta.write_record(m).expect("in-memory write");
        }
        w.write_record(self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_string)).expect("in-memory write");
        }
        let head = String::from_utf8(w_meta.into_inner().expect("flush")).expect("utf-8");
        head + &String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// `{"figure", "metadata", "rows"}` with rows keyed by column name.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            figure: FigureId,
            metadata: &'a Metadata,
            rows: Vec<serde_json::Map<String, serde_json::Value>>,
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .zip(r)
                    .map(|(k, v)| (k.to_string(), serde_json::to_value(v).expect("cell serializes")))
                    .collect()
            })
            .collect();
        serde_json::to_string_pretty(&Out { figure: self.figure, metadata: &self.metadata, rows }).expect("serializes")
    }
}
