use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::strata::{nose_strata, StrataPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// Partition as printed in tables: the empty partition shows as `(0)`.
fn table_partition(p: &Partition) -> String {
    if p.is_empty() {
        "(0)".into()
    } else {
        p.to_string()
    }
}

fn tuple(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn check_dims(j: usize, d: usize) -> Result<()> {
    if d == 0 || d > j + 1 {
        return Err(Error::InvalidDimension { j, d });
    }
    Ok(())
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| Error::Io(e.into()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One row per stratum of `Grass(R_j, d)`. With `star = (λ, c)`, an extra
/// column marks the strata in the closure of that stratum.
pub fn strata_table(j: usize, d: usize, format: TableFormat, star: Option<(&Partition, usize)>) -> Result<String> {
    check_dims(j, d)?;
    let poset = StrataPoset::build(j, d);
    let starred = match star {
        Some((lambda, c)) => {
            let idx = poset
                .strata
                .iter()
                .position(|s| &s.lambda == lambda && s.c == c)
                .ok_or_else(|| Error::InvalidPartition(format!("no stratum with λ = {lambda}, c = {c}")))?;
            Some(poset.closure_set(idx))
        }
        None => None,
    };
    match format {
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(flatten)]
                stratum: &'a crate::strata::StratumDescriptor,
                lambda_conj: Partition,
                #[serde(skip_serializing_if = "Option::is_none")]
                in_closure: Option<bool>,
            }
            let rows: Vec<Row> = poset
                .strata
                .iter()
                .enumerate()
                .map(|(i, s)| Row {
                    stratum: s,
                    lambda_conj: s.lambda.conjugate(),
                    in_closure: starred.as_ref().map(|set| set.contains(&i)),
                })
                .collect();
            Ok(serde_json::to_string_pretty(&rows)? + "\n")
        }
        TableFormat::Csv => {
            let mut header: Vec<String> =
                ["lambda", "c_H", "tau", "H", "lambda_conj", "dim", "cod"].map(String::from).to_vec();
            if starred.is_some() {
                header.push("star".into());
            }
            let mut rows = vec![header];
            for (i, s) in poset.strata.iter().enumerate() {
                let mut row = vec![
                    table_partition(&s.lambda),
                    s.c.to_string(),
                    s.tau.to_string(),
                    tuple(s.tail.values()),
                    table_partition(&s.lambda.conjugate()),
                    s.dim.to_string(),
                    s.cod_in_g.to_string(),
                ];
                if let Some(set) = &starred {
                    row.push(if set.contains(&i) { "*".into() } else { String::new() });
                }
                rows.push(row);
            }
            csv_string(rows)
        }
    }
}

/// One row per scroll stratum; the window shows degrees `j-d+1 ..= j`.
pub fn nose_table(j: usize, d: usize, format: TableFormat) -> Result<String> {
    check_dims(j, d)?;
    let rows = nose_strata(j, d);
    match format {
        TableFormat::Json => Ok(serde_json::to_string_pretty(&rows)? + "\n"),
        TableFormat::Csv => {
            let lo = (j + 1).saturating_sub(d);
            let mut out = vec![["A", "tau", "c_H", "N", "ancestor_dims", "A_conj", "dim"]
                .map(String::from)
                .to_vec()];
            for r in &rows {
                out.push(vec![
                    table_partition(&r.scroll),
                    r.tau.to_string(),
                    r.c.to_string(),
                    tuple(&r.function[lo..]),
                    tuple(&r.ancestor_dims[lo..]),
                    table_partition(&r.scroll.conjugate()),
                    r.dim.to_string(),
                ]);
            }
            csv_string(out)
        }
    }
}

pub fn poset_graph(j: usize, d: usize, format: GraphFormat) -> Result<String> {
    check_dims(j, d)?;
    let poset = StrataPoset::build(j, d);
    Ok(match format {
        GraphFormat::Dot => poset.to_dot(),
        GraphFormat::Json => serde_json::to_string_pretty(&poset)? + "\n",
    })
}
