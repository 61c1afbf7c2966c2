use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::json;

use crate::error::Result;
use crate::fano::{betti_via_multiplicities, cohomology_table, fano_dim};
use crate::kostka::{h_poly, stalk_table, HMethod};
use crate::laurent::LaurentPoly;
use crate::verify::{Status, VerificationReport};

use super::OutputFormat;

fn poly_csv(p: &LaurentPoly, prefix: &str, out: &mut String) {
    for (e, c) in p.terms() {
        writeln!(out, "{prefix}{e},{c}").unwrap();
    }
}

pub(super) fn h_single(n: u32, m: u32, method: HMethod, format: OutputFormat) -> Result<String> {
    let h = h_poly(n, m, method)?;
    Ok(match format {
        OutputFormat::Text => format!("{h}\n"),
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&h).expect("serializes")),
        OutputFormat::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            poly_csv(&h, "", &mut out);
            out
        }
        OutputFormat::Latex => format!("h_{{{m}}}^{{({n})}}(q) = {}\n", h.to_latex()),
    })
}

/// Every method, one per line, followed by a verdict. The flag is false
/// when the methods disagree.
pub(super) fn h_all(n: u32, m: u32, format: OutputFormat) -> Result<(String, bool)> {
    let polys: Vec<(HMethod, LaurentPoly)> = HMethod::ALL
        .into_iter()
        .map(|method| h_poly(n, m, method).map(|h| (method, h)))
        .collect::<Result<_>>()?;
    let agree = polys.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict = if agree { "yes" } else { "no" };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (method, h) in &polys {
                writeln!(out, "{method}: {h}").unwrap();
            }
            writeln!(out, "agree: {verdict}").unwrap();
        }
        OutputFormat::Json => {
            let methods: serde_json::Map<String, serde_json::Value> = polys
                .iter()
                .map(|(method, h)| {
                    (
                        method.name().to_string(),
                        serde_json::to_value(h).expect("serializes"),
                    )
                })
                .collect();
            let v = json!({"n": n, "m": m, "methods": methods, "agree": agree});
            writeln!(out, "{v}").unwrap();
        }
        OutputFormat::Csv => {
            out.push_str("method,exponent,coefficient\n");
            for (method, h) in &polys {
                poly_csv(h, &format!("{method},"), &mut out);
            }
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{tabular}{ll}\n");
            for (method, h) in &polys {
                writeln!(out, "{method} & ${}$ \\\\", h.to_latex()).unwrap();
            }
            writeln!(out, "agree & {verdict} \\\\").unwrap();
            out.push_str("\\end{tabular}\n");
        }
    }
    Ok((out, agree))
}

fn latex_rows(header: (&str, &[String]), rows: &[(String, Vec<String>)]) -> String {
    let mut out = String::new();
    let cols = header.1.len();
    writeln!(out, "\\begin{{tabular}}{{c|{}}}", "c".repeat(cols)).unwrap();
    writeln!(out, "{} & {} \\\\", header.0, header.1.join(" & ")).unwrap();
    out.push_str("\\hline\n");
    for (label, cells) in rows {
        writeln!(out, "{label} & {} \\\\", cells.join(" & ")).unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub(super) fn betti(g: u32, kplane: u32, format: OutputFormat) -> Result<String> {
    let b = betti_via_multiplicities(g, kplane)?;
    let dim = fano_dim(g, g - kplane);
    Ok(match format {
        OutputFormat::Text | OutputFormat::Csv => format!("{}\n", join(&b)),
        OutputFormat::Json => format!(
            "{}\n",
            json!({"g": g, "kplane": kplane, "dim": dim, "betti": b})
        ),
        OutputFormat::Latex => {
            let ks: Vec<String> = (0..b.len()).map(|k| k.to_string()).collect();
            let cells: Vec<String> = b.iter().map(u64::to_string).collect();
            latex_rows(("$k$", &ks), &[("$b_k$".to_string(), cells)])
        }
    })
}

pub(super) fn decomp(g: u32, i: u32, format: OutputFormat) -> Result<String> {
    let t = cohomology_table(g, i)?;
    let js: Vec<u32> = (i - 1..=g).collect();
    let ks: BTreeSet<i64> = t.ncoeffs.keys().map(|&(k, _)| k).collect();
    let row = |k: i64| -> Vec<String> { js.iter().map(|&j| t.n(k, j).to_string()).collect() };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let mut lines: Vec<Vec<String>> = vec![std::iter::once("k\\j".to_string())
                .chain(js.iter().map(u32::to_string))
                .collect()];
            lines.extend(
                ks.iter()
                    .map(|&k| std::iter::once(k.to_string()).chain(row(k)).collect()),
            );
            let width = lines.iter().flatten().map(String::len).max().unwrap_or(1);
            for line in lines {
                let cells: Vec<String> = line.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        }
        OutputFormat::Csv => {
            let header: Vec<String> = js.iter().map(|j| format!("j={j}")).collect();
            writeln!(out, "k,{}", header.join(",")).unwrap();
            for &k in &ks {
                writeln!(out, "{k},{}", row(k).join(",")).unwrap();
            }
        }
        OutputFormat::Json => {
            let entries: Vec<_> = t
                .ncoeffs
                .iter()
                .map(|(&(k, j), &n)| json!({"k": k, "j": j, "N": n}))
                .collect();
            writeln!(out, "{}", json!({"g": g, "i": i, "entries": entries})).unwrap();
        }
        OutputFormat::Latex => {
            let header: Vec<String> = js.iter().map(u32::to_string).collect();
            let rows: Vec<(String, Vec<String>)> =
                ks.iter().map(|&k| (k.to_string(), row(k))).collect();
            out = latex_rows(("$k \\backslash j$", &header), &rows);
        }
    }
    Ok(out)
}

pub(super) fn stalks(n: u32, i: u32, j: u32, format: OutputFormat) -> Result<String> {
    let t = stalk_table(n, i, j)?;
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (k, d) in &t.dims {
                writeln!(out, "{k}: {d}").unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("degree,dim\n");
            for (k, d) in &t.dims {
                writeln!(out, "{k},{d}").unwrap();
            }
        }
        OutputFormat::Json => {
            let dims: Vec<_> = t
                .dims
                .iter()
                .map(|(k, d)| json!({"degree": k, "dim": d}))
                .collect();
            writeln!(out, "{}", json!({"n": n, "i": i, "j": j, "dims": dims})).unwrap();
        }
        OutputFormat::Latex => {
            let ks: Vec<String> = t.dims.keys().map(i64::to_string).collect();
            let ds: Vec<String> = t.dims.values().map(u64::to_string).collect();
            out = latex_rows(("$k$", &ks), &[("$\\dim$".to_string(), ds)]);
        }
    }
    Ok(out)
}

fn params_string(r: &VerificationReport, sep: &str) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(sep)
}

pub(super) fn reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for r in reports {
                writeln!(out, "{r}").unwrap();
            }
            writeln!(out, "{} passed, {failed} failed", reports.len() - failed).unwrap();
        }
        OutputFormat::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json_line()).unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("identity,params,status\n");
            for r in reports {
                let status = if r.status == Status::Pass {
                    "pass"
                } else {
                    "fail"
                };
                writeln!(out, "{},{},{status}", r.identity, params_string(r, ";")).unwrap();
            }
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{tabular}{lll}\n");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                writeln!(
                    out,
                    "{} & {} & {status} \\\\",
                    r.identity,
                    params_string(r, ", ")
                )
                .unwrap();
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}
