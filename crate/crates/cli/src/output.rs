//! Structured (JSON) and human-readable (table) result printers.
//!
//! JSON output is one self-describing document per invocation on standard
//! output; every number is exact (integers, or "p/q" strings).

use crate::Format;
use fatpoints_core::invariants::{JumpVector, WaldschmidtBounds};
use fatpoints_core::linsys::{BiDegree, BiForm};
use fatpoints_core::verifier::VerifyReport;
use fatpoints_core::Variant;
use num::rational::BigRational;
use serde_json::json;

fn variant_str(v: Variant) -> &'static str {
    match v {
        Variant::Star => "star",
        Variant::Plus => "plus",
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.denom() == &num::bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn witness_grid(w: &BiForm) -> Vec<Vec<String>> {
    let d = w.deg();
    (0..=d.d1)
        .map(|i| (0..=d.d2).map(|j| w.coeff(i, j).to_string()).collect())
        .collect()
}

pub fn h0(format: Format, h0: usize, rows: usize, cols: usize) {
    match format {
        Format::Json => println!("{}", json!({ "h0": h0, "rows": rows, "cols": cols })),
        Format::Table => {
            println!("h0   = {h0}");
            println!("rows = {rows}");
            println!("cols = {cols}");
        }
    }
}

pub fn alpha(
    format: Format,
    variant: Variant,
    m: u32,
    value: usize,
    at: BiDegree,
    witness: Option<&BiForm>,
) {
    match format {
        Format::Json => {
            let mut doc = json!({
                "alpha": value,
                "variant": variant_str(variant),
                "m": m,
                "bidegree": [at.d1, at.d2],
            });
            if let Some(w) = witness {
                doc["witness"] = json!(witness_grid(w));
            }
            println!("{doc}");
        }
        Format::Table => {
            println!("alpha-{}(I^({m})) = {value}  at bi-degree ({}, {})", variant_str(variant), at.d1, at.d2);
            if let Some(w) = witness {
                println!("witness coefficients (rows = x-exponent, cols = y-exponent):");
                for row in witness_grid(w) {
                    println!("  {}", row.join("  "));
                }
            }
        }
    }
}

pub fn jumps(format: Format, jv: &JumpVector) {
    match format {
        Format::Json => println!(
            "{}",
            json!({ "variant": variant_str(jv.variant), "values": jv.values })
        ),
        Format::Table => {
            println!("m      : {}", (1..=jv.values.len()).map(|m| m.to_string()).collect::<Vec<_>>().join(" "));
            println!("jump   : {}", jv.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        }
    }
}

pub fn wald(format: Format, b: &WaldschmidtBounds) {
    let lower = b.lower.as_ref().map(rational_str);
    let upper = rational_str(&b.upper);
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "variant": variant_str(b.variant),
                "lower": lower,
                "upper": upper,
                "m_used": b.m_used,
            })
        ),
        Format::Table => {
            println!(
                "gamma-{} in [{}, {}]  (from m <= {})",
                variant_str(b.variant),
                lower.unwrap_or_else(|| "-inf".into()),
                upper,
                b.m_used
            );
        }
    }
}

pub fn gridseq(format: Format, a: u32, b: u32, rows: &[(u64, u64)]) {
    match format {
        Format::Json => {
            let rows: Vec<[u64; 2]> = rows.iter().map(|&(x, y)| [x, y]).collect();
            println!("{}", json!({ "a": a, "b": b, "rows": rows }));
        }
        Format::Table => {
            println!("m  a_m  b_m  alpha-star");
            for (m, &(am, bm)) in rows.iter().enumerate() {
                println!("{}  {}  {}  {}", m + 1, am, bm, am.max(bm));
            }
        }
    }
}

pub fn verify(format: Format, reports: &[VerifyReport]) {
    match format {
        Format::Json => {
            let docs: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "check": r.check_name,
                        "configs_tested": r.configs_tested,
                        "pass": r.passed(),
                        "violations": r.violations.iter().map(|v| json!({
                            "config": v.config,
                            "m": v.m,
                            "details": v.details,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let pass = reports.iter().all(|r| r.passed());
            println!("{}", json!({ "pass": pass, "reports": docs }));
        }
        Format::Table => {
            for r in reports {
                println!(
                    "{}: {} ({} configs, {:.2?})",
                    r.check_name,
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.configs_tested,
                    r.elapsed
                );
                for v in &r.violations {
                    println!("  violation at m={}: {} [{}]", v.m, v.details, v.config);
                }
            }
        }
    }
}
