//! Output rendering: JSON (canonical), CSV and LaTeX table emitters.
//!
//! CSV cells never contain commas: coordinate vectors are space-joined,
//! partition parts are joined with `|`, and degree maps use `m:rank` pairs.
//! LaTeX output is a plain `tabular` block with all mathematical content in
//! math mode; the only escaping needed is of the polynomial exponents,
//! which are always braced.

use num_bigint::BigInt;
use zastava::partitions::CoweightPartition;
use zastava::poly::QPolynomial;
use zastava::rootdata::Coweight;
use zastava::stalks::StalkTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

pub fn coords_spaced(cw: &Coweight) -> String {
    cw.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn gamma_cell(gamma: &CoweightPartition) -> String {
    if gamma.is_empty() {
        return "-".into();
    }
    gamma
        .parts()
        .iter()
        .map(coords_spaced)
        .collect::<Vec<_>>()
        .join("|")
}

pub fn poly_cell(poly: &QPolynomial) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    poly.coeffs()
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn poly_latex(poly: &QPolynomial) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for n in poly.exponents() {
        let c = poly.coeff(n);
        let body = match n {
            0 => c.to_string(),
            1 if c == BigInt::from(1) => "q".into(),
            1 => format!("{c} q"),
            _ if c == BigInt::from(1) => format!("q^{{{n}}}"),
            _ => format!("{c} q^{{{n}}}"),
        };
        terms.push(body);
    }
    terms.join(" + ")
}

pub fn coweight_latex(cw: &Coweight) -> String {
    format!(
        "({})",
        cw.coords()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

pub fn gamma_latex(gamma: &CoweightPartition) -> String {
    if gamma.is_empty() {
        return "\\varnothing".into();
    }
    format!(
        "[{}]",
        gamma
            .parts()
            .iter()
            .map(coweight_latex)
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// Rows of (nu, gamma, dim) in the requested format.
pub fn strata_rows(rows: &[(Coweight, CoweightPartition, i64)], format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<serde_json::Value> = rows
                .iter()
                .map(|(nu, gamma, dim)| {
                    serde_json::json!({
                        "nu": nu,
                        "gamma": gamma,
                        "dim": dim,
                    })
                })
                .collect();
            to_pretty(&records)
        }
        Format::Csv => {
            let mut out = String::from("nu,gamma,dim\n");
            for (nu, gamma, dim) in rows {
                out.push_str(&format!(
                    "{},{},{dim}\n",
                    coords_spaced(nu),
                    gamma_cell(gamma)
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llr}\n\\hline\n$\\nu$ & $\\Gamma$ & $\\dim$ \\\\\n\\hline\n");
            for (nu, gamma, dim) in rows {
                out.push_str(&format!(
                    "${}$ & ${}$ & ${dim}$ \\\\\n",
                    coweight_latex(nu),
                    gamma_latex(gamma)
                ));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
    }
}

pub fn stalk_table(table: &StalkTable, format: Format) -> String {
    match format {
        Format::Json => to_pretty(table),
        Format::Csv => {
            let mut out = String::from("nu,gamma,dim,poly,degree_ranks\n");
            for e in &table.entries {
                let ranks = e
                    .degree_ranks
                    .iter()
                    .map(|(m, r)| format!("{m}:{r}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!(
                    "{},{},{},{},{ranks}\n",
                    coords_spaced(&e.nu),
                    gamma_cell(&e.gamma),
                    e.dim,
                    poly_cell(&e.poly)
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(
                "\\begin{tabular}{llrll}\n\\hline\n$\\nu$ & $\\Gamma$ & $\\dim$ & $P_\\Gamma(q)$ & ranks \\\\\n\\hline\n",
            );
            for e in &table.entries {
                let ranks = e
                    .degree_ranks
                    .iter()
                    .map(|(m, r)| format!("{m}\\colon {r}"))
                    .collect::<Vec<_>>()
                    .join(",\\ ");
                out.push_str(&format!(
                    "${}$ & ${}$ & ${}$ & ${}$ & ${ranks}$ \\\\\n",
                    coweight_latex(&e.nu),
                    gamma_latex(&e.gamma),
                    e.dim,
                    poly_latex(&e.poly)
                ));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
    }
}

pub fn polynomial(poly: &QPolynomial, format: Format) -> String {
    match format {
        Format::Json => to_pretty(poly),
        Format::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (n, c) in poly.coeffs().iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
            out
        }
        Format::Latex => format!("${}$\n", poly_latex(poly)),
    }
}

pub fn partitions_list(partitions: &[CoweightPartition], format: Format) -> String {
    match format {
        Format::Json => to_pretty(partitions),
        Format::Csv => {
            let mut out = String::from("parts,count\n");
            for p in partitions {
                out.push_str(&format!("{},{}\n", gamma_cell(p), p.len()));
            }
            out
        }
        Format::Latex => {
            let mut out =
                String::from("\\begin{tabular}{lr}\n\\hline\n$\\Gamma$ & $|\\Gamma|$ \\\\\n\\hline\n");
            for p in partitions {
                out.push_str(&format!("${}$ & ${}$ \\\\\n", gamma_latex(p), p.len()));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
    }
}

pub fn to_pretty<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}
