//! Output formats for alternation tables: plain text, LaTeX longtables, CSV
//! and JSON.

use serde::{Deserialize, Serialize};

use crate::partition::Method;
use crate::qpoly::SignedQPolynomial;
use crate::rootsys::{LieType, RootSystem};
use crate::weight::Weight;
use crate::weyl::{AlternationRecord, RecordRow};

/// JSON document emitted by the `altset` and `mult` commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltsetDocument {
    pub lie_type: LieType,
    pub lambda: Weight,
    pub mu: Weight,
    pub method: Method,
    pub count: usize,
    pub records: Vec<RecordRow>,
    /// Signed coefficients of `m_q`, as decimal strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mq: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
}

/// True when the pair is the adjoint zero-weight case `(α̃, 0)`.
fn is_adjoint_zero(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    lambda == rs.highest_root() && mu.is_zero()
}

pub fn table_text(records: &[AlternationRecord]) -> String {
    let mut out = String::from("No. | σ | ℓ(σ) | ξ | ℘_q(ξ)\n");
    for (i, rec) in records.iter().enumerate() {
        let pq = rec
            .pq
            .as_ref()
            .map_or_else(|| "-".to_string(), |p| p.to_table_text());
        out.push_str(&format!(
            "{} | {} | {} | {} | {}\n",
            i + 1,
            rec.element.word_string(),
            rec.element.length(),
            rec.xi.to_text(),
            pq
        ));
    }
    out
}

/// One LaTeX table row, e.g.
/// `3 & $s_2$ & 1 & $ 3\alpha_{1} $ & $ q^{3} $\\\hline`.
pub fn latex_row(index: usize, rec: &AlternationRecord) -> String {
    let pq = rec
        .pq
        .as_ref()
        .map_or_else(|| "-".to_string(), |p| p.to_latex());
    format!(
        "{} & ${}$ & {} & $ {} $ & $ {} $\\\\\\hline",
        index,
        rec.element.word_string(),
        rec.element.length(),
        rec.xi.to_latex(),
        pq
    )
}

pub fn table_latex(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    records: &[AlternationRecord],
    mq: Option<&SignedQPolynomial>,
) -> String {
    let adjoint = is_adjoint_zero(rs, lambda, mu);
    let (xi_header, footer_args) = if adjoint {
        (
            "\\xi = \\sigma(\\widetilde{\\alpha} + \\rho) - \\rho",
            "\\widetilde{\\alpha}, 0".to_string(),
        )
    } else {
        (
            "\\xi = \\sigma(\\lambda + \\rho) - (\\rho + \\mu)",
            format!("{}, {}", lambda.to_latex(), mu.to_latex()),
        )
    };
    let mut out = String::new();
    out.push_str("\\begin{longtable}{|c|c|c|p{4cm}|p{6cm}|}\n");
    out.push_str("\\rowcolor{lightgray}\n\\rowcolors{1}{}{midgray}\n");
    out.push_str(&format!(
        "No. \\ &$\\sigma$ \\ &$\\ell(\\sigma)$ \\ &${xi_header}$ \\ &$\\wp_q(\\xi)$ \\\\\n"
    ));
    for (i, rec) in records.iter().enumerate() {
        out.push_str(&latex_row(i + 1, rec));
        out.push('\n');
    }
    if let Some(mq) = mq {
        out.push_str(&format!(
            "\\rowcolor{{white}}\\multicolumn{{5}}{{|c|}}{{$m_q({footer_args}) = {}$}} \\\\\n",
            mq.to_latex_compact()
        ));
    }
    out.push_str("\\hline\n\\end{longtable}\n");
    out
}

pub fn table_csv(records: &[AlternationRecord]) -> String {
    let mut out = String::from("index,word,length,xi,pq,sign\n");
    for (i, rec) in records.iter().enumerate() {
        let row = RecordRow::new(i + 1, rec);
        let xi = join(row.xi.iter());
        let pq = row
            .pq
            .as_ref()
            .map_or_else(String::new, |p| join(p.coeffs().iter()));
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.index, row.word, row.length, xi, pq, row.sign
        ));
    }
    out
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::compute_adjoint_zero;

    #[test]
    fn g2_latex_rows() {
        let g2 = RootSystem::from_name("G2").unwrap();
        let r = compute_adjoint_zero(&g2, Method::Genfunc).unwrap();
        assert_eq!(
            latex_row(1, &r.records[0]),
            r"1 & $1$ & 0 & $ 3\alpha_{1} + 2\alpha_{2} $ & $ q^{1} + 2q^{2} + 2q^{3} + q^{4} + q^{5} $\\\hline"
        );
        assert_eq!(
            latex_row(3, &r.records[2]),
            r"3 & $s_2$ & 1 & $ 3\alpha_{1} $ & $ q^{3} $\\\hline"
        );
        let table = table_latex(&g2, &r.lambda, &r.mu, &r.records, Some(&r.mq));
        assert!(table.contains(r"\multicolumn{5}{|c|}{$m_q(\widetilde{\alpha}, 0) = q + q^5$}"));
    }

    #[test]
    fn g2_text_and_csv() {
        let g2 = RootSystem::from_name("G2").unwrap();
        let r = compute_adjoint_zero(&g2, Method::Tree).unwrap();
        let text = table_text(&r.records);
        assert!(
            text.trim_end().ends_with("3 | s_2 | 1 | 3α_1 | q^3"),
            "{text}"
        );
        let csv = table_csv(&r.records);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "index,word,length,xi,pq,sign");
        assert_eq!(lines[2], "2,s_1,1,2;2,0;0;2;1;1,-1");
    }
}
