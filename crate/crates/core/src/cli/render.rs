//! Text and LaTeX renderings of pipeline results.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::hgpipeline::{Presentation, Status, VerificationReport, Witness};
use crate::lattice::{GradedPiece, GradedStructure};
use crate::polyring::{Polynomial, Var};

pub(super) const HYPOTHESIS: &str = "char k = 0 or char k > 2g";

pub(super) fn metadata_line() -> String {
    format!("# hgchow {}; {}", env!("CARGO_PKG_VERSION"), HYPOTHESIS)
}

fn relations_list(rels: &[Polynomial]) -> String {
    rels.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

fn group(piece: &GradedPiece) -> String {
    let mut parts = Vec::new();
    match piece.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(piece.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub(super) fn table_text(graded: &GradedStructure) -> String {
    let mut out = String::new();
    for piece in &graded.degrees {
        writeln!(out, "A^{} = {}", piece.degree, group(piece)).unwrap();
    }
    out
}

fn witness_text(w: &Witness, indent: &str) -> String {
    let mut out = String::new();
    for c in &w.identities {
        let mark = if c.holds() { "ok" } else { "FAILED" };
        writeln!(out, "{indent}[{mark}] {}", c.label).unwrap();
        if !c.holds() {
            writeln!(out, "{indent}    lhs - rhs = {}", c.difference).unwrap();
        }
    }
    for m in &w.memberships {
        let mark = if m.member { "ok" } else { "FAILED" };
        writeln!(out, "{indent}[{mark}] {}", m.label).unwrap();
        if let Some(cert) = &m.certificate {
            for (g, c) in cert.generators().iter().zip(cert.coefficients()) {
                if !c.is_zero() {
                    writeln!(out, "{indent}    ({c}) * ({g})").unwrap();
                }
            }
        }
        if let Some(r) = &m.residual {
            writeln!(out, "{indent}    residual = {r}").unwrap();
        }
    }
    out
}

pub(super) fn presentation_text(p: &Presentation) -> String {
    let mut out = String::new();
    writeln!(out, "Z[c1,c2]/({})", relations_list(&p.relations)).unwrap();
    writeln!(out, "Pic = Z/{}", p.picard_order).unwrap();
    out += &table_text(&p.graded);
    for (id, w) in &p.certificates {
        writeln!(out, "{id}:").unwrap();
        out += &witness_text(w, "  ");
    }
    out += &metadata_line();
    out.push('\n');
    out
}

fn params_text(r: &VerificationReport) -> String {
    match r.params {
        crate::hgpipeline::Target::N(n) => format!("N={n}"),
        crate::hgpipeline::Target::Genus(g) => format!("g={g}"),
    }
}

pub(super) fn reports_text(reports: &[VerificationReport], details: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
        };
        write!(out, "{status:<9}{:<22}{}", r.lemma, params_text(r)).unwrap();
        if let Some(ms) = r.timing_ms {
            write!(out, "  ({ms:.1} ms)").unwrap();
        }
        out.push('\n');
        if details || r.status == Status::Failed {
            let w = if details { r.witness.clone() } else { r.witness.failures() };
            out += &witness_text(&w, "    ");
        }
    }
    out += &metadata_line();
    out.push('\n');
    out
}

fn latex_var(v: Var) -> String {
    match v {
        Var::Xi => "\\xi".into(),
        Var::XiFactor(j) => format!("\\xi_{{{j}}}"),
        Var::T1 => "t_1".into(),
        Var::T2 => "t_2".into(),
        Var::C1 => "c_1".into(),
        Var::C2 => "c_2".into(),
    }
}

pub(super) fn latex_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms_desc().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        let abs: BigInt = c.abs();
        if !abs.is_one() || m.is_one() {
            out += &abs.to_string();
        }
        for (v, e) in m.iter() {
            out += &latex_var(v);
            if e > 1 {
                write!(out, "^{{{e}}}").unwrap();
            }
        }
    }
    out
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('^', "\\^{}").replace('{', "\\{").replace('}', "\\}")
}

fn witness_latex(w: &Witness) -> String {
    let mut out = String::new();
    for c in &w.identities {
        writeln!(out, "% {}", c.label).unwrap();
        writeln!(out, "\\[ {} = {} \\]", latex_poly(&c.lhs), latex_poly(&c.rhs)).unwrap();
    }
    for m in &w.memberships {
        writeln!(out, "\\noindent {}\\\\", latex_escape(&m.label)).unwrap();
        if let Some(cert) = &m.certificate {
            let terms: Vec<String> = cert
                .generators()
                .iter()
                .zip(cert.coefficients())
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| format!("\\left({}\\right)\\left({}\\right)", latex_poly(c), latex_poly(g.value())))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(out, "\\[ {} = {} \\]", latex_poly(cert.target().value()), rhs).unwrap();
        }
        if let Some(r) = &m.residual {
            writeln!(out, "\\[ \\text{{residual}} = {} \\]", latex_poly(r)).unwrap();
        }
    }
    out
}

pub(super) fn presentation_latex(p: &Presentation) -> String {
    let mut out = String::new();
    writeln!(out, "% hgchow {}; {}", env!("CARGO_PKG_VERSION"), HYPOTHESIS).unwrap();
    let rels: Vec<String> = p.relations.iter().map(latex_poly).collect();
    writeln!(
        out,
        "\\[ A^*(\\mathcal{{H}}_{{{}}}) = \\mathbb{{Z}}[c_1,c_2]/\\left({}\\right) \\]",
        p.genus,
        rels.join(", ")
    )
    .unwrap();
    writeln!(out, "\\[ \\operatorname{{Pic}}(\\mathcal{{H}}_{{{}}}) = \\mathbb{{Z}}/{} \\]", p.genus, p.picard_order).unwrap();
    for (id, w) in &p.certificates {
        writeln!(out, "\\subsection*{{{}}}", latex_escape(id)).unwrap();
        out += &witness_latex(w);
    }
    out
}

pub(super) fn reports_latex(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    writeln!(out, "% hgchow {}; {}", env!("CARGO_PKG_VERSION"), HYPOTHESIS).unwrap();
    for r in reports {
        let status = match r.status {
            Status::Verified => "verified",
            Status::Failed => "failed",
        };
        writeln!(out, "\\subsection*{{{} ({}, {})}}", latex_escape(&r.lemma), params_text(r), status).unwrap();
        out += &witness_latex(&r.witness);
    }
    out
}

pub(super) fn table_latex(graded: &GradedStructure) -> String {
    let mut out = String::from("\\begin{tabular}{rl}\n");
    for piece in &graded.degrees {
        let g = group(piece).replace('Z', "\\mathbb{Z}");
        writeln!(out, "{} & ${}$ \\\\", piece.degree, g).unwrap();
    }
    out += "\\end{tabular}\n";
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_polynomials() {
        let p: Polynomial = "2*c1^2 - 24*c2".parse().unwrap();
        assert_eq!(latex_poly(&p), "2c_1^{2} - 24c_2");
        let p: Polynomial = "-xi_2*t1 + 1".parse().unwrap();
        assert_eq!(latex_poly(&p), "-\\xi_{2}t_1 + 1");
    }

    #[test]
    fn group_names() {
        let piece = GradedPiece {
            degree: 2,
            rank: 0,
            torsion: vec![BigInt::from(2), BigInt::from(120)],
        };
        assert_eq!(group(&piece), "Z/2 + Z/120");
        let free = GradedPiece { degree: 0, rank: 1, torsion: vec![] };
        assert_eq!(group(&free), "Z");
    }
}
