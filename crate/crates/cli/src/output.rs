use std::fmt::Write;

use serde_json::json;
use zsig_core::factor::FactorizationText;
use zsig_core::primitive::PrimitiveRecord;
use zsig_core::verification::{Report, Witness};
use zsig_core::{Field, Poly};

use crate::args::Format;
use crate::commands::Ctx;

fn line(out: &mut String, args: std::fmt::Arguments) {
    out.write_fmt(args).expect("writing to a String");
    out.push('\n');
}

fn witness_text(w: &Witness) -> String {
    let mut s = format!("{} at {:?}: expected {}, got {}", w.clause, w.indices, w.expected, w.actual);
    if !w.inputs.is_empty() {
        write!(s, " (inputs {})", w.inputs.join("; ")).unwrap();
    }
    s
}

pub(crate) fn report(r: &Report, ctx: Ctx) -> String {
    let ms = if ctx.timing { r.ms } else { 0 };
    let mut out = String::new();
    match ctx.format {
        Format::Json => line(&mut out, format_args!("{}", r.to_json(ctx.timing))),
        Format::Tsv => {
            line(&mut out, format_args!("statement\tspec\tfrom\tto\tcases\tfailures\trecorded\tverdict\tseed\tms"));
            line(
                &mut out,
                format_args!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.statement,
                    r.spec,
                    r.range[0],
                    r.range[1],
                    r.cases,
                    r.failures.len(),
                    r.recorded.len(),
                    r.verdict,
                    r.seed,
                    ms
                ),
            );
        }
        Format::Text => {
            line(&mut out, format_args!("{}: {}", r.statement, r.spec));
            line(
                &mut out,
                format_args!("n in {}..={}, {} cases, seed {}, {} ms", r.range[0], r.range[1], r.cases, r.seed, ms),
            );
            line(&mut out, format_args!("verdict: {}", r.verdict));
            for w in &r.failures {
                line(&mut out, format_args!("failure: {}", witness_text(w)));
            }
            for w in &r.recorded {
                line(&mut out, format_args!("recorded: {}", witness_text(w)));
            }
        }
    }
    out
}

pub(crate) fn terms<K: Field>(spec: &str, terms: &[(u64, Poly<K>)], ctx: Ctx) -> String {
    let mut out = String::new();
    match ctx.format {
        Format::Json => {
            let rows: Vec<_> = terms
                .iter()
                .map(|(n, t)| json!({ "n": n, "degree": t.deg(), "term": t.to_string() }))
                .collect();
            line(&mut out, format_args!("{}", json!({ "spec": spec, "terms": rows })));
        }
        Format::Tsv => {
            line(&mut out, format_args!("n\tdegree\tterm"));
            for (n, t) in terms {
                line(&mut out, format_args!("{n}\t{}\t{t}", t.deg()));
            }
        }
        Format::Text => {
            for (n, t) in terms {
                line(&mut out, format_args!("{n}: {t}"));
            }
        }
    }
    out
}

pub(crate) fn factorization(fac: &FactorizationText, ctx: Ctx) -> String {
    let mut out = String::new();
    match ctx.format {
        Format::Json => line(&mut out, format_args!("{}", serde_json::to_string(fac).expect("serializes"))),
        Format::Tsv => {
            line(&mut out, format_args!("factor\tmultiplicity"));
            line(&mut out, format_args!("{}\t1", fac.unit));
            for f in &fac.factors {
                line(&mut out, format_args!("{}\t{}", f.poly, f.multiplicity));
            }
        }
        Format::Text => {
            let mut parts = Vec::new();
            if fac.unit != "1" || fac.factors.is_empty() {
                parts.push(fac.unit.clone());
            }
            for f in &fac.factors {
                let base = if fac.factors.len() + parts.len() > 1 || f.multiplicity > 1 {
                    format!("({})", f.poly)
                } else {
                    f.poly.clone()
                };
                parts.push(match f.multiplicity {
                    1 => base,
                    m => format!("{base}^{m}"),
                });
            }
            line(&mut out, format_args!("{}", parts.join(" * ")));
        }
    }
    out
}

pub(crate) fn phi(spec: &str, n: u64, phi: &str, ctx: Ctx) -> String {
    let mut out = String::new();
    match ctx.format {
        Format::Json => line(&mut out, format_args!("{}", json!({ "spec": spec, "n": n, "phi": phi }))),
        Format::Tsv => {
            line(&mut out, format_args!("n\tphi"));
            line(&mut out, format_args!("{n}\t{phi}"));
        }
        Format::Text => line(&mut out, format_args!("{phi}")),
    }
    out
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// JSON: one object per line. TSV: the survey columns.
pub(crate) fn records(recs: &[PrimitiveRecord], ctx: Ctx) -> String {
    let mut out = String::new();
    match ctx.format {
        Format::Json => {
            for r in recs {
                line(&mut out, format_args!("{}", serde_json::to_string(r).expect("serializes")));
            }
        }
        Format::Tsv => {
            line(&mut out, format_args!("n\tskipped\tdeg_term\tdeg_primitive_part\thas_primitive\tmatches_phi"));
            for r in recs {
                let matches = r.matches_phi.map_or("NA", flag);
                line(
                    &mut out,
                    format_args!(
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.n,
                        flag(r.skipped),
                        r.deg_term,
                        r.deg_primitive_part,
                        flag(r.has_primitive),
                        matches
                    ),
                );
            }
        }
        Format::Text => {
            for r in recs {
                let mut s = format!("{}: {}", r.n, r.primitive_part);
                if r.skipped {
                    s.push_str(" [deleted]");
                }
                match r.matches_phi {
                    Some(true) => s.push_str(" [= Phi_n]"),
                    Some(false) => s.push_str(" [!= Phi_n]"),
                    None => {}
                }
                if let Some(f) = &r.primitive_factors {
                    let list: Vec<String> = f
                        .factors
                        .iter()
                        .map(|f| match f.multiplicity {
                            1 => format!("({})", f.poly),
                            m => format!("({})^{m}", f.poly),
                        })
                        .collect();
                    if !list.is_empty() {
                        write!(s, " = {}", list.join(" * ")).unwrap();
                    }
                }
                line(&mut out, format_args!("{s}"));
            }
        }
    }
    out
}
