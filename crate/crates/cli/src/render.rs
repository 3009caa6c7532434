use std::fmt::Write;

use augcheck_core::augcheck::{CheckReport, Condition, Final, Verdict, Witness};
use serde::Serialize;

use crate::GreenReport;

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "n/a",
    }
}

fn final_word(f: Final) -> &'static str {
    match f {
        Final::Simple => "simple",
        Final::NotSimple => "not simple",
        Final::Undecidable => "undecidable",
    }
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::ConstantMap { element, image } => format!("element {element} = {image}"),
        Witness::JClass { class, rank, regular } => {
            format!("J-class {class}, rank {rank}, {}", if *regular { "regular" } else { "not regular" })
        }
        Witness::MinimalClasses { classes } => format!("minimal nonzero J-classes {classes:?}"),
        Witness::Group { idempotent, points, order, method } => {
            format!("idempotent {idempotent}, group of order {order} on {points:?} ({method:?})")
        }
        Witness::Rank { rank, required, field } => format!("incidence rank {rank} of {required} over {field}"),
        Witness::Components { count, a, b } => format!("{count} components, {a} and {b} not joined"),
        Witness::Congruence { blocks } => format!("congruence {blocks:?}"),
        Witness::Orbit { point, orbit } => format!("orbit of {point} is {orbit:?}"),
        Witness::Subspace { basis } => format!("invariant subspace of dimension {}", basis.len()),
    }
}

fn condition(out: &mut String, name: &str, c: &Condition) {
    let _ = write!(out, "  {name}: {}", verdict(c.verdict));
    if let Some(w) = &c.witness {
        let _ = write!(out, " ({})", witness(w));
    }
    out.push('\n');
}

pub fn check_text(r: &CheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {} (ranks over {})", r.field, r.rank_field);
    let _ = writeln!(out, "degree: {}, size: {}, path: {:?}", r.degree, r.size, r.path);
    if let Some(s) = r.sink {
        let _ = writeln!(out, "sink: {s}");
    }
    if let Some(w) = &r.preflight {
        let _ = writeln!(out, "preflight: {}", witness(w));
    }
    for (name, c) in ["c1", "c2", "c3", "c4", "c5"].iter().zip(r.conditions()) {
        condition(&mut out, name, c);
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(out, "oracle over {}: {} ({:?})", o.field, final_word(o.verdict), o.method);
    }
    if let Some(a) = r.agreement {
        let _ = writeln!(out, "agreement: {a}");
    }
    if let Some(q) = &r.rational_cross_check {
        let _ = writeln!(out, "rational cross-check: {}", final_word(q.verdict));
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    if !r.certified {
        out.push_str("warning: an irreducibility test fell back to an uncertified answer\n");
    }
    let _ = writeln!(out, "final: {}", final_word(r.final_verdict));
    out
}

pub fn green_text(g: &GreenReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree: {}, size: {}", g.degree, g.size);
    let _ = writeln!(out, "J-classes: {}", g.j_classes.len());
    for c in &g.j_classes {
        let _ = writeln!(
            out,
            "  J{}: rank {}, {} elements, {} R-classes, {} L-classes, {} idempotents{}",
            c.id,
            c.rank,
            c.size,
            c.r_classes,
            c.l_classes,
            c.idempotents,
            if c.regular { ", regular" } else { "" }
        );
    }
    let _ = writeln!(out, "minimal ideal: J{}", g.minimal_ideal);
    let _ = writeln!(out, "minimal nonzero: {:?}", g.minimal_nonzero);
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
