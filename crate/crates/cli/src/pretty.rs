//! Human-readable renderings used by `--pretty`. Permutations appear in cycle
//! notation here and as image arrays everywhere else.

use std::fmt::Write as _;

use gauss_epple::analogue::{AnalogueSpace, PermRep, Presentation};
use gauss_epple::artin::{RelationReport, RootSystem};
use gauss_epple::{GeElement, Int, Permutation, RootVector, SgeElement};

use crate::commands::KernelTable;

fn table(rows: &[Vec<Int>], indent: &str) -> String {
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
        writeln!(out, "{indent}{}", cells.join(" ")).unwrap();
    }
    out
}

pub fn ge(g: &GeElement) -> String {
    format!("pi  = {}\nell = {:?}\n", g.pi(), g.ell())
}

pub fn sge(g: &SgeElement) -> String {
    format!("pi = {}\nM =\n{}", g.pi(), table(&g.m().rows(), "  "))
}

pub fn wp(pi: &Permutation, writhe: i64) -> String {
    format!("pi     = {pi}\nwrithe = {writhe}\n")
}

pub fn kernel_table(t: &KernelTable) -> String {
    format!("ge     {}\nsymge  {}\nsge    {}\nwp     {}\n", t.ge, t.symge, t.sge, t.wp)
}

pub fn braid_cocycle(pi: &Permutation, f: &[Vec<Int>]) -> String {
    format!("pi = {pi}\nFbar =\n{}", table(f, "  "))
}

pub fn artin_cocycle(f: &RootVector, rs: &RootSystem) -> String {
    let width = rs.legend().iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = format!("{}: nonzero entries of Fbar\n", rs.kind());
    for (label, &v) in f.values().iter().enumerate() {
        if v != 0 {
            writeln!(out, "  {label:>3}  {:<width$}  {v:>2}", rs.legend()[label]).unwrap();
        }
    }
    out
}

pub fn relations(r: &RelationReport) -> String {
    let mut out = format!("{}\n", r.kind);
    for c in &r.relations {
        let note = if c.empirical { "  (empirical, outside the proved lengths)" } else { "" };
        writeln!(
            out,
            "  a{} a{}  m = {}  {}{note}",
            c.a,
            c.b,
            c.m,
            if c.pass { "pass" } else { "FAIL" }
        )
        .unwrap();
    }
    out
}

pub fn analogue(space: &AnalogueSpace, pres: &Presentation, rep: &PermRep) -> String {
    let points: Vec<String> = rep.points().iter().map(|p| p.to_string()).collect();
    let mut out = format!("dimension {}\n", space.dimension);
    for (i, (v, ok)) in space.basis.iter().zip(&space.verified).enumerate() {
        let parts: Vec<String> = pres
            .generators()
            .iter()
            .zip(v.chunks(points.len()))
            .map(|(g, l)| format!("{g} -> {l:?}"))
            .collect();
        writeln!(out, "  {:>2}: {}{}", i + 1, parts.join(", "), if *ok { "" } else { "  UNVERIFIED" }).unwrap();
    }
    writeln!(out, "points: {}", points.join(" ")).unwrap();
    out
}
