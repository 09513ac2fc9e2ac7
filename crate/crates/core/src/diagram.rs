//! Text renderings of the AR quiver of a cluster category: a column/row grid,
//! a DOT graph and a flat listing, each carrying one mark per object.

use std::fmt::Write;

use crate::category::{ClusterCategory, ObjectKind};
use crate::tilting::TiltingObject;

/// `o` for modules and `p` for shifted projectives.
pub fn object_marks(c: &ClusterCategory) -> Vec<char> {
    (0..c.len())
        .map(|x| match c.kind(x) {
            ObjectKind::Module(_) => 'o',
            ObjectKind::ShiftedProjective(_) => 'p',
        })
        .collect()
}

/// `M` at `m`, `.` on the other objects compatible with `m`, `#` elsewhere.
pub fn ext_support_marks(c: &ClusterCategory, m: usize) -> Vec<char> {
    (0..c.len())
        .map(|x| {
            if x == m {
                'M'
            } else if c.compatible(x, m) {
                '.'
            } else {
                '#'
            }
        })
        .collect()
}

/// `T` on the summands, `t` on `τ` of a summand, `.` elsewhere.
pub fn tilting_marks(c: &ClusterCategory, t: &TiltingObject) -> Vec<char> {
    let mut marks = vec!['.'; c.len()];
    for &x in &t.summands {
        marks[c.tau(x)] = 't';
    }
    for &x in &t.summands {
        marks[x] = 'T';
    }
    marks
}

/// One line per diagram vertex, one cell per knitting column.
pub fn grid(c: &ClusterCategory, marks: &[char]) -> String {
    let rank = c.spec().rank();
    let width = (0..c.len()).map(|x| c.coordinate(x).0).max().unwrap_or(0) as usize + 1;
    let mut cells = vec![vec![' '; width]; rank];
    for (x, &mark) in marks.iter().enumerate() {
        let (col, row) = c.coordinate(x);
        cells[row][col as usize] = mark;
    }
    let mut out = String::from("       ");
    for col in 0..width {
        write!(out, "{col:>3}").unwrap();
    }
    out.push('\n');
    for (row, line) in cells.iter().enumerate() {
        write!(out, "row {:>2} ", row + 1).unwrap();
        for &ch in line {
            write!(out, "  {ch}").unwrap();
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

/// The AR quiver in DOT, objects at their grid positions; marks other than
/// `.` and `o` are drawn filled.
pub fn dot(c: &ClusterCategory, marks: &[char]) -> String {
    let mut out = format!("digraph \"{}\" {{\n  node [shape=box, fontsize=10];\n", c.spec().label());
    for (x, &mark) in marks.iter().enumerate() {
        let (col, row) = c.coordinate(x);
        let style = if matches!(mark, '.' | 'o') { "" } else { ", style=filled, fillcolor=grey" };
        writeln!(out, "  n{x} [label=\"{}\\n{mark}\", pos=\"{},{}!\"{style}];", c.name(x), col * 2, -(row as i64) * 2)
            .unwrap();
    }
    for &(s, t) in &c.ar_quiver().arrows {
        writeln!(out, "  n{s} -> n{t};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `name<TAB>mark` per object in id order.
pub fn listing(c: &ClusterCategory, marks: &[char]) -> String {
    marks.iter().enumerate().map(|(x, m)| format!("{}\t{m}\n", c.name(x))).collect()
}
