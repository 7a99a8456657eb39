//! Text formats for families, edge-ordered graphs, matrices and drawings.
//!
//! * family: JSON `{"universe": n', "orders": [[ids...], ...], "cyclic": bool}`
//!   (`cyclic` optional, default false)
//! * edge-ordered graph: `n m`, then `m` lines `u v` in increasing edge order
//! * matrix: one line of `0`/`1` characters per row
//! * drawing: `n m`, then `n` lines `x y`, then `m` lines `u v`
//!
//! Blank lines and lines starting with `#` are ignored in the text formats.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::edge_ordered::EdgeOrderedGraph;
use crate::error::{Error, Result};
use crate::geo::{GeometricGraph, Point};
use crate::matrix::ZeroOneMatrix;
use crate::orders::{cyclic_family_to_linear, CyclicFamily, CyclicOrder, OrderFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub universe: usize,
    pub orders: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cyclic: bool,
}

impl FamilyFile {
    pub fn from_family(f: &OrderFamily) -> Self {
        FamilyFile {
            universe: f.universe(),
            orders: f.to_ids(),
            cyclic: false,
        }
    }

    pub fn from_cyclic(f: &CyclicFamily) -> Self {
        FamilyFile {
            universe: f.universe(),
            orders: f.orders().iter().map(CyclicOrder::ids).collect(),
            cyclic: true,
        }
    }

    pub fn to_cyclic(&self) -> Result<CyclicFamily> {
        let orders = self
            .orders
            .iter()
            .map(|o| CyclicOrder::from_ids(o.iter().copied()))
            .collect::<Result<_>>()?;
        CyclicFamily::new(self.universe, orders)
    }

    /// The linear family; cyclic files are cut at their smallest symbol.
    pub fn to_linear(&self) -> Result<OrderFamily> {
        if self.cyclic {
            Ok(cyclic_family_to_linear(&self.to_cyclic()?))
        } else {
            OrderFamily::from_ids(self.universe, self.orders.clone())
        }
    }
}

pub fn parse_family(text: &str) -> Result<FamilyFile> {
    Ok(serde_json::from_str(text)?)
}

pub fn format_family(f: &FamilyFile) -> String {
    serde_json::to_string(f).expect("plain data")
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: FromStr>(what: &str, line: (usize, &str), count: usize) -> Result<Vec<T>> {
    let (k, l) = line;
    let v: Vec<T> = l
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(what, format!("line {k}: bad number {t:?}")))
        })
        .collect::<Result<_>>()?;
    if v.len() != count {
        return Err(Error::parse(
            what,
            format!("line {k}: expected {count} numbers, found {}", v.len()),
        ));
    }
    Ok(v)
}

fn header<'a>(
    what: &str,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<(usize, usize)> {
    let line = lines
        .next()
        .ok_or_else(|| Error::parse(what, "missing \"n m\" header"))?;
    let v: Vec<usize> = numbers(what, line, 2)?;
    Ok((v[0], v[1]))
}

fn edge_lines<'a>(
    what: &str,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    m: usize,
) -> Result<Vec<(usize, usize)>> {
    (0..m)
        .map(|k| {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(what, format!("expected {m} edges, found {k}")))?;
            let v: Vec<usize> = numbers(what, line, 2)?;
            Ok((v[0], v[1]))
        })
        .collect()
}

fn no_trailing<'a>(what: &str, mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<()> {
    match lines.next() {
        Some((k, _)) => Err(Error::parse(
            what,
            format!("line {k}: unexpected trailing content"),
        )),
        None => Ok(()),
    }
}

pub fn parse_edge_ordered(text: &str) -> Result<EdgeOrderedGraph> {
    const WHAT: &str = "edge-ordered graph";
    let mut lines = content_lines(text);
    let (n, m) = header(WHAT, &mut lines)?;
    let edges = edge_lines(WHAT, &mut lines, m)?;
    no_trailing(WHAT, lines)?;
    EdgeOrderedGraph::new(n, &edges)
}

pub fn format_edge_ordered(g: &EdgeOrderedGraph) -> String {
    let mut s = format!("{} {}\n", g.num_vertices(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<ZeroOneMatrix> {
    let rows: Vec<Vec<u8>> = content_lines(text)
        .map(|(k, l)| {
            l.chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::parse(
                        "matrix",
                        format!("line {k}: unexpected character {c:?}"),
                    )),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::parse("matrix", "no rows"));
    }
    ZeroOneMatrix::from_rows(&rows)
}

pub fn format_matrix(m: &ZeroOneMatrix) -> String {
    format!("{m}\n")
}

pub fn parse_geometry(text: &str) -> Result<GeometricGraph> {
    const WHAT: &str = "geometry";
    let mut lines = content_lines(text);
    let (n, m) = header(WHAT, &mut lines)?;
    let points = (0..n)
        .map(|k| {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(WHAT, format!("expected {n} points, found {k}")))?;
            let v: Vec<i64> = numbers(WHAT, line, 2)?;
            Ok(Point::new(v[0], v[1]))
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = edge_lines(WHAT, &mut lines, m)?;
    no_trailing(WHAT, lines)?;
    GeometricGraph::new(points, &edges)
}

pub fn format_geometry(g: &GeometricGraph) -> String {
    let mut s = format!("{} {}\n", g.num_vertices(), g.edges().len());
    for p in g.points() {
        s.push_str(&format!("{} {}\n", p.x, p.y));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_family(path: &Path) -> Result<FamilyFile> {
    parse_family(&read_text(path)?)
}

pub fn read_edge_ordered(path: &Path) -> Result<EdgeOrderedGraph> {
    parse_edge_ordered(&read_text(path)?)
}

pub fn read_matrix(path: &Path) -> Result<ZeroOneMatrix> {
    parse_matrix(&read_text(path)?)
}

pub fn read_geometry(path: &Path) -> Result<GeometricGraph> {
    parse_geometry(&read_text(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge_ordered::c4_1243;
    use crate::matrix::s_t;

    #[test]
    fn family_round_trip() {
        let f = parse_family(r#"{"universe": 4, "orders": [[0, 1, 2], [2, 1, 3]]}"#).unwrap();
        assert!(!f.cyclic);
        assert_eq!(f.to_linear().unwrap().total_weight(), 6);
        assert_eq!(parse_family(&format_family(&f)).unwrap(), f);
        let c =
            parse_family(r#"{"universe": 4, "orders": [[2, 0, 1], [1, 0, 2]], "cyclic": true}"#)
                .unwrap();
        assert_eq!(
            c.to_linear().unwrap().to_ids(),
            vec![vec![0, 1, 2], vec![0, 2, 1]]
        );
        assert!(parse_family(r#"{"universe": 2, "orders": [[0, 5]]}"#)
            .unwrap()
            .to_linear()
            .is_err());
    }

    #[test]
    fn edge_ordered_round_trip() {
        let g = c4_1243();
        let text = format_edge_ordered(&g);
        assert_eq!(text, "4 4\n0 1\n1 2\n0 3\n2 3\n");
        assert_eq!(parse_edge_ordered(&text).unwrap(), g);
        assert!(parse_edge_ordered("3 2\n0 1\n").is_err());
        assert!(parse_edge_ordered("3 1\n0 x\n").is_err());
        assert!(parse_edge_ordered("3 1\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let m = s_t(2).unwrap();
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        assert!(parse_matrix("010\n10\n").is_err());
        assert!(parse_matrix("012\n").is_err());
        assert!(parse_matrix("\n").is_err());
    }

    #[test]
    fn geometry_round_trip() {
        let text = "# bowtie\n4 2\n0 0\n2 2\n0 2\n2 0\n0 1\n2 3\n";
        let g = parse_geometry(text).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(parse_geometry(&format_geometry(&g)).unwrap(), g);
        assert!(parse_geometry("2 0\n0 0\n0 0\n").is_err());
    }
}
