//! Text formats: `.emb` for embedded graphs, `.rg` for abstract rooted
//! graphs and `.hint` for structural hints.
//!
//! ```text
//! emb 1
//! V 3
//! E 3
//! edge 0 0 1 1
//! edge 1 1 2 1
//! edge 2 2 0 -1
//! rot 0 0+ 2-
//! rot 1 1+ 0-
//! rot 2 2+ 1-
//! roots 0 2
//! ```
//!
//! Dart `k+` leaves the first endpoint of edge `k`, `k-` leaves the second.

use std::fmt::Write;

use super::{Cycle, Dart, Embedding, RootSet};
use crate::error::{malformed, Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Malformed(format!("line {line}: expected a number, got {tok:?}")))
}

fn dart_token(d: Dart) -> String {
    format!("{}{}", d / 2, if d % 2 == 0 { '+' } else { '-' })
}

fn parse_dart(tok: &str, line: usize) -> Result<Dart> {
    let (body, odd) = if let Some(b) = tok.strip_suffix('+') {
        (b, false)
    } else if let Some(b) = tok.strip_suffix('-').or_else(|| tok.strip_suffix('\u{2212}')) {
        (b, true)
    } else {
        return malformed(format!("line {line}: bad dart {tok:?}"));
    };
    Ok(2 * num(body, line)? + usize::from(odd))
}

fn parse_sig(tok: &str, line: usize) -> Result<i8> {
    match tok {
        "1" | "+1" | "+" => Ok(1),
        "-1" | "-" | "\u{2212}1" | "\u{2212}" => Ok(-1),
        _ => malformed(format!("line {line}: bad signature {tok:?}")),
    }
}

pub fn write_emb(emb: &Embedding) -> String {
    let mut s = String::new();
    writeln!(s, "emb 1").unwrap();
    writeln!(s, "V {}", emb.n()).unwrap();
    writeln!(s, "E {}", emb.m()).unwrap();
    for e in 0..emb.m() {
        let [u, v] = emb.ends(e);
        writeln!(s, "edge {e} {u} {v} {}", emb.sig(e)).unwrap();
    }
    for v in 0..emb.n() {
        let darts: Vec<String> = emb.rotation(v).iter().map(|&d| dart_token(d)).collect();
        writeln!(s, "rot {v} {}", darts.join(" ")).unwrap();
    }
    if let Some(r) = emb.roots() {
        let rs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        writeln!(s, "roots {}", rs.join(" ")).unwrap();
    }
    s
}

pub fn parse_emb(text: &str) -> Result<Embedding> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, t)) if t == ["emb", "1"] => {}
        _ => return malformed("missing header `emb 1`"),
    }
    let mut n = None;
    let mut m = None;
    let mut ends: Vec<Option<[usize; 2]>> = Vec::new();
    let mut sig: Vec<i8> = Vec::new();
    let mut rot: Vec<Option<Vec<Dart>>> = Vec::new();
    let mut roots = None;
    for (ln, t) in lines {
        match t[0] {
            "V" if t.len() == 2 => {
                let k = num(t[1], ln)?;
                n = Some(k);
                rot = vec![None; k];
            }
            "E" if t.len() == 2 => {
                let k = num(t[1], ln)?;
                m = Some(k);
                ends = vec![None; k];
                sig = vec![0; k];
            }
            "edge" if t.len() == 5 => {
                let (Some(n), Some(m)) = (n, m) else {
                    return malformed(format!("line {ln}: edge before V/E"));
                };
                let k = num(t[1], ln)?;
                let (u, v) = (num(t[2], ln)?, num(t[3], ln)?);
                if k >= m || u >= n || v >= n {
                    return malformed(format!("line {ln}: edge out of range"));
                }
                if ends[k].is_some() {
                    return malformed(format!("line {ln}: edge {k} defined twice"));
                }
                ends[k] = Some([u, v]);
                sig[k] = parse_sig(t[4], ln)?;
            }
            "rot" if t.len() >= 2 => {
                let Some(n) = n else {
                    return malformed(format!("line {ln}: rot before V"));
                };
                let v = num(t[1], ln)?;
                if v >= n {
                    return malformed(format!("line {ln}: vertex out of range"));
                }
                if rot[v].is_some() {
                    return malformed(format!("line {ln}: rotation of {v} given twice"));
                }
                rot[v] = Some(t[2..].iter().map(|x| parse_dart(x, ln)).collect::<Result<_>>()?);
            }
            "roots" => {
                let rs = t[1..].iter().map(|x| num(x, ln)).collect::<Result<Vec<_>>>()?;
                roots = Some(RootSet::new(rs));
            }
            _ => return malformed(format!("line {ln}: unrecognised line")),
        }
    }
    if n.is_none() || m.is_none() {
        return malformed("missing V or E line");
    }
    let ends = ends
        .into_iter()
        .enumerate()
        .map(|(k, e)| e.ok_or_else(|| Error::Malformed(format!("edge {k} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let rot = rot
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::Malformed(format!("rotation of {v} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let mut emb = Embedding::new(ends, sig, rot)?;
    if let Some(r) = roots {
        if r.iter().any(|x| x >= emb.n()) {
            return malformed("root out of range");
        }
        emb.set_roots(Some(r));
    }
    Ok(emb)
}

pub fn write_rg(g: &Graph, roots: &RootSet) -> String {
    let mut s = String::new();
    writeln!(s, "V {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    let rs: Vec<String> = roots.iter().map(|x| x.to_string()).collect();
    writeln!(s, "roots {}", rs.join(" ")).unwrap();
    s
}

pub fn parse_rg(text: &str) -> Result<(Graph, RootSet)> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut roots = RootSet::default();
    for (ln, t) in content_lines(text) {
        match (t[0], t.len()) {
            ("V", 2) => n = Some(num(t[1], ln)?),
            ("roots", _) => {
                roots = RootSet::new(t[1..].iter().map(|x| num(x, ln)).collect::<Result<_>>()?)
            }
            (_, 2) => edges.push((num(t[0], ln)?, num(t[1], ln)?)),
            _ => return malformed(format!("line {ln}: unrecognised line")),
        }
    }
    let Some(n) = n else { return malformed("missing V line") };
    if edges.iter().any(|&(u, v)| u >= n || v >= n) || roots.iter().any(|r| r >= n) {
        return malformed("vertex out of range");
    }
    Ok((Graph::from_edges(n, edges), roots))
}

/// Structural hint for a projective instance: branch vertices of a
/// K4-subdivision, its three facial cycles and three protective cycles, all
/// given as vertex sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hint {
    pub branch: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
    pub protect: Vec<Vec<usize>>,
}

pub fn write_hint(h: &Hint) -> String {
    let join = |vs: &[usize]| vs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    writeln!(s, "branch {}", join(&h.branch)).unwrap();
    for f in &h.faces {
        writeln!(s, "face {}", join(f)).unwrap();
    }
    for c in &h.protect {
        writeln!(s, "protect {}", join(c)).unwrap();
    }
    s
}

pub fn parse_hint(text: &str) -> Result<Hint> {
    let mut h = Hint::default();
    for (ln, t) in content_lines(text) {
        let vs = t[1..].iter().map(|x| num(x, ln)).collect::<Result<Vec<_>>>()?;
        match t[0] {
            "branch" => h.branch = vs,
            "face" => h.faces.push(vs),
            "protect" => h.protect.push(vs),
            _ => return malformed(format!("line {ln}: unrecognised line")),
        }
    }
    Ok(h)
}

/// Turns a cyclic vertex sequence into darts. Between consecutive vertices the
/// edge with the smallest id is used.
pub fn cycle_from_vertices(emb: &Embedding, vs: &[usize]) -> Result<Cycle> {
    let k = vs.len();
    (0..k)
        .map(|i| {
            let (u, w) = (vs[i], vs[(i + 1) % k]);
            if u >= emb.n() || w >= emb.n() {
                return malformed(format!("vertex out of range in cycle"));
            }
            emb.rotation(u)
                .iter()
                .copied()
                .filter(|&d| emb.head(d) == w)
                .min()
                .ok_or_else(|| Error::Malformed(format!("{u} and {w} are not adjacent")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn emb_round_trip() {
        let e = k4().with_roots(RootSet::new(vec![0, 3]));
        let text = write_emb(&e);
        let back = parse_emb(&text).unwrap();
        assert!(back.same_structure(&e));
        assert_eq!(back.roots(), e.roots());
        assert_eq!(write_emb(&back), text);
    }

    #[test]
    fn accepts_unicode_minus() {
        let text = "emb 1\nV 1\nE 1\nedge 0 0 0 \u{2212}1\nrot 0 0+ 0\u{2212}\n";
        let e = parse_emb(text).unwrap();
        assert_eq!(e.euler_genus(), 1);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_emb("emb 1\nV 2\nE 1\nedge 0 0 5 1\n").is_err());
        assert!(parse_emb("hello").is_err());
    }

    #[test]
    fn rg_round_trip() {
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]);
        let r = RootSet::new(vec![1, 3]);
        let (g2, r2) = parse_rg(&write_rg(&g, &r)).unwrap();
        assert_eq!(g2.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(r2, r);
    }

    #[test]
    fn hint_round_trip() {
        let h = Hint { branch: vec![1, 2, 3, 4], faces: vec![vec![1, 2, 3]], protect: vec![vec![5, 6, 7]] };
        assert_eq!(parse_hint(&write_hint(&h)).unwrap(), h);
    }
}
