//! Text formats for complexes and ideals.
//!
//! Complex: `n <int>` then `f v1 v2 ...` per generating face.
//! Ideal: `ring E|S`, `n <int>`, then `g i1 i2 ...` per generator; in `S` a
//! repeated index raises the exponent. `#` starts a comment line.

use crate::error::{Error, Result};
use crate::exterior::{vertex_bit, vertices, Mask};
use crate::ideal::{MonomialIdeal, Ring};
use crate::simplicial::{SimplicialComplex, MAX_VERTICES};
use crate::symmetric::Exponents;

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((k + 1, l.split_whitespace().collect()))
        }
    })
}

fn parse_n(line: usize, words: &[&str], limit: usize) -> Result<usize> {
    if words.len() != 2 || words[0] != "n" {
        return Err(parse_err(line, "expected `n <int>`"));
    }
    let n: usize = words[1].parse().map_err(|_| parse_err(line, format!("bad integer `{}`", words[1])))?;
    if n > limit {
        return Err(parse_err(line, format!("n = {n} exceeds the supported {limit}")));
    }
    Ok(n)
}

fn parse_indices(line: usize, words: &[&str], n: usize) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| {
            let v: usize = w.parse().map_err(|_| parse_err(line, format!("bad vertex `{w}`")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (l0, first) = lines.next().ok_or_else(|| parse_err(0, "empty file"))?;
    let n = parse_n(l0, &first, MAX_VERTICES)?;
    let mut faces: Vec<Mask> = vec![0];
    for (line, words) in lines {
        if words[0] != "f" {
            return Err(parse_err(line, format!("expected `f`, found `{}`", words[0])));
        }
        let mut face = 0;
        for v in parse_indices(line, &words[1..], n)? {
            if face & vertex_bit(v) != 0 {
                return Err(parse_err(line, format!("vertex {v} repeated")));
            }
            face |= vertex_bit(v);
        }
        faces.push(face);
    }
    SimplicialComplex::from_masks(n, &faces)
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let (l0, first) = lines.next().ok_or_else(|| parse_err(0, "empty file"))?;
    let ring = match first.as_slice() {
        ["ring", "E"] => Ring::Exterior,
        ["ring", "S"] => Ring::SymmetricGeneral,
        _ => return Err(parse_err(l0, "expected `ring E` or `ring S`")),
    };
    let (l1, second) = lines.next().ok_or_else(|| parse_err(l0, "missing `n <int>` line"))?;
    let n = parse_n(l1, &second, MAX_VERTICES)?;
    let mut gens: Vec<Exponents> = Vec::new();
    for (line, words) in lines {
        if words[0] != "g" {
            return Err(parse_err(line, format!("expected `g`, found `{}`", words[0])));
        }
        if words.len() == 1 {
            return Err(parse_err(line, "the unit generator makes the ideal improper"));
        }
        let mut u = vec![0u32; n];
        for v in parse_indices(line, &words[1..], n)? {
            if ring == Ring::Exterior && u[v - 1] > 0 {
                return Err(parse_err(line, format!("repeated index {v} in an exterior monomial")));
            }
            u[v - 1] += 1;
        }
        gens.push(u);
    }
    match ring {
        Ring::Exterior => {
            let masks: Vec<Mask> =
                gens.iter().map(|u| u.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (k, _)| m | vertex_bit(k + 1))).collect();
            MonomialIdeal::minimalize(Ring::Exterior, n, &masks)
        }
        _ => MonomialIdeal::minimalize_exponents(n, &gens),
    }
}

/// Complex or ideal, decided by the first keyword.
pub fn parse_input(text: &str) -> Result<Input> {
    match content_lines(text).next() {
        Some((_, w)) if w[0] == "ring" => parse_ideal(text).map(Input::Ideal),
        Some((_, w)) if w[0] == "n" => parse_complex(text).map(Input::Complex),
        Some((line, w)) => Err(parse_err(line, format!("unknown keyword `{}`", w[0]))),
        None => Err(parse_err(0, "empty file")),
    }
}

/// Facets as `f` lines; reparses to the same complex.
pub fn write_complex(delta: &SimplicialComplex) -> String {
    let mut s = format!("n {}\n", delta.n());
    for f in delta.facets() {
        let vs: Vec<String> = vertices(f).iter().map(|v| v.to_string()).collect();
        if vs.is_empty() {
            s.push_str("f\n");
        } else {
            s.push_str(&format!("f {}\n", vs.join(" ")));
        }
    }
    s
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let ring = if ideal.ring() == Ring::Exterior { "E" } else { "S" };
    let mut s = format!("ring {ring}\nn {}\n", ideal.n());
    for u in ideal.exponent_generators() {
        let idx: Vec<String> =
            u.iter().enumerate().flat_map(|(k, &e)| std::iter::repeat_n((k + 1).to_string(), e as usize)).collect();
        s.push_str(&format!("g {}\n", idx.join(" ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{all_complexes, random_ideals};

    #[test]
    fn parse_complex_example() {
        let d = parse_complex("# not CM\nn 4\nf 1 2 3\nf 1 3 4\n\nf 2 4\n").unwrap();
        assert_eq!(d.minimal_nonfaces().len(), 2);
        assert_eq!(d.num_faces(), 13);
        assert!(parse_complex("n 3\n").unwrap().contains(0));
    }

    #[test]
    fn complex_errors() {
        for bad in ["", "f 1 2\n", "n x\n", "n 3\nf 1 4\n", "n 3\nf 1 1\n", "n 3\ng 1\n", "n 30\n", "n 3\nf 0\n"] {
            assert!(matches!(parse_complex(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
        match parse_complex("n 3\n# c\nf 1 9\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_ideal_examples() {
        let j = parse_ideal("ring E\nn 4\ng 3 4\ng 1 2 4\n").unwrap();
        assert_eq!(j.ring(), Ring::Exterior);
        assert_eq!(j.num_generators(), 2);
        let i = parse_ideal("ring S\nn 3\ng 2 2\ng 2 3\ng 3 3\n").unwrap();
        assert_eq!(i.ring(), Ring::SymmetricGeneral);
        let sq = parse_ideal("ring S\nn 3\ng 1 2\n").unwrap();
        assert_eq!(sq.ring(), Ring::SymmetricSquarefree);
        assert!(parse_ideal("ring E\nn 3\ng 1 1\n").is_err());
        assert!(parse_ideal("ring E\nn 3\ng\n").is_err());
        assert!(parse_ideal("ring Q\nn 3\n").is_err());
    }

    #[test]
    fn detection() {
        assert!(matches!(parse_input("n 2\nf 1 2\n"), Ok(Input::Complex(_))));
        assert!(matches!(parse_input("# x\nring E\nn 2\ng 1 2\n"), Ok(Input::Ideal(_))));
        assert!(parse_input("foo\n").is_err());
    }

    #[test]
    fn round_trips() {
        for d in all_complexes(4, false) {
            assert_eq!(parse_complex(&write_complex(&d)).unwrap(), d);
        }
        for j in random_ideals(40, 2, 6, 9) {
            assert_eq!(parse_ideal(&write_ideal(&j)).unwrap(), j);
        }
        let i = parse_ideal("ring S\nn 3\ng 2 2\ng 2 3\ng 3 3\n").unwrap();
        assert_eq!(parse_ideal(&write_ideal(&i)).unwrap(), i);
    }
}
