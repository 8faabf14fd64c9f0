//! Parsers for n lists ("3", "3,5,7", "2-7") and residue selections ("all", "0,2").

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NList(pub Vec<u32>);

impl fmt::Display for NList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_u32(s: &str) -> Result<u32, String> {
    s.trim().parse().map_err(|_| format!("not a nonnegative integer: {s:?}"))
}

pub fn parse_n_list(s: &str) -> Result<NList, String> {
    let mut out = vec![];
    for part in s.split(',') {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_u32(lo)?, parse_u32(hi)?);
                if lo > hi {
                    return Err(format!("empty range {part:?}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_u32(part)?),
        }
    }
    if let Some(bad) = out.iter().find(|n| **n < 2) {
        return Err(format!("n must be at least 2, got {bad}"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(NList(out))
}

pub fn parse_positive(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

pub fn parse_n(s: &str) -> Result<u32, String> {
    let n = parse_u32(s)?;
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    Ok(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RSel {
    All,
    List(Vec<i64>),
}

impl RSel {
    /// Residues in 0..n, sorted and deduplicated.
    pub fn resolve(&self, n: u32) -> Vec<i64> {
        let n = n as i64;
        let mut rs: Vec<i64> = match self {
            RSel::All => (0..n).collect(),
            RSel::List(v) => v.iter().map(|r| r.rem_euclid(n)).collect(),
        };
        rs.sort_unstable();
        rs.dedup();
        rs
    }
}

impl fmt::Display for RSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RSel::All => write!(f, "all"),
            RSel::List(v) => {
                let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

pub fn parse_r_sel(s: &str) -> Result<RSel, String> {
    if s.trim() == "all" {
        return Ok(RSel::All);
    }
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("not an integer: {p:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(RSel::List)
}
