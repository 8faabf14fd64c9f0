//! Fusion with V(2,r), the Bratteli diagrams Γ_n and Γ, and centralizer dimensions.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Params, Record, Report, Status};
use crate::temperley_lieb::catalan;

/// Largest row index; keeps squared multiplicities inside u128.
pub const MAX_ROWS: usize = 60;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Simple,
    Proj,
}

/// V(ℓ,r) or its projective cover P(ℓ,r); r is stored reduced mod n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ModuleLabel {
    pub kind: Kind,
    pub ell: u32,
    pub r: u32,
}

impl ModuleLabel {
    pub fn new(n: u32, kind: Kind, ell: u32, r: i64) -> Result<Self> {
        let ok = match kind {
            Kind::Simple => (1..=n).contains(&ell),
            Kind::Proj => (1..n).contains(&ell),
        };
        if !ok {
            return Err(Error::InvalidLabel(format!("{kind:?}({ell},{r}) for n={n}")));
        }
        Ok(ModuleLabel {
            kind,
            ell,
            r: r.rem_euclid(n as i64) as u32,
        })
    }

    pub fn simple(n: u32, ell: u32, r: i64) -> Result<Self> {
        Self::new(n, Kind::Simple, ell, r)
    }

    pub fn proj(n: u32, ell: u32, r: i64) -> Result<Self> {
        Self::new(n, Kind::Proj, ell, r)
    }

    pub fn dim(&self, n: u32) -> u64 {
        match self.kind {
            Kind::Simple => self.ell as u64,
            Kind::Proj => 2 * n as u64,
        }
    }

    /// P(n−ℓ, r+ℓ), which has the same composition factors.
    pub fn complement(&self, n: u32) -> Option<Self> {
        match self.kind {
            Kind::Proj => Some(ModuleLabel {
                kind: Kind::Proj,
                ell: n - self.ell,
                r: (self.r + self.ell) % n,
            }),
            Kind::Simple => None,
        }
    }

    pub fn display_with(&self, r: i64) -> String {
        match self.kind {
            Kind::Simple => format!("({},{})", self.ell, r),
            Kind::Proj => format!("P({},{})", self.ell, r),
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(self.r as i64))
    }
}

fn require_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Unsupported(format!("fusion rules need n >= 3, got {n}")));
    }
    Ok(())
}

/// The summands of W ⊗ V(2,r) on unreduced labels (kind, ℓ, s), with multiplicities.
fn fuse_raw(n: u32, kind: Kind, ell: u32, s: i64, r: i64) -> Result<Vec<(Kind, u32, i64, u64)>> {
    use Kind::*;
    Ok(match kind {
        Simple if ell == 1 => vec![(Simple, 2, r + s, 1)],
        Simple if ell < n => vec![(Simple, ell + 1, r + s, 1), (Simple, ell - 1, r + 1 + s, 1)],
        Simple if ell == n => vec![(Proj, n - 1, r + 1 + s, 1)],
        Proj if ell == 1 => vec![(Proj, 2, r + s, 1), (Simple, n, r + 1 + s, 2)],
        Proj if ell < n - 1 => vec![(Proj, ell + 1, r + s, 1), (Proj, ell - 1, r + 1 + s, 1)],
        Proj if ell == n - 1 => vec![(Proj, n - 2, r + 1 + s, 1), (Simple, n, r + s, 2)],
        _ => return Err(Error::InvalidLabel(format!("{kind:?}({ell},{s}) for n={n}"))),
    })
}

/// W ⊗ V(2,r) for an indecomposable W, as labels with multiplicity.
pub fn tensor_with_v2(n: u32, label: ModuleLabel, r: i64) -> Result<Vec<(ModuleLabel, u64)>> {
    require_n(n)?;
    fuse_raw(n, label.kind, label.ell, label.r as i64, r)?
        .into_iter()
        .map(|(kind, ell, s, m)| Ok((ModuleLabel::new(n, kind, ell, s)?, m)))
        .collect()
}

/// Row k of Γ_n: multiplicities of the summands of V(2,r)^{⊗k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrattRow {
    pub n: u32,
    pub r: u32,
    pub k: usize,
    pub mults: BTreeMap<ModuleLabel, u128>,
    /// Unreduced second components obtained by carrying integers through the fusion rules.
    display: BTreeMap<ModuleLabel, i64>,
}

impl BrattRow {
    pub fn mult(&self, label: &ModuleLabel) -> u128 {
        self.mults.get(label).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u128 {
        self.mults.iter().map(|(l, m)| l.dim(self.n) as u128 * m).sum()
    }

    pub fn display_r(&self, label: &ModuleLabel) -> i64 {
        self.display.get(label).copied().unwrap_or(label.r as i64)
    }

    pub fn display_label(&self, label: &ModuleLabel) -> String {
        label.display_with(self.display_r(label))
    }

    /// Labels left to right as drawn, i.e. in the order of the matching two-part partitions.
    pub fn ordered(&self) -> Vec<ModuleLabel> {
        let mut placed: Vec<ModuleLabel> = partitions(self.k)
            .into_iter()
            .filter_map(|b| correspondence(b, self.n).ok())
            .map(|l| shift(l, self.n, self.k as i64 * self.r as i64))
            .filter(|l| self.mults.contains_key(l))
            .collect();
        for l in self.mults.keys() {
            if !placed.contains(l) {
                placed.push(*l);
            }
        }
        placed
    }
}

fn shift(l: ModuleLabel, n: u32, by: i64) -> ModuleLabel {
    ModuleLabel {
        r: (l.r as i64 + by).rem_euclid(n as i64) as u32,
        ..l
    }
}

/// Rows 1..=kmax of Γ_n for V(2,r).
pub fn bratteli_rows(n: u32, r: i64, kmax: usize) -> Result<Vec<BrattRow>> {
    require_n(n)?;
    if kmax > MAX_ROWS {
        return Err(Error::ResourceLimit(format!("at most {MAX_ROWS} rows")));
    }
    let rr = r.rem_euclid(n as i64);
    let first = ModuleLabel::simple(n, 2, rr)?;
    let mut row = BrattRow {
        n,
        r: rr as u32,
        k: 1,
        mults: BTreeMap::from([(first, 1)]),
        display: BTreeMap::from([(first, rr)]),
    };
    let mut out = vec![];
    for k in 1..=kmax {
        if k > 1 {
            let mut next = BrattRow {
                k,
                mults: BTreeMap::new(),
                display: BTreeMap::new(),
                ..row.clone()
            };
            for (label, m) in &row.mults {
                let s = row.display_r(label);
                for (kind, ell, s2, m2) in fuse_raw(n, label.kind, label.ell, s, rr)? {
                    let l2 = ModuleLabel::new(n, kind, ell, s2)?;
                    *next.mults.entry(l2).or_insert(0) += m * m2 as u128;
                    next.display.entry(l2).or_insert(s2);
                }
            }
            row = next;
        }
        out.push(row.clone());
    }
    Ok(out)
}

/// The terms of the centralizer dimension formula for one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerTerms {
    /// p_i for each projective summand, left to right.
    pub proj: Vec<u128>,
    /// s_i + p_i for each simple summand, left to right.
    pub simple_plus_proj: Vec<u128>,
    /// p_i for projectives with no simple summand of the same label.
    pub unpaired_proj: Vec<u128>,
    /// (p_i, p_i′) for projectives whose complement also occurs, left to right.
    pub cross: Vec<(u128, u128)>,
}

impl CentralizerTerms {
    pub fn of(row: &BrattRow) -> Self {
        let n = row.n;
        let mut t = CentralizerTerms {
            proj: vec![],
            simple_plus_proj: vec![],
            unpaired_proj: vec![],
            cross: vec![],
        };
        for l in row.ordered() {
            let m = row.mult(&l);
            match l.kind {
                Kind::Proj => {
                    t.proj.push(m);
                    let simple = ModuleLabel { kind: Kind::Simple, ..l };
                    if row.mult(&simple) == 0 {
                        t.unpaired_proj.push(m);
                    }
                    let c = row.mult(&l.complement(n).expect("projective"));
                    if c > 0 {
                        t.cross.push((m, c));
                    }
                }
                Kind::Simple => {
                    let p = if l.ell < n {
                        row.mult(&ModuleLabel { kind: Kind::Proj, ..l })
                    } else {
                        0
                    };
                    t.simple_plus_proj.push(m + p);
                }
            }
        }
        t
    }

    pub fn proj_squares(&self) -> u128 {
        self.proj.iter().map(|p| p * p).sum()
    }

    /// Σ(s_i+p_i)² over labels whose simple module occurs.
    pub fn simple_squares(&self) -> u128 {
        self.simple_plus_proj.iter().map(|x| x * x).sum()
    }

    pub fn cross_term(&self) -> u128 {
        2 * self.cross.iter().map(|(a, b)| a * b).sum::<u128>()
    }

    /// Σp_i² + Σ(s_i+p_i)² + 2Σp_ip_i′ with every index of I_k, including projectives whose
    /// simple module is absent (they contribute (0+p_i)²).
    pub fn dim(&self) -> u128 {
        self.proj_squares() + self.simple_squares() + self.unpaired_squares() + self.cross_term()
    }

    /// The same sum with (s_i+p_i)² taken only over labels whose simple module occurs.
    pub fn dim_simple_indexed(&self) -> u128 {
        self.proj_squares() + self.simple_squares() + self.cross_term()
    }

    fn unpaired_squares(&self) -> u128 {
        self.unpaired_proj.iter().map(|p| p * p).sum()
    }
}

/// dim End_{D_n}(V^{⊗k}) from the summand multiplicities of a row.
pub fn centralizer_dim(row: &BrattRow) -> u128 {
    CentralizerTerms::of(row).dim()
}

/// {β₁, β₂} with β₁ ≥ β₂ ≥ 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition2 {
    pub b1: u32,
    pub b2: u32,
}

impl Partition2 {
    pub fn new(b1: u32, b2: u32) -> Result<Self> {
        if b2 > b1 {
            return Err(crate::error::invalid(format!("parts out of order: {{{b1},{b2}}}")));
        }
        Ok(Partition2 { b1, b2 })
    }

    pub fn size(&self) -> u32 {
        self.b1 + self.b2
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b2 == 0 {
            write!(f, "{{{}}}", self.b1)
        } else {
            write!(f, "{{{},{}}}", self.b1, self.b2)
        }
    }
}

/// Partitions of k into at most two parts, left to right (largest β₁ first).
pub fn partitions(k: usize) -> Vec<Partition2> {
    let k = k as u32;
    (0..=k / 2).map(|b2| Partition2 { b1: k - b2, b2 }).collect()
}

fn binom(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Number of paths from {1} to β in Γ: C(k, β₂) − C(k, β₂−1).
pub fn ballot(b: Partition2) -> u128 {
    let k = b.size();
    if b.b2 == 0 {
        1
    } else {
        binom(k, b.b2) - binom(k, b.b2 - 1)
    }
}

/// Rows 1..=kmax of Γ with path counts, computed by the recurrence along edges.
pub fn gamma_rows(kmax: usize) -> Result<Vec<Vec<(Partition2, u128)>>> {
    if kmax > MAX_ROWS {
        return Err(Error::ResourceLimit(format!("at most {MAX_ROWS} rows")));
    }
    let mut out: Vec<Vec<(Partition2, u128)>> = vec![];
    let mut prev: BTreeMap<Partition2, u128> = BTreeMap::from([(Partition2 { b1: 1, b2: 0 }, 1)]);
    for k in 1..=kmax {
        if k > 1 {
            let mut next = BTreeMap::new();
            for (b, c) in &prev {
                *next.entry(Partition2 { b1: b.b1 + 1, b2: b.b2 }).or_insert(0) += c;
                if b.b2 < b.b1 {
                    *next.entry(Partition2 { b1: b.b1, b2: b.b2 + 1 }).or_insert(0) += c;
                }
            }
            prev = next;
        }
        out.push(partitions(k).into_iter().map(|b| (b, prev[&b])).collect());
    }
    Ok(out)
}

/// β₁ − β₂ + 1 = γn + δ with 0 ≤ δ < n.
pub fn gamma_delta(b: Partition2, n: u32) -> (u32, u32) {
    let h = b.b1 - b.b2 + 1;
    (h / n, h % n)
}

/// Reflection of β across the γ-th critical line: {β₁ − δ, β₂ + δ}.
pub fn reflect(b: Partition2, n: u32) -> Partition2 {
    let (_, d) = gamma_delta(b, n);
    Partition2 {
        b1: b.b1 - d,
        b2: b.b2 + d,
    }
}

/// The Γ_n vertex (for V(2,0)) matching a vertex of Γ.
///
/// Right of the first critical line β ↦ V(β₁−β₂+1, β₂); on a critical line β ↦ V(n, β₂). A partition
/// left of the first line is reflected across its nearest critical line on the right. If the image
/// is simple, β gets its projective cover; if the image is already projective, β gets the complement.
pub fn correspondence(b: Partition2, n: u32) -> Result<ModuleLabel> {
    require_n(n)?;
    let (g, d) = gamma_delta(b, n);
    match (g, d) {
        (0, d) => ModuleLabel::simple(n, d, b.b2 as i64),
        (_, 0) => ModuleLabel::simple(n, n, b.b2 as i64),
        _ => {
            let image = correspondence(reflect(b, n), n)?;
            match image.kind {
                Kind::Simple => ModuleLabel::proj(n, image.ell, image.r as i64),
                Kind::Proj => Ok(image.complement(n).expect("projective")),
            }
        }
    }
}

/// The correspondence with the unreduced second component used in drawings, e.g. {11} ↦ P(3,7) for n=5.
pub fn correspondence_display(b: Partition2, n: u32) -> Result<(ModuleLabel, i64)> {
    require_n(n)?;
    let (g, d) = gamma_delta(b, n);
    match (g, d) {
        (0, d) => Ok((ModuleLabel::simple(n, d, b.b2 as i64)?, b.b2 as i64)),
        (_, 0) => Ok((ModuleLabel::simple(n, n, b.b2 as i64)?, b.b2 as i64)),
        _ => {
            let (image, s) = correspondence_display(reflect(b, n), n)?;
            match image.kind {
                Kind::Simple => Ok((ModuleLabel::proj(n, image.ell, s)?, s)),
                Kind::Proj => {
                    let s2 = s + image.ell as i64;
                    Ok((ModuleLabel::proj(n, n - image.ell, s2)?, s2))
                }
            }
        }
    }
}

fn outcome(check: &str, params: Params, bad: Vec<String>) -> Record {
    if bad.is_empty() {
        Record::new(check, params, Status::Pass)
    } else {
        Record::new(check, params, Status::Fail).with_detail(bad.join("; "))
    }
}

/// Position of β relative to the first critical line: negative to the right, zero on it, positive to the left.
fn line_offset(b: Partition2, n: u32) -> i64 {
    (b.b1 - b.b2 + 1) as i64 - n as i64
}

/// p_i = p̃_i and p_i + s_i = s̃_i for 1 ≤ k ≤ 2n−2, with both diagrams indexed from the first critical line.
pub fn check_path_count_identification(n: u32, kmax: Option<usize>) -> Result<Report> {
    require_n(n)?;
    let kmax = kmax.unwrap_or(2 * n as usize - 2).min(2 * n as usize - 2);
    let rows = bratteli_rows(n, 0, kmax)?;
    let gamma = gamma_rows(kmax)?;
    let mut rep = Report::new();
    for (row, grow) in rows.iter().zip(&gamma) {
        let mut bad = vec![];
        let mut right: Vec<(Partition2, u128)> = grow.iter().filter(|(b, _)| line_offset(*b, n) < 0).copied().collect();
        right.sort_by_key(|(b, _)| -line_offset(*b, n));
        let mut left: Vec<(Partition2, u128)> = grow.iter().filter(|(b, _)| line_offset(*b, n) > 0).copied().collect();
        left.sort_by_key(|(b, _)| line_offset(*b, n));
        let on_line = grow.iter().find(|(b, _)| line_offset(*b, n) == 0);

        let label_of = |b: Partition2| correspondence(b, n);
        // p_i sits at the i-th vertex left of the line, s_i at the i-th vertex right of it.
        let mut p = vec![0u128; left.len().max(right.len()) + 1];
        for (i, (b, tilde)) in left.iter().enumerate() {
            let l = label_of(*b)?;
            if l.kind != Kind::Proj {
                bad.push(format!("{b} left of the line maps to {l}"));
            }
            p[i + 1] = row.mult(&l);
            if p[i + 1] != *tilde {
                bad.push(format!("p_{} = {} but Γ has {tilde}", i + 1, p[i + 1]));
            }
        }
        for (i, (b, tilde)) in right.iter().enumerate() {
            let l = label_of(*b)?;
            let s = row.mult(&l);
            if let Some((lb, _)) = left.get(i) {
                let lp = label_of(*lb)?;
                if lp != (ModuleLabel { kind: Kind::Proj, ..l }) {
                    bad.push(format!("{lp} is not the projective cover of {l}"));
                }
            }
            if p[i + 1] + s != *tilde {
                bad.push(format!("p_{0} + s_{0} = {1} but Γ has {tilde}", i + 1, p[i + 1] + s));
            }
        }
        if let Some((b, tilde)) = on_line {
            let s0 = row.mult(&label_of(*b)?);
            if s0 != *tilde {
                bad.push(format!("s_0 = {s0} but Γ has {tilde}"));
            }
        }
        let mut placed = 0;
        for (b, _) in grow {
            if row.mult(&label_of(*b)?) > 0 {
                placed += 1;
            }
        }
        if placed != row.mults.len() {
            bad.push(format!("{} summands but {placed} matched partitions", row.mults.len()));
        }
        rep.push(outcome("path-count-identification", Params::n(n).k(row.k as u32), bad));
    }
    Ok(rep)
}

/// Structural facts about the first rows of Γ_n.
pub fn check_observations(n: u32) -> Result<Report> {
    require_n(n)?;
    let top = 2 * n as usize - 2;
    let rows = bratteli_rows(n, 0, 2 * n as usize)?;
    let gamma = gamma_rows(n as usize - 1)?;
    let mut rep = Report::new();

    let mut bad = vec![];
    for (row, grow) in rows.iter().zip(&gamma) {
        if row.mults.len() != grow.len() {
            bad.push(format!("row {} sizes differ", row.k));
        }
        for (b, c) in grow {
            let l = ModuleLabel::simple(n, b.b1 - b.b2 + 1, b.b2 as i64)?;
            if row.mult(&l) != *c {
                bad.push(format!("row {} at {b}", row.k));
            }
        }
    }
    rep.push(outcome("rows-below-n-match-partitions", Params::n(n), bad));

    let mut bad = vec![];
    for row in &rows[..top] {
        for l in row.mults.keys().filter(|l| l.kind == Kind::Proj) {
            if row.mult(&ModuleLabel { kind: Kind::Simple, ..*l }) == 0 {
                bad.push(format!("row {}: {l} without its simple module", row.k));
            }
        }
    }
    rep.push(outcome("projective-implies-simple", Params::n(n), bad));

    let mut bad = vec![];
    for row in &rows[..2 * n as usize - 1] {
        let c = CentralizerTerms::of(row).cross_term();
        if c != 0 {
            bad.push(format!("row {} cross term {c}", row.k));
        }
    }
    if CentralizerTerms::of(&rows[2 * n as usize - 1]).cross_term() == 0 {
        bad.push(format!("row {} cross term vanishes", 2 * n));
    }
    rep.push(outcome("cross-term-onset", Params::n(n), bad));

    let mut bad = vec![];
    for row in &rows[..top] {
        let d = centralizer_dim(row);
        if d != catalan(row.k) as u128 {
            bad.push(format!("row {}: {d} vs {}", row.k, catalan(row.k)));
        }
    }
    rep.push(outcome("centralizer-dim-equals-catalan", Params::n(n), bad));

    let mut bad = vec![];
    for row in &rows {
        if row.total_dim() != 1u128 << row.k {
            bad.push(format!("row {}", row.k));
        }
    }
    rep.push(outcome("dimension-conservation", Params::n(n), bad));
    Ok(rep)
}

/// One row of the Catalan-versus-centralizer comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: usize,
    pub catalan: u128,
    pub terms: CentralizerTerms,
    pub proj_squares: u128,
    pub simple_squares: u128,
    pub cross_term: u128,
    /// Σp² + Σ(s+p)² + 2Σpp′ with the middle sum over labels whose simple module occurs.
    pub dim_end: u128,
    /// The same with projectives lacking their simple module contributing (0+p)² as well.
    pub dim_end_all_indices: u128,
}

pub fn table_one(n: u32, kmax: usize) -> Result<Vec<TableRow>> {
    Ok(bratteli_rows(n, 0, kmax)?
        .iter()
        .map(|row| {
            let t = CentralizerTerms::of(row);
            TableRow {
                k: row.k,
                catalan: catalan(row.k) as u128,
                proj_squares: t.proj_squares(),
                simple_squares: t.simple_squares(),
                cross_term: t.cross_term(),
                dim_end: t.dim_simple_indexed(),
                dim_end_all_indices: t.dim(),
                terms: t,
            }
        })
        .collect())
}

fn squares_expr(xs: &[u128]) -> String {
    if xs.is_empty() {
        return "0".into();
    }
    xs.iter()
        .map(|x| if *x >= 10 { format!("({x})^2") } else { format!("{x}^2") })
        .collect::<Vec<_>>()
        .join("+")
}

fn cross_expr(xs: &[(u128, u128)]) -> String {
    if xs.is_empty() {
        return "0".into();
    }
    xs.iter().map(|(a, b)| format!("2*{a}*{b}")).collect::<Vec<_>>().join("+")
}

/// Column-aligned text table: k, C_k, Σp², Σ(s+p)², 2Σpp′, dim End.
pub fn table_ascii(rows: &[TableRow]) -> String {
    let header = ["k", "C_k", "sum p^2", "sum (s+p)^2", "2 sum p p'", "dim End"].map(String::from);
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.k.to_string(),
                r.catalan.to_string(),
                squares_expr(&r.terms.proj),
                squares_expr(&r.terms.simple_plus_proj),
                cross_expr(&r.terms.cross),
                r.dim_end.to_string(),
            ]
        })
        .collect();
    let mut width = header.clone().map(|h| h.len());
    for row in &body {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String; 6]| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("| {} |\n", parts.join(" | "))
    };
    let rule = format!("|{}|\n", width.iter().map(|w| "-".repeat(w + 2)).collect::<Vec<_>>().join("|"));
    let mut out = line(&header);
    out.push_str(&rule);
    for row in &body {
        out.push_str(&line(row));
    }
    out
}

/// Notes for rows where a projective without its simple module shifts the full-index sum.
pub fn table_footnote(rows: &[TableRow]) -> String {
    rows.iter()
        .filter(|r| r.dim_end != r.dim_end_all_indices)
        .map(|r| {
            format!(
                "note: k={}: summing (s+p)^2 over every index, including projectives whose simple module is absent, gives {}\n",
                r.k, r.dim_end_all_indices
            )
        })
        .collect()
}

/// Rows with multiplicity subscripts, left to right, e.g. "P(3,7)_2 (5,6)_20 ...".
pub fn bratteli_ascii(rows: &[BrattRow]) -> String {
    let width = rows.last().map(|r| r.k.to_string().len()).unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .ordered()
            .iter()
            .map(|l| format!("{}_{}", row.display_label(l), row.mult(l)))
            .collect();
        out.push_str(&format!("Row {:>width$}: {}\n", row.k, cells.join(" ")));
    }
    out
}

#[derive(Serialize)]
struct JsonEntry {
    kind: Kind,
    ell: u32,
    r: u32,
    display_r: i64,
    mult: u128,
}

#[derive(Serialize)]
struct JsonRow {
    k: usize,
    entries: Vec<JsonEntry>,
}

pub fn bratteli_json(rows: &[BrattRow]) -> serde_json::Value {
    let rows: Vec<JsonRow> = rows
        .iter()
        .map(|row| JsonRow {
            k: row.k,
            entries: row
                .ordered()
                .iter()
                .map(|l| JsonEntry {
                    kind: l.kind,
                    ell: l.ell,
                    r: l.r,
                    display_r: row.display_r(l),
                    mult: row.mult(l),
                })
                .collect(),
        })
        .collect();
    serde_json::to_value(rows).expect("serializable")
}
