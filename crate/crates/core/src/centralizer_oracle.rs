//! Brute-force dim End_{D_n}(V(2,r)^{⊗k}) by solving XG = GX exactly.

use std::collections::HashMap;

use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, QContext};
use crate::dn_algebra::Generator;
use crate::error::{Error, Result};
use crate::fusion::{bratteli_rows, centralizer_dim};
use crate::linalg::Echelon;
use crate::report::{Params, Record, Report, Status};
use crate::representations::{simple_module, SparseRep, TensorSpace};
use crate::temperley_lieb::{catalan, image_rank};

pub const DEFAULT_ORACLE_K_CAP: usize = 5;

/// The linear system {X : XG = GX for G = G_a, G_b, G_c, G_d} on V^{⊗k}.
///
/// Diagonal generators are imposed by restricting X to the blocks where their eigenvalues agree;
/// the remaining generators contribute one equation per matrix entry.
pub struct CommutantProblem {
    dim: usize,
    gens: Vec<SparseRep>,
    /// Unknown index for each allowed (i, j).
    unknowns: HashMap<(usize, usize), usize>,
    echelon: Echelon<Cyclotomic>,
}

fn is_diagonal(m: &SparseRep) -> bool {
    m.entries().all(|(i, j, _)| i == j)
}

impl CommutantProblem {
    pub fn new(space: &TensorSpace) -> Self {
        let dim = space.dim();
        let zero = Cyclotomic::zero(4 * space.n());
        let gens: Vec<SparseRep> = Generator::ALL.iter().map(|g| space.generator_action_sparse(*g)).collect();
        let (diag, rest): (Vec<&SparseRep>, Vec<&SparseRep>) = gens.iter().partition(|g| is_diagonal(g));

        // Group basis vectors by their joint eigenvalues under the diagonal generators.
        let mut classes: HashMap<Vec<Cyclotomic>, Vec<usize>> = HashMap::new();
        for i in 0..dim {
            let key: Vec<Cyclotomic> = diag.iter().map(|g| g.get(i, i).cloned().unwrap_or_else(|| zero.clone())).collect();
            classes.entry(key).or_default().push(i);
        }
        let mut blocks: Vec<Vec<usize>> = classes.into_values().collect();
        blocks.sort();
        let mut unknowns = HashMap::new();
        for b in &blocks {
            for &i in b {
                for &j in b {
                    let next = unknowns.len();
                    unknowns.insert((i, j), next);
                }
            }
        }

        let mut echelon = Echelon::new();
        for g in rest {
            let cols = transpose_rows(g, dim);
            for (i, j) in all_pairs(dim) {
                // (XG − GX)_{ij} = Σ_m X_{im} G_{mj} − Σ_m G_{im} X_{mj}
                let mut eq: HashMap<usize, Cyclotomic> = HashMap::new();
                for (m, c) in &cols[j] {
                    if let Some(&u) = unknowns.get(&(i, *m)) {
                        *eq.entry(u).or_insert_with(|| zero.clone()) += c;
                    }
                }
                for (m, c) in g.row(i) {
                    if let Some(&u) = unknowns.get(&(*m, j)) {
                        *eq.entry(u).or_insert_with(|| zero.clone()) -= c;
                    }
                }
                let mut row: Vec<(usize, Cyclotomic)> = eq.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    row.sort_by_key(|(u, _)| *u);
                    echelon.insert(&row);
                }
            }
        }
        CommutantProblem {
            dim,
            gens,
            unknowns,
            echelon,
        }
    }

    pub fn unknown_count(&self) -> usize {
        self.unknowns.len()
    }

    pub fn dimension(&self) -> usize {
        self.unknowns.len() - self.echelon.rank()
    }

    /// True when M commutes with all four generators.
    pub fn contains(&self, m: &SparseRep) -> bool {
        m.rows() == self.dim && self.gens.iter().all(|g| m.mul(g) == g.mul(m))
    }
}

fn all_pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |i| (0..dim).map(move |j| (i, j)))
}

fn transpose_rows(m: &SparseRep, dim: usize) -> Vec<Vec<(usize, Cyclotomic)>> {
    let mut cols = vec![vec![]; dim];
    for (i, j, c) in m.entries() {
        cols[j].push((i, c.clone()));
    }
    cols
}

/// Exact dimension of End_{D_n}(V(2,r)^{⊗k}) for k ≤ `k_cap`.
pub fn commutant_dimension(ctx: &QContext, r: i64, k: usize, k_cap: usize) -> Result<usize> {
    if k == 0 {
        return Ok(1);
    }
    if k > k_cap {
        return Err(Error::ResourceLimit(format!("oracle limited to k <= {k_cap}, asked for {k}")));
    }
    let v = simple_module(ctx, 2, r)?;
    let space = TensorSpace::power(&v, k)?;
    Ok(CommutantProblem::new(&space).dimension())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concordance {
    pub n: u32,
    pub r: u32,
    pub k: usize,
    pub oracle_dim: usize,
    pub fusion_dim: Option<u128>,
    pub tl_rank: usize,
    pub catalan: u64,
}

/// Oracle against the fusion formula (n ≥ 3) and against the TL image rank, for k = 1..=kmax.
pub fn cross_validate(ctx: &QContext, r: i64, kmax: usize, k_cap: usize) -> Result<(Vec<Concordance>, Report)> {
    let n = ctx.n();
    let rr = r.rem_euclid(n as i64) as u32;
    let fusion = if n >= 3 { Some(bratteli_rows(n, r, kmax)?) } else { None };
    let mut rows = vec![];
    let mut rep = Report::new();
    for k in 1..=kmax {
        let oracle_dim = commutant_dimension(ctx, r, k, k_cap)?;
        let tl_rank = image_rank(ctx, k, r)?.rank;
        let fusion_dim = fusion.as_ref().map(|f| centralizer_dim(&f[k - 1]));
        let c = Concordance {
            n,
            r: rr,
            k,
            oracle_dim,
            fusion_dim,
            tl_rank,
            catalan: catalan(k),
        };
        let params = Params::n(n).ell(2).r(rr).k(k as u32);
        if let Some(fd) = fusion_dim {
            rep.push(
                Record::new("oracle-vs-fusion", params.clone(), Status::from_bool(fd == oracle_dim as u128))
                    .with_detail(format!("oracle {oracle_dim}, fusion {fd}")),
            );
        }
        if k <= 2 * n as usize - 2 {
            rep.push(
                Record::new("oracle-vs-tl-rank", params.clone(), Status::from_bool(tl_rank == oracle_dim))
                    .with_detail(format!("oracle {oracle_dim}, rank {tl_rank}")),
            );
        } else if fusion_dim.is_some_and(|fd| fd > c.catalan as u128) {
            rep.push(
                Record::new("oracle-exceeds-catalan", params.clone(), Status::from_bool(oracle_dim as u64 > c.catalan))
                    .with_detail(format!("oracle {oracle_dim}, C_k {}", c.catalan)),
            );
        }
        rep.push(Record::new(
            "oracle-at-least-tl-rank",
            params,
            Status::from_bool(oracle_dim >= tl_rank),
        ));
        rows.push(c);
    }
    Ok((rows, rep))
}
