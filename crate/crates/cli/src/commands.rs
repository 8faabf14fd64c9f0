//! One function per subcommand; each builds the jobs and returns the merged report.

use dn_core::centralizer_oracle::{commutant_dimension, cross_validate};
use dn_core::dn_algebra::{check_algebra, DnAlgebra, DnElement};
use dn_core::fusion::{bratteli_rows, centralizer_dim};
use dn_core::report::{Params, Record, Report, Status};
use dn_core::representations::simple_module;
use dn_core::rmatrix::{
    check_conjecture_consistency, check_cubic_relation_l3, check_quadratic_relation,
    check_quasitriangular_on_modules, check_r_counit_legs, check_ribbon_coproduct_on_modules,
    check_ribbon_scalar, check_ribbon_square_scalars, check_two_eigenvalues, test_conjecture, BraidOps,
    SquareRoot,
};
use dn_core::temperley_lieb::{catalan, check_hecke_relation, check_tl_relations, image_rank};
use dn_core::{Error, QContext, Result};

use crate::args::RSel;
use crate::pool::{self, Job};

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub tensor_dim: usize,
    pub oracle_k: usize,
    pub workers: usize,
}

fn skipped(check: &str, params: Params, why: &str) -> Report {
    let mut rep = Report::new();
    rep.push(Record::new(check, params, Status::Skipped).with_detail(why));
    rep
}

fn require_dim(dim: usize, caps: &Caps) -> Result<()> {
    if dim > caps.tensor_dim {
        return Err(Error::ResourceLimit(format!(
            "tensor dimension {dim} exceeds the cap {}",
            caps.tensor_dim
        )));
    }
    Ok(())
}

pub fn verify_algebra(ns: &[u32], caps: &Caps) -> Result<Report> {
    let jobs: Vec<Job> = ns
        .iter()
        .map(|&n| -> Job { Box::new(move || check_algebra(&DnAlgebra::new(n)?)) })
        .collect();
    pool::run(jobs, caps.workers)
}

struct RibbonData {
    alg: DnAlgebra,
    u: DnElement,
    upsilon: DnElement,
}

/// Scalar action on every V(ℓ,r), R counit legs, and Δ(υ) on pairs with both ℓ ≤ `pair_l_max`.
pub fn verify_ribbon(ns: &[u32], pair_l_max: u32, caps: &Caps) -> Result<Report> {
    require_dim((pair_l_max * pair_l_max) as usize, caps)?;
    let mut rep = Report::new();
    let mut data = vec![];
    for &n in ns {
        if n % 2 == 0 {
            rep.extend(skipped("ribbon-scalar", Params::n(n), "n even"));
            continue;
        }
        let alg = DnAlgebra::new(n)?;
        let u = alg.u_element()?;
        let upsilon = alg.ribbon_element()?;
        data.push(RibbonData { alg, u, upsilon });
    }
    let mut jobs: Vec<Job> = vec![];
    for d in &data {
        let n = d.alg.n();
        for ell in 1..=n {
            for r in 0..n as i64 {
                jobs.push(Box::new(move || {
                    let ctx = d.alg.ctx();
                    let mut rep = check_ribbon_scalar(ctx, &d.u, &d.upsilon, ell, r)?;
                    let v = simple_module(ctx, ell, r)?;
                    rep.extend(check_r_counit_legs(&d.alg, &v)?);
                    if ell <= pair_l_max {
                        for ell2 in 1..=pair_l_max.min(n) {
                            for r2 in 0..n as i64 {
                                let w = simple_module(ctx, ell2, r2)?;
                                rep.extend(check_ribbon_coproduct_on_modules(&d.alg, &d.upsilon, &v, &w)?);
                            }
                        }
                    }
                    Ok(rep)
                }));
            }
        }
    }
    rep.extend(pool::run(jobs, caps.workers)?);
    rep.sort();
    Ok(rep)
}

/// End_{D_n}(V(2,r)^{⊗k}) dimension from the fusion rules (n ≥ 3) or the oracle (n = 2, small k).
fn centralizer_dimension(ctx: &QContext, k: usize, r: i64, caps: &Caps) -> Result<Option<(u128, &'static str)>> {
    let n = ctx.n();
    if n >= 3 {
        let rows = bratteli_rows(n, r, k)?;
        return Ok(Some((centralizer_dim(&rows[k - 1]), "fusion")));
    }
    if k <= caps.oracle_k {
        return Ok(Some((commutant_dimension(ctx, r, k, caps.oracle_k)? as u128, "oracle")));
    }
    Ok(None)
}

fn verify_tl_one(n: u32, k: usize, r: i64, caps: &Caps) -> Result<Report> {
    let ctx = QContext::new(n)?;
    let v = simple_module(&ctx, 2, r)?;
    let ops = BraidOps::new(&ctx, &v, k)?;
    let mut rep = check_quasitriangular_on_modules(&ops);
    rep.extend(check_quadratic_relation(&ctx, r));
    rep.extend(check_tl_relations(&ctx, k, r)?);
    rep.extend(check_hecke_relation(&ctx, k, r)?);

    let ir = image_rank(&ctx, k, r)?;
    let params = Params::n(n).ell(2).r(v.r()).k(k as u32);
    let ck = catalan(k);
    rep.push(
        Record::new("tl-faithful", params.clone(), Status::from_bool(ir.faithful()))
            .with_detail(format!("rank {}, C_k {ck}, {:?}", ir.rank, ir.method)),
    );
    match centralizer_dimension(&ctx, k, r, caps)? {
        None => rep.extend(skipped(
            "tl-centralizer",
            params,
            &format!("no fusion rules at n = 2 and k > oracle cap {}", caps.oracle_k),
        )),
        Some((dim, source)) => {
            let rank = ir.rank as u128;
            let rec = if k <= 2 * n as usize - 2 {
                Record::new("tl-centralizer-isomorphism", params, Status::from_bool(rank == dim))
                    .with_detail(format!("rank {rank}, dim End {dim} ({source})"))
            } else {
                Record::new("tl-centralizer-proper", params, Status::from_bool(rank < dim))
                    .with_detail(format!("rank {rank} < dim End {dim} ({source}), not an isomorphism"))
            };
            rep.push(rec);
        }
    }
    Ok(rep)
}

pub fn verify_tl(ns: &[u32], k: usize, rs: &RSel, caps: &Caps) -> Result<Report> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    require_dim(1usize.checked_shl(k as u32).unwrap_or(usize::MAX), caps)?;
    let mut jobs: Vec<Job> = vec![];
    for &n in ns {
        for r in rs.resolve(n) {
            jobs.push(Box::new(move || verify_tl_one(n, k, r, caps)));
        }
    }
    pool::run(jobs, caps.workers)
}

fn eigen_one(n: u32, ell: u32, r: i64) -> Result<Report> {
    let ctx = QContext::new(n)?;
    let v = simple_module(&ctx, ell, r)?;
    let params = Params::n(n).ell(ell).r(v.r());
    let admissible = 2 * ell <= n + 1;
    let mut rep = Report::new();
    if ell == 2 {
        rep.extend(check_quadratic_relation(&ctx, r));
    }
    if n % 2 == 1 && admissible {
        rep.extend(check_ribbon_square_scalars(&ctx, ell, r)?);
    } else {
        let why = if n.is_multiple_of(2) { "n even" } else { "2l > n+1" };
        rep.extend(skipped("ribbon-square-annihilates", params.clone(), why));
    }
    if ell == 3 {
        if n >= 5 {
            rep.extend(check_cubic_relation_l3(&ctx, r)?);
        } else {
            rep.extend(skipped("cubic-relation-l3", params.clone(), "n < 5"));
        }
    }
    if admissible {
        rep.extend(check_two_eigenvalues(&ctx, ell, r)?);
    } else {
        rep.extend(skipped("top-eigenvalue", params, "2l > n+1"));
    }
    Ok(rep)
}

pub fn eigen(n: u32, ell: u32, rs: &RSel, caps: &Caps) -> Result<Report> {
    if ell < 1 || ell > n {
        return Err(Error::InvalidLabel(format!("need 1 <= l <= n, got l={ell}, n={n}")));
    }
    require_dim((ell * ell) as usize, caps)?;
    let jobs: Vec<Job> = rs
        .resolve(n)
        .into_iter()
        .map(|r| -> Job { Box::new(move || eigen_one(n, ell, r)) })
        .collect();
    pool::run(jobs, caps.workers)
}

/// Conjectured annihilators for both square roots of q, and the asserted scalar consistency for ℓ = 2, 3.
pub fn conjecture(ns: &[u32], caps: &Caps) -> Result<Report> {
    let mut jobs: Vec<Job> = vec![];
    for &n in ns {
        for ell in 1..=n.div_ceil(2) {
            for r in 0..n as i64 {
                jobs.push(Box::new(move || {
                    let ctx = QContext::new(n)?;
                    let mut rep = Report::new();
                    for root in [SquareRoot::Zeta, SquareRoot::InGroup] {
                        rep.extend(test_conjecture(&ctx, ell, r, root)?);
                    }
                    if ell == 2 || ell == 3 {
                        rep.extend(check_conjecture_consistency(&ctx, ell, r)?);
                    }
                    Ok(rep)
                }));
            }
        }
    }
    pool::run(jobs, caps.workers)
}

pub fn oracle(ns: &[u32], rs: &RSel, kmax: usize, caps: &Caps) -> Result<Report> {
    if kmax > caps.oracle_k {
        return Err(Error::ResourceLimit(format!(
            "oracle limited to k <= {}, asked for {kmax}",
            caps.oracle_k
        )));
    }
    let mut jobs: Vec<Job> = vec![];
    for &n in ns {
        for r in rs.resolve(n) {
            jobs.push(Box::new(move || {
                let ctx = QContext::new(n)?;
                Ok(cross_validate(&ctx, r, kmax, caps.oracle_k)?.1)
            }));
        }
    }
    pool::run(jobs, caps.workers)
}
