//! Simple modules V(ℓ,r) of D_n and their tensor products.

use crate::cyclotomic::{Cyclotomic, QContext};
use crate::dn_algebra::{DnElement, Generator};
use crate::error::{invalid, Error, Result};
use crate::linalg::{Matrix, SparseMatrix};

pub type RepMatrix = Matrix<Cyclotomic>;
pub type SparseRep = SparseMatrix<Cyclotomic>;

/// Default bound on the dimension of a tensor space.
pub const DEFAULT_TENSOR_DIM_CAP: usize = 1 << 12;

/// V(ℓ,r) with basis v_1, …, v_ℓ (stored at indices 0..ℓ).
#[derive(Clone, Debug)]
pub struct SimpleModule {
    n: u32,
    ell: u32,
    r: u32,
    gens: [SparseRep; 4],
}

/// α_i(ℓ) = (q^i − 1)(1 − q^{i−ℓ})/(q − 1).
pub fn alpha(ctx: &QContext, i: i64, ell: i64) -> Cyclotomic {
    let one = ctx.one();
    let num = (ctx.q_pow(i) - &one) * (&one - ctx.q_pow(i - ell));
    num * (ctx.q() - &one).inv().expect("q ≠ 1")
}

pub fn simple_module(ctx: &QContext, ell: u32, r: i64) -> Result<SimpleModule> {
    let n = ctx.n();
    if ell < 1 || ell > n {
        return Err(invalid(format!("module dimension must lie in 1..={n}, got {ell}")));
    }
    let r = r.rem_euclid(n as i64);
    let dim = ell as usize;
    let (l, ri) = (ell as i64, r);
    let a = SparseMatrix::from_triplets(dim, dim, (0..dim - 1).map(|p| (p + 1, p, ctx.one())));
    let b = SparseMatrix::from_triplets(dim, dim, (0..dim).map(|p| (p, p, ctx.q_pow(ri + p as i64))));
    let c = SparseMatrix::from_triplets(
        dim,
        dim,
        (0..dim).map(|p| (p, p, ctx.q_pow(p as i64 + 1 - ri - l))),
    );
    let d = SparseMatrix::from_triplets(dim, dim, (1..dim).map(|p| (p - 1, p, alpha(ctx, p as i64, l))));
    Ok(SimpleModule {
        n,
        ell,
        r: r as u32,
        gens: [a, b, c, d],
    })
}

impl SimpleModule {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.ell as usize
    }

    pub fn generator_sparse(&self, g: Generator) -> &SparseRep {
        &self.gens[g as usize]
    }

    pub fn generator(&self, g: Generator) -> RepMatrix {
        let ctx_zero = Cyclotomic::zero(4 * self.n);
        self.gens[g as usize].to_dense(&ctx_zero)
    }
}

/// V_1 ⊗ … ⊗ V_k, basis ordered row-major with the leftmost factor slowest.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    factors: Vec<SimpleModule>,
    dim: usize,
}

impl TensorSpace {
    pub fn new(factors: Vec<SimpleModule>) -> Result<Self> {
        Self::with_cap(factors, DEFAULT_TENSOR_DIM_CAP)
    }

    pub fn with_cap(factors: Vec<SimpleModule>, cap: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("a tensor space needs at least one factor"));
        }
        let n = factors[0].n;
        if factors.iter().any(|f| f.n != n) {
            return Err(invalid("tensor factors come from different n"));
        }
        let mut dim: usize = 1;
        for f in &factors {
            dim = dim
                .checked_mul(f.dim())
                .filter(|&d| d <= cap)
                .ok_or_else(|| Error::ResourceLimit(format!("tensor dimension exceeds cap {cap}")))?;
        }
        Ok(TensorSpace { factors, dim })
    }

    /// V^{⊗k}.
    pub fn power(v: &SimpleModule, k: usize) -> Result<Self> {
        Self::new(vec![v.clone(); k])
    }

    pub fn factors(&self) -> &[SimpleModule] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> u32 {
        self.factors[0].n
    }

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(4 * self.n())
    }

    /// Index of the basis vector v_{p_1} ⊗ … ⊗ v_{p_k} (0-based p's).
    pub fn index(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.factors.len());
        multi
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (p, f)| acc * f.dim() + p)
    }

    pub fn multi_index(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in self.factors.iter().enumerate().rev() {
            out[slot] = idx % f.dim();
            idx /= f.dim();
        }
        out
    }

    /// Action of a generator through the iterated coproduct.
    ///
    /// b, c are grouplike; a acts as Σ_i 1⊗…⊗a⊗b⊗…⊗b and d as Σ_i 1⊗…⊗d⊗c⊗…⊗c.
    pub fn generator_action_sparse(&self, g: Generator) -> SparseRep {
        let one = Cyclotomic::one(4 * self.n());
        let kron_all = |mats: &[SparseRep]| {
            let mut it = mats.iter();
            let first = it.next().expect("nonempty").clone();
            it.fold(first, |acc, m| acc.kron(m))
        };
        match g {
            Generator::B | Generator::C => {
                let mats: Vec<SparseRep> = self.factors.iter().map(|f| f.generator_sparse(g).clone()).collect();
                kron_all(&mats)
            }
            Generator::A | Generator::D => {
                let tail = if g == Generator::A { Generator::B } else { Generator::C };
                let k = self.factors.len();
                let mut acc = SparseMatrix::zeros(self.dim, self.dim);
                for pos in 0..k {
                    let mats: Vec<SparseRep> = self
                        .factors
                        .iter()
                        .enumerate()
                        .map(|(s, f)| match s.cmp(&pos) {
                            std::cmp::Ordering::Less => SparseMatrix::identity(f.dim(), &one),
                            std::cmp::Ordering::Equal => f.generator_sparse(g).clone(),
                            std::cmp::Ordering::Greater => f.generator_sparse(tail).clone(),
                        })
                        .collect();
                    acc = acc.add(&kron_all(&mats));
                }
                acc
            }
        }
    }

    pub fn generator_action(&self, g: Generator) -> RepMatrix {
        self.generator_action_sparse(g).to_dense(&self.zero())
    }

    /// Evaluates x by sending each a^i b^j c^k d^l to G_a^i G_b^j G_c^k G_d^l.
    pub fn element_action(&self, x: &DnElement) -> RepMatrix {
        let n = self.n() as usize;
        let gens: Vec<SparseRep> = Generator::ALL.iter().map(|g| self.generator_action_sparse(*g)).collect();
        let one = Cyclotomic::one(4 * self.n());
        let powers: Vec<Vec<SparseRep>> = gens
            .iter()
            .map(|g| {
                let mut out = vec![SparseMatrix::identity(self.dim, &one)];
                for e in 1..n {
                    let next = out[e - 1].mul(g);
                    out.push(next);
                }
                out
            })
            .collect();
        let mut acc = SparseMatrix::zeros(self.dim, self.dim);
        for (m, c) in x.terms() {
            let word = powers[0][m.i as usize]
                .mul(&powers[1][m.j as usize])
                .mul(&powers[2][m.k as usize])
                .mul(&powers[3][m.l as usize]);
            acc = acc.add(&word.scale(c));
        }
        acc.to_dense(&self.zero())
    }
}
