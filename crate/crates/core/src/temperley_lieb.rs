//! Diagram calculus for TL_k(ξ) and its action on V(2,r)^{⊗k} through R̂.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, QContext};
use crate::error::{invalid, Result};
use crate::linalg::{Echelon, Reduction, Scalar, SparseMatrix};
use crate::report::{Params, Record, Report, Status};
use crate::representations::{simple_module, SparseRep};
use crate::rmatrix::{lambda, BraidOps};

/// C_k = binom(2k, k)/(k+1).
pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// A planar matching of k top nodes (0..k) and k bottom nodes (k..2k), both numbered left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct TLDiagram {
    k: usize,
    pairing: Vec<usize>,
}

impl TLDiagram {
    pub fn from_pairing(k: usize, pairing: Vec<usize>) -> Result<Self> {
        if pairing.len() != 2 * k {
            return Err(invalid(format!("expected {} nodes, got {}", 2 * k, pairing.len())));
        }
        for (a, &b) in pairing.iter().enumerate() {
            if b >= 2 * k || b == a || pairing[b] != a {
                return Err(invalid(format!("node {a} is not properly paired")));
            }
        }
        let d = TLDiagram { k, pairing };
        if !d.is_planar() {
            return Err(invalid("pairing has crossing strands"));
        }
        Ok(d)
    }

    pub fn identity(k: usize) -> Self {
        let pairing = (0..2 * k).map(|a| if a < k { a + k } else { a - k }).collect();
        TLDiagram { k, pairing }
    }

    /// e_i (1-based): caps joining strands i and i+1 at the top and at the bottom.
    pub fn generator(k: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= k {
            return Err(invalid(format!("generator index {i} outside 1..{}", k.saturating_sub(1))));
        }
        let mut d = Self::identity(k);
        let (a, b) = (i - 1, i);
        d.pairing[a] = b;
        d.pairing[b] = a;
        d.pairing[k + a] = k + b;
        d.pairing[k + b] = k + a;
        Ok(d)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Position of a node when walking the boundary: top left to right, then bottom right to left.
    fn boundary_pos(&self, node: usize) -> usize {
        if node < self.k {
            node
        } else {
            3 * self.k - 1 - node
        }
    }

    pub fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..2 * self.k)
            .filter(|&a| a < self.pairing[a])
            .map(|a| {
                let (x, y) = (self.boundary_pos(a), self.boundary_pos(self.pairing[a]));
                (x.min(y), x.max(y))
            })
            .collect();
        chords
            .iter()
            .all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    pub fn through_strands(&self) -> usize {
        (0..self.k).filter(|&a| self.pairing[a] >= self.k).count()
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.pairing)
    }
}

fn matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![vec![]];
    }
    let mut out = vec![];
    for j in (lo + 1..hi).step_by(2) {
        for inner in matchings(lo + 1, j) {
            for outer in matchings(j + 1, hi) {
                let mut m = vec![(lo, j)];
                m.extend(inner.iter().copied());
                m.extend(outer.iter().copied());
                out.push(m);
            }
        }
    }
    out
}

/// All C_k diagrams, sorted by pairing array.
pub fn enumerate_diagrams(k: usize) -> Vec<TLDiagram> {
    let node = |p: usize| if p < k { p } else { 3 * k - 1 - p };
    let mut out: Vec<TLDiagram> = matchings(0, 2 * k)
        .into_iter()
        .map(|m| {
            let mut pairing = vec![0; 2 * k];
            for (x, y) in m {
                pairing[node(x)] = node(y);
                pairing[node(y)] = node(x);
            }
            TLDiagram { k, pairing }
        })
        .collect();
    out.sort();
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// x stacked over y: x's bottom row is glued to y's top row. Returns the diagram and the closed-loop count.
pub fn compose_diagrams(x: &TLDiagram, y: &TLDiagram) -> (TLDiagram, usize) {
    assert_eq!(x.k, y.k, "diagrams on different strand counts");
    let k = x.k;
    // Nodes 0..2k belong to x, 2k..4k to y; x's bottom k+j is y's top 2k+j.
    let mut parent: Vec<usize> = (0..4 * k).collect();
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for a in 0..2 * k {
        union(&mut parent, a, x.pairing[a]);
        union(&mut parent, 2 * k + a, 2 * k + y.pairing[a]);
    }
    for j in 0..k {
        union(&mut parent, k + j, 2 * k + j);
    }
    let outer: Vec<usize> = (0..k).chain(3 * k..4 * k).collect();
    let result_node = |v: usize| if v < k { v } else { v - 2 * k };
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in &outer {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(result_node(v));
    }
    let mut pairing = vec![0; 2 * k];
    for ends in by_root.values() {
        pairing[ends[0]] = ends[1];
        pairing[ends[1]] = ends[0];
    }
    let mut loops = std::collections::HashSet::new();
    for v in (k..2 * k).chain(2 * k..3 * k) {
        let r = find(&mut parent, v);
        if !by_root.contains_key(&r) {
            loops.insert(r);
        }
    }
    (TLDiagram { k, pairing }, loops.len())
}

fn loop_factor(xi: &Cyclotomic, loops: usize) -> Cyclotomic {
    xi.pow(loops as i64).expect("nonnegative power")
}

/// ξ^c · (x∘y).
pub fn compose(x: &TLDiagram, y: &TLDiagram, xi: &Cyclotomic) -> TLElement {
    let (d, loops) = compose_diagrams(x, y);
    TLElement::term(d, loop_factor(xi, loops))
}

/// Linear combination of diagrams; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TLElement {
    terms: BTreeMap<TLDiagram, Cyclotomic>,
}

impl TLElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(d: TLDiagram, c: Cyclotomic) -> Self {
        let mut out = Self::zero();
        out.add_term(d, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: TLDiagram, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let zero = c.zero_like();
        let slot = self.terms.entry(d.clone()).or_insert(zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self, xi: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (d, loops) = compose_diagrams(x, y);
                out.add_term(d, a * b * loop_factor(xi, loops));
            }
        }
        out
    }
}

/// Each diagram with a word i_1 … i_m such that e_{i_1} ⋯ e_{i_m} equals it with no closed loops.
///
/// Breadth-first from the identity, right-multiplying by generators and keeping only loop-free steps.
pub fn diagram_words(k: usize) -> Vec<(TLDiagram, Vec<usize>)> {
    let gens: Vec<TLDiagram> = (1..k).map(|i| TLDiagram::generator(k, i).expect("in range")).collect();
    let mut seen: HashMap<TLDiagram, usize> = HashMap::new();
    let mut out: Vec<(TLDiagram, Vec<usize>)> = vec![(TLDiagram::identity(k), vec![])];
    seen.insert(out[0].0.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for (g, e) in gens.iter().enumerate() {
            let (d, loops) = compose_diagrams(&out[idx].0, e);
            if loops > 0 || seen.contains_key(&d) {
                continue;
            }
            let mut w = out[idx].1.clone();
            w.push(g + 1);
            seen.insert(d.clone(), out.len());
            queue.push_back(out.len());
            out.push((d, w));
        }
    }
    out
}

/// Images of all diagrams, given the images of e_1, …, e_{k−1}; follows the order of `diagram_words`.
pub fn diagram_images<T: Scalar>(k: usize, gens: &[SparseMatrix<T>], identity: SparseMatrix<T>) -> Vec<(TLDiagram, SparseMatrix<T>)> {
    let words = diagram_words(k);
    let mut index: HashMap<TLDiagram, usize> = HashMap::new();
    let mut out: Vec<(TLDiagram, SparseMatrix<T>)> = Vec::with_capacity(words.len());
    for (d, w) in words {
        let m = match w.split_last() {
            None => identity.clone(),
            Some((&last, prefix)) => {
                let (parent, _) = compose_word(k, prefix);
                out[index[&parent]].1.mul(&gens[last - 1])
            }
        };
        index.insert(d.clone(), out.len());
        out.push((d, m));
    }
    out
}

fn compose_word(k: usize, word: &[usize]) -> (TLDiagram, usize) {
    word.iter().fold((TLDiagram::identity(k), 0), |(d, l), &i| {
        let (e, l2) = compose_diagrams(&d, &TLDiagram::generator(k, i).expect("in range"));
        (e, l + l2)
    })
}

/// π(e_i) = q^{1/2}(λ_r^{−1} R̂_i − I) for i = 1..k−1.
pub fn pi_generators(ctx: &QContext, k: usize, r: i64) -> Result<Vec<SparseRep>> {
    if k < 2 {
        return Ok(vec![]);
    }
    let v = simple_module(ctx, 2, r)?;
    let ops = BraidOps::new(ctx, &v, k)?;
    let lam_inv = lambda(ctx, r).inv()?;
    let id = SparseMatrix::identity(ops.space.dim(), &ctx.one());
    Ok(ops
        .rhat_i
        .iter()
        .map(|ri| ri.scale(&lam_inv).sub(&id).scale(ctx.q_half()))
        .collect())
}

/// π on V(2,r)^{⊗k}, with images of every diagram.
pub struct TLRepresentation {
    pub k: usize,
    pub r: i64,
    pub gens: Vec<SparseRep>,
    images: HashMap<TLDiagram, SparseRep>,
}

impl TLRepresentation {
    pub fn new(ctx: &QContext, k: usize, r: i64) -> Result<Self> {
        let gens = pi_generators(ctx, k, r)?;
        let id = SparseMatrix::identity(1 << k, &ctx.one());
        let images = diagram_images(k, &gens, id).into_iter().collect();
        Ok(TLRepresentation { k, r, gens, images })
    }

    pub fn image(&self, d: &TLDiagram) -> &SparseRep {
        &self.images[d]
    }

    pub fn image_of(&self, x: &TLElement, zero_dim: usize) -> SparseRep {
        x.terms()
            .fold(SparseMatrix::zeros(zero_dim, zero_dim), |acc, (d, c)| acc.add(&self.image(d).scale(c)))
    }
}

fn tl_params(ctx: &QContext, k: usize, r: i64) -> Params {
    Params::n(ctx.n()).ell(2).r(r.rem_euclid(ctx.n() as i64) as u32).k(k as u32)
}

/// R1′–R4′ for the matrices π(e_i).
pub fn check_tl_relations(ctx: &QContext, k: usize, r: i64) -> Result<Report> {
    let t = pi_generators(ctx, k, r)?;
    let params = tl_params(ctx, k, r);
    let xi = ctx.xi();
    let mut bad: [Vec<String>; 4] = Default::default();
    for i in 0..t.len() {
        for j in i + 2..t.len() {
            if t[i].mul(&t[j]) != t[j].mul(&t[i]) {
                bad[0].push(format!("({},{})", i + 1, j + 1));
            }
        }
        if i + 1 < t.len() {
            let (a, b) = (&t[i], &t[i + 1]);
            let aba = a.mul(b).mul(a);
            let bab = b.mul(a).mul(b);
            if aba.sub(a) != bab.sub(b) {
                bad[1].push(format!("i={}", i + 1));
            }
            if aba != *a || bab != *b {
                bad[3].push(format!("i={}", i + 1));
            }
        }
        if t[i].mul(&t[i]) != t[i].scale(xi) {
            bad[2].push(format!("i={}", i + 1));
        }
    }
    let mut rep = Report::new();
    for (name, b) in ["tl-r1-far-commutation", "tl-r2-braid-like", "tl-r3-quadratic", "tl-r4-quotient"]
        .iter()
        .zip(bad)
    {
        let rec = if b.is_empty() {
            Record::new(*name, params.clone(), Status::Pass)
        } else {
            Record::new(*name, params.clone(), Status::Fail).with_detail(b.join(", "))
        };
        rep.push(rec);
    }
    Ok(rep)
}

/// (λ_r^{−1}R̂_i − I)(λ_r^{−1}R̂_i + q^{−1}I) = 0 for every i.
pub fn check_hecke_relation(ctx: &QContext, k: usize, r: i64) -> Result<Report> {
    let v = simple_module(ctx, 2, r)?;
    let ops = BraidOps::new(ctx, &v, k)?;
    let lam_inv = lambda(ctx, r).inv()?;
    let id = SparseMatrix::identity(ops.space.dim(), &ctx.one());
    let q_inv = id.scale(&ctx.q_pow(-1));
    let bad: Vec<String> = ops
        .rhat_i
        .iter()
        .enumerate()
        .filter(|(_, ri)| {
            let s = ri.scale(&lam_inv);
            !s.sub(&id).mul(&s.add(&q_inv)).is_zero()
        })
        .map(|(i, _)| format!("i={}", i + 1))
        .collect();
    let mut rep = Report::new();
    let rec = Record::new("hecke-relation", tl_params(ctx, k, r), Status::from_bool(bad.is_empty()));
    rep.push(if bad.is_empty() { rec } else { rec.with_detail(bad.join(", ")) });
    Ok(rep)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    /// Full rank reached modulo a prime p ≡ 1 mod 4n, which bounds the exact rank from below.
    ModularCertificate,
    Exact,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ImageRank {
    pub n: u32,
    pub r: u32,
    pub k: usize,
    pub rank: usize,
    pub catalan: u64,
    pub method: RankMethod,
}

impl ImageRank {
    pub fn faithful(&self) -> bool {
        self.rank as u64 == self.catalan
    }
}

/// Rank of the span of {π(D)} inside End(V^{⊗k}).
///
/// Reduces π(e_i) modulo a prime splitting Φ_{4n} first; if that already gives C_k the exact rank
/// is C_k as well. Otherwise the elimination is repeated over Q(ζ).
pub fn image_rank(ctx: &QContext, k: usize, r: i64) -> Result<ImageRank> {
    let n = ctx.n();
    let base = ImageRank {
        n,
        r: r.rem_euclid(n as i64) as u32,
        k,
        rank: 1,
        catalan: catalan(k),
        method: RankMethod::Exact,
    };
    if k < 2 {
        return Ok(base);
    }
    let gens = pi_generators(ctx, k, r)?;
    let red = Reduction::standard(ctx.conductor());
    let modular: Option<Vec<SparseMatrix<_>>> = gens
        .iter()
        .map(|g| {
            let entries: Option<Vec<_>> = g.entries().map(|(i, j, c)| red.reduce(c).map(|v| (i, j, v))).collect();
            entries.map(|e| SparseMatrix::from_triplets(g.rows(), g.cols(), e))
        })
        .collect();
    if let Some(mg) = modular {
        let one = red.reduce(&ctx.one()).expect("1 reduces");
        let rank = flattened_rank(k, &mg, SparseMatrix::identity(1 << k, &one));
        if rank as u64 == base.catalan {
            return Ok(ImageRank {
                rank,
                method: RankMethod::ModularCertificate,
                ..base
            });
        }
    }
    let rank = flattened_rank(k, &gens, SparseMatrix::identity(1 << k, &ctx.one()));
    Ok(ImageRank { rank, ..base })
}

fn flattened_rank<T: Scalar>(k: usize, gens: &[SparseMatrix<T>], id: SparseMatrix<T>) -> usize {
    let mut ech = Echelon::new();
    for (_, m) in diagram_images(k, gens, id) {
        ech.insert(&m.flatten());
    }
    ech.rank()
}

/// Compares π across r: generator matrices and image ranks. Findings only, never asserted.
pub fn r_independence(ctx: &QContext, k: usize) -> Result<Report> {
    let n = ctx.n() as i64;
    let base = pi_generators(ctx, k, 0)?;
    let base_rank = image_rank(ctx, k, 0)?.rank;
    let mut rep = Report::new();
    for r in 1..n {
        let t = pi_generators(ctx, k, r)?;
        let same = t == base;
        rep.push(
            Record::new("tl-r-independence-matrices", tl_params(ctx, k, r), Status::conjectural(same))
                .with_detail("pi(e_i) compared with r=0"),
        );
        let rank = image_rank(ctx, k, r)?.rank;
        rep.push(
            Record::new("tl-r-independence-rank", tl_params(ctx, k, r), Status::conjectural(rank == base_rank))
                .with_detail(format!("rank {rank}, r=0 rank {base_rank}")),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let expect = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for (k, c) in expect.iter().enumerate() {
            assert_eq!(catalan(k), *c);
            if k <= 8 {
                assert_eq!(enumerate_diagrams(k).len() as u64, *c);
            }
        }
    }

    #[test]
    fn generator_relations_on_diagrams() {
        let xi = QContext::new(5).unwrap().xi().clone();
        for k in 2..=8 {
            let id = TLDiagram::identity(k);
            assert_eq!(compose_diagrams(&id, &id), (id.clone(), 0));
            for i in 1..k {
                let e = TLDiagram::generator(k, i).unwrap();
                assert_eq!(compose(&e, &e, &xi), TLElement::term(e.clone(), xi.clone()));
                if i + 1 < k {
                    let f = TLDiagram::generator(k, i + 1).unwrap();
                    let (efe, l1) = compose_diagrams(&compose_diagrams(&e, &f).0, &e);
                    let (fef, l2) = compose_diagrams(&compose_diagrams(&f, &e).0, &f);
                    assert_eq!((efe, l1), (e.clone(), 0));
                    assert_eq!((fef, l2), (f.clone(), 0));
                }
                for j in i + 2..k {
                    let f = TLDiagram::generator(k, j).unwrap();
                    assert_eq!(compose_diagrams(&e, &f), compose_diagrams(&f, &e));
                }
            }
        }
    }

    #[test]
    fn invalid_pairings() {
        assert!(TLDiagram::from_pairing(2, vec![2, 3, 0, 1]).is_ok());
        // top 0 to bottom 1 crosses top 1 to bottom 0
        assert!(TLDiagram::from_pairing(2, vec![3, 2, 1, 0]).is_err());
        assert!(TLDiagram::from_pairing(2, vec![1, 0, 2, 3]).is_err());
        assert!(TLDiagram::generator(3, 3).is_err());
    }

    #[test]
    fn words_reach_every_diagram() {
        for k in 0..=7 {
            let words = diagram_words(k);
            assert_eq!(words.len() as u64, catalan(k));
            for (d, w) in &words {
                assert_eq!(compose_word(k, w), (d.clone(), 0));
            }
        }
    }

    #[test]
    fn first_generator_kills_pure_tensors() {
        let ctx = QContext::new(5).unwrap();
        let t = pi_generators(&ctx, 2, 0).unwrap();
        for col in [0, 3] {
            assert!((0..4).all(|row| t[0].get(row, col).is_none()));
        }
    }

    #[test]
    fn relations_hold_small() {
        for (n, k, r) in [(2u32, 3usize, 0i64), (3, 4, 1), (5, 3, 0), (4, 4, 3)] {
            let ctx = QContext::new(n).unwrap();
            let rep = check_tl_relations(&ctx, k, r).unwrap();
            assert!(rep.all_pass(true), "{}", rep.to_ascii());
            assert!(check_hecke_relation(&ctx, k, r).unwrap().all_pass(true));
        }
    }

    #[test]
    fn homomorphism_on_all_pairs_k3() {
        let ctx = QContext::new(3).unwrap();
        let rep = TLRepresentation::new(&ctx, 3, 2).unwrap();
        let ds = enumerate_diagrams(3);
        for x in &ds {
            for y in &ds {
                let prod = compose(x, y, ctx.xi());
                assert_eq!(rep.image_of(&prod, 8), rep.image(x).mul(rep.image(y)));
            }
        }
    }

    #[test]
    fn small_ranks() {
        let ctx = QContext::new(5).unwrap();
        for k in 1..=5 {
            let ir = image_rank(&ctx, k, 0).unwrap();
            assert!(ir.faithful(), "k={k}: {ir:?}");
        }
    }

    #[test]
    fn modular_certificate_agrees_with_exact() {
        let ctx = QContext::new(3).unwrap();
        let gens = pi_generators(&ctx, 4, 1).unwrap();
        let exact = flattened_rank(4, &gens, SparseMatrix::identity(16, &ctx.one()));
        let ir = image_rank(&ctx, 4, 1).unwrap();
        assert_eq!(ir.rank, exact);
        assert_eq!(ir.method, RankMethod::ModularCertificate);
    }
}
