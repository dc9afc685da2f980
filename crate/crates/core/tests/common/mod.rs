//! Test-only oracles, independent of the Pieri/Giambelli and root-expansion
//! code paths they check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::{BigInt, BundleExpr, Element, Grassmannian, Partition};

/// Integer polynomial in `k` variables.
pub type Poly = BTreeMap<Vec<u32>, i128>;

fn add_term(p: &mut Poly, key: Vec<u32>, c: i128) {
    let slot = p.entry(key.clone()).or_insert(0);
    *slot += c;
    if *slot == 0 {
        p.remove(&key);
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let key = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, key, ca * cb);
        }
    }
    out
}

/// `s_λ(x_1..x_k)` as a sum over semistandard tableaux of shape `λ`.
pub fn schur_polynomial(lambda: &[usize], k: usize) -> Poly {
    let mut out = Poly::new();
    if lambda.len() > k {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    fill_tableau(&cells, 0, k, &mut filling, &mut out);
    out
}

fn fill_tableau(
    cells: &[(usize, usize)],
    at: usize,
    k: usize,
    t: &mut Vec<Vec<usize>>,
    out: &mut Poly,
) {
    if at == cells.len() {
        let mut exps = vec![0u32; k];
        for row in t.iter() {
            for &v in row {
                exps[v] += 1;
            }
        }
        add_term(out, exps, 1);
        return;
    }
    let (r, c) = cells[at];
    // rows weakly increase, columns strictly increase
    let low_row = if c > 0 { t[r][c - 1] } else { 0 };
    let low_col = if r > 0 { t[r - 1][c] + 1 } else { 0 };
    for v in low_row.max(low_col)..k {
        t[r][c] = v;
        fill_tableau(cells, at + 1, k, t, out);
    }
}

/// Writes a symmetric polynomial in the Schur basis by peeling off the
/// lex-leading monomial.
pub fn schur_expand(mut p: Poly, k: usize) -> BTreeMap<Vec<usize>, i128> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = p.iter().next_back() {
        let lead = lead.clone();
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "input is not symmetric"
        );
        let shape: Vec<usize> = lead
            .iter()
            .map(|&e| e as usize)
            .filter(|&e| e > 0)
            .collect();
        for (m, d) in schur_polynomial(&shape, k) {
            add_term(&mut p, m, -c * d);
        }
        out.insert(shape, c);
    }
    out
}

/// `σ_λ · σ_μ` on `Gr(k, n)` through Schur polynomials in `k` variables.
pub fn schur_product(ctx: Grassmannian, lambda: &Partition, mu: &Partition) -> Element {
    let k = ctx.k();
    let product = poly_mul(
        &schur_polynomial(lambda.parts(), k),
        &schur_polynomial(mu.parts(), k),
    );
    let terms = schur_expand(product, k)
        .into_iter()
        .filter(|(shape, _)| shape.first().copied().unwrap_or(0) <= ctx.corank())
        .map(|(shape, c)| (Partition::new(shape).unwrap(), BigInt::from(c)));
    Element::from_terms(ctx, terms)
}

/// Random bundle expressions of bounded rank, reproducible from a seed.
pub struct BundleGenerator {
    rng: ChaCha8Rng,
    max_rank: u128,
}

impl BundleGenerator {
    pub fn new(seed: u64, max_rank: u128) -> Self {
        BundleGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_rank,
        }
    }

    fn leaf(&mut self) -> BundleExpr {
        match self.rng.random_range(0..3) {
            0 => BundleExpr::Tautological,
            1 => BundleExpr::Quotient,
            _ => BundleExpr::Line(self.rng.random_range(-2..=2)),
        }
    }

    fn build(&mut self, depth: u32) -> BundleExpr {
        if depth == 0 || self.rng.random_bool(0.3) {
            return self.leaf();
        }
        match self.rng.random_range(0..6) {
            0 => BundleExpr::dual(self.build(depth - 1)),
            1 => BundleExpr::sym(self.rng.random_range(0..=3), self.build(depth - 1)),
            2 => BundleExpr::wedge(self.rng.random_range(0..=3), self.build(depth - 1)),
            3 => BundleExpr::tensor(self.build(depth - 1), self.build(depth - 1)),
            4 => BundleExpr::sum(self.build(depth - 1), self.build(depth - 1)),
            _ => BundleExpr::det(self.build(depth - 1)),
        }
    }

    /// A random expression whose rank on `ctx` is at most the bound.
    pub fn next(&mut self, ctx: Grassmannian) -> BundleExpr {
        loop {
            let e = self.build(3);
            if e.rank(ctx) <= self.max_rank {
                return e;
            }
        }
    }
}

pub fn gr(k: usize, n: usize) -> Grassmannian {
    Grassmannian::new(k, n).unwrap()
}

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// All `(k, n)` with `k(n - k) <= bound`.
pub fn grassmannians_up_to(bound: usize) -> Vec<Grassmannian> {
    let mut out = Vec::new();
    for n in 2..=bound + 1 {
        for k in 1..n {
            if k * (n - k) <= bound {
                out.push(gr(k, n));
            }
        }
    }
    out
}
