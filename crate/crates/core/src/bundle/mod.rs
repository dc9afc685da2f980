//! Vector bundles built from the tautological bundles of a Grassmannian and
//! their characteristic classes.
//!
//! Every bundle is evaluated through its multiset of Chern roots: `U^∨` has
//! roots `x_1..x_k`, `Q` has roots `y_1..y_{n-k}`, and the constructors act
//! on root multisets (negation, sums over multisets or subsets, pairwise
//! sums, concatenation). Symmetric functions of the roots are then rewritten
//! through `c(U^∨) = Σ σ_{1^i}` and `c(Q) = Σ σ_j`.

mod parse;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ring::{Element, Grassmannian, RationalElement};
use crate::roots::{symmetric_reduce, Alphabets, ElementarySymmetricExpansion, RootPolynomial};

/// Root multisets larger than this are refused rather than expanded.
pub const MAX_ROOTS: u128 = 4096;

/// A bundle expression over `U` and `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    /// The tautological subbundle `U`.
    Tautological,
    /// The tautological quotient bundle `Q`.
    Quotient,
    /// `O(m) = det(U^∨)^{⊗m}`.
    Line(i64),
    Dual(Box<BundleExpr>),
    Sym(u32, Box<BundleExpr>),
    Wedge(u32, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Det(Box<BundleExpr>),
}

impl BundleExpr {
    pub fn dual(e: BundleExpr) -> Self {
        BundleExpr::Dual(Box::new(e))
    }

    pub fn sym(d: u32, e: BundleExpr) -> Self {
        BundleExpr::Sym(d, Box::new(e))
    }

    pub fn wedge(d: u32, e: BundleExpr) -> Self {
        BundleExpr::Wedge(d, Box::new(e))
    }

    pub fn tensor(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn det(e: BundleExpr) -> Self {
        BundleExpr::Det(Box::new(e))
    }

    /// `U^∨ ⊗ Q`, the tangent bundle of the Grassmannian.
    pub fn tangent() -> Self {
        BundleExpr::tensor(
            BundleExpr::dual(BundleExpr::Tautological),
            BundleExpr::Quotient,
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::Parser::new(text).parse_all()
    }

    /// Rank on `ctx`, saturating at `u128::MAX`.
    pub fn rank(&self, ctx: Grassmannian) -> u128 {
        match self {
            BundleExpr::Tautological => ctx.k() as u128,
            BundleExpr::Quotient => ctx.corank() as u128,
            BundleExpr::Line(_) | BundleExpr::Det(_) => 1,
            BundleExpr::Dual(e) => e.rank(ctx),
            BundleExpr::Sym(d, e) => multisets(e.rank(ctx), *d as u128),
            BundleExpr::Wedge(d, e) => binomial(e.rank(ctx), *d as u128),
            BundleExpr::Tensor(a, b) => a.rank(ctx).saturating_mul(b.rank(ctx)),
            BundleExpr::Sum(a, b) => a.rank(ctx).saturating_add(b.rank(ctx)),
        }
    }

    /// The Chern roots as integer linear forms over `x_1..x_k, y_1..y_{n-k}`.
    pub fn roots(&self, ctx: Grassmannian) -> Result<Vec<Vec<i64>>> {
        let rank = self.rank(ctx);
        if rank > MAX_ROOTS {
            return Err(Error::TooManyRoots { rank });
        }
        Ok(self.collect_roots(ctx))
    }

    fn collect_roots(&self, ctx: Grassmannian) -> Vec<Vec<i64>> {
        let vars = ctx.n();
        let unit = |v: usize, sign: i64| {
            let mut r = vec![0; vars];
            r[v] = sign;
            r
        };
        match self {
            BundleExpr::Tautological => (0..ctx.k()).map(|i| unit(i, -1)).collect(),
            BundleExpr::Quotient => (ctx.k()..vars).map(|j| unit(j, 1)).collect(),
            BundleExpr::Line(m) => {
                let mut r = vec![0; vars];
                r[..ctx.k()].fill(*m);
                vec![r]
            }
            BundleExpr::Dual(e) => e
                .collect_roots(ctx)
                .into_iter()
                .map(|r| r.into_iter().map(|c| -c).collect())
                .collect(),
            BundleExpr::Det(e) => vec![e
                .collect_roots(ctx)
                .into_iter()
                .fold(vec![0; vars], |acc, r| add_forms(&acc, &r))],
            BundleExpr::Sym(d, e) => {
                let inner = e.collect_roots(ctx);
                let mut out = Vec::new();
                choose(&inner, *d as usize, 0, true, vec![0; vars], &mut out);
                out
            }
            BundleExpr::Wedge(d, e) => {
                let inner = e.collect_roots(ctx);
                let mut out = Vec::new();
                choose(&inner, *d as usize, 0, false, vec![0; vars], &mut out);
                out
            }
            BundleExpr::Tensor(a, b) => {
                let right = b.collect_roots(ctx);
                a.collect_roots(ctx)
                    .iter()
                    .flat_map(|ra| right.iter().map(move |rb| add_forms(ra, rb)))
                    .collect()
            }
            BundleExpr::Sum(a, b) => {
                let mut out = a.collect_roots(ctx);
                out.extend(b.collect_roots(ctx));
                out
            }
        }
    }
}

fn add_forms(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Sums of `d`-element sub-multisets (`repeat`) or subsets of `roots`.
fn choose(
    roots: &[Vec<i64>],
    d: usize,
    start: usize,
    repeat: bool,
    acc: Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if d == 0 {
        out.push(acc);
        return;
    }
    for i in start..roots.len() {
        let next = if repeat { i } else { i + 1 };
        choose(roots, d - 1, next, repeat, add_forms(&acc, &roots[i]), out);
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c = C(n - k + i, i) -> C(n - k + i + 1, i + 1), exact at every step
        c = match c.checked_mul(n - k + i + 1) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    c
}

fn multisets(n: u128, d: u128) -> u128 {
    if d == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial(n.saturating_add(d - 1), d)
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Tautological => write!(f, "U"),
            BundleExpr::Quotient => write!(f, "Q"),
            BundleExpr::Line(m) => write!(f, "o({m})"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Sym(d, e) => write!(f, "sym({d},{e})"),
            BundleExpr::Wedge(d, e) => write!(f, "wedge({d},{e})"),
            BundleExpr::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            BundleExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            BundleExpr::Det(e) => write!(f, "det({e})"),
        }
    }
}

impl FromStr for BundleExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BundleExpr::parse(s)
    }
}

/// Chern classes `c_0..c_D` of a bundle, truncated at some degree `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    rank: u128,
    classes: Vec<Element>,
}

impl ChernData {
    pub fn rank(&self) -> u128 {
        self.rank
    }

    /// Highest degree carried.
    pub fn max_degree(&self) -> usize {
        self.classes.len() - 1
    }

    /// `c_i`; panics if `i` exceeds the truncation degree.
    pub fn class(&self, i: usize) -> &Element {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Element] {
        &self.classes
    }

    /// `c = c_0 + c_1 + ...` as a single element.
    pub fn total(&self) -> Element {
        let mut out = Element::zero(self.classes[0].context());
        for c in &self.classes {
            out += c;
        }
        out
    }
}

fn alphabets(ctx: Grassmannian) -> Alphabets {
    Alphabets::new(ctx.k(), ctx.corank())
}

fn root_polynomial(sizes: Alphabets, root: &[i64]) -> RootPolynomial {
    RootPolynomial::linear(sizes, root)
}

/// Graded pieces `0..=max_degree` of `c(E)` in the `e`/`f` basis.
pub fn chern_symbolic(
    e: &BundleExpr,
    ctx: Grassmannian,
    max_degree: usize,
) -> Result<Vec<ElementarySymmetricExpansion>> {
    let max_degree = max_degree.min(ctx.dimension()) as u32;
    let sizes = alphabets(ctx);
    let mut total = RootPolynomial::one(sizes);
    for root in e.roots(ctx)? {
        if root.iter().all(|&c| c == 0) {
            continue;
        }
        let factor = RootPolynomial::one(sizes).add(&root_polynomial(sizes, &root));
        total = total.mul_truncated(&factor, max_degree);
    }
    let reduced = symmetric_reduce(&total)?;
    Ok((0..=max_degree)
        .map(|d| reduced.homogeneous_part(d))
        .collect())
}

/// Maps `e_i ↦ σ_{1^i}` and `f_j ↦ σ_j` into the Schubert ring.
pub fn to_schubert(expansion: &ElementarySymmetricExpansion, ctx: Grassmannian) -> Element {
    assert_eq!(
        expansion.sizes(),
        alphabets(ctx),
        "expansion over the wrong alphabets"
    );
    let e: Vec<Element> = (1..=ctx.k())
        .map(|i| Element::from_terms(ctx, [(Partition::column(i), BigInt::one())]))
        .collect();
    let f: Vec<Element> = (1..=ctx.corank()).map(|j| ctx.special(j)).collect();
    let mut out = Element::zero(ctx);
    let terms = expansion.evaluate(Element::one(ctx), &e, &f, |a, b| {
        a.multiply(b).expect("elements share one Grassmannian")
    });
    for (value, c) in terms {
        out.add_scaled(&value, &c);
    }
    out
}

/// Chern classes `c_0..c_max_degree` in the Schubert basis; `max_degree` is
/// clamped to the dimension of the Grassmannian.
pub fn chern_classes(e: &BundleExpr, ctx: Grassmannian, max_degree: usize) -> Result<ChernData> {
    let symbolic = chern_symbolic(e, ctx, max_degree)?;
    Ok(ChernData {
        rank: e.rank(ctx),
        classes: symbolic.iter().map(|s| to_schubert(s, ctx)).collect(),
    })
}

/// The total Chern class up to the dimension of the Grassmannian.
pub fn total_chern(e: &BundleExpr, ctx: Grassmannian) -> Result<ChernData> {
    chern_classes(e, ctx, ctx.dimension())
}

fn check_top_rank(e: &BundleExpr, ctx: Grassmannian) -> Result<usize> {
    let rank = e.rank(ctx);
    if rank > ctx.dimension() as u128 {
        return Err(Error::RankExceedsDimension {
            rank: usize::try_from(rank).unwrap_or(usize::MAX),
            dimension: ctx.dimension(),
        });
    }
    Ok(rank as usize)
}

/// `c_r(E)` for `r = rank(E)`, the class of the zero locus of a general section.
pub fn top_chern(e: &BundleExpr, ctx: Grassmannian) -> Result<Element> {
    let rank = check_top_rank(e, ctx)?;
    Ok(chern_classes(e, ctx, rank)?.classes.swap_remove(rank))
}

/// `c_r(E)` written in the elementary symmetric functions of the roots.
pub fn top_chern_symbolic(
    e: &BundleExpr,
    ctx: Grassmannian,
) -> Result<ElementarySymmetricExpansion> {
    let rank = check_top_rank(e, ctx)?;
    Ok(chern_symbolic(e, ctx, rank)?.swap_remove(rank))
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Graded pieces `ch_0..ch_max_degree` of the Chern character,
/// `ch_m = p_m(roots) / m!`.
pub fn chern_character(
    e: &BundleExpr,
    ctx: Grassmannian,
    max_degree: usize,
) -> Result<Vec<RationalElement>> {
    let sizes = alphabets(ctx);
    let roots: Vec<RootPolynomial> = e
        .roots(ctx)?
        .iter()
        .filter(|r| r.iter().any(|&c| c != 0))
        .map(|r| root_polynomial(sizes, r))
        .collect();
    let mut out = Vec::with_capacity(max_degree + 1);
    let rank = BigInt::from(e.rank(ctx));
    out.push(RationalElement::from_integral(
        &Element::one(ctx).scale(&rank),
    ));
    let mut powers: Vec<RootPolynomial> = roots.clone();
    for m in 1..=max_degree {
        if m > ctx.dimension() {
            out.push(RationalElement::zero(ctx));
            continue;
        }
        let power_sum = powers
            .iter()
            .fold(RootPolynomial::zero(sizes), |acc, p| acc.add(p));
        let reduced = symmetric_reduce(&power_sum)?;
        out.push(RationalElement::from_fraction(
            &to_schubert(&reduced, ctx),
            &factorial(m),
        ));
        powers = powers.iter().zip(&roots).map(|(p, r)| p.mul(r)).collect();
    }
    Ok(out)
}

/// Recovers Chern classes from a Chern character through Newton's identities
/// `m c_m = Σ_{i=1}^{m} (-1)^{i-1} c_{m-i} p_i` with `p_i = i! ch_i`.
///
/// Fails if any recovered class has a non-integral coefficient.
pub fn chern_from_character(ch: &[RationalElement]) -> Result<Vec<Element>> {
    let ctx = ch[0].context();
    let mut classes: Vec<RationalElement> =
        vec![RationalElement::from_integral(&Element::one(ctx))];
    let sums: Vec<RationalElement> = ch
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut p = RationalElement::zero(ctx);
            p.add_scaled(c, &BigRational::from_integer(factorial(i)));
            p
        })
        .collect();
    for m in 1..ch.len() {
        let mut acc = RationalElement::zero(ctx);
        for i in 1..=m {
            let term = classes[m - i].multiply(&sums[i])?;
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc.add_scaled(&term, &BigRational::from_integer(BigInt::from(sign)));
        }
        let mut c = RationalElement::zero(ctx);
        c.add_scaled(&acc, &BigRational::new(BigInt::one(), BigInt::from(m)));
        classes.push(c);
    }
    classes
        .iter()
        .enumerate()
        .map(|(degree, c)| {
            let c = truncate_rational(c, ctx.dimension());
            c.to_integral().ok_or(Error::NonIntegral { degree })
        })
        .collect()
}

fn truncate_rational(x: &RationalElement, d: usize) -> RationalElement {
    let mut out = RationalElement::zero(x.context());
    for (lambda, c) in x.terms() {
        if lambda.size() <= d {
            let single = Element::from_terms(x.context(), [(lambda.clone(), BigInt::one())]);
            out.add_scaled(&RationalElement::from_integral(&single), c);
        }
    }
    out
}

/// Whether every `ch[m]` is homogeneous of degree `m`.
pub fn is_graded(ch: &[RationalElement]) -> bool {
    ch.iter().enumerate().all(|(m, piece)| {
        piece
            .terms()
            .iter()
            .all(|(lambda, c)| lambda.size() == m || c.is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: usize, n: usize) -> Grassmannian {
        Grassmannian::new(k, n).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn elem(ctx: Grassmannian, terms: &[(i64, &[usize])]) -> Element {
        Element::from_terms(ctx, terms.iter().map(|(c, l)| (p(l), BigInt::from(*c))))
    }

    fn sym3() -> BundleExpr {
        BundleExpr::sym(3, BundleExpr::dual(BundleExpr::Tautological))
    }

    #[test]
    fn parses_examples() {
        assert_eq!(BundleExpr::parse("sym(3, dual(U))").unwrap(), sym3());
        assert_eq!(
            BundleExpr::parse("tensor(dual(U), Q)").unwrap(),
            BundleExpr::tangent()
        );
        let wedge = BundleExpr::parse("wedge(4, U)").unwrap();
        assert_eq!(wedge.rank(gr(3, 7)), 0);
        assert_eq!(
            BundleExpr::parse(" o( -2 ) ").unwrap(),
            BundleExpr::Line(-2)
        );
        assert_eq!(
            BundleExpr::parse("sum(det(Q),o(1))").unwrap(),
            BundleExpr::sum(BundleExpr::det(BundleExpr::Quotient), BundleExpr::Line(1))
        );
    }

    #[test]
    fn parse_errors() {
        let err = |text: &str| match BundleExpr::parse(text) {
            Err(Error::Syntax { position, message }) => (position, message),
            other => panic!("{text}: {other:?}"),
        };
        assert_eq!(err("tensor(U)").0, 8);
        assert!(err("tensor(U)").1.contains("two arguments"));
        assert!(err("dual(U, Q)").1.contains("too many"));
        assert_eq!(err("sym(-1, U)").0, 4);
        assert_eq!(err("foo(U)").0, 0);
        assert_eq!(err("U Q").0, 2);
        assert_eq!(err("sym(3 dual(U))").0, 6);
        assert!(err("").1.contains("end of input"));
        assert!(err("o()").1.contains("integer"));
    }

    #[test]
    fn printer_round_trips() {
        for text in [
            "sym(3,dual(U))",
            "tensor(dual(U),Q)",
            "sum(wedge(2,Q),o(-3))",
            "det(sym(2,U))",
        ] {
            let e = BundleExpr::parse(text).unwrap();
            assert_eq!(e.to_string(), text);
        }
    }

    #[test]
    fn ranks() {
        let g = gr(3, 7);
        assert_eq!(sym3().rank(g), 10);
        assert_eq!(BundleExpr::tangent().rank(g), 12);
        assert_eq!(BundleExpr::det(sym3()).rank(g), 1);
        assert_eq!(
            BundleExpr::det(BundleExpr::wedge(5, BundleExpr::Quotient)).rank(g),
            1
        );
        assert_eq!(BundleExpr::wedge(2, BundleExpr::Quotient).rank(g), 6);
        assert_eq!(BundleExpr::sym(0, BundleExpr::Quotient).rank(g), 1);
        for e in [
            sym3(),
            BundleExpr::tangent(),
            BundleExpr::wedge(2, BundleExpr::tangent()),
        ] {
            assert_eq!(e.roots(g).unwrap().len() as u128, e.rank(g));
        }
        let huge = BundleExpr::sym(40, BundleExpr::sym(40, BundleExpr::tangent()));
        assert!(matches!(huge.roots(g), Err(Error::TooManyRoots { .. })));
    }

    #[test]
    fn sym3_classes() {
        let g = gr(3, 7);
        let c = chern_classes(&sym3(), g, 2).unwrap();
        assert_eq!(c.class(0), &Element::one(g));
        assert_eq!(c.class(1), &elem(g, &[(10, &[1])]));
        assert_eq!(c.class(2), &elem(g, &[(40, &[2]), (55, &[1, 1])]));
    }

    #[test]
    fn tangent_classes() {
        let g = gr(3, 7);
        let c = chern_classes(&BundleExpr::tangent(), g, 2).unwrap();
        assert_eq!(c.class(1), &elem(g, &[(7, &[1])]));
        assert_eq!(c.class(2), &elem(g, &[(23, &[2]), (24, &[1, 1])]));
        // the same class written as 23σ1^2 + σ11
        let sigma1 = elem(g, &[(1, &[1])]);
        let alt = &sigma1.pow(2).unwrap().scale(&BigInt::from(23)) + &elem(g, &[(1, &[1, 1])]);
        assert_eq!(c.class(2), &alt);
    }

    #[test]
    fn sym3_top_class_in_elementary_basis() {
        let g = gr(3, 7);
        let top = top_chern_symbolic(&sym3(), g).unwrap();
        let none = [0u32; 4];
        assert_eq!(top.coeff(&[3, 2, 1], &none), BigInt::from(216));
        assert_eq!(top.coeff(&[1, 3, 1], &none), BigInt::from(108));
        assert_eq!(top.coeff(&[4, 0, 2], &none), BigInt::from(108));
        assert_eq!(top.coeff(&[2, 1, 2], &none), BigInt::from(-486));
        assert_eq!(top.coeff(&[1, 0, 3], &none), BigInt::from(729));
        assert_eq!(top.len(), 5);
        assert_eq!(to_schubert(&top, g), top_chern(&sym3(), g).unwrap());
    }

    #[test]
    fn line_bundles() {
        let g = gr(3, 7);
        assert_eq!(
            top_chern(&BundleExpr::Line(1), g).unwrap(),
            elem(g, &[(1, &[1])])
        );
        let det = chern_classes(&BundleExpr::det(sym3()), g, 3).unwrap();
        assert_eq!(det.class(1), &elem(g, &[(10, &[1])]));
        assert!(det.class(2).is_zero());
        assert!(det.class(3).is_zero());
    }

    #[test]
    fn top_chern_rejects_large_rank() {
        let g = gr(2, 4);
        let e = BundleExpr::sym(4, BundleExpr::Quotient);
        assert!(matches!(
            top_chern(&e, g),
            Err(Error::RankExceedsDimension {
                rank: 5,
                dimension: 4
            })
        ));
    }

    #[test]
    fn zero_bundle_has_trivial_classes() {
        let g = gr(3, 7);
        let c = total_chern(&BundleExpr::wedge(4, BundleExpr::Tautological), g).unwrap();
        assert_eq!(c.rank(), 0);
        assert_eq!(c.total(), Element::one(g));
    }

    #[test]
    fn tautological_sequence() {
        for g in [gr(2, 4), gr(2, 5), gr(3, 6)] {
            let cu = total_chern(&BundleExpr::Tautological, g).unwrap().total();
            let cq = total_chern(&BundleExpr::Quotient, g).unwrap().total();
            assert_eq!(cu.multiply(&cq).unwrap(), Element::one(g), "{g}");
        }
    }

    #[test]
    fn chern_character_examples() {
        let g = gr(3, 7);
        let ch = chern_character(&BundleExpr::tangent(), g, 2).unwrap();
        assert_eq!(ch[1].to_integral().unwrap(), elem(g, &[(7, &[1])]));
        let ch = chern_character(&sym3(), g, 0).unwrap();
        assert_eq!(ch[0].to_integral().unwrap(), elem(g, &[(10, &[])]));
        let trivial = BundleExpr::sum(BundleExpr::Tautological, BundleExpr::Quotient);
        let ch = chern_character(&trivial, g, 4).unwrap();
        assert_eq!(ch[0].to_integral().unwrap(), elem(g, &[(7, &[])]));
        assert!(ch[1..].iter().all(RationalElement::is_zero));
        assert!(is_graded(&ch));
    }

    #[test]
    fn character_route_recovers_tangent_classes() {
        // ch(U^∨ ⊗ Q) = ch(U^∨) · ch(Q), then back to Chern classes
        let g = gr(3, 7);
        let dual = chern_character(&BundleExpr::dual(BundleExpr::Tautological), g, 2).unwrap();
        let quotient = chern_character(&BundleExpr::Quotient, g, 2).unwrap();
        let mut product = vec![RationalElement::zero(g); 3];
        for (i, a) in dual.iter().enumerate() {
            for (j, b) in quotient.iter().enumerate() {
                if i + j <= 2 {
                    let ab = a.multiply(b).unwrap();
                    product[i + j].add_scaled(&ab, &BigRational::one());
                }
            }
        }
        let classes = chern_from_character(&product).unwrap();
        assert_eq!(classes[1], elem(g, &[(7, &[1])]));
        assert_eq!(classes[2], elem(g, &[(23, &[2]), (24, &[1, 1])]));
    }

    #[test]
    fn character_route_rejects_non_integral_input() {
        let g = gr(2, 4);
        let mut ch = chern_character(&BundleExpr::Quotient, g, 2).unwrap();
        // perturb ch_2 by σ2/2: p_2 shifts by σ2 and c_2 by -σ2/2
        let half = RationalElement::from_fraction(&elem(g, &[(1, &[2])]), &BigInt::from(2));
        ch[2].add_scaled(&half, &BigRational::one());
        assert_eq!(
            chern_from_character(&ch),
            Err(Error::NonIntegral { degree: 2 })
        );
    }
}
