//! The integral cohomology ring of a Grassmannian in the Schubert basis.
//!
//! Products are computed the classical way: the right factor is expanded
//! into special classes `σ_p` with the Giambelli determinant, and each
//! special class acts on the left factor through the Pieri rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};

/// `Gr(k, n)`: `k`-planes in an `n`-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grassmannian {
    k: usize,
    n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(Grassmannian { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the quotient bundle, `n - k`.
    pub fn corank(&self) -> usize {
        self.n - self.k
    }

    /// Complex dimension `k(n - k)`.
    pub fn dimension(&self) -> usize {
        self.k * self.corank()
    }

    pub fn rectangle(&self) -> Rectangle {
        Rectangle::new(self.k, self.corank()).expect("validated on construction")
    }

    /// The Schubert class `σ_λ`; partitions outside the rectangle are rejected.
    pub fn schubert(&self, lambda: &Partition) -> Result<Element> {
        Element::schubert(*self, lambda.clone())
    }

    /// The special class `σ_p` as an element (zero when `p > n - k`).
    pub fn special(&self, p: usize) -> Element {
        Element::from_terms(*self, [(Partition::row(p), BigInt::one())])
    }

    /// The class of a point, `σ_{(n-k)^k}`.
    pub fn point(&self) -> Partition {
        self.rectangle().full()
    }

    /// Pieri rule: `σ_p · σ_λ` as a sum over horizontal strips of size `p`.
    ///
    /// `p > n - k` yields zero, since `σ_p` itself vanishes in the ring.
    pub fn pieri(&self, p: usize, lambda: &Partition) -> Element {
        let mut out = Element::zero(*self);
        for rho in self.pieri_shapes(p, lambda).iter() {
            out.terms.insert(rho.clone(), BigInt::one());
        }
        out
    }

    /// Shapes produced by the Pieri rule, memoized per `(ctx, p, λ)`.
    pub(crate) fn pieri_shapes(&self, p: usize, lambda: &Partition) -> Arc<Vec<Partition>> {
        type Key = (Grassmannian, usize, Partition);
        static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Vec<Partition>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (*self, p, lambda.clone());
        if let Some(hit) = cache.read().expect("pieri cache poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let shapes = Arc::new(self.horizontal_strips(p, lambda));
        cache
            .write()
            .expect("pieri cache poisoned")
            .insert(key, Arc::clone(&shapes));
        shapes
    }

    fn horizontal_strips(&self, p: usize, lambda: &Partition) -> Vec<Partition> {
        let rect = self.rectangle();
        if p > rect.cols() || !lambda.fits(rect) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut rho = Vec::with_capacity(self.k);
        strips(lambda, rect, 0, p, &mut rho, &mut out);
        out
    }

    /// Giambelli's determinant `σ_λ = det(σ_{λ_i + j - i})` as a polynomial
    /// in the special classes, with `σ_0 = 1` and `σ_p = 0` outside
    /// `0..=n-k`.
    pub fn giambelli(&self, lambda: &Partition) -> Result<SpecialPolynomial> {
        let rect = self.rectangle();
        if !lambda.fits(rect) {
            return Err(Error::DoesNotFit {
                partition: lambda.clone(),
                rows: rect.rows(),
                cols: rect.cols(),
            });
        }
        Ok(self.giambelli_cached(lambda).as_ref().clone())
    }

    fn giambelli_cached(&self, lambda: &Partition) -> Arc<SpecialPolynomial> {
        type Key = (Grassmannian, Partition);
        static CACHE: OnceLock<RwLock<HashMap<Key, Arc<SpecialPolynomial>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (*self, lambda.clone());
        if let Some(hit) = cache.read().expect("giambelli cache poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let poly = Arc::new(self.expand_determinant(lambda));
        cache
            .write()
            .expect("giambelli cache poisoned")
            .insert(key, Arc::clone(&poly));
        poly
    }

    fn expand_determinant(&self, lambda: &Partition) -> SpecialPolynomial {
        let size = lambda.len();
        let cols = self.corank() as isize;
        // entry (i, j) is σ_{λ_i + j - i}
        let entry = |i: usize, j: usize| -> Option<usize> {
            let index = lambda.part(i) as isize + j as isize - i as isize;
            (0..=cols).contains(&index).then_some(index as usize)
        };
        let mut out = SpecialPolynomial::default();
        let mut used = vec![false; size];
        let mut factors = Vec::with_capacity(size);
        expand_rows(0, size, &entry, &mut used, &mut factors, 1, &mut out);
        out
    }

    /// `∫ Π σ_{λ_i}^{e_i}` over the Grassmannian.
    pub fn intersection_number(&self, factors: &[(Partition, u32)]) -> Result<BigInt> {
        let actual: usize = factors.iter().map(|(l, e)| l.size() * *e as usize).sum();
        if actual != self.dimension() {
            return Err(Error::DegreeMismatch {
                expected: self.dimension(),
                actual,
            });
        }
        let mut acc = Element::one(*self);
        for (lambda, exponent) in factors {
            let class = Element::from_terms(*self, [(lambda.clone(), BigInt::one())]);
            for _ in 0..*exponent {
                acc = acc.multiply(&class)?;
            }
        }
        acc.integrate()
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

fn strips(
    lambda: &Partition,
    rect: Rectangle,
    row: usize,
    remaining: usize,
    rho: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == rect.rows() {
        if remaining == 0 {
            out.push(Partition::from_sorted(rho.clone()));
        }
        return;
    }
    let low = lambda.part(row);
    let high = if row == 0 {
        rect.cols()
    } else {
        lambda.part(row - 1)
    };
    for value in low..=high.min(low + remaining) {
        rho.push(value);
        strips(lambda, rect, row + 1, remaining - (value - low), rho, out);
        rho.pop();
    }
}

fn expand_rows(
    row: usize,
    size: usize,
    entry: &dyn Fn(usize, usize) -> Option<usize>,
    used: &mut [bool],
    factors: &mut Vec<usize>,
    sign: i64,
    out: &mut SpecialPolynomial,
) {
    if row == size {
        out.add_term(factors.clone(), BigInt::from(sign));
        return;
    }
    for col in 0..size {
        if used[col] {
            continue;
        }
        let Some(p) = entry(row, col) else { continue };
        // sign flips once for every already-used column to the right
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let s = if inversions % 2 == 0 { sign } else { -sign };
        used[col] = true;
        factors.push(p);
        expand_rows(row + 1, size, entry, used, factors, s, out);
        factors.pop();
        used[col] = false;
    }
}

/// An integer polynomial in the special classes `σ_1, σ_2, ...`.
///
/// Monomials are stored as weakly decreasing lists of indices, so
/// `σ_2 σ_1^2` is `[2, 1, 1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecialPolynomial {
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl SpecialPolynomial {
    fn add_term(&mut self, mut factors: Vec<usize>, coeff: BigInt) {
        factors.retain(|&p| p != 0);
        factors.sort_unstable_by(|a, b| b.cmp(a));
        let slot = self.terms.entry(factors).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn coeff(&self, factors: &[usize]) -> BigInt {
        self.terms.get(factors).cloned().unwrap_or_default()
    }

    /// Applies the polynomial to `x` by repeated Pieri products.
    pub fn act_on(&self, x: &Element) -> Element {
        let mut out = Element::zero(x.ctx);
        for (factors, coeff) in &self.terms {
            let mut acc = x.clone();
            for &p in factors {
                acc = acc.pieri_product(p);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, coeff);
        }
        out
    }
}

impl fmt::Display for SpecialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (factors, coeff)) in self.terms.iter().rev().enumerate() {
            write_sign(f, i == 0, coeff)?;
            let magnitude = coeff.abs();
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &p in factors {
                match runs.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => runs.push((p, 1)),
                }
            }
            if runs.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            for (j, (p, e)) in runs.iter().enumerate() {
                if j > 0 {
                    write!(f, "·")?;
                }
                write!(f, "σ{p}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, first: bool, coeff: &BigInt) -> fmt::Result {
    match (first, coeff.is_negative()) {
        (true, true) => write!(f, "-"),
        (true, false) => Ok(()),
        (false, true) => write!(f, " - "),
        (false, false) => write!(f, " + "),
    }
}

/// Canonical term order: by degree, then descending lexicographic.
fn term_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

/// A finite integer combination of Schubert classes of one Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    ctx: Grassmannian,
    terms: BTreeMap<Partition, BigInt>,
}

impl Element {
    pub fn zero(ctx: Grassmannian) -> Self {
        Element {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// `σ_∅ = 1`.
    pub fn one(ctx: Grassmannian) -> Self {
        Element::from_terms(ctx, [(Partition::empty(), BigInt::one())])
    }

    pub fn schubert(ctx: Grassmannian, lambda: Partition) -> Result<Self> {
        let rect = ctx.rectangle();
        if !lambda.fits(rect) {
            return Err(Error::DoesNotFit {
                partition: lambda,
                rows: rect.rows(),
                cols: rect.cols(),
            });
        }
        Ok(Element::from_terms(ctx, [(lambda, BigInt::one())]))
    }

    /// Collects terms, silently dropping partitions outside the rectangle.
    pub fn from_terms(
        ctx: Grassmannian,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Self {
        let rect = ctx.rectangle();
        let mut out = Element::zero(ctx);
        for (lambda, coeff) in terms {
            if lambda.fits(rect) {
                out.add_coeff(lambda, &coeff);
            }
        }
        out
    }

    pub fn context(&self) -> Grassmannian {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in canonical order: ascending degree, descending lex within a degree.
    pub fn terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| term_order(a.0, b.0));
        terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` for zero and mixed elements.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The component of degree `d`.
    pub fn graded_part(&self, d: usize) -> Element {
        Element {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: usize) -> Element {
        Element {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() <= d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_coeff(&mut self, lambda: Partition, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Element, k: &BigInt) {
        assert_eq!(
            self.ctx, other.ctx,
            "adding elements of different Grassmannians"
        );
        for (lambda, c) in &other.terms {
            self.add_coeff(lambda.clone(), &(c * k));
        }
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        let mut out = Element::zero(self.ctx);
        out.add_scaled(self, k);
        out
    }

    /// `σ_p · self` by the Pieri rule.
    pub fn pieri_product(&self, p: usize) -> Element {
        if p == 0 {
            return self.clone();
        }
        let mut out = Element::zero(self.ctx);
        for (lambda, c) in &self.terms {
            for rho in self.ctx.pieri_shapes(p, lambda).iter() {
                out.add_coeff(rho.clone(), c);
            }
        }
        out
    }

    /// The cup product.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            });
        }
        let mut out = Element::zero(self.ctx);
        let dim = self.ctx.dimension();
        for (mu, c) in &other.terms {
            let lifted: Element = Element {
                ctx: self.ctx,
                terms: self
                    .terms
                    .iter()
                    .filter(|(l, _)| l.size() + mu.size() <= dim)
                    .map(|(l, c)| (l.clone(), c.clone()))
                    .collect(),
            };
            if lifted.is_zero() {
                continue;
            }
            let expansion = self.ctx.giambelli_cached(mu);
            out.add_scaled(&expansion.act_on(&lifted), c);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Element> {
        let mut acc = Element::one(self.ctx);
        for _ in 0..e {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Degree of the top class; the coefficient of the point class.
    pub fn integrate(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        let dim = self.ctx.dimension();
        match self.degree() {
            Some(d) if d == dim => Ok(self.coeff(&self.ctx.point())),
            Some(d) => Err(Error::DegreeMismatch {
                expected: dim,
                actual: d,
            }),
            None => Err(Error::NotHomogeneous),
        }
    }

    /// Terms as serializable records with decimal-string coefficients.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .into_iter()
            .map(|(l, c)| TermRecord {
                partition: l.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

/// JSON shape of a single term: `{"partition": [...], "coeff": "<decimal>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub partition: Partition,
    pub coeff: String,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms().into_iter().enumerate() {
            write_sign(f, i == 0, c)?;
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "σ{lambda}")?;
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        self.add_scaled(rhs, &BigInt::one());
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        self.add_scaled(rhs, &-BigInt::one());
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-BigInt::one())
    }
}

impl Mul<&BigInt> for &Element {
    type Output = Element;
    fn mul(self, rhs: &BigInt) -> Element {
        self.scale(rhs)
    }
}

/// A rational combination of Schubert classes, used for Chern characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalElement {
    ctx: Grassmannian,
    terms: BTreeMap<Partition, BigRational>,
}

impl RationalElement {
    pub fn zero(ctx: Grassmannian) -> Self {
        RationalElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_integral(x: &Element) -> Self {
        RationalElement {
            ctx: x.ctx,
            terms: x
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        }
    }

    /// `x / d`.
    pub fn from_fraction(x: &Element, d: &BigInt) -> Self {
        let mut out = RationalElement::from_integral(x);
        for c in out.terms.values_mut() {
            *c /= d;
        }
        out
    }

    pub fn context(&self) -> Grassmannian {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> Vec<(&Partition, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| term_order(a.0, b.0));
        terms
    }

    pub fn add_scaled(&mut self, other: &RationalElement, k: &BigRational) {
        assert_eq!(
            self.ctx, other.ctx,
            "adding elements of different Grassmannians"
        );
        for (lambda, c) in &other.terms {
            let slot = self
                .terms
                .entry(lambda.clone())
                .or_insert_with(BigRational::zero);
            *slot += c * k;
            if slot.is_zero() {
                self.terms.remove(lambda);
            }
        }
    }

    /// Least common denominator of the coefficients.
    fn denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Clears denominators: returns `(x, d)` with `self = x / d`.
    pub fn split(&self) -> (Element, BigInt) {
        let d = self.denominator();
        let numerators = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), (c * &d).to_integer()));
        (Element::from_terms(self.ctx, numerators), d)
    }

    /// The integral element equal to `self`, if every coefficient is an integer.
    pub fn to_integral(&self) -> Option<Element> {
        let (x, d) = self.split();
        d.is_one().then_some(x)
    }

    pub fn multiply(&self, other: &RationalElement) -> Result<RationalElement> {
        let (a, da) = self.split();
        let (b, db) = other.split();
        Ok(RationalElement::from_fraction(&a.multiply(&b)?, &(da * db)))
    }
}

impl fmt::Display for RationalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms().into_iter().enumerate() {
            write_sign(f, i == 0, c.numer())?;
            let magnitude = c.abs();
            if magnitude.is_integer() {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}")?;
                }
            } else {
                write!(f, "({magnitude})")?;
            }
            write!(f, "σ{lambda}")?;
        }
        Ok(())
    }
}
