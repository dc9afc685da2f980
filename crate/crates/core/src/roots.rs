//! Sparse integer polynomials in two alphabets of formal Chern roots and
//! their rewriting in elementary symmetric polynomials.
//!
//! The `x` alphabet carries the roots of `U^∨` and the `y` alphabet the roots
//! of `Q`. Elementary symmetric polynomials in `x` are written `e_i`, those in
//! `y` are written `f_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the two root alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    X,
    Y,
}

impl Alphabet {
    pub fn variable_name(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
        }
    }

    /// Name of the elementary symmetric polynomials in this alphabet.
    pub fn elementary_name(self) -> char {
        match self {
            Alphabet::X => 'e',
            Alphabet::Y => 'f',
        }
    }
}

/// Sizes of the `x` and `y` alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabets {
    pub x: usize,
    pub y: usize,
}

impl Alphabets {
    pub fn new(x: usize, y: usize) -> Self {
        Alphabets { x, y }
    }

    pub fn len(&self) -> usize {
        self.x + self.y
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn size(&self, a: Alphabet) -> usize {
        match a {
            Alphabet::X => self.x,
            Alphabet::Y => self.y,
        }
    }

    fn offset(&self, a: Alphabet) -> usize {
        match a {
            Alphabet::X => 0,
            Alphabet::Y => self.x,
        }
    }
}

type Exponents = Vec<u32>;
type SparseTerms = BTreeMap<Exponents, BigInt>;

fn add_into(terms: &mut SparseTerms, key: Exponents, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn sparse_mul(a: &SparseTerms, b: &SparseTerms, max_degree: Option<u32>) -> SparseTerms {
    let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(a.len() * b.len().min(64));
    for (ea, ca) in a {
        let da: u32 = ea.iter().sum();
        for (eb, cb) in b {
            if let Some(max) = max_degree {
                if da + eb.iter().sum::<u32>() > max {
                    continue;
                }
            }
            let key: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *acc.entry(key).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A polynomial with integer coefficients in `x_1..x_k, y_1..y_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPolynomial {
    sizes: Alphabets,
    terms: SparseTerms,
}

impl RootPolynomial {
    pub fn zero(sizes: Alphabets) -> Self {
        RootPolynomial {
            sizes,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sizes: Alphabets, c: BigInt) -> Self {
        let mut out = RootPolynomial::zero(sizes);
        add_into(&mut out.terms, vec![0; sizes.len()], c);
        out
    }

    pub fn one(sizes: Alphabets) -> Self {
        RootPolynomial::constant(sizes, BigInt::one())
    }

    /// The variable `x_i` or `y_i`, 1-based.
    pub fn variable(sizes: Alphabets, alphabet: Alphabet, i: usize) -> Self {
        assert!(
            i >= 1 && i <= sizes.size(alphabet),
            "variable index out of range"
        );
        let mut exps = vec![0; sizes.len()];
        exps[sizes.offset(alphabet) + i - 1] = 1;
        RootPolynomial {
            sizes,
            terms: BTreeMap::from([(exps, BigInt::one())]),
        }
    }

    /// The linear form `Σ coeffs[v] · var_v` over all variables, `x` first.
    pub fn linear(sizes: Alphabets, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), sizes.len());
        let mut out = RootPolynomial::zero(sizes);
        for (v, &c) in coeffs.iter().enumerate() {
            let mut exps = vec![0; sizes.len()];
            exps[v] = 1;
            add_into(&mut out.terms, exps, BigInt::from(c));
        }
        out
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(
        sizes: Alphabets,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self> {
        let mut out = RootPolynomial::zero(sizes);
        for (exps, c) in terms {
            if exps.len() != sizes.len() {
                return Err(Error::AlphabetMismatch {
                    x: sizes.x,
                    y: sizes.y,
                    actual: exps.len(),
                });
            }
            add_into(&mut out.terms, exps, c);
        }
        Ok(out)
    }

    /// The elementary symmetric polynomial of degree `i` in one alphabet.
    pub fn elementary(sizes: Alphabets, alphabet: Alphabet, i: usize) -> Self {
        let n = sizes.size(alphabet);
        let offset = sizes.offset(alphabet);
        let mut out = RootPolynomial::zero(sizes);
        if i > n {
            return out;
        }
        let mut chosen = Vec::with_capacity(i);
        subsets(n, i, 0, &mut chosen, &mut |subset| {
            let mut exps = vec![0; sizes.len()];
            for &v in subset {
                exps[offset + v] = 1;
            }
            add_into(&mut out.terms, exps, BigInt::one());
        });
        out
    }

    pub fn sizes(&self) -> Alphabets {
        self.sizes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Largest total degree of a term; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        RootPolynomial {
            sizes: self.sizes,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max_degree: u32) -> Self {
        RootPolynomial {
            sizes: self.sizes,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_sizes(&self, other: &Self) {
        assert_eq!(
            self.sizes, other.sizes,
            "root polynomials over different alphabets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_sizes(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_into(&mut out.terms, e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return RootPolynomial::zero(self.sizes);
        }
        RootPolynomial {
            sizes: self.sizes,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_sizes(other);
        RootPolynomial {
            sizes: self.sizes,
            terms: sparse_mul(&self.terms, &other.terms, None),
        }
    }

    /// Product with all terms above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        self.check_sizes(other);
        RootPolynomial {
            sizes: self.sizes,
            terms: sparse_mul(&self.terms, &other.terms, Some(max_degree)),
        }
    }

    pub fn pow_truncated(&self, e: u32, max_degree: u32) -> Self {
        let mut acc = RootPolynomial::one(self.sizes).truncate(max_degree);
        for _ in 0..e {
            acc = acc.mul_truncated(self, max_degree);
        }
        acc
    }

    /// Swaps two variables (0-based, within one alphabet).
    fn transposed(&self, alphabet: Alphabet, i: usize, j: usize) -> Self {
        let offset = self.sizes.offset(alphabet);
        RootPolynomial {
            sizes: self.sizes,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(offset + i, offset + j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Checks invariance under every adjacent transposition of each alphabet.
    pub fn check_symmetric(&self) -> Result<()> {
        for alphabet in [Alphabet::X, Alphabet::Y] {
            for i in 1..self.sizes.size(alphabet) {
                if self.transposed(alphabet, i - 1, i) != *self {
                    return Err(Error::NotSymmetric {
                        alphabet: alphabet.variable_name(),
                        i,
                        j: i + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Parses the text form `c * x1^a x2^b ... ± ...`.
    ///
    /// Alphabet sizes default to the largest index used in each alphabet.
    pub fn parse(text: &str, sizes: Option<Alphabets>) -> Result<Self> {
        parse_polynomial(text, sizes)
    }
}

impl fmt::Display for RootPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.sizes.x)
            .map(|i| format!("x{i}"))
            .chain((1..=self.sizes.y).map(|j| format!("y{j}")))
            .collect();
        write_monomials(f, self.terms.iter().rev(), &names)
    }
}

fn write_monomials<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Exponents, &'a BigInt)>,
    names: &[String],
) -> fmt::Result {
    let mut any = false;
    for (i, (exps, c)) in terms.enumerate() {
        any = true;
        match (i == 0, c.is_negative()) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        let magnitude = c.abs();
        let factors: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, name)| {
                if *e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{}", factors.join(" "))?;
        } else {
            write!(f, "{magnitude} * {}", factors.join(" "))?;
        }
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

fn subsets(
    n: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for v in start..n {
        chosen.push(v);
        subsets(n, size, v + 1, chosen, visit);
        chosen.pop();
    }
}

/// A polynomial in `e_1..e_k` (elementary in `x`) and `f_1..f_m`
/// (elementary in `y`).
///
/// Keys concatenate the `e` exponents and the `f` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarySymmetricExpansion {
    sizes: Alphabets,
    terms: SparseTerms,
}

impl ElementarySymmetricExpansion {
    pub fn zero(sizes: Alphabets) -> Self {
        ElementarySymmetricExpansion {
            sizes,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sizes: Alphabets) -> Self {
        let mut out = Self::zero(sizes);
        out.terms.insert(vec![0; sizes.len()], BigInt::one());
        out
    }

    /// The single generator `e_i` (or `f_i`), 1-based.
    pub fn generator(sizes: Alphabets, alphabet: Alphabet, i: usize) -> Self {
        let mut out = Self::zero(sizes);
        if i >= 1 && i <= sizes.size(alphabet) {
            let mut exps = vec![0; sizes.len()];
            exps[sizes.offset(alphabet) + i - 1] = 1;
            out.terms.insert(exps, BigInt::one());
        }
        out
    }

    pub fn sizes(&self) -> Alphabets {
        self.sizes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `e^a f^b`.
    pub fn coeff(&self, e: &[u32], f: &[u32]) -> BigInt {
        let key: Exponents = e.iter().chain(f).copied().collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Terms as `(e exponents, f exponents, coefficient)`, descending lex.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &BigInt)> {
        let split = self.sizes.x;
        self.terms
            .iter()
            .rev()
            .map(move |(k, c)| (&k[..split], &k[split..], c))
    }

    /// Weighted degree of a key: `e_i` and `f_i` have degree `i`.
    fn weight(&self, key: &[u32]) -> u32 {
        let split = self.sizes.x;
        let e: u32 = key[..split]
            .iter()
            .enumerate()
            .map(|(i, a)| (i as u32 + 1) * a)
            .sum();
        let f: u32 = key[split..]
            .iter()
            .enumerate()
            .map(|(j, b)| (j as u32 + 1) * b)
            .sum();
        e + f
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        ElementarySymmetricExpansion {
            sizes: self.sizes,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| self.weight(k) == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.sizes, other.sizes);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.sizes);
        for (key, c) in &self.terms {
            add_into(&mut out.terms, key.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.sizes, other.sizes);
        ElementarySymmetricExpansion {
            sizes: self.sizes,
            terms: sparse_mul(&self.terms, &other.terms, None),
        }
    }

    /// Replaces each `e_i`, `f_j` by its polynomial in the roots.
    pub fn substitute(&self) -> RootPolynomial {
        let sizes = self.sizes;
        let generators: Vec<RootPolynomial> = (1..=sizes.x)
            .map(|i| RootPolynomial::elementary(sizes, Alphabet::X, i))
            .chain((1..=sizes.y).map(|j| RootPolynomial::elementary(sizes, Alphabet::Y, j)))
            .collect();
        let mut out = RootPolynomial::zero(sizes);
        for (key, c) in &self.terms {
            let mut monomial = RootPolynomial::constant(sizes, c.clone());
            for (g, &e) in generators.iter().zip(key) {
                for _ in 0..e {
                    monomial = monomial.mul(g);
                }
            }
            out = out.add(&monomial);
        }
        out
    }

    /// Evaluates the expansion in any commutative ring, given the images of
    /// `e_1..e_k` and `f_1..f_m`. Powers of generators are shared between
    /// terms.
    pub fn evaluate<T, M>(&self, one: T, e: &[T], f: &[T], mut mul: M) -> Vec<(T, BigInt)>
    where
        T: Clone,
        M: FnMut(&T, &T) -> T,
    {
        assert_eq!(e.len(), self.sizes.x);
        assert_eq!(f.len(), self.sizes.y);
        let images: Vec<&T> = e.iter().chain(f).collect();
        let mut powers: HashMap<(usize, u32), T> = HashMap::new();
        let mut out = Vec::with_capacity(self.terms.len());
        for (key, c) in &self.terms {
            let mut value = one.clone();
            for (v, &exp) in key.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let power = match powers.get(&(v, exp)) {
                    Some(p) => p.clone(),
                    None => {
                        let mut p = images[v].clone();
                        for _ in 1..exp {
                            p = mul(&p, images[v]);
                        }
                        powers.insert((v, exp), p.clone());
                        p
                    }
                };
                value = mul(&value, &power);
            }
            out.push((value, c.clone()));
        }
        out
    }
}

impl fmt::Display for ElementarySymmetricExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.sizes.x)
            .map(|i| format!("e{i}"))
            .chain((1..=self.sizes.y).map(|j| format!("f{j}")))
            .collect();
        write_monomials(f, self.terms.iter().rev(), &names)
    }
}

/// Coefficient ring used while eliminating one alphabet.
trait Coefficient: Clone {
    fn zero_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add_scaled(&mut self, other: &Self, k: &BigInt);
}

impl Coefficient for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        *self += other * k;
    }
}

/// Polynomial in the other alphabet, treated as a scalar.
#[derive(Clone)]
struct Sparse(SparseTerms);

impl Coefficient for Sparse {
    fn zero_like(&self) -> Self {
        Sparse(BTreeMap::new())
    }

    fn vanishes(&self) -> bool {
        self.0.is_empty()
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        for (e, c) in &other.0 {
            add_into(&mut self.0, e.clone(), c * k);
        }
    }
}

/// Products `e^d` in `n` variables, memoized.
struct ElementaryPowers {
    n: usize,
    elementary: Vec<SparseTerms>,
    cache: HashMap<Exponents, SparseTerms>,
}

impl ElementaryPowers {
    fn new(n: usize) -> Self {
        let sizes = Alphabets::new(n, 0);
        let elementary = (1..=n)
            .map(|i| RootPolynomial::elementary(sizes, Alphabet::X, i).terms)
            .collect();
        ElementaryPowers {
            n,
            elementary,
            cache: HashMap::new(),
        }
    }

    fn product(&mut self, d: &[u32]) -> SparseTerms {
        if let Some(hit) = self.cache.get(d) {
            return hit.clone();
        }
        let mut acc: SparseTerms = BTreeMap::from([(vec![0; self.n], BigInt::one())]);
        for (i, &e) in d.iter().enumerate() {
            for _ in 0..e {
                acc = sparse_mul(&acc, &self.elementary[i], None);
            }
        }
        self.cache.insert(d.to_vec(), acc.clone());
        acc
    }
}

/// Rewrites a symmetric polynomial in `n` variables (keys of length `n`)
/// in elementary symmetric polynomials by leading-term elimination.
fn reduce_alphabet<C: Coefficient>(
    n: usize,
    mut terms: BTreeMap<Exponents, C>,
    alphabet: Alphabet,
) -> Result<BTreeMap<Exponents, C>> {
    let mut powers = ElementaryPowers::new(n);
    let mut out: BTreeMap<Exponents, C> = BTreeMap::new();
    while let Some((lead, coeff)) = terms.pop_last() {
        if coeff.vanishes() {
            continue;
        }
        // the lex-leading monomial of a symmetric polynomial is a partition
        if let Some(i) = lead.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric {
                alphabet: alphabet.variable_name(),
                i: i + 1,
                j: i + 2,
            });
        }
        let d: Exponents = (0..n)
            .map(|i| lead[i] - lead.get(i + 1).copied().unwrap_or(0))
            .collect();
        for (monomial, c) in powers.product(&d) {
            if monomial == lead {
                continue;
            }
            let vanished = {
                let slot = terms
                    .entry(monomial.clone())
                    .or_insert_with(|| coeff.zero_like());
                slot.add_scaled(&coeff, &-c);
                slot.vanishes()
            };
            if vanished {
                terms.remove(&monomial);
            }
        }
        out.insert(d, coeff);
    }
    Ok(out)
}

/// Expresses a polynomial symmetric in each alphabet separately in terms of
/// `e_i` and `f_j`. The `x` alphabet is eliminated first with `y`-polynomial
/// coefficients, then each coefficient is reduced in `y`.
pub fn symmetric_reduce(p: &RootPolynomial) -> Result<ElementarySymmetricExpansion> {
    p.check_symmetric()?;
    let sizes = p.sizes;
    let mut by_x: BTreeMap<Exponents, Sparse> = BTreeMap::new();
    for (exps, c) in &p.terms {
        let (xe, ye) = exps.split_at(sizes.x);
        by_x.entry(xe.to_vec())
            .or_insert_with(|| Sparse(BTreeMap::new()))
            .add_scaled(
                &Sparse(BTreeMap::from([(ye.to_vec(), c.clone())])),
                &BigInt::one(),
            );
    }
    by_x.retain(|_, c| !c.vanishes());
    let x_reduced = reduce_alphabet(sizes.x, by_x, Alphabet::X)?;

    let mut out = ElementarySymmetricExpansion::zero(sizes);
    for (e_exps, Sparse(y_poly)) in x_reduced {
        let y_reduced = reduce_alphabet(sizes.y, y_poly, Alphabet::Y)?;
        for (f_exps, c) in y_reduced {
            let key: Exponents = e_exps.iter().chain(&f_exps).copied().collect();
            add_into(&mut out.terms, key, c);
        }
    }
    Ok(out)
}

/// The power sum `p_m` of one alphabet in the elementary basis, by Newton's
/// identities `p_m = Σ_{i<m} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m`.
pub fn power_sum(alphabet: Alphabet, m: usize, sizes: Alphabets) -> ElementarySymmetricExpansion {
    assert!(m >= 1, "power sums start at degree 1");
    // The recurrence is sign-free in the generators (-1)^{i-1} e_i; run it
    // there and undo the substitution at the end.
    let gen = |i: usize| ElementarySymmetricExpansion::generator(sizes, alphabet, i);
    let mut sums: Vec<ElementarySymmetricExpansion> = Vec::with_capacity(m + 1);
    sums.push(ElementarySymmetricExpansion::zero(sizes));
    for j in 1..=m {
        let mut p = gen(j).scale(&BigInt::from(j));
        for i in 1..j {
            p = p.add(&gen(i).mul(&sums[j - i]));
        }
        sums.push(p);
    }
    let signed = &sums[m];
    let mut out = ElementarySymmetricExpansion::zero(sizes);
    let offset = sizes.offset(alphabet);
    for (key, c) in &signed.terms {
        let flips: u32 = key[offset..offset + sizes.size(alphabet)]
            .iter()
            .enumerate()
            .filter(|(i, _)| (i + 1) % 2 == 0)
            .map(|(_, e)| *e)
            .sum();
        let c = if flips % 2 == 0 { c.clone() } else { -c };
        add_into(&mut out.terms, key.clone(), c);
    }
    out
}

/// A parsed term: coefficient and `(alphabet, index, exponent)` factors.
type RawTerm = (BigInt, Vec<(Alphabet, usize, u32)>);

fn parse_polynomial(text: &str, sizes: Option<Alphabets>) -> Result<RootPolynomial> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let mut raw: Vec<RawTerm> = Vec::new();
    let syntax = |position: usize, message: &str| Error::Syntax {
        position,
        message: message.to_string(),
    };
    if tokens.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = BigInt::one();
        match tokens[pos].kind {
            TokenKind::Plus => pos += 1,
            TokenKind::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => {
                return Err(syntax(
                    tokens[pos].offset,
                    "expected '+' or '-' between terms",
                ))
            }
        }
        first = false;
        let start = tokens.get(pos).map_or(text.len(), |t| t.offset);
        let mut coeff = None;
        if let Some(TokenKind::Int(c)) = tokens.get(pos).map(|t| &t.kind) {
            coeff = Some(c.clone());
            pos += 1;
            if let Some(TokenKind::Star) = tokens.get(pos).map(|t| &t.kind) {
                pos += 1;
                if !matches!(tokens.get(pos).map(|t| &t.kind), Some(TokenKind::Var(..))) {
                    let at = tokens.get(pos).map_or(text.len(), |t| t.offset);
                    return Err(syntax(at, "expected a variable after '*'"));
                }
            }
        }
        let mut factors = Vec::new();
        while let Some(TokenKind::Var(a, i)) = tokens.get(pos).map(|t| &t.kind) {
            let (a, i) = (*a, *i);
            pos += 1;
            let mut e = 1u32;
            if let Some(TokenKind::Caret) = tokens.get(pos).map(|t| &t.kind) {
                pos += 1;
                match tokens.get(pos).map(|t| &t.kind) {
                    Some(TokenKind::Int(n)) => {
                        e = u32::try_from(n)
                            .map_err(|_| syntax(tokens[pos].offset, "exponent too large"))?;
                        pos += 1;
                    }
                    _ => {
                        let at = tokens.get(pos).map_or(text.len(), |t| t.offset);
                        return Err(syntax(at, "expected an exponent after '^'"));
                    }
                }
            }
            factors.push((a, i, e));
            if let Some(TokenKind::Star) = tokens.get(pos).map(|t| &t.kind) {
                pos += 1;
                if !matches!(tokens.get(pos).map(|t| &t.kind), Some(TokenKind::Var(..))) {
                    let at = tokens.get(pos).map_or(text.len(), |t| t.offset);
                    return Err(syntax(at, "expected a variable after '*'"));
                }
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(syntax(start, "expected a term"));
        }
        raw.push((sign * coeff.unwrap_or_else(BigInt::one), factors));
    }

    let max_index = |alphabet: Alphabet| {
        raw.iter()
            .flat_map(|(_, f)| f.iter())
            .filter(|(a, _, _)| *a == alphabet)
            .map(|(_, i, _)| *i)
            .max()
            .unwrap_or(0)
    };
    let sizes =
        sizes.unwrap_or_else(|| Alphabets::new(max_index(Alphabet::X), max_index(Alphabet::Y)));
    for alphabet in [Alphabet::X, Alphabet::Y] {
        let used = max_index(alphabet);
        if used > sizes.size(alphabet) {
            return Err(syntax(
                0,
                &format!(
                    "variable {}{used} outside an alphabet of size {}",
                    alphabet.variable_name(),
                    sizes.size(alphabet)
                ),
            ));
        }
    }
    let mut out = RootPolynomial::zero(sizes);
    for (c, factors) in raw {
        let mut exps = vec![0u32; sizes.len()];
        for (a, i, e) in factors {
            exps[sizes.offset(a) + i - 1] += e;
        }
        add_into(&mut out.terms, exps, c);
    }
    Ok(out)
}

#[derive(Debug)]
enum TokenKind {
    Int(BigInt),
    Var(Alphabet, usize),
    Plus,
    Minus,
    Star,
    Caret,
}

#[derive(Debug)]
struct Token {
    kind: TokenKind,
    offset: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |start: usize| {
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while i < bytes.len() {
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'^' => TokenKind::Caret,
            b'0'..=b'9' => {
                let end = digits_from(i);
                let value: BigInt = text[i..end].parse().expect("ascii digits");
                out.push(Token {
                    kind: TokenKind::Int(value),
                    offset: i,
                });
                i = end;
                continue;
            }
            b'x' | b'y' => {
                let alphabet = if c == b'x' { Alphabet::X } else { Alphabet::Y };
                let end = digits_from(i + 1);
                let index: usize = text[i + 1..end].parse().map_err(|_| Error::Syntax {
                    position: i,
                    message: "variable needs a positive index, e.g. x1".into(),
                })?;
                if index == 0 {
                    return Err(Error::Syntax {
                        position: i,
                        message: "variable indices start at 1".into(),
                    });
                }
                out.push(Token {
                    kind: TokenKind::Var(alphabet, index),
                    offset: i,
                });
                i = end;
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!(
                        "unexpected character {:?}",
                        text[i..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push(Token { kind, offset: i });
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xs(n: usize) -> Alphabets {
        Alphabets::new(n, 0)
    }

    fn x(sizes: Alphabets, i: usize) -> RootPolynomial {
        RootPolynomial::variable(sizes, Alphabet::X, i)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn reduces_linear_sum() {
        let s = xs(3);
        let p = x(s, 1).add(&x(s, 2)).add(&x(s, 3));
        let r = symmetric_reduce(&p).unwrap();
        assert_eq!(
            r,
            ElementarySymmetricExpansion::generator(s, Alphabet::X, 1)
        );
        assert_eq!(r.to_string(), "e1");
    }

    #[test]
    fn reduces_sum_of_squares() {
        let s = xs(3);
        let p = (1..=3).fold(RootPolynomial::zero(s), |acc, i| {
            acc.add(&x(s, i).mul(&x(s, i)))
        });
        let r = symmetric_reduce(&p).unwrap();
        assert_eq!(r.coeff(&[2, 0, 0], &[]), big(1));
        assert_eq!(r.coeff(&[0, 1, 0], &[]), big(-2));
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn reduces_sym3_root_product() {
        // Π over 1 <= a <= b <= c <= 3 of (x_a + x_b + x_c)
        let s = xs(3);
        let mut p = RootPolynomial::one(s);
        for a in 1..=3 {
            for b in a..=3 {
                for c in b..=3 {
                    p = p.mul(&x(s, a).add(&x(s, b)).add(&x(s, c)));
                }
            }
        }
        let r = symmetric_reduce(&p).unwrap();
        assert_eq!(r.coeff(&[3, 2, 1], &[]), big(216));
        assert_eq!(r.coeff(&[1, 3, 1], &[]), big(108));
        assert_eq!(r.coeff(&[4, 0, 2], &[]), big(108));
        assert_eq!(r.coeff(&[2, 1, 2], &[]), big(-486));
        assert_eq!(r.coeff(&[1, 0, 3], &[]), big(729));
        assert_eq!(r.len(), 5);
        assert_eq!(r.substitute(), p);
    }

    #[test]
    fn classical_three_variable_identities() {
        let s = xs(3);
        let product = x(s, 1).mul(&x(s, 2)).mul(&x(s, 3));
        assert_eq!(
            symmetric_reduce(&product).unwrap(),
            ElementarySymmetricExpansion::generator(s, Alphabet::X, 3)
        );
        let pairs = x(s, 1)
            .add(&x(s, 2))
            .mul(&x(s, 1).add(&x(s, 3)))
            .mul(&x(s, 2).add(&x(s, 3)));
        let r = symmetric_reduce(&pairs).unwrap();
        assert_eq!(r.coeff(&[1, 1, 0], &[]), big(1));
        assert_eq!(r.coeff(&[0, 0, 1], &[]), big(-1));
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn mixed_alphabets() {
        // Π (1 + x_i + y_j) over a 2 x 2 grid, reduced in both alphabets
        let s = Alphabets::new(2, 2);
        let mut p = RootPolynomial::one(s);
        for i in 1..=2 {
            for j in 1..=2 {
                let root = x(s, i).add(&RootPolynomial::variable(s, Alphabet::Y, j));
                p = p.mul(&RootPolynomial::one(s).add(&root));
            }
        }
        let r = symmetric_reduce(&p).unwrap();
        assert_eq!(r.substitute(), p);
        // c_1 = 2 e1 + 2 f1
        assert_eq!(r.coeff(&[1, 0], &[0, 0]), big(2));
        assert_eq!(r.coeff(&[0, 0], &[1, 0]), big(2));
    }

    #[test]
    fn rejects_asymmetric_input() {
        let s = xs(3);
        let err = symmetric_reduce(&x(s, 1)).unwrap_err();
        assert_eq!(
            err,
            Error::NotSymmetric {
                alphabet: 'x',
                i: 1,
                j: 2
            }
        );
        let p = x(s, 1).add(&x(s, 2));
        let err = symmetric_reduce(&p).unwrap_err();
        assert_eq!(
            err,
            Error::NotSymmetric {
                alphabet: 'x',
                i: 2,
                j: 3
            }
        );
        let mixed = Alphabets::new(1, 2);
        let err = symmetric_reduce(&RootPolynomial::variable(mixed, Alphabet::Y, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::NotSymmetric {
                alphabet: 'y',
                i: 1,
                j: 2
            }
        );
    }

    #[test]
    fn power_sums_by_newton() {
        let s = xs(3);
        let p1 = power_sum(Alphabet::X, 1, s);
        assert_eq!(p1.to_string(), "e1");
        let p2 = power_sum(Alphabet::X, 2, s);
        assert_eq!(p2.coeff(&[2, 0, 0], &[]), big(1));
        assert_eq!(p2.coeff(&[0, 1, 0], &[]), big(-2));
        assert_eq!(p2.len(), 2);
        let p3 = power_sum(Alphabet::X, 3, s);
        assert_eq!(p3.coeff(&[3, 0, 0], &[]), big(1));
        assert_eq!(p3.coeff(&[1, 1, 0], &[]), big(-3));
        assert_eq!(p3.coeff(&[0, 0, 1], &[]), big(3));
        assert_eq!(p3.len(), 3);
    }

    #[test]
    fn power_sums_match_direct_reduction() {
        for (nx, ny) in [(1, 0), (2, 3), (3, 4), (4, 1)] {
            let s = Alphabets::new(nx, ny);
            for alphabet in [Alphabet::X, Alphabet::Y] {
                let n = if alphabet == Alphabet::X { nx } else { ny };
                for m in 1..=7 {
                    let direct = (1..=n).fold(RootPolynomial::zero(s), |acc, i| {
                        acc.add(
                            &RootPolynomial::variable(s, alphabet, i)
                                .pow_truncated(m as u32, m as u32),
                        )
                    });
                    let newton = power_sum(alphabet, m, s);
                    assert_eq!(
                        symmetric_reduce(&direct).unwrap(),
                        newton,
                        "{alphabet:?} {n} {m}"
                    );
                    assert_eq!(newton.substitute(), direct);
                }
            }
        }
    }

    #[test]
    fn parses_text_grammar() {
        let p = RootPolynomial::parse("3 * x1^2 x2 - x3 + 5", None).unwrap();
        assert_eq!(p.sizes(), Alphabets::new(3, 0));
        assert_eq!(p.coeff(&[2, 1, 0]), big(3));
        assert_eq!(p.coeff(&[0, 0, 1]), big(-1));
        assert_eq!(p.coeff(&[0, 0, 0]), big(5));
        let q = RootPolynomial::parse("-2*x1*y2^3 + x1 x1", Some(Alphabets::new(2, 2))).unwrap();
        assert_eq!(q.coeff(&[1, 0, 0, 3]), big(-2));
        assert_eq!(q.coeff(&[2, 0, 0, 0]), big(1));
        assert_eq!(RootPolynomial::parse("x1 - x1", None).unwrap().len(), 0);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases = [
            ("x1 +", 4),
            ("x0", 0),
            ("x1 ^", 4),
            ("3 * + x1", 4),
            ("x1 x2 & x3", 6),
            ("x1 2", 3),
        ];
        for (text, at) in cases {
            match RootPolynomial::parse(text, None) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, at, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(RootPolynomial::parse("x3", Some(Alphabets::new(2, 0))).is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = RootPolynomial::parse("3 * x1^2 x2 - x3 + 5 - 2 * y1", None).unwrap();
        let again = RootPolynomial::parse(&p.to_string(), Some(p.sizes())).unwrap();
        assert_eq!(again, p);
    }

    fn random_symmetric(n: usize) -> impl Strategy<Value = RootPolynomial> {
        // symmetrize random monomials in n variables
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), -5i64..6), 1..4).prop_map(
            move |monomials| {
                let s = xs(n);
                let mut out = RootPolynomial::zero(s);
                for (exps, c) in monomials {
                    for perm in permutations(n) {
                        let permuted: Vec<u32> = perm.iter().map(|&i| exps[i]).collect();
                        out = out.add(
                            &RootPolynomial::from_terms(s, [(permuted, BigInt::from(c))]).unwrap(),
                        );
                    }
                }
                out
            },
        )
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in permutations(n - 1) {
            for slot in 0..=rest.len() {
                let mut p = rest.clone();
                p.insert(slot, n - 1);
                out.push(p);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn reduction_round_trips(p in random_symmetric(3)) {
            let r = symmetric_reduce(&p).unwrap();
            prop_assert_eq!(r.substitute(), p);
        }

        #[test]
        fn reduction_is_linear(p in random_symmetric(3), q in random_symmetric(3), a in -4i64..5, b in -4i64..5) {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let combined = symmetric_reduce(&p.scale(&a).add(&q.scale(&b))).unwrap();
            let separate = symmetric_reduce(&p).unwrap().scale(&a).add(&symmetric_reduce(&q).unwrap().scale(&b));
            prop_assert_eq!(combined, separate);
        }
    }
}
