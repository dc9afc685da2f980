//! Numerical invariants of a smooth surface cut out as the zero locus of a
//! general section of a bundle on a Grassmannian.
//!
//! For `S = Z(s) ⊂ Gr(k, n)` with `s` a section of `E` of rank
//! `k(n - k) - 2`, adjunction gives `c(T_S) = c(T_Gr) / c(E)` restricted to
//! `S`, and integrals over `S` are integrals over `Gr(k, n)` against
//! `c_top(E)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::bundle::{chern_classes, BundleExpr};
use crate::error::{Error, Result};
use crate::ring::{Element, Grassmannian};

/// First Betti number of the surface of planes in a cubic fivefold, supplied
/// from outside (Collino): `b_1 = 42`, so `q = 21`.
pub const PLANES_IN_CUBIC_FIVEFOLD_B1: i64 = 42;

/// `b_4` of a cubic fourfold.
pub const CUBIC_FOURFOLD_B4: i64 = 23;

/// A zero-locus surface: the ambient Grassmannian, the bundle, and the
/// externally known first Betti number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocusProblem {
    ctx: Grassmannian,
    bundle: BundleExpr,
    b1: i64,
}

impl ZeroLocusProblem {
    pub fn new(ctx: Grassmannian, bundle: BundleExpr, b1: i64) -> Result<Self> {
        let expected = ctx.dimension().saturating_sub(2);
        let rank = bundle.rank(ctx);
        if ctx.dimension() < 2 || rank != expected as u128 {
            return Err(Error::NotASurface {
                rank: usize::try_from(rank).unwrap_or(usize::MAX),
                expected,
            });
        }
        if b1 < 0 {
            return Err(Error::InvalidInvariant(format!(
                "b1 must be nonnegative, got {b1}"
            )));
        }
        if b1 % 2 != 0 {
            return Err(Error::OddFirstBetti(b1));
        }
        Ok(ZeroLocusProblem { ctx, bundle, b1 })
    }

    /// `Σ ⊂ Gr(3, 7)`: planes in a general cubic fivefold, cut out by `Sym^3 U^∨`.
    pub fn planes_in_cubic_fivefold() -> Self {
        let ctx = Grassmannian::new(3, 7).expect("valid");
        let bundle = BundleExpr::sym(3, BundleExpr::dual(BundleExpr::Tautological));
        ZeroLocusProblem::new(ctx, bundle, PLANES_IN_CUBIC_FIVEFOLD_B1)
            .expect("rank 10 on a 12-fold")
    }

    pub fn context(&self) -> Grassmannian {
        self.ctx
    }

    pub fn bundle(&self) -> &BundleExpr {
        &self.bundle
    }

    pub fn b1(&self) -> i64 {
        self.b1
    }

    /// Irregularity `q = b_1 / 2`.
    pub fn irregularity(&self) -> i64 {
        self.b1 / 2
    }

    /// The two Chern numbers `(c_1^2, c_2)` of the surface.
    pub fn chern_numbers(&self) -> Result<ChernNumbers> {
        let ctx = self.ctx;
        let rank = ctx.dimension() - 2;
        let tangent = chern_classes(&BundleExpr::tangent(), ctx, 2)?;
        let bundle = chern_classes(&self.bundle, ctx, rank.max(2))?;
        let fundamental = bundle.class(rank);

        let (t1, t2) = (tangent.class(1), tangent.class(2));
        let (e1, e2) = (bundle.class(1), bundle.class(2));
        let c1 = t1 - e1;
        // c_2(S) = c_2(T) - c_1(T) c_1(E) + c_1(E)^2 - c_2(E)
        let e1_sq = e1.multiply(e1)?;
        let t1_e1 = t1.multiply(e1)?;
        let mut c2 = t2 - e2;
        c2 += &e1_sq;
        c2 -= &t1_e1;

        let integrate = |class: &Element| class.multiply(fundamental)?.integrate();
        Ok(ChernNumbers {
            c1_sq: to_i64(integrate(&c1.multiply(&c1)?)?)?,
            c2: to_i64(integrate(&c2)?)?,
        })
    }

    pub fn invariants(&self) -> Result<SurfaceInvariants> {
        let ChernNumbers { c1_sq, c2 } = self.chern_numbers()?;
        SurfaceInvariants::from_chern_numbers(c1_sq, c2, self.b1)
    }
}

fn to_i64(x: BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::InvalidInvariant(format!("Chern number {x} exceeds 64 bits")))
}

/// `(c_1^2, c_2)` of a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernNumbers {
    pub c1_sq: i64,
    pub c2: i64,
}

/// `(b_0, b_1, b_2, b_3, b_4)` from `c_2 = e(S)` and `b_1`.
pub fn betti_numbers(c2: i64, b1: i64) -> Result<[i64; 5]> {
    if c2 < 0 || b1 < 0 {
        return Err(Error::InvalidInvariant(format!(
            "c2 and b1 must be nonnegative, got c2 = {c2}, b1 = {b1}"
        )));
    }
    if b1 % 2 != 0 {
        return Err(Error::OddFirstBetti(b1));
    }
    // e = b0 - b1 + b2 - b3 + b4 with b0 = b4 = 1 and b3 = b1
    let b2 = c2 - 2 + 2 * b1;
    if b2 < 0 {
        return Err(Error::InvalidInvariant(format!("negative b2 = {b2}")));
    }
    Ok([1, b1, b2, b1, 1])
}

/// Hodge numbers `(h^{0,0}, h^{1,0}, h^{2,0}, h^{1,1})` from the Chern
/// numbers and the irregularity `q`.
pub fn hodge_numbers(c1_sq: i64, c2: i64, q: i64) -> Result<[i64; 4]> {
    let chi = noether_chi(c1_sq, c2)?;
    let h20 = chi - 1 + q;
    let h11 = c2 - 2 + 4 * q - 2 * h20;
    if q < 0 || h20 < 0 || h11 < 0 {
        return Err(Error::InvalidInvariant(format!(
            "negative Hodge number: q = {q}, h20 = {h20}, h11 = {h11}"
        )));
    }
    Ok([1, q, h20, h11])
}

/// `χ(O_S) = (c_1^2 + c_2) / 12`; a remainder means the Chern numbers are wrong.
pub fn noether_chi(c1_sq: i64, c2: i64) -> Result<i64> {
    let sum = c1_sq + c2;
    if sum % 12 != 0 {
        return Err(Error::InvalidInvariant(format!(
            "c1^2 + c2 = {sum} is not divisible by 12"
        )));
    }
    Ok(sum / 12)
}

/// Every numerical invariant of the surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub c1_sq: i64,
    pub c2: i64,
    pub euler: i64,
    #[serde(rename = "chi_O")]
    pub chi_o: i64,
    pub betti: [i64; 5],
    pub hodge: [i64; 4],
    pub q: i64,
}

impl SurfaceInvariants {
    pub fn from_chern_numbers(c1_sq: i64, c2: i64, b1: i64) -> Result<Self> {
        let betti = betti_numbers(c2, b1)?;
        let q = b1 / 2;
        let hodge = hodge_numbers(c1_sq, c2, q)?;
        Ok(SurfaceInvariants {
            c1_sq,
            c2,
            euler: c2,
            chi_o: noether_chi(c1_sq, c2)?,
            betti,
            hodge,
            q,
        })
    }

    /// `b_0 - b_1 + b_2 - b_3 + b_4`.
    pub fn alternating_betti_sum(&self) -> i64 {
        let [b0, b1, b2, b3, b4] = self.betti;
        b0 - b1 + b2 - b3 + b4
    }
}

/// Invariants of a smooth degree-`d` surface in `P^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectiveSurface {
    pub c1_sq: i64,
    pub c2: i64,
    /// `χ(O_S)` from `(d^3 - 6d^2 + 11d) / 6`.
    pub chi_o: i64,
    /// `χ(O_S)` from `χ(O_{P^3}) - χ(O_{P^3}(-d))`.
    pub chi_o_restriction: i64,
}

/// `χ(O_{P^n}(m)) = binom(m + n, n)` as a polynomial in `m`.
pub fn projective_euler_characteristic(n: i64, m: i64) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 1..=n {
        num *= m + i;
        den *= i;
    }
    num / den
}

/// Closed formulas for a degree-`d` surface in `P^3`, with `χ(O_S)` computed
/// two ways.
pub fn p3_surface_oracle(d: i64) -> Result<ProjectiveSurface> {
    if d < 1 {
        return Err(Error::InvalidInvariant(format!(
            "degree must be positive, got {d}"
        )));
    }
    let c1_sq = d * d * d - 8 * d * d + 16 * d;
    let c2 = d * d * d - 4 * d * d + 6 * d;
    let cubic = d * d * d - 6 * d * d + 11 * d;
    if cubic % 6 != 0 {
        return Err(Error::InvalidInvariant(format!(
            "d^3 - 6d^2 + 11d = {cubic} is not divisible by 6"
        )));
    }
    let restriction =
        projective_euler_characteristic(3, 0) - projective_euler_characteristic(3, -d);
    Ok(ProjectiveSurface {
        c1_sq,
        c2,
        chi_o: cubic / 6,
        chi_o_restriction: restriction.to_i64().expect("small"),
    })
}

/// Outcome of the numeric test `b_2^tr >= 5` and `h^{1,0} < 2^⌊(b_2^tr - 3)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaiCheck {
    pub b2_tr: i64,
    /// Decimal string; the threshold grows exponentially.
    #[serde(serialize_with = "serialize_decimal")]
    pub threshold: BigInt,
    pub satisfied: bool,
}

fn serialize_decimal<S: serde::Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Checks the variation criterion for a Lagrangian fibration over the
/// hyper-Kähler fourfold attached to a cubic fourfold with the given `b_4`,
/// where `b_2^tr = b_4 - 1`.
pub fn bai_criterion(b4_ambient_cubic: i64, h10_fiber: i64) -> Result<BaiCheck> {
    if b4_ambient_cubic < 1 {
        return Err(Error::InvalidInvariant(format!(
            "b4 must be positive, got {b4_ambient_cubic}"
        )));
    }
    let b2_tr = b4_ambient_cubic - 1;
    if b2_tr < 3 {
        return Ok(BaiCheck {
            b2_tr,
            threshold: BigInt::zero(),
            satisfied: false,
        });
    }
    let exponent = (b2_tr - 3) / 2;
    let threshold = BigInt::from(1) << exponent as usize;
    let satisfied = b2_tr >= 5 && BigInt::from(h10_fiber) < threshold;
    Ok(BaiCheck {
        b2_tr,
        threshold,
        satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planes_in_cubic_fivefold() {
        let problem = ZeroLocusProblem::planes_in_cubic_fivefold();
        let numbers = problem.chern_numbers().unwrap();
        assert_eq!(
            numbers,
            ChernNumbers {
                c1_sq: 25515,
                c2: 13041
            }
        );
        let inv = problem.invariants().unwrap();
        assert_eq!(inv.chi_o, 3213);
        assert_eq!(inv.betti, [1, 42, 13123, 42, 1]);
        assert_eq!(inv.hodge, [1, 21, 3233, 6657]);
        assert_eq!(inv.euler, 13041);
        assert_eq!(inv.alternating_betti_sum(), inv.euler);
        assert_eq!(inv.betti[2], 2 * inv.hodge[2] + inv.hodge[3]);
    }

    #[test]
    fn problem_validation() {
        let g = Grassmannian::new(3, 7).unwrap();
        let sym3 = BundleExpr::sym(3, BundleExpr::dual(BundleExpr::Tautological));
        assert!(matches!(
            ZeroLocusProblem::new(g, BundleExpr::tangent(), 0),
            Err(Error::NotASurface {
                rank: 12,
                expected: 10
            })
        ));
        assert_eq!(
            ZeroLocusProblem::new(g, sym3.clone(), 41),
            Err(Error::OddFirstBetti(41))
        );
        assert!(ZeroLocusProblem::new(g, sym3, -2).is_err());
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(13041, 42).unwrap(), [1, 42, 13123, 42, 1]);
        assert_eq!(betti_numbers(24, 0).unwrap()[2], 22);
        assert_eq!(betti_numbers(9, 0).unwrap(), [1, 0, 7, 0, 1]);
        assert!(betti_numbers(0, 0).is_err());
        assert!(betti_numbers(10, 3).is_err());
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(
            hodge_numbers(25515, 13041, 21).unwrap(),
            [1, 21, 3233, 6657]
        );
        assert_eq!(hodge_numbers(0, 24, 0).unwrap(), [1, 0, 1, 20]);
        assert_eq!(noether_chi(0, 24).unwrap(), 2);
        assert!(hodge_numbers(1, 24, 0).is_err());
    }

    #[test]
    fn general_q_specializes_to_fixed_offsets() {
        // at q = 21: h20 = (c1^2 + c2)/12 + 20 and h11 = (5 c2 - c1^2)/6 + 42
        let (c1_sq, c2) = (25515, 13041);
        let [_, _, h20, h11] = hodge_numbers(c1_sq, c2, 21).unwrap();
        assert_eq!(h20, (c1_sq + c2) / 12 + 20);
        assert_eq!(h11, (5 * c2 - c1_sq) / 6 + 42);
        assert_eq!(betti_numbers(c2, 42).unwrap()[2], c2 + 82);
    }

    #[test]
    fn p3_oracle_examples() {
        let s = |d| p3_surface_oracle(d).unwrap();
        assert_eq!((s(1).c1_sq, s(1).c2, s(1).chi_o), (9, 3, 1));
        assert_eq!((s(4).c1_sq, s(4).c2, s(4).chi_o), (0, 24, 2));
        // cubic surface: K^2 = 3, e = 9
        assert_eq!((s(3).c1_sq, s(3).c2, s(3).chi_o), (3, 9, 1));
        assert!(p3_surface_oracle(0).is_err());
    }

    #[test]
    fn p3_oracle_noether_and_two_routes() {
        for d in 1..=10 {
            let s = p3_surface_oracle(d).unwrap();
            assert_eq!(s.chi_o, s.chi_o_restriction, "d = {d}");
            assert_eq!(12 * s.chi_o, s.c1_sq + s.c2, "d = {d}");
        }
    }

    #[test]
    fn p3_surfaces_as_zero_loci_in_gr_1_4() {
        // P^3 = Gr(1, 4), O(d) = o(d), and the surface is Z(s) for s ∈ H^0(O(d))
        let g = Grassmannian::new(1, 4).unwrap();
        for d in 1..=6 {
            let problem = ZeroLocusProblem::new(g, BundleExpr::Line(d), 0).unwrap();
            let numbers = problem.chern_numbers().unwrap();
            let oracle = p3_surface_oracle(d).unwrap();
            assert_eq!(
                (numbers.c1_sq, numbers.c2),
                (oracle.c1_sq, oracle.c2),
                "d = {d}"
            );
        }
    }

    #[test]
    fn projective_euler_characteristic_values() {
        assert_eq!(projective_euler_characteristic(3, 0), BigInt::from(1));
        assert_eq!(projective_euler_characteristic(3, -1), BigInt::from(0));
        assert_eq!(projective_euler_characteristic(3, -4), BigInt::from(-1));
        assert_eq!(projective_euler_characteristic(2, 2), BigInt::from(6));
    }

    #[test]
    fn bai_examples() {
        let check = |b4, h10| {
            let c = bai_criterion(b4, h10).unwrap();
            (c.b2_tr, c.threshold.to_i64().unwrap(), c.satisfied)
        };
        assert_eq!(check(23, 21), (22, 512, true));
        assert_eq!(check(6, 1), (5, 2, true));
        assert_eq!(check(6, 2), (5, 2, false));
        assert_eq!(check(3, 0), (2, 0, false));
        // b2_tr = 4 passes the exponent but not the b2_tr >= 5 condition
        assert_eq!(check(5, 0), (4, 1, false));
        assert!(bai_criterion(0, 0).is_err());
    }
}
