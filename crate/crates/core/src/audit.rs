//! Instance-level audit of the half-splitting argument.
//!
//! Every quantity is an exact integer. Sums written over "ordered index pairs
//! `i ≠ j`" and "ordered symbol pairs `a ≠ b`" are computed over unordered
//! pairs and doubled, since each summand is symmetric.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{
    discordant_pairs, f_single, is_intersection_reverse, LinearOrder, OrderFamily, Symbol,
    TripleWitness,
};

pub const AUDIT_SCHEMA: &str = "ordex.audit/1";

/// `Σ_{a≠b} f(b1, b2, a, b)` over ordered symbol pairs.
///
/// With `k` common symbols of which `d` pairs are discordant this is
/// `2·(C(k,2) − d) − 2·d = k(k−1) − 4d`.
pub fn pair_f_sum(b1: &LinearOrder, b2: &LinearOrder) -> i64 {
    let k = b1.common_count(b2) as i64;
    k * (k - 1) - 4 * discordant_pairs(b1, b2) as i64
}

/// Half-level data for one unordered pair of orders and one `ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfPair {
    pub common: u64,
    pub f_sum: i64,
    pub int_rev: bool,
}

/// One unordered pair `i < j` of orders with a nonempty intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub common: u64,
    pub halves: [HalfPair; 2],
}

/// Records for every pair `i < j` whose orders intersect; disjoint pairs
/// contribute zero to every audited sum and are omitted.
pub fn pair_records(family: &OrderFamily) -> Vec<PairRecord> {
    let orders = family.orders();
    let splits = family.splits();
    let n = orders.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let splits = &splits;
            (i + 1..n).filter_map(move |j| {
                let common = orders[i].common_count(&orders[j]) as u64;
                if common == 0 {
                    return None;
                }
                let half = |eps: usize| {
                    let (b1, b2) = (splits[i].half(eps), splits[j].half(eps));
                    HalfPair {
                        common: b1.common_count(b2) as u64,
                        f_sum: pair_f_sum(b1, b2),
                        int_rev: is_intersection_reverse(b1, b2),
                    }
                };
                Some(PairRecord {
                    i,
                    j,
                    common,
                    halves: [half(0), half(1)],
                })
            })
        })
        .collect()
}

/// `S = Σ_{i≠j} Σ_ε Σ_{a≠b} f(A^i_ε, A^j_ε, a, b)`.
pub fn compute_s(family: &OrderFamily) -> i64 {
    s_from_records(&pair_records(family))
}

fn s_from_records(records: &[PairRecord]) -> i64 {
    2 * records
        .iter()
        .map(|r| r.halves[0].f_sum + r.halves[1].f_sum)
        .sum::<i64>()
}

/// `λ_{a,b} = Σ_{i≠j} f(A^i,a,b) f(A^j,a,b)` over whole orders.
pub fn lambda(family: &OrderFamily, a: Symbol, b: Symbol) -> Result<i64> {
    let (mut sum, mut sq) = (0i64, 0i64);
    for o in family.orders() {
        let f = f_single(o, a, b)? as i64;
        sum += f;
        sq += f * f;
    }
    Ok(sum * sum - sq)
}

fn sum_of_squares(family: &OrderFamily) -> i64 {
    family
        .orders()
        .iter()
        .map(|o| (o.len() as i64).pow(2))
        .sum()
}

fn require_valid(family: &OrderFamily) -> Result<()> {
    match family.first_violation() {
        Some(w) => Err(Error::InvalidFamily(w)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundCheck {
    /// `2·S`
    pub doubled_s: i64,
    /// `−Σ|A^i|²`
    pub neg_sum_squares: i64,
}

impl LowerBoundCheck {
    pub fn passed(&self) -> bool {
        self.doubled_s >= self.neg_sum_squares
    }
}

/// `S ≥ −½ Σ|A^i|²`, doubled to stay integral.
pub fn check_s_lower_bound(family: &OrderFamily) -> LowerBoundCheck {
    LowerBoundCheck {
        doubled_s: 2 * compute_s(family),
        neg_sum_squares: -sum_of_squares(family),
    }
}

/// A failed per-pair inequality, with both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub eps: Option<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of a per-pair family of inequalities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    /// Number of unordered instances examined; each stands for both orderings.
    pub checked: usize,
    pub failures: Vec<PairFailure>,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn f_bounds_from(records: &[PairRecord]) -> PairCheck {
    let mut out = PairCheck::default();
    for r in records {
        for (eps, h) in r.halves.iter().enumerate() {
            out.checked += 1;
            let k = h.common as i64;
            if h.f_sum > k {
                out.failures.push(PairFailure {
                    i: r.i,
                    j: r.j,
                    eps: Some(eps),
                    lhs: h.f_sum,
                    rhs: k,
                });
            } else if h.int_rev && h.f_sum != k - k * k {
                out.failures.push(PairFailure {
                    i: r.i,
                    j: r.j,
                    eps: Some(eps),
                    lhs: h.f_sum,
                    rhs: k - k * k,
                });
            }
        }
    }
    out
}

/// Per `(i, j, ε)`: the half f-sum is at most the half intersection size, with
/// equality `k − k²` for intersection-reverse halves.
pub fn check_f_bounds(family: &OrderFamily) -> Result<PairCheck> {
    require_valid(family)?;
    Ok(f_bounds_from(&pair_records(family)))
}

fn gain_from(records: &[PairRecord]) -> PairCheck {
    let mut out = PairCheck::default();
    for r in records {
        out.checked += 1;
        let lhs: i64 = r
            .halves
            .iter()
            .filter(|h| h.int_rev)
            .map(|h| (h.common as i64).pow(2))
            .sum();
        let rhs = 2 * r.halves[0].common as i64 * r.halves[1].common as i64;
        if lhs < rhs {
            out.failures.push(PairFailure {
                i: r.i,
                j: r.j,
                eps: None,
                lhs,
                rhs,
            });
        }
    }
    out
}

/// Per pair `i ≠ j`: `Σ_{ε int-rev} |A^i_ε ∩ A^j_ε|² ≥ 2 |A^i_0 ∩ A^j_0| |A^i_1 ∩ A^j_1|`.
pub fn check_gain_bound(family: &OrderFamily) -> Result<PairCheck> {
    require_valid(family)?;
    Ok(gain_from(&pair_records(family)))
}

fn disjointness_from(records: &[PairRecord]) -> PairCheck {
    let mut out = PairCheck::default();
    for r in records {
        for eps in 0..2 {
            out.checked += 1;
            let other = r.halves[1 - eps].common as i64;
            if !r.halves[eps].int_rev && other != 0 {
                out.failures.push(PairFailure {
                    i: r.i,
                    j: r.j,
                    eps: Some(eps),
                    lhs: other,
                    rhs: 0,
                });
            }
        }
    }
    out
}

/// Halves at `ε` not intersection-reverse forces the halves at `1 − ε` to be disjoint.
pub fn check_disjointness_claim(family: &OrderFamily) -> Result<PairCheck> {
    require_valid(family)?;
    Ok(disjointness_from(&pair_records(family)))
}

/// Nonzero entry of the sparse `s_{a,b}` table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SabEntry {
    pub a: Symbol,
    pub b: Symbol,
    pub s: u64,
}

/// The two double-counting identities for `s_{a,b} = |{i : a ∈ A^i_0, b ∈ A^i_1}|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SabIdentities {
    /// `Σ_{i≠j} |A^i_0∩A^j_0| |A^i_1∩A^j_1|`
    pub cross_product_sum: i64,
    /// `Σ_{a,b} 2·C(s_{a,b}, 2)`
    pub pair_choose_sum: i64,
    /// `Σ_{a,b} s_{a,b}`
    pub s_total: i64,
    /// `Σ_i |A^i_0| |A^i_1|`
    pub half_product_sum: i64,
    /// Universe size `n'`; the `Σ_{a,b}` ranges over all `n'²` ordered pairs.
    pub universe: usize,
    pub table: Vec<SabEntry>,
}

impl SabIdentities {
    pub fn passed(&self) -> bool {
        self.cross_product_sum == self.pair_choose_sum && self.s_total == self.half_product_sum
    }
}

pub fn sab_table(family: &OrderFamily) -> Vec<SabEntry> {
    let mut table: BTreeMap<(Symbol, Symbol), u64> = BTreeMap::new();
    for split in family.splits() {
        for &a in split.first.as_slice() {
            for &b in split.second.as_slice() {
                *table.entry((a, b)).or_default() += 1;
            }
        }
    }
    table
        .into_iter()
        .map(|((a, b), s)| SabEntry { a, b, s })
        .collect()
}

fn sab_from(family: &OrderFamily, records: &[PairRecord]) -> SabIdentities {
    let table = sab_table(family);
    let cross_product_sum = 2 * records
        .iter()
        .map(|r| r.halves[0].common as i64 * r.halves[1].common as i64)
        .sum::<i64>();
    let pair_choose_sum = table
        .iter()
        .map(|e| (e.s * e.s.saturating_sub(1)) as i64)
        .sum();
    let s_total = table.iter().map(|e| e.s as i64).sum();
    let half_product_sum = family
        .splits()
        .iter()
        .map(|h| (h.first.len() * h.second.len()) as i64)
        .sum();
    SabIdentities {
        cross_product_sum,
        pair_choose_sum,
        s_total,
        half_product_sum,
        universe: family.universe(),
        table,
    }
}

pub fn sab_identities(family: &OrderFamily) -> SabIdentities {
    sab_from(family, &pair_records(family))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionSum {
    /// `Σ_{i≠j} |A^i ∩ A^j|`
    pub value: i64,
    /// `Σ_a 2·C(d_a, 2)`
    pub degree_form: i64,
}

impl IntersectionSum {
    pub fn passed(&self) -> bool {
        self.value == self.degree_form
    }
}

fn intersection_from(family: &OrderFamily, records: &[PairRecord]) -> IntersectionSum {
    IntersectionSum {
        value: 2 * records.iter().map(|r| r.common as i64).sum::<i64>(),
        degree_form: family
            .symbol_degrees()
            .iter()
            .map(|&d| (d * d.saturating_sub(1)) as i64)
            .sum(),
    }
}

pub fn intersection_sum(family: &OrderFamily) -> IntersectionSum {
    intersection_from(family, &pair_records(family))
}

/// Both lines of the summed upper bound on `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplayOne {
    pub s: i64,
    /// `Σ_{i≠j,ε} |A^i_ε ∩ A^j_ε| − gain`
    pub half_bound: i64,
    /// `Σ_{i≠j} |A^i ∩ A^j| − gain`
    pub whole_bound: i64,
    /// `Σ_{(i,j,ε) int-rev} |A^i_ε ∩ A^j_ε|²`
    pub gain: i64,
}

impl DisplayOne {
    pub fn passed(&self) -> bool {
        self.s <= self.half_bound && self.half_bound <= self.whole_bound
    }
}

fn gain_sum(records: &[PairRecord]) -> i64 {
    2 * records
        .iter()
        .flat_map(|r| r.halves.iter())
        .filter(|h| h.int_rev)
        .map(|h| (h.common as i64).pow(2))
        .sum::<i64>()
}

fn display_from(records: &[PairRecord]) -> DisplayOne {
    let gain = gain_sum(records);
    let half_common = 2 * records
        .iter()
        .map(|r| (r.halves[0].common + r.halves[1].common) as i64)
        .sum::<i64>();
    let whole = 2 * records.iter().map(|r| r.common as i64).sum::<i64>();
    DisplayOne {
        s: s_from_records(records),
        half_bound: half_common - gain,
        whole_bound: whole - gain,
        gain,
    }
}

pub fn check_display_one(family: &OrderFamily) -> Result<DisplayOne> {
    require_valid(family)?;
    Ok(display_from(&pair_records(family)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            status: if passed {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail,
        }
    }

    fn skipped(name: &str) -> Self {
        Check {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            detail: "family is not valid".to_string(),
        }
    }
}

/// Informational evaluation of the final inequality chain for a chosen `K`.
/// Nothing here is asserted; the chain only bites for large instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinalChain {
    pub k: String,
    /// Minimum and maximum degree of the incidence graph, isolated vertices dropped.
    pub min_degree: u64,
    pub max_degree: u64,
    pub almost_regular: bool,
    /// `M ≥ 7K² n^{3/2}` (exact).
    pub weight_above_threshold: bool,
    pub hypotheses_hold: bool,
    /// `K²M²/n − M⁴/(25K²n⁴)`
    pub s_upper: f64,
    /// `−K²M²/(2n)`
    pub s_lower: f64,
    /// `Σ_{i≠j} |A^i_0∩A^j_0| |A^i_1∩A^j_1|`
    pub cross_product_sum: i64,
    /// `M⁴/(50K²n⁴)`
    pub cross_product_bound: f64,
}

fn final_chain(family: &OrderFamily, k: Ratio<u64>, cross_product_sum: i64) -> FinalChain {
    let n = family.len() as u64;
    let m = family.total_weight();
    let degrees = family
        .orders()
        .iter()
        .map(|o| o.len() as u64)
        .chain(family.symbol_degrees())
        .filter(|&d| d > 0);
    let (min_degree, max_degree) =
        degrees.fold((u64::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
    let min_degree = if max_degree == 0 { 0 } else { min_degree };
    let (p, q) = (*k.numer() as u128, *k.denom() as u128);
    let almost_regular = max_degree > 0 && max_degree as u128 * q <= p * min_degree as u128;
    // M ≥ 7K²n^{3/2}  ⇔  M² q⁴ ≥ 49 p⁴ n³
    let weight_above_threshold =
        (m as u128).pow(2) * q.pow(4) >= 49 * p.pow(4) * (n as u128).pow(3);
    let kf = p as f64 / q as f64;
    let (mf, nf) = (m as f64, n as f64);
    let (s_upper, s_lower, cross_product_bound) = if n == 0 {
        (0.0, 0.0, 0.0)
    } else {
        (
            kf * kf * mf * mf / nf - mf.powi(4) / (25.0 * kf * kf * nf.powi(4)),
            -kf * kf * mf * mf / (2.0 * nf),
            mf.powi(4) / (50.0 * kf * kf * nf.powi(4)),
        )
    };
    FinalChain {
        k: format!("{}/{}", k.numer(), k.denom()),
        min_degree,
        max_degree,
        almost_regular,
        weight_above_threshold,
        hypotheses_hold: almost_regular && weight_above_threshold,
        s_upper,
        s_lower,
        cross_product_sum,
        cross_product_bound,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub schema: String,
    pub num_orders: usize,
    pub universe: usize,
    pub total_weight: u64,
    pub valid: bool,
    pub witness: Option<TripleWitness>,
    pub s_value: i64,
    /// `⌊−½ Σ|A^i|²⌋`
    pub lower_bound: i64,
    pub intersection_sum: i64,
    /// `Σ_{(i,j,ε) int-rev} |A^i_ε ∩ A^j_ε|²` over ordered index pairs.
    pub gain_sum: i64,
    /// Sparse per-pair data for `i < j`; values for `(j, i)` are identical.
    pub pairs: Vec<PairRecord>,
    pub sab_table: Vec<SabEntry>,
    pub checks: Vec<Check>,
    pub final_chain: FinalChain,
}

impl AuditReport {
    /// True iff no recorded check failed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every check on `family` and records the intermediate quantities.
pub fn full_audit(family: &OrderFamily, k: Ratio<u64>) -> AuditReport {
    let records = pair_records(family);
    let witness = family.first_violation();
    let valid = witness.is_none();
    let s_value = s_from_records(&records);
    let sum_sq = sum_of_squares(family);
    let mut checks = vec![Check::new(
        "family_valid",
        valid,
        witness.map_or_else(|| "no same-order triple".to_string(), |w| w.to_string()),
    )];

    let lower = LowerBoundCheck {
        doubled_s: 2 * s_value,
        neg_sum_squares: -sum_sq,
    };
    checks.push(Check::new(
        "s_lower_bound",
        lower.passed(),
        format!(
            "2S = {} >= -sum|A|^2 = {}",
            lower.doubled_s, lower.neg_sum_squares
        ),
    ));

    let sab = sab_from(family, &records);
    checks.push(Check::new(
        "sab_identities",
        sab.passed(),
        format!(
            "cross {} = choose {}; sum s {} = sum |A0||A1| {}",
            sab.cross_product_sum, sab.pair_choose_sum, sab.s_total, sab.half_product_sum
        ),
    ));

    let inter = intersection_from(family, &records);
    checks.push(Check::new(
        "intersection_degree_identity",
        inter.passed(),
        format!(
            "sum |Ai^Aj| = {} vs sum 2C(d,2) = {}",
            inter.value, inter.degree_form
        ),
    ));

    if valid {
        let fb = f_bounds_from(&records);
        checks.push(Check::new("f_bounds", fb.passed(), pair_detail(&fb)));
        let gain = gain_from(&records);
        checks.push(Check::new("gain_bound", gain.passed(), pair_detail(&gain)));
        let disj = disjointness_from(&records);
        checks.push(Check::new(
            "disjointness_claim",
            disj.passed(),
            pair_detail(&disj),
        ));
        let disp = display_from(&records);
        checks.push(Check::new(
            "display_one",
            disp.passed(),
            format!(
                "S = {} <= {} <= {}",
                disp.s, disp.half_bound, disp.whole_bound
            ),
        ));
    } else {
        for name in [
            "f_bounds",
            "gain_bound",
            "disjointness_claim",
            "display_one",
        ] {
            checks.push(Check::skipped(name));
        }
    }

    AuditReport {
        schema: AUDIT_SCHEMA.to_string(),
        num_orders: family.len(),
        universe: family.universe(),
        total_weight: family.total_weight(),
        valid,
        witness,
        s_value,
        lower_bound: (-sum_sq).div_euclid(2),
        intersection_sum: inter.value,
        gain_sum: gain_sum(&records),
        final_chain: final_chain(family, k, sab.cross_product_sum),
        sab_table: sab.table,
        pairs: records,
        checks,
    }
}

fn pair_detail(c: &PairCheck) -> String {
    match c.failures.first() {
        None => format!("{} instances", c.checked),
        Some(f) => format!(
            "{} of {} failed; first ({}, {}, {:?}): {} vs {}",
            c.failures.len(),
            c.checked,
            f.i,
            f.j,
            f.eps,
            f.lhs,
            f.rhs
        ),
    }
}
