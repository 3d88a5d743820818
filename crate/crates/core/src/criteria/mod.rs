//! Combinatorial irreducibility and invertibility criteria.
//!
//! Nothing here builds a matrix: every decision is made from diagrams,
//! Gelfand–Zetlin schemes and exact rational shifts.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    column_bottom_contents, enumerate_gz_schemes, gamma_extremes, make_skew, DiagramError,
    Rectangle, SkewDiagram,
};
use crate::exactalg::{Poly, Rat};

/// Errors raised by the criteria.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("module {index} is not rectangular")]
    NotRectangular { index: usize },
    #[error("modules have different N ({0} vs {1})")]
    MismatchedRank(usize, usize),
    #[error("module pair is not (reversed Young diagram, Young diagram): {0}")]
    ShapeNotSpecial(String),
}

/// One elementary module: the diagram `λ/μ` for `gl_N` shifted by `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub lambda: Vec<i64>,
    #[serde(default)]
    pub mu: Vec<i64>,
    #[serde(rename = "N")]
    pub n: usize,
    pub h: Rat,
}

impl ModuleSpec {
    pub fn new(lambda: &[i64], mu: &[i64], n: usize, h: Rat) -> Self {
        ModuleSpec {
            lambda: lambda.to_vec(),
            mu: mu.to_vec(),
            n,
            h,
        }
    }

    /// Ordinary Young diagram `λ` (a partition padded to `N` parts).
    pub fn young(lambda: &[i64], n: usize, h: Rat) -> Self {
        ModuleSpec::new(lambda, &[], n, h)
    }

    /// The `k × l` rectangle (`k` columns of height `l`) with its top-left
    /// box of content zero.
    pub fn rectangle(k: usize, l: usize, n: usize, h: Rat) -> Self {
        let mut lambda = vec![k as i64; l];
        lambda.resize(n, 0);
        ModuleSpec::new(&lambda, &[], n, h)
    }

    /// Reversed Young diagram of the partition `α`: rows `1..=N` all end in
    /// column `N`, row `N − i + 1` has `α_i` boxes; the bottom-right box has
    /// content zero.
    pub fn reversed_young(alpha: &[i64], n: usize, h: Rat) -> Self {
        let mut a = alpha.to_vec();
        a.resize(n, 0);
        let nn = n as i64;
        let low = 0.min(nn - a[0]);
        let mut lambda = vec![nn; n];
        lambda.extend(std::iter::repeat_n(low, n));
        let mu: Vec<i64> = (1..=n).map(|i| nn - a[n - i]).collect();
        ModuleSpec::new(&lambda, &mu, n, h)
    }

    /// The vector module: a single box of content zero.
    pub fn vector(n: usize, h: Rat) -> Self {
        ModuleSpec::rectangle(1, 1, n, h)
    }

    pub fn with_h(&self, h: Rat) -> Self {
        ModuleSpec { h, ..self.clone() }
    }

    pub fn diagram(&self) -> Result<SkewDiagram, DiagramError> {
        make_skew(&self.lambda, &self.mu, self.n)
    }
}

fn check_same_rank(specs: &[ModuleSpec]) -> Result<(), CriteriaError> {
    if let Some(first) = specs.first() {
        for s in specs {
            if s.n != first.n {
                return Err(CriteriaError::MismatchedRank(first.n, s.n));
            }
        }
    }
    Ok(())
}

/// Roots of the Drinfeld polynomials `P_k`, `k = 1..N−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldData {
    pub roots: BTreeMap<usize, Vec<Rat>>,
}

impl DrinfeldData {
    /// The monic polynomial `P_k(u)` (equal to 1 when it has no roots).
    pub fn poly(&self, k: usize) -> Poly {
        Poly::from_roots(self.roots.get(&k).map_or(&[][..], Vec::as_slice))
    }
}

/// `P_k` has the roots `−h − c` over the contents `c` of the bottom boxes of
/// the columns of height exactly `k`.
pub fn drinfeld_roots(spec: &ModuleSpec) -> Result<DrinfeldData, CriteriaError> {
    let d = spec.diagram()?;
    let roots = (1..spec.n)
        .map(|k| {
            let mut r: Vec<Rat> = column_bottom_contents(&d, k)
                .into_iter()
                .map(|c| -&spec.h - Rat::from(c))
                .collect();
            r.sort();
            (k, r)
        })
        .collect();
    Ok(DrinfeldData { roots })
}

/// Zeros of `Q_k(u) = P_k(u) / P_k(u+1)` after cancellation: the points `x`
/// whose multiplicity as a root of `P_k` exceeds that of `x + 1`.
pub fn q_zero_set(spec: &ModuleSpec, k: usize) -> Result<BTreeSet<Rat>, CriteriaError> {
    let data = drinfeld_roots(spec)?;
    let roots = data.roots.get(&k).cloned().unwrap_or_default();
    let mult = |x: &Rat| roots.iter().filter(|r| *r == x).count();
    Ok(roots
        .iter()
        .filter(|x| mult(x) > mult(&(*x + Rat::one())))
        .cloned()
        .collect())
}

/// The sets `X_k`, `k = 1..N−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XSet {
    pub values: BTreeMap<usize, BTreeSet<Rat>>,
}

/// `X_k`: all `i − h − λ_{M+k,i} − 1` over schemes whose `(M+k, i)` entry
/// can be decreased by one without leaving the scheme set.
///
/// Uses the closed form for normalized rectangles and enumeration otherwise.
pub fn x_set(spec: &ModuleSpec) -> Result<XSet, CriteriaError> {
    let d = spec.diagram()?;
    if d.mu().is_empty() {
        if let Some(rect) = d.as_rectangle() {
            if rect.top_left_content == 0 && d.lambda()[0] == rect.k as i64 && rect.l < spec.n {
                return Ok(x_set_rectangle(rect, spec.n, &spec.h));
            }
        }
    }
    x_set_enumerated(spec)
}

/// `X_k` by exhaustive scheme enumeration.
pub fn x_set_enumerated(spec: &ModuleSpec) -> Result<XSet, CriteriaError> {
    let d = spec.diagram()?;
    let lambda = d.lambda().to_vec();
    let mu = d.mu().to_vec();
    let m = mu.len();
    let schemes = enumerate_gz_schemes(&lambda, &mu, spec.n)?;
    let mut values: BTreeMap<usize, BTreeSet<Rat>> = (1..spec.n).map(|k| (k, BTreeSet::new())).collect();
    for s in &schemes {
        for k in 1..spec.n {
            let row = m + k;
            for i in 1..=row {
                if s.adjusted(&lambda, &mu, row, i, -1).is_some() {
                    let v = Rat::from(i as i64 - s.get(row, i) - 1) - &spec.h;
                    values.get_mut(&k).unwrap().insert(v);
                }
            }
        }
    }
    Ok(XSet { values })
}

/// Closed form of `X_k` for the rectangle with `k_s` columns of height
/// `0 < l < N` (top-left content zero): `{t − h − 1 : max(0, l−N+k) − k_s < t <
/// min(k, l)}`.
pub fn x_set_rectangle(rect: Rectangle, n: usize, h: &Rat) -> XSet {
    let (ks, l) = (rect.k as i64, rect.l as i64);
    let nn = n as i64;
    let values = (1..n)
        .map(|k| {
            let k_i = k as i64;
            let lo = 0.max(l - nn + k_i) - ks;
            let hi = k_i.min(l);
            let set = (lo + 1..hi).map(|t| Rat::from(t - 1) - h).collect();
            (k, set)
        })
        .collect();
    XSet { values }
}

/// A violated condition named by a criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_difference: Option<Rat>,
}

impl Witness {
    fn empty() -> Self {
        Witness {
            r: None,
            s: None,
            k: None,
            x: None,
            interval: None,
            h_difference: None,
        }
    }
}

/// Outcome of a criterion: a boolean result, a verdict word, and witnesses.
/// Module indices in witnesses are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub result: bool,
    pub verdict: String,
    pub witnesses: Vec<Witness>,
}

/// Which ordered pairs `(r, s)` a zero/X-set test looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairFilter {
    All,
    RBeforeS,
    SBeforeR,
}

fn zero_set_witnesses(specs: &[ModuleSpec], filter: PairFilter) -> Result<Vec<Witness>, CriteriaError> {
    check_same_rank(specs)?;
    let n = specs.first().map_or(1, |s| s.n);
    let xs: Vec<XSet> = specs.iter().map(x_set).collect::<Result<_, _>>()?;
    let zs: Vec<BTreeMap<usize, BTreeSet<Rat>>> = specs
        .iter()
        .map(|s| (1..n).map(|k| Ok((k, q_zero_set(s, k)?))).collect())
        .collect::<Result<_, CriteriaError>>()?;
    let mut out = Vec::new();
    for r in 0..specs.len() {
        for s in 0..specs.len() {
            let keep = match filter {
                PairFilter::All => r != s,
                PairFilter::RBeforeS => r < s,
                PairFilter::SBeforeR => s < r,
            };
            if !keep {
                continue;
            }
            for k in 1..n {
                for x in zs[s][&k].intersection(&xs[r].values[&k]) {
                    out.push(Witness {
                        r: Some(r + 1),
                        s: Some(s + 1),
                        k: Some(k),
                        x: Some(x.clone()),
                        ..Witness::empty()
                    });
                }
            }
        }
    }
    Ok(out)
}

fn zero_set_report(name: &str, specs: &[ModuleSpec], filter: PairFilter, yes: &str) -> Result<CriterionReport, CriteriaError> {
    let witnesses = zero_set_witnesses(specs, filter)?;
    let result = witnesses.is_empty();
    Ok(CriterionReport {
        criterion: name.to_string(),
        result,
        verdict: if result { yes.to_string() } else { "inconclusive".to_string() },
        witnesses,
    })
}

/// Sufficient condition for irreducibility: no zero of `Q_k^{(s)}` lies in
/// `X_k^{(r)}` for any `r ≠ s`.  `false` is inconclusive.
pub fn thm33_report(specs: &[ModuleSpec]) -> Result<CriterionReport, CriteriaError> {
    zero_set_report("thm33", specs, PairFilter::All, "irreducible")
}

pub fn thm33_irreducible(specs: &[ModuleSpec]) -> Result<bool, CriteriaError> {
    Ok(thm33_report(specs)?.result)
}

/// The same test restricted to pairs `r < s`; guarantees that the tensor
/// product of the singular vectors generates the module.
pub fn prop31_cyclic_condition(specs: &[ModuleSpec]) -> Result<bool, CriteriaError> {
    Ok(zero_set_report("prop31", specs, PairFilter::RBeforeS, "cyclic")?.result)
}

/// The same test restricted to pairs `s < r`; guarantees that the tensor
/// product of the singular vectors is cocyclic.
pub fn prop32_cocyclic_condition(specs: &[ModuleSpec]) -> Result<bool, CriteriaError> {
    Ok(zero_set_report("prop32", specs, PairFilter::SBeforeR, "cocyclic")?.result)
}

/// Integers `h` at which the intertwiner for the reversed diagram of `α`
/// and the diagram of `β` degenerates: some `i` has
/// `min_i < h + i ≤ max_i` with the bounds of [`gamma_extremes`].
pub fn thm23_noninvertible_set(alpha: &[i64], beta: &[i64], n: usize) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let (lo, hi) = gamma_extremes(alpha, beta, n, i);
        for t in lo + 1..=hi {
            out.insert(t - i as i64);
        }
    }
    out
}

/// Normalized data for a (reversed Young, Young) module pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPair {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// `h` of the first module minus `h` of the second after moving the
    /// bottom-right box of the first and the top-left box of the second to
    /// content zero.
    pub h: Rat,
}

/// Recognize `(specA, specB)` as a reversed Young diagram followed by an
/// ordinary Young diagram and normalize their shifts.
pub fn special_pair(spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<SpecialPair, CriteriaError> {
    if spec_a.n != spec_b.n {
        return Err(CriteriaError::MismatchedRank(spec_a.n, spec_b.n));
    }
    let da = spec_a.diagram()?;
    let db = spec_b.diagram()?;
    let (alpha, ca) = da
        .as_reversed_young()
        .ok_or_else(|| CriteriaError::ShapeNotSpecial("first module is not a reversed Young diagram".into()))?;
    let (beta, cb) = db
        .as_young()
        .ok_or_else(|| CriteriaError::ShapeNotSpecial("second module is not a Young diagram".into()))?;
    let h = (&spec_a.h + Rat::from(ca)) - (&spec_b.h + Rat::from(cb));
    Ok(SpecialPair { alpha, beta, h })
}

/// Invertibility verdict for a special pair.
pub fn thm23_report(spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<CriterionReport, CriteriaError> {
    let p = special_pair(spec_a, spec_b)?;
    let set = thm23_noninvertible_set(&p.alpha, &p.beta, spec_a.n);
    let hit = p.h.to_i64().is_some_and(|h| set.contains(&h));
    let witnesses = if hit {
        vec![Witness {
            r: Some(1),
            s: Some(2),
            h_difference: Some(p.h.clone()),
            interval: Some(format!(
                "noninvertible set {{{}}}",
                set.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
            )),
            ..Witness::empty()
        }]
    } else {
        Vec::new()
    };
    Ok(CriterionReport {
        criterion: "thm23".into(),
        result: !hit,
        verdict: if hit { "not_invertible" } else { "invertible" }.into(),
        witnesses,
    })
}

/// A rectangle module normalized to top-left content zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedRectangle {
    pub k: i64,
    pub l: i64,
    pub h: Rat,
}

/// Normalize a rectangular spec (`None` if the diagram is empty).
pub fn normalize_rectangle(spec: &ModuleSpec, index: usize) -> Result<Option<NormalizedRectangle>, CriteriaError> {
    let d = spec.diagram()?;
    if d.is_empty() {
        return Ok(None);
    }
    let rect = d.as_rectangle().ok_or(CriteriaError::NotRectangular { index })?;
    Ok(Some(NormalizedRectangle {
        k: rect.k as i64,
        l: rect.l as i64,
        h: &spec.h + Rat::from(rect.top_left_content),
    }))
}

/// Which interval, if any, contains `d = h_r − h_s` for the rectangle pair
/// `r < s`.
pub fn rectangle_pair_obstruction(r: &NormalizedRectangle, s: &NormalizedRectangle, n: usize) -> Option<&'static str> {
    let nn = n as i64;
    if r.l == 0 || r.l == nn || s.l == 0 || s.l == nn {
        return None;
    }
    let d = (&r.h - &s.h).to_i64()?;
    let (kr, lr, ks, ls) = (r.k, r.l, s.k, s.l);
    let i1 = (-ls.min(nn - lr) - kr, 0.min(lr - ls) + 0.min(ks - kr));
    let i2 = (0.max(lr - ls) + 0.max(ks - kr), lr.min(nn - ls) + ks);
    if i1.0 < d && d < i1.1 {
        Some("I1")
    } else if i2.0 < d && d < i2.1 {
        Some("I2")
    } else {
        None
    }
}

/// Necessary and sufficient criterion for tensor products of rectangles.
pub fn thm34_report(specs: &[ModuleSpec]) -> Result<CriterionReport, CriteriaError> {
    check_same_rank(specs)?;
    let n = specs.first().map_or(1, |s| s.n);
    let rects: Vec<Option<NormalizedRectangle>> = specs
        .iter()
        .enumerate()
        .map(|(i, s)| normalize_rectangle(s, i + 1))
        .collect::<Result<_, _>>()?;
    let mut witnesses = Vec::new();
    for r in 0..specs.len() {
        for s in r + 1..specs.len() {
            let (Some(a), Some(b)) = (&rects[r], &rects[s]) else {
                continue;
            };
            if let Some(which) = rectangle_pair_obstruction(a, b, n) {
                witnesses.push(Witness {
                    r: Some(r + 1),
                    s: Some(s + 1),
                    interval: Some(which.to_string()),
                    h_difference: Some(&a.h - &b.h),
                    ..Witness::empty()
                });
            }
        }
    }
    let result = witnesses.is_empty();
    Ok(CriterionReport {
        criterion: "thm34".into(),
        result,
        verdict: if result { "irreducible" } else { "reducible" }.into(),
        witnesses,
    })
}

pub fn thm34_irreducible(specs: &[ModuleSpec]) -> Result<bool, CriteriaError> {
    Ok(thm34_report(specs)?.result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    fn set(v: &[i64]) -> BTreeSet<Rat> {
        v.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn drinfeld_examples() {
        // Column of height 2 < N = 3 with top content 0: bottom content −1.
        let col = ModuleSpec::young(&[1, 1, 0], 3, r(2));
        let d = drinfeld_roots(&col).unwrap();
        assert_eq!(d.roots[&2], vec![r(-1)]);
        assert!(d.roots[&1].is_empty());
        // Rectangle k = 3 columns, l = 2 rows, N = 3, h = 1/2.
        let h = Rat::new(1, 2);
        let rect = ModuleSpec::rectangle(3, 2, 3, h.clone());
        let d = drinfeld_roots(&rect).unwrap();
        let mut expect: Vec<Rat> = (1..=3).map(|t| -&h + r(2) - r(t)).collect();
        expect.sort();
        assert_eq!(d.roots[&2], expect);
        assert_eq!(q_zero_set(&rect, 2).unwrap(), [r(1) - &h].into_iter().collect());
        assert!(q_zero_set(&rect, 1).unwrap().is_empty());
    }

    #[test]
    fn q_zero_for_adjacent_root_string() {
        // Two columns of height 1 with contents 0, 1: roots −h, −h−1.
        let spec = ModuleSpec::young(&[2, 0], 2, r(0));
        assert_eq!(drinfeld_roots(&spec).unwrap().roots[&1], vec![r(-1), r(0)]);
        // Q = (u)(u+1)/((u+1)(u+2)) has its only zero at the larger root.
        assert_eq!(q_zero_set(&spec, 1).unwrap(), set(&[0]));
    }

    #[test]
    fn x_set_examples() {
        for n in 2..=4 {
            let v = ModuleSpec::vector(n, r(3));
            let x = x_set_enumerated(&v).unwrap();
            assert_eq!(x.values[&1], set(&[-4]));
            assert_eq!(x_set(&v).unwrap(), x);
        }
        for one_dim in [ModuleSpec::young(&[1, 1], 2, r(0)), ModuleSpec::rectangle(2, 2, 2, r(0))] {
            assert!(x_set(&one_dim).unwrap().values[&1].is_empty());
        }
    }

    #[test]
    fn x_set_rectangle_closed_form_matches_enumeration() {
        for n in 2..=3 {
            for l in 1..n {
                for k in 1..=3 {
                    let spec = ModuleSpec::rectangle(k, l, n, Rat::new(1, 3));
                    let d = spec.diagram().unwrap();
                    let closed = x_set_rectangle(d.as_rectangle().unwrap(), n, &spec.h);
                    assert_eq!(closed, x_set_enumerated(&spec).unwrap(), "k={k} l={l} N={n}");
                }
            }
        }
    }

    #[test]
    fn sufficient_condition_examples() {
        let a = ModuleSpec::vector(2, r(0));
        assert!(thm33_irreducible(&[a.clone(), ModuleSpec::vector(2, r(5))]).unwrap());
        let pair = [a.clone(), ModuleSpec::vector(2, r(1))];
        let rep = thm33_report(&pair).unwrap();
        assert!(!rep.result);
        assert_eq!(rep.verdict, "inconclusive");
        assert_eq!(rep.witnesses[0].r, Some(1));
        assert_eq!(rep.witnesses[0].s, Some(2));
        assert_eq!(rep.witnesses[0].x, Some(r(-1)));
        assert!(!prop31_cyclic_condition(&pair).unwrap());
        assert!(prop32_cocyclic_condition(&pair).unwrap());
        let rev = [pair[1].clone(), pair[0].clone()];
        assert!(prop31_cyclic_condition(&rev).unwrap());
        assert!(!prop32_cocyclic_condition(&rev).unwrap());
        assert!(thm33_irreducible(&[a]).unwrap());
    }

    #[test]
    fn invertibility_set_examples() {
        assert_eq!(thm23_noninvertible_set(&[1, 0], &[1, 0], 2), [-1, 1].into_iter().collect());
        assert!(thm23_noninvertible_set(&[3], &[2], 1).is_empty());
        assert_eq!(thm23_noninvertible_set(&[1, 0], &[2, 0], 2), [-1, 2].into_iter().collect());
    }

    #[test]
    fn rectangle_criterion_examples() {
        let v = |h: Rat| ModuleSpec::vector(2, h);
        for d in -4..=4 {
            let ok = thm34_irreducible(&[v(r(d)), v(r(0))]).unwrap();
            assert_eq!(ok, d != 1 && d != -1, "d = {d}");
        }
        assert!(thm34_irreducible(&[v(Rat::new(1, 2)), v(r(0))]).unwrap());
        let rep = thm34_report(&[v(r(1)), v(r(0))]).unwrap();
        assert_eq!(rep.verdict, "reducible");
        assert_eq!(rep.witnesses[0].interval.as_deref(), Some("I2"));
        assert!(matches!(
            thm34_report(&[ModuleSpec::young(&[2, 1], 2, r(0))]),
            Err(CriteriaError::NotRectangular { index: 1 })
        ));
    }

    #[test]
    fn reversed_young_constructor() {
        let s = ModuleSpec::reversed_young(&[2, 1], 2, r(0));
        let d = s.diagram().unwrap();
        assert_eq!(d.as_reversed_young(), Some((vec![2, 1], 0)));
        let s = ModuleSpec::reversed_young(&[3, 0], 2, r(0));
        assert_eq!(s.diagram().unwrap().as_reversed_young(), Some((vec![3, 0], 0)));
    }

    #[test]
    fn rectangle_intervals_are_disjoint() {
        for n in 2..=4usize {
            for kr in 1..=3 {
                for ks in 1..=3 {
                    for lr in 1..n as i64 {
                        for ls in 1..n as i64 {
                            let nn = n as i64;
                            let i1 = (-ls.min(nn - lr) - kr, 0.min(lr - ls) + 0.min(ks - kr));
                            let i2 = (0.max(lr - ls) + 0.max(ks - kr), lr.min(nn - ls) + ks);
                            assert!(i1.1 <= i2.0 + 1, "{n} {kr} {ks} {lr} {ls}");
                        }
                    }
                }
            }
        }
    }
}
