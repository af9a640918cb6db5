use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{golden_det_8_3, golden_gram_5_2, CaseResult};
use crate::cellular::{branching_check_cell, cells, gram, gram_pseudo, gram_type_a, CellLabel};
use crate::diagram::{basis_count, basis_diagrams, GeneratorId, TLDiagram};
use crate::error::{invalid, Result};
use crate::gramdet::{
    closed_formula, closed_formula_step_holds, det_gram, det_gram_type_a, r_ratio, DetMethod, RatioPair,
};
use crate::halfdiag::{binomial, count, enumerate, CellBasis, HalfDiagram, Variant};
use crate::poly::{chebyshev_p, det_bareiss, ChebyshevTable, Poly};

const ASSOCIATIVITY_SAMPLES: usize = 200;

fn case(key: impl Into<String>, f: impl FnOnce() -> Result<Vec<String>>) -> CaseResult {
    let key = key.into();
    match f() {
        Ok(failures) if failures.is_empty() => CaseResult { key, passed: true, detail: String::new() },
        Ok(failures) => CaseResult { key, passed: false, detail: failures.join("; ") },
        Err(e) => CaseResult { key, passed: false, detail: format!("error: {e}") },
    }
}

fn expect(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn b(n: usize, k: usize) -> usize {
    binomial(n, k) as usize
}

pub(super) fn relations(max_n: usize) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = (4..=max_n).into_par_iter().map(|n| case(format!("relations n={n}"), || generator_relations(n))).collect();
    out.extend(
        (4..=max_n.min(6))
            .into_par_iter()
            .map(|n| case(format!("associativity n={n}"), || associativity(n, ASSOCIATIVITY_SAMPLES)))
            .collect::<Vec<_>>(),
    );
    out
}

fn generator_relations(n: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let gens = GeneratorId::all(n);
    let one = TLDiagram::identity(n);
    for &g in &gens {
        let e = g.diagram(n)?;
        expect(&mut failures, e.multiply(&e)? == e.clone().with_delta_power(1), || format!("{g}^2 != d {g}"));
        expect(&mut failures, one.multiply(&e)? == e && e.multiply(&one)? == e, || format!("1 is not a unit for {g}"));
        for &h in &gens {
            if g == h {
                continue;
            }
            let f = h.diagram(n)?;
            if g.adjacent(h) {
                expect(&mut failures, e.multiply(&f)?.multiply(&e)? == e, || format!("{g} {h} {g} != {g}"));
            } else {
                expect(&mut failures, e.multiply(&f)? == f.multiply(&e)?, || format!("{g} {h} != {h} {g}"));
            }
        }
    }
    Ok(failures)
}

fn associativity(n: usize, samples: usize) -> Result<Vec<String>> {
    let basis = basis_diagrams(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let [x, y, z] = [(); 3].map(|_| &basis[rng.gen_range(0..basis.len())].1);
        let left = x.multiply(y)?.multiply(z)?;
        let right = x.multiply(&y.multiply(z)?)?;
        expect(&mut failures, left == right, || format!("(xy)z != x(yz) for {x:?}, {y:?}, {z:?}"));
    }
    Ok(failures)
}

pub(super) fn order(max_n: usize) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = (1..=max_n).into_par_iter().map(|n| case(format!("enumerate n={n}"), || enumeration(n))).collect();
    if max_n >= 5 {
        out.push(case("printed order (5,2)", || {
            let (order, _) = golden_gram_5_2()?;
            let got = enumerate(5, 2, Variant::All)?;
            Ok(if got.members() == order.as_slice() { vec![] } else { vec!["order differs".into()] })
        }));
    }
    out.extend((2..=max_n.min(8)).into_par_iter().map(|n| case(format!("basis count n={n}"), || diagram_count(n))).collect::<Vec<_>>());
    out
}

fn enumeration(n: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for p in 0..=n / 2 {
        let basis = enumerate(n, p, Variant::All)?;
        expect(&mut failures, basis.len() == b(n, p), || format!("|({n},{p})| = {}", basis.len()));
        expect(&mut failures, count(n, p)? == binomial(n, p), || format!("count({n},{p}) is wrong"));
        expect(&mut failures, basis.members().windows(2).all(|w| w[0] < w[1]), || format!("({n},{p}) is not strictly increasing"));
    }
    Ok(failures)
}

fn diagram_count(n: usize) -> Result<Vec<String>> {
    let c = basis_count(n)?;
    let central = b(2 * n, n);
    let total = (n + 3) * central / (2 * (n + 1)) - 1;
    let mut failures = Vec::new();
    expect(&mut failures, c.total == total, || format!("total {} != {total}", c.total));
    expect(&mut failures, c.second_type == central / 2, || format!("second type {} != {}", c.second_type, central / 2));
    expect(&mut failures, c.first_type + c.second_type == c.total, || "first + second != total".into());
    Ok(failures)
}

pub(super) fn maps(max_n: usize) -> Vec<CaseResult> {
    let keys: Vec<(usize, usize)> = (2..=max_n).flat_map(|n| (1..=n / 2).map(move |p| (n, p))).collect();
    keys.into_par_iter().map(|(n, p)| case(format!("maps n={n} p={p}"), || map_checks(n, p))).collect()
}

/// `f` is a bijection from `domain` onto `target` that strictly preserves
/// the order.
fn order_bijection(
    name: &str,
    domain: &[HalfDiagram],
    target: &CellBasis,
    f: impl Fn(&HalfDiagram) -> Result<HalfDiagram>,
) -> Result<Option<String>> {
    if domain.len() != target.len() {
        return Ok(Some(format!("{name}: sizes {} and {}", domain.len(), target.len())));
    }
    let mut last: Option<usize> = None;
    for d in domain {
        let image = f(d)?;
        let Some(i) = target.index_of(&image) else {
            return Ok(Some(format!("{name}({d}) = {image} is outside the target")));
        };
        if last.is_some_and(|l| l >= i) {
            return Ok(Some(format!("{name} is not strictly increasing at {d}")));
        }
        last = Some(i);
    }
    Ok(None)
}

fn map_checks(n: usize, p: usize) -> Result<Vec<String>> {
    let below = enumerate(n - 1, p - 1, Variant::All)?;
    let mut failures = Vec::new();
    if n == 2 * p {
        let even = enumerate(n, p, Variant::Even)?;
        let odd = enumerate(n, p, Variant::Odd)?;
        failures.extend(order_bijection("alpha", even.members(), &odd, HalfDiagram::map_alpha)?);
        failures.extend(order_bijection("beta+", even.members(), &below, |d| d.map_beta(crate::halfdiag::Sign::Plus))?);
        failures.extend(order_bijection("beta-", odd.members(), &below, |d| d.map_beta(crate::halfdiag::Sign::Minus))?);
    } else {
        let all = enumerate(n, p, Variant::All)?;
        let domain: Vec<HalfDiagram> = all.iter().filter(|d| d.mate(n).is_some()).cloned().collect();
        failures.extend(order_bijection("gamma", &domain, &below, HalfDiagram::map_gamma)?);
    }
    Ok(failures)
}

pub(super) fn branching(max_n: usize) -> Vec<CaseResult> {
    let keys: Vec<(usize, CellLabel)> =
        (3..=max_n).flat_map(|n| cells(n).into_iter().flatten().map(move |c| (n, c))).collect();
    keys.into_par_iter()
        .map(|(n, c)| case(format!("restrict n={n} {c}"), || Ok(branching_check_cell(n, c)?.failures)))
        .collect()
}

pub(super) fn gram52() -> Vec<CaseResult> {
    vec![case("gram(5, plain:1)", || {
        let (order, entries) = golden_gram_5_2()?;
        let g = gram(5, CellLabel::Plain(1))?;
        let mut failures = Vec::new();
        expect(&mut failures, g.basis().members() == order.as_slice(), || "basis order differs".into());
        for i in 0..entries.rows() {
            for j in 0..entries.cols() {
                let (got, want) = (g.get(i, j), entries.get(i, j));
                expect(&mut failures, got == want, || format!("entry ({},{}) is {got}, expected {want}", i + 1, j + 1));
            }
        }
        Ok(failures)
    })]
}

/// Direct determinants of the one-form matrices `G(n, p)` for `2p <= n`,
/// using the pseudo matrix at `n = 2p`.
pub struct DirectDets {
    dets: HashMap<(usize, usize), Poly>,
}

impl DirectDets {
    pub fn compute(max_n: usize) -> Result<DirectDets> {
        let keys: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..=n / 2).map(move |p| (n, p))).collect();
        let dets = keys
            .into_par_iter()
            .map(|(n, p)| {
                let m = if p == 0 {
                    return Ok(((n, p), Poly::one()));
                } else if n == 2 * p {
                    gram_pseudo(p)?
                } else {
                    gram(n, CellLabel::Plain(n - 2 * p))?
                };
                Ok(((n, p), det_bareiss(m.entries())?))
            })
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(DirectDets { dets })
    }

    /// # Panics
    /// If `(n, p)` was not computed.
    pub fn get(&self, n: usize, p: usize) -> &Poly {
        &self.dets[&(n, p)]
    }
}

pub(super) fn recurrence(max_n: usize) -> Result<Vec<CaseResult>> {
    let dets = DirectDets::compute(max_n)?;
    let table = ChebyshevTable::new(max_n + 3);
    let steps: Vec<(usize, usize)> = (3..=max_n).flat_map(|n| (1..=(n - 1) / 2).map(move |p| (n, p))).collect();
    let mut out: Vec<CaseResult> = steps
        .par_iter()
        .map(|&(n, p)| {
            case(format!("step n={n} p={p}"), || {
                let m = n - 2 * p;
                let e = binomial(n - 1, p - 1) as u64;
                let lhs = dets.get(n, p) * &table.q(m + 1).pow(e);
                let rhs = dets.get(n - 1, p) * &table.q(m + 2).pow(e) * dets.get(n - 1, p - 1);
                Ok(if lhs == rhs { vec![] } else { vec!["recurrence fails".into()] })
            })
        })
        .collect();
    out.extend((1..=max_n / 2).into_par_iter().map(|p| case(format!("signed p={p}"), || signed_cells(p, &dets))).collect::<Vec<_>>());
    out.extend(
        steps
            .par_iter()
            .map(|&(n, p)| case(format!("ratio n={n} p={p}"), || ratio_step(n, p)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        steps
            .par_iter()
            .filter(|&&(n, p)| n >= 2 * p + 2)
            .map(|&(n, p)| case(format!("blocks n={n} p={p}"), || gram_block_check(n, p)))
            .collect::<Vec<_>>(),
    );
    out.extend(
        (2..=max_n)
            .into_par_iter()
            .map(|n| {
                case(format!("routes n={n}"), || {
                    let mut failures = Vec::new();
                    for c in cells(n)? {
                        let direct = det_gram(n, c, DetMethod::Direct)?.det;
                        let rec = det_gram(n, c, DetMethod::Recurrence)?.det;
                        expect(&mut failures, direct == rec, || format!("{c}: direct {direct} != recurrence {rec}"));
                    }
                    Ok(failures)
                })
            })
            .collect::<Vec<_>>(),
    );
    Ok(out)
}

fn signed_cells(p: usize, dets: &DirectDets) -> Result<Vec<String>> {
    let n = 2 * p;
    let plus = gram(n, CellLabel::ZeroPlus)?;
    let minus = gram(n, CellLabel::ZeroMinus)?;
    let below = gram(n - 1, CellLabel::Plain(1))?;
    let mut failures = Vec::new();
    expect(&mut failures, plus.entries() == minus.entries(), || "G+ and G- differ".into());
    for (i, s) in plus.basis().iter().enumerate() {
        let image = s.map_beta(crate::halfdiag::Sign::Plus)?;
        expect(&mut failures, below.basis().index_of(&image) == Some(i), || format!("beta+ moves {s}"));
    }
    expect(&mut failures, plus.entries() == &below.entries().scale(&Poly::d()), || "G+ != d G(2p-1, p-1)".into());
    let det_plus = det_bareiss(plus.entries())?;
    let half = Poly::d_pow(b(n, p) / 2) * dets.get(n - 1, p - 1);
    expect(&mut failures, det_plus == half, || format!("det G+ = {det_plus}, expected {half}"));
    expect(&mut failures, dets.get(n, p) == &(&det_plus * &det_plus), || "pseudo det != (det G+)^2".into());
    Ok(failures)
}

fn ratio_step(n: usize, p: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let r = r_ratio(n, p)?;
    expect(&mut failures, r_ratio(n + 1, p)?.same_ratio(&r.step()), || "r(n+1) != d - 1/r(n)".into());
    if n == 2 * p + 1 {
        let start = RatioPair { numerator: "d^2-2".parse()?, denominator: Poly::d() };
        expect(&mut failures, r.same_ratio(&start), || "r(2p+1, p) != d - 2/d".into());
    }
    Ok(failures)
}

/// Checks the block shape of `G(n, p)`, `n >= 2p + 2`, `p >= 1`, against
/// smaller Gram matrices. With `a = C(n-1, p)`, `b = C(n-2, p-1)` and
/// `c = C(n-2, p)`: the first `a` basis vectors have `n` isolated and their
/// block is `G(n-1, p)`; the next `b` have the arc `(n-1, n)`. Against
/// those `b` columns, rows `0..c` vanish and rows `c..a` form
/// `G(n-2, p-1)`; the top-left `b x b` corner of the last diagonal block is
/// `d G(n-2, p-1)`.
///
/// At `n = 2p + 1` no basis vector has both `n - 1` and `n` isolated, so the
/// shape differs and the check is refused.
pub fn gram_block_check(n: usize, p: usize) -> Result<Vec<String>> {
    if p == 0 || n < 2 * p + 2 {
        return Err(invalid(format!("block check needs p >= 1 and n >= 2p+2, got n={n}, p={p}")));
    }
    let g = gram(n, CellLabel::Plain(n - 2 * p))?;
    let basis = g.basis();
    let (a, bb, c) = (b(n - 1, p), b(n - 2, p - 1), b(n - 2, p));
    let prev = gram(n - 1, CellLabel::Plain(n - 1 - 2 * p))?;
    let small = gram(n - 2, CellLabel::Plain(n - 2 * p))?;
    let mut failures = Vec::new();

    for (i, s) in basis.iter().enumerate() {
        let head = i < a;
        expect(&mut failures, (s.mate(n).is_none()) == head, || format!("{s} is in the wrong block"));
        if head {
            let paired = s.mate(n - 1).is_some();
            expect(&mut failures, paired == (i >= c), || format!("{s} is in the wrong row range"));
            let pre = s.remove_last_isolated().expect("n is isolated");
            expect(&mut failures, prev.basis().index_of(&pre) == Some(i), || format!("{s} is not at its position in G(n-1, p)"));
            if i >= c {
                let lower = pre.map_gamma()?;
                expect(&mut failures, small.basis().index_of(&lower) == Some(i - c), || format!("{s} is not at its position in G(n-2, p-1)"));
            }
        } else if i < a + bb {
            expect(&mut failures, s.mate(n) == Some(n - 1), || format!("{s} should end with ({},{n})", n - 1));
            let lower = s.map_gamma()?.remove_last_isolated().expect("n-1 is freed");
            expect(&mut failures, small.basis().index_of(&lower) == Some(i - a), || format!("{s} is not at its position in G(n-2, p-1)"));
        }
    }
    if !failures.is_empty() {
        return Ok(failures);
    }
    let d = Poly::d();
    for i in 0..a {
        for j in 0..a {
            expect(&mut failures, g.get(i, j) == prev.get(i, j), || format!("G11 ({i},{j})"));
        }
        for j in a..a + bb {
            let want = if i >= c { small.get(i - c, j - a).clone() } else { Poly::zero() };
            expect(&mut failures, g.get(i, j) == &want, || format!("G12 ({i},{j})"));
        }
    }
    for i in 0..bb {
        for j in 0..bb {
            expect(&mut failures, g.get(a + i, a + j) == &(&d * small.get(i, j)), || format!("G22 ({i},{j})"));
        }
    }
    Ok(failures)
}

pub(super) fn closed(max_n: usize) -> Result<Vec<CaseResult>> {
    let dets = DirectDets::compute(max_n)?;
    let keys: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..=n / 2).map(move |p| (n, p))).collect();
    let mut out: Vec<CaseResult> = keys
        .par_iter()
        .map(|&(n, p)| {
            case(format!("closed n={n} p={p}"), || {
                let closed = closed_formula(n, p)?;
                Ok(if &closed == dets.get(n, p) { vec![] } else { vec![format!("closed {closed} != direct {}", dets.get(n, p))] })
            })
        })
        .collect();
    out.extend(
        keys.par_iter()
            .map(|&(n, p)| {
                case(format!("identity n={n} p={p}"), || {
                    Ok(if closed_formula_step_holds(n, p)? { vec![] } else { vec!["identity fails".into()] })
                })
            })
            .collect::<Vec<_>>(),
    );
    if max_n >= 8 {
        out.push(case("printed det (8, plain:2)", || {
            let want = golden_det_8_3()?;
            let mut failures = Vec::new();
            for m in DetMethod::ALL {
                let got = det_gram(8, CellLabel::Plain(2), m)?.det;
                expect(&mut failures, got == want, || format!("{m} route differs"));
            }
            Ok(failures)
        }));
    }
    Ok(out)
}

pub(super) fn type_a(max_n: usize) -> Vec<CaseResult> {
    let keys: Vec<(usize, usize)> = (2..=max_n).flat_map(|n| (0..=n / 2).map(move |p| (n, p))).collect();
    keys.into_par_iter()
        .map(|(n, p)| {
            case(format!("typea n={n} p={p}"), || {
                let mut failures = Vec::new();
                let direct = det_gram_type_a(n, p, DetMethod::Direct)?.det;
                let rec = det_gram_type_a(n, p, DetMethod::Recurrence)?.det;
                expect(&mut failures, direct == rec, || format!("direct {direct} != recurrence {rec}"));
                if p == 1 {
                    expect(&mut failures, direct == chebyshev_p(n), || "det != P_n".into());
                }
                if p >= 1 {
                    let dotted = gram(n, CellLabel::Dotted(n - 2 * p))?;
                    let plain = gram_type_a(n, p)?;
                    expect(&mut failures, dotted.basis().members() == plain.basis().members(), || "bases differ".into());
                    expect(&mut failures, dotted.entries() == &plain.entries().scale(&Poly::d()), || "dotted form != d * undecorated form".into());
                }
                Ok(failures)
            })
        })
        .collect()
}
