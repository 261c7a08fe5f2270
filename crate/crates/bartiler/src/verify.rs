//! Named invariant suites: each check exercises one cross-validation between
//! independent routes (closed forms, determinants, brute-force enumeration,
//! signed tableau counts) and reports the first counterexample on failure.
//! The `quick` level bounds parameters for fast runs; `full` covers the
//! complete documented ranges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comb::{c_closed, canonical_form, enumerate_oc, f_poly, palpha, s_stat, FnRoute};
use crate::gf::multilinear::{phi_rec, phi_set};
use crate::gf::{
    adjugate, build_a, det_poly, f_main, hadamard_rational, phi, u_rational, v_rational, PolyMatrix,
};
use crate::oracle::{
    ar_narrow_count, count_tilings, empirical_series, enumerate_tilings, fault_predicates,
    graham_fault_free_exists, is_vertically_fault_free, klarner_tileable,
    vertical_bars_in_k_contiguous_rows, CensusKind,
};
use crate::poly::{hadamard_product, rational_to_series, series_invert, BiPoly, RationalGF, XPoly};
use crate::symfunc::{
    all_partitions, amu_coefficients, denominator_from_srht, e_mu, elementary_symmetric,
    enumerate_asc, frob_condition, inverse_kostka, pairwise_product_e, schur_eval, srht_enumerate,
    Partition,
};
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "quick" => Some(Level::Quick),
            "full" => Some(Level::Full),
            _ => None,
        }
    }

    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Fn,
    Det,
    Hadamard,
    Oracle,
    Srht,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "fn" => Some(Suite::Fn),
            "det" => Some(Suite::Det),
            "hadamard" => Some(Suite::Hadamard),
            "oracle" => Some(Suite::Oracle),
            "srht" => Some(Suite::Srht),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

/// One named invariant check: `detail` holds the covered range on success and
/// the first counterexample on failure.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, scope: String, witness: Option<String>) -> Check {
    match witness {
        None => Check {
            name: name.to_string(),
            passed: true,
            detail: scope,
        },
        Some(w) => Check {
            name: name.to_string(),
            passed: false,
            detail: w,
        },
    }
}

/// Runs the named suite and returns its checks in order.
pub fn run(suite: Suite, level: Level) -> Vec<Check> {
    match suite {
        Suite::Fn => suite_fn(level),
        Suite::Det => suite_det(level),
        Suite::Hadamard => suite_hadamard(level),
        Suite::Oracle => suite_oracle(level),
        Suite::Srht => suite_srht(level),
        Suite::All => {
            let mut out = suite_fn(level);
            out.extend(suite_det(level));
            out.extend(suite_hadamard(level));
            out.extend(suite_oracle(level));
            out.extend(suite_srht(level));
            out
        }
    }
}

fn seeded_tuples(len: usize, count: usize, seed: u64) -> Vec<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| BigInt::from(rng.gen_range(-9..=9i64)))
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------- fn suite

fn suite_fn(level: Level) -> Vec<Check> {
    let mut out = Vec::new();
    let n_routes = level.pick(9u32, 12);
    let n_small = level.pick(8u32, 10);

    let mut w = None;
    for n in 0..=n_routes {
        if f_poly(n, FnRoute::Closed) != f_poly(n, FnRoute::Combinatorial) {
            w = Some(format!("routes disagree at N={n}"));
            break;
        }
    }
    out.push(check(
        "closed and combinatorial routes agree",
        format!("N <= {n_routes}"),
        w,
    ));

    let mut w = None;
    'nf: for n in 1..=n_small {
        for alpha in enumerate_oc(n) {
            let canon = canonical_form(n, &alpha).expect("enumerated composition is valid");
            if canonical_form(n, &canon).expect("valid") != canon {
                w = Some(format!("normal form not idempotent at N={n}, {alpha:?}"));
                break 'nf;
            }
            if s_stat(n, &canon).unwrap() != s_stat(n, &alpha).unwrap()
                || canon.len() != alpha.len()
            {
                w = Some(format!("normal form broke invariants at N={n}, {alpha:?}"));
                break 'nf;
            }
        }
    }
    out.push(check(
        "normal form preserves statistic and length",
        format!("N <= {n_small}, exhaustive"),
        w,
    ));

    let mut w = None;
    'len: for n in 1..=n_small {
        for alpha in enumerate_oc(n) {
            let s = s_stat(n, &alpha).unwrap();
            if alpha.len() as u64 != 2 * s / (u64::from(n) + 1) {
                w = Some(format!("length formula fails at N={n}, {alpha:?}"));
                break 'len;
            }
        }
    }
    out.push(check(
        "length recoverable from the statistic",
        format!("N <= {n_small}, exhaustive"),
        w,
    ));

    let mut w = None;
    'cnt: for n in 1..=n_small {
        let mut counts = vec![0i64; (n * (n + 1) / 2 + 1) as usize];
        for alpha in enumerate_oc(n) {
            counts[s_stat(n, &alpha).unwrap() as usize] += 1;
        }
        for (s, &c) in counts.iter().enumerate() {
            let closed = c_closed(s as u64, n).unwrap();
            if closed.abs() != BigInt::from(c) {
                w = Some(format!(
                    "coefficient magnitude at N={n}, s={s}: closed {closed}, count {c}"
                ));
                break 'cnt;
            }
        }
    }
    out.push(check(
        "coefficient magnitudes count compositions",
        format!("N <= {n_small}"),
        w,
    ));

    let mut w = None;
    for n in 0..=12u32 {
        let expect = (n * (n + 1) / 2) as usize;
        if f_poly(n, FnRoute::Closed).deg() != Some(expect) {
            w = Some(format!("degree at N={n} is not {expect}"));
            break;
        }
    }
    out.push(check(
        "triangular top degree attained",
        "N <= 12".to_string(),
        w,
    ));

    out
}

// --------------------------------------------------------------- det suite

fn m_matrix(r: u32, assignment: &[XPoly]) -> PolyMatrix {
    assert_eq!(assignment.len(), r as usize);
    let dim = r as usize;
    let rows = (1..=dim)
        .map(|i| {
            (1..=dim)
                .map(|j| {
                    if i + j >= dim + 1 {
                        assignment[j - 1].clone()
                    } else {
                        XPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows)
}

fn suite_det(level: Level) -> Vec<Check> {
    let mut out = Vec::new();
    let k_max = level.pick(5u32, 7);
    let r_max = level.pick(6u32, 8);

    let mut w = None;
    for k in 2..=k_max {
        let det = det_poly(&build_a(k).identity_minus());
        let f = f_poly(k - 1, FnRoute::Closed)
            .substitute_a_one()
            .substitute_b_pow(k);
        if det != f {
            w = Some(format!("determinant differs from closed form at k={k}"));
            break;
        }
    }
    out.push(check(
        "transfer determinant equals closed form",
        format!("k = 2..{k_max}"),
        w,
    ));

    let mut w = None;
    for r in 1..=r_max {
        // one monomial per variable with power-of-two exponents: subset sums
        // are distinct, so the multilinear identity survives instantiation
        let assignment: Vec<XPoly> = (0..r)
            .map(|i| XPoly::constant(BiPoly::monomial_i64(1, 0, 1 << i)))
            .collect();
        let det = det_poly(&m_matrix(r, &assignment).identity_minus());
        if det != phi(r, &assignment) {
            w = Some(format!("multivariate determinant differs at r={r}"));
            break;
        }
    }
    out.push(check(
        "multivariate determinant equals signed subset sum",
        format!("r = 1..{r_max}"),
        w,
    ));

    let mut w = None;
    for r in 3..=r_max {
        if phi_rec(r) != phi_set(r) {
            w = Some(format!("recursion differs from direct sum at r={r}"));
            break;
        }
    }
    out.push(check(
        "subset-sum recursion agrees with direct expansion",
        format!("r = 3..{r_max}"),
        w,
    ));

    out
}

// ---------------------------------------------------------- hadamard suite

fn trim_poly(v: &mut Vec<BigRational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Euclidean gcd in Q[x]; an empty vector is the zero polynomial.
fn gcd_qx(mut f: Vec<BigRational>, mut g: Vec<BigRational>) -> Vec<BigRational> {
    trim_poly(&mut f);
    trim_poly(&mut g);
    while !g.is_empty() {
        let dg = g.len() - 1;
        let lead = g[dg].clone();
        while f.len() > dg {
            let df = f.len() - 1;
            let c = &f[df] / &lead;
            for i in 0..dg {
                let idx = df - dg + i;
                let sub = &c * &g[i];
                f[idx] -= sub;
            }
            f.pop();
            trim_poly(&mut f);
        }
        std::mem::swap(&mut f, &mut g);
    }
    f
}

/// Auxiliary numerator of the transfer route at `a = 1`:
/// `v · A · adj(I − A) · 1`, a polynomial in b and x only.
fn transfer_numerator(k: u32) -> XPoly {
    let a = build_a(k);
    let dim = a.dim();
    let adj = adjugate(&a.identity_minus());
    let v: Vec<XPoly> = (1..=dim)
        .map(|j| XPoly::monomial(BiPoly::monomial_i64(1, 0, k), j))
        .collect();
    let w: Vec<XPoly> = (0..dim)
        .map(|col| {
            let mut acc = XPoly::zero();
            for (i, vi) in v.iter().enumerate() {
                acc = acc.add(&vi.mul(a.entry(i, col)));
            }
            acc
        })
        .collect();
    let mut p = XPoly::zero();
    for (i, wi) in w.iter().enumerate() {
        for j in 0..dim {
            p = p.add(&wi.mul(adj.entry(i, j)));
        }
    }
    p
}

fn suite_hadamard(level: Level) -> Vec<Check> {
    let mut out = Vec::new();

    let (sq_n, sq_t) = level.pick((3u32, 15usize), (5, 30));
    let mut w = None;
    for n in 2..=sq_n {
        let p = XPoly::one()
            .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 1, 0), 1))
            .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 0, 1), n as usize));
        let base = series_invert(&p, sq_t).expect("constant term 1");
        let squared = hadamard_product(&base, &base).expect("equal truncation");
        let closed = match hadamard_rational(n) {
            Ok(r) => rational_to_series(&r, sq_t),
            Err(e) => {
                w = Some(format!("construction failed at N={n}: {e}"));
                break;
            }
        };
        if let Some(bad) = (0..=sq_t).find(|&t| squared.coeff(t) != closed.coeff(t)) {
            w = Some(format!("squared series differs at N={n}, x^{bad}"));
            break;
        }
    }
    out.push(check(
        "diagonal square matches closed form",
        format!("N = 2..{sq_n}, order {sq_t}"),
        w,
    ));

    let (bl_k, bl_t) = level.pick((3u32, 10usize), (4, 20));
    let mut w = None;
    for k in 2..=bl_k {
        let v = match v_rational(k) {
            Ok(v) => v,
            Err(e) => {
                w = Some(format!("block construction failed at k={k}: {e}"));
                break;
            }
        };
        let block = RationalGF::new(v.den().clone(), v.den().sub(v.num()))
            .expect("denominator keeps constant term 1");
        let left = rational_to_series(&block, bl_t);
        let closed = match hadamard_rational(k) {
            Ok(h) => {
                let r = RationalGF::new(h.num().substitute_b_pow(k), h.den().substitute_b_pow(k))
                    .expect("substitution keeps constant term 1");
                rational_to_series(&r, bl_t)
            }
            Err(e) => {
                w = Some(format!("construction failed at k={k}: {e}"));
                break;
            }
        };
        if let Some(bad) = (0..=bl_t).find(|&t| left.coeff(t) != closed.coeff(t)) {
            w = Some(format!("block series differs at k={k}, x^{bad}"));
            break;
        }
    }
    out.push(check(
        "geometric block sum matches diagonal square",
        format!("k = 2..{bl_k}, order {bl_t}"),
        w,
    ));

    let mut w = None;
    for n in 2..=4u32 {
        match hadamard_rational(n) {
            Ok(h) => {
                let f = f_poly(n - 1, FnRoute::Closed);
                if h.num().div_exact(&f).is_none() {
                    w = Some(format!("reconstructed denominator not divisible at N={n}"));
                    break;
                }
            }
            Err(e) => {
                w = Some(format!("construction failed at N={n}: {e}"));
                break;
            }
        }
    }
    out.push(check(
        "inverted-sum denominator divisibility",
        "N = 2..4".to_string(),
        w,
    ));

    let mut w = None;
    for n in 2..=5u32 {
        let expect = ((n - 1) * n / 2) as usize;
        match hadamard_rational(n) {
            Ok(h) => {
                if h.num().deg() != Some(expect) {
                    w = Some(format!("numerator degree at N={n} is not {expect}"));
                    break;
                }
            }
            Err(e) => {
                w = Some(format!("construction failed at N={n}: {e}"));
                break;
            }
        }
    }
    out.push(check(
        "numerator degree is the triangular bound",
        "N = 2..5".to_string(),
        w,
    ));

    let trials = level.pick(5u32, 20);
    let mut w = None;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_C090);
    'cop: for k in 2..=5u32 {
        let p = transfer_numerator(k);
        let q = det_poly(&build_a(k).identity_minus());
        for t in 0..trials {
            let mut numer = 0i64;
            while numer == 0 {
                numer = rng.gen_range(-9..=9i64);
            }
            let denom = rng.gen_range(1..=9i64);
            let b = BigRational::new(BigInt::from(numer), BigInt::from(denom));
            let one = BigRational::one();
            let g = gcd_qx(p.eval_ab_rational(&one, &b), q.eval_ab_rational(&one, &b));
            if g.len() != 1 {
                w = Some(format!(
                    "common factor of degree {} at k={k}, trial {t}, b={b}",
                    g.len().saturating_sub(1)
                ));
                break 'cop;
            }
        }
    }
    out.push(check(
        "transfer numerator and determinant are coprime",
        format!("k = 2..5, {trials} rational samples"),
        w,
    ));

    out
}

// ----------------------------------------------------------- oracle suite

fn swap_ab(p: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (&(da, db), c) in p.terms() {
        out.add_term(db, da, c);
    }
    out
}

fn suite_oracle(level: Level) -> Vec<Check> {
    let mut out = Vec::new();

    let ranges: &[(u32, usize)] = level.pick(
        &[(2u32, 6usize), (3, 4)][..],
        &[(2, 12), (3, 9), (4, 8)][..],
    );
    let mut w = None;
    'master: for &(k, n_max) in ranges {
        let gf = match f_main(k) {
            Ok(g) => g,
            Err(e) => {
                w = Some(format!("construction failed at k={k}: {e}"));
                break;
            }
        };
        let series = rational_to_series(&gf, n_max);
        for n in 0..=n_max {
            let dp = match count_tilings(2 * k, n as u32, k) {
                Ok(p) => p,
                Err(e) => {
                    w = Some(format!("sweep failed at k={k}, n={n}: {e}"));
                    break 'master;
                }
            };
            if *series.coeff(n) != dp {
                w = Some(format!("series and sweep disagree at k={k}, n={n}"));
                break 'master;
            }
        }
    }
    let scope = ranges
        .iter()
        .map(|(k, n)| format!("k={k}: n <= {n}"))
        .collect::<Vec<_>>()
        .join(", ");
    out.push(check("rational series matches column sweep", scope, w));

    let side = level.pick(5u32, 6);
    let mut w = None;
    'hom: for k in 1..=4u32 {
        for m in 0..=side {
            for n in 0..=side {
                let p = count_tilings(m, n, k).expect("small sweep");
                if p.is_zero() {
                    continue;
                }
                if p.homogeneous_degree() != Some(m * n / k) {
                    w = Some(format!("inhomogeneous count at m={m}, n={n}, k={k}"));
                    break 'hom;
                }
            }
        }
    }
    out.push(check(
        "weighted counts are homogeneous",
        format!("m,n <= {side}, k <= 4"),
        w,
    ));

    let side = level.pick(6u32, 8);
    let mut w = None;
    'tr: for k in 1..=3u32 {
        for m in 0..=side {
            for n in 0..=m {
                let p = count_tilings(m, n, k).expect("small sweep");
                let q = count_tilings(n, m, k).expect("small sweep");
                if p != swap_ab(&q) {
                    w = Some(format!("transpose duality fails at m={m}, n={n}, k={k}"));
                    break 'tr;
                }
            }
        }
    }
    out.push(check(
        "transpose swaps the two weights",
        format!("m,n <= {side}, k <= 3"),
        w,
    ));

    let side = level.pick(6u32, 8);
    let mut w = None;
    'kl: for k in 1..=4u32 {
        for m in 1..=side {
            for n in 1..=side {
                let nonzero = !count_tilings(m, n, k).expect("small sweep").is_zero();
                if nonzero != klarner_tileable(m, n, k) {
                    w = Some(format!("tileability mismatch at m={m}, n={n}, k={k}"));
                    break 'kl;
                }
            }
        }
    }
    out.push(check(
        "divisibility criterion matches the sweep",
        format!("m,n <= {side}, k <= 4"),
        w,
    ));

    let side = level.pick(4u32, 6);
    let mut w = None;
    'enumch: for k in 1..=3u32 {
        for m in 1..=side {
            for n in 1..=side {
                if k == 1 && m * n > 12 {
                    continue; // unit bars: 2^(mn) tilings, enumeration blows up
                }
                let listed = enumerate_tilings(m, n, k).expect("within cap");
                let mut total = BiPoly::zero();
                for t in &listed {
                    total = total.add(&t.weight());
                }
                if total != count_tilings(m, n, k).expect("small sweep") {
                    w = Some(format!("enumeration differs at m={m}, n={n}, k={k}"));
                    break 'enumch;
                }
            }
        }
    }
    out.push(check(
        "explicit enumeration reproduces the sweep",
        format!("m,n <= {side}, k <= 3"),
        w,
    ));

    let mut w = None;
    'census: for k in 2..=3u32 {
        let n_max = level.pick(if k == 2 { 5 } else { 4 }, if k == 2 { 6 } else { 5 });
        let v = match v_rational(k) {
            Ok(v) => v,
            Err(e) => {
                w = Some(format!("block construction failed at k={k}: {e}"));
                break;
            }
        };
        let vs = rational_to_series(&v, n_max);
        let us = rational_to_series(&u_rational(k), n_max);
        for n in 1..=n_max {
            let central =
                empirical_series(CensusKind::CentralAndVff, k, n as u32).expect("within cap");
            if *vs.coeff(n) != central {
                w = Some(format!("central block census differs at k={k}, n={n}"));
                break 'census;
            }
            let skew = empirical_series(CensusKind::VffNoCentral, k, n as u32).expect("within cap");
            if *us.coeff(n) != skew {
                w = Some(format!("uncut block census differs at k={k}, n={n}"));
                break 'census;
            }
        }
    }
    out.push(check(
        "block series match the brute-force census",
        "k = 2..3".to_string(),
        w,
    ));

    let mut w = None;
    let fixed: &[(u32, u32, u32, u32, bool)] = &[
        (4, 5, 2, 1, false),
        (4, 8, 2, 1, false),
        (6, 7, 3, 1, false),
        (6, 6, 1, 2, false),
        (5, 6, 1, 2, true),
        (5, 6, 2, 3, false),
        (14, 15, 2, 3, true),
    ];
    for &(m, n, k1, k2, expect) in fixed {
        match graham_fault_free_exists(m, n, k1, k2) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                w = Some(format!(
                    "predicate({m},{n},{k1},{k2}) = {got}, expected {expect}"
                ));
                break;
            }
            Err(e) => {
                w = Some(format!("predicate({m},{n},{k1},{k2}) errored: {e}"));
                break;
            }
        }
    }
    if w.is_none() && level == Level::Full {
        'gr: for k in 2..=3u32 {
            for m in 2..=6u32 {
                for n in 2..=6u32 {
                    if m * n <= k {
                        continue;
                    }
                    let claims = graham_fault_free_exists(m, n, 1, k).expect("precondition holds");
                    let found = enumerate_tilings(m, n, k)
                        .expect("within cap")
                        .iter()
                        .any(|t| {
                            let f = fault_predicates(t);
                            f.vertical.is_empty() && f.horizontal.is_empty()
                        });
                    if claims != found {
                        w = Some(format!(
                            "predicate {claims} but search {found} at {m}x{n}, bar {k}"
                        ));
                        break 'gr;
                    }
                }
            }
        }
    }
    out.push(check(
        "fault-free existence predicate",
        level.pick(
            "fixed cases".to_string(),
            "fixed cases + exhaustive m,n <= 6 vs search".to_string(),
        ),
        w,
    ));

    let ell_max = level.pick(2u32, 3);
    let mut w = None;
    'banded: for k in 2..=3u32 {
        for m in k + 1..2 * k {
            for ell in 1..=ell_max {
                let n = k * ell;
                for t in enumerate_tilings(m, n, k).expect("within cap") {
                    if is_vertically_fault_free(&t) && !vertical_bars_in_k_contiguous_rows(&t) {
                        w = Some(format!("scattered vertical bars at {m}x{n}, bar {k}"));
                        break 'banded;
                    }
                }
            }
        }
    }
    out.push(check(
        "narrow fault-free tilings keep vertical bars banded",
        format!("k = 2..3, k < m < 2k, width <= {ell_max}k"),
        w,
    ));

    let mut w = None;
    'narrow: for k in 2..=3u32 {
        for m in k..2 * k {
            for ell in 0..=3u32 {
                let formula = ar_narrow_count(m, ell, k).expect("narrow regime");
                let sweep = count_tilings(m, k * ell, k)
                    .expect("small sweep")
                    .eval(&BigInt::one(), &BigInt::one());
                if formula != sweep {
                    w = Some(format!("narrow count differs at m={m}, l={ell}, k={k}"));
                    break 'narrow;
                }
            }
        }
    }
    out.push(check(
        "narrow closed count matches the sweep",
        "k = 2..3, k <= m < 2k, l <= 3".to_string(),
        w,
    ));

    out
}

// ------------------------------------------------------------- srht suite

fn suite_srht(level: Level) -> Vec<Check> {
    let mut out = Vec::new();

    let basics_n = level.pick(10u32, 14);
    let mut w = None;
    'basics: for n in 0..=basics_n {
        for p in all_partitions(n) {
            let c = p.conjugate();
            if c.conjugate() != p || c.rank() != p.rank() || p.is_threshold() != c.is_asc() {
                w = Some(format!("partition basics fail at {p:?}"));
                break 'basics;
            }
        }
    }
    out.push(check(
        "conjugation involution and rank duality",
        format!("|shape| <= {basics_n}, exhaustive"),
        w,
    ));

    let asc_n = level.pick(12u32, 16);
    let mut w = None;
    for two_n in (0..=asc_n).step_by(2) {
        let mut built = enumerate_asc(two_n).expect("even target");
        built.sort();
        let mut filtered: Vec<Partition> = all_partitions(two_n)
            .into_iter()
            .filter(Partition::is_asc)
            .collect();
        filtered.sort();
        if built != filtered {
            w = Some(format!("shape enumeration differs at size {two_n}"));
            break;
        }
    }
    out.push(check(
        "near-self-conjugate enumeration matches the predicate",
        format!("size <= {asc_n}"),
        w,
    ));

    let kostka_n = level.pick(6u32, 8);
    let mut w = None;
    'invk: for n in 1..=kostka_n {
        let mus = all_partitions(n);
        for lambda in all_partitions(n) {
            for gamma in seeded_tuples(4, 2, 40 + u64::from(n)) {
                let es = elementary_symmetric(&gamma);
                let mut rhs = BigInt::zero();
                for mu in &mus {
                    let c = inverse_kostka(mu, &lambda).expect("sizes match");
                    if c != 0 {
                        rhs += BigInt::from(c) * e_mu(&es, mu.parts());
                    }
                }
                if schur_eval(&lambda.conjugate(), &gamma) != rhs {
                    w = Some(format!("inverse expansion fails at {lambda:?}, {gamma:?}"));
                    break 'invk;
                }
            }
        }
    }
    out.push(check(
        "signed tableau counts invert the Kostka matrix",
        format!("|shape| <= {kostka_n}, seeded numeric"),
        w,
    ));

    let thr_s = level.pick(3u32, 4);
    let mut w = None;
    'thr: for s in 0..=thr_s {
        let thresholds: Vec<Partition> = all_partitions(2 * s)
            .into_iter()
            .filter(Partition::is_threshold)
            .collect();
        for gamma in seeded_tuples(4, 5, 77 + u64::from(s)) {
            let mut rhs = BigInt::zero();
            for lambda in &thresholds {
                rhs += schur_eval(lambda, &gamma);
            }
            if pairwise_product_e(&gamma, s as usize) != rhs {
                w = Some(format!("threshold sum fails at s={s}, {gamma:?}"));
                break 'thr;
            }
        }
    }
    out.push(check(
        "pair plethysm equals the threshold Schur sum",
        format!("s <= {thr_s}, seeded numeric"),
        w,
    ));

    let uniq_n = level.pick(12u32, 16);
    let mut w = None;
    'uniq: for two_n in (2..=uniq_n).step_by(2) {
        for lambda in enumerate_asc(two_n).expect("even target") {
            let d = lambda.rank() as u32;
            for k in 2..=5u32 {
                for q in 0..=two_n / k {
                    let ones = two_n - k * q;
                    let mut parts = vec![k; q as usize];
                    parts.extend(std::iter::repeat(1).take(ones as usize));
                    let mu = Partition::new(parts).expect("decreasing");
                    let found = srht_enumerate(&lambda, &mu).expect("sizes match");
                    if q != d && !found.is_empty() {
                        w = Some(format!(
                            "hook content with q={q} != rank {d} admits a tableau at {lambda:?}"
                        ));
                        break 'uniq;
                    }
                    if q == d {
                        let predicted = frob_condition(&lambda, k).expect("shape qualifies");
                        if predicted != !found.is_empty() || (predicted && found.len() != 1) {
                            w = Some(format!(
                                "arm inequalities disagree with tableaux at {lambda:?}, k={k}"
                            ));
                            break 'uniq;
                        }
                    }
                }
            }
        }
    }
    out.push(check(
        "hook contents force the rank and a unique tableau",
        format!("size <= {uniq_n}, k <= 5, exhaustive"),
        w,
    ));

    let mut w = None;
    'pleth: for k in 3..=5u32 {
        let s_max = level.pick(3.min(k * (k - 1) / 2), k * (k - 1) / 2);
        for s in 0..=s_max {
            let amu = amu_coefficients(s);
            for (t, gamma) in seeded_tuples(k as usize, 5, 900 + u64::from(k))
                .iter()
                .enumerate()
            {
                let es = elementary_symmetric(gamma);
                let mut rhs = BigInt::zero();
                for (mu, c) in &amu {
                    rhs += c * e_mu(&es, mu);
                }
                if pairwise_product_e(gamma, s as usize) != rhs {
                    w = Some(format!("expansion fails at k={k}, s={s}, trial {t}"));
                    break 'pleth;
                }
            }
        }
    }
    out.push(check(
        "elementary expansion of the pair plethysm",
        level.pick(
            "k = 3..5, s <= 3, 5 seeded tuples".to_string(),
            "k = 3..5, all s, 5 seeded tuples".to_string(),
        ),
        w,
    ));

    let den_k = level.pick(4u32, 6);
    let mut w = None;
    for k in 2..=den_k {
        if denominator_from_srht(k) != f_poly(k - 1, FnRoute::Closed).negate_b() {
            w = Some(format!("rebuilt denominator differs at k={k}"));
            break;
        }
    }
    out.push(check(
        "tableau signs rebuild the closed denominator",
        format!("k = 2..{den_k}"),
        w,
    ));

    let mut w = None;
    'bij: for k in 2..=6u32 {
        for s in 0..=k * (k - 1) / 2 {
            let shapes: Vec<Partition> = enumerate_asc(2 * s)
                .expect("even target")
                .into_iter()
                .filter(|l| frob_condition(l, k).expect("shape qualifies"))
                .collect();
            let comps: Vec<Vec<u32>> = enumerate_oc(k - 1)
                .into_iter()
                .filter(|alpha| s_stat(k - 1, alpha).unwrap() == u64::from(s))
                .collect();
            if shapes.len() != comps.len() {
                w = Some(format!(
                    "cardinalities differ at k={k}, s={s}: {} shapes, {} compositions",
                    shapes.len(),
                    comps.len()
                ));
                break 'bij;
            }
            // refined: Frobenius arm sets are exactly the composition images
            let arm_sets: BTreeSet<BTreeSet<u32>> = shapes
                .iter()
                .map(|l| l.frobenius().0.into_iter().collect())
                .collect();
            let comp_sets: BTreeSet<BTreeSet<u32>> = comps
                .iter()
                .map(|alpha| palpha(k - 1, alpha).expect("enumerated composition is valid"))
                .collect();
            if arm_sets != comp_sets || arm_sets.len() != shapes.len() {
                w = Some(format!("arm sets differ from images at k={k}, s={s}"));
                break 'bij;
            }
        }
    }
    out.push(check(
        "qualifying shapes biject with odd compositions",
        "k = 2..6, all statistics".to_string(),
        w,
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_all_pass() {
        for suite in [Suite::Fn, Suite::Det, Suite::Hadamard, Suite::Srht] {
            for c in run(suite, Level::Quick) {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn quick_oracle_suite_passes() {
        for c in run(Suite::Oracle, Level::Quick) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!(Suite::parse("all"), Some(Suite::All));
        assert_eq!(Suite::parse("fn"), Some(Suite::Fn));
        assert_eq!(Suite::parse("nonsense"), None);
        assert_eq!(Level::parse("quick"), Some(Level::Quick));
        assert_eq!(Level::parse("full"), Some(Level::Full));
        assert_eq!(Level::parse(""), None);
    }
}
