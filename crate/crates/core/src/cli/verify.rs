//! Verification suites behind `homalg verify`.
//!
//! Every randomized suite draws from its own ChaCha8 stream seeded with the `--seed`
//! value, and cases run in a fixed order, so a report is a function of the seed alone.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::grammar::{parse_group, render_group};
use super::presets::{all_presets, preset};
use crate::abgrp::{canonical_form, FgAbGroup};
use crate::error::{Error, Result};
use crate::exactla::{rank, IntMatrix};
use crate::grouphom::{
    four_term_report, fox_identity_residual, magnus_sequence, FpGroupPresentation, GModuleFree,
};
use crate::koszul::{
    derived_from_presentation, kos, kos_prime, presentation_from_group, tensor_complex,
    PresentationPair,
};
use crate::powerfun::{induced_map_of, norm_matrix, Functor, FunctorKind};

pub const DEFAULT_SEED: u64 = 42;
pub const KOSZUL_CASES: usize = 100;
pub const FUNCTORIALITY_CASES: usize = 200;
pub const RANDOM_PADDINGS: usize = 5;
pub const INDEPENDENCE_GROUPS: [&str; 5] = ["Z/2", "Z/4", "Z/6", "Z/2 + Z/4", "Z + Z/3"];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub budget: usize,
    /// Restricts the four-term suite to one preset.
    pub preset: Option<String>,
    /// Restricts the four-term suite to one `n`.
    pub n: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            budget: crate::grouphom::DEFAULT_BAR_BUDGET,
            preset: None,
            n: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    fn new(suite: &str, cases: Vec<CaseResult>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            passed: cases.iter().all(|c| c.passed),
            cases,
        }
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }
}

/// Turns a check into a case. Budget overruns abort the run; any other error is a
/// failed case.
fn case(name: String, check: Result<(bool, String)>) -> Result<CaseResult> {
    match check {
        Ok((passed, detail)) => Ok(CaseResult {
            name,
            passed,
            detail,
        }),
        Err(e @ Error::Resource(_)) => Err(e),
        Err(e) => Ok(CaseResult {
            name,
            passed: false,
            detail: e.to_string(),
        }),
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        BigInt::from(rng.gen_range(-bound..=bound))
    })
}

/// A product of `3n` random elementary matrices (transvections with multiplier ±1 or
/// ±2, and sign changes).
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        if i == j {
            e[(i, i)] = BigInt::from(-1);
        } else {
            let q: i64 = rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 };
            e[(i, j)] = BigInt::from(q);
        }
        u = &u * &e;
    }
    u
}

/// `H -> F` with `rank F <= max_f` and a random injective integer matrix.
pub fn random_presentation(rng: &mut impl Rng, max_f: usize) -> PresentationPair {
    let f = rng.gen_range(1..=max_f);
    let h = rng.gen_range(0..=f);
    loop {
        let m = random_matrix(rng, f, h, 5);
        if rank(&m) == h {
            return PresentationPair::new(m).expect("full column rank");
        }
    }
}

/// One or two redundant generators with random combinations, followed by random
/// unimodular changes of basis of `F` and `H`.
pub fn random_padding(rng: &mut impl Rng, p: &PresentationPair) -> Result<PresentationPair> {
    let k = rng.gen_range(1..=2);
    let combos: Vec<Vec<BigInt>> = (0..k)
        .map(|_| {
            (0..p.f_rank())
                .map(|_| BigInt::from(rng.gen_range(-3..=3)))
                .collect()
        })
        .collect();
    let padded = p.with_redundant_generators(&combos)?;
    let u_f = random_unimodular(rng, padded.f_rank());
    let u_h = random_unimodular(rng, padded.h_rank());
    padded.change_basis(&u_f, &u_h)
}

fn describe_presentation(p: &FpGroupPresentation) -> String {
    let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
    format!("<{} | {}>", p.generators().join(", "), rels.join(", "))
}

fn quadruple(a: &[&FgAbGroup]) -> String {
    let parts: Vec<String> = a.iter().map(|g| render_group(g)).collect();
    format!("({})", parts.join(", "))
}

/// `0 -> H_2n -> H_0(G, R^⊗n) -> H_1(F, R^⊗(n-1)) -> H_2n-1 -> 0` with `M = Z` on every
/// presentation of every preset; the `Z/2`, `n = 1` case must be `(0, Z, Z, Z/2)`.
pub fn four_term_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let fixtures = match &cfg.preset {
        Some(name) => vec![preset(name)?],
        None => all_presets(),
    };
    let ns = match cfg.n {
        Some(0) => return Err(Error::Input("--n must be at least 1".into())),
        Some(n) => vec![n],
        None => vec![1, 2],
    };
    let expected_z2 = [
        FgAbGroup::trivial(),
        FgAbGroup::free(1),
        FgAbGroup::free(1),
        FgAbGroup::cyclic(2),
    ];
    let mut cases = Vec::new();
    for fx in &fixtures {
        let z = GModuleFree::trivial(fx.table.clone(), 1);
        for (k, p) in fx.presentations.iter().enumerate() {
            for &n in &ns {
                let name = format!("{} {} n={n}", fx.name, describe_presentation(p));
                let check = four_term_report(p, &z, n, cfg.budget).map(|r| {
                    let terms = [&r.a, &r.b, &r.c, &r.d];
                    let order = match r.order_product_holds {
                        Some(true) => "holds",
                        Some(false) => "FAILS",
                        None => "n/a (infinite terms)",
                    };
                    let mut detail = format!(
                        "(A, B, C, D) = {}; rank sum {}; |A||C| = |B||D| {}; A into B {}",
                        quadruple(&terms),
                        r.rank_alternating_sum,
                        order,
                        if r.left_injective_holds {
                            "ok"
                        } else {
                            "FAILS"
                        },
                    );
                    let mut passed = r.passes();
                    if fx.name == "Z2" && k == 0 && n == 1 {
                        let exact = terms.iter().zip(&expected_z2).all(|(x, y)| *x == y);
                        detail.push_str(if exact {
                            "; equals (0, Z, Z, Z/2)"
                        } else {
                            "; expected (0, Z, Z, Z/2)"
                        });
                        passed &= exact;
                    }
                    (passed, detail)
                });
                cases.push(case(name, check)?);
            }
        }
    }
    Ok(SuiteReport::new("four-term", cases))
}

/// `d∘d = 0` for all three Koszul-type builders on random presentations.
pub fn koszul_d2_suite(cfg: &VerifyConfig, count: usize) -> Result<SuiteReport> {
    let mut rng = seeded_rng(cfg.seed);
    let mut cases = Vec::new();
    for i in 0..count {
        let p = random_presentation(&mut rng, 4);
        let n = rng.gen_range(1..=4);
        let name = format!("#{i} f={} h={} n={n}", p.f_rank(), p.h_rank());
        let check = {
            let mut bad = Vec::new();
            for (label, c) in [
                ("kos", kos(&p, n)),
                ("kos'", kos_prime(&p, n)),
                ("tensor", tensor_complex(&p, n)),
            ] {
                if let Err(e) = c.validate() {
                    bad.push(format!("{label}: {e}"));
                }
            }
            Ok(if bad.is_empty() {
                (true, "d∘d = 0 for kos, kos', tensor".to_string())
            } else {
                (false, bad.join("; "))
            })
        };
        cases.push(case(name, check)?);
    }
    Ok(SuiteReport::new("koszul-d2", cases))
}

/// `T(ab) = T(a)T(b)` and `T(1) = 1` for random pairs, plus the kind-specific identities:
/// `Λ^n` of an `n×n` matrix is its determinant, `Γ^n(m) = S^n(mᵀ)ᵀ`, and
/// `S^n(m)·N = N·Γ^n(m)` for the norm map `N: Γ^n -> S^n`.
pub fn functoriality_suite(cfg: &VerifyConfig, count: usize) -> Result<SuiteReport> {
    let mut rng = seeded_rng(cfg.seed);
    let mut cases = Vec::new();
    for i in 0..count {
        let kind = Functor::ALL[i % 4];
        let n = rng.gen_range(1..=4);
        let (r, s, t) = (
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
        );
        let a = random_matrix(&mut rng, t, s, 5);
        let b = random_matrix(&mut rng, s, r, 5);
        let c = random_matrix(&mut rng, n, n, 5);
        let name = format!("#{i} {kind}^{n} ({t}x{s})({s}x{r})");
        let check = {
            let mut bad = Vec::new();
            let tab = induced_map_of(kind, n, &(&a * &b));
            if tab != &induced_map_of(kind, n, &a) * &induced_map_of(kind, n, &b) {
                bad.push("T(ab) != T(a)T(b)");
            }
            let id = induced_map_of(kind, n, &IntMatrix::identity(s));
            if id != IntMatrix::identity(id.rows()) {
                bad.push("T(1) != 1");
            }
            match kind {
                Functor::Ext => {
                    let det = IntMatrix::from_fn(1, 1, |_, _| c.det().expect("square"));
                    if induced_map_of(kind, n, &c) != det {
                        bad.push("Λ^n(c) != det c");
                    }
                }
                Functor::Div => {
                    let g = induced_map_of(Functor::Div, n, &a);
                    let st = induced_map_of(Functor::Sym, n, &a.transpose()).transpose();
                    if g != st {
                        bad.push("Γ^n(a) != S^n(aᵀ)ᵀ");
                    }
                    let lhs = &induced_map_of(Functor::Sym, n, &a) * &norm_matrix(n, s);
                    let rhs = &norm_matrix(n, t) * &g;
                    if lhs != rhs {
                        bad.push("S^n(a)·N != N·Γ^n(a)");
                    }
                }
                _ => {}
            }
            let mut ok = "T(ab) = T(a)T(b), T(1) = 1".to_string();
            match kind {
                Functor::Ext => ok.push_str(", Λ^n(c) = det c"),
                Functor::Div => ok.push_str(", transpose duality, norm naturality"),
                _ => {}
            }
            Ok(if bad.is_empty() {
                (true, ok)
            } else {
                (false, bad.join("; "))
            })
        };
        cases.push(case(name, check)?);
    }
    Ok(SuiteReport::new("functoriality", cases))
}

fn render_values(v: &[FgAbGroup]) -> String {
    let parts: Vec<String> = v.iter().map(render_group).collect();
    format!("({})", parts.join(", "))
}

/// `L_i T(A)` computed from padded and randomly re-based presentations agrees with the
/// minimal presentation, and `L_0 T(A) = T(A)`.
pub fn independence_suite(cfg: &VerifyConfig, random_paddings: usize) -> Result<SuiteReport> {
    let mut rng = seeded_rng(cfg.seed);
    let mut cases = Vec::new();
    for expr in INDEPENDENCE_GROUPS {
        let a = parse_group(expr)?;
        for kind in [Functor::Sym, Functor::Ext, Functor::Tensor] {
            for n in [2, 3] {
                let f = FunctorKind::new(kind, n)?;
                let minimal = presentation_from_group(&a, 0);
                let mut presentations = vec![minimal.clone()];
                presentations.push(presentation_from_group(&a, 1));
                presentations.push(presentation_from_group(&a, 2));
                let mut padding_error = None;
                for _ in 0..random_paddings {
                    match random_padding(&mut rng, &minimal) {
                        Ok(p) => presentations.push(p),
                        Err(e) => padding_error = Some(e),
                    }
                }
                let name = format!("{kind}^{n} of {}", render_group(&a));
                let check = (|| {
                    if let Some(e) = padding_error {
                        return Err(e);
                    }
                    let base = derived_from_presentation(f, &minimal)?;
                    let mut bad = Vec::new();
                    if !base.right_exact_agrees()? {
                        bad.push(format!(
                            "L_0 = {} differs from T(A)",
                            render_group(&base.values[0])
                        ));
                    }
                    for (k, p) in presentations.iter().enumerate().skip(1) {
                        if canonical_form(p.inclusion()) != a {
                            bad.push(format!("presentation {k} presents the wrong group"));
                            continue;
                        }
                        let other = derived_from_presentation(f, p)?;
                        if other.values != base.values {
                            bad.push(format!(
                                "presentation {k} (F rank {}) gives {}",
                                p.f_rank(),
                                render_values(&other.values)
                            ));
                        }
                    }
                    Ok(if bad.is_empty() {
                        (
                            true,
                            format!(
                                "L_* = {} across {} presentations",
                                render_values(&base.values),
                                presentations.len()
                            ),
                        )
                    } else {
                        (false, bad.join("; "))
                    })
                })();
                cases.push(case(name, check)?);
            }
        }
    }
    Ok(SuiteReport::new("independence", cases))
}

/// Fox identity on every relator, relation-module rank `|G|·|S| - |G| + 1` and
/// surjectivity of `σ`, for every bundled presentation.
pub fn magnus_suite() -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for fx in all_presets() {
        for p in &fx.presentations {
            let name = format!("{} {}", fx.name, describe_presentation(p));
            let check = {
                let g = fx.table.order();
                let m = magnus_sequence(p);
                let fox_ok = p.relators().iter().all(|r| {
                    fox_identity_residual(r, p)
                        .iter()
                        .all(|x| x == &BigInt::from(0))
                });
                let expected = g * p.generator_count() - g + 1;
                let rank_ok = m.relation_module.rank() == expected;
                let onto = canonical_form(&m.sigma).is_trivial();
                Ok((
                    fox_ok && rank_ok && onto,
                    format!(
                        "Fox identity {}; rank R_ab = {} (expected {expected}); σ {}",
                        if fox_ok { "holds" } else { "FAILS" },
                        m.relation_module.rank(),
                        if onto { "onto" } else { "NOT onto" }
                    ),
                ))
            };
            cases.push(case(name, check)?);
        }
    }
    Ok(SuiteReport::new("magnus", cases))
}
