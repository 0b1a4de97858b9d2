//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use common::minor_gcd;
use homalg::abgrp::{canonical_form, iso_test, FgAbGroup};
use homalg::cli::verify::{
    four_term_suite, functoriality_suite, independence_suite, koszul_d2_suite, magnus_suite,
    random_matrix, seeded_rng, SuiteReport, VerifyConfig, FUNCTORIALITY_CASES, KOSZUL_CASES,
    RANDOM_PADDINGS,
};
use homalg::exactla::{snf, IntMatrix};
use homalg::grouphom::{
    four_term_report, homology_bar, homology_cyclic, FiniteGroupTable, FpGroupPresentation,
    GModuleFree, DEFAULT_BAR_BUDGET,
};
use homalg::koszul::{derived, model_complex, PresentationPair};
use homalg::powerfun::{dim_of, Functor, FunctorKind};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_outcome(r: SuiteReport) -> Outcome {
    match r.cases.iter().find(|c| !c.passed) {
        None => Ok(format!("{} cases", r.cases.len())),
        Some(c) => Err(format!(
            "{} of {} failed, first: {}: {}",
            r.failures(),
            r.cases.len(),
            c.name,
            c.detail
        )),
    }
}

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

/// 500 random matrices up to 8×8 with entries in [-100, 100].
fn snf_suite() -> Outcome {
    let mut rng = seeded_rng(42);
    let mut minor_checks = 0;
    for case in 0..500 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let a = random_matrix(&mut rng, r, c, 100);
        let s = snf(&a);
        ensure((&(&s.u * &a) * &s.v) == s.d, || {
            format!("#{case}: U·A·V != D")
        })?;
        ensure(
            s.u.det().unwrap().abs().is_one() && s.v.det().unwrap().abs().is_one(),
            || format!("#{case}: transform not unimodular"),
        )?;
        let off_diagonal_zero = (0..r).all(|i| (0..c).all(|j| i == j || s.d[(i, j)].is_zero()));
        let diag = s.diagonal();
        let nz = diag.iter().take_while(|x| !x.is_zero()).count();
        let chain = diag[nz..].iter().all(Zero::is_zero)
            && diag.iter().all(|x| !x.is_negative())
            && diag[..nz].windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        ensure(off_diagonal_zero && chain, || {
            format!("#{case}: not in divisibility-chain form")
        })?;
        if r <= 5 && c <= 5 {
            let mut prod = BigInt::one();
            for k in 1..=diag.len() {
                prod *= &diag[k - 1];
                ensure(prod == minor_gcd(&a, k), || {
                    format!("#{case}: d_1..d_{k} != gcd of {k}x{k} minors")
                })?;
            }
            minor_checks += 1;
        }
    }
    Ok(format!(
        "500 matrices, {minor_checks} checked against minors"
    ))
}

fn fk(k: Functor, n: usize) -> FunctorKind {
    FunctorKind::new(k, n).unwrap()
}

/// `L(S^2)(Z/m) = (Z/m, 0)`, `L(Λ^2)(Z/m) = (0, Z/m)`, `L(⊗^2)(Z/m) = (Z/m, Z/m)`, each
/// checked against the rank-one complex written out by hand; free groups have no
/// higher derived functors.
fn derived_ground_truth() -> Outcome {
    let mut checks = 0;
    for m in [2i64, 3, 4, 6] {
        let p = PresentationPair::new(IntMatrix::from_rows(&[vec![m]])).unwrap();
        let a = FgAbGroup::cyclic(m as u64);
        // By hand, with F = Z f and H = Z h, ι(h) = m f:
        //   S^2:  Λ^1H⊗S^1F -> S^2F,     h⊗f ↦ m f^2                 so d_1 = [m]
        //   Λ^2:  Γ^2H -> Γ^1H⊗Λ^1F,     γ2(h) ↦ h⊗ι(h) = m h⊗f       so d_2 = [m]
        //   ⊗^2:  H⊗H -> H⊗F ⊕ F⊗H -> F⊗F, d_2 = [-m; m], d_1 = [m m]
        let hand: [(Functor, Vec<IntMatrix>); 3] = [
            (
                Functor::Sym,
                vec![IntMatrix::from_rows(&[vec![m]]), IntMatrix::zeros(1, 0)],
            ),
            (
                Functor::Ext,
                vec![IntMatrix::zeros(0, 1), IntMatrix::from_rows(&[vec![m]])],
            ),
            (
                Functor::Tensor,
                vec![
                    IntMatrix::from_rows(&[vec![m, m]]),
                    IntMatrix::from_rows(&[vec![-m], vec![m]]),
                ],
            ),
        ];
        for (kind, diffs) in hand {
            let f = fk(kind, 2);
            let complex = model_complex(f, &p).unwrap();
            ensure(complex.differentials() == &diffs[..], || {
                format!("{kind}^2 on Z/{m}: differentials differ from the hand computation")
            })?;
            // homology of the hand complex, straight from its matrices
            let l0 = canonical_form(&diffs[0]);
            let l1 = homalg::abgrp::homology_at(&diffs[1], &diffs[0]).unwrap();
            let (e0, e1) = match kind {
                Functor::Sym => (a.clone(), FgAbGroup::trivial()),
                Functor::Ext => (FgAbGroup::trivial(), a.clone()),
                _ => (a.clone(), a.clone()),
            };
            ensure(iso_test(&l0, &e0) && iso_test(&l1, &e1), || {
                format!("{kind}^2 on Z/{m}: hand oracle disagrees with expected values")
            })?;
            let v = derived(f, &a, 0).unwrap().values;
            ensure(
                iso_test(&v[0], &e0) && iso_test(&v[1], &e1) && v[2].is_trivial(),
                || {
                    format!(
                        "{kind}^2 on Z/{m}: got {:?}",
                        v.iter().map(|g| g.to_string()).collect::<Vec<_>>()
                    )
                },
            )?;
            checks += 1;
        }
    }
    for r in 0..=3 {
        for n in 1..=3 {
            for kind in [Functor::Sym, Functor::Ext, Functor::Tensor] {
                let v = derived(fk(kind, n), &FgAbGroup::free(r), 0).unwrap().values;
                ensure(
                    iso_test(&v[0], &FgAbGroup::free(dim_of(kind, n, r))),
                    || format!("L_0 {kind}^{n}(Z^{r}) = {}", v[0]),
                )?;
                ensure(v[1..].iter().all(FgAbGroup::is_trivial), || {
                    format!("higher L_i {kind}^{n}(Z^{r}) nonzero")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} functor/group pairs"))
}

fn group_homology_ground_truth() -> Outcome {
    for m in [2usize, 3, 4] {
        let g = Arc::new(FiniteGroupTable::cyclic(m));
        let z = GModuleFree::trivial(g.clone(), 1);
        let c = FgAbGroup::cyclic(m as u64);
        let expected = [
            FgAbGroup::free(1),
            c.clone(),
            FgAbGroup::trivial(),
            c,
            FgAbGroup::trivial(),
        ];
        for (i, e) in expected.iter().enumerate() {
            let periodic = homology_cyclic(m, &z, i).map_err(|e| e.to_string())?;
            let bar = homology_bar(&g, &z, i, DEFAULT_BAR_BUDGET).map_err(|e| e.to_string())?;
            ensure(iso_test(&periodic, e) && iso_test(&bar, &periodic), || {
                format!("H_{i}(Z/{m}): periodic {periodic}, bar {bar}, expected {e}")
            })?;
        }
    }
    let v4 = Arc::new(FiniteGroupTable::cyclic(2).product(&FiniteGroupTable::cyclic(2)));
    let h1 = homology_bar(
        &v4,
        &GModuleFree::trivial(v4.clone(), 1),
        1,
        DEFAULT_BAR_BUDGET,
    )
    .map_err(|e| e.to_string())?;
    let c2 = FgAbGroup::cyclic(2);
    ensure(iso_test(&h1, &c2.direct_sum(&c2)), || {
        format!("H_1(Z/2 x Z/2) = {h1}")
    })?;
    Ok("Z/2, Z/3, Z/4 in degrees 0..4 by both methods; Z/2 x Z/2 by bar".into())
}

fn four_term() -> Outcome {
    let mut total = 0;
    for name in ["Z2", "Z3", "Z4"] {
        let r = four_term_suite(&VerifyConfig {
            preset: Some(name.into()),
            ..cfg()
        })
        .map_err(|e| e.to_string())?;
        ensure(r.cases.len() == 4, || {
            format!("{name}: expected 2 presentations x n in {{1, 2}}")
        })?;
        total += r.cases.len();
        suite_outcome(r)?;
    }
    let g = Arc::new(FiniteGroupTable::cyclic(2));
    let p = FpGroupPresentation::from_strings(&["a"], &["aa"], g.clone(), vec![1]).unwrap();
    let r = four_term_report(&p, &GModuleFree::trivial(g, 1), 1, DEFAULT_BAR_BUDGET).unwrap();
    let got = [&r.a, &r.b, &r.c, &r.d];
    let want = [
        FgAbGroup::trivial(),
        FgAbGroup::free(1),
        FgAbGroup::free(1),
        FgAbGroup::cyclic(2),
    ];
    ensure(got.iter().zip(&want).all(|(x, y)| *x == y), || {
        format!("Z/2, n = 1: got ({}, {}, {}, {})", r.a, r.b, r.c, r.d)
    })?;
    Ok(format!("{total} cases; Z/2, n = 1 is (0, Z, Z, Z/2)"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_homalg");
    let run = || {
        Command::new(bin)
            .args(["verify", "all", "--seed", "42", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0), || {
        format!("exit status {:?}", a.status.code())
    })?;
    ensure(a.stdout == b.stdout && !a.stdout.is_empty(), || {
        "reports differ".into()
    })?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 SNF suite", snf_suite),
        ("2 functor calculus", || {
            suite_outcome(
                functoriality_suite(&cfg(), FUNCTORIALITY_CASES).map_err(|e| e.to_string())?,
            )
        }),
        ("3 Koszul d∘d = 0", || {
            suite_outcome(koszul_d2_suite(&cfg(), KOSZUL_CASES).map_err(|e| e.to_string())?)
        }),
        ("4 derived-functor ground truth", derived_ground_truth),
        ("5 presentation independence", || {
            suite_outcome(independence_suite(&cfg(), RANDOM_PADDINGS).map_err(|e| e.to_string())?)
        }),
        ("6 group homology ground truth", group_homology_ground_truth),
        ("7 Magnus/Fox", || {
            suite_outcome(magnus_suite().map_err(|e| e.to_string())?)
        }),
        ("8 four-term sequence", four_term),
        ("9 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
