//! The check registry: every verification sweep the binary can run,
//! dispatched by name in a fixed order.
//!
//! Heavy shared artifacts (the weight-36 form, the discriminant form, the
//! newform coefficients) are built once per run at the largest precision
//! any scheduled check needs, then reused.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use mf4_core::elliptic::{
    self, frobenius_square_identity, g_coefficients, trace_of_frobenius, CurveOverQ,
    NewformCoefficients,
};
use mf4_core::galois::{
    self, build_rho, build_rho_prime, frobenius_class_k, frobenius_class_l, trace_mod4,
    GaloisRepresentation, Mat2Z4,
};
use mf4_core::hecke;
use mf4_core::qseries::{self, QExpansion};
use mf4_core::squares;
use mf4_core::tower;

use crate::report::{CheckResult, Verdict};

/// Sweep bounds; the defaults keep a full run within minutes on ordinary
/// hardware.
#[derive(Debug, Clone)]
pub struct Config {
    pub congruence_bound: usize,
    pub max_prime: u64,
    pub series_prec: usize,
    pub fsq_guard: u64,
    pub weak_bound: usize,
    pub squares_max_n: u64,
    pub squares_max_prime: u64,
    pub tau_max_prime: u64,
    pub twists_max_prime: u64,
    pub hatada_bound: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            congruence_bound: 4096,
            max_prime: 3000,
            series_prec: 10_000,
            fsq_guard: 61,
            weak_bound: 300,
            squares_max_n: 2000,
            squares_max_prime: 5000,
            tau_max_prime: 3000,
            twists_max_prime: 200,
            hatada_bound: 500,
        }
    }
}

impl Config {
    pub fn defaults_map(&self) -> BTreeMap<String, u64> {
        BTreeMap::from([
            ("congruenceBound".into(), self.congruence_bound as u64),
            ("maxPrime".into(), self.max_prime),
            ("seriesPrec".into(), self.series_prec as u64),
            ("fsqGuard".into(), self.fsq_guard),
            ("weakBound".into(), self.weak_bound as u64),
            ("squaresMaxN".into(), self.squares_max_n),
            ("squaresMaxPrime".into(), self.squares_max_prime),
            ("tauMaxPrime".into(), self.tau_max_prime),
            ("twistsMaxPrime".into(), self.twists_max_prime),
            ("hatadaBound".into(), self.hatada_bound as u64),
        ])
    }
}

/// All check names, in report order.
pub const REGISTRY: &[&str] = &[
    "f-expansion",
    "hecke-t2-t3",
    "s36-triangularity",
    "weak-eigenform",
    "f-rule",
    "eta-theta",
    "eta-jacobi",
    "squares-r3",
    "squares-q3",
    "kolberg",
    "tower-K",
    "tower-L",
    "embeddings",
    "torsion",
    "frobenius-K",
    "frobenius-L",
    "congruence",
    "fsq-identity",
    "weight1",
    "twists",
    "hatada",
];

/// Lazily built shared series, grown to the largest requested precision.
pub struct Artifacts {
    f: RefCell<Option<QExpansion>>,
    delta: RefCell<Option<QExpansion>>,
    g: RefCell<Option<NewformCoefficients>>,
}

impl Artifacts {
    pub fn new() -> Artifacts {
        Artifacts {
            f: RefCell::new(None),
            delta: RefCell::new(None),
            g: RefCell::new(None),
        }
    }

    fn f(&self, prec: usize) -> QExpansion {
        let mut slot = self.f.borrow_mut();
        if slot.as_ref().is_none_or(|h| h.prec() < prec) {
            *slot = Some(qseries::build_f(prec).expect("precision is at least 2"));
        }
        slot.as_ref().expect("just built").clone()
    }

    fn delta(&self, prec: usize) -> QExpansion {
        let mut slot = self.delta.borrow_mut();
        if slot.as_ref().is_none_or(|h| h.prec() < prec) {
            *slot = Some(qseries::delta(prec).expect("precision is at least 2"));
        }
        slot.as_ref().expect("just built").clone()
    }

    fn g(&self, bound: usize) -> NewformCoefficients {
        let mut slot = self.g.borrow_mut();
        if slot.as_ref().is_none_or(|g| g.bound() < bound) {
            *slot = Some(g_coefficients(bound).expect("point counts stay in range"));
        }
        slot.as_ref().expect("just built").clone()
    }
}

impl Default for Artifacts {
    fn default() -> Self {
        Artifacts::new()
    }
}

/// Precision of f needed by a check, 0 when unused.
fn f_requirement(name: &str, cfg: &Config) -> usize {
    match name {
        "f-expansion" => 8,
        "hecke-t2-t3" => 12,
        "weak-eigenform" => 9 * cfg.weak_bound,
        "f-rule" | "frobenius-K" | "frobenius-L" => cfg.max_prime as usize + 1,
        "congruence" => cfg.congruence_bound + 1,
        _ => 0,
    }
}

fn delta_requirement(name: &str, cfg: &Config) -> usize {
    match name {
        "eta-theta" => cfg.series_prec,
        "kolberg" => cfg.tau_max_prime as usize + 1,
        _ => 0,
    }
}

/// Runs the named checks in registry order, sharing artifacts.
pub fn run_checks(names: &[&str], cfg: &Config) -> Vec<CheckResult> {
    let artifacts = Artifacts::new();
    if let Some(need) = names
        .iter()
        .map(|n| f_requirement(n, cfg))
        .max()
        .filter(|&n| n >= 2)
    {
        artifacts.f(need);
    }
    if let Some(need) = names
        .iter()
        .map(|n| delta_requirement(n, cfg))
        .max()
        .filter(|&n| n >= 2)
    {
        artifacts.delta(need);
    }
    names
        .iter()
        .map(|n| run_check(n, cfg, &artifacts))
        .collect()
}

struct Body {
    parameters: BTreeMap<String, String>,
    /// `None` means pass; a failing check must carry its counterexample.
    witness: Option<BTreeMap<String, String>>,
    details: Option<String>,
    /// True when the configured range left nothing to verify.
    skipped: bool,
}

fn kv<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn run_check(name: &str, cfg: &Config, artifacts: &Artifacts) -> CheckResult {
    let started = Instant::now();
    let body = match name {
        "f-expansion" => check_f_expansion(artifacts),
        "hecke-t2-t3" => check_hecke_displayed(artifacts),
        "s36-triangularity" => check_s36(),
        "weak-eigenform" => check_weak_eigenform(cfg, artifacts),
        "f-rule" => check_f_rule(cfg, artifacts),
        "eta-theta" => check_eta_theta(cfg, artifacts),
        "eta-jacobi" => check_eta_jacobi(cfg),
        "squares-r3" => check_squares_r3(cfg),
        "squares-q3" => check_squares_q3(cfg),
        "kolberg" => check_kolberg(cfg, artifacts),
        "tower-K" => check_tower(true),
        "tower-L" => check_tower(false),
        "embeddings" => check_embeddings(),
        "torsion" => check_torsion(),
        "frobenius-K" => check_frobenius(cfg, artifacts, true),
        "frobenius-L" => check_frobenius(cfg, artifacts, false),
        "congruence" => check_congruence(cfg, artifacts),
        "fsq-identity" => check_fsq(cfg),
        "weight1" => check_weight1(cfg),
        "twists" => check_twists(cfg),
        "hatada" => check_hatada(cfg),
        other => panic!("unknown check name {other}"),
    };
    let verdict = if body.skipped {
        Verdict::Skipped
    } else if body.witness.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    CheckResult {
        name: name.to_string(),
        parameters: body.parameters,
        verdict,
        witness: body.witness,
        elapsed_millis: started.elapsed().as_millis() as u64,
        details: body.details,
    }
}

fn residue4(c: &BigInt) -> u8 {
    u8::try_from(qseries::residue_mod_pow2(c, 2)).expect("residue below 4")
}

fn check_f_expansion(artifacts: &Artifacts) -> Body {
    let expected: Vec<BigInt> = [
        "1",
        "1416",
        "842654",
        "271386544",
        "50558981478",
        "5356057726176",
        "290719505955308",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    let f = artifacts.f(8);
    let witness = (1..=7usize)
        .find(|&n| f.coefficient(n) != Some(&expected[n - 1]))
        .map(|n| {
            kv([
                ("index", n.to_string()),
                ("got", f.coefficient(n).unwrap().to_string()),
                ("expected", expected[n - 1].to_string()),
            ])
        });
    Body {
        parameters: kv([("prec", "8".into())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_hecke_displayed(artifacts: &Artifacts) -> Body {
    let f = artifacts.f(12);
    let t2 = hecke::hecke_apply(&f, 2).expect("precision suffices");
    let t3 = hecke::hecke_apply(&f, 3).expect("precision suffices");
    let t3m2f = qseries::add(
        &t3,
        &qseries::scale(&BigInt::from(-2), &f.truncate(t3.prec()).unwrap()),
    )
    .unwrap();
    let t2_expected: [&str; 3] = ["1416", "34631124912", "5356057726176"];
    let t3_expected: [&str; 3] = ["842652", "5356057723344", "113674493459566148"];
    let mut witness = None;
    for n in 1..=3usize {
        for (label, series, expected) in [
            ("T2 f", &t2, t2_expected[n - 1]),
            ("T3 f - 2f", &t3m2f, t3_expected[n - 1]),
        ] {
            let want: BigInt = expected.parse().unwrap();
            let got = series.coefficient(n).unwrap();
            if *got != want || residue4(&want) != 0 {
                witness.get_or_insert_with(|| {
                    kv([
                        ("series", label.to_string()),
                        ("index", n.to_string()),
                        ("got", got.to_string()),
                        ("expected", want.to_string()),
                    ])
                });
            }
        }
    }
    Body {
        parameters: kv([("indices", "1..3".into())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_s36() -> Body {
    let report = hecke::s36_basis_triangularity_check(5).expect("precision suffices");
    let witness = (!report.pass()).then(|| kv([("leading", format!("{:?}", report.leading))]));
    Body {
        parameters: kv([("prec", "5".into())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_weak_eigenform(cfg: &Config, artifacts: &Artifacts) -> Body {
    let ops: BTreeSet<usize> = [2, 3, 4, 5, 6, 7, 9].into();
    let f = artifacts.f(9 * cfg.weak_bound);
    let report =
        hecke::weak_eigenform_check(&f, 2, &ops, cfg.weak_bound).expect("precision suffices");
    let witness = report
        .witnesses
        .iter()
        .find_map(|(n, w)| w.map(|idx| (n, idx)))
        .map(|(n, idx)| kv([("operator", n.to_string()), ("index", idx.to_string())]));
    Body {
        parameters: kv([
            ("bound", cfg.weak_bound.to_string()),
            ("modulus", "4".into()),
            ("operators", "2,3,4,5,6,7,9".into()),
        ]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_f_rule(cfg: &Config, artifacts: &Artifacts) -> Body {
    let f = artifacts.f(cfg.max_prime as usize + 1);
    let witness = (2..=cfg.max_prime)
        .into_par_iter()
        .filter(|&n| squares::is_prime(n))
        .filter_map(|ell| {
            let got = residue4(f.coefficient(ell as usize).expect("within precision"));
            let rule = squares::f_mod4_rule(ell).expect("prime");
            (got != rule).then_some((ell, got, rule))
        })
        .min()
        .map(|(ell, got, rule)| {
            kv([
                ("prime", ell.to_string()),
                ("coefficient", got.to_string()),
                ("rule", rule.to_string()),
            ])
        });
    Body {
        parameters: kv([("maxPrime", cfg.max_prime.to_string())]),
        witness,
        details: None,
        skipped: cfg.max_prime < 2,
    }
}

fn check_eta_theta(cfg: &Config, artifacts: &Artifacts) -> Body {
    let prec = cfg.series_prec;
    let delta = artifacts.delta(prec).truncate(prec).unwrap();
    let parity = qseries::reduce(&delta, 1);
    let theta = qseries::theta_odd_squares(prec).expect("positive precision");
    let witness = (0..prec)
        .find(|&i| parity.residue(i) != theta.residue(i))
        .map(|i| {
            kv([
                ("index", i.to_string()),
                ("left", parity.residue(i).unwrap().to_string()),
                ("right", theta.residue(i).unwrap().to_string()),
            ])
        });
    Body {
        parameters: kv([("prec", prec.to_string())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_eta_jacobi(cfg: &Config) -> Body {
    let report = qseries::eta_cubed_identity_check(cfg.series_prec).expect("precision suffices");
    let witness = report
        .first_mismatch
        .map(|i| kv([("index", i.to_string())]));
    Body {
        parameters: kv([("prec", cfg.series_prec.to_string())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_squares_r3(cfg: &Config) -> Body {
    let witness = (1..=cfg.squares_max_n)
        .into_par_iter()
        .filter(|n| n % 4 == 1 || n % 4 == 3)
        .filter_map(|n| {
            let closed = squares::r3_closed(n).expect("valid residue class");
            let brute = squares::r3_brute(n);
            (closed != brute).then_some((n, closed, brute))
        })
        .min()
        .map(|(n, closed, brute)| {
            kv([
                ("n", n.to_string()),
                ("closedForm", closed.to_string()),
                ("bruteForce", brute.to_string()),
            ])
        });
    Body {
        parameters: kv([("maxN", cfg.squares_max_n.to_string())]),
        witness,
        details: None,
        skipped: cfg.squares_max_n == 0,
    }
}

fn check_squares_q3(cfg: &Config) -> Body {
    let witness = squares::odd_primes_up_to(cfg.squares_max_prime)
        .into_par_iter()
        .filter_map(|ell| {
            let q3 = squares::q3_brute(ell);
            if ell % 8 != 3 {
                return (q3 != 0).then(|| (ell, "q3 nonzero off 3 mod 8".to_string()));
            }
            let tally = squares::residue_tally(ell).expect("odd prime");
            let half = ((ell - 1) / 2) as i64;
            if q3 != squares::r3_brute(ell) / 8 {
                Some((ell, "q3 != r3/8".to_string()))
            } else if q3 as i64 != tally.difference() {
                Some((ell, "q3 != R - N".to_string()))
            } else if q3 as i64 != 2 * tally.residues as i64 - half {
                Some((ell, "q3 != 2R - (l-1)/2".to_string()))
            } else if q3.is_multiple_of(2) {
                Some((ell, "q3 even".to_string()))
            } else {
                None
            }
        })
        .min()
        .map(|(ell, reason)| kv([("prime", ell.to_string()), ("reason", reason)]));
    Body {
        parameters: kv([("maxPrime", cfg.squares_max_prime.to_string())]),
        witness,
        details: None,
        skipped: cfg.squares_max_prime < 3,
    }
}

fn check_kolberg(cfg: &Config, artifacts: &Artifacts) -> Body {
    let delta = artifacts.delta(cfg.tau_max_prime as usize + 1);
    let mut witness = None;
    if delta.coefficient(2) != Some(&BigInt::from(-24)) {
        witness = Some(kv([
            ("prime", "2".into()),
            ("reason", "tau(2) != -24".into()),
        ]));
    }
    if witness.is_none() {
        witness = squares::odd_primes_up_to(cfg.tau_max_prime)
            .into_iter()
            .find(|&ell| {
                let expected = qseries::residue_mod_pow2(&(1 + BigInt::from(ell).pow(11)), 2);
                qseries::residue_mod_pow2(delta.coefficient(ell as usize).unwrap(), 2) != expected
            })
            .map(|ell| {
                kv([
                    ("prime", ell.to_string()),
                    ("reason", "tau(l) != 1 + l^11 mod 4".into()),
                ])
            });
    }
    Body {
        parameters: kv([("maxPrime", cfg.tau_max_prime.to_string())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_tower(first_field: bool) -> Body {
    let (label, (tower_field, r, s)) = if first_field {
        ("K", tower::build_k())
    } else {
        ("L", tower::build_l())
    };
    let mut failures = Vec::new();
    if r.order() != 4 {
        failures.push("order(r) != 4");
    }
    if s.order() != 2 {
        failures.push("order(s) != 2");
    }
    let srs = s.compose(&r.compose(&s).unwrap()).unwrap();
    let r3 = r.compose(&r).unwrap().compose(&r).unwrap();
    if srs != r3 {
        failures.push("s r s != r^-1");
    }
    let group = tower::generate_group(&[r.clone(), s]).unwrap();
    if group.len() != 8 {
        failures.push("group size != 8");
    }
    if first_field {
        // (r(sqrt(1+i)))^2 = 1 - i exactly
        let img = r.image(2);
        let one_minus_i = tower_field.one().sub(&tower_field.generator(0)).unwrap();
        if img.mul(img).unwrap() != one_minus_i {
            failures.push("(r g3)^2 != 1 - i");
        }
    }
    Body {
        parameters: kv([("field", label.to_string())]),
        witness: failures
            .first()
            .map(|msg| kv([("reason", msg.to_string())])),
        details: Some(format!("{} automorphisms", group.len())),
        skipped: false,
    }
}

fn check_embeddings() -> Body {
    let rho = GaloisRepresentation::build(
        "rho",
        Mat2Z4::new([[1, 2], [1, 1]]),
        Mat2Z4::new([[-1, 2], [2, -1]]),
    );
    let rho_prime = GaloisRepresentation::build(
        "rho'",
        Mat2Z4::new([[1, 2], [1, 1]]),
        Mat2Z4::new([[1, 0], [1, -1]]),
    );
    let mut witness = None;
    match (&rho, &rho_prime) {
        (Ok(a), Ok(b)) => {
            if a.image_of_r().order() != 4 || a.image_of_s().order() != 2 {
                witness = Some(kv([("reason", "first embedding has wrong orders".into())]));
            } else if b.image_of_r().order() != 4 || b.image_of_s().order() != 2 {
                witness = Some(kv([("reason", "second embedding has wrong orders".into())]));
            }
        }
        _ => {
            witness = Some(kv([(
                "reason",
                "embedding failed the 64-product check".into(),
            )]));
        }
    }
    Body {
        parameters: kv([("products", "64".into())]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_torsion() -> Body {
    let report = elliptic::torsion_verify().expect("construction succeeds");
    let matrices = galois::torsion_matrices().expect("images stay in the span");
    let rho = build_rho();
    let mut witness = report
        .first_failure()
        .map(|name| kv([("failedCheck", name.to_string())]));
    if witness.is_none() && (matrices.m_r != rho.image_of_r() || matrices.m_s != rho.image_of_s()) {
        witness = Some(kv([
            ("failedCheck", "matrices differ from the embedding".into()),
            ("mR", matrices.m_r.to_string()),
            ("mS", matrices.m_s.to_string()),
        ]));
    }
    Body {
        parameters: kv([("combinations", "16".into())]),
        witness,
        details: Some(format!("M_r = {}, M_s = {}", matrices.m_r, matrices.m_s)),
        skipped: false,
    }
}

fn check_frobenius(cfg: &Config, artifacts: &Artifacts, first_field: bool) -> Body {
    let f = artifacts.f(cfg.max_prime as usize + 1);
    let curve = CurveOverQ::base_curve();
    let label = if first_field { "K" } else { "L" };
    let rep = if first_field {
        build_rho()
    } else {
        build_rho_prime()
    };
    let witness = squares::odd_primes_up_to(cfg.max_prime)
        .into_par_iter()
        .filter_map(|ell| {
            let class = if first_field {
                frobenius_class_k(ell).expect("odd prime")
            } else {
                frobenius_class_l(ell).expect("odd prime")
            };
            let trace = trace_mod4(&rep, &class).expect("canonical classes are trace-constant");
            let rule = squares::f_mod4_rule(ell).expect("prime");
            let a_f = residue4(f.coefficient(ell as usize).expect("within precision"));
            let a_e = trace_of_frobenius(ell, &curve)
                .expect("good reduction")
                .rem_euclid(4) as u8;
            (trace != rule || rule != a_f || a_f != a_e).then_some((ell, trace, a_f, a_e))
        })
        .min()
        .map(|(ell, trace, a_f, a_e)| {
            kv([
                ("prime", ell.to_string()),
                ("trace", trace.to_string()),
                ("aF", a_f.to_string()),
                ("aE", a_e.to_string()),
            ])
        });
    Body {
        parameters: kv([
            ("field", label.to_string()),
            ("maxPrime", cfg.max_prime.to_string()),
        ]),
        witness,
        details: None,
        skipped: cfg.max_prime < 3,
    }
}

fn check_congruence(cfg: &Config, artifacts: &Artifacts) -> Body {
    let f = artifacts.f(cfg.congruence_bound + 1);
    let g = artifacts.g(cfg.congruence_bound);
    let report =
        hecke::congruence_check(&f, &g, 2, cfg.congruence_bound).expect("sources long enough");
    let witness = report.first_mismatch.as_ref().map(|m| {
        kv([
            ("index", m.index.to_string()),
            ("left", m.left.to_string()),
            ("right", m.right.to_string()),
        ])
    });
    Body {
        parameters: kv([
            ("bound", cfg.congruence_bound.to_string()),
            ("modulus", "4".into()),
        ]),
        witness,
        details: None,
        skipped: false,
    }
}

fn check_fsq(cfg: &Config) -> Body {
    let curve = CurveOverQ::base_curve();
    let witness = squares::odd_primes_up_to(cfg.fsq_guard)
        .into_par_iter()
        .filter_map(|ell| {
            let verdict =
                frobenius_square_identity(ell, &curve, cfg.fsq_guard).expect("within the guard");
            if !verdict.identity_holds() {
                Some((
                    ell,
                    format!("count {} != expected {}", verdict.count, verdict.expected),
                ))
            } else if verdict.sixteen_divides == Some(true) {
                Some((ell, "16 divides the count at l = 3 mod 8".to_string()))
            } else {
                None
            }
        })
        .min()
        .map(|(ell, reason)| kv([("prime", ell.to_string()), ("reason", reason)]));
    Body {
        parameters: kv([("maxEll", cfg.fsq_guard.to_string())]),
        witness,
        details: None,
        skipped: cfg.fsq_guard < 3,
    }
}

fn check_weight1(cfg: &Config) -> Body {
    let report = galois::weight1_noncongruence_check(cfg.max_prime).expect("sweep runs");
    let witness = report.witnesses.first().map(|ell| {
        kv([
            ("prime", ell.to_string()),
            ("reason", "character congruence unexpectedly held".into()),
        ])
    });
    Body {
        parameters: kv([("maxPrime", cfg.max_prime.to_string())]),
        witness,
        details: Some(format!("{} primes checked", report.primes_checked)),
        skipped: report.primes_checked == 0,
    }
}

fn check_twists(cfg: &Config) -> Body {
    let e = CurveOverQ::base_curve();
    let witness = [-1i64, 2, -2]
        .into_iter()
        .flat_map(|d| {
            squares::odd_primes_up_to(cfg.twists_max_prime)
                .into_iter()
                .map(move |ell| (d, ell))
        })
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|(d, ell)| {
            let twist = e.quadratic_twist(d).expect("supported twist");
            let chi = squares::jacobi(d, ell as i64).expect("odd modulus") as i64;
            let a_twist = trace_of_frobenius(ell, &twist).expect("good reduction");
            let a_e = trace_of_frobenius(ell, &e).expect("good reduction");
            (a_twist != chi * a_e || a_twist.rem_euclid(4) != a_e.rem_euclid(4))
                .then_some((ell, d, a_twist, a_e))
        })
        .min()
        .map(|(ell, d, a_twist, a_e)| {
            kv([
                ("prime", ell.to_string()),
                ("twist", d.to_string()),
                ("aTwist", a_twist.to_string()),
                ("aE", a_e.to_string()),
            ])
        });
    Body {
        parameters: kv([
            ("maxPrime", cfg.twists_max_prime.to_string()),
            ("twists", "-1,2,-2".into()),
        ]),
        witness,
        details: None,
        skipped: cfg.twists_max_prime < 3,
    }
}

fn check_hatada(cfg: &Config) -> Body {
    let weights = [16u32, 18, 20, 22, 26];
    let results =
        hecke::hatada_consistency_check(&weights, cfg.hatada_bound).expect("all weights supported");
    let witness = results
        .iter()
        .find_map(|(k, mismatch)| mismatch.map(|idx| (*k, idx)))
        .map(|(k, idx)| kv([("weight", k.to_string()), ("index", idx.to_string())]));
    Body {
        parameters: kv([
            ("bound", cfg.hatada_bound.to_string()),
            ("weights", "16,18,20,22,26".into()),
        ]),
        witness,
        details: None,
        skipped: false,
    }
}
