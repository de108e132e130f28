//! Exhaustive and seeded sweeps behind the `verify` commands.

use std::collections::BTreeMap;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abacus::{from_beta, join_beta, split_beta, to_beta};
use crate::blocks::{check_content_lemma, check_content_prop, content_window, verify_mainthm1};
use crate::error::{Error, Result};
use crate::hc_series::{degree_congruence_sign, epsilon_sign};
use crate::levelrank::{check_uglov_diagram, qr_em, qr_em_inv, uglov};
use crate::partition::{
    ChargedMultiPartition, ChargedPartition, MultiCharge, MultiPartition, Partition,
};
use crate::poly::{generic_degree, gl_order, phi_multiplicity};
use crate::quotient::{e_core, hook_lengths, is_e_core, upsilon, upsilon_inv};

/// Seed used by `roundtrip` when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_ab4c;

/// One failed case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: String,
    pub detail: String,
}

/// Per-case line emitted while a sweep runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Summary of a sweep; `pass` holds exactly when `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub parameters: BTreeMap<String, u64>,
    pub cases_checked: u64,
    pub failures: Vec<CaseFailure>,
    pub pass: bool,
}

struct Recorder<'a> {
    report: VerifyReport,
    sink: &'a mut dyn FnMut(&CaseOutcome),
}

impl<'a> Recorder<'a> {
    fn new(
        command: &str,
        parameters: &[(&str, u64)],
        sink: &'a mut dyn FnMut(&CaseOutcome),
    ) -> Self {
        Recorder {
            report: VerifyReport {
                command: command.to_string(),
                parameters: parameters
                    .iter()
                    .map(|&(k, v)| (k.to_string(), v))
                    .collect(),
                cases_checked: 0,
                failures: Vec::new(),
                pass: true,
            },
            sink,
        }
    }

    fn record(&mut self, case: String, outcome: std::result::Result<(), String>) {
        self.report.cases_checked += 1;
        let detail = outcome.err();
        (self.sink)(&CaseOutcome {
            case: case.clone(),
            pass: detail.is_none(),
            detail: detail.clone(),
        });
        if let Some(detail) = detail {
            self.report.failures.push(CaseFailure { case, detail });
        }
    }

    /// Records a boolean check; an `Err` counts as a failure carrying the error text.
    fn check(&mut self, case: String, result: Result<bool>, what: &str) {
        let outcome = match result {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{what} does not hold")),
            Err(err) => Err(err.to_string()),
        };
        self.record(case, outcome);
    }

    fn finish(mut self) -> VerifyReport {
        self.report.pass = self.report.failures.is_empty();
        self.report
    }
}

fn ignore(_: &CaseOutcome) {}

fn coprime_pairs(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max)
        .flat_map(move |e| (e + 1..=max).map(move |m| (e, m)))
        .filter(|&(e, m)| e.gcd(&m) == 1)
}

/// Single-block check for `1 <= n <= max_n` and coprime `1 <= e < m <= max_m`.
pub fn thm1(
    max_n: usize,
    max_m: usize,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        "thm1",
        &[("max_n", max_n as u64), ("max_m", max_m as u64)],
        sink.unwrap_or(&mut fallback),
    );
    for n in 1..=max_n {
        for (e, m) in coprime_pairs(max_m) {
            let case = format!("n={n} e={e} m={m}");
            let outcome = match verify_mainthm1(n, e, m) {
                Ok(report) if report.pass => Ok(()),
                Ok(report) => Err(report
                    .intersections
                    .iter()
                    .filter(|r| !r.pass)
                    .map(|r| {
                        format!(
                            "cores ({}|{}) members {:?} blocks E {:?} M {:?} gu {}",
                            r.core_e,
                            r.core_m,
                            r.members.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                            r.block_e_sizes,
                            r.block_m_sizes,
                            r.gu_match
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ")),
                Err(err) => Err(err.to_string()),
            };
            rec.record(case, outcome);
        }
    }
    rec.finish()
}

/// Commutative-diagram check for every partition of `1 <= n <= max_n` and coprime `1 <= e < m <= max_m`.
pub fn thm2(
    max_n: usize,
    max_m: usize,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        "thm2",
        &[("max_n", max_n as u64), ("max_m", max_m as u64)],
        sink.unwrap_or(&mut fallback),
    );
    for n in 1..=max_n {
        for (e, m) in coprime_pairs(max_m) {
            for p in Partition::all_of_size(n) {
                let result = (|| {
                    let s = (e + e_core(&p, e)?.len()) as i64;
                    let t = (m + e_core(&p, m)?.len()) as i64;
                    check_uglov_diagram(&p, e, m, s, t)
                })();
                rec.check(format!("p={p} e={e} m={m}"), result, "diagram");
            }
        }
    }
    rec.finish()
}

/// Both generating-function identities for `|p| <= max_size`, `|s| <= max_s`, `1 <= e <= max_e`.
pub fn content_lemma(
    max_size: usize,
    max_s: i64,
    max_e: usize,
    window: Option<u32>,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut params = vec![
        ("max_size", max_size as u64),
        ("max_s", max_s.unsigned_abs()),
        ("max_e", max_e as u64),
    ];
    if let Some(w) = window {
        params.push(("window", u64::from(w)));
    }
    let mut rec = Recorder::new("content-lemma", &params, sink.unwrap_or(&mut fallback));
    for p in Partition::all_up_to(max_size) {
        for s in -max_s.abs()..=max_s.abs() {
            for e in 1..=max_e {
                let window = window.map_or_else(|| content_window(&p, s, e), i64::from);
                rec.check(
                    format!("p={p} s={s} e={e}"),
                    check_content_lemma(&p, s, e, window),
                    "identity",
                );
            }
        }
    }
    rec.finish()
}

/// Same `m`-core versus equal residue keys, over all pairs of equal size and
/// equal `e`-core with `|p| <= max_size` and coprime `e, m <= max_em`.
pub fn content_prop(
    max_size: usize,
    max_em: usize,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        "content-prop",
        &[("max_size", max_size as u64), ("max_em", max_em as u64)],
        sink.unwrap_or(&mut fallback),
    );
    for n in 1..=max_size {
        let parts = Partition::all_of_size(n);
        for e in 1..=max_em {
            let cores: Vec<Partition> = parts
                .iter()
                .map(|p| e_core(p, e).expect("e >= 1"))
                .collect();
            for m in (1..=max_em).filter(|&m| m.gcd(&e) == 1) {
                for i in 0..parts.len() {
                    for j in i..parts.len() {
                        if cores[i] != cores[j] {
                            continue;
                        }
                        let case = format!("p={} r={} e={e} m={m}", parts[i], parts[j]);
                        let outcome = check_content_prop(&parts[i], &parts[j], e, m)
                            .map(|_| ())
                            .map_err(|err| err.to_string());
                        rec.record(case, outcome);
                    }
                }
            }
        }
    }
    rec.finish()
}

/// `Φ_e`-multiplicity of `Deg_p` against that of `|GL_n|` and the hook count, for `|p| <= max_n`, `e <= max_e`.
pub fn cuspidal(
    max_n: usize,
    max_e: usize,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        "cuspidal",
        &[("max_n", max_n as u64), ("max_e", max_e as u64)],
        sink.unwrap_or(&mut fallback),
    );
    for n in 1..=max_n {
        let order = gl_order(n).expect("n >= 1");
        for p in Partition::all_of_size(n) {
            let deg = generic_degree(&p).expect("hook formula is exact");
            let hooks = hook_lengths(&p);
            for e in 1..=max_e {
                let outcome = (|| -> Result<std::result::Result<(), String>> {
                    let r_deg = phi_multiplicity(&deg, e)?;
                    let r_order = phi_multiplicity(&order, e)?;
                    let core = is_e_core(&p, e)?;
                    let divisible = hooks.iter().filter(|&&h| h % e == 0).count();
                    if (r_deg == r_order) != core {
                        return Ok(Err(format!(
                            "multiplicities {r_deg} vs {r_order} but e-core is {core}"
                        )));
                    }
                    if r_deg + divisible != n / e {
                        return Ok(Err(format!(
                            "multiplicity {r_deg} with {divisible} divisible hooks, n/e = {}",
                            n / e
                        )));
                    }
                    Ok(Ok(()))
                })()
                .unwrap_or_else(|err| Err(err.to_string()));
                rec.record(format!("p={p} e={e}"), outcome);
            }
        }
    }
    rec.finish()
}

/// `Deg_p mod Φ_e` against `± deg χ(p)` for `|p| <= max_n`, `1 <= e <= |p|`.
///
/// With `normalized`, checks [`degree_congruence_sign`] instead, which also
/// covers partitions with a nonempty `e`-core.
pub fn degmod(
    max_n: usize,
    normalized: bool,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        if normalized {
            "degmod-normalized"
        } else {
            "degmod"
        },
        &[("max_n", max_n as u64)],
        sink.unwrap_or(&mut fallback),
    );
    for n in 1..=max_n {
        for p in Partition::all_of_size(n) {
            for e in 1..=n {
                let result = if normalized {
                    degree_congruence_sign(&p, e)
                } else {
                    epsilon_sign(&p, e)
                };
                rec.record(
                    format!("p={p} e={e}"),
                    result.map(|_| ()).map_err(|err| err.to_string()),
                );
            }
        }
    }
    rec.finish()
}

const MAX_RANDOM_SIZE: usize = 10;
const MAX_RANDOM_CHARGE: i64 = 5;
const MAX_RANDOM_MODULUS: usize = 6;

struct Sampler {
    rng: ChaCha8Rng,
    by_size: Vec<Vec<Partition>>,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            by_size: (0..=MAX_RANDOM_SIZE).map(Partition::all_of_size).collect(),
        }
    }

    fn partition_of(&mut self, n: usize) -> Partition {
        self.by_size[n]
            .choose(&mut self.rng)
            .expect("p(n) >= 1")
            .clone()
    }

    fn charge(&mut self) -> i64 {
        self.rng.gen_range(-MAX_RANDOM_CHARGE..=MAX_RANDOM_CHARGE)
    }

    fn modulus(&mut self) -> usize {
        self.rng.gen_range(1..=MAX_RANDOM_MODULUS)
    }

    fn charged_partition(&mut self) -> ChargedPartition {
        let n = self.rng.gen_range(0..=MAX_RANDOM_SIZE);
        let p = self.partition_of(n);
        ChargedPartition::new(p, self.charge())
    }

    fn charged_multipartition(&mut self, e: usize) -> ChargedMultiPartition {
        let total = self.rng.gen_range(0..=MAX_RANDOM_SIZE);
        let mut sizes = vec![0; e];
        for _ in 0..total {
            sizes[self.rng.gen_range(0..e)] += 1;
        }
        let comps = sizes.into_iter().map(|k| self.partition_of(k)).collect();
        let charges = (0..e).map(|_| self.charge()).collect();
        ChargedMultiPartition::new(
            MultiPartition::new(comps).expect("e >= 1 components"),
            MultiCharge(charges),
        )
        .expect("lengths agree")
    }
}

fn roundtrip_trial(sampler: &mut Sampler) -> Result<std::result::Result<(), String>> {
    let fail = |what: &str, input: String| Ok(Err(format!("{what} failed on {input}")));

    let cp = sampler.charged_partition();
    let e = sampler.modulus();
    let m = sampler.modulus();
    let label = format!("({}, {}) e={e} m={m}", cp.partition, cp.charge);

    let beta = to_beta(&cp);
    if from_beta(&beta) != cp || beta.charge() != cp.charge {
        return fail("beta round trip", label);
    }
    let split = split_beta(&beta, e)?;
    if join_beta(&split)? != beta {
        return fail("join after split", label);
    }
    let quotient = upsilon(&cp, e)?;
    if upsilon_inv(&quotient) != cp {
        return fail("core-quotient round trip", label);
    }
    if quotient.multicharge().total() != cp.charge {
        return fail("charge conservation under the core-quotient map", label);
    }

    let cmp = sampler.charged_multipartition(e);
    let label = format!(
        "({}, {}) e={e} m={m}",
        cmp.multipartition(),
        cmp.multicharge()
    );
    let there = uglov(&cmp, m)?;
    if uglov(&there, e)? != cmp {
        return fail("level-rank round trip", label);
    }
    if there.multicharge().total() != cmp.multicharge().total() {
        return fail("charge conservation under the level-rank map", label);
    }

    let x = sampler.rng.gen_range(-100..=100);
    let y = sampler.rng.gen_range(0..e);
    let (q, r) = qr_em(x, y, e, m)?;
    if qr_em_inv(q, r, e, m)? != (x, y) {
        return fail("index round trip", format!("({x}, {y}) e={e} m={m}"));
    }
    Ok(Ok(()))
}

/// Seeded random round trips of every bijection.
pub fn roundtrip(
    trials: u64,
    seed: u64,
    sink: Option<&mut dyn FnMut(&CaseOutcome)>,
) -> VerifyReport {
    let mut fallback = ignore;
    let mut rec = Recorder::new(
        "roundtrip",
        &[("trials", trials), ("seed", seed)],
        sink.unwrap_or(&mut fallback),
    );
    let mut sampler = Sampler::new(seed);
    for t in 0..trials {
        let outcome =
            roundtrip_trial(&mut sampler).unwrap_or_else(|err: Error| Err(err.to_string()));
        rec.record(format!("trial={t}"), outcome);
    }
    rec.finish()
}
