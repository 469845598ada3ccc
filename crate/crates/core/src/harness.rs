//! Exhaustive checks of orbit statements for root posets and small custom
//! posets. Every check enumerates all antichains, compares with exact
//! integer or rational arithmetic, and returns a [`Report`].
//!
//! A failing report always carries a [`Witness`]: the poset name and an
//! antichain, written with the poset's labels, from which the failure can be
//! replayed with the `rowmotion` command.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::poset::{parse_poset, Antichain, Orbit, Poset};
use crate::root_system::{CartanType, Convention, PosetVariant, RootPoset, RootSystem};
use crate::type_a::{self, TypeA};
use crate::{fraction_string, Rational};

/// The two posets of the "slight modification" example, in the text format.
pub const P1_TEXT: &str = include_str!("../data/p1.poset");
pub const P2_TEXT: &str = include_str!("../data/p2.poset");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNSUPPORTED")]
    Unsupported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unsupported => "UNSUPPORTED",
        })
    }
}

/// A replayable counterexample: poset name plus antichain labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub poset: String,
    pub antichain: Vec<String>,
}

impl Witness {
    pub fn new(poset: impl Into<String>, p: &Poset, a: &Antichain) -> Self {
        Witness {
            poset: poset.into(),
            antichain: p.labels_of(a.members()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub scope: String,
    pub status: Status,
    pub evidence: Map<String, Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn witness(&self) -> Option<Witness> {
        let w = self.evidence.get("witness")?;
        Some(Witness {
            poset: w.get("poset")?.as_str()?.to_string(),
            antichain: w
                .get("antichain")?
                .as_array()?
                .iter()
                .filter_map(|v| v.as_str().map(str::to_string))
                .collect(),
        })
    }

    /// One-line JSON with keys in a fixed order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// `STATUS claim scope`, followed by failure messages when present.
    pub fn summary_line(&self) -> String {
        let mut line = format!("{} {} {}", self.status, self.claim_id, self.scope);
        if let Some(Value::Array(msgs)) = self.evidence.get("failures") {
            for m in msgs.iter().filter_map(Value::as_str) {
                line.push_str("; ");
                line.push_str(m);
            }
        }
        if let Some(Value::String(reason)) = self.evidence.get("reason") {
            line.push_str("; ");
            line.push_str(reason);
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown claim `{0}`; valid claims: {list}", list = claim_ids().join(", "))]
    UnknownClaim(String),
    #[error("claim `{claim}` does not apply to {scope}")]
    ScopeMismatch { claim: String, scope: String },
}

/// Collects facts and failures for one report.
struct Recorder {
    claim_id: &'static str,
    scope: String,
    evidence: Map<String, Value>,
    failures: Vec<String>,
    witness: Option<Witness>,
}

impl Recorder {
    fn new(claim_id: &'static str, scope: impl Into<String>) -> Self {
        Recorder {
            claim_id,
            scope: scope.into(),
            evidence: Map::new(),
            failures: Vec::new(),
            witness: None,
        }
    }

    fn fact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("evidence serializes");
        self.evidence.insert(key.to_string(), v);
    }

    fn check(
        &mut self,
        ok: bool,
        what: impl FnOnce() -> String,
        witness: impl FnOnce() -> Witness,
    ) -> bool {
        if !ok {
            self.failures.push(what());
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
        ok
    }

    fn finish(mut self) -> Report {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            self.fact("failures", self.failures.clone());
            let w = self.witness.take().expect("failures carry a witness");
            self.fact("witness", w);
            Status::Fail
        };
        Report {
            claim_id: self.claim_id.to_string(),
            scope: self.scope,
            status,
            evidence: self.evidence,
        }
    }
}

fn unsupported(claim_id: &str, scope: String, reason: String) -> Report {
    let mut evidence = Map::new();
    evidence.insert("reason".into(), Value::String(reason));
    Report {
        claim_id: claim_id.to_string(),
        scope,
        status: Status::Unsupported,
        evidence,
    }
}

fn system(ty: CartanType, rank: usize) -> RootSystem {
    RootSystem::build(ty, rank).expect("harness matrices only hold valid ranks")
}

fn root_poset(sys: &RootSystem, variant: &PosetVariant) -> RootPoset {
    sys.root_poset(variant)
        .expect("variant exists for this system")
}

fn rw(rp: &RootPoset, a: &Antichain) -> Witness {
    Witness::new(rp.name(), rp.poset(), a)
}

fn sizes(orbits: &[Orbit]) -> Vec<usize> {
    orbits.iter().map(Orbit::size).collect()
}

fn lcm_of(orbits: &[Orbit]) -> u64 {
    orbits
        .iter()
        .fold(1u64, |acc, o| acc.lcm(&(o.size() as u64)))
}

fn distinct_means(orbits: &[Orbit]) -> Vec<String> {
    let set: BTreeSet<Rational> = orbits.iter().map(Orbit::mean_size).collect();
    set.iter().map(fraction_string).collect()
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Shared part of the full and no-simple checks: order, the `−w₀` power,
/// constant orbit means and the standard orbit.
fn periodic_checks(rec: &mut Recorder, rp: &RootPoset, level: u64, mean: Rational) -> Vec<Orbit> {
    let p = rp.poset();
    let table = p.rowmotion_table();
    let orbits = table.orbits();
    let ord = lcm_of(&orbits);
    let w0_trivial = rp.system().w0_is_minus_one();
    rec.fact("antichains", table.len());
    rec.fact("orbit_sizes", sizes(&orbits));
    rec.fact("ord", ord);
    rec.fact("level", level);
    rec.fact("w0_is_minus_one", w0_trivial);
    rec.fact("expected_mean", fraction_string(&mean));
    rec.fact("means", distinct_means(&orbits));

    let target = if w0_trivial { level } else { 2 * level };
    let bad = orbits
        .iter()
        .find(|o| target % o.size() as u64 != 0)
        .or_else(|| orbits.iter().max_by_key(|o| o.size()));
    rec.check(
        ord == target,
        || format!("ord = {ord}, expected {target}"),
        || rw(rp, bad.expect("at least one orbit").representative()),
    );

    if !w0_trivial {
        let power = table.power(level);
        for (i, a) in table.antichains().iter().enumerate() {
            let image = rp.minus_w0(a);
            let ok = table.index_of(&image) == Some(power[i]);
            if !rec.check(
                ok,
                || format!("rowmotion^{level} differs from -w0"),
                || rw(rp, a),
            ) {
                break;
            }
        }
        rec.fact("power_equals_minus_w0", rec.failures.is_empty());
    }

    for o in &orbits {
        let m = o.mean_size();
        if !rec.check(
            m == mean,
            || {
                format!(
                    "orbit of size {} has mean {}",
                    o.size(),
                    fraction_string(&m)
                )
            },
            || rw(rp, o.representative()),
        ) {
            break;
        }
    }

    if !p.is_empty() {
        match p.standard_orbit() {
            Ok(std) => {
                rec.fact("standard_orbit_size", std.size());
                rec.check(
                    std.size() as u64 == level,
                    || format!("standard orbit has size {}, expected {level}", std.size()),
                    || rw(rp, &p.empty_antichain()),
                );
            }
            Err(e) => {
                rec.check(false, || e.to_string(), || rw(rp, &p.empty_antichain()));
            }
        }
    }
    orbits
}

/// `Δ⁺`: `ord = h` if `w₀ = −1`, otherwise `𝔛^h = −w₀` and `ord = 2h`;
/// every orbit has mean size `n/2`; standard orbit of size `h`; the two
/// halves of the Dynkin bipartition form an orbit of size 2.
pub fn check_full_root_poset(sys: &RootSystem) -> Report {
    let rp = root_poset(sys, &PosetVariant::Full);
    let mut rec = Recorder::new("conj-2.1", rp.name());
    let h = sys.coxeter_number() as u64;
    rec.fact("h", h);
    let mean = Rational::new(sys.rank() as i64, 2);
    periodic_checks(&mut rec, &rp, h, mean);

    let p = rp.poset();
    let (first, second) = sys.orthogonal_bipartition();
    let as_antichain = |idx: &[usize]| -> Antichain {
        let set: ElementSet = idx
            .iter()
            .map(|&i| {
                rp.element_of_root(sys.simple_root(i))
                    .expect("simple root present")
            })
            .collect();
        p.antichain(set).expect("simple roots are incomparable")
    };
    let (a, b) = (as_antichain(&first), as_antichain(&second));
    let ok = p.rowmotion(&a) == b && p.rowmotion(&b) == a;
    rec.fact("bipartition_orbit", ok);
    rec.check(
        ok,
        || "bipartition halves do not swap".into(),
        || rw(&rp, &a),
    );
    rec.finish()
}

/// `Δ⁺ ∖ Π`: as the full check with level `h − 1` and mean
/// `n(h − 2)/(2(h − 1))`; when `w₀ = −1` and `h − 1` is prime every orbit
/// has size `h − 1`.
pub fn check_no_simple_root_poset(sys: &RootSystem) -> Report {
    let rp = root_poset(sys, &PosetVariant::NoSimple);
    let mut rec = Recorder::new("conj-2.2", rp.name());
    let h = sys.coxeter_number();
    let level = (h - 1) as u64;
    let n = sys.rank() as i64;
    let mean = Rational::new(n * (h as i64 - 2), 2 * (h as i64 - 1));
    let orbits = periodic_checks(&mut rec, &rp, level, mean);
    if sys.w0_is_minus_one() && is_prime(h - 1) {
        let equal = orbits.iter().all(|o| o.size() as u64 == level);
        rec.fact("equal_orbit_sizes", equal);
        let odd = orbits.iter().find(|o| o.size() as u64 != level);
        rec.check(
            equal,
            || format!("h-1 = {level} is prime but orbit sizes differ"),
            || {
                rw(
                    &rp,
                    &odd.map_or(rp.poset().empty_antichain(), |o| *o.representative()),
                )
            },
        );
    }
    rec.finish()
}

/// `Δ⁺_s`: `ord = hot(θ_s) + 1`, orbit means `#Δ⁺_s/(hot(θ_s) + 1)`, and
/// the orbit count 1, 3, 1 for `B_n`, `F₄`, `G₂`.
pub fn check_short_root_poset(sys: &RootSystem) -> Report {
    let scope = format!("{sys}/short");
    if !sys.has_two_root_lengths() {
        return unsupported("conj-2.3", scope, format!("{sys} is simply laced"));
    }
    let rp = root_poset(sys, &PosetVariant::Short);
    let p = rp.poset();
    let mut rec = Recorder::new("conj-2.3", scope);
    let level = sys.dual_coxeter_of_dual().expect("two root lengths") as u64;
    let orbits = p.all_orbits();
    let ord = lcm_of(&orbits);
    let mean = Rational::new(p.len() as i64, level as i64);
    rec.fact("antichains", orbits.iter().map(Orbit::size).sum::<usize>());
    rec.fact("orbit_sizes", sizes(&orbits));
    rec.fact("orbit_count", orbits.len());
    rec.fact("ord", ord);
    rec.fact("level", level);
    rec.fact("expected_mean", fraction_string(&mean));
    rec.fact("means", distinct_means(&orbits));
    let big = orbits.iter().max_by_key(|o| o.size()).expect("non-empty");
    rec.check(
        ord == level,
        || format!("ord = {ord}, expected {level}"),
        || rw(&rp, big.representative()),
    );
    for o in &orbits {
        let m = o.mean_size();
        if !rec.check(
            m == mean,
            || {
                format!(
                    "orbit of size {} has mean {}",
                    o.size(),
                    fraction_string(&m)
                )
            },
            || rw(&rp, o.representative()),
        ) {
            break;
        }
    }
    match p.standard_orbit() {
        Ok(std) => {
            rec.fact("standard_orbit_size", std.size());
            rec.check(
                std.size() as u64 == level,
                || format!("standard orbit has size {}", std.size()),
                || rw(&rp, &p.empty_antichain()),
            );
        }
        Err(e) => {
            rec.check(false, || e.to_string(), || rw(&rp, &p.empty_antichain()));
        }
    }
    let expected_count = match sys.cartan_type() {
        CartanType::B | CartanType::G => Some(1),
        CartanType::F => Some(3),
        _ => None,
    };
    if let Some(c) = expected_count {
        rec.check(
            orbits.len() == c,
            || format!("{} orbits, expected {c}", orbits.len()),
            || rw(&rp, big.representative()),
        );
    }
    rec.finish()
}

/// `Δ⁺_s(C_n)`: every orbit has size `2n − 1`, there are `Catalan(n − 1)`
/// orbits, and each orbit holds exactly one antichain supported on
/// `α₁, …, α_{n−2}`.
pub fn check_short_cn(n: usize) -> Report {
    let sys = system(CartanType::C, n);
    let rp = root_poset(&sys, &PosetVariant::Short);
    let p = rp.poset();
    let mut rec = Recorder::new("conj-2.4", rp.name());
    let orbits = p.all_orbits();
    let total: usize = orbits.iter().map(Orbit::size).sum();
    let size = 2 * n - 1;
    rec.fact("antichains", total);
    rec.fact("orbit_sizes", sizes(&orbits));
    rec.fact("orbit_count", orbits.len());
    rec.check(
        total as u64 == binomial(2 * n as u64 - 1, n as u64),
        || format!("{total} antichains, expected binom(2n-1, n)"),
        || rw(&rp, &p.empty_antichain()),
    );
    rec.check(
        orbits.len() as u64 == catalan(n as u64 - 1),
        || {
            format!(
                "{} orbits, expected Catalan(n-1) = {}",
                orbits.len(),
                catalan(n as u64 - 1)
            )
        },
        || rw(&rp, orbits[0].representative()),
    );
    let support = sys.leading_type_a_simple_roots().expect("type C");
    let in_subsystem = |a: &Antichain| {
        a.iter()
            .all(|x| sys.supported_in(rp.root_index(x), &support))
    };
    let mut canonical = Vec::new();
    for o in &orbits {
        rec.check(
            o.size() == size,
            || format!("orbit of size {}, expected {size}", o.size()),
            || rw(&rp, o.representative()),
        );
        let inside: Vec<&Antichain> = o.antichains().iter().filter(|a| in_subsystem(a)).collect();
        if rec.check(
            inside.len() == 1,
            || {
                format!(
                    "orbit holds {} antichains of the A_(n-2) subsystem",
                    inside.len()
                )
            },
            || rw(&rp, o.representative()),
        ) {
            canonical.push(p.labels_of(inside[0].members()));
        }
    }
    rec.fact("subsystem_representatives", canonical);
    rec.finish()
}

/// `Δ⁺_s ∖ Π_s`: 16 antichains in two orbits of size 8 for `F₄`; a chain
/// for `B_n` and `G₂`; isomorphic to `Δ⁺(C_{n−1})` for `C_n` with the same
/// orbit sizes.
pub fn check_short_no_simple(sys: &RootSystem) -> Report {
    let scope = format!("{sys}/short-no-simple");
    if !sys.has_two_root_lengths() {
        return unsupported("short-no-simple", scope, format!("{sys} is simply laced"));
    }
    let rp = root_poset(sys, &PosetVariant::ShortNoSimple);
    let p = rp.poset();
    let mut rec = Recorder::new("short-no-simple", scope);
    let orbits = p.all_orbits();
    let total: usize = orbits.iter().map(Orbit::size).sum();
    rec.fact("antichains", total);
    rec.fact("orbit_sizes", sizes(&orbits));
    let first = *orbits[0].representative();
    match sys.cartan_type() {
        CartanType::F => {
            rec.check(
                total == 16,
                || format!("{total} antichains, expected 16"),
                || rw(&rp, &first),
            );
            rec.check(
                sizes(&orbits) == [8, 8],
                || "expected two orbits of size 8".into(),
                || rw(&rp, &first),
            );
        }
        CartanType::B | CartanType::G => {
            let chain = (0..p.len()).all(|x| (0..p.len()).all(|y| p.comparable(x, y)));
            rec.fact("chain", chain);
            rec.check(chain, || "poset is not a chain".into(), || rw(&rp, &first));
            rec.check(
                sizes(&orbits) == [p.len() + 1],
                || "a chain has a single orbit".into(),
                || rw(&rp, &first),
            );
        }
        CartanType::C => {
            let n = sys.rank();
            let smaller = if n == 2 {
                system(CartanType::A, 1)
            } else {
                system(CartanType::C, n - 1)
            };
            let full = root_poset(&smaller, &PosetVariant::Full);
            let iso = p.isomorphism(full.poset()).expect("small posets").is_some();
            rec.fact("isomorphic_to", full.name());
            rec.check(
                iso,
                || format!("not isomorphic to {}", full.name()),
                || rw(&rp, &first),
            );
            let other = full.poset().all_orbits();
            rec.check(
                sizes(&orbits) == sizes(&other),
                || format!("orbit sizes differ from {}", full.name()),
                || rw(&rp, &first),
            );
        }
        _ => unreachable!("two root lengths"),
    }
    rec.finish()
}

/// `Δ(≥3)` of `F₄`: orbits of sizes 10 and 8, order 40, and orbit means
/// that are not all equal.
pub fn check_height_geq_3_f4() -> Report {
    let sys = system(CartanType::F, 4);
    let rp = root_poset(&sys, &PosetVariant::HeightAtLeast(3));
    let mut rec = Recorder::new("height-geq-3", rp.name());
    let orbits = rp.poset().all_orbits();
    let mut s = sizes(&orbits);
    s.sort_unstable();
    let ord = lcm_of(&orbits);
    let means = distinct_means(&orbits);
    let distinct: BTreeSet<usize> = s.iter().copied().collect();
    rec.fact("orbit_sizes", &s);
    rec.fact("ord", ord);
    rec.fact("means", &means);
    let w = || rw(&rp, orbits[0].representative());
    rec.check(
        distinct.into_iter().eq([8, 10]),
        || format!("orbit sizes {s:?}, expected only 8 and 10"),
        w,
    );
    rec.check(ord == 40, || format!("ord = {ord}, expected 40"), w);
    rec.check(means.len() > 1, || "orbit means are all equal".into(), w);
    rec.finish()
}

/// Closed form for `𝔛^k({α₁})` in `A_n`, `n ≥ 3`: for `1 ≤ k ≤ n` the roots
/// of height `n + 1 − k` in `Δ(α₁..α_{n−1})` together with
/// `α_{k+1} + … + α_n`; then `{α_n}`; orbit size `2n + 2` with mean `n/2`.
pub fn check_alpha_one_orbit(n: usize) -> Report {
    let a = TypeA::new(n).expect("rank at least 1");
    let p = a.poset();
    let rp = a.root_poset();
    let mut rec = Recorder::new("example-2.2", rp.name());
    let start = a.antichain(&[(1, 1)]).expect("single root");
    let mut cur = start;
    for k in 1..=n {
        cur = p.rowmotion(&cur);
        let height = n + 1 - k;
        let mut cols: Vec<(usize, usize)> = (1..=n)
            .filter_map(|i| {
                let j = i + height - 1;
                (j < n).then_some((i, j))
            })
            .collect();
        if k < n {
            cols.push((k + 1, n));
        }
        let expected = a.antichain(&cols);
        rec.check(
            expected.as_ref() == Ok(&cur),
            || format!("rowmotion^{k} of {{a1}} differs from the closed form"),
            || rw(rp, &start),
        );
    }
    cur = p.rowmotion(&cur);
    rec.check(
        Ok(cur) == a.antichain(&[(n, n)]),
        || format!("rowmotion^{} of {{a1}} is not {{a{n}}}", n + 1),
        || rw(rp, &start),
    );
    let orbit = p.orbit_of(&start);
    rec.fact("orbit_size", orbit.size());
    rec.fact("mean", fraction_string(&orbit.mean_size()));
    rec.check(
        orbit.size() == 2 * n + 2,
        || format!("orbit size {}, expected {}", orbit.size(), 2 * n + 2),
        || rw(rp, &start),
    );
    rec.check(
        orbit.mean_size() == Rational::new(n as i64, 2),
        || "orbit mean differs from n/2".into(),
        || rw(rp, &start),
    );
    rec.finish()
}

/// The two seven-element posets: `P₁ ≅ Δ⁺(A₃)` has orbits 8, 4, 2 with mean
/// `3/2`; `P₂` has orbits 16 and 7, order 112 and different means.
pub fn check_small_graded_pair() -> Report {
    let p1 = parse_poset(P1_TEXT).expect("bundled poset parses");
    let p2 = parse_poset(P2_TEXT).expect("bundled poset parses");
    let mut rec = Recorder::new("example-2.6", "P1,P2");

    let a3 = root_poset(&system(CartanType::A, 3), &PosetVariant::Full);
    let iso = p1.isomorphism(a3.poset()).expect("small").is_some();
    rec.fact("p1_isomorphic_to_a3", iso);
    rec.check(
        iso,
        || "P1 is not isomorphic to A3".into(),
        || Witness::new("P1", &p1, &p1.empty_antichain()),
    );

    let o1 = p1.all_orbits();
    let mut s1 = sizes(&o1);
    s1.sort_unstable_by(|a, b| b.cmp(a));
    rec.fact("p1_orbit_sizes", &s1);
    rec.fact("p1_means", distinct_means(&o1));
    rec.check(
        s1 == [8, 4, 2],
        || format!("P1 orbit sizes {s1:?}"),
        || Witness::new("P1", &p1, o1[0].representative()),
    );
    for o in &o1 {
        rec.check(
            o.mean_size() == Rational::new(3, 2),
            || {
                format!(
                    "P1 orbit of size {} has mean {}",
                    o.size(),
                    fraction_string(&o.mean_size())
                )
            },
            || Witness::new("P1", &p1, o.representative()),
        );
    }

    let o2 = p2.all_orbits();
    let mut s2 = sizes(&o2);
    s2.sort_unstable_by(|a, b| b.cmp(a));
    let ord = lcm_of(&o2);
    let means = distinct_means(&o2);
    rec.fact("p2_orbit_sizes", &s2);
    rec.fact("p2_ord", ord);
    rec.fact("p2_means", &means);
    let w2 = || Witness::new("P2", &p2, o2[0].representative());
    rec.check(s2 == [16, 7], || format!("P2 orbit sizes {s2:?}"), w2);
    rec.check(ord == 112, || format!("P2 ord = {ord}"), w2);
    rec.check(means.len() == 2, || "P2 orbit means coincide".into(), w2);
    if let Some(g) = p2.grading() {
        rec.fact("p2_level", g.level());
        rec.fact("p2_top_is_maximal", g.top_is_maximal());
    }
    rec.finish()
}

/// `Σ #Γ = #AN · #P / level`, with level `h` (full) or `h − 1` (no-simple),
/// and `Σ #Γ` equal to the number of covers in the lattice of upper ideals.
pub fn check_edge_identity(sys: &RootSystem, variant: &PosetVariant) -> Report {
    let variant = variant.normalized();
    let h = sys.coxeter_number() as i64;
    let level = match variant {
        PosetVariant::Full => h,
        PosetVariant::NoSimple => h - 1,
        ref other => {
            return unsupported(
                "edge-identity",
                format!("{sys}/{other}"),
                "defined for the full and no-simple posets".into(),
            )
        }
    };
    let rp = root_poset(sys, &variant);
    let p = rp.poset();
    let mut rec = Recorder::new("edge-identity", rp.name());
    let all = p.enumerate_antichains();
    let sum = p.antichain_lattice_edge_count();
    let covers = p.antichain_lattice_cover_count();
    let predicted = Rational::new(all.len() as i64 * p.len() as i64, level);
    rec.fact("antichains", all.len());
    rec.fact("sum_of_sizes", sum);
    rec.fact("predicted", fraction_string(&predicted));
    rec.fact("lattice_covers", covers);
    let w = || rw(&rp, &p.empty_antichain());
    rec.check(
        Rational::from_integer(sum as i64) == predicted,
        || {
            format!(
                "sum of sizes {sum} differs from {}",
                fraction_string(&predicted)
            )
        },
        w,
    );
    rec.check(
        covers == sum,
        || format!("lattice has {covers} covers, sum is {sum}"),
        w,
    );
    rec.finish()
}

/// Orbit tables for `F₄`, written in the reversed simple-root numbering.
pub mod f4_tables {
    /// Full poset: representative and orbit size.
    pub const FULL_REPRESENTATIVES: &[(&str, usize)] = &[
        ("1000", 12),
        ("0100", 12),
        ("0010", 12),
        ("0001", 12),
        ("0011", 12),
        ("1100", 12),
        ("1111", 12),
        ("2432", 12),
        ("1000,0010", 2),
        ("0110", 3),
        ("0001,1110", 4),
    ];

    /// Non-standard orbits of the no-simple poset, each listed from its
    /// first antichain; rowmotion of the last entry is the first.
    pub const NO_SIMPLE_CHAINS: &[&[&str]] = &[
        &[
            "1321",
            "2221",
            "1321,2211",
            "1221,2210",
            "0221,1211",
            "0211,1111,2210",
            "0111,1210",
            "0011,0210,1110",
            "0110,1100",
            "0011",
            "2210",
        ],
        &[
            "1221",
            "0221,2211",
            "1211,2210",
            "0221,1111,1210",
            "0211,1110",
            "0111,0210,1100",
            "0011,0110",
            "1100",
            "0221",
            "2211",
            "1321,2210",
        ],
        &[
            "1211",
            "0221,1111,2210",
            "0211,1210",
            "1111,0210",
            "0111,1110",
            "0011,0210,1100",
            "0110",
            "0011,1100",
            "0210",
            "1111",
            "0221,2210",
        ],
        &[
            "1210",
            "0221,1111",
            "0211,2210",
            "1111,1210",
            "0221,1110",
            "0211,1100",
            "0111,0210",
            "0011,1110",
            "0210,1100",
            "0111",
            "0011,2210",
        ],
        &[
            "1110",
            "0221,1100",
            "0211",
            "1111,2210",
            "0221,1210",
            "0211,1111",
            "0111,2210",
            "0011,1210",
            "0210,1110",
            "0111,1100",
            "0011,0210",
        ],
    ];

    /// Head of the standard no-simple orbit after `∅`.
    pub const NO_SIMPLE_STANDARD_HEAD: &[&str] = &["2432", "2431"];

    /// Non-standard orbits of the short-root poset.
    pub const SHORT_CHAINS: &[&[&str]] = &[
        &[
            "0100",
            "1000",
            "0111",
            "1210",
            "1111",
            "0111,1210",
            "1110",
            "0111,1100",
            "0110,1000",
        ],
        &["1100", "0111,1000", "0110"],
    ];

    /// Head and tail of the standard short-root orbit after `∅`.
    pub const SHORT_STANDARD_HEAD: &[&str] = &["2321", "1321"];
    pub const SHORT_STANDARD_TAIL: &str = "1000,0100";
}

fn parse_f4(rp: &RootPoset, text: &str) -> Antichain {
    let items: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    rp.parse_antichain(&items, Convention::PaperF4)
        .unwrap_or_else(|e| panic!("bad table entry `{text}`: {e}"))
}

fn replay_chains(rec: &mut Recorder, rp: &RootPoset, chains: &[&[&str]]) -> usize {
    let p = rp.poset();
    let mut arrows = 0;
    for chain in chains {
        let parsed: Vec<Antichain> = chain.iter().map(|t| parse_f4(rp, t)).collect();
        for (i, a) in parsed.iter().enumerate() {
            let next = &parsed[(i + 1) % parsed.len()];
            arrows += 1;
            rec.check(
                p.rowmotion(a) == *next,
                || {
                    format!(
                        "{}: {{{}}} does not map to {{{}}}",
                        rp.name(),
                        chain[i],
                        chain[(i + 1) % chain.len()]
                    )
                },
                || rw(rp, a),
            );
        }
        let o = p.orbit_of(&parsed[0]);
        rec.check(
            o.size() == parsed.len(),
            || {
                format!(
                    "{}: orbit of {{{}}} has size {}",
                    rp.name(),
                    chain[0],
                    o.size()
                )
            },
            || rw(rp, &parsed[0]),
        );
    }
    arrows
}

fn check_standard_head(
    rec: &mut Recorder,
    rp: &RootPoset,
    head: &[&str],
    tail: Option<&str>,
    size: usize,
) {
    let p = rp.poset();
    let std = match p.standard_orbit() {
        Ok(o) => o,
        Err(e) => {
            rec.check(false, || e.to_string(), || rw(rp, &p.empty_antichain()));
            return;
        }
    };
    rec.check(
        std.size() == size,
        || format!("{}: standard orbit of size {}", rp.name(), std.size()),
        || rw(rp, &p.empty_antichain()),
    );
    for (i, t) in head.iter().enumerate() {
        let a = parse_f4(rp, t);
        rec.check(
            std.antichains().get(i + 1) == Some(&a),
            || {
                format!(
                    "{}: standard orbit step {} is not {{{t}}}",
                    rp.name(),
                    i + 1
                )
            },
            || rw(rp, &a),
        );
    }
    if let Some(t) = tail {
        let a = parse_f4(rp, t);
        rec.check(
            std.antichains().last() == Some(&a) && p.rowmotion(&a) == p.empty_antichain(),
            || format!("{}: standard orbit does not end with {{{t}}}", rp.name()),
            || rw(rp, &a),
        );
    }
}

/// Reproduces the three `F₄` orbit tables: orbit-size multisets,
/// representatives in orbits of the stated sizes, and every printed arrow.
pub fn check_f4_tables() -> Report {
    use f4_tables::*;
    let sys = system(CartanType::F, 4);
    let mut rec = Recorder::new("appendix-f4", "F4");

    let full = root_poset(&sys, &PosetVariant::Full);
    let orbits = full.poset().all_orbits();
    let mut s = sizes(&orbits);
    s.sort_unstable();
    rec.fact("full_antichains", s.iter().sum::<usize>());
    rec.fact("full_orbit_sizes", &s);
    rec.check(
        s == [2, 3, 4, 12, 12, 12, 12, 12, 12, 12, 12],
        || format!("full orbit sizes {s:?}"),
        || rw(&full, orbits[0].representative()),
    );
    let mut hit = BTreeSet::new();
    for &(text, size) in FULL_REPRESENTATIVES {
        let a = parse_f4(&full, text);
        let pos = orbits
            .iter()
            .position(|o| o.contains(&a))
            .expect("orbits partition");
        hit.insert(pos);
        rec.check(
            orbits[pos].size() == size,
            || {
                format!(
                    "{{{text}}} lies in an orbit of size {}, expected {size}",
                    orbits[pos].size()
                )
            },
            || rw(&full, &a),
        );
    }
    rec.check(
        hit.len() == FULL_REPRESENTATIVES.len(),
        || "two listed representatives share an orbit".into(),
        || rw(&full, orbits[0].representative()),
    );

    let ns = root_poset(&sys, &PosetVariant::NoSimple);
    let orbits = ns.poset().all_orbits();
    rec.fact(
        "no_simple_antichains",
        orbits.iter().map(Orbit::size).sum::<usize>(),
    );
    rec.fact("no_simple_orbit_sizes", sizes(&orbits));
    rec.check(
        sizes(&orbits) == [11; 6],
        || "no-simple orbits are not six of size 11".into(),
        || rw(&ns, orbits[0].representative()),
    );
    let mut arrows = replay_chains(&mut rec, &ns, NO_SIMPLE_CHAINS);
    check_standard_head(&mut rec, &ns, NO_SIMPLE_STANDARD_HEAD, None, 11);
    arrows += NO_SIMPLE_STANDARD_HEAD.len();

    let short = root_poset(&sys, &PosetVariant::Short);
    let orbits = short.poset().all_orbits();
    let mut s = sizes(&orbits);
    s.sort_unstable();
    rec.fact("short_antichains", s.iter().sum::<usize>());
    rec.fact("short_orbit_sizes", &s);
    rec.check(
        s == [3, 9, 9],
        || format!("short orbit sizes {s:?}"),
        || rw(&short, orbits[0].representative()),
    );
    arrows += replay_chains(&mut rec, &short, SHORT_CHAINS);
    check_standard_head(
        &mut rec,
        &short,
        SHORT_STANDARD_HEAD,
        Some(SHORT_STANDARD_TAIL),
        9,
    );
    arrows += SHORT_STANDARD_HEAD.len() + 1;
    rec.fact("arrows_checked", arrows);
    rec.finish()
}

/// Every type-A statement, exhaustively for one rank: both forms of `𝒴`
/// agree; `𝒴` is rowmotion-invariant; array rowmotion and its inverse
/// agree with the poset definitions; `𝔛(Γ)* = 𝔛⁻¹(Γ*)`; `𝒴(Γ*) = 𝒴(Γ)`;
/// `#Γ + #Γ* = n`; `𝒴` ranges over `0..=n−1` with the extremes attained
/// exactly on the standard orbit and on the alternating simple roots; and
/// the run-count identities behind `𝒴(Γ*) = 𝒴(Γ)` for all subsets of `[n]`.
pub fn check_type_a_suite(n: usize) -> Report {
    let a = TypeA::new(n).expect("rank at least 1");
    let p = a.poset();
    let rp = a.root_poset();
    let mut rec = Recorder::new("oy-suite", rp.name());
    let all = p.enumerate_antichains();
    rec.fact("antichains", all.len());
    rec.check(
        all.len() as u64 == catalan(n as u64 + 1),
        || format!("{} antichains, expected Catalan(n+1)", all.len()),
        || rw(rp, &p.empty_antichain()),
    );
    let oy = |g: &Antichain| a.oy_ideal_form(g).expect("type A antichain");
    let mut values = BTreeMap::new();
    for g in &all {
        let y = oy(g);
        values.insert(*g, y);
        let up = p.rowmotion(g);
        let down = p.inverse_rowmotion(g);
        let star = a.star(g).expect("dual exists");
        let checks: [(bool, &str); 8] = [
            (
                a.oy_difference_form(g) == Ok(y),
                "ideal and difference forms of Y differ",
            ),
            (oy(&up) == y, "Y is not rowmotion-invariant"),
            (a.rowmotion_array(g) == Ok(up), "array rowmotion differs"),
            (
                a.inverse_rowmotion_array(g) == Ok(down),
                "array inverse rowmotion differs",
            ),
            (
                a.star(&up) == Ok(p.inverse_rowmotion(&star)),
                "rowmotion(G)* differs from rowmotion^-1(G*)",
            ),
            (oy(&star) == y, "Y(G*) differs from Y(G)"),
            (g.len() + star.len() == n, "#G + #G* differs from n"),
            (a.star(&star) == Ok(*g), "duality is not an involution"),
        ];
        for (ok, what) in checks {
            rec.check(ok, || what.to_string(), || rw(rp, g));
        }
    }

    let min = values.values().copied().min().unwrap_or(0);
    let max = values.values().copied().max().unwrap_or(0);
    rec.fact("oy_min", min);
    rec.fact("oy_max", max);
    let first = p.empty_antichain();
    rec.check(
        min == 0,
        || format!("minimum of Y is {min}"),
        || rw(rp, &first),
    );
    rec.check(
        max == n as i64 - 1,
        || format!("maximum of Y is {max}"),
        || rw(rp, &first),
    );
    let standard: BTreeSet<Antichain> = p
        .standard_orbit()
        .map(|o| o.antichains().iter().copied().collect())
        .unwrap_or_default();
    let alternating: BTreeSet<Antichain> = [a.odd_simple_roots(), a.even_simple_roots()]
        .into_iter()
        .collect();
    for (g, &y) in &values {
        rec.check(
            (y == 0) == standard.contains(g),
            || "Y = 0 does not single out the standard orbit".into(),
            || rw(rp, g),
        );
        rec.check(
            (y == n as i64 - 1) == alternating.contains(g),
            || "Y = n-1 does not single out the alternating simple roots".into(),
            || rw(rp, g),
        );
    }
    let odd = a.odd_simple_roots();
    rec.check(
        p.rowmotion_power(&odd, 2) == odd,
        || "alternating simple roots do not form one orbit".into(),
        || rw(rp, &odd),
    );

    let mut subsets = 0u64;
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (1..=n).filter(|t| mask >> (t - 1) & 1 == 1).collect();
        let rest = type_a::complement(&set, n);
        let lower = type_a::lower_essential_gaps(&set);
        let ok = lower == type_a::components_with_zero(&set)
            && lower == type_a::upper_essential_gaps(&rest, n)
            && type_a::upper_essential_gaps(&rest, n) == type_a::components_with_top(&rest, n);
        subsets += 1;
        rec.check(
            ok,
            || format!("run counts disagree for the subset {set:?}"),
            || rw(rp, &p.empty_antichain()),
        );
    }
    rec.fact("subsets_checked", subsets);
    rec.finish()
}

/// `Σ w(γ)·r_Γ(γ)` on `Δ⁺(C_n)` with `w = 2` on short roots and 1 on long
/// roots, tested for constancy on every orbit.
///
/// Two companions are recorded as evidence: an antichain where the
/// unweighted sum changes under rowmotion, and whether the OY-invariant of
/// the unfolded antichain in `A_{2n−1}` is constant on every orbit.
pub fn check_weighted_oy_cn(n: usize) -> Report {
    let sys = system(CartanType::C, n);
    let rp = root_poset(&sys, &PosetVariant::Full);
    let p = rp.poset();
    let mut rec = Recorder::new("weighted-oy-cn", rp.name());
    let weighted = |g: &Antichain| p.weighted_oy(g, |x| if rp.is_short(x) { 2 } else { 1 });
    let plain = |g: &Antichain| p.weighted_oy(g, |_| 1);
    let unfold = Unfolding::new(&rp);
    let orbits = p.all_orbits();
    rec.fact("orbit_count", orbits.len());
    let mut broken = 0;
    let mut plain_witness = None;
    let mut unfolded_invariant = true;
    for o in &orbits {
        let values: Vec<i64> = o.antichains().iter().map(weighted).collect();
        if let Some(i) = values.iter().position(|&v| v != values[0]) {
            broken += 1;
            let (g, next) = (&o.antichains()[i - 1], &o.antichains()[i]);
            rec.check(
                false,
                || {
                    format!(
                        "weighted sum goes from {} to {} under rowmotion",
                        values[i - 1],
                        values[i]
                    )
                },
                || rw(&rp, g),
            );
            if broken == 1 {
                rec.fact(
                    "weighted_witness",
                    serde_json::json!({
                        "poset": rp.name(),
                        "antichain": p.labels_of(g.members()),
                        "image": p.labels_of(next.members()),
                        "values": [values[i - 1], values[i]],
                    }),
                );
            }
        }
        for (i, g) in o.antichains().iter().enumerate() {
            let next = &o.antichains()[(i + 1) % o.size()];
            if plain_witness.is_none() && plain(g) != plain(next) {
                plain_witness = Some(serde_json::json!({
                    "poset": rp.name(),
                    "antichain": p.labels_of(g.members()),
                    "image": p.labels_of(next.members()),
                    "values": [plain(g), plain(next)],
                }));
            }
            unfolded_invariant &= unfold.oy(g) == unfold.oy(next);
        }
    }
    rec.fact("orbits_with_varying_weighted_sum", broken);
    rec.fact("unweighted_invariant", plain_witness.is_none());
    if let Some(w) = plain_witness {
        rec.fact("unweighted_witness", w);
    }
    rec.fact("unfolded_oy_invariant", unfolded_invariant);
    rec.finish()
}

/// `Δ⁺(C_n)` inside `Δ⁺(A_{2n−1})`: a short root lifts to a pair of roots
/// swapped by the diagram flip `αᵢ ↔ α_{2n−i}`, a long root to one fixed
/// root.
struct Unfolding {
    big: TypeA,
    lifts: Vec<Vec<usize>>,
}

impl Unfolding {
    fn new(small: &RootPoset) -> Self {
        let n = small.system().rank();
        let big = TypeA::new(2 * n - 1).expect("rank at least 1");
        let mut lifts = vec![Vec::new(); small.poset().len()];
        for e in 0..big.poset().len() {
            let (i, j) = big.interval(e);
            let hit = |k: usize| u32::from(i <= k && k <= j);
            let folded: Vec<u32> = (1..=n)
                .map(|k| {
                    if k < n {
                        hit(k) + hit(2 * n - k)
                    } else {
                        hit(n)
                    }
                })
                .collect();
            let x = small
                .element_of_coefficients(&folded)
                .expect("folds to a root");
            lifts[x].push(e);
        }
        Unfolding { big, lifts }
    }

    fn oy(&self, g: &Antichain) -> i64 {
        let set: ElementSet = g
            .iter()
            .flat_map(|x| self.lifts[x].iter().copied())
            .collect();
        let lifted = self
            .big
            .poset()
            .antichain(set)
            .expect("lift of an antichain");
        debug_assert_eq!(
            lifted.len(),
            g.iter().map(|x| self.lifts[x].len()).sum::<usize>()
        );
        self.big.oy_ideal_form(&lifted).expect("type A antichain")
    }
}

/// Closed-form antichain counts for the full, no-simple and short posets.
pub fn check_counting(sys: &RootSystem) -> Report {
    let mut rec = Recorder::new("counting", sys.name());
    let mut variants = vec![PosetVariant::Full, PosetVariant::NoSimple];
    if sys.has_two_root_lengths() {
        variants.push(PosetVariant::Short);
    }
    for v in variants {
        let rp = root_poset(sys, &v);
        let count = rp.poset().enumerate_antichains().len() as u64;
        let expected = sys.expected_antichain_count(&v);
        rec.fact(
            &v.to_string(),
            serde_json::json!({ "antichains": count, "formula": expected.as_ref().ok() }),
        );
        rec.check(
            expected.as_ref() == Ok(&count),
            || {
                format!(
                    "{}: {count} antichains, formula gives {:?}",
                    rp.name(),
                    expected
                )
            },
            || rw(&rp, &rp.poset().empty_antichain()),
        );
    }
    rec.finish()
}

/// Poset isomorphisms between root posets of different types.
pub fn check_isomorphisms() -> Report {
    let mut rec = Recorder::new("isomorphism", "B,C,A");
    let mut confirmed = Vec::new();
    let mut pair = |rec: &mut Recorder, x: RootPoset, y: RootPoset| {
        let ok = x
            .poset()
            .isomorphism(y.poset())
            .expect("small posets")
            .is_some();
        let label = format!("{} ~ {}", x.name(), y.name());
        if rec.check(
            ok,
            || format!("{label} fails"),
            || rw(&x, &x.poset().empty_antichain()),
        ) {
            confirmed.push(label);
        }
    };
    for n in 2..=5 {
        let b = system(CartanType::B, n);
        let c = system(CartanType::C, n);
        pair(
            &mut rec,
            root_poset(&b, &PosetVariant::Full),
            root_poset(&c, &PosetVariant::Full),
        );
        pair(
            &mut rec,
            root_poset(&c, &PosetVariant::Short),
            root_poset(&c, &PosetVariant::NoSimple),
        );
        let smaller = if n == 2 {
            system(CartanType::A, 1)
        } else {
            system(CartanType::C, n - 1)
        };
        pair(
            &mut rec,
            root_poset(&c, &PosetVariant::ShortNoSimple),
            root_poset(&smaller, &PosetVariant::Full),
        );
    }
    for n in 1..=6 {
        pair(
            &mut rec,
            root_poset(&system(CartanType::A, n + 1), &PosetVariant::NoSimple),
            root_poset(&system(CartanType::A, n), &PosetVariant::Full),
        );
    }
    rec.fact("isomorphisms", confirmed);
    rec.finish()
}

/// Structural checks on a poset: rowmotion is a bijection on antichains,
/// every image is an antichain, the inverse undoes it, and the standard
/// orbit exists with size `level + 1` whenever its hypotheses hold.
pub fn check_engine(name: &str, p: &Poset) -> Report {
    let mut rec = Recorder::new("engine", name);
    let table = p.rowmotion_table();
    let mut hit = vec![false; table.len()];
    for (i, a) in table.antichains().iter().enumerate() {
        let img = p.rowmotion(a);
        rec.check(
            p.is_antichain(img.members()),
            || "image is not an antichain".into(),
            || Witness::new(name, p, a),
        );
        rec.check(
            p.inverse_rowmotion(&img) == *a,
            || "inverse does not undo rowmotion".into(),
            || Witness::new(name, p, a),
        );
        hit[table.images()[i]] = true;
    }
    let bijective = hit.iter().all(|&b| b);
    rec.fact("antichains", table.len());
    rec.fact("bijective", bijective);
    rec.check(
        bijective,
        || "rowmotion is not surjective".into(),
        || Witness::new(name, p, &p.empty_antichain()),
    );
    if let Some(g) = p.grading() {
        rec.fact("level", g.level());
        if g.bottom_is_minimal() && g.top_is_maximal() {
            let size = p.standard_orbit().map(|o| o.size()).unwrap_or(0);
            rec.fact("standard_orbit_size", size);
            rec.check(
                size == g.level() + 1,
                || format!("standard orbit of size {size}, level {}", g.level()),
                || Witness::new(name, p, &p.empty_antichain()),
            );
        }
    }
    rec.finish()
}

/// Root systems used for the full-poset checks.
pub fn default_matrix(include_large: bool) -> Vec<(CartanType, usize)> {
    use CartanType::*;
    let mut m: Vec<(CartanType, usize)> = (1..=7).map(|n| (A, n)).collect();
    m.extend((2..=5).map(|n| (B, n)));
    m.extend((2..=5).map(|n| (C, n)));
    m.extend([(D, 4), (D, 5), (E, 6)]);
    if include_large {
        m.extend([(E, 7), (E, 8)]);
    }
    m.extend([(F, 4), (G, 2)]);
    m
}

/// Registered claim identifiers with one-line descriptions, in report order.
pub const CLAIMS: &[(&str, &str)] = &[
    (
        "appendix-f4",
        "F4 orbit tables: sizes, representatives and every printed arrow",
    ),
    (
        "conj-2.1",
        "full root poset: order h or 2h via -w0, orbit means n/2",
    ),
    (
        "conj-2.2",
        "positive roots without simple roots: level h-1, means n(h-2)/(2(h-1))",
    ),
    (
        "conj-2.3",
        "short roots: order hot(theta_s)+1, constant means, orbit counts",
    ),
    (
        "conj-2.4",
        "short roots of C_n: orbits of size 2n-1, Catalan many, subsystem representatives",
    ),
    (
        "counting",
        "antichain counts agree with the product formulas",
    ),
    (
        "edge-identity",
        "sum of antichain sizes equals #AN * #P / level and the lattice cover count",
    ),
    (
        "engine",
        "rowmotion is a bijection on antichains with standard orbits where expected",
    ),
    ("example-2.2", "closed form for the orbit of {a1} in A_n"),
    (
        "example-2.6",
        "two seven-element posets with orbits 8,4,2 and 16,7",
    ),
    (
        "height-geq-3",
        "F4 roots of height >= 3: orbits 10 and 8, unequal means",
    ),
    (
        "isomorphism",
        "isomorphisms between root posets of types A, B, C",
    ),
    ("oy-suite", "type A: OY invariant, array rowmotion, duality"),
    ("short-no-simple", "short roots without simple roots"),
    (
        "weighted-oy-cn",
        "C_n: weighted removal-index sum with weight 2 on short roots",
    ),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|(id, _)| *id).collect()
}

/// Restricts a claim to one root system, e.g. `F4`, or for the rank-indexed
/// claims a type letter with the rank, e.g. `A5` or `C3`.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub system: Option<(CartanType, usize)>,
    pub include_large: bool,
}

fn filtered(
    claim: &str,
    options: &SuiteOptions,
    candidates: Vec<(CartanType, usize)>,
) -> Result<Vec<(CartanType, usize)>, HarnessError> {
    match options.system {
        None => Ok(candidates),
        Some(s) => {
            let fits = match claim {
                "conj-2.3" | "short-no-simple" => s.0.is_two_length_type(),
                "conj-2.4" | "weighted-oy-cn" => s.0 == CartanType::C,
                "oy-suite" => s.0 == CartanType::A,
                "example-2.2" => s.0 == CartanType::A && s.1 >= 3,
                "appendix-f4" | "height-geq-3" => s == (CartanType::F, 4),
                "example-2.6" | "isomorphism" => false,
                _ => true,
            };
            if fits {
                Ok(vec![s])
            } else {
                Err(HarnessError::ScopeMismatch {
                    claim: claim.to_string(),
                    scope: format!("{}{}", s.0, s.1),
                })
            }
        }
    }
}

/// Runs one registered claim over its default scope, or over
/// `options.system` when set.
pub fn run_claim(claim: &str, options: &SuiteOptions) -> Result<Vec<Report>, HarnessError> {
    use CartanType::*;
    let matrix = default_matrix(options.include_large);
    let two_length: Vec<_> = matrix
        .iter()
        .copied()
        .filter(|(t, _)| t.is_two_length_type())
        .collect();
    let ranks = |ty: CartanType, r: std::ops::RangeInclusive<usize>| {
        r.map(move |n| (ty, n)).collect::<Vec<_>>()
    };
    let scope = |c: Vec<(CartanType, usize)>| filtered(claim, options, c);
    let sys = |(t, n): (CartanType, usize)| system(t, n);
    let reports = match claim {
        "appendix-f4" => {
            scope(vec![(F, 4)])?;
            vec![check_f4_tables()]
        }
        "conj-2.1" => scope(matrix)?
            .into_iter()
            .map(|s| check_full_root_poset(&sys(s)))
            .collect(),
        "conj-2.2" => {
            // The one-element poset of A2 is too small for the 2h-2 order.
            let m = matrix.into_iter().filter(|&s| s != (A, 2)).collect();
            scope(m)?
                .into_iter()
                .map(|s| check_no_simple_root_poset(&sys(s)))
                .collect()
        }
        "conj-2.3" => scope(two_length)?
            .into_iter()
            .map(|s| check_short_root_poset(&sys(s)))
            .collect(),
        "conj-2.4" => scope(ranks(C, 2..=5))?
            .into_iter()
            .map(|(_, n)| check_short_cn(n))
            .collect(),
        "counting" => scope(matrix)?
            .into_iter()
            .map(|s| check_counting(&sys(s)))
            .collect(),
        "edge-identity" => scope(matrix)?
            .into_iter()
            .flat_map(|s| {
                let rs = sys(s);
                [PosetVariant::Full, PosetVariant::NoSimple].map(|v| check_edge_identity(&rs, &v))
            })
            .collect(),
        "engine" => {
            let mut out = Vec::new();
            for s in scope(matrix)? {
                let rs = sys(s);
                let mut variants = vec![PosetVariant::Full, PosetVariant::NoSimple];
                if rs.has_two_root_lengths() {
                    variants.extend([PosetVariant::Short, PosetVariant::ShortNoSimple]);
                }
                for v in variants {
                    let rp = root_poset(&rs, &v);
                    out.push(check_engine(&rp.name(), rp.poset()));
                }
            }
            if options.system.is_none() {
                for (name, text) in [("P1", P1_TEXT), ("P2", P2_TEXT)] {
                    out.push(check_engine(
                        name,
                        &parse_poset(text).expect("bundled poset"),
                    ));
                }
                let f4 = root_poset(&system(F, 4), &PosetVariant::HeightAtLeast(3));
                out.push(check_engine(&f4.name(), f4.poset()));
            }
            out
        }
        "example-2.2" => scope(ranks(A, 3..=7))?
            .into_iter()
            .map(|(_, n)| check_alpha_one_orbit(n))
            .collect(),
        "example-2.6" => {
            scope(vec![])?;
            vec![check_small_graded_pair()]
        }
        "height-geq-3" => {
            scope(vec![(F, 4)])?;
            vec![check_height_geq_3_f4()]
        }
        "isomorphism" => {
            scope(vec![])?;
            vec![check_isomorphisms()]
        }
        "oy-suite" => scope(ranks(A, 1..=7))?
            .into_iter()
            .map(|(_, n)| check_type_a_suite(n))
            .collect(),
        "short-no-simple" => scope(two_length)?
            .into_iter()
            .map(|s| check_short_no_simple(&sys(s)))
            .collect(),
        "weighted-oy-cn" => scope(ranks(C, 2..=5))?
            .into_iter()
            .map(|(_, n)| check_weighted_oy_cn(n))
            .collect(),
        other => return Err(HarnessError::UnknownClaim(other.to_string())),
    };
    Ok(reports)
}

/// Every registered claim over its default scope, in registry order.
pub fn run_all(include_large: bool) -> Vec<Report> {
    let options = SuiteOptions {
        system: None,
        include_large,
    };
    CLAIMS
        .iter()
        .flat_map(|(id, _)| run_claim(id, &options).expect("registered claim"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_number_helpers() {
        assert_eq!(
            (0..6).map(catalan).collect::<Vec<_>>(),
            [1, 1, 2, 5, 14, 42]
        );
        assert_eq!(binomial(7, 4), 35);
        assert!(is_prime(11) && is_prime(5) && !is_prime(9) && !is_prime(1));
    }

    #[test]
    fn failing_report_has_witness() {
        let p = parse_poset("a < b").unwrap();
        let mut rec = Recorder::new("engine", "demo");
        rec.check(
            false,
            || "forced".into(),
            || Witness::new("demo", &p, &p.maximal_antichain()),
        );
        let r = rec.finish();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness().unwrap();
        assert_eq!(w.antichain, vec!["b"]);
        assert!(r.summary_line().starts_with("FAIL engine demo; forced"));
    }

    #[test]
    fn json_key_order_is_fixed() {
        let r = check_height_geq_3_f4();
        let json = r.to_json();
        let keys: Vec<usize> = ["claim_id", "scope", "status", "evidence"]
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn unknown_claim_lists_ids() {
        let err = run_claim("conj-9", &SuiteOptions::default()).unwrap_err();
        assert!(err.to_string().contains("appendix-f4"));
    }

    #[test]
    fn scope_mismatch_is_an_error() {
        let opts = SuiteOptions {
            system: Some((CartanType::A, 3)),
            include_large: false,
        };
        assert!(matches!(
            run_claim("conj-2.4", &opts),
            Err(HarnessError::ScopeMismatch { .. })
        ));
        assert_eq!(run_claim("conj-2.1", &opts).unwrap().len(), 1);
    }

    #[test]
    fn simply_laced_short_is_unsupported() {
        let r = check_short_root_poset(&system(CartanType::D, 4));
        assert_eq!(r.status, Status::Unsupported);
    }
}
