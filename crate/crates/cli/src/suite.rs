use std::collections::BTreeMap;
use std::time::Instant;

use pgtk_core::error::{Error, Result};
use pgtk_core::group::{center, commutator_subgroup, iterated_commutator, Group, SubgroupRef};
use pgtk_core::powerful::{
    check_frattini_theorem, check_lubotzky_mann_suite, check_shalev_identity, check_theorem_a_i, check_theorem_a_ii,
    check_theorem_a_iii, check_theorem_b, exponent_p_normal_subgroups, is_powerful, Outcome, TheoremCheck,
};
use pgtk_core::series::{
    derived_series, frattini_series, lower_central_series, lower_p_closed_form, lower_p_series_recursive, script_d_n,
    upper_central_series,
};
use pgtk_core::tensor::{
    check_nfold_exact_sequence, check_surjection_order_law, check_tensor_powerful, compute_q_tensor, compute_tensor,
    CrossedModule, TensorCaps, TensorResult,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::{build_corpus, CorpusItem, CorpusSpec};

/// Version tag of the report layout.
pub const REPORT_SCHEMA: &str = "pgtk.suite-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    SeriesAxioms,
    PowerfulTheorems,
    TensorStructure,
    TensorPowerful,
    Exactness,
    Frattini,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [
        Suite::SeriesAxioms,
        Suite::PowerfulTheorems,
        Suite::Frattini,
        Suite::TensorStructure,
        Suite::TensorPowerful,
        Suite::Exactness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::SeriesAxioms => "series-axioms",
            Suite::PowerfulTheorems => "powerful-theorems",
            Suite::TensorStructure => "tensor-structure",
            Suite::TensorPowerful => "tensor-powerful",
            Suite::Exactness => "exactness",
            Suite::Frattini => "frattini",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::PARTS.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    SubstantivePass,
    VacuousPass,
    Violation,
    SkippedResource,
}

impl From<Outcome> for CheckOutcome {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::SubstantivePass => CheckOutcome::SubstantivePass,
            Outcome::VacuousPass => CheckOutcome::VacuousPass,
            Outcome::Violation => CheckOutcome::Violation,
        }
    }
}

/// One scheduled check on one corpus item.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subgroup: Option<String>,
    pub outcome: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<Value>,
}

impl CheckRecord {
    fn new(check: &str, group: &Group, outcome: CheckOutcome) -> Self {
        CheckRecord { check: check.into(), group: group.name().into(), n: None, subgroup: None, outcome, detail: None }
    }

    fn pass_if(check: &str, group: &Group, ok: bool) -> Self {
        let o = if ok { CheckOutcome::SubstantivePass } else { CheckOutcome::Violation };
        CheckRecord::new(check, group, o)
    }

    fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    fn with_subgroup(mut self, label: &str) -> Self {
        self.subgroup = Some(label.into());
        self
    }

    fn with_detail(mut self, d: Value) -> Self {
        self.detail = Some(d);
        self
    }

    fn from_theorem(t: TheoremCheck) -> Self {
        let outcome = t.outcome().into();
        CheckRecord {
            check: t.theorem_id.as_str().into(),
            group: t.group_name,
            n: Some(t.parameter_n),
            subgroup: t.subgroup,
            outcome,
            detail: t.witness.map(|w| serde_json::to_value(w).expect("witness serializes")),
        }
    }

    /// A failed computation: resource limits become skips, anything else
    /// is reported as a violation.
    fn from_error(check: &str, group: &Group, e: &Error) -> Self {
        let o = if e.is_resource() { CheckOutcome::SkippedResource } else { CheckOutcome::Violation };
        CheckRecord::new(check, group, o).with_detail(json!({ "error": e.to_string() }))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub substantive_pass: usize,
    pub vacuous_pass: usize,
    pub violation: usize,
    pub skipped_resource: usize,
}

impl Counts {
    fn add(&mut self, o: CheckOutcome) {
        match o {
            CheckOutcome::SubstantivePass => self.substantive_pass += 1,
            CheckOutcome::VacuousPass => self.vacuous_pass += 1,
            CheckOutcome::Violation => self.violation += 1,
            CheckOutcome::SkippedResource => self.skipped_resource += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.substantive_pass + self.vacuous_pass + self.violation + self.skipped_resource
    }
}

/// Limits and thresholds for a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub caps: TensorCaps,
    /// Substantive passes each check needs for a healthy run.
    pub min_substantive: usize,
    /// Candidate normal subgroups `N` tried per group.
    pub subgroup_limit: usize,
    /// Largest group whose plain and mod-p tensor squares are validated.
    pub tensor_structure_order: usize,
    /// Largest `G` used by the tensor-powerful suite.
    pub tensor_powerful_order: usize,
    /// Largest `H` used by the exactness suite.
    pub exactness_order: usize,
    /// Largest `H/N` whose n-fold mod-p tensor is built for the order law.
    pub surjection_quotient_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            caps: TensorCaps::default(),
            min_substantive: 3,
            subgroup_limit: 6,
            tensor_structure_order: 16,
            tensor_powerful_order: 27,
            exactness_order: 16,
            surjection_quotient_order: 9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub corpus: CorpusSpec,
    pub suite: SuiteConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: Suite,
    pub tool_version: String,
    pub config: ConfigEcho,
    pub corpus_size: usize,
    pub counts: Counts,
    pub per_check: BTreeMap<String, Counts>,
    /// Checks with fewer substantive passes than required.
    pub unmet_minimums: Vec<String>,
    pub exit_code: i32,
    /// Only filled in on request, so that reports stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
    pub records: Vec<CheckRecord>,
}

/// 0: no violations and every minimum met; 1: a violation; 2: resource
/// limits skipped checks or left a minimum unmet.
pub fn exit_code(counts: &Counts, unmet_minimums: &[String]) -> i32 {
    if counts.violation > 0 {
        1
    } else if counts.skipped_resource > 0 || !unmet_minimums.is_empty() {
        2
    } else {
        0
    }
}

impl SuiteReport {
    fn assemble(suite: Suite, config: ConfigEcho, corpus_size: usize, records: Vec<CheckRecord>) -> Self {
        let mut counts = Counts::default();
        let mut per_check: BTreeMap<String, Counts> = BTreeMap::new();
        for r in &records {
            counts.add(r.outcome);
            per_check.entry(r.check.clone()).or_default().add(r.outcome);
        }
        let unmet_minimums: Vec<String> = per_check
            .iter()
            .filter(|(_, c)| c.substantive_pass < config.suite.min_substantive)
            .map(|(k, _)| k.clone())
            .collect();
        SuiteReport {
            schema: REPORT_SCHEMA.into(),
            suite,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            exit_code: exit_code(&counts, &unmet_minimums),
            config,
            corpus_size,
            counts,
            per_check,
            unmet_minimums,
            wall_time_ms: None,
            records,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Summary lines: totals, then one line per check.
    pub fn to_text(&self) -> String {
        let c = &self.counts;
        let mut out = format!(
            "suite {}: {} groups, {} checks: {} substantive, {} vacuous, {} violations, {} skipped (exit {})\n",
            self.suite.as_str(),
            self.corpus_size,
            c.total(),
            c.substantive_pass,
            c.vacuous_pass,
            c.violation,
            c.skipped_resource,
            self.exit_code
        );
        for (k, c) in &self.per_check {
            out.push_str(&format!(
                "  {k:<24} {:>5} substantive {:>5} vacuous {:>3} violations {:>3} skipped\n",
                c.substantive_pass, c.vacuous_pass, c.violation, c.skipped_resource
            ));
        }
        for r in self.records.iter().filter(|r| matches!(r.outcome, CheckOutcome::Violation)) {
            out.push_str(&format!(
                "  VIOLATION {} on {} n={:?} N={:?} {:?}\n",
                r.check, r.group, r.n, r.subgroup, r.detail
            ));
        }
        if !self.unmet_minimums.is_empty() {
            out.push_str(&format!(
                "  below {} substantive passes: {}\n",
                self.config.suite.min_substantive,
                self.unmet_minimums.join(", ")
            ));
        }
        if let Some(ms) = self.wall_time_ms {
            out.push_str(&format!("  wall time {ms} ms\n"));
        }
        out
    }
}

/// Builds the corpus and runs every check of `suite` on it. Items are
/// processed in parallel and merged back in corpus order.
pub fn run_suite(suite: Suite, spec: &CorpusSpec, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let corpus = build_corpus(spec)?;
    let mut records = Vec::new();
    for part in suite.parts() {
        let per_item: Vec<Vec<CheckRecord>> = corpus.par_iter().map(|item| run_part(part, item, config)).collect();
        records.extend(per_item.into_iter().flatten());
    }
    let echo = ConfigEcho { corpus: spec.clone(), suite: config.clone() };
    let mut report = SuiteReport::assemble(suite, echo, corpus.len(), records);
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

fn run_part(part: Suite, item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    match part {
        Suite::SeriesAxioms => series_axioms(item),
        Suite::PowerfulTheorems => powerful_theorems(item, config),
        Suite::Frattini => frattini(item, config),
        Suite::TensorStructure => tensor_structure(item, config),
        Suite::TensorPowerful => tensor_powerful(item, config),
        Suite::Exactness => exactness(item, config),
        Suite::All => unreachable!("expanded by parts()"),
    }
}

/// Runs a fallible check, turning an error into a record.
fn guarded(check: &str, g: &Group, f: impl FnOnce() -> Result<Vec<CheckRecord>>) -> Vec<CheckRecord> {
    f().unwrap_or_else(|e| vec![CheckRecord::from_error(check, g, &e)])
}

fn class_of(g: &Group) -> Result<usize> {
    Ok(lower_central_series(g)?.terms.len() - 1)
}

fn series_axioms(item: &CorpusItem) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    let mut out = Vec::new();
    out.extend(guarded("lambda_closed_form", g, || {
        let rec = lower_p_series_recursive(g, p)?;
        let top = rec.terms.len() + 1;
        let bad = (1..=top).find(|&n| lower_p_closed_form(g, p, n).map(|s| &s != rec.term(n)).unwrap_or(true));
        Ok(vec![CheckRecord::pass_if("lambda_closed_form", g, bad.is_none()).with_n(top)])
    }));
    out.extend(guarded("upper_in_script_d", g, || {
        let z = upper_central_series(g)?;
        let top = z.terms.len() + 1;
        let mut bad = None;
        for n in 1..=top {
            if !z.term(n).is_subset(&script_d_n(g, n)?) {
                bad = Some(n);
                break;
            }
        }
        let r = CheckRecord::pass_if("upper_in_script_d", g, bad.is_none()).with_n(top);
        Ok(vec![match bad {
            Some(n) => r.with_detail(json!({ "n": n })),
            None => r,
        }])
    }));
    out.extend(guarded("central_series_shape", g, || {
        let gamma = lower_central_series(g)?;
        let z = upper_central_series(g)?;
        let c = gamma.terms.len() - 1;
        let ok = gamma.terms.last().is_some_and(|t| t.is_trivial())
            && z.terms.len() == c + 1
            && z.terms.last().is_some_and(|t| t.is_whole());
        Ok(vec![CheckRecord::pass_if("central_series_shape", g, ok).with_n(c)])
    }));
    out.extend(guarded("gamma_z_commutator", g, || {
        let gamma = lower_central_series(g)?;
        let z = upper_central_series(g)?;
        let c = gamma.terms.len() - 1;
        let mut ok = true;
        for k in 1..=c {
            for j in 1..=k {
                ok &= commutator_subgroup(gamma.term(j), z.term(k))?.is_subset(z.term(k - j));
            }
        }
        let whole = SubgroupRef::whole(g);
        for k in 1..=c {
            ok &= &iterated_commutator(&whole, &whole, k)? == gamma.term(k + 1);
        }
        Ok(vec![CheckRecord::pass_if("gamma_z_commutator", g, ok).with_n(c)])
    }));
    out.extend(guarded("frattini_in_lambda", g, || {
        let psi = frattini_series(g, p)?;
        let lam = lower_p_series_recursive(g, p)?;
        let top = psi.terms.len().max(lam.terms.len());
        let ok = (1..=top).all(|n| psi.term(n).is_subset(lam.term(n)));
        Ok(vec![CheckRecord::pass_if("frattini_in_lambda", g, ok).with_n(top)])
    }));
    out
}

fn label(i: usize, s: &SubgroupRef) -> String {
    format!("N{i} (order {})", s.order())
}

fn candidates(g: &Group, p: u32, limit: usize) -> Vec<SubgroupRef> {
    exponent_p_normal_subgroups(&SubgroupRef::whole(g), p, limit)
}

fn powerful_theorems(item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    let mut out = Vec::new();
    let class = match class_of(g) {
        Ok(c) => c,
        Err(e) => return vec![CheckRecord::from_error("A_i", g, &e)],
    };
    for n in 1..=class + 1 {
        out.extend(guarded("A_i", g, || Ok(vec![CheckRecord::from_theorem(check_theorem_a_i(g, p, n)?)])));
        out.extend(guarded("A_ii", g, || Ok(vec![CheckRecord::from_theorem(check_theorem_a_ii(g, p, n)?)])));
    }
    if p != 2 {
        let dl = derived_series(g).map(|d| d.terms.len()).unwrap_or(1);
        for n in 2..=dl + 1 {
            out.extend(guarded("A_iii", g, || Ok(vec![CheckRecord::from_theorem(check_theorem_a_iii(g, p, n)?)])));
        }
        let ns = candidates(g, p, config.subgroup_limit);
        for n in 1..=class {
            for (i, s) in ns.iter().enumerate() {
                out.extend(guarded("B_i", g, || {
                    let l = label(i, s);
                    Ok(check_theorem_b(g, s, p, n)?
                        .into_iter()
                        .map(|t| CheckRecord::from_theorem(t.with_subgroup(l.clone())))
                        .collect())
                }));
            }
        }
    }
    out.extend(guarded("lubotzky_mann", g, || {
        if !is_powerful(g, p)? {
            return Ok(vec![CheckRecord::new("lubotzky_mann", g, CheckOutcome::VacuousPass)]);
        }
        let r = check_lubotzky_mann_suite(g, p)?;
        let failed: Vec<&str> = r.facts.iter().filter(|f| !f.holds).map(|f| f.fact.as_str()).collect();
        let rec = CheckRecord::pass_if("lubotzky_mann", g, failed.is_empty());
        Ok(vec![if failed.is_empty() { rec } else { rec.with_detail(json!({ "failed": failed })) }])
    }));
    if p != 2 {
        out.extend(guarded("shalev_identity", g, || {
            if !is_powerful(g, p)? {
                return Ok(vec![CheckRecord::new("shalev_identity", g, CheckOutcome::VacuousPass)]);
            }
            let whole = SubgroupRef::whole(g);
            let bad = check_shalev_identity(&whole, &whole, p, 3)?;
            let rec = CheckRecord::pass_if("shalev_identity", g, bad.is_none());
            Ok(vec![match bad {
                Some((i, j)) => rec.with_detail(json!({ "i": i, "j": j })),
                None => rec,
            }])
        }));
    }
    out
}

fn frattini(item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    let class = match class_of(g) {
        Ok(c) => c,
        Err(e) => return vec![CheckRecord::from_error("frattini_i", g, &e)],
    };
    let ns = candidates(g, p, config.subgroup_limit);
    let mut out = Vec::new();
    for n in 1..=class {
        for (i, s) in ns.iter().enumerate() {
            out.extend(guarded("frattini_i", g, || {
                let l = label(i, s);
                Ok(check_frattini_theorem(g, s, p, n)?
                    .into_iter()
                    .map(|t| CheckRecord::from_theorem(t.with_subgroup(l.clone())))
                    .collect())
            }));
        }
    }
    out
}

fn square_laws(check: &str, g: &Group, t: Result<TensorResult>) -> CheckRecord {
    match t {
        Err(e) => CheckRecord::from_error(check, g, &e),
        Ok(t) => {
            let v = t.square.validate().and_then(|_| t.square.check_commutator_law());
            let rec = CheckRecord::pass_if(check, g, v.is_ok()).with_detail(json!({ "order": t.group().order() }));
            match v {
                Ok(()) => rec,
                Err(v) => {
                    rec.with_detail(json!({ "order": t.group().order(), "axiom": v.axiom, "witness": v.witness }))
                }
            }
        }
    }
}

fn tensor_structure(item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    if g.order() > config.tensor_structure_order {
        return Vec::new();
    }
    let id = CrossedModule::identity(g);
    let mut out = vec![
        square_laws("tensor_square_laws", g, compute_tensor(&id, &id, &config.caps)),
        square_laws("q_tensor_square_laws", g, compute_q_tensor(&id, &id, p, &config.caps)),
    ];
    if let Ok(inc) = CrossedModule::inclusion(&center(g)) {
        out.push(square_laws("tensor_center_laws", g, compute_tensor(&inc, &id, &config.caps)).with_subgroup("center"));
    }
    out
}

fn tensor_powerful(item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    if p == 2 || g.order() > config.tensor_powerful_order {
        return Vec::new();
    }
    let mut modules = vec![("identity".to_string(), CrossedModule::identity(g))];
    let z = center(g);
    if !z.is_whole() {
        if let Ok(inc) = CrossedModule::inclusion(&z) {
            modules.push(("center".into(), inc));
        }
    }
    let mut out = Vec::new();
    for (l, cm) in modules {
        let rec = match check_tensor_powerful(&cm, p, &config.caps) {
            Ok(r) => {
                let detail =
                    json!({ "tensor_order": r.tensor_order, "q_tensor_order": r.q_tensor_order, "facts": r.facts });
                CheckRecord::from_theorem(r.check).with_detail(detail)
            }
            Err(e) => CheckRecord::from_error("tensor_powerful", g, &e),
        };
        out.push(rec.with_subgroup(&l));
    }
    out
}

fn exactness(item: &CorpusItem, config: &SuiteConfig) -> Vec<CheckRecord> {
    let (g, p) = (&item.group, item.prime);
    let mut out = Vec::new();
    if g.order() <= config.exactness_order {
        let mut ns = vec![("center".to_string(), center(g))];
        for (i, s) in candidates(g, p, config.subgroup_limit).into_iter().enumerate() {
            if !s.is_trivial() && !ns.iter().any(|(_, t)| t == &s) && ns.len() < 3 {
                ns.push((label(i, &s), s));
            }
        }
        for (l, s) in &ns {
            let rec = match check_nfold_exact_sequence(g, s, 2, p, &config.caps) {
                Ok(r) => CheckRecord::pass_if("exactness", g, r.holds())
                    .with_detail(serde_json::to_value(&r).expect("report serializes")),
                Err(e) => CheckRecord::from_error("exactness", g, &e),
            };
            out.push(rec.with_n(2).with_subgroup(l));
        }
    }
    let z = center(g);
    for (i, s) in candidates(g, p, config.subgroup_limit).into_iter().enumerate() {
        if s.is_trivial() || !s.is_subset(&z) || g.order() / s.order() > config.surjection_quotient_order {
            continue;
        }
        let rec = match check_surjection_order_law(g, &s, 1, &config.caps) {
            Ok(r) => {
                let o = match (r.hypothesis_holds, r.divides) {
                    (false, _) => CheckOutcome::VacuousPass,
                    (true, true) => CheckOutcome::SubstantivePass,
                    (true, false) => CheckOutcome::Violation,
                };
                CheckRecord::new("surjection_order_law", g, o)
                    .with_detail(serde_json::to_value(&r).expect("serializes"))
            }
            Err(e) => CheckRecord::from_error("surjection_order_law", g, &e),
        };
        out.push(rec.with_n(1).with_subgroup(&label(i, &s)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn empty_spec() -> CorpusSpec {
        CorpusSpec { constructors: vec![], ..CorpusSpec::default() }
    }

    #[test]
    fn empty_corpus_gives_empty_report() {
        let r = run_suite(Suite::All, &empty_spec(), &SuiteConfig::default()).unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.schema, REPORT_SCHEMA);
    }

    #[test]
    fn exit_code_mapping() {
        let c = |s, v, x, k| Counts { substantive_pass: s, vacuous_pass: v, violation: x, skipped_resource: k };
        assert_eq!(exit_code(&c(3, 1, 0, 0), &[]), 0);
        assert_eq!(exit_code(&c(3, 1, 1, 0), &[]), 1);
        assert_eq!(exit_code(&c(3, 1, 1, 4), &[]), 1);
        assert_eq!(exit_code(&c(3, 1, 0, 4), &[]), 2);
        assert_eq!(exit_code(&c(1, 0, 0, 0), &["A_i".into()]), 2);
    }

    #[test]
    fn series_axioms_small_corpus() {
        let spec = CorpusSpec::uniform(&[2, 3], 27);
        let r = run_suite(Suite::SeriesAxioms, &spec, &SuiteConfig::default()).unwrap();
        assert_eq!(r.counts.violation, 0, "{}", r.to_text());
        assert_eq!(r.counts.total(), r.records.len());
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn skipped_checks_are_not_passes() {
        let spec = CorpusSpec::uniform(&[3], 9);
        let config =
            SuiteConfig { caps: TensorCaps { q_factor: 3, ..TensorCaps::default() }, ..SuiteConfig::default() };
        let r = run_suite(Suite::TensorStructure, &spec, &config).unwrap();
        let q = &r.per_check["q_tensor_square_laws"];
        assert_eq!(q.skipped_resource, 2);
        assert_eq!(q.substantive_pass, 1);
        assert_eq!(r.exit_code, 2);
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = CorpusSpec::uniform(&[2, 3], 16);
        let a = run_suite(Suite::PowerfulTheorems, &spec, &SuiteConfig::default()).unwrap();
        let b = run_suite(Suite::PowerfulTheorems, &spec, &SuiteConfig::default()).unwrap();
        let strip = |mut r: SuiteReport| {
            r.wall_time_ms = None;
            r.to_json()
        };
        assert_eq!(strip(a), strip(b));
    }
}
