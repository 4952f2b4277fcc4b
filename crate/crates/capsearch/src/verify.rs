//! Cross-checks of a classification run (or of a certificate file)
//! against the independent oracle and the bundled reference data.
//!
//! Checks and their severity:
//!
//! * FAIL: a discrepancy in something the engine must reproduce:
//!   internal record invariants, the published counts, the brute-force
//!   classification (r <= 3), the orbit–stabilizer mass identity, the
//!   published cap properties, or a certificate diverging from a fresh
//!   run.
//! * WARN: a known-discrepant reference entry: the published value
//!   cannot be a subgroup order, so the recomputed value is reported in
//!   its place instead of failing the run.

use std::collections::BTreeMap;
use std::fmt;

use capsearch_core::collineations::{are_equivalent, canonical_form};
use capsearch_core::oracle::{brute_classify, count_labeled_spanning_caps, mass_check};
use capsearch_core::search::{self, ClassificationTable};
use capsearch_core::{Error, PointSet, Space};
use serde::Serialize;

use crate::certificate::{self, Certificate};
use crate::fixture::{reference_counts, REFERENCE_PG42};
use crate::parallel;
use crate::textio::encoding_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Warn => write!(f, "WARN"),
            Status::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub space: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(space: &Space) -> Report {
        Report {
            space: certificate::space_name(space),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        if status == Status::Fail {
            self.passed = false;
        }
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn warnings(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Warn)
            .count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            out.push_str(&format!(
                "{} {}: {}\n",
                check.status, check.name, check.detail
            ));
        }
        out.push_str(&format!(
            "verification of {}: {} ({} checks, {} warnings)\n",
            self.space,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.warnings()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}

/// Everything a verification run compares against, computed once.
pub struct Baseline {
    pub space: Space,
    pub table: ClassificationTable,
    pub labeled: BTreeMap<usize, u64>,
}

impl Baseline {
    pub fn new(space: Space, threads: usize) -> Result<Baseline, Error> {
        let table = parallel::classify_with_threads(&space, threads)?;
        let labeled = count_labeled_spanning_caps(&space, space.num_points() as usize);
        Ok(Baseline {
            space,
            table,
            labeled,
        })
    }
}

/// Verifies a fresh classification run.
pub fn verify_fresh(baseline: &Baseline) -> Report {
    let mut report = Report::new(&baseline.space);
    check_table_invariants(&mut report, baseline);
    check_reference_counts(&mut report, baseline);
    check_brute_equality(&mut report, baseline);
    check_mass(&mut report, baseline);
    check_reference_caps(&mut report, baseline);
    check_reference_bijection(&mut report, baseline);
    report
}

/// Verifies a certificate file against a fresh run and the oracle.
pub fn verify_certificate(cert: &Certificate, baseline: &Baseline) -> Report {
    let mut report = Report::new(&baseline.space);
    if !check_certificate_space(&mut report, cert, baseline) {
        return report;
    }
    check_certificate_counts(&mut report, cert);
    check_certificate_mass(&mut report, cert, baseline);
    check_certificate_classes(&mut report, cert, baseline);
    check_reference_counts(&mut report, baseline);
    check_brute_equality(&mut report, baseline);
    check_mass(&mut report, baseline);
    check_reference_caps(&mut report, baseline);
    report
}

fn check_table_invariants(report: &mut Report, baseline: &Baseline) {
    match search::validate(&baseline.table) {
        Ok(()) => report.push(
            "table-invariants",
            Status::Pass,
            format!(
                "{} classes re-checked (cap, rank, completeness, canonical form, stabilizer, enumerator)",
                baseline.table.classes.len()
            ),
        ),
        Err(e) => report.push("table-invariants", Status::Fail, e.to_string()),
    }
}

fn check_reference_counts(report: &mut Report, baseline: &Baseline) {
    let Some(expected) = reference_counts(&baseline.space) else {
        return;
    };
    let counts = baseline.table.counts();
    let mut mismatches = Vec::new();
    for &(size, complete, incomplete) in expected {
        let got = counts.get(&size).copied().unwrap_or((0, 0));
        if got != (complete, incomplete) {
            mismatches.push(format!(
                "size {size}: expected {complete}/{incomplete}, got {}/{}",
                got.0, got.1
            ));
        }
    }
    let (lo, hi) = (expected[0].0, expected[expected.len() - 1].0);
    if mismatches.is_empty() {
        report.push(
            "reference-counts",
            Status::Pass,
            format!("class counts match the published table (sizes {lo}..{hi})"),
        );
    } else {
        report.push("reference-counts", Status::Fail, mismatches.join("; "));
    }
}

fn check_brute_equality(report: &mut Report, baseline: &Baseline) {
    if baseline.space.r() > 3 {
        return;
    }
    let brute = match brute_classify(&baseline.space) {
        Ok(t) => t,
        Err(e) => {
            report.push("oracle-brute-equality", Status::Fail, e.to_string());
            return;
        }
    };
    if brute.classes.len() != baseline.table.classes.len() {
        report.push(
            "oracle-brute-equality",
            Status::Fail,
            format!(
                "{} classes by brute force, {} by search",
                brute.classes.len(),
                baseline.table.classes.len()
            ),
        );
        return;
    }
    for (a, b) in brute.classes.iter().zip(&baseline.table.classes) {
        let same = a.canonical == b.canonical
            && a.size == b.size
            && a.complete == b.complete
            && a.stabilizer_order == b.stabilizer_order
            && a.weight_enum == b.weight_enum;
        if !same {
            report.push(
                "oracle-brute-equality",
                Status::Fail,
                format!(
                    "class mismatch at canonical {{{}}}",
                    encoding_list(&a.canonical)
                ),
            );
            return;
        }
    }
    report.push(
        "oracle-brute-equality",
        Status::Pass,
        format!(
            "{}/{} classes matched by exhaustive subset enumeration",
            brute.classes.len(),
            brute.classes.len()
        ),
    );
}

fn check_mass(report: &mut Report, baseline: &Baseline) {
    let mass = mass_check(&baseline.space, &baseline.table, &baseline.labeled);
    if mass.passed() {
        report.push(
            "mass-check",
            Status::Pass,
            format!(
                "orbit sums equal labeled cap counts for all {} sizes",
                mass.rows.len()
            ),
        );
    } else {
        let detail: Vec<String> = mass
            .failures()
            .map(|row| {
                format!(
                    "size {}: orbit sum {} vs {} labeled caps",
                    row.size, row.orbit_sum, row.labeled
                )
            })
            .collect();
        report.push("mass-check", Status::Fail, detail.join("; "));
    }
}

fn check_reference_caps(report: &mut Report, baseline: &Baseline) {
    if baseline.space.r() != 4 {
        return;
    }
    let space = &baseline.space;
    let mut verified = 0usize;
    for cap in REFERENCE_PG42 {
        let s = cap.point_set(space);
        let mut failures = Vec::new();
        if !space.is_cap(&s) {
            failures.push("not a cap".to_string());
        }
        if space.rank(&s) != 5 {
            failures.push(format!("rank {} != 5", space.rank(&s)));
        }
        if failures.is_empty() {
            match verify_reference_cap(space, cap, &s) {
                Ok(warn) => {
                    if let Some(text) = warn {
                        report.push(format!("reference-cap-{}", cap.id), Status::Warn, text);
                    }
                    verified += 1;
                    continue;
                }
                Err(text) => failures.push(text),
            }
        }
        report.push(
            format!("reference-cap-{}", cap.id),
            Status::Fail,
            failures.join("; "),
        );
    }
    report.push(
        "reference-caps",
        Status::Pass,
        format!(
            "{verified}/{} published caps verified",
            REFERENCE_PG42.len()
        ),
    );
}

/// Checks one published cap; returns an optional warning text for the
/// discrepancy-marked entry.
fn verify_reference_cap(
    space: &Space,
    cap: &crate::fixture::ReferenceCap,
    s: &PointSet,
) -> Result<Option<String>, String> {
    let complete = space.is_complete(s).map_err(|e| e.to_string())?;
    if complete != cap.complete {
        return Err(format!(
            "completeness {} != published {}",
            complete, cap.complete
        ));
    }
    let enumerator = capsearch_core::codes::format_enumerator(
        &capsearch_core::codes::weight_enumerator(space, s),
    );
    if enumerator != cap.weight_enumerator {
        return Err(format!(
            "weight enumerator {enumerator} != published {}",
            cap.weight_enumerator
        ));
    }
    let stab =
        capsearch_core::collineations::stabilizer_order(space, s).map_err(|e| e.to_string())?;
    if space.group_order() % stab != 0 {
        return Err(format!(
            "computed stabilizer {stab} does not divide the group order"
        ));
    }
    if cap.stabilizer_discrepant {
        if stab == cap.stabilizer {
            return Err(format!(
                "entry marked discrepant but computed stabilizer equals published {stab}"
            ));
        }
        Ok(Some(format!(
            "published stabilizer {} is not a subgroup order of GL(5,2); recomputed order is {stab}",
            cap.stabilizer
        )))
    } else if stab != cap.stabilizer {
        Err(format!("stabilizer {stab} != published {}", cap.stabilizer))
    } else {
        Ok(None)
    }
}

fn check_reference_bijection(report: &mut Report, baseline: &Baseline) {
    if baseline.space.r() != 4 {
        return;
    }
    let space = &baseline.space;
    let mut lines = Vec::new();
    for cap in REFERENCE_PG42 {
        let s = cap.point_set(space);
        let mut matches = Vec::new();
        for (index, class) in baseline.table.classes.iter().enumerate() {
            if class.size != cap.size {
                continue;
            }
            match are_equivalent(space, &s, &class.representative) {
                Ok(Some(witness)) => matches.push((index, witness)),
                Ok(None) => {}
                Err(e) => {
                    report.push("reference-bijection", Status::Fail, e.to_string());
                    return;
                }
            }
        }
        if matches.len() != 1 {
            report.push(
                "reference-bijection",
                Status::Fail,
                format!("published cap {} matches {} classes", cap.id, matches.len()),
            );
            return;
        }
        let (_, witness) = &matches[0];
        let cols: Vec<String> = witness
            .columns()
            .map(|p| p.encoding().to_string())
            .collect();
        lines.push(format!("{} (witness {})", cap.id, cols.join(" ")));
    }
    report.push(
        "reference-bijection",
        Status::Pass,
        format!(
            "each published cap is equivalent to exactly one class of its size: {}",
            lines.join(", ")
        ),
    );
}

fn check_certificate_space(report: &mut Report, cert: &Certificate, baseline: &Baseline) -> bool {
    match certificate::parse_space_name(&cert.space) {
        Ok(space) if space == baseline.space => {
            if cert.group_order != baseline.space.group_order() {
                report.push(
                    "certificate-space",
                    Status::Fail,
                    format!(
                        "group order {} != {}",
                        cert.group_order,
                        baseline.space.group_order()
                    ),
                );
                return false;
            }
            report.push("certificate-space", Status::Pass, cert.space.clone());
            true
        }
        Ok(space) => {
            report.push(
                "certificate-space",
                Status::Fail,
                format!(
                    "certificate is for {}, verifying {}",
                    certificate::space_name(&space),
                    report.space
                ),
            );
            false
        }
        Err(e) => {
            report.push("certificate-space", Status::Fail, e);
            false
        }
    }
}

fn check_certificate_counts(report: &mut Report, cert: &Certificate) {
    let mut derived: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
    for class in &cert.classes {
        let entry = derived.entry(class.size).or_insert((0, 0));
        if class.complete {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    let stated: BTreeMap<usize, (u32, u32)> = cert
        .counts
        .iter()
        .map(|(&size, c)| (size, (c.complete, c.incomplete)))
        .collect();
    if derived == stated {
        report.push(
            "certificate-counts",
            Status::Pass,
            "counts map matches the class list",
        );
    } else {
        report.push(
            "certificate-counts",
            Status::Fail,
            "counts map does not match the class list",
        );
    }
}

fn check_certificate_mass(report: &mut Report, cert: &Certificate, baseline: &Baseline) {
    let group_order = baseline.space.group_order();
    let mut orbit_sums: BTreeMap<usize, u64> = BTreeMap::new();
    for class in &cert.classes {
        if class.stabilizer_order == 0 || group_order % class.stabilizer_order != 0 {
            report.push(
                "certificate-mass",
                Status::Fail,
                format!(
                    "size-{} class stabilizer {} is not a subgroup order",
                    class.size, class.stabilizer_order
                ),
            );
            return;
        }
        *orbit_sums.entry(class.size).or_insert(0) += group_order / class.stabilizer_order;
    }
    let mut mismatches = Vec::new();
    let mut sizes: Vec<usize> = orbit_sums
        .keys()
        .chain(baseline.labeled.keys())
        .copied()
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    for size in sizes {
        let orbit = orbit_sums.get(&size).copied().unwrap_or(0);
        let labeled = baseline.labeled.get(&size).copied().unwrap_or(0);
        if orbit != labeled {
            mismatches.push(format!(
                "size {size}: orbit sum {orbit} vs {labeled} labeled caps"
            ));
        }
    }
    if mismatches.is_empty() {
        report.push(
            "certificate-mass",
            Status::Pass,
            "certificate stabilizers account for every labeled cap",
        );
    } else {
        report.push("certificate-mass", Status::Fail, mismatches.join("; "));
    }
}

fn check_certificate_classes(report: &mut Report, cert: &Certificate, baseline: &Baseline) {
    let space = &baseline.space;
    if cert.classes.len() != baseline.table.classes.len() {
        report.push(
            "certificate-classes",
            Status::Fail,
            format!(
                "{} classes in certificate, {} in fresh run",
                cert.classes.len(),
                baseline.table.classes.len()
            ),
        );
        return;
    }
    for cert_class in &cert.classes {
        let points: Result<PointSet, _> = cert_class
            .points
            .iter()
            .map(|&e| space.point(e))
            .collect::<Result<Vec<_>, _>>()
            .map(PointSet::from_points);
        let points = match points {
            Ok(s) if s.len() == cert_class.points.len() => s,
            _ => {
                report.push(
                    "certificate-classes",
                    Status::Fail,
                    format!("size-{} class has invalid points", cert_class.size),
                );
                return;
            }
        };
        let canonical = match canonical_form(space, &points) {
            Ok(c) => c,
            Err(e) => {
                report.push("certificate-classes", Status::Fail, e.to_string());
                return;
            }
        };
        let stated: Vec<u32> = canonical.iter().map(|p| p.encoding()).collect();
        if stated != cert_class.canonical {
            report.push(
                "certificate-classes",
                Status::Fail,
                format!("size-{} class canonical form mismatch", cert_class.size),
            );
            return;
        }
        // compare the remaining fields against the fresh class of the
        // same canonical form
        let Some(fresh) = baseline
            .table
            .classes
            .iter()
            .find(|c| c.canonical == canonical)
        else {
            report.push(
                "certificate-classes",
                Status::Fail,
                format!("size-{} class not present in fresh run", cert_class.size),
            );
            return;
        };
        let enumerator = fresh.weight_enum.to_string();
        let weight_counts: BTreeMap<u32, u64> = fresh.weight_enum.counts().collect();
        if cert_class.size != fresh.size
            || cert_class.complete != fresh.complete
            || cert_class.stabilizer_order != fresh.stabilizer_order
            || cert_class.weight_enumerator != enumerator
            || cert_class.weight_counts != weight_counts
        {
            report.push(
                "certificate-classes",
                Status::Fail,
                format!(
                    "size-{} class diverges from fresh run (canonical {{{}}})",
                    cert_class.size,
                    encoding_list(&canonical)
                ),
            );
            return;
        }
    }
    report.push(
        "certificate-classes",
        Status::Pass,
        format!("{} classes match the fresh run", cert.classes.len()),
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::from_table;

    fn baseline(r: u32) -> Baseline {
        Baseline::new(Space::new(r).unwrap(), 1).unwrap()
    }

    #[test]
    fn fresh_runs_pass_small_spaces() {
        for r in 2..=3 {
            let report = verify_fresh(&baseline(r));
            assert!(report.passed(), "{}", report.render_text());
            assert_eq!(report.warnings(), 0);
        }
    }

    #[test]
    fn certificate_round_trip_passes() {
        let base = baseline(3);
        let cert = from_table(&base.table);
        let report = verify_certificate(&cert, &base);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn corrupted_stabilizer_fails() {
        let base = baseline(3);
        let mut cert = from_table(&base.table);
        cert.classes[2].stabilizer_order *= 2;
        assert!(!verify_certificate(&cert, &base).passed());
    }

    #[test]
    fn corrupted_count_fails() {
        let base = baseline(2);
        let mut cert = from_table(&base.table);
        cert.counts.get_mut(&3).unwrap().incomplete += 1;
        assert!(!verify_certificate(&cert, &base).passed());
    }

    #[test]
    fn wrong_space_fails() {
        let base = baseline(2);
        let cert = from_table(&Baseline::new(Space::new(3).unwrap(), 1).unwrap().table);
        assert!(!verify_certificate(&cert, &base).passed());
    }
}
