use starcolor_core::suite::{run_suite, Computed, Section, Status};
use starcolor_core::{exact, io, verify, EdgeColoring, GraphFile};

#[test]
fn report_is_deterministic_and_complete() {
    let a = run_suite(exact::DEFAULT_BUDGET);
    let b = run_suite(exact::DEFAULT_BUDGET);
    assert_eq!(a.markdown(), b.markdown());
    assert_eq!(a.json().unwrap(), b.json().unwrap());
    for section in Section::ALL {
        assert!(a.entries.iter().any(|e| e.section == section), "{section:?} is empty");
        assert!(a.markdown().contains(&format!("## {}", section.title())));
    }
    assert_eq!(a.count(Status::Timeout), 0);
}

#[test]
fn only_the_literal_fan_drawing_disagrees() {
    let report = run_suite(exact::DEFAULT_BUDGET);
    let bad: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.status == Status::Discrepancy)
        .collect();
    assert_eq!(bad.len(), 1, "{bad:#?}");
    assert!(bad[0].instance.starts_with("fan3-drawn"));
    assert_eq!(bad[0].computed, Computed::Colors(5));
    assert_eq!(report.exit_code(), 3);
}

#[test]
fn witnesses_replay() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_suite(exact::DEFAULT_BUDGET);
    report.write(dir.path()).unwrap();
    assert!(dir.path().join("report.md").is_file());
    let twin: serde_json::Value = io::read_json(dir.path().join("report.json")).unwrap();
    assert_eq!(twin["entries"].as_array().unwrap().len(), report.entries.len());
    for e in report.entries.iter().filter(|e| e.status == Status::Discrepancy) {
        let stem = dir.path().join(e.witness.as_ref().expect("discrepancies carry witnesses"));
        let file: GraphFile = io::read_json(stem.with_extension("graph.json")).unwrap();
        let c: EdgeColoring = io::read_json(stem.with_extension("coloring.json")).unwrap();
        let g = file.to_graph().unwrap();
        // a star coloring with fewer colors than claimed refutes the bound
        assert!(verify::is_star(&g, &c));
        assert_eq!(Computed::Colors(c.color_count()), e.computed);
    }
}
