use cyclic_bar::report::Status;
use cyclic_bar_cli::scenario::{JobKind, JobBody, VerifyJob};
use cyclic_bar_cli::{parse_scenario, run, RunConfig};

#[test]
fn minimal_homology_scenario() {
    let sc = parse_scenario("monoid Z2 = cyclic 2\nhomology nerve(Z2) upto 4\n").unwrap();
    let report = run(&sc, RunConfig::default());
    let table = report.jobs[0].table.as_ref().unwrap();
    let groups: Vec<String> = table.iter().map(|r| r.group()).collect();
    // H_n of Z/2 with integer coefficients alternates between Z/2 and 0
    assert_eq!(groups, ["Z", "Z/2", "0", "Z/2", "0"]);
    assert!(table.iter().all(|r| r.reliable));
}

#[test]
fn undefined_monoid_names_the_monoid_and_line() {
    let err = parse_scenario("monoid Z2 = cyclic 2\n# comment\nhomology nerve(Z7) upto 4\n").unwrap_err();
    assert_eq!(err.line, 3);
    assert!(err.to_string().contains("`Z7`"), "{err}");
    assert!(err.to_string().starts_with("line 3:"));
}

#[test]
fn axiom_violation_surfaces_with_the_line() {
    let text = "trunc 3\nmonoid N: elems 1,a; unit 1; mul a*a=1\nmonoid B: elems 1,a,b; unit 1; mul a*a=b a*b=a b*a=a b*b=a\n";
    let err = parse_scenario(text).unwrap_err();
    assert_eq!(err.line, 3);
}

#[test]
fn use_before_definition_is_rejected() {
    let err = parse_scenario("augment A = translation G\nmonoid G = cyclic 2\n").unwrap_err();
    assert_eq!(err.line, 1);
    assert!(parse_scenario("trunc 0\n").is_err());
}

#[test]
fn partial_monoid_scenario_parses_and_runs() {
    let text = "monoid M: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0\n\
                situation S = submonoid M {1,0}\n\
                counterexample partial-monoid p=3\n";
    let sc = parse_scenario(text).unwrap();
    assert_eq!(sc.jobs[0].kind(), JobKind::Counterexample);
    let report = run(&sc, RunConfig::default());
    let r = &report.jobs[0].records[0];
    assert_eq!(r.status, Status::Pass);
    assert!(r.witness.as_deref().unwrap().starts_with("(x,0,x)"));
}

#[test]
fn comparison_for_z2_on_a_point() {
    let sc = parse_scenario("monoid Z2 = cyclic 2\naugment A = translation Z2\nverify bijection A upto 3\n").unwrap();
    assert!(matches!(sc.jobs[0].body, JobBody::Verify(VerifyJob::Bijection(_, Some(3)))));
    let report = run(&sc, RunConfig::default());
    assert!(report.records().all(|r| r.status == Status::Pass));
}

#[test]
fn suspension_of_the_circle_has_reduced_h2() {
    let text = "trunc 3\nhomology pointed-wedge(circle) upto 2 reduced expect 0,0,Z\nverify suspension circle upto 3\n";
    let report = run(&parse_scenario(text).unwrap(), RunConfig::default());
    assert!(!report.failed());
    assert_eq!(report.count(Status::Pass), 2);
    let h2 = &report.jobs[0].table.as_ref().unwrap()[2];
    assert_eq!((h2.betti, h2.torsion.len()), (1, 0));
}

#[test]
fn wrong_expectation_fails_with_witness() {
    let report = run(
        &parse_scenario("monoid Z3 = cyclic 3\nhomology nerve(Z3) upto 2 expect Z,Z/2\n").unwrap(),
        RunConfig::default(),
    );
    let r = &report.jobs[0].records[0];
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.witness.as_deref(), Some("H_1 is Z/3, expected Z/2"));
}

#[test]
fn corrupted_face_fails_with_witness() {
    let report = run(&parse_scenario("verify identities corrupted-nerve\n").unwrap(), RunConfig::default());
    let r = &report.jobs[0].records[0];
    assert_eq!(r.status, Status::Fail);
    assert!(r.witness.as_deref().unwrap().starts_with("d0d2 fails"));
}

#[test]
fn cap_overrun_is_flagged_with_the_degree() {
    let mut sc = parse_scenario("monoid S3 = symmetric 3\nbuild nerve(S3)\n").unwrap();
    sc.cap = 50;
    let report = run(&sc, RunConfig::default());
    let r = &report.jobs[0].records[0];
    assert_eq!(r.status, Status::Flagged);
    // 1 + 6 + 36 = 43 fits, degree 3 adds 216
    assert_eq!(r.note.as_deref(), Some("simplex cap 50 exceeded in degree 3"));
    assert!(!report.failed());
}

#[test]
fn named_actions_and_situations() {
    let text = "monoid Z2 = cyclic 2\n\
                set X: elems +,a,b; base +\n\
                action swap = Z2 on X: left 1.+=+ 1.a=b 1.b=a; right trivial\n\
                situation P = point X\n\
                augment A = trivial Z2 on P\n\
                build cyclic-bar(swap)\n\
                build generalized-wedge(P)\n\
                build cyclic-wedge(A)\n";
    let report = run(&parse_scenario(text).unwrap(), RunConfig::default());
    assert!(report.records().all(|r| r.status == Status::Pass), "{:?}", report.jobs);
    // G^k × X has 2^k · 3 elements; the nondegenerate ones in degree 1 carry g = 1
    assert_eq!(report.jobs[0].counts.as_ref().unwrap()[..2], [3, 3]);
}
