use hopfcheck::harness::catalog::{Catalog, Truth};
use hopfcheck::harness::Instance;
use hopfcheck::Status;

#[test]
fn catalog_run_has_no_failures() {
    let cat = Catalog::build().unwrap();
    for rep in cat.run().unwrap() {
        assert_ne!(rep.status, Status::Fail, "{}", rep.to_text());
    }
}

#[test]
fn truth_table_statuses() {
    let cat = Catalog::build().unwrap();
    let reps = cat.run().unwrap();
    for e in &cat.hopf {
        let rep = reps
            .iter()
            .find(|r| r.battery == "theorem01" && r.label == e.label)
            .unwrap();
        let want = match e.truth {
            Truth::NotIrreducible => Status::RejectedHypothesis,
            _ => Status::Pass,
        };
        assert_eq!(rep.status, want, "{}", rep.to_text());
    }
}

#[test]
fn instances_round_trip() {
    let cat = Catalog::build().unwrap();
    for inst in cat.instances() {
        let text = inst.serialize();
        let back = Instance::parse(&text).unwrap();
        assert_eq!(back, inst, "{}", inst.label);
        assert_eq!(back.serialize(), text);
    }
}
