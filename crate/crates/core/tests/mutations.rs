mod common;

use hopfinv::catalog::build_by_name;
use hopfinv::exec::Execution;
use hopfinv::reprings::fusion_ring;

use common::{mutate_braidings, mutate_hopf, mutate_modules, mutate_ring, Outcome};

const NAMES: [&str; 8] = ["C_4", "CxC_2_2", "D8", "Q8", "K8", "G_1_2", "A_1_2_-", "A_1_3_+"];

fn assert_all_rejected(what: &str, o: &Outcome) {
    assert!(o.tried > 0, "{what}: no mutations generated");
    assert!(o.survivors.is_empty(), "{what}: {} of {} mutations accepted: {:?}", o.survivors.len(), o.tried, o.survivors);
}

#[test]
fn hopf_validator_rejects_single_entry_mutations() {
    for name in NAMES {
        let b = build_by_name(name).unwrap();
        assert_all_rejected(name, &mutate_hopf(&b.algebra));
    }
}

#[test]
fn braiding_validators_reject_single_entry_mutations() {
    for name in NAMES {
        let b = build_by_name(name).unwrap();
        assert_all_rejected(name, &mutate_braidings(&b));
    }
}

#[test]
fn module_validator_rejects_single_entry_mutations() {
    for name in ["C_4", "D8", "Q8", "K8", "G_1_2", "A_1_2_-"] {
        let b = build_by_name(name).unwrap();
        assert_all_rejected(name, &mutate_modules(&b));
    }
}

#[test]
fn fusion_ring_axioms_reject_single_entry_mutations() {
    for name in ["D8", "Q8", "G_1_3", "A_1_3_+"] {
        let b = build_by_name(name).unwrap();
        let ring = fusion_ring(&b.algebra, &b.modules, Execution::Sequential).unwrap();
        assert!(ring.axiom_failures().is_empty(), "{name}");
        assert_all_rejected(name, &mutate_ring(&ring));
    }
}
