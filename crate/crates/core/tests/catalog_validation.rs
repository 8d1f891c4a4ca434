use hopfinv::catalog::{build_by_name, AlgebraBundle, BraidSide};
use hopfinv::hopf::{validate_braiding, validate_hopf, validate_r_matrix};

fn all_valid(b: &AlgebraBundle) {
    assert_eq!(validate_hopf(&b.algebra), Ok(()), "{}", b.id());
    match &b.side {
        BraidSide::Modules { r_matrices, simples } => {
            for r in r_matrices {
                assert_eq!(validate_r_matrix(&b.algebra, r), Ok(()), "{} {}", b.id(), r.label);
            }
            for s in simples {
                assert_eq!(s.validate(&b.algebra), Ok(()), "{} {}", b.id(), s.label);
            }
        }
        BraidSide::Comodules { braidings, .. } => {
            for s in braidings {
                assert_eq!(validate_braiding(&b.algebra, s), Ok(()), "{} {}", b.id(), s.label);
            }
        }
    }
}

#[test]
fn cyclic_groups_have_m_braidings() {
    for m in 1..=12 {
        let b = build_by_name(&format!("C_{m}")).unwrap();
        assert_eq!(b.braid_count(), m as usize);
        all_valid(&b);
    }
}

#[test]
fn dimension_eight_algebras_have_eight_braidings() {
    for name in ["D8", "Q8", "K8"] {
        let b = build_by_name(name).unwrap();
        assert_eq!(b.braid_count(), 8, "{name}");
        all_valid(&b);
    }
}

#[test]
fn group_gnn_counts() {
    for (name, count) in [("G_1_3", 6), ("G_1_2", 8), ("G_3_2", 24), ("G_1_4", 8), ("G_3_3", 18)] {
        let b = build_by_name(name).unwrap();
        assert_eq!(b.braid_count(), count, "{name}");
        all_valid(&b);
    }
}

#[test]
fn suzuki_counts_and_validity() {
    for (name, count) in [("A_1_2_-", 8), ("A_1_2_+", 8), ("A_1_3_+", 6), ("A_3_2_-", 24), ("A_1_4_-", 8)] {
        let b = build_by_name(name).unwrap();
        assert_eq!(b.braid_count(), count, "{name}");
        all_valid(&b);
    }
}

#[test]
fn abelian_products_validate() {
    for name in ["CxC_2_2", "CxC_2_3", "CxC_2_4"] {
        all_valid(&build_by_name(name).unwrap());
    }
}
