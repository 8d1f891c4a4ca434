use hopfinv::catalog::{build, enumerate, Family};
use hopfinv::exec::Execution;
use hopfinv::invariants::{closed_form, dimension_table, invariants, InvariantError, Path};
use hopfinv::poly::{expand, factor_cyclotomic};

/// Full BigInt expansion gets expensive past this degree; the factorization covers the rest.
const EXPAND_LIMIT: u64 = 600;

fn self_dual(f: &Family) -> bool {
    !matches!(f, Family::Suzuki(p) if !p.is_self_dual())
}

/// One pass over the catalog up to dimension 40: generic vs closed, root counts,
/// root orders, integrality, and the tabulated per-braiding dimensions.
#[test]
fn catalog_invariants_up_to_dimension_40() {
    for family in enumerate(40).into_iter().filter(self_dual) {
        let bundle = build(family, 40).unwrap();
        let table = dimension_table(&bundle, Execution::default()).unwrap_or_else(|e| panic!("{family}: {e}"));
        let dim3 = (family.dim() as u64).pow(3);

        for d in [1, 2] {
            let generic = table.for_degree(d);
            assert_eq!(generic, closed_form(&family, d).unwrap(), "{family} d={d}: paths differ");
            let simples = bundle.simple_dims().iter().filter(|(_, k)| *k == d).count();
            assert_eq!(generic.degree() as usize, simples * bundle.braid_count(), "{family} d={d}");
            for (root, _) in generic.roots() {
                assert_eq!(dim3 % root.order(), 0, "{family}: root {root}");
            }
            factor_cyclotomic(&generic).unwrap_or_else(|e| panic!("{family} d={d}: {e}"));
            if generic.degree() <= EXPAND_LIMIT {
                assert!(expand(&generic).integer_coeffs().is_some(), "{family} d={d}");
            }
        }

        if let Some(closed) = &bundle.closed_dimensions {
            for (b, (row, expected)) in table.values.iter().zip(closed).enumerate() {
                for (k, (got, want)) in row.iter().zip(expected).enumerate() {
                    assert_eq!(got.reduced(), want.reduced(), "{family}: {} on {}", table.braidings[b], table.simples[k].0);
                }
            }
        }
    }
}

#[test]
fn both_path_reports_agreement() {
    for name in ["D8", "G_1_3", "A_1_2_-", "CxC_2_4"] {
        let bundle = build(Family::parse(name).unwrap(), 40).unwrap();
        let results = invariants(&bundle, &[1, 2, 3], Path::Both, Execution::Sequential).unwrap();
        assert!(results.iter().all(|r| r.path == Path::Both));
        assert!(results[2].roots.is_empty(), "{name}: no simples of degree 3");
    }
}

#[test]
fn non_self_dual_suzuki_algebras_are_refused() {
    for name in ["A_1_2_+", "A_3_2_+", "A_1_4_+"] {
        let bundle = build(Family::parse(name).unwrap(), 200).unwrap();
        let err = invariants(&bundle, &[1], Path::Generic, Execution::Sequential).unwrap_err();
        assert!(matches!(err, InvariantError::Unsupported(_)), "{name}: {err}");
    }
}
