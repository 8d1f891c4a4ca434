use hopfinv::catalog::Family;
use hopfinv::invariants::closed_invariant;
use hopfinv::poly::{CycloFactorization, RenderStyle};

fn rows() -> Vec<(String, String, String)> {
    include_str!("data/printed_table.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('|').map(str::trim).collect();
            (cols[0].to_string(), cols[1].to_string(), cols[2].to_string())
        })
        .collect()
}

#[test]
fn closed_forms_reproduce_printed_table() {
    let mut bad = Vec::new();
    for (name, p1, p2) in rows() {
        let family = Family::parse(&name).unwrap();
        for (d, text) in [(1, p1), (2, p2)] {
            let got = closed_invariant(&family, d).unwrap().factorization;
            let want = CycloFactorization::parse(&text).unwrap();
            if got != want {
                bad.push(format!("{name} d={d}: got {} want {}", got.render(RenderStyle::Phi), want.render(RenderStyle::Phi)));
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
