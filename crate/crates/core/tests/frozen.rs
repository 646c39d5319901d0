//! Values computed independently of this crate and frozen here.

use polar_core::analysis::{compare_counts, special_case_tables, ComparisonVerdict};
use polar_core::census::counts;
use polar_core::degrees::{
    degree_chi, degree_kappa, degree_lambda, degree_mu, degree_nu, degree_xi, kappa_component,
};
use polar_core::{count_rank, i_max, validate_params, Count, PolarParams};

fn p(n: i64, s: i64, t: i64) -> PolarParams {
    validate_params(n, s, t).unwrap()
}

fn strings(v: &[Count]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

#[test]
fn census_values() {
    assert_eq!(strings(&counts(&p(3, 2, 2))), ["63", "315", "135"]);
    assert_eq!(
        strings(&counts(&p(5, 2, 2))),
        ["1023", "86955", "782595", "782595", "75735"]
    );
    assert_eq!(
        strings(&counts(&p(4, 2, 4))),
        ["495", "19635", "75735", "25245"]
    );
    assert_eq!(
        strings(&counts(&p(6, 2, 1))),
        ["2079", "365211", "7043355", "16434495", "4771305", "151470"]
    );
    assert_eq!(
        count_rank(&p(9, 2, 4), 3).unwrap().to_string(),
        "57697747837665075"
    );
    assert_eq!(
        count_rank(&p(9, 2, 4), 7).unwrap().to_string(),
        "2923503994766730375"
    );
    assert_eq!(i_max(&p(4, 2, 4)), 2);
}

#[test]
fn degree_values() {
    let q = p(5, 2, 2);
    assert_eq!(degree_kappa(&q, 2).unwrap().total, 1890);
    assert_eq!(degree_kappa(&q, 3).unwrap().total, 90);
    assert_eq!(degree_xi(&q, 2).unwrap(), 1680);
    assert_eq!(degree_xi(&q, 3).unwrap(), 90);
    assert_eq!(degree_lambda(&q, 2).unwrap(), 224);
    assert_eq!(degree_chi(&q, 2).unwrap(), 2114);
    assert_eq!(degree_chi(&q, 3).unwrap(), 210);
    assert_eq!(kappa_component(&q, 2, 0).unwrap(), 1680);
    assert_eq!(kappa_component(&q, 2, 1).unwrap(), 210);

    let sp6 = p(3, 2, 2);
    assert_eq!(degree_kappa(&sp6, 0).unwrap().total, 30);
    assert_eq!(degree_lambda(&sp6, 0).unwrap(), 32);
    assert_eq!(degree_chi(&sp6, 0).unwrap(), 62);
    assert_eq!(degree_nu(&sp6, 0).unwrap(), 30);
    assert_eq!(degree_mu(&sp6, 2).unwrap(), 14);
}

#[test]
fn sign_tables_match() {
    let even = ["<<<<<", "><<<<", ">>><<", ">>>><"];
    let odd = [">>=<<", ">>>><", ">>>>>", ">>>>>"];
    let (te, to) = special_case_tables(&[2, 3, 4, 9, 16]).unwrap();
    for (table, expected) in [(te, even), (to, odd)] {
        assert!(table.s_dependent_cells().is_empty());
        for (row, want) in table.rows.iter().zip(expected) {
            let got: String = row
                .cells
                .iter()
                .map(|c| c.verdict().unwrap().symbol())
                .collect();
            assert_eq!(got, want, "m = {}", row.m);
        }
    }
}

#[test]
fn even_rank_middle_exceeds_next_to_top() {
    for m in 3..=5u32 {
        for s in [2u64, 3, 4] {
            let q = polar_core::params::params_from_e(2 * m, s, 4).unwrap();
            assert_eq!(
                compare_counts(&q, m, 2 * m - 2).unwrap(),
                ComparisonVerdict::Greater
            );
        }
    }
}
