use super::*;
use crate::embeddings::Dressing;
use crate::presentations::Status;

fn opts() -> ReportOptions {
    ReportOptions::default()
}

#[test]
fn two_by_two_has_five_summands() {
    let rep = duality_report(2, 2, &opts()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.components.len(), 5);
    assert_eq!(rep.total, 16);
    let dims: Vec<u64> = rep.components.iter().map(|c| c.dim_o * c.dim_w.unwrap()).collect();
    assert_eq!(dims, vec![1, 4, 6, 4, 1]);
}

#[test]
fn three_by_two_sums_to_sixty_four() {
    let rep = duality_report(3, 2, &opts()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.total, 64);
}

#[test]
fn two_by_four_dimensions() {
    let rep = duality_report(2, 4, &opts()).unwrap();
    assert!(rep.passed(), "{rep}");
    let dims: Vec<u64> = rep.components.iter().map(|c| c.dim_o * c.dim_w.unwrap()).collect();
    assert_eq!(dims, vec![5, 32, 54, 32, 5, 27, 64, 27, 10]);
    assert_eq!(rep.total, 256);
}

#[test]
fn dressing_does_not_change_the_verdict() {
    let o = ReportOptions { dressing: Dressing::Dressed, ..opts() };
    assert!(duality_report(2, 2, &o).unwrap().passed());
}

#[test]
fn odd_columns_close_to_the_whole_space() {
    let rep = duality_report(2, 3, &opts()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.total, 64);
    assert!(rep.components.iter().all(|c| c.dim_w.is_none()));
    assert!(rep.checks.iter().any(|c| c.name == "orbit_closure_spot" && c.status == Status::Pass));
}

#[test]
fn spin_square_for_small_rank() {
    for n in 2..=3 {
        let rep = sxs_report(n, &opts()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.components.len(), 2 * n + 1);
    }
}

#[test]
fn json_has_the_expected_keys() {
    let rep = duality_report(2, 2, &opts()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for key in ["n", "m", "components", "total", "expected", "verdict", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let c = &v["components"][1];
    for key in ["mu", "mu_bar", "dim_o", "dim_w"] {
        assert!(c.get(key).is_some(), "missing component {key}");
    }
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn table_lists_every_component() {
    let text = duality_report(2, 2, &opts()).unwrap().to_string();
    assert!(text.contains("mu_bar"));
    assert!(text.contains("(1,1,1,1)"));
    assert!(text.ends_with("verdict: pass"));
}

#[test]
fn bad_grids_are_errors() {
    assert!(duality_report(1, 2, &opts()).is_err());
    assert!(duality_report(2, 1, &opts()).is_err());
    let tight = ReportOptions { max_sites: Some(4), ..opts() };
    assert!(duality_report(2, 3, &tight).is_err());
}
