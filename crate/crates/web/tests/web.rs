use egcert::cert::{data, degree_formula};
use egcert_web::{build_pattern, certify_json, degree_json, parse_points, y_points_text, MAX_M};
use serde_json::Value;

#[test]
fn certify_matches_degree_formula() {
    for m in [6, 12, 18] {
        let r: Value = serde_json::from_str(&certify_json(m).unwrap()).unwrap();
        assert_eq!(r["degree"], degree_formula(m));
        assert_eq!(r["eg_violated"], true);
    }
    assert!(certify_json(5).is_err());
    assert!(certify_json(MAX_M + 6).is_err());
}

#[test]
fn pattern_reproduces_fixture() {
    for (which, fixture) in [("L", data::L1_MOD3), ("W", data::W1_MOD3)] {
        let p = build_pattern(1, which).unwrap();
        assert!(p.certified());
        let rows: Vec<Vec<u8>> = fixture
            .lines()
            .skip(1)
            .map(|l| {
                l.split(',')
                    .map(|v| v.parse::<i64>().unwrap().rem_euclid(3) as u8)
                    .collect()
            })
            .collect();
        assert_eq!((p.rows(), p.cols()), (rows.len(), rows[0].len()));
        assert_eq!(p.cells(), rows.concat());
        let pivots = p.pivots();
        assert!(!pivots.is_empty() && pivots.len().is_multiple_of(2));
        assert!(pivots
            .chunks(2)
            .all(|rc| (rc[0] as usize) < p.rows() && (rc[1] as usize) < p.cols()));
    }
}

#[test]
fn pattern_rejects_bad_input() {
    assert!(build_pattern(0, "L").is_err());
    assert!(build_pattern(4, "L").is_err());
    assert!(build_pattern(1, "Q").is_err());
    let n = build_pattern(2, "N").unwrap();
    assert_eq!((n.rows(), n.cols()), (166, 165));
    assert!(n.pivots().is_empty());
}

#[test]
fn toric_degree_of_y_points() {
    let pts = y_points_text(6).unwrap();
    let d: Value = serde_json::from_str(&degree_json(&pts).unwrap()).unwrap();
    assert_eq!(d["degree"], 33);
    // Veronese surface
    let d: Value = serde_json::from_str(&degree_json("0,0 2,0 0,2 1,1 1,0 0,1").unwrap()).unwrap();
    assert_eq!(d["degree"], 4);
    assert!(parse_points("0,0 1").is_err());
    assert!(parse_points("0,0 0,0").is_err());
}
