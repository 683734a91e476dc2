use serde_json::Value;
use splitq_web::{diagram_json, pairing_json, sigma_json, touchard_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn sigma_for_regular_nilpotent() {
    let v = parse(sigma_json("1:4", 2).unwrap());
    assert_eq!(v["value"], 16);
    assert_eq!(v["sigma"]["display"], "q^4");
    assert_eq!(v["recurrence_agrees"], true);
    assert_eq!(v["x"].as_array().unwrap().len(), 5);
    assert!(sigma_json("1:3", 2).is_err());
    assert!(sigma_json("nonsense", 2).is_err());
    assert!(sigma_json("1:14", 2).is_err());
}

#[test]
fn touchard_distribution() {
    let v = parse(touchard_json(3).unwrap());
    assert_eq!(v["touchard"]["coeffs"], serde_json::json!([5, 6, 3, 1]));
    assert_eq!(v["diagrams"], 15);
    assert!(touchard_json(11).is_err());
}

#[test]
fn diagrams_wrap_and_count_crossings() {
    let first = parse(diagram_json(2, 0).unwrap());
    assert_eq!(first["count"], 3);
    assert_eq!(parse(diagram_json(2, 3).unwrap()), first);
    let total: u64 = (0..15).map(|i| parse(diagram_json(3, i).unwrap())["crossings"].as_u64().unwrap()).sum();
    assert_eq!(total, 6 + 2 * 3 + 3);
    assert!(diagram_json(0, 0).is_err());
    assert!(diagram_json(7, 0).is_err());
}

#[test]
fn pairing_input() {
    let v = parse(pairing_json("3,4,1,2").unwrap());
    assert_eq!(v["crossings"], 1);
    assert_eq!(v["arcs"], serde_json::json!([[1, 3], [2, 4]]));
    assert_eq!(parse(pairing_json("2 1 4 3").unwrap())["crossings"], 0);
    assert!(pairing_json("2,1,3").is_err());
    assert!(pairing_json("a,b").is_err());
}
