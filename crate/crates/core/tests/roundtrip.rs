use goldman::bivector::{compute_bivector, Bivector};
use goldman::data::{data_dir, map_path};
use goldman::goldman::DiagramData;
use goldman::maps::FreeHom;
use goldman::surface::FatGraph;

#[test]
fn bivector_json_round_trip() {
    for (n, g) in [(5, 0), (4, 0), (1, 1), (2, 1)] {
        let bv = compute_bivector(&FatGraph::standard_model(n, g).unwrap()).unwrap();
        let text = bv.to_json().unwrap();
        let back = Bivector::from_json(&text).unwrap();
        assert_eq!(back.surface, bv.surface);
        assert_eq!(back.coordinates, bv.coordinates);
        assert_eq!(back.pairs(), bv.pairs());
        for (u, v) in bv.pairs() {
            assert_eq!(back.get(&u, &v), bv.get(&u, &v));
        }
        assert_eq!(back.to_json().unwrap(), text);
    }
}

#[test]
fn bivector_json_schema() {
    let bv = compute_bivector(&FatGraph::standard_model(4, 0).unwrap()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&bv.to_json().unwrap()).unwrap();
    assert_eq!(v["surface"], serde_json::json!({"n": 4, "g": 0}));
    assert_eq!(v["coordinates"].as_array().unwrap().len(), 7);
    let e = &v["entries"][0];
    assert!(e["u"].is_string() && e["v"].is_string() && e["poly"].is_string());
}

#[test]
fn shipped_maps_round_trip() {
    for name in ["disk_cap_4", "inclusion_3_4", "glue_4_0_to_2_1"] {
        let h = FreeHom::load(&map_path(&data_dir(), name)).unwrap();
        assert_eq!(h.to_json().unwrap().parse::<FreeHom>().unwrap(), h);
    }
}

#[test]
fn diagram_round_trip() {
    let d = DiagramData::load(&data_dir().join("diagrams/sigma_5_0/1324.json")).unwrap();
    let back: DiagramData = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
    assert_eq!(back, d);
    assert_eq!(d.points.len(), 4);
}

#[test]
fn corrupt_inputs_rejected() {
    assert!(Bivector::from_json(r#"{"surface":{"n":4,"g":0},"coordinates":["t[1]"],"entries":[{"u":"t[1]","v":"t[9]","poly":"1"}]}"#).is_err());
    assert!(Bivector::from_json("not json").is_err());
    assert!(serde_json::from_str::<DiagramData>(r#"{"figure":"x"}"#).is_err());
}
