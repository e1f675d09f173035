use rmghw::evalcode::{build_code, codes_equal, dual_code, scale_code, veronese_lambda};
use rmghw::formulas::{footprint_ghw, prm_min_distance, torus_ghw, CartesianParams};
use rmghw::gf::FieldSpec;
use rmghw::oracle::{ghw_spectrum, weight_hierarchy, GhwReport, Method};
use rmghw::varieties::{cartesian_set, projective_space, projective_torus, veronese_embed, PointSet};

#[test]
fn point_text_round_trip_keeps_order() {
    let f = FieldSpec::of_order(4).unwrap();
    for x in [projective_space(&f, 3).unwrap(), projective_torus(&f, 3).unwrap()] {
        let back = PointSet::from_text(&x.to_text()).unwrap();
        assert_eq!(back.points(), x.points());
        assert_eq!(back.kind().tag(), x.kind().tag());
    }
}

#[test]
fn torus_closed_form_footprint_and_oracle_agree() {
    let f = FieldSpec::of_order(4).unwrap();
    let t = projective_torus(&f, 3).unwrap();
    let params = CartesianParams::torus(4, 3).unwrap();
    for d in 1..=3u32 {
        let code = build_code(&t, d).unwrap();
        let h = weight_hierarchy(code.gen_basis()).unwrap();
        for r in 1..=code.dim() {
            assert_eq!(footprint_ghw(&params, d as u64, r).unwrap(), h.weights[r - 1], "d={d} r={r}");
            if let Ok(v) = torus_ghw(4, 3, d as u64, r) {
                assert_eq!(v, h.weights[r - 1], "d={d} r={r}");
            }
        }
    }
}

#[test]
fn veronese_code_on_a_cartesian_set() {
    let f = FieldSpec::of_order(5).unwrap();
    let factors = vec![vec![f.from_int(1), f.from_int(2), f.from_int(4)], vec![f.from_int(0), f.from_int(3)]];
    let x = cartesian_set(&f, &factors).unwrap();
    let (image, _) = veronese_embed(&x, 3);
    for d in 1..=2u32 {
        let base = build_code(&x, 3 * d).unwrap();
        let ver = build_code(&image, d).unwrap();
        let lambda = veronese_lambda(&x, 3, d);
        assert!(codes_equal(base.gen_basis(), &scale_code(ver.gen_basis(), &lambda).unwrap()).unwrap());
        assert_eq!(
            weight_hierarchy(base.gen_basis()).unwrap().weights,
            weight_hierarchy(ver.gen_basis()).unwrap().weights
        );
        let dual_ver = dual_code(&ver).basis;
        let dual_base = dual_code(&base).basis;
        assert!(codes_equal(&dual_ver, &scale_code(&dual_base, &lambda).unwrap()).unwrap());
    }
}

#[test]
fn report_json_round_trip() {
    let f = FieldSpec::of_order(3).unwrap();
    let code = build_code(&projective_space(&f, 3).unwrap(), 2).unwrap();
    let report = ghw_spectrum(&code, 3).unwrap();
    assert_eq!(report.method, Method::SubsetRank);
    assert_eq!(report.values(), vec![6, 8, 9]);
    assert_eq!(prm_min_distance(3, 3, 2).unwrap(), 6);
    let text = serde_json::to_string(&report).unwrap();
    let back: GhwReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}
