// Frozen group tables. The zoo values were computed from hand-written boundary
// matrices with an independent SNF implementation and copied here.

use cellcoh_core::abgroups::parse_group;
use cellcoh_core::complex::{self, zoo, CwComplex};
use cellcoh_core::homology::{self, Variant};
use cellcoh_core::maps::{self, degree};
use cellcoh_core::{BigInt, FgAbGroup};

fn g(s: &str) -> FgAbGroup {
    parse_group(s).unwrap()
}

fn table(x: &CwComplex, variant: Variant, coeff: &str, reduced: bool) -> Vec<String> {
    (0..=x.dim() as i64)
        .map(|n| {
            homology::group(x, n, &g(coeff), variant, reduced)
                .unwrap()
                .group()
                .to_string()
        })
        .collect()
}

fn homology_table(x: &CwComplex) -> Vec<String> {
    table(x, Variant::Homology, "Z", false)
}

fn cohomology_table(x: &CwComplex) -> Vec<String> {
    table(x, Variant::Cohomology, "Z", false)
}

#[test]
fn integral_homology_of_the_zoo() {
    let cases: [(&str, &[i64], &[&str]); 11] = [
        ("torus", &[], &["Z", "Z^2", "Z"]),
        ("klein", &[], &["Z", "Z + Z/2", "0"]),
        ("rp", &[2], &["Z", "Z/2", "0"]),
        ("rp", &[3], &["Z", "Z/2", "0", "Z"]),
        ("rp", &[4], &["Z", "Z/2", "0", "Z/2", "0"]),
        ("cp", &[2], &["Z", "0", "Z", "0", "Z"]),
        ("surface", &[2], &["Z", "Z^4", "Z"]),
        ("surface", &[3], &["Z", "Z^6", "Z"]),
        ("lens", &[3], &["Z", "Z/3", "0", "Z"]),
        ("lens", &[5], &["Z", "Z/5", "0", "Z"]),
        ("moore", &[3, 2], &["Z", "0", "Z/3", "0"]),
    ];
    for (name, params, expected) in cases {
        let x = zoo(name, params).unwrap();
        assert_eq!(homology_table(&x), expected, "{}", x.name());
    }
}

#[test]
fn integral_cohomology_of_the_zoo() {
    let cases: [(&str, &[i64], &[&str]); 8] = [
        ("torus", &[], &["Z", "Z^2", "Z"]),
        ("klein", &[], &["Z", "Z", "Z/2"]),
        ("rp", &[2], &["Z", "0", "Z/2"]),
        ("rp", &[3], &["Z", "0", "Z/2", "Z"]),
        ("rp", &[4], &["Z", "0", "Z/2", "0", "Z/2"]),
        ("cp", &[2], &["Z", "0", "Z", "0", "Z"]),
        ("lens", &[3], &["Z", "0", "Z/3", "Z"]),
        ("moore", &[3, 2], &["Z", "0", "0", "Z/3"]),
    ];
    for (name, params, expected) in cases {
        let x = zoo(name, params).unwrap();
        assert_eq!(cohomology_table(&x), expected, "{}", x.name());
    }
}

#[test]
fn mod_two_cohomology() {
    // every cell of RP^n carries a Z/2 class
    for n in 1..=4 {
        let x = complex::rp(n);
        assert!(table(&x, Variant::Cohomology, "Z/2", false).iter().all(|h| h == "Z/2"));
    }
    assert_eq!(table(&complex::klein(), Variant::Cohomology, "Z/2", false), ["Z/2", "(Z/2)^2", "Z/2"]);
    assert_eq!(table(&complex::torus(), Variant::Cohomology, "Z/6", true), ["0", "(Z/6)^2", "Z/6"]);
    assert_eq!(
        table(&complex::rp(2), Variant::Cohomology, "Z + Z/4", false),
        ["Z + Z/4", "Z/2", "(Z/2)^2"]
    );
}

#[test]
fn reduced_sphere_cohomology_grid() {
    for coeff in ["Z", "Z/2", "Z/6", "Z + Z/4"] {
        let coeff = g(coeff);
        for n in 0..=4 {
            let s = complex::sphere(n);
            for m in -1..=5i64 {
                let h = homology::cohomology(&s, m, &coeff, true).unwrap().into_group();
                let expected = if m == n as i64 { coeff.clone() } else { FgAbGroup::trivial() };
                assert_eq!(h, expected, "H^{}(S^{}; {})", m, n, coeff);
            }
        }
    }
}

#[test]
fn all_groups_tables() {
    let t = homology::all_groups(&complex::torus(), &g("Z"), Variant::Cohomology, true).unwrap();
    let shown: Vec<(i64, String)> = t.into_iter().map(|(n, h)| (n, h.to_string())).collect();
    assert_eq!(
        shown,
        [(-1, "0"), (0, "0"), (1, "Z^2"), (2, "Z"), (3, "0")].map(|(n, s)| (n, s.to_string()))
    );
    let rp3 = homology::all_groups(&complex::rp(3), &g("Z"), Variant::Cohomology, true).unwrap();
    let groups: Vec<String> = rp3.iter().map(|(_, h)| h.to_string()).collect();
    assert_eq!(groups, ["0", "0", "0", "Z/2", "Z", "0"]);
    let pt = homology::all_groups(&complex::point(), &g("Z + Z/4"), Variant::Cohomology, true).unwrap();
    assert!(pt.iter().all(|(_, h)| h.is_trivial()));
}

#[test]
fn moore_spaces_from_cones() {
    for q in [2i64, 3, 5] {
        for n in 1..=2usize {
            let cone = maps::mapping_cone(&maps::sphere_self_map(n, q).unwrap()).unwrap();
            let m = complex::moore(q, n);
            assert!(cone.complex.same_structure(&m));
            let top = homology::cohomology(&m, n as i64 + 1, &g("Z"), true).unwrap().into_group();
            assert_eq!(top, FgAbGroup::cyclic(q));
            let mid = homology::cohomology(&m, n as i64, &FgAbGroup::cyclic(q), true).unwrap().into_group();
            assert_eq!(mid, FgAbGroup::cyclic(q));
            let low = homology::cohomology(&m, n as i64, &g("Z"), true).unwrap().into_group();
            assert!(low.is_trivial());
        }
    }
}

#[test]
fn s0_degree_table() {
    let [id, swap, c0, c1] = maps::s0_self_maps();
    let d: Vec<BigInt> = [id, swap, c0, c1].iter().map(|f| degree(f).unwrap()).collect();
    assert_eq!(d, [1, -1, 0, 0].map(BigInt::from));
}

#[test]
fn wedge_of_three_spheres() {
    for n in 0..=3 {
        let w = complex::wedge(&[complex::sphere(n), complex::sphere(n), complex::sphere(n)]);
        let h = homology::cohomology(&w, n as i64, &g("Z/2"), true).unwrap().into_group();
        assert_eq!(h, g("(Z/2)^3"));
    }
}
