use knotforge::algebra::Prime;
use knotforge::diagram::{parse_pd, symmetric_union_pd, PdCode, SymUnionSpec};
use knotforge::presentation::{build_symun_presentation, wirtinger, GroupPresentation};
use knotforge::reps::{enumerate_sl2, enumerate_sl2_summary, RepSearchConfig};
use knotforge::twisted::{classical_alexander, twisted_alexander};

fn profile(pres: &GroupPresentation, twisted: &GroupPresentation, p: u64) -> (usize, usize, Vec<String>) {
    let cfg = RepSearchConfig { budget: 6, ..RepSearchConfig::new(Prime::new(p).unwrap()) };
    let s = enumerate_sl2_summary(pres, &cfg).unwrap();
    let mut polys: Vec<String> =
        s.reps.iter().map(|r| twisted_alexander(twisted, r, None).unwrap().to_string()).collect();
    polys.sort();
    (s.gl2_classes, s.sl2_classes_all, polys)
}

fn diagrams() -> Vec<(&'static str, PdCode)> {
    let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let figure8 = parse_pd("X[4,1,5,2] X[8,5,1,6] X[6,4,7,3] X[2,8,3,7]").unwrap();
    vec![
        ("3_1", trefoil.clone()),
        ("3_1 curled", trefoil.kinked_into(3, &[1, 3, 5]).unwrap()),
        ("4_1", figure8.clone()),
        ("4_1 curled", figure8.kinked_into(1, &[1, 6, 4]).unwrap()),
    ]
}

fn cofacial_tuples(d: &PdCode, size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for f in d.faces() {
        for start in 0..f.len() {
            let t: Vec<u32> = (0..size).map(|i| f[(start + i) % f.len()]).collect();
            if f.len() >= size && !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out
}

#[test]
fn curls_preserve_the_knot() {
    for (name, d) in diagrams() {
        assert!(d.is_planar(), "{name}");
        let plain = &name[..3];
        let reference = diagrams().into_iter().find(|(n, _)| *n == plain).unwrap().1;
        assert_eq!(classical_alexander(&d), classical_alexander(&reference), "{name}");
        let a = profile(&wirtinger(&d), &wirtinger(&d).deficiency_one().unwrap(), 5);
        let b = profile(&wirtinger(&reference), &wirtinger(&reference).deficiency_one().unwrap(), 5);
        assert_eq!((a.0, a.1), (b.0, b.1), "{name}");
    }
}

// When the marked edges share a face, the union from the PD surgery is a
// planar diagram and its Wirtinger group has the same SL(2, F_p)
// representations and twisted polynomials as the template presentation,
// whichever side of each marked edge the axis runs on.
#[test]
fn pd_union_and_template_agree_on_shared_faces() {
    let twist_sets: [&[i64]; 4] = [&[2], &[-2], &[4, -2], &[-2, 2, 2]];
    let mut checked = 0;
    for (name, d) in diagrams() {
        for twists in twist_sets {
            for marks in cofacial_tuples(&d, twists.len() + 1) {
                let spec = SymUnionSpec::new(d.clone(), marks.clone(), twists.to_vec()).unwrap();
                assert!(spec.marks_share_face());
                let pd = symmetric_union_pd(&spec).unwrap();
                assert!(pd.is_planar(), "{name} marks {marks:?} twists {twists:?}");
                let from_pd = wirtinger(&pd);
                let template = build_symun_presentation(&spec).unwrap().union;
                let a = profile(&from_pd, &from_pd.deficiency_one().unwrap(), 5);
                let b = profile(&template, &template, 5);
                assert_eq!(a, b, "{name} marks {marks:?} twists {twists:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 40, "{checked}");
}

#[test]
fn pd_union_and_template_agree_at_p7() {
    let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    for (marks, twists) in [(vec![1, 3], vec![2]), (vec![5, 1, 3], vec![-2, 4])] {
        let spec = SymUnionSpec::new(trefoil.clone(), marks, twists).unwrap();
        let from_pd = wirtinger(&symmetric_union_pd(&spec).unwrap());
        let template = build_symun_presentation(&spec).unwrap().union;
        assert_eq!(profile(&from_pd, &from_pd.deficiency_one().unwrap(), 7), profile(&template, &template, 7));
    }
}

#[test]
fn trefoil_union_is_8_20() {
    let k820 = parse_pd(
        "X[1,6,2,7] X[4,14,5,13] X[5,8,6,9] X[7,2,8,3] X[10,16,11,15] X[12,10,13,9] X[14,4,15,3] X[16,12,1,11]",
    )
    .unwrap();
    let table = wirtinger(&k820);
    let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    for marks in [vec![1, 3], vec![2, 4]] {
        let spec = SymUnionSpec::new(trefoil.clone(), marks, vec![2]).unwrap();
        let template = build_symun_presentation(&spec).unwrap().union;
        for p in [5, 7] {
            assert_eq!(profile(&template, &template, p), profile(&table, &table.deficiency_one().unwrap(), p));
        }
    }
}

fn longitude_traces(g: &GroupPresentation, p: u64) -> Vec<String> {
    let reps = enumerate_sl2(g, &RepSearchConfig::new(Prime::new(p).unwrap())).unwrap();
    let lon = g.longitude().unwrap();
    let mut out: Vec<String> = reps
        .iter()
        .map(|r| {
            let (l, m) = (r.eval_word(lon), r.matrix(g.meridian()));
            assert_eq!(l.mul(m), m.mul(&l));
            format!("{:?}", l.trace())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn longitudes_match_the_pd_union() {
    let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let figure8 = parse_pd("X[4,1,5,2] X[8,5,1,6] X[6,4,7,3] X[2,8,3,7]").unwrap();
    let cases: [(&PdCode, Vec<u32>, Vec<i64>); 6] = [
        (&trefoil, vec![1, 3], vec![-4]),
        (&trefoil, vec![2, 4], vec![2]),
        (&trefoil, vec![1, 3, 5], vec![2, -2]),
        (&trefoil, vec![1, 4], vec![-2]),
        (&figure8, vec![1, 6], vec![2]),
        (&figure8, vec![1, 6, 4], vec![2, 2]),
    ];
    for (d, marks, twists) in cases {
        let spec = SymUnionSpec::new(d.clone(), marks.clone(), twists.clone()).unwrap();
        let template = build_symun_presentation(&spec).unwrap().union;
        let from_pd = wirtinger(&symmetric_union_pd(&spec).unwrap());
        assert_eq!(longitude_traces(&template, 5), longitude_traces(&from_pd, 5), "{marks:?} {twists:?}");
    }
}

// Marks on different faces give a non-planar code; the two groups then
// need not agree, which is why such marks are flagged.
#[test]
fn marks_on_different_faces_are_flagged() {
    let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let spec = SymUnionSpec::new(trefoil, vec![1, 2], vec![2]).unwrap();
    assert!(!spec.marks_share_face());
    assert!(!symmetric_union_pd(&spec).unwrap().is_planar());
}
