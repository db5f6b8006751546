use hopf16_core::classify::{close_characters, expand_irreps, Wedderburn};
use hopf16_core::constructors::catalog::{self, NAMES};
use hopf16_core::constructors::{dual_group_algebra, group_algebra};
use hopf16_core::cyclo::{c, q, zeta, CycNum};
use hopf16_core::fusion::{fusion_coefficients, fusion_isomorphic, identify_reference, reference};
use hopf16_core::groups;
use hopf16_core::hopf::HopfAlgebra;
use hopf16_core::linalg::{vec_add, Matrix};
use hopf16_core::rep::{
    central_idempotents, decompose_module_oracle, intertwiner_dimension, split_semisimple, verify_irrep_set,
    Representation,
};

fn curated_irreps(name: &str) -> (HopfAlgebra, Vec<Representation>) {
    let h = catalog::build(name).unwrap();
    let cur = catalog::curated(name, &h).unwrap();
    let chars = close_characters(&h, &cur.characters);
    let irreps = expand_irreps(&h, &chars, &cur.irreps);
    (h, irreps)
}

fn sum_traces(reps: &[&Representation]) -> Vec<CycNum> {
    let n = reps[0].images.len();
    reps.iter().fold(vec![CycNum::zero(); n], |acc, r| vec_add(&acc, &r.trace_character()))
}

fn anti(a: CycNum, b: CycNum) -> Matrix {
    Matrix::from_rows(vec![vec![c(0), a], vec![b, c(0)]])
}

#[test]
fn trivial_representation_is_valid_everywhere() {
    for name in NAMES {
        let h = catalog::build(name).unwrap();
        assert!(Representation::trivial(&h).verify(&h).is_ok(), "{name}");
    }
}

#[test]
fn two_dimensional_irrep_of_h_a1() {
    let h = catalog::build("Ha1").unwrap();
    let data = catalog::data("Ha1").unwrap();
    let gens = catalog::generators(&data, catalog::family("Ha1").unwrap());
    let get = |n: &str| gens.iter().find(|(g, _)| *g == n).unwrap().1.clone();
    let i = CycNum::i();
    let pi = Representation::from_generators(
        &h,
        "pi",
        &[
            (get("x"), Matrix::diag(&[i.clone(), -i.clone()])),
            (get("y"), Matrix::identity(2).scale(&c(-1))),
            (get("t"), anti(c(1), c(1))),
        ],
    )
    .unwrap();
    assert!(pi.verify(&h).is_ok());
    assert_eq!(intertwiner_dimension(&pi, &pi), 1);

    let cur = catalog::curated("Ha1", &h).unwrap();
    let (chi, phi) = (&cur.characters[0], &cur.characters[1]);
    assert_eq!(intertwiner_dimension(chi, phi), 0);

    // π⊗π has the same trace as 1 + χ² + φ + χ²φ
    let one = Representation::trivial(&h);
    let chi2 = Representation::tensor(&h, chi, chi);
    let chi2phi = Representation::tensor(&h, &chi2, phi);
    let pp = Representation::tensor(&h, &pi, &pi);
    assert_eq!(pp.trace_character(), sum_traces(&[&one, &chi2, phi, &chi2phi]));
}

#[test]
fn case_c_sigma1_irrep_uses_a_square_root_of_omega() {
    let data = catalog::data("HC1s").unwrap();
    let h = data.build().unwrap();
    let s = zeta(1);
    assert_eq!(&s * &s, CycNum::omega());
    let mut pairs: Vec<(Vec<CycNum>, Matrix)> = (0..8)
        .map(|g| {
            let mut d = Matrix::zeros(2, 2);
            if g == groups::xy_index(0, 1) {
                d.set(0, 0, c(1));
            }
            if g == groups::xy_index(1, 1) {
                d.set(1, 1, c(1));
            }
            (data.element(0, |k| if k == g { c(1) } else { c(0) }), d)
        })
        .collect();
    pairs.push((data.tbar(), anti(s.clone(), s)));
    let pi1 = Representation::from_generators(&h, "pi1", &pairs).unwrap();
    assert!(pi1.verify(&h).is_ok());
    assert_eq!(intertwiner_dimension(&pi1, &pi1), 1);
}

#[test]
fn dihedral_sixteen_irreps_are_inequivalent() {
    let g = groups::order16(3).unwrap();
    let h = group_algebra(&g);
    let a = g.index_of("a").unwrap();
    let b = g.index_of("b").unwrap();
    let rep = |k: i64| {
        Representation::from_generators(
            &h,
            &format!("pi{k}"),
            &[
                (h.basis_vec(a), Matrix::diag(&[zeta(2 * k), zeta(-2 * k)])),
                (h.basis_vec(b), anti(c(1), c(1))),
            ],
        )
        .unwrap()
    };
    let (pi1, pi3) = (rep(1), rep(3));
    assert!(pi1.verify(&h).is_ok() && pi3.verify(&h).is_ok());
    assert_eq!(intertwiner_dimension(&pi1, &pi3), 0);
    // traces at a are √2 and −√2
    assert_eq!(pi1.trace_character()[a], -pi3.trace_character()[a].clone());
}

#[test]
fn completeness_certificates() {
    let (h, irreps) = curated_irreps("Ha1");
    let set = verify_irrep_set(&h, &irreps).unwrap();
    assert_eq!(Wedderburn::from_degrees(&set.degrees()).to_string(), "(1^8,2^2)");
    assert_eq!(h.algebra().center().len(), 10);

    let (h, irreps) = curated_irreps("HC1");
    let set = verify_irrep_set(&h, &irreps).unwrap();
    assert_eq!(Wedderburn::from_degrees(&set.degrees()).to_string(), "(1^4,2^3)");
    assert_eq!(h.algebra().center().len(), 7);

    let h = group_algebra(&groups::order16(7).unwrap());
    let set = verify_irrep_set(&h, &split_semisimple(&h).unwrap()).unwrap();
    assert_eq!(Wedderburn::from_degrees(&set.degrees()).to_string(), "(1^8,2^2)");
}

#[test]
fn incomplete_sets_are_rejected() {
    let (h, irreps) = curated_irreps("Ha1");
    assert!(verify_irrep_set(&h, &irreps[..9]).is_err());
    let mut twice = irreps.clone();
    twice[1] = twice[0].clone();
    assert!(verify_irrep_set(&h, &twice).is_err());
}

#[test]
fn central_idempotents_of_small_algebras() {
    let h = group_algebra(&groups::cyclic(2));
    let reps = split_semisimple(&h).unwrap();
    let es = central_idempotents(&h, &reps).unwrap();
    let triv = reps.iter().position(|r| r.character_values().is_some_and(|v| v.iter().all(CycNum::is_one))).unwrap();
    assert_eq!(es[triv], vec![q(1, 2), q(1, 2)]);

    let h = dual_group_algebra(&groups::d8());
    let reps = split_semisimple(&h).unwrap();
    let es = central_idempotents(&h, &reps).unwrap();
    for e in &es {
        assert!((0..8).any(|g| *e == h.basis_vec(g)));
    }
}

#[test]
fn central_idempotents_of_h_a1() {
    let (h, irreps) = curated_irreps("Ha1");
    let es = central_idempotents(&h, &irreps).unwrap();
    assert_eq!(es.len(), 10);
    let sum = es.iter().fold(vec![CycNum::zero(); 16], |acc, e| vec_add(&acc, e));
    assert_eq!(sum, h.one());
    for (i, a) in es.iter().enumerate() {
        assert!(h.is_central(a));
        for (j, b) in es.iter().enumerate() {
            let p = h.mul(a, b);
            if i == j {
                assert_eq!(&p, a);
            } else {
                assert!(p.iter().all(CycNum::is_zero));
            }
        }
    }
}

/// Indices of characters and 2-dim irreps occurring in x⊗y by the intertwiner method.
fn decomposition(h: &HopfAlgebra, irreps: &[Representation], x: usize, y: usize) -> Vec<usize> {
    decompose_module_oracle(&Representation::tensor(h, &irreps[x], &irreps[y]), irreps)
}

#[test]
fn fusion_of_h_e() {
    let h = catalog::build("HE").unwrap();
    let cur = catalog::curated("HE", &h).unwrap();
    let mut irreps = close_characters(&h, &cur.characters);
    irreps.extend(cur.irreps.iter().cloned());
    assert!(verify_irrep_set(&h, &irreps).is_ok());
    let two: Vec<usize> = (0..irreps.len()).filter(|&i| irreps[i].degree() == 2).collect();
    let ones: Vec<usize> = (0..irreps.len()).filter(|&i| irreps[i].degree() == 1).collect();
    let p = |l: &str| irreps.iter().position(|r| r.label == l).unwrap();
    let (pi1, pi2, pi3) = (p("pi1"), p("pi2"), p("pi3"));
    assert_eq!(two.len(), 3);
    // π₂² is the sum of the four characters
    let m = decomposition(&h, &irreps, pi2, pi2);
    assert!(ones.iter().all(|&i| m[i] == 1) && two.iter().all(|&i| m[i] == 0));
    // π₁² = π₃² = two nontrivial characters + π₂
    for pk in [pi1, pi3] {
        let m = decomposition(&h, &irreps, pk, pk);
        assert_eq!(m[pi2], 1);
        assert_eq!(m[pi1] + m[pi3], 0);
        assert_eq!(m[ones[0]], 0);
        assert_eq!(ones.iter().map(|&i| m[i]).sum::<usize>(), 2);
    }
}

#[test]
fn fusion_of_k_g2() {
    let h = group_algebra(&groups::order16(2).unwrap());
    let irreps = split_semisimple(&h).unwrap();
    let set = verify_irrep_set(&h, &irreps).unwrap();
    let unit = set.identify(&Representation::trivial(&h)).unwrap();
    let two: Vec<usize> = (0..irreps.len()).filter(|&i| irreps[i].degree() == 2).collect();
    // exactly the two 2-dim basics whose square is two nontrivial characters plus the third
    let special: Vec<usize> = two
        .iter()
        .copied()
        .filter(|&k| {
            let m = decomposition(&h, &irreps, k, k);
            let others: Vec<usize> = two.iter().copied().filter(|&j| j != k && m[j] == 1).collect();
            m[unit] == 0 && others.len() == 1 && m[k] == 0
        })
        .collect();
    assert_eq!(special.len(), 2);
    let fc = fusion_coefficients(&h, &set).unwrap();
    assert_eq!(identify_reference(&fc.ring), Some("K6.4"));
}

#[test]
fn dual_representations() {
    let (h, irreps) = curated_irreps("Ha1");
    for chi in irreps.iter().filter(|r| r.degree() == 1) {
        let prod = Representation::tensor(&h, chi, &chi.dual(&h));
        assert_eq!(prod.images, Representation::trivial(&h).images);
    }

    let (h, irreps) = curated_irreps("Hc0");
    for pi in irreps.iter().filter(|r| r.degree() == 2) {
        let d = pi.dual(&h);
        assert!(d.verify(&h).is_ok());
        assert_eq!(intertwiner_dimension(pi, &d), 0);
    }

    let (h, irreps) = curated_irreps("HC1");
    for pi in irreps.iter().filter(|r| r.degree() == 2) {
        assert_eq!(intertwiner_dimension(pi, &pi.dual(&h)), 1, "{}", pi.label);
    }
}

#[test]
fn module_oracle_on_constructed_inputs() {
    let h = group_algebra(&groups::cyclic(2));
    let reps = split_semisimple(&h).unwrap();
    assert_eq!(decompose_module_oracle(&Representation::regular(&h), &reps), vec![1, 1]);

    let (_, irreps) = curated_irreps("Hb1");
    let rho = irreps[0].direct_sum(&irreps[0]).direct_sum(&irreps[1]);
    let m = decompose_module_oracle(&rho, &irreps);
    assert_eq!(&m[..2], &[2, 1]);
    assert!(m[2..].iter().all(|&k| k == 0));
}

#[test]
fn both_multiplicity_methods_agree_on_catalog() {
    for name in ["Ha1", "Hc0", "HE", "HB1"] {
        let (h, irreps) = curated_irreps(name);
        let set = verify_irrep_set(&h, &irreps).unwrap();
        let fc = fusion_coefficients(&h, &set).unwrap();
        assert_eq!(fc.oracle_agreements, fc.pairs, "{name}");
        assert!(fc.ring.identity_violations().is_empty(), "{name}");
    }
}

#[test]
fn reference_isomorphism_examples() {
    let (h, irreps) = curated_irreps("Ha1");
    let fc = fusion_coefficients(&h, &verify_irrep_set(&h, &irreps).unwrap()).unwrap();
    let k53 = reference::ring("K5.3").unwrap();
    assert!(fusion_isomorphic(&fc.ring, &k53).is_some());
    assert!(fusion_isomorphic(&k53, &reference::ring("K5.4").unwrap()).is_none());

    let h = group_algebra(&groups::order16(8).unwrap());
    let fc = fusion_coefficients(&h, &verify_irrep_set(&h, &split_semisimple(&h).unwrap()).unwrap()).unwrap();
    assert!(fusion_isomorphic(&fc.ring, &reference::ring("K5.1").unwrap()).is_some());
}
