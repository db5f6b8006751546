use hopf16_core::constructors::catalog::{self, c4xc2_pq, xy_pq, Family, NAMES};
use hopf16_core::constructors::{dual_group_algebra, group_algebra, CocycleCondition, ConstructionError};
use hopf16_core::cyclo::{c, q, CycNum};
use hopf16_core::groups::{self, GroupLabel, GroupTable};
use hopf16_core::hopf::{HopfAlgebra, HopfMorphism};
use hopf16_core::linalg::{is_zero_vec, vec_add, vec_scale, Matrix};

fn kc2() -> HopfAlgebra {
    group_algebra(&groups::cyclic(2))
}

fn generator(name: &str, g: &str) -> Vec<CycNum> {
    let data = catalog::data(name).unwrap();
    let fam = catalog::family(name).unwrap();
    catalog::generators(&data, fam).into_iter().find(|(n, _)| *n == g).unwrap().1
}

#[test]
fn sigma_equal_to_x_is_rejected() {
    let mut data = catalog::data("Ha1").unwrap();
    data.sigma = (0..8).map(|g| CycNum::i_pow(-c4xc2_pq(g).0)).collect();
    assert!(matches!(
        data.build(),
        Err(ConstructionError::InvalidCocycle { condition: CocycleCondition::SigmaActionInvariant, .. })
    ));
    let h = data.build_unchecked().unwrap();
    let t = data.tbar();
    let t2 = h.mul(&t, &t);
    // x is multiplicative on C4×C2 and the two θ factors cancel, so Δ(t̄²) = Δ(t̄)Δ(t̄) still holds
    let dt = h.coproduct(&t);
    assert_eq!(h.coproduct(&t2), h.tensor_mul(&dt, &dt));
    // but t̄ does not commute with t̄² = x, so the product is not associative
    assert_ne!(h.mul(&t2, &t), h.mul(&t, &t2));
    let report = h.verify_axioms();
    assert!(!report.get("associativity").unwrap().passed);
    assert!(report.get("comultiplication is an algebra map").unwrap().passed);
}

#[test]
fn catalog_entries_pass_axioms_and_are_nontrivial() {
    for name in NAMES {
        let h = catalog::build(name).unwrap();
        assert_eq!(h.dim(), 16, "{name}");
        assert!(h.verify_axioms().all_passed(), "{name}");
        assert!(!h.is_commutative() && !h.is_cocommutative(), "{name}");
        assert!(h.trace_form_certificate(), "{name}");
    }
}

#[test]
fn duality_is_an_involution_and_swaps_properties() {
    let kd8 = group_algebra(&groups::d8());
    let d = kd8.dual_hopf();
    assert_eq!(d.dim(), 8);
    assert!(d.is_commutative() && !d.is_cocommutative());
    assert_eq!(d.dual_hopf(), kd8);
    let c2d = kc2().dual_hopf();
    assert!(c2d.is_commutative() && c2d.is_cocommutative());
    assert_eq!(c2d.find_grouplikes_count_bound().unwrap(), 2);
    for name in ["Ha1", "Hc1", "HC1"] {
        let h = catalog::build(name).unwrap();
        assert_eq!(h.dual_hopf().dual_hopf(), h, "{name}");
    }
}

#[test]
fn group_algebra_properties() {
    let kd16 = group_algebra(&groups::order16(3).unwrap());
    assert_eq!(kd16.dim(), 16);
    assert!(!kd16.is_commutative() && kd16.is_cocommutative());
    let kq16 = group_algebra(&groups::order16(4).unwrap());
    assert!(kq16.verify_axioms().all_passed());
    let kd8dual = dual_group_algebra(&groups::d8());
    assert!(kd8dual.is_commutative() && !kd8dual.is_cocommutative());
}

#[test]
fn tensor_products() {
    let k4 = kc2().tensor_product(&kc2());
    assert_eq!(k4.dim(), 4);
    assert_eq!(k4.find_grouplikes_count_bound().unwrap(), 4);
    assert!(k4.verify_axioms().all_passed());
    let h = catalog::build("Hc0").unwrap();
    let k1 = group_algebra(&groups::cyclic(1));
    assert_eq!(h.tensor_product(&k1).dim(), 16);
}

#[test]
fn trace_form_of_kc2() {
    // Tr(L_1) = 2, Tr(L_g) = 0, so the Gram matrix in {1, g} is 2·I
    let h = kc2();
    assert_eq!(h.algebra().trace_form(), Matrix::from_int_rows(&[&[2, 0], &[0, 2]]));
    assert!(h.trace_form_certificate());
}

#[test]
fn grouplike_count_bounds() {
    assert_eq!(kc2().find_grouplikes_count_bound().unwrap(), 2);
    assert_eq!(group_algebra(&groups::d8()).find_grouplikes_count_bound().unwrap(), 8);
    assert_eq!(catalog::build("HC1s").unwrap().find_grouplikes_count_bound().unwrap(), 4);
}

#[test]
fn claimed_grouplike_sets() {
    for (name, label) in [("HC1", GroupLabel::D8), ("Ha1", GroupLabel::C4xC2), ("HE", GroupLabel::D8)] {
        let data = catalog::data(name).unwrap();
        let h = data.build().unwrap();
        let table = h.verify_grouplike_set(&data.grouplikes()).unwrap();
        assert_eq!(table.order(), 8);
        assert_eq!(table.identify().unwrap(), label, "{name}");
    }
    let g5 = groups::order16(5).unwrap();
    let h = group_algebra(&g5);
    let basis: Vec<Vec<CycNum>> = (0..16).map(|i| h.basis_vec(i)).collect();
    assert_eq!(h.verify_grouplike_set(&basis).unwrap().order(), 16);
}

#[test]
fn group_identification() {
    let c2 = GroupTable::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(c2.identify().unwrap(), GroupLabel::C2);
    let d8 = groups::d8();
    assert_eq!(d8.table.involution_count(), 5);
    assert_eq!(d8.table.identify().unwrap(), GroupLabel::D8);
    let q8 = groups::q8();
    assert_eq!(q8.table.involution_count(), 1);
    assert_eq!(q8.table.identify().unwrap(), GroupLabel::Q8);
}

#[test]
fn quotients_by_central_grouplikes() {
    let hb1 = catalog::build("HB1").unwrap();
    let y = generator("HB1", "Y");
    let (quo, proj) = hb1.quotient_by_central_grouplike(&y).unwrap();
    assert_eq!(quo.dim(), 8);
    assert!(quo.is_cocommutative());
    assert!(proj.verify(&hb1, &quo, false).all_passed());
    let x = generator("HB1", "X");
    let xy = hb1.mul(&x, &y);
    let (h8, _) = hb1.quotient_by_central_grouplike(&xy).unwrap();
    assert!(!h8.is_commutative() && !h8.is_cocommutative());
    // t̄ is not central
    let t = generator("HB1", "t");
    assert!(hb1.quotient_by_central_grouplike(&t).is_err());
}

#[test]
fn identity_morphism_verifies() {
    let h = catalog::build("Ha1").unwrap();
    assert!(HopfMorphism::identity(16).verify(&h, &h, true).all_passed());
}

#[test]
fn dual_group_algebra_idempotents_and_coproduct() {
    let g = groups::c4xc2();
    let h = dual_group_algebra(&g);
    let n = h.dim();
    let sum = (0..n).fold(vec![CycNum::zero(); n], |acc, i| vec_add(&acc, &h.basis_vec(i)));
    assert_eq!(sum, h.one());
    for i in 0..n {
        let e = h.basis_vec(i);
        assert_eq!(h.mul(&e, &e), e);
        // Δ(e_g) = Σ_{ab = g} e_a ⊗ e_b
        let d = h.coproduct(&e);
        for a in 0..n {
            for b in 0..n {
                let expect = if g.mul(a, b) == i { c(1) } else { c(0) };
                assert_eq!(d[a * n + b], expect);
            }
        }
    }
}

#[test]
fn catalog_parameters() {
    let data = catalog::data("Hc1").unwrap();
    let h = data.build().unwrap();
    let x = generator("Hc1", "x");
    let x2 = h.mul(&x, &x);
    let half_plus = &q(1, 2) + &(&q(1, 2) * &CycNum::i());
    let half_minus = &q(1, 2) - &(&q(1, 2) * &CycNum::i());
    let expect = vec_add(&vec_scale(&h.one(), &half_plus), &vec_scale(&x2, &half_minus));
    let t = data.tbar();
    assert_eq!(h.mul(&t, &t), expect);

    let hc1s = catalog::data("HC1s").unwrap();
    for g in 0..8 {
        assert_eq!(hc1s.sigma[g], CycNum::omega().pow(xy_pq(g).1).unwrap());
    }
    // ξ = ω⁻² appears as θ(e_{0,1}, e_{1,0})
    let (a, b) = (groups::xy_index(0, 1), groups::xy_index(1, 0));
    assert_eq!(hc1s.theta[a][b], CycNum::omega().pow(-2).unwrap());

    // H_{B:X}: σ(t,t) = X and ξ = i
    let hbx = catalog::data("HBX").unwrap();
    let h = hbx.build().unwrap();
    let t = hbx.tbar();
    assert_eq!(h.mul(&t, &t), generator("HBX", "X"));
    assert_eq!(hbx.theta[a][b], CycNum::i());

    // H_E: trivial cocycle and ξ = 1
    let he = catalog::data("HE").unwrap();
    assert!(he.sigma.iter().all(CycNum::is_one));
    assert!(he.theta.iter().flatten().all(CycNum::is_one));

    // H_{d:1,-1}: σ(t,t) = z
    let hd = catalog::data("Hd+-").unwrap();
    let h = hd.build().unwrap();
    let t = hd.tbar();
    assert_eq!(h.mul(&t, &t), generator("Hd+-", "z"));
    assert_eq!(catalog::family("Hd+-").unwrap(), Family::C2Cubed);
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(catalog::build("Hzz"), Err(ConstructionError::UnknownName(_))));
}

#[test]
fn json_roundtrip_of_catalog_entry() {
    let h = catalog::build("HE").unwrap();
    let back = HopfAlgebra::from_json_str(&h.to_json_string()).unwrap();
    assert_eq!(back, h);
    assert!(!is_zero_vec(back.counit()));
}
