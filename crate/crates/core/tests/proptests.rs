use std::sync::OnceLock;

use proptest::prelude::*;

use hopf16_core::classify::{profile_entry, profile_generic, InvariantProfile};
use hopf16_core::constructors::catalog::{self, NAMES};
use hopf16_core::cyclo::{c, CycNum};
use hopf16_core::fusion::FusionRing;
use hopf16_core::hopf::HopfAlgebra;
use hopf16_core::linalg::Matrix;

fn catalog_algebras() -> &'static Vec<HopfAlgebra> {
    static CELL: OnceLock<Vec<HopfAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| NAMES.iter().map(|n| catalog::build(n).unwrap()).collect())
}

fn curated_profiles() -> &'static Vec<(InvariantProfile, FusionRing)> {
    static CELL: OnceLock<Vec<(InvariantProfile, FusionRing)>> = OnceLock::new();
    CELL.get_or_init(|| {
        NAMES
            .iter()
            .map(|n| {
                let d = profile_entry(n).unwrap();
                (d.profile, d.fusion.ring)
            })
            .collect()
    })
}

fn relabel(h: &HopfAlgebra, p: &Matrix) -> HopfAlgebra {
    let labels = (0..h.dim()).map(|i| format!("v{i}")).collect();
    h.change_basis(p, labels).unwrap()
}

fn permutation_matrix(perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut p = Matrix::zeros(n, n);
    for (j, &i) in perm.iter().enumerate() {
        p.set(i, j, c(1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn duality_is_involutive_and_swaps_commutativity(idx in 0usize..16) {
        let h = &catalog_algebras()[idx];
        let d = h.dual_hopf();
        prop_assert_eq!(h.is_commutative(), d.is_cocommutative());
        prop_assert_eq!(h.is_cocommutative(), d.is_commutative());
        prop_assert_eq!(&d.dual_hopf(), h);
    }

    #[test]
    fn grouplikes_are_closed_under_products(idx in 0usize..16, a in 0usize..8, b in 0usize..8) {
        let data = catalog::data(NAMES[idx]).unwrap();
        let h = &catalog_algebras()[idx];
        let g = data.grouplikes();
        prop_assume!(g.len() > a.max(b));
        let p = h.mul(&g[a], &g[b]);
        prop_assert!(h.is_grouplike(&p));
        prop_assert!(g.contains(&p));
        prop_assert!(h.is_grouplike(&h.antipode_of(&g[a])));
    }

    #[test]
    fn fusion_rings_satisfy_frobenius_reciprocity(idx in 0usize..16, x in 0usize..10, y in 0usize..10, z in 0usize..10) {
        let ring = &curated_profiles()[idx].1;
        let n = ring.rank();
        let (x, y, z) = (x % n, y % n, z % n);
        let inv = &ring.involution;
        prop_assert_eq!(ring.m(z, x, y), ring.m(inv[x], y, inv[z]));
        let deg: u32 = (0..n).map(|w| ring.m(w, x, y) * ring.degrees[w] as u32).sum();
        prop_assert_eq!(deg, (ring.degrees[x] * ring.degrees[y]) as u32);
        prop_assert_eq!(ring.m(ring.unit, x, inv[y]), u32::from(x == y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn profile_is_invariant_under_basis_permutation(idx in 0usize..16, perm in Just((0..16).collect::<Vec<usize>>()).prop_shuffle()) {
        let h = relabel(&catalog_algebras()[idx], &permutation_matrix(&perm));
        prop_assert!(h.verify_axioms().all_passed());
        let generic = profile_generic(&h).unwrap();
        prop_assert_eq!(&generic.profile, &curated_profiles()[idx].0);
    }

    #[test]
    fn axioms_survive_unitriangular_basis_change(idx in 0usize..16, entries in proptest::collection::vec(-2i64..=2, 15)) {
        let h0 = &catalog_algebras()[idx];
        let mut p = Matrix::identity(16);
        for (j, e) in entries.iter().enumerate() {
            p.set(j, j + 1, CycNum::from_int(*e));
        }
        let h = relabel(h0, &p);
        prop_assert!(h.verify_axioms().all_passed());
        prop_assert_eq!(h.is_commutative(), h0.is_commutative());
        prop_assert!(h.trace_form_certificate());
    }
}
