mod common;

use common::{check_all_monomial_pairs, check_random_forms_dim12, random_form};
use proptest::prelude::*;
use qkcheck::exterior::KForm;
use qkcheck::linalg::scalar::q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn identities_hold_on_all_monomial_pairs_up_to_dim_6() {
    check_all_monomial_pairs(6);
}

#[test]
fn identities_hold_on_seeded_random_forms_in_dim_12() {
    check_random_forms_dim12(12);
}

#[test]
fn wedge_matches_top_degree_determinant() {
    // e¹∧…∧e^N of a change of basis picks up det.
    let rows = [[2, 1, 0], [0, 1, 3], [1, 0, 1]];
    // cofactor expansion along the first row: 2·1 - 1·(0 - 3)
    let det = 5;
    let covs: Vec<KForm> =
        rows.iter().map(|r| KForm::covector(&r.iter().map(|&x| q(x)).collect::<Vec<_>>())).collect();
    let top = covs[0].wedge(&covs[1]).unwrap().wedge(&covs[2]).unwrap();
    assert_eq!(top, KForm::volume(3).scale(&q(det)));
}

proptest! {
    #[test]
    fn wedge_is_associative(seed in any::<u64>(), p in 0usize..4, r in 0usize..3, s in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, 8, p, 4);
        let b = random_form(&mut rng, 8, r, 4);
        let c = random_form(&mut rng, 8, s, 4);
        prop_assert_eq!(a.wedge(&b).unwrap().wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), p in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, 10, p, 5);
        let text = qkcheck::exterior::json::form_to_json(&a);
        prop_assert_eq!(qkcheck::exterior::json::form_from_json(&text).unwrap(), a);
    }
}
