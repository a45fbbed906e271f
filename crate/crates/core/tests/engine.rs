use qkcheck::exterior::{binomial, Endomorphism, FormBasis, KForm};
use qkcheck::gstructure::conditions::{c2_intersection_dim, rank_one_decompose};
use qkcheck::gstructure::engine::a_map_matrix;
use qkcheck::gstructure::symbol::symbol_map;
use qkcheck::gstructure::{so_algebra, GStructure, StructureForm};
use qkcheck::linalg::dense::rank_naive;
use qkcheck::linalg::Matrix;
use qkcheck::quaternionic::{basis_covector, build_phi, structure_constants};

fn qk(n: usize) -> GStructure {
    GStructure::new(StructureForm::single(build_phi(n).unwrap()).unwrap()).unwrap()
}

fn assert_rank_nullity(name: &str, m: &Matrix) {
    let ker = m.kernel();
    assert_eq!(m.rank() + ker.dim(), m.ncols(), "rank-nullity for {name}");
    for v in ker.basis_vectors() {
        assert!(m.mul_sparse_vec(v).unwrap().is_empty(), "kernel vector of {name} not annihilated");
    }
}

#[test]
fn rank_nullity_on_engine_matrices() {
    for n in 1..=2 {
        let gs = qk(n);
        assert_rank_nullity("derivation", &gs.form().derivation_matrix());
        for k in 0..=2 {
            assert_rank_nullity(&format!("A^{k}"), gs.ak(k).unwrap());
        }
        assert_rank_nullity("a-map", &a_map_matrix(4 * n));
        let u = basis_covector(4 * n, 1);
        for k in 0..=1 {
            assert_rank_nullity(&format!("Sb_{k}"), &symbol_map(&gs, &u, k).unwrap().matrix);
        }
    }
}

#[test]
fn sparse_rank_agrees_with_naive_dense_rank() {
    let gs = qk(1);
    for k in 0..=1 {
        let m = gs.ak(k).unwrap();
        assert_eq!(m.rank(), rank_naive(m), "A^{k}");
    }
    let d = gs.form().derivation_matrix();
    assert_eq!(d.rank(), rank_naive(&d));
}

#[test]
fn isotropy_dimension_at_n2() {
    // 2n² + n + 3 with n = 2
    assert_eq!(qk(2).algebra().dim(), 13);
}

#[test]
fn a_map_is_bijective_on_so() {
    // V*⊗so(N) and Λ²⊗V both have dimension N²(N-1)/2
    for big_n in [4, 5, 6, 8] {
        assert_eq!(a_map_matrix(big_n).rank(), big_n * big_n * (big_n - 1) / 2);
        assert_eq!(so_algebra(big_n).dim(), binomial(big_n, 2));
    }
}

#[test]
fn hodge_scale_oracle() {
    // α∧*β = ⟨α,β⟩vol with α = Φ, β = *Φ^{n-1} gives ⟨Φ, *Φ^{n-1}⟩ = c_n.
    for n in 2..=3 {
        let phi = build_phi(n).unwrap();
        let c = structure_constants(n).unwrap();
        let star = phi.power(n - 1).unwrap().hodge();
        assert_eq!(phi.inner(&star).unwrap(), c.c_n);
        assert_eq!(phi.power(n).unwrap(), KForm::volume(4 * n).scale(&c.c_n));
        assert_eq!(star, phi.scale(&(&c.c_n / &c.phi_norm2)));
    }
}

#[test]
fn c2_fails_for_so_as_a_negative_control() {
    let so = so_algebra(8);
    // so(N) meets the slice in the N - 1 rotations e_1∧e_j
    assert_eq!(c2_intersection_dim(&so, 0).unwrap(), 7);
    assert_eq!(c2_intersection_dim(qk(2).algebra(), 0).unwrap(), 0);
}

#[test]
fn rank_one_decompose_rejects_inputs_outside_g2() {
    let gs = qk(2);
    let u = basis_covector(8, 0);
    // a - u⊗w has a lone entry at (1, 2), so it is never skew, let alone in g
    let a = Endomorphism::elementary(8, 1, 2);
    assert!(rank_one_decompose(&gs, &a, &u).is_err());
}

#[test]
fn structure_form_json_round_trip() {
    let phi = build_phi(2).unwrap();
    let text = qkcheck::exterior::json::form_to_json(&phi);
    assert_eq!(qkcheck::exterior::json::form_from_json(&text).unwrap(), phi);
    let basis = FormBasis::new(8, 4);
    let coords = phi.coordinates_in(&basis);
    assert_eq!(KForm::from_coordinates(&basis, &coords).unwrap(), phi);
    assert_eq!(phi.norm2(), structure_constants(2).unwrap().phi_norm2);
}

#[test]
fn generic_engine_on_g2_and_spin7() {
    use qkcheck::gstructure::presets::{g2_form, spin7_form};
    use qkcheck::gstructure::symbol::exactness_at_1;
    for (form, dim, g_dim) in [(g2_form().unwrap(), 7, 14), (spin7_form().unwrap(), 8, 21)] {
        let gs = GStructure::new(StructureForm::single(form).unwrap()).unwrap();
        assert_eq!(gs.algebra().dim(), g_dim);
        for k in 0..=1 {
            assert!(gs.abar_iso_check(k).unwrap().passed(), "Ā^{k} on the dim-{dim} preset");
        }
        // a-map injectivity still fixes dim g² = N·dim g at k = 2
        assert_eq!(gs.gk(2).unwrap().dim(), dim * g_dim);
        assert_eq!(gs.ak_rank(1).unwrap(), dim * dim - g_dim);
        for v in 0..3 {
            assert_eq!(c2_intersection_dim(gs.algebra(), v).unwrap(), 0);
        }
        assert!(exactness_at_1(&gs, &basis_covector(dim, 0)).unwrap().passed());
    }
}
