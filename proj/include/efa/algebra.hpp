#pragma once

#include "efa/report.hpp"
#include "efa/structure.hpp"
#include "efa/system.hpp"

#include <optional>

namespace efa {

// H = A + B with structure constants over the concatenated basis
// (alpha_1..alpha_n, beta_1..beta_m). mult[i][j] is the coordinate vector of
// e_i * e_j; form is the full invariant pairing; inv the involution on H.
struct ExtendedFrobeniusAlgebra {
    int dim_a = 0;
    int dim_b = 0;
    std::vector<std::vector<Vec>> mult;
    Matrix form;
    Matrix inv;

    int dim() const { return dim_a + dim_b; }
    Vec basis_vec(int i) const;
    Vec mul(const Vec& u, const Vec& v) const;
    Scalar pair(const Vec& u, const Vec& v) const;

    // block-diagonal involution parts; throws when inv mixes A and B
    IndexBasis index_basis() const;

    void validate_shape() const;
};

// Structure tensors of an algebra (or of a series at a point).
struct StructureTensors {
    int dim_a = 0;
    int dim_b = 0;
    Matrix form_a, form_b; // F
    Matrix i_a, i_b;       // I_{xy} = (x*, y)
    Matrix r_ab;           // R_{alpha beta} = (alpha, beta)
    std::vector<Scalar> s;     // S_{ijk}, n^3
    std::vector<Scalar> t;     // T_{ijk}, m^3
    std::vector<Scalar> r_abb; // R_{alpha beta beta}, n*m^2

    Scalar& S(int i, int j, int k) { return s[(size_t(i) * dim_a + j) * dim_a + k]; }
    const Scalar& S(int i, int j, int k) const {
        return s[(size_t(i) * dim_a + j) * dim_a + k];
    }
    Scalar& T(int i, int j, int k) { return t[(size_t(i) * dim_b + j) * dim_b + k]; }
    const Scalar& T(int i, int j, int k) const {
        return t[(size_t(i) * dim_b + j) * dim_b + k];
    }
    Scalar& R3(int i, int j, int k) { return r_abb[(size_t(i) * dim_b + j) * dim_b + k]; }
    const Scalar& R3(int i, int j, int k) const {
        return r_abb[(size_t(i) * dim_b + j) * dim_b + k];
    }

    friend bool operator==(const StructureTensors&, const StructureTensors&) = default;
};

// Verifies the defining axioms on all basis tuples; witnesses carry the
// offending tuple in `detail`.
CheckReport check_efa(const ExtendedFrobeniusAlgebra& alg, int witness_cap = 5);

StructureTensors structure_tensors(const ExtendedFrobeniusAlgebra& alg);

// The nine tensor conditions equivalent to the defining axioms, verified by
// exact contraction; indices are raised with the inverse forms, always on
// the last slot.
CheckReport check_conditions_1_9(const StructureTensors& t, int witness_cap = 5);

// The unique two-sided unit, or nullopt when the algebra is non-unital.
std::optional<Vec> unit_of(const ExtendedFrobeniusAlgebra& alg);

// Correlators <x_1..x_k, y_1..y_l> = (x_1...x_k y_1...y_l, 1) on all
// admissible keys within the caps.
CorrelationSystem correlators_from_algebra(const ExtendedFrobeniusAlgebra& alg, int max_interior,
                                           int max_boundary, bool extended = false,
                                           int max_degree = -1);

// Tensor Casimir element of a nondegenerate form with respect to the starred
// pairing (x, y*): returns the coefficient matrix K[i][j] of sum K_ij e_i x e_j.
Matrix casimir(const Matrix& form, const Matrix& inv);

// Rebuilds the algebra from its tensors by raising the last index; refuses
// tensors that fail the nine conditions.
ExtendedFrobeniusAlgebra tensors_to_algebra(const StructureTensors& t);

// Hat tensors of a polynomial series at a point, normalized so that at the
// origin they reproduce the degree-2/3 coefficients.
StructureTensors eval_series_at_point(const StructureSeries& f, const Vec& point_a,
                                      const Vec& point_b);

} // namespace efa
