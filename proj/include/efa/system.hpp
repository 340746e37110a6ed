#pragma once

#include "efa/keys.hpp"

#include <map>
#include <optional>

namespace efa {

struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coordinate vector in the A- or B-basis.
using Vec = std::vector<Scalar>;

// Gram data of the two 2-point forms, with exact inverses when they exist.
struct GramData {
    Matrix form_a, form_b;
    std::optional<Matrix> inv_form_a, inv_form_b;
    bool nondegenerate() const {
        return inv_form_a.has_value() && (form_b.rows() == 0 || inv_form_b.has_value());
    }
};

// Finite table of correlators on canonical keys, with evaluation caps.
// Keys absent from the table (but within caps) evaluate to 0; keys outside
// the caps are errors. Unstable shapes other than the two bilinear forms
// evaluate to 0 inside axiom sums.
class CorrelationSystem {
  public:
    CorrelationSystem(IndexBasis basis, int max_interior, int max_boundary,
                      std::map<CorrelatorKey, Scalar> table, bool extended = false,
                      int max_degree = -1);

    const IndexBasis& basis() const { return basis_; }
    int dim_a() const { return basis_.dim_a; }
    int dim_b() const { return basis_.dim_b; }
    int max_interior() const { return max_interior_; }
    int max_boundary() const { return max_boundary_; }
    int max_degree() const { return max_degree_; }
    bool extended() const { return extended_; }
    const std::map<CorrelatorKey, Scalar>& table() const { return table_; }

    bool fits(int k, int l) const {
        return k <= max_interior_ && l <= max_boundary_ && k + l <= max_degree_;
    }

    // Basis-key correlator. Throws cap_error beyond the caps.
    Scalar value(const Word& interior, const Word& boundary) const;
    Scalar value(const CorrelatorKey& key) const;

    // Multilinear extension over coordinate vectors.
    Scalar evaluate(const std::vector<Vec>& xs, const std::vector<Vec>& ys) const;

    // The two 2-point forms and their exact inverses (computed once).
    const GramData& grams() const { return grams_; }

    CorrelationSystem change_basis(const Matrix& p_a, const Matrix& p_b) const;

    // Formal expansion of the starred, boundary-reversed key through the
    // involution matrices: value-preserving under Axiom 2.
    std::vector<std::pair<CorrelatorKey, Scalar>> star_key(const CorrelatorKey& key) const;

    // All canonical keys within the caps, in lexicographic order.
    std::vector<CorrelatorKey> enumerate_keys() const;

  private:
    IndexBasis basis_;
    int max_interior_, max_boundary_, max_degree_;
    bool extended_;
    std::map<CorrelatorKey, Scalar> table_;
    GramData grams_;
};

} // namespace efa
