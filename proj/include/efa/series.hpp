#pragma once

#include "efa/keys.hpp"
#include "efa/scalar.hpp"

#include <map>

namespace efa {

// Free tensor monomial: an ordered alpha-word and an ordered beta-word.
// Multiplication concatenates the alpha-words and the beta-words separately.
struct TensorMonomial {
    Word alpha_word;
    Word beta_word;

    int degree() const { return int(alpha_word.size() + beta_word.size()); }
    auto operator<=>(const TensorMonomial&) const = default;
    std::string str() const;
};

// Truncated noncommutative tensor series. Coefficients beyond exact_degree
// are not trustworthy and are never compared; no stored monomial exceeds
// truncation_degree.
class TensorSeries {
  public:
    TensorSeries(int dim_a, int dim_b, int truncation_degree, int exact_degree = -1)
        : dim_a_(dim_a), dim_b_(dim_b), trunc_(truncation_degree),
          exact_(exact_degree < 0 ? truncation_degree : exact_degree) {
        if (exact_ > trunc_) throw std::invalid_argument("exact_degree exceeds truncation");
        if (exact_ < -1) exact_ = -1;
    }

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int truncation_degree() const { return trunc_; }
    int exact_degree() const { return exact_; }

    const std::map<TensorMonomial, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(const TensorMonomial& m) const;

    void add(TensorMonomial m, const Scalar& v);
    void set(TensorMonomial m, const Scalar& v);

    bool same_basis(const TensorSeries& o) const {
        return dim_a_ == o.dim_a_ && dim_b_ == o.dim_b_;
    }

    // Coefficients invariant under alpha permutations and beta rotations
    // (Structure Series Axiom 1).
    bool is_symmetric(std::string* first_violation = nullptr) const;

    bool is_polynomial() const { return exact_ >= trunc_; }

  private:
    int dim_a_, dim_b_, trunc_, exact_;
    std::map<TensorMonomial, Scalar> coeffs_;
};

// Equivalence-class projection: (alpha multiset, beta multiset) -> summed
// coefficient, keeping classes within the exactness range.
using ClassKey = std::pair<Word, Word>;
using ClassSeries = std::map<ClassKey, Scalar>;

TensorSeries multiply(const TensorSeries& f, const TensorSeries& g);
TensorSeries add(const TensorSeries& f, const TensorSeries& g);
TensorSeries scale(const TensorSeries& f, const Scalar& c);

TensorSeries d_alpha(const TensorSeries& f, int i);
TensorSeries d_beta(const TensorSeries& f, int j);
// Cyclic triple derivative: sums over presentations of the beta-word, up to
// rotation, as (b_i w1 b_j w2 b_r w3), contributing (w1 w2 w3).
TensorSeries d3_beta(const TensorSeries& f, int i, int j, int r);
TensorSeries d3_alpha(const TensorSeries& f, int i, int j, int r);
TensorSeries d2_alpha_beta(const TensorSeries& f, int i, int j);

TensorSeries restrict_closed(const TensorSeries& f);
TensorSeries star_series(const TensorSeries& f, const IndexBasis& basis);

ClassSeries project_classes(const TensorSeries& f);

// Class-projected comparison up to the common exact degree of both sides;
// returns the differing classes with their two values.
std::vector<std::tuple<ClassKey, Scalar, Scalar>> class_mismatches(const TensorSeries& lhs,
                                                                   const TensorSeries& rhs);

std::string class_key_str(const ClassKey& key);

} // namespace efa
