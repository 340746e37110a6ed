#pragma once

#include "efa/matrix.hpp"

#include <compare>
#include <string>
#include <vector>

namespace efa {

using Word = std::vector<int>; // basis indices, 0-based internally

struct index_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bases of A and B with the involution matrices x -> x*. Columns hold the
// images of basis vectors: (e_j)* = sum_i inv[i][j] e_i.
struct IndexBasis {
    int dim_a = 0;
    int dim_b = 0;
    Matrix inv_a; // dim_a x dim_a
    Matrix inv_b; // dim_b x dim_b

    IndexBasis() = default;
    IndexBasis(int n, int m)
        : dim_a(n), dim_b(m), inv_a(Matrix::identity(n)), inv_b(Matrix::identity(m)) {}
    IndexBasis(int n, int m, Matrix ia, Matrix ib);

    void validate() const; // involutivity, shapes

    friend bool operator==(const IndexBasis&, const IndexBasis&) = default;
};

// Returns the lexicographically least rotation of w.
Word least_rotation(const Word& w);

// Correlator key: interior index multiset (sorted) and boundary necklace
// (stored as its least rotation).
struct CorrelatorKey {
    Word interior;
    Word boundary;

    int k() const { return int(interior.size()); }
    int l() const { return int(boundary.size()); }
    int degree() const { return k() + l(); }

    auto operator<=>(const CorrelatorKey&) const = default;

    std::string str() const; // "(i1 i2 | j1 j2)" with 1-based indices
};

CorrelatorKey canonical_key(Word interior, Word boundary);
CorrelatorKey canonical_key_checked(Word interior, Word boundary, int dim_a, int dim_b);

// Stability of the underlying marked surface: spheres need k >= 3 and disks
// 2k + l > 2; the two bilinear forms (2,0) and (0,2) are kept alongside.
bool stable_shape(int k, int l);
bool admissible_shape(int k, int l); // stable or one of the two forms

} // namespace efa
