#include "efa/keys.hpp"

#include <algorithm>

namespace efa {

IndexBasis::IndexBasis(int n, int m, Matrix ia, Matrix ib)
    : dim_a(n), dim_b(m), inv_a(std::move(ia)), inv_b(std::move(ib)) {
    validate();
}

void IndexBasis::validate() const {
    if (dim_a <= 0) throw index_error("dim_a must be positive");
    if (dim_b < 0) throw index_error("dim_b must be nonnegative");
    if (inv_a.rows() != dim_a || inv_a.cols() != dim_a)
        throw index_error("involution_a has wrong shape");
    if (inv_b.rows() != dim_b || inv_b.cols() != dim_b)
        throw index_error("involution_b has wrong shape");
    if (!inv_a.is_involution()) throw index_error("involution_a is not involutive");
    if (dim_b > 0 && !inv_b.is_involution()) throw index_error("involution_b is not involutive");
}

Word least_rotation(const Word& w) {
    size_t n = w.size();
    if (n <= 1) return w;
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < n; ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

CorrelatorKey canonical_key(Word interior, Word boundary) {
    std::sort(interior.begin(), interior.end());
    return CorrelatorKey{std::move(interior), least_rotation(boundary)};
}

CorrelatorKey canonical_key_checked(Word interior, Word boundary, int dim_a, int dim_b) {
    for (int i : interior)
        if (i < 0 || i >= dim_a) throw index_error("interior index out of range");
    for (int j : boundary)
        if (j < 0 || j >= dim_b) throw index_error("boundary index out of range");
    return canonical_key(std::move(interior), std::move(boundary));
}

std::string CorrelatorKey::str() const {
    std::string s = "(";
    for (size_t i = 0; i < interior.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(interior[i] + 1);
    }
    s += interior.empty() ? "|" : " |";
    for (size_t i = 0; i < boundary.size(); ++i) {
        s += ' ';
        s += std::to_string(boundary[i] + 1);
    }
    s += ")";
    return s;
}

bool stable_shape(int k, int l) {
    if (l == 0) return k >= 3;
    return 2 * k + l > 2;
}

bool admissible_shape(int k, int l) {
    return stable_shape(k, l) || (k == 2 && l == 0) || (k == 0 && l == 2);
}

} // namespace efa
