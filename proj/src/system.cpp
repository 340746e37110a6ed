#include "efa/system.hpp"

#include <algorithm>
#include <functional>

namespace efa {

CorrelationSystem::CorrelationSystem(IndexBasis basis, int max_interior, int max_boundary,
                                     std::map<CorrelatorKey, Scalar> table, bool extended,
                                     int max_degree)
    : basis_(std::move(basis)), max_interior_(max_interior), max_boundary_(max_boundary),
      max_degree_(max_degree < 0 ? max_interior + max_boundary : max_degree),
      extended_(extended), table_(std::move(table)) {
    basis_.validate();
    if (max_interior_ < 2) throw cap_error("max_interior must be at least 2");
    if (dim_b() > 0 && max_boundary_ < 2)
        throw cap_error("max_boundary must be at least 2 when dim_b > 0");
    for (auto it = table_.begin(); it != table_.end();) {
        const CorrelatorKey& key = it->first;
        CorrelatorKey canon =
            canonical_key_checked(key.interior, key.boundary, dim_a(), dim_b());
        if (canon != key) throw index_error("table key " + key.str() + " is not canonical");
        if (!fits(key.k(), key.l()))
            throw cap_error("table key " + key.str() + " exceeds the caps");
        if (!admissible_shape(key.k(), key.l()))
            throw cap_error("table key " + key.str() + " has an unstable shape");
        if (it->second.is_zero() && !(key.degree() == 2 && key.k() != 1))
            it = table_.erase(it); // absent means zero; keep explicit form zeros
        else
            ++it;
    }
    // ensure the two forms are represented even when all-zero rows were given
    for (int i = 0; i < dim_a(); ++i)
        for (int j = i; j < dim_a(); ++j)
            table_.try_emplace(canonical_key({i, j}, {}), Scalar(0));
    for (int i = 0; i < dim_b(); ++i)
        for (int j = i; j < dim_b(); ++j)
            table_.try_emplace(canonical_key({}, {i, j}), Scalar(0));

    GramData g;
    g.form_a = Matrix(dim_a(), dim_a());
    g.form_b = Matrix(dim_b(), dim_b());
    for (int i = 0; i < dim_a(); ++i)
        for (int j = 0; j < dim_a(); ++j) g.form_a.at(i, j) = value(Word{i, j}, {});
    for (int i = 0; i < dim_b(); ++i)
        for (int j = 0; j < dim_b(); ++j) g.form_b.at(i, j) = value({}, Word{i, j});
    g.inv_form_a = g.form_a.inverse();
    g.inv_form_b = g.form_b.inverse();
    grams_ = std::move(g);
}

Scalar CorrelationSystem::value(const Word& interior, const Word& boundary) const {
    return value(canonical_key_checked(interior, boundary, dim_a(), dim_b()));
}

Scalar CorrelationSystem::value(const CorrelatorKey& key) const {
    if (!fits(key.k(), key.l()))
        throw cap_error("correlator key " + key.str() + " is beyond the caps");
    if (!admissible_shape(key.k(), key.l())) return Scalar(0);
    auto it = table_.find(key);
    return it == table_.end() ? Scalar(0) : it->second;
}

Scalar CorrelationSystem::evaluate(const std::vector<Vec>& xs, const std::vector<Vec>& ys) const {
    int k = int(xs.size()), l = int(ys.size());
    if (!fits(k, l)) throw cap_error("argument count beyond the caps");
    for (const Vec& x : xs)
        if (int(x.size()) != dim_a()) throw index_error("A-vector has wrong dimension");
    for (const Vec& y : ys)
        if (int(y.size()) != dim_b()) throw index_error("B-vector has wrong dimension");

    Scalar total(0);
    Word ia(k), jb(l);
    std::function<void(int, Scalar)> rec_b = [&](int pos, Scalar coeff) {
        if (pos == l) {
            total += coeff * value(ia, jb);
            return;
        }
        for (int j = 0; j < dim_b(); ++j) {
            const Scalar& c = ys[pos][j];
            if (c.is_zero()) continue;
            jb[pos] = j;
            rec_b(pos + 1, coeff * c);
        }
    };
    std::function<void(int, Scalar)> rec_a = [&](int pos, Scalar coeff) {
        if (pos == k) {
            rec_b(0, coeff);
            return;
        }
        for (int i = 0; i < dim_a(); ++i) {
            const Scalar& c = xs[pos][i];
            if (c.is_zero()) continue;
            ia[pos] = i;
            rec_a(pos + 1, coeff * c);
        }
    };
    rec_a(0, Scalar(1));
    return total;
}

CorrelationSystem CorrelationSystem::change_basis(const Matrix& p_a, const Matrix& p_b) const {
    if (p_a.rows() != dim_a() || p_a.cols() != dim_a() || p_b.rows() != dim_b() ||
        p_b.cols() != dim_b())
        throw index_error("basis change has wrong shape");
    auto pa_inv = p_a.inverse();
    auto pb_inv = p_b.inverse();
    if (!pa_inv || (dim_b() > 0 && !pb_inv)) throw index_error("basis change is singular");

    // new basis vectors expressed in the old one: e'_j = sum_i P[i][j] e_i
    std::map<CorrelatorKey, Scalar> table;
    for (const CorrelatorKey& key : enumerate_keys()) {
        std::vector<Vec> xs, ys;
        for (int i : key.interior) {
            Vec v(dim_a());
            for (int r = 0; r < dim_a(); ++r) v[r] = p_a.at(r, i);
            xs.push_back(std::move(v));
        }
        for (int j : key.boundary) {
            Vec v(dim_b());
            for (int r = 0; r < dim_b(); ++r) v[r] = p_b.at(r, j);
            ys.push_back(std::move(v));
        }
        Scalar v = evaluate(xs, ys);
        if (!v.is_zero()) table.emplace(key, std::move(v));
    }
    Matrix inv_a2 = *pa_inv * basis_.inv_a * p_a;
    Matrix inv_b2 = dim_b() > 0 ? *pb_inv * basis_.inv_b * p_b : Matrix(0, 0);
    return CorrelationSystem(IndexBasis(dim_a(), dim_b(), inv_a2, inv_b2), max_interior_,
                             max_boundary_, std::move(table), extended_, max_degree_);
}

std::vector<std::pair<CorrelatorKey, Scalar>>
CorrelationSystem::star_key(const CorrelatorKey& key) const {
    Word rev(key.boundary.rbegin(), key.boundary.rend());
    std::vector<std::pair<CorrelatorKey, Scalar>> out;
    Word ia(key.interior.size()), jb(rev.size());
    std::function<void(size_t, Scalar)> rec_b = [&](size_t pos, Scalar coeff) {
        if (pos == rev.size()) {
            out.emplace_back(canonical_key(ia, jb), coeff);
            return;
        }
        for (int r = 0; r < dim_b(); ++r) {
            const Scalar& c = basis_.inv_b.at(r, rev[pos]);
            if (c.is_zero()) continue;
            jb[pos] = r;
            rec_b(pos + 1, coeff * c);
        }
    };
    std::function<void(size_t, Scalar)> rec_a = [&](size_t pos, Scalar coeff) {
        if (pos == key.interior.size()) {
            rec_b(0, coeff);
            return;
        }
        for (int r = 0; r < dim_a(); ++r) {
            const Scalar& c = basis_.inv_a.at(r, key.interior[pos]);
            if (c.is_zero()) continue;
            ia[pos] = r;
            rec_a(pos + 1, coeff * c);
        }
    };
    rec_a(0, Scalar(1));

    // merge duplicate canonical keys
    std::map<CorrelatorKey, Scalar> merged;
    for (auto& [k, c] : out) merged[k] += c;
    out.assign(merged.begin(), merged.end());
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& kv) { return kv.second.is_zero(); }),
              out.end());
    return out;
}

std::vector<CorrelatorKey> CorrelationSystem::enumerate_keys() const {
    std::vector<CorrelatorKey> keys;
    std::vector<Word> interiors;
    Word cur;
    std::function<void(int, int)> rec_int = [&](int start, int left) {
        interiors.push_back(cur);
        if (left == 0) return;
        for (int i = start; i < dim_a(); ++i) {
            cur.push_back(i);
            rec_int(i, left - 1);
            cur.pop_back();
        }
    };
    rec_int(0, max_interior_);

    for (const Word& interior : interiors) {
        int k = int(interior.size());
        if (k > max_degree_) continue;
        int lmax = std::min(max_boundary_, max_degree_ - k);
        // boundary necklaces of each length: enumerate words, keep canonical ones
        Word w;
        std::function<void(int)> rec_b = [&](int left) {
            if (least_rotation(w) == w && admissible_shape(k, int(w.size())))
                keys.push_back(CorrelatorKey{interior, w});
            if (left == 0) return;
            for (int j = 0; j < dim_b(); ++j) {
                w.push_back(j);
                rec_b(left - 1);
                w.pop_back();
            }
        };
        rec_b(lmax);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

} // namespace efa
