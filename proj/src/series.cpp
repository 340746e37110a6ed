#include "efa/series.hpp"

#include <algorithm>
#include <functional>

namespace efa {

std::string TensorMonomial::str() const {
    std::string s = "(";
    for (size_t i = 0; i < alpha_word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(alpha_word[i] + 1);
    }
    s += alpha_word.empty() ? "|" : " |";
    for (size_t i = 0; i < beta_word.size(); ++i) {
        s += ' ';
        s += std::to_string(beta_word[i] + 1);
    }
    s += ")";
    return s;
}

Scalar TensorSeries::coeff(const TensorMonomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void TensorSeries::add(TensorMonomial m, const Scalar& v) {
    if (v.is_zero() || m.degree() > trunc_) return;
    auto [it, inserted] = coeffs_.try_emplace(std::move(m), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TensorSeries::set(TensorMonomial m, const Scalar& v) {
    if (m.degree() > trunc_) throw std::invalid_argument("monomial exceeds truncation degree");
    if (v.is_zero())
        coeffs_.erase(m);
    else
        coeffs_[std::move(m)] = v;
}

bool TensorSeries::is_symmetric(std::string* first_violation) const {
    for (const auto& [mono, v] : coeffs_) {
        TensorMonomial canon{mono.alpha_word, least_rotation(mono.beta_word)};
        std::sort(canon.alpha_word.begin(), canon.alpha_word.end());
        if (canon == mono) continue;
        if (coeff(canon) != v) {
            if (first_violation)
                *first_violation = mono.str() + " vs " + canon.str();
            return false;
        }
    }
    // also catch canonical monomials whose orbit members are missing
    for (const auto& [mono, v] : coeffs_) {
        Word rot = mono.beta_word;
        for (size_t r = 0; r < mono.beta_word.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (coeff(TensorMonomial{mono.alpha_word, rot}) != v) {
                if (first_violation)
                    *first_violation = mono.str() + " rotation mismatch";
                return false;
            }
        }
        Word perm = mono.alpha_word;
        std::sort(perm.begin(), perm.end());
        do {
            if (coeff(TensorMonomial{perm, mono.beta_word}) != v) {
                if (first_violation)
                    *first_violation = mono.str() + " permutation mismatch";
                return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

TensorSeries multiply(const TensorSeries& f, const TensorSeries& g) {
    if (!f.same_basis(g)) throw std::invalid_argument("series basis mismatch");
    int exact = std::min(f.exact_degree(), g.exact_degree());
    TensorSeries out(f.dim_a(), f.dim_b(), std::max(0, exact), exact);
    for (const auto& [m1, v1] : f.coeffs()) {
        if (m1.degree() > exact) continue;
        for (const auto& [m2, v2] : g.coeffs()) {
            if (m1.degree() + m2.degree() > exact) continue;
            TensorMonomial m;
            m.alpha_word.reserve(m1.alpha_word.size() + m2.alpha_word.size());
            m.alpha_word = m1.alpha_word;
            m.alpha_word.insert(m.alpha_word.end(), m2.alpha_word.begin(), m2.alpha_word.end());
            m.beta_word = m1.beta_word;
            m.beta_word.insert(m.beta_word.end(), m2.beta_word.begin(), m2.beta_word.end());
            out.add(std::move(m), v1 * v2);
        }
    }
    return out;
}

TensorSeries add(const TensorSeries& f, const TensorSeries& g) {
    if (!f.same_basis(g)) throw std::invalid_argument("series basis mismatch");
    int exact = std::min(f.exact_degree(), g.exact_degree());
    TensorSeries out(f.dim_a(), f.dim_b(), std::max(0, exact), exact);
    for (const auto& [m, v] : f.coeffs()) out.add(m, v);
    for (const auto& [m, v] : g.coeffs()) out.add(m, v);
    return out;
}

TensorSeries scale(const TensorSeries& f, const Scalar& c) {
    TensorSeries out(f.dim_a(), f.dim_b(), f.truncation_degree(), f.exact_degree());
    if (c.is_zero()) return out;
    for (const auto& [m, v] : f.coeffs()) out.add(m, v * c);
    return out;
}

TensorSeries d_alpha(const TensorSeries& f, int i) {
    TensorSeries out(f.dim_a(), f.dim_b(), std::max(0, f.truncation_degree() - 1),
                     f.exact_degree() - 1);
    for (const auto& [m, v] : f.coeffs()) {
        for (size_t pos = 0; pos < m.alpha_word.size(); ++pos) {
            if (m.alpha_word[pos] != i) continue;
            TensorMonomial res = m;
            res.alpha_word.erase(res.alpha_word.begin() + pos);
            out.add(std::move(res), v);
        }
    }
    return out;
}

TensorSeries d_beta(const TensorSeries& f, int j) {
    TensorSeries out(f.dim_a(), f.dim_b(), std::max(0, f.truncation_degree() - 1),
                     f.exact_degree() - 1);
    for (const auto& [m, v] : f.coeffs()) {
        for (size_t pos = 0; pos < m.beta_word.size(); ++pos) {
            if (m.beta_word[pos] != j) continue;
            TensorMonomial res = m;
            res.beta_word.erase(res.beta_word.begin() + pos);
            out.add(std::move(res), v);
        }
    }
    return out;
}

TensorSeries d3_beta(const TensorSeries& f, int i, int j, int r) {
    TensorSeries out(f.dim_a(), f.dim_b(), std::max(0, f.truncation_degree() - 3),
                     f.exact_degree() - 3);
    for (const auto& [m, v] : f.coeffs()) {
        const Word& w = m.beta_word;
        int l = int(w.size());
        if (l < 3) continue;
        // ordered triples of distinct positions in cyclic reading order
        for (int t1 = 0; t1 < l; ++t1) {
            if (w[t1] != i) continue;
            for (int a = 1; a < l; ++a) {
                if (w[(t1 + a) % l] != j) continue;
                for (int b = a + 1; b < l; ++b) {
                    if (w[(t1 + b) % l] != r) continue;
                    TensorMonomial res;
                    res.alpha_word = m.alpha_word;
                    res.beta_word.reserve(l - 3);
                    for (int d = 1; d < l; ++d) {
                        if (d == a || d == b) continue;
                        res.beta_word.push_back(w[(t1 + d) % l]);
                    }
                    out.add(std::move(res), v);
                }
            }
        }
    }
    return out;
}

TensorSeries d3_alpha(const TensorSeries& f, int i, int j, int r) {
    return d_alpha(d_alpha(d_alpha(f, r), j), i);
}

TensorSeries d2_alpha_beta(const TensorSeries& f, int i, int j) {
    return d_alpha(d_beta(f, j), i);
}

TensorSeries restrict_closed(const TensorSeries& f) {
    TensorSeries out(f.dim_a(), f.dim_b(), f.truncation_degree(), f.exact_degree());
    for (const auto& [m, v] : f.coeffs())
        if (m.beta_word.empty()) out.add(m, v);
    return out;
}

TensorSeries star_series(const TensorSeries& f, const IndexBasis& basis) {
    if (basis.dim_a != f.dim_a() || basis.dim_b != f.dim_b())
        throw std::invalid_argument("involution basis mismatch");
    TensorSeries out(f.dim_a(), f.dim_b(), f.truncation_degree(), f.exact_degree());
    for (const auto& [m, v] : f.coeffs()) {
        Word rev(m.beta_word.rbegin(), m.beta_word.rend());
        // expand letterwise through the involution matrices
        TensorMonomial cur;
        cur.alpha_word.resize(m.alpha_word.size());
        cur.beta_word.resize(rev.size());
        std::function<void(size_t, Scalar)> rec_b = [&](size_t pos, Scalar c) {
            if (pos == rev.size()) {
                out.add(cur, c);
                return;
            }
            for (int t = 0; t < basis.dim_b; ++t) {
                const Scalar& e = basis.inv_b.at(t, rev[pos]);
                if (e.is_zero()) continue;
                cur.beta_word[pos] = t;
                rec_b(pos + 1, c * e);
            }
        };
        std::function<void(size_t, Scalar)> rec_a = [&](size_t pos, Scalar c) {
            if (pos == m.alpha_word.size()) {
                rec_b(0, c);
                return;
            }
            for (int t = 0; t < basis.dim_a; ++t) {
                const Scalar& e = basis.inv_a.at(t, m.alpha_word[pos]);
                if (e.is_zero()) continue;
                cur.alpha_word[pos] = t;
                rec_a(pos + 1, c * e);
            }
        };
        rec_a(0, v);
    }
    return out;
}

ClassSeries project_classes(const TensorSeries& f) {
    ClassSeries out;
    for (const auto& [m, v] : f.coeffs()) {
        if (m.degree() > f.exact_degree()) continue;
        Word a = m.alpha_word, b = m.beta_word;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        ClassKey key{std::move(a), std::move(b)};
        auto [it, inserted] = out.try_emplace(std::move(key), v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

std::vector<std::tuple<ClassKey, Scalar, Scalar>> class_mismatches(const TensorSeries& lhs,
                                                                   const TensorSeries& rhs) {
    int exact = std::min(lhs.exact_degree(), rhs.exact_degree());
    auto clip = [exact](const TensorSeries& s) {
        ClassSeries c;
        for (const auto& [m, v] : s.coeffs()) {
            if (m.degree() > exact) continue;
            Word a = m.alpha_word, b = m.beta_word;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            c[{std::move(a), std::move(b)}] += v;
        }
        return c;
    };
    ClassSeries cl = clip(lhs), cr = clip(rhs);
    std::vector<std::tuple<ClassKey, Scalar, Scalar>> out;
    auto il = cl.begin();
    auto ir = cr.begin();
    while (il != cl.end() || ir != cr.end()) {
        if (ir == cr.end() || (il != cl.end() && il->first < ir->first)) {
            if (!il->second.is_zero()) out.emplace_back(il->first, il->second, Scalar(0));
            ++il;
        } else if (il == cl.end() || ir->first < il->first) {
            if (!ir->second.is_zero()) out.emplace_back(ir->first, Scalar(0), ir->second);
            ++ir;
        } else {
            if (il->second != ir->second) out.emplace_back(il->first, il->second, ir->second);
            ++il;
            ++ir;
        }
    }
    return out;
}

std::string class_key_str(const ClassKey& key) {
    std::string s = "[";
    for (size_t i = 0; i < key.first.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(key.first[i] + 1);
    }
    s += key.first.empty() ? "|" : " |";
    for (size_t i = 0; i < key.second.size(); ++i) {
        s += ' ';
        s += std::to_string(key.second[i] + 1);
    }
    s += "]";
    return s;
}

} // namespace efa
