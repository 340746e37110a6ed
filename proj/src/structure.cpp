#include "efa/structure.hpp"

#include <algorithm>
#include <functional>

namespace efa {
namespace {

Witness class_witness(const Word& idx_a, const Word& idx_b,
                      const std::tuple<ClassKey, Scalar, Scalar>& mismatch) {
    Witness w;
    w.args_a = idx_a;
    w.args_b = idx_b;
    w.left = std::get<1>(mismatch);
    w.right = std::get<2>(mismatch);
    w.detail = "class " + class_key_str(std::get<0>(mismatch));
    return w;
}

// sum_{p,q} d3(left..,p) * Finv[p][q] * d3(q,..right), with the derivative
// factory abstracted so the alpha and beta variants share the loop.
TensorSeries casimir_pair(const Matrix& finv, int dim,
                          const std::function<TensorSeries(int)>& left_factor,
                          const std::function<TensorSeries(int)>& right_factor) {
    TensorSeries out(0, 0, 0);
    bool first = true;
    for (int p = 0; p < dim; ++p) {
        TensorSeries lf = left_factor(p);
        for (int q = 0; q < dim; ++q) {
            if (finv.at(p, q).is_zero()) continue;
            TensorSeries term = scale(multiply(lf, right_factor(q)), finv.at(p, q));
            out = first ? std::move(term) : add(out, term);
            first = false;
        }
    }
    return out;
}

} // namespace

std::pair<Matrix, Matrix> series_gram_blocks(const TensorSeries& f) {
    Matrix fa(f.dim_a(), f.dim_a()), fb(f.dim_b(), f.dim_b());
    for (int i = 0; i < f.dim_a(); ++i)
        for (int j = 0; j < f.dim_a(); ++j)
            fa.at(i, j) = f.coeff(TensorMonomial{{i, j}, {}});
    for (int i = 0; i < f.dim_b(); ++i)
        for (int j = 0; j < f.dim_b(); ++j)
            fb.at(i, j) = f.coeff(TensorMonomial{{}, {i, j}});
    return {fa, fb};
}

CheckReport check_structure_axiom(const StructureSeries& ss, int axiom, int witness_cap) {
    const TensorSeries& f = ss.series;
    const int n = f.dim_a(), m = f.dim_b();
    CheckReport rep;
    rep.axiom = axiom;

    if (axiom == 1) {
        std::string violation;
        rep.instances_checked = f.coeffs().size();
        if (!f.is_symmetric(&violation)) {
            Witness w;
            w.detail = "coefficient not orbit-invariant: " + violation;
            rep.witnesses.push_back(std::move(w));
        }
        rep.status = rep.witnesses.empty() ? CheckStatus::pass : CheckStatus::fail;
        return rep;
    }
    if (axiom == 2) {
        TensorSeries starred = star_series(f, ss.basis);
        rep.instances_checked = f.coeffs().size();
        for (const auto& [mono, v] : f.coeffs()) {
            if (starred.coeff(mono) != v && int(rep.witnesses.size()) < witness_cap) {
                Witness w;
                w.left = v;
                w.right = starred.coeff(mono);
                w.detail = "monomial " + mono.str() + " vs starred series";
                rep.witnesses.push_back(std::move(w));
            }
        }
        for (const auto& [mono, v] : starred.coeffs()) {
            if (f.coeff(mono) != v && int(rep.witnesses.size()) < witness_cap) {
                Witness w;
                w.left = f.coeff(mono);
                w.right = v;
                w.detail = "monomial " + mono.str() + " vs starred series";
                rep.witnesses.push_back(std::move(w));
            }
        }
        rep.status = rep.witnesses.empty() ? CheckStatus::pass : CheckStatus::fail;
        return rep;
    }
    if (axiom == 3) {
        auto [fa, fb] = series_gram_blocks(f);
        rep.instances_checked = m > 0 ? 2 : 1;
        if (!fa.inverse()) {
            Witness w;
            w.detail = "degree-2 alpha block c(i,j|) is singular";
            rep.witnesses.push_back(std::move(w));
        }
        if (m > 0 && !fb.inverse()) {
            Witness w;
            w.detail = "degree-2 beta block c(|i,j) is singular";
            rep.witnesses.push_back(std::move(w));
        }
        rep.status = rep.witnesses.empty() ? CheckStatus::pass : CheckStatus::fail;
        return rep;
    }

    auto [fa_mat, fb_mat] = series_gram_blocks(f);
    auto fa_inv = fa_mat.inverse();
    auto fb_inv = fb_mat.inverse();

    if (axiom == 4) {
        if (!fa_inv) {
            rep.status = CheckStatus::skipped;
            rep.note = "skipped: degree-2 alpha block singular";
            return rep;
        }
        TensorSeries fa_part = restrict_closed(f);
        if (fa_part.exact_degree() < 3) {
            rep.status = CheckStatus::skipped;
            rep.note = "skipped: exactness below degree 3";
            return rep;
        }
        // cache third derivatives
        std::map<Word, TensorSeries> d3;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int p = 0; p < n; ++p)
                    d3.emplace(Word{i, j, p}, d3_alpha(fa_part, i, j, p));
        auto factor = [&](int i, int j) {
            return [&, i, j](int p) { return d3.at(Word{i, j, p}); };
        };
        auto factor_r = [&](int k, int l) {
            return [&, k, l](int q) { return d3.at(Word{q, k, l}); };
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        TensorSeries lhs = casimir_pair(*fa_inv, n, factor(i, j), factor_r(k, l));
                        TensorSeries rhs = casimir_pair(*fa_inv, n, factor(k, j), factor_r(i, l));
                        ++rep.instances_checked;
                        auto mism = class_mismatches(lhs, rhs);
                        if (!mism.empty()) {
                            rep.status = CheckStatus::fail;
                            if (int(rep.witnesses.size()) < witness_cap)
                                rep.witnesses.push_back(
                                    class_witness(Word{i, j, k, l}, {}, mism.front()));
                        }
                    }
        if (rep.status != CheckStatus::fail) rep.status = CheckStatus::pass;
        return rep;
    }

    if (axiom >= 5 && axiom <= 7 && m == 0) {
        rep.status = CheckStatus::skipped;
        rep.note = "skipped: no boundary sector";
        return rep;
    }

    if (axiom == 5 || axiom == 6 || axiom == 7) {
        if (!fb_inv || (axiom == 7 && !fa_inv)) {
            rep.status = CheckStatus::skipped;
            rep.note = "skipped: a degree-2 block is singular";
            return rep;
        }
        if (f.exact_degree() < 3) {
            rep.status = CheckStatus::skipped;
            rep.note = "skipped: exactness below degree 3";
            return rep;
        }
    }

    if (axiom == 5) {
        std::map<Word, TensorSeries> d3;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int p = 0; p < m; ++p)
                    d3.emplace(Word{i, j, p}, d3_beta(f, i, j, p));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        auto lf = [&](int p) { return d3.at(Word{i, j, p}); };
                        auto rf = [&](int q) { return d3.at(Word{q, k, l}); };
                        auto lf2 = [&](int p) { return d3.at(Word{l, i, p}); };
                        auto rf2 = [&](int q) { return d3.at(Word{q, j, k}); };
                        TensorSeries lhs = casimir_pair(*fb_inv, m, lf, rf);
                        TensorSeries rhs = casimir_pair(*fb_inv, m, lf2, rf2);
                        ++rep.instances_checked;
                        auto mism = class_mismatches(lhs, rhs);
                        if (!mism.empty()) {
                            rep.status = CheckStatus::fail;
                            if (int(rep.witnesses.size()) < witness_cap)
                                rep.witnesses.push_back(
                                    class_witness({}, Word{i, j, k, l}, mism.front()));
                        }
                    }
        if (rep.status != CheckStatus::fail) rep.status = CheckStatus::pass;
        return rep;
    }

    if (axiom == 6) {
        std::map<Word, TensorSeries> d2;
        for (int a = 0; a < n; ++a)
            for (int p = 0; p < m; ++p) d2.emplace(Word{a, p}, d2_alpha_beta(f, a, p));
        std::map<Word, TensorSeries> d3;
        for (int q = 0; q < m; ++q)
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < m; ++v) d3.emplace(Word{q, u, v}, d3_beta(f, q, u, v));
        for (int a = 0; a < n; ++a)
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < m; ++v) {
                    auto lf = [&](int p) { return d2.at(Word{a, p}); };
                    auto rf = [&](int q) { return d3.at(Word{q, u, v}); };
                    auto rf2 = [&](int q) { return d3.at(Word{q, v, u}); };
                    TensorSeries lhs = casimir_pair(*fb_inv, m, lf, rf);
                    TensorSeries rhs = casimir_pair(*fb_inv, m, lf, rf2);
                    ++rep.instances_checked;
                    auto mism = class_mismatches(lhs, rhs);
                    if (!mism.empty()) {
                        rep.status = CheckStatus::fail;
                        if (int(rep.witnesses.size()) < witness_cap)
                            rep.witnesses.push_back(
                                class_witness(Word{a}, Word{u, v}, mism.front()));
                    }
                }
        if (rep.status != CheckStatus::fail) rep.status = CheckStatus::pass;
        return rep;
    }

    // axiom 7: single interior Casimir against the double boundary Casimir.
    // The first factor of the left side is built from the closed part, the
    // right side sums both (i,j) orderings so that the sides are comparable
    // (the cyclic triple derivative carries half the weight of the composed
    // interior one).
    TensorSeries fa_part = restrict_closed(f);
    std::map<Word, TensorSeries> d3a_cache, d3b_cache, d2_cache;
    for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d3a_cache.emplace(Word{q, i, j}, d3_alpha(fa_part, q, i, j));
    for (int q = 0; q < m; ++q)
        for (int k = 0; k < m; ++k)
            for (int r = 0; r < m; ++r) d3b_cache.emplace(Word{q, k, r}, d3_beta(f, q, k, r));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < m; ++p) d2_cache.emplace(Word{a, p}, d2_alpha_beta(f, a, p));

    auto rhs_one_order = [&](int i, int j, int k) {
        TensorSeries out(n, m, 0, -1);
        bool first = true;
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                if (fb_inv->at(p, q).is_zero()) continue;
                for (int r = 0; r < m; ++r)
                    for (int l = 0; l < m; ++l) {
                        if (fb_inv->at(r, l).is_zero()) continue;
                        TensorSeries term = multiply(
                            multiply(d2_cache.at(Word{i, p}), d3b_cache.at(Word{q, k, r})),
                            d2_cache.at(Word{j, l}));
                        term = scale(term, fb_inv->at(p, q) * fb_inv->at(r, l));
                        out = first ? std::move(term) : add(out, term);
                        first = false;
                    }
            }
        return out;
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k) {
                TensorSeries lhs(n, m, 0, -1);
                bool first = true;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        if (fa_inv->at(p, q).is_zero()) continue;
                        TensorSeries t2 = scale(
                            multiply(d2_cache.at(Word{p, k}), d3a_cache.at(Word{q, i, j})),
                            fa_inv->at(p, q));
                        lhs = first ? std::move(t2) : add(lhs, t2);
                        first = false;
                    }
                TensorSeries rhs = add(rhs_one_order(i, j, k), rhs_one_order(j, i, k));
                ++rep.instances_checked;
                auto mism = class_mismatches(lhs, rhs);
                if (!mism.empty()) {
                    rep.status = CheckStatus::fail;
                    if (int(rep.witnesses.size()) < witness_cap)
                        rep.witnesses.push_back(class_witness(Word{i, j}, Word{k}, mism.front()));
                }
            }
    if (rep.status != CheckStatus::fail) rep.status = CheckStatus::pass;
    rep.note = "right side summed over both interior orderings";
    return rep;
}

std::vector<CheckReport> check_structure_all(const StructureSeries& f, int witness_cap) {
    std::vector<CheckReport> out;
    for (int k = 1; k <= 7; ++k) out.push_back(check_structure_axiom(f, k, witness_cap));
    return out;
}

TensorSeries series_from_system(const CorrelationSystem& sys, int degree) {
    if (degree > sys.max_interior() || (sys.dim_b() > 0 && degree > sys.max_boundary()) ||
        degree > sys.max_degree())
        throw cap_error("requested series degree exceeds the system caps");
    TensorSeries out(sys.dim_a(), sys.dim_b(), degree, degree);
    Word aw, bw;
    std::function<void(int)> rec_b = [&](int left) {
        Scalar v = sys.value(aw, bw);
        if (!v.is_zero()) out.set(TensorMonomial{aw, bw}, v);
        if (left == 0) return;
        for (int j = 0; j < sys.dim_b(); ++j) {
            bw.push_back(j);
            rec_b(left - 1);
            bw.pop_back();
        }
    };
    std::function<void(int)> rec_a = [&](int left) {
        rec_b(left);
        if (left == 0) return;
        for (int i = 0; i < sys.dim_a(); ++i) {
            aw.push_back(i);
            rec_a(left - 1);
            aw.pop_back();
        }
    };
    rec_a(degree);
    return out;
}

CorrelationSystem system_from_series(const StructureSeries& ss, bool extended) {
    const TensorSeries& f = ss.series;
    int e = f.exact_degree();
    if (e < 2) throw cap_error("series exactness below degree 2");
    std::map<CorrelatorKey, Scalar> table;
    for (const auto& [mono, v] : f.coeffs()) {
        if (mono.degree() > e) continue;
        CorrelatorKey key = canonical_key(mono.alpha_word, mono.beta_word);
        auto [it, inserted] = table.try_emplace(key, v);
        if (!inserted && it->second != v)
            throw index_error("series is not symmetric at monomial " + mono.str());
    }
    int lmax = f.dim_b() > 0 ? e : 0;
    return CorrelationSystem(ss.basis, e, lmax, std::move(table), extended, e);
}

} // namespace efa
