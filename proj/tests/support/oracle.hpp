#pragma once

// Independent brute-force oracle for the contraction brackets of an
// algebra-induced system. Correlators are evaluated by multiplying basis
// elements directly and pairing with the unit; the permutation and arc
// enumeration is written recursively and shares no code with the library's
// bracket engines.

#include "efa/algebra.hpp"

#include <functional>

namespace efa::test {

class AlgebraOracle {
  public:
    explicit AlgebraOracle(const ExtendedFrobeniusAlgebra& alg)
        : alg_(alg), unit_(*unit_of(alg)) {
        int n = alg.dim_a, m = alg.dim_b;
        Matrix fa(n, n), fb(m, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                fa.at(i, j) = corr({i, j}, {});
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                fb.at(i, j) = corr({}, {i, j});
        fa_inv_ = *fa.inverse();
        if (m > 0) fb_inv_ = *fb.inverse();
    }

    // <interior, boundary word> = (prod(interior) * prod(boundary), 1),
    // with the stability convention applied.
    Scalar corr(const Word& interior, const Word& boundary) const {
        if (!admissible_shape(int(interior.size()), int(boundary.size()))) return Scalar(0);
        Vec z = unit_;
        for (int i : interior) z = alg_.mul(z, alg_.basis_vec(i));
        for (int j : boundary) z = alg_.mul(z, alg_.basis_vec(alg_.dim_a + j));
        return alg_.pair(z, unit_);
    }

    Scalar a4(const Word& pool, int x1, int x2, int x3, int x4) const {
        Scalar total(0);
        each_labeled_perm(pool, [&](const Word& s) {
            for (size_t cut = 0; cut <= s.size(); ++cut)
                for (int i = 0; i < alg_.dim_a; ++i)
                    for (int j = 0; j < alg_.dim_a; ++j) {
                        Word w1{x1, x2};
                        w1.insert(w1.end(), s.begin(), s.begin() + cut);
                        w1.push_back(i);
                        Word w2{j, x3, x4};
                        w2.insert(w2.end(), s.begin() + cut, s.end());
                        total += corr(w1, {}) * fa_inv_.at(i, j) * corr(w2, {});
                    }
        });
        return total;
    }

    Scalar b5(const Word& pool_a, const Word& pool_b, int y1, int y2, int y3, int y4) const {
        Scalar total(0);
        each_labeled_perm(pool_a, [&](const Word& s) {
            for (size_t cut = 0; cut <= s.size(); ++cut)
                each_labeled_perm(pool_b, [&](const Word& x) {
                    each_arc_split(x, 4, [&](const std::vector<Word>& g) {
                        for (int i = 0; i < alg_.dim_b; ++i)
                            for (int j = 0; j < alg_.dim_b; ++j) {
                                Word b1 = join({{y1}, g[0], {y2}, g[1], {i}});
                                Word b2 = join({{j, y3}, g[2], {y4}, g[3]});
                                total += corr(Word(s.begin(), s.begin() + cut), b1) *
                                         fb_inv_.at(i, j) *
                                         corr(Word(s.begin() + cut, s.end()), b2);
                            }
                    });
                });
        });
        return total;
    }

    Scalar c6(const Word& pool_a, const Word& pool_b, int x, int y1, int y2) const {
        Scalar total(0);
        each_labeled_perm(pool_a, [&](const Word& s) {
            for (size_t cut = 0; cut <= s.size(); ++cut)
                each_labeled_perm(pool_b, [&](const Word& xw) {
                    each_arc_split(xw, 4, [&](const std::vector<Word>& g) {
                        for (int i = 0; i < alg_.dim_b; ++i)
                            for (int j = 0; j < alg_.dim_b; ++j) {
                                Word i1{x};
                                i1.insert(i1.end(), s.begin(), s.begin() + cut);
                                Word b1 = join({g[0], {i}});
                                Word b2 = join({{j}, g[1], {y1}, g[2], {y2}, g[3]});
                                total += corr(i1, b1) * fb_inv_.at(i, j) *
                                         corr(Word(s.begin() + cut, s.end()), b2);
                            }
                    });
                });
        });
        return total;
    }

    Scalar c7_lhs(const Word& pool_a, const Word& pool_b, int x1, int x2, int y) const {
        Scalar total(0);
        each_labeled_perm(pool_a, [&](const Word& s) {
            for (size_t cut = 0; cut <= s.size(); ++cut)
                each_labeled_perm(pool_b, [&](const Word& xw) {
                    for (int i = 0; i < alg_.dim_a; ++i)
                        for (int j = 0; j < alg_.dim_a; ++j) {
                            Word w1{x1, x2};
                            w1.insert(w1.end(), s.begin(), s.begin() + cut);
                            w1.push_back(i);
                            Word w2{j};
                            w2.insert(w2.end(), s.begin() + cut, s.end());
                            Word b = join({{y}, xw});
                            total += corr(w1, {}) * fa_inv_.at(i, j) * corr(w2, b);
                        }
                });
        });
        return total;
    }

    Scalar c7_rhs(const Word& pool_a, const Word& pool_b, int x1, int x2, int y) const {
        Scalar total(0);
        for (auto [xa, xb] : {std::pair{x1, x2}, std::pair{x2, x1}})
            each_labeled_perm(pool_a, [&](const Word& s) {
                for (size_t cut1 = 0; cut1 <= s.size(); ++cut1)
                    for (size_t cut2 = cut1; cut2 <= s.size(); ++cut2)
                        each_labeled_perm(pool_b, [&](const Word& xw) {
                            each_arc_split(xw, 5, [&](const std::vector<Word>& c) {
                                for (int i1 = 0; i1 < alg_.dim_b; ++i1)
                                    for (int j1 = 0; j1 < alg_.dim_b; ++j1)
                                        for (int i2 = 0; i2 < alg_.dim_b; ++i2)
                                            for (int j2 = 0; j2 < alg_.dim_b; ++j2) {
                                                Word mid_b = join(
                                                    {{y}, c[0], {i1}, c[2], {i2}, c[4]});
                                                Word l_int{xa};
                                                l_int.insert(l_int.end(), s.begin() + cut1,
                                                             s.begin() + cut2);
                                                Word r_int{xb};
                                                r_int.insert(r_int.end(), s.begin() + cut2,
                                                             s.end());
                                                total +=
                                                    corr(Word(s.begin(), s.begin() + cut1),
                                                         mid_b) *
                                                    fb_inv_.at(i1, j1) * fb_inv_.at(i2, j2) *
                                                    corr(l_int, join({{j1}, c[1]})) *
                                                    corr(r_int, join({{j2}, c[3]}));
                                            }
                            });
                        });
            });
        return total / Scalar(2);
    }

    Scalar c8a(const Word& pool_a, const Word& pool_b, int y1, int y2) const {
        Scalar total(0);
        each_labeled_perm(pool_a, [&](const Word& s) {
            for (size_t cut = 0; cut <= s.size(); ++cut)
                each_labeled_perm(pool_b, [&](const Word& xw) {
                    for (size_t q = 0; q <= xw.size(); ++q)
                        for (int i = 0; i < alg_.dim_a; ++i)
                            for (int j = 0; j < alg_.dim_a; ++j) {
                                Word i1(s.begin(), s.begin() + cut);
                                i1.push_back(i);
                                Word i2{j};
                                i2.insert(i2.end(), s.begin() + cut, s.end());
                                Word b1 = join({{y1}, Word(xw.begin(), xw.begin() + q)});
                                Word b2 = join({{y2}, Word(xw.begin() + q, xw.end())});
                                total += corr(i1, b1) * fa_inv_.at(i, j) * corr(i2, b2);
                            }
                });
        });
        return total;
    }

    Scalar c8b(const Word& pool_a, const Word& pool_b, int y1, int y2) const {
        Scalar total(0);
        each_labeled_perm(pool_a, [&](const Word& s) {
            each_labeled_perm(pool_b, [&](const Word& xw) {
                for (size_t q = 0; q <= xw.size(); ++q)
                    for (int i = 0; i < alg_.dim_b; ++i)
                        for (int j = 0; j < alg_.dim_b; ++j) {
                            Word b = join({{y1}, Word(xw.begin(), xw.begin() + q), {i},
                                           Word(xw.begin() + q, xw.end()), {y2}, {j}});
                            total += corr(s, b) * fb_inv_.at(i, j);
                        }
            });
        });
        return total;
    }

  private:
    static Word join(std::initializer_list<Word> parts) {
        Word out;
        for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    // literally every labeled permutation, repeats included
    static void each_labeled_perm(const Word& pool, const std::function<void(const Word&)>& fn) {
        Word cur;
        std::vector<bool> used(pool.size(), false);
        std::function<void()> rec = [&] {
            if (cur.size() == pool.size()) {
                fn(cur);
                return;
            }
            for (size_t i = 0; i < pool.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                cur.push_back(pool[i]);
                rec();
                cur.pop_back();
                used[i] = false;
            }
        };
        rec();
    }

    static void each_arc_split(const Word& seq, int arcs,
                               const std::function<void(const std::vector<Word>&)>& fn) {
        std::vector<Word> parts(arcs);
        std::function<void(size_t, int)> rec = [&](size_t from, int arc) {
            if (arc == arcs - 1) {
                parts[arc] = Word(seq.begin() + from, seq.end());
                fn(parts);
                return;
            }
            for (size_t to = from; to <= seq.size(); ++to) {
                parts[arc] = Word(seq.begin() + from, seq.begin() + to);
                rec(to, arc + 1);
            }
        };
        rec(0, 0);
    }

    const ExtendedFrobeniusAlgebra& alg_;
    Vec unit_;
    Matrix fa_inv_, fb_inv_;
};

} // namespace efa::test
