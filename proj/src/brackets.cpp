#include "efa/brackets.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace efa {
namespace {

// Distinct rearrangements of a sorted multiset.
template <typename Fn>
void each_perm(Word pool, Fn&& fn) {
    std::sort(pool.begin(), pool.end());
    do {
        fn(const_cast<const Word&>(pool));
    } while (std::next_permutation(pool.begin(), pool.end()));
}

// Label multiplicity of a multiset: summing a value over all labeled
// permutations counts each distinct rearrangement this many times.
Scalar label_multiplicity(const Word& pool) {
    Word s = pool;
    std::sort(s.begin(), s.end());
    Scalar mult(1);
    long run = 1;
    for (size_t i = 1; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == s[i - 1]) {
            ++run;
            mult *= Scalar(run);
        } else {
            run = 1;
        }
    }
    return mult;
}

template <typename... Ws>
Word cat(const Ws&... parts) {
    Word out;
    out.reserve((parts.size() + ... + 0));
    (out.insert(out.end(), parts.begin(), parts.end()), ...);
    return out;
}

Word slice(const Word& w, int from, int to) { return Word(w.begin() + from, w.begin() + to); }

const Matrix& inv_a_or_throw(const CorrelationSystem& sys) {
    if (!sys.grams().inv_form_a)
        throw cap_error("interior form is singular; contraction undefined");
    return *sys.grams().inv_form_a;
}

const Matrix& inv_b_or_throw(const CorrelationSystem& sys) {
    if (!sys.grams().inv_form_b)
        throw cap_error("boundary form is singular; contraction undefined");
    return *sys.grams().inv_form_b;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    const auto cap = std::numeric_limits<unsigned long long>::max();
    if (a != 0 && b > cap / a) return cap;
    return a * b;
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f = sat_mul(f, (unsigned long long)i);
    return f;
}

unsigned long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = sat_mul(r, (unsigned long long)(n - k + i)) / i;
    return r;
}

} // namespace

Scalar contract_A4(const CorrelationSystem& sys, const Word& pool_a, int x1, int x2, int x3,
                   int x4) {
    const Matrix& fa = inv_a_or_throw(sys);
    const int n = sys.dim_a(), r = int(pool_a.size());
    const Scalar mult = label_multiplicity(pool_a);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        for (int s = 0; s <= r; ++s) {
            Word left = slice(sigma, 0, s), right = slice(sigma, s, r);
            for (int i = 0; i < n; ++i) {
                Word w1 = cat(Word{x1, x2}, left, Word{i});
                Scalar v1 = sys.value(w1, {});
                if (v1.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (fa.at(i, j).is_zero()) continue;
                    Scalar v2 = sys.value(cat(Word{j, x3, x4}, right), {});
                    if (v2.is_zero()) continue;
                    total += v1 * fa.at(i, j) * v2;
                }
            }
        }
    });
    return mult * total;
}

Scalar contract_B5(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2, int y3, int y4) {
    const Matrix& fb = inv_b_or_throw(sys);
    const int m = sys.dim_b(), r = int(pool_a.size()), p = int(pool_b.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        for (int s = 0; s <= r; ++s) {
            Word ileft = slice(sigma, 0, s), iright = slice(sigma, s, r);
            each_perm(pool_b, [&](const Word& xi) {
                for (int p1 = 0; p1 <= p; ++p1)
                    for (int p2 = p1; p2 <= p; ++p2)
                        for (int p3 = p2; p3 <= p; ++p3) {
                            Word g1 = slice(xi, 0, p1), g2 = slice(xi, p1, p2);
                            Word g3 = slice(xi, p2, p3), g4 = slice(xi, p3, p);
                            for (int i = 0; i < m; ++i) {
                                Scalar v1 =
                                    sys.value(ileft, cat(Word{y1}, g1, Word{y2}, g2, Word{i}));
                                if (v1.is_zero()) continue;
                                for (int j = 0; j < m; ++j) {
                                    if (fb.at(i, j).is_zero()) continue;
                                    Scalar v2 = sys.value(
                                        iright, cat(Word{j, y3}, g3, Word{y4}, g4));
                                    if (v2.is_zero()) continue;
                                    total += v1 * fb.at(i, j) * v2;
                                }
                            }
                        }
            });
        }
    });
    return mult * total;
}

Scalar contract_6(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int x,
                  int y1, int y2) {
    const Matrix& fb = inv_b_or_throw(sys);
    const int m = sys.dim_b(), r = int(pool_a.size()), p = int(pool_b.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        for (int s = 0; s <= r; ++s) {
            Word ileft = cat(Word{x}, slice(sigma, 0, s));
            Word iright = slice(sigma, s, r);
            each_perm(pool_b, [&](const Word& xi) {
                for (int p1 = 0; p1 <= p; ++p1)
                    for (int p2 = p1; p2 <= p; ++p2)
                        for (int p3 = p2; p3 <= p; ++p3) {
                            Word g1 = slice(xi, 0, p1), g2 = slice(xi, p1, p2);
                            Word g3 = slice(xi, p2, p3), g4 = slice(xi, p3, p);
                            for (int i = 0; i < m; ++i) {
                                Scalar v1 = sys.value(ileft, cat(g1, Word{i}));
                                if (v1.is_zero()) continue;
                                for (int j = 0; j < m; ++j) {
                                    if (fb.at(i, j).is_zero()) continue;
                                    Scalar v2 = sys.value(
                                        iright,
                                        cat(Word{j}, g2, Word{y1}, g3, Word{y2}, g4));
                                    if (v2.is_zero()) continue;
                                    total += v1 * fb.at(i, j) * v2;
                                }
                            }
                        }
            });
        }
    });
    return mult * total;
}

Scalar contract_7_lhs(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b,
                      int x1, int x2, int y) {
    const Matrix& fa = inv_a_or_throw(sys);
    const int n = sys.dim_a(), r = int(pool_a.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        for (int s = 0; s <= r; ++s) {
            Word ileft = slice(sigma, 0, s), iright = slice(sigma, s, r);
            each_perm(pool_b, [&](const Word& xi) {
                for (int i = 0; i < n; ++i) {
                    Scalar v1 = sys.value(cat(Word{x1, x2}, ileft, Word{i}), {});
                    if (v1.is_zero()) continue;
                    for (int j = 0; j < n; ++j) {
                        if (fa.at(i, j).is_zero()) continue;
                        Scalar v2 =
                            sys.value(cat(Word{j}, iright), cat(Word{y}, xi));
                        if (v2.is_zero()) continue;
                        total += v1 * fa.at(i, j) * v2;
                    }
                }
            });
        }
    });
    return mult * total;
}

namespace {

// Shared double-Casimir enumeration behind the two readings of the second
// bracket of relation seven. `x_in_first` switches the literal printed
// placement of the distinguished interior argument.
Scalar contract_7_rhs_impl(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b,
                           int x1, int x2, int y, bool x_in_first) {
    const Matrix& fb = inv_b_or_throw(sys);
    const int m = sys.dim_b(), r = int(pool_a.size()), p = int(pool_b.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    const int order[2][2] = {{x1, x2}, {x2, x1}};
    for (auto& ord : order) {
        int xa = ord[0], xb = ord[1];
        each_perm(pool_a, [&](const Word& sigma) {
            for (int s = 0; s <= r; ++s)
                for (int t = s; t <= r; ++t) {
                    Word a0 = slice(sigma, 0, s), a1 = slice(sigma, s, t),
                         a2 = slice(sigma, t, r);
                    each_perm(pool_b, [&](const Word& xi) {
                        for (int p1 = 0; p1 <= p; ++p1)
                            for (int p2 = p1; p2 <= p; ++p2)
                                for (int p3 = p2; p3 <= p; ++p3)
                                    for (int p4 = p3; p4 <= p; ++p4) {
                                        Word c1 = slice(xi, 0, p1), c2 = slice(xi, p1, p2);
                                        Word c3 = slice(xi, p2, p3), c4 = slice(xi, p3, p4);
                                        Word c5 = slice(xi, p4, p);
                                        Word mid_int = x_in_first ? cat(Word{xa}, a0) : a0;
                                        Word left_int =
                                            x_in_first ? a1 : cat(Word{xa}, a1);
                                        Word right_int = cat(Word{xb}, a2);
                                        for (int i1 = 0; i1 < m; ++i1)
                                            for (int i2 = 0; i2 < m; ++i2) {
                                                Scalar v1 = sys.value(
                                                    mid_int,
                                                    cat(Word{y}, c1, Word{i1}, c3, Word{i2}, c5));
                                                if (v1.is_zero()) continue;
                                                for (int j1 = 0; j1 < m; ++j1) {
                                                    if (fb.at(i1, j1).is_zero()) continue;
                                                    Scalar v2 = sys.value(
                                                        left_int, cat(Word{j1}, c2));
                                                    if (v2.is_zero()) continue;
                                                    for (int j2 = 0; j2 < m; ++j2) {
                                                        if (fb.at(i2, j2).is_zero()) continue;
                                                        Scalar v3 = sys.value(
                                                            right_int, cat(Word{j2}, c4));
                                                        if (v3.is_zero()) continue;
                                                        total += v1 * fb.at(i1, j1) *
                                                                 fb.at(i2, j2) * v2 * v3;
                                                    }
                                                }
                                            }
                                    }
                    });
                }
        });
    }
    return mult * total;
}

} // namespace

Scalar contract_7_rhs(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b,
                      int x1, int x2, int y) {
    return contract_7_rhs_impl(sys, pool_a, pool_b, x1, x2, y, false) / Scalar(2);
}

Scalar contract_7_rhs_literal(const CorrelationSystem& sys, const Word& pool_a,
                              const Word& pool_b, int x1, int x2, int y) {
    return contract_7_rhs_impl(sys, pool_a, pool_b, x1, x2, y, true);
}

Scalar contract_8a(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2) {
    const Matrix& fa = inv_a_or_throw(sys);
    const int n = sys.dim_a(), r = int(pool_a.size()), p = int(pool_b.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        for (int s = 0; s <= r; ++s) {
            Word ileft = slice(sigma, 0, s), iright = slice(sigma, s, r);
            each_perm(pool_b, [&](const Word& xi) {
                for (int q = 0; q <= p; ++q) {
                    Word bleft = cat(Word{y1}, slice(xi, 0, q));
                    Word bright = cat(Word{y2}, slice(xi, q, p));
                    for (int i = 0; i < n; ++i) {
                        Scalar v1 = sys.value(cat(ileft, Word{i}), bleft);
                        if (v1.is_zero()) continue;
                        for (int j = 0; j < n; ++j) {
                            if (fa.at(i, j).is_zero()) continue;
                            Scalar v2 = sys.value(cat(Word{j}, iright), bright);
                            if (v2.is_zero()) continue;
                            total += v1 * fa.at(i, j) * v2;
                        }
                    }
                }
            });
        }
    });
    return mult * total;
}

Scalar contract_8b(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2) {
    const Matrix& fb = inv_b_or_throw(sys);
    const int m = sys.dim_b(), p = int(pool_b.size());
    const Scalar mult = label_multiplicity(pool_a) * label_multiplicity(pool_b);
    Scalar total(0);
    each_perm(pool_a, [&](const Word& sigma) {
        each_perm(pool_b, [&](const Word& xi) {
            for (int q = 0; q <= p; ++q) {
                Word r1 = slice(xi, 0, q), r2 = slice(xi, q, p);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        if (fb.at(i, j).is_zero()) continue;
                        Scalar v = sys.value(
                            sigma, cat(Word{y1}, r1, Word{i}, r2, Word{y2}, Word{j}));
                        if (v.is_zero()) continue;
                        total += v * fb.at(i, j);
                    }
            }
        });
    });
    return mult * total;
}

// ---- multilinear wrappers ----

namespace {

template <typename Fn>
void expand(const std::vector<Vec>& vs, int dim, Word& idx, size_t pos, const Scalar& coeff,
            Fn&& fn) {
    if (pos == vs.size()) {
        fn(const_cast<const Word&>(idx), coeff);
        return;
    }
    if (int(vs[pos].size()) != dim) throw index_error("vector has wrong dimension");
    for (int i = 0; i < dim; ++i) {
        const Scalar& c = vs[pos][i];
        if (c.is_zero()) continue;
        idx[pos] = i;
        expand(vs, dim, idx, pos + 1, coeff * c, fn);
    }
}

template <typename Fn>
void expand_all(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                const std::vector<Vec>& pool_b, const std::vector<Vec>& args_a,
                const std::vector<Vec>& args_b, Fn&& fn) {
    Word pa(pool_a.size()), pb(pool_b.size()), aa(args_a.size()), ab(args_b.size());
    expand(pool_a, sys.dim_a(), pa, 0, Scalar(1), [&](const Word& pav, const Scalar& c0) {
        expand(pool_b, sys.dim_b(), pb, 0, c0, [&](const Word& pbv, const Scalar& c1) {
            expand(args_a, sys.dim_a(), aa, 0, c1, [&](const Word& aav, const Scalar& c2) {
                expand(args_b, sys.dim_b(), ab, 0, c2, [&](const Word& abv, const Scalar& c3) {
                    // summing the labeled-permutation core over each slot
                    // assignment is exactly the multilinear extension
                    Word pas = pav, pbs = pbv;
                    std::sort(pas.begin(), pas.end());
                    std::sort(pbs.begin(), pbs.end());
                    fn(pas, pbs, aav, abv, c3);
                });
            });
        });
    });
}

} // namespace

Scalar contract_A4(const CorrelationSystem& sys, const std::vector<Vec>& pool_a, const Vec& x1,
                   const Vec& x2, const Vec& x3, const Vec& x4) {
    Scalar total(0);
    expand_all(sys, pool_a, {}, {x1, x2, x3, x4}, {},
               [&](const Word& pa, const Word&, const Word& aa, const Word&, const Scalar& c) {
                   total += c * contract_A4(sys, pa, aa[0], aa[1], aa[2], aa[3]);
               });
    return total;
}

Scalar contract_B5(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2, const Vec& y3,
                   const Vec& y4) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {}, {y1, y2, y3, y4},
               [&](const Word& pa, const Word& pb, const Word&, const Word& ab, const Scalar& c) {
                   total += c * contract_B5(sys, pa, pb, ab[0], ab[1], ab[2], ab[3]);
               });
    return total;
}

Scalar contract_6(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                  const std::vector<Vec>& pool_b, const Vec& x, const Vec& y1, const Vec& y2) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {x}, {y1, y2},
               [&](const Word& pa, const Word& pb, const Word& aa, const Word& ab,
                   const Scalar& c) { total += c * contract_6(sys, pa, pb, aa[0], ab[0], ab[1]); });
    return total;
}

Scalar contract_7_lhs(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                      const std::vector<Vec>& pool_b, const Vec& x1, const Vec& x2, const Vec& y) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {x1, x2}, {y},
               [&](const Word& pa, const Word& pb, const Word& aa, const Word& ab,
                   const Scalar& c) {
                   total += c * contract_7_lhs(sys, pa, pb, aa[0], aa[1], ab[0]);
               });
    return total;
}

Scalar contract_7_rhs(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                      const std::vector<Vec>& pool_b, const Vec& x1, const Vec& x2, const Vec& y) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {x1, x2}, {y},
               [&](const Word& pa, const Word& pb, const Word& aa, const Word& ab,
                   const Scalar& c) {
                   total += c * contract_7_rhs(sys, pa, pb, aa[0], aa[1], ab[0]);
               });
    return total;
}

Scalar contract_8a(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {}, {y1, y2},
               [&](const Word& pa, const Word& pb, const Word&, const Word& ab, const Scalar& c) {
                   total += c * contract_8a(sys, pa, pb, ab[0], ab[1]);
               });
    return total;
}

Scalar contract_8b(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2) {
    Scalar total(0);
    expand_all(sys, pool_a, pool_b, {}, {y1, y2},
               [&](const Word& pa, const Word& pb, const Word&, const Word& ab, const Scalar& c) {
                   total += c * contract_8b(sys, pa, pb, ab[0], ab[1]);
               });
    return total;
}

// ---- structural term counts ----

unsigned long long bracket_terms_A4(int r, int n) {
    return sat_mul(sat_mul((unsigned long long)(r + 1), factorial(r)),
                   (unsigned long long)(n) * n);
}
unsigned long long bracket_terms_B5(int r, int p, int m) {
    auto t = sat_mul((unsigned long long)(r + 1), factorial(r));
    t = sat_mul(t, factorial(p));
    t = sat_mul(t, choose(p + 3, 3));
    return sat_mul(t, (unsigned long long)(m) * m);
}
unsigned long long bracket_terms_6(int r, int p, int m) { return bracket_terms_B5(r, p, m); }
unsigned long long bracket_terms_7_lhs(int r, int p, int n) {
    auto t = sat_mul((unsigned long long)(r + 1), factorial(r));
    t = sat_mul(t, factorial(p));
    return sat_mul(t, (unsigned long long)(n) * n);
}
unsigned long long bracket_terms_7_rhs(int r, int p, int m) {
    auto t = sat_mul(2ULL, choose(r + 2, 2));
    t = sat_mul(t, factorial(r));
    t = sat_mul(t, factorial(p));
    t = sat_mul(t, choose(p + 4, 4));
    return sat_mul(t, sat_mul((unsigned long long)(m) * m, (unsigned long long)(m) * m));
}
unsigned long long bracket_terms_8a(int r, int p, int n) {
    auto t = sat_mul((unsigned long long)(r + 1), factorial(r));
    t = sat_mul(t, sat_mul((unsigned long long)(p + 1), factorial(p)));
    return sat_mul(t, (unsigned long long)(n) * n);
}
unsigned long long bracket_terms_8b(int r, int p, int m) {
    auto t = sat_mul(factorial(r), sat_mul((unsigned long long)(p + 1), factorial(p)));
    return sat_mul(t, (unsigned long long)(m) * m);
}

// ---- evaluability ----

bool fits_A4(const CorrelationSystem& sys, int r) { return sys.fits(r + 3, 0); }
bool fits_B5(const CorrelationSystem& sys, int r, int p) { return sys.fits(r, p + 3); }
bool fits_6(const CorrelationSystem& sys, int r, int p) {
    return sys.fits(r + 1, p + 1) && sys.fits(r, p + 3);
}
bool fits_7(const CorrelationSystem& sys, int r, int p) {
    return sys.fits(r + 3, 0) && sys.fits(r + 1, p + 1) && sys.fits(r, p + 3);
}
bool fits_8(const CorrelationSystem& sys, int r, int p) {
    return sys.fits(r + 1, p + 1) && sys.fits(r, p + 4);
}

} // namespace efa
