#include "efa/algebra.hpp"

#include <algorithm>
#include <functional>

namespace efa {
namespace {

void add_witness(CheckReport& rep, int cap, std::string detail, Scalar left = Scalar(0),
                 Scalar right = Scalar(0)) {
    rep.status = CheckStatus::fail;
    if (int(rep.witnesses.size()) >= cap) return;
    Witness w;
    w.left = std::move(left);
    w.right = std::move(right);
    w.detail = std::move(detail);
    rep.witnesses.push_back(std::move(w));
}

std::string basis_name(const ExtendedFrobeniusAlgebra& alg, int i) {
    return i < alg.dim_a ? "a" + std::to_string(i + 1)
                         : "b" + std::to_string(i - alg.dim_a + 1);
}

} // namespace

Vec ExtendedFrobeniusAlgebra::basis_vec(int i) const {
    Vec v(dim());
    v[i] = Scalar(1);
    return v;
}

Vec ExtendedFrobeniusAlgebra::mul(const Vec& u, const Vec& v) const {
    Vec out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            const Vec& row = mult[i][j];
            for (int k = 0; k < dim(); ++k)
                if (!row[k].is_zero()) out[k] += c * row[k];
        }
    }
    return out;
}

Scalar ExtendedFrobeniusAlgebra::pair(const Vec& u, const Vec& v) const {
    Scalar out(0);
    for (int i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            if (!form.at(i, j).is_zero() && !v[j].is_zero()) out += u[i] * form.at(i, j) * v[j];
    }
    return out;
}

void ExtendedFrobeniusAlgebra::validate_shape() const {
    if (dim_a <= 0 || dim_b < 0) throw index_error("bad algebra dimensions");
    if (int(mult.size()) != dim()) throw index_error("mult table has wrong shape");
    for (const auto& row : mult) {
        if (int(row.size()) != dim()) throw index_error("mult table has wrong shape");
        for (const Vec& v : row)
            if (int(v.size()) != dim()) throw index_error("mult table has wrong shape");
    }
    if (form.rows() != dim() || form.cols() != dim()) throw index_error("form has wrong shape");
    if (inv.rows() != dim() || inv.cols() != dim())
        throw index_error("involution has wrong shape");
}

IndexBasis ExtendedFrobeniusAlgebra::index_basis() const {
    Matrix ia(dim_a, dim_a), ib(dim_b, dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_a; ++j) ia.at(i, j) = inv.at(i, j);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j) ib.at(i, j) = inv.at(dim_a + i, dim_a + j);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            bool cross = (i < dim_a) != (j < dim_a);
            if (cross && !inv.at(i, j).is_zero())
                throw index_error("involution does not preserve the A/B split");
        }
    return IndexBasis(dim_a, dim_b, ia, ib);
}

CheckReport check_efa(const ExtendedFrobeniusAlgebra& alg, int witness_cap) {
    alg.validate_shape();
    CheckReport rep;
    rep.status = CheckStatus::pass;
    const int d = alg.dim(), n = alg.dim_a;

    if (!alg.form.is_symmetric()) add_witness(rep, witness_cap, "form is not symmetric");

    // invariance and associativity on all basis triples
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec eij = alg.mul(alg.basis_vec(i), alg.basis_vec(j));
            for (int k = 0; k < d; ++k) {
                ++rep.terms_enumerated;
                Vec ejk = alg.mul(alg.basis_vec(j), alg.basis_vec(k));
                Scalar lhs = alg.pair(eij, alg.basis_vec(k));
                Scalar rhs = alg.pair(alg.basis_vec(i), ejk);
                if (lhs != rhs)
                    add_witness(rep, witness_cap,
                                "invariance fails at (" + basis_name(alg, i) + " " +
                                    basis_name(alg, j) + ", " + basis_name(alg, k) + ")",
                                lhs, rhs);
                Vec assoc_l = alg.mul(eij, alg.basis_vec(k));
                Vec assoc_r = alg.mul(alg.basis_vec(i), ejk);
                if (assoc_l != assoc_r)
                    add_witness(rep, witness_cap,
                                "associativity fails at (" + basis_name(alg, i) + " " +
                                    basis_name(alg, j) + " " + basis_name(alg, k) + ")");
            }
        }

    // A is a central subalgebra
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec p = alg.mul(alg.basis_vec(i), alg.basis_vec(j));
            for (int k = n; k < d; ++k)
                if (!p[k].is_zero())
                    add_witness(rep, witness_cap,
                                "A*A leaves A at (" + basis_name(alg, i) + " " +
                                    basis_name(alg, j) + ")");
        }
        for (int x = 0; x < d; ++x) {
            Vec l = alg.mul(alg.basis_vec(i), alg.basis_vec(x));
            Vec r = alg.mul(alg.basis_vec(x), alg.basis_vec(i));
            if (l != r)
                add_witness(rep, witness_cap,
                            "A not central at (" + basis_name(alg, i) + ", " +
                                basis_name(alg, x) + ")");
        }
    }

    // B is a two-sided ideal
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i < n && j < n) continue;
            Vec p = alg.mul(alg.basis_vec(i), alg.basis_vec(j));
            for (int k = 0; k < n; ++k)
                if (!p[k].is_zero())
                    add_witness(rep, witness_cap,
                                "B not an ideal at (" + basis_name(alg, i) + " " +
                                    basis_name(alg, j) + ")");
        }

    // restricted nondegeneracy
    Matrix fa(n, n), fb(d - n, d - n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fa.at(i, j) = alg.form.at(i, j);
    for (int i = n; i < d; ++i)
        for (int j = n; j < d; ++j) fb.at(i - n, j - n) = alg.form.at(i, j);
    if (!fa.inverse()) add_witness(rep, witness_cap, "form restricted to A is degenerate");
    if (d > n && !fb.inverse())
        add_witness(rep, witness_cap, "form restricted to B is degenerate");

    // involution: involutive anti-automorphism preserving split and form
    if (!alg.inv.is_involution()) add_witness(rep, witness_cap, "involution is not involutive");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            bool cross = (i < n) != (j < n);
            if (cross && !alg.inv.at(i, j).is_zero()) {
                add_witness(rep, witness_cap, "involution mixes A and B");
                i = j = d; // one witness is enough for the split
            }
        }
    auto star = [&](const Vec& v) {
        Vec out(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (!alg.inv.at(r, c).is_zero() && !v[c].is_zero())
                    out[r] += alg.inv.at(r, c) * v[c];
        return out;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec lhs = star(alg.mul(alg.basis_vec(i), alg.basis_vec(j)));
            Vec rhs = alg.mul(star(alg.basis_vec(j)), star(alg.basis_vec(i)));
            if (lhs != rhs)
                add_witness(rep, witness_cap,
                            "involution is not an anti-automorphism at (" + basis_name(alg, i) +
                                " " + basis_name(alg, j) + ")");
            Scalar pl = alg.pair(star(alg.basis_vec(i)), star(alg.basis_vec(j)));
            Scalar pr = alg.form.at(i, j);
            if (pl != pr)
                add_witness(rep, witness_cap,
                            "involution does not preserve the form at (" + basis_name(alg, i) +
                                ", " + basis_name(alg, j) + ")",
                            pl, pr);
        }

    rep.instances_checked = (unsigned long long)d * d * d;
    return rep;
}

StructureTensors structure_tensors(const ExtendedFrobeniusAlgebra& alg) {
    alg.validate_shape();
    const int n = alg.dim_a, m = alg.dim_b;
    StructureTensors t;
    t.dim_a = n;
    t.dim_b = m;
    t.form_a = Matrix(n, n);
    t.form_b = Matrix(m, m);
    t.i_a = Matrix(n, n);
    t.i_b = Matrix(m, m);
    t.r_ab = Matrix(n, m);
    t.s.assign(size_t(n) * n * n, Scalar(0));
    t.t.assign(size_t(m) * m * m, Scalar(0));
    t.r_abb.assign(size_t(n) * m * m, Scalar(0));

    auto star = [&](int i) {
        Vec out(alg.dim());
        for (int r = 0; r < alg.dim(); ++r) out[r] = alg.inv.at(r, i);
        return out;
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.form_a.at(i, j) = alg.form.at(i, j);
            t.i_a.at(i, j) = alg.pair(star(i), alg.basis_vec(j));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            t.form_b.at(i, j) = alg.form.at(n + i, n + j);
            t.i_b.at(i, j) = alg.pair(star(n + i), alg.basis_vec(n + j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) t.r_ab.at(i, j) = alg.form.at(i, n + j);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = alg.mul(alg.basis_vec(i), alg.basis_vec(j));
            for (int k = 0; k < n; ++k) t.S(i, j, k) = alg.pair(p, alg.basis_vec(k));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec p = alg.mul(alg.basis_vec(n + i), alg.basis_vec(n + j));
            for (int k = 0; k < m; ++k) t.T(i, j, k) = alg.pair(p, alg.basis_vec(n + k));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Vec p = alg.mul(alg.basis_vec(i), alg.basis_vec(n + j));
            for (int k = 0; k < m; ++k) t.R3(i, j, k) = alg.pair(p, alg.basis_vec(n + k));
        }
    return t;
}

CheckReport check_conditions_1_9(const StructureTensors& t, int witness_cap) {
    CheckReport rep;
    rep.status = CheckStatus::pass;
    const int n = t.dim_a, m = t.dim_b;

    auto fa_inv = t.form_a.inverse();
    auto fb_inv = m > 0 ? t.form_b.inverse() : std::make_optional(Matrix(0, 0));
    if (!fa_inv) add_witness(rep, witness_cap, "condition 1: F_A singular");
    if (m > 0 && !fb_inv) add_witness(rep, witness_cap, "condition 1: F_B singular");
    if (rep.status == CheckStatus::fail) return rep; // raising impossible

    // 2) S and S4 fully symmetric
    auto S4 = [&](int i, int j, int k, int l) {
        Scalar out(0);
        for (int p = 0; p < n; ++p)
            for (int r = 0; r < n; ++r)
                if (!fa_inv->at(p, r).is_zero())
                    out += t.S(i, j, p) * fa_inv->at(p, r) * t.S(r, k, l);
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (t.S(i, j, k) != t.S(j, i, k) || t.S(i, j, k) != t.S(i, k, j))
                    add_witness(rep, witness_cap, "condition 2: S not symmetric", t.S(i, j, k),
                                t.S(j, i, k));
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar base = S4(i, j, k, l);
                    if (base != S4(j, i, k, l) || base != S4(i, k, j, l) ||
                        base != S4(i, j, l, k))
                        add_witness(rep, witness_cap, "condition 2: S4 not symmetric");
                }

    // 3) T and T4 cyclic
    auto T4 = [&](int i, int j, int k, int l) {
        Scalar out(0);
        for (int p = 0; p < m; ++p)
            for (int r = 0; r < m; ++r)
                if (!fb_inv->at(p, r).is_zero())
                    out += t.T(i, j, p) * fb_inv->at(p, r) * t.T(r, k, l);
        return out;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (t.T(i, j, k) != t.T(j, k, i))
                    add_witness(rep, witness_cap, "condition 3: T not cyclic", t.T(i, j, k),
                                t.T(j, k, i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (T4(i, j, k, l) != T4(j, k, l, i))
                        add_witness(rep, witness_cap, "condition 4': T4 not cyclic",
                                    T4(i, j, k, l), T4(j, k, l, i));

    // 4) R_abb determined by R and T
    for (int a = 0; a < n; ++a)
        for (int b1 = 0; b1 < m; ++b1)
            for (int b2 = 0; b2 < m; ++b2) {
                Scalar rhs(0);
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        if (!fb_inv->at(p, q).is_zero())
                            rhs += t.r_ab.at(a, p) * fb_inv->at(p, q) * t.T(q, b1, b2);
                if (t.R3(a, b1, b2) != rhs)
                    add_witness(rep, witness_cap, "condition 4: R_abb mismatch",
                                t.R3(a, b1, b2), rhs);
            }

    // 5) bulk-boundary compatibility
    for (int b = 0; b < m; ++b)
        for (int a1 = 0; a1 < n; ++a1)
            for (int a2 = 0; a2 < n; ++a2) {
                Scalar lhs(0);
                for (int u = 0; u < n; ++u)
                    for (int ap = 0; ap < n; ++ap)
                        if (!fa_inv->at(u, ap).is_zero())
                            lhs += t.r_ab.at(u, b) * fa_inv->at(u, ap) * t.S(ap, a1, a2);
                Scalar rhs(0);
                for (int p = 0; p < m; ++p)
                    for (int bp = 0; bp < m; ++bp) {
                        if (fb_inv->at(p, bp).is_zero()) continue;
                        for (int q = 0; q < m; ++q)
                            for (int bq = 0; bq < m; ++bq) {
                                if (fb_inv->at(q, bq).is_zero()) continue;
                                rhs += t.r_ab.at(a1, p) * fb_inv->at(p, bp) * t.r_ab.at(a2, q) *
                                       fb_inv->at(q, bq) * t.T(bp, bq, b);
                            }
                    }
                if (lhs != rhs)
                    add_witness(rep, witness_cap, "condition 5: bulk-boundary mismatch", lhs,
                                rhs);
            }

    // 6) R_abb symmetric in the boundary slots
    for (int a = 0; a < n; ++a)
        for (int b1 = 0; b1 < m; ++b1)
            for (int b2 = 0; b2 < m; ++b2)
                if (t.R3(a, b1, b2) != t.R3(a, b2, b1))
                    add_witness(rep, witness_cap, "condition 6: R_abb not symmetric",
                                t.R3(a, b1, b2), t.R3(a, b2, b1));

    // 7) I contracted with itself gives F
    auto check_i_square = [&](const Matrix& I, const Matrix& F, const Matrix& Finv,
                              const char* name) {
        int dd = F.rows();
        for (int x = 0; x < dd; ++x)
            for (int y = 0; y < dd; ++y) {
                Scalar lhs(0);
                for (int p = 0; p < dd; ++p)
                    for (int q = 0; q < dd; ++q)
                        if (!Finv.at(p, q).is_zero())
                            lhs += I.at(x, p) * Finv.at(p, q) * I.at(q, y);
                if (lhs != F.at(x, y))
                    add_witness(rep, witness_cap,
                                std::string("condition 7: I*I != F on ") + name, lhs,
                                F.at(x, y));
            }
    };
    check_i_square(t.i_a, t.form_a, *fa_inv, "A");
    if (m > 0) check_i_square(t.i_b, t.form_b, *fb_inv, "B");

    // 8) I symmetric; I-twisted R balance
    if (!t.i_a.is_symmetric()) add_witness(rep, witness_cap, "condition 8: I_A not symmetric");
    if (m > 0 && !t.i_b.is_symmetric())
        add_witness(rep, witness_cap, "condition 8: I_B not symmetric");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            Scalar lhs(0), rhs(0);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (!fa_inv->at(p, q).is_zero())
                        lhs += t.i_a.at(a, p) * fa_inv->at(p, q) * t.r_ab.at(q, b);
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q)
                    if (!fb_inv->at(p, q).is_zero())
                        rhs += t.i_b.at(b, p) * fb_inv->at(p, q) * t.r_ab.at(a, q);
            if (lhs != rhs)
                add_witness(rep, witness_cap, "condition 8: I-twisted R mismatch", lhs, rhs);
        }

    // 9) star-invariance of S and T (arguments reversed)
    auto raise_i = [&](const Matrix& I, const Matrix& Finv, int x, int target) {
        Scalar out(0);
        for (int p = 0; p < I.cols(); ++p)
            if (!I.at(x, p).is_zero() && !Finv.at(p, target).is_zero())
                out += I.at(x, p) * Finv.at(p, target);
        return out;
    };
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
            for (int a3 = 0; a3 < n; ++a3) {
                Scalar lhs(0);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        for (int r = 0; r < n; ++r) {
                            Scalar c = raise_i(t.i_a, *fa_inv, a1, p) *
                                       raise_i(t.i_a, *fa_inv, a2, q) *
                                       raise_i(t.i_a, *fa_inv, a3, r);
                            if (!c.is_zero()) lhs += c * t.S(r, q, p);
                        }
                if (lhs != t.S(a1, a2, a3))
                    add_witness(rep, witness_cap, "condition 9: S not star-invariant", lhs,
                                t.S(a1, a2, a3));
            }
    for (int b1 = 0; b1 < m; ++b1)
        for (int b2 = 0; b2 < m; ++b2)
            for (int b3 = 0; b3 < m; ++b3) {
                Scalar lhs(0);
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        for (int r = 0; r < m; ++r) {
                            Scalar c = raise_i(t.i_b, *fb_inv, b1, p) *
                                       raise_i(t.i_b, *fb_inv, b2, q) *
                                       raise_i(t.i_b, *fb_inv, b3, r);
                            if (!c.is_zero()) lhs += c * t.T(r, q, p);
                        }
                if (lhs != t.T(b1, b2, b3))
                    add_witness(rep, witness_cap, "condition 9: T not star-invariant", lhs,
                                t.T(b1, b2, b3));
            }

    rep.instances_checked = 9;
    return rep;
}

std::optional<Vec> unit_of(const ExtendedFrobeniusAlgebra& alg) {
    alg.validate_shape();
    const int d = alg.dim();
    // solve sum_i u_i (e_i e_k) = e_k for all k, then insist it is two-sided
    std::vector<Vec> rows;
    Vec rhs;
    for (int k = 0; k < d; ++k)
        for (int c = 0; c < d; ++c) {
            Vec row(d);
            for (int i = 0; i < d; ++i) row[i] = alg.mult[i][k][c];
            rows.push_back(std::move(row));
            rhs.push_back(c == k ? Scalar(1) : Scalar(0));
        }
    // gaussian elimination on the overdetermined system
    size_t nrows = rows.size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < d && r < nrows; ++c) {
        size_t p = r;
        while (p < nrows && rows[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        Scalar pv = rows[r][c];
        for (int j = 0; j < d; ++j) rows[r][j] /= pv;
        rhs[r] /= pv;
        for (size_t rr = 0; rr < nrows; ++rr) {
            if (rr == r || rows[rr][c].is_zero()) continue;
            Scalar f = rows[rr][c];
            for (int j = 0; j < d; ++j) rows[rr][j] -= f * rows[r][j];
            rhs[rr] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t rr = r; rr < nrows; ++rr)
        if (!rhs[rr].is_zero()) return std::nullopt;
    Vec u(d);
    for (size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = rhs[i];
    for (int k = 0; k < d; ++k) {
        Vec ek = alg.basis_vec(k);
        if (alg.mul(u, ek) != ek || alg.mul(ek, u) != ek) return std::nullopt;
    }
    return u;
}

CorrelationSystem correlators_from_algebra(const ExtendedFrobeniusAlgebra& alg, int max_interior,
                                           int max_boundary, bool extended, int max_degree) {
    auto unit = unit_of(alg);
    if (!unit) throw index_error("algebra has no two-sided unit");
    const int n = alg.dim_a, m = alg.dim_b;
    const int deg_cap = max_degree < 0 ? max_interior + max_boundary : max_degree;

    std::map<CorrelatorKey, Scalar> table;
    Word interior;
    std::function<void(int, int)> fill_boundary = [&](int, int) {};
    auto key_value = [&](const Word& ia, const Word& jb) {
        Vec z = *unit;
        for (int i : ia) z = alg.mul(z, alg.basis_vec(i));
        for (int j : jb) z = alg.mul(z, alg.basis_vec(n + j));
        return alg.pair(z, *unit);
    };

    std::function<void(int, Word&)> rec_b = [&](int lmax, Word& bw) {
        int k = int(interior.size()), l = int(bw.size());
        if (least_rotation(bw) == bw && admissible_shape(k, l)) {
            Scalar v = key_value(interior, bw);
            if (!v.is_zero() || (k + l == 2 && k != 1))
                table.emplace(CorrelatorKey{interior, bw}, std::move(v));
        }
        if (l == lmax) return;
        for (int j = 0; j < m; ++j) {
            bw.push_back(j);
            rec_b(lmax, bw);
            bw.pop_back();
        }
    };
    std::function<void(int, int)> rec_a = [&](int start, int left) {
        int k = int(interior.size());
        if (k <= deg_cap) {
            Word bw;
            rec_b(std::min(max_boundary, deg_cap - k), bw);
        }
        if (left == 0) return;
        for (int i = start; i < n; ++i) {
            interior.push_back(i);
            rec_a(i, left - 1);
            interior.pop_back();
        }
    };
    rec_a(0, max_interior);

    return CorrelationSystem(alg.index_basis(), max_interior, max_boundary, std::move(table),
                             extended, deg_cap);
}

Matrix casimir(const Matrix& form, const Matrix& inv) {
    if (form.rows() != form.cols() || inv.rows() != form.rows() || inv.cols() != form.cols())
        throw index_error("casimir: shape mismatch");
    // starred pairing g*(i,j) = (e_i, e_j*)
    Matrix starred = form * inv;
    auto k = starred.inverse();
    if (!k) throw index_error("casimir: starred form is singular");
    return *k;
}

ExtendedFrobeniusAlgebra tensors_to_algebra(const StructureTensors& t) {
    CheckReport cond = check_conditions_1_9(t);
    if (cond.status == CheckStatus::fail)
        throw index_error("tensor conditions fail: " +
                          (cond.witnesses.empty() ? std::string("?") : cond.witnesses[0].detail));
    const int n = t.dim_a, m = t.dim_b, d = n + m;
    Matrix fa_inv = *t.form_a.inverse();
    Matrix fb_inv = m > 0 ? *t.form_b.inverse() : Matrix(0, 0);

    ExtendedFrobeniusAlgebra alg;
    alg.dim_a = n;
    alg.dim_b = m;
    alg.mult.assign(d, std::vector<Vec>(d, Vec(d)));
    alg.form = Matrix(d, d);
    alg.inv = Matrix(d, d);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            alg.form.at(i, j) = t.form_a.at(i, j);
            for (int p = 0; p < n; ++p)
                for (int k = 0; k < n; ++k)
                    if (!t.S(i, j, p).is_zero() && !fa_inv.at(p, k).is_zero())
                        alg.mult[i][j][k] += t.S(i, j, p) * fa_inv.at(p, k);
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            alg.form.at(n + i, n + j) = t.form_b.at(i, j);
            for (int p = 0; p < m; ++p)
                for (int k = 0; k < m; ++k)
                    if (!t.T(i, j, p).is_zero() && !fb_inv.at(p, k).is_zero())
                        alg.mult[n + i][n + j][n + k] += t.T(i, j, p) * fb_inv.at(p, k);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            alg.form.at(a, n + b) = t.r_ab.at(a, b);
            alg.form.at(n + b, a) = t.r_ab.at(a, b);
            Vec prod(d);
            for (int p = 0; p < m; ++p)
                for (int k = 0; k < m; ++k)
                    if (!t.R3(a, b, p).is_zero() && !fb_inv.at(p, k).is_zero())
                        prod[n + k] += t.R3(a, b, p) * fb_inv.at(p, k);
            alg.mult[a][n + b] = prod;
            alg.mult[n + b][a] = prod; // A is central
        }

    // involution from the I-pairings: x* recovered from (x*, e_q) = I[x][q]
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p) {
            Scalar c(0);
            for (int q = 0; q < n; ++q)
                if (!t.i_a.at(i, q).is_zero() && !fa_inv.at(q, p).is_zero())
                    c += t.i_a.at(i, q) * fa_inv.at(q, p);
            alg.inv.at(p, i) = c;
        }
    for (int i = 0; i < m; ++i)
        for (int p = 0; p < m; ++p) {
            Scalar c(0);
            for (int q = 0; q < m; ++q)
                if (!t.i_b.at(i, q).is_zero() && !fb_inv.at(q, p).is_zero())
                    c += t.i_b.at(i, q) * fb_inv.at(q, p);
            alg.inv.at(n + p, n + i) = c;
        }
    return alg;
}

StructureTensors eval_series_at_point(const StructureSeries& ss, const Vec& point_a,
                                      const Vec& point_b) {
    const TensorSeries& f = ss.series;
    const int n = f.dim_a(), m = f.dim_b();
    if (!f.is_polynomial())
        throw index_error("eval_series_at_point requires a polynomial (fully exact) series");
    if (int(point_a.size()) != n || int(point_b.size()) != m)
        throw index_error("evaluation point has wrong dimensions");

    auto eval = [&](const TensorSeries& g) {
        Scalar out(0);
        for (const auto& [mono, v] : g.coeffs()) {
            Scalar term = v;
            for (int i : mono.alpha_word) term *= point_a[i];
            for (int j : mono.beta_word) term *= point_b[j];
            out += term;
        }
        return out;
    };

    StructureTensors t;
    t.dim_a = n;
    t.dim_b = m;
    auto [fa, fb] = series_gram_blocks(f);
    t.form_a = fa;
    t.form_b = fb;
    t.i_a = ss.basis.inv_a.transposed() * fa;
    t.i_b = m > 0 ? ss.basis.inv_b.transposed() * fb : Matrix(0, 0);
    t.r_ab = Matrix(n, m);
    t.s.assign(size_t(n) * n * n, Scalar(0));
    t.t.assign(size_t(m) * m * m, Scalar(0));
    t.r_abb.assign(size_t(n) * m * m, Scalar(0));

    // normalization: the composed triple derivative of a symmetric cubic
    // block carries weight 3! and the cyclic one weight 3, so dividing
    // reproduces the coefficients at the origin
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) t.r_ab.at(i, j) = eval(d2_alpha_beta(f, i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t.S(i, j, k) = eval(d3_alpha(f, i, j, k)) / Scalar(6);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                t.T(i, j, k) = eval(d3_beta(f, i, j, k)) / Scalar(3);

    auto fb_inv = m > 0 ? t.form_b.inverse() : std::make_optional(Matrix(0, 0));
    if (m > 0 && !fb_inv) throw index_error("degree-2 beta block singular");
    for (int a = 0; a < n; ++a)
        for (int b1 = 0; b1 < m; ++b1)
            for (int b2 = 0; b2 < m; ++b2) {
                Scalar v(0);
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        if (!fb_inv->at(p, q).is_zero())
                            v += t.r_ab.at(a, p) * fb_inv->at(p, q) * t.T(q, b1, b2);
                t.R3(a, b1, b2) = v;
            }
    return t;
}

} // namespace efa
