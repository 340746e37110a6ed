// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact rational arithmetic throughout, so tolerance is zero) and prints one
// pass/fail line per criterion.

#include "efa/axioms.hpp"
#include "efa/io.hpp"
#include "efa/runner.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace efa;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++g_failures;
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " — " << what << " ("
              << secs << " s)" << (error.empty() ? "" : "  [" + error + "]") << "\n";
}

bool all_pass_or_skipped(const std::vector<CheckReport>& reports) {
    for (const CheckReport& rep : reports)
        if (rep.status == CheckStatus::fail) return false;
    return true;
}

// ---- criterion 1 ----
bool xi_reproduction() {
    for (long xi : {0L, 1L}) {
        CorrelationSystem sys = test::xi_system(Scalar(xi));
        for (AxiomCaps caps : {AxiomCaps{1, 1}, AxiomCaps{2, 3}}) {
            auto reports = check_all(sys, caps);
            if (reports.size() != 8 || !all_pass_or_skipped(reports)) return false;
            // within the (3,3) key caps the annulus axiom has no checkable
            // instance, so "pass" for axiom 8 means skipped here
            for (int k = 0; k < 7; ++k)
                if (reports[k].status != CheckStatus::pass) return false;
        }
    }
    CorrelationSystem half = test::xi_system(Scalar(1, 2));
    AxiomCaps caps{1, 1};
    CheckReport rep = check_axiom(half, 7, caps);
    if (rep.status != CheckStatus::fail || rep.witnesses.empty()) return false;
    const Witness& w = rep.witnesses.front();
    if (!(w.pool_a.empty() && w.pool_b.empty() && w.args_a == Word{0, 0} && w.args_b == Word{0}))
        return false;
    // the two sides differ by exactly xi - xi^2
    Scalar xi(1, 2);
    return w.left == xi && w.right == xi * xi && w.left - w.right == xi - xi * xi;
}

// ---- criterion 2 ----
bool km2_oracle_equivalence() {
    auto alg = test::km2_algebra();
    CorrelationSystem sys = correlators_from_algebra(alg, 2, 4);
    AxiomCaps caps{2, 2};
    auto reports = check_all(sys, caps);
    if (!all_pass_or_skipped(reports)) return false;

    // every evaluable bracket value matches the independent product oracle
    test::AlgebraOracle oracle(alg);
    std::vector<Word> pools_a, pools_b;
    for (int r = 0; r <= 2; ++r)
        for (int p = 0; p <= 2; ++p) {
            // representative multisets; A is one-dimensional so pools are
            // powers of the single generator, B pools range over all pairs
            Word pa(r, 0);
            std::function<void(Word&, int, int)> rec = [&](Word& pb, int start, int left) {
                if (left == 0) {
                    if (fits_B5(sys, r, int(pb.size()))) {
                        for (int y1 = 0; y1 < 4; ++y1)
                            for (int y2 = 0; y2 < 4; ++y2) {
                                if (contract_B5(sys, pa, pb, y1, y2, (y1 + 1) % 4, (y2 + 3) % 4) !=
                                    oracle.b5(pa, pb, y1, y2, (y1 + 1) % 4, (y2 + 3) % 4))
                                    throw std::runtime_error("axiom-5 bracket visits the oracle");
                            }
                    }
                    if (fits_6(sys, r, int(pb.size()))) {
                        for (int y1 = 0; y1 < 4; ++y1)
                            if (contract_6(sys, pa, pb, 0, y1, (y1 + 2) % 4) !=
                                oracle.c6(pa, pb, 0, y1, (y1 + 2) % 4))
                                throw std::runtime_error("axiom-6 bracket vs oracle");
                    }
                    if (fits_7(sys, r, int(pb.size()))) {
                        for (int y = 0; y < 4; ++y) {
                            if (contract_7_lhs(sys, pa, pb, 0, 0, y) !=
                                oracle.c7_lhs(pa, pb, 0, 0, y))
                                throw std::runtime_error("axiom-7 lhs vs oracle");
                            if (contract_7_rhs(sys, pa, pb, 0, 0, y) !=
                                oracle.c7_rhs(pa, pb, 0, 0, y))
                                throw std::runtime_error("axiom-7 rhs vs oracle");
                        }
                    }
                    if (fits_8(sys, r, int(pb.size()))) {
                        for (int y1 = 0; y1 < 4; ++y1)
                            for (int y2 = 0; y2 < 4; ++y2) {
                                if (contract_8a(sys, pa, pb, y1, y2) !=
                                    oracle.c8a(pa, pb, y1, y2))
                                    throw std::runtime_error("axiom-8a vs oracle");
                                if (contract_8b(sys, pa, pb, y1, y2) !=
                                    oracle.c8b(pa, pb, y1, y2))
                                    throw std::runtime_error("axiom-8b vs oracle");
                            }
                    }
                    return;
                }
                for (int j = start; j < 4; ++j) {
                    pb.push_back(j);
                    rec(pb, j, left - 1);
                    pb.pop_back();
                }
            };
            Word pb;
            rec(pb, 0, p);
            if (fits_A4(sys, r))
                if (contract_A4(sys, pa, 0, 0, 0, 0) != oracle.a4(pa, 0, 0, 0, 0))
                    return false;
        }
    return true;
}

// ---- criterion 3 ----
bool roundtrip_theorem51() {
    std::vector<CorrelationSystem> corpus;
    corpus.push_back(test::xi_system(Scalar(0), 6, 6));
    corpus.push_back(test::xi_system(Scalar(1), 6, 6));
    corpus.push_back(correlators_from_algebra(test::km2_algebra(), 6, 6));
    for (const CorrelationSystem& sys : corpus) {
        StructureSeries ss(sys.basis(), series_from_system(sys, 6));
        CorrelationSystem back = system_from_series(ss);
        for (const auto& [key, v] : sys.table())
            if (key.degree() <= 6 && back.value(key) != v) return false;
        for (const auto& [key, v] : back.table())
            if (sys.value(key) != v) return false;
    }
    return true;
}

// ---- criterion 4 ----
bool theorem61_pipeline() {
    auto alg = test::km2_algebra();
    CorrelationSystem sys = correlators_from_algebra(alg, 4, 4);
    StructureSeries ss(sys.basis(), series_from_system(sys, 4));
    StructureTensors at_origin = eval_series_at_point(ss, Vec{Scalar(0)}, Vec(4, Scalar(0)));
    StructureTensors direct = structure_tensors(alg);
    if (!(at_origin == direct)) return false;
    if (check_conditions_1_9(at_origin).status != CheckStatus::pass) return false;
    ExtendedFrobeniusAlgebra rebuilt = tensors_to_algebra(at_origin);
    return rebuilt.mult == alg.mult && rebuilt.form == alg.form && rebuilt.inv == alg.inv;
}

// ---- criterion 5 ----
bool random_equivalence() {
    test::Rng rng(2026);
    int passing = 0, failing = 0;
    for (int round = 0; round < 24; ++round) {
        ExtendedFrobeniusAlgebra alg;
        switch (round % 6) {
            case 0: alg = test::km2_algebra(); break;
            case 1: alg = test::bulk_unit_algebra(2); break;
            case 2: alg = test::dual_numbers_algebra(); break;
            default: {
                int n = 1 + rng.below(2), m = rng.below(3);
                if (round % 6 == 3) m = 4;
                int d = n + m;
                alg.dim_a = n;
                alg.dim_b = m;
                alg.mult.assign(d, std::vector<Vec>(d, Vec(d)));
                alg.form = Matrix(d, d);
                alg.inv = Matrix::identity(d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        for (int k = 0; k < d; ++k) alg.mult[i][j][k] = rng.small_scalar();
                        Scalar v = rng.small_scalar();
                        alg.form.at(i, j) = v;
                        alg.form.at(j, i) = v;
                    }
                break;
            }
        }
        if (round >= 12 && round % 6 < 3) {
            // perturb one structure constant of an honest algebra
            alg.mult[rng.below(alg.dim())][rng.below(alg.dim())][rng.below(alg.dim())] +=
                Scalar(1, 2);
        }
        bool efa_ok = check_efa(alg).status == CheckStatus::pass;
        bool cond_ok = check_conditions_1_9(structure_tensors(alg)).status == CheckStatus::pass;
        if (efa_ok != cond_ok) return false;
        (efa_ok ? passing : failing) += 1;
    }
    return passing >= 4 && failing >= 4;
}

// ---- criterion 6 ----
bool basis_invariance() {
    test::Rng rng(4099);
    AxiomCaps caps{1, 1};

    auto statuses = [&caps](const CorrelationSystem& sys) {
        std::vector<CheckStatus> out;
        for (const CheckReport& rep : check_all(sys, caps)) out.push_back(rep.status);
        return out;
    };

    int rounds = 0;
    for (auto base : {test::xi_system(Scalar(1), 4, 4, true), test::xi_system(Scalar(1, 2), 4, 4, true)}) {
        auto expect = statuses(base);
        for (int round = 0; round < 5; ++round, ++rounds) {
            Matrix pa = rng.invertible(1), pb = rng.invertible(1);
            if (statuses(base.change_basis(pa, pb)) != expect) return false;
        }
    }
    CorrelationSystem km2 = correlators_from_algebra(test::km2_algebra(), 2, 4, true);
    auto expect = statuses(km2);
    for (int round = 0; round < 5; ++round, ++rounds) {
        Matrix pa = rng.invertible(1), pb = rng.invertible(4);
        if (statuses(km2.change_basis(pa, pb)) != expect) return false;
    }
    return rounds >= 10;
}

// ---- criterion 7 ----
bool closed_sector_degeneration() {
    auto alg = test::dual_numbers_algebra();
    CorrelationSystem sys = correlators_from_algebra(alg, 5, 0);
    StructureSeries ss(sys.basis(), series_from_system(sys, 5));
    if (check_structure_axiom(ss, 4).status != CheckStatus::pass) return false;
    // the independent oracle: associativity of the algebra itself
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Vec lhs = alg.mul(alg.mul(alg.basis_vec(i), alg.basis_vec(j)), alg.basis_vec(k));
                Vec rhs = alg.mul(alg.basis_vec(i), alg.mul(alg.basis_vec(j), alg.basis_vec(k)));
                if (lhs != rhs) return false;
            }
    return true;
}

// ---- criterion 8 ----
bool casimir_identities() {
    std::vector<std::pair<Matrix, Matrix>> corpus; // (form, involution)
    auto add_algebra = [&](const ExtendedFrobeniusAlgebra& alg) {
        int n = alg.dim_a, m = alg.dim_b;
        Matrix fa(n, n), ia(n, n), fb(m, m), ib(m, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                fa.at(i, j) = alg.form.at(i, j);
                ia.at(i, j) = alg.inv.at(i, j);
            }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                fb.at(i, j) = alg.form.at(n + i, n + j);
                ib.at(i, j) = alg.inv.at(n + i, n + j);
            }
        corpus.emplace_back(fa, ia);
        if (m > 0) corpus.emplace_back(fb, ib);
    };
    add_algebra(test::km2_algebra());
    add_algebra(test::bulk_unit_algebra(2));
    add_algebra(test::dual_numbers_algebra());
    test::Rng rng(55);
    while (corpus.size() < 12) {
        int dim = 1 + rng.below(3);
        Matrix form(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                Scalar v = rng.small_scalar();
                form.at(i, j) = v;
                form.at(j, i) = v;
            }
        if (!form.inverse()) continue;
        corpus.emplace_back(form, Matrix::identity(dim));
    }
    for (const auto& [form, inv] : corpus) {
        Matrix k = casimir(form, inv);
        // sum_i (x, e_i*) K[i][j] e_j = x, i.e. (form * inv) * K = identity
        if (!((form * inv) * k == Matrix::identity(form.rows()))) return false;
    }
    return true;
}

} // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic, zero tolerance)\n";
    criterion(1, "rank-one reproduction: axioms pass for xi in {0,1}, axiom 7 fails for xi=1/2 "
                 "by exactly xi - xi^2",
              xi_reproduction);
    criterion(2, "matrix-algebra system passes the checker and matches the independent product "
                 "oracle on every bracket",
              km2_oracle_equivalence);
    criterion(3, "series/system round trip is the identity on all keys of degree <= 6",
              roundtrip_theorem51);
    criterion(4, "series at the origin reproduces the structure tensors, passes conditions 1-9, "
                 "and rebuilds the algebra entrywise",
              theorem61_pipeline);
    criterion(5, "defining axioms and tensor conditions agree on 24 randomized small algebras",
              random_equivalence);
    criterion(6, "axiom verdicts are invariant under 15 random invertible basis changes",
              basis_invariance);
    criterion(7, "closed-sector degeneration: structure axiom 4 holds for a 2-dim commutative "
                 "Frobenius algebra and matches direct associativity",
              closed_sector_degeneration);
    criterion(8, "starred casimir contraction identity holds exactly on the form corpus",
              casimir_identities);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
