#include "efa/structure.hpp"
#include "efa/algebra.hpp"
#include "efa/axioms.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace efa;

namespace {

StructureSeries xi_series(const Scalar& xi, int degree = 6) {
    CorrelationSystem sys = test::xi_system(xi, degree, degree);
    return StructureSeries(sys.basis(), series_from_system(sys, degree));
}

} // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("rank-one series pass the structure equations for xi in {0,1}") {
    for (long xi : {0L, 1L}) {
        StructureSeries f = xi_series(Scalar(xi));
        for (int k = 1; k <= 7; ++k) {
            CAPTURE(xi);
            CAPTURE(k);
            CHECK(check_structure_axiom(f, k).status == CheckStatus::pass);
        }
    }
}

TEST_CASE("xi = 1/2 fails structure axiom 7 at the constant class") {
    StructureSeries f = xi_series(Scalar(1, 2));
    CheckReport rep = check_structure_axiom(f, 7);
    REQUIRE(rep.status == CheckStatus::fail);
    const Witness& w = rep.witnesses.front();
    // composed interior triple weight 6 against cyclic weight 3: the sides
    // carry 6*xi and 6*xi^2
    CHECK(w.left == Scalar(3));
    CHECK(w.right == Scalar(3, 2));
    CHECK(w.detail == "class [|]");
}

TEST_CASE("one-dimensional closed sector satisfies the associativity equation") {
    // F_a = c * a^3 with a 1-dim A and no boundary
    TensorSeries f(1, 0, 5);
    f.set(TensorMonomial{{0, 0}, {}}, Scalar(1));
    f.set(TensorMonomial{{0, 0, 0}, {}}, Scalar(5));
    StructureSeries ss(IndexBasis(1, 0), std::move(f));
    CHECK(check_structure_axiom(ss, 4).status == CheckStatus::pass);
    CHECK(check_structure_axiom(ss, 5).status == CheckStatus::skipped);
}

TEST_CASE("structure axiom 3 detects singular degree-2 blocks") {
    TensorSeries f(2, 0, 4);
    f.set(TensorMonomial{{0, 0}, {}}, Scalar(1));
    f.set(TensorMonomial{{0, 1}, {}}, Scalar(1));
    f.set(TensorMonomial{{1, 0}, {}}, Scalar(1));
    f.set(TensorMonomial{{1, 1}, {}}, Scalar(1));
    StructureSeries ss(IndexBasis(2, 0), std::move(f));
    CHECK(check_structure_axiom(ss, 3).status == CheckStatus::fail);
    CHECK(check_structure_axiom(ss, 4).status == CheckStatus::skipped);
}

TEST_CASE("series/system conversions") {
    SUBCASE("coefficients are the correlator values themselves") {
        std::map<CorrelatorKey, Scalar> table;
        table[canonical_key({0, 0}, {})] = Scalar(1);
        CorrelationSystem sys(IndexBasis(1, 0), 2, 0, table);
        TensorSeries f = series_from_system(sys, 2);
        CHECK(f.coeff(TensorMonomial{{0, 0}, {}}) == Scalar(1));
    }
    SUBCASE("cyclic identification of boundary coefficients") {
        TensorSeries f(1, 2, 2);
        f.set(TensorMonomial{{}, {0, 1}}, Scalar(1));
        f.set(TensorMonomial{{}, {1, 0}}, Scalar(1));
        f.set(TensorMonomial{{}, {0, 0}}, Scalar(1));
        f.set(TensorMonomial{{}, {1, 1}}, Scalar(1));
        f.set(TensorMonomial{{0, 0}, {}}, Scalar(1));
        StructureSeries ss(IndexBasis(1, 2), std::move(f));
        CorrelationSystem sys = system_from_series(ss);
        CHECK(sys.value({}, {0, 1}) == Scalar(1));
        CHECK(sys.value({}, {1, 0}) == Scalar(1));
    }
    SUBCASE("a rotation-inconsistent series is rejected") {
        TensorSeries f(1, 2, 2);
        f.set(TensorMonomial{{}, {0, 1}}, Scalar(1));
        f.set(TensorMonomial{{}, {1, 0}}, Scalar(2));
        f.set(TensorMonomial{{}, {0, 0}}, Scalar(1));
        f.set(TensorMonomial{{}, {1, 1}}, Scalar(1));
        f.set(TensorMonomial{{0, 0}, {}}, Scalar(1));
        StructureSeries ss(IndexBasis(1, 2), std::move(f));
        CHECK_THROWS_AS(system_from_series(ss), index_error);
    }
    SUBCASE("degree beyond the caps is rejected") {
        CorrelationSystem sys = test::xi_system(Scalar(1), 3, 3);
        CHECK_THROWS_AS(series_from_system(sys, 4), cap_error);
    }
}

TEST_CASE("round trips are exact on the shared range") {
    for (long xi : {0L, 1L}) {
        CorrelationSystem sys = test::xi_system(Scalar(xi), 6, 6);
        StructureSeries ss(sys.basis(), series_from_system(sys, 6));
        CorrelationSystem back = system_from_series(ss);
        for (const auto& [key, v] : sys.table()) {
            if (key.degree() > 6) continue;
            CHECK(back.value(key) == v);
        }
        for (const auto& [key, v] : back.table()) CHECK(sys.value(key) == v);
    }
}

TEST_CASE("verdicts agree between the series and bracket routes") {
    // rank-one family at full depth: pools are degenerate, both routes see
    // the same constraints
    AxiomCaps caps;
    caps.pool_a = 3;
    caps.pool_b = 3;
    for (auto xi : {Scalar(0), Scalar(1), Scalar(1, 2)}) {
        CorrelationSystem sys = test::xi_system(xi, 6, 6);
        StructureSeries f(sys.basis(), series_from_system(sys, 6));
        for (int k = 4; k <= 7; ++k) {
            CAPTURE(xi.str());
            CAPTURE(k);
            CHECK(check_structure_axiom(f, k).status == check_axiom(sys, k, caps).status);
        }
    }

    // the bulk-unit algebra fails relation seven on both routes
    auto bulk = test::bulk_unit_algebra(1);
    CorrelationSystem bsys = correlators_from_algebra(bulk, 6, 6);
    StructureSeries bf(bsys.basis(), series_from_system(bsys, 6));
    AxiomCaps bcaps;
    bcaps.pool_a = 2;
    bcaps.pool_b = 2;
    for (int k = 4; k <= 7; ++k) {
        CAPTURE(k);
        CHECK(check_structure_axiom(bf, k).status == check_axiom(bsys, k, bcaps).status);
    }

    // matrix algebra, compared where the class calculus is exact: at
    // truncation 3 both routes reduce to the empty-pool constraints
    auto alg = test::km2_algebra();
    CorrelationSystem ksys = correlators_from_algebra(alg, 3, 3);
    StructureSeries kf(ksys.basis(), series_from_system(ksys, 3));
    AxiomCaps kcaps;
    kcaps.pool_a = 0;
    kcaps.pool_b = 0;
    for (int k = 4; k <= 7; ++k) {
        CAPTURE(k);
        CheckReport series_rep = check_structure_axiom(kf, k);
        CheckReport bracket_rep = check_axiom(ksys, k, kcaps);
        CHECK(series_rep.status == bracket_rep.status);
    }
}

TEST_CASE("a perturbed table fails the same axioms on both routes") {
    auto bulk = test::bulk_unit_algebra(1);
    CorrelationSystem base = correlators_from_algebra(bulk, 6, 6);
    std::map<CorrelatorKey, Scalar> table = base.table();
    table[canonical_key({}, {0, 0, 0})] = Scalar(2); // break <b^3>
    CorrelationSystem sys(base.basis(), 6, 6, table);
    StructureSeries f(sys.basis(), series_from_system(sys, 6));
    AxiomCaps caps;
    caps.pool_a = 1;
    caps.pool_b = 1;
    for (int k : {5, 6, 7}) {
        CAPTURE(k);
        CHECK(check_structure_axiom(f, k).status == check_axiom(sys, k, caps).status);
    }
}

TEST_SUITE_END();
