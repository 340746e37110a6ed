// Compares the serial reference enumeration against the OpenMP-parallel one
// on the matrix-algebra system and verifies the reports agree.

#include "efa/axioms.hpp"
#include "efa/algebra.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

efa::ExtendedFrobeniusAlgebra matrix_algebra(int d) {
    using efa::Scalar;
    int n = 1, m = d * d, dim = n + m;
    efa::ExtendedFrobeniusAlgebra alg;
    alg.dim_a = n;
    alg.dim_b = m;
    alg.mult.assign(dim, std::vector<efa::Vec>(dim, efa::Vec(dim)));
    alg.form = efa::Matrix(dim, dim);
    alg.inv = efa::Matrix(dim, dim);
    auto unit_idx = [&](int a, int b) { return 1 + a * d + b; };
    alg.mult[0][0][0] = Scalar(1);
    alg.form.at(0, 0) = Scalar(1);
    alg.inv.at(0, 0) = Scalar(1);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int i = unit_idx(a, b);
            alg.inv.at(unit_idx(b, a), i) = Scalar(1); // transpose
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    int j = unit_idx(c, e);
                    if (b == c) alg.mult[i][j][unit_idx(a, e)] = Scalar(1);
                    alg.form.at(i, j) = Scalar(b == c && a == e ? 1 : 0);
                }
        }
    return alg;
}

double run(const efa::CorrelationSystem& sys, const efa::AxiomCaps& caps, efa::Exec exec,
           std::vector<efa::CheckReport>& out) {
    auto start = std::chrono::steady_clock::now();
    out.clear();
    for (int k = 4; k <= 7; ++k) out.push_back(efa::check_axiom(sys, k, caps, exec));
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_reports(const std::vector<efa::CheckReport>& a,
                  const std::vector<efa::CheckReport>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].status != b[i].status || a[i].terms_enumerated != b[i].terms_enumerated ||
            a[i].witnesses.size() != b[i].witnesses.size())
            return false;
        for (size_t w = 0; w < a[i].witnesses.size(); ++w) {
            const auto &wa = a[i].witnesses[w], &wb = b[i].witnesses[w];
            if (wa.pool_a != wb.pool_a || wa.pool_b != wb.pool_b || wa.args_a != wb.args_a ||
                wa.args_b != wb.args_b || !(wa.left == wb.left) || !(wa.right == wb.right))
                return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int pool_a = 2, pool_b = 2;
    if (argc > 1) pool_a = std::atoi(argv[1]);
    if (argc > 2) pool_b = std::atoi(argv[2]);

    auto alg = matrix_algebra(2);
    efa::CorrelationSystem sys = efa::correlators_from_algebra(alg, 4, 6);
    efa::AxiomCaps caps;
    caps.pool_a = pool_a;
    caps.pool_b = pool_b;

    std::cout << "matrix-algebra system, dim_b=4, key caps (4,6), pools (" << pool_a << ","
              << pool_b << ")\n";

    std::vector<efa::CheckReport> serial_reports, parallel_reports;
    double t_serial = run(sys, caps, efa::Exec::serial, serial_reports);
    std::cout << "serial reference: " << t_serial << " s\n";

#ifdef _OPENMP
    std::cout << "openmp threads:   " << omp_get_max_threads() << "\n";
#endif
    double t_parallel = run(sys, caps, efa::Exec::parallel, parallel_reports);
    std::cout << "openmp parallel:  " << t_parallel << " s  (speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";

    if (!same_reports(serial_reports, parallel_reports)) {
        std::cout << "MISMATCH: parallel report differs from the serial reference\n";
        return 1;
    }
    std::cout << "reports identical across execution policies\n";
    unsigned long long terms = 0;
    for (const auto& rep : serial_reports) terms += rep.terms_enumerated;
    std::cout << "terms enumerated per pass: " << terms << "\n";
    return 0;
}
