#pragma once

#include "efa/report.hpp"
#include "efa/series.hpp"
#include "efa/system.hpp"

namespace efa {

// A Structure Series candidate: a symmetric tensor series together with the
// involution data of its basis.
struct StructureSeries {
    IndexBasis basis;
    TensorSeries series;

    StructureSeries(IndexBasis b, TensorSeries s) : basis(std::move(b)), series(std::move(s)) {
        if (basis.dim_a != series.dim_a() || basis.dim_b != series.dim_b())
            throw std::invalid_argument("series/basis dimension mismatch");
    }
};

// Structure Equations check. Axioms 1-3 are structural (coefficient
// symmetry, star-invariance, nondegenerate degree-2 blocks); axioms 4-7
// compare class-projected derivative contractions up to the common exact
// degree of both sides.
CheckReport check_structure_axiom(const StructureSeries& f, int axiom, int witness_cap = 5);
std::vector<CheckReport> check_structure_all(const StructureSeries& f, int witness_cap = 5);

// Theorem 5.1 conversions: coefficients are the correlator values
// themselves, symmetrically completed over each orbit.
TensorSeries series_from_system(const CorrelationSystem& sys, int degree);
CorrelationSystem system_from_series(const StructureSeries& f, bool extended = false);

// The degree-2 blocks c(i,j|) and c(|i,j) as matrices.
std::pair<Matrix, Matrix> series_gram_blocks(const TensorSeries& f);

} // namespace efa
