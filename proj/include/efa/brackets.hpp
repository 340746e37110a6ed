#pragma once

#include "efa/system.hpp"

namespace efa {

struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contraction brackets of the genus-0 cut relations. Pools are multisets of
// basis indices (passed sorted); distinguished arguments are basis indices.
// Sums follow the all-permutations convention: a pool with repeated entries
// contributes each value with its full label multiplicity.
//
// Boundary pools distribute over the gaps between distinguished boundary
// points so that every glued boundary configuration is enumerated exactly
// once per piece assignment. This is the reading under which systems induced
// from unital algebras satisfy the relations; see README.

Scalar contract_A4(const CorrelationSystem& sys, const Word& pool_a, int x1, int x2, int x3,
                   int x4);
Scalar contract_B5(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2, int y3, int y4);
Scalar contract_6(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int x,
                  int y1, int y2);
Scalar contract_7_lhs(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b,
                      int x1, int x2, int y);
// Symmetrized over the two (x1,x2) orderings and halved, so that it can be
// compared against contract_7_lhs directly.
Scalar contract_7_rhs(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b,
                      int x1, int x2, int y);
// The reading printed in the source text, which places an x inside the
// y-bearing factor. Kept for documentation; it does not reproduce the rank-1
// example values.
Scalar contract_7_rhs_literal(const CorrelationSystem& sys, const Word& pool_a,
                              const Word& pool_b, int x1, int x2, int y);
Scalar contract_8a(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2);
Scalar contract_8b(const CorrelationSystem& sys, const Word& pool_a, const Word& pool_b, int y1,
                   int y2);

// Multilinear extensions over coordinate vectors (pools included).
Scalar contract_A4(const CorrelationSystem& sys, const std::vector<Vec>& pool_a, const Vec& x1,
                   const Vec& x2, const Vec& x3, const Vec& x4);
Scalar contract_B5(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2, const Vec& y3,
                   const Vec& y4);
Scalar contract_6(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                  const std::vector<Vec>& pool_b, const Vec& x, const Vec& y1, const Vec& y2);
Scalar contract_7_lhs(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                      const std::vector<Vec>& pool_b, const Vec& x1, const Vec& x2, const Vec& y);
Scalar contract_7_rhs(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                      const std::vector<Vec>& pool_b, const Vec& x1, const Vec& x2, const Vec& y);
Scalar contract_8a(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2);
Scalar contract_8b(const CorrelationSystem& sys, const std::vector<Vec>& pool_a,
                   const std::vector<Vec>& pool_b, const Vec& y1, const Vec& y2);

// Structural term counts (labeled-permutation convention), used for the
// deterministic enumeration budget and the terms_enumerated report field.
unsigned long long bracket_terms_A4(int r, int n);
unsigned long long bracket_terms_B5(int r, int p, int m);
unsigned long long bracket_terms_6(int r, int p, int m);
unsigned long long bracket_terms_7_lhs(int r, int p, int n);
unsigned long long bracket_terms_7_rhs(int r, int p, int m);
unsigned long long bracket_terms_8a(int r, int p, int n);
unsigned long long bracket_terms_8b(int r, int p, int m);

// Largest key shapes a bracket touches; an axiom instance is evaluable only
// when every shape fits within the system caps.
bool fits_A4(const CorrelationSystem& sys, int r);
bool fits_B5(const CorrelationSystem& sys, int r, int p);
bool fits_6(const CorrelationSystem& sys, int r, int p);
bool fits_7(const CorrelationSystem& sys, int r, int p);
bool fits_8(const CorrelationSystem& sys, int r, int p);

} // namespace efa
