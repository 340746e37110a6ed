#pragma once

#include "efa/axioms.hpp"
#include "efa/io.hpp"

#include <iosfwd>

namespace efa {

enum class ReportFormat { text, structured };

struct RunOptions {
    std::vector<int> axioms;      // empty = the check_all default set
    AxiomCaps caps;
    Exec exec = Exec::parallel;
    ReportFormat format = ReportFormat::text;
    bool literal_axiom7 = false;  // documentation-only reading of the axiom-7 rhs
};

// exit codes: 0 all pass, 1 violation found, 2 input/usage error
int run_check_system(const CorrelationSystem& sys, const RunOptions& opts, std::ostream& os);
int run_check_series(const StructureSeries& ss, const RunOptions& opts, std::ostream& os);
int run_check_algebra(const ExtendedFrobeniusAlgebra& alg, const RunOptions& opts,
                      std::ostream& os);
int run_roundtrip(const CorrelationSystem& sys, int degree, const RunOptions& opts,
                  std::ostream& os);
int run_replay(const CorrelationSystem& sys, const std::string& token, std::ostream& os);
int run_eval(const StructureSeries& ss, const Vec& at_a, const Vec& at_b, bool as_float,
             std::ostream& os);

std::string format_witness(const Witness& w);

} // namespace efa
