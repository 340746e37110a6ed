#pragma once

#include "efa/brackets.hpp"
#include "efa/report.hpp"

namespace efa {

// The serial path is the reference implementation; the parallel path
// partitions the instance enumeration across OpenMP workers and must produce
// a bitwise-identical report.
enum class Exec { serial, parallel };

struct AxiomCaps {
    int pool_a = 3;                   // interior pool size cap
    int pool_b = 4;                   // boundary pool size cap
    int witness_cap = 5;              // witnesses kept per report
    unsigned long long max_terms = 0; // enumeration budget; 0 = unlimited
    bool axiom7_literal = false;      // use the printed axiom-7 rhs reading
};

// Structural term count the checker would enumerate for one axiom.
unsigned long long estimate_terms(const CorrelationSystem& sys, int axiom, const AxiomCaps& caps);

// Brute-force verification of one axiom (1..8) over all basis-vector
// argument tuples and pools within the caps. Axioms 1-3 are structural.
// Instances whose terms would exceed the system caps are skipped; an axiom
// with no checkable instance reports `skipped`.
CheckReport check_axiom(const CorrelationSystem& sys, int axiom, const AxiomCaps& caps,
                        Exec exec = Exec::parallel);

// Axioms 1..8 in order; axiom 8 is only evaluated when the system is flagged
// extended, otherwise its report is `skipped` with a note.
std::vector<CheckReport> check_all(const CorrelationSystem& sys, const AxiomCaps& caps,
                                   Exec exec = Exec::parallel);

// Re-evaluate one bracket-axiom instance; returns (left, right).
std::pair<Scalar, Scalar> replay_instance(const CorrelationSystem& sys, int axiom,
                                          const Word& pool_a, const Word& pool_b,
                                          const Word& args_a, const Word& args_b);

} // namespace efa
