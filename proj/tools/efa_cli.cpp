// Command-line verification runner for disk correlation systems, structure
// series, and extended Frobenius algebras.

#include "efa/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

// "1-8", "4,7", "1-3,5"
std::vector<int> parse_axiom_list(const std::string& spec) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(std::stoi(item));
        } else {
            int lo = std::stoi(item.substr(0, dash));
            int hi = std::stoi(item.substr(dash + 1));
            for (int k = lo; k <= hi; ++k) out.push_back(k);
        }
    }
    return out;
}

efa::Vec parse_point(const std::string& spec, int dim, const char* what) {
    efa::Vec out;
    std::istringstream in(spec);
    std::string tok;
    while (in >> tok) out.push_back(efa::Scalar::parse(tok));
    if (int(out.size()) != dim)
        throw std::invalid_argument(std::string("expected ") + std::to_string(dim) + " " + what +
                                    " coordinates");
    return out;
}

unsigned long long env_max_terms() {
    const char* v = std::getenv("EFA_MAX_TERMS");
    if (!v || !*v) return 0;
    return std::strtoull(v, nullptr, 10);
}

const char* cost_note =
    "Enumeration cost is factorial in the pool caps: an axiom-5 instance sums\n"
    "r! * p! * C(p+3,3) * m^2 terms (r, p = pool sizes). Rough budgets per\n"
    "instance at m=4: pools (1,1): ~2e2 terms; (2,2): ~4e3; (3,3): ~3e5;\n"
    "(3,4): ~4e6. EFA_MAX_TERMS aborts runs beyond a total term budget.";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for systems of disk correlation functions"};
    app.footer(cost_note);
    app.require_subcommand(1);

    std::string file, out_path, axioms_spec, replay_token, format = "text", at_spec;
    int pool_interior = 3, pool_boundary = 4;
    int max_interior = 3, max_boundary = 4, degree = 6;
    int witnesses = 5, threads = 0;
    bool serial = false, literal7 = false, extended = false, as_float = false;

    auto add_common = [&](CLI::App* cmd, bool pools) {
        cmd->add_option("file", file, "input document")->required();
        cmd->add_option("--format", format, "text|structured")
            ->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--witnesses", witnesses, "witnesses kept per axiom (default 5)");
        cmd->add_flag("--serial", serial, "use the serial reference enumeration");
        cmd->add_option("--threads", threads, "worker count for the parallel enumeration");
        if (pools) {
            cmd->add_option("--max-interior", pool_interior,
                            "interior pool size cap (default 3)");
            cmd->add_option("--max-boundary", pool_boundary,
                            "boundary pool size cap (default 4)");
        }
    };

    auto* check_system = app.add_subcommand("check-system", "verify axioms 1-8 of a system");
    add_common(check_system, true);
    check_system->add_option("--axioms", axioms_spec, "axiom list, e.g. 1-8 or 4,7");
    check_system->add_flag("--literal-axiom7", literal7,
                           "use the literal printed axiom-7 rhs (documentation)");
    check_system->add_option("--replay", replay_token,
                             "re-evaluate one witness: 'axiom=K poolA=(..) poolB=(..) args=(..|..)'");

    auto* check_series = app.add_subcommand("check-series", "verify structure axioms 1-7");
    add_common(check_series, false);
    check_series->add_option("--axioms", axioms_spec, "axiom list, e.g. 1-7");

    auto* check_algebra =
        app.add_subcommand("check-algebra", "verify the algebra axioms and tensor conditions");
    add_common(check_algebra, false);

    auto* derive = app.add_subcommand("derive-system",
                                      "build the correlator system of a unital algebra");
    derive->add_option("file", file, "algebra document")->required();
    derive->add_option("--max-interior", max_interior, "interior key cap (default 3)");
    derive->add_option("--max-boundary", max_boundary, "boundary key cap (default 4)");
    derive->add_flag("--extended", extended, "flag the derived system extended");
    derive->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* roundtrip = app.add_subcommand(
        "roundtrip", "system -> series -> system identity on keys within a degree");
    add_common(roundtrip, false);
    roundtrip->add_option("--degree", degree, "series truncation degree (default 6)");

    auto* eval = app.add_subcommand("eval", "hat tensors of a series at a point");
    eval->add_option("file", file, "series document")->required();
    eval->add_option("--at", at_spec, "point coordinates 'a1 .. an | b1 .. bm' (default origin)");
    eval->add_flag("--float", as_float, "print decimal approximations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        efa::RunOptions opts;
        opts.caps.pool_a = pool_interior;
        opts.caps.pool_b = pool_boundary;
        opts.caps.witness_cap = witnesses;
        opts.caps.max_terms = env_max_terms();
        opts.exec = serial ? efa::Exec::serial : efa::Exec::parallel;
        opts.format = format == "structured" ? efa::ReportFormat::structured
                                             : efa::ReportFormat::text;
        opts.literal_axiom7 = literal7;
        if (!axioms_spec.empty()) opts.axioms = parse_axiom_list(axioms_spec);

        if (*check_system) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::system) throw std::runtime_error("not a system file");
            if (!replay_token.empty())
                return efa::run_replay(*doc.system, replay_token, std::cout);
            return efa::run_check_system(*doc.system, opts, std::cout);
        }
        if (*check_series) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::series) throw std::runtime_error("not a series file");
            return efa::run_check_series(*doc.series, opts, std::cout);
        }
        if (*check_algebra) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::algebra)
                throw std::runtime_error("not an algebra file");
            return efa::run_check_algebra(*doc.algebra, opts, std::cout);
        }
        if (*derive) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::algebra)
                throw std::runtime_error("not an algebra file");
            efa::CorrelationSystem sys = efa::correlators_from_algebra(
                *doc.algebra, max_interior, max_boundary, extended);
            std::string text = efa::print_system(sys);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
                out << text;
            }
            return 0;
        }
        if (*roundtrip) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::system) throw std::runtime_error("not a system file");
            return efa::run_roundtrip(*doc.system, degree, opts, std::cout);
        }
        if (*eval) {
            auto doc = efa::load_document(file);
            if (doc.kind != efa::DocKind::series) throw std::runtime_error("not a series file");
            int n = doc.series->series.dim_a(), m = doc.series->series.dim_b();
            efa::Vec at_a(n), at_b(m);
            if (!at_spec.empty()) {
                auto bar = at_spec.find('|');
                std::string a_part = at_spec.substr(0, bar);
                std::string b_part = bar == std::string::npos ? "" : at_spec.substr(bar + 1);
                at_a = parse_point(a_part, n, "alpha");
                at_b = parse_point(b_part, m, "beta");
            }
            return efa::run_eval(*doc.series, at_a, at_b, as_float, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
