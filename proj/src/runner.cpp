#include "efa/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace efa {
namespace {

std::string word_str(const Word& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i] + 1);
    }
    return s + ")";
}

std::string args_str(const Word& a, const Word& b) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(a[i] + 1);
    }
    s += a.empty() ? "|" : " |";
    for (size_t j = 0; j < b.size(); ++j) {
        s += ' ';
        s += std::to_string(b[j] + 1);
    }
    return s + ")";
}

nlohmann::ordered_json witness_json(const Witness& w) {
    nlohmann::ordered_json j;
    auto indices = [](const Word& word) {
        std::vector<int> out;
        for (int i : word) out.push_back(i + 1);
        return out;
    };
    j["pool_a"] = indices(w.pool_a);
    j["pool_b"] = indices(w.pool_b);
    j["args_a"] = indices(w.args_a);
    j["args_b"] = indices(w.args_b);
    j["lhs"] = w.left.str();
    j["rhs"] = w.right.str();
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

nlohmann::ordered_json report_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["axiom"] = rep.axiom;
    j["status"] = to_string(rep.status);
    j["instances_checked"] = rep.instances_checked;
    j["instances_skipped"] = rep.instances_skipped;
    j["terms_enumerated"] = rep.terms_enumerated;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const Witness& w : rep.witnesses) j["witnesses"].push_back(witness_json(w));
    return j;
}

int emit_reports(const std::vector<CheckReport>& reports, const char* label,
                 const RunOptions& opts, std::ostream& os) {
    bool failed = false;
    for (const CheckReport& rep : reports) failed = failed || rep.status == CheckStatus::fail;

    if (opts.format == ReportFormat::structured) {
        nlohmann::ordered_json j;
        j["kind"] = label;
        j["result"] = failed ? "fail" : "pass";
        j["axioms"] = nlohmann::ordered_json::array();
        for (const CheckReport& rep : reports) j["axioms"].push_back(report_json(rep));
        os << j.dump(2) << "\n";
        return failed ? 1 : 0;
    }

    for (const CheckReport& rep : reports) {
        os << label << " " << rep.axiom << ": " << to_string(rep.status) << " ("
           << rep.instances_checked << " instances";
        if (rep.instances_skipped) os << ", " << rep.instances_skipped << " skipped";
        os << ", " << rep.terms_enumerated << " terms)";
        if (!rep.note.empty()) os << " [" << rep.note << "]";
        os << "\n";
        for (const Witness& w : rep.witnesses)
            os << "  witness axiom=" << rep.axiom << " " << format_witness(w) << "\n";
    }
    os << "result: " << (failed ? "FAIL" : "PASS") << "\n";
    return failed ? 1 : 0;
}

} // namespace

std::string format_witness(const Witness& w) {
    std::string s = "poolA=" + word_str(w.pool_a) + " poolB=" + word_str(w.pool_b) +
                    " args=" + args_str(w.args_a, w.args_b) + " lhs=" + w.left.str() +
                    " rhs=" + w.right.str();
    if (!w.detail.empty()) s += " detail=\"" + w.detail + "\"";
    return s;
}

int run_check_system(const CorrelationSystem& sys, const RunOptions& opts, std::ostream& os) {
    std::vector<CheckReport> reports;
    AxiomCaps caps = opts.caps;
    caps.axiom7_literal = opts.literal_axiom7;
    if (opts.axioms.empty()) {
        reports = check_all(sys, caps, opts.exec);
    } else {
        for (int k : opts.axioms) reports.push_back(check_axiom(sys, k, caps, opts.exec));
    }
    return emit_reports(reports, "axiom", opts, os);
}

int run_check_series(const StructureSeries& ss, const RunOptions& opts, std::ostream& os) {
    std::vector<CheckReport> reports;
    if (opts.axioms.empty()) {
        reports = check_structure_all(ss, opts.caps.witness_cap);
    } else {
        for (int k : opts.axioms) {
            if (k < 1 || k > 7) throw std::invalid_argument("series axioms are 1..7");
            reports.push_back(check_structure_axiom(ss, k, opts.caps.witness_cap));
        }
    }
    return emit_reports(reports, "axiom", opts, os);
}

int run_check_algebra(const ExtendedFrobeniusAlgebra& alg, const RunOptions& opts,
                      std::ostream& os) {
    std::vector<CheckReport> reports;
    CheckReport efa = check_efa(alg, opts.caps.witness_cap);
    efa.axiom = 1;
    efa.note = "defining axioms on all basis tuples";
    reports.push_back(std::move(efa));
    CheckReport cond = check_conditions_1_9(structure_tensors(alg), opts.caps.witness_cap);
    cond.axiom = 2;
    cond.note = "tensor conditions 1-9";
    reports.push_back(std::move(cond));
    return emit_reports(reports, "check", opts, os);
}

int run_roundtrip(const CorrelationSystem& sys, int degree, const RunOptions& opts,
                  std::ostream& os) {
    TensorSeries f = series_from_system(sys, degree);
    StructureSeries ss(sys.basis(), std::move(f));
    CorrelationSystem back = system_from_series(ss, sys.extended());
    unsigned long long compared = 0, mismatched = 0;
    std::ostringstream detail;
    auto compare_side = [&](const CorrelationSystem& a, const CorrelationSystem& b) {
        for (const auto& [key, v] : a.table()) {
            if (key.degree() > degree) continue;
            ++compared;
            Scalar other = b.fits(key.k(), key.l()) ? b.value(key) : Scalar(0);
            if (other != v) {
                ++mismatched;
                if (mismatched <= 5)
                    detail << "  key " << key.str() << ": " << v.str() << " vs " << other.str()
                           << "\n";
            }
        }
    };
    compare_side(sys, back);
    compare_side(back, sys);
    if (opts.format == ReportFormat::structured) {
        nlohmann::ordered_json j;
        j["kind"] = "roundtrip";
        j["degree"] = degree;
        j["keys_compared"] = compared;
        j["mismatches"] = mismatched;
        j["result"] = mismatched ? "fail" : "pass";
        os << j.dump(2) << "\n";
    } else {
        os << "roundtrip degree " << degree << ": " << (mismatched ? "FAIL" : "PASS") << " ("
           << compared << " keys compared)\n"
           << detail.str();
        os << "result: " << (mismatched ? "FAIL" : "PASS") << "\n";
    }
    return mismatched ? 1 : 0;
}

int run_replay(const CorrelationSystem& sys, const std::string& token, std::ostream& os) {
    // token: axiom=K poolA=(..) poolB=(..) args=(.. | ..)
    int axiom = 0;
    Word pool_a, pool_b, args_a, args_b;
    std::istringstream in(token);
    std::string field;
    bool saw_axiom = false, saw_args = false;
    auto parse_words = [](const std::string& body, Word& first, Word* second) {
        Word* cur = &first;
        std::string num;
        auto flush = [&] {
            if (num.empty()) return;
            int v = std::stoi(num);
            if (v < 1) throw std::invalid_argument("indices are 1-based");
            cur->push_back(v - 1);
            num.clear();
        };
        for (char c : body) {
            if (isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (c == '|') {
                flush();
                if (!second) throw std::invalid_argument("unexpected '|'");
                cur = second;
            } else if (c == ' ' || c == '(' || c == ')') {
                flush();
            } else {
                throw std::invalid_argument(std::string("bad character '") + c + "'");
            }
        }
        flush();
    };
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad replay token: " + field);
        std::string key = field.substr(0, eq);
        std::string rest = field.substr(eq + 1);
        // re-join parenthesized groups that contain spaces
        while ((std::count(rest.begin(), rest.end(), '(') >
                std::count(rest.begin(), rest.end(), ')')) &&
               in >> std::ws && std::getline(in, field, ' ')) {
            rest += " " + field;
        }
        if (key == "axiom") {
            axiom = std::stoi(rest);
            saw_axiom = true;
        } else if (key == "poolA") {
            parse_words(rest, pool_a, nullptr);
        } else if (key == "poolB") {
            parse_words(rest, pool_b, nullptr);
        } else if (key == "args") {
            parse_words(rest, args_a, &args_b);
            saw_args = true;
        } else {
            throw std::invalid_argument("unknown replay field '" + key + "'");
        }
    }
    if (!saw_axiom || !saw_args)
        throw std::invalid_argument("replay token needs axiom=K and args=(..|..)");
    auto [lhs, rhs] = replay_instance(sys, axiom, pool_a, pool_b, args_a, args_b);
    os << "axiom=" << axiom << " poolA=" << word_str(pool_a) << " poolB=" << word_str(pool_b)
       << " args=" << args_str(args_a, args_b) << " lhs=" << lhs.str() << " rhs=" << rhs.str()
       << " " << (lhs == rhs ? "equal" : "DIFFER") << "\n";
    return lhs == rhs ? 0 : 1;
}

namespace {

void print_matrix(std::ostream& os, const char* name, const Matrix& m, bool as_float) {
    os << name << " =";
    if (m.rows() == 0 || m.cols() == 0) {
        os << " (empty)\n";
        return;
    }
    os << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        os << " ";
        for (int c = 0; c < m.cols(); ++c) {
            os << " ";
            if (as_float)
                os << m.at(r, c).to_double();
            else
                os << m.at(r, c).str();
        }
        os << "\n";
    }
}

} // namespace

int run_eval(const StructureSeries& ss, const Vec& at_a, const Vec& at_b, bool as_float,
             std::ostream& os) {
    StructureTensors t = eval_series_at_point(ss, at_a, at_b);
    auto scalar_str = [&](const Scalar& s) {
        if (!as_float) return s.str();
        std::ostringstream o;
        o << s.to_double();
        return o.str();
    };
    print_matrix(os, "F_A", t.form_a, as_float);
    print_matrix(os, "F_B", t.form_b, as_float);
    print_matrix(os, "I_A", t.i_a, as_float);
    print_matrix(os, "I_B", t.i_b, as_float);
    print_matrix(os, "R_ab", t.r_ab, as_float);
    for (int i = 0; i < t.dim_a; ++i)
        for (int j = 0; j < t.dim_a; ++j)
            for (int k = 0; k < t.dim_a; ++k)
                if (!t.S(i, j, k).is_zero())
                    os << "S[" << i + 1 << "," << j + 1 << "," << k + 1
                       << "] = " << scalar_str(t.S(i, j, k)) << "\n";
    for (int i = 0; i < t.dim_b; ++i)
        for (int j = 0; j < t.dim_b; ++j)
            for (int k = 0; k < t.dim_b; ++k)
                if (!t.T(i, j, k).is_zero())
                    os << "T[" << i + 1 << "," << j + 1 << "," << k + 1
                       << "] = " << scalar_str(t.T(i, j, k)) << "\n";
    for (int i = 0; i < t.dim_a; ++i)
        for (int j = 0; j < t.dim_b; ++j)
            for (int k = 0; k < t.dim_b; ++k)
                if (!t.R3(i, j, k).is_zero())
                    os << "R_abb[" << i + 1 << "," << j + 1 << "," << k + 1
                       << "] = " << scalar_str(t.R3(i, j, k)) << "\n";
    return 0;
}

} // namespace efa
