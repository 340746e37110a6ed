#include "efa/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace efa {
namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        // make the key/arrow punctuation self-delimiting
        std::string spaced;
        for (size_t i = 0; i < raw.size(); ++i) {
            char c = raw[i];
            if (c == '(' || c == ')' || c == '|' || c == ';' || c == '+') {
                spaced += ' ';
                spaced += c;
                spaced += ' ';
            } else if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
                spaced += " -> ";
                ++i;
            } else {
                spaced += c;
            }
        }
        std::istringstream ls(spaced);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (...) {
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'", line.number);
    }
}

Scalar parse_scalar(const Line& line, const std::string& tok) {
    try {
        return Scalar::parse(tok);
    } catch (const scalar_error& e) {
        throw parse_error(e.what(), line.number);
    }
}

// key tokens: "(" i... "|" j... ")" starting at position `at`; returns the
// position after ")".
size_t parse_key(const Line& line, size_t at, Word& interior, Word& boundary) {
    auto need = [&](size_t i) -> const std::string& {
        if (i >= line.tokens.size()) throw parse_error("unterminated key", line.number);
        return line.tokens[i];
    };
    if (need(at) != "(") throw parse_error("expected '(' to open a key", line.number);
    ++at;
    bool seen_bar = false;
    for (;; ++at) {
        const std::string& tok = need(at);
        if (tok == ")") return at + 1;
        if (tok == "|") {
            if (seen_bar) throw parse_error("duplicate '|' in key", line.number);
            seen_bar = true;
            continue;
        }
        int idx = parse_int(line, tok, "index");
        if (idx < 1) throw parse_error("indices are 1-based", line.number);
        (seen_bar ? boundary : interior).push_back(idx - 1);
    }
}

Matrix parse_rows(const Line& line, size_t at, int dim) {
    Matrix m(dim, dim);
    int r = 0, c = 0;
    for (size_t i = at; i < line.tokens.size(); ++i) {
        const std::string& tok = line.tokens[i];
        if (tok == ";") {
            if (c != dim) throw parse_error("short involution row", line.number);
            ++r;
            c = 0;
            continue;
        }
        if (r >= dim || c >= dim) throw parse_error("too many involution entries", line.number);
        m.at(r, c++) = parse_scalar(line, tok);
    }
    if (!(r == dim - 1 && c == dim) && !(r == dim && c == 0))
        throw parse_error("involution needs " + std::to_string(dim) + "x" +
                              std::to_string(dim) + " entries",
                          line.number);
    return m;
}

struct Header {
    int dim_a = -1, dim_b = -1;
    std::optional<Matrix> inv_a, inv_b;
    std::optional<int> max_interior, max_boundary, degree;
    bool extended = false;
};

bool parse_header_line(const Line& line, Header& h) {
    const std::string& kw = line.tokens[0];
    auto one_int = [&](const char* what) {
        if (line.tokens.size() != 2) throw parse_error("expected one value", line.number);
        return parse_int(line, line.tokens[1], what);
    };
    if (kw == "dim_a") {
        h.dim_a = one_int("dim_a");
        return true;
    }
    if (kw == "dim_b") {
        h.dim_b = one_int("dim_b");
        return true;
    }
    if (kw == "max_interior") {
        h.max_interior = one_int("max_interior");
        return true;
    }
    if (kw == "max_boundary") {
        h.max_boundary = one_int("max_boundary");
        return true;
    }
    if (kw == "degree") {
        h.degree = one_int("degree");
        return true;
    }
    if (kw == "extended") {
        if (line.tokens.size() != 2 || (line.tokens[1] != "true" && line.tokens[1] != "false"))
            throw parse_error("expected 'extended true|false'", line.number);
        h.extended = line.tokens[1] == "true";
        return true;
    }
    if (kw == "involution_a" || kw == "involution_b") {
        bool is_a = kw == "involution_a";
        int dim = is_a ? h.dim_a : h.dim_b;
        if (dim < 0) throw parse_error(kw + " before dimensions", line.number);
        std::optional<Matrix>& slot = is_a ? h.inv_a : h.inv_b;
        if (line.tokens.size() == 2 && line.tokens[1] == "identity")
            slot = Matrix::identity(dim);
        else if (line.tokens.size() > 2 && line.tokens[1] == "rows")
            slot = parse_rows(line, 2, dim);
        else
            throw parse_error("expected 'identity' or 'rows ...'", line.number);
        return true;
    }
    return false;
}

InputDocument parse_system(const std::vector<Line>& lines) {
    Header h;
    std::map<CorrelatorKey, Scalar> table;
    std::map<CorrelatorKey, int> first_seen;
    int max_k = 2, max_l = 0;
    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (parse_header_line(line, h)) continue;
        if (line.tokens[0] == "correlator") {
            if (h.dim_a < 0 || h.dim_b < 0)
                throw parse_error("correlator before dimensions", line.number);
            Word interior, boundary;
            size_t after = parse_key(line, 1, interior, boundary);
            if (after + 1 != line.tokens.size())
                throw parse_error("expected exactly one value after the key", line.number);
            Scalar v = parse_scalar(line, line.tokens[after]);
            CorrelatorKey key;
            try {
                key = canonical_key_checked(interior, boundary, h.dim_a, h.dim_b);
            } catch (const index_error& e) {
                throw parse_error(e.what(), line.number);
            }
            if (!admissible_shape(key.k(), key.l()))
                throw parse_error("correlator " + key.str() + " has an unstable shape",
                                  line.number);
            auto [it, inserted] = table.try_emplace(key, v);
            if (inserted) {
                first_seen[key] = line.number;
            } else if (it->second != v) {
                throw parse_error("correlator " + key.str() + " disagrees with line " +
                                      std::to_string(first_seen[key]) + " after canonicalization",
                                  line.number);
            }
            max_k = std::max(max_k, key.k());
            max_l = std::max(max_l, key.l());
            continue;
        }
        throw parse_error("unknown directive '" + line.tokens[0] + "'", line.number);
    }
    if (h.dim_a < 0 || h.dim_b < 0) throw parse_error("missing dim_a/dim_b", lines[0].number);
    if (h.dim_b > 0) max_l = std::max(max_l, 2);
    IndexBasis basis(h.dim_a, h.dim_b, h.inv_a.value_or(Matrix::identity(h.dim_a)),
                     h.inv_b.value_or(Matrix::identity(h.dim_b)));
    InputDocument doc{DocKind::system, std::nullopt, std::nullopt, std::nullopt};
    try {
        doc.system.emplace(basis, h.max_interior.value_or(max_k), h.max_boundary.value_or(max_l),
                           std::move(table), h.extended);
    } catch (const std::runtime_error& e) {
        throw parse_error(e.what(), lines[0].number);
    }
    return doc;
}

InputDocument parse_series(const std::vector<Line>& lines) {
    Header h;
    std::vector<std::tuple<int, TensorMonomial, Scalar>> entries;
    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (parse_header_line(line, h)) continue;
        if (line.tokens[0] == "coeff") {
            if (h.dim_a < 0 || h.dim_b < 0 || !h.degree)
                throw parse_error("coeff before dimensions/degree", line.number);
            Word aw, bw;
            size_t after = parse_key(line, 1, aw, bw);
            if (after + 1 != line.tokens.size())
                throw parse_error("expected exactly one value after the key", line.number);
            for (int i : aw)
                if (i >= h.dim_a) throw parse_error("alpha index out of range", line.number);
            for (int j : bw)
                if (j >= h.dim_b) throw parse_error("beta index out of range", line.number);
            if (int(aw.size() + bw.size()) > *h.degree)
                throw parse_error("monomial exceeds the declared degree", line.number);
            entries.emplace_back(line.number, TensorMonomial{aw, bw},
                                 parse_scalar(line, line.tokens[after]));
            continue;
        }
        throw parse_error("unknown directive '" + line.tokens[0] + "'", line.number);
    }
    if (h.dim_a < 0 || h.dim_b < 0 || !h.degree)
        throw parse_error("missing dim_a/dim_b/degree", lines[0].number);

    // symmetric/cyclic completion over each orbit, with consistency checks
    TensorSeries f(h.dim_a, h.dim_b, *h.degree);
    std::map<TensorMonomial, int> first_seen;
    for (auto& [line_no, mono, v] : entries) {
        Word perm = mono.alpha_word;
        std::sort(perm.begin(), perm.end());
        do {
            Word rot = mono.beta_word;
            for (size_t r = 0; r < std::max<size_t>(1, rot.size()); ++r) {
                TensorMonomial member{perm, rot};
                auto it = first_seen.find(member);
                if (it == first_seen.end()) {
                    first_seen[member] = line_no;
                    f.set(member, v);
                } else if (f.coeff(member) != v) {
                    throw parse_error("coeff " + mono.str() + " disagrees with line " +
                                          std::to_string(it->second) +
                                          " under symmetric completion",
                                      line_no);
                }
                if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    IndexBasis basis(h.dim_a, h.dim_b, h.inv_a.value_or(Matrix::identity(h.dim_a)),
                     h.inv_b.value_or(Matrix::identity(h.dim_b)));
    InputDocument doc{DocKind::series, std::nullopt, std::nullopt, std::nullopt};
    doc.series.emplace(basis, std::move(f));
    return doc;
}

InputDocument parse_algebra(const std::vector<Line>& lines) {
    Header h;
    struct MulEntry {
        int line, i, j;
        Vec rhs;
    };
    std::vector<MulEntry> muls;
    std::vector<std::tuple<int, int, int, Scalar>> forms;
    std::optional<Matrix> inv_full;
    int dim = -1;

    auto parse_basis_elt = [&](const Line& line, const std::string& tok) {
        if (tok.size() < 3 || tok[0] != 'e' || tok[1] != '_')
            throw parse_error("expected basis element 'e_K', got '" + tok + "'", line.number);
        int idx = parse_int(line, tok.substr(2), "basis index");
        if (idx < 1 || idx > dim)
            throw parse_error("basis index out of range in '" + tok + "'", line.number);
        return idx - 1;
    };

    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] == "involution") {
            if (dim < 0) throw parse_error("involution before dimensions", line.number);
            if (line.tokens.size() == 2 && line.tokens[1] == "identity")
                inv_full = Matrix::identity(dim);
            else if (line.tokens.size() > 2 && line.tokens[1] == "rows")
                inv_full = parse_rows(line, 2, dim);
            else
                throw parse_error("expected 'identity' or 'rows ...'", line.number);
            continue;
        }
        if (parse_header_line(line, h)) {
            if (h.dim_a >= 0 && h.dim_b >= 0) dim = h.dim_a + h.dim_b;
            continue;
        }
        if (line.tokens[0] == "mul") {
            if (dim < 0) throw parse_error("mul before dimensions", line.number);
            if (line.tokens.size() < 5 || line.tokens[3] != "->")
                throw parse_error("expected 'mul e_i e_j -> ...'", line.number);
            MulEntry e{line.number, parse_basis_elt(line, line.tokens[1]),
                       parse_basis_elt(line, line.tokens[2]), Vec(dim)};
            size_t at = 4;
            if (at + 1 == line.tokens.size() && line.tokens[at] == "0") {
                muls.push_back(std::move(e));
                continue;
            }
            while (at < line.tokens.size()) {
                Scalar c(1);
                if (line.tokens[at] != "+" && line.tokens[at][0] != 'e') {
                    c = parse_scalar(line, line.tokens[at]);
                    ++at;
                }
                if (at >= line.tokens.size())
                    throw parse_error("dangling coefficient in mul", line.number);
                e.rhs[parse_basis_elt(line, line.tokens[at])] += c;
                ++at;
                if (at < line.tokens.size()) {
                    if (line.tokens[at] != "+")
                        throw parse_error("expected '+' between mul terms", line.number);
                    ++at;
                    if (at == line.tokens.size())
                        throw parse_error("dangling '+' in mul", line.number);
                }
            }
            muls.push_back(std::move(e));
            continue;
        }
        if (line.tokens[0] == "form") {
            if (dim < 0) throw parse_error("form before dimensions", line.number);
            if (line.tokens.size() != 4) throw parse_error("expected 'form e_i e_j value'", line.number);
            forms.emplace_back(line.number, parse_basis_elt(line, line.tokens[1]),
                               parse_basis_elt(line, line.tokens[2]),
                               parse_scalar(line, line.tokens[3]));
            continue;
        }
        throw parse_error("unknown directive '" + line.tokens[0] + "'", line.number);
    }
    if (dim < 0) throw parse_error("missing dim_a/dim_b", lines[0].number);

    ExtendedFrobeniusAlgebra alg;
    alg.dim_a = h.dim_a;
    alg.dim_b = h.dim_b;
    alg.mult.assign(dim, std::vector<Vec>(dim, Vec(dim)));
    alg.form = Matrix(dim, dim);
    alg.inv = inv_full.value_or(Matrix::identity(dim));
    std::map<std::pair<int, int>, int> mul_seen;
    for (const MulEntry& e : muls) {
        auto [it, inserted] = mul_seen.try_emplace({e.i, e.j}, e.line);
        if (!inserted && alg.mult[e.i][e.j] != e.rhs)
            throw parse_error("mul entry disagrees with line " + std::to_string(it->second),
                              e.line);
        alg.mult[e.i][e.j] = e.rhs;
    }
    std::map<std::pair<int, int>, std::pair<int, Scalar>> form_seen;
    for (auto& [line_no, i, j, v] : forms) {
        auto key = std::minmax(i, j);
        auto it = form_seen.find(key);
        if (it != form_seen.end() && it->second.second != v)
            throw parse_error("form entry disagrees with line " +
                                  std::to_string(it->second.first),
                              line_no);
        form_seen[key] = {line_no, v};
        alg.form.at(i, j) = v;
        alg.form.at(j, i) = v;
    }
    alg.validate_shape();
    InputDocument doc{DocKind::algebra, std::nullopt, std::nullopt, std::nullopt};
    doc.algebra = std::move(alg);
    return doc;
}

} // namespace

InputDocument parse_document(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("empty document", 1);
    const std::string& kind = lines[0].tokens[0];
    if (kind == "system") return parse_system(lines);
    if (kind == "series") return parse_series(lines);
    if (kind == "algebra") return parse_algebra(lines);
    throw parse_error("unknown document kind '" + kind + "' (expected system|series|algebra)",
                      lines[0].number);
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

namespace {

void print_involution(std::ostream& os, const char* name, const Matrix& m) {
    if (m.rows() == 0) return;
    if (m == Matrix::identity(m.rows())) {
        os << name << " identity\n";
        return;
    }
    os << name << " rows ";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c).str();
        }
    }
    os << "\n";
}

} // namespace

std::string print_system(const CorrelationSystem& sys) {
    std::ostringstream os;
    os << "system\n";
    os << "dim_a " << sys.dim_a() << "\n";
    os << "dim_b " << sys.dim_b() << "\n";
    os << "max_interior " << sys.max_interior() << "\n";
    os << "max_boundary " << sys.max_boundary() << "\n";
    os << "extended " << (sys.extended() ? "true" : "false") << "\n";
    print_involution(os, "involution_a", sys.basis().inv_a);
    print_involution(os, "involution_b", sys.basis().inv_b);
    for (const auto& [key, v] : sys.table())
        os << "correlator " << key.str() << " " << v.str() << "\n";
    return os.str();
}

std::string print_series(const StructureSeries& ss) {
    std::ostringstream os;
    os << "series\n";
    os << "dim_a " << ss.series.dim_a() << "\n";
    os << "dim_b " << ss.series.dim_b() << "\n";
    os << "degree " << ss.series.truncation_degree() << "\n";
    print_involution(os, "involution_a", ss.basis.inv_a);
    print_involution(os, "involution_b", ss.basis.inv_b);
    // one representative per orbit
    std::map<TensorMonomial, Scalar> reps;
    for (const auto& [mono, v] : ss.series.coeffs()) {
        Word a = mono.alpha_word;
        std::sort(a.begin(), a.end());
        reps.try_emplace(TensorMonomial{a, least_rotation(mono.beta_word)}, v);
    }
    for (const auto& [mono, v] : reps) os << "coeff " << mono.str() << " " << v.str() << "\n";
    return os.str();
}

std::string print_algebra(const ExtendedFrobeniusAlgebra& alg) {
    std::ostringstream os;
    os << "algebra\n";
    os << "dim_a " << alg.dim_a << "\n";
    os << "dim_b " << alg.dim_b << "\n";
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            bool any = false;
            for (int k = 0; k < alg.dim(); ++k) any = any || !alg.mult[i][j][k].is_zero();
            if (!any) continue;
            os << "mul e_" << i + 1 << " e_" << j + 1 << " ->";
            bool first = true;
            for (int k = 0; k < alg.dim(); ++k) {
                if (alg.mult[i][j][k].is_zero()) continue;
                os << (first ? " " : " + ") << alg.mult[i][j][k].str() << " e_" << k + 1;
                first = false;
            }
            os << "\n";
        }
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i; j < alg.dim(); ++j)
            if (!alg.form.at(i, j).is_zero())
                os << "form e_" << i + 1 << " e_" << j + 1 << " " << alg.form.at(i, j).str()
                   << "\n";
    print_involution(os, "involution", alg.inv);
    return os.str();
}

std::string print_document(const InputDocument& doc) {
    switch (doc.kind) {
        case DocKind::system: return print_system(*doc.system);
        case DocKind::series: return print_series(*doc.series);
        default: return print_algebra(*doc.algebra);
    }
}

} // namespace efa
