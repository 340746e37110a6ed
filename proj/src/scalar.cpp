#include "efa/scalar.hpp"

#include <ostream>

namespace efa {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw scalar_error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.v_ == 0) throw scalar_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::parse(const std::string& text) {
    auto bad = [&] { return scalar_error("bad rational literal '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
    }
    auto check = [&](const std::string& t) {
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) throw bad();
    };
    check(num);
    check(den);
    mpq_class q(num + "/" + den);
    if (q.get_den() == 0) throw scalar_error("division by zero");
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace efa
