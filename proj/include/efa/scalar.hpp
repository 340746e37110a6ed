#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace efa {

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational number. Always stored in lowest terms with positive
// denominator; every operation is exact.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(static_cast<signed long>(n)) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Scalar parse(const std::string& text);

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    std::string str() const;
    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace efa
