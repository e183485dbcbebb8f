#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace vci {

// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct FieldDesc {
    std::int64_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldDesc&) const = default;

    std::string name() const;
    static FieldDesc rationals() { return FieldDesc{0}; }
    static FieldDesc prime_field(std::int64_t p);
    static FieldDesc parse(const std::string& s);
};

// Default prime for randomized cross-checks.
inline constexpr std::int64_t kDefaultPrime = 32003;

class FieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// u in [0, m) with a*u = 1 (mod m). Throws if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// An exact scalar: a rational in lowest terms with positive denominator,
// or a residue in [0, p).
class Scalar {
  public:
    Scalar() = default;  // zero over Q
    explicit Scalar(FieldDesc fd);

    static Scalar from_rational(mpq_class q);
    static Scalar from_int(long v, FieldDesc fd = FieldDesc::rationals());
    static Scalar from_fraction(long num, long den);
    static Scalar from_residue(std::int64_t v, std::int64_t p);
    static Scalar zero(FieldDesc fd) { return Scalar(fd); }
    static Scalar one(FieldDesc fd) { return from_int(1, fd); }

    FieldDesc field() const { return fd_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational value (only over Q).
    const mpq_class& rational() const;
    // Residue in [0, p) (only over F_p).
    std::int64_t residue() const;

    // "p/q" (or "p" when q = 1) over Q; decimal residue over F_p.
    std::string str() const;
    static Scalar parse(const std::string& s, FieldDesc fd);

    // Total order used only for deterministic tie-breaking / sorting.
    static int cmp(const Scalar& a, const Scalar& b);

  private:
    FieldDesc fd_;
    mpq_class q_;          // value over Q
    std::int64_t r_ = 0;   // residue over F_p

    void check_same_field(const Scalar& o) const;
};

}  // namespace vci
