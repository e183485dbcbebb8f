#include "vci/field.hpp"

#include <numeric>

namespace vci {

std::string FieldDesc::name() const {
    if (is_rational()) return "QQ";
    return "FP:" + std::to_string(p);
}

FieldDesc FieldDesc::prime_field(std::int64_t p) {
    if (p < 2) throw FieldError("prime field modulus must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{p};
}

FieldDesc FieldDesc::parse(const std::string& s) {
    if (s == "QQ" || s == "qq") return rationals();
    if (s.rfind("FP:", 0) == 0 || s.rfind("fp:", 0) == 0)
        return prime_field(std::stoll(s.substr(3)));
    throw FieldError("unknown field: " + s);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 2) throw FieldError("mod_inverse: modulus must be >= 2");
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw FieldError("mod_inverse: argument not invertible");
    return ((s0 % m) + m) % m;
}

Scalar::Scalar(FieldDesc fd) : fd_(fd) {}

Scalar Scalar::from_rational(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::from_int(long v, FieldDesc fd) {
    if (fd.is_rational()) return from_rational(mpq_class(v));
    return from_residue(v, fd.p);
}

Scalar Scalar::from_fraction(long num, long den) {
    if (den == 0) throw FieldError("zero denominator");
    return from_rational(mpq_class(num, den));
}

Scalar Scalar::from_residue(std::int64_t v, std::int64_t p) {
    Scalar s{FieldDesc{p}};
    s.r_ = ((v % p) + p) % p;
    return s;
}

bool Scalar::is_zero() const {
    return fd_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return fd_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(fd_ == o.fd_)) throw FieldError("mixed-field operands");
}

Scalar Scalar::operator-() const {
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : fd_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % fd_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fd_);
    if (fd_.is_rational()) {
        s.q_ = q_ * o.q_;
        s.q_.canonicalize();
    } else {
        s.r_ = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(r_) * static_cast<unsigned __int128>(o.r_) % fd_.p);
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    Scalar s(fd_);
    if (fd_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = mod_inverse(r_, fd_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(fd_ == o.fd_)) return false;
    return fd_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational() const {
    if (!fd_.is_rational()) throw FieldError("not a rational scalar");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (fd_.is_rational()) throw FieldError("not a prime-field scalar");
    return r_;
}

std::string Scalar::str() const {
    if (!fd_.is_rational()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& s, FieldDesc fd) {
    if (fd.is_rational()) {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() <= 0 && q != 0) throw FieldError("bad rational: " + s);
        return from_rational(q);
    }
    return from_residue(std::stoll(s), fd.p);
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    if (a.fd_.is_rational()) return ::cmp(a.q_, b.q_);
    return a.r_ < b.r_ ? -1 : a.r_ > b.r_ ? 1 : 0;
}

}  // namespace vci
