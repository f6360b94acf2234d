#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace defext {

/// Base field of a session: the rationals (prime == 0) or F_p.
struct Field {
    std::uint32_t prime = 0;

    bool is_rational() const { return prime == 0; }
    bool operator==(const Field&) const = default;
    std::string name() const;
};

/// Exact element of Q or F_p.
///
/// Integer-valued rationals act as "untyped" constants: mixing one with a
/// residue maps it through Z -> F_p, so Scalar(0) and Scalar(1) work in
/// either field. Mixing residues of different primes throws.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Scalar residue(std::int64_t v, std::uint32_t p);
    /// Parses `n` or `n/d` into the given field.
    static Scalar parse(std::string_view text, const Field& field);
    static Scalar from_int(long v, const Field& field);

    bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }
    bool is_residue() const { return p_ != 0; }
    std::uint32_t prime() const { return p_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    static Scalar to_residue(const mpq_class& q, std::uint32_t p);

    mpq_class q_{0};
    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^k as a scalar.
inline Scalar sign(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

} // namespace defext
