#include "defext/scalar.hpp"

#include <charconv>
#include <ostream>

#include "defext/error.hpp"

namespace defext {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p)
{
    mpz_class r = z % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

std::string Field::name() const
{
    return prime == 0 ? "Q" : "F_" + std::to_string(prime);
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::FieldMismatch, std::to_string(p) + " is not prime");
    Scalar s;
    s.p_ = p;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    s.r_ = static_cast<std::uint32_t>(r);
    s.q_ = 0;
    return s;
}

Scalar Scalar::to_residue(const mpq_class& q, std::uint32_t p)
{
    std::uint32_t den = reduce(q.get_den(), p);
    if (den == 0)
        throw Error(ErrorKind::FieldMismatch,
                    "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
    Scalar s;
    s.p_ = p;
    s.r_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(reduce(q.get_num(), p)) * mod_inverse(den, p) % p);
    return s;
}

Scalar Scalar::from_int(long v, const Field& field)
{
    if (field.is_rational())
        return Scalar(v);
    return residue(v, field.prime);
}

Scalar Scalar::parse(std::string_view text, const Field& field)
{
    auto parse_int = [&](std::string_view part) {
        if (part.empty())
            throw Error(ErrorKind::Parse, "empty scalar literal");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size())
            throw Error(ErrorKind::Parse, "bad scalar literal '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw Error(ErrorKind::Parse, "bad scalar literal '" + std::string(text) + "'");
        std::string digits(part[0] == '+' ? part.substr(1) : part);
        return mpz_class(digits);
    };
    mpq_class q;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        q = mpq_class(parse_int(text));
    } else {
        mpz_class num = parse_int(text.substr(0, slash));
        mpz_class den = parse_int(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
        q = mpq_class(num, den);
        q.canonicalize();
    }
    if (field.is_rational())
        return Scalar(q);
    if (!is_prime(field.prime))
        throw Error(ErrorKind::FieldMismatch, std::to_string(field.prime) + " is not prime");
    return to_residue(q, field.prime);
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (p_ == 0 && o.p_ == 0)
        return Scalar(mpq_class(q_ + o.q_));
    if (p_ != 0 && o.p_ != 0) {
        if (p_ != o.p_)
            throw Error(ErrorKind::FieldMismatch, "residues modulo different primes");
        Scalar s = *this;
        s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
        return s;
    }
    return p_ != 0 ? *this + to_residue(o.q_, p_) : to_residue(q_, o.p_) + o;
}

Scalar Scalar::operator-() const
{
    if (p_ == 0)
        return Scalar(mpq_class(-q_));
    Scalar s = *this;
    s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const
{
    if (p_ == 0 && o.p_ == 0)
        return Scalar(mpq_class(q_ * o.q_));
    if (p_ != 0 && o.p_ != 0) {
        if (p_ != o.p_)
            throw Error(ErrorKind::FieldMismatch, "residues modulo different primes");
        Scalar s = *this;
        s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
        return s;
    }
    return p_ != 0 ? *this * to_residue(o.q_, p_) : to_residue(q_, o.p_) * o;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    if (p_ == 0)
        return Scalar(mpq_class(1 / q_));
    Scalar s = *this;
    s.r_ = mod_inverse(r_, p_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const
{
    if (p_ == 0 && o.p_ == 0)
        return q_ == o.q_;
    return (*this - o).is_zero();
}

std::string Scalar::str() const
{
    if (p_ == 0)
        return q_.get_str();
    return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace defext
