#include "cla/field.hpp"

#include <charconv>

namespace cla {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p)
{
    mpz_class r = z % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p, bool allow_char_two)
{
    if (p >= (1U << 31))
        throw FieldError("characteristic " + std::to_string(p) + " is too large");
    if (!is_prime_number(p))
        throw FieldError(std::to_string(p) + " is not prime");
    if (p == 2 && !allow_char_two)
        throw FieldError("characteristic 2 requires an explicit override");
    return Field(p);
}

std::string Field::to_string() const
{
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long value) : field_(f)
{
    if (f.is_prime()) {
        long p = static_cast<long>(f.characteristic());
        long r = value % p;
        if (r < 0)
            r += p;
        value_ = static_cast<std::uint32_t>(r);
    }
    else {
        value_ = mpq_class(value);
    }
}

Scalar::Scalar(const Field& f, const mpq_class& value) : field_(f)
{
    if (f.is_prime()) {
        std::uint32_t p = f.characteristic();
        std::uint32_t den = reduce_mpz(value.get_den(), p);
        if (den == 0)
            throw FieldError("denominator of " + value.get_str() + " vanishes in " + f.to_string());
        std::uint64_t num = reduce_mpz(value.get_num(), p);
        value_ = static_cast<std::uint32_t>(num * mod_pow(den, p - 2, p) % p);
    }
    else {
        mpq_class q = value;
        q.canonicalize();
        value_ = q;
    }
}

Scalar Scalar::parse(const Field& f, std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (s.empty())
        throw InputError("empty scalar");
    if (s.front() == '+')
        s.erase(s.begin());
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw InputError("not a rational number: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const
{
    if (field_.is_prime())
        return std::get<std::uint32_t>(value_) == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
    if (field_.is_prime())
        return std::get<std::uint32_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const
{
    if (!field_.is_prime())
        throw FieldError("residue() of a rational scalar");
    return std::get<std::uint32_t>(value_);
}

mpq_class Scalar::rational() const
{
    if (field_.is_prime())
        return mpq_class(std::get<std::uint32_t>(value_));
    return std::get<mpq_class>(value_);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw ContractError("inverse of zero");
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime()) {
        std::uint32_t p = field_.characteristic();
        r.value_ = mod_pow(std::get<std::uint32_t>(value_), p - 2, p);
    }
    else {
        r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    }
    return r;
}

std::string Scalar::to_string() const
{
    if (field_.is_prime())
        return std::to_string(std::get<std::uint32_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

void Scalar::require_same_field(const Scalar& o) const
{
    if (!(field_ == o.field_))
        throw FieldError("mixing " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.is_prime()) {
        std::uint32_t v = std::get<std::uint32_t>(value_);
        r.value_ = v == 0 ? 0U : field_.characteristic() - v;
    }
    else {
        r.value_ = mpq_class(-std::get<mpq_class>(value_));
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_field(o);
    if (field_.is_prime()) {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
        value_ = static_cast<std::uint32_t>(s % field_.characteristic());
    }
    else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_field(o);
    if (field_.is_prime()) {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(o.value_);
        value_ = static_cast<std::uint32_t>(s % field_.characteristic());
    }
    else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_))
        return false;
    if (a.field_.is_prime())
        return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    if (a.field_.is_prime())
        return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
    return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

Vector zero_vector(const Field& f, std::size_t n)
{
    return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const Field& f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& c, const Vector& v)
{
    Vector r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch");
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] += c * b[i];
}

} // namespace cla
