#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cla/error.hpp"

namespace cla {

/// Either the rationals or a prime field F_p.
///
/// Characteristic 2 is rejected unless explicitly allowed: the cocycle and
/// classification theory used throughout assumes char != 2.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint32_t p, bool allow_char_two = false);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }

    /// "Q" or "F_p".
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. F_p values are kept as least nonnegative residues.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    Scalar(const Field& f, long value);
    Scalar(const Field& f, const mpq_class& value);

    static Scalar zero(const Field& f) { return Scalar(f, 0L); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }

    /// Parses "3", "-2", "3/4". Over F_p the rational is reduced modulo p.
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint32_t residue() const;
    mpq_class rational() const;

    Scalar inverse() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used only for canonical serialization (residue order over F_p).
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    void require_same_field(const Scalar& o) const;

    Field field_;
    std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

} // namespace cla
