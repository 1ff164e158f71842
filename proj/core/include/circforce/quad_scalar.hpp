#pragma once

#include <circforce/rational.hpp>

#include <memory>
#include <string>

namespace circforce {

/// The field Q(√d) for a positive rational d. When d is the square of a rational the
/// "extension" collapses to Q and elements are folded to their rational value, so that
/// componentwise equality stays equality of real numbers.
class QuadField {
public:
    explicit QuadField(Rational radicand);

    const Rational& radicand() const noexcept { return radicand_; }
    bool degenerate() const noexcept { return root_.has_value(); }
    /// √d when degenerate.
    const std::optional<Rational>& root() const noexcept { return root_; }

private:
    Rational radicand_;
    std::optional<Rational> root_;
};

using QuadFieldPtr = std::shared_ptr<const QuadField>;

QuadFieldPtr make_quad_field(Rational radicand);

/// a + b√d. A scalar without a field is a plain rational and combines with any field;
/// combining scalars from fields with different d throws std::domain_error.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long a) : a_(a) {}
    QuadScalar(Rational a) : a_(std::move(a)) {}
    QuadScalar(Rational a, Rational b, QuadFieldPtr field);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_part() const noexcept { return b_; }
    const QuadFieldPtr& field() const noexcept { return field_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadScalar conjugate() const;
    /// a² - b² d; nonzero for every nonzero element of a non-degenerate field.
    Rational norm() const;
    double to_double() const;

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    /// Throws std::domain_error on division by zero.
    QuadScalar& operator/=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

    /// Componentwise; scalars with nonzero radical parts must share d.
    friend bool operator==(const QuadScalar& x, const QuadScalar& y);

private:
    void fold();
    void adopt_field(const QuadScalar& o);

    Rational a_;
    Rational b_;
    QuadFieldPtr field_;
};

inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

/// "p/q+r/s*sqrt(D)" with every rational written as p/q.
std::string to_string(const QuadScalar& x);

} // namespace circforce
