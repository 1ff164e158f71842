#include <circforce/quad_scalar.hpp>

#include <cmath>
#include <stdexcept>

namespace circforce {

QuadField::QuadField(Rational radicand) : radicand_(std::move(radicand))
{
    if (sgn(radicand_) <= 0)
        throw std::domain_error("quadratic field radicand must be positive");
    root_ = rational_sqrt(radicand_);
}

QuadFieldPtr make_quad_field(Rational radicand) { return std::make_shared<const QuadField>(std::move(radicand)); }

QuadScalar::QuadScalar(Rational a, Rational b, QuadFieldPtr field)
    : a_(std::move(a)), b_(std::move(b)), field_(std::move(field))
{
    if (!field_ && sgn(b_) != 0)
        throw std::domain_error("radical part without a field");
    fold();
}

void QuadScalar::fold()
{
    if (field_ && field_->degenerate() && sgn(b_) != 0) {
        a_ += b_ * *field_->root();
        b_ = 0;
    }
}

void QuadScalar::adopt_field(const QuadScalar& o)
{
    if (!o.field_)
        return;
    if (!field_) {
        field_ = o.field_;
        return;
    }
    if (field_ != o.field_ && field_->radicand() != o.field_->radicand())
        throw std::domain_error("scalars from different quadratic fields");
}

QuadScalar QuadScalar::conjugate() const
{
    QuadScalar out = *this;
    out.b_ = -b_;
    return out;
}

Rational QuadScalar::norm() const
{
    if (!field_)
        return a_ * a_;
    return a_ * a_ - b_ * b_ * field_->radicand();
}

double QuadScalar::to_double() const
{
    double value = a_.get_d();
    if (field_ && sgn(b_) != 0)
        value += b_.get_d() * std::sqrt(field_->radicand().get_d());
    return value;
}

QuadScalar QuadScalar::operator-() const
{
    QuadScalar out = *this;
    out.a_ = -a_;
    out.b_ = -b_;
    return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o)
{
    adopt_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o)
{
    adopt_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o)
{
    adopt_field(o);
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    const Rational a = a_ * o.a_ + b_ * o.b_ * field_->radicand();
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    adopt_field(o);
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    const Rational n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

bool operator==(const QuadScalar& x, const QuadScalar& y)
{
    if (sgn(x.b_) != 0 && sgn(y.b_) != 0 && x.field_ != y.field_
        && x.field_->radicand() != y.field_->radicand())
        throw std::domain_error("comparing scalars from different quadratic fields");
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const QuadScalar& x)
{
    if (x.is_rational())
        return to_string(x.rational_part());
    return to_string(x.rational_part()) + "+" + to_string(x.radical_part()) + "*sqrt("
           + to_string(x.field()->radicand()) + ")";
}

} // namespace circforce
