#include <circforce/rational.hpp>

#include <cctype>

namespace circforce {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    Integer p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0)
        return std::nullopt;
    Rational r(negative ? Integer(-p) : p, q);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t()))
        return std::nullopt;
    Rational root(Integer(sqrt(p)), Integer(sqrt(q)));
    root.canonicalize();
    return root;
}

} // namespace circforce
