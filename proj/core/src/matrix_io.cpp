#include <circforce/errors.hpp>
#include <circforce/matrix_io.hpp>

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace circforce {

namespace {

template <typename T>
void write_any(std::ostream& out, const ExactMatrix<T>& m)
{
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << to_string(m(i, j));
        }
        out << '\n';
    }
}

struct EntryParser {
    QuadFieldPtr field;

    QuadScalar parse(std::string_view token, int line, int column)
    {
        const auto bad = [&](const std::string& why) { return ParseError(why + " in entry '" + std::string(token) + "'", line, column); };
        const auto star = token.find("*sqrt(");
        if (star == std::string_view::npos) {
            auto value = parse_rational(token);
            if (!value)
                throw bad("malformed rational");
            return QuadScalar(*value);
        }
        if (token.back() != ')')
            throw bad("expected ')'");
        const std::string_view radicand_text = token.substr(star + 6, token.size() - star - 7);
        const auto radicand = parse_rational(radicand_text);
        if (!radicand || sgn(*radicand) <= 0)
            throw bad("radicand must be a positive rational");

        const std::string_view head = token.substr(0, star);
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 1; i < head.size(); ++i)
            if ((head[i] == '+' || head[i] == '-') && std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
                split = i;
                break;
            }
        Rational a = 0, b;
        if (split == std::string_view::npos) {
            auto coefficient = parse_rational(head);
            if (!coefficient)
                throw bad("malformed radical coefficient");
            b = *coefficient;
        }
        else {
            auto rational = parse_rational(head.substr(0, split));
            auto coefficient = parse_rational(head.substr(split + 1));
            if (!rational || !coefficient)
                throw bad("malformed quadratic entry");
            a = *rational;
            b = head[split] == '-' ? Rational(-*coefficient) : *coefficient;
        }
        if (!field)
            field = make_quad_field(*radicand);
        else if (field->radicand() != *radicand)
            throw bad("entries use different radicands");
        return QuadScalar(a, b, field);
    }
};

} // namespace

void write_matrix(std::ostream& out, const RationalMatrix& m) { write_any(out, m); }
void write_matrix(std::ostream& out, const QuadMatrix& m) { write_any(out, m); }

std::string to_text(const RationalMatrix& m)
{
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::string to_text(const QuadMatrix& m)
{
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

QuadMatrix read_matrix(std::istream& in)
{
    EntryParser parser;
    std::vector<std::vector<QuadScalar>> rows;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::vector<QuadScalar> row;
        std::size_t pos = 0;
        while (true) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos >= line.size() || line[pos] == '#')
                break;
            const std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            row.push_back(parser.parse(std::string_view(line).substr(start, pos - start), line_number,
                                       static_cast<int>(start) + 1));
        }
        if (row.empty())
            continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected "
                                 + std::to_string(rows.front().size()),
                             line_number, 1);
        rows.push_back(std::move(row));
    }
    return QuadMatrix::from_rows(rows);
}

QuadMatrix parse_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_matrix(in);
}

RationalMatrix parse_rational_matrix(std::string_view text)
{
    const QuadMatrix q = parse_matrix(text);
    RationalMatrix out(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) {
            if (!q(i, j).is_rational())
                throw ParseError("irrational entry in a rational matrix", i + 1, j + 1);
            out(i, j) = q(i, j).rational_part();
        }
    return out;
}

} // namespace circforce
