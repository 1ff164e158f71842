#include <circforce/errors.hpp>
#include <circforce/graph_io.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace circforce {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        advance();
        return true;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }

    bool accept_word(std::string_view word)
    {
        skip_space();
        // Words may themselves be split by whitespace, so match character by character.
        const auto saved_pos = pos_;
        const auto saved_line = line_;
        const auto saved_column = column_;
        for (char c : word) {
            if (std::tolower(static_cast<unsigned char>(peek())) != c) {
                pos_ = saved_pos;
                line_ = saved_line;
                column_ = saved_column;
                return false;
            }
            advance();
        }
        return true;
    }

    int number(const char* what)
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        long long value = 0;
        // Digits of one number may be separated by whitespace; the grammar is whitespace-insensitive.
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max())
                fail(std::string(what) + " is too large");
            advance();
        }
        return static_cast<int>(value);
    }

    [[noreturn]] void fail(const std::string& message)
    {
        skip_space();
        throw ParseError(message, line_, column_);
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        }
        else
            ++column_;
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct Term {
    enum Kind { Circulant, Cycle, Complete } kind;
    int n;
    std::vector<int> connections;
    int line, column;
};

Term parse_term(Cursor& in)
{
    Term t{};
    t.line = in.line();
    t.column = in.column();
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(in.peek())));
    if (head != 'C' && head != 'K')
        in.fail("expected 'C' or 'K'");
    in.accept(in.peek());
    t.n = in.number("vertex count");
    if (head == 'K') {
        t.kind = Term::Complete;
        return t;
    }
    if (!in.accept('(')) {
        t.kind = Term::Cycle;
        return t;
    }
    t.kind = Term::Circulant;
    do
        t.connections.push_back(in.number("connection"));
    while (in.accept(','));
    in.expect(')', "',' or ')'");
    return t;
}

CirculantSpec term_spec(const Term& t)
{
    try {
        switch (t.kind) {
        case Term::Circulant:
            return CirculantSpec(t.n, t.connections);
        case Term::Cycle:
            return CirculantSpec(t.n, {1});
        case Term::Complete: {
            std::vector<int> all;
            for (int s = 1; 2 * s <= t.n; ++s)
                all.push_back(s);
            return CirculantSpec(t.n, all);
        }
        }
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.column);
    }
    throw ParseError("unreachable", t.line, t.column);
}

Graph term_graph(const Term& t)
{
    try {
        switch (t.kind) {
        case Term::Complete:
            if (t.n < 1)
                throw std::invalid_argument("K0 has no vertices");
            return complete_graph(t.n);
        case Term::Cycle:
            return cycle_graph(t.n);
        case Term::Circulant:
            return build_circulant(term_spec(t));
        }
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.column);
    }
    throw ParseError("unreachable", t.line, t.column);
}

std::string term_label(const Term& t)
{
    switch (t.kind) {
    case Term::Complete:
        return "K" + std::to_string(t.n);
    case Term::Cycle:
        return "C" + std::to_string(t.n);
    case Term::Circulant:
        return term_spec(t).to_string();
    }
    return {};
}

} // namespace

CirculantSpec parse_circulant(std::string_view text)
{
    Cursor in(text);
    if (std::toupper(static_cast<unsigned char>(in.peek())) != 'C')
        in.fail("expected 'C'");
    Term t = parse_term(in);
    if (t.kind != Term::Circulant)
        in.fail("expected '('");
    if (!in.at_end())
        in.fail("unexpected trailing input");
    return term_spec(t);
}

GraphExpression parse_graph_expression(std::string_view text)
{
    Cursor in(text);
    const Term left = parse_term(in);
    GraphExpression out;
    out.vertex_transitive = true;

    if (in.at_end()) {
        out.graph = term_graph(left);
        out.label = term_label(left);
        if (left.kind != Term::Complete || left.n >= 2) {
            out.circulant = term_spec(left);
            out.circulant_labeling = left.kind != Term::Cycle || left.n >= 3;
        }
        return out;
    }

    const int op_line = in.line(), op_column = in.column();
    if (in.accept_word("box")) {
        const Term right = parse_term(in);
        if (!in.at_end())
            in.fail("unexpected trailing input");
        try {
            out.graph = cartesian_product(term_graph(left), term_graph(right));
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), op_line, op_column);
        }
        out.label = term_label(left) + " box " + term_label(right);
        return out;
    }
    if (in.accept_word("torus")) {
        const Term right = parse_term(in);
        if (!in.at_end())
            in.fail("unexpected trailing input");
        const bool is_cycle = right.kind == Term::Cycle
                              || (right.kind == Term::Circulant && right.connections == std::vector<int>{1});
        if (!is_cycle)
            throw ParseError("the right factor of a torus product must be a cycle Cm", right.line, right.column);
        try {
            out.graph = torus_product(term_graph(left), right.n);
            // G ⊠ C_m ≅ C_{nm}(1, mS) for a circulant G = C_n(S).
            const CirculantSpec g = term_spec(left);
            std::vector<int> connections{1};
            for (int s : g.connections())
                connections.push_back(right.n * s);
            out.circulant = CirculantSpec::normalized(g.order() * right.n, connections);
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), op_line, op_column);
        }
        out.label = term_label(left) + " torus C" + std::to_string(right.n);
        return out;
    }
    in.fail("expected 'box', 'torus' or end of input");
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "# order " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph read_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    int order = -1;
    int max_index = -1;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            std::istringstream header(line.substr(first + 1));
            std::string word;
            int value = 0;
            if (header >> word && word == "order") {
                if (!(header >> value) || value < 0 || value > kMaxOrder)
                    throw ParseError("bad order header", line_number, static_cast<int>(first) + 1);
                order = value;
            }
            continue;
        }
        std::istringstream fields(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError("expected two vertex indices", line_number, static_cast<int>(first) + 1);
        if (u < 0 || v < 0 || u >= kMaxOrder || v >= kMaxOrder)
            throw ParseError("vertex index out of range", line_number, static_cast<int>(first) + 1);
        if (u == v)
            throw ParseError("loop edge", line_number, static_cast<int>(first) + 1);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));
    }
    if (order < 0)
        order = max_index + 1;
    if (max_index >= order)
        throw ParseError("edge endpoint exceeds the declared order", line_number, 1);
    return Graph(order, edges);
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

void write_dot(std::ostream& out, const Graph& g, std::string_view name)
{
    out << "graph \"" << name << "\" {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

std::string to_dot(const Graph& g, std::string_view name)
{
    std::ostringstream out;
    write_dot(out, g, name);
    return out.str();
}

} // namespace circforce
