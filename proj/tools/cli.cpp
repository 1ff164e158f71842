#include "cli.hpp"

#include <circforce/bounds.hpp>
#include <circforce/circulant_matrices.hpp>
#include <circforce/errors.hpp>
#include <circforce/forcing.hpp>
#include <circforce/graph_io.hpp>
#include <circforce/matrix_io.hpp>
#include <circforce/report.hpp>
#include <circforce/search.hpp>
#include <circforce/verify.hpp>
#include <circforce/witness_matrices.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace circforce::cli {

namespace {

class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GraphExpression load_graph(const std::string& target)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(target, ec)) {
        std::ifstream in(target);
        if (!in)
            throw std::runtime_error("cannot open " + target);
        GraphExpression g;
        g.graph = read_edge_list(in);
        g.label = target;
        return g;
    }
    return parse_graph_expression(target);
}

CirculantSpec load_circulant(const std::string& target)
{
    const GraphExpression g = parse_graph_expression(target);
    if (!g.circulant)
        throw UsageFailure(target + " is not a circulant graph");
    return *g.circulant;
}

std::string braces(const std::vector<int>& vertices)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out += (i ? ", " : "") + std::to_string(vertices[i]);
    return out + "}";
}

struct WitnessChoice {
    std::string name;
    int n = 0;
};

WitnessChoice parse_witness(const std::string& text)
{
    if (text == "c9")
        return {"c9", 9};
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string digits = text.substr(colon + 1);
        if ((kind == "k4" || kind == "k6" || kind == "hankel") && !digits.empty()
            && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })
            && digits.size() <= 3)
            return {kind, std::stoi(digits)};
    }
    throw UsageFailure("unknown witness '" + text + "'; expected c9, k4:<n>, k6:<n> or hankel:<n>");
}

QuadMatrix witness_matrix(const WitnessChoice& w)
{
    if (w.name == "c9")
        return lift(witness_c913());
    if (w.n < 3)
        throw UsageFailure("witness matrices need n >= 3");
    if (w.n > 16)
        throw UsageFailure("witness matrices are limited to n <= 16");
    if (w.name == "k4")
        return witness_k4(w.n);
    if (w.name == "k6")
        return witness_k6(w.n);
    return lift(hankel(w.n).matrix);
}

int matrix_rank(const QuadMatrix& m)
{
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational())
                return rank(m);
            r(i, j) = m(i, j).rational_part();
        }
    return rank(r);
}

QuadMatrix load_matrix(const std::string& witness, const std::string& path)
{
    if (!witness.empty() && !path.empty())
        throw UsageFailure("give either --witness or a matrix file, not both");
    if (!witness.empty())
        return witness_matrix(parse_witness(witness));
    if (path.empty())
        throw UsageFailure("expected --witness or a matrix file");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(const std::optional<double>& seconds)
{
    if (!seconds)
        return std::nullopt;
    return std::chrono::steady_clock::now()
           + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Zero forcing numbers and maximum nullity certificates for circulant graphs", "circforce"};
    app.require_subcommand(1);

    std::string target;
    std::string format = "edgelist";
    std::string witness;
    std::vector<int> fill;
    bool chronology = false;
    bool table = false;
    bool timing = false;
    bool fort_pruning = false;
    int ceiling = 24;
    int max_n = 16;
    unsigned threads = 1;
    std::optional<double> budget;

    const auto graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", target, "Graph expression (C12(1,6), C7, K4, K3 box C5, K3 torus C6) or edge-list file")
            ->required();
    };
    const auto search_opts = [&](CLI::App* cmd) {
        cmd->add_option("--ceiling", ceiling, "Largest component the exact search accepts")
            ->capture_default_str()
            ->check(CLI::Range(1, 64));
        cmd->add_option("--budget-seconds", budget, "Wall-clock limit for the search")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "Search threads (0 = hardware concurrency)")->capture_default_str();
        cmd->add_flag("--fort-pruning", fort_pruning, "Skip candidates that miss a known fort");
    };

    auto* gen = app.add_subcommand("gen", "Print a graph as an edge list or in DOT");
    graph_arg(gen);
    gen->add_option("--format", format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot"}))->capture_default_str();

    auto* closure_cmd = app.add_subcommand("closure", "Close a fill set under the filling rule");
    graph_arg(closure_cmd);
    closure_cmd->add_option("--fill", fill, "Initially filled vertices, comma separated")->delimiter(',')->required();
    closure_cmd->add_flag("--chronology", chronology, "List the forces in the order they happen");

    auto* zf = app.add_subcommand("zf", "Exact zero forcing number with a minimum witness");
    graph_arg(zf);
    search_opts(zf);
    zf->add_flag("--timing", timing, "Report search time on stderr");

    auto* bounds = app.add_subcommand("bounds", "Degree and girth lower bounds on Z");
    graph_arg(bounds);

    auto* rank_cmd = app.add_subcommand("rank", "Exact rank and nullity of a matrix");
    rank_cmd->add_option("matrix", target, "Matrix file (rows of p/q or p/q+r/s*sqrt(D) entries)");
    rank_cmd->add_option("--witness", witness, "c9, k4:<n>, k6:<n> or hankel:<n>");

    auto* witness_cmd = app.add_subcommand("witness", "Print a witness matrix in exact text form");
    witness_cmd->add_option("--witness", witness, "c9, k4:<n>, k6:<n> or hankel:<n>")->required();

    auto* predict_cmd = app.add_subcommand("predict", "Closed-form predictions for a circulant");
    predict_cmd->add_option("spec", target, "Circulant such as C16(1,4)")->required();
    predict_cmd->add_flag("--table", table, "Aligned text instead of JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Check every prediction against search and certificates");
    verify_cmd->add_option("spec", target, "Circulant such as C12(1,4)")->required();
    verify_cmd->add_flag("--table", table, "Aligned text instead of JSON");
    verify_cmd->add_flag("--timing", timing, "Include timings in the report");
    search_opts(verify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify every connected circulant up to a given order");
    sweep_cmd->add_option("--max-n", max_n, "Largest order")->capture_default_str()->check(CLI::Range(2, 64));
    sweep_cmd->add_option("--budget-seconds", budget, "Wall-clock limit per circulant")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--threads", threads, "Worker threads across circulants (0 = hardware concurrency)");
    sweep_cmd->add_flag("--table", table, "Aligned text instead of JSON");
    sweep_cmd->add_flag("--timing", timing, "Include timings in the report");

    if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown command '" << args.front() << "'\nRun with --help for the list of commands.\n";
        return UsageError;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    try {
        if (*gen) {
            const auto g = load_graph(target);
            if (format == "dot")
                write_dot(out, g.graph, g.label);
            else
                write_edge_list(out, g.graph);
            return Ok;
        }
        if (*closure_cmd) {
            const auto g = load_graph(target);
            std::vector<Force> forces;
            const FillState closed = closure(g.graph, FillState::from_vertices(g.graph, fill), forces);
            out << "closure: " << braces(closed.vertices()) << '\n';
            out << "filled: " << closed.size() << " of " << g.graph.order() << '\n';
            out << "forcing: " << (closed.is_full() ? "yes" : "no") << '\n';
            if (chronology)
                for (auto [v, w] : forces)
                    out << v << " -> " << w << '\n';
            return Ok;
        }
        if (*zf) {
            const auto g = load_graph(target);
            SearchOptions options;
            options.ceiling = ceiling;
            options.vertex_transitive = g.vertex_transitive;
            options.fort_pruning = fort_pruning;
            options.threads = threads;
            options.deadline = deadline_after(budget);
            const auto start = std::chrono::steady_clock::now();
            const ZfResult z = zf_exact(g.graph, options);
            out << "Z = " << z.z << '\n';
            out << "witness: " << braces(z.witness.vertices()) << '\n';
            if (timing)
                err << "search: " << z.candidates << " candidates (" << z.pruned << " pruned), "
                    << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
            return Ok;
        }
        if (*bounds) {
            const auto g = load_graph(target);
            const LowerBounds b = zf_lower_bounds(g.graph);
            out << "lower bound = " << b.value << '\n';
            out << "regular-degree = " << (b.regular ? std::to_string(*b.regular) : "-") << '\n';
            out << "girth-degree = " << (b.girth ? std::to_string(*b.girth) : "-") << '\n';
            return Ok;
        }
        if (*rank_cmd) {
            const QuadMatrix m = load_matrix(witness, target);
            const int r = matrix_rank(m);
            out << "rank = " << r << ", nullity = " << m.cols() - r << '\n';
            return Ok;
        }
        if (*witness_cmd) {
            write_matrix(out, witness_matrix(parse_witness(witness)));
            return Ok;
        }
        if (*predict_cmd) {
            const CirculantSpec spec = load_circulant(target);
            const auto predictions = predict(spec);
            out << (table ? predictions_to_table(spec, predictions) : predictions_to_json(spec, predictions));
            return Ok;
        }
        if (*verify_cmd) {
            const CirculantSpec spec = load_circulant(target);
            VerifyOptions options;
            options.budget_seconds = budget;
            options.ceiling = ceiling;
            options.fort_pruning = fort_pruning;
            options.threads = threads;
            const VerificationReport report = verify(spec, options);
            out << (table ? report_to_table(report) : report_to_json(report, timing));
            if (timing && table)
                err << "total: " << report.total_seconds << " s\n";
            if (report.contradicted())
                return ContradictionFound;
            return report.ceiling_exceeded ? CeilingExceeded : Ok;
        }
        if (*sweep_cmd) {
            SweepOptions options;
            options.max_n = max_n;
            options.verify.budget_seconds = budget;
            options.threads = threads;
            const SweepSummary summary = sweep(options);
            out << (table ? sweep_to_table(summary) : sweep_to_json(summary, timing));
            if (summary.contradictions > 0)
                return ContradictionFound;
            const bool ceiling_hit = std::any_of(summary.reports.begin(), summary.reports.end(),
                                                 [](const VerificationReport& r) { return r.ceiling_exceeded; });
            return ceiling_hit ? CeilingExceeded : Ok;
        }
    }
    catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return UsageError;
    }
    catch (const UsageFailure& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    catch (const SearchCeilingExceeded& e) {
        err << "error: " << e.what() << '\n';
        return CeilingExceeded;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Failure;
    }
    return UsageError;
}

} // namespace circforce::cli
