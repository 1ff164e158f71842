#pragma once

#include <circforce/bounds.hpp>
#include <circforce/circulant.hpp>
#include <circforce/families.hpp>
#include <circforce/forcing.hpp>
#include <circforce/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace circforce {

enum class Verdict {
    Confirmed,
    BoundConsistent,
    Unchecked,
    Contradicted,
};

const char* to_string(Verdict v);

struct PredictionCheck {
    Prediction prediction;
    Verdict verdict = Verdict::Unchecked;
    std::string method;
};

/// An explicit matrix with the graph's pattern and the nullity it certifies.
struct MatrixCertificate {
    std::string name;
    Family family = Family::RegularDegree;
    QuadMatrix matrix;
    int rank = 0;
    int nullity = 0;
    bool symmetric = false;
    bool pattern_matches = false;
    /// The family asserts M = Z for this graph.
    bool equality_claimed = false;
    Verdict verdict = Verdict::Unchecked;
};

/// A zero forcing set built from a proof rather than found by search.
struct ConstructionCheck {
    std::string name;
    FillState set;
    bool forcing = false;
    Verdict verdict = Verdict::Unchecked;
};

/// Explicit witness matrices applicable to the spec, relabeled onto its own vertices.
std::vector<MatrixCertificate> witness_matrices_for(const CirculantSpec& spec,
                                                    const std::vector<Prediction>& predictions);

/// Constructive zero forcing sets applicable to the spec, relabeled onto its own vertices.
std::vector<ConstructionCheck> constructions_for(const CirculantSpec& spec,
                                                 const std::vector<Prediction>& predictions);

struct VerifyOptions {
    std::optional<double> budget_seconds;
    int ceiling = 24;
    bool fort_pruning = false;
    unsigned threads = 1;
};

struct VerificationReport {
    explicit VerificationReport(CirculantSpec s) : spec(std::move(s)) {}

    CirculantSpec spec;
    bool complete = true;
    std::string incomplete_reason;
    /// The search refused a component larger than the configured ceiling.
    bool ceiling_exceeded = false;

    std::vector<PredictionCheck> predictions;
    std::optional<Interval> prediction_intersection;

    std::optional<LowerBounds> lower_bounds;
    std::optional<int> z_search;
    std::optional<FillState> witness;
    bool witness_replayed = false;

    std::vector<MatrixCertificate> matrices;
    std::vector<ConstructionCheck> constructions;

    /// Wall-clock time; kept out of the default serialized output.
    double search_seconds = 0.0;
    double total_seconds = 0.0;

    bool contradicted() const;
};

/// Predicts, searches Z from scratch (size 1 upward, ignoring the predictions), replays the witness,
/// certifies matrix nullities and constructive sets, and grades every claim. Any prediction
/// or certificate at odds with the search, or predictions that disagree with each other,
/// are CONTRADICTED.
VerificationReport verify(const CirculantSpec& spec, const VerifyOptions& options = {});

/// Every connected circulant C_n(S) with 2 <= n <= max_n, by n then by S in colex order.
std::vector<CirculantSpec> connected_circulants(int max_n);

struct SweepOptions {
    int max_n = 16;
    VerifyOptions verify;
    /// Worker threads across specs; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SweepSummary {
    std::vector<VerificationReport> reports;
    int incomplete = 0;
    int contradictions = 0;
    int confirmed = 0;
    int bound_consistent = 0;

    bool ok() const { return contradictions == 0 && incomplete == 0; }
};

/// verify() over connected_circulants(max_n); report order is independent of thread count.
SweepSummary sweep(const SweepOptions& options = {});

} // namespace circforce
