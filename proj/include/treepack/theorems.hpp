#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/property_p.hpp"
#include "treepack/rational.hpp"

namespace treepack {

/// Half-width of the band in which a spectral comparison is reported as a boundary case.
inline constexpr double kBoundaryBand = 1e-9;

struct BRecognition {
    bool matched = false;
    int n = 0;
    int s = 0;  // size of the clique holding the hub
    int k = 0;
    int hub = -1;
    VertexSet hub_side;  // the K_s vertices
};

/// Every way of reading G as B_{n,s}^k, ordered by (s, hub).
std::vector<BRecognition> recognize_B_all(const Graph& g);
/// First entry of recognize_B_all, or an unmatched result.
BRecognition recognize_B(const Graph& g);
bool is_B(const Graph& g, int s, int k);

enum class TheoremId { t16, t17, t41 };
enum class ClauseStatus { holds, fails, boundary };
enum class Conclusion { certified, refuted, extremal_b, unknown };

const char* to_string(TheoremId t);
const char* to_string(ClauseStatus s);
const char* to_string(Conclusion c);

struct Clause {
    std::string name;
    ClauseStatus status = ClauseStatus::fails;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<Rational> rhs_exact;
};

struct TheoremReport {
    TheoremId theorem = TheoremId::t16;
    int k = 0;
    double alpha = 0.0;
    int n = 0;
    int min_degree = 0;
    ClauseStatus hypothesis = ClauseStatus::fails;
    std::vector<Clause> clauses;
    Conclusion conclusion = Conclusion::unknown;
    std::optional<PVerdict> verdict;
    std::optional<BRecognition> extremal;
    bool consistent = true;
};

struct TheoremOptions {
    CheckOptions check;
    /// Run check_P even when the hypothesis fails.
    bool conclude_when_hypothesis_fails = true;
};

/// 2(k + (d-1)/d)/(d+1), the gap below δ in the second-eigenvalue conditions.
Rational second_eigenvalue_gap(int k, int min_degree);

TheoremReport eval_T16(const Graph& g, int k, const TheoremOptions& options = {});
TheoremReport eval_T17(const Graph& g, int k, const TheoremOptions& options = {});
TheoremReport eval_T41(const Graph& g, int k, double alpha, const TheoremOptions& options = {});

struct ValidationConfig {
    std::uint64_t seed = 0;
    int samples = 20;  // per family
    std::vector<std::string> families{"dense", "b_super", "b_exact", "gnp"};
    int n_min = 10;
    int n_max = 14;
    int max_removed = 3;
    int k_min = 1;
    int k_max = 3;
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75};
    int b_n = 25;
    int b_s = 11;
    int b_k = 2;
    int b_max_extra = 6;
    double gnp_p = 0.5;
    int gnp_n_max = 10;
    std::uint64_t budget = 1'000'000;

    void validate() const;
};

struct TheoremTally {
    int evaluations = 0;
    int hypothesis_holds = 0;
    int hypothesis_boundary = 0;
    int hypothesis_fails = 0;
    int holds_certified = 0;
    int holds_extremal = 0;
    int holds_unknown = 0;
    int violations = 0;
};

struct ValidationReport {
    ValidationConfig config;
    int graphs = 0;
    TheoremTally t16;
    TheoremTally t17;
    TheoremTally t41;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Samples graphs, evaluates all three theorems, and tallies the outcomes.
/// Output is independent of `threads`.
ValidationReport random_validation(const ValidationConfig& config, int threads = 1);

struct ReproRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool match = false;
    std::string detail;
};

/// Reference eigenvalues, packing numbers, and counterexample verdicts,
/// recomputed and compared against their expected values.
std::vector<ReproRow> reproduce_reference_values(std::uint64_t budget = 100'000'000);

}  // namespace treepack
