#ifndef IHULL_CENSUS_HPP
#define IHULL_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ihull/bounds.hpp"
#include "ihull/model.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

enum class CensusMode { exhaustive, sampled };

/**
 * One ensemble instance with its vertex count. Weight is the ensemble
 * normalization: 1/size for exhaustive runs, 1/sample_count for sampled
 * runs, so the weighted sum of counts is the (estimated) mean.
 */
struct CensusRecord {
    std::string ensemble; // "congruence" or "knapsack"
    long n = 0;
    Int parameter;        // modulus delta or weight gamma
    Int instance_id;
    std::vector<Int> a;
    Int a0;
    Int vertex_count;
    Rat weight;

    bool operator==(const CensusRecord&) const = default;
};

struct CensusOptions {
    CensusMode mode = CensusMode::exhaustive;
    std::size_t sample_count = 1000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    Int point_cap = Int(1) << 32;
    Int exhaustive_limit = 1000000; // largest ensemble size run exhaustively
};

struct CongruenceMeanResult {
    Rat mean; // exact for exhaustive runs, sample mean otherwise
    std::vector<CensusRecord> records;
};

/**
 * Mean hull vertex count over the congruence ensemble at modulus delta.
 * The mean ranges over all n free coordinates (a_1..a_{n-1} and a0).
 * Throws CapExceeded when an exhaustive run would exceed exhaustive_limit.
 */
CongruenceMeanResult mean_congruence_vertex_count(long n, const Int& delta,
                                                  const CensusOptions& opt = {});

struct KnapsackMeanResult {
    Rat mean;                   // psi: mean knapsack hull count
    Rat paired_congruence_mean; // phi over the matched congruence instances
    long inequality_failures = 0;
    std::vector<Int> failing_ids;
    std::vector<CensusRecord> records;
};

/**
 * Mean hull vertex count over the knapsack ensemble at weight gamma. Each
 * instance (a_1..a_{n-1}, gamma; a0) is paired with the congruence instance
 * ((a_1..a_{n-1}, 1), a0 mod gamma, gamma); the per-instance inequality
 * |knapsack hull| >= |congruence hull| is checked and failures recorded.
 * Exhaustively, the paired instances cover the congruence ensemble exactly
 * once, so paired_congruence_mean equals its exact mean.
 */
KnapsackMeanResult mean_knapsack_vertex_count(long n, const Int& gamma,
                                              const CensusOptions& opt = {});

/** Vertex count routing zero-weight instances through recession handling. */
Int knapsack_vertex_count(const KnapsackInstance& k, const Int& cap);

struct BoundCheck {
    BoundValue bound;
    bool holds = true;
};

struct BoundReport {
    std::string instance;
    long n = 0;
    long m = 0;
    Int vertex_count;
    std::vector<BoundCheck> checks;
    std::optional<long> facets;      // bounded full-dimensional, n <= 3
    std::optional<Int> facet_limit;  // xi_n(vertex count)
    std::optional<bool> facet_limit_ok;

    /** Sound upper bounds whose hold flag is false. */
    long violations() const;
    const BoundCheck* find(const std::string& name) const;
};

/** Evaluate every applicable bound against the true vertex count. */
BoundReport bound_report(const LinearSystem& sys, const Int& point_cap,
                         const std::string& label = "system");
BoundReport bound_report(const KnapsackInstance& k, const Int& point_cap,
                         const std::string& label = "knapsack");

struct SweepResult {
    long instances = 0;
    long violations = 0;
    std::vector<std::string> details;
};

/** bound_report over every given instance, collecting violations. */
SweepResult soundness_sweep(const std::vector<LinearSystem>& systems,
                            const std::vector<KnapsackInstance>& knapsacks,
                            const Int& point_cap);

/** Deterministic uniform integer draws via rejection off mt19937_64. */
class InstanceSampler {
public:
    explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

    /** Uniform on [lo, hi]; the range must fit in 64 bits. */
    Int uniform(const Int& lo, const Int& hi);
    long uniform_long(long lo, long hi);

private:
    std::uint64_t draw_below(std::uint64_t n);

    std::mt19937_64 rng_;
};

/**
 * Random systems with rank(A) = n and bounded feasible region, entries in
 * [-alpha_max, alpha_max]. Right-hand sides in [0, b_max] when nonneg_rhs
 * (so the origin is feasible), else [-2, b_max]. Draws are rejected until
 * the region is bounded, so the count is exact and runs are reproducible.
 */
std::vector<LinearSystem> random_bounded_systems(long n_min, long n_max, long m_max,
                                                 const Int& alpha_max, const Int& b_max,
                                                 std::size_t count, std::uint64_t seed,
                                                 bool nonneg_rhs);

/** Random knapsacks with weights in [1, a_max] and a0 in [0, a0_max]. */
std::vector<KnapsackInstance> random_knapsacks(long n_min, long n_max, const Int& a_max,
                                               const Int& a0_max, std::size_t count,
                                               std::uint64_t seed);

enum class ExportFormat { csv, json };

std::string records_to_csv(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> records_from_csv(const std::string& text);
std::string records_to_json(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> records_from_json(const std::string& text);

void export_records(const std::vector<CensusRecord>& records, ExportFormat format,
                    const std::string& path);
std::vector<CensusRecord> import_records(ExportFormat format, const std::string& path);

} // namespace ihull

#endif
