#ifndef IHULL_FAMILIES_HPP
#define IHULL_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "ihull/model.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

/** F_1 = F_2 = 1, F_s = F_{s-1} + F_{s-2}. */
Int fibonacci(long s);

/**
 * Two readings of the Fibonacci knapsack family: the as-printed weights
 * (F_2k, F_2k-1) and the index-swapped weights (F_2k, F_2k+1), both with
 * right-hand side F_2k+1 squared minus one. The swapped variant is the one
 * whose hull realizes k+3 vertices at small k; tests run both.
 */
enum class RubinVariant { as_printed, index_swapped };

KnapsackInstance rubin_instance(long k, RubinVariant variant);

/**
 * The coupled integer sequences behind the two-variable extremal
 * instances: beta_1 = 1, beta_2 = 2, beta_{s+1} = 2 beta_s + beta_{s-1};
 * gamma_2 = gamma'_2 = 1, gamma_{s+1} = beta_s + gamma'_s,
 * gamma'_{s+1} = beta_{s+1} - beta_s + gamma_s. gamma entries below s = 2
 * are reported as zero.
 */
struct VSSequences {
    long s = 0;
    Int beta, gamma, gamma_prime;
};

std::vector<VSSequences> vs_sequences(long s_max);

/** Two-variable knapsack a x + b y <= c. */
struct VSInstance {
    Int a, b, c;

    KnapsackInstance knapsack() const { return KnapsackInstance({a, b}, c); }
};

/**
 * The s-th extremal two-variable instance: a = beta_{s-1}, b = beta_s, and
 * c = gamma_s (beta_{s-1} + beta_s) for even s,
 * c = gamma_{s+1} beta_{s-1} + gamma_{s-1} beta_s for odd s. Its hull has
 * 2s vertices.
 */
VSInstance vs_extremal_instance(long s);

/** Weights (2^{n-1}, ..., 2, 1) with right-hand side 2^n - 1. */
KnapsackInstance power_of_two_knapsack(long n);

/**
 * The three-variable family with one coefficient per root of
 * t^3 + t^2 - 2t - 1 (the algebraic numbers 2cos(2pi/7), 2cos(4pi/7),
 * 2cos(6pi/7)): rows x,y,z >= 0 plus
 *   x + psi y + theta z <= nu
 *   x + theta y + phi z <= nu
 * with each root replaced by its nearest multiple of 2^-p and everything
 * scaled by 2^p to integers.
 */
LinearSystem morgan_family(const Int& nu, unsigned p);

/**
 * Congruence ensemble at modulus delta: coefficients (a_1..a_{n-1}, 1) and
 * right-hand side a0, each free coordinate ranging over [0, delta-1] in
 * lexicographic order (a_1, ..., a_{n-1}, a0).
 */
struct CongruenceEnsemble {
    long n;
    Int delta;

    CongruenceEnsemble(long n_, Int delta_);
    Int size() const;
    CongruenceInstance at(Int idx) const;
};

/**
 * Knapsack ensemble at weight gamma: a_i in [0, gamma-1] for i < n,
 * a_n = gamma, a0 in [gamma(gamma-1), gamma^2-1], lexicographic. Instances
 * with zero weights are produced in relaxed form.
 */
struct KnapsackEnsemble {
    long n;
    Int gamma;

    KnapsackEnsemble(long n_, Int gamma_);
    Int size() const;
    KnapsackInstance at(Int idx) const;
};

/**
 * count draws from [0, size) by rejection off mt19937_64, reproducible
 * across platforms for a fixed seed. size must fit in 64 bits.
 */
std::vector<Int> sample_indices(const Int& size, std::size_t count, std::uint64_t seed);

/** One row of the minimum-b table. */
struct MinBEntry {
    long s = 0;
    bool found = false;
    Int b, a, c;              // lexicographically first witness (b, a, c)
    bool witness_c_at_cap = false;
};

/**
 * For each s in [2, s_target], the least b admitting a <= min(b, a_cap) and
 * c <= c_cap with at least s hull vertices for a x + b y <= c. Minima are
 * relative to the caps: a smaller b could in principle need c beyond c_cap.
 */
std::vector<MinBEntry> min_b_search(long s_target, const Int& a_cap,
                                    const Int& b_cap, const Int& c_cap);

} // namespace ihull

#endif
