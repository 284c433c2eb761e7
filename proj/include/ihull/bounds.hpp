#ifndef IHULL_BOUNDS_HPP
#define IHULL_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihull/model.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

enum class BoundKind { upper, lower, informational };

/**
 * One evaluated vertex-count bound. Informational bounds carry a
 * caller-supplied constant or a known validity gap and are never asserted.
 * Lower bounds apply to ensemble means, not single counts. vacuous marks a
 * lower bound whose base went nonpositive (value clamped to zero).
 */
struct BoundValue {
    std::string name;
    BoundKind kind = BoundKind::upper;
    Real value;
    bool applicable = true;
    bool vacuous = false;
    std::optional<Rat> caller_constant;
    std::vector<std::pair<std::string, std::string>> parameters;
};

/**
 * Upper-bound check with a one-ulp-style margin: the count violates the
 * bound only if it exceeds ceil(value + 2^-64). Lower-kind and
 * informational bounds always pass here.
 */
bool bound_holds(const BoundValue& bv, const Int& vertex_count);

/** Lower-bound check for ensemble means, with the same margin courtesy. */
bool lower_bound_met(const BoundValue& bv, const Rat& mean);

/** prod_j (1 + log2(k_j - 1)) over caps k_j >= 2 of a separation-property set. */
BoundValue separation_set_bound(const std::vector<Int>& ks);

/** (1 + log2(n) + r*log2(alpha*sqrt(r)))^(r-1) for standard-form systems of rank r. */
BoundValue standard_form_rank_bound(long n, long r, const Int& alpha);

/** (1 + log2(n+1) + n*log2(alpha*sqrt(n)))^(2n+m-1) for general systems. */
BoundValue general_system_bound(long n, long m, const Int& alpha);

/** prod_j (1 + log2(1 + a0/a_j)) for a positive-weight knapsack. */
BoundValue knapsack_ratio_bound(const KnapsackInstance& k);

/**
 * n*log2(2n)*(1 + log2(1 + a0/gamma))^(n-1) with gamma a designated weight;
 * inapplicable below n = 2.
 */
BoundValue knapsack_min_weight_bound(long n, const Int& a0, const Int& gamma);

/** 2*m^n*(6*n^2*phi)^(n-1) in terms of the encoding length phi. */
BoundValue encoding_length_vertex_bound(long n, long m, const Real& phi);

/** m^n*(6*n^4*log2(1+alpha))^(n-1) in terms of the largest coefficient. */
BoundValue coefficient_vertex_bound(long n, long m, const Int& alpha);

/**
 * C(m - floor((n-1)/2) - 1, floor(n/2)) + C(m - floor(n/2) - 1, floor((n-1)/2)),
 * the cyclic-polytope vertex/facet extremum; degenerate binomials are zero.
 */
Int xi(long n, long m);

/** n^(7n)*xi(n,m)*(6*log2(1+alpha) + 3*log2(n))^(n-1). */
BoundValue xi_vertex_bound(long n, long m, const Int& alpha);

/**
 * c*m^floor(n/2)*log2^(n-1)(1+alpha1) with the constant supplied by the
 * caller; informational only.
 */
BoundValue rounding_pipeline_bound(long n, long m, const Int& alpha1, const Rat& c);

/** C(floor(log2 a_i) + n - 1, n - 1): vertex cap for one sign-relaxed piece. */
Int relaxed_piece_bound(long n, const Int& a_i);

/** 1 + n*(floor(log2 alpha1) + 1)^(n-1): vertex cap for the relaxed union. */
BoundValue relaxed_union_bound(long n, const Int& alpha1);

/**
 * 2*log_{1+sqrt 2}(1 + 2*sqrt(2)*a) for two-variable knapsacks with least
 * weight a; informational (known to dip below attained counts at a = 1).
 */
BoundValue two_dim_knapsack_bound(const Int& a);

/** xi(n, v): most facets a bounded hull with v vertices can have. */
Int mcmullen_facet_bound(long n, const Int& v);

/**
 * Lower bound on the mean congruence-hull vertex count at modulus delta:
 * 1/(4n*3^n*((n-1)!)^2) / (n-1)^(n-1) * (log2 delta - n - 2 - n*log2(n-1))^(n-1),
 * clamped to zero (vacuous) when the base is nonpositive.
 */
BoundValue mean_vertex_lower_bound(long n, const Int& delta);

/** xi(n,m)/(4^(n+2)*n^n*(n-1)!) * ln^(n-1)(alpha): existential vertex lower bound. */
BoundValue xi_vertex_lower_bound(long n, long m, const Int& alpha);

/**
 * c*m^(floor(n/2)^2)*log2^((n-1)*floor(n/2))(1+alpha) on facet counts;
 * caller-supplied constant, informational only.
 */
BoundValue facet_count_bound(long n, long m, const Int& alpha, const Rat& c);

} // namespace ihull

#endif
