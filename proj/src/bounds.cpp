#include "ihull/bounds.hpp"

#include "ihull/errors.hpp"

namespace ihull {

namespace {

std::string str_of(long v) { return std::to_string(v); }

Real log2_one_plus(const Int& alpha) { return log2(Rat(alpha) + 1); }

Int factorial(long n) {
    Int f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

bool bound_holds(const BoundValue& bv, const Int& vertex_count) {
    if (bv.kind != BoundKind::upper || !bv.applicable) return true;
    return count_within(vertex_count, bv.value);
}

bool lower_bound_met(const BoundValue& bv, const Rat& mean) {
    if (bv.kind != BoundKind::lower || !bv.applicable || bv.vacuous) return true;
    // mean + 2^-64 >= value
    Real lhs = Real(mean) + Real(make_rat(Int(1), Int(1) << 64));
    return lhs.compare(bv.value) >= 0;
}

BoundValue separation_set_bound(const std::vector<Int>& ks) {
    if (ks.empty()) throw DomainError("separation bound: no coordinate caps");
    BoundValue bv;
    bv.name = "separation_set";
    Real prod(1L);
    for (std::size_t j = 0; j < ks.size(); ++j) {
        if (ks[j] < 2) throw DomainError("separation bound: caps must be at least 2");
        bv.parameters.emplace_back("k" + std::to_string(j), dec(ks[j]));
        if (ks[j] > 2) prod = prod * (Real(1L) + log2(Rat(ks[j] - 1)));
    }
    bv.value = prod;
    return bv;
}

BoundValue standard_form_rank_bound(long n, long r, const Int& alpha) {
    if (n < 1 || r < 1 || alpha < 1)
        throw DomainError("rank bound: need n >= 1, r >= 1, alpha >= 1");
    BoundValue bv;
    bv.name = "standard_form_rank";
    bv.parameters = {{"n", str_of(n)}, {"r", str_of(r)}, {"alpha", dec(alpha)}};
    Real base = Real(1L) + log2(Rat(Int(n))) +
                Real(Int(r)) * log2(Real(alpha) * sqrt(Real(Int(r))));
    bv.value = base.pow(static_cast<unsigned long>(r - 1));
    return bv;
}

BoundValue general_system_bound(long n, long m, const Int& alpha) {
    if (n < 1 || m < 1 || alpha < 1)
        throw DomainError("system bound: need n >= 1, m >= 1, alpha >= 1");
    BoundValue bv;
    bv.name = "general_system";
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha", dec(alpha)}};
    Real base = Real(1L) + log2(Rat(Int(n) + 1)) +
                Real(Int(n)) * log2(Real(alpha) * sqrt(Real(Int(n))));
    bv.value = base.pow(static_cast<unsigned long>(2 * n + m - 1));
    return bv;
}

BoundValue knapsack_ratio_bound(const KnapsackInstance& k) {
    BoundValue bv;
    bv.name = "knapsack_ratio";
    Real prod(1L);
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (k.a[j] < 1) throw DomainError("ratio bound: weights must be positive");
        bv.parameters.emplace_back("a" + std::to_string(j + 1), dec(k.a[j]));
        prod = prod * (Real(1L) + log2(Rat(1) + make_rat(k.a0, k.a[j])));
    }
    bv.parameters.emplace_back("a0", dec(k.a0));
    bv.value = prod;
    return bv;
}

BoundValue knapsack_min_weight_bound(long n, const Int& a0, const Int& gamma) {
    if (gamma < 1) throw DomainError("weight bound: gamma must be positive");
    if (a0 < 0) throw DomainError("weight bound: negative right-hand side");
    BoundValue bv;
    bv.name = "knapsack_min_weight";
    bv.parameters = {{"n", str_of(n)}, {"a0", dec(a0)}, {"gamma", dec(gamma)}};
    if (n < 2) {
        bv.applicable = false;
        bv.value = Real(0L);
        return bv;
    }
    Real factor = Real(1L) + log2(Rat(1) + make_rat(a0, gamma));
    bv.value = Real(Int(n)) * log2(Rat(2 * n)) * factor.pow(static_cast<unsigned long>(n - 1));
    return bv;
}

BoundValue encoding_length_vertex_bound(long n, long m, const Real& phi) {
    if (n < 1 || m < 1 || !(phi.sign() > 0))
        throw DomainError("encoding bound: need n, m >= 1 and phi > 0");
    BoundValue bv;
    bv.name = "encoding_length_vertex";
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"phi", phi.str(25)}};
    Real base = Real(6L * n * n) * phi;
    Real mn = Real(Int(m)).pow(static_cast<unsigned long>(n));
    bv.value = Real(2L) * mn * base.pow(static_cast<unsigned long>(n - 1));
    return bv;
}

BoundValue coefficient_vertex_bound(long n, long m, const Int& alpha) {
    if (n < 1 || m < 1 || alpha < 1)
        throw DomainError("coefficient bound: need n, m >= 1, alpha >= 1");
    BoundValue bv;
    bv.name = "coefficient_vertex";
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha", dec(alpha)}};
    Real base = Real(6L * n * n * n * n) * log2_one_plus(alpha);
    Real mn = Real(Int(m)).pow(static_cast<unsigned long>(n));
    bv.value = mn * base.pow(static_cast<unsigned long>(n - 1));
    return bv;
}

Int xi(long n, long m) {
    if (n < 1 || m < 0) throw DomainError("xi: need n >= 1, m >= 0");
    Int half_up = Int(n) / 2;        // floor(n/2)
    Int half_dn = Int(n - 1) / 2;    // floor((n-1)/2)
    return binomial(Int(m) - half_dn - 1, half_up) +
           binomial(Int(m) - half_up - 1, half_dn);
}

BoundValue xi_vertex_bound(long n, long m, const Int& alpha) {
    if (n < 1 || m < n + 1 || alpha < 1)
        throw DomainError("xi bound: need n >= 1, m >= n+1, alpha >= 1");
    BoundValue bv;
    bv.name = "xi_vertex";
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha", dec(alpha)}};
    Real lead = Real(Int(n)).pow(static_cast<unsigned long>(7 * n));
    Real base = Real(6L) * log2_one_plus(alpha) + Real(3L) * log2(Rat(Int(n)));
    bv.value = lead * Real(xi(n, m)) * base.pow(static_cast<unsigned long>(n - 1));
    return bv;
}

BoundValue rounding_pipeline_bound(long n, long m, const Int& alpha1, const Rat& c) {
    if (c <= 0) throw DomainError("pipeline bound: constant must be positive");
    if (n < 1 || m < 1 || alpha1 < 1)
        throw DomainError("pipeline bound: need n, m >= 1, alpha1 >= 1");
    BoundValue bv;
    bv.name = "rounding_pipeline";
    bv.kind = BoundKind::informational;
    bv.caller_constant = c;
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha1", dec(alpha1)}, {"c", dec(c)}};
    Real mh = Real(Int(m)).pow(static_cast<unsigned long>(n / 2));
    bv.value = Real(c) * mh * log2_one_plus(alpha1).pow(static_cast<unsigned long>(n - 1));
    return bv;
}

Int relaxed_piece_bound(long n, const Int& a_i) {
    if (n < 1 || a_i < 1) throw DomainError("piece bound: need n >= 1, a_i >= 1");
    return binomial(floor_log2(a_i) + n - 1, Int(n - 1));
}

BoundValue relaxed_union_bound(long n, const Int& alpha1) {
    if (n < 1 || alpha1 < 1) throw DomainError("union bound: need n >= 1, alpha1 >= 1");
    BoundValue bv;
    bv.name = "relaxed_union";
    bv.parameters = {{"n", str_of(n)}, {"alpha1", dec(alpha1)}};
    Int inner = floor_log2(alpha1) + 1;
    Int exact = 1 + Int(n) * pow(inner, static_cast<unsigned>(n - 1));
    bv.value = Real(exact);
    return bv;
}

BoundValue two_dim_knapsack_bound(const Int& a) {
    if (a < 1) throw DomainError("two-dim bound: need a >= 1");
    BoundValue bv;
    bv.name = "two_dim_knapsack";
    bv.kind = BoundKind::informational; // dips below attained counts at a = 1
    bv.parameters = {{"a", dec(a)}};
    Real rt2 = sqrt(Real(2L));
    Real arg = Real(1L) + Real(2L) * rt2 * Real(a);
    bv.value = Real(2L) * ln(arg) / ln(Real(1L) + rt2);
    return bv;
}

Int mcmullen_facet_bound(long n, const Int& v) {
    if (v < n + 1) throw DomainError("facet cap: need v >= n+1");
    if (v > 1000000) throw DomainError("facet cap: vertex count implausibly large");
    return xi(n, static_cast<long>(v));
}

BoundValue mean_vertex_lower_bound(long n, const Int& delta) {
    if (n < 2 || delta < 2) throw DomainError("mean bound: need n >= 2, delta >= 2");
    BoundValue bv;
    bv.name = "mean_vertex_lower";
    bv.kind = BoundKind::lower;
    bv.parameters = {{"n", str_of(n)}, {"delta", dec(delta)}};

    Int denom = 4 * Int(n) * pow(Int(3), static_cast<unsigned>(n));
    Int fact = factorial(n - 1);
    denom *= fact * fact;
    Rat cn = make_rat(Int(1), denom);

    Real base = log2(Rat(delta)) - Real(Int(n) + 2);
    if (n > 2) base = base - Real(Int(n)) * log2(Rat(Int(n - 1)));
    if (!(base.sign() > 0)) {
        bv.value = Real(0L);
        bv.vacuous = true;
        return bv;
    }
    Rat scale = cn / Rat(pow(Int(n - 1), static_cast<unsigned>(n - 1)));
    bv.value = Real(scale) * base.pow(static_cast<unsigned long>(n - 1));
    return bv;
}

BoundValue xi_vertex_lower_bound(long n, long m, const Int& alpha) {
    if (n < 1 || m < n + 1 || alpha < 2)
        throw DomainError("xi lower bound: need n >= 1, m >= n+1, alpha >= 2");
    BoundValue bv;
    bv.name = "xi_vertex_lower";
    bv.kind = BoundKind::lower;
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha", dec(alpha)}};
    Int denom = pow(Int(4), static_cast<unsigned>(n + 2)) *
                pow(Int(n), static_cast<unsigned>(n)) * factorial(n - 1);
    // natural log here, unlike every other bound
    bv.value = Real(make_rat(xi(n, m), denom)) *
               ln(Rat(alpha)).pow(static_cast<unsigned long>(n - 1));
    return bv;
}

BoundValue facet_count_bound(long n, long m, const Int& alpha, const Rat& c) {
    if (c <= 0) throw DomainError("facet bound: constant must be positive");
    if (n < 1 || m < 1 || alpha < 1)
        throw DomainError("facet bound: need n, m >= 1, alpha >= 1");
    BoundValue bv;
    bv.name = "facet_count";
    bv.kind = BoundKind::informational;
    bv.caller_constant = c;
    bv.parameters = {{"n", str_of(n)}, {"m", str_of(m)}, {"alpha", dec(alpha)}, {"c", dec(c)}};
    long h = n / 2;
    Real mh = Real(Int(m)).pow(static_cast<unsigned long>(h * h));
    bv.value = Real(c) * mh * log2_one_plus(alpha).pow(static_cast<unsigned long>((n - 1) * h));
    return bv;
}

} // namespace ihull
