#include "ihull/families.hpp"

#include <limits>
#include <random>
#include <utility>

#include "ihull/errors.hpp"
#include "ihull/hull.hpp"

namespace ihull {

Int fibonacci(long s) {
    if (s < 1) throw DomainError("fibonacci index must be >= 1");
    Int a = 1, b = 1; // F_1, F_2
    for (long i = 2; i < s; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return s == 1 ? a : b;
}

KnapsackInstance rubin_instance(long k, RubinVariant variant) {
    if (k < 1) throw DomainError("rubin index must be >= 1");
    Int f2k = fibonacci(2 * k);
    Int f2k1 = fibonacci(2 * k + 1);
    Int a0 = f2k1 * f2k1 - 1;
    if (variant == RubinVariant::as_printed)
        return KnapsackInstance({f2k, fibonacci(2 * k - 1)}, a0);
    return KnapsackInstance({f2k, f2k1}, a0);
}

std::vector<VSSequences> vs_sequences(long s_max) {
    if (s_max < 1) throw DomainError("sequence length must be >= 1");
    std::vector<VSSequences> out(static_cast<std::size_t>(s_max));
    for (long s = 1; s <= s_max; ++s) {
        auto& e = out[static_cast<std::size_t>(s - 1)];
        e.s = s;
        if (s == 1) {
            e.beta = 1;
        } else if (s == 2) {
            e.beta = 2;
            e.gamma = 1;
            e.gamma_prime = 1;
        } else {
            const auto& p1 = out[static_cast<std::size_t>(s - 2)]; // s-1
            const auto& p2 = out[static_cast<std::size_t>(s - 3)]; // s-2
            e.beta = 2 * p1.beta + p2.beta;
            e.gamma = p1.beta + p1.gamma_prime;
            e.gamma_prime = e.beta - p1.beta + p1.gamma;
        }
    }
    return out;
}

VSInstance vs_extremal_instance(long s) {
    if (s < 2) throw DomainError("extremal instance needs s >= 2");
    auto seq = vs_sequences(s + 1);
    auto beta = [&](long i) { return seq[static_cast<std::size_t>(i - 1)].beta; };
    auto gamma = [&](long i) { return seq[static_cast<std::size_t>(i - 1)].gamma; };
    VSInstance inst;
    inst.a = beta(s - 1);
    inst.b = beta(s);
    if (s % 2 == 0)
        inst.c = gamma(s) * (inst.a + inst.b);
    else
        inst.c = gamma(s + 1) * inst.a + gamma(s - 1) * inst.b;
    return inst;
}

KnapsackInstance power_of_two_knapsack(long n) {
    if (n < 1) throw DomainError("dimension must be >= 1");
    std::vector<Int> a(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
        a[static_cast<std::size_t>(j)] = Int(1) << (n - 1 - j);
    return KnapsackInstance(std::move(a), (Int(1) << n) - 1);
}

namespace {

// Exact bisection of t^3 + t^2 - 2t - 1 on a bracket with a sign change,
// run until the interval is narrower than 2^-(p+2) so the midpoint is
// within 2^-(p+1) of the root and its rounding to a multiple of 2^-p is
// within 2^-p.
Rat root_bisect(Rat lo, Rat hi, unsigned p) {
    auto f = [](const Rat& t) { return t * t * t + t * t - 2 * t - 1; };
    Rat flo = f(lo);
    if (flo == 0) return lo;
    if (f(hi) == 0) return hi;
    Rat width_goal = make_rat(Int(1), Int(1) << (p + 2));
    while (hi - lo > width_goal) {
        Rat mid = (lo + hi) / 2;
        Rat fmid = f(mid);
        if (fmid == 0) return mid;
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

Int scaled_root(Rat lo, Rat hi, unsigned p) {
    Rat mid = root_bisect(std::move(lo), std::move(hi), p);
    return round_half_away(mid * (Int(1) << p));
}

} // namespace

LinearSystem morgan_family(const Int& nu, unsigned p) {
    if (nu < 1) throw DomainError("nu must be >= 1");
    if (p < 2 || p > 4096) throw DomainError("precision p out of range");
    Int theta = scaled_root(make_rat(1, 1), make_rat(3, 2), p);
    Int phi = scaled_root(make_rat(-1, 2), make_rat(-2, 5), p);
    Int psi = scaled_root(make_rat(-19, 10), make_rat(-9, 5), p);
    Int scale = Int(1) << p;

    IntMatrix a(5, 3);
    std::vector<Int> b(5);
    for (std::size_t j = 0; j < 3; ++j) a(j, j) = -1; // x, y, z >= 0
    a(3, 0) = scale;
    a(3, 1) = psi;
    a(3, 2) = theta;
    a(4, 0) = scale;
    a(4, 1) = theta;
    a(4, 2) = phi;
    b[3] = scale * nu;
    b[4] = scale * nu;
    return LinearSystem(std::move(a), std::move(b));
}

CongruenceEnsemble::CongruenceEnsemble(long n_, Int delta_) : n(n_), delta(std::move(delta_)) {
    if (n < 1) throw DomainError("ensemble dimension must be >= 1");
    if (delta < 2) throw DomainError("modulus must be >= 2");
}

Int CongruenceEnsemble::size() const {
    Int s = 1;
    for (long i = 0; i < n; ++i) s *= delta;
    return s;
}

CongruenceInstance CongruenceEnsemble::at(Int idx) const {
    if (idx < 0 || idx >= size()) throw DomainError("ensemble index out of range");
    // Mixed-radix decode, last coordinate least significant.
    std::vector<Int> digits(static_cast<std::size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = idx % delta;
        idx /= delta;
    }
    std::vector<Int> a(digits.begin(), digits.end() - 1);
    a.push_back(1);
    return CongruenceInstance(std::move(a), digits.back(), delta);
}

KnapsackEnsemble::KnapsackEnsemble(long n_, Int gamma_) : n(n_), gamma(std::move(gamma_)) {
    if (n < 1) throw DomainError("ensemble dimension must be >= 1");
    if (gamma < 2) throw DomainError("weight bound must be >= 2");
}

Int KnapsackEnsemble::size() const {
    Int s = 1;
    for (long i = 0; i < n; ++i) s *= gamma;
    return s;
}

KnapsackInstance KnapsackEnsemble::at(Int idx) const {
    if (idx < 0 || idx >= size()) throw DomainError("ensemble index out of range");
    std::vector<Int> digits(static_cast<std::size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = idx % gamma;
        idx /= gamma;
    }
    std::vector<Int> a(digits.begin(), digits.end() - 1);
    a.push_back(gamma);
    Int a0 = gamma * (gamma - 1) + digits.back();
    return KnapsackInstance::relaxed_instance(std::move(a), a0);
}

std::vector<Int> sample_indices(const Int& size, std::size_t count, std::uint64_t seed) {
    if (size < 1) throw DomainError("cannot sample from an empty range");
    if (size > Int(std::numeric_limits<std::uint64_t>::max()))
        throw DomainError("sample range exceeds 64 bits");
    std::uint64_t n = size.convert_to<std::uint64_t>();
    std::mt19937_64 rng(seed);
    std::vector<Int> out;
    out.reserve(count);
    // Rejection below the largest multiple of n keeps the draw uniform.
    std::uint64_t limit = n == 0 ? 0 : std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t r;
        do {
            r = rng();
        } while (r > limit);
        out.emplace_back(r % n);
    }
    return out;
}

std::vector<MinBEntry> min_b_search(long s_target, const Int& a_cap,
                                    const Int& b_cap, const Int& c_cap) {
    if (s_target < 2) throw DomainError("minimum-b table starts at s = 2");
    if (a_cap < 1 || b_cap < 1 || c_cap < 1) throw DomainError("caps must be >= 1");
    std::vector<MinBEntry> table(static_cast<std::size_t>(s_target - 1));
    for (long s = 2; s <= s_target; ++s) table[static_cast<std::size_t>(s - 2)].s = s;
    long remaining = s_target - 1;

    for (Int b = 1; b <= b_cap && remaining > 0; ++b) {
        Int a_hi = b < a_cap ? b : a_cap;
        for (Int a = 1; a <= a_hi; ++a) {
            for (Int c = 1; c <= c_cap; ++c) {
                KnapsackInstance inst({a, b}, c);
                std::size_t count = knapsack_hull_vertices(inst, Int(1) << 40).vertices.size();
                for (auto& e : table) {
                    if (e.found || count < static_cast<std::size_t>(e.s)) continue;
                    e.found = true;
                    e.b = b;
                    e.a = a;
                    e.c = c;
                    e.witness_c_at_cap = (c == c_cap);
                    --remaining;
                }
                if (remaining == 0) break;
            }
            if (remaining == 0) break;
        }
    }
    return table;
}

} // namespace ihull
