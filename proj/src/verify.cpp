#include "ihull/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "ihull/bounds.hpp"
#include "ihull/census.hpp"
#include "ihull/errors.hpp"
#include "ihull/families.hpp"
#include "ihull/hull.hpp"
#include "ihull/lattice.hpp"
#include "ihull/model.hpp"

namespace ihull {

namespace {

using Point = std::vector<Int>;

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

/**
 * Shared instance rosters. Each set is generated once per run from the
 * configured seed so every check sees the same instances regardless of
 * which checks were selected.
 */
struct Ctx {
    explicit Ctx(const VerifyOptions& o) : opt(o) {}

    VerifyOptions opt;

    const std::vector<KnapsackInstance>& relaxation_knapsacks() {
        if (!relaxation_) {
            InstanceSampler s(opt.seed + 6);
            std::vector<KnapsackInstance> v;
            while (v.size() < 50) {
                long n = s.uniform_long(2, 3);
                std::vector<Int> a(static_cast<std::size_t>(n));
                for (auto& w : a) w = s.uniform(1, 6);
                Int a1 = *std::max_element(a.begin(), a.end());
                Int a0 = a1 * (a1 - 1) + s.uniform(0, 10);
                v.emplace_back(KnapsackInstance(std::move(a), a0));
            }
            relaxation_ = std::move(v);
        }
        return *relaxation_;
    }

    const std::vector<LinearSystem>& sweep_systems() {
        if (!sweep_)
            sweep_ = random_bounded_systems(1, 3, 6, 8, 8, 200, opt.seed + 7, false);
        return *sweep_;
    }

    const std::vector<LinearSystem>& inclusion_systems() {
        if (!inclusion_)
            inclusion_ = random_bounded_systems(2, 3, 6, 5, 5, 100, opt.seed + 8, true);
        return *inclusion_;
    }

    const std::vector<LinearSystem>& oracle_systems() {
        if (!oracle_) {
            InstanceSampler s(opt.seed + 13);
            std::vector<LinearSystem> v;
            while (v.size() < 100) {
                long n = s.uniform_long(2, 4);
                long m = s.uniform_long(n + 1, n + 3);
                IntMatrix A(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
                std::vector<Int> b(static_cast<std::size_t>(m));
                for (long i = 0; i < m; ++i) {
                    for (long j = 0; j < n; ++j)
                        A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                            s.uniform(-4, 4);
                    b[static_cast<std::size_t>(i)] = s.uniform(0, 6);
                }
                if (rank(A) != static_cast<std::size_t>(n)) continue;
                LinearSystem sys(std::move(A), std::move(b));
                try {
                    (void)diameter(sys);
                } catch (const UnboundedError&) {
                    continue;
                }
                try {
                    (void)enumerate_integer_points(sys, Int(1000));
                } catch (const CapExceeded&) {
                    continue;
                }
                v.push_back(std::move(sys));
            }
            oracle_ = std::move(v);
        }
        return *oracle_;
    }

private:
    std::optional<std::vector<KnapsackInstance>> relaxation_;
    std::optional<std::vector<LinearSystem>> sweep_, inclusion_, oracle_;
};

std::size_t knapsack_count(const KnapsackInstance& k, const Int& cap) {
    return knapsack_hull_vertices(k, cap).vertices.size();
}

CheckResult check_pow2_count(Ctx& c) {
    CheckResult r;
    r.passed = true;
    std::string counts;
    for (long n = 1; n <= 5; ++n) {
        std::size_t cnt = knapsack_count(power_of_two_knapsack(n), c.opt.point_cap);
        r.passed &= (Int(cnt) == (Int(1) << n));
        counts += (n > 1 ? " " : "") + std::to_string(cnt);
    }
    r.detail = "vertex counts for n=1..5: " + counts + " (want 2 4 8 16 32)";
    return r;
}

CheckResult check_extremal_2d(Ctx& c) {
    CheckResult r;
    r.passed = true;
    std::string counts;
    for (long s = 2; s <= 5; ++s) {
        auto verts =
            knapsack_hull_vertices(vs_extremal_instance(s).knapsack(), c.opt.point_cap)
                .vertices;
        r.passed &= (verts.size() == static_cast<std::size_t>(2 * s));
        counts += (s > 2 ? " " : "") + std::to_string(verts.size());
        if (s == 2) {
            std::vector<Point> want{pt({0, 0}), pt({0, 1}), pt({1, 1}), pt({3, 0})};
            r.passed &= (verts == want);
        }
        if (s == 3) {
            std::vector<Point> want{pt({0, 0}), pt({0, 4}), pt({1, 4}),
                                    pt({4, 3}), pt({9, 1}), pt({11, 0})};
            r.passed &= (verts == want);
        }
    }
    r.detail = "counts for s=2..5: " + counts + " (want 4 6 8 10); s=2,3 vertex sets checked";
    return r;
}

CheckResult check_minimality_sweep(Ctx& c) {
    CheckResult r;
    bool small_a_below_6 = true, all_below_8 = true, six_attained = false;
    for (long a = 1; a <= 4; ++a) {
        for (long b = 1; b <= 12; ++b) {
            for (long c0 = 1; c0 <= 200; ++c0) {
                std::size_t cnt = knapsack_count(
                    KnapsackInstance({Int(a), Int(b)}, Int(c0)), c.opt.point_cap);
                if (cnt >= 8) all_below_8 = false;
                if (a == 1 && cnt >= 6) small_a_below_6 = false;
                if (cnt >= 6) six_attained = true;
            }
        }
    }
    r.passed = small_a_below_6 && all_below_8 && six_attained;
    r.detail = std::string("9600 instances; a=1 below 6 vertices: ") +
               (small_a_below_6 ? "yes" : "NO") +
               "; all below 8: " + (all_below_8 ? "yes" : "NO") +
               "; 6 attained at a>=2: " + (six_attained ? "yes" : "NO");
    return r;
}

CheckResult check_min_b_table(Ctx& c) {
    CheckResult r;
    auto table = min_b_search(7, Int(12), Int(12), c.opt.c_cap);
    const long want[] = {1, 1, 2, 3, 5, 7}; // s = 2..7
    r.passed = true;
    std::string rows;
    for (const auto& e : table) {
        bool ok = e.found && e.b == want[e.s - 2];
        r.passed &= ok;
        rows += "s" + std::to_string(e.s) + ":b=" + (e.found ? dec(e.b) : "none");
        if (e.found)
            rows += "@(a=" + dec(e.a) + ",c=" + dec(e.c) + (e.witness_c_at_cap ? ",c at cap" : "") + ") ";
        else
            rows += " ";
    }
    r.detail = rows + "(want b: 1 1 2 3 5 7)";
    return r;
}

CheckResult check_fib_variants(Ctx& c) {
    CheckResult r;
    r.passed = true;
    for (long k = 1; k <= 5; ++k) {
        std::size_t printed =
            knapsack_count(rubin_instance(k, RubinVariant::as_printed), c.opt.point_cap);
        std::size_t swapped =
            knapsack_count(rubin_instance(k, RubinVariant::index_swapped), c.opt.point_cap);
        std::size_t want = static_cast<std::size_t>(k) + 3;
        r.passed &= (printed == want || swapped == want);
        r.detail += "k=" + std::to_string(k) + ":printed=" + std::to_string(printed) +
                    ",swapped=" + std::to_string(swapped) + " ";
    }
    r.detail += "(want k+3 from at least one variant)";
    return r;
}

CheckResult check_relaxation_decomposition(Ctx& c) {
    CheckResult r;
    long union_fail = 0, piece_fail = 0, threshold_fail = 0;
    for (const auto& inst : c.relaxation_knapsacks()) {
        SignRelaxation parts = sign_relaxation_decomposition(inst, c.opt.point_cap);
        if (!parts.threshold_met) ++threshold_fail;
        std::vector<Point> unioned;
        for (const auto& piece : parts.pieces)
            unioned.insert(unioned.end(), piece.vertices.begin(), piece.vertices.end());
        std::sort(unioned.begin(), unioned.end());
        unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
        auto direct = knapsack_hull_vertices(inst, c.opt.point_cap).vertices;
        if (unioned != direct) ++union_fail;
        long n = static_cast<long>(inst.dim());
        for (std::size_t i = 0; i < inst.dim(); ++i) {
            Int cap_i = relaxed_piece_bound(n, inst.a[i]);
            if (Int(parts.pieces[i + 1].vertices.size()) > cap_i) ++piece_fail;
        }
    }
    r.passed = (union_fail == 0 && piece_fail == 0 && threshold_fail == 0);
    r.detail = "50 instances; union mismatches " + std::to_string(union_fail) +
               ", piece-bound failures " + std::to_string(piece_fail) +
               ", threshold misses " + std::to_string(threshold_fail);
    return r;
}

CheckResult check_bound_soundness(Ctx& c) {
    CheckResult r;
    std::vector<KnapsackInstance> ks;
    for (long n = 1; n <= 5; ++n) ks.push_back(power_of_two_knapsack(n));
    for (long s = 2; s <= 5; ++s) ks.push_back(vs_extremal_instance(s).knapsack());
    for (long k = 1; k <= 5; ++k) {
        ks.push_back(rubin_instance(k, RubinVariant::as_printed));
        ks.push_back(rubin_instance(k, RubinVariant::index_swapped));
    }
    for (const auto& inst : c.relaxation_knapsacks()) ks.push_back(inst);
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 12; ++b)
            for (long c0 = 1; c0 <= 200; ++c0)
                ks.emplace_back(KnapsackInstance({Int(a), Int(b)}, Int(c0)));
    for (long b = 1; b <= 7; ++b)
        for (long a = 1; a <= b; ++a)
            for (long c0 = 1; c0 <= 400; ++c0)
                ks.emplace_back(KnapsackInstance({Int(a), Int(b)}, Int(c0)));

    SweepResult sweep = soundness_sweep(c.sweep_systems(), ks, c.opt.point_cap);
    r.passed = (sweep.violations == 0);
    r.detail = std::to_string(sweep.instances) + " instances, " +
               std::to_string(sweep.violations) + " violations";
    for (std::size_t i = 0; i < sweep.details.size() && i < 3; ++i)
        r.detail += "; " + sweep.details[i];
    return r;
}

CheckResult check_inclusion_separation(Ctx& c) {
    CheckResult r;
    long inclusion_fail = 0, separation_fail = 0, set_bound_fail = 0;
    long pieces_built = 0;
    for (const auto& sys : c.inclusion_systems()) {
        IntegerHull hull = integer_hull_vertices(sys, c.opt.point_cap);
        auto rational = rational_vertices(sys);
        std::vector<ShiftedSystem> shifts;
        shifts.reserve(rational.size());
        for (const auto& v : rational) shifts.push_back(shift_by_rounded_vertex(sys, v));

        // local hulls computed on demand, cached per (row set, shift)
        std::map<std::pair<std::vector<std::size_t>, Point>, std::set<Point>> cache;
        auto local_vertices = [&](const ShiftedSystem& sh) -> const std::set<Point>& {
            auto key = std::make_pair(sh.row_indices, sh.w);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            auto gens = cone_extreme_rays(sh.system.A);
            Int maxb(0);
            for (const Int& bi : sh.system.b) maxb = std::max(maxb, Int(abs(bi)));
            Int window = 2 * (maxb + Int(sh.system.cols()) * alpha(sh.system) + 4);
            IntegerHull piece =
                hull_with_recession(sh.system, gens, c.opt.point_cap, window);
            ++pieces_built;
            return cache.emplace(std::move(key),
                                 std::set<Point>(piece.vertices.begin(),
                                                 piece.vertices.end()))
                .first->second;
        };

        for (const Point& x : hull.vertices) {
            bool covered = false;
            for (const auto& sh : shifts) {
                Point rel(x.size());
                for (std::size_t j = 0; j < x.size(); ++j) rel[j] = x[j] - sh.w[j];
                if (local_vertices(sh).count(rel)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                ++inclusion_fail;
                break;
            }
        }

        IntegerHull sf = standard_form_hull_vertices(sys, c.opt.point_cap);
        SeparationCheck sep = has_separation_property(sf.vertices);
        if (!sep.holds) ++separation_fail;
        if (!sf.vertices.empty()) {
            std::vector<Int> caps(sf.dim, Int(2));
            for (const auto& p : sf.vertices)
                for (std::size_t j = 0; j < p.size(); ++j)
                    caps[j] = std::max(caps[j], Int(p[j] + 1));
            BoundValue bv = separation_set_bound(caps);
            if (!count_within(Int(sf.vertices.size()), bv.value)) ++set_bound_fail;
        }
    }
    r.passed = (inclusion_fail == 0 && separation_fail == 0);
    r.detail = "100 systems; inclusion failures " + std::to_string(inclusion_fail) +
               ", separation failures " + std::to_string(separation_fail) +
               "; local hulls built " + std::to_string(pieces_built) +
               "; separation-set bound misses (informational) " +
               std::to_string(set_bound_fail);
    return r;
}

CheckResult check_census_exactness(Ctx& c) {
    CheckResult r;
    CensusOptions co;
    co.jobs = c.opt.jobs;
    co.point_cap = c.opt.point_cap;
    bool exact_ok = false;
    long bound_fail = 0;
    std::string means;
    for (long delta : {2, 4, 8, 16, 32}) {
        auto m = mean_congruence_vertex_count(2, Int(delta), co);
        if (delta == 2) exact_ok = (m.mean == make_rat(5, 4));
        BoundValue bv = mean_vertex_lower_bound(2, Int(delta));
        if (bv.applicable && !bv.vacuous && !lower_bound_met(bv, m.mean)) ++bound_fail;
        means += "phi(" + std::to_string(delta) + ")=" + dec(m.mean) +
                 (bv.vacuous ? " (bound vacuous) " : " (bound " + bv.value.str(8) + ") ");
    }
    r.passed = exact_ok && bound_fail == 0;
    r.detail = means + "| phi(2)=5/4 exact: " + (exact_ok ? "yes" : "NO") +
               ", lower-bound failures " + std::to_string(bound_fail);
    return r;
}

CheckResult check_ensemble_comparison(Ctx& c) {
    CheckResult r;
    CensusOptions co;
    co.jobs = c.opt.jobs;
    co.point_cap = c.opt.point_cap;
    long fails = 0;
    for (long gamma : {2, 3, 4}) {
        auto m = mean_knapsack_vertex_count(2, Int(gamma), co);
        fails += m.inequality_failures;
        r.detail += "gamma=" + std::to_string(gamma) + ": psi=" + dec(m.mean) +
                    " phi=" + dec(m.paired_congruence_mean) +
                    " diff=" + dec(m.mean - m.paired_congruence_mean) + "; ";
    }
    r.passed = (fails == 0);
    r.detail += "per-instance |knapsack| >= |congruence| failures: " + std::to_string(fails);
    return r;
}

CheckResult check_facet_bound(Ctx& c) {
    CheckResult r;
    long checked = 0, violations = 0;
    auto consider = [&](const IntegerHull& h) {
        if (h.dim < 1 || h.dim > 3 || !h.recession_generators.empty()) return;
        if (h.vertices.size() < h.dim + 1) return;
        try {
            long f = facet_count(h);
            ++checked;
            if (Int(f) > mcmullen_facet_bound(static_cast<long>(h.dim),
                                              Int(h.vertices.size())))
                ++violations;
        } catch (const DomainError&) {
            // lower-dimensional hull; the facet bound does not apply
        }
    };
    for (long n = 2; n <= 3; ++n)
        consider(knapsack_hull_vertices(power_of_two_knapsack(n), c.opt.point_cap));
    for (long s = 2; s <= 5; ++s)
        consider(knapsack_hull_vertices(vs_extremal_instance(s).knapsack(), c.opt.point_cap));
    for (long k = 1; k <= 5; ++k) {
        consider(knapsack_hull_vertices(rubin_instance(k, RubinVariant::as_printed),
                                        c.opt.point_cap));
        consider(knapsack_hull_vertices(rubin_instance(k, RubinVariant::index_swapped),
                                        c.opt.point_cap));
    }
    for (long nu : {16, 64})
        consider(integer_hull_vertices(morgan_family(Int(nu), 64), c.opt.point_cap));
    for (const auto& inst : c.relaxation_knapsacks())
        consider(knapsack_hull_vertices(inst, c.opt.point_cap));
    for (const auto& sys : c.sweep_systems())
        consider(integer_hull_vertices(sys, c.opt.point_cap));
    for (const auto& sys : c.inclusion_systems())
        consider(integer_hull_vertices(sys, c.opt.point_cap));
    for (const auto& sys : c.oracle_systems())
        consider(integer_hull_vertices(sys, c.opt.point_cap));
    r.passed = (violations == 0);
    r.detail = std::to_string(checked) + " full-dimensional hulls checked, " +
               std::to_string(violations) + " facet-bound violations";
    return r;
}

CheckResult check_morgan_growth(Ctx& c) {
    CheckResult r;
    r.passed = true;
    std::size_t prev = 0;
    for (long nu : {16, 64, 256, 1024}) {
        IntegerHull h64 = integer_hull_vertices(morgan_family(Int(nu), 64), c.opt.point_cap);
        std::size_t cnt = h64.vertices.size();
        long lg = floor_log2(Int(nu));
        bool lower_ok = (Int(cnt) * 32 >= Int(lg) * lg);
        bool monotone = (cnt >= prev);
        IntegerHull h128 =
            integer_hull_vertices(morgan_family(Int(nu), 128), c.opt.point_cap);
        bool same = (h64.vertices == h128.vertices);
        r.passed &= lower_ok && monotone && same;
        r.detail += "nu=" + std::to_string(nu) + ":count=" + std::to_string(cnt) +
                    (lower_ok ? "" : " BELOW log^2/32") + (monotone ? "" : " NOT MONOTONE") +
                    (same ? "" : " PRECISION MISMATCH") + " ";
        prev = cnt;
    }
    r.detail += "(need 32*count >= log2^2(nu), nondecreasing, equal sets at both precisions)";
    return r;
}

CheckResult check_oracle_equivalence(Ctx& c) {
    CheckResult r;
    long mismatches = 0;
    std::size_t total_points = 0;
    for (const auto& sys : c.oracle_systems()) {
        auto pts = enumerate_integer_points(sys, Int(1000));
        total_points += pts.size();
        IntegerHull h = integer_hull_vertices(sys, c.opt.point_cap);
        std::vector<Point> expected;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<Point> others;
            others.reserve(pts.size() - 1);
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) others.push_back(pts[j]);
            if (!point_in_hull(pts[i], others, {})) expected.push_back(pts[i]);
        }
        std::sort(expected.begin(), expected.end());
        if (expected != h.vertices) ++mismatches;
    }
    r.passed = (mismatches == 0);
    r.detail = "100 systems, " + std::to_string(total_points) + " lattice points total, " +
               std::to_string(mismatches) + " vertex-set mismatches";
    return r;
}

struct CheckEntry {
    const char* name;
    CheckResult (*fn)(Ctx&);
};

const CheckEntry kChecks[] = {
    {"c01-pow2-count", check_pow2_count},
    {"c02-extremal-2d", check_extremal_2d},
    {"c03-minimality-sweep", check_minimality_sweep},
    {"c04-min-b-table", check_min_b_table},
    {"c05-fib-variants", check_fib_variants},
    {"c06-relaxation-decomposition", check_relaxation_decomposition},
    {"c07-bound-soundness", check_bound_soundness},
    {"c08-inclusion-separation", check_inclusion_separation},
    {"c09-census-exactness", check_census_exactness},
    {"c10-ensemble-comparison", check_ensemble_comparison},
    {"c11-facet-bound", check_facet_bound},
    {"c12-morgan-growth", check_morgan_growth},
    {"c13-oracle-equivalence", check_oracle_equivalence},
};
constexpr std::size_t kCheckCount = sizeof(kChecks) / sizeof(kChecks[0]);

std::size_t resolve_check(const std::string& filter) {
    for (std::size_t i = 0; i < kCheckCount; ++i) {
        std::string name = kChecks[i].name;
        if (filter == name) return i;
        if (filter == name.substr(4)) return i; // part after "cNN-"
        std::string num = std::to_string(i + 1);
        if (filter == "c" + num) return i;
        if (i + 1 < 10 && filter == "c0" + num) return i;
    }
    throw InputError("unknown check name: " + filter);
}

} // namespace

const std::vector<std::string>& acceptance_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kChecks) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::vector<CheckResult> run_acceptance(const std::vector<std::string>& filters,
                                        const VerifyOptions& opt) {
    std::vector<bool> selected(kCheckCount, filters.empty());
    for (const auto& f : filters) selected[resolve_check(f)] = true;

    Ctx ctx(opt);
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < kCheckCount; ++i) {
        if (!selected[i]) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = kChecks[i].fn(ctx);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.name = kChecks[i].name;
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace ihull
