#include "ihull/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ihull/errors.hpp"
#include "ihull/families.hpp"
#include "ihull/hull.hpp"

namespace ihull {

namespace {

// Applies fn to every index, spreading work over a small pool. Results must
// be written into pre-sized slots so the output order is index order
// regardless of scheduling.
template <typename Fn>
void for_each_index(std::size_t count, unsigned jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::mutex err_lock;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_lock);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<Int> ensemble_ids(const Int& size, const CensusOptions& opt) {
    if (opt.mode == CensusMode::sampled)
        return sample_indices(size, opt.sample_count, opt.seed);
    if (size > opt.exhaustive_limit)
        throw CapExceeded("exhaustive ensemble of size " + dec(size) +
                          " exceeds the limit " + dec(opt.exhaustive_limit));
    std::vector<Int> ids;
    ids.reserve(size.convert_to<std::size_t>());
    for (Int i = 0; i < size; ++i) ids.push_back(i);
    return ids;
}

Rat weighted_mean(const std::vector<CensusRecord>& records) {
    Rat mean = 0;
    for (const auto& r : records) mean += r.weight * Rat(r.vertex_count);
    return mean;
}

} // namespace

Int knapsack_vertex_count(const KnapsackInstance& k, const Int& cap) {
    bool has_zero = std::any_of(k.a.begin(), k.a.end(),
                                [](const Int& w) { return w == 0; });
    if (!has_zero)
        return Int(knapsack_hull_vertices(k, cap).vertices.size());
    std::vector<std::vector<Int>> gens;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (k.a[j] != 0) continue;
        std::vector<Int> e(k.dim());
        e[j] = 1;
        gens.push_back(std::move(e));
    }
    return Int(hull_with_recession(knapsack_system(k), gens, cap).vertices.size());
}

CongruenceMeanResult mean_congruence_vertex_count(long n, const Int& delta,
                                                  const CensusOptions& opt) {
    CongruenceEnsemble ens(n, delta);
    std::vector<Int> ids = ensemble_ids(ens.size(), opt);
    Rat weight = make_rat(1, Int(ids.size()));

    CongruenceMeanResult out;
    out.records.resize(ids.size());
    for_each_index(ids.size(), opt.jobs, [&](std::size_t i) {
        CongruenceInstance inst = ens.at(ids[i]);
        Int count(congruence_hull_vertices(inst, opt.point_cap).vertices.size());
        out.records[i] = CensusRecord{"congruence", n,     delta, ids[i],
                                      inst.a,       inst.a0, count, weight};
    });
    out.mean = weighted_mean(out.records);
    return out;
}

KnapsackMeanResult mean_knapsack_vertex_count(long n, const Int& gamma,
                                              const CensusOptions& opt) {
    KnapsackEnsemble ens(n, gamma);
    std::vector<Int> ids = ensemble_ids(ens.size(), opt);
    Rat weight = make_rat(1, Int(ids.size()));

    KnapsackMeanResult out;
    out.records.resize(ids.size());
    std::vector<Int> paired_counts(ids.size());
    for_each_index(ids.size(), opt.jobs, [&](std::size_t i) {
        KnapsackInstance inst = ens.at(ids[i]);
        Int count = knapsack_vertex_count(inst, opt.point_cap);
        std::vector<Int> ca = inst.a;
        ca.back() = 1;
        CongruenceInstance paired(std::move(ca), inst.a0 % gamma, gamma);
        paired_counts[i] =
            Int(congruence_hull_vertices(paired, opt.point_cap).vertices.size());
        out.records[i] = CensusRecord{"knapsack", n,      gamma, ids[i],
                                      inst.a,     inst.a0, count, weight};
    });
    out.mean = weighted_mean(out.records);
    Rat paired_mean = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        paired_mean += weight * Rat(paired_counts[i]);
        if (out.records[i].vertex_count < paired_counts[i]) {
            ++out.inequality_failures;
            out.failing_ids.push_back(ids[i]);
        }
    }
    out.paired_congruence_mean = paired_mean;
    return out;
}

long BoundReport::violations() const {
    long v = 0;
    for (const auto& c : checks)
        if (c.bound.kind == BoundKind::upper && c.bound.applicable && !c.holds) ++v;
    return v;
}

const BoundCheck* BoundReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.bound.name == name) return &c;
    return nullptr;
}

namespace {

void add_check(BoundReport& r, BoundValue bv) {
    bool holds = bound_holds(bv, r.vertex_count);
    r.checks.push_back(BoundCheck{std::move(bv), holds});
}

void add_facet_info(BoundReport& r, const IntegerHull& h) {
    if (r.n > 3 || !h.recession_generators.empty()) return;
    if (h.vertices.size() < static_cast<std::size_t>(r.n) + 1) return;
    try {
        long f = facet_count(h);
        r.facets = f;
        Int limit = mcmullen_facet_bound(r.n, r.vertex_count);
        r.facet_limit = limit;
        r.facet_limit_ok = (Int(f) <= limit);
    } catch (const DomainError&) {
        // hull not full-dimensional; no facet report
    }
}

void add_system_checks(BoundReport& r, const LinearSystem& sys) {
    Int a = alpha(sys);
    if (a < 1) a = 1; // all-zero matrix; the bounds need alpha >= 1
    add_check(r, general_system_bound(r.n, r.m, a));
    add_check(r, encoding_length_vertex_bound(r.n, r.m, encoding_length(sys)));
    add_check(r, coefficient_vertex_bound(r.n, r.m, a));
    add_check(r, xi_vertex_bound(r.n, r.m, a));
    add_check(r, rounding_pipeline_bound(r.n, r.m, a, make_rat(1, 1)));
}

} // namespace

BoundReport bound_report(const LinearSystem& sys, const Int& point_cap,
                         const std::string& label) {
    BoundReport r;
    r.instance = label;
    r.n = static_cast<long>(sys.cols());
    r.m = static_cast<long>(sys.rows());
    IntegerHull h = integer_hull_vertices(sys, point_cap);
    r.vertex_count = Int(h.vertices.size());
    add_system_checks(r, sys);
    add_facet_info(r, h);
    return r;
}

BoundReport bound_report(const KnapsackInstance& k, const Int& point_cap,
                         const std::string& label) {
    BoundReport r;
    r.instance = label;
    r.n = static_cast<long>(k.dim());
    r.m = r.n + 1;
    bool positive = std::all_of(k.a.begin(), k.a.end(),
                                [](const Int& w) { return w >= 1; });
    IntegerHull h;
    if (positive) {
        h = knapsack_hull_vertices(k, point_cap);
    } else {
        std::vector<std::vector<Int>> gens;
        for (std::size_t j = 0; j < k.dim(); ++j) {
            if (k.a[j] != 0) continue;
            std::vector<Int> e(k.dim());
            e[j] = 1;
            gens.push_back(std::move(e));
        }
        h = hull_with_recession(knapsack_system(k), gens, point_cap);
    }
    r.vertex_count = Int(h.vertices.size());

    if (positive) {
        add_check(r, knapsack_ratio_bound(k));
        Int gamma = *std::min_element(k.a.begin(), k.a.end());
        add_check(r, knapsack_min_weight_bound(r.n, k.a0, gamma));
        Int a1 = alpha1(k);
        BoundValue union_bv = relaxed_union_bound(r.n, a1);
        union_bv.applicable = (k.a0 >= a1 * (a1 - 1));
        add_check(r, std::move(union_bv));
        if (r.n == 2) add_check(r, two_dim_knapsack_bound(*std::min_element(k.a.begin(), k.a.end())));
    }
    add_system_checks(r, knapsack_system(k));
    add_facet_info(r, h);
    return r;
}

SweepResult soundness_sweep(const std::vector<LinearSystem>& systems,
                            const std::vector<KnapsackInstance>& knapsacks,
                            const Int& point_cap) {
    SweepResult out;
    auto absorb = [&](const BoundReport& r, const std::string& label) {
        ++out.instances;
        for (const auto& c : r.checks) {
            if (c.bound.kind != BoundKind::upper || !c.bound.applicable || c.holds)
                continue;
            ++out.violations;
            out.details.push_back(label + ": " + c.bound.name + " = " +
                                  c.bound.value.str(20) + " < count " +
                                  dec(r.vertex_count));
        }
    };
    for (std::size_t i = 0; i < systems.size(); ++i)
        absorb(bound_report(systems[i], point_cap), "system[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < knapsacks.size(); ++i)
        absorb(bound_report(knapsacks[i], point_cap), "knapsack[" + std::to_string(i) + "]");
    return out;
}

Int InstanceSampler::uniform(const Int& lo, const Int& hi) {
    if (lo > hi) throw DomainError("uniform: empty range");
    Int span = hi - lo + 1;
    if (span > Int(std::numeric_limits<std::uint64_t>::max()))
        throw DomainError("uniform: range exceeds 64 bits");
    return lo + Int(draw_below(span.convert_to<std::uint64_t>()));
}

long InstanceSampler::uniform_long(long lo, long hi) {
    return uniform(Int(lo), Int(hi)).convert_to<long>();
}

std::uint64_t InstanceSampler::draw_below(std::uint64_t n) {
    const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
    // Reject draws at or above the largest multiple of n to stay uniform.
    std::uint64_t limit = max64 - (max64 % n + 1) % n;
    std::uint64_t r;
    do {
        r = rng_();
    } while (r > limit);
    return r % n;
}

std::vector<LinearSystem> random_bounded_systems(long n_min, long n_max, long m_max,
                                                 const Int& alpha_max, const Int& b_max,
                                                 std::size_t count, std::uint64_t seed,
                                                 bool nonneg_rhs) {
    if (n_min < 1 || n_max < n_min) throw DomainError("bad dimension range");
    if (alpha_max < 1 || b_max < 0) throw DomainError("bad coefficient range");
    if (n_max + 1 > m_max) throw DomainError("m_max too small for the dimension range");
    InstanceSampler s(seed);
    std::vector<LinearSystem> out;
    out.reserve(count);
    Int b_lo = nonneg_rhs ? Int(0) : Int(-2);
    while (out.size() < count) {
        long n = s.uniform_long(n_min, n_max);
        long m = s.uniform_long(n + 1, m_max);
        IntMatrix A(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        std::vector<Int> b(static_cast<std::size_t>(m));
        for (long i = 0; i < m; ++i) {
            for (long j = 0; j < n; ++j)
                A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    s.uniform(-alpha_max, alpha_max);
            b[static_cast<std::size_t>(i)] = s.uniform(b_lo, b_max);
        }
        if (rank(A) != static_cast<std::size_t>(n)) continue;
        LinearSystem sys(std::move(A), std::move(b));
        try {
            (void)diameter(sys);
        } catch (const UnboundedError&) {
            continue;
        } catch (const EmptyRegionError&) {
            if (nonneg_rhs) continue; // should not happen, origin is feasible
            // empty region: bounded trivially, keep it
        }
        out.push_back(std::move(sys));
    }
    return out;
}

std::vector<KnapsackInstance> random_knapsacks(long n_min, long n_max, const Int& a_max,
                                               const Int& a0_max, std::size_t count,
                                               std::uint64_t seed) {
    if (n_min < 1 || n_max < n_min) throw DomainError("bad dimension range");
    if (a_max < 1 || a0_max < 0) throw DomainError("bad weight range");
    InstanceSampler s(seed);
    std::vector<KnapsackInstance> out;
    out.reserve(count);
    while (out.size() < count) {
        long n = s.uniform_long(n_min, n_max);
        std::vector<Int> a(static_cast<std::size_t>(n));
        for (long j = 0; j < n; ++j)
            a[static_cast<std::size_t>(j)] = s.uniform(1, a_max);
        Int a0 = s.uniform(0, a0_max);
        out.emplace_back(KnapsackInstance(std::move(a), a0));
    }
    return out;
}

namespace {

std::string join_a(const std::vector<Int>& a) {
    std::string s;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) s += ';';
        s += dec(a[j]);
    }
    return s;
}

std::vector<Int> split_a(const std::string& s) {
    std::vector<Int> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ';')) out.emplace_back(Int(part));
    return out;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace

std::string records_to_csv(const std::vector<CensusRecord>& records) {
    std::string out = "ensemble,n,parameter,instance_id,a_vector,a0,vertex_count,weight\n";
    for (const auto& r : records) {
        out += r.ensemble + ',' + std::to_string(r.n) + ',' + dec(r.parameter) + ',' +
               dec(r.instance_id) + ',' + join_a(r.a) + ',' + dec(r.a0) + ',' +
               dec(r.vertex_count) + ',' + dec(r.weight) + '\n';
    }
    return out;
}

std::vector<CensusRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "ensemble,n,parameter,instance_id,a_vector,a0,vertex_count,weight")
        throw InputError("unrecognized census CSV header");
    std::vector<CensusRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string part;
        std::istringstream ls(line);
        while (std::getline(ls, part, ',')) f.push_back(part);
        if (f.size() != 8) throw InputError("census CSV row needs 8 fields");
        CensusRecord r;
        r.ensemble = f[0];
        r.n = std::stol(f[1]);
        r.parameter = Int(f[2]);
        r.instance_id = Int(f[3]);
        r.a = split_a(f[4]);
        r.a0 = Int(f[5]);
        r.vertex_count = Int(f[6]);
        r.weight = rat_from_string(f[7]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string records_to_json(const std::vector<CensusRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : r.a) a.push_back(dec(v));
        arr.push_back({{"ensemble", r.ensemble},
                       {"n", std::to_string(r.n)},
                       {"parameter", dec(r.parameter)},
                       {"instance_id", dec(r.instance_id)},
                       {"a", a},
                       {"a0", dec(r.a0)},
                       {"vertex_count", dec(r.vertex_count)},
                       {"weight", dec(r.weight)}});
    }
    return arr.dump(2) + "\n";
}

std::vector<CensusRecord> records_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("census JSON parse failure: ") + e.what());
    }
    if (!arr.is_array()) throw InputError("census JSON must be an array");
    std::vector<CensusRecord> out;
    try {
        for (const auto& j : arr) {
            CensusRecord r;
            r.ensemble = j.at("ensemble").get<std::string>();
            r.n = std::stol(j.at("n").get<std::string>());
            r.parameter = Int(j.at("parameter").get<std::string>());
            r.instance_id = Int(j.at("instance_id").get<std::string>());
            for (const auto& v : j.at("a")) r.a.emplace_back(Int(v.get<std::string>()));
            r.a0 = Int(j.at("a0").get<std::string>());
            r.vertex_count = Int(j.at("vertex_count").get<std::string>());
            r.weight = rat_from_string(j.at("weight").get<std::string>());
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("census JSON field failure: ") + e.what());
    }
    return out;
}

void export_records(const std::vector<CensusRecord>& records, ExportFormat format,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << (format == ExportFormat::csv ? records_to_csv(records)
                                        : records_to_json(records));
    if (!out) throw InputError("write failure on " + path);
}

std::vector<CensusRecord> import_records(ExportFormat format, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return format == ExportFormat::csv ? records_from_csv(buf.str())
                                       : records_from_json(buf.str());
}

} // namespace ihull
