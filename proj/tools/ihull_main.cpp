// Command-line front end: instance I/O, hulls, bound reports, instance
// families, ensemble censuses, and the acceptance suite.
//
// Exit codes: 0 success, 1 bound violation found, 2 input error,
// 3 resource cap hit.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ihull/bounds.hpp"
#include "ihull/census.hpp"
#include "ihull/errors.hpp"
#include "ihull/families.hpp"
#include "ihull/hull.hpp"
#include "ihull/json_io.hpp"
#include "ihull/model.hpp"
#include "ihull/verify.hpp"

namespace {

using namespace ihull;

Int int_flag(const std::string& text, const char* what) {
    std::size_t start = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
    if (text.size() == start) throw InputError(std::string(what) + ": not a decimal integer");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw InputError(std::string(what) + ": not a decimal integer: " + text);
    return Int(text);
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path.empty()) {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw InputError("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot open output file: " + path);
    f << text;
    if (!f) throw InputError("failed writing output file: " + path);
}

/** Decimal expansion of an exact rational, truncated past 15 fraction digits. */
std::string rat_decimal(const Rat& q) {
    Int num = rat_num(q), den = rat_den(q);
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den, rem = num % den;
    std::string s = (neg && num != 0 ? "-" : "") + dec(whole);
    if (rem == 0) return s;
    s += '.';
    for (int i = 0; i < 15 && rem != 0; ++i) {
        rem *= 10;
        s += dec(Int(rem / den));
        rem %= den;
    }
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

IntegerHull hull_of_knapsack(const KnapsackInstance& k, const Int& cap) {
    bool positive = true;
    for (const Int& w : k.a) positive &= (w > 0);
    if (positive) return knapsack_hull_vertices(k, cap);
    std::vector<std::vector<Int>> gens;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (k.a[j] != 0) continue;
        std::vector<Int> e(k.dim(), Int(0));
        e[j] = 1;
        gens.push_back(std::move(e));
    }
    return hull_with_recession(knapsack_system(k), gens, cap);
}

struct CommonFlags {
    std::string input, output;
    std::string format = "csv";
    std::string point_cap = "4294967296"; // 2^32
    std::string c_cap = "400";
    std::string a0_max;
    unsigned precision = 64;
    unsigned jobs = 1;
    std::uint64_t seed = VerifyOptions{}.seed;
    std::uint64_t sample = 0;
    long n = 0, k = 0, s = 0;
    std::string nu, delta, gamma;
    std::string variant = "as-printed";
    std::vector<std::string> checks;
};

int cmd_hull(const CommonFlags& f) {
    ParsedInstance inst = parse_instance(read_input(f.input));
    Int cap = int_flag(f.point_cap, "point-cap");
    IntegerHull h;
    if (inst.system)
        h = integer_hull_vertices(*inst.system, cap);
    else if (inst.knapsack)
        h = hull_of_knapsack(*inst.knapsack, cap);
    else
        h = congruence_hull_vertices(*inst.congruence, cap);
    emit(hull_to_json(h), f.output);
    return 0;
}

int cmd_bounds(const CommonFlags& f) {
    ParsedInstance inst = parse_instance(read_input(f.input));
    Int cap = int_flag(f.point_cap, "point-cap");
    if (!inst.system && !inst.knapsack)
        throw InputError("bounds: congruence instances carry only ensemble-level bounds; "
                         "pass a system or knapsack instance");
    BoundReport report = inst.system ? bound_report(*inst.system, cap)
                                     : bound_report(*inst.knapsack, cap);
    emit(bound_report_to_json(report), f.output);
    return report.violations() > 0 ? 1 : 0;
}

int cmd_family(const std::string& name, const CommonFlags& f) {
    if (f.precision < 64) throw InputError("precision must be at least 64");
    std::string out;
    if (name == "rubin") {
        if (f.k < 1) throw InputError("rubin: --k must be at least 1");
        RubinVariant v;
        if (f.variant == "as-printed")
            v = RubinVariant::as_printed;
        else if (f.variant == "index-swapped")
            v = RubinVariant::index_swapped;
        else
            throw InputError("unknown variant: " + f.variant);
        out = instance_to_json(rubin_instance(f.k, v));
    } else if (name == "vs") {
        if (f.s < 2) throw InputError("vs: --s must be at least 2");
        out = instance_to_json(vs_extremal_instance(f.s).knapsack());
    } else if (name == "pow2") {
        if (f.n < 1) throw InputError("pow2: --n must be at least 1");
        out = instance_to_json(power_of_two_knapsack(f.n));
    } else if (name == "morgan") {
        if (f.nu.empty()) throw InputError("morgan: --nu is required");
        out = instance_to_json(morgan_family(int_flag(f.nu, "nu"), f.precision));
    } else if (name == "congruence-ensemble") {
        if (f.n < 1 || f.delta.empty())
            throw InputError("congruence-ensemble: --n and --delta are required");
        CongruenceEnsemble e(f.n, int_flag(f.delta, "delta"));
        Int size = e.size();
        if (size > 1000000)
            throw CapExceeded("ensemble too large to emit: " + dec(size) + " instances");
        for (Int i = 0; i < size; ++i) out += instance_to_json(e.at(i));
    } else if (name == "knapsack-ensemble") {
        if (f.n < 1 || f.gamma.empty())
            throw InputError("knapsack-ensemble: --n and --gamma are required");
        KnapsackEnsemble e(f.n, int_flag(f.gamma, "gamma"));
        Int size = e.size();
        if (size > 1000000)
            throw CapExceeded("ensemble too large to emit: " + dec(size) + " instances");
        bool clamp = !f.a0_max.empty();
        Int a0_max = clamp ? int_flag(f.a0_max, "a0-max") : Int(0);
        for (Int i = 0; i < size; ++i) {
            KnapsackInstance inst = e.at(i);
            if (clamp && inst.a0 > a0_max) continue;
            out += instance_to_json(inst);
        }
    } else {
        throw InputError("unknown family: " + name);
    }
    emit(out, f.output);
    return 0;
}

int cmd_census(const std::string& kind, const CommonFlags& f) {
    if (f.n < 1) throw InputError("census: --n must be at least 1");
    CensusOptions opt;
    opt.mode = f.sample > 0 ? CensusMode::sampled : CensusMode::exhaustive;
    opt.sample_count = static_cast<std::size_t>(f.sample);
    opt.seed = f.seed;
    opt.jobs = f.jobs;
    opt.point_cap = int_flag(f.point_cap, "point-cap");

    ExportFormat fmt = (f.format == "json") ? ExportFormat::json : ExportFormat::csv;
    std::ostringstream summary;
    int rc = 0;
    if (kind == "congruence") {
        if (f.delta.empty()) throw InputError("census congruence: --delta is required");
        Int delta = int_flag(f.delta, "delta");
        auto result = mean_congruence_vertex_count(f.n, delta, opt);
        if (!f.output.empty()) export_records(result.records, fmt, f.output);
        summary << "phi=" << rat_decimal(result.mean) << "\n";
        BoundValue bv = mean_vertex_lower_bound(f.n, delta);
        if (bv.applicable && !bv.vacuous) {
            bool met = lower_bound_met(bv, result.mean);
            summary << "phi_lower_bound=" << bv.value.str(12)
                    << " met=" << (met ? "yes" : "no") << "\n";
            if (!met) rc = 1;
        } else {
            summary << "phi_lower_bound=vacuous\n";
        }
    } else if (kind == "knapsack") {
        if (f.gamma.empty()) throw InputError("census knapsack: --gamma is required");
        Int gamma = int_flag(f.gamma, "gamma");
        auto result = mean_knapsack_vertex_count(f.n, gamma, opt);
        if (!f.output.empty()) export_records(result.records, fmt, f.output);
        summary << "psi=" << rat_decimal(result.mean) << "\n"
                << "phi=" << rat_decimal(result.paired_congruence_mean) << "\n"
                << "psi_minus_phi="
                << rat_decimal(result.mean - result.paired_congruence_mean) << "\n"
                << "inequality_failures=" << result.inequality_failures << "\n";
        if (result.inequality_failures > 0) rc = 1;
    } else {
        throw InputError("unknown census kind: " + kind);
    }
    std::cout << summary.str();
    return rc;
}

int cmd_verify(const CommonFlags& f) {
    VerifyOptions opt;
    opt.point_cap = int_flag(f.point_cap, "point-cap");
    opt.c_cap = int_flag(f.c_cap, "c-cap");
    opt.jobs = f.jobs;
    opt.seed = f.seed;
    auto results = run_acceptance(f.checks, opt);
    bool all = true;
    for (const auto& r : results) {
        all &= r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(30) << r.name
                  << " " << r.detail << "\n";
        std::cerr << std::fixed << std::setprecision(1) << r.name << " took " << r.seconds
                  << "s\n";
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer-hull workbench: hulls, vertex-count bounds, instance "
                 "families, ensemble censuses"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string family_name, census_kind;

    auto add_io = [&f](CLI::App* c) {
        c->add_option("--output", f.output, "write output to this path instead of stdout");
        c->add_option("--point-cap", f.point_cap,
                      "largest number of integer points a search may touch");
    };

    CLI::App* hull = app.add_subcommand("hull", "integer hull vertices of one instance");
    hull->add_option("--input", f.input, "instance JSON path (default: stdin)");
    add_io(hull);

    CLI::App* bounds = app.add_subcommand("bounds", "bound report for one instance");
    bounds->add_option("--input", f.input, "instance JSON path (default: stdin)");
    add_io(bounds);

    CLI::App* family = app.add_subcommand("family", "emit a named instance family");
    family->add_option("name", family_name,
                       "rubin | vs | pow2 | morgan | congruence-ensemble | knapsack-ensemble")
        ->required();
    family->add_option("--k", f.k, "rubin index");
    family->add_option("--s", f.s, "extremal family index");
    family->add_option("--n", f.n, "dimension");
    family->add_option("--nu", f.nu, "morgan right-hand side");
    family->add_option("--delta", f.delta, "congruence modulus");
    family->add_option("--gamma", f.gamma, "knapsack ensemble weight");
    family->add_option("--a0-max", f.a0_max, "emit only knapsack instances with a0 <= this");
    family->add_option("--variant", f.variant, "rubin variant: as-printed | index-swapped");
    family->add_option("--precision", f.precision, "dyadic approximation bits (>= 64)");
    add_io(family);

    CLI::App* census = app.add_subcommand("census", "ensemble mean vertex counts");
    census->add_option("kind", census_kind, "congruence | knapsack")->required();
    census->add_option("--n", f.n, "dimension");
    census->add_option("--delta", f.delta, "congruence modulus");
    census->add_option("--gamma", f.gamma, "knapsack ensemble weight");
    census->add_option("--sample", f.sample,
                       "sample this many instances instead of exhausting the ensemble");
    census->add_option("--seed", f.seed, "sampling seed");
    census->add_option("--jobs", f.jobs, "worker thread count");
    census->add_option("--format", f.format, "record format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_io(census);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--check", f.checks, "run only the named checks (repeatable)");
    verify->add_option("--c-cap", f.c_cap, "witness cap for the minimum-b table");
    verify->add_option("--jobs", f.jobs, "worker thread count");
    verify->add_option("--seed", f.seed, "roster seed");
    add_io(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hull->parsed()) return cmd_hull(f);
        if (bounds->parsed()) return cmd_bounds(f);
        if (family->parsed()) return cmd_family(family_name, f);
        if (census->parsed()) return cmd_census(census_kind, f);
        return cmd_verify(f);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const UnboundedError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
