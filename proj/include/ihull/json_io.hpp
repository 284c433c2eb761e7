#ifndef IHULL_JSON_IO_HPP
#define IHULL_JSON_IO_HPP

#include <optional>
#include <string>

#include "ihull/census.hpp"
#include "ihull/hull.hpp"
#include "ihull/model.hpp"

namespace ihull {

/**
 * Instance as read from JSON. Exactly one member is set, matching "type":
 *   {"type":"system","A":[[..]],"b":[..]}
 *   {"type":"knapsack","a":[..],"a0":N}      (zero weights need "relaxed":true)
 *   {"type":"congruence","a":[..],"a0":N,"delta":N}
 * Numbers are decimal strings; plain JSON integers are also accepted.
 */
struct ParsedInstance {
    std::optional<LinearSystem> system;
    std::optional<KnapsackInstance> knapsack;
    std::optional<CongruenceInstance> congruence;
};

/** Throws InputError on malformed text or inconsistent data. */
ParsedInstance parse_instance(const std::string& text);

std::string instance_to_json(const LinearSystem& sys);
std::string instance_to_json(const KnapsackInstance& k);
std::string instance_to_json(const CongruenceInstance& c);

/** Vertex list, count, and recession generators. */
std::string hull_to_json(const IntegerHull& h);

/** Full report: counts, every bound with its hold flag, facet data. */
std::string bound_report_to_json(const BoundReport& r);

} // namespace ihull

#endif
