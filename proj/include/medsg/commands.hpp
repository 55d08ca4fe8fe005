#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "medsg/semigroup.hpp"

namespace medsg {

using Json = nlohmann::ordered_json;

// Accepts comma- or whitespace-separated integers, e.g. "7,9,11,15" or "5 6 7 9".
std::vector<std::int64_t> parse_generators(const std::string& text);

Json cmd_info(const std::vector<std::int64_t>& generators);
Json cmd_apery(const std::vector<std::int64_t>& generators, std::int64_t element, bool hat);
Json cmd_med_closure(const std::vector<std::int64_t>& generators, const std::string& method,
                     bool trace);
Json cmd_check_arf_element(const std::vector<std::int64_t>& generators, std::int64_t z);
Json cmd_check_predicate(const std::vector<std::int64_t>& generators, const std::string& which);
Json cmd_check_bounds(const std::vector<std::int64_t>& generators, std::int64_t r);
Json cmd_extend(const std::vector<std::int64_t>& generators, std::int64_t r);

struct FuzzOutcome {
    Json doc;
    bool failed = false;
};
FuzzOutcome cmd_fuzz(std::uint64_t seed, std::int64_t samples, std::int64_t m_max,
                     std::int64_t gen_max);

// Family spec grammar: "m=7;gens=24,33;scale=2;steps=6". The last listed
// generator is multiplied by scale at each step; the others stay fixed.
Json cmd_bench(const std::vector<std::string>& family_specs, std::int64_t reps);

std::string render_text(const Json& doc);
std::string render_machine(const Json& doc);

} // namespace medsg
