#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morsegraph/graph.hpp"
#include "morsegraph/morse.hpp"

namespace morsegraph {

// Number of vertices with chi(S^-(v)) != 1.
long long critical_count(const Graph& g, const MorseFunction& f);

// Bounds on m(G), the minimal number of critical points over all Morse
// functions. witness achieves `upper`; exact iff lower == upper.
struct MResult {
    int lower = 0;
    int upper = 0;
    MorseFunction witness;
    bool exact = false;
};

// Exhaustive minimum over all n! total orders. Throws std::invalid_argument
// when the order exceeds max_order, directing the caller to m_search.
MResult m_exact(const Graph& g, int max_order = 9);

// Randomized restarts + local search over adjacent-rank transpositions,
// accepting on non-increase. The lower bound is 1, raised to 2 when
// chi(G) != 1: the global minimum is always critical, and an index sum != 1
// forces a second critical vertex.
struct SearchParams {
    int restarts = 200;
    int moves = 500;
    std::uint64_t seed = 0;
};

MResult m_search(const Graph& g, const SearchParams& params = {});

enum class SphereVerdict { Yes, No, Unknown };

// Recursive classification: empty graph, or m(G) = 2 with every unit sphere
// of sphere type. Unknown when some required m-value cannot be certified
// within budget. The trace records the per-level reasoning.
struct SphereTypeVerdict {
    SphereVerdict verdict = SphereVerdict::Unknown;
    std::vector<std::string> trace;
};

struct SphereTypeParams {
    int exhaustive_cap = 9;   // m_exact below this order, m_search above
    SearchParams search;
};

SphereTypeVerdict is_sphere_type(const Graph& g, const SphereTypeParams& params = {});

const char* to_string(SphereVerdict verdict);

}  // namespace morsegraph
