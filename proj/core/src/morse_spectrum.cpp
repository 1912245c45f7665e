#include "morsegraph/morse_spectrum.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "morsegraph/rng.hpp"

namespace morsegraph {

namespace {

bool critical_given_ranks(const Graph& g, const std::vector<int>& ranks, VertexId v) {
    std::vector<VertexId> minus;
    for (VertexId w : g.neighbors(v)) {
        if (ranks[static_cast<std::size_t>(w)] < ranks[static_cast<std::size_t>(v)]) {
            minus.push_back(w);
        }
    }
    return euler_characteristic(induced_subgraph(g, minus).graph) != 1;
}

}  // namespace

long long critical_count(const Graph& g, const MorseFunction& f) {
    long long count = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (is_critical(g, f, v)) ++count;
    }
    return count;
}

MResult m_exact(const Graph& g, int max_order) {
    const int n = g.order();
    if (n > max_order) {
        throw std::invalid_argument("m_exact: graph order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(max_order) +
                                    "; use m_search");
    }
    if (n == 0) return {0, 0, MorseFunction{}, true};

    const int lb = (euler_characteristic(g) != 1) ? 2 : 1;
    std::vector<VertexId> listing(static_cast<std::size_t>(n));
    std::iota(listing.begin(), listing.end(), 0);

    int best = n + 1;
    MorseFunction witness;
    std::vector<int> ranks(static_cast<std::size_t>(n));
    do {
        for (int k = 0; k < n; ++k) ranks[static_cast<std::size_t>(listing[static_cast<std::size_t>(k)])] = k;
        int count = 0;
        for (VertexId v = 0; v < n && count < best; ++v) {
            if (critical_given_ranks(g, ranks, v)) ++count;
        }
        if (count < best) {
            best = count;
            witness = MorseFunction::from_ranks(ranks);
            if (best == lb) break;
        }
    } while (std::next_permutation(listing.begin(), listing.end()));

    return {best, best, std::move(witness), true};
}

MResult m_search(const Graph& g, const SearchParams& params) {
    const int n = g.order();
    if (n == 0) return {0, 0, MorseFunction{}, true};
    if (n == 1) {
        // the single vertex is a minimum, hence critical
        return {1, 1, MorseFunction::from_ranks({0}), true};
    }

    const int lower = (euler_characteristic(g) != 1) ? 2 : 1;

    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::vector<bool> crit(static_cast<std::size_t>(n));

    // identity order as the baseline so the result is well-formed even with
    // a zero restart budget
    std::iota(ranks.begin(), ranks.end(), 0);
    int best = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (critical_given_ranks(g, ranks, v)) ++best;
    }
    std::vector<int> best_ranks = ranks;

    for (int restart = 0; restart < params.restarts && best > lower; ++restart) {
        std::mt19937_64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(restart)));
        std::iota(order.begin(), order.end(), 0);
        shuffle(order, rng);
        for (int k = 0; k < n; ++k) ranks[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

        int current = 0;
        for (VertexId v = 0; v < n; ++v) {
            crit[static_cast<std::size_t>(v)] = critical_given_ranks(g, ranks, v);
            if (crit[static_cast<std::size_t>(v)]) ++current;
        }
        int restart_best = current;
        std::vector<int> restart_ranks = ranks;

        for (int move = 0; move < params.moves && current > lower; ++move) {
            const auto r = static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
            VertexId u = order[r];
            VertexId w = order[r + 1];
            std::swap(order[r], order[r + 1]);
            std::swap(ranks[static_cast<std::size_t>(u)], ranks[static_cast<std::size_t>(w)]);
            if (!g.has_edge(u, w)) continue;  // no edge comparison changes; free plateau step

            // only the endpoints of the flipped edge can change criticality
            bool cu = critical_given_ranks(g, ranks, u);
            bool cw = critical_given_ranks(g, ranks, w);
            int next = current - crit[static_cast<std::size_t>(u)] - crit[static_cast<std::size_t>(w)] + cu + cw;
            if (next <= current) {
                current = next;
                crit[static_cast<std::size_t>(u)] = cu;
                crit[static_cast<std::size_t>(w)] = cw;
                if (current < restart_best) {
                    restart_best = current;
                    restart_ranks = ranks;
                }
            } else {
                std::swap(order[r], order[r + 1]);
                std::swap(ranks[static_cast<std::size_t>(u)], ranks[static_cast<std::size_t>(w)]);
            }
        }

        if (restart_best < best || (restart_best == best && restart_ranks < best_ranks)) {
            best = restart_best;
            best_ranks = restart_ranks;
        }
    }

    MResult result;
    result.lower = lower;
    result.upper = best;
    result.witness = MorseFunction::from_ranks(best_ranks);
    result.exact = (result.lower == result.upper);
    return result;
}

namespace {

using Memo = std::unordered_map<std::string, SphereVerdict>;

std::string indent(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

SphereVerdict sphere_type_eval(const Graph& g, const SphereTypeParams& params, int depth,
                               std::vector<std::string>& trace, Memo& memo) {
    if (g.order() == 0) {
        trace.push_back(indent(depth) + "empty graph -> Yes");
        return SphereVerdict::Yes;
    }

    const long long chi = euler_characteristic(g);
    std::string head = indent(depth) + "order=" + std::to_string(g.order()) +
                       " chi=" + std::to_string(chi);

    if (g.order() <= params.exhaustive_cap) {
        auto m = m_exact(g, params.exhaustive_cap);
        if (m.upper != 2) {
            trace.push_back(head + " m=" + std::to_string(m.upper) + " (exhaustive) != 2 -> No");
            return SphereVerdict::No;
        }
        trace.push_back(head + " m=2 (exhaustive)");
    } else if (chi == 1) {
        // the global minimum is critical with index 1; a second and final
        // critical point would need index chi-1 = 0, impossible
        trace.push_back(head + " chi=1 rules out m=2 -> No");
        return SphereVerdict::No;
    } else {
        auto m = m_search(g, params.search);
        if (m.upper == 2) {
            trace.push_back(head + " m=2 (search witness + lower bound 2 from chi != 1)");
        } else {
            trace.push_back(head + " best search value m<=" + std::to_string(m.upper) +
                            " not certified -> Unknown");
            return SphereVerdict::Unknown;
        }
    }

    SphereVerdict combined = SphereVerdict::Yes;
    std::vector<std::string> seen;
    for (VertexId v = 0; v < g.order(); ++v) {
        auto sphere = unit_sphere(g, v);
        auto cert = graph_certificate(sphere.graph);
        if (std::find(seen.begin(), seen.end(), cert) != seen.end()) continue;
        seen.push_back(cert);

        SphereVerdict sub;
        auto it = memo.find(cert);
        if (it != memo.end()) {
            sub = it->second;
            trace.push_back(indent(depth + 1) + "sphere S(" + std::to_string(v) +
                            "): " + to_string(sub) + " (memoized)");
        } else {
            trace.push_back(indent(depth + 1) + "sphere S(" + std::to_string(v) + "):");
            sub = sphere_type_eval(sphere.graph, params, depth + 2, trace, memo);
            memo.emplace(std::move(cert), sub);
        }
        if (sub == SphereVerdict::No) {
            trace.push_back(indent(depth + 1) + "sphere S(" + std::to_string(v) +
                            ") is not of sphere type -> No");
            return SphereVerdict::No;
        }
        if (sub == SphereVerdict::Unknown) combined = SphereVerdict::Unknown;
    }
    trace.push_back(indent(depth) + "-> " + to_string(combined));
    return combined;
}

}  // namespace

SphereTypeVerdict is_sphere_type(const Graph& g, const SphereTypeParams& params) {
    SphereTypeVerdict result;
    Memo memo;
    result.verdict = sphere_type_eval(g, params, 0, result.trace, memo);
    return result;
}

const char* to_string(SphereVerdict verdict) {
    switch (verdict) {
        case SphereVerdict::Yes: return "Yes";
        case SphereVerdict::No: return "No";
        case SphereVerdict::Unknown: return "Unknown";
    }
    return "?";
}

}  // namespace morsegraph
