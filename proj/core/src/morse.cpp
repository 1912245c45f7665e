#include "morsegraph/morse.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "morsegraph/rng.hpp"

namespace morsegraph {

namespace {

void require_permutation(std::span<const int> ranks) {
    std::vector<bool> seen(ranks.size(), false);
    for (int r : ranks) {
        if (r < 0 || r >= static_cast<int>(ranks.size()) || seen[static_cast<std::size_t>(r)]) {
            throw MorseError("rank vector is not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(r)] = true;
    }
}

}  // namespace

MorseFunction MorseFunction::from_vertex_order(std::span<const VertexId> order) {
    std::vector<int> ranks(order.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        VertexId v = order[k];
        if (v < 0 || v >= static_cast<VertexId>(order.size()) || ranks[static_cast<std::size_t>(v)] != -1) {
            throw MorseError("vertex order is not a permutation of 0..n-1");
        }
        ranks[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    MorseFunction f;
    f.rank_ = std::move(ranks);
    return f;
}

MorseFunction MorseFunction::from_ranks(std::vector<int> ranks) {
    require_permutation(ranks);
    MorseFunction f;
    f.rank_ = std::move(ranks);
    return f;
}

MorseFunction MorseFunction::random(VertexId order, std::uint64_t seed) {
    std::vector<VertexId> listing(static_cast<std::size_t>(order));
    std::iota(listing.begin(), listing.end(), 0);
    std::mt19937_64 rng(seed);
    shuffle(listing, rng);
    return from_vertex_order(listing);
}

MorseFunction MorseFunction::from_values(std::span<const Rational> values) {
    std::vector<VertexId> listing(values.size());
    std::iota(listing.begin(), listing.end(), 0);
    std::sort(listing.begin(), listing.end(), [&](VertexId a, VertexId b) {
        const auto& va = values[static_cast<std::size_t>(a)];
        const auto& vb = values[static_cast<std::size_t>(b)];
        if (va != vb) return va < vb;
        return a < b;
    });
    return from_vertex_order(listing);
}

std::vector<VertexId> MorseFunction::vertex_order() const {
    std::vector<VertexId> listing(rank_.size());
    for (VertexId v = 0; v < size(); ++v) {
        listing[static_cast<std::size_t>(rank_[static_cast<std::size_t>(v)])] = v;
    }
    return listing;
}

MorseFunction MorseFunction::negated() const {
    MorseFunction f;
    f.rank_.reserve(rank_.size());
    const int top = static_cast<int>(rank_.size()) - 1;
    for (int r : rank_) f.rank_.push_back(top - r);
    return f;
}

std::vector<std::pair<VertexId, VertexId>> morse_violations(
    const Graph& g, std::span<const Rational> values) {
    if (static_cast<VertexId>(values.size()) != g.order()) {
        throw MorseError("value map covers " + std::to_string(values.size()) +
                         " vertices, graph has " + std::to_string(g.order()));
    }
    std::vector<std::pair<VertexId, VertexId>> bad;
    std::vector<VertexId> ball;
    for (VertexId p = 0; p < g.order(); ++p) {
        ball.assign(g.neighbors(p).begin(), g.neighbors(p).end());
        ball.push_back(p);
        // equal values inside B(p) are exactly the ties at distance <= 2
        std::sort(ball.begin(), ball.end(), [&](VertexId a, VertexId b) {
            const auto& va = values[static_cast<std::size_t>(a)];
            const auto& vb = values[static_cast<std::size_t>(b)];
            if (va != vb) return va < vb;
            return a < b;
        });
        for (std::size_t i = 0; i + 1 < ball.size(); ++i) {
            for (std::size_t j = i + 1; j < ball.size(); ++j) {
                if (values[static_cast<std::size_t>(ball[i])] != values[static_cast<std::size_t>(ball[j])]) break;
                bad.emplace_back(std::min(ball[i], ball[j]), std::max(ball[i], ball[j]));
            }
        }
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

bool is_morse(const Graph& g, std::span<const Rational> values) {
    return morse_violations(g, values).empty();
}

MorseFunction morse_from_values(const Graph& g, std::span<const Rational> values) {
    auto bad = morse_violations(g, values);
    if (!bad.empty()) {
        std::ostringstream oss;
        oss << "values are not a Morse function; equal pairs at distance <= 2:";
        for (const auto& [u, v] : bad) oss << " (" << u << "," << v << ")";
        throw MorseError(oss.str());
    }
    return MorseFunction::from_values(values);
}

namespace {

// Clique enumeration over one unit sphere with each clique classified by
// which sides of the split it touches. side[i] < 0 means f(w) < f(v).
struct ProfileAccumulator {
    SphereCliqueProfile profile;

    void bump(int depth, bool has_minus, bool has_plus) {
        auto grow = [&](std::vector<long long>& v) {
            if (static_cast<int>(v.size()) <= depth) v.resize(static_cast<std::size_t>(depth) + 1, 0);
        };
        grow(profile.all);
        grow(profile.all_minus);
        grow(profile.all_plus);
        grow(profile.mixed);
        ++profile.all[static_cast<std::size_t>(depth)];
        if (has_minus && has_plus) {
            ++profile.mixed[static_cast<std::size_t>(depth)];
        } else if (has_minus) {
            ++profile.all_minus[static_cast<std::size_t>(depth)];
        } else {
            ++profile.all_plus[static_cast<std::size_t>(depth)];
        }
    }
};

void extend_profile(const Graph& sphere, const std::vector<signed char>& side,
                    std::vector<std::vector<VertexId>>& pool, int depth,
                    bool has_minus, bool has_plus, ProfileAccumulator& acc) {
    const auto& cand = pool[static_cast<std::size_t>(depth)];
    for (std::size_t i = 0; i < cand.size(); ++i) {
        VertexId u = cand[i];
        bool hm = has_minus || side[static_cast<std::size_t>(u)] < 0;
        bool hp = has_plus || side[static_cast<std::size_t>(u)] > 0;
        acc.bump(depth, hm, hp);
        auto& next = pool[static_cast<std::size_t>(depth + 1)];
        next.clear();
        auto nb = sphere.neighbors(u);
        std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(),
                              nb.begin(), nb.end(), std::back_inserter(next));
        if (!next.empty()) extend_profile(sphere, side, pool, depth + 1, hm, hp, acc);
    }
}

SphereCliqueProfile profile_of_sphere(const Graph& sphere, const std::vector<signed char>& side) {
    ProfileAccumulator acc;
    std::vector<std::vector<VertexId>> pool(static_cast<std::size_t>(sphere.order()) + 2);
    for (VertexId w = 0; w < sphere.order(); ++w) {
        bool hm = side[static_cast<std::size_t>(w)] < 0;
        bool hp = !hm;
        acc.bump(0, hm, hp);
        auto nb = sphere.neighbors(w);
        pool[1].assign(std::upper_bound(nb.begin(), nb.end(), w), nb.end());
        if (!pool[1].empty()) extend_profile(sphere, side, pool, 1, hm, hp, acc);
    }
    return acc.profile;
}

void require_function_size(const Graph& g, const MorseFunction& f) {
    if (f.size() != g.order()) {
        throw MorseError("Morse function covers " + std::to_string(f.size()) +
                         " vertices, graph has " + std::to_string(g.order()));
    }
}

long long alternating_sum(const std::vector<long long>& counts) {
    long long total = 0;
    int sign = 1;
    for (long long c : counts) {
        total += sign * c;
        sign = -sign;
    }
    return total;
}

}  // namespace

long long SphereCliqueProfile::chi_minus() const { return alternating_sum(all_minus); }
long long SphereCliqueProfile::chi_plus() const { return alternating_sum(all_plus); }

SphereCliqueProfile sphere_clique_profile(const Graph& g, const MorseFunction& f, VertexId v) {
    require_function_size(g, f);
    auto sphere = unit_sphere(g, v);
    std::vector<signed char> side(sphere.vertex_map.size());
    for (std::size_t i = 0; i < sphere.vertex_map.size(); ++i) {
        side[i] = f.below(sphere.vertex_map[i], v) ? -1 : 1;
    }
    return profile_of_sphere(sphere.graph, side);
}

SphereSplit sphere_split(const Graph& g, const MorseFunction& f, VertexId v) {
    require_function_size(g, f);
    SphereSplit split;
    split.vertex = v;
    for (VertexId w : g.neighbors(v)) {
        (f.below(w, v) ? split.minus : split.plus).push_back(w);
    }
    split.mixed_counts = sphere_clique_profile(g, f, v).mixed;
    return split;
}

long long vertex_index(const Graph& g, const MorseFunction& f, VertexId v) {
    require_function_size(g, f);
    std::vector<VertexId> minus;
    for (VertexId w : g.neighbors(v)) {
        if (f.below(w, v)) minus.push_back(w);
    }
    return 1 - euler_characteristic(induced_subgraph(g, minus).graph);
}

long long vertex_index_plus(const Graph& g, const MorseFunction& f, VertexId v) {
    return vertex_index(g, f.negated(), v);
}

bool is_critical(const Graph& g, const MorseFunction& f, VertexId v) {
    return vertex_index(g, f, v) != 0;
}

long long IndexReport::critical_count() const {
    long long n = 0;
    for (bool c : critical) n += c ? 1 : 0;
    return n;
}

IndexReport index_report(const Graph& g, const MorseFunction& f) {
    require_function_size(g, f);
    IndexReport report;
    report.index.reserve(static_cast<std::size_t>(g.order()));
    report.j_times_2.reserve(static_cast<std::size_t>(g.order()));
    report.critical.reserve(static_cast<std::size_t>(g.order()));
    for (VertexId v = 0; v < g.order(); ++v) {
        auto profile = sphere_clique_profile(g, f, v);
        long long chi_minus = profile.chi_minus();
        long long chi_plus = profile.chi_plus();
        long long i = 1 - chi_minus;
        report.index.push_back(i);
        report.j_times_2.push_back(2 - chi_minus - chi_plus);
        report.critical.push_back(i != 0);
        report.index_sum += i;
    }
    return report;
}

long long count_Vk(const Graph& g, VertexId v, int k) {
    if (k < 0) return 0;
    auto census = clique_census(unit_sphere(g, v).graph);
    return census[static_cast<std::size_t>(k)];
}

bool verify_transfer(const Graph& g) {
    auto census = clique_census(g);
    int dim = census.dimension();
    std::vector<long long> sphere_sums(static_cast<std::size_t>(dim + 1), 0);
    for (VertexId v = 0; v < g.order(); ++v) {
        auto sc = clique_census(unit_sphere(g, v).graph);
        for (std::size_t k = 0; k < sc.counts.size(); ++k) {
            if (k >= sphere_sums.size()) return false;  // sphere clique bigger than census allows
            sphere_sums[k] += sc.counts[k];
        }
    }
    for (int k = 0; k <= dim; ++k) {
        if (sphere_sums[static_cast<std::size_t>(k)] !=
            (k + 2) * census[static_cast<std::size_t>(k) + 1]) {
            return false;
        }
    }
    return true;
}

bool verify_intermediate(const Graph& g, const MorseFunction& f) {
    require_function_size(g, f);
    auto census = clique_census(g);
    int dim = census.dimension();
    std::vector<long long> mixed_sums(static_cast<std::size_t>(dim + 1), 0);
    for (VertexId v = 0; v < g.order(); ++v) {
        auto profile = sphere_clique_profile(g, f, v);
        for (std::size_t k = 0; k < profile.mixed.size(); ++k) {
            if (k >= mixed_sums.size()) return false;
            mixed_sums[k] += profile.mixed[k];
        }
    }
    for (int k = 0; k <= dim; ++k) {
        if (mixed_sums[static_cast<std::size_t>(k)] !=
            k * census[static_cast<std::size_t>(k) + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace morsegraph
