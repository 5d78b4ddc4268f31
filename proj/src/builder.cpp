#include "morsecat/builder.hpp"

#include "morsecat/search.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morsecat {

namespace {

MorseFunction f_from_units(const BuildOrder& order) {
    std::map<Simplex, Rat> values;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const Simplex& s : order[i].simplices())
            values[s] = Rat(static_cast<long long>(i));
    return MorseFunction(std::move(values));
}

} // namespace

MorseFunction dmf_from_matching(const SimplicialComplex& K, const Matching& M) {
    auto order = linear_extension(K, M);
    if (!order)
        throw DomainError("matching not acyclic");
    return f_from_units(*order);
}

MorseFunction dmf_from_matching(const SimplicialComplex& K, const Matching& M,
                                const BuildOrder& order) {
    std::map<Simplex, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const BuildUnit& unit = order[i];
        if (unit.is_pair()) {
            if (!M.has_pair(unit.pair->first, unit.pair->second))
                throw DomainError("invalid extension: " +
                                  unit.pair->first.to_string() + " < " +
                                  unit.pair->second.to_string() +
                                  " is not a pair of the matching");
        } else if (M.is_matched(unit.single)) {
            throw DomainError("invalid extension: " + unit.single.to_string() +
                              " is matched but listed alone");
        }
        for (const Simplex& s : unit.simplices())
            if (!pos.emplace(s, i).second)
                throw DomainError("invalid extension: " + s.to_string() +
                                  " appears twice");
    }
    for (const Simplex& s : K.simplices())
        if (!pos.count(s))
            throw DomainError("invalid extension: " + s.to_string() +
                              " missing");
    if (pos.size() != K.size())
        throw DomainError("invalid extension: stray simplices");
    for (const Simplex& y : K.simplices())
        for (const Simplex& x : y.boundary()) {
            if (pos.at(x) == pos.at(y))
                continue;
            if (pos.at(x) > pos.at(y))
                throw DomainError("invalid extension: " + x.to_string() +
                                  " ordered after its coface " + y.to_string());
        }
    return f_from_units(order);
}

namespace {

SimplicialComplex remove_simplices(const SimplicialComplex& K,
                                   std::initializer_list<Simplex> gone) {
    std::set<Simplex> left = K.simplices();
    for (const Simplex& s : gone)
        left.erase(s);
    return SimplicialComplex::from_closed_set(std::move(left));
}

// deconstruction of K from the top; reversing it gives the build order
BuildOrder greedy_deconstruction(const SimplicialComplex& K,
                                 std::mt19937_64& rng) {
    BuildOrder removed;
    SimplicialComplex C = K;
    while (!C.empty()) {
        auto dom = dominated_vertices(C);
        if (!dom.empty()) {
            const DominatedVertex& d = dom[std::uniform_int_distribution<
                std::size_t>(0, dom.size() - 1)(rng)];
            VertexId u = d.dominators[std::uniform_int_distribution<
                std::size_t>(0, d.dominators.size() - 1)(rng)];
            std::vector<GradientPair> run;
            for (const Simplex& s : open_star(C, d.v))
                if (!s.contains(u))
                    run.push_back({s, s.join(u)});
            // one uninterrupted run, removed from the top down
            std::sort(run.begin(), run.end(),
                      [](const GradientPair& a, const GradientPair& b) {
                          return b.first < a.first;
                      });
            for (auto& pr : run)
                removed.push_back(BuildUnit::of_pair(std::move(pr)));
            C = C.without_vertex(d.v);
            continue;
        }
        auto free = free_pairs(C);
        if (!free.empty()) {
            std::vector<std::size_t> lucky;
            for (std::size_t i = 0; i < free.size(); ++i) {
                SimplicialComplex next =
                    remove_simplices(C, {free[i].first, free[i].second});
                if (!dominated_vertices(next).empty())
                    lucky.push_back(i);
            }
            std::size_t pick =
                lucky.empty()
                    ? 0 // free_pairs is sorted, so this is the lowest face
                    : lucky[std::uniform_int_distribution<std::size_t>(
                          0, lucky.size() - 1)(rng)];
            const FreePair& fp = free[pick];
            removed.push_back(BuildUnit::of_pair({fp.first, fp.second}));
            C = remove_simplices(C, {fp.first, fp.second});
            continue;
        }
        Simplex crit = C.facets().front(); // smallest remaining facet
        removed.push_back(BuildUnit::of_single(crit));
        C = remove_simplices(C, {crit});
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

} // namespace

MorseFunction greedy_strong_dmf(const SimplicialComplex& K,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return f_from_units(greedy_deconstruction(K, rng));
}

MorseFunction random_dmf(const SimplicialComplex& K, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GradientPair> pairs;
    SimplicialComplex C = K;
    while (!C.empty()) {
        auto free = free_pairs(C);
        if (!free.empty()) {
            const FreePair& fp = free[std::uniform_int_distribution<
                std::size_t>(0, free.size() - 1)(rng)];
            pairs.push_back({fp.first, fp.second});
            C = remove_simplices(C, {fp.first, fp.second});
        } else {
            const auto& facets = C.facets();
            const Simplex& crit = facets[std::uniform_int_distribution<
                std::size_t>(0, facets.size() - 1)(rng)];
            C = remove_simplices(C, {crit});
        }
    }
    Matching M = Matching::from_pairs(K, std::move(pairs));
    auto order = linear_extension(K, M, rng);
    if (!order)
        throw DomainError("matching not acyclic");
    return f_from_units(*order);
}

namespace {

// recover the unit order of a flat function (units sorted by shared value)
BuildOrder order_from(const MorseFunction& f, const Matching& M) {
    std::map<Rat, std::vector<Simplex>> groups;
    for (const auto& [s, val] : f.values())
        groups[val].push_back(s);
    BuildOrder order;
    for (auto& [val, group] : groups) {
        std::sort(group.begin(), group.end());
        if (group.size() == 2 && M.has_pair(group[0], group[1]))
            order.push_back(BuildUnit::of_pair({group[0], group[1]}));
        else
            for (const Simplex& s : group)
                order.push_back(BuildUnit::of_single(s));
    }
    return order;
}

bool depends(const BuildUnit& a, const BuildUnit& b) {
    for (const Simplex& x : a.simplices())
        for (const Simplex& y : b.simplices())
            if (y.dim() == x.dim() + 1 && x.is_face_of(y))
                return true;
    return false;
}

struct Trial {
    MorseFunction best;
    std::size_t best_count = 0;
    std::vector<std::size_t> history;
};

Trial run_trial(const SimplicialComplex& K, const OptimizerConfig& cfg,
                long long iters, int trial_index) {
    std::mt19937_64 rng(cfg.seed ^
                        (0x9e3779b97f4a7c15ULL * (std::uint64_t(trial_index) + 1)));
    auto eval = [&](const MorseFunction& f) {
        return scrit(K, f, cfg.strong).count();
    };

    MorseFunction cur = greedy_strong_dmf(K, rng());
    Matching M = gradient_field(K, cur);
    BuildOrder order = order_from(cur, M);
    std::size_t cur_count = eval(cur);

    Trial t;
    t.best = cur;
    t.best_count = cur_count;
    t.history.push_back(cur_count);

    for (long long i = 1; i < iters; ++i) {
        MorseFunction cand;
        std::optional<Matching> cand_M;
        std::optional<BuildOrder> cand_order;
        int move = cfg.strategy == OptimizerConfig::Strategy::Greedy
                       ? 2
                       : static_cast<int>(rng() % 4);
        switch (move) {
        case 0:
        case 1: { // adjacent unit swap
            if (order.size() < 2) {
                t.history.push_back(t.best_count);
                continue;
            }
            std::size_t p = std::uniform_int_distribution<std::size_t>(
                0, order.size() - 2)(rng);
            if (depends(order[p], order[p + 1])) {
                t.history.push_back(t.best_count);
                continue;
            }
            BuildOrder next = order;
            std::swap(next[p], next[p + 1]);
            cand = f_from_units(next);
            cand_order = std::move(next);
            break;
        }
        case 2: { // greedy restart
            cand = greedy_strong_dmf(K, rng());
            cand_M = gradient_field(K, cand);
            cand_order = order_from(cand, *cand_M);
            break;
        }
        default: { // fresh random extension of the current matching
            auto next = linear_extension(K, M, rng);
            cand = f_from_units(*next);
            cand_order = std::move(*next);
            break;
        }
        }

        std::size_t cand_count = eval(cand);
        bool accept = cand_count <= cur_count;
        if (!accept) {
            // integer temperature, linear cooldown from t0 to 0
            Rat temp = cfg.t0 * Rat(iters - i, iters);
            long long T = temp.numerator() / temp.denominator();
            long long dE =
                static_cast<long long>(cand_count - cur_count);
            if (T > 0 &&
                std::uniform_int_distribution<long long>(0, T)(rng) >= dE)
                accept = true;
        }
        if (accept) {
            cur = std::move(cand);
            cur_count = cand_count;
            if (cand_M)
                M = std::move(*cand_M);
            order = std::move(*cand_order);
            if (cur_count < t.best_count) {
                t.best = cur;
                t.best_count = cur_count;
            }
        }
        t.history.push_back(t.best_count);
    }
    return t;
}

} // namespace

OptimizerResult optimize_scrit(const SimplicialComplex& K,
                               const OptimizerConfig& config) {
    if (config.budget < 1)
        throw DomainError("optimizer budget must be at least 1");
    int trials = std::max(1, config.trials);
    long long iters = std::max<long long>(1, config.budget / trials);

    std::vector<Trial> results(static_cast<std::size_t>(trials));
#ifdef _OPENMP
    int nthreads = config.jobs > 0 ? config.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
    for (int t = 0; t < trials; ++t)
        results[static_cast<std::size_t>(t)] = run_trial(K, config, iters, t);

    std::size_t winner = 0;
    for (std::size_t t = 1; t < results.size(); ++t)
        if (results[t].best_count < results[winner].best_count)
            winner = t;

    OptimizerResult out;
    out.best = results[winner].best;
    out.best_count = results[winner].best_count;
    out.history.assign(static_cast<std::size_t>(iters), 0);
    for (std::size_t i = 0; i < out.history.size(); ++i) {
        std::size_t m = results[0].history[i];
        for (const Trial& t : results)
            m = std::min(m, t.history[i]);
        out.history[i] = m;
    }
    return out;
}

} // namespace morsecat
