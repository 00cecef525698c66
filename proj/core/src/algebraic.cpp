#include "kpath/algebraic.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "kpath/rng.hpp"

namespace kpath {

Assignment random_assignment(const Graph& g, int k, const Field& field, std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Assignment asg;
    asg.k = k;
    asg.degree = field.degree();
    asg.arc_value.reserve(g.arc_count());
    for (int i = 0; i < g.arc_count(); ++i) asg.arc_value.push_back(field.sample(rng));
    asg.label_value.reserve(static_cast<std::size_t>(g.vertex_count()) * k);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int lbl = 1; lbl <= k; ++lbl) asg.label_value.push_back(field.sample(rng));
    return asg;
}

FieldElement labeled_walk_sum(const Graph& g, int k, std::uint64_t label_mask,
                              const Assignment& asg) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const Field field(asg.degree);
    if (label_mask == 0) return field.zero();

    const int n = g.vertex_count();
    // Position sums z_v = sum of the selected label values at v. Summing per
    // position factorizes the sum over labelings into a product.
    std::vector<FieldElement> z(n, field.zero());
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i)
            if ((label_mask >> i) & 1) z[v] = field.add(z[v], asg.label(v, i + 1));
    }

    std::vector<FieldElement> cur = z;
    std::vector<FieldElement> acc(n, field.zero());
    const auto& arcs = g.arcs();
    for (int step = 2; step <= k; ++step) {
        std::fill(acc.begin(), acc.end(), field.zero());
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
            const auto [v, w] = arcs[i];
            acc[w] = field.add(acc[w], field.mul(asg.arc_value[i], cur[v]));
        }
        for (int w = 0; w < n; ++w) cur[w] = field.mul(z[w], acc[w]);
    }

    FieldElement total = field.zero();
    for (int v = 0; v < n; ++v) total = field.add(total, cur[v]);
    return total;
}

FieldElement path_polynomial(const Graph& g, int k, const Assignment& asg) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > 32) throw std::domain_error("label-subset sum needs k <= 32");
    const Field field(asg.degree);

    // Characteristic 2 makes the subset sum an inclusion-exclusion: labelings
    // that miss a label appear for an even number of subsets and vanish,
    // leaving exactly the bijective labelings.
    FieldElement total = field.zero();
    const std::uint64_t end = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < end; ++mask)
        total = field.add(total, labeled_walk_sum(g, k, mask, asg));
    return total;
}

FieldElement brute_path_polynomial(const Graph& g, int k, const Assignment& asg) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const Field field(asg.degree);
    const int n = g.vertex_count();

    FieldElement total = field.zero();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::vector<int> labels(k);

    std::function<void(int)> extend = [&](int v) {
        path.push_back(v);
        used[v] = 1;
        if (static_cast<int>(path.size()) == k) {
            FieldElement arcs_prod = field.one();
            for (int i = 1; i < k; ++i)
                arcs_prod = field.mul(arcs_prod, asg.arc(g.arc_index(path[i - 1], path[i])));
            std::iota(labels.begin(), labels.end(), 1);
            FieldElement perm_sum = field.zero();
            do {
                FieldElement prod = field.one();
                for (int i = 0; i < k; ++i)
                    prod = field.mul(prod, asg.label(path[i], labels[i]));
                perm_sum = field.add(perm_sum, prod);
            } while (std::next_permutation(labels.begin(), labels.end()));
            total = field.add(total, field.mul(arcs_prod, perm_sum));
        } else {
            for (int w : g.neighbors_out(v))
                if (!used[w]) extend(w);
        }
        used[v] = 0;
        path.pop_back();
    };
    for (int v = 0; v < n; ++v) extend(v);
    return total;
}

TrialReport algebraic_decide(const Graph& g, int k, int trials, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (trials < 1) throw std::invalid_argument("at least one trial is required");

    TrialReport report;
    report.algorithm = Algorithm::algebraic;
    report.k = k;
    report.seed = seed;
    report.trials_run = trials;
    report.decision = Decision::no;

    const auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        const Field field = Field::for_path_length(k);
        auto rng = make_rng(derive_seed(seed, t));
        const Assignment asg = random_assignment(g, k, field, rng);
        if (!path_polynomial(g, k, asg).is_zero()) {
            report.decision = Decision::yes;
            report.trials_run = t + 1;
            break;
        }
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace kpath
