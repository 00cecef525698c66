#include "kpath/divide_color.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kpath/rng.hpp"

namespace kpath {

ColorPartition split_red_blue(const std::vector<int>& subset, std::mt19937_64& rng) {
    ColorPartition part;
    for (int v : subset) {
        if (rng() & 1)
            part.red.push_back(v);
        else
            part.blue.push_back(v);
    }
    return part;
}

ReachMatrix::ReachMatrix(std::vector<int> support, int level)
    : support_(std::move(support)), level_(level) {
    if (level < 1) throw std::invalid_argument("level must be at least 1");
    int max_id = -1;
    for (int v : support_) {
        if (v < 0) throw std::invalid_argument("negative vertex id in support");
        max_id = std::max(max_id, v);
    }
    pos_.assign(max_id + 1, -1);
    for (int i = 0; i < static_cast<int>(support_.size()); ++i) {
        if (pos_[support_[i]] != -1)
            throw std::invalid_argument("duplicate vertex in support");
        pos_[support_[i]] = i;
    }
    bits_.assign(support_.size() * support_.size(), 0);
}

ReachMatrix ReachMatrix::identity(std::vector<int> support) {
    ReachMatrix m(std::move(support), 1);
    for (std::size_t i = 0; i < m.support_.size(); ++i)
        m.bits_[i * m.support_.size() + i] = 1;
    return m;
}

int ReachMatrix::index_of(int vertex) const {
    if (vertex < 0 || vertex >= static_cast<int>(pos_.size())) return -1;
    return pos_[vertex];
}

bool ReachMatrix::get(int u, int v) const {
    const int i = index_of(u), j = index_of(v);
    if (i < 0 || j < 0) return false;
    return bits_[static_cast<std::size_t>(i) * support_.size() + j] != 0;
}

void ReachMatrix::set(int u, int v) {
    const int i = index_of(u), j = index_of(v);
    if (i < 0 || j < 0) throw std::invalid_argument("entry outside the support");
    bits_[static_cast<std::size_t>(i) * support_.size() + j] = 1;
}

void ReachMatrix::merge_or(const ReachMatrix& other) {
    if (other.level_ != level_) throw std::invalid_argument("levels differ in merge");
    if (other.support_.size() != support_.size())
        throw std::invalid_argument("supports differ in merge");
    for (int v : other.support_)
        if (index_of(v) < 0) throw std::invalid_argument("supports differ in merge");
    const std::size_t s = other.support_.size();
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (other.bits_[i * s + j]) set(other.support_[i], other.support_[j]);
        }
    }
}

bool ReachMatrix::any_set() const {
    return std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

bool ReachMatrix::any_off_diagonal() const {
    const std::size_t s = support_.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i != j && bits_[i * s + j]) return true;
    return false;
}

std::vector<std::pair<int, int>> ReachMatrix::set_entries() const {
    std::vector<std::pair<int, int>> out;
    const std::size_t s = support_.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (bits_[i * s + j]) out.emplace_back(support_[i], support_[j]);
    return out;
}

ReachMatrix delta_join(const ReachMatrix& red, const ReachMatrix& blue, const Graph& g) {
    for (int v : red.support())
        for (int w : blue.support())
            if (v == w) throw std::invalid_argument("join supports must be disjoint");

    std::vector<int> support = red.support();
    support.insert(support.end(), blue.support().begin(), blue.support().end());
    ReachMatrix joined(std::move(support), red.level() + blue.level());

    // A path of the joined level decomposes as a red prefix, one crossing
    // arc, and a blue suffix.
    for (auto [x, y] : g.arcs()) {
        bool x_red = false, y_blue = false;
        for (int v : red.support()) x_red |= (v == x);
        for (int v : blue.support()) y_blue |= (v == y);
        if (!x_red || !y_blue) continue;
        for (int u : red.support()) {
            if (!red.get(u, x)) continue;
            for (int v : blue.support()) {
                if (blue.get(y, v)) joined.set(u, v);
            }
        }
    }
    return joined;
}

ReachMatrix naive_colors_paths(const Graph& g, const std::vector<int>& subset, int k,
                               std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k == 1) return ReachMatrix::identity(subset);
    const ColorPartition part = split_red_blue(subset, rng);
    const ReachMatrix red = naive_colors_paths(g, part.red, (k + 1) / 2, rng);
    const ReachMatrix blue = naive_colors_paths(g, part.blue, k / 2, rng);
    return delta_join(red, blue, g);
}

int default_split_trials(int level, int k) {
    if (level < 1 || k < 1) throw std::invalid_argument("level and k must be at least 1");
    const double t = std::ceil(std::exp2(level) * std::log2(4.0 * k));
    if (!(t < 1e9)) throw std::domain_error("repetition schedule overflows at this level");
    return std::max(1, static_cast<int>(t));
}

ReachMatrix improved_colors_paths(const Graph& g, const std::vector<int>& subset, int level,
                                  int k, std::mt19937_64& rng, const SplitSchedule& schedule) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (level < 1 || level > k) throw std::invalid_argument("level must lie in [1, k]");
    if (level == 1) return ReachMatrix::identity(subset);

    const int reps = schedule ? schedule(level, k) : default_split_trials(level, k);
    if (reps < 1) throw std::invalid_argument("schedule must request at least one repetition");

    ReachMatrix acc(subset, level);
    for (int r = 0; r < reps; ++r) {
        const ColorPartition part = split_red_blue(subset, rng);
        const ReachMatrix red =
            improved_colors_paths(g, part.red, (level + 1) / 2, k, rng, schedule);
        const ReachMatrix blue =
            improved_colors_paths(g, part.blue, level / 2, k, rng, schedule);
        acc.merge_or(delta_join(red, blue, g));
    }
    return acc;
}

TrialReport dc_search(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");

    TrialReport report;
    report.algorithm = Algorithm::divide_color;
    report.k = k;
    report.seed = seed;
    report.trials_run = 1;

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    auto rng = make_rng(derive_seed(seed, 0));
    const ReachMatrix m = improved_colors_paths(g, all, k, k, rng);
    const bool hit = (k == 1) ? m.any_set() : m.any_off_diagonal();
    report.decision = hit ? Decision::yes : Decision::no;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace kpath
