#include "pg/game.hpp"

#include <algorithm>

namespace pg {

ParityGame::ParityGame(std::vector<VertexData> vertices)
{
    const int n = static_cast<int>(vertices.size());
    priority_.reserve(n);
    owner_.reserve(n);
    labels_.reserve(n);
    succ_off_.reserve(n + 1);

    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        auto& d = vertices[v];
        if (d.priority < 0) throw GameError("vertex " + std::to_string(v) + " has a negative priority");
        if (d.successors.empty()) throw GameError("vertex " + std::to_string(v) + " has no successors");
        for (int w : d.successors) {
            if (w < 0 || w >= n)
                throw GameError("vertex " + std::to_string(v) + " has successor " + std::to_string(w) +
                                " out of range");
            ++indeg[w];
        }
        if (v > 0 && d.priority < priority_.back()) sorted_ = false;
        priority_.push_back(d.priority);
        owner_.push_back(d.owner);
        labels_.push_back(std::move(d.label));
        succ_.insert(succ_.end(), d.successors.begin(), d.successors.end());
        succ_off_.push_back(static_cast<int>(succ_.size()));
        max_priority_ = std::max(max_priority_, d.priority);
    }

    pred_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) pred_off_[v + 1] = pred_off_[v] + indeg[v];
    pred_.resize(succ_.size());
    std::vector<int> fill(pred_off_.begin(), pred_off_.end() - 1);
    for (int v = 0; v < n; ++v)
        for (int w : successors(v)) pred_[fill[w]++] = v;
}

bool ParityGame::has_edge(int from, int to) const
{
    auto s = successors(from);
    return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<VertexData> ParityGame::vertex_data() const
{
    std::vector<VertexData> out(size());
    for (int v = 0; v < size(); ++v) {
        out[v].priority = priority_[v];
        out[v].owner = owner_[v];
        auto s = successors(v);
        out[v].successors.assign(s.begin(), s.end());
        out[v].label = labels_[v];
    }
    return out;
}

bool operator==(const ParityGame& a, const ParityGame& b)
{
    return a.priority_ == b.priority_ && a.owner_ == b.owner_ && a.succ_off_ == b.succ_off_ &&
           a.succ_ == b.succ_ && a.labels_ == b.labels_;
}

VertexSet VertexSet::of(int universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

void VertexSet::clear()
{
    std::fill(bits_.begin(), bits_.end(), 0);
    count_ = 0;
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(count_);
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool VertexSet::subset_of(const VertexSet& other) const
{
    for (int v = 0; v < universe(); ++v)
        if (bits_[v] && !other.bits_[v]) return false;
    return true;
}

bool Solution::complete() const
{
    return std::all_of(winner_.begin(), winner_.end(), [](std::int8_t w) { return w >= 0; });
}

int Solution::solved_count() const
{
    return static_cast<int>(std::count_if(winner_.begin(), winner_.end(), [](std::int8_t w) { return w >= 0; }));
}

VertexSet Solution::region(Player p) const
{
    VertexSet s(size());
    for (int v = 0; v < size(); ++v)
        if (winner_[v] == static_cast<std::int8_t>(p)) s.insert(v);
    return s;
}

void Solution::merge(const Solution& other)
{
    for (int v = 0; v < other.size(); ++v) {
        if (!other.solved(v)) continue;
        winner_[v] = other.winner_[v];
        strategy_[v] = other.strategy_[v];
    }
}

}  // namespace pg
