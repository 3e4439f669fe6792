#include "pg/generator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pg {

std::uint64_t Rng::below(std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = eng_();
        if (x < limit) return x % bound;
    }
}

const char* name(GameClass c)
{
    switch (c) {
    case GameClass::LowDegree: return "lowdeg";
    case GameClass::FullRandom: return "fullrandom";
    case GameClass::Steady: return "steady";
    }
    return "?";
}

std::optional<GameClass> parse_game_class(std::string_view s)
{
    for (auto c : {GameClass::LowDegree, GameClass::FullRandom, GameClass::Steady})
        if (s == name(c)) return c;
    return std::nullopt;
}

std::pair<int, int> degree_bounds(const GenSpec& spec)
{
    int lo = 1, hi = 2;
    switch (spec.cls) {
    case GameClass::LowDegree: hi = 2; break;
    case GameClass::FullRandom: hi = spec.n - 1; break;
    case GameClass::Steady: hi = 4; break;
    }
    if (spec.min_degree > 0) lo = spec.min_degree;
    if (spec.max_degree > 0) hi = spec.max_degree;
    else hi = std::max(lo, std::min(hi, spec.n - 1));
    return {lo, hi};
}

namespace {

// Picks d distinct vertices other than v, uniformly.
class DistinctSampler {
  public:
    explicit DistinctSampler(int n) : stamp_(static_cast<std::size_t>(n), 0), pool_(static_cast<std::size_t>(n)) {}

    void sample(Rng& rng, int v, int d, std::vector<int>& out)
    {
        const int n = static_cast<int>(stamp_.size());
        out.clear();
        if (4 * d < n) {
            ++tick_;
            stamp_[v] = tick_;
            while (static_cast<int>(out.size()) < d) {
                const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (stamp_[w] == tick_) continue;
                stamp_[w] = tick_;
                out.push_back(w);
            }
            return;
        }
        int m = 0;
        for (int w = 0; w < n; ++w)
            if (w != v) pool_[m++] = w;
        for (int i = 0; i < d; ++i) {
            const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
            std::swap(pool_[i], pool_[j]);
            out.push_back(pool_[i]);
        }
    }

  private:
    std::vector<std::uint32_t> stamp_;
    std::vector<int> pool_;
    std::uint32_t tick_ = 0;
};

// Unordered set of vertices with O(1) insert, erase and uniform pick.
class Bag {
  public:
    explicit Bag(int n) : pos_(static_cast<std::size_t>(n), -1) {}
    bool contains(int v) const { return pos_[v] >= 0; }
    bool empty() const { return items_.empty(); }
    int size() const { return static_cast<int>(items_.size()); }
    int at(int i) const { return items_[i]; }
    void insert(int v)
    {
        if (contains(v)) return;
        pos_[v] = static_cast<int>(items_.size());
        items_.push_back(v);
    }
    void erase(int v)
    {
        if (!contains(v)) return;
        const int i = pos_[v];
        items_[i] = items_.back();
        pos_[items_[i]] = i;
        items_.pop_back();
        pos_[v] = -1;
    }

  private:
    std::vector<int> pos_;
    std::vector<int> items_;
};

void steady_successors(Rng& rng, int n, int d, int v, Bag& starved, Bag& open, std::vector<int>& out)
{
    auto taken = [&](int w) { return w == v || std::find(out.begin(), out.end(), w) != out.end(); };
    out.clear();
    while (static_cast<int>(out.size()) < d) {
        int w = -1;
        for (Bag* bag : {&starved, &open}) {
            if (bag->empty()) continue;
            // A few random probes, then fall back to any vertex.
            for (int tries = 0; tries < 8 && w < 0; ++tries) {
                const int c = bag->at(static_cast<int>(rng.below(static_cast<std::uint64_t>(bag->size()))));
                if (!taken(c)) w = c;
            }
            if (w >= 0) break;
        }
        while (w < 0) {
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (!taken(c)) w = c;
        }
        out.push_back(w);
    }
}

}  // namespace

ParityGame gen_random_game(const GenSpec& spec)
{
    const int n = spec.n;
    if (n < 2) throw std::invalid_argument("random games need at least 2 vertices");
    const auto [lo, hi] = degree_bounds(spec);
    if (lo < 1 || lo > hi || hi > n - 1)
        throw std::invalid_argument("infeasible out-degree bounds [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] for " + std::to_string(n) + " vertices");

    Rng rng(spec.seed);
    std::vector<VertexData> data(static_cast<std::size_t>(n));
    for (auto& d : data) {
        d.priority = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        d.owner = rng.below(2) ? Player::Odd : Player::Even;
    }

    std::vector<int> succ;
    if (spec.cls != GameClass::Steady) {
        DistinctSampler sampler(n);
        for (int v = 0; v < n; ++v) {
            sampler.sample(rng, v, rng.range(lo, hi), succ);
            data[v].successors = succ;
        }
        return ParityGame(std::move(data));
    }

    std::vector<int> target(static_cast<std::size_t>(n)), indeg(static_cast<std::size_t>(n), 0);
    Bag starved(n), open(n);
    for (int v = 0; v < n; ++v) {
        target[v] = rng.range(1, 4);
        starved.insert(v);
    }
    for (int v = 0; v < n; ++v) {
        steady_successors(rng, n, rng.range(lo, hi), v, starved, open, succ);
        for (int w : succ) {
            ++indeg[w];
            starved.erase(w);
            if (indeg[w] < target[w]) open.insert(w);
            else open.erase(w);
        }
        data[v].successors = succ;
    }
    return ParityGame(std::move(data));
}

}  // namespace pg
