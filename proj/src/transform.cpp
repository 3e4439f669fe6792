#include "pg/transform.hpp"

#include <algorithm>
#include <numeric>

namespace pg {

namespace {

std::vector<int> distinct_priorities(const ParityGame& game)
{
    std::vector<char> seen(game.max_priority() + 1, 0);
    for (int v = 0; v < game.size(); ++v) seen[game.priority(v)] = 1;
    std::vector<int> out;
    for (int p = 0; p <= game.max_priority(); ++p)
        if (seen[p]) out.push_back(p);
    return out;
}

ParityGame remap_priorities(const ParityGame& game, const std::vector<int>& map)
{
    auto data = game.vertex_data();
    for (auto& d : data) d.priority = map[d.priority];
    return ParityGame(std::move(data));
}

}  // namespace

Solution RenamedGame::restore(const Solution& sol) const
{
    Solution out(sol.size());
    for (int nv = 0; nv < sol.size(); ++nv) {
        if (!sol.solved(nv)) continue;
        int s = sol.strategy(nv);
        out.set(to_old[nv], sol.winner(nv), s < 0 ? -1 : to_old[s]);
    }
    return out;
}

std::vector<int> gap_free_priority_map(const ParityGame& game)
{
    std::vector<int> map(game.max_priority() + 1, -1);
    int cur = -1;
    int prev = -1;
    for (int p : distinct_priorities(game)) {
        if (cur < 0) cur = p & 1;
        else cur += ((p ^ prev) & 1) ? 1 : 2;
        map[p] = cur;
        prev = p;
    }
    return map;
}

RenamedGame normalize(const ParityGame& game)
{
    const int n = game.size();
    auto map = gap_free_priority_map(game);

    RenamedGame out;
    out.to_old.resize(n);
    std::iota(out.to_old.begin(), out.to_old.end(), 0);
    std::stable_sort(out.to_old.begin(), out.to_old.end(),
                     [&](int a, int b) { return map[game.priority(a)] < map[game.priority(b)]; });
    out.to_new.resize(n);
    for (int i = 0; i < n; ++i) out.to_new[out.to_old[i]] = i;

    std::vector<VertexData> data(n);
    for (int i = 0; i < n; ++i) {
        int v = out.to_old[i];
        data[i].priority = map[game.priority(v)];
        data[i].owner = game.owner(v);
        data[i].label = game.label(v);
        for (int w : game.successors(v)) data[i].successors.push_back(out.to_new[w]);
    }
    out.game = ParityGame(std::move(data));
    return out;
}

std::vector<int> compression_map(const ParityGame& game)
{
    std::vector<int> map(game.max_priority() + 1, -1);
    int cur = -1;
    int prev = -1;
    for (int p : distinct_priorities(game)) {
        if (cur < 0) cur = p & 1;
        else if ((p ^ prev) & 1) ++cur;
        map[p] = cur;
        prev = p;
    }
    return map;
}

ParityGame compress_priorities(const ParityGame& game)
{
    return remap_priorities(game, compression_map(game));
}

ParityGame inflate_priorities(const ParityGame& game)
{
    const int n = game.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return game.priority(a) < game.priority(b); });

    auto data = game.vertex_data();
    int last = -1;
    for (int v : order) {
        int par = game.priority(v) & 1;
        int next = last + 1;
        if ((next & 1) != par) ++next;
        data[v].priority = next;
        last = next;
    }
    return ParityGame(std::move(data));
}

int top_priority(const ParityGame& game, const VertexSet& subgame)
{
    if (subgame.empty()) throw GameError("top priority of an empty subgame");
    if (game.sorted_by_priority()) {
        for (int v = game.size() - 1; v >= 0; --v)
            if (subgame.contains(v)) return game.priority(v);
    }
    int top = -1;
    subgame.for_each([&](int v) { top = std::max(top, game.priority(v)); });
    return top;
}

}  // namespace pg
