#include "pg/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "pg/scc.hpp"

namespace pg {

const char* describe(ViolationKind k)
{
    switch (k) {
    case ViolationKind::Unsolved: return "vertex is unsolved";
    case ViolationKind::MissingStrategy: return "winner-owned vertex has no strategy";
    case ViolationKind::NotASuccessor: return "strategy is not a successor";
    case ViolationKind::StrategyLeaves: return "strategy leaves the winning region";
    case ViolationKind::LoserEscapes: return "loser can leave the winning region";
    case ViolationKind::LosingCycle: return "cycle in winning region is won by the loser";
    }
    return "?";
}

std::string VerifyReport::summary() const
{
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    std::size_t shown = 0;
    for (auto& v : violations) {
        if (++shown > 5) {
            os << "; ...";
            break;
        }
        os << "; vertex " << v.vertex << ": " << describe(v.kind);
        if (!v.cycle.empty()) {
            os << " [";
            for (std::size_t i = 0; i < v.cycle.size(); ++i) os << (i ? " " : "") << v.cycle[i];
            os << "]";
        }
    }
    return os.str();
}

namespace {

class CycleChecker {
  public:
    CycleChecker(const ParityGame& g, const Solution& sol, const std::vector<int>& strategy, const VertexSet* sub)
        : g_(g), sol_(sol), strategy_(strategy), sub_(sub), tag_(g.size(), 0), comp_(g.size(), 0), parent_(g.size(), -1),
          scc_(g.size())
    {
    }

    void check(Player alpha, std::vector<Violation>& out)
    {
        alpha_ = alpha;
        std::vector<std::vector<int>> work;
        std::vector<int> all;
        for (int v = 0; v < g_.size(); ++v)
            if (sol_.solved(v) && sol_.winner(v) == alpha && (!sub_ || sub_->contains(v))) all.push_back(v);
        if (!all.empty()) work.push_back(std::move(all));

        while (!work.empty()) {
            std::vector<int> part = std::move(work.back());
            work.pop_back();
            const int t = ++token_;
            for (int v : part) tag_[v] = t;
            auto in_sub = [&](int v) { return tag_[v] == t; };
            scc_.run(part, in_sub, [&](int v) { return succ(v); }, [&](std::span<const int> c) {
                if (!nontrivial(c, [&](int v) { return succ(v); })) return false;
                int top = c[0];
                for (int v : c)
                    if (g_.priority(v) > g_.priority(top)) top = v;
                const int p = g_.priority(top);
                if (parity(p) != alpha_) {
                    out.push_back({ViolationKind::LosingCycle, top, witness(c, top)});
                    return false;
                }
                std::vector<int> rest;
                for (int v : c)
                    if (g_.priority(v) != p) rest.push_back(v);
                if (!rest.empty()) work.push_back(std::move(rest));
                return false;
            });
        }
    }

  private:
    std::span<const int> succ(int v) const
    {
        if (g_.owner(v) == alpha_) {
            if (strategy_[v] < 0) return {};
            return {&strategy_[v], 1};
        }
        return g_.successors(v);
    }

    // Shortest cycle through top inside component c, found by BFS.
    std::vector<int> witness(std::span<const int> c, int top)
    {
        const int t = ++token_;
        for (int v : c) comp_[v] = t;
        std::vector<int> queue{top};
        parent_[top] = top;
        std::vector<int> seen{top};
        int last = -1;
        for (std::size_t h = 0; h < queue.size() && last < 0; ++h) {
            int u = queue[h];
            for (int w : succ(u)) {
                if (comp_[w] != t) continue;
                if (w == top) {
                    last = u;
                    break;
                }
                if (parent_[w] >= 0) continue;
                parent_[w] = u;
                seen.push_back(w);
                queue.push_back(w);
            }
        }
        std::vector<int> cycle;
        for (int v = last; v >= 0 && v != top; v = parent_[v]) cycle.push_back(v);
        cycle.push_back(top);
        std::reverse(cycle.begin(), cycle.end());
        for (int v : seen) parent_[v] = -1;
        return cycle;
    }

    const ParityGame& g_;
    const Solution& sol_;
    const std::vector<int>& strategy_;
    const VertexSet* sub_;
    Player alpha_ = Player::Even;
    std::vector<int> tag_, comp_, parent_;
    int token_ = 0;
    SccFinder scc_;
};

}  // namespace

VerifyReport verify(const ParityGame& game, const Solution& sol, const VerifyOptions& opts)
{
    VerifyReport rep;
    const int n = game.size();
    if (sol.size() != n) {
        rep.violations.push_back({ViolationKind::Unsolved, n, {}});
        return rep;
    }

    // Strategy edges used for the cycle check; broken edges are reported and left out.
    std::vector<int> strategy(n, -1);
    const VertexSet* sub = opts.subgame;
    for (int v = 0; v < n; ++v) {
        if (sub && !sub->contains(v)) continue;
        if (!sol.solved(v)) {
            if (opts.require_complete) rep.violations.push_back({ViolationKind::Unsolved, v, {}});
            continue;
        }
        const Player w = sol.winner(v);
        if (game.owner(v) == w) {
            const int s = sol.strategy(v);
            if (s < 0) rep.violations.push_back({ViolationKind::MissingStrategy, v, {}});
            else if (s >= n || !game.has_edge(v, s)) rep.violations.push_back({ViolationKind::NotASuccessor, v, {}});
            else if (!sol.solved(s) || sol.winner(s) != w)
                rep.violations.push_back({ViolationKind::StrategyLeaves, v, {}});
            else strategy[v] = s;
        } else {
            for (int s : game.successors(v)) {
                if (sub && !sub->contains(s)) continue;
                if (!sol.solved(s) || sol.winner(s) != w) {
                    rep.violations.push_back({ViolationKind::LoserEscapes, v, {}});
                    break;
                }
            }
        }
    }

    CycleChecker cc(game, sol, strategy, sub);
    cc.check(Player::Even, rep.violations);
    cc.check(Player::Odd, rep.violations);
    return rep;
}

}  // namespace pg
