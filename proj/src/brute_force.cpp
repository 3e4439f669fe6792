#include "pg/brute_force.hpp"

#include <span>
#include <string>
#include <vector>

#include "pg/scc.hpp"

namespace pg {

namespace {

class Enumerator {
  public:
    Enumerator(const ParityGame& g, Player alpha) : g_(g), alpha_(alpha), scc_(g.size())
    {
        const int n = g.size();
        choice_.assign(static_cast<std::size_t>(n), -1);
        pos_.assign(static_cast<std::size_t>(n), 0);
        std::uint64_t total = 1;
        for (int v = 0; v < n; ++v) {
            if (g.owner(v) != alpha) continue;
            owned_.push_back(v);
            choice_[v] = g.successors(v)[0];
            total *= static_cast<std::uint64_t>(g.out_degree(v));
            if (total > kBruteForceLimit)
                throw TooLarge("more than " + std::to_string(kBruteForceLimit) + " strategies for " + name(alpha));
        }
        for (int p = 0; p <= g.max_priority(); ++p)
            if (parity(p) != alpha) opponent_priorities_.push_back(p);
    }

    /// Region of alpha and a uniform winning strategy on it.
    void run(std::vector<char>& region, std::vector<int>& strategy)
    {
        const int n = g_.size();
        region.assign(static_cast<std::size_t>(n), 0);
        strategy.assign(static_cast<std::size_t>(n), -1);
        std::vector<char> lost;
        int best = -1;
        do {
            opponent_wins(lost);
            int won = 0;
            for (int v = 0; v < n; ++v)
                if (!lost[v]) {
                    region[v] = 1;
                    ++won;
                }
            if (won > best) {
                best = won;
                for (int v : owned_) strategy[v] = lost[v] ? -1 : choice_[v];
            }
        } while (advance());
    }

  private:
    std::span<const int> succ(int v) const
    {
        if (g_.owner(v) == alpha_) return {&choice_[v], 1};
        return g_.successors(v);
    }

    bool advance()
    {
        for (int v : owned_) {
            auto s = g_.successors(v);
            if (++pos_[v] < static_cast<int>(s.size())) {
                choice_[v] = s[pos_[v]];
                return true;
            }
            pos_[v] = 0;
            choice_[v] = s[0];
        }
        return false;
    }

    // Vertices from which the opponent reaches a cycle of its parity under choice_.
    void opponent_wins(std::vector<char>& out)
    {
        const int n = g_.size();
        out.assign(static_cast<std::size_t>(n), 0);
        auto fn = [this](int v) { return succ(v); };
        for (int p : opponent_priorities_) {
            roots_.clear();
            for (int v = 0; v < n; ++v)
                if (g_.priority(v) == p) roots_.push_back(v);
            if (roots_.empty()) continue;
            auto in_h = [&](int v) { return g_.priority(v) <= p; };
            scc_.run(roots_, in_h, fn, [&](std::span<const int> c) {
                if (nontrivial(c, fn))
                    for (int v : c)
                        if (g_.priority(v) == p) out[v] = 1;
                return false;
            });
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (out[v]) continue;
                for (int w : succ(v))
                    if (out[w]) {
                        out[v] = 1;
                        changed = true;
                        break;
                    }
            }
        }
    }

    const ParityGame& g_;
    Player alpha_;
    SccFinder scc_;
    std::vector<int> owned_, choice_, pos_, opponent_priorities_, roots_;
};

}  // namespace

Solution brute_force_solve(const ParityGame& game)
{
    const int n = game.size();
    Solution sol(n);
    if (n == 0) return sol;
    std::vector<char> region[2];
    std::vector<int> strategy[2];
    Enumerator even(game, Player::Even), odd(game, Player::Odd);
    even.run(region[0], strategy[0]);
    odd.run(region[1], strategy[1]);
    for (int v = 0; v < n; ++v) {
        if (region[0][v] == region[1][v]) throw std::logic_error("brute force regions are not complementary");
        const Player w = region[0][v] ? Player::Even : Player::Odd;
        sol.set(v, w, game.owner(v) == w ? strategy[index(w)][v] : -1);
    }
    return sol;
}

}  // namespace pg
