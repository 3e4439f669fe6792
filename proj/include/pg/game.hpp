#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
constexpr Player parity(int priority) { return (priority & 1) ? Player::Odd : Player::Even; }
constexpr int index(Player p) { return static_cast<int>(p); }
constexpr const char* name(Player p) { return p == Player::Even ? "Even" : "Odd"; }

class GameError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input for building a game: one entry per vertex, ids are positions.
struct VertexData {
    int priority = 0;
    Player owner = Player::Even;
    std::vector<int> successors;
    std::optional<std::string> label;
};

/**
 * Immutable parity game. Successors and predecessors are stored in CSR form,
 * successor order is the order given at construction.
 */
class ParityGame {
  public:
    ParityGame() = default;
    explicit ParityGame(std::vector<VertexData> vertices);

    int size() const { return static_cast<int>(priority_.size()); }
    bool empty() const { return priority_.empty(); }
    std::size_t edge_count() const { return succ_.size(); }

    int priority(int v) const { return priority_[v]; }
    Player owner(int v) const { return owner_[v]; }
    std::span<const int> successors(int v) const {
        return {succ_.data() + succ_off_[v], succ_.data() + succ_off_[v + 1]};
    }
    std::span<const int> predecessors(int v) const {
        return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
    }
    int out_degree(int v) const { return succ_off_[v + 1] - succ_off_[v]; }
    bool has_edge(int from, int to) const;
    const std::optional<std::string>& label(int v) const { return labels_[v]; }

    /// Highest priority in the game, -1 for the empty game.
    int max_priority() const { return max_priority_; }
    /// True when priorities are non-decreasing in vertex order.
    bool sorted_by_priority() const { return sorted_; }

    std::vector<VertexData> vertex_data() const;

    friend bool operator==(const ParityGame& a, const ParityGame& b);

  private:
    std::vector<int> priority_;
    std::vector<Player> owner_;
    std::vector<int> succ_off_{0};
    std::vector<int> succ_;
    std::vector<int> pred_off_{0};
    std::vector<int> pred_;
    std::vector<std::optional<std::string>> labels_;
    int max_priority_ = -1;
    bool sorted_ = true;
};

/// Dense membership mask over the vertices of a game, with a cached count.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe, bool full = false)
        : bits_(static_cast<std::size_t>(universe), full ? 1 : 0), count_(full ? universe : 0) {}

    static VertexSet of(int universe, std::span<const int> members);

    int universe() const { return static_cast<int>(bits_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const { return bits_[v] != 0; }

    void insert(int v) {
        if (!bits_[v]) { bits_[v] = 1; ++count_; }
    }
    void erase(int v) {
        if (bits_[v]) { bits_[v] = 0; --count_; }
    }
    void clear();

    /// Members in increasing order.
    std::vector<int> to_vector() const;
    template <class F> void for_each(F&& f) const {
        for (int v = 0; v < universe(); ++v)
            if (bits_[v]) f(v);
    }

    bool subset_of(const VertexSet& other) const;
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  private:
    std::vector<std::uint8_t> bits_;
    int count_ = 0;
};

/**
 * Winner and positional strategy per vertex. A vertex may be unsolved, and a
 * strategy is only meaningful for vertices owned by their winner.
 */
class Solution {
  public:
    Solution() = default;
    explicit Solution(int n) : winner_(static_cast<std::size_t>(n), -1), strategy_(static_cast<std::size_t>(n), -1) {}

    int size() const { return static_cast<int>(winner_.size()); }
    bool solved(int v) const { return winner_[v] >= 0; }
    Player winner(int v) const { return static_cast<Player>(winner_[v]); }
    int strategy(int v) const { return strategy_[v]; }

    void set(int v, Player w, int strategy = -1) {
        winner_[v] = static_cast<std::int8_t>(w);
        strategy_[v] = strategy;
    }
    void set_strategy(int v, int s) { strategy_[v] = s; }
    void unset(int v) {
        winner_[v] = -1;
        strategy_[v] = -1;
    }

    bool complete() const;
    int solved_count() const;
    /// Set of vertices won by p.
    VertexSet region(Player p) const;
    /// Copies every solved vertex of other into this solution.
    void merge(const Solution& other);
    /// True when both solutions assign the same winner to every vertex.
    bool same_winners(const Solution& other) const { return winner_ == other.winner_; }

  private:
    std::vector<std::int8_t> winner_;
    std::vector<int> strategy_;
};

}  // namespace pg
