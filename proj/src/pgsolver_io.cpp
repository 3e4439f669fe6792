#include "pg/pgsolver_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <iterator>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pg {

namespace {

class Scanner {
  public:
    explicit Scanner(std::string_view s) : s_(s) {}

    int line() const { return line_; }

    void skip_space()
    {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') ++line_;
            else if (c != ' ' && c != '\t' && c != '\r') break;
            ++pos_;
        }
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= s_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    bool peek_word(std::string_view w)
    {
        skip_space();
        return s_.substr(pos_, w.size()) == w;
    }

    void take_word(std::string_view w) { pos_ += w.size(); }

    std::int64_t number(const char* what, bool allow_negative = false)
    {
        skip_space();
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc() || (v < 0 && !allow_negative)) fail(std::string("expected ") + what);
        pos_ = static_cast<std::size_t>(p - s_.data());
        return v;
    }

    std::string quoted()
    {
        skip_space();
        ++pos_;
        auto end = s_.find('"', pos_);
        if (end == std::string_view::npos) fail("unterminated label");
        std::string out(s_.substr(pos_, end - pos_));
        line_ += static_cast<int>(std::count(out.begin(), out.end(), '\n'));
        pos_ = end + 1;
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, msg); }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

struct RawVertex {
    std::int64_t id;
    int priority;
    Player owner;
    std::vector<std::int64_t> succ;
    std::optional<std::string> label;
    int line;
};

std::string slurp(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

PgsolverInput read_pgsolver(std::string_view text)
{
    Scanner sc(text);
    constexpr std::int64_t kNoHeader = -2;
    std::int64_t header_max = kNoHeader;
    if (sc.peek_word("parity")) {
        sc.take_word("parity");
        header_max = sc.number("vertex count in header", true);
        sc.expect(';', "';' after header");
    }

    std::vector<RawVertex> raw;
    while (!sc.at_end()) {
        if (sc.peek_word("start")) {
            sc.take_word("start");
            sc.number("start vertex");
            sc.expect(';', "';' after start");
            continue;
        }
        RawVertex r;
        r.line = sc.line();
        r.id = sc.number("vertex id");
        std::int64_t prio = sc.number("priority");
        if (prio > std::numeric_limits<int>::max() / 2) sc.fail("priority too large");
        r.priority = static_cast<int>(prio);
        std::int64_t owner = sc.number("owner");
        if (owner > 1) sc.fail("owner must be 0 or 1");
        r.owner = static_cast<Player>(owner);
        if (sc.peek() == ';' || sc.peek() == '"') sc.fail("vertex " + std::to_string(r.id) + " has no successors");
        r.succ.push_back(sc.number("successor"));
        while (sc.accept(',')) r.succ.push_back(sc.number("successor"));
        if (sc.peek() == '"') r.label = sc.quoted();
        sc.expect(';', "';' at end of vertex");
        if (r.id > header_max && header_max != kNoHeader)
            throw ParseError(r.line, "vertex id " + std::to_string(r.id) + " exceeds header maximum");
        raw.push_back(std::move(r));
    }

    std::vector<std::int64_t> ids;
    ids.reserve(raw.size());
    for (auto& r : raw) ids.push_back(r.id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] == ids[i - 1]) {
            for (auto& r : raw)
                if (r.id == ids[i]) throw ParseError(r.line, "duplicate vertex id " + std::to_string(r.id));
        }

    const int n = static_cast<int>(ids.size());
    bool dense = n == 0 || ids.back() == n - 1;
    std::unordered_map<std::int64_t, int> index;
    if (!dense) {
        index.reserve(ids.size());
        for (int i = 0; i < n; ++i) index.emplace(ids[i], i);
    }
    auto lookup = [&](std::int64_t id) -> int {
        if (dense) return id < n ? static_cast<int>(id) : -1;
        auto it = index.find(id);
        return it == index.end() ? -1 : it->second;
    };

    std::vector<VertexData> data(n);
    for (auto& r : raw) {
        auto& d = data[lookup(r.id)];
        d.priority = r.priority;
        d.owner = r.owner;
        d.label = std::move(r.label);
        d.successors.reserve(r.succ.size());
        for (auto s : r.succ) {
            int w = lookup(s);
            if (w < 0) throw ParseError(r.line, "successor " + std::to_string(s) + " is not a declared vertex");
            d.successors.push_back(w);
        }
    }

    PgsolverInput out;
    out.game = ParityGame(std::move(data));
    out.original_ids = std::move(ids);
    out.renamed = !dense;
    return out;
}

PgsolverInput read_pgsolver(std::istream& in) { return read_pgsolver(slurp(in)); }

ParityGame parse_pgsolver(std::string_view text) { return read_pgsolver(text).game; }

void write_pgsolver(std::ostream& out, const ParityGame& game)
{
    out << "parity " << game.size() - 1 << ";\n";
    for (int v = 0; v < game.size(); ++v) {
        out << v << ' ' << game.priority(v) << ' ' << index(game.owner(v)) << ' ';
        bool first = true;
        for (int w : game.successors(v)) {
            if (!first) out << ',';
            out << w;
            first = false;
        }
        if (game.label(v)) out << " \"" << *game.label(v) << '"';
        out << ";\n";
    }
}

std::string write_pgsolver(const ParityGame& game)
{
    std::ostringstream os;
    write_pgsolver(os, game);
    return os.str();
}

void write_solution(std::ostream& out, const Solution& sol, std::span<const std::int64_t> ids)
{
    auto id = [&](int v) -> std::int64_t { return ids.empty() ? v : ids[v]; };
    std::int64_t max_id = sol.size() == 0 ? -1 : id(sol.size() - 1);
    out << "paritysol " << max_id << ";\n";
    for (int v = 0; v < sol.size(); ++v) {
        if (!sol.solved(v)) continue;
        out << id(v) << ' ' << index(sol.winner(v));
        if (sol.strategy(v) >= 0) out << ' ' << id(sol.strategy(v));
        out << ";\n";
    }
}

std::string write_solution(const Solution& sol, std::span<const std::int64_t> ids)
{
    std::ostringstream os;
    write_solution(os, sol, ids);
    return os.str();
}

Solution read_solution(std::string_view text, int n, std::span<const std::int64_t> ids)
{
    Scanner sc(text);
    if (sc.peek_word("paritysol")) {
        sc.take_word("paritysol");
        sc.number("vertex count in header", true);
        sc.expect(';', "';' after header");
    }
    auto lookup = [&](std::int64_t id) -> int {
        if (ids.empty()) return id < n ? static_cast<int>(id) : -1;
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        return it != ids.end() && *it == id ? static_cast<int>(it - ids.begin()) : -1;
    };
    Solution sol(n);
    while (!sc.at_end()) {
        int line = sc.line();
        int v = lookup(sc.number("vertex id"));
        if (v < 0) throw ParseError(line, "unknown vertex");
        std::int64_t w = sc.number("winner");
        if (w > 1) throw ParseError(line, "winner must be 0 or 1");
        int strat = -1;
        if (sc.peek() != ';') {
            strat = lookup(sc.number("strategy"));
            if (strat < 0) throw ParseError(line, "unknown strategy target");
        }
        sc.expect(';', "';' at end of entry");
        sol.set(v, static_cast<Player>(w), strat);
    }
    return sol;
}

}  // namespace pg
