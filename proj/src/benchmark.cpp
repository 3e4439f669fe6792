#include "pg/benchmark.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <cstring>
#include <stdexcept>

namespace pg {

double par2_score(const BenchRecord& r, double timeout, double factor)
{
    return r.timed_out || r.crashed ? factor * timeout : r.seconds;
}

double par2_sum(const std::vector<BenchRecord>& records, double timeout, double factor)
{
    double s = 0;
    for (const auto& r : records) s += par2_score(r, timeout, factor);
    return s;
}

std::vector<Par2Row> par2_table(const std::vector<BenchRecord>& records, double timeout)
{
    std::map<std::pair<std::string, std::string>, Par2Row> rows;
    for (const auto& r : records) {
        Par2Row& row = rows[{r.solver, r.cls}];
        row.solver = r.solver;
        row.cls = r.cls;
        row.par2_seconds += par2_score(r, timeout);
        if (r.timed_out || r.crashed) ++row.timeouts;
    }
    std::vector<Par2Row> out;
    for (auto& [key, row] : rows) out.push_back(row);
    return out;
}

std::vector<CactusRow> cactus_rows(const std::vector<BenchRecord>& records)
{
    std::map<std::string, std::vector<double>> times;
    for (const auto& r : records) {
        auto& t = times[r.solver];
        if (!r.timed_out && !r.crashed) t.push_back(r.seconds);
    }
    std::vector<CactusRow> out;
    for (auto& [solver, t] : times) {
        std::stable_sort(t.begin(), t.end());
        for (std::size_t i = 0; i < t.size(); ++i) out.push_back({solver, static_cast<int>(i + 1), t[i]});
    }
    return out;
}

namespace {

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

void write_par2_csv(std::ostream& os, const std::vector<Par2Row>& rows)
{
    os << "solver,class,par2_seconds,timeouts\n";
    for (const auto& r : rows) os << r.solver << ',' << r.cls << ',' << fmt(r.par2_seconds) << ',' << r.timeouts << '\n';
}

void write_cactus_csv(std::ostream& os, const std::vector<CactusRow>& rows)
{
    os << "solver,rank,seconds\n";
    for (const auto& r : rows) os << r.solver << ',' << r.rank << ',' << fmt(r.seconds) << '\n';
}

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records)
{
    os << "game,class,solver,seconds,timed_out,crashed,verified\n";
    for (const auto& r : records)
        os << r.game << ',' << r.cls << ',' << r.solver << ',' << fmt(r.seconds) << ',' << r.timed_out << ','
           << r.crashed << ',' << r.verified << '\n';
}

namespace {

struct ChildReport {
    double seconds;
    int verified;
};

bool write_all(int fd, const void* data, std::size_t len)
{
    const char* p = static_cast<const char*>(data);
    while (len > 0) {
        const ssize_t k = ::write(fd, p, len);
        if (k < 0 && errno == EINTR) continue;
        if (k <= 0) return false;
        p += k;
        len -= static_cast<std::size_t>(k);
    }
    return true;
}

}  // namespace

BenchRecord run_isolated(const BenchGame& game, const std::string& solver, const BenchOptions& opts)
{
    if (!(opts.timeout > 0)) throw std::invalid_argument("timeout must be positive");
    BenchRecord rec{game.id, game.cls, solver, opts.timeout, true, false, false, {}};

    int fds[2];
    if (::pipe(fds) != 0) throw std::runtime_error("pipe failed");
    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        throw std::runtime_error("fork failed");
    }
    if (pid == 0) {
        ::close(fds[0]);
        int status = 1;
        try {
            PipelineOptions po = opts.pipeline;
            po.solver = solver;
            po.verify = opts.verify;
            const PipelineResult res = run_pipeline(game.game, po);
            ChildReport rep{res.seconds, res.report && res.report->ok() ? 1 : 0};
            std::vector<std::int8_t> winners;
            if (opts.collect_winners)
                for (int v = 0; v < res.solution.size(); ++v)
                    winners.push_back(res.solution.solved(v) ? static_cast<std::int8_t>(res.solution.winner(v)) : -1);
            if (write_all(fds[1], &rep, sizeof rep) && write_all(fds[1], winners.data(), winners.size())) status = 0;
        } catch (...) {
        }
        ::_exit(status);
    }
    ::close(fds[1]);

    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + std::chrono::duration<double>(opts.timeout);
    // The report followed by one byte per vertex when winners are collected.
    const std::size_t want = sizeof(ChildReport) + (opts.collect_winners ? static_cast<std::size_t>(game.game.size()) : 0);
    std::vector<char> buf(want);
    std::size_t got = 0;
    bool eof = false;
    while (!eof && got < want) {
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) break;
        pollfd pfd{fds[0], POLLIN, 0};
        const int r = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count() + 1, 1 << 30)));
        if (r < 0 && errno == EINTR) continue;
        if (r <= 0) continue;
        const ssize_t k = ::read(fds[0], buf.data() + got, want - got);
        if (k < 0 && errno == EINTR) continue;
        if (k <= 0) eof = true;
        else got += static_cast<std::size_t>(k);
    }
    ::close(fds[0]);

    int status = 0;
    if (got == want) {
        ::waitpid(pid, &status, 0);
        ChildReport rep;
        std::memcpy(&rep, buf.data(), sizeof rep);
        rec.winners.assign(buf.begin() + sizeof rep, buf.end());
        rec.timed_out = false;
        rec.seconds = rep.seconds;
        rec.verified = rep.verified != 0;
    } else if (eof) {
        ::waitpid(pid, &status, 0);
        rec.crashed = true;
    } else {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, &status, 0);
    }
    return rec;
}

std::vector<BenchRecord> run_benchmark(const std::vector<BenchGame>& games, const BenchOptions& opts)
{
    std::vector<BenchRecord> out;
    for (const auto& g : games)
        for (const auto& s : opts.solvers) {
            out.push_back(run_isolated(g, s, opts));
            if (opts.progress) opts.progress(out.back());
        }
    return out;
}

}  // namespace pg
