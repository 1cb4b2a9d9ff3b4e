#include "braidcone/enumerate.hpp"

#include "braidcone/cone.hpp"
#include "braidcone/fastpath.hpp"
#include "braidcone/gorenstein.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace braidcone {

int enumeration_cap() {
    if (const char* env = std::getenv("BRAIDCONE_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 2) return cap;
    }
    return 7;
}

namespace {

// Incremental generator: element k is added with a choice of D (the
// elements below it) and U (the elements above it).  D must be a
// downset, U an upset, and every d in D must already lie below every
// u in U; the relation then stays transitively closed and antisymmetric
// by construction.  Choices are scanned in ascending mask order, so the
// stream is deterministic.
class Generator {
public:
    Generator(int n, bool dedup, const std::function<bool(const Poset&)>& visit)
        : n_(n), dedup_(dedup), visit_(visit) {}

    // Applies one (D, U) choice for the next element; used both by the
    // recursion and to replay a shard prefix.
    void push_choice(std::uint32_t d, std::uint32_t u) {
        int k = k_;
        up_[k] = u;
        down_[k] = d;
        for (int i = 0; i < k; ++i) {
            if (d >> i & 1) up_[i] |= std::uint32_t{1} << k;
            if (u >> i & 1) down_[i] |= std::uint32_t{1} << k;
        }
        ++k_;
    }

    void pop_choice() {
        --k_;
        std::uint32_t bit = ~(std::uint32_t{1} << k_);
        for (int i = 0; i < k_; ++i) {
            up_[i] &= bit;
            down_[i] &= bit;
        }
        up_[k_] = down_[k_] = 0;
    }

    bool run() { return rec(); }

    // Enumerates the valid (D, U) choices at the current size, ascending.
    template <typename F>
    bool for_each_choice(F&& f) {
        int k = k_;
        std::uint32_t all = (std::uint32_t{1} << k) - 1;
        for (std::uint32_t d = 0;; d = next_subset(d, all)) {
            if (is_downset_mask(d)) {
                std::uint32_t allowed = all & ~d;
                for (int i = 0; i < k; ++i)
                    if (d >> i & 1) allowed &= up_[i];
                for (std::uint32_t u = 0;; u = next_subset(u, allowed)) {
                    if (is_upset_mask(u) && !f(d, u)) return false;
                    if (u == allowed) break;
                }
            }
            if (d == all) break;
        }
        return true;
    }

private:
    static std::uint32_t next_subset(std::uint32_t s, std::uint32_t mask) {
        return (s - mask) & mask;
    }

    bool is_downset_mask(std::uint32_t d) const {
        for (int i = 0; i < k_; ++i)
            if ((d >> i & 1) && (down_[i] & ~d)) return false;
        return true;
    }

    bool is_upset_mask(std::uint32_t u) const {
        for (int i = 0; i < k_; ++i)
            if ((u >> i & 1) && (up_[i] & ~u)) return false;
        return true;
    }

    bool connected() const {
        std::uint32_t all = (std::uint32_t{1} << n_) - 1;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int i = 0; i < n_; ++i)
                if (frontier >> i & 1) next |= up_[i] | down_[i];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return seen == all;
    }

    bool emit() {
        if (!connected()) return true;
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (up_[i] >> j & 1) rel.emplace_back(i, j);
        Poset p = Poset::from_relations(n_, rel);
        if (dedup_ && !is_canonical_form(p)) return true;
        return visit_(p);
    }

    bool rec() {
        if (k_ == n_) return emit();
        return for_each_choice([&](std::uint32_t d, std::uint32_t u) {
            push_choice(d, u);
            bool keep = rec();
            pop_choice();
            return keep;
        });
    }

    int n_;
    bool dedup_;
    const std::function<bool(const Poset&)>& visit_;
    int k_ = 1; // element 0 is always present with no choices
    std::array<std::uint32_t, 32> up_{}, down_{};
};

void check_n(int n) {
    int cap = enumeration_cap();
    if (n < 2 || n > cap)
        throw CapExceededError("enumeration size " + std::to_string(n) + " outside 2.." +
                               std::to_string(cap) + " (raise BRAIDCONE_CAP to extend)");
    if (n > 31) throw CapExceededError("enumeration supports at most 31 elements");
}

// Lexicographic canonical-form check over all relabelings, comparing
// the bordered-submatrix flattening (row r then column r bits, r
// ascending) and pruning on prefixes.
struct CanonSearch {
    const Poset* p;
    int n;
    std::vector<int> perm;
    std::vector<bool> used;

    // bits of the identity labeling at depth r: lt[r][c], lt[c][r] for c < r
    bool smaller_exists(int depth) {
        if (depth == n) return false;
        for (int x = 0; x < n; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            int cmp = 0; // -1 smaller, 0 equal, +1 larger
            for (int c = 0; c < depth && cmp == 0; ++c) {
                int cand = p->less(x, perm[static_cast<std::size_t>(c)]) ? 1 : 0;
                int ident = p->less(depth, c) ? 1 : 0;
                if (cand != ident) cmp = cand < ident ? -1 : 1;
                if (cmp == 0) {
                    cand = p->less(perm[static_cast<std::size_t>(c)], x) ? 1 : 0;
                    ident = p->less(c, depth) ? 1 : 0;
                    if (cand != ident) cmp = cand < ident ? -1 : 1;
                }
            }
            if (cmp > 0) continue;
            if (cmp < 0) return true;
            used[static_cast<std::size_t>(x)] = true;
            perm[static_cast<std::size_t>(depth)] = x;
            bool found = smaller_exists(depth + 1);
            used[static_cast<std::size_t>(x)] = false;
            if (found) return true;
        }
        return false;
    }
};

} // namespace

bool is_canonical_form(const Poset& p) {
    CanonSearch cs;
    cs.p = &p;
    cs.n = p.size();
    cs.perm.assign(static_cast<std::size_t>(p.size()), -1);
    cs.used.assign(static_cast<std::size_t>(p.size()), false);
    return !cs.smaller_exists(0);
}

void enumerate_connected_posets(int n, bool dedup, const std::function<bool(const Poset&)>& visit) {
    check_n(n);
    Generator g(n, dedup, visit);
    g.run();
}

namespace {

// One unit of sweep work: the replayable choice prefix for the first
// few added elements.  Splitting near the top of the choice tree keeps
// shards coarse enough to amortize thread dispatch and fine enough to
// balance.
struct Shard {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> choices;
};

std::vector<Shard> make_shards(int n, int prefix_elems) {
    std::vector<Shard> shards;
    std::function<bool(const Poset&)> nop = [](const Poset&) { return true; };
    Generator g(n, false, nop);
    Shard cur;
    std::function<void(int)> build = [&](int depth) {
        if (depth == prefix_elems) {
            shards.push_back(cur);
            return;
        }
        g.for_each_choice([&](std::uint32_t d, std::uint32_t u) {
            cur.choices.emplace_back(d, u);
            g.push_choice(d, u);
            build(depth + 1);
            g.pop_choice();
            cur.choices.pop_back();
            return true;
        });
    };
    build(0);
    return shards;
}

struct ShardResult {
    PerNCounts counts;
    std::vector<SweepCounterexample> counterexamples;
};

// Runs `analyze` over every connected poset on n elements, sharded
// across up to `jobs` threads.  Results are merged in shard order, so
// the outcome is independent of the thread count.
template <typename Analyze>
ShardResult run_level(int n, bool dedup, int jobs, Analyze&& analyze) {
    int prefix = std::min(n - 1, 3);
    std::vector<Shard> shards = make_shards(n, prefix);
    std::vector<ShardResult> results(shards.size());

    auto work = [&](std::size_t s) {
        ShardResult& out = results[s];
        std::function<bool(const Poset&)> visit = [&](const Poset& p) {
            analyze(p, out);
            return true;
        };
        Generator g(n, dedup, visit);
        for (auto [d, u] : shards[s].choices) g.push_choice(d, u);
        g.run();
    };

    if (jobs <= 1) {
        for (std::size_t s = 0; s < shards.size(); ++s) work(s);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), shards.size());
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t s = next.fetch_add(1); s < shards.size(); s = next.fetch_add(1))
                    work(s);
            });
        for (auto& th : pool) th.join();
    }

    ShardResult merged;
    for (const ShardResult& r : results) {
        merged.counts.total += r.counts.total;
        merged.counts.gorenstein += r.counts.gorenstein;
        merged.counts.q_gorenstein_only += r.counts.q_gorenstein_only;
        merged.counts.not_q_gorenstein += r.counts.not_q_gorenstein;
        merged.counts.crepant += r.counts.crepant;
        merged.counterexamples.insert(merged.counterexamples.end(), r.counterexamples.begin(),
                                      r.counterexamples.end());
    }
    return merged;
}

void sort_counterexamples(std::vector<SweepCounterexample>& ces) {
    std::sort(ces.begin(), ces.end(), [](const SweepCounterexample& a, const SweepCounterexample& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.relations != b.relations) return a.relations < b.relations;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.detail < b.detail;
    });
}

void tally(const GorensteinCertificate& cert, PerNCounts& c) {
    ++c.total;
    switch (cert.verdict) {
    case Verdict::Gorenstein: ++c.gorenstein; break;
    case Verdict::QGorensteinOnly: ++c.q_gorenstein_only; break;
    case Verdict::NotQGorenstein: ++c.not_q_gorenstein; break;
    }
    if (cert.crepant) ++c.crepant;
}

template <typename Analyze>
SweepReport run_sweep(std::string mode, int max_n, int jobs, bool dedup, Analyze&& analyze) {
    check_n(max_n);
    SweepReport rep;
    rep.mode = std::move(mode);
    rep.max_n = max_n;
    rep.dedup = dedup;
    for (int n = 2; n <= max_n; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        ShardResult res = run_level(n, dedup, jobs, analyze);
        auto t1 = std::chrono::steady_clock::now();
        rep.per_n[n] = res.counts;
        rep.counterexamples.insert(rep.counterexamples.end(), res.counterexamples.begin(),
                                   res.counterexamples.end());
        rep.wall_seconds[n] = std::chrono::duration<double>(t1 - t0).count();
    }
    sort_counterexamples(rep.counterexamples);
    return rep;
}

SweepCounterexample make_ce(const Poset& p, std::string kind, std::string detail) {
    return {p.size(), p.relations(), std::move(kind), std::move(detail)};
}

std::string verdict_word(Verdict v) {
    switch (v) {
    case Verdict::Gorenstein: return "gorenstein";
    case Verdict::QGorensteinOnly: return "q_gorenstein_only";
    default: return "not_q_gorenstein";
    }
}

} // namespace

SweepReport verify_conjecture(int max_n, int jobs, bool dedup) {
    return run_sweep("verify_conjecture", max_n, jobs, dedup, [](const Poset& p, ShardResult& out) {
        GorensteinCertificate cert = gorenstein_status(p);
        tally(cert, out.counts);
        if (cert.verdict == Verdict::QGorensteinOnly)
            out.counterexamples.push_back(
                make_ce(p, "q_gorenstein_only", "index " + to_string(*cert.index)));
    });
}

SweepReport cross_validate(int max_n, int jobs, bool dedup) {
    return run_sweep("cross_validate", max_n, jobs, dedup, [](const Poset& p, ShardResult& out) {
        GorensteinCertificate oracle = gorenstein_status(p);
        tally(oracle, out.counts);

        if (oracle.verdict == Verdict::QGorensteinOnly)
            out.counterexamples.push_back(
                make_ce(p, "q_gorenstein_only", "index " + to_string(*oracle.index)));

        auto [has_min, has_max] = p.bounds();
        if (has_min || has_max) {
            GorensteinCertificate fast = decide_fast(p);
            if (fast.verdict != oracle.verdict)
                out.counterexamples.push_back(make_ce(p, "fast_vs_oracle",
                                                      verdict_word(fast.verdict) + " vs " +
                                                          verdict_word(oracle.verdict)));
            else if (fast.gorenstein() && fast.labeling->phi != oracle.labeling->phi)
                out.counterexamples.push_back(make_ce(p, "fast_vs_oracle", "labelings differ"));
        }

        GorensteinCertificate blocks = status_via_blocks(p);
        if (blocks.verdict != oracle.verdict)
            out.counterexamples.push_back(make_ce(p, "blocks_vs_oracle",
                                                  verdict_word(blocks.verdict) + " vs " +
                                                      verdict_word(oracle.verdict)));
        else if (blocks.q_gorenstein() &&
                 (*blocks.index != *oracle.index || blocks.labeling->phi != oracle.labeling->phi))
            out.counterexamples.push_back(make_ce(p, "blocks_vs_oracle", "index or labeling differs"));

        GorensteinCertificate dual_cert = gorenstein_status(p.dual());
        bool dual_ok = dual_cert.verdict == oracle.verdict;
        if (dual_ok && oracle.q_gorenstein()) {
            dual_ok = *dual_cert.index == *oracle.index &&
                      dual_cert.labeling->phi == oracle.labeling->negated().phi;
        }
        if (!dual_ok)
            out.counterexamples.push_back(make_ce(p, "dual_invariance",
                                                  verdict_word(dual_cert.verdict) + " vs " +
                                                      verdict_word(oracle.verdict)));

        CrepantResult cr = crepant_status(p);
        if (cr.crepant != p.is_bounded() || cr.crepant != oracle.crepant)
            out.counterexamples.push_back(make_ce(p, "crepant_vs_bounded", ""));

        if (is_smooth(p) && oracle.verdict != Verdict::Gorenstein)
            out.counterexamples.push_back(make_ce(p, "smooth_implies_gorenstein",
                                                  verdict_word(oracle.verdict)));
    });
}

} // namespace braidcone
