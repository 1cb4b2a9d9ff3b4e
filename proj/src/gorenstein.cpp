#include "braidcone/gorenstein.hpp"

#include <algorithm>
#include <deque>

namespace braidcone {

namespace {

enum class SolveKind { Unique, Inconsistent, Underdetermined };

struct SolveOutcome {
    SolveKind kind;
    std::vector<Rat> solution;  // Unique only
    int conflict_a = -1;        // Inconsistent: original constraint ids
    int conflict_b = -1;
};

// Gaussian elimination over the rationals, pivoting on the first row
// with a nonzero entry.  Each working row remembers the original
// constraint it started as and the last pivot row combined into it, so
// an inconsistent row can be reported as a pair of constraints.
SolveOutcome solve_system(int n, const std::vector<std::vector<Rat>>& constraints) {
    int rows = static_cast<int>(constraints.size());
    std::vector<std::vector<Rat>> m = constraints;
    std::vector<int> orig(static_cast<std::size_t>(rows)), last_src(static_cast<std::size_t>(rows), -1);
    for (int i = 0; i < rows; ++i) orig[static_cast<std::size_t>(i)] = i;

    auto coeffs_zero = [&](int r) {
        for (int c = 0; c < n; ++c)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) return false;
        return true;
    };

    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
        std::swap(orig[static_cast<std::size_t>(piv)], orig[static_cast<std::size_t>(rank)]);
        std::swap(last_src[static_cast<std::size_t>(piv)], last_src[static_cast<std::size_t>(rank)]);
        for (int r = rank + 1; r < rows; ++r) {
            Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                    m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c <= n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            last_src[static_cast<std::size_t>(r)] = orig[static_cast<std::size_t>(rank)];
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] != 0 && coeffs_zero(r)) {
                SolveOutcome out;
                out.kind = SolveKind::Inconsistent;
                out.conflict_a = orig[static_cast<std::size_t>(r)];
                out.conflict_b = last_src[static_cast<std::size_t>(r)];
                return out;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (int r = rank; r < rows; ++r) {
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] != 0) {
            SolveOutcome out;
            out.kind = SolveKind::Inconsistent;
            out.conflict_a = orig[static_cast<std::size_t>(r)];
            out.conflict_b = last_src[static_cast<std::size_t>(r)] >= 0 ? last_src[static_cast<std::size_t>(r)]
                                                                        : orig[static_cast<std::size_t>(r)];
            return out;
        }
    }

    if (rank < n) return {SolveKind::Underdetermined, {}, -1, -1};

    std::vector<Rat> x(static_cast<std::size_t>(n), Rat(0));
    for (int r = rank - 1; r >= 0; --r) {
        int col = pivot_col[static_cast<std::size_t>(r)];
        Rat s = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
        for (int c = col + 1; c < n; ++c)
            s -= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(col)] = s / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    }
    return {SolveKind::Unique, std::move(x), -1, -1};
}

// Constraint 0 is the sum-to-zero row (the relation e_[n] = 0 in N);
// constraints 1..k are the targets.
std::vector<std::vector<Rat>> build_rows(int n, std::span<const ElemSet> targets) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(targets.size() + 1);
    std::vector<Rat> sum_zero(static_cast<std::size_t>(n + 1), Rat(1));
    sum_zero[static_cast<std::size_t>(n)] = 0;
    rows.push_back(std::move(sum_zero));
    for (const ElemSet& a : targets) {
        std::vector<Rat> row(static_cast<std::size_t>(n + 1), Rat(0));
        a.for_each([&](int i) { row[static_cast<std::size_t>(i)] = 1; });
        row[static_cast<std::size_t>(n)] = 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

ElemSet constraint_set(const Poset& p, std::span<const ElemSet> targets, int id) {
    return id == 0 ? ElemSet::full(p.size()) : targets[static_cast<std::size_t>(id - 1)];
}

} // namespace

std::optional<std::vector<Rat>> solve_labeling(const Poset& p, std::span<const ElemSet> targets) {
    for (const ElemSet& a : targets)
        if (!is_upset(p, a)) throw NotUpsetError("solve_labeling target is not an upset");
    SolveOutcome out = solve_system(p.size(), build_rows(p.size(), targets));
    switch (out.kind) {
    case SolveKind::Unique:
        return std::move(out.solution);
    case SolveKind::Inconsistent:
        return std::nullopt;
    default:
        throw InternalError("labeling system is underdetermined; targets must span the lattice");
    }
}

bool verify_labeling(const Poset& p, const Labeling& l) {
    if (static_cast<int>(l.phi.size()) != p.size() || l.r <= 0) return false;
    Int total = 0;
    for (const Int& v : l.phi) total += v;
    if (total != 0) return false;
    bool ok = true;
    for_each_upset(p, [&](const ElemSet& a) {
        if (dimension(p, a) == 1) {
            Int s = 0;
            a.for_each([&](int i) { s += l.phi[static_cast<std::size_t>(i)]; });
            if (s != l.r) ok = false;
        }
        return ok;
    });
    return ok;
}

bool verify_chamber_labeling(const Poset& p, const Labeling& l) {
    if (static_cast<int>(l.phi.size()) != p.size() || l.r <= 0) return false;
    Int total = 0;
    for (const Int& v : l.phi) total += v;
    if (total != 0) return false;
    bool ok = true;
    for_each_upset(p, [&](const ElemSet& a) {
        if (dimension(p, a) >= 1) {
            Int s = 0;
            a.for_each([&](int i) { s += l.phi[static_cast<std::size_t>(i)]; });
            if (s != l.r) ok = false;
        }
        return ok;
    });
    return ok;
}

GorensteinCertificate gorenstein_status(const Poset& p) {
    std::vector<ElemSet> rays;
    for_each_upset(p, [&](const ElemSet& a) {
        if (dimension(p, a) == 1) rays.push_back(a);
        return true;
    });

    GorensteinCertificate cert;
    cert.method = Method::Brute;

    SolveOutcome out = solve_system(p.size(), build_rows(p.size(), rays));
    if (out.kind == SolveKind::Inconsistent) {
        cert.verdict = Verdict::NotQGorenstein;
        cert.witness = InconsistentPairWitness{constraint_set(p, rays, out.conflict_a),
                                               constraint_set(p, rays, out.conflict_b)};
    } else if (out.kind == SolveKind::Underdetermined) {
        // The dimension-0 and dimension-1 constraint vectors have full
        // rank for every connected poset.
        throw InternalError("ray system unexpectedly underdetermined");
    } else {
        Int d = denominator_lcm(out.solution);
        Labeling l;
        l.r = d;
        l.phi.reserve(out.solution.size());
        for (const Rat& y : out.solution) l.phi.push_back(Int(y.get_num()) * (d / Int(y.get_den())));
        cert.index = d;
        cert.labeling = std::move(l);
        if (d == 1) {
            cert.verdict = Verdict::Gorenstein;
        } else {
            cert.verdict = Verdict::QGorensteinOnly;
            cert.witness = NonIntegralWitness{std::move(out.solution)};
        }
    }
    cert.crepant = p.is_bounded() && cert.verdict != Verdict::NotQGorenstein;
    return cert;
}

Labeling bounded_labeling(const Poset& p) {
    int lo = p.min_element(), hi = p.max_element();
    if (lo < 0 || hi < 0) throw InputError("poset is not bounded");
    Labeling l;
    l.r = 1;
    l.phi.assign(static_cast<std::size_t>(p.size()), Int(0));
    l.phi[static_cast<std::size_t>(lo)] = -1;
    l.phi[static_cast<std::size_t>(hi)] = 1;
    return l;
}

CrepantResult crepant_status(const Poset& p) {
    if (p.is_bounded()) {
        Labeling l = bounded_labeling(p);
        // Every proper nonempty upset contains the maximum and misses
        // the minimum, so this must check out; failure is a bug.
        if (!verify_chamber_labeling(p, l))
            throw InternalError("bounded labeling failed chamber verification");
        return {true, std::move(l), std::nullopt};
    }

    GorensteinCertificate cert = gorenstein_status(p);
    if (!cert.q_gorenstein()) return {false, std::nullopt, std::nullopt};

    // Q-Gorenstein but unbounded: the unique labeling must disagree with
    // some fan ray of dimension > 1.
    const Labeling& l = *cert.labeling;
    std::optional<ElemSet> bad, good;
    for_each_upset(p, [&](const ElemSet& a) {
        int d = dimension(p, a);
        if (d >= 1) {
            Int s = 0;
            a.for_each([&](int i) { s += l.phi[static_cast<std::size_t>(i)]; });
            if (s != l.r && !bad) bad = a;
            if (s == l.r && !good) good = a;
        }
        return !(bad && good);
    });
    if (!bad || !good) throw InternalError("no chamber violation found for an unbounded poset");
    return {false, std::nullopt, std::make_pair(*bad, *good)};
}

GluedLabeling glue_labelings(const Poset& p1, const Labeling& l1, int x1,
                             const Poset& p2, const Labeling& l2, int x2) {
    if (l1.r != l2.r)
        throw IndexMismatchError("cannot glue labelings with indices " + to_string(l1.r) + " and " +
                                 to_string(l2.r));
    GluedPoset g = glue_posets(p1, x1, p2, x2);
    Labeling l;
    l.r = l1.r;
    l.phi.assign(static_cast<std::size_t>(g.poset.size()), Int(0));
    for (int i = 0; i < p1.size(); ++i)
        l.phi[static_cast<std::size_t>(g.map_first[static_cast<std::size_t>(i)])] = l1.phi[static_cast<std::size_t>(i)];
    for (int i = 0; i < p2.size(); ++i)
        l.phi[static_cast<std::size_t>(g.map_second[static_cast<std::size_t>(i)])] += l2.phi[static_cast<std::size_t>(i)];
    return {std::move(g.poset), std::move(l), std::move(g.map_first), std::move(g.map_second)};
}

GorensteinCertificate status_via_blocks(const Poset& p) {
    BlockCutTree bct = block_cut_tree(p);
    int nblocks = static_cast<int>(bct.blocks.size());

    std::vector<InducedPoset> blocks;
    std::vector<GorensteinCertificate> certs;
    blocks.reserve(static_cast<std::size_t>(nblocks));
    for (int b = 0; b < nblocks; ++b) {
        blocks.push_back(induced(p, bct.blocks[static_cast<std::size_t>(b)]));
        GorensteinCertificate c = gorenstein_status(blocks.back().poset);
        if (c.verdict == Verdict::NotQGorenstein) {
            GorensteinCertificate cert;
            cert.method = Method::Blocks;
            cert.verdict = Verdict::NotQGorenstein;
            cert.crepant = false;
            // Map the failing block's witness back to original elements.
            auto& w = std::get<InconsistentPairWitness>(c.witness);
            auto remap = [&](const ElemSet& s) {
                ElemSet r;
                s.for_each([&](int i) { r.set(blocks.back().to_orig[static_cast<std::size_t>(i)]); });
                return r;
            };
            cert.witness = InconsistentPairWitness{remap(w.a), remap(w.b)};
            return cert;
        }
        certs.push_back(std::move(c));
    }

    // A block admits exactly the multiples of its own index, so the
    // least r feasible for all blocks simultaneously is the lcm.
    Int r = 1;
    for (const GorensteinCertificate& c : certs) r = int_lcm(r, *c.index);

    GorensteinCertificate cert;
    cert.method = Method::Blocks;
    cert.index = r;
    cert.verdict = r == 1 ? Verdict::Gorenstein : Verdict::QGorensteinOnly;

    // Rebuild the global labeling by gluing along the block-cut tree.
    std::vector<int> block_of_vertex(static_cast<std::size_t>(p.size()), -1);
    std::vector<std::vector<int>> blocks_at_cut(static_cast<std::size_t>(p.size()));
    for (auto [b, v] : bct.tree_edges) blocks_at_cut[static_cast<std::size_t>(v)].push_back(b);

    std::vector<bool> attached(static_cast<std::size_t>(nblocks), false);
    std::vector<int> acc_map(static_cast<std::size_t>(p.size()), -1);

    Poset acc = blocks[0].poset;
    Labeling acc_l = certs[0].labeling->scaled(r / *certs[0].index);
    for (int i = 0; i < acc.size(); ++i) acc_map[static_cast<std::size_t>(blocks[0].to_orig[static_cast<std::size_t>(i)])] = i;
    attached[0] = true;

    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int b = frontier.front();
        frontier.pop_front();
        for (int v : bct.blocks[static_cast<std::size_t>(b)].to_vector()) {
            if (!bct.cut_vertices.test(v)) continue;
            for (int nb : blocks_at_cut[static_cast<std::size_t>(v)]) {
                if (attached[static_cast<std::size_t>(nb)]) continue;
                attached[static_cast<std::size_t>(nb)] = true;
                const InducedPoset& bp = blocks[static_cast<std::size_t>(nb)];
                int local = -1;
                for (int i = 0; i < bp.poset.size(); ++i)
                    if (bp.to_orig[static_cast<std::size_t>(i)] == v) local = i;
                Labeling bl = certs[static_cast<std::size_t>(nb)].labeling->scaled(r / *certs[static_cast<std::size_t>(nb)].index);
                GluedLabeling g = glue_labelings(acc, acc_l, acc_map[static_cast<std::size_t>(v)],
                                                 bp.poset, bl, local);
                for (int orig = 0; orig < p.size(); ++orig)
                    if (acc_map[static_cast<std::size_t>(orig)] >= 0)
                        acc_map[static_cast<std::size_t>(orig)] = g.map_first[static_cast<std::size_t>(acc_map[static_cast<std::size_t>(orig)])];
                for (int i = 0; i < bp.poset.size(); ++i)
                    acc_map[static_cast<std::size_t>(bp.to_orig[static_cast<std::size_t>(i)])] = g.map_second[static_cast<std::size_t>(i)];
                acc = std::move(g.poset);
                acc_l = std::move(g.labeling);
                frontier.push_back(nb);
            }
        }
    }

    if (acc.size() != p.size()) throw InternalError("block gluing did not cover the poset");

    Labeling global;
    global.r = r;
    global.phi.assign(static_cast<std::size_t>(p.size()), Int(0));
    for (int i = 0; i < p.size(); ++i)
        global.phi[static_cast<std::size_t>(i)] = acc_l.phi[static_cast<std::size_t>(acc_map[static_cast<std::size_t>(i)])];

    if (cert.verdict == Verdict::QGorensteinOnly) {
        std::vector<Rat> y;
        y.reserve(global.phi.size());
        for (const Int& v : global.phi) {
            y.emplace_back(v, r);
            y.back().canonicalize();
        }
        cert.witness = NonIntegralWitness{std::move(y)};
    }
    cert.labeling = std::move(global);
    cert.crepant = p.is_bounded() && cert.verdict != Verdict::NotQGorenstein;
    return cert;
}

} // namespace braidcone
