#include "braidcone/fastpath.hpp"

#include "braidcone/gorenstein.hpp"

#include <algorithm>
#include <string>

namespace braidcone {

ElemSet m_set(const Poset& p) {
    ElemSet minimal = p.minimals();
    ElemSet m;
    for (int x = 0; x < p.size(); ++x) {
        ElemSet covered;
        for (auto [a, b] : p.covers())
            if (b == x) covered.set(a);
        if (covered.is_subset_of(minimal)) m.set(x);
    }
    return m;
}

MForest m_forest_check(const Poset& p) {
    ElemSet m = m_set(p);
    MForest f;
    ElemSet remaining = m;
    while (!remaining.empty()) {
        ElemSet comp = ElemSet::single(remaining.lowest());
        ElemSet frontier = comp;
        while (!frontier.empty()) {
            ElemSet next;
            frontier.for_each([&](int v) { next |= p.hasse_adj(v); });
            next &= remaining;
            next = next - comp;
            comp |= next;
            frontier = next;
        }
        f.trees.push_back(comp);
        remaining = remaining - comp;
    }
    int edges = 0;
    for (auto [a, b] : p.covers())
        if (m.test(a) && m.test(b)) ++edges;
    f.acyclic = edges == m.count() - static_cast<int>(f.trees.size());
    return f;
}

QuotientPoset tree_quotient(const Poset& p) {
    MForest f = m_forest_check(p);
    if (!f.acyclic) throw NotAcyclicError("M_P contains a cycle; tree relation undefined");

    ElemSet m = m_set(p);
    std::vector<int> back_map(static_cast<std::size_t>(p.size()), -1);

    // Classes ordered by smallest member: trees and singletons merged.
    std::vector<ElemSet> classes;
    for (const ElemSet& t : f.trees) classes.push_back(t);
    for (int x = 0; x < p.size(); ++x)
        if (!m.test(x)) classes.push_back(ElemSet::single(x));
    std::sort(classes.begin(), classes.end(),
              [](const ElemSet& a, const ElemSet& b) { return a.lowest() < b.lowest(); });

    int k = static_cast<int>(classes.size());
    if (k < 2)
        throw TooSmallError("tree-relation quotient collapses the poset to a single class");
    for (int c = 0; c < k; ++c)
        classes[static_cast<std::size_t>(c)].for_each([&](int x) { back_map[static_cast<std::size_t>(x)] = c; });

    // X < Y iff some x in X lies below some y in Y.
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    for (int x = 0; x < p.size(); ++x) {
        int cx = back_map[static_cast<std::size_t>(x)];
        p.up(x).for_each([&](int y) {
            int cy = back_map[static_cast<std::size_t>(y)];
            if (cx != cy) lt[static_cast<std::size_t>(cx)][static_cast<std::size_t>(cy)] = true;
        });
    }

    // The defining relation is already a strict order when M_P is
    // acyclic; re-check rather than closing over it.
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && lt[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                throw QuotientNotPosetError("tree-relation quotient is not antisymmetric");
            if (!lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = 0; c < k; ++c)
                if (lt[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] && !lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                    throw QuotientNotPosetError("tree-relation quotient is not transitive");
        }

    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) rel.emplace_back(a, b);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (const ElemSet& cls : classes) {
        if (cls.count() == 1) {
            names.push_back(p.name_of(cls.lowest()));
        } else {
            std::string s = "{";
            bool first = true;
            cls.for_each([&](int x) {
                if (!first) s += ",";
                s += p.name_of(x);
                first = false;
            });
            s += "}";
            names.push_back(std::move(s));
        }
    }

    return QuotientPoset{std::move(classes), Poset::from_relations(k, rel, std::move(names)),
                         std::move(back_map)};
}

std::optional<TdcWitness> tree_downset_condition(const Poset& p) {
    if (p.max_element() < 0) throw NoMaxError("tree downset condition needs a maximum element");
    MForest f = m_forest_check(p);
    if (!f.acyclic) throw NotAcyclicError("M_P contains a cycle");

    ElemSet m = m_set(p);
    int k = static_cast<int>(f.trees.size());
    std::vector<int> outside = m.complement_in(p.size()).to_vector();
    int no = static_cast<int>(outside.size());

    std::optional<TdcWitness> found;

    // Combinations of `outside` in size-then-lexicographic order.
    std::vector<int> idx;
    auto check_s = [&](const ElemSet& s) -> bool { // true = violation found
        ElemSet ds = downset_of(p, s).members;
        std::vector<int> meeting;
        for (int t = 0; t < k; ++t)
            if (f.trees[static_cast<std::size_t>(t)].intersects(ds)) meeting.push_back(t);
        int mcount = static_cast<int>(meeting.size());
        for (int j = 0; j < mcount; ++j) {
            ElemSet gens = s;
            for (int i = 0; i < mcount; ++i)
                if (i != j) gens |= f.trees[static_cast<std::size_t>(meeting[static_cast<std::size_t>(i)])];
            ElemSet a = downset_of(p, gens).members;
            if (!is_connected_subset(p, a)) continue;
            int cc = component_count(p, a & m);
            if (cc != mcount) {
                found = TdcWitness{s, j, f.trees[static_cast<std::size_t>(meeting[static_cast<std::size_t>(j)])], a, mcount, cc};
                return true;
            }
        }
        return false;
    };

    for (int size = 1; size <= k && !found; ++size) {
        if (size > no) break;
        idx.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            ElemSet s;
            for (int i : idx) s.set(outside[static_cast<std::size_t>(i)]);
            if (check_s(s)) return found;
            // next combination, lexicographic
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == no - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return found;
}

Labeling mobius_labeling(const Poset& p) {
    int top = p.max_element();
    if (top < 0) throw NoMaxError("Moebius labeling needs a maximum element");
    MobiusTable t = mobius_hat(p);
    Labeling l;
    l.r = 1;
    l.phi = std::move(t.mu);
    l.phi[static_cast<std::size_t>(top)] += 1;
    return l;
}

namespace {

struct CycleSearch {
    const Poset* p;
    ElemSet m;
    std::vector<bool> visited;
    std::vector<int> path;
    std::vector<std::pair<int, int>> cycle;

    bool dfs(int u, int parent) {
        visited[static_cast<std::size_t>(u)] = true;
        path.push_back(u);
        for (int v : (p->hasse_adj(u) & m).to_vector()) {
            if (v == parent) continue;
            if (visited[static_cast<std::size_t>(v)]) {
                auto it = std::find(path.begin(), path.end(), v);
                if (it != path.end()) {
                    for (auto jt = it; jt + 1 != path.end(); ++jt) cycle.emplace_back(*jt, *(jt + 1));
                    cycle.emplace_back(u, v);
                    for (auto& e : cycle)
                        if (e.first > e.second) std::swap(e.first, e.second);
                    std::sort(cycle.begin(), cycle.end());
                    return true;
                }
                continue;
            }
            if (dfs(v, u)) return true;
        }
        path.pop_back();
        return false;
    }
};

// A cycle in the Hasse diagram restricted to `m`, as a sorted edge list.
std::vector<std::pair<int, int>> find_m_cycle(const Poset& p, const ElemSet& m) {
    CycleSearch cs;
    cs.p = &p;
    cs.m = m;
    cs.visited.assign(static_cast<std::size_t>(p.size()), false);
    for (int seed : m.to_vector()) {
        if (cs.visited[static_cast<std::size_t>(seed)]) continue;
        if (cs.dfs(seed, -1)) return cs.cycle;
    }
    // Reaching here with an acyclic subgraph would be a caller bug.
    return {};
}

} // namespace

GorensteinCertificate decide_fast(const Poset& p) {
    auto [has_min, has_max] = p.bounds();
    if (!has_min && !has_max)
        throw NotApplicableError("iterative decision needs a minimum or maximum element");

    if (has_min && has_max) {
        GorensteinCertificate cert;
        cert.method = Method::Bounded;
        cert.verdict = Verdict::Gorenstein;
        cert.index = 1;
        cert.labeling = bounded_labeling(p);
        cert.crepant = true;
        return cert;
    }

    const bool dualized = !has_max;
    Poset q = dualized ? p.dual() : p;

    std::vector<ElemSet> stage_classes;
    stage_classes.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) stage_classes.push_back(ElemSet::single(i));

    GorensteinCertificate cert;
    cert.method = Method::Fast;

    for (int iter = 0;; ++iter) {
        if (iter > p.size())
            throw InternalError("quotient iteration failed to terminate");
        if (q.length() <= 1) {
            cert.verdict = Verdict::Gorenstein;
            break;
        }
        MForest f = m_forest_check(q);
        if (!f.acyclic) {
            cert.verdict = Verdict::NotQGorenstein;
            cert.witness = MSetCycleWitness{{iter, dualized, stage_classes, q.covers()},
                                            find_m_cycle(q, m_set(q))};
            cert.crepant = false;
            return cert;
        }
        if (auto w = tree_downset_condition(q)) {
            cert.verdict = Verdict::NotQGorenstein;
            cert.witness = TdcViolationWitness{{iter, dualized, stage_classes, q.covers()}, *w};
            cert.crepant = false;
            return cert;
        }
        QuotientPoset qp = tree_quotient(q);
        std::vector<ElemSet> next;
        next.reserve(qp.classes.size());
        for (const ElemSet& cls : qp.classes) {
            ElemSet flat;
            cls.for_each([&](int x) { flat |= stage_classes[static_cast<std::size_t>(x)]; });
            next.push_back(flat);
        }
        stage_classes = std::move(next);
        q = std::move(qp.order);
    }

    // Yes-instances with a maximum have the Moebius labeling, index 1;
    // Q-Gorenstein and Gorenstein coincide on this input class.
    Labeling l = mobius_labeling(dualized ? p.dual() : p);
    if (dualized) l = l.negated();

    if (p.size() <= 20 && !verify_labeling(p, l))
        throw InternalError("fast-path labeling failed independent verification");

    cert.verdict = Verdict::Gorenstein;
    cert.index = 1;
    cert.labeling = std::move(l);
    cert.crepant = p.is_bounded();
    return cert;
}

} // namespace braidcone
