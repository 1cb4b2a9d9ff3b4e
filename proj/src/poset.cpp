#include "braidcone/poset.hpp"

#include <algorithm>
#include <numeric>

namespace braidcone {

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> pairs,
                            std::vector<std::string> names) {
    if (n < 2) throw TooSmallError("poset needs at least 2 elements, got " + std::to_string(n));
    if (n > ElemSet::max_elements)
        throw InputError("poset has " + std::to_string(n) + " elements, build limit is " +
                         std::to_string(ElemSet::max_elements));
    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw InputError("name list length does not match element count");

    Poset p;
    p.n_ = n;
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    p.names_ = std::move(names);

    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw InputError("relation references an element outside 1.." + std::to_string(n));
        if (i == j)
            throw CycleError("element " + p.name_of(i) + " related to itself");
        p.up_[i].set(j);
    }

    // Warshall closure on the bitset rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];

    for (int i = 0; i < n; ++i) {
        if (p.up_[i].test(i))
            throw CycleError("relation closure contains a cycle through " + p.name_of(i));
        p.up_[i].for_each([&](int j) { p.down_[j].set(i); });
    }

    p.derive_covers_and_adj();

    if (component_count(p, ElemSet::full(n)) != 1)
        throw DisconnectedError("Hasse diagram is not connected");

    return p;
}

void Poset::derive_covers_and_adj() {
    covers_.clear();
    adj_.assign(n_, {});
    for (int i = 0; i < n_; ++i) {
        up_[i].for_each([&](int j) {
            // i covered by j iff nothing lies strictly between.
            if (!up_[i].intersects(down_[j])) {
                covers_.emplace_back(i, j);
                adj_[i].set(j);
                adj_[j].set(i);
            }
        });
    }
    std::sort(covers_.begin(), covers_.end());
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < n_; ++i) up_[i].for_each([&](int j) { r.emplace_back(i, j); });
    std::sort(r.begin(), r.end());
    return r;
}

ElemSet Poset::minimals() const {
    ElemSet s;
    for (int i = 0; i < n_; ++i)
        if (down_[i].empty()) s.set(i);
    return s;
}

ElemSet Poset::maximals() const {
    ElemSet s;
    for (int i = 0; i < n_; ++i)
        if (up_[i].empty()) s.set(i);
    return s;
}

std::pair<bool, bool> Poset::bounds() const {
    return {minimals().count() == 1, maximals().count() == 1};
}

bool Poset::is_bounded() const {
    auto [lo, hi] = bounds();
    return lo && hi;
}

int Poset::min_element() const {
    ElemSet m = minimals();
    return m.count() == 1 ? m.lowest() : -1;
}

int Poset::max_element() const {
    ElemSet m = maximals();
    return m.count() == 1 ? m.lowest() : -1;
}

int Poset::length() const {
    // Longest chain ending at each element; down-sets give a valid
    // processing order (smaller strict down-set first).
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = down_[a].count(), cb = down_[b].count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<int> height(static_cast<std::size_t>(n_), 0);
    int best = 0;
    for (int x : order) {
        int h = 0;
        down_[x].for_each([&](int y) { h = std::max(h, height[y] + 1); });
        height[x] = h;
        best = std::max(best, h);
    }
    return best;
}

Poset Poset::dual() const {
    Poset d;
    d.n_ = n_;
    d.up_ = down_;
    d.down_ = up_;
    d.names_ = names_;
    d.adj_ = adj_;
    d.covers_.reserve(covers_.size());
    for (auto [i, j] : covers_) d.covers_.emplace_back(j, i);
    std::sort(d.covers_.begin(), d.covers_.end());
    return d;
}

int component_count(const Poset& p, const ElemSet& a) {
    int cc = 0;
    ElemSet remaining = a;
    while (!remaining.empty()) {
        ++cc;
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
        remaining = remaining - comp;
    }
    return cc;
}

bool is_connected_subset(const Poset& p, const ElemSet& a) {
    return component_count(p, a) == 1;
}

int dimension(const Poset& p, const ElemSet& a) {
    return component_count(p, a) + component_count(p, a.complement_in(p.size())) - 1;
}

namespace {

// Elements are decided from index n-1 down to 0, exclude branch first,
// so completed sets appear in ascending bitset order.  A pair constraint
// is checked when its lower-indexed endpoint is decided.
void upset_rec(const Poset& p, int i, ElemSet cur, const std::vector<ElemSet>& decided_mask,
               const std::function<bool(const ElemSet&)>& visit, bool& keep_going) {
    if (!keep_going) return;
    if (i < 0) {
        keep_going = visit(cur);
        return;
    }
    // Excluding i forces everything below i out; the decided part of
    // down(i) must already be out.
    if (!p.down(i).intersects(cur)) upset_rec(p, i - 1, cur, decided_mask, visit, keep_going);
    if (!keep_going) return;
    // Including i forces everything above i in.
    if ((p.up(i) & decided_mask[i]).is_subset_of(cur)) {
        cur.set(i);
        upset_rec(p, i - 1, cur, decided_mask, visit, keep_going);
    }
}

} // namespace

void for_each_upset(const Poset& p, const std::function<bool(const ElemSet&)>& visit) {
    int n = p.size();
    std::vector<ElemSet> decided_mask(static_cast<std::size_t>(n));
    ElemSet all = ElemSet::full(n);
    for (int i = 0; i < n; ++i) {
        ElemSet below = ElemSet::full(i + 1);
        decided_mask[i] = all - below; // indices > i
    }
    bool keep_going = true;
    upset_rec(p, n - 1, {}, decided_mask, visit, keep_going);
}

std::vector<SubsetWithDim> upsets(const Poset& p) {
    std::vector<SubsetWithDim> out;
    for_each_upset(p, [&](const ElemSet& a) {
        out.push_back({a, SetKind::Upset, dimension(p, a)});
        return true;
    });
    return out;
}

SubsetWithDim downset_of(const Poset& p, const ElemSet& s) {
    ElemSet d = s;
    s.for_each([&](int i) { d |= p.down(i); });
    return {d, SetKind::Downset, dimension(p, d)};
}

bool is_upset(const Poset& p, const ElemSet& a) {
    bool ok = true;
    a.for_each([&](int i) { ok = ok && p.up(i).is_subset_of(a); });
    return ok;
}

bool is_downset(const Poset& p, const ElemSet& a) {
    bool ok = true;
    a.for_each([&](int i) { ok = ok && p.down(i).is_subset_of(a); });
    return ok;
}

MobiusTable mobius_hat(const Poset& p) {
    int n = p.size();
    // Process in a linear extension; mu(0-hat) = 1 seeds the recursion
    //   sum_{y <= x in P-hat} mu(y) = [x = 0-hat].
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = p.down(a).count(), cb = p.down(b).count();
        return ca != cb ? ca < cb : a < b;
    });
    MobiusTable t;
    t.mu.assign(static_cast<std::size_t>(n), Int(0));
    for (int x : order) {
        Int below = t.mu_hat0;
        p.down(x).for_each([&](int y) { below += t.mu[y]; });
        t.mu[x] = -below;
    }
    return t;
}

namespace {

struct BlockCutState {
    const Poset* p;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<ElemSet> blocks;
    ElemSet cuts;
    int timer = 0;

    void pop_block(std::pair<int, int> until) {
        ElemSet b;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            b.set(e.first);
            b.set(e.second);
            if (e == until) break;
        }
        blocks.push_back(b);
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        auto nbrs = p->hasse_adj(u).to_vector();
        for (int v : nbrs) {
            if (v == parent) {
                parent = -1; // skip the tree edge once; multi-edges cannot occur
                continue;
            }
            if (disc[v] == 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (disc[u] > 1 || children > 1) cuts.set(u);
                    pop_block({u, v});
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

} // namespace

BlockCutTree block_cut_tree(const Poset& p) {
    int n = p.size();
    BlockCutState st;
    st.p = &p;
    st.disc.assign(static_cast<std::size_t>(n), 0);
    st.low.assign(static_cast<std::size_t>(n), 0);
    st.dfs(0, -1);

    BlockCutTree t;
    t.blocks = std::move(st.blocks);
    std::sort(t.blocks.begin(), t.blocks.end());
    t.cut_vertices = st.cuts;
    for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
        t.cut_vertices.for_each([&](int v) {
            if (t.blocks[static_cast<std::size_t>(b)].test(v)) t.tree_edges.emplace_back(b, v);
        });
    return t;
}

InducedPoset induced(const Poset& p, const ElemSet& members) {
    std::vector<int> to_orig = members.to_vector();
    int m = static_cast<int>(to_orig.size());
    std::vector<int> to_new(static_cast<std::size_t>(p.size()), -1);
    for (int i = 0; i < m; ++i) to_new[static_cast<std::size_t>(to_orig[static_cast<std::size_t>(i)])] = i;

    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < m; ++i) {
        (p.up(to_orig[static_cast<std::size_t>(i)]) & members).for_each([&](int j) {
            rel.emplace_back(i, to_new[static_cast<std::size_t>(j)]);
        });
    }
    std::vector<std::string> names;
    if (p.has_names()) {
        names.reserve(static_cast<std::size_t>(m));
        for (int i : to_orig) names.push_back(p.names()[static_cast<std::size_t>(i)]);
    } else {
        for (int i : to_orig) names.push_back(std::to_string(i + 1));
    }
    return {Poset::from_relations(m, rel, std::move(names)), std::move(to_orig)};
}

GluedPoset glue_posets(const Poset& p1, int x1, const Poset& p2, int x2) {
    int n1 = p1.size(), n2 = p2.size();
    if (x1 < 0 || x1 >= n1 || x2 < 0 || x2 >= n2)
        throw InputError("glue point outside the poset");

    std::vector<int> map1(static_cast<std::size_t>(n1)), map2(static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i) map1[static_cast<std::size_t>(i)] = i;
    int next = n1;
    for (int i = 0; i < n2; ++i)
        map2[static_cast<std::size_t>(i)] = (i == x2) ? x1 : next++;

    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : p1.covers()) rel.emplace_back(map1[static_cast<std::size_t>(a)], map1[static_cast<std::size_t>(b)]);
    for (auto [a, b] : p2.covers()) rel.emplace_back(map2[static_cast<std::size_t>(a)], map2[static_cast<std::size_t>(b)]);

    std::vector<std::string> names;
    if (p1.has_names() || p2.has_names()) {
        names.assign(static_cast<std::size_t>(n1 + n2 - 1), {});
        for (int i = 0; i < n1; ++i) names[static_cast<std::size_t>(map1[static_cast<std::size_t>(i)])] = p1.name_of(i);
        for (int i = 0; i < n2; ++i) {
            if (i == x2) {
                if (p2.name_of(x2) != p1.name_of(x1))
                    names[static_cast<std::size_t>(x1)] = p1.name_of(x1) + "~" + p2.name_of(x2);
            } else {
                names[static_cast<std::size_t>(map2[static_cast<std::size_t>(i)])] = p2.name_of(i);
            }
        }
    }

    return {Poset::from_relations(n1 + n2 - 1, rel, std::move(names)), std::move(map1), std::move(map2)};
}

} // namespace braidcone
