#include "braidcone/enumerate.hpp"
#include "braidcone/fastpath.hpp"
#include "braidcone/gorenstein.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace braidcone;

namespace {

std::vector<long> phi_of(const Labeling& l) {
    std::vector<long> v;
    for (const Int& x : l.phi) v.push_back(x.get_si());
    return v;
}

// All downsets of p contained in the given set, as masks.
std::vector<ElemSet> downsets_within(const Poset& p, const ElemSet& within) {
    std::vector<ElemSet> out;
    int n = p.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ElemSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.set(i);
        if (s.is_subset_of(within) && is_downset(p, s)) out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("m_set") {
    // e covers b but also c and d, which are not minimal, so e is out
    CHECK(m_set(corpus::cc_ok6()) == ElemSet::of({0, 1, 2, 3}));
    CHECK(m_set(corpus::quotient_cycle8()) == ElemSet::of({0, 1, 2, 3, 4}));
    CHECK(m_set(corpus::vee3()) == ElemSet::full(3));
}

TEST_CASE("m_forest_check") {
    MForest f = m_forest_check(corpus::quotient_cycle8());
    CHECK(f.acyclic);
    CHECK(f.trees == std::vector<ElemSet>{ElemSet::of({0, 1, 3}), ElemSet::of({2, 4})});

    MForest chain = m_forest_check(corpus::chain(2));
    CHECK(chain.acyclic);
    CHECK(chain.trees == std::vector<ElemSet>{ElemSet::of({0, 1})});

    // after one quotient the M-graph contains a 4-cycle
    QuotientPoset q = tree_quotient(corpus::quotient_cycle8());
    CHECK(!m_forest_check(q.order).acyclic);
}

TEST_CASE("tree_quotient of the two-tree example") {
    QuotientPoset q = tree_quotient(corpus::quotient_cycle8());
    REQUIRE(q.order.size() == 5);
    CHECK(q.classes == std::vector<ElemSet>{ElemSet::of({0, 1, 3}), ElemSet::of({2, 4}),
                                            ElemSet::single(5), ElemSet::single(6),
                                            ElemSet::single(7)});
    // order: both tree classes under f and g, top above f and g
    CHECK(q.order.covers() ==
          std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(q.back_map == std::vector<int>{0, 0, 1, 0, 1, 2, 3, 4});
}

TEST_CASE("tree_quotient collapses the bounded diamond to a 2-chain") {
    QuotientPoset q = tree_quotient(corpus::diamond4());
    CHECK(q.order.size() == 2);
    CHECK(q.classes == std::vector<ElemSet>{ElemSet::of({0, 1, 2}), ElemSet::single(3)});
    CHECK(q.order.covers() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("tree_quotient requires an acyclic M and a non-degenerate quotient") {
    QuotientPoset q = tree_quotient(corpus::quotient_cycle8());
    CHECK_THROWS_AS(tree_quotient(q.order), NotAcyclicError);
    CHECK_THROWS_AS(tree_quotient(corpus::chain(2)), TooSmallError);
}

TEST_CASE("successive quotients shrink step by step") {
    Poset p = corpus::triple_quotient13();
    QuotientPoset q1 = tree_quotient(p);
    CHECK(q1.order.size() == 8);
    QuotientPoset q2 = tree_quotient(q1.order);
    CHECK(q2.order.size() == 4);
    CHECK(q2.order == corpus::diamond4());
    QuotientPoset q3 = tree_quotient(q2.order);
    CHECK(q3.order.size() == 2);

    // length drops by exactly one per quotient
    CHECK(q1.order.length() == p.length() - 1);
    CHECK(q2.order.length() == p.length() - 2);
    CHECK(q3.order.length() == p.length() - 3);

    // the tree count never increases along the way
    std::size_t k = m_forest_check(p).trees.size();
    for (const Poset* s : {&q1.order, &q2.order, &q3.order}) {
        std::size_t kq = m_forest_check(*s).trees.size();
        CHECK(kq <= k);
        k = kq;
    }
}

TEST_CASE("tree downset condition: violation at S = {g}") {
    auto w = tree_downset_condition(corpus::tdc_violation9());
    REQUIRE(w.has_value());
    CHECK(w->s == ElemSet::single(6));
    CHECK(w->a_j == ElemSet::of({0, 1, 2, 4, 6}));
    CHECK(w->expected_m == 1);
    CHECK(w->found_cc == 2);
    CHECK(w->excluded_tree == ElemSet::of({0, 1, 2, 3, 4}));
}

TEST_CASE("tree downset condition holds on the well-behaved examples") {
    CHECK(!tree_downset_condition(corpus::cc_ok6()).has_value());
    CHECK(!tree_downset_condition(corpus::diamond4()).has_value());
    CHECK(!tree_downset_condition(corpus::quotient_cycle8()).has_value());
}

TEST_CASE("tree downset condition preconditions") {
    CHECK_THROWS_AS(tree_downset_condition(corpus::three_regular8()), NoMaxError);
    QuotientPoset q = tree_quotient(corpus::quotient_cycle8());
    CHECK_THROWS_AS(tree_downset_condition(q.order), NotAcyclicError);
}

TEST_CASE("mobius_labeling candidates") {
    CHECK(phi_of(mobius_labeling(corpus::diamond4())) == std::vector<long>{-1, 0, 0, 1});
    CHECK(phi_of(mobius_labeling(corpus::chain(2))) == std::vector<long>{-1, 1});
    // candidate exists here even though the poset is not Gorenstein
    CHECK(phi_of(mobius_labeling(corpus::quotient_cycle8())) ==
          std::vector<long>{-1, -1, -1, 1, 0, 1, 1, 0});
    CHECK_THROWS_AS(mobius_labeling(corpus::three_regular8()), NoMaxError);
}

TEST_CASE("decide_fast on the corpus") {
    GorensteinCertificate d = decide_fast(corpus::diamond4());
    CHECK(d.verdict == Verdict::Gorenstein);
    CHECK(d.method == Method::Bounded);
    CHECK(d.crepant);
    CHECK(phi_of(*d.labeling) == std::vector<long>{-1, 0, 0, 1});

    GorensteinCertificate v = decide_fast(corpus::vee3());
    CHECK(v.verdict == Verdict::Gorenstein);
    CHECK(v.method == Method::Fast);
    CHECK(!v.crepant);
    CHECK(phi_of(*v.labeling) == std::vector<long>{-1, -1, 2});

    GorensteinCertificate q = decide_fast(corpus::quotient_cycle8());
    REQUIRE(q.verdict == Verdict::NotQGorenstein);
    REQUIRE(std::holds_alternative<MSetCycleWitness>(q.witness));
    const auto& mw = std::get<MSetCycleWitness>(q.witness);
    CHECK(mw.stage.iteration == 1);
    CHECK(mw.cycle_edges.size() == 4);

    GorensteinCertificate t = decide_fast(corpus::tdc_violation9());
    REQUIRE(t.verdict == Verdict::NotQGorenstein);
    REQUIRE(std::holds_alternative<TdcViolationWitness>(t.witness));
    const auto& tw = std::get<TdcViolationWitness>(t.witness);
    CHECK(tw.stage.iteration == 0);
    CHECK(tw.tdc.s == ElemSet::single(6));

    CHECK(decide_fast(corpus::triple_quotient13()).verdict == Verdict::Gorenstein);
    CHECK_THROWS_AS(decide_fast(corpus::three_regular8()), NotApplicableError);
}

TEST_CASE("decide_fast dualizes posets that only have a minimum") {
    Poset p = corpus::vee3().dual(); // one minimum, two maximals
    GorensteinCertificate c = decide_fast(p);
    CHECK(c.verdict == Verdict::Gorenstein);
    CHECK(phi_of(*c.labeling) == std::vector<long>{1, 1, -2});
    CHECK(verify_labeling(p, *c.labeling));

    GorensteinCertificate bad = decide_fast(corpus::tdc_violation9().dual());
    REQUIRE(bad.verdict == Verdict::NotQGorenstein);
    CHECK(std::holds_alternative<TdcViolationWitness>(bad.witness));
    CHECK(std::get<TdcViolationWitness>(bad.witness).stage.dualized);
}

TEST_CASE("fast path agrees with the oracle on everything applicable in the corpus") {
    for (const Poset& p :
         {corpus::diamond4(), corpus::vee3(), corpus::cc_ok6(), corpus::tdc_violation9(),
          corpus::quotient_cycle8(), corpus::triple_quotient13(), corpus::chain(6)}) {
        GorensteinCertificate fast = decide_fast(p);
        GorensteinCertificate oracle = gorenstein_status(p);
        CHECK(fast.verdict == oracle.verdict);
        if (fast.gorenstein()) CHECK(fast.labeling->phi == oracle.labeling->phi);
    }
}

TEST_CASE("Moebius sums over connected downsets of M equal edges minus vertices") {
    std::mt19937_64 rng(41);
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        Poset p = corpus::random_poset(rng, 2 + static_cast<int>(rng() % 9));
        MobiusTable tab = mobius_hat(p);
        ElemSet m = m_set(p);
        for (const ElemSet& c : downsets_within(p, m)) {
            if (c.empty() || !is_connected_subset(p, c)) continue;
            Int sum = 0;
            c.for_each([&](int x) { sum += tab.mu[static_cast<std::size_t>(x)]; });
            int edges = 0;
            for (auto [a, b] : p.covers())
                if (c.test(a) && c.test(b)) ++edges;
            CHECK(sum == edges - c.count());
            ++tested;
        }
    }
    CHECK(tested > 200);
}

TEST_CASE("quotient preserves Moebius values (singletons and class sums)") {
    // exhaustive over small posets with a maximum that pass both
    // preconditions and do not collapse to a point
    for (int n = 2; n <= 6; ++n) {
        enumerate_connected_posets(n, false, [&](const Poset& p) {
            if (p.max_element() < 0 || p.length() < 2) return true;
            if (!m_forest_check(p).acyclic) return true;
            if (tree_downset_condition(p).has_value()) return true;
            QuotientPoset q = tree_quotient(p);
            MobiusTable before = mobius_hat(p);
            MobiusTable after = mobius_hat(q.order);
            for (int cls = 0; cls < q.order.size(); ++cls) {
                Int sum = 0;
                q.classes[static_cast<std::size_t>(cls)].for_each(
                    [&](int x) { sum += before.mu[static_cast<std::size_t>(x)]; });
                REQUIRE(after.mu[static_cast<std::size_t>(cls)] == sum);
            }
            for (int x = 0; x < p.size(); ++x) {
                if (m_set(p).test(x)) continue;
                REQUIRE(before.mu[static_cast<std::size_t>(x)] ==
                        after.mu[static_cast<std::size_t>(q.back_map[static_cast<std::size_t>(x)])]);
            }
            return true;
        });
    }
}

TEST_CASE("decide_fast handles posets past the revalidation threshold") {
    // spider: three chains of length 7 joined under a common maximum,
    // 22 elements total -- past the threshold the fast path skips its
    // own upset re-check, so compare against the oracle explicitly
    std::vector<std::pair<int, int>> rel;
    for (int leg = 0; leg < 3; ++leg) {
        int base = 7 * leg;
        for (int i = 0; i + 1 < 7; ++i) rel.emplace_back(base + i, base + i + 1);
        rel.emplace_back(base + 6, 21);
    }
    Poset spider = Poset::from_relations(22, rel);
    REQUIRE(spider.size() > 20);
    GorensteinCertificate fast = decide_fast(spider);
    GorensteinCertificate oracle = gorenstein_status(spider);
    CHECK(fast.verdict == Verdict::Gorenstein);
    CHECK(oracle.verdict == Verdict::Gorenstein);
    CHECK(fast.labeling->phi == oracle.labeling->phi);
}

TEST_CASE("random cross-route agreement past the exhaustive range") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 120; ++t) {
        int n = 8 + static_cast<int>(rng() % 3);
        Poset base = corpus::random_poset(rng, n - 1, 0.25);
        // adjoin a maximum so the iterative route applies; dualize half
        // the time to exercise the minimum-only path
        std::vector<std::pair<int, int>> rel = base.relations();
        for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, n - 1);
        Poset p = Poset::from_relations(n, rel);
        if (rng() & 1) p = p.dual();

        GorensteinCertificate oracle = gorenstein_status(p);
        GorensteinCertificate fast = decide_fast(p);
        GorensteinCertificate blocks = status_via_blocks(p);
        REQUIRE(fast.verdict == oracle.verdict);
        REQUIRE(blocks.verdict == oracle.verdict);
        if (oracle.gorenstein()) {
            REQUIRE(fast.labeling->phi == oracle.labeling->phi);
            REQUIRE(blocks.labeling->phi == oracle.labeling->phi);
        }
    }
}

TEST_CASE("element capacity limit") {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < 70; ++i) rel.emplace_back(i, i + 1);
    if constexpr (ElemSet::max_elements >= 70) {
        Poset big = Poset::from_relations(70, rel);
        GorensteinCertificate c = decide_fast(big);
        CHECK(c.verdict == Verdict::Gorenstein);
        CHECK(c.crepant);
        CHECK(c.labeling->phi.front() == -1);
        CHECK(c.labeling->phi.back() == 1);
    } else {
        CHECK_THROWS_AS(Poset::from_relations(70, rel), InputError);
    }
}

TEST_CASE("Gorenstein instances with a maximum satisfy the cumulative-sum recursion") {
    for (const Poset& p : {corpus::vee3(), corpus::cc_ok6(), corpus::triple_quotient13()}) {
        GorensteinCertificate c = decide_fast(p);
        REQUIRE(c.verdict == Verdict::Gorenstein);
        int top = p.max_element();
        REQUIRE(top >= 0);
        for (int x = 0; x < p.size(); ++x) {
            Int s = c.labeling->phi[static_cast<std::size_t>(x)];
            p.down(x).for_each([&](int y) { s += c.labeling->phi[static_cast<std::size_t>(y)]; });
            CHECK(s == (x == top ? 0 : -1));
        }
    }
}
