#ifndef BRAIDCONE_CERTIFICATE_HPP
#define BRAIDCONE_CERTIFICATE_HPP

#include "braidcone/poset.hpp"

#include <optional>
#include <variant>

namespace braidcone {

/// An r-Gorenstein labeling: integers phi with sum 0 that sum to r on
/// every dimension-1 upset.  r is the index the labeling certifies.
struct Labeling {
    std::vector<Int> phi;
    Int r = 1;

    Labeling negated() const {
        Labeling l = *this;
        for (Int& v : l.phi) v = -v;
        return l;
    }

    Labeling scaled(const Int& m) const {
        Labeling l = *this;
        for (Int& v : l.phi) v *= m;
        l.r *= m;
        return l;
    }
};

/// Checks the defining constraints against independently enumerated
/// dimension-1 upsets.
bool verify_labeling(const Poset& p, const Labeling& l);

/// Same but against every upset of dimension >= 1 (chamber crepancy).
bool verify_chamber_labeling(const Poset& p, const Labeling& l);

enum class Verdict { Gorenstein, QGorensteinOnly, NotQGorenstein };
enum class Method { Bounded, Fast, Brute, Blocks };

/// Two constraints whose forced sums conflict: each is either a
/// dimension-1 upset or the full set (the sum-to-zero constraint).
struct InconsistentPairWitness {
    ElemSet a, b;
};

/// The unique rational solution of the ray system has a non-integer
/// entry; kept so a Q-Gorenstein-only verdict can be audited.
struct NonIntegralWitness {
    std::vector<Rat> solution;
};

/// A violation of the tree downset condition: the downset generated by
/// S and all meeting trees of M_P except one is connected but meets M_P
/// in the wrong number of components.
struct TdcWitness {
    ElemSet s;
    int excluded_tree_index = 0; // position among the meeting trees, ascending
    ElemSet excluded_tree;
    ElemSet a_j;
    int expected_m = 0;
    int found_cc = 0;
};

/// Snapshot of the iterative decision at the failing iteration: which
/// quotient stage it was, whether the input was dualized first, the
/// stage's classes flattened to original elements, and the stage
/// poset's cover relations (between class indices).
struct QuotientStage {
    int iteration = 0;
    bool dualized = false;
    std::vector<ElemSet> classes;
    std::vector<std::pair<int, int>> covers;
};

/// M of the stage poset contains a cycle.
struct MSetCycleWitness {
    QuotientStage stage;
    std::vector<std::pair<int, int>> cycle_edges; // class-index pairs
};

struct TdcViolationWitness {
    QuotientStage stage;
    TdcWitness tdc;
};

using Witness = std::variant<std::monostate, InconsistentPairWitness, NonIntegralWitness,
                             MSetCycleWitness, TdcViolationWitness>;

/// The decision record.  Invariants:
///  - Gorenstein      => index = 1, labeling present with r = 1
///  - QGorensteinOnly => index > 1, labeling present with r = index
///  - NotQGorenstein  => witness present, labeling and index absent
///  - crepant         => verdict Gorenstein (bounded posets have index 1)
struct GorensteinCertificate {
    Verdict verdict = Verdict::NotQGorenstein;
    std::optional<Labeling> labeling;
    std::optional<Int> index;
    bool crepant = false;
    Witness witness;
    Method method = Method::Brute;

    bool q_gorenstein() const { return verdict != Verdict::NotQGorenstein; }
    bool gorenstein() const { return verdict == Verdict::Gorenstein; }
};

} // namespace braidcone

#endif
