#ifndef BRAIDCONE_FASTPATH_HPP
#define BRAIDCONE_FASTPATH_HPP

#include "braidcone/certificate.hpp"
#include "braidcone/poset.hpp"

#include <optional>

namespace braidcone {

/// Elements that are minimal or cover only minimal elements.
ElemSet m_set(const Poset& p);

/// Connected components of the Hasse diagram restricted to m_set(p),
/// plus whether that subgraph is acyclic (edges = vertices - components).
/// Components ("trees", once acyclic) are ordered by smallest member.
struct MForest {
    bool acyclic = false;
    std::vector<ElemSet> trees;
};

MForest m_forest_check(const Poset& p);

/// Quotient of p by the tree relation: each tree of M_P collapses to one
/// class, everything else stays a singleton.  X <= Y in the quotient iff
/// some x in X is below some y in Y; with M_P acyclic this is always a
/// genuine poset.  Classes are ordered by smallest member; back_map sends
/// each element to its class index.
///
/// Requires m_forest_check(p).acyclic (NotAcyclicError otherwise) and a
/// quotient with at least two classes (TooSmallError otherwise; only
/// length-1 posets collapse to a point).  QuotientNotPosetError is
/// asserted unreachable -- raising it indicates a bug.
struct QuotientPoset {
    std::vector<ElemSet> classes;
    Poset order;
    std::vector<int> back_map;
};

QuotientPoset tree_quotient(const Poset& p);

/// Checks the tree downset condition: for every S outside M_P with
/// 1 <= |S| <= #trees, and every meeting tree T_j, the downset generated
/// by S and the other meeting trees, when connected, must meet M_P in
/// exactly m components (m = number of meeting trees).  Returns the
/// first violation -- S enumerated by size then lexicographically,
/// meeting trees in ascending order -- or nothing when the condition
/// holds.  Equivalent to the cc condition, but checkable over small
/// generating sets.
///
/// Requires a maximum element (NoMaxError; dualize first) and an acyclic
/// M_P (NotAcyclicError).
std::optional<TdcWitness> tree_downset_condition(const Poset& p);

/// The only possible Gorenstein labeling of a poset with a maximum:
/// mu_Phat at every element, plus 1 at the maximum.  Candidate only;
/// it certifies nothing until verified.  NoMaxError without a maximum.
Labeling mobius_labeling(const Poset& p);

/// Iterative decision for posets with a minimum or maximum element
/// (NotApplicableError otherwise).  Bounded posets short-circuit to the
/// -1/+1 certificate.  Posets with only a minimum are dualized first and
/// the labeling negated at the end.  Otherwise, repeatedly: if length
/// <= 1, Gorenstein; if M of the current quotient stage has a cycle or
/// the tree downset condition fails, NotQGorenstein with the stage
/// recorded in the witness; else take the tree-relation quotient.
/// On this input class Q-Gorenstein and Gorenstein coincide, so the
/// verdict is never QGorensteinOnly.
GorensteinCertificate decide_fast(const Poset& p);

} // namespace braidcone

#endif
