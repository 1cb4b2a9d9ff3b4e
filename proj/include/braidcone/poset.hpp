#ifndef BRAIDCONE_POSET_HPP
#define BRAIDCONE_POSET_HPP

#include "braidcone/elemset.hpp"
#include "braidcone/errors.hpp"
#include "braidcone/numbers.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace braidcone {

/// A finite strict partial order on elements 0..n-1 whose undirected
/// Hasse diagram is connected, with n >= 2.  Displayed element names
/// default to "1".."n"; custom names are cosmetic only.
///
/// Immutable after construction; every operation below is pure, so
/// values can be shared freely across threads.
class Poset {
public:
    /// Builds the transitive closure of the given strict relations
    /// (each pair (i, j) meaning i < j, elements 0-based) and validates
    /// all invariants.
    ///
    /// Throws TooSmallError (n < 2), InputError (element out of range),
    /// CycleError (closure breaks antisymmetry), DisconnectedError
    /// (Hasse diagram not connected).
    static Poset from_relations(int n, std::span<const std::pair<int, int>> pairs,
                                std::vector<std::string> names = {});

    static Poset from_relations(int n, std::initializer_list<std::pair<int, int>> pairs) {
        return from_relations(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
    }

    int size() const { return n_; }

    /// Strict comparability i < j.
    bool less(int i, int j) const { return up_[i].test(j); }

    /// All j with i < j (strict, exclusive of i).
    const ElemSet& up(int i) const { return up_[i]; }
    /// All j with j < i.
    const ElemSet& down(int i) const { return down_[i]; }

    /// Undirected Hasse neighbours of i.
    const ElemSet& hasse_adj(int i) const { return adj_[i]; }

    /// Cover pairs (i, j) with i covered by j, sorted ascending.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// Every strict pair (i, j) with i < j in the order, sorted.
    std::vector<std::pair<int, int>> relations() const;

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    std::string name_of(int i) const {
        return names_.empty() ? std::to_string(i + 1) : names_[i];
    }

    ElemSet minimals() const;
    ElemSet maximals() const;

    /// (has unique minimum, has unique maximum).
    std::pair<bool, bool> bounds() const;
    bool is_bounded() const;
    /// Index of the unique minimum / maximum, or -1.
    int min_element() const;
    int max_element() const;

    /// Maximum chain length (one less than the longest chain's size).
    int length() const;

    /// Order dual: all relations reversed, same elements and names.
    Poset dual() const;

    /// Structural equality (names ignored).
    bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

private:
    Poset() = default;
    void derive_covers_and_adj();

    int n_ = 0;
    std::vector<ElemSet> up_, down_, adj_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::string> names_;
};

/// A subset of the elements together with its role and its dimension
/// cc(A) + cc(complement) - 1, both counted on induced Hasse subgraphs
/// (cc of the empty set is 0).
enum class SetKind { Plain, Upset, Downset };

struct SubsetWithDim {
    ElemSet members;
    SetKind kind = SetKind::Plain;
    int dim = 0;
};

/// Number of connected components of the Hasse diagram restricted to `a`.
int component_count(const Poset& p, const ElemSet& a);
bool is_connected_subset(const Poset& p, const ElemSet& a);

/// cc(A) + cc(complement of A) - 1.
int dimension(const Poset& p, const ElemSet& a);

/// Visits every upset of p (including the empty set and the full set)
/// exactly once, in ascending bitset order.  The visitor returns false
/// to stop early.  The number of upsets may be exponential in n --
/// counting them is #P-complete -- so callers stream rather than collect
/// where possible.
void for_each_upset(const Poset& p, const std::function<bool(const ElemSet&)>& visit);

/// All upsets, each with its dimension, ascending bitset order.
std::vector<SubsetWithDim> upsets(const Poset& p);

/// Smallest downset containing s.
SubsetWithDim downset_of(const Poset& p, const ElemSet& s);

bool is_upset(const Poset& p, const ElemSet& a);
bool is_downset(const Poset& p, const ElemSet& a);

/// Moebius values of P-hat, the poset obtained from P by adjoining a new
/// minimum 0-hat (adjoined even if P already has a minimum).
/// mu[i] is the value at element i; the value at 0-hat is always 1.
struct MobiusTable {
    std::vector<Int> mu;
    Int mu_hat0 = 1;
};

MobiusTable mobius_hat(const Poset& p);

/// Block-cut decomposition of the undirected Hasse diagram: blocks are
/// the maximal biconnected subgraphs; tree_edges are (block index, cut
/// vertex) incidences and always form a tree.
struct BlockCutTree {
    std::vector<ElemSet> blocks;
    ElemSet cut_vertices;
    std::vector<std::pair<int, int>> tree_edges;
};

BlockCutTree block_cut_tree(const Poset& p);

/// Restriction of p to the given connected vertex set, along with the
/// map from new indices to original ones.  For a block of the Hasse
/// diagram, the restriction's Hasse edges are exactly the block's edges.
struct InducedPoset {
    Poset poset;
    std::vector<int> to_orig;
};

InducedPoset induced(const Poset& p, const ElemSet& members);

/// Identify x1 in p1 with x2 in p2 and take the transitive closure of
/// the union of cover relations.  The glue point keeps p1's index;
/// p2's other elements are appended in index order.
struct GluedPoset {
    Poset poset;
    std::vector<int> map_first;  // p1 index -> glued index
    std::vector<int> map_second; // p2 index -> glued index
};

GluedPoset glue_posets(const Poset& p1, int x1, const Poset& p2, int x2);

} // namespace braidcone

#endif
