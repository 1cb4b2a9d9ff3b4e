#ifndef BRAIDCONE_GORENSTEIN_HPP
#define BRAIDCONE_GORENSTEIN_HPP

#include "braidcone/certificate.hpp"
#include "braidcone/poset.hpp"

#include <optional>
#include <span>
#include <utility>

namespace braidcone {

/// Solves the normalized labeling system over the rationals: the unique
/// vector y with sum(y) = 0 and sum_{i in A} y_i = 1 for every target A.
/// Returns nothing when the system is inconsistent.
///
/// Every target must be an upset (NotUpsetError otherwise).  Uniqueness
/// is guaranteed when the targets include all dimension-1 upsets, since
/// those constraint vectors have full rank; a target set that leaves
/// the system underdetermined raises InternalError.
std::optional<std::vector<Rat>> solve_labeling(const Poset& p, std::span<const ElemSet> targets);

/// The brute-force oracle: enumerates the dimension-1 upsets, solves the
/// exact rational system, and classifies.
///  - no rational solution: NotQGorenstein, with a pair of conflicting
///    constraints as witness;
///  - integral solution: Gorenstein with index 1;
///  - fractional solution y: index = lcm of denominators, labeling
///    index*y, verdict QGorensteinOnly.
/// crepant is recorded as bounded(P) and q-Gorenstein.
GorensteinCertificate gorenstein_status(const Poset& p);

/// Whether the Weyl-chamber refinement is a crepant resolution.
/// True exactly when the poset is bounded; the labeling is then the
/// chamber crepant one (-1 at the minimum, +1 at the maximum, 0
/// elsewhere), verified here against every fan ray.  When false and the
/// poset is still Q-Gorenstein, `violation` holds an upset of dimension
/// > 1 whose sum disagrees, paired with a dimension-1 upset.
struct CrepantResult {
    bool crepant = false;
    std::optional<Labeling> labeling;
    std::optional<std::pair<ElemSet, ElemSet>> violation;
};

CrepantResult crepant_status(const Poset& p);

/// Glues two labeled posets at one point: the result agrees with both
/// labelings away from the glue point and sums there, and is again an
/// r-Gorenstein labeling of the glued poset.  IndexMismatchError when
/// the two labelings certify different r.
struct GluedLabeling {
    Poset poset;
    Labeling labeling;
    std::vector<int> map_first;
    std::vector<int> map_second;
};

GluedLabeling glue_labelings(const Poset& p1, const Labeling& l1, int x1,
                             const Poset& p2, const Labeling& l2, int x2);

/// Decides via the block-cut tree: a poset admits an r-Gorenstein
/// labeling iff every biconnected component does, so each block is
/// solved independently (as an induced subposet), the overall index is
/// the lcm of the block indices, and the global labeling is rebuilt by
/// gluing block labelings along the tree.
GorensteinCertificate status_via_blocks(const Poset& p);

/// The bounded-poset certificate: -1 at the minimum, +1 at the maximum.
Labeling bounded_labeling(const Poset& p);

} // namespace braidcone

#endif
