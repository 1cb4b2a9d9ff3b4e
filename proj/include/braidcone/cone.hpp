#ifndef BRAIDCONE_CONE_HPP
#define BRAIDCONE_CONE_HPP

#include "braidcone/poset.hpp"

namespace braidcone {

/// The braid cone of P and its Weyl-chamber refinement, represented
/// entirely by primitive ray lattice points e_A (0-1 vectors, stored as
/// the sets A).  cone_rays are the ray generators of the cone: the
/// upsets of dimension exactly 1.  fan_rays are all rays of the
/// refining fan: the upsets of dimension >= 1.  Neither list contains
/// the empty set or the full set, and cone_rays is a prefix-free subset
/// of fan_rays.  Both are in ascending bitset order.
struct RaySet {
    std::vector<SubsetWithDim> cone_rays;
    std::vector<SubsetWithDim> fan_rays;
};

RaySet rays(const Poset& p);

/// Just the dimension-1 upsets, as sets.
std::vector<ElemSet> ray_generators(const Poset& p);

/// The cone is smooth exactly when the Hasse diagram is a tree
/// (it is connected already, so: acyclic).
bool is_smooth(const Poset& p);

} // namespace braidcone

#endif
