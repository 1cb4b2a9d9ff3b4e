#include "braidcone/cone.hpp"

namespace braidcone {

RaySet rays(const Poset& p) {
    RaySet r;
    for_each_upset(p, [&](const ElemSet& a) {
        int d = dimension(p, a);
        if (d >= 1) {
            r.fan_rays.push_back({a, SetKind::Upset, d});
            if (d == 1) r.cone_rays.push_back({a, SetKind::Upset, d});
        }
        return true;
    });
    return r;
}

std::vector<ElemSet> ray_generators(const Poset& p) {
    std::vector<ElemSet> out;
    for_each_upset(p, [&](const ElemSet& a) {
        if (dimension(p, a) == 1) out.push_back(a);
        return true;
    });
    return out;
}

bool is_smooth(const Poset& p) {
    // A connected graph is a tree iff |E| = |V| - 1.
    return static_cast<int>(p.covers().size()) == p.size() - 1;
}

} // namespace braidcone
