#ifndef BRAIDCONE_ENUMERATE_HPP
#define BRAIDCONE_ENUMERATE_HPP

#include "braidcone/poset.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace braidcone {

/// Enumeration size cap.  Defaults to 7; the environment variable
/// BRAIDCONE_CAP raises it explicitly (exhaustive sweeps grow roughly
/// like 6^n, so anything past 8 is a deliberate act).
int enumeration_cap();

/// Visits every connected labeled poset on n elements exactly once, in
/// a deterministic order (elements added one at a time, choices in
/// ascending bitset order).  With dedup, only posets equal to the
/// lexicographically minimal relabeling of themselves are visited --
/// one representative per isomorphism class.  The visitor returns
/// false to stop.  CapExceededError when n is outside 2..cap.
void enumerate_connected_posets(int n, bool dedup, const std::function<bool(const Poset&)>& visit);

/// True when p equals the lexicographically minimal relabeling of
/// itself (the canonical representative of its isomorphism class).
bool is_canonical_form(const Poset& p);

struct PerNCounts {
    std::uint64_t total = 0;
    std::uint64_t gorenstein = 0;
    std::uint64_t q_gorenstein_only = 0;
    std::uint64_t not_q_gorenstein = 0;
    std::uint64_t crepant = 0;
};

struct SweepCounterexample {
    int n = 0;
    std::vector<std::pair<int, int>> relations;
    std::string kind;
    std::string detail;
};

/// Result of an exhaustive sweep.  An empty counterexample list means
/// every check held on the swept range.
struct SweepReport {
    std::string mode;
    int max_n = 0;
    bool dedup = false;
    std::map<int, PerNCounts> per_n;
    std::vector<SweepCounterexample> counterexamples;
    std::map<int, double> wall_seconds;
};

/// Runs the brute-force oracle on every connected poset with up to
/// max_n elements and records any Q-Gorenstein-only verdict as a
/// counterexample (none are expected; a hit disproves the conjecture
/// that Q-Gorenstein implies Gorenstein, and is reported, not treated
/// as an error).
SweepReport verify_conjecture(int max_n, int jobs = 1, bool dedup = false);

/// Cross-validates the independent decision routes on every connected
/// poset with up to max_n elements:
///   (a) iterative fast path vs. oracle on posets with a min or max,
///   (b) block decomposition vs. oracle everywhere,
///   (c) verdict/index invariance and labeling negation under duality,
///   (d) crepant iff bounded,
///   (e) tree Hasse diagram (smooth) implies Gorenstein.
/// Mismatches are recorded as counterexamples.
SweepReport cross_validate(int max_n, int jobs = 1, bool dedup = false);

} // namespace braidcone

#endif
