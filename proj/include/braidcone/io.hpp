#ifndef BRAIDCONE_IO_HPP
#define BRAIDCONE_IO_HPP

#include "braidcone/certificate.hpp"
#include "braidcone/cone.hpp"
#include "braidcone/enumerate.hpp"
#include "braidcone/fastpath.hpp"
#include "braidcone/gorenstein.hpp"
#include "braidcone/poset.hpp"

#include <string>
#include <string_view>

namespace braidcone {

enum class Format { Json, Text };

/// Parses the line-oriented poset format:
///
///     # comment
///     poset 4            (or: elements a b c d)
///     1 < 2
///     1 < 3
///     2 < 4
///     3 < 4
///
/// Relation lines declare strict relations (not necessarily covers; the
/// transitive closure is taken).  With a `poset n` header, elements are
/// the integers 1..n; with `elements`, they are the declared names.
/// ParseError carries the offending line and column; closure-level
/// problems (cycles) are reported at the line that introduced them.
Poset parse_poset(std::string_view text);

/// Serializes the poset back into the file format.
std::string emit_poset(const Poset& p);

/// Deterministic certificate serialization: sorted keys, sorted element
/// lists, no timestamps.  Identical inputs give identical bytes; the
/// optional wall-clock measurement goes into a separate metadata block
/// that is not part of the canonical body.
std::string emit_certificate(const Poset& p, const GorensteinCertificate& cert, Format f,
                             std::optional<double> wall_seconds = std::nullopt);

std::string emit_crepant(const Poset& p, const CrepantResult& r, Format f);
std::string emit_rays(const Poset& p, const RaySet& r, Format f);
std::string emit_mobius(const Poset& p, const MobiusTable& t, Format f);
std::string emit_quotients(const Poset& p, const std::vector<QuotientPoset>& steps, Format f);
std::string emit_smooth(const Poset& p, bool smooth, Format f);

/// Sweep report serialization.  Wall-clock timings are emitted only
/// when `timings` is set, in a separate metadata block, so the
/// canonical body stays byte-identical across runs.
std::string emit_report(const SweepReport& rep, Format f, bool timings = false);

/// DOT export of the Hasse diagram, elements ranked by height, with
/// optional integer annotations next to the element names.
std::string export_hasse(const Poset& p, const std::optional<Labeling>& labeling);

} // namespace braidcone

#endif
