#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cla/automorphism.hpp"

namespace cla {

/// Cheap isomorphism invariants. Equal fingerprints are necessary, not sufficient.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t center = 0;
    std::size_t center_first = 0;
    std::size_t center_second = 0;
    std::size_t derived = 0;
    std::vector<std::size_t> lower_central;
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::size_t derived_first = 0;
    std::size_t derived_second = 0;

    /// (min, max) of the single-bracket derived dimensions; unchanged by switching.
    std::pair<std::size_t, std::size_t> derived_pair() const;
    std::string to_string() const;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const CompatibleLieAlgebra& g);

enum class Verdict { Isomorphic, NonIsomorphic, Unknown };

std::string to_string(Verdict v);

struct IsoResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Matrix> witness;  // columns are images of the basis of g
    std::string reason;

    bool isomorphic() const { return verdict == Verdict::Isomorphic; }
};

/// Search for φ: g -> h preserving both brackets. Over Q only fingerprints and
/// literal equality are used, and anything else is Unknown.
IsoResult is_isomorphic(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h, const SearchBounds& bounds = {},
                        Backend backend = Backend::Parallel);

/// is_isomorphic(g, switched(h)); the witness carries [,] of g to {,} of h.
IsoResult is_skew_isomorphic(const CompatibleLieAlgebra& g, const CompatibleLieAlgebra& h,
                             const SearchBounds& bounds = {}, Backend backend = Backend::Parallel);

/// Random chain of central extensions starting from the zero algebra. Each step
/// appends s random cocycles drawn from Z² of the current algebra, so the result
/// is nilpotent by construction. Deterministic in `seed`.
CompatibleLieAlgebra random_nilpotent(std::size_t dim, const Field& f, std::uint64_t seed);

} // namespace cla
