#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cla/extension.hpp"
#include "cla/iso.hpp"

namespace cla {

struct ClassifyOptions {
    SearchBounds bounds;
    Backend backend = Backend::Parallel;
    /// Check only sampled pairs plus fingerprint collisions in the final oracle pass.
    bool sampled_oracle = false;
    std::size_t sample_pairs = 200;
    std::uint64_t seed = 1;
    /// Label outputs by matching them against the reference table (dimension <= 4).
    bool label_with_table = true;
};

struct OrbitRepresentative {
    std::string base;
    std::size_t s = 0;
    Subspace subspace;  // canonical RREF in H² coordinates
    VectorCocycle representative_cocycle;
    std::size_t orbit_size = 0;
};

enum class ProvenanceKind { Table, CentralComponent, OrbitExtension };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Table;
    std::string parent;  // parent (central component) or base (orbit extension)
    std::optional<OrbitRepresentative> orbit;
};

struct ClassificationEntry {
    std::string label;
    CompatibleLieAlgebra algebra;
    Provenance provenance;
    std::optional<std::string> skew_partner;
    /// Table entries: the row name ("N_{4,18}") and its parameter values.
    std::string family;
    std::vector<std::pair<std::string, Scalar>> params;
    /// For classifier output matched to a table entry: φ with φ(output) = table structure.
    std::optional<Matrix> match_witness;
    /// Further table rows isomorphic to this algebra (the table lists some classes twice).
    std::vector<std::string> also_matches;
};

/// All s-dimensional subspaces of H²(g) (RREF over F_p) whose lifted components
/// have no common annihilator inside Z(g). Sorted by canonical key.
std::vector<Subspace> t_s_elements(const CompatibleLieAlgebra& g, const CohomologyData& h, std::size_t s,
                                   const ClassifyOptions& options = {});
std::vector<Subspace> t_s_elements(const CompatibleLieAlgebra& g, std::size_t s, const ClassifyOptions& options = {});

/// Aut(g)-orbits on T_s(g); each represented by its lexicographically smallest member.
std::vector<OrbitRepresentative> orbits(const CompatibleLieAlgebra& g, const CohomologyData& h, std::size_t s,
                                        const ClassifyOptions& options = {});
std::vector<OrbitRepresentative> orbits(const CompatibleLieAlgebra& g, std::size_t s,
                                        const ClassifyOptions& options = {});

struct OracleCheck {
    std::string a;
    std::string b;
    Verdict verdict = Verdict::Unknown;
    std::string reason;
};

struct Classification {
    Field field;
    std::size_t dim = 0;
    /// by_dim[d] lists the d-dimensional nilpotent algebras (by_dim[0] is the zero algebra).
    std::vector<std::vector<ClassificationEntry>> by_dim;
    std::vector<OracleCheck> oracle_checks;
    bool pairwise_distinct = true;

    const std::vector<ClassificationEntry>& entries() const { return by_dim.at(dim); }
};

/// Inductive classification of nilpotent compatible Lie algebras of dimension n
/// over F_p: central components parent + K, then one extension per orbit of
/// T_s(base) for every smaller base.
Classification classify_all(std::size_t n, const Field& f, const ClassifyOptions& options = {});
std::vector<ClassificationEntry> classify(std::size_t n, const Field& f, const ClassifyOptions& options = {});

/// The reference table for dimensions 1..4 instantiated over F_p. Families with
/// a cube-root condition keep the smallest β of each coset of cubes.
std::vector<ClassificationEntry> paper_table(const Field& f);

/// Label of the unique table entry isomorphic to g. Throws ContractError when
/// nothing (or more than one entry) matches.
std::string match(const CompatibleLieAlgebra& g, const std::vector<ClassificationEntry>& table,
                  const SearchBounds& bounds = {});
std::string match(const CompatibleLieAlgebra& g, const SearchBounds& bounds = {});

struct SkewPair {
    std::string label;
    std::string partner;  // empty when no entry matches the switched algebra
    bool self_paired = false;
};

/// g -> the entry isomorphic to g^s, for every entry.
std::vector<SkewPair> skew_pairs(const std::vector<ClassificationEntry>& entries, const SearchBounds& bounds = {});

/// Cube classes of F_p^×: the smallest residue of every coset of cubes.
std::vector<std::uint32_t> cube_coset_representatives(std::uint32_t p);

// Output formats.
std::string table_text(const std::vector<ClassificationEntry>& entries);
std::string table_csv(const std::vector<ClassificationEntry>& entries);

} // namespace cla
