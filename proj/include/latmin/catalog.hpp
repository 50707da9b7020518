#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latmin/currents.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

using Params = std::map<std::string, int>;

/// A parametric Z² family. Constraints are transcribed from the figure
/// captions; the geometry itself is certification-gated: a pattern enters the
/// registry only with a validated certificate (the catalog tests enforce
/// radius >= 12), since the source figures are not available and shapes are
/// reconstructed from captions, prose and small-radius enumeration.
struct Family {
    std::string id;
    std::vector<std::string> param_names;
    std::string constraint_text;   // the caption constraint, quoted in errors
    bool (*constraint)(const Params&);
    Pattern (*build)(const Params&);
    /// "caption-anchored" when text pins the geometry; "reconstructed" when
    /// it was recovered by enumeration + certification and may be one of
    /// several certified candidates.
    std::string reconstruction;
    std::vector<Params> registry_params;  // curated certified instances
};

const std::vector<Family>& catalog();
const Family* find_family(const std::string& id);

/// Builds a family member. Throws std::invalid_argument naming the violated
/// caption constraint when params are out of range; `force` skips the check
/// (used to produce deliberate counterexamples for refutation tests).
Pattern generate(const std::string& family_id, const Params& params, bool force = false);

struct RegistryEntry {
    std::string name;       // e.g. "F3-2-1[h=1,d=3]" or "...-complement"
    std::string family_id;
    Params params;
    Pattern pattern;
    bool is_complement = false;
};

/// Curated instances of every family plus the complement of each one.
std::vector<RegistryEntry> registry_patterns();

/// Certifies one registry entry around the origin. Reports are cached per
/// (name, radius) for the lifetime of the process.
const CertifyReport& registry_certify(const RegistryEntry& e, int radius);

std::string params_str(const Params& p);

}  // namespace latmin
