#pragma once

#include <json.hpp>
#include <memory>

#include "mwb/bounds.hpp"
#include "mwb/matroid.hpp"
#include "mwb/search.hpp"
#include "mwb/structure.hpp"

namespace mwb {

// Insertion-ordered JSON keeps report layouts stable byte-for-byte.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Matroid file formats:
//   {"format_version":1,"kind":"linear","p":,"k":,"poly":[...],"rows":,"matrix":[row-major codes]}
//   {"format_version":1,"kind":"bases","n":,"rank":,"bases":[[...],...]}
// Linear modulus must be the canonical minimum for (p, k); bases files are
// re-validated on load.
Json matroid_to_json(const Matroid& M);
MatroidPtr matroid_from_json(const Json& j);

// Enumerate the bases of an arbitrary matroid (guarded by max_elements).
std::shared_ptr<const BasesMatroid> to_bases(const Matroid& M, int max_elements = 14);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

Json rat_to_json(const Rat& r);  // {"num":..., "den":...}

Json restriction_witness_to_json(const RestrictionWitness& w);
RestrictionWitness restriction_witness_from_json(const Json& j);

Json minor_witness_to_json(const MinorWitness& w);
MinorWitness minor_witness_from_json(const Json& j);

Json stack_cert_to_json(const StackCertificate& c);
StackCertificate stack_cert_from_json(const Json& j);

Json stack_verdict_to_json(const StackVerdict& v);
Json roundness_to_json(const RoundnessWitness& w);
Json density_report_to_json(const DensityReport& r);
Json kungrel_to_json(const KungrelReport& r);
Json projection_check_to_json(const ProjectionCheck& c);

}  // namespace mwb
