#ifndef LCF_SERIALIZE_HPP
#define LCF_SERIALIZE_HPP

#include <json.hpp>

#include "lcf/bounds.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact.hpp"
#include "lcf/model.hpp"

namespace lcf {

using Json = nlohmann::ordered_json;

Json to_json(const CanonicalAssignment& a);
CanonicalAssignment canonical_from_json(const Json& j);

/// {"x": [[...], ...], "y": [[...], ...]}
Json to_json(const ListAssignment& a);
ListAssignment lists_from_json(const Json& j);

Json to_json(const Provenance& p);
Json to_json(const Witness& w);
Json to_json(const DMinimum& d);
Json to_json(const Verdict& v);
Json to_json(const ScanLine& line);
Json to_json(const CompositionVector& a);

} // namespace lcf

#endif // LCF_SERIALIZE_HPP
