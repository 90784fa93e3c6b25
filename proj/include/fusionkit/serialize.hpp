#ifndef FUSIONKIT_SERIALIZE_HPP
#define FUSIONKIT_SERIALIZE_HPP

#include <memory>
#include <string>

#include "json.hpp"

#include "fusionkit/normal_maps.hpp"

namespace fusionkit {

using Json = nlohmann::ordered_json;

// Canonical key of a subgroup: its sorted element indices joined by commas.
std::string subgroup_key(const Lattice& lat, int q);
int subgroup_from_key(const Lattice& lat, const std::string& key);

Json subgroup_json(const Lattice& lat, int q);  // {"key", "order", "elements" (labels)}
Json map_json(const Map& m);  // [[x, image], ...] over the domain
Map map_from_json(const Json& j, int host_order);

Json fusion_to_json(const FusionSystem& f);
// Rebuilds from the stored generators on the given host lattice; throws ParseError when the
// host does not match.
FusionSystem fusion_from_json(const Json& j, std::shared_ptr<const Lattice> lat);

Json automap_to_json(const Lattice& lat, const AutMap& a);
AutMap automap_from_json(const Json& j, const Lattice& lat);

}  // namespace fusionkit

#endif  // FUSIONKIT_SERIALIZE_HPP
