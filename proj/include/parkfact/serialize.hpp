#pragma once

#include <string_view>

#include <json.hpp>

#include "parkfact/arch.hpp"
#include "parkfact/factorization.hpp"
#include "parkfact/parking.hpp"
#include "parkfact/permutation.hpp"
#include "parkfact/polynomial.hpp"
#include "parkfact/tree.hpp"

namespace parkfact {

using Json = nlohmann::json;

/// [{"q": a, "t": b, "c": "123"}, ...] in canonical term order.
void to_json(Json& j, const BivariatePoly& p);
void from_json(const Json& j, BivariatePoly& p);

/// {"n": n, "cycles": [[...], ...]} with fixed points omitted.
void to_json(Json& j, const Permutation& p);
void from_json(const Json& j, Permutation& p);

/// {"n": n, "word": [0, s_1, ..., s_n]}.
void to_json(Json& j, const FullCycle& c);

void to_json(Json& j, const Transposition& t);

/// {"n": n, "parent": [parent of 1, ..., parent of n]}.
void to_json(Json& j, const LabelledTree& t);
void from_json(const Json& j, LabelledTree& t);

/// {"n": n, "entries": [...], "kind": "parking" | "major"}.
void to_json(Json& j, const ParkingFunction& p);
void from_json(const Json& j, ParkingFunction& p);
void to_json(Json& j, const MajorSequence& m);
void from_json(const Json& j, MajorSequence& m);

/// {"side": "below" | "above", "heights": [...], "labels": [...]}.
void to_json(Json& j, const LabelledDyckPath& path);

/// {"n": n, "factors": [[a, b], ...]}.
void to_json(Json& j, const Factorization& f);
void from_json(const Json& j, Factorization& f);

/// {"n": n, "arcs": [[left, right, label], ...]}.
void to_json(Json& j, const ArchDiagram& a);
void from_json(const Json& j, ArchDiagram& a);

/// Parses "(l,r,label)(l,r,label)..." on positions [0, n].
ArchDiagram parse_arch(std::string_view text, int n);

}  // namespace parkfact

namespace nlohmann {
template <>
struct adl_serializer<parkfact::FullCycle> {
  static parkfact::FullCycle from_json(const json& j);
  static void to_json(json& j, const parkfact::FullCycle& c) { parkfact::to_json(j, c); }
};
}  // namespace nlohmann
