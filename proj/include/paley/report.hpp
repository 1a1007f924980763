#pragma once

// JSON and CSV renderings of library results. Key order is fixed so that
// identical inputs give byte-identical output.

#include <string>

#include "json.hpp"
#include "paley/bounds.hpp"
#include "paley/directions.hpp"
#include "paley/families.hpp"
#include "paley/graph.hpp"
#include "paley/poly.hpp"

namespace paley {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Field& f);
Json to_json(const Graph& g);
/// Wall-clock time is left out so that reports stay reproducible.
Json to_json(const CliqueResult& r);
Json to_json(const CliqueEnumeration& e);
Json to_json(const DirectionSet& d);
Json to_json(const Poly& p);
Json to_json(const CorollaryReport& r);
Json to_json(const Certificate& c);
Json to_json(const BoundBundle& b);
Json to_json(const FamilyInstance& f);
Json to_json(const Ex45Report& r);
Json to_json(const Ex46Report& r);

std::string certificate_csv_header();
std::string to_csv_row(const Certificate& c);

}  // namespace paley
