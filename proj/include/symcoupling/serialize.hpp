#pragma once

#include <json.hpp>

#include <ostream>
#include <string>

#include "symcoupling/algebra.hpp"
#include "symcoupling/askey.hpp"
#include "symcoupling/exact.hpp"
#include "symcoupling/families.hpp"
#include "symcoupling/volume.hpp"

namespace symcoupling {

using Json = nlohmann::ordered_json;

/// 17 significant digits: the machine-format rendering (round-trips exactly).
std::string format_double(double v);
/// Shortest string that round-trips: the human-format rendering.
std::string format_shortest(double v);

/// Deterministic JSON writer: insertion-ordered keys, two-space indent,
/// doubles via format_double, non-finite doubles as null.
void write_json(std::ostream& out, const Json& j);
std::string dump_json(const Json& j);

Json to_json(const HalfInt& h);
Json to_json(const Quadrilateral& q);
Json to_json(const ExactRadical& r);

/// Spectrum schema, also the cache format.
inline constexpr const char* kSpectrumSchema = "symcoupling.spectrum/1";
Json to_json(const VolumeSpectrum& s, const std::string& tool_version);
/// Inverse of to_json; throws DomainError on schema mismatch.
VolumeSpectrum spectrum_from_json(const Json& j);

Json to_json(const StructureConstants& c);
Json to_json(const ExactDualityReport& r);
Json to_json(const DualityReport& r);
Json to_json(const TriangularReport& r);
Json to_json(const RecurrenceReport& r);
Json to_json(const ConvergenceReport& r);

}  // namespace symcoupling
