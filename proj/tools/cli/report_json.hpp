#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ordlines/ordlines.hpp"

namespace ordlines::cli {

using Json = nlohmann::ordered_json;

/// Adds `key` as the exact "a/b" string and `key_approx` as a decimal that is
/// for display only.
void put_rational(Json& obj, std::string_view key, const Rational& value);

Json to_json(const SpanSummary& s);
Json to_json(const PlaneSummary& s);
Json to_json(const BoundConstants& c);
Json to_json(const ProjectionImage& img);
Json to_json(const KellyTraceReport& r);
Json to_json(const SearchResult& r);
Json to_json(const BoroczkyModelSummary& s);
Json to_json(const SylvesterGallaiReport& r);
Json to_json(const SkewBoundReport& r);
Json to_json(const AlmostCoplanarReport& r);
Json to_json(const ConcurrentProbe& r);
Json to_json(const SmallLineCounts& r);
Json to_json(const BeckReport& r);

/// Histogram keyed by k as a string, in increasing k.
Json histogram_json(const std::map<std::size_t, std::size_t>& t);

}  // namespace ordlines::cli
