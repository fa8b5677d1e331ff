#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "extri/search.hpp"
#include "extri/tilt.hpp"

namespace extri::report {

using Json = nlohmann::ordered_json;

std::string hex(std::uint64_t h);

/// Identity block carried by every report: context id, algebra hash, kind,
/// field and object count.
Json context_header(const Context& ctx);

Json objects(const Context& ctx);
/// tables[k-1][a][b] = dim E^k(a, b).
Json ext_tables(const Context& ctx, int kmax);
Json verdict(const Context& ctx, const Verdict& v);
Json theorem(const Context& ctx, const TheoremReport& r);
Json search(const AmbientPtr& ambient, const SubcontextSearchReport& r);

std::string objects_text(const Context& ctx);
std::string ext_tables_text(const Context& ctx, int kmax);
std::string verdict_text(const Context& ctx, const Verdict& v);
std::string theorem_text(const Context& ctx, const TheoremReport& r);
std::string search_text(const AmbientPtr& ambient, const SubcontextSearchReport& r);

std::string labels(const Context& ctx, const Subcat& s);
std::string multiset_text(const Context& ctx, const Multiset& m);

}  // namespace extri::report
