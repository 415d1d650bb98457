#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eulab/bounds.hpp"
#include "eulab/eint.hpp"
#include "eulab/factor.hpp"
#include "eulab/polyprod.hpp"
#include "eulab/search.hpp"

namespace eulab::io {

using Json = nlohmann::ordered_json;

/// Round to 12 significant digits so that printed bounds are stable.
double round12(double v);

Json to_json(const EFactorization& f);
Json to_json(const RationalFactorization& f);
Json to_json(const bounds::RhoConstants& k);
/// "trial" is the index within a verifier run, null for a single report.
Json to_json(const bounds::BoundReport& r, std::optional<std::size_t> trial = {});
Json to_json(const bounds::RefinementTrace& t);
Json to_json(const search::SearchResult& r, const search::SearchConfig& cfg);

/// One CSV row matching the columns
/// size,max_element,minimum,witness_count,examples
std::string to_csv(const search::SearchResult& r, const search::SearchConfig& cfg, bool header);

/// Set files: one element per line, "a,b" or a bare integer (taken as (n, 0)).
/// Blank lines and lines starting with '#' are skipped. Errors name the line.
std::vector<EInt> read_eint_set(std::istream& in, std::string_view source);
std::vector<std::int64_t> read_integer_set(std::istream& in, std::string_view source);
std::vector<EInt> read_eint_set_file(const std::string& path);
std::vector<std::int64_t> read_integer_set_file(const std::string& path);

/// {"n": ..., "r": [...], "m": [...]}
polyprod::SparsePoly read_poly(std::istream& in, std::string_view source);
polyprod::SparsePoly read_poly_file(const std::string& path);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(std::string_view text);

// JSON schemas for every document the CLI emits, with a small validator
// covering the keywords they use (type, required, properties,
// additionalProperties, items, enum, minimum).

std::vector<std::string> schema_names();
const Json& schema(std::string_view name);
/// Empty when the document conforms.
std::vector<std::string> validate(const Json& doc, std::string_view schema_name);

}  // namespace eulab::io
