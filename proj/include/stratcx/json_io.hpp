#pragma once

#include <string>

#include <json.hpp>

#include "stratcx/cxlin.hpp"
#include "stratcx/folan.hpp"
#include "stratcx/pforms.hpp"

namespace stratcx::json_io {

// Key order is preserved everywhere so identical inputs serialize to
// identical bytes.
using json = nlohmann::ordered_json;

json complex_to_json(const cxlin::ComplexInstance& c);
cxlin::ComplexInstance complex_from_json(const json& j);

json form_to_json(const pforms::TwistedForm& f);
pforms::TwistedForm form_from_json(const json& j);

json rank_profile_to_json(const folan::RankProfile& p);

json integer_array(std::span<const Integer> xs);
std::vector<Integer> integer_array_from_json(const json& j);

json size_array(const std::vector<std::size_t>& xs);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

} // namespace stratcx::json_io
