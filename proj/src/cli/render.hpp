#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlchar/dltables.hpp"

namespace dlchar::cli::render {

using nlohmann::json;

// Left-aligned columns separated by two spaces.
void pretty_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows);
void csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows);
std::string csv_field(const std::string& s);

json char_table_json(const dl::GroupData& g);
std::vector<std::vector<std::string>> char_table_rows(const dl::GroupData& g);

json report_json(const dl::Report& r);
void report_pretty(std::ostream& out, const dl::Report& r);

}  // namespace dlchar::cli::render
