#pragma once

#include <json.hpp>

#include "ainf/dg.hpp"

namespace ainf {

using ReportJson = nlohmann::ordered_json;

/* Command output with deterministic serialization: fixed key order (insertion
 * order of an ordered json), canonical scalar formatting, external degrees.
 * Wall-clock timing goes to stderr, never into the report body. */
struct Report {
    ReportJson body = ReportJson::object();
    int defect_count = 0;

    void add_defect_summary(const std::string& key, const DefectReport& rep);
};

std::string render_json(const Report& r);
std::string render_table(const Report& r);

}  // namespace ainf
