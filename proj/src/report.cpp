#include "ainf/report.hpp"

#include <sstream>

namespace ainf {

void Report::add_defect_summary(const std::string& key, const DefectReport& rep)
{
    ReportJson sum = ReportJson::object();
    sum["violations"] = rep.defects.size();
    if (!rep.defects.empty()) {
        ReportJson first = ReportJson::object();
        first["check"] = rep.defects.front().check;
        first["witness"] = rep.defects.front().witness;
        first["value"] = rep.defects.front().value;
        sum["first"] = first;
    }
    sum["status"] = rep.empty() ? "ok" : "FAIL";
    body["certificates"][key] = sum;
    defect_count += static_cast<int>(rep.defects.size());
}

std::string render_json(const Report& r)
{
    return r.body.dump(2) + "\n";
}

namespace {

bool is_flat(const ReportJson& j)
{
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (e.is_object() || e.is_array())
            return false;
    return true;
}

void render_value(std::ostringstream& out, const ReportJson& j, int indent)
{
    std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !is_flat(v))) {
                out << pad << k << ":\n";
                render_value(out, v, indent + 2);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || (v.is_array() && !is_flat(v))) {
                out << pad << "-\n";
                render_value(out, v, indent + 2);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_table(const Report& r)
{
    std::ostringstream out;
    render_value(out, r.body, 0);
    return out.str();
}

}  // namespace ainf
