#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmax/evolve.hpp"
#include "lmax/jackson.hpp"
#include "lmax/model.hpp"

namespace lmax {

// Canonical instance document: {"jobs": [{"r": .., "p": .., "q": ..}, ...]}.
// A CSV alternative with header "r,p,q" is accepted on input; writers always
// emit the object form with the keys in that order.
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);
std::string instance_to_csv(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

// Placement wire form: [[position, job], ...] sorted by position.
nlohmann::ordered_json placement_to_json(const Placement& placement);
Placement placement_from_json(const nlohmann::json& doc);

// Comma-separated 1-based index lists, e.g. "1,3,2".
std::vector<JobIndex> parse_index_list(const std::string& text);
std::string index_list_to_string(const std::vector<JobIndex>& indices);

// Trace stream rows.
extern const char* const kTraceCsvHeader;  // step,op,prefix_k,current_L,best_L,placement_changed
void write_trace_row(std::ostream& out, const StepTrace& trace);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lmax
