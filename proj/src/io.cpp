#include "lmax/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lmax {

namespace {

Time json_time_field(const nlohmann::json& object, const char* key) {
  if (!object.contains(key) || !object[key].is_number_integer())
    throw Error::parse(std::string("job object needs integer field \"") + key + "\"");
  return object[key].get<Time>();
}

Instance instance_from_jobs(std::vector<Job> jobs) {
  try {
    return Instance(std::move(jobs));
  } catch (const Error& e) {
    throw Error::parse(std::string("instance rejected: ") + e.what());
  }
}

Instance parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error::parse(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("jobs") || !doc["jobs"].is_array())
    throw Error::parse("instance document needs a \"jobs\" array");
  std::vector<Job> jobs;
  for (const auto& item : doc["jobs"]) {
    if (!item.is_object()) throw Error::parse("every entry of \"jobs\" must be an object");
    jobs.push_back({json_time_field(item, "r"), json_time_field(item, "p"),
                    json_time_field(item, "q")});
  }
  return instance_from_jobs(std::move(jobs));
}

std::string strip(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Time parse_time(const std::string& token) {
  const std::string t = strip(token);
  Time value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw Error::parse("expected an integer, got \"" + token + "\"");
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(line);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

Instance parse_instance_csv(const std::string& text) {
  std::stringstream stream(text);
  std::string line;
  bool header_seen = false;
  std::vector<Job> jobs;
  while (std::getline(stream, line)) {
    const std::string row = strip(line);
    if (row.empty()) continue;
    if (!header_seen) {
      const auto cols = split(row, ',');
      if (cols.size() != 3 || strip(cols[0]) != "r" || strip(cols[1]) != "p" ||
          strip(cols[2]) != "q")
        throw Error::parse("CSV instance needs the header \"r,p,q\"");
      header_seen = true;
      continue;
    }
    const auto cols = split(row, ',');
    if (cols.size() != 3) throw Error::parse("CSV row needs three columns: " + row);
    jobs.push_back({parse_time(cols[0]), parse_time(cols[1]), parse_time(cols[2])});
  }
  if (!header_seen) throw Error::parse("empty CSV instance");
  return instance_from_jobs(std::move(jobs));
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  const std::string body = strip(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '['))
    return parse_instance_json(body);
  return parse_instance_csv(text);
}

Instance load_instance(const std::string& path) {
  return parse_instance_text(read_text_file(path));
}

std::string instance_to_json(const Instance& instance) {
  nlohmann::ordered_json doc;
  doc["jobs"] = nlohmann::ordered_json::array();
  for (const Job& job : instance.jobs()) {
    nlohmann::ordered_json item;
    item["r"] = job.release;
    item["p"] = job.processing;
    item["q"] = job.delivery;
    doc["jobs"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string instance_to_csv(const Instance& instance) {
  std::string out = "r,p,q\n";
  for (const Job& job : instance.jobs()) {
    out += std::to_string(job.release) + "," + std::to_string(job.processing) + "," +
           std::to_string(job.delivery) + "\n";
  }
  return out;
}

void save_instance(const Instance& instance, const std::string& path) {
  write_text_file(path, instance_to_json(instance));
}

nlohmann::ordered_json placement_to_json(const Placement& placement) {
  auto doc = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < placement.size(); ++k)
    doc.push_back({placement.positions()[k], placement.jobs()[k]});
  return doc;
}

Placement placement_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error::parse("placement document must be an array of pairs");
  std::vector<Position> positions;
  std::vector<JobIndex> jobs;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw Error::parse("placement entries must be [position, job] pairs");
    positions.push_back(pair[0].get<Position>());
    jobs.push_back(pair[1].get<JobIndex>());
  }
  try {
    return Placement(std::move(positions), std::move(jobs));
  } catch (const Error& e) {
    throw Error::parse(std::string("placement rejected: ") + e.what());
  }
}

std::vector<JobIndex> parse_index_list(const std::string& text) {
  std::vector<JobIndex> indices;
  for (const std::string& token : split(strip(text), ',')) {
    const Time value = parse_time(token);
    if (value < 1 || value > static_cast<Time>(kMaxJobs))
      throw Error::parse("index out of range: " + token);
    indices.push_back(static_cast<JobIndex>(value));
  }
  if (indices.empty()) throw Error::parse("empty index list");
  return indices;
}

std::string index_list_to_string(const std::vector<JobIndex>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(indices[i]);
  }
  return out;
}

const char* const kTraceCsvHeader = "step,op,prefix_k,current_L,best_L,placement_changed";

void write_trace_row(std::ostream& out, const StepTrace& trace) {
  out << trace.step << ',' << (trace.op == MutationOp::Global ? "global" : "local") << ','
      << trace.prefix_length << ',' << trace.current_lateness << ',' << trace.best_lateness
      << ',' << (trace.placement_changed ? 1 : 0) << '\n';
}

std::string read_text_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw Error::parse("cannot open file: " + path);
  std::stringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw Error::parse("cannot write file: " + path);
  stream << content;
}

}  // namespace lmax
