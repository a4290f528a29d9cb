#include "shallowcast/spec_file.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace shallowcast {

namespace {

using nlohmann::json;

std::string line_context(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  // nlohmann reports the byte after the offending token.
  std::size_t column = byte > line_start ? byte - line_start : 1;
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << text.substr(line_start, line_end - line_start);
  return os.str();
}

Rate read_rate(const json& site, const char* field, const std::string& where) {
  const auto it = site.find(field);
  if (it == site.end()) throw SpecFileError(where + ": missing \"" + field + "\"");
  try {
    if (it->is_string()) return rate_from_string(it->get<std::string>());
    if (it->is_number_unsigned()) return Rate(it->get<std::uint64_t>());
  } catch (const std::exception& e) {
    throw SpecFileError(where + ": bad \"" + field + "\": " + e.what());
  }
  if (it->is_number_integer()) throw SpecFileError(where + ": \"" + field + "\" must not be negative");
  throw SpecFileError(where + ": \"" + field + "\" must be a rate string such as \"3/2\" or \"0.25\"");
}

}  // namespace

SpecDocument parse_spec_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecFileError("invalid JSON at " + line_context(text, e.byte));
  }
  if (!root.is_object() || !root.contains("sites") || !root["sites"].is_array()) {
    throw SpecFileError("spec must be an object with a \"sites\" array");
  }

  SpecDocument doc;
  std::set<std::string> seen;
  const auto& sites = root["sites"];
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& site = sites[i];
    std::string where = "site #" + std::to_string(i);
    if (!site.is_object()) throw SpecFileError(where + ": expected an object");
    if (!site.contains("name") || !site["name"].is_string()) throw SpecFileError(where + ": missing string \"name\"");
    std::string name = site["name"].get<std::string>();
    where += " (\"" + name + "\")";
    if (!seen.insert(name).second) throw SpecFileError(where + ": duplicate site name");

    doc.spec.uplink.push_back(read_rate(site, "uplink", where));
    doc.spec.rates.push_back(read_rate(site, "rate", where));
    if (site.contains("downlink") && !site["downlink"].is_null()) {
      doc.spec.downlink.emplace_back(read_rate(site, "downlink", where));
    } else {
      doc.spec.downlink.push_back(Bound::unbounded());
    }
    doc.names.push_back(std::move(name));
  }
  doc.spec.n = doc.names.size();
  try {
    doc.spec = validate_spec(std::move(doc.spec));
  } catch (const SpecError& e) {
    throw SpecFileError(e.what());
  }
  return doc;
}

SpecDocument load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec_document(buf.str());
  } catch (const SpecFileError& e) {
    throw SpecFileError(path.string() + ": " + e.what());
  }
}

std::string render_spec_document(const SpecDocument& doc) {
  using ordered = nlohmann::ordered_json;
  ordered sites = ordered::array();
  for (std::size_t i = 0; i < doc.spec.size(); ++i) {
    ordered site = {{"name", doc.names.at(i)}, {"uplink", doc.spec.uplink[i].to_string()}};
    if (doc.spec.downlink[i].is_finite()) site["downlink"] = doc.spec.downlink[i].finite().to_string();
    site["rate"] = doc.spec.rates[i].to_string();
    sites.push_back(std::move(site));
  }
  return ordered{{"sites", sites}}.dump(2) + "\n";
}

}  // namespace shallowcast
