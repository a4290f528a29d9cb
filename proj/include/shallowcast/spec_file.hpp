#pragma once

#include "shallowcast/model.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shallowcast {

/// Malformed spec file: bad syntax, missing field, bad rate string, duplicate name.
class SpecFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A network spec plus the operator-facing site names; names[i] is site i.
struct SpecDocument {
  std::vector<std::string> names;
  NetworkSpec spec;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/**
 * Reads the JSON spec format:
 *
 *   {"sites": [{"name": "v1", "uplink": "2", "downlink": "9/2", "rate": "1"}, ...]}
 *
 * Rates are strings ("10", "3/2", "0.25"); plain non-negative JSON integers
 * are also accepted. A missing "downlink" means unbounded. Array order
 * fixes the site indices.
 */
SpecDocument parse_spec_document(std::string_view text);
SpecDocument load_spec_file(const std::filesystem::path& path);

/// Canonical JSON rendering; parse_spec_document(render_spec_document(d)) == d.
std::string render_spec_document(const SpecDocument& doc);

}  // namespace shallowcast
