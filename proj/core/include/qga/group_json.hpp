#pragma once

#include "qga/group.hpp"

#include <string>

namespace qga {

struct ParseOptions {
  int cap = 10000;            // max order for generated groups
  VerifyOptions verify{};
};

// accepts {"format":"cayley","order":n,"table":[[...],...]} or
// {"format":"perm","degree":d,"generators":[[...],...]}
Group parse_group_json(const std::string& text, const ParseOptions& opts = {});
Group load_group_file(const std::string& path, const ParseOptions& opts = {});

// canonical serialization in the cayley-table form
std::string serialize_group(const Group& g);

} // namespace qga
