#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "oodlsp/quality_model.hpp"

namespace test_support {

inline std::string source_path(const std::string& relative) { return std::string(OODLSP_SOURCE_DIR) + "/" + relative; }

inline std::string read_text(const std::string& relative) {
  std::ifstream in(source_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + relative);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline oodlsp::ModelNode load_model(const std::string& relative) {
  auto parsed = oodlsp::parse_model(read_text(relative));
  if (!parsed.ok()) throw std::runtime_error(relative + ": " + parsed.errors.front().message);
  return std::move(*parsed.root);
}

}  // namespace test_support
