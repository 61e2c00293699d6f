#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "actual_cause/corpus.hpp"
#include "actual_cause/dsl.hpp"

namespace testing {

inline std::string corpus_path(const std::string& file) { return std::string(ACTUAL_CAUSE_CORPUS_DIR) + "/" + file; }

inline std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline actual_cause::CausalModel model_from(std::string_view text) {
  auto r = actual_cause::parse_model(text);
  if (!r.ok()) throw std::runtime_error("test model does not parse: " + r.diagnostics.front().message);
  return std::move(*r.value);
}

inline actual_cause::CausalModel corpus_model(const std::string& id) { return model_from(read(corpus_path(id + ".scm"))); }

inline actual_cause::Matrix phi(const actual_cause::CausalModel& m, std::string_view text) {
  auto r = actual_cause::parse_formula(text, m.signature());
  if (!r.ok()) throw std::runtime_error("test formula does not parse: " + r.diagnostics.front().message);
  return r.value->matrix;
}

inline actual_cause::Formula formula(const actual_cause::CausalModel& m, std::string_view text) {
  auto r = actual_cause::parse_formula(text, m.signature());
  if (!r.ok()) throw std::runtime_error("test formula does not parse: " + r.diagnostics.front().message);
  return std::move(*r.value);
}

inline actual_cause::VarSet vars(const actual_cause::CausalModel& m, std::initializer_list<const char*> names) {
  actual_cause::VarSet out;
  for (const char* n : names) out.insert(*m.signature().find_endogenous(n));
  return out;
}

inline std::string names(const actual_cause::CausalModel& m, actual_cause::VarSet s) {
  return m.signature().set_text(s);
}

}  // namespace testing
