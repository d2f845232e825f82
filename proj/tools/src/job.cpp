#include "hwprobe_cli/job.hpp"

#include <hwprobe/error.hpp>

namespace hwprobe::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> lineColumn(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": key '" + key + "' has the wrong type");
  }
}

template <typename T>
T getOr(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get<T>(j, key, where);
}

Bounds parseBounds(const json& j, Bounds base, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": bounds must be an object");
  base.degree = getOr(j, "degree", base.degree, where);
  base.window = getOr(j, "window", base.window, where);
  base.twistWindow = getOr(j, "twist_window", base.twistWindow, where);
  base.isoSamples = getOr(j, "iso_samples", base.isoSamples, where);
  if (base.degree <= 0 || base.window <= 0 || base.twistWindow < 0 || base.isoSamples <= 0)
    throw InputError(where + ": bounds must be positive");
  return base;
}

json boundsJson(const Bounds& b) {
  return {{"degree", b.degree}, {"window", b.window}, {"twist_window", b.twistWindow},
          {"iso_samples", b.isoSamples}};
}

ModuleSpec parseModule(const json& j, std::size_t index) {
  const std::string where = "modules[" + std::to_string(index) + "]";
  if (!j.is_object()) throw InputError(where + ": module must be an object");
  ModuleSpec m;
  m.name = get<std::string>(j, "name", where);
  int kinds = 0;
  if (j.contains("quotient")) {
    m.kind = "quotient";
    m.ideal = get<std::vector<std::string>>(j, "quotient", where);
    m.twist = getOr(j, "twist", 0, where);
    ++kinds;
  }
  if (j.contains("coker")) {
    m.kind = "coker";
    m.matrix = get<std::string>(j, "coker", where);
    ++kinds;
  }
  if (j.contains("free")) {
    m.kind = "free";
    m.twists = get<std::vector<int>>(j, "free", where);
    ++kinds;
  }
  if (j.contains("syzygy")) {
    m.kind = "syzygy";
    m.of = get<std::string>(j, "syzygy", where);
    m.index = get<int>(j, "index", where);
    if (m.index < 0) throw InputError(where + ": syzygy index must be nonnegative");
    ++kinds;
  }
  for (const char* unary : {"dual", "transpose"})
    if (j.contains(unary)) {
      m.kind = unary;
      m.of = get<std::string>(j, unary, where);
      ++kinds;
    }
  for (const char* nary : {"sum", "tensor"})
    if (j.contains(nary)) {
      m.kind = nary;
      m.parts = get<std::vector<std::string>>(j, nary, where);
      if (m.parts.empty()) throw InputError(where + ": '" + nary + "' needs at least one part");
      ++kinds;
    }
  if (j.contains("twist_of")) {
    m.kind = "twist";
    m.of = get<std::string>(j, "twist_of", where);
    m.twist = get<int>(j, "twist", where);
    ++kinds;
  }
  if (kinds != 1) throw InputError(where + ": exactly one module constructor expected");
  return m;
}

json moduleJson(const ModuleSpec& m) {
  json j{{"name", m.name}};
  if (m.kind == "quotient") {
    j["quotient"] = m.ideal;
    if (m.twist != 0) j["twist"] = m.twist;
  } else if (m.kind == "coker") {
    j["coker"] = m.matrix;
  } else if (m.kind == "free") {
    j["free"] = m.twists;
  } else if (m.kind == "syzygy") {
    j["syzygy"] = m.of;
    j["index"] = m.index;
  } else if (m.kind == "dual" || m.kind == "transpose") {
    j[m.kind] = m.of;
  } else if (m.kind == "sum" || m.kind == "tensor") {
    j[m.kind] = m.parts;
  } else if (m.kind == "twist") {
    j["twist_of"] = m.of;
    j["twist"] = m.twist;
  }
  return j;
}

MatrixSpec parseMatrix(const json& j, std::size_t index) {
  const std::string where = "matrices[" + std::to_string(index) + "]";
  MatrixSpec m;
  m.name = get<std::string>(j, "name", where);
  m.entries = get<std::vector<std::vector<std::string>>>(j, "rows", where);
  m.rowDegrees = get<std::vector<int>>(j, "row_degrees", where);
  m.colDegrees = getOr(j, "col_degrees", std::vector<int>{}, where);
  if (m.entries.size() != m.rowDegrees.size())
    throw InputError(where + ": row_degrees does not match the number of rows");
  for (const auto& row : m.entries)
    if (row.size() != m.entries.front().size()) throw InputError(where + ": ragged rows");
  if (!m.colDegrees.empty() && !m.entries.empty() && m.colDegrees.size() != m.entries.front().size())
    throw InputError(where + ": col_degrees does not match the number of columns");
  return m;
}

json matrixJson(const MatrixSpec& m) {
  json j{{"name", m.name}, {"rows", m.entries}, {"row_degrees", m.rowDegrees}};
  if (!m.colDegrees.empty()) j["col_degrees"] = m.colDegrees;
  return j;
}

}  // namespace

JobSpec parseJob(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = lineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string token = e.byte > 0 && e.byte <= text.size() ? text.substr(e.byte - 1, 1) : "";
    throw ParseError("malformed job document", line, column, token);
  }
  if (!doc.is_object()) throw InputError("job document must be an object");
  JobSpec spec;
  const std::string where = "job";
  spec.name = getOr<std::string>(doc, "name", "job", where);
  spec.characteristic = get<std::uint32_t>(doc, "field", where);
  spec.variables = get<std::vector<std::string>>(doc, "variables", where);
  spec.weights = getOr(doc, "weights", std::vector<int>(spec.variables.size(), 1), where);
  if (spec.weights.size() != spec.variables.size())
    throw InputError("job: weights must match variables");
  spec.order = getOr<std::string>(doc, "order", "grevlex", where);
  if (spec.order != "grevlex" && spec.order != "lex")
    throw InputError("job: order must be 'grevlex' or 'lex'");
  spec.ideal = getOr(doc, "ideal", std::vector<std::string>{}, where);
  spec.assertDomain = getOr(doc, "domain", false, where);
  if (doc.contains("bounds")) spec.bounds = parseBounds(doc.at("bounds"), Bounds{}, "bounds");
  if (doc.contains("matrices")) {
    const auto& list = doc.at("matrices");
    if (!list.is_array()) throw InputError("job: matrices must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) spec.matrices.push_back(parseMatrix(list[i], i));
  }
  if (doc.contains("modules")) {
    const auto& list = doc.at("modules");
    if (!list.is_array()) throw InputError("job: modules must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) spec.modules.push_back(parseModule(list[i], i));
  }
  if (doc.contains("tasks")) {
    const auto& list = doc.at("tasks");
    if (!list.is_array()) throw InputError("job: tasks must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string tw = "tasks[" + std::to_string(i) + "]";
      const auto& t = list[i];
      if (!t.is_object()) throw InputError(tw + ": task must be an object");
      TaskSpec task;
      task.op = get<std::string>(t, "op", tw);
      for (const auto& [key, value] : t.items()) {
        if (key == "op") continue;
        if (key == "bounds") {
          task.bounds = parseBounds(value, spec.bounds, tw + ".bounds");
        } else if (key == "expect") {
          task.expect = value;
        } else {
          task.args[key] = value;
        }
      }
      spec.tasks.push_back(std::move(task));
    }
  }
  return spec;
}

json toJson(const JobSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["field"] = spec.characteristic;
  j["variables"] = spec.variables;
  j["weights"] = spec.weights;
  j["order"] = spec.order;
  j["ideal"] = spec.ideal;
  j["domain"] = spec.assertDomain;
  j["bounds"] = boundsJson(spec.bounds);
  j["matrices"] = json::array();
  for (const auto& m : spec.matrices) j["matrices"].push_back(matrixJson(m));
  j["modules"] = json::array();
  for (const auto& m : spec.modules) j["modules"].push_back(moduleJson(m));
  j["tasks"] = json::array();
  for (const auto& t : spec.tasks) {
    json task = t.args;
    task["op"] = t.op;
    if (t.bounds) task["bounds"] = boundsJson(*t.bounds);
    if (!t.expect.is_null()) task["expect"] = t.expect;
    j["tasks"].push_back(std::move(task));
  }
  return j;
}

std::string printJob(const JobSpec& spec) { return toJson(spec).dump(2) + "\n"; }

std::string toolVersion() { return "0.1.0"; }

}  // namespace hwprobe::cli
