#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hwprobe::cli {

struct Bounds {
  int degree = 20;
  int window = 10;
  int twistWindow = 12;
  int isoSamples = 500;

  bool operator==(const Bounds&) const = default;
};

struct MatrixSpec {
  std::string name;
  std::vector<std::vector<std::string>> entries;  // row major
  std::vector<int> rowDegrees;
  /// Inferred from the first nonzero entry of each column when empty.
  std::vector<int> colDegrees;

  bool operator==(const MatrixSpec&) const = default;
};

/// One module definition. `kind` selects which of the fields is used:
/// quotient (ideal, twist), coker (matrix), free (twists), and the derived
/// kinds syzygy (of, index), dual (of), transpose (of), sum (parts),
/// tensor (parts), twist (of, twist).
struct ModuleSpec {
  std::string name;
  std::string kind;
  std::vector<std::string> ideal;
  std::string matrix;
  std::vector<int> twists;
  std::string of;
  int index = 0;
  int twist = 0;
  std::vector<std::string> parts;

  bool operator==(const ModuleSpec&) const = default;
};

struct TaskSpec {
  std::string op;
  /// Operation arguments (module names, indices, ranges).
  nlohmann::json args = nlohmann::json::object();
  std::optional<Bounds> bounds;
  /// Expected result fields; compared key by key after the run.
  nlohmann::json expect;

  bool operator==(const TaskSpec&) const = default;
};

struct JobSpec {
  std::string name;
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<int> weights;
  std::string order = "grevlex";
  std::vector<std::string> ideal;
  bool assertDomain = false;
  Bounds bounds;
  std::vector<MatrixSpec> matrices;
  std::vector<ModuleSpec> modules;
  std::vector<TaskSpec> tasks;

  bool operator==(const JobSpec&) const = default;
};

/// Parses a job document. Syntax errors carry line and column; structural
/// errors name the offending key.
JobSpec parseJob(const std::string& text);
nlohmann::json toJson(const JobSpec& spec);
std::string printJob(const JobSpec& spec);

enum class TaskStatus { Ok, Error, Truncated };

struct TaskReport {
  std::string op;
  nlohmann::json args;
  Bounds bounds;
  TaskStatus status = TaskStatus::Ok;
  nlohmann::json result = nlohmann::json::object();
  std::string error;
  nlohmann::json expect;
  /// "met", "failed" or "none".
  std::string expectation = "none";
  bool anomaly = false;
  double seconds = 0;
};

struct Report {
  std::string job;
  std::string version;
  std::string inputHash;
  Bounds bounds;
  std::uint64_t seed = 1;
  std::vector<TaskReport> tasks;

  bool hasAnomaly() const;
};

struct RunOptions {
  std::optional<int> degreeBound;
  std::optional<int> window;
  std::uint64_t seed = 1;
};

/// Executes every task in order. Mathematical failures become task-level
/// errors; malformed specs (undefined names, bad polynomials) throw
/// hwprobe::InputError.
Report runJob(const JobSpec& spec, const RunOptions& options = {});

nlohmann::json toJson(const Report& report);
std::string emitText(const Report& report);
std::string emitStructured(const Report& report);

std::vector<std::string> catalogNames();
/// Throws hwprobe::InputError listing the available names.
JobSpec catalog(const std::string& name);

std::string toolVersion();

}  // namespace hwprobe::cli
