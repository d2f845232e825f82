#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

#include "hwprobe_cli/job.hpp"

namespace hwprobe::cli {

using nlohmann::json;

std::string sha256Hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_Digest(text.data(), text.size(), digest, &size, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < size; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

const char* statusName(TaskStatus s) {
  switch (s) {
    case TaskStatus::Ok: return "ok";
    case TaskStatus::Error: return "error";
    case TaskStatus::Truncated: return "truncated";
  }
  return "error";
}

json boundsJson(const Bounds& b) {
  return {{"degree", b.degree}, {"window", b.window}, {"twist_window", b.twistWindow},
          {"iso_samples", b.isoSamples}};
}

}  // namespace

json toJson(const Report& report) {
  json tasks = json::array();
  int errors = 0, truncated = 0, anomalies = 0, failed = 0;
  for (const auto& t : report.tasks) {
    json j{{"op", t.op},
           {"args", t.args},
           {"bounds", boundsJson(t.bounds)},
           {"status", statusName(t.status)},
           {"result", t.result},
           {"anomaly", t.anomaly},
           {"expectation", t.expectation}};
    if (!t.error.empty()) j["error"] = t.error;
    if (!t.expect.is_null()) j["expect"] = t.expect;
    tasks.push_back(std::move(j));
    errors += t.status == TaskStatus::Error;
    truncated += t.status == TaskStatus::Truncated;
    anomalies += t.anomaly;
    failed += t.expectation == "failed";
  }
  return json{{"tool", "hwprobe"},
              {"version", report.version},
              {"job", report.job},
              {"input_hash", report.inputHash},
              {"seed", report.seed},
              {"bounds", boundsJson(report.bounds)},
              {"tasks", tasks},
              {"summary",
               {{"tasks", report.tasks.size()},
                {"errors", errors},
                {"truncated", truncated},
                {"anomalies", anomalies},
                {"expectations_failed", failed}}}};
}

std::string emitStructured(const Report& report) { return toJson(report).dump(2) + "\n"; }

std::string emitText(const Report& report) {
  std::ostringstream out;
  const json j = toJson(report);
  out << "job " << report.job << " (hwprobe " << report.version << ")\n";
  out << "input sha256 " << report.inputHash << "\n";
  out << "bounds: degree " << report.bounds.degree << ", window " << report.bounds.window
      << ", twist window " << report.bounds.twistWindow << ", iso samples " << report.bounds.isoSamples
      << ", seed " << report.seed << "\n";
  for (std::size_t i = 0; i < report.tasks.size(); ++i) {
    const auto& t = report.tasks[i];
    out << "\n[" << i + 1 << "] " << t.op;
    for (const auto& [key, value] : t.args.items())
      if (value.is_string()) out << " " << key << "=" << value.get<std::string>();
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3fs", t.seconds);
    out << "  " << statusName(t.status) << "  " << seconds << "\n";
    if (!t.error.empty()) out << "    error: " << t.error << "\n";
    for (const auto& [key, value] : t.result.items()) {
      out << "    " << key << ": ";
      if (value.is_string())
        out << value.get<std::string>();
      else
        out << value.dump();
      out << "\n";
    }
    if (t.expectation != "none") out << "    expectation: " << t.expectation << "\n";
    if (t.anomaly) out << "    ANOMALY\n";
  }
  const auto& s = j.at("summary");
  out << "\nsummary: " << s.at("tasks") << " tasks, " << s.at("errors") << " errors, " << s.at("truncated")
      << " truncated, " << s.at("anomalies") << " anomalies, " << s.at("expectations_failed")
      << " failed expectations\n";
  return out.str();
}

}  // namespace hwprobe::cli
