#include <chrono>
#include <functional>
#include <map>
#include <set>

#include <hwprobe/error.hpp>
#include <hwprobe/tate.hpp>

#include "hwprobe_cli/job.hpp"

namespace hwprobe::cli {

using nlohmann::json;

namespace {

json lengthJson(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json isoJson(const IsoResult& r) {
  json j{{"verdict", toString(r.verdict)},
         {"reason", r.reason},
         {"samples", r.samplesUsed},
         {"hom_dimension", r.homDimension}};
  if (r.verdict == IsoVerdict::Iso) {
    j["twist"] = r.twist;
    j["certificate"] = r.certificate ? r.certificate->toString() : "";
  }
  return j;
}

class Context {
 public:
  Context(const JobSpec& spec, std::uint64_t seed) : spec_(spec), seed_(seed) {
    OrderKind order = spec.order == "lex" ? OrderKind::Lex : OrderKind::WeightedRevLex;
    ambient_ = std::make_shared<const PolyRing>(PrimeField(spec.characteristic), spec.variables,
                                                spec.weights, order);
    std::vector<Poly> ideal;
    for (std::size_t i = 0; i < spec.ideal.size(); ++i)
      ideal.push_back(poly(spec.ideal[i], "ideal[" + std::to_string(i) + "]"));
    ring_ = QuotientRing::create(ambient_, ideal, spec.assertDomain);
    for (const auto& m : spec.matrices) {
      if (matrices_.count(m.name)) throw InputError("matrix '" + m.name + "' defined twice");
      matrices_[m.name] = buildMatrix(m);
    }
    for (const auto& m : spec.modules) {
      if (moduleSpecs_.count(m.name)) throw InputError("module '" + m.name + "' defined twice");
      moduleSpecs_[m.name] = &m;
    }
    for (const auto& m : spec.modules) checkModuleRefs(m);
  }

  const QuotientRingPtr& ring() const { return ring_; }
  const PolyRingPtr& ambient() const { return ambient_; }
  std::uint64_t seed() const { return seed_; }

  Poly poly(const std::string& text, const std::string& where) const {
    try {
      return parsePoly(*ambient_, text);
    } catch (const ParseError& e) {
      throw ParseError("bad polynomial in " + where, e.line(), e.column(), e.token());
    }
  }

  bool hasModule(const std::string& name) const { return moduleSpecs_.count(name) > 0; }
  bool hasMatrix(const std::string& name) const { return matrices_.count(name) > 0; }

  const Matrix& matrix(const std::string& name) const {
    auto it = matrices_.find(name);
    if (it == matrices_.end()) throw InputError("undefined matrix '" + name + "'");
    return it->second;
  }

  /// Built lazily so that a failing construction only affects tasks using it.
  const PresentedModule& module(const std::string& name) {
    auto it = modules_.find(name);
    if (it != modules_.end()) return it->second;
    auto spec = moduleSpecs_.find(name);
    if (spec == moduleSpecs_.end()) throw InputError("undefined module '" + name + "'");
    if (building_.count(name)) throw InputError("module '" + name + "' is defined in terms of itself");
    building_.insert(name);
    PresentedModule m = build(*spec->second);
    building_.erase(name);
    return modules_.emplace(name, std::move(m)).first->second;
  }

 private:
  Matrix buildMatrix(const MatrixSpec& m) const {
    const std::size_t rows = m.entries.size();
    const std::size_t cols = rows == 0 ? m.colDegrees.size() : m.entries.front().size();
    std::vector<std::vector<Poly>> e(rows, std::vector<Poly>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        e[i][j] = poly(m.entries[i][j], "matrix '" + m.name + "' entry (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
    std::vector<int> colDegrees = m.colDegrees;
    if (colDegrees.empty()) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::optional<int> d;
        for (std::size_t i = 0; i < rows && !d; ++i)
          if (!e[i][j].isZero()) d = e[i][j].lead().mono.degree + m.rowDegrees[i];
        if (!d) throw InputError("matrix '" + m.name + "': cannot infer the degree of zero column " +
                                 std::to_string(j));
        colDegrees.push_back(*d);
      }
    }
    Matrix out(ambient_, m.rowDegrees, colDegrees);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.set(static_cast<int>(i), static_cast<int>(j), e[i][j]);
    if (!out.isHomogeneous()) throw InputError("matrix '" + m.name + "' is not homogeneous");
    return out;
  }

  void checkModuleRefs(const ModuleSpec& m) const {
    auto need = [&](const std::string& name) {
      if (!hasModule(name))
        throw InputError("module '" + m.name + "' refers to undefined module '" + name + "'");
    };
    if (m.kind == "coker" && !hasMatrix(m.matrix))
      throw InputError("module '" + m.name + "' refers to undefined matrix '" + m.matrix + "'");
    if (m.kind == "syzygy" || m.kind == "dual" || m.kind == "transpose" || m.kind == "twist") need(m.of);
    for (const auto& p : m.parts) need(p);
  }

  PresentedModule build(const ModuleSpec& m) {
    if (m.kind == "quotient") {
      std::vector<Poly> ideal;
      for (std::size_t i = 0; i < m.ideal.size(); ++i)
        ideal.push_back(poly(m.ideal[i], "module '" + m.name + "'"));
      return PresentedModule::quotient(ring_, ideal, m.twist);
    }
    if (m.kind == "coker") return PresentedModule::present(ring_, matrix(m.matrix));
    if (m.kind == "free") return PresentedModule::freeModule(ring_, m.twists);
    if (m.kind == "syzygy") return syzygyModule(module(m.of), m.index);
    if (m.kind == "dual") return dual(module(m.of));
    if (m.kind == "transpose") return transpose(module(m.of));
    if (m.kind == "twist") return module(m.of).twisted(m.twist);
    PresentedModule acc = module(m.parts.front());
    for (std::size_t i = 1; i < m.parts.size(); ++i)
      acc = m.kind == "sum" ? directSum(acc, module(m.parts[i])) : tensor(acc, module(m.parts[i]));
    return acc;
  }

  const JobSpec& spec_;
  std::uint64_t seed_;
  PolyRingPtr ambient_;
  QuotientRingPtr ring_;
  std::map<std::string, Matrix> matrices_;
  std::map<std::string, const ModuleSpec*> moduleSpecs_;
  std::map<std::string, PresentedModule> modules_;
  std::set<std::string> building_;
};

struct TaskEnv {
  Context& ctx;
  const json& args;
  const Bounds& bounds;
  TaskReport& report;

  std::string str(const char* key) const {
    if (!args.contains(key) || !args.at(key).is_string())
      throw InputError("task '" + report.op + "' needs string argument '" + key + "'");
    return args.at(key).get<std::string>();
  }
  int integer(const char* key, std::optional<int> fallback = std::nullopt) const {
    if (!args.contains(key)) {
      if (fallback) return *fallback;
      throw InputError("task '" + report.op + "' needs integer argument '" + key + "'");
    }
    if (!args.at(key).is_number_integer())
      throw InputError("task '" + report.op + "' argument '" + key + "' must be an integer");
    return args.at(key).get<int>();
  }
  const PresentedModule& mod(const char* key) const { return ctx.module(str(key)); }
  IsoOptions iso() const {
    IsoOptions o;
    o.twistWindow = bounds.twistWindow;
    o.sampleBudget = static_cast<std::size_t>(bounds.isoSamples);
    o.seed = ctx.seed();
    return o;
  }
};

using Handler = std::function<json(TaskEnv&)>;

const std::map<std::string, std::vector<const char*>>& moduleArgs() {
  static const std::map<std::string, std::vector<const char*>> table = {
      {"presentation", {"module"}},     {"resolution", {"module"}},
      {"betti", {"module"}},            {"complexity", {"module"}},
      {"hilbert", {"module"}},          {"length", {"module"}},
      {"krull_dim", {"module"}},        {"depth", {"module"}},
      {"grade", {"module"}},            {"rank", {"module"}},
      {"rank_by_minors", {"module"}},   {"nonfree_locus", {"module"}},
      {"fitting", {"module"}},          {"torsion", {"module"}},
      {"tor", {"m", "n"}},              {"ext", {"m", "n"}},
      {"tor_lengths", {"m", "n"}},      {"ext_lengths", {"m", "n"}},
      {"tate_tor", {"m", "n"}},         {"tate_ext", {"m", "n"}},
      {"is_isomorphic", {"m", "n"}},    {"periodicity", {"module"}},
      {"matrix_factorization", {"module"}}, {"complete_resolution", {"module"}},
      {"theta", {"m", "n"}},            {"theta_additivity", {"module", "y"}},
      {"rigidity", {"m", "n"}},         {"hw_check", {"module"}},
      {"even_dim_torsion", {"module"}}, {"depth_zero", {"module"}},
      {"tor1_transpose", {"module"}},   {"exactness", {}},
  };
  return table;
}

std::vector<json> lengthsOver(int from, int to, const std::function<std::optional<std::int64_t>(int)>& f) {
  std::vector<json> out;
  for (int i = from; i <= to; ++i) out.push_back(lengthJson(f(i)));
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"presentation",
       [](TaskEnv& e) {
         const auto& m = e.mod("module");
         return json{{"generator_degrees", m.generatorDegrees()},
                     {"relation_degrees", m.presentation().colDegrees()},
                     {"matrix", m.presentation().toString()}};
       }},
      {"resolution",
       [](TaskEnv& e) {
         Resolution r = minimalFreeResolution(e.mod("module"), e.integer("length", e.bounds.window));
         return json{{"betti", r.betti()}, {"minimal", r.isMinimal()}, {"complex", r.isComplex(*e.ctx.ring())}};
       }},
      {"betti",
       [](TaskEnv& e) {
         return json{{"betti", bettiNumbers(e.mod("module"), e.integer("window", e.bounds.window))}};
       }},
      {"complexity",
       [](TaskEnv& e) {
         auto c = complexityEstimate(e.mod("module"), e.integer("window", e.bounds.window));
         json j{{"class", toString(c.kind)}, {"betti", c.betti}};
         if (c.kind == ComplexityClass::PdFinite) j["projective_dimension"] = c.projectiveDimension;
         if (c.kind == ComplexityClass::PolynomialGrowth) j["fitted_degree"] = c.fittedDegree;
         return j;
       }},
      {"hilbert",
       [](TaskEnv& e) {
         const auto& m = e.mod("module");
         const auto& hs = m.hilbertSeries();
         return json{{"from", e.integer("from", 0)},
                     {"values", hilbertFunction(m, e.integer("from", 0), e.integer("to", 10))},
                     {"numerator", hs.numerator.toString()},
                     {"dimension", hs.dimension()},
                     {"length", lengthJson(hs.length())}};
       }},
      {"length", [](TaskEnv& e) { return json{{"value", lengthJson(length(e.mod("module")))}}; }},
      {"krull_dim", [](TaskEnv& e) { return json{{"value", krullDim(e.mod("module"))}}; }},
      {"depth", [](TaskEnv& e) { return json{{"value", depth(e.mod("module"))}}; }},
      {"grade", [](TaskEnv& e) { return json{{"value", grade(e.mod("module"))}}; }},
      {"rank", [](TaskEnv& e) { return json{{"value", rank(e.mod("module"))}}; }},
      {"rank_by_minors",
       [](TaskEnv& e) {
         auto r = rankByMinors(e.mod("module"));
         return json{{"value", r ? json(*r) : json(nullptr)}};
       }},
      {"nonfree_locus", [](TaskEnv& e) { return json{{"dimension", nonfreeLocusDim(e.mod("module"))}}; }},
      {"fitting",
       [](TaskEnv& e) {
         const auto& m = e.mod("module");
         return json{{"j", e.integer("j")},
                     {"dimension", idealQuotientDim(m.ring(), fittingIdeal(m, e.integer("j")))}};
       }},
      {"torsion",
       [](TaskEnv& e) {
         const auto& m = e.mod("module");
         const std::string method = e.args.value("method", std::string("auto"));
         Subquotient t = method == "saturation"   ? torsionBySaturation(m)
                         : method == "biduality" ? torsionByBiduality(m)
                         : method == "auto"      ? torsionSubmodule(m)
                                                 : throw InputError("unknown torsion method '" + method + "'");
         return json{{"method", method}, {"length", lengthJson(t.length())}, {"zero", t.isZero()}};
       }},
      {"tor",
       [](TaskEnv& e) {
         auto sq = torSubquotient(e.mod("m"), e.mod("n"), e.integer("index"));
         return json{{"index", e.integer("index")}, {"length", lengthJson(sq.length())},
                     {"dimension", sq.hilbertSeries().dimension()}};
       }},
      {"ext",
       [](TaskEnv& e) {
         auto sq = extSubquotient(e.mod("m"), e.mod("n"), e.integer("index"));
         return json{{"index", e.integer("index")}, {"length", lengthJson(sq.length())},
                     {"dimension", sq.hilbertSeries().dimension()}};
       }},
      {"tor_lengths",
       [](TaskEnv& e) {
         const auto& m = e.mod("m");
         const auto& n = e.mod("n");
         int from = e.integer("from", 0), to = e.integer("to", e.bounds.window);
         return json{{"from", from}, {"to", to},
                     {"lengths", lengthsOver(from, to, [&](int i) { return torSubquotient(m, n, i).length(); })}};
       }},
      {"ext_lengths",
       [](TaskEnv& e) {
         const auto& m = e.mod("m");
         const auto& n = e.mod("n");
         int from = e.integer("from", 0), to = e.integer("to", e.bounds.window);
         return json{{"from", from}, {"to", to},
                     {"lengths", lengthsOver(from, to, [&](int i) { return extSubquotient(m, n, i).length(); })}};
       }},
      {"tate_tor",
       [](TaskEnv& e) {
         auto t = completeResolution(e.mod("m"), e.bounds.window);
         const auto& n = e.mod("n");
         int from = e.integer("from", -e.bounds.window), to = e.integer("to", e.bounds.window);
         return json{{"from", from}, {"to", to}, {"period", t.period},
                     {"lengths", lengthsOver(from, to, [&](int i) { return tateTorSubquotient(t, n, i).length(); })}};
       }},
      {"tate_ext",
       [](TaskEnv& e) {
         auto t = completeResolution(e.mod("m"), e.bounds.window);
         const auto& n = e.mod("n");
         int from = e.integer("from", -e.bounds.window), to = e.integer("to", e.bounds.window);
         return json{{"from", from}, {"to", to}, {"period", t.period},
                     {"lengths", lengthsOver(from, to, [&](int i) { return tateExtSubquotient(t, n, i).length(); })}};
       }},
      {"is_isomorphic",
       [](TaskEnv& e) {
         IsoOptions o = e.iso();
         o.allowTwist = e.args.value("allow_twist", true);
         const auto& m = e.mod("m");
         const auto& n = e.mod("n");
         IsoResult r = isIsomorphic(m, n, o);
         json j = isoJson(r);
         if (r.certificate) j["certificate_verified"] = verifyIsoCertificate(m, n, *r.certificate);
         e.report.anomaly = r.certificate && !verifyIsoCertificate(m, n, *r.certificate);
         return j;
       }},
      {"periodicity",
       [](TaskEnv& e) {
         const int q = e.integer("q", 2);
         json j = isoJson(periodicityCheck(e.mod("module"), q, e.iso()));
         j["q"] = q;
         return j;
       }},
      {"matrix_factorization",
       [](TaskEnv& e) {
         auto mf = matrixFactorization(e.mod("module"));
         return json{{"size", mf.size()}, {"a", mf.a.toString()}, {"b", mf.b.toString()},
                     {"f", mf.ring->ambient().toString(mf.f)}, {"verified", mf.verify()}};
       }},
      {"complete_resolution",
       [](TaskEnv& e) {
         auto t = completeResolution(e.mod("module"), e.bounds.window);
         json maps = json::array();
         for (const auto& m : t.maps) maps.push_back(m.toString());
         return json{{"period", t.period},
                     {"start", t.start},
                     {"shift", t.shift},
                     {"agrees_from", t.agreesFrom},
                     {"source", t.fromFactorization ? "matrix-factorization" : "detected"},
                     {"acyclic_window", t.window},
                     {"maps", maps}};
       }},
      {"theta",
       [](TaskEnv& e) {
         auto t = theta(e.mod("m"), e.mod("n"));
         const int n = t.stableIndex;
         return json{{"value", t.value},
                     {"stable_index", n},
                     {"replacement_index", t.replacementIndex},
                     {"tor_indices", {2 * n - 1, 2 * n, 2 * n + 1, 2 * n + 2}},
                     {"lengths", t.lengths},
                     {"certificate", t.certificate}};
       }},
      {"theta_additivity",
       [](TaskEnv& e) {
         const auto& y = e.mod("y");
         if (!e.args.contains("elements") || !e.args.at("elements").is_array())
           throw InputError("task 'theta_additivity' needs an 'elements' array");
         FreeModule f = y.generatorModule();
         std::vector<Vec> elements;
         for (const auto& el : e.args.at("elements")) {
           auto entries = el.get<std::vector<std::string>>();
           if (static_cast<int>(entries.size()) != f.rank())
             throw InputError("theta_additivity element has the wrong number of entries");
           std::vector<Poly> polys;
           for (const auto& s : entries) polys.push_back(e.ctx.poly(s, "theta_additivity element"));
           Vec v = f.fromColumn(polys);
           if (!v.isZero() && !f.isHomogeneous(v)) throw InputError("theta_additivity element is not homogeneous");
           elements.push_back(std::move(v));
         }
         auto r = thetaAdditivityCheck(e.mod("module"), sequenceFromSubmodule(y, elements));
         e.report.anomaly = !r.holds;
         return json{{"theta_x", r.thetaX}, {"theta_y", r.thetaY}, {"theta_z", r.thetaZ}, {"holds", r.holds}};
       }},
      {"rigidity",
       [](TaskEnv& e) {
         auto r = rigidityProbe(e.mod("m"), e.mod("n"), e.integer("window", e.bounds.window));
         json lengths = json::array();
         for (const auto& l : r.lengths) lengths.push_back(lengthJson(l));
         e.report.anomaly = r.anomaly;
         return json{{"window", r.window}, {"lengths", lengths}, {"gaps", r.gaps},
                     {"periodic", r.periodic}, {"hypotheses_hold", r.hypothesesHold}, {"anomaly", r.anomaly}};
       }},
      {"hw_check",
       [](TaskEnv& e) {
         auto r = hwCheck(e.mod("module"), e.iso());
         e.report.anomaly = r.verdict == HwVerdict::CounterexampleCandidate || !r.detectorsAgree;
         json j{{"torsion_length", r.torsionLength},
                {"torsion_length_biduality", r.torsionLengthBiduality},
                {"periodic", toString(r.periodic)},
                {"detectors_agree", r.detectorsAgree},
                {"recheck", r.recheckPerformed},
                {"degree_bound", r.degreeBound},
                {"verdict", toString(r.verdict)}};
         j["tate_tor0_nonzero"] = r.tateChecked ? json(r.tateNonzero) : json(nullptr);
         j["ext1_nonzero"] = r.extChecked ? json(r.extNonzero) : json(nullptr);
         if (r.periodic == IsoVerdict::Iso) j["periodic_twist"] = r.periodicTwist;
         if (!r.certificate.empty()) j["certificate"] = r.certificate;
         return j;
       }},
      {"even_dim_torsion",
       [](TaskEnv& e) {
         auto r = evenDimTorsionCheck(e.mod("module"), e.iso());
         e.report.anomaly = !r.torsionNonzero;
         return json{{"torsion_length", r.torsionLength < 0 ? json(nullptr) : json(r.torsionLength)},
                     {"torsion_nonzero", r.torsionNonzero},
                     {"periodic_twist", r.periodicTwist}};
       }},
      {"depth_zero",
       [](TaskEnv& e) {
         auto r = depthZeroCheck(e.mod("module"), e.bounds.window);
         e.report.anomaly = !r.holds;
         return json{{"depth", r.depth}, {"holds", r.holds}};
       }},
      {"tor1_transpose",
       [](TaskEnv& e) {
         const auto& m = e.mod("module");
         auto sq = torSubquotient(m, transpose(m), 1);
         bool nonzero = !sq.isZero();
         e.report.anomaly = !m.isFree() && !nonzero;
         return json{{"length", lengthJson(sq.length())}, {"nonzero", nonzero}, {"free", m.isFree()}};
       }},
      {"exactness",
       [](TaskEnv& e) {
         if (!e.args.contains("matrices") || !e.args.at("matrices").is_array())
           throw InputError("task 'exactness' needs a 'matrices' array");
         std::vector<Matrix> d;
         for (const auto& name : e.args.at("matrices")) d.push_back(e.ctx.matrix(name.get<std::string>()));
         const auto& ring = e.ctx.ring();
         auto r = PresentedModule::freeModule(ring, {0});
         bool complex = true, exact = true;
         json homology = json::array();
         for (std::size_t k = 0; k + 1 < d.size(); ++k) {
           if (d[k].colDegrees() != d[k + 1].rowDegrees())
             throw InputError("exactness: matrices " + std::to_string(k + 1) + " and " +
                              std::to_string(k + 2) + " do not compose");
           Matrix prod = d[k] * d[k + 1];
           for (int i = 0; i < prod.rows(); ++i)
             for (int j = 0; j < prod.cols(); ++j) complex = complex && ring->isZero(prod.at(i, j));
         }
         if (complex)
           for (std::size_t k = 0; k + 1 < d.size(); ++k) {
             auto sq = homologyAt(ring, d[k].colDegrees(), d[k + 1], d[k], r);
             homology.push_back(lengthJson(sq.length()));
             exact = exact && sq.isZero();
           }
         return json{{"complex", complex}, {"exact", complex && exact}, {"homology_lengths", homology},
                     {"degrees_checked", static_cast<int>(d.size()) - 1}};
       }},
  };
  return table;
}

bool matches(const json& actual, const json& expected) {
  if (expected.is_object() && expected.contains("at_least"))
    return actual.is_number() && actual.get<double>() >= expected.at("at_least").get<double>();
  if (expected.is_object() && expected.contains("contains")) {
    if (!actual.is_array()) return false;
    for (const auto& v : actual)
      if (v == expected.at("contains")) return true;
    return false;
  }
  if (expected.is_object() && actual.is_object()) {
    for (const auto& [key, value] : expected.items())
      if (!actual.contains(key) || !matches(actual.at(key), value)) return false;
    return true;
  }
  return actual == expected;
}

void validate(const JobSpec& spec, Context& ctx) {
  for (std::size_t i = 0; i < spec.tasks.size(); ++i) {
    const auto& t = spec.tasks[i];
    const std::string where = "tasks[" + std::to_string(i) + "]";
    auto it = moduleArgs().find(t.op);
    if (it == moduleArgs().end()) throw InputError(where + ": unknown operation '" + t.op + "'");
    for (const char* key : it->second) {
      if (!t.args.contains(key) || !t.args.at(key).is_string())
        throw InputError(where + ": operation '" + t.op + "' needs module argument '" + key + "'");
      if (!ctx.hasModule(t.args.at(key).get<std::string>()))
        throw InputError(where + ": undefined module '" + t.args.at(key).get<std::string>() + "'");
    }
    if (t.op == "exactness" && t.args.contains("matrices") && t.args.at("matrices").is_array())
      for (const auto& name : t.args.at("matrices"))
        if (!name.is_string() || !ctx.hasMatrix(name.get<std::string>()))
          throw InputError(where + ": undefined matrix " + name.dump());
  }
}

}  // namespace

bool Report::hasAnomaly() const {
  for (const auto& t : tasks)
    if (t.anomaly || t.expectation == "failed") return true;
  return false;
}

std::string sha256Hex(const std::string& text);

Report runJob(const JobSpec& spec, const RunOptions& options) {
  Report report;
  report.job = spec.name;
  report.version = toolVersion();
  report.inputHash = sha256Hex(printJob(spec));
  report.bounds = spec.bounds;
  if (options.degreeBound) report.bounds.degree = *options.degreeBound;
  if (options.window) report.bounds.window = *options.window;
  report.seed = options.seed;
  std::optional<ScopedLimits> setup;
  setup.emplace(Limits{report.bounds.degree});
  Context ctx(spec, options.seed);
  validate(spec, ctx);
  setup.reset();
  for (const auto& task : spec.tasks) {
    TaskReport tr;
    tr.op = task.op;
    tr.args = task.args;
    tr.expect = task.expect;
    tr.bounds = task.bounds.value_or(spec.bounds);
    if (options.degreeBound) tr.bounds.degree = *options.degreeBound;
    if (options.window) tr.bounds.window = *options.window;
    const auto start = std::chrono::steady_clock::now();
    try {
      ScopedLimits limits(Limits{tr.bounds.degree});
      TaskEnv env{ctx, task.args, tr.bounds, tr};
      tr.result = handlers().at(task.op)(env);
    } catch (const DegreeBoundExceeded& e) {
      tr.status = TaskStatus::Truncated;
      tr.error = e.what();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      tr.status = TaskStatus::Error;
      tr.error = e.what();
    }
    tr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!tr.expect.is_null()) {
      if (tr.expect.is_object() && tr.expect.contains("error")) {
        tr.expectation = tr.status == TaskStatus::Error ? "met" : "failed";
      } else {
        tr.expectation = tr.status == TaskStatus::Ok && matches(tr.result, tr.expect) ? "met" : "failed";
      }
    }
    report.tasks.push_back(std::move(tr));
  }
  return report;
}

}  // namespace hwprobe::cli
