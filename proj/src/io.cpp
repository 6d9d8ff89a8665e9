#include "hohf/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hohf {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
}

Mode parse_mode(const std::string& s) {
  if (s == "strict") return Mode::Strict;
  if (s == "lenient") return Mode::Lenient;
  fail(errc::schema_error, "unknown mode '" + s + "'");
}

CombinePolicy parse_policy(const std::string& s) {
  if (s == "typewise") return CombinePolicy::Typewise;
  if (s == "strict-uniform") return CombinePolicy::StrictUniform;
  fail(errc::schema_error, "unknown policy '" + s + "'");
}

DistanceMetric parse_metric(const std::string& s) {
  if (s == "l1") return DistanceMetric::L1;
  if (s == "maxmin") return DistanceMetric::MaxMin;
  fail(errc::schema_error, "unknown metric '" + s + "'");
}

const char* mode_name(Mode m) {
  return m == Mode::Strict ? "strict" : "lenient";
}
const char* policy_name(CombinePolicy p) {
  return p == CombinePolicy::Typewise ? "typewise" : "strict-uniform";
}
const char* metric_name(DistanceMetric m) {
  return m == DistanceMetric::L1 ? "l1" : "maxmin";
}

Options read_options(const json& j, const OptionOverrides& ov) {
  Options o;
  if (j.contains("options")) {
    const json& jo = j.at("options");
    if (!jo.is_object()) fail(errc::schema_error, "options must be an object");
    if (jo.contains("mode")) o.mode = parse_mode(jo.at("mode"));
    if (jo.contains("policy")) o.policy = parse_policy(jo.at("policy"));
    if (jo.contains("metric")) o.metric = parse_metric(jo.at("metric"));
    if (jo.contains("format")) o.format = jo.at("format");
  }
  if (ov.mode) o.mode = *ov.mode;
  if (ov.policy) o.policy = *ov.policy;
  if (ov.metric) o.metric = *ov.metric;
  if (ov.format) o.format = *ov.format;
  if (o.format != "table" && o.format != "json")
    fail(errc::schema_error, "unknown format '" + o.format + "'");
  return o;
}

std::vector<double> number_array(const json& j, std::size_t expected = 0) {
  if (!j.is_array()) fail(errc::schema_error, "expected an array of numbers");
  std::vector<double> out;
  for (const json& e : j) {
    if (!e.is_number()) fail(errc::schema_error, "expected a number");
    out.push_back(e.get<double>());
  }
  if (expected && out.size() != expected)
    fail(errc::schema_error, "wrong array length");
  return out;
}

GValue parse_gvalue(const json& j) {
  if (!j.is_object() || j.size() != 1)
    fail(errc::schema_error,
         "a value must be an object with exactly one variant tag");
  if (j.contains("crisp")) {
    if (!j.at("crisp").is_number())
      fail(errc::schema_error, "crisp takes a number");
    return GValue::crisp(j.at("crisp").get<double>());
  }
  if (j.contains("tfn")) {
    auto v = number_array(j.at("tfn"), 3);
    return GValue::tfn(v[0], v[1], v[2]);
  }
  if (j.contains("hfe")) {
    auto v = number_array(j.at("hfe"));
    if (v.empty()) fail(errc::schema_error, "hfe must be nonempty");
    return GValue::hfe(std::move(v));
  }
  if (j.contains("ifs")) {
    auto v = number_array(j.at("ifs"), 2);
    return GValue::intu(v[0], v[1]);
  }
  if (j.contains("interval")) {
    auto v = number_array(j.at("interval"), 2);
    return GValue::interval(v[0], v[1]);
  }
  fail(errc::schema_error, "unknown value tag " + j.begin().key());
}

json gvalue_json(const GValue& g) {
  switch (g.kind()) {
    case Kind::Crisp:
      return json{{"crisp", g.as_crisp().m}};
    case Kind::Tfn: {
      const Tfn& t = g.as_tfn();
      return json{{"tfn", {t.a1, t.a2, t.a3}}};
    }
    case Kind::Hfe:
      return json{{"hfe", g.as_hfe().values}};
    case Kind::IntuPair: {
      const IntuPair& p = g.as_intu();
      return json{{"ifs", {p.mu, p.nu}}};
    }
  }
  fail(errc::internal_error, "unreachable variant");
}

std::uint32_t subset_mask(const json& labels_json,
                          const std::vector<std::string>& criteria) {
  if (!labels_json.is_array())
    fail(errc::schema_error, "subset must be an array of criterion labels");
  std::uint32_t mask = 0;
  for (const json& l : labels_json) {
    const std::string label = l.get<std::string>();
    bool found = false;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      if (criteria[j] == label) {
        mask |= 1u << j;
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::schema_error, "unknown criterion '" + label + "' in subset");
  }
  return mask;
}

FuzzyMeasure parse_measure(const json& j,
                           const std::vector<std::string>& criteria,
                           Mode mode) {
  if (!j.is_object()) fail(errc::schema_error, "measure must be an object");
  const int n = static_cast<int>(criteria.size());
  if (j.contains("table")) {
    const json& entries = j.at("table");
    if (!entries.is_array())
      fail(errc::schema_error, "measure table must be an array");
    const std::uint32_t size = 1u << n;
    std::vector<double> values(size, 0.0);
    std::vector<char> seen(size, 0);
    seen[0] = 1;  // empty set may be left implicit
    for (const json& e : entries) {
      const std::uint32_t mask = subset_mask(e.at("subset"), criteria);
      if (!e.at("value").is_number())
        fail(errc::schema_error, "measure value must be a number");
      values[mask] = e.at("value").get<double>();
      seen[mask] = 1;
    }
    for (std::uint32_t s = 0; s < size; ++s)
      if (!seen[s])
        fail(errc::missing_subset, "measure table is missing a subset");
    return FuzzyMeasure::from_table(n, std::move(values), mode);
  }
  if (j.contains("rho_rule")) {
    const json& r = j.at("rho_rule");
    auto singletons = number_array(r.at("singletons"),
                                   static_cast<std::size_t>(n));
    RhoSign sign = RhoSign::Minus;
    if (r.contains("sign")) {
      const std::string s = r.at("sign");
      if (s == "plus") sign = RhoSign::Plus;
      else if (s != "minus") fail(errc::schema_error, "sign is minus|plus");
    }
    double rho = r.contains("rho") ? r.at("rho").get<double>()
                                   : measure_solve_rho(singletons, sign);
    return measure_rho_rule(singletons, rho, sign, mode);
  }
  fail(errc::schema_error, "measure needs a 'table' or a 'rho_rule'");
}

}  // namespace

ProblemSpec parse_problem_text(const std::string& text,
                               const OptionOverrides& ov) {
  const json j = parse_json(text);
  if (!j.is_object()) fail(errc::schema_error, "problem must be an object");
  ProblemSpec p;
  p.options = read_options(j, ov);

  if (!j.contains("alternatives") || !j.at("alternatives").is_array() ||
      j.at("alternatives").empty())
    fail(errc::schema_error, "nonempty 'alternatives' array required");
  if (!j.contains("criteria") || !j.at("criteria").is_array() ||
      j.at("criteria").empty())
    fail(errc::schema_error, "nonempty 'criteria' array required");
  p.matrix.alternatives = j.at("alternatives").get<std::vector<std::string>>();
  p.matrix.criteria = j.at("criteria").get<std::vector<std::string>>();

  if (!j.contains("matrix") || !j.at("matrix").is_array() ||
      j.at("matrix").size() != p.matrix.alternatives.size())
    fail(errc::schema_error,
         "'matrix' must hold one row per alternative");
  for (std::size_t i = 0; i < j.at("matrix").size(); ++i) {
    const json& row = j.at("matrix").at(i);
    if (!row.is_array() || row.size() != p.matrix.criteria.size())
      fail(errc::schema_error, "matrix row " + std::to_string(i) +
                                   " must hold one cell per criterion");
    std::vector<HOHFE> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const json& cell = row.at(c);
      if (!cell.is_array() || cell.empty())
        fail(errc::schema_error, "every cell must be a nonempty value list");
      std::vector<GValue> vals;
      for (const json& gv : cell) vals.push_back(parse_gvalue(gv));
      HOHFE h = HOHFE::of(std::move(vals));
      for (const GValue& g : h.elements()) {
        for (const ViolationRecord& v : gv_validate(g, p.options.mode)) {
          std::ostringstream where;
          where << "cell(" << p.matrix.alternatives[i] << ","
                << p.matrix.criteria[c] << ")";
          if (p.options.mode == Mode::Strict)
            fail(errc::validation_error,
                 where.str() + ": " + violation_name(v.code) + ": " + v.detail);
          p.warnings.push_back({violation_name(v.code), where.str(), v.detail});
        }
      }
      cells.push_back(std::move(h));
    }
    p.matrix.cells.push_back(std::move(cells));
  }

  if (!j.contains("measure")) fail(errc::schema_error, "'measure' required");
  p.measure = parse_measure(j.at("measure"), p.matrix.criteria,
                            p.options.mode);
  for (const MonotonicityWarning& w : p.measure.warnings()) {
    std::ostringstream detail;
    auto names = [&](std::uint32_t s) {
      std::string out = "{";
      bool first = true;
      for (std::size_t c = 0; c < p.matrix.criteria.size(); ++c)
        if (s >> c & 1u) {
          if (!first) out += ",";
          out += p.matrix.criteria[c];
          first = false;
        }
      return out + "}";
    };
    detail << "mu(" << names(w.subset_a) << ") = " << w.value_a << " > mu("
           << names(w.subset_b) << ") = " << w.value_b;
    p.warnings.push_back({"MONOTONICITY_VIOLATION", "measure", detail.str()});
  }
  if (p.measure.nonunit_total())
    p.warnings.push_back({"TOTAL_NOT_ONE", "measure",
                          "mu of the full criterion set differs from 1"});
  return p;
}

ProblemSpec parse_problem_file(const std::string& path,
                               const OptionOverrides& ov) {
  return parse_problem_text(read_file(path), ov);
}

std::string serialize_problem(const ProblemSpec& p) {
  json j;
  j["alternatives"] = p.matrix.alternatives;
  j["criteria"] = p.matrix.criteria;
  json rows = json::array();
  for (const auto& row : p.matrix.cells) {
    json jrow = json::array();
    for (const HOHFE& h : row) {
      json cell = json::array();
      for (const GValue& g : h.elements()) cell.push_back(gvalue_json(g));
      jrow.push_back(std::move(cell));
    }
    rows.push_back(std::move(jrow));
  }
  j["matrix"] = std::move(rows);

  json entries = json::array();
  const std::uint32_t size = 1u << p.measure.n();
  for (std::uint32_t s = 0; s < size; ++s) {
    json labels = json::array();
    for (std::size_t c = 0; c < p.matrix.criteria.size(); ++c)
      if (s >> c & 1u) labels.push_back(p.matrix.criteria[c]);
    entries.push_back(json{{"subset", std::move(labels)},
                           {"value", p.measure.at(s)}});
  }
  j["measure"] = json{{"table", std::move(entries)}};
  j["options"] = json{{"mode", mode_name(p.options.mode)},
                      {"policy", policy_name(p.options.policy)},
                      {"metric", metric_name(p.options.metric)},
                      {"format", p.options.format}};
  return j.dump(2);
}

RankingsSpec parse_rankings_text(const std::string& text,
                                 const OptionOverrides& ov) {
  const json j = parse_json(text);
  if (!j.is_object()) fail(errc::schema_error, "rankings must be an object");
  RankingsSpec r;
  if (!j.contains("techniques") || !j.at("techniques").is_array() ||
      j.at("techniques").empty())
    fail(errc::schema_error, "nonempty 'techniques' array required");
  for (const json& t : j.at("techniques")) {
    RankingOrder ro;
    ro.label = t.at("label").get<std::string>();
    ro.order = t.at("order").get<std::vector<std::string>>();
    r.orders.push_back(std::move(ro));
    if (t.contains("dominance")) {
      r.dominance_overrides.push_back(
          t.at("dominance").get<DominanceVector>());
    } else {
      r.dominance_overrides.push_back(std::nullopt);
    }
  }
  if (j.contains("alternatives")) {
    r.alternatives = j.at("alternatives").get<std::vector<std::string>>();
  } else {
    r.alternatives = r.orders.front().order;
    std::sort(r.alternatives.begin(), r.alternatives.end());
  }
  if (j.contains("options") && j.at("options").contains("metric"))
    r.metric = parse_metric(j.at("options").at("metric"));
  if (ov.metric) r.metric = *ov.metric;
  return r;
}

RankingsSpec parse_rankings_file(const std::string& path,
                                 const OptionOverrides& ov) {
  return parse_rankings_text(read_file(path), ov);
}

std::string gvalue_to_string(const GValue& g) {
  char buf[64];
  std::ostringstream os;
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.4f", v);
    os << buf;
  };
  switch (g.kind()) {
    case Kind::Crisp:
      put(g.as_crisp().m);
      break;
    case Kind::Tfn: {
      const Tfn& t = g.as_tfn();
      os << '(';
      put(t.a1); os << ", ";
      put(t.a2); os << ", ";
      put(t.a3); os << ')';
      break;
    }
    case Kind::Hfe: {
      os << '{';
      bool first = true;
      for (double v : g.as_hfe().values) {
        if (!first) os << ", ";
        put(v);
        first = false;
      }
      os << '}';
      break;
    }
    case Kind::IntuPair: {
      const IntuPair& p = g.as_intu();
      os << '<';
      put(p.mu); os << ", ";
      put(p.nu); os << '>';
      break;
    }
  }
  return os.str();
}

namespace {

json warning_json(const ReportWarning& w) {
  return json{{"code", w.code}, {"where", w.where}, {"detail", w.detail}};
}

}  // namespace

std::string aggregation_report_json(const AggregationReport& r,
                                    const DecisionMatrix& dm) {
  json j;
  json alts = json::array();
  for (const AlternativeResult& a : r.results) {
    json ja;
    ja["label"] = a.label;
    json sigma = json::array();
    for (int i : a.sigma) sigma.push_back(dm.criteria[i]);
    ja["sigma"] = std::move(sigma);
    ja["weights"] = a.weights;
    json agg = json::array();
    for (const GValue& g : a.aggregate.elements())
      agg.push_back(gvalue_json(g));
    ja["aggregate"] = std::move(agg);
    ja["score"] = a.score;
    alts.push_back(std::move(ja));
  }
  j["alternatives"] = std::move(alts);
  j["ranking"] = r.ranking;
  json warns = json::array();
  for (const ReportWarning& w : r.warnings) warns.push_back(warning_json(w));
  j["warnings"] = std::move(warns);
  return j.dump(2);
}

std::string comparison_report_json(const ComparisonReport& r) {
  json j;
  j["alternatives"] = r.labels;
  json techs = json::array();
  for (const TechniqueResult& t : r.techniques) {
    techs.push_back(json{{"label", t.label},
                         {"dominance", t.dominance},
                         {"derived_dominance", t.derived},
                         {"distance", t.distance},
                         {"weight", t.weight}});
  }
  j["techniques"] = std::move(techs);
  j["collective_matrix"] = r.collective.r;
  j["collective_order"] = r.collective_order.order;
  json tiers = json::array();
  for (const Tier& t : r.tiers)
    tiers.push_back(json{{"distance", t.distance}, {"labels", t.labels}});
  j["tiers"] = std::move(tiers);
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string measure_table_json(const FuzzyMeasure& m,
                               const std::vector<std::string>& labels) {
  json entries = json::array();
  const std::uint32_t size = 1u << m.n();
  for (std::uint32_t s = 0; s < size; ++s) {
    json subset = json::array();
    for (int c = 0; c < m.n(); ++c)
      if (s >> c & 1u)
        subset.push_back(c < static_cast<int>(labels.size())
                             ? labels[c]
                             : "x" + std::to_string(c + 1));
    entries.push_back(json{{"subset", std::move(subset)},
                           {"value", m.at(s)}});
  }
  return json{{"table", std::move(entries)}}.dump(2);
}

bool problem_equal(const ProblemSpec& a, const ProblemSpec& b, double tol) {
  if (a.matrix.alternatives != b.matrix.alternatives) return false;
  if (a.matrix.criteria != b.matrix.criteria) return false;
  if (a.matrix.cells.size() != b.matrix.cells.size()) return false;
  for (std::size_t i = 0; i < a.matrix.cells.size(); ++i) {
    if (a.matrix.cells[i].size() != b.matrix.cells[i].size()) return false;
    for (std::size_t c = 0; c < a.matrix.cells[i].size(); ++c) {
      const HOHFE& x = a.matrix.cells[i][c];
      const HOHFE& y = b.matrix.cells[i][c];
      if (x.size() != y.size()) return false;
      for (std::size_t e = 0; e < x.size(); ++e)
        if (!gv_equal(x.elements()[e], y.elements()[e], tol)) return false;
    }
  }
  if (a.measure.n() != b.measure.n()) return false;
  for (std::uint32_t s = 0; s < (1u << a.measure.n()); ++s)
    if (std::fabs(a.measure.at(s) - b.measure.at(s)) > tol) return false;
  return a.options.mode == b.options.mode &&
         a.options.policy == b.options.policy &&
         a.options.metric == b.options.metric &&
         a.options.format == b.options.format;
}

}  // namespace hohf
