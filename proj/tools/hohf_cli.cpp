// Command-line front end for the HOHF decision-making library. All
// computation goes through the C API; this file only parses arguments
// and renders reports.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hohf_c.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct FreeString {
  void operator()(char* s) const { hohf_free(s); }
};
using CStr = std::unique_ptr<char, FreeString>;

bool warnings_suppressed() {
  const char* v = std::getenv("HOHF_NO_WARN");
  return v && *v;
}

int die(hohf_status st) {
  std::fprintf(stderr, "error: %s\n", hohf_last_error());
  (void)st;
  return 1;
}

std::string options_json(const std::string& mode, const std::string& policy,
                         const std::string& metric,
                         const std::string& format) {
  json j;
  if (!mode.empty()) j["mode"] = mode;
  if (!policy.empty()) j["policy"] = policy;
  if (!metric.empty()) j["metric"] = metric;
  if (!format.empty()) j["format"] = format;
  return j.dump();
}

void print_warnings(const json& warns) {
  if (warnings_suppressed() || warns.empty()) return;
  std::printf("\nwarnings:\n");
  for (const json& w : warns) {
    std::printf("  [%s] %s: %s\n", w.at("code").get<std::string>().c_str(),
                w.at("where").get<std::string>().c_str(),
                w.at("detail").get<std::string>().c_str());
  }
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string value_str(const json& g) {
  if (g.contains("crisp")) return fmt4(g.at("crisp").get<double>());
  if (g.contains("tfn")) {
    const json& t = g.at("tfn");
    return "(" + fmt4(t[0]) + ", " + fmt4(t[1]) + ", " + fmt4(t[2]) + ")";
  }
  if (g.contains("hfe")) {
    std::string out = "{";
    bool first = true;
    for (const json& v : g.at("hfe")) {
      if (!first) out += ", ";
      out += fmt4(v.get<double>());
      first = false;
    }
    return out + "}";
  }
  if (g.contains("ifs")) {
    const json& p = g.at("ifs");
    return "<" + fmt4(p[0]) + ", " + fmt4(p[1]) + ">";
  }
  return g.dump();
}

void print_rank_table(const json& rep) {
  for (const json& a : rep.at("alternatives")) {
    std::printf("%s:\n", a.at("label").get<std::string>().c_str());
    std::string sigma;
    for (const json& s : a.at("sigma")) {
      if (!sigma.empty()) sigma += " > ";
      sigma += s.get<std::string>();
    }
    std::printf("  sigma:     %s\n", sigma.c_str());
    std::string w;
    for (const json& v : a.at("weights")) {
      if (!w.empty()) w += ", ";
      w += fmt4(v.get<double>());
    }
    std::printf("  weights:   %s\n", w.c_str());
    std::string agg;
    for (const json& g : a.at("aggregate")) {
      if (!agg.empty()) agg += ", ";
      agg += value_str(g);
    }
    std::printf("  aggregate: {%s}\n", agg.c_str());
    std::printf("  score:     %s\n", fmt4(a.at("score").get<double>()).c_str());
  }
  std::string order;
  for (const json& group : rep.at("ranking")) {
    if (!order.empty()) order += " > ";
    std::string g;
    for (const json& l : group) {
      if (!g.empty()) g += " ~ ";
      g += l.get<std::string>();
    }
    order += g;
  }
  std::printf("\nranking: %s\n", order.c_str());
  print_warnings(rep.at("warnings"));
}

void print_compare_table(const json& rep) {
  std::printf("%-10s %-28s %s\n", "technique", "dominance", "distance");
  for (const json& t : rep.at("techniques")) {
    std::string dom = "(";
    bool first = true;
    for (const json& v : t.at("dominance")) {
      if (!first) dom += ",";
      dom += std::to_string(v.get<int>());
      first = false;
    }
    dom += ")";
    std::printf("%-10s %-28s %g\n", t.at("label").get<std::string>().c_str(),
                dom.c_str(), t.at("distance").get<double>());
  }
  std::printf("\ncollective matrix:\n");
  for (const json& row : rep.at("collective_matrix")) {
    std::printf(" ");
    for (const json& v : row) std::printf(" %4d", v.get<int>());
    std::printf("\n");
  }
  std::string order;
  for (const json& l : rep.at("collective_order")) {
    if (!order.empty()) order += " > ";
    order += l.get<std::string>();
  }
  std::printf("\ncollective order: %s\n", order.c_str());
  std::printf("\ntiers (best first):\n");
  int rank = 1;
  for (const json& tier : rep.at("tiers")) {
    std::string labels;
    for (const json& l : tier.at("labels")) {
      if (!labels.empty()) labels += ", ";
      labels += l.get<std::string>();
    }
    std::printf("  %d. distance %g: {%s}\n", rank++,
                tier.at("distance").get<double>(), labels.c_str());
  }
  if (!warnings_suppressed()) {
    for (const json& n : rep.at("notes"))
      std::printf("note: %s\n", n.get<std::string>().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order hesitant fuzzy Choquet decision making"};
  app.require_subcommand(1);

  std::string mode, policy, metric, format;
  app.add_option("--mode", mode, "strict|lenient (default lenient)");
  app.add_option("--policy", policy,
                 "typewise|strict-uniform (default typewise)");
  app.add_option("--metric", metric, "l1|maxmin (default l1)");
  app.add_option("--format", format, "table|json (default table)");

  std::string problem_path, rankings_path, alternative;
  auto* validate = app.add_subcommand("validate", "Check a problem file");
  validate->add_option("problem", problem_path)->required();

  auto* aggregate =
      app.add_subcommand("aggregate", "Aggregate alternatives one by one");
  aggregate->add_option("problem", problem_path)->required();
  aggregate->add_option("--alternative", alternative,
                        "restrict to one alternative label");

  auto* rank = app.add_subcommand("rank", "Aggregate and rank alternatives");
  rank->add_option("problem", problem_path)->required();

  auto* compare =
      app.add_subcommand("compare", "Consensus-score technique rankings");
  compare->add_option("rankings", rankings_path)->required();

  auto* measure = app.add_subcommand("measure", "Measure utilities");
  std::vector<double> singletons;
  bool sugeno_plus = false;
  auto* solve = measure->add_subcommand(
      "solve-rho", "Solve the normalizing rho for singleton weights");
  solve->add_option("--singletons", singletons, "singleton weights")
      ->required()
      ->expected(-2);
  solve->add_flag("--sugeno-plus", sugeno_plus,
                  "use the plus-sign recurrence");

  CLI11_PARSE(app, argc, argv);

  const std::string opts = options_json(mode, policy, metric, format);
  const bool json_out = format == "json";

  if (*validate || *aggregate || *rank) {
    hohf_problem* p = nullptr;
    if (hohf_status st = hohf_problem_open(problem_path.c_str(), opts.c_str(),
                                           &p))
      return die(st);
    std::unique_ptr<hohf_problem, decltype(&hohf_problem_close)> guard(
        p, &hohf_problem_close);

    char* out = nullptr;
    int warning_count = 0;
    hohf_status st;
    if (*validate) {
      st = hohf_problem_validate(p, &out, &warning_count);
    } else if (*aggregate) {
      st = hohf_aggregate(p, alternative.empty() ? nullptr
                                                 : alternative.c_str(),
                          &out, &warning_count);
    } else {
      st = hohf_rank(p, &out, &warning_count);
    }
    if (st) return die(st);
    CStr report(out);

    const json rep = json::parse(report.get());
    if (json_out) {
      std::printf("%s\n", report.get());
    } else if (*validate) {
      std::printf("%s: %s\n", problem_path.c_str(),
                  warning_count ? "valid with warnings" : "valid");
      std::printf("measure class: %s\n",
                  rep.at("measure_class").get<std::string>().c_str());
      print_warnings(rep.at("warnings"));
    } else {
      print_rank_table(rep);
    }
    return warning_count > 0 ? 2 : 0;
  }

  if (*compare) {
    char* out = nullptr;
    if (hohf_status st = hohf_compare_file(
            rankings_path.c_str(), metric.empty() ? nullptr : metric.c_str(),
            &out))
      return die(st);
    CStr report(out);
    if (json_out) {
      std::printf("%s\n", report.get());
    } else {
      print_compare_table(json::parse(report.get()));
    }
    return 0;
  }

  if (*solve) {
    double rho = 0.0;
    char* out = nullptr;
    if (hohf_status st = hohf_solve_rho(singletons.data(), singletons.size(),
                                        sugeno_plus ? 1 : 0, &rho, &out))
      return die(st);
    CStr table(out);
    if (json_out) {
      std::printf("%s\n", table.get());
    } else {
      std::printf("rho = %.12g\n", rho);
      const json t = json::parse(table.get());
      for (const json& e : t.at("table")) {
        std::string subset;
        for (const json& l : e.at("subset")) {
          if (!subset.empty()) subset += ",";
          subset += l.get<std::string>();
        }
        std::printf("  mu({%s}) = %s\n", subset.c_str(),
                    fmt4(e.at("value").get<double>()).c_str());
      }
    }
    return 0;
  }

  return 0;
}
