#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "equistream/axioms.hpp"
#include "equistream/constructions.hpp"
#include "equistream/errors.hpp"
#include "equistream/json_io.hpp"
#include "equistream/swf.hpp"
#include "equistream/swr.hpp"

namespace eq = equistream;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::vector<eq::Rational> parse_values(const std::string& csv) {
  std::vector<eq::Rational> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string token = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) out.push_back(eq::Rational::parse(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw eq::BadParameter("empty value list");
  return out;
}

void emit(const eq::Json& j) { std::cout << j.dump(2) << "\n"; }

struct EvalArgs {
  std::string swf, domain_path, stream_path;
  std::string rho = "1/2";
};

int run_eval(const EvalArgs& a) {
  eq::Stream x = eq::stream_from_json(eq::load_json_file(a.stream_path));
  eq::Rational value(0);
  if (a.swf == "prop1" || a.swf == "prop2") {
    eq::UtilityDomain dom = eq::domain_from_json(eq::load_json_file(a.domain_path));
    if (!dom.chains.empty())
      throw eq::BadParameter("this evaluator needs a finite domain");
    value = a.swf == "prop1"
                ? eq::w_prop1(x, eq::FiveValueDomain::from_list(dom.finite_part))
                : eq::w_prop2(x, eq::SevenValueDomain::from_list(dom.finite_part));
  } else if (a.swf == "min") {
    value = eq::w_min(x);
  } else if (a.swf == "rhoinf") {
    eq::UtilityDomain dom = eq::domain_from_json(eq::load_json_file(a.domain_path));
    value = eq::w_rho_inf(x, eq::Rational::parse(a.rho), dom);
  } else {
    throw eq::BadParameter("unknown evaluator '" + a.swf + "'");
  }
  emit({{"value", value.str()}, {"approx", value.approx()}});
  return kExitYes;
}

struct CompareArgs {
  std::string swr = "leximin";
  long long depth = 400, window = 0;  // window 0: pick depth/4
  std::string x_path, y_path;
};

int run_compare(const CompareArgs& a) {
  if (a.swr != "leximin") throw eq::BadParameter("unknown comparator '" + a.swr + "'");
  eq::Stream x = eq::stream_from_json(eq::load_json_file(a.x_path));
  eq::Stream y = eq::stream_from_json(eq::load_json_file(a.y_path));
  long long window = a.window > 0 ? a.window : std::max<long long>(a.depth / 4, 1);
  eq::ComparisonVerdict v = eq::filter_compare(x, y, a.depth, window);
  eq::Json j{{"relation", eq::to_string(v.relation)},
             {"depth", v.depth},
             {"window", v.window},
             {"stabilization_index", v.stabilization_index},
             {"oscillation_period", v.oscillation_period}};
  emit(j);
  return v.relation == eq::Relation::Undetermined ? kExitLimit : kExitYes;
}

struct WitnessArgs {
  std::string axiom, x_path, y_path;
  long long depth = 200;
};

int run_witness(const WitnessArgs& a) {
  eq::Stream x = eq::stream_from_json(eq::load_json_file(a.x_path));
  eq::Stream y = eq::stream_from_json(eq::load_json_file(a.y_path));
  eq::WitnessReport rep =
      eq::premise_holds(eq::axiom_from_string(a.axiom), x, y, a.depth);
  emit(eq::report_to_json(rep));
  return rep.verified() ? kExitYes : kExitNo;
}

int run_classify(const std::string& domain_path) {
  eq::UtilityDomain dom = eq::domain_from_json(eq::load_json_file(domain_path));
  eq::ClassificationReport rep = eq::classify(dom);
  eq::Json j{{"class", eq::to_string(rep.order_class)},
             {"has_omega_star", rep.has_omega_star},
             {"has_sigma", rep.has_sigma}};
  j["min"] = rep.min ? eq::Json(rep.min->str()) : eq::Json(nullptr);
  j["max"] = rep.max ? eq::Json(rep.max->str()) : eq::Json(nullptr);
  emit(j);
  return kExitYes;
}

struct ConstructArgs {
  std::string name, out_dir, values_csv;
  std::string r = "1/3", s = "1/2";
  long long depth = 400;
};

template <std::size_t N>
std::array<eq::Rational, N> value_array(const std::string& csv) {
  std::vector<eq::Rational> v =
      csv.empty() ? std::vector<eq::Rational>{} : parse_values(csv);
  if (v.empty())
    for (std::size_t i = 0; i < N; ++i) v.emplace_back(static_cast<long long>(i));
  if (v.size() != N)
    throw eq::BadParameter("this construction needs exactly " + std::to_string(N) +
                           " values");
  std::array<eq::Rational, N> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

int run_construct(const ConstructArgs& a) {
  std::vector<std::pair<std::string, eq::Stream>> streams;
  std::vector<eq::VerificationStep> transcript;

  if (a.name == "ex1" || a.name == "ex2" || a.name == "intro" || a.name == "section3") {
    eq::ExampleSet set = eq::example_streams(a.name, a.depth);
    streams = set.streams;
    transcript = eq::verify_example(a.name, a.depth);
    if (!a.out_dir.empty())
      for (const auto& [pname, p] : set.pairings)
        eq::save_json_file(a.out_dir + "/" + a.name + "_" + pname + ".json",
                           eq::pairing_to_json(p));
  } else if (a.name == "thm1") {
    auto vals = value_array<4>(a.values_csv);
    eq::Rational r = eq::Rational::parse(a.r), s = eq::Rational::parse(a.s);
    eq::Thm1Family fr = eq::thm1_family(r, a.depth, vals);
    eq::Thm1Family fs = eq::thm1_family(s, a.depth, vals);
    eq::Thm1Swap sw = eq::thm1_swap(r, s, a.depth, vals);
    streams = {{"x_r", fr.x}, {"y_r", fr.y}, {"x_s", fs.x}, {"y_prime", sw.y_prime}};
    transcript = eq::verify_thm1_chain(r, s, a.depth, vals);
  } else if (a.name == "thm2") {
    auto vals = value_array<6>(a.values_csv);
    eq::Rational r = eq::Rational::parse(a.r), s = eq::Rational::parse(a.s);
    eq::ThmFamily fr = eq::thm2_family(r, a.depth, vals);
    eq::ThmFamily fs = eq::thm2_family(s, a.depth, vals);
    streams = {{"x_r", fr.x}, {"y_r", fr.y}, {"x_s", fs.x}};
    transcript = eq::verify_thm2_chain(r, s, a.depth, vals);
  } else if (a.name == "thm3") {
    auto vals = value_array<8>(a.values_csv);
    eq::Rational r = eq::Rational::parse(a.r), s = eq::Rational::parse(a.s);
    eq::ThmFamily fr = eq::thm3_family(r, a.depth, vals);
    eq::ThmFamily fs = eq::thm3_family(s, a.depth, vals);
    streams = {{"x_r", fr.x}, {"y_r", fr.y}, {"x_s", fs.x}};
    transcript = eq::verify_thm3_chain(r, s, a.depth, vals);
  } else {
    throw eq::UnknownName("no construction named '" + a.name + "'");
  }

  if (!a.out_dir.empty())
    for (const auto& [sname, s] : streams)
      eq::save_json_file(a.out_dir + "/" + a.name + "_" + sname + ".json",
                         eq::stream_to_json(s));

  bool all_ok = true;
  eq::Json steps = eq::Json::array();
  for (const auto& st : transcript) {
    all_ok = all_ok && st.ok;
    steps.push_back({{"claim", st.claim}, {"ok", st.ok}, {"detail", st.detail}});
  }
  emit({{"name", a.name}, {"ok", all_ok}, {"steps", steps}});
  return all_ok ? kExitYes : kExitNo;
}

struct AuditArgs {
  std::string target, axiom;
  std::string values_csv = "0,1,2,3,4";
  std::string rho = "1/2";
  std::string domain_path;
  long long trials = 1000, depth = 200;
  std::uint64_t seed = 20260823;
};

int run_audit(const AuditArgs& a) {
  eq::GeneratorConfig config;
  config.values = parse_values(a.values_csv);
  config.depth = a.depth;
  eq::Axiom axiom = eq::axiom_from_string(a.axiom);

  eq::AuditReport report;
  if (a.target.rfind("swf:", 0) == 0) {
    std::string which = a.target.substr(4);
    eq::SwfHandle handle;
    if (which == "prop1") {
      auto dom = eq::FiveValueDomain::from_list(config.values);
      handle = [dom](const eq::Stream& x) { return eq::w_prop1(x, dom); };
    } else if (which == "prop2") {
      auto dom = eq::SevenValueDomain::from_list(config.values);
      handle = [dom](const eq::Stream& x) { return eq::w_prop2(x, dom); };
    } else if (which == "min") {
      handle = [](const eq::Stream& x) { return eq::w_min(x); };
    } else if (which == "rhoinf") {
      eq::UtilityDomain dom =
          a.domain_path.empty()
              ? eq::UtilityDomain::finite(config.values)
              : eq::domain_from_json(eq::load_json_file(a.domain_path));
      eq::Rational rho = eq::Rational::parse(a.rho);
      handle = [dom, rho](const eq::Stream& x) { return eq::w_rho_inf(x, rho, dom); };
    } else {
      throw eq::BadParameter("unknown audit target '" + a.target + "'");
    }
    report = eq::audit_swf(handle, axiom, config, a.trials, a.seed);
  } else if (a.target == "swr:leximin") {
    long long depth = std::max<long long>(a.depth, 64);
    long long window = std::max<long long>(depth / 4, 16);
    eq::SwrHandle handle = [depth, window](const eq::Stream& x, const eq::Stream& y) {
      return eq::filter_compare(x, y, depth, window);
    };
    report = eq::audit_swr(handle, axiom, config, a.trials, a.seed);
  } else {
    throw eq::BadParameter("unknown audit target '" + a.target + "'");
  }

  eq::Json violations = eq::Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"trial", v.trial},
                          {"x", eq::stream_to_json(v.x)},
                          {"y", eq::stream_to_json(v.y)},
                          {"direction", eq::to_string(v.direction)},
                          {"observed", v.observed}});
  emit({{"axiom", eq::to_string(report.axiom)},
        {"trials", report.trials},
        {"seed", report.seed},
        {"violations", violations},
        {"passed", report.passed()}});
  return report.passed() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for equitable rankings of infinite utility streams"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a social welfare function");
  eval_cmd->add_option("--swf", eval_args.swf, "prop1|prop2|min|rhoinf")->required();
  eval_cmd->add_option("--rho", eval_args.rho, "parameter in (0,1) for rhoinf");
  eval_cmd->add_option("--domain", eval_args.domain_path, "domain JSON file");
  eval_cmd->add_option("--stream", eval_args.stream_path, "stream JSON file")->required();

  CompareArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand("compare", "leximin filter comparison");
  cmp_cmd->add_option("--swr", cmp_args.swr, "comparator (leximin)");
  cmp_cmd->add_option("--depth", cmp_args.depth, "prefix depth T");
  cmp_cmd->add_option("--window", cmp_args.window, "ruling window start T0");
  cmp_cmd->add_option("x", cmp_args.x_path, "first stream JSON")->required();
  cmp_cmd->add_option("y", cmp_args.y_path, "second stream JSON")->required();

  WitnessArgs wit_args;
  auto* wit_cmd = app.add_subcommand("witness", "check or search an axiom premise");
  wit_cmd->add_option("--axiom", wit_args.axiom, "AN|M|PD|SE|GE|GPD|IE|WE")->required();
  wit_cmd->add_option("--x", wit_args.x_path, "first stream JSON")->required();
  wit_cmd->add_option("--y", wit_args.y_path, "second stream JSON")->required();
  wit_cmd->add_option("--depth", wit_args.depth, "search depth");

  std::string classify_domain;
  auto* cls_cmd = app.add_subcommand("classify", "order-type classification of a domain");
  cls_cmd->add_option("--domain", classify_domain, "domain JSON file")->required();

  ConstructArgs con_args;
  auto* con_cmd = app.add_subcommand("construct", "build and verify a named construction");
  con_cmd->add_option("--name", con_args.name, "ex1|ex2|intro|section3|thm1|thm2|thm3")
      ->required();
  con_cmd->add_option("--r", con_args.r, "rational parameter r");
  con_cmd->add_option("--s", con_args.s, "rational parameter s > r");
  con_cmd->add_option("--depth", con_args.depth, "truncation depth");
  con_cmd->add_option("--values", con_args.values_csv, "comma-separated utility values");
  con_cmd->add_option("--out", con_args.out_dir, "directory for emitted JSON");

  AuditArgs audit_args;
  auto* aud_cmd = app.add_subcommand("audit", "randomized axiom audit");
  aud_cmd->add_option("--target", audit_args.target,
                      "swf:prop1|swf:prop2|swf:min|swf:rhoinf|swr:leximin")
      ->required();
  aud_cmd->add_option("--axiom", audit_args.axiom, "axiom to audit")->required();
  aud_cmd->add_option("--values", audit_args.values_csv, "generator value set");
  aud_cmd->add_option("--trials", audit_args.trials, "number of trials");
  aud_cmd->add_option("--seed", audit_args.seed, "PRNG seed");
  aud_cmd->add_option("--depth", audit_args.depth, "generator/evaluation depth");
  aud_cmd->add_option("--rho", audit_args.rho, "parameter for swf:rhoinf");
  aud_cmd->add_option("--domain", audit_args.domain_path, "domain JSON for swf:rhoinf");

  if (const char* env_seed = std::getenv("EQUISTREAM_SEED"))
    audit_args.seed = std::strtoull(env_seed, nullptr, 10);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval_args);
    if (*cmp_cmd) return run_compare(cmp_args);
    if (*wit_cmd) return run_witness(wit_args);
    if (*cls_cmd) return run_classify(classify_domain);
    if (*con_cmd) return run_construct(con_args);
    if (*aud_cmd) return run_audit(audit_args);
  } catch (const eq::OutOfDepth& e) {
    std::cerr << "representation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const eq::DepthTooSmall& e) {
    std::cerr << "representation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const eq::SizeLimit& e) {
    std::cerr << "representation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const eq::NotPeriodic& e) {
    std::cerr << "representation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const eq::UnboundedDomain& e) {
    std::cerr << "representation limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const eq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
