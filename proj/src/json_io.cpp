#include "equistream/json_io.hpp"

#include <fstream>

#include "equistream/errors.hpp"

namespace equistream {

namespace {

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string at " + where);
}

std::vector<Rational> rational_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected an array at " + where);
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_at(item, where));
  return out;
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

ExtendedRational extended_from_string(const std::string& s) {
  if (s == "-inf") return ExtendedRational::neg_infinity();
  if (s == "+inf" || s == "inf") return ExtendedRational::pos_infinity();
  return ExtendedRational::finite(Rational::parse(s));
}

}  // namespace

Json stream_to_json(const Stream& s) {
  Json j;
  if (s.is_periodic()) {
    j["kind"] = "ep";
    j["pre"] = rational_list_json(s.preperiod());
    j["per"] = rational_list_json(s.period());
  } else {
    j["kind"] = "trunc";
    j["values"] = rational_list_json(s.values());
    if (!s.provenance().empty()) j["provenance"] = s.provenance();
  }
  return j;
}

Stream stream_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("stream descriptor needs a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ep")
    return Stream::eventually_periodic(rational_list(j.value("pre", Json::array()), "pre"),
                                       rational_list(j.at("per"), "per"));
  if (kind == "trunc")
    return Stream::truncated(rational_list(j.at("values"), "values"),
                             j.value("provenance", std::string{}));
  throw ParseError("unknown stream kind '" + kind + "'");
}

Json domain_to_json(const UtilityDomain& y) {
  Json j;
  j["finite"] = rational_list_json(y.finite_part);
  Json chains = Json::array();
  for (const auto& c : y.chains) {
    Json cj;
    cj["dir"] = c.direction == ChainDirection::Decreasing ? "dec" : "inc";
    cj["form"] = c.form.str();
    cj["limit"] = c.limit.str();
    chains.push_back(std::move(cj));
  }
  j["chains"] = std::move(chains);
  return j;
}

UtilityDomain domain_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("domain descriptor must be an object");
  std::vector<Rational> finite = rational_list(j.value("finite", Json::array()), "finite");
  std::vector<MonotoneChain> chains;
  for (const auto& cj : j.value("chains", Json::array())) {
    MonotoneChain c = MonotoneChain::from_form(
        ChainForm::parse(cj.at("form").get<std::string>()));
    if (cj.contains("dir")) {
      std::string dir = cj.at("dir").get<std::string>();
      ChainDirection want =
          dir == "dec" ? ChainDirection::Decreasing : ChainDirection::Increasing;
      if (dir != "dec" && dir != "inc")
        throw ParseError("chain dir must be 'inc' or 'dec'");
      if (c.direction != want)
        throw ParseError("chain '" + cj.at("form").get<std::string>() +
                         "' runs opposite to its declared direction");
    }
    if (cj.contains("limit")) {
      ExtendedRational lim = extended_from_string(cj.at("limit").get<std::string>());
      if (!(c.limit == lim))
        throw ParseError("declared limit of chain '" + cj.at("form").get<std::string>() +
                         "' does not match its analytic limit " + c.limit.str());
    }
    chains.push_back(std::move(c));
  }
  return UtilityDomain::make(std::move(finite), std::move(chains));
}

Json pairing_to_json(const PairingFunction& a) {
  Json j;
  Json pairs = Json::array();
  for (auto [i, k] : a.explicit_pairs()) pairs.push_back(Json::array({i, k}));
  j["pairs"] = std::move(pairs);
  if (a.kind() == PairingKind::Periodic) {
    Json rep = Json::array();
    for (auto [i, k] : a.rep_pairs()) rep.push_back(Json::array({i, k}));
    j["periodic"] = {{"period", a.period()},
                     {"window", a.offset() + a.period()},
                     {"pairs", std::move(rep)}};
  }
  if (!a.deferred().empty()) j["deferred"] = a.deferred();
  return j;
}

PairingFunction pairing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs"))
    throw ParseError("pairing descriptor needs a 'pairs' field");
  auto read_pairs = [](const Json& arr, const std::string& where) {
    std::vector<IndexPair> out;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("expected [i,j] pairs at " + where);
      out.emplace_back(p[0].get<Index>(), p[1].get<Index>());
    }
    return out;
  };
  std::vector<IndexPair> pairs = read_pairs(j.at("pairs"), "pairs");
  std::vector<Index> deferred;
  for (const auto& d : j.value("deferred", Json::array())) deferred.push_back(d.get<Index>());
  if (j.contains("periodic")) {
    if (!deferred.empty())
      throw ParseError("periodic pairings cannot carry deferred indices");
    const Json& pj = j.at("periodic");
    Index period = pj.at("period").get<Index>();
    Index window = pj.at("window").get<Index>();
    return PairingFunction::periodic(std::move(pairs), window - period, period,
                                     read_pairs(pj.at("pairs"), "periodic.pairs"));
  }
  return PairingFunction::finite(std::move(pairs), std::move(deferred));
}

Json report_to_json(const WitnessReport& r) {
  Json j;
  j["axiom"] = to_string(r.axiom);
  j["direction"] = to_string(r.direction);
  j["status"] = to_string(r.status);
  if (r.status == WitnessStatus::VerifiedToDepth ||
      r.status == WitnessStatus::NoWitnessToDepth)
    j["depth"] = r.depth;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["checked_pairs"] = r.checked_pairs;
  j["deferred_pairs"] = r.deferred_pairs;
  if (r.pairing) j["pairing"] = pairing_to_json(*r.pairing);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace equistream
