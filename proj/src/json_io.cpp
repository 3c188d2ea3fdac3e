#include "argue/json_io.hpp"

#include "argue/errors.hpp"
#include "argue/parser.hpp"

namespace argue {

Json proof_to_json(const Proof& p) {
  Json j;
  j["rule"] = rule_name(p.rule());
  j["conclusion"] = p.conclusion().str();
  if (p.label()) j["label"] = p.label()->str();
  Json kids = Json::array();
  for (const Proof& c : p.children()) kids.push_back(proof_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

Proof proof_from_json(const Json& j, const Database& db) {
  if (!j.is_object()) throw ParseError("proof node must be an object", 0, 0);
  if (!j.contains("rule") || !j.at("rule").is_string()) {
    throw ParseError("proof node needs a string \"rule\"", 0, 0);
  }
  if (!j.contains("conclusion") || !j.at("conclusion").is_string()) {
    throw ParseError("proof node needs a string \"conclusion\"", 0, 0);
  }
  Rule rule = rule_by_name(j.at("rule").get<std::string>());
  Formula conclusion = parse_formula(j.at("conclusion").get<std::string>());

  std::optional<GroundLabel> label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) {
      throw ParseError("proof node \"label\" must be a string", 0, 0);
    }
    label = parse_ground_label(j.at("label").get<std::string>(), db);
  }

  std::vector<Proof> children;
  if (j.contains("children")) {
    if (!j.at("children").is_array()) {
      throw ParseError("proof node \"children\" must be an array", 0, 0);
    }
    for (const Json& c : j.at("children")) {
      children.push_back(proof_from_json(c, db));
    }
  }
  return Proof::shape(rule, std::move(conclusion), std::move(children),
                      std::move(label));
}

std::vector<Proof> proofs_from_json(const Json& j, const Database& db) {
  if (j.is_object() && j.contains("rule")) {
    return {proof_from_json(j, db)};
  }
  if (j.is_object() && j.contains("proof")) {
    return {proof_from_json(j.at("proof"), db)};
  }
  if (j.is_object() && j.contains("arguments") && j.at("arguments").is_array()) {
    std::vector<Proof> out;
    for (const Json& a : j.at("arguments")) {
      if (!a.is_object() || !a.contains("proof")) {
        throw ParseError("argument entry without a \"proof\"", 0, 0);
      }
      out.push_back(proof_from_json(a.at("proof"), db));
    }
    return out;
  }
  throw ParseError("no proof found in JSON input", 0, 0);
}

Json json_parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
  }
}

Json sign_to_json(const Sign& s) {
  if (s.is_numeric()) return s.value();
  return s.str();
}

Json confidence_to_json(const Confidence& c) {
  switch (c.kind()) {
    case Confidence::Kind::confirmed:
      return "++";
    case Confidence::Kind::tally:
      return c.count();
    case Confidence::Kind::real:
      return c.value();
  }
  throw Error("confidence_to_json: unreachable kind");
}

Json argument_to_json(const Argument& a) { return argument_to_json(a, false); }

Json argument_to_json(const Argument& a, bool with_proof) {
  Json j;
  j["formula"] = a.formula.str();
  Json grounds = Json::array();
  for (const GroundLabel& gl : a.grounds) grounds.push_back(gl.str());
  j["grounds"] = std::move(grounds);
  j["sign"] = sign_to_json(a.sign);
  if (with_proof) j["proof"] = proof_to_json(a.proof);
  return j;
}

Json criteria_report_to_json(const CriteriaReport& report) {
  Json out = Json::array();
  for (const CriterionResult& e : report.entries) {
    Json j;
    j["criterion"] = e.criterion;
    j["status"] = criterion_status_name(e.status);
    if (!e.detail.empty()) j["detail"] = e.detail;
    if (!e.counterexample.empty()) j["counterexample"] = e.counterexample;
    if (e.informational) j["informational"] = true;
    out.push_back(std::move(j));
  }
  return out;
}

Json labelling_to_json(const SignedArgumentPool& pool, const Labelling& lab) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < pool.pro.size(); ++i) {
    const Argument& a = pool.pro[i];
    Json j;
    j["id"] = "p" + std::to_string(i);
    j["kind"] = "pro";
    j["formula"] = a.formula.str();
    Json grounds = Json::array();
    for (const GroundLabel& gl : a.grounds) grounds.push_back(gl.str());
    j["grounds"] = std::move(grounds);
    j["sign"] = sign_to_json(a.sign);
    j["status"] = status_name(lab.pro[i]);
    nodes.push_back(std::move(j));
  }
  for (std::size_t i = 0; i < pool.con.size(); ++i) {
    const ConArgument& a = pool.con[i];
    Json j;
    j["id"] = "c" + std::to_string(i);
    j["kind"] = "con";
    j["formula"] = a.formula.str();
    Json grounds = Json::array();
    for (const GroundLabel& gl : a.grounds) grounds.push_back(gl.str());
    j["grounds"] = std::move(grounds);
    j["sign"] = sign_to_json(a.sign);
    j["status"] = status_name(lab.con[i]);
    j["counterpart"] = "p" + std::to_string(a.counterpart);
    nodes.push_back(std::move(j));
  }

  Json edges = Json::array();
  for (const AttackEdge& e : lab.edges) {
    Json j;
    j["from"] = "c" + std::to_string(e.con);
    j["to"] = "p" + std::to_string(e.pro);
    j["kind"] = e.kind == AttackEdge::Kind::rebut ? "rebut" : "discount";
    edges.push_back(std::move(j));
  }

  Json out;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace argue
