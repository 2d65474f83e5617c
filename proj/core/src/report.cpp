#include "epiconj/report.hpp"

#include <nlohmann/json.hpp>

#include "epiconj/errors.hpp"

namespace epiconj {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string ConjugacyReport::to_json_string() const {
  ordered_json j;
  j["schema"] = schema;
  j["family"] = family;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : params) {
    j["params"][k] = v;
  }
  j["size"] = size;
  j["class_count"] = class_count;
  j["classes"] = ordered_json::array();
  for (const ClassEntry& c : classes) {
    ordered_json e;
    e["representative"] = c.representative;
    e["size"] = c.size;
    e["type"] = c.type_signature;
    j["classes"].push_back(std::move(e));
  }
  j["audits"] = ordered_json::array();
  for (const AuditRecord& a : audits) {
    ordered_json e;
    e["criterion"] = a.criterion;
    e["pairs_checked"] = a.pairs_checked;
    e["agreement"] = a.agreement;
    if (a.counterexample) {
      e["counterexample"] = ordered_json::array({a.counterexample->first,
                                                 a.counterexample->second});
    } else {
      e["counterexample"] = nullptr;
    }
    j["audits"].push_back(std::move(e));
  }
  j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

ConjugacyReport ConjugacyReport::from_json_string(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report is not valid JSON: ") + e.what());
  }
  ConjugacyReport r;
  try {
    r.schema = j.at("schema").get<int>();
    r.family = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      r.params[k] = v.get<std::int64_t>();
    }
    r.size = j.at("size").get<std::size_t>();
    r.class_count = j.at("class_count").get<std::size_t>();
    for (const auto& e : j.at("classes")) {
      ClassEntry c;
      c.representative = e.at("representative").get<std::string>();
      c.size = e.at("size").get<std::size_t>();
      c.type_signature = e.at("type").get<std::string>();
      r.classes.push_back(std::move(c));
    }
    for (const auto& e : j.at("audits")) {
      AuditRecord a;
      a.criterion = e.at("criterion").get<std::string>();
      a.pairs_checked = e.at("pairs_checked").get<std::size_t>();
      a.agreement = e.at("agreement").get<bool>();
      if (!e.at("counterexample").is_null()) {
        a.counterexample = {e.at("counterexample").at(0).get<std::string>(),
                            e.at("counterexample").at(1).get<std::string>()};
      }
      r.audits.push_back(std::move(a));
    }
    r.timing_ms = j.at("timing_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report JSON lacks a required field: ") + e.what());
  }
  if (r.schema != 1) {
    throw Error("unsupported report schema " + std::to_string(r.schema));
  }
  return r;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ConjugacyReport::to_csv_string() const {
  std::string out = "schema,family,params,size,class_count\n";
  std::string params_text;
  for (const auto& [k, v] : params) {
    if (!params_text.empty()) {
      params_text += ' ';
    }
    params_text += k + "=" + std::to_string(v);
  }
  out += std::to_string(schema) + "," + csv_quote(family) + "," + csv_quote(params_text) + "," +
         std::to_string(size) + "," + std::to_string(class_count) + "\n";
  out += "class,representative,size,type\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out += std::to_string(i) + "," + csv_quote(classes[i].representative) + "," +
           std::to_string(classes[i].size) + "," + csv_quote(classes[i].type_signature) + "\n";
  }
  out += "criterion,pairs_checked,agreement,counterexample\n";
  for (const AuditRecord& a : audits) {
    std::string ce;
    if (a.counterexample) {
      ce = a.counterexample->first + " vs " + a.counterexample->second;
    }
    out += csv_quote(a.criterion) + "," + std::to_string(a.pairs_checked) + "," +
           (a.agreement ? "true" : "false") + "," + csv_quote(ce) + "\n";
  }
  return out;
}

bool ConjugacyReport::operator==(const ConjugacyReport& other) const {
  return schema == other.schema && family == other.family && params == other.params &&
         size == other.size && class_count == other.class_count && classes == other.classes &&
         audits == other.audits;
}

}  // namespace epiconj
