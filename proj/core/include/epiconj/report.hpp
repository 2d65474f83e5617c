#ifndef EPICONJ_REPORT_HPP
#define EPICONJ_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epiconj {

struct ClassEntry {
  std::string representative;  // canonical text form of the minimal element
  std::size_t size = 0;
  std::string type_signature;

  bool operator==(const ClassEntry&) const = default;
};

struct AuditRecord {
  std::string criterion;
  std::size_t pairs_checked = 0;
  bool agreement = false;
  // first disagreeing pair, as canonical text forms
  std::optional<std::pair<std::string, std::string>> counterexample;

  bool operator==(const AuditRecord&) const = default;
};

/// Serializable result of a class computation or audit run. Equality ignores
/// the timing field; everything else, including ordering, is deterministic
/// for a given invocation.
struct ConjugacyReport {
  int schema = 1;
  std::string family;
  std::map<std::string, std::int64_t> params;  // e.g. {"n": 3} or {"n": 2, "field": 2}
  std::size_t size = 0;
  std::size_t class_count = 0;
  std::vector<ClassEntry> classes;
  std::vector<AuditRecord> audits;
  double timing_ms = 0.0;

  std::string to_json_string() const;
  static ConjugacyReport from_json_string(std::string_view text);
  std::string to_csv_string() const;

  bool operator==(const ConjugacyReport& other) const;
};

}  // namespace epiconj

#endif  // EPICONJ_REPORT_HPP
