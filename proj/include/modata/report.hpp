#ifndef MODATA_REPORT_HPP
#define MODATA_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace modata {

enum class Status { Pass, Fail, Info, NotApplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
    case Status::NotApplicable: return "n/a";
  }
  return "?";
}

struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::vector<std::size_t> indices;
  std::string value;

  std::string index_string() const {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s;
  }
};

// Informational and not-applicable entries do not affect the overall verdict.
struct VerificationReport {
  std::vector<CheckEntry> checks;

  void pass(const std::string& name, const std::string& value = "") {
    checks.push_back({name, Status::Pass, {}, value});
  }
  void fail(const std::string& name, std::vector<std::size_t> idx, const std::string& value) {
    checks.push_back({name, Status::Fail, std::move(idx), value});
  }
  void info(const std::string& name, std::vector<std::size_t> idx, const std::string& value) {
    checks.push_back({name, Status::Info, std::move(idx), value});
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back({name, Status::NotApplicable, {}, why});
  }
  void record(const std::string& name, bool ok, std::vector<std::size_t> idx,
              const std::string& value) {
    if (ok) pass(name);
    else fail(name, std::move(idx), value);
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }

  const CheckEntry* first_failure() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return &c;
    return nullptr;
  }

  const CheckEntry* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string summary() const {
    const CheckEntry* f = first_failure();
    if (!f) return "pass";
    std::string s = "fail " + f->name;
    if (!f->indices.empty()) s += " at (" + f->index_string() + ")";
    if (!f->value.empty()) s += ": " + f->value;
    return s;
  }
};

}  // namespace modata

#endif
