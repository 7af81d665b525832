#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqd/report.hpp"

namespace gqd {

enum class Status { Confirmed, Refuted, Inconclusive, NotApplicable };
const char* to_string(Status s);
int exit_code(Status s);  // 0 confirmed / not-applicable, 2 refuted, 3 inconclusive

struct NVerdict {
  int n = 0;
  Status status = Status::Confirmed;
  Json evidence;
};

struct VerifyReport {
  std::string theorem;
  std::string statement;
  std::vector<NVerdict> results;

  int exit_code() const;
  Json to_json() const;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  bool core = true;  // one of the twelve; the rest are extra checks
};

const std::vector<TheoremInfo>& theorem_registry();
std::string theorem_ids_text();

struct UnknownTheorem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  std::optional<Rational> area_bound;  // fixed bound, no widening
  int workers = 0;
};

VerifyReport verify_theorem(const std::string& id, const std::vector<int>& ns, const VerifyOptions& opt = {});

}  // namespace gqd
