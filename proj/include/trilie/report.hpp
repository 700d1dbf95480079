#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trilie {

inline constexpr std::size_t kDefaultMaxWitnesses = 32;

/// A basis tuple on which a checked identity failed, with both sides.
struct Violation {
  std::vector<std::size_t> indices;  ///< zero-based basis indices of the tuple
  std::string lhs;
  std::string rhs;
};

enum class CheckStatus { passed, failed, not_applicable };

/// Verdict for one named identity.
struct CheckItem {
  std::string identity;
  CheckStatus status = CheckStatus::passed;
  std::size_t violation_count = 0;          ///< total, not capped
  std::vector<Violation> witnesses;         ///< capped at max_witnesses
  std::string note;                          ///< e.g. "det = 0" or why n/a

  bool failed() const { return status == CheckStatus::failed; }
};

/// Structured verdict of a checking operation: per-identity flags plus the
/// violating basis tuples with both sides evaluated.
struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  bool ok() const;
  const CheckItem* find(const std::string& identity) const;
  std::string summary() const;  ///< one line per item
};

/// Incremental builder used by the checkers; caps stored witnesses.
class ReportBuilder {
 public:
  ReportBuilder(std::string subject, std::size_t max_witnesses);

  void begin(std::string identity);
  void violation(std::vector<std::size_t> indices, std::string lhs, std::string rhs);
  void end();
  void not_applicable(std::string identity, std::string why);
  void fail_note(std::string identity, std::string note);  ///< failed with a note, no tuples

  Report take();

 private:
  Report report_;
  CheckItem current_;
  bool open_ = false;
  std::size_t max_witnesses_;
};

}  // namespace trilie
