#include "trilie/report.hpp"

namespace trilie {

bool Report::ok() const {
  for (const CheckItem& item : items)
    if (item.failed()) return false;
  return true;
}

const CheckItem* Report::find(const std::string& identity) const {
  for (const CheckItem& item : items)
    if (item.identity == identity) return &item;
  return nullptr;
}

std::string Report::summary() const {
  std::string out;
  for (const CheckItem& item : items) {
    out += item.identity;
    switch (item.status) {
      case CheckStatus::passed:
        out += ": pass";
        break;
      case CheckStatus::failed:
        out += ": FAIL (" + std::to_string(item.violation_count) + " violations)";
        break;
      case CheckStatus::not_applicable:
        out += ": n/a";
        break;
    }
    if (!item.note.empty()) out += " [" + item.note + "]";
    out += "\n";
  }
  return out;
}

ReportBuilder::ReportBuilder(std::string subject, std::size_t max_witnesses)
    : max_witnesses_(max_witnesses) {
  report_.subject = std::move(subject);
}

void ReportBuilder::begin(std::string identity) {
  current_ = CheckItem{};
  current_.identity = std::move(identity);
  open_ = true;
}

void ReportBuilder::violation(std::vector<std::size_t> indices, std::string lhs, std::string rhs) {
  current_.status = CheckStatus::failed;
  ++current_.violation_count;
  if (current_.witnesses.size() < max_witnesses_)
    current_.witnesses.push_back({std::move(indices), std::move(lhs), std::move(rhs)});
}

void ReportBuilder::end() {
  report_.items.push_back(std::move(current_));
  open_ = false;
}

void ReportBuilder::not_applicable(std::string identity, std::string why) {
  CheckItem item;
  item.identity = std::move(identity);
  item.status = CheckStatus::not_applicable;
  item.note = std::move(why);
  report_.items.push_back(std::move(item));
}

void ReportBuilder::fail_note(std::string identity, std::string note) {
  CheckItem item;
  item.identity = std::move(identity);
  item.status = CheckStatus::failed;
  item.violation_count = 1;
  item.note = std::move(note);
  report_.items.push_back(std::move(item));
}

Report ReportBuilder::take() { return std::move(report_); }

}  // namespace trilie
