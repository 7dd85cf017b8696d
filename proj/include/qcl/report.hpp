#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qcl {

struct ReportItem {
  std::string key;
  bool pass = false;
  std::string detail;
  bool info = false;  // reported, never counted as a failure
};

/// Flat list of named checks. Items are sorted by key before they are read,
/// so the order in which concurrent work adds them does not matter.
class Report {
 public:
  void add(std::string key, bool pass, std::string detail = {}) {
    items_.push_back({std::move(key), pass, std::move(detail)});
  }
  void add_info(std::string key, bool pass, std::string detail = {}) {
    items_.push_back({std::move(key), pass, std::move(detail), true});
  }
  void merge(const Report& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }
  bool all_pass() const {
    return std::all_of(items_.begin(), items_.end(), [](const ReportItem& i) { return i.pass || i.info; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(items_.begin(), items_.end(), [](const ReportItem& i) { return !i.pass && !i.info; }));
  }
  std::vector<ReportItem> sorted() const {
    std::vector<ReportItem> v = items_;
    std::stable_sort(v.begin(), v.end(), [](const ReportItem& a, const ReportItem& b) { return a.key < b.key; });
    return v;
  }
  const std::vector<ReportItem>& items() const { return items_; }
  /// True if an item with this key exists and passed.
  bool passed(const std::string& key) const {
    return std::any_of(items_.begin(), items_.end(), [&](const ReportItem& i) { return i.key == key && i.pass; });
  }

 private:
  std::vector<ReportItem> items_;
};

}  // namespace qcl
