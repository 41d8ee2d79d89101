#ifndef HOCX_REPORT_HPP
#define HOCX_REPORT_HPP

#include <functional>
#include <string>
#include <vector>

namespace hocx {

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;  // empty on pass
};

// Itemized verdict list produced by every checker.
struct Report {
  std::string title;
  std::vector<CheckItem> items;

  void pass(std::string name) { items.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) { items.push_back({std::move(name), false, std::move(witness)}); }
  void add(std::string name, bool ok, std::string witness = {}) {
    items.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
  }
  // Runs f, turning any exception into a failed item.
  void guard(const std::string& name, const std::function<void(Report&)>& f);
  void merge(const Report& o, const std::string& prefix = {});

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const { return items.size() - passed(); }
  const CheckItem* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  std::string str() const;
};

}  // namespace hocx

#endif
