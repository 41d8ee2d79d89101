#include "hocx/report.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace hocx {

void Report::guard(const std::string& name, const std::function<void(Report&)>& f) {
  try {
    f(*this);
  } catch (const std::exception& e) {
    fail(name, std::string("exception: ") + e.what());
  }
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (const auto& it : o.items) items.push_back({prefix + it.name, it.pass, it.witness});
}

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; }));
}

const CheckItem* Report::find(const std::string& name) const {
  for (const auto& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const CheckItem* it = find(name);
  return it != nullptr && it->pass;
}

std::string Report::str() const {
  std::ostringstream os;
  if (!title.empty()) os << title << '\n';
  for (const auto& it : items) {
    os << (it.pass ? "  [pass] " : "  [FAIL] ") << it.name;
    if (!it.pass) os << "  -- " << it.witness;
    os << '\n';
  }
  return os.str();
}

}  // namespace hocx
