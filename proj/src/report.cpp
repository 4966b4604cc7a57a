#include "augcube/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace augcube {

bool Report::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(Check c) { checks.push_back(std::move(c)); }

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks;
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  for (const Check& c : r.sorted())
    os << c.name << ' ' << c.expected << ' ' << c.observed << ' '
       << (c.pass ? "pass" : "fail") << ' ' << c.elapsed_ms << '\n';
  os << "overall " << (r.overall() ? "pass" : "fail") << '\n';
  return os.str();
}

std::string to_json(const Report& r) {
  nlohmann::json doc;
  doc["checks"] = nlohmann::json::array();
  for (const Check& c : r.sorted())
    doc["checks"].push_back({{"name", c.name},
                             {"target", c.target},
                             {"expected", c.expected},
                             {"observed", c.observed},
                             {"pass", c.pass},
                             {"elapsed_ms", c.elapsed_ms}});
  doc["overall"] = r.overall() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace augcube
