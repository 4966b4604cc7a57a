#pragma once

#include <string>
#include <vector>

namespace augcube {

// One verification check.  `name` is a unique space-free token (it may embed
// the target in brackets, e.g. "regular[H]"); expected/observed are compact
// space-free values so the text serialization stays a 5-column table.
struct Check {
  std::string name;
  std::string target;
  std::string expected;
  std::string observed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<Check> checks;

  bool overall() const;
  void add(Check c);
  void merge(const Report& other);
  // Checks sorted by name, so aggregation order never changes the output.
  std::vector<Check> sorted() const;
};

// Text format: one line per check, "name expected observed pass|fail
// elapsed_ms", then a trailing "overall pass|fail" line.
std::string to_text(const Report& r);
// JSON mirror of the same content, including the target descriptions.
std::string to_json(const Report& r);

}  // namespace augcube
