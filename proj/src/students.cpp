#include "delwca/students.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "delwca/parser.hpp"

namespace delwca {

std::string students_scenario_text(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("students: n must be between 1 and 6");
  std::ostringstream os;
  os << "# teacher t tells each of " << n << " students the secret p, in any order\n";
  os << "agents: t";
  for (int i = 1; i <= n; ++i) os << " " << i;
  os << "\nprops: p\n";
  os << "states: u v\ninit: u\ns5\nval: u p\n";
  os << "rel t: id\n";
  for (int i = 1; i <= n; ++i) os << "rel " << i << ": u v\n";
  for (int i = 1; i <= n; ++i) os << "channel c" << i << ": t -> " << i << "\n";

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  os << "proc t: ";
  bool first_perm = true;
  do {
    if (!first_perm) os << " + ";
    first_perm = false;
    for (int k = 0; k < n; ++k) {
      if (k) os << "; ";
      os << "c" << perm[k] << "!(p)";
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  os << "\n";
  for (int i = 1; i <= n; ++i) os << "proc " << i << ": c" << i << "?\n";

  std::ostringstream all_know;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) all_know << " & ";
    all_know << "K" << i << " p";
  }
  os << "query: [par](" << all_know.str() << ")\n";
  os << "query: <par>(" << all_know.str() << ")\n";
  return os.str();
}

Scenario students_scenario(int n) { return parse_scenario(students_scenario_text(n)); }

}  // namespace delwca
