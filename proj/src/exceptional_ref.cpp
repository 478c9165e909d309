#include "csl/exceptional_ref.hpp"

#include <stdexcept>

namespace csl {

std::vector<long long> exceptional_catalan_residues(const std::string& type) {
  std::vector<long long> r;
  if (type == "E6") {
    for (int i = 0; i < 14; ++i) r.push_back(i % 2 == 0 ? 67 : 52);
  } else if (type == "E7") {
    for (int i = 0; i < 20; ++i) r.push_back(i % 2 == 0 ? 416 : 0);
  } else if (type == "E8") {
    for (int i = 0; i < 32; ++i) {
      if (i % 2 == 1)
        r.push_back(0);
      else if (i % 8 == 0)
        r.push_back(1574);
      else if (i % 8 == 4)
        r.push_back(1572);
      else
        r.push_back(1562);
    }
  } else if (type == "F4") {
    for (int i = 0; i < 14; ++i) r.push_back(i % 2 == 0 ? 15 : 0);
  } else if (type == "H3") {
    for (int i = 0; i < 12; ++i) {
      if (i % 2 == 1)
        r.push_back(0);
      else
        r.push_back(i % 6 == 0 ? 6 : 5);
    }
  } else if (type == "H4") {
    for (int i = 0; i < 32; ++i) {
      if (i % 2 == 1)
        r.push_back(0);
      else
        r.push_back(i % 4 == 0 ? 18 : 17);
    }
  } else {
    throw std::invalid_argument("no reference residues for " + type);
  }
  return r;
}

}  // namespace csl
