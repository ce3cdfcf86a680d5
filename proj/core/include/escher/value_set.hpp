#ifndef ESCHER_VALUE_SET_HPP
#define ESCHER_VALUE_SET_HPP

#include <string>
#include <vector>

#include "escher/cxe.hpp"

namespace escher {

// Principal value plus ordered alternates; the return shape of multi-valued
// operations (kis, division). All members are distinct.
struct ValueSet {
  CxE principal;
  std::vector<CxE> alternates;

  std::vector<CxE> members() const {
    std::vector<CxE> out{principal};
    out.insert(out.end(), alternates.begin(), alternates.end());
    return out;
  }

  bool contains(const CxE& v) const {
    if (v == principal) return true;
    for (const auto& a : alternates)
      if (a == v) return true;
    return false;
  }

  std::string str() const {
    std::string out = "{ " + principal.str();
    for (const auto& a : alternates) out += ", " + a.str();
    return out + " }";
  }
};

}  // namespace escher

#endif
