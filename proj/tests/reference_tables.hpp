#pragma once

// Published I(j), J(j) tables for l = 5 and l = 7 and the regulator values.
// Trailing zeros are not printed, so a value matches when rendering it with
// the printed number of decimals reproduces the printed string.

#include <string>
#include <vector>

#include "reglab/real.hpp"

namespace reglab::reference {

struct Row {
  int j;
  const char* i_value;
  const char* j_value;
};

inline const std::vector<Row>& table(int l) {
  static const std::vector<Row> l5 = {
      {1, "0.42745977255318", "0.717696894965804"},
      {2, "0.151180954233147", "0.377159120670032"},
      {3, "0.0871841692346256", "0.261572572611421"},
      {4, "0.0603840144077692", "0.202670503662525"},
  };
  static const std::vector<Row> l7 = {
      {1, "0.740059830730164", "0.987994510350351"},
      {2, "0.24646699651114", "0.51401702238944"},
      {3, "0.137265313181901", "0.354195498081428"},
      {4, "0.0929578147374374", "0.273237679671921"},
      {5, "0.0696363855176379", "0.224004116344261"},
      {6, "0.0554349861351089", "0.19073921727221"},
  };
  return l == 5 ? l5 : l7;
}

inline const char* regulator_value(int l) { return l == 5 ? "0.346139631939354" : "0.629487860860585"; }

inline int printed_decimals(const std::string& s) {
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

/// Every printed digit of `printed` is reproduced by `value`.
inline bool matches_printed(const Real& value, const std::string& printed) {
  return value.to_fixed(printed_decimals(printed)) == printed;
}

}  // namespace reglab::reference
