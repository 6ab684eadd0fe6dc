#pragma once

// The running example on the shifted skew shape (6,5,4,2)/(5,3).

#include <string>
#include <vector>

#include "mjdt/text.hpp"

namespace fixtures {

inline const mjdt::Shape& example_shape() {
  static const mjdt::Shape shape = mjdt::make_shape({6, 5, 4, 2}, {5, 3}, true);
  return shape;
}

inline mjdt::Filling grid(const std::string& text) {
  return mjdt::parse_filling(text, example_shape());
}

inline const std::string kR =
    ". . . . . 8\n"
    ". . . . 3 6\n"
    ". . 9 5 1 4\n"
    ". . . 2 7 .\n";

inline const std::string kP =
    ". . . . . 2\n"
    ". . . . 1 5\n"
    ". . 3 4 6 8\n"
    ". . . 7 9 .\n";

inline const std::string kQ =
    ". . . . . 4\n"
    ". . . . 3 6\n"
    ". . 1 2 5 8\n"
    ". . . 7 9 .\n";

inline const std::string kQPiInverse =
    ". . . . . 8\n"
    ". . . . 1 5\n"
    ". . 6 7 4 2\n"
    ". . . 9 3 .\n";

inline const std::vector<int> kPi = {3, 8, 9, 5, 6, 1, 2, 4, 7};

// Modified jdt of R with respect to P: intermediates, then Q.
inline const std::vector<std::string> kMjTrace = {
    ". . . . . 8\n. . . . 3 4\n. . 9 5 1 6\n. . . 2 7 .\n",
    ". . . . . 8\n. . . . 3 4\n. . 9 1 5 6\n. . . 2 7 .\n",
    ". . . . . 8\n. . . . 3 4\n. . 1 2 5 6\n. . . 7 9 .\n",
    kQ,
};

// The companion filling (P side) during fj(R, P); ends at Q_{pi^-1}.
inline const std::vector<std::string> kFjTrace = {
    ". . . . . 2\n. . . . 1 8\n. . 3 4 6 5\n. . . 7 9 .\n",
    ". . . . . 2\n. . . . 1 8\n. . 3 6 4 5\n. . . 7 9 .\n",
    ". . . . . 2\n. . . . 1 8\n. . 6 7 4 5\n. . . 9 3 .\n",
    kQPiInverse,
};

// Pairs (label side, tableau side) during bj(Q_{pi^-1}, Q), before the final switch.
inline const std::vector<std::pair<std::string, std::string>> kBjTrace = {
    {". . . . . 2\n. . . . 1 8\n. . 6 7 4 5\n. . . 9 3 .\n",
     ". . . . . 8\n. . . . 3 4\n. . 1 2 5 6\n. . . 7 9 .\n"},
    {". . . . . 2\n. . . . 1 8\n. . 3 6 4 5\n. . . 7 9 .\n",
     ". . . . . 8\n. . . . 3 4\n. . 9 1 5 6\n. . . 2 7 .\n"},
    {". . . . . 2\n. . . . 1 8\n. . 3 4 6 5\n. . . 7 9 .\n",
     ". . . . . 8\n. . . . 3 4\n. . 9 5 1 6\n. . . 2 7 .\n"},
    {kP, kR},
};

}  // namespace fixtures
