#pragma once

#include <string_view>

namespace infogreedy::fixtures {

// Canonical copies of the files under data/; the acceptance runner can read
// either.
inline constexpr std::string_view kFourAgentCoverInstance = R"({
  "kind": "wsc",
  "values": [2, 1, 3, 3, 1],
  "actions": [[[0], [2]], [[1], [2]], [[3], [4]], [[3], [4]]]
}
)";

inline constexpr std::string_view kFourAgentCoverGraph = R"({
  "n": 4,
  "edges": [[1, 3], [2, 3], [1, 4]]
}
)";

inline constexpr std::string_view kCliqueMinusEdgeGraph = R"({
  "n": 4,
  "edges": [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4]]
}
)";

inline constexpr std::string_view kFiveCycleGraph = R"({
  "n": 5,
  "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]
}
)";

inline constexpr std::string_view kThreeAgentTieInstance = R"({
  "kind": "wsc",
  "values": [1, 1, 1],
  "actions": [[[1], [0]], [[1]], [[1], [2]]]
}
)";

inline constexpr std::string_view kThreeAgentTieGraph = R"({
  "n": 3,
  "edges": [[1, 2]]
}
)";

}  // namespace infogreedy::fixtures
