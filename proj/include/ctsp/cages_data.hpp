#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ctsp::detail {

// Embedded (3,g)-cage adjacency catalog, g = 3..11. Mirrors the data files
// under data/cages/; a test asserts the two stay identical and validates
// order and girth per entry.
struct CageEntry {
    int n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

const CageEntry* cage_entry(int girth);

}  // namespace ctsp::detail
