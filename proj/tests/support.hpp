#pragma once

// Shared helpers for the test suites: the plain-text unit-table fixture and
// the brute-force tree oracle, both independent of the code paths they check.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jnpoly/jnpoly.hpp"

namespace testsupport {

struct SignedUnit {
    int sign = 1;
    int index = 0;  // into (1, i, j, k, l, il, jl, kl)
};

inline SignedUnit parse_signed_unit(const std::string& token) {
    SignedUnit u;
    std::string name = token;
    if (!name.empty() && name[0] == '-') {
        u.sign = -1;
        name = name.substr(1);
    }
    for (int i = 0; i < 8; ++i) {
        if (name == jnpoly::kUnitNames[i]) {
            u.index = i;
            return u;
        }
    }
    throw std::runtime_error("fixture: unknown unit name '" + token + "'");
}

/// Loads the hand-written 8x8 octonion unit table: table[r][c] = r-th unit
/// times c-th unit.
inline std::vector<std::vector<SignedUnit>> load_unit_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    std::vector<std::vector<SignedUnit>> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<SignedUnit> units;
        std::string token;
        while (row >> token) units.push_back(parse_signed_unit(token));
        if (units.size() != 8) throw std::runtime_error("fixture: bad row width");
        table.push_back(std::move(units));
    }
    if (table.size() != 8) throw std::runtime_error("fixture: bad row count");
    return table;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(JNPOLY_TEST_FIXTURE_DIR) + "/" + name;
}

/// Every full binary tree over the ordered leaf slice [lo, hi).
inline std::vector<jnpoly::MTreePtr> all_trees(const std::vector<int>& leaves, size_t lo,
                                               size_t hi) {
    std::vector<jnpoly::MTreePtr> out;
    if (hi - lo == 1) {
        out.push_back(jnpoly::mtree_leaf(leaves[lo]));
        return out;
    }
    for (size_t split = lo + 1; split < hi; ++split) {
        for (const auto& l : all_trees(leaves, lo, split)) {
            for (const auto& r : all_trees(leaves, split, hi)) {
                out.push_back(jnpoly::mtree_node(l, r));
            }
        }
    }
    return out;
}

/// Brute-force enumeration oracle: all binary trees over all leaf orders,
/// deduplicated by canonical form. Independent of the split-by-lowest-variable
/// strategy inside enumerate_monomials.
inline std::set<std::string> brute_monomial_keys(int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> keys;
    do {
        for (const auto& tree : all_trees(perm, 0, perm.size())) {
            keys.insert(jnpoly::Monomial(tree).text());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return keys;
}

}  // namespace testsupport
