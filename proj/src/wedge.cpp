#include "kleinq/wedge.hpp"

namespace kleinq {

std::vector<std::vector<int>> column_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < m; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace kleinq
