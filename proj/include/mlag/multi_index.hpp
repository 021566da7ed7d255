#ifndef MLAG_MULTI_INDEX_HPP
#define MLAG_MULTI_INDEX_HPP

#include <stdexcept>
#include <vector>

namespace mlag {

// n = (n_1, ..., n_r), all parts >= 0, r >= 1.
using MultiIndex = std::vector<int>;

inline int total(const MultiIndex& n) {
    int s = 0;
    for (int v : n) {
        if (v < 0) throw std::invalid_argument("multi-index parts must be >= 0");
        s += v;
    }
    return s;
}

// All n in N^r with |n| <= max_total, in lexicographic order.
inline std::vector<MultiIndex> multi_indices_up_to(int r, int max_total) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    std::vector<MultiIndex> out;
    MultiIndex n(r, 0);
    while (true) {
        out.push_back(n);
        // odometer with the |n| <= max_total constraint
        int i = r - 1;
        while (i >= 0) {
            ++n[i];
            if (total(n) <= max_total) break;
            n[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

// All n componentwise <= cap (a box), in lexicographic order.
inline std::vector<MultiIndex> multi_indices_in_box(const MultiIndex& cap) {
    std::vector<MultiIndex> out;
    MultiIndex n(cap.size(), 0);
    while (true) {
        out.push_back(n);
        int i = static_cast<int>(cap.size()) - 1;
        while (i >= 0 && n[i] == cap[i]) n[i--] = 0;
        if (i < 0) break;
        ++n[i];
    }
    return out;
}

}  // namespace mlag

#endif
