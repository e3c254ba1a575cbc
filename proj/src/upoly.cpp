#include <scpoly/upoly.hpp>

#include <algorithm>

namespace scpoly::detail {

std::vector<Int> positive_divisors(const Int& n) {
    const Int m = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            Int q = m / d;
            if (q != d)
                large.push_back(q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace scpoly::detail
