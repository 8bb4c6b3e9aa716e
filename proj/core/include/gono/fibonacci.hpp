#pragma once

#include <vector>

#include "gono/int128.hpp"

namespace gono {

// Largest index whose Fibonacci number fits in int128 (F_184 < 2^127).
inline constexpr int kFibIndexCap = 184;

// F_0 = 0, F_1 = 1. Throws limit_error past the index cap.
int128 fib(int k);

// Zeckendorf form: strictly decreasing indices >= 2, no two consecutive.
// Empty index list represents zero.
class ZeckendorfForm {
public:
    ZeckendorfForm() = default;
    explicit ZeckendorfForm(std::vector<int> indices);

    static ZeckendorfForm encode(int128 x);       // greedy; x >= 0
    static ZeckendorfForm parse(const std::string& text);

    int128 value() const;
    const std::vector<int>& indices() const { return indices_; }
    bool zero() const { return indices_.empty(); }
    int leading_index() const;                    // largest index; throws on zero

    // "F11+F6+F4" in descending index order; "0" for zero.
    std::string to_string() const;

    bool operator==(const ZeckendorfForm&) const = default;

private:
    std::vector<int> indices_;                    // descending
};

// Zeckendorf form of F_m * F_n for 1 <= n <= m, by closed form:
//   n even: sum of F_{m+n+2-4r}, r = 1..n/2
//   n odd:  the same terms plus F_{m-n+1} (index 1 normalized to 2)
ZeckendorfForm zeck_product(int m, int n);

} // namespace gono
