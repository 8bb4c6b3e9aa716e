#include "gono/fibonacci.hpp"

#include <algorithm>
#include <array>

namespace gono {

namespace {

// Table of F_0..F_184, built once. F_184 is the last value below 2^127.
const std::array<int128, kFibIndexCap + 1>& fib_table() {
    static const auto table = [] {
        std::array<int128, kFibIndexCap + 1> t{};
        t[0] = 0;
        t[1] = 1;
        for (int k = 2; k <= kFibIndexCap; ++k) t[k] = checked_add(t[k - 1], t[k - 2]);
        return t;
    }();
    return table;
}

} // namespace

int128 fib(int k) {
    if (k < 0) throw precondition_error("fib: negative index");
    if (k > kFibIndexCap) throw limit_error("fib: index above capacity cap 184");
    return fib_table()[size_t(k)];
}

ZeckendorfForm::ZeckendorfForm(std::vector<int> indices) : indices_(std::move(indices)) {
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 2) throw precondition_error("zeckendorf: index below 2");
        if (indices_[i] > kFibIndexCap) throw limit_error("zeckendorf: index above cap");
        if (i > 0 && indices_[i - 1] - indices_[i] < 2)
            throw precondition_error("zeckendorf: indices must decrease by >= 2");
    }
}

ZeckendorfForm ZeckendorfForm::encode(int128 x) {
    if (x < 0) throw precondition_error("zeckendorf: negative value");
    std::vector<int> idx;
    int k = kFibIndexCap;
    while (x > 0) {
        while (fib(k) > x) --k;
        idx.push_back(k);
        x -= fib(k);
        --k;                                      // skip the neighbor; greedy never reuses it
    }
    return ZeckendorfForm(std::move(idx));
}

ZeckendorfForm ZeckendorfForm::parse(const std::string& text) {
    if (text == "0") return {};
    if (text.empty()) throw precondition_error("zeckendorf parse: empty input");
    std::vector<int> idx;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != 'F') throw precondition_error("zeckendorf parse: expected F");
        ++i;
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw precondition_error("zeckendorf parse: missing index");
        idx.push_back(std::stoi(text.substr(start, i - start)));
        if (i < text.size()) {
            if (text[i] != '+') throw precondition_error("zeckendorf parse: expected +");
            ++i;
            if (i == text.size()) throw precondition_error("zeckendorf parse: trailing +");
        }
    }
    return ZeckendorfForm(std::move(idx));
}

int128 ZeckendorfForm::value() const {
    int128 v = 0;
    for (int k : indices_) v = checked_add(v, fib(k));
    return v;
}

int ZeckendorfForm::leading_index() const {
    if (indices_.empty()) throw precondition_error("zeckendorf: zero has no leading term");
    return indices_.front();
}

std::string ZeckendorfForm::to_string() const {
    if (indices_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (i) s += '+';
        s += 'F';
        s += std::to_string(indices_[i]);
    }
    return s;
}

ZeckendorfForm zeck_product(int m, int n) {
    if (n < 1 || n > m) throw precondition_error("zeck_product: need 1 <= n <= m");
    if (m + n - 2 > kFibIndexCap) throw limit_error("zeck_product: above capacity cap");
    std::vector<int> idx;
    for (int r = 1; r <= n / 2; ++r) idx.push_back(m + n + 2 - 4 * r);
    if (n % 2 == 1) idx.push_back(std::max(m - n + 1, 2));
    return ZeckendorfForm(std::move(idx));
}

} // namespace gono
