#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gono/errors.hpp"

namespace gono {

// Subset of Z/MZ as a bit vector. Sumset A+B is a word-level rotate-OR over the
// elements of the smaller operand, O(|B| * M/64).
class AdditiveSet {
public:
    // Memory bound: moduli above this would need > 128 MiB per set.
    static constexpr std::int64_t kModulusCap = std::int64_t(1) << 30;

    explicit AdditiveSet(std::int64_t modulus);   // empty set
    static AdditiveSet singleton_zero(std::int64_t modulus);
    static AdditiveSet from_elements(std::int64_t modulus,
                                     const std::vector<std::int64_t>& xs);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t size() const;
    bool empty() const { return size() == 0; }
    bool full() const { return size() == modulus_; }
    bool contains(std::int64_t x) const;          // any integer, reduced mod M
    void insert(std::int64_t x);

    std::vector<std::int64_t> elements() const;   // ascending representatives in [0, M)

    bool is_subset_of(const AdditiveSet& other) const;
    bool operator==(const AdditiveSet& other) const;

    friend AdditiveSet operator+(const AdditiveSet& a, const AdditiveSet& b);

private:
    std::int64_t modulus_;
    std::vector<std::uint64_t> words_;            // one guard word past the end

    void or_rotated(const AdditiveSet& src, std::int64_t shift);
    friend AdditiveSet affine_image(const AdditiveSet&, std::int64_t, bool);
};

// m-fold sumset A + ... + A; 0A = {0}. Requires m >= 0.
AdditiveSet iterated_sumset(const AdditiveSet& a, int m);

// Least m with mA = Z/MZ, or nullopt if the chain stabilizes short of full
// (equivalently, the subgroup generated by A is proper). Requires 0 in A so the
// chain is increasing.
std::optional<int> covering_number(const AdditiveSet& a);

struct SumsetGonality {
    int degree = 0;
    std::int64_t witness = 0;                     // lexicographically least D
};

// Least d >= r such that some D in dA has D - rA contained in (d-r)A, with the least
// such D. Requires 0 in A. Terminates by subgroup stabilization.
SumsetGonality gonality_sumset(const AdditiveSet& a, int rank);

// { t + a : a in A } or { t - a : a in A } mod M.
AdditiveSet affine_image(const AdditiveSet& a, std::int64_t translate, bool negate);

struct FreimanCounterexample {
    std::vector<std::int64_t> left, right;        // two order-m multisets over A
};

// Checks that `map` restricted to the elements of A is a Freiman isomorphism of the
// given order onto its image in Z/image_modulus: it must be injective, and two
// m-multisets must have equal sums mod |A|'s modulus exactly when their images have
// equal sums mod image_modulus. Returns the first violating pair in enumeration
// order, or nullopt on a clean pass. Throws limit_error if the multiset count
// exceeds the budget.
std::optional<FreimanCounterexample> freiman_check(
    const AdditiveSet& a,
    const std::function<std::int64_t(std::int64_t)>& map,
    std::int64_t image_modulus,
    int order,
    std::uint64_t budget = 50'000'000);

} // namespace gono
