#include "gono/additive_set.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace gono {

namespace {

constexpr int kWordBits = 64;

std::int64_t word_count(std::int64_t modulus) {
    return (modulus + kWordBits - 1) / kWordBits;
}

} // namespace

AdditiveSet::AdditiveSet(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw precondition_error("additive set: modulus must be >= 1");
    if (modulus > kModulusCap) throw limit_error("additive set: modulus above memory cap");
    // One guard word lets unaligned 64-bit reads run past the top without branching.
    words_.assign(size_t(word_count(modulus) + 1), 0);
}

AdditiveSet AdditiveSet::singleton_zero(std::int64_t modulus) {
    AdditiveSet s(modulus);
    s.insert(0);
    return s;
}

AdditiveSet AdditiveSet::from_elements(std::int64_t modulus,
                                       const std::vector<std::int64_t>& xs) {
    AdditiveSet s(modulus);
    for (std::int64_t x : xs) s.insert(x);
    return s;
}

std::int64_t AdditiveSet::size() const {
    std::int64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool AdditiveSet::contains(std::int64_t x) const {
    std::int64_t r = x % modulus_;
    if (r < 0) r += modulus_;
    return (words_[size_t(r / kWordBits)] >> (r % kWordBits)) & 1;
}

void AdditiveSet::insert(std::int64_t x) {
    std::int64_t r = x % modulus_;
    if (r < 0) r += modulus_;
    words_[size_t(r / kWordBits)] |= std::uint64_t(1) << (r % kWordBits);
}

std::vector<std::int64_t> AdditiveSet::elements() const {
    std::vector<std::int64_t> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(std::int64_t(w) * kWordBits + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool AdditiveSet::is_subset_of(const AdditiveSet& other) const {
    if (modulus_ != other.modulus_)
        throw precondition_error("additive set: modulus mismatch");
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

bool AdditiveSet::operator==(const AdditiveSet& other) const {
    return modulus_ == other.modulus_ && words_ == other.words_;
}

// OR the cyclic rotation of src by `shift` into *this. Splits the rotation into the
// two linear block copies [0, M-shift) -> [shift, M) and [M-shift, M) -> [0, shift).
void AdditiveSet::or_rotated(const AdditiveSet& src, std::int64_t shift) {
    std::int64_t m = modulus_;
    // Reads one unaligned 64-bit window at src bit position p; guard word keeps the
    // q+1 access in range for any p < m.
    auto read = [&](std::int64_t p) -> std::uint64_t {
        std::int64_t q = p / kWordBits;
        int r = int(p % kWordBits);
        std::uint64_t lo = src.words_[size_t(q)] >> r;
        if (r == 0) return lo;
        return lo | (src.words_[size_t(q + 1)] << (kWordBits - r));
    };
    auto or_block = [&](std::int64_t src_begin, std::int64_t dst_begin, std::int64_t len) {
        while (len > 0) {
            std::int64_t dw = dst_begin / kWordBits;
            int off = int(dst_begin % kWordBits);
            int take = int(std::min<std::int64_t>(kWordBits - off, len));
            std::uint64_t chunk = read(src_begin);
            if (take < kWordBits) chunk &= (std::uint64_t(1) << take) - 1;
            words_[size_t(dw)] |= chunk << off;
            src_begin += take;
            dst_begin += take;
            len -= take;
        }
    };
    shift %= m;
    if (shift < 0) shift += m;
    or_block(0, shift, m - shift);
    or_block(m - shift, 0, shift);
    words_.back() = 0;                            // keep the guard word clean
    if (m % kWordBits)                            // and the unused top bits
        words_[size_t(word_count(m) - 1)] &= (std::uint64_t(1) << (m % kWordBits)) - 1;
}

AdditiveSet operator+(const AdditiveSet& a, const AdditiveSet& b) {
    if (a.modulus() != b.modulus())
        throw precondition_error("sumset: modulus mismatch");
    const AdditiveSet& small = a.size() <= b.size() ? a : b;
    const AdditiveSet& large = a.size() <= b.size() ? b : a;
    AdditiveSet out(a.modulus());
    for (std::int64_t e : small.elements()) out.or_rotated(large, e);
    return out;
}

AdditiveSet iterated_sumset(const AdditiveSet& a, int m) {
    if (m < 0) throw precondition_error("iterated_sumset: negative order");
    AdditiveSet acc = AdditiveSet::singleton_zero(a.modulus());
    for (int i = 0; i < m; ++i) acc = acc + a;
    return acc;
}

std::optional<int> covering_number(const AdditiveSet& a) {
    if (!a.contains(0))
        throw precondition_error("covering_number: requires 0 in the set");
    AdditiveSet acc = AdditiveSet::singleton_zero(a.modulus());
    int m = 0;
    while (!acc.full()) {
        AdditiveSet next = acc + a;
        if (next == acc) return std::nullopt;     // stabilized below full: proper subgroup
        acc = std::move(next);
        ++m;
    }
    return m;
}

SumsetGonality gonality_sumset(const AdditiveSet& a, int rank) {
    if (rank < 0) throw precondition_error("gonality_sumset: negative rank");
    if (!a.contains(0))
        throw precondition_error("gonality_sumset: requires 0 in the set");

    // sums[k] = kA; grown on demand. Stabilization bounds the search: once kA stops
    // growing it is a union of subgroup cosets and any D in it succeeds.
    std::vector<AdditiveSet> sums{AdditiveSet::singleton_zero(a.modulus())};
    auto ensure = [&](int k) -> const AdditiveSet& {
        while (int(sums.size()) <= k) sums.push_back(sums.back() + a);
        return sums[size_t(k)];
    };

    const std::vector<std::int64_t> shifts = ensure(rank).elements();
    for (int d = rank;; ++d) {
        const AdditiveSet& pool = ensure(d);
        const AdditiveSet& target = sums[size_t(d - rank)];
        for (std::int64_t cand : pool.elements()) {
            bool ok = true;
            for (std::int64_t s : shifts)
                if (!target.contains(cand - s)) {
                    ok = false;
                    break;
                }
            if (ok) return {d, cand};
        }
        if (d > rank && pool == sums[size_t(d - 1)] && target == sums[size_t(d - rank - 1)])
            throw error("gonality_sumset: stabilized without witness");  // unreachable with 0 in A
    }
}

AdditiveSet affine_image(const AdditiveSet& a, std::int64_t translate, bool negate) {
    AdditiveSet out(a.modulus());
    for (std::int64_t e : a.elements())
        out.insert(negate ? translate - e : translate + e);
    return out;
}

std::optional<FreimanCounterexample> freiman_check(
    const AdditiveSet& a,
    const std::function<std::int64_t(std::int64_t)>& map,
    std::int64_t image_modulus,
    int order,
    std::uint64_t budget) {
    if (order < 1) throw precondition_error("freiman_check: order must be >= 1");
    if (image_modulus < 1) throw precondition_error("freiman_check: bad image modulus");

    const std::vector<std::int64_t> xs = a.elements();
    const std::int64_t m1 = a.modulus(), m2 = image_modulus;
    std::vector<std::int64_t> ys;
    for (std::int64_t x : xs) {
        std::int64_t y = map(x) % m2;
        if (y < 0) y += m2;
        ys.push_back(y);
    }

    size_t k = xs.size();
    if (k == 0) return std::nullopt;

    // Non-decreasing index tuples = order-m multisets, lexicographic order.
    std::vector<size_t> idx(size_t(order), 0);
    auto values = [&](const std::vector<size_t>& t) {
        std::vector<std::int64_t> v;
        for (size_t i : t) v.push_back(xs[i]);
        return v;
    };

    struct Seen {
        std::int64_t partner;                     // sum on the other side
        std::vector<size_t> tuple;
    };
    std::unordered_map<std::int64_t, Seen> by_sum, by_image;
    std::uint64_t used = 0;

    while (true) {
        if (++used > budget) throw limit_error("freiman_check: multiset budget exceeded");
        std::int64_t s = 0, is = 0;
        for (size_t i : idx) {
            s = (s + xs[i]) % m1;
            is = (is + ys[i]) % m2;
        }
        if (auto it = by_sum.find(s); it != by_sum.end()) {
            if (it->second.partner != is)
                return FreimanCounterexample{values(it->second.tuple), values(idx)};
        } else {
            by_sum.emplace(s, Seen{is, idx});
        }
        if (auto it = by_image.find(is); it != by_image.end()) {
            if (it->second.partner != s)
                return FreimanCounterexample{values(it->second.tuple), values(idx)};
        } else {
            by_image.emplace(is, Seen{s, idx});
        }

        // Advance the odometer.
        int pos = order - 1;
        while (pos >= 0 && idx[size_t(pos)] == k - 1) --pos;
        if (pos < 0) break;
        size_t next = idx[size_t(pos)] + 1;
        for (int t = pos; t < order; ++t) idx[size_t(t)] = next;
    }
    return std::nullopt;
}

} // namespace gono
