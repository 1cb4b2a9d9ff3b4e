#ifndef BRAIDCONE_ELEMSET_HPP
#define BRAIDCONE_ELEMSET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

// Element sets are fixed-width bitsets.  The width is configurable at
// build time; one machine word covers every feasible workload since
// upset enumeration is already hopeless well before 64 elements.
#ifndef BRAIDCONE_MAX_N
#define BRAIDCONE_MAX_N 64
#endif

namespace braidcone {

/// A subset of the element universe {0, 1, ..., n-1}.  Value type with
/// numeric ordering (bit i weighs 2^i), which gives the deterministic
/// "lexicographic on bitsets" order used by the enumeration routines.
class ElemSet {
public:
    static constexpr int max_elements = BRAIDCONE_MAX_N;
    static constexpr int word_count = (BRAIDCONE_MAX_N + 63) / 64;

    constexpr ElemSet() = default;

    static ElemSet single(int i) {
        ElemSet s;
        s.set(i);
        return s;
    }

    static ElemSet of(std::initializer_list<int> elems) {
        ElemSet s;
        for (int e : elems) s.set(e);
        return s;
    }

    /// The full universe {0, ..., n-1}.
    static ElemSet full(int n) {
        ElemSet s;
        for (int w = 0; w < word_count; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int bits = n - lo >= 64 ? 64 : n - lo;
            s.w_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        }
        return s;
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    int lowest() const {
        for (int i = 0; i < word_count; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    ElemSet operator|(const ElemSet& o) const {
        ElemSet r;
        for (int i = 0; i < word_count; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    ElemSet operator&(const ElemSet& o) const {
        ElemSet r;
        for (int i = 0; i < word_count; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    ElemSet operator-(const ElemSet& o) const {
        ElemSet r;
        for (int i = 0; i < word_count; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    ElemSet& operator|=(const ElemSet& o) {
        for (int i = 0; i < word_count; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    ElemSet& operator&=(const ElemSet& o) {
        for (int i = 0; i < word_count; ++i) w_[i] &= o.w_[i];
        return *this;
    }

    ElemSet complement_in(int n) const { return full(n) - *this; }

    bool intersects(const ElemSet& o) const {
        for (int i = 0; i < word_count; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const ElemSet& o) const {
        for (int i = 0; i < word_count; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const ElemSet&) const = default;

    std::strong_ordering operator<=>(const ElemSet& o) const {
        for (int i = word_count - 1; i >= 0; --i)
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        return std::strong_ordering::equal;
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for (int i = 0; i < word_count; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                v.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return v;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < word_count; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, word_count> w_{};
};

} // namespace braidcone

#endif
