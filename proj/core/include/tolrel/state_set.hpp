#ifndef TOLREL_STATE_SET_HPP
#define TOLREL_STATE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tolrel {

/// Set of state indices, packed into one 64-bit word. All relation
/// algorithms in this library run on word-sized masks, which is why the
/// state count is capped at 64.
class StateSet {
public:
    constexpr StateSet() = default;

    static constexpr StateSet from_bits(std::uint64_t bits) {
        StateSet s;
        s.bits_ = bits;
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr StateSet full(std::size_t n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static constexpr StateSet single(std::size_t i) {
        return from_bits(std::uint64_t{1} << i);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }

    constexpr StateSet& insert(std::size_t i) {
        bits_ |= std::uint64_t{1} << i;
        return *this;
    }

    constexpr StateSet& erase(std::size_t i) {
        bits_ &= ~(std::uint64_t{1} << i);
        return *this;
    }

    constexpr bool subset_of(StateSet other) const { return (bits_ & ~other.bits_) == 0; }

    /// Index of the smallest member; undefined on the empty set.
    constexpr std::size_t lowest() const {
        return static_cast<std::size_t>(std::countr_zero(bits_));
    }

    constexpr StateSet operator|(StateSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr StateSet operator&(StateSet o) const { return from_bits(bits_ & o.bits_); }
    /// Set difference.
    constexpr StateSet operator-(StateSet o) const { return from_bits(bits_ & ~o.bits_); }

    constexpr StateSet& operator|=(StateSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr StateSet& operator&=(StateSet o) {
        bits_ &= o.bits_;
        return *this;
    }

    friend constexpr bool operator==(StateSet a, StateSet b) = default;

    /// Members in ascending index order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member sequences, e.g.
/// {0,1} < {0,2} < {1} and {0} < {0,1}. Used to sort class lists
/// deterministically.
inline bool lex_less(StateSet a, StateSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

}  // namespace tolrel

#endif
