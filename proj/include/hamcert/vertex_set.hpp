#ifndef HAMCERT_VERTEX_SET_HPP
#define HAMCERT_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hamcert {

/// Maximum order of a Graph. Adjacency rows and vertex sets are single 64-bit words.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

/// Index of the lowest set bit; m must be non-zero.
constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// A subset of {0, ..., 63} with constant-time membership, iterated in ascending order.
class VertexSet {
  public:
    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}
        constexpr int operator*() const { return lowest(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

      private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

    constexpr Mask bits() const { return bits_; }
    constexpr bool contains(int v) const { return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U); }
    constexpr int size() const { return popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int min() const { return lowest(bits_); }
    constexpr void insert(int v) { bits_ |= bit(v); }
    constexpr void erase(int v) { bits_ &= ~bit(v); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

  private:
    Mask bits_ = 0;
};

}  // namespace hamcert

#endif  // HAMCERT_VERTEX_SET_HPP
