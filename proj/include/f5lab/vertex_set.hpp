#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace f5lab {

/// Subset of {0, ..., n-1} stored as a packed bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    VertexSet(int n, std::initializer_list<int> members);

    static VertexSet full(int n);

    int universe() const noexcept { return n_; }

    bool contains(int v) const noexcept {
        return v >= 0 && v < n_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
    }
    void insert(int v);
    void erase(int v);

    int count() const noexcept;
    bool empty() const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;

    /// Smallest member, or -1 when empty.
    int first() const noexcept;
    /// Smallest member greater than v, or -1.
    int next(int v) const noexcept;

    std::vector<int> members() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace f5lab
