#include "f5lab/vertex_set.hpp"

#include "f5lab/error.hpp"

#include <string>

namespace f5lab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::Duplicate: return "Duplicate";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

VertexSet::VertexSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative universe size");
}

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= n_)
        throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " not below " + std::to_string(n_));
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= n_) return;
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    auto k = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < k; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o) return false;
    }
    return true;
}

int VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
}

int VertexSet::next(int v) const noexcept {
    int start = v + 1;
    if (start >= n_) return -1;
    auto w = static_cast<std::size_t>(start) >> 6;
    auto bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
        if (++w >= words_.size()) return -1;
        bits = words_[w];
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.n_ > n_) throw Error(ErrorKind::OutOfRange, "vertex set union across universes");
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(n_);
    out -= *this;
    return out;
}

}  // namespace f5lab
