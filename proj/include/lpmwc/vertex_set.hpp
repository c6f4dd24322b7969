#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lpmwc {

// Subset of the vertices {0..n-1} of a fixed graph, bitset-backed.
// All binary operations require both operands to share the same universe.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    VertexSet minus(const VertexSet& o) const {
        assert(n_ == o.n_);
        VertexSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
        return r;
    }

    VertexSet intersect(const VertexSet& o) const {
        assert(n_ == o.n_);
        VertexSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
        return r;
    }

    VertexSet unite(const VertexSet& o) const {
        assert(n_ == o.n_);
        VertexSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(int(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    // Lexicographic order on the ascending vertex sequences, so {0,2} < {1}
    // and a proper prefix precedes its extensions. Used for deterministic
    // tie-breaks.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        auto va = a.to_vector();
        auto vb = b.to_vector();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace lpmwc
