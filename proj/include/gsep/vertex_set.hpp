#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gsep {

// Fixed-universe bitset over vertices 0..n-1. All binary operations require
// both operands to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) add(v);
    }

    int universe() const { return n_; }

    void add(int v) { words_[v >> 6] |= word(v); }
    void remove(int v) { words_[v >> 6] &= ~word(v); }
    bool contains(int v) const { return (words_[v >> 6] & word(v)) != 0; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : words_) if (w != 0) return false;
        return true;
    }

    // Smallest element, or -1 when empty.
    int first() const { return next(-1); }
    // Smallest element > v, or -1 when none.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= static_cast<int>(words_.size())) return -1;
        std::uint64_t w = words_[i] & ~((word(v + 1)) - 1);
        while (true) {
            if (w != 0) return (i << 6) + std::countr_zero(w);
            if (++i >= static_cast<int>(words_.size())) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ull;
        int rem = universe & 63;
        if (rem != 0 && !s.words_.empty()) s.words_.back() = (1ull << rem) - 1;
        return s;
    }
    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    // Orders sets by their sorted element sequences; used for canonical
    // certificate tie-breaking ({0,2} < {0,3} < {1,2}, prefixes first).
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x < 0 && y >= 0;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static std::uint64_t word(int v) { return 1ull << (v & 63); }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gsep
