#ifndef RAMSEYLAB_BITSET_HPP
#define RAMSEYLAB_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ramseylab {

// Word-packed bit vector sized at construction. Used as an adjacency row
// and as a vertex-set scratch value all over the library.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) return wi * 64 + std::countr_zero(w);
            if (++wi == (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = next(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    static Bitset from_vector(int nbits, const std::vector<int>& vs) {
        Bitset b(nbits);
        for (int v : vs) b.set(v);
        return b;
    }

    bool operator==(const Bitset& o) const = default;

private:
    // Keep bits past nbits_ zero so count()/compare stay honest.
    void trim() {
        if (!words_.empty() && (nbits_ & 63))
            words_.back() &= (uint64_t(1) << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace ramseylab

#endif
