#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blobtilt {

/**
 * Word: a sequence over {1,2} of length n, bit-packed so that lex order
 * coincides with integer order on rank(): letter 1 -> bit 0, letter 2 ->
 * bit 1, most significant bit = leftmost letter.  11..1 has rank 0.
 */
class Word {
public:
    Word(int length, std::uint32_t bits) : length_(length), bits_(bits) {
        if (length < 0 || length > 31)
            throw std::invalid_argument("Word: length out of range");
        if (length < 31 && (bits >> length) != 0)
            throw std::invalid_argument("Word: spurious high bits");
    }

    static Word from_string(std::string_view s) {
        std::uint32_t bits = 0;
        for (char ch : s) {
            if (ch != '1' && ch != '2')
                throw std::invalid_argument("Word: letters must be 1 or 2");
            bits = (bits << 1) | static_cast<std::uint32_t>(ch == '2');
        }
        return Word(static_cast<int>(s.size()), bits);
    }

    // v(r,n) = 1^r 2^{n-r}, the generator of its weight sector.
    static Word sector_generator(int n, int r) {
        return Word(n, (1u << (n - r)) - 1u);
    }

    int length() const { return length_; }
    std::uint32_t rank() const { return bits_; }

    // 1-based position from the left.
    int letter(int pos) const {
        if (pos < 1 || pos > length_)
            throw std::out_of_range("Word: letter position out of range");
        return 1 + static_cast<int>((bits_ >> (length_ - pos)) & 1u);
    }

    // Number of 1s.
    int weight() const {
        return length_ - __builtin_popcount(bits_);
    }

    Word with_letter(int pos, int letter) const {
        std::uint32_t mask = 1u << (length_ - pos);
        std::uint32_t bits = letter == 2 ? (bits_ | mask) : (bits_ & ~mask);
        return Word(length_, bits);
    }

    std::string str() const {
        std::string s;
        s.reserve(static_cast<size_t>(length_));
        for (int i = 1; i <= length_; ++i)
            s.push_back(static_cast<char>('0' + letter(i)));
        return s;
    }

    bool operator==(const Word& o) const {
        return length_ == o.length_ && bits_ == o.bits_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

private:
    int length_;
    std::uint32_t bits_;
};

// Total order with 1 before 2: negative/zero/positive like strcmp.
inline int lex_compare(const Word& w1, const Word& w2) {
    if (w1.length() != w2.length())
        throw std::invalid_argument("lex_compare: length mismatch");
    if (w1.rank() < w2.rank()) return -1;
    if (w1.rank() > w2.rank()) return 1;
    return 0;
}

/**
 * Sector: the words of length n with exactly r ones, in lex order.  These
 * index the basis of the weight-(2r-n) permutation summand of tensor space.
 */
struct Sector {
    int n = 0;
    int r = 0;
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
};

inline Sector enumerate_sector(int n, int r) {
    if (r < 0 || r > n) throw std::out_of_range("enumerate_sector: r out of range");
    Sector s;
    s.n = n;
    s.r = r;
    const int twos = n - r;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        if (__builtin_popcount(bits) == twos) s.words.emplace_back(n, bits);
    return s;
}

// u-map: the lex-earliest word supporting a nonzero formal vector.  Works on
// anything exposing is_zero() and min_index() (see SparseVector).
template <class Vec>
Word u_map(const Vec& v, int n_letters) {
    if (v.is_zero()) throw std::invalid_argument("u_map: zero vector");
    return Word(n_letters, v.min_index());
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

// sectors stream as newline-separated digit strings
inline std::ostream& operator<<(std::ostream& os, const Sector& s) {
    for (const auto& w : s.words) os << w.str() << '\n';
    return os;
}

}  // namespace blobtilt
