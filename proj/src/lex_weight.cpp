#include "binpath/lex_weight.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace binpath {

namespace {
constexpr std::uint64_t kDecChunk = 10'000'000'000'000'000'000ull; // 10^19
constexpr int kDecChunkDigits = 19;
} // namespace

LexWeight LexWeight::infinity() {
    LexWeight w;
    w.inf_ = true;
    return w;
}

LexWeight LexWeight::power_of_two(std::size_t exponent) {
    LexWeight w;
    w.words_.assign(exponent / 64 + 1, 0);
    w.words_.back() = std::uint64_t{1} << (exponent % 64);
    return w;
}

LexWeight LexWeight::from_u64(std::uint64_t value) {
    LexWeight w;
    if (value != 0) w.words_.push_back(value);
    return w;
}

LexWeight LexWeight::from_words(std::vector<std::uint64_t> words) {
    LexWeight w;
    w.words_ = std::move(words);
    w.trim();
    return w;
}

void LexWeight::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool LexWeight::bit(std::size_t exponent) const {
    if (inf_) throw std::logic_error("bit() on infinity");
    const std::size_t w = exponent / 64;
    return w < words_.size() && ((words_[w] >> (exponent % 64)) & 1u);
}

std::size_t LexWeight::bit_length() const {
    if (inf_) throw std::logic_error("bit_length() on infinity");
    if (words_.empty()) return 0;
    return words_.size() * 64 - static_cast<std::size_t>(std::countl_zero(words_.back()));
}

std::uint64_t LexWeight::to_u64() const {
    if (inf_ || words_.size() > 1) throw std::logic_error("value does not fit in 64 bits");
    return words_.empty() ? 0 : words_[0];
}

int compare(const LexWeight& a, const LexWeight& b) {
    if (a.inf_ || b.inf_) {
        if (a.inf_ && b.inf_) return 0;
        return a.inf_ ? 1 : -1;
    }
    if (a.words_.size() != b.words_.size())
        return a.words_.size() < b.words_.size() ? -1 : 1;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
}

LexWeight lex_add(const LexWeight& a, const LexWeight& b) {
    if (a.inf_ || b.inf_) return LexWeight::infinity();
    const auto& longer = a.words_.size() >= b.words_.size() ? a.words_ : b.words_;
    const auto& shorter = a.words_.size() >= b.words_.size() ? b.words_ : a.words_;
    LexWeight out;
    out.words_.reserve(longer.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        std::uint64_t sum = longer[i] + carry;
        carry = sum < carry ? 1 : 0;
        if (i < shorter.size()) {
            sum += shorter[i];
            if (sum < shorter[i]) carry = 1;
        }
        out.words_.push_back(sum);
    }
    if (carry) out.words_.push_back(carry);
    return out;
}

void LexWeight::assign_sum_bit(const LexWeight& base, std::size_t exponent) {
    assert(!base.inf_ && this != &base);
    inf_ = false;
    const std::size_t we = exponent / 64;
    words_.assign(base.words_.begin(), base.words_.end());
    if (words_.size() < we + 1) words_.resize(we + 1, 0);
    std::uint64_t add = std::uint64_t{1} << (exponent % 64);
    for (std::size_t i = we; add != 0; ++i) {
        if (i == words_.size()) {
            words_.push_back(add);
            break;
        }
        words_[i] += add;
        add = words_[i] < add ? 1 : 0;
    }
}

int LexWeight::compare_sum_bit(const LexWeight& base, std::size_t exponent, const LexWeight& rhs) {
    assert(!base.inf_);
    if (rhs.inf_) return -1;
    if (base.bit(exponent)) {
        // Carry case (a cyclic relaxation candidate); rare enough to materialize.
        LexWeight sum;
        sum.assign_sum_bit(base, exponent);
        return compare(sum, rhs);
    }
    const std::size_t we = exponent / 64;
    const std::uint64_t mask = std::uint64_t{1} << (exponent % 64);
    const std::size_t sum_words = std::max(base.words_.size(), we + 1);
    if (sum_words != rhs.words_.size()) return sum_words < rhs.words_.size() ? -1 : 1;
    for (std::size_t i = sum_words; i-- > 0;) {
        std::uint64_t aw = i < base.words_.size() ? base.words_[i] : 0;
        if (i == we) aw |= mask;
        if (aw != rhs.words_[i]) return aw < rhs.words_[i] ? -1 : 1;
    }
    return 0;
}

std::string LexWeight::decimal() const {
    if (inf_) return "inf";
    if (words_.empty()) return "0";
    std::vector<std::uint64_t> tmp(words_.rbegin(), words_.rend()); // most-significant first
    std::string out;
    while (!tmp.empty()) {
        unsigned __int128 rem = 0;
        for (auto& word : tmp) {
            unsigned __int128 cur = (rem << 64) | word;
            word = static_cast<std::uint64_t>(cur / kDecChunk);
            rem = cur % kDecChunk;
        }
        while (!tmp.empty() && tmp.front() == 0) tmp.erase(tmp.begin());
        std::string chunk = std::to_string(static_cast<std::uint64_t>(rem));
        if (tmp.empty()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(kDecChunkDigits - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

std::string LexWeight::bits_lsb_first(std::size_t min_width) const {
    if (inf_) throw std::logic_error("bits_lsb_first() on infinity");
    const std::size_t width = std::max(min_width, bit_length());
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::size_t WeightScheme::bit_exponent(int arc_id) const {
    if (arc_id < 1 || arc_id > arc_count)
        throw std::out_of_range("arc id out of range for weight scheme");
    return kind == WeightKind::earliest ? static_cast<std::size_t>(arc_id - 1)
                                        : static_cast<std::size_t>(arc_count - arc_id);
}

LexWeight vector_value(const StateVector& x) {
    return LexWeight::from_words({x.words().begin(), x.words().end()});
}

bool bat_precedes(const StateVector& x, const StateVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("state vector length mismatch");
    const auto xw = x.words();
    const auto yw = y.words();
    for (std::size_t i = xw.size(); i-- > 0;) {
        if (xw[i] == yw[i]) continue;
        // Highest differing bit decides; x precedes iff y has the 1 there.
        const int top = 63 - std::countl_zero(xw[i] ^ yw[i]);
        return (yw[i] >> top) & 1u;
    }
    return false;
}

} // namespace binpath
