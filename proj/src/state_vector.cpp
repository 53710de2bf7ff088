#include "binpath/state_vector.hpp"

#include <bit>
#include <stdexcept>

namespace binpath {

StateVector StateVector::from_string(std::string_view bits) {
    StateVector x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            x.words_[i / 64] |= std::uint64_t{1} << (i % 64);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("state vector must contain only '0' and '1'");
        }
    }
    return x;
}

StateVector StateVector::from_value(std::uint64_t value, std::size_t size) {
    if (size > 64) throw std::invalid_argument("from_value supports at most 64 bits");
    if (size < 64 && (value >> size) != 0)
        throw std::invalid_argument("value does not fit in the given size");
    StateVector x(size);
    if (size > 0) x.words_[0] = value;
    return x;
}

void StateVector::set_bit(std::size_t arc, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << ((arc - 1) % 64);
    if (value)
        words_[(arc - 1) / 64] |= mask;
    else
        words_[(arc - 1) / 64] &= ~mask;
}

bool StateVector::all_ones() const {
    if (size_ == 0) return true;
    for (std::size_t w = 0; w + 1 < words_.size(); ++w)
        if (words_[w] != ~std::uint64_t{0}) return false;
    const std::size_t top_bits = size_ - (words_.size() - 1) * 64;
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    return words_.back() == top_mask;
}

bool StateVector::any() const {
    for (std::uint64_t w : words_)
        if (w != 0) return true;
    return false;
}

std::size_t StateVector::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool StateVector::is_subset_of(const StateVector& other) const {
    if (size_ != other.size_) throw std::invalid_argument("state vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

std::uint64_t StateVector::value_u64() const {
    if (size_ > 64) throw std::logic_error("state vector wider than 64 bits");
    return words_.empty() ? 0 : words_[0];
}

std::string StateVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1u) s[i] = '1';
    return s;
}

} // namespace binpath
