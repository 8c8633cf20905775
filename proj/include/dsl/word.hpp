#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>

namespace dsl {

// Letters of X: code 0 is x0, code 1 + g is x_g for the group element of index g.
using XLetter = std::uint16_t;

inline constexpr XLetter kX0 = 0;
inline constexpr XLetter x_letter(int g) { return static_cast<XLetter>(g + 1); }
inline constexpr bool is_x0(XLetter l) { return l == 0; }
inline constexpr int letter_group(XLetter l) { return static_cast<int>(l) - 1; }

// Letters of Y: y_{n,s} is packed as (n << 16) | s, so numeric order is (n, s) order.
using YLetter = std::uint32_t;

inline constexpr YLetter y_letter(int n, int s) {
  return (static_cast<YLetter>(n) << 16) | static_cast<YLetter>(s);
}
inline constexpr int y_weight(YLetter l) { return static_cast<int>(l >> 16); }
inline constexpr int y_group(YLetter l) { return static_cast<int>(l & 0xffffu); }

struct XTraits {
  using letter_type = XLetter;
  static int weight(XLetter) { return 1; }
};

struct YTraits {
  using letter_type = YLetter;
  static int weight(YLetter l) { return y_weight(l); }
};

// A word with cached degree.  Words are ordered by degree, then length, then
// lexicographically by letter code.
template <class Traits>
class Word {
 public:
  using letter_type = typename Traits::letter_type;
  using container = boost::container::small_vector<letter_type, 12>;

  Word() = default;
  Word(std::initializer_list<letter_type> letters) : letters_(letters) { recount(); }
  template <class It>
  Word(It first, It last) : letters_(first, last) {
    recount();
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int degree() const { return degree_; }
  letter_type operator[](std::size_t i) const { return letters_[i]; }
  letter_type back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(letter_type l) {
    letters_.push_back(l);
    degree_ += Traits::weight(l);
  }

  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    degree_ += w.degree_;
  }

  Word slice(std::size_t first, std::size_t last) const { return Word(letters_.begin() + first, letters_.begin() + last); }

  friend Word operator*(const Word& a, const Word& b) {
    Word r;
    r.letters_.reserve(a.size() + b.size());
    r.letters_.insert(r.letters_.end(), a.letters_.begin(), a.letters_.end());
    r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  friend bool operator<(const Word& a, const Word& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
  }

  friend std::size_t hash_value(const Word& w) { return boost::hash_range(w.letters_.begin(), w.letters_.end()); }

 private:
  void recount() {
    degree_ = 0;
    for (auto l : letters_) degree_ += Traits::weight(l);
  }

  container letters_;
  int degree_ = 0;
};

using XWord = Word<XTraits>;
using YWord = Word<YTraits>;

template <class W>
struct WordHash {
  std::size_t operator()(const W& w) const { return hash_value(w); }
};

}  // namespace dsl
