#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "dsl/rational.hpp"

namespace dsl {

struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A finite abelian group Z/N1 x ... x Z/Nk.  Elements are also addressed by a
// dense index in [0, order) which follows the lexicographic order of residue
// tuples; the identity has index 0.
class GroupSpec {
 public:
  GroupSpec() : GroupSpec(std::vector<int>{1}) {}

  explicit GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw PreconditionError("group needs at least one cyclic factor");
    order_ = 1;
    for (int n : factors_) {
      if (n < 1) throw PreconditionError("cyclic factor orders must be positive");
      if (order_ > 65535 / n) throw ResourceLimitError("group order too large");
      order_ *= n;
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * factors_[i];
    mul_.resize(static_cast<std::size_t>(order_) * order_);
    inv_.resize(order_);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        int idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          int r = (digit(a, i) + digit(b, i)) % factors_[i];
          idx += r * strides_[i];
        }
        mul_[static_cast<std::size_t>(a) * order_ + b] = idx;
      }
      int idx = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += ((factors_[i] - digit(a, i)) % factors_[i]) * strides_[i];
      }
      inv_[a] = idx;
    }
  }

  static GroupSpec cyclic(int n) { return GroupSpec(std::vector<int>{n}); }

  // Accepts "cyclic:N" and "product:N1xN2x...".
  static GroupSpec parse(std::string_view text) {
    auto bad = [&] { return ParseError("invalid group '" + std::string(text) + "'"); };
    auto number = [&](std::string_view s) {
      if (s.empty() || s.size() > 6) throw bad();
      int v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw bad();
        v = v * 10 + (c - '0');
      }
      if (v < 1) throw bad();
      return v;
    };
    if (text.rfind("cyclic:", 0) == 0) return cyclic(number(text.substr(7)));
    if (text.rfind("product:", 0) == 0) {
      std::vector<int> f;
      std::string_view rest = text.substr(8);
      while (true) {
        auto pos = rest.find('x');
        f.push_back(number(rest.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        rest = rest.substr(pos + 1);
      }
      return GroupSpec(f);
    }
    throw bad();
  }

  std::string name() const {
    if (factors_.size() == 1) return "cyclic:" + std::to_string(factors_[0]);
    std::string s = "product:";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += 'x';
      s += std::to_string(factors_[i]);
    }
    return s;
  }

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int div(int a, int b) const { return mul(a, inv(b)); }
  int power(int a, long k) const {
    int r = 0;
    long e = ((k % order_) + order_) % order_;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  int index(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) throw PreconditionError("group element does not match group " + name());
    int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      int r = g.residues[i];
      if (r < 0 || r >= factors_[i]) throw PreconditionError("residue out of range for group " + name());
      idx += r * strides_[i];
    }
    return idx;
  }

  GroupElement element(int idx) const {
    GroupElement g;
    for (std::size_t i = 0; i < factors_.size(); ++i) g.residues.push_back(digit(idx, i));
    return g;
  }

  int digit(int idx, std::size_t i) const { return (idx / strides_[i]) % factors_[i]; }
  int generator(std::size_t i) const { return strides_[i]; }

  std::string residue_string(int idx) const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(digit(idx, i));
    }
    return s;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

// A homomorphism given by the images of the standard generators of the source.
class GroupMorphism {
 public:
  GroupMorphism(GroupSpec source, GroupSpec target, std::vector<int> generator_images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
    if (images_.size() != source_.factors().size()) throw PreconditionError("one image per source generator required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] < 0 || images_[i] >= target_.order()) throw PreconditionError("generator image out of range");
      if (target_.power(images_[i], source_.factors()[i]) != target_.identity()) {
        throw PreconditionError("generator images violate the relations of the source group");
      }
    }
    table_.resize(source_.order());
    kernel_size_ = 0;
    for (int g = 0; g < source_.order(); ++g) {
      int img = target_.identity();
      for (std::size_t i = 0; i < images_.size(); ++i) img = target_.mul(img, target_.power(images_[i], source_.digit(g, i)));
      table_[g] = img;
      if (img == target_.identity()) ++kernel_size_;
    }
  }

  static GroupMorphism identity(const GroupSpec& g) {
    std::vector<int> imgs;
    for (std::size_t i = 0; i < g.factors().size(); ++i) imgs.push_back(g.generator(i));
    return GroupMorphism(g, g, imgs);
  }

  const GroupSpec& source() const { return source_; }
  const GroupSpec& target() const { return target_; }
  int operator()(int g) const { return table_[g]; }
  int kernel_size() const { return kernel_size_; }

 private:
  GroupSpec source_;
  GroupSpec target_;
  std::vector<int> images_;
  std::vector<int> table_;
  int kernel_size_ = 1;
};

}  // namespace dsl
