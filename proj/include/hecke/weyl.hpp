#pragma once

#include "hecke/root_datum.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hecke {

// Element of W^v.  The integer matrices are authoritative: `act` is the
// action on simple-root coordinates (column j = w(alpha_j)), `inv` that of
// w^{-1}, `yact` the action on Y coordinates.  The canonical word is the
// ShortLex-least reduced word and is a normal form, so comparisons use it.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(const RootDatum& d);
  static WeylElt simple(const RootDatum& d, int i);
  static WeylElt from_word(const RootDatum& d, const std::vector<int>& word);

  const RootDatum* datum() const { return d_; }
  const std::vector<int>& word() const;
  int length() const { return static_cast<int>(word().size()); }
  bool is_identity() const { return word().empty(); }

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;
  WeylElt lmul(int i) const;  // r_i * w, cached per element
  WeylElt rmul(int i) const;  // w * r_i

  Coweight apply(const Coweight& y) const;
  IntVec apply_root(const IntVec& root) const;
  IntVec apply_inverse_root(const IntVec& root) const;
  const IntMat& root_matrix() const { return rep_->act; }
  const IntMat& y_matrix() const { return rep_->yact; }

  bool is_left_descent(int i) const;   // l(r_i w) < l(w)
  bool is_right_descent(int i) const;  // l(w r_i) < l(w)

  bool operator==(const WeylElt& o) const { return rep_ == o.rep_ || word() == o.word(); }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  // ShortLex
  bool operator<(const WeylElt& o) const {
    const auto &a = word(), &b = o.word();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  std::string to_string() const;  // "e" or "r1r2..."

 private:
  struct Rep {
    std::vector<int> word;
    IntMat act, inv, yact;
    mutable std::mutex mu;
    mutable std::vector<std::shared_ptr<const Rep>> up;   // r_i w when longer
    mutable std::vector<std::weak_ptr<const Rep>> down;   // r_i w when shorter
  };
  static std::shared_ptr<Rep> make_rep(const RootDatum& d, IntMat act, IntMat inv, IntMat yact);
  const RootDatum* d_ = nullptr;
  std::shared_ptr<const Rep> rep_;
};

bool is_negative_root(const IntVec& root);

bool bruhat_leq(const WeylElt& u, const WeylElt& w);
// minimal element of w W_J
WeylElt coset_min_rep(const WeylElt& w, const std::vector<int>& J);
std::vector<WeylElt> enumerate_up_to_length(const RootDatum& d, int L);
// all elements, finite type only
std::vector<WeylElt> enumerate_all(const RootDatum& d);
WeylElt longest_element(const RootDatum& d, const std::vector<int>& J);
// stabilizer indices of a dominant coweight
std::vector<int> stabilizer_indices(const RootDatum& d, const Coweight& dominant);
WeylElt w_lambda_plus(const RootDatum& d, const Coweight& y);

std::string word_to_csv(const std::vector<int>& w);  // "1,2" (1-based), "" for e

struct WeylHash {
  std::size_t operator()(const WeylElt& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : w.word()) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace hecke
