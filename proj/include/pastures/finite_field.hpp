#pragma once

#include <string>
#include <vector>

namespace pastures {

// Finite field of order q = p^k <= 2^16. Elements are coded 0..q-1 as
// base-p digit strings: code sum c_i p^i stands for sum c_i x^i. For k > 1
// the modulus is the lexicographically least monic irreducible polynomial
// of degree k (on the coefficient tuple c_{k-1},...,c_0), so fields and all
// reports are deterministic.
class FiniteField {
 public:
  static FiniteField make(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;                 // a != 0
  int pow(int a, long long e) const;    // a != 0 when e <= 0
  int neg_one() const { return neg(1); }
  int from_int(long long v) const;      // embeds v mod p

  // Prime fields print as integers, extensions as "[c0,c1,...]".
  std::string el_str(int code) const;

 private:
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;   // length k+1, monic; empty placeholder for k=1
  std::vector<int> exp_;       // exp_[i] = generator^i, i in [0, q-1)
  std::vector<int> log_;       // inverse table on nonzero codes
};

} // namespace pastures
