#include "pastures/finite_field.hpp"

#include <algorithm>

#include "pastures/errors.hpp"

namespace pastures {

namespace {

std::vector<int> digits_of(int code, int p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k && code; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int code_of(const std::vector<int>& d, int p) {
  int c = 0;
  for (size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

// polynomial remainder of a (low-to-high digits) modulo the monic m, over F_p
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p * p) % p;
  }
  a.resize(dm);
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a,
                              const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

bool is_irreducible(const std::vector<int>& m, int p) {
  int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    int lo = 1, hi = 1;
    for (int i = 0; i < d; ++i) lo *= p;
    hi = 2 * lo;
    for (int enc = lo; enc < hi; ++enc) {
      std::vector<int> div = digits_of(enc, p, d + 1);
      auto rem = poly_mod(std::vector<int>(m), div, p);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; }))
        return false;
    }
  }
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

FiniteField FiniteField::make(int q) {
  if (q < 2 || q > (1 << 16))
    throw DomainError("field order must be between 2 and 2^16");
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int k = 0, m = q;
  while (m > 1 && m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw DomainError(std::to_string(q) + " is not a prime power");

  FiniteField F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;
  if (k > 1) {
    // ascending integer encoding is ascending lex on (c_{k-1},...,c_0)
    int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    for (int enc = pk; enc < 2 * pk; ++enc) {
      std::vector<int> cand = digits_of(enc, p, k + 1);
      if (is_irreducible(cand, p)) {
        F.modulus_ = std::move(cand);
        break;
      }
    }
  }

  auto field_mul = [&](int a, int b) {
    if (k == 1) return static_cast<int>((static_cast<long long>(a) * b) % p);
    return code_of(
        poly_mul_mod(digits_of(a, p, k), digits_of(b, p, k), F.modulus_, p),
        p);
  };

  if (q == 2) {
    F.exp_ = {1};
    F.log_ = {0, 0};
    return F;
  }
  auto factors = prime_factors(q - 1);
  for (int g = 2; g < q; ++g) {
    std::vector<int> exp(q - 1);
    exp[0] = 1;
    for (int i = 1; i < q - 1; ++i) exp[i] = field_mul(exp[i - 1], g);
    if (field_mul(exp[q - 2], g) != 1) continue;
    bool primitive = true;
    for (int f : factors)
      if (exp[(q - 1) / f] == 1) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    F.exp_ = std::move(exp);
    F.log_.assign(q, 0);
    for (int i = 0; i < q - 1; ++i) F.log_[F.exp_[i]] = i;
    break;
  }
  return F;
}

int FiniteField::add(int a, int b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = digits_of(a, p_, k_), db = digits_of(b, p_, k_);
  for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return code_of(da, p_);
}

int FiniteField::neg(int a) const {
  if (k_ == 1) return (p_ - a) % p_;
  auto d = digits_of(a, p_, k_);
  for (auto& c : d) c = (p_ - c) % p_;
  return code_of(d, p_);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw DomainError("zero is not invertible");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw DomainError("zero is not invertible");
  }
  long long ord = q_ - 1;
  long long r = ((log_[a] * (e % ord)) % ord + ord) % ord;
  return exp_[r];
}

int FiniteField::from_int(long long v) const {
  long long r = v % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

std::string FiniteField::el_str(int code) const {
  if (k_ == 1) return std::to_string(code);
  auto d = digits_of(code, p_, k_);
  std::string out = "[";
  for (int i = 0; i < k_; ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + "]";
}

} // namespace pastures
