#include "pastures/hom.hpp"

#include <cmath>

#include "pastures/errors.hpp"

namespace pastures {

namespace {

// constraints indexed by the largest generator they mention, so the search
// can prune as soon as that generator is assigned
struct Checks {
  // lattice vectors and relations with max mentioned generator <= depth
  std::vector<std::vector<const std::vector<Int>*>> lattice_at;
  std::vector<std::vector<const NullsetRelation*>> relations_at;
};

int max_gen_of(const std::vector<Int>& v, int n) {
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (v[i] != 0) m = i + 1;
  return m;
}

int max_gen_of(const NullsetRelation& r, int n) {
  int m = 0;
  for (const auto& t : r.terms)
    for (int i = 0; i < n; ++i)
      if (t.exps[i] != 0) m = std::max(m, i + 1);
  return m;
}

Checks index_checks(const PasturePresentation& P) {
  int n = P.n();
  Checks c;
  c.lattice_at.resize(n + 1);
  c.relations_at.resize(n + 1);
  for (const auto& v : P.lattice_gens)
    c.lattice_at[max_gen_of(v, n)].push_back(&v);
  for (const auto& r : P.relations)
    c.relations_at[max_gen_of(r, n)].push_back(&r);
  return c;
}

long long small(const Int& v) { return mpz_get_si(v.get_mpz_t()); }

bool lattice_ok(const PasturePresentation& P, const FiniteField& F,
                const std::vector<int>& images, const std::vector<Int>& v) {
  int acc = 1;
  for (int i = 0; i < P.n(); ++i)
    if (v[i] != 0) acc = F.mul(acc, F.pow(images[i], small(v[i])));
  int rhs = small(v[P.n()]) % 2 == 0 ? 1 : F.neg_one();
  return acc == rhs;
}

bool relation_ok(const PasturePresentation& P, const FiniteField& F,
                 const std::vector<int>& images, const NullsetRelation& r) {
  int acc = 0;
  for (const auto& t : r.terms) {
    int v = t.sign < 0 ? F.neg_one() : 1;
    for (int i = 0; i < P.n(); ++i)
      if (t.exps[i] != 0) v = F.mul(v, F.pow(images[i], t.exps[i]));
    acc = F.add(acc, v);
  }
  return acc == 0;
}

bool passes_at(const PasturePresentation& P, const FiniteField& F,
               const std::vector<int>& images, const Checks& c, int depth) {
  for (const auto* v : c.lattice_at[depth])
    if (!lattice_ok(P, F, images, *v)) return false;
  for (const auto* r : c.relations_at[depth])
    if (!relation_ok(P, F, images, *r)) return false;
  return true;
}

} // namespace

std::vector<std::vector<int>> enumerate_homs(const PasturePresentation& P,
                                             const FiniteField& F) {
  int n = P.n();
  Checks c = index_checks(P);
  std::vector<std::vector<int>> out;
  std::vector<int> images(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back(images);
      return;
    }
    for (int v = 1; v < F.q(); ++v) {
      images[depth] = v;
      if (passes_at(P, F, images, c, depth + 1)) self(self, depth + 1);
    }
    images[depth] = 0;
  };
  if (passes_at(P, F, images, c, 0)) rec(rec, 0);
  return out;
}

bool check_hom(const PasturePresentation& P, const std::vector<int>& images,
               const FiniteField& F) {
  if (static_cast<int>(images.size()) != P.n())
    throw DomainError("one image per generator is required");
  for (int v : images) {
    if (v < 0 || v >= F.q())
      throw DomainError("image code outside the field");
    if (v == 0) return false;
  }
  for (const auto& v : P.lattice_gens)
    if (!lattice_ok(P, F, images, v)) return false;
  for (const auto& r : P.relations)
    if (!relation_ok(P, F, images, r)) return false;
  return true;
}

std::string hom_str(const PasturePresentation& P, const FiniteField& F,
                    const std::vector<int>& images) {
  if (P.n() == 0) return "(trivial)";
  std::string out;
  for (int i = 0; i < P.n(); ++i) {
    if (i) out += ' ';
    out += P.gens[i] + "=" + F.el_str(images[i]);
  }
  return out;
}

Profile point_count_profile(const PasturePresentation& P,
                            std::vector<int> qs) {
  Profile prof;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int q : qs) {
    auto F = FiniteField::make(q);
    long long count = static_cast<long long>(enumerate_homs(P, F).size());
    prof.rows.push_back(ProfileRow{q, count});
    double x = std::log(static_cast<double>(q));
    double y = std::log(static_cast<double>(count + 1));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(qs.size());
  double den = m * sxx - sx * sx;
  prof.growth_exponent = den == 0 ? 0.0 : (m * sxy - sx * sy) / den;
  return prof;
}

} // namespace pastures
