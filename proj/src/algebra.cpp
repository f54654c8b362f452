#include "pastures/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pastures/errors.hpp"
#include "pastures/hom.hpp"

namespace pastures {

namespace {

bool term_order(const std::pair<std::vector<int>, long long>& a,
                const std::pair<std::vector<int>, long long>& b) {
  int da = 0, db = 0;
  for (int e : a.first) da += e;
  for (int e : b.first) db += e;
  if (da != db) return da > db;
  return a.first > b.first;
}

void normalize(Poly& p) {
  std::map<std::vector<int>, long long> acc;
  for (auto& [m, c] : p.terms) acc[m] += c;
  p.terms.clear();
  for (auto& [m, c] : acc)
    if (c != 0) p.terms.push_back({m, c});
  std::sort(p.terms.begin(), p.terms.end(), term_order);
  if (!p.terms.empty() && p.terms.front().second < 0)
    for (auto& [m, c] : p.terms) c = -c;
}

// T^e as a monomial exponent vector, negative exponents moved onto U
std::vector<int> laurent_mono(int n, const std::vector<long long>& e) {
  std::vector<int> m(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (e[i] >= 0)
      m[2 * i] = static_cast<int>(e[i]);
    else
      m[2 * i + 1] = static_cast<int>(-e[i]);
  }
  return m;
}

std::string field_str(const FieldSpec& f, const std::string& dialect) {
  if (dialect == "generic") {
    if (f.kind == FieldSpec::QQ) return "QQ";
    return "GF(" + std::to_string(f.q) + ")";
  }
  if (dialect == "m2") {
    if (f.kind == FieldSpec::QQ) return "QQ";
    auto F = FiniteField::make(f.q);
    if (F.k() == 1) return "ZZ/" + std::to_string(f.q);
    return "GF(" + std::to_string(f.q) + ")";
  }
  // singular
  if (f.kind == FieldSpec::QQ) return "0";
  auto F = FiniteField::make(f.q);
  if (F.k() == 1) return std::to_string(f.q);
  return "(" + std::to_string(f.q) + ",a)";
}

} // namespace

std::string poly_str(const Poly& p, const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (size_t t = 0; t < p.terms.size(); ++t) {
    const auto& [m, c] = p.terms[t];
    long long a = c;
    if (t == 0) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a < 0 ? '-' : '+';
      if (a < 0) a = -a;
    }
    std::string body;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += vars[i];
      if (m[i] > 1) body += '^' + std::to_string(m[i]);
    }
    if (body.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + '*';
      out += body;
    }
  }
  return out;
}

AlgebraPresentation associated_algebra(const PasturePresentation& P,
                                       FieldSpec field) {
  AlgebraPresentation A;
  A.field = field;
  A.n = P.n();
  for (int i = 0; i < P.n(); ++i) {
    if (P.n() == 1) {
      A.vars = {"T", "U"};
      break;
    }
    A.vars.push_back("T" + std::to_string(i + 1));
    A.vars.push_back("U" + std::to_string(i + 1));
  }

  auto add = [&](Poly p) {
    normalize(p);
    if (p.terms.empty()) return;
    if (std::find(A.relations.begin(), A.relations.end(), p) ==
        A.relations.end())
      A.relations.push_back(std::move(p));
  };

  for (int i = 0; i < P.n(); ++i) {
    Poly p;
    std::vector<int> m(2 * P.n(), 0);
    m[2 * i] = 1;
    m[2 * i + 1] = 1;
    p.terms.push_back({m, 1});
    p.terms.push_back({std::vector<int>(2 * P.n(), 0), -1});
    add(std::move(p));
  }

  for (const auto& col : P.lat.cols) {
    std::vector<long long> plus(P.n(), 0), minus(P.n(), 0);
    for (int i = 0; i < P.n(); ++i) {
      long long e = mpz_get_si(col[i].get_mpz_t());
      if (e > 0)
        plus[i] = e;
      else
        minus[i] = -e;
    }
    long long s = mpz_get_si(col[P.n()].get_mpz_t());
    Poly p;
    p.terms.push_back({laurent_mono(P.n(), plus), 1});
    p.terms.push_back(
        {laurent_mono(P.n(), minus), s % 2 == 0 ? -1LL : 1LL});
    add(std::move(p));
  }

  for (const auto& r : P.relations) {
    Poly p;
    for (const auto& t : r.terms)
      p.terms.push_back(
          {laurent_mono(P.n(), t.exps), t.sign < 0 ? -1LL : 1LL});
    add(std::move(p));
  }
  return A;
}

std::string export_cas(const AlgebraPresentation& A,
                       const std::string& dialect) {
  if (dialect != "generic" && dialect != "m2" && dialect != "singular")
    throw UsageError("unknown dialect " + dialect);

  std::string vars;
  for (size_t i = 0; i < A.vars.size(); ++i) {
    if (i) vars += ',';
    vars += A.vars[i];
  }
  std::string polys;
  for (size_t i = 0; i < A.relations.size(); ++i) {
    if (i) polys += ", ";
    polys += poly_str(A.relations[i], A.vars);
  }

  std::ostringstream os;
  if (dialect == "generic") {
    os << "ring " << field_str(A.field, dialect) << "[" << vars << "]; ideal ("
       << (polys.empty() ? "0" : polys) << ");";
  } else if (dialect == "m2") {
    os << "R = " << field_str(A.field, dialect) << "[" << vars
       << "]; I = ideal(" << (polys.empty() ? "0" : polys) << ");";
  } else {
    std::string ipolys;
    for (size_t i = 0; i < A.relations.size(); ++i) {
      if (i) ipolys += ", ";
      ipolys += poly_str(A.relations[i], A.vars);
    }
    os << "ring R = " << field_str(A.field, dialect) << ", (" << vars
       << "), dp; ideal I = " << (ipolys.empty() ? "0" : ipolys) << ";";
  }
  return os.str();
}

Crosscheck variety_points_crosscheck(const PasturePresentation& P,
                                     const FiniteField& F) {
  auto A = associated_algebra(P, FieldSpec{FieldSpec::Finite, F.q()});
  int n = P.n();

  auto eval = [&](const Poly& p, const std::vector<int>& point) {
    int acc = 0;
    for (const auto& [m, c] : p.terms) {
      int v = F.from_int(c);
      for (int i = 0; i < 2 * n; ++i)
        if (m[i] != 0) v = F.mul(v, F.pow(point[i], m[i]));
      acc = F.add(acc, v);
    }
    return acc;
  };

  std::vector<std::vector<int>> algebra_pts;
  std::vector<int> point(2 * n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (const auto& p : A.relations)
        if (eval(p, point) != 0) return;
      std::vector<int> ts(n);
      for (int k = 0; k < n; ++k) ts[k] = point[2 * k];
      algebra_pts.push_back(std::move(ts));
      return;
    }
    for (int v = 1; v < F.q(); ++v) {
      point[2 * i] = v;
      point[2 * i + 1] = F.inv(v);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(algebra_pts.begin(), algebra_pts.end());

  auto homs = enumerate_homs(P, F);
  Crosscheck out;
  out.algebra_points = static_cast<long long>(algebra_pts.size());
  out.hom_points = static_cast<long long>(homs.size());
  out.agree = algebra_pts == homs;
  return out;
}

} // namespace pastures
