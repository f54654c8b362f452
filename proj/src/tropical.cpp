#include "pastures/tropical.hpp"

#include <algorithm>
#include <map>

#include "pastures/errors.hpp"

namespace pastures {

namespace {

// equalities shared by every cell: the lattice relations in log scale
void lattice_rows(const PasturePresentation& P, QMat& eq_a, QVec& eq_b) {
  for (const auto& v : P.lattice_gens) {
    QVec row(P.n());
    bool zero = true;
    for (int i = 0; i < P.n(); ++i) {
      row[i] = Rat(v[i]);
      if (v[i] != 0) zero = false;
    }
    if (zero) continue;
    eq_a.push_back(std::move(row));
    eq_b.push_back(0);
  }
}

QVec term_row(const PasturePresentation& P, const Monomial& m) {
  QVec row(P.n());
  for (int i = 0; i < P.n(); ++i) row[i] = Rat(static_cast<long>(m.exps[i]));
  return row;
}

} // namespace

PolyhedralComplex trop_complex(const PasturePresentation& P,
                               long long cell_cap) {
  PolyhedralComplex C;
  C.n = P.n();
  for (const auto& r : P.relations)
    if (r.terms.size() < 2) return C;  // a lone term never attains max twice

  long long total = 1;
  for (const auto& r : P.relations) {
    long long t = static_cast<long long>(r.terms.size());
    total *= t * (t - 1) / 2;
    if (total > cell_cap)
      throw ResourceError("tropical cell count exceeds the cap");
  }

  QMat base_a;
  QVec base_b;
  lattice_rows(P, base_a, base_b);

  std::map<std::string, std::pair<Polyhedron, int>> cells;
  std::vector<std::pair<size_t, size_t>> choice(P.relations.size());
  auto rec = [&](auto&& self, size_t rel) -> void {
    if (rel == P.relations.size()) {
      Polyhedron cell;
      cell.n = P.n();
      cell.eq_a = base_a;
      cell.eq_b = base_b;
      for (size_t k = 0; k < P.relations.size(); ++k) {
        const auto& terms = P.relations[k].terms;
        auto [i, j] = choice[k];
        QVec ri = term_row(P, terms[i]), rj = term_row(P, terms[j]);
        QVec diff(P.n());
        for (int t = 0; t < P.n(); ++t) diff[t] = ri[t] - rj[t];
        cell.eq_a.push_back(diff);
        cell.eq_b.push_back(0);
        for (size_t o = 0; o < terms.size(); ++o) {
          if (o == i || o == j) continue;
          QVec ro = term_row(P, terms[o]);
          QVec ge(P.n());
          for (int t = 0; t < P.n(); ++t) ge[t] = ri[t] - ro[t];
          cell.in_a.push_back(std::move(ge));
          cell.in_b.push_back(0);
        }
      }
      if (!canonicalize(cell)) return;
      int dim = cell.n - static_cast<int>(cell.eq_a.size());
      std::string key = polyhedron_key(cell);  // before the move
      cells.emplace(std::move(key), std::make_pair(std::move(cell), dim));
      return;
    }
    size_t t = P.relations[rel].terms.size();
    for (size_t i = 0; i < t; ++i)
      for (size_t j = i + 1; j < t; ++j) {
        choice[rel] = {i, j};
        self(self, rel + 1);
      }
  };
  rec(rec, 0);

  for (auto& [key, cd] : cells) {
    C.cells.push_back(std::move(cd.first));
    C.cell_dims.push_back(cd.second);
    C.dim = std::max(C.dim, cd.second);
  }
  return C;
}

bool trop_contains(const PasturePresentation& P, const QVec& x) {
  if (static_cast<int>(x.size()) != P.n())
    throw DomainError("point arity does not match the presentation");
  for (const auto& v : P.lattice_gens) {
    Rat s = 0;
    for (int i = 0; i < P.n(); ++i) s += Rat(v[i]) * x[i];
    if (s != 0) return false;
  }
  for (const auto& r : P.relations) {
    bool first = true;
    Rat best = 0;
    int hits = 0;
    for (const auto& t : r.terms) {
      Rat v = 0;
      for (int i = 0; i < P.n(); ++i) v += Rat(static_cast<long>(t.exps[i])) * x[i];
      if (first || v > best) {
        best = v;
        hits = 1;
        first = false;
      } else if (v == best) {
        ++hits;
      }
    }
    if (hits < 2) return false;
  }
  return true;
}

int trop_fiber_dim(const PastureMap& f, const QVec& x) {
  if (static_cast<int>(x.size()) != f.source.n())
    throw DomainError("point arity does not match the source presentation");
  auto C = trop_complex(f.target);
  int best = -1;
  for (const auto& cell : C.cells) {
    Polyhedron fiber = cell;
    for (int i = 0; i < f.source.n(); ++i) {
      QVec row(f.target.n());
      for (int j = 0; j < f.target.n(); ++j)
        row[j] = Rat(static_cast<long>(f.images[i].exps[j]));
      fiber.eq_a.push_back(std::move(row));
      fiber.eq_b.push_back(x[i]);
    }
    if (!canonicalize(fiber)) continue;
    best = std::max(best,
                    fiber.n - static_cast<int>(fiber.eq_a.size()));
  }
  return best;
}

} // namespace pastures
