#include "pastures/valuated.hpp"

#include <algorithm>
#include <sstream>

#include "pastures/errors.hpp"
#include "pastures/lp.hpp"

namespace pastures {

namespace {

std::vector<int> elements_of(Subset s, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (s >> (i - 1) & 1) out.push_back(i);
  return out;
}

bool tuple_less(Subset a, Subset b, int n) {
  return elements_of(a, n) < elements_of(b, n);
}

QVec point_of(Subset s, int n) {
  QVec p(n, 0);
  for (int i = 0; i < n; ++i)
    if (s >> i & 1) p[i] = 1;
  return p;
}

} // namespace

std::vector<Subset> dressian_coords(const Matroid& M) {
  std::vector<Subset> coords = M.bases;
  std::sort(coords.begin(), coords.end(),
            [&](Subset a, Subset b) { return tuple_less(a, b, M.n); });
  return coords;
}

PlueckerVector pluecker_parse(const std::string& text, const Matroid& M) {
  std::istringstream in(text);
  std::string line;
  PlueckerVector d;
  d.M = M;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!saw_header) {
      std::string name;
      if (tok != "pluecker" || !(ls >> name))
        throw DomainError("expected a 'pluecker <name>' header line");
      if (name != M.name)
        throw DomainError("value file is for " + name + ", not " + M.name);
      saw_header = true;
      continue;
    }
    Subset b = subset_parse(tok, M.n);
    if (!is_basis(M, b))
      throw DomainError(tok + " is not a basis of " + M.name);
    std::string colon, value;
    if (!(ls >> colon >> value) || colon != ":")
      throw DomainError("expected '<basis> : <value>' in value file");
    if (d.val.count(b))
      throw DomainError("duplicate value for basis " + tok);
    d.val[b] = rat_parse(value);
  }
  if (!saw_header) throw DomainError("expected a 'pluecker <name>' header line");
  for (Subset b : M.bases)
    if (!d.val.count(b))
      throw DomainError("missing value for basis " + subset_str(b, M.n));
  return d;
}

std::string pluecker_print(const PlueckerVector& d) {
  std::ostringstream os;
  os << "pluecker " << d.M.name << "\n";
  for (Subset b : dressian_coords(d.M))
    os << subset_str(b, d.M.n) << " : " << rat_str(d.val.at(b)) << "\n";
  return os.str();
}

std::vector<ThreeTermRelation> three_term_relations(const Matroid& M) {
  std::vector<ThreeTermRelation> out;
  if (M.r < 2) return out;
  std::vector<int> subset;
  auto emit = [&](Subset s) {
    std::vector<int> rest;
    for (int e = 1; e <= M.n; ++e)
      if (!(s >> (e - 1) & 1)) rest.push_back(e);
    int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          for (int e = c + 1; e < m; ++e) {
            int i = rest[a], j = rest[b], k = rest[c], l = rest[e];
            auto bit = [](int x) { return Subset(1) << (x - 1); };
            ThreeTermRelation rel;
            rel.s = s;
            rel.i = i;
            rel.j = j;
            rel.k = k;
            rel.l = l;
            const std::pair<Subset, Subset> pairs[3] = {
                {s | bit(i) | bit(j), s | bit(k) | bit(l)},
                {s | bit(i) | bit(k), s | bit(j) | bit(l)},
                {s | bit(i) | bit(l), s | bit(j) | bit(k)}};
            for (const auto& [A, B] : pairs)
              if (is_basis(M, A) && is_basis(M, B)) rel.terms.push_back({A, B});
            if (!rel.terms.empty()) out.push_back(std::move(rel));
          }
  };
  auto rec = [&](auto&& self, int from, int left, Subset acc) -> void {
    if (left == 0) {
      emit(acc);
      return;
    }
    for (int e = from; e <= M.n - left + 1; ++e)
      self(self, e + 1, left - 1, acc | (Subset(1) << (e - 1)));
  };
  rec(rec, 1, M.r - 2, 0);
  return out;
}

bool check_tropical_pluecker(const PlueckerVector& d) {
  for (const auto& rel : three_term_relations(d.M)) {
    if (rel.terms.empty()) continue;
    Rat best;
    int hits = 0;
    bool first = true;
    for (const auto& [A, B] : rel.terms) {
      Rat v = d.val.at(A) + d.val.at(B);
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

namespace {

// supporting functional tight on the given lift points, if the whole lift
// stays on or above it; returns the full tight set
std::optional<Subset> tight_cell(const std::vector<QVec>& pts,
                                 const QVec& heights,
                                 const std::vector<int>& sel, int n) {
  QMat A;
  QVec b;
  for (int i : sel) {
    QVec row = pts[i];
    row.push_back(1);
    A.push_back(std::move(row));
    b.push_back(heights[i]);
  }
  auto psi = linalg::solve(A, b);
  if (!psi) return std::nullopt;
  Subset cell = 0;
  for (size_t k = 0; k < pts.size(); ++k) {
    Rat v = (*psi)[n];
    for (int j = 0; j < n; ++j) v += (*psi)[j] * pts[k][j];
    if (v > heights[k]) return std::nullopt;
    if (v == heights[k]) cell |= Subset(1) << k;
  }
  return cell;
}

} // namespace

Subdivision regular_subdivision(const PlueckerVector& d) {
  const auto coords = dressian_coords(d.M);
  int B = static_cast<int>(coords.size());
  if (B > 28)
    throw ResourceError("too many bases for subdivision enumeration");
  Subdivision s;
  if (B == 1) {
    s.cells = {coords};
    s.trivial = true;
    return s;
  }

  int n = d.M.n;
  std::vector<QVec> pts;
  QVec heights;
  for (Subset b : coords) {
    pts.push_back(point_of(b, n));
    heights.push_back(-d.val.at(b));
  }

  // an exact affine fit leaves a single cell
  {
    QMat A;
    for (const auto& p : pts) {
      QVec row = p;
      row.push_back(1);
      A.push_back(std::move(row));
    }
    if (linalg::solve(A, heights)) {
      s.cells = {coords};
      s.trivial = true;
      return s;
    }
  }

  int da = linalg::affine_dim(pts);
  std::vector<Subset> found;
  std::vector<int> sel(da + 1);
  QMat echelon;  // difference vectors of the current prefix, echelonized

  auto independent = [&](int cand, int chosen) {
    if (chosen == 0) return true;
    QVec diff(n);
    for (int j = 0; j < n; ++j) diff[j] = pts[cand][j] - pts[sel[0]][j];
    // reduce against current echelon rows
    for (const auto& row : echelon) {
      int p = 0;
      while (row[p] == 0) ++p;
      Rat f = diff[p] / row[p];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) diff[j] -= f * row[j];
    }
    bool zero = std::all_of(diff.begin(), diff.end(),
                            [](const Rat& v) { return v == 0; });
    if (zero) return false;
    echelon.push_back(std::move(diff));
    return true;
  };

  auto rec = [&](auto&& self, int from, int chosen) -> void {
    if (chosen == da + 1) {
      Subset mask = 0;
      for (int i : sel) mask |= Subset(1) << i;
      for (Subset c : found)
        if ((mask & c) == mask) return;
      auto cell = tight_cell(pts, heights, sel, n);
      if (cell) found.push_back(*cell);
      return;
    }
    for (int i = from; i <= B - (da + 1 - chosen); ++i) {
      size_t mark = echelon.size();
      sel[chosen] = i;
      if (independent(i, chosen)) {
        self(self, i + 1, chosen + 1);
        echelon.resize(mark);
      }
    }
  };
  rec(rec, 0, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (Subset c : found) {
    std::vector<Subset> cell;
    for (int k = 0; k < B; ++k)
      if (c >> k & 1) cell.push_back(coords[k]);
    s.cells.push_back(std::move(cell));
  }
  std::sort(s.cells.begin(), s.cells.end(),
            [&](const std::vector<Subset>& a, const std::vector<Subset>& b) {
              auto ta = a, tb = b;
              std::vector<std::vector<int>> ea, eb;
              for (Subset x : ta) ea.push_back(elements_of(x, n));
              for (Subset x : tb) eb.push_back(elements_of(x, n));
              return ea < eb;
            });
  s.trivial = s.cells.size() == 1 &&
              static_cast<int>(s.cells[0].size()) == B;
  return s;
}

std::optional<RescalingWitness> hyperplane_fit(const PlueckerVector& d) {
  int n = d.M.n;
  QMat A;
  QVec b;
  for (Subset s : dressian_coords(d.M)) {
    QVec row(n + 1, 0);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) row[i] = 1;
    row[n] = 1;
    A.push_back(std::move(row));
    b.push_back(d.val.at(s));
  }
  auto sol = linalg::solve(A, b);
  if (!sol) return std::nullopt;
  Subset support = 0;
  for (Subset s : d.M.bases) support |= s;
  RescalingWitness w;
  w.c = (*sol)[n];
  w.x.resize(n);
  for (int i = 0; i < n; ++i)
    if (support >> i & 1)
      w.x[i] = (*sol)[i];
  return w;
}

PlueckerVector rescale(const PlueckerVector& d, const RescalingWitness& w) {
  PlueckerVector out;
  out.M = d.M;
  for (const auto& [s, v] : d.val) {
    Rat shift = w.c;
    for (int i = 0; i < d.M.n; ++i)
      if (s >> i & 1) shift += *w.x[i];
    out.val[s] = v - shift;
  }
  return out;
}

MatroidalCheck subdivision_is_matroidal(const PlueckerVector& d) {
  MatroidalCheck out;
  out.subdivision = regular_subdivision(d);
  out.ok = true;
  for (size_t i = 0; i < out.subdivision.cells.size(); ++i)
    if (!cell_is_matroid(d.M.n, d.M.r, out.subdivision.cells[i])) {
      out.ok = false;
      out.bad_cells.push_back(static_cast<int>(i));
    }
  return out;
}

PolyhedralComplex dressian(const Matroid& M, int max_bases,
                           long long cell_cap) {
  const auto coords = dressian_coords(M);
  int B = static_cast<int>(coords.size());
  if (B > max_bases)
    throw ResourceError("too many bases for dressian enumeration");
  PolyhedralComplex C;
  C.n = B;

  std::map<Subset, int> coord_of;
  for (int k = 0; k < B; ++k) coord_of[coords[k]] = k;

  auto rels = three_term_relations(M);
  long long total = 1;
  for (const auto& rel : rels) {
    if (rel.terms.size() == 1) return C;  // one survivor empties everything
    long long t = static_cast<long long>(rel.terms.size());
    total *= t * (t - 1) / 2;
    if (total > cell_cap)
      throw ResourceError("dressian cell count exceeds the cap");
  }

  auto term_row = [&](const std::pair<Subset, Subset>& t) {
    QVec row(B, 0);
    row[coord_of[t.first]] += 1;
    row[coord_of[t.second]] += 1;
    return row;
  };

  std::map<std::string, std::pair<Polyhedron, int>> cells;
  std::vector<std::pair<size_t, size_t>> choice(rels.size());
  auto rec = [&](auto&& self, size_t ri) -> void {
    if (ri == rels.size()) {
      Polyhedron cell;
      cell.n = B;
      for (size_t k = 0; k < rels.size(); ++k) {
        const auto& terms = rels[k].terms;
        auto [i, j] = choice[k];
        QVec a = term_row(terms[i]), b2 = term_row(terms[j]);
        QVec diff(B);
        for (int t = 0; t < B; ++t) diff[t] = a[t] - b2[t];
        cell.eq_a.push_back(std::move(diff));
        cell.eq_b.push_back(0);
        for (size_t o = 0; o < terms.size(); ++o) {
          if (o == i || o == j) continue;
          QVec c = term_row(terms[o]);
          QVec ge(B);
          for (int t = 0; t < B; ++t) ge[t] = a[t] - c[t];
          cell.in_a.push_back(std::move(ge));
          cell.in_b.push_back(0);
        }
      }
      if (!canonicalize(cell)) return;
      int dim = B - static_cast<int>(cell.eq_a.size());
      std::string key = polyhedron_key(cell);  // before the move
      cells.emplace(std::move(key), std::make_pair(std::move(cell), dim));
      return;
    }
    size_t t = rels[ri].terms.size();
    for (size_t i = 0; i < t; ++i)
      for (size_t j = i + 1; j < t; ++j) {
        choice[ri] = {i, j};
        self(self, ri + 1);
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

Lineality lineality_space(const Matroid& M) {
  const auto coords = dressian_coords(M);
  int B = static_cast<int>(coords.size());
  QMat rows;
  for (int e = 1; e <= M.n; ++e) {
    QVec row(B, 0);
    for (int k = 0; k < B; ++k)
      if (coords[k] >> (e - 1) & 1) row[k] = 1;
    rows.push_back(std::move(row));
  }
  rows.push_back(QVec(B, 1));
  linalg::RowSpace space(B, rows);
  int dim = space.rank();
  return Lineality{std::move(space), dim};
}

RigidityReport rigidity(const Matroid& M) {
  auto dress = dressian(M);
  auto lin = lineality_space(M);
  RigidityReport rep;
  rep.dressian_dim = dress.dim;
  rep.lineality_dim = lin.dim;
  rep.rigid = true;
  int B = static_cast<int>(dressian_coords(M).size());
  for (const auto& cell : dress.cells) {
    QMat eqs = cell.eq_a;
    if (eqs.empty()) eqs.push_back(QVec(B, 0));
    for (const auto& v : linalg::nullspace(eqs))
      if (!lin.space.contains(v)) {
        rep.rigid = false;
        return rep;
      }
  }
  return rep;
}

std::string subdivision_report(const Matroid& M, const Subdivision& s) {
  std::ostringstream os;
  os << "cells " << s.cells.size() << " trivial " << (s.trivial ? "yes" : "no")
     << "\n";
  for (const auto& cell : s.cells) {
    for (size_t i = 0; i < cell.size(); ++i) {
      if (i) os << ' ';
      os << subset_str(cell[i], M.n);
    }
    os << "\n";
  }
  return os.str();
}

} // namespace pastures
