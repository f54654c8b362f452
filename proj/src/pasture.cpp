#include "pastures/pasture.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "pastures/errors.hpp"
#include "pastures/finite_field.hpp"
#include "pastures/hom.hpp"

namespace pastures {

namespace {

struct Parser {
  std::string s;  // whitespace already removed
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char take() { return s[pos++]; }

  void expect(char c) {
    if (peek() != c)
      throw DomainError(std::string("expected '") + c + "' in presentation");
    ++pos;
  }

  std::string ident() {
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw DomainError("expected a generator name in presentation");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      out += take();
    return out;
  }

  long long integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw DomainError("expected an exponent in presentation");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (take() - '0');
    return neg ? -v : v;
  }
};

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.exps != b.exps) return a.exps < b.exps;
  return a.sign < b.sign;
}

std::vector<Int> sign_vector(int n) {
  std::vector<Int> v(n + 1, 0);
  v[n] = 2;
  return v;
}

// Fusion closure state: terms are coset representatives in Z^{n+1}, a
// relation is a sorted multiset of them.
using Term = std::vector<Int>;
using Rel = std::vector<Term>;

std::string rel_key(const Rel& r) {
  std::ostringstream os;
  for (const auto& t : r) {
    for (const auto& e : t) os << e.get_str() << ',';
    os << ';';
  }
  return os.str();
}

Term term_shift(const HermiteBasis& lat, const Term& t, const Term& by,
                bool negate) {
  std::vector<Int> v(t.size());
  for (size_t i = 0; i < t.size(); ++i) v[i] = t[i] + by[i];
  if (negate) v.back() += 1;
  return lat.reduce(std::move(v));
}

// Canonical form under unit scaling: divide by each term in turn, keep the
// lexicographically least of the resulting sorted multisets.
Rel normalize(const HermiteBasis& lat, Rel r) {
  std::sort(r.begin(), r.end());
  Rel best;
  for (const auto& pivot : r) {
    Term inv(pivot.size());
    for (size_t i = 0; i < pivot.size(); ++i) inv[i] = -pivot[i];
    Rel cand;
    cand.reserve(r.size());
    for (const auto& t : r) cand.push_back(term_shift(lat, t, inv, false));
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

Term reduced_term(const PasturePresentation& P, const Monomial& m) {
  std::vector<Int> v(P.n() + 1, 0);
  for (size_t i = 0; i < m.exps.size(); ++i)
    v[i] = static_cast<long>(m.exps[i]);
  v[P.n()] = m.sign < 0 ? 1 : 0;
  return P.lat.reduce(std::move(v));
}

Term neg_term(const PasturePresentation& P, const Term& t) {
  Term v = t;
  v.back() += 1;
  return P.lat.reduce(std::move(v));
}

} // namespace

PasturePresentation parse_presentation(const std::string& text,
                                       const std::string& name) {
  Parser p;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) p.s += c;

  const std::string head = "F1pm(";
  if (p.s.compare(0, head.size(), head) != 0)
    throw DomainError("presentation must start with F1pm(");
  p.pos = head.size();

  PasturePresentation P;
  P.name = name;
  if (p.peek() != '|') {
    while (true) {
      std::string g = p.ident();
      if (std::find(P.gens.begin(), P.gens.end(), g) != P.gens.end())
        throw DomainError("duplicate generator " + g);
      P.gens.push_back(std::move(g));
      if (p.peek() != ',') break;
      p.take();
    }
  }
  p.expect('|');

  int n = P.n();
  auto gen_index = [&](const std::string& g) {
    auto it = std::find(P.gens.begin(), P.gens.end(), g);
    if (it == P.gens.end()) throw DomainError("unknown generator " + g);
    return static_cast<size_t>(it - P.gens.begin());
  };

  auto parse_term = [&](int sign) {
    Monomial m;
    m.sign = sign;
    m.exps.assign(n, 0);
    if (p.peek() == '1') {
      p.take();
      return m;
    }
    while (true) {
      size_t idx = gen_index(p.ident());
      long long e = 1;
      if (p.peek() == '^') {
        p.take();
        e = p.integer();
      }
      m.exps[idx] += e;
      if (p.peek() != '*') break;
      p.take();
    }
    return m;
  };

  if (p.peek() != ')') {
    while (true) {
      NullsetRelation rel;
      int sign = 1;
      if (p.peek() == '-') {
        p.take();
        sign = -1;
      }
      rel.terms.push_back(parse_term(sign));
      while (p.peek() == '+' || p.peek() == '-') {
        sign = p.take() == '-' ? -1 : 1;
        rel.terms.push_back(parse_term(sign));
      }
      if (rel.terms.size() < 2)
        throw DomainError(
            "a relation needs at least two terms; a lone term would make a "
            "unit vanish");
      if (rel.terms.size() == 2) {
        const Monomial &a = rel.terms[0], &b = rel.terms[1];
        std::vector<Int> v(n + 1, 0);
        for (int i = 0; i < n; ++i)
          v[i] = static_cast<long>(a.exps[i] - b.exps[i]);
        v[n] = (a.sign < 0 ? 1 : 0) + 1 - (b.sign < 0 ? 1 : 0);
        P.lattice_gens.push_back(std::move(v));
      }
      std::sort(rel.terms.begin(), rel.terms.end(), monomial_less);
      P.relations.push_back(std::move(rel));
      if (p.peek() != ',') break;
      p.take();
    }
  }
  p.expect(')');
  if (!p.done()) throw DomainError("trailing input after presentation");

  P.lattice_gens.push_back(sign_vector(n));
  P.lat = hermite_basis(n + 1, P.lattice_gens);
  return P;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"F1pm", "K", "F2", "F3", "F5",
                                                 "D",    "H", "G",  "U"};
  return names;
}

PasturePresentation catalog(const std::string& name) {
  static const std::map<std::string, std::string> table = {
      {"F1pm", "F1pm(|)"},
      {"K", "F1pm(|1+1, 1+1+1)"},
      {"F2", "F1pm(|1+1)"},
      {"F3", "F1pm(|1+1+1)"},
      {"F5", "F1pm(T|T^2+1, T-1-1)"},
      {"D", "F1pm(T|T+T-1)"},
      {"H", "F1pm(T|T^3+1, T-T^2-1)"},
      {"G", "F1pm(T|T^2-T-1)"},
      {"U", "F1pm(T1,T2|T1+T2-1)"},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown catalog pasture " + name);
  return parse_presentation(it->second, name);
}

PastureElement pe_zero() { return PastureElement{true, {}}; }

PastureElement pe_one(const PasturePresentation& P) {
  return PastureElement{false, P.lat.reduce(std::vector<Int>(P.n() + 1, 0))};
}

PastureElement pe_monomial(const PasturePresentation& P, const Monomial& m) {
  if (static_cast<int>(m.exps.size()) != P.n())
    throw DomainError("monomial arity does not match the presentation");
  return PastureElement{false, reduced_term(P, m)};
}

PastureElement pe_mul(const PasturePresentation& P, const PastureElement& a,
                      const PastureElement& b) {
  if (a.zero || b.zero) return pe_zero();
  std::vector<Int> v(P.n() + 1);
  for (int i = 0; i <= P.n(); ++i) v[i] = a.rep[i] + b.rep[i];
  return PastureElement{false, P.lat.reduce(std::move(v))};
}

PastureElement pe_neg(const PasturePresentation& P, const PastureElement& a) {
  if (a.zero) return pe_zero();
  return PastureElement{false, neg_term(P, a.rep)};
}

PastureElement pe_inv(const PasturePresentation& P, const PastureElement& a) {
  if (a.zero) throw DomainError("zero has no multiplicative inverse");
  std::vector<Int> v(P.n() + 1);
  for (int i = 0; i <= P.n(); ++i) v[i] = -a.rep[i];
  return PastureElement{false, P.lat.reduce(std::move(v))};
}

std::string pe_str(const PasturePresentation& P, const PastureElement& a) {
  if (a.zero) return "0";
  std::string out;
  if (a.rep[P.n()] % 2 != 0) out += '-';
  std::string body;
  for (int i = 0; i < P.n(); ++i) {
    if (a.rep[i] == 0) continue;
    if (!body.empty()) body += '*';
    body += P.gens[i];
    if (a.rep[i] != 1) body += '^' + a.rep[i].get_str();
  }
  out += body.empty() ? "1" : body;
  return out;
}

AbelianStructure unit_group_structure(const PasturePresentation& P) {
  return smith_quotient(P.n() + 1, P.lattice_gens);
}

Trilean nullset_contains(const PasturePresentation& P,
                         const NullsetRelation& rel,
                         const FusionParams& params) {
  if (rel.terms.empty()) return Trilean::Yes;
  for (const auto& t : rel.terms)
    if (static_cast<int>(t.exps.size()) != P.n())
      throw DomainError("relation arity does not match the presentation");

  // a lone-term defining relation makes the pasture degenerate
  for (const auto& r : P.relations)
    if (r.terms.size() == 1) return Trilean::Yes;

  if (rel.terms.size() == 1) return Trilean::No;
  if (rel.terms.size() == 2) {
    Term a = reduced_term(P, rel.terms[0]);
    Term b = reduced_term(P, rel.terms[1]);
    return neg_term(P, a) == b ? Trilean::Yes : Trilean::No;
  }

  // fusion closure of the defining relations plus 1 - 1
  std::set<std::string> seen;
  std::vector<Rel> closure;
  auto insert = [&](Rel r) {
    if (static_cast<int>(r.size()) > params.max_terms) return;
    if (static_cast<int>(closure.size()) >= params.max_relations) return;
    r = normalize(P.lat, std::move(r));
    if (seen.insert(rel_key(r)).second) closure.push_back(std::move(r));
  };

  Rel axiom = {reduced_term(P, Monomial{1, std::vector<long long>(P.n(), 0)}),
               reduced_term(P, Monomial{-1, std::vector<long long>(P.n(), 0)})};
  insert(axiom);
  for (const auto& r : P.relations) {
    Rel c;
    for (const auto& t : r.terms) c.push_back(reduced_term(P, t));
    insert(std::move(c));
  }

  Rel query;
  for (const auto& t : rel.terms) query.push_back(reduced_term(P, t));
  query = normalize(P.lat, std::move(query));
  const std::string query_key = rel_key(query);

  auto derived = [&] { return seen.count(query_key) > 0; };

  for (int round = 0; round < params.depth && !derived(); ++round) {
    size_t sz = closure.size();
    for (size_t i = 0; i < sz && !derived(); ++i)
      for (size_t j = 0; j <= i && !derived(); ++j)
        for (size_t ti = 0; ti < closure[i].size(); ++ti)
          for (size_t tj = 0; tj < closure[j].size(); ++tj) {
            const Rel &R1 = closure[i], &R2 = closure[j];
            if (static_cast<int>(R1.size() + R2.size()) - 2 >
                params.max_terms)
              continue;
            // scale R2 so its tj-th term cancels the ti-th term of R1
            Term shift = neg_term(P, R1[ti]);
            for (size_t k = 0; k < shift.size(); ++k)
              shift[k] -= R2[tj][k];
            Rel fused;
            for (size_t k = 0; k < R1.size(); ++k)
              if (k != ti) fused.push_back(R1[k]);
            for (size_t k = 0; k < R2.size(); ++k)
              if (k != tj)
                fused.push_back(term_shift(P.lat, R2[k], shift, false));
            insert(std::move(fused));
          }
    if (closure.size() == sz) break;
  }
  if (derived()) return Trilean::Yes;

  // any homomorphism into a finite field must send the sum to zero
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25}) {
    FiniteField F = FiniteField::make(q);
    for (const auto& hom : enumerate_homs(P, F)) {
      int acc = 0;
      for (const auto& t : rel.terms) {
        int v = t.sign < 0 ? F.neg_one() : 1;
        for (int i = 0; i < P.n(); ++i)
          v = F.mul(v, F.pow(hom[i], t.exps[i]));
        acc = F.add(acc, v);
      }
      if (acc != 0) return Trilean::No;
    }
  }
  return Trilean::Unknown;
}

} // namespace pastures
