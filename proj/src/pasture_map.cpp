#include "pastures/pasture_map.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pastures/errors.hpp"

namespace pastures {

namespace {

// signed monomial in the target generators, e.g. "-T^2*S"
Monomial parse_image(const std::string& text,
                     const PasturePresentation& target) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Monomial m;
  m.exps.assign(target.n(), 0);
  size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') {
    m.sign = -1;
    ++pos;
  }
  if (pos < s.size() && s[pos] == '1' && pos + 1 == s.size()) return m;
  while (true) {
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    auto it = std::find(target.gens.begin(), target.gens.end(), name);
    if (it == target.gens.end())
      throw DomainError("image uses unknown target generator '" + name + "'");
    long long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      try {
        size_t used = 0;
        e = std::stoll(s.substr(pos), &used);
        pos += used;
      } catch (const std::logic_error&) {
        throw DomainError("malformed exponent in image monomial: " + text);
      }
    }
    m.exps[it - target.gens.begin()] += e;
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != s.size()) throw DomainError("malformed image monomial: " + text);
  return m;
}

// target exponent vector of the image of T^v (-1)^{v.back()}
std::vector<Int> transport(const PastureMap& f, const std::vector<Int>& v) {
  int m = f.target.n();
  std::vector<Int> out(m + 1, 0);
  out[m] = v[f.source.n()];
  for (int i = 0; i < f.source.n(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m; ++j)
      out[j] += v[i] * static_cast<long>(f.images[i].exps[j]);
    if (f.images[i].sign < 0) out[m] += v[i];
  }
  return out;
}

} // namespace

PastureMap map_parse(
    const std::string& text,
    const std::function<PasturePresentation(const std::string&)>& resolve) {
  std::istringstream in(text);
  std::string line;
  PastureMap f;
  bool saw_map = false, saw_source = false, saw_target = false;
  std::vector<std::pair<std::string, std::string>> arrows;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "map") {
      if (!(ls >> f.name)) throw DomainError("map line needs a name");
      saw_map = true;
    } else if (key == "source" || key == "target") {
      std::string tok;
      if (!(ls >> tok)) throw DomainError(key + " line needs a pasture");
      (key == "source" ? f.source : f.target) = resolve(tok);
      (key == "source" ? saw_source : saw_target) = true;
    } else {
      std::string arrow, rest;
      if (!(ls >> arrow) || arrow != "->")
        throw DomainError("expected '" + key + " -> <monomial>'");
      std::getline(ls, rest);
      arrows.emplace_back(key, rest);
    }
  }
  if (!saw_map || !saw_source || !saw_target)
    throw DomainError("map file needs map, source and target lines");

  f.images.assign(f.source.n(), Monomial{});
  std::vector<bool> seen(f.source.n(), false);
  for (auto& [gen, img] : arrows) {
    auto it = std::find(f.source.gens.begin(), f.source.gens.end(), gen);
    if (it == f.source.gens.end())
      throw DomainError("'" + gen + "' is not a source generator");
    size_t idx = it - f.source.gens.begin();
    if (seen[idx]) throw DomainError("duplicate image for generator " + gen);
    seen[idx] = true;
    f.images[idx] = parse_image(img, f.target);
  }
  for (int i = 0; i < f.source.n(); ++i)
    if (!seen[i])
      throw DomainError("missing image for generator " + f.source.gens[i]);
  return f;
}

MapCheck validate_map(const PastureMap& f, const FusionParams& params) {
  // pure sign identifications are carried by the constant relations kept in
  // the relation list, so only vectors that mention a generator are checked
  for (size_t k = 0; k < f.source.lattice_gens.size(); ++k) {
    const auto& v = f.source.lattice_gens[k];
    bool mentions = false;
    for (int i = 0; i < f.source.n(); ++i)
      if (v[i] != 0) mentions = true;
    if (!mentions) continue;
    if (!f.target.lat.contains(transport(f, v)))
      return MapCheck{MapStatus::BadLattice,
                      "unit identification " + std::to_string(k + 1) +
                          " does not map into the target lattice"};
  }

  std::string pending;
  for (size_t k = 0; k < f.source.relations.size(); ++k) {
    NullsetRelation image;
    for (const auto& t : f.source.relations[k].terms) {
      Monomial mt;
      mt.exps.assign(f.target.n(), 0);
      int sign_exp = t.sign < 0 ? 1 : 0;
      for (int i = 0; i < f.source.n(); ++i) {
        if (t.exps[i] == 0) continue;
        for (int j = 0; j < f.target.n(); ++j)
          mt.exps[j] += t.exps[i] * f.images[i].exps[j];
        if (f.images[i].sign < 0) sign_exp += static_cast<int>(t.exps[i]);
      }
      mt.sign = sign_exp % 2 == 0 ? 1 : -1;
      image.terms.push_back(std::move(mt));
    }
    switch (nullset_contains(f.target, image, params)) {
      case Trilean::Yes:
        break;
      case Trilean::No:
        return MapCheck{MapStatus::BadNullset,
                        "relation " + std::to_string(k + 1) +
                            " maps outside the target nullset"};
      case Trilean::Unknown:
        if (pending.empty())
          pending = "relation " + std::to_string(k + 1) +
                    " could not be verified in the target nullset";
        break;
    }
  }
  if (!pending.empty()) return MapCheck{MapStatus::Inconclusive, pending};
  return MapCheck{MapStatus::Valid, ""};
}

PastureMap identity_map(const PasturePresentation& P) {
  PastureMap f;
  f.name = "id_" + P.name;
  f.source = P;
  f.target = P;
  for (int i = 0; i < P.n(); ++i) {
    Monomial m;
    m.exps.assign(P.n(), 0);
    m.exps[i] = 1;
    f.images.push_back(std::move(m));
  }
  return f;
}

std::vector<int> compose_hom(const PastureMap& f, const FiniteField& F,
                             const std::vector<int>& target_images) {
  std::vector<int> out(f.source.n());
  for (int i = 0; i < f.source.n(); ++i) {
    int v = f.images[i].sign < 0 ? F.neg_one() : 1;
    for (int j = 0; j < f.target.n(); ++j)
      if (f.images[i].exps[j] != 0)
        v = F.mul(v, F.pow(target_images[j], f.images[i].exps[j]));
    out[i] = v;
  }
  return out;
}

FiberReport induced_map_fibers(const PastureMap& f, const FiniteField& F) {
  FiberReport rep;
  rep.base_points = enumerate_homs(f.source, F);
  rep.fibers.resize(rep.base_points.size());
  for (const auto& h : enumerate_homs(f.target, F)) {
    auto comp = compose_hom(f, F, h);
    auto it = std::lower_bound(rep.base_points.begin(), rep.base_points.end(),
                               comp);
    if (it == rep.base_points.end() || *it != comp)
      throw DomainError("composed point is not a source homomorphism");
    rep.fibers[it - rep.base_points.begin()].push_back(h);
  }
  return rep;
}

} // namespace pastures
