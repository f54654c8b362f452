#include "pastures/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "pastures/errors.hpp"

namespace pastures {

bool exchange_valid(int n, int r, const std::vector<Subset>& bases,
                    std::string* why) {
  (void)n;
  (void)r;
  auto has = [&](Subset b) {
    return std::binary_search(bases.begin(), bases.end(), b);
  };
  for (Subset b1 : bases)
    for (Subset b2 : bases) {
      Subset only1 = b1 & ~b2;
      for (int x = 0; x < 64; ++x) {
        if (!(only1 >> x & 1)) continue;
        bool ok = false;
        Subset only2 = b2 & ~b1;
        for (int y = 0; y < 64 && !ok; ++y)
          if (only2 >> y & 1)
            ok = has((b1 & ~(Subset(1) << x)) | (Subset(1) << y));
        if (!ok) {
          if (why) {
            std::ostringstream os;
            os << "no exchange for element " << x + 1 << " of basis "
               << subset_str(b1, n) << " against " << subset_str(b2, n);
            *why = os.str();
          }
          return false;
        }
      }
    }
  return true;
}

Matroid matroid_from_bases(std::string name, int n, int r,
                           std::vector<Subset> bases) {
  if (n < 0 || n > 64) throw DomainError("ground set size must be in [0, 64]");
  if (r < 0 || r > n) throw DomainError("rank must be in [0, n]");
  if (bases.empty()) throw DomainError("a matroid needs at least one basis");
  Subset ground = n == 64 ? ~Subset(0) : (Subset(1) << n) - 1;
  for (Subset b : bases) {
    if (b & ~ground) throw DomainError("basis uses an element above n");
    if (std::popcount(b) != r)
      throw DomainError("basis " + subset_str(b & ground, n) +
                        " does not have rank many elements");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  std::string why;
  if (!exchange_valid(n, r, bases, &why))
    throw DomainError("exchange axiom fails: " + why);
  return Matroid{std::move(name), n, r, std::move(bases)};
}

Matroid uniform_matroid(int r, int n) {
  if (n < 0 || n > 64 || r < 0 || r > n)
    throw DomainError("uniform matroid needs 0 <= r <= n <= 64");
  std::vector<Subset> bases;
  // lexicographically first r-subset, then successor enumeration
  Subset b = r == 0 ? 0 : (Subset(1) << r) - 1;
  Subset limit = n == 64 ? ~Subset(0) : (Subset(1) << n) - 1;
  while (true) {
    bases.push_back(b);
    if (r == 0) break;
    // Gosper's hack
    Subset c = b & (~b + 1), q = b + c;
    Subset next = q | (((b ^ q) / c) >> 2);
    if (next > limit || next < b) break;
    b = next;
  }
  std::sort(bases.begin(), bases.end());
  std::string name = "U" + std::to_string(r) + std::to_string(n);
  return Matroid{std::move(name), n, r, std::move(bases)};
}

Matroid fano_matroid() {
  std::vector<Subset> lines;
  for (const char* s : {"123", "145", "167", "246", "257", "347", "356"})
    lines.push_back(subset_parse(s, 7));
  std::vector<Subset> bases;
  for (Subset b = 0; b < (Subset(1) << 7); ++b) {
    if (std::popcount(b) != 3) continue;
    if (std::find(lines.begin(), lines.end(), b) == lines.end())
      bases.push_back(b);
  }
  return matroid_from_bases("F7", 7, 3, std::move(bases));
}

bool cell_is_matroid(int n, int r,
                     const std::vector<Subset>& vertex_supports) {
  if (vertex_supports.empty()) return false;
  for (Subset s : vertex_supports)
    if (std::popcount(s) != r) return false;
  auto sorted = vertex_supports;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return exchange_valid(n, r, sorted, nullptr);
}

MinorResult minor(const Matroid& M, Subset del, Subset contract) {
  if (del & contract)
    throw DomainError("deleted and contracted sets must be disjoint");
  bool independent = false;
  for (Subset b : M.bases)
    if ((b & contract) == contract) {
      independent = true;
      break;
    }
  if (!independent) throw DomainError("contracted set must be independent");

  // keep the traces of maximum size; this also covers rank drops from
  // deleting elements that meet every basis
  std::vector<Subset> traces;
  int best = -1;
  for (Subset b : M.bases) {
    if ((b & contract) != contract) continue;
    Subset t = b & ~contract & ~del;
    int sz = std::popcount(t);
    if (sz > best) {
      best = sz;
      traces.clear();
    }
    if (sz == best) traces.push_back(t);
  }

  std::vector<int> old_of_new;
  for (int i = 1; i <= M.n; ++i) {
    Subset bit = Subset(1) << (i - 1);
    if (!(bit & (del | contract))) old_of_new.push_back(i);
  }
  std::vector<Subset> relabeled;
  for (Subset t : traces) {
    Subset s = 0;
    for (size_t k = 0; k < old_of_new.size(); ++k)
      if (t >> (old_of_new[k] - 1) & 1) s |= Subset(1) << k;
    relabeled.push_back(s);
  }
  auto m = matroid_from_bases(M.name, static_cast<int>(old_of_new.size()),
                              best, std::move(relabeled));
  return MinorResult{std::move(m), std::move(old_of_new)};
}

bool is_basis(const Matroid& M, Subset I) {
  return std::binary_search(M.bases.begin(), M.bases.end(), I);
}

std::string subset_str(Subset I, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (!(I >> (i - 1) & 1)) continue;
    if (!out.empty() && n > 9) out += ',';
    out += std::to_string(i);
  }
  return out;
}

Subset subset_parse(const std::string& s, int n) {
  Subset out = 0;
  auto add = [&](int el) {
    if (el < 1 || el > n)
      throw DomainError("element " + std::to_string(el) +
                        " outside ground set of size " + std::to_string(n));
    out |= Subset(1) << (el - 1);
  };
  if (n <= 9) {
    for (char c : s) {
      if (c < '0' || c > '9') throw DomainError("bad subset string: " + s);
      add(c - '0');
    }
  } else {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        size_t used = 0;
        int el = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("");
        add(el);
      } catch (const std::logic_error&) {
        throw DomainError("bad subset string: " + s);
      }
    }
  }
  return out;
}

Matroid matroid_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  int n = -1, r = -1;
  std::vector<Subset> bases;
  bool saw_bases = false;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "matroid") {
      if (!(ls >> name)) throw DomainError("matroid line needs a name");
    } else if (key == "ground") {
      if (!(ls >> n)) throw DomainError("ground line needs a size");
    } else if (key == "rank") {
      if (!(ls >> r)) throw DomainError("rank line needs a value");
    } else if (key == "bases") {
      if (n < 0) throw DomainError("bases line must come after ground");
      std::string tok;
      while (ls >> tok) bases.push_back(subset_parse(tok, n));
      saw_bases = true;
    } else {
      throw DomainError("unknown matroid file line: " + key);
    }
  }
  if (name.empty() || n < 0 || r < 0 || !saw_bases)
    throw DomainError("matroid file needs matroid, ground, rank and bases");
  return matroid_from_bases(name, n, r, std::move(bases));
}

std::string matroid_print(const Matroid& M) {
  std::ostringstream os;
  os << "matroid " << M.name << "\n";
  os << "ground " << M.n << "\n";
  os << "rank " << M.r << "\n";
  os << "bases";
  for (Subset b : M.bases) os << ' ' << subset_str(b, M.n);
  os << "\n";
  return os.str();
}

std::optional<Matroid> builtin_matroid(const std::string& name) {
  if (name == "F7") return fano_matroid();
  if (name.size() == 3 && name[0] == 'U' && isdigit(name[1]) &&
      isdigit(name[2])) {
    int r = name[1] - '0', n = name[2] - '0';
    if (r <= n) return uniform_matroid(r, n);
  }
  return std::nullopt;
}

} // namespace pastures
