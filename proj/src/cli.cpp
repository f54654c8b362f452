#include "pastures/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pastures/algebra.hpp"
#include "pastures/errors.hpp"
#include "pastures/finite_field.hpp"
#include "pastures/hom.hpp"
#include "pastures/matroid.hpp"
#include "pastures/pasture.hpp"
#include "pastures/pasture_map.hpp"
#include "pastures/polyhedron.hpp"
#include "pastures/tropical.hpp"
#include "pastures/valuated.hpp"

namespace pastures::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  if (!f) throw UsageError("cannot open " + p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// '#' starts a comment anywhere in a pasture file; it never occurs in the
// presentation grammar.
std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    out << line << '\n';
  }
  return out.str();
}

PasturePresentation pasture_from_file(const fs::path& p) {
  return parse_presentation(strip_comments(read_file(p)), p.stem().string());
}

bool is_catalog_name(const std::string& s) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

PasturePresentation resolve_pasture(const std::string& spec, bool force_file) {
  if (!force_file && is_catalog_name(spec)) return catalog(spec);
  fs::path p(spec);
  if (!fs::exists(p)) throw UsageError("no pasture named " + spec);
  return pasture_from_file(p);
}

Matroid resolve_matroid(const std::string& spec) {
  if (auto m = builtin_matroid(spec)) return *m;
  fs::path p(spec);
  if (!fs::exists(p)) throw UsageError("no matroid named " + spec);
  return matroid_parse(read_file(p));
}

// Pasture tokens inside a map file resolve against the catalog, then as a
// path, then as a path next to the map file itself.
PastureMap map_from_file(const std::string& spec) {
  fs::path p(spec);
  if (!fs::exists(p)) throw UsageError("no map file " + spec);
  fs::path dir = p.parent_path();
  auto resolve = [&dir](const std::string& token) -> PasturePresentation {
    if (is_catalog_name(token)) return catalog(token);
    fs::path t(token);
    if (fs::exists(t)) return pasture_from_file(t);
    fs::path rel = dir / t;
    if (fs::exists(rel)) return pasture_from_file(rel);
    throw UsageError("cannot resolve pasture " + token);
  };
  return map_parse(read_file(p), resolve);
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": " + s);
  }
  if (pos != s.size()) throw UsageError("bad " + what + ": " + s);
  return v;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string cur;
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  return parts;
}

std::string fixed4(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;  // keeps "-0.0000" out of reports
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string drop_first_line(const std::string& s) {
  auto pos = s.find('\n');
  return pos == std::string::npos ? std::string() : s.substr(pos + 1);
}

void cmd_homs(const std::string& pasture_arg, bool force_file, int q,
              std::ostream& out) {
  auto P = resolve_pasture(pasture_arg, force_file);
  auto F = FiniteField::make(q);
  auto homs = enumerate_homs(P, F);
  if (homs.empty()) {
    out << "0 homs\n";
  } else if (homs.size() == 1) {
    out << "1 hom: " << hom_str(P, F, homs[0]) << "\n";
  } else {
    out << homs.size() << " homs:\n";
    for (const auto& h : homs) out << hom_str(P, F, h) << "\n";
  }
}

void cmd_trop(const std::string& pasture_arg, bool force_file,
              std::ostream& out) {
  auto P = resolve_pasture(pasture_arg, force_file);
  auto C = trop_complex(P);
  out << "dim " << C.dim << ", cells " << C.cells.size() << "\n";
  out << drop_first_line(complex_report(C));
  QVec zero(static_cast<std::size_t>(P.n()), Rat(0));
  out << "trivial point: " << (trop_contains(P, zero) ? "yes" : "no") << "\n";
}

void cmd_profile(const std::string& pasture_arg, bool force_file,
                 const std::string& fields_csv, std::ostream& out) {
  auto P = resolve_pasture(pasture_arg, force_file);
  std::vector<int> qs;
  for (const auto& part : split_csv(fields_csv))
    qs.push_back(parse_int(part, "field size"));
  if (qs.empty()) throw UsageError("empty field list");
  auto prof = point_count_profile(P, qs);
  for (const auto& row : prof.rows)
    out << "q=" << row.q << " count=" << row.count << "\n";
  out << "growth exponent: " << fixed4(prof.growth_exponent) << "\n";
}

void cmd_fibers(const std::string& map_arg, bool tropical,
                const std::string& point_csv, bool have_field, int q,
                std::ostream& out) {
  auto f = map_from_file(map_arg);
  auto chk = validate_map(f);
  if (chk.status == MapStatus::BadLattice || chk.status == MapStatus::BadNullset)
    throw DomainError("invalid map: " + chk.detail);
  if (chk.status == MapStatus::Inconclusive)
    throw ResourceError("map validation inconclusive: " + chk.detail);
  if (tropical) {
    if (point_csv.empty()) throw UsageError("--tropical needs --point");
    QVec x;
    for (const auto& part : split_csv(point_csv)) x.push_back(rat_parse(part));
    if (static_cast<int>(x.size()) != f.source.n())
      throw UsageError("point arity mismatch");
    int d = trop_fiber_dim(f, x);
    if (d < 0)
      out << "tropical fiber dim: -1 (empty)\n";
    else
      out << "tropical fiber dim: " << d << "\n";
    return;
  }
  if (!have_field) throw UsageError("need --field or --tropical");
  auto F = FiniteField::make(q);
  auto rep = induced_map_fibers(f, F);
  for (std::size_t i = 0; i < rep.base_points.size(); ++i) {
    out << "fiber over " << hom_str(f.source, F, rep.base_points[i])
        << ": size " << rep.fibers[i].size();
    if (!rep.fibers[i].empty()) {
      out << ": ";
      for (std::size_t j = 0; j < rep.fibers[i].size(); ++j) {
        if (j) out << ", ";
        out << hom_str(f.target, F, rep.fibers[i][j]);
      }
    }
    out << "\n";
  }
}

void cmd_rigid(const std::string& matroid_arg, std::ostream& out) {
  auto M = resolve_matroid(matroid_arg);
  auto r = rigidity(M);
  if (r.rigid)
    out << "rigid: yes (dressian dim " << r.dressian_dim << " = lineality dim "
        << r.lineality_dim << ")\n";
  else
    out << "rigid: no (dressian dim " << r.dressian_dim << " > lineality dim "
        << r.lineality_dim << ")\n";
}

void cmd_dressian(const std::string& matroid_arg, std::ostream& out) {
  auto M = resolve_matroid(matroid_arg);
  out << "coords:";
  for (auto b : dressian_coords(M)) out << " " << subset_str(b, M.n);
  out << "\n";
  out << complex_report(dressian(M));
}

void cmd_subdivide(const std::string& matroid_arg,
                   const std::string& pluecker_path, std::ostream& out) {
  auto M = resolve_matroid(matroid_arg);
  fs::path p(pluecker_path);
  if (!fs::exists(p)) throw UsageError("no pluecker file " + pluecker_path);
  auto d = pluecker_parse(read_file(p), M);
  out << "pluecker: " << (check_tropical_pluecker(d) ? "valid" : "invalid")
      << "\n";
  auto mk = subdivision_is_matroidal(d);
  out << subdivision_report(M, mk.subdivision);
  out << "matroidal: " << (mk.ok ? "yes" : "no") << "\n";
  auto w = hyperplane_fit(d);
  if (!w) {
    out << "witness: none\n";
    return;
  }
  out << "witness: x=(";
  for (int i = 0; i < M.n; ++i) {
    if (i) out << ", ";
    if (w->x[static_cast<std::size_t>(i)])
      out << rat_str(*w->x[static_cast<std::size_t>(i)]);
    else
      out << "inf";
  }
  out << ") c=" << rat_str(w->c) << "\n";
}

void cmd_algebra(const std::string& pasture_arg, bool force_file,
                 const std::string& field_spec, const std::string& dialect,
                 std::ostream& out) {
  auto P = resolve_pasture(pasture_arg, force_file);
  FieldSpec fld;
  if (field_spec == "QQ") {
    fld.kind = FieldSpec::QQ;
  } else if (field_spec.size() > 1 && field_spec[0] == 'F') {
    fld.kind = FieldSpec::Finite;
    fld.q = parse_int(field_spec.substr(1), "field");
    FiniteField::make(fld.q);  // reject non prime powers up front
  } else {
    throw UsageError("bad field " + field_spec + " (use QQ or F<q>)");
  }
  auto A = associated_algebra(P, fld);
  out << export_cas(A, dialect) << "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact computations on finitely presented pastures", "pastures"};
  app.require_subcommand(1);

  std::string pasture_arg, matroid_arg, map_arg, pluecker_arg;
  std::string point_arg, fields_arg;
  std::string field_spec = "QQ", dialect = "generic";
  int field_q = 0;
  bool force_file = false, tropical = false;

  auto* pasture_cmd = app.add_subcommand("pasture", "pasture computations");
  pasture_cmd->require_subcommand(1);

  auto* homs = pasture_cmd->add_subcommand(
      "homs", "enumerate homomorphisms into a finite field");
  homs->add_option("--pasture", pasture_arg, "catalog name or file")->required();
  homs->add_option("--field", field_q, "finite field size")->required();
  homs->add_flag("--file", force_file, "treat --pasture as a file path");

  auto* trop = pasture_cmd->add_subcommand(
      "trop", "cell cover of the tropical hom space");
  trop->add_option("--pasture", pasture_arg)->required();
  trop->add_flag("--file", force_file);

  auto* profile = pasture_cmd->add_subcommand(
      "profile", "point counts over a list of finite fields");
  profile->add_option("--pasture", pasture_arg)->required();
  profile->add_option("--fields", fields_arg, "comma separated field sizes")
      ->required();
  profile->add_flag("--file", force_file);

  auto* fibers = pasture_cmd->add_subcommand(
      "fibers", "fibers of the induced map on hom sets");
  fibers->add_option("--map", map_arg, "map file")->required();
  auto* fibers_field = fibers->add_option("--field", field_q);
  fibers->add_flag("--tropical", tropical, "tropical fiber dimension");
  fibers->add_option("--point", point_arg, "comma separated rationals");

  auto* matroid_cmd = app.add_subcommand("matroid", "matroid computations");
  matroid_cmd->require_subcommand(1);

  auto* rigid = matroid_cmd->add_subcommand("rigid", "rigidity test");
  rigid->add_option("--matroid", matroid_arg, "builtin name or file")->required();

  auto* dressian_sub = matroid_cmd->add_subcommand(
      "dressian", "cell cover of the space of tropical Pluecker vectors");
  dressian_sub->add_option("--matroid", matroid_arg)->required();

  auto* subdivide = matroid_cmd->add_subcommand(
      "subdivide", "regular subdivision induced by a Pluecker vector");
  subdivide->add_option("--matroid", matroid_arg)->required();
  subdivide->add_option("--pluecker", pluecker_arg, "pluecker file")->required();

  auto* band_cmd = app.add_subcommand("band", "associated algebra export");
  band_cmd->require_subcommand(1);

  auto* algebra = band_cmd->add_subcommand(
      "algebra", "present the associated algebra for a CAS");
  algebra->add_option("--pasture", pasture_arg)->required();
  algebra->add_option("--field", field_spec, "QQ or F<q>");
  algebra->add_option("--dialect", dialect, "generic, m2 or singular");
  algebra->add_flag("--file", force_file);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  if (homs->parsed()) {
    cmd_homs(pasture_arg, force_file, field_q, out);
  } else if (trop->parsed()) {
    cmd_trop(pasture_arg, force_file, out);
  } else if (profile->parsed()) {
    cmd_profile(pasture_arg, force_file, fields_arg, out);
  } else if (fibers->parsed()) {
    cmd_fibers(map_arg, tropical, point_arg, fibers_field->count() > 0,
               field_q, out);
  } else if (rigid->parsed()) {
    cmd_rigid(matroid_arg, out);
  } else if (dressian_sub->parsed()) {
    cmd_dressian(matroid_arg, out);
  } else if (subdivide->parsed()) {
    cmd_subdivide(matroid_arg, pluecker_arg, out);
  } else if (algebra->parsed()) {
    cmd_algebra(pasture_arg, force_file, field_spec, dialect, out);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace pastures::cli
