#include "grouplab/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grouplab/classes.hpp"
#include "grouplab/embeddings.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  return true;
}

} // namespace

GroupFile parse_group_file(const std::string& text) {
  GroupFile out;
  bool have_group = false, have_degree = false, have_end = false;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t lineno = i + 1;
    std::string line = lines[i];
    if (auto pos = line.find('#'); pos != std::string::npos)
      line = line.substr(0, pos);
    line = strip(line);
    if (line.empty()) continue;
    if (have_end)
      throw ParseError(lineno, "unexpected content after 'end'");

    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    std::string rest = strip(line.substr(keyword.size()));

    if (keyword == "group") {
      if (have_group) throw ParseError(lineno, "duplicate 'group' line");
      if (!valid_name(rest))
        throw ParseError(lineno, "invalid group name '" + rest + "'");
      out.name = rest;
      have_group = true;
    } else if (keyword == "degree") {
      if (!have_group)
        throw ParseError(lineno, "'degree' before 'group'");
      if (have_degree) throw ParseError(lineno, "duplicate 'degree' line");
      try {
        std::size_t idx = 0;
        unsigned long v = std::stoul(rest, &idx);
        if (idx != rest.size() || v == 0 || v > 100000)
          throw std::invalid_argument("");
        out.degree = static_cast<Point>(v);
      } catch (const std::exception&) {
        throw ParseError(lineno, "invalid degree '" + rest + "'");
      }
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree)
        throw ParseError(lineno, "'gen' before 'degree'");
      try {
        out.generators.push_back(parse_cycles(out.degree, rest));
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (keyword == "end") {
      if (!have_degree)
        throw ParseError(lineno, "'end' before 'degree'");
      have_end = true;
    } else {
      throw ParseError(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_group) throw ParseError(lines.size(), "missing 'group' line");
  if (!have_degree) throw ParseError(lines.size(), "missing 'degree' line");
  if (!have_end) throw ParseError(lines.size(), "missing 'end'");
  return out;
}

GroupPtr group_from_file_text(const std::string& text) {
  GroupFile f = parse_group_file(text);
  return Group::generate(f.degree, f.generators, f.name);
}

GroupPtr group_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_file_text(buf.str());
}

std::string write_group_file(const Group& g) {
  std::ostringstream out;
  out << "group " << (valid_name(g.name()) ? g.name() : "unnamed") << "\n";
  out << "degree " << g.degree() << "\n";
  if (g.generators().empty()) {
    out << "gen ()\n";
  } else {
    for (const Perm& p : g.generators())
      out << "gen " << p.to_cycle_string() << "\n";
  }
  out << "end\n";
  return out.str();
}

// ---------------------------------------------------------------- builtins

namespace {

GroupPtr make_cyclic(unsigned n, const std::string& name) {
  if (n == 0) throw Error("cyclic order must be positive");
  if (n == 1) return Group::generate(1, {}, name);
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = i + 1;
  return Group::generate(n, {Perm::from_cycles(n, {cycle})}, name);
}

GroupPtr make_dihedral(unsigned order, const std::string& name) {
  if (order < 4 || order % 2 != 0)
    throw Error("dihedral order must be an even number >= 4");
  unsigned n = order / 2;
  if (n == 2) {
    // Klein four group; needs four points to act faithfully
    return Group::generate(
        4, {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{3, 4}})},
        name);
  }
  std::vector<Point> rot(n);
  for (unsigned i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  std::vector<Point> ref(n);
  for (unsigned i = 0; i < n; ++i) ref[i] = (n - i) % n;
  return Group::generate(
      n, {Perm::from_images(rot), Perm::from_images(ref)}, name);
}

GroupPtr make_symmetric(unsigned n, const std::string& name) {
  if (n == 0 || n > 6)
    throw Error("symmetric degree must be between 1 and 6");
  if (n == 1) return Group::generate(1, {}, name);
  std::vector<Point> big(n);
  for (unsigned i = 1; i <= n; ++i) big[i - 1] = i;
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2}})};
  if (n > 2) gens.push_back(Perm::from_cycles(n, {big}));
  return Group::generate(n, gens, name);
}

GroupPtr make_alternating(unsigned n, const std::string& name) {
  if (n == 0 || n > 6)
    throw Error("alternating degree must be between 1 and 6");
  if (n <= 2) return Group::generate(std::max(n, 1u), {}, name);
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2, 3}})};
  if (n >= 4) {
    std::vector<Point> cyc;
    if (n % 2 == 1) {
      for (unsigned i = 1; i <= n; ++i) cyc.push_back(i);
    } else {
      for (unsigned i = 2; i <= n; ++i) cyc.push_back(i);
    }
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return Group::generate(n, gens, name);
}

GroupPtr make_quaternion8(const std::string& name) {
  // regular representation on the eight units 1,-1,i,-i,j,-j,k,-k
  // axes: 0=1, 1=i, 2=j, 3=k; table[a][b] = (sign, axis) of a*b
  struct Unit { int sign; int axis; };
  auto mul = [](Unit a, Unit b) -> Unit {
    static const int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Unit{a.sign * b.sign * sign_table[a.axis][b.axis],
                axis_table[a.axis][b.axis]};
  };
  auto index = [](Unit u) -> Point {
    return static_cast<Point>(u.axis * 2 + (u.sign < 0 ? 1 : 0));
  };
  auto unit_at = [](Point idx) -> Unit {
    return Unit{idx % 2 == 0 ? 1 : -1, static_cast<int>(idx / 2)};
  };
  auto right_mult = [&](Unit m) {
    std::vector<Point> img(8);
    for (Point i = 0; i < 8; ++i) img[i] = index(mul(unit_at(i), m));
    return Perm::from_images(img);
  };
  return Group::generate(
      8, {right_mult(Unit{1, 1}), right_mult(Unit{1, 2})}, name);
}

GroupPtr make_elementary_abelian(std::size_t order, const std::string& name) {
  unsigned p = 0;
  for (unsigned q : prime_divisors(order)) p = q;
  if (p == 0 || p_part(order, p) != order)
    throw Error("elementary abelian order must be a prime power, got " +
                std::to_string(order));
  unsigned k = 0;
  for (std::size_t m = order; m > 1; m /= p) ++k;
  Point degree = static_cast<Point>(p * k);
  std::vector<Perm> gens;
  for (unsigned block = 0; block < k; ++block) {
    std::vector<Point> cyc;
    for (unsigned i = 0; i < p; ++i) cyc.push_back(block * p + i + 1);
    gens.push_back(Perm::from_cycles(degree, {cyc}));
  }
  return Group::generate(degree, gens, name);
}

Perm shift_perm(const Perm& p, Point offset, Point new_degree) {
  std::vector<Point> img(new_degree);
  for (Point i = 0; i < new_degree; ++i) img[i] = i;
  for (Point i = 0; i < p.degree(); ++i) img[i + offset] = p[i] + offset;
  return Perm::from_images(img);
}

GroupPtr make_product(const std::string& args, const std::string& name) {
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    else if (args[i] == ')') --depth;
    else if (args[i] == ',' && depth == 0) { comma = i; break; }
  }
  if (comma == std::string::npos)
    throw Error("product needs two comma-separated factors");
  GroupPtr a = builtin(strip(args.substr(0, comma)));
  GroupPtr b = builtin(strip(args.substr(comma + 1)));
  Point degree = a->degree() + b->degree();
  std::vector<Perm> gens;
  for (const Perm& p : a->generators()) gens.push_back(shift_perm(p, 0, degree));
  for (const Perm& p : b->generators())
    gens.push_back(shift_perm(p, a->degree(), degree));
  GroupPtr g = Group::generate(degree, gens, name);
  if (g->order() != a->order() * b->order())
    throw Error("internal inconsistency: direct product order mismatch");
  return g;
}

} // namespace

GroupPtr builtin(const std::string& token) {
  if (token == "quaternion8") return make_quaternion8(token);
  if (token.rfind("product(", 0) == 0 && token.back() == ')')
    return make_product(token.substr(8, token.size() - 9), token);

  std::size_t digits = 0;
  while (digits < token.size() &&
         std::isdigit(static_cast<unsigned char>(token[token.size() - 1 - digits])))
    ++digits;
  if (digits == 0 || digits == token.size())
    throw Error("unknown builtin '" + token + "'");
  std::string family = token.substr(0, token.size() - digits);
  unsigned long n = std::stoul(token.substr(token.size() - digits));

  if (family == "cyclic") return make_cyclic(static_cast<unsigned>(n), token);
  if (family == "dihedral")
    return make_dihedral(static_cast<unsigned>(n), token);
  if (family == "symmetric")
    return make_symmetric(static_cast<unsigned>(n), token);
  if (family == "alternating")
    return make_alternating(static_cast<unsigned>(n), token);
  if (family == "elementary_abelian")
    return make_elementary_abelian(n, token);
  throw Error("unknown builtin '" + token + "'");
}

// ----------------------------------------------------------------- fixture

GroupPtr fixture_216_153(const std::string& path) {
  GroupPtr g = group_from_path(path);
  auto fail = [](const std::string& what) {
    throw Error("fixture smallgroup_216_153 failed validation: " + what);
  };
  if (g->order() != 216)
    fail("order is " + std::to_string(g->order()) + ", expected 216");
  if (!is_solvable(g).value) fail("group is not solvable");
  Subgroup p = sylow_subgroup(g, 3);
  if (p.order() != 27)
    fail("Sylow 3-subgroup has order " + std::to_string(p.order()));
  GroupPtr pg = p.as_group("sylow3");
  auto cls = nilpotency_class(pg);
  if (!cls || *cls != 2)
    fail("Sylow 3-subgroup does not have nilpotency class 2");
  Subgroup n = normalizer(g, p);
  if (!is_p_supersolvable(n.as_group("normalizer"), 3).value)
    fail("N_G(P) is not 3-supersolvable");
  if (is_p_supersolvable(g, 3).value)
    fail("group is 3-supersolvable");
  return g;
}

// ----------------------------------------------------------------- catalog

GroupPtr materialize(const CatalogEntry& entry) {
  GroupPtr g;
  switch (entry.source) {
    case CatalogEntry::Source::builtin: g = builtin(entry.spec); break;
    case CatalogEntry::Source::file: g = group_from_path(entry.spec); break;
    case CatalogEntry::Source::fixture: g = fixture_216_153(entry.spec); break;
  }
  if (entry.expected_order && g->order() != *entry.expected_order)
    throw Error("catalog entry '" + entry.name + "': order " +
                std::to_string(g->order()) + " does not match expected " +
                std::to_string(*entry.expected_order));
  return g;
}

std::vector<CatalogEntry> load_catalog_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path base(dir);
  if (!fs::is_directory(base))
    throw Error("catalog directory not found: " + dir);

  std::vector<CatalogEntry> entries;
  fs::path manifest = base / "catalog.list";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto pos = line.find('#'); pos != std::string::npos)
        line = line.substr(0, pos);
      line = strip(line);
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string kind, spec, order_text;
      ls >> kind >> spec >> order_text;
      CatalogEntry e;
      if (kind == "builtin") {
        e.source = CatalogEntry::Source::builtin;
        e.spec = spec;
        e.name = spec;
      } else if (kind == "file" || kind == "fixture") {
        e.source = kind == "file" ? CatalogEntry::Source::file
                                  : CatalogEntry::Source::fixture;
        e.spec = (base / spec).string();
        e.name = fs::path(spec).stem().string();
      } else {
        throw ParseError(lineno, "unknown catalog entry kind '" + kind + "'");
      }
      if (!order_text.empty()) {
        try {
          e.expected_order = std::stoull(order_text);
        } catch (const std::exception&) {
          throw ParseError(lineno, "invalid order '" + order_text + "'");
        }
      }
      entries.push_back(std::move(e));
    }
  } else {
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(base))
      if (de.path().extension() == ".grp") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      CatalogEntry e;
      e.source = CatalogEntry::Source::file;
      e.spec = f.string();
      e.name = f.stem().string();
      entries.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].name == entries[j].name)
        throw Error("duplicate catalog entry name '" + entries[i].name + "'");
  return entries;
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&out](const std::string& token, std::size_t order) {
    out.push_back(CatalogEntry{token, CatalogEntry::Source::builtin, token,
                               order});
  };
  for (unsigned n : {1u,  2u,  3u,  4u,  5u,  6u,  7u,  8u,  9u,  10u, 11u,
                     12u, 13u, 14u, 15u, 16u, 18u, 20u, 21u, 24u, 27u, 30u,
                     32u, 36u, 48u, 60u, 64u, 81u, 100u, 105u, 120u})
    add("cyclic" + std::to_string(n), n);
  for (unsigned m : {4u,  6u,  8u,  10u, 12u, 14u, 16u, 18u, 20u, 24u,
                     28u, 30u, 36u, 40u, 48u, 60u, 100u, 120u})
    add("dihedral" + std::to_string(m), m);
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    std::size_t fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    add("symmetric" + std::to_string(n), fact);
  }
  add("alternating3", 3);
  add("alternating4", 12);
  add("alternating5", 60);
  add("quaternion8", 8);
  for (unsigned m : {4u, 8u, 16u, 9u, 27u, 25u, 49u})
    add("elementary_abelian" + std::to_string(m), m);
  add("product(symmetric3,cyclic3)", 18);
  add("product(alternating4,cyclic2)", 24);
  add("product(symmetric3,symmetric3)", 36);
  add("product(dihedral8,cyclic5)", 40);
  add("product(symmetric4,cyclic2)", 48);
  add("product(symmetric4,cyclic3)", 72);
  add("product(quaternion8,elementary_abelian9)", 72);
  add("product(alternating5,cyclic2)", 120);
  add("product(symmetric4,symmetric3)", 144);
  add("product(alternating4,alternating4)", 144);
  add("product(cyclic8,elementary_abelian27)", 216);
  add("product(quaternion8,cyclic27)", 216);
  add("product(symmetric4,cyclic9)", 216);
  return out;
}

} // namespace grouplab
