#include "obstrukt/io.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <sstream>

namespace obk {

namespace {

struct RawBlock {
  std::string kind;
  std::vector<std::string> header;             // tokens after the kind
  std::vector<std::vector<std::string>> body;  // tokenized body lines
  std::string file;
  int line = 0;
};

[[noreturn]] void parse_fail(const std::string& file, int line, const std::string& reason) {
  fail(ErrorKind::ParseError, file + ":" + std::to_string(line) + ": " + reason);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, const std::string& file, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    parse_fail(file, line, "expected an integer, got '" + tok + "'");
  }
}

std::vector<Idx> to_ints(const std::vector<std::string>& toks, const std::string& file, int line) {
  std::vector<Idx> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(to_int(t, file, line));
  return out;
}

std::vector<RawBlock> scan_blocks(const std::string& text, const std::string& filename) {
  static const std::vector<std::string> kinds = {"group",     "hom",     "action",  "cochain",
                                                 "extension", "xext",    "butterfly", "akernel",
                                                 "category",  "functor"};
  std::vector<RawBlock> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  RawBlock* open = nullptr;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!open) {
      if (std::find(kinds.begin(), kinds.end(), toks[0]) == kinds.end())
        parse_fail(filename, lineno, "unknown block kind '" + toks[0] + "'");
      out.push_back(RawBlock{toks[0], std::vector<std::string>(toks.begin() + 1, toks.end()), {},
                             filename, lineno});
      open = &out.back();
      if (open->header.empty()) parse_fail(filename, lineno, "block is missing a name");
    } else if (toks.size() == 1 && toks[0] == "end") {
      open = nullptr;
    } else {
      open->body.push_back(std::move(toks));
    }
  }
  if (open) parse_fail(filename, lineno, "unterminated block '" + open->kind + "'");
  return out;
}

const FiniteGroup& need_group(const Bundle& b, const std::string& name, const RawBlock& blk) {
  auto it = b.groups.find(name);
  if (it == b.groups.end()) parse_fail(blk.file, blk.line, "unknown group '" + name + "'");
  return it->second;
}

const NamedAction& need_action(const Bundle& b, const std::string& name, const RawBlock& blk) {
  auto it = b.actions.find(name);
  if (it == b.actions.end()) parse_fail(blk.file, blk.line, "unknown action '" + name + "'");
  return it->second;
}

const NamedXExt& need_xext(const Bundle& b, const std::string& name, const RawBlock& blk) {
  auto it = b.xexts.find(name);
  if (it == b.xexts.end()) parse_fail(blk.file, blk.line, "unknown xext '" + name + "'");
  return it->second;
}

template <typename MapT>
void check_fresh(const MapT& map, const std::string& name, const RawBlock& blk) {
  if (map.count(name)) parse_fail(blk.file, blk.line, "duplicate name '" + name + "'");
}

void wrap_validation(const RawBlock& blk, const std::string& name, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(ErrorKind::ValidationError,
         blk.file + ": " + blk.kind + " '" + name + "': " + e.what());
  }
}

}  // namespace

void parse_text_into(Bundle& bundle, const std::string& text, const std::string& filename) {
  std::vector<RawBlock> blocks = scan_blocks(text, filename);
  // instantiate by dependency rank so cross-references resolve independent of
  // the order inside the files
  auto rank = [](const std::string& kind) {
    if (kind == "group" || kind == "category") return 0;
    if (kind == "hom" || kind == "action" || kind == "functor") return 1;
    if (kind == "cochain" || kind == "extension" || kind == "xext" || kind == "akernel") return 2;
    return 3;  // butterfly
  };
  std::vector<int> order(blocks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rank(blocks[a].kind) < rank(blocks[b].kind); });

  for (int oi : order) {
    const RawBlock& blk = blocks[oi];
    const std::string& name = blk.header[0];
    if (blk.kind == "group") {
      check_fresh(bundle.groups, name, blk);
      if (blk.body.size() < 3 || blk.body[0][0] != "order" || blk.body[0].size() != 2 ||
          blk.body[1][0] != "table")
        parse_fail(blk.file, blk.line, "group block needs 'order <n>' then 'table'");
      int n = to_int(blk.body[0][1], blk.file, blk.line);
      if (n <= 0) parse_fail(blk.file, blk.line, "group order must be positive");
      if (static_cast<int>(blk.body.size()) != 2 + n)
        parse_fail(blk.file, blk.line, "group table needs exactly " + std::to_string(n) + " rows");
      std::vector<Idx> flat;
      for (int r = 0; r < n; ++r) {
        std::vector<Idx> row = to_ints(blk.body[2 + r], blk.file, blk.line);
        if (static_cast<int>(row.size()) != n)
          parse_fail(blk.file, blk.line, "group table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      wrap_validation(blk, name, [&] { bundle.groups[name] = validate_group_flat(n, flat); });
    } else if (blk.kind == "hom") {
      check_fresh(bundle.homs, name, blk);
      if (blk.header.size() != 3 || blk.body.size() != 1)
        parse_fail(blk.file, blk.line, "hom block needs source, target and one image line");
      const FiniteGroup& src = need_group(bundle, blk.header[1], blk);
      const FiniteGroup& dst = need_group(bundle, blk.header[2], blk);
      std::vector<Idx> images = to_ints(blk.body[0], blk.file, blk.line);
      wrap_validation(blk, name, [&] {
        bundle.homs[name] = NamedHom{blk.header[1], blk.header[2], make_hom(src, dst, images)};
      });
    } else if (blk.kind == "action") {
      check_fresh(bundle.actions, name, blk);
      if (blk.header.size() != 3)
        parse_fail(blk.file, blk.line, "action block needs actor and module groups");
      const FiniteGroup& actor = need_group(bundle, blk.header[1], blk);
      const FiniteGroup& module = need_group(bundle, blk.header[2], blk);
      if (static_cast<int>(blk.body.size()) != actor.order)
        parse_fail(blk.file, blk.line, "action needs one line per actor element");
      std::vector<Idx> act;
      for (const auto& lineToks : blk.body) {
        std::vector<Idx> row = to_ints(lineToks, blk.file, blk.line);
        if (static_cast<int>(row.size()) != module.order)
          parse_fail(blk.file, blk.line, "action line has the wrong length");
        act.insert(act.end(), row.begin(), row.end());
      }
      wrap_validation(blk, name, [&] {
        bundle.actions[name] =
            NamedAction{blk.header[1], blk.header[2], make_action(actor, module, act)};
      });
    } else if (blk.kind == "cochain") {
      check_fresh(bundle.cochains, name, blk);
      if (blk.header.size() != 3)
        parse_fail(blk.file, blk.line, "cochain block needs a degree and an action name");
      int degree = to_int(blk.header[1], blk.file, blk.line);
      if (degree < 0 || degree > 3)
        parse_fail(blk.file, blk.line, "cochain degree must be between 0 and 3");
      const NamedAction& act = need_action(bundle, blk.header[2], blk);
      Cochain c = zero_cochain(degree, act.action);
      const FiniteGroup& cg = act.action.actor;
      for (const auto& lineToks : blk.body) {
        if (lineToks.size() != static_cast<size_t>(degree) + 2 ||
            lineToks[degree] != "->")
          parse_fail(blk.file, blk.line, "cochain line must be 'x1 .. xn -> b'");
        std::vector<Idx> args;
        for (int i = 0; i < degree; ++i) {
          Idx a = to_int(lineToks[i], blk.file, blk.line);
          if (a <= 0 || a >= cg.order)
            parse_fail(blk.file, blk.line, "cochain arguments must be non-identity elements");
          args.push_back(a);
        }
        Idx v = to_int(lineToks[degree + 1], blk.file, blk.line);
        size_t flat = 0;
        for (Idx a : args) flat = flat * cg.order + a;
        c.values[flat] = v;
      }
      wrap_validation(blk, name, [&] {
        bundle.cochains[name] = NamedCochain{blk.header[2], make_cochain(degree, act.action, c.values)};
      });
    } else if (blk.kind == "extension") {
      check_fresh(bundle.extensions, name, blk);
      if (blk.header.size() != 4 || blk.body.size() != 2 || blk.body[0][0] != "k" ||
          blk.body[1][0] != "f")
        parse_fail(blk.file, blk.line, "extension block needs B E C and 'k'/'f' lines");
      const FiniteGroup& b = need_group(bundle, blk.header[1], blk);
      const FiniteGroup& e = need_group(bundle, blk.header[2], blk);
      const FiniteGroup& c = need_group(bundle, blk.header[3], blk);
      std::vector<Idx> kim = to_ints({blk.body[0].begin() + 1, blk.body[0].end()}, blk.file, blk.line);
      std::vector<Idx> fim = to_ints({blk.body[1].begin() + 1, blk.body[1].end()}, blk.file, blk.line);
      wrap_validation(blk, name, [&] {
        bundle.extensions[name] =
            NamedExtension{blk.header[1], blk.header[2], blk.header[3],
                           validate_extension(b, e, c, make_hom(b, e, kim), make_hom(e, c, fim))};
      });
    } else if (blk.kind == "xext") {
      check_fresh(bundle.xexts, name, blk);
      if (blk.header.size() != 5)
        parse_fail(blk.file, blk.line, "xext block needs B G2 G1 C");
      const FiniteGroup& b = need_group(bundle, blk.header[1], blk);
      const FiniteGroup& g2 = need_group(bundle, blk.header[2], blk);
      const FiniteGroup& g1 = need_group(bundle, blk.header[3], blk);
      const FiniteGroup& c = need_group(bundle, blk.header[4], blk);
      if (blk.body.size() != 4 + static_cast<size_t>(g1.order) || blk.body[0][0] != "j" ||
          blk.body[1][0] != "partial" || blk.body[2][0] != "p" || blk.body[3][0] != "act")
        parse_fail(blk.file, blk.line, "xext block needs 'j', 'partial', 'p' and an 'act' block");
      std::vector<Idx> jim = to_ints({blk.body[0].begin() + 1, blk.body[0].end()}, blk.file, blk.line);
      std::vector<Idx> dim = to_ints({blk.body[1].begin() + 1, blk.body[1].end()}, blk.file, blk.line);
      std::vector<Idx> pim = to_ints({blk.body[2].begin() + 1, blk.body[2].end()}, blk.file, blk.line);
      std::vector<Idx> act;
      for (Idx a = 0; a < g1.order; ++a) {
        std::vector<Idx> row = to_ints(blk.body[4 + a], blk.file, blk.line);
        if (static_cast<int>(row.size()) != g2.order)
          parse_fail(blk.file, blk.line, "act line has the wrong length");
        act.insert(act.end(), row.begin(), row.end());
      }
      wrap_validation(blk, name, [&] {
        CrossedModule xm = validate_xmod(make_hom(g2, g1, dim), act);
        bundle.xexts[name] =
            NamedXExt{blk.header[1], blk.header[2], blk.header[3], blk.header[4],
                      validate_xext(xm, b, c, make_hom(b, g2, jim), make_hom(g1, c, pim))};
      });
    } else if (blk.kind == "butterfly") {
      check_fresh(bundle.butterflies, name, blk);
      if (blk.header.size() != 4 || blk.body.size() != 4)
        parse_fail(blk.file, blk.line,
                   "butterfly block needs X X' E and kappa/iota/delta/gamma lines");
      const NamedXExt& src = need_xext(bundle, blk.header[1], blk);
      const NamedXExt& dst = need_xext(bundle, blk.header[2], blk);
      const FiniteGroup& e = need_group(bundle, blk.header[3], blk);
      std::map<std::string, std::vector<Idx>> legs;
      for (const auto& lineToks : blk.body)
        legs[lineToks[0]] = to_ints({lineToks.begin() + 1, lineToks.end()}, blk.file, blk.line);
      for (const char* leg : {"kappa", "iota", "delta", "gamma"})
        if (!legs.count(leg)) parse_fail(blk.file, blk.line, std::string("missing leg '") + leg + "'");
      wrap_validation(blk, name, [&] {
        bundle.butterflies[name] = NamedButterfly{
            blk.header[1], blk.header[2], blk.header[3],
            validate_butterfly(src.xext, dst.xext, e,
                               make_hom(src.xext.xm.g2, e, legs["kappa"]),
                               make_hom(dst.xext.xm.g2, e, legs["iota"]),
                               make_hom(e, src.xext.xm.g1, legs["delta"]),
                               make_hom(e, dst.xext.xm.g1, legs["gamma"]))};
      });
    } else if (blk.kind == "akernel") {
      check_fresh(bundle.akernels, name, blk);
      if (blk.header.size() != 3 || blk.body.size() != 1)
        parse_fail(blk.file, blk.line, "akernel block needs C K and one image line");
      const FiniteGroup& c = need_group(bundle, blk.header[1], blk);
      const FiniteGroup& k = need_group(bundle, blk.header[2], blk);
      std::vector<Idx> images = to_ints(blk.body[0], blk.file, blk.line);
      wrap_validation(blk, name, [&] {
        bundle.akernels[name] =
            NamedAKernel{blk.header[1], blk.header[2], make_abstract_kernel(c, k, images)};
      });
    } else if (blk.kind == "category") {
      check_fresh(bundle.categories, name, blk);
      if (blk.body.size() < 2 || blk.body[0][0] != "objects" || blk.body[0].size() != 2 ||
          blk.body[1][0] != "morphisms" || blk.body[1].size() != 2)
        parse_fail(blk.file, blk.line, "category block needs 'objects <k>' and 'morphisms <m>'");
      int nobj = to_int(blk.body[0][1], blk.file, blk.line);
      int nmor = to_int(blk.body[1][1], blk.file, blk.line);
      if (nobj <= 0 || nmor < 0) parse_fail(blk.file, blk.line, "bad category sizes");
      if (static_cast<int>(blk.body.size()) < 2 + nmor + 2)
        parse_fail(blk.file, blk.line, "category block is truncated");
      std::vector<FinCategory::Mor> mors(nmor);
      for (int i = 0; i < nmor; ++i) {
        std::vector<Idx> row = to_ints(blk.body[2 + i], blk.file, blk.line);
        if (row.size() != 3 || row[0] != i)
          parse_fail(blk.file, blk.line, "morphism lines must be 'id src dst' in order");
        mors[i] = FinCategory::Mor{row[1], row[2]};
      }
      const auto& identLine = blk.body[2 + nmor];
      if (identLine[0] != "identities")
        parse_fail(blk.file, blk.line, "expected the 'identities' line");
      std::vector<Idx> ident = to_ints({identLine.begin() + 1, identLine.end()}, blk.file, blk.line);
      if (blk.body[3 + nmor][0] != "compose")
        parse_fail(blk.file, blk.line, "expected the 'compose' line");
      std::vector<std::vector<Idx>> comp(nmor, std::vector<Idx>(nmor, -1));
      for (size_t i = 4 + nmor; i < blk.body.size(); ++i) {
        std::vector<Idx> row = to_ints(blk.body[i], blk.file, blk.line);
        if (row.size() != 3) parse_fail(blk.file, blk.line, "compose lines must be 'g f gf'");
        comp[row[0]][row[1]] = row[2];
      }
      wrap_validation(blk, name, [&] {
        bundle.categories[name] = validate_category(nobj, mors, ident, comp);
      });
    } else if (blk.kind == "functor") {
      check_fresh(bundle.functors, name, blk);
      if (blk.header.size() != 3 || blk.body.size() != 2 || blk.body[0][0] != "objects" ||
          blk.body[1][0] != "morphisms")
        parse_fail(blk.file, blk.line, "functor block needs source, target and image lines");
      auto sit = bundle.categories.find(blk.header[1]);
      auto dit = bundle.categories.find(blk.header[2]);
      if (sit == bundle.categories.end() || dit == bundle.categories.end())
        parse_fail(blk.file, blk.line, "unknown category reference");
      std::vector<Idx> om = to_ints({blk.body[0].begin() + 1, blk.body[0].end()}, blk.file, blk.line);
      std::vector<Idx> mm = to_ints({blk.body[1].begin() + 1, blk.body[1].end()}, blk.file, blk.line);
      wrap_validation(blk, name, [&] {
        bundle.functors[name] =
            NamedFunctor{blk.header[1], blk.header[2], validate_functor(sit->second, dit->second, om, mm)};
      });
    }
  }
  for (const RawBlock& blk : blocks)
    bundle.items.push_back({filename, blk.kind, blk.header[0]});
}

void parse_file_into(Bundle& bundle, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  parse_text_into(bundle, ss.str(), path);
}

Bundle parse_bundle(const std::vector<std::string>& paths) {
  Bundle b;
  for (const std::string& p : paths) parse_file_into(b, p);
  return b;
}

// ---------------------------------------------------------------------------
// serialization (canonical: single spaces, LF, no trailing whitespace)

namespace {

void write_ints(std::ostringstream& os, const std::vector<Idx>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
}

}  // namespace

std::string serialize_group(const std::string& name, const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << name << "\norder " << g.order << "\ntable\n";
  for (Idx x = 0; x < g.order; ++x) {
    for (Idx y = 0; y < g.order; ++y) {
      if (y) os << ' ';
      os << g.mul(x, y);
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string serialize_hom(const std::string& name, const NamedHom& h) {
  std::ostringstream os;
  os << "hom " << name << ' ' << h.src << ' ' << h.dst << '\n';
  write_ints(os, h.hom.images);
  os << "\nend\n";
  return os.str();
}

std::string serialize_action(const std::string& name, const NamedAction& a) {
  std::ostringstream os;
  os << "action " << name << ' ' << a.actor << ' ' << a.module << '\n';
  for (Idx c = 0; c < a.action.actor.order; ++c) {
    for (Idx b = 0; b < a.action.module.order; ++b) {
      if (b) os << ' ';
      os << a.action.apply(c, b);
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string serialize_cochain(const std::string& name, const NamedCochain& c) {
  std::ostringstream os;
  os << "cochain " << name << ' ' << c.cochain.degree << ' ' << c.action << '\n';
  const FiniteGroup& cg = c.cochain.action.actor;
  size_t total = c.cochain.values.size();
  for (size_t i = 0; i < total; ++i) {
    if (c.cochain.values[i] == c.cochain.action.module.identity) continue;
    std::vector<Idx> args(c.cochain.degree);
    size_t rem = i;
    for (int k = c.cochain.degree - 1; k >= 0; --k) {
      args[k] = static_cast<Idx>(rem % cg.order);
      rem /= cg.order;
    }
    for (Idx a : args) os << a << ' ';
    os << "-> " << c.cochain.values[i] << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string serialize_extension(const std::string& name, const NamedExtension& e) {
  std::ostringstream os;
  os << "extension " << name << ' ' << e.b << ' ' << e.e << ' ' << e.c << "\nk ";
  write_ints(os, e.ext.k.images);
  os << "\nf ";
  write_ints(os, e.ext.f.images);
  os << "\nend\n";
  return os.str();
}

std::string serialize_xext(const std::string& name, const NamedXExt& x) {
  std::ostringstream os;
  os << "xext " << name << ' ' << x.b << ' ' << x.g2 << ' ' << x.g1 << ' ' << x.c << "\nj ";
  write_ints(os, x.xext.j.images);
  os << "\npartial ";
  write_ints(os, x.xext.xm.boundary.images);
  os << "\np ";
  write_ints(os, x.xext.p.images);
  os << "\nact\n";
  for (Idx a = 0; a < x.xext.xm.g1.order; ++a) {
    for (Idx t = 0; t < x.xext.xm.g2.order; ++t) {
      if (t) os << ' ';
      os << x.xext.xm.act_on(a, t);
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string serialize_butterfly(const std::string& name, const NamedButterfly& b) {
  std::ostringstream os;
  os << "butterfly " << name << ' ' << b.src << ' ' << b.dst << ' ' << b.e << "\nkappa ";
  write_ints(os, b.butterfly.kappa.images);
  os << "\niota ";
  write_ints(os, b.butterfly.iota.images);
  os << "\ndelta ";
  write_ints(os, b.butterfly.delta.images);
  os << "\ngamma ";
  write_ints(os, b.butterfly.gamma.images);
  os << "\nend\n";
  return os.str();
}

std::string serialize_akernel(const std::string& name, const NamedAKernel& a) {
  std::ostringstream os;
  os << "akernel " << name << ' ' << a.c << ' ' << a.k << '\n';
  write_ints(os, a.ak.psi0.images);
  os << "\nend\n";
  return os.str();
}

std::string serialize_category(const std::string& name, const FinCategory& c) {
  std::ostringstream os;
  os << "category " << name << "\nobjects " << c.num_objects << "\nmorphisms "
     << c.num_morphisms() << '\n';
  for (Idx f = 0; f < c.num_morphisms(); ++f)
    os << f << ' ' << c.mors[f].src << ' ' << c.mors[f].dst << '\n';
  os << "identities ";
  write_ints(os, c.identity);
  os << "\ncompose\n";
  for (Idx g = 0; g < c.num_morphisms(); ++g)
    for (Idx f = 0; f < c.num_morphisms(); ++f)
      if (c.comp[g][f] >= 0) os << g << ' ' << f << ' ' << c.comp[g][f] << '\n';
  os << "end\n";
  return os.str();
}

std::string serialize_functor(const std::string& name, const NamedFunctor& f) {
  std::ostringstream os;
  os << "functor " << name << ' ' << f.src << ' ' << f.dst << "\nobjects ";
  write_ints(os, f.functor.obj_map);
  os << "\nmorphisms ";
  write_ints(os, f.functor.mor_map);
  os << "\nend\n";
  return os.str();
}

std::string serialize_object(const Bundle& bundle, const std::string& kind,
                             const std::string& name) {
  if (kind == "group") return serialize_group(name, bundle.groups.at(name));
  if (kind == "hom") return serialize_hom(name, bundle.homs.at(name));
  if (kind == "action") return serialize_action(name, bundle.actions.at(name));
  if (kind == "cochain") return serialize_cochain(name, bundle.cochains.at(name));
  if (kind == "extension") return serialize_extension(name, bundle.extensions.at(name));
  if (kind == "xext") return serialize_xext(name, bundle.xexts.at(name));
  if (kind == "butterfly") return serialize_butterfly(name, bundle.butterflies.at(name));
  if (kind == "akernel") return serialize_akernel(name, bundle.akernels.at(name));
  if (kind == "category") return serialize_category(name, bundle.categories.at(name));
  if (kind == "functor") return serialize_functor(name, bundle.functors.at(name));
  fail(ErrorKind::InternalError, "unknown kind '" + kind + "'");
}

std::string serialize_file(const Bundle& bundle, const std::string& filename) {
  std::string out;
  for (const auto& item : bundle.items)
    if (item[0] == filename) out += serialize_object(bundle, item[1], item[2]);
  return out;
}

// ---------------------------------------------------------------------------
// the canonical fixture corpus

std::vector<std::pair<std::string, std::string>> canonical_fixtures() {
  FiniteGroup triv = trivial_group();
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup v4 = product_group(z2, z2);
  FiniteGroup z6 = cyclic_group(6);
  AbelianAction invz3 = make_action(z2, z3, {0, 1, 2, 0, 2, 1});
  FiniteGroup s3 = split_extension(invz3).e;

  std::vector<std::pair<std::string, std::string>> files;

  {
    std::string s;
    s += serialize_group("triv", triv);
    s += serialize_group("z2", z2);
    s += serialize_group("z3", z3);
    s += serialize_group("z4", z4);
    s += serialize_group("v4", v4);
    s += serialize_group("z6", z6);
    s += serialize_group("s3", s3);
    files.emplace_back("groups.grp", s);
  }
  {
    std::string s;
    s += serialize_hom("id-z2", NamedHom{"z2", "z2", identity_hom(z2)});
    s += serialize_hom("id-z3", NamedHom{"z3", "z3", identity_hom(z3)});
    s += serialize_hom("id-z4", NamedHom{"z4", "z4", identity_hom(z4)});
    s += serialize_hom("zero-z2-z2", NamedHom{"z2", "z2", zero_hom(z2, z2)});
    s += serialize_hom("zero-z2-z3", NamedHom{"z2", "z3", zero_hom(z2, z3)});
    s += serialize_hom("dbl-z2-z4", NamedHom{"z2", "z4", make_hom(z2, z4, {0, 2})});
    s += serialize_hom("quo-z4-z2", NamedHom{"z4", "z2", make_hom(z4, z2, {0, 1, 0, 1})});
    s += serialize_hom("sign-s3", NamedHom{"s3", "z2", make_hom(s3, z2, {0, 1, 0, 1, 0, 1})});
    files.emplace_back("homs.hom", s);
  }
  {
    std::string s;
    s += serialize_action("triv-z2-z2", NamedAction{"z2", "z2", trivial_action(z2, z2)});
    s += serialize_action("triv-z2-z4", NamedAction{"z2", "z4", trivial_action(z2, z4)});
    s += serialize_action("triv-z2-v4", NamedAction{"z2", "v4", trivial_action(z2, v4)});
    s += serialize_action("triv-z3-z2", NamedAction{"z3", "z2", trivial_action(z3, z2)});
    s += serialize_action("triv-z3-z3", NamedAction{"z3", "z3", trivial_action(z3, z3)});
    s += serialize_action("inv-z2-z3", NamedAction{"z2", "z3", invz3});
    s += serialize_action("inv-z2-z4",
                          NamedAction{"z2", "z4", make_action(z2, z4, {0, 1, 2, 3, 0, 3, 2, 1})});
    files.emplace_back("actions.act", s);
  }
  {
    std::string s;
    Cochain z4class = make_cochain(2, trivial_action(z2, z2), {0, 0, 0, 1});
    s += serialize_cochain("z4-class", NamedCochain{"triv-z2-z2", z4class});
    files.emplace_back("cochains.coc", s);
  }
  {
    std::string s;
    Extension z4ext = validate_extension(z2, z4, z2, make_hom(z2, z4, {0, 2}),
                                         make_hom(z4, z2, {0, 1, 0, 1}));
    s += serialize_extension("z4-ext", NamedExtension{"z2", "z4", "z2", z4ext});
    Extension splitext = validate_extension(z2, v4, z2, make_hom(z2, v4, {0, 2}),
                                            make_hom(v4, z2, {0, 1, 0, 1}));
    s += serialize_extension("split-z2-z2", NamedExtension{"z2", "v4", "z2", splitext});
    Extension s3ext = validate_extension(z3, s3, z2, make_hom(z3, s3, {0, 2, 4}),
                                         make_hom(s3, z2, {0, 1, 0, 1, 0, 1}));
    s += serialize_extension("s3-ext", NamedExtension{"z3", "s3", "z2", s3ext});
    files.emplace_back("extensions.ext", s);
  }
  {
    std::string s;
    auto ser = [&](const std::string& name, const std::string& bn, const std::string& g2n,
                   const std::string& g1n, const std::string& cn, const CrossedExtension& x) {
      s += serialize_xext(name, NamedXExt{bn, g2n, g1n, cn, x});
    };
    ser("zero22", "z2", "z2", "z2", "z2", zero_xext(trivial_action(z2, z2)));
    ser("zero33", "z3", "z3", "z3", "z3", zero_xext(trivial_action(z3, z3)));
    ser("zero32", "z2", "z2", "z3", "z3", zero_xext(trivial_action(z3, z2)));
    ser("zero2v4", "v4", "v4", "z2", "z2", zero_xext(trivial_action(z2, v4)));
    ser("conj-z3", "z3", "z3", "z2", "z2", zero_xext(invz3));
    {
      std::vector<Idx> ta(16);
      for (Idx a = 0; a < 4; ++a)
        for (Idx t = 0; t < 4; ++t) ta[static_cast<size_t>(a) * 4 + t] = t;
      CrossedModule xm = validate_xmod(make_hom(z4, z4, {0, 2, 0, 2}), ta);
      ser("mul2", "z2", "z4", "z4", "z2", xext_of_xmod(xm));
    }
    {
      // inversion-twisted doubling: the class generating H^3(Z2, Z2)
      std::vector<Idx> tw(16);
      for (Idx a = 0; a < 4; ++a)
        for (Idx t = 0; t < 4; ++t)
          tw[static_cast<size_t>(a) * 4 + t] = (a % 2 == 0) ? t : z4.inv(t);
      CrossedModule xm = validate_xmod(make_hom(z4, z4, {0, 2, 0, 2}), tw);
      ser("mul2tw", "z2", "z4", "z4", "z2", xext_of_xmod(xm));
    }
    ser("trivon2", "triv", "triv", "z2", "z2", zero_xext(trivial_action(z2, triv)));
    files.emplace_back("xexts.xex", s);
  }
  {
    std::string s;
    CrossedExtension xsrc = zero_xext(trivial_action(z2, triv));
    CrossedExtension xdst = zero_xext(invz3);
    Butterfly d17 = validate_butterfly(
        xsrc, xdst, s3, make_hom(xsrc.xm.g2, s3, {0}), make_hom(xdst.xm.g2, s3, {0, 2, 4}),
        make_hom(s3, xsrc.xm.g1, {0, 1, 0, 1, 0, 1}), make_hom(s3, xdst.xm.g1, {0, 1, 0, 1, 0, 1}));
    s += serialize_butterfly("diag17", NamedButterfly{"trivon2", "conj-z3", "s3", d17});
    Butterfly idtr = identity_butterfly(xsrc);  // carrier = H1 x G2' = Z2
    s += serialize_butterfly("idtrivon2", NamedButterfly{"trivon2", "trivon2", "z2", idtr});
    files.emplace_back("butterflies.bfl", s);
  }
  {
    std::string s;
    s += serialize_akernel("psi-id-z2-z3",
                           NamedAKernel{"z2", "z3", make_abstract_kernel(z2, z3, {0, 1})});
    s += serialize_akernel("psi-triv-z2-z2",
                           NamedAKernel{"z2", "z2", make_abstract_kernel(z2, z2, {0, 0})});
    files.emplace_back("akernels.ak", s);
  }
  {
    std::string s;
    std::vector<FinCategory::Mor> mors = {{0, 0}, {1, 1}, {0, 1}};
    std::vector<std::vector<Idx>> comp(3, std::vector<Idx>(3, -1));
    comp[0][0] = 0;
    comp[1][1] = 1;
    comp[1][2] = 2;
    comp[2][0] = 2;
    FinCategory chain = validate_category(2, mors, {0, 1}, comp);
    s += serialize_category("chain", chain);
    s += serialize_functor("idchain", NamedFunctor{"chain", "chain", identity_functor(chain)});
    files.emplace_back("cats.cat", s);
  }
  return files;
}

}  // namespace obk
