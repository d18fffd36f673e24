#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "obstrukt/butterfly.hpp"
#include "obstrukt/cohomology.hpp"
#include "obstrukt/fincat.hpp"
#include "obstrukt/opext.hpp"
#include "obstrukt/schreier.hpp"
#include "obstrukt/xmod.hpp"

namespace obk {

// Named wrappers keep the cross-reference names used in the files.
struct NamedHom {
  std::string src, dst;
  Homomorphism hom;
};
struct NamedAction {
  std::string actor, module;
  AbelianAction action;
};
struct NamedCochain {
  std::string action;
  Cochain cochain;
};
struct NamedExtension {
  std::string b, e, c;
  Extension ext;
};
struct NamedXExt {
  std::string b, g2, g1, c;
  CrossedExtension xext;
};
struct NamedButterfly {
  std::string src, dst, e;
  Butterfly butterfly;
};
struct NamedAKernel {
  std::string c, k;
  AbstractKernel ak;
};
struct NamedFunctor {
  std::string src, dst;
  FunctorTable functor;
};

struct Bundle {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, NamedHom> homs;
  std::map<std::string, NamedAction> actions;
  std::map<std::string, NamedCochain> cochains;
  std::map<std::string, NamedExtension> extensions;
  std::map<std::string, NamedXExt> xexts;
  std::map<std::string, NamedButterfly> butterflies;
  std::map<std::string, NamedAKernel> akernels;
  std::map<std::string, FinCategory> categories;
  std::map<std::string, NamedFunctor> functors;
  // (file, kind, name) in load order, for byte-faithful round trips
  std::vector<std::array<std::string, 3>> items;
};

Bundle parse_bundle(const std::vector<std::string>& paths);
void parse_file_into(Bundle& bundle, const std::string& path);
void parse_text_into(Bundle& bundle, const std::string& text, const std::string& filename);

std::string serialize_group(const std::string& name, const FiniteGroup& g);
std::string serialize_hom(const std::string& name, const NamedHom& h);
std::string serialize_action(const std::string& name, const NamedAction& a);
std::string serialize_cochain(const std::string& name, const NamedCochain& c);
std::string serialize_extension(const std::string& name, const NamedExtension& e);
std::string serialize_xext(const std::string& name, const NamedXExt& x);
std::string serialize_butterfly(const std::string& name, const NamedButterfly& b);
std::string serialize_akernel(const std::string& name, const NamedAKernel& a);
std::string serialize_category(const std::string& name, const FinCategory& c);
std::string serialize_functor(const std::string& name, const NamedFunctor& f);

// Concatenation of the file's objects in load order, canonical form.
std::string serialize_file(const Bundle& bundle, const std::string& filename);
std::string serialize_object(const Bundle& bundle, const std::string& kind, const std::string& name);

// The canonical fixture corpus as (filename, canonical content) pairs.
std::vector<std::pair<std::string, std::string>> canonical_fixtures();

}  // namespace obk
