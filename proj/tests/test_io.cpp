#include "doctest.h"

#include "obstrukt/io.hpp"

using namespace obk;

TEST_CASE("canonical fixtures parse and round-trip byte-identically") {
  auto files = canonical_fixtures();
  REQUIRE(!files.empty());
  Bundle bundle;
  for (const auto& [name, content] : files) CHECK_NOTHROW(parse_text_into(bundle, content, name));
  CHECK(bundle.groups.count("s3"));
  CHECK(bundle.xexts.count("mul2"));
  CHECK(bundle.butterflies.count("diag17"));
  for (const auto& [name, content] : files) CHECK(serialize_file(bundle, name) == content);
}

TEST_CASE("parse errors carry file and line information") {
  Bundle b;
  CHECK_THROWS_WITH_AS(parse_text_into(b, "group g\norder 2\ntable\n0 1\n1 0 0\nend\n", "bad.grp"),
                       doctest::Contains("bad.grp"), Error);
  // non-square table
  try {
    Bundle b2;
    parse_text_into(b2, "group g\norder 2\ntable\n0 1\n1 0 0\nend\n", "bad.grp");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  // bad group: validation error names the object
  try {
    Bundle b3;
    parse_text_into(b3, "group g\norder 2\ntable\n0 1\n0 1\nend\n", "bad.grp");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(std::string(e.what()).find("NoIdentity") != std::string::npos);
    CHECK(std::string(e.what()).find("'g'") != std::string::npos);
  }
}

TEST_CASE("butterfly files violating a clause fail with named witnesses") {
  auto files = canonical_fixtures();
  std::string corpus;
  for (const auto& [name, content] : files)
    if (name != "butterflies.bfl") corpus += content;
  // gamma.kappa != 0: route kappa through a reflection of s3
  corpus +=
      "butterfly bad trivon2 conj-z3 s3\n"
      "kappa 1\n"
      "iota 0 2 4\n"
      "delta 0 1 0 1 0 1\n"
      "gamma 0 1 0 1 0 1\n"
      "end\n";
  Bundle b;
  try {
    parse_text_into(b, corpus, "all.obk");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(std::string(e.what()).find("'bad'") != std::string::npos);
  }
}

TEST_CASE("comments and cross-file references work") {
  auto files = canonical_fixtures();
  Bundle b;
  std::string groups;
  for (const auto& [name, content] : files)
    if (name == "groups.grp") groups = content;
  parse_text_into(b, "# comment line\n" + groups, "g.grp");
  // a hom referencing groups from another file
  parse_text_into(b, "hom extra z2 z4\n0 2\nend\n", "h.hom");
  CHECK(b.homs.count("extra"));
  // duplicate names are rejected
  CHECK_THROWS_WITH_AS(parse_text_into(b, "hom extra z2 z2\n0 1\nend\n", "h2.hom"),
                       doctest::Contains("duplicate"), Error);
}

TEST_CASE("malformed blocks fail cleanly with ParseError") {
  auto bad = [](const std::string& text) {
    Bundle b;
    parse_text_into(b, "group z2\norder 2\ntable\n0 1\n1 0\nend\n", "ok.grp");
    CHECK_THROWS_AS(parse_text_into(b, text, "bad.txt"), Error);
  };
  bad("group g\norder\ntable\n0\nend\n");                 // missing order value
  bad("group g\norder -3\ntable\nend\n");                 // negative order
  bad("group g\norder 2\ntable\n0 1\nend\n");             // missing row
  bad("hom h z2\n0 1\nend\n");                            // missing target
  bad("hom h z2 nosuch\n0 1\nend\n");                     // unknown group
  bad("hom h z2 z2\n0 x\nend\n");                         // non-integer image
  bad("action a z2 z2\n0 1\nend\n");                      // missing a line
  bad("cochain c 9 a\nend\n");                            // degree out of range
  bad("extension e z2 z2 z2\nk 0 1\nend\n");              // missing f line
  bad("xext x z2 z2 z2 z2\nj 0 1\npartial 0 0\nend\n");   // missing p/act
  bad("butterfly b x y z\nend\n");                        // missing legs
  bad("category c\nobjects\nmorphisms 0\nidentities\ncompose\nend\n");  // bad sizes
  bad("category c\nobjects 1\nmorphisms -2\nidentities\ncompose\nend\n");
  bad("functor f c d\nobjects 0\nend\n");                 // unknown categories
  bad("widget w\nend\n");                                 // unknown kind
  bad("group g\norder 1\ntable\n0\n");                    // unterminated block
}
