#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "t2w/t2w.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { t2w_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

t2w_system* parse(const std::string& text) {
  t2w_system* w = nullptr;
  REQUIRE(t2w_system_parse(text.data(), text.size(), &w) == T2W_OK);
  return w;
}

const std::string kSuspension =
    R"({"schema_version":"1","obstruction":[0,0],"orientation":1,"genus":0,"circle_boundaries":[],)"
    R"("fixed_cycles":[[{"pair":[1,0],"f":5},{"pair":[2,5],"f":-5}]],"exceptional":[]})";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(t2w_version()) == "1.0.0");
  CHECK(std::string(t2w_status_name(T2W_OK)) == "ok");
  CHECK(std::string(t2w_status_name(T2W_ERR_PARSE)) != "ok");
}

TEST_CASE("parse, serialize and validate") {
  t2w_system* w = parse(kSuspension);
  Owned text;
  REQUIRE(t2w_system_serialize(w, &text.s) == T2W_OK);
  CHECK(text.str() == kSuspension);
  int legal = -1;
  Owned report;
  CHECK(t2w_system_validate(w, &legal, &report.s) == T2W_OK);
  CHECK(legal == 1);
  CHECK(report.str() == "legal\n");
  t2w_system_free(w);

  t2w_system* bad = nullptr;
  CHECK(t2w_system_parse("{", 1, &bad) == T2W_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(t2w_last_error()).size() > 0);
  CHECK(t2w_system_parse(nullptr, 0, &bad) == T2W_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validate reports the r=2 rule") {
  std::string text = kSuspension;
  text.replace(text.find("\"f\":-5"), 6, "\"f\":5");
  t2w_system* w = parse(text);
  int legal = -1;
  Owned report;
  CHECK(t2w_system_validate(w, &legal, &report.s) == T2W_OK);
  CHECK(legal == 0);
  CHECK(report.str().find("r=2 rule") != std::string::npos);
  t2w_system* canon = nullptr;
  CHECK(t2w_system_canonical(w, T2W_MODE_STRICT, &canon) == T2W_ERR_ILLEGAL_SYSTEM);
  t2w_system_free(w);
}

TEST_CASE("compare with witness") {
  t2w_system* a = nullptr;
  REQUIRE(t2w_generate_weighted_projective(1, 2, 3, &a) == T2W_OK);
  t2w_system* b = nullptr;
  REQUIRE(t2w_system_reverse_orientation(a, &b) == T2W_OK);
  int iso = -1;
  CHECK(t2w_system_compare(a, b, T2W_MODE_STRICT, &iso, nullptr) == T2W_OK);
  CHECK(iso == 0);
  Owned witness;
  CHECK(t2w_system_compare(a, b, T2W_MODE_WEAK, &iso, &witness.s) == T2W_OK);
  CHECK(iso == 1);
  CHECK(witness.str().rfind("reverse=", 0) == 0);
  t2w_system* c = nullptr;
  CHECK(t2w_system_basis_change(a, 2, 0, 0, 1, &c) == T2W_ERR_NOT_UNIMODULAR);
  REQUIRE(t2w_system_basis_change(a, 1, 1, 0, 1, &c) == T2W_OK);
  CHECK(t2w_system_compare(a, c, T2W_MODE_WEAK, &iso, nullptr) == T2W_OK);
  CHECK(iso == 1);
  t2w_system_free(a);
  t2w_system_free(b);
  t2w_system_free(c);
}

TEST_CASE("local models and space of directions") {
  int64_t r = 0, s = 0;
  CHECK(t2w_space_of_directions(1, 0, 2, 5, &r, &s) == T2W_OK);
  CHECK(r == 5);
  CHECK(s == 2);
  CHECK(t2w_space_of_directions(1, 0, 2, 0, &r, &s) == T2W_ERR_NOT_COPRIME);
  CHECK(t2w_space_of_directions(1, 2, 1, 2, &r, &s) == T2W_ERR_ILLEGAL_DETERMINANT);
  t2w_system* w = parse(kSuspension);
  Owned listing;
  CHECK(t2w_system_localmodels(w, &listing.s) == T2W_OK);
  CHECK(listing.str().find("L(5,3)\tL(5,2)") != std::string::npos);
  t2w_system_free(w);
}

TEST_CASE("decompose and reassemble") {
  t2w_system* w = parse(kSuspension);
  int simple = -1;
  CHECK(t2w_system_is_simple(w, &simple) == T2W_OK);
  CHECK(simple == 1);
  t2w_decomposition* d = nullptr;
  REQUIRE(t2w_system_decompose(w, &d) == T2W_OK);
  CHECK(t2w_decomposition_piece_count(d) == 1);
  t2w_system* piece = nullptr;
  CHECK(t2w_decomposition_piece(d, 0, &piece) == T2W_OK);
  t2w_system* missing = nullptr;
  CHECK(t2w_decomposition_piece(d, 1, &missing) == T2W_ERR_INVALID_ARGUMENT);
  Owned manifest;
  CHECK(t2w_decomposition_manifest(d, nullptr, "manifold.json", &manifest.s) == T2W_OK);
  CHECK(manifest.str().find("piece_1.json") != std::string::npos);
  t2w_system* back = nullptr;
  REQUIRE(t2w_decomposition_reassemble(d, &back) == T2W_OK);
  int iso = -1;
  CHECK(t2w_system_compare(back, w, T2W_MODE_STRICT, &iso, nullptr) == T2W_OK);
  CHECK(iso == 1);
  t2w_system_free(back);
  t2w_system_free(piece);
  t2w_decomposition_free(d);
  t2w_system_free(w);
}

TEST_CASE("generators") {
  t2w_system* w = nullptr;
  CHECK(t2w_generate_suspension(1, 0, 2, 5, -1, &w) == T2W_OK);
  t2w_system_free(w);
  w = nullptr;
  CHECK(t2w_generate_suspension(1, 0, 2, 5, 0, &w) == T2W_ERR_ILLEGAL_PARAMETERS);
  CHECK(t2w_generate_suspension(1, 2, -1, -2, 1, &w) == T2W_ERR_ILLEGAL_DETERMINANT);
  CHECK(t2w_generate_weighted_projective(2, 4, 5, &w) == T2W_ERR_ILLEGAL_PARAMETERS);
  CHECK(w == nullptr);
}

TEST_CASE("enumerator") {
  t2w_bounds b{0, 1, 2, 1, 0, 2};
  t2w_enumerator* e = nullptr;
  REQUIRE(t2w_enumerator_create(&b, &e) == T2W_OK);
  int n = 0;
  t2w_system* w = nullptr;
  while (t2w_enumerator_next(e, &w) == T2W_OK) {
    ++n;
    t2w_system_free(w);
  }
  CHECK(n == 36);
  CHECK(t2w_enumerator_next(e, &w) == T2W_DONE);
  t2w_enumerator_free(e);
  b.max_genus = -1;
  CHECK(t2w_enumerator_create(&b, &e) == T2W_ERR_INVALID_ARGUMENT);
}
