#include "doctest.h"
#include "qmarkoff/qmatrix.hpp"
#include "qmarkoff/serialize.hpp"

using namespace qmarkoff;

TEST_CASE("laurent round trip") {
  const LaurentPoly p(-3, {BigInt("123456789012345678901234567890"), 0, -7});
  const Json j = to_json(p);
  CHECK(j["min_degree"] == -3);
  CHECK(j["coeffs"][0] == "123456789012345678901234567890");
  CHECK(laurent_from_json(Json::parse(j.dump())) == p);
  CHECK(laurent_from_json(to_json(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("matrix round trip") {
  const QMatrix m = mu_q(Word("aababb"));
  CHECK(qmatrix_from_json(Json::parse(to_json(m).dump())) == m);
}

TEST_CASE("cyclotomic round trip") {
  const CycInt z(5, {BigInt(1), BigInt(-2), BigInt(0), BigInt(4)});
  CHECK(cycint_from_json(Json::parse(to_json(z).dump())) == z);
}

TEST_CASE("word round trip") {
  CHECK(word_from_json(to_json(Word("abba"))) == Word("abba"));
  const Word e("acd", Alphabet::extended);
  CHECK(word_from_json(to_json(e)).alphabet() == Alphabet::extended);
}

TEST_CASE("collision report round trip and stable bytes") {
  const auto r = collide(MapKind::mu, 9);
  const std::string text = to_json(r).dump(2);
  CHECK(collision_report_from_json(Json::parse(text)) == r);
  CHECK(to_json(collide(MapKind::mu, 9)).dump(2) == text);
  const auto m = collide(MapKind::M, 9);
  CHECK(collision_report_from_json(Json::parse(to_json(m).dump())) == m);
  CHECK(to_json(m)["unexplained_pairs"].size() == 4);
}

TEST_CASE("csv") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  const auto r = collide(MapKind::mu, 5);
  const std::string csv = collision_report_csv(r);
  CHECK(csv.rfind("group,value,x,y,class,witness,chain_explained\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(r.pairs.size()));
  CHECK(csv.find("aaabb,abaab,Identity1") != std::string::npos);
}

TEST_CASE("big integer lists") {
  const std::vector<BigInt> v{1, BigInt("99999999999999999999999")};
  CHECK(bigints_from_json(Json::parse(to_json(v).dump())) == v);
}
