#include "qmarkoff/serialize.hpp"

#include <sstream>

namespace qmarkoff {

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"min_degree", p.min_degree()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return LaurentPoly(j.at("min_degree").get<int>(), std::move(coeffs));
}

Json to_json(const QMatrix& m) {
  return Json{{"m11", to_json(m.m11)}, {"m12", to_json(m.m12)}, {"m21", to_json(m.m21)}, {"m22", to_json(m.m22)}};
}

QMatrix qmatrix_from_json(const Json& j) {
  return {laurent_from_json(j.at("m11")), laurent_from_json(j.at("m12")), laurent_from_json(j.at("m21")),
          laurent_from_json(j.at("m22"))};
}

Json to_json(const CycInt& z) {
  Json coords = Json::array();
  for (const auto& c : z.coords()) coords.push_back(c.get_str());
  return Json{{"k", z.k()}, {"coords", std::move(coords)}};
}

CycInt cycint_from_json(const Json& j) {
  std::vector<BigInt> coords;
  for (const auto& c : j.at("coords")) coords.emplace_back(c.get<std::string>());
  return CycInt(j.at("k").get<int>(), std::move(coords));
}

Json to_json(const Word& w) { return w.str(); }

Word word_from_json(const Json& j) {
  auto s = j.get<std::string>();
  const bool extended = s.find_first_of("cd") != std::string::npos;
  return Word(s, extended ? Alphabet::extended : Alphabet::binary);
}

Json to_json(const PairClassification& p) {
  return Json{{"x", p.x.str()},
              {"y", p.y.str()},
              {"class", to_string(p.kind)},
              {"witness", p.witness},
              {"w_bound", p.w_bound},
              {"chain_explained", p.chain_explained}};
}

PairClassification pair_from_json(const Json& j) {
  return {word_from_json(j.at("x")), word_from_json(j.at("y")), parse_pair_class(j.at("class").get<std::string>()),
          j.at("witness").get<std::string>(), j.at("w_bound").get<std::size_t>(),
          j.at("chain_explained").get<bool>()};
}

Json to_json(const CollisionReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json words = Json::array();
    for (const auto& w : g.words) words.push_back(w.str());
    groups.push_back(Json{{"value", to_json(g.value)}, {"human", g.value.to_string()}, {"words", std::move(words)}});
  }
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  Json unexplained = Json::array();
  for (const auto& p : r.pairs) {
    if (p.kind == PairClass::unexplained) unexplained.push_back(to_json(p));
  }
  const auto& s = r.summary;
  return Json{{"map", to_string(r.kind)},
              {"max_len", r.max_len},
              {"summary",
               {{"words_examined", s.words_examined},
                {"groups", s.groups},
                {"pairs", s.pairs},
                {"Identity1", s.identity1},
                {"Identity2", s.identity2},
                {"Both", s.both},
                {"Unexplained", s.unexplained},
                {"unexplained_after_chaining", s.unexplained_after_chaining}}},
              {"unexplained_pairs", std::move(unexplained)},
              {"groups", std::move(groups)},
              {"pairs", std::move(pairs)}};
}

CollisionReport collision_report_from_json(const Json& j) {
  CollisionReport r;
  r.kind = parse_map_kind(j.at("map").get<std::string>());
  r.max_len = j.at("max_len").get<std::size_t>();
  const auto& s = j.at("summary");
  r.summary = {s.at("words_examined").get<std::size_t>(), s.at("groups").get<std::size_t>(),
               s.at("pairs").get<std::size_t>(),          s.at("Identity1").get<std::size_t>(),
               s.at("Identity2").get<std::size_t>(),      s.at("Both").get<std::size_t>(),
               s.at("Unexplained").get<std::size_t>(),    s.at("unexplained_after_chaining").get<std::size_t>()};
  for (const auto& g : j.at("groups")) {
    CollisionGroup group{laurent_from_json(g.at("value")), {}};
    for (const auto& w : g.at("words")) group.words.push_back(word_from_json(w));
    r.groups.push_back(std::move(group));
  }
  for (const auto& p : j.at("pairs")) r.pairs.push_back(pair_from_json(p));
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string collision_report_csv(const CollisionReport& r) {
  std::ostringstream os;
  os << "group,value,x,y,class,witness,chain_explained\n";
  std::size_t pair_index = 0;
  for (std::size_t g = 0; g < r.groups.size(); ++g) {
    const auto& group = r.groups[g];
    const std::size_t n = group.words.size() * (group.words.size() - 1) / 2;
    for (std::size_t i = 0; i < n; ++i, ++pair_index) {
      const auto& p = r.pairs[pair_index];
      os << g << ',' << csv_field(group.value.to_string()) << ',' << p.x.str() << ',' << p.y.str() << ','
         << to_string(p.kind) << ',' << csv_field(p.witness) << ',' << (p.chain_explained ? "true" : "false")
         << '\n';
    }
  }
  return os.str();
}

Json to_json(const std::vector<BigInt>& numbers) {
  Json out = Json::array();
  for (const auto& n : numbers) out.push_back(n.get_str());
  return out;
}

std::vector<BigInt> bigints_from_json(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& n : j) out.emplace_back(n.get<std::string>());
  return out;
}

}  // namespace qmarkoff
