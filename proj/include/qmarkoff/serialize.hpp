#pragma once

// JSON and CSV forms of the library types. Arbitrary-precision values
// (coefficients, coordinates, Markoff numbers) are written as decimal
// strings; small structural integers (k, min_degree, counts) as JSON numbers.
// Key order is fixed, so equal values serialize to identical bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "qmarkoff/cyclotomic.hpp"
#include "qmarkoff/laurent.hpp"
#include "qmarkoff/qmatrix.hpp"
#include "qmarkoff/search.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json to_json(const CycInt& z);
CycInt cycint_from_json(const Json& j);

Json to_json(const Word& w);
/// Alphabet is binary unless the string contains c or d.
Word word_from_json(const Json& j);

Json to_json(const PairClassification& p);
PairClassification pair_from_json(const Json& j);

Json to_json(const CollisionReport& r);
CollisionReport collision_report_from_json(const Json& j);

/// One row per classified pair: group,value,x,y,class,witness.
std::string collision_report_csv(const CollisionReport& r);

Json to_json(const std::vector<BigInt>& numbers);
std::vector<BigInt> bigints_from_json(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace qmarkoff
