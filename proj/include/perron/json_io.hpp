#pragma once

#include <json.hpp>
#include <vector>

#include "perron/coverings.hpp"
#include "perron/digit_rule.hpp"
#include "perron/rational.hpp"

namespace perron {

using Json = nlohmann::ordered_json;

/// Digits fitting in 64 bits are emitted as numbers, larger ones as decimal
/// strings. Both forms are accepted on input.
Json digit_to_json(const Natural& d);
Natural digit_from_json(const Json& j);

Json word_to_json(const DigitWord& word);
DigitWord word_from_json(const Json& j);

/// Rationals always travel as "num/den" strings.
Json rational_to_json(const Rational& q);

/// {"sign":"P"|"P-","prefix":[...],"from":n,"to":m|"inf"}
Json family_set_to_json(const FamilySet& fs);
FamilySet family_set_from_json(const Json& j);

/// Accepts either a JSON array of sets or a single set object.
std::vector<FamilySet> family_sets_from_json(const Json& j);

}  // namespace perron
