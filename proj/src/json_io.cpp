#include "perron/json_io.hpp"

#include <limits>

#include "perron/errors.hpp"

namespace perron {

Json digit_to_json(const Natural& d) {
    // mpz_fits_ulong_p is 64-bit on the platforms we build for
    if (sgn(d) >= 0 && d.fits_ulong_p()) return Json(static_cast<std::uint64_t>(d.get_ui()));
    return Json(d.get_str());
}

Natural digit_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Natural(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Natural(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_natural(j.get<std::string>());
    throw std::invalid_argument("digit must be an integer or a decimal string");
}

Json word_to_json(const DigitWord& word) {
    Json out = Json::array();
    for (const auto& d : word) out.push_back(digit_to_json(d));
    return out;
}

DigitWord word_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("digit word must be a JSON array");
    DigitWord out;
    for (const auto& d : j) out.push_back(digit_from_json(d));
    return out;
}

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

Json family_set_to_json(const FamilySet& fs) {
    Json out;
    out["sign"] = std::string(to_string(fs.sign));
    out["prefix"] = word_to_json(fs.prefix);
    out["from"] = digit_to_json(fs.start);
    out["to"] = fs.end ? digit_to_json(*fs.end) : Json("inf");
    return out;
}

FamilySet family_set_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("family set must be a JSON object");
    FamilySet fs;
    fs.sign = parse_sign(j.value("sign", std::string("P")));
    fs.prefix = j.contains("prefix") ? word_from_json(j.at("prefix")) : DigitWord{};
    fs.start = digit_from_json(j.at("from"));
    const Json& to = j.contains("to") ? j.at("to") : Json("inf");
    if (!(to.is_string() && to.get<std::string>() == "inf")) fs.end = digit_from_json(to);
    return fs;
}

std::vector<FamilySet> family_sets_from_json(const Json& j) {
    std::vector<FamilySet> out;
    if (j.is_array()) {
        for (const auto& e : j) out.push_back(family_set_from_json(e));
    } else {
        out.push_back(family_set_from_json(j));
    }
    return out;
}

}  // namespace perron
