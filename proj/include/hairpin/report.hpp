#pragma once

#include <json.hpp>

#include "hairpin/crosscheck.hpp"
#include "hairpin/growth.hpp"
#include "hairpin/series.hpp"

namespace hairpin {

using Json = nlohmann::ordered_json;

Json verdict_json(const RegularityVerdict& v, const InvolutiveAlphabet& sigma);
Json growth_class_json(const GrowthClass& g);
Json growth_json(const GrowthReport& r);
// Coefficients ascending; numbers when they fit a signed 64-bit integer, decimal strings otherwise.
Json series_json(const RationalSeries& s);
Json counts_json(const std::vector<mpz_class>& counts);
Json crosscheck_json(const CrossCheckReport& r);

}  // namespace hairpin
