#pragma once

// JSON encodings. Cardinals are integers or the string "aleph0".

#include <json.hpp>

#include "maxsg/classify.hpp"
#include "maxsg/fintrans.hpp"
#include "maxsg/genpairs.hpp"
#include "maxsg/mapexpr.hpp"
#include "maxsg/relcalc.hpp"

namespace maxsg {

nlohmann::json to_json(Card c);
nlohmann::json to_json(const CardInterval& iv);
nlohmann::json to_json(Tri t);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Family& family);
/// {family, params, answer, reason}
nlohmann::json to_json(const Family& family, const Verdict& v);
/// {answer, witness?, blocking?}
nlohmann::json to_json(const Decision& d);
nlohmann::json to_json(const FiberReport& f, std::size_t sample);
nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const FinMap& f);

}  // namespace maxsg
