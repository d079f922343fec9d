#pragma once

#include <string>

#include <json.hpp>

#include "r0/fuzzy.hpp"

namespace r0 {

// Text and JSON renderings share the underlying structures, so both carry
// identical verdicts and witnesses.

std::string check_line(const Algebra& alg, const CheckItem& item);
std::string verdict_line(const Algebra& alg, const std::string& name, const Verdict& v);
std::string row_text(const Algebra& alg, const IntervalRow& row);

nlohmann::json check_json(const Algebra& alg, const CheckItem& item);
nlohmann::json report_json(const Algebra& alg, const CheckReport& rep);
nlohmann::json verdict_json(const Algebra& alg, const std::string& name, const Verdict& v);
nlohmann::json row_json(const Algebra& alg, const IntervalRow& row);

}  // namespace r0
