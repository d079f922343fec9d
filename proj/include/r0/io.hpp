#pragma once

#include <iosfwd>
#include <string>

#include "r0/constructions.hpp"
#include "r0/fuzzy.hpp"

namespace r0 {

// Algebra file: line-oriented plain text, '#' starts a comment.
//   elements: <name0> ... <name_{n-1}>
//   neg: <name> ... <name>              image of each element, positionally
//   arrow <name_i>: <name> ... <name>   one row per element, any order
//   order <name>: <name> ...            optional; full up-set of the element,
//                                       cross-checked against the derived order
Algebra load_algebra(std::istream& in);
Algebra load_algebra_file(const std::string& path);

// Fuzzy subset file: one "<element-name> = <grade>" line per element, grades
// as decimals or p/q fractions, every carrier element exactly once.
FuzzySubset load_fuzzy(std::istream& in, const Algebra& alg);
FuzzySubset load_fuzzy_file(const std::string& path, const Algebra& alg);
void save_fuzzy_file(const std::string& path, const FuzzySubset& mu);
std::string fuzzy_to_text(const FuzzySubset& mu);

// Brace syntax used on the command line and in reports: "{c, d, 1}".
Subset parse_subset(const Algebra& alg, const std::string& text);

// Chain syntax: "{1} < {c,d,1} < {0,a,b,c,d,1}".
FilterChain parse_chain(const Algebra& alg, const std::string& text);

// Family syntax: "1/4: {0,1}; 1/2: {1}".
IndexedFamily parse_family(const Algebra& alg, const std::string& text, const KParam& k);

}  // namespace r0
