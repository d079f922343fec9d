#include "r0/rational.hpp"

#include <cctype>

namespace r0 {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<long long> to_ll(std::string_view s) {
  if (!all_digits(s) || s.size() > 18) return std::nullopt;
  long long v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rat out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = to_ll(text.substr(0, slash));
    auto d = to_ll(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    out = Rat(*n, *d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    if (frac.size() > 15) return std::nullopt;
    long long w = whole.empty() ? 0 : *to_ll(whole);
    long long scale = 1;
    long long f = 0;
    for (char c : frac) { f = f * 10 + (c - '0'); scale *= 10; }
    out = Rat(w * scale + f, scale);
  } else {
    auto n = to_ll(text);
    if (!n) return std::nullopt;
    out = Rat(*n);
  }
  if (neg) out = Rat(0) - out;
  return out;
}

}  // namespace r0
