#include "ihtw/perversity.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace ihtw {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("not an integer: `" + std::string(s) + "`");
  return v;
}

}  // namespace

Perversity::Perversity(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("perversity needs at least one value");
}

Perversity Perversity::zero(int n) { return Perversity(std::vector<int>(n + 1, 0)); }

Perversity Perversity::top(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = std::max(0, i - 2);
  return Perversity(std::move(v));
}

Perversity Perversity::clip(int k, int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = std::max(0, std::min(k, i - 2));
  return Perversity(std::move(v));
}

Perversity Perversity::parse(std::string_view expr, int n) {
  if (n < 0) throw InputError("dimension must be non-negative");
  if (expr == "zero") return zero(n);
  if (expr == "top") return top(n);
  if (expr.starts_with("clip:")) return clip(parse_int(expr.substr(5)), n);
  if (expr.starts_with("list:")) {
    std::vector<int> values;
    std::string_view rest = expr.substr(5);
    for (;;) {
      auto comma = rest.find(',');
      values.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (static_cast<int>(values.size()) != n + 1)
      throw InputError("perversity list needs " + std::to_string(n + 1) + " values");
    return Perversity(std::move(values));
  }
  throw InputError("unknown perversity `" + std::string(expr) + "`");
}

bool Perversity::is_gm() const {
  for (int i = 0; i <= std::min(2, n()); ++i)
    if (values_[i] != 0) return false;
  for (int i = 2; i < n(); ++i)
    if (values_[i + 1] < values_[i] || values_[i + 1] > values_[i] + 1) return false;
  return true;
}

Perversity Perversity::dual() const {
  if (!is_gm()) throw std::domain_error("dual of a non-GM perversity " + to_string());
  Perversity t = top(n());
  std::vector<int> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.values_[i] - values_[i];
  return Perversity(std::move(v));
}

std::string Perversity::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
  return out + ")";
}

std::string Perversity::spec() const {
  std::string s = to_string();
  return "list:" + s.substr(1, s.size() - 2);
}

Perversity sum(const Perversity& p, const Perversity& q) {
  if (p.n() != q.n()) throw std::invalid_argument("perversities of different lengths");
  std::vector<int> v(p.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.values()[i] + q.values()[i];
  return Perversity(std::move(v));
}

bool leq(const Perversity& p, const Perversity& q) {
  if (p.n() != q.n()) throw std::invalid_argument("perversities of different lengths");
  for (std::size_t i = 0; i < p.values().size(); ++i)
    if (p.values()[i] > q.values()[i]) return false;
  return true;
}

std::vector<Perversity> gm_perversities(int n) {
  std::vector<Perversity> out;
  std::vector<int> v(n + 1, 0);
  std::function<void(int)> extend = [&](int i) {
    if (i > n) {
      out.emplace_back(v);
      return;
    }
    if (i <= 2) {
      v[i] = 0;
      extend(i + 1);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      v[i] = v[i - 1] + step;
      extend(i + 1);
    }
  };
  extend(0);
  return out;
}

}  // namespace ihtw
