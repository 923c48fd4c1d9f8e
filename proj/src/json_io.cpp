#include "desalg/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace desalg {

namespace {

std::string composition_key(const Composition& c) {
  std::string s = to_string(c);
  return s.substr(1, s.size() - 2);  // strip the parentheses
}

Word parse_word(const std::string& s) {
  if (s.empty() || s == "()") return Word();
  std::istringstream in(s);
  std::vector<int> letters;
  int x;
  while (in >> x) letters.push_back(x);
  if (!in.eof()) throw std::invalid_argument("bad word: " + s);
  return Word(std::move(letters));
}

std::string integer_field(const nlohmann::json& j, const char* key,
                          const char* fallback) {
  if (!j.contains(key)) {
    if (fallback) return fallback;
    throw std::invalid_argument(std::string("missing field: ") + key);
  }
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string(key) + " must be an integer or a decimal string");
}

std::string string_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("missing string field: ") + key);
  }
  return j.at(key).get<std::string>();
}

}  // namespace

nlohmann::json rational_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  return make_rational(integer_field(j, "num", nullptr), integer_field(j, "den", "1"));
}

nlohmann::json group_element_to_json(const GroupAlgebraElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    nlohmann::json term = rational_to_json(c);
    term["perm"] = to_string(w);
    out.push_back(std::move(term));
  }
  return out;
}

GroupAlgebraElement group_element_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON list");
  GroupAlgebraElement a(n);
  for (const auto& term : j) {
    Permutation w = parse_permutation(string_field(term, "perm"));
    if (w.size() != n) {
      throw std::invalid_argument("permutation " + to_string(w) + " is not of size " +
                                  std::to_string(n));
    }
    a.add_term(w, rational_from_json(term));
  }
  return a;
}

nlohmann::json free_element_to_json(const FreeAlgebraElement& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    nlohmann::json term = rational_to_json(c);
    term["word"] = to_string(w);
    out.push_back(std::move(term));
  }
  return out;
}

FreeAlgebraElement free_element_from_json(const nlohmann::json& j, int alphabet) {
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON list");
  FreeAlgebraElement e(alphabet);
  for (const auto& term : j) {
    e.add_term(parse_word(string_field(term, "word")), rational_from_json(term));
  }
  return e;
}

nlohmann::json sigma_to_json(const SigmaElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [alpha, c] : a.coeffs) {
    nlohmann::json term = rational_to_json(c);
    term["alpha"] = composition_key(alpha);
    out.push_back(std::move(term));
  }
  return out;
}

SigmaElement sigma_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON list");
  SigmaElement a;
  a.n = n;
  for (const auto& term : j) {
    Composition alpha = parse_composition(string_field(term, "alpha"));
    if (alpha.weight() != n) {
      throw std::invalid_argument("composition " + to_string(alpha) +
                                  " is not of weight " + std::to_string(n));
    }
    Rational c = a.coeffs[alpha] + rational_from_json(term);
    if (c == 0) {
      a.coeffs.erase(alpha);
    } else {
      a.coeffs[alpha] = c;
    }
  }
  return a;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return {{"suite", r.suite}, {"n", r.n}, {"pass", r.all_pass()}, {"cases", std::move(cases)}};
}

}  // namespace desalg
