#include "superspace/io.hpp"

#include <algorithm>
#include <cctype>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const SpaceParams& params)
      : text_(text), params_(params) {}

  Polynomial parse() {
    Polynomial out(params_);
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(out, negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-')
        throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      negative = peek() == '-';
      ++pos_;
      parse_term(out, negative);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError("index or exponent too large", start);
    return std::stoi(d);
  }

  int exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    return small_int();
  }

  void parse_term(Polynomial& out, bool negative) {
    Rational coeff(negative ? -1 : 1);
    std::vector<int> bos(static_cast<std::size_t>(params_.m()), 0);
    std::vector<int> fermions;  // in written order
    bool vanishes = false;

    while (true) {
      skip_space();
      if (at_end()) throw ParseError("expected a factor", pos_);
      const std::size_t start = pos_;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        skip_space();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_space();
          const std::size_t den_pos = pos_;
          std::string den = digits();
          if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator", den_pos);
          num += "/" + den;
        }
        coeff *= parse_rational(num);
      } else if (c == 'x' || c == 'e') {
        ++pos_;
        const int index = small_int();
        const int power = exponent();
        const Variable v = c == 'x' ? Variable::x(index) : Variable::e(index);
        try {
          v.validate(params_);
        } catch (const PreconditionError& err) {
          throw ParseError(err.what(), start);
        }
        if (c == 'x') {
          bos[static_cast<std::size_t>(index - 1)] += power;
        } else if (power >= 2) {
          vanishes = true;
        } else if (power == 1) {
          fermions.push_back(index);
        }
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }

      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }

    // Normalize the fermion order; a repeated generator kills the term.
    int inversions = 0;
    for (std::size_t i = 0; i < fermions.size(); ++i)
      for (std::size_t j = i + 1; j < fermions.size(); ++j) {
        if (fermions[i] == fermions[j]) vanishes = true;
        if (fermions[i] > fermions[j]) ++inversions;
      }
    if (vanishes) return;
    Monomial::FermionMask mask = 0;
    for (int j : fermions) mask |= Monomial::FermionMask{1} << (j - 1);
    if (inversions % 2 != 0) coeff = -coeff;
    out.add_term(Monomial(std::move(bos), mask), coeff);
  }

  std::string_view text_;
  SpaceParams params_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& mono) {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  for (std::size_t i = 0; i < mono.bos().size(); ++i) {
    const int e = mono.bos()[i];
    if (e == 0) continue;
    std::string factor = "x" + std::to_string(i + 1);
    if (e > 1) factor += "^" + std::to_string(e);
    append(factor);
  }
  for (int j : mono.ferm_indices()) append("e" + std::to_string(j));
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const SpaceParams& params) {
  return PolynomialParser(text, params).parse();
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  // Highest degree first; the map order within each degree.
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.degree() > b.first.degree();
  });
  std::string out;
  for (const auto& [mono, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.is_constant()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += format_monomial(mono);
    }
  }
  return out;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : p.terms()) {
    terms.push_back({{"coeff", to_string(c)}, {"bos", mono.bos()}, {"ferm", mono.ferm_indices()}});
  }
  return {{"m", p.params().m()}, {"n", p.params().n()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const SpaceParams params(j.at("m").get<int>(), j.at("n").get<int>());
    Polynomial out(params);
    for (const auto& t : j.at("terms")) {
      const Rational c = parse_rational(t.at("coeff").get<std::string>());
      auto bos = t.at("bos").get<std::vector<int>>();
      if (bos.size() != static_cast<std::size_t>(params.m()))
        throw ParseError("bos has wrong length", 0);
      const auto ferm = t.at("ferm").get<std::vector<int>>();
      for (int idx : ferm)
        if (idx < 1 || idx > params.fermions()) throw ParseError("fermion index out of range", 0);
      out.add_term(Monomial::from_indices(std::move(bos), ferm), c);
    }
    return out;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid polynomial JSON: ") + err.what(), 0);
  } catch (const PreconditionError& err) {
    throw ParseError(std::string("invalid polynomial JSON: ") + err.what(), 0);
  }
}

nlohmann::json pi_value_to_json(const PiScaledValue& v) {
  return {{"coeff", to_string(v.coeff())}, {"halfPiExp", v.half_pi_exp()}};
}

PiScaledValue pi_value_from_json(const nlohmann::json& j) {
  try {
    return PiScaledValue(parse_rational(j.at("coeff").get<std::string>()),
                         j.at("halfPiExp").get<int>());
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid value JSON: ") + err.what(), 0);
  }
}

}  // namespace superspace
