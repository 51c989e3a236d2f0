#include "fockent/parser.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>

namespace fockent {

namespace {

constexpr int max_power = 1024;
constexpr int max_modes = 4096;
constexpr long long max_terms = 1'000'000;
constexpr int max_nesting = 256;

class Parser {
 public:
  Parser(std::string_view text, Statistics stats)
      : text_(text), stats_(stats) {}

  ParsedState parse() {
    skip_whitespace();
    if (at_end()) throw error("expected state expression");
    // A bare "0" is the zero state.
    if (peek() == '0') {
      std::size_t lookahead = pos_ + 1;
      while (lookahead < text_.size() && is_space(text_[lookahead])) ++lookahead;
      if (lookahead == text_.size()) {
        return {FockState::zero(stats_, 0), ModePartition{0, 0}};
      }
    }
    ParsedState result = parse_sum();
    skip_whitespace();
    if (!at_end()) throw error("unexpected trailing input");
    return result;
  }

 private:
  ParsedState parse_sum() {
    skip_whitespace();
    double sign = 1.0;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (take() == '-') sign = -1.0;
    }
    ParsedState accumulated = parse_product();
    if (sign < 0) {
      accumulated.state = accumulated.state.scaled(sign);
    }
    while (true) {
      skip_whitespace();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      double term_sign = take() == '-' ? -1.0 : 1.0;
      skip_whitespace();
      std::size_t rhs_offset = pos_;
      ParsedState rhs = parse_product();
      if (rhs.partition != accumulated.partition) {
        throw Error(errc::arity_mismatch,
                    "summand mode counts differ at offset " +
                        std::to_string(rhs_offset),
                    rhs_offset);
      }
      if (!accumulated.state.is_zero() && !rhs.state.is_zero() &&
          accumulated.state.particle_number() != rhs.state.particle_number()) {
        throw Error(errc::mixed_particle_number,
                    "summands carry different particle totals at offset " +
                        std::to_string(rhs_offset),
                    rhs_offset);
      }
      accumulated.state = add(accumulated.state, rhs.state.scaled(term_sign));
    }
    return accumulated;
  }

  ParsedState parse_product() {
    skip_whitespace();
    bool has_coefficient = false;
    double coefficient = 1.0;
    if (!at_end() && (is_digit(peek()) || peek() == '.')) {
      coefficient = parse_number();
      has_coefficient = true;
      skip_whitespace();
      if (!at_end() && peek() == '*') {
        ++pos_;
        coefficient *= parse_sqrt();
      }
    } else if (lookahead_is("sqrt(")) {
      coefficient = parse_sqrt();
      has_coefficient = true;
    }

    skip_whitespace();
    if (at_end() || (peek() != '|' && peek() != '(')) {
      throw error("expected ket or group");
    }
    ParsedState accumulated = parse_powered_factor();
    while (true) {
      skip_whitespace();
      if (at_end() || (peek() != '|' && peek() != '(')) break;
      ParsedState next = parse_powered_factor();
      accumulated = compose_checked(accumulated, next);
    }
    if (has_coefficient) {
      accumulated.state = accumulated.state.scaled(coefficient);
    }
    return accumulated;
  }

  // factor with an optional tensor power bound to it
  ParsedState parse_powered_factor() {
    ParsedState base = parse_factor();
    skip_whitespace();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip_whitespace();
    std::size_t power_offset = pos_;
    long long power = parse_integer();
    if (power < 1) {
      throw Error(errc::syntax_error,
                  "power must be positive at offset " +
                      std::to_string(power_offset),
                  power_offset);
    }
    if (power > max_power) {
      throw Error(errc::too_large,
                  "power exceeds limit at offset " + std::to_string(power_offset),
                  power_offset);
    }
    ParsedState result = base;
    for (long long i = 1; i < power; ++i) {
      result = compose_checked(result, base);
    }
    return result;
  }

  ParsedState parse_factor() {
    skip_whitespace();
    if (at_end()) throw error("expected ket or group");
    if (peek() == '(') {
      if (++nesting_ > max_nesting) throw error("nesting too deep");
      ++pos_;
      ParsedState inner = parse_sum();
      skip_whitespace();
      if (at_end() || peek() != ')') throw error("expected ')'");
      ++pos_;
      --nesting_;
      return inner;
    }
    return parse_ket();
  }

  ParsedState parse_ket() {
    if (peek() != '|') throw error("expected '|'");
    ++pos_;
    Occupation alice = parse_digits();
    if (at_end() || peek() != ',') throw error("expected ','");
    ++pos_;
    Occupation bob = parse_digits();
    if (at_end() || peek() != '>') throw error("expected '>'");
    ++pos_;
    Occupation occ = alice;
    occ.insert(occ.end(), bob.begin(), bob.end());
    ModePartition partition{static_cast<int>(alice.size()),
                            static_cast<int>(bob.size())};
    return {FockState(stats_, partition.total(), {{occ, 1.0}}), partition};
  }

  Occupation parse_digits() {
    if (at_end() || !is_digit(peek())) throw error("expected digit");
    Occupation occ;
    while (!at_end() && is_digit(peek())) {
      int value = take() - '0';
      if (stats_ == Statistics::fermion && value > 1) {
        throw Error(errc::fermion_occupancy_violation,
                    "fermion occupation exceeds 1 at offset " +
                        std::to_string(pos_ - 1),
                    pos_ - 1);
      }
      occ.push_back(static_cast<std::uint8_t>(value));
      if (static_cast<int>(occ.size()) > max_modes) {
        throw Error(errc::too_large, "too many modes in ket", pos_);
      }
    }
    return occ;
  }

  double parse_sqrt() {
    skip_whitespace();
    if (!lookahead_is("sqrt(")) throw error("expected sqrt(");
    pos_ += 5;
    double argument = parse_number();
    skip_whitespace();
    if (at_end() || peek() != ')') throw error("expected ')'");
    ++pos_;
    return std::sqrt(argument);
  }

  double parse_number() {
    skip_whitespace();
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      pos_ = start;
      throw error("expected number");
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t exponent_start = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      if (at_end() || !is_digit(peek())) {
        pos_ = exponent_start;  // "e" belongs to something else; stop here
      } else {
        while (!at_end() && is_digit(peek())) ++pos_;
      }
    }
    double value = 0.0;
    auto result =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (result.ec != std::errc{} || !std::isfinite(value)) {
      throw Error(errc::syntax_error,
                  "unreadable number at offset " + std::to_string(start), start);
    }
    return value;
  }

  long long parse_integer() {
    skip_whitespace();
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw error("expected integer");
    long long value = 0;
    auto result =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (result.ec != std::errc{}) {
      throw Error(errc::syntax_error,
                  "integer out of range at offset " + std::to_string(start),
                  start);
    }
    return value;
  }

  ParsedState compose_checked(const ParsedState& lhs, const ParsedState& rhs) {
    if (static_cast<long long>(lhs.state.terms().size()) *
            static_cast<long long>(std::max<std::size_t>(
                rhs.state.terms().size(), 1)) > max_terms) {
      throw Error(errc::too_large, "composed state exceeds the term budget",
                  pos_);
    }
    if (lhs.partition.total() + rhs.partition.total() > max_modes) {
      throw Error(errc::too_large, "composed state exceeds the mode budget",
                  pos_);
    }
    auto [state, partition] =
        compose(lhs.state, rhs.state, lhs.partition, rhs.partition);
    return {std::move(state), partition};
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void skip_whitespace() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  bool lookahead_is(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  Error error(const std::string& what) const {
    return Error(errc::syntax_error,
                 what + " at offset " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  Statistics stats_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
};

std::string shortest_decimal(double value) {
  char buffer[32];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

// Renders one amplitude with its joining sign; "first" suppresses a
// leading '+'.
std::string amplitude_prefix(Amplitude amp, bool first) {
  const double magnitude = std::abs(amp);
  if (std::abs(amp.imag()) <= 1e-12 * std::max(1.0, magnitude)) {
    double real = amp.real();
    std::string sign = real < 0 ? "-" : (first ? "" : "+");
    std::string digits = shortest_decimal(std::abs(real));
    return digits == "1" ? sign : sign + digits;
  }
  std::string out = first ? "(" : "+(";
  out += shortest_decimal(amp.real());
  out += amp.imag() < 0 ? "-" : "+";
  out += shortest_decimal(std::abs(amp.imag()));
  out += "i)";
  return out;
}

}  // namespace

ParsedState parse_state(std::string_view text, Statistics stats) {
  return Parser(text, stats).parse();
}

std::string format_state(const FockState& s, const ModePartition& p) {
  if (s.is_zero()) return "0";
  if (p.alice_modes < 0 || p.bob_modes < 0 || p.total() != s.mode_count()) {
    throw Error(errc::shape_mismatch,
                "partition does not match state mode count");
  }
  std::string out;
  bool first = true;
  for (const auto& [occ, amp] : s.terms()) {
    out += amplitude_prefix(amp, first);
    out += '|';
    for (int j = 0; j < p.alice_modes; ++j) out += char('0' + occ[j]);
    out += ',';
    for (int j = p.alice_modes; j < p.total(); ++j) out += char('0' + occ[j]);
    out += '>';
    first = false;
  }
  return out;
}

}  // namespace fockent
