#include "ellimod/rational.hpp"

#include <charconv>

#include "ellimod/error.hpp"

namespace ellimod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRootSystem: return "invalid_root_system";
    case ErrorCode::NotSimplyLaced: return "not_simply_laced";
    case ErrorCode::RootNotInSystem: return "root_not_in_system";
    case ErrorCode::MismatchedSystem: return "mismatched_system";
    case ErrorCode::SubsetNotClosed: return "subset_not_closed";
    case ErrorCode::WrongSystemType: return "wrong_system_type";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::DeterminantNotTrivial: return "determinant_not_trivial";
    case ErrorCode::OddBlockAtTwoTorsion: return "odd_block_at_two_torsion";
    case ErrorCode::RepeatedTwist: return "repeated_twist";
    case ErrorCode::UnpairedSummand: return "unpaired_summand";
    case ErrorCode::MissingCompanionLine: return "missing_companion_line";
    case ErrorCode::MissingOddBlock: return "missing_odd_block";
    case ErrorCode::NonLiftable: return "non_liftable";
    case ErrorCode::ParityViolation: return "parity_violation";
    case ErrorCode::OutsideShape: return "outside_shape";
    case ErrorCode::DegreeZeroCohomology: return "degree_zero_cohomology";
    case ErrorCode::InvalidParameter: return "invalid_parameter";
    case ErrorCode::ExcludedType: return "excluded_type";
    case ErrorCode::OrbitBoundExceeded: return "orbit_bound_exceeded";
  }
  return "unknown";
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::MalformedInput,
                "not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0)
    throw Error(ErrorCode::MalformedInput,
                "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational frac_part(const Rational& q) {
  std::int64_t n = q.numerator();
  std::int64_t d = q.denominator();
  std::int64_t r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

}  // namespace ellimod
