#include "beacon/scalar.hpp"

#include <cctype>
#include <ostream>

#include "beacon/error.hpp"

namespace beacon {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::BallOutsidePolygon: return "BallOutsidePolygon";
    case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorCode::ModelViolation: return "ModelViolation";
    case ErrorCode::NotGridOrthogonal: return "NotGridOrthogonal";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::BeaconOutsideSpace: return "BeaconOutsideSpace";
    case ErrorCode::NotNearOrthogonal: return "NotNearOrthogonal";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::EdgeSetMismatch: return "EdgeSetMismatch";
    case ErrorCode::MissingCorrespondence: return "MissingCorrespondence";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::PathViolatesMode: return "PathViolatesMode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFreeMode: return "NotFreeMode";
    case ErrorCode::CaptureFailed: return "CaptureFailed";
  }
  return "Unknown";
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

long Scalar::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return f.get_si();
}

std::string Scalar::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Scalar::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 ^ (h2 + 0x7F4A7C15ULL + (h1 << 6) + (h1 >> 2)) ^ static_cast<std::size_t>(sign() + 1);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace beacon
