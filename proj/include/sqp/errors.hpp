#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t position;  // byte offset into the input text
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct DisconnectedSurface : Error {
  DisconnectedSurface() : Error("canonical surface is disconnected") {}
};

struct NotAnAnnulus : Error {
  explicit NotAnAnnulus(const std::string& why) : Error("not an annulus: " + why) {}
};

struct NotSQP : Error {
  NotSQP() : Error("word is not strongly quasipositive (negative letter present)") {}
};

struct NonZeroFraming : Error {
  int framing;
  explicit NonZeroFraming(int f)
      : Error("annulus has non-zero framing " + std::to_string(f)), framing(f) {}
};

struct IsolatedStrand : Error {
  int strand;
  explicit IsolatedStrand(int s)
      : Error("strand " + std::to_string(s) + " touches no band"), strand(s) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("cannot normalize the zero polynomial") {}
};

struct NotCoprimePermutation : Error {
  NotCoprimePermutation() : Error("Burau determinant is not divisible by 1+t+...+t^(n-1)") {}
};

struct UnknownComponent : Error {
  explicit UnknownComponent(int c) : Error("no closure component " + std::to_string(c)) {}
};

struct UnknownEntry : Error {
  explicit UnknownEntry(const std::string& name) : Error("no catalog entry named " + name) {}
};

struct ValidationFailed : Error {
  explicit ValidationFailed(const std::string& why) : Error("validation failed: " + why) {}
};

struct StoreIOError : Error {
  explicit StoreIOError(const std::string& why) : Error("catalog store: " + why) {}
};

struct NotNegative : Error {
  explicit NotNegative(int pos)
      : Error("letter " + std::to_string(pos) + " is not negative") {}
};

struct InvalidAnnulus : Error {
  explicit InvalidAnnulus(const std::string& why) : Error("invalid companion annulus: " + why) {}
};

struct ArityMismatch : Error {
  ArityMismatch(std::size_t given, std::size_t needed)
      : Error("got " + std::to_string(given) + " companion annuli for " +
              std::to_string(needed) + " negative letters") {}
};

struct CertificateMismatch : Error {
  explicit CertificateMismatch(const std::string& why) : Error("certificate mismatch: " + why) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& why) : Error(why) {}
};

}  // namespace sqp
