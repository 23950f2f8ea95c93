#pragma once

#include <stdexcept>
#include <string>

namespace oudisp {

// Numerical failures carry a stable name; front ends report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define OUDISP_DEFINE_ERROR(NAME)                                      \
  class NAME : public Error {                                          \
   public:                                                             \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}     \
  };

OUDISP_DEFINE_ERROR(NonFinite)
OUDISP_DEFINE_ERROR(Overflow)
OUDISP_DEFINE_ERROR(NonPSDInput)
OUDISP_DEFINE_ERROR(NoInvariantMeasure)
OUDISP_DEFINE_ERROR(NotHypoelliptic)
OUDISP_DEFINE_ERROR(GridTooCoarse)
OUDISP_DEFINE_ERROR(GaugeMismatch)
OUDISP_DEFINE_ERROR(GridAliasing)
OUDISP_DEFINE_ERROR(SingularTime)
OUDISP_DEFINE_ERROR(OutOfRange)
OUDISP_DEFINE_ERROR(SingularA)

#undef OUDISP_DEFINE_ERROR

// Config/validation failures; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace oudisp
