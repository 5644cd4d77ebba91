#pragma once

#include <stdexcept>
#include <string>

namespace icx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ICX_DEFINE_ERROR(Name)                 \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

ICX_DEFINE_ERROR(DivisionByZero);
ICX_DEFINE_ERROR(FieldMismatch);
ICX_DEFINE_ERROR(InvalidField);
ICX_DEFINE_ERROR(DimensionMismatch);
ICX_DEFINE_ERROR(FieldTooSmall);
ICX_DEFINE_ERROR(OddDimension);
ICX_DEFINE_ERROR(InvalidInstance);
ICX_DEFINE_ERROR(CannotNormalize);
ICX_DEFINE_ERROR(NotNormalized);
ICX_DEFINE_ERROR(BadParams);
ICX_DEFINE_ERROR(SchemeMalformed);
ICX_DEFINE_ERROR(SchemeInvalid);
ICX_DEFINE_ERROR(NoDecoderExists);
ICX_DEFINE_ERROR(BudgetExceeded);
ICX_DEFINE_ERROR(UnsupportedFamily);
ICX_DEFINE_ERROR(UnsupportedL);
ICX_DEFINE_ERROR(NotMultipleUnicast);
ICX_DEFINE_ERROR(Infeasible);
ICX_DEFINE_ERROR(NotFound);

#undef ICX_DEFINE_ERROR

/// Malformed instance or scheme file. `where` names the line or field.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace icx
