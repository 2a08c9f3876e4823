#pragma once

#include <stdexcept>
#include <string>

namespace cabba {

// Precondition and configuration failures. Data-path failures (channel
// corruption, bad files) are reported through status enums instead, since
// they are expected events rather than programming errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what) : Error("InvalidConfig: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange: " + what) {}
};

struct MacTooLong : Error {
    explicit MacTooLong(const std::string& what) : Error("MacTooLong: " + what) {}
};

struct InvalidOrder : Error {
    explicit InvalidOrder(const std::string& what) : Error("InvalidOrder: " + what) {}
};

struct LayoutViolation : Error {
    explicit LayoutViolation(const std::string& what) : Error("LayoutViolation: " + what) {}
};

struct SymbolAlignment : Error {
    explicit SymbolAlignment(const std::string& what) : Error("SymbolAlignment: " + what) {}
};

struct AlignmentError : Error {
    explicit AlignmentError(const std::string& what) : Error("AlignmentError: " + what) {}
};

struct NoPreamble : Error {
    explicit NoPreamble(const std::string& what) : Error("NoPreamble: " + what) {}
};

struct ZeroValidRows : Error {
    explicit ZeroValidRows(const std::string& what) : Error("ZeroValidRows: " + what) {}
};

}  // namespace cabba
