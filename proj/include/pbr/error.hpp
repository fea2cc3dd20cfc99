#pragma once

#include <stdexcept>
#include <string>

namespace pbr {

// Error categories map onto CLI exit codes (see tools/pbr.cpp).
enum class ErrorCode {
    Parse,             // malformed input text
    Precondition,      // operation called outside its domain
    PrecisionExhausted,
    ContextMismatch,
    DivisionByZero,
    Unsupported,       // valid request the residue field cannot answer
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::Parse, what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

} // namespace pbr
