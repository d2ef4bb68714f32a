#pragma once

#include <stdexcept>
#include <string>

namespace duorat {

enum class errc {
    not_coprime,
    range_too_large,
    range_too_small,
    precondition_violated,
    principal_character,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_coprime: return "NotCoprime";
        case errc::range_too_large: return "RangeTooLarge";
        case errc::range_too_small: return "RangeTooSmall";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::principal_character: return "PrincipalCharacter";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace duorat
