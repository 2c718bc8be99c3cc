#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chowlab {

using BigInt = boost::multiprecision::cpp_int;

/// A finite integer sequence (a_0, ..., a_d), stored exactly.
using IntSequence = std::vector<BigInt>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration guard would be exceeded.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// Returns `fallback`, or the value of CHOWLAB_SIZE_CAP when it is set.
inline std::uint64_t size_cap(std::uint64_t fallback) {
    if (const char* env = std::getenv("CHOWLAB_SIZE_CAP"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error("CHOWLAB_SIZE_CAP is not an unsigned integer: " + std::string(env));
        }
    }
    return fallback;
}

inline IntSequence to_sequence(const std::vector<long long>& values) {
    return IntSequence(values.begin(), values.end());
}

inline std::string join_csv(const IntSequence& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ',';
        out += values[i].str();
    }
    return out;
}

/// Parses "1,4,1" (whitespace tolerant). Throws on malformed input.
inline IntSequence parse_csv_sequence(std::string_view text) {
    IntSequence out;
    std::string token;
    auto flush = [&] {
        std::string trimmed;
        for (char c : token)
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') trimmed += c;
        if (trimmed.empty()) throw Error("empty entry in sequence");
        for (std::size_t i = 0; i < trimmed.size(); ++i) {
            bool digit = trimmed[i] >= '0' && trimmed[i] <= '9';
            if (!digit && !(i == 0 && trimmed[i] == '-' && trimmed.size() > 1))
                throw Error("not an integer: " + trimmed);
        }
        out.emplace_back(trimmed);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else token += c;
    }
    flush();
    return out;
}

}  // namespace chowlab
