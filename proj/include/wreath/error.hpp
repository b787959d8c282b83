#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

// Invalid user input: malformed multiplication tables, schema violations,
// out-of-range arguments. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested construction exceeds a configured resource cap.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wreath
