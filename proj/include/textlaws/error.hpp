#pragma once

#include <stdexcept>
#include <string>

namespace textlaws {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace textlaws
