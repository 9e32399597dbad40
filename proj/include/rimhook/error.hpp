#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rimhook {

// Invalid input from the caller (bad shape, bad filling, out-of-range cell,
// oracle bound exceeded). The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

} // namespace rimhook
