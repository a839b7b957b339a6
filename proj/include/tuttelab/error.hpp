#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tuttelab {

// Domain error carrying a machine-readable kind alongside the human detail.
// The CLI maps these 1:1 onto {"error":{"kind":...,"detail":...}} with exit 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          detail_(std::move(detail)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
    throw Error(kind, detail);
}

}  // namespace tuttelab
