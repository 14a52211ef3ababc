#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sfwm
{
// Input violates a documented invariant or precondition.
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed (quadrature budget, decomposition, optimizer).
class ComputationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// File could not be read or written. The message carries the path.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Collects non-fatal diagnostics (e.g. a weak broadband assumption).
// Functions accept a nullable pointer; passing nullptr discards warnings.
class Warnings
{
public:
    void add(std::string message) { messages_.push_back(std::move(message)); }
    const std::vector<std::string> &messages() const { return messages_; }
    bool empty() const { return messages_.empty(); }
    void clear() { messages_.clear(); }

private:
    std::vector<std::string> messages_;
};

inline void warn(Warnings *sink, std::string message)
{
    if (sink != nullptr)
    {
        sink->add(std::move(message));
    }
}
} // namespace sfwm
