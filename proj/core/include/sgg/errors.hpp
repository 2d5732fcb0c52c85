#pragma once
#include <stdexcept>
#include <string>

namespace sgg {

// Requested instance exceeds the configured size ceiling (use closed forms
// or a lower level instead).
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Search budget (weight / visited states) exhausted before a verdict.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Pebbling move violating the move rule (fewer than two pebbles on the
// source, or source and destination not adjacent).
class illegal_move_error : public std::runtime_error {
public:
    explicit illegal_move_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sgg
