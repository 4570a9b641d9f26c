#pragma once

#include <stdexcept>
#include <string>

#include "player.hpp"
#include "rational.hpp"

namespace ethdinner {

/// Input rejected by a validation rule. Maps to CLI exit status 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two morsels share a utility value for the same player.
class DuplicateUtility : public ValidationError {
public:
    DuplicateUtility(Player player, Rational value)
        : ValidationError(std::string("duplicate utility for player ") + std::string(1, to_char(player)) +
                          ": " + value.to_string()),
          player_(player),
          value_(value) {}

    Player player() const { return player_; }
    const Rational& value() const { return value_; }

private:
    Player player_;
    Rational value_;
};

class EmptyDinner : public ValidationError {
public:
    explicit EmptyDinner(const std::string& what) : ValidationError(what + ": dinner is empty") {}
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class StrategyViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownStrategy : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A transformed dinner would contain tied coordinates.
class DegenerateTransform : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// An exact computation would exceed its configured size guard. Exit status 3.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ethdinner
