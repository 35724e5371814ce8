#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sftkit/geometry.hpp"

namespace sftkit::tm {

enum class Move { left, right };

struct Transition {
    std::string next_state;
    std::string write;
    Move move = Move::right;
};

// Deterministic single-tape machine, two-way infinite tape. A missing
// (state, symbol) entry acts as an immediate halt in place.
class TuringMachine {
public:
    TuringMachine(std::vector<std::string> states, std::vector<std::string> tape_symbols,
                  std::string blank, std::string initial, std::set<std::string> halting,
                  std::map<std::pair<std::string, std::string>, Transition> delta);

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& tape_symbols() const { return tape_symbols_; }
    const std::string& blank() const { return blank_; }
    const std::string& initial() const { return initial_; }
    const std::set<std::string>& halting() const { return halting_; }
    const std::map<std::pair<std::string, std::string>, Transition>& delta() const { return delta_; }

    bool is_halting(const std::string& state) const { return halting_.count(state) != 0; }
    const Transition* transition(const std::string& state, const std::string& symbol) const;

private:
    std::vector<std::string> states_;
    std::vector<std::string> tape_symbols_;
    std::string blank_;
    std::string initial_;
    std::set<std::string> halting_;
    std::map<std::pair<std::string, std::string>, Transition> delta_;
};

struct RunResult {
    bool halted = false;
    int steps = 0;                       // transitions executed before halting
    std::map<int, std::string> tape;     // non-blank cells at the end
    std::string state;
    int head = 0;
};

// Run M from `input` written at cells 0.., head at 0, for at most
// `step_budget` transitions. halted=false means still running.
RunResult run(const TuringMachine& M, const std::vector<std::string>& input, int step_budget);

}  // namespace sftkit::tm
