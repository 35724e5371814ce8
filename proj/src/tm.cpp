#include "sftkit/tm.hpp"

#include <algorithm>

namespace sftkit::tm {

TuringMachine::TuringMachine(std::vector<std::string> states, std::vector<std::string> tape_symbols,
                             std::string blank, std::string initial, std::set<std::string> halting,
                             std::map<std::pair<std::string, std::string>, Transition> delta)
    : states_(std::move(states)),
      tape_symbols_(std::move(tape_symbols)),
      blank_(std::move(blank)),
      initial_(std::move(initial)),
      halting_(std::move(halting)),
      delta_(std::move(delta)) {
    auto has_state = [&](const std::string& q) {
        return std::find(states_.begin(), states_.end(), q) != states_.end();
    };
    auto has_symbol = [&](const std::string& a) {
        return std::find(tape_symbols_.begin(), tape_symbols_.end(), a) != tape_symbols_.end();
    };
    if (states_.empty()) throw InputError("machine needs at least one state");
    if (!has_symbol(blank_)) throw InputError("blank symbol not in tape alphabet");
    if (!has_state(initial_)) throw InputError("initial state unknown");
    for (const auto& q : halting_)
        if (!has_state(q)) throw InputError("halting state unknown: " + q);
    for (const auto& [key, t] : delta_) {
        if (!has_state(key.first) || !has_symbol(key.second))
            throw InputError("transition from unknown state/symbol");
        if (!has_state(t.next_state) || !has_symbol(t.write))
            throw InputError("transition to unknown state/symbol");
        if (halting_.count(key.first))
            throw InputError("halting state has an outgoing transition: " + key.first);
    }
}

const Transition* TuringMachine::transition(const std::string& state, const std::string& symbol) const {
    auto it = delta_.find({state, symbol});
    return it == delta_.end() ? nullptr : &it->second;
}

RunResult run(const TuringMachine& M, const std::vector<std::string>& input, int step_budget) {
    if (step_budget < 0) throw InputError("step budget must be >= 0");
    std::map<int, std::string> tape;
    for (size_t i = 0; i < input.size(); ++i) {
        bool known = std::find(M.tape_symbols().begin(), M.tape_symbols().end(), input[i]) !=
                     M.tape_symbols().end();
        if (!known) throw InputError("input symbol not in tape alphabet: " + input[i]);
        if (input[i] != M.blank()) tape[static_cast<int>(i)] = input[i];
    }

    RunResult r;
    r.state = M.initial();
    for (int step = 0; step <= step_budget; ++step) {
        auto read = [&](int pos) {
            auto it = tape.find(pos);
            return it == tape.end() ? M.blank() : it->second;
        };
        std::string sym = read(r.head);
        const Transition* t = M.is_halting(r.state) ? nullptr : M.transition(r.state, sym);
        if (!t) {
            r.halted = true;
            r.steps = step;
            r.tape = tape;
            return r;
        }
        if (step == step_budget) break;  // next transition would exceed the budget
        if (t->write == M.blank())
            tape.erase(r.head);
        else
            tape[r.head] = t->write;
        r.state = t->next_state;
        r.head += t->move == Move::right ? 1 : -1;
    }
    r.halted = false;
    r.steps = step_budget;
    r.tape = tape;
    return r;
}

}  // namespace sftkit::tm
